//! Normal forms in Leavitt path algebras, computed two ways: by multiplying normal forms,
//! and by reducing raw words under different rewrite strategies.

use leavitt_kmod::algebra::{enumerate_basis, Rational, Strategy, DEFAULT_BASIS_LIMIT};
use leavitt_kmod::{LeavittPathAlgebra, Quiver};

fn main() {
    let l1 = LeavittPathAlgebra::new(Quiver::rose(2));
    let toeplitz = LeavittPathAlgebra::new(Quiver::toeplitz());
    let cases = [
        (&l1, "x* x"),
        (&l1, "y* x"),
        (&l1, "x x*"),
        (&l1, "x x x* x*"),
        (&l1, "(x + 2 y)(x* - 1/2 y*) + x + y*"),
        (&toeplitz, "(a* + b*).(a + b)"),
        (&toeplitz, "(a + b)(a* + b*)"),
        (&toeplitz, "e(1) e(2)"),
    ];
    for (alg, text) in cases {
        let nf = alg.eval::<Rational>(text).unwrap();
        let agree = [
            Strategy::Leftmost,
            Strategy::Rightmost,
            Strategy::Random(42),
        ]
        .into_iter()
        .all(|s| alg.eval_by_rewriting::<Rational>(text, s).unwrap() == nf);
        println!("{text:<34} = {nf}   [rewrite orders agree: {agree}]");
        for (d, part) in nf.grading_components() {
            if nf.homogeneous_degree().is_none() {
                println!("{:<34}   degree {d}: {part}", "");
            }
        }
    }

    let q = Quiver::rose(2);
    let basis = enumerate_basis(&q, 1, DEFAULT_BASIS_LIMIT).unwrap();
    let shown: Vec<String> = basis.iter().map(|m| m.render(&q)).collect();
    println!("basis of L_1 up to length 1: {}", shown.join(", "));
}
