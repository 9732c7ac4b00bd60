//! The corner skew Laurent structure `t₊, t₋, e, φ` of Leavitt path algebras, checked on
//! random degree-zero elements.

use leavitt_kmod::algebra::{CornerData, Rational};
use leavitt_kmod::{LeavittPathAlgebra, Quiver};

fn main() {
    let quivers = [
        ("L_0", Quiver::rose(1)),
        ("L_1", Quiver::rose(2)),
        ("L_2", Quiver::rose(3)),
        ("Toeplitz", Quiver::toeplitz()),
        ("J_1", Quiver::jacobson(1)),
    ];
    for (name, q) in quivers {
        let alg = LeavittPathAlgebra::new(q);
        let c = CornerData::<Rational>::new(&alg).unwrap();
        let report = c.verify_axioms(25, 7);
        println!("{name}: t+ = {}, e = {}", c.t_plus, c.e);
        println!(
            "  {} checks on {} samples: {}",
            report.checks,
            report.samples,
            if report.passed() {
                "all pass"
            } else {
                "FAILURES"
            }
        );
        for f in &report.failures {
            println!("  {f}");
        }
    }
}
