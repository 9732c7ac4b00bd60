//! Rebuilds `K_*(L_Q; Z/m)` from the long exact sequence of the corner skew Laurent
//! structure, with `K_*(k; Z/m)` as coefficients, and compares with the direct table.

use leavitt_kmod::ktheory::{corner_les, mod_l_ktheory, CoefficientTheory, DegreeWindow};
use leavitt_kmod::{Modulus, Quiver};

fn main() {
    let window = DegreeWindow::default();
    for (name, q) in [
        ("rose, 3 petals", Quiver::rose(3)),
        ("J_1", Quiver::jacobson(1)),
        ("Toeplitz", Quiver::toeplitz()),
    ] {
        let q = q.order_sinks_first();
        for m in [4, 9] {
            let modulus = Modulus::new(m).unwrap();
            let theory = CoefficientTheory::suslin_for_quiver(&q, &modulus, window).unwrap();
            let les = corner_les(&theory, window).unwrap();
            let table = mod_l_ktheory(&q, &modulus, window).unwrap();
            println!("{name}, Z/{m}:");
            for e in &les {
                let resolved = e
                    .resolved
                    .as_ref()
                    .map_or("unresolved".to_string(), ToString::to_string);
                let direct = table.group(e.degree).unwrap();
                let mark = if e.resolved.as_ref() == Some(direct) {
                    "ok"
                } else {
                    "DIFFERS"
                };
                println!(
                    "  n={:>2}: 0 -> {} -> E_n -> {} -> 0, E_n = {resolved} [{mark}]",
                    e.degree, e.sub, e.quotient
                );
            }
        }
    }
}
