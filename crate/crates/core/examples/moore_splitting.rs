//! `K_*(L_n; Z/m)` splits as the sum over the prime power factors `l^v` of `n` of
//! `K_*(L_{l^v}; Z/m)`.

use leavitt_kmod::ktheory::{moore_splitting_check, DegreeWindow};
use leavitt_kmod::Modulus;

fn main() {
    let window = DegreeWindow::new(0, 1).unwrap();
    for (n, m) in [(6, 4), (12, 8), (15, 9), (30, 16), (8, 8)] {
        let s = moore_splitting_check(n, &Modulus::new(m).unwrap(), window).unwrap();
        let factors: Vec<String> = s.factors.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        println!(
            "n = {n:>2} = {:<12} Z/{m:<2}  K_0: {} vs {}  K_1: {} vs {}  {}",
            factors.join("*"),
            s.whole.group(0).unwrap(),
            s.split.group(0).unwrap(),
            s.whole.group(1).unwrap(),
            s.split.group(1).unwrap(),
            if s.equal { "EQUAL" } else { "UNEQUAL" }
        );
    }
}
