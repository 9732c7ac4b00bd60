//! For a rose with `n + 1` petals the K-groups are uniquely `l^v`-divisible exactly when
//! `l` does not divide `n`. Prints the verdict grid for small `n` and primes.

use leavitt_kmod::ktheory::{divisibility_report, Conclusion};
use leavitt_kmod::Quiver;

fn main() {
    let primes: Vec<(u64, u32)> = [2, 3, 5, 7].into_iter().map(|p| (p, 1)).collect();
    println!("petals | det | 2 3 5 7   (D = uniquely divisible, . = nonvanishing)");
    for petals in 2..=13 {
        let q = Quiver::rose(petals).order_sinks_first();
        let report = divisibility_report(&q, &primes).unwrap();
        let det = report
            .determinant
            .as_ref()
            .map(|d| d.value.to_string())
            .unwrap_or_default();
        let marks: Vec<&str> = report
            .primes
            .iter()
            .map(|r| {
                if r.conclusion == Conclusion::UniquelyDivisible {
                    "D"
                } else {
                    "."
                }
            })
            .collect();
        println!("{petals:>6} | {det:>3} | {}", marks.join(" "));
    }

    let q = Quiver::rose(3).order_sinks_first();
    print!("{}", divisibility_report(&q, &[(2, 1), (5, 1)]).unwrap());
}
