//! K-groups with finite coefficients for the Leavitt algebras `L_n` and the Jacobson
//! algebras `J_n`.
//!
//! ```text
//! cargo run --example kmod_tables
//! ```

use leavitt_kmod::ktheory::{mod_l_ktheory_of, DegreeWindow};
use leavitt_kmod::{Modulus, Quiver};

fn main() {
    let window = DegreeWindow::new(-1, 4).expect("nonempty window");
    let cases = [
        ("L_0 (one loop)", Quiver::rose(1), "9"),
        ("L_1 (two petals)", Quiver::rose(2), "8"),
        ("L_3 (four petals)", Quiver::rose(4), "3"),
        ("L_4 (five petals)", Quiver::rose(5), "2^2"),
        ("J_2", Quiver::jacobson(2), "5"),
        ("Toeplitz", Quiver::toeplitz(), "7"),
    ];
    for (name, q, m) in cases {
        let modulus: Modulus = m.parse().expect("valid modulus");
        let table = mod_l_ktheory_of(&q, &modulus, window).expect("fixtures have no sources");
        println!("{name}, coefficients Z/{modulus}:");
        for (n, entry) in table.iter() {
            println!(
                "  K_{n} = {:<6} ({})",
                entry.group.to_string(),
                entry.provenance.as_str()
            );
        }
    }
}
