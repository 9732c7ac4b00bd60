//! The length filtration of the degree-zero part: block sizes, the symbolic dimension and
//! the `K₀` matrices of the inclusion and of the corner map.

use leavitt_kmod::filtration::filtration_report;
use leavitt_kmod::Quiver;

fn main() {
    for (name, q, level) in [
        ("Toeplitz", Quiver::toeplitz(), 2),
        ("J_1", Quiver::jacobson(1), 1),
        ("L_2", Quiver::rose(3), 2),
    ] {
        let report = filtration_report(&q.order_sinks_first(), level).unwrap();
        println!("== {name}");
        println!("{report}");
    }
}
