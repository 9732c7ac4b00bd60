//! Smith normal form with certificates, and kernels and cokernels over `Z/m` checked
//! against brute-force enumeration.

use leavitt_kmod::linalg::{
    brute_force_mod_oracle, cokernel_int, cokernel_mod, kernel_mod, smith_normal_form,
};
use leavitt_kmod::{IntMatrix, Modulus};

fn main() {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M = {m}");
    println!("D = {}", snf.d);
    println!("U M V == D: {}", &(&snf.u * &m) * &snf.v == snf.d);
    println!("coker over Z: {}", cokernel_int(&m));
    for k in [2, 3, 4, 8] {
        let md = Modulus::new(k).unwrap();
        let oracle = brute_force_mod_oracle(&m, &md).unwrap();
        println!(
            "Z/{k}: ker = {} (oracle {}), coker = {} (oracle {})",
            kernel_mod(&m, &md),
            oracle.kernel,
            cokernel_mod(&m, &md),
            oracle.cokernel
        );
    }
}
