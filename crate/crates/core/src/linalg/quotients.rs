//! Kernels and cokernels of integer matrices, over `Z` and over `Z/m`, read off the
//! Smith normal form.
//!
//! A matrix `M` with `rows x cols` entries is viewed as the map `Z^cols -> Z^rows`
//! (resp. `(Z/m)^cols -> (Z/m)^rows`) acting on column vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{smith_normal_form, FinAbGroup, IntMatrix, Modulus};

/// `Z^rows / im(M)`.
pub fn cokernel_int(m: &IntMatrix) -> FinAbGroup {
    let factors = smith_normal_form(m).invariant_factors();
    let free = m.rows() - factors.len();
    FinAbGroup::from_cyclic_orders(
        factors
            .into_iter()
            .chain(std::iter::repeat_n(BigInt::zero(), free)),
    )
}

/// Rank of the (free) kernel of `Z^cols -> Z^rows`.
pub fn kernel_rank_int(m: &IntMatrix) -> usize {
    m.cols() - smith_normal_form(m).rank()
}

/// Kernel of `M` over `Z`, which is always free.
pub fn kernel_int(m: &IntMatrix) -> FinAbGroup {
    FinAbGroup::free(kernel_rank_int(m))
}

/// Cokernel of the induced map `(Z/m)^cols -> (Z/m)^rows`.
pub fn cokernel_mod(m: &IntMatrix, modulus: &Modulus) -> FinAbGroup {
    mod_quotient(m, modulus, m.rows())
}

/// Kernel of the induced map `(Z/m)^cols -> (Z/m)^rows`.
pub fn kernel_mod(m: &IntMatrix, modulus: &Modulus) -> FinAbGroup {
    mod_quotient(m, modulus, m.cols())
}

/// `(+)_{i<=r} Z/gcd(d_i, m) (+) (Z/m)^(dim - r)`: kernel and cokernel only differ in which
/// side's dimension pads the zero diagonal.
fn mod_quotient(m: &IntMatrix, modulus: &Modulus, dim: usize) -> FinAbGroup {
    let factors = smith_normal_form(m).invariant_factors();
    let md = modulus.as_bigint();
    let padding = dim - factors.len();
    let orders: Vec<BigInt> = factors
        .iter()
        .map(|d| d.gcd(&md))
        .chain(std::iter::repeat_n(md.clone(), padding))
        .collect();
    FinAbGroup::from_cyclic_orders(orders)
}
