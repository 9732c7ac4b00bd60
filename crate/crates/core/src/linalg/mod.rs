//! Exact integer linear algebra: Smith normal form, finitely generated abelian groups, and
//! kernels/cokernels over `Z` and `Z/m`.

mod group;
mod matrix;
mod modulus;
mod oracle;
mod quotients;
mod smith;

pub use group::FinAbGroup;
pub use matrix::IntMatrix;
pub use modulus::{factorize, is_prime, Modulus};
pub use oracle::{brute_force_mod_oracle, OracleResult, ORACLE_LIMIT};
pub use quotients::{cokernel_int, cokernel_mod, kernel_int, kernel_mod, kernel_rank_int};
pub use smith::{smith_normal_form, SmithDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("invalid modulus `{0}`: expected an integer >= 2 or a prime power l^v")]
    InvalidModulus(String),
    #[error("oracle bound exceeded: {modulus}^{cols} or {modulus}^{rows} is larger than {limit}", limit = ORACLE_LIMIT)]
    OracleTooLarge {
        modulus: u64,
        rows: usize,
        cols: usize,
    },
    #[error("cannot parse group `{0}`; expected invariant-factor form like `Z (+) Z/2 (+) Z/4`")]
    GroupSyntax(String),
}
