//! Exact character polynomials for the classical Weyl groups.
//!
//! The crate computes characters of the symmetric groups `S_n`, the
//! hyperoctahedral groups `B_n` and the even-signed permutation groups `D_n`
//! as polynomials in the signed cycle-counting class functions `X_r`, `Y_r`,
//! models FI_W#-modules as sums of induced modules `M_W(U)`, and reproduces the
//! equivariant cohomology characters of the pure string motion groups and of
//! the classical reflection arrangement complements.
//!
//! All arithmetic is exact: coefficients and character values are
//! [`BigRational`](num_rational::BigRational) numbers, class sizes are `u128`.

pub mod applications;
pub mod charpoly;
pub mod error;
pub mod fiw_model;
pub mod hyperoct_char;
pub mod linalg;
pub mod partitions;
pub mod signed_perm;
pub mod sym_char;
pub mod verify;

pub use charpoly::{CharacterPolynomial, ClassFunction, Monomial, Var};
pub use error::{Error, Result};
pub use fiw_model::FiwSharpModule;
pub use hyperoct_char::IrreducibleLabel;
pub use partitions::{DoublePartition, Partition, SignedCycleType};
pub use signed_perm::{ClassKey, ConjClass, Family, Group, SignedPermutation, SplitTag};

/// Exact rational scalar used throughout the crate.
pub type Q = num_rational::BigRational;

/// Convenience constructor for an integer-valued [`Q`].
pub fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Convenience constructor for `num / den`.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}
