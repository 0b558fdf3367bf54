//! Exact computation and identity checking for q-super Catalan numbers and
//! alternating sums of products of Gaussian coefficients.
//!
//! Everything is a dense [`IntPoly`] over arbitrary-precision integers.
//! Identities are checked by expanding both sides exactly; positivity is
//! membership in `N[q]`.

pub mod altsum;
pub mod catalan;
pub mod check;
pub mod error;
pub mod qcombinat;
pub mod qone;
pub mod qpoly;
pub mod report;

pub use altsum::{
    cyclic_product, deletion_check, delta, product_identity_check, reciprocity_check,
    recombine_check, separation_check, CyclicParams, F,
};
pub use catalan::{
    double_expansion_check, odd_super_catalan_direct, odd_super_catalan_recursive, ratio_b,
    super_catalan_a, CatalanPair, OddCatalanRecursion,
};
pub use check::IdentityCheckResult;
pub use error::{Error, Result};
pub use qcombinat::{choose2, gauss_binom, q_factorial, q_int, q_poch, QPoch};
pub use qpoly::IntPoly;
pub use report::{Family, Instance, PositivityReport};
