//! Exact calculus of Brill-Noether classes on the Jacobian of a genus-`g`
//! curve: Littlewood-Richardson arithmetic, Betti and
//! intersection-cohomology polynomials, the convolution ring modulo the
//! constant class, and the comparison with the representation ring of
//! `SL(2g-2)` (general curves) or `Sp(2g-2)` (hyperelliptic curves).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! and every identity the crate claims is checked as an equality.
//!
//! The ring is modeled as the free module on the partitions with largest
//! part below `χ = 2g-2`; independence of those classes is a structural
//! fact of the theory that the code exercises (no operation ever merges
//! two distinct normal-form keys) but does not re-prove.

pub mod betti;
pub mod error;
pub mod json;
pub mod kring;
pub mod laurent;
pub mod lr;
pub mod partition;
pub mod repring;
pub mod selftest;

pub use betti::{
    betti_constant_sheaf, betti_polynomial, euler_characteristic, ih_betti,
    perverse_decomposition, schur_dim, schur_eval_two, BettiReport, Locus,
};
pub use error::{Error, Result};
pub use kring::{dual_partition, is_normal_form, normal_form, KClass};
pub use laurent::{CurveContext, EpsilonPoly, LaurentPoly};
pub use lr::{
    lr_coefficient, lr_expand_product, lr_oracle, lr_oracle_expand, DEFAULT_ORACLE_BOUND,
};
pub use partition::{partitions_of, partitions_up_to, Partition, SkewShape};
pub use repring::{
    bn_to_rep, compare_convolution_to_tensor, newell_littlewood, sl_dim, sl_reduce, sl_tensor,
    sp_branch_from_gl, sp_character, sp_decompose_character, sp_dim, sp_tensor_oracle,
    ComparisonReport, Group, RepElement, SpCharacter,
};
