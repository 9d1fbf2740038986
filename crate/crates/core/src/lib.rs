//! Exact Kronecker coefficients `γ^λ_{μν}` of the symmetric group.
//!
//! [`compute`] looks for a closed formula (two two-row shapes, two hooks, or a
//! hook and a two-row shape) among the symmetry variants of the query and
//! otherwise evaluates the character class sum
//! `γ^λ_{μν} = (1/n!) Σ_ρ (n!/z_ρ) χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`.
//!
//! ```
//! use kronecker_core::{compute, Method, Partition, Provenance};
//!
//! let t: Partition = "3,1".parse().unwrap();
//! let r = compute(&t, &t, &t, Method::Auto).unwrap();
//! assert_eq!(r.gamma, 1u32.into());
//! assert_eq!(r.provenance, Provenance::TwoRowTwoRow);
//! ```
//!
//! The lattice counts behind the two-row formula, a Murnaghan–Nakayama
//! character engine, and an exact evaluator for Schur functions on signed
//! alphabets are exported as well; the latter is what the comultiplication
//! and Sergeev identity checks run on.

pub mod character;
pub mod closed_forms;
pub mod error;
pub mod lattice;
pub mod partition;
pub mod result;
pub mod scalar;
pub mod schur;
pub mod sergeev;
pub mod sweep;

pub use character::{
    character, clear_character_cache, dimension, factorial, kron_oracle, sum_of_squared_dimensions,
    with_oracle, CharacterCache, Oracle,
};
pub use closed_forms::{
    compute, kron_hook_hook_tworow_corollary, kron_hook_tworow, kron_two_hooks, kron_two_tworow,
    kron_tworow_corollary, Method, NormalizedTriple,
};
pub use error::{Error, Result};
pub use lattice::{
    diamond_contains, gamma_region_bruteforce, gamma_region_closed, reachable, sigma_bruteforce,
    sigma_closed, DiamondRegion, GridPoint, Rect,
};
pub use partition::{
    classify, conjugate, enumerate_partitions, make_partition, z_of, DoubleHook, Partition,
    PartitionIter, ShapeClass,
};
pub use result::{KroneckerResult, Move, Provenance, Slot};
pub use scalar::{FieldScalar, RingScalar};
pub use schur::{
    alphabet_product, alphabet_sum, power_sum_eval, schur_eval_bialternant, schur_eval_characters,
    verify_comultiplication, verify_comultiplication_with, EntrySign, GammaSource, SignedAlphabet,
};
pub use sergeev::{
    sample_alphabets, sample_points, sergeev_rhs, verify_sergeev_specializations, SamplePoint,
    Specialization,
};
pub use sweep::{sweep, Family, Mismatch, SweepReport};

/// Arbitrary-precision integer used for character values.
pub type Integer = num_bigint::BigInt;
/// Exact rational scalar used for alphabet evaluation.
pub type Rational = num_rational::BigRational;
/// Signed alphabet over exact rationals.
pub type Alphabet = SignedAlphabet<Rational>;
