//! Exact combinatorics of the circular Bruhat order `CB(k,n)`.
//!
//! The poset is built on bounded affine permutations. Cover relations carry
//! cyclic linear weights in indeterminates `a1..an`, and the crate computes the
//! weighted sum over maximal chains as an exact polynomial. Alongside that it
//! checks the supporting identities: `r`-good chain counts, the `k`-Bruhat
//! correspondence on anti-excedance fibers, cyclic-shift invariance, the
//! hook-length count, and the cardinality generating function.
//!
//! Polynomials and power series are generic over their coefficient ring via
//! `num-traits`; the aliases below fix the exact choices used everywhere in
//! the verification code.

pub mod affine;
pub mod cbposet;
pub mod chains;
pub mod cli;
pub mod egf;
pub mod error;
pub mod perms;
pub mod polyweights;
pub mod scalar;
pub mod young;

pub use affine::{AffinePermutation, DecoratedPermutation};
pub use cbposet::{CBPoset, Cover};
pub use chains::ChainSumTable;
pub use egf::BiSeries;
pub use error::{Error, Result};
pub use perms::Permutation;
pub use polyweights::{CyclicInterval, MPoly, Monomial};
pub use scalar::{Field, Ring};
pub use young::YoungDiagram;

/// Weight polynomials with arbitrary-precision integer coefficients.
pub type IntPoly = MPoly<num_bigint::BigInt>;

/// Bivariate truncated series over exact rationals.
pub type RationalSeries = BiSeries<num_rational::BigRational>;

/// Chain and tableau counts.
pub type Count = num_bigint::BigUint;
