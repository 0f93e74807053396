//! gclab: an exact-arithmetic engine for the Galois closure `G(A_n)` of the
//! square-zero algebra `A_n = k[x_1, ..., x_{n-1}] / (x_1, ..., x_{n-1})^2`.
//!
//! The crate builds `G(A_n)` as an explicitly presented multigraded ring,
//! computes its component bases, Hilbert function, socle and annihilator
//! structure, decomposes components into irreducible symmetric-group
//! representations, solves the negative-degree tangent spaces `T^1_{<0}` of
//! `G(A_n)` and of its socle quotients, and checks the explicit obstruction
//! witness in `T^2`. All arithmetic is exact (arbitrary-precision rationals);
//! there is no floating point anywhere in the engine.
//!
//! Module layout:
//! - [`exact_linalg`]: rationals, sparse matrices, RREF, kernels, subspaces.
//! - [`combinatorics`]: partitions, tableaux, Kostka numbers, hook lengths,
//!   and the closed-form dimension/Hilbert/`R(n)` formulas.
//! - [`gc_ring`]: the multigraded ring engine for `G(A_n)` (normal forms,
//!   multiplication, socle, ideal membership).
//! - [`rep_theory`]: structure-theorem decompositions, tabloid calculus, the
//!   `theta` maps, and explicit minimal-degree socle vectors.
//! - [`tangents`]: syzygy-constrained `Hom(I, B)` in negative degrees,
//!   derivation spans, trivial-negative-tangent verdicts, quotient workflows,
//!   and the obstruction witness.
//! - [`gc_general`]: the general Galois-closure presenter for a finite-rank
//!   algebra given by structure constants, with deterministic export.
//! - [`cli`]: the `gclab` command-line front end.

// Index loops over matrix rows/columns mirror the subscript notation used
// throughout; iterator rewrites obscure which axis is being traversed.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod combinatorics;
pub mod exact_linalg;
pub mod gc_general;
pub mod gc_ring;
pub mod rep_theory;
pub mod tangents;

/// Crate-wide error type for contract violations and unsupported inputs.
///
/// These are deliberate, user-facing failures (bad dimensions, invalid
/// multidegrees, out-of-range parameters). Internal consistency failures are
/// `panic!`/`assert!` instead: they indicate a bug, not a bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must share a dimension or size do not.
    SizeMismatch { expected: usize, found: usize, context: &'static str },
    /// A subspace inclusion that an operation requires does not hold.
    /// Carries a basis vector of the would-be subspace that is not contained.
    NotContained { witness: String },
    /// A multidegree is outside the domain of the requested operation.
    InvalidMultidegree { detail: String },
    /// A parameter is outside the range for which the quantity is defined.
    Unsupported { detail: String },
    /// An input algebra presentation violates a required axiom.
    BadAlgebra { detail: String },
    /// A tableau or tabloid does not satisfy the shape/content contract of
    /// the operation it was passed to.
    BadTableau { detail: String },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::SizeMismatch { expected, found, context } => {
                write!(f, "size mismatch in {context}: expected {expected}, found {found}")
            }
            Error::NotContained { witness } => {
                write!(f, "subspace containment failed; witness vector {witness}")
            }
            Error::InvalidMultidegree { detail } => write!(f, "invalid multidegree: {detail}"),
            Error::Unsupported { detail } => write!(f, "unsupported input: {detail}"),
            Error::BadAlgebra { detail } => write!(f, "invalid algebra presentation: {detail}"),
            Error::BadTableau { detail } => write!(f, "invalid tableau: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
