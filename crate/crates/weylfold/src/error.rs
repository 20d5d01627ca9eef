//! Crate error type.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong across the crate.
///
/// Variants carry enough data to name the violated precondition and, where
/// useful, a witness (the offending index, node, or pair).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A diagram kind/rank combination outside the simply-laced catalog.
    InvalidRank {
        /// Diagram kind letter ("A", "D", "E").
        kind: char,
        /// Requested rank.
        rank: usize,
        /// The violated constraint.
        reason: &'static str,
    },
    /// A permutation of the wrong length or one that is not a bijection.
    InvalidPermutation(String),
    /// A permutation that does not preserve the diagram's edges.
    NotAnAutomorphism(String),
    /// An automorphism group used with a diagram it was not built on.
    DiagramMismatch,
    /// A square integer matrix that is not the Cartan matrix of a finite type;
    /// names the first failed check.
    NotFiniteType(&'static str),
    /// A Cartan ratio 2(eᵢ,eⱼ)/(eⱼ,eⱼ) that is not an integer.
    NonIntegralCartan {
        /// Row index of the offending entry.
        row: usize,
        /// Column index of the offending entry.
        col: usize,
    },
    /// A Gram matrix that is not definite where a finite Weyl group needs one.
    NotDefinite,
    /// Bases claimed to span the same rational subspace do not.
    SpanMismatch,
    /// A pairing value required to be an integer is not.
    NonIntegralPairing {
        /// Row index into the dual basis.
        row: usize,
        /// Column index into the primal basis.
        col: usize,
    },
    /// Reflection requested in a class of self-pairing zero.
    IsotropicClass,
    /// A reflection that does not preserve the integral structure; carries the
    /// index of the witness basis vector whose image is non-integral.
    NonIntegralReflection {
        /// Ambient basis vector whose image leaves the lattice.
        witness: usize,
    },
    /// A matrix that must be symmetric but is not.
    NotSymmetric {
        /// Row index of a witness entry.
        row: usize,
        /// Column index of a witness entry.
        col: usize,
    },
    /// A degenerate bilinear form where a nondegenerate one is required.
    DegenerateForm,
    /// A sublattice that must be saturated but is not.
    NotSaturated,
    /// Mismatched dimensions between two objects that must agree.
    RankMismatch {
        /// Expected dimension.
        expected: usize,
        /// Provided dimension.
        got: usize,
    },
    /// Embedding classes whose pairings are not one common multiple of the
    /// folded Gram matrix (or the multiple has the wrong sign).
    GramScaleMismatch(String),
    /// Two components whose embedded classes are not orthogonal.
    NonOrthogonalComponents {
        /// First component name.
        first: String,
        /// Second component name.
        second: String,
        /// Row index of the violating class in the first component.
        row: usize,
        /// Row index of the violating class in the second component.
        col: usize,
    },
    /// A realized generator failed the reflection-form screen, signalling
    /// embedding data (classes or covectors) inconsistent with the fold.
    EmbeddingInconsistent {
        /// Component whose generator failed.
        component: String,
        /// Index of the failing generator within the component.
        generator: usize,
    },
    /// Ambient realization requested without an ambient lattice.
    MissingAmbient,
    /// Ambient realization requested for a component without embedding data.
    MissingEmbedding(String),
    /// An internal invariant failed; indicates a bug, never bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { kind, rank, reason } => {
                write!(f, "invalid diagram {kind}{rank}: {reason}")
            }
            Error::InvalidPermutation(why) => write!(f, "invalid permutation: {why}"),
            Error::NotAnAutomorphism(perm) => {
                write!(f, "permutation {perm} does not preserve the diagram")
            }
            Error::DiagramMismatch => {
                write!(f, "automorphism group was built on a different diagram")
            }
            Error::NotFiniteType(check) => write!(f, "not a finite type: {check}"),
            Error::NonIntegralCartan { row, col } => {
                write!(f, "non-integral Cartan ratio at ({row}, {col})")
            }
            Error::NotDefinite => write!(f, "Gram matrix is not definite"),
            Error::SpanMismatch => write!(f, "bases do not span the same rational subspace"),
            Error::NonIntegralPairing { row, col } => {
                write!(f, "non-integral pairing at ({row}, {col})")
            }
            Error::IsotropicClass => write!(f, "cannot reflect in a class with (e,e) = 0"),
            Error::NonIntegralReflection { witness } => write!(
                f,
                "reflection is not integral on basis vector {witness}"
            ),
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Error::DegenerateForm => write!(f, "bilinear form is degenerate"),
            Error::NotSaturated => write!(f, "sublattice is not saturated"),
            Error::RankMismatch { expected, got } => {
                write!(f, "rank mismatch: expected {expected}, got {got}")
            }
            Error::GramScaleMismatch(component) => write!(
                f,
                "embedding of component {component} does not match the folded Gram up to one negative scale"
            ),
            Error::NonOrthogonalComponents { first, second, row, col } => write!(
                f,
                "components {first} (class {row}) and {second} (class {col}) are not orthogonal"
            ),
            Error::EmbeddingInconsistent { component, generator } => write!(
                f,
                "generator {generator} of component {component} fails the reflection-form screen"
            ),
            Error::MissingAmbient => write!(f, "contraction data has no ambient lattice"),
            Error::MissingEmbedding(component) => {
                write!(f, "component {component} has no ambient embedding")
            }
            Error::Internal(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}
