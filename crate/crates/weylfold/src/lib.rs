//! Exact-arithmetic root system folding and monodromy Galois groups.
//!
//! This crate computes with based root systems obtained by folding simply-laced
//! Dynkin diagrams along diagram automorphisms, and with the integral lattices
//! that realize those root systems inside the second cohomology of a compact
//! hyper-Kähler manifold. Everything is exact: integers are arbitrary precision
//! where growth is possible, rationals are true fractions, and the fixed-width
//! fast paths use checked arithmetic that aborts rather than wraps.
//!
//! The main layers, bottom to top:
//!
//! - [`linalg`]: dense matrices over `i64` (checked), `BigInt`, and
//!   `BigRational`, with Smith normal form, exact solving, and congruent
//!   diagonalization.
//! - [`dynkin`]: simply-laced diagrams, their Cartan matrices, and diagram
//!   automorphism groups.
//! - [`folding`]: orbit classification, the folded Gram/Cartan data, and
//!   recognition of the folded type against the finite catalog.
//! - [`rootsys`]: simple reflections, Weyl group generation (breadth-first
//!   closure cross-checked against an orbit-stabilizer recursion), root
//!   enumeration, and fundamental groups via Smith normal form.
//! - [`lattice`]: integral bilinear lattices, reflections in prime divisor
//!   classes, saturations, orthogonal complements, discriminant bookkeeping,
//!   and verification of the `id + Σ aᵢⱼ eᵢ⊗eⱼ^∨` isometry form.
//! - [`galois`]: contraction data in, Galois group `G = Π_B W_B` out, with
//!   optional realization of each Weyl factor on a user-supplied ambient
//!   lattice.
//!
//! `no_std` with `alloc` suffices for the whole crate; the companion CLI crate
//! carries IO and serialization.
//!
//! Folding the rank-4 branch diagram by its full automorphism group:
//!
//! ```
//! use weylfold::dynkin::SimplyLacedDiagram;
//! use weylfold::folding::fold;
//! use weylfold::types::{TypeKind, TypeLabel};
//!
//! let d4 = SimplyLacedDiagram::new(TypeKind::D, 4)?;
//! let triality = d4.automorphism_group().elements().to_vec();
//! let folded = fold(&d4, &triality)?;
//! assert_eq!(folded.folded_type(), TypeLabel::new(TypeKind::G, 2)?);
//! assert_eq!(folded.cartan()[(1, 0)], -3);
//! # Ok::<(), weylfold::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod dynkin;
pub mod error;
pub mod folding;
pub mod galois;
pub mod lattice;
pub mod linalg;
pub mod perm;
pub mod rootsys;
pub mod types;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
