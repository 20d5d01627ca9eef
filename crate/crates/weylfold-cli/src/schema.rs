//! Versioned JSON shapes for command input and output.
//!
//! Inputs are strict: unknown fields are rejected, and every file carries a
//! top-level `schema_version`. Exact values that may exceed machine integers
//! (determinants, group orders, rational Gram entries) are serialized as
//! decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// The one input/output schema version this binary understands.
pub const SCHEMA_VERSION: u32 = 1;

/// Input: a contraction spec for `galois` and `verify`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContractionFile {
    pub schema_version: u32,
    pub components: Vec<ComponentEntry>,
    #[serde(default)]
    pub ambient: Option<GramEntry>,
}

/// One singular-locus component: fiber type, monodromy generators acting on
/// the fiber diagram (0-based node images), and an optional embedding of the
/// folded classes into the ambient lattice.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    pub name: String,
    #[serde(rename = "type")]
    pub fiber_type: TypeEntry,
    #[serde(default)]
    pub monodromy_generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub embedding: Option<EmbeddingEntry>,
}

/// A diagram type as a `kind` letter plus rank.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeEntry {
    pub kind: String,
    pub rank: usize,
}

/// Folded classes as ambient coordinate rows; covector rows are optional and
/// derived from the pairing when absent.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingEntry {
    pub classes: Vec<Vec<i64>>,
    #[serde(default)]
    pub covectors: Option<Vec<Vec<i64>>>,
}

/// An integral symmetric Gram matrix.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramEntry {
    pub gram: Vec<Vec<i64>>,
}

/// Input for the `lattice` verb: a Gram matrix and optional class rows.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub schema_version: u32,
    pub gram: Vec<Vec<i64>>,
    #[serde(default)]
    pub classes: Option<Vec<Vec<i64>>>,
}

/// An exact rational as numerator/denominator strings.
#[derive(Debug, Serialize)]
pub struct RationalOut {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalOut {
    fn from(x: &BigRational) -> Self {
        RationalOut {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

/// Render an exact rational as `p/q`, dropping the denominator when 1.
pub fn rational_str(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Output of `fold`.
#[derive(Debug, Serialize)]
pub struct FoldOut {
    pub schema_version: u32,
    pub source: String,
    pub gamma_order: usize,
    pub orbits: Vec<OrbitOut>,
    pub gram: Vec<Vec<RationalOut>>,
    pub cartan: Vec<Vec<i64>>,
    pub folded_type: String,
    pub bc: bool,
    pub rescaled: Option<RescaledOut>,
}

/// One orbit of simple roots; `adjacent_pair` marks the doubled middle orbit
/// of an even chain.
#[derive(Debug, Serialize)]
pub struct OrbitOut {
    pub nodes: Vec<usize>,
    pub adjacent_pair: bool,
}

/// The rescaled basis data present exactly in the non-reduced case.
#[derive(Debug, Serialize)]
pub struct RescaledOut {
    pub gram: Vec<Vec<RationalOut>>,
    pub cartan: Vec<Vec<i64>>,
    pub folded_type: String,
}

/// Output of `weyl`.
#[derive(Debug, Serialize)]
pub struct WeylOut {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub type_label: String,
    pub order: String,
    pub enumerated: bool,
    pub element_count: Option<usize>,
}

/// Output of `roots`.
#[derive(Debug, Serialize)]
pub struct RootsOut {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub type_label: String,
    pub count: usize,
    pub reduced: bool,
    pub roots: Vec<Vec<i64>>,
}

/// Output of `lattice`.
#[derive(Debug, Serialize)]
pub struct LatticeOut {
    pub schema_version: u32,
    pub rank: usize,
    pub signature: SignatureOut,
    pub definiteness: String,
    pub determinant: String,
    pub discriminant_group: Option<Vec<String>>,
    pub classes: Option<ClassReportOut>,
}

/// Inertia of the form; `zero` is the radical dimension.
#[derive(Debug, Serialize)]
pub struct SignatureOut {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Sublattice analysis attached to a `lattice` run with classes.
#[derive(Debug, Serialize)]
pub struct ClassReportOut {
    pub rank: usize,
    pub restricted_gram: Vec<Vec<String>>,
    pub saturated: bool,
    pub saturation_index: String,
    pub complement_rank: usize,
    pub splits: bool,
    pub glue_order: String,
    pub class_discriminant: Vec<String>,
    pub complement_discriminant: Vec<String>,
}

/// Output of `galois`.
#[derive(Debug, Serialize)]
pub struct GaloisOut {
    pub schema_version: u32,
    pub components: Vec<GaloisComponentOut>,
    pub total_order: String,
}

/// Per-component report inside [`GaloisOut`].
#[derive(Debug, Serialize)]
pub struct GaloisComponentOut {
    pub name: String,
    pub source: String,
    pub gamma_order: usize,
    pub folded: String,
    pub bc: bool,
    pub weyl_order: String,
    pub fundamental_group: Vec<u64>,
    pub factor: String,
}

/// Output of `verify`.
#[derive(Debug, Serialize)]
pub struct VerifyOut {
    pub schema_version: u32,
    pub flag_checks: Vec<FlagCheckOut>,
    pub realization: Option<RealizationOut>,
    pub pass: bool,
}

/// One flag-identity check: the three quotient orders, their product, and
/// the expected fundamental-group order.
#[derive(Debug, Serialize)]
pub struct FlagCheckOut {
    pub name: String,
    pub coroot_index: String,
    pub class_index: String,
    pub dual_index: String,
    pub product: String,
    pub pi_order: String,
    pub holds: bool,
}

/// Realization summary inside [`VerifyOut`].
#[derive(Debug, Serialize)]
pub struct RealizationOut {
    pub generators: usize,
    pub verified_order: Option<String>,
    pub spot_check: Option<SpotCheckOut>,
    pub error: Option<String>,
}

/// Seeded random-word screen inside [`RealizationOut`].
#[derive(Debug, Serialize)]
pub struct SpotCheckOut {
    pub words: usize,
    pub seed: u64,
    pub passed: usize,
}

/// Render discriminant invariant factors as `Z/a x Z/b`, or `trivial`.
pub fn group_label(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        String::from("trivial")
    } else {
        factors
            .iter()
            .map(|f| format!("Z/{f}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}
