//! From contraction data to the product group: per-component folds, Weyl
//! orders, fundamental groups, and integral realizations of the generators
//! on a geometric ambient lattice.
//!
//! A contraction is specified by its singular-locus components, each
//! carrying a simply-laced fiber type and the monodromy image inside the
//! diagram automorphisms; the group is the product over components of the
//! Weyl group of the folded type.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::dynkin::SimplyLacedDiagram;
use crate::folding::{fold, FoldedRootSystem, OrbitType};
use crate::lattice::{
    coroot_covector, verify_galois_form, BilinearLattice, IsometryCandidate, SublatticeEmbedding,
};
use crate::linalg::{IMat, ZMat};
use crate::perm::Perm;
use crate::rootsys::{RootLattice, RootSet};
use crate::types::TypeLabel;
use crate::{Error, Result};

/// Divisor-class data embedding one component's folded simple roots into an
/// ambient lattice: one class row per folded root, optionally with the
/// matching fiber-class functional rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentEmbedding {
    classes: IMat,
    covectors: Option<IMat>,
}

impl ComponentEmbedding {
    /// Classes only; functionals are derived from the classes when needed.
    pub fn new(classes: IMat) -> Self {
        ComponentEmbedding {
            classes,
            covectors: None,
        }
    }

    /// Classes with explicit fiber-class functional rows.
    pub fn with_covectors(classes: IMat, covectors: IMat) -> Self {
        ComponentEmbedding {
            classes,
            covectors: Some(covectors),
        }
    }

    /// Class rows in ambient coordinates.
    pub fn classes(&self) -> &IMat {
        &self.classes
    }

    /// Functional rows, when supplied.
    pub fn covectors(&self) -> Option<&IMat> {
        self.covectors.as_ref()
    }
}

/// One singular-locus component: a simply-laced fiber diagram and the
/// monodromy image acting on it, plus optional ambient class data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentSpec {
    name: String,
    diagram: SimplyLacedDiagram,
    monodromy: Vec<Perm>,
    embedding: Option<ComponentEmbedding>,
}

impl ComponentSpec {
    /// Validated constructor: the label must be simply laced and every
    /// monodromy generator a diagram automorphism.
    pub fn new(name: String, label: TypeLabel, monodromy: Vec<Perm>) -> Result<Self> {
        let diagram = SimplyLacedDiagram::new(label.kind, label.rank)?;
        diagram.automorphism_group().subgroup(&monodromy)?;
        Ok(ComponentSpec {
            name,
            diagram,
            monodromy,
            embedding: None,
        })
    }

    /// Attach ambient class data.
    pub fn with_embedding(mut self, embedding: ComponentEmbedding) -> Self {
        self.embedding = Some(embedding);
        self
    }

    /// Component name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Fiber diagram.
    pub fn diagram(&self) -> &SimplyLacedDiagram {
        &self.diagram
    }

    /// Fiber type.
    pub fn label(&self) -> TypeLabel {
        self.diagram.label()
    }

    /// Monodromy generators.
    pub fn monodromy(&self) -> &[Perm] {
        &self.monodromy
    }

    /// Ambient class data, when present.
    pub fn embedding(&self) -> Option<&ComponentEmbedding> {
        self.embedding.as_ref()
    }

    /// Fold the fiber diagram by the monodromy group. The flag is set
    /// exactly when some orbit is an adjacent pair (the even-chain case,
    /// where the folded datum is non-reduced and the plain/rescaled bases
    /// carry the two dual reduced types).
    pub fn fold_component(&self) -> Result<(FoldedRootSystem, bool)> {
        let folded = fold(&self.diagram, &self.monodromy)?;
        let bc = folded.has_adjacent_orbit();
        Ok((folded, bc))
    }
}

/// A full contraction: the component list and, optionally, the ambient
/// lattice the class data lives in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionSpec {
    components: Vec<ComponentSpec>,
    ambient: Option<BilinearLattice>,
}

impl ContractionSpec {
    /// Components only.
    pub fn new(components: Vec<ComponentSpec>) -> Self {
        ContractionSpec {
            components,
            ambient: None,
        }
    }

    /// Components with an ambient lattice.
    pub fn with_ambient(components: Vec<ComponentSpec>, ambient: BilinearLattice) -> Self {
        ContractionSpec {
            components,
            ambient: Some(ambient),
        }
    }

    /// Component list.
    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    /// Ambient lattice, when present.
    pub fn ambient(&self) -> Option<&BilinearLattice> {
        self.ambient.as_ref()
    }
}

/// Per-component result of [`compute_galois`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentReport {
    /// Component name.
    pub name: String,
    /// Fiber type.
    pub source: TypeLabel,
    /// Order of the monodromy group.
    pub gamma_order: usize,
    /// Folded type (the plain-basis label; its dual names the same group).
    pub folded: TypeLabel,
    /// Whether the fold is the non-reduced even-chain case.
    pub bc: bool,
    /// Order of the folded Weyl group.
    pub weyl_order: u128,
    /// Invariant factors of the folded fundamental group.
    pub pi: Vec<u64>,
}

impl ComponentReport {
    /// Human-readable Weyl factor, naming both dual labels and the
    /// non-reduced datum in the even-chain case.
    pub fn factor_label(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "W({})", self.folded);
        if self.bc {
            if self.folded.kind != crate::types::TypeKind::A {
                let _ = write!(s, " (= W({}))", self.folded.dual());
            }
            let _ = write!(s, ", root data BC{}", self.folded.rank);
        }
        s
    }
}

/// Result of [`compute_galois`]: the component records and the product
/// order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaloisReport {
    components: Vec<ComponentReport>,
    total_order: BigUint,
}

impl GaloisReport {
    /// Component records in input order.
    pub fn components(&self) -> &[ComponentReport] {
        &self.components
    }

    /// Product of the component Weyl orders.
    pub fn total_order(&self) -> &BigUint {
        &self.total_order
    }

    /// Whether the group is trivial.
    pub fn is_trivial(&self) -> bool {
        self.total_order.is_one()
    }

    /// Ordered factor labels.
    pub fn factor_labels(&self) -> Vec<String> {
        self.components
            .iter()
            .map(ComponentReport::factor_label)
            .collect()
    }
}

/// Compute the product group of a contraction: fold each component, take
/// the Weyl group of the folded type, and multiply the orders. Ambient
/// class data, when present, is validated (independence, one common
/// negative Gram scale, pairwise orthogonality across components).
pub fn compute_galois(spec: &ContractionSpec) -> Result<GaloisReport> {
    let mut components = Vec::with_capacity(spec.components().len());
    let mut total_order = BigUint::one();

    for c in spec.components() {
        let (folded_system, bc) = c.fold_component()?;
        let folded = folded_system.folded_type();
        let classical = folded.weyl_order();
        let recursed = RootLattice::from_folded(&folded_system).weyl_order()?;
        if recursed != classical {
            return Err(Error::Internal(
                "folded Weyl order disagrees with the classical formula",
            ));
        }
        if c.embedding().is_some() {
            let ambient = spec.ambient().ok_or(Error::MissingAmbient)?;
            validated_embedding(ambient, c, &folded_system)?;
        }
        total_order *= BigUint::from(classical);
        components.push(ComponentReport {
            name: String::from(c.name()),
            source: c.label(),
            gamma_order: folded_system.gamma_order(),
            folded,
            bc,
            weyl_order: classical,
            pi: folded.pi_invariant_factors(),
        });
    }

    if let Some(ambient) = spec.ambient() {
        check_pairwise_orthogonal(ambient, spec.components())?;
    }

    Ok(GaloisReport {
        components,
        total_order,
    })
}

/// Generators of the realized group, grouped by component in input order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realization {
    component_generators: Vec<(String, Vec<IMat>)>,
    verified_order: Option<u128>,
}

impl Realization {
    /// Per-component generator lists.
    pub fn component_generators(&self) -> &[(String, Vec<IMat>)] {
        &self.component_generators
    }

    /// All generators flattened in input order.
    pub fn generators(&self) -> Vec<IMat> {
        self.component_generators
            .iter()
            .flat_map(|(_, g)| g.iter().cloned())
            .collect()
    }

    /// Closure order, when the expected total was within the cap.
    pub fn verified_order(&self) -> Option<u128> {
        self.verified_order
    }
}

/// Realize the group on the ambient lattice: one reflection per folded
/// simple class per component (reflecting in the doubled class for an
/// adjacent-pair orbit, which yields the same matrix), each screened by
/// [`verify_galois_form`]. When the expected order is within `cap`, the
/// closure is enumerated and its order checked against the product.
pub fn realize_on_ambient(spec: &ContractionSpec, cap: u128) -> Result<Realization> {
    let report = compute_galois(spec)?;
    let ambient = spec.ambient().ok_or(Error::MissingAmbient)?;

    let mut component_generators = Vec::with_capacity(spec.components().len());
    for c in spec.components() {
        let embedding = c
            .embedding()
            .ok_or_else(|| Error::MissingEmbedding(String::from(c.name())))?;
        let (folded_system, _) = c.fold_component()?;
        let sub = validated_embedding(ambient, c, &folded_system)?;
        let covectors = match embedding.covectors() {
            Some(m) => m.to_z(),
            None => derived_covectors(ambient, embedding.classes())?,
        };

        let mut generators = Vec::with_capacity(folded_system.rank());
        for (j, orbit) in folded_system.orbits().iter().enumerate() {
            let class = embedding.classes().row(j);
            let reflection = if orbit.orbit_type == OrbitType::AdjacentPair {
                let doubled: Vec<i64> = class
                    .iter()
                    .map(|&v| {
                        v.checked_mul(2)
                            .ok_or(Error::Internal("class coordinate overflow"))
                    })
                    .collect::<Result<_>>()?;
                let from_doubled = ambient.bb_reflection(&doubled)?;
                if from_doubled != ambient.bb_reflection(class)? {
                    return Err(Error::Internal(
                        "doubled-class reflection differs from the plain one",
                    ));
                }
                from_doubled
            } else {
                ambient.bb_reflection(class)?
            };
            let screen = verify_galois_form(
                &sub,
                &covectors,
                &IsometryCandidate {
                    matrix: reflection.clone(),
                },
            )?;
            if !screen.passes() {
                return Err(Error::EmbeddingInconsistent {
                    component: String::from(c.name()),
                    generator: j,
                });
            }
            generators.push(reflection);
        }
        component_generators.push((String::from(c.name()), generators));
    }

    let verified_order = if *report.total_order() <= BigUint::from(cap) {
        let expected = u128::try_from(report.total_order())
            .map_err(|_| Error::Internal("verified order exceeds the machine range"))?;
        let all: Vec<IMat> = component_generators
            .iter()
            .flat_map(|(_, g)| g.iter().cloned())
            .collect();
        let order = closure_order(ambient.rank(), &all, expected);
        if order != expected {
            return Err(Error::Internal(
                "realized closure order disagrees with the component product",
            ));
        }
        Some(order)
    } else {
        None
    };

    Ok(Realization {
        component_generators,
        verified_order,
    })
}

/// Union of the folded root system with its rescaled counterpart, in
/// plain-basis coordinates. For a fold without adjacent-pair orbits this is
/// just the folded root system (and is reduced); in the even-chain case the
/// union contains both a root and its double.
pub fn root_union(folded: &FoldedRootSystem) -> Result<RootSet> {
    let plain = RootLattice::from_folded(folded).enumerate_roots();
    let Some((gram, _, _)) = folded.rescaled_basis() else {
        return Ok(plain);
    };
    let rescaled = RootLattice::new(gram)?.enumerate_roots();
    let scales: Vec<i64> = folded
        .orbits()
        .iter()
        .map(|o| {
            if o.orbit_type == OrbitType::AdjacentPair {
                2
            } else {
                1
            }
        })
        .collect();
    let converted: Vec<Vec<i64>> = rescaled
        .roots()
        .iter()
        .map(|r| r.iter().zip(&scales).map(|(c, s)| c * s).collect())
        .collect();
    plain.union(&RootSet::from_roots(folded.rank(), converted)?)
}

/// Check the class rows of each pair of embedded components pair to zero.
fn check_pairwise_orthogonal(
    ambient: &BilinearLattice,
    components: &[ComponentSpec],
) -> Result<()> {
    let embedded: Vec<(&str, &IMat)> = components
        .iter()
        .filter_map(|c| c.embedding().map(|e| (c.name(), e.classes())))
        .collect();
    for (a, (name_a, classes_a)) in embedded.iter().enumerate() {
        for (name_b, classes_b) in embedded.iter().skip(a + 1).map(|&(n, c)| (n, c)) {
            for row in 0..classes_a.rows() {
                for col in 0..classes_b.rows() {
                    let pairing = ambient.pair(classes_a.row(row), classes_b.row(col));
                    if !pairing.is_zero() {
                        return Err(Error::NonOrthogonalComponents {
                            first: String::from(*name_a),
                            second: String::from(name_b),
                            row,
                            col,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Validate one component's class data: row count matches the folded rank,
/// rows independent, pairings one common negative multiple of the folded
/// Gram matrix, covector shape consistent when supplied.
fn validated_embedding(
    ambient: &BilinearLattice,
    component: &ComponentSpec,
    folded: &FoldedRootSystem,
) -> Result<SublatticeEmbedding> {
    let embedding = component.embedding().expect("caller checked presence");
    let classes = embedding.classes();
    if classes.rows() != folded.rank() {
        return Err(Error::RankMismatch {
            expected: folded.rank(),
            got: classes.rows(),
        });
    }
    let sub = SublatticeEmbedding::new(ambient.clone(), classes.to_z())?;

    let restricted = sub.restricted_gram().to_q();
    let shape = folded.gram();
    let scale = &restricted[(0, 0)] / &shape[(0, 0)];
    if !scale.is_negative() {
        return Err(Error::GramScaleMismatch(String::from(component.name())));
    }
    for i in 0..folded.rank() {
        for j in 0..folded.rank() {
            if restricted[(i, j)] != &scale * &shape[(i, j)] {
                return Err(Error::GramScaleMismatch(String::from(component.name())));
            }
        }
    }

    if let Some(covectors) = embedding.covectors() {
        if covectors.rows() != folded.rank() {
            return Err(Error::RankMismatch {
                expected: folded.rank(),
                got: covectors.rows(),
            });
        }
        if covectors.cols() != ambient.rank() {
            return Err(Error::RankMismatch {
                expected: ambient.rank(),
                got: covectors.cols(),
            });
        }
    }
    Ok(sub)
}

/// Coroot functionals derived from the classes themselves.
fn derived_covectors(ambient: &BilinearLattice, classes: &IMat) -> Result<ZMat> {
    let rows: Vec<Vec<BigInt>> = (0..classes.rows())
        .map(|j| coroot_covector(ambient, classes.row(j)))
        .collect::<Result<_>>()?;
    Ok(ZMat::from_rows(rows))
}

/// Order of the group generated by `gens` inside the integer matrices,
/// by breadth-first closure, stopping early once `expected` is exceeded.
fn closure_order(n: usize, gens: &[IMat], expected: u128) -> u128 {
    let mut seen = BTreeSet::new();
    seen.insert(IMat::identity(n));
    let mut frontier = vec![IMat::identity(n)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let p = s.mul(g);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        if seen.len() as u128 > expected {
            return seen.len() as u128;
        }
        frontier = next;
    }
    seen.len() as u128
}
