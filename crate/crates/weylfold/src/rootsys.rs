//! Root systems over an exact Gram matrix: root enumeration, Weyl groups,
//! and fundamental groups.
//!
//! Vectors are integer coordinate rows over the simple-root basis. Matrices
//! act on column vectors; a Weyl element's column `i` is the image of the
//! `i`-th simple root.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::folding::FoldedRootSystem;
use crate::linalg::{IMat, QMat, ZMat};
use crate::types::TypeLabel;
use crate::{Error, Result};

/// Default ceiling on explicit Weyl element enumeration. Orders are always
/// computed; element lists are materialized only below the cap.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// A definite lattice with a distinguished simple-root basis whose Cartan
/// matrix is integral.
#[derive(Clone, Debug)]
pub struct RootLattice {
    rank: usize,
    gram: QMat,
    cartan: IMat,
}

impl RootLattice {
    /// Validate a Gram matrix: symmetric, positive or negative definite,
    /// with integral Cartan matrix `2(e_i, e_j)/(e_j, e_j)`.
    pub fn new(gram: QMat) -> Result<Self> {
        let rank = gram.rows();
        if rank == 0 {
            return Err(Error::DegenerateForm);
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        match gram.signature() {
            (p, 0, 0) if p == rank => {}
            (0, n, 0) if n == rank => {}
            _ => return Err(Error::NotDefinite),
        }
        let mut cartan = IMat::zeros(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                let two = BigRational::from_integer(BigInt::from(2));
                let x = two * &gram[(i, j)] / &gram[(j, j)];
                if !x.is_integer() {
                    return Err(Error::NonIntegralCartan { row: i, col: j });
                }
                cartan[(i, j)] = i64::try_from(&x.to_integer())
                    .map_err(|_| Error::Internal("Cartan entry overflow"))?;
            }
        }
        Ok(RootLattice { rank, gram, cartan })
    }

    /// Root lattice of a catalog type with its standard Gram matrix.
    pub fn from_type(label: TypeLabel) -> Self {
        Self::new(label.standard_gram()).expect("catalog Gram matrices are valid")
    }

    /// Root lattice of a folded diagram.
    pub fn from_folded(folded: &FoldedRootSystem) -> Self {
        Self::new(folded.gram().clone()).expect("folded Gram matrices are valid")
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Gram matrix of the simple-root basis.
    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    /// Cartan matrix in the column-normalized convention.
    pub fn cartan(&self) -> &IMat {
        &self.cartan
    }

    /// Pairing of two coordinate vectors under the Gram matrix.
    pub fn pair(&self, a: &[i64], b: &[i64]) -> BigRational {
        self.gram.pair_i64(a, b)
    }

    /// Simple reflection in `e_j`: identity except row `j`, where
    /// `r[(j, i)] = δ_ij - c[(i, j)]`.
    pub fn simple_reflection(&self, j: usize) -> IMat {
        assert!(j < self.rank, "reflection index out of range");
        let mut r = IMat::identity(self.rank);
        for i in 0..self.rank {
            r[(j, i)] = i64::from(i == j) - self.cartan[(i, j)];
        }
        r
    }

    /// Reflection in an arbitrary root `alpha` (integer coordinates). The
    /// reflection coefficients `2(e_i, α)/(α, α)` must be integers.
    pub fn reflection_in_root(&self, alpha: &[i64]) -> Result<IMat> {
        assert_eq!(alpha.len(), self.rank);
        let norm = self.pair(alpha, alpha);
        if norm.is_zero() {
            return Err(Error::IsotropicClass);
        }
        let mut coeff = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut basis = vec![0i64; self.rank];
            basis[i] = 1;
            let two = BigRational::from_integer(BigInt::from(2));
            let c = two * self.pair(&basis, alpha) / &norm;
            if !c.is_integer() {
                return Err(Error::NonIntegralReflection { witness: i });
            }
            coeff.push(
                i64::try_from(&c.to_integer())
                    .map_err(|_| Error::Internal("reflection coefficient overflow"))?,
            );
        }
        Ok(IMat::from_fn(self.rank, self.rank, |k, i| {
            i64::from(k == i) - coeff[i] * alpha[k]
        }))
    }

    /// All roots: the orbit of the simple basis under simple reflections,
    /// sorted lexicographically.
    pub fn enumerate_roots(&self) -> RootSet {
        let reflections: Vec<IMat> = (0..self.rank).map(|j| self.simple_reflection(j)).collect();
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..self.rank {
            let mut e = vec![0i64; self.rank];
            e[i] = 1;
            set.insert(e.clone());
            frontier.push(e);
        }
        while let Some(v) = frontier.pop() {
            for r in &reflections {
                let w = r.apply(&v);
                if set.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        RootSet {
            rank: self.rank,
            roots: set.into_iter().collect(),
        }
    }

    /// Order of the Weyl group by orbit-stabilizer recursion over the root
    /// set: `|W| = |W·α| · |W(α^⊥)|` for a root `α` of maximal norm.
    pub fn weyl_order(&self) -> Result<u128> {
        let roots = self.enumerate_roots();
        weyl_order_of(&roots.roots, &self.gram)
    }

    /// The Weyl group. The order is always computed by orbit-stabilizer
    /// recursion; when it is at most `cap`, the elements are also enumerated
    /// by closure and the two counts are required to agree.
    pub fn generate_weyl(&self, cap: u128) -> Result<WeylGroup> {
        let order = self.weyl_order()?;
        let generators: Vec<IMat> = (0..self.rank).map(|j| self.simple_reflection(j)).collect();
        let elements = if order <= cap {
            let mut set: BTreeSet<IMat> = BTreeSet::new();
            set.insert(IMat::identity(self.rank));
            let mut frontier = vec![IMat::identity(self.rank)];
            while let Some(g) = frontier.pop() {
                for s in &generators {
                    let h = s.mul(&g);
                    if set.insert(h.clone()) {
                        frontier.push(h);
                    }
                }
            }
            if set.len() as u128 != order {
                return Err(Error::Internal(
                    "Weyl closure disagrees with orbit-stabilizer order",
                ));
            }
            Some(set.into_iter().collect())
        } else {
            None
        };
        Ok(WeylGroup {
            rank: self.rank,
            order,
            generators,
            elements,
        })
    }

    /// Nontrivial invariant factors of the fundamental group (weight lattice
    /// over root lattice): the Smith normal form of the Cartan matrix.
    pub fn fundamental_group_of(&self) -> Vec<BigInt> {
        nontrivial_factors(self.cartan.to_z().snf().invariant_factors())
    }

    /// The dual root lattice: simple coroots `e_j^∨ = 2 e_j/(e_j, e_j)`.
    /// Its Cartan matrix is the transpose of this one.
    pub fn dual(&self) -> RootLattice {
        let two = BigRational::from_integer(BigInt::from(2));
        let gram = QMat::from_fn(self.rank, self.rank, |i, j| {
            &two * &two * &self.gram[(i, j)] / &self.gram[(i, i)] / &self.gram[(j, j)]
        });
        let dual = Self::new(gram).expect("dual of a valid root lattice is valid");
        debug_assert_eq!(dual.cartan, self.cartan.transpose());
        dual
    }
}

/// A finite set of roots in simple-root coordinates, sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSet {
    rank: usize,
    roots: Vec<Vec<i64>>,
}

impl RootSet {
    /// Build a set from raw coordinate vectors; sorts and deduplicates.
    pub fn from_roots(rank: usize, roots: Vec<Vec<i64>>) -> Result<RootSet> {
        if let Some(bad) = roots.iter().find(|r| r.len() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                got: bad.len(),
            });
        }
        let set: BTreeSet<Vec<i64>> = roots.into_iter().collect();
        Ok(RootSet {
            rank,
            roots: set.into_iter().collect(),
        })
    }

    /// Coordinate dimension.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Sorted root list.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Membership test.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.roots.binary_search_by(|r| r.as_slice().cmp(v)).is_ok()
    }

    /// Union with another set over the same coordinates.
    pub fn union(&self, other: &RootSet) -> Result<RootSet> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        let set: BTreeSet<Vec<i64>> = self
            .roots
            .iter()
            .chain(other.roots.iter())
            .cloned()
            .collect();
        Ok(RootSet {
            rank: self.rank,
            roots: set.into_iter().collect(),
        })
    }

    /// A root system is reduced when no root is twice another.
    pub fn is_reduced(&self) -> bool {
        !self.roots.iter().any(|r| {
            let doubled: Vec<i64> = r.iter().map(|x| 2 * x).collect();
            self.contains(&doubled)
        })
    }
}

/// A Weyl group in its reflection representation on the root lattice.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    order: u128,
    generators: Vec<IMat>,
    elements: Option<Vec<IMat>>,
}

impl WeylGroup {
    /// Coordinate dimension.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Group order.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Simple reflections.
    pub fn generators(&self) -> &[IMat] {
        &self.generators
    }

    /// Sorted element list, present when the order was within the
    /// enumeration cap.
    pub fn elements(&self) -> Option<&[IMat]> {
        self.elements.as_deref()
    }

    /// Membership test; `None` when elements were not enumerated.
    pub fn contains(&self, g: &IMat) -> Option<bool> {
        self.elements
            .as_ref()
            .map(|els| els.binary_search(g).is_ok())
    }
}

fn weyl_order_of(roots: &[Vec<i64>], gram: &QMat) -> Result<u128> {
    if roots.is_empty() {
        return Ok(1);
    }
    let alpha = roots
        .iter()
        .max_by(|a, b| {
            let na = gram.pair_i64(a, a).abs();
            let nb = gram.pair_i64(b, b).abs();
            na.cmp(&nb).then_with(|| a.cmp(b))
        })
        .unwrap()
        .clone();

    let two = BigRational::from_integer(BigInt::from(2));
    let mut orbit: BTreeSet<Vec<i64>> = BTreeSet::new();
    orbit.insert(alpha.clone());
    let mut frontier = vec![alpha.clone()];
    while let Some(v) = frontier.pop() {
        for r in roots {
            let c = &two * gram.pair_i64(&v, r) / gram.pair_i64(r, r);
            if !c.is_integer() {
                return Err(Error::NonIntegralReflection { witness: 0 });
            }
            let c = i64::try_from(&c.to_integer())
                .map_err(|_| Error::Internal("reflection coefficient overflow"))?;
            let w: Vec<i64> = v.iter().zip(r).map(|(&vi, &ri)| vi - c * ri).collect();
            if orbit.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }

    let perp: Vec<Vec<i64>> = roots
        .iter()
        .filter(|r| gram.pair_i64(r, &alpha).is_zero())
        .cloned()
        .collect();
    let sub = weyl_order_of(&perp, gram)?;
    (orbit.len() as u128)
        .checked_mul(sub)
        .ok_or(Error::Internal("Weyl order overflow"))
}

fn nontrivial_factors(factors: Vec<BigInt>) -> Vec<BigInt> {
    use num_traits::One;
    factors.into_iter().filter(|f| !f.is_one()).collect()
}

/// Fundamental group of a sublattice pair: `lattice_rows` spans `L`,
/// `coroot_rows` spans `L^∨`, both as rows over ambient coordinates with
/// Gram matrix `pairing`. Requires equal rational spans and an integral
/// pairing matrix `(λ_i, d_j)`; returns the nontrivial invariant factors of
/// `Hom(L^∨, ℤ)/L`.
pub fn fundamental_group(
    lattice_rows: &QMat,
    coroot_rows: &QMat,
    pairing: &QMat,
) -> Result<Vec<BigInt>> {
    let k = lattice_rows.rows();
    if coroot_rows.rows() != k {
        return Err(Error::SpanMismatch);
    }
    if lattice_rows.cols() != pairing.rows() || coroot_rows.cols() != pairing.rows() {
        return Err(Error::RankMismatch {
            expected: pairing.rows(),
            got: lattice_rows.cols(),
        });
    }
    let stacked = lattice_rows.vstack(coroot_rows);
    if lattice_rows.rank() != k || coroot_rows.rank() != k || stacked.rank() != k {
        return Err(Error::SpanMismatch);
    }
    let b = lattice_rows.mul(pairing).mul(&coroot_rows.transpose());
    for i in 0..k {
        for j in 0..k {
            if !b[(i, j)].is_integer() {
                return Err(Error::NonIntegralPairing { row: i, col: j });
            }
        }
    }
    let bz: ZMat = b.to_z().unwrap();
    Ok(nontrivial_factors(bz.snf().invariant_factors()))
}
