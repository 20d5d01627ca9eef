//! Integral bilinear lattices: reflections, saturations, orthogonal
//! complements, discriminants, the three-quotient flag identity, and the
//! coefficient-form filter for Galois candidates.
//!
//! Vectors are integer coordinate rows over a fixed ambient basis; matrices
//! act on column vectors. Coroot functionals ("covectors") are integer rows
//! acting by the ordinary dot product.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{IMat, QMat, ZMat};
use crate::{Error, Result};

/// A free abelian group with an integral symmetric bilinear form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearLattice {
    rank: usize,
    gram: ZMat,
    signature: (usize, usize),
}

impl BilinearLattice {
    /// Validate a symmetric integer Gram matrix. Degenerate forms are
    /// accepted here; operations that need nondegeneracy check it themselves.
    pub fn new(gram: ZMat) -> Result<Self> {
        let rank = gram.rows();
        if gram.cols() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: gram.cols(),
            });
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        let (p, q, _) = gram.to_q().signature();
        Ok(BilinearLattice {
            rank,
            gram,
            signature: (p, q),
        })
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Gram matrix.
    pub fn gram(&self) -> &ZMat {
        &self.gram
    }

    /// Signature `(p, q)`; `p + q < rank` exactly when the form is
    /// degenerate.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    /// Whether the form is nondegenerate.
    pub fn is_nondegenerate(&self) -> bool {
        self.signature.0 + self.signature.1 == self.rank
    }

    /// Determinant of the Gram matrix.
    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    /// Pairing of two coordinate vectors.
    pub fn pair(&self, a: &[i64], b: &[i64]) -> BigInt {
        assert_eq!(a.len(), self.rank);
        assert_eq!(b.len(), self.rank);
        let mut acc = BigInt::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc += &self.gram[(i, j)] * BigInt::from(ai) * BigInt::from(bj);
            }
        }
        acc
    }

    /// Self-pairing of a vector.
    pub fn norm(&self, a: &[i64]) -> BigInt {
        self.pair(a, a)
    }

    /// Whether `m` preserves the form: `mᵀ · gram · m = gram`.
    pub fn is_isometry(&self, m: &IMat) -> bool {
        let mz = m.to_z();
        mz.transpose().mul(&self.gram).mul(&mz) == self.gram
    }

    /// Reflection in a non-isotropic class: `x ↦ x - 2(x,e)/(e,e) · e`.
    /// Fails unless the image of every basis vector stays integral; the
    /// witness of the first failure is reported. The matrix is unchanged
    /// under rescaling of `e`.
    pub fn bb_reflection(&self, e: &[i64]) -> Result<IMat> {
        assert_eq!(e.len(), self.rank);
        let norm = self.norm(e);
        if norm.is_zero() {
            return Err(Error::IsotropicClass);
        }
        let mut columns = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut basis = vec![0i64; self.rank];
            basis[i] = 1;
            let c = BigRational::new(BigInt::from(2) * self.pair(&basis, e), norm.clone());
            let mut column = Vec::with_capacity(self.rank);
            for (k, &ek) in e.iter().enumerate() {
                let displacement = &c * BigRational::from_integer(ek.into());
                if !displacement.is_integer() {
                    return Err(Error::NonIntegralReflection { witness: i });
                }
                let entry = BigInt::from(i64::from(k == i)) - displacement.to_integer();
                column.push(
                    i64::try_from(&entry)
                        .map_err(|_| Error::Internal("reflection entry overflow"))?,
                );
            }
            columns.push(column);
        }
        Ok(IMat::from_fn(self.rank, self.rank, |k, i| columns[i][k]))
    }

    /// Nontrivial invariant factors of the discriminant group `Λ*/Λ`.
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>> {
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        Ok(nontrivial(self.gram.snf().invariant_factors()))
    }
}

/// Definiteness classification of a symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Definiteness {
    /// All nonzero vectors have positive self-pairing.
    Positive,
    /// All nonzero vectors have negative self-pairing.
    Negative,
    /// Both signs occur.
    Indefinite,
    /// Some nonzero vector pairs to zero with everything.
    Degenerate,
}

/// A finite-rank sublattice given by independent basis rows in ambient
/// coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SublatticeEmbedding {
    ambient: BilinearLattice,
    basis: ZMat,
}

impl SublatticeEmbedding {
    /// Validate: basis rows live in the ambient and are linearly
    /// independent over the rationals.
    pub fn new(ambient: BilinearLattice, basis: ZMat) -> Result<Self> {
        if basis.cols() != ambient.rank() {
            return Err(Error::RankMismatch {
                expected: ambient.rank(),
                got: basis.cols(),
            });
        }
        if basis.to_q().rank() != basis.rows() {
            return Err(Error::SpanMismatch);
        }
        Ok(SublatticeEmbedding { ambient, basis })
    }

    /// Convenience constructor from row vectors of machine integers.
    pub fn from_rows(ambient: BilinearLattice, rows: Vec<Vec<i64>>) -> Result<Self> {
        let basis = ZMat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        );
        Self::new(ambient, basis)
    }

    /// The ambient lattice.
    pub fn ambient(&self) -> &BilinearLattice {
        &self.ambient
    }

    /// Basis rows in ambient coordinates.
    pub fn basis(&self) -> &ZMat {
        &self.basis
    }

    /// Rank of the sublattice.
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Gram matrix of the basis under the ambient form.
    pub fn restricted_gram(&self) -> ZMat {
        self.basis
            .mul(self.ambient.gram())
            .mul(&self.basis.transpose())
    }

    /// Whether the sublattice equals its saturation.
    pub fn is_saturated(&self) -> bool {
        saturation_index(self).is_one()
    }

    /// Nontrivial invariant factors of the discriminant group of the
    /// restricted form, cross-checked against its determinant.
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>> {
        let g = self.restricted_gram();
        let det = g.det();
        if det.is_zero() {
            return Err(Error::DegenerateForm);
        }
        let factors = g.snf().invariant_factors();
        let product: BigInt = factors.iter().product();
        if product != det.abs() {
            return Err(Error::Internal(
                "discriminant order disagrees with determinant",
            ));
        }
        Ok(nontrivial(factors))
    }
}

/// Index-aware saturation: the smallest saturated sublattice with the same
/// rational span, plus the index of the original inside it.
pub struct Saturation {
    /// The saturated sublattice.
    pub sublattice: SublatticeEmbedding,
    /// Index `[saturation : original]`, the product of the invariant
    /// factors of the original basis matrix.
    pub index: BigInt,
}

/// Saturate a sublattice: double integer kernel of the basis matrix.
pub fn saturation(sub: &SublatticeEmbedding) -> SublatticeEmbedding {
    let basis = sub.basis().kernel_basis().kernel_basis();
    debug_assert_eq!(basis.rows(), sub.rank());
    SublatticeEmbedding::new(sub.ambient().clone(), basis)
        .expect("saturation preserves rank and ambient")
}

/// Index of a sublattice inside its saturation.
pub fn saturation_index(sub: &SublatticeEmbedding) -> BigInt {
    sub.basis().snf().invariant_factors().iter().product()
}

/// Saturation together with its index.
pub fn saturation_with_index(sub: &SublatticeEmbedding) -> Saturation {
    Saturation {
        sublattice: saturation(sub),
        index: saturation_index(sub),
    }
}

/// The saturated sublattice of all ambient vectors orthogonal to `sub`.
/// Requires a nondegenerate ambient form.
pub fn orthogonal_complement(sub: &SublatticeEmbedding) -> Result<SublatticeEmbedding> {
    if !sub.ambient().is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let basis = sub.basis().mul(sub.ambient().gram()).kernel_basis();
    SublatticeEmbedding::new(sub.ambient().clone(), basis)
}

/// Exact definiteness classification of the restricted form.
pub fn definiteness(sub: &SublatticeEmbedding) -> Definiteness {
    let (p, q, z) = sub.restricted_gram().to_q().signature();
    if z > 0 {
        Definiteness::Degenerate
    } else if q == 0 {
        Definiteness::Positive
    } else if p == 0 {
        Definiteness::Negative
    } else {
        Definiteness::Indefinite
    }
}

/// The class a reflection uses, and its displacement coefficient for `x`:
/// `-2(x, ẽ)/(ẽ, ẽ)` where `ẽ = 2e` for the middle orbit of an even chain
/// and `ẽ = e` otherwise. Doubling the class halves the coefficient, so the
/// reflection matrix itself is unchanged.
pub fn scaled_reflection_coefficient(
    amb: &BilinearLattice,
    e: &[i64],
    x: &[i64],
    is_middle_a2k: bool,
) -> Result<BigRational> {
    let class: Vec<i64> = if is_middle_a2k {
        e.iter()
            .map(|&v| {
                v.checked_mul(2)
                    .ok_or(Error::Internal("class coordinate overflow"))
            })
            .collect::<Result<_>>()?
    } else {
        e.to_vec()
    };
    let norm = amb.norm(&class);
    if norm.is_zero() {
        return Err(Error::IsotropicClass);
    }
    Ok(BigRational::new(
        BigInt::from(-2) * amb.pair(x, &class),
        norm,
    ))
}

/// Report of the three-quotient flag identity
/// `|L^∨/Λ^∨| · |L/Λ| · |L*/L^∨| = |Π|`.
#[derive(Clone, Debug)]
pub struct FlagReport {
    /// `|L^∨/Λ^∨|`: saturation index of the coroot covector lattice.
    pub coroot_index: BigInt,
    /// `|L/Λ|`: saturation index of the class lattice.
    pub class_index: BigInt,
    /// `|L*/L^∨|`: index of the saturated coroot lattice in the dual of the
    /// saturated class lattice.
    pub dual_index: BigInt,
    /// Product of the three quotient orders.
    pub product: BigInt,
    /// The expected fundamental group order.
    pub pi_order: BigInt,
    /// Whether the product equals `pi_order`.
    pub holds: bool,
}

impl FlagReport {
    /// The quotient orders in identity order.
    pub fn triple(&self) -> (BigInt, BigInt, BigInt) {
        (
            self.coroot_index.clone(),
            self.class_index.clone(),
            self.dual_index.clone(),
        )
    }
}

/// Check the flag identity for a class lattice `Λ` (rows of `classes`) and
/// its coroot lattice `Λ^∨` given by integer covector rows (functionals
/// `x ↦ -2(x,e)/(e,e)` in the reduced case). Both must have full row rank
/// and equal rank; the evaluation matrix of saturated covectors against
/// saturated classes must be nondegenerate.
pub fn flag_identity_check(
    classes: &SublatticeEmbedding,
    coroot_covectors: &ZMat,
    pi_order: &BigInt,
) -> Result<FlagReport> {
    let k = classes.rank();
    if coroot_covectors.rows() != k {
        return Err(Error::RankMismatch {
            expected: k,
            got: coroot_covectors.rows(),
        });
    }
    if coroot_covectors.cols() != classes.ambient().rank() {
        return Err(Error::RankMismatch {
            expected: classes.ambient().rank(),
            got: coroot_covectors.cols(),
        });
    }
    if coroot_covectors.to_q().rank() != k {
        return Err(Error::SpanMismatch);
    }

    let class_index = saturation_index(classes);
    let class_sat = saturation(classes);

    let coroot_index: BigInt = coroot_covectors.snf().invariant_factors().iter().product();
    let coroot_sat = coroot_covectors.kernel_basis().kernel_basis();

    // L* in saturated-covector coordinates: y with y · (S·Bᵀ) integral
    let eval = coroot_sat.mul(&class_sat.basis().transpose());
    let dual_index = eval.det().abs();
    if dual_index.is_zero() {
        return Err(Error::DegenerateForm);
    }

    let product = &coroot_index * &class_index * &dual_index;
    let holds = product == *pi_order;
    Ok(FlagReport {
        coroot_index,
        class_index,
        dual_index,
        product,
        pi_order: pi_order.clone(),
        holds,
    })
}

/// An ambient integer matrix to be screened by [`verify_galois_form`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsometryCandidate {
    /// Matrix acting on ambient column vectors.
    pub matrix: IMat,
}

/// Report of the four-part Galois-candidate screen.
#[derive(Clone, Debug)]
pub struct GaloisFormReport {
    /// (i) `M - I = Eᵀ·A·Φ` is exactly solvable.
    pub has_coefficient_form: bool,
    /// The coefficient matrix `A` when the form is solvable.
    pub coefficients: Option<QMat>,
    /// (i) all coefficients are integers.
    pub coefficients_integral: bool,
    /// (ii) all coefficients are non-negative.
    pub coefficients_nonnegative: bool,
    /// (iii) the candidate preserves the ambient Gram matrix.
    pub gram_preserved: bool,
    /// (iv) the candidate fixes the orthogonal complement of the class span
    /// pointwise (computed directly from the matrix).
    pub fixes_complement: bool,
    /// (iv) the candidate acts trivially on the fundamental group
    /// `Λ*/Λ^∨` (computed directly from the matrix).
    pub trivial_on_fundamental_group: bool,
}

impl GaloisFormReport {
    /// Whether every check passed.
    pub fn passes(&self) -> bool {
        self.has_coefficient_form
            && self.coefficients_integral
            && self.coefficients_nonnegative
            && self.gram_preserved
            && self.fixes_complement
            && self.trivial_on_fundamental_group
    }

    /// The coefficients as integers, when present and integral.
    pub fn coefficients_z(&self) -> Option<ZMat> {
        self.coefficients.as_ref().and_then(QMat::to_z)
    }
}

/// Screen a candidate against the coefficient form
/// `M = I + Σ a_ij e_i ⊗ φ_j` over the classes of `sub` with coroot
/// covectors `covectors`: solvability and integrality of `A`, its
/// non-negativity, Gram preservation, and the two direct actions (pointwise
/// on the class-span complement, trivially on `Λ*/Λ^∨`).
pub fn verify_galois_form(
    sub: &SublatticeEmbedding,
    covectors: &ZMat,
    candidate: &IsometryCandidate,
) -> Result<GaloisFormReport> {
    let n = sub.ambient().rank();
    let k = sub.rank();
    let m = &candidate.matrix;
    if m.rows() != n || m.cols() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: m.rows(),
        });
    }
    if covectors.rows() != k || covectors.cols() != n {
        return Err(Error::RankMismatch {
            expected: k,
            got: covectors.rows(),
        });
    }
    if covectors.to_q().rank() != k {
        return Err(Error::SpanMismatch);
    }

    let gram_preserved = sub.ambient().is_isometry(m);

    let mq = m.to_q();
    let diff = mq.sub(&QMat::identity(n));
    let e_t = sub.basis().to_q().transpose();
    let phi = covectors.to_q();

    // M - I = Eᵀ·A·Φ, solved as EᵀX = M - I, then A·Φ = X
    let mut coefficients = None;
    if let Some(x) = e_t.solve(&diff) {
        if let Some(a_t) = phi.transpose().solve(&x.transpose()) {
            coefficients = Some(a_t.transpose());
        }
    }
    let has_coefficient_form = coefficients.is_some();
    let coefficients_integral = coefficients.as_ref().is_some_and(QMat::is_integral);
    let coefficients_nonnegative = coefficients.as_ref().is_some_and(|a| {
        (0..k).all(|i| (0..k).all(|j| !a[(i, j)].is_negative()))
    });

    let complement = orthogonal_complement(sub)?;
    let moved = diff.mul(&complement.basis().to_q().transpose());
    let fixes_complement =
        (0..moved.rows()).all(|i| (0..moved.cols()).all(|j| moved[(i, j)].is_zero()));

    // action on Λ*/Λ^∨: the dual basis row s is the s-th row of P⁻¹Φ with
    // P = Φ·Eᵀ; its image under M must shift by a ℤ-row-combination of P
    let p = phi.mul(&e_t);
    let p_inv = p.inverse().ok_or(Error::DegenerateForm)?;
    let dual_basis = p_inv.mul(&phi);
    let shifted = dual_basis.mul(&diff).mul(&e_t).mul(&p_inv);
    let trivial_on_fundamental_group = shifted.is_integral();

    Ok(GaloisFormReport {
        has_coefficient_form,
        coefficients,
        coefficients_integral,
        coefficients_nonnegative,
        gram_preserved,
        fixes_complement,
        trivial_on_fundamental_group,
    })
}

/// Report of an orthogonal direct-sum test `ambient = sub ⊕ sub⊥`.
#[derive(Clone, Debug)]
pub struct SplitReport {
    /// The orthogonal complement.
    pub complement: SublatticeEmbedding,
    /// Order of the glue group `ambient/(sub ⊕ sub⊥)`.
    pub glue_order: BigInt,
    /// Whether the glue group is trivial.
    pub splits: bool,
    /// Nontrivial discriminant invariant factors of the sublattice.
    pub sub_discriminant: Vec<BigInt>,
    /// Nontrivial discriminant invariant factors of the complement.
    pub complement_discriminant: Vec<BigInt>,
}

/// Test whether a saturated nondegenerate sublattice splits off as an
/// orthogonal direct summand; the glue order is the index of
/// `sub ⊕ sub⊥` in the ambient lattice.
pub fn direct_sum_split(sub: &SublatticeEmbedding) -> Result<SplitReport> {
    if !sub.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let sub_discriminant = sub.discriminant_group()?;
    let complement = orthogonal_complement(sub)?;
    let complement_discriminant = complement.discriminant_group()?;
    let stacked = sub.basis().vstack(complement.basis());
    if stacked.rows() != sub.ambient().rank() {
        return Err(Error::DegenerateForm);
    }
    let glue_order = stacked.det().abs();
    if glue_order.is_zero() {
        return Err(Error::Internal(
            "independent summands stacked to a singular matrix",
        ));
    }

    let d_sub = sub.restricted_gram().det().abs();
    let d_comp = complement.restricted_gram().det().abs();
    let d_amb = sub.ambient().det().abs();
    if d_sub * d_comp != &glue_order * &glue_order * d_amb {
        return Err(Error::Internal("glue order fails determinant bookkeeping"));
    }

    let splits = glue_order.is_one();
    Ok(SplitReport {
        complement,
        glue_order,
        splits,
        sub_discriminant,
        complement_discriminant,
    })
}

/// Coroot covector of a class: the integer row `x ↦ -2(x,e)/(e,e)`.
pub fn coroot_covector(amb: &BilinearLattice, e: &[i64]) -> Result<Vec<BigInt>> {
    let norm = amb.norm(e);
    if norm.is_zero() {
        return Err(Error::IsotropicClass);
    }
    let mut row = Vec::with_capacity(amb.rank());
    for i in 0..amb.rank() {
        let mut basis = vec![0i64; amb.rank()];
        basis[i] = 1;
        let v = BigRational::new(BigInt::from(-2) * amb.pair(e, &basis), norm.clone());
        if !v.is_integer() {
            return Err(Error::NonIntegralReflection { witness: i });
        }
        row.push(v.to_integer());
    }
    Ok(row)
}

fn nontrivial(factors: Vec<BigInt>) -> Vec<BigInt> {
    factors.into_iter().filter(|f| !f.is_one()).collect()
}
