//! Folding a simply laced diagram by a group of diagram automorphisms.
//!
//! Each orbit of simple roots is averaged to one folded simple root
//! `e = (1/|O|) Σ_{f ∈ O} f`. The folded Gram matrix, Cartan matrix, and
//! catalog type are computed exactly; the Cartan matrix is additionally
//! cross-checked against the orbit-sum closed form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dynkin::SimplyLacedDiagram;
use crate::linalg::{IMat, QMat};
use crate::perm::Perm;
use crate::types::{all_labels_up_to, TypeLabel};
use crate::{Error, Result};

/// How an orbit of simple roots sits inside the diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitType {
    /// Pairwise non-adjacent nodes; folded norm `2/|O|`.
    Free,
    /// Two adjacent swapped nodes (the middle pair of an even chain);
    /// folded norm `1/2`.
    AdjacentPair,
}

/// One orbit of the folding group on diagram nodes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitInfo {
    /// Member nodes, sorted ascending.
    pub nodes: Vec<usize>,
    /// Adjacency classification.
    pub orbit_type: OrbitType,
}

/// Result of folding a simply laced diagram by an automorphism subgroup.
#[derive(Clone, Debug)]
pub struct FoldedRootSystem {
    source: SimplyLacedDiagram,
    gamma: Vec<Perm>,
    orbits: Vec<OrbitInfo>,
    projection: QMat,
    gram: QMat,
    cartan: IMat,
    folded_type: TypeLabel,
}

impl FoldedRootSystem {
    /// Source diagram.
    pub fn source(&self) -> &SimplyLacedDiagram {
        &self.source
    }

    /// All elements of the folding subgroup, sorted.
    pub fn gamma(&self) -> &[Perm] {
        &self.gamma
    }

    /// Order of the folding subgroup.
    pub fn gamma_order(&self) -> usize {
        self.gamma.len()
    }

    /// Orbits, sorted by minimum member.
    pub fn orbits(&self) -> &[OrbitInfo] {
        &self.orbits
    }

    /// Folded rank (number of orbits).
    pub fn rank(&self) -> usize {
        self.orbits.len()
    }

    /// Projection matrix: column `j` expresses the folded simple root `e_j`
    /// in source simple-root coordinates.
    pub fn projection(&self) -> &QMat {
        &self.projection
    }

    /// Folded Gram matrix `(e_i, e_j)`.
    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    /// Folded Cartan matrix, `c[(i, j)] = 2(e_i, e_j)/(e_j, e_j)`.
    pub fn cartan(&self) -> &IMat {
        &self.cartan
    }

    /// Recognized catalog type of the folded Cartan matrix.
    pub fn folded_type(&self) -> TypeLabel {
        self.folded_type
    }

    /// Whether some orbit is an adjacent pair. In that case the plain folded
    /// basis and its rescaling by [`Self::rescaled_basis`] carry the two
    /// dual reduced root systems inside one non-reduced one.
    pub fn has_adjacent_orbit(&self) -> bool {
        self.orbits
            .iter()
            .any(|o| o.orbit_type == OrbitType::AdjacentPair)
    }

    /// Gram matrix, Cartan matrix, and type after doubling the basis vectors
    /// of every adjacent-pair orbit. `None` when no orbit is an adjacent
    /// pair. The doubled basis spans the same lattice rationally; its type
    /// is the dual of the plain folded type.
    pub fn rescaled_basis(&self) -> Option<(QMat, IMat, TypeLabel)> {
        if !self.has_adjacent_orbit() {
            return None;
        }
        let r = self.rank();
        let scale = |k: usize| -> BigInt {
            if self.orbits[k].orbit_type == OrbitType::AdjacentPair {
                BigInt::from(2)
            } else {
                BigInt::one()
            }
        };
        let gram = QMat::from_fn(r, r, |i, j| {
            &self.gram[(i, j)] * BigRational::from_integer(scale(i) * scale(j))
        });
        let cartan = cartan_from_gram(&gram).expect("rescaled Cartan matrix stays integral");
        let label = recognize_type(&cartan).expect("rescaled Cartan matrix stays finite type");
        Some((gram, cartan, label))
    }
}

/// Fold `diagram` by the subgroup generated by `gamma_gens`. Generators must
/// be diagram automorphisms; the empty list gives the trivial fold.
pub fn fold(diagram: &SimplyLacedDiagram, gamma_gens: &[Perm]) -> Result<FoldedRootSystem> {
    let aut = diagram.automorphism_group();
    let gamma = aut.subgroup(gamma_gens)?;
    let orbits = orbit_infos(diagram, &gamma)?;
    let n = diagram.rank();
    let r = orbits.len();

    let projection = QMat::from_fn(n, r, |i, j| {
        if orbits[j].nodes.contains(&i) {
            BigRational::new(BigInt::one(), BigInt::from(orbits[j].nodes.len() as i64))
        } else {
            BigRational::zero()
        }
    });
    let source_gram = diagram.cartan_matrix().to_q();
    let gram = projection.transpose().mul(&source_gram).mul(&projection);

    let cartan = cartan_from_gram(&gram)?;
    for i in 0..r {
        for j in 0..r {
            let closed = coroot_pairing_closed_form(diagram, &orbits, i, j);
            if closed != cartan[(i, j)] {
                return Err(Error::Internal(
                    "folded Cartan disagrees with orbit-sum form",
                ));
            }
        }
    }

    let folded_type = recognize_type(&cartan)?;
    Ok(FoldedRootSystem {
        source: diagram.clone(),
        gamma,
        orbits,
        projection,
        gram,
        cartan,
        folded_type,
    })
}

fn orbit_infos(diagram: &SimplyLacedDiagram, gamma: &[Perm]) -> Result<Vec<OrbitInfo>> {
    let orbits = Perm::orbits_of(diagram.rank(), gamma);
    orbits
        .into_iter()
        .map(|nodes| {
            let adjacent_pairs: usize = nodes
                .iter()
                .enumerate()
                .map(|(k, &a)| {
                    nodes[k + 1..]
                        .iter()
                        .filter(|&&b| diagram.adjacent(a, b))
                        .count()
                })
                .sum();
            let orbit_type = match (nodes.len(), adjacent_pairs) {
                (_, 0) => OrbitType::Free,
                (2, 1) => OrbitType::AdjacentPair,
                _ => return Err(Error::Internal("orbit with unexpected adjacency pattern")),
            };
            Ok(OrbitInfo { nodes, orbit_type })
        })
        .collect()
}

/// Cartan entry `e_j^∨(e_i)` by the orbit-sum closed form: the pairing of a
/// fixed representative of orbit `i` against all members of orbit `j`,
/// doubled when orbit `j` is an adjacent pair.
pub fn coroot_pairing_closed_form(
    diagram: &SimplyLacedDiagram,
    orbits: &[OrbitInfo],
    i: usize,
    j: usize,
) -> i64 {
    let c = diagram.cartan_matrix();
    let rep = orbits[i].nodes[0];
    let sum: i64 = orbits[j].nodes.iter().map(|&b| c[(rep, b)]).sum();
    match orbits[j].orbit_type {
        OrbitType::Free => sum,
        OrbitType::AdjacentPair => 2 * sum,
    }
}

/// Cartan matrix of a basis with Gram matrix `gram`.
fn cartan_from_gram(gram: &QMat) -> Result<IMat> {
    let r = gram.rows();
    let mut c = IMat::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            let two = BigRational::from_integer(BigInt::from(2));
            let x = two * &gram[(i, j)] / &gram[(j, j)];
            if !x.is_integer() {
                return Err(Error::NonIntegralCartan { row: i, col: j });
            }
            let v = x.to_integer();
            c[(i, j)] = i64::try_from(&v).map_err(|_| Error::Internal("Cartan entry overflow"))?;
        }
    }
    Ok(c)
}

/// Identify an integral Cartan matrix as a catalog type.
///
/// The matrix must be a connected finite-type Cartan matrix: diagonal 2,
/// non-positive off-diagonal, symmetric zero pattern, symmetrizable with
/// positive definite symmetrization. The catalog is searched in series order
/// A, B, C, D, E, F, G, first for an exact (identity relabeling) match, then
/// for a match up to node relabeling; the first hit names the type.
pub fn recognize_type(cartan: &IMat) -> Result<TypeLabel> {
    let n = cartan.rows();
    if n == 0 || cartan.cols() != n {
        return Err(Error::NotFiniteType("empty or non-square matrix"));
    }
    for i in 0..n {
        if cartan[(i, i)] != 2 {
            return Err(Error::NotFiniteType("diagonal entry differs from 2"));
        }
        for j in 0..n {
            if i != j && cartan[(i, j)] > 0 {
                return Err(Error::NotFiniteType("positive off-diagonal entry"));
            }
            if (cartan[(i, j)] == 0) != (cartan[(j, i)] == 0) {
                return Err(Error::NotFiniteType("asymmetric zero pattern"));
            }
        }
    }

    // symmetrize: propagate norms along edges, verify consistency on cycles
    let mut norm: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if norm[start].is_some() {
            continue;
        }
        norm[start] = Some(BigRational::from_integer(BigInt::from(2)));
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for j in 0..n {
                if i == j || cartan[(i, j)] == 0 {
                    continue;
                }
                let expected = norm[i].clone().unwrap()
                    * BigRational::new(BigInt::from(cartan[(j, i)]), BigInt::from(cartan[(i, j)]));
                match &norm[j] {
                    None => {
                        norm[j] = Some(expected);
                        frontier.push(j);
                    }
                    Some(have) if *have != expected => {
                        return Err(Error::NotFiniteType("not symmetrizable"));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let sym = QMat::from_fn(n, n, |i, j| {
        BigRational::from_integer(BigInt::from(cartan[(i, j)])) * norm[j].clone().unwrap()
    });
    if sym.signature() != (n, 0, 0) {
        return Err(Error::NotFiniteType(
            "symmetrization is not positive definite",
        ));
    }

    let mut reach = vec![false; n];
    reach[0] = true;
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for j in 0..n {
            if cartan[(i, j)] != 0 && !reach[j] {
                reach[j] = true;
                frontier.push(j);
            }
        }
    }
    if reach.iter().any(|r| !r) {
        return Err(Error::NotFiniteType("diagram is not connected"));
    }

    let candidates: Vec<TypeLabel> = all_labels_up_to(n)
        .into_iter()
        .filter(|l| l.rank == n)
        .collect();
    for &label in &candidates {
        if label.cartan() == *cartan {
            return Ok(label);
        }
    }
    for &label in &candidates {
        if permutation_match(&label.cartan(), cartan) {
            return Ok(label);
        }
    }
    Err(Error::Internal(
        "connected definite Cartan matrix missing from the catalog",
    ))
}

/// Whether some node relabeling carries `a` onto `b`.
fn permutation_match(a: &IMat, b: &IMat) -> bool {
    let n = a.rows();
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(a: &IMat, b: &IMat, assign: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = assign.len();
        if k == a.rows() {
            return true;
        }
        for v in 0..a.rows() {
            if used[v] {
                continue;
            }
            let ok =
                (0..k).all(|i| a[(i, k)] == b[(assign[i], v)] && a[(k, i)] == b[(v, assign[i])]);
            if ok {
                used[v] = true;
                assign.push(v);
                if extend(a, b, assign, used) {
                    return true;
                }
                assign.pop();
                used[v] = false;
            }
        }
        false
    }
    extend(a, b, &mut assign, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::TypeKind;

    fn diagram(s: &str) -> SimplyLacedDiagram {
        SimplyLacedDiagram::from_label(TypeLabel::parse(s).unwrap())
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn trivial_fold_is_identity() {
        let d = diagram("E6");
        let f = fold(&d, &[]).unwrap();
        assert_eq!(f.rank(), 6);
        assert_eq!(f.cartan(), &d.cartan_matrix());
        assert_eq!(f.folded_type(), d.label());
        assert!(!f.has_adjacent_orbit());
    }

    #[test]
    fn d4_full_triality_gives_g2() {
        let d = diagram("D4");
        let gens: Vec<Perm> = d
            .automorphism_group()
            .elements()
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect();
        let f = fold(&d, &gens).unwrap();
        assert_eq!(f.gamma_order(), 6);
        assert_eq!(f.rank(), 2);
        assert_eq!(f.orbits()[0].nodes, vec![0, 2, 3]);
        assert_eq!(f.orbits()[1].nodes, vec![1]);
        let expected_gram = QMat::from_rows(vec![
            vec![rat(2, 3), rat(-1, 1)],
            vec![rat(-1, 1), rat(2, 1)],
        ]);
        assert_eq!(f.gram(), &expected_gram);
        assert_eq!(f.cartan(), &IMat::from_rows(vec![vec![2, -1], vec![-3, 2]]));
        assert_eq!(f.folded_type(), TypeLabel::parse("G2").unwrap());
    }

    #[test]
    fn d4_cyclic_subgroup_also_gives_g2() {
        let d = diagram("D4");
        let rot = Perm::from_images(vec![2, 1, 3, 0]).unwrap();
        let f = fold(&d, &[rot]).unwrap();
        assert_eq!(f.gamma_order(), 3);
        assert_eq!(f.folded_type(), TypeLabel::parse("G2").unwrap());
    }

    #[test]
    fn d4_leaf_swap_gives_b3() {
        let d = diagram("D4");
        let swap = Perm::from_images(vec![0, 1, 3, 2]).unwrap();
        let f = fold(&d, &[swap]).unwrap();
        assert_eq!(f.rank(), 3);
        assert_eq!(
            f.cartan(),
            &IMat::from_rows(vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]])
        );
        assert_eq!(f.folded_type(), TypeLabel::parse("B3").unwrap());
    }

    #[test]
    fn a3_reversal_gives_c2() {
        let d = diagram("A3");
        let rev = Perm::from_images(vec![2, 1, 0]).unwrap();
        let f = fold(&d, &[rev]).unwrap();
        assert_eq!(f.cartan(), &IMat::from_rows(vec![vec![2, -1], vec![-2, 2]]));
        assert_eq!(f.folded_type(), TypeLabel::parse("C2").unwrap());
        assert!(!f.has_adjacent_orbit());
    }

    #[test]
    fn a4_reversal_gives_b2_with_adjacent_orbit() {
        let d = diagram("A4");
        let rev = Perm::from_images(vec![3, 2, 1, 0]).unwrap();
        let f = fold(&d, &[rev]).unwrap();
        assert_eq!(f.cartan(), &IMat::from_rows(vec![vec![2, -2], vec![-1, 2]]));
        assert_eq!(f.folded_type(), TypeLabel::parse("B2").unwrap());
        assert!(f.has_adjacent_orbit());
        assert_eq!(f.orbits()[1].orbit_type, OrbitType::AdjacentPair);
        let (_, cartan2, label2) = f.rescaled_basis().unwrap();
        assert_eq!(label2, TypeLabel::parse("C2").unwrap());
        assert_eq!(cartan2, IMat::from_rows(vec![vec![2, -1], vec![-2, 2]]));
    }

    #[test]
    fn a6_reversal_gives_b3_and_rescales_to_c3() {
        let d = diagram("A6");
        let rev = Perm::from_images(vec![5, 4, 3, 2, 1, 0]).unwrap();
        let f = fold(&d, &[rev]).unwrap();
        assert_eq!(f.folded_type(), TypeLabel::parse("B3").unwrap());
        let (_, cartan2, label2) = f.rescaled_basis().unwrap();
        assert_eq!(label2, TypeLabel::parse("C3").unwrap());
        assert_eq!(
            cartan2,
            IMat::from_rows(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]])
        );
    }

    #[test]
    fn a5_reversal_gives_c3() {
        let d = diagram("A5");
        let rev = Perm::from_images(vec![4, 3, 2, 1, 0]).unwrap();
        let f = fold(&d, &[rev]).unwrap();
        assert_eq!(f.folded_type(), TypeLabel::parse("C3").unwrap());
        assert!(!f.has_adjacent_orbit());
    }

    #[test]
    fn e6_involution_gives_f4() {
        let d = diagram("E6");
        let inv = Perm::from_images(vec![5, 1, 4, 3, 2, 0]).unwrap();
        let f = fold(&d, &[inv]).unwrap();
        assert_eq!(f.rank(), 4);
        assert_eq!(f.folded_type(), TypeLabel::parse("F4").unwrap());
    }

    #[test]
    fn d5_swap_gives_b4() {
        let d = diagram("D5");
        let swap = Perm::from_images(vec![0, 1, 2, 4, 3]).unwrap();
        let f = fold(&d, &[swap]).unwrap();
        assert_eq!(f.folded_type(), TypeLabel::parse("B4").unwrap());
    }

    #[test]
    fn fold_rejects_non_automorphism() {
        let d = diagram("A4");
        let bad = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        assert!(matches!(fold(&d, &[bad]), Err(Error::NotAnAutomorphism(_))));
    }

    #[test]
    fn recognize_rejects_malformed_input() {
        let not_two = IMat::from_rows(vec![vec![1, 0], vec![0, 2]]);
        assert!(matches!(
            recognize_type(&not_two),
            Err(Error::NotFiniteType(_))
        ));
        let positive = IMat::from_rows(vec![vec![2, 1], vec![1, 2]]);
        assert!(matches!(
            recognize_type(&positive),
            Err(Error::NotFiniteType(_))
        ));
        let asym_zero = IMat::from_rows(vec![vec![2, -1], vec![0, 2]]);
        assert!(matches!(
            recognize_type(&asym_zero),
            Err(Error::NotFiniteType(_))
        ));
        let affine = IMat::from_rows(vec![vec![2, -2], vec![-2, 2]]);
        assert!(matches!(
            recognize_type(&affine),
            Err(Error::NotFiniteType(
                "symmetrization is not positive definite"
            ))
        ));
        let disconnected = IMat::from_rows(vec![vec![2, 0], vec![0, 2]]);
        assert!(matches!(
            recognize_type(&disconnected),
            Err(Error::NotFiniteType("diagram is not connected"))
        ));
    }

    #[test]
    fn recognize_is_relabeling_invariant() {
        for s in ["A4", "B3", "C3", "D5", "F4", "G2", "E6"] {
            let label = TypeLabel::parse(s).unwrap();
            let c = label.cartan();
            let n = label.rank;
            let p = Perm::from_images((0..n).rev().collect()).unwrap();
            let relabeled = IMat::from_fn(n, n, |i, j| c[(p.apply(i), p.apply(j))]);
            assert_eq!(recognize_type(&relabeled).unwrap(), label, "{s}");
        }
    }

    #[test]
    fn recognize_prefers_exact_match_for_rank_two() {
        let b2 = TypeLabel::new(TypeKind::B, 2).unwrap();
        let c2 = TypeLabel::new(TypeKind::C, 2).unwrap();
        assert_eq!(recognize_type(&b2.cartan()).unwrap(), b2);
        assert_eq!(recognize_type(&c2.cartan()).unwrap(), c2);
    }
}
