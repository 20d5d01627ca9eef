//! The catalog of finite irreducible root-system types.
//!
//! Conventions, fixed once for the whole crate:
//! * Nodes are numbered along the chain, branch node carries the low chain
//!   index; for D and E the branch leaf is node 1 in external (1-based)
//!   numbering, node 1 here being index 1 of 0-based storage.
//! * Cartan matrices are column-normalized: `c[(i, j)] = 2(e_i, e_j)/(e_j, e_j)`,
//!   so `B` has its `-2` above the diagonal and `C` below.
//! * Standard Gram matrices give the first node norm 2.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::linalg::{IMat, QMat};
use crate::{Error, Result};

/// Series letter of a finite type.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TypeKind {
    /// A series (simply laced chain).
    A,
    /// B series (short last root).
    B,
    /// C series (long last root).
    C,
    /// D series (simply laced fork).
    D,
    /// E series (ranks 6, 7, 8).
    E,
    /// F4.
    F,
    /// G2.
    G,
}

impl TypeKind {
    /// Series letter.
    pub fn letter(self) -> char {
        match self {
            TypeKind::A => 'A',
            TypeKind::B => 'B',
            TypeKind::C => 'C',
            TypeKind::D => 'D',
            TypeKind::E => 'E',
            TypeKind::F => 'F',
            TypeKind::G => 'G',
        }
    }

    /// Whether all roots share one length.
    pub fn is_simply_laced(self) -> bool {
        matches!(self, TypeKind::A | TypeKind::D | TypeKind::E)
    }
}

/// A finite irreducible type such as `B3` or `E8`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TypeLabel {
    /// Series letter.
    pub kind: TypeKind,
    /// Rank.
    pub rank: usize,
}

impl TypeLabel {
    /// Validated constructor. Rank bounds: A ≥ 1, B ≥ 2, C ≥ 2, D ≥ 4,
    /// E ∈ {6, 7, 8}, F = 4, G = 2. Low-rank coincidences (B1 = A1, D3 = A3,
    /// and so on) are excluded so every label names exactly one type.
    pub fn new(kind: TypeKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            TypeKind::A => rank >= 1,
            TypeKind::B | TypeKind::C => rank >= 2,
            TypeKind::D => rank >= 4,
            TypeKind::E => (6..=8).contains(&rank),
            TypeKind::F => rank == 4,
            TypeKind::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { kind, rank })
        } else {
            Err(Error::InvalidRank {
                kind: kind.letter(),
                rank,
                reason: "rank outside the series",
            })
        }
    }

    /// Parse a label like `"A5"` or `"G2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('A') => TypeKind::A,
            Some('B') => TypeKind::B,
            Some('C') => TypeKind::C,
            Some('D') => TypeKind::D,
            Some('E') => TypeKind::E,
            Some('F') => TypeKind::F,
            Some('G') => TypeKind::G,
            _ => {
                return Err(Error::InvalidRank {
                    kind: '?',
                    rank: 0,
                    reason: "unknown series letter",
                })
            }
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidRank {
            kind: kind.letter(),
            rank: 0,
            reason: "bad rank digits",
        })?;
        Self::new(kind, rank)
    }

    /// Edges of the underlying Coxeter graph, each as `{i, j}` with `i < j`.
    fn edges(self) -> Vec<(usize, usize)> {
        let r = self.rank;
        match self.kind {
            TypeKind::A | TypeKind::B | TypeKind::C | TypeKind::F | TypeKind::G => {
                (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            TypeKind::D => {
                let mut e: Vec<_> = (0..r - 2).map(|i| (i, i + 1)).collect();
                e.push((r - 3, r - 1));
                e
            }
            TypeKind::E => {
                let mut e = vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)];
                if r >= 7 {
                    e.push((5, 6));
                }
                if r == 8 {
                    e.push((6, 7));
                }
                e
            }
        }
    }

    /// Catalog Cartan matrix in the crate convention.
    pub fn cartan(self) -> IMat {
        let r = self.rank;
        let mut c = IMat::identity(r);
        for i in 0..r {
            c[(i, i)] = 2;
        }
        for (i, j) in self.edges() {
            c[(i, j)] = -1;
            c[(j, i)] = -1;
        }
        match self.kind {
            TypeKind::B => c[(r - 2, r - 1)] = -2,
            TypeKind::C => c[(r - 1, r - 2)] = -2,
            TypeKind::F => c[(1, 2)] = -2,
            TypeKind::G => c[(1, 0)] = -3,
            _ => {}
        }
        c
    }

    /// Standard Gram matrix: first node norm 2, remaining norms propagated
    /// through the Cartan matrix.
    pub fn standard_gram(self) -> QMat {
        let r = self.rank;
        let c = self.cartan();
        let mut norm: Vec<Option<BigRational>> = vec![None; r];
        norm[0] = Some(BigRational::from_integer(BigInt::from(2)));
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for j in 0..r {
                if i != j && c[(i, j)] != 0 && norm[j].is_none() {
                    let ratio = BigRational::new(BigInt::from(c[(j, i)]), BigInt::from(c[(i, j)]));
                    norm[j] = Some(norm[i].clone().unwrap() * ratio);
                    frontier.push(j);
                }
            }
        }
        QMat::from_fn(r, r, |i, j| {
            let nj = norm[j].clone().expect("catalog diagram is connected");
            BigRational::from_integer(BigInt::from(c[(i, j)])) * nj
                / BigRational::from_integer(BigInt::from(2))
        })
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        let r = self.rank;
        match self.kind {
            TypeKind::A => fact(r + 1),
            TypeKind::B | TypeKind::C => (1u128 << r) * fact(r),
            TypeKind::D => (1u128 << (r - 1)) * fact(r),
            TypeKind::E => match r {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            TypeKind::F => 1_152,
            TypeKind::G => 12,
        }
    }

    /// Number of roots.
    pub fn root_count(self) -> usize {
        let r = self.rank;
        match self.kind {
            TypeKind::A => r * (r + 1),
            TypeKind::B | TypeKind::C => 2 * r * r,
            TypeKind::D => 2 * r * (r - 1),
            TypeKind::E => match r {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            TypeKind::F => 48,
            TypeKind::G => 12,
        }
    }

    /// Invariant factors of the fundamental group `P/Q` (weight lattice over
    /// root lattice), in divisibility order. Empty means trivial.
    pub fn pi_invariant_factors(self) -> Vec<u64> {
        let r = self.rank;
        match self.kind {
            TypeKind::A => vec![(r + 1) as u64],
            TypeKind::B | TypeKind::C => vec![2],
            TypeKind::D => {
                if r % 2 == 0 {
                    vec![2, 2]
                } else {
                    vec![4]
                }
            }
            TypeKind::E => match r {
                6 => vec![3],
                7 => vec![2],
                _ => vec![],
            },
            TypeKind::F | TypeKind::G => vec![],
        }
    }

    /// Langlands dual type: B and C swap, everything else is self-dual.
    pub fn dual(self) -> TypeLabel {
        let kind = match self.kind {
            TypeKind::B => TypeKind::C,
            TypeKind::C => TypeKind::B,
            k => k,
        };
        TypeLabel {
            kind,
            rank: self.rank,
        }
    }

    /// Whether two labels have equal Weyl groups as abstract groups given by
    /// their standard reflection representations (B and C of equal rank do).
    pub fn is_weyl_equal(self, other: TypeLabel) -> bool {
        self == other || self.dual() == other
    }
}

impl core::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

/// Every catalog label of rank at most `max_rank`, in series order A-G.
pub fn all_labels_up_to(max_rank: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for kind in [
        TypeKind::A,
        TypeKind::B,
        TypeKind::C,
        TypeKind::D,
        TypeKind::E,
        TypeKind::F,
        TypeKind::G,
    ] {
        for rank in 1..=max_rank {
            if let Ok(label) = TypeLabel::new(kind, rank) {
                out.push(label);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn rank_bounds() {
        assert!(TypeLabel::new(TypeKind::A, 1).is_ok());
        assert!(TypeLabel::new(TypeKind::A, 0).is_err());
        assert!(TypeLabel::new(TypeKind::B, 1).is_err());
        assert!(TypeLabel::new(TypeKind::D, 3).is_err());
        assert!(TypeLabel::new(TypeKind::E, 9).is_err());
        assert!(TypeLabel::new(TypeKind::F, 3).is_err());
        assert!(TypeLabel::new(TypeKind::G, 3).is_err());
    }

    #[test]
    fn parse_display_roundtrip() {
        for label in all_labels_up_to(8) {
            let s = alloc::format!("{label}");
            assert_eq!(TypeLabel::parse(&s).unwrap(), label);
        }
        assert!(TypeLabel::parse("H3").is_err());
        assert!(TypeLabel::parse("Bx").is_err());
    }

    #[test]
    fn fixed_cartan_matrices() {
        let g2 = TypeLabel::parse("G2").unwrap().cartan();
        assert_eq!(g2, IMat::from_rows(vec![vec![2, -1], vec![-3, 2]]));
        let b3 = TypeLabel::parse("B3").unwrap().cartan();
        assert_eq!(
            b3,
            IMat::from_rows(vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]])
        );
        let c3 = TypeLabel::parse("C3").unwrap().cartan();
        assert_eq!(c3, b3.transpose());
        let f4 = TypeLabel::parse("F4").unwrap().cartan();
        assert_eq!(
            f4,
            IMat::from_rows(vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ])
        );
    }

    #[test]
    fn cartan_determinant_matches_pi_order() {
        for label in all_labels_up_to(8) {
            let det = label.cartan().to_z().det();
            let pi: u64 = label.pi_invariant_factors().iter().product::<u64>().max(1);
            assert_eq!(det, num_bigint::BigInt::from(pi), "{label}");
        }
    }

    #[test]
    fn standard_gram_reproduces_cartan() {
        for label in all_labels_up_to(8) {
            let g = label.standard_gram();
            assert!(g.is_symmetric(), "{label}");
            let (pos, neg, zero) = g.signature();
            assert_eq!((pos, neg, zero), (label.rank, 0, 0), "{label}");
            let c = label.cartan();
            for i in 0..label.rank {
                for j in 0..label.rank {
                    let two = BigRational::from_integer(2.into());
                    let cij = two * &g[(i, j)] / &g[(j, j)];
                    assert!(cij.is_integer(), "{label}");
                    assert_eq!(
                        cij.to_integer(),
                        num_bigint::BigInt::from(c[(i, j)]),
                        "{label}"
                    );
                }
            }
        }
    }

    #[test]
    fn simply_laced_grams_equal_cartans() {
        for label in all_labels_up_to(8) {
            if label.kind.is_simply_laced() {
                let g = label.standard_gram();
                let c = label.cartan().to_q();
                assert_eq!(g, c, "{label}");
            }
        }
    }

    #[test]
    fn weyl_orders_and_root_counts() {
        let cases = [
            ("A1", 2u128, 2usize),
            ("A4", 120, 20),
            ("B2", 8, 8),
            ("C3", 48, 18),
            ("B4", 384, 32),
            ("D4", 192, 24),
            ("D5", 1920, 40),
            ("G2", 12, 12),
            ("F4", 1152, 48),
            ("E6", 51840, 72),
            ("E7", 2903040, 126),
            ("E8", 696729600, 240),
        ];
        for (s, order, roots) in cases {
            let label = TypeLabel::parse(s).unwrap();
            assert_eq!(label.weyl_order(), order, "{s}");
            assert_eq!(label.root_count(), roots, "{s}");
        }
    }

    #[test]
    fn duality() {
        let b5 = TypeLabel::parse("B5").unwrap();
        let c5 = TypeLabel::parse("C5").unwrap();
        assert_eq!(b5.dual(), c5);
        assert_eq!(c5.dual(), b5);
        assert!(b5.is_weyl_equal(c5));
        assert!(!b5.is_weyl_equal(TypeLabel::parse("D5").unwrap()));
        assert_eq!(
            TypeLabel::parse("E7").unwrap().dual(),
            TypeLabel::parse("E7").unwrap()
        );
    }

    #[test]
    fn gram_norms_match_length_conventions() {
        let b3 = TypeLabel::parse("B3").unwrap().standard_gram();
        assert_eq!(b3[(2, 2)], BigRational::one());
        let c3 = TypeLabel::parse("C3").unwrap().standard_gram();
        assert_eq!(c3[(2, 2)], BigRational::from_integer(4.into()));
        let g2 = TypeLabel::parse("G2").unwrap().standard_gram();
        assert_eq!(g2[(1, 1)], BigRational::from_integer(6.into()));
        assert!(!g2[(0, 1)].is_zero());
        assert!(g2[(0, 1)].is_negative());
    }
}
