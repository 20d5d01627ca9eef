//! Simply laced Dynkin diagrams and their automorphism groups.

use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::IMat;
use crate::perm::{all_perms, closure, Perm};
use crate::types::{TypeKind, TypeLabel};
use crate::{Error, Result};

/// A connected simply laced (A, D, or E) Dynkin diagram with the catalog
/// node numbering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplyLacedDiagram {
    label: TypeLabel,
    adjacency: IMat,
}

impl SimplyLacedDiagram {
    /// Build the diagram of a simply laced catalog type.
    pub fn new(kind: TypeKind, rank: usize) -> Result<Self> {
        if !kind.is_simply_laced() {
            return Err(Error::InvalidRank {
                kind: kind.letter(),
                rank,
                reason: "diagram folding starts from a simply laced type",
            });
        }
        let label = TypeLabel::new(kind, rank)?;
        Ok(Self::from_label(label))
    }

    /// Build from an already validated simply laced label.
    pub fn from_label(label: TypeLabel) -> Self {
        assert!(label.kind.is_simply_laced());
        let c = label.cartan();
        let adjacency = IMat::from_fn(label.rank, label.rank, |i, j| {
            if i != j && c[(i, j)] != 0 {
                1
            } else {
                0
            }
        });
        SimplyLacedDiagram { label, adjacency }
    }

    /// The catalog label.
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    /// Number of nodes.
    pub fn rank(&self) -> usize {
        self.label.rank
    }

    /// Whether nodes `i` and `j` are joined by an edge.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[(i, j)] != 0
    }

    /// Cartan matrix `2·I - adjacency`.
    pub fn cartan_matrix(&self) -> IMat {
        let n = self.rank();
        IMat::from_fn(
            n,
            n,
            |i, j| if i == j { 2 } else { -self.adjacency[(i, j)] },
        )
    }

    /// Whether `p` permutes the nodes preserving adjacency.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        let n = self.rank();
        p.degree() == n
            && (0..n).all(|i| {
                (i + 1..n).all(|j| self.adjacent(p.apply(i), p.apply(j)) == self.adjacent(i, j))
            })
    }

    /// The full automorphism group. Small ranks are brute-forced over all
    /// node permutations; larger ranks use the classified generators, checked
    /// against the diagram.
    pub fn automorphism_group(&self) -> DiagramAutGroup {
        let n = self.rank();
        let elements = if n <= 8 {
            all_perms(n)
                .into_iter()
                .filter(|p| self.is_automorphism(p))
                .collect()
        } else {
            let gens = self.classified_generators();
            debug_assert!(gens.iter().all(|g| self.is_automorphism(g)));
            closure(n, &gens)
        };
        let expected = match (self.label.kind, n) {
            (TypeKind::A, 1) => 1,
            (TypeKind::A, _) => 2,
            (TypeKind::D, 4) => 6,
            (TypeKind::D, _) => 2,
            (TypeKind::E, 6) => 2,
            _ => 1,
        };
        assert_eq!(
            elements.len(),
            expected,
            "automorphism count of {}",
            self.label
        );
        DiagramAutGroup {
            diagram: self.clone(),
            elements,
        }
    }

    /// Nontrivial automorphism generators known for each series.
    fn classified_generators(&self) -> Vec<Perm> {
        let n = self.rank();
        match self.label.kind {
            TypeKind::A if n >= 2 => {
                vec![Perm::from_images((0..n).rev().collect()).unwrap()]
            }
            TypeKind::D if n == 4 => {
                // all of Sym3 on the leaves {0, 2, 3}; generated by two swaps
                let mut s1: Vec<usize> = (0..4).collect();
                s1.swap(0, 2);
                let mut s2: Vec<usize> = (0..4).collect();
                s2.swap(2, 3);
                vec![
                    Perm::from_images(s1).unwrap(),
                    Perm::from_images(s2).unwrap(),
                ]
            }
            TypeKind::D => {
                let mut s: Vec<usize> = (0..n).collect();
                s.swap(n - 2, n - 1);
                vec![Perm::from_images(s).unwrap()]
            }
            TypeKind::E if n == 6 => {
                vec![Perm::from_images(vec![5, 1, 4, 3, 2, 0]).unwrap()]
            }
            _ => Vec::new(),
        }
    }
}

/// A group of diagram automorphisms, elements sorted for determinism.
#[derive(Clone, Debug)]
pub struct DiagramAutGroup {
    diagram: SimplyLacedDiagram,
    elements: Vec<Perm>,
}

impl DiagramAutGroup {
    /// The underlying diagram.
    pub fn diagram(&self) -> &SimplyLacedDiagram {
        &self.diagram
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// Membership test.
    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Subgroup generated by the given automorphisms. Fails if any generator
    /// does not preserve the diagram.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Vec<Perm>> {
        for g in gens {
            if g.degree() != self.diagram.rank() {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "degree {} does not match rank {}",
                    g.degree(),
                    self.diagram.rank()
                )));
            }
            if !self.diagram.is_automorphism(g) {
                return Err(Error::NotAnAutomorphism(alloc::format!(
                    "{:?} on {}",
                    g.to_one_based(),
                    self.diagram.label()
                )));
            }
        }
        Ok(closure(self.diagram.rank(), gens))
    }

    /// Every subgroup, each as a sorted element list, sorted by (order,
    /// elements). The full group is small (order at most 6), so subset
    /// closure enumeration is exhaustive.
    pub fn subgroups(&self) -> Vec<Vec<Perm>> {
        use alloc::collections::BTreeSet;
        let nontrivial: Vec<&Perm> = self.elements.iter().filter(|p| !p.is_identity()).collect();
        let mut found: BTreeSet<Vec<Perm>> = BTreeSet::new();
        for mask in 0..(1u32 << nontrivial.len()) {
            let gens: Vec<Perm> = nontrivial
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| (*p).clone())
                .collect();
            found.insert(closure(self.diagram.rank(), &gens));
        }
        let mut out: Vec<Vec<Perm>> = found.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> SimplyLacedDiagram {
        SimplyLacedDiagram::from_label(TypeLabel::parse(s).unwrap())
    }

    #[test]
    fn rejects_non_simply_laced() {
        assert!(SimplyLacedDiagram::new(TypeKind::B, 3).is_err());
        assert!(SimplyLacedDiagram::new(TypeKind::G, 2).is_err());
        assert!(SimplyLacedDiagram::new(TypeKind::A, 0).is_err());
    }

    #[test]
    fn cartan_matches_catalog() {
        for s in ["A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let d = diagram(s);
            assert_eq!(d.cartan_matrix(), d.label().cartan(), "{s}");
        }
    }

    #[test]
    fn automorphism_group_orders() {
        let cases = [
            ("A1", 1),
            ("A2", 2),
            ("A5", 2),
            ("A8", 2),
            ("D4", 6),
            ("D5", 2),
            ("D8", 2),
            ("E6", 2),
            ("E7", 1),
            ("E8", 1),
        ];
        for (s, order) in cases {
            assert_eq!(diagram(s).automorphism_group().order(), order, "{s}");
        }
    }

    #[test]
    fn brute_force_agrees_with_classified() {
        for s in ["A2", "A4", "A7", "D4", "D5", "D7", "E6", "E7"] {
            let d = diagram(s);
            let brute: Vec<Perm> = all_perms(d.rank())
                .into_iter()
                .filter(|p| d.is_automorphism(p))
                .collect();
            let classified = closure(d.rank(), &d.classified_generators());
            assert_eq!(brute, classified, "{s}");
        }
    }

    #[test]
    fn large_rank_uses_classified_path() {
        let d = diagram("A11");
        let g = d.automorphism_group();
        assert_eq!(g.order(), 2);
        assert!(g.elements().iter().all(|p| d.is_automorphism(p)));
        let d = diagram("D10");
        assert_eq!(d.automorphism_group().order(), 2);
    }

    #[test]
    fn subgroup_validation() {
        let d4 = diagram("D4");
        let g = d4.automorphism_group();
        let bad = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        assert!(matches!(
            g.subgroup(&[bad]),
            Err(Error::NotAnAutomorphism(_))
        ));
        let leaf_swap = Perm::from_images(vec![2, 1, 0, 3]).unwrap();
        let sub = g.subgroup(&[leaf_swap]).unwrap();
        assert_eq!(sub.len(), 2);
    }

    #[test]
    fn d4_subgroup_lattice() {
        let g = diagram("D4").automorphism_group();
        let subs = g.subgroups();
        let orders: Vec<usize> = subs.iter().map(Vec::len).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn e6_involution_preserves_edges() {
        let e6 = diagram("E6");
        let gens = e6.classified_generators();
        assert_eq!(gens.len(), 1);
        assert!(e6.is_automorphism(&gens[0]));
        assert_eq!(gens[0].order(), 2);
    }
}
