//! Permutations of diagram node indices (0-based internally).

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    /// Identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Validate an image list: every value in range, no duplicates.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "image {} out of range for degree {}",
                    x,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "duplicate image {}",
                    x
                )));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Parse a 1-based image list, the external exchange format.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&x| {
                x.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPermutation("1-based permutation contains 0".to_string())
                })
            })
            .collect::<Result<_>>()?;
        Self::from_images(shifted)
    }

    /// Image list shifted to 1-based, the external exchange format.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of a point.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Orbits of the subgroup generated by `perms` on `{0, .., n-1}`,
    /// sorted by minimum member, members sorted.
    pub fn orbits_of(n: usize, perms: &[Perm]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for p in perms {
                    let y = p.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        frontier.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

/// Closure of `gens` under composition: the generated subgroup, sorted.
pub fn closure(n: usize, gens: &[Perm]) -> Vec<Perm> {
    use alloc::collections::BTreeSet;
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert(Perm::identity(n));
    let mut frontier: Vec<Perm> = vec![Perm::identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if set.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    set.into_iter().collect()
}

/// All permutations of `{0, .., n-1}` in lexicographic order. Intended for
/// small `n` (diagram ranks), where n! stays tiny.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if current.len() == n {
            out.push(Perm(current.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
