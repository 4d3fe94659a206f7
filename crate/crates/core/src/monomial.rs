//! Monomials, the graded-reverse-lexicographic order, degree bases and
//! variable permutations.

use crate::arith::{binomial_usize, compositions};
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A monomial as an exponent vector in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: alloc::vec![0; nvars],
        }
    }

    /// `x_i` in `n` variables.
    pub fn var(i: usize, nvars: usize) -> Monomial {
        let mut exps = alloc::vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; `None` when not divisible.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    /// Image under a variable permutation: `x_i` goes to `x_{sigma(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> Monomial {
        let mut exps = alloc::vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[sigma.image(i)] = e;
        }
        Monomial { exps }
    }
}

/// Graded reverse-lexicographic comparison: first by total degree, ties by
/// the reverse-lexicographic rule (the monomial whose trailing exponent
/// difference is negative is the larger one).
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A permutation of variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds from the image list `i -> map[i]`; must be a bijection.
    pub fn new(map: Vec<usize>) -> Option<Permutation> {
        let n = map.len();
        let mut seen = alloc::vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation { map })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    /// All `n!` permutations of `n` indices (for orbit sums; `n` stays small).
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..n).collect();
        permute_rec(&mut idx, 0, &mut out);
        out
    }
}

fn permute_rec(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == idx.len() {
        out.push(Permutation { map: idx.clone() });
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute_rec(idx, k + 1, out);
        idx.swap(k, i);
    }
}

/// The ordered basis of all monomials of a fixed degree in `n` variables,
/// largest first in the graded reverse-lexicographic order, with index maps
/// in both directions.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    nvars: usize,
    degree: u32,
    monos: Vec<Monomial>,
}

impl DegreeBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial_at(&self, j: usize) -> &Monomial {
        &self.monos[j]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monos.iter()
    }

    /// Index of a monomial in this basis; the basis is sorted descending, so
    /// this is a binary search with the reversed comparator.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monos.binary_search_by(|probe| m.cmp(probe)).ok()
    }
}

/// Complete, duplicate-free, ordered list of the monomials of degree `i` in
/// `n` variables; its size is `binomial(i + n - 1, n - 1)`.
pub fn enumerate_degree(nvars: usize, degree: u32) -> DegreeBasis {
    debug_assert!(nvars >= 1);
    let mut monos: Vec<Monomial> = compositions(nvars, degree)
        .into_iter()
        .map(Monomial::new)
        .collect();
    monos.sort_by(|a, b| b.cmp(a));
    debug_assert_eq!(
        monos.len(),
        binomial_usize(degree as i64 + nvars as i64 - 1, nvars as i64 - 1)
    );
    DegreeBasis {
        nvars,
        degree,
        monos,
    }
}
