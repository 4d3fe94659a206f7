//! Sparse homogeneous polynomials over a pluggable exact coefficient ring.

use crate::error::Error;
use crate::monomial::{Monomial, Permutation};
use crate::ring::CoeffRing;
use crate::Result;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// A homogeneous polynomial: a sparse map from monomials to nonzero
/// coefficients, all of the same total degree.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedPoly<R: CoeffRing> {
    ring: R,
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: CoeffRing> GradedPoly<R> {
    pub fn zero(ring: R, nvars: usize, degree: u32) -> Self {
        GradedPoly {
            ring,
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(monomial, coefficient)` pairs, collecting duplicates and
    /// pruning zeros. All monomials must share one degree.
    pub fn from_terms<I>(ring: R, nvars: usize, degree: u32, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let mut poly = GradedPoly::zero(ring, nvars, degree);
        for (m, c) in iter {
            poly.add_term(m, c)?;
        }
        Ok(poly)
    }

    /// The constant `1` viewed as the empty product (degree 0).
    pub fn one(ring: R, nvars: usize) -> Self {
        let one = ring.one();
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(nvars), one);
        GradedPoly {
            ring,
            nvars,
            degree: 0,
            terms,
        }
    }

    pub fn monomial(ring: R, m: Monomial) -> Self {
        let one = ring.one();
        let nvars = m.nvars();
        let degree = m.degree();
        let mut terms = BTreeMap::new();
        terms.insert(m, one);
        GradedPoly {
            ring,
            nvars,
            degree,
            terms,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&R::Elem> {
        self.terms.get(m)
    }

    /// Leading term in the graded reverse-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: R::Elem) -> Result<()> {
        if m.nvars() != self.nvars {
            return Err(Error::RingMismatch(alloc::format!(
                "term in {} variables added to polynomial in {}",
                m.nvars(),
                self.nvars
            )));
        }
        if self.ring.is_zero(&c) {
            return Ok(());
        }
        if m.degree() != self.degree {
            return Err(Error::RingMismatch(alloc::format!(
                "degree {} term in degree {} polynomial",
                m.degree(),
                self.degree
            )));
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.ring.neg(c))?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = GradedPoly::zero(self.ring.clone(), self.nvars, self.degree);
        if self.ring.is_zero(c) {
            return out;
        }
        for (m, v) in &self.terms {
            let p = self.ring.mul(v, c);
            if !self.ring.is_zero(&p) {
                out.terms.insert(m.clone(), p);
            }
        }
        out
    }

    /// Product of two homogeneous polynomials; degrees add.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("coefficient rings differ".into()));
        }
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch("variable counts differ".into()));
        }
        let mut out = GradedPoly::zero(
            self.ring.clone(),
            self.nvars,
            self.degree + other.degree,
        );
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = self.ring.mul(c1, c2);
                out.add_term(m1.mul(m2), c)?;
            }
        }
        Ok(out)
    }

    /// Shift every exponent vector by a fixed monomial (multiplication by a
    /// monomial, coefficients untouched).
    pub fn shift(&self, m: &Monomial) -> Self {
        let mut out = GradedPoly::zero(
            self.ring.clone(),
            self.nvars,
            self.degree + m.degree(),
        );
        for (t, c) in &self.terms {
            out.terms.insert(t.mul(m), c.clone());
        }
        out
    }

    /// Substitute a homogeneous linear form for one variable; the result has
    /// the same degree in the same ambient variable set (the replaced
    /// variable simply no longer occurs).
    ///
    /// `replacement` maps the remaining variable indices to coefficients; it
    /// must not involve `var` itself.
    pub fn substitute_linear(&self, var: usize, replacement: &GradedPoly<R>) -> Result<Self> {
        if replacement.degree != 1 && !replacement.is_zero() {
            return Err(Error::InvalidParameter(
                "replacement must be homogeneous of degree 1".into(),
            ));
        }
        if replacement.nvars != self.nvars {
            return Err(Error::RingMismatch("variable counts differ".into()));
        }
        if replacement
            .terms
            .keys()
            .any(|m| m.exponent(var) != 0)
        {
            return Err(Error::InvalidParameter(
                "replacement involves the substituted variable".into(),
            ));
        }
        let mut out = GradedPoly::zero(self.ring.clone(), self.nvars, self.degree);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            // term = c * (rest of m) * replacement^e
            let mut rest = m.exponents().to_vec();
            rest[var] = 0;
            let mut acc = GradedPoly::monomial(self.ring.clone(), Monomial::new(rest)).scale(c);
            for _ in 0..e {
                acc = acc.multiply(replacement)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Ring automorphism induced by a permutation of the variables.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Self {
        debug_assert_eq!(sigma.len(), self.nvars);
        let mut out = GradedPoly::zero(self.ring.clone(), self.nvars, self.degree);
        for (m, c) in &self.terms {
            out.terms.insert(m.permute(sigma), c.clone());
        }
        out
    }

    /// Orbit sum under the full symmetric group on the variables, with each
    /// distinct image of a monomial counted once per source term: the "sum
    /// over all permutations, then divide by the stabilizer" normalization,
    /// applied monomial by monomial. Reference-table seeds list one
    /// representative per orbit, so their symmetrization reproduces the full
    /// symmetric form with the listed coefficients.
    pub fn symmetrize(&self) -> Self {
        let mut out = GradedPoly::zero(self.ring.clone(), self.nvars, self.degree);
        let perms = Permutation::all(self.nvars);
        for (m, c) in &self.terms {
            let mut orbit: Vec<Monomial> = perms.iter().map(|s| m.permute(s)).collect();
            orbit.sort();
            orbit.dedup();
            for im in orbit {
                out.add_term(im, c.clone()).expect("orbit preserves degree");
            }
        }
        out
    }

    /// Dense coefficient vector with respect to an ordered degree basis,
    /// as `(column, coefficient)` pairs.
    pub fn dense_row(&self, basis: &crate::monomial::DegreeBasis) -> Vec<(u32, R::Elem)> {
        let mut row: Vec<(u32, R::Elem)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let col = basis.index_of(m).expect("monomial outside basis") as u32;
                (col, c.clone())
            })
            .collect();
        row.sort_by_key(|(c, _)| *c);
        row
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.nvars != other.nvars || self.degree != other.degree {
            return Err(Error::RingMismatch(
                "incompatible polynomials in ring, variables or degree".into(),
            ));
        }
        Ok(())
    }
}

/// Linear form `x_0 + x_1 + ... + x_{n-1}`.
pub fn sum_of_variables<R: CoeffRing>(ring: R, nvars: usize) -> GradedPoly<R> {
    let one = ring.one();
    GradedPoly::from_terms(
        ring,
        nvars,
        1,
        (0..nvars).map(|i| (Monomial::var(i, nvars), one.clone())),
    )
    .expect("variables are degree 1")
}

/// Convenience: build an integer polynomial from `(exponents, coefficient)`.
pub fn int_poly(
    nvars: usize,
    degree: u32,
    terms: &[(&[u32], i64)],
) -> Result<GradedPoly<crate::ring::IntRing>> {
    GradedPoly::from_terms(
        crate::ring::IntRing,
        nvars,
        degree,
        terms.iter().map(|(e, c)| {
            (
                Monomial::new(e.to_vec()),
                num_bigint::BigInt::from(*c),
            )
        }),
    )
}
