//! Generator families for equigenerated ideals, expansion of their powers,
//! and membership tests for powers of monomial ideals.

use crate::arith::{binomial_usize, is_prime, DeterministicRng};
use crate::error::Error;
use crate::fp::Fp;
use crate::monomial::{enumerate_degree, Monomial};
use crate::poly::GradedPoly;
use crate::ring::{CoeffRing, IntRing};
use crate::Result;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;


/// How the generators of the base ideal are produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `count` forms of degree `d` with coefficients drawn uniformly from the
    /// prime field by the pinned deterministic stream, keyed by
    /// `(seed, n, d, generator index)`.
    GeneralRandom { count: usize, seed: u64 },
    /// `x_1^d, ..., x_n^d, (x_1 + ... + x_n)^d`: `n + 1` generators.
    PowersOfLinear,
    /// `x_1^d, ..., x_n^d`: the monomial complete intersection.
    MonomialCi,
    /// Explicit integer-coefficient forms, all of one degree.
    Explicit(Vec<GradedPoly<IntRing>>),
}

/// A named family of degree-`d` forms together with the power `k` to take.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealSpec {
    pub nvars: usize,
    pub degree: usize,
    pub power: usize,
    pub family: Family,
}

impl IdealSpec {
    pub fn new(nvars: usize, degree: usize, power: usize, family: Family) -> Result<IdealSpec> {
        let spec = IdealSpec {
            nvars,
            degree,
            power,
            family,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn general(nvars: usize, degree: usize, power: usize, count: usize, seed: u64) -> Result<IdealSpec> {
        IdealSpec::new(nvars, degree, power, Family::GeneralRandom { count, seed })
    }

    pub fn monomial_ci(nvars: usize, degree: usize, power: usize) -> Result<IdealSpec> {
        IdealSpec::new(nvars, degree, power, Family::MonomialCi)
    }

    pub fn powers_of_linear(nvars: usize, degree: usize, power: usize) -> Result<IdealSpec> {
        IdealSpec::new(nvars, degree, power, Family::PowersOfLinear)
    }

    pub fn explicit(nvars: usize, power: usize, gens: Vec<GradedPoly<IntRing>>) -> Result<IdealSpec> {
        let degree = gens
            .first()
            .map(|g| g.degree() as usize)
            .ok_or_else(|| Error::InvalidParameter("explicit family needs generators".into()))?;
        IdealSpec::new(nvars, degree, power, Family::Explicit(gens))
    }

    fn validate(&self) -> Result<()> {
        if self.nvars == 0 {
            return Err(Error::InvalidParameter("need at least one variable".into()));
        }
        if self.degree == 0 {
            return Err(Error::InvalidParameter("generator degree must be >= 1".into()));
        }
        if let Family::Explicit(gens) = &self.family {
            for g in gens {
                if g.nvars() != self.nvars || g.degree() as usize != self.degree || g.is_zero() {
                    return Err(Error::InvalidParameter(
                        "explicit generators must be nonzero forms of one degree".into(),
                    ));
                }
            }
        }
        if let Family::GeneralRandom { count, .. } = &self.family {
            if *count == 0 {
                return Err(Error::InvalidParameter("need at least one generator".into()));
            }
        }
        Ok(())
    }

    /// Number of generators `r` of the base ideal.
    pub fn generator_count(&self) -> usize {
        match &self.family {
            Family::GeneralRandom { count, .. } => *count,
            Family::PowersOfLinear => self.nvars + 1,
            Family::MonomialCi => self.nvars,
            Family::Explicit(gens) => gens.len(),
        }
    }

    /// Generators as monomials when the family is a monomial ideal.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        match &self.family {
            Family::MonomialCi => Some(
                (0..self.nvars)
                    .map(|i| {
                        let mut e = alloc::vec![0u32; self.nvars];
                        e[i] = self.degree as u32;
                        Monomial::new(e)
                    })
                    .collect(),
            ),
            Family::Explicit(gens) => gens
                .iter()
                .map(|g| {
                    if g.num_terms() == 1 {
                        Some(g.terms().next().unwrap().0.clone())
                    } else {
                        None
                    }
                })
                .collect(),
            _ => None,
        }
    }

    /// True when the quotient's monomial basis is the complement of the
    /// monomial ideal power (i.e. counting suffices, no linear algebra).
    pub fn is_monomial(&self) -> bool {
        self.monomial_generators().is_some()
    }

    /// Generators over the prime field `Z/p`. Random families draw their
    /// coefficients from the deterministic stream for this `(seed, p)`.
    pub fn generators_fp(&self, prime: u64) -> Result<Vec<GradedPoly<Fp>>> {
        if !is_prime(prime) {
            return Err(Error::InvalidParameter(alloc::format!(
                "{prime} is not prime"
            )));
        }
        let field = Fp::new(prime)?;
        match &self.family {
            Family::GeneralRandom { count, seed } => {
                if prime < 101 {
                    return Err(Error::InvalidParameter(
                        "general random families need a prime >= 101".into(),
                    ));
                }
                let basis = enumerate_degree(self.nvars, self.degree as u32);
                (0..*count)
                    .map(|g| {
                        let mut rng =
                            DeterministicRng::for_generator(*seed, self.nvars, self.degree, g);
                        GradedPoly::from_terms(
                            field,
                            self.nvars,
                            self.degree as u32,
                            basis.iter().map(|m| (m.clone(), rng.next_residue(prime))),
                        )
                    })
                    .collect()
            }
            _ => Ok(self
                .generators_int()?
                .iter()
                .map(|g| reduce_poly_mod_p(g, field))
                .collect()),
        }
    }

    /// Generators over the integers; random families are rejected because
    /// their coefficients only exist modulo a chosen prime.
    pub fn generators_int(&self) -> Result<Vec<GradedPoly<IntRing>>> {
        let d = self.degree as u32;
        match &self.family {
            Family::GeneralRandom { .. } => Err(Error::InvalidParameter(
                "random families have no integer lift".into(),
            )),
            Family::MonomialCi => Ok(self
                .monomial_generators()
                .unwrap()
                .into_iter()
                .map(|m| GradedPoly::monomial(IntRing, m))
                .collect()),
            Family::PowersOfLinear => {
                let mut gens: Vec<GradedPoly<IntRing>> = (0..self.nvars)
                    .map(|i| {
                        let mut e = alloc::vec![0u32; self.nvars];
                        e[i] = d;
                        GradedPoly::monomial(IntRing, Monomial::new(e))
                    })
                    .collect();
                let l = crate::poly::sum_of_variables(IntRing, self.nvars);
                let mut ld = GradedPoly::one(IntRing, self.nvars);
                for _ in 0..d {
                    ld = ld.multiply(&l)?;
                }
                gens.push(ld);
                Ok(gens)
            }
            Family::Explicit(gens) => Ok(gens.clone()),
        }
    }
}

fn reduce_poly_mod_p(g: &GradedPoly<IntRing>, field: Fp) -> GradedPoly<Fp> {
    GradedPoly::from_terms(
        field,
        g.nvars(),
        g.degree(),
        g.terms().map(|(m, c)| {
            (
                m.clone(),
                crate::arith::bigint_mod_u64(c, field.modulus()),
            )
        }),
    )
    .expect("reduction preserves degrees")
}

/// The expanded generators of `I^k`: one product per `k`-multiset of base
/// generators, along with the multiset that produced it.
#[derive(Debug, Clone)]
pub struct PowerGeneratorSet<R: CoeffRing> {
    pub polys: Vec<GradedPoly<R>>,
    pub multisets: Vec<Vec<usize>>,
}

impl<R: CoeffRing> PowerGeneratorSet<R> {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// All `k`-multisets of `0..r` in lexicographic order.
pub fn multisets(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(r: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            rec(r, k, i, cur, out);
            cur.pop();
        }
    }
    rec(r, k, 0, &mut cur, &mut out);
    out
}

/// Expand the degree-`dk` generators of `I^k`. The count is always
/// `binomial(k + r - 1, r - 1)`.
pub fn power_generators<R: CoeffRing>(
    gens: &[GradedPoly<R>],
    k: usize,
) -> Result<PowerGeneratorSet<R>> {
    if k == 0 {
        return Err(Error::InvalidParameter("power must be >= 1".into()));
    }
    let sets = multisets(gens.len(), k);
    debug_assert_eq!(
        sets.len(),
        binomial_usize(k as i64 + gens.len() as i64 - 1, gens.len() as i64 - 1)
    );
    let mut polys = Vec::with_capacity(sets.len());
    for set in &sets {
        let mut acc = gens[set[0]].clone();
        for &i in &set[1..] {
            acc = acc.multiply(&gens[i])?;
        }
        polys.push(acc);
    }
    Ok(PowerGeneratorSet {
        polys,
        multisets: sets,
    })
}

/// Membership of a monomial in the `k`-th power of the monomial complete
/// intersection `(x_1^d, ..., x_n^d)`: true iff the exponentwise quotients
/// sum to at least `k`, equivalently the monomial is divisible by a product
/// of `k` of the `x_i^d`.
pub fn monomial_ci_membership(m: &Monomial, d: usize, k: usize) -> bool {
    let d = d as u32;
    let total: u32 = m.exponents().iter().map(|&e| e / d).sum();
    total as usize >= k
}

/// Membership oracle for powers of an arbitrary monomial ideal, with the
/// minimal generator set of the power computed once on construction.
#[derive(Debug, Clone)]
pub struct MonomialPowerMembership {
    min_gens: Vec<Monomial>,
    degree_floor: u32,
}

impl MonomialPowerMembership {
    pub fn new(gens: &[Monomial], k: usize) -> Result<MonomialPowerMembership> {
        if gens.is_empty() || k == 0 {
            return Err(Error::InvalidParameter(
                "need generators and a positive power".into(),
            ));
        }
        let mut products: BTreeSet<Monomial> = BTreeSet::new();
        for set in multisets(gens.len(), k) {
            let mut acc = gens[set[0]].clone();
            for &i in &set[1..] {
                acc = acc.mul(&gens[i]);
            }
            products.insert(acc);
        }
        // Equigenerated inputs cannot have one product strictly divide
        // another (equal degrees), so deduplication already minimalizes;
        // mixed-degree inputs need the pruning below.
        let all: Vec<Monomial> = products.into_iter().collect();
        let min_gens: Vec<Monomial> = all
            .iter()
            .filter(|m| {
                !all.iter()
                    .any(|other| *other != **m && other.divides(m))
            })
            .cloned()
            .collect();
        let degree_floor = min_gens.iter().map(|m| m.degree()).min().unwrap_or(0);
        Ok(MonomialPowerMembership {
            min_gens,
            degree_floor,
        })
    }

    /// Builds from general polynomials; errors unless every generator is a
    /// single term.
    pub fn from_polys<R: CoeffRing>(
        gens: &[GradedPoly<R>],
        k: usize,
    ) -> Result<MonomialPowerMembership> {
        let monos: Result<Vec<Monomial>> = gens
            .iter()
            .map(|g| {
                if g.num_terms() == 1 {
                    Ok(g.terms().next().unwrap().0.clone())
                } else {
                    Err(Error::InvalidParameter(
                        "generator is not a monomial".into(),
                    ))
                }
            })
            .collect();
        MonomialPowerMembership::new(&monos?, k)
    }

    pub fn minimal_generators(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        if m.degree() < self.degree_floor {
            return false;
        }
        self.min_gens.iter().any(|g| g.divides(m))
    }
}

/// Dimension of the span of the expanded power generators in degree `d*k`,
/// i.e. the number of minimal generators of `I^k` (all of which live in that
/// degree for an equigenerated ideal with generic-like generators).
pub fn minimal_generator_count(spec: &IdealSpec, prime: u64) -> Result<usize> {
    let gens = spec.generators_fp(prime)?;
    let power = power_generators(&gens, spec.power)?;
    let basis = enumerate_degree(spec.nvars, (spec.degree * spec.power) as u32);
    let field = Fp::new(prime)?;
    let rows = power.polys.iter().map(|g| g.dense_row(&basis));
    Ok(crate::matrix::rank_mod_p(field, basis.len(), rows, None))
}

/// The explicit third generator family `(x^d, y^d, x^{d-1} y)` in two
/// variables.
pub fn ci2_plus_monomial(d: usize, k: usize) -> Result<IdealSpec> {
    let d32 = d as u32;
    let gens = alloc::vec![
        crate::poly::int_poly(2, d32, &[(&[d32, 0], 1)])?,
        crate::poly::int_poly(2, d32, &[(&[0, d32], 1)])?,
        crate::poly::int_poly(2, d32, &[(&[d32 - 1, 1], 1)])?,
    ];
    IdealSpec::explicit(2, k, gens)
}

/// The explicit third generator family `(x^d, y^d, x^{d-1} y + x y^{d-1})`
/// in two variables. For `d = 2` the binomial degenerates to `2 x y`.
pub fn ci2_plus_binomial(d: usize, k: usize) -> Result<IdealSpec> {
    let d32 = d as u32;
    let third = if d == 2 {
        crate::poly::int_poly(2, d32, &[(&[1, 1], 2)])?
    } else {
        crate::poly::int_poly(2, d32, &[(&[d32 - 1, 1], 1), (&[1, d32 - 1], 1)])?
    };
    let gens = alloc::vec![
        crate::poly::int_poly(2, d32, &[(&[d32, 0], 1)])?,
        crate::poly::int_poly(2, d32, &[(&[0, d32], 1)])?,
        third,
    ];
    IdealSpec::explicit(2, k, gens)
}

/// The explicit four-quadric ideal `(x^2, y^2, z^2, xy + xz + yz)`, the
/// expansion of `(x^2, y^2, z^2, (x+y+z)^2)` after subtracting the squares.
pub fn explicit_quadric_witness(k: usize) -> Result<IdealSpec> {
    let gens = alloc::vec![
        crate::poly::int_poly(3, 2, &[(&[2, 0, 0], 1)])?,
        crate::poly::int_poly(3, 2, &[(&[0, 2, 0], 1)])?,
        crate::poly::int_poly(3, 2, &[(&[0, 0, 2], 1)])?,
        crate::poly::int_poly(3, 2, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)])?,
    ];
    IdealSpec::explicit(3, k, gens)
}

/// The explicit cubic ideal over `Z/101` whose powers attain the generic
/// Hilbert function:
/// `(x^3, y^3, z^3, x^2 y + 11 x y^2 - 50 x^2 z + 48 x y z
/// - 29 y^2 z - 9 x z^2 + 30 y z^2)`.
///
/// Coefficients are stored as their
/// integer lifts; evaluate it modulo 101.
pub fn explicit_cubic_witness(k: usize) -> Result<IdealSpec> {
    let quartic = crate::poly::int_poly(
        3,
        3,
        &[
            (&[2, 1, 0], 1),
            (&[1, 2, 0], 11),
            (&[2, 0, 1], -50),
            (&[1, 1, 1], 48),
            (&[0, 2, 1], -29),
            (&[1, 0, 2], -9),
            (&[0, 1, 2], 30),
        ],
    )?;
    let gens = alloc::vec![
        crate::poly::int_poly(3, 3, &[(&[3, 0, 0], 1)])?,
        crate::poly::int_poly(3, 3, &[(&[0, 3, 0], 1)])?,
        crate::poly::int_poly(3, 3, &[(&[0, 0, 3], 1)])?,
        quartic,
    ];
    IdealSpec::explicit(3, k, gens)
}

/// The prime the cubic witness ideal lives over.
pub const WITNESS_PRIME: u64 = 101;
