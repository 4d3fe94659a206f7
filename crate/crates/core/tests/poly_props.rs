//! Property tests for the polynomial and series layers.

use idealpower_core::monomial::{enumerate_degree, Monomial, Permutation};
use idealpower_core::poly::GradedPoly;
use idealpower_core::ring::IntRing;
use idealpower_core::series::{truncate_series, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn arb_poly(nvars: usize, degree: u32) -> impl Strategy<Value = GradedPoly<IntRing>> {
    let basis_len = enumerate_degree(nvars, degree).len();
    proptest::collection::vec((0..basis_len, -9i64..=9), 1..=5).prop_map(move |picks| {
        let basis = enumerate_degree(nvars, degree);
        GradedPoly::from_terms(
            IntRing,
            nvars,
            degree,
            picks
                .into_iter()
                .map(|(j, c)| (basis.monomial_at(j).clone(), BigInt::from(c))),
        )
        .unwrap()
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut map: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            map.swap(i, j);
        }
        Permutation::new(map).unwrap()
    })
}

proptest! {
    /// Multiplication adds degrees and distributes over addition.
    #[test]
    fn multiply_degree_and_distributivity(
        p in arb_poly(3, 2),
        q in arb_poly(3, 3),
        r in arb_poly(3, 3),
    ) {
        let pq = p.multiply(&q).unwrap();
        prop_assert_eq!(pq.degree(), 5);
        let lhs = p.multiply(&q.add(&r).unwrap()).unwrap();
        let rhs = pq.add(&p.multiply(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Permutations act as ring maps and respect the orbit sum.
    #[test]
    fn permutation_homomorphism(
        p in arb_poly(4, 2),
        q in arb_poly(4, 2),
        sigma in arb_permutation(4),
    ) {
        let lhs = p.multiply(&q).unwrap().apply_permutation(&sigma);
        let rhs = p
            .apply_permutation(&sigma)
            .multiply(&q.apply_permutation(&sigma))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
        // Symmetrization is permutation-invariant.
        prop_assert_eq!(p.symmetrize(), p.apply_permutation(&sigma).symmetrize());
    }

    /// Truncation keeps exactly the positive prefix of the expansion.
    #[test]
    fn truncation_is_the_positive_prefix(
        numerator in proptest::collection::vec(-6i64..=6, 1..=8),
        n in 1usize..=4,
    ) {
        let num: Vec<BigInt> = numerator.iter().map(|&c| BigInt::from(c)).collect();
        let bound = 16usize;
        let series = truncate_series(&num, n, bound);
        // Recompute the raw expansion independently by repeated convolution
        // with (1, 1, 1, ...).
        let mut raw: Vec<BigInt> = (0..=bound)
            .map(|i| num.get(i).cloned().unwrap_or_default())
            .collect();
        for _ in 0..n {
            let mut acc = BigInt::from(0);
            for c in raw.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        for (i, c) in series.coeffs().iter().enumerate() {
            prop_assert!(c.is_positive());
            prop_assert_eq!(c, &raw[i]);
        }
        if series.cut() <= bound {
            prop_assert!(!raw[series.cut()].is_positive());
        }
    }

    /// A basis index roundtrip holds for arbitrary degree pieces.
    #[test]
    fn basis_index_roundtrip(n in 1usize..=5, i in 0u32..=12) {
        let basis = enumerate_degree(n, i);
        for j in (0..basis.len()).step_by(1 + basis.len() / 17) {
            prop_assert_eq!(basis.index_of(basis.monomial_at(j)), Some(j));
        }
        // Absent monomials return None.
        let mut exps = vec![0u32; n];
        exps[0] = i + 1;
        prop_assert_eq!(basis.index_of(&Monomial::new(exps)), None);
    }
}

#[test]
fn truncated_series_zero_edge() {
    let s = TruncatedSeries::from_raw(Vec::<BigInt>::new());
    assert_eq!(s.cut(), 0);
    assert_eq!(s.coeff(3), BigInt::from(0));
}
