mod common;

use std::sync::Arc;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use sympow::hilbert::hilbert_function_from_numerator;
use sympow::*;

fn ideal(ring: &Arc<RingContext>, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g.to_vec())).collect(), ring)
        .unwrap()
}

/// The ideal generated by every monomial of degree <= `max_degree` passing `member`.
fn ideal_from_oracle(
    ring: &Arc<RingContext>,
    max_degree: u32,
    member: impl Fn(&Monomial) -> bool,
) -> MonomialIdeal {
    let members: Vec<Monomial> =
        monomials_up_to(ring.var_count(), max_degree).into_iter().filter(|w| member(w)).collect();
    MonomialIdeal::minimalize(members, ring).unwrap()
}

#[test]
fn minimalize_against_divisibility_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    let ring = RingContext::with_vars(3);
    let gens: Vec<Monomial> = (0..50).map(|_| random_monomial(&mut rng, 3, 4)).collect();
    let min = MonomialIdeal::minimalize(gens.clone(), &ring).unwrap();
    for w in monomials_up_to(3, ORACLE_DEGREE) {
        assert_eq!(in_span(&gens, &w), in_span(min.gens(), &w), "{w:?}");
    }
    for a in min.gens() {
        for b in min.gens() {
            assert!(a == b || !a.divides(b));
        }
    }
}

#[test]
fn colon_by_monomial_oracle() {
    let r = RingContext::new(["x", "y"]).unwrap();
    let i = ideal(&r, &[&[3, 0], &[1, 2], &[0, 4]]);
    let xy = Monomial::new(vec![1, 1]);
    let expected = ideal_from_oracle(&r, 8, |w| i.contains(&times(w, &xy)));
    assert_eq!(i.colon_monomial(&xy), expected);
    // xy^2 / gcd(xy^2, xy) = y
    assert_eq!(expected, ideal(&r, &[&[2, 0], &[0, 1]]));
}

#[test]
fn colon_by_ideal_oracle() {
    let r = RingContext::new(["x", "y"]).unwrap();
    let x2 = ideal(&r, &[&[2, 0]]);
    let mm = MonomialIdeal::maximal(&r);
    let expected =
        ideal_from_oracle(&r, 8, |w| mm.gens().iter().all(|v| x2.contains(&times(w, v))));
    assert_eq!(expected, x2);
    assert_eq!(x2.colon_ideal(&mm).unwrap(), expected);
}

#[test]
fn saturation_fixed_point_oracle() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..50 {
        let inst = random_instance(&mut rng);
        let i = inst.i();
        let mut cur = i.clone();
        loop {
            let next = cur.colon_monomial(&inst.m);
            if next == cur {
                break;
            }
            cur = next;
        }
        assert_eq!(i.saturate_monomial(&inst.m), cur);
    }
}

#[test]
fn triangle_square_saturates_to_contain_xyz() {
    let r = RingContext::new(["x", "y", "z"]).unwrap();
    let tri = ideal(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let xyz = Monomial::new(vec![1, 1, 1]);
    let sq = tri.power(2);
    let principal = ideal(&r, &[&[1, 1, 1]]);
    assert!(sq.saturate_ideal(&principal).unwrap().contains(&xyz));
    let mm = MonomialIdeal::maximal(&r);
    let sat = sq.saturate_ideal(&mm).unwrap();
    assert!(sat.contains(&xyz));
    assert!(!sq.contains(&xyz));
    let expected = ideal_from_oracle(&r, 8, |w| in_saturation(sq.gens(), mm.gens(), w));
    assert_eq!(sat, expected);
}

#[test]
fn triangle_hilbert_slope() {
    let r = RingContext::new(["x", "y", "z"]).unwrap();
    let tri = ideal(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    // dimension one: the Hilbert function is eventually the constant e0
    let hf = hilbert_function_oracle(&tri, ORACLE_DEGREE);
    assert!(hf[2..].iter().all(|&v| v == 3), "{hf:?}");
    let k = numerator_of_quotient(&tri);
    assert_eq!(dim_and_mult(&k, 3).unwrap(), (Dimension::Dim(1), BigInt::from(3)));
}

/// Number of monomials in `outer` but not in `inner`, for finite-length quotients.
fn gap_count(inner: &MonomialIdeal, outer: &MonomialIdeal, max_degree: u32) -> usize {
    monomials_up_to(inner.ring().var_count(), max_degree)
        .iter()
        .filter(|w| outer.contains(w) && !inner.contains(w))
        .count()
}

#[test]
fn finite_length_quotients_count_gaps() {
    let r = RingContext::new(["x", "y"]).unwrap();
    let mm = MonomialIdeal::maximal(&r);
    let data = quotient_module_data(&mm.power(2), &mm).unwrap();
    assert_eq!(data.e0, BigInt::from(gap_count(&mm.power(2), &mm, 10)));

    let r3 = RingContext::new(["x", "y", "z"]).unwrap();
    let tri = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let m3 = MonomialIdeal::maximal(&r3);
    let samples = sample_series(&tri, &m3, 6, &HilbertEngine::new()).unwrap();
    for s in &samples {
        let power = tri.power(s.n);
        let bound = 3 * s.n + 3;
        // nothing in the gap near the enumeration bound
        let near = gap_count(&power, &s.symbolic_ideal, bound) - gap_count(&power, &s.symbolic_ideal, bound - 3);
        assert_eq!(near, 0);
        assert_eq!(s.f, BigInt::from(gap_count(&power, &s.symbolic_ideal, bound)), "n = {}", s.n);
    }
    assert_eq!(samples[1].f, BigInt::from(1));
}

#[test]
fn plane_saturated_by_a_variable() {
    let r = RingContext::new(["x", "y"]).unwrap();
    let mm = MonomialIdeal::maximal(&r);
    let x = ideal(&r, &[&[1, 0]]);
    let samples = sample_series(&mm, &x, 6, &HilbertEngine::new()).unwrap();
    for s in &samples {
        assert!(s.symbolic_ideal.is_unit());
        // length of A / (x, y)^n
        let n = s.n as usize;
        assert_eq!(s.f, BigInt::from(gap_count(&mm.power(s.n), &s.symbolic_ideal, s.n + 2)));
        assert_eq!(s.f, BigInt::from(n * (n + 1) / 2));
    }
    let r3 = RingContext::new(["x", "y", "z"]).unwrap();
    let plane = ideal(&r3, &[&[1, 0, 0], &[0, 1, 0]]);
    let z = ideal(&r3, &[&[0, 0, 1]]);
    let samples = sample_series(&plane, &z, 6, &HilbertEngine::new()).unwrap();
    assert!(samples.iter().all(|s| s.f == BigInt::from(0)));
}

fn monomial_strategy(d: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=4, d).prop_map(Monomial::new)
}

fn ideal_strategy(d: usize) -> impl Strategy<Value = (Arc<RingContext>, Vec<Monomial>)> {
    prop::collection::vec(monomial_strategy(d), 1..=6).prop_map(move |g| (RingContext::with_vars(d), g))
}

fn pair_strategy() -> impl Strategy<Value = (Arc<RingContext>, Vec<Monomial>, Vec<Monomial>, Monomial)> {
    (1usize..=3).prop_flat_map(|d| {
        (
            Just(RingContext::with_vars(d)),
            prop::collection::vec(monomial_strategy(d), 1..=5),
            prop::collection::vec(monomial_strategy(d), 1..=4),
            monomial_strategy(d),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn colon_membership_exhaustive((ring, gens, _, m) in pair_strategy()) {
        let i = MonomialIdeal::minimalize(gens, &ring).unwrap();
        let colon = i.colon_monomial(&m);
        for w in monomials_up_to(ring.var_count(), 8) {
            prop_assert_eq!(colon.contains(&w), i.contains(&times(&w, &m)));
        }
    }

    #[test]
    fn powers_multiply((ring, gens) in (1usize..=3).prop_flat_map(ideal_strategy), a in 0u32..=2, b in 0u32..=2) {
        let i = MonomialIdeal::minimalize(gens, &ring).unwrap();
        prop_assert_eq!(i.power(a).multiply(&i.power(b)), i.power(a + b));
    }

    #[test]
    fn saturation_is_idempotent_and_colon_stable((ring, ig, jg, _) in pair_strategy()) {
        let i = MonomialIdeal::minimalize(ig, &ring).unwrap();
        let j = MonomialIdeal::minimalize(jg, &ring).unwrap();
        let sat = i.saturate_ideal(&j).unwrap();
        prop_assert_eq!(sat.saturate_ideal(&j).unwrap(), sat.clone());
        prop_assert_eq!(sat.colon_ideal(&j).unwrap(), sat);
    }

    #[test]
    fn minimalize_is_equivalent_antichain((ring, gens) in (1usize..=3).prop_flat_map(ideal_strategy)) {
        let i = MonomialIdeal::minimalize(gens.clone(), &ring).unwrap();
        for g in &gens {
            prop_assert!(i.contains(g));
        }
        for g in i.gens() {
            prop_assert!(gens.contains(g));
            prop_assert!(i.gens().iter().all(|h| h == g || !h.divides(g)));
        }
        prop_assert!(i.gens().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn equality_is_mutual_containment((ring, ig, jg, _) in pair_strategy()) {
        let i = MonomialIdeal::minimalize(ig, &ring).unwrap();
        let j = MonomialIdeal::minimalize(jg, &ring).unwrap();
        prop_assert_eq!(i == j, i.is_subset_of(&j) && j.is_subset_of(&i));
        prop_assert_eq!(&i, &i.clone());
    }

    #[test]
    fn numerator_matches_enumeration((ring, gens) in (1usize..=4).prop_flat_map(ideal_strategy)) {
        let i = MonomialIdeal::minimalize(gens, &ring).unwrap();
        let k = numerator_of_quotient(&i);
        let series = hilbert_function_from_numerator(&k, ring.var_count(), ORACLE_DEGREE as usize);
        let oracle = hilbert_function_oracle(&i, ORACLE_DEGREE);
        for (a, b) in series.iter().zip(&oracle) {
            prop_assert_eq!(a, &BigInt::from(*b));
        }
    }

    #[test]
    fn pivot_strategies_and_split_identity((ring, gens) in (2usize..=4).prop_flat_map(ideal_strategy)) {
        let i = MonomialIdeal::minimalize(gens, &ring).unwrap();
        let a = HilbertEngine::with_strategy(PivotStrategy::MostFrequent).numerator(&i);
        let b = HilbertEngine::with_strategy(PivotStrategy::LowestIndex).numerator(&i);
        prop_assert_eq!(&a, &b);
        let d = ring.var_count();
        for v in 0..d {
            let x = Monomial::var(d, v);
            let plus = i.sum(&MonomialIdeal::principal(x.clone(), &ring).unwrap());
            let colon = i.colon_monomial(&x);
            let split = &numerator_of_quotient(&plus) + &numerator_of_quotient(&colon).shift(1);
            prop_assert_eq!(&split, &a);
        }
    }

    #[test]
    fn height_matches_hilbert_dimension((ring, gens) in (1usize..=4).prop_flat_map(ideal_strategy)) {
        let i = MonomialIdeal::minimalize(gens, &ring).unwrap();
        prop_assume!(!i.is_unit());
        let (dim, e0) = dim_and_mult(&numerator_of_quotient(&i), ring.var_count()).unwrap();
        prop_assert_eq!(dim, Dimension::Dim(dim_quotient(&i).unwrap()));
        prop_assert!(e0 > BigInt::from(0));
    }

    #[test]
    fn quasi_polynomial_round_trip(seed in any::<u64>(), g in 1usize..=3, c in 0usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let table = random_qp_table(&mut rng, g, c);
        let samples: Vec<_> = (0..((c + 2) * g + 4) as u64).map(|n| (n, eval_table(&table, n))).collect();
        let qp = fit_rational(&samples, 6, 2).unwrap();
        prop_assert_eq!(qp.period(), g);
        prop_assert_eq!(qp.degree(), Some(c));
        prop_assert_eq!(qp.coeff_table(), &table[..]);
        for (n, v) in &samples {
            prop_assert_eq!(&qp.evaluate(*n), v);
        }
    }

    #[test]
    fn ideal_files_round_trip((ring, ig, jg, _) in pair_strategy()) {
        let i = MonomialIdeal::minimalize(ig, &ring).unwrap();
        let j = MonomialIdeal::minimalize(jg, &ring).unwrap();
        let spec = IdealSpec { ring: ring.clone(), i, j: Some(j) };
        let text = spec.to_file_string();
        let back = parse_ideal_spec(&text).unwrap();
        prop_assert_eq!(back.to_file_string(), text);
        prop_assert_eq!(back, spec);
    }
}
