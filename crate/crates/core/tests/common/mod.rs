//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the ideal operations it is used to check; everything is decided by
//! divisibility against explicit generator lists.

#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;
use sympow::monomial::monomials_of_degree;
use sympow::{Monomial, MonomialIdeal, RingContext};

pub const ORACLE_DEGREE: u32 = 12;

/// Every monomial of total degree at most `max_degree`.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree).flat_map(|t| monomials_of_degree(nvars, t)).collect()
}

/// Membership in the ideal generated by an arbitrary (not necessarily
/// minimal) list.
pub fn in_span(gens: &[Monomial], w: &Monomial) -> bool {
    gens.iter().any(|g| g.exponents().iter().zip(w.exponents()).all(|(a, b)| a <= b))
}

pub fn times(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial::new(a.exponents().iter().zip(b.exponents()).map(|(x, y)| x + y).collect())
}

pub fn pow(a: &Monomial, k: u32) -> Monomial {
    Monomial::new(a.exponents().iter().map(|e| e * k).collect())
}

/// All products of `n` generators (with repetition), unreduced.
pub fn naive_power_gens(gens: &[Monomial], nvars: usize, n: u32) -> Vec<Monomial> {
    let mut acc = vec![Monomial::one(nvars)];
    for _ in 0..n {
        acc = acc.iter().flat_map(|a| gens.iter().map(move |g| times(a, g))).collect();
        acc.sort();
        acc.dedup();
    }
    acc
}

/// `w ∈ (I : J^∞)` decided as: for every generator `v` of `J`, some power
/// `w v^k` with `k <= bound` lies in `I`.
pub fn in_saturation(i_gens: &[Monomial], j_gens: &[Monomial], w: &Monomial) -> bool {
    let bound = i_gens.iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap_or(0);
    j_gens.iter().all(|v| (0..=bound).any(|k| in_span(i_gens, &times(w, &pow(v, k)))))
}

pub fn random_monomial(rng: &mut StdRng, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

/// A random list of 1..=max_gens monomials, avoiding the constant 1 so the
/// instance is usually proper.
pub fn random_gens(rng: &mut StdRng, nvars: usize, max_exp: u32, max_gens: usize) -> Vec<Monomial> {
    let count = rng.gen_range(1..=max_gens);
    (0..count)
        .map(|_| loop {
            let m = random_monomial(rng, nvars, max_exp);
            if !m.is_one() {
                break m;
            }
        })
        .collect()
}

pub struct Instance {
    pub ring: Arc<RingContext>,
    pub i_gens: Vec<Monomial>,
    pub j_gens: Vec<Monomial>,
    pub m: Monomial,
}

impl Instance {
    pub fn i(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.i_gens.clone(), &self.ring).unwrap()
    }

    pub fn j(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.j_gens.clone(), &self.ring).unwrap()
    }
}

/// d <= 4, exponents <= 4, at most 6 generators.
pub fn random_instance(rng: &mut StdRng) -> Instance {
    let d = rng.gen_range(1..=4);
    Instance {
        ring: RingContext::with_vars(d),
        i_gens: random_gens(rng, d, 4, 6),
        j_gens: random_gens(rng, d, 4, 6),
        m: random_monomial(rng, d, 4),
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random quasi-polynomial coefficient table `[i][r]` with period exactly
/// `period` (minimal) and a nonzero top row.
pub fn random_qp_table(rng: &mut StdRng, period: usize, degree: usize) -> Vec<Vec<BigRational>> {
    loop {
        let table: Vec<Vec<BigRational>> = (0..=degree)
            .map(|_| {
                (0..period)
                    .map(|_| rational(rng.gen_range(-12..=12), rng.gen_range(1..=6)))
                    .collect()
            })
            .collect();
        let top_nonzero = table[degree].iter().any(|v| *v != rational(0, 1));
        let minimal = (1..period)
            .filter(|p| period.is_multiple_of(*p))
            .all(|p| table.iter().any(|row| (0..period).any(|r| row[r] != row[r % p])));
        if top_nonzero && minimal {
            return table;
        }
    }
}

/// `Σ a_i(n mod g) n^i`, written out directly.
pub fn eval_table(table: &[Vec<BigRational>], n: u64) -> BigRational {
    let g = table[0].len() as u64;
    let r = (n % g) as usize;
    let nn = BigRational::from_integer(BigInt::from(n));
    let mut power = BigRational::from_integer(BigInt::from(1));
    let mut total = BigRational::from_integer(BigInt::from(0));
    for row in table {
        total += &row[r] * &power;
        power *= &nn;
    }
    total
}
