//! Hilbert series numerators of monomial quotients.
//!
//! For a monomial ideal `I` in `d` variables the Hilbert series of `A/I` is
//! `K(z) / (1 - z)^d` for an integer polynomial `K`. The numerator is
//! computed by pivot splitting on a variable `x`:
//!
//! ```text
//! K(A/I) = K(A/(I + (x))) + z * K(A/(I : x))
//! ```
//!
//! with the base cases `K(A/(1)) = 0`, `K(A/(0)) = 1`, and
//! `prod (1 - z^deg u)` for generators with pairwise disjoint supports.

use std::fmt;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{minimal_antichain, monomials_of_degree, Monomial, MonomialIdeal};
use crate::poly::IntegerPolynomial;

/// Krull dimension of a graded module, with a separate marker for the zero module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    Empty,
    Dim(usize),
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Empty => f.write_str("empty"),
            Dimension::Dim(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Empty => s.serialize_str("empty"),
            Dimension::Dim(d) => s.serialize_u64(*d as u64),
        }
    }
}

/// Hilbert series data of a graded module `M` with `H_M = numerator / (1 - z)^ambient_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: IntegerPolynomial,
    pub ambient_d: usize,
    pub module_dim: Dimension,
    /// Multiplicity; zero exactly for the empty module.
    pub e0: BigInt,
}

/// How the splitting variable is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// The variable occurring in the most generator supports.
    #[default]
    MostFrequent,
    /// The lowest-index variable occurring in at least two supports.
    LowestIndex,
}

/// Computes numerators, memoized by canonical generator list.
///
/// The memo is a concurrent map; racing writers store identical values.
#[derive(Debug, Default)]
pub struct HilbertEngine {
    strategy: PivotStrategy,
    memo: DashMap<Vec<Monomial>, IntegerPolynomial>,
}

impl HilbertEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_strategy(strategy: PivotStrategy) -> Self {
        Self { strategy, memo: DashMap::new() }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Numerator `K` of `H_{A/I} = K(z) / (1 - z)^d`.
    pub fn numerator(&self, ideal: &MonomialIdeal) -> IntegerPolynomial {
        self.numerator_of_gens(ideal.gens())
    }

    fn numerator_of_gens(&self, gens: &[Monomial]) -> IntegerPolynomial {
        if gens.is_empty() {
            return IntegerPolynomial::one();
        }
        if gens[0].is_one() {
            return IntegerPolynomial::zero();
        }

        // generators sharing no variable with any other split off as factors
        let (isolated, rest): (Vec<&Monomial>, Vec<&Monomial>) = gens.iter().partition(|g| {
            !gens.iter().any(|h| !std::ptr::eq(*g, h) && g.shares_variable_with(h))
        });
        let factor = isolated.iter().fold(IntegerPolynomial::one(), |acc, g| {
            &acc * &IntegerPolynomial::one_minus_z_pow(g.degree() as usize)
        });
        if rest.is_empty() {
            return factor;
        }
        let rest: Vec<Monomial> = rest.into_iter().cloned().collect();
        if let Some(k) = self.memo.get(&rest) {
            return &factor * k.value();
        }

        let pivot = self.pick_pivot(&rest);
        let nvars = rest[0].nvars();

        let mut plus: Vec<Monomial> =
            rest.iter().filter(|g| g.exponents()[pivot] == 0).cloned().collect();
        plus.push(Monomial::var(nvars, pivot));
        plus.sort_unstable();

        let x = Monomial::var(nvars, pivot);
        let colon = minimal_antichain(rest.iter().map(|g| g.div_gcd(&x)).collect());

        let k_plus = self.numerator_of_gens(&plus);
        let k_colon = self.numerator_of_gens(&colon);
        let k = &k_plus + &k_colon.shift(1);
        let out = &factor * &k;
        self.memo.insert(rest, k);
        out
    }

    fn pick_pivot(&self, gens: &[Monomial]) -> usize {
        let nvars = gens[0].nvars();
        let mut counts = vec![0usize; nvars];
        for g in gens {
            for v in g.support() {
                counts[v] += 1;
            }
        }
        match self.strategy {
            PivotStrategy::MostFrequent => {
                // first index wins ties
                let best = *counts.iter().max().unwrap();
                counts.iter().position(|&c| c == best).unwrap()
            }
            PivotStrategy::LowestIndex => counts.iter().position(|&c| c >= 2).unwrap(),
        }
    }

    /// Hilbert data of `outer / inner`; requires `inner ⊆ outer`.
    pub fn quotient_module_data(
        &self,
        inner: &MonomialIdeal,
        outer: &MonomialIdeal,
    ) -> Result<HilbertData> {
        if let Some(g) = inner.gens().iter().find(|g| !outer.contains(g)) {
            return Err(Error::NotContained { generator: g.display(inner.ring()).to_string() });
        }
        let numerator = &self.numerator(inner) - &self.numerator(outer);
        let d = inner.ring().var_count();
        let (module_dim, e0) = dim_and_mult(&numerator, d)?;
        Ok(HilbertData { numerator, ambient_d: d, module_dim, e0 })
    }

    /// Hilbert data of `A / ideal`.
    pub fn quotient_ring_data(&self, ideal: &MonomialIdeal) -> Result<HilbertData> {
        let numerator = self.numerator(ideal);
        let d = ideal.ring().var_count();
        let (module_dim, e0) = dim_and_mult(&numerator, d)?;
        Ok(HilbertData { numerator, ambient_d: d, module_dim, e0 })
    }
}

/// Numerator of the Hilbert series of `A/I`, using a fresh engine.
pub fn numerator_of_quotient(ideal: &MonomialIdeal) -> IntegerPolynomial {
    HilbertEngine::new().numerator(ideal)
}

/// Hilbert data of `outer / inner`, using a fresh engine.
pub fn quotient_module_data(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<HilbertData> {
    HilbertEngine::new().quotient_module_data(inner, outer)
}

/// Factor `K = (1 - z)^s * h` with `h(1) != 0` and return `(d - s, h(1))`.
pub fn dim_and_mult(numerator: &IntegerPolynomial, ambient_d: usize) -> Result<(Dimension, BigInt)> {
    if numerator.is_zero() {
        return Ok((Dimension::Empty, BigInt::zero()));
    }
    let mut h = numerator.clone();
    let mut s = 0usize;
    while let Some(q) = h.div_one_minus_z() {
        h = q;
        s += 1;
    }
    if s > ambient_d {
        return Err(Error::InconsistentNumerator(format!(
            "(1 - z)^{s} divides the numerator but the ring has {ambient_d} variables"
        )));
    }
    let e0 = h.eval_at_one();
    if !e0.is_positive() {
        return Err(Error::InconsistentNumerator(format!("multiplicity {e0} is not positive")));
    }
    Ok((Dimension::Dim(ambient_d - s), e0))
}

/// Number of monomials of each degree `0..=max_degree` outside `ideal`,
/// by exhaustive enumeration.
pub fn hilbert_function_oracle(ideal: &MonomialIdeal, max_degree: u32) -> Vec<u64> {
    let d = ideal.ring().var_count();
    (0..=max_degree)
        .map(|t| monomials_of_degree(d, t).iter().filter(|m| !ideal.contains(m)).count() as u64)
        .collect()
}

/// Hilbert function values `0..=max_degree` read off a numerator.
pub fn hilbert_function_from_numerator(
    numerator: &IntegerPolynomial,
    ambient_d: usize,
    max_degree: usize,
) -> Vec<BigInt> {
    numerator.series_over_one_minus_z(ambient_d, max_degree)
}
