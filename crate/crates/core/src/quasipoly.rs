//! Exact fitting of quasi-polynomials to integer sequences.
//!
//! A quasi-polynomial of period `g` and degree `c` is
//! `f(n) = a_c(n) n^c + ... + a_0(n)` where every `a_i` is periodic with
//! period `g` and `a_c` is not identically zero. The fitter splits a
//! sequence into residue classes mod `g`, detects each class's degree with
//! finite differences, and interpolates it exactly. Nothing here uses
//! floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_G_MAX: usize = 6;
pub const DEFAULT_MIN_TAIL: usize = 3;
pub const DEFAULT_NMAX: u32 = 12;

/// A quasi-polynomial valid for `n >= onset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    /// `coeffs[i][r]` is `a_i(r)`; empty for the zero function.
    coeffs: Vec<Vec<BigRational>>,
    onset: u64,
}

impl QuasiPolynomial {
    /// Build from a table indexed `[i][r]`. Rows of zeros at the top are
    /// dropped, so the degree is always genuine.
    pub fn new(period: usize, mut coeffs: Vec<Vec<BigRational>>, onset: u64) -> Self {
        assert!(period >= 1, "period must be positive");
        assert!(coeffs.iter().all(|row| row.len() == period), "every row needs one entry per residue");
        while coeffs.last().is_some_and(|row| row.iter().all(Zero::is_zero)) {
            coeffs.pop();
        }
        Self { period, coeffs, onset }
    }

    pub fn zero() -> Self {
        Self { period: 1, coeffs: Vec::new(), onset: 0 }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn onset(&self) -> u64 {
        self.onset
    }

    pub fn coeff_table(&self) -> &[Vec<BigRational>] {
        &self.coeffs
    }

    /// `a_i(r)`; zero above the degree.
    pub fn coefficient(&self, i: usize, r: usize) -> BigRational {
        self.coeffs.get(i).map(|row| row[r % self.period].clone()).unwrap_or_else(BigRational::zero)
    }

    /// `Σ a_i(n mod g) n^i`.
    pub fn evaluate(&self, n: u64) -> BigRational {
        let r = (n % self.period as u64) as usize;
        let n = BigRational::from_integer(BigInt::from(n));
        // Horner
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, row| acc * &n + &row[r])
    }

    /// True iff `a_i(r)` is the same for every residue `r`.
    pub fn coeff_is_constant(&self, i: usize) -> bool {
        match self.coeffs.get(i) {
            None => true,
            Some(row) => row.iter().all(|v| *v == row[0]),
        }
    }

    /// Smallest `δ >= -1` such that `a_j` is constant for all `j > δ`.
    pub fn grade(&self) -> i64 {
        (0..self.coeffs.len())
            .rev()
            .find(|&i| !self.coeff_is_constant(i))
            .map_or(-1, |i| i as i64)
    }

    /// Reduce to the smallest period under which the table is unchanged.
    fn canonicalize(mut self) -> Self {
        let g = self.period;
        for p in (1..g).filter(|p| g.is_multiple_of(*p)) {
            if self.coeffs.iter().all(|row| (0..g).all(|r| row[r] == row[r % p])) {
                for row in &mut self.coeffs {
                    row.truncate(p);
                }
                self.period = p;
                break;
            }
        }
        self
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => return write!(f, "zero function (n >= {})", self.onset),
            Some(c) => write!(f, "period {}, degree {c}, n >= {}", self.period, self.onset)?,
        }
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            write!(f, "\n  a_{i} = ")?;
            if self.coeff_is_constant(i) {
                write!(f, "{}", row[0])?;
            } else {
                let parts: Vec<String> = row.iter().map(ToString::to_string).collect();
                write!(f, "[{}] (by n mod {})", parts.join(", "), self.period)?;
            }
        }
        Ok(())
    }
}

/// Fit integer samples `(n, f(n))` at consecutive `n`.
pub fn fit(samples: &[(u64, BigInt)], g_max: usize, min_tail: usize) -> Result<QuasiPolynomial> {
    let rational: Vec<(u64, BigRational)> =
        samples.iter().map(|(n, v)| (*n, BigRational::from_integer(v.clone()))).collect();
    fit_rational(&rational, g_max, min_tail)
}

/// Fit rational samples `(n, f(n))` at consecutive `n`.
///
/// Periods are tried in increasing order; for each, the longest suffix on
/// which every residue class is a polynomial with at least `min_tail`
/// verification points beyond the interpolation points is accepted.
pub fn fit_rational(
    samples: &[(u64, BigRational)],
    g_max: usize,
    min_tail: usize,
) -> Result<QuasiPolynomial> {
    if g_max < 1 {
        return Err(Error::InsufficientSamples("g_max must be at least 1".into()));
    }
    if min_tail < 2 {
        return Err(Error::InsufficientSamples("min_tail must be at least 2".into()));
    }
    if samples.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::InsufficientSamples("samples must be at consecutive n".into()));
    }
    for g in 1..=g_max {
        for start in 0..samples.len() {
            if let Some(qp) = fit_suffix(&samples[start..], g, min_tail) {
                return Ok(qp.canonicalize());
            }
        }
    }
    Err(Error::InsufficientSamples(format!(
        "no quasi-polynomial of period <= {g_max} fits {} samples with {min_tail} verification points per class",
        samples.len()
    )))
}

fn fit_suffix(suffix: &[(u64, BigRational)], g: usize, min_tail: usize) -> Option<QuasiPolynomial> {
    if suffix.len() < g {
        return None;
    }
    let mut table: Vec<Vec<BigRational>> = Vec::new();
    for first in 0..g {
        let class: Vec<&(u64, BigRational)> = suffix[first..].iter().step_by(g).collect();
        let values: Vec<BigRational> = class.iter().map(|(_, v)| v.clone()).collect();
        let (degree, leading_diffs) = class_degree(&values, min_tail)?;
        let poly = newton_to_monomial(&leading_diffs, class[0].0, g);
        let r = (class[0].0 % g as u64) as usize;
        let Some(degree) = degree else { continue };
        while table.len() <= degree {
            table.push(vec![BigRational::zero(); g]);
        }
        for (i, c) in poly.into_iter().enumerate() {
            table[i][r] = c;
        }
    }
    Some(QuasiPolynomial::new(g, table, suffix[0].0))
}

/// Smallest degree `k` (or `None` for all zeros) such that the `(k+1)`-th
/// differences vanish, along with the leading differences `Δ^0..Δ^k` at the
/// first point. Fails if fewer than `min_tail` differences confirm it.
fn class_degree(
    values: &[BigRational],
    min_tail: usize,
) -> Option<(Option<usize>, Vec<BigRational>)> {
    let mut row = values.to_vec();
    let mut leading = Vec::new();
    loop {
        if row.len() < min_tail {
            return None;
        }
        if row.iter().all(Zero::is_zero) {
            let degree = leading.len().checked_sub(1);
            return Some((degree, leading));
        }
        leading.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
}

/// Expand `Σ Δ^j · binom((n - n0)/g, j)` into coefficients of `n^i`.
fn newton_to_monomial(diffs: &[BigRational], n0: u64, g: usize) -> Vec<BigRational> {
    let g = BigRational::from_integer(BigInt::from(g));
    let n0 = BigRational::from_integer(BigInt::from(n0));
    let mut out = vec![BigRational::zero(); diffs.len()];
    let mut basis = vec![BigRational::one()];
    for (j, d) in diffs.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            out[i] += d * b;
        }
        // basis *= (n - n0 - j g) / (g (j + 1))
        let jj = BigRational::from_integer(BigInt::from(j));
        let shift = &n0 + &jj * &g;
        let scale = &g * (jj + BigRational::one());
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b / &scale;
            next[i] -= b * &shift / &scale;
        }
        basis = next;
    }
    out
}
