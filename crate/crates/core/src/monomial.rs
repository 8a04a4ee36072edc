//! Rings, monomials and monomial ideals.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set sorted in
//! graded lexicographic order, so two ideals are equal exactly when their
//! generator lists are equal.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient polynomial ring `K[x_1, ..., x_d]`. The coefficient field is
/// never materialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// A ring with variables `x1, ..., xd`.
    pub fn with_vars(d: usize) -> Arc<Self> {
        Self::new((1..=d).map(|i| format!("x{i}"))).expect("d must be positive")
    }

    pub fn var_count(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial `x^a` given by its exponent vector.
///
/// Ordering is graded lexicographic: lower total degree first, then the
/// lexicographically larger exponent vector first (`x^2 < x*y < y^2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    /// Panics if the total degree overflows `u32`.
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflow");
        Self { exps: exps.into_boxed_slice(), degree }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars].into_boxed_slice(), degree: 0 }
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// True iff every exponent of `self` is at most the matching exponent of `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn div_gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a.saturating_sub(*b)).collect(),
        )
    }

    /// Zero out every exponent on the support of `other`.
    pub fn strip_support(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| if *b > 0 { 0 } else { *a })
                .collect(),
        )
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub fn shares_variable_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).any(|(a, b)| *a > 0 && *b > 0)
    }

    /// Renders with the ring's variable names, e.g. `x^2*y`.
    pub fn display<'a>(&'a self, ring: &'a RingContext) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, ring }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ring: &'a RingContext,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ring.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in
/// graded lexicographic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(rest: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rest == 1 {
            prefix.push(remaining);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            go(rest - 1, remaining - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Reduce a list of monomials to its minimal elements under divisibility,
/// sorted in graded lexicographic order.
pub(crate) fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // A divisor never has larger degree, so it is already in `kept`.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal represented by its canonical minimal generating set.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingContext>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build the ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(gens: Vec<Monomial>, ring: &Arc<RingContext>) -> Result<Self> {
        let d = ring.var_count();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: bad.nvars() });
        }
        Ok(Self::from_gens_unchecked(ring, gens))
    }

    pub(crate) fn from_gens_unchecked(ring: &Arc<RingContext>, gens: Vec<Monomial>) -> Self {
        Self { ring: Arc::clone(ring), gens: minimal_antichain(gens) }
    }

    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Self { ring: Arc::clone(ring), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<RingContext>) -> Self {
        Self { ring: Arc::clone(ring), gens: vec![Monomial::one(ring.var_count())] }
    }

    /// The ideal generated by all the variables.
    pub fn maximal(ring: &Arc<RingContext>) -> Self {
        let d = ring.var_count();
        Self::from_gens_unchecked(ring, (0..d).map(|i| Monomial::var(d, i)).collect())
    }

    pub fn principal(m: Monomial, ring: &Arc<RingContext>) -> Result<Self> {
        Self::minimalize(vec![m], ring)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "ideals live in different rings"
        );
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.same_ring(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    /// All minimal generators share one total degree. The zero ideal counts
    /// as equigenerated.
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.same_ring(other);
        Self::from_gens_unchecked(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn multiply(&self, other: &Self) -> Self {
        self.same_ring(other);
        let products = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Self::from_gens_unchecked(&self.ring, products)
    }

    /// `I^n` by repeated multiplication, minimalizing after every step.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..n {
            acc = acc.multiply(self);
        }
        acc
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.same_ring(other);
        let lcms =
            self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))).collect();
        Self::from_gens_unchecked(&self.ring, lcms)
    }

    /// `(I : m)`, generated by `u / gcd(u, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Self {
        Self::from_gens_unchecked(&self.ring, self.gens.iter().map(|u| u.div_gcd(m)).collect())
    }

    /// `(I : J)` as the intersection of `(I : m)` over the generators `m` of `J`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        self.same_ring(other);
        if other.is_zero() {
            return Err(Error::ZeroIdeal("colon"));
        }
        Ok(intersect_all(other.gens.iter().map(|m| self.colon_monomial(m))))
    }

    /// `(I : m^∞)`: every exponent on the support of `m` is set to zero.
    pub fn saturate_monomial(&self, m: &Monomial) -> Self {
        Self::from_gens_unchecked(&self.ring, self.gens.iter().map(|u| u.strip_support(m)).collect())
    }

    /// `(I : J^∞)`.
    pub fn saturate_ideal(&self, other: &Self) -> Result<Self> {
        self.same_ring(other);
        if other.is_zero() {
            return Err(Error::ZeroIdeal("saturation"));
        }
        Ok(intersect_all(other.gens.iter().map(|m| self.saturate_monomial(m))))
    }

    /// Renders as a comma-separated generator list; `0` for the zero ideal.
    pub fn display(&self) -> DisplayIdeal<'_> {
        DisplayIdeal(self)
    }
}

fn intersect_all(mut parts: impl Iterator<Item = MonomialIdeal>) -> MonomialIdeal {
    let first = parts.next().expect("at least one ideal");
    parts.fold(first, |acc, p| acc.intersect(&p))
}

pub struct DisplayIdeal<'a>(&'a MonomialIdeal);

impl fmt::Display for DisplayIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal = self.0;
        if ideal.is_zero() {
            return f.write_str("0");
        }
        for (i, g) in ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&ideal.ring))?;
        }
        Ok(())
    }
}
