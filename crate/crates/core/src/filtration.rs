//! Symbolic powers `I_n(J) = (I^n : J^∞)` and the series `f(n) = e0(I_n(J) / I^n)`.

use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::{Dimension, HilbertEngine};
use crate::monomial::{MonomialIdeal, RingContext};

/// A rule `n ↦ J_n` producing a family of monomial ideals.
pub trait FiltrationProvider: Sync {
    fn ring(&self) -> &Arc<RingContext>;
    fn term(&self, n: u32) -> MonomialIdeal;
}

/// A provider backed by a closure.
pub struct FnFiltration<F> {
    ring: Arc<RingContext>,
    rule: F,
}

impl<F> FnFiltration<F>
where
    F: Fn(u32) -> MonomialIdeal + Sync,
{
    pub fn new(ring: &Arc<RingContext>, rule: F) -> Self {
        Self { ring: Arc::clone(ring), rule }
    }
}

impl<F> FiltrationProvider for FnFiltration<F>
where
    F: Fn(u32) -> MonomialIdeal + Sync,
{
    fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    fn term(&self, n: u32) -> MonomialIdeal {
        (self.rule)(n)
    }
}

/// The filtration `{I_n(J)}` with a cached ladder of ordinary powers.
pub struct SymbolicFiltration {
    base: MonomialIdeal,
    wrt: MonomialIdeal,
    powers: Mutex<Vec<MonomialIdeal>>,
}

impl SymbolicFiltration {
    pub fn new(base: &MonomialIdeal, wrt: &MonomialIdeal) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::ZeroIdeal("symbolic power of"));
        }
        if wrt.is_zero() {
            return Err(Error::ZeroIdeal("saturation"));
        }
        assert_eq!(base.ring(), wrt.ring(), "ideals live in different rings");
        Ok(Self {
            base: base.clone(),
            wrt: wrt.clone(),
            powers: Mutex::new(vec![MonomialIdeal::unit(base.ring())]),
        })
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn wrt(&self) -> &MonomialIdeal {
        &self.wrt
    }

    /// `I^n`, extending the ladder as needed.
    pub fn ordinary_power(&self, n: u32) -> MonomialIdeal {
        let mut ladder = self.powers.lock().unwrap();
        while ladder.len() <= n as usize {
            let next = ladder.last().unwrap().multiply(&self.base);
            ladder.push(next);
        }
        ladder[n as usize].clone()
    }

    pub fn symbolic_power(&self, n: u32) -> MonomialIdeal {
        if n == 0 {
            return MonomialIdeal::unit(self.base.ring());
        }
        self.ordinary_power(n).saturate_ideal(&self.wrt).expect("wrt is nonzero")
    }
}

impl FiltrationProvider for SymbolicFiltration {
    fn ring(&self) -> &Arc<RingContext> {
        self.base.ring()
    }

    fn term(&self, n: u32) -> MonomialIdeal {
        self.symbolic_power(n)
    }
}

/// `I_n(J) = (I^n : J^∞)`; the unit ideal for `n = 0`.
pub fn symbolic_power(base: &MonomialIdeal, wrt: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    Ok(SymbolicFiltration::new(base, wrt)?.symbolic_power(n))
}

/// One point of the series: `W_n = I_n(J) / I^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSample {
    pub n: u32,
    pub symbolic_ideal: MonomialIdeal,
    pub module_dim: Dimension,
    /// `e0(W_n)`, zero iff `W_n` is the zero module.
    pub f: BigInt,
}

/// Samples for `n = 1..=nmax`. The power ladder is built first, then the
/// samples are computed in parallel.
pub fn sample_series(
    base: &MonomialIdeal,
    wrt: &MonomialIdeal,
    nmax: u32,
    engine: &HilbertEngine,
) -> Result<Vec<SeriesSample>> {
    let filtration = SymbolicFiltration::new(base, wrt)?;
    sample_filtration(&filtration, nmax, engine)
}

pub fn sample_filtration(
    filtration: &SymbolicFiltration,
    nmax: u32,
    engine: &HilbertEngine,
) -> Result<Vec<SeriesSample>> {
    if nmax < 1 {
        return Err(Error::InsufficientSamples("nmax must be at least 1".into()));
    }
    filtration.ordinary_power(nmax);
    (1..=nmax)
        .into_par_iter()
        .map(|n| {
            let power = filtration.ordinary_power(n);
            let symbolic = filtration.symbolic_power(n);
            let data = engine.quotient_module_data(&power, &symbolic)?;
            Ok(SeriesSample { n, symbolic_ideal: symbolic, module_dim: data.module_dim, f: data.e0 })
        })
        .collect()
}

/// A failed filtration axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiltrationViolation {
    /// `J_0` is not the unit ideal.
    FirstTermNotUnit,
    /// `J_{n+1} ⊄ J_n`.
    NotDecreasing { n: u32 },
    /// `I^n ⊄ J_n`.
    BaseNotContained { n: u32 },
    /// `J_a J_b ⊄ J_{a+b}`.
    NotMultiplicative { a: u32, b: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub nmax: u32,
    pub checks: usize,
    pub violation: Option<FiltrationViolation>,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Check the filtration axioms up to `nmax`, stopping at the first violation.
pub fn check_filtration(
    provider: &dyn FiltrationProvider,
    base: &MonomialIdeal,
    nmax: u32,
) -> FiltrationReport {
    let terms: Vec<MonomialIdeal> = (0..=nmax).into_par_iter().map(|n| provider.term(n)).collect();
    let mut checks = 0;
    let report = |checks, violation| FiltrationReport { nmax, checks, violation };

    checks += 1;
    if !terms[0].is_unit() {
        return report(checks, Some(FiltrationViolation::FirstTermNotUnit));
    }
    for n in 0..nmax {
        checks += 1;
        if !terms[n as usize + 1].is_subset_of(&terms[n as usize]) {
            return report(checks, Some(FiltrationViolation::NotDecreasing { n }));
        }
    }
    let mut power = MonomialIdeal::unit(base.ring());
    for n in 0..=nmax {
        checks += 1;
        if !power.is_subset_of(&terms[n as usize]) {
            return report(checks, Some(FiltrationViolation::BaseNotContained { n }));
        }
        power = power.multiply(base);
    }
    for a in 1..nmax {
        for b in a..=nmax - a {
            checks += 1;
            let product = terms[a as usize].multiply(&terms[b as usize]);
            if !product.is_subset_of(&terms[(a + b) as usize]) {
                return report(checks, Some(FiltrationViolation::NotMultiplicative { a, b }));
            }
        }
    }
    report(checks, None)
}

/// The eventual constant value of `module_dim` over the longest constant
/// suffix, with the index `n` where that suffix starts.
pub fn dim_stabilization(samples: &[SeriesSample]) -> Result<(Dimension, u32)> {
    let dims: Vec<(u32, Dimension)> = samples.iter().map(|s| (s.n, s.module_dim)).collect();
    dim_stabilization_of(&dims)
}

pub fn dim_stabilization_of(dims: &[(u32, Dimension)]) -> Result<(Dimension, u32)> {
    let Some(&(_, tail)) = dims.last() else {
        return Err(Error::InsufficientSamples("no samples".into()));
    };
    let run = dims.iter().rev().take_while(|(_, d)| *d == tail).count();
    if run < 3 {
        return Err(Error::InsufficientSamples(format!(
            "dimension is constant on only the last {run} samples"
        )));
    }
    Ok((tail, dims[dims.len() - run].0))
}
