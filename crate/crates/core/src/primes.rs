//! Minimal primes, height and dimension of monomial ideals.
//!
//! The minimal primes of a monomial ideal are generated by variables, and
//! correspond to the inclusion-minimal variable sets that meet the support
//! of every minimal generator (minimal vertex covers of the support
//! hypergraph).

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, RingContext};

/// A sorted, deduplicated set of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableSubset(Vec<usize>);

impl VariableSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, var: usize) -> bool {
        self.0.binary_search(&var).is_ok()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> impl fmt::Display + 'a {
        DisplaySubset { set: self, ring }
    }
}

struct DisplaySubset<'a> {
    set: &'a VariableSubset,
    ring: &'a RingContext,
}

impl fmt::Display for DisplaySubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.set.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.ring.var_names()[*v])?;
        }
        f.write_str(")")
    }
}

fn check_proper(ideal: &MonomialIdeal, what: &'static str) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::ImproperIdeal(what));
    }
    Ok(())
}

/// The minimal primes of `ideal`, sorted by size and then lexicographically.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VariableSubset>> {
    check_proper(ideal, "minimal_primes")?;
    let supports: Vec<Vec<usize>> = ideal.gens().iter().map(|g| g.support().collect()).collect();

    let mut covers = Vec::new();
    let mut chosen = vec![false; ideal.ring().var_count()];
    branch(&supports, &mut chosen, &mut covers);

    covers.sort_by(|a: &VariableSubset, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    covers.dedup();
    let mut minimal: Vec<VariableSubset> = Vec::new();
    for c in covers {
        if !minimal.iter().any(|m| m.is_subset_of(&c)) {
            minimal.push(c);
        }
    }
    Ok(minimal)
}

// Pick the first support not yet hit and branch on each of its variables.
fn branch(supports: &[Vec<usize>], chosen: &mut [bool], out: &mut Vec<VariableSubset>) {
    let uncovered = supports.iter().find(|s| !s.iter().any(|&v| chosen[v]));
    match uncovered {
        None => out.push(VariableSubset::new(
            chosen.iter().enumerate().filter(|(_, c)| **c).map(|(i, _)| i).collect(),
        )),
        Some(support) => {
            for &v in support {
                chosen[v] = true;
                branch(supports, chosen, out);
                chosen[v] = false;
            }
        }
    }
}

/// Minimum size of a minimal prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    check_proper(ideal, "height")?;
    Ok(minimal_primes(ideal)?.iter().map(VariableSubset::len).min().unwrap_or(0))
}

/// Krull dimension of `A / ideal`, i.e. `d - height`.
pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.ring().var_count() - height(ideal)?)
}
