//! The text formats for monomials and ideal files.
//!
//! An ideal file looks like
//!
//! ```text
//! # the triangle
//! ring x y z
//! I: x*y, y*z, z*x
//! J: x, y, z
//! ```
//!
//! `J` may be omitted for commands that only look at `I`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingContext};

/// A parsed ideal file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub ring: Arc<RingContext>,
    pub i: MonomialIdeal,
    pub j: Option<MonomialIdeal>,
}

impl IdealSpec {
    pub fn require_j(&self) -> Result<&MonomialIdeal> {
        self.j.as_ref().ok_or_else(|| Error::Parse("this command needs a `J:` line".into()))
    }

    /// The canonical text form; parsing it gives back an equal spec.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("ring {}\nI: {}\n", self.ring.var_names().join(" "), self.i.display());
        if let Some(j) = &self.j {
            out.push_str(&format!("J: {}\n", j.display()));
        }
        out
    }
}

/// Parse a product of powers such as `x^2*y`, or `1`.
pub fn parse_monomial(text: &str, ring: &RingContext) -> Result<Monomial> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    let mut exps = vec![0u32; ring.var_count()];
    for factor in text.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (factor.trim(), None),
        };
        let exp = match exp {
            None => 1,
            Some(e) if !e.is_empty() && e.bytes().all(|b| b.is_ascii_digit()) => e
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("exponent `{e}` is too large")))?,
            Some(e) => {
                return Err(Error::Parse(format!(
                    "malformed exponent `{e}` in `{text}`: expected a non-negative integer"
                )))
            }
        };
        if base == "1" {
            continue;
        }
        if base.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{text}`")));
        }
        let idx = ring
            .index_of(base)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{base}` in `{text}`")))?;
        exps[idx] = exps[idx]
            .checked_add(exp)
            .ok_or_else(|| Error::Parse(format!("exponent overflow in `{text}`")))?;
    }
    Ok(Monomial::new(exps))
}

/// Parse a comma-separated generator list into an ideal.
pub fn parse_generators(text: &str, ring: &Arc<RingContext>) -> Result<MonomialIdeal> {
    let gens = text
        .split(',')
        .map(|g| parse_monomial(g, ring))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(gens, ring)
}

pub fn parse_ideal_spec(text: &str) -> Result<IdealSpec> {
    let mut ring: Option<Arc<RingContext>> = None;
    let mut i = None;
    let mut j = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix("ring") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return Err(at(format!("unrecognized line `{line}`")));
            }
            if ring.is_some() {
                return Err(at("ring declared twice".into()));
            }
            ring = Some(RingContext::new(rest.split_whitespace()).map_err(|e| at(e.to_string()))?);
            continue;
        }
        let Some((name, gens)) = line.split_once(':') else {
            return Err(at(format!("unrecognized line `{line}`")));
        };
        let Some(r) = &ring else {
            return Err(at("the `ring` line must come first".into()));
        };
        let slot = match name.trim() {
            "I" => &mut i,
            "J" => &mut j,
            other => return Err(at(format!("unknown ideal `{other}`; expected I or J"))),
        };
        if slot.is_some() {
            return Err(at(format!("ideal {} declared twice", name.trim())));
        }
        *slot = Some(parse_generators(gens, r).map_err(|e| at(e.to_string()))?);
    }
    let ring = ring.ok_or_else(|| Error::Parse("missing `ring` line".into()))?;
    let i = i.ok_or_else(|| Error::Parse("missing `I:` line".into()))?;
    Ok(IdealSpec { ring, i, j })
}
