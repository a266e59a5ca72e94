use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Rat;
use crate::group::FamilyId;

/// The rationals `k/den` for `lo ≤ k ≤ hi`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Grid {
    pub lo: i64,
    pub hi: i64,
    pub den: i64,
}

impl Grid {
    pub fn values(&self) -> Vec<Rat> {
        (self.lo..=self.hi).map(|k| Rat::new(k, self.den)).collect()
    }

    /// Parameter points for a family: all pairs except `(0,0)`, or the
    /// nonzero values for single-parameter families.
    pub fn points(&self, family: FamilyId) -> Vec<(Rat, Rat)> {
        let values = self.values();
        if family.single_param() {
            return values
                .into_iter()
                .filter(|v| !v.is_zero())
                .map(|v| (v, Rat::zero()))
                .collect();
        }
        let mut out = Vec::new();
        for p in &values {
            for q in &values {
                if !(p.is_zero() && q.is_zero()) {
                    out.push((p.clone(), q.clone()));
                }
            }
        }
        out
    }
}

impl FromStr for Grid {
    type Err = Error;

    /// Parses `lo..hi/den`; `/den` defaults to 1.
    fn from_str(s: &str) -> Result<Grid> {
        let bad = || Error::Parse(format!("grid {s:?} is not of the form lo..hi/den"));
        let (range, den) = match s.trim().rsplit_once('/') {
            Some((r, d)) => (r, d.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.trim(), 1),
        };
        let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if den <= 0 || lo > hi {
            return Err(bad());
        }
        Ok(Grid { lo, hi, den })
    }
}

pub fn parse_grid(s: &str) -> Result<Grid> {
    s.parse()
}

/// Parses `A,B` into a parameter pair; a single value gives `(A, 0)`.
pub fn parse_params(s: &str) -> Result<(Rat, Rat)> {
    let mut parts = s.split(',').map(str::trim);
    let a: Rat = parts.next().unwrap_or_default().parse()?;
    let b: Rat = match parts.next() {
        Some(b) => b.parse()?,
        None => Rat::zero(),
    };
    if parts.next().is_some() {
        return Err(Error::Parse(format!("expected two parameters, got {s:?}")));
    }
    Ok((a, b))
}
