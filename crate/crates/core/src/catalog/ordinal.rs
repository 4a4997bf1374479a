//! Ordinals below ω^ω in Cantor normal form, plus the symbol ω₁.
//!
//! ω₁ is regular: no countable family of smaller ordinals is cofinal in it.
//! Everything representable in CNF here is countable, so a countable sequence
//! can never be claimed to converge to [`Ordinal::Omega1`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One summand `ω^exp · coef`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub exp: u32,
    pub coef: u64,
}

/// Serialized as its notation, e.g. `"ω^2·3+1"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Ordinal {
    /// Terms with strictly decreasing exponents and positive coefficients.
    Cnf(Vec<Term>),
    Omega1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cofinality {
    One,
    Omega,
    Omega1,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::Cnf(Vec::new())
    }

    pub fn finite(k: u64) -> Self {
        if k == 0 {
            Self::zero()
        } else {
            Ordinal::Cnf(vec![Term { exp: 0, coef: k }])
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    /// `ω^e`
    pub fn omega_pow(e: u32) -> Self {
        Ordinal::Cnf(vec![Term { exp: e, coef: 1 }])
    }

    /// Validates and builds a CNF ordinal.
    pub fn from_terms(terms: Vec<Term>) -> Result<Self> {
        if terms.iter().any(|t| t.coef == 0) {
            return Err(Error::Parse("CNF coefficients must be positive".into()));
        }
        if terms.windows(2).any(|w| w[0].exp <= w[1].exp) {
            return Err(Error::Parse("CNF exponents must strictly decrease".into()));
        }
        Ok(Ordinal::Cnf(terms))
    }

    /// Builds from `(exp, coef)` pairs in any order, merging equal exponents.
    pub fn from_pairs(pairs: &[(u32, u64)]) -> Self {
        let mut terms: Vec<Term> = Vec::new();
        let mut sorted: Vec<(u32, u64)> = pairs.iter().copied().filter(|p| p.1 > 0).collect();
        sorted.sort_by_key(|p| std::cmp::Reverse(p.0));
        for (exp, coef) in sorted {
            match terms.last_mut() {
                Some(t) if t.exp == exp => t.coef += coef,
                _ => terms.push(Term { exp, coef }),
            }
        }
        Ordinal::Cnf(terms)
    }

    pub fn is_omega1(&self) -> bool {
        matches!(self, Ordinal::Omega1)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Cnf(t) if t.is_empty())
    }

    pub fn terms(&self) -> Option<&[Term]> {
        match self {
            Ordinal::Cnf(t) => Some(t),
            Ordinal::Omega1 => None,
        }
    }

    /// `a + 1`; `None` for ω₁, whose successor lies outside `[0, ω₁]`.
    pub fn succ(&self) -> Option<Ordinal> {
        let mut terms = self.terms()?.to_vec();
        match terms.last_mut() {
            Some(t) if t.exp == 0 => t.coef += 1,
            _ => terms.push(Term { exp: 0, coef: 1 }),
        }
        Some(Ordinal::Cnf(terms))
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms().and_then(|t| t.last()), Some(t) if t.exp == 0)
    }

    pub fn is_limit(&self) -> bool {
        match self {
            Ordinal::Omega1 => true,
            Ordinal::Cnf(t) => t.last().is_some_and(|t| t.exp > 0),
        }
    }

    /// 0 and successors get 1 by convention; limits below ω^ω get ω.
    pub fn cofinality(&self) -> Cofinality {
        match self {
            Ordinal::Omega1 => Cofinality::Omega1,
            o if o.is_limit() => Cofinality::Omega,
            _ => Cofinality::One,
        }
    }

    /// Canonical fundamental sequence of a countable limit:
    /// `β + ω^e·c` maps `n` to `β + ω^e·(c-1) + ω^(e-1)·n`.
    pub fn fundamental(&self, n: u64) -> Option<Ordinal> {
        if !self.is_limit() {
            return None;
        }
        let mut terms = self.terms()?.to_vec();
        let last = terms.pop().expect("limit has a term");
        if last.coef > 1 {
            terms.push(Term { exp: last.exp, coef: last.coef - 1 });
        }
        if n > 0 {
            terms.push(Term { exp: last.exp - 1, coef: n });
        }
        Some(Ordinal::Cnf(terms))
    }

    /// Least `n` with `fundamental(n) >= target`, for `target < self`.
    pub fn fundamental_index_reaching(&self, target: &Ordinal) -> Option<u64> {
        if !self.is_limit() || self.is_omega1() || target >= self {
            return None;
        }
        let reaches = |n: u64| self.fundamental(n).is_some_and(|f| &f >= target);
        if reaches(0) {
            return Some(0);
        }
        // galloping then bisection on the monotone predicate
        let mut hi = 1u64;
        while !reaches(hi) {
            hi = hi.checked_mul(2)?;
        }
        let mut lo = hi / 2;
        while lo + 1 < hi {
            let mid = lo + (hi - lo) / 2;
            if reaches(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(hi)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ordinal::Omega1, Ordinal::Omega1) => Ordering::Equal,
            (Ordinal::Omega1, _) => Ordering::Greater,
            (_, Ordinal::Omega1) => Ordering::Less,
            (Ordinal::Cnf(a), Ordinal::Cnf(b)) => {
                for (x, y) in a.iter().zip(b) {
                    let ord = x.exp.cmp(&y.exp).then(x.coef.cmp(&y.coef));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                a.len().cmp(&b.len())
            }
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = match self {
            Ordinal::Omega1 => return write!(f, "ω₁"),
            Ordinal::Cnf(t) if t.is_empty() => return write!(f, "0"),
            Ordinal::Cnf(t) => t,
        };
        let parts: Vec<String> = terms
            .iter()
            .map(|t| {
                let base = match t.exp {
                    0 => return t.coef.to_string(),
                    1 => "ω".to_string(),
                    e => format!("ω^{e}"),
                };
                if t.coef == 1 {
                    base
                } else {
                    format!("{base}·{}", t.coef)
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl From<Ordinal> for String {
    fn from(a: Ordinal) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for Ordinal {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Accepts `ω₁`/`Omega`/`w1`, and sums like `w^2*3 + w + 5` (`ω`, `·` also accepted).
impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "ω₁" | "w1" | "Omega" | "omega1" | "Ω") {
            return Ok(Ordinal::Omega1);
        }
        let norm = s.replace('ω', "w").replace('·', "*").replace(' ', "");
        if norm.is_empty() {
            return Err(Error::Parse("empty ordinal".into()));
        }
        let mut pairs = Vec::new();
        let mut prev: Option<u32> = None;
        for part in norm.split('+') {
            let bad = || Error::Parse(format!("bad ordinal term {part:?}"));
            let (exp, coef) = if let Some(rest) = part.strip_prefix('w') {
                let (e, c) = match rest.split_once('*') {
                    Some((e, c)) => (e, Some(c)),
                    None => (rest, None),
                };
                let exp = match e.strip_prefix('^') {
                    Some(e) => e.parse::<u32>().map_err(|_| bad())?,
                    None if e.is_empty() => 1,
                    None => return Err(bad()),
                };
                let coef = match c {
                    Some(c) => c.parse::<u64>().map_err(|_| bad())?,
                    None => 1,
                };
                (exp, coef)
            } else {
                (0, part.parse::<u64>().map_err(|_| bad())?)
            };
            if prev.is_some_and(|p| p <= exp) {
                return Err(Error::Parse(format!("{s:?} is not in Cantor normal form")));
            }
            prev = Some(exp);
            if coef > 0 {
                pairs.push(Term { exp, coef });
            }
        }
        Ordinal::from_terms(pairs)
    }
}
