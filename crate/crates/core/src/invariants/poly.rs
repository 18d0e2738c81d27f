use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial in one variable with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    /// Multiplies by `t^by`.
    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Substitutes `t -> t^factor`.
    pub fn stretch(&self, factor: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * factor, c.clone())))
    }

    /// Substitutes `t -> t^{1/divisor}`, if every exponent is divisible.
    pub fn shrink(&self, divisor: i64) -> Option<Self> {
        if self.terms.keys().any(|e| e % divisor != 0) {
            return None;
        }
        Some(Self {
            terms: self.terms.iter().map(|(e, c)| (e / divisor, c.clone())).collect(),
        })
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `t = -1`.
    pub fn at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.is_even() { c.clone() } else { -c })
            .sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (dlow, dhigh) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(dhigh);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(high) = rem.max_exp() {
            if high - dhigh < rem.min_exp()? - dlow {
                return None;
            }
            let (q, r) = rem.coeff(high).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(q, high - dhigh);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }

    /// `±t^s · self` with symmetric exponents and positive value at `t = 1`.
    /// Needs an even exponent span.
    pub fn symmetrize(&self) -> Option<Self> {
        let (lo, hi) = (self.min_exp()?, self.max_exp()?);
        if (lo + hi) % 2 != 0 {
            return None;
        }
        let p = self.shift(-(lo + hi) / 2);
        Some(if p.at_one().is_negative() { -&p } else { p })
    }

    /// Writes the polynomial with variable `var`, halving every exponent
    /// when `halve` is set.
    pub fn render(&self, var: &str, halve: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exp = match (halve, e % 2 == 0) {
                    (true, true) => (e / 2).to_string(),
                    (true, false) => format!("{}/2", e),
                    (false, _) => e.to_string(),
                };
                format!("{}*{}^{}", c, var, exp)
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t", false))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the `Display` form, e.g. `-1*t^-4 + 1*t^-3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for part in s.split(" + ") {
            let bad = || Error::Parse(format!("bad term `{}`", part));
            let (c, rest) = part.trim().split_once('*').ok_or_else(bad)?;
            let (_, e) = rest.split_once('^').ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: i64 = e.parse().map_err(|_| bad())?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}
