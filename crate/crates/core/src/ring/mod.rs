//! The integral group ring `Z B_k`, with basis elements labelled by
//! canonical normal-form keys.

mod beta;
mod expand;
mod relator;
mod singular;

pub use beta::{beta_reduce, AbelianGroup, BetaReduction, CompositeTerm, FormalKnotSum, IntVectors, KnotHandle};
pub use expand::{expand_commutator, CommutatorExpansion, Summand};
pub use relator::{reduce_relator, split_relator, ReductionTrace, Relator, StepKind, TraceStep};
pub use singular::{resolve, to_double_points, to_ideal_form, IdealFactorization, SingularBraidWord, SingularLetter};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::word_problem::NormalForm;

#[derive(Debug, Clone)]
struct Term {
    coeff: i64,
    element: NormalForm,
}

/// A finite integer combination of elements of `B_k`.
#[derive(Debug, Clone)]
pub struct RingElement {
    strands: usize,
    terms: BTreeMap<String, Term>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((k1, t1), (k2, t2))| k1 == k2 && t1.coeff == t2.coeff)
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(strands: usize) -> Self {
        Self {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(strands: usize) -> Self {
        Self::from_word(&BraidWord::identity(strands))
    }

    pub fn from_word(w: &BraidWord) -> Self {
        Self::from_normal_form(NormalForm::of(w), 1)
    }

    fn from_normal_form(element: NormalForm, coeff: i64) -> Self {
        let mut r = Self::zero(element.strands());
        r.add_term(element, coeff);
        r
    }

    /// `g - 1`.
    pub fn augmentation_factor(g: &BraidWord) -> Self {
        &Self::from_word(g) - &Self::one(g.strands())
    }

    fn add_term(&mut self, element: NormalForm, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = element.key();
        match self.terms.get_mut(&key) {
            Some(t) => {
                t.coeff += coeff;
                if t.coeff == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, Term { coeff, element });
            }
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().map(|t| t.coeff).sum()
    }

    pub fn coefficient(&self, w: &BraidWord) -> i64 {
        self.terms.get(&NormalForm::of(w).key()).map_or(0, |t| t.coeff)
    }

    /// `(canonical key, coefficient)` pairs in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, i64)> {
        self.terms.iter().map(|(k, t)| (k.as_str(), t.coeff))
    }

    /// `(representative word, coefficient)` pairs in key order.
    pub fn words(&self) -> impl Iterator<Item = (BraidWord, i64)> + '_ {
        self.terms.values().map(|t| (t.element.to_word(), t.coeff))
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero(self.strands);
        }
        let mut out = self.clone();
        for t in out.terms.values_mut() {
            t.coeff *= c;
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for t in other.terms.values() {
            out.add_term(t.element.clone(), t.coeff);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.strands);
        for a in self.terms.values() {
            for b in other.terms.values() {
                out.add_term(a.element.multiply(&b.element), a.coeff * b.coeff);
            }
        }
        Ok(out)
    }

    /// Multiplies by a single group element on the right.
    pub fn mul_word(&self, w: &BraidWord) -> Result<Self> {
        self.try_mul(&Self::from_word(w))
    }

    /// Multiplies by a single group element on the left.
    pub fn word_mul(&self, w: &BraidWord) -> Result<Self> {
        Self::from_word(w).try_mul(self)
    }

    /// Record form `key:coeff;key:coeff`, or `0` for the zero element.
    pub fn to_record(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, t)| format!("{}:{}", k, t.coeff)).collect();
        parts.join(";")
    }

    /// Parses [`RingElement::to_record`] output.
    pub fn from_record(strands: usize, s: &str) -> Result<Self> {
        let mut out = Self::zero(strands);
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for part in s.split(';') {
            let (key, coeff) = part
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("bad ring term `{}`", part)))?;
            let coeff: i64 = coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", coeff)))?;
            let nf = NormalForm::from_key(strands, key)?;
            out.add_term(nf, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_record())
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    /// Panics on a strand mismatch; see [`RingElement::try_add`].
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring elements on different strand counts")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self.try_add(&rhs.scale(-1)).expect("ring elements on different strand counts")
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring elements on different strand counts")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        self.scale(-1)
    }
}
