//! Singular braid words and the passage between double points and products
//! of augmentation factors.

use std::fmt;
use std::str::FromStr;

use super::RingElement;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::word_problem::is_trivial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularLetter {
    /// `σ_i^{±1}` as a signed index.
    Crossing(i32),
    /// A double point between positions `i` and `i+1`, standing for
    /// `σ_i - σ_i^{-1}`.
    DoublePoint(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularBraidWord {
    strands: usize,
    letters: Vec<SingularLetter>,
}

impl SingularBraidWord {
    pub fn new(strands: usize, letters: Vec<SingularLetter>) -> Result<Self> {
        for l in &letters {
            let i = match *l {
                SingularLetter::Crossing(c) => c.unsigned_abs() as usize,
                SingularLetter::DoublePoint(i) => i,
            };
            if i == 0 || i >= strands {
                return Err(Error::IndexOutOfRange { index: i, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn from_braid(w: &BraidWord) -> Self {
        Self {
            strands: w.strands(),
            letters: w.letters().iter().map(|&l| SingularLetter::Crossing(l)).collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[SingularLetter] {
        &self.letters
    }

    pub fn double_points(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| matches!(l, SingularLetter::DoublePoint(_)))
            .count()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }
}

impl fmt::Display for SingularBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            match l {
                SingularLetter::Crossing(c) => write!(f, " {}", c)?,
                SingularLetter::DoublePoint(i) => write!(f, " t{}", i)?,
            }
        }
        Ok(())
    }
}

impl FromStr for SingularBraidWord {
    type Err = Error;

    /// Braid text with double points written `t<i>`, e.g. `B3: 1 t2 -1`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `:` in `{}`", s)))?;
        let strands: usize = head
            .trim()
            .strip_prefix('B')
            .and_then(|h| h.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header `{}`", head)))?;
        let letters = body
            .split_whitespace()
            .map(|t| {
                if let Some(i) = t.strip_prefix('t') {
                    i.parse()
                        .map(SingularLetter::DoublePoint)
                        .map_err(|_| Error::Parse(format!("bad double point `{}`", t)))
                } else {
                    match t.parse::<i32>() {
                        Ok(l) if l != 0 => Ok(SingularLetter::Crossing(l)),
                        _ => Err(Error::Parse(format!("bad letter `{}`", t))),
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SingularBraidWord::new(strands, letters)
    }
}

/// Expands every double point into the difference of its two resolutions.
pub fn resolve(s: &SingularBraidWord) -> RingElement {
    let k = s.strands;
    let mut acc = RingElement::one(k);
    let mut pending: Vec<i32> = Vec::new();
    let flush = |acc: &mut RingElement, pending: &mut Vec<i32>| {
        if !pending.is_empty() {
            let w = BraidWord::from_raw(k, std::mem::take(pending));
            *acc = acc.mul_word(&w).expect("same strand count");
        }
    };
    for l in &s.letters {
        match *l {
            SingularLetter::Crossing(c) => pending.push(c),
            SingularLetter::DoublePoint(i) => {
                flush(&mut acc, &mut pending);
                let i = i as i32;
                let pos = RingElement::from_word(&BraidWord::from_raw(k, vec![i]));
                let neg = RingElement::from_word(&BraidWord::from_raw(k, vec![-i]));
                acc = &acc * &(&pos - &neg);
            }
        }
    }
    flush(&mut acc, &mut pending);
    acc
}

/// `Π (p_j - 1) · tail` with each `p_j = v_j σ_{i_j}^2 v_j^{-1}` pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFactorization {
    pub factors: Vec<BraidWord>,
    pub tail: BraidWord,
}

impl IdealFactorization {
    pub fn expand(&self) -> RingElement {
        let k = self.tail.strands();
        let mut acc = RingElement::one(k);
        for p in &self.factors {
            acc = &acc * &RingElement::augmentation_factor(p);
        }
        acc.mul_word(&self.tail).expect("same strand count")
    }
}

/// Rewrites `w_1 (σ_{i_1} - σ_{i_1}^{-1}) w_2 ⋯ w_{n+1}` as
/// `(v_1 σ_{i_1}^2 v_1^{-1} - 1) ⋯ (v_n σ_{i_n}^2 v_n^{-1} - 1) v_n w_{n+1}`
/// with `v_j = w_1 σ_{i_1}^{-1} ⋯ w_j σ_{i_j}^{-1}`.
pub fn to_ideal_form(s: &SingularBraidWord) -> IdealFactorization {
    let k = s.strands;
    let mut v: Vec<i32> = Vec::new();
    let mut factors = Vec::new();
    for l in &s.letters {
        match *l {
            SingularLetter::Crossing(c) => v.push(c),
            SingularLetter::DoublePoint(i) => {
                let i = i as i32;
                v.push(-i);
                let mut p = v.clone();
                p.push(i);
                p.push(i);
                p.extend(v.iter().rev().map(|x| -x));
                factors.push(BraidWord::from_raw(k, p).free_reduce());
            }
        }
    }
    IdealFactorization {
        factors,
        tail: BraidWord::from_raw(k, v).free_reduce(),
    }
}

/// Switches crossings of the pure braid `x` until the strand with the
/// smaller label is over at every crossing. The result is layered, hence
/// trivial, and each switch contributes `±p τ s` to `x - 1`.
fn unknotting_terms(x: &BraidWord) -> Result<Vec<(i64, SingularBraidWord)>> {
    if !x.is_pure() {
        return Err(Error::NotPure);
    }
    let k = x.strands();
    let mut at: Vec<usize> = (0..k).collect();
    let mut current: Vec<i32> = x.letters().to_vec();
    let mut terms = Vec::new();
    for j in 0..current.len() {
        let l = current[j];
        let i = l.unsigned_abs() as usize;
        let (left, right) = (at[i - 1], at[i]);
        // positive letters put the strand coming from the right on top
        let want = if right < left { 1 } else { -1 };
        if l.signum() != want {
            let mut letters: Vec<SingularLetter> =
                current[..j].iter().map(|&c| SingularLetter::Crossing(c)).collect();
            letters.push(SingularLetter::DoublePoint(i));
            letters.extend(current[j + 1..].iter().map(|&c| SingularLetter::Crossing(c)));
            terms.push((l.signum() as i64, SingularBraidWord { strands: k, letters }));
            current[j] = -l;
        }
        at.swap(i - 1, i);
    }
    if !is_trivial(&BraidWord::from_raw(k, current)) {
        return Err(Error::Inconsistent("layered braid is not trivial".into()));
    }
    Ok(terms)
}

/// Writes `Π (x_i - 1) · tail` as a signed sum of singular words, one double
/// point per factor.
pub fn to_double_points(xs: &[BraidWord], tail: &BraidWord) -> Result<Vec<(i64, SingularBraidWord)>> {
    let k = tail.strands();
    let mut acc: Vec<(i64, SingularBraidWord)> = vec![(1, SingularBraidWord::new(k, Vec::new())?)];
    for x in xs {
        if x.strands() != k {
            return Err(Error::StrandMismatch {
                left: k,
                right: x.strands(),
            });
        }
        let terms = unknotting_terms(x)?;
        let mut next = Vec::with_capacity(acc.len() * terms.len());
        for (s1, w1) in &acc {
            for (s2, w2) in &terms {
                next.push((s1 * s2, w1.concat(w2)?));
            }
        }
        acc = next;
    }
    let tail = SingularBraidWord::from_braid(tail);
    acc.into_iter()
        .map(|(s, w)| Ok((s, w.concat(&tail)?)))
        .collect()
}

/// Sum of the resolutions of a signed combination.
#[cfg(test)]
fn resolve_sum(k: usize, terms: &[(i64, SingularBraidWord)]) -> RingElement {
    let mut acc = RingElement::zero(k);
    for (s, w) in terms {
        acc = &acc + &resolve(w).scale(*s);
    }
    acc
}
