//! Left-greedy Garside normal form with the positive half twist as Garside
//! element.
//!
//! Simple elements (positive permutation braids) are stored by their
//! permutation, using the same position convention as
//! [`BraidWord::permutation`]: `image[p]` is where the strand starting at
//! position `p` ends.

use std::fmt;

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

type Simple = Vec<u8>;

fn identity_simple(k: usize) -> Simple {
    (0..k as u8).collect()
}

fn delta_simple(k: usize) -> Simple {
    (0..k as u8).rev().collect()
}

fn is_identity(s: &Simple) -> bool {
    s.iter().enumerate().all(|(i, &x)| i == x as usize)
}

fn is_delta(s: &Simple) -> bool {
    let k = s.len();
    s.iter().enumerate().all(|(i, &x)| x as usize == k - 1 - i)
}

/// `σ_i` can be split off on the left (0-based `i` swaps positions i, i+1).
#[inline]
fn starts_with(s: &Simple, i: usize) -> bool {
    s[i] > s[i + 1]
}

/// Positions of the strands ending at bottom positions i and i+1 are swapped.
#[inline]
fn ends_with(inv: &Simple, i: usize) -> bool {
    inv[i] > inv[i + 1]
}

fn inverse(s: &Simple) -> Simple {
    let mut out = vec![0u8; s.len()];
    for (i, &x) in s.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

/// Conjugation by the half twist.
fn tau(s: &Simple) -> Simple {
    let k = s.len();
    (0..k).map(|x| (k - 1) as u8 - s[k - 1 - x]).collect()
}

/// Makes the pair `(a, b)` left-weighted in place; returns whether anything
/// moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let k = a.len();
    let mut changed = false;
    let mut a_inv = inverse(a);
    'outer: loop {
        for i in 0..k - 1 {
            if starts_with(b, i) && !ends_with(&a_inv, i) {
                // a <- a σ_i : strands ending at i, i+1 swap their end points
                let (p, q) = (a_inv[i] as usize, a_inv[i + 1] as usize);
                a.swap(p, q);
                a_inv.swap(i, i + 1);
                // b <- σ_i^{-1} b
                b.swap(i, i + 1);
                changed = true;
                continue 'outer;
            }
        }
        break;
    }
    changed
}

fn simple_to_letters(s: &Simple) -> Vec<i32> {
    let mut s = s.clone();
    let mut out = Vec::new();
    'outer: loop {
        for i in 0..s.len().saturating_sub(1) {
            if starts_with(&s, i) {
                out.push(i as i32 + 1);
                s.swap(i, i + 1);
                continue 'outer;
            }
        }
        break;
    }
    out
}

/// The canonical form `Δ^inf · A_1 ⋯ A_r` of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let k = word.strands();
        if k < 2 {
            return Self {
                strands: k,
                inf: 0,
                factors: Vec::new(),
            };
        }
        let letters = word.letters();
        let negatives = letters.iter().filter(|&&l| l < 0).count();

        // Rewrite σ_i^{-1} = Δ^{-1} (Δ σ_i^{-1}) and push every Δ^{-1} to the
        // front; a factor is hit by τ once per negative letter to its right.
        let delta = delta_simple(k);
        let mut simples: Vec<Simple> = Vec::with_capacity(letters.len());
        let mut to_right = 0usize;
        for &l in letters.iter().rev() {
            let i = l.unsigned_abs() as usize - 1;
            let mut s = if l > 0 {
                let mut s = identity_simple(k);
                s.swap(i, i + 1);
                s
            } else {
                // Δ then s_i: positions i, i+1 exchanged at the bottom
                let mut s = delta.clone();
                let (p, q) = (k - 1 - i, k - 2 - i);
                s.swap(p, q);
                s
            };
            if to_right % 2 == 1 {
                s = tau(&s);
            }
            simples.push(s);
            if l < 0 {
                to_right += 1;
            }
        }
        simples.reverse();

        let mut factors: Vec<Simple> = Vec::with_capacity(simples.len());
        for s in simples {
            push_simple(&mut factors, s);
        }
        let mut nf = Self {
            strands: k,
            inf: -(negatives as i64),
            factors,
        };
        nf.tidy();
        nf
    }

    fn tidy(&mut self) {
        let leading = self.factors.iter().take_while(|f| is_delta(f)).count();
        self.inf += leading as i64;
        self.factors.drain(..leading);
        self.factors.retain(|f| !is_identity(f));
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.inf
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// The factors as 1-based one-line permutations.
    pub fn factor_images(&self) -> Vec<Vec<usize>> {
        self.factors
            .iter()
            .map(|f| f.iter().map(|&x| x as usize + 1).collect())
            .collect()
    }

    /// Canonical key `D^<inf>|<factor>|...`.
    pub fn key(&self) -> String {
        let mut key = format!("D^{}", self.inf);
        let sep = if self.strands > 9 { "," } else { "" };
        for f in &self.factors {
            key.push('|');
            let parts: Vec<String> = f.iter().map(|x| (x + 1).to_string()).collect();
            key.push_str(&parts.join(sep));
        }
        key
    }

    /// Parses a key produced by [`NormalForm::key`], rejecting anything that
    /// is not already canonical.
    pub fn from_key(strands: usize, key: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad canonical key `{}`", key));
        let mut parts = key.split('|');
        let inf: i64 = parts
            .next()
            .and_then(|h| h.strip_prefix("D^"))
            .and_then(|h| h.parse().ok())
            .ok_or_else(bad)?;
        let mut factors = Vec::new();
        for p in parts {
            let images: Vec<usize> = if strands > 9 {
                p.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Result<_>>()?
            } else {
                p.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            if images.len() != strands {
                return Err(bad());
            }
            let perm = Permutation::new(images.iter().map(|&x| x.wrapping_sub(1)).collect())?;
            factors.push(perm.image().iter().map(|&x| x as u8).collect());
        }
        let nf = Self {
            strands,
            inf: if strands < 2 { 0 } else { inf },
            factors,
        };
        if NormalForm::of(&nf.to_word()) != nf {
            return Err(bad());
        }
        Ok(nf)
    }

    /// A word representing this normal form.
    pub fn to_word(&self) -> BraidWord {
        let k = self.strands;
        let mut letters = Vec::new();
        if k >= 2 {
            let delta = simple_to_letters(&delta_simple(k));
            let delta_inv: Vec<i32> = delta.iter().rev().map(|l| -l).collect();
            let d = if self.inf >= 0 { &delta } else { &delta_inv };
            for _ in 0..self.inf.unsigned_abs() {
                letters.extend_from_slice(d);
            }
            for f in &self.factors {
                letters.extend(simple_to_letters(f));
            }
        }
        BraidWord::from_raw(k, letters)
    }

    /// Normal form of the product, computed from the two canonical forms.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let k = self.strands;
        if k < 2 {
            return self.clone();
        }
        // Δ^a A Δ^b B = Δ^{a+b} τ^b(A) B
        let mut factors: Vec<Simple> = self
            .factors
            .iter()
            .map(|f| if other.inf % 2 != 0 { tau(f) } else { f.clone() })
            .collect();
        for f in &other.factors {
            push_simple(&mut factors, f.clone());
        }
        let mut nf = Self {
            strands: k,
            inf: self.inf + other.inf,
            factors,
        };
        nf.tidy();
        nf
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }
}

/// Appends a simple factor to a left-weighted sequence and restores the
/// left-weighted condition with one right-to-left pass.
fn push_simple(factors: &mut Vec<Simple>, s: Simple) {
    if is_identity(&s) {
        return;
    }
    factors.push(s);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (left, right) = factors.split_at_mut(j);
        if !left_weight(&mut left[j - 1], &mut right[0]) {
            break;
        }
        j -= 1;
    }
    while factors.last().is_some_and(is_identity) {
        factors.pop();
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(s: &str) -> NormalForm {
        NormalForm::of(&s.parse().unwrap())
    }

    #[test]
    fn braid_relation_examples() {
        assert_eq!(nf("B3: 1 2 1"), nf("B3: 2 1 2"));
        assert_eq!(nf("B3: 1 2 1").key(), "D^1");
        assert_eq!(nf("B4: 1 3"), nf("B4: 3 1"));
        assert_ne!(nf("B3: 1 2"), nf("B3: 2 1"));
    }

    #[test]
    fn empty_and_cancellation() {
        let e = nf("B3:");
        assert_eq!(e.infimum(), 0);
        assert_eq!(e.canonical_length(), 0);
        assert_eq!(e.key(), "D^0");
        assert_eq!(nf("B3: 2 -1 1 -2"), e);
        assert_eq!(nf("B3: 1 2 1 -1"), nf("B3: 1 2"));
    }

    #[test]
    fn negative_letters() {
        assert_eq!(nf("B2: -1").key(), "D^-1");
        // σ1^{-1} = Δ^{-1} σ1 σ2 in B_3
        assert_eq!(nf("B3: -1"), nf("B3: -1 -2 -1 1 2"));
        assert_eq!(nf("B3: -1").factor_images(), vec![vec![3, 1, 2]]);
        assert_eq!(nf("B3: -1").infimum(), -1);
    }

    #[test]
    fn delta_squared_is_central() {
        let d2 = "B4: 1 2 3 1 2 1 1 2 3 1 2 1";
        for g in ["B4: 1", "B4: -2", "B4: 3 -1"] {
            let g: BraidWord = g.parse().unwrap();
            let d2: BraidWord = d2.parse().unwrap();
            assert_eq!(
                NormalForm::of(&d2.concat(&g).unwrap()),
                NormalForm::of(&g.concat(&d2).unwrap())
            );
        }
    }

    #[test]
    fn to_word_round_trip() {
        for s in ["B4: 1 -2 3 3 -1 2", "B3: -1 -1 2 -1", "B5: 4 -3 2 -1 1 2"] {
            let n = nf(s);
            assert_eq!(NormalForm::of(&n.to_word()), n);
        }
    }

    #[test]
    fn multiply_agrees_with_concatenation() {
        let u: BraidWord = "B4: 1 -2 3 -3 2 2 -1".parse().unwrap();
        let v: BraidWord = "B4: -1 -3 2 1 -2".parse().unwrap();
        let direct = NormalForm::of(&u.concat(&v).unwrap());
        assert_eq!(NormalForm::of(&u).multiply(&NormalForm::of(&v)), direct);
    }

    #[test]
    fn key_round_trip() {
        for s in ["B4: 1 -2 3 3 -1 2", "B3:", "B3: -1 -1", "B11: 1 10 -4 5"] {
            let n = nf(s);
            assert_eq!(NormalForm::from_key(n.strands(), &n.key()).unwrap(), n);
        }
        assert!(NormalForm::from_key(3, "D^0|213|213").is_ok());
        assert!(NormalForm::from_key(3, "D^0|321|213").is_err());
        assert!(NormalForm::from_key(3, "D^0|123").is_err());
        assert!(NormalForm::from_key(3, "D^0|213|132|213").is_err());
        assert!(NormalForm::from_key(3, "D^0|21").is_err());
        assert!(NormalForm::from_key(3, "X").is_err());
    }

    #[test]
    fn single_strand() {
        assert!(nf("B1:").is_identity());
    }
}
