//! Word algebra for braid groups and free groups.
//!
//! A [`BraidWord`] is a sequence of signed Artin generators together with an
//! explicit strand count. Letter `i > 0` stands for `σ_i`, letter `-i` for
//! `σ_i^{-1}`. Nothing here touches the braid relations; equality in the
//! group lives in [`crate::word_problem`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cancels adjacent inverse pairs to a fixed point.
pub(crate) fn reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert_letters(letters: &[i32]) -> Vec<i32> {
    letters.iter().rev().map(|l| -l).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Range("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index >= strands {
                return Err(Error::IndexOutOfRange { index, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word from letters already known to be in range.
    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        Self::from_raw(strands.max(1), Vec::new())
    }

    /// `σ_i^{sign}` in `B_strands`.
    pub fn generator(i: usize, sign: i32, strands: usize) -> Result<Self> {
        let l = i as i32 * sign.signum();
        Self::new(strands, vec![l])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn free_reduce(&self) -> Self {
        Self::from_raw(self.strands, reduce_letters(&self.letters))
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(self.concat(other)?.free_reduce())
    }

    /// Literal concatenation, no reduction.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_raw(self.strands, letters))
    }

    /// Literal concatenation of a sequence of words on a common strand count.
    pub fn concat_all<'a, I>(strands: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut letters = Vec::new();
        for w in words {
            if w.strands != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: w.strands,
                });
            }
            letters.extend_from_slice(&w.letters);
        }
        Ok(Self::from_raw(strands, letters))
    }

    pub fn invert(&self) -> Self {
        Self::from_raw(self.strands, invert_letters(&self.letters))
    }

    /// `self^n`, free-reduced. Negative powers use the inverse.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self::from_raw(self.strands, reduce_letters(&letters))
    }

    pub fn permutation(&self) -> Permutation {
        let mut image: Vec<usize> = (0..self.strands).collect();
        // image[p] = final position of the strand that starts at position p
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        for (pos, &strand) in at.iter().enumerate() {
            image[strand] = pos;
        }
        Permutation { image }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Iterated right-end inclusion `B_k -> B_m`.
    pub fn include(&self, m: usize) -> Result<Self> {
        if m < self.strands {
            return Err(Error::Range(format!(
                "cannot include {} strands into {}",
                self.strands, m
            )));
        }
        Ok(Self::from_raw(m, self.letters.clone()))
    }

    /// Relabels `σ_i -> σ_{i+offset}` inside `B_m`.
    pub fn shift(&self, offset: usize, m: usize) -> Result<Self> {
        if self.strands + offset > m {
            return Err(Error::Range(format!(
                "shift by {} of a {}-strand word exceeds {} strands",
                offset, self.strands, m
            )));
        }
        let o = offset as i32;
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + o))
            .collect();
        Ok(Self::from_raw(m, letters))
    }

    /// The mirror automorphism `σ_i -> σ_i^{-1}`.
    pub fn mirror(&self) -> Self {
        Self::from_raw(self.strands, self.letters.iter().map(|l| -l).collect())
    }

    /// Conjugation by the half twist: `σ_i -> σ_{k-i}`.
    pub fn flip(&self) -> Self {
        let k = self.strands as i32;
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (k - l.abs()))
            .collect();
        Self::from_raw(self.strands, letters)
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_generator(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Number of occurrences of each generator, indexed by `i - 1`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands.saturating_sub(1)];
        for &l in &self.letters {
            counts[l.unsigned_abs() as usize - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix('B')
            .ok_or_else(|| Error::Parse(format!("missing `B<k>:` header in `{}`", s)))?;
        let (head, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `:` in `{}`", s)))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count `{}`", head)))?;
        let letters = body
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad letter `{}`", t)))
                    .and_then(|l| {
                        if l == 0 {
                            Err(Error::Parse("zero is not a letter".into()))
                        } else {
                            Ok(l)
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

/// `t_k = σ_{k-1}^{-1} σ_{k-2}^{-1} ... σ_1^{-1}`.
pub fn twist(k: usize) -> BraidWord {
    let k = k.max(1);
    BraidWord::from_raw(k, (1..k as i32).rev().map(|i| -i).collect())
}

/// The positive half twist `Δ_k` as a word.
pub fn half_twist(k: usize) -> BraidWord {
    let k = k.max(1);
    let mut letters = Vec::new();
    for top in (1..k as i32).rev() {
        letters.extend(1..=top);
    }
    BraidWord::from_raw(k, letters)
}

/// `[x, y] = x y x^{-1} y^{-1}`, free-reduced.
pub fn commutator(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    x.check_strands(y)?;
    let mut letters = x.letters.clone();
    letters.extend_from_slice(&y.letters);
    letters.extend(invert_letters(&x.letters));
    letters.extend(invert_letters(&y.letters));
    Ok(BraidWord::from_raw(x.strands, reduce_letters(&letters)))
}

/// `g^{-1} x g`, free-reduced.
pub fn conjugate(x: &BraidWord, g: &BraidWord) -> Result<BraidWord> {
    x.check_strands(g)?;
    let mut letters = invert_letters(&g.letters);
    letters.extend_from_slice(&x.letters);
    letters.extend_from_slice(&g.letters);
    Ok(BraidWord::from_raw(x.strands, reduce_letters(&letters)))
}

/// The band generator `A_{ij} = (σ_{j-1}..σ_{i+1}) σ_i^2 (σ_{i+1}^{-1}..σ_{j-1}^{-1})`.
pub fn pure_generator(i: usize, j: usize, k: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= k) {
        return Err(Error::Range(format!(
            "pure generator needs 1 <= i < j <= k, got ({}, {}, {})",
            i, j, k
        )));
    }
    let (i, j) = (i as i32, j as i32);
    let mut letters: Vec<i32> = ((i + 1)..j).rev().collect();
    letters.push(i);
    letters.push(i);
    letters.extend(((i + 1)..j).map(|l| -l));
    Ok(BraidWord::from_raw(k, letters))
}

/// A permutation of `{0..k-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!("{:?}", image)));
            }
            seen[x] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            image: (0..k).collect(),
        }
    }

    /// Swaps the 1-based positions `i` and `i + 1`.
    pub fn transposition(i: usize, k: usize) -> Self {
        let mut image: Vec<usize> = (0..k).collect();
        image.swap(i - 1, i);
        Self { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Diagrammatic composition: first `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles in order of their smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// One-line notation, 1-based; comma separated above nine points.
    pub fn one_line(&self) -> String {
        let sep = if self.image.len() > 9 { "," } else { "" };
        self.image
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line())
    }
}

/// A word in abstract free generators; letter `g > 0` is generator `g`,
/// `-g` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse("zero is not a free generator".into()));
        }
        Ok(Self { letters })
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: i32) -> Self {
        Self { letters: vec![g] }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> Self {
        Self {
            letters: reduce_letters(&self.letters),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn invert(&self) -> Self {
        Self {
            letters: invert_letters(&self.letters),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.concat(other)
            .concat(&self.invert())
            .concat(&other.invert())
            .free_reduce()
    }

    /// Substitutes a word for each generator id (1-based index into `images`).
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord> {
        let mut out = Vec::new();
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize;
            let img = images
                .get(g - 1)
                .ok_or_else(|| Error::Range(format!("no image for generator {}", g)))?;
            if l > 0 {
                out.extend_from_slice(&img.letters);
            } else {
                out.extend(invert_letters(&img.letters));
            }
        }
        Ok(FreeWord { letters: out })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F:")?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}
