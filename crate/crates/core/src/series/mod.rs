//! Certified elements of the lower central and derived series of pure braid
//! groups.
//!
//! Membership is never decided; it is certified. A [`CommutatorExpr`] is a
//! tree over pure leaf words, and its shape alone bounds the series level of
//! the element it evaluates to: a commutator of lower-central levels `m` and
//! `n` sits at level `m + n`, a commutator of derived levels `m` and `n` at
//! `min(m, n) + 1`. Products, inverses and conjugates keep the minimum, since
//! every term of both series is normal in `B_k`.

mod ds3;
mod sexpr;

pub use ds3::{ds3_words, reassemble, rewrite_mod_ds, CheckedEquation, Ds3Form, Ds3Words, DsRewrite, Insertion, DEFAULT_BASE_BOUND};

use std::fmt;

use rand::Rng;

use crate::braid::{self, twist, BraidWord};
use crate::error::{Error, Result};
use crate::rng::seeded;
use crate::word_problem::{equal, is_trivial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    Lcs,
    Ds,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::Lcs => f.write_str("LCS"),
            Series::Ds => f.write_str("DS"),
        }
    }
}

impl std::str::FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "LCS" => Ok(Series::Lcs),
            "DS" => Ok(Series::Ds),
            other => Err(Error::Parse(format!("unknown series `{}`", other))),
        }
    }
}

/// Level assigned to the empty product.
const UNBOUNDED: u32 = u32::MAX / 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutatorExpr {
    Leaf(BraidWord),
    Commutator(Box<CommutatorExpr>, Box<CommutatorExpr>),
    Product(Vec<CommutatorExpr>),
    Inverse(Box<CommutatorExpr>),
    /// `g^{-1} x g`
    Conjugate(Box<CommutatorExpr>, BraidWord),
}

impl CommutatorExpr {
    pub fn leaf(w: BraidWord) -> Self {
        CommutatorExpr::Leaf(w)
    }

    pub fn commutator(x: CommutatorExpr, y: CommutatorExpr) -> Self {
        CommutatorExpr::Commutator(Box::new(x), Box::new(y))
    }

    pub fn inverse(x: CommutatorExpr) -> Self {
        CommutatorExpr::Inverse(Box::new(x))
    }

    pub fn conjugate(x: CommutatorExpr, g: BraidWord) -> Self {
        CommutatorExpr::Conjugate(Box::new(x), g)
    }

    pub fn strands(&self) -> usize {
        match self {
            CommutatorExpr::Leaf(w) | CommutatorExpr::Conjugate(_, w) => w.strands(),
            CommutatorExpr::Commutator(x, _) | CommutatorExpr::Inverse(x) => x.strands(),
            CommutatorExpr::Product(xs) => xs.first().map_or(1, |x| x.strands()),
        }
    }

    /// Evaluates bottom-up into a free-reduced word.
    pub fn evaluate(&self) -> BraidWord {
        let k = self.strands();
        let mut letters = Vec::new();
        self.emit(&mut letters, false);
        BraidWord::from_raw(k, braid::reduce_letters(&letters))
    }

    fn emit(&self, out: &mut Vec<i32>, inverted: bool) {
        match self {
            CommutatorExpr::Leaf(w) => {
                if inverted {
                    out.extend(w.letters().iter().rev().map(|l| -l));
                } else {
                    out.extend_from_slice(w.letters());
                }
            }
            CommutatorExpr::Commutator(x, y) => {
                // [x,y]^{-1} = y x y^{-1} x^{-1}
                let order: [(&CommutatorExpr, bool); 4] = if inverted {
                    [(y, false), (x, false), (y, true), (x, true)]
                } else {
                    [(x, false), (y, false), (x, true), (y, true)]
                };
                for (e, inv) in order {
                    e.emit(out, inv);
                }
            }
            CommutatorExpr::Product(xs) => {
                if inverted {
                    for x in xs.iter().rev() {
                        x.emit(out, true);
                    }
                } else {
                    for x in xs {
                        x.emit(out, false);
                    }
                }
            }
            CommutatorExpr::Inverse(x) => x.emit(out, !inverted),
            CommutatorExpr::Conjugate(x, g) => {
                out.extend(g.letters().iter().rev().map(|l| -l));
                x.emit(out, inverted);
                out.extend_from_slice(g.letters());
            }
        }
    }

    pub fn lcs_level(&self) -> u32 {
        match self {
            CommutatorExpr::Leaf(_) => 1,
            CommutatorExpr::Commutator(x, y) => (x.lcs_level() + y.lcs_level()).min(UNBOUNDED),
            CommutatorExpr::Product(xs) => xs.iter().map(|x| x.lcs_level()).min().unwrap_or(UNBOUNDED),
            CommutatorExpr::Inverse(x) | CommutatorExpr::Conjugate(x, _) => x.lcs_level(),
        }
    }

    pub fn ds_level(&self) -> u32 {
        match self {
            CommutatorExpr::Leaf(_) => 1,
            CommutatorExpr::Commutator(x, y) => (x.ds_level().min(y.ds_level()) + 1).min(UNBOUNDED),
            CommutatorExpr::Product(xs) => xs.iter().map(|x| x.ds_level()).min().unwrap_or(UNBOUNDED),
            CommutatorExpr::Inverse(x) | CommutatorExpr::Conjugate(x, _) => x.ds_level(),
        }
    }

    pub fn level(&self, series: Series) -> u32 {
        match series {
            Series::Lcs => self.lcs_level(),
            Series::Ds => self.ds_level(),
        }
    }

    /// Applies `f` to every word in the tree, leaves and conjugators alike.
    pub fn map_words<F>(&self, f: &F) -> Result<Self>
    where
        F: Fn(&BraidWord) -> Result<BraidWord>,
    {
        Ok(match self {
            CommutatorExpr::Leaf(w) => CommutatorExpr::Leaf(f(w)?),
            CommutatorExpr::Commutator(x, y) => {
                CommutatorExpr::commutator(x.map_words(f)?, y.map_words(f)?)
            }
            CommutatorExpr::Product(xs) => CommutatorExpr::Product(
                xs.iter().map(|x| x.map_words(f)).collect::<Result<_>>()?,
            ),
            CommutatorExpr::Inverse(x) => CommutatorExpr::inverse(x.map_words(f)?),
            CommutatorExpr::Conjugate(x, g) => CommutatorExpr::conjugate(x.map_words(f)?, f(g)?),
        })
    }

    pub fn leaves(&self) -> Vec<&BraidWord> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a BraidWord>) {
        match self {
            CommutatorExpr::Leaf(w) => out.push(w),
            CommutatorExpr::Commutator(x, y) => {
                x.collect_leaves(out);
                y.collect_leaves(out);
            }
            CommutatorExpr::Product(xs) => xs.iter().for_each(|x| x.collect_leaves(out)),
            CommutatorExpr::Inverse(x) | CommutatorExpr::Conjugate(x, _) => x.collect_leaves(out),
        }
    }

    pub fn leaves_are_pure(&self) -> bool {
        self.leaves().iter().all(|w| w.is_pure())
    }

    pub fn node_count(&self) -> usize {
        match self {
            CommutatorExpr::Leaf(_) => 1,
            CommutatorExpr::Commutator(x, y) => 1 + x.node_count() + y.node_count(),
            CommutatorExpr::Product(xs) => 1 + xs.iter().map(|x| x.node_count()).sum::<usize>(),
            CommutatorExpr::Inverse(x) | CommutatorExpr::Conjugate(x, _) => 1 + x.node_count(),
        }
    }

    pub fn to_sexpr(&self) -> String {
        sexpr::write(self)
    }

    pub fn parse_sexpr(s: &str) -> Result<Self> {
        sexpr::parse(s)
    }
}

impl fmt::Display for CommutatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sexpr())
    }
}

/// A pure braid word together with a certificate of its series membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedElement {
    word: BraidWord,
    series: Series,
    level: u32,
    certificate: CommutatorExpr,
}

impl CertifiedElement {
    /// Checks the certificate against the word and the declared level.
    pub fn new(word: BraidWord, series: Series, level: u32, certificate: CommutatorExpr) -> Result<Self> {
        if !certificate.leaves_are_pure() {
            return Err(Error::Inconsistent("certificate has an impure leaf".into()));
        }
        if certificate.level(series) < level {
            return Err(Error::Inconsistent(format!(
                "certificate reaches {} level {}, declared {}",
                series,
                certificate.level(series),
                level
            )));
        }
        if !equal(&word, &certificate.evaluate())? {
            return Err(Error::Inconsistent("word differs from its certificate".into()));
        }
        Ok(Self {
            word,
            series,
            level,
            certificate,
        })
    }

    /// Certified at the level the tree shape gives, with the evaluated word.
    pub fn from_certificate(certificate: CommutatorExpr, series: Series) -> Result<Self> {
        if !certificate.leaves_are_pure() {
            return Err(Error::Inconsistent("certificate has an impure leaf".into()));
        }
        Ok(Self {
            word: certificate.evaluate(),
            series,
            level: certificate.level(series),
            certificate,
        })
    }

    /// Skips the word check; used where the word is the certificate's own
    /// evaluation or has just been verified by the caller.
    pub(crate) fn trusted(word: BraidWord, series: Series, level: u32, certificate: CommutatorExpr) -> Self {
        debug_assert!(certificate.level(series) >= level);
        Self {
            word,
            series,
            level,
            certificate,
        }
    }

    pub fn leaf(word: BraidWord) -> Result<Self> {
        if !word.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(Self {
            certificate: CommutatorExpr::Leaf(word.clone()),
            word,
            series: Series::Lcs,
            level: 1,
        })
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn certificate(&self) -> &CommutatorExpr {
        &self.certificate
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn lcs_level(&self) -> u32 {
        self.certificate.lcs_level()
    }

    pub fn ds_level(&self) -> u32 {
        self.certificate.ds_level()
    }

    /// Whether the certificate proves membership in the given term. A
    /// derived-series certificate at level `n` also proves lower-central
    /// level `2^(n-1)`, which the tree-shape computation already reflects.
    pub fn certifies(&self, series: Series, level: u32) -> bool {
        self.certificate.level(series) >= level
    }

    /// Re-runs every check of [`CertifiedElement::new`].
    pub fn verify(&self) -> Result<bool> {
        Ok(self.word.is_pure()
            && self.certificate.leaves_are_pure()
            && self.certificate.level(self.series) >= self.level
            && equal(&self.word, &self.certificate.evaluate())?)
    }

    pub fn with_series(&self, series: Series) -> Self {
        Self {
            level: self.certificate.level(series),
            series,
            ..self.clone()
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            word: self.word.invert(),
            series: self.series,
            level: self.level,
            certificate: CommutatorExpr::inverse(self.certificate.clone()),
        }
    }

    /// `g^{-1} x g`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<Self> {
        Ok(Self {
            word: braid::conjugate(&self.word, g)?,
            series: self.series,
            level: self.level,
            certificate: CommutatorExpr::conjugate(self.certificate.clone(), g.clone()),
        })
    }

    /// Product in the given order, certified at the minimum level.
    pub fn product(items: &[CertifiedElement], series: Series) -> Result<Self> {
        let first = items
            .first()
            .ok_or_else(|| Error::Precondition("empty product".into()))?;
        let k = first.strands();
        let word = BraidWord::concat_all(k, items.iter().map(|x| &x.word))?.free_reduce();
        let certificate = CommutatorExpr::Product(items.iter().map(|x| x.certificate.clone()).collect());
        let level = items.iter().map(|x| x.certificate.level(series)).min().unwrap_or(1);
        Ok(Self {
            word,
            series,
            level,
            certificate,
        })
    }

    pub fn include(&self, m: usize) -> Result<Self> {
        Ok(Self {
            word: self.word.include(m)?,
            series: self.series,
            level: self.level,
            certificate: self.certificate.map_words(&|w| w.include(m))?,
        })
    }

    /// Image under the mirror automorphism `σ_i -> σ_i^{-1}`, which preserves
    /// both series.
    pub fn mirror(&self) -> Result<Self> {
        Ok(Self {
            word: self.word.mirror(),
            series: self.series,
            level: self.level,
            certificate: self.certificate.map_words(&|w| Ok(w.mirror()))?,
        })
    }

    /// Replaces the word by an equal spelling, checked by the word problem.
    pub fn respell(&self, word: BraidWord) -> Result<Self> {
        if !equal(&word, &self.word)? {
            return Err(Error::Inconsistent("respelling changes the element".into()));
        }
        Ok(Self { word, ..self.clone() })
    }
}

/// Commutator of two lower-central certified elements at level `m + n`.
pub fn level_of_commutator(x: &CertifiedElement, y: &CertifiedElement) -> Result<CertifiedElement> {
    let word = braid::commutator(&x.word, &y.word)?;
    let certificate = CommutatorExpr::commutator(x.certificate.clone(), y.certificate.clone());
    let level = x.certificate.lcs_level() + y.certificate.lcs_level();
    Ok(CertifiedElement::trusted(word, Series::Lcs, level, certificate))
}

/// Includes into `B_m` and conjugates by `t_m^offset`, which moves the
/// support `offset` strands to the right. The word is the literal shift,
/// checked against the conjugate.
pub fn strand_shift(e: &CertifiedElement, offset: usize, m: usize) -> Result<CertifiedElement> {
    if e.strands() + offset > m {
        return Err(Error::Range(format!(
            "{} strands shifted by {} exceed {}",
            e.strands(),
            offset,
            m
        )));
    }
    let included = e.include(m)?;
    if offset == 0 {
        return Ok(included);
    }
    let g = twist(m).pow(offset as i64);
    let word = e.word.shift(offset, m)?;
    let certificate = CommutatorExpr::conjugate(included.certificate.clone(), g);
    if !equal(&word, &certificate.evaluate())? {
        return Err(Error::Inconsistent("shifted word differs from t-conjugate".into()));
    }
    Ok(CertifiedElement::trusted(word, e.series, e.level, certificate))
}

fn random_band<R: Rng>(rng: &mut R, k: usize) -> CommutatorExpr {
    let i = rng.gen_range(1..k);
    let j = rng.gen_range(i + 1..=k);
    let g = braid::pure_generator(i, j, k).expect("indices in range");
    if rng.gen_bool(0.5) {
        CommutatorExpr::Leaf(g)
    } else {
        CommutatorExpr::Leaf(g.invert())
    }
}

const SAMPLE_TRIES: usize = 64;

fn sample_with<F>(k: usize, n: u32, seed: u64, stream: u64, series: Series, build: F) -> Result<CertifiedElement>
where
    F: Fn(&mut crate::rng::SeededRng, u32) -> CommutatorExpr,
{
    if k < 2 || n < 1 {
        return Err(Error::Precondition(format!("sampling needs k >= 2 and n >= 1, got k={} n={}", k, n)));
    }
    let mut rng = seeded(seed, stream);
    let mut last = None;
    for _ in 0..SAMPLE_TRIES {
        let cert = build(&mut rng, n);
        let word = cert.evaluate();
        let trivial = is_trivial(&word);
        let level = cert.level(series);
        let e = CertifiedElement::trusted(word, series, level, cert);
        if !trivial {
            return Ok(e);
        }
        last = Some(e);
    }
    // P_2 is abelian: every commutator there is trivial
    Ok(last.expect("at least one attempt"))
}

/// A left-nested commutator `[[..[g_1, g_2], ..], g_n]` of band generators.
pub fn lcs_sample(k: usize, n: u32, seed: u64) -> Result<CertifiedElement> {
    sample_with(k, n, seed, 1, Series::Lcs, |rng, n| {
        let mut cert = random_band(rng, k);
        for _ in 1..n {
            cert = CommutatorExpr::commutator(cert, random_band(rng, k));
        }
        cert
    })
}

/// A balanced commutator tree of depth `n - 1` over band generators.
pub fn ds_sample(k: usize, n: u32, seed: u64) -> Result<CertifiedElement> {
    fn build<R: Rng>(rng: &mut R, k: usize, n: u32) -> CommutatorExpr {
        if n <= 1 {
            random_band(rng, k)
        } else {
            let x = build(rng, k, n - 1);
            let y = build(rng, k, n - 1);
            CommutatorExpr::commutator(x, y)
        }
    }
    sample_with(k, n, seed, 2, Series::Ds, |rng, n| build(rng, k, n))
}
