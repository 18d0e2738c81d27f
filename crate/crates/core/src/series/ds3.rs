//! Derived-series words in `P_3` with prescribed letter shapes, and the
//! rewriting of `B_3` words into the letters `a = σ1`, `B = σ2^{-1}` modulo
//! `DS_n(P_3)`.
//!
//! Notation: `A = a^{-1}`, `b = σ2`, `d = aba`, `D = d^{-1}`, `w` any word in
//! `a` and `B`. Conjugation by `d` swaps `σ1` and `σ2`, so `d X D` is the
//! letter swap of `X`; moving `D` to the right through `X` is therefore
//! `D X = flip(X) D` exactly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::{CertifiedElement, CommutatorExpr, Series};
use crate::braid::{self, BraidWord};
use crate::error::{Error, Result};
use crate::word_problem::equal;

const A: i32 = 1;
const B: i32 = -2;
const CAPITAL_D: [i32; 3] = [-1, -2, -1];
const SMALL_D: [i32; 3] = [1, 2, 1];

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ds3Form {
    awa,
    awB,
    Bwa,
    BwB,
    awaD,
    awBD,
    BwaD,
    BwBD,
    dawa,
    dawB,
    dBwa,
    dBwB,
}

impl Ds3Form {
    pub const ALL: [Ds3Form; 12] = [
        Ds3Form::awa,
        Ds3Form::awB,
        Ds3Form::Bwa,
        Ds3Form::BwB,
        Ds3Form::awaD,
        Ds3Form::awBD,
        Ds3Form::BwaD,
        Ds3Form::BwBD,
        Ds3Form::dawa,
        Ds3Form::dawB,
        Ds3Form::dBwa,
        Ds3Form::dBwB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Ds3Form::awa => "awa",
            Ds3Form::awB => "awB",
            Ds3Form::Bwa => "Bwa",
            Ds3Form::BwB => "BwB",
            Ds3Form::awaD => "awaD",
            Ds3Form::awBD => "awBD",
            Ds3Form::BwaD => "BwaD",
            Ds3Form::BwBD => "BwBD",
            Ds3Form::dawa => "dawa",
            Ds3Form::dawB => "dawB",
            Ds3Form::dBwa => "dBwa",
            Ds3Form::dBwB => "dBwB",
        }
    }

    /// `(leading d, first core letter, last core letter, trailing D)`.
    fn shape(self) -> (bool, i32, i32, bool) {
        let s = self.as_str().as_bytes();
        let lead = s[0] == b'd';
        let trail = s[s.len() - 1] == b'D';
        let core = &s[lead as usize..s.len() - trail as usize];
        let letter = |c: u8| if c == b'a' { A } else { B };
        (lead, letter(core[0]), letter(core[core.len() - 1]), trail)
    }

    /// Whether `word` literally has this shape, with `d` and `D` expanded.
    pub fn matches(self, word: &BraidWord) -> bool {
        if word.strands() != 3 {
            return false;
        }
        let (lead, first, last, trail) = self.shape();
        let mut l = word.letters();
        if lead {
            match l.strip_prefix(&SMALL_D[..]) {
                Some(rest) => l = rest,
                None => return false,
            }
        }
        if trail {
            match l.strip_suffix(&CAPITAL_D[..]) {
                Some(rest) => l = rest,
                None => return false,
            }
        }
        l.len() >= 2
            && l[0] == first
            && l[l.len() - 1] == last
            && l.iter().all(|&x| x == A || x == B)
    }
}

impl fmt::Display for Ds3Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Ds3Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ds3Form::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown form `{}`", s)))
    }
}

/// One checked equality produced while building the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedEquation {
    pub level: u32,
    pub statement: String,
}

/// Words of every form certified in `DS_n(P_3)`.
#[derive(Debug, Clone)]
pub struct Ds3Words {
    level: u32,
    words: BTreeMap<Ds3Form, CertifiedElement>,
    equations: Vec<CheckedEquation>,
}

impl Ds3Words {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn get(&self, form: Ds3Form) -> &CertifiedElement {
        &self.words[&form]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Ds3Form, &CertifiedElement)> {
        self.words.iter().map(|(f, e)| (*f, e))
    }

    /// Every equality verified on the way up, lowest level first.
    pub fn equations(&self) -> &[CheckedEquation] {
        &self.equations
    }
}

fn word3(letters: Vec<i32>) -> BraidWord {
    BraidWord::from_raw(3, letters)
}

fn capital_d_word() -> BraidWord {
    word3(CAPITAL_D.to_vec())
}

fn flip_letters(l: &[i32]) -> Vec<i32> {
    l.iter().map(|&x| x.signum() * (3 - x.abs())).collect()
}

/// Shortest pure word of the given shape, cores enumerated by length then
/// lexicographically over `{a, B}`.
fn base_word(form: Ds3Form, bound: usize) -> Option<BraidWord> {
    let (lead, first, last, trail) = form.shape();
    for len in 0..=bound {
        for mask in 0u32..(1u32 << len) {
            let mut l = Vec::with_capacity(len + 8);
            if lead {
                l.extend_from_slice(&SMALL_D);
            }
            l.push(first);
            l.extend((0..len).map(|i| if mask >> (len - 1 - i) & 1 == 0 { A } else { B }));
            l.push(last);
            if trail {
                l.extend_from_slice(&CAPITAL_D);
            }
            let w = word3(l);
            if w.is_pure() {
                return Some(w);
            }
        }
    }
    None
}

fn base_level(bound: usize) -> Result<Ds3Words> {
    let mut words = BTreeMap::new();
    for form in Ds3Form::ALL {
        let w = base_word(form, bound).ok_or_else(|| {
            Error::SearchExhausted(format!("no pure {} word with core length <= {}", form, bound))
        })?;
        let e = CertifiedElement::leaf(w)?.with_series(Series::Ds);
        words.insert(form, e);
    }
    Ok(Ds3Words {
        level: 1,
        words,
        equations: Vec::new(),
    })
}

/// `[x, y] = P a flip(Q) D` where `xy = P B` and `x^{-1} y^{-1} = A Q`.
fn commutator_step(
    x: &CertifiedElement,
    y: &CertifiedElement,
    form: Ds3Form,
    level: u32,
    equations: &mut Vec<CheckedEquation>,
) -> Result<CertifiedElement> {
    let (xl, yl) = (x.word().letters(), y.word().letters());
    debug_assert_eq!(*xl.last().unwrap(), A);
    debug_assert_eq!(*yl.last().unwrap(), B);
    let mut p: Vec<i32> = xl.iter().chain(yl.iter()).copied().collect();
    p.pop();
    let inv_x = x.word().invert();
    let inv_y = y.word().invert();
    let q: Vec<i32> = inv_x.letters()[1..]
        .iter()
        .chain(inv_y.letters().iter())
        .copied()
        .collect();
    let mut letters = p;
    letters.push(A);
    letters.extend(flip_letters(&q));
    letters.extend_from_slice(&CAPITAL_D);
    let word = word3(letters);
    let certificate = CommutatorExpr::commutator(x.certificate().clone(), y.certificate().clone());
    if !equal(&word, &braid::commutator(x.word(), y.word())?)? {
        return Err(Error::Inconsistent(format!("commutator rewrite for {} failed", form)));
    }
    if !form.matches(&word) {
        return Err(Error::Inconsistent(format!("commutator word is not of form {}", form)));
    }
    equations.push(CheckedEquation {
        level,
        statement: format!("[{}, {}] = {}", form_of(x), form_of(y), form),
    });
    Ok(CertifiedElement::trusted(word, Series::Ds, level, certificate))
}

fn form_of(e: &CertifiedElement) -> &'static str {
    Ds3Form::ALL
        .into_iter()
        .find(|f| f.matches(e.word()))
        .map_or("?", |f| f.as_str())
}

/// `d u^{-1} D = d flip(P^{-1})` for `u = P D`.
fn d_step(u: &CertifiedElement, form: Ds3Form, equations: &mut Vec<CheckedEquation>) -> Result<CertifiedElement> {
    let l = u.word().letters();
    let p = &l[..l.len() - 3];
    let p_inv: Vec<i32> = p.iter().rev().map(|x| -x).collect();
    let mut letters = SMALL_D.to_vec();
    letters.extend(flip_letters(&p_inv));
    let word = word3(letters);
    let certificate = CommutatorExpr::conjugate(CommutatorExpr::inverse(u.certificate().clone()), capital_d_word());
    if !equal(&word, &certificate.evaluate())? {
        return Err(Error::Inconsistent(format!("d-conjugation for {} failed", form)));
    }
    if !form.matches(&word) {
        return Err(Error::Inconsistent(format!("conjugated word is not of form {}", form)));
    }
    equations.push(CheckedEquation {
        level: u.level(),
        statement: format!("d ({})^-1 D = {}", form_of(u), form),
    });
    Ok(CertifiedElement::trusted(word, Series::Ds, u.level(), certificate))
}

/// `(P D)(d Q) = P Q`.
fn join_step(
    u: &CertifiedElement,
    v: &CertifiedElement,
    form: Ds3Form,
    equations: &mut Vec<CheckedEquation>,
) -> Result<CertifiedElement> {
    let (ul, vl) = (u.word().letters(), v.word().letters());
    let mut letters = ul[..ul.len() - 3].to_vec();
    letters.extend_from_slice(&vl[3..]);
    let word = word3(letters);
    let certificate = CommutatorExpr::Product(vec![u.certificate().clone(), v.certificate().clone()]);
    if !equal(&word, &certificate.evaluate())? || !form.matches(&word) {
        return Err(Error::Inconsistent(format!("joining into {} failed", form)));
    }
    equations.push(CheckedEquation {
        level: u.level(),
        statement: format!("({})({}) = {}", form_of(u), form_of(v), form),
    });
    let level = u.level().min(v.level());
    Ok(CertifiedElement::trusted(word, Series::Ds, level, certificate))
}

fn next_level(prev: &Ds3Words) -> Result<Ds3Words> {
    use Ds3Form::*;
    let level = prev.level + 1;
    let mut equations = prev.equations.clone();
    let mut words = BTreeMap::new();
    for (x, y, form) in [(awa, awB, awBD), (awa, BwB, awaD), (Bwa, awB, BwBD), (Bwa, BwB, BwaD)] {
        let e = commutator_step(prev.get(x), prev.get(y), form, level, &mut equations)?;
        words.insert(form, e);
    }
    for (u, form) in [(awaD, dBwB), (awBD, dawB), (BwBD, dawa), (BwaD, dBwa)] {
        let e = d_step(&words[&u], form, &mut equations)?;
        words.insert(form, e);
    }
    for (u, v, form) in [(awaD, dawa, awa), (awaD, dawB, awB), (BwaD, dawa, Bwa), (BwaD, dawB, BwB)] {
        let e = join_step(&words[&u], &words[&v], form, &mut equations)?;
        words.insert(form, e);
    }
    Ok(Ds3Words {
        level,
        words,
        equations,
    })
}

type Cache = Mutex<HashMap<(u32, usize), Arc<Ds3Words>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Words of every form in `DS_n(P_3)`; the level-1 words come from a search
/// over cores of length at most `base_bound`.
pub fn ds3_words(n: u32, base_bound: usize) -> Result<Arc<Ds3Words>> {
    if n < 1 {
        return Err(Error::Precondition("level must be at least 1".into()));
    }
    if let Some(hit) = cache().lock().expect("cache lock").get(&(n, base_bound)) {
        return Ok(Arc::clone(hit));
    }
    let result = if n == 1 {
        base_level(base_bound)?
    } else {
        next_level(ds3_words(n - 1, base_bound)?.as_ref())?
    };
    let result = Arc::new(result);
    cache()
        .lock()
        .expect("cache lock")
        .insert((n, base_bound), Arc::clone(&result));
    Ok(result)
}

pub const DEFAULT_BASE_BOUND: usize = 12;

/// A certified element inserted into the gap before letter `position`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub position: usize,
    pub element: CertifiedElement,
}

#[derive(Debug, Clone)]
pub struct DsRewrite {
    /// The rewritten word in `a` and `B` only.
    pub output: BraidWord,
    pub insertions: Vec<Insertion>,
    /// `x' x^{-1}` as a product of conjugates of the insertions.
    pub quotient: CertifiedElement,
}

/// Inserts the elements into `x`; insertions sharing a gap go in list order.
pub fn reassemble(x: &BraidWord, insertions: &[Insertion]) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let mut next = insertions.iter().peekable();
    for gap in 0..=x.len() {
        while let Some(ins) = next.next_if(|i| i.position == gap) {
            if ins.element.strands() != x.strands() {
                return Err(Error::StrandMismatch {
                    left: x.strands(),
                    right: ins.element.strands(),
                });
            }
            letters.extend_from_slice(ins.element.word().letters());
        }
        if gap < x.len() {
            letters.push(x.letters()[gap]);
        }
    }
    if next.peek().is_some() {
        return Err(Error::Range("insertions out of order or past the end".into()));
    }
    Ok(BraidWord::from_raw(x.strands(), letters))
}

/// Replaces `A` by `P B Q` and `b` by `P a Q`, where `P D` and `d Q` are
/// certified in `DS_n(P_3)`; the output is congruent to `x` modulo
/// `DS_n(P_3)`.
pub fn rewrite_mod_ds(x: &BraidWord, n: u32) -> Result<DsRewrite> {
    if x.strands() != 3 {
        return Err(Error::Precondition(format!("expected a word in B3, got B{}", x.strands())));
    }
    let words = ds3_words(n, DEFAULT_BASE_BOUND)?;
    let left = words.get(Ds3Form::awaD);
    let right = words.get(Ds3Form::dawa);
    let p = &left.word().letters()[..left.word().len() - 3];
    let q = &right.word().letters()[3..];

    let mut out = Vec::new();
    let mut insertions = Vec::new();
    for (i, &l) in x.letters().iter().enumerate() {
        match l {
            A | B => out.push(l),
            -1 | 2 => {
                out.extend_from_slice(p);
                out.push(if l == -1 { B } else { A });
                out.extend_from_slice(q);
                insertions.push(Insertion {
                    position: i,
                    element: left.clone(),
                });
                insertions.push(Insertion {
                    position: i + 1,
                    element: right.clone(),
                });
            }
            _ => unreachable!("letters of a B3 word"),
        }
    }
    let output = word3(out);
    if !equal(&reassemble(x, &insertions)?, &output)? {
        return Err(Error::Inconsistent("reassembly differs from the rewritten word".into()));
    }

    let mut factors = Vec::with_capacity(insertions.len());
    for ins in &insertions {
        let prefix = word3(x.letters()[..ins.position].to_vec());
        factors.push(ins.element.conjugate(&prefix.invert())?);
    }
    let quotient = if factors.is_empty() {
        CertifiedElement::trusted(
            BraidWord::identity(3),
            Series::Ds,
            n,
            CommutatorExpr::Product(Vec::new()),
        )
    } else {
        CertifiedElement::product(&factors, Series::Ds)?
    };
    if !equal(quotient.word(), &output.compose(&x.invert())?)? {
        return Err(Error::Inconsistent("quotient certificate does not evaluate to x' x^-1".into()));
    }
    Ok(DsRewrite {
        output,
        insertions,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_problem::is_trivial;

    #[test]
    fn forms_parse_and_match() {
        for f in Ds3Form::ALL {
            assert_eq!(f.as_str().parse::<Ds3Form>().unwrap(), f);
        }
        let w: BraidWord = "B3: 1 -2 1".parse().unwrap();
        assert!(Ds3Form::awa.matches(&w));
        assert!(!Ds3Form::awB.matches(&w));
        let w: BraidWord = "B3: 1 2 1 1 1 -1 -2 -1".parse().unwrap();
        assert!(!Ds3Form::dawa.matches(&w));
        assert!(!Ds3Form::awaD.matches(&w));
        assert!(!Ds3Form::awa.matches(&"B3: 1".parse().unwrap()));
    }

    #[test]
    fn base_words_are_pure_and_shaped() {
        let w = ds3_words(1, DEFAULT_BASE_BOUND).unwrap();
        assert_eq!(w.get(Ds3Form::awa).word().to_string(), "B3: 1 1");
        for (form, e) in w.iter() {
            assert!(form.matches(e.word()), "{} {}", form, e.word());
            assert!(e.word().is_pure());
            assert!(!is_trivial(e.word()));
        }
    }

    #[test]
    fn tiny_bound_is_reported() {
        assert!(matches!(ds3_words(1, 0), Err(Error::SearchExhausted(_))));
    }

    #[test]
    fn level_two_and_three() {
        for n in 2..=3 {
            let w = ds3_words(n, DEFAULT_BASE_BOUND).unwrap();
            assert_eq!(w.level(), n);
            for (form, e) in w.iter() {
                assert!(form.matches(e.word()), "{}", form);
                assert_eq!(e.ds_level(), n);
                assert!(e.verify().unwrap());
                assert!(!is_trivial(e.word()));
            }
        }
    }

    #[test]
    fn awbd_is_the_commutator() {
        let w1 = ds3_words(1, DEFAULT_BASE_BOUND).unwrap();
        let w2 = ds3_words(2, DEFAULT_BASE_BOUND).unwrap();
        let c = braid::commutator(w1.get(Ds3Form::awa).word(), w1.get(Ds3Form::awB).word()).unwrap();
        assert!(equal(&c, w2.get(Ds3Form::awBD).word()).unwrap());
    }

    #[test]
    fn rewrite_examples() {
        let x: BraidWord = "B3: 1 -2 1".parse().unwrap();
        let r = rewrite_mod_ds(&x, 2).unwrap();
        assert_eq!(r.output, x);
        assert!(r.insertions.is_empty());

        let x: BraidWord = "B3: -1".parse().unwrap();
        let r = rewrite_mod_ds(&x, 1).unwrap();
        assert_eq!(r.insertions.len(), 2);
        assert!(r.output.letters().iter().all(|&l| l == 1 || l == -2));
        assert!(r.output.letters().contains(&-2));
        assert!(r.quotient.verify().unwrap());
    }

    #[test]
    fn reassemble_rejects_bad_positions() {
        let x: BraidWord = "B3: 1".parse().unwrap();
        let e = CertifiedElement::leaf("B3: 1 1".parse().unwrap()).unwrap();
        let bad = vec![Insertion { position: 5, element: e }];
        assert!(reassemble(&x, &bad).is_err());
    }
}
