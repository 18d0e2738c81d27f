use super::EquivalenceWitness;
use crate::braid::{conjugate, BraidWord};
use crate::error::{Error, Result};
use crate::series::CertifiedElement;
use crate::word_problem::equal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovMove {
    /// `b ↦ b σ_k^{±1}` into `B_{k+1}`.
    Stabilize(i32),
    /// Inverse of a stabilization, after cyclic rotation.
    Destabilize,
    /// `b ↦ g^{-1} b g`.
    Conjugate(BraidWord),
}

pub fn markov(b: &BraidWord, mv: &MarkovMove) -> Result<BraidWord> {
    match mv {
        MarkovMove::Stabilize(sign) => {
            let k = b.strands();
            let s = BraidWord::generator(k, *sign, k + 1)?;
            b.include(k + 1)?.compose(&s)
        }
        MarkovMove::Destabilize => destabilize(b),
        MarkovMove::Conjugate(g) => conjugate(b, g),
    }
}

fn destabilize(b: &BraidWord) -> Result<BraidWord> {
    let k = b.strands();
    if k < 2 {
        return Err(Error::DestabilizeFailed);
    }
    let top = (k - 1) as i32;
    let attempt = |letters: &[i32]| -> Option<BraidWord> {
        let hits: Vec<usize> = (0..letters.len()).filter(|&i| letters[i].abs() == top).collect();
        if hits.len() != 1 {
            return None;
        }
        let j = hits[0];
        // u σ v is conjugate to v u σ
        let mut rest = letters[j + 1..].to_vec();
        rest.extend_from_slice(&letters[..j]);
        Some(BraidWord::from_raw(k - 1, rest))
    };
    if let Some(w) = attempt(b.letters()) {
        return Ok(w);
    }
    let mut letters = b.free_reduce().letters().to_vec();
    while letters.len() >= 2 && letters[0] == -letters[letters.len() - 1] {
        letters.pop();
        letters.remove(0);
    }
    attempt(&letters).ok_or(Error::DestabilizeFailed)
}

/// `y = b (a^{-1} x a σ_k^{sign}) b^{-1}` in `B_{k+1}`, so `[x] < [y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub x: BraidWord,
    pub a: BraidWord,
    pub b: BraidWord,
    pub sign: i32,
}

impl Stabilization {
    pub fn new(x: BraidWord, a: BraidWord, b: BraidWord, sign: i32) -> Result<Self> {
        let k = x.strands();
        if a.strands() != k {
            return Err(Error::StrandMismatch {
                left: k,
                right: a.strands(),
            });
        }
        if b.strands() != k + 1 {
            return Err(Error::StrandMismatch {
                left: k + 1,
                right: b.strands(),
            });
        }
        if sign.abs() != 1 {
            return Err(Error::Range(format!("stabilization sign {}", sign)));
        }
        Ok(Self { x, a, b, sign })
    }

    /// The stabilized braid `y`.
    pub fn target(&self) -> Result<BraidWord> {
        let k = self.x.strands();
        let inner = conjugate(&self.x, &self.a)?.include(k + 1)?;
        let s = BraidWord::generator(k, self.sign, k + 1)?;
        conjugate(&inner.compose(&s)?, &self.b.invert())
    }
}

/// `j = b a^{-1} h a b^{-1}`, so that `[h x] < [j y]`.
pub fn lift_stabilization(h: &CertifiedElement, s: &Stabilization) -> Result<CertifiedElement> {
    let k = s.x.strands();
    if h.strands() != k {
        return Err(Error::StrandMismatch {
            left: k,
            right: h.strands(),
        });
    }
    let g = s.a.include(k + 1)?.compose(&s.b.invert())?;
    h.include(k + 1)?.conjugate(&g)
}

/// `d = α^{-1} σ_{k+1} σ_k^{ε1} b α σ_{k+1}^{-1} σ_k^{ε2}` lying over both
/// `c1 = b σ_k^{ε1}` and `c2 = α^{-1} b α σ_k^{ε2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovJoin {
    pub d: BraidWord,
    pub c1: BraidWord,
    pub c2: BraidWord,
    /// Carries `c1` to `d`.
    pub from_c1: Stabilization,
    /// Carries `c2` to `d`.
    pub from_c2: Stabilization,
}

pub fn markov_join(b: &BraidWord, alpha: &BraidWord, e1: i32, e2: i32) -> Result<MarkovJoin> {
    let k = b.strands();
    if alpha.strands() != k {
        return Err(Error::StrandMismatch {
            left: k,
            right: alpha.strands(),
        });
    }
    if e1.abs() != 1 || e2.abs() != 1 {
        return Err(Error::Range("stabilization signs must be ±1".into()));
    }
    let m = k + 2;
    let s = |i: usize, e: i32| BraidWord::generator(i, e, m);
    let (bm, am) = (b.include(m)?, alpha.include(m)?);
    let d = BraidWord::concat_all(m, [&am.invert(), &s(k + 1, 1)?, &s(k, e1)?, &bm, &am, &s(k + 1, -1)?, &s(k, e2)?])?;
    let s1 = |i: usize, e: i32| BraidWord::generator(i, e, k + 1);
    let c1 = b.include(k + 1)?.compose(&s1(k, e1)?)?;
    let alpha1 = alpha.include(k + 1)?;
    let c2 = BraidWord::concat_all(k + 1, [&alpha1.invert(), &b.include(k + 1)?, &alpha1, &s1(k, e2)?])?;

    let a2 = alpha1.invert().compose(&s1(k, -1)?)?;
    let from_c2 = Stabilization::new(c2.clone(), a2.clone(), a2.include(m)?.compose(&s(k + 1, e1)?)?, e1)?;
    let a1 = BraidWord::concat_all(k + 1, [&b.include(k + 1)?, &alpha1, &s1(k, 1)?])?;
    let from_c1 = Stabilization::new(c1.clone(), a1, s(k + 1, 1)?.compose(&s(k, 1)?)?, e2)?;
    for st in [&from_c1, &from_c2] {
        if !equal(&st.target()?, &d)? {
            return Err(Error::Inconsistent("join does not stabilize both braids".into()));
        }
    }
    Ok(MarkovJoin {
        d,
        c1,
        c2,
        from_c1,
        from_c2,
    })
}

/// Checks that `chain` starts at `start`, is consecutive, and returns its top.
fn chain_top(start: &BraidWord, chain: &[Stabilization]) -> Result<BraidWord> {
    let mut cur = start.clone();
    for st in chain {
        if st.x.strands() != cur.strands() || !equal(&st.x, &cur)? {
            return Err(Error::Inconsistent("stabilization chain is not consecutive".into()));
        }
        cur = st.target()?;
    }
    Ok(cur)
}

/// Joins `cl(b1) ~ cl(h1 b1)` and `cl(b2) ~ cl(h2 b2)` through a common
/// braid `z` over both `h1 b1` and `b2`, given the two stabilization
/// chains up to `z`. The result has base `h' z` with `cl(h' z) = cl(b1)`
/// and mover `j' h'^{-1}`.
pub fn compose_witnesses(
    w1: &EquivalenceWitness,
    w2: &EquivalenceWitness,
    chain1: &[Stabilization],
    chain2: &[Stabilization],
) -> Result<EquivalenceWitness> {
    let z1 = chain_top(&w1.moved(), chain1)?;
    let z2 = chain_top(w2.base(), chain2)?;
    if z1.strands() != z2.strands() || !equal(&z1, &z2)? {
        return Err(Error::Inconsistent("chains do not meet".into()));
    }
    let mut h = w1.mover().inverse();
    for st in chain1 {
        h = lift_stabilization(&h, st)?;
    }
    let mut j = w2.mover().clone();
    for st in chain2 {
        j = lift_stabilization(&j, st)?;
    }
    let base = h.word().compose(&z1)?;
    let mover = CertifiedElement::product(&[j, h.inverse()], w1.series())?;
    EquivalenceWitness::new(base, mover)
}
