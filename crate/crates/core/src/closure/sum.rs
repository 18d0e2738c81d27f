use super::{connected_sum, EquivalenceWitness};
use crate::braid::{conjugate, twist, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::series::{level_of_commutator, CertifiedElement, Series};

/// The chain `b_i = x t^{-i} y t^{i+1}` in `B_{2k}` from `b_0 = x y t` to
/// `b_k = x # y`, one equivalence step per index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slide {
    pub braids: Vec<BraidWord>,
    /// `steps[i]` has base `b_{i+1}`; its moved braid is `b_i` conjugated by
    /// `conjugator`.
    pub steps: Vec<EquivalenceWitness>,
    pub conjugator: BraidWord,
}

pub fn slide(x: &CertifiedElement, y: &CertifiedElement) -> Result<Slide> {
    let k = x.strands();
    if y.strands() != k {
        return Err(Error::StrandMismatch {
            left: k,
            right: y.strands(),
        });
    }
    let m = 2 * k;
    let t = twist(m);
    let xc = x.include(m)?;
    let yc = y.include(m)?;
    let xm = xc.word().clone();
    let g = xm.compose(&t)?;
    let b = |i: usize| -> Result<BraidWord> {
        BraidWord::concat_all(m, [&xm, &t.pow(-(i as i64)), yc.word(), &t.pow(i as i64 + 1)]).map(|w| w.free_reduce())
    };
    let mut braids = vec![b(0)?];
    let mut steps = Vec::with_capacity(k);
    for i in 0..k {
        let next = b(i + 1)?;
        let u = yc.conjugate(&t.pow(i as i64 + 1))?;
        let mover = level_of_commutator(&u, &xc)?;
        // both sides reduce freely to u x t
        let uxt = BraidWord::concat_all(m, [u.word(), &xm, &t])?.free_reduce();
        let lhs = conjugate(&braids[i], &g)?.free_reduce();
        let rhs = mover.word().compose(&next)?.free_reduce();
        if lhs != uxt || rhs != uxt {
            return Err(Error::Inconsistent(format!("slide step {} does not reduce", i)));
        }
        steps.push(EquivalenceWitness::new(next.clone(), mover)?);
        braids.push(next);
    }
    Ok(Slide {
        braids,
        steps,
        conjugator: g,
    })
}

/// Factors `cl(q_i t)` whose sum with the input knot is the closure of an
/// element of the `n`-th lower central subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcsInverse {
    /// Pure braids `q_i`; the factor knots are `cl(q_i t)`.
    pub factors: Vec<BraidWord>,
    /// A braid closing to the sum of the factors.
    pub braid: BraidWord,
    /// `cl(sum · t)` is the input knot plus every factor.
    pub sum: CertifiedElement,
}

/// Word with permutation `pi`, by bubble sort.
fn realize(pi: &Permutation) -> BraidWord {
    let k = pi.len();
    let mut arr: Vec<usize> = (0..k).collect();
    let mut letters = Vec::new();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 1..k {
            if pi.apply(arr[i - 1]) > pi.apply(arr[i]) {
                arr.swap(i - 1, i);
                letters.push(i as i32);
                sorted = false;
            }
        }
    }
    BraidWord::from_raw(k, letters)
}

/// `g` with `g^{-1} b g` having the permutation of `t_k`.
fn align(b: &BraidWord) -> Result<BraidWord> {
    let k = b.strands();
    let target = twist(k).permutation();
    let (pb, mut image) = (b.permutation(), vec![0; k]);
    let (mut x, mut y) = (0, 0);
    for _ in 0..k {
        image[x] = y;
        x = pb.apply(x);
        y = target.apply(y);
    }
    let g = realize(&Permutation::new(image)?);
    for cand in [g.clone(), g.invert()] {
        if conjugate(b, &cand)?.permutation() == target {
            return Ok(cand);
        }
    }
    Err(Error::Inconsistent("cannot align the closure permutation".into()))
}

pub fn lcs_inverse(b: &BraidWord, n: u32) -> Result<LcsInverse> {
    let cycles = b.permutation().cycles().len();
    if cycles != 1 {
        return Err(Error::NotAKnot { components: cycles });
    }
    if n < 1 {
        return Err(Error::Range("level must be at least 1".into()));
    }
    let k = b.strands();
    let g = align(b)?;
    let p = conjugate(b, &g)?.compose(&twist(k).invert())?.free_reduce();
    let mut h = CertifiedElement::leaf(p)?;
    let mut factors = Vec::new();
    while h.level() < n {
        let q = h.inverse();
        factors.push(q.word().clone());
        let s = slide(&h, &q)?;
        let m = 2 * h.strands();
        // b_m = E F^{-1} t F with E_{j+1} = c_j^{-1} g^{-1} E_j g and F_{j+1} = F_j g
        let mut e: Option<CertifiedElement> = None;
        let mut f = BraidWord::identity(m);
        for step in &s.steps {
            let c = step.mover().inverse();
            e = Some(match e {
                None => c,
                Some(prev) => CertifiedElement::product(&[c, prev.conjugate(&s.conjugator)?], Series::Lcs)?,
            });
            f = f.compose(&s.conjugator)?;
        }
        let e = e.ok_or_else(|| Error::Inconsistent("empty slide".into()))?;
        h = e.conjugate(&f.invert())?;
    }
    let mut acc: Option<BraidWord> = None;
    for q in &factors {
        acc = Some(match acc {
            None => q.clone(),
            Some(a) => {
                let m = 2 * q.strands();
                connected_sum(&a.include(q.strands())?, q)?.compose(&twist(m).invert())?.free_reduce()
            }
        });
    }
    let acc = acc.unwrap_or_else(|| BraidWord::identity(k));
    let braid = acc.compose(&twist(acc.strands()))?;
    Ok(LcsInverse { factors, braid, sum: h })
}
