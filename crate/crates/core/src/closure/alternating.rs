use super::{close, Diagram, EquivalenceWitness};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::series::{ds3_words, rewrite_mod_ds, strand_shift, CertifiedElement, CommutatorExpr, Ds3Form, Series, DEFAULT_BASE_BOUND};

const MAX_ROUNDS: usize = 32;

/// Whether every `σ_i` occurs only with sign `(-1)^{i+1}`.
pub fn is_alternating_word(b: &BraidWord) -> bool {
    b.letters().iter().all(|&l| wanted_sign(l.unsigned_abs() as usize) == l.signum())
}

fn wanted_sign(i: usize) -> i32 {
    if i % 2 == 1 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone)]
pub struct AlternatingMember {
    pub braid: BraidWord,
    pub diagram: Diagram,
    /// Base is the input, stabilized to at least three strands; the mover
    /// carries it to `braid`.
    pub witness: EquivalenceWitness,
}

/// Accumulates `W_t = m_t W_{t-1}` as the product `m_t .. m_1`.
struct Tracker {
    word: BraidWord,
    factors: Vec<CertifiedElement>,
}

impl Tracker {
    /// Replaces the letter at `pos` of `word`, given `q = x' x^{-1}` for the
    /// letter `x` and its replacement `x'`.
    fn splice(&mut self, pos: usize, replacement: &BraidWord, q: &CertifiedElement) -> Result<()> {
        let k = self.word.strands();
        let l = self.word.letters();
        let prefix = BraidWord::from_raw(k, l[..pos].to_vec());
        let mut letters = l[..pos].to_vec();
        letters.extend_from_slice(replacement.letters());
        letters.extend_from_slice(&l[pos + 1..]);
        self.factors.push(q.conjugate(&prefix.invert())?);
        self.word = BraidWord::from_raw(k, letters);
        Ok(())
    }

    /// `W e = (W e W^{-1}) W`.
    fn append(&mut self, e: &CertifiedElement) -> Result<()> {
        self.factors.push(e.conjugate(&self.word.invert())?);
        self.word = self.word.compose(e.word())?;
        Ok(())
    }

    fn witness(&self, base: &BraidWord, n: u32) -> Result<EquivalenceWitness> {
        let k = base.strands();
        // each factor was checked locally, so the product equals W base^{-1}
        let word = self.word.compose(&base.invert())?.free_reduce();
        let certificate = CommutatorExpr::Product(self.factors.iter().rev().map(|f| f.certificate().clone()).collect());
        let level = if self.factors.is_empty() { n } else { certificate.ds_level() };
        if level < n {
            return Err(Error::Inconsistent(format!("mover reaches derived level {} < {}", level, n)));
        }
        debug_assert_eq!(word.strands(), k);
        EquivalenceWitness::new(base.clone(), CertifiedElement::trusted(word, Series::Ds, n, certificate))
    }
}

/// Prime alternating reduced diagrams `DS_n`-equivalent to `cl(b)`, with
/// strictly increasing crossing counts.
pub fn alternating_family(b: &BraidWord, n: u32, count: usize) -> Result<Vec<AlternatingMember>> {
    let cycles = b.permutation().cycles().len();
    if cycles != 1 {
        return Err(Error::NotAKnot { components: cycles });
    }
    if n < 2 || count < 1 {
        return Err(Error::Precondition(format!("need n >= 2 and count >= 1, got n={} count={}", n, count)));
    }
    let mut base = b.clone();
    while base.strands() < 3 {
        let k = base.strands();
        base = base.include(k + 1)?.compose(&BraidWord::generator(k, wanted_sign(k), k + 1)?)?;
    }
    let k = base.strands();
    let words = ds3_words(n, DEFAULT_BASE_BOUND)?;
    let mut t = Tracker {
        word: base.clone(),
        factors: Vec::new(),
    };

    let mut pos = 0;
    while pos < t.word.len() {
        let l = t.word.letters()[pos];
        let i = l.unsigned_abs() as usize;
        if wanted_sign(i) == l.signum() {
            pos += 1;
            continue;
        }
        let o = if i + 2 <= k { i - 1 } else { i - 2 };
        let local = BraidWord::new(3, vec![l.signum() * (i - o) as i32])?;
        let mirrored = o % 2 == 1;
        let rw = rewrite_mod_ds(&if mirrored { local.mirror() } else { local }, n)?;
        let (out, q) = if mirrored {
            (rw.output.mirror(), rw.quotient.mirror()?)
        } else {
            (rw.output, rw.quotient)
        };
        let replacement = out.shift(o, k)?;
        t.splice(pos, &replacement, &strand_shift(&q, o, k)?)?;
        pos += replacement.len();
    }

    let awa = words.get(Ds3Form::awa);
    let round: Vec<CertifiedElement> = (0..=k - 3)
        .map(|o| {
            let e = if o % 2 == 1 { awa.mirror()? } else { awa.clone() };
            strand_shift(&e, o, k)
        })
        .collect::<Result<_>>()?;
    let grow = |t: &mut Tracker| -> Result<()> {
        for e in &round {
            t.append(e)?;
        }
        Ok(())
    };

    let mut rounds = 0;
    loop {
        let d = close(&t.word);
        if d.is_reduced() && d.is_prime() {
            break;
        }
        if rounds == MAX_ROUNDS {
            return Err(Error::SearchExhausted("no prime reduced alternating diagram found".into()));
        }
        grow(&mut t)?;
        rounds += 1;
    }

    let mut family = Vec::with_capacity(count);
    for idx in 0..count {
        if idx > 0 {
            grow(&mut t)?;
        }
        debug_assert!(is_alternating_word(&t.word));
        family.push(AlternatingMember {
            braid: t.word.clone(),
            diagram: close(&t.word),
            witness: t.witness(&base, n)?,
        });
    }
    Ok(family)
}
