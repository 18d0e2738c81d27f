//! Relators `cl((x_1 - 1) ⋯ (x_m - 1) y t_k)` and their reduction to
//! length-one relators plus connected-sum terms.
//!
//! The reduction runs in `B_{2k}`. The first factor is carried to the back
//! by swaps, moved past `y`, and rotated to the front by conjugation with
//! `t_{2k}`; after `k` rounds it sits on strands `k+1..2k` and the closure
//! splits as a connected sum. Every swap and every move past `y` emits side
//! relators that are either shorter or of higher order, and those are
//! reduced in turn.

use std::fmt;

use super::RingElement;
use crate::braid::{self, twist, BraidWord};
use crate::closure::connected_sum;
use crate::error::{Error, Result};
use crate::series::{level_of_commutator, CertifiedElement, CommutatorExpr, Series};
use crate::word_problem::{equal, is_trivial};

/// Upper bound on recorded steps for one reduction.
pub const STEP_LIMIT: usize = 10_000;

/// Largest braid group the reduction will move into.
const MAX_STRANDS: usize = 96;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    strands: usize,
    xs: Vec<CertifiedElement>,
    y: BraidWord,
}

impl Relator {
    pub fn new(xs: Vec<CertifiedElement>, y: BraidWord) -> Result<Self> {
        let k = y.strands();
        for x in &xs {
            if x.strands() != k {
                return Err(Error::StrandMismatch {
                    left: k,
                    right: x.strands(),
                });
            }
            if !x.word().is_pure() {
                return Err(Error::NotPure);
            }
        }
        if !y.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(Self { strands: k, xs, y })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn xs(&self) -> &[CertifiedElement] {
        &self.xs
    }

    pub fn y(&self) -> &BraidWord {
        &self.y
    }

    pub fn length(&self) -> usize {
        self.xs.len()
    }

    /// Sum of the certified lower-central levels.
    pub fn order(&self) -> u32 {
        self.xs.iter().map(|x| x.lcs_level()).sum()
    }

    /// `Π (x_i - 1) · y` in the group ring.
    pub fn value(&self) -> RingElement {
        let words: Vec<&BraidWord> = self.xs.iter().map(|x| x.word()).collect();
        product_value(self.strands, &words, &self.y, None)
    }

    pub fn include(&self, m: usize) -> Result<Self> {
        Ok(Self {
            strands: m,
            xs: self.xs.iter().map(|x| x.include(m)).collect::<Result<_>>()?,
            y: self.y.include(m)?,
        })
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cl(")?;
        for x in &self.xs {
            write!(f, "([{}] - 1)", x.word())?;
        }
        write!(f, " [{}] t_{})", self.y, self.strands)
    }
}

fn product_value(k: usize, front: &[&BraidWord], y: &BraidWord, back: Option<&BraidWord>) -> RingElement {
    let mut acc = RingElement::one(k);
    for x in front {
        acc = &acc * &RingElement::augmentation_factor(x);
    }
    acc = acc.mul_word(y).expect("same strand count");
    if let Some(x) = back {
        acc = &acc * &RingElement::augmentation_factor(x);
    }
    acc
}

/// Rewrites a relator with some factor of level at least `n` as a signed
/// sum of length-one relators `cl((w x_i w^{-1} - 1) w y' t_k)`.
pub fn split_relator(r: &Relator, n: u32) -> Result<Vec<(i64, Relator)>> {
    let m = r.length();
    let i = r
        .xs
        .iter()
        .position(|x| x.lcs_level() >= n)
        .ok_or_else(|| Error::Precondition(format!("no factor of level >= {}", n)))?;
    if m == 1 {
        return Ok(vec![(1, r.clone())]);
    }
    let k = r.strands;
    let subset_product = |indices: &[usize], mask: usize| -> BraidWord {
        let mut letters = Vec::new();
        for (bit, &j) in indices.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                letters.extend_from_slice(r.xs[j].word().letters());
            }
        }
        BraidWord::from_raw(k, letters)
    };
    let before: Vec<usize> = (0..i).collect();
    let after: Vec<usize> = (i + 1..m).collect();
    let mut out = Vec::new();
    for s in 0..1usize << before.len() {
        let w = subset_product(&before, s);
        let x = r.xs[i].conjugate(&w.invert())?;
        for t in 0..1usize << after.len() {
            let tail = subset_product(&after, t);
            let missing = (before.len() - s.count_ones() as usize) + (after.len() - t.count_ones() as usize);
            let sign = if missing % 2 == 0 { 1 } else { -1 };
            let y = BraidWord::concat_all(k, [&w, &tail, &r.y])?.free_reduce();
            out.push((sign, Relator::new(vec![x.clone()], y)?));
        }
    }
    Ok(out)
}

/// Which move a trace step records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `(x_i - 1)(x_{i+1} - 1) = (x_{i+1} - 1)(x_i - 1) + ([x_i,x_{i+1}] - 1) + ([x_i,x_{i+1}] - 1)(x_{i+1} x_i - 1)`
    Swap,
    /// `(x - 1) y = y (x - 1) + ([x, y] - 1) y x`
    MovePastY,
    /// `cl(U (x - 1) t) = cl((t^{-1} x t - 1) U t)`
    Rotate,
    /// The first factor has been rotated `k` times.
    Accumulate,
    /// The closure splits as a connected sum.
    TerminalSplit,
    /// A relator with a factor of high enough level becomes length-one relators.
    Split,
    /// Already a length-one relator.
    LengthOne,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::Swap => "swap",
            StepKind::MovePastY => "move-past-y",
            StepKind::Rotate => "rotate",
            StepKind::Accumulate => "accumulate",
            StepKind::TerminalSplit => "terminal-split",
            StepKind::Split => "split",
            StepKind::LengthOne => "length-one",
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Π (front - 1) · y · (back - 1)` inside `B_strands`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub strands: usize,
    pub front: Vec<BraidWord>,
    pub y: BraidWord,
    pub back: Option<BraidWord>,
}

impl Snapshot {
    pub fn value(&self) -> RingElement {
        let front: Vec<&BraidWord> = self.front.iter().collect();
        product_value(self.strands, &front, &self.y, self.back.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepDetail {
    /// `before = after + Σ sign · side`, exactly in the group ring.
    Ring {
        before: Snapshot,
        after: Snapshot,
        sides: Vec<(i64, Relator)>,
    },
    /// `after = t^{-1} (x - 1) t U` where `before = U (x - 1)`.
    Conjugation {
        before: Snapshot,
        after: Snapshot,
        conjugator: BraidWord,
    },
    /// The first factor of `after` is `t^{-turns} x t^{turns}` for the first
    /// factor `x` of `before`; the others are unchanged.
    Accumulated {
        before: Snapshot,
        after: Snapshot,
        turns: usize,
    },
    /// `cl(state) = cl(rest) # cl((piece - 1) t_k)`, checked term by term
    /// against the connected-sum braid.
    Terminal {
        state: Snapshot,
        piece: BraidWord,
        rest: Relator,
    },
    Split {
        input: Relator,
        outputs: Vec<(i64, Relator)>,
    },
    LengthOne {
        relator: Relator,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub depth: usize,
    /// Multiplicity of the relator being reduced in the original input.
    pub coefficient: i64,
    pub detail: StepDetail,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub input: Relator,
    pub n: u32,
    pub steps: Vec<TraceStep>,
    /// Length-one relators of order at least `n`, with multiplicities.
    pub length_one: Vec<(i64, Relator)>,
    /// `(multiplicity, rest, piece)` standing for `cl(rest) # cl((piece - 1) t_k)`.
    pub composites: Vec<(i64, Relator, BraidWord)>,
}

impl ReductionTrace {
    /// Re-checks every step from its recorded data.
    pub fn replay(&self) -> Result<bool> {
        for step in &self.steps {
            if !check_step(step)? {
                return Ok(false);
            }
        }
        let n = self.n;
        Ok(self
            .length_one
            .iter()
            .all(|(_, r)| r.length() == 1 && r.order() >= n))
    }

    pub fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|s| s.kind == kind).count()
    }

    pub fn max_depth(&self) -> usize {
        self.steps.iter().map(|s| s.depth).max().unwrap_or(0)
    }

    /// One line per step: `<kind> depth=<d> coeff=<c>`.
    pub fn to_record(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!("{} depth={} coeff={}\n", s.kind, s.depth, s.coefficient));
        }
        out
    }
}

fn check_step(step: &TraceStep) -> Result<bool> {
    Ok(match &step.detail {
        StepDetail::Ring { before, after, sides } => {
            let mut rhs = after.value();
            for (s, r) in sides {
                rhs = &rhs + &r.value().scale(*s);
            }
            before.value() == rhs
        }
        StepDetail::Conjugation {
            before,
            after,
            conjugator,
        } => {
            let Some(x) = &before.back else { return Ok(false) };
            let u = Snapshot {
                back: None,
                ..before.clone()
            };
            let t = conjugator;
            let lhs = after.value();
            let rhs = RingElement::augmentation_factor(x)
                .word_mul(&t.invert())?
                .mul_word(t)?
                .try_mul(&u.value())?;
            lhs == rhs
        }
        StepDetail::Accumulated { before, after, turns } => {
            let t = twist(before.strands);
            let g = t.pow(*turns as i64);
            before.front.len() == after.front.len()
                && before.y == after.y
                && equal(&after.front[0], &braid::conjugate(&before.front[0], &g)?)?
                && before.front[1..] == after.front[1..]
        }
        StepDetail::Terminal { state, piece, rest } => terminal_holds(state, piece, rest)?,
        StepDetail::Split { input, outputs } => {
            let mut rhs = RingElement::zero(input.strands);
            for (s, r) in outputs {
                rhs = &rhs + &r.value().scale(*s);
            }
            outputs.iter().all(|(_, r)| r.length() == 1) && input.value() == rhs
        }
        StepDetail::LengthOne { relator } => relator.length() == 1,
    })
}

/// Each term `q` of `Π (rest - 1) y` satisfies
/// `piece' · q · t_{2k} = connected_sum(q, piece)` where `piece'` is the
/// rotated first factor.
fn terminal_holds(state: &Snapshot, piece: &BraidWord, rest: &Relator) -> Result<bool> {
    let k = rest.strands;
    let m2 = state.strands;
    let t = twist(m2);
    let shifted = &state.front[0];
    let others = &rest.xs;
    for mask in 0..1usize << others.len() {
        let mut letters = Vec::new();
        for (bit, x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                letters.extend_from_slice(x.word().letters());
            }
        }
        letters.extend_from_slice(rest.y.letters());
        let q = BraidWord::from_raw(k, letters);
        let lhs = BraidWord::concat_all(m2, [shifted, &q.include(m2)?, &t])?;
        if !equal(&lhs, &connected_sum(&q, piece)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Reducer {
    n: u32,
    steps: Vec<TraceStep>,
    length_one: Vec<(i64, Relator)>,
    composites: Vec<(i64, Relator, BraidWord)>,
    pending: Vec<(Relator, i64, usize)>,
}

impl Reducer {
    fn record(&mut self, kind: StepKind, depth: usize, coefficient: i64, detail: StepDetail) -> Result<()> {
        let step = TraceStep {
            kind,
            depth,
            coefficient,
            detail,
        };
        if !check_step(&step)? {
            return Err(Error::Inconsistent(format!("{} step does not hold", kind)));
        }
        self.steps.push(step);
        if self.steps.len() > STEP_LIMIT {
            return Err(Error::SearchExhausted(format!("more than {} reduction steps", STEP_LIMIT)));
        }
        Ok(())
    }

    fn reduce(&mut self, r: Relator, coeff: i64, depth: usize) -> Result<()> {
        if r.length() == 1 {
            self.record(StepKind::LengthOne, depth, coeff, StepDetail::LengthOne { relator: r.clone() })?;
            self.length_one.push((coeff, r));
            return Ok(());
        }
        if r.xs.iter().any(|x| x.lcs_level() >= self.n) {
            let outputs = split_relator(&r, self.n)?;
            self.record(
                StepKind::Split,
                depth,
                coeff,
                StepDetail::Split {
                    input: r,
                    outputs: outputs.clone(),
                },
            )?;
            for (s, o) in outputs {
                self.length_one.push((coeff * s, o));
            }
            return Ok(());
        }
        self.cycle(r, coeff, depth)
    }

    fn snapshot(k2: usize, front: &[CertifiedElement], y: &BraidWord, back: Option<&CertifiedElement>) -> Snapshot {
        Snapshot {
            strands: k2,
            front: front.iter().map(|x| x.word().clone()).collect(),
            y: y.clone(),
            back: back.map(|x| x.word().clone()),
        }
    }

    fn cycle(&mut self, r: Relator, coeff: i64, depth: usize) -> Result<()> {
        let k = r.strands;
        let k2 = 2 * k;
        if k2 > MAX_STRANDS {
            return Err(Error::SearchExhausted(format!("reduction needs more than {} strands", MAX_STRANDS)));
        }
        let wide = r.include(k2)?;
        let m = wide.length();
        let mut front = wide.xs.clone();
        let y = wide.y.clone();
        let t = twist(k2);
        let initial = Self::snapshot(k2, &front, &y, None);

        for _ in 0..k {
            for i in 0..m - 1 {
                let before = Self::snapshot(k2, &front, &y, None);
                let (a, b) = (front[i].clone(), front[i + 1].clone());
                let c = level_of_commutator(&a, &b)?;
                let ba = CertifiedElement::product(&[b.clone(), a.clone()], Series::Lcs)?;
                let mut short = front[..i].to_vec();
                short.push(c.clone());
                short.extend_from_slice(&front[i + 2..]);
                let mut long = front[..i].to_vec();
                long.push(c);
                long.push(ba);
                long.extend_from_slice(&front[i + 2..]);
                // a trivial commutator makes both side relators zero
                let sides = if is_trivial(long[i].word()) {
                    Vec::new()
                } else {
                    vec![(1, Relator::new(short, y.clone())?), (1, Relator::new(long, y.clone())?)]
                };
                front.swap(i, i + 1);
                let after = Self::snapshot(k2, &front, &y, None);
                self.record(
                    StepKind::Swap,
                    depth,
                    coeff,
                    StepDetail::Ring {
                        before,
                        after,
                        sides: sides.clone(),
                    },
                )?;
                for (s, side) in sides {
                    self.pending.push((side, coeff * s, depth + 1));
                }
            }

            let before = Self::snapshot(k2, &front, &y, None);
            let x = front.pop().expect("length at least two");
            let yc = CertifiedElement::leaf(y.clone())?;
            let c = level_of_commutator(&x, &yc)?;
            let mut side_xs = front.clone();
            side_xs.push(c);
            let sides = if is_trivial(side_xs.last().expect("nonempty").word()) {
                Vec::new()
            } else {
                vec![(1, Relator::new(side_xs, y.compose(x.word())?)?)]
            };
            let after = Self::snapshot(k2, &front, &y, Some(&x));
            self.record(
                StepKind::MovePastY,
                depth,
                coeff,
                StepDetail::Ring {
                    before,
                    after: after.clone(),
                    sides: sides.clone(),
                },
            )?;
            for (s, side) in sides {
                self.pending.push((side, coeff * s, depth + 1));
            }

            let rotated = rotate(&x, &t)?;
            front.insert(0, rotated);
            let rotated_state = Self::snapshot(k2, &front, &y, None);
            self.record(
                StepKind::Rotate,
                depth,
                coeff,
                StepDetail::Conjugation {
                    before: after,
                    after: rotated_state,
                    conjugator: t.clone(),
                },
            )?;
        }

        let state = Self::snapshot(k2, &front, &y, None);
        self.record(
            StepKind::Accumulate,
            depth,
            coeff,
            StepDetail::Accumulated {
                before: initial,
                after: state.clone(),
                turns: k,
            },
        )?;
        let rest = Relator::new(r.xs[1..].to_vec(), r.y.clone())?;
        let piece = r.xs[0].word().clone();
        self.record(
            StepKind::TerminalSplit,
            depth,
            coeff,
            StepDetail::Terminal {
                state,
                piece: piece.clone(),
                rest: rest.clone(),
            },
        )?;
        self.composites.push((coeff, rest, piece));
        Ok(())
    }
}

/// `t^{-1} x t`, spelled as the shift `σ_i -> σ_{i+1}` when `x` avoids the
/// last strand.
fn rotate(x: &CertifiedElement, t: &BraidWord) -> Result<CertifiedElement> {
    let m = t.strands();
    let certificate = CommutatorExpr::conjugate(x.certificate().clone(), t.clone());
    let word = if x.word().max_generator() + 1 < m {
        let letters = x.word().letters().iter().map(|&l| l + l.signum()).collect();
        BraidWord::from_raw(m, letters)
    } else {
        braid::conjugate(x.word(), t)?
    };
    CertifiedElement::new(word, Series::Lcs, x.lcs_level(), certificate)
}

/// Reduces a relator of order at least `n` to length-one relators of order
/// at least `n` and connected-sum terms.
pub fn reduce_relator(r: &Relator, n: u32) -> Result<ReductionTrace> {
    if r.order() < n {
        return Err(Error::Precondition(format!("relator order {} is below {}", r.order(), n)));
    }
    if r.length() == 0 {
        return Err(Error::Precondition("relator of length zero".into()));
    }
    let mut red = Reducer {
        n,
        steps: Vec::new(),
        length_one: Vec::new(),
        composites: Vec::new(),
        pending: vec![(r.clone(), 1, 0)],
    };
    while let Some((rel, coeff, depth)) = red.pending.pop() {
        red.reduce(rel, coeff, depth)?;
    }
    Ok(ReductionTrace {
        input: r.clone(),
        n,
        steps: red.steps,
        length_one: red.length_one,
        composites: red.composites,
    })
}
