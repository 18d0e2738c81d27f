//! Expansion of `x - 1` into products of augmentation factors, following a
//! commutator certificate for `x`.

use super::RingElement;
use crate::braid::{conjugate, BraidWord};
use crate::error::Result;
use crate::series::{CertifiedElement, CommutatorExpr};

/// `sign · left · Π (g_j - 1) · right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub sign: i64,
    pub left: BraidWord,
    pub factors: Vec<BraidWord>,
    pub right: BraidWord,
}

impl Summand {
    pub fn value(&self) -> RingElement {
        let mut acc = RingElement::from_word(&self.left);
        for g in &self.factors {
            acc = &acc * &RingElement::augmentation_factor(g);
        }
        acc.mul_word(&self.right).expect("same strand count").scale(self.sign)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorExpansion {
    pub strands: usize,
    pub summands: Vec<Summand>,
}

impl CommutatorExpansion {
    pub fn value(&self) -> RingElement {
        let mut acc = RingElement::zero(self.strands);
        for s in &self.summands {
            acc = &acc + &s.value();
        }
        acc
    }

    /// Fewest augmentation factors in any summand.
    pub fn min_factors(&self) -> usize {
        self.summands.iter().map(|s| s.factors.len()).min().unwrap_or(usize::MAX)
    }
}

fn join(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.compose(b).expect("same strand count")
}

fn expand(e: &CommutatorExpr, k: usize) -> Result<Vec<Summand>> {
    let id = BraidWord::identity(k);
    Ok(match e {
        CommutatorExpr::Leaf(g) => vec![Summand {
            sign: 1,
            left: id.clone(),
            factors: vec![g.clone()],
            right: id,
        }],
        // x^{-1} - 1 = -x^{-1} (x - 1)
        CommutatorExpr::Inverse(x) => {
            let xi = x.evaluate().invert();
            expand(x, k)?
                .into_iter()
                .map(|s| Summand {
                    sign: -s.sign,
                    left: join(&xi, &s.left),
                    ..s
                })
                .collect()
        }
        // g^{-1} x g - 1 = g^{-1} (x - 1) g
        CommutatorExpr::Conjugate(x, g) => {
            let gi = g.invert();
            expand(x, k)?
                .into_iter()
                .map(|s| Summand {
                    left: join(&gi, &s.left),
                    right: join(&s.right, g),
                    ..s
                })
                .collect()
        }
        // x_1 ⋯ x_r - 1 = Σ_j x_1 ⋯ x_{j-1} (x_j - 1)
        CommutatorExpr::Product(xs) => {
            let mut out = Vec::new();
            let mut prefix = id;
            for x in xs {
                for s in expand(x, k)? {
                    out.push(Summand {
                        left: join(&prefix, &s.left),
                        ..s
                    });
                }
                prefix = join(&prefix, &x.evaluate());
            }
            out
        }
        // [x,y] - 1 = ((x-1)(y-1) - (y-1)(x-1)) x^{-1} y^{-1}
        CommutatorExpr::Commutator(x, y) => {
            let (xv, yv) = (x.evaluate(), y.evaluate());
            let tail = join(&xv.invert(), &yv.invert());
            let (ex, ey) = (expand(x, k)?, expand(y, k)?);
            let mut out = Vec::with_capacity(2 * ex.len() * ey.len());
            for (first, second, sign) in [(&ex, &ey, 1), (&ey, &ex, -1)] {
                for a in first.iter() {
                    for b in second.iter() {
                        out.push(multiply(a, b, sign, &tail)?);
                    }
                }
            }
            out
        }
    })
}

/// `a · b · tail`, with the unit between the two factor blocks pushed left:
/// `Π (g - 1) m = m Π (m^{-1} g m - 1)`.
fn multiply(a: &Summand, b: &Summand, sign: i64, tail: &BraidWord) -> Result<Summand> {
    let m = join(&a.right, &b.left);
    let mut factors = Vec::with_capacity(a.factors.len() + b.factors.len());
    for g in &a.factors {
        factors.push(conjugate(g, &m)?);
    }
    factors.extend(b.factors.iter().cloned());
    Ok(Summand {
        sign: sign * a.sign * b.sign,
        left: join(&a.left, &m),
        factors,
        right: join(&b.right, tail),
    })
}

/// `x - 1` as a sum of products of at least `level(x)` augmentation factors.
pub fn expand_commutator(x: &CertifiedElement) -> Result<CommutatorExpansion> {
    let k = x.strands();
    Ok(CommutatorExpansion {
        strands: k,
        summands: expand(x.certificate(), k)?,
    })
}
