//! Reducing formal sums over an abelian group to a single element plus
//! composite relators `R(a, b) = ab - a - b`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::braid::{twist, BraidWord};
use crate::closure::connected_sum;
use crate::error::{Error, Result};
use crate::invariants::probe;

/// An abelian group with effective multiplication and equality.
pub trait AbelianGroup {
    type Elem: Clone;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    /// Equal keys exactly when the elements are equal.
    fn key(&self, a: &Self::Elem) -> String;
}

/// `Z^dim` under addition.
#[derive(Debug, Clone, Copy)]
pub struct IntVectors {
    pub dim: usize,
}

impl AbelianGroup for IntVectors {
    type Elem = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }

    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inverse(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn key(&self, a: &Vec<i64>) -> String {
        format!("{:?}", a)
    }
}

/// `coeff · (a1 a2 - a1 - a2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeTerm<E> {
    pub coeff: i64,
    pub a1: E,
    pub a2: E,
}

#[derive(Debug, Clone)]
pub struct BetaReduction<E> {
    /// `Π a_i^{z_i}`.
    pub product: E,
    /// The input equals `product + Σ coeff · R(a1, a2)`.
    pub decomposition: Vec<CompositeTerm<E>>,
}

impl<E: Clone> BetaReduction<E> {
    /// Re-sums `product + Σ coeff · R(a1, a2)` and compares with `input`.
    pub fn replay<G: AbelianGroup<Elem = E>>(&self, group: &G, input: &[(i64, E)]) -> bool {
        let mut want: BTreeMap<String, i64> = BTreeMap::new();
        for (z, a) in input {
            *want.entry(group.key(a)).or_default() += z;
        }
        let mut got: BTreeMap<String, i64> = BTreeMap::new();
        *got.entry(group.key(&self.product)).or_default() += 1;
        for t in &self.decomposition {
            *got.entry(group.key(&group.mul(&t.a1, &t.a2))).or_default() += t.coeff;
            *got.entry(group.key(&t.a1)).or_default() -= t.coeff;
            *got.entry(group.key(&t.a2)).or_default() -= t.coeff;
        }
        want.retain(|_, v| *v != 0);
        got.retain(|_, v| *v != 0);
        want == got
    }
}

/// Collapses `Σ z_i a_i` pairwise with
/// `a + b = ab - R(a,b)`, `a - b = ab^{-1} + R(ab^{-1}, b)`,
/// `-a - b = -ab + R(a,b)`, and finishes a lone `-g` with
/// `-g = g^{-1} + R(g, g^{-1}) + R(1, 1)`.
pub fn beta_reduce<G: AbelianGroup>(group: &G, input: &[(i64, G::Elem)]) -> BetaReduction<G::Elem> {
    let mut signed: Vec<(bool, G::Elem)> = Vec::new();
    for (z, a) in input {
        for _ in 0..z.unsigned_abs() {
            signed.push((*z > 0, a.clone()));
        }
    }
    let mut decomposition = Vec::new();
    let mut push = |coeff: i64, a1: G::Elem, a2: G::Elem| decomposition.push(CompositeTerm { coeff, a1, a2 });

    while signed.len() > 1 {
        let (p2, b) = signed.pop().expect("two entries");
        let (p1, a) = signed.pop().expect("two entries");
        let merged = match (p1, p2) {
            (true, true) => {
                push(-1, a.clone(), b.clone());
                (true, group.mul(&a, &b))
            }
            (false, false) => {
                push(1, a.clone(), b.clone());
                (false, group.mul(&a, &b))
            }
            (true, false) => {
                let q = group.mul(&a, &group.inverse(&b));
                push(1, q.clone(), b);
                (true, q)
            }
            (false, true) => {
                let q = group.mul(&b, &group.inverse(&a));
                push(1, q.clone(), a);
                (true, q)
            }
        };
        signed.push(merged);
    }

    let product = match signed.pop() {
        None => {
            push(1, group.identity(), group.identity());
            group.identity()
        }
        Some((true, g)) => g,
        Some((false, g)) => {
            let gi = group.inverse(&g);
            push(1, g, gi.clone());
            push(1, group.identity(), group.identity());
            gi
        }
    };
    BetaReduction { product, decomposition }
}

/// A knot given as the closure of `p t_k` for a pure braid `p`, with its
/// additive finite-type fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotHandle {
    pub braid: BraidWord,
    pub fingerprint: Vec<BigRational>,
}

/// Orders of the additive invariants kept in a fingerprint.
const FINGERPRINT_ORDER: usize = 4;

impl KnotHandle {
    pub fn new(p: BraidWord) -> Result<Self> {
        if !p.is_pure() {
            return Err(Error::NotPure);
        }
        let k = p.strands();
        let closure = p.compose(&twist(k))?;
        let fingerprint = probe(&closure, FINGERPRINT_ORDER)?.w;
        Ok(Self { braid: p, fingerprint })
    }

    /// `K1 # K2`, presented as `x t^{-k} y t^k` in `P_{2k}`.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        let k = self.braid.strands().max(other.braid.strands());
        let x = self.braid.include(k)?;
        let y = other.braid.include(k)?;
        let b = connected_sum(&x, &y)?;
        let p = b.compose(&twist(2 * k).invert())?;
        Self::new(p)
    }
}

/// A finite integer combination of knots.
#[derive(Debug, Clone, Default)]
pub struct FormalKnotSum {
    pub terms: Vec<(i64, KnotHandle)>,
}

impl FormalKnotSum {
    /// `K1 # K2 - K1 - K2`.
    pub fn composite_relator(k1: &KnotHandle, k2: &KnotHandle) -> Result<Self> {
        Ok(Self {
            terms: vec![(1, k1.connected_sum(k2)?), (-1, k1.clone()), (-1, k2.clone())],
        })
    }

    /// `Σ z_i · fingerprint(K_i)`; zero on composite relators since the
    /// fingerprint is additive under connected sum.
    pub fn additive_total(&self) -> Vec<BigRational> {
        let mut total = vec![BigRational::zero(); FINGERPRINT_ORDER + 1];
        for (z, h) in &self.terms {
            for (t, w) in total.iter_mut().zip(&h.fingerprint) {
                *t += w * BigRational::from_integer((*z).into());
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_relator_collapses_to_identity() {
        let g = IntVectors { dim: 2 };
        let (a1, a2) = (vec![1, 2], vec![-3, 5]);
        let input = vec![(1, g.mul(&a1, &a2)), (-1, a1), (-1, a2)];
        let r = beta_reduce(&g, &input);
        assert_eq!(r.product, g.identity());
        assert!(r.replay(&g, &input));
    }

    #[test]
    fn single_element_passes_through() {
        let g = IntVectors { dim: 1 };
        let r = beta_reduce(&g, &[(1, vec![7])]);
        assert_eq!(r.product, vec![7]);
        assert!(r.decomposition.is_empty());
    }

    #[test]
    fn negative_and_empty_sums() {
        let g = IntVectors { dim: 1 };
        let input = vec![(-1, vec![4])];
        let r = beta_reduce(&g, &input);
        assert_eq!(r.product, vec![-4]);
        assert!(r.replay(&g, &input));
        let r = beta_reduce(&g, &[]);
        assert_eq!(r.product, vec![0]);
        assert!(r.replay(&g, &[]));
    }

    #[test]
    fn mixed_sums_replay() {
        let g = IntVectors { dim: 3 };
        let input = vec![(3, vec![1, 0, -1]), (-2, vec![0, 2, 2]), (1, vec![5, 5, 5]), (-4, vec![1, 1, 1])];
        let r = beta_reduce(&g, &input);
        assert_eq!(r.product, vec![3 - 4 + 5, -4 + 5 - 4, -3 - 4 + 5 - 4]);
        assert!(r.replay(&g, &input));
    }

    #[test]
    fn knot_composite_relator_has_zero_fingerprint() {
        let trefoil = KnotHandle::new("B2: 1 1 1 1".parse().unwrap()).unwrap();
        let other = KnotHandle::new("B3: 1 1 -2 -2".parse().unwrap()).unwrap();
        let rel = FormalKnotSum::composite_relator(&trefoil, &other).unwrap();
        assert!(rel.additive_total().iter().all(|x| x.is_zero()));
        assert!(trefoil.fingerprint.iter().any(|x| !x.is_zero()));
    }
}
