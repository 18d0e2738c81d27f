use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;
use super::temperley_lieb::Scalar;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Constants for the reduced Burau image, in some coefficient ring.
pub(crate) struct BurauEntries<S> {
    pub t: S,
    pub minus_t: S,
    pub t_inv: S,
    pub minus_t_inv: S,
    pub one: S,
}

/// Reduced Burau matrix, built by column updates.
///
/// `σ_i` changes only row `r = i - 1` of the identity, to `t` at column
/// `r - 1`, `-t` at `r`, and `1` at `r + 1`; `σ_i^{-1}` uses `1`, `-t^{-1}`
/// and `t^{-1}` in the same places.
pub(crate) fn reduced_burau<S: Scalar>(b: &BraidWord, c: &BurauEntries<S>) -> Vec<Vec<S>> {
    let n = b.strands().saturating_sub(1);
    let zero = c.one.zero_like();
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { c.one.clone() } else { zero.clone() }).collect())
        .collect();
    for &l in b.letters() {
        let r = l.unsigned_abs() as usize - 1;
        let (left, mid, right) = if l > 0 {
            (&c.t, &c.minus_t, &c.one)
        } else {
            (&c.one, &c.minus_t_inv, &c.t_inv)
        };
        for row in m.iter_mut() {
            let pivot = row[r].clone();
            if pivot.is_zero() {
                continue;
            }
            if r > 0 {
                row[r - 1].add_assign(&pivot.mul(left));
            }
            if r + 1 < n {
                row[r + 1].add_assign(&pivot.mul(right));
            }
            row[r] = pivot.mul(mid);
        }
    }
    m
}

/// Fraction-free determinant over `Z[t, t^{-1}]`.
fn bareiss(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign = BigInt::one();
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return LaurentPoly::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(&sign)
}

pub(crate) fn knot_check(b: &BraidWord) -> Result<()> {
    let components = b.permutation().cycles().len();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    Ok(())
}

/// Alexander polynomial of a knot closure, symmetric with value 1 at `t = 1`.
pub fn alexander(b: &BraidWord) -> Result<LaurentPoly> {
    knot_check(b)?;
    let k = b.strands();
    let entries = BurauEntries {
        t: LaurentPoly::monomial(1, 1),
        minus_t: LaurentPoly::monomial(-1, 1),
        t_inv: LaurentPoly::monomial(1, -1),
        minus_t_inv: LaurentPoly::monomial(-1, -1),
        one: LaurentPoly::one(),
    };
    let m = reduced_burau(b, &entries);
    let shifted: Vec<Vec<LaurentPoly>> = m
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| if i == j { &LaurentPoly::one() - &x } else { -&x })
                .collect()
        })
        .collect();
    let det = bareiss(shifted);
    let cyclotomic = LaurentPoly::from_terms((0..k as i64).map(|e| (e, BigInt::one())));
    let quotient = det
        .div_exact(&cyclotomic)
        .ok_or_else(|| Error::Inconsistent("Burau determinant not divisible".into()))?;
    let delta = quotient
        .symmetrize()
        .ok_or_else(|| Error::Inconsistent("Alexander polynomial is not symmetric".into()))?;
    if !delta.at_one().is_one() {
        return Err(Error::Inconsistent(format!("Alexander polynomial {} has Δ(1) != 1", delta)));
    }
    Ok(delta)
}

/// Coefficients of `z^0..z^{2d}` in the Conway polynomial of a symmetric
/// Alexander polynomial, using `t^j + t^{-j} = Σ_m (2j/(j+m)) C(j+m, 2m) z^{2m}`.
pub fn conway_from_alexander(delta: &LaurentPoly) -> Vec<BigInt> {
    let d = delta.max_exp().unwrap_or(0).max(0) as usize;
    let mut out = vec![BigInt::zero(); 2 * d + 1];
    out[0] += delta.coeff(0);
    for j in 1..=d {
        let c = delta.coeff(j as i64);
        if c.is_zero() {
            continue;
        }
        for m in 0..=j {
            let weight = BigInt::from(2 * j) * binomial(j + m, 2 * m) / BigInt::from(j + m);
            out[2 * m] += &c * weight;
        }
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn binomial(n: usize, r: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Alexander polynomial with Conway coefficients `a_0..a_4`.
pub fn alexander_conway(b: &BraidWord) -> Result<(LaurentPoly, [BigInt; 5])> {
    let delta = alexander(b)?;
    let full = conway_from_alexander(&delta);
    let conway = std::array::from_fn(|i| full.get(i).cloned().unwrap_or_default());
    Ok((delta, conway))
}
