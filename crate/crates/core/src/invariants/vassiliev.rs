//! Truncated power-series evaluation at `t = e^x`: the log-Jones
//! coefficients `w_m` and the low Conway coefficients, in time linear in the
//! word length.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::alexander::{knot_check, reduced_burau, BurauEntries};
use super::temperley_lieb::{bracket, Scalar};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// `Σ c_j y^j / j!` truncated after `y^{len-1}`. Integer coefficients stay
/// integral under products of exponentials.
#[derive(Debug, Clone, PartialEq)]
struct Egf(Vec<BigInt>);

impl Egf {
    /// `e^{rate · y}`.
    fn exp(rate: i64, len: usize) -> Self {
        let r = BigInt::from(rate);
        let mut c = Vec::with_capacity(len);
        let mut p = BigInt::one();
        for _ in 0..len {
            c.push(p.clone());
            p *= &r;
        }
        Egf(c)
    }

    fn neg(&self) -> Self {
        Egf(self.0.iter().map(|c| -c).collect())
    }

    /// Ordinary coefficients of the series in `x = scale · y`.
    fn ordinary(&self, scale: i64) -> Vec<BigRational> {
        let mut fact = BigInt::one();
        let mut pow = BigInt::one();
        let mut out = Vec::with_capacity(self.0.len());
        for (j, c) in self.0.iter().enumerate() {
            if j > 0 {
                fact *= BigInt::from(j);
                pow *= BigInt::from(scale);
            }
            out.push(BigRational::new(c.clone(), &fact * &pow));
        }
        out
    }
}

impl Scalar for Egf {
    fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let len = self.0.len();
        let mut out = vec![BigInt::zero(); len];
        for (n, slot) in out.iter_mut().enumerate() {
            let mut binom = BigInt::one();
            for j in 0..=n {
                if !self.0[j].is_zero() && !other.0[n - j].is_zero() {
                    *slot += &binom * &self.0[j] * &other.0[n - j];
                }
                binom = binom * BigInt::from(n - j) / BigInt::from(j + 1);
            }
        }
        Egf(out)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn zero_like(&self) -> Self {
        Egf(vec![BigInt::zero(); self.0.len()])
    }
}

/// Ordinary power series with rational coefficients, fixed length.
type Series = Vec<BigRational>;

fn series_mul(a: &Series, b: &Series) -> Series {
    let len = a.len();
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(len - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_sub(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn series_inverse(a: &Series) -> Option<Series> {
    if a[0].is_zero() {
        return None;
    }
    let mut out = vec![BigRational::zero(); a.len()];
    out[0] = a[0].recip();
    for n in 1..a.len() {
        let mut s = BigRational::zero();
        for j in 1..=n {
            s += &a[j] * &out[n - j];
        }
        out[n] = -s * &out[0];
    }
    Some(out)
}

fn series_log(a: &Series) -> Result<Series> {
    if !a[0].is_one() {
        return Err(Error::Inconsistent(format!("series constant term {} is not 1", a[0])));
    }
    let mut out = vec![BigRational::zero(); a.len()];
    for n in 1..a.len() {
        let mut s = BigRational::zero();
        for k in 1..n {
            s += BigRational::from_integer(k.into()) * &out[k] * &a[n - k];
        }
        out[n] = &a[n] - s / BigRational::from_integer(n.into());
    }
    Ok(out)
}

/// `e^{r x}` as an ordinary series.
fn series_exp(r: &BigRational, len: usize) -> Series {
    let mut out = Vec::with_capacity(len);
    let mut term = BigRational::one();
    for n in 0..len {
        out.push(term.clone());
        term = term * r / BigRational::from_integer((n + 1).into());
    }
    out
}

/// `J(e^x)` for a knot closure as an ordinary series of length `len`.
fn jones_series(b: &BraidWord, len: usize) -> Series {
    // A = t^{-1/4} = e^{-y} with y = x/4
    let a = Egf::exp(-1, len);
    let a_inv = Egf::exp(1, len);
    let mut delta = Egf::exp(2, len).neg();
    delta.add_assign(&Egf::exp(-2, len).neg());
    let br = bracket(b, &a, &a_inv, &delta, &Egf::exp(0, len));
    let w = b.exponent_sum();
    let mut f = br.mul(&Egf::exp(3 * w, len));
    if w % 2 != 0 {
        f = f.neg();
    }
    f.ordinary(4)
}

/// Coefficients `w_0..w_mmax` of `x^m` in `log J_K(e^x)`.
pub fn w_series(b: &BraidWord, mmax: usize) -> Result<Vec<BigRational>> {
    knot_check(b)?;
    series_log(&jones_series(b, mmax + 1))
}

/// `det(I - ρ(b))` at `t = e^x`, by elimination over the local ring of
/// power series. The matrix is invertible at `x = 0` for knot closures.
fn burau_determinant_series(b: &BraidWord, len: usize) -> Result<Series> {
    let entries = BurauEntries {
        t: Egf::exp(1, len),
        minus_t: Egf::exp(1, len).neg(),
        t_inv: Egf::exp(-1, len),
        minus_t_inv: Egf::exp(-1, len).neg(),
        one: Egf::exp(0, len),
    };
    let m = reduced_burau(b, &entries);
    let n = m.len();
    let one = series_exp(&BigRational::zero(), len);
    let zero = vec![BigRational::zero(); len];
    let mut a: Vec<Vec<Series>> = m
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| {
                    let x = x.ordinary(1);
                    series_sub(if i == j { &one } else { &zero }, &x)
                })
                .collect()
        })
        .collect();
    let mut det = one.clone();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k][0].is_zero())
            .ok_or_else(|| Error::Inconsistent("Burau matrix singular at t = 1".into()))?;
        if p != k {
            a.swap(p, k);
            det = det.iter().map(|c| -c).collect();
        }
        det = series_mul(&det, &a[k][k]);
        let inv = series_inverse(&a[k][k]).expect("pivot is a unit");
        for i in k + 1..n {
            let factor = series_mul(&a[i][k], &inv);
            for j in k..n {
                let delta = series_mul(&factor, &a[k][j]);
                a[i][j] = series_sub(&a[i][j], &delta);
            }
        }
    }
    Ok(det)
}

/// Conway coefficients `a_0..a_4` from the expansion of `Δ(e^x)`.
///
/// `Δ(e^x) = ∇(z)` with `z^2 = x^2 + x^4/12 + O(x^6)`.
pub fn conway_series(b: &BraidWord) -> Result<[BigInt; 5]> {
    knot_check(b)?;
    let len = 5;
    let det = burau_determinant_series(b, len)?;
    let k = b.strands() as i64;
    let mut cyclotomic = vec![BigRational::zero(); len];
    for e in 0..k {
        let s = series_exp(&BigRational::from_integer(e.into()), len);
        cyclotomic = cyclotomic.iter().zip(&s).map(|(x, y)| x + y).collect();
    }
    let d = series_mul(&det, &series_inverse(&cyclotomic).expect("constant term k"));
    // d = ±e^{s x} E(x) with E even and E(0) = 1
    let c0 = d[0].clone();
    if !c0.abs().is_one() {
        return Err(Error::Inconsistent(format!("Δ(1) = {}", c0)));
    }
    let s = &d[1] / &c0;
    let e = series_mul(&d, &series_exp(&-s, len));
    let e: Series = e.iter().map(|x| x / &c0).collect();
    if !e[1].is_zero() || !e[3].is_zero() {
        return Err(Error::Inconsistent("Alexander expansion is not even".into()));
    }
    let a2 = e[2].clone();
    let a4 = &e[4] - &a2 / BigRational::from_integer(12.into());
    let int = |r: &BigRational| -> Result<BigInt> {
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::Inconsistent(format!("non-integral Conway coefficient {}", r)))
        }
    };
    Ok([BigInt::one(), BigInt::zero(), int(&a2)?, BigInt::zero(), int(&a4)?])
}

/// Finite-type data cheap enough for words of thousands of letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    /// `w_0..w_mmax`.
    pub w: Vec<BigRational>,
    /// Conway `a_0..a_4`.
    pub conway: [BigInt; 5],
}

pub fn probe(b: &BraidWord, mmax: usize) -> Result<Probe> {
    Ok(Probe {
        w: w_series(b, mmax)?,
        conway: conway_series(b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::alexander::alexander_conway;
    use crate::invariants::jones::jones_in_t;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    /// `log V(e^x)` straight from the polynomial, through exact rationals.
    fn w_from_polynomial(b: &BraidWord, mmax: usize) -> Series {
        let v = jones_in_t(b).unwrap();
        let mut j = vec![BigRational::zero(); mmax + 1];
        for (e, c) in v.terms() {
            let s = series_exp(&BigRational::from_integer(e.into()), mmax + 1);
            for (slot, x) in j.iter_mut().zip(s) {
                *slot += x * BigRational::from_integer(c.clone());
            }
        }
        series_log(&j).unwrap()
    }

    #[test]
    fn unknot_is_zero() {
        for b in ["B1:", "B3: 1 2", "B4: 1 -2 3"] {
            assert!(w_series(&w(b), 5).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn matches_the_polynomial() {
        for b in ["B2: 1 1 1", "B3: 1 -2 1 -2", "B2: 1 1 1 1 1", "B3: 1 1 1 2 -1 2", "B4: 1 -2 3 -2 1 2 -3"] {
            let b = w(b);
            assert_eq!(w_series(&b, 6).unwrap(), w_from_polynomial(&b, 6), "{}", b);
            let (_, c) = alexander_conway(&b).unwrap();
            assert_eq!(conway_series(&b).unwrap(), c, "{}", b);
        }
    }

    #[test]
    fn low_coefficients_vanish() {
        let p = probe(&w("B3: 1 1 1 2 -1 2"), 4).unwrap();
        assert!(p.w[0].is_zero() && p.w[1].is_zero());
        // w_2 of the trefoil is -3 a_2 in these units
        let t = w_series(&w("B2: 1 1 1"), 2).unwrap();
        assert_eq!(t[2], BigRational::from_integer((-3).into()));
    }

    #[test]
    fn rejects_links() {
        assert!(probe(&w("B2: 1 1"), 3).is_err());
    }
}
