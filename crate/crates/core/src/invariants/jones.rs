use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::LaurentPoly;
use super::temperley_lieb::{bracket, Scalar};
use crate::braid::BraidWord;

impl Scalar for LaurentPoly {
    fn add_assign(&mut self, other: &Self) {
        *self = &*self + other;
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
}

/// Kauffman bracket of the closure in the variable `A`, equal to 1 on the
/// unknot.
pub fn kauffman_bracket(b: &BraidWord) -> LaurentPoly {
    let a = LaurentPoly::monomial(1, 1);
    let a_inv = LaurentPoly::monomial(1, -1);
    let delta = LaurentPoly::from_terms([(2, BigInt::from(-1)), (-2, BigInt::from(-1))]);
    bracket(b, &a, &a_inv, &delta, &LaurentPoly::one())
}

/// Jones polynomial of the closure as a polynomial in `t^{1/2}`.
///
/// `V = (-A^3)^{-w} <L>` with `A = t^{-1/4}` and `w` the exponent sum, so
/// `A^e` becomes `(t^{1/2})^{-e/2}`. Render with `LaurentPoly::render("t", true)`.
pub fn jones(b: &BraidWord) -> LaurentPoly {
    let w = b.exponent_sum();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = &kauffman_bracket(b) * &LaurentPoly::monomial(sign, -3 * w);
    f.stretch(-1)
        .shrink(2)
        .expect("bracket exponents of a closure are even")
}

/// Jones polynomial in `t` for knots, whose exponents are integral.
pub fn jones_in_t(b: &BraidWord) -> Option<LaurentPoly> {
    jones(b).shrink(2)
}

/// `|V(-1)|`, which equals the determinant for knots.
pub fn jones_determinant(b: &BraidWord) -> BigInt {
    // t = -1 means t^{1/2} = i: sum c_e i^e, real part for even total.
    let v = jones(b);
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for (e, c) in v.terms() {
        match e.rem_euclid(4) {
            0 => re += c,
            1 => im += c,
            2 => re -= c,
            _ => im -= c,
        }
    }
    if re.is_zero() {
        im.abs()
    } else {
        re.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(jones(&w("B1:")), LaurentPoly::one());
        assert_eq!(jones(&w("B3: 1 -2")), LaurentPoly::one());
        // two-component unlink: -t^{1/2} - t^{-1/2}
        assert_eq!(jones(&w("B2:")), p("-1*t^-1 + -1*t^1"));
    }

    #[test]
    fn trefoils_are_mirror_images() {
        let right = jones_in_t(&w("B2: 1 1 1")).unwrap();
        let left = jones_in_t(&w("B2: -1 -1 -1")).unwrap();
        assert_eq!(right, p("1*t^1 + 1*t^3 + -1*t^4"));
        assert_eq!(left, right.stretch(-1));
        assert_eq!(jones_determinant(&w("B2: 1 1 1")), BigInt::from(3));
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let v = jones_in_t(&w("B3: 1 -2 1 -2")).unwrap();
        assert_eq!(v, p("1*t^-2 + -1*t^-1 + 1*t^0 + -1*t^1 + 1*t^2"));
        assert_eq!(jones_determinant(&w("B3: 1 -2 1 -2")), BigInt::from(5));
    }

    #[test]
    fn hopf_link() {
        assert_eq!(jones(&w("B2: 1 1")), p("-1*t^1 + -1*t^5"));
    }
}
