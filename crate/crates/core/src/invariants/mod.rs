//! Exact invariants of braid closures.
//!
//! Conventions: positive `σ_i` is a positive crossing, the bracket uses
//! `σ_i ↦ A + A^{-1} e_i` with `δ = -A^2 - A^{-2}`, and `A = t^{-1/4}`.
//! Under these the closure of `σ_1^3` has Jones polynomial `t + t^3 - t^4`.

mod alexander;
mod jones;
mod poly;
mod temperley_lieb;
mod vassiliev;

pub use alexander::{alexander, alexander_conway, conway_from_alexander};
pub use jones::{jones, jones_determinant, jones_in_t, kauffman_bracket};
pub use poly::LaurentPoly;
pub use vassiliev::{conway_series, probe, w_series, Probe};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Entry `(i, j)` is the linking number of the strands starting at
/// positions `i` and `j`; the matrix is symmetric with zero diagonal.
pub fn strand_linking(p: &BraidWord) -> Result<Vec<Vec<i64>>> {
    if !p.is_pure() {
        return Err(Error::NotPure);
    }
    let k = p.strands();
    let mut at: Vec<usize> = (0..k).collect();
    let mut count = vec![vec![0i64; k]; k];
    for &l in p.letters() {
        let i = l.unsigned_abs() as usize;
        let (a, b) = (at[i - 1], at[i]);
        let s = l.signum() as i64;
        count[a][b] += s;
        count[b][a] += s;
        at.swap(i - 1, i);
    }
    for row in count.iter_mut() {
        for c in row.iter_mut() {
            *c /= 2;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Battery {
    pub components: usize,
    /// In the variable `t^{1/2}`.
    pub jones: LaurentPoly,
    pub alexander: Option<LaurentPoly>,
    pub conway: Option<[BigInt; 5]>,
    pub determinant: Option<BigInt>,
    pub w2: Option<BigRational>,
    pub w3: Option<BigRational>,
}

pub fn battery(b: &BraidWord) -> Result<Battery> {
    let components = b.permutation().cycles().len();
    let jones = jones(b);
    if components != 1 {
        return Ok(Battery {
            components,
            jones,
            alexander: None,
            conway: None,
            determinant: None,
            w2: None,
            w3: None,
        });
    }
    let (delta, conway) = alexander_conway(b)?;
    let w = w_series(b, 3)?;
    Ok(Battery {
        components,
        jones,
        determinant: Some(delta.at_minus_one().abs()),
        alexander: Some(delta),
        conway: Some(conway),
        w2: Some(w[2].clone()),
        w3: Some(w[3].clone()),
    })
}

impl Battery {
    /// Jones polynomial in `t`, with half-integer exponents written `e/2`.
    pub fn jones_text(&self) -> String {
        self.jones.render("t", true)
    }

    /// Line-oriented `key=value` record; polynomials use the raw
    /// `coeff*t^exp` form, Jones in `t^{1/2}`.
    pub fn to_record(&self) -> String {
        let mut out = format!("components={}\njones_half={}\n", self.components, self.jones);
        if let Some(a) = &self.alexander {
            out.push_str(&format!("alexander={}\n", a));
        }
        if let Some(c) = &self.conway {
            let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("conway={}\n", c.join(",")));
        }
        if let Some(d) = &self.determinant {
            out.push_str(&format!("determinant={}\n", d));
        }
        if let Some(w) = &self.w2 {
            out.push_str(&format!("w2={}\n", w));
        }
        if let Some(w) = &self.w3 {
            out.push_str(&format!("w3={}\n", w));
        }
        out
    }
}

impl fmt::Display for Battery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "components: {}", self.components)?;
        writeln!(f, "jones: {}", self.jones_text())?;
        if let Some(a) = &self.alexander {
            writeln!(f, "alexander: {}", a)?;
        }
        if let Some(c) = &self.conway {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, x)| x.sign() != num_bigint::Sign::NoSign)
                .map(|(i, x)| if i == 0 { x.to_string() } else { format!("{}*z^{}", x, i) })
                .collect();
            writeln!(f, "conway: {}", terms.join(" + "))?;
        }
        if let Some(d) = &self.determinant {
            writeln!(f, "determinant: {}", d)?;
        }
        if let (Some(w2), Some(w3)) = (&self.w2, &self.w3) {
            writeln!(f, "w2: {}", w2)?;
            writeln!(f, "w3: {}", w3)?;
        }
        Ok(())
    }
}

impl FromStr for Battery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut b = Battery {
            components: 0,
            jones: LaurentPoly::zero(),
            alexander: None,
            conway: None,
            determinant: None,
            w2: None,
            w3: None,
        };
        let bad = |l: &str| Error::Parse(format!("bad battery line `{}`", l));
        for line in s.lines().filter(|l| !l.trim().is_empty()) {
            let (key, value) = line.split_once('=').ok_or_else(|| bad(line))?;
            match key.trim() {
                "components" => b.components = value.parse().map_err(|_| bad(line))?,
                "jones_half" => b.jones = value.parse()?,
                "alexander" => b.alexander = Some(value.parse()?),
                "conway" => {
                    let parts: Vec<BigInt> = value
                        .split(',')
                        .map(|x| x.trim().parse().map_err(|_| bad(line)))
                        .collect::<Result<_>>()?;
                    b.conway = Some(parts.try_into().map_err(|_| bad(line))?);
                }
                "determinant" => b.determinant = Some(value.parse().map_err(|_| bad(line))?),
                "w2" => b.w2 = Some(value.parse().map_err(|_| bad(line))?),
                "w3" => b.w3 = Some(value.parse().map_err(|_| bad(line))?),
                _ => return Err(bad(line)),
            }
        }
        Ok(b)
    }
}
