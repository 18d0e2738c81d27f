//! A named suite of group and group-ring identities, each checked on
//! concrete instances.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::{canonical_key, equal};
use crate::braid::{commutator, twist, BraidWord, FreeWord};
use crate::error::{Error, Result};
use crate::ring::RingElement;
use crate::rng::{random_pure, random_word, seeded};
use crate::series::{ds3_words, Ds3Form, DEFAULT_BASE_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `σ_i σ_j = σ_j σ_i` for `|i - j| > 1`.
    FarCommutation,
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`.
    BraidRelation,
    /// `[xy, z] = (x [y, z] x^{-1}) [x, z]` in a free group.
    CommutatorProduct,
    /// `[[x,y],z] = (x y x^{-1} z [[z^{-1},y^{-1}],x] z^{-1} x y^{-1} x^{-1}) (x [y,[x^{-1},z]] x^{-1})`.
    HallWitt,
    /// `u x t = [u, x] x t^{-i-1} y t^{i+2}` with `u = t^{-i-1} y t^{i+1}`, `t = t_{2k}`.
    SlideStep,
    /// `D X D Δ² = flip(X)` and `d X d Δ^{-2} = flip(X)` in `B_3`.
    DConjugationModCenter,
    /// `d X d^{-1} = flip(X)` in `B_3`.
    DConjugation,
    /// `[awa, awB] = awBD`.
    Ds3AwaAwB,
    /// `[awa, BwB] = awaD`.
    Ds3AwaBwB,
    /// `[Bwa, awB] = BwBD`.
    Ds3BwaAwB,
    /// `[Bwa, BwB] = BwaD`.
    Ds3BwaBwB,
    /// `[x,y] - 1 = ((x-1)(y-1) - (y-1)(x-1)) x^{-1} y^{-1}` in the group ring.
    RingCommutator,
    /// `(x-1)(y-1) - (y-1)(x-1) = ([x,y]-1) + ([x,y]-1)(yx-1)`.
    RingSwap,
    /// `(x-1)y - y(x-1) = ([x,y]-1) y x`.
    RingMovePast,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::FarCommutation,
        IdentityId::BraidRelation,
        IdentityId::CommutatorProduct,
        IdentityId::HallWitt,
        IdentityId::SlideStep,
        IdentityId::DConjugationModCenter,
        IdentityId::DConjugation,
        IdentityId::Ds3AwaAwB,
        IdentityId::Ds3AwaBwB,
        IdentityId::Ds3BwaAwB,
        IdentityId::Ds3BwaBwB,
        IdentityId::RingCommutator,
        IdentityId::RingSwap,
        IdentityId::RingMovePast,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::FarCommutation => "far-commutation",
            IdentityId::BraidRelation => "braid-relation",
            IdentityId::CommutatorProduct => "commutator-product",
            IdentityId::HallWitt => "hall-witt",
            IdentityId::SlideStep => "slide-step",
            IdentityId::DConjugationModCenter => "d-conjugation-mod-center",
            IdentityId::DConjugation => "d-conjugation",
            IdentityId::Ds3AwaAwB => "ds3-awa-awB",
            IdentityId::Ds3AwaBwB => "ds3-awa-BwB",
            IdentityId::Ds3BwaAwB => "ds3-Bwa-awB",
            IdentityId::Ds3BwaBwB => "ds3-Bwa-BwB",
            IdentityId::RingCommutator => "ring-commutator",
            IdentityId::RingSwap => "ring-swap",
            IdentityId::RingMovePast => "ring-move-past",
        }
    }

    fn ds3_forms(self) -> Option<(Ds3Form, Ds3Form, Ds3Form)> {
        use Ds3Form::*;
        match self {
            IdentityId::Ds3AwaAwB => Some((awa, awB, awBD)),
            IdentityId::Ds3AwaBwB => Some((awa, BwB, awaD)),
            IdentityId::Ds3BwaAwB => Some((Bwa, awB, BwBD)),
            IdentityId::Ds3BwaBwB => Some((Bwa, BwB, BwaD)),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Concrete values for an identity's free variables. Which fields are read
/// depends on the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityInstance {
    pub braids: Vec<BraidWord>,
    pub free: Vec<FreeWord>,
    pub indices: Vec<usize>,
}

impl fmt::Display for IdentityInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.indices.is_empty() {
            let ix: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
            parts.push(format!("indices=[{}]", ix.join(",")));
        }
        for w in &self.braids {
            parts.push(format!("[{}]", w));
        }
        for w in &self.free {
            parts.push(format!("[{}]", w));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub instance: IdentityInstance,
    pub verdict: bool,
    pub left_key: String,
    pub right_key: String,
}

fn random_free<R: Rng>(rng: &mut R, gens: i32, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=gens);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    FreeWord::new(letters).expect("nonzero letters")
}

/// A random instance for the identity, determined by `seed`.
pub fn random_instance(id: IdentityId, seed: u64) -> IdentityInstance {
    let mut rng = seeded(seed, 10);
    let mut inst = IdentityInstance::default();
    match id {
        IdentityId::FarCommutation => {
            let k = rng.gen_range(4..=8);
            let i = rng.gen_range(1..=k - 3);
            let j = rng.gen_range(i + 2..=k - 1);
            inst.indices = if rng.gen_bool(0.5) { vec![i, j, k] } else { vec![j, i, k] };
        }
        IdentityId::BraidRelation => {
            let k = rng.gen_range(3..=8);
            inst.indices = vec![rng.gen_range(1..=k - 2), k];
        }
        IdentityId::CommutatorProduct | IdentityId::HallWitt => {
            inst.free = (0..3).map(|_| random_free(&mut rng, 4, 8)).collect();
        }
        IdentityId::SlideStep => {
            let k = rng.gen_range(2..=4);
            let i = rng.gen_range(0..=k);
            inst.indices = vec![i, k];
            inst.braids = vec![random_pure(&mut rng, k, 3), random_pure(&mut rng, k, 3)];
        }
        IdentityId::DConjugationModCenter | IdentityId::DConjugation => {
            let len = rng.gen_range(0..=16);
            inst.braids = vec![random_word(&mut rng, 3, len)];
        }
        IdentityId::Ds3AwaAwB | IdentityId::Ds3AwaBwB | IdentityId::Ds3BwaAwB | IdentityId::Ds3BwaBwB => {
            inst.indices = vec![rng.gen_range(1..=3)];
        }
        IdentityId::RingCommutator | IdentityId::RingSwap | IdentityId::RingMovePast => {
            let k = rng.gen_range(2..=4);
            let lx = rng.gen_range(1..=6);
            let ly = rng.gen_range(1..=6);
            inst.braids = vec![random_word(&mut rng, k, lx), random_word(&mut rng, k, ly)];
        }
    }
    inst
}

fn need<T>(items: &[T], n: usize, what: &str) -> Result<()> {
    if items.len() < n {
        return Err(Error::Precondition(format!("instance needs {} {}", n, what)));
    }
    Ok(())
}

fn braid_sides(id: IdentityId, inst: &IdentityInstance, left: BraidWord, right: BraidWord) -> Result<IdentityReport> {
    let verdict = equal(&left, &right)?;
    Ok(IdentityReport {
        id,
        instance: inst.clone(),
        verdict,
        left_key: canonical_key(&left),
        right_key: canonical_key(&right),
    })
}

fn ring_sides(id: IdentityId, inst: &IdentityInstance, left: RingElement, right: RingElement) -> IdentityReport {
    IdentityReport {
        id,
        instance: inst.clone(),
        verdict: left == right,
        left_key: left.to_string(),
        right_key: right.to_string(),
    }
}

/// Evaluates both sides of the identity on the instance.
pub fn verify_identity(id: IdentityId, inst: &IdentityInstance) -> Result<IdentityReport> {
    match id {
        IdentityId::FarCommutation => {
            need(&inst.indices, 3, "indices i, j, k")?;
            let (i, j, k) = (inst.indices[0], inst.indices[1], inst.indices[2]);
            if i.abs_diff(j) < 2 {
                return Err(Error::Precondition("far commutation needs |i - j| > 1".into()));
            }
            let si = BraidWord::generator(i, 1, k)?;
            let sj = BraidWord::generator(j, 1, k)?;
            braid_sides(id, inst, si.concat(&sj)?, sj.concat(&si)?)
        }
        IdentityId::BraidRelation => {
            need(&inst.indices, 2, "indices i, k")?;
            let (i, k) = (inst.indices[0], inst.indices[1]);
            let a = BraidWord::generator(i, 1, k)?;
            let b = BraidWord::generator(i + 1, 1, k)?;
            braid_sides(
                id,
                inst,
                BraidWord::concat_all(k, [&a, &b, &a])?,
                BraidWord::concat_all(k, [&b, &a, &b])?,
            )
        }
        IdentityId::CommutatorProduct | IdentityId::HallWitt => {
            need(&inst.free, 3, "free words x, y, z")?;
            let (x, y, z) = (&inst.free[0], &inst.free[1], &inst.free[2]);
            let (left, right) = if id == IdentityId::CommutatorProduct {
                let left = x.concat(y).commutator(z);
                let right = x.concat(&y.commutator(z)).concat(&x.invert()).concat(&x.commutator(z));
                (left, right)
            } else {
                let (xi, yi, zi) = (x.invert(), y.invert(), z.invert());
                let left = x.commutator(y).commutator(z);
                let first = x
                    .concat(y)
                    .concat(&xi)
                    .concat(z)
                    .concat(&zi.commutator(&yi).commutator(x))
                    .concat(&zi)
                    .concat(x)
                    .concat(&yi)
                    .concat(&xi);
                let second = x.concat(&y.commutator(&xi.commutator(z))).concat(&xi);
                (left, first.concat(&second))
            };
            let (left, right) = (left.free_reduce(), right.free_reduce());
            Ok(IdentityReport {
                id,
                instance: inst.clone(),
                verdict: left == right,
                left_key: left.to_string(),
                right_key: right.to_string(),
            })
        }
        IdentityId::SlideStep => {
            need(&inst.indices, 2, "indices i, k")?;
            need(&inst.braids, 2, "pure braids x, y")?;
            let (i, k) = (inst.indices[0] as i64, inst.indices[1]);
            let m = 2 * k;
            let x = inst.braids[0].include(m)?;
            let y = inst.braids[1].include(m)?;
            if !x.is_pure() || !y.is_pure() {
                return Err(Error::NotPure);
            }
            let t = twist(m);
            let u = BraidWord::concat_all(m, [&t.pow(-i - 1), &y, &t.pow(i + 1)])?;
            let left = BraidWord::concat_all(m, [&u, &x, &t])?;
            let right = BraidWord::concat_all(m, [&commutator(&u, &x)?, &x, &t.pow(-i - 1), &y, &t.pow(i + 2)])?;
            braid_sides(id, inst, left, right)
        }
        IdentityId::DConjugationModCenter | IdentityId::DConjugation => {
            need(&inst.braids, 1, "a B3 word X")?;
            let x = &inst.braids[0];
            if x.strands() != 3 {
                return Err(Error::Precondition("X must be a B3 word".into()));
            }
            let d: BraidWord = BraidWord::from_raw(3, vec![1, 2, 1]);
            let dd = d.invert();
            if id == IdentityId::DConjugation {
                return braid_sides(id, inst, BraidWord::concat_all(3, [&d, x, &dd])?, x.flip());
            }
            let center = d.pow(2);
            let first = BraidWord::concat_all(3, [&dd, x, &dd, &center])?;
            let second = BraidWord::concat_all(3, [&d, x, &d, &center.invert()])?;
            let target = x.flip();
            let verdict = equal(&first, &target)? && equal(&second, &target)?;
            Ok(IdentityReport {
                id,
                instance: inst.clone(),
                verdict,
                left_key: format!("{};{}", canonical_key(&first), canonical_key(&second)),
                right_key: format!("{};{}", canonical_key(&target), canonical_key(&target)),
            })
        }
        IdentityId::Ds3AwaAwB | IdentityId::Ds3AwaBwB | IdentityId::Ds3BwaAwB | IdentityId::Ds3BwaBwB => {
            need(&inst.indices, 1, "a level n")?;
            let n = inst.indices[0] as u32;
            let (fx, fy, fz) = id.ds3_forms().expect("ds3 identity");
            let here = ds3_words(n, DEFAULT_BASE_BOUND)?;
            let next = ds3_words(n + 1, DEFAULT_BASE_BOUND)?;
            let left = commutator(here.get(fx).word(), here.get(fy).word())?;
            let right = next.get(fz).word().clone();
            let mut report = braid_sides(id, inst, left, right.clone())?;
            report.verdict &= fz.matches(&right);
            Ok(report)
        }
        IdentityId::RingCommutator | IdentityId::RingSwap | IdentityId::RingMovePast => {
            need(&inst.braids, 2, "braids x, y")?;
            let (x, y) = (&inst.braids[0], &inst.braids[1]);
            let k = x.strands();
            let one = RingElement::one(k);
            let rx = RingElement::from_word(x);
            let ry = RingElement::from_word(y);
            let xm = &rx - &one;
            let ym = &ry - &one;
            let c = RingElement::from_word(&commutator(x, y)?);
            let cm = &c - &one;
            match id {
                IdentityId::RingCommutator => {
                    let inv = RingElement::from_word(&x.invert().concat(&y.invert())?);
                    let right = &(&(&xm * &ym) - &(&ym * &xm)) * &inv;
                    Ok(ring_sides(id, inst, cm, right))
                }
                IdentityId::RingSwap => {
                    let left = &(&xm * &ym) - &(&ym * &xm);
                    let yx = RingElement::from_word(&y.concat(x)?);
                    let right = &cm + &(&cm * &(&yx - &one));
                    Ok(ring_sides(id, inst, left, right))
                }
                _ => {
                    let left = &(&xm * &ry) - &(&ry * &xm);
                    let right = &(&cm * &ry) * &rx;
                    Ok(ring_sides(id, inst, left, right))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn suite_holds_on_random_instances() {
        for id in IdentityId::ALL {
            for seed in 0..5 {
                let inst = random_instance(id, seed);
                let r = verify_identity(id, &inst).unwrap();
                assert!(r.verdict, "{} failed on {}", id, inst);
                assert_eq!(r.left_key, r.right_key);
            }
        }
    }

    #[test]
    fn false_instance_is_rejected() {
        let inst = IdentityInstance {
            indices: vec![1, 2, 4],
            ..Default::default()
        };
        assert!(verify_identity(IdentityId::FarCommutation, &inst).is_err());
        let x = FreeWord::generator(1);
        let inst = IdentityInstance {
            free: vec![x.clone(), x.clone()],
            ..Default::default()
        };
        assert!(verify_identity(IdentityId::HallWitt, &inst).is_err());
    }

    #[test]
    fn literal_center_free_version_fails() {
        // D a D = b only holds up to the central Δ²
        let dad: BraidWord = "B3: -1 -2 -1 1 -1 -2 -1".parse().unwrap();
        assert!(!equal(&dad, &"B3: 2".parse().unwrap()).unwrap());
    }
}
