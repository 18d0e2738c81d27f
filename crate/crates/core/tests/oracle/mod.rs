//! Reference computations written independently of the library, used to
//! cross-check it on small inputs.

#![allow(dead_code)]

use std::collections::BTreeMap;

use knotbraid::closure::close;
use knotbraid::invariants::LaurentPoly;
use knotbraid::BraidWord;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial as exponent to coefficient.
pub type Laurent = BTreeMap<i64, BigInt>;

fn laurent_add(p: &mut Laurent, e: i64, c: BigInt) {
    let entry = p.entry(e).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        p.remove(&e);
    }
}

fn laurent_mul(p: &Laurent, q: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (a, x) in p {
        for (b, y) in q {
            laurent_add(&mut out, a + b, x * y);
        }
    }
    out
}

pub fn from_lib(p: &LaurentPoly) -> Laurent {
    p.terms().map(|(e, c)| (e, c.clone())).collect()
}

// ---- free groups ----

pub fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn free_inv(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

pub fn free_cat(parts: &[&[i32]]) -> Vec<i32> {
    free_reduce(&parts.concat())
}

pub fn free_comm(x: &[i32], y: &[i32]) -> Vec<i32> {
    free_cat(&[x, y, &free_inv(x), &free_inv(y)])
}

// ---- union-find ----

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

fn pd_of(b: &BraidWord) -> (Vec<[usize; 4]>, Vec<i32>) {
    let d = close(b);
    (d.crossings().iter().map(|c| c.pd).collect(), d.crossings().iter().map(|c| c.sign).collect())
}

// ---- Kauffman bracket by state sum ----

/// Bracket of a PD code by summing over all `2^c` smoothings; normalized to
/// 1 on a single circle.
pub fn bracket_state_sum(pd: &[[usize; 4]]) -> Laurent {
    let c = pd.len();
    assert!(c > 0 && c <= 16, "state sum limited to 16 crossings");
    let labels = pd.iter().flatten().copied().max().unwrap() + 1;
    // (A-count minus B-count, loops) -> number of states
    let mut tally: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    for state in 0u32..(1 << c) {
        let mut dsu = Dsu::new(labels);
        let mut bal = 0i64;
        for (i, &[a, b, cc, d]) in pd.iter().enumerate() {
            if state >> i & 1 == 0 {
                dsu.union(a, b);
                dsu.union(cc, d);
                bal += 1;
            } else {
                dsu.union(a, d);
                dsu.union(b, cc);
                bal -= 1;
            }
        }
        let used: std::collections::BTreeSet<usize> = pd.iter().flatten().copied().collect();
        let loops = used.iter().filter(|&&x| dsu.find(x) == x).count();
        *tally.entry((bal, loops)).or_insert(0) += 1;
    }
    let delta: Laurent = [(2, BigInt::from(-1)), (-2, BigInt::from(-1))].into_iter().collect();
    let mut out = Laurent::new();
    for ((bal, loops), n) in tally {
        let mut term: Laurent = [(bal, BigInt::from(n))].into_iter().collect();
        for _ in 1..loops {
            term = laurent_mul(&term, &delta);
        }
        for (e, x) in term {
            laurent_add(&mut out, e, x);
        }
    }
    out
}

/// Jones polynomial of the closure in `t^{1/2}`, via the state sum.
pub fn jones_half(b: &BraidWord) -> Laurent {
    let (pd, signs) = pd_of(b);
    let writhe: i64 = signs.iter().map(|&s| s as i64).sum();
    let br = bracket_state_sum(&pd);
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = laurent_mul(&br, &[(-3 * writhe, BigInt::from(sign))].into_iter().collect());
    // A = t^{-1/4}
    f.into_iter()
        .map(|(e, c)| {
            assert!(e % 2 == 0, "odd power of A");
            (-e / 2, c)
        })
        .collect()
}

/// `log V(e^x)` coefficients `w_0..w_mmax` for a knot.
pub fn w_from_jones(v_half: &Laurent, mmax: usize) -> Vec<BigRational> {
    // V(e^x) = Σ c e^{e x / 2}
    let len = mmax + 1;
    let mut f = vec![BigRational::zero(); len];
    for (e, c) in v_half {
        let r = BigRational::new(BigInt::from(*e), BigInt::from(2));
        let mut term = BigRational::from_integer(c.clone());
        for (i, slot) in f.iter_mut().enumerate() {
            *slot += &term;
            term = term * &r / BigRational::from_integer(BigInt::from(i + 1));
        }
    }
    assert!(f[0].is_one(), "V(1) must be 1 for a knot");
    let mut l = vec![BigRational::zero(); len];
    for n in 1..len {
        let mut acc = BigRational::from_integer(BigInt::from(n)) * &f[n];
        for k in 1..n {
            acc -= BigRational::from_integer(BigInt::from(k)) * &l[k] * &f[n - k];
        }
        l[n] = acc / BigRational::from_integer(BigInt::from(n));
    }
    l
}

// ---- Alexander polynomial from the Wirtinger presentation ----

type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn padd(p: &Poly, q: &Poly, sign: i32) -> Poly {
    let n = p.len().max(q.len());
    let out = (0..n)
        .map(|i| {
            let a = p.get(i).cloned().unwrap_or_default();
            let b = q.get(i).cloned().unwrap_or_default();
            if sign > 0 {
                a + b
            } else {
                a - b
            }
        })
        .collect();
    trim(out)
}

fn pmul(p: &Poly, q: &Poly) -> Poly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

fn pdiv_exact(p: &Poly, q: &Poly) -> Poly {
    let mut r = p.clone();
    let dq = q.len() - 1;
    if r.len() < q.len() {
        assert!(r.is_empty(), "inexact division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); r.len() - dq];
    for i in (0..quot.len()).rev() {
        let lead = r[i + dq].clone();
        if lead.is_zero() {
            continue;
        }
        assert!((&lead % &q[dq]).is_zero(), "inexact division");
        let c = lead / &q[dq];
        for (j, b) in q.iter().enumerate() {
            r[i + j] -= &c * b;
        }
        quot[i] = c;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact division");
    trim(quot)
}

fn det_bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut prev: Poly = vec![BigInt::one()];
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&i| !m[i][k].is_empty()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = padd(&pmul(&m[i][j], &m[k][k]), &pmul(&m[i][k], &m[k][j]), -1);
                m[i][j] = pdiv_exact(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.into_iter().map(|c| -c).collect()
    } else {
        d
    }
}

/// Symmetrized Alexander polynomial of a knot closure with `Δ(1) = 1`.
pub fn alexander(b: &BraidWord) -> Laurent {
    let (pd, signs) = pd_of(b);
    let c = pd.len();
    if c == 0 {
        return [(0, BigInt::one())].into_iter().collect();
    }
    let labels = pd.iter().flatten().copied().max().unwrap() + 1;
    let mut dsu = Dsu::new(labels);
    for x in &pd {
        dsu.union(x[1], x[3]);
    }
    let mut index = BTreeMap::new();
    for x in &pd {
        for &l in x {
            let r = dsu.find(l);
            let next = index.len();
            index.entry(r).or_insert(next);
        }
    }
    let g = index.len();
    assert_eq!(g, c, "each crossing should end one over-arc");
    let p = |coeffs: &[i64]| -> Poly { trim(coeffs.iter().map(|&x| BigInt::from(x)).collect()) };
    let mut m = vec![vec![Vec::new(); g]; c];
    for (row, (x, &s)) in pd.iter().zip(&signs).enumerate() {
        let over = index[&dsu.find(x[1])];
        let inc = index[&dsu.find(x[0])];
        let out = index[&dsu.find(x[2])];
        let (vi, vo) = if s > 0 { (p(&[0, 1]), p(&[-1])) } else { (p(&[-1]), p(&[0, 1])) };
        m[row][over] = padd(&m[row][over], &p(&[1, -1]), 1);
        m[row][inc] = padd(&m[row][inc], &vi, 1);
        m[row][out] = padd(&m[row][out], &vo, 1);
    }
    let minor: Vec<Vec<Poly>> = m[..c - 1].iter().map(|r| r[..g - 1].to_vec()).collect();
    let d = det_bareiss(minor);
    let lo = d.iter().position(|x| !x.is_zero()).expect("knot Alexander polynomial is nonzero");
    let hi = d.len() - 1;
    assert!((hi - lo) % 2 == 0, "odd span");
    let centre = ((hi + lo) / 2) as i64;
    let at_one: BigInt = d.iter().sum();
    let flip = at_one.is_negative();
    let mut out = Laurent::new();
    for (i, x) in d.into_iter().enumerate() {
        if !x.is_zero() {
            out.insert(i as i64 - centre, if flip { -x } else { x });
        }
    }
    out
}

/// Conway coefficients `a_0, a_1, ..` from a symmetric Alexander polynomial,
/// using `t^j + t^{-j}` as a polynomial in `z^2`.
pub fn conway_from_alexander(delta: &Laurent) -> Vec<BigInt> {
    let top = delta.keys().copied().max().unwrap_or(0).max(0) as usize;
    let mut s: Vec<Vec<BigInt>> = vec![vec![BigInt::from(2)], vec![BigInt::from(2), BigInt::one()]];
    while s.len() <= top {
        let j = s.len();
        let mut next = vec![BigInt::zero(); s[j - 1].len() + 1];
        for (i, c) in s[j - 1].iter().enumerate() {
            next[i] += c * 2;
            next[i + 1] += c;
        }
        for (i, c) in s[j - 2].iter().enumerate() {
            next[i] -= c;
        }
        s.push(next);
    }
    let mut u = vec![BigInt::zero(); top + 1];
    u[0] += delta.get(&0).cloned().unwrap_or_default();
    for j in 1..=top {
        let c = delta.get(&(j as i64)).cloned().unwrap_or_default();
        assert_eq!(c, delta.get(&-(j as i64)).cloned().unwrap_or_default(), "not symmetric");
        for (i, x) in s[j].iter().enumerate() {
            u[i] += &c * x;
        }
    }
    let mut out = vec![BigInt::zero(); 2 * top + 1];
    for (i, x) in u.into_iter().enumerate() {
        out[2 * i] = x;
    }
    out
}

pub fn determinant(delta: &Laurent) -> BigInt {
    delta
        .iter()
        .map(|(e, c)| if e % 2 == 0 { c.clone() } else { -c.clone() })
        .sum::<BigInt>()
        .abs()
}

// ---- linking numbers ----

/// Pairwise linking numbers of the closure components (by braid strand
/// cycle), sorted.
pub fn linking_multiset(b: &BraidWord) -> Vec<i64> {
    let k = b.strands();
    // follow strands through the word to find components
    let mut pos: Vec<usize> = (0..k).collect();
    let mut at: Vec<usize> = (0..k).collect();
    let mut crossings = Vec::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let (s, t) = (at[i - 1], at[i]);
        crossings.push((s, t, l.signum() as i64));
        at.swap(i - 1, i);
        pos[s] = i;
        pos[t] = i - 1;
    }
    let mut dsu = Dsu::new(k);
    for start in 0..k {
        dsu.union(start, pos[start]);
    }
    let mut comp = BTreeMap::new();
    for s in 0..k {
        let r = dsu.find(s);
        let next = comp.len();
        comp.entry(r).or_insert(next);
    }
    let n = comp.len();
    let mut twice = vec![vec![0i64; n]; n];
    for (s, t, sign) in crossings {
        let (a, b) = (comp[&dsu.find(s)], comp[&dsu.find(t)]);
        if a != b {
            twice[a][b] += sign;
            twice[b][a] += sign;
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            assert!(twice[a][b] % 2 == 0);
            out.push(twice[a][b] / 2);
        }
    }
    out.sort();
    out
}
