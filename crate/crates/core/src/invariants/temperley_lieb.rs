//! Kauffman bracket of a braid closure by transfer through the
//! Temperley–Lieb diagram basis, generic over the coefficient ring.
//!
//! `σ_i ↦ A + A^{-1} e_i` and `σ_i^{-1} ↦ A^{-1} + A e_i`, where the
//! identity term is the vertical smoothing.

use std::collections::HashMap;

use crate::braid::BraidWord;

/// The coefficient operations the transfer needs.
pub(crate) trait Scalar: Clone {
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
}

/// Points `0..k` on top and `k..2k` on the bottom; `m[p]` is the partner of `p`.
type Matching = Vec<u8>;

fn identity(k: usize) -> Matching {
    (0..2 * k).map(|p| ((p + k) % (2 * k)) as u8).collect()
}

/// Stacks `e_i` below `m`. Returns `true` when a closed loop was removed.
fn apply_cup(m: &mut Matching, k: usize, i: usize) -> bool {
    let (u, v) = (k + i - 1, k + i);
    let (a, b) = (m[u] as usize, m[v] as usize);
    if a == v {
        return true;
    }
    m[a] = b as u8;
    m[b] = a as u8;
    m[u] = v as u8;
    m[v] = u as u8;
    false
}

/// Loops left after joining top point `j` to bottom point `k + j`.
fn closure_loops(m: &Matching, k: usize) -> usize {
    let mut seen = vec![false; 2 * k];
    let mut loops = 0;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = m[p] as usize;
            seen[q] = true;
            p = if q < k { q + k } else { q - k };
            if p == start {
                break;
            }
        }
    }
    loops
}

/// `Σ_D c_D δ^{loops(D) - 1}`, the bracket normalized to 1 on the unknot.
pub(crate) fn bracket<S: Scalar>(b: &BraidWord, a: &S, a_inv: &S, delta: &S, one: &S) -> S {
    let k = b.strands();
    let mut state: HashMap<Matching, S> = HashMap::new();
    state.insert(identity(k), one.clone());
    let a_delta = a.mul(delta);
    let a_inv_delta = a_inv.mul(delta);
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let (keep, cup, cup_loop) = if l > 0 {
            (a, a_inv, &a_inv_delta)
        } else {
            (a_inv, a, &a_delta)
        };
        let mut next: HashMap<Matching, S> = HashMap::with_capacity(state.len() * 2);
        for (m, c) in state {
            let mut cupped = m.clone();
            let looped = apply_cup(&mut cupped, k, i);
            let f = if looped { cup_loop } else { cup };
            accumulate(&mut next, cupped, c.mul(f));
            accumulate(&mut next, m, c.mul(keep));
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    let mut total: Option<S> = None;
    for (m, c) in state {
        let mut term = c;
        for _ in 1..closure_loops(&m, k) {
            term = term.mul(delta);
        }
        match &mut total {
            Some(t) => t.add_assign(&term),
            None => total = Some(term),
        }
    }
    total.unwrap_or_else(|| one.zero_like())
}

fn accumulate<S: Scalar>(map: &mut HashMap<Matching, S>, key: Matching, value: S) {
    match map.get_mut(&key) {
        Some(slot) => slot.add_assign(&value),
        None => {
            map.insert(key, value);
        }
    }
}
