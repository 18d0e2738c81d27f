//! Braid closures as planar diagrams, connected sums, and the maps and
//! moves relating braids with equal or equivalent closures.

mod alternating;
mod graph;
mod markov;
mod sum;

pub use alternating::{alternating_family, is_alternating_word, AlternatingMember};
pub use markov::{compose_witnesses, lift_stabilization, markov, markov_join, MarkovJoin, MarkovMove, Stabilization};
pub use sum::{lcs_inverse, slide, LcsInverse, Slide};

use std::collections::HashMap;
use std::fmt;

use crate::braid::{twist, BraidWord};
use crate::error::{Error, Result};
use crate::series::{CertifiedElement, Series};

/// `X[a,b,c,d]`: `a` is the incoming under-arc, then counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub pd: [usize; 4],
    pub sign: i32,
}

impl Crossing {
    /// The incoming over-arc.
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            self.pd[3]
        } else {
            self.pd[1]
        }
    }

    pub fn over_out(&self) -> usize {
        if self.sign > 0 {
            self.pd[1]
        } else {
            self.pd[3]
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.pd;
        write!(f, "X[{},{},{},{}]", a, b, c, d)
    }
}

/// The standard closure of a braid as a planar diagram.
///
/// Arcs are numbered from 1 consecutively along each component; strands run
/// downward and positive `σ_i` takes the strand from the right over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    braid: BraidWord,
    crossings: Vec<Crossing>,
    components: Vec<Vec<usize>>,
}

pub fn close(b: &BraidWord) -> Diagram {
    let k = b.strands();
    let mut fresh = 0usize;
    let mut new_edge = || {
        fresh += 1;
        fresh - 1
    };
    let top: Vec<usize> = (0..k).map(|_| new_edge()).collect();
    let mut cur = top.clone();
    let mut raw = Vec::with_capacity(b.len());
    let mut next: HashMap<usize, usize> = HashMap::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let (el, er) = (cur[i - 1], cur[i]);
        let (fl, fr) = (new_edge(), new_edge());
        next.insert(el, fr);
        next.insert(er, fl);
        raw.push((el, er, fl, fr, l.signum()));
        cur[i - 1] = fl;
        cur[i] = fr;
    }
    // the bottom arc at each position continues as the top arc there
    let mut alias: HashMap<usize, usize> = HashMap::new();
    for p in 0..k {
        if cur[p] != top[p] {
            alias.insert(cur[p], top[p]);
        }
    }
    let canon = |e: usize| *alias.get(&e).unwrap_or(&e);
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut components = Vec::new();
    for &start in &top {
        if label.contains_key(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut e = start;
        loop {
            let l = label.len() + 1;
            label.insert(e, l);
            comp.push(l);
            e = match next.get(&e) {
                Some(&n) => canon(n),
                None => break,
            };
            if e == start {
                break;
            }
        }
        components.push(comp);
    }
    let lab = |e: usize| label[&canon(e)];
    let crossings = raw
        .into_iter()
        .map(|(el, er, fl, fr, s)| {
            let pd = if s > 0 {
                [lab(el), lab(fl), lab(fr), lab(er)]
            } else {
                [lab(er), lab(el), lab(fl), lab(fr)]
            };
            Crossing { pd, sign: s }
        })
        .collect();
    Diagram {
        braid: b.clone(),
        crossings,
        components,
    }
}

impl Diagram {
    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Arc labels of each component in traversal order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// `X[a,b,c,d]` quadruples separated by spaces.
    pub fn pd_text(&self) -> String {
        let parts: Vec<String> = self.crossings.iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }

    /// Crossing indices (from 1) met along each component, positive when
    /// passing over.
    pub fn gauss_code(&self) -> Vec<Vec<i64>> {
        let mut arriving: HashMap<usize, (usize, bool)> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            arriving.insert(c.pd[0], (i + 1, false));
            arriving.insert(c.over_in(), (i + 1, true));
        }
        self.components
            .iter()
            .map(|comp| {
                comp.iter()
                    .filter_map(|a| arriving.get(a))
                    .map(|&(i, over)| if over { i as i64 } else { -(i as i64) })
                    .collect()
            })
            .collect()
    }

    /// Over and under passages alternate along every component.
    pub fn is_alternating(&self) -> bool {
        self.gauss_code().iter().all(|code| {
            code.iter()
                .zip(code.iter().cycle().skip(1))
                .all(|(a, b)| (*a > 0) != (*b > 0))
        })
    }

    /// Edges of the 4-valent graph on crossings, one per arc that has
    /// crossings at both ends.
    fn graph_edges(&self) -> Vec<(usize, usize)> {
        let mut tail = HashMap::new();
        let mut head = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            head.insert(c.pd[0], i);
            head.insert(c.over_in(), i);
            tail.insert(c.pd[2], i);
            tail.insert(c.over_out(), i);
        }
        let mut edges: Vec<(usize, usize)> = head
            .iter()
            .map(|(arc, &h)| (tail[arc], h))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// No nugatory crossing: no crossing carries a loop arc or separates
    /// the diagram graph.
    pub fn is_reduced(&self) -> bool {
        let edges = self.graph_edges();
        if edges.iter().any(|(u, v)| u == v) {
            return false;
        }
        let scan = graph::lowlink(self.crossings.len(), &edges, None);
        !scan.articulation.iter().any(|&a| a)
    }

    /// Connected, without crossing-free components, and no circle meets the
    /// diagram in two points with crossings on both sides, i.e. no two
    /// arcs disconnect the diagram graph.
    pub fn is_prime(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return self.components.len() == 1;
        }
        let used: std::collections::HashSet<usize> = self.crossings.iter().flat_map(|c| c.pd).collect();
        if self.components.iter().any(|c| !used.contains(&c[0])) {
            return false;
        }
        let edges = self.graph_edges();
        let whole = graph::lowlink(n, &edges, None);
        if whole.pieces != 1 || !whole.bridges.is_empty() {
            return false;
        }
        (0..edges.len())
            .filter(|&e| edges[e].0 != edges[e].1)
            .all(|e| graph::lowlink(n, &edges, Some(e)).bridges.is_empty())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pd_text())
    }
}

/// Component count and the sorted pairwise linking numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkProfile {
    pub components: usize,
    pub linking: Vec<i64>,
}

impl fmt::Display for LinkProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.linking.iter().map(|x| x.to_string()).collect();
        write!(f, "components={} linking={{{}}}", self.components, l.join(","))
    }
}

pub fn link_profile(b: &BraidWord) -> LinkProfile {
    let k = b.strands();
    let cycles = b.permutation().cycles();
    let mut comp = vec![0usize; k];
    for (c, cycle) in cycles.iter().enumerate() {
        for &p in cycle {
            comp[p] = c;
        }
    }
    let m = cycles.len();
    let mut count = vec![vec![0i64; m]; m];
    let mut at: Vec<usize> = (0..k).collect();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let (x, y) = (comp[at[i - 1]], comp[at[i]]);
        if x != y {
            count[x.min(y)][x.max(y)] += l.signum() as i64;
        }
        at.swap(i - 1, i);
    }
    let mut linking = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for x in 0..m {
        for y in x + 1..m {
            linking.push(count[x][y] / 2);
        }
    }
    linking.sort_unstable();
    LinkProfile { components: m, linking }
}

fn check_pure(x: &BraidWord) -> Result<()> {
    if x.is_pure() {
        Ok(())
    } else {
        Err(Error::NotPure)
    }
}

/// `x t_{2k}^{-k} y t_{2k}^{k+1}` in `B_{2k}`, whose closure is
/// `cl(x t_k) # cl(y t_k)`.
pub fn connected_sum(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    check_pure(x)?;
    check_pure(y)?;
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    let k = x.strands();
    let t = twist(2 * k);
    BraidWord::concat_all(
        2 * k,
        [&x.include(2 * k)?, &t.pow(-(k as i64)), &y.include(2 * k)?, &t.pow(k as i64 + 1)],
    )
}

/// `φ_k(p) = cl(p t_k)`.
pub fn phi(p: &BraidWord) -> Result<Diagram> {
    check_pure(p)?;
    Ok(close(&p.compose(&twist(p.strands()))?))
}

/// `cl(base)` and `cl(mover · base)` are equivalent modulo the mover's
/// subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    base: BraidWord,
    mover: CertifiedElement,
}

impl EquivalenceWitness {
    pub fn new(base: BraidWord, mover: CertifiedElement) -> Result<Self> {
        if base.strands() != mover.strands() {
            return Err(Error::StrandMismatch {
                left: base.strands(),
                right: mover.strands(),
            });
        }
        check_pure(mover.word())?;
        Ok(Self { base, mover })
    }

    pub fn strands(&self) -> usize {
        self.base.strands()
    }

    pub fn base(&self) -> &BraidWord {
        &self.base
    }

    pub fn mover(&self) -> &CertifiedElement {
        &self.mover
    }

    pub fn series(&self) -> Series {
        self.mover.series()
    }

    pub fn level(&self) -> u32 {
        self.mover.level()
    }

    /// `mover · base`.
    pub fn moved(&self) -> BraidWord {
        self.mover.word().compose(&self.base).expect("same strand count")
    }
}
