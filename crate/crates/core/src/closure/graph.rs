//! Bridges and cut vertices of a multigraph by an iterative lowlink scan.

pub(super) struct Lowlink {
    pub bridges: Vec<usize>,
    pub articulation: Vec<bool>,
    /// Number of connected pieces.
    pub pieces: usize,
}

/// Scans `n` vertices joined by `edges`, ignoring loops and the edge
/// `skip`. Parallel edges are kept apart by index.
pub(super) fn lowlink(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> Lowlink {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        if u == v || Some(id) == skip {
            continue;
        }
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let unset = usize::MAX;
    let mut disc = vec![unset; n];
    let mut low = vec![0; n];
    let mut parent_edge = vec![unset; n];
    let mut articulation = vec![false; n];
    let mut bridges = Vec::new();
    let mut pieces = 0;
    let mut clock = 0;
    for root in 0..n {
        if disc[root] != unset {
            continue;
        }
        pieces += 1;
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut root_children = 0;
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < adj[v].len() {
                let (w, id) = adj[v][top.1];
                top.1 += 1;
                if id == parent_edge[v] {
                    continue;
                }
                if disc[w] == unset {
                    parent_edge[w] = id;
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        bridges.push(parent_edge[v]);
                    }
                    if u != root && low[v] >= disc[u] {
                        articulation[u] = true;
                    }
                }
            }
        }
        articulation[root] = root_children > 1;
    }
    Lowlink {
        bridges,
        articulation,
        pieces,
    }
}
