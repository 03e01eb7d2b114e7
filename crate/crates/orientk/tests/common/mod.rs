//! Shared helpers for the integration suites: seeded random graph and
//! digraph generators, orientation enumeration, and independent
//! connectivity predicates used as oracles.

use orientk::{EdgeState, Multidigraph, Multigraph, PartialOrientation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, min_v: usize, max_v: usize, max_e: usize) -> Multigraph {
    let n = rng.gen_range(min_v..=max_v);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut g = Multigraph::new(labels).unwrap();
    let m = rng.gen_range(0..=max_e);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge_ix(u, v).unwrap();
        }
    }
    g
}

pub fn random_digraph(
    rng: &mut ChaCha8Rng,
    min_v: usize,
    max_v: usize,
    max_a: usize,
) -> Multidigraph {
    let n = rng.gen_range(min_v..=max_v);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut d = Multidigraph::new(labels).unwrap();
    let m = rng.gen_range(0..=max_a);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            d.add_arc_ix(u, v).unwrap();
        }
    }
    d
}

/// All 2^|E| total orientations of `g`, as bitmask-indexed digraphs.
pub fn all_orientations(g: &Multigraph) -> impl Iterator<Item = Multidigraph> + '_ {
    let m = g.edge_count();
    (0u64..(1u64 << m)).map(move |bits| {
        let mut o = PartialOrientation::undecided(m);
        for e in 0..m {
            o.set(e, if bits & (1 << e) != 0 { EdgeState::Reversed } else { EdgeState::Forward });
        }
        g.orient(&o).unwrap()
    })
}

/// Plain traversal connectivity of the underlying graph, independent of the
/// flow machinery. Isolated-vertex-free connectivity over all vertices.
pub fn graph_connected(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected with no bridge: deleting any single edge keeps it connected.
pub fn two_edge_connected(g: &Multigraph) -> bool {
    if g.vertex_count() < 2 || !graph_connected(g) {
        return false;
    }
    for skip in 0..g.edge_count() {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for (eid, &(u, v)) in g.edges().iter().enumerate() {
            if eid != skip {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !seen.into_iter().all(|s| s) {
            return false;
        }
    }
    true
}
