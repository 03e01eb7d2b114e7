//! Flow-based verification of digraph k-vertex-connectivity and undirected
//! weak 2k-connectivity, with explicit witnesses.
//!
//! Digraph pair connectivity reduces to max flow on a split-node network:
//! every vertex other than the query pair becomes an `in -> out` arc of
//! capacity 1. A direct arc from source to target survives every separator,
//! so such a pair can never be disconnected by vertex deletion.
//!
//! Weak 2k-connectivity uses the mixed-cut transform: each vertex outside the
//! pair is split with capacity 2 and each edge becomes a pair of antiparallel
//! unit arcs, so the max-flow value equals `min 2|U| + |F|` over all mixed
//! cuts separating the pair. This reduction is cross-validated against the
//! exhaustive oracles below rather than taken on faith.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::{GraphError, Multidigraph, Multigraph};

#[derive(Debug, Error)]
pub enum ConnectivityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("difan endpoint sets must be disjoint and nonempty")]
    BadDifanSets,
}

/// A mixed cut `(U, F)` separating a vertex pair; its value is `2|U| + |F|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedCut {
    pub vertices: Vec<String>,
    pub edges: Vec<usize>,
    pub value: usize,
}

impl fmt::Display for MixedCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MIXEDCUT U:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        write!(f, " F:")?;
        for e in &self.edges {
            write!(f, " e{e}")?;
        }
        Ok(())
    }
}

/// A vertex separator witnessing that a pair is not k-connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub from: String,
    pub to: String,
    pub vertices: Vec<String>,
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SEPARATOR")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// A set of pairwise U-disjoint dipaths between two vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Difan {
    pub paths: Vec<Vec<String>>,
    pub constraint_set: Vec<String>,
}

impl fmt::Display for Difan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DIFAN")?;
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                write!(f, " /")?;
            }
            write!(f, " path:")?;
            for v in p {
                write!(f, " {v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairWitness {
    /// Internally disjoint dipath systems in both directions.
    Difans {
        forward: Vec<Vec<String>>,
        backward: Vec<Vec<String>>,
    },
    Separator(Separator),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairConnectivity {
    /// Minimum over both directions of the max count of internally disjoint
    /// dipaths (a direct arc contributes a length-1 dipath).
    pub value: usize,
    pub witness: PairWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum KWitness {
    TooFewVertices { vertex_count: usize },
    SeparatedPair(Separator),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KConnectivity {
    pub holds: bool,
    pub witness: Option<KWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeakWitness {
    TooFewVertices { vertex_count: usize },
    Cut { from: String, to: String, cut: MixedCut },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakConnectivity {
    pub holds: bool,
    pub witness: Option<WeakWitness>,
}

// --- digraph pair connectivity ---------------------------------------------

struct PairFlow {
    value: i64,
    direct: usize,
    net: FlowNetwork,
    split_arc_of: Vec<Option<usize>>, // vertex -> split ArcId
}

/// Split-node flow for direction `s -> t`. Non-direct arcs get a capacity
/// exceeding any cut of interest so minimum cuts consist of split arcs and
/// direct arcs only.
fn pair_flow(d: &Multidigraph, s: usize, t: usize, limit: Option<i64>) -> PairFlow {
    let n = d.vertex_count();
    let big = (n + d.arc_count() + 1) as i64;
    // node 2w = in(w), 2w+1 = out(w)
    let mut net = FlowNetwork::new(2 * n, 2 * s + 1, 2 * t);
    let mut split_arc_of = vec![None; n];
    for w in 0..n {
        if w != s && w != t {
            split_arc_of[w] = Some(net.add_arc(2 * w, 2 * w + 1, 1));
        }
    }
    let mut direct = 0;
    for &(a, b) in d.arcs() {
        let cap = if a == s && b == t {
            direct += 1;
            1
        } else {
            big
        };
        net.add_arc(2 * a + 1, 2 * b, cap);
    }
    let value = net.max_flow_limited(limit);
    PairFlow { value, direct, net, split_arc_of }
}

fn cut_separator(pf: &PairFlow, n: usize) -> Vec<usize> {
    let side = pf.net.source_side();
    (0..n)
        .filter(|&w| match pf.split_arc_of[w] {
            Some(_) => side[2 * w] && !side[2 * w + 1],
            None => false,
        })
        .collect()
}

/// Whether the ordered pair `s -> t` can be disconnected by deleting fewer
/// than `k` vertices; on failure returns a minimum separator.
fn direction_deficit(d: &Multidigraph, s: usize, t: usize, k: usize) -> Option<Vec<usize>> {
    let pf = pair_flow(d, s, t, Some(k as i64));
    if pf.direct == 0 && (pf.value as usize) < k {
        Some(cut_separator(&pf, d.vertex_count()))
    } else {
        None
    }
}

/// First failing direction of the pair, if any. Checks `u -> v` then `v -> u`.
pub(crate) fn pair_deficit(
    d: &Multidigraph,
    u: usize,
    v: usize,
    k: usize,
) -> Option<(usize, usize, Vec<usize>)> {
    if let Some(sep) = direction_deficit(d, u, v, k) {
        return Some((u, v, sep));
    }
    direction_deficit(d, v, u, k).map(|sep| (v, u, sep))
}

fn flow_paths_to_labels(d: &Multidigraph, net: &mut FlowNetwork) -> Vec<Vec<String>> {
    net.decompose_paths()
        .into_iter()
        .map(|nodes| {
            let mut labels: Vec<String> = Vec::new();
            for id in nodes {
                let v = id / 2;
                let l = d.label(v);
                if labels.last().map(String::as_str) != Some(l) {
                    labels.push(l.to_string());
                }
            }
            labels
        })
        .collect()
}

/// Pair vertex connectivity with an explicit witness: either internally
/// disjoint dipath systems of size `value` in both directions, or a minimum
/// separator (smaller than `k`) for the deficient direction.
pub fn vertex_conn_pair(
    d: &Multidigraph,
    u: &str,
    v: &str,
    k: usize,
) -> Result<PairConnectivity, GraphError> {
    let ui = d.require_vertex(u)?;
    let vi = d.require_vertex(v)?;
    if ui == vi {
        return Err(GraphError::SameVertex(u.to_string()));
    }
    let mut fwd = pair_flow(d, ui, vi, None);
    let mut bwd = pair_flow(d, vi, ui, None);
    let value = fwd.value.min(bwd.value) as usize;
    if let Some((s, t, sep)) = pair_deficit(d, ui, vi, k) {
        return Ok(PairConnectivity {
            value,
            witness: PairWitness::Separator(Separator {
                from: d.label(s).to_string(),
                to: d.label(t).to_string(),
                vertices: sep.into_iter().map(|w| d.label(w).to_string()).collect(),
            }),
        });
    }
    Ok(PairConnectivity {
        value,
        witness: PairWitness::Difans {
            forward: flow_paths_to_labels(d, &mut fwd.net),
            backward: flow_paths_to_labels(d, &mut bwd.net),
        },
    })
}

/// `|V| > k` and every pair stays strongly connected under deletion of any
/// fewer than `k` other vertices.
pub fn is_k_connected(d: &Multidigraph, k: usize) -> KConnectivity {
    let n = d.vertex_count();
    if n <= k {
        return KConnectivity {
            holds: false,
            witness: Some(KWitness::TooFewVertices { vertex_count: n }),
        };
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let failure = pairs
        .par_iter()
        .find_map_first(|&(u, v)| pair_deficit(d, u, v, k));
    match failure {
        Some((s, t, sep)) => KConnectivity {
            holds: false,
            witness: Some(KWitness::SeparatedPair(Separator {
                from: d.label(s).to_string(),
                to: d.label(t).to_string(),
                vertices: sep.into_iter().map(|w| d.label(w).to_string()).collect(),
            })),
        },
        None => KConnectivity { holds: true, witness: None },
    }
}

// --- difans ----------------------------------------------------------------

/// The constraint set of the difan definition, chosen by which sides are
/// singletons.
fn difan_constraint_set(n: usize, xs: &[usize], ys: &[usize]) -> Vec<usize> {
    let exclude_x = xs.len() == 1;
    let exclude_y = ys.len() == 1;
    (0..n)
        .filter(|w| !(exclude_x && xs.contains(w)) && !(exclude_y && ys.contains(w)))
        .collect()
}

/// `k` pairwise U-disjoint dipaths from `X` to `Y`, or `None` if none exist.
pub fn difan(
    d: &Multidigraph,
    xs: &[&str],
    ys: &[&str],
    k: usize,
) -> Result<Option<Difan>, ConnectivityError> {
    let xi: Vec<usize> = xs
        .iter()
        .map(|l| d.require_vertex(l))
        .collect::<Result<_, _>>()?;
    let yi: Vec<usize> = ys
        .iter()
        .map(|l| d.require_vertex(l))
        .collect::<Result<_, _>>()?;
    if xi.is_empty() || yi.is_empty() || xi.iter().any(|x| yi.contains(x)) {
        return Err(ConnectivityError::BadDifanSets);
    }
    let n = d.vertex_count();
    let constraint = difan_constraint_set(n, &xi, &yi);
    let in_u = {
        let mut m = vec![false; n];
        for &w in &constraint {
            m[w] = true;
        }
        m
    };
    let big = (n + d.arc_count() + 1) as i64;
    // node 2w = in(w), 2w+1 = out(w); super source/sink appended
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = FlowNetwork::new(2 * n + 2, source, sink);
    for w in 0..n {
        net.add_arc(2 * w, 2 * w + 1, if in_u[w] { 1 } else { big });
    }
    for &(a, b) in d.arcs() {
        net.add_arc(2 * a + 1, 2 * b, 1);
    }
    for &x in &xi {
        net.add_arc(source, 2 * x, big);
    }
    for &y in &yi {
        net.add_arc(2 * y + 1, sink, big);
    }
    let flow = net.max_flow_limited(Some(k as i64));
    if (flow as usize) < k {
        return Ok(None);
    }
    let paths = net
        .decompose_paths()
        .into_iter()
        .map(|nodes| {
            let mut labels: Vec<String> = Vec::new();
            for id in nodes {
                if id >= 2 * n {
                    continue;
                }
                let l = d.label(id / 2);
                if labels.last().map(String::as_str) != Some(l) {
                    labels.push(l.to_string());
                }
            }
            labels
        })
        .collect();
    Ok(Some(Difan {
        paths,
        constraint_set: constraint.iter().map(|&w| d.label(w).to_string()).collect(),
    }))
}

// --- mixed cuts ------------------------------------------------------------

struct MixedFlow {
    value: i64,
    net: FlowNetwork,
    split_arc_of: Vec<Option<usize>>,
    edge_arcs: Vec<(usize, usize)>, // edge id -> the two ArcIds
}

fn mixed_flow(g: &Multigraph, s: usize, t: usize, limit: Option<i64>) -> MixedFlow {
    let n = g.vertex_count();
    let mut net = FlowNetwork::new(2 * n, 2 * s + 1, 2 * t);
    let mut split_arc_of = vec![None; n];
    for w in 0..n {
        if w != s && w != t {
            split_arc_of[w] = Some(net.add_arc(2 * w, 2 * w + 1, 2));
        }
    }
    let mut edge_arcs = Vec::with_capacity(g.edge_count());
    for &(p, q) in g.edges() {
        let a = net.add_arc(2 * p + 1, 2 * q, 1);
        let b = net.add_arc(2 * q + 1, 2 * p, 1);
        edge_arcs.push((a, b));
    }
    let value = net.max_flow_limited(limit);
    MixedFlow { value, net, split_arc_of, edge_arcs }
}

fn extract_mixed_cut(g: &Multigraph, mf: &MixedFlow) -> MixedCut {
    let side = mf.net.source_side();
    let n = g.vertex_count();
    let vertices: Vec<usize> = (0..n)
        .filter(|&w| mf.split_arc_of[w].is_some() && side[2 * w] && !side[2 * w + 1])
        .collect();
    let cut_arcs = mf.net.min_cut_arcs();
    let edges: Vec<usize> = mf
        .edge_arcs
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| cut_arcs.contains(&a) || cut_arcs.contains(&b))
        .map(|(e, _)| e)
        .collect();
    let value = 2 * vertices.len() + edges.len();
    debug_assert_eq!(value as i64, mf.value, "cut value must equal max flow");
    MixedCut {
        vertices: vertices.into_iter().map(|w| g.label(w).to_string()).collect(),
        edges,
        value,
    }
}

/// Minimum mixed cut `(U, F)` whose removal disconnects `u` from `v`;
/// its value `2|U| + |F|` equals the max-flow value of the transform.
pub fn min_mixed_cut(g: &Multigraph, u: &str, v: &str) -> Result<MixedCut, GraphError> {
    let ui = g.require_vertex(u)?;
    let vi = g.require_vertex(v)?;
    if ui == vi {
        return Err(GraphError::SameVertex(u.to_string()));
    }
    let mf = mixed_flow(g, ui, vi, None);
    Ok(extract_mixed_cut(g, &mf))
}

/// `|V| > k` and no pair admits a mixed cut of value below `2k`.
pub fn is_weakly_2k_connected(g: &Multigraph, k: usize) -> WeakConnectivity {
    let n = g.vertex_count();
    if n <= k {
        return WeakConnectivity {
            holds: false,
            witness: Some(WeakWitness::TooFewVertices { vertex_count: n }),
        };
    }
    let bound = 2 * k as i64;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let failure = pairs.par_iter().find_map_first(|&(u, v)| {
        let mf = mixed_flow(g, u, v, Some(bound));
        if mf.value < bound {
            Some((u, v, extract_mixed_cut(g, &mf)))
        } else {
            None
        }
    });
    match failure {
        Some((u, v, cut)) => WeakConnectivity {
            holds: false,
            witness: Some(WeakWitness::Cut {
                from: g.label(u).to_string(),
                to: g.label(v).to_string(),
                cut,
            }),
        },
        None => WeakConnectivity { holds: true, witness: None },
    }
}

// --- traversal checks ------------------------------------------------------

fn reachable_from(adj: &[Vec<usize>], root: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

pub fn is_strongly_connected(d: &Multidigraph) -> bool {
    let n = d.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for &(t, h) in d.arcs() {
        fwd[t].push(h);
        bwd[h].push(t);
    }
    reachable_from(&fwd, 0).iter().all(|&r| r) && reachable_from(&bwd, 0).iter().all(|&r| r)
}

/// Strong connectivity of the pair in `D - removed` (both directions).
fn pair_strongly_connected_without(
    arcs: &[(usize, usize)],
    n: usize,
    u: usize,
    v: usize,
    removed: &[bool],
) -> bool {
    let mut fwd = vec![Vec::new(); n];
    for &(t, h) in arcs {
        if !removed[t] && !removed[h] {
            fwd[t].push(h);
        }
    }
    let from_u = reachable_from(&fwd, u);
    if !from_u[v] {
        return false;
    }
    let from_v = reachable_from(&fwd, v);
    from_v[u]
}

/// Checks that removing `separator` actually disconnects the pair in some
/// direction; used to validate returned witnesses.
pub fn separator_disconnects(
    d: &Multidigraph,
    u: &str,
    v: &str,
    separator: &[String],
) -> Result<bool, GraphError> {
    let ui = d.require_vertex(u)?;
    let vi = d.require_vertex(v)?;
    let mut removed = vec![false; d.vertex_count()];
    for s in separator {
        removed[d.require_vertex(s)?] = true;
    }
    if removed[ui] || removed[vi] {
        return Ok(false);
    }
    Ok(!pair_strongly_connected_without(
        d.arcs(),
        d.vertex_count(),
        ui,
        vi,
        &removed,
    ))
}

/// Checks that removing the mixed cut disconnects the pair.
pub fn mixed_cut_disconnects(
    g: &Multigraph,
    u: &str,
    v: &str,
    cut: &MixedCut,
) -> Result<bool, GraphError> {
    let ui = g.require_vertex(u)?;
    let vi = g.require_vertex(v)?;
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for s in &cut.vertices {
        removed[g.require_vertex(s)?] = true;
    }
    if removed[ui] || removed[vi] {
        return Ok(false);
    }
    let mut adj = vec![Vec::new(); n];
    for (eid, &(p, q)) in g.edges().iter().enumerate() {
        if cut.edges.contains(&eid) || removed[p] || removed[q] {
            continue;
        }
        adj[p].push(q);
        adj[q].push(p);
    }
    Ok(!reachable_from(&adj, ui)[vi])
}

// --- exhaustive oracles ----------------------------------------------------

fn combinations(items: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(start: usize, items: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items {
            if items - i < size - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, items, size, current, out);
            current.pop();
        }
    }
    rec(0, items, size, &mut current, &mut out);
    out
}

/// Exhaustive search for a mixed cut of value below `bound`. Intended for
/// small graphs only; this is the independent oracle for `min_mixed_cut`.
pub fn brute_force_mixed_cut(
    g: &Multigraph,
    u: &str,
    v: &str,
    bound: usize,
) -> Result<Option<MixedCut>, GraphError> {
    let ui = g.require_vertex(u)?;
    let vi = g.require_vertex(v)?;
    if ui == vi {
        return Err(GraphError::SameVertex(u.to_string()));
    }
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&w| w != ui && w != vi).collect();
    let m = g.edge_count();
    for value in 0..bound {
        for u_cnt in 0..=(value / 2) {
            if u_cnt > others.len() {
                break;
            }
            let f_cnt = value - 2 * u_cnt;
            if f_cnt > m {
                continue;
            }
            for u_combo in combinations(others.len(), u_cnt) {
                let mut removed = vec![false; n];
                for &i in &u_combo {
                    removed[others[i]] = true;
                }
                for f_combo in combinations(m, f_cnt) {
                    let mut adj = vec![Vec::new(); n];
                    for (eid, &(p, q)) in g.edges().iter().enumerate() {
                        if f_combo.contains(&eid) || removed[p] || removed[q] {
                            continue;
                        }
                        adj[p].push(q);
                        adj[q].push(p);
                    }
                    if !reachable_from(&adj, ui)[vi] {
                        return Ok(Some(MixedCut {
                            vertices: u_combo
                                .iter()
                                .map(|&i| g.label(others[i]).to_string())
                                .collect(),
                            edges: f_combo,
                            value,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Exhaustive search for a separator of size below `bound` breaking the pair.
pub fn brute_force_separator(
    d: &Multidigraph,
    u: &str,
    v: &str,
    bound: usize,
) -> Result<Option<Vec<String>>, GraphError> {
    let ui = d.require_vertex(u)?;
    let vi = d.require_vertex(v)?;
    if ui == vi {
        return Err(GraphError::SameVertex(u.to_string()));
    }
    let n = d.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&w| w != ui && w != vi).collect();
    for size in 0..bound {
        if size > others.len() {
            break;
        }
        for combo in combinations(others.len(), size) {
            let mut removed = vec![false; n];
            for &i in &combo {
                removed[others[i]] = true;
            }
            if !pair_strongly_connected_without(d.arcs(), n, ui, vi, &removed) {
                return Ok(Some(
                    combo.iter().map(|&i| d.label(others[i]).to_string()).collect(),
                ));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn complete_digraph(n: usize) -> Multidigraph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut d = Multidigraph::new(labels).unwrap();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    d.add_arc_ix(u, v).unwrap();
                }
            }
        }
        d
    }

    fn directed_cycle(n: usize) -> Multidigraph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut d = Multidigraph::new(labels).unwrap();
        for u in 0..n {
            d.add_arc_ix(u, (u + 1) % n).unwrap();
        }
        d
    }

    #[test]
    fn complete_digraph_pair_value() {
        let d = complete_digraph(4);
        let pc = vertex_conn_pair(&d, "v0", "v1", 3).unwrap();
        assert_eq!(pc.value, 3);
        assert!(matches!(pc.witness, PairWitness::Difans { .. }));
    }

    #[test]
    fn directed_cycle_pair_value() {
        let d = directed_cycle(5);
        let pc = vertex_conn_pair(&d, "v0", "v2", 2).unwrap();
        assert_eq!(pc.value, 1);
        match pc.witness {
            PairWitness::Separator(s) => {
                assert_eq!(s.vertices.len(), 1);
                assert!(separator_disconnects(&d, "v0", "v2", &s.vertices).unwrap());
            }
            other => panic!("expected separator, got {other:?}"),
        }
    }

    #[test]
    fn k_connected_basics() {
        assert!(is_k_connected(&complete_digraph(4), 3).holds);
        let r = is_k_connected(&directed_cycle(6), 2);
        assert!(!r.holds);
        match r.witness.unwrap() {
            KWitness::SeparatedPair(s) => {
                assert_eq!(s.vertices.len(), 1);
                assert!(separator_disconnects(
                    &directed_cycle(6),
                    &s.from,
                    &s.to,
                    &s.vertices
                )
                .unwrap());
            }
            w => panic!("unexpected witness {w:?}"),
        }
        let small = is_k_connected(&complete_digraph(3), 3);
        assert!(!small.holds);
        assert!(matches!(
            small.witness,
            Some(KWitness::TooFewVertices { vertex_count: 3 })
        ));
    }

    #[test]
    fn difan_two_paths() {
        // x -> a -> y and x -> b -> y
        let mut d = Multidigraph::new(["x", "a", "b", "y"]).unwrap();
        d.add_arc("x", "a").unwrap();
        d.add_arc("a", "y").unwrap();
        d.add_arc("x", "b").unwrap();
        d.add_arc("b", "y").unwrap();
        let fan = difan(&d, &["x"], &["y"], 2).unwrap();
        assert!(fan.is_some());
        assert_eq!(fan.unwrap().paths.len(), 2);
        assert!(difan(&d, &["x"], &["y"], 3).unwrap().is_none());
        assert!(difan(&d, &["x"], &["x"], 1).is_err());
    }

    #[test]
    fn mixed_cut_path() {
        let mut g = Multigraph::new(["u", "v", "w"]).unwrap();
        g.add_edge("u", "v").unwrap();
        g.add_edge("v", "w").unwrap();
        let cut = min_mixed_cut(&g, "u", "w").unwrap();
        assert_eq!(cut.value, 1);
        assert!(mixed_cut_disconnects(&g, "u", "w", &cut).unwrap());
        let oracle = brute_force_mixed_cut(&g, "u", "w", 2).unwrap().unwrap();
        assert_eq!(oracle.value, 1);
    }

    #[test]
    fn mixed_cut_k5() {
        let labels: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let mut g = Multigraph::new(labels).unwrap();
        for u in 0..5 {
            for v in (u + 1)..5 {
                g.add_edge_ix(u, v).unwrap();
            }
        }
        // cheapest mixed cut isolates one endpoint: F = its 4 incident edges
        let cut = min_mixed_cut(&g, "v0", "v1").unwrap();
        assert_eq!(cut.value, 4);
        assert!(mixed_cut_disconnects(&g, "v0", "v1", &cut).unwrap());
        let oracle = brute_force_mixed_cut(&g, "v0", "v1", 5).unwrap().unwrap();
        assert_eq!(oracle.value, 4);
        assert!(brute_force_mixed_cut(&g, "v0", "v1", 4).unwrap().is_none());
        // K5 is not weakly 8-connected, C4 is weakly 2-connected.
        assert!(!is_weakly_2k_connected(&g, 4).holds);
        let mut c4 = Multigraph::new(["a", "b", "c", "d"]).unwrap();
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")] {
            c4.add_edge(u, v).unwrap();
        }
        assert!(is_weakly_2k_connected(&c4, 1).holds);
    }

    #[test]
    fn mixed_cut_symmetry() {
        let mut g = Multigraph::new(["a", "b", "c", "d"]).unwrap();
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")] {
            g.add_edge(u, v).unwrap();
        }
        for u in ["a", "b", "c"] {
            for v in ["b", "c", "d"] {
                if u == v {
                    continue;
                }
                assert_eq!(
                    min_mixed_cut(&g, u, v).unwrap().value,
                    min_mixed_cut(&g, v, u).unwrap().value
                );
            }
        }
    }

    #[test]
    fn strong_connectivity() {
        assert!(is_strongly_connected(&directed_cycle(4)));
        let mut d = Multidigraph::new(["a", "b"]).unwrap();
        d.add_arc("a", "b").unwrap();
        assert!(!is_strongly_connected(&d));
    }

    #[test]
    fn brute_force_separator_k4() {
        let d = complete_digraph(4);
        assert!(brute_force_separator(&d, "v0", "v1", 3).unwrap().is_none());
        let c = directed_cycle(5);
        let sep = brute_force_separator(&c, "v0", "v2", 2).unwrap();
        assert_eq!(sep.unwrap().len(), 1);
    }

    #[test]
    fn antiparallel_pair_counts_both_directions() {
        let mut d = Multidigraph::new(["a", "b", "c"]).unwrap();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "a").unwrap();
        d.add_arc("b", "c").unwrap();
        d.add_arc("c", "b").unwrap();
        let pc = vertex_conn_pair(&d, "a", "b", 1).unwrap();
        assert_eq!(pc.value, 1);
        assert!(matches!(pc.witness, PairWitness::Difans { .. }));
    }
}
