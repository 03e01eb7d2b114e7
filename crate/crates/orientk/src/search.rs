//! Exact search for k-connected orientations: forcing propagation, complete
//! branch-and-bound over undecided edges, and sound separator refutation.
//!
//! The forcing rules come from the degree argument: in a k-connected
//! orientation every vertex has indegree and outdegree at least k, so a
//! vertex of degree exactly 2k is balanced and its parallel pairs must be
//! antiparallel. Three or more parallel edges at such a vertex are already
//! contradictory.

use thiserror::Error;

use crate::connectivity::is_k_connected;
use crate::graph::{EdgeState, GraphError, Multidigraph, Multigraph, PartialOrientation};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("forcing contradiction: {reason}")]
pub struct Contradiction {
    pub reason: String,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("separator of size {size} is not smaller than k = {k}")]
    SeparatorTooLarge { size: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Fixpoint of the forcing rules: a partial orientation plus the set of
/// parallel pairs known to be antiparallel but not yet individually decided.
#[derive(Debug, Clone)]
pub struct ForcedState {
    pub orientation: PartialOrientation,
    /// `pair_partner[e] = Some(f)` when edges `e` and `f` are a parallel pair
    /// forced into opposite directions.
    pub pair_partner: Vec<Option<usize>>,
}

/// Parallel-pair constraints implied by degree-2k vertices. Fails when a
/// degree-2k vertex carries three or more edges to one neighbor: any
/// orientation then repeats a direction and the in- or out-neighborhood is
/// too small.
fn pair_constraints(g: &Multigraph, k: usize) -> Result<Vec<Option<usize>>, Contradiction> {
    let n = g.vertex_count();
    let mut degree = vec![0usize; n];
    for &(u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut partner: Vec<Option<usize>> = vec![None; g.edge_count()];
    for v in 0..n {
        if degree[v] != 2 * k {
            continue;
        }
        let mut by_neighbor: Vec<(usize, Vec<usize>)> = Vec::new();
        for (eid, &(a, b)) in g.edges().iter().enumerate() {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            match by_neighbor.iter_mut().find(|(w, _)| *w == other) {
                Some((_, ids)) => ids.push(eid),
                None => by_neighbor.push((other, vec![eid])),
            }
        }
        for (w, ids) in by_neighbor {
            if ids.len() >= 3 {
                return Err(Contradiction {
                    reason: format!(
                        "vertex {} has degree 2k and {} parallel edges to {}",
                        g.label(v),
                        ids.len(),
                        g.label(w)
                    ),
                });
            }
            if ids.len() == 2 {
                partner[ids[0]] = Some(ids[1]);
                partner[ids[1]] = Some(ids[0]);
            }
        }
    }
    Ok(partner)
}

fn arc_of(g: &Multigraph, eid: usize, state: EdgeState) -> (usize, usize) {
    let (u, v) = g.endpoints(eid);
    match state {
        EdgeState::Forward => (u, v),
        EdgeState::Reversed => (v, u),
        EdgeState::Undecided => unreachable!("arc_of on undecided edge"),
    }
}

/// Fixpoint of the forcing rules from a consistent partial orientation.
///
/// Rules: parallel pairs at degree-2k vertices are antiparallel (deciding one
/// member decides the other); a degree-2k vertex with k in-ends accounted for
/// points its remaining free edges outward (and symmetrically); any vertex
/// that can no longer reach k in-ends or k out-ends is a contradiction.
pub fn propagate_forcing(
    g: &Multigraph,
    k: usize,
    start: &PartialOrientation,
) -> Result<ForcedState, Contradiction> {
    if start.len() != g.edge_count() {
        return Err(Contradiction {
            reason: format!(
                "orientation has {} entries for {} edges",
                start.len(),
                g.edge_count()
            ),
        });
    }
    let partner = pair_constraints(g, k)?;
    let mut o = start.clone();
    let n = g.vertex_count();
    let mut degree = vec![0usize; n];
    let adj = g.adjacency();
    for &(u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    loop {
        let mut changed = false;
        // sync antiparallel pairs
        for e in 0..g.edge_count() {
            let Some(f) = partner[e] else { continue };
            if o.get(e) == EdgeState::Undecided {
                continue;
            }
            let arc_e = arc_of(g, e, o.get(e));
            let want = if g.endpoints(f) == g.endpoints(e) {
                // same stored order: partner takes the opposite state
                match o.get(e) {
                    EdgeState::Forward => EdgeState::Reversed,
                    EdgeState::Reversed => EdgeState::Forward,
                    EdgeState::Undecided => unreachable!(),
                }
            } else {
                o.get(e)
            };
            match o.get(f) {
                EdgeState::Undecided => {
                    o.set(f, want);
                    changed = true;
                }
                s if s == want => {}
                _ => {
                    return Err(Contradiction {
                        reason: format!(
                            "parallel pair ({e}, {f}) between {} and {} oriented in the same direction",
                            g.label(arc_e.0),
                            g.label(arc_e.1)
                        ),
                    })
                }
            }
        }
        // per-vertex balance and feasibility
        for v in 0..n {
            let mut decided_in = 0usize;
            let mut decided_out = 0usize;
            let mut undec_pair_edges = 0usize;
            let mut free: Vec<usize> = Vec::new();
            for &(_, eid) in &adj[v] {
                match o.get(eid) {
                    EdgeState::Undecided => {
                        if partner[eid].is_some() {
                            undec_pair_edges += 1;
                        } else {
                            free.push(eid);
                        }
                    }
                    state => {
                        let (_, head) = arc_of(g, eid, state);
                        if head == v {
                            decided_in += 1;
                        } else {
                            decided_out += 1;
                        }
                    }
                }
            }
            // after sync, undecided pair edges come in whole pairs
            let undec_pairs = undec_pair_edges / 2;
            let in_min = decided_in + undec_pairs;
            let out_min = decided_out + undec_pairs;
            // the free edges must cover both in- and out-shortfalls
            let shortfall =
                k.saturating_sub(in_min) + k.saturating_sub(out_min);
            if shortfall > free.len() {
                return Err(Contradiction {
                    reason: format!(
                        "vertex {} cannot reach indegree and outdegree k = {k}",
                        g.label(v)
                    ),
                });
            }
            if degree[v] == 2 * k && !free.is_empty() {
                if in_min == k {
                    for eid in &free {
                        let (u, _) = g.endpoints(*eid);
                        o.set(*eid, if u == v { EdgeState::Forward } else { EdgeState::Reversed });
                        changed = true;
                    }
                } else if out_min == k {
                    for eid in &free {
                        let (u, _) = g.endpoints(*eid);
                        o.set(*eid, if u == v { EdgeState::Reversed } else { EdgeState::Forward });
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(ForcedState { orientation: o, pair_partner: partner })
}

/// Digraph over-approximating every completion of `p`: decided edges become
/// their arcs, undecided edges become antiparallel arc pairs.
pub fn optimistic_digraph(g: &Multigraph, p: &PartialOrientation) -> Multidigraph {
    let mut d = Multidigraph::new(g.labels().iter().cloned()).expect("labels already unique");
    for (eid, &(u, v)) in g.edges().iter().enumerate() {
        match p.get(eid) {
            EdgeState::Forward => {
                d.add_arc_ix(u, v).unwrap();
            }
            EdgeState::Reversed => {
                d.add_arc_ix(v, u).unwrap();
            }
            EdgeState::Undecided => {
                d.add_arc_ix(u, v).unwrap();
                d.add_arc_ix(v, u).unwrap();
            }
        }
    }
    d
}

/// Sound refutation: with `|S| < k`, if some ordered pair of `V - S` is
/// unreachable even when every undecided edge is treated as bidirectional,
/// then no completion of `p` is k-connected.
pub fn refute_with_separator(
    g: &Multigraph,
    k: usize,
    p: &PartialOrientation,
    separator: &[String],
) -> Result<bool, SearchError> {
    if separator.len() >= k {
        return Err(SearchError::SeparatorTooLarge { size: separator.len(), k });
    }
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for s in separator {
        removed[g.require_vertex(s)?] = true;
    }
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    let add = |t: usize, h: usize, fwd: &mut Vec<Vec<usize>>, bwd: &mut Vec<Vec<usize>>| {
        if !removed[t] && !removed[h] {
            fwd[t].push(h);
            bwd[h].push(t);
        }
    };
    for (eid, &(u, v)) in g.edges().iter().enumerate() {
        match p.get(eid) {
            EdgeState::Forward => add(u, v, &mut fwd, &mut bwd),
            EdgeState::Reversed => add(v, u, &mut fwd, &mut bwd),
            EdgeState::Undecided => {
                add(u, v, &mut fwd, &mut bwd);
                add(v, u, &mut fwd, &mut bwd);
            }
        }
    }
    let Some(root) = (0..n).find(|&v| !removed[v]) else {
        return Ok(false);
    };
    let full_reach = |adj: &Vec<Vec<usize>>| {
        let mut seen = vec![false; n];
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
        (0..n).all(|v| removed[v] || seen[v])
    };
    Ok(!(full_reach(&fwd) && full_reach(&bwd)))
}

#[derive(Debug, Clone)]
pub struct BranchRefutation {
    pub orientation: PartialOrientation,
    pub separator: Vec<String>,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(PartialOrientation),
    RefutedExhaustive,
    RefutedBySeparator(Vec<BranchRefutation>),
    Unknown { nodes_explored: u64 },
}

/// Most constrained branching edge: an undecided edge at the vertex with the
/// fewest undecided ends; ties resolved toward the lowest edge id.
pub(crate) fn branch_edge(g: &Multigraph, p: &PartialOrientation) -> Option<usize> {
    let n = g.vertex_count();
    let mut undecided = vec![0usize; n];
    for (eid, &(u, v)) in g.edges().iter().enumerate() {
        if p.get(eid) == EdgeState::Undecided {
            undecided[u] += 1;
            undecided[v] += 1;
        }
    }
    let min = (0..n).filter(|&v| undecided[v] > 0).map(|v| undecided[v]).min()?;
    g.edges()
        .iter()
        .enumerate()
        .filter(|(eid, &(u, v))| {
            p.get(*eid) == EdgeState::Undecided
                && (undecided[u] == min || undecided[v] == min)
        })
        .map(|(eid, _)| eid)
        .next()
}

struct SearchCtx<'a> {
    g: &'a Multigraph,
    k: usize,
    budget: u64,
    nodes: u64,
}

enum DfsResult {
    Found(PartialOrientation),
    Exhausted,
    OutOfBudget,
}

fn dfs(ctx: &mut SearchCtx<'_>, p: &PartialOrientation) -> DfsResult {
    if ctx.nodes >= ctx.budget {
        return DfsResult::OutOfBudget;
    }
    ctx.nodes += 1;
    let forced = match propagate_forcing(ctx.g, ctx.k, p) {
        Ok(f) => f,
        Err(_) => return DfsResult::Exhausted,
    };
    let opt = optimistic_digraph(ctx.g, &forced.orientation);
    if !is_k_connected(&opt, ctx.k).holds {
        return DfsResult::Exhausted;
    }
    if forced.orientation.is_total() {
        // the optimistic digraph is the orientation itself here
        return DfsResult::Found(forced.orientation);
    }
    let eid = branch_edge(ctx.g, &forced.orientation).expect("undecided edge must exist");
    for state in [EdgeState::Forward, EdgeState::Reversed] {
        let mut next = forced.orientation.clone();
        next.set(eid, state);
        match dfs(ctx, &next) {
            DfsResult::Found(o) => return DfsResult::Found(o),
            DfsResult::Exhausted => {}
            DfsResult::OutOfBudget => return DfsResult::OutOfBudget,
        }
    }
    DfsResult::Exhausted
}

/// Complete search for a k-connected orientation, within a node budget.
///
/// Necessary conditions (`|V| > k`, minimum degree 2k, weak 2k-connectivity)
/// are checked up front and refute immediately when violated.
pub fn search(g: &Multigraph, k: usize, budget: u64) -> SearchOutcome {
    let n = g.vertex_count();
    if n <= k {
        return SearchOutcome::RefutedExhaustive;
    }
    if (0..n).any(|v| g.degree_ix(v) < 2 * k) {
        return SearchOutcome::RefutedExhaustive;
    }
    if !crate::connectivity::is_weakly_2k_connected(g, k).holds {
        return SearchOutcome::RefutedExhaustive;
    }
    let mut ctx = SearchCtx { g, k, budget, nodes: 0 };
    let start = PartialOrientation::undecided(g.edge_count());
    match dfs(&mut ctx, &start) {
        DfsResult::Found(o) => {
            debug_assert!(is_k_connected(&g.orient(&o).unwrap(), k).holds);
            SearchOutcome::Found(o)
        }
        DfsResult::Exhausted => SearchOutcome::RefutedExhaustive,
        DfsResult::OutOfBudget => SearchOutcome::Unknown { nodes_explored: ctx.nodes },
    }
}

/// Per-assignment equivalence between NAE satisfaction and k-connectivity of
/// the natural reorientation of the reduction output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub holds: bool,
    pub assignments: usize,
    pub nae_satisfying: usize,
    pub k_connected: usize,
}

pub fn check_reduction_equivalence(
    pi: &crate::reduction::NaeInstance,
    k: usize,
) -> Result<EquivalenceReport, crate::reduction::ReductionError> {
    use rayon::prelude::*;
    let (d, map) = crate::reduction::encode(pi, k)?;
    let nvars = pi.variables().len();
    let results: Vec<(bool, bool)> = (0u32..(1u32 << nvars))
        .into_par_iter()
        .map(|bits| {
            let assignment: Vec<bool> = (0..nvars).map(|i| bits & (1 << i) != 0).collect();
            let nae = pi.nae_satisfied(&assignment);
            let d2 = crate::reduction::natural_reorientation(&d, &map, &assignment)
                .expect("total assignment");
            let conn = is_k_connected(&d2, k).holds;
            (nae, conn)
        })
        .collect();
    Ok(EquivalenceReport {
        holds: results.iter().all(|(nae, conn)| nae == conn),
        assignments: results.len(),
        nae_satisfying: results.iter().filter(|(nae, _)| *nae).count(),
        k_connected: results.iter().filter(|(_, conn)| *conn).count(),
    })
}
