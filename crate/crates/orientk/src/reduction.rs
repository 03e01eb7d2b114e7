//! NAE-3-SAT to digraph compiler: clause and literal gadgets assembled around
//! shared hub sets L and M, variable circuits whose direction encodes truth
//! values, Eulerization, and the assignment ↔ reorientation dictionary.
//!
//! The output digraph has a k-connected consistent reorientation exactly when
//! the input instance is NAE-satisfiable; the toolkit checks this equivalence
//! exhaustively on small instances (see `search::check_reduction_equivalence`).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeState, GraphError, Multidigraph, Multigraph, PartialOrientation};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("k must be at least 3, got {0}")]
    KTooSmall(usize),
    #[error("clause {index} has {len} literals, expected 2 or 3")]
    BadClause { index: usize, len: usize },
    #[error("instance has no clauses")]
    NoClauses,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("assignment covers {got} variables, instance has {want}")]
    AssignmentLength { got: usize, want: usize },
    #[error("inconsistent reorientation: {0}")]
    Inconsistent(String),
    #[error("digraph is not a reorientation of the encoded instance")]
    NotReorientation,
    #[error("input is already Eulerized")]
    AlreadyEulerized,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One literal: a variable index plus polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

/// A NAE-3-SAT instance: ordered variables and clauses of 2 or 3 literals.
/// Repeated variables within a clause are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeInstance {
    variables: Vec<String>,
    clauses: Vec<Vec<Literal>>,
}

impl NaeInstance {
    pub fn new(variables: Vec<String>, clauses: Vec<Vec<Literal>>) -> Result<Self, ReductionError> {
        if clauses.is_empty() {
            return Err(ReductionError::NoClauses);
        }
        for (index, c) in clauses.iter().enumerate() {
            if c.len() < 2 || c.len() > 3 {
                return Err(ReductionError::BadClause { index, len: c.len() });
            }
        }
        Ok(Self { variables, clauses })
    }

    /// Build from (name, negated) literal lists; variables are ordered by
    /// first occurrence.
    pub fn from_clauses(clauses: &[&[(&str, bool)]]) -> Result<Self, ReductionError> {
        let mut variables: Vec<String> = Vec::new();
        let mut out = Vec::new();
        for c in clauses {
            let mut lits = Vec::new();
            for (name, negated) in c.iter() {
                let var = match variables.iter().position(|v| v == name) {
                    Some(i) => i,
                    None => {
                        variables.push(name.to_string());
                        variables.len() - 1
                    }
                };
                lits.push(Literal { var, negated: *negated });
            }
            out.push(lits);
        }
        Self::new(variables, out)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// True when every clause has at least one true and at least one false
    /// literal under the assignment.
    pub fn nae_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let vals: Vec<bool> =
                c.iter().map(|l| assignment[l.var] ^ l.negated).collect();
            vals.iter().any(|&b| b) && vals.iter().any(|&b| !b)
        })
    }
}

/// Parse the NAE text format: a `p nae` header, then `clause` lines whose
/// literals are variable names, `!`-prefixed when negated.
///
/// ```text
/// p nae
/// clause x y !z
/// clause x !y z
/// ```
pub fn parse_nae(text: &str) -> Result<NaeInstance, ReductionError> {
    let mut seen_header = false;
    let mut variables: Vec<String> = Vec::new();
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| ReductionError::Parse { line: lineno + 1, msg };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next() {
            Some("p") => {
                if it.next() != Some("nae") {
                    return Err(err("expected `p nae`".into()));
                }
                seen_header = true;
            }
            Some("clause") => {
                if !seen_header {
                    return Err(err("clause before `p nae` header".into()));
                }
                let mut lits = Vec::new();
                for tok in it {
                    let (negated, name) = match tok.strip_prefix('!') {
                        Some(rest) => (true, rest),
                        None => (false, tok),
                    };
                    if name.is_empty() {
                        return Err(err("empty variable name".into()));
                    }
                    let var = match variables.iter().position(|v| v == name) {
                        Some(i) => i,
                        None => {
                            variables.push(name.to_string());
                            variables.len() - 1
                        }
                    };
                    lits.push(Literal { var, negated });
                }
                if lits.len() < 2 || lits.len() > 3 {
                    return Err(err(format!(
                        "clause has {} literals, expected 2 or 3",
                        lits.len()
                    )));
                }
                clauses.push(lits);
            }
            Some(other) => return Err(err(format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }
    NaeInstance::new(variables, clauses)
}

/// Exhaustive satisfiability check; returns a model when one exists.
pub fn nae_bruteforce(pi: &NaeInstance) -> (bool, Option<Vec<bool>>) {
    let n = pi.variables.len();
    for bits in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| bits & (1 << i) != 0).collect();
        if pi.nae_satisfied(&assignment) {
            return (true, Some(assignment));
        }
    }
    (false, None)
}

/// Per-slot gadget vertices and arcs for one clause literal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotInfo {
    pub var: usize,
    pub negated: bool,
    pub u: String,
    pub t: String,
    pub u_prime: String,
    pub u_dprime: String,
    pub u_tprime: String,
    pub v: String,
    /// special arc between the clause hub and `u`; tail = hub when the
    /// literal is positive
    pub e_arc: usize,
    /// the t–u' arc on the variable circuit; tail = t when positive
    pub f_arc: usize,
}

/// Full role and arc map of an encoded instance; serialized as JSON next to
/// the graph so decoding works across process boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub k: usize,
    pub variables: Vec<String>,
    pub l_set: Vec<String>,
    pub m_set: Vec<String>,
    /// distinguished members (first of each set by construction)
    pub l: String,
    pub m: String,
    /// clause hubs w^C, one per clause
    pub w: Vec<String>,
    /// variable circuit anchors v_x, one per variable
    pub v_vars: Vec<String>,
    pub n_set: Vec<String>,
    pub slots: Vec<Vec<SlotInfo>>,
    /// antiparallel gadget pairs as arc-id pairs
    pub pairs: Vec<[usize; 2]>,
    /// per variable: all arcs of the circuit Δ_x in cycle order (f arcs
    /// included)
    pub delta: Vec<Vec<usize>>,
    /// per variable: its special arcs e^C_x across clauses
    pub special: Vec<Vec<usize>>,
    /// Eulerization arcs F (empty until `eulerize`)
    pub eulerize: Vec<usize>,
}

/// Compile an instance into the digraph D_k(Π) and its gadget map.
pub fn encode(pi: &NaeInstance, k: usize) -> Result<(Multidigraph, GadgetMap), ReductionError> {
    if k < 3 {
        return Err(ReductionError::KTooSmall(k));
    }
    let l_set: Vec<String> = (1..k).map(|i| format!("l{i}")).collect();
    let m_set: Vec<String> = (1..k - 1).map(|i| format!("m{i}")).collect();
    let w: Vec<String> = (1..=pi.clauses.len()).map(|i| format!("w{i}")).collect();
    let v_vars: Vec<String> = pi.variables.iter().map(|x| format!("v_{x}")).collect();
    let mut slots: Vec<Vec<SlotInfo>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    labels.extend(l_set.iter().cloned());
    labels.extend(m_set.iter().cloned());
    for (ci, clause) in pi.clauses.iter().enumerate() {
        labels.push(w[ci].clone());
        let mut row = Vec::new();
        for (si, lit) in clause.iter().enumerate() {
            let tag = format!("{}_{}", ci + 1, si + 1);
            let info = SlotInfo {
                var: lit.var,
                negated: lit.negated,
                u: format!("u{tag}"),
                t: format!("t{tag}"),
                u_prime: format!("u'{tag}"),
                u_dprime: format!("u''{tag}"),
                u_tprime: format!("u'''{tag}"),
                v: format!("v{tag}"),
                e_arc: usize::MAX,
                f_arc: usize::MAX,
            };
            labels.extend([
                info.u.clone(),
                info.t.clone(),
                info.u_prime.clone(),
                info.u_dprime.clone(),
                info.u_tprime.clone(),
                info.v.clone(),
            ]);
            row.push(info);
        }
        slots.push(row);
    }
    labels.extend(v_vars.iter().cloned());
    let mut d = Multidigraph::new(labels)?;

    let ix = |d: &Multidigraph, s: &str| d.require_vertex(s).expect("constructed label");
    let mut simple: HashSet<(usize, usize)> = HashSet::new();
    let complete = |d: &mut Multidigraph, simple: &mut HashSet<(usize, usize)>, set: &[usize]| {
        for &p in set {
            for &q in set {
                if p != q && simple.insert((p, q)) {
                    d.add_arc_ix(p, q).expect("no self-loops here");
                }
            }
        }
    };

    let l_ix: Vec<usize> = l_set.iter().map(|s| ix(&d, s)).collect();
    let m_ix: Vec<usize> = m_set.iter().map(|s| ix(&d, s)).collect();

    // clause gadgets: complete digraph on L ∪ {w^C}, then the special arcs
    for ci in 0..pi.clauses.len() {
        let wi = ix(&d, &w[ci]);
        let mut set = l_ix.clone();
        set.push(wi);
        complete(&mut d, &mut simple, &set);
    }
    let mut special: Vec<Vec<usize>> = vec![Vec::new(); pi.variables.len()];
    for (ci, row) in slots.iter_mut().enumerate() {
        let wi = ix(&d, &w[ci]);
        for info in row.iter_mut() {
            let ui = ix(&d, &info.u);
            let id = if info.negated {
                d.add_arc_ix(ui, wi)?
            } else {
                d.add_arc_ix(wi, ui)?
            };
            info.e_arc = id;
            special[info.var].push(id);
        }
    }

    // slot gadgets: complete digraph on M ∪ {u, u'', u'''} and the
    // antiparallel pairs
    let mut pairs: Vec<[usize; 2]> = Vec::new();
    for row in slots.iter() {
        for info in row.iter() {
            let (ui, ti) = (ix(&d, &info.u), ix(&d, &info.t));
            let (p1, p2, p3) =
                (ix(&d, &info.u_prime), ix(&d, &info.u_dprime), ix(&d, &info.u_tprime));
            let vi = ix(&d, &info.v);
            let mut set = m_ix.clone();
            set.extend([ui, p2, p3]);
            complete(&mut d, &mut simple, &set);
            let mut pair = |d: &mut Multidigraph, a: usize, b: usize| {
                let i1 = d.add_arc_ix(a, b).expect("distinct");
                let i2 = d.add_arc_ix(b, a).expect("distinct");
                pairs.push([i1, i2]);
            };
            pair(&mut d, vi, ti);
            pair(&mut d, ti, p3);
            pair(&mut d, p3, p1);
            pair(&mut d, p1, p2);
            for &mp in m_ix.iter().skip(1) {
                pair(&mut d, ti, mp);
                pair(&mut d, p1, mp);
            }
        }
    }

    // f arcs and the variable circuits Δ_x
    for row in slots.iter_mut() {
        for info in row.iter_mut() {
            let ti = ix(&d, &info.t);
            let pi1 = ix(&d, &info.u_prime);
            info.f_arc = if info.negated {
                d.add_arc_ix(pi1, ti)?
            } else {
                d.add_arc_ix(ti, pi1)?
            };
        }
    }
    let mut delta: Vec<Vec<usize>> = vec![Vec::new(); pi.variables.len()];
    for (xi, _) in pi.variables.iter().enumerate() {
        let occ: Vec<&SlotInfo> =
            slots.iter().flatten().filter(|s| s.var == xi).collect();
        let vx = ix(&d, &v_vars[xi]);
        let tail_of = |d: &Multidigraph, s: &SlotInfo| {
            if s.negated {
                ix(d, &s.u_prime)
            } else {
                ix(d, &s.t)
            }
        };
        let head_of = |d: &Multidigraph, s: &SlotInfo| {
            if s.negated {
                ix(d, &s.t)
            } else {
                ix(d, &s.u_prime)
            }
        };
        let mut cycle = Vec::new();
        cycle.push(d.add_arc_ix(vx, tail_of(&d, occ[0]))?);
        for (i, s) in occ.iter().enumerate() {
            cycle.push(s.f_arc);
            let head = head_of(&d, s);
            let next = match occ.get(i + 1) {
                Some(nxt) => tail_of(&d, nxt),
                None => vx,
            };
            cycle.push(d.add_arc_ix(head, next)?);
        }
        delta[xi] = cycle;
    }

    // complete digraph on N = L ∪ M ∪ {v_x} ∪ {v^C_x}
    let mut n_ix: Vec<usize> = l_ix.clone();
    n_ix.extend(m_ix.iter().copied());
    let mut n_set: Vec<String> = l_set.clone();
    n_set.extend(m_set.iter().cloned());
    for x in &v_vars {
        n_ix.push(ix(&d, x));
        n_set.push(x.clone());
    }
    for row in slots.iter() {
        for info in row.iter() {
            n_ix.push(ix(&d, &info.v));
            n_set.push(info.v.clone());
        }
    }
    complete(&mut d, &mut simple, &n_ix);

    let map = GadgetMap {
        k,
        variables: pi.variables.clone(),
        l: l_set[0].clone(),
        m: m_set[0].clone(),
        l_set,
        m_set,
        w,
        v_vars,
        n_set,
        slots,
        pairs,
        delta,
        special,
        eulerize: Vec::new(),
    };
    debug_assert_eq!(degree_ledger_violation(&d, &map), None);
    debug_assert_eq!(boundary_violation(&d, &map), None);
    Ok((d, map))
}

/// Add the Eulerization arcs F: per 3-literal clause, u→m for each slot plus
/// m→l and l→w^C; per 2-literal clause, the two u→m arcs. Afterwards every
/// underlying degree is even.
pub fn eulerize(
    d: &Multidigraph,
    map: &GadgetMap,
) -> Result<(Multidigraph, GadgetMap), ReductionError> {
    if !map.eulerize.is_empty() {
        return Err(ReductionError::AlreadyEulerized);
    }
    let mut d2 = d.clone();
    let mut map2 = map.clone();
    let m = d.require_vertex(&map.m)?;
    let l = d.require_vertex(&map.l)?;
    for (ci, row) in map.slots.iter().enumerate() {
        for info in row {
            let u = d.require_vertex(&info.u)?;
            map2.eulerize.push(d2.add_arc_ix(u, m)?);
        }
        if row.len() == 3 {
            map2.eulerize.push(d2.add_arc_ix(m, l)?);
            let w = d.require_vertex(&map.w[ci])?;
            map2.eulerize.push(d2.add_arc_ix(l, w)?);
        }
    }
    debug_assert!(d2.underlying().0.is_eulerian());
    Ok((d2, map2))
}

/// The reorientation induced by a truth assignment: for every false variable,
/// the circuit Δ_x (f arcs included) and every special arc e^C_x are
/// reversed; everything else is preserved.
pub fn natural_reorientation(
    d: &Multidigraph,
    map: &GadgetMap,
    assignment: &[bool],
) -> Result<Multidigraph, ReductionError> {
    if assignment.len() != map.variables.len() {
        return Err(ReductionError::AssignmentLength {
            got: assignment.len(),
            want: map.variables.len(),
        });
    }
    let mut reversal = Vec::new();
    for (xi, &value) in assignment.iter().enumerate() {
        if !value {
            reversal.extend(map.delta[xi].iter().copied());
            reversal.extend(map.special[xi].iter().copied());
        }
    }
    Ok(d.reorient(&reversal)?)
}

/// Read the assignment off a reorientation given as edge states relative to
/// the encoded digraph. Fails unless every antiparallel pair keeps matching
/// states and each variable's Δ_x ∪ {e^C_x} is uniformly preserved or
/// uniformly reversed.
pub fn decode_orientation(
    map: &GadgetMap,
    o: &PartialOrientation,
) -> Result<Vec<bool>, ReductionError> {
    let state = |id: usize| -> Result<EdgeState, ReductionError> {
        if id >= o.len() {
            return Err(ReductionError::Inconsistent(format!(
                "arc id {id} out of range"
            )));
        }
        match o.get(id) {
            EdgeState::Undecided => {
                Err(ReductionError::Inconsistent(format!("arc {id} undecided")))
            }
            s => Ok(s),
        }
    };
    for [a, b] in &map.pairs {
        if state(*a)? != state(*b)? {
            return Err(ReductionError::Inconsistent(format!(
                "pair ({a}, {b}) no longer antiparallel"
            )));
        }
    }
    let mut assignment = Vec::with_capacity(map.variables.len());
    for (xi, name) in map.variables.iter().enumerate() {
        let ids: Vec<usize> =
            map.delta[xi].iter().chain(&map.special[xi]).copied().collect();
        let first = state(ids[0])?;
        for &id in &ids[1..] {
            if state(id)? != first {
                return Err(ReductionError::Inconsistent(format!(
                    "circuit of variable {name} is neither preserved nor reversed"
                )));
            }
        }
        assignment.push(first == EdgeState::Forward);
    }
    Ok(assignment)
}

/// True when `d2` is a consistent reorientation of the encoded digraph `d`.
pub fn is_consistent(d: &Multidigraph, map: &GadgetMap, d2: &Multidigraph) -> bool {
    match d.reorientation_to(d2) {
        Some(o) => decode_orientation(map, &o).is_ok(),
        None => false,
    }
}

/// The assignment encoded by a consistent reorientation.
pub fn decode(
    d: &Multidigraph,
    map: &GadgetMap,
    d2: &Multidigraph,
) -> Result<Vec<bool>, ReductionError> {
    let o = d.reorientation_to(d2).ok_or(ReductionError::NotReorientation)?;
    decode_orientation(map, &o)
}

/// Check the t/u' degree ledger on an encode output: underlying degree
/// exactly 2k with exactly k−1 antiparallel pairs at each.
pub fn degree_ledger_violation(d: &Multidigraph, map: &GadgetMap) -> Option<String> {
    let (g, _) = d.underlying();
    let endpoints_of_pair = |p: &[usize; 2]| d.arc(p[0]);
    for row in &map.slots {
        for info in row {
            for v in [&info.t, &info.u_prime] {
                let deg = g.degree(v).ok()?;
                if deg != 2 * map.k {
                    return Some(format!("degree of {v} is {deg}, expected {}", 2 * map.k));
                }
                let vi = d.require_vertex(v).ok()?;
                let pairs = map
                    .pairs
                    .iter()
                    .filter(|p| {
                        let (a, b) = endpoints_of_pair(p);
                        a == vi || b == vi
                    })
                    .count();
                if pairs != map.k - 1 {
                    return Some(format!(
                        "{v} is in {pairs} pairs, expected {}",
                        map.k - 1
                    ));
                }
            }
        }
    }
    None
}

/// Check the slot boundary property: in D − (M ∪ {t}), exactly one arc
/// enters and one leaves U = {u, u', u'', u'''}.
pub fn boundary_violation(d: &Multidigraph, map: &GadgetMap) -> Option<String> {
    let m_ix: Vec<usize> =
        map.m_set.iter().map(|s| d.require_vertex(s).unwrap()).collect();
    for row in &map.slots {
        for info in row {
            let t = d.require_vertex(&info.t).unwrap();
            let u_set: Vec<usize> = [&info.u, &info.u_prime, &info.u_dprime, &info.u_tprime]
                .iter()
                .map(|s| d.require_vertex(s).unwrap())
                .collect();
            let removed = |v: usize| v == t || m_ix.contains(&v);
            let mut entering = 0usize;
            let mut leaving = 0usize;
            for &(tail, head) in d.arcs() {
                if removed(tail) || removed(head) {
                    continue;
                }
                let (tin, hin) = (u_set.contains(&tail), u_set.contains(&head));
                if tin && !hin {
                    leaving += 1;
                } else if !tin && hin {
                    entering += 1;
                }
            }
            if entering != 1 || leaving != 1 {
                return Some(format!(
                    "slot at {} has {entering} entering / {leaving} leaving arcs",
                    info.u
                ));
            }
        }
    }
    None
}

/// Special-arc profile of one clause in a reorientation: (outgoing, incoming)
/// counts at the clause hub w^C. The clause is NAE-satisfied exactly when
/// both counts are positive.
pub fn clause_star(d2: &Multidigraph, map: &GadgetMap, clause: usize) -> (usize, usize) {
    let w = d2.require_vertex(&map.w[clause]).expect("hub exists");
    let mut out = 0usize;
    let mut inc = 0usize;
    for info in &map.slots[clause] {
        let (tail, _) = d2.arc(info.e_arc);
        if tail == w {
            out += 1;
        } else {
            inc += 1;
        }
    }
    (out, inc)
}

/// H'_3: the underlying graph of the Eulerized encoding of {(x, x)} at k = 3,
/// a 17-vertex Eulerian multigraph.
pub fn build_h3_prime() -> (Multigraph, GadgetMap) {
    let pi = NaeInstance::from_clauses(&[&[("x", false), ("x", false)]])
        .expect("valid instance");
    let (d, map) = encode(&pi, 3).expect("valid encode");
    let (d2, map2) = eulerize(&d, &map).expect("fresh encode output");
    (d2.underlying().0, map2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig_instance() -> NaeInstance {
        NaeInstance::from_clauses(&[&[("x", false), ("y", false), ("z", true)]]).unwrap()
    }

    #[test]
    fn parse_and_bruteforce() {
        let pi = parse_nae("p nae\nclause x y !z\n").unwrap();
        assert_eq!(pi.variables(), ["x", "y", "z"]);
        let (sat, model) = nae_bruteforce(&pi);
        assert!(sat);
        assert!(pi.nae_satisfied(&model.unwrap()));
        let count = (0..8u8)
            .filter(|bits| {
                pi.nae_satisfied(&[(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0])
            })
            .count();
        assert_eq!(count, 6);

        let xx = parse_nae("p nae\nclause x x\n").unwrap();
        assert!(!nae_bruteforce(&xx).0);
        let xnx = parse_nae("p nae\nclause x !x\n").unwrap();
        assert!(xnx.nae_satisfied(&[true]) && xnx.nae_satisfied(&[false]));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_nae("clause x y\n").is_err());
        assert!(parse_nae("p nae\nclause x\n").is_err());
        assert!(parse_nae("p nae\nclause a b c d\n").is_err());
        assert!(parse_nae("p nae\n").is_err());
    }

    #[test]
    fn encode_fig_instance_shape() {
        let (d, map) = encode(&fig_instance(), 3).unwrap();
        assert_eq!(d.vertex_count(), 25);
        // special arc directions: positive literal leaves the hub
        let w = d.require_vertex("w1").unwrap();
        let (t0, h0) = d.arc(map.slots[0][0].e_arc);
        assert_eq!(t0, w);
        assert_eq!(h0, d.require_vertex(&map.slots[0][0].u).unwrap());
        let (t2, h2) = d.arc(map.slots[0][2].e_arc);
        assert_eq!(h2, w);
        assert_eq!(t2, d.require_vertex(&map.slots[0][2].u).unwrap());
        // odd-degree vertices of the underlying graph: the three u's and w
        let (g, _) = d.underlying();
        let odd: Vec<&str> = g
            .labels()
            .iter()
            .filter(|l| g.degree(l).unwrap() % 2 == 1)
            .map(|s| s.as_str())
            .collect();
        let mut expect: Vec<&str> = vec!["w1"];
        expect.extend(map.slots[0].iter().map(|s| s.u.as_str()));
        let mut odd_sorted = odd.clone();
        odd_sorted.sort_unstable();
        expect.sort_unstable();
        assert_eq!(odd_sorted, expect);
        assert_eq!(degree_ledger_violation(&d, &map), None);
        assert_eq!(boundary_violation(&d, &map), None);
    }

    #[test]
    fn encode_rejects_small_k() {
        assert!(matches!(encode(&fig_instance(), 2), Err(ReductionError::KTooSmall(2))));
    }

    #[test]
    fn eulerize_parity() {
        let (d, map) = encode(&fig_instance(), 3).unwrap();
        let (d2, map2) = eulerize(&d, &map).unwrap();
        assert_eq!(map2.eulerize.len(), 5);
        assert!(d2.underlying().0.is_eulerian());
        assert!(matches!(
            eulerize(&d2, &map2),
            Err(ReductionError::AlreadyEulerized)
        ));

        let xx = NaeInstance::from_clauses(&[&[("x", false), ("x", false)]]).unwrap();
        let (dx, mx) = encode(&xx, 3).unwrap();
        let (_, mx2) = eulerize(&dx, &mx).unwrap();
        assert_eq!(mx2.eulerize.len(), 2);
    }

    #[test]
    fn natural_reorientation_round_trip() {
        let (d, map) = encode(&fig_instance(), 3).unwrap();
        for bits in 0u8..8 {
            let sigma = [(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0];
            let d2 = natural_reorientation(&d, &map, &sigma).unwrap();
            assert!(is_consistent(&d, &map, &d2));
            assert_eq!(decode(&d, &map, &d2).unwrap(), sigma.to_vec());
        }
        // all-true leaves the digraph unchanged
        let same = natural_reorientation(&d, &map, &[true, true, true]).unwrap();
        assert_eq!(&same, &d);
    }

    #[test]
    fn single_arc_reversal_is_inconsistent() {
        let (d, map) = encode(&fig_instance(), 3).unwrap();
        let d2 = d.reorient(&[map.delta[0][0]]).unwrap();
        assert!(!is_consistent(&d, &map, &d2));
        assert!(decode(&d, &map, &d2).is_err());
    }

    #[test]
    fn star_condition_matches_nae() {
        let pi = fig_instance();
        let (d, map) = encode(&pi, 3).unwrap();
        for bits in 0u8..8 {
            let sigma = [(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0];
            let d2 = natural_reorientation(&d, &map, &sigma).unwrap();
            let (out, inc) = clause_star(&d2, &map, 0);
            assert_eq!(out + inc, 3);
            assert_eq!(out >= 1 && inc >= 1, pi.nae_satisfied(&sigma));
        }
    }

    #[test]
    fn h3_prime_shape() {
        let (g, map) = build_h3_prime();
        assert_eq!(g.vertex_count(), 17);
        assert!(g.is_eulerian());
        assert_eq!(map.eulerize.len(), 2);
    }

    #[test]
    fn size_linear_in_instance() {
        for (clauses, k) in [
            (vec![vec![("x", false), ("y", false), ("z", true)]], 3usize),
            (
                vec![
                    vec![("x", false), ("y", false), ("z", true)],
                    vec![("x", false), ("y", true), ("z", false)],
                ],
                4,
            ),
        ] {
            let refs: Vec<&[(&str, bool)]> = clauses.iter().map(|c| c.as_slice()).collect();
            let pi = NaeInstance::from_clauses(&refs).unwrap();
            let (d, _) = encode(&pi, k).unwrap();
            let nslots: usize = pi.clauses().iter().map(|c| c.len()).sum();
            let expect = (2 * k - 3) + pi.variables().len() + pi.clauses().len() + 5 * nslots + nslots;
            assert_eq!(d.vertex_count(), expect);
        }
    }
}
