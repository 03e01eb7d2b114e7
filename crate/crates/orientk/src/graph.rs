//! Undirected multigraphs, multidigraphs and (partial) orientations.
//!
//! Edges and arcs are identified by their position in insertion order; every
//! other part of the toolkit (orientation files, witnesses, gadget maps)
//! refers to edges by these stable ids, never by endpoint pairs, which would
//! be ambiguous under parallel edges.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on vertex `{0}` is not allowed")]
    SelfLoop(String),
    #[error("degree_between requires two distinct vertices, got `{0}` twice")]
    SameVertex(String),
    #[error("invalid edge id {0} (graph has {1} edges)")]
    InvalidEdgeId(usize, usize),
    #[error("orientation has {0} entries but the graph has {1} edges")]
    LengthMismatch(usize, usize),
    #[error("edge {0} is undecided; a total orientation is required")]
    Undecided(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Per-edge orientation state, relative to the stored endpoint order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeState {
    /// First-listed endpoint points to the second.
    Forward,
    Reversed,
    Undecided,
}

/// Orientation of a subset of the edges of a [`Multigraph`].
///
/// Also serves as the representation of a reorientation of a digraph:
/// `Forward` means the arc is preserved, `Reversed` means it is flipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrientation {
    states: Vec<EdgeState>,
}

impl PartialOrientation {
    pub fn undecided(edge_count: usize) -> Self {
        Self { states: vec![EdgeState::Undecided; edge_count] }
    }

    pub fn all_forward(edge_count: usize) -> Self {
        Self { states: vec![EdgeState::Forward; edge_count] }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn get(&self, edge: usize) -> EdgeState {
        self.states[edge]
    }

    pub fn set(&mut self, edge: usize, state: EdgeState) {
        self.states[edge] = state;
    }

    pub fn is_total(&self) -> bool {
        self.states.iter().all(|s| *s != EdgeState::Undecided)
    }

    pub fn undecided_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == EdgeState::Undecided)
            .map(|(i, _)| i)
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    /// Orientation file format: one `<edge_id> <+|->` line per decided edge,
    /// omitted ids are undecided.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.states.iter().enumerate() {
            match s {
                EdgeState::Forward => out.push_str(&format!("{i} +\n")),
                EdgeState::Reversed => out.push_str(&format!("{i} -\n")),
                EdgeState::Undecided => {}
            }
        }
        out
    }

    pub fn parse(text: &str, edge_count: usize) -> Result<Self, GraphError> {
        let mut o = Self::undecided(edge_count);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let id: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("expected `<edge_id> <+|->`, got `{line}`"),
                })?;
            if id >= edge_count {
                return Err(GraphError::InvalidEdgeId(id, edge_count));
            }
            let sign = it.next().ok_or_else(|| GraphError::Parse {
                line: lineno + 1,
                msg: "missing orientation sign".into(),
            })?;
            let state = match sign {
                "+" => EdgeState::Forward,
                "-" | "\u{2212}" => EdgeState::Reversed,
                other => {
                    return Err(GraphError::Parse {
                        line: lineno + 1,
                        msg: format!("expected `+` or `-`, got `{other}`"),
                    })
                }
            };
            o.set(id, state);
        }
        Ok(o)
    }
}

fn build_index(labels: &[String]) -> Result<HashMap<String, usize>, GraphError> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(GraphError::DuplicateVertex(l.clone()));
        }
    }
    Ok(index)
}

/// Undirected multigraph with labeled vertices and index-stable edges.
///
/// Parallel edges are first-class; self-loops are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new<I, S>(vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        Ok(Self { labels, index, edges: Vec::new() })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require_vertex(&self, label: &str) -> Result<usize, GraphError> {
        self.vertex_index(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<usize, GraphError> {
        let ui = self.require_vertex(u)?;
        let vi = self.require_vertex(v)?;
        self.add_edge_ix(ui, vi)
    }

    pub fn add_edge_ix(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(self.labels[u].clone()));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// Degree of `v`, counting each parallel edge.
    pub fn degree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.degree_ix(self.require_vertex(v)?))
    }

    pub fn degree_ix(&self, v: usize) -> usize {
        self.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    /// Number of edges with endpoint set `{u, v}`.
    pub fn degree_between(&self, u: &str, v: &str) -> Result<usize, GraphError> {
        let ui = self.require_vertex(u)?;
        let vi = self.require_vertex(v)?;
        if ui == vi {
            return Err(GraphError::SameVertex(u.to_string()));
        }
        Ok(self.degree_between_ix(ui, vi))
    }

    pub fn degree_between_ix(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| (*a == u && *b == v) || (*a == v && *b == u))
            .count()
    }

    /// Edges joining `v` and any vertex of `set`, with multiplicity.
    pub fn degree_toward(&self, v: usize, set: &[usize]) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| {
                (*a == v && set.contains(b)) || (*b == v && set.contains(a))
            })
            .count()
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for (eid, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, eid));
            adj[v].push((u, eid));
        }
        adj
    }

    /// True iff the graph has an Euler circuit: all degrees even and all
    /// edges in one connected component. Isolated vertices are ignored; a
    /// graph whose edges span two or more components is not Eulerian.
    pub fn is_eulerian(&self) -> bool {
        let n = self.vertex_count();
        if self.edges.is_empty() {
            return true;
        }
        let mut deg = vec![0usize; n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|d| d % 2 != 0) {
            return false;
        }
        let adj = self.adjacency();
        let root = self.edges[0].0;
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..n).all(|v| deg[v] == 0 || seen[v])
    }

    /// Orient every edge per a total orientation. Arc id `i` corresponds to
    /// edge id `i`.
    pub fn orient(&self, o: &PartialOrientation) -> Result<Multidigraph, GraphError> {
        if o.len() != self.edges.len() {
            return Err(GraphError::LengthMismatch(o.len(), self.edges.len()));
        }
        let mut arcs = Vec::with_capacity(self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match o.get(i) {
                EdgeState::Forward => arcs.push((u, v)),
                EdgeState::Reversed => arcs.push((v, u)),
                EdgeState::Undecided => return Err(GraphError::Undecided(i)),
            }
        }
        Ok(Multidigraph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            arcs,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("graph undirected\n");
        for l in &self.labels {
            out.push_str(&format!("v {l}\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", self.labels[u], self.labels[v]));
        }
        out
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

/// Directed multigraph with labeled vertices and index-stable arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multidigraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    arcs: Vec<(usize, usize)>,
}

impl Multidigraph {
    pub fn new<I, S>(vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&labels)?;
        Ok(Self { labels, index, arcs: Vec::new() })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require_vertex(&self, label: &str) -> Result<usize, GraphError> {
        self.vertex_index(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> (usize, usize) {
        self.arcs[id]
    }

    pub fn add_arc(&mut self, tail: &str, head: &str) -> Result<usize, GraphError> {
        let t = self.require_vertex(tail)?;
        let h = self.require_vertex(head)?;
        self.add_arc_ix(t, h)
    }

    pub fn add_arc_ix(&mut self, tail: usize, head: usize) -> Result<usize, GraphError> {
        if tail == head {
            return Err(GraphError::SelfLoop(self.labels[tail].clone()));
        }
        self.arcs.push((tail, head));
        Ok(self.arcs.len() - 1)
    }

    pub fn indegree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.indegree_ix(self.require_vertex(v)?))
    }

    pub fn indegree_ix(&self, v: usize) -> usize {
        self.arcs.iter().filter(|(_, h)| *h == v).count()
    }

    pub fn outdegree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.outdegree_ix(self.require_vertex(v)?))
    }

    pub fn outdegree_ix(&self, v: usize) -> usize {
        self.arcs.iter().filter(|(t, _)| *t == v).count()
    }

    /// Reverse the listed arcs; all other arcs and all ids are unchanged.
    pub fn reorient(&self, reversal: &[usize]) -> Result<Multidigraph, GraphError> {
        let mut arcs = self.arcs.clone();
        for &id in reversal {
            if id >= arcs.len() {
                return Err(GraphError::InvalidEdgeId(id, arcs.len()));
            }
            let (t, h) = arcs[id];
            arcs[id] = (h, t);
        }
        Ok(Multidigraph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            arcs,
        })
    }

    /// Apply a reorientation given as a total [`PartialOrientation`]
    /// (`Forward` = preserved, `Reversed` = flipped).
    pub fn apply_reorientation(
        &self,
        o: &PartialOrientation,
    ) -> Result<Multidigraph, GraphError> {
        if o.len() != self.arcs.len() {
            return Err(GraphError::LengthMismatch(o.len(), self.arcs.len()));
        }
        let mut rev = Vec::new();
        for i in 0..o.len() {
            match o.get(i) {
                EdgeState::Forward => {}
                EdgeState::Reversed => rev.push(i),
                EdgeState::Undecided => return Err(GraphError::Undecided(i)),
            }
        }
        self.reorient(&rev)
    }

    /// The reorientation that maps `self` to `other`, or `None` if `other`
    /// is not a reorientation of `self`.
    pub fn reorientation_to(&self, other: &Multidigraph) -> Option<PartialOrientation> {
        if self.labels != other.labels || self.arcs.len() != other.arcs.len() {
            return None;
        }
        let mut o = PartialOrientation::undecided(self.arcs.len());
        for i in 0..self.arcs.len() {
            let (t, h) = self.arcs[i];
            if other.arcs[i] == (t, h) {
                o.set(i, EdgeState::Forward);
            } else if other.arcs[i] == (h, t) {
                o.set(i, EdgeState::Reversed);
            } else {
                return None;
            }
        }
        Some(o)
    }

    /// Forget directions. Edge id `i` corresponds to arc id `i`; the returned
    /// all-forward orientation reconstructs `self` through [`Multigraph::orient`].
    pub fn underlying(&self) -> (Multigraph, PartialOrientation) {
        let g = Multigraph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            edges: self.arcs.clone(),
        };
        let o = PartialOrientation::all_forward(self.arcs.len());
        (g, o)
    }

    pub fn out_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for (aid, &(t, h)) in self.arcs.iter().enumerate() {
            adj[t].push((h, aid));
        }
        adj
    }

    pub fn in_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for (aid, &(t, h)) in self.arcs.iter().enumerate() {
            adj[h].push((t, aid));
        }
        adj
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("graph directed\n");
        for l in &self.labels {
            out.push_str(&format!("v {l}\n"));
        }
        for &(t, h) in &self.arcs {
            out.push_str(&format!("e {} {}\n", self.labels[t], self.labels[h]));
        }
        out
    }
}

impl fmt::Display for Multidigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

/// Result of parsing the graph file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Undirected(Multigraph),
    Directed(Multidigraph),
}

impl ParsedGraph {
    pub fn into_undirected(self) -> Option<Multigraph> {
        match self {
            ParsedGraph::Undirected(g) => Some(g),
            ParsedGraph::Directed(_) => None,
        }
    }

    pub fn into_directed(self) -> Option<Multidigraph> {
        match self {
            ParsedGraph::Directed(d) => Some(d),
            ParsedGraph::Undirected(_) => None,
        }
    }
}

/// Parse the line-based graph file format.
///
/// ```text
/// # optional comment
/// graph undirected
/// v a
/// v b
/// e a b
/// ```
///
/// Edge/arc id is the 0-based index among `e` lines.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, GraphError> {
    let mut directed: Option<bool> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| GraphError::Parse { line: lineno + 1, msg };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next() {
            Some("graph") => {
                directed = match it.next() {
                    Some("undirected") => Some(false),
                    Some("directed") => Some(true),
                    other => {
                        return Err(err(format!(
                            "expected `graph undirected` or `graph directed`, got `{other:?}`"
                        )))
                    }
                };
            }
            Some("v") => {
                let l = it.next().ok_or_else(|| err("missing vertex label".into()))?;
                if directed.is_none() {
                    return Err(err("vertex line before `graph` header".into()));
                }
                labels.push(l.to_string());
            }
            Some("e") => {
                let u = it.next().ok_or_else(|| err("missing edge endpoint".into()))?;
                let v = it.next().ok_or_else(|| err("missing edge endpoint".into()))?;
                if directed.is_none() {
                    return Err(err("edge line before `graph` header".into()));
                }
                edges.push((u.to_string(), v.to_string()));
            }
            other => return Err(err(format!("unrecognized line `{other:?}`"))),
        }
    }
    let directed = directed.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `graph` header".into(),
    })?;
    if directed {
        let mut d = Multidigraph::new(labels)?;
        for (u, v) in &edges {
            d.add_arc(u, v)?;
        }
        Ok(ParsedGraph::Directed(d))
    } else {
        let mut g = Multigraph::new(labels)?;
        for (u, v) in &edges {
            g.add_edge(u, v)?;
        }
        Ok(ParsedGraph::Undirected(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        let mut g = Multigraph::new(["a", "b", "c"]).unwrap();
        g.add_edge("a", "b").unwrap();
        g.add_edge("b", "c").unwrap();
        g.add_edge("c", "a").unwrap();
        g
    }

    #[test]
    fn degree_counts_parallel_edges() {
        let g = triangle();
        assert_eq!(g.degree("a").unwrap(), 2);

        let mut p = Multigraph::new(["a", "b"]).unwrap();
        p.add_edge("a", "b").unwrap();
        p.add_edge("a", "b").unwrap();
        assert_eq!(p.degree_between("a", "b").unwrap(), 2);
        assert_eq!(p.degree("a").unwrap(), 2);
    }

    #[test]
    fn degree_errors() {
        let g = triangle();
        assert!(matches!(g.degree("q"), Err(GraphError::UnknownVertex(_))));
        assert!(matches!(
            g.degree_between("a", "a"),
            Err(GraphError::SameVertex(_))
        ));
    }

    #[test]
    fn no_self_loops() {
        let mut g = Multigraph::new(["a"]).unwrap();
        assert!(matches!(g.add_edge("a", "a"), Err(GraphError::SelfLoop(_))));
    }

    #[test]
    fn directed_degrees() {
        let mut d = Multidigraph::new(["a", "b", "c"]).unwrap();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "c").unwrap();
        d.add_arc("c", "a").unwrap();
        assert_eq!(d.indegree("a").unwrap(), 1);
        assert_eq!(d.outdegree("a").unwrap(), 1);

        let mut anti = Multidigraph::new(["a", "b"]).unwrap();
        anti.add_arc("a", "b").unwrap();
        anti.add_arc("b", "a").unwrap();
        assert_eq!(anti.indegree("a").unwrap(), 1);
        assert_eq!(anti.outdegree("a").unwrap(), 1);
    }

    #[test]
    fn orient_and_underlying_round_trip() {
        let mut g = Multigraph::new(["a", "b"]).unwrap();
        g.add_edge("a", "b").unwrap();
        g.add_edge("a", "b").unwrap();
        let d = g.orient(&PartialOrientation::all_forward(2)).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (0, 1)]);

        let (back, o) = d.underlying();
        assert_eq!(back, g);
        assert_eq!(back.orient(&o).unwrap(), d);
    }

    #[test]
    fn orient_rejects_undecided() {
        let g = triangle();
        let mut o = PartialOrientation::all_forward(3);
        o.set(1, EdgeState::Undecided);
        assert!(matches!(g.orient(&o), Err(GraphError::Undecided(1))));
        assert!(matches!(
            g.orient(&PartialOrientation::all_forward(2)),
            Err(GraphError::LengthMismatch(2, 3))
        ));
    }

    #[test]
    fn reorient_is_involutive() {
        let mut d = Multidigraph::new(["a", "b", "c"]).unwrap();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "c").unwrap();
        assert_eq!(d.reorient(&[]).unwrap(), d);
        let all = [0, 1];
        assert_eq!(d.reorient(&all).unwrap().reorient(&all).unwrap(), d);
        assert!(matches!(d.reorient(&[5]), Err(GraphError::InvalidEdgeId(5, 2))));

        let mut anti = Multidigraph::new(["a", "b"]).unwrap();
        anti.add_arc("a", "b").unwrap();
        anti.add_arc("b", "a").unwrap();
        let r = anti.reorient(&[1]).unwrap();
        assert_eq!(r.arcs(), &[(0, 1), (0, 1)]);
    }

    #[test]
    fn eulerian_basics() {
        assert!(triangle().is_eulerian());
        let mut single = Multigraph::new(["a", "b"]).unwrap();
        single.add_edge("a", "b").unwrap();
        assert!(!single.is_eulerian());
    }

    #[test]
    fn eulerian_disconnected_edges() {
        // Two disjoint triangles: all degrees even but no Euler circuit.
        let mut g = Multigraph::new(["a", "b", "c", "d", "e", "f"]).unwrap();
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")] {
            g.add_edge(u, v).unwrap();
        }
        assert!(!g.is_eulerian());

        // Isolated vertex is ignored.
        let mut h = triangle();
        h = {
            let mut labels: Vec<String> = h.labels().to_vec();
            labels.push("iso".into());
            let mut g2 = Multigraph::new(labels).unwrap();
            for &(u, v) in h.edges() {
                g2.add_edge_ix(u, v).unwrap();
            }
            g2
        };
        assert!(h.is_eulerian());
    }

    #[test]
    fn parse_round_trip() {
        let text = "# comment\ngraph undirected\nv a\nv b\ne a b\n";
        let g = parse_graph(text).unwrap().into_undirected().unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let reparsed = parse_graph(&g.serialize()).unwrap().into_undirected().unwrap();
        assert_eq!(reparsed, g);
    }

    #[test]
    fn parse_rejects_unknown_endpoint() {
        let text = "graph undirected\nv a\ne a b\n";
        assert!(matches!(
            parse_graph(text),
            Err(GraphError::UnknownVertex(_))
        ));
        let dup = "graph undirected\nv a\nv a\n";
        assert!(matches!(parse_graph(dup), Err(GraphError::DuplicateVertex(_))));
    }

    #[test]
    fn orientation_file_round_trip() {
        let mut o = PartialOrientation::undecided(4);
        o.set(0, EdgeState::Forward);
        o.set(2, EdgeState::Reversed);
        let text = o.serialize();
        assert_eq!(PartialOrientation::parse(&text, 4).unwrap(), o);
    }
}
