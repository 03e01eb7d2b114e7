//! Integral max-flow (Dinic) with cut extraction and path decomposition.
//!
//! Capacities are tiny everywhere in this toolkit, so the network is rebuilt
//! per query and the work is dominated by the all-pairs loops of the callers.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct FlowEdge {
    to: usize,
    cap: i64,
    // index of the paired reverse edge
    rev: usize,
}

/// Capacitated directed network with a fixed source and sink.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    source: usize,
    sink: usize,
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
    // forward-edge index per added arc, in insertion order
    arc_edges: Vec<usize>,
    arc_caps: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Id of an arc added with [`FlowNetwork::add_arc`].
pub type ArcId = usize;

impl FlowNetwork {
    pub fn new(n: usize, source: usize, sink: usize) -> Self {
        assert!(source != sink, "source and sink must differ");
        assert!(source < n && sink < n);
        Self {
            n,
            source,
            sink,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            arc_edges: Vec::new(),
            arc_caps: Vec::new(),
            level: Vec::new(),
            iter: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn add_arc(&mut self, tail: usize, head: usize, cap: i64) -> ArcId {
        assert!(cap >= 0, "capacities must be nonnegative");
        let e = self.edges.len();
        self.edges.push(FlowEdge { to: head, cap, rev: e + 1 });
        self.edges.push(FlowEdge { to: tail, cap: 0, rev: e });
        self.adj[tail].push(e);
        self.adj[head].push(e + 1);
        self.arc_edges.push(e);
        self.arc_caps.push(cap);
        self.arc_edges.len() - 1
    }

    fn bfs(&mut self) -> bool {
        self.level = vec![-1; self.n];
        let mut q = VecDeque::new();
        self.level[self.source] = 0;
        q.push_back(self.source);
        while let Some(v) = q.pop_front() {
            for &e in &self.adj[v] {
                let edge = &self.edges[e];
                if edge.cap > 0 && self.level[edge.to] < 0 {
                    self.level[edge.to] = self.level[v] + 1;
                    q.push_back(edge.to);
                }
            }
        }
        self.level[self.sink] >= 0
    }

    fn dfs(&mut self, v: usize, pushed: i64) -> i64 {
        if v == self.sink {
            return pushed;
        }
        while self.iter[v] < self.adj[v].len() {
            let e = self.adj[v][self.iter[v]];
            let (to, cap) = (self.edges[e].to, self.edges[e].cap);
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, pushed.min(cap));
                if d > 0 {
                    self.edges[e].cap -= d;
                    let rev = self.edges[e].rev;
                    self.edges[rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Run max flow, stopping once `limit` is reached (if given).
    pub fn max_flow_limited(&mut self, limit: Option<i64>) -> i64 {
        let mut flow = 0i64;
        while limit.map_or(true, |l| flow < l) && self.bfs() {
            self.iter = vec![0; self.n];
            loop {
                if let Some(l) = limit {
                    if flow >= l {
                        break;
                    }
                }
                let headroom = limit.map_or(i64::MAX, |l| l - flow);
                let f = self.dfs(self.source, headroom);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    pub fn max_flow(&mut self) -> i64 {
        self.max_flow_limited(None)
    }

    /// Flow currently routed through an added arc.
    pub fn flow_on(&self, arc: ArcId) -> i64 {
        self.arc_caps[arc] - self.edges[self.arc_edges[arc]].cap
    }

    /// Nodes reachable from the source in the residual network.
    pub fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.adj[v] {
                let edge = &self.edges[e];
                if edge.cap > 0 && !seen[edge.to] {
                    seen[edge.to] = true;
                    stack.push(edge.to);
                }
            }
        }
        seen
    }

    /// Arcs crossing from the source side to the sink side after max flow.
    /// Their capacities sum to the flow value (asserted by callers).
    pub fn min_cut_arcs(&self) -> Vec<ArcId> {
        let side = self.source_side();
        self.arc_edges
            .iter()
            .enumerate()
            .filter(|&(arc, &e)| {
                let tail = self.edges[self.edges[e].rev].to;
                let head = self.edges[e].to;
                side[tail] && !side[head] && self.arc_caps[arc] > 0
            })
            .map(|(arc, _)| arc)
            .collect()
    }

    /// Decompose the current flow into source-to-sink paths of node ids.
    /// Consumes the flow bookkeeping (per-arc flows are zeroed as paths are
    /// peeled off); call after `max_flow`.
    pub fn decompose_paths(&mut self) -> Vec<Vec<usize>> {
        // remaining flow per forward edge
        let mut rem: Vec<i64> = self
            .arc_edges
            .iter()
            .enumerate()
            .map(|(arc, _)| self.flow_on(arc))
            .collect();
        let mut out: Vec<Vec<ArcId>> = vec![Vec::new(); self.n];
        for (arc, &e) in self.arc_edges.iter().enumerate() {
            if rem[arc] > 0 {
                let tail = self.edges[self.edges[e].rev].to;
                out[tail].push(arc);
            }
        }
        let mut paths = Vec::new();
        loop {
            let mut path = vec![self.source];
            let mut v = self.source;
            let mut used: Vec<ArcId> = Vec::new();
            while v != self.sink {
                let next = out[v].iter().copied().find(|&a| rem[a] > 0);
                match next {
                    Some(a) => {
                        rem[a] -= 1;
                        used.push(a);
                        v = self.edges[self.arc_edges[a]].to;
                        path.push(v);
                    }
                    None => break,
                }
            }
            if v != self.sink {
                break;
            }
            let _ = used;
            paths.push(path);
        }
        paths
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_unit_paths() {
        // s -> a -> t and s -> b -> t
        let mut net = FlowNetwork::new(4, 0, 3);
        net.add_arc(0, 1, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(0, 2, 1);
        net.add_arc(2, 3, 1);
        assert_eq!(net.max_flow(), 2);
        let paths = net.decompose_paths();
        assert_eq!(paths.len(), 2);
        for p in paths {
            assert_eq!(p.first(), Some(&0));
            assert_eq!(p.last(), Some(&3));
        }
    }

    #[test]
    fn single_arc_value() {
        let mut net = FlowNetwork::new(2, 0, 1);
        let a = net.add_arc(0, 1, 5);
        assert_eq!(net.max_flow(), 5);
        assert_eq!(net.flow_on(a), 5);
        assert_eq!(net.min_cut_arcs(), vec![a]);
    }

    #[test]
    fn unreachable_sink() {
        let mut net = FlowNetwork::new(3, 0, 2);
        net.add_arc(0, 1, 7);
        assert_eq!(net.max_flow(), 0);
    }

    #[test]
    fn cut_capacity_equals_flow() {
        let mut net = FlowNetwork::new(6, 0, 5);
        let caps = [
            (0, 1, 10),
            (0, 2, 10),
            (1, 3, 4),
            (1, 4, 8),
            (2, 4, 9),
            (3, 5, 10),
            (4, 3, 6),
            (4, 5, 10),
        ];
        let ids: Vec<_> = caps.iter().map(|&(t, h, c)| net.add_arc(t, h, c)).collect();
        let value = net.max_flow();
        assert_eq!(value, 19);
        let cut = net.min_cut_arcs();
        let cap_sum: i64 = cut.iter().map(|&a| caps[ids.iter().position(|&i| i == a).unwrap()].2).sum();
        assert_eq!(cap_sum, value);
    }

    #[test]
    fn limited_flow_stops_early() {
        let mut net = FlowNetwork::new(2, 0, 1);
        net.add_arc(0, 1, 100);
        assert_eq!(net.max_flow_limited(Some(3)), 3);
    }
}
