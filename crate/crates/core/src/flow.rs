//! Dinic max-flow on integer capacities.
//!
//! Arcs are scanned in insertion order and levels are built by BFS, so the
//! flow found (and therefore every orientation and witness derived from it)
//! is a deterministic function of how the network was built.

use std::collections::VecDeque;

pub(crate) const INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle to an arc added by [`FlowNetwork::add_arc`].
#[derive(Clone, Copy, Debug)]
pub(crate) struct ArcId {
    from: usize,
    idx: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> ArcId {
        let idx = self.adj[from].len();
        let rev_idx = self.adj[to].len() + usize::from(from == to);
        self.adj[from].push(Arc {
            to,
            cap,
            rev: rev_idx,
        });
        self.adj[to].push(Arc {
            to: from,
            cap: 0,
            rev: idx,
        });
        ArcId { from, idx }
    }

    /// Flow currently pushed through `arc`.
    pub fn flow(&self, arc: ArcId) -> i64 {
        let a = &self.adj[arc.from][arc.idx];
        self.adj[a.to][a.rev].cap
    }

    fn bfs(&mut self, s: usize) {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.adj[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.adj[u].len() {
            let i = self.iter[u];
            let (to, cap) = (self.adj[u][i].to, self.adj[u][i].cap);
            if cap > 0 && self.level[u] < self.level[to] {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.adj[u][i].cap -= d;
                    let rev = self.adj[u][i].rev;
                    self.adj[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network, i.e. the source
    /// side of a minimum cut once `max_flow` has run.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.adj[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }
}
