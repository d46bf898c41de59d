//! Backtracking over the free edges of a triangle, vertex by vertex in
//! row-major order. Only local degree constraints are enforced while
//! searching; connectivity is read off each completed subgraph.

use std::collections::HashMap;

use crate::dyck::DyckWord;

use super::graph::{Arc, Edge, EdgeStatus, NodeKind, TriangleGraph};

const NONE: u32 = u32::MAX;

/// Decisions taken at one inner vertex: the free edges to its right and above.
struct Slot {
    node: usize,
    edges: Vec<(usize, usize)>,
}

fn slots(g: &TriangleGraph) -> Vec<Slot> {
    let mut by_node: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.nodes().len()];
    for (id, _) in g.edges().iter().enumerate() {
        if g.status_at(id) != EdgeStatus::Free {
            continue;
        }
        let (a, b) = g.edge_ends(id);
        // nodes are stored row-major, so the smaller index is decided first
        let (first, second) = if a < b { (a, b) } else { (b, a) };
        by_node[first].push((id, second));
    }
    (0..g.vertex_count())
        .filter(|&v| g.kind_at(v) == NodeKind::Inner)
        .map(|v| Slot { node: v, edges: std::mem::take(&mut by_node[v]) })
        .collect()
}

/// Undirected search state.
pub(crate) struct Undirected<'g> {
    g: &'g TriangleGraph,
    slots: Vec<Slot>,
    deg: Vec<u8>,
    adj: Vec<[u32; 2]>,
    chosen: Vec<bool>,
    endpoints: Vec<usize>,
}

impl<'g> Undirected<'g> {
    pub(crate) fn new(g: &'g TriangleGraph) -> Self {
        let nodes = g.nodes().len();
        let mut s = Undirected {
            g,
            slots: slots(g),
            deg: vec![0; nodes],
            adj: vec![[NONE; 2]; nodes],
            chosen: vec![false; g.edges().len()],
            endpoints: Vec::new(),
        };
        for id in 0..g.edges().len() {
            if g.status_at(id) == EdgeStatus::Present {
                let (a, b) = g.edge_ends(id);
                s.link(a, b);
                s.chosen[id] = true;
            }
        }
        s.endpoints = (0..nodes).filter(|&v| s.deg[v] == 1 && g.kind_at(v) != NodeKind::Inner).collect();
        s
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a][self.deg[a] as usize] = b as u32;
        self.deg[a] += 1;
        self.adj[b][self.deg[b] as usize] = a as u32;
        self.deg[b] += 1;
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.deg[a] -= 1;
        self.adj[a][self.deg[a] as usize] = NONE;
        self.deg[b] -= 1;
        self.adj[b][self.deg[b] as usize] = NONE;
    }

    /// Calls `leaf` with the bottom link pattern (as `π` bits) of every
    /// degree-valid subgraph whose open paths join left to right and bottom to
    /// bottom.
    pub(crate) fn run(&mut self, leaf: &mut dyn FnMut(&[u8], &Self)) {
        let mut bits = vec![0u8; 2 * self.g.n()];
        self.descend(0, &mut bits, leaf);
    }

    fn descend(&mut self, depth: usize, bits: &mut Vec<u8>, leaf: &mut dyn FnMut(&[u8], &Self)) {
        if depth == self.slots.len() {
            if self.read_pattern(bits) {
                leaf(bits, self);
            }
            return;
        }
        let v = self.slots[depth].node;
        let need = 2 - self.deg[v] as usize;
        let k = self.slots[depth].edges.len();
        if need > k {
            return;
        }
        for mask in 0u32..(1 << k) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let mut buf = [(0, 0); 2];
            let mut len = 0;
            for j in (0..k).filter(|j| mask >> j & 1 == 1) {
                buf[len] = self.slots[depth].edges[j];
                len += 1;
            }
            let picks = &buf[..len];
            if picks.iter().any(|&(_, u)| self.deg[u] >= 2) {
                continue;
            }
            for &(id, u) in picks {
                self.link(v, u);
                self.chosen[id] = true;
            }
            self.descend(depth + 1, bits, leaf);
            for &(id, u) in picks.iter().rev() {
                self.chosen[id] = false;
                self.unlink(v, u);
            }
        }
    }

    fn walk(&self, start: usize) -> usize {
        let mut prev = NONE;
        let mut cur = start as u32;
        loop {
            let [a, b] = self.adj[cur as usize];
            let next = if a != prev { a } else { b };
            if next == NONE {
                return cur as usize;
            }
            prev = cur;
            cur = next;
        }
    }

    fn read_pattern(&self, bits: &mut [u8]) -> bool {
        for &s in &self.endpoints {
            let t = self.walk(s);
            match (self.g.kind_at(s), self.g.kind_at(t)) {
                (NodeKind::Bottom(i), NodeKind::Bottom(j)) => {
                    if i < j {
                        bits[i - 1] = 0;
                        bits[j - 1] = 1;
                    }
                }
                (NodeKind::Left(_), NodeKind::Right(_)) | (NodeKind::Right(_), NodeKind::Left(_)) => {}
                _ => return false,
            }
        }
        true
    }

    pub(crate) fn edges(&self) -> Vec<Edge> {
        self.g.edges().iter().zip(&self.chosen).filter(|(_, &c)| c).map(|(e, _)| *e).collect()
    }
}

pub(crate) fn pattern_code(bits: &[u8]) -> u64 {
    bits.iter().fold(0u64, |acc, &b| acc << 1 | b as u64)
}

/// Number of TFPLs in `T^n(σ, τ)` for every bottom pattern that occurs.
pub(crate) fn count_by_pattern(g: &TriangleGraph) -> HashMap<DyckWord, u64> {
    let mut counts: HashMap<u64, (Vec<u8>, u64)> = HashMap::new();
    Undirected::new(g).run(&mut |bits, _| {
        counts.entry(pattern_code(bits)).or_insert_with(|| (bits.to_vec(), 0)).1 += 1;
    });
    counts.into_values().map(|(bits, c)| (DyckWord::new(bits).expect("bottom pairing is a Dyck word"), c)).collect()
}

/// Oriented search state: every free edge is absent or carries one of two
/// directions, and each inner vertex ends with one arc in and one arc out.
pub(crate) struct Oriented<'g> {
    g: &'g TriangleGraph,
    slots: Vec<Slot>,
    indeg: Vec<u8>,
    outdeg: Vec<u8>,
    /// Per edge: 0 absent, 1 from the lower-index end, 2 towards it.
    state: Vec<u8>,
}

impl<'g> Oriented<'g> {
    pub(crate) fn new(g: &'g TriangleGraph, pi: &DyckWord) -> Self {
        let nodes = g.nodes().len();
        let mut s = Oriented {
            g,
            slots: slots(g),
            indeg: vec![0; nodes],
            outdeg: vec![0; nodes],
            state: vec![0; g.edges().len()],
        };
        for (id, e) in g.edges().iter().enumerate() {
            if let Some(arc) = g.boundary_arc(e, pi) {
                let from = g.node_index(arc.from).expect("boundary arc inside triangle");
                let to = g.node_index(arc.to).expect("boundary arc inside triangle");
                s.outdeg[from] += 1;
                s.indeg[to] += 1;
                let (a, _) = g.edge_ends(id);
                s.state[id] = if a == from { 1 } else { 2 };
            }
        }
        s
    }

    pub(crate) fn run(&mut self, leaf: &mut dyn FnMut(&Self)) {
        self.descend(0, leaf);
    }

    fn descend(&mut self, depth: usize, leaf: &mut dyn FnMut(&Self)) {
        if depth == self.slots.len() {
            leaf(self);
            return;
        }
        let v = self.slots[depth].node;
        let k = self.slots[depth].edges.len();
        let total = 3u32.pow(k as u32);
        for code in 0..total {
            let mut c = code;
            let mut dirs = [0u8; 2];
            for d in dirs.iter_mut().take(k) {
                *d = (c % 3) as u8;
                c /= 3;
            }
            let outs = dirs[..k].iter().filter(|&&d| d == 1).count() as u8;
            let ins = dirs[..k].iter().filter(|&&d| d == 2).count() as u8;
            if self.outdeg[v] + outs != 1 || self.indeg[v] + ins != 1 {
                continue;
            }
            let ok = (0..k).all(|j| {
                let u = self.slots[depth].edges[j].1;
                match dirs[j] {
                    1 => self.indeg[u] == 0,
                    2 => self.outdeg[u] == 0,
                    _ => true,
                }
            });
            if !ok {
                continue;
            }
            for (j, &d) in dirs[..k].iter().enumerate() {
                let (id, u) = self.slots[depth].edges[j];
                self.apply(id, v, u, d, true);
            }
            self.descend(depth + 1, leaf);
            for (j, &d) in dirs[..k].iter().enumerate() {
                let (id, u) = self.slots[depth].edges[j];
                self.apply(id, v, u, d, false);
            }
        }
    }

    fn apply(&mut self, id: usize, v: usize, u: usize, dir: u8, on: bool) {
        let (from, to) = match dir {
            1 => (v, u),
            2 => (u, v),
            _ => return,
        };
        if on {
            self.outdeg[from] += 1;
            self.indeg[to] += 1;
            self.state[id] = if self.g.edge_ends(id).0 == from { 1 } else { 2 };
        } else {
            self.outdeg[from] -= 1;
            self.indeg[to] -= 1;
            self.state[id] = 0;
        }
    }

    pub(crate) fn arcs(&self) -> Vec<Arc> {
        self.g
            .edges()
            .iter()
            .zip(&self.state)
            .filter_map(|(e, &s)| match s {
                1 => Some(Arc::new(e.a, e.b)),
                2 => Some(Arc::new(e.b, e.a)),
                _ => None,
            })
            .collect()
    }
}
