use std::collections::HashMap;

use crate::dyck::DyckWord;
use crate::error::{Error, Result};

/// Lattice point `(x, y)`. Bottom stubs end at virtual points `(2i - 2, -1)`.
pub type Point = (i32, i32);

/// Undirected unit edge, endpoints ordered so that `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: Point,
    pub b: Point,
}

impl Edge {
    pub fn new(p: Point, q: Point) -> Self {
        if p <= q {
            Edge { a: p, b: q }
        } else {
            Edge { a: q, b: p }
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.a.0 == self.b.0
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.1 == self.b.1
    }

    /// Lower endpoint of a vertical edge.
    pub fn lower(&self) -> Point {
        self.a
    }

    pub fn other(&self, p: Point) -> Point {
        if p == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn to_array(&self) -> [i32; 4] {
        [self.a.0, self.a.1, self.b.0, self.b.1]
    }
}

/// Directed unit edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub from: Point,
    pub to: Point,
}

impl Arc {
    pub fn new(from: Point, to: Point) -> Self {
        Arc { from, to }
    }

    pub fn edge(&self) -> Edge {
        Edge::new(self.from, self.to)
    }

    pub fn reversed(&self) -> Arc {
        Arc { from: self.to, to: self.from }
    }

    pub fn points_left(&self) -> bool {
        self.from.1 == self.to.1 && self.to.0 < self.from.0
    }

    pub fn points_right(&self) -> bool {
        self.from.1 == self.to.1 && self.to.0 > self.from.0
    }

    pub fn points_up(&self) -> bool {
        self.from.0 == self.to.0 && self.to.1 > self.from.1
    }

    pub fn points_down(&self) -> bool {
        self.from.0 == self.to.0 && self.to.1 < self.from.1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Inner,
    /// Left vertex `i` (1-based) at `(i - 1, i - 1)`, apex excluded.
    Left(usize),
    /// Right vertex `i` at `(2n - 2 + i, 2n - i)`, apex excluded.
    Right(usize),
    /// `(2n - 1, 2n - 1)`: left vertex `2n` and right vertex `1` at once.
    Apex,
    /// Lower end of the stub `e_i`.
    Bottom(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    Present,
    Forbidden,
    Free,
}

/// The triangle `T^n(σ, τ)`: points with `x >= y >= 0` and `x + y <= 4n - 2`,
/// the `2n` bottom stubs, and the boundary edges forced or forbidden by the
/// side words.
#[derive(Clone, Debug)]
pub struct TriangleGraph {
    n: usize,
    sigma: DyckWord,
    tau: DyckWord,
    /// Triangle points row by row, then the `2n` virtual stub ends.
    nodes: Vec<Point>,
    kinds: Vec<NodeKind>,
    even: Vec<bool>,
    index: HashMap<Point, usize>,
    edges: Vec<Edge>,
    ends: Vec<(usize, usize)>,
    status: Vec<EdgeStatus>,
    edge_index: HashMap<Edge, usize>,
}

impl TriangleGraph {
    pub fn new(sigma: &DyckWord, tau: &DyckWord) -> Result<Self> {
        let n = sigma.n();
        if tau.n() != n {
            return Err(Error::SizeMismatch { expected: n, got: tau.n() });
        }
        if n == 0 {
            return Err(Error::InvalidConfiguration("triangle needs n >= 1".into()));
        }
        let ni = n as i32;
        let top = 4 * ni - 2;
        let mut nodes = Vec::new();
        let mut kinds = Vec::new();
        for y in 0..2 * ni {
            for x in y..=top - y {
                nodes.push((x, y));
                let kind = if (x, y) == (2 * ni - 1, 2 * ni - 1) {
                    NodeKind::Apex
                } else if x == y {
                    NodeKind::Left(y as usize + 1)
                } else if x + y == top {
                    NodeKind::Right((2 * ni - y) as usize)
                } else {
                    NodeKind::Inner
                };
                kinds.push(kind);
            }
        }
        for i in 1..=2 * n {
            nodes.push((2 * i as i32 - 2, -1));
            kinds.push(NodeKind::Bottom(i));
        }
        let even = nodes.iter().map(|&(x, y)| (x + y).rem_euclid(2) == 0).collect();
        let index: HashMap<Point, usize> = nodes.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let mut edges = Vec::new();
        for &(x, y) in &nodes {
            if y < 0 {
                edges.push(Edge::new((x, -1), (x, 0)));
                continue;
            }
            if index.contains_key(&(x + 1, y)) {
                edges.push(Edge::new((x, y), (x + 1, y)));
            }
            if index.contains_key(&(x, y + 1)) {
                edges.push(Edge::new((x, y), (x, y + 1)));
            }
        }
        edges.sort_unstable();
        let ends = edges.iter().map(|e| (index[&e.a], index[&e.b])).collect();
        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        let mut g = TriangleGraph {
            n,
            sigma: sigma.clone(),
            tau: tau.clone(),
            nodes,
            kinds,
            even,
            index,
            edges,
            ends,
            status: Vec::new(),
            edge_index,
        };
        g.status = g.edges.iter().map(|e| g.classify_edge(e)).collect();
        Ok(g)
    }

    fn classify_edge(&self, e: &Edge) -> EdgeStatus {
        let ni = self.n as i32;
        // bottom stubs, including the ones under (0,0) and (4n-2,0)
        if e.a.1 == -1 {
            return EdgeStatus::Present;
        }
        let ka = self.kinds[self.index[&e.a]];
        let kb = self.kinds[self.index[&e.b]];
        if e.is_horizontal() {
            // left vertex to its right neighbour / right vertex to its left neighbour
            if matches!(ka, NodeKind::Left(_)) || matches!(kb, NodeKind::Right(_)) {
                return EdgeStatus::Present;
            }
            debug_assert!(!matches!(ka, NodeKind::Right(_) | NodeKind::Apex));
            return EdgeStatus::Free;
        }
        // vertical: only the upper end can be a boundary vertex
        match kb {
            NodeKind::Left(i) => self.status_from(self.sigma.letter(i) == 0),
            NodeKind::Right(i) => self.status_from(self.tau.letter(i) == 1),
            NodeKind::Apex => {
                debug_assert_eq!(self.sigma.letter(2 * self.n), 1);
                EdgeStatus::Forbidden
            }
            NodeKind::Inner => {
                debug_assert!(e.a.0 + e.a.1 < 4 * ni - 2);
                EdgeStatus::Free
            }
            NodeKind::Bottom(_) => unreachable!("bottom node is never an upper end"),
        }
    }

    fn status_from(&self, present: bool) -> EdgeStatus {
        if present {
            EdgeStatus::Present
        } else {
            EdgeStatus::Forbidden
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &DyckWord {
        &self.sigma
    }

    pub fn tau(&self) -> &DyckWord {
        &self.tau
    }

    /// Triangle points followed by the virtual stub ends.
    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    /// Number of points of `T^n` (virtual stub ends excluded).
    pub fn vertex_count(&self) -> usize {
        self.nodes.len() - 2 * self.n
    }

    pub fn contains(&self, p: Point) -> bool {
        p.1 >= 0 && self.index.contains_key(&p)
    }

    pub fn node_index(&self, p: Point) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn kind(&self, p: Point) -> Option<NodeKind> {
        self.node_index(p).map(|i| self.kinds[i])
    }

    pub(crate) fn kind_at(&self, idx: usize) -> NodeKind {
        self.kinds[idx]
    }

    pub fn is_inner(&self, p: Point) -> bool {
        self.kind(p) == Some(NodeKind::Inner)
    }

    /// Parity of the coordinate sum.
    pub fn is_even(&self, p: Point) -> bool {
        self.node_index(p).map(|i| self.even[i]).unwrap_or((p.0 + p.1).rem_euclid(2) == 0)
    }

    pub fn left_vertex(&self, i: usize) -> Point {
        (i as i32 - 1, i as i32 - 1)
    }

    pub fn right_vertex(&self, i: usize) -> Point {
        let n = self.n as i32;
        (2 * n - 2 + i as i32, 2 * n - i as i32)
    }

    /// The stub `e_i` (1-based).
    pub fn stub(&self, i: usize) -> Edge {
        let x = 2 * i as i32 - 2;
        Edge::new((x, -1), (x, 0))
    }

    /// All candidate edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ends(&self, id: usize) -> (usize, usize) {
        self.ends[id]
    }

    pub fn edge_id(&self, e: &Edge) -> Option<usize> {
        self.edge_index.get(e).copied()
    }

    pub fn status(&self, e: &Edge) -> Option<EdgeStatus> {
        self.edge_id(e).map(|i| self.status[i])
    }

    pub(crate) fn status_at(&self, id: usize) -> EdgeStatus {
        self.status[id]
    }

    pub fn present_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().zip(&self.status).filter(|(_, s)| **s == EdgeStatus::Present).map(|(e, _)| *e)
    }

    /// The orientation every present boundary edge must carry, given the
    /// bottom word `π`: stubs up for `0`, down for `1`; left-side edges up and
    /// right; right-side edges right and down.
    pub fn boundary_arc(&self, e: &Edge, pi: &DyckWord) -> Option<Arc> {
        if self.status(e)? != EdgeStatus::Present {
            return None;
        }
        if e.a.1 == -1 {
            let i = (e.a.0 as usize) / 2 + 1;
            return Some(if pi.letter(i) == 0 { Arc::new(e.a, e.b) } else { Arc::new(e.b, e.a) });
        }
        if e.is_horizontal() {
            return Some(Arc::new(e.a, e.b));
        }
        match self.kind(e.b)? {
            NodeKind::Left(_) => Some(Arc::new(e.a, e.b)),
            NodeKind::Right(_) => Some(Arc::new(e.b, e.a)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn smallest_triangle() {
        let g = TriangleGraph::new(&w("01"), &w("01")).unwrap();
        let mut pts: Vec<Point> = g.nodes()[..g.vertex_count()].to_vec();
        pts.sort();
        assert_eq!(pts, vec![(0, 0), (1, 0), (1, 1), (2, 0)]);
        assert_eq!(g.kind((1, 1)), Some(NodeKind::Apex));
        assert_eq!(g.kind((0, 0)), Some(NodeKind::Left(1)));
        assert_eq!(g.kind((2, 0)), Some(NodeKind::Right(2)));
        assert_eq!(g.status(&g.stub(1)), Some(EdgeStatus::Present));
        assert_eq!(g.status(&g.stub(2)), Some(EdgeStatus::Present));
        assert_eq!(g.status(&Edge::new((1, 0), (1, 1))), Some(EdgeStatus::Forbidden));
        assert_eq!(g.present_edges().count(), 4);
    }

    #[test]
    fn vertex_count_matches_inequalities() {
        for n in 1..=4 {
            let g = TriangleGraph::new(&DyckWord::minimal(n), &DyckWord::minimal(n)).unwrap();
            let top = 4 * n as i32 - 2;
            let mut count = 0;
            for x in -2..=top + 2 {
                for y in -2..=top + 2 {
                    if x >= y && y >= 0 && x + y <= top {
                        count += 1;
                        assert!(g.contains((x, y)));
                    }
                }
            }
            assert_eq!(g.vertex_count(), count);
            assert_eq!(count, 4 * n * n);
            assert_eq!((1..=2 * n).filter(|&i| g.status(&g.stub(i)).is_some()).count(), 2 * n);
        }
    }

    #[test]
    fn side_words_control_stubs() {
        let sigma = w("001011");
        let tau = w("010011");
        let g = TriangleGraph::new(&sigma, &tau).unwrap();
        for i in 2..=6 {
            let v = g.left_vertex(i);
            let below = Edge::new((v.0, v.1 - 1), v);
            let want = if sigma.letter(i) == 0 { EdgeStatus::Present } else { EdgeStatus::Forbidden };
            assert_eq!(g.status(&below), Some(want), "left {i}");
        }
        for i in 1..=5 {
            let v = g.right_vertex(i);
            let below = Edge::new((v.0, v.1 - 1), v);
            let want = if tau.letter(i) == 1 { EdgeStatus::Present } else { EdgeStatus::Forbidden };
            assert_eq!(g.status(&below), Some(want), "right {i}");
        }
    }

    #[test]
    fn mismatched_sizes() {
        assert!(TriangleGraph::new(&w("01"), &w("0011")).is_err());
    }
}
