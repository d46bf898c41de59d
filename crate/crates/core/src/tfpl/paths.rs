use std::collections::{BTreeMap, BTreeSet};

use crate::dyck::{DyckWord, LinkPattern};

use super::graph::{Arc, Edge, NodeKind, Point, TriangleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Left(usize),
    Right(usize),
    Bottom(usize),
}

impl Endpoint {
    fn of(g: &TriangleGraph, p: Point) -> Option<Endpoint> {
        match g.kind(p)? {
            NodeKind::Left(i) => Some(Endpoint::Left(i)),
            NodeKind::Right(i) => Some(Endpoint::Right(i)),
            NodeKind::Bottom(i) => Some(Endpoint::Bottom(i)),
            NodeKind::Inner | NodeKind::Apex => None,
        }
    }

    pub fn bottom_index(&self) -> Option<usize> {
        match *self {
            Endpoint::Bottom(i) => Some(i),
            _ => None,
        }
    }
}

/// Open path listed from `from` to `to`, both ends included in `points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenPath {
    pub from: Endpoint,
    pub to: Endpoint,
    pub points: Vec<Point>,
}

impl OpenPath {
    /// For a bottom path: whether it runs from the smaller stub index to the larger.
    pub fn runs_left_to_right(&self) -> bool {
        match (self.from, self.to) {
            (Endpoint::Bottom(i), Endpoint::Bottom(j)) => i < j,
            (Endpoint::Left(_), Endpoint::Right(_)) => true,
            _ => false,
        }
    }
}

/// Every edge of a configuration lies on exactly one of these.
///
/// `other` collects open paths joining a side vertex to a stub or two
/// vertices of the same side. It is empty for every TFPL.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathClassification {
    pub left_right: Vec<OpenPath>,
    pub bottom: Vec<OpenPath>,
    pub closed: Vec<Vec<Point>>,
    pub other: Vec<OpenPath>,
}

impl PathClassification {
    /// The link pattern formed by the bottom paths, if they pair all `2n` stubs.
    pub fn bottom_pattern(&self, n: usize) -> Option<DyckWord> {
        let pairs = self.bottom.iter().map(|p| {
            let (i, j) = (p.from.bottom_index().unwrap(), p.to.bottom_index().unwrap());
            (i.min(j), i.max(j))
        });
        let lp = LinkPattern::new(pairs).ok()?;
        (lp.n() == n).then(|| lp.to_word())
    }

    pub fn edge_count(&self) -> usize {
        let open: usize =
            self.left_right.iter().chain(&self.bottom).chain(&self.other).map(|p| p.points.len() - 1).sum();
        open + self.closed.iter().map(Vec::len).sum::<usize>()
    }

    fn push(&mut self, path: OpenPath) {
        match (path.from, path.to) {
            (Endpoint::Left(_), Endpoint::Right(_)) | (Endpoint::Right(_), Endpoint::Left(_)) => {
                self.left_right.push(path)
            }
            (Endpoint::Bottom(_), Endpoint::Bottom(_)) => self.bottom.push(path),
            _ => self.other.push(path),
        }
    }
}

/// Twice the signed area enclosed by a cycle; negative means clockwise.
pub fn signed_area2(cycle: &[Point]) -> i64 {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let (x1, y1) = cycle[i];
            let (x2, y2) = cycle[(i + 1) % k];
            x1 as i64 * y2 as i64 - x2 as i64 * y1 as i64
        })
        .sum()
}

/// Undirected classification. Open paths are listed starting from a left
/// vertex when they have one, otherwise from the smaller stub.
pub(crate) fn classify_edges(g: &TriangleGraph, edges: &[Edge]) -> PathClassification {
    let mut adj: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.a).or_default().push(e.b);
        adj.entry(e.b).or_default().push(e.a);
    }
    let mut ends: Vec<(Endpoint, Point)> =
        adj.iter().filter(|(_, nb)| nb.len() == 1).filter_map(|(&p, _)| Endpoint::of(g, p).map(|e| (e, p))).collect();
    // Left < Right < Bottom in the derived order; start order is Left, Bottom, Right
    ends.sort_by_key(|(e, _)| match e {
        Endpoint::Left(i) => (0, *i),
        Endpoint::Bottom(i) => (1, *i),
        Endpoint::Right(i) => (2, *i),
    });

    let mut used: BTreeSet<Edge> = BTreeSet::new();
    let mut out = PathClassification::default();
    for (from, start) in ends {
        let first = adj[&start][0];
        if used.contains(&Edge::new(start, first)) {
            continue;
        }
        let mut points = vec![start];
        let mut prev = start;
        let mut cur = first;
        used.insert(Edge::new(start, first));
        loop {
            points.push(cur);
            let next = adj[&cur].iter().copied().find(|&q| q != prev && !used.contains(&Edge::new(cur, q)));
            match next {
                Some(q) => {
                    used.insert(Edge::new(cur, q));
                    prev = cur;
                    cur = q;
                }
                None => break,
            }
        }
        let to = Endpoint::of(g, cur).unwrap_or(Endpoint::Left(0));
        out.push(OpenPath { from, to, points });
    }
    for e in edges {
        if used.contains(e) {
            continue;
        }
        let start = e.a;
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = e.b;
        used.insert(*e);
        while cur != start {
            cycle.push(cur);
            let next =
                adj[&cur].iter().copied().find(|&q| q != prev && !used.contains(&Edge::new(cur, q))).unwrap_or(start);
            used.insert(Edge::new(cur, next));
            prev = cur;
            cur = next;
        }
        out.closed.push(cycle);
    }
    out
}

/// Directed classification: open paths run from their source, cycles follow
/// their arcs.
pub(crate) fn classify_arcs(g: &TriangleGraph, arcs: &[Arc]) -> PathClassification {
    let mut succ: BTreeMap<Point, Point> = BTreeMap::new();
    let mut has_in: BTreeSet<Point> = BTreeSet::new();
    for a in arcs {
        succ.insert(a.from, a.to);
        has_in.insert(a.to);
    }
    let mut used: BTreeSet<Point> = BTreeSet::new();
    let mut out = PathClassification::default();
    let sources: Vec<Point> = succ.keys().copied().filter(|p| !has_in.contains(p)).collect();
    for start in sources {
        let mut points = vec![start];
        let mut cur = start;
        used.insert(cur);
        while let Some(&next) = succ.get(&cur) {
            points.push(next);
            used.insert(next);
            cur = next;
        }
        let from = Endpoint::of(g, start).unwrap_or(Endpoint::Left(0));
        let to = Endpoint::of(g, cur).unwrap_or(Endpoint::Left(0));
        out.push(OpenPath { from, to, points });
    }
    for &start in succ.keys() {
        if used.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        used.insert(start);
        let mut cur = succ[&start];
        while cur != start {
            cycle.push(cur);
            used.insert(cur);
            cur = succ[&cur];
        }
        out.closed.push(cycle);
    }
    out
}
