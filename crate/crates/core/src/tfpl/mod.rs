//! Fully packed loops in the triangle `T^n(σ, τ)`, plain and oriented.

mod graph;
mod paths;
mod search;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde_json::json;

use crate::dyck::{enumerate_dyck, DyckWord};
use crate::error::{Error, Result};
use crate::Limits;

pub use graph::{Arc, Edge, EdgeStatus, NodeKind, Point, TriangleGraph};
pub use paths::{signed_area2, Endpoint, OpenPath, PathClassification};

pub fn build_triangle(n: usize, sigma: &DyckWord, tau: &DyckWord) -> Result<TriangleGraph> {
    if sigma.n() != n {
        return Err(Error::SizeMismatch { expected: n, got: sigma.n() });
    }
    TriangleGraph::new(sigma, tau)
}

fn check_bound(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.tfpl_max_n {
        return Err(Error::BoundExceeded { what: "tfpl", n, max: limits.tfpl_max_n });
    }
    Ok(())
}

fn same_size(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord) -> Result<usize> {
    let n = sigma.n();
    for w in [tau, pi] {
        if w.n() != n {
            return Err(Error::SizeMismatch { expected: n, got: w.n() });
        }
    }
    Ok(n)
}

/// A TFPL with boundary `(σ, τ, π)`. Edges include the fixed boundary edges
/// and the bottom stubs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TfplConfig {
    sigma: DyckWord,
    tau: DyckWord,
    pi: DyckWord,
    edges: Vec<Edge>,
}

/// An oriented TFPL with boundary `(σ, τ, π)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTfplConfig {
    sigma: DyckWord,
    tau: DyckWord,
    pi: DyckWord,
    arcs: Vec<Arc>,
}

fn check_support(g: &TriangleGraph, edges: &[Edge]) -> Result<()> {
    let set: BTreeSet<Edge> = edges.iter().copied().collect();
    if set.len() != edges.len() {
        return Err(Error::InvalidConfiguration("repeated edge".into()));
    }
    for e in edges {
        match g.status(e) {
            None => return Err(Error::InvalidConfiguration(format!("{e:?} is not an edge of the triangle"))),
            Some(EdgeStatus::Forbidden) => {
                return Err(Error::InvalidConfiguration(format!("{e:?} is excluded by the boundary")))
            }
            _ => {}
        }
    }
    if let Some(e) = g.present_edges().find(|e| !set.contains(e)) {
        return Err(Error::InvalidConfiguration(format!("boundary edge {e:?} missing")));
    }
    Ok(())
}

impl TfplConfig {
    /// Validates degree 2 at inner vertices and the connectivity conditions.
    pub fn new(sigma: DyckWord, tau: DyckWord, pi: DyckWord, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        same_size(&sigma, &tau, &pi)?;
        let g = TriangleGraph::new(&sigma, &tau)?;
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        check_support(&g, &edges)?;
        let mut deg: HashMap<Point, usize> = HashMap::new();
        for e in &edges {
            *deg.entry(e.a).or_default() += 1;
            *deg.entry(e.b).or_default() += 1;
        }
        for &p in &g.nodes()[..g.vertex_count()] {
            if g.is_inner(p) && deg.get(&p).copied().unwrap_or(0) != 2 {
                return Err(Error::InvalidConfiguration(format!("inner vertex {p:?} needs degree 2")));
            }
        }
        let paths = paths::classify_edges(&g, &edges);
        if !paths.other.is_empty() {
            return Err(Error::InvalidConfiguration("a path leaves a side vertex for the wrong side".into()));
        }
        match paths.bottom_pattern(g.n()) {
            Some(p) if p == pi => {}
            _ => return Err(Error::InvalidConfiguration(format!("bottom stubs are not linked as {pi}"))),
        }
        Ok(TfplConfig { sigma, tau, pi, edges })
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn sigma(&self) -> &DyckWord {
        &self.sigma
    }

    pub fn tau(&self) -> &DyckWord {
        &self.tau
    }

    pub fn pi(&self) -> &DyckWord {
        &self.pi
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn triangle(&self) -> TriangleGraph {
        TriangleGraph::new(&self.sigma, &self.tau).expect("validated at construction")
    }

    pub fn classify(&self) -> PathClassification {
        paths::classify_edges(&self.triangle(), &self.edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n(),
            "sigma": self.sigma,
            "tau": self.tau,
            "pi": self.pi,
            "edges": self.edges.iter().map(Edge::to_array).collect::<Vec<_>>(),
            "directed": false,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw = RawJson::parse(value)?;
        if raw.orientations.is_some() {
            return Err(Error::InvalidConfiguration("expected an undirected configuration".into()));
        }
        TfplConfig::new(raw.sigma, raw.tau, raw.pi, raw.edges)
    }
}

impl OrientedTfplConfig {
    /// Validates the boundary orientation and the in/out balance at inner vertices.
    pub fn new(sigma: DyckWord, tau: DyckWord, pi: DyckWord, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        same_size(&sigma, &tau, &pi)?;
        let g = TriangleGraph::new(&sigma, &tau)?;
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort_unstable_by_key(Arc::edge);
        let edges: Vec<Edge> = arcs.iter().map(Arc::edge).collect();
        check_support(&g, &edges)?;
        for a in &arcs {
            if let Some(want) = g.boundary_arc(&a.edge(), &pi) {
                if want != *a {
                    return Err(Error::InvalidConfiguration(format!("boundary edge {a:?} has the wrong orientation")));
                }
            }
        }
        let mut indeg: HashMap<Point, usize> = HashMap::new();
        let mut outdeg: HashMap<Point, usize> = HashMap::new();
        for a in &arcs {
            *outdeg.entry(a.from).or_default() += 1;
            *indeg.entry(a.to).or_default() += 1;
        }
        for &p in &g.nodes()[..g.vertex_count()] {
            if g.is_inner(p) && (indeg.get(&p) != Some(&1) || outdeg.get(&p) != Some(&1)) {
                return Err(Error::InvalidConfiguration(format!("inner vertex {p:?} needs one arc in and one out")));
            }
        }
        Ok(OrientedTfplConfig { sigma, tau, pi, arcs })
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn sigma(&self) -> &DyckWord {
        &self.sigma
    }

    pub fn tau(&self) -> &DyckWord {
        &self.tau
    }

    pub fn pi(&self) -> &DyckWord {
        &self.pi
    }

    /// Arcs sorted by their underlying edge.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_on(&self, e: &Edge) -> Option<Arc> {
        self.arcs.binary_search_by_key(e, Arc::edge).ok().map(|i| self.arcs[i])
    }

    pub fn triangle(&self) -> TriangleGraph {
        TriangleGraph::new(&self.sigma, &self.tau).expect("validated at construction")
    }

    pub fn classify(&self) -> PathClassification {
        paths::classify_arcs(&self.triangle(), &self.arcs)
    }

    pub fn underlying_edges(&self) -> Vec<Edge> {
        self.arcs.iter().map(Arc::edge).collect()
    }

    /// The underlying graph as a TFPL with whatever bottom pattern it has.
    pub fn undirect(&self) -> Result<TfplConfig> {
        let g = self.triangle();
        let edges = self.underlying_edges();
        let pi = paths::classify_edges(&g, &edges)
            .bottom_pattern(self.n())
            .ok_or_else(|| Error::InvalidConfiguration("bottom stubs are not paired".into()))?;
        TfplConfig::new(self.sigma.clone(), self.tau.clone(), pi, edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n(),
            "sigma": self.sigma,
            "tau": self.tau,
            "pi": self.pi,
            "edges": self.arcs.iter().map(|a| a.edge().to_array()).collect::<Vec<_>>(),
            "directed": true,
            "orientations": self.arcs.iter().map(|a| if a.from == a.edge().a { 0 } else { 1 }).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw = RawJson::parse(value)?;
        let Some(orient) = raw.orientations else {
            return Err(Error::InvalidConfiguration("missing orientations".into()));
        };
        if orient.len() != raw.edges.len() {
            return Err(Error::InvalidConfiguration("one orientation per edge expected".into()));
        }
        let arcs = raw.edges.iter().zip(orient).map(|(e, o)| match o {
            0 => Ok(Arc::new(e.a, e.b)),
            1 => Ok(Arc::new(e.b, e.a)),
            _ => Err(Error::InvalidConfiguration(format!("orientation {o} is not 0 or 1"))),
        });
        let arcs = arcs.collect::<Result<Vec<_>>>()?;
        OrientedTfplConfig::new(raw.sigma, raw.tau, raw.pi, arcs)
    }
}

struct RawJson {
    sigma: DyckWord,
    tau: DyckWord,
    pi: DyckWord,
    edges: Vec<Edge>,
    orientations: Option<Vec<u8>>,
}

impl RawJson {
    fn parse(value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Doc {
            n: usize,
            sigma: DyckWord,
            tau: DyckWord,
            pi: DyckWord,
            edges: Vec<[i32; 4]>,
            #[serde(default)]
            directed: bool,
            orientations: Option<Vec<u8>>,
        }
        let doc: Doc = serde_json::from_value(value.clone())?;
        if doc.sigma.n() != doc.n {
            return Err(Error::SizeMismatch { expected: doc.n, got: doc.sigma.n() });
        }
        if doc.directed != doc.orientations.is_some() {
            return Err(Error::InvalidConfiguration("\"directed\" disagrees with \"orientations\"".into()));
        }
        let edges = doc.edges.iter().map(|e| Edge::new((e[0], e[1]), (e[2], e[3]))).collect();
        Ok(RawJson { sigma: doc.sigma, tau: doc.tau, pi: doc.pi, edges, orientations: doc.orientations })
    }
}

/// All TFPLs with boundary `(σ, τ, π)`, sorted.
pub fn enumerate_tfpl(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord, limits: &Limits) -> Result<Vec<TfplConfig>> {
    let n = same_size(sigma, tau, pi)?;
    check_bound(n, limits)?;
    let g = TriangleGraph::new(sigma, tau)?;
    let target = pi.bits().to_vec();
    let mut out = Vec::new();
    search::Undirected::new(&g).run(&mut |bits, s| {
        if bits == target.as_slice() {
            out.push(TfplConfig { sigma: sigma.clone(), tau: tau.clone(), pi: pi.clone(), edges: s.edges() });
        }
    });
    out.sort();
    Ok(out)
}

/// `t^π_{σ,τ}`.
pub fn tfpl_count(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord, limits: &Limits) -> Result<u64> {
    let n = same_size(sigma, tau, pi)?;
    check_bound(n, limits)?;
    let g = TriangleGraph::new(sigma, tau)?;
    Ok(search::count_by_pattern(&g).get(pi).copied().unwrap_or(0))
}

/// All oriented TFPLs with boundary `(σ, τ, π)`, sorted.
pub fn enumerate_oriented_tfpl(
    sigma: &DyckWord,
    tau: &DyckWord,
    pi: &DyckWord,
    limits: &Limits,
) -> Result<Vec<OrientedTfplConfig>> {
    let n = same_size(sigma, tau, pi)?;
    check_bound(n, limits)?;
    let g = TriangleGraph::new(sigma, tau)?;
    let mut out = Vec::new();
    search::Oriented::new(&g, pi).run(&mut |s| {
        let mut arcs = s.arcs();
        arcs.sort_unstable_by_key(Arc::edge);
        out.push(OrientedTfplConfig { sigma: sigma.clone(), tau: tau.clone(), pi: pi.clone(), arcs });
    });
    out.sort();
    Ok(out)
}

pub fn classify_paths(f: &TfplConfig) -> PathClassification {
    f.classify()
}

pub fn classify_oriented_paths(f: &OrientedTfplConfig) -> PathClassification {
    f.classify()
}

/// Orients open paths from left to right (bottom paths from the smaller stub)
/// and closed paths clockwise.
pub fn canonical_orientation(f: &TfplConfig) -> OrientedTfplConfig {
    let paths = f.classify();
    let mut arcs = Vec::with_capacity(f.edges.len());
    let mut add = |pts: &[Point]| arcs.extend(pts.windows(2).map(|w| Arc::new(w[0], w[1])));
    for p in &paths.left_right {
        add(&p.points);
    }
    for p in &paths.bottom {
        add(&p.points);
    }
    for c in &paths.closed {
        let mut cyc = c.clone();
        if signed_area2(&cyc) > 0 {
            cyc.reverse();
        }
        cyc.push(cyc[0]);
        add(&cyc);
    }
    OrientedTfplConfig::new(f.sigma.clone(), f.tau.clone(), f.pi.clone(), arcs)
        .expect("canonical orientation of a TFPL is an oriented TFPL")
}

fn mirror(n: usize, p: Point) -> Point {
    (4 * n as i32 - 2 - p.0, p.1)
}

/// Left-right reflection into the `(τ*, σ*, π*)` family.
pub fn reflect(f: &TfplConfig) -> TfplConfig {
    let n = f.n();
    let edges = f.edges.iter().map(|e| Edge::new(mirror(n, e.a), mirror(n, e.b)));
    TfplConfig::new(f.tau.conjugate(), f.sigma.conjugate(), f.pi.conjugate(), edges)
        .expect("reflection of a TFPL is a TFPL")
}

/// Reflection followed by reversal of every arc.
pub fn reflect_oriented(f: &OrientedTfplConfig) -> OrientedTfplConfig {
    let n = f.n();
    let arcs = f.arcs.iter().map(|a| Arc::new(mirror(n, a.to), mirror(n, a.from)));
    OrientedTfplConfig::new(f.tau.conjugate(), f.sigma.conjugate(), f.pi.conjugate(), arcs)
        .expect("reflection of an oriented TFPL is an oriented TFPL")
}

/// `t^π_{σ,τ}` for every triple at one size.
#[derive(Clone, Debug, Default)]
pub struct TfplTable {
    n: usize,
    counts: BTreeMap<(DyckWord, DyckWord, DyckWord), u64>,
}

impl TfplTable {
    /// One search per `(σ, τ)`, in parallel.
    pub fn compute(n: usize, limits: &Limits) -> Result<Self> {
        check_bound(n, limits)?;
        let words = enumerate_dyck(n);
        let pairs: Vec<(DyckWord, DyckWord)> =
            words.iter().flat_map(|s| words.iter().map(move |t| (s.clone(), t.clone()))).collect();
        let parts = pairs
            .par_iter()
            .map(|(s, t)| {
                let g = TriangleGraph::new(s, t)?;
                Ok(search::count_by_pattern(&g)
                    .into_iter()
                    .map(|(p, c)| ((s.clone(), t.clone(), p), c))
                    .collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TfplTable { n, counts: parts.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord) -> u64 {
        self.counts.get(&(sigma.clone(), tau.clone(), pi.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries.
    pub fn iter(&self) -> impl Iterator<Item = (&(DyckWord, DyckWord, DyckWord), &u64)> {
        self.counts.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn minimal_boundary_has_one_tfpl() {
        for n in 1..=3 {
            let m = DyckWord::minimal(n);
            let fs = enumerate_tfpl(&m, &m, &m, &lim()).unwrap();
            assert_eq!(fs.len(), 1, "n={n}");
            let paths = fs[0].classify();
            assert_eq!(paths.bottom.len(), n);
            assert!(paths.closed.is_empty());
            for p in &paths.bottom {
                let (i, j) = (p.from.bottom_index().unwrap(), p.to.bottom_index().unwrap());
                assert_eq!(i + j, 2 * n + 1);
            }
            let os = enumerate_oriented_tfpl(&m, &m, &m, &lim()).unwrap();
            assert_eq!(os.len(), 1);
            assert_eq!(canonical_orientation(&fs[0]), os[0]);
        }
    }

    #[test]
    fn single_search_matches_counts() {
        for n in 1..=3 {
            let words = enumerate_dyck(n);
            let table = TfplTable::compute(n, &lim()).unwrap();
            for s in &words {
                for t in &words {
                    for p in &words {
                        let list = enumerate_tfpl(s, t, p, &lim()).unwrap();
                        assert_eq!(list.len() as u64, table.get(s, t, p));
                        for f in &list {
                            let back = TfplConfig::new(s.clone(), t.clone(), p.clone(), f.edges().to_vec()).unwrap();
                            assert_eq!(&back, f);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn edges_partitioned_by_paths() {
        let words = enumerate_dyck(3);
        for s in &words {
            for t in &words {
                for p in &words {
                    for f in enumerate_tfpl(s, t, p, &lim()).unwrap() {
                        let c = f.classify();
                        assert_eq!(c.edge_count(), f.edges().len());
                        assert!(c.other.is_empty());
                        assert!(c.left_right.iter().all(|p| matches!(p.from, Endpoint::Left(_))));
                    }
                }
            }
        }
    }

    #[test]
    fn bound_enforced() {
        let m = DyckWord::minimal(2);
        let tight = Limits { tfpl_max_n: 1, ..Limits::default() };
        assert!(matches!(enumerate_tfpl(&m, &m, &m, &tight), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn rejects_broken_configurations() {
        let m = w("0011");
        let f = enumerate_tfpl(&m, &m, &m, &lim()).unwrap().remove(0);
        let mut edges = f.edges().to_vec();
        edges.pop();
        assert!(TfplConfig::new(m.clone(), m.clone(), m.clone(), edges).is_err());
        assert!(TfplConfig::new(m.clone(), m.clone(), w("0101"), f.edges().to_vec()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let (s, t, p) = (w("0101"), w("0011"), w("0101"));
        for f in enumerate_tfpl(&s, &t, &p, &lim()).unwrap() {
            assert_eq!(TfplConfig::from_json(&f.to_json()).unwrap(), f);
            let o = canonical_orientation(&f);
            assert_eq!(OrientedTfplConfig::from_json(&o.to_json()).unwrap(), o);
            assert!(TfplConfig::from_json(&o.to_json()).is_err());
        }
    }

    #[test]
    fn reflection_involution() {
        let words = enumerate_dyck(2);
        for s in &words {
            for t in &words {
                for p in &words {
                    for f in enumerate_tfpl(s, t, p, &lim()).unwrap() {
                        assert_eq!(reflect(&reflect(&f)), f);
                    }
                    for o in enumerate_oriented_tfpl(s, t, p, &lim()).unwrap() {
                        assert_eq!(reflect_oriented(&reflect_oriented(&o)), o);
                    }
                }
            }
        }
    }
}
