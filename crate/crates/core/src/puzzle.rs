//! Knutson–Tao puzzles on the triangle of side `2n`.
//!
//! The triangle is cut into `2n` horizontal strips, `Y = 0` at the bottom.
//! Strip `Y` has `m = 2n - Y` upward unit triangles and `m - 1` downward ones.
//! Its edges are, from left to right:
//!
//! * `H[Y][k]`, `k < m`: horizontal edges on the strip's lower line,
//! * `S[Y][k]`, `k < m`: `/` edges, the left sides of the upward triangles,
//! * `B[Y][k]`, `k < m`: `\` edges, the right sides of the upward triangles.
//!
//! The flat label array stores, strip by strip, the `H` row, then `S`, then `B`.
//! The boundary reads `σ` on the left side bottom to apex (`S[Y][0]`), `π`
//! on the bottom left to right (`H[0][k]`) and `τ` on the right side apex to
//! bottom (`B[Y][2n-1-Y]`).

use num_bigint::BigUint;
use serde_json::json;

use crate::dyck::DyckWord;
use crate::error::{Error, Result};
use crate::Limits;

/// Authorized labelings `(horizontal, next, next)` read counterclockwise from
/// the horizontal edge. The same five apply to both orientations.
pub const ALLOWED: [[u8; 3]; 5] = [[0, 0, 0], [1, 1, 1], [0, 1, 2], [1, 2, 0], [2, 0, 1]];

pub fn is_allowed(t: [u8; 3]) -> bool {
    ALLOWED.contains(&t)
}

pub fn edge_count(n: usize) -> usize {
    3 * n * (2 * n + 1)
}

fn strip_offset(n: usize, y: usize) -> usize {
    3 * (0..y).map(|r| 2 * n - r).sum::<usize>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Horizontal,
    Slash,
    Backslash,
}

pub fn edge_index(n: usize, side: Side, y: usize, k: usize) -> usize {
    let m = 2 * n - y;
    debug_assert!(k < m);
    let shift = match side {
        Side::Horizontal => 0,
        Side::Slash => m,
        Side::Backslash => 2 * m,
    };
    strip_offset(n, y) + shift + k
}

/// Unit triangle as three edge indices in counterclockwise order from its
/// horizontal edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitTriangle {
    pub up: bool,
    pub strip: usize,
    pub k: usize,
    pub edges: [usize; 3],
}

pub fn triangles(n: usize) -> Vec<UnitTriangle> {
    let mut out = Vec::with_capacity(4 * n * n);
    for y in 0..2 * n {
        let m = 2 * n - y;
        for k in 0..m {
            out.push(UnitTriangle {
                up: true,
                strip: y,
                k,
                edges: [
                    edge_index(n, Side::Horizontal, y, k),
                    edge_index(n, Side::Backslash, y, k),
                    edge_index(n, Side::Slash, y, k),
                ],
            });
            if k + 1 < m {
                out.push(UnitTriangle {
                    up: false,
                    strip: y,
                    k,
                    edges: [
                        edge_index(n, Side::Horizontal, y + 1, k),
                        edge_index(n, Side::Backslash, y, k),
                        edge_index(n, Side::Slash, y, k + 1),
                    ],
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Puzzle {
    n: usize,
    labels: Vec<u8>,
}

impl Puzzle {
    /// Wraps a labeling without checking the triangle rules.
    pub fn from_labels(n: usize, labels: Vec<u8>) -> Result<Self> {
        if labels.len() != edge_count(n) {
            return Err(Error::InvalidPuzzle(format!("expected {} labels, got {}", edge_count(n), labels.len())));
        }
        if let Some(l) = labels.iter().find(|&&l| l > 2) {
            return Err(Error::InvalidPuzzle(format!("label {l} outside 0..=2")));
        }
        Ok(Puzzle { n, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, side: Side, y: usize, k: usize) -> u8 {
        self.labels[edge_index(self.n, side, y, k)]
    }

    pub fn h(&self, y: usize, k: usize) -> u8 {
        self.label(Side::Horizontal, y, k)
    }

    pub fn s(&self, y: usize, k: usize) -> u8 {
        self.label(Side::Slash, y, k)
    }

    pub fn b(&self, y: usize, k: usize) -> u8 {
        self.label(Side::Backslash, y, k)
    }

    /// Left side, bottom to apex.
    pub fn left_boundary(&self) -> Vec<u8> {
        (0..2 * self.n).map(|y| self.s(y, 0)).collect()
    }

    /// Bottom side, left to right.
    pub fn bottom_boundary(&self) -> Vec<u8> {
        (0..2 * self.n).map(|k| self.h(0, k)).collect()
    }

    /// Right side, apex to bottom.
    pub fn right_boundary(&self) -> Vec<u8> {
        (0..2 * self.n).rev().map(|y| self.b(y, 2 * self.n - 1 - y)).collect()
    }

    /// `(σ, τ, π)` when all three sides are Dyck words.
    pub fn boundary(&self) -> Result<(DyckWord, DyckWord, DyckWord)> {
        Ok((
            DyckWord::new(self.left_boundary())?,
            DyckWord::new(self.right_boundary())?,
            DyckWord::new(self.bottom_boundary())?,
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "n": self.n, "labels": self.labels })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Doc {
            n: usize,
            labels: Vec<Option<u8>>,
        }
        let doc: Doc = serde_json::from_value(value.clone())?;
        let labels = doc
            .labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or_else(|| Error::InvalidPuzzle(format!("edge {i} is unlabeled"))))
            .collect::<Result<Vec<_>>>()?;
        Puzzle::from_labels(doc.n, labels)
    }
}

/// Whether every unit triangle carries an authorized labeling.
pub fn validate_puzzle(p: &Puzzle) -> Result<bool> {
    if p.labels.len() != edge_count(p.n) {
        return Err(Error::InvalidPuzzle("incomplete labeling".into()));
    }
    Ok(triangles(p.n).iter().all(|t| is_allowed(t.edges.map(|e| p.labels[e]))))
}

fn check(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord, limits: &Limits) -> Result<usize> {
    let n = sigma.n();
    for w in [tau, pi] {
        if w.n() != n {
            return Err(Error::SizeMismatch { expected: n, got: w.n() });
        }
    }
    if n > limits.puzzle_max_n {
        return Err(Error::BoundExceeded { what: "puzzle", n, max: limits.puzzle_max_n });
    }
    Ok(n)
}

/// Fills strip by strip, left to right. The upward triangle determines its
/// `\` edge from the other two, and the downward triangle after it leaves at
/// most two choices for the next `/` and the horizontal edge above.
struct Filler {
    n: usize,
    labels: Vec<u8>,
    tau: Vec<u8>,
}

impl Filler {
    fn new(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord) -> Self {
        let n = sigma.n();
        let mut labels = vec![u8::MAX; edge_count(n)];
        for k in 0..2 * n {
            labels[edge_index(n, Side::Horizontal, 0, k)] = pi.bits()[k];
        }
        for y in 0..2 * n {
            labels[edge_index(n, Side::Slash, y, 0)] = sigma.bits()[y];
        }
        Filler { n, labels, tau: tau.bits().to_vec() }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[u8])) {
        if self.n == 0 {
            emit(&self.labels);
            return;
        }
        self.cell(0, 0, emit);
    }

    fn cell(&mut self, y: usize, k: usize, emit: &mut dyn FnMut(&[u8])) {
        let n = self.n;
        let m = 2 * n - y;
        if k == m {
            if y + 1 == 2 * n {
                emit(&self.labels);
            } else {
                self.cell(y + 1, 0, emit);
            }
            return;
        }
        let h = self.labels[edge_index(n, Side::Horizontal, y, k)];
        let s = self.labels[edge_index(n, Side::Slash, y, k)];
        let Some(b) = ALLOWED.iter().find(|t| t[0] == h && t[2] == s).map(|t| t[1]) else {
            return;
        };
        if k + 1 == m {
            // right boundary: B[Y][m-1] carries τ_{2n-Y}
            if b == self.tau[2 * n - 1 - y] {
                self.labels[edge_index(n, Side::Backslash, y, k)] = b;
                self.cell(y, k + 1, emit);
            }
            return;
        }
        self.labels[edge_index(n, Side::Backslash, y, k)] = b;
        for t in ALLOWED.iter().filter(|t| t[1] == b) {
            self.labels[edge_index(n, Side::Horizontal, y + 1, k)] = t[0];
            self.labels[edge_index(n, Side::Slash, y, k + 1)] = t[2];
            self.cell(y, k + 1, emit);
        }
    }
}

/// All puzzles with boundary `(σ, τ, π)`, in label order.
pub fn enumerate_puzzles(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord, limits: &Limits) -> Result<Vec<Puzzle>> {
    let n = check(sigma, tau, pi, limits)?;
    let mut out = Vec::new();
    Filler::new(sigma, tau, pi).run(&mut |labels| {
        out.push(Puzzle { n, labels: labels.to_vec() });
    });
    out.sort();
    Ok(out)
}

/// Number of puzzles with boundary `(σ, τ, π)`, without storing them.
pub fn puzzle_count(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord, limits: &Limits) -> Result<BigUint> {
    check(sigma, tau, pi, limits)?;
    let mut count = 0u64;
    Filler::new(sigma, tau, pi).run(&mut |_| count += 1);
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_dyck;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn layout() {
        for n in 1..=4 {
            let tris = triangles(n);
            assert_eq!(tris.len(), 4 * n * n);
            let mut seen = vec![0; edge_count(n)];
            for t in &tris {
                for e in t.edges {
                    seen[e] += 1;
                }
            }
            // boundary edges lie on one triangle, interior edges on two
            assert_eq!(seen.iter().filter(|&&c| c == 1).count(), 6 * n);
            assert!(seen.iter().all(|&c| c == 1 || c == 2));
        }
    }

    #[test]
    fn orientation_matters() {
        assert!(is_allowed([0, 1, 2]));
        assert!(!is_allowed([0, 2, 1]));
        let n = 1;
        let zeros = Puzzle::from_labels(n, vec![0; edge_count(n)]).unwrap();
        assert!(validate_puzzle(&zeros).unwrap());
        let mut labels = vec![0; edge_count(n)];
        let t = triangles(n)[0];
        labels[t.edges[0]] = 0;
        labels[t.edges[1]] = 2;
        labels[t.edges[2]] = 1;
        assert!(!validate_puzzle(&Puzzle::from_labels(n, labels).unwrap()).unwrap());
        assert!(Puzzle::from_labels(1, vec![0; 3]).is_err());
    }

    #[test]
    fn minimal_boundary() {
        for n in 1..=4 {
            let m = DyckWord::minimal(n);
            let ps = enumerate_puzzles(&m, &m, &m, &Limits::default()).unwrap();
            assert_eq!(ps.len(), 1);
            assert!(validate_puzzle(&ps[0]).unwrap());
            assert_eq!(ps[0].boundary().unwrap(), (m.clone(), m.clone(), m.clone()));
        }
    }

    #[test]
    fn enumerated_puzzles_are_valid_with_right_boundary() {
        let words = enumerate_dyck(3);
        for s in &words {
            for t in &words {
                for p in &words {
                    let ps = enumerate_puzzles(s, t, p, &Limits::default()).unwrap();
                    assert_eq!(BigUint::from(ps.len()), puzzle_count(s, t, p, &Limits::default()).unwrap());
                    for q in ps {
                        assert!(validate_puzzle(&q).unwrap());
                        assert_eq!(q.boundary().unwrap(), (s.clone(), t.clone(), p.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn example_boundary_has_a_puzzle() {
        let ps = enumerate_puzzles(&w("00011101"), &w("00011011"), &w("00110101"), &Limits::default()).unwrap();
        assert_eq!(ps.len(), 1);
    }

    #[test]
    fn json() {
        let m = w("0101");
        let p = enumerate_puzzles(&m, &w("0011"), &m, &Limits::default()).unwrap().remove(0);
        assert_eq!(Puzzle::from_json(&p.to_json()).unwrap(), p);
        let mut v = p.to_json();
        v["labels"][3] = serde_json::Value::Null;
        assert!(Puzzle::from_json(&v).is_err());
    }
}
