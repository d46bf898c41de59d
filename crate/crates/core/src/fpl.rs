//! Fully packed loops on the `n × n` grid with periodic boundary.
//!
//! Vertices sit at `(x, y)` with `0 <= x, y < n`, `y` pointing up. Of the
//! `4n` boundary stubs, every other one is selected starting with the topmost
//! stub on the left side, and the selected stubs are numbered `1..=2n`
//! counterclockwise: down the left side, along the bottom, up the right side,
//! back along the top.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::dyck::{DyckWord, LinkPattern};
use crate::error::{Error, Result};
use crate::Limits;

/// Largest grid whose internal edges fit the bitmask representation.
pub const MAX_REPRESENTABLE_N: usize = 8;

/// An FPL configuration. Internal edges are bitmasks; the selected external
/// stubs are implied by `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridFpl {
    n: usize,
    /// Bit `y * (n - 1) + x`: edge `(x, y) - (x + 1, y)`.
    horizontal: u64,
    /// Bit `x * (n - 1) + y`: edge `(x, y) - (x, y + 1)`.
    vertical: u64,
}

/// An external stub: the boundary vertex and the outside point it reaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stub {
    pub vertex: (i32, i32),
    pub outside: (i32, i32),
}

/// The `2n` selected stubs in label order (index 0 is label 1).
pub fn external_stubs(n: usize) -> Vec<Stub> {
    let m = n as i32;
    let mut ring = Vec::with_capacity(4 * n);
    for y in (0..m).rev() {
        ring.push(Stub { vertex: (0, y), outside: (-1, y) });
    }
    for x in 0..m {
        ring.push(Stub { vertex: (x, 0), outside: (x, -1) });
    }
    for y in 0..m {
        ring.push(Stub { vertex: (m - 1, y), outside: (m, y) });
    }
    for x in (0..m).rev() {
        ring.push(Stub { vertex: (x, m - 1), outside: (x, m) });
    }
    ring.into_iter().step_by(2).collect()
}

impl GridFpl {
    pub fn n(&self) -> usize {
        self.n
    }

    fn h_bit(&self, x: usize, y: usize) -> u64 {
        1 << (y * (self.n - 1) + x)
    }

    fn v_bit(&self, x: usize, y: usize) -> u64 {
        1 << (x * (self.n - 1) + y)
    }

    pub fn has_horizontal(&self, x: usize, y: usize) -> bool {
        self.horizontal & self.h_bit(x, y) != 0
    }

    pub fn has_vertical(&self, x: usize, y: usize) -> bool {
        self.vertical & self.v_bit(x, y) != 0
    }

    /// Every edge as `[x1, y1, x2, y2]`, stubs included, in sorted order.
    pub fn edges(&self) -> Vec<[i32; 4]> {
        let n = self.n;
        let mut out = Vec::new();
        for y in 0..n {
            for x in 0..n.saturating_sub(1) {
                if self.has_horizontal(x, y) {
                    out.push([x as i32, y as i32, x as i32 + 1, y as i32]);
                }
            }
        }
        for x in 0..n {
            for y in 0..n.saturating_sub(1) {
                if self.has_vertical(x, y) {
                    out.push([x as i32, y as i32, x as i32, y as i32 + 1]);
                }
            }
        }
        for stub in external_stubs(n) {
            let (a, b) = (stub.vertex, stub.outside);
            let (p, q) = if a <= b { (a, b) } else { (b, a) };
            out.push([p.0, p.1, q.0, q.1]);
        }
        out.sort_unstable();
        out
    }

    /// Rebuilds a configuration from an edge list and checks it is fully packed.
    pub fn from_edges(n: usize, edges: &[[i32; 4]]) -> Result<Self> {
        if n == 0 || n > MAX_REPRESENTABLE_N {
            return Err(Error::InvalidConfiguration(format!("grid size {n} out of range")));
        }
        let mut fpl = GridFpl { n, horizontal: 0, vertical: 0 };
        let stubs: Vec<[i32; 4]> = external_stubs(n)
            .iter()
            .map(|s| {
                let (a, b) = if s.vertex <= s.outside { (s.vertex, s.outside) } else { (s.outside, s.vertex) };
                [a.0, a.1, b.0, b.1]
            })
            .collect();
        let inside = |v: i32| (0..n as i32).contains(&v);
        for e in edges {
            let [x1, y1, x2, y2] = *e;
            let (p, q) = if (x1, y1) <= (x2, y2) { ((x1, y1), (x2, y2)) } else { ((x2, y2), (x1, y1)) };
            let canon = [p.0, p.1, q.0, q.1];
            if stubs.contains(&canon) {
                continue;
            }
            let ok = inside(p.0) && inside(p.1) && inside(q.0) && inside(q.1);
            if ok && p.1 == q.1 && q.0 == p.0 + 1 {
                fpl.horizontal |= fpl.h_bit(p.0 as usize, p.1 as usize);
            } else if ok && p.0 == q.0 && q.1 == p.1 + 1 {
                fpl.vertical |= fpl.v_bit(p.0 as usize, p.1 as usize);
            } else {
                return Err(Error::InvalidConfiguration(format!("edge {e:?} is not in G_{n}")));
            }
        }
        for y in 0..n {
            for x in 0..n {
                if fpl.degree(x, y) != 2 {
                    return Err(Error::InvalidConfiguration(format!(
                        "vertex ({x}, {y}) has degree {}",
                        fpl.degree(x, y)
                    )));
                }
            }
        }
        Ok(fpl)
    }

    fn degree(&self, x: usize, y: usize) -> usize {
        let mut d = stub_count(self.n, x, y);
        if x > 0 && self.has_horizontal(x - 1, y) {
            d += 1;
        }
        if x + 1 < self.n && self.has_horizontal(x, y) {
            d += 1;
        }
        if y > 0 && self.has_vertical(x, y - 1) {
            d += 1;
        }
        if y + 1 < self.n && self.has_vertical(x, y) {
            d += 1;
        }
        d
    }

    fn neighbors(&self, x: usize, y: usize) -> Vec<(i32, i32)> {
        let (xi, yi) = (x as i32, y as i32);
        let mut out = Vec::with_capacity(2);
        if x > 0 && self.has_horizontal(x - 1, y) {
            out.push((xi - 1, yi));
        }
        if x + 1 < self.n && self.has_horizontal(x, y) {
            out.push((xi + 1, yi));
        }
        if y > 0 && self.has_vertical(x, y - 1) {
            out.push((xi, yi - 1));
        }
        if y + 1 < self.n && self.has_vertical(x, y) {
            out.push((xi, yi + 1));
        }
        out
    }

    /// Pairs of stub labels joined by a path.
    pub fn link_pattern(&self) -> LinkPattern {
        let stubs = external_stubs(self.n);
        let adjacent = |v: (i32, i32)| {
            let mut out = self.neighbors(v.0 as usize, v.1 as usize);
            out.extend(stubs.iter().filter(|s| s.vertex == v).map(|s| s.outside));
            out
        };
        let mut done = vec![false; stubs.len()];
        let mut pairs = Vec::with_capacity(self.n);
        for start in 0..stubs.len() {
            if done[start] {
                continue;
            }
            let mut prev = stubs[start].outside;
            let mut cur = stubs[start].vertex;
            let end = loop {
                let next =
                    adjacent(cur).into_iter().find(|&p| p != prev).expect("fully packed vertex has two neighbours");
                if let Some(j) = stubs.iter().position(|s| s.outside == next) {
                    break j;
                }
                prev = cur;
                cur = next;
            };
            done[start] = true;
            done[end] = true;
            pairs.push((start + 1, end + 1));
        }
        LinkPattern::new(pairs).expect("planar paths give a noncrossing matching")
    }
}

fn stub_count(n: usize, x: usize, y: usize) -> usize {
    external_stubs(n).iter().filter(|s| s.vertex == (x as i32, y as i32)).count()
}

fn check_bound(n: usize, limits: &Limits) -> Result<()> {
    let max = limits.fpl_max_n.min(MAX_REPRESENTABLE_N);
    if n == 0 || n > max {
        return Err(Error::BoundExceeded { what: "FPL", n, max });
    }
    Ok(())
}

/// Row-major backtracking. Each vertex decides its right and up edges once
/// its left and down edges are known, so its degree is final on departure.
fn visit_all(n: usize, mut emit: impl FnMut(GridFpl)) {
    let mut stubs = vec![0u8; n * n];
    for s in external_stubs(n) {
        stubs[s.vertex.1 as usize * n + s.vertex.0 as usize] += 1;
    }
    // degree accumulated from already-decided edges
    let mut degree: Vec<u8> = stubs.clone();
    let mut fpl = GridFpl { n, horizontal: 0, vertical: 0 };

    fn rec(idx: usize, n: usize, degree: &mut [u8], fpl: &mut GridFpl, emit: &mut dyn FnMut(GridFpl)) {
        if idx == n * n {
            emit(*fpl);
            return;
        }
        let (x, y) = (idx % n, idx / n);
        let need = 2 - degree[idx] as i32;
        let can_right = x + 1 < n;
        let can_up = y + 1 < n;
        for (right, up) in [(false, false), (true, false), (false, true), (true, true)] {
            if (right && !can_right) || (up && !can_up) {
                continue;
            }
            if right as i32 + up as i32 != need {
                continue;
            }
            if right && degree[idx + 1] >= 2 {
                continue;
            }
            if up && degree[idx + n] >= 2 {
                continue;
            }
            if right {
                degree[idx + 1] += 1;
                fpl.horizontal |= fpl.h_bit(x, y);
            }
            if up {
                degree[idx + n] += 1;
                fpl.vertical |= fpl.v_bit(x, y);
            }
            rec(idx + 1, n, degree, fpl, emit);
            if right {
                degree[idx + 1] -= 1;
                fpl.horizontal &= !fpl.h_bit(x, y);
            }
            if up {
                degree[idx + n] -= 1;
                fpl.vertical &= !fpl.v_bit(x, y);
            }
        }
    }

    rec(0, n, &mut degree, &mut fpl, &mut emit);
}

/// All FPLs of size `n`, sorted.
pub fn enumerate_fpl(n: usize, limits: &Limits) -> Result<Vec<GridFpl>> {
    check_bound(n, limits)?;
    let mut out = Vec::new();
    visit_all(n, |f| out.push(f));
    out.sort_unstable();
    Ok(out)
}

/// `A_π` for every `π ∈ D_n` (patterns with no configuration are listed with 0).
pub fn link_pattern_counts(n: usize, limits: &Limits) -> Result<BTreeMap<DyckWord, BigUint>> {
    check_bound(n, limits)?;
    let mut counts: BTreeMap<DyckWord, u64> = crate::dyck::enumerate_dyck(n).into_iter().map(|w| (w, 0)).collect();
    visit_all(n, |f| *counts.get_mut(&f.link_pattern().to_word()).expect("pattern in D_n") += 1);
    Ok(counts.into_iter().map(|(w, c)| (w, BigUint::from(c))).collect())
}

/// Number of FPLs with link pattern `π`.
pub fn a_pi(pi: &DyckWord, limits: &Limits) -> Result<BigUint> {
    let n = pi.n();
    check_bound(n, limits)?;
    let mut count = 0u64;
    visit_all(n, |f| {
        if f.link_pattern().to_word() == *pi {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

/// `π ∪ m = 0^m π 1^m`.
pub fn pi_union_m(pi: &DyckWord, m: usize) -> DyckWord {
    pi.with_outer_arcs(m)
}

/// `A_π(m) = A_{π ∪ m}`.
pub fn a_pi_m(pi: &DyckWord, m: usize, limits: &Limits) -> Result<BigUint> {
    a_pi(&pi_union_m(pi, m), limits)
}

#[derive(Serialize, Deserialize)]
struct GridFplJson {
    n: usize,
    edges: Vec<[i32; 4]>,
}

impl GridFpl {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GridFplJson { n: self.n, edges: self.edges() }).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: GridFplJson = serde_json::from_value(value.clone())?;
        GridFpl::from_edges(raw.n, &raw.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_dyck;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn stub_numbering_n2() {
        let s = external_stubs(2);
        assert_eq!(s[0].vertex, (0, 1));
        assert_eq!(s[0].outside, (-1, 1));
        assert_eq!(s[1].outside, (0, -1));
        assert_eq!(s[2].outside, (2, 0));
        assert_eq!(s[3].outside, (1, 2));
    }

    #[test]
    fn small_counts() {
        let lim = Limits::default();
        assert_eq!(enumerate_fpl(1, &lim).unwrap().len(), 1);
        assert_eq!(enumerate_fpl(2, &lim).unwrap().len(), 2);
        assert_eq!(enumerate_fpl(3, &lim).unwrap().len(), 7);
    }

    #[test]
    fn n2_by_hand() {
        // Vertical pairing joins stubs 1-2 and 3-4; horizontal pairing 1-4 and 2-3.
        let lim = Limits::default();
        let words: Vec<DyckWord> = enumerate_fpl(2, &lim).unwrap().iter().map(|f| f.link_pattern().to_word()).collect();
        assert!(words.contains(&w("0101")));
        assert!(words.contains(&w("0011")));
        let vertical_pairing = enumerate_fpl(2, &lim).unwrap().into_iter().find(|f| f.has_vertical(0, 0)).unwrap();
        assert_eq!(vertical_pairing.link_pattern().pairs(), &[(1, 2), (3, 4)]);
    }

    #[test]
    fn a_pi_values() {
        let lim = Limits::default();
        assert_eq!(a_pi(&w("01"), &lim).unwrap(), BigUint::from(1u32));
        assert_eq!(a_pi(&w("0011"), &lim).unwrap(), BigUint::from(1u32));
        let total: BigUint = enumerate_dyck(3).iter().map(|p| a_pi(p, &lim).unwrap()).sum();
        assert_eq!(total, BigUint::from(7u32));
        assert_eq!(a_pi_m(&w("01"), 0, &lim).unwrap(), BigUint::from(1u32));
        assert_eq!(a_pi_m(&w("01"), 1, &lim).unwrap(), BigUint::from(1u32));
        assert_eq!(a_pi_m(&w("01"), 2, &lim).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn patterns_sum_to_totals() {
        let lim = Limits::default();
        for n in 1..=5 {
            let counts = link_pattern_counts(n, &lim).unwrap();
            let total: BigUint = counts.values().sum();
            assert_eq!(total, BigUint::from(enumerate_fpl(n, &lim).unwrap().len()));
        }
    }

    #[test]
    fn every_config_is_fully_packed_and_noncrossing() {
        let lim = Limits::default();
        for n in 1..=5 {
            for f in enumerate_fpl(n, &lim).unwrap() {
                for y in 0..n {
                    for x in 0..n {
                        assert_eq!(f.degree(x, y), 2);
                    }
                }
                assert!(f.link_pattern().is_noncrossing());
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let lim = Limits { fpl_max_n: 3, ..Limits::default() };
        assert!(matches!(enumerate_fpl(4, &lim), Err(Error::BoundExceeded { .. })));
        assert!(enumerate_fpl(0, &lim).is_err());
    }

    #[test]
    fn json_round_trip() {
        let lim = Limits::default();
        for f in enumerate_fpl(3, &lim).unwrap() {
            assert_eq!(GridFpl::from_json(&f.to_json()).unwrap(), f);
        }
        let bad = serde_json::json!({"n": 2, "edges": [[0, 0, 1, 0]]});
        assert!(GridFpl::from_json(&bad).is_err());
    }
}
