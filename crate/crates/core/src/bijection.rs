//! The map from puzzles to oriented TFPLs built from ten local rules, and its
//! inverse on boundaries with `d(σ) + d(τ) = d(π)`.
//!
//! Coordinates: strip `Y` of the puzzle becomes row `Y` of the triangle. The
//! `\` edge `B[Y][k]` becomes the even vertex `(Y + 2k, Y)` and the `/` edge
//! `S[Y][k]`, `k >= 1`, the odd vertex `(Y + 2k - 1, Y)`; the `/` edges of the
//! left side are dropped. The horizontal edge `H[Y][k]` becomes the vertical
//! edge below `(Y + 2k, Y)`, which for `Y = 0` is the stub `e_{k+1}`.
//!
//! Each upward triangle draws that vertical edge and the horizontal edge
//! joining its two diagonal vertices; each downward triangle draws the
//! horizontal edge joining its two diagonal vertices.

use std::sync::OnceLock;

use crate::dyck::DyckWord;
use crate::error::{Error, Result};
use crate::puzzle::{edge_count, edge_index, validate_puzzle, Puzzle, Side, ALLOWED};
use crate::tfpl::{canonical_orientation, Arc, Edge, OrientedTfplConfig, Point, TfplConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertical {
    Up,
    Down,
    Absent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Horizontal {
    Right,
    Left,
    Absent,
}

impl Vertical {
    pub fn from_label(label: u8) -> Vertical {
        match label {
            0 => Vertical::Up,
            1 => Vertical::Down,
            _ => Vertical::Absent,
        }
    }

    pub fn label(self) -> u8 {
        match self {
            Vertical::Up => 0,
            Vertical::Down => 1,
            Vertical::Absent => 2,
        }
    }
}

/// The oriented edges a unit triangle draws. For an upward triangle the
/// vertical edge is the one below its right diagonal vertex; for a downward
/// one it is the one above its right diagonal vertex, shared with the upward
/// triangle on top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fragment {
    pub vertical: Vertical,
    pub horizontal: Horizontal,
}

/// Fragments indexed like [`ALLOWED`], one array per triangle orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalRuleTable {
    pub up: [Fragment; 5],
    pub down: [Fragment; 5],
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    In,
    Out,
}

fn vertical_flow(v: Vertical, triangle_up: bool) -> Option<Flow> {
    // upward triangle: the vertex is the upper end; downward: the lower end
    match (v, triangle_up) {
        (Vertical::Absent, _) => None,
        (Vertical::Up, true) | (Vertical::Down, false) => Some(Flow::In),
        (Vertical::Down, true) | (Vertical::Up, false) => Some(Flow::Out),
    }
}

fn horizontal_flow(h: Horizontal, at_left_end: bool) -> Option<Flow> {
    match (h, at_left_end) {
        (Horizontal::Absent, _) => None,
        (Horizontal::Right, true) | (Horizontal::Left, false) => Some(Flow::Out),
        (Horizontal::Right, false) | (Horizontal::Left, true) => Some(Flow::In),
    }
}

fn balanced(flows: [Option<Flow>; 3]) -> bool {
    let ins = flows.iter().filter(|f| **f == Some(Flow::In)).count();
    let outs = flows.iter().filter(|f| **f == Some(Flow::Out)).count();
    ins == 1 && outs == 1
}

fn rule_error(invariant: &'static str, detail: String) -> Error {
    Error::RuleTable { invariant, detail }
}

impl LocalRuleTable {
    pub fn fragment(&self, up: bool, labels: [u8; 3]) -> Option<Fragment> {
        let i = ALLOWED.iter().position(|t| *t == labels)?;
        Some(if up { self.up[i] } else { self.down[i] })
    }

    /// Checks the four structural requirements, naming the first one violated.
    pub fn validate(&self) -> Result<()> {
        for (up, frags) in [(true, &self.up), (false, &self.down)] {
            for (t, f) in ALLOWED.iter().zip(frags) {
                if f.vertical != Vertical::from_label(t[0]) {
                    return Err(rule_error(
                        "horizontal-edge rule",
                        format!("{} triangle {t:?} draws {:?}", if up { "up" } else { "down" }, f.vertical),
                    ));
                }
            }
        }
        // both triangles on a horizontal edge read its label the same way
        for tu in ALLOWED {
            for td in ALLOWED.iter().filter(|td| td[0] == tu[0]) {
                let (a, b) = (self.fragment(true, tu).unwrap(), self.fragment(false, *td).unwrap());
                if a.vertical != b.vertical {
                    return Err(rule_error("compatibility", format!("{tu:?} above {td:?}")));
                }
            }
        }
        for (name, frags) in [("up", &self.up), ("down", &self.down)] {
            for i in 0..5 {
                for j in i + 1..5 {
                    if frags[i] == frags[j] {
                        return Err(rule_error(
                            "distinct",
                            format!("{name} triangles {:?} and {:?} draw the same edges", ALLOWED[i], ALLOWED[j]),
                        ));
                    }
                }
            }
        }
        match self.unbalanced_pairs().first() {
            Some((u, d, side)) => Err(rule_error("balance", format!("up {u:?} next to down {d:?} at a {side} vertex"))),
            None => Ok(()),
        }
    }

    /// Adjacent (upward, downward) pairs whose shared vertex does not get one
    /// arc in and one arc out.
    fn unbalanced_pairs(&self) -> Vec<([u8; 3], [u8; 3], &'static str)> {
        let mut bad = Vec::new();
        for (iu, u) in ALLOWED.iter().enumerate() {
            for (id, d) in ALLOWED.iter().enumerate() {
                let (fu, fd) = (self.up[iu], self.down[id]);
                // even vertex: right end of the upward triangle, left end of the downward one
                if u[1] == d[1] {
                    let flows = [
                        vertical_flow(fu.vertical, true),
                        horizontal_flow(fu.horizontal, false),
                        horizontal_flow(fd.horizontal, true),
                    ];
                    if !balanced(flows) {
                        bad.push((*u, *d, "\\"));
                    }
                }
                // odd vertex: right end of the downward triangle, left end of the upward one
                if u[2] == d[2] {
                    let flows = [
                        vertical_flow(fd.vertical, false),
                        horizontal_flow(fd.horizontal, false),
                        horizontal_flow(fu.horizontal, true),
                    ];
                    if !balanced(flows) {
                        bad.push((*u, *d, "/"));
                    }
                }
            }
        }
        bad
    }

    /// Searches all horizontal fragments compatible with the vertical rule for
    /// tables passing [`validate`](Self::validate). Fails unless exactly one does.
    pub fn derive() -> Result<Self> {
        const H: [Horizontal; 3] = [Horizontal::Absent, Horizontal::Right, Horizontal::Left];
        let vertical = |i: usize| Vertical::from_label(ALLOWED[i][0]);
        let mut found = Vec::new();
        for code in 0..3usize.pow(10) {
            let mut c = code;
            let mut pick = || {
                let h = H[c % 3];
                c /= 3;
                h
            };
            let up = std::array::from_fn(|i| Fragment { vertical: vertical(i), horizontal: pick() });
            let down = std::array::from_fn(|i| Fragment { vertical: vertical(i), horizontal: pick() });
            let table = LocalRuleTable { up, down };
            if table.validate().is_ok() {
                found.push(table);
            }
        }
        match found.len() {
            1 => Ok(found[0]),
            k => Err(rule_error("uniqueness", format!("{k} tables satisfy the local constraints"))),
        }
    }

    /// The derived table, validated once.
    pub fn standard() -> &'static LocalRuleTable {
        static TABLE: OnceLock<LocalRuleTable> = OnceLock::new();
        TABLE.get_or_init(|| LocalRuleTable::derive().expect("local rules are uniquely determined"))
    }

    /// A copy of `self` with one upward fragment replaced, for negative tests.
    pub fn with_up_fragment(mut self, labels: [u8; 3], f: Fragment) -> Self {
        if let Some(i) = ALLOWED.iter().position(|t| *t == labels) {
            self.up[i] = f;
        }
        self
    }

    fn lookup(&self, up: bool, vertical: Vertical, horizontal: Horizontal) -> Option<[u8; 3]> {
        let frags = if up { &self.up } else { &self.down };
        let want = Fragment { vertical, horizontal };
        frags.iter().position(|f| *f == want).map(|i| ALLOWED[i])
    }
}

fn horizontal_arc(left: Point, right: Point, h: Horizontal) -> Option<Arc> {
    match h {
        Horizontal::Right => Some(Arc::new(left, right)),
        Horizontal::Left => Some(Arc::new(right, left)),
        Horizontal::Absent => None,
    }
}

fn vertical_below(top: Point, v: Vertical) -> Option<Arc> {
    let bottom = (top.0, top.1 - 1);
    match v {
        Vertical::Up => Some(Arc::new(bottom, top)),
        Vertical::Down => Some(Arc::new(top, bottom)),
        Vertical::Absent => None,
    }
}

/// `Φ⃗` with an explicit rule table.
pub fn phi_oriented_with(p: &Puzzle, table: &LocalRuleTable) -> Result<OrientedTfplConfig> {
    table.validate()?;
    if !validate_puzzle(p)? {
        return Err(Error::InvalidPuzzle("a unit triangle is not authorized".into()));
    }
    let (sigma, tau, pi) = p.boundary()?;
    let n = p.n();
    let mut arcs = Vec::new();
    for y in 0..2 * n {
        let m = 2 * n - y;
        let yi = y as i32;
        for k in 0..m {
            let right = (yi + 2 * k as i32, yi);
            let left = (right.0 - 1, yi);
            let u = [p.h(y, k), p.b(y, k), p.s(y, k)];
            let f = table.fragment(true, u).expect("validated triangle");
            arcs.extend(vertical_below(right, f.vertical));
            // the left-side vertex of the first triangle is removed with its edge
            if k > 0 {
                arcs.extend(horizontal_arc(left, right, f.horizontal));
            }
            if k + 1 < m {
                let d = [p.h(y + 1, k), p.b(y, k), p.s(y, k + 1)];
                let f = table.fragment(false, d).expect("validated triangle");
                arcs.extend(horizontal_arc(right, (right.0 + 1, yi), f.horizontal));
            }
        }
    }
    OrientedTfplConfig::new(sigma, tau, pi, arcs)
}

pub fn phi_oriented(p: &Puzzle) -> Result<OrientedTfplConfig> {
    phi_oriented_with(p, LocalRuleTable::standard())
}

/// The underlying TFPL of `Φ⃗(P)`, with the puzzle's bottom word as `π`.
pub fn phi(p: &Puzzle) -> Result<TfplConfig> {
    let f = phi_oriented(p)?;
    TfplConfig::new(f.sigma().clone(), f.tau().clone(), f.pi().clone(), f.underlying_edges())
}

fn check_balanced(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord) -> Result<()> {
    let lhs = sigma.degree() + tau.degree();
    if lhs != pi.degree() {
        return Err(Error::Unbalanced { lhs, rhs: pi.degree() });
    }
    Ok(())
}

/// Reads the puzzle back from an oriented configuration, failing when some
/// local picture is not one of the ten fragments.
pub fn phi_oriented_inverse(f: &OrientedTfplConfig) -> Result<Puzzle> {
    let table = LocalRuleTable::standard();
    let n = f.n();
    let arc = |a: Point, b: Point| f.arc_on(&Edge::new(a, b));
    let not_in_image = |what: String| Error::NotInImage(what);

    for a in f.arcs() {
        if a.edge().is_vertical() && (a.edge().a.0 + a.edge().a.1).rem_euclid(2) == 0 {
            return Err(not_in_image(format!("even vertical edge {:?}", a.edge())));
        }
    }

    let mut labels = vec![u8::MAX; edge_count(n)];
    let set = |labels: &mut [u8], side: Side, y: usize, k: usize, v: u8| -> Result<()> {
        let i = edge_index(n, side, y, k);
        if labels[i] != u8::MAX && labels[i] != v {
            return Err(not_in_image(format!("conflicting labels on {side:?}[{y}][{k}]")));
        }
        labels[i] = v;
        Ok(())
    };

    for y in 0..2 * n {
        let m = 2 * n - y;
        let yi = y as i32;
        for k in 0..m {
            let right = (yi + 2 * k as i32, yi);
            let v = match arc((right.0, yi - 1), right) {
                Some(a) if a.to == right => Vertical::Up,
                Some(_) => Vertical::Down,
                None => Vertical::Absent,
            };
            set(&mut labels, Side::Horizontal, y, k, v.label())?;
        }
    }
    let h = |labels: &[u8], y: usize, k: usize| labels[edge_index(n, Side::Horizontal, y, k)];
    let horizontal = |left: Point, right: Point| match arc(left, right) {
        Some(a) if a.from == left => Horizontal::Right,
        Some(_) => Horizontal::Left,
        None => Horizontal::Absent,
    };

    for y in 0..2 * n {
        let m = 2 * n - y;
        let yi = y as i32;
        set(&mut labels, Side::Slash, y, 0, f.sigma().bits()[y])?;
        for k in 0..m {
            let right = (yi + 2 * k as i32, yi);
            let t = h(&labels, y, k);
            let u = if k == 0 {
                let s = f.sigma().bits()[y];
                ALLOWED.iter().copied().find(|u| u[0] == t && u[2] == s)
            } else {
                table.lookup(true, Vertical::from_label(t), horizontal((right.0 - 1, yi), right))
            };
            let u = u.ok_or_else(|| not_in_image(format!("no upward triangle fits at strip {y}, position {k}")))?;
            set(&mut labels, Side::Backslash, y, k, u[1])?;
            set(&mut labels, Side::Slash, y, k, u[2])?;
            if k + 1 < m {
                let top = h(&labels, y + 1, k);
                let d = table
                    .lookup(false, Vertical::from_label(top), horizontal(right, (right.0 + 1, yi)))
                    .ok_or_else(|| not_in_image(format!("no downward triangle fits at strip {y}, position {k}")))?;
                set(&mut labels, Side::Backslash, y, k, d[1])?;
                set(&mut labels, Side::Slash, y, k + 1, d[2])?;
            }
        }
    }
    let p = Puzzle::from_labels(n, labels)?;
    if !validate_puzzle(&p)? {
        return Err(not_in_image("reconstructed labeling is not a puzzle".into()));
    }
    if p.boundary()? != (f.sigma().clone(), f.tau().clone(), f.pi().clone()) {
        return Err(not_in_image("reconstructed puzzle has another boundary".into()));
    }
    if &phi_oriented(&p)? != f {
        return Err(not_in_image("local pictures do not assemble back".into()));
    }
    Ok(p)
}

/// The unique puzzle `P` with `Φ(P) = f`. Requires `d(σ) + d(τ) = d(π)`.
pub fn phi_inverse(f: &TfplConfig) -> Result<Puzzle> {
    check_balanced(f.sigma(), f.tau(), f.pi())?;
    phi_oriented_inverse(&canonical_orientation(f))
}

/// No vertical arc with an even lower vertex and no two consecutive arcs
/// pointing left, in the canonical orientation of `f`.
pub fn check_balanced_characterization(f: &TfplConfig) -> bool {
    let o = canonical_orientation(f);
    let even_vertical =
        o.arcs().iter().any(|a| a.edge().is_vertical() && (a.edge().a.0 + a.edge().a.1).rem_euclid(2) == 0);
    if even_vertical {
        return false;
    }
    let left_into: std::collections::HashSet<Point> =
        o.arcs().iter().filter(|a| a.points_left()).map(|a| a.to).collect();
    !o.arcs().iter().any(|a| a.points_left() && left_into.contains(&a.from))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_dyck;
    use crate::puzzle::enumerate_puzzles;
    use crate::tfpl::enumerate_tfpl;
    use crate::Limits;

    fn frag(vertical: Vertical, horizontal: Horizontal) -> Fragment {
        Fragment { vertical, horizontal }
    }

    #[test]
    fn derived_table_is_frozen() {
        use Horizontal::{Left, Right};
        use Vertical::{Down, Up};
        let expected = LocalRuleTable {
            up: [
                frag(Up, Horizontal::Absent),
                frag(Down, Right),
                frag(Up, Left),
                frag(Down, Horizontal::Absent),
                frag(Vertical::Absent, Right),
            ],
            down: [
                frag(Up, Right),
                frag(Down, Horizontal::Absent),
                frag(Up, Horizontal::Absent),
                frag(Down, Left),
                frag(Vertical::Absent, Right),
            ],
        };
        assert_eq!(*LocalRuleTable::standard(), expected);
        assert!(expected.validate().is_ok());
    }

    #[test]
    fn corrupted_tables_name_the_invariant() {
        let t = *LocalRuleTable::standard();
        let name = |t: LocalRuleTable| match t.validate() {
            Err(Error::RuleTable { invariant, .. }) => invariant,
            other => panic!("expected a rule table error, got {other:?}"),
        };
        let wrong_vertical = t.with_up_fragment([0, 0, 0], frag(Vertical::Down, Horizontal::Absent));
        assert_eq!(name(wrong_vertical), "horizontal-edge rule");
        let twin = t.with_up_fragment([0, 0, 0], frag(Vertical::Up, Horizontal::Left));
        assert_eq!(name(twin), "distinct");
        let unbalanced = t.with_up_fragment([0, 0, 0], frag(Vertical::Up, Horizontal::Right));
        assert_eq!(name(unbalanced), "balance");
    }

    #[test]
    fn minimal_boundary_round_trip() {
        for n in 1..=3 {
            let m = DyckWord::minimal(n);
            let p = enumerate_puzzles(&m, &m, &m, &Limits::default()).unwrap().remove(0);
            let f = phi(&p).unwrap();
            assert_eq!(enumerate_tfpl(&m, &m, &m, &Limits::default()).unwrap(), vec![f.clone()]);
            assert_eq!(phi_inverse(&f).unwrap(), p);
            assert!(check_balanced_characterization(&f));
        }
    }

    #[test]
    fn phi_on_all_small_puzzles() {
        let words = enumerate_dyck(2);
        for s in &words {
            for t in &words {
                for pi in &words {
                    for p in enumerate_puzzles(s, t, pi, &Limits::default()).unwrap() {
                        let o = phi_oriented(&p).unwrap();
                        assert_eq!(canonical_orientation(&phi(&p).unwrap()), o);
                        assert!(o.classify().closed.is_empty());
                        assert_eq!(phi_oriented_inverse(&o).unwrap(), p);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_refuses_unbalanced() {
        let (s, t, p) = (DyckWord::minimal(2), DyckWord::minimal(2), "0101".parse::<DyckWord>().unwrap());
        let fs = enumerate_tfpl(&s, &t, &p, &Limits::default()).unwrap();
        assert!(!fs.is_empty());
        for f in fs {
            assert!(matches!(phi_inverse(&f), Err(Error::Unbalanced { .. })));
            assert!(!check_balanced_characterization(&f));
        }
    }
}
