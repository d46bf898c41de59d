//! Ferrers diagrams and their cell statistics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition drawn as a Ferrers diagram, rows from the top.
///
/// Parts are weakly decreasing and strictly positive. The ambient staircase is
/// not part of the value: the same diagram is reused across every `D_n` that
/// contains it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|p| p[0] >= p[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width).map(|c| self.parts.iter().take_while(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// `self ⊇ other` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Containment in the staircase `(n-1, n-2, ..., 0)`.
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.parts.iter().enumerate().all(|(i, &p)| i < n && p < n - i)
    }

    /// Cells as `(row, column)`, 0-based, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Column index minus row index.
    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// Cells to the right, cells below, and the cell itself.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Product of all hook lengths, `1` for the empty diagram.
    pub fn hook_product(&self) -> BigUint {
        self.cells().map(|(r, c)| BigUint::from(self.hook(r, c))).fold(BigUint::one(), |acc, h| acc * h)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string and `"0"` both give `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// All partitions of `k`, in reverse lexicographic order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            extend(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(k, k, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer` (including `∅` and `outer`).
pub fn subdiagrams(outer: &Partition) -> Vec<Partition> {
    fn extend(outer: &Partition, row: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == outer.len() {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for p in 0..=outer.part(row).min(max) {
            prefix.push(p);
            extend(outer, row + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(outer, 0, usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2,2,1").parts(), &[2, 2, 1]);
        assert_eq!(p("3,0").parts(), &[3]);
        assert!(p("").is_empty());
        assert!(p("0").is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("4,2,2").to_string(), "4,2,2");
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::empty().hook_product(), BigUint::one());
        assert_eq!(p("1").hook_product(), BigUint::one());
        assert_eq!(p("2,2,1").hook_product(), BigUint::from(24u32));
        // (3,2,1): hooks 5,3,1,3,1,1
        assert_eq!(p("3,2,1").hook_product(), BigUint::from(45u32));
    }

    #[test]
    fn transpose_and_containment() {
        assert_eq!(p("2,2,1").transpose(), p("3,2"));
        assert_eq!(p("4,1").transpose().transpose(), p("4,1"));
        assert!(p("3,2").contains(&p("2,2")));
        assert!(!p("3,2").contains(&p("1,1,1")));
        assert!(p("2,1").fits_staircase(3));
        assert!(!p("2,1").fits_staircase(2));
        assert!(!p("1,1,1").fits_staircase(3));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(subdiagrams(&p("2,1")).len(), 5);
        assert_eq!(subdiagrams(&Partition::empty()), vec![Partition::empty()]);
    }
}
