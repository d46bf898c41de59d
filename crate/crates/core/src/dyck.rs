//! Dyck words and the link patterns they encode.
//!
//! A word of length `2n` over `{0,1}` is a Dyck word when it has `n` letters
//! of each kind and no prefix contains more `1`s than `0`s. The same word is
//! read three ways throughout the crate: as a noncrossing perfect matching of
//! `{1, ..., 2n}` (a link pattern), as a Ferrers diagram inside the staircase
//! `(n-1, ..., 1, 0)`, and as a boundary condition for triangles and puzzles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckWord {
    bits: Vec<u8>,
}

impl DyckWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        let render = || bits.iter().map(|&b| if b <= 9 { char::from(b'0' + b) } else { '?' }).collect();
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidWord { word: render(), reason: "letters must be 0 or 1" });
        }
        if !bits.len().is_multiple_of(2) {
            return Err(Error::InvalidWord { word: render(), reason: "odd length" });
        }
        let mut height = 0i64;
        for &b in &bits {
            height += if b == 0 { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidWord { word: render(), reason: "a prefix has more 1s than 0s" });
            }
        }
        if height != 0 {
            return Err(Error::InvalidWord { word: render(), reason: "unequal numbers of 0s and 1s" });
        }
        Ok(DyckWord { bits })
    }

    pub fn empty() -> Self {
        DyckWord { bits: Vec::new() }
    }

    /// `0^n 1^n`, the word of the empty diagram.
    pub fn minimal(n: usize) -> Self {
        let mut bits = vec![0; n];
        bits.extend(std::iter::repeat_n(1, n));
        DyckWord { bits }
    }

    /// `(01)^n`, the word of the full staircase.
    pub fn alternating(n: usize) -> Self {
        DyckWord { bits: (0..2 * n).map(|i| (i % 2) as u8).collect() }
    }

    /// Half of the word length.
    pub fn n(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    /// Number of pairs `i < j` with letters `(1, 0)`.
    pub fn degree(&self) -> usize {
        let mut ones = 0;
        let mut inversions = 0;
        for &b in &self.bits {
            if b == 1 {
                ones += 1;
            } else {
                inversions += ones;
            }
        }
        inversions
    }

    /// The Ferrers diagram traced by the word: every `0` contributes a row
    /// whose length is the number of `1`s read before it.
    pub fn diagram(&self) -> Partition {
        let mut ones = 0;
        let mut rows = Vec::with_capacity(self.n());
        for &b in &self.bits {
            if b == 1 {
                ones += 1;
            } else {
                rows.push(ones);
            }
        }
        rows.reverse();
        Partition::from_sorted(rows)
    }

    /// Inverse of [`DyckWord::diagram`] for a diagram inside the staircase of size `n`.
    pub fn from_diagram(lambda: &Partition, n: usize) -> Result<Self> {
        if !lambda.fits_staircase(n) {
            return Err(Error::OutsideStaircase { partition: lambda.to_string(), n });
        }
        let mut bits = Vec::with_capacity(2 * n);
        let mut ones = 0;
        for r in 0..n {
            let row = lambda.part(n - 1 - r);
            bits.extend(std::iter::repeat_n(1, row - ones));
            ones = row;
            bits.push(0);
        }
        bits.extend(std::iter::repeat_n(1, n - ones));
        Ok(DyckWord { bits })
    }

    /// Reverse-complement `w*_i = 1 - w_{2n+1-i}`; its diagram is the transpose.
    pub fn conjugate(&self) -> Self {
        DyckWord { bits: self.bits.iter().rev().map(|b| 1 - b).collect() }
    }

    /// Containment of diagrams.
    pub fn leq(&self, other: &DyckWord) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), got: other.n() });
        }
        Ok(other.diagram().contains(&self.diagram()))
    }

    /// `0^m w 1^m`: the pattern with `m` extra nested outer arcs.
    pub fn with_outer_arcs(&self, m: usize) -> Self {
        let mut bits = vec![0; m];
        bits.extend_from_slice(&self.bits);
        bits.extend(std::iter::repeat_n(1, m));
        DyckWord { bits }
    }

    pub fn link_pattern(&self) -> LinkPattern {
        let mut stack = Vec::new();
        let mut pairs = Vec::with_capacity(self.n());
        for (pos, &b) in self.bits.iter().enumerate() {
            if b == 0 {
                stack.push(pos + 1);
            } else {
                let open = stack.pop().expect("validated Dyck word");
                pairs.push((open, pos + 1));
            }
        }
        pairs.sort_unstable();
        LinkPattern { pairs }
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidWord { word: s.to_string(), reason: "letters must be 0 or 1" }),
            })
            .collect::<Result<Vec<u8>>>()?;
        DyckWord::new(bits)
    }
}

impl TryFrom<String> for DyckWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DyckWord> for String {
    fn from(w: DyckWord) -> String {
        w.to_string()
    }
}

/// All Dyck words of half-length `n`, in lexicographic order.
pub fn enumerate_dyck(n: usize) -> Vec<DyckWord> {
    fn extend(prefix: &mut Vec<u8>, open: usize, close: usize, n: usize, out: &mut Vec<DyckWord>) {
        if prefix.len() == 2 * n {
            out.push(DyckWord { bits: prefix.clone() });
            return;
        }
        if open < n {
            prefix.push(0);
            extend(prefix, open + 1, close, n, out);
            prefix.pop();
        }
        if close < open {
            prefix.push(1);
            extend(prefix, open, close + 1, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    out
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// A noncrossing perfect matching of `{1, ..., 2n}`, pairs stored as `(i, j)`
/// with `i < j`, sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinkPattern {
    pairs: Vec<(usize, usize)>,
}

impl LinkPattern {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let size = 2 * pairs.len();
        let mut seen = vec![false; size + 1];
        for &(a, b) in &pairs {
            if a == 0 || b > size || a == b || seen[a] || seen[b] {
                return Err(Error::InvalidConfiguration(format!("pairs {pairs:?} do not partition 1..={size}")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        let pattern = LinkPattern { pairs };
        if !pattern.is_noncrossing() {
            return Err(Error::InvalidConfiguration(format!("pairs {:?} cross", pattern.pairs)));
        }
        Ok(pattern)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.pairs.iter().all(|&(i, k)| self.pairs.iter().all(|&(j, l)| !(i < j && j < k && k < l)))
    }

    /// Opening points get `0`, closing points `1`.
    pub fn to_word(&self) -> DyckWord {
        let mut bits = vec![0u8; 2 * self.pairs.len()];
        for &(_, j) in &self.pairs {
            bits[j - 1] = 1;
        }
        DyckWord { bits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_dyck(0), vec![DyckWord::empty()]);
        assert_eq!(enumerate_dyck(1), vec![w("01")]);
        let d3 = enumerate_dyck(3);
        assert_eq!(d3.len(), 5);
        assert!(d3.windows(2).all(|p| p[0] < p[1]));
        let d5 = enumerate_dyck(5);
        assert_eq!(d5.len(), 42);
        assert!(d5.contains(&w("0010100111")));
    }

    #[test]
    fn catalan_matches_enumeration() {
        for n in 0..=8 {
            assert_eq!(catalan(n), BigUint::from(enumerate_dyck(n).len()));
        }
    }

    #[test]
    fn rejects_bad_words() {
        assert!("10".parse::<DyckWord>().is_err());
        assert!("001".parse::<DyckWord>().is_err());
        assert!("0012".parse::<DyckWord>().is_err());
        assert!("0110".parse::<DyckWord>().is_err());
    }

    #[test]
    fn link_patterns() {
        assert_eq!(w("01").link_pattern().pairs(), &[(1, 2)]);
        assert_eq!(w("0011").link_pattern().pairs(), &[(1, 4), (2, 3)]);
        assert_eq!(w("0010100111").link_pattern().pairs(), &[(1, 10), (2, 3), (4, 5), (6, 9), (7, 8)]);
        for n in 0..=6 {
            for word in enumerate_dyck(n) {
                let lp = word.link_pattern();
                assert!(lp.is_noncrossing());
                assert_eq!(lp.to_word(), word);
            }
        }
    }

    #[test]
    fn crossing_pairs_rejected() {
        assert!(LinkPattern::new([(1, 3), (2, 4)]).is_err());
        assert!(LinkPattern::new([(1, 2), (2, 3)]).is_err());
        assert!(LinkPattern::new([(1, 4), (2, 3)]).is_ok());
    }

    #[test]
    fn degrees() {
        assert_eq!(w("0011").degree(), 0);
        assert_eq!(w("0101").degree(), 1);
        assert_eq!(w("0010100111").degree(), 5);
    }

    #[test]
    fn diagrams() {
        assert!(DyckWord::minimal(4).diagram().is_empty());
        assert_eq!(w("0010100111").diagram().parts(), &[2, 2, 1]);
        for n in 1..=4 {
            let stair: Vec<usize> = (1..n).rev().collect();
            assert_eq!(DyckWord::alternating(n).diagram().parts(), stair.as_slice());
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(w("0011").conjugate(), w("0011"));
        assert_eq!(w("0101").conjugate(), w("0101"));
        for word in enumerate_dyck(3) {
            let c = word.conjugate();
            assert_eq!(c.conjugate(), word);
            assert_eq!(c.diagram(), word.diagram().transpose());
        }
    }

    #[test]
    fn order() {
        assert!(w("0011").leq(&w("0101")).unwrap());
        assert!(!w("0101").leq(&w("0011")).unwrap());
        assert!(w("01").leq(&w("0011")).is_err());
    }

    #[test]
    fn outer_arcs() {
        assert_eq!(w("01").with_outer_arcs(0), w("01"));
        assert_eq!(w("01").with_outer_arcs(2), w("000111"));
        assert_eq!(w("0011").with_outer_arcs(1), w("000111"));
        let lp = w("0101").with_outer_arcs(2).link_pattern();
        assert!(lp.pairs().contains(&(1, 8)));
        assert!(lp.pairs().contains(&(2, 7)));
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&w("0101")).unwrap();
        assert_eq!(json, "\"0101\"");
        let back: DyckWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w("0101"));
        assert!(serde_json::from_str::<DyckWord>("\"10\"").is_err());
    }
}
