//! Littlewood–Richardson coefficients by the tableau rule.
//!
//! Shares nothing with the puzzle enumerator, so the two can check each other.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// A filling of `outer / inner`. `rows[r]` holds the entries of row `r`
/// from column `inner[r]` on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        let start = self.inner.part(r);
        c.checked_sub(start).and_then(|i| self.rows.get(r)?.get(i).copied())
    }

    /// Right to left along each row, rows top to bottom.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for v in self.rows.iter().flatten() {
            if counts.len() < *v {
                counts.resize(*v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Semistandard with a lattice reverse reading word.
    pub fn is_lr(&self) -> bool {
        for r in 0..self.rows.len() {
            for c in self.inner.part(r)..self.outer.part(r) {
                let Some(v) = self.entry(r, c) else { return false };
                if v == 0 {
                    return false;
                }
                if c > self.inner.part(r) && self.entry(r, c - 1).is_some_and(|left| left > v) {
                    return false;
                }
                if r > 0 && self.entry(r - 1, c).is_some_and(|up| up >= v) {
                    return false;
                }
            }
        }
        let mut counts: Vec<usize> = Vec::new();
        for v in self.reverse_reading_word() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
            if v > 1 && counts[v - 1] > counts[v - 2] {
                return false;
            }
        }
        true
    }
}

fn applicable(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lambda.contains(mu) && lambda.contains(nu) && lambda.size() == mu.size() + nu.size()
}

/// Fills the skew cells in reverse reading order, keeping every prefix lattice.
fn fill(lambda: &Partition, mu: &Partition, nu: &Partition, emit: &mut dyn FnMut(&[Vec<usize>])) {
    let mut rows: Vec<Vec<usize>> = (0..lambda.len()).map(|r| vec![0; lambda.part(r) - mu.part(r)]).collect();
    let order: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c))).collect();
    let mut used = vec![0usize; nu.len()];

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        order: &[(usize, usize)],
        mu: &Partition,
        nu: &Partition,
        rows: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&(r, c)) = order.get(i) else {
            emit(rows);
            return;
        };
        let at = |rows: &Vec<Vec<usize>>, r: usize, c: usize| -> Option<usize> {
            c.checked_sub(mu.part(r)).and_then(|j| rows[r].get(j).copied())
        };
        for v in 1..=nu.len() {
            if used[v - 1] >= nu.part(v - 1) || (v > 1 && used[v - 1] + 1 > used[v - 2]) {
                continue;
            }
            // the right neighbour is already placed and must not be smaller
            if at(rows, r, c + 1).is_some_and(|right| right < v) {
                continue;
            }
            if r > 0 && at(rows, r - 1, c).is_some_and(|up| up >= v) {
                continue;
            }
            rows[r][c - mu.part(r)] = v;
            used[v - 1] += 1;
            go(i + 1, order, mu, nu, rows, used, emit);
            used[v - 1] -= 1;
            rows[r][c - mu.part(r)] = 0;
        }
    }

    go(0, &order, mu, nu, &mut rows, &mut used, emit);
}

/// All LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    if applicable(lambda, mu, nu) {
        fill(lambda, mu, nu, &mut |rows| {
            out.push(SkewTableau { outer: lambda.clone(), inner: mu.clone(), rows: rows.to_vec() });
        });
    }
    out
}

type Key = (Partition, Partition, Partition);

fn memo() -> &'static Mutex<HashMap<Key, BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<Key, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `c^λ_{μ,ν}`; zero unless `μ, ν ⊆ λ` and `|μ| + |ν| = |λ|`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if !applicable(lambda, mu, nu) {
        return BigUint::default();
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = memo().lock().expect("lr memo poisoned").get(&key) {
        return v.clone();
    }
    let mut count = 0u64;
    fill(lambda, mu, nu, &mut |_| count += 1);
    let value = BigUint::from(count);
    memo().lock().expect("lr memo poisoned").insert(key, value.clone());
    value
}

/// `s_μ s_ν = Σ c^λ_{μ,ν} s_λ`, nonzero terms only.
pub fn schur_product_expand(mu: &Partition, nu: &Partition, max_size: usize) -> Result<BTreeMap<Partition, BigUint>> {
    let size = mu.size() + nu.size();
    if size > max_size {
        return Err(Error::BoundExceeded { what: "schur product", n: size, max: max_size });
    }
    Ok(partitions_of(size)
        .into_iter()
        .filter_map(|lambda| {
            let c = lr_coefficient(&lambda, mu, nu);
            (c != BigUint::default()).then_some((lambda, c))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(l: &str, m: &str, n: &str) -> u64 {
        lr_coefficient(&p(l), &p(m), &p(n)).try_into().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(c("2,1", "", "2,1"), 1);
        assert_eq!(c("2,1", "1", "1"), 0);
        assert_eq!(c("2,1", "1", "1,1"), 1);
        assert_eq!(c("2,1", "2", "1"), 1);
        assert_eq!(c("3,2,1", "2,1", "2,1"), 2);
        assert_eq!(c("2", "1", "1"), 1);
        assert_eq!(c("3", "2", "1,1"), 0);
        assert_eq!(c("2,1", "2", "2"), 0);
    }

    #[test]
    fn witnesses_are_lr_tableaux() {
        let ts = lr_tableaux(&p("3,2,1"), &p("2,1"), &p("2,1"));
        assert_eq!(ts.len(), 2);
        for t in &ts {
            assert!(t.is_lr());
            assert_eq!(t.content(), vec![2, 1]);
        }
        let bad = SkewTableau { outer: p("2"), inner: p(""), rows: vec![vec![2, 1]] };
        assert!(!bad.is_lr());
    }

    #[test]
    fn pieri() {
        let e = schur_product_expand(&p("1"), &p("1"), 4).unwrap();
        let keys: Vec<String> = e.keys().map(ToString::to_string).collect();
        assert_eq!(keys, vec!["1,1", "2"]);
        assert!(e.values().all(|v| *v == BigUint::from(1u32)));
        let unit = schur_product_expand(&Partition::empty(), &p("2,1"), 4).unwrap();
        assert_eq!(unit.len(), 1);
        assert!(schur_product_expand(&p("2"), &p("2"), 3).is_err());
    }
}
