//! Exact checks of the summation identities relating TFPL counts, LR
//! coefficients, hook products and FPL counts.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dyck::{enumerate_dyck, DyckWord};
use crate::error::{Error, Result};
use crate::fpl::a_pi_m;
use crate::lr::lr_coefficient;
use crate::partition::{subdiagrams, Partition};
use crate::poly::{integer, interpolate, ssyt_count_polynomial, Polynomial};
use crate::puzzle::puzzle_count;
use crate::tfpl::TfplTable;
use crate::Limits;

/// Outcome of one identity check. Failures list offending terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub range: String,
    pub pass: bool,
    pub failures: Vec<String>,
}

impl IdentityReport {
    fn new(identity: &str, range: String, failures: Vec<String>) -> Self {
        IdentityReport { identity: identity.into(), range, pass: failures.is_empty(), failures }
    }

    /// Merges reports of the same identity over several ranges.
    pub fn combine(identity: &str, range: String, parts: impl IntoIterator<Item = IdentityReport>) -> Self {
        let failures = parts.into_iter().flat_map(|r| r.failures).collect();
        IdentityReport::new(identity, range, failures)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn big(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `1 / (2^{|λ|} H_λ)`.
pub fn halved_hook_weight(lambda: &Partition) -> BigRational {
    let denom = BigInt::from(lambda.hook_product()) << lambda.size();
    BigRational::new(BigInt::one(), denom)
}

pub fn inverse_hook(lambda: &Partition) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(lambda.hook_product()))
}

/// `c^π_{σ,τ}` read through the diagrams.
pub fn lr_of_words(sigma: &DyckWord, tau: &DyckWord, pi: &DyckWord) -> BigUint {
    lr_coefficient(&pi.diagram(), &sigma.diagram(), &tau.diagram())
}

fn balanced_pairs(pi: &DyckWord) -> Vec<(DyckWord, DyckWord)> {
    let words = enumerate_dyck(pi.n());
    let d = pi.degree();
    let mut out = Vec::new();
    for s in &words {
        for t in &words {
            if s.degree() + t.degree() == d {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

fn table_for(pi: &DyckWord, table: &TfplTable) -> Result<()> {
    if table.n() != pi.n() {
        return Err(Error::SizeMismatch { expected: table.n(), got: pi.n() });
    }
    Ok(())
}

/// `1/H_{λ(π)} = Σ t^π_{σ,τ} / (2^{d(σ)} H_{λ(σ)} 2^{d(τ)} H_{λ(τ)})` over
/// `d(σ) + d(τ) = d(π)`.
pub fn verify_identity_t(pi: &DyckWord, table: &TfplTable) -> Result<IdentityReport> {
    table_for(pi, table)?;
    let sum: BigRational = balanced_pairs(pi)
        .iter()
        .map(|(s, t)| big(table.get(s, t, pi)) * halved_hook_weight(&s.diagram()) * halved_hook_weight(&t.diagram()))
        .sum();
    let lhs = inverse_hook(&pi.diagram());
    let failures = if sum == lhs { vec![] } else { vec![format!("π={pi}: 1/H = {lhs}, sum = {sum}")] };
    Ok(IdentityReport::new("t", format!("π={pi}"), failures))
}

/// `1/H_λ = Σ c^λ_{μ,ν} / (2^{|μ|} H_μ 2^{|ν|} H_ν)`.
pub fn verify_identity_c(lambda: &Partition) -> IdentityReport {
    let subs = subdiagrams(lambda);
    let mut sum = BigRational::zero();
    for mu in &subs {
        for nu in subs.iter().filter(|nu| nu.size() + mu.size() == lambda.size()) {
            let c = lr_coefficient(lambda, mu, nu);
            if !c.is_zero() {
                sum += big(c) * halved_hook_weight(mu) * halved_hook_weight(nu);
            }
        }
    }
    let lhs = inverse_hook(lambda);
    let failures = if sum == lhs { vec![] } else { vec![format!("λ=({lambda}): 1/H = {lhs}, sum = {sum}")] };
    IdentityReport::new("c", format!("λ=({lambda})"), failures)
}

/// `Σ (t − c) / (H_{λ(σ)} H_{λ(τ)}) = 0`, and each term vanishes on its own.
pub fn verify_identity_tc(pi: &DyckWord, table: &TfplTable) -> Result<IdentityReport> {
    table_for(pi, table)?;
    let mut sum = BigRational::zero();
    let mut failures = Vec::new();
    for (s, t) in balanced_pairs(pi) {
        let diff = big(table.get(&s, &t, pi)) - big(lr_of_words(&s, &t, pi));
        if !diff.is_zero() {
            failures.push(format!("σ={s} τ={t} π={pi}: t − c = {diff}"));
        }
        sum += diff * inverse_hook(&s.diagram()) * inverse_hook(&t.diagram());
    }
    if !sum.is_zero() {
        failures.push(format!("π={pi}: weighted sum = {sum}"));
    }
    Ok(IdentityReport::new("tc", format!("π={pi}"), failures))
}

/// `t = puzzle count = c` on every balanced triple of size `n`.
pub fn verify_counts_agree(n: usize, table: &TfplTable, limits: &Limits) -> Result<IdentityReport> {
    if table.n() != n {
        return Err(Error::SizeMismatch { expected: table.n(), got: n });
    }
    let mut failures = Vec::new();
    for pi in enumerate_dyck(n) {
        for (s, t) in balanced_pairs(&pi) {
            let tc = BigUint::from(table.get(&s, &t, &pi));
            let pc = puzzle_count(&s, &t, &pi, limits)?;
            let c = lr_of_words(&s, &t, &pi);
            if tc != pc || pc != c {
                failures.push(format!("σ={s} τ={t} π={pi}: t={tc} puzzles={pc} c={c}"));
            }
        }
    }
    Ok(IdentityReport::new("t=puzzles=c", format!("n={n}"), failures))
}

/// `SSYT(λ, N)` as the hook-content polynomial, so any integer `N` is allowed.
pub fn ssyt_value(lambda: &Partition, n: i64) -> BigRational {
    ssyt_count_polynomial(lambda).eval_int(n)
}

/// Right side of the bridge formula:
/// `Σ_{σ,τ} SSYT(λ(σ), n+k) · t^π_{σ,τ} · SSYT(λ(τ*), m−k−2n+1)`.
pub fn api_rhs(pi: &DyckWord, m: usize, k: i64, table: &TfplTable) -> Result<BigRational> {
    table_for(pi, table)?;
    let n = pi.n() as i64;
    let words = enumerate_dyck(pi.n());
    let mut sum = BigRational::zero();
    for s in &words {
        for t in &words {
            let count = table.get(s, t, pi);
            if count == 0 {
                continue;
            }
            sum += ssyt_value(&s.diagram(), n + k)
                * big(count)
                * ssyt_value(&t.conjugate().diagram(), m as i64 - k - 2 * n + 1);
        }
    }
    Ok(sum)
}

/// Values of `k` for which both tableau arguments are nonnegative:
/// `-n <= k <= m - 2n + 1`. Possibly empty.
pub fn api_nonnegative_window(n: usize, m: usize) -> Vec<i64> {
    let n = n as i64;
    (-n..=m as i64 - 2 * n + 1).collect()
}

/// Compares `A_π(m)`, counted on the grid, with [`api_rhs`].
pub fn verify_api_formula(
    pi: &DyckWord,
    m: usize,
    k: i64,
    table: &TfplTable,
    limits: &Limits,
) -> Result<IdentityReport> {
    let size = pi.n() + m;
    if size > limits.fpl_max_n {
        return Err(Error::BoundExceeded { what: "fpl", n: size, max: limits.fpl_max_n });
    }
    let lhs = big(a_pi_m(pi, m, limits)?);
    let rhs = api_rhs(pi, m, k, table)?;
    let failures = if lhs == rhs { vec![] } else { vec![format!("π={pi} m={m} k={k}: A = {lhs}, sum = {rhs}")] };
    Ok(IdentityReport::new("api", format!("π={pi} m={m} k={k}"), failures))
}

/// Interpolates `m ↦ A_π(m)` through the given points.
pub fn interpolate_api(pi: &DyckWord, points: &[usize], limits: &Limits) -> Result<Polynomial> {
    let need = pi.degree() + 1;
    if points.len() < need {
        return Err(Error::InsufficientPoints { need, got: points.len() });
    }
    let values =
        points.iter().map(|&m| Ok((integer(m as i64), big(a_pi_m(pi, m, limits)?)))).collect::<Result<Vec<_>>>()?;
    interpolate(&values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_c_small() {
        for l in ["", "1", "2,2,1", "3,1"] {
            assert!(verify_identity_c(&p(l)).pass, "λ={l}");
        }
    }

    #[test]
    fn identity_t_and_tc_small_n() {
        for n in 1..=3 {
            let table = TfplTable::compute(n, &Limits::default()).unwrap();
            for pi in enumerate_dyck(n) {
                assert!(verify_identity_t(&pi, &table).unwrap().pass);
                let r = verify_identity_tc(&pi, &table).unwrap();
                assert!(r.pass, "{:?}", r.failures);
            }
            assert!(verify_counts_agree(n, &table, &Limits::default()).unwrap().pass);
        }
    }

    #[test]
    fn api_formula_for_any_k() {
        let table = TfplTable::compute(2, &Limits::default()).unwrap();
        for pi in enumerate_dyck(2) {
            for m in 0..=2 {
                for k in -3..=3 {
                    let r = verify_api_formula(&pi, m, k, &table, &Limits::default()).unwrap();
                    assert!(r.pass, "{:?}", r.failures);
                }
            }
        }
        assert!(api_nonnegative_window(2, 0).is_empty());
        assert_eq!(api_nonnegative_window(2, 3), vec![-2, -1, 0]);
    }

    #[test]
    fn interpolation() {
        let one = interpolate_api(&w("01"), &[0, 1, 2, 3], &Limits::default()).unwrap();
        assert_eq!(one, Polynomial::constant(integer(1)));
        let lin = interpolate_api(&w("0101"), &[0, 1, 2], &Limits::default()).unwrap();
        assert_eq!(lin.degree(), Some(1));
        assert_eq!(lin.leading(), rational(1, 1));
        assert!(matches!(
            interpolate_api(&w("0101"), &[0], &Limits::default()),
            Err(Error::InsufficientPoints { need: 2, got: 1 })
        ));
    }

    #[test]
    fn report_json() {
        let r = verify_identity_c(&p("1"));
        let v = r.to_json();
        assert_eq!(v["identity"], "c");
        assert_eq!(v["pass"], true);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}
