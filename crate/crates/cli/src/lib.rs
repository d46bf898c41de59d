//! Library side of the `tfpl` binary: configuration, census tables, SVG
//! output and the verification drivers.

pub mod census;
pub mod config;
pub mod render;

use std::collections::BTreeSet;

use serde_json::{json, Value};
use tfpl_core::bijection::{phi, phi_inverse, phi_oriented_with, Fragment, Horizontal, LocalRuleTable, Vertical};
use tfpl_core::dyck::enumerate_dyck;
use tfpl_core::error::Error;
use tfpl_core::puzzle::enumerate_puzzles;
use tfpl_core::suite::{run_suite, Criterion};
use tfpl_core::tfpl::{enumerate_tfpl, TfplConfig};
use tfpl_core::Result;

use crate::config::Config;

/// Runs the whole acceptance suite on a pool of `config.parallelism` workers.
pub fn verify_all(config: &Config, rules: LocalRuleTable) -> Result<Vec<Criterion>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    pool.install(|| run_suite(config.limits(), rules))
}

/// JSON form of a suite run.
pub fn suite_report(criteria: &[Criterion]) -> Value {
    json!({
        "pass": criteria.iter().all(|c| c.pass),
        "reduced": criteria.iter().any(|c| c.reduced),
        "criteria": criteria,
    })
}

/// The standard table with the all-zero upward fragment swapped for one
/// that emits two outgoing edges at its vertex.
pub fn corrupted_rules() -> LocalRuleTable {
    LocalRuleTable::standard()
        .with_up_fragment([0, 0, 0], Fragment { vertical: Vertical::Up, horizontal: Horizontal::Right })
}

fn edge_key(f: &TfplConfig) -> Vec<[i32; 4]> {
    let mut e: Vec<[i32; 4]> = f.edges().iter().map(|e| e.to_array()).collect();
    e.sort_unstable();
    e
}

/// Exhaustive bijectivity check of the puzzle map on every degree-balanced
/// boundary of size `n`.
pub fn verify_bijection(config: &Config, n: usize, rules: &LocalRuleTable) -> Result<Value> {
    let limits = config.limits();
    let words = enumerate_dyck(n);
    let mut failures = Vec::new();
    let mut classes = 0usize;
    let mut puzzles_seen = 0usize;
    for pi in &words {
        for s in &words {
            for t in &words {
                if s.degree() + t.degree() != pi.degree() {
                    continue;
                }
                classes += 1;
                let tag = format!("σ={s} τ={t} π={pi}");
                let puzzles = enumerate_puzzles(s, t, pi, &limits)?;
                let tfpls = enumerate_tfpl(s, t, pi, &limits)?;
                puzzles_seen += puzzles.len();
                let mut image = BTreeSet::new();
                for p in &puzzles {
                    let f = phi_oriented_with(p, rules)?.undirect()?;
                    match phi_inverse(&f) {
                        Ok(q) if q == *p => {}
                        _ => failures.push(format!("{tag}: inverse does not recover a puzzle")),
                    }
                    image.insert(edge_key(&f));
                }
                if image.len() != puzzles.len() {
                    failures.push(format!("{tag}: {} puzzles but {} images", puzzles.len(), image.len()));
                }
                if image.len() != tfpls.len() {
                    failures.push(format!("{tag}: image size {} but t = {}", image.len(), tfpls.len()));
                }
                for f in &tfpls {
                    let back = phi_inverse(f).and_then(|q| phi(&q));
                    if !back.is_ok_and(|g| edge_key(&g) == edge_key(f)) {
                        failures.push(format!("{tag}: a TFPL is not hit by its preimage"));
                    }
                }
            }
        }
    }
    Ok(json!({
        "identity": "bijection",
        "range": format!("n={n}, {classes} boundary classes, {puzzles_seen} puzzles"),
        "pass": failures.is_empty(),
        "failures": failures,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_table_names_balance() {
        let err = corrupted_rules().validate().unwrap_err().to_string();
        assert!(err.contains("balance"), "{err}");
    }

    #[test]
    fn bijection_small() {
        let c = Config::default();
        for n in 1..=2 {
            let r = verify_bijection(&c, n, LocalRuleTable::standard()).unwrap();
            assert_eq!(r["pass"], true, "{r}");
        }
    }
}
