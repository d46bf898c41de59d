use std::path::PathBuf;

use serde_json::{json, Map, Value};
use tfpl_core::dyck::enumerate_dyck;
use tfpl_core::error::Error;
use tfpl_core::fpl::link_pattern_counts;
use tfpl_core::identities::{lr_of_words, verify_identity_t, verify_identity_tc, IdentityReport};
use tfpl_core::tfpl::TfplTable;
use tfpl_core::Result;

use crate::config::Config;

/// A-table, t and c on balanced triples, and identity checks for size `n`.
pub fn census(config: &Config, n: usize) -> Result<Value> {
    let limits = config.limits();
    let mut a = Map::new();
    let mut total = 0u64;
    for (pi, count) in link_pattern_counts(n, &limits)? {
        total += u64::try_from(&count).unwrap_or(u64::MAX);
        a.insert(pi.to_string(), json!(count.to_string()));
    }
    let table = TfplTable::compute(n, &limits)?;
    let words = enumerate_dyck(n);
    let mut triples = Vec::new();
    let mut reports = Vec::new();
    for pi in &words {
        for s in &words {
            for t in &words {
                if s.degree() + t.degree() != pi.degree() {
                    continue;
                }
                let tc = table.get(s, t, pi);
                let c = lr_of_words(s, t, pi);
                triples.push(json!({
                    "sigma": s, "tau": t, "pi": pi,
                    "t": tc, "c": c.to_string(),
                    "equal": c == tc.into(),
                }));
            }
        }
        reports.push(verify_identity_t(pi, &table)?);
        reports.push(verify_identity_tc(pi, &table)?);
    }
    let summary: Vec<Value> = ["t", "tc"]
        .iter()
        .map(|id| {
            let parts = reports.iter().filter(|r| r.identity == *id).cloned();
            IdentityReport::combine(id, format!("n={n}"), parts).to_json()
        })
        .collect();
    Ok(json!({
        "n": n,
        "a_pi": a,
        "fpl_total": total,
        "balanced_triples": triples,
        "identities": summary,
    }))
}

/// Writes `census_n{n}.json` under the output directory and returns its path.
pub fn run_census(config: &Config, n: usize) -> Result<PathBuf> {
    let doc = census(config, n)?;
    std::fs::create_dir_all(&config.output_dir)
        .map_err(|e| Error::io(format!("creating {}", config.output_dir.display()), e))?;
    let path = config.output_dir.join(format!("census_n{n}.json"));
    let text = serde_json::to_string_pretty(&doc)?;
    std::fs::write(&path, text + "\n").map_err(|e| Error::io(format!("writing {}", path.display()), e))?;
    Ok(path)
}
