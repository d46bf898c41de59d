//! The full verification suite: ten exhaustive checks, each reported as one
//! pass/fail line. Ranges shrink with [`Limits`] and the report says so.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{
    check_balanced_characterization, phi_inverse, phi_oriented_inverse, phi_oriented_with, LocalRuleTable,
};
use crate::dyck::{catalan, enumerate_dyck, DyckWord};
use crate::fpl::{enumerate_fpl, link_pattern_counts};
use crate::identities::{
    inverse_hook, verify_api_formula, verify_counts_agree, verify_identity_c, verify_identity_t, verify_identity_tc,
};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_of, subdiagrams, Partition};
use crate::poly::{integer, rational, ssyt_count_polynomial, ssyt_enumerate, Polynomial};
use crate::puzzle::enumerate_puzzles;
use crate::tfpl::{canonical_orientation, enumerate_tfpl, reflect, TfplConfig, TfplTable};
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub name: String,
    pub scope: String,
    pub pass: bool,
    /// Empty on success; otherwise the first failures.
    pub detail: Vec<String>,
    /// Set when the limits cut the range below the full target.
    pub reduced: bool,
}

impl Criterion {
    pub fn line(&self) -> String {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        let reduced = if self.reduced { " (reduced scope)" } else { "" };
        let mut s = format!("[{mark}] {:>2}. {} [{}]{reduced}", self.id, self.name, self.scope);
        for d in &self.detail {
            s.push_str("\n        ");
            s.push_str(d);
        }
        s
    }
}

const MAX_DETAIL: usize = 5;

struct Outcome {
    scope: String,
    reduced: bool,
    failures: Vec<String>,
}

impl Outcome {
    fn new(scope: String, reduced: bool) -> Self {
        Outcome { scope, reduced, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn range_scope(label: &str, hi: usize, target: usize) -> (String, bool) {
    (format!("{label} <= {hi}"), hi < target)
}

/// Shared inputs: TFPL tables for each size up to the bound.
pub struct Context {
    pub limits: Limits,
    pub rules: LocalRuleTable,
    tables: HashMap<usize, TfplTable>,
}

impl Context {
    pub fn new(limits: Limits, rules: LocalRuleTable) -> Result<Self> {
        let tables = (1..=limits.tfpl_max_n.min(4))
            .into_par_iter()
            .map(|n| Ok((n, TfplTable::compute(n, &limits)?)))
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(Context { limits, rules, tables })
    }

    fn table(&self, n: usize) -> &TfplTable {
        &self.tables[&n]
    }

    fn tfpl_n(&self, target: usize) -> usize {
        target.min(self.limits.tfpl_max_n)
    }

    fn both_n(&self, target: usize) -> usize {
        target.min(self.limits.tfpl_max_n).min(self.limits.puzzle_max_n)
    }
}

fn triples(n: usize) -> Vec<(DyckWord, DyckWord, DyckWord)> {
    let w = enumerate_dyck(n);
    let mut out = Vec::with_capacity(w.len().pow(3));
    for s in &w {
        for t in &w {
            for p in &w {
                out.push((s.clone(), t.clone(), p.clone()));
            }
        }
    }
    out
}

fn balanced(s: &DyckWord, t: &DyckWord, p: &DyckWord) -> bool {
    s.degree() + t.degree() == p.degree()
}

fn counts_agree(cx: &Context) -> Result<Outcome> {
    let hi = cx.both_n(4);
    let (scope, reduced) = range_scope("n", hi, 4);
    let mut out = Outcome::new(format!("balanced triples, {scope}"), reduced);
    for n in 1..=hi {
        out.failures.extend(verify_counts_agree(n, cx.table(n), &cx.limits)?.failures);
    }
    Ok(out)
}

fn bijectivity(cx: &Context) -> Result<Outcome> {
    let hi = cx.both_n(3);
    let (scope, reduced) = range_scope("n", hi, 3);
    let mut out = Outcome::new(format!("balanced triples, {scope}"), reduced);
    if let Err(e) = cx.rules.validate() {
        out.failures.push(e.to_string());
        return Ok(out);
    }
    for n in 1..=hi {
        for (s, t, p) in triples(n).into_iter().filter(|(s, t, p)| balanced(s, t, p)) {
            let puzzles = enumerate_puzzles(&s, &t, &p, &cx.limits)?;
            let tfpls = enumerate_tfpl(&s, &t, &p, &cx.limits)?;
            let mut image = BTreeSet::new();
            for q in &puzzles {
                let o = match phi_oriented_with(q, &cx.rules) {
                    Ok(o) => o,
                    Err(e) => {
                        out.failures.push(format!("σ={s} τ={t} π={p}: {e}"));
                        continue;
                    }
                };
                let f = o.undirect()?;
                out.check(f.pi() == &p, || format!("σ={s} τ={t} π={p}: image has pattern {}", f.pi()));
                out.check(canonical_orientation(&f) == o, || {
                    format!("σ={s} τ={t} π={p}: oriented image is not canonical")
                });
                out.check(phi_inverse(&f).ok().as_ref() == Some(q), || {
                    format!("σ={s} τ={t} π={p}: inverse misses a puzzle")
                });
                image.insert(f);
            }
            out.check(image.len() == puzzles.len(), || format!("σ={s} τ={t} π={p}: not injective"));
            out.check(image.len() == tfpls.len(), || {
                format!("σ={s} τ={t} π={p}: image {} of {} TFPLs", image.len(), tfpls.len())
            });
            for f in &tfpls {
                let back = phi_inverse(f).and_then(|q| phi_oriented_with(&q, &cx.rules)?.undirect());
                out.check(back.ok().as_ref() == Some(f), || format!("σ={s} τ={t} π={p}: round trip from a TFPL fails"));
            }
        }
    }
    Ok(out)
}

fn no_loops(cx: &Context) -> Result<Outcome> {
    let hi = cx.both_n(3);
    let (scope, reduced) = range_scope("n", hi, 3);
    let mut out = Outcome::new(format!("all puzzles, {scope}"), reduced);
    if let Err(e) = cx.rules.validate() {
        out.failures.push(e.to_string());
        return Ok(out);
    }
    let mut total = 0usize;
    for n in 1..=hi {
        for (s, t, p) in triples(n) {
            for q in enumerate_puzzles(&s, &t, &p, &cx.limits)? {
                total += 1;
                let o = phi_oriented_with(&q, &cx.rules)?;
                let paths = o.classify();
                out.check(paths.closed.is_empty(), || format!("σ={s} τ={t} π={p}: {} cycles", paths.closed.len()));
                out.check(paths.bottom.iter().all(|b| b.runs_left_to_right()), || {
                    format!("σ={s} τ={t} π={p}: a bottom path runs right to left")
                });
                out.check(phi_oriented_inverse(&o).ok().as_ref() == Some(&q), || {
                    format!("σ={s} τ={t} π={p}: oriented image does not invert")
                });
            }
        }
    }
    out.scope = format!("{} ({total} puzzles)", out.scope);
    Ok(out)
}

fn vanishing_and_t(cx: &Context) -> Result<Outcome> {
    let (hi0, hi1) = (cx.tfpl_n(3), cx.tfpl_n(4));
    let mut out = Outcome::new(format!("vanishing n <= {hi0}, identity t n <= {hi1}"), hi0 < 3 || hi1 < 4);
    for n in 1..=hi0 {
        for ((s, t, p), c) in cx.table(n).iter() {
            out.check(s.degree() + t.degree() <= p.degree(), || {
                format!("σ={s} τ={t} π={p}: t={c} above the degree bound")
            });
        }
    }
    for n in 1..=hi1 {
        for p in enumerate_dyck(n) {
            out.failures.extend(verify_identity_t(&p, cx.table(n))?.failures);
        }
    }
    Ok(out)
}

fn identities_c_tc(cx: &Context) -> Result<Outcome> {
    let hi = cx.tfpl_n(4);
    let mut out = Outcome::new(format!("identity c |λ| <= 6, identity tc n <= {hi}"), hi < 4);
    for k in 0..=6 {
        for l in partitions_of(k) {
            out.failures.extend(verify_identity_c(&l).failures);
        }
    }
    for n in 1..=hi {
        for p in enumerate_dyck(n) {
            out.failures.extend(verify_identity_tc(&p, cx.table(n))?.failures);
        }
    }
    Ok(out)
}

fn api_formula(cx: &Context) -> Result<Outcome> {
    let hi_n = cx.tfpl_n(2);
    let mut out = Outcome::new(String::new(), false);
    let mut checked = 0;
    for n in 1..=hi_n {
        for m in 0..=3usize {
            if n + m > cx.limits.fpl_max_n {
                out.reduced = true;
                continue;
            }
            let ks: Vec<i64> = (-(n as i64)..=2).collect();
            for p in enumerate_dyck(n) {
                for &k in &ks {
                    out.failures.extend(verify_api_formula(&p, m, k, cx.table(n), &cx.limits)?.failures);
                    checked += 1;
                }
            }
        }
    }
    out.reduced |= hi_n < 2;
    out.scope = format!("n <= {hi_n}, m in 0..=3, k in -n..=2, {checked} cases");
    Ok(out)
}

fn hook_content(_: &Context) -> Result<Outcome> {
    let mut out = Outcome::new("|λ| <= 6, N <= 5".into(), false);
    for k in 0..=6 {
        for l in partitions_of(k) {
            let poly = ssyt_count_polynomial(&l);
            out.check(poly.leading() == inverse_hook(&l), || format!("λ=({l}): leading coefficient"));
            for n in 1..=5 {
                let direct = integer(ssyt_enumerate(&l, n).to_i64().expect("small count"));
                out.check(poly.eval_int(n as i64) == direct, || format!("λ=({l}) N={n}"));
            }
        }
    }
    // (N+1) N^2 (N-1) (N-2) / 24
    let printed = [(0, 1), (0, 1), (2, 24), (-1, 24), (-2, 24), (1, 24)];
    let expected = Polynomial::new(printed.iter().map(|&(a, b)| rational(a, b)).collect());
    let got = ssyt_count_polynomial(&"2,2,1".parse::<Partition>()?);
    out.check(got == expected, || format!("(2,2,1): got {got}"));
    Ok(out)
}

fn characterization(cx: &Context) -> Result<Outcome> {
    let hi = cx.tfpl_n(3);
    let (scope, reduced) = range_scope("n", hi, 3);
    let mut out = Outcome::new(format!("all TFPLs, {scope}"), reduced);
    let mut total = 0usize;
    for n in 1..=hi {
        for ((s, t, p), _) in cx.table(n).iter() {
            for f in enumerate_tfpl(s, t, p, &cx.limits)? {
                total += 1;
                let want = balanced(s, t, p);
                out.check(check_balanced_characterization(&f) == want, || {
                    format!("σ={s} τ={t} π={p}: characterization disagrees (balanced = {want})")
                });
            }
        }
    }
    out.scope = format!("{} ({total} TFPLs)", out.scope);
    Ok(out)
}

fn structural(cx: &Context) -> Result<Outcome> {
    let hi = cx.limits.fpl_max_n.min(5);
    let mut out = Outcome::new(format!("Catalan n <= 8, FPL totals n <= {hi}"), hi < 5);
    for n in 0..=8 {
        let len = enumerate_dyck(n).len();
        out.check(BigUint::from(len) == catalan(n), || format!("|D_{n}| = {len}"));
    }
    let mut totals = Vec::new();
    for n in 1..=hi {
        let all = enumerate_fpl(n, &cx.limits)?.len();
        let by_pattern: BigUint = link_pattern_counts(n, &cx.limits)?.values().sum();
        out.check(by_pattern == BigUint::from(all), || format!("n={n}: Σ A_π = {by_pattern}, total {all}"));
        totals.push(all.to_string());
    }
    out.scope = format!("{} (totals {})", out.scope, totals.join(", "));
    Ok(out)
}

fn reflected(f: &TfplConfig) -> (DyckWord, DyckWord, DyckWord) {
    (f.tau().conjugate(), f.sigma().conjugate(), f.pi().conjugate())
}

fn symmetries(cx: &Context) -> Result<Outcome> {
    let hi = cx.tfpl_n(3);
    let mut out = Outcome::new(format!("TFPL reflection n <= {hi}, LR |λ| <= 8"), hi < 3);
    for n in 1..=hi {
        let table = cx.table(n);
        for (s, t, p) in triples(n) {
            let a = table.get(&s, &t, &p);
            let b = table.get(&t.conjugate(), &s.conjugate(), &p.conjugate());
            out.check(a == b, || format!("σ={s} τ={t} π={p}: {a} vs {b}"));
        }
        // the map itself lands in the mirrored family and is an involution
        if n <= 2 {
            for ((s, t, p), _) in table.iter() {
                for f in enumerate_tfpl(s, t, p, &cx.limits)? {
                    let g = reflect(&f);
                    out.check(reflected(&f) == (g.sigma().clone(), g.tau().clone(), g.pi().clone()), || {
                        format!("σ={s} τ={t} π={p}: reflection lands elsewhere")
                    });
                    out.check(reflect(&g) == f, || format!("σ={s} τ={t} π={p}: not an involution"));
                }
            }
        }
    }
    let lambdas: Vec<Partition> = (0..=8).flat_map(partitions_of).collect();
    let bad: Vec<String> = lambdas
        .par_iter()
        .flat_map_iter(|l| {
            let subs = subdiagrams(l);
            let mut bad = Vec::new();
            for (i, mu) in subs.iter().enumerate() {
                for nu in subs[i..].iter().filter(|nu| nu.size() + mu.size() == l.size()) {
                    if lr_coefficient(l, mu, nu) != lr_coefficient(l, nu, mu) {
                        bad.push(format!("λ=({l}) μ=({mu}) ν=({nu})"));
                    }
                }
            }
            bad
        })
        .collect();
    out.failures.extend(bad);
    Ok(out)
}

type Check = fn(&Context) -> Result<Outcome>;

const CRITERIA: [(u8, &str, Check); 10] = [
    (1, "TFPL count = puzzle count = LR coefficient", counts_agree),
    (2, "Φ is a bijection onto TFPLs with balanced degrees", bijectivity),
    (3, "Φ⃗ has no closed paths and bottom paths run left to right", no_loops),
    (4, "t vanishes above the degree bound; identity t", vanishing_and_t),
    (5, "identity c; identity tc termwise", identities_c_tc),
    (6, "A_π(m) equals the TFPL/SSYT sum for every k", api_formula),
    (7, "hook-content formula against direct tableau counts", hook_content),
    (8, "no even vertical edge and no double left step iff balanced", characterization),
    (9, "Catalan counts and FPL totals by link pattern", structural),
    (10, "left-right reflection and LR symmetry", symmetries),
];

/// Runs every criterion, in parallel, and returns them in order.
pub fn run_suite(limits: Limits, rules: LocalRuleTable) -> Result<Vec<Criterion>> {
    let cx = Context::new(limits, rules)?;
    CRITERIA
        .par_iter()
        .map(|&(id, name, check)| {
            let outcome = check(&cx).unwrap_or_else(|e: Error| Outcome {
                scope: "aborted".into(),
                reduced: false,
                failures: vec![e.to_string()],
            });
            Ok(Criterion {
                id,
                name: name.into(),
                scope: outcome.scope,
                pass: outcome.failures.is_empty(),
                detail: outcome.failures.into_iter().take(MAX_DETAIL).collect(),
                reduced: outcome.reduced,
            })
        })
        .collect()
}
