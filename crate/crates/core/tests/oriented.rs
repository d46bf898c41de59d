use std::collections::BTreeSet;

use tfpl_core::dyck::{enumerate_dyck, DyckWord};
use tfpl_core::tfpl::{
    canonical_orientation, enumerate_oriented_tfpl, enumerate_tfpl, reflect_oriented, Endpoint, OrientedTfplConfig,
};
use tfpl_core::Limits;

fn triples(n: usize) -> Vec<(DyckWord, DyckWord, DyckWord)> {
    let w = enumerate_dyck(n);
    let mut out = Vec::new();
    for s in &w {
        for t in &w {
            for p in &w {
                out.push((s.clone(), t.clone(), p.clone()));
            }
        }
    }
    out
}

fn oriented(n: usize) -> Vec<OrientedTfplConfig> {
    triples(n).iter().flat_map(|(s, t, p)| enumerate_oriented_tfpl(s, t, p, &Limits::default()).unwrap()).collect()
}

#[test]
fn underlying_graph_is_a_tfpl() {
    for n in 1..=3 {
        for f in oriented(n) {
            let u = f.undirect().expect("underlying graph satisfies both TFPL conditions");
            assert_eq!(u.edges(), f.underlying_edges().as_slice());
        }
    }
}

#[test]
fn left_right_paths_run_left_to_right() {
    for n in 1..=3 {
        for f in oriented(n) {
            for p in f.classify().left_right {
                assert!(matches!((p.from, p.to), (Endpoint::Left(_), Endpoint::Right(_))));
            }
        }
    }
}

#[test]
fn pattern_matches_iff_bottom_paths_run_left_to_right() {
    let mut seen = [false; 2];
    for n in 1..=3 {
        for f in oriented(n) {
            let c = f.classify();
            let forward = c.bottom.iter().all(|p| p.runs_left_to_right());
            let same = f.undirect().unwrap().pi() == f.pi();
            assert_eq!(forward, same, "{:?}", f.to_json());
            seen[same as usize] = true;
        }
    }
    assert!(seen[0] && seen[1], "both sides of the equivalence occur");
}

#[test]
fn canonical_orientation_injects() {
    for n in 1..=3 {
        for (s, t, p) in triples(n) {
            let lim = Limits::default();
            let plain = enumerate_tfpl(&s, &t, &p, &lim).unwrap();
            let all: BTreeSet<_> = enumerate_oriented_tfpl(&s, &t, &p, &lim).unwrap().into_iter().collect();
            let images: BTreeSet<_> = plain.iter().map(canonical_orientation).collect();
            assert_eq!(images.len(), plain.len());
            assert!(images.is_subset(&all));
            for f in &plain {
                assert_eq!(&canonical_orientation(f).undirect().unwrap(), f);
            }
        }
    }
}

#[test]
fn oriented_reflection() {
    for n in 1..=3 {
        for (s, t, p) in triples(n) {
            let lim = Limits::default();
            let here = enumerate_oriented_tfpl(&s, &t, &p, &lim).unwrap();
            let there = enumerate_oriented_tfpl(&t.conjugate(), &s.conjugate(), &p.conjugate(), &lim).unwrap();
            assert_eq!(here.len(), there.len());
            let mapped: BTreeSet<_> = here.iter().map(reflect_oriented).collect();
            assert_eq!(mapped, there.into_iter().collect());
        }
    }
}
