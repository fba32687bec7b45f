//! Cross-checks between independent ways of answering the same question:
//! the pruning search engine, the naive brute-force search, and a direct
//! permutation scan that owes nothing to either implementation.

use itertools::Itertools;
use trn_core::embed::{self, EmbedRequest};
use trn_core::enumerate::all_tournaments;
use trn_core::pathtype::OrientedPathType;
use trn_core::{Digraph, VertexSet};

fn permutation_origins<D: Digraph>(d: &D, p: &OrientedPathType) -> VertexSet {
    let n = d.order();
    let mut origins = VertexSet::EMPTY;
    for seq in (0..n).permutations(n) {
        if origins.contains(seq[0]) {
            continue;
        }
        if OrientedPathType::type_of_witness(d, &seq).is_ok_and(|t| t == *p) {
            origins.insert(seq[0]);
        }
    }
    origins
}

#[test]
fn origins_match_permutation_scan() {
    for n in 2..=5 {
        let types = OrientedPathType::all_path_types(n).unwrap();
        for t in all_tournaments(n).unwrap() {
            for p in &types {
                assert_eq!(
                    embed::origins(t, p).unwrap(),
                    permutation_origins(t, p),
                    "intact {} type {p}",
                    t.to_trn()
                );
                for x in 0..n {
                    for y in x + 1..n {
                        let d = t.delete_arc(x, y).unwrap();
                        assert_eq!(
                            embed::origins(&d, p).unwrap(),
                            permutation_origins(&d, p),
                            "{} type {p}",
                            d.to_trnd()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn directed_path_count_matches_permutation_count() {
    for n in 1..=6 {
        for t in all_tournaments(n).unwrap() {
            let by_scan = (0..n)
                .permutations(n)
                .filter(|seq| seq.windows(2).all(|w| t.has_arc(w[0], w[1])))
                .count() as u64;
            assert_eq!(
                embed::count_hamiltonian_directed_paths(t).unwrap(),
                by_scan,
                "{}",
                t.to_trn()
            );
        }
    }
}

#[test]
fn engine_agrees_with_brute_force_on_larger_orders() {
    for (n, stride) in [(6usize, 7usize), (7, 31)] {
        let types = OrientedPathType::all_path_types(n).unwrap();
        for t in all_tournaments(n).unwrap().iter().step_by(stride) {
            let deleted = t.delete_arc(0, 1).unwrap();
            for p in &types {
                assert_eq!(
                    embed::contains_path(t, p).unwrap().is_some(),
                    embed::brute_force_contains(t, p).unwrap().is_some(),
                    "intact {} type {p}",
                    t.to_trn()
                );
                assert_eq!(
                    embed::contains_path(&deleted, p).unwrap().is_some(),
                    embed::brute_force_contains(&deleted, p).unwrap().is_some(),
                    "{} type {p}",
                    deleted.to_trnd()
                );
            }
        }
    }
}

#[test]
fn origin_constraints_agree_with_origin_sets() {
    for n in 2..=5 {
        let types = OrientedPathType::all_path_types(n).unwrap();
        for t in all_tournaments(n).unwrap() {
            for p in &types {
                let origins = embed::origins(t, p).unwrap();
                for v in 0..n {
                    let pinned = EmbedRequest::new(t, p).require_origin(v).solve().unwrap();
                    assert_eq!(
                        pinned.is_some(),
                        origins.contains(v),
                        "{} type {p} origin {}",
                        t.to_trn(),
                        v + 1
                    );
                    if let Some(w) = pinned {
                        assert_eq!(w.origin(), v);
                    }
                }
                let blocked = EmbedRequest::new(t, p)
                    .forbid_origins(origins)
                    .solve()
                    .unwrap();
                assert!(
                    blocked.is_none(),
                    "{} type {p}: forbidding every origin must leave nothing",
                    t.to_trn()
                );
            }
        }
    }
}

#[test]
fn witnesses_always_have_the_requested_type() {
    for n in 2..=6 {
        let types = OrientedPathType::all_path_types(n).unwrap();
        for t in all_tournaments(n).unwrap() {
            for p in &types {
                if let Some(w) = embed::contains_path(t, p).unwrap() {
                    assert_eq!(
                        OrientedPathType::type_of_witness(t, w.vertices()).unwrap(),
                        *p
                    );
                    assert_eq!(
                        OrientedPathType::type_of_witness(t, w.reversed().vertices()).unwrap(),
                        p.reverse(),
                        "reading a witness backward must give the reversed type"
                    );
                }
            }
        }
    }
}
