//! Invariants of the canonical tournament stream beyond the raw class
//! counts: every representative is its own canonical labeling, the stream
//! is strictly ordered, and removing the last vertex of a representative
//! lands on an earlier representative.

use trn_core::enumerate::{all_tournaments, canonical_form, colex_encoding, ENUM_MAX_ORDER};
use trn_core::{Digraph, VertexSet};

#[test]
fn representatives_are_self_canonical() {
    for n in 1..=7 {
        for t in all_tournaments(n).unwrap() {
            assert_eq!(
                canonical_form(t).unwrap().bits,
                colex_encoding(t),
                "{} is not canonically labeled",
                t.to_trn()
            );
        }
    }
}

#[test]
fn stream_is_strictly_sorted() {
    for n in 1..=ENUM_MAX_ORDER {
        let classes = all_tournaments(n).unwrap();
        for w in classes.windows(2) {
            assert!(
                colex_encoding(&w[0]) < colex_encoding(&w[1]),
                "stream out of order at {}",
                w[1].to_trn()
            );
        }
    }
}

#[test]
fn prefixes_of_representatives_are_representatives() {
    for n in 2..=7 {
        let smaller: Vec<u64> = all_tournaments(n - 1)
            .unwrap()
            .iter()
            .map(colex_encoding)
            .collect();
        for t in all_tournaments(n).unwrap() {
            let prefix = t.induced(VertexSet::full(n - 1));
            assert_eq!(prefix.order(), n - 1);
            assert!(
                smaller.binary_search(&colex_encoding(&prefix)).is_ok(),
                "prefix of {} is not in the order-{} stream",
                t.to_trn(),
                n - 1
            );
        }
    }
}

#[test]
fn orders_outside_the_supported_range_are_rejected() {
    assert!(all_tournaments(0).is_err());
    assert!(all_tournaments(ENUM_MAX_ORDER + 1).is_err());
    assert!(canonical_form(&all_tournaments(3).unwrap()[0]).is_ok());
}
