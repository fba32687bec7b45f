//! Isomorph-free enumeration of tournaments and canonical forms.
//!
//! The canonical form of a tournament is the minimum, over all vertex
//! relabelings, of a fixed upper-triangle bit encoding. Minimization runs as
//! a branch-and-bound search over partial relabelings, which is fast because
//! the encoding compares prefix-first.
//!
//! Generation proceeds by canonical augmentation: each representative of
//! order `n - 1` is extended by one new vertex in every possible way, and an
//! extension is kept exactly when it is already canonically labeled. The
//! encoding places all pairs among the first `n - 1` vertices ahead of the
//! pairs involving the last vertex, so the restriction of a canonically
//! labeled tournament to its first `n - 1` vertices is itself canonically
//! labeled; that is what makes the kept set complete and duplicate-free.

use crate::error::Error;
use crate::tournament::{Digraph, Tournament};
use crate::Result;
use std::sync::OnceLock;

/// Enumeration and canonicalization are supported up to this order.
pub const ENUM_MAX_ORDER: usize = 9;

/// Order plus canonical bit encoding; equal forms ⇔ isomorphic tournaments.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    pub order: u8,
    pub bits: u64,
}

/// The encoding being minimized: pairs `(i, j)`, `i < j`, ordered by `j`
/// first ("colex"), each contributing one bit (`1` when `i -> j`), earlier
/// pairs in higher bit positions.
pub fn colex_encoding(t: &Tournament) -> u64 {
    let mut bits = 0u64;
    for j in 1..t.order() {
        for i in 0..j {
            bits = bits << 1 | t.has_arc(i, j) as u64;
        }
    }
    bits
}

/// Minimal encoding over all relabelings.
pub fn canonical_form(t: &Tournament) -> Result<CanonicalForm> {
    let n = t.order();
    if n > ENUM_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "canonical form",
            order: n,
            min: 1,
            max: ENUM_MAX_ORDER,
        });
    }
    let total = n * (n - 1) / 2;
    let mut best = colex_encoding(t);
    let mut perm = [0usize; ENUM_MAX_ORDER];
    descend(t, 0, 0, &mut perm, 0, &mut best, total);
    Ok(CanonicalForm {
        order: n as u8,
        bits: best,
    })
}

/// Places one more old vertex at new label `depth`. `acc` holds the encoding
/// of the pairs among the already placed vertices; a branch survives only if
/// that prefix does not already exceed the matching prefix of `best`.
fn descend(
    t: &Tournament,
    depth: usize,
    acc: u64,
    perm: &mut [usize; ENUM_MAX_ORDER],
    used: u32,
    best: &mut u64,
    total: usize,
) {
    let n = t.order();
    if depth == n {
        if acc < *best {
            *best = acc;
        }
        return;
    }
    for u in 0..n {
        if used >> u & 1 == 1 {
            continue;
        }
        let mut chunk = 0u64;
        for &placed in perm.iter().take(depth) {
            chunk = chunk << 1 | t.has_arc(placed, u) as u64;
        }
        let acc2 = acc << depth | chunk;
        let known = (depth + 1) * depth / 2;
        if acc2 > *best >> (total - known) {
            continue;
        }
        perm[depth] = u;
        descend(t, depth + 1, acc2, perm, used | 1 << u, best, total);
    }
}

/// All tournaments of order `n` up to isomorphism: one canonically labeled
/// representative per class, sorted by canonical encoding. The slice is
/// computed once per order and cached for the lifetime of the process.
pub fn all_tournaments(n: usize) -> Result<&'static [Tournament]> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "tournament enumeration",
            order: n,
            min: 1,
            max: ENUM_MAX_ORDER,
        });
    }
    Ok(cached(n))
}

fn cached(n: usize) -> &'static [Tournament] {
    static CACHES: [OnceLock<Vec<Tournament>>; ENUM_MAX_ORDER + 1] =
        [const { OnceLock::new() }; ENUM_MAX_ORDER + 1];
    CACHES[n].get_or_init(|| generate(n)).as_slice()
}

fn generate(n: usize) -> Vec<Tournament> {
    if n == 1 {
        return vec![Tournament::from_fn(1, |_, _| true).expect("order 1 is valid")];
    }
    let mut kept = Vec::new();
    for parent in cached(n - 1) {
        for pattern in 0u32..1 << (n - 1) {
            let child = Tournament::from_fn(n, |i, j| {
                if j == n - 1 {
                    pattern >> i & 1 == 1
                } else {
                    parent.has_arc(i, j)
                }
            })
            .expect("child order within bounds");
            let enc = colex_encoding(&child);
            if canonical_form(&child).expect("order within bounds").bits == enc {
                kept.push(child);
            }
        }
    }
    kept.sort_by_key(colex_encoding);
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use std::collections::HashSet;

    #[test]
    fn class_counts_small_orders() {
        let expected = [1usize, 1, 2, 4, 12, 56];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(
                all_tournaments(i + 1).unwrap().len(),
                want,
                "order {}",
                i + 1
            );
        }
        assert!(all_tournaments(0).is_err());
        assert!(all_tournaments(10).is_err());
    }

    #[test]
    fn stream_is_self_canonical_sorted_and_duplicate_free() {
        for n in 1..=6 {
            let reps = all_tournaments(n).unwrap();
            let mut seen = HashSet::new();
            let mut prev = None;
            for t in reps {
                let enc = colex_encoding(t);
                assert_eq!(canonical_form(t).unwrap().bits, enc);
                assert!(seen.insert(enc));
                if let Some(p) = prev {
                    assert!(p < enc, "stream must be strictly increasing");
                }
                prev = Some(enc);
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let c3 = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let forms: HashSet<u64> = (0..3)
            .permutations(3)
            .map(|p| canonical_form(&c3.relabel(&p)).unwrap().bits)
            .collect();
        assert_eq!(forms.len(), 1);

        let paley = Tournament::from_fn(7, |i, j| [1, 2, 4].contains(&((j + 7 - i) % 7))).unwrap();
        let reference = canonical_form(&paley).unwrap();
        for p in (0..7).permutations(7) {
            assert_eq!(canonical_form(&paley.relabel(&p)).unwrap(), reference);
        }
    }

    #[test]
    fn both_labelings_of_order_two_agree() {
        let a = Tournament::from_arcs(2, &[(0, 1)]).unwrap();
        let b = Tournament::from_arcs(2, &[(1, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn transitive_canonical_bits_are_zero() {
        for n in 1..=7 {
            assert_eq!(canonical_form(&Tournament::transitive(n)).unwrap().bits, 0);
            assert_eq!(colex_encoding(&all_tournaments(n).unwrap()[0]), 0);
        }
    }

    #[test]
    fn distinct_classes_have_distinct_forms() {
        let c3 = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_ne!(
            canonical_form(&c3).unwrap(),
            canonical_form(&Tournament::transitive(3)).unwrap()
        );
    }
}
