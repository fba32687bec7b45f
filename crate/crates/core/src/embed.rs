//! Embedding engine: does a digraph contain a spanning path of a given type,
//! starting where, and in how many ways (for directed paths)?
//!
//! The workhorse is a subset dynamic program over suffix feasibility: for each
//! vertex subset `s`, compute the set of vertices that can start a partial
//! path occupying exactly `s` and realizing the final `|s| - 1` arcs of the
//! requested type. The full-set entry is then exactly the origin set, and a
//! greedy least-label walk through the tables recovers the lexicographically
//! least witness.

use crate::error::Error;
use crate::pathtype::OrientedPathType;
use crate::tournament::{Digraph, Tournament, VertexSet};
use crate::Result;
use std::fmt;

/// Orders above this would need more than a few MB of DP scratch per call.
const ENGINE_MAX_ORDER: usize = 20;

const BRUTE_MAX_ORDER: usize = 9;

const COUNT_MAX_ORDER: usize = 16;

/// A concrete spanning path, as its vertex sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathWitness(Vec<usize>);

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathWitness(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn origin(&self) -> usize {
        self.0[0]
    }

    /// The same walk read from the other end.
    pub fn reversed(&self) -> PathWitness {
        let mut v = self.0.clone();
        v.reverse();
        PathWitness(v)
    }
}

/// Prints 1-based labels separated by spaces, e.g. `4 1 3 2`.
impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// A containment query with optional origin constraints.
pub struct EmbedRequest<'a, D: Digraph> {
    pub digraph: &'a D,
    pub path_type: &'a OrientedPathType,
    pub required_origin: Option<usize>,
    pub forbidden_origins: VertexSet,
}

impl<'a, D: Digraph> EmbedRequest<'a, D> {
    pub fn new(digraph: &'a D, path_type: &'a OrientedPathType) -> Self {
        EmbedRequest {
            digraph,
            path_type,
            required_origin: None,
            forbidden_origins: VertexSet::EMPTY,
        }
    }

    pub fn require_origin(mut self, v: usize) -> Self {
        self.required_origin = Some(v);
        self
    }

    pub fn forbid_origins(mut self, s: VertexSet) -> Self {
        self.forbidden_origins = s;
        self
    }

    /// Lexicographically least witness among those satisfying the origin
    /// constraints, or `None`.
    pub fn solve(&self) -> Result<Option<PathWitness>> {
        let tables = SuffixTables::build(self.digraph, self.path_type)?;
        let mut allowed = tables.origins().difference(self.forbidden_origins);
        if let Some(v) = self.required_origin {
            if v >= self.digraph.order() {
                return Err(Error::InvalidArgument(format!(
                    "required origin {} exceeds order {}",
                    v + 1,
                    self.digraph.order()
                )));
            }
            allowed = allowed.intersection(VertexSet::singleton(v));
        }
        match allowed.iter().next() {
            Some(start) => Ok(Some(tables.walk_from(start))),
            None => Ok(None),
        }
    }
}

/// Suffix-feasibility tables for one (digraph, type) pair.
struct SuffixTables<'a, D: Digraph> {
    digraph: &'a D,
    path_type: &'a OrientedPathType,
    /// `suff[s]`: vertices that can start a suffix occupying exactly `s`.
    suff: Vec<u32>,
    n: usize,
}

impl<'a, D: Digraph> SuffixTables<'a, D> {
    fn build(digraph: &'a D, path_type: &'a OrientedPathType) -> Result<Self> {
        let n = digraph.order();
        if n > ENGINE_MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "embedding engine",
                order: n,
                min: 1,
                max: ENGINE_MAX_ORDER,
            });
        }
        if path_type.order() != n {
            return Err(Error::InvalidArgument(format!(
                "path type {path_type} has order {} but the digraph has order {n}",
                path_type.order()
            )));
        }
        let mut suff = vec![0u32; 1 << n];
        for v in 0..n {
            suff[1 << v] = 1 << v;
        }
        for s in 1..1u32 << n {
            let size = s.count_ones() as usize;
            if size < 2 {
                continue;
            }
            // The suffix of size `size` starts with arc index n - size.
            let fwd = path_type.arc_is_forward(n - size);
            let mut cand = s;
            let mut acc = 0u32;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let next = if fwd {
                    digraph.out_mask(v)
                } else {
                    digraph.in_mask(v)
                };
                if suff[(s & !(1 << v)) as usize] & next != 0 {
                    acc |= 1 << v;
                }
            }
            suff[s as usize] = acc;
        }
        Ok(SuffixTables {
            digraph,
            path_type,
            suff,
            n,
        })
    }

    fn origins(&self) -> VertexSet {
        VertexSet(self.suff[(1usize << self.n) - 1])
    }

    /// Greedy least-label walk; `start` must be a feasible origin.
    fn walk_from(&self, start: usize) -> PathWitness {
        let n = self.n;
        let mut seq = Vec::with_capacity(n);
        let mut remaining = ((1u64 << n) - 1) as u32;
        let mut v = start;
        loop {
            seq.push(v);
            remaining &= !(1 << v);
            if remaining == 0 {
                break;
            }
            let arc = seq.len() - 1;
            let step = if self.path_type.arc_is_forward(arc) {
                self.digraph.out_mask(v)
            } else {
                self.digraph.in_mask(v)
            };
            let feasible = step & self.suff[remaining as usize];
            debug_assert_ne!(feasible, 0, "walk started from an infeasible origin");
            v = feasible.trailing_zeros() as usize;
        }
        PathWitness(seq)
    }
}

/// Least spanning witness of type `p` in `d`, or `None`.
pub fn contains_path<D: Digraph>(d: &D, p: &OrientedPathType) -> Result<Option<PathWitness>> {
    EmbedRequest::new(d, p).solve()
}

/// Exact origin set: vertices starting at least one spanning path of type `p`.
pub fn origins<D: Digraph>(d: &D, p: &OrientedPathType) -> Result<VertexSet> {
    Ok(SuffixTables::build(d, p)?.origins())
}

/// Number of spanning directed paths, counted as vertex sequences.
pub fn count_hamiltonian_directed_paths(t: &Tournament) -> Result<u64> {
    let n = t.order();
    if n > COUNT_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "directed path counting",
            order: n,
            min: 1,
            max: COUNT_MAX_ORDER,
        });
    }
    if n == 1 {
        return Ok(1);
    }
    // ways[s * n + v]: directed paths covering exactly `s` and ending at `v`.
    let mut ways = vec![0u64; (1 << n) * n];
    for v in 0..n {
        ways[(1 << v) * n + v] = 1;
    }
    for s in 1..1u32 << n {
        if s.count_ones() < 2 {
            continue;
        }
        let mut cand = s;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let prev = s & !(1 << v);
            let mut sum = 0u64;
            let mut preds = t.in_mask(v) & prev;
            while preds != 0 {
                let u = preds.trailing_zeros() as usize;
                preds &= preds - 1;
                sum += ways[prev as usize * n + u];
            }
            ways[s as usize * n + v] = sum;
        }
    }
    let full = (1usize << n) - 1;
    Ok((0..n).map(|v| ways[full * n + v]).sum())
}

/// Pruning-free reference search with the same contract as
/// [`contains_path`]; deliberately naive so it can serve as an independent
/// oracle in tests.
pub fn brute_force_contains<D: Digraph>(
    d: &D,
    p: &OrientedPathType,
) -> Result<Option<PathWitness>> {
    let n = d.order();
    if n > BRUTE_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "brute-force search",
            order: n,
            min: 1,
            max: BRUTE_MAX_ORDER,
        });
    }
    if p.order() != n {
        return Err(Error::InvalidArgument(format!(
            "path type {p} has order {} but the digraph has order {n}",
            p.order()
        )));
    }
    let mut seq = Vec::with_capacity(n);
    for start in 0..n {
        seq.push(start);
        if brute_extend(d, p, &mut seq) {
            return Ok(Some(PathWitness(seq)));
        }
        seq.pop();
    }
    Ok(None)
}

fn brute_extend<D: Digraph>(d: &D, p: &OrientedPathType, seq: &mut Vec<usize>) -> bool {
    let n = d.order();
    if seq.len() == n {
        return true;
    }
    let last = *seq.last().unwrap();
    for w in 0..n {
        if seq.contains(&w) {
            continue;
        }
        let ok = if p.arc_is_forward(seq.len() - 1) {
            d.has_arc(last, w)
        } else {
            d.has_arc(w, last)
        };
        if ok {
            seq.push(w);
            if brute_extend(d, p, seq) {
                return true;
            }
            seq.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathtype::Sign;

    fn out(blocks: &[usize]) -> OrientedPathType {
        OrientedPathType::new(Sign::Out, blocks.to_vec()).unwrap()
    }

    fn inn(blocks: &[usize]) -> OrientedPathType {
        OrientedPathType::new(Sign::In, blocks.to_vec()).unwrap()
    }

    fn three_cycle() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn paley_seven() -> Tournament {
        Tournament::from_fn(7, |i, j| [1, 2, 4].contains(&((j + 7 - i) % 7))).unwrap()
    }

    #[test]
    fn transitive_directed_path() {
        let t = Tournament::transitive(8);
        let w = contains_path(&t, &out(&[7])).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(w.to_string(), "1 2 3 4 5 6 7 8");
    }

    #[test]
    fn antidirected_non_containment() {
        assert!(contains_path(&three_cycle(), &out(&[1, 1]))
            .unwrap()
            .is_none());
        assert!(contains_path(&three_cycle(), &inn(&[1, 1]))
            .unwrap()
            .is_none());
        let anti = out(&[1, 1, 1, 1, 1, 1]);
        assert!(contains_path(&paley_seven(), &anti).unwrap().is_none());
    }

    #[test]
    fn small_fixed_witnesses() {
        let t3 = Tournament::transitive(3);
        let w = contains_path(&t3, &out(&[1, 1])).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 2, 1]);
        let w = contains_path(&t3, &inn(&[1, 1])).unwrap().unwrap();
        assert_eq!(w.vertices(), &[1, 0, 2]);

        let c3 = three_cycle();
        let w = contains_path(&c3, &out(&[2])).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn origins_fixed_cases() {
        // 1->2, 1->3, 2->3, 3->4, 4->1, 4->2 (1-based)
        let t4a =
            Tournament::from_arcs(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]).unwrap();
        let o = origins(&t4a, &out(&[1, 2])).unwrap();
        assert_eq!(o.to_vec(), vec![0, 1]);
        assert_eq!(o.to_string(), "{1,2}");

        // 1->2, 1->3, 2->3, 3->4, 3->5, 4->5, 4->1, 4->2, 5->1, 5->2
        let arcs = [
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 0),
            (3, 1),
            (4, 0),
            (4, 1),
        ];
        let t5e = Tournament::from_arcs(5, &arcs).unwrap();
        assert_eq!(
            origins(&t5e, &out(&[2, 2])).unwrap().to_vec(),
            vec![2, 3, 4]
        );

        let t5 = Tournament::transitive(5);
        assert_eq!(origins(&t5, &out(&[4])).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn deleted_arc_origins() {
        // 1->2, 2->3, 3->1, 1->4, 2->4, 3->4, 4->5, 5->1, 5->2, 5->3
        let arcs = [
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 0),
            (4, 1),
            (4, 2),
        ];
        let t5c = Tournament::from_arcs(5, &arcs).unwrap();
        let p = out(&[2, 1, 1]);
        assert_eq!(origins(&t5c, &p).unwrap().to_vec(), vec![4]);
        let w = contains_path(&t5c, &p).unwrap().unwrap();
        assert_eq!(w.vertices(), &[4, 0, 3, 1, 2]);

        let d = t5c.delete_arc(3, 4).unwrap();
        assert!(origins(&d, &p).unwrap().len() <= 5);
    }

    #[test]
    fn origin_constraints() {
        let t = Tournament::transitive(4);
        let p = out(&[1, 1, 1]);
        let o = origins(&t, &p).unwrap();
        for v in o.iter() {
            let w = EmbedRequest::new(&t, &p)
                .require_origin(v)
                .solve()
                .unwrap()
                .unwrap();
            assert_eq!(w.origin(), v);
        }
        for v in 0..4 {
            if !o.contains(v) {
                assert!(EmbedRequest::new(&t, &p)
                    .require_origin(v)
                    .solve()
                    .unwrap()
                    .is_none());
            }
        }
        let unconstrained = contains_path(&t, &p).unwrap().unwrap();
        let blocked = EmbedRequest::new(&t, &p)
            .forbid_origins(VertexSet::singleton(unconstrained.origin()))
            .solve()
            .unwrap();
        if let Some(w) = blocked {
            assert_ne!(w.origin(), unconstrained.origin());
        }
    }

    #[test]
    fn directed_path_counts() {
        for n in 1..=8 {
            assert_eq!(
                count_hamiltonian_directed_paths(&Tournament::transitive(n)).unwrap(),
                1
            );
        }
        assert_eq!(count_hamiltonian_directed_paths(&three_cycle()).unwrap(), 3);
    }

    #[test]
    fn count_matches_engine_existence() {
        for code in 0u32..64 {
            let mut k = 0;
            let t = Tournament::from_fn(4, |_, _| {
                let b = (code >> k) & 1 == 1;
                k += 1;
                b
            })
            .unwrap();
            let cnt = count_hamiltonian_directed_paths(&t).unwrap();
            assert!(cnt >= 1, "every tournament has a directed spanning path");
            assert!(contains_path(&t, &out(&[3])).unwrap().is_some());
        }
    }

    #[test]
    fn brute_force_agrees_on_order_four() {
        for code in 0u32..64 {
            let mut k = 0;
            let t = Tournament::from_fn(4, |_, _| {
                let b = (code >> k) & 1 == 1;
                k += 1;
                b
            })
            .unwrap();
            for p in OrientedPathType::all_path_types(4).unwrap() {
                let fast = contains_path(&t, &p).unwrap();
                let slow = brute_force_contains(&t, &p).unwrap();
                assert_eq!(fast, slow, "disagreement on {t:?} type {p}");
            }
        }
    }

    #[test]
    fn guards() {
        let t10 = Tournament::transitive(10);
        assert!(brute_force_contains(&t10, &out(&[9])).is_err());
        assert!(contains_path(&t10, &out(&[9])).unwrap().is_some());
        assert!(contains_path(&Tournament::transitive(4), &out(&[4])).is_err());
        assert!(origins(&Tournament::transitive(4), &out(&[2])).is_err());
    }
}
