//! Parameterized exception families: fixed small cores extended by filler
//! tournaments, together with their non-origin sets and, where the written
//! path schemata are fully determined, synthesized witness paths.
//!
//! Layout convention: core vertices occupy the lowest labels in a fixed
//! per-family arrangement, filler vertices follow (for the two-filler
//! families the X block precedes the Y block). Witness synthesis threads a
//! directed path through the filler, built by the classical insertion
//! argument, so every witness is deterministic.

use super::figures::figure;
use super::FiniteExceptionRecord;
use crate::embed::PathWitness;
use crate::enumerate::{all_tournaments, ENUM_MAX_ORDER};
use crate::error::Error;
use crate::pathtype::{OrientedPathType, Sign};
use crate::tournament::{Digraph, Tournament, VertexSet};
use crate::Result;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyId {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
    E8,
    E9,
    E10,
    E11,
    E12,
    E13,
    E14,
    E8Prime,
    E9Prime,
    E10Prime,
}

use FamilyId::*;

impl FamilyId {
    pub const ALL: [FamilyId; 17] = [
        E1, E2, E3, E4, E5, E6, E7, E8, E9, E10, E11, E12, E13, E14, E8Prime, E9Prime, E10Prime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            E1 => "E1",
            E2 => "E2",
            E3 => "E3",
            E4 => "E4",
            E5 => "E5",
            E6 => "E6",
            E7 => "E7",
            E8 => "E8",
            E9 => "E9",
            E10 => "E10",
            E11 => "E11",
            E12 => "E12",
            E13 => "E13",
            E14 => "E14",
            E8Prime => "E8'",
            E9Prime => "E9'",
            E10Prime => "E10'",
        }
    }

    /// Number of core (non-filler) vertices.
    pub fn core_order(self) -> usize {
        match self {
            E5 => 1,
            E3 | E6 => 2,
            E1 | E4 | E7 | E8 | E8Prime | E11 => 3,
            E2 | E12 => 4,
            E9 | E9Prime | E13 => 5,
            E14 => 6,
            E10 | E10Prime => 7,
        }
    }

    /// Smallest order at which the family exists.
    pub fn min_order(self) -> usize {
        match self {
            E1 => 4,
            E2 | E3 | E5 | E6 | E8 | E8Prime | E11 => 5,
            E4 | E7 | E12 => 6,
            E9 | E9Prime | E13 => 7,
            E14 => 8,
            E10 | E10Prime => 9,
        }
    }

    fn takes_anchor(self) -> bool {
        matches!(self, E3 | E4 | E5 | E6)
    }

    fn takes_second_filler(self) -> bool {
        matches!(self, E5 | E6)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family plus everything needed to instantiate it at a concrete order.
pub struct FamilyConstructor {
    pub family: FamilyId,
    pub order: usize,
    /// The filler X (for the one-filler families, the only filler).
    pub x: Tournament,
    /// Index into `x`'s vertices of the distinguished filler vertex,
    /// required exactly by the families that have one.
    pub x_anchor: Option<usize>,
    /// The filler Y, required exactly by the two-filler families.
    pub y: Option<Tournament>,
}

impl FamilyConstructor {
    pub fn build(&self) -> Result<FiniteExceptionRecord> {
        let f = self.family;
        let n = self.order;
        let core = f.core_order();
        let nx = self.x.order();
        let ny = self.y.as_ref().map_or(0, |y| y.order());

        let fail = |condition: &str| -> Error {
            Error::FamilyCondition {
                family: f.name(),
                condition: condition.to_string(),
            }
        };

        if f.takes_second_filler() != self.y.is_some() {
            return Err(fail(if f.takes_second_filler() {
                "a second filler Y is required"
            } else {
                "no second filler is accepted"
            }));
        }
        if f.takes_anchor() != self.x_anchor.is_some() {
            return Err(fail(if f.takes_anchor() {
                "an anchor vertex in X is required"
            } else {
                "no anchor vertex is accepted"
            }));
        }
        if core + nx + ny != n {
            return Err(fail("filler sizes must add up to the requested order"));
        }
        if n < f.min_order() {
            return Err(fail("order below the family's minimum"));
        }
        if let Some(a) = self.x_anchor {
            if a >= nx {
                return Err(fail("anchor index outside X"));
            }
        }
        match f {
            E3 | E4 => {
                let a = self.x_anchor.unwrap();
                if self.x.out_neighbors(a).is_empty() {
                    return Err(fail("the anchor needs an out-neighbor inside X"));
                }
                if !self.x.is_ingenerator(a) {
                    return Err(fail("the anchor must be an ingenerator of X"));
                }
            }
            E5 | E6 => {
                if ny < 2 {
                    return Err(fail("|Y| >= 2 is required"));
                }
                if !self.x.is_ingenerator(self.x_anchor.unwrap()) {
                    return Err(fail("the anchor must be an ingenerator of X"));
                }
            }
            E7 => {
                if nx < 3 {
                    return Err(fail("the filler needs at least 3 vertices"));
                }
                if nx == 3 && self.x.is_strong() {
                    return Err(fail("the filler must not be the 3-cycle"));
                }
            }
            E8 | E8Prime | E9 | E9Prime | E10 | E10Prime | E11 | E12 | E13 | E14 => {
                if nx < 2 {
                    return Err(fail("|X| >= 2 is required"));
                }
            }
            E1 | E2 => {}
        }

        let x_start = core;
        let anchor = self.x_anchor.map(|a| x_start + a);
        let t = self.assemble(x_start);
        let xs: Vec<usize> = (x_start..x_start + nx).collect();
        let ys: Vec<usize> = (x_start + nx..n).collect();

        let blocks: Vec<usize> = match f {
            E1 | E3 | E5 => vec![1, n - 2],
            E2 | E4 | E6 => vec![2, n - 3],
            E7 | E11 | E13 => vec![1, 1, n - 3],
            E12 | E14 => vec![2, 1, n - 4],
            E8 => vec![n - 4, 1, 1, 1],
            E8Prime => vec![n - 4, 2, 1],
            E9 => vec![n - 6, 1, 1, 1, 1, 1],
            E9Prime => vec![n - 6, 2, 1, 1, 1],
            E10 => vec![n - 8, 1, 1, 1, 1, 1, 1, 1],
            E10Prime => vec![n - 8, 2, 1, 1, 1, 1, 1],
        };
        let path_type = OrientedPathType::new(Sign::Out, blocks)?;

        let non_origins: VertexSet = match f {
            E1 => [0, 1, 2].into_iter().collect(),
            E2 => [2, 3].into_iter().collect(),
            E3 | E5 => [0, anchor.unwrap()].into_iter().collect(),
            E4 => [0, 2].into_iter().collect(),
            E6 | E11 | E13 => [0, 1].into_iter().collect(),
            E7 => [1, 2].into_iter().collect(),
            E12 => [0, 3].into_iter().collect(),
            E14 => [0, 5].into_iter().collect(),
            E8 | E8Prime | E9 | E9Prime | E10 | E10Prime => xs.iter().copied().collect(),
        };

        let witnesses = synthesize_witnesses(f, &t, &xs, &ys, anchor);

        Ok(FiniteExceptionRecord {
            id: format!("{}({})", f, n),
            tournament: t,
            path_type,
            non_origins,
            witnesses,
            flags: Vec::new(),
            family: Some(f),
        })
    }

    /// Orients every vertex pair of the instance: core-vs-core by the family
    /// pattern, filler internals by the supplied tournaments, and the
    /// cross arcs by the family's domination rules.
    fn assemble(&self, x_start: usize) -> Tournament {
        let f = self.family;
        let nx = self.x.order();
        let anchor = self.x_anchor.map(|a| x_start + a);
        let in_x = |v: usize| v >= x_start && v < x_start + nx;
        // u -> v?, for u != v; each arm answers for an unordered pair.
        let dir = |u: usize, v: usize| -> bool {
            if in_x(u) && in_x(v) {
                return self.x.has_arc(u - x_start, v - x_start);
            }
            if let Some(y) = &self.y {
                let y_start = x_start + nx;
                if u >= y_start && v >= y_start {
                    return y.has_arc(u - y_start, v - y_start);
                }
            }
            let cyc3 = |a: usize, b: usize| (b + 3 - a) % 3 == 1;
            match f {
                E1 => {
                    if u < 3 && v < 3 {
                        cyc3(u, v)
                    } else {
                        in_x(u)
                    }
                }
                E2 => {
                    if u < 4 && v < 4 {
                        [(0, 1), (1, 2), (1, 3), (2, 0), (3, 0), (3, 2)].contains(&(u, v))
                    } else {
                        in_x(u)
                    }
                }
                E3 => match (u, v) {
                    (1, 0) => true,
                    (0, 1) => false,
                    (x, 0) => Some(x) != anchor,
                    (0, x) => Some(x) == anchor,
                    (_, 1) => true,
                    (1, _) => false,
                    _ => unreachable!(),
                },
                E4 => match (u, v) {
                    (1, 0) | (1, 2) | (0, 2) => true,
                    (0, 1) | (2, 1) | (2, 0) => false,
                    (x, 0) | (x, 2) if in_x(x) => Some(x) != anchor,
                    (0, x) | (2, x) => Some(x) == anchor,
                    (_, 1) => true,
                    (1, _) => false,
                    _ => unreachable!(),
                },
                E5 => {
                    // 0, then X, then Y.
                    if u == 0 {
                        Some(v) == anchor
                    } else if v == 0 {
                        Some(u) != anchor || !in_x(u)
                    } else {
                        in_x(u)
                    }
                }
                E6 => match (u, v) {
                    (1, 0) => true,
                    (0, 1) => false,
                    (w, 0) | (w, 1) => Some(w) != anchor,
                    (0, w) | (1, w) => Some(w) == anchor,
                    _ => in_x(u),
                },
                E7 => match (u, v) {
                    (1, 0) | (2, 0) | (2, 1) => true,
                    (0, 1) | (0, 2) | (1, 2) => false,
                    (0, _) => true,
                    (_, 0) => false,
                    (_, 1) | (_, 2) => true,
                    (1, _) | (2, _) => false,
                    _ => unreachable!(),
                },
                E8 | E8Prime => {
                    if u < 3 && v < 3 {
                        cyc3(u, v)
                    } else {
                        u < 3
                    }
                }
                E9 | E9Prime => {
                    if u < 5 && v < 5 {
                        figure("5A").has_arc(u, v)
                    } else {
                        u < 5
                    }
                }
                E10 | E10Prime => {
                    if u < 7 && v < 7 {
                        figure("7A").has_arc(u, v)
                    } else {
                        u < 7
                    }
                }
                E11 => match (u, v) {
                    _ if u < 3 && v < 3 => cyc3(u, v),
                    (x, 0) | (x, 1) if in_x(x) => true,
                    (0, _) | (1, _) => false,
                    (2, _) => true,
                    (_, 2) => false,
                    _ => unreachable!(),
                },
                E12 => match (u, v) {
                    (0, 1) | (1, 2) | (2, 0) | (2, 3) | (3, 0) | (3, 1) => true,
                    (1, 0) | (2, 1) | (0, 2) | (3, 2) | (0, 3) | (1, 3) => false,
                    (x, 0) | (x, 1) | (x, 3) if in_x(x) => true,
                    (0, _) | (1, _) | (3, _) => false,
                    (2, _) => true,
                    (_, 2) => false,
                    _ => unreachable!(),
                },
                E13 | E14 => {
                    let mid = |w: usize| (2..5).contains(&w);
                    let core = f.core_order();
                    if u < core && v < core {
                        match (u, v) {
                            (0, 1) => true,
                            (1, 0) => false,
                            (1, w) | (w, 0) if mid(w) => true,
                            (w, 1) | (0, w) if mid(w) => false,
                            (5, 0) | (5, 1) => true,
                            (0, 5) | (1, 5) => false,
                            (w, 5) if mid(w) => true,
                            (5, w) if mid(w) => false,
                            (a, b) => {
                                debug_assert!(mid(a) && mid(b));
                                (b + 3 - a) % 3 == 1 // 2->3, 3->4, 4->2
                            }
                        }
                    } else if in_x(u) {
                        // X beats 0 and 5, loses to the middle cycle, beats 1.
                        !mid(v)
                    } else {
                        mid(u)
                    }
                }
            }
        };
        Tournament::from_fn(self.order, dir).expect("order validated in build")
    }
}

/// Hamiltonian directed path of the sub-tournament on `verts`, found by the
/// insertion argument; deterministic given the (ascending) vertex order.
fn directed_outpath(t: &Tournament, verts: &[usize]) -> Vec<usize> {
    let mut seq: Vec<usize> = Vec::with_capacity(verts.len());
    for &v in verts {
        let pos = seq
            .iter()
            .position(|&w| t.has_arc(v, w))
            .unwrap_or(seq.len());
        seq.insert(pos, v);
    }
    seq
}

fn directed_inpath(t: &Tournament, verts: &[usize]) -> Vec<usize> {
    let mut seq = directed_outpath(t, verts);
    seq.reverse();
    seq
}

fn without(verts: &[usize], drop: &[usize]) -> Vec<usize> {
    verts
        .iter()
        .copied()
        .filter(|v| !drop.contains(v))
        .collect()
}

fn witness(parts: &[&[usize]]) -> PathWitness {
    PathWitness::new(parts.concat())
}

/// One witness per origin for the families whose written schemata pin every
/// arc down; the remaining families get an empty list and are validated
/// through the search engine instead.
fn synthesize_witnesses(
    f: FamilyId,
    t: &Tournament,
    xs: &[usize],
    ys: &[usize],
    anchor: Option<usize>,
) -> Vec<PathWitness> {
    let inx = |drop: &[usize]| directed_inpath(t, &without(xs, drop));
    let outx = |drop: &[usize]| directed_outpath(t, &without(xs, drop));
    let mut w = Vec::new();
    match f {
        E1 => {
            for &u in xs {
                w.push(witness(&[&[u, 0, 2, 1], &inx(&[u])]));
            }
        }
        E2 => {
            w.push(witness(&[&[0, 1, 2, 3], &inx(&[])]));
            w.push(witness(&[&[1, 2, 0, 3], &inx(&[])]));
            for &u in xs {
                w.push(witness(&[&[u, 2, 0, 3, 1], &inx(&[u])]));
            }
        }
        E5 => {
            let a = anchor.unwrap();
            for &x in xs.iter().filter(|&&x| x != a) {
                w.push(witness(&[&[x, 0], &directed_inpath(t, ys), &inx(&[x])]));
            }
            for &y in ys {
                w.push(witness(&[
                    &[y, 0],
                    &directed_inpath(t, &without(ys, &[y])),
                    &inx(&[]),
                ]));
            }
        }
        E6 => {
            let z = ys[0];
            for &x in xs {
                w.push(witness(&[
                    &[x, z, 0, 1],
                    &directed_inpath(t, &without(ys, &[z])),
                    &inx(&[x]),
                ]));
            }
            for &y in ys {
                w.push(witness(&[
                    &[y, 1, 0],
                    &directed_inpath(t, &without(ys, &[y])),
                    &inx(&[]),
                ]));
            }
        }
        E8 | E8Prime => {
            let u = xs[0];
            let o = outx(&[u]);
            if f == E8 {
                w.push(witness(&[&[0], &o, &[1, u, 2]]));
                w.push(witness(&[&[1], &o, &[0, u, 2]]));
                w.push(witness(&[&[2], &o, &[1, u, 0]]));
            } else {
                w.push(witness(&[&[0], &o, &[2, 1, u]]));
                w.push(witness(&[&[1], &o, &[0, 2, u]]));
                w.push(witness(&[&[2], &o, &[1, 0, u]]));
            }
        }
        E9 | E9Prime => {
            let u = xs[0];
            let o = outx(&[u]);
            for s in 0..5 {
                let r = |k: usize| (s + k) % 5;
                let tail = if f == E9 {
                    vec![r(1), u, r(3), r(4), r(2)]
                } else {
                    vec![r(2), r(1), u, r(3), r(4)]
                };
                w.push(witness(&[&[s], &o, &tail]));
            }
        }
        E10 | E10Prime => {
            let u = xs[0];
            let o = outx(&[u]);
            for s in 0..7 {
                let r = |k: usize| (s + k) % 7;
                let tail = if f == E10 {
                    vec![r(1), u, r(3), r(4), r(2), r(6), r(5)]
                } else {
                    vec![r(2), r(1), u, r(3), r(5), r(4), r(6)]
                };
                w.push(witness(&[&[s], &o, &tail]));
            }
        }
        E11 => {
            w.push(witness(&[&[2, 0], &outx(&[]), &[1]]));
            for &u in xs {
                w.push(witness(&[&[u, 0], &outx(&[u]), &[1, 2]]));
            }
        }
        E13 => {
            w.push(witness(&[&[2, 3, 1, 4], &outx(&[]), &[0]]));
            w.push(witness(&[&[3, 4, 1, 2], &outx(&[]), &[0]]));
            w.push(witness(&[&[4, 2, 1, 3], &outx(&[]), &[0]]));
            for &u in xs {
                let v = *xs.iter().find(|&&v| v != u).unwrap();
                w.push(witness(&[&[u, 0, v, 1, 2, 3, 4], &outx(&[u, v])]));
            }
        }
        E14 => {
            let u = xs[0];
            let o = outx(&[u]);
            w.push(witness(&[&[1, 3, u, 4, 2], &o, &[5, 0]]));
            w.push(witness(&[&[2, u, 0, 5, 1, 3, 4], &o]));
            w.push(witness(&[&[3, u, 0, 5, 1, 4, 2], &o]));
            w.push(witness(&[&[4, u, 0, 5, 1, 2, 3], &o]));
            for &u in xs {
                w.push(witness(&[&[u, 5, 0, 2, 3, 4], &outx(&[u]), &[1]]));
            }
        }
        E3 | E4 | E7 | E12 => {}
    }
    w
}

/// Every buildable instance of every family at the given order. `filler_cap`
/// bounds the order of each filler; `None` enumerates all of them. Filler
/// tournaments range over all isomorphism classes, anchors over all vertices,
/// and combinations violating a family condition are skipped.
pub fn family_instances_at_order(
    order: usize,
    filler_cap: Option<usize>,
) -> Result<Vec<FiniteExceptionRecord>> {
    if order == 0 || order > ENUM_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "family instance enumeration",
            order,
            min: 1,
            max: ENUM_MAX_ORDER,
        });
    }
    let cap = filler_cap.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for f in FamilyId::ALL {
        if order < f.min_order() {
            continue;
        }
        let free = order - f.core_order();
        if f.takes_second_filler() {
            for kx in 1..free {
                let ky = free - kx;
                if ky < 2 || kx > cap || ky > cap {
                    continue;
                }
                for x in all_tournaments(kx)? {
                    for y in all_tournaments(ky)? {
                        for a in 0..kx {
                            let c = FamilyConstructor {
                                family: f,
                                order,
                                x: x.clone(),
                                x_anchor: Some(a),
                                y: Some(y.clone()),
                            };
                            if let Ok(r) = c.build() {
                                out.push(r);
                            }
                        }
                    }
                }
            }
        } else {
            if free == 0 || free > cap {
                continue;
            }
            for x in all_tournaments(free)? {
                let anchors: Vec<Option<usize>> = if f.takes_anchor() {
                    (0..free).map(Some).collect()
                } else {
                    vec![None]
                };
                for a in anchors {
                    let c = FamilyConstructor {
                        family: f,
                        order,
                        x: x.clone(),
                        x_anchor: a,
                        y: None,
                    };
                    if let Ok(r) = c.build() {
                        out.push(r);
                    }
                }
            }
        }
    }
    Ok(out)
}
