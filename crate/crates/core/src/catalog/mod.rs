//! The exception catalog: every tournament/path-type pair whose origin set
//! falls short, stored with its non-origin vertices and per-origin witness
//! paths, plus the degenerate patterns tied to a deleted vertex pair.
//!
//! The catalog has three layers: fixed small records ([`finite_catalog`]),
//! parameterized families that exist at every sufficiently large order
//! ([`families`]), and the dual of each of those under arc reversal
//! ([`dual_record`]). Lookup is isomorphism-aware: [`match_exception`]
//! canonicalizes the queried tournament and compares path types literally.

pub mod families;
mod figures;
mod records;

pub use families::{family_instances_at_order, FamilyConstructor, FamilyId};

use crate::embed::{self, PathWitness};
use crate::enumerate::{canonical_form, ENUM_MAX_ORDER};
use crate::error::Error;
use crate::pathtype::{OrientedPathType, Sign};
use crate::tournament::{parse_trn, Digraph, Tournament, TrnRecord, VertexSet};
use crate::Result;
use std::collections::HashMap;
use std::sync::OnceLock;

/// One catalog entry: a tournament together with a path type it fails to
/// realize from the vertices in `non_origins`.
#[derive(Clone, Debug)]
pub struct FiniteExceptionRecord {
    pub id: String,
    pub tournament: Tournament,
    pub path_type: OrientedPathType,
    /// The vertices that are not origins of `path_type` in `tournament`.
    pub non_origins: VertexSet,
    /// One realization per claimed origin, when the source schema pins the
    /// paths down; empty otherwise.
    pub witnesses: Vec<PathWitness>,
    /// Data reconciliations applied to this record, surfaced as validation
    /// notes.
    pub flags: Vec<String>,
    pub family: Option<FamilyId>,
}

/// Outcome of re-deriving one record from scratch.
#[derive(Clone, Debug)]
pub struct RecordReport {
    pub id: String,
    pub ok: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

/// The fixed small exceptions, in stable order. Built once, on first use.
pub fn finite_catalog() -> &'static [FiniteExceptionRecord] {
    static CATALOG: OnceLock<Vec<FiniteExceptionRecord>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        records::RAW_RECORDS
            .iter()
            .map(|raw| FiniteExceptionRecord {
                id: raw.id.to_string(),
                tournament: figures::figure(raw.figure).clone(),
                path_type: OrientedPathType::outpath(raw.blocks).expect("record block data"),
                non_origins: raw.s.iter().map(|&v| v - 1).collect(),
                witnesses: raw
                    .witnesses
                    .iter()
                    .map(|w| PathWitness::new(w.bytes().map(|b| (b - b'1') as usize).collect()))
                    .collect(),
                flags: raw.flags.iter().map(|s| s.to_string()).collect(),
                family: None,
            })
            .collect()
    })
}

/// Entries recovered by exhaustive verification. At orders 6 and 7 the
/// source table omits four rows that its own completeness guarantee
/// requires: these tournament/type classes provably admit a vertex pair
/// with a large enough section and no origin between them, yet no printed
/// row covers them. Each is stored under the canonical enumeration
/// labeling with engine-computed non-origins, flagged `reconstructed`, and
/// kept out of [`finite_catalog`], which holds exactly the printed rows.
pub fn supplemental_records() -> &'static [FiniteExceptionRecord] {
    static SUPPLEMENTS: OnceLock<Vec<FiniteExceptionRecord>> = OnceLock::new();
    SUPPLEMENTS.get_or_init(|| {
        let rows: [(&str, &str, &[usize], &[usize]); 4] = [
            ("Supp0", "trn 6 08200000", &[1, 1, 1, 2], &[1, 2]),
            ("Supp1", "trn 6 08360000", &[1, 2, 2], &[1, 2, 6]),
            ("Supp2", "trn 7 040080000000", &[2, 1, 1, 2], &[2, 3]),
            ("Supp3", "trn 7 0400d8000000", &[2, 2, 2], &[2, 3]),
        ];
        rows.iter()
            .map(|&(id, trn, blocks, s)| FiniteExceptionRecord {
                id: id.to_string(),
                tournament: match parse_trn(trn).expect("supplement data") {
                    TrnRecord::Tournament(t) => t,
                    TrnRecord::ArcDeleted(_) => unreachable!("supplements are intact"),
                },
                path_type: OrientedPathType::outpath(blocks).expect("supplement data"),
                non_origins: s.iter().map(|&v| v - 1).collect(),
                witnesses: Vec::new(),
                flags: vec!["reconstructed".to_string()],
                family: None,
            })
            .collect()
    })
}

/// The record obtained by reversing every arc: the tournament is dualized,
/// the path type flips sign, and the non-origin set and witness sequences
/// carry over unchanged.
pub fn dual_record(r: &FiniteExceptionRecord) -> FiniteExceptionRecord {
    FiniteExceptionRecord {
        id: format!("Dual{}", r.id),
        tournament: r.tournament.dual(),
        path_type: r.path_type.flip_sign(),
        non_origins: r.non_origins,
        witnesses: r.witnesses.clone(),
        flags: r.flags.clone(),
        family: r.family,
    }
}

/// Recomputes everything a record claims: that each witness is a spanning
/// path of the stated type with a distinct origin, that the search engine
/// finds exactly the complement of `non_origins` as origins, and that the
/// witness origins cover that complement whenever witnesses are present.
pub fn validate_record(r: &FiniteExceptionRecord) -> RecordReport {
    let mut failures = Vec::new();
    let mut notes: Vec<String> = r.flags.iter().map(|f| format!("flag: {f}")).collect();
    let t = &r.tournament;
    let n = t.order();

    if r.path_type.order() != n {
        failures.push(format!(
            "path type spans {} vertices, tournament has {n}",
            r.path_type.order()
        ));
        return RecordReport {
            id: r.id.clone(),
            ok: false,
            failures,
            notes,
        };
    }
    if !r.non_origins.is_subset_of(VertexSet(t.vertex_mask())) {
        failures.push("non-origin set mentions vertices outside the tournament".to_string());
    }
    let stated = VertexSet(t.vertex_mask()).difference(r.non_origins);

    match embed::origins(t, &r.path_type) {
        Ok(found) => {
            if found != stated {
                failures.push(format!(
                    "search engine finds origins {found}, record implies {stated}"
                ));
            }
        }
        Err(e) => failures.push(format!("origin search failed: {e}")),
    }

    let mut seen = VertexSet::EMPTY;
    for w in &r.witnesses {
        match OrientedPathType::type_of_witness(t, w.vertices()) {
            Ok(pt) if pt == r.path_type => {}
            Ok(pt) => failures.push(format!("witness {w} realizes {pt}, not {}", r.path_type)),
            Err(e) => {
                failures.push(format!("witness {w} is not a path here: {e}"));
                continue;
            }
        }
        if w.vertices().len() != n {
            failures.push(format!("witness {w} does not span the tournament"));
        }
        if seen.contains(w.origin()) {
            failures.push(format!("two witnesses share origin {}", w.origin() + 1));
        }
        seen.insert(w.origin());
    }
    if !r.witnesses.is_empty() || stated.is_empty() {
        if seen != stated {
            failures.push(format!("witness origins {seen} do not cover {stated}"));
        }
    } else {
        notes.push("witnesses omitted; origins established by the search engine alone".to_string());
    }

    RecordReport {
        id: r.id.clone(),
        ok: failures.is_empty(),
        failures,
        notes,
    }
}

type MatchKey = (u64, OrientedPathType);

fn match_index(n: usize) -> &'static HashMap<MatchKey, String> {
    static INDEXES: [OnceLock<HashMap<MatchKey, String>>; ENUM_MAX_ORDER + 1] =
        [const { OnceLock::new() }; ENUM_MAX_ORDER + 1];
    INDEXES[n].get_or_init(|| {
        let mut map: HashMap<MatchKey, String> = HashMap::new();
        let mut add = |r: &FiniteExceptionRecord| {
            let bits = canonical_form(&r.tournament)
                .expect("catalog orders fit the enumerator")
                .bits;
            map.entry((bits, r.path_type.clone()))
                .or_insert_with(|| r.id.clone());
        };
        for r in finite_catalog()
            .iter()
            .filter(|r| r.tournament.order() == n)
        {
            add(r);
            add(&dual_record(r));
        }
        for r in supplemental_records()
            .iter()
            .filter(|r| r.tournament.order() == n)
        {
            add(r);
            add(&dual_record(r));
        }
        for r in family_instances_at_order(n, None).expect("order bounded by the index range") {
            add(&r);
            add(&dual_record(&r));
        }
        map
    })
}

/// Looks `t` up in the catalog, up to isomorphism, paired with exactly the
/// path type `p`. Returns the id of the matching record, preferring finite
/// records over reconstructed supplements over family instances when more
/// than one describes the same pair.
///
/// Only orders 3 through 9 are indexed; any other order returns `None`,
/// even though the parameterized families keep existing above 9.
pub fn match_exception(t: &Tournament, p: &OrientedPathType) -> Option<String> {
    let n = t.order();
    if !(3..=ENUM_MAX_ORDER).contains(&n) || p.order() != n {
        return None;
    }
    let bits = canonical_form(t).expect("order checked above").bits;
    match_index(n).get(&(bits, p.clone())).cloned()
}

/// The three tournaments in which some antidirected spanning path is missing
/// entirely, in increasing order.
pub fn grunbaum_exceptions() -> Vec<Tournament> {
    vec![
        figures::figure("3A").clone(),
        figures::figure("5A").clone(),
        figures::figure("7A").clone(),
    ]
}

/// The two degenerate patterns that block a path type on an arc-deleted
/// tournament of large order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialExceptionKind {
    /// Directed path type, and the deleted pair have identical in- and
    /// out-neighborhoods with the former dominating the latter.
    DirectedTwins,
    /// Two-block type whose traversal must end twice in the same place: both
    /// deleted vertices are sinks (or, for the flipped sign, sources) once
    /// the arc is gone.
    TwoBlockSinks,
}

/// Decides whether deleting the arc between `x` and `y` leaves `(t, p)` in
/// one of the degenerate patterns. Types with three or more blocks never
/// qualify.
pub fn is_special_exception(
    t: &Tournament,
    p: &OrientedPathType,
    x: usize,
    y: usize,
) -> Result<Option<SpecialExceptionKind>> {
    if p.order() != t.order() {
        return Err(Error::InvalidArgument(format!(
            "path type spans {} vertices, tournament has {}",
            p.order(),
            t.order()
        )));
    }
    let d = t.delete_arc(x, y)?;
    match p.block_count() {
        1 => {
            let inn = d.in_mask(x);
            let out = d.out_mask(x);
            let twins = inn == d.in_mask(y) && out == d.out_mask(y);
            let dominates = || VertexSet(inn).iter().all(|a| d.out_mask(a) & out == out);
            Ok((twins && dominates()).then_some(SpecialExceptionKind::DirectedTwins))
        }
        2 => {
            let stuck = match p.sign() {
                Sign::Out => d.out_mask(x) == 0 && d.out_mask(y) == 0,
                Sign::In => d.in_mask(x) == 0 && d.in_mask(y) == 0,
            };
            Ok(stuck.then_some(SpecialExceptionKind::TwoBlockSinks))
        }
        _ => Ok(None),
    }
}
