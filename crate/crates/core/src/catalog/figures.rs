//! The named small tournaments that finite exception records live on.
//!
//! Each entry is a hand-checked arc list over 1-based vertex labels; `"12"`
//! means vertex 1 beats vertex 2. Arc lists orient every pair exactly once,
//! which [`Tournament::from_arcs`] enforces at load time, so a mistranscribed
//! pair cannot slip through silently.

use crate::tournament::Tournament;
use std::collections::HashMap;
use std::sync::OnceLock;

const FIGURES: [(&str, usize, &str); 31] = [
    ("3A", 3, "12 23 31"),
    ("4A", 4, "12 13 23 34 41 42"),
    ("5A", 5, "12 13 23 24 34 35 41 45 51 52"),
    ("5B", 5, "12 23 13 14 24 34 45 51 52 53"),
    ("5C", 5, "12 23 31 14 24 34 45 51 52 53"),
    ("5D", 5, "12 13 23 34 41 42 15 35 52 54"),
    ("5E", 5, "12 13 23 34 35 45 41 42 51 52"),
    ("6A", 6, "12 23 24 31 41 43 15 25 35 45 56 61 62 63 64"),
    ("6B", 6, "12 31 14 15 61 32 24 25 62 34 53 63 54 46 56"),
    ("6C", 6, "12 23 31 45 64 65 41 42 43 51 52 53 16 26 36"),
    ("6D", 6, "12 34 56 13 14 23 24 35 36 45 46 51 52 61 62"),
    ("6E", 6, "12 13 14 51 61 23 24 52 62 34 35 63 45 46 56"),
    ("6F", 6, "12 15 23 26 31 34 41 42 46 52 53 54 61 63 65"),
    ("6G", 6, "14 15 21 25 31 32 36 42 43 53 54 56 61 62 64"),
    ("6H", 6, "12 23 31 54 14 15 24 25 34 35 46 56 61 62 63"),
    ("6I", 6, "21 31 14 15 16 32 24 25 62 43 53 36 54 64 56"),
    ("6J", 6, "21 26 16 54 43 53 14 15 24 25 64 65 31 32 36"),
    ("6K", 6, "12 31 14 15 61 32 24 25 62 43 53 63 54 64 56"),
    ("6L", 6, "12 13 23 45 64 65 41 42 43 51 52 53 16 26 36"),
    (
        "7A",
        7,
        "12 13 15 23 24 26 34 35 37 41 45 46 52 56 57 61 63 67 71 72 74",
    ),
    (
        "7B",
        7,
        "31 32 12 45 56 64 17 27 37 74 75 76 41 42 43 51 52 53 61 62 63",
    ),
    (
        "7C",
        7,
        "12 23 31 45 56 64 17 27 37 74 75 76 41 42 43 51 52 53 61 62 63",
    ),
    (
        "7D",
        7,
        "12 34 45 53 67 13 14 15 23 24 25 36 37 46 47 56 57 61 62 71 72",
    ),
    (
        "7E",
        7,
        "12 13 14 15 34 45 53 32 42 52 67 26 27 36 37 46 47 56 57 61 71",
    ),
    (
        "7F",
        7,
        "13 32 21 45 67 41 42 43 51 52 53 16 17 26 27 36 37 64 56 74 75",
    ),
    (
        "7G",
        7,
        "12 23 31 37 71 72 16 26 36 76 64 65 45 41 42 43 47 51 52 53 57",
    ),
    (
        "7H",
        7,
        "12 31 14 15 61 17 32 24 25 62 27 43 53 63 73 54 64 74 56 57 67",
    ),
    (
        "7I",
        7,
        "47 75 54 32 21 31 46 56 76 61 62 63 14 15 17 24 25 27 34 35 37",
    ),
    (
        "7J",
        7,
        "21 13 32 45 56 64 47 57 67 41 42 51 52 61 62 71 72 34 35 36 73",
    ),
    (
        "8A",
        8,
        "12 13 14 16 23 24 26 51 52 71 72 81 82 34 35 37 45 46 48 56 57 67 68 63 78 74 83 85",
    ),
    (
        "8B",
        8,
        "21 81 82 13 32 38 45 56 64 47 57 67 41 42 48 51 52 58 61 62 68 71 72 78 34 35 36 73",
    ),
];

fn parse_figure(order: usize, arcs: &str) -> Tournament {
    let list: Vec<(usize, usize)> = arcs
        .split_whitespace()
        .map(|tok| {
            let b = tok.as_bytes();
            debug_assert_eq!(b.len(), 2);
            ((b[0] - b'1') as usize, (b[1] - b'1') as usize)
        })
        .collect();
    Tournament::from_arcs(order, &list).expect("figure arc list must orient every pair once")
}

fn table() -> &'static HashMap<&'static str, Tournament> {
    static TABLE: OnceLock<HashMap<&'static str, Tournament>> = OnceLock::new();
    TABLE.get_or_init(|| {
        FIGURES
            .iter()
            .map(|&(name, order, arcs)| (name, parse_figure(order, arcs)))
            .collect()
    })
}

/// Looks up a figure tournament by name, e.g. `"5E"`.
pub(crate) fn figure(name: &str) -> &'static Tournament {
    table()
        .get(name)
        .unwrap_or_else(|| panic!("unknown figure name {name}"))
}
