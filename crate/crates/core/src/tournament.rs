//! Tournaments, arc-deleted digraphs, vertex sets, and the `trn` text format.
//!
//! Adjacency is stored as per-vertex out-neighbor bitmasks, which keeps every
//! reachability and section computation a handful of word operations for the
//! orders this crate works with.

use crate::error::Error;
use crate::Result;
use std::fmt;

/// Hard structural bound: vertex sets are `u32` bitmasks.
pub const MAX_ORDER: usize = 32;

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertices of a digraph of order at most [`MAX_ORDER`], as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        VertexSet(((1u64 << n) - 1) as u32)
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Prints 1-based labels, e.g. `{1,3,4}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({self})")
    }
}

// ============================================================================
// Digraph trait
// ============================================================================

/// Common view over tournaments and their arc-deleted variants.
///
/// The provided methods implement sections, strongness, and the strong
/// component decomposition; they are exact for every digraph of order at most
/// [`MAX_ORDER`].
pub trait Digraph {
    fn order(&self) -> usize;

    /// Bitmask of `{w : v -> w}`.
    fn out_mask(&self, v: usize) -> u32;

    /// Bitmask of `{w : w -> v}`.
    fn in_mask(&self, v: usize) -> u32;

    #[inline]
    fn vertex_mask(&self) -> u32 {
        VertexSet::full(self.order()).0
    }

    #[inline]
    fn has_arc(&self, u: usize, v: usize) -> bool {
        (self.out_mask(u) >> v) & 1 == 1
    }

    #[inline]
    fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out_mask(v))
    }

    #[inline]
    fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.in_mask(v))
    }

    /// Vertices reachable from `seeds` by directed walks (including `seeds`).
    fn outsection(&self, seeds: VertexSet) -> VertexSet {
        let mut reach = seeds.0 & self.vertex_mask();
        loop {
            let mut next = reach;
            let mut frontier = reach;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.out_mask(v);
            }
            if next == reach {
                return VertexSet(reach);
            }
            reach = next;
        }
    }

    /// Vertices from which `seeds` can be reached (including `seeds`).
    fn insection(&self, seeds: VertexSet) -> VertexSet {
        let mut reach = seeds.0 & self.vertex_mask();
        loop {
            let mut next = reach;
            let mut frontier = reach;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.in_mask(v);
            }
            if next == reach {
                return VertexSet(reach);
            }
            reach = next;
        }
    }

    fn is_outgenerator(&self, v: usize) -> bool {
        self.outsection(VertexSet::singleton(v)).0 == self.vertex_mask()
    }

    fn is_ingenerator(&self, v: usize) -> bool {
        self.insection(VertexSet::singleton(v)).0 == self.vertex_mask()
    }

    fn is_strong(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        self.is_outgenerator(0) && self.is_ingenerator(0)
    }

    /// Strong components in condensation order (dominating components first).
    ///
    /// For a tournament the condensation is a total order. Deleting one arc
    /// can leave a single incomparable component pair; ties break on the
    /// smallest vertex label so the result stays deterministic.
    fn strong_components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut comp_of = [usize::MAX; MAX_ORDER];
        let mut comps: Vec<VertexSet> = Vec::new();
        for v in 0..n {
            if comp_of[v] != usize::MAX {
                continue;
            }
            let c = self
                .outsection(VertexSet::singleton(v))
                .intersection(self.insection(VertexSet::singleton(v)));
            for w in c.iter() {
                comp_of[w] = comps.len();
            }
            comps.push(c);
        }
        // Kahn's algorithm on the condensation.
        let mut ordered = Vec::with_capacity(comps.len());
        let mut remaining: Vec<VertexSet> = comps;
        while !remaining.is_empty() {
            let mut pick = usize::MAX;
            for (i, c) in remaining.iter().enumerate() {
                let has_in = remaining
                    .iter()
                    .enumerate()
                    .any(|(j, d)| j != i && d.iter().any(|u| self.out_mask(u) & c.0 != 0));
                if !has_in {
                    let lead = c.0.trailing_zeros();
                    if pick == usize::MAX || lead < remaining[pick].0.trailing_zeros() {
                        pick = i;
                    }
                }
            }
            ordered.push(remaining.swap_remove(pick));
        }
        ordered
    }
}

// ============================================================================
// Tournament
// ============================================================================

/// A tournament on `n <= 32` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: u8,
    out: [u32; MAX_ORDER],
}

impl Digraph for Tournament {
    #[inline]
    fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    fn out_mask(&self, v: usize) -> u32 {
        self.out[v]
    }

    #[inline]
    fn in_mask(&self, v: usize) -> u32 {
        self.vertex_mask() & !self.out[v] & !(1 << v)
    }
}

impl Tournament {
    /// Builds a tournament by orienting each pair: `forward(i, j)` with
    /// `i < j` decides whether the arc runs `i -> j`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "tournament construction",
                order: n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let mut out = [0u32; MAX_ORDER];
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Ok(Tournament { n: n as u8, out })
    }

    /// Builds a tournament from an explicit arc list, which must orient every
    /// vertex pair exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "tournament construction",
                order: n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let mut out = [0u32; MAX_ORDER];
        let mut seen = vec![false; n * n];
        for &(u, v) in arcs {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!(
                    "arc ({u},{v}) out of range for order {n}"
                )));
            }
            let key = u.min(v) * n + u.max(v);
            if seen[key] {
                return Err(Error::InvalidArgument(format!(
                    "pair {{{u},{v}}} oriented twice"
                )));
            }
            seen[key] = true;
            out[u] |= 1 << v;
        }
        if arcs.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidArgument(format!(
                "expected {} arcs for order {n}, got {}",
                n * (n - 1) / 2,
                arcs.len()
            )));
        }
        Ok(Tournament { n: n as u8, out })
    }

    /// The transitive tournament: `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Self {
        Tournament::from_fn(n, |_, _| true).expect("order checked by caller")
    }

    /// Reverses every arc.
    pub fn dual(&self) -> Tournament {
        let n = self.order();
        Tournament::from_fn(n, |i, j| self.has_arc(j, i)).expect("same order")
    }

    /// Subtournament induced on `s`, relabeled with ascending labels.
    pub fn induced(&self, s: VertexSet) -> Tournament {
        let verts = s.to_vec();
        debug_assert!(
            !verts.is_empty() && *verts.last().unwrap() < self.order(),
            "induced set must be a nonempty subset of the vertices"
        );
        Tournament::from_fn(verts.len(), |i, j| self.has_arc(verts[i], verts[j]))
            .expect("subset of a valid order")
    }

    /// Relabeled copy: vertex `a` of the result is vertex `perm[a]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        debug_assert_eq!(perm.len(), self.order());
        Tournament::from_fn(self.order(), |i, j| self.has_arc(perm[i], perm[j]))
            .expect("same order")
    }

    /// Deletes the arc joining `x` and `y`, whichever direction it has.
    pub fn delete_arc(&self, x: usize, y: usize) -> Result<ArcDeletedDigraph> {
        let n = self.order();
        if x >= n || y >= n || x == y {
            return Err(Error::InvalidArgument(format!(
                "cannot delete arc between {} and {} in order {n}",
                x + 1,
                y + 1
            )));
        }
        Ok(ArcDeletedDigraph {
            base: self.clone(),
            x: x.min(y) as u8,
            y: x.max(y) as u8,
        })
    }

    /// Position of pair `(i, j)`, `i < j`, in the serialized bit layout:
    /// pairs are ordered row by row, `(0,1), (0,2), ..., (n-2,n-1)`.
    #[inline]
    pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < n);
        i * n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Serializes as a `trn` line.
    pub fn to_trn(&self) -> String {
        let n = self.order();
        let hex = trn_hex(self);
        if hex.is_empty() {
            format!("trn {n}")
        } else {
            format!("trn {n} {hex}")
        }
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_trn())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_trn())
    }
}

// ============================================================================
// ArcDeletedDigraph
// ============================================================================

/// A tournament with the arc between one vertex pair removed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArcDeletedDigraph {
    base: Tournament,
    x: u8,
    y: u8,
}

impl Digraph for ArcDeletedDigraph {
    #[inline]
    fn order(&self) -> usize {
        self.base.order()
    }

    #[inline]
    fn out_mask(&self, v: usize) -> u32 {
        let mut m = self.base.out[v];
        if v == self.x as usize {
            m &= !(1 << self.y);
        } else if v == self.y as usize {
            m &= !(1 << self.x);
        }
        m
    }

    #[inline]
    fn in_mask(&self, v: usize) -> u32 {
        let mut m = self.base.in_mask(v);
        if v == self.x as usize {
            m &= !(1 << self.y);
        } else if v == self.y as usize {
            m &= !(1 << self.x);
        }
        m
    }
}

impl ArcDeletedDigraph {
    pub fn base(&self) -> &Tournament {
        &self.base
    }

    /// The deleted pair, smaller vertex first.
    pub fn deleted_pair(&self) -> (usize, usize) {
        (self.x as usize, self.y as usize)
    }

    pub fn dual(&self) -> ArcDeletedDigraph {
        ArcDeletedDigraph {
            base: self.base.dual(),
            x: self.x,
            y: self.y,
        }
    }

    /// Serializes as a `trnd` line (deleted endpoints printed 1-based).
    pub fn to_trnd(&self) -> String {
        let n = self.order();
        let hex = trn_hex(&self.base);
        format!("trnd {n} {hex} {} {}", self.x + 1, self.y + 1)
    }
}

impl fmt::Display for ArcDeletedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_trnd())
    }
}

impl fmt::Debug for ArcDeletedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_trnd())
    }
}

// ============================================================================
// trn text format
// ============================================================================
//
// `trn <n> <hex>`            -- a tournament
// `trnd <n> <hex> <x> <y>`   -- a tournament with the {x,y} arc deleted
//
// The hex field packs one bit per vertex pair in pair_index order, bit value 1
// meaning i -> j for the pair (i, j) with i < j. Bit 0 is the most significant
// bit of the first byte, and the field is zero-padded to ceil(n*(n-1)/8)
// bytes. An order-1 tournament has no hex field. Deleted endpoints x and y
// are 1-based.

/// Result of parsing a `trn`/`trnd` line.
pub enum TrnRecord {
    Tournament(Tournament),
    ArcDeleted(ArcDeletedDigraph),
}

fn trn_byte_len(n: usize) -> usize {
    (n * (n - 1)).div_ceil(8)
}

fn trn_hex(t: &Tournament) -> String {
    let n = t.order();
    let mut bytes = vec![0u8; trn_byte_len(n)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if t.has_arc(i, j) {
                bytes[k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses a `trn` or `trnd` line.
pub fn parse_trn(line: &str) -> Result<TrnRecord> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let (kind, rest) = match tokens.split_first() {
        Some((&"trn", rest)) => (false, rest),
        Some((&"trnd", rest)) => (true, rest),
        _ => {
            return Err(Error::Parse(
                "expected a line starting with 'trn' or 'trnd'".into(),
            ))
        }
    };
    let mut fields = rest.iter();
    let n: usize = fields
        .next()
        .ok_or_else(|| Error::Parse("missing order field".into()))?
        .parse()
        .map_err(|_| Error::Parse("order must be a positive integer".into()))?;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "trn parsing",
            order: n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    let expected_len = 2 * trn_byte_len(n);
    let hex = if expected_len == 0 {
        ""
    } else {
        fields
            .next()
            .ok_or_else(|| Error::Parse("missing hex field".into()))?
    };
    if hex.len() != expected_len {
        return Err(Error::Parse(format!(
            "hex field must be exactly {expected_len} digits for order {n}, got {}",
            hex.len()
        )));
    }
    let mut bytes = Vec::with_capacity(expected_len / 2);
    for chunk in hex.as_bytes().chunks(2) {
        let s = std::str::from_utf8(chunk).expect("ascii checked below");
        let b = u8::from_str_radix(s, 16)
            .map_err(|_| Error::Parse(format!("invalid hex digits '{s}'")))?;
        bytes.push(b);
    }
    let bit = |k: usize| (bytes[k / 8] >> (7 - k % 8)) & 1 == 1;
    let pair_count = n * (n - 1) / 2;
    for k in pair_count..bytes.len() * 8 {
        if bit(k) {
            return Err(Error::Parse("nonzero padding bits".into()));
        }
    }
    let mut k = 0;
    let t = Tournament::from_fn(n, |_, _| {
        let b = bit(k);
        k += 1;
        b
    })?;
    if !kind {
        if fields.next().is_some() {
            return Err(Error::Parse("unexpected trailing fields".into()));
        }
        return Ok(TrnRecord::Tournament(t));
    }
    let parse_vertex = |tok: Option<&&str>, name: &str| -> Result<usize> {
        let v: usize = tok
            .ok_or_else(|| Error::Parse(format!("missing {name} field")))?
            .parse()
            .map_err(|_| Error::Parse(format!("{name} must be a positive integer")))?;
        if v == 0 || v > n {
            return Err(Error::Parse(format!(
                "{name} must be a 1-based vertex label in 1..={n}"
            )));
        }
        Ok(v - 1)
    };
    let x = parse_vertex(fields.next(), "x")?;
    let y = parse_vertex(fields.next(), "y")?;
    if fields.next().is_some() {
        return Err(Error::Parse("unexpected trailing fields".into()));
    }
    if x == y {
        return Err(Error::Parse("deleted endpoints must differ".into()));
    }
    Ok(TrnRecord::ArcDeleted(t.delete_arc(x, y)?))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Reachability by repeated squaring of the boolean adjacency matrix;
    /// intentionally shares no code with the mask-based sections.
    fn reach_matrix(t: &Tournament) -> Vec<Vec<bool>> {
        let n = t.order();
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
            for (j, cell) in row.iter_mut().enumerate() {
                if i != j && t.has_arc(i, j) {
                    *cell = true;
                }
            }
        }
        for _ in 0..n {
            let prev = r.clone();
            for i in 0..n {
                for j in 0..n {
                    r[i][j] = (0..n).any(|k| prev[i][k] && prev[k][j]);
                }
            }
        }
        r
    }

    #[test]
    fn pair_index_matches_row_major_layout() {
        let expect = [
            ((0, 1), 0),
            ((0, 2), 1),
            ((0, 3), 2),
            ((1, 2), 3),
            ((1, 3), 4),
            ((2, 3), 5),
        ];
        for ((i, j), k) in expect {
            assert_eq!(Tournament::pair_index(4, i, j), k);
        }
    }

    #[test]
    fn trn_frozen_examples() {
        assert_eq!(Tournament::transitive(4).to_trn(), "trn 4 fc00");
        assert_eq!(three_cycle().to_trn(), "trn 3 a0");
        assert_eq!(Tournament::transitive(1).to_trn(), "trn 1");
    }

    #[test]
    fn trn_round_trip() {
        for n in 1..=8 {
            let t = Tournament::from_fn(n, |i, j| (i * 7 + j * 3) % 5 < 2).unwrap();
            match parse_trn(&t.to_trn()).unwrap() {
                TrnRecord::Tournament(u) => assert_eq!(t, u),
                _ => panic!("expected a tournament record"),
            }
        }
    }

    #[test]
    fn trnd_round_trip() {
        let t = Tournament::transitive(5);
        let d = t.delete_arc(3, 1).unwrap();
        assert_eq!(d.deleted_pair(), (1, 3));
        let line = d.to_trnd();
        match parse_trn(&line).unwrap() {
            TrnRecord::ArcDeleted(e) => {
                assert_eq!(e.to_trnd(), line);
                assert_eq!(e.base(), &t);
            }
            _ => panic!("expected an arc-deleted record"),
        }
    }

    #[test]
    fn parse_rejections() {
        assert!(parse_trn("tru 3 a0").is_err());
        assert!(parse_trn("trn 0").is_err());
        assert!(parse_trn("trn 3 a").is_err());
        assert!(
            parse_trn("trn 3 a1").is_err(),
            "nonzero padding must be rejected"
        );
        assert!(parse_trn("trn 4 fc00 extra").is_err());
        assert!(parse_trn("trnd 4 fc00 2 2").is_err());
        assert!(parse_trn("trnd 4 fc00 0 2").is_err());
        assert!(parse_trn("trnd 4 fc00 5 2").is_err());
    }

    #[test]
    fn delete_arc_masks() {
        let t = Tournament::transitive(3);
        let d = t.delete_arc(0, 1).unwrap();
        assert_eq!(d.out_neighbors(0).to_vec(), vec![2]);
        assert_eq!(d.in_neighbors(1).to_vec(), Vec::<usize>::new());
        assert_eq!(d.out_neighbors(1).to_vec(), vec![2]);
        assert!(t.delete_arc(1, 1).is_err());
    }

    #[test]
    fn sections_fixed_case() {
        // 1->2, 1->3, 2->3, 3->4, 3->5, 4->5, 4->1, 4->2, 5->1, 5->2 (1-based)
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
        let t = Tournament::from_arcs(5, &arcs).unwrap();
        assert_eq!(t.insection(VertexSet::singleton(0)), VertexSet::full(5));
        assert_eq!(
            t.outsection(VertexSet::singleton(0)),
            VertexSet::full(5),
            "the case is strong, so the outsection is everything too"
        );
    }

    #[test]
    fn sections_and_strongness_match_matrix_oracle() {
        // Every labeled tournament on 4 and 5 vertices.
        for n in [4usize, 5] {
            let pairs = n * (n - 1) / 2;
            for code in 0u32..1 << pairs {
                let mut k = 0;
                let t = Tournament::from_fn(n, |_, _| {
                    let b = (code >> k) & 1 == 1;
                    k += 1;
                    b
                })
                .unwrap();
                let r = reach_matrix(&t);
                for (v, row) in r.iter().enumerate() {
                    let out: VertexSet = (0..n).filter(|&w| row[w]).collect();
                    let inn: VertexSet = (0..n).filter(|&w| r[w][v]).collect();
                    assert_eq!(t.outsection(VertexSet::singleton(v)), out);
                    assert_eq!(t.insection(VertexSet::singleton(v)), inn);
                }
                let strong_oracle = (0..n).all(|i| (0..n).all(|j| r[i][j]));
                assert_eq!(t.is_strong(), strong_oracle);
            }
        }
    }

    #[test]
    fn strong_components_ordering() {
        assert_eq!(
            Tournament::transitive(4).strong_components(),
            (0..4).map(VertexSet::singleton).collect::<Vec<_>>()
        );
        assert_eq!(three_cycle().strong_components(), vec![VertexSet::full(3)]);

        // 3-cycle dominating a sink vertex.
        let arcs = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
        let t = Tournament::from_arcs(4, &arcs).unwrap();
        assert_eq!(
            t.strong_components(),
            vec![VertexSet::full(3), VertexSet::singleton(3)]
        );

        // Deleting the only arc of an order-2 tournament leaves two
        // incomparable components; ties break on the smaller label.
        let d = Tournament::transitive(2).delete_arc(0, 1).unwrap();
        assert_eq!(
            d.strong_components(),
            vec![VertexSet::singleton(0), VertexSet::singleton(1)]
        );
    }

    #[test]
    fn generators() {
        let t = Tournament::transitive(4);
        assert!(t.is_outgenerator(0));
        assert!(!t.is_outgenerator(3));
        assert!(t.is_ingenerator(3));
        assert!(!t.is_ingenerator(0));
        assert!(three_cycle().is_outgenerator(2));
    }

    #[test]
    fn dual_and_induced() {
        let t =
            Tournament::from_arcs(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]).unwrap();
        assert_eq!(t.dual().dual(), t);
        assert!(t.dual().has_arc(1, 0));
        let s: VertexSet = [0, 2, 3].into_iter().collect();
        let sub = t.induced(s);
        assert_eq!(sub.order(), 3);
        assert!(sub.has_arc(0, 1)); // 0->2 in the original
        assert!(sub.has_arc(1, 2)); // 2->3
        assert!(sub.has_arc(2, 0)); // 3->0
    }

    #[test]
    fn from_arcs_validation() {
        assert!(Tournament::from_arcs(3, &[(0, 1), (1, 2)]).is_err());
        assert!(Tournament::from_arcs(3, &[(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(Tournament::from_arcs(3, &[(0, 1), (1, 2), (0, 3)]).is_err());
    }

    #[test]
    fn vertex_set_display_is_one_based() {
        let s: VertexSet = [0, 2, 3].into_iter().collect();
        assert_eq!(s.to_string(), "{1,3,4}");
    }
}
