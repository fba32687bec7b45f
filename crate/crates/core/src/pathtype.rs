//! Oriented path types: the block signature `+(b1,...,bs)` / `-(b1,...,bs)`.
//!
//! An oriented path on `m + 1` vertices is described by which of its `m`
//! consecutive arcs point forward (along the vertex sequence) and which point
//! backward. The type records the sign of the first arc (`+` forward, `-`
//! backward) and the lengths of the maximal runs of equally oriented arcs.

use crate::error::Error;
use crate::tournament::{Digraph, MAX_ORDER};
use crate::Result;
use std::fmt;

/// Direction of the first arc of an oriented path.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    /// First arc points forward: the path starts with an outgoing arc.
    Out,
    /// First arc points backward.
    In,
}

impl Sign {
    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Out => Sign::In,
            Sign::In => Sign::Out,
        }
    }
}

/// The type of an oriented path: sign plus block lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedPathType {
    sign: Sign,
    blocks: Vec<usize>,
}

impl OrientedPathType {
    pub fn new(sign: Sign, blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument(
                "a path type needs at least one block".into(),
            ));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidArgument(
                "block lengths must be positive".into(),
            ));
        }
        Ok(OrientedPathType { sign, blocks })
    }

    /// Shorthand for a type whose first arc points forward.
    pub fn outpath(blocks: &[usize]) -> Result<Self> {
        OrientedPathType::new(Sign::Out, blocks.to_vec())
    }

    /// Shorthand for a type whose first arc points backward.
    pub fn inpath(blocks: &[usize]) -> Result<Self> {
        OrientedPathType::new(Sign::In, blocks.to_vec())
    }

    #[inline]
    pub fn sign(&self) -> Sign {
        self.sign
    }

    #[inline]
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Length of the first block.
    #[inline]
    pub fn b1(&self) -> usize {
        self.blocks[0]
    }

    #[inline]
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Number of vertices of a path of this type.
    #[inline]
    pub fn order(&self) -> usize {
        self.arc_count() + 1
    }

    /// A directed path: every arc points the same way.
    #[inline]
    pub fn is_directed(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Whether arc `i` (0-based along the vertex sequence) points forward.
    pub fn arc_is_forward(&self, i: usize) -> bool {
        debug_assert!(i < self.arc_count());
        let mut fwd = self.sign == Sign::Out;
        let mut seen = 0;
        for &b in &self.blocks {
            if i < seen + b {
                return fwd;
            }
            seen += b;
            fwd = !fwd;
        }
        unreachable!("arc index checked against arc_count")
    }

    fn from_forward_bits(bits: &[bool]) -> Self {
        debug_assert!(!bits.is_empty());
        let sign = if bits[0] { Sign::Out } else { Sign::In };
        let mut blocks = Vec::new();
        let mut run = 1;
        for w in bits.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                blocks.push(run);
                run = 1;
            }
        }
        blocks.push(run);
        OrientedPathType { sign, blocks }
    }

    fn forward_bits(&self) -> Vec<bool> {
        (0..self.arc_count())
            .map(|i| self.arc_is_forward(i))
            .collect()
    }

    /// Type of the same path walked from the other end.
    pub fn reverse(&self) -> OrientedPathType {
        let mut bits = self.forward_bits();
        bits.reverse();
        for b in &mut bits {
            *b = !*b;
        }
        OrientedPathType::from_forward_bits(&bits)
    }

    /// Type of the path with its first vertex removed.
    pub fn strip_origin(&self) -> Result<OrientedPathType> {
        if self.arc_count() == 1 {
            return Err(Error::DegenerateType(format!(
                "{self} has a single arc; removing the origin leaves no path"
            )));
        }
        let mut blocks = self.blocks.clone();
        let sign = if blocks[0] > 1 {
            blocks[0] -= 1;
            self.sign
        } else {
            blocks.remove(0);
            self.sign.flip()
        };
        Ok(OrientedPathType { sign, blocks })
    }

    /// Same sign, first block lengthened by one arc.
    pub fn with_first_block_extended(&self) -> OrientedPathType {
        let mut blocks = self.blocks.clone();
        blocks[0] += 1;
        OrientedPathType {
            sign: self.sign,
            blocks,
        }
    }

    /// Type whose sign is flipped but whose blocks are unchanged (the type a
    /// path takes in the digraph with all arcs reversed).
    pub fn flip_sign(&self) -> OrientedPathType {
        OrientedPathType {
            sign: self.sign.flip(),
            blocks: self.blocks.clone(),
        }
    }

    /// Decodes an orientation index: arc `i` points forward exactly when bit
    /// `i` of `k` is zero.
    pub fn type_at(order: usize, k: u64) -> Result<OrientedPathType> {
        if !(2..=MAX_ORDER).contains(&order) {
            return Err(Error::OrderOutOfRange {
                what: "path type decoding",
                order,
                min: 2,
                max: MAX_ORDER,
            });
        }
        let m = order - 1;
        if k >> m != 0 {
            return Err(Error::InvalidArgument(format!(
                "orientation index {k} out of range for order {order}"
            )));
        }
        let bits: Vec<bool> = (0..m).map(|i| (k >> i) & 1 == 0).collect();
        Ok(OrientedPathType::from_forward_bits(&bits))
    }

    /// Inverse of [`type_at`](Self::type_at).
    pub fn orientation_index(&self) -> u64 {
        let mut k = 0u64;
        for (i, fwd) in self.forward_bits().iter().enumerate() {
            if !fwd {
                k |= 1 << i;
            }
        }
        k
    }

    /// Every type of the given order, in orientation-index order.
    pub fn all_path_types(order: usize) -> Result<Vec<OrientedPathType>> {
        if !(2..=MAX_ORDER).contains(&order) {
            return Err(Error::OrderOutOfRange {
                what: "path type enumeration",
                order,
                min: 2,
                max: MAX_ORDER,
            });
        }
        Ok((0..1u64 << (order - 1))
            .map(|k| OrientedPathType::type_at(order, k).expect("index in range"))
            .collect())
    }

    /// Reads the type off a concrete vertex sequence in `d`. The vertices
    /// must be distinct and every consecutive pair must still carry an arc.
    pub fn type_of_witness(d: &impl Digraph, seq: &[usize]) -> Result<OrientedPathType> {
        let n = d.order();
        if seq.len() < 2 {
            return Err(Error::NotAPath("a path needs at least two vertices".into()));
        }
        let mut seen = 0u32;
        for &v in seq {
            if v >= n {
                return Err(Error::NotAPath(format!(
                    "vertex {} exceeds order {n}",
                    v + 1
                )));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::NotAPath(format!(
                    "vertex {} repeats in the sequence",
                    v + 1
                )));
            }
            seen |= 1 << v;
        }
        let mut bits = Vec::with_capacity(seq.len() - 1);
        for w in seq.windows(2) {
            let (u, v) = (w[0], w[1]);
            if d.has_arc(u, v) {
                bits.push(true);
            } else if d.has_arc(v, u) {
                bits.push(false);
            } else {
                return Err(Error::InvalidWitness(format!(
                    "no arc joins {} and {}",
                    u + 1,
                    v + 1
                )));
            }
        }
        Ok(OrientedPathType::from_forward_bits(&bits))
    }

    /// Parses the display form, e.g. `+(1,2,3)` or `-(1)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (sign, rest) = match s.chars().next() {
            Some('+') => (Sign::Out, &s[1..]),
            Some('-') => (Sign::In, &s[1..]),
            _ => {
                return Err(Error::Parse(format!(
                    "path type '{s}' must start with '+' or '-'"
                )))
            }
        };
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Parse(format!("path type '{s}' must wrap blocks in parentheses"))
            })?;
        let blocks = inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::Parse(format!("bad block length '{}' in '{s}'", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        OrientedPathType::new(sign, blocks)
    }
}

impl fmt::Display for OrientedPathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", if self.sign == Sign::Out { '+' } else { '-' })?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for OrientedPathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::Tournament;

    fn out(blocks: &[usize]) -> OrientedPathType {
        OrientedPathType::outpath(blocks).unwrap()
    }

    fn inn(blocks: &[usize]) -> OrientedPathType {
        OrientedPathType::inpath(blocks).unwrap()
    }

    #[test]
    fn order_two_enumeration() {
        assert_eq!(
            OrientedPathType::all_path_types(2).unwrap(),
            vec![out(&[1]), inn(&[1])]
        );
    }

    #[test]
    fn decoding_spot_values() {
        assert_eq!(
            OrientedPathType::type_at(4, 0b101).unwrap(),
            inn(&[1, 1, 1])
        );
        assert_eq!(OrientedPathType::type_at(4, 0).unwrap(), out(&[3]));
        assert_eq!(OrientedPathType::type_at(4, 0b110).unwrap(), out(&[1, 2]));
        assert_eq!(OrientedPathType::type_at(4, 0b111).unwrap(), inn(&[3]));
        assert!(OrientedPathType::type_at(4, 8).is_err());
        assert!(OrientedPathType::type_at(1, 0).is_err());
    }

    #[test]
    fn index_round_trip() {
        for order in 2..=7 {
            for k in 0..1u64 << (order - 1) {
                let t = OrientedPathType::type_at(order, k).unwrap();
                assert_eq!(t.order(), order);
                assert_eq!(t.orientation_index(), k);
            }
        }
    }

    #[test]
    fn reverse_hand_cases() {
        assert_eq!(out(&[1, 2]).reverse(), out(&[2, 1]));
        assert_eq!(inn(&[1, 1, 1]).reverse(), out(&[1, 1, 1]));
        assert_eq!(out(&[3]).reverse(), inn(&[3]));
        assert_eq!(out(&[2, 1, 3]).reverse(), inn(&[3, 1, 2]));
    }

    #[test]
    fn reverse_is_an_involution() {
        for order in 2..=8 {
            for t in OrientedPathType::all_path_types(order).unwrap() {
                assert_eq!(t.reverse().reverse(), t);
            }
        }
    }

    #[test]
    fn strip_hand_cases() {
        assert_eq!(out(&[1, 2]).strip_origin().unwrap(), inn(&[2]));
        assert_eq!(out(&[2, 1]).strip_origin().unwrap(), out(&[1, 1]));
        assert_eq!(inn(&[1, 1]).strip_origin().unwrap(), out(&[1]));
        assert!(out(&[1]).strip_origin().is_err());
    }

    #[test]
    fn strip_shortens_by_one() {
        for order in 3..=8 {
            for t in OrientedPathType::all_path_types(order).unwrap() {
                assert_eq!(t.strip_origin().unwrap().order(), order - 1);
            }
        }
    }

    #[test]
    fn extension_and_sign_flip() {
        assert_eq!(out(&[1, 2]).with_first_block_extended(), out(&[2, 2]));
        assert_eq!(inn(&[2]).flip_sign(), out(&[2]));
    }

    #[test]
    fn display_and_parse() {
        let t = out(&[1, 2, 3]);
        assert_eq!(t.to_string(), "+(1,2,3)");
        assert_eq!(OrientedPathType::parse("+(1,2,3)").unwrap(), t);
        assert_eq!(OrientedPathType::parse("-(1)").unwrap(), inn(&[1]));
        assert_eq!(
            OrientedPathType::parse(" +( 2 , 1 ) ").unwrap(),
            out(&[2, 1])
        );
        assert!(OrientedPathType::parse("(1,2)").is_err());
        assert!(OrientedPathType::parse("+(1,0)").is_err());
        assert!(OrientedPathType::parse("+()").is_err());
        assert!(OrientedPathType::parse("+1,2").is_err());
    }

    #[test]
    fn witness_typing() {
        let t = Tournament::transitive(3);
        assert_eq!(
            OrientedPathType::type_of_witness(&t, &[0, 2, 1]).unwrap(),
            out(&[1, 1])
        );
        assert_eq!(
            OrientedPathType::type_of_witness(&t, &[0, 1, 2]).unwrap(),
            out(&[2])
        );
        assert!(OrientedPathType::type_of_witness(&t, &[0]).is_err());
        assert!(OrientedPathType::type_of_witness(&t, &[0, 1, 0]).is_err());
        assert!(OrientedPathType::type_of_witness(&t, &[0, 3]).is_err());

        let d = t.delete_arc(0, 1).unwrap();
        assert!(matches!(
            OrientedPathType::type_of_witness(&d, &[0, 1, 2]),
            Err(Error::InvalidWitness(_))
        ));
        assert_eq!(
            OrientedPathType::type_of_witness(&d, &[0, 2, 1]).unwrap(),
            out(&[1, 1])
        );
    }

    #[test]
    fn arc_direction_lookup() {
        let t = out(&[2, 1, 3]);
        let dirs: Vec<bool> = (0..6).map(|i| t.arc_is_forward(i)).collect();
        assert_eq!(dirs, vec![true, true, false, true, true, true]);
    }
}
