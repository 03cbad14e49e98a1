//! Moves on sequences, for the king-move base metric.
//!
//! Positions are label indices: label `0` sits just before `core[0]`, and a
//! split or cut at position `p` separates symbols `..p` from `p..`. Positions
//! may lie in the terminals.
//!
//! Each move is computed exactly from the entry labels:
//! - move 1 (parallel line) is a sliding minimum over `widen + 1` labels,
//!   which inserts `widen` zeros at the plateau of a sequence in conjectured
//!   form;
//! - move 2 (diagonal line to horizontal line) doubles every symbol through
//!   the tables `-1 -> -1-1, 0 -> 0-1, 1 -> 00` left of the split and
//!   `-1 -> 00, 0 -> 10, 1 -> 11` right of it;
//! - move 3 (horizontal line to diagonal line) takes running minima over
//!   pairs of labels moving away from the cut;
//! - move 4 (diagonal to the other diagonal) gives `(-1)(1)`, or `(-1)(0)(1)`
//!   when the lines meet between lattice points.

use super::{PatternError, Sequence, Symbol};
use serde::{Deserialize, Serialize};
use std::fmt;
use Symbol::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveSpec {
    M0,
    M1 { widen: usize },
    M2 { split: i64 },
    M3 { cut: i64 },
    M4 { zero: bool },
}

impl MoveSpec {
    pub fn index(self) -> u8 {
        match self {
            MoveSpec::M0 => 0,
            MoveSpec::M1 { .. } => 1,
            MoveSpec::M2 { .. } => 2,
            MoveSpec::M3 { .. } => 3,
            MoveSpec::M4 { .. } => 4,
        }
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveSpec::M0 => write!(f, "M0"),
            MoveSpec::M1 { widen } => write!(f, "M1[{widen}]"),
            MoveSpec::M2 { split } => write!(f, "M2@{split}"),
            MoveSpec::M3 { cut } => write!(f, "M3@{cut}"),
            MoveSpec::M4 { zero } => write!(f, "M4[{}]", *zero as u8),
        }
    }
}

pub fn m2_left(s: Symbol) -> [Symbol; 2] {
    match s {
        Minus => [Minus, Minus],
        Zero => [Zero, Minus],
        Plus => [Zero, Zero],
    }
}

pub fn m2_right(s: Symbol) -> [Symbol; 2] {
    match s {
        Minus => [Zero, Zero],
        Zero => [Plus, Zero],
        Plus => [Plus, Plus],
    }
}

/// The pair table of move 3 on `{0, 1}`: `00 -> -1`, `01, 10 -> 0`, `11 -> 1`.
pub fn m3_pair(a: Symbol, b: Symbol) -> Symbol {
    let v = |s: Symbol| if s == Plus { 1 } else { 0 };
    Symbol::from_value(v(a) + v(b) - 1).expect("in range")
}

pub fn apply_move(s: &Sequence, m: MoveSpec) -> Sequence {
    match m {
        MoveSpec::M0 => s.reversed(),
        MoveSpec::M1 { widen } => sliding_min(s, widen),
        MoveSpec::M2 { split } => double(s, split),
        MoveSpec::M3 { cut } => halve(s, cut),
        MoveSpec::M4 { zero } => {
            if zero {
                Sequence::zeros(1)
            } else {
                Sequence::trivial()
            }
        }
    }
}

fn from_labels(labels: &[i64]) -> Sequence {
    Sequence::new(labels.windows(2).map(|w| Symbol::from_value(w[1] - w[0]).expect("unit steps")).collect())
}

fn sliding_min(s: &Sequence, widen: usize) -> Sequence {
    let pad = widen as i64 + 2;
    let n = s.len() as i64;
    let labels = s.labels(-pad, n + pad);
    let out: Vec<i64> = labels.windows(widen + 1).map(|w| *w.iter().min().unwrap()).collect();
    from_labels(&out)
}

fn double(s: &Sequence, split: i64) -> Sequence {
    let lo = split.min(0) - 1;
    let hi = split.max(s.len() as i64) + 1;
    let mut out = Vec::with_capacity(2 * (hi - lo) as usize);
    for i in lo..hi {
        let img = if i < split { m2_left(s.at(i)) } else { m2_right(s.at(i)) };
        out.extend_from_slice(&img);
    }
    Sequence::new(out)
}

fn halve(s: &Sequence, cut: i64) -> Sequence {
    let n = s.len() as i64;
    let reach = (n + cut.abs()) / 2 + 3;
    let from = cut - 2 * reach;
    let labels = s.labels(from, cut + 2 * reach);
    let at = |i: i64| labels[(i - from) as usize];
    let mut out = vec![0i64; (2 * reach + 1) as usize];
    let mut m = at(cut);
    out[reach as usize] = m;
    for j in 1..=reach {
        m = m.min(at(cut + 2 * j - 1)).min(at(cut + 2 * j));
        out[(reach + j) as usize] = j + m;
    }
    m = at(cut);
    for j in 1..=reach {
        m = m.min(at(cut - 2 * j + 1)).min(at(cut - 2 * j));
        out[(reach - j) as usize] = j + m;
    }
    from_labels(&out)
}

/// Move 1 as plateau widening, defined on sequences in conjectured form.
pub fn m1_by_insertion(s: &Sequence, widen: usize) -> Result<Sequence, PatternError> {
    if !s.is_conjectured_form() {
        return Err(PatternError::NotConjectured(super::format_sequence(s)));
    }
    let (lo, _) = s.plateau();
    let mut core = s.core().to_vec();
    core.splice(lo as usize..lo as usize, std::iter::repeat(Zero).take(widen));
    Ok(Sequence::new(core))
}

/// Move 3 through the pair table on the side of the cut facing the plateau,
/// reading `-1` as `0`. Defined on sequences in conjectured form.
pub fn m3_by_pairs(s: &Sequence, cut: i64) -> Result<Sequence, PatternError> {
    if !s.is_conjectured_form() {
        return Err(PatternError::NotConjectured(super::format_sequence(s)));
    }
    let n = s.len() as i64;
    let right_clean = (cut..n).all(|i| s.at(i) != Minus);
    if !right_clean {
        // Every symbol left of the cut is then free of 1s; mirror.
        let r = m3_by_pairs(&s.reversed(), n - cut)?;
        return Ok(r.reversed());
    }
    let mut images = Vec::new();
    let mut i = cut;
    while i > 0 {
        images.push(m3_pair(s.at(i - 2), s.at(i - 1)));
        i -= 2;
    }
    images.reverse();
    Ok(Sequence::new(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::parse_sequence;

    fn seq(t: &str) -> Sequence {
        parse_sequence(t).unwrap()
    }

    #[test]
    fn doubling_chain_from_one_zero() {
        let t = Sequence::zeros(1);
        let a = apply_move(&t, MoveSpec::M2 { split: 0 });
        assert_eq!(a, seq("(-1)(10)(1)"));
        let b = apply_move(&t, MoveSpec::M2 { split: -1 });
        assert_eq!(b, seq("(-1)(0010)(1)"));
        let c = apply_move(&b, MoveSpec::M2 { split: -1 });
        assert_eq!(c, seq("(-1)(00)(10)^2(1110)(1)"));
    }

    #[test]
    fn mirror_equivariance_examples() {
        let s = seq("(-1)(0)(-1)(0)(1)(0)(1)");
        for p in -3..10 {
            let n = s.len() as i64;
            assert_eq!(
                apply_move(&s, MoveSpec::M2 { split: p }).reversed(),
                apply_move(&s.reversed(), MoveSpec::M2 { split: n - p }),
            );
            assert_eq!(
                apply_move(&s, MoveSpec::M3 { cut: p }).reversed(),
                apply_move(&s.reversed(), MoveSpec::M3 { cut: n - p }),
            );
        }
    }

    #[test]
    fn halving_matches_pairs_on_examples() {
        let s = seq("(-1)(0)(10)(1110)(1)");
        for cut in -2..12 {
            assert_eq!(apply_move(&s, MoveSpec::M3 { cut }), m3_by_pairs(&s, cut).unwrap(), "cut {cut}");
        }
        assert_eq!(apply_move(&s, MoveSpec::M3 { cut: 7 }), seq("(-1)(0)(10)(1)"));
    }

    #[test]
    fn widening_inserts_zeros() {
        let s = seq("(-1)(0-1)(10)(1)");
        assert_eq!(apply_move(&s, MoveSpec::M1 { widen: 2 }), seq("(-1)(0-1)(0)^2(10)(1)"));
        assert_eq!(m1_by_insertion(&s, 2).unwrap(), seq("(-1)(0-1)(0)^2(10)(1)"));
        assert_eq!(apply_move(&s, MoveSpec::M1 { widen: 0 }), s);
    }

    #[test]
    fn fourth_move_is_trivial() {
        let s = seq("(-1)(0)(10)(1110)(1)");
        assert_eq!(apply_move(&s, MoveSpec::M4 { zero: false }), Sequence::trivial());
        assert_eq!(apply_move(&s, MoveSpec::M4 { zero: true }), Sequence::zeros(1));
    }
}
