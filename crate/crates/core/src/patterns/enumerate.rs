//! Everything reachable from the trivial sequence or pattern by moves 0, 2
//! and 3.
//!
//! Items are stored in their smaller orientation, so move 0 is never taken
//! explicitly; it shows up in a genealogy after a move whose result had to be
//! reversed. Two moves 0 in a row never occur.

use super::pattern_moves::{apply_move_pattern, cuts, PatternMove};
use super::{apply_move, MoveSpec, Pattern, PatternError, Sequence};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Largest depth accepted in sequence mode; sequences double in length
/// with each move 2.
pub const MAX_SEQUENCE_DEPTH: usize = 6;
/// Largest depth accepted in pattern mode.
pub const MAX_PATTERN_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerateMode {
    Sequence,
    Pattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOptions {
    pub depth: usize,
    /// Pattern mode: also cut inside repeated words.
    pub inner_cuts: bool,
}

/// An item with one shortest move word reaching it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reached<T, M> {
    pub item: T,
    pub depth: usize,
    pub moves: Vec<M>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reachable {
    Sequences(Vec<Reached<Sequence, MoveSpec>>),
    Patterns(Vec<Reached<Pattern, PatternMove>>),
}

impl Reachable {
    pub fn len(&self) -> usize {
        match self {
            Reachable::Sequences(v) => v.len(),
            Reachable::Patterns(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn enumerate_reachable(mode: EnumerateMode, opts: EnumerateOptions) -> Result<Reachable, PatternError> {
    Ok(match mode {
        EnumerateMode::Sequence => Reachable::Sequences(enumerate_sequences(opts.depth)?),
        EnumerateMode::Pattern => Reachable::Patterns(enumerate_patterns(opts)?),
    })
}

fn bfs<T, M, F, C>(start: T, depth: usize, reversal: M, canon: C, mut step: F) -> Result<Vec<Reached<T, M>>, PatternError>
where
    T: Ord + Clone,
    M: Clone,
    C: Fn(&T) -> T,
    F: FnMut(&T) -> Result<Vec<(M, T)>, PatternError>,
{
    let start = canon(&start);
    let mut seen: BTreeMap<T, Reached<T, M>> = BTreeMap::new();
    seen.insert(start.clone(), Reached { item: start.clone(), depth: 0, moves: Vec::new() });
    let mut frontier = vec![start];
    for d in 1..=depth {
        let mut next = Vec::new();
        for x in &frontier {
            let base = seen[x].moves.clone();
            for (m, y) in step(x)? {
                let c = canon(&y);
                if seen.contains_key(&c) {
                    continue;
                }
                let mut moves = base.clone();
                moves.push(m);
                if c != y {
                    moves.push(reversal.clone());
                }
                seen.insert(c.clone(), Reached { item: c.clone(), depth: d, moves });
                next.push(c);
            }
        }
        frontier = next;
    }
    Ok(seen.into_values().collect())
}

/// Sequences reachable from `(-1)(0)(1)`. Every move 2 and move 3 is tried at
/// every core position and followed by [`Sequence::with_plateau`].
pub fn enumerate_sequences(depth: usize) -> Result<Vec<Reached<Sequence, MoveSpec>>, PatternError> {
    if depth > MAX_SEQUENCE_DEPTH {
        return Err(PatternError::DepthBound { depth, max: MAX_SEQUENCE_DEPTH });
    }
    bfs(Sequence::zeros(1), depth, MoveSpec::M0, Sequence::canonical, |s| {
        let n = s.len() as i64;
        let mut out = Vec::new();
        for at in 0..=n {
            for m in [MoveSpec::M2 { split: at }, MoveSpec::M3 { cut: at }] {
                out.push((m, apply_move(s, m).with_plateau()));
            }
        }
        Ok(out)
    })
}

/// Patterns reachable from the trivial pattern. Move 3 is skipped on
/// patterns outside the conjectured form, which the caller sees anyway.
pub fn enumerate_patterns(opts: EnumerateOptions) -> Result<Vec<Reached<Pattern, PatternMove>>, PatternError> {
    if opts.depth > MAX_PATTERN_DEPTH {
        return Err(PatternError::DepthBound { depth: opts.depth, max: MAX_PATTERN_DEPTH });
    }
    bfs(Pattern::trivial(), opts.depth, PatternMove::M0, Pattern::canonical, |p| {
        let mut out = Vec::new();
        for cut in cuts(p, opts.inner_cuts) {
            for m in [PatternMove::M2(cut), PatternMove::M3(cut)] {
                match apply_move_pattern(p, m) {
                    Ok(images) => out.extend(images.into_iter().map(|q| (m, q))),
                    Err(PatternError::NotConjectured(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::parse_sequence;

    #[test]
    fn depth_zero_is_trivial() {
        let r = enumerate_patterns(EnumerateOptions { depth: 0, inner_cuts: false }).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].item, Pattern::trivial());
    }

    #[test]
    fn depth_one_has_one_nontrivial_pattern() {
        let r = enumerate_patterns(EnumerateOptions { depth: 1, inner_cuts: false }).unwrap();
        let nontrivial: Vec<_> = r.iter().filter(|x| !x.item.is_trivial()).collect();
        assert_eq!(nontrivial.len(), 1, "{r:?}");
        assert_eq!(nontrivial[0].item.canonical(), crate::patterns::parse_pattern("(-1)(0)(10)(1)").unwrap().canonical());
    }

    #[test]
    fn sequences_reach_the_doubling_chain() {
        let r = enumerate_sequences(3).unwrap();
        let target = parse_sequence("(-1)(0)(10)(1110)(1)").unwrap().canonical();
        let hit = r.iter().find(|x| x.item == target).expect("reached");
        assert!(hit.moves.windows(2).all(|w| !(w[0] == MoveSpec::M0 && w[1] == MoveSpec::M0)));
    }
}
