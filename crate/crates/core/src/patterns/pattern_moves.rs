//! Moves lifted from sequences to patterns.
//!
//! A move on a pattern yields every pattern needed to cover the images of
//! its instances. Moves 2 and 3 end with [`Pattern::widened`], the pattern
//! form of the identity move, so every produced pattern carries a `(0)`
//! plateau.

use super::moves::{m2_left, m2_right, m3_pair};
use super::{Group, Pattern, PatternError, Symbol};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Where a move 2 or move 3 splits a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cut {
    /// Before group `i` (`i == len` is before the right terminal).
    Boundary(usize),
    /// Inside group `group`, after `offset` symbols of its word. For a
    /// repeated word, offset 0 falls between two copies.
    Inside { group: usize, offset: usize },
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::Boundary(i) => write!(f, "|{i}"),
            Cut::Inside { group, offset } => write!(f, "{group}.{offset}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternMove {
    M0,
    M1,
    M2(Cut),
    M3(Cut),
    M4,
}

impl PatternMove {
    pub fn index(self) -> u8 {
        match self {
            PatternMove::M0 => 0,
            PatternMove::M1 => 1,
            PatternMove::M2(_) => 2,
            PatternMove::M3(_) => 3,
            PatternMove::M4 => 4,
        }
    }
}

impl fmt::Display for PatternMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternMove::M2(c) => write!(f, "2@{c}"),
            PatternMove::M3(c) => write!(f, "3@{c}"),
            m => write!(f, "{}", m.index()),
        }
    }
}

/// Cuts of a pattern: all group boundaries and positions inside single
/// words, plus positions inside repeated words when `inner` is set.
pub fn cuts(p: &Pattern, inner: bool) -> Vec<Cut> {
    let mut out: Vec<Cut> = (0..=p.groups().len()).map(Cut::Boundary).collect();
    for (i, g) in p.groups().iter().enumerate() {
        match g {
            Group::Once(w) => out.extend((1..w.len()).map(|o| Cut::Inside { group: i, offset: o })),
            Group::Many(w) if inner => out.extend((0..w.len()).map(|o| Cut::Inside { group: i, offset: o })),
            _ => {}
        }
    }
    out
}

type Split = (Vec<Group>, Vec<Group>);

fn split(p: &Pattern, cut: Cut) -> Result<Vec<Split>, PatternError> {
    let g = p.groups();
    if g.iter().any(|x| matches!(x, Group::Mix(_))) {
        return Err(PatternError::Unsupported(format!("moves on mixtures: {p}")));
    }
    let bad = || PatternError::BadCut(format!("{cut} in {p}"));
    match cut {
        Cut::Boundary(i) if i <= g.len() => Ok(vec![(g[..i].to_vec(), g[i..].to_vec())]),
        Cut::Boundary(_) => Err(bad()),
        Cut::Inside { group, offset } => {
            let (before, after) = (&g[..group.min(g.len())], g.get(group + 1..).unwrap_or(&[]));
            let with = |l: Vec<Group>, r: Vec<Group>| {
                let mut a = before.to_vec();
                a.extend(l);
                let mut b = r;
                b.extend_from_slice(after);
                (a, b)
            };
            match g.get(group) {
                Some(Group::Once(w)) if offset > 0 && offset < w.len() => {
                    Ok(vec![with(vec![Group::Once(w[..offset].to_vec())], vec![Group::Once(w[offset..].to_vec())])])
                }
                Some(Group::Many(w)) if offset == 0 => {
                    Ok(vec![with(vec![Group::Many(w.clone())], vec![Group::Many(w.clone())])])
                }
                Some(Group::Many(w)) if offset < w.len() => {
                    let (a, b) = (w[..offset].to_vec(), w[offset..].to_vec());
                    let lefts = [vec![Group::Once(a.clone())], vec![Group::Many(w.clone()), Group::Once(a)]];
                    let rights = [vec![Group::Once(b.clone())], vec![Group::Once(b), Group::Many(w.clone())]];
                    let mut out = Vec::new();
                    for l in &lefts {
                        for r in &rights {
                            out.push(with(l.clone(), r.clone()));
                        }
                    }
                    Ok(out)
                }
                _ => Err(bad()),
            }
        }
    }
}

fn map_groups(gs: &[Group], table: fn(Symbol) -> [Symbol; 2]) -> Vec<Group> {
    let img = |w: &[Symbol]| w.iter().flat_map(|&s| table(s)).collect::<Vec<_>>();
    gs.iter()
        .map(|g| match g {
            Group::Many(w) => Group::Many(img(w)),
            Group::Once(w) => Group::Once(img(w)),
            Group::Mix(_) => unreachable!("rejected by split"),
        })
        .collect()
}

fn reverse_groups(gs: &[Group]) -> Vec<Group> {
    Pattern::new(gs.to_vec()).reversed().groups().to_vec()
}

fn has(gs: &[Group], s: Symbol) -> bool {
    gs.iter().any(|g| g.contains(s))
}

/// Pairing state while reading right to left: the unpaired right member.
type Pending = Option<Symbol>;

fn read(s: Symbol) -> Symbol {
    if s == Symbol::Minus {
        Symbol::Zero
    } else {
        s
    }
}

/// Reads one word right to left from state `q`; the output is right to left too.
fn pair_word(w: &[Symbol], mut q: Pending) -> (Vec<Symbol>, Pending) {
    let mut out = Vec::new();
    for &s in w.iter().rev() {
        q = match q {
            None => Some(read(s)),
            Some(r) => {
                out.push(m3_pair(read(s), r));
                None
            }
        };
    }
    (out, q)
}

/// Move 3 when nothing right of the cut is `-1`: the right part becomes
/// terminal and the left part is paired from the cut outward.
fn halve_left(left: &[Group]) -> Vec<Vec<Group>> {
    // Partial results hold groups and words right to left.
    let mut states: Vec<(Vec<Group>, Pending)> = vec![(Vec::new(), None)];
    for g in left.iter().rev() {
        let mut next = Vec::new();
        for (out, q) in states {
            match g {
                Group::Once(w) => {
                    let (o, q2) = pair_word(w, q);
                    let mut out = out;
                    out.push(Group::Once(o));
                    next.push((out, q2));
                }
                Group::Many(w) => {
                    let mut qs = vec![q];
                    let mut outs = Vec::new();
                    let t = loop {
                        let (o, q2) = pair_word(w, *qs.last().unwrap());
                        outs.push(o);
                        if let Some(t) = qs.iter().position(|&x| x == q2) {
                            qs.push(q2);
                            break t;
                        }
                        qs.push(q2);
                    };
                    let c = outs.len() - t;
                    let cat = |r: std::ops::Range<usize>| outs[r].concat();
                    for k in 1..t + c {
                        let mut o = out.clone();
                        o.push(Group::Once(cat(0..k)));
                        next.push((o, qs[k]));
                    }
                    for r in 0..c {
                        let mut o = out.clone();
                        o.push(Group::Once(cat(0..t)));
                        o.push(Group::Many(cat(t..t + c)));
                        o.push(Group::Once(cat(t..t + r)));
                        next.push((o, qs[t + r]));
                    }
                }
                Group::Mix(_) => unreachable!("rejected by split"),
            }
        }
        states = next;
    }
    states
        .into_iter()
        .map(|(mut out, q)| {
            if let Some(r) = q {
                out.push(Group::Once(vec![m3_pair(Symbol::Zero, r)]));
            }
            out.reverse();
            for g in &mut out {
                if let Group::Once(w) | Group::Many(w) = g {
                    w.reverse();
                }
            }
            out
        })
        .collect()
}

/// All patterns produced by a move. Moves 2 and 3 need a conjectured-form
/// input and may return several patterns when the cut falls inside a
/// repeated word.
pub fn apply_move_pattern(p: &Pattern, m: PatternMove) -> Result<Vec<Pattern>, PatternError> {
    let mut out = BTreeSet::new();
    match m {
        PatternMove::M0 => {
            out.insert(p.reversed());
        }
        PatternMove::M1 => {
            out.insert(p.widened());
        }
        PatternMove::M4 => {
            out.insert(Pattern::trivial());
        }
        PatternMove::M2(cut) => {
            for (l, r) in split(p, cut)? {
                let mut g = map_groups(&l, m2_left);
                g.extend(map_groups(&r, m2_right));
                out.insert(Pattern::new(g).widened());
            }
        }
        PatternMove::M3(cut) => {
            if !p.is_conjectured_form() {
                return Err(PatternError::NotConjectured(p.to_string()));
            }
            for (l, r) in split(p, cut)? {
                let images = if !has(&r, Symbol::Minus) {
                    halve_left(&l)
                } else if !has(&l, Symbol::Plus) {
                    halve_left(&reverse_groups(&r)).iter().map(|g| reverse_groups(g)).collect()
                } else {
                    return Err(PatternError::NotConjectured(p.to_string()));
                };
                for g in images {
                    out.insert(Pattern::new(g).widened());
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{apply_move, parse_pattern, parse_sequence, MoveSpec, Sequence};

    fn pat(t: &str) -> Pattern {
        parse_pattern(t).unwrap()
    }

    #[test]
    fn chained_doubling_from_trivial() {
        let mut p = Pattern::trivial();
        let mut seen = Vec::new();
        for _ in 0..3 {
            p = apply_move_pattern(&p, PatternMove::M2(Cut::Boundary(0))).unwrap().remove(0);
            seen.push(p.to_string());
        }
        assert_eq!(seen, ["(-1)(0)(10)(1)", "(-1)(0)(10)(1110)(1)", "(-1)(0)(10)(1110)(1^7 0)(1)"]);
    }

    #[test]
    fn halving_undoes_doubling() {
        let p = pat("(-1)(0)(10)(1110)(1)");
        let q = apply_move_pattern(&p, PatternMove::M3(Cut::Boundary(3))).unwrap();
        assert_eq!(q, vec![pat("(-1)(0)(10)(1)")]);
    }

    #[test]
    fn halving_a_repeated_odd_word_branches_on_phase() {
        let p = pat("(-1)(0)(1)");
        let q = apply_move_pattern(&p, PatternMove::M3(Cut::Boundary(1))).unwrap();
        // (0)^k pairs to (-1)^(k/2) or (-1)^((k-1)/2) 0 ... plus the plateau.
        assert!(q.iter().all(|x| x.is_conjectured_form()));
        for k in 1..9 {
            let s = apply_move(&Sequence::zeros(k), MoveSpec::M3 { cut: k as i64 }).with_plateau();
            assert!(q.iter().any(|x| x.matches(&s)), "k = {k}: {s:?} not in {q:?}");
        }
    }

    #[test]
    fn non_conjectured_input_is_rejected() {
        let p = pat("(-1)(1-1)^1(1)");
        assert!(matches!(
            apply_move_pattern(&p, PatternMove::M3(Cut::Boundary(0))),
            Err(PatternError::NotConjectured(_))
        ));
    }

    #[test]
    fn images_keep_conjectured_form() {
        let p = pat("(-1)(0-1)(0)(10)(1110)^1(1)");
        let inst = parse_sequence("(-1)(0-1)^2(0)^3(10)^2(1110)(1)").unwrap();
        assert!(p.matches(&inst));
        for cut in cuts(&p, true) {
            for m in [PatternMove::M2(cut), PatternMove::M3(cut)] {
                let images = apply_move_pattern(&p, m).unwrap();
                assert!(!images.is_empty());
                assert!(images.iter().all(|x| x.is_conjectured_form()), "{m} gave {images:?}");
            }
        }
    }
}
