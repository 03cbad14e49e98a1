use super::{format_pattern, moves, Sequence, Symbol};
use regex::Regex;
use serde::{Deserialize, Serialize};
use std::fmt;
use Symbol::*;

/// One group of a pattern between the terminals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    /// The word repeated any positive number of times.
    Many(Vec<Symbol>),
    /// The word exactly once.
    Once(Vec<Symbol>),
    /// Any nonempty word over the (sorted) symbols.
    Mix(Vec<Symbol>),
}

impl Group {
    pub fn symbols(&self) -> &[Symbol] {
        match self {
            Group::Many(w) | Group::Once(w) | Group::Mix(w) => w,
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols().contains(&s)
    }

    fn reversed(&self) -> Group {
        let rn = |w: &Vec<Symbol>| w.iter().rev().map(|s| s.negate()).collect::<Vec<_>>();
        match self {
            Group::Many(w) => Group::Many(rn(w)),
            Group::Once(w) => Group::Once(rn(w)),
            Group::Mix(m) => {
                let mut m: Vec<Symbol> = m.iter().map(|s| s.negate()).collect();
                m.sort();
                Group::Mix(m)
            }
        }
    }

    fn regex(&self) -> String {
        let ch = |s: &Symbol| match s {
            Minus => 'n',
            Zero => 'z',
            Plus => 'p',
        };
        match self {
            Group::Many(w) => format!("(?:{})+", w.iter().map(ch).collect::<String>()),
            Group::Once(w) => w.iter().map(ch).collect(),
            Group::Mix(m) => format!("[{}]+", m.iter().map(ch).collect::<String>()),
        }
    }
}

/// A family of sequences: `(-1)` groups `(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern {
    groups: Vec<Group>,
}

impl Pattern {
    /// Builds a pattern in normal form: empty words dropped, adjacent single
    /// words merged, groups that only repeat a terminal absorbed into it,
    /// `(w) w` rewritten as `w (w)`, and the empty pattern read as the
    /// trivial pattern `(-1)(0)(1)`.
    pub fn new(groups: Vec<Group>) -> Self {
        let mut g: Vec<Group> = groups
            .into_iter()
            .filter(|g| !g.symbols().is_empty())
            .collect();
        loop {
            let before = g.clone();
            merge_once(&mut g);
            absorb_left(&mut g);
            absorb_right(&mut g);
            shift_once_left(&mut g);
            if g == before {
                break;
            }
        }
        if g.is_empty() {
            g.push(Group::Many(vec![Zero]));
        }
        Pattern { groups: g }
    }

    /// `(-1)(0)(1)`.
    pub fn trivial() -> Self {
        Pattern { groups: vec![Group::Many(vec![Zero])] }
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(|g| g.symbols().iter().all(|&s| s == Zero))
    }

    /// Reverse orientation (move 0).
    pub fn reversed(&self) -> Pattern {
        Pattern::new(self.groups.iter().rev().map(|g| g.reversed()).collect())
    }

    /// The smaller orientation; patterns have no preferred orientation.
    pub fn canonical(&self) -> Pattern {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }

    /// Whether every instance has no `1` before a `-1`.
    pub fn is_conjectured_form(&self) -> bool {
        let mut seen_plus = false;
        for g in &self.groups {
            match g {
                Group::Once(w) => {
                    for &s in w {
                        if s == Minus && seen_plus {
                            return false;
                        }
                        seen_plus |= s == Plus;
                    }
                }
                Group::Many(_) | Group::Mix(_) => {
                    if g.contains(Minus) && (seen_plus || g.contains(Plus)) {
                        return false;
                    }
                    seen_plus |= g.contains(Plus);
                }
            }
        }
        true
    }

    fn regex(&self) -> Regex {
        let body: String = self.groups.iter().map(|g| g.regex()).collect();
        Regex::new(&format!("^{body}$")).expect("generated regex is valid")
    }

    /// Whether the sequence is an instance, allowing groups to take symbols
    /// from the terminals.
    pub fn matches(&self, s: &Sequence) -> bool {
        let re = self.regex();
        let core: String = s
            .core()
            .iter()
            .map(|x| match x {
                Minus => 'n',
                Zero => 'z',
                Plus => 'p',
            })
            .collect();
        let reach = self.groups.iter().map(|g| g.symbols().len()).sum::<usize>() + 1;
        (0..=reach).any(|a| (0..=reach).any(|b| re.is_match(&format!("{}{}{}", "n".repeat(a), core, "p".repeat(b)))))
    }

    /// Whether the sequence, after widening its plateau by one, is an instance
    /// in either orientation.
    pub fn matches_widened(&self, s: &Sequence) -> bool {
        let w = moves::apply_move(s, moves::MoveSpec::M1 { widen: 1 });
        self.matches(&w) || self.matches(&w.reversed())
    }

    /// Inserts a repeatable `(0)` at the plateau unless one is there already.
    /// Patterns not in conjectured form are returned unchanged.
    pub fn widened(&self) -> Pattern {
        if !self.is_conjectured_form() {
            return self.clone();
        }
        // Flatten positions: find the boundary after the last -1 and check the
        // zero-only stretch up to the first 1 for a repeatable (0).
        let last_minus = self.groups.iter().rposition(|g| g.contains(Minus));
        let first_plus = self.groups.iter().position(|g| g.contains(Plus));
        let lo = last_minus.map_or(0, |i| i + 1);
        let hi = first_plus.unwrap_or(self.groups.len());
        if lo <= hi && self.groups[lo.min(hi)..hi].iter().any(|g| *g == Group::Many(vec![Zero])) {
            return self.clone();
        }
        let mut groups = self.groups.clone();
        match (last_minus, first_plus) {
            (Some(m), Some(p)) if m == p => {
                // A single word holds the last -1 and the first 1.
                let Group::Once(w) = &groups[m] else { return self.clone() };
                let cut = w.iter().rposition(|&s| s == Minus).unwrap() + 1;
                let (a, b) = (w[..cut].to_vec(), w[cut..].to_vec());
                groups.splice(m..=m, [Group::Once(a), Group::Many(vec![Zero]), Group::Once(b)]);
            }
            (Some(m), _) => {
                if let Group::Once(w) = &groups[m] {
                    let cut = w.iter().rposition(|&s| s == Minus).unwrap() + 1;
                    let (a, b) = (w[..cut].to_vec(), w[cut..].to_vec());
                    groups.splice(m..=m, [Group::Once(a), Group::Many(vec![Zero]), Group::Once(b)]);
                } else {
                    groups.insert(m + 1, Group::Many(vec![Zero]));
                }
            }
            (None, Some(p)) => {
                if let Group::Once(w) = &groups[p] {
                    let cut = w.iter().position(|&s| s == Plus).unwrap();
                    let (a, b) = (w[..cut].to_vec(), w[cut..].to_vec());
                    groups.splice(p..=p, [Group::Once(a), Group::Many(vec![Zero]), Group::Once(b)]);
                } else {
                    groups.insert(p, Group::Many(vec![Zero]));
                }
            }
            (None, None) => groups.insert(0, Group::Many(vec![Zero])),
        }
        Pattern::new(groups)
    }
}

fn merge_once(g: &mut Vec<Group>) {
    let mut out: Vec<Group> = Vec::with_capacity(g.len());
    for x in g.drain(..) {
        if let (Some(Group::Once(a)), Group::Once(b)) = (out.last_mut(), &x) {
            a.extend_from_slice(b);
            continue;
        }
        out.push(x);
    }
    *g = out;
}

fn absorb_left(g: &mut Vec<Group>) {
    while let Some(first) = g.first_mut() {
        match first {
            Group::Once(w) => {
                let k = w.iter().take_while(|&&s| s == Minus).count();
                w.drain(..k);
                if w.is_empty() {
                    g.remove(0);
                } else {
                    return;
                }
            }
            Group::Many(w) | Group::Mix(w) if w.iter().all(|&s| s == Minus) => {
                g.remove(0);
            }
            _ => return,
        }
    }
}

fn absorb_right(g: &mut Vec<Group>) {
    while let Some(last) = g.last_mut() {
        match last {
            Group::Once(w) => {
                let k = w.iter().rev().take_while(|&&s| s == Plus).count();
                w.truncate(w.len() - k);
                if w.is_empty() {
                    g.pop();
                } else {
                    return;
                }
            }
            Group::Many(w) | Group::Mix(w) if w.iter().all(|&s| s == Plus) => {
                g.pop();
            }
            _ => return,
        }
    }
}

fn shift_once_left(g: &mut Vec<Group>) {
    for i in 0..g.len().saturating_sub(1) {
        if let (Group::Many(w), Group::Once(v)) = (&g[i], &g[i + 1]) {
            if v.starts_with(w) {
                let (w, rest) = (w.clone(), v[w.len()..].to_vec());
                g.splice(i..=i + 1, [Group::Once(w.clone()), Group::Many(w), Group::Once(rest)]);
                return;
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pattern(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{parse_pattern, parse_sequence};

    #[test]
    fn normal_form_rules() {
        assert_eq!(parse_pattern("(-1)(1)").unwrap(), Pattern::trivial());
        assert_eq!(parse_pattern("(-1)(-1)(0)(1)(1)").unwrap(), Pattern::trivial());
        assert_eq!(parse_pattern("(-1)(-10)^1(1)").unwrap().to_string(), "(-1)(0)^1(1)");
        assert_eq!(parse_pattern("(-1)(10)(10)^1(1)").unwrap().to_string(), "(-1)(10)^1(10)(1)");
        let p = parse_pattern("(-1)(0)(10)(1)").unwrap();
        assert_eq!(p.reversed().to_string(), "(-1)(0-1)(0)(1)");
        assert_eq!(p.reversed().reversed(), p);
    }

    #[test]
    fn membership() {
        let p = parse_pattern("(-1)(0)(10)(1110)(1)").unwrap();
        assert!(p.matches(&parse_sequence("(-1)(00)(10)^2(1110)(1)").unwrap()));
        assert!(!p.matches(&parse_sequence("(-1)(10)(1110)(1)").unwrap()));
        assert!(p.matches_widened(&parse_sequence("(-1)(10)(1110)(1)").unwrap()));
        let q = parse_pattern("(-1)(01)(1)").unwrap();
        assert!(q.matches(&parse_sequence("(-1)(010)(1)").unwrap()));
    }

    #[test]
    fn conjectured_form_of_patterns() {
        assert!(parse_pattern("(-1)(0,-1)(0)(1,0)(1)").unwrap().is_conjectured_form());
        assert!(!parse_pattern("(-1)(1,0,-1)(1)").unwrap().is_conjectured_form());
        assert!(!parse_pattern("(-1)(10)(0-1)(1)").unwrap().is_conjectured_form());
        assert!(!parse_pattern("(-1)(1-1)(1)").unwrap().is_conjectured_form());
    }

    #[test]
    fn widening_inserts_plateau_once() {
        let p = parse_pattern("(-1)(10)(1)").unwrap();
        assert_eq!(p.widened().to_string(), "(-1)(0)(10)(1)");
        assert_eq!(p.widened().widened(), p.widened());
        let q = parse_pattern("(-1)(0-1)(10)(1)").unwrap();
        assert_eq!(q.widened().to_string(), "(-1)(0-1)(0)(10)(1)");
    }
}
