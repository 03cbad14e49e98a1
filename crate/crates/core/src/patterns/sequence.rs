use super::PatternError;
use crate::cayley::planes::LineLabels;
use crate::cayley::CrossingLabels;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A difference between consecutive crossing labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    Minus,
    Zero,
    Plus,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Minus, Symbol::Zero, Symbol::Plus];

    pub fn value(self) -> i64 {
        match self {
            Symbol::Minus => -1,
            Symbol::Zero => 0,
            Symbol::Plus => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<Symbol> {
        match v {
            -1 => Some(Symbol::Minus),
            0 => Some(Symbol::Zero),
            1 => Some(Symbol::Plus),
            _ => None,
        }
    }

    pub fn negate(self) -> Symbol {
        Symbol::from_value(-self.value()).expect("closed under negation")
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::Minus => "-1",
            Symbol::Zero => "0",
            Symbol::Plus => "1",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bi-infinite sequence `... -1 -1 core 1 1 ...`, stored by its core with
/// leading `-1`s and trailing `1`s absorbed into the terminals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sequence {
    core: Vec<Symbol>,
}

impl Sequence {
    pub fn new(mut symbols: Vec<Symbol>) -> Self {
        let end = symbols.iter().rposition(|&s| s != Symbol::Plus).map_or(0, |i| i + 1);
        symbols.truncate(end);
        let start = symbols.iter().position(|&s| s != Symbol::Minus).unwrap_or(symbols.len());
        symbols.drain(..start);
        Sequence { core: symbols }
    }

    /// The sequence `(-1)(1)`.
    pub fn trivial() -> Self {
        Sequence::default()
    }

    /// `(-1)(0)^k(1)`.
    pub fn zeros(k: usize) -> Self {
        Sequence { core: vec![Symbol::Zero; k] }
    }

    pub fn core(&self) -> &[Symbol] {
        &self.core
    }

    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    /// Symbol at index `i`, with the terminals outside `0..len`.
    pub fn at(&self, i: i64) -> Symbol {
        if i < 0 {
            Symbol::Minus
        } else if i as usize >= self.core.len() {
            Symbol::Plus
        } else {
            self.core[i as usize]
        }
    }

    /// Labels at positions `from..=to`, normalised so that position 0 has label 0.
    pub fn labels(&self, from: i64, to: i64) -> Vec<i64> {
        let mut l: i64 = if from >= 0 {
            (0..from).map(|j| self.at(j).value()).sum()
        } else {
            -(from..0).map(|j| self.at(j).value()).sum::<i64>()
        };
        let mut out = Vec::with_capacity((to - from + 1).max(0) as usize);
        for i in from..=to {
            out.push(l);
            l += self.at(i).value();
        }
        out
    }

    /// Reads the sequence off exact line labels.
    pub fn from_line(l: &LineLabels) -> Result<Self, PatternError> {
        Self::from_label_values(&l.values.iter().map(|&v| v as i64).collect::<Vec<_>>())
    }

    /// Reads a sequence off consecutive labels, assuming the terminals start
    /// right outside them.
    pub fn from_label_values(values: &[i64]) -> Result<Self, PatternError> {
        let mut out = Vec::with_capacity(values.len());
        for w in values.windows(2) {
            out.push(Symbol::from_value(w[1] - w[0]).ok_or(PatternError::LabelJump(w[1] - w[0]))?);
        }
        Ok(Sequence::new(out))
    }

    /// Reverses orientation (move 0): reverse and negate.
    pub fn reversed(&self) -> Self {
        Sequence { core: self.core.iter().rev().map(|s| s.negate()).collect() }
    }

    /// The smaller of the two orientations.
    pub fn canonical(&self) -> Self {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }

    /// Whether the sequence has the form `(-1)(0,-1)(0)(1,0)(1)`: no `1`
    /// before a `-1`.
    pub fn is_conjectured_form(&self) -> bool {
        let first_plus = self.core.iter().position(|&s| s == Symbol::Plus);
        let last_minus = self.core.iter().rposition(|&s| s == Symbol::Minus);
        match (first_plus, last_minus) {
            (Some(p), Some(m)) => m < p,
            _ => true,
        }
    }

    /// Whether the sequence has the form `(-1,0)(0)(1,0)`. For sequences with
    /// the usual terminals this is the conjectured form.
    pub fn is_well_behaved(&self) -> bool {
        self.is_conjectured_form()
    }

    /// Widens a plateau of a single label to two labels; other sequences are
    /// returned unchanged.
    pub fn with_plateau(&self) -> Self {
        let (lo, hi) = self.plateau();
        if lo == hi {
            super::apply_move(self, super::MoveSpec::M1 { widen: 1 })
        } else {
            self.clone()
        }
    }

    /// Index range `lo..=hi` of labels attaining the minimum, for sequences
    /// in conjectured form.
    pub fn plateau(&self) -> (i64, i64) {
        let labels = self.labels(0, self.core.len() as i64);
        let m = *labels.iter().min().expect("nonempty");
        let lo = labels.iter().position(|&l| l == m).unwrap() as i64;
        let hi = labels.iter().rposition(|&l| l == m).unwrap() as i64;
        (lo, hi)
    }
}

/// A sequence read from a finite window of a ball, with whether each
/// terminal is backed by the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractedSequence {
    pub sequence: Sequence,
    /// Index of the first core label within the strip's crossing indices.
    pub offset: i64,
    pub left_confirmed: bool,
    pub right_confirmed: bool,
}

impl ExtractedSequence {
    /// Both terminals are visible in the window.
    pub fn is_complete(&self) -> bool {
        self.left_confirmed && self.right_confirmed
    }
}

/// Reads the sequence of the near side of a strip from ball labels. A
/// terminal counts as confirmed when the visible run ends with at least
/// two terminal steps on that side.
pub fn extract_sequence(labels: &CrossingLabels) -> Result<ExtractedSequence, PatternError> {
    let (first, run) = labels.known_run().ok_or(PatternError::NoLabels)?;
    let values: Vec<i64> = run.iter().map(|&v| v as i64).collect();
    let mut diffs = Vec::new();
    for w in values.windows(2) {
        diffs.push(Symbol::from_value(w[1] - w[0]).ok_or(PatternError::LabelJump(w[1] - w[0]))?);
    }
    let n = diffs.len();
    let left_confirmed = n >= 2 && diffs[0] == Symbol::Minus && diffs[1] == Symbol::Minus;
    let right_confirmed = n >= 2 && diffs[n - 1] == Symbol::Plus && diffs[n - 2] == Symbol::Plus;
    let lead = diffs.iter().take_while(|&&s| s == Symbol::Minus).count();
    Ok(ExtractedSequence { sequence: Sequence::new(diffs), offset: first + lead as i64, left_confirmed, right_confirmed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::*;

    #[test]
    fn trimming_and_reversal() {
        let s = Sequence::new(vec![Minus, Minus, Zero, Plus, Zero, Plus, Plus]);
        assert_eq!(s.core(), &[Zero, Plus, Zero]);
        assert_eq!(s.reversed().core(), &[Zero, Minus, Zero]);
        assert_eq!(s.reversed().reversed(), s);
        assert!(s.is_conjectured_form());
        assert!(!Sequence::new(vec![Plus, Minus]).is_conjectured_form());
        assert!(Sequence::new(vec![Minus, Plus]).is_empty());
    }

    #[test]
    fn labels_follow_symbols() {
        let s = Sequence::new(vec![Zero, Minus, Zero, Plus]);
        assert_eq!(s.core(), &[Zero, Minus, Zero]);
        assert_eq!(s.labels(-2, 5), vec![2, 1, 0, 0, -1, -1, 0, 1]);
        assert_eq!(s.plateau(), (2, 3));
    }
}
