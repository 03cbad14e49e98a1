use super::{GroupPresentation, PresentationError};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BaseGenId(pub u16);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StableId(pub u16);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterKind {
    Base(BaseGenId),
    Stable(StableId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub kind: LetterKind,
    pub sign: Sign,
}

impl Letter {
    pub fn base(id: u16, sign: Sign) -> Letter {
        Letter { kind: LetterKind::Base(BaseGenId(id)), sign }
    }

    pub fn stable(id: u16, sign: Sign) -> Letter {
        Letter { kind: LetterKind::Stable(StableId(id)), sign }
    }

    pub fn inverse(self) -> Letter {
        Letter { kind: self.kind, sign: self.sign.flip() }
    }

    pub fn is_stable(self) -> bool {
        matches!(self.kind, LetterKind::Stable(_))
    }

    pub fn stable_id(self) -> Option<StableId> {
        match self.kind {
            LetterKind::Stable(id) => Some(id),
            LetterKind::Base(_) => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn push_power(&mut self, l: Letter, k: usize) {
        self.0.extend(std::iter::repeat(l).take(k));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Number of stable letters.
    pub fn stable_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_stable()).count()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl GroupPresentation {
    pub fn letter_name(&self, l: Letter) -> &str {
        match l.kind {
            LetterKind::Base(g) => &self.base_gens[g.0 as usize].name,
            LetterKind::Stable(s) => &self.stable_rules[s.0 as usize].name,
        }
    }

    pub fn letter_by_name(&self, name: &str) -> Option<LetterKind> {
        if let Some(i) = self.base_gens.iter().position(|g| g.name == name) {
            return Some(LetterKind::Base(BaseGenId(i as u16)));
        }
        self.stable_rules
            .iter()
            .position(|r| r.name == name)
            .map(|i| LetterKind::Stable(StableId(i as u16)))
    }

    /// Parses a word such as `b' s s a s' d^4`.
    ///
    /// Tokens are separated by whitespace. A token is a generator name,
    /// optionally followed by `'` (inverse) and then optionally by `^n`
    /// with `n` a non-negative decimal integer. The empty string and the
    /// single token `1` denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word, PresentationError> {
        let mut word = Word::empty();
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(word);
        }
        for (pos, tok) in trimmed.split_whitespace().enumerate() {
            let bad = |reason: &str| PresentationError::BadWord {
                token: tok.to_string(),
                position: pos,
                reason: reason.to_string(),
            };
            let (head, power) = match tok.split_once('^') {
                Some((h, p)) => {
                    if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad("exponent must be a non-negative integer"));
                    }
                    let k: usize = p.parse().map_err(|_| bad("exponent too large"))?;
                    (h, k)
                }
                None => (tok, 1),
            };
            let (name, sign) = match head.strip_suffix('\'') {
                Some(n) => (n, Sign::Neg),
                None => (head, Sign::Pos),
            };
            let kind = self
                .letter_by_name(name)
                .ok_or_else(|| bad("unknown generator"))?;
            word.push_power(Letter { kind, sign }, power);
        }
        Ok(word)
    }

    /// Prints a word in the syntax accepted by [`GroupPresentation::parse_word`],
    /// grouping runs of equal letters into powers.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out: Vec<String> = Vec::new();
        let ls = w.letters();
        let mut i = 0;
        while i < ls.len() {
            let mut j = i + 1;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            let mut tok = self.letter_name(ls[i]).to_string();
            if ls[i].sign == Sign::Neg {
                tok.push('\'');
            }
            if j - i > 1 {
                tok.push_str(&format!("^{}", j - i));
            }
            out.push(tok);
            i = j;
        }
        out.join(" ")
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GroupPresentation, &'a Word);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format_word(self.1))
            }
        }
        D(self, w)
    }
}
