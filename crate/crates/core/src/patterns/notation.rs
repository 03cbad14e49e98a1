//! Text notation for sequences and patterns.
//!
//! A notation is a list of parenthesised groups, each optionally followed by
//! `^k` with `k` a positive decimal integer; whitespace between groups is
//! ignored. The first group must be the left terminal `(-1)` and the last
//! the right terminal `(1)`, both without exponent.
//!
//! A group body is either a mixture, two or more symbols separated by
//! commas (`(1,0)`), or a word: a run of items, each a symbol optionally
//! followed by `^k` (`(1^7 0)`), with optional spaces between items.
//! Symbols are `-1`, `0` and `1`; `−` (U+2212) is accepted for `-`.
//!
//! In a sequence every group is a word repeated exactly `k` times (`k = 1`
//! when omitted). In a pattern a word group without exponent is repeated any
//! positive number of times, a word group with exponent `k` occurs exactly
//! `k` times, and a mixture stands for any nonempty word over its symbols.
//!
//! Printing writes runs of four or more equal symbols as `x^k`, followed by
//! a space when another item follows, and every other symbol literally.

use super::{Group, Pattern, PatternError, Sequence, Symbol};

#[derive(Debug, PartialEq)]
enum RawBody {
    Word(Vec<Symbol>),
    Mix(Vec<Symbol>),
}

#[derive(Debug)]
struct RawGroup {
    body: RawBody,
    power: Option<usize>,
}

fn bad(text: &str, at: usize, reason: &str) -> PatternError {
    PatternError::Notation { text: text.to_string(), at, reason: reason.to_string() }
}

fn parse_number(chars: &[char], i: &mut usize) -> Option<usize> {
    let start = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    chars[start..*i].iter().collect::<String>().parse().ok()
}

fn parse_symbol(chars: &[char], i: &mut usize) -> Option<Symbol> {
    match chars.get(*i) {
        Some('0') => {
            *i += 1;
            Some(Symbol::Zero)
        }
        Some('1') => {
            *i += 1;
            Some(Symbol::Plus)
        }
        Some('-') | Some('−') if chars.get(*i + 1) == Some(&'1') => {
            *i += 2;
            Some(Symbol::Minus)
        }
        _ => None,
    }
}

fn parse_body(text: &str, chars: &[char], i: &mut usize) -> Result<RawBody, PatternError> {
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i] == ' ' {
            *i += 1;
        }
    };
    let mut items: Vec<Symbol> = Vec::new();
    let mut mix = false;
    let mut powered = false;
    skip_ws(i);
    loop {
        let s = parse_symbol(chars, i).ok_or_else(|| bad(text, *i, "expected a symbol -1, 0 or 1"))?;
        skip_ws(i);
        let mut reps = 1;
        if chars.get(*i) == Some(&'^') {
            *i += 1;
            reps = parse_number(chars, i).filter(|&k| k > 0).ok_or_else(|| bad(text, *i, "expected a positive exponent"))?;
            skip_ws(i);
            powered = true;
        }
        items.extend(std::iter::repeat(s).take(reps));
        match chars.get(*i) {
            Some(')') => {
                *i += 1;
                break;
            }
            Some(',') => {
                mix = true;
                *i += 1;
                skip_ws(i);
            }
            Some(_) if !mix => {}
            _ => return Err(bad(text, *i, "expected `,` or `)`")),
        }
    }
    if mix && powered {
        return Err(bad(text, *i, "exponents are not allowed in mixtures"));
    }
    if mix {
        items.sort();
        items.dedup();
        Ok(RawBody::Mix(items))
    } else {
        Ok(RawBody::Word(items))
    }
}

fn parse_groups(text: &str) -> Result<Vec<RawGroup>, PatternError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    loop {
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        if i == chars.len() {
            break;
        }
        if chars[i] != '(' {
            return Err(bad(text, i, "expected `(`"));
        }
        i += 1;
        let body = parse_body(text, &chars, &mut i)?;
        let mut power = None;
        if chars.get(i) == Some(&'^') {
            i += 1;
            power = Some(parse_number(&chars, &mut i).filter(|&k| k > 0).ok_or_else(|| bad(text, i, "expected a positive exponent"))?);
        }
        out.push(RawGroup { body, power });
    }
    let terminal = |g: &RawGroup, s: Symbol| g.power.is_none() && g.body == RawBody::Word(vec![s]);
    if out.len() < 2 || !terminal(&out[0], Symbol::Minus) || !terminal(out.last().unwrap(), Symbol::Plus) {
        return Err(bad(text, 0, "must start with the terminal (-1) and end with the terminal (1)"));
    }
    out.remove(0);
    out.pop();
    Ok(out)
}

pub fn parse_sequence(text: &str) -> Result<Sequence, PatternError> {
    let mut core = Vec::new();
    for g in parse_groups(text)? {
        match g.body {
            RawBody::Word(w) => {
                for _ in 0..g.power.unwrap_or(1) {
                    core.extend_from_slice(&w);
                }
            }
            RawBody::Mix(_) => return Err(bad(text, 0, "mixtures do not denote a single sequence")),
        }
    }
    Ok(Sequence::new(core))
}

pub fn parse_pattern(text: &str) -> Result<Pattern, PatternError> {
    let mut groups = Vec::new();
    for g in parse_groups(text)? {
        groups.push(match (g.body, g.power) {
            (RawBody::Word(w), None) => Group::Many(w),
            (RawBody::Word(w), Some(k)) => Group::Once(w.repeat(k)),
            (RawBody::Mix(m), None) => Group::Mix(m),
            (RawBody::Mix(_), Some(_)) => return Err(bad(text, 0, "mixtures take no exponent")),
        });
    }
    Ok(Pattern::new(groups))
}

pub fn format_word(w: &[Symbol]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i + 1;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        if j - i >= 4 {
            out.push_str(&format!("{}^{}", w[i], j - i));
            if j < w.len() {
                out.push(' ');
            }
        } else {
            for _ in i..j {
                out.push_str(w[i].as_str());
            }
        }
        i = j;
    }
    out
}

pub fn format_sequence(s: &Sequence) -> String {
    if s.is_empty() {
        "(-1)(1)".to_string()
    } else {
        format!("(-1)({})(1)", format_word(s.core()))
    }
}

pub fn format_group(g: &Group) -> String {
    match g {
        Group::Many(w) => format!("({})", format_word(w)),
        Group::Once(w) => format!("({})^1", format_word(w)),
        Group::Mix(m) => {
            let mut m = m.clone();
            m.sort_by(|a, b| b.cmp(a));
            format!("({})", m.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(","))
        }
    }
}

pub fn format_pattern(p: &Pattern) -> String {
    let mut out = String::from("(-1)");
    for g in p.groups() {
        out.push_str(&format_group(g));
    }
    out.push_str("(1)");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_notation() {
        let s = parse_sequence("(-1)(0)^6(1)").unwrap();
        assert_eq!(s, Sequence::zeros(6));
        assert_eq!(format_sequence(&s), "(-1)(0^6)(1)");
        assert_eq!(parse_sequence(&format_sequence(&s)).unwrap(), s);
        let s = parse_sequence("(−1)(0 −1)(1^7 0)(1)").unwrap();
        assert_eq!(format_sequence(&s), "(-1)(0-11^7 0)(1)");
        assert_eq!(parse_sequence(&format_sequence(&s)).unwrap(), s);
        assert_eq!(parse_sequence("(-1)(1)").unwrap(), Sequence::trivial());
    }

    #[test]
    fn pattern_notation() {
        for t in ["(-1)(0)(10)(1110)(1^7 0)(1)", "(-1)(0,-1)(0)(1,0)(1)", "(-1)(0-1)(0)(10)^1(1)"] {
            let p = parse_pattern(t).unwrap();
            assert_eq!(format_pattern(&p), t);
        }
    }

    #[test]
    fn rejects_malformed() {
        for t in ["(0)(1)", "(-1)(0)", "(-1)(2)(1)", "(-1)(0)^0(1)", "(-1)(1,0^2)(1)", "(-1)(0(1)", "(-1)^2(1)"] {
            assert!(parse_pattern(t).is_err(), "{t}");
        }
        assert!(parse_sequence("(-1)(1,0)(1)").is_err());
    }
}
