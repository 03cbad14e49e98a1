//! Falsification by fellow traveller in the base group: every non-geodesic
//! base word is `k`-fellow travelled by a shorter word with the same ends.
//!
//! The check runs over all base words up to a length bound, merged by the
//! state that decides their future: the endpoint, the set `R` of points a
//! word of the same length can reach while staying within `k` of the path,
//! and the set `C` of endpoints of such shorter words that stayed within `k`
//! since they stopped. Both sets are kept relative to the current point.
//! A word is falsified exactly when `0` lies in `C`.

use super::AnalysisError;
use crate::presentation::{BaseVector, GroupPresentation, Letter, LetterKind, Word};
use serde::{Deserialize, Serialize};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

pub const MAX_FFTP_LENGTH: usize = 12;
/// Default exhaustive length bound.
pub const FFTP_EXHAUSTIVE_LENGTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FftpReport {
    pub k: u64,
    pub max_length: usize,
    /// Distinct search states visited, summed over lengths.
    pub states: u64,
    /// Random words checked beyond the exhaustive bound.
    pub sampled: u64,
    pub sample_length: usize,
    pub passed: bool,
    /// A shortest non-geodesic word with no shorter `k`-fellow traveller.
    pub counterexample: Option<String>,
}

type Offsets = BTreeSet<BaseVector>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    pos: BaseVector,
    reach: Offsets,
    stopped: Offsets,
}

struct Checker<'a> {
    p: &'a GroupPresentation,
    k: u64,
    steps: Vec<(Letter, BaseVector)>,
}

impl Checker<'_> {
    fn start(&self) -> State {
        let zero = BaseVector::zero(self.p.rank);
        State { pos: zero.clone(), reach: [zero].into(), stopped: Offsets::new() }
    }

    fn near(&self, v: &BaseVector) -> bool {
        self.p.metric().norm(v) <= self.k
    }

    /// The state after appending a letter moving by `g`, and whether the
    /// extended word of length `t` is a non-geodesic without a fellow traveller.
    fn step(&self, s: &State, g: &BaseVector, t: usize) -> (State, bool) {
        let reach: Offsets = s
            .reach
            .iter()
            .flat_map(|r| self.steps.iter().map(move |(_, h)| &(r + h) - g))
            .filter(|v| self.near(v))
            .collect();
        let stopped: Offsets = s.stopped.iter().chain(&s.reach).map(|c| c - g).filter(|v| self.near(v)).collect();
        let pos = &s.pos + g;
        let bad = self.p.metric().norm(&pos) < t as u64 && !stopped.contains(&BaseVector::zero(self.p.rank));
        (State { pos, reach, stopped }, bad)
    }
}

fn base_steps(p: &GroupPresentation) -> Vec<(Letter, BaseVector)> {
    p.alphabet()
        .into_iter()
        .filter_map(|l| match l.kind {
            LetterKind::Base(id) => Some((l, p.base_letter_vector(id, l.sign))),
            LetterKind::Stable(_) => None,
        })
        .collect()
}

/// Checks every base word up to `max_length` letters, then `samples`
/// random words of lengths up to `sample_length` drawn from `seed`.
pub fn fftp_base_check(
    p: &GroupPresentation,
    k: u64,
    max_length: usize,
    samples: u64,
    sample_length: usize,
    seed: u64,
) -> Result<FftpReport, AnalysisError> {
    if max_length > MAX_FFTP_LENGTH {
        return Err(AnalysisError::Unsupported(format!("length bound {max_length} exceeds {MAX_FFTP_LENGTH}")));
    }
    let c = Checker { p, k, steps: base_steps(p) };
    let mut report = FftpReport { k, max_length, states: 1, sampled: 0, sample_length, passed: true, counterexample: None };
    let fail = |report: &mut FftpReport, w: &Word, l: Letter| {
        let mut w = w.clone();
        w.push(l);
        report.passed = false;
        report.counterexample = Some(p.format_word(&w));
    };
    let mut level: BTreeMap<State, Word> = [(c.start(), Word::empty())].into();
    for t in 1..=max_length {
        let mut next: BTreeMap<State, Word> = BTreeMap::new();
        for (s, w) in &level {
            for (l, g) in &c.steps {
                let (s2, bad) = c.step(s, g, t);
                if bad {
                    fail(&mut report, w, *l);
                    return Ok(report);
                }
                next.entry(s2).or_insert_with(|| {
                    let mut w = w.clone();
                    w.push(*l);
                    w
                });
            }
        }
        report.states += next.len() as u64;
        level = next;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if sample_length > max_length {
        for _ in 0..samples {
            let len = rng.gen_range(max_length + 1..=sample_length);
            let (mut s, mut w) = (c.start(), Word::empty());
            for t in 1..=len {
                let (l, g) = &c.steps[rng.gen_range(0..c.steps.len())];
                let (s2, bad) = c.step(&s, g, t);
                if bad {
                    fail(&mut report, &w, *l);
                    return Ok(report);
                }
                s = s2;
                w.push(*l);
            }
            report.sampled += 1;
        }
    }
    Ok(report)
}

/// The smallest `k <= k_max` passing [`fftp_base_check`], with the report
/// of every `k` tried.
pub fn fftp_constant(p: &GroupPresentation, k_max: u64, max_length: usize) -> Result<(Option<u64>, Vec<FftpReport>), AnalysisError> {
    let mut tried = Vec::new();
    for k in 0..=k_max {
        let r = fftp_base_check(p, k, max_length, 0, 0, 0)?;
        let ok = r.passed;
        tried.push(r);
        if ok {
            return Ok((Some(k), tried));
        }
    }
    Ok((None, tried))
}
