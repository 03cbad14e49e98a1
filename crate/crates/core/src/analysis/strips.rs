//! Strip sequences across the plane tree: the initial strips, the
//! conjectured form, and agreement between the moves and exact labels.

use super::AnalysisError;
use crate::cayley::planes::{survey, ExitStrip, PlaneState, SurveyOptions, SurveyStats};
use crate::patterns::{apply_move, format_sequence, MoveSpec, PatternError, Sequence, Symbol};
use crate::presentation::{BaseVector, GroupPresentation, Side, StableId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Examples kept per report list.
const KEEP: usize = 10;

fn short(s: &Sequence) -> String {
    let t = format_sequence(s);
    if t.len() > 120 {
        format!("{}... ({} symbols)", &t[..100], s.len())
    } else {
        t
    }
}

/// Sequences of the strips leaving the base plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialReport {
    pub radius: u32,
    pub strips: u64,
    /// Distinct sequences with the number of strips carrying each.
    pub sequences: BTreeMap<String, u64>,
    /// Initial pattern classes with the number of strips in each.
    pub classes: BTreeMap<String, u64>,
}

/// The initial pattern a sequence belongs to: `(-1)(0)(1)` for `(0)^k`,
/// `(-1)(10)(1)` for `(10)^k` read in either phase and either orientation,
/// and the sequence itself otherwise.
pub fn initial_class(s: &Sequence) -> String {
    if s.core().iter().all(|&x| x == Symbol::Zero) {
        return "(-1)(0)(1)".to_string();
    }
    let alternating = |c: &[Symbol]| {
        let body = if c.first() == Some(&Symbol::Zero) && c.len() % 2 == 1 { &c[1..] } else { c };
        !body.is_empty() && body.chunks(2).all(|w| w == [Symbol::Plus, Symbol::Zero])
    };
    if alternating(s.core()) || alternating(s.reversed().core()) {
        return "(-1)(10)(1)".to_string();
    }
    format_sequence(s)
}

pub fn initial_sequences(p: &GroupPresentation, radius: u32) -> Result<InitialReport, AnalysisError> {
    let mut opts = SurveyOptions::new(radius);
    opts.max_depth = Some(0);
    let mut sequences: BTreeMap<String, u64> = BTreeMap::new();
    let mut classes: BTreeMap<String, u64> = BTreeMap::new();
    let mut strips = 0;
    let mut err = None;
    survey(p, opts, |plane, _, exit| {
        if plane.depth != 0 || err.is_some() {
            return;
        }
        match Sequence::from_line(&exit.labels) {
            Ok(s) => {
                strips += 1;
                *sequences.entry(format_sequence(&s)).or_default() += 1;
                *classes.entry(initial_class(&s)).or_default() += 1;
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(InitialReport { radius, strips, sequences, classes })
}

/// Conjectured-form verdicts for every strip meeting a ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormCensus {
    pub radius: u32,
    pub stats: SurveyStats,
    pub strips: u64,
    pub conjectured: u64,
    pub longest_core: usize,
    pub violations: Vec<String>,
}

impl FormCensus {
    pub fn violation_count(&self) -> u64 {
        self.strips - self.conjectured
    }
}

pub fn conjectured_form_census(p: &GroupPresentation, radius: u32) -> Result<FormCensus, AnalysisError> {
    Ok(strip_audit(p, radius)?.census)
}

/// The move taking the sequence of a plane's entry strip to the sequence
/// of one of its exit strips, read off the two lines. `reversed` means the
/// exit line runs against the entry line, so the result must be read
/// backwards. Only the king-move base metric has move tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedMove {
    pub spec: MoveSpec,
    pub reversed: bool,
}

fn axis(p: &GroupPresentation, rule: StableId, side: Side) -> &BaseVector {
    &p.rule(rule).axis(side).vector
}

/// Geometry of one crossing: the entry line is `k * w` (labels indexed by
/// `k` from 0 at the first core label) and the exit line is `exit.through + j * v`.
pub fn predict_move(p: &GroupPresentation, entry: (StableId, Side), exit: &ExitStrip) -> Option<PredictedMove> {
    if p.rank != 2 || !p.metric().is_king() {
        return None;
    }
    let w = axis(p, entry.0, entry.1);
    let v = axis(p, exit.rule, exit.side);
    let c = &exit.through;
    let (w0, w1, v0, v1, c0, c1) = (w.0[0], w.0[1], v.0[0], v.0[1], c.0[0], c.0[1]);
    let det = v0 * w1 - w0 * v1;
    if det == 0 {
        // Parallel: exit point j meets entry point k at offset c + (sj - k) w,
        // with s = ±1 relating the directions.
        let s = if v == w { 1 } else if v == &-w { -1 } else { return None };
        let reach = c.l1() + 2;
        let costs: Vec<u64> = (-reach..=reach).map(|d| p.metric().norm(&(c + &w.scale(d)))).collect();
        let best = *costs.iter().min()?;
        let widen = costs.iter().filter(|&&x| x == best).count() - 1;
        return Some(PredictedMove { spec: MoveSpec::M1 { widen }, reversed: s < 0 });
    }
    // Solve k w = c + j v for the entry coordinate k.
    let k_num = v0 * c1 - v1 * c0;
    let reversed = (w0 == 0 || v0 == 0) || (w0 > 0) != (v0 > 0);
    let exact = k_num % det == 0;
    let k = k_num.div_euclid(det);
    let spec = match (entry.1, exit.side) {
        (Side::V, Side::U) if exact => MoveSpec::M2 { split: k },
        (Side::U, Side::V) if exact => MoveSpec::M3 { cut: k },
        (Side::V, Side::V) | (Side::U, Side::U) => MoveSpec::M4 { zero: !exact },
        _ => return None,
    };
    Some(PredictedMove { spec, reversed })
}

/// One disagreement between the predicted and the exact exit sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveMismatch {
    pub entry: String,
    pub exit: String,
    pub predicted: String,
    pub spec: MoveSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveAudit {
    pub radius: u32,
    pub stats: SurveyStats,
    /// Crossings compared, by move index 0 to 4.
    pub by_move: [u64; 5],
    /// Crossings without a prediction.
    pub unpredicted: u64,
    pub mismatch_count: u64,
    pub mismatches: Vec<MoveMismatch>,
}

impl MoveAudit {
    pub fn compared(&self) -> u64 {
        self.by_move.iter().sum()
    }
}

pub fn move_audit(p: &GroupPresentation, radius: u32) -> Result<MoveAudit, AnalysisError> {
    Ok(strip_audit(p, radius)?.moves)
}

/// Both strip checks from one survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripAudit {
    pub census: FormCensus,
    pub moves: MoveAudit,
}

/// Classifies every strip meeting the ball and compares, for every strip
/// leaving a non-base plane, the exact exit sequence with the predicted move
/// applied to the exact entry sequence.
pub fn strip_audit(p: &GroupPresentation, radius: u32) -> Result<StripAudit, AnalysisError> {
    let mut c = FormCensus { radius, stats: SurveyStats::default(), strips: 0, conjectured: 0, longest_core: 0, violations: Vec::new() };
    let mut a = MoveAudit {
        radius,
        stats: SurveyStats::default(),
        by_move: [0; 5],
        unpredicted: 0,
        mismatch_count: 0,
        mismatches: Vec::new(),
    };
    let mut cached: Option<(usize, Sequence)> = None;
    let mut err: Option<PatternError> = None;
    let stats = survey(p, SurveyOptions::new(radius), |plane: &PlaneState, _, exit| {
        if err.is_some() {
            return;
        }
        let out = match Sequence::from_line(&exit.labels) {
            Ok(s) => s,
            Err(e) => {
                err = Some(e);
                return;
            }
        };
        c.strips += 1;
        c.longest_core = c.longest_core.max(out.len());
        if out.is_conjectured_form() {
            c.conjectured += 1;
        } else if c.violations.len() < KEEP {
            c.violations.push(short(&out));
        }
        let (Some(entry), Some(labels)) = (plane.entry, &plane.labels) else { return };
        if cached.as_ref().map(|c| c.0) != Some(plane.id) {
            match Sequence::from_line(labels) {
                Ok(s) => cached = Some((plane.id, s)),
                Err(e) => {
                    err = Some(e);
                    return;
                }
            }
        }
        let input = &cached.as_ref().unwrap().1;
        let Some(pred) = predict_move(p, entry, exit) else {
            a.unpredicted += 1;
            return;
        };
        let mut expected = apply_move(input, pred.spec);
        if pred.reversed {
            expected = expected.reversed();
        }
        a.by_move[pred.spec.index() as usize] += 1;
        if expected != out {
            a.mismatch_count += 1;
            if a.mismatches.len() < KEEP {
                a.mismatches.push(MoveMismatch {
                    entry: short(input),
                    exit: short(&out),
                    predicted: short(&expected),
                    spec: pred.spec,
                });
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    c.stats = stats.clone();
    a.stats = stats;
    Ok(StripAudit { census: c, moves: a })
}

/// One distinct sequence found by [`sequence_table`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub sequence: String,
    pub strips: u64,
    /// Smallest depth of a plane the sequence leaves.
    pub min_depth: usize,
    pub conjectured: bool,
}

/// Distinct sequences of the strips meeting the ball, leaving planes of
/// depth at most `max_depth` when given, in sequence order.
pub fn sequence_table(p: &GroupPresentation, radius: u32, max_depth: Option<usize>) -> Result<Vec<SequenceRow>, AnalysisError> {
    let mut opts = SurveyOptions::new(radius);
    opts.max_depth = max_depth;
    let mut rows: BTreeMap<String, SequenceRow> = BTreeMap::new();
    let mut err = None;
    survey(p, opts, |plane, _, exit| {
        if max_depth.is_some_and(|d| plane.depth > d) || err.is_some() {
            return;
        }
        match Sequence::from_line(&exit.labels) {
            Ok(s) => {
                let key = format_sequence(&s);
                let row = rows.entry(key.clone()).or_insert_with(|| SequenceRow {
                    sequence: key,
                    strips: 0,
                    min_depth: plane.depth,
                    conjectured: s.is_conjectured_form(),
                });
                row.strips += 1;
                row.min_depth = row.min_depth.min(plane.depth);
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(rows.into_values().collect())
}
