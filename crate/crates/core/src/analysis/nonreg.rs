//! Cut points of the geodesic family `b' s^n x^k`: for each `n` the largest
//! `k` keeping the word geodesic. Strictly increasing cut points are the
//! finite evidence that the geodesic language is not regular.

use super::AnalysisError;
use crate::cayley::planes::PlaneOracle;
use crate::cayley::{BallLimits, DistanceMap};
use crate::presentation::{GroupPresentation, Word};
use serde::{Deserialize, Serialize};

/// Largest `n` accepted; witness lengths grow like `2^n`.
pub const MAX_CUT_N: u32 = 5;

/// Letter pushed along the strip after `b' s^n`.
pub const WITNESS_DIRECTION: &str = "a";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutPointReport {
    pub n: u32,
    /// The prefix `b' s^n`.
    pub witness_word: String,
    pub direction: String,
    pub max_geodesic_k: u64,
    pub expected: u64,
    pub agrees: bool,
    /// Cut point of the same family pushed along `c` instead, for comparison.
    pub c_direction_max_k: u64,
    /// Whether a breadth-first ball along the witness branch confirmed the
    /// cut point (`None` when not requested).
    pub ball_confirmed: Option<bool>,
}

fn word(p: &GroupPresentation, n: u32, dir: &str, k: u64) -> Result<Word, AnalysisError> {
    Ok(p.parse_word(&format!("b' s^{n} {dir}^{k}"))?)
}

/// Largest `k` with `b' s^n dir^k` geodesic. Prefixes of geodesics are
/// geodesic, so the scan stops at the first failure.
fn cut_point(p: &GroupPresentation, o: &PlaneOracle<'_>, n: u32, dir: &str) -> Result<u64, AnalysisError> {
    let mut k = 0;
    while o.is_geodesic(&word(p, n, dir, k + 1)?) {
        k += 1;
    }
    Ok(k)
}

pub fn nonregularity_cutpoints(
    p: &GroupPresentation,
    n_max: u32,
    confirm_with_ball: bool,
) -> Result<Vec<CutPointReport>, AnalysisError> {
    if n_max > MAX_CUT_N {
        return Err(AnalysisError::Unsupported(format!("n_max {n_max} exceeds {MAX_CUT_N}")));
    }
    let o = PlaneOracle::new(p)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let k = cut_point(p, &o, n, WITNESS_DIRECTION)?;
        let expected = (1u64 << n) - 1;
        let ball_confirmed = if confirm_with_ball {
            let probes = [word(p, n, WITNESS_DIRECTION, k)?, word(p, n, WITNESS_DIRECTION, k + 1)?];
            let targets: Vec<_> = probes.iter().map(|w| p.normalize(w)).collect();
            let radius = probes[1].len() as u32;
            let ball = DistanceMap::build_branch(p, radius, &targets, BallLimits::default())?;
            Some(ball.is_geodesic(p, &probes[0])? && !ball.is_geodesic(p, &probes[1])?)
        } else {
            None
        };
        out.push(CutPointReport {
            n,
            witness_word: p.format_word(&p.parse_word(&format!("b' s^{n}"))?),
            direction: WITNESS_DIRECTION.to_string(),
            max_geodesic_k: k,
            expected,
            agrees: k == expected,
            c_direction_max_k: cut_point(p, &o, n, "c")?,
            ball_confirmed,
        });
    }
    Ok(out)
}

/// Whether the cut points strictly increase with `n`.
pub fn strictly_increasing(reports: &[CutPointReport]) -> bool {
    reports.windows(2).all(|w| w[0].max_geodesic_k < w[1].max_geodesic_k)
}
