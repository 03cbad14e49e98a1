//! The word pairs whose endpoints are meant to have unique geodesics while
//! the geodesics drift apart, and the synchronous distance between them.

use super::AnalysisError;
use crate::cayley::planes::PlaneOracle;
use crate::presentation::{GroupPresentation, NormalForm, Word};
use serde::{Deserialize, Serialize};

pub const MAX_FELLOW_N: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FellowTravelReport {
    pub n: u32,
    pub w: String,
    pub w_prime: String,
    pub w_is_geodesic: bool,
    pub w_prime_is_geodesic: bool,
    /// Geodesic counts of the two endpoints (saturating).
    pub w_geodesics: u128,
    pub w_prime_geodesics: u128,
    pub both_unique: bool,
    pub endpoint_distance: u64,
    /// Synchronous constant: the largest `d(w(t), w'(t))`, each path
    /// staying at its endpoint once it ends.
    pub sync_constant: u64,
}

/// `b' s^n a s' d^(2^n) s' d^(2^(n-1)) ... s' d^2 s' d` and
/// `a d s d^2 s d^4 ... s d^(2^n) s a s'^n`, built as written.
pub fn unique_geodesic_pair(p: &GroupPresentation, n: u32) -> Result<(Word, Word), AnalysisError> {
    if n == 0 || n > MAX_FELLOW_N {
        return Err(AnalysisError::Unsupported(format!("n must lie in 1..={MAX_FELLOW_N}, got {n}")));
    }
    let mut w = format!("b' s^{n} a");
    for j in (0..=n).rev() {
        w.push_str(&format!(" s' d^{}", 1u64 << j));
    }
    let mut v = "a d".to_string();
    for j in 1..=n {
        v.push_str(&format!(" s d^{}", 1u64 << j));
    }
    v.push_str(&format!(" s a s'^{n}"));
    Ok((p.parse_word(&w)?, p.parse_word(&v)?))
}

fn prefix(p: &GroupPresentation, w: &Word, t: usize) -> NormalForm {
    let mut g = NormalForm::identity(p.rank);
    for &l in &w.letters()[..t.min(w.len())] {
        g.mul_letter(p, l);
    }
    g
}

fn between(p: &GroupPresentation, o: &PlaneOracle<'_>, g: &NormalForm, h: &NormalForm) -> u64 {
    o.word_distance(&g.to_word(p).inverse().concat(&h.to_word(p)))
}

pub fn fellow_traveler_audit(p: &GroupPresentation, n: u32) -> Result<FellowTravelReport, AnalysisError> {
    let (w, v) = unique_geodesic_pair(p, n)?;
    let mut o = PlaneOracle::new(p)?;
    let (gw, gv) = (p.normalize(&w), p.normalize(&v));
    let w_geodesics = o.geodesic_count(&gw);
    let w_prime_geodesics = o.geodesic_count(&gv);
    let w_is_geodesic = o.is_geodesic(&w);
    let w_prime_is_geodesic = o.is_geodesic(&v);
    let sync_constant = (0..=w.len().max(v.len()))
        .map(|t| between(p, &o, &prefix(p, &w, t), &prefix(p, &v, t)))
        .max()
        .unwrap_or(0);
    Ok(FellowTravelReport {
        n,
        w: p.format_word(&w),
        w_prime: p.format_word(&v),
        w_is_geodesic,
        w_prime_is_geodesic,
        w_geodesics,
        w_prime_geodesics,
        both_unique: w_is_geodesic && w_prime_is_geodesic && w_geodesics == 1 && w_prime_geodesics == 1,
        endpoint_distance: between(p, &o, &gw, &gv),
        sync_constant,
    })
}
