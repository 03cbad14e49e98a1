//! Almost convexity: pairs on the sphere `S(N)` at distance at most 2 and
//! the shortest path joining them inside `B(N)`.
//!
//! Pairs at distance 1 are joined by their edge and pairs with a common
//! neighbour in `B(N)` by a path of length 2. Only the remaining pairs,
//! whose every middle point lies on `S(N+1)`, need a search.

use super::AnalysisError;
use crate::cayley::{decode, Expander, NfKey};
use crate::cayley::{BallLimits, DistanceMap};
use crate::presentation::{GroupPresentation, NormalForm};
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityReport {
    pub radius: u32,
    pub sphere_size: u64,
    /// Unordered pairs on the sphere at distance 1 and 2.
    pub pairs_distance_one: u64,
    pub pairs_distance_two: u64,
    /// Distance-2 pairs with no common neighbour inside the ball.
    pub detour_pairs: u64,
    /// Largest, over all pairs, of the shortest joining path inside the ball.
    pub min_connecting_length: u64,
    pub worst_pair: Option<(String, String)>,
    /// Base falsification constant used for the bound.
    pub fftp_k: u64,
    /// `10 k + 2`.
    pub bound_claimed: u64,
    /// Path length cap for the pass verdict.
    pub cap: u64,
    pub passed: bool,
    /// A pair not joined within the cap.
    pub counterexample: Option<(String, String)>,
}

fn show(p: &GroupPresentation, key: &NfKey) -> String {
    let nf = decode(key, p.rank).expect("ball keys decode");
    p.format_word(&nf.to_word(p))
}

/// Shortest path from `from` to `to` through elements at distance at most
/// `radius`, if one of length at most `cap` exists.
fn joining_length(
    p: &GroupPresentation,
    ball: &DistanceMap,
    radius: u32,
    from: &NfKey,
    to: &NfKey,
    cap: u64,
) -> Option<u64> {
    let letters = p.alphabet();
    let mut ex = Expander::new(p);
    let mut key = NfKey::default();
    let mut seen: FxHashSet<NfKey> = FxHashSet::from_iter([from.clone()]);
    let mut frontier = vec![from.clone()];
    for len in 1..=cap {
        let mut next = Vec::new();
        for g in &frontier {
            ex.load(decode(g, p.rank).expect("ball keys decode"));
            for &l in &letters {
                ex.product(l, &mut key);
                if &key == to {
                    return Some(len);
                }
                if ball.distance_key(&key).is_some_and(|d| d <= radius) && seen.insert(key.clone()) {
                    next.push(key.clone());
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        frontier = next;
    }
    None
}

/// Audits `S(radius)` using a ball of at least that radius. Pairs whose
/// shortest joining path exceeds `cap` fail the audit.
pub fn almost_convex_audit(
    p: &GroupPresentation,
    ball: &DistanceMap,
    radius: u32,
    fftp_k: u64,
    cap: u64,
) -> Result<ConvexityReport, AnalysisError> {
    if radius > ball.radius() || ball.presentation_hash() != p.hash() {
        return Err(AnalysisError::Unsupported(format!(
            "audit of S({radius}) needs a full ball of radius {radius} for this presentation"
        )));
    }
    let letters = p.alphabet();
    let mut ex = Expander::new(p);
    let mut key = NfKey::default();
    let mut r = ConvexityReport {
        radius,
        sphere_size: 0,
        pairs_distance_one: 0,
        pairs_distance_two: 0,
        detour_pairs: 0,
        min_connecting_length: 0,
        worst_pair: None,
        fftp_k,
        bound_claimed: 10 * fftp_k + 2,
        cap,
        passed: true,
        counterexample: None,
    };
    let mut sphere: Vec<&NfKey> = ball.dist.iter().filter(|(_, &d)| d as u32 == radius).map(|(k, _)| k).collect();
    sphere.sort();
    r.sphere_size = sphere.len() as u64;
    let mut worst: Option<(NfKey, NfKey)> = None;
    let mut middles: Vec<(NfKey, bool)> = Vec::with_capacity(letters.len());
    // Partner -> whether some middle point lies in the ball.
    let mut partners: FxHashMap<NfKey, bool> = FxHashMap::default();
    for g in sphere {
        let gnf = decode(g, p.rank).expect("ball keys decode");
        ex.load(gnf);
        middles.clear();
        partners.clear();
        for &l in &letters {
            ex.product(l, &mut key);
            let d = ball.distance_key(&key);
            if d == Some(radius) && &key > g {
                r.pairs_distance_one += 1;
                r.min_connecting_length = r.min_connecting_length.max(1);
            }
            middles.push((key.clone(), d.is_some_and(|d| d <= radius)));
        }
        let neighbours: FxHashSet<&NfKey> = middles.iter().map(|(m, _)| m).collect();
        for (m, inside) in &middles {
            ex.load(decode(m, p.rank).expect("products decode"));
            for &l in &letters {
                ex.product(l, &mut key);
                if &key > g && !neighbours.contains(&key) && ball.distance_key(&key) == Some(radius) {
                    *partners.entry(key.clone()).or_default() |= inside;
                }
            }
        }
        for (h, inside) in &partners {
            r.pairs_distance_two += 1;
            let len = if *inside {
                2
            } else {
                r.detour_pairs += 1;
                match joining_length(p, ball, radius, g, h, cap) {
                    Some(len) => len,
                    None => {
                        r.passed = false;
                        if r.counterexample.is_none() {
                            r.counterexample = Some((show(p, g), show(p, h)));
                        }
                        cap + 1
                    }
                }
            };
            if len > r.min_connecting_length || worst.is_none() && len == r.min_connecting_length {
                r.min_connecting_length = len;
                worst = Some((g.clone(), h.clone()));
            }
        }
    }
    r.worst_pair = worst.map(|(g, h)| (show(p, &g), show(p, &h)));
    Ok(r)
}

/// Counts unordered pairs on `S(radius)` at distance 1 and 2 by testing
/// every pair directly. Quadratic; meant for small spheres.
pub fn sphere_pair_count_direct(p: &GroupPresentation, radius: u32) -> Result<(u64, u64), AnalysisError> {
    let ball = DistanceMap::build(p, radius, BallLimits::default())?;
    let near = DistanceMap::build(p, 2, BallLimits::default())?;
    let sphere: Vec<NormalForm> = ball.sphere(radius);
    let words: Vec<_> = sphere.iter().map(|g| g.to_word(p)).collect();
    let (mut one, mut two) = (0, 0);
    for i in 0..words.len() {
        let inv = words[i].inverse();
        for w in &words[i + 1..] {
            match near.distance(&p.normalize(&inv.concat(w))) {
                Some(1) => one += 1,
                Some(2) => two += 1,
                _ => {}
            }
        }
    }
    Ok((one, two))
}
