use super::DistanceMap;
use crate::presentation::{GroupPresentation, Letter, NormalForm, Side, Sign, StableId};
use serde::{Deserialize, Serialize};

/// The strip of `rule` attached to the line through `anchor` in direction
/// of the `side` axis. Crossing points are `anchor * axis^k`; the strip is
/// crossed by `rule` from the U side and by `rule^-1` from the V side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Strip {
    pub rule: StableId,
    pub side: Side,
    pub anchor: NormalForm,
}

impl Strip {
    pub fn crossing_letter(&self) -> Letter {
        let sign = match self.side {
            Side::U => Sign::Pos,
            Side::V => Sign::Neg,
        };
        Letter::stable(self.rule.0, sign)
    }

    pub fn point(&self, p: &GroupPresentation, k: i64) -> NormalForm {
        let mut g = self.anchor.clone();
        g.mul_vector(&p.rule(self.rule).axis(self.side).vector.scale(k));
        g
    }
}

/// Distances of the crossing points on both sides of a strip, for indices
/// `first..first + near.len()`. `None` marks points outside the ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingLabels {
    pub first: i64,
    pub near: Vec<Option<u32>>,
    pub far: Vec<Option<u32>>,
}

impl CrossingLabels {
    /// The longest run of known near labels containing the smallest label.
    pub fn known_run(&self) -> Option<(i64, Vec<u32>)> {
        let (imin, _) = self.near.iter().enumerate().filter_map(|(i, d)| d.map(|d| (i, d))).min_by_key(|&(_, d)| d)?;
        let mut lo = imin;
        while lo > 0 && self.near[lo - 1].is_some() {
            lo -= 1;
        }
        let mut hi = imin;
        while hi + 1 < self.near.len() && self.near[hi + 1].is_some() {
            hi += 1;
        }
        Some((self.first + lo as i64, self.near[lo..=hi].iter().map(|d| d.unwrap()).collect()))
    }
}

/// Labels of a strip within the ball, for crossing indices in `-window..=window`.
pub fn crossing_labels(map: &DistanceMap, p: &GroupPresentation, strip: &Strip, window: i64) -> CrossingLabels {
    let x = strip.crossing_letter();
    let mut near = Vec::new();
    let mut far = Vec::new();
    for k in -window..=window {
        let g = strip.point(p, k);
        near.push(map.distance(&g));
        let mut h = g;
        h.mul_letter(p, x);
        far.push(map.distance(&h));
    }
    CrossingLabels { first: -window, near, far }
}
