//! Exact distances inside planes, computed down the plane tree.
//!
//! A geodesic to a point of a plane enters the plane through its entry
//! strip and then stays in the plane: leaving through a strip and coming
//! back through the same strip never saves length when every axis is a
//! geodesic cyclic subgroup. So the distance on a plane is
//! `f(q) = min_k (L_k + |q - k w|)` over the crossing points `k w` of the
//! entry line, with `L_k` their labels on the plane's side, and the base
//! plane has `f(q) = |q|`. Labels along any line grow by one per step far
//! enough out, which makes every line's label sequence finite to describe.

use super::CayleyError;
use crate::presentation::{BaseMetric, BaseVector, GroupPresentation, Letter, NormalForm, Side, Sign, StableId};
use serde::{Deserialize, Serialize};

/// Distances from the identity of the points `through + k * dir`.
/// Below `start` and above `start + values.len() - 1` they grow by one per step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineLabels {
    pub start: i64,
    pub values: Vec<u64>,
}

impl LineLabels {
    fn trimmed(start: i64, mut values: Vec<u64>) -> Self {
        let mut lo = 0;
        while lo + 1 < values.len() && values[lo + 1] + 1 == values[lo] {
            lo += 1;
        }
        let mut hi = values.len() - 1;
        while hi > lo && values[hi - 1] + 1 == values[hi] {
            hi -= 1;
        }
        values.truncate(hi + 1);
        values.drain(..lo);
        LineLabels { start: start + lo as i64, values }
    }

    pub fn at(&self, k: i64) -> u64 {
        let end = self.start + self.values.len() as i64 - 1;
        if k < self.start {
            self.values[0] + (self.start - k) as u64
        } else if k > end {
            self.values[self.values.len() - 1] + (k - end) as u64
        } else {
            self.values[(k - self.start) as usize]
        }
    }

    pub fn min(&self) -> u64 {
        *self.values.iter().min().expect("nonempty")
    }

    /// Differences `L(k+1) - L(k)` for `k` in `start..end`.
    pub fn diffs(&self) -> Vec<i8> {
        self.values.windows(2).map(|w| (w[1] as i64 - w[0] as i64) as i8).collect()
    }

    pub fn shifted(&self, by: u64) -> LineLabels {
        LineLabels { start: self.start, values: self.values.iter().map(|v| v + by).collect() }
    }
}

/// Distance function on one plane, as a minimum over weighted sources.
#[derive(Clone, Debug)]
pub struct PlaneField {
    sources: Vec<(BaseVector, u64)>,
}

impl PlaneField {
    pub fn base(rank: usize) -> Self {
        PlaneField { sources: vec![(BaseVector::zero(rank), 0)] }
    }

    /// Field of a plane whose entry line is `k * dir` with labels `labels`
    /// (on this plane's side).
    pub fn from_entry(dir: &BaseVector, labels: &LineLabels) -> Self {
        let n = labels.values.len();
        let v = &labels.values;
        let mut sources = Vec::new();
        for i in 0..n {
            // A point whose neighbour on the line is one smaller is dominated by it.
            let left_smaller = i > 0 && v[i - 1] + 1 == v[i];
            let right_smaller = i + 1 < n && v[i + 1] + 1 == v[i];
            if !left_smaller && !right_smaller {
                sources.push((dir.scale(labels.start + i as i64), v[i]));
            }
        }
        PlaneField { sources }
    }

    pub fn value(&self, m: &BaseMetric, q: &BaseVector) -> u64 {
        self.sources.iter().map(|(p, v)| v + m.norm(&(q - p))).min().expect("nonempty")
    }

    /// Exact labels of the line `through + k * dir`.
    pub fn line(&self, m: &BaseMetric, through: &BaseVector, dir: &BaseVector) -> LineLabels {
        let reach = self.sources.iter().map(|(p, _)| (through - p).l1()).max().unwrap_or(0) + 1;
        let mut values = Vec::with_capacity(2 * reach as usize + 1);
        let mut q = through.clone();
        q.add_assign_scaled(dir, -reach);
        for _ in -reach..=reach {
            values.push(self.value(m, &q));
            q.add_assign_scaled(dir, 1);
        }
        LineLabels::trimmed(-reach, values)
    }

    /// All points with value at most `budget`. `spread` bounds how far one
    /// generator moves a coordinate.
    pub fn sublevel(&self, m: &BaseMetric, budget: u64, spread: i64) -> Vec<BaseVector> {
        let mut out: rustc_hash::FxHashSet<BaseVector> = Default::default();
        for (p, v) in &self.sources {
            if *v > budget {
                continue;
            }
            let r = (budget - v) as i64 * spread;
            let rank = p.rank();
            let mut off = vec![-r; rank];
            'odometer: loop {
                let q = p + &BaseVector::from_slice(&off);
                if v + m.norm(&(&q - p)) <= budget {
                    out.insert(q);
                }
                for i in 0..rank {
                    off[i] += 1;
                    if off[i] <= r {
                        continue 'odometer;
                    }
                    off[i] = -r;
                }
                break;
            }
        }
        let mut pts: Vec<BaseVector> = out.into_iter().collect();
        pts.sort();
        pts
    }
}

/// A plane of the plane tree. Local coordinate `q` is the element
/// `origin * q`; for planes other than the base plane the entry line is
/// `k * w` with `w` the axis of `entry`, and its labels start at `k = 0`.
#[derive(Clone, Debug)]
pub struct PlaneState {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    /// Rule and side of the entry line, on this plane's side.
    pub entry: Option<(StableId, Side)>,
    /// Entry line labels on this plane's side.
    pub labels: Option<LineLabels>,
    pub origin: NormalForm,
}

/// A strip leaving a plane: the line `through + k * w` with `w` the axis
/// of `side`, crossed by `rule` from the U side and `rule^-1` from the V side.
#[derive(Clone, Debug)]
pub struct ExitStrip {
    pub rule: StableId,
    pub side: Side,
    pub through: BaseVector,
    /// Labels on the plane's side of the strip.
    pub labels: LineLabels,
}

impl ExitStrip {
    pub fn crossing_letter(&self) -> Letter {
        let sign = match self.side {
            Side::U => Sign::Pos,
            Side::V => Sign::Neg,
        };
        Letter::stable(self.rule.0, sign)
    }

    pub fn anchor(&self, plane: &PlaneState) -> NormalForm {
        let mut g = plane.origin.clone();
        g.mul_vector(&self.through);
        g
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SurveyOptions {
    /// Strips count when some crossing point on the near side lies within
    /// `radius - 1`, so that a crossing edge lies in the ball.
    pub radius: u32,
    /// Explore isomorphic planes (same entry rule, side and labels) once.
    pub dedup: bool,
    pub max_depth: Option<usize>,
    pub max_planes: usize,
}

impl SurveyOptions {
    pub fn new(radius: u32) -> Self {
        SurveyOptions { radius, dedup: true, max_depth: None, max_planes: 5_000_000 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyStats {
    pub planes: usize,
    pub strips: usize,
    pub max_depth: usize,
}

/// Checks the conditions under which plane fields are exact.
pub fn check_supported(p: &GroupPresentation) -> Result<(), CayleyError> {
    if !p.metric().is_closed_form() {
        return Err(CayleyError::Unsupported(format!(
            "no closed-form base metric for `{}`; plane fields need one",
            p.name
        )));
    }
    for r in &p.stable_rules {
        for side in [Side::U, Side::V] {
            let w = &r.axis(side).vector;
            for m in 1..=16i64 {
                if p.base_word_metric(&w.scale(m)) != m as u64 {
                    return Err(CayleyError::Unsupported(format!(
                        "axis {} of `{}` does not have length one per step",
                        w, r.name
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Walks the plane tree breadth first, calling `visit` for every strip
/// leaving a plane that meets the ball of the given radius.
pub fn survey<F>(p: &GroupPresentation, opts: SurveyOptions, mut visit: F) -> Result<SurveyStats, CayleyError>
where
    F: FnMut(&PlaneState, &PlaneField, &ExitStrip),
{
    check_supported(p)?;
    let m = p.metric();
    let spread = p.base_gens.iter().flat_map(|g| g.vector.0.iter().map(|x| x.abs())).max().unwrap_or(1);
    let budget = opts.radius.saturating_sub(1) as u64;
    let mut seen: rustc_hash::FxHashSet<((StableId, Side), Vec<u64>)> = Default::default();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(PlaneState {
        id: 0,
        parent: None,
        depth: 0,
        entry: None,
        labels: None,
        origin: NormalForm::identity(p.rank),
    });
    let mut stats = SurveyStats { planes: 1, ..Default::default() };
    while let Some(state) = queue.pop_front() {
        let field = match (&state.entry, &state.labels) {
            (Some((r, side)), Some(l)) => PlaneField::from_entry(&p.rule(*r).axis(*side).vector, l),
            _ => PlaneField::base(p.rank),
        };
        let pts = field.sublevel(m, budget, spread);
        for (ri, rule) in p.stable_rules.iter().enumerate() {
            let rid = StableId(ri as u16);
            for side in [Side::U, Side::V] {
                let w = &rule.axis(side).vector;
                let mut reps: Vec<BaseVector> = pts.iter().map(|q| q.split_along(w).0).collect();
                reps.sort();
                reps.dedup();
                for c in reps {
                    if state.entry == Some((rid, side)) && c.is_zero() {
                        continue;
                    }
                    let labels = field.line(m, &c, w);
                    let exit = ExitStrip { rule: rid, side, through: c, labels };
                    stats.strips += 1;
                    visit(&state, &field, &exit);
                    let child_depth = state.depth + 1;
                    if exit.labels.min() + 1 > budget || opts.max_depth.is_some_and(|d| child_depth > d) {
                        continue;
                    }
                    let child_side = side.other();
                    let child_labels = exit.labels.shifted(1);
                    if opts.dedup && !seen.insert(((rid, child_side), child_labels.values.clone())) {
                        continue;
                    }
                    let mut origin = exit.anchor(&state);
                    origin.mul_letter(p, exit.crossing_letter());
                    origin.mul_vector(&rule.axis(child_side).vector.scale(child_labels.start));
                    stats.planes += 1;
                    stats.max_depth = stats.max_depth.max(child_depth);
                    if stats.planes > opts.max_planes {
                        return Err(CayleyError::ResourceLimit { what: "planes".into(), limit: opts.max_planes });
                    }
                    queue.push_back(PlaneState {
                        id: stats.planes - 1,
                        parent: Some(state.id),
                        depth: child_depth,
                        entry: Some((rid, child_side)),
                        labels: Some(LineLabels { start: 0, values: child_labels.values }),
                        origin,
                    });
                }
            }
        }
    }
    Ok(stats)
}

/// Exact distances from plane fields, following an element's plane chain
/// from the base plane.
pub struct PlaneOracle<'p> {
    p: &'p GroupPresentation,
    memo: rustc_hash::FxHashMap<NormalForm, u128>,
}

impl<'p> PlaneOracle<'p> {
    pub fn new(p: &'p GroupPresentation) -> Result<Self, CayleyError> {
        check_supported(p)?;
        Ok(PlaneOracle { p, memo: Default::default() })
    }

    /// Field of the plane reached after the given segments.
    pub fn field(&self, segments: &[crate::presentation::Segment]) -> PlaneField {
        let m = self.p.metric();
        let mut field = PlaneField::base(self.p.rank);
        for seg in segments {
            let rule = self.p.rule(seg.letter.rule);
            let side = seg.letter.absorbing_side();
            let line = field.line(m, &seg.rep, &rule.axis(side).vector);
            field = PlaneField::from_entry(&rule.axis(side.other()).vector, &line.shifted(1));
        }
        field
    }

    pub fn distance(&self, g: &NormalForm) -> u64 {
        self.field(&g.segments).value(self.p.metric(), &g.tail)
    }

    pub fn word_distance(&self, w: &crate::presentation::Word) -> u64 {
        self.distance(&self.p.normalize(w))
    }

    pub fn is_geodesic(&self, w: &crate::presentation::Word) -> bool {
        self.word_distance(w) == w.len() as u64
    }

    /// Number of geodesic words from the identity to `g` (saturating).
    pub fn geodesic_count(&mut self, g: &NormalForm) -> u128 {
        if let Some(&c) = self.memo.get(g) {
            return c;
        }
        let d = self.distance(g);
        let c = if d == 0 {
            1
        } else {
            let mut c: u128 = 0;
            for l in self.p.alphabet() {
                let mut h = g.clone();
                h.mul_letter(self.p, l);
                if self.distance(&h) + 1 == d {
                    c = c.saturating_add(self.geodesic_count(&h));
                }
            }
            c
        };
        self.memo.insert(g.clone(), c);
        c
    }
}
