use super::key::{decode, encode, Expander, NfKey};
use super::CayleyError;
use crate::presentation::{GroupPresentation, Letter, NormalForm, Segment, Word};
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Which part of the Cayley graph a ball covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BallScope {
    Full,
    /// Only elements whose plane is one of `planes` (given as normal-form
    /// plane prefixes, closed under taking prefixes).
    Branch { planes: Vec<Vec<Segment>> },
}

#[derive(Clone, Copy, Debug)]
pub struct BallLimits {
    pub max_vertices: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits { max_vertices: 40_000_000 }
    }
}

/// Word-metric distances from the identity for every element of a ball.
#[derive(Clone, Debug)]
pub struct DistanceMap {
    pub(crate) presentation_hash: String,
    pub(crate) rank: usize,
    pub(crate) radius: u32,
    pub(crate) scope: BallScope,
    pub(crate) dist: FxHashMap<NfKey, u8>,
    pub(crate) sphere_sizes: Vec<u64>,
}

fn plane_bytes(planes: &[Vec<Segment>], rank: usize) -> FxHashSet<SmallVec<[u8; 30]>> {
    let mut out = FxHashSet::default();
    for plane in planes {
        for i in 0..=plane.len() {
            let nf = NormalForm {
                segments: plane[..i].to_vec(),
                tail: crate::presentation::BaseVector::zero(rank),
            };
            let key = encode(&nf);
            let tail_len = rank; // zero coordinates encode to one byte each
            out.insert(SmallVec::from_slice(&key.as_bytes()[..key.as_bytes().len() - tail_len]));
        }
    }
    out
}

/// Planes of the targets and all their ancestors.
pub fn planes_of(targets: &[NormalForm]) -> Vec<Vec<Segment>> {
    let mut seen: FxHashSet<Vec<Segment>> = FxHashSet::default();
    let mut out = Vec::new();
    for t in targets {
        for i in 0..=t.segments.len() {
            let pre = t.segments[..i].to_vec();
            if seen.insert(pre.clone()) {
                out.push(pre);
            }
        }
    }
    out.sort();
    out
}

impl DistanceMap {
    /// Breadth-first search of the ball of the given radius.
    pub fn build(p: &GroupPresentation, radius: u32, limits: BallLimits) -> Result<Self, CayleyError> {
        Self::build_scoped(p, radius, BallScope::Full, limits)
    }

    /// Ball restricted to the planes containing `targets` and their ancestors.
    /// Distances agree with the full Cayley graph because a path that leaves
    /// a plane through a strip and returns through it is never shorter.
    pub fn build_branch(
        p: &GroupPresentation,
        radius: u32,
        targets: &[NormalForm],
        limits: BallLimits,
    ) -> Result<Self, CayleyError> {
        Self::build_scoped(p, radius, BallScope::Branch { planes: planes_of(targets) }, limits)
    }

    pub fn build_scoped(
        p: &GroupPresentation,
        radius: u32,
        scope: BallScope,
        limits: BallLimits,
    ) -> Result<Self, CayleyError> {
        if radius > u8::MAX as u32 {
            return Err(CayleyError::ResourceLimit { what: "radius".into(), limit: u8::MAX as usize });
        }
        let allowed = match &scope {
            BallScope::Full => None,
            BallScope::Branch { planes } => Some(plane_bytes(planes, p.rank)),
        };
        let letters = p.alphabet();
        let mut dist: FxHashMap<NfKey, u8> = FxHashMap::default();
        let origin = encode(&NormalForm::identity(p.rank));
        dist.insert(origin.clone(), 0);
        let mut sphere_sizes = vec![1u64];
        let mut frontier = vec![origin];
        let mut ex = Expander::new(p);
        let mut key = NfKey::default();
        for d in 1..=radius {
            let mut next = Vec::new();
            for g in &frontier {
                ex.load(decode(g, p.rank).expect("keys in the map decode"));
                for &l in &letters {
                    let plane = ex.product(l, &mut key);
                    if let Some(ok) = &allowed {
                        if !ok.contains(&key.as_bytes()[..plane]) {
                            continue;
                        }
                    }
                    if !dist.contains_key(&key) {
                        dist.insert(key.clone(), d as u8);
                        next.push(key.clone());
                    }
                }
                if dist.len() > limits.max_vertices {
                    return Err(CayleyError::ResourceLimit { what: "ball vertices".into(), limit: limits.max_vertices });
                }
            }
            sphere_sizes.push(next.len() as u64);
            frontier = next;
        }
        Ok(DistanceMap { presentation_hash: p.hash(), rank: p.rank, radius, scope, dist, sphere_sizes })
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn scope(&self) -> &BallScope {
        &self.scope
    }

    pub fn presentation_hash(&self) -> &str {
        &self.presentation_hash
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Sizes of the spheres of radius `0..=radius`.
    pub fn sphere_sizes(&self) -> &[u64] {
        &self.sphere_sizes
    }

    pub fn distance(&self, g: &NormalForm) -> Option<u32> {
        self.dist.get(&encode(g)).map(|&d| d as u32)
    }

    pub(crate) fn distance_key(&self, k: &NfKey) -> Option<u32> {
        self.dist.get(k).map(|&d| d as u32)
    }

    fn check(&self, p: &GroupPresentation) -> Result<(), CayleyError> {
        if p.hash() != self.presentation_hash {
            return Err(CayleyError::PresentationMismatch { expected: self.presentation_hash.clone(), found: p.hash() });
        }
        Ok(())
    }

    /// Distance of the element represented by `w`.
    pub fn word_distance(&self, p: &GroupPresentation, w: &Word) -> Result<u32, CayleyError> {
        self.check(p)?;
        let g = p.normalize(w);
        self.distance(&g).ok_or(CayleyError::OutsideBall { radius: self.radius })
    }

    /// Whether `w` is a geodesic word. Decidable when `|w| <= radius`.
    pub fn is_geodesic(&self, p: &GroupPresentation, w: &Word) -> Result<bool, CayleyError> {
        self.check(p)?;
        if w.len() as u32 > self.radius {
            return Err(CayleyError::OutsideBall { radius: self.radius });
        }
        let d = self.word_distance(p, w)?;
        Ok(d as usize == w.len())
    }

    /// Letters `x` with `g x` one step closer to the identity.
    pub fn predecessor_letters(&self, p: &GroupPresentation, g: &NormalForm) -> Vec<Letter> {
        let Some(d) = self.distance(g) else { return Vec::new() };
        if d == 0 {
            return Vec::new();
        }
        let mut ex = Expander::new(p);
        ex.load(g.clone());
        let mut key = NfKey::default();
        p.alphabet()
            .into_iter()
            .filter(|&l| {
                ex.product(l, &mut key);
                self.distance_key(&key) == Some(d - 1)
            })
            .collect()
    }

    /// Number of geodesic words from the identity to `g` (saturating).
    pub fn geodesic_count(&self, p: &GroupPresentation, g: &NormalForm) -> Result<u128, CayleyError> {
        self.check(p)?;
        let root = encode(g);
        if !self.dist.contains_key(&root) {
            return Err(CayleyError::OutsideBall { radius: self.radius });
        }
        let letters = p.alphabet();
        let mut memo: FxHashMap<NfKey, u128> = FxHashMap::default();
        let mut ex = Expander::new(p);
        let mut key = NfKey::default();
        // Process by increasing distance: collect the cone first.
        let mut layers: Vec<Vec<NfKey>> = vec![vec![root.clone()]];
        let mut seen: FxHashSet<NfKey> = FxHashSet::from_iter([root.clone()]);
        let d0 = self.distance_key(&root).unwrap();
        for d in (0..d0).rev() {
            let mut layer = Vec::new();
            for h in layers.last().unwrap() {
                ex.load(decode(h, p.rank).unwrap());
                for &l in &letters {
                    ex.product(l, &mut key);
                    if self.distance_key(&key) == Some(d) && seen.insert(key.clone()) {
                        layer.push(key.clone());
                    }
                }
            }
            layers.push(layer);
        }
        for layer in layers.iter().rev() {
            for h in layer {
                let d = self.distance_key(h).unwrap();
                let c = if d == 0 {
                    1
                } else {
                    ex.load(decode(h, p.rank).unwrap());
                    let mut c: u128 = 0;
                    for &l in &letters {
                        ex.product(l, &mut key);
                        if self.distance_key(&key) == Some(d - 1) {
                            c = c.saturating_add(memo[&key]);
                        }
                    }
                    c
                };
                memo.insert(h.clone(), c);
            }
        }
        Ok(memo[&root])
    }

    /// Up to `limit` geodesic words from the identity to `g`.
    pub fn geodesics(&self, p: &GroupPresentation, g: &NormalForm, limit: usize) -> Result<Vec<Word>, CayleyError> {
        self.check(p)?;
        if self.distance(g).is_none() {
            return Err(CayleyError::OutsideBall { radius: self.radius });
        }
        let mut out = Vec::new();
        let mut stack: Vec<(NormalForm, Vec<Letter>)> = vec![(g.clone(), Vec::new())];
        while let Some((h, suffix)) = stack.pop() {
            if out.len() >= limit {
                break;
            }
            if h.is_identity() {
                let mut w = suffix.clone();
                w.reverse();
                out.push(Word(w));
                continue;
            }
            for l in self.predecessor_letters(p, &h) {
                let mut prev = h.clone();
                prev.mul_letter(p, l);
                let mut s = suffix.clone();
                s.push(l.inverse());
                stack.push((prev, s));
            }
        }
        Ok(out)
    }

    /// All elements with their distances.
    pub fn iter(&self) -> impl Iterator<Item = (NormalForm, u32)> + '_ {
        self.dist.iter().map(|(k, &d)| (decode(k, self.rank).expect("valid key"), d as u32))
    }

    pub fn sphere(&self, r: u32) -> Vec<NormalForm> {
        let mut v: Vec<NormalForm> = self
            .dist
            .iter()
            .filter(|(_, &d)| d as u32 == r)
            .map(|(k, _)| decode(k, self.rank).expect("valid key"))
            .collect();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_abelian_spheres() {
        let p = GroupPresentation::g11();
        let b = DistanceMap::build(&p, 3, BallLimits::default()).unwrap();
        // 4 base generators, 2 stable letters: 12 neighbours of the identity.
        assert_eq!(b.sphere_sizes()[1], 12);
        let g = p.normalize(&p.parse_word("a^2 b").unwrap());
        assert_eq!(b.distance(&g), Some(2));
        assert_eq!(b.geodesic_count(&p, &g).unwrap(), 2);
        assert_eq!(b.geodesics(&p, &g, 10).unwrap().len(), 2);
    }

    #[test]
    fn resource_limit() {
        let p = GroupPresentation::g11();
        let err = DistanceMap::build(&p, 6, BallLimits { max_vertices: 1000 }).unwrap_err();
        assert!(matches!(err, CayleyError::ResourceLimit { .. }));
    }
}
