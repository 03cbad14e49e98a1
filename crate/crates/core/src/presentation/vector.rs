use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An element of the free abelian base group, in coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BaseVector(pub SmallVec<[i64; 4]>);

impl BaseVector {
    pub fn zero(rank: usize) -> Self {
        BaseVector(SmallVec::from_elem(0, rank))
    }

    pub fn from_slice(xs: &[i64]) -> Self {
        BaseVector(SmallVec::from_slice(xs))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        BaseVector(self.0.iter().map(|&x| x * k).collect())
    }

    pub fn l1(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn add_assign_scaled(&mut self, other: &BaseVector, k: i64) {
        for (x, y) in self.0.iter_mut().zip(other.0.iter()) {
            *x += k * y;
        }
    }

    /// Splits `self` as `rep + k * axis`, where `rep` is the canonical
    /// representative of the coset of the cyclic subgroup generated by `axis`.
    pub fn split_along(&self, axis: &BaseVector) -> (BaseVector, i64) {
        let (i, &a) = axis
            .0
            .iter()
            .enumerate()
            .find(|(_, &a)| a != 0)
            .expect("axis must be nonzero");
        let k = self.0[i].div_euclid(a.abs()) * a.signum();
        let mut rep = self.clone();
        rep.add_assign_scaled(axis, -k);
        (rep, k)
    }

    /// Returns `k` with `self == k * axis`, if any.
    pub fn multiple_of(&self, axis: &BaseVector) -> Option<i64> {
        let (rep, k) = self.split_along(axis);
        rep.is_zero().then_some(k)
    }
}

impl Add for &BaseVector {
    type Output = BaseVector;
    fn add(self, rhs: &BaseVector) -> BaseVector {
        BaseVector(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &BaseVector {
    type Output = BaseVector;
    fn sub(self, rhs: &BaseVector) -> BaseVector {
        BaseVector(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &BaseVector {
    type Output = BaseVector;
    fn neg(self) -> BaseVector {
        BaseVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for BaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for BaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_is_canonical_per_coset() {
        let axis = BaseVector::from_slice(&[2, 2]);
        let x = BaseVector::from_slice(&[5, 1]);
        let (r, k) = x.split_along(&axis);
        assert_eq!(r, BaseVector::from_slice(&[1, -3]));
        assert_eq!(k, 2);
        let y = &x + &axis.scale(-7);
        assert_eq!(y.split_along(&axis).0, r);
    }

    #[test]
    fn negative_axis() {
        let axis = BaseVector::from_slice(&[-1, 1]);
        let x = BaseVector::from_slice(&[3, -3]);
        assert_eq!(x.multiple_of(&axis), Some(-3));
        assert_eq!(BaseVector::from_slice(&[3, -2]).multiple_of(&axis), None);
    }
}
