//! Halfspace emptiness over a growing set of 4D points.
//!
//! A query asks whether any stored point `p` satisfies
//! `normal . p <= threshold` and, if so, reports the point with the
//! smallest dot product (ties to the largest tag). Two interchangeable
//! backends answer exactly the same way: [`LinearScan`] and the
//! branch-and-bound [`KdForest`].

mod kdforest;
mod linear;

pub use kdforest::KdForest;
pub use linear::LinearScan;

use crate::{Result, Scalar, SegError};

/// A tagged point in `R^4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point4<T> {
    pub coords: [T; 4],
    pub tag: usize,
}

impl<T: Scalar> Point4<T> {
    pub fn new(coords: [T; 4], tag: usize) -> Self {
        Self { coords, tag }
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.coords.iter().all(|c| c.is_finite()) {
            Ok(())
        } else {
            Err(SegError::NonFinitePoint { tag: self.tag })
        }
    }
}

/// The closed halfspace `{p : normal . p <= threshold}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Halfspace4<T> {
    pub normal: [T; 4],
    pub threshold: T,
}

impl<T: Scalar> Halfspace4<T> {
    pub fn new(normal: [T; 4], threshold: T) -> Self {
        Self { normal, threshold }
    }

    /// Dot product with a fixed evaluation order; every backend uses this
    /// so they agree bit for bit.
    #[inline]
    pub fn dot(&self, p: &[T; 4]) -> T {
        let q = &self.normal;
        q[0] * p[0] + q[1] * p[1] + q[2] * p[2] + q[3] * p[3]
    }

    #[inline]
    pub fn contains(&self, p: &[T; 4]) -> bool {
        self.dot(p) <= self.threshold
    }
}

/// A point reported by a query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness<T> {
    pub tag: usize,
    pub dot: T,
}

impl<T: Scalar> Witness<T> {
    /// Whether this witness is preferred over a candidate: smaller dot
    /// product wins, ties go to the larger tag.
    #[inline]
    pub(crate) fn outranks(&self, dot: T, tag: usize) -> bool {
        dot > self.dot || (dot == self.dot && tag < self.tag)
    }
}

/// Dynamic point set answering halfspace emptiness with a witness.
pub trait HalfspaceSet<T> {
    /// Adds a point. Tags must be unique and coordinates finite.
    fn insert(&mut self, p: Point4<T>) -> Result<()>;

    /// Minimum-dot-product point inside `h`, or `None` if `h` is empty.
    fn query(&self, h: &Halfspace4<T>) -> Option<Witness<T>>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
