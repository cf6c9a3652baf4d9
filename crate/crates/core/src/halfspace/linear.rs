use std::collections::HashSet;

use super::{Halfspace4, HalfspaceSet, Point4, Witness};
use crate::{Result, Scalar, SegError};

/// Reference backend: `O(len)` per query, `O(1)` insert.
#[derive(Debug, Clone, Default)]
pub struct LinearScan<T> {
    points: Vec<Point4<T>>,
    tags: HashSet<usize>,
}

impl<T: Scalar> LinearScan<T> {
    pub fn new() -> Self {
        Self {
            points: Vec::new(),
            tags: HashSet::new(),
        }
    }

    pub fn points(&self) -> &[Point4<T>] {
        &self.points
    }
}

impl<T: Scalar> HalfspaceSet<T> for LinearScan<T> {
    fn insert(&mut self, p: Point4<T>) -> Result<()> {
        p.check()?;
        if !self.tags.insert(p.tag) {
            return Err(SegError::DuplicateTag { tag: p.tag });
        }
        self.points.push(p);
        Ok(())
    }

    fn query(&self, h: &Halfspace4<T>) -> Option<Witness<T>> {
        let mut best: Option<Witness<T>> = None;
        for p in &self.points {
            let dot = h.dot(&p.coords);
            if dot > h.threshold {
                continue;
            }
            match best {
                Some(b) if b.outranks(dot, p.tag) => {}
                _ => best = Some(Witness { tag: p.tag, dot }),
            }
        }
        best
    }

    fn len(&self) -> usize {
        self.points.len()
    }
}
