use std::collections::HashSet;

use super::{Halfspace4, HalfspaceSet, Point4, Witness};
use crate::{Result, Scalar, SegError};

const LEAF_SIZE: usize = 8;

#[derive(Debug, Clone)]
struct Node<T> {
    lo: [T; 4],
    hi: [T; 4],
    start: usize,
    end: usize,
    // children indices; 0 marks a leaf since the root is never a child
    left: usize,
    right: usize,
}

/// Static kd-tree with an axis-aligned bounding box per node.
#[derive(Debug, Clone)]
struct KdTree<T> {
    points: Vec<Point4<T>>,
    nodes: Vec<Node<T>>,
}

impl<T: Scalar> KdTree<T> {
    fn build(mut points: Vec<Point4<T>>) -> Self {
        let mut nodes = Vec::with_capacity(2 * points.len() / LEAF_SIZE + 1);
        let len = points.len();
        Self::build_node(&mut points, 0, len, &mut nodes);
        Self { points, nodes }
    }

    fn build_node(
        points: &mut [Point4<T>],
        start: usize,
        end: usize,
        nodes: &mut Vec<Node<T>>,
    ) -> usize {
        let mut lo = points[start].coords;
        let mut hi = lo;
        for p in &points[start + 1..end] {
            for d in 0..4 {
                lo[d] = lo[d].min(p.coords[d]);
                hi[d] = hi[d].max(p.coords[d]);
            }
        }
        let id = nodes.len();
        nodes.push(Node {
            lo,
            hi,
            start,
            end,
            left: 0,
            right: 0,
        });
        if end - start > LEAF_SIZE {
            let axis = (0..4)
                .max_by(|&a, &b| (hi[a] - lo[a]).total_cmp(&(hi[b] - lo[b])))
                .unwrap_or(0);
            let mid = start + (end - start) / 2;
            points[start..end].select_nth_unstable_by(mid - start, |a, b| {
                a.coords[axis].total_cmp(&b.coords[axis])
            });
            let left = Self::build_node(points, start, mid, nodes);
            let right = Self::build_node(points, mid, end, nodes);
            nodes[id].left = left;
            nodes[id].right = right;
        }
        id
    }

    /// Smallest possible dot product over the node's box. Multiplication
    /// and addition round monotonically, so this never exceeds the
    /// computed dot product of any point inside.
    #[inline]
    fn lower_bound(node: &Node<T>, q: &[T; 4]) -> T {
        let term = |d: usize| (q[d] * node.lo[d]).min(q[d] * node.hi[d]);
        term(0) + term(1) + term(2) + term(3)
    }

    fn search(&self, h: &Halfspace4<T>, best: &mut Option<Witness<T>>) {
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            let bound = Self::lower_bound(node, &h.normal);
            let limit = best.map_or(h.threshold, |b| b.dot);
            if bound > limit {
                continue;
            }
            if node.left == 0 {
                for p in &self.points[node.start..node.end] {
                    let dot = h.dot(&p.coords);
                    if dot > h.threshold {
                        continue;
                    }
                    match best {
                        Some(b) if b.outranks(dot, p.tag) => {}
                        _ => *best = Some(Witness { tag: p.tag, dot }),
                    }
                }
            } else {
                // visit the more promising child first
                let lb = Self::lower_bound(&self.nodes[node.left], &h.normal);
                let rb = Self::lower_bound(&self.nodes[node.right], &h.normal);
                if lb <= rb {
                    stack.push(node.right);
                    stack.push(node.left);
                } else {
                    stack.push(node.left);
                    stack.push(node.right);
                }
            }
        }
    }
}

/// Accelerated backend: a logarithmic family of static kd-trees.
///
/// Slot `k` holds either nothing or a tree over exactly `2^k` points.
/// An insert merges the occupied low slots into the first free one, so
/// each point is rebuilt `O(log n)` times. Queries run branch-and-bound
/// over every tree, pruning boxes whose minimum dot product cannot beat
/// the threshold or the best witness so far.
#[derive(Debug, Clone, Default)]
pub struct KdForest<T> {
    slots: Vec<Option<KdTree<T>>>,
    tags: HashSet<usize>,
    len: usize,
}

impl<T: Scalar> KdForest<T> {
    pub fn new() -> Self {
        Self {
            slots: Vec::new(),
            tags: HashSet::new(),
            len: 0,
        }
    }

    /// Number of non-empty trees.
    pub fn tree_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }
}

impl<T: Scalar> HalfspaceSet<T> for KdForest<T> {
    fn insert(&mut self, p: Point4<T>) -> Result<()> {
        p.check()?;
        if !self.tags.insert(p.tag) {
            return Err(SegError::DuplicateTag { tag: p.tag });
        }
        let mut carry = vec![p];
        let mut k = 0;
        while let Some(slot) = self.slots.get_mut(k) {
            match slot.take() {
                Some(tree) => {
                    carry.extend(tree.points);
                    k += 1;
                }
                None => break,
            }
        }
        if k == self.slots.len() {
            self.slots.push(None);
        }
        self.slots[k] = Some(KdTree::build(carry));
        self.len += 1;
        Ok(())
    }

    fn query(&self, h: &Halfspace4<T>) -> Option<Witness<T>> {
        let mut best = None;
        // larger trees first; they are most likely to tighten the bound
        for tree in self.slots.iter().rev().flatten() {
            tree.search(h, &mut best);
        }
        best
    }

    fn len(&self) -> usize {
        self.len
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_counter_layout() {
        let mut f = KdForest::<f64>::new();
        for t in 0..11 {
            f.insert(Point4::new([t as f64; 4], t)).unwrap();
        }
        // 11 = 0b1011
        assert_eq!(f.tree_count(), 3);
        assert_eq!(f.len(), 11);
    }
}
