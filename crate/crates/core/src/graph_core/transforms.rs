use super::embedding::{Dart, EmbeddedGraph, RotationSystem};
use super::multigraph::Multigraph;
use crate::error::{input, Result};

/// Per-edge thickening and stretching. Each method also returns, for every
/// new edge, the index of the edge it came from.
pub trait EdgeTransform: Sized {
    /// Replaces edge `e` by `copies(e) ≥ 1` parallel edges.
    fn thicken_by(&self, copies: &dyn Fn(usize) -> usize) -> (Self, Vec<usize>);
    /// Replaces edge `e` by a path of `length(e) ≥ 1` edges.
    fn stretch_by(&self, length: &dyn Fn(usize) -> usize) -> (Self, Vec<usize>);
}

fn offsets(m: usize, f: &dyn Fn(usize) -> usize) -> Vec<usize> {
    let mut off = Vec::with_capacity(m + 1);
    let mut acc = 0;
    off.push(0);
    for e in 0..m {
        let k = f(e);
        assert!(k >= 1, "edge multiplicity must be positive");
        acc += k;
        off.push(acc);
    }
    off
}

impl EdgeTransform for Multigraph {
    fn thicken_by(&self, copies: &dyn Fn(usize) -> usize) -> (Self, Vec<usize>) {
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &uv) in self.edges().iter().enumerate() {
            let k = copies(e);
            assert!(k >= 1, "edge multiplicity must be positive");
            for _ in 0..k {
                edges.push(uv);
                origin.push(e);
            }
        }
        (Multigraph::from_parts(self.vertex_count(), edges), origin)
    }

    fn stretch_by(&self, length: &dyn Fn(usize) -> usize) -> (Self, Vec<usize>) {
        let mut n = self.vertex_count();
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            let k = length(e);
            assert!(k >= 1, "path length must be positive");
            let mut prev = u;
            for i in 0..k {
                let next = if i + 1 == k {
                    v
                } else {
                    n += 1;
                    n - 1
                };
                edges.push((prev, next));
                origin.push(e);
                prev = next;
            }
        }
        (Multigraph::from_parts(n, edges), origin)
    }
}

impl EdgeTransform for EmbeddedGraph {
    fn thicken_by(&self, copies: &dyn Fn(usize) -> usize) -> (Self, Vec<usize>) {
        let (graph, origin) = self.graph().thicken_by(copies);
        let off = offsets(self.graph().edge_count(), copies);
        let rotations = self
            .rotation()
            .rotations()
            .iter()
            .map(|rot| {
                let mut out = Vec::new();
                for d in rot {
                    let (a, b) = (off[d.edge], off[d.edge + 1]);
                    // Copies run in order at end 0 and in reverse at end 1,
                    // so they nest without crossing.
                    if d.end == 0 {
                        out.extend((a..b).map(|e| Dart::new(e, 0)));
                    } else {
                        out.extend((a..b).rev().map(|e| Dart::new(e, 1)));
                    }
                }
                out
            })
            .collect();
        (EmbeddedGraph::from_parts_unchecked(graph, RotationSystem::new(rotations)), origin)
    }

    fn stretch_by(&self, length: &dyn Fn(usize) -> usize) -> (Self, Vec<usize>) {
        let (graph, origin) = self.graph().stretch_by(length);
        let off = offsets(self.graph().edge_count(), length);
        let mut rotations: Vec<Vec<Dart>> = self
            .rotation()
            .rotations()
            .iter()
            .map(|rot| {
                rot.iter()
                    .map(|d| if d.end == 0 { Dart::new(off[d.edge], 0) } else { Dart::new(off[d.edge + 1] - 1, 1) })
                    .collect()
            })
            .collect();
        for e in 0..self.graph().edge_count() {
            for i in off[e] + 1..off[e + 1] {
                rotations.push(vec![Dart::new(i - 1, 1), Dart::new(i, 0)]);
            }
        }
        (EmbeddedGraph::from_parts_unchecked(graph, RotationSystem::new(rotations)), origin)
    }
}

/// Every edge replaced by `k` parallel copies.
pub fn thicken<G: EdgeTransform>(g: &G, k: usize) -> Result<G> {
    if k == 0 {
        return input("thickening factor must be at least 1");
    }
    Ok(g.thicken_by(&|_| k).0)
}

/// Every edge replaced by a path of `k` edges.
pub fn stretch<G: EdgeTransform>(g: &G, k: usize) -> Result<G> {
    if k == 0 {
        return input("stretching length must be at least 1");
    }
    Ok(g.stretch_by(&|_| k).0)
}
