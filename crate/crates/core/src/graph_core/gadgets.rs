use super::embedding::{Dart, EmbeddedGraph, RotationSystem};
use super::multigraph::Multigraph;
use super::transforms::{stretch, thicken, EdgeTransform};
use crate::error::{input, Result};

/// A graph with distinguished terminal vertices.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: EmbeddedGraph,
    pub terminals: Vec<usize>,
}

fn check_params(n: usize, p: usize) -> Result<()> {
    if n == 0 || p == 0 {
        return input("gadget parameters n and p must be at least 1");
    }
    Ok(())
}

/// S_2(T_p(S_n(e))) for a single edge e; terminals are the original endpoints 0 and 1.
pub fn edge_gadget(n: usize, p: usize) -> Result<Gadget> {
    check_params(n, p)?;
    let g = stretch(&thicken(&stretch(&EmbeddedGraph::path(1), n)?, p)?, 2)?;
    Ok(Gadget { graph: g, terminals: vec![0, 1] })
}

/// A cycle F_1..F_d with every cycle edge replaced by `edge_gadget(n, p)`.
/// Terminals are the cycle vertices `0..d`; each terminal's dangling
/// half-edge belongs at the front of its rotation.
pub fn vertex_gadget(d: usize, n: usize, p: usize) -> Result<Gadget> {
    check_params(n, p)?;
    if d == 0 {
        return input("vertex gadget needs d ≥ 1");
    }
    let g = stretch(&thicken(&stretch(&EmbeddedGraph::cycle(d), n)?, p)?, 2)?;
    Ok(Gadget { graph: g, terminals: (0..d).collect() })
}

/// G_{n,p}: every vertex u replaced by R_{deg u, n, p}, the i-th cycle vertex
/// of u taking the i-th dart of u's rotation.
#[derive(Clone, Debug)]
pub struct DegreeGadgetGraph {
    pub graph: EmbeddedGraph,
    /// `terminals[u][i]` is the cycle vertex of u wired to its i-th dart.
    pub terminals: Vec<Vec<usize>>,
    /// Edges `0..joining` are the original edges, in original order.
    pub joining: usize,
}

pub fn apply_degree_gadget(g: &EmbeddedGraph, n: usize, p: usize) -> Result<DegreeGadgetGraph> {
    check_params(n, p)?;
    let base = g.graph();
    if base.loop_count() > 0 {
        return input("degree gadget construction needs a loop-free graph");
    }
    if !base.is_connected() {
        return input("degree gadget construction needs a connected graph");
    }
    let m = base.edge_count();
    let mut terminals = Vec::with_capacity(base.vertex_count());
    let mut next = 0;
    for u in 0..base.vertex_count() {
        let d = g.rotation().at(u).len().max(1);
        terminals.push((next..next + d).collect::<Vec<_>>());
        next += d;
    }
    let mut slot = vec![[0usize; 2]; m];
    for u in 0..base.vertex_count() {
        for (i, dart) in g.rotation().at(u).iter().enumerate() {
            slot[dart.edge][dart.end as usize] = terminals[u][i];
        }
    }
    let mut edges: Vec<(usize, usize)> = slot.iter().map(|s| (s[0], s[1])).collect();
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); next];
    for u in 0..base.vertex_count() {
        let rot = g.rotation().at(u);
        let d = rot.len();
        if d == 0 {
            continue;
        }
        let first = edges.len();
        for i in 0..d {
            edges.push((terminals[u][i], terminals[u][(i + 1) % d]));
        }
        for (i, dart) in rot.iter().enumerate() {
            let prev = first + (i + d - 1) % d;
            rotations[terminals[u][i]] = vec![*dart, Dart::new(first + i, 0), Dart::new(prev, 1)];
        }
    }
    let cycle = EmbeddedGraph::from_parts_unchecked(Multigraph::from_parts(next, edges), RotationSystem::new(rotations));
    let gadget_edge = |e: usize| e >= m;
    let (s1, o1) = cycle.stretch_by(&|e| if gadget_edge(e) { n } else { 1 });
    let (t, o2) = s1.thicken_by(&|e| if gadget_edge(o1[e]) { p } else { 1 });
    let (s2, _) = t.stretch_by(&|e| if gadget_edge(o1[o2[e]]) { 2 } else { 1 });
    Ok(DegreeGadgetGraph { graph: s2, terminals, joining: m })
}
