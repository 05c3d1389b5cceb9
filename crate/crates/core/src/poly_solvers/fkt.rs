use std::collections::VecDeque;

use num_traits::{One, Signed, Zero};

use crate::error::{input, Result};
use crate::exact_algebra::linalg::pfaffian;
use crate::exact_algebra::rational::Rational;
use crate::graph_core::{Dart, EmbeddedGraph, Multigraph, RotationSystem};

/// Tail end (0 or 1) of every edge. The face walk at index `outer` is the
/// unbounded face; every other face walk has an odd number of darts that run
/// along their edge's direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KasteleynOrientation {
    pub tails: Vec<u8>,
    pub outer: usize,
}

impl KasteleynOrientation {
    fn co_oriented(&self, face: &[Dart]) -> usize {
        face.iter().filter(|d| d.end == self.tails[d.edge]).count()
    }

    pub fn is_valid(&self, g: &EmbeddedGraph) -> bool {
        g.faces().iter().enumerate().all(|(i, f)| i == self.outer || self.co_oriented(f) % 2 == 1)
    }
}

/// Orients a connected, loop-free plane graph: a spanning tree is oriented
/// arbitrarily, and the remaining edges, which form a spanning tree of the
/// dual, are fixed face by face from the leaves toward the outer face.
pub fn kasteleyn_orient(g: &EmbeddedGraph) -> Result<KasteleynOrientation> {
    let graph = g.graph();
    if graph.loop_count() > 0 {
        return input("Kasteleyn orientation needs a loop-free graph");
    }
    if !graph.is_connected() {
        return input("Kasteleyn orientation needs a connected graph");
    }
    let m = graph.edge_count();
    let mut tails = vec![0u8; m];
    if m == 0 {
        return Ok(KasteleynOrientation { tails, outer: 0 });
    }
    let mut in_tree = vec![false; m];
    let adj = graph.adjacency();
    let mut seen = vec![false; graph.vertex_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &(w, e) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let faces = g.faces();
    let mut face_of = vec![[0usize; 2]; m];
    for (f, walk) in faces.iter().enumerate() {
        for d in walk {
            face_of[d.edge][d.end as usize] = f;
        }
    }
    let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
    for e in (0..m).filter(|&e| !in_tree[e]) {
        let [a, b] = face_of[e];
        dual[a].push((b, e));
        dual[b].push((a, e));
    }
    let mut parent_edge = vec![usize::MAX; faces.len()];
    let mut visited = vec![false; faces.len()];
    let mut order = vec![0];
    visited[0] = true;
    let mut i = 0;
    while i < order.len() {
        let f = order[i];
        for &(h, e) in &dual[f] {
            if !visited[h] {
                visited[h] = true;
                parent_edge[h] = e;
                order.push(h);
            }
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), faces.len());
    for &f in order.iter().skip(1).rev() {
        let pe = parent_edge[f];
        let count = faces[f].iter().filter(|d| d.edge != pe && d.end == tails[d.edge]).count();
        let end = if face_of[pe][0] == f { 0 } else { 1 };
        tails[pe] = if count % 2 == 0 { end } else { 1 - end };
    }
    Ok(KasteleynOrientation { tails, outer: 0 })
}

/// Σ over perfect matchings of the product of edge weights, by the Pfaffian
/// of the Kasteleyn-signed skew adjacency of each component. The global sign
/// comes from the same Pfaffian with unit weights, which is ±(number of
/// perfect matchings); a zero there means no perfect matching exists.
pub fn count_weighted_matchings(g: &EmbeddedGraph, weights: &[Rational]) -> Result<Rational> {
    if weights.len() != g.graph().edge_count() {
        return input(format!("{} weights for {} edges", weights.len(), g.graph().edge_count()));
    }
    let edges = g.graph().edges();
    let (plain, kept) = g.filter_edges(|e| edges[e].0 != edges[e].1);
    let weights: Vec<Rational> = kept.iter().map(|&e| weights[e].clone()).collect();
    let mut total = Rational::one();
    for (comp, sub) in plain.component_subgraphs() {
        let n = comp.graph().vertex_count();
        if n % 2 == 1 {
            return Ok(Rational::zero());
        }
        let orient = kasteleyn_orient(&comp)?;
        let local_w: Vec<Rational> = sub.edges.iter().map(|&e| weights[e].clone()).collect();
        let unit = pfaffian(&skew_matrix(comp.graph(), &orient, &vec![Rational::one(); local_w.len()]))?;
        if unit.is_zero() {
            return Ok(Rational::zero());
        }
        let pf = pfaffian(&skew_matrix(comp.graph(), &orient, &local_w))?;
        total *= if unit.is_negative() { -pf } else { pf };
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

fn skew_matrix(g: &Multigraph, orient: &KasteleynOrientation, w: &[Rational]) -> Vec<Vec<Rational>> {
    let n = g.vertex_count();
    let mut a = vec![vec![Rational::zero(); n]; n];
    for (e, wt) in w.iter().enumerate() {
        let t = orient.tails[e];
        let u = g.endpoint(e, t);
        let v = g.endpoint(e, 1 - t);
        a[u][v] += wt;
        a[v][u] -= wt;
    }
    a
}

/// A planar graph whose perfect matchings correspond one-to-one to the even
/// subgraphs of a source graph. Source edges keep their index and carry the
/// weight t; gadget edges carry 1.
#[derive(Clone, Debug)]
pub struct FisherGraph {
    pub graph: EmbeddedGraph,
    pub weights: Vec<Rational>,
    /// Source edge of each edge, `None` for gadget edges.
    pub origin: Vec<Option<usize>>,
}

enum Slot {
    Ext(usize),
    Int(usize, u8),
}

struct LocalGadget {
    vertices: usize,
    internal: Vec<(usize, usize)>,
    rotation: Vec<Vec<Slot>>,
}

/// Replaces every vertex by a gadget whose `Ext(s)` slot receives the edge in
/// rotation slot s. Edge indices of the source stay put; gadget edges follow.
fn expand(g: &EmbeddedGraph, gadget: impl Fn(usize) -> LocalGadget) -> Result<(EmbeddedGraph, usize)> {
    let graph = g.graph();
    let m = graph.edge_count();
    let rot = g.rotation().rotations();
    let mut slot_of = vec![[0usize; 2]; m];
    for r in rot {
        for (s, d) in r.iter().enumerate() {
            slot_of[d.edge][d.end as usize] = s;
        }
    }
    let mut attach: Vec<Vec<usize>> = Vec::with_capacity(rot.len());
    let mut rotations: Vec<Vec<Dart>> = Vec::new();
    let mut extra: Vec<(usize, usize)> = Vec::new();
    for r in rot {
        let gad = gadget(r.len());
        let base = rotations.len();
        let ebase = m + extra.len();
        extra.extend(gad.internal.iter().map(|&(a, b)| (base + a, base + b)));
        let mut at = vec![usize::MAX; r.len()];
        for (lv, slots) in gad.rotation.iter().enumerate() {
            let darts = slots
                .iter()
                .map(|s| match *s {
                    Slot::Ext(k) => {
                        at[k] = base + lv;
                        r[k]
                    }
                    Slot::Int(i, end) => Dart::new(ebase + i, end),
                })
                .collect();
            rotations.push(darts);
        }
        debug_assert_eq!(gad.rotation.len(), gad.vertices);
        attach.push(at);
    }
    let mut edges: Vec<(usize, usize)> = (0..m)
        .map(|e| {
            let (u, v) = graph.edges()[e];
            (attach[u][slot_of[e][0]], attach[v][slot_of[e][1]])
        })
        .collect();
    edges.extend(extra);
    let n = rotations.len();
    let out = EmbeddedGraph::new(Multigraph::new(n, edges)?, RotationSystem::new(rotations))?;
    Ok((out, m))
}

/// Splits vertices of degree ≥ 4 into chains of degree-3 vertices, keeping
/// the cyclic order of the edges.
fn chain_gadget(d: usize) -> LocalGadget {
    use Slot::*;
    if d <= 3 {
        return LocalGadget { vertices: 1, internal: Vec::new(), rotation: vec![(0..d).map(Ext).collect()] };
    }
    let k = d - 2;
    let internal = (0..k - 1).map(|i| (i, i + 1)).collect();
    let mut rotation = vec![vec![Ext(0), Ext(1), Int(0, 0)]];
    for i in 1..k - 1 {
        rotation.push(vec![Int(i - 1, 1), Ext(i + 1), Int(i, 0)]);
    }
    rotation.push(vec![Int(k - 2, 1), Ext(d - 2), Ext(d - 1)]);
    LocalGadget { vertices: k, internal, rotation }
}

/// Matching gadgets for degrees 0 to 3: an even number of the external edges
/// is matched, and each even choice completes in exactly one way.
fn matching_gadget(d: usize) -> LocalGadget {
    use Slot::*;
    match d {
        0 => LocalGadget { vertices: 0, internal: Vec::new(), rotation: Vec::new() },
        1 => LocalGadget { vertices: 2, internal: vec![(0, 1)], rotation: vec![vec![Ext(0), Int(0, 0)], vec![Int(0, 1)]] },
        2 => LocalGadget { vertices: 2, internal: vec![(0, 1)], rotation: vec![vec![Ext(0), Int(0, 0)], vec![Ext(1), Int(0, 1)]] },
        3 => LocalGadget {
            // center, a1, a2, a3; spokes to each a_i and a rim edge a2–a3
            vertices: 4,
            internal: vec![(0, 1), (0, 2), (0, 3), (2, 3)],
            rotation: vec![
                vec![Int(0, 0), Int(1, 0), Int(2, 0)],
                vec![Ext(0), Int(0, 1)],
                vec![Int(3, 0), Int(1, 1), Ext(1)],
                vec![Int(2, 1), Int(3, 1), Ext(2)],
            ],
        },
        _ => unreachable!("chain splitting leaves degree ≤ 3"),
    }
}

/// Builds the matching graph for the even-subgraph sum Σ_F t^{|F|} of a
/// loop-free plane graph.
pub fn fisher_graph(g: &EmbeddedGraph, t: &Rational) -> Result<FisherGraph> {
    if g.graph().loop_count() > 0 {
        return input("the even-subgraph expansion needs a loop-free graph");
    }
    let m = g.graph().edge_count();
    let (split, _) = expand(g, chain_gadget)?;
    let (graph, _) = expand(&split, matching_gadget)?;
    let total = graph.graph().edge_count();
    let origin: Vec<Option<usize>> = (0..total).map(|e| (e < m).then_some(e)).collect();
    let weights = origin.iter().map(|o| if o.is_some() { t.clone() } else { Rational::one() }).collect();
    Ok(FisherGraph { graph, weights, origin })
}

/// Σ over even subgraphs F (every vertex of even degree in F) of t^{|F|}.
pub fn even_subgraph_sum(g: &EmbeddedGraph, t: &Rational) -> Result<Rational> {
    let fisher = fisher_graph(g, t)?;
    count_weighted_matchings(&fisher.graph, &fisher.weights)
}
