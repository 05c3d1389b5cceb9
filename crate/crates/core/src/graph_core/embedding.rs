use serde::{Deserialize, Serialize};

use super::multigraph::{Multigraph, Subgraph};
use crate::error::{input, Result};

/// One end of an edge: the half-edge leaving endpoint `end` of `edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: usize,
    pub end: u8,
}

impl Dart {
    pub fn new(edge: usize, end: u8) -> Self {
        Dart { edge, end }
    }

    pub fn reverse(self) -> Self {
        Dart { edge: self.edge, end: 1 - self.end }
    }
}

/// Cyclic order of darts around every vertex: a combinatorial embedding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RotationSystem {
    rotations: Vec<Vec<Dart>>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<Dart>>) -> Self {
        RotationSystem { rotations }
    }

    pub fn at(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn into_inner(self) -> Vec<Vec<Dart>> {
        self.rotations
    }
}

/// A multigraph with a genus-0 rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    graph: Multigraph,
    rotation: RotationSystem,
    /// position[e][end] = index of that dart in its vertex rotation.
    position: Vec<[usize; 2]>,
}

fn positions(graph: &Multigraph, rotation: &RotationSystem) -> Result<Vec<[usize; 2]>> {
    let n = graph.vertex_count();
    if rotation.rotations.len() != n {
        return input(format!("rotation system lists {} vertices, graph has {n}", rotation.rotations.len()));
    }
    let mut pos = vec![[usize::MAX; 2]; graph.edge_count()];
    for (v, rot) in rotation.rotations.iter().enumerate() {
        for (i, d) in rot.iter().enumerate() {
            if d.edge >= graph.edge_count() || d.end > 1 {
                return input(format!("vertex {v}: dart ({}, {}) does not exist", d.edge, d.end));
            }
            if graph.endpoint(d.edge, d.end) != v {
                return input(format!("vertex {v}: dart ({}, {}) belongs to another vertex", d.edge, d.end));
            }
            if pos[d.edge][d.end as usize] != usize::MAX {
                return input(format!("dart ({}, {}) appears twice", d.edge, d.end));
            }
            pos[d.edge][d.end as usize] = i;
        }
    }
    if let Some(e) = pos.iter().position(|p| p.contains(&usize::MAX)) {
        return input(format!("edge {e} is missing a dart in the rotation system"));
    }
    Ok(pos)
}

impl EmbeddedGraph {
    /// Validates dart consistency and the per-component Euler formula.
    pub fn new(graph: Multigraph, rotation: RotationSystem) -> Result<Self> {
        let position = positions(&graph, &rotation)?;
        let g = EmbeddedGraph { graph, rotation, position };
        g.euler_check()?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(graph: Multigraph, rotation: RotationSystem) -> Self {
        let position = positions(&graph, &rotation).expect("internally built rotation must be consistent");
        let g = EmbeddedGraph { graph, rotation, position };
        debug_assert!(g.euler_check().is_ok(), "internally built embedding must be planar");
        g
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn into_parts(self) -> (Multigraph, RotationSystem) {
        (self.graph, self.rotation)
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.graph.endpoint(d.edge, d.end)
    }

    /// The dart after `d` in the rotation at its vertex.
    pub fn next_around(&self, d: Dart) -> Dart {
        let v = self.vertex_of(d);
        let rot = &self.rotation.rotations[v];
        let i = self.position[d.edge][d.end as usize];
        rot[(i + 1) % rot.len()]
    }

    /// Face boundary walks; the face of `d` continues with the dart following
    /// `reverse(d)` around the far endpoint.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let m = self.graph.edge_count();
        let mut seen = vec![[false; 2]; m];
        let mut faces = Vec::new();
        for e in 0..m {
            for end in 0..2u8 {
                if seen[e][end as usize] {
                    continue;
                }
                let start = Dart::new(e, end);
                let mut face = Vec::new();
                let mut d = start;
                loop {
                    seen[d.edge][d.end as usize] = true;
                    face.push(d);
                    d = self.next_around(d.reverse());
                    if d == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Faces of the whole drawing: an isolated vertex owns one face and all
    /// components share a single outer face.
    pub fn face_count(&self) -> usize {
        let isolated = self.graph.degrees().iter().filter(|&&d| d == 0).count();
        let c = self.graph.components().len();
        (self.faces().len() + isolated + 1).saturating_sub(c)
    }

    fn euler_check(&self) -> Result<()> {
        let c = self.graph.components().len() as i64;
        let v = self.graph.vertex_count() as i64;
        let e = self.graph.edge_count() as i64;
        let f = self.face_count() as i64;
        if v - e + f != 1 + c {
            return input(format!("rotation system is not planar: V − E + F = {} but {} components need {}", v - e + f, c, 1 + c));
        }
        Ok(())
    }

    /// Removes the edges rejected by `keep`; deletion preserves planarity.
    pub fn filter_edges(&self, keep: impl Fn(usize) -> bool) -> (EmbeddedGraph, Vec<usize>) {
        let (graph, kept) = self.graph.filter_edges(&keep);
        let mut new_index = vec![usize::MAX; self.graph.edge_count()];
        for (i, &e) in kept.iter().enumerate() {
            new_index[e] = i;
        }
        let rotations = self
            .rotation
            .rotations
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|d| new_index[d.edge] != usize::MAX)
                    .map(|d| Dart::new(new_index[d.edge], d.end))
                    .collect()
            })
            .collect();
        (EmbeddedGraph::from_parts_unchecked(graph, RotationSystem::new(rotations)), kept)
    }

    pub fn without_loops(&self) -> EmbeddedGraph {
        let edges = self.graph.edges();
        self.filter_edges(|e| edges[e].0 != edges[e].1).0
    }

    /// Each connected component with its own embedding.
    pub fn component_subgraphs(&self) -> Vec<(EmbeddedGraph, Subgraph)> {
        let subs = self.graph.component_subgraphs();
        let mut local_edge = vec![0usize; self.graph.edge_count()];
        for s in &subs {
            for (i, &e) in s.edges.iter().enumerate() {
                local_edge[e] = i;
            }
        }
        subs.into_iter()
            .map(|s| {
                let rotations = s
                    .vertices
                    .iter()
                    .map(|&v| self.rotation.rotations[v].iter().map(|d| Dart::new(local_edge[d.edge], d.end)).collect())
                    .collect();
                let g = EmbeddedGraph::from_parts_unchecked(s.graph.clone(), RotationSystem::new(rotations));
                (g, s)
            })
            .collect()
    }

    /// Embedding induced by a straight-line drawing: darts sorted clockwise by angle.
    pub fn from_drawing(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> Result<Self> {
        let graph = Multigraph::new(coords.len(), edges.to_vec())?;
        if graph.loop_count() > 0 {
            return input("a straight-line drawing cannot contain loops");
        }
        let mut rotations: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); coords.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            let a = (coords[v].1 - coords[u].1).atan2(coords[v].0 - coords[u].0);
            let b = (coords[u].1 - coords[v].1).atan2(coords[u].0 - coords[v].0);
            rotations[u].push((-a, Dart::new(e, 0)));
            rotations[v].push((-b, Dart::new(e, 1)));
        }
        let rotations = rotations
            .into_iter()
            .map(|mut r| {
                r.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
                r.into_iter().map(|(_, d)| d).collect()
            })
            .collect();
        EmbeddedGraph::new(graph, RotationSystem::new(rotations))
    }

    /// Adds a loop at `v` whose two darts sit together right after rotation slot `after`.
    pub fn with_loop(&self, v: usize, after: usize) -> EmbeddedGraph {
        let mut edges = self.graph.edges().to_vec();
        let e = edges.len();
        edges.push((v, v));
        let mut rotations = self.rotation.rotations.clone();
        let at = if rotations[v].is_empty() { 0 } else { (after % rotations[v].len()) + 1 };
        rotations[v].splice(at..at, [Dart::new(e, 0), Dart::new(e, 1)]);
        EmbeddedGraph::from_parts_unchecked(Multigraph::from_parts(self.graph.vertex_count(), edges), RotationSystem::new(rotations))
    }

    /// Cycle C_k drawn as a regular polygon (k = 1 loop, k = 2 digon).
    pub fn cycle(k: usize) -> EmbeddedGraph {
        let g = Multigraph::cycle(k);
        let rotations = (0..k).map(|i| vec![Dart::new(i, 0), Dart::new((i + k - 1) % k, 1)]).collect();
        EmbeddedGraph::from_parts_unchecked(g, RotationSystem::new(rotations))
    }

    pub fn path(k: usize) -> EmbeddedGraph {
        let g = Multigraph::path(k);
        let rotations = (0..=k)
            .map(|i| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push(Dart::new(i - 1, 1));
                }
                if i < k {
                    r.push(Dart::new(i, 0));
                }
                r
            })
            .collect();
        EmbeddedGraph::from_parts_unchecked(g, RotationSystem::new(rotations))
    }
}
