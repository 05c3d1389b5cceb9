use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// An undirected multigraph on vertices `0..n`. Loops and parallel edges are
/// allowed; edge indices are positions in `edges` and stay stable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A piece of a larger graph with maps back to the parent's indices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Multigraph,
    /// `vertices[i]` is the parent index of local vertex `i`.
    pub vertices: Vec<usize>,
    /// `edges[i]` is the parent index of local edge `i`.
    pub edges: Vec<usize>,
}

/// Per-component 2-colourings, or `None` when some component has an odd cycle.
pub type Bipartition = Option<Vec<(Vec<usize>, Vec<usize>)>>;

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return input(format!("edge {{{u},{v}}} has an endpoint outside 0..{n}"));
        }
        Ok(Multigraph { n, edges })
    }

    pub(crate) fn from_parts(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < n && v < n));
        Multigraph { n, edges }
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    /// A path with `k` edges on `k + 1` vertices.
    pub fn path(k: usize) -> Self {
        Multigraph { n: k + 1, edges: (0..k).map(|i| (i, i + 1)).collect() }
    }

    /// A cycle on `k ≥ 1` vertices (k = 1 is a loop, k = 2 a digon).
    pub fn cycle(k: usize) -> Self {
        Multigraph { n: k, edges: (0..k).map(|i| (i, (i + 1) % k)).collect() }
    }

    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Multigraph { n: k, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoint(&self, edge: usize, end: u8) -> usize {
        let (u, v) = self.edges[edge];
        if end == 0 {
            u
        } else {
            v
        }
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Adjacency as (neighbour, edge) pairs; a loop appears twice at its vertex.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// 2-colouring of every component; the side containing a component's
    /// smallest vertex comes first. Any loop makes the graph non-bipartite.
    pub fn bipartition(&self) -> Bipartition {
        if self.loop_count() > 0 {
            return None;
        }
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut out = Vec::new();
        for comp in self.components() {
            let s = comp[0];
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &(w, _) in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
            let (a, b): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| colour[v] == Some(false));
            out.push((a, b));
        }
        Some(out)
    }

    /// True when the graph has no cycles, loops and digons included.
    pub fn is_forest(&self) -> bool {
        self.loop_count() == 0 && self.edges.len() + self.components().len() == self.n
    }

    /// Keeps only the edges selected by `keep`; returns the graph and the
    /// parent index of each surviving edge.
    pub fn filter_edges(&self, keep: impl Fn(usize) -> bool) -> (Multigraph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.edges.len()).filter(|&e| keep(e)).collect();
        let edges = kept.iter().map(|&e| self.edges[e]).collect();
        (Multigraph { n: self.n, edges }, kept)
    }

    /// One subgraph per connected component, local indices ascending in parent order.
    pub fn component_subgraphs(&self) -> Vec<Subgraph> {
        let comps = self.components();
        let mut local = vec![(0usize, 0usize); self.n];
        for (c, comp) in comps.iter().enumerate() {
            for (i, &v) in comp.iter().enumerate() {
                local[v] = (c, i);
            }
        }
        let mut subs: Vec<Subgraph> = comps
            .iter()
            .map(|comp| Subgraph { graph: Multigraph::edgeless(comp.len()), vertices: comp.clone(), edges: Vec::new() })
            .collect();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let (c, lu) = local[u];
            let lv = local[v].1;
            subs[c].graph.edges.push((lu, lv));
            subs[c].edges.push(e);
        }
        subs
    }

    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Multigraph { n: self.n + other.n, edges }
    }

    /// Graph with vertices renamed by `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        Multigraph { n: self.n, edges: self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect() }
    }
}
