//! Shared fixtures for the benchmarks.

use plhom::graph_core::EmbeddedGraph;

/// The w×h grid graph, embedded from its straight-line drawing.
pub fn grid(w: usize, h: usize) -> EmbeddedGraph {
    let coords: Vec<(f64, f64)> = (0..h).flat_map(|r| (0..w).map(move |c| (c as f64, r as f64))).collect();
    let mut edges = Vec::new();
    for r in 0..h {
        for c in 0..w {
            let v = r * w + c;
            if c + 1 < w {
                edges.push((v, v + 1));
            }
            if r + 1 < h {
                edges.push((v, v + w));
            }
        }
    }
    EmbeddedGraph::from_drawing(&coords, &edges).expect("grid drawing is planar")
}
