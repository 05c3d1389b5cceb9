//! A fixed corpus of small connected planar multigraphs with embeddings,
//! used by the oracle test suites.

use std::f64::consts::TAU;

use super::embedding::EmbeddedGraph;
use super::transforms::EdgeTransform;

fn ring(k: usize, r: f64, phase: f64) -> Vec<(f64, f64)> {
    (0..k).map(|i| {
        let a = phase + TAU * i as f64 / k as f64;
        (r * a.cos(), r * a.sin())
    })
    .collect()
}

fn draw(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> EmbeddedGraph {
    EmbeddedGraph::from_drawing(coords, edges).expect("corpus drawing is planar")
}

fn star(k: usize) -> EmbeddedGraph {
    let mut c = vec![(0.0, 0.0)];
    c.extend(ring(k, 1.0, 0.1));
    draw(&c, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
}

fn wheel(k: usize) -> EmbeddedGraph {
    let mut c = vec![(0.0, 0.0)];
    c.extend(ring(k, 1.0, 0.1));
    let mut e: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    e.extend((1..=k).map(|i| (i, i % k + 1)));
    draw(&c, &e)
}

fn k2n(k: usize) -> EmbeddedGraph {
    let mut c = vec![(0.0, 1.0), (0.0, -1.0)];
    c.extend((0..k).map(|i| (i as f64 - (k as f64 - 1.0) / 2.0, 0.0)));
    let mut e = Vec::new();
    for i in 0..k {
        e.push((0, 2 + i));
        e.push((1, 2 + i));
    }
    draw(&c, &e)
}

fn polygon(k: usize, chords: &[(usize, usize)]) -> EmbeddedGraph {
    let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    e.extend_from_slice(chords);
    draw(&ring(k, 1.0, 0.2), &e)
}

fn fan(k: usize) -> EmbeddedGraph {
    let mut c = vec![(0.0, -1.0)];
    c.extend((0..k).map(|i| (i as f64 - (k as f64 - 1.0) / 2.0, 1.0)));
    let mut e: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    e.extend((1..k).map(|i| (i, i + 1)));
    draw(&c, &e)
}

fn double_edges(g: &EmbeddedGraph, which: &[usize], k: usize) -> EmbeddedGraph {
    g.thicken_by(&|e| if which.contains(&e) { k } else { 1 }).0
}

fn k4() -> EmbeddedGraph {
    draw(&[(0.0, 0.0), (4.0, 0.0), (2.0, 3.0), (2.0, 1.0)], &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
}

/// Connected planar test graphs with at most 7 vertices and 10 edges,
/// including loops and parallel edges.
pub fn planar_corpus() -> Vec<(&'static str, EmbeddedGraph)> {
    let mut out: Vec<(&'static str, EmbeddedGraph)> = vec![
        ("vertex", EmbeddedGraph::path(0)),
        ("loop", EmbeddedGraph::cycle(1)),
        ("double-loop", EmbeddedGraph::cycle(1).with_loop(0, 1)),
        ("digon", EmbeddedGraph::cycle(2)),
        ("triple-edge", double_edges(&EmbeddedGraph::path(1), &[0], 3)),
    ];
    let paths = ["path1", "path2", "path3", "path4", "path5", "path6"];
    for (i, name) in paths.iter().enumerate() {
        out.push((name, EmbeddedGraph::path(i + 1)));
    }
    let cycles = ["triangle", "square", "pentagon", "hexagon", "heptagon"];
    for (i, name) in cycles.iter().enumerate() {
        out.push((name, polygon(i + 3, &[])));
    }
    for (k, name) in [(3, "star3"), (4, "star4"), (5, "star5"), (6, "star6")] {
        out.push((name, star(k)));
    }
    let house = draw(&[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0), (1.0, 3.0)], &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 3)]);
    let bowtie = draw(&[(0.0, 0.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, 1.0), (1.0, -1.0)], &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
    let prism = draw(
        &[(0.0, 0.0), (4.0, 0.0), (2.0, 4.0), (1.5, 1.0), (2.5, 1.0), (2.0, 2.0)],
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    );
    let grid = draw(
        &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 1.0), (1.0, 1.0), (2.0, 1.0)],
        &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
    );
    let theta = draw(
        &[(0.0, 0.0), (3.0, 0.0), (1.5, 1.0), (1.0, -1.0), (2.0, -1.0)],
        &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)],
    );
    let tadpole = draw(&[(0.0, 0.0), (2.0, 0.0), (1.0, 1.5), (1.0, 3.0)], &[(0, 1), (1, 2), (2, 0), (2, 3)]);
    let bull = draw(
        &[(0.0, 0.0), (2.0, 0.0), (1.0, 1.5), (-1.0, -0.5), (3.0, -0.5)],
        &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)],
    );
    let spider = draw(
        &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (-0.5, 1.0), (-1.0, 2.0), (-0.5, -1.0), (-1.0, -2.0)],
        &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
    );
    let caterpillar = draw(
        &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (1.0, 1.0), (2.0, -1.0)],
        &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)],
    );
    let square_tail = draw(
        &[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (2.0, 2.0), (3.0, 3.0)],
        &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5)],
    );
    out.extend([
        ("k4", k4()),
        ("wheel5", wheel(4)),
        ("wheel6", wheel(5)),
        ("k2-3", k2n(3)),
        ("k2-4", k2n(4)),
        ("k2-5", k2n(5)),
        ("diamond", polygon(4, &[(0, 2)])),
        ("pentagon-chord", polygon(5, &[(0, 2)])),
        ("pentagon-fan", polygon(5, &[(0, 2), (0, 3)])),
        ("hexagon-chords", polygon(6, &[(0, 2), (3, 5)])),
        ("hexagon-diameter", polygon(6, &[(0, 3)])),
        ("heptagon-chords", polygon(7, &[(0, 3), (3, 6)])),
        ("fan4", fan(4)),
        ("fan5", fan(5)),
        ("house", house),
        ("bowtie", bowtie),
        ("prism", prism),
        ("grid2x3", grid),
        ("theta", theta),
        ("tadpole", tadpole.clone()),
        ("bull", bull),
        ("spider", spider),
        ("caterpillar", caterpillar),
        ("square-tail", square_tail),
    ]);
    out.extend([
        ("fat-triangle", double_edges(&polygon(3, &[]), &[0, 1, 2], 2)),
        ("triangle-double-side", double_edges(&polygon(3, &[]), &[0], 2)),
        ("fat-path3", double_edges(&EmbeddedGraph::path(3), &[0, 1, 2], 2)),
        ("digon-tail", double_edges(&EmbeddedGraph::path(2), &[0], 2)),
        ("path2-loop", EmbeddedGraph::path(2).with_loop(1, 0)),
        ("square-loop", polygon(4, &[]).with_loop(0, 0)),
        ("k4-loop", k4().with_loop(3, 1)),
        ("tadpole-loop", tadpole.with_loop(3, 0)),
        ("diamond-double", double_edges(&polygon(4, &[(0, 2)]), &[4], 2)),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = planar_corpus();
        assert!(c.len() >= 40, "corpus has {} graphs", c.len());
        let mut names: Vec<&str> = c.iter().map(|(n, _)| *n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        for (name, g) in &c {
            let mg = g.graph();
            assert!(mg.vertex_count() <= 7 && mg.edge_count() <= 10, "{name}");
            assert!(mg.is_connected(), "{name}");
            EmbeddedGraph::new(mg.clone(), g.rotation().clone()).unwrap();
        }
    }
}
