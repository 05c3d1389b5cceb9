use serde::{Deserialize, Serialize};

use super::embedding::{Dart, EmbeddedGraph, RotationSystem};
use super::multigraph::Multigraph;
use crate::error::{input, Error, Result};

/// On-disk graph: `{"vertices": n, "edges": [[u,v],...], "rotations": [[[e,end],...],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotations: Option<Vec<Vec<[usize; 2]>>>,
}

impl GraphFile {
    pub fn from_graph(g: &Multigraph) -> Self {
        GraphFile { vertices: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(), rotations: None }
    }

    pub fn from_embedded(g: &EmbeddedGraph) -> Self {
        let mut f = GraphFile::from_graph(g.graph());
        f.rotations = Some(
            g.rotation().rotations().iter().map(|r| r.iter().map(|d| [d.edge, d.end as usize]).collect()).collect(),
        );
        f
    }

    /// The multigraph, plus its validated embedding when rotations are present.
    pub fn into_graph(self) -> Result<(Multigraph, Option<EmbeddedGraph>)> {
        let g = Multigraph::new(self.vertices, self.edges.iter().map(|e| (e[0], e[1])).collect())?;
        let Some(rots) = self.rotations else { return Ok((g, None)) };
        let mut rotations = Vec::with_capacity(rots.len());
        for r in rots {
            let mut darts = Vec::with_capacity(r.len());
            for [e, end] in r {
                if end > 1 {
                    return input(format!("dart end must be 0 or 1, got {end}"));
                }
                darts.push(Dart::new(e, end as u8));
            }
            rotations.push(darts);
        }
        let eg = EmbeddedGraph::new(g.clone(), RotationSystem::new(rotations))?;
        Ok((g, Some(eg)))
    }
}

pub fn parse_graph_json(text: &str) -> Result<(Multigraph, Option<EmbeddedGraph>)> {
    let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Input(format!("graph JSON: {e}")))?;
    f.into_graph()
}
