//! Bridges of a subgraph: the pieces of the graph hanging off a host
//! subgraph H. A bridge is either a single edge outside H with both ends in
//! H (trivial) or a component of G - V(H) together with its linking edges.
//! The feet of a bridge are its vertices on H.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bridge {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<Vertex>,
    pub feet: Vec<Vertex>,
    pub trivial: bool,
}

impl Bridge {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeDecomposition {
    pub host_vertices: Vec<Vertex>,
    pub host_edges: Vec<EdgeId>,
    pub bridges: Vec<Bridge>,
}

impl BridgeDecomposition {
    /// Checks the partition property: every non-host edge is in exactly one
    /// bridge and all feet lie on the host.
    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        let host_v: BTreeSet<_> = self.host_vertices.iter().copied().collect();
        let host_e: BTreeSet<_> = self.host_edges.iter().copied().collect();
        let mut seen = BTreeSet::new();
        for b in &self.bridges {
            for &id in &b.edges {
                if host_e.contains(&id) || !seen.insert(id) {
                    return Err(Error::InvalidWitness(
                        "bridge edge repeated or inside host".into(),
                    ));
                }
            }
            for &f in &b.feet {
                if !host_v.contains(&f) {
                    return Err(Error::InvalidWitness("bridge foot off the host".into()));
                }
            }
        }
        if seen.len() + host_e.len() != g.m() {
            return Err(Error::InvalidWitness("bridges do not cover all non-host edges".into()));
        }
        Ok(())
    }
}

/// Bridge decomposition of `g` relative to the host subgraph given by
/// `host_vertices` and `host_edges`.
pub fn bridges_of(
    g: &Multigraph,
    host_vertices: &BTreeSet<Vertex>,
    host_edges: &BTreeSet<EdgeId>,
) -> Result<BridgeDecomposition> {
    for &v in host_vertices {
        if v >= g.n() {
            return Err(Error::Precondition(format!("host vertex {v} not in graph")));
        }
    }
    for &id in host_edges {
        let e = g.edge(id)?;
        if !host_vertices.contains(&e.u) || !host_vertices.contains(&e.v) {
            return Err(Error::Precondition(format!("host edge {id} leaves the host vertex set")));
        }
    }

    let mut bridges = Vec::new();
    // Trivial bridges: single non-host edges with both ends on the host.
    for e in g.edges() {
        if !host_edges.contains(&e.id) && host_vertices.contains(&e.u) && host_vertices.contains(&e.v)
        {
            bridges.push(Bridge {
                edges: vec![e.id],
                vertices: vec![e.ends().0, e.ends().1],
                feet: vec![e.ends().0, e.ends().1],
                trivial: true,
            });
        }
    }
    // One bridge per component of G - V(H).
    for comp in g.components_without(host_vertices) {
        let comp_set: BTreeSet<_> = comp.iter().copied().collect();
        let mut edges = Vec::new();
        let mut feet = BTreeSet::new();
        for e in g.edges() {
            let iu = comp_set.contains(&e.u);
            let iv = comp_set.contains(&e.v);
            if iu && iv {
                edges.push(e.id);
            } else if iu || iv {
                let foot = if iu { e.v } else { e.u };
                if host_vertices.contains(&foot) {
                    edges.push(e.id);
                    feet.insert(foot);
                }
            }
        }
        let mut vertices: Vec<Vertex> = comp.clone();
        vertices.extend(feet.iter().copied());
        vertices.sort_unstable();
        bridges.push(Bridge {
            edges,
            vertices,
            feet: feet.into_iter().collect(),
            trivial: false,
        });
    }
    let dec = BridgeDecomposition {
        host_vertices: host_vertices.iter().copied().collect(),
        host_edges: host_edges.iter().copied().collect(),
        bridges,
    };
    dec.verify(g)?;
    Ok(dec)
}

/// Bridges of a cycle given by a witness.
pub fn bridges_of_cycle(g: &Multigraph, c: &crate::graph::CycleWitness) -> Result<BridgeDecomposition> {
    bridges_of(
        g,
        &c.vertices.iter().copied().collect(),
        &c.edges.iter().copied().collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_off_a_triangle_is_one_bridge() {
        let g = fixtures::k4();
        let host_v: BTreeSet<_> = [0, 1, 2].into();
        let host_e: BTreeSet<_> =
            g.edges().iter().filter(|e| e.u != 3 && e.v != 3).map(|e| e.id).collect();
        let dec = bridges_of(&g, &host_v, &host_e).unwrap();
        assert_eq!(dec.bridges.len(), 1);
        let b = &dec.bridges[0];
        assert!(!b.trivial);
        assert_eq!(b.feet, vec![0, 1, 2]);
        assert_eq!(b.edges.len(), 3);
    }

    #[test]
    fn chord_of_a_cycle_is_a_trivial_bridge() {
        let mut list: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        list.push((0, 3));
        let g = Multigraph::from_list(6, &list).unwrap();
        let host_v: BTreeSet<_> = (0..6).collect();
        let host_e: BTreeSet<_> = (0..6).collect();
        let dec = bridges_of(&g, &host_v, &host_e).unwrap();
        assert_eq!(dec.bridges.len(), 1);
        assert!(dec.bridges[0].trivial);
        assert_eq!(dec.bridges[0].feet, vec![0, 3]);
    }

    #[test]
    fn theta_bridge_of_one_path() {
        let g = fixtures::theta(2, 2, 2);
        // host = branch vertices 0,1 plus the first path 0-2-1
        let host_v: BTreeSet<_> = [0, 1, 2].into();
        let host_e: BTreeSet<_> =
            g.edges().iter().filter(|e| e.touches(2)).map(|e| e.id).collect();
        let dec = bridges_of(&g, &host_v, &host_e).unwrap();
        assert_eq!(dec.bridges.len(), 2);
        for b in &dec.bridges {
            assert_eq!(b.feet, vec![0, 1]);
        }
    }
}
