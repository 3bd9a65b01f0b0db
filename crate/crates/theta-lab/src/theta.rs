//! Exact detection of theta subgraphs in weighted multigraphs.
//!
//! A theta certificate names two branch vertices and three internally
//! disjoint paths between them whose sorted weights dominate the sorted
//! thresholds (a, b, c). Detection recurses across 2-separations: each side
//! plus a virtual edge weighing as much as the heaviest cross path on the
//! other side contains a theta exactly when the whole graph does, and a
//! certificate using the virtual edge lifts back by splicing in the path
//! realizing that weight. Pieces without 2-separations are searched
//! directly.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::graph::{Edge, EdgeId, Multigraph, PathWitness, Vertex};
use crate::longest::max_weight_path;
use crate::paths::disjoint_paths_to_set;
use crate::sep::{two_separations, Separation};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaCertificate {
    pub branch_u: Vertex,
    pub branch_v: Vertex,
    /// Three internally disjoint u-v paths.
    pub paths: Vec<PathWitness>,
    /// The thresholds this certificate was requested against, ascending.
    pub thresholds: (u64, u64, u64),
}

impl ThetaCertificate {
    /// Independent verification: path validity, disjointness, domination.
    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        if self.branch_u == self.branch_v {
            return Err(Error::InvalidWitness("branch vertices must differ".into()));
        }
        if self.paths.len() != 3 {
            return Err(Error::InvalidWitness("a theta needs exactly three paths".into()));
        }
        let mut interiors: BTreeSet<Vertex> = BTreeSet::new();
        let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
        for p in &self.paths {
            p.verify(g)?;
            if p.first() != self.branch_u || p.last() != self.branch_v {
                return Err(Error::InvalidWitness("path does not join the branch vertices".into()));
            }
            for &x in p.interior() {
                if x == self.branch_u || x == self.branch_v || !interiors.insert(x) {
                    return Err(Error::InvalidWitness("paths are not internally disjoint".into()));
                }
            }
            for &id in &p.edges {
                if !edges.insert(id) {
                    return Err(Error::InvalidWitness("paths share an edge".into()));
                }
            }
        }
        let mut ws: Vec<u64> = self.paths.iter().map(|p| p.total_weight).collect();
        ws.sort_unstable();
        let (a, b, c) = self.thresholds;
        if ws[0] < a || ws[1] < b || ws[2] < c {
            return Err(Error::InvalidWitness(format!(
                "path weights {ws:?} do not dominate thresholds {:?}",
                self.thresholds
            )));
        }
        Ok(())
    }
}

fn sort3(a: u64, b: u64, c: u64) -> (u64, u64, u64) {
    let mut v = [a, b, c];
    v.sort_unstable();
    (v[0], v[1], v[2])
}

fn dominates(w1: u64, w2: u64, w3: u64, t: (u64, u64, u64)) -> bool {
    let s = sort3(w1, w2, w3);
    s.0 >= t.0 && s.1 >= t.1 && s.2 >= t.2
}

/// Does the weighted graph contain a theta with thresholds (a, b, c)?
/// Exhaustive within the budget; `None` is a proof of absence.
pub fn contains_theta(
    g: &Multigraph,
    a: u64,
    b: u64,
    c: u64,
    budget: &mut Budget,
) -> Result<Option<ThetaCertificate>> {
    let t = sort3(a, b, c);
    if g.total_weight() < t.0 + t.1 + t.2 {
        return Ok(None);
    }
    // Recurse across a 2-separation when one exists.
    if g.is_connected() && g.n() >= 4 {
        let seps = two_separations(g)?;
        if let Some(sep) = seps.first() {
            return lift_theta(g, sep, t.0, t.1, t.2, budget);
        }
    }
    direct_search(g, t, budget)
}

/// Theta with a fixed branch pair.
pub fn theta_at(
    g: &Multigraph,
    u: Vertex,
    v: Vertex,
    a: u64,
    b: u64,
    c: u64,
    budget: &mut Budget,
) -> Result<Option<ThetaCertificate>> {
    if u == v {
        return Err(Error::Precondition("branch vertices must differ".into()));
    }
    let t = sort3(a, b, c);
    search_pair(g, u, v, t, budget)
}

fn direct_search(
    g: &Multigraph,
    t: (u64, u64, u64),
    budget: &mut Budget,
) -> Result<Option<ThetaCertificate>> {
    for u in 0..g.n() {
        if g.degree(u) < 3 {
            continue;
        }
        for v in u + 1..g.n() {
            if g.degree(v) < 3 {
                continue;
            }
            if let Some(cert) = search_pair(g, u, v, t, budget)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// All three-path witnesses at a fixed pair: enumerate the two lighter
/// paths, then take a maximum-weight third path in what remains.
fn search_pair(
    g: &Multigraph,
    u: Vertex,
    v: Vertex,
    t: (u64, u64, u64),
    budget: &mut Budget,
) -> Result<Option<ThetaCertificate>> {
    // Cheap feasibility: three internally disjoint u-v paths must exist.
    let targets: BTreeSet<Vertex> = [v].into();
    if disjoint_paths_to_set(g, &[(u, 3)], &targets, 3, &BTreeSet::new()).is_none() {
        return Ok(None);
    }
    let mut state = PairSearch { g, u, v, t, budget };
    state.run()
}

struct PairSearch<'a> {
    g: &'a Multigraph,
    u: Vertex,
    v: Vertex,
    t: (u64, u64, u64),
    budget: &'a mut Budget,
}

impl<'a> PairSearch<'a> {
    fn run(&mut self) -> Result<Option<ThetaCertificate>> {
        let mut first = Vec::new();
        self.enumerate_paths(&BTreeSet::new(), &BTreeSet::new(), &mut first)?;
        for p1 in &first {
            let banned_v: BTreeSet<Vertex> = p1.interior().iter().copied().collect();
            let banned_e: BTreeSet<EdgeId> = p1.edges.iter().copied().collect();
            let mut second = Vec::new();
            self.enumerate_paths(&banned_v, &banned_e, &mut second)?;
            for p2 in &second {
                if path_key(p2) <= path_key(p1) {
                    continue;
                }
                let mut bv = banned_v.clone();
                bv.extend(p2.interior().iter().copied());
                let mut be = banned_e.clone();
                be.extend(p2.edges.iter().copied());
                let rest = self.g.without_edges(&be);
                let p3 = max_weight_path(&rest, self.u, self.v, &bv, self.budget)?;
                if let Some(p3) = p3 {
                    if !p3.is_empty()
                        && dominates(p1.total_weight, p2.total_weight, p3.total_weight, self.t)
                    {
                        let cert = ThetaCertificate {
                            branch_u: self.u,
                            branch_v: self.v,
                            paths: vec![p1.clone(), p2.clone(), p3],
                            thresholds: self.t,
                        };
                        cert.verify(self.g).expect("search output must verify");
                        return Ok(Some(cert));
                    }
                }
            }
        }
        Ok(None)
    }

    /// All u-v paths avoiding the given vertices/edges, by depth-first
    /// search in lexicographic neighbour order.
    fn enumerate_paths(
        &mut self,
        banned_v: &BTreeSet<Vertex>,
        banned_e: &BTreeSet<EdgeId>,
        out: &mut Vec<PathWitness>,
    ) -> Result<()> {
        let mut visited = vec![false; self.g.n()];
        for &x in banned_v {
            visited[x] = true;
        }
        visited[self.u] = true;
        let mut verts = vec![self.u];
        let mut edges = Vec::new();
        self.path_dfs(self.u, banned_e, &mut visited, &mut verts, &mut edges, out)
    }

    fn path_dfs(
        &mut self,
        head: Vertex,
        banned_e: &BTreeSet<EdgeId>,
        visited: &mut Vec<bool>,
        verts: &mut Vec<Vertex>,
        edges: &mut Vec<EdgeId>,
        out: &mut Vec<PathWitness>,
    ) -> Result<()> {
        self.budget.tick()?;
        let mut options: Vec<(Vertex, EdgeId, u64)> = self
            .g
            .incident(head)
            .filter(|e| !banned_e.contains(&e.id))
            .map(|e| (e.other(head), e.id, e.w))
            .collect();
        options.sort_unstable_by_key(|&(x, id, _)| (x, id));
        for (next, id, w) in options {
            if next == self.v {
                let mut vs = verts.clone();
                vs.push(self.v);
                let mut es = edges.clone();
                es.push(id);
                let total = es.iter().map(|&i| self.g.edge(i).unwrap().w).sum();
                out.push(PathWitness { vertices: vs, edges: es, total_weight: total });
                let _ = w;
            } else if !visited[next] {
                visited[next] = true;
                verts.push(next);
                edges.push(id);
                self.path_dfs(next, banned_e, visited, verts, edges, out)?;
                edges.pop();
                verts.pop();
                visited[next] = false;
            }
        }
        Ok(())
    }
}

fn path_key(p: &PathWitness) -> (usize, EdgeId) {
    match p.interior().iter().min() {
        Some(&x) => (x, 0),
        None => (usize::MAX, p.edges[0]),
    }
}

/// One side of a 2-separation plus a virtual edge across the cut.
pub struct SidePlus {
    pub graph: Multigraph,
    /// New-vertex -> original-vertex map.
    pub vertex_map: Vec<Vertex>,
    pub virtual_edge: EdgeId,
    /// Maximum-weight cut path on the other side realizing the virtual
    /// edge, in original coordinates.
    pub realizer: PathWitness,
}

/// Builds both sides of the 2-separation, each with a virtual edge whose
/// weight is the heaviest cut-to-cut path on the opposite side.
pub fn split_sides(g: &Multigraph, sep: &Separation, budget: &mut Budget) -> Result<(SidePlus, SidePlus)> {
    if sep.order() != 2 {
        return Err(Error::Precondition("theta lifting needs a 2-separation".into()));
    }
    sep.verify(g)?;
    let (x, y) = (sep.cut[0], sep.cut[1]);
    let make = |verts: &[Vertex], edge_ids: &[EdgeId], other_realizer: PathWitness, g: &Multigraph| -> Result<SidePlus> {
        let keep: BTreeSet<EdgeId> = edge_ids.iter().copied().collect();
        let (mut sub, vmap) = g.subgraph(verts, |e| keep.contains(&e.id));
        let lx = vmap.iter().position(|&o| o == x).expect("cut vertex on side");
        let ly = vmap.iter().position(|&o| o == y).expect("cut vertex on side");
        let vid = g.max_edge_id().max(sub.max_edge_id());
        sub = sub.with_extra_edges(vec![Edge { id: vid, u: lx, v: ly, w: other_realizer.total_weight.max(1) }])?;
        Ok(SidePlus { graph: sub, vertex_map: vmap, virtual_edge: vid, realizer: other_realizer })
    };
    let realize = |verts: &[Vertex], edge_ids: &[EdgeId], budget: &mut Budget| -> Result<PathWitness> {
        let keep: BTreeSet<EdgeId> = edge_ids.iter().copied().collect();
        let (sub, vmap) = g.subgraph(verts, |e| keep.contains(&e.id));
        let lx = vmap.iter().position(|&o| o == x).expect("cut vertex on side");
        let ly = vmap.iter().position(|&o| o == y).expect("cut vertex on side");
        let p = max_weight_path(&sub, lx, ly, &BTreeSet::new(), budget)?.ok_or_else(|| {
            Error::Precondition("separation side has no path between the cut vertices".into())
        })?;
        map_path(&p, &vmap, &sub)
    };
    let r2 = realize(&sep.part2_vertices, &sep.part2_edges, budget)?;
    let r1 = realize(&sep.part1_vertices, &sep.part1_edges, budget)?;
    let s1 = make(&sep.part1_vertices, &sep.part1_edges, r2, g)?;
    let s2 = make(&sep.part2_vertices, &sep.part2_edges, r1, g)?;
    Ok((s1, s2))
}

/// Path in subgraph coordinates mapped back to original coordinates.
fn map_path(p: &PathWitness, vmap: &[Vertex], _sub: &Multigraph) -> Result<PathWitness> {
    Ok(PathWitness {
        vertices: p.vertices.iter().map(|&v| vmap[v]).collect(),
        edges: p.edges.clone(),
        total_weight: p.total_weight,
    })
}

/// Detects a theta by recursing into the two sides of a 2-separation and
/// splicing any virtual-edge certificate back into the original graph.
pub fn lift_theta(
    g: &Multigraph,
    sep: &Separation,
    a: u64,
    b: u64,
    c: u64,
    budget: &mut Budget,
) -> Result<Option<ThetaCertificate>> {
    let t = sort3(a, b, c);
    let (s1, s2) = split_sides(g, sep, budget)?;
    for side in [s1, s2] {
        if let Some(local) = contains_theta(&side.graph, t.0, t.1, t.2, budget)? {
            return Ok(Some(lift_certificate(g, &side, &local, t)?));
        }
    }
    Ok(None)
}

/// Maps a side certificate back to the original graph, splicing the
/// realizing path over the virtual edge if it was used.
fn lift_certificate(
    g: &Multigraph,
    side: &SidePlus,
    local: &ThetaCertificate,
    t: (u64, u64, u64),
) -> Result<ThetaCertificate> {
    let mut paths = Vec::new();
    for p in &local.paths {
        let mut verts: Vec<Vertex> = Vec::new();
        let mut edges: Vec<EdgeId> = Vec::new();
        verts.push(side.vertex_map[p.vertices[0]]);
        for (k, &id) in p.edges.iter().enumerate() {
            let to = side.vertex_map[p.vertices[k + 1]];
            if id == side.virtual_edge {
                // Splice the realizer, oriented to continue the walk.
                let from = *verts.last().unwrap();
                let r = if side.realizer.first() == from {
                    side.realizer.clone()
                } else {
                    side.realizer.reversed()
                };
                verts.extend(r.vertices.iter().skip(1));
                edges.extend(r.edges.iter().copied());
            } else {
                verts.push(to);
                edges.push(id);
            }
        }
        paths.push(PathWitness::new(g, verts, edges)?);
    }
    let cert = ThetaCertificate {
        branch_u: side.vertex_map[local.branch_u],
        branch_v: side.vertex_map[local.branch_v],
        paths,
        thresholds: t,
    };
    cert.verify(g)?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn find(g: &Multigraph, a: u64, b: u64, c: u64) -> Option<ThetaCertificate> {
        contains_theta(g, a, b, c, &mut Budget::default()).unwrap()
    }

    #[test]
    fn k23_contains_theta_222() {
        let g = fixtures::k23();
        let cert = find(&g, 2, 2, 2).expect("theta in K23");
        cert.verify(&g).unwrap();
        assert_eq!((cert.branch_u, cert.branch_v), (0, 1));
    }

    #[test]
    fn cycles_are_theta_free() {
        for n in 3..8 {
            let g = fixtures::cycle(n);
            assert!(find(&g, 1, 2, 2).is_none());
        }
    }

    #[test]
    fn parallel_triple_with_weights() {
        let g = Multigraph::from_weighted(2, &[(0, 1, 4), (0, 1, 5), (0, 1, 6)]).unwrap();
        let cert = find(&g, 4, 4, 4).expect("fat edge is a theta");
        cert.verify(&g).unwrap();
        assert!(find(&g, 4, 5, 7).is_none());
    }

    #[test]
    fn k4_contains_theta_122() {
        let g = fixtures::k4();
        let cert = find(&g, 1, 2, 2).expect("theta in K4");
        cert.verify(&g).unwrap();
        // But no pair admits three paths of weight two or more each.
        assert!(find(&g, 2, 2, 2).is_none());
    }

    #[test]
    fn theta_at_branch_vertices_only() {
        let g = fixtures::theta(1, 2, 3);
        let mut budget = Budget::default();
        assert!(theta_at(&g, 0, 1, 1, 2, 3, &mut budget).unwrap().is_some());
        // Interior vertices of one path admit only two independent paths.
        let interior = 2; // first interior vertex of the length-2 path
        assert!(theta_at(&g, interior, 0, 1, 1, 1, &mut budget).unwrap().is_none());
    }

    #[test]
    fn wheel_hub_to_rim() {
        let g = fixtures::wheel(4);
        let cert = theta_at(&g, 0, 1, 1, 2, 2, &mut Budget::default()).unwrap().unwrap();
        cert.verify(&g).unwrap();
    }

    #[test]
    fn lift_across_two_triangles() {
        // Two triangles sharing the edge 0-1; unit weights.
        let g = Multigraph::from_list(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let seps = two_separations(&g).unwrap();
        assert_eq!(seps.len(), 1);
        let cert = lift_theta(&g, &seps[0], 1, 1, 2, &mut Budget::default()).unwrap().unwrap();
        cert.verify(&g).unwrap();
        // The certificate spans both triangles: a path of weight two exists.
        assert!(cert.paths.iter().any(|p| p.total_weight == 2));
    }

    #[test]
    fn lift_agrees_with_direct_search_when_theta_free() {
        // Two squares sharing an edge: no theta with three weight-2 paths.
        let g = Multigraph::from_list(
            6,
            &[(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)],
        )
        .unwrap();
        assert!(find(&g, 2, 2, 2).is_none());
        assert!(find(&g, 1, 2, 2).is_some());
    }

    #[test]
    fn monotone_in_thresholds() {
        let g = fixtures::k23();
        assert!(find(&g, 2, 2, 2).is_some());
        assert!(find(&g, 1, 2, 2).is_some());
        assert!(find(&g, 1, 1, 1).is_some());
    }

    #[test]
    fn subdivision_keeps_the_answer() {
        // Subdividing an edge into two halves of the same total weight.
        let g = Multigraph::from_weighted(2, &[(0, 1, 2), (0, 1, 2), (0, 1, 2)]).unwrap();
        let sub = Multigraph::from_weighted(
            3,
            &[(0, 2, 1), (2, 1, 1), (0, 1, 2), (0, 1, 2)],
        )
        .unwrap();
        assert_eq!(find(&g, 2, 2, 2).is_some(), find(&sub, 2, 2, 2).is_some());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = fixtures::complete(7);
        let mut tiny = Budget::new(3);
        match contains_theta(&g, 1, 1, 1, &mut tiny) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected explicit unknown, got {other:?}"),
        }
    }
}
