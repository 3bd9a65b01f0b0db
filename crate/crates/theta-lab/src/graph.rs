//! Loopless weighted multigraphs with stable edge ids.
//!
//! Vertices are dense integers `0..n`. Edge ids survive subgraph extraction
//! so that every certificate produced anywhere in the crate can be checked
//! against the original input graph. Weights are positive integers; the
//! weight of a subgraph is the sum of its edge weights.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    pub w: u64,
}

impl Edge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// Unordered endpoint pair, smaller vertex first.
    pub fn ends(&self) -> (Vertex, Vertex) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

#[derive(Debug, Clone)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    by_id: HashMap<EdgeId, usize>,
}

#[derive(Serialize, Deserialize)]
struct MultigraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultigraphRepr { n: self.n, edges: self.edges.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MultigraphRepr::deserialize(d)?;
        Multigraph::new(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut by_id = HashMap::new();
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", e.u)));
            }
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {} has endpoint out of range",
                    e.id
                )));
            }
            if e.w == 0 {
                return Err(Error::InvalidGraph(format!("edge {} has weight 0", e.id)));
            }
            if by_id.insert(e.id, i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge id {}", e.id)));
            }
            adj[e.u].push(i);
            adj[e.v].push(i);
        }
        Ok(Multigraph { n, edges, adj, by_id })
    }

    /// Unit-weight graph with edge ids `0..m` in list order.
    pub fn from_list(n: usize, list: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::from_weighted(n, &list.iter().map(|&(u, v)| (u, v, 1)).collect::<Vec<_>>())
    }

    pub fn from_weighted(n: usize, list: &[(Vertex, Vertex, u64)]) -> Result<Self> {
        let edges = list
            .iter()
            .enumerate()
            .map(|(id, &(u, v, w))| Edge { id, u, v, w })
            .collect();
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.by_id
            .get(&id)
            .map(|&i| &self.edges[i])
            .ok_or(Error::NoSuchEdge(id))
    }

    pub fn has_edge_id(&self, id: EdgeId) -> bool {
        self.by_id.contains_key(&id)
    }

    pub fn max_edge_id(&self) -> EdgeId {
        self.edges.iter().map(|e| e.id).max().map_or(0, |x| x + 1)
    }

    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = &Edge> {
        self.adj[v].iter().map(move |&i| &self.edges[i])
    }

    /// Degree counting edge multiplicity.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Distinct neighbours in increasing order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut ns: Vec<Vertex> = self.incident(v).map(|e| e.other(v)).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    /// All edges between `u` and `v`, in edge-list order.
    pub fn parallel_family(&self, u: Vertex, v: Vertex) -> Vec<&Edge> {
        self.incident(u).filter(|e| e.other(u) == v).collect()
    }

    /// True if the graph is simple (no parallel families of size > 1).
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.ends()))
    }

    /// Components of the graph after deleting `removed`, as sorted vertex
    /// lists. Isolated surviving vertices each form their own component.
    pub fn components_without(&self, removed: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        for &v in removed {
            seen[v] = true;
        }
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for e in self.incident(v) {
                    let u = e.other(v);
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_without(&BTreeSet::new())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True if deleting `zs` disconnects the remaining vertices.
    pub fn is_cut(&self, zs: &BTreeSet<Vertex>) -> bool {
        self.components_without(zs).len() >= 2
    }

    /// Keeps one maximum-weight edge per parallel family (ties broken by
    /// lowest edge id) and reports the families.
    pub fn simplify(&self) -> (Multigraph, SimplifyMap) {
        let mut families: HashMap<(Vertex, Vertex), Vec<&Edge>> = HashMap::new();
        for e in &self.edges {
            families.entry(e.ends()).or_default().push(e);
        }
        let mut keys: Vec<(Vertex, Vertex)> = families.keys().copied().collect();
        keys.sort_unstable();
        let mut kept = Vec::new();
        let mut map = Vec::new();
        for key in keys {
            let fam = &families[&key];
            let rep = fam
                .iter()
                .copied()
                .max_by(|a, b| a.w.cmp(&b.w).then(b.id.cmp(&a.id)))
                .unwrap();
            kept.push(rep.clone());
            let mut ids: Vec<EdgeId> = fam.iter().map(|e| e.id).collect();
            ids.sort_unstable();
            map.push(ParallelFamily { representative: rep.id, members: ids });
        }
        let g = Multigraph::new(self.n, kept).expect("simplification preserves validity");
        (g, SimplifyMap { families: map })
    }

    /// 2-connected under the multigraph convention: the simplification is
    /// 2-connected, or it is a single edge and the graph has at least two
    /// parallel edges.
    pub fn is_2connected(&self) -> bool {
        let (si, _) = self.simplify();
        if si.n == 2 && si.m() == 1 {
            return self.m() >= 2;
        }
        si.is_2connected_simple()
    }

    fn is_2connected_simple(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|v| !self.is_cut(&BTreeSet::from([v])))
    }

    /// 3-connected under the multigraph convention: the simplification is
    /// 3-connected.
    pub fn is_3connected(&self) -> bool {
        let (si, _) = self.simplify();
        if si.n < 4 || !si.is_connected() {
            return false;
        }
        for a in 0..si.n {
            for b in a + 1..si.n {
                if si.components_without(&BTreeSet::from([a, b])).len() >= 2 {
                    return false;
                }
            }
        }
        for v in 0..si.n {
            if si.is_cut(&BTreeSet::from([v])) {
                return false;
            }
        }
        true
    }

    /// Subgraph on a vertex subset keeping the edges accepted by `keep`.
    /// Vertices are renumbered densely; edge ids are preserved. The
    /// returned map sends new vertex ids back to the originals.
    pub fn subgraph<F: Fn(&Edge) -> bool>(&self, verts: &[Vertex], keep: F) -> (Multigraph, Vec<Vertex>) {
        let mut sorted: Vec<Vertex> = verts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in sorted.iter().enumerate() {
            back[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| back[e.u] != usize::MAX && back[e.v] != usize::MAX && keep(e))
            .map(|e| Edge { id: e.id, u: back[e.u], v: back[e.v], w: e.w })
            .collect();
        let g = Multigraph::new(sorted.len(), edges).expect("subgraph of valid graph is valid");
        (g, sorted)
    }

    /// Induced subgraph: all edges with both endpoints inside.
    pub fn induced(&self, verts: &[Vertex]) -> (Multigraph, Vec<Vertex>) {
        self.subgraph(verts, |_| true)
    }

    /// Copy of the graph with extra edges appended (fresh ids must be chosen
    /// by the caller).
    pub fn with_extra_edges(&self, extra: Vec<Edge>) -> Result<Multigraph> {
        let mut edges = self.edges.clone();
        edges.extend(extra);
        Multigraph::new(self.n, edges)
    }

    /// Copy with the listed edge ids removed.
    pub fn without_edges(&self, drop: &BTreeSet<EdgeId>) -> Multigraph {
        let edges = self.edges.iter().filter(|e| !drop.contains(&e.id)).cloned().collect();
        Multigraph::new(self.n, edges).expect("deleting edges preserves validity")
    }

    /// Shortest (fewest edges) path between `from` and `to` avoiding the
    /// given vertices and edges; `from == to` yields the trivial path.
    pub fn bfs_path(
        &self,
        from: Vertex,
        to: Vertex,
        banned_v: &BTreeSet<Vertex>,
        banned_e: &BTreeSet<EdgeId>,
    ) -> Option<PathWitness> {
        if banned_v.contains(&from) || banned_v.contains(&to) {
            return None;
        }
        if from == to {
            return Some(PathWitness::trivial(from));
        }
        let mut prev: Vec<Option<(Vertex, usize)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &i in &self.adj[v] {
                let e = &self.edges[i];
                if banned_e.contains(&e.id) {
                    continue;
                }
                let u = e.other(v);
                if seen[u] || banned_v.contains(&u) {
                    continue;
                }
                seen[u] = true;
                prev[u] = Some((v, i));
                if u == to {
                    let mut vs = vec![to];
                    let mut es = Vec::new();
                    let mut cur = to;
                    while let Some((p, ei)) = prev[cur] {
                        es.push(self.edges[ei].id);
                        vs.push(p);
                        cur = p;
                    }
                    vs.reverse();
                    es.reverse();
                    return Some(PathWitness::new(self, vs, es).expect("bfs produces a valid path"));
                }
                queue.push_back(u);
            }
        }
        None
    }
}

/// One parallel family: the kept representative and all member edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelFamily {
    pub representative: EdgeId,
    pub members: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplifyMap {
    pub families: Vec<ParallelFamily>,
}

impl SimplifyMap {
    pub fn family_of(&self, id: EdgeId) -> Option<&ParallelFamily> {
        self.families.iter().find(|f| f.members.contains(&id))
    }
}

/// A path given by its vertex sequence and edge ids; vertices are distinct
/// and `total_weight` is the sum of the listed edge weights. A single
/// vertex is a valid path of weight 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub total_weight: u64,
}

impl PathWitness {
    pub fn trivial(v: Vertex) -> Self {
        PathWitness { vertices: vec![v], edges: Vec::new(), total_weight: 0 }
    }

    pub fn new(g: &Multigraph, vertices: Vec<Vertex>, edges: Vec<EdgeId>) -> Result<Self> {
        let total_weight = edges.iter().map(|&id| g.edge(id).map(|e| e.w)).sum::<Result<u64>>()?;
        let pw = PathWitness { vertices, edges, total_weight };
        pw.verify(g)?;
        Ok(pw)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> Vertex {
        *self.vertices.first().expect("path has at least one vertex")
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("path has at least one vertex")
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> PathWitness {
        let mut p = self.clone();
        p.vertices.reverse();
        p.edges.reverse();
        p
    }

    /// Concatenation; `other` must start where `self` ends and the interiors
    /// must stay disjoint for the result to verify.
    pub fn join(&self, g: &Multigraph, other: &PathWitness) -> Result<PathWitness> {
        if self.last() != other.first() {
            return Err(Error::InvalidWitness("joined paths do not share an endpoint".into()));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        PathWitness::new(g, vertices, edges)
    }

    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidWitness("empty vertex sequence".into()));
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err(Error::InvalidWitness("edge/vertex count mismatch".into()));
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != self.vertices.len() {
            return Err(Error::InvalidWitness("repeated vertex on path".into()));
        }
        let mut weight = 0;
        for (k, &id) in self.edges.iter().enumerate() {
            let e = g.edge(id)?;
            let (a, b) = (self.vertices[k], self.vertices[k + 1]);
            if !(e.touches(a) && e.touches(b)) {
                return Err(Error::InvalidWitness(format!(
                    "edge {} does not join consecutive path vertices {} and {}",
                    id, a, b
                )));
            }
            weight += e.w;
        }
        if weight != self.total_weight {
            return Err(Error::InvalidWitness("declared weight differs from edge sum".into()));
        }
        Ok(())
    }
}

/// A cycle as a closed vertex sequence: `vertices[k]` and `vertices[k+1]`
/// are joined by `edges[k]`, and the last edge returns to `vertices[0]`.
/// The stored order is the cycle's forward direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub total_weight: u64,
}

impl CycleWitness {
    pub fn new(g: &Multigraph, vertices: Vec<Vertex>, edges: Vec<EdgeId>) -> Result<Self> {
        let total_weight = edges.iter().map(|&id| g.edge(id).map(|e| e.w)).sum::<Result<u64>>()?;
        let c = CycleWitness { vertices, edges, total_weight };
        c.verify(g)?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// The forward path from `u` to `v` along the stored direction.
    pub fn forward_path(&self, g: &Multigraph, u: Vertex, v: Vertex) -> Result<PathWitness> {
        let iu = self.position(u).ok_or_else(|| Error::InvalidWitness("vertex not on cycle".into()))?;
        let iv = self.position(v).ok_or_else(|| Error::InvalidWitness("vertex not on cycle".into()))?;
        if iu == iv {
            return Ok(PathWitness::trivial(u));
        }
        let k = self.vertices.len();
        let mut vs = vec![u];
        let mut es = Vec::new();
        let mut i = iu;
        while i != iv {
            es.push(self.edges[i]);
            i = (i + 1) % k;
            vs.push(self.vertices[i]);
        }
        PathWitness::new(g, vs, es)
    }

    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        let k = self.vertices.len();
        if k < 2 {
            return Err(Error::InvalidWitness("cycle needs at least two vertices".into()));
        }
        if self.edges.len() != k {
            return Err(Error::InvalidWitness("cycle edge count must equal vertex count".into()));
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != k {
            return Err(Error::InvalidWitness("repeated vertex on cycle".into()));
        }
        let edge_set: BTreeSet<_> = self.edges.iter().collect();
        if edge_set.len() != k {
            return Err(Error::InvalidWitness("repeated edge on cycle".into()));
        }
        let mut weight = 0;
        for (i, &id) in self.edges.iter().enumerate() {
            let e = g.edge(id)?;
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            if !(e.touches(a) && e.touches(b)) {
                return Err(Error::InvalidWitness(format!(
                    "cycle edge {} does not join {} and {}",
                    id, a, b
                )));
            }
            weight += e.w;
        }
        if weight != self.total_weight {
            return Err(Error::InvalidWitness("declared cycle weight differs from edge sum".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_loops_and_zero_weights() {
        assert!(Multigraph::from_list(2, &[(0, 0)]).is_err());
        assert!(Multigraph::from_weighted(2, &[(0, 1, 0)]).is_err());
    }

    #[test]
    fn simplify_keeps_max_weight_representative() {
        let g = Multigraph::from_weighted(2, &[(0, 1, 1), (0, 1, 5), (0, 1, 2)]).unwrap();
        let (si, map) = g.simplify();
        assert_eq!(si.m(), 1);
        assert_eq!(si.edges()[0].w, 5);
        assert_eq!(si.edges()[0].id, 1);
        assert_eq!(map.families[0].members, vec![0, 1, 2]);
    }

    #[test]
    fn simplify_of_simple_graph_is_identity() {
        let g = fixtures::k4();
        let (si, map) = g.simplify();
        assert_eq!(si.m(), g.m());
        assert!(map.families.iter().all(|f| f.members.len() == 1));
    }

    #[test]
    fn theta_graph_is_simple_for_t_at_least_two() {
        let g = fixtures::theta(2, 2, 2);
        assert!(g.is_simple());
        let (si, _) = g.simplify();
        assert_eq!(si.m(), g.m());
    }

    #[test]
    fn double_edge_is_2connected() {
        let g = Multigraph::from_list(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(g.is_2connected());
        let single = Multigraph::from_list(2, &[(0, 1)]).unwrap();
        assert!(!single.is_2connected());
    }

    #[test]
    fn k4_with_doubled_spoke_is_3connected() {
        let mut list: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        list.push((0, 1));
        let g = Multigraph::from_list(4, &list).unwrap();
        assert!(g.is_3connected());
    }

    #[test]
    fn path_is_not_2connected() {
        let g = fixtures::path(4);
        assert!(!g.is_2connected());
    }

    #[test]
    fn cycle_connectivity() {
        let c5 = fixtures::cycle(5);
        assert!(c5.is_2connected());
        assert!(!c5.is_3connected());
        assert!(fixtures::k4().is_3connected());
    }

    #[test]
    fn subgraph_preserves_edge_ids() {
        let g = fixtures::k4();
        let (h, map) = g.induced(&[1, 2, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        for e in h.edges() {
            let orig = g.edge(e.id).unwrap();
            assert_eq!((map[e.u], map[e.v]), (orig.u, orig.v));
        }
    }

    #[test]
    fn path_witness_rejects_bad_data() {
        let g = fixtures::cycle(4);
        assert!(PathWitness::new(&g, vec![0, 1, 2], vec![0, 1]).is_ok());
        assert!(PathWitness::new(&g, vec![0, 2], vec![0]).is_err());
        assert!(PathWitness::new(&g, vec![0, 1, 0], vec![0, 0]).is_err());
    }

    #[test]
    fn cycle_witness_forward_paths() {
        let g = fixtures::cycle(5);
        let c = CycleWitness::new(&g, vec![0, 1, 2, 3, 4], vec![0, 1, 2, 3, 4]).unwrap();
        let p = c.forward_path(&g, 3, 1).unwrap();
        assert_eq!(p.vertices, vec![3, 4, 0, 1]);
        assert_eq!(p.total_weight, 3);
    }

    #[test]
    fn bfs_respects_bans() {
        let g = fixtures::cycle(6);
        let banned = BTreeSet::from([1]);
        let p = g.bfs_path(0, 2, &banned, &BTreeSet::new()).unwrap();
        assert_eq!(p.vertices, vec![0, 5, 4, 3, 2]);
    }
}
