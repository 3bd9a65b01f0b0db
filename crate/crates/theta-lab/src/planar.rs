//! Combinatorial planar embeddings: rotation systems, face tracing, and a
//! backtracking face-insertion embedder that can reserve a prescribed
//! facial cycle.
//!
//! A rotation system stores, per vertex, the cyclic order of incident edge
//! ids. Faces are the orbits of the tracing rule "arrive at v along e, leave
//! along the successor of e in the rotation at v". An embedding is accepted
//! only if the traced faces satisfy the sphere formula n - m + f = 2.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::bridge::bridges_of;
use crate::budget::Budget;
use crate::graph::{CycleWitness, Edge, EdgeId, Multigraph, Vertex};
use crate::unavoidable::{self, Pattern, PatternWitness};
use crate::{Error, Result};

/// One face as its directed boundary walk: (edge id, tail vertex) pairs.
pub type FaceWalk = Vec<(EdgeId, Vertex)>;

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    pub graph: Multigraph,
    /// rotation[v] lists the incident edge ids of v in cyclic order.
    pub rotation: Vec<Vec<EdgeId>>,
    pub outer_face: usize,
    faces: Vec<FaceWalk>,
}

#[derive(Serialize, Deserialize)]
struct PlaneGraphRepr {
    graph: Multigraph,
    rotation: Vec<Vec<EdgeId>>,
    outer_face: usize,
}

impl Serialize for PlaneGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PlaneGraphRepr {
            graph: self.graph.clone(),
            rotation: self.rotation.clone(),
            outer_face: self.outer_face,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlaneGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PlaneGraphRepr::deserialize(d)?;
        PlaneGraph::new(repr.graph, repr.rotation, repr.outer_face).map_err(serde::de::Error::custom)
    }
}

impl PlaneGraph {
    /// Validates the rotation system and traces faces; rejects anything
    /// that does not satisfy the sphere formula.
    pub fn new(graph: Multigraph, rotation: Vec<Vec<EdgeId>>, outer_face: usize) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::InvalidWitness("rotation must cover every vertex".into()));
        }
        for v in 0..graph.n() {
            let mut expect: Vec<EdgeId> = graph.incident(v).map(|e| e.id).collect();
            expect.sort_unstable();
            let mut got = rotation[v].clone();
            got.sort_unstable();
            if expect != got {
                return Err(Error::InvalidWitness(format!(
                    "rotation at vertex {v} does not list its incident edges exactly once"
                )));
            }
        }
        let faces = trace_faces(&graph, &rotation)?;
        let f = faces.len();
        if graph.n() + f != graph.m() + 2 {
            return Err(Error::InvalidWitness(format!(
                "rotation system is not spherical: n={} m={} f={}",
                graph.n(),
                graph.m(),
                f
            )));
        }
        if outer_face >= f {
            return Err(Error::InvalidWitness("outer face index out of range".into()));
        }
        Ok(PlaneGraph { graph, rotation, outer_face, faces })
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Vertices on a face, deduplicated and sorted.
    pub fn face_vertices(&self, idx: usize) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.faces[idx].iter().map(|&(_, tail)| tail).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn face_edge_ids(&self, idx: usize) -> BTreeSet<EdgeId> {
        self.faces[idx].iter().map(|&(id, _)| id).collect()
    }

    /// True if the face boundary is a simple cycle (every vertex once).
    pub fn face_is_cycle(&self, idx: usize) -> bool {
        let walk = &self.faces[idx];
        let vs: BTreeSet<Vertex> = walk.iter().map(|&(_, t)| t).collect();
        vs.len() == walk.len() && walk.len() >= 2
    }

    /// The face boundary as a cycle witness, if it is a simple cycle.
    pub fn face_cycle(&self, idx: usize) -> Result<CycleWitness> {
        if !self.face_is_cycle(idx) {
            return Err(Error::InvalidWitness(format!("face {idx} is not a simple cycle")));
        }
        let walk = &self.faces[idx];
        let vertices: Vec<Vertex> = walk.iter().map(|&(_, t)| t).collect();
        let edges: Vec<EdgeId> = walk.iter().map(|&(id, _)| id).collect();
        CycleWitness::new(&self.graph, vertices, edges)
    }

    /// The outer cycle; errors when the outer boundary is not simple.
    pub fn outer_cycle(&self) -> Result<CycleWitness> {
        self.face_cycle(self.outer_face)
    }

    /// Index of the face whose boundary realizes exactly this cycle.
    pub fn find_face_of_cycle(&self, c: &CycleWitness) -> Option<usize> {
        let want: BTreeSet<EdgeId> = c.edges.iter().copied().collect();
        (0..self.faces.len())
            .find(|&i| self.faces[i].len() == c.len() && self.face_edge_ids(i) == want)
    }

    /// Re-roots the embedding so the given face index is outer.
    pub fn with_outer_face(mut self, idx: usize) -> Result<Self> {
        if idx >= self.faces.len() {
            return Err(Error::InvalidWitness("outer face index out of range".into()));
        }
        self.outer_face = idx;
        Ok(self)
    }

    /// Inner faces that are triangles, as cycle witnesses.
    pub fn inner_triangles(&self) -> Vec<(usize, CycleWitness)> {
        (0..self.faces.len())
            .filter(|&i| i != self.outer_face && self.faces[i].len() == 3 && self.face_is_cycle(i))
            .map(|i| (i, self.face_cycle(i).expect("triangle face is a cycle")))
            .collect()
    }
}

/// Traces all faces of a rotation system. Fails if the rotation data is
/// inconsistent (an edge id missing at an endpoint).
pub fn trace_faces(g: &Multigraph, rotation: &[Vec<EdgeId>]) -> Result<Vec<FaceWalk>> {
    let mut pos: Vec<HashMap<EdgeId, usize>> = vec![HashMap::new(); g.n()];
    for v in 0..g.n() {
        for (i, &id) in rotation[v].iter().enumerate() {
            pos[v].insert(id, i);
        }
    }
    let mut faces = Vec::new();
    let mut seen: BTreeSet<(EdgeId, Vertex)> = BTreeSet::new();
    let mut half_edges: Vec<(EdgeId, Vertex)> = Vec::new();
    for e in g.edges() {
        half_edges.push((e.id, e.u));
        half_edges.push((e.id, e.v));
    }
    for &start in &half_edges {
        if seen.contains(&start) {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            if !seen.insert(cur) {
                return Err(Error::InvalidWitness("face tracing revisited a half-edge".into()));
            }
            walk.push(cur);
            let (id, tail) = cur;
            let e = g.edge(id)?;
            let head = e.other(tail);
            let p = *pos[head]
                .get(&id)
                .ok_or_else(|| Error::InvalidWitness("edge missing from rotation".into()))?;
            let next_id = rotation[head][(p + 1) % rotation[head].len()];
            cur = (next_id, head);
            if cur == start {
                break;
            }
        }
        faces.push(walk);
    }
    if faces.is_empty() {
        // Edgeless graph: the single unbounded face.
        faces.push(Vec::new());
    }
    Ok(faces)
}

/// Outcome of a planarity test with witnesses on both sides.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum PlanarityOutcome {
    Planar(PlaneGraph),
    /// A K5 or K3,3 subdivision.
    Obstruction(PatternWitness),
}

/// Planarity with an embedding or a Kuratowski subdivision witness.
/// Requires a connected graph (an accepted plane graph must satisfy the
/// sphere formula, which forces connectivity).
pub fn planar_embed(g: &Multigraph, budget: &mut Budget) -> Result<PlanarityOutcome> {
    if g.n() == 0 {
        return Err(Error::Precondition("cannot embed the empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("embedding needs a connected graph".into()));
    }
    match embed_connected(g, None, budget)? {
        Some(rotation) => {
            let pg = PlaneGraph::new(g.clone(), rotation, 0)?;
            Ok(PlanarityOutcome::Planar(pg))
        }
        None => {
            let (skeleton, _) = g.simplify();
            for pat in [Pattern::K5, Pattern::K33] {
                if let Some(w) = unavoidable::find_pattern(&skeleton, pat, budget)? {
                    return Ok(PlanarityOutcome::Obstruction(w));
                }
            }
            Err(Error::InvalidWitness(
                "graph is nonplanar but carries no Kuratowski subdivision".into(),
            ))
        }
    }
}

/// Convenience boolean planarity check; accepts disconnected graphs.
pub fn is_planar(g: &Multigraph, budget: &mut Budget) -> Result<bool> {
    if g.n() == 0 {
        return Ok(true);
    }
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        if embed_connected(&sub, None, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Embedding of `g` in which the cycle `c` bounds the outer face, or
/// `None` when no such embedding exists.
pub fn embed_with_facial_cycle(
    g: &Multigraph,
    c: &CycleWitness,
    budget: &mut Budget,
) -> Result<Option<PlaneGraph>> {
    c.verify(g)?;
    if !g.is_connected() {
        return Err(Error::Precondition("embedding needs a connected graph".into()));
    }
    match embed_connected(g, Some(c), budget)? {
        None => Ok(None),
        Some(rotation) => {
            let pg = PlaneGraph::new(g.clone(), rotation, 0)?;
            let idx = pg
                .find_face_of_cycle(c)
                .expect("constrained embedding must realize the cycle as a face");
            Ok(Some(pg.with_outer_face(idx)?))
        }
    }
}

/// Core: embeds a connected multigraph, optionally keeping a prescribed
/// cycle as a face. Returns the rotation system or `None` when impossible.
fn embed_connected(
    g: &Multigraph,
    facial: Option<&CycleWitness>,
    budget: &mut Budget,
) -> Result<Option<Vec<Vec<EdgeId>>>> {
    // Skeleton: one representative per parallel family; representatives are
    // forced to include the prescribed cycle's edges.
    let forced: BTreeSet<EdgeId> =
        facial.map(|c| c.edges.iter().copied().collect()).unwrap_or_default();
    let mut family_of: BTreeMap<(Vertex, Vertex), Vec<&Edge>> = BTreeMap::new();
    for e in g.edges() {
        family_of.entry(e.ends()).or_default().push(e);
    }
    let mut skeleton_edges = Vec::new();
    let mut extras: Vec<(EdgeId, Vec<EdgeId>)> = Vec::new(); // (representative, others)
    for fam in family_of.values() {
        let rep = fam
            .iter()
            .find(|e| forced.contains(&e.id))
            .copied()
            .unwrap_or_else(|| fam.iter().min_by_key(|e| e.id).copied().unwrap());
        skeleton_edges.push(rep.clone());
        let mut others: Vec<EdgeId> = fam.iter().map(|e| e.id).filter(|&id| id != rep.id).collect();
        // A second prescribed edge in the same family (a 2-cycle) must sit
        // right next to the representative so their bigon is a face.
        others.sort_unstable();
        others.sort_by_key(|id| !forced.contains(id));
        if !others.is_empty() {
            extras.push((rep.id, others));
        }
    }
    let skeleton = Multigraph::new(g.n(), skeleton_edges)?;
    let facial_in_skeleton: Option<CycleWitness> = match facial {
        Some(c) if c.len() > 2 => Some(c.clone()),
        _ => None, // a parallel pair becomes a bigon during reinsertion
    };

    // Blocks of the skeleton; a prescribed cycle lives inside one block.
    let blocks = biconnected_blocks(&skeleton);
    let cyc_edges: BTreeSet<EdgeId> = facial_in_skeleton
        .as_ref()
        .map(|c| c.edges.iter().copied().collect())
        .unwrap_or_default();
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    if !cyc_edges.is_empty() {
        order.sort_by_key(|&i| !blocks[i].iter().any(|id| cyc_edges.contains(id)));
    }

    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
    // For every vertex of the prescribed cycle: the edge after which block
    // and parallel insertions keep the reserved corner intact (the edge the
    // reserved walk leaves along).
    let mut safe_anchor: HashMap<Vertex, EdgeId> = HashMap::new();
    if let Some(c) = &facial_in_skeleton {
        let k = c.vertices.len();
        for i in 0..k {
            safe_anchor.insert(c.vertices[i], c.edges[(i + k - 1) % k]);
        }
    }

    for &bi in &order {
        let block = &blocks[bi];
        let verts: BTreeSet<Vertex> = block
            .iter()
            .flat_map(|&id| {
                let e = skeleton.edge(id).expect("block edge");
                [e.u, e.v]
            })
            .collect();
        let vlist: Vec<Vertex> = verts.iter().copied().collect();
        let keep: BTreeSet<EdgeId> = block.iter().copied().collect();
        let (sub, vmap) = skeleton.subgraph(&vlist, |e| keep.contains(&e.id));
        let local_cycle = facial_in_skeleton.as_ref().and_then(|c| {
            if block.iter().any(|id| cyc_edges.contains(id)) {
                let back: HashMap<Vertex, Vertex> =
                    vmap.iter().enumerate().map(|(new, &old)| (old, new)).collect();
                let vs: Vec<Vertex> = c.vertices.iter().map(|v| back[v]).collect();
                Some(CycleWitness::new(&sub, vs, c.edges.clone()).expect("cycle maps into block"))
            } else {
                None
            }
        });
        let local_rot = match embed_block(&sub, local_cycle.as_ref(), budget)? {
            Some(r) => r,
            None => return Ok(None),
        };
        for (local_v, rot) in local_rot.into_iter().enumerate() {
            let v = vmap[local_v];
            let mapped: Vec<EdgeId> = rot;
            if rotation[v].is_empty() {
                rotation[v] = mapped;
            } else if let Some(&anchor) = safe_anchor.get(&v) {
                let p = rotation[v].iter().position(|&x| x == anchor).expect("anchor present");
                for (off, id) in mapped.into_iter().enumerate() {
                    rotation[v].insert(p + 1 + off, id);
                }
            } else {
                rotation[v].extend(mapped);
            }
        }
    }

    // Reinsert parallel edges as bigons next to their representative.
    for (rep, others) in extras {
        let e = g.edge(rep)?;
        let (mut u, mut v) = (e.u, e.v);
        // When the representative lies on the reserved cycle, the bigon
        // must open away from the reserved face: after the anchor at the
        // vertex the reserved walk leaves rep from.
        if let Some(c) = facial {
            if c.len() > 2 {
                if let Some(i) = c.edges.iter().position(|&id| id == rep) {
                    let tail = c.vertices[(i + 1) % c.vertices.len()];
                    if u != tail {
                        std::mem::swap(&mut u, &mut v);
                    }
                }
            }
        }
        let mut anchor = rep;
        for id in others {
            let pu = rotation[u].iter().position(|&x| x == anchor).expect("anchor at u");
            rotation[u].insert(pu + 1, id);
            let pv = rotation[v].iter().position(|&x| x == anchor).expect("anchor at v");
            rotation[v].insert(pv, id);
            anchor = id;
        }
    }

    // Self-check: spherical, and the prescribed cycle is a face.
    let faces = trace_faces(g, &rotation)?;
    if g.n() + faces.len() != g.m() + 2 {
        return Err(Error::InvalidWitness("internal embedding error: not spherical".into()));
    }
    if let Some(c) = facial {
        let want: BTreeSet<EdgeId> = c.edges.iter().copied().collect();
        let ok = faces.iter().any(|f| {
            f.len() == c.len() && f.iter().map(|&(id, _)| id).collect::<BTreeSet<_>>() == want
        });
        if !ok {
            return Err(Error::InvalidWitness(
                "internal embedding error: prescribed cycle is not a face".into(),
            ));
        }
    }
    Ok(Some(rotation))
}

/// Biconnected blocks of a graph as edge-id sets. Lowpoint search with an
/// edge stack.
pub fn biconnected_blocks(g: &Multigraph) -> Vec<Vec<EdgeId>> {
    struct State<'a> {
        g: &'a Multigraph,
        num: Vec<usize>,
        low: Vec<usize>,
        counter: usize,
        stack: Vec<EdgeId>,
        blocks: Vec<Vec<EdgeId>>,
    }
    fn dfs(s: &mut State, v: Vertex, parent_edge: Option<EdgeId>) {
        s.counter += 1;
        s.num[v] = s.counter;
        s.low[v] = s.counter;
        let edges: Vec<(EdgeId, Vertex)> = s.g.incident(v).map(|e| (e.id, e.other(v))).collect();
        for (id, u) in edges {
            if Some(id) == parent_edge {
                continue;
            }
            if s.num[u] == 0 {
                s.stack.push(id);
                dfs(s, u, Some(id));
                s.low[v] = s.low[v].min(s.low[u]);
                if s.low[u] >= s.num[v] {
                    let mut block = Vec::new();
                    while let Some(top) = s.stack.pop() {
                        block.push(top);
                        if top == id {
                            break;
                        }
                    }
                    block.sort_unstable();
                    s.blocks.push(block);
                }
            } else if s.num[u] < s.num[v] {
                s.stack.push(id);
                s.low[v] = s.low[v].min(s.num[u]);
            }
        }
    }
    let mut st = State {
        g,
        num: vec![0; g.n()],
        low: vec![0; g.n()],
        counter: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.n() {
        if st.num[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.blocks.sort();
    st.blocks
}

/// Embeds one biconnected simple block, optionally reserving a prescribed
/// cycle as a face. Faces are grown by inserting one bridge path at a
/// time; the search backtracks over the admissible faces of the chosen
/// bridge, so failure proves no extension exists.
fn embed_block(
    g: &Multigraph,
    facial: Option<&CycleWitness>,
    budget: &mut Budget,
) -> Result<Option<Vec<Vec<EdgeId>>>> {
    if g.m() == 0 {
        return Ok(Some(vec![Vec::new(); g.n()]));
    }
    if g.m() == 1 {
        let e = &g.edges()[0];
        let mut rot = vec![Vec::new(); g.n()];
        rot[e.u].push(e.id);
        rot[e.v].push(e.id);
        return Ok(Some(rot));
    }
    let start = match facial {
        Some(c) => c.clone(),
        None => first_cycle(g).ok_or_else(|| {
            Error::InvalidGraph("biconnected block with two or more edges must contain a cycle".into())
        })?,
    };
    // Faces as directed vertex cycles; face 0 is the reversed copy and is
    // reserved when a facial cycle was prescribed.
    let forward: Vec<Vertex> = start.vertices.clone();
    let mut backward = forward.clone();
    backward.reverse();
    let faces = vec![backward, forward];
    let reserved = facial.map(|_| 0usize);
    let mut in_v = vec![false; g.n()];
    for &v in &start.vertices {
        in_v[v] = true;
    }
    let mut in_e: BTreeSet<EdgeId> = start.edges.iter().copied().collect();
    let got = insert_bridges(g, faces, reserved, &mut in_v, &mut in_e, budget)?;
    match got {
        None => Ok(None),
        Some(faces) => Ok(Some(rotation_from_faces(g, &faces)?)),
    }
}

/// Any cycle of the graph, found by depth-first search.
pub fn first_cycle(g: &Multigraph) -> Option<CycleWitness> {
    // Parallel pair first.
    let mut seen: BTreeMap<(Vertex, Vertex), EdgeId> = BTreeMap::new();
    for e in g.edges() {
        if let Some(&other) = seen.get(&e.ends()) {
            return Some(
                CycleWitness::new(g, vec![e.u, e.v], vec![other, e.id]).expect("bigon is a cycle"),
            );
        }
        seen.insert(e.ends(), e.id);
    }
    let mut parent: Vec<Option<(Vertex, EdgeId)>> = vec![None; g.n()];
    let mut state = vec![0u8; g.n()];
    for root in 0..g.n() {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![root];
        state[root] = 1;
        while let Some(v) = stack.last().copied() {
            let mut advanced = false;
            for e in g.incident(v) {
                let u = e.other(v);
                if parent[v].map(|(_, pe)| pe) == Some(e.id) {
                    continue;
                }
                if state[u] == 0 {
                    parent[u] = Some((v, e.id));
                    state[u] = 1;
                    stack.push(u);
                    advanced = true;
                    break;
                } else if state[u] == 1 {
                    // Back edge: walk the tree path from v up to u.
                    let mut chain = vec![(v, e.id)];
                    let mut cur = v;
                    while cur != u {
                        let (p, pe) = parent[cur].expect("tree path to ancestor");
                        chain.push((p, pe));
                        cur = p;
                    }
                    // chain = (v, uv-back-edge), (p1, e(v,p1)), ..., (u, ..)
                    let mut cyc_vs = vec![u];
                    let mut cyc_es = Vec::new();
                    for i in (0..chain.len() - 1).rev() {
                        cyc_vs.push(chain[i].0);
                        cyc_es.push(chain[i + 1].1);
                    }
                    cyc_es.push(e.id);
                    return Some(CycleWitness::new(g, cyc_vs, cyc_es).expect("dfs cycle is valid"));
                }
            }
            if !advanced {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

fn insert_bridges(
    g: &Multigraph,
    faces: Vec<Vec<Vertex>>,
    reserved: Option<usize>,
    in_v: &mut Vec<bool>,
    in_e: &mut BTreeSet<EdgeId>,
    budget: &mut Budget,
) -> Result<Option<Vec<Vec<Vertex>>>> {
    budget.tick()?;
    if in_e.len() == g.m() {
        return Ok(Some(faces));
    }
    let host_v: BTreeSet<Vertex> = (0..g.n()).filter(|&v| in_v[v]).collect();
    let dec = bridges_of(g, &host_v, in_e)?;
    // Admissible faces per bridge; embed the most constrained bridge first.
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (bi, b) in dec.bridges.iter().enumerate() {
        let feet: BTreeSet<Vertex> = b.feet.iter().copied().collect();
        let adm: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|&(fi, f)| Some(fi) != reserved && feet.iter().all(|x| f.contains(x)))
            .map(|(fi, _)| fi)
            .collect();
        if adm.is_empty() {
            return Ok(None);
        }
        let better = match &best {
            None => true,
            Some((_, cur)) => adm.len() < cur.len(),
        };
        if better {
            let single = adm.len() == 1;
            best = Some((bi, adm));
            if single {
                break;
            }
        }
    }
    let (bi, admissible) = best.expect("bridges exist while edges remain");
    let bridge = &dec.bridges[bi];
    let path = bridge_path(g, bridge, &host_v)?;
    for face_idx in admissible {
        let mut new_faces = faces.clone();
        split_face(&mut new_faces, face_idx, &path.vertices);
        for &x in path.interior() {
            in_v[x] = true;
        }
        for &id in &path.edges {
            in_e.insert(id);
        }
        if let Some(done) = insert_bridges(g, new_faces, reserved, in_v, in_e, budget)? {
            return Ok(Some(done));
        }
        for &x in path.interior() {
            in_v[x] = false;
        }
        for &id in &path.edges {
            in_e.remove(&id);
        }
    }
    Ok(None)
}

/// A host path through the bridge between its two smallest feet.
fn bridge_path(
    g: &Multigraph,
    bridge: &crate::bridge::Bridge,
    host_v: &BTreeSet<Vertex>,
) -> Result<crate::graph::PathWitness> {
    if bridge.feet.len() < 2 {
        return Err(Error::Precondition(
            "bridge with fewer than two feet: block is not 2-connected".into(),
        ));
    }
    let (f1, f2) = (bridge.feet[0], bridge.feet[1]);
    if bridge.trivial {
        let id = bridge.edges[0];
        return crate::graph::PathWitness::new(g, vec![f1, f2], vec![id]);
    }
    let allowed: BTreeSet<EdgeId> = bridge.edges.iter().copied().collect();
    let banned: BTreeSet<Vertex> =
        host_v.iter().copied().filter(|v| *v != f1 && *v != f2).collect();
    let banned_e: BTreeSet<EdgeId> =
        g.edges().iter().map(|e| e.id).filter(|id| !allowed.contains(id)).collect();
    g.bfs_path(f1, f2, &banned, &banned_e)
        .ok_or_else(|| Error::InvalidWitness("bridge does not connect its feet".into()))
}

/// Splits face `idx` along a path between two of its boundary vertices.
fn split_face(faces: &mut Vec<Vec<Vertex>>, idx: usize, path: &[Vertex]) {
    let face = faces[idx].clone();
    let x = path[0];
    let y = *path.last().expect("path has an end");
    let ix = face.iter().position(|&v| v == x).expect("path end on face");
    let iy = face.iter().position(|&v| v == y).expect("path end on face");
    let k = face.len();
    let arc = |from: usize, to: usize| -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % k;
        }
        out
    };
    let arc_xy = arc(ix, iy);
    let arc_yx = arc(iy, ix);
    // Face A: x..y along the old boundary, then back along the path.
    let mut face_a = arc_xy;
    let interior_rev: Vec<Vertex> = path[1..path.len() - 1].iter().rev().copied().collect();
    face_a.extend(interior_rev);
    // Face B: x..y along the path, then y..x along the old boundary.
    let mut face_b: Vec<Vertex> = path.to_vec();
    face_b.extend(arc_yx.iter().skip(1).take(arc_yx.len().saturating_sub(2)));
    faces[idx] = face_a;
    faces.push(face_b);
}

/// Rebuilds the rotation system from consistently oriented face cycles of
/// a simple graph.
fn rotation_from_faces(g: &Multigraph, faces: &[Vec<Vertex>]) -> Result<Vec<Vec<EdgeId>>> {
    let edge_between = |a: Vertex, b: Vertex| -> Result<EdgeId> {
        g.incident(a)
            .find(|e| e.other(a) == b)
            .map(|e| e.id)
            .ok_or_else(|| Error::InvalidWitness(format!("no edge between {a} and {b}")))
    };
    // succ[v]: arriving edge -> departing edge.
    let mut succ: Vec<HashMap<EdgeId, EdgeId>> = vec![HashMap::new(); g.n()];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let a = face[i];
            let b = face[(i + 1) % k];
            let c = face[(i + 2) % k];
            let e_in = edge_between(a, b)?;
            let e_out = edge_between(b, c)?;
            if succ[b].insert(e_in, e_out).is_some() {
                return Err(Error::InvalidWitness("face corner defined twice".into()));
            }
        }
    }
    let mut rotation = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        let deg = g.degree(v);
        if deg == 0 {
            continue;
        }
        let start = g.incident(v).map(|e| e.id).min().expect("vertex has an edge");
        let mut cur = start;
        for _ in 0..deg {
            rotation[v].push(cur);
            cur = *succ[v]
                .get(&cur)
                .ok_or_else(|| Error::InvalidWitness("missing rotation successor".into()))?;
        }
        if cur != start || rotation[v].len() != deg {
            return Err(Error::InvalidWitness("rotation at a vertex is not a single cycle".into()));
        }
    }
    Ok(rotation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn embed_ok(g: &Multigraph) -> PlaneGraph {
        match planar_embed(g, &mut Budget::default()).unwrap() {
            PlanarityOutcome::Planar(pg) => pg,
            PlanarityOutcome::Obstruction(_) => panic!("expected planar"),
        }
    }

    #[test]
    fn k4_embeds_with_triangular_faces() {
        let pg = embed_ok(&fixtures::k4());
        assert_eq!(pg.face_count(), 4);
        assert!((0..4).all(|i| pg.faces()[i].len() == 3));
    }

    #[test]
    fn k5_gives_kuratowski_witness() {
        match planar_embed(&fixtures::k5(), &mut Budget::default()).unwrap() {
            PlanarityOutcome::Obstruction(w) => {
                assert!(matches!(w.pattern, Pattern::K5));
                w.verify(&fixtures::k5()).unwrap();
            }
            _ => panic!("K5 is not planar"),
        }
    }

    #[test]
    fn subdivided_k33_gives_k33_witness() {
        let base = fixtures::k33();
        let mut list: Vec<(usize, usize)> =
            base.edges().iter().skip(1).map(|e| (e.u, e.v)).collect();
        let first = &base.edges()[0];
        list.push((first.u, 6));
        list.push((6, first.v));
        let g = Multigraph::from_list(7, &list).unwrap();
        match planar_embed(&g, &mut Budget::default()).unwrap() {
            PlanarityOutcome::Obstruction(w) => {
                assert!(matches!(w.pattern, Pattern::K33));
                w.verify(&g).unwrap();
            }
            _ => panic!("subdivided K33 is not planar"),
        }
    }

    #[test]
    fn assorted_planar_graphs_embed() {
        embed_ok(&fixtures::path(6));
        embed_ok(&fixtures::cycle(8));
        embed_ok(&fixtures::wheel(7));
        embed_ok(&fixtures::cube());
        embed_ok(&fixtures::grid_2xk(5));
        embed_ok(&fixtures::octahedron());
    }

    #[test]
    fn parallel_edges_become_bigons() {
        let g = Multigraph::from_weighted(2, &[(0, 1, 1), (0, 1, 1), (0, 1, 1)]).unwrap();
        let pg = embed_ok(&g);
        assert_eq!(pg.face_count(), 3);
    }

    #[test]
    fn petersen_is_nonplanar() {
        assert!(!is_planar(&fixtures::petersen(), &mut Budget::default()).unwrap());
    }

    #[test]
    fn blocks_of_two_triangles_at_a_cut_vertex() {
        let g =
            Multigraph::from_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 2);
        embed_ok(&g);
    }

    #[test]
    fn facial_cycle_in_k4_triangle_yes_square_no() {
        let g = fixtures::k4();
        // K4 edge ids: 01->0, 02->1, 03->2, 12->3, 13->4, 23->5.
        let tri = CycleWitness::new(&g, vec![0, 1, 2], vec![0, 3, 1]).unwrap();
        let got = embed_with_facial_cycle(&g, &tri, &mut Budget::default()).unwrap();
        let pg = got.expect("triangle is facial in K4");
        assert_eq!(pg.outer_cycle().unwrap().vertices.len(), 3);

        let quad = CycleWitness::new(&g, vec![0, 1, 2, 3], vec![0, 3, 5, 2]).unwrap();
        assert!(embed_with_facial_cycle(&g, &quad, &mut Budget::default()).unwrap().is_none());
    }

    #[test]
    fn cube_four_cycles_are_facial() {
        let g = fixtures::cube();
        let find = |a: usize, b: usize| g.incident(a).find(|e| e.other(a) == b).unwrap().id;
        let c = CycleWitness::new(
            &g,
            vec![0, 1, 3, 2],
            vec![find(0, 1), find(1, 3), find(3, 2), find(2, 0)],
        )
        .unwrap();
        let pg = embed_with_facial_cycle(&g, &c, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(pg.outer_cycle().unwrap().len(), 4);
    }

    #[test]
    fn nonfacial_hamilton_cycle_of_prism() {
        // A 3-connected planar graph has only its geometric faces; a
        // Hamilton cycle of the prism is not one of them.
        let g = fixtures::prism();
        let find = |a: usize, b: usize| g.incident(a).find(|e| e.other(a) == b).unwrap().id;
        let c = CycleWitness::new(
            &g,
            vec![0, 1, 4, 3, 5, 2],
            vec![find(0, 1), find(1, 4), find(4, 3), find(3, 5), find(5, 2), find(2, 0)],
        )
        .unwrap();
        assert!(embed_with_facial_cycle(&g, &c, &mut Budget::default()).unwrap().is_none());
    }

    #[test]
    fn prescribed_bigon_cycle() {
        let g =
            Multigraph::from_weighted(3, &[(0, 1, 1), (0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let c = CycleWitness::new(&g, vec![0, 1], vec![0, 1]).unwrap();
        let pg = embed_with_facial_cycle(&g, &c, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(pg.outer_cycle().unwrap().len(), 2);
    }

    #[test]
    fn wheel_rim_is_facial() {
        let g = fixtures::wheel(6);
        let rim_vs: Vec<usize> = (1..=6).collect();
        let rim_es: Vec<usize> = (6..12).collect();
        let c = CycleWitness::new(&g, rim_vs, rim_es).unwrap();
        let pg = embed_with_facial_cycle(&g, &c, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(pg.outer_cycle().unwrap().len(), 6);
    }

    #[test]
    fn face_walks_cover_every_half_edge_once() {
        let pg = embed_ok(&fixtures::octahedron());
        let total: usize = pg.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * pg.graph.m());
    }

    #[test]
    fn plane_graph_rejects_bad_rotation() {
        let g = fixtures::cycle(4);
        // Swap makes an invalid listing.
        let rotation = vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]];
        assert!(PlaneGraph::new(g.clone(), rotation, 0).is_ok());
        let broken = vec![vec![0, 0], vec![0, 1], vec![1, 2], vec![2, 3]];
        assert!(PlaneGraph::new(g, broken, 0).is_err());
    }
}
