//! Unavoidable large structures: subdivision witnesses, an exact
//! topological-minor search, and the constructive extractors for combs,
//! ladders and wheels.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::fixtures;
use crate::graph::{EdgeId, Multigraph, PathWitness, Vertex};
use crate::{Error, Result};

/// Named guest patterns. `graph()` yields the pattern as a multigraph; a
/// subdivision of that graph inside a host is the corresponding witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pattern {
    Comb(usize),
    Ladder(usize),
    LadderPlus(usize),
    Wheel(usize),
    WheelPlus(usize),
    WheelPrime(usize),
    /// Theta-plus-triangle with a crossing edge: contracts to K5.
    A1,
    /// Theta-plus-triangle: contracts to K5 minus an edge.
    A2,
    K5,
    K33,
}

impl Pattern {
    pub fn graph(&self) -> Multigraph {
        match *self {
            Pattern::Comb(t) => fixtures::comb(t),
            Pattern::Ladder(t) => fixtures::ladder(t),
            Pattern::LadderPlus(t) => fixtures::ladder_plus(t),
            Pattern::Wheel(t) => fixtures::wheel(t),
            Pattern::WheelPlus(k) => fixtures::wheel_plus(k),
            Pattern::WheelPrime(k) => fixtures::wheel_prime(k),
            Pattern::A1 => fixtures::k5(),
            Pattern::A2 => a2_graph(),
            Pattern::K5 => fixtures::k5(),
            Pattern::K33 => fixtures::k33(),
        }
    }
}

/// K5 minus one edge: apexes 0,1 joined through the triangle 2,3,4.
pub fn a2_graph() -> Multigraph {
    let mut list = Vec::new();
    for u in 0..5usize {
        for v in u + 1..5 {
            if (u, v) != (0, 1) {
                list.push((u, v));
            }
        }
    }
    Multigraph::from_list(5, &list).expect("a2 pattern is valid")
}

/// A subdivision of `pattern` inside a host graph: an injective placement
/// of the branch vertices plus one host path per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    /// branch_map[h] is the host vertex playing pattern vertex h.
    pub branch_map: Vec<Vertex>,
    /// paths[k] realizes the k-th pattern edge, oriented u -> v.
    pub paths: Vec<PathWitness>,
}

impl SubdivisionWitness {
    /// Independent structural check against the host and the pattern.
    pub fn verify(&self, host: &Multigraph, pattern: &Multigraph) -> Result<()> {
        if self.branch_map.len() != pattern.n() {
            return Err(Error::InvalidWitness("branch map size mismatch".into()));
        }
        let distinct: BTreeSet<_> = self.branch_map.iter().collect();
        if distinct.len() != pattern.n() {
            return Err(Error::InvalidWitness("branch map not injective".into()));
        }
        if self.paths.len() != pattern.m() {
            return Err(Error::InvalidWitness("one path per pattern edge required".into()));
        }
        let branch_set: BTreeSet<Vertex> = self.branch_map.iter().copied().collect();
        let mut used_interior: BTreeSet<Vertex> = BTreeSet::new();
        let mut used_edges: BTreeSet<EdgeId> = BTreeSet::new();
        for (k, p) in self.paths.iter().enumerate() {
            p.verify(host)?;
            if p.is_empty() {
                return Err(Error::InvalidWitness("pattern edge realized by empty path".into()));
            }
            let pe = &pattern.edges()[k];
            if p.first() != self.branch_map[pe.u] || p.last() != self.branch_map[pe.v] {
                return Err(Error::InvalidWitness(format!(
                    "path {k} does not join the images of its pattern edge"
                )));
            }
            for x in p.interior() {
                if branch_set.contains(x) || !used_interior.insert(*x) {
                    return Err(Error::InvalidWitness(
                        "path interiors must avoid branch vertices and each other".into(),
                    ));
                }
            }
            for id in &p.edges {
                if !used_edges.insert(*id) {
                    return Err(Error::InvalidWitness("edge reused across paths".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub subdivision: SubdivisionWitness,
}

impl PatternWitness {
    pub fn verify(&self, host: &Multigraph) -> Result<()> {
        self.subdivision.verify(host, &self.pattern.graph())
    }
}

/// Exact topological-minor test: finds a subdivision of `pattern` in
/// `host`, or proves there is none within the budget.
pub fn topological_minor(
    host: &Multigraph,
    pattern: &Multigraph,
    budget: &mut Budget,
) -> Result<Option<SubdivisionWitness>> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    // Assign high-degree pattern vertices first.
    let mut order: Vec<Vertex> = (0..pattern.n()).collect();
    order.sort_by(|&a, &b| pattern.degree(b).cmp(&pattern.degree(a)).then(a.cmp(&b)));
    let mut assignment = vec![usize::MAX; pattern.n()];
    let mut used_host = vec![false; host.n()];
    let mut search = Search { host, pattern, order, budget };
    search.assign(0, &mut assignment, &mut used_host)
}

struct Search<'a> {
    host: &'a Multigraph,
    pattern: &'a Multigraph,
    order: Vec<Vertex>,
    budget: &'a mut Budget,
}

impl<'a> Search<'a> {
    fn assign(
        &mut self,
        idx: usize,
        assignment: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
    ) -> Result<Option<SubdivisionWitness>> {
        self.budget.tick()?;
        if idx == self.order.len() {
            let mut paths: Vec<Option<PathWitness>> = vec![None; self.pattern.m()];
            let mut interior = used.clone();
            return self.realize(0, assignment, &mut paths, &mut interior);
        }
        let h = self.order[idx];
        let need = self.pattern.degree(h);
        for cand in 0..self.host.n() {
            if used[cand] || self.host.degree(cand) < need {
                continue;
            }
            assignment[h] = cand;
            used[cand] = true;
            if let Some(w) = self.assign(idx + 1, assignment, used)? {
                return Ok(Some(w));
            }
            used[cand] = false;
            assignment[h] = usize::MAX;
        }
        Ok(None)
    }

    fn realize(
        &mut self,
        k: usize,
        assignment: &[Vertex],
        paths: &mut Vec<Option<PathWitness>>,
        used: &mut Vec<bool>,
    ) -> Result<Option<SubdivisionWitness>> {
        if k == self.pattern.m() {
            let w = SubdivisionWitness {
                branch_map: assignment.to_vec(),
                paths: paths.iter().map(|p| p.clone().expect("all paths realized")).collect(),
            };
            w.verify(self.host, self.pattern).expect("search output must verify");
            return Ok(Some(w));
        }
        let pe = &self.pattern.edges()[k];
        let (from, to) = (assignment[pe.u], assignment[pe.v]);
        // Symmetry breaking for parallel pattern edges: order their
        // realizations by path key.
        let min_key = self
            .pattern
            .edges()
            .iter()
            .take(k)
            .enumerate()
            .filter(|(_, q)| q.ends() == pe.ends())
            .map(|(j, _)| path_key(paths[j].as_ref().expect("earlier edge realized")))
            .max();
        let mut verts = vec![from];
        let mut edges = Vec::new();
        self.path_dfs(k, from, to, assignment, paths, used, &mut verts, &mut edges, &min_key)
    }

    #[allow(clippy::too_many_arguments)]
    fn path_dfs(
        &mut self,
        k: usize,
        head: Vertex,
        target: Vertex,
        assignment: &[Vertex],
        paths: &mut Vec<Option<PathWitness>>,
        used: &mut Vec<bool>,
        verts: &mut Vec<Vertex>,
        edges: &mut Vec<EdgeId>,
        min_key: &Option<(usize, EdgeId)>,
    ) -> Result<Option<SubdivisionWitness>> {
        self.budget.tick()?;
        let mut options: Vec<(Vertex, EdgeId)> = self
            .host
            .incident(head)
            .filter(|e| !edges.contains(&e.id))
            .map(|e| (e.other(head), e.id))
            .collect();
        options.sort_unstable_by_key(|&(v, id)| (v != target, v, id));
        for (next, id) in options {
            if next == target {
                let mut vs = verts.clone();
                vs.push(target);
                let mut es = edges.clone();
                es.push(id);
                let p = PathWitness::new(self.host, vs, es).expect("dfs path is valid");
                if let Some(mk) = min_key {
                    if path_key(&p) <= *mk {
                        continue;
                    }
                }
                let interior: Vec<Vertex> = p.interior().to_vec();
                for &x in &interior {
                    used[x] = true;
                }
                paths[k] = Some(p);
                if let Some(w) = self.realize(k + 1, assignment, paths, used)? {
                    return Ok(Some(w));
                }
                paths[k] = None;
                for &x in &interior {
                    used[x] = false;
                }
            } else if !used[next] {
                used[next] = true;
                verts.push(next);
                edges.push(id);
                if let Some(w) =
                    self.path_dfs(k, next, target, assignment, paths, used, verts, edges, min_key)?
                {
                    return Ok(Some(w));
                }
                edges.pop();
                verts.pop();
                used[next] = false;
            }
        }
        Ok(None)
    }
}

/// Deterministic key ordering internally disjoint paths: least interior
/// vertex, or past-n plus the first edge id for single-edge paths.
fn path_key(p: &PathWitness) -> (usize, EdgeId) {
    match p.interior().iter().min() {
        Some(&v) => (v, 0),
        None => (usize::MAX, p.edges[0]),
    }
}

/// Searches for the named pattern and wraps the result.
pub fn find_pattern(
    host: &Multigraph,
    pattern: Pattern,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    let pg = pattern.graph();
    Ok(topological_minor(host, &pg, budget)?
        .map(|subdivision| PatternWitness { pattern, subdivision }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum InducedPathOutcome {
    Path(PathWitness),
    HighDegree(Vertex),
}

/// In a simple connected graph of order exceeding
/// 1 + d + d(d-1) + ... + d(d-1)^(p-1), either some vertex has degree above
/// `d` or an induced path of length p+1 starts at any chosen vertex. Built
/// from breadth-first layers; a shortest path is induced.
pub fn induced_path_or_degree(
    g: &Multigraph,
    d: usize,
    p: usize,
    v: Vertex,
) -> Result<InducedPathOutcome> {
    if d < 1 || p < 1 {
        return Err(Error::Precondition("need d, p >= 1".into()));
    }
    if !g.is_simple() || !g.is_connected() {
        return Err(Error::Precondition("need a simple connected graph".into()));
    }
    let mut bound: u128 = 1;
    let mut layer: u128 = d as u128;
    for _ in 0..p {
        bound = bound.saturating_add(layer);
        layer = layer.saturating_mul((d.max(2) - 1) as u128);
    }
    if (g.n() as u128) <= bound {
        return Err(Error::Precondition(format!(
            "order {} does not exceed the layer bound {}",
            g.n(),
            bound
        )));
    }
    if let Some(x) = (0..g.n()).find(|&x| g.degree(x) > d) {
        return Ok(InducedPathOutcome::HighDegree(x));
    }
    // BFS layers from v; some vertex sits at distance p+1.
    let mut dist = vec![usize::MAX; g.n()];
    let mut prev = vec![usize::MAX; g.n()];
    let mut prev_edge = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut queue = std::collections::VecDeque::from([v]);
    let mut far: Option<Vertex> = None;
    while let Some(x) = queue.pop_front() {
        if dist[x] == p + 1 {
            far = Some(x);
            break;
        }
        for e in g.incident(x) {
            let y = e.other(x);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                prev[y] = x;
                prev_edge[y] = e.id;
                queue.push_back(y);
            }
        }
    }
    let far = far.ok_or_else(|| {
        Error::Precondition("no vertex at the required distance; bound hypothesis violated".into())
    })?;
    let mut vs = vec![far];
    let mut es = Vec::new();
    let mut cur = far;
    while cur != v {
        es.push(prev_edge[cur]);
        cur = prev[cur];
        vs.push(cur);
    }
    vs.reverse();
    es.reverse();
    Ok(InducedPathOutcome::Path(PathWitness::new(g, vs, es)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CombOutcome {
    Comb(PatternWitness),
    HighDegree(Vertex),
}

/// In a tree with at least d^t leaves, either some vertex has degree above
/// `d` or the tree contains a subdivision of the t-tooth comb. Degree-2
/// vertices are suppressed first, then a long path from a branch vertex is
/// dressed with one tooth per spine vertex.
pub fn comb_or_degree(tree: &Multigraph, d: usize, t: usize) -> Result<CombOutcome> {
    if d < 2 || t < 2 {
        return Err(Error::Precondition("need d, t >= 2".into()));
    }
    if !tree.is_connected() || tree.m() + 1 != tree.n() {
        return Err(Error::Precondition("input must be a tree".into()));
    }
    let leaves = (0..tree.n()).filter(|&v| tree.degree(v) == 1).count();
    let need = (d as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
    if (leaves as u128) < need {
        return Err(Error::Precondition(format!(
            "tree has {leaves} leaves, fewer than d^t = {need}"
        )));
    }
    let sup = Suppressed::build(tree);
    let v = (0..sup.verts.len())
        .find(|&i| sup.deg(i) >= 3)
        .ok_or_else(|| Error::Precondition("suppressed tree has no branch vertex".into()))?;
    let spine = sup.longest_path_from(v);
    if spine.len() < t + 1 {
        // No long path from the branch vertex; the leaf count then forces a
        // high degree.
        if let Some(x) = (0..tree.n()).find(|&x| tree.degree(x) > d) {
            return Ok(CombOutcome::HighDegree(x));
        }
        return Err(Error::Precondition(
            "no long path and no high degree; leaf bound hypothesis violated".into(),
        ));
    }
    // Spine vertices u_0..u_{t-1} with a tooth at each avoiding the spine.
    let mut branch_map = Vec::new();
    let mut paths = Vec::new();
    let spine_set: BTreeSet<usize> = spine[..=t].iter().copied().collect();
    for k in 0..t {
        branch_map.push(sup.verts[spine[k]]);
    }
    for k in 0..t - 1 {
        paths.push(sup.path_between(tree, spine[k], spine[k + 1]));
    }
    let mut teeth = Vec::new();
    for (k, &u) in spine.iter().enumerate().take(t) {
        let spine_nbrs: BTreeSet<usize> = if k == 0 {
            [spine[1]].into()
        } else {
            [spine[k - 1], spine[k + 1]].into()
        };
        let w = sup
            .adj(u)
            .into_iter()
            .find(|x| !spine_nbrs.contains(x) && !spine_set.contains(x))
            .ok_or_else(|| Error::Precondition("spine vertex lacks a free branch".into()))?;
        teeth.push((u, w));
    }
    for &(u, w) in &teeth {
        branch_map.push(sup.verts[w]);
        paths.push(sup.path_between(tree, u, w));
    }
    let witness = PatternWitness {
        pattern: Pattern::Comb(t),
        subdivision: SubdivisionWitness { branch_map, paths },
    };
    witness.verify(tree)?;
    Ok(CombOutcome::Comb(witness))
}

/// A tree with its degree-2 vertices suppressed. `verts` are the surviving
/// original vertices; suppressed edges remember their original paths.
pub(crate) struct Suppressed {
    pub(crate) verts: Vec<Vertex>,
    adj_lists: Vec<Vec<usize>>,
    paths: Vec<(usize, usize, Vec<Vertex>)>,
}

impl Suppressed {
    pub(crate) fn build(tree: &Multigraph) -> Suppressed {
        let keep: Vec<Vertex> = (0..tree.n()).filter(|&v| tree.degree(v) != 2).collect();
        let index: std::collections::HashMap<Vertex, usize> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj_lists = vec![Vec::new(); keep.len()];
        let mut paths = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for e in tree.incident(v) {
                let mut walk = vec![v];
                let mut prev = v;
                let mut cur = e.other(v);
                while tree.degree(cur) == 2 {
                    walk.push(cur);
                    let nxt = tree
                        .incident(cur)
                        .map(|f| f.other(cur))
                        .find(|&x| x != prev)
                        .expect("degree-2 vertex continues the chain");
                    prev = cur;
                    cur = nxt;
                }
                walk.push(cur);
                let j = index[&cur];
                if i < j {
                    adj_lists[i].push(j);
                    adj_lists[j].push(i);
                    paths.push((i, j, walk));
                }
            }
        }
        Suppressed { verts: keep, adj_lists, paths }
    }

    pub(crate) fn deg(&self, i: usize) -> usize {
        self.adj_lists[i].len()
    }

    pub(crate) fn adj(&self, i: usize) -> Vec<usize> {
        let mut a = self.adj_lists[i].clone();
        a.sort_unstable();
        a
    }

    /// Longest path starting at `root`, as suppressed-vertex indices.
    pub(crate) fn longest_path_from(&self, root: usize) -> Vec<usize> {
        fn down(s: &Suppressed, v: usize, parent: Option<usize>) -> Vec<usize> {
            let mut best = vec![v];
            for &u in &s.adj_lists[v] {
                if Some(u) != parent {
                    let mut cand = vec![v];
                    cand.extend(down(s, u, Some(v)));
                    if cand.len() > best.len() {
                        best = cand;
                    }
                }
            }
            best
        }
        down(self, root, None)
    }

    /// Original-tree path realizing suppressed edge (i, j).
    pub(crate) fn path_between(&self, tree: &Multigraph, i: usize, j: usize) -> PathWitness {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let (_, _, walk) = self
            .paths
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .expect("suppressed edge exists");
        let mut vs = walk.clone();
        if vs[0] != self.verts[i] {
            vs.reverse();
        }
        let mut es = Vec::new();
        for w in vs.windows(2) {
            let e = tree
                .incident(w[0])
                .find(|e| e.other(w[0]) == w[1])
                .expect("tree edge exists");
            es.push(e.id);
        }
        PathWitness::new(tree, vs, es).expect("suppressed path is valid")
    }
}

/// Where the extracted ladder came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LadderSource {
    /// X-positions (0-based) of an antichain of size n+1: nested rungs.
    Antichain(Vec<usize>),
    /// X-positions of a chain of length n+1: parallel rungs.
    Chain(Vec<usize>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LadderExtraction {
    pub graph: Multigraph,
    pub source: LadderSource,
    pub witness: PatternWitness,
}

/// Builds the two-paths-plus-matching graph for the permutation and
/// extracts an (n+1)-rung ladder subdivision by iterated peeling of
/// maximal matching edges. Requires m > n^2.
///
/// Vertices: X path 0..m-1, Y path m..2m-1; the matching joins X position
/// i (0-based) to Y position pi[i].
pub fn ladder_from_matching(pi: &[usize], n: usize) -> Result<LadderExtraction> {
    let m = pi.len();
    if n < 1 {
        return Err(Error::Precondition("need n >= 1".into()));
    }
    if m <= n * n {
        return Err(Error::Precondition(format!("need m > n^2, got m={m}, n={n}")));
    }
    let mut sorted: Vec<usize> = pi.to_vec();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return Err(Error::Precondition("pi must be a permutation of 0..m".into()));
    }
    let mut list = Vec::new();
    for i in 0..m - 1 {
        list.push((i, i + 1));
        list.push((m + i, m + i + 1));
    }
    for (i, &p) in pi.iter().enumerate() {
        list.push((i, m + p));
    }
    let graph = Multigraph::from_list(2 * m, &list)?;

    // e_i precedes e_j iff i < j and pi(i) < pi(j). Peel maximal members;
    // a big layer is an antichain, otherwise a long chain survives.
    let mut remaining: BTreeSet<usize> = (0..m).collect();
    let mut layers: Vec<Vec<usize>> = Vec::new();
    while !remaining.is_empty() {
        let cur: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| !remaining.iter().any(|&j| j > i && pi[j] > pi[i]))
            .collect();
        assert!(!cur.is_empty(), "maximal elements of a finite order exist");
        for &i in &cur {
            remaining.remove(&i);
        }
        layers.push(cur);
    }
    let (source, rungs) = if let Some(big) = layers.iter().find(|l| l.len() > n) {
        let mut rungs: Vec<usize> = big[..n + 1].to_vec();
        rungs.sort_unstable();
        (LadderSource::Antichain(rungs.clone()), rungs)
    } else {
        if layers.len() < n + 1 {
            return Err(Error::Precondition("peeling produced too few layers".into()));
        }
        // One member per layer, linked by the order.
        let mut chain = vec![layers[n][0]];
        for lv in (0..n).rev() {
            let cur = *chain.last().unwrap();
            let nxt = layers[lv]
                .iter()
                .copied()
                .find(|&j| j > cur && pi[j] > pi[cur])
                .expect("non-maximal members are dominated in the previous layer");
            chain.push(nxt);
        }
        (LadderSource::Chain(chain.clone()), chain)
    };

    // Rung k joins X position rungs[k] to Y position pi[rungs[k]]; sides
    // are subpaths of X and Y.
    let t = n + 1;
    let xs: Vec<usize> = rungs.clone();
    let ys: Vec<usize> = rungs.iter().map(|&i| m + pi[i]).collect();
    let mut branch_map = vec![0; 2 * t];
    for k in 0..t {
        branch_map[k] = xs[k];
        branch_map[t + k] = ys[k];
    }
    let seg = |a: usize, b: usize| -> PathWitness {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let vs: Vec<usize> = (lo..=hi).collect();
        let mut es = Vec::new();
        for w in vs.windows(2) {
            let e = graph
                .incident(w[0])
                .find(|e| e.other(w[0]) == w[1])
                .expect("side edge exists");
            es.push(e.id);
        }
        let (mut vs2, mut es2) = (vs, es);
        if a > b {
            vs2.reverse();
            es2.reverse();
        }
        PathWitness::new(&graph, vs2, es2).expect("side segment is valid")
    };
    // Emit one path per pattern edge, in the pattern's own edge order.
    let pattern_graph = fixtures::ladder(t);
    let mut paths = Vec::new();
    for pe in pattern_graph.edges() {
        let p = if pe.u < t && pe.v < t {
            seg(xs[pe.u], xs[pe.v])
        } else if pe.u >= t && pe.v >= t {
            seg(ys[pe.u - t], ys[pe.v - t])
        } else {
            let k = pe.u.min(pe.v);
            let e = graph
                .incident(xs[k])
                .find(|e| e.other(xs[k]) == ys[k])
                .expect("matching edge exists");
            PathWitness::new(&graph, vec![xs[k], ys[k]], vec![e.id]).expect("rung")
        };
        paths.push(p);
    }
    let witness = PatternWitness {
        pattern: Pattern::Ladder(t),
        subdivision: SubdivisionWitness { branch_map, paths },
    };
    witness.verify(&graph)?;
    Ok(LadderExtraction { graph, source, witness })
}

/// Exact search for a t-wheel or a t-ladder-with-corner-edge topological
/// minor; `None` when the graph contains neither.
pub fn wheel_or_ladder(
    g: &Multigraph,
    t: usize,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    if let Some(w) = find_pattern(g, Pattern::Wheel(t), budget)? {
        return Ok(Some(w));
    }
    if let Some(w) = find_pattern(g, Pattern::LadderPlus(t), budget)? {
        return Ok(Some(w));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_contains_k4() {
        let w = topological_minor(&fixtures::k5(), &fixtures::k4(), &mut Budget::default())
            .unwrap()
            .unwrap();
        w.verify(&fixtures::k5(), &fixtures::k4()).unwrap();
    }

    #[test]
    fn planar_graph_has_no_k5() {
        let g = fixtures::cube();
        assert!(topological_minor(&g, &fixtures::k5(), &mut Budget::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn petersen_contains_k33_subdivision() {
        let g = fixtures::petersen();
        let w = topological_minor(&g, &fixtures::k33(), &mut Budget::default())
            .unwrap()
            .unwrap();
        w.verify(&g, &fixtures::k33()).unwrap();
    }

    #[test]
    fn parallel_pattern_edges_need_disjoint_routes() {
        let pat = Multigraph::from_list(2, &[(0, 1), (0, 1)]).unwrap();
        let path_host = fixtures::path(3);
        assert!(topological_minor(&path_host, &pat, &mut Budget::default()).unwrap().is_none());
        let cyc = fixtures::cycle(4);
        let w = topological_minor(&cyc, &pat, &mut Budget::default()).unwrap().unwrap();
        w.verify(&cyc, &pat).unwrap();
    }

    #[test]
    fn induced_path_in_long_path() {
        let g = fixtures::path(100);
        match induced_path_or_degree(&g, 2, 3, 0).unwrap() {
            InducedPathOutcome::Path(p) => {
                assert_eq!(p.len(), 4);
                assert_eq!(p.first(), 0);
            }
            other => panic!("expected path, got {other:?}"),
        }
    }

    #[test]
    fn star_reports_high_degree() {
        let mut list = Vec::new();
        for i in 1..=4 {
            list.push((0, i));
        }
        let g = Multigraph::from_list(5, &list).unwrap();
        assert!(matches!(
            induced_path_or_degree(&g, 3, 1, 1).unwrap(),
            InducedPathOutcome::HighDegree(0)
        ));
    }

    #[test]
    fn binary_tree_induced_path() {
        // Complete binary tree of depth 5: 63 vertices > 1 + 3 + 3*2 = 10.
        let mut list = Vec::new();
        for v in 1..63usize {
            list.push(((v - 1) / 2, v));
        }
        let g = Multigraph::from_list(63, &list).unwrap();
        match induced_path_or_degree(&g, 3, 2, 0).unwrap() {
            InducedPathOutcome::Path(p) => assert_eq!(p.len(), 3),
            other => panic!("expected path, got {other:?}"),
        }
    }

    #[test]
    fn spider_high_degree() {
        let mut list = Vec::new();
        for i in 1..=4 {
            list.push((0, i));
        }
        let g = Multigraph::from_list(5, &list).unwrap();
        assert!(matches!(comb_or_degree(&g, 2, 2).unwrap(), CombOutcome::HighDegree(0)));
    }

    #[test]
    fn caterpillar_is_its_own_comb() {
        let g = fixtures::comb(4);
        match comb_or_degree(&g, 2, 2).unwrap() {
            CombOutcome::Comb(w) => w.verify(&g).unwrap(),
            other => panic!("expected comb, got {other:?}"),
        }
    }

    #[test]
    fn random_trees_give_a_verified_outcome() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut hits = 0;
        for _ in 0..40 {
            let n = 40;
            let mut list = Vec::new();
            for v in 1..n {
                let p = rng.gen_range(0..v);
                list.push((p, v));
            }
            let g = Multigraph::from_list(n, &list).unwrap();
            let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
            if leaves < 9 {
                continue;
            }
            hits += 1;
            match comb_or_degree(&g, 3, 2).unwrap() {
                CombOutcome::Comb(w) => w.verify(&g).unwrap(),
                CombOutcome::HighDegree(v) => assert!(g.degree(v) > 3),
            }
        }
        assert!(hits > 10);
    }

    #[test]
    fn identity_permutation_gives_chain_ladder() {
        let n = 2;
        let m = n * n + 1;
        let pi: Vec<usize> = (0..m).collect();
        let ext = ladder_from_matching(&pi, n).unwrap();
        assert!(matches!(ext.source, LadderSource::Chain(_)));
        ext.witness.verify(&ext.graph).unwrap();
    }

    #[test]
    fn reversal_permutation_gives_antichain_ladder() {
        let n = 2;
        let m = n * n + 1;
        let pi: Vec<usize> = (0..m).rev().collect();
        let ext = ladder_from_matching(&pi, n).unwrap();
        assert!(matches!(ext.source, LadderSource::Antichain(_)));
        ext.witness.verify(&ext.graph).unwrap();
    }

    #[test]
    fn small_m_is_rejected() {
        let pi: Vec<usize> = (0..4).collect();
        assert!(ladder_from_matching(&pi, 2).is_err());
    }

    #[test]
    fn wheel_or_ladder_finds_both_patterns() {
        let w6 = fixtures::wheel(6);
        let got = wheel_or_ladder(&w6, 6, &mut Budget::default()).unwrap().unwrap();
        assert!(matches!(got.pattern, Pattern::Wheel(6)));
        got.verify(&w6).unwrap();

        let l4p = fixtures::ladder_plus(4);
        let got = wheel_or_ladder(&l4p, 4, &mut Budget::default()).unwrap().unwrap();
        assert!(matches!(got.pattern, Pattern::LadderPlus(4)));
        got.verify(&l4p).unwrap();

        let prism = fixtures::prism();
        assert!(wheel_or_ladder(&prism, 4, &mut Budget::default()).unwrap().is_none());
    }
}
