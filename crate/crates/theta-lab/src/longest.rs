//! Exact longest paths in small graphs.
//!
//! Branch-and-bound over simple paths. The bound at a partial path is its
//! value plus, for every unvisited vertex still reachable through unvisited
//! territory, the best value of a single edge entering that vertex. Any
//! extension visits each such vertex at most once through exactly one
//! entering edge, so the bound is sound. Searches are budgeted; exceeding
//! the budget yields an explicit error, never a wrong number.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::graph::{Multigraph, PathWitness, Vertex};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LongestPath {
    /// Maximum number of edges on a path, with a witness.
    pub edge_count: usize,
    pub edge_witness: PathWitness,
    /// Maximum total weight of a path, with a witness.
    pub weight: u64,
    pub weight_witness: PathWitness,
}

/// Exact longest path by edge count and by weight.
pub fn longest_path(g: &Multigraph, budget: &mut Budget) -> Result<LongestPath> {
    let (edge_count, edge_witness) = extremal_path(g, budget, false)?;
    let (weight, weight_witness) = extremal_path(g, budget, true)?;
    Ok(LongestPath { edge_count: edge_count as usize, edge_witness, weight, weight_witness })
}

/// Exact number of edges on a longest path.
pub fn longest_path_edges(g: &Multigraph, budget: &mut Budget) -> Result<usize> {
    Ok(extremal_path(g, budget, false)?.0 as usize)
}

/// Exact maximum path weight.
pub fn longest_path_weight(g: &Multigraph, budget: &mut Budget) -> Result<u64> {
    Ok(extremal_path(g, budget, true)?.0)
}

fn edge_value(w: u64, weighted: bool) -> u64 {
    if weighted {
        w
    } else {
        1
    }
}

fn extremal_path(g: &Multigraph, budget: &mut Budget, weighted: bool) -> Result<(u64, PathWitness)> {
    if g.n() == 0 {
        return Err(Error::Precondition("longest path needs a vertex".into()));
    }
    let mut best: u64 = 0;
    let mut best_witness = PathWitness::trivial(0);
    let mut visited = vec![false; g.n()];
    let mut verts = Vec::new();
    let mut edges = Vec::new();
    for start in 0..g.n() {
        visited[start] = true;
        verts.push(start);
        dfs(
            g,
            budget,
            weighted,
            start,
            0,
            &mut visited,
            &mut verts,
            &mut edges,
            &mut best,
            &mut best_witness,
        )?;
        verts.pop();
        visited[start] = false;
    }
    Ok((best, best_witness))
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &Multigraph,
    budget: &mut Budget,
    weighted: bool,
    head: Vertex,
    value: u64,
    visited: &mut Vec<bool>,
    verts: &mut Vec<Vertex>,
    edges: &mut Vec<usize>,
    best: &mut u64,
    best_witness: &mut PathWitness,
) -> Result<()> {
    budget.tick()?;
    if value > *best {
        *best = value;
        *best_witness = PathWitness {
            vertices: verts.clone(),
            edges: edges.clone(),
            total_weight: edges.iter().map(|&id| g.edge(id).unwrap().w).sum(),
        };
    }
    if value + reachable_bound(g, head, visited, weighted) <= *best {
        return Ok(());
    }
    // Per neighbour keep only the best extending edge; a path never uses two
    // edges of one parallel family consecutively.
    let mut options: Vec<(Vertex, usize, u64)> = Vec::new();
    for e in g.incident(head) {
        let u = e.other(head);
        if visited[u] {
            continue;
        }
        let val = edge_value(e.w, weighted);
        match options.iter_mut().find(|(v, _, _)| *v == u) {
            Some(slot) => {
                if val > slot.2 {
                    slot.1 = e.id;
                    slot.2 = val;
                }
            }
            None => options.push((u, e.id, val)),
        }
    }
    options.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.cmp(&b.0)));
    for (u, id, val) in options {
        visited[u] = true;
        verts.push(u);
        edges.push(id);
        dfs(g, budget, weighted, u, value + val, visited, verts, edges, best, best_witness)?;
        edges.pop();
        verts.pop();
        visited[u] = false;
    }
    Ok(())
}

/// Sum over unvisited vertices reachable from `head` of the best value of a
/// single edge entering them.
fn reachable_bound(g: &Multigraph, head: Vertex, visited: &[bool], weighted: bool) -> u64 {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([head]);
    seen[head] = true;
    let mut bound = 0;
    while let Some(v) = queue.pop_front() {
        for e in g.incident(v) {
            let u = e.other(v);
            if !visited[u] && !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    for u in 0..g.n() {
        if u != head && seen[u] && !visited[u] {
            let enter = g
                .incident(u)
                .filter(|e| {
                    let o = e.other(u);
                    !visited[o] || o == head
                })
                .map(|e| edge_value(e.w, weighted))
                .max()
                .unwrap_or(0);
            bound += enter;
        }
    }
    bound
}

/// Exact maximum-weight path between fixed endpoints, `None` if no path
/// exists. Endpoints may coincide (weight-0 trivial path).
pub fn max_weight_path(
    g: &Multigraph,
    from: Vertex,
    to: Vertex,
    forbidden: &BTreeSet<Vertex>,
    budget: &mut Budget,
) -> Result<Option<PathWitness>> {
    if forbidden.contains(&from) || forbidden.contains(&to) {
        return Ok(None);
    }
    if from == to {
        return Ok(Some(PathWitness::trivial(from)));
    }
    let mut best: Option<PathWitness> = None;
    let mut visited = vec![false; g.n()];
    for &v in forbidden {
        visited[v] = true;
    }
    visited[from] = true;
    let mut verts = vec![from];
    let mut edges = Vec::new();
    fixed_dfs(g, budget, from, to, 0, &mut visited, &mut verts, &mut edges, &mut best)?;
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn fixed_dfs(
    g: &Multigraph,
    budget: &mut Budget,
    head: Vertex,
    target: Vertex,
    weight: u64,
    visited: &mut Vec<bool>,
    verts: &mut Vec<Vertex>,
    edges: &mut Vec<usize>,
    best: &mut Option<PathWitness>,
) -> Result<()> {
    budget.tick()?;
    if head == target {
        if best.as_ref().map_or(true, |b| weight > b.total_weight) {
            *best = Some(PathWitness { vertices: verts.clone(), edges: edges.clone(), total_weight: weight });
        }
        return Ok(());
    }
    let bound = reachable_bound_to(g, head, target, visited);
    match bound {
        None => return Ok(()),
        Some(b) => {
            if let Some(cur) = best.as_ref() {
                if weight + b <= cur.total_weight {
                    return Ok(());
                }
            }
        }
    }
    let mut options: Vec<(Vertex, usize, u64)> = Vec::new();
    for e in g.incident(head) {
        let u = e.other(head);
        if visited[u] {
            continue;
        }
        match options.iter_mut().find(|(v, _, _)| *v == u) {
            Some(slot) => {
                if e.w > slot.2 {
                    slot.1 = e.id;
                    slot.2 = e.w;
                }
            }
            None => options.push((u, e.id, e.w)),
        }
    }
    options.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.cmp(&b.0)));
    for (u, id, w) in options {
        visited[u] = true;
        verts.push(u);
        edges.push(id);
        fixed_dfs(g, budget, u, target, weight + w, visited, verts, edges, best)?;
        edges.pop();
        verts.pop();
        visited[u] = false;
    }
    Ok(())
}

/// Bound for paths that must end at `target`; `None` when the target is no
/// longer reachable.
fn reachable_bound_to(g: &Multigraph, head: Vertex, target: Vertex, visited: &[bool]) -> Option<u64> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([head]);
    seen[head] = true;
    while let Some(v) = queue.pop_front() {
        for e in g.incident(v) {
            let u = e.other(v);
            if !visited[u] && !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    if !seen[target] {
        return None;
    }
    let mut bound = 0;
    for u in 0..g.n() {
        if u != head && seen[u] && !visited[u] {
            let enter = g
                .incident(u)
                .filter(|e| {
                    let o = e.other(u);
                    !visited[o] || o == head
                })
                .map(|e| e.w)
                .max()
                .unwrap_or(0);
            bound += enter;
        }
    }
    Some(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cycle_longest_path_is_n_minus_1() {
        for n in 3..8 {
            let g = fixtures::cycle(n);
            let lp = longest_path(&g, &mut Budget::default()).unwrap();
            assert_eq!(lp.edge_count, n - 1);
            assert_eq!(lp.weight, (n - 1) as u64);
        }
    }

    #[test]
    fn k4_has_hamilton_path() {
        let lp = longest_path(&fixtures::k4(), &mut Budget::default()).unwrap();
        assert_eq!(lp.edge_count, 3);
    }

    #[test]
    fn petersen_has_hamilton_path() {
        let lp = longest_path(&fixtures::petersen(), &mut Budget::default()).unwrap();
        assert_eq!(lp.edge_count, 9);
        lp.edge_witness.verify(&fixtures::petersen()).unwrap();
    }

    #[test]
    fn weights_and_counts_can_differ() {
        // Triangle with one heavy edge plus a pendant path.
        let g = Multigraph::from_weighted(4, &[(0, 1, 10), (1, 2, 1), (2, 0, 1), (2, 3, 1)]).unwrap();
        let lp = longest_path(&g, &mut Budget::default()).unwrap();
        assert_eq!(lp.edge_count, 3);
        assert_eq!(lp.weight, 12); // 3-2-0-1 picks up the heavy edge
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let g = fixtures::complete(7);
        let mut tiny = Budget::new(5);
        match longest_path(&g, &mut tiny) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn fixed_endpoint_max_weight() {
        let g = fixtures::cycle(5);
        let p = max_weight_path(&g, 0, 1, &BTreeSet::new(), &mut Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(p.total_weight, 4); // the long way around
    }

    #[test]
    fn parallel_edges_use_the_heaviest() {
        let g = Multigraph::from_weighted(2, &[(0, 1, 2), (0, 1, 7)]).unwrap();
        let lp = longest_path(&g, &mut Budget::default()).unwrap();
        assert_eq!(lp.weight, 7);
        assert_eq!(lp.edge_count, 1);
    }
}
