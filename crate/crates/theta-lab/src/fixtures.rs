//! Constructors for the named graphs used throughout the crate and its
//! tests: cycles, wheels, theta graphs, ladders, combs and friends.
//! All are unit-weight; reweight with [`reweighted`] where needed.

use crate::graph::{EdgeId, Multigraph, Vertex};

/// Path with `n` vertices `0..n` along the line.
pub fn path(n: usize) -> Multigraph {
    let list: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Multigraph::from_list(n, &list).expect("path is valid")
}

/// Cycle `0-1-...-(n-1)-0`; edge `i` joins `i` and `i+1 mod n`.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3);
    let list: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_list(n, &list).expect("cycle is valid")
}

pub fn complete(n: usize) -> Multigraph {
    let mut list = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            list.push((u, v));
        }
    }
    Multigraph::from_list(n, &list).expect("complete graph is valid")
}

pub fn k4() -> Multigraph {
    complete(4)
}

pub fn k5() -> Multigraph {
    complete(5)
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut list = Vec::new();
    for u in 0..a {
        for v in 0..b {
            list.push((u, a + v));
        }
    }
    Multigraph::from_list(a + b, &list).expect("complete bipartite graph is valid")
}

pub fn k23() -> Multigraph {
    complete_bipartite(2, 3)
}

pub fn k33() -> Multigraph {
    complete_bipartite(3, 3)
}

/// Wheel with hub `0` and rim `1..=n`; spokes first, then rim edges.
pub fn wheel(n: usize) -> Multigraph {
    assert!(n >= 3);
    let mut list = Vec::new();
    for i in 1..=n {
        list.push((0, i));
    }
    for i in 1..=n {
        list.push((i, if i == n { 1 } else { i + 1 }));
    }
    Multigraph::from_list(n + 1, &list).expect("wheel is valid")
}

/// Theta graph with branch vertices `0` and `1` and three paths of the
/// given lengths (each at least 1, at most one equal to 1).
pub fn theta(a: usize, b: usize, c: usize) -> Multigraph {
    let mut n = 2;
    let mut list = Vec::new();
    for &len in &[a, b, c] {
        assert!(len >= 1);
        let mut prev = 0;
        for k in 1..len {
            let v = n;
            n += 1;
            list.push((prev, v));
            prev = v;
            let _ = k;
        }
        list.push((prev, 1));
    }
    Multigraph::from_list(n, &list).expect("theta graph is valid")
}

/// Prism: two triangles `0,1,2` and `3,4,5` joined by a perfect matching.
pub fn prism() -> Multigraph {
    Multigraph::from_list(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .expect("prism is valid")
}

/// Cube graph on 8 vertices (vertices are 3-bit strings, edges flip a bit).
pub fn cube() -> Multigraph {
    let mut list = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let u = v ^ (1 << bit);
            if v < u {
                list.push((v, u));
            }
        }
    }
    Multigraph::from_list(8, &list).expect("cube is valid")
}

/// Octahedron: K_{2,2,2}; vertex `i` is adjacent to all but `i xor 1`.
pub fn octahedron() -> Multigraph {
    let mut list = Vec::new();
    for u in 0..6usize {
        for v in u + 1..6 {
            if v != u ^ 1 {
                list.push((u, v));
            }
        }
    }
    Multigraph::from_list(6, &list).expect("octahedron is valid")
}

pub fn petersen() -> Multigraph {
    let mut list = Vec::new();
    for i in 0..5 {
        list.push((i, (i + 1) % 5));
        list.push((i, i + 5));
        list.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::from_list(10, &list).expect("petersen is valid")
}

/// Ladder with `t` rungs: sides `a_i = i` and `b_i = t + i`, rung edges
/// `a_i b_i`.
pub fn ladder(t: usize) -> Multigraph {
    assert!(t >= 2);
    let mut list = Vec::new();
    for i in 0..t - 1 {
        list.push((i, i + 1));
        list.push((t + i, t + i + 1));
    }
    for i in 0..t {
        list.push((i, t + i));
    }
    Multigraph::from_list(2 * t, &list).expect("ladder is valid")
}

/// Ladder plus the extra edge joining the two ends of the `b` side.
pub fn ladder_plus(t: usize) -> Multigraph {
    assert!(t >= 3);
    let base = ladder(t);
    let mut list: Vec<_> = base.edges().iter().map(|e| (e.u, e.v)).collect();
    list.push((t, 2 * t - 1));
    Multigraph::from_list(2 * t, &list).expect("ladder-plus is valid")
}

/// Comb with `t` teeth: spine `0..t`, tooth vertex `t+i` pendant at `i`.
pub fn comb(t: usize) -> Multigraph {
    assert!(t >= 2);
    let mut list = Vec::new();
    for i in 0..t - 1 {
        list.push((i, i + 1));
    }
    for i in 0..t {
        list.push((i, t + i));
    }
    Multigraph::from_list(2 * t, &list).expect("comb is valid")
}

/// Wheel on a rim of length `2k` with two opposite rim edges subdivided and
/// the two subdivision vertices joined by an edge. Hub is `0`, rim is
/// `1..=2k`, the subdivision vertices are `2k+1` (on edge `1-2`) and `2k+2`
/// (on edge `k+1`-`k+2`).
pub fn wheel_plus(k: usize) -> Multigraph {
    assert!(k >= 2);
    let n = 2 * k;
    let s1 = n + 1;
    let s2 = n + 2;
    let mut list = Vec::new();
    for i in 1..=n {
        list.push((0, i));
    }
    for i in 1..=n {
        let j = if i == n { 1 } else { i + 1 };
        if i == 1 {
            list.push((1, s1));
            list.push((s1, 2));
        } else if i == k + 1 {
            list.push((k + 1, s2));
            list.push((s2, k + 2));
        } else {
            list.push((i, j));
        }
    }
    list.push((s1, s2));
    Multigraph::from_list(n + 3, &list).expect("wheel-plus is valid")
}

/// Wheel `W_k` with a parallel copy of every spoke, making the graph an
/// edge-disjoint union of `k` triangles.
pub fn wheel_prime(k: usize) -> Multigraph {
    assert!(k >= 3);
    let base = wheel(k);
    let mut list: Vec<_> = base.edges().iter().map(|e| (e.u, e.v)).collect();
    for i in 1..=k {
        list.push((0, i));
    }
    Multigraph::from_list(k + 1, &list).expect("doubled-spoke wheel is valid")
}

/// Fan: path `1..=n` plus a hub `0` joined to every path vertex.
pub fn fan(n: usize) -> Multigraph {
    assert!(n >= 2);
    let mut list = Vec::new();
    for i in 1..=n {
        list.push((0, i));
    }
    for i in 1..n {
        list.push((i, i + 1));
    }
    Multigraph::from_list(n + 1, &list).expect("fan is valid")
}

/// 2 x k grid; row 0 is `0..k`, row 1 is `k..2k`.
pub fn grid_2xk(k: usize) -> Multigraph {
    assert!(k >= 2);
    let mut list = Vec::new();
    for i in 0..k - 1 {
        list.push((i, i + 1));
        list.push((k + i, k + i + 1));
    }
    for i in 0..k {
        list.push((i, k + i));
    }
    Multigraph::from_list(2 * k, &list).expect("grid is valid")
}

/// Same vertices and edge ids, new weights chosen by the callback.
pub fn reweighted<F: Fn(EdgeId, Vertex, Vertex) -> u64>(g: &Multigraph, w: F) -> Multigraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| crate::graph::Edge { id: e.id, u: e.u, v: e.v, w: w(e.id, e.u, e.v) })
        .collect();
    Multigraph::new(g.n(), edges).expect("reweighting preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_has_expected_order() {
        let g = theta(1, 2, 3);
        assert_eq!(g.n(), 1 + 2 + 3 - 1);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn wheel_plus_degrees() {
        let g = wheel_plus(3);
        assert_eq!(g.n(), 9);
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.degree(7), 3);
        assert_eq!(g.degree(8), 3);
    }

    #[test]
    fn wheel_prime_is_union_of_triangles() {
        let g = wheel_prime(4);
        assert_eq!(g.m(), 3 * 4);
        assert!(g.is_3connected());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert!((0..10).all(|v| g.degree(v) == 3));
    }
}
