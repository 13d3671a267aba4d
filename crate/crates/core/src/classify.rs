//! Graph-class predicates used to decide which results apply to a graph.

use num_bigint::BigUint;
use serde::Serialize;

use crate::cliques::count_cliques;
use crate::graph::{Graph, GraphError};
use crate::polynomial::{clique_polynomial, d_clique};

/// Shape of the subgraph induced by a vertex neighborhood.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NeighborhoodShape {
    /// No neighbours at all.
    Empty,
    /// One path component with `length` edges (0 for a single vertex).
    SinglePath { length: usize },
    /// One cycle component on `length` vertices.
    SingleCycle { length: usize },
    /// At least two components, all of them paths. `paths` lists the edge
    /// lengths of the non-trivial components in decreasing order.
    PathForest { paths: Vec<usize>, isolated: usize },
    /// A component with a vertex of induced degree at least three, or a
    /// cycle next to other components.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub omega: usize,
    pub triangle_free: bool,
    pub k4_free: bool,
    pub k5_free: bool,
    pub flat: bool,
    pub chordal: bool,
    pub connected: bool,
    pub two_connected: bool,
    pub has_isolated_edge: bool,
    pub has_isolated_triangle: bool,
    pub isolated_edge_in_induced_cycle: bool,
    pub balanced: bool,
    #[serde(serialize_with = "crate::ser::display")]
    pub d_clique: BigUint,
}

pub fn is_kr_free(g: &Graph, r: usize) -> bool {
    assert!(r >= 1, "K_r-freeness needs r >= 1");
    // look for an r-clique by extension, stopping at the first one
    fn grow(g: &Graph, clique: &mut Vec<usize>, r: usize) -> bool {
        if clique.len() == r {
            return true;
        }
        let start = clique.last().map_or(0, |&v| v + 1);
        for v in start..g.n() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                if grow(g, clique, r) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    !grow(g, &mut Vec::with_capacity(r), r)
}

/// Every edge lies in at most two triangles.
pub fn is_flat(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.edge_value(u, v).expect("edge") <= 2)
}

pub fn has_isolated_edge(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.edge_value(u, v).expect("edge") == 0)
}

pub fn has_isolated_triangle(g: &Graph) -> bool {
    g.triangles()
        .into_iter()
        .any(|(a, b, c)| g.triangle_value(a, b, c).expect("triangle") == 0)
}

/// Lexicographic breadth-first search order, starting from vertex 0 and
/// restarting at the smallest unvisited vertex.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    // partition refinement over an ordered list of cells
    let mut cells: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while let Some(first) = cells.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            cells.remove(0);
        }
        placed[v] = true;
        order.push(v);
        let mut next = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            let (hit, miss): (Vec<usize>, Vec<usize>) = cell.into_iter().partition(|&w| g.has_edge(v, w));
            if !hit.is_empty() {
                next.push(hit);
            }
            if !miss.is_empty() {
                next.push(miss);
            }
        }
        cells = next;
    }
    debug_assert!(placed.iter().all(|&p| p));
    order
}

/// Whether `order` is a perfect elimination ordering: for every vertex, its
/// neighbours appearing later in the order form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        // it suffices to check the earliest later neighbour against the rest
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if !later.iter().all(|&w| w == parent || g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

/// Chordality via the reverse of a lexicographic BFS order.
pub fn is_chordal(g: &Graph) -> bool {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_order(g, &order)
}

pub fn is_connected(g: &Graph) -> bool {
    component_labels(g).1 <= 1
}

/// Component label per vertex and the number of components.
fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = count;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Cut vertices, found with the low-link depth-first search.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            let next = g.neighbors(v).get(top.2).copied();
            top.2 += 1;
            if let Some(w) = next {
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// 0 when disconnected (or without vertices), 2 when connected with at
/// least three vertices and no cut vertex, 1 otherwise.
pub fn connectivity_level(g: &Graph) -> u8 {
    if g.n() == 0 || !is_connected(g) {
        0
    } else if g.n() >= 3 && articulation_points(g).is_empty() {
        2
    } else {
        1
    }
}

pub fn classify_neighborhood(g: &Graph, v: usize) -> Result<NeighborhoodShape, GraphError> {
    let h = g.induced_neighborhood(v)?.graph;
    Ok(shape_of(&h))
}

/// Shape of an arbitrary graph viewed as a neighborhood.
pub fn shape_of(h: &Graph) -> NeighborhoodShape {
    let (label, count) = component_labels(h);
    if count == 0 {
        return NeighborhoodShape::Empty;
    }
    let mut verts = vec![0usize; count];
    let mut degree_sum = vec![0usize; count];
    let mut max_degree = vec![0usize; count];
    for (v, &c) in label.iter().enumerate() {
        verts[c] += 1;
        degree_sum[c] += h.degree(v);
        max_degree[c] = max_degree[c].max(h.degree(v));
    }
    if max_degree.iter().any(|&d| d >= 3) {
        return NeighborhoodShape::Other;
    }
    // max degree <= 2: a component is a path when edges = vertices - 1,
    // otherwise a cycle
    let is_cycle = |c: usize| degree_sum[c] / 2 == verts[c];
    if count == 1 {
        return if is_cycle(0) {
            NeighborhoodShape::SingleCycle { length: verts[0] }
        } else {
            NeighborhoodShape::SinglePath { length: verts[0] - 1 }
        };
    }
    if (0..count).any(is_cycle) {
        return NeighborhoodShape::Other;
    }
    let mut paths: Vec<usize> = (0..count).map(|c| verts[c] - 1).filter(|&l| l > 0).collect();
    paths.sort_unstable_by(|a, b| b.cmp(a));
    let isolated = (0..count).filter(|&c| verts[c] == 1).count();
    NeighborhoodShape::PathForest { paths, isolated }
}

/// Some edge with no common neighbour lies on a chordless cycle of length
/// at least four.
pub fn isolated_edge_in_induced_cycle(g: &Graph) -> bool {
    g.edges()
        .filter(|&(u, v)| g.edge_value(u, v).expect("edge") == 0)
        .any(|(u, v)| induced_path_closes(g, u, v))
}

/// Searches for an induced path `u = p_0, ..., p_k = v` with `k >= 2` in
/// `G - uv` whose only chord-like adjacency is the closing edge `uv`.
fn induced_path_closes(g: &Graph, u: usize, v: usize) -> bool {
    fn dfs(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool], u: usize, v: usize) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if on_path[w] || (last == u && w == v) {
                continue;
            }
            // w may only touch `last` among the earlier path vertices, except
            // that the target v is allowed to touch u as well
            let ok = path[..path.len() - 1]
                .iter()
                .all(|&p| !g.has_edge(p, w) || (w == v && p == u));
            if !ok {
                continue;
            }
            if w == v {
                return true;
            }
            path.push(w);
            on_path[w] = true;
            let found = dfs(g, path, on_path, u, v);
            path.pop();
            on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    dfs(g, &mut vec![u], &mut on_path, u, v)
}

pub fn is_balanced(g: &Graph) -> bool {
    d_clique(&clique_polynomial(&count_cliques(g))) <= BigUint::from(1u32)
}

pub fn classify(g: &Graph) -> ClassificationReport {
    let counts = count_cliques(g);
    let omega = counts.clique_number();
    let d = d_clique(&clique_polynomial(&counts));
    let level = connectivity_level(g);
    ClassificationReport {
        omega,
        triangle_free: omega < 3,
        k4_free: omega < 4,
        k5_free: omega < 5,
        flat: is_flat(g),
        chordal: is_chordal(g),
        connected: level >= 1,
        two_connected: level == 2,
        has_isolated_edge: has_isolated_edge(g),
        has_isolated_triangle: has_isolated_triangle(g),
        isolated_edge_in_induced_cycle: isolated_edge_in_induced_cycle(g),
        balanced: d <= BigUint::from(1u32),
        d_clique: d,
    }
}
