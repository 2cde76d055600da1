//! Undirected simple graphs, orientations, and small-graph canonical forms.

use std::collections::BTreeSet;

/// Undirected simple graph; vertices are `0..n`, edges stored smaller-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    /// The induced subgraph after deleting vertex `v`; larger ids shift down.
    pub fn delete_vertex(&self, v: usize) -> SimpleGraph {
        assert!(v < self.n);
        let remap = |u: usize| if u > v { u - 1 } else { u };
        let mut g = SimpleGraph::empty(self.n - 1);
        for &(a, b) in &self.edges {
            if a != v && b != v {
                g.add_edge(remap(a), remap(b));
            }
        }
        g
    }

    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for &(u, v) in &self.edges {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// An orientation: at most one arc per unordered pair, no loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub n: usize,
    pub arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        assert!(!self.arcs.contains(&(v, u)), "one arc per pair");
        self.arcs.insert((u, v));
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn underlying(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for &(u, v) in &self.arcs {
            g.add_edge(u, v);
        }
        g
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs
            .iter()
            .filter_map(|&(a, b)| (a == v).then_some(b))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("graph too large for canonical form (n={n}, cap={cap})")]
    TooLarge { n: usize, cap: usize },
}

/// Default vertex cap for canonical-form computations.
pub const CANONICAL_CAP: usize = 12;

/// Pair-entry code: 0 none, 1 edge (undirected), or arc direction 1/2.
fn pair_code_graph(g: &SimpleGraph, u: usize, v: usize) -> u8 {
    u8::from(g.has_edge(u, v))
}

fn pair_code_digraph(d: &Digraph, u: usize, v: usize) -> u8 {
    if d.has_arc(u, v) {
        1
    } else if d.has_arc(v, u) {
        2
    } else {
        0
    }
}

/// Canonical form of a graph on at most `cap` vertices: the lexicographically
/// least upper-triangle encoding over all relabelings, computed by color
/// refinement plus individualization. Equal codes iff isomorphic.
pub fn canonical_graph_code(g: &SimpleGraph, cap: usize) -> Result<Vec<u8>, IsoError> {
    if g.n > cap {
        return Err(IsoError::TooLarge { n: g.n, cap });
    }
    let degrees: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    Ok(canonical_code(g.n, &degrees, &|u, v| pair_code_graph(g, u, v)))
}

/// Canonical form of a digraph, refining on (out-degree, in-degree).
pub fn canonical_digraph_code(d: &Digraph, cap: usize) -> Result<Vec<u8>, IsoError> {
    if d.n > cap {
        return Err(IsoError::TooLarge { n: d.n, cap });
    }
    let degrees: Vec<usize> = (0..d.n)
        .map(|v| {
            let out = d.arcs.iter().filter(|&&(a, _)| a == v).count();
            let inn = d.arcs.iter().filter(|&&(_, b)| b == v).count();
            out * (d.n + 1) + inn
        })
        .collect();
    Ok(canonical_code(d.n, &degrees, &|u, v| {
        pair_code_digraph(d, u, v)
    }))
}

pub fn graphs_isomorphic(a: &SimpleGraph, b: &SimpleGraph, cap: usize) -> Result<bool, IsoError> {
    if a.n != b.n || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_graph_code(a, cap)? == canonical_graph_code(b, cap)?)
}

fn canonical_code(n: usize, initial: &[usize], pair: &dyn Fn(usize, usize) -> u8) -> Vec<u8> {
    if n == 0 {
        return Vec::new();
    }
    let mut coloring: Vec<usize> = normalize_colors(initial);
    refine(n, &mut coloring, pair);
    let mut best: Option<Vec<u8>> = None;
    canon_search(n, &coloring, pair, &mut best);
    best.unwrap()
}

/// Relabels arbitrary color values to 0..k preserving order.
fn normalize_colors(colors: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    colors
        .iter()
        .map(|c| sorted.binary_search(c).unwrap())
        .collect()
}

/// Iterated neighborhood refinement: a vertex's new color is its old color
/// plus the multiset of (pair code, neighbor color) over all other vertices.
fn refine(n: usize, coloring: &mut Vec<usize>, pair: &dyn Fn(usize, usize) -> u8) {
    loop {
        let mut signatures: Vec<(usize, Vec<(u8, usize)>)> = (0..n)
            .map(|v| {
                let mut sig: Vec<(u8, usize)> = (0..n)
                    .filter(|&u| u != v)
                    .map(|u| (pair(v, u), coloring[u]))
                    .filter(|&(c, _)| c != 0)
                    .collect();
                sig.sort_unstable();
                (coloring[v], sig)
            })
            .collect();
        let mut unique = signatures.clone();
        unique.sort();
        unique.dedup();
        let new: Vec<usize> = signatures
            .drain(..)
            .map(|s| unique.binary_search(&s).unwrap())
            .collect();
        if new == *coloring {
            return;
        }
        *coloring = new;
    }
}

/// Branches on the first smallest non-singleton color class; at discrete
/// colorings emits the induced encoding and keeps the minimum.
fn canon_search(
    n: usize,
    coloring: &[usize],
    pair: &dyn Fn(usize, usize) -> u8,
    best: &mut Option<Vec<u8>>,
) {
    // Find the smallest non-singleton class (ties: smallest color).
    let mut class_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, &c) in coloring.iter().enumerate() {
        class_of[c].push(v);
    }
    let target = class_of
        .iter()
        .filter(|c| c.len() > 1)
        .min_by_key(|c| (c.len(), c[0]))
        .cloned();

    match target {
        None => {
            // Discrete: coloring is a permutation (vertex -> position).
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| coloring[v]);
            let mut code = Vec::with_capacity(n * (n - 1) / 2 + 1);
            code.push(n as u8);
            for i in 0..n {
                for j in (i + 1)..n {
                    code.push(pair(order[i], order[j]));
                }
            }
            if best.as_ref().map_or(true, |b| code < *b) {
                *best = Some(code);
            }
        }
        Some(cell) => {
            for &v in &cell {
                let mut refined: Vec<usize> = coloring.iter().map(|&c| c * 2 + 1).collect();
                refined[v] = coloring[v] * 2;
                let mut refined = normalize_colors(&refined);
                refine(n, &mut refined, pair);
                canon_search(n, &refined, pair, best);
            }
        }
    }
}

/// Vertex orbits under the full automorphism group, found by backtracking
/// over color-refinement-compatible bijections. `node_budget` bounds the
/// search; when exceeded the trivial partition is returned (always sound
/// for symmetry reduction, just weaker).
pub fn automorphism_orbits(g: &SimpleGraph, node_budget: u64) -> Vec<usize> {
    let n = g.n;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    if n == 0 {
        return parent;
    }

    let adj = g.adjacency();
    let mut coloring: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    coloring = normalize_colors(&coloring);
    refine(n, &mut coloring, &|u, v| u8::from(adj[u][v]));

    let mut mapping: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    let mut nodes = 0u64;

    fn backtrack(
        v: usize,
        n: usize,
        adj: &[Vec<bool>],
        coloring: &[usize],
        mapping: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        parent: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
    ) -> bool {
        if *nodes > budget {
            return false;
        }
        *nodes += 1;
        if v == n {
            for u in 0..n {
                let (a, b) = (find(parent, u), find(parent, mapping[u].unwrap()));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
            return true;
        }
        for img in 0..n {
            if used[img] || coloring[img] != coloring[v] {
                continue;
            }
            let consistent = (0..v).all(|u| adj[u][v] == adj[mapping[u].unwrap()][img]);
            if consistent {
                mapping[v] = Some(img);
                used[img] = true;
                if !backtrack(
                    v + 1,
                    n,
                    adj,
                    coloring,
                    mapping,
                    used,
                    parent,
                    nodes,
                    budget,
                ) {
                    return false;
                }
                mapping[v] = None;
                used[img] = false;
            }
        }
        true
    }

    let completed = backtrack(
        0,
        n,
        &adj,
        &coloring,
        &mut mapping,
        &mut used,
        &mut parent,
        &mut nodes,
        node_budget,
    );
    if !completed {
        return (0..n).collect();
    }
    for v in 0..n {
        find(&mut parent, v);
    }
    parent.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    #[test]
    fn basic_graph_ops() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 1), (3, 0)]);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(1), vec![0, 2]);
        let h = g.delete_vertex(1);
        assert_eq!(h.n, 3);
        assert_eq!(h.edge_count(), 1);
        assert!(h.has_edge(2, 0));
    }

    #[test]
    fn canonical_codes_detect_isomorphism() {
        let c5 = cycle(5);
        let relabeled = c5.relabel(&[2, 4, 0, 3, 1]);
        assert!(graphs_isomorphic(&c5, &relabeled, CANONICAL_CAP).unwrap());

        let path5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(!graphs_isomorphic(&c5, &path5, CANONICAL_CAP).unwrap());
    }

    #[test]
    fn canonical_separates_same_degree_sequence() {
        // C6 vs two triangles: both 2-regular on 6 vertices.
        let c6 = cycle(6);
        let two_triangles =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!graphs_isomorphic(&c6, &two_triangles, CANONICAL_CAP).unwrap());
    }

    #[test]
    fn digraph_codes_distinguish_orientation() {
        let mut d1 = Digraph::empty(3);
        d1.add_arc(0, 1);
        d1.add_arc(1, 2);
        let mut d2 = Digraph::empty(3);
        d2.add_arc(1, 0);
        d2.add_arc(1, 2);
        let c1 = canonical_digraph_code(&d1, CANONICAL_CAP).unwrap();
        let c2 = canonical_digraph_code(&d2, CANONICAL_CAP).unwrap();
        assert_ne!(c1, c2);

        // Relabeling d1 keeps its code.
        let mut d3 = Digraph::empty(3);
        d3.add_arc(2, 0);
        d3.add_arc(0, 1);
        assert_eq!(c1, canonical_digraph_code(&d3, CANONICAL_CAP).unwrap());
    }

    #[test]
    fn orbits_of_cycle_and_path() {
        let orbits = automorphism_orbits(&cycle(5), 100_000);
        assert!(orbits.iter().all(|&o| o == 0));

        let path4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let orbits = automorphism_orbits(&path4, 100_000);
        assert_eq!(orbits[0], orbits[3]);
        assert_eq!(orbits[1], orbits[2]);
        assert_ne!(orbits[0], orbits[1]);
    }
}
