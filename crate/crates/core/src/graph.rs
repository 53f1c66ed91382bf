//! Simple undirected graphs with dense bitset adjacency, the named-graph
//! corpus, and the plain edge-list text format.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Error;
use crate::perm::Perm;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        let words = n.div_ceil(64);
        Graph {
            n,
            rows: vec![vec![0u64; words]; n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an undirected edge; duplicates are silently collapsed, loops
    /// and out-of-range endpoints are errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::GraphFormat(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::GraphFormat(format!("loop at vertex {u}")));
        }
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v` — the canonical edge
    /// order used by edge labelings.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(k)` iff every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Two-coloring of a connected-or-not graph, `None` if an odd cycle
    /// exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if color[u] == usize::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let side0 = (0..self.n).filter(|&v| color[v] == 0).collect();
        let side1 = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((side0, side1))
    }

    /// Length of a shortest cycle, `None` for forests. BFS from every
    /// vertex.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let cycle = dist[v] + dist[u] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("complement edge in range");
                }
            }
        }
        g
    }

    /// The image graph under a vertex permutation.
    pub fn apply_perm(&self, p: &Perm) -> Result<Graph, Error> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: p.degree(),
            });
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(p.apply(u), p.apply(v))?;
        }
        Ok(g)
    }

    /// True iff `p` maps edges to edges (degree must match).
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.n
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the `"n m"` header plus one `"u v"` pair per line, 0-based.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, Error> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing header line".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad vertex count in header {header:?}")))?;
        let m: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge count in header {header:?}")))?;
        let mut g = Graph::new(n);
        let mut read = 0;
        for line in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            g.add_edge(u, v)
                .map_err(|e| Error::EdgeList(format!("line {line:?}: {e}")))?;
            read += 1;
        }
        if read != m {
            return Err(Error::EdgeList(format!(
                "header declares {m} edges but {read} lines follow"
            )));
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).expect("in range");
    }
    g
}

pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v).expect("in range");
    }
    g
}

pub fn star_graph(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// The Petersen graph via its Kneser description: vertices are the
/// 2-subsets of `{0..4}` in lexicographic order, adjacent iff disjoint.
pub fn petersen_graph() -> Graph {
    let mut subsets = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            subsets.push((a, b));
        }
    }
    let mut g = Graph::new(10);
    for i in 0..10 {
        for j in i + 1..10 {
            let (a, b) = subsets[i];
            let (c, d) = subsets[j];
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        let k4 = complete_graph(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regular_degree(), Some(3));
        assert!(k4.is_connected());
    }

    #[test]
    fn cycle_counts() {
        let c5 = cycle_graph(5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.regular_degree(), Some(2));
        assert_eq!(c5.girth(), Some(5));
    }

    #[test]
    fn petersen_structure() {
        let p = petersen_graph();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.girth(), Some(5));
        assert!(p.is_connected());
        assert!(p.bipartition().is_none());
    }

    #[test]
    fn bipartite_detection() {
        let k33 = complete_bipartite(3, 3);
        let (a, b) = k33.bipartition().unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(b.len(), 3);
        assert!(cycle_graph(6).bipartition().is_some());
        assert!(cycle_graph(5).bipartition().is_none());
    }

    #[test]
    fn loops_and_range_are_rejected() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 5).is_err());
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap(); // duplicate collapses
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = petersen_graph();
        let text = g.to_edge_list_text();
        let back = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(back, g);
        assert!(Graph::from_edge_list_text("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list_text("").is_err());
    }

    #[test]
    fn complement_of_cycle_four() {
        let c4 = cycle_graph(4);
        let comp = c4.complement();
        assert_eq!(comp.edge_count(), 2);
        assert!(comp.has_edge(0, 2));
        assert!(comp.has_edge(1, 3));
    }

    #[test]
    fn automorphism_check() {
        let c4 = cycle_graph(4);
        let rotation = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(c4.is_automorphism(&rotation));
        let bad = Perm::transposition(4, 0, 1).unwrap();
        assert!(!c4.is_automorphism(&bad));
    }
}
