//! Exact Hamiltonian-path testing by backtracking with connectivity
//! pruning. Results are never heuristic: over-budget inputs return a typed
//! error instead of a guessed "false".

use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct HamiltonBudget {
    /// Refuse graphs with more vertices than this.
    pub max_vertices: usize,
    /// Abort the search after this many expanded nodes.
    pub max_nodes: u64,
}

impl Default for HamiltonBudget {
    fn default() -> Self {
        HamiltonBudget {
            max_vertices: 24,
            max_nodes: 20_000_000,
        }
    }
}

/// Exact test with the default budget.
pub fn hamiltonian_path_exists(g: &Graph) -> Result<bool, Error> {
    Ok(hamiltonian_path(g, &HamiltonBudget::default())?.is_some())
}

/// Finds a Hamiltonian path if one exists, exactly.
pub fn hamiltonian_path(g: &Graph, budget: &HamiltonBudget) -> Result<Option<Vec<usize>>, Error> {
    let n = g.n();
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices above the Hamiltonian search cap {}",
            budget.max_vertices
        )));
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    // More than two degree-1 vertices can never all be endpoints.
    let degree_one = (0..n).filter(|&v| g.degree(v) == 1).count();
    if degree_one > 2 {
        return Ok(None);
    }
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    // Start from low-degree vertices first: endpoints concentrate there.
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (neighbors[v].len(), v));
    let mut nodes: u64 = 0;
    for &start in &starts {
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut path = vec![start];
        if search(
            g,
            &neighbors,
            &mut visited,
            &mut path,
            &mut nodes,
            budget.max_nodes,
        )? {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn search(
    g: &Graph,
    neighbors: &[Vec<usize>],
    visited: &mut Vec<bool>,
    path: &mut Vec<usize>,
    nodes: &mut u64,
    max_nodes: u64,
) -> Result<bool, Error> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Err(Error::BudgetExceeded(format!(
            "Hamiltonian search exceeded {max_nodes} nodes"
        )));
    }
    let n = g.n();
    if path.len() == n {
        return Ok(true);
    }
    let current = *path.last().expect("path is non-empty");
    if !remainder_traversable(g, neighbors, visited, current) {
        return Ok(false);
    }
    for &next in &neighbors[current] {
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(next);
        if search(g, neighbors, visited, path, nodes, max_nodes)? {
            return Ok(true);
        }
        path.pop();
        visited[next] = false;
    }
    Ok(false)
}

/// The unvisited vertices together with `current` must stay connected, and
/// at most one unvisited vertex may have a single unvisited-or-current
/// neighbor (it must be the final endpoint).
fn remainder_traversable(
    g: &Graph,
    neighbors: &[Vec<usize>],
    visited: &[bool],
    current: usize,
) -> bool {
    let n = g.n();
    let remaining = visited.iter().filter(|&&v| !v).count();
    let mut seen = vec![false; n];
    seen[current] = true;
    let mut stack = vec![current];
    let mut reached = 0;
    while let Some(v) = stack.pop() {
        for &u in &neighbors[v] {
            if !visited[u] && !seen[u] {
                seen[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    if reached != remaining {
        return false;
    }
    let mut forced_endpoints = 0;
    for v in 0..n {
        if visited[v] {
            continue;
        }
        let live_degree = neighbors[v]
            .iter()
            .filter(|&&u| !visited[u] || u == current)
            .count();
        if live_degree == 0 {
            return false;
        }
        if live_degree == 1 && !g.has_edge(current, v) {
            forced_endpoints += 1;
            if forced_endpoints > 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, petersen_graph, star_graph, Graph};

    #[test]
    fn cycles_are_traceable() {
        for n in 3..=10 {
            assert!(hamiltonian_path_exists(&cycle_graph(n)).unwrap());
        }
    }

    #[test]
    fn star_with_three_leaves_is_not() {
        // Two leaves must be endpoints; the third is unreachable.
        assert!(!hamiltonian_path_exists(&star_graph(3)).unwrap());
    }

    #[test]
    fn petersen_has_a_path() {
        let g = petersen_graph();
        let path = hamiltonian_path(&g, &HamiltonBudget::default())
            .unwrap()
            .expect("Petersen is traceable");
        assert_eq!(path.len(), 10);
        let mut sorted = path.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 10);
        for pair in path.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]));
        }
    }

    #[test]
    fn disconnected_graphs_fail_fast() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!hamiltonian_path_exists(&g).unwrap());
    }

    #[test]
    fn vertex_cap_is_typed() {
        let g = cycle_graph(30);
        assert!(matches!(
            hamiltonian_path_exists(&g),
            Err(Error::BudgetExceeded(_))
        ));
        let generous = HamiltonBudget {
            max_vertices: 64,
            ..HamiltonBudget::default()
        };
        assert!(hamiltonian_path(&g, &generous).unwrap().is_some());
    }

    #[test]
    fn bubble_sort_and_pancake_graphs_are_traceable() {
        let b4 = crate::cayley::bubble_sort_graph(4).unwrap();
        assert!(hamiltonian_path_exists(b4.graph()).unwrap());
        let p4 = crate::cayley::pancake_graph(4).unwrap();
        assert!(hamiltonian_path_exists(p4.graph()).unwrap());
    }
}
