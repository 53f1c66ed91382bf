//! Cayley graph construction with connection-set validation, plus the
//! pancake, bubble-sort, and transposition graphs.
//!
//! Vertices are the element indices of the underlying [`GroupTable`]; the
//! identity element's vertex is its index. The edge `{h, s·h}` uses left
//! multiplication by `s`, so right translations are always graph
//! automorphisms.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::group::{symmetric_index, symmetric_perms, GroupTable};
use crate::perm::Perm;

/// An identity-free, inverse-closed subset of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: Vec<usize>,
}

impl ConnectionSet {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Checks `1 ∉ S = S⁻¹`, naming the offending element on failure.
pub fn validate_connection_set(h: &GroupTable, s: &[usize]) -> Result<ConnectionSet, Error> {
    let mut elements: Vec<usize> = s.to_vec();
    elements.sort_unstable();
    elements.dedup();
    for &x in &elements {
        h.check_element(x)?;
        if x == h.identity() {
            return Err(Error::ConnectionSetContainsIdentity { element: x });
        }
        if !elements.contains(&h.inv(x)) {
            return Err(Error::ConnectionSetNotInverseClosed {
                element: x,
                inverse: h.inv(x),
            });
        }
    }
    Ok(ConnectionSet { elements })
}

#[derive(Clone)]
pub struct CayleyGraph {
    group: GroupTable,
    connection: ConnectionSet,
    graph: Graph,
}

impl CayleyGraph {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn connection(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn identity_vertex(&self) -> usize {
        self.group.identity()
    }

    pub fn key(&self) -> String {
        let set: Vec<String> = self
            .connection
            .elements()
            .iter()
            .map(|x| x.to_string())
            .collect();
        format!("Cay({},{{{}}})", self.group.name(), set.join(","))
    }
}

impl std::fmt::Debug for CayleyGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// Builds `Cay(H, S)` with an edge `{h, s·h}` for every `h` and `s ∈ S`.
/// The result is `|S|`-regular, which is asserted per construction.
pub fn cayley_graph(h: &GroupTable, s: &ConnectionSet) -> CayleyGraph {
    let mut graph = Graph::new(h.order());
    for x in 0..h.order() {
        for &gen in s.elements() {
            let y = h.mul(gen, x);
            graph.add_edge(x, y).expect("s·h differs from h when 1 ∉ S");
        }
    }
    assert_eq!(
        graph.regular_degree(),
        Some(s.len()),
        "Cayley graph of an inverse-closed set is |S|-regular"
    );
    CayleyGraph {
        group: h.clone(),
        connection: s.clone(),
        graph,
    }
}

/// True iff `S` generates `H`, equivalently iff `Cay(H, S)` is connected.
pub fn generates(h: &GroupTable, s: &[usize]) -> bool {
    h.generates(s)
}

/// The prefix reversal `r_{1j}` on `{0..n-1}` (1-based `j`): reverses the
/// first `j` points.
pub fn prefix_reversal(n: usize, j: usize) -> Perm {
    let images: Vec<usize> = (0..n).map(|i| if i < j { j - 1 - i } else { i }).collect();
    Perm::from_images(images).expect("reversal is a bijection")
}

/// The pancake graph `P_n = Cay(S_n, {r_{1j} : 2 <= j <= n})`.
pub fn pancake_graph(n: usize) -> Result<CayleyGraph, Error> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "pancake graph supported for 2 <= n <= 6, got {n}"
        )));
    }
    let sn = GroupTable::symmetric(n);
    let set: Vec<usize> = (2..=n)
        .map(|j| symmetric_index(&prefix_reversal(n, j)))
        .collect();
    let connection = validate_connection_set(&sn, &set)?;
    Ok(cayley_graph(&sn, &connection))
}

/// The bubble-sort graph `B_n = Cay(S_n, {(1 2), (2 3), .., (n-1 n)})`.
pub fn bubble_sort_graph(n: usize) -> Result<CayleyGraph, Error> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "bubble-sort graph supported for 2 <= n <= 6, got {n}"
        )));
    }
    let sn = GroupTable::symmetric(n);
    let set: Vec<usize> = (0..n - 1)
        .map(|i| {
            symmetric_index(&Perm::transposition(n, i, i + 1).expect("adjacent transposition"))
        })
        .collect();
    let connection = validate_connection_set(&sn, &set)?;
    Ok(cayley_graph(&sn, &connection))
}

/// The transposition graph `T(S)` on `n` vertices: `{i, j}` is an edge
/// whenever the transposition `(i j)` is in `S`.
pub fn transposition_graph(n: usize, transpositions: &[Perm]) -> Result<Graph, Error> {
    let mut graph = Graph::new(n);
    for p in transpositions {
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
        let moved = p.moved_points();
        if moved.len() != 2 {
            return Err(Error::Precondition(format!(
                "{p} is not a transposition"
            )));
        }
        graph.add_edge(moved[0], moved[1])?;
    }
    Ok(graph)
}

/// True iff the transpositions generate `S_n`, i.e. `T(S)` is connected.
pub fn transpositions_generate(n: usize, transpositions: &[Perm]) -> Result<bool, Error> {
    Ok(transposition_graph(n, transpositions)?.is_connected())
}

/// A Cayley graph spec file: a preset name or group-file reference plus
/// connection-set element indices.
#[derive(Serialize, Deserialize)]
pub struct CayleySpecFile {
    pub group: String,
    pub connection_set: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    #[test]
    fn validation_examples() {
        let z5 = GroupTable::cyclic(5);
        assert!(validate_connection_set(&z5, &[1, 4]).is_ok());
        assert!(matches!(
            validate_connection_set(&z5, &[1]),
            Err(Error::ConnectionSetNotInverseClosed {
                element: 1,
                inverse: 4
            })
        ));
        let z4 = GroupTable::cyclic(4);
        assert!(matches!(
            validate_connection_set(&z4, &[0, 2]),
            Err(Error::ConnectionSetContainsIdentity { element: 0 })
        ));
    }

    #[test]
    fn cyclic_connection_set_gives_cycle() {
        let z6 = GroupTable::cyclic(6);
        let s = validate_connection_set(&z6, &[1, 5]).unwrap();
        let c = cayley_graph(&z6, &s);
        assert_eq!(c.graph().n(), 6);
        assert_eq!(c.graph().regular_degree(), Some(2));
        assert!(c.graph().is_connected());
        assert_eq!(c.graph().girth(), Some(6));
    }

    #[test]
    fn klein_full_set_gives_k4() {
        let v4 = GroupTable::elementary_abelian_2(2);
        let s = validate_connection_set(&v4, &[1, 2, 3]).unwrap();
        let c = cayley_graph(&v4, &s);
        assert_eq!(c.graph().edge_count(), 6);
        assert_eq!(c.graph().regular_degree(), Some(3));
    }

    #[test]
    fn s3_transpositions_give_k33() {
        // Cay(S_3, all transpositions) is 3-regular bipartite on 6
        // vertices with all cross edges present, i.e. K_{3,3}.
        let s3 = GroupTable::symmetric(3);
        let perms = symmetric_perms(3);
        let transpositions: Vec<usize> = (0..6)
            .filter(|&i| perms[i].moved_points().len() == 2)
            .collect();
        assert_eq!(transpositions.len(), 3);
        let s = validate_connection_set(&s3, &transpositions).unwrap();
        let c = cayley_graph(&s3, &s);
        assert_eq!(c.graph().regular_degree(), Some(3));
        let (a, b) = c.graph().bipartition().unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(b.len(), 3);
        for &u in &a {
            for &v in &b {
                assert!(c.graph().has_edge(u, v));
            }
        }
    }

    #[test]
    fn connectivity_iff_generation() {
        let z8 = GroupTable::cyclic(8);
        for set in [vec![2usize, 6], vec![1, 7], vec![3, 5], vec![4]] {
            if let Ok(s) = validate_connection_set(&z8, &set) {
                let c = cayley_graph(&z8, &s);
                assert_eq!(c.graph().is_connected(), generates(&z8, &set));
            }
        }
    }

    #[test]
    fn pancake_three_is_a_hexagon() {
        let p3 = pancake_graph(3).unwrap();
        assert_eq!(p3.graph().n(), 6);
        assert_eq!(p3.graph().regular_degree(), Some(2));
        assert!(p3.graph().is_connected());
        assert_eq!(p3.graph().girth(), Some(6));
    }

    #[test]
    fn pancake_four_counts() {
        let p4 = pancake_graph(4).unwrap();
        assert_eq!(p4.graph().n(), 24);
        assert_eq!(p4.graph().regular_degree(), Some(3));
        assert!(pancake_graph(7).is_err());
        assert!(pancake_graph(1).is_err());
    }

    #[test]
    fn prefix_reversals_are_involutions() {
        for n in 2..=6 {
            for j in 2..=n {
                let r = prefix_reversal(n, j);
                assert!((&r * &r).is_identity(), "r_{{1{j}}} in S_{n}");
            }
        }
    }

    #[test]
    fn bubble_sort_small_cases() {
        let b2 = bubble_sort_graph(2).unwrap();
        assert_eq!(b2.graph().n(), 2);
        assert_eq!(b2.graph().edge_count(), 1);
        // B_3 is a cycle graph of order six.
        let b3 = bubble_sort_graph(3).unwrap();
        assert_eq!(b3.graph().n(), 6);
        assert_eq!(b3.graph().regular_degree(), Some(2));
        assert!(b3.graph().is_connected());
        let b4 = bubble_sort_graph(4).unwrap();
        assert_eq!(b4.graph().n(), 24);
        assert_eq!(b4.graph().regular_degree(), Some(3));
        assert!(b4.graph().is_connected());
    }

    #[test]
    fn transposition_graph_shapes() {
        let adjacent: Vec<Perm> = (0..3)
            .map(|i| Perm::transposition(4, i, i + 1).unwrap())
            .collect();
        let t = transposition_graph(4, &adjacent).unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t.degree(0), 1);
        assert_eq!(t.degree(1), 2);
        assert!(transpositions_generate(4, &adjacent).unwrap());

        let mut all = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                all.push(Perm::transposition(4, i, j).unwrap());
            }
        }
        let t = transposition_graph(4, &all).unwrap();
        assert_eq!(t.edge_count(), 6);

        let single = vec![Perm::transposition(3, 0, 1).unwrap()];
        let t = transposition_graph(3, &single).unwrap();
        assert!(!t.is_connected());
        assert!(!transpositions_generate(3, &single).unwrap());

        let not_transposition = vec![Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap()];
        assert!(transposition_graph(3, &not_transposition).is_err());
    }

    #[test]
    fn right_translations_are_automorphisms() {
        use crate::permgroup::right_translation;
        let s3 = GroupTable::symmetric(3);
        let perms = symmetric_perms(3);
        let transpositions: Vec<usize> = (0..6)
            .filter(|&i| perms[i].moved_points().len() == 2)
            .collect();
        let s = validate_connection_set(&s3, &transpositions).unwrap();
        let c = cayley_graph(&s3, &s);
        for a in 0..6 {
            assert!(c.graph().is_automorphism(&right_translation(&s3, a)));
        }
    }
}
