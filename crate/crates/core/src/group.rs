//! Abstract finite groups as explicit multiplication tables.
//!
//! Elements are integer indices `0..order`. Every preset ships a fixed,
//! documented element ordering so outputs are reproducible:
//!
//! - `Z_n`: element `i` is the residue `i`, addition mod `n`.
//! - `Z_2^k`: element `i` is the bitmask `i`, product is xor.
//! - `Z_3^2`: element `3a + b` is the pair `(a, b)`, componentwise mod 3.
//! - `Q_8`: elements `[1, -1, i, -i, j, -j, k, -k]` in that order.
//! - `S_n`: element `i` is the `i`-th permutation of `{0..n-1}` in
//!   lexicographic order of image arrays; `mul[a][b]` composes with the
//!   right operand applied first, matching [`crate::perm::Perm::compose`].
//! - `D_n` (order `2n`): elements `0..n` are rotations `r^i`, `n..2n` are
//!   reflections `s r^i`.
//!
//! Tables validate the Latin-square, identity, and inverse axioms on
//! construction; associativity is checked eagerly for orders up to 256.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::{all_perms, lex_rank, Perm};

const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupTableFile {
    #[serde(default)]
    name: Option<String>,
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Validates and wraps a full multiplication table.
    pub fn from_table(name: &str, mul: Vec<Vec<usize>>) -> Result<GroupTable, Error> {
        let m = mul.len();
        if m == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidGroupTable(format!(
                    "row {i} has length {} in an order-{m} table",
                    row.len()
                )));
            }
        }
        // Latin square: every row and column is a permutation of 0..m.
        for i in 0..m {
            let mut row_seen = vec![false; m];
            let mut col_seen = vec![false; m];
            for j in 0..m {
                let r = mul[i][j];
                let c = mul[j][i];
                if r >= m || row_seen[r] {
                    return Err(Error::InvalidGroupTable(format!(
                        "row {i} is not a permutation"
                    )));
                }
                if c >= m || col_seen[c] {
                    return Err(Error::InvalidGroupTable(format!(
                        "column {i} is not a permutation"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        // Two-sided identity.
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
        // Two-sided inverses.
        let mut inv = vec![0; m];
        for x in 0..m {
            let i = (0..m)
                .find(|&y| mul[x][y] == identity && mul[y][x] == identity)
                .ok_or_else(|| {
                    Error::InvalidGroupTable(format!("element {x} has no inverse"))
                })?;
            inv[x] = i;
        }
        if m <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..m {
                for b in 0..m {
                    let ab = mul[a][b];
                    for c in 0..m {
                        if mul[ab][c] != mul[a][mul[b][c]] {
                            return Err(Error::InvalidGroupTable(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(GroupTable {
            name: name.to_string(),
            mul,
            identity,
            inv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn check_element(&self, index: usize) -> Result<(), Error> {
        if index >= self.order() {
            return Err(Error::ElementOutOfRange {
                index,
                order: self.order(),
            });
        }
        Ok(())
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut power = a;
        let mut order = 1;
        while power != self.identity {
            power = self.mul[power][a];
            order += 1;
        }
        order
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn element_order_multiset(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        orders
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|a| (a..m).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Closure of `gens` under multiplication, sorted ascending.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order()];
        in_set[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul[x][g];
                if !in_set[y] {
                    in_set[y] = true;
                    queue.push(y);
                }
            }
        }
        let mut result: Vec<usize> = (0..self.order()).filter(|&x| in_set[x]).collect();
        result.sort_unstable();
        result
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generated_subgroup(gens).len() == self.order()
    }

    /// Greedy generating set: repeatedly adjoin the smallest outside element.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        loop {
            let closure = self.generated_subgroup(&gens);
            if closure.len() == self.order() {
                return gens;
            }
            let mut in_closure = vec![false; self.order()];
            for &x in &closure {
                in_closure[x] = true;
            }
            let next = (0..self.order())
                .find(|&x| !in_closure[x])
                .expect("closure is proper, some element is outside");
            gens.push(next);
        }
    }

    /// Componentwise product group; element index is `i * |b| + j`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable, name: &str) -> GroupTable {
        let bn = b.order();
        let m = a.order() * bn;
        let mut mul = vec![vec![0; m]; m];
        for x in 0..m {
            for y in 0..m {
                let (xa, xb) = (x / bn, x % bn);
                let (ya, yb) = (y / bn, y % bn);
                mul[x][y] = a.mul(xa, ya) * bn + b.mul(xb, yb);
            }
        }
        GroupTable::from_table(name, mul).expect("direct product of valid groups is valid")
    }

    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1, "cyclic group needs order >= 1");
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::from_table(&format!("Z{n}"), mul).expect("cyclic table is valid")
    }

    pub fn elementary_abelian_2(k: usize) -> GroupTable {
        assert!(k >= 1 && k <= 12, "Z2^k supported for 1 <= k <= 12");
        let m = 1usize << k;
        let mul = (0..m).map(|a| (0..m).map(|b| a ^ b).collect()).collect();
        GroupTable::from_table(&format!("Z2^{k}"), mul).expect("xor table is valid")
    }

    pub fn z3_squared() -> GroupTable {
        let mul = (0..9)
            .map(|x: usize| {
                (0..9)
                    .map(|y: usize| {
                        let (xa, xb) = (x / 3, x % 3);
                        let (ya, yb) = (y / 3, y % 3);
                        ((xa + ya) % 3) * 3 + (xb + yb) % 3
                    })
                    .collect()
            })
            .collect();
        GroupTable::from_table("Z3^2", mul).expect("Z3^2 table is valid")
    }

    /// Quaternion group on `[1, -1, i, -i, j, -j, k, -k]`.
    pub fn quaternion() -> GroupTable {
        // Basis products as (sign, basis) with bases 0=1, 1=i, 2=j, 3=k.
        fn basis_mul(a: usize, b: usize) -> (bool, usize) {
            match (a, b) {
                (0, x) => (false, x),
                (x, 0) => (false, x),
                (1, 1) | (2, 2) | (3, 3) => (true, 0),
                (1, 2) => (false, 3),
                (2, 1) => (true, 3),
                (2, 3) => (false, 1),
                (3, 2) => (true, 1),
                (3, 1) => (false, 2),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        }
        let decode = |x: usize| (x % 2 == 1, x / 2); // (negative, basis)
        let encode = |neg: bool, basis: usize| basis * 2 + usize::from(neg);
        let mul = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (xn, xb) = decode(x);
                        let (yn, yb) = decode(y);
                        let (pn, pb) = basis_mul(xb, yb);
                        encode(xn ^ yn ^ pn, pb)
                    })
                    .collect()
            })
            .collect();
        GroupTable::from_table("Q8", mul).expect("quaternion table is valid")
    }

    /// Dihedral group of order `2n`: `ε·n + i` encodes `s^ε r^i`.
    pub fn dihedral(n: usize) -> GroupTable {
        assert!(n >= 3, "dihedral group D_n needs n >= 3");
        let m = 2 * n;
        let mul = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        let (e1, i1) = (x / n, x % n);
                        let (e2, i2) = (y / n, y % n);
                        // s^e1 r^i1 · s^e2 r^i2 = s^(e1+e2) r^(i2 ± i1)
                        let i = if e2 == 1 {
                            (n + i2 - i1) % n
                        } else {
                            (i1 + i2) % n
                        };
                        ((e1 + e2) % 2) * n + i
                    })
                    .collect()
            })
            .collect();
        GroupTable::from_table(&format!("D{n}"), mul).expect("dihedral table is valid")
    }

    /// Symmetric group on `n` letters; see the module docs for the ordering.
    pub fn symmetric(n: usize) -> GroupTable {
        assert!(n >= 1 && n <= 6, "S_n table supported for 1 <= n <= 6");
        let perms = all_perms(n);
        let m = perms.len();
        let mul = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| lex_rank((&perms[a] * &perms[b]).images()))
                    .collect()
            })
            .collect();
        GroupTable::from_table(&format!("S{n}"), mul).expect("symmetric table is valid")
    }

    /// Looks up a preset by name: `Z<n>`, `Z2^2..Z2^4`, `Z3^2`, `Q8`,
    /// `D<n>`, `S2..S6`.
    pub fn preset(name: &str) -> Option<GroupTable> {
        let name = name.trim();
        match name {
            "Q8" => return Some(GroupTable::quaternion()),
            "Z3^2" => return Some(GroupTable::z3_squared()),
            _ => {}
        }
        if let Some(k) = name.strip_prefix("Z2^") {
            let k: usize = k.parse().ok()?;
            if (2..=12).contains(&k) {
                return Some(GroupTable::elementary_abelian_2(k));
            }
            return None;
        }
        if let Some(n) = name.strip_prefix('Z') {
            let n: usize = n.parse().ok()?;
            if (1..=4096).contains(&n) {
                return Some(GroupTable::cyclic(n));
            }
            return None;
        }
        if let Some(n) = name.strip_prefix('D') {
            let n: usize = n.parse().ok()?;
            if (3..=2048).contains(&n) {
                return Some(GroupTable::dihedral(n));
            }
            return None;
        }
        if let Some(n) = name.strip_prefix('S') {
            let n: usize = n.parse().ok()?;
            if (1..=6).contains(&n) {
                return Some(GroupTable::symmetric(n));
            }
            return None;
        }
        None
    }

    /// The documented preset library (used as the harness corpus pool).
    pub fn preset_library() -> Vec<GroupTable> {
        let mut groups: Vec<GroupTable> = (2..=12).map(GroupTable::cyclic).collect();
        groups.push(GroupTable::elementary_abelian_2(2));
        groups.push(GroupTable::elementary_abelian_2(3));
        groups.push(GroupTable::elementary_abelian_2(4));
        groups.push(GroupTable::z3_squared());
        groups.push(GroupTable::quaternion());
        groups.push(GroupTable::symmetric(3));
        groups.push(GroupTable::symmetric(4));
        groups.push(GroupTable::symmetric(5));
        groups.push(GroupTable::dihedral(4));
        groups.push(GroupTable::dihedral(5));
        groups.push(GroupTable::dihedral(6));
        groups
    }

    pub fn to_json(&self) -> String {
        let file = GroupTableFile {
            name: Some(self.name.clone()),
            order: self.order(),
            identity: self.identity,
            table: self.mul.clone(),
        };
        serde_json::to_string_pretty(&file).expect("group table serializes")
    }

    pub fn from_json(text: &str) -> Result<GroupTable, Error> {
        let file: GroupTableFile = serde_json::from_str(text)?;
        if file.table.len() != file.order {
            return Err(Error::InvalidGroupTable(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        let table = GroupTable::from_table(
            file.name.as_deref().unwrap_or("unnamed"),
            file.table,
        )?;
        if table.identity() != file.identity {
            return Err(Error::InvalidGroupTable(format!(
                "declared identity {} but table identity is {}",
                file.identity,
                table.identity()
            )));
        }
        Ok(table)
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.order())
    }
}

/// The permutations of `S_n` in table-index order (lexicographic).
pub fn symmetric_perms(n: usize) -> Vec<Perm> {
    all_perms(n)
}

/// Index of a degree-`n` permutation in the `S_n` preset table.
pub fn symmetric_index(p: &Perm) -> usize {
    lex_rank(p.images())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_pass_validation() {
        // from_table re-validates everything, so construction is the test.
        for g in GroupTable::preset_library() {
            assert_eq!(
                g.mul(g.identity(), 0),
                0,
                "identity fails in {}",
                g.name()
            );
            for x in 0..g.order() {
                assert_eq!(g.mul(x, g.inv(x)), g.identity());
            }
        }
    }

    #[test]
    fn cyclic_orders() {
        let z6 = GroupTable::cyclic(6);
        assert_eq!(z6.element_order(1), 6);
        assert_eq!(z6.element_order(2), 3);
        assert_eq!(z6.element_order(3), 2);
        assert!(z6.is_abelian());
    }

    #[test]
    fn quaternion_structure() {
        let q8 = GroupTable::quaternion();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.element_order_multiset(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q8.is_abelian());
        // i * j = k: indices 2 * 4 = 6.
        assert_eq!(q8.mul(2, 4), 6);
        // j * i = -k.
        assert_eq!(q8.mul(4, 2), 7);
    }

    #[test]
    fn dihedral_structure() {
        let d4 = GroupTable::dihedral(4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.element_order_multiset(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn symmetric_matches_permutation_composition() {
        let s4 = GroupTable::symmetric(4);
        let perms = symmetric_perms(4);
        for a in 0..24 {
            for b in 0..24 {
                let expected = symmetric_index(&(&perms[a] * &perms[b]));
                assert_eq!(s4.mul(a, b), expected);
            }
        }
        assert_eq!(s4.identity(), 0);
    }

    #[test]
    fn generation_and_minimal_sets() {
        let s4 = GroupTable::symmetric(4);
        let gens = s4.minimal_generating_set();
        assert!(s4.generates(&gens));
        assert!(gens.len() <= 2 + 1);
        let z12 = GroupTable::cyclic(12);
        assert_eq!(z12.generated_subgroup(&[4]), vec![0, 4, 8]);
        assert!(!z12.generates(&[2]));
        assert!(z12.generates(&[1]));
    }

    #[test]
    fn direct_product_is_componentwise() {
        let v4 = GroupTable::direct_product(
            &GroupTable::cyclic(2),
            &GroupTable::cyclic(2),
            "Z2xZ2",
        );
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.element_order_multiset(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn json_round_trip() {
        let q8 = GroupTable::quaternion();
        let text = q8.to_json();
        let back = GroupTable::from_json(&text).unwrap();
        assert_eq!(back, q8);
    }

    #[test]
    fn json_rejects_bad_tables() {
        // A table whose row repeats an element is not a Latin square.
        let text = r#"{"order": 2, "identity": 0, "table": [[0, 0], [1, 1]]}"#;
        assert!(GroupTable::from_json(text).is_err());
    }

    #[test]
    fn preset_lookup() {
        assert_eq!(GroupTable::preset("Z6").unwrap().order(), 6);
        assert_eq!(GroupTable::preset("Z2^3").unwrap().order(), 8);
        assert_eq!(GroupTable::preset("S5").unwrap().order(), 120);
        assert_eq!(GroupTable::preset("D6").unwrap().order(), 12);
        assert!(GroupTable::preset("nonsense").is_none());
    }
}
