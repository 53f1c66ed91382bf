//! Group automorphisms of a multiplication table, found by backtracking
//! over generator images.
//!
//! A generating set is chosen greedily; each generator may only map to an
//! element of the same order, and every partial assignment is extended by
//! closure with full consistency checking, so a completed map is a
//! homomorphism by construction. The search is capped (default order 64)
//! and refuses with a typed error above the cap rather than returning a
//! partial list.

use crate::action::GroupAction;
use crate::error::Error;
use crate::group::GroupTable;
use crate::perm::Perm;

pub const DEFAULT_AUT_CAP: usize = 64;

/// An automorphism of an abstract group, as a bijection on element indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupAutomorphism {
    map: Vec<usize>,
}

impl GroupAutomorphism {
    /// Validates `map` against `table`: bijection, `map[e] = e`, and
    /// `map[x·y] = map[x]·map[y]` for all pairs.
    pub fn new(table: &GroupTable, map: Vec<usize>) -> Result<GroupAutomorphism, Error> {
        let m = table.order();
        if map.len() != m {
            return Err(Error::InvalidGroupTable(format!(
                "automorphism map has length {} for order {m}",
                map.len()
            )));
        }
        Perm::from_images(map.clone())
            .map_err(|_| Error::InvalidGroupTable("automorphism map is not a bijection".into()))?;
        if map[table.identity()] != table.identity() {
            return Err(Error::InvalidGroupTable(
                "automorphism must fix the identity".into(),
            ));
        }
        for x in 0..m {
            for y in 0..m {
                if map[table.mul(x, y)] != table.mul(map[x], map[y]) {
                    return Err(Error::InvalidGroupTable(format!(
                        "map is not a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(GroupAutomorphism { map })
    }

    fn from_checked(map: Vec<usize>) -> GroupAutomorphism {
        GroupAutomorphism { map }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The automorphism as a permutation of element indices.
    pub fn as_perm(&self) -> Perm {
        Perm::from_images(self.map.clone()).expect("automorphism map is a bijection")
    }

    /// Composition applying `other` first, consistent with [`Perm::compose`].
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            map: other.map.iter().map(|&v| self.map[v]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        GroupAutomorphism { map }
    }
}

impl std::fmt::Debug for GroupAutomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupAutomorphism({:?})", self.map)
    }
}

/// Extends `images[gens[i]] = targets[i]` to the generated subgroup by
/// closure. Returns the completed partial map, or `None` on conflict
/// (non-homomorphism or non-injectivity).
fn extend_by_closure(
    table: &GroupTable,
    gens: &[usize],
    targets: &[usize],
) -> Option<Vec<Option<usize>>> {
    let m = table.order();
    let e = table.identity();
    let mut map: Vec<Option<usize>> = vec![None; m];
    let mut used = vec![false; m];
    map[e] = Some(e);
    used[e] = true;
    let mut known = vec![e];
    let mut head = 0;
    while head < known.len() {
        let x = known[head];
        head += 1;
        let fx = map[x].expect("known elements are mapped");
        for (i, &g) in gens.iter().enumerate() {
            let y = table.mul(x, g);
            let fy = table.mul(fx, targets[i]);
            match map[y] {
                Some(existing) => {
                    if existing != fy {
                        return None;
                    }
                }
                None => {
                    if used[fy] {
                        return None;
                    }
                    map[y] = Some(fy);
                    used[fy] = true;
                    known.push(y);
                }
            }
        }
    }
    Some(map)
}

/// Complete list of `Aut(H)` with the default cap of 64.
pub fn group_automorphisms(h: &GroupTable) -> Result<Vec<GroupAutomorphism>, Error> {
    group_automorphisms_capped(h, DEFAULT_AUT_CAP)
}

/// Complete list of `Aut(H)`, refusing when `|H| > cap`.
pub fn group_automorphisms_capped(
    h: &GroupTable,
    cap: usize,
) -> Result<Vec<GroupAutomorphism>, Error> {
    let m = h.order();
    if m > cap {
        return Err(Error::CapExceeded { order: m, cap });
    }
    let gens = h.minimal_generating_set();
    if gens.is_empty() {
        return Ok(vec![GroupAutomorphism::from_checked(vec![h.identity()])]);
    }
    let orders: Vec<usize> = (0..m).map(|x| h.element_order(x)).collect();
    let mut results = Vec::new();
    let mut targets = vec![0usize; gens.len()];
    search_images(h, &gens, &orders, 0, &mut targets, &mut results);
    results.sort();
    Ok(results)
}

fn search_images(
    h: &GroupTable,
    gens: &[usize],
    orders: &[usize],
    depth: usize,
    targets: &mut Vec<usize>,
    results: &mut Vec<GroupAutomorphism>,
) {
    if depth == gens.len() {
        if let Some(map) = extend_by_closure(h, gens, targets) {
            if map.iter().all(|v| v.is_some()) {
                let map: Vec<usize> = map.into_iter().map(|v| v.unwrap()).collect();
                results.push(GroupAutomorphism::from_checked(map));
            }
        }
        return;
    }
    let want = orders[gens[depth]];
    for candidate in 0..h.order() {
        if orders[candidate] != want {
            continue;
        }
        targets[depth] = candidate;
        // Prune: the partial assignment must already be consistent.
        if extend_by_closure(h, &gens[..=depth], &targets[..=depth]).is_none() {
            continue;
        }
        search_images(h, gens, orders, depth + 1, targets, results);
    }
}

/// `Aut(H, S)`: the automorphisms of `H` mapping `S` onto `S` setwise.
pub fn aut_fixing_set(h: &GroupTable, s: &[usize]) -> Result<Vec<GroupAutomorphism>, Error> {
    aut_fixing_set_capped(h, s, DEFAULT_AUT_CAP)
}

pub fn aut_fixing_set_capped(
    h: &GroupTable,
    s: &[usize],
    cap: usize,
) -> Result<Vec<GroupAutomorphism>, Error> {
    for &x in s {
        h.check_element(x)?;
    }
    let mut member = vec![false; h.order()];
    for &x in s {
        member[x] = true;
    }
    let auts = group_automorphisms_capped(h, cap)?;
    Ok(auts
        .into_iter()
        .filter(|f| s.iter().all(|&x| member[f.apply(x)]))
        .collect())
}

/// The natural action of a list of group automorphisms on element indices.
pub fn automorphism_action(auts: &[GroupAutomorphism]) -> Result<GroupAction, Error> {
    GroupAction::new(auts.iter().map(|f| f.as_perm()).collect())
}

/// Detects the five exceptional groups `Z2^2`, `Z2^3`, `Z3^2`, `Z2^4`,
/// `Q8` by order plus element-order multiset. Sound for exactly these
/// five because each is determined by those invariants among groups of
/// its order.
pub fn exceptional_group(h: &GroupTable) -> Option<&'static str> {
    let m = h.order();
    let orders = h.element_order_multiset();
    let all_involutions = orders.iter().skip(1).all(|&o| o == 2);
    match m {
        4 if all_involutions => Some("Z2^2"),
        8 if all_involutions => Some("Z2^3"),
        8 if orders == [1, 2, 4, 4, 4, 4, 4, 4] => Some("Q8"),
        9 if orders.iter().skip(1).all(|&o| o == 3) => Some("Z3^2"),
        16 if all_involutions => Some("Z2^4"),
        _ => None,
    }
}
