//! Permutation groups with a base and strong generating set.
//!
//! The stabilizer chain is built by a deterministic Schreier–Sims (no
//! randomized variants), so orders, membership tests, and element
//! enumeration are reproducible across runs. Construction is lazy and
//! race-free: at most one construction wins and all readers see a fully
//! built chain.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::Error;
use crate::group::GroupTable;
use crate::perm::Perm;

/// Element enumeration refuses above this order.
pub const ELEMENT_ENUMERATION_CAP: u128 = 4_000_000;

#[derive(Debug)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    transversal: HashMap<usize, Perm>,
}

impl Level {
    fn new(degree: usize, point: usize, gens: Vec<Perm>) -> Level {
        let mut level = Level {
            point,
            gens,
            orbit: Vec::new(),
            transversal: HashMap::new(),
        };
        level.recompute(degree);
        level
    }

    fn recompute(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal.clear();
        self.orbit.push(self.point);
        self.transversal
            .insert(self.point, Perm::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            let ux = self.transversal[&x].clone();
            for g in &self.gens {
                let y = g.apply(x);
                if !self.transversal.contains_key(&y) {
                    self.transversal.insert(y, g * &ux);
                    self.orbit.push(y);
                }
            }
        }
    }
}

#[derive(Debug)]
struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Strips `g` through levels `start..`; returns the residue and the
    /// first level it could not pass (or `levels.len()` if it passed all).
    fn sift_from(&self, start: usize, g: &Perm) -> (Perm, usize) {
        let mut residue = g.clone();
        for (offset, level) in self.levels[start..].iter().enumerate() {
            let image = residue.apply(level.point);
            match level.transversal.get(&image) {
                None => return (residue, start + offset),
                Some(u) => residue = &u.inverse() * &residue,
            }
        }
        (residue, self.levels.len())
    }

    fn build(degree: usize, generators: &[Perm], base_hint: &[usize]) -> StabChain {
        let mut gens: Vec<Perm> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &p in base_hint {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved().expect("non-identity moves a point"));
            }
        }
        if base.is_empty() {
            base.push(0.min(degree.saturating_sub(1)));
        }
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if degree == 0 {
            return chain;
        }
        for (i, &point) in base.iter().enumerate() {
            let level_gens: Vec<Perm> = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            chain.levels.push(Level::new(degree, point, level_gens));
        }

        // Verify the chain bottom-up: every Schreier generator of level i
        // must sift to the identity through the deeper levels; residues
        // become new strong generators.
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut clean = true;
            'witness: for oi in 0..chain.levels[li].orbit.len() {
                let delta = chain.levels[li].orbit[oi];
                let u_delta = chain.levels[li].transversal[&delta].clone();
                for si in 0..chain.levels[li].gens.len() {
                    let s = chain.levels[li].gens[si].clone();
                    let image = s.apply(delta);
                    let u_image = chain.levels[li].transversal[&image].clone();
                    let schreier = &u_image.inverse() * &(&s * &u_delta);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, mut j) = chain.sift_from(li + 1, &schreier);
                    if residue.is_identity() {
                        continue;
                    }
                    clean = false;
                    if j == chain.levels.len() {
                        let new_point = residue
                            .smallest_moved()
                            .expect("non-identity residue moves a point");
                        chain
                            .levels
                            .push(Level::new(degree, new_point, Vec::new()));
                        j = chain.levels.len() - 1;
                    }
                    for level in &mut chain.levels[li + 1..=j] {
                        level.gens.push(residue.clone());
                        level.recompute(degree);
                    }
                    i = j as isize;
                    break 'witness;
                }
            }
            if clean {
                i -= 1;
            }
        }
        chain
    }

    fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(0, g);
        residue.is_identity()
    }
}

/// A permutation group given by generators, with BSGS data on demand.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    base_hint: Vec<usize>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new())
    }

    pub fn new(degree: usize, generators: Vec<Perm>) -> PermGroup {
        PermGroup {
            degree,
            generators,
            base_hint: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    /// Checks the generators share `degree` before wrapping them.
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, Error> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup::new(degree, generators))
    }

    fn with_base_hint(degree: usize, generators: Vec<Perm>, hint: Vec<usize>) -> PermGroup {
        PermGroup {
            degree,
            generators,
            base_hint: hint,
            chain: OnceLock::new(),
        }
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &self.base_hint))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Group order (saturating at `u128::MAX`, far beyond corpus scale).
    pub fn order(&self) -> u128 {
        if self.degree == 0 {
            return 1;
        }
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        if g.is_identity() {
            return true;
        }
        self.chain().contains(g)
    }

    /// Base points of the stabilizer chain, for tests and diagnostics.
    pub fn base(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.point).collect()
    }

    /// Every group element, enumerated deterministically from the chain.
    pub fn elements(&self) -> Result<Vec<Perm>, Error> {
        let order = self.order();
        if order > ELEMENT_ENUMERATION_CAP {
            return Err(Error::BudgetExceeded(format!(
                "group order {order} exceeds enumeration cap {ELEMENT_ENUMERATION_CAP}"
            )));
        }
        let mut result = vec![Perm::identity(self.degree)];
        if self.degree == 0 {
            return Ok(result);
        }
        for level in self.chain().levels.iter().rev() {
            let mut next = Vec::with_capacity(result.len() * level.orbit.len());
            for delta in &level.orbit {
                let u = &level.transversal[delta];
                for h in &result {
                    next.push(u * h);
                }
            }
            result = next;
        }
        Ok(result)
    }

    /// Orbits of the natural action on `{0..degree-1}`, sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for g in &self.generators {
            for x in 0..self.degree {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut buckets: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..self.degree {
            buckets.entry(find(&mut parent, x)).or_default().push(x);
        }
        let mut orbits: Vec<Vec<usize>> = buckets.into_values().collect();
        orbits.sort();
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Orbit of a single point under the generators.
    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// The stabilizer of `point`, via a chain rebuilt with `point` first
    /// in the base.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup, Error> {
        if point >= self.degree {
            return Err(Error::ElementOutOfRange {
                index: point,
                order: self.degree,
            });
        }
        let rebased = PermGroup::with_base_hint(
            self.degree,
            self.generators.clone(),
            vec![point],
        );
        let chain = rebased.chain();
        debug_assert_eq!(chain.levels.first().map(|l| l.point), Some(point));
        let gens = if chain.levels.len() > 1 {
            chain.levels[1].gens.clone()
        } else {
            Vec::new()
        };
        Ok(PermGroup::new(self.degree, gens))
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} generators)",
            self.degree,
            self.generators.len()
        )
    }
}

/// Deterministic Schreier–Sims over a generator list.
pub fn schreier_sims(degree: usize, generators: &[Perm]) -> Result<PermGroup, Error> {
    let group = PermGroup::from_generators(degree, generators.to_vec())?;
    group.order(); // force construction eagerly
    Ok(group)
}

/// Brute-force closure of a generator list, for oracle checks. Fails above
/// `cap` elements.
pub fn closure_elements(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>, Error> {
    let mut elements = vec![Perm::identity(degree)];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(elements[0].images().to_vec(), ());
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            let product = g * &current;
            if !seen.contains_key(product.images()) {
                seen.insert(product.images().to_vec(), ());
                elements.push(product);
                if elements.len() > cap {
                    return Err(Error::BudgetExceeded(format!(
                        "closure exceeded {cap} elements"
                    )));
                }
            }
        }
    }
    Ok(elements)
}

/// True iff `sub` is normal in `sup`: `g^-1 h g` stays in `sub` for every
/// generator `h` of `sub` and `g` of `sup`. Requires `sub ⊆ sup`.
pub fn is_subgroup_normal(sub: &PermGroup, sup: &PermGroup) -> Result<bool, Error> {
    if sub.degree() != sup.degree() {
        return Err(Error::DegreeMismatch {
            left: sub.degree(),
            right: sup.degree(),
        });
    }
    for h in sub.generators() {
        if !sup.contains(h) {
            return Err(Error::Precondition(format!(
                "subgroup generator {h} is not a member of the supergroup"
            )));
        }
    }
    for g in sup.generators() {
        let g_inv = g.inverse();
        for h in sub.generators() {
            let conjugate = &(&g_inv * h) * g;
            if !sub.contains(&conjugate) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The right regular representation `R(H)`: `R(a)` sends `x` to `x·a`.
pub fn right_regular(h: &GroupTable) -> PermGroup {
    let gens: Vec<Perm> = (0..h.order())
        .filter(|&a| a != h.identity())
        .map(|a| right_translation(h, a))
        .collect();
    PermGroup::new(h.order(), gens)
}

/// `R(a): x ↦ x·a` as a permutation of element indices.
pub fn right_translation(h: &GroupTable, a: usize) -> Perm {
    Perm::from_images((0..h.order()).map(|x| h.mul(x, a)).collect())
        .expect("rows of a group table are permutations")
}

/// `L(b): x ↦ b⁻¹·x` as a permutation of element indices.
pub fn left_translation(h: &GroupTable, b: usize) -> Result<Perm, Error> {
    h.check_element(b)?;
    let b_inv = h.inv(b);
    Ok(Perm::from_images((0..h.order()).map(|x| h.mul(b_inv, x)).collect())
        .expect("columns of a group table are permutations"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = schreier_sims(5, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Perm::identity(5)));
        assert!(!g.contains(&Perm::transposition(5, 0, 1).unwrap()));
    }

    #[test]
    fn s4_from_standard_generators() {
        let gens = vec![
            Perm::transposition(4, 0, 1).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
        ];
        let g = schreier_sims(4, &gens).unwrap();
        assert_eq!(g.order(), 24);
        for p in all_perms(4) {
            assert!(g.contains(&p));
        }
    }

    #[test]
    fn klein_four_membership() {
        let gens = vec![
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
        ];
        let g = schreier_sims(4, &gens).unwrap();
        assert_eq!(g.order(), 4);
        let third = Perm::from_cycles(4, &[vec![0, 3], vec![1, 2]]).unwrap();
        assert!(g.contains(&third));
        assert!(!g.contains(&Perm::transposition(4, 0, 1).unwrap()));
    }

    #[test]
    fn bsgs_order_matches_closure_on_random_generator_sets() {
        // Deterministic pseudo-random generator sets of degree <= 7.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260810);
        for _ in 0..25 {
            let degree = rng.gen_range(2..=7);
            let count = rng.gen_range(1..=3);
            let mut gens = Vec::new();
            for _ in 0..count {
                let mut images: Vec<usize> = (0..degree).collect();
                for i in (1..degree).rev() {
                    let j = rng.gen_range(0..=i);
                    images.swap(i, j);
                }
                gens.push(Perm::from_images(images).unwrap());
            }
            let bsgs = schreier_sims(degree, &gens).unwrap();
            let closure = closure_elements(degree, &gens, 10_000).unwrap();
            assert_eq!(bsgs.order(), closure.len() as u128);
            for p in &closure {
                assert!(bsgs.contains(p));
            }
        }
    }

    #[test]
    fn elements_enumeration_matches_order() {
        let gens = vec![
            Perm::transposition(5, 0, 1).unwrap(),
            Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
        ];
        let g = schreier_sims(5, &gens).unwrap();
        assert_eq!(g.order(), 120);
        let elements = g.elements().unwrap();
        assert_eq!(elements.len(), 120);
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
    }

    #[test]
    fn point_stabilizer_has_index_orbit_size() {
        let gens = vec![
            Perm::transposition(5, 0, 1).unwrap(),
            Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
        ];
        let g = schreier_sims(5, &gens).unwrap();
        let stab = g.point_stabilizer(2).unwrap();
        assert_eq!(stab.order(), 24);
        for p in stab.generators() {
            assert_eq!(p.apply(2), 2);
        }
    }

    #[test]
    fn normality_checks() {
        let s3 = schreier_sims(
            3,
            &[
                Perm::transposition(3, 0, 1).unwrap(),
                Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        // Any group is normal in itself.
        assert!(is_subgroup_normal(&s3, &s3).unwrap());
        // <(0 1)> is not normal in S_3: conjugating by (0 2) leaves the span.
        let sub = schreier_sims(3, &[Perm::transposition(3, 0, 1).unwrap()]).unwrap();
        assert!(!is_subgroup_normal(&sub, &s3).unwrap());
        // The Klein four-group is normal in S_4.
        let s4 = schreier_sims(
            4,
            &[
                Perm::transposition(4, 0, 1).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let klein = schreier_sims(
            4,
            &[
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_subgroup_normal(&klein, &s4).unwrap());
        // Subgroup containment is a precondition.
        let not_sub = schreier_sims(4, &[Perm::transposition(4, 0, 1).unwrap()]).unwrap();
        let small = schreier_sims(4, &[Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap()]).unwrap();
        assert!(matches!(
            is_subgroup_normal(&not_sub, &small),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn right_regular_is_regular() {
        use crate::group::GroupTable;
        for table in [
            GroupTable::cyclic(2),
            GroupTable::direct_product(
                &GroupTable::cyclic(2),
                &GroupTable::cyclic(2),
                "Z2xZ2",
            ),
            GroupTable::symmetric(3),
            GroupTable::quaternion(),
        ] {
            let r = right_regular(&table);
            assert_eq!(r.order(), table.order() as u128);
            // Exactly one translation maps x to y, for all x, y.
            for x in 0..table.order() {
                for y in 0..table.order() {
                    let count = (0..table.order())
                        .filter(|&a| right_translation(&table, a).apply(x) == y)
                        .count();
                    assert_eq!(count, 1);
                }
            }
        }
    }

    #[test]
    fn klein_translations_are_double_transpositions() {
        use crate::group::GroupTable;
        let v4 = GroupTable::direct_product(
            &GroupTable::cyclic(2),
            &GroupTable::cyclic(2),
            "Z2xZ2",
        );
        for a in 1..4 {
            let p = right_translation(&v4, a);
            assert_eq!(p.cycles().len(), 2);
            assert!(p.cycles().iter().all(|c| c.len() == 2));
        }
    }

    #[test]
    fn left_and_right_translations_commute() {
        use crate::group::GroupTable;
        let s3 = GroupTable::symmetric(3);
        for a in 0..6 {
            for b in 0..6 {
                let l = left_translation(&s3, b).unwrap();
                let r = right_translation(&s3, a);
                assert_eq!(&l * &r, &r * &l);
            }
        }
    }

    #[test]
    fn left_translation_by_identity_is_identity() {
        use crate::group::GroupTable;
        let z5 = GroupTable::cyclic(5);
        assert!(left_translation(&z5, 0).unwrap().is_identity());
        assert!(matches!(
            left_translation(&z5, 9),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn translation_pairs_are_distinct_in_s4() {
        use crate::group::GroupTable;
        // The 48 maps R(a)∘L(b) with b in {id, reversal} are pairwise
        // distinct, cross-checking unique R(a)L(b) decomposition.
        let s4 = GroupTable::symmetric(4);
        let sigma = crate::group::symmetric_index(
            &Perm::from_images(vec![3, 2, 1, 0]).unwrap(),
        );
        let mut maps = Vec::new();
        for b in [0, sigma] {
            for a in 0..24 {
                let l = left_translation(&s4, b).unwrap();
                let r = right_translation(&s4, a);
                maps.push(&r * &l);
            }
        }
        let mut dedup = maps.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 48);
    }
}
