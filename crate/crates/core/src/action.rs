//! Group actions on a finite point set, given by an explicit list of
//! permutations (the image of the acting group in `Sym(X)`).
//!
//! Duplicate permutations collapse on construction; the kernel of a
//! non-faithful action therefore collapses to the identity, which is
//! exactly the quotient the distinguishing machinery needs ("preserved
//! only by the stabilizer of X").

use crate::error::Error;
use crate::perm::Perm;

/// Pairwise closure is checked eagerly up to this many listed elements;
/// larger lists get a deterministic spot check.
const FULL_CLOSURE_CHECK_LIMIT: usize = 1024;

#[derive(Clone, Debug)]
pub struct GroupAction {
    degree: usize,
    perms: Vec<Perm>,
    faithful: bool,
}

impl GroupAction {
    /// Wraps a full enumeration of acting elements. The identity is
    /// inserted if missing; `faithful` records whether the input list was
    /// duplicate-free.
    pub fn new(perms: Vec<Perm>) -> Result<GroupAction, Error> {
        if perms.is_empty() {
            return Err(Error::InvalidAction("empty element list".into()));
        }
        let degree = perms[0].degree();
        for p in &perms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
        }
        let input_len = perms.len();
        let mut deduped = perms;
        deduped.sort();
        deduped.dedup();
        let faithful = deduped.len() == input_len;
        let id = Perm::identity(degree);
        if !deduped.contains(&id) {
            deduped.push(id);
            deduped.sort();
        }
        let action = GroupAction {
            degree,
            perms: deduped,
            faithful,
        };
        action.check_closure()?;
        Ok(action)
    }

    fn check_closure(&self) -> Result<(), Error> {
        let set: std::collections::HashSet<&[usize]> =
            self.perms.iter().map(|p| p.images()).collect();
        let outer: &[Perm] = if self.perms.len() <= FULL_CLOSURE_CHECK_LIMIT {
            &self.perms
        } else {
            &self.perms[..32]
        };
        for p in outer {
            for q in &self.perms {
                let product = p * q;
                if !set.contains(product.images()) {
                    return Err(Error::InvalidAction(format!(
                        "element list is not closed: {p} * {q} missing"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The deduplicated element list (the image group), identity included.
    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn faithful(&self) -> bool {
        self.faithful
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.len() == 1
    }

    /// Orbits of the action, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(x) = queue.pop() {
                orbit.push(x);
                for p in &self.perms {
                    let y = p.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        queue.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// The action restricted to an invariant subset, re-indexed by the
    /// sorted positions of `set`. Errors if `set` is not invariant.
    pub fn restrict(&self, set: &[usize]) -> Result<GroupAction, Error> {
        let mut points: Vec<usize> = set.to_vec();
        points.sort_unstable();
        points.dedup();
        for &x in &points {
            if x >= self.degree {
                return Err(Error::ElementOutOfRange {
                    index: x,
                    order: self.degree,
                });
            }
        }
        let mut position = vec![usize::MAX; self.degree];
        for (i, &x) in points.iter().enumerate() {
            position[x] = i;
        }
        let mut restricted = Vec::with_capacity(self.perms.len());
        for p in &self.perms {
            let mut images = vec![0; points.len()];
            for (i, &x) in points.iter().enumerate() {
                let y = p.apply(x);
                if position[y] == usize::MAX {
                    return Err(Error::InvalidAction(format!(
                        "set is not invariant: {p} maps {x} outside"
                    )));
                }
                images[i] = position[y];
            }
            restricted.push(Perm::from_images(images).expect("restriction of a bijection"));
        }
        let before = restricted.len();
        let mut deduped = restricted;
        deduped.sort();
        deduped.dedup();
        let faithful = self.faithful && deduped.len() == before;
        Ok(GroupAction {
            degree: points.len(),
            perms: deduped,
            faithful,
        })
    }
}
