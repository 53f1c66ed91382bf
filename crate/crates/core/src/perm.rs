//! Permutations of `{0, .., n-1}`, the atom of all symmetry computation here.
//!
//! A [`Perm`] stores its image array: `images[i]` is where point `i` goes.
//! Composition is fixed crate-wide as "apply the right operand first":
//! `(p * q)(i) = p(q(i))`. Disjoint-cycle text uses 1-based points, e.g.
//! `"(1 2)(3 4 5)"`, with `"()"` for the identity.

use std::fmt;
use std::ops::Mul;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image array, checking it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range for degree {n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition `(a b)` on `{0, .., degree-1}`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Perm, Error> {
        if a >= degree || b >= degree || a == b {
            return Err(Error::InvalidPermutation(format!(
                "invalid transposition ({a} {b}) for degree {degree}"
            )));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Ok(Perm { images })
    }

    /// Builds a permutation from 0-based cycles. Points may not repeat.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, Error> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {from} out of range for degree {degree}"
                    )));
                }
                if used[from] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {from} repeated"
                    )));
                }
                used[from] = true;
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    /// Parses 1-based disjoint-cycle text, e.g. `"(1 2)(3 4 5)"` or `"()"`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidPermutation("empty cycle text".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in cycle text at {rest:?}"
                )));
            }
            let end = rest.find(')').ok_or_else(|| {
                Error::InvalidPermutation(format!("unclosed cycle in {text:?}"))
            })?;
            let body = &rest[1..end];
            rest = rest[end + 1..].trim_start();
            let mut cycle = Vec::new();
            for token in body.split([' ', ',']).filter(|t| !t.is_empty()) {
                let point: usize = token.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point {token:?} in cycle text"))
                })?;
                if point == 0 {
                    return Err(Error::InvalidPermutation(
                        "cycle points are 1-based; got 0".into(),
                    ));
                }
                cycle.push(point - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Composition applying `other` first: `result(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    /// Multiplicative order, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut result: u64 = 1;
        for cycle in self.cycles_including_fixed() {
            let len = cycle.len() as u64;
            result = result / gcd(result, len) * len;
        }
        result
    }

    fn cycles_including_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut point = self.images[start];
            while point != start {
                seen[point] = true;
                cycle.push(point);
                point = self.images[point];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_including_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    /// Largest moved point, or `None` for the identity.
    pub fn last_moved(&self) -> Option<usize> {
        (0..self.degree()).rev().find(|&i| self.images[i] != i)
    }

    pub fn smallest_moved(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.images[i] != i)
    }
}

impl Mul for &Perm {
    type Output = Perm;

    /// Panics on degree mismatch; use [`Perm::compose`] for the checked form.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, point) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", point + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All permutations of degree `n` in lexicographic order of image arrays.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut result = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        result.push(Perm {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
    result
}

fn next_permutation(arr: &mut [usize]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Lexicographic rank of an image array among all permutations of its degree.
pub fn lex_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0usize;
    let mut factorial = 1usize;
    for i in (0..n).rev() {
        let smaller = images[i + 1..].iter().filter(|&&v| v < images[i]).count();
        rank += smaller * factorial;
        factorial *= n - i;
    }
    rank
}
