//! Permutations of the point set `0..degree`.

use std::fmt;

use crate::error::{Error, Result};

/// Point acted on by a permutation. Degrees are bounded by the group
/// order bound (default 2000), so `u16` is always sufficient.
pub type Point = u16;

/// A permutation stored as its image map: `map[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    map: Vec<Point>,
}

impl Perm {
    /// Builds a permutation from an image map, rejecting non-bijections.
    pub fn new(map: Vec<Point>) -> Result<Self> {
        let n = map.len();
        if n > u16::MAX as usize {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = vec![false; n];
        for &p in &map {
            if (p as usize) >= n || seen[p as usize] {
                return Err(Error::InvalidPermutation);
            }
            seen[p as usize] = true;
        }
        Ok(Perm { map })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            map: (0..degree as Point).collect(),
        }
    }

    /// Builds a permutation from disjoint-cycle data on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<Point>]) -> Result<Self> {
        let mut map: Vec<Point> = (0..degree as Point).collect();
        for cyc in cycles {
            for i in 0..cyc.len() {
                let from = cyc[i] as usize;
                if from >= degree {
                    return Err(Error::InvalidPermutation);
                }
                map[from] = cyc[(i + 1) % cyc.len()];
            }
        }
        Perm::new(map)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: Point) -> Point {
        self.map[point as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// `self * other` applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&p| self.map[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0 as Point; self.map.len()];
        for (i, &p) in self.map.iter().enumerate() {
            map[p as usize] = i as Point;
        }
        Perm { map }
    }

    /// Multiplicative order, as lcm of cycle lengths.
    pub fn order(&self) -> u32 {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut ord: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.map[p] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord as u32
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.map[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.map[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3]).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let a = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        // (0 1 2)(0 1) applies the transposition first: 0 -> 1 -> 2.
        let c = a.compose(&b);
        assert_eq!(c.apply(0), 2);
        assert_eq!(a.order(), 3);
        assert_eq!(b.order(), 2);
        assert_eq!(Perm::identity(5).order(), 1);
    }

    #[test]
    fn display_cycles() {
        let a = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(a.to_string(), "(0 1 2)");
        assert_eq!(Perm::identity(2).to_string(), "()");
    }
}
