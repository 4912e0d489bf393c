//! Sublattices of Z^n in canonical Hermite form: membership, kernels,
//! saturation, and abelian invariants of quotients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{hnf, snf_with_transforms, IntMatrix};

/// A sublattice of Z^n. The basis is a canonical row HNF, so two equal
/// lattices have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerLattice {
    ambient: usize,
    basis: IntMatrix,
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: IntMatrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: IntMatrix::identity(ambient),
        }
    }

    /// Spans the rows; redundant generators are fine.
    pub fn from_generators(ambient: usize, rows: Vec<Vec<BigInt>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "generator has wrong dimension");
        }
        if rows.is_empty() {
            return IntegerLattice::zero(ambient);
        }
        IntegerLattice {
            ambient,
            basis: hnf(&IntMatrix::from_rows(rows)),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vecs()
    }

    /// Integer coordinates of `v` in the HNF basis, or `None` when
    /// `v` is not in the lattice.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.rows);
        for r in 0..self.basis.rows {
            let pivot_col = (0..self.ambient)
                .find(|&c| !self.basis.at(r, c).is_zero())
                .expect("HNF basis rows are nonzero");
            let pivot = self.basis.at(r, pivot_col);
            let (q, rem) = w[pivot_col].div_rem(pivot);
            if !rem.is_zero() {
                return Ok(None);
            }
            for c in 0..self.ambient {
                let d = &q * self.basis.at(r, c);
                w[c] -= d;
            }
            coords.push(q);
        }
        if w.iter().all(Zero::is_zero) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates_of(v)?.is_some())
    }

    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: other.ambient,
                got: self.ambient,
            });
        }
        for r in 0..self.basis.rows {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lattice sum (span of both bases).
    pub fn sum(&self, other: &IntegerLattice) -> IntegerLattice {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        IntegerLattice::from_generators(self.ambient, rows)
    }

    /// Smallest lattice `L'` containing `self` with `L' = (L ⊗ Q) ∩ Z^n`,
    /// computed as the kernel of the integral orthogonal complement.
    pub fn saturation(&self) -> IntegerLattice {
        let complement = integer_kernel(&self.basis);
        integer_kernel(&complement.basis)
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice rank {} in Z^{}", self.rank(), self.ambient)
    }
}

/// All integer vectors `v` with `m v = 0`, as a saturated lattice in
/// Z^cols with canonical basis.
pub fn integer_kernel(m: &IntMatrix) -> IntegerLattice {
    let n = m.cols;
    if m.rows == 0 {
        return IntegerLattice::full(n);
    }
    // rows of [m^T | I] span {(m v, v)}; HNF rows with zero left block
    // give a basis of the kernel
    let aug = m.transpose().hstack(&IntMatrix::identity(n));
    let h = hnf(&aug);
    let mut rows = Vec::new();
    for r in 0..h.rows {
        if h.row(r)[..m.rows].iter().all(Zero::is_zero) {
            rows.push(h.row(r)[m.rows..].to_vec());
        }
    }
    IntegerLattice::from_generators(n, rows)
}

/// Invariant factors of a finitely generated abelian group:
/// `d_1 | d_2 | ...` with 0 encoding a free factor Z; no factor is 1.
/// Zeros sort last (everything divides 0).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianInvariants(pub Vec<BigInt>);

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants(Vec::new())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.0.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.0.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn from_u64(v: &[u64]) -> Self {
        AbelianInvariants(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariant factors of the cokernel `Z^cols / rowspace(m)`.
pub fn snf_invariants(m: &IntMatrix) -> AbelianInvariants {
    let s = snf_with_transforms(m);
    let mut inv: Vec<BigInt> = s
        .diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    let rank = s.diag.iter().filter(|d| !d.is_zero()).count();
    inv.extend(std::iter::repeat(BigInt::zero()).take(m.cols - rank));
    AbelianInvariants(inv)
}

/// Invariant factors of `big / sub`, with `sub ⊆ big` verified.
pub fn quotient_invariants(
    big: &IntegerLattice,
    sub: &IntegerLattice,
) -> Result<AbelianInvariants> {
    if big.ambient_dim() != sub.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: big.ambient_dim(),
            got: sub.ambient_dim(),
        });
    }
    let mut coord_rows = Vec::with_capacity(sub.rank());
    for r in 0..sub.rank() {
        match big.coordinates_of(sub.basis().row(r))? {
            Some(coords) => coord_rows.push(coords),
            None => return Err(Error::NotASublattice),
        }
    }
    let c = if coord_rows.is_empty() {
        IntMatrix::zero(0, big.rank())
    } else {
        IntMatrix::from_rows(coord_rows)
    };
    Ok(snf_invariants(&c))
}
