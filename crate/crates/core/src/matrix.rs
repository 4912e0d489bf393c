//! Exact integer matrices: Hermite and Smith normal forms, kernels and
//! linear solving. Entries are arbitrary-precision; nothing in this
//! module rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    /// row[dst] -= k * row[src]
    pub fn row_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(dst, c) - k * self.at(src, c);
            *self.at_mut(dst, c) = v;
        }
    }

    /// col[dst] -= k * col[src]
    pub fn col_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, dst) - k * self.at(r, src);
            *self.at_mut(r, dst) = v;
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMatrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.at_mut(r, c) = self.at(r, c).clone();
            }
            for c in 0..other.cols {
                *m.at_mut(r, self.cols + c) = other.at(r, c).clone();
            }
        }
        m
    }

    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.row_vecs();
        rows.extend(other.row_vecs());
        IntMatrix::from_rows(rows)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<BigInt>()
            })
            .collect()
    }

    pub fn truncate_rows(&mut self, keep: usize) {
        debug_assert!(self.data[keep * self.cols..].iter().all(Zero::is_zero));
        self.data.truncate(keep * self.cols);
        self.rows = keep;
    }
}

/// Canonical row Hermite normal form: pivots positive, entries above a
/// pivot reduced into `[0, pivot)`, pivot columns strictly increasing,
/// zero rows dropped. Two row lattices are equal iff their HNFs are
/// identical.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut m = m.clone();
    let (nr, nc) = (m.rows, m.cols);
    let mut pr = 0usize;
    for col in 0..nc {
        if pr == nr {
            break;
        }
        loop {
            // smallest nonzero pivot keeps intermediate entries tame
            let mut best: Option<usize> = None;
            for r in pr..nr {
                if !m.at(r, col).is_zero()
                    && best.map_or(true, |b| m.at(r, col).abs() < m.at(b, col).abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(pr, b);
            let pivot = m.at(pr, col).clone();
            let mut again = false;
            for r in pr + 1..nr {
                if !m.at(r, col).is_zero() {
                    let q = m.at(r, col).div_floor(&pivot);
                    m.row_axpy(r, pr, &q);
                    if !m.at(r, col).is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if !m.at(pr, col).is_zero() {
            if m.at(pr, col).is_negative() {
                m.negate_row(pr);
            }
            let pivot = m.at(pr, col).clone();
            for r in 0..pr {
                let q = m.at(r, col).div_floor(&pivot);
                m.row_axpy(r, pr, &q);
            }
            pr += 1;
        }
    }
    m.truncate_rows(pr);
    m
}

/// Smith normal form decomposition `u * m * v = diag`.
pub struct SnfDecomposition {
    pub diag: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn snf_with_transforms(m: &IntMatrix) -> SnfDecomposition {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let t_max = a.rows.min(a.cols);
    let mut t = 0usize;
    'outer: while t < t_max {
        let mut best: Option<(usize, usize)> = None;
        for r in t..a.rows {
            for c in t..a.cols {
                if !a.at(r, c).is_zero()
                    && best.map_or(true, |(br, bc)| a.at(r, c).abs() < a.at(br, bc).abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        a.swap_rows(t, br);
        u.swap_rows(t, br);
        a.swap_cols(t, bc);
        v.swap_cols(t, bc);
        let pivot = a.at(t, t).clone();
        let mut dirty = false;
        for r in t + 1..a.rows {
            if !a.at(r, t).is_zero() {
                let q = a.at(r, t).div_floor(&pivot);
                a.row_axpy(r, t, &q);
                u.row_axpy(r, t, &q);
                if !a.at(r, t).is_zero() {
                    dirty = true;
                }
            }
        }
        for c in t + 1..a.cols {
            if !a.at(t, c).is_zero() {
                let q = a.at(t, c).div_floor(&pivot);
                a.col_axpy(c, t, &q);
                v.col_axpy(c, t, &q);
                if !a.at(t, c).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // force the divisibility chain: the pivot must divide every
        // entry of the remaining submatrix
        let pivot = a.at(t, t).clone();
        for r in t + 1..a.rows {
            for c in t + 1..a.cols {
                if !(a.at(r, c) % &pivot).is_zero() {
                    let minus_one = -BigInt::one();
                    a.row_axpy(t, r, &minus_one);
                    u.row_axpy(t, r, &minus_one);
                    continue 'outer;
                }
            }
        }
        t += 1;
    }
    let mut diag = Vec::with_capacity(t_max);
    for i in 0..t_max {
        if a.at(i, i).is_negative() {
            a.negate_row(i);
            u.negate_row(i);
        }
        diag.push(a.at(i, i).clone());
    }
    debug_assert!({
        let prod = mat_mul(&mat_mul(&u, m), &v);
        (0..prod.rows).all(|r| {
            (0..prod.cols).all(|c| {
                let expect = if r == c && r < diag.len() {
                    diag[r].clone()
                } else {
                    BigInt::zero()
                };
                *prod.at(r, c) == expect
            })
        })
    });
    SnfDecomposition { diag, u, v }
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.cols, b.rows);
    let mut m = IntMatrix::zero(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            if a.at(r, k).is_zero() {
                continue;
            }
            for c in 0..b.cols {
                let v = a.at(r, k) * b.at(k, c);
                *m.at_mut(r, c) += v;
            }
        }
    }
    m
}

/// Rank of the row space (over Q).
pub fn rank(m: &IntMatrix) -> usize {
    hnf(m).rows
}

/// Solves `m x = t` over the integers via the Smith decomposition,
/// returning the canonical particular solution when one exists.
pub fn solve_integer(m: &IntMatrix, t: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(t.len(), m.rows);
    let s = snf_with_transforms(m);
    let rhs = s.u.mul_vec(t);
    let mut y = vec![BigInt::zero(); m.cols];
    for i in 0..m.rows {
        let d = if i < s.diag.len() {
            s.diag[i].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !rhs[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = rhs[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    let x = s.v.mul_vec(&y);
    debug_assert_eq!(m.mul_vec(&x), t);
    Some(x)
}

/// Solves `m x = t` over the rationals (canonical particular solution).
pub fn solve_rational(m: &IntMatrix, t: &[BigInt]) -> Option<Vec<BigRational>> {
    assert_eq!(t.len(), m.rows);
    let s = snf_with_transforms(m);
    let rhs = s.u.mul_vec(t);
    let mut y = vec![BigRational::zero(); m.cols];
    for i in 0..m.rows {
        let d = if i < s.diag.len() {
            s.diag[i].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !rhs[i].is_zero() {
                return None;
            }
        } else {
            y[i] = BigRational::new(rhs[i].clone(), d);
        }
    }
    let x: Vec<BigRational> = (0..m.cols)
        .map(|c| {
            (0..s.v.cols)
                .map(|k| BigRational::from(s.v.at(c, k).clone()) * &y[k])
                .sum()
        })
        .collect();
    debug_assert!((0..m.rows).all(|r| {
        let lhs: BigRational = (0..m.cols)
            .map(|c| BigRational::from(m.at(r, c).clone()) * &x[c])
            .sum();
        lhs == BigRational::from(t[r].clone())
    }));
    Some(x)
}
