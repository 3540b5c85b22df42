//! Dense exact linear algebra over [`Rat`]: reduced row echelon form, rank,
//! the canonical nullspace basis, linear solving, and inversion.
//!
//! The nullspace basis is deterministic: free columns are taken in ascending
//! index order and each basis vector carries entry 1 in its own free position.
//! Two calls on equal matrices return identical bases, which is what makes the
//! Gale transform a function rather than a relation.

use crate::rat::Rat;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Vector = Vec<Rat>;

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], s: &Rat) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

/// Scales a rational vector to coprime integers with the first nonzero entry
/// positive. Returns `None` for the zero vector.
pub fn canonical_integer_direction(v: &[Rat]) -> Option<Vector> {
    if is_zero_vec(v) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut content = BigInt::zero();
    for s in &scaled {
        content = content.gcd(s);
    }
    let sign = scaled
        .iter()
        .find(|s| !s.is_zero())
        .map(|s| if s.is_negative() { -1 } else { 1 })
        .unwrap();
    let div = if sign < 0 { -content } else { content };
    Some(scaled.into_iter().map(|s| Rat::from(s / &div)).collect())
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_cols(cols: Vec<Vector>) -> Result<Self> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Reduced row echelon form with the pivot columns, computed by exact
    /// Gauss-Jordan elimination. Pivot choice is the first nonzero entry
    /// scanning rows top-down, so the result is canonical for the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    m.data.swap(src * m.cols + c, pivot_row * m.cols + c);
                }
            }
            let inv = m.at(pivot_row, col).recip();
            for c in col..m.cols {
                let v = m.at(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical nullspace basis: one vector per free column in ascending
    /// index order, each with entry 1 at its free column, 0 at the other free
    /// columns, and the negated reduced entries at the pivot columns.
    /// Returns the empty list when the nullspace is trivial.
    pub fn nullspace(&self) -> Vec<Vector> {
        if self.cols == 0 {
            return Vec::new();
        }
        let (r, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut f = vec![false; self.cols];
            for &p in &pivots {
                f[p] = true;
            }
            f
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    /// Two matrices have equal row spaces iff these agree.
    pub fn row_space_canonical(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    /// Solves `self * x = b` exactly. Returns a particular solution with all
    /// free variables set to zero, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vector> {
        assert_eq!(self.rows, b.len(), "solve dimension mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the constants column
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red.at(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.at(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination in `i128`,
/// falling back to exact rational elimination on overflow. Used as the fast
/// path in subset scans; the answer is always exact.
pub(crate) fn integer_rank(rows: &[Vec<i128>]) -> usize {
    match integer_rank_i128(rows) {
        Some(r) => r,
        None => {
            let m = Matrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&x| Rat::from(BigInt::from(x))).collect())
                    .collect(),
            )
            .expect("rectangular by construction");
            m.rank()
        }
    }
}

fn integer_rank_i128(rows: &[Vec<i128>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(src) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, src);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let t = a[rank][col]
                    .checked_mul(a[r][c])?
                    .checked_sub(a[r][col].checked_mul(a[rank][c])?)?;
                a[r][c] = t / prev; // exact by the Bareiss identity
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn nullspace_identity_is_trivial() {
        assert!(Matrix::identity(3).nullspace().is_empty());
    }

    #[test]
    fn nullspace_hand_checked() {
        // x1 = -2 x2, x0 = x2 solves the 2x3 system by hand
        let basis = m(&[&[0, 1, 2], &[1, 1, 1]]).nullspace();
        assert_eq!(
            basis,
            vec![vec![Rat::int(1), Rat::int(-2), Rat::int(1)]]
        );
    }

    #[test]
    fn nullspace_zero_row_gives_standard_basis() {
        let basis = m(&[&[0, 0, 0]]).nullspace();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { Rat::one() } else { Rat::zero() });
            }
        }
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(a.rank() + a.nullspace().len(), a.cols());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[Rat::int(5), Rat::int(5)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![Rat::int(5), Rat::int(5)]);
        let inv = a.inverse().unwrap();
        let prod = Matrix::from_rows(
            (0..2)
                .map(|r| inv.mul_vec(a.transpose().row(r)))
                .collect(),
        )
        .unwrap();
        // a * inv = identity, checked via columns
        assert_eq!(prod, Matrix::identity(2));
        assert!(a.solve(&[Rat::int(1), Rat::int(1)]).is_some());
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[Rat::int(0), Rat::int(1)]).is_none());
    }

    #[test]
    fn canonical_direction() {
        let v = vec![Rat::frac(-2, 3), Rat::frac(4, 9)];
        assert_eq!(
            canonical_integer_direction(&v).unwrap(),
            vec![Rat::int(3), Rat::int(-2)]
        );
        assert!(canonical_integer_direction(&[Rat::zero()]).is_none());
    }

    #[test]
    fn integer_rank_matches_rational_rank() {
        let rows = vec![vec![1i128, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(integer_rank(&rows), 2);
        let rows = vec![vec![3i128, 1], vec![1, 2]];
        assert_eq!(integer_rank(&rows), 2);
    }
}
