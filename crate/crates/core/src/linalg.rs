//! Dense exact matrices over Gaussian rationals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of solving `M x = b` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    /// Some particular solution, if the system is consistent.
    pub particular: Option<Vec<Scalar>>,
    /// Basis of the null space of `M`.
    pub kernel: Vec<Vec<Scalar>>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer entries scaled by `num/den`; convenient for printed tables.
    pub fn from_ints(rows: &[&[i64]], num: i64, den: i64) -> Self {
        let s = Scalar::frac(num, den);
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix literal");
        Matrix::from_fn(r, c, |i, j| &Scalar::int(rows[i][j]) * &s)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn same_shape(&self, o: &Matrix) -> bool {
        self.rows == o.rows && self.cols == o.cols
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert!(self.same_shape(o), "shape mismatch in add");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + o.get(r, c))
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert!(self.same_shape(o), "shape mismatch in sub");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - o.get(r, c))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::int(-1))
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.data[r * o.cols + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|k| self.get(k, k).clone()).sum()
    }

    /// `ab - ba`
    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    /// `ab + ba`
    pub fn anticommutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).add(&o.mul(self))
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            self.get(r / o.rows, c / o.cols) * o.get(r % o.rows, c % o.cols)
        })
    }

    /// `Some(s)` when the matrix equals `s·1`.
    pub fn as_scalar_multiple(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let s = if self.rows == 0 { Scalar::zero() } else { self.get(0, 0).clone() };
        let ok = (0..self.rows).all(|r| {
            (0..self.cols).all(|c| if r == c { *self.get(r, c) == s } else { self.get(r, c).is_zero() })
        });
        ok.then_some(s)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if !pv.is_zero() {
                        let v = m.get(r, c) - &(&f * pv);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Exact solution of `M x = b`, reporting inconsistency instead of
    /// approximating.
    pub fn solve(&self, b: &[Scalar]) -> Solution {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = aug.rref();
        let kernel = self.nullspace();
        let rank = pivots.iter().filter(|&&p| p < self.cols).count();
        if pivots.contains(&self.cols) {
            return Solution { particular: None, kernel, rank };
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Solution { particular: Some(x), kernel, rank }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    /// Coefficients `c_0..c_n` of `det(x·1 - M) = Σ c_k x^k` (monic),
    /// by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "characteristic polynomial of non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut mk = Matrix::zeros(n, n);
        for k in 1..=n {
            let shifted = mk.add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
            mk = self.mul(&shifted);
            coeffs[n - k] = -(&mk.trace() / &Scalar::int(k as i64));
        }
        coeffs
    }

    pub fn det(&self) -> Scalar {
        let cp = self.char_poly();
        if self.rows % 2 == 0 {
            cp[0].clone()
        } else {
            -&cp[0]
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows, 1, 1)
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn nullspace_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(a.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let bad = a.solve(&[Scalar::int(1), Scalar::int(3)]);
        assert!(bad.particular.is_none());
        let good = a.solve(&[Scalar::int(1), Scalar::int(2)]);
        let x = good.particular.unwrap();
        assert_eq!(a.mul_vec(&x), vec![Scalar::int(1), Scalar::int(2)]);
        assert_eq!(good.kernel.len(), 1);
    }

    #[test]
    fn char_poly_of_rotation() {
        let r = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(r.char_poly(), vec![Scalar::one(), Scalar::zero(), Scalar::one()]);
        assert_eq!(r.det(), Scalar::one());
    }
}
