//! Small dense matrices of fields.

use adskit_core::{Field, Matrix, Scalar};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FieldMatrix {
    pub n: usize,
    data: Vec<Field>,
}

impl FieldMatrix {
    pub fn zeros(n: usize) -> Self {
        FieldMatrix { n, data: vec![Field::zero(); n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Field) -> Self {
        let data = (0..n * n).map(|o| f(o / n, o % n)).collect();
        FieldMatrix { n, data }
    }

    /// `f · m` for a constant matrix.
    pub fn scaled(m: &Matrix, f: &Field) -> Self {
        FieldMatrix::from_fn(m.rows(), |r, c| {
            let s = m.get(r, c);
            if s.is_zero() {
                Field::zero()
            } else {
                f.scale(s)
            }
        })
    }

    pub fn get(&self, r: usize, c: usize) -> &Field {
        &self.data[r * self.n + c]
    }

    pub fn add_assign(&mut self, o: &FieldMatrix) {
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            a.add_in_place(b, &Scalar::one());
        }
    }

    pub fn add(&self, o: &FieldMatrix) -> FieldMatrix {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn sub(&self, o: &FieldMatrix) -> FieldMatrix {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            a.add_in_place(b, &Scalar::int(-1));
        }
        out
    }

    pub fn mul(&self, o: &FieldMatrix) -> FieldMatrix {
        let n = self.n;
        let mut out = FieldMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.data[r * n + c].add_in_place(&(a * b), &Scalar::one());
                    }
                }
            }
        }
        out
    }

    pub fn partial(&self, k: usize) -> FieldMatrix {
        FieldMatrix { n: self.n, data: self.data.iter().map(|f| f.partial(k)).collect() }
    }

    pub fn trace(&self) -> Field {
        let mut t = Field::zero();
        for i in 0..self.n {
            t.add_in_place(self.get(i, i), &Scalar::one());
        }
        t
    }

    /// `tr(m · self)` for a constant matrix `m`.
    pub fn trace_against(&self, m: &Matrix) -> Field {
        let mut t = Field::zero();
        for r in 0..self.n {
            for c in 0..self.n {
                let s = m.get(r, c);
                if !s.is_zero() {
                    t.add_in_place(self.get(c, r), s);
                }
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Field]) -> Vec<Field> {
        (0..self.n)
            .map(|r| {
                let mut acc = Field::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc.add_in_place(&(a * x), &Scalar::one());
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }
}

/// `m · v` for a constant matrix and a field vector.
pub fn apply(m: &Matrix, v: &[Field]) -> Vec<Field> {
    (0..m.rows())
        .map(|r| {
            let mut acc = Field::zero();
            for (c, x) in v.iter().enumerate() {
                acc.add_in_place(x, m.get(r, c));
            }
            acc
        })
        .collect()
}

/// `Σ a_i b_i` over field vectors.
pub fn dot(a: &[Field], b: &[Field]) -> Field {
    let mut acc = Field::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_in_place(&(x * y), &Scalar::one());
        }
    }
    acc
}
