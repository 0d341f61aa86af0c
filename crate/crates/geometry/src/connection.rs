//! Standard-gauge connections: the scalar potential `A_k` and the
//! gravitational potential `G^t_k`, with the spinor basis held constant.

use adskit_algebra::algebra;
use adskit_core::{Exponents, Field, Scalar, COORDS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fmat::FieldMatrix;
use crate::GeometryError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Connection {
    /// `A_k`
    pub a: Vec<Field>,
    /// `G^t_k`, stored as `g[k][t]`.
    pub g: Vec<Vec<Field>>,
    /// Extra vector-connection term `Δ^i_{kj}` as `[k]` matrices; only
    /// negative controls set this, breaking `Γ^i_{kj} = G^t_k T^i_{tj}`.
    pub vector_extra: Option<Vec<FieldMatrix>>,
}

impl Connection {
    /// `A = G = 0`: the covariant derivative is the coordinate derivative.
    pub fn flat() -> Self {
        Connection::new(vec![Field::zero(); 10], vec![vec![Field::zero(); 10]; 10])
    }

    pub fn new(a: Vec<Field>, g: Vec<Vec<Field>>) -> Self {
        assert!(a.len() == 10 && g.len() == 10 && g.iter().all(|r| r.len() == 10), "connection needs 10 + 100 fields");
        Connection { a, g, vector_extra: None }
    }

    /// The given scalar potential with `G^t_k = -½δ^t_k`, the only
    /// gravitational potential whose torsion is the structure constants
    /// when the spinor basis is constant.
    pub fn framework(a: Vec<Field>) -> Self {
        let half = Field::constant(Scalar::frac(-1, 2));
        let g = (0..10).map(|k| (0..10).map(|t| if t == k { half.clone() } else { Field::zero() }).collect()).collect();
        Connection::new(a, g)
    }

    /// Adds a random polynomial term to the vector connection alone.
    pub fn corrupted(&self, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0FFEE);
        let mut extra: Vec<FieldMatrix> = (0..10).map(|_| FieldMatrix::zeros(10)).collect();
        let (k, i) = (rng.gen_range(0..10), rng.gen_range(0..10));
        // k = j would leave the torsion unchanged
        let j = (k + rng.gen_range(1..10)) % 10;
        let mut e = [0u8; 10];
        e[rng.gen_range(0..10)] = 1;
        extra[k] = FieldMatrix::from_fn(10, |r, c| {
            if (r, c) == (i, j) {
                Field::monomial(Scalar::one(), e)
            } else {
                Field::zero()
            }
        });
        Connection { vector_extra: Some(extra), ..self.clone() }
    }

    pub fn is_flat(&self) -> bool {
        self.a.iter().chain(self.g.iter().flatten()).all(Field::is_zero) && self.vector_extra.is_none()
    }

    /// `Γ^β_{kα} = A_k 1 + G^t_k T_t`
    pub fn spinor_matrix(&self, k: usize) -> FieldMatrix {
        let alg = algebra();
        let mut m = FieldMatrix::scaled(&adskit_core::Matrix::identity(4), &self.a[k]);
        for t in 0..10 {
            if !self.g[k][t].is_zero() {
                m.add_assign(&FieldMatrix::scaled(&alg.spinor[t], &self.g[k][t]));
            }
        }
        m
    }

    /// `Γ^i_{kj} = G^t_k T^i_{tj}`, plus any corruption.
    pub fn vector_matrix(&self, k: usize) -> FieldMatrix {
        let alg = algebra();
        let mut m = FieldMatrix::zeros(10);
        for t in 0..10 {
            if !self.g[k][t].is_zero() {
                m.add_assign(&FieldMatrix::scaled(&alg.adjoint[t], &self.g[k][t]));
            }
        }
        if let Some(extra) = &self.vector_extra {
            m.add_assign(&extra[k]);
        }
        m
    }

    /// `Γ^B_{kA} = G^t_k T^B_{tA}`
    pub fn versor_matrix(&self, k: usize) -> FieldMatrix {
        let alg = algebra();
        let mut m = FieldMatrix::zeros(5);
        for t in 0..10 {
            if !self.g[k][t].is_zero() {
                m.add_assign(&FieldMatrix::scaled(&alg.versor[t], &self.g[k][t]));
            }
        }
        m
    }

    /// Connection on a weight-one bullet axis.
    pub fn crump(&self, k: usize) -> Field {
        self.a[k].scale(&Scalar::int(2))
    }

    /// `-(Γ^k_{ij} - Γ^k_{ji}) - T^k_{ij}`, stored `[k][i][j]`; zero exactly
    /// when the connection has the algebra's torsion.
    pub fn torsion_defect(&self) -> Vec<Vec<Vec<Field>>> {
        let alg = algebra();
        let gam: Vec<FieldMatrix> = (0..10).map(|i| self.vector_matrix(i)).collect();
        (0..10)
            .map(|k| {
                (0..10)
                    .map(|i| {
                        (0..10)
                            .map(|j| {
                                let mut d = gam[j].get(k, i) - gam[i].get(k, j);
                                d.add_in_place(&Field::one(), &-alg.t(k, i, j));
                                d
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Random polynomial in the active coordinates with small rational
/// coefficients and total degree at most `degree`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, active: &[usize], degree: u32) -> Field {
    let mut f = Field::zero();
    for e in monomials(active, degree) {
        if rng.gen_bool(0.4) {
            let n: i64 = rng.gen_range(-3..=3);
            let d: i64 = rng.gen_range(1..=3);
            f.add_in_place(&Field::monomial(Scalar::frac(n, d), e), &Scalar::one());
        }
    }
    f
}

fn monomials(active: &[usize], degree: u32) -> Vec<Exponents> {
    let mut out = vec![[0u8; 10]];
    for _ in 0..degree {
        let mut next = Vec::new();
        for e in &out {
            for &k in active {
                let mut e2 = *e;
                e2[k] += 1;
                next.push(e2);
            }
        }
        out.extend(next);
        out.sort();
        out.dedup();
    }
    out
}

fn check_limits(active: &[usize], degree: u32) -> Result<(), GeometryError> {
    if degree > 3 {
        return Err(GeometryError::Limit(format!("degree {degree} exceeds 3")));
    }
    if active.len() > 4 {
        return Err(GeometryError::Limit(format!("{} active coordinates exceed 4", active.len())));
    }
    if let Some(&k) = active.iter().find(|&&k| k >= 10) {
        return Err(GeometryError::Limit(format!("coordinate {k} out of range")));
    }
    Ok(())
}

/// Seed 0 is the flat connection. Every other seed is a framework
/// connection with a random polynomial scalar potential; the same seed
/// always gives the same connection.
pub fn random_connection(seed: u64, active: &[usize], degree: u32) -> Result<Connection, GeometryError> {
    check_limits(active, degree)?;
    if seed == 0 {
        return Ok(Connection::flat());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a: Vec<Field> = (0..10).map(|_| random_polynomial(&mut rng, active, degree)).collect();
    if a.iter().all(Field::is_zero) {
        let k = rng.gen_range(0..10);
        a[k] = match active.first() {
            Some(&c) if degree > 0 => Field::var(c),
            _ => Field::one(),
        };
    }
    Ok(Connection::framework(a))
}

/// A connection with random polynomial `A` and `G` alike. It is not a
/// framework connection; identities that need the torsion fail on it.
pub fn random_general(seed: u64, active: &[usize], degree: u32) -> Result<Connection, GeometryError> {
    check_limits(active, degree)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 1);
    let a = (0..10).map(|_| random_polynomial(&mut rng, active, degree)).collect();
    let g = (0..10)
        .map(|_| (0..10).map(|_| if rng.gen_bool(0.3) { random_polynomial(&mut rng, active, degree) } else { Field::zero() }).collect())
        .collect();
    Ok(Connection::new(a, g))
}

/// Parses a comma-separated coordinate list such as `t,x,a`.
pub fn parse_active(list: &str) -> Result<Vec<usize>, GeometryError> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|s| {
            let s = s.trim();
            adskit_core::coord_index(s).ok_or_else(|| GeometryError::Limit(format!("unknown coordinate {s:?}; expected one of {}", COORDS.join(","))))
        })
        .collect()
}
