//! Curvature of the spinor, vector and versor connections, its scalar and
//! vector components, and the usual contractions.

use adskit_algebra::algebra;
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Scalar};
use serde::Serialize;

use crate::connection::Connection;
use crate::derivative::covariant_derivative;
use crate::fmat::FieldMatrix;
use crate::GeometryError;

const V: Kind = Kind::Vector;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvatureBundle {
    /// `R^α_{ijβ}`, axes `(α, i, j, β)`.
    pub spinor: FieldTensor,
    /// `F_ij`
    pub field: FieldTensor,
    /// `R^k_ij`
    pub reduced: FieldTensor,
    /// `R^l_{ijk}`, the curvature of the vector connection.
    pub riemann: FieldTensor,
    pub ricci: FieldTensor,
    pub scalar: Field,
    pub einstein: FieldTensor,
    /// `U^k_m`
    pub ussher: FieldTensor,
    /// `R^•_{ij•}`
    pub bullet: FieldTensor,
}

/// `∂_iΓ_j - ∂_jΓ_i + [Γ_i, Γ_j]` for every ordered pair, indexed `10 i + j`.
pub fn matrix_curvature(gamma: &[FieldMatrix]) -> Vec<FieldMatrix> {
    let n = gamma[0].n;
    let mut out = vec![FieldMatrix::zeros(n); 100];
    for i in 0..10 {
        for j in (i + 1)..10 {
            let r = gamma[j]
                .partial(i)
                .sub(&gamma[i].partial(j))
                .add(&gamma[i].mul(&gamma[j]))
                .sub(&gamma[j].mul(&gamma[i]));
            out[10 * j + i] = FieldMatrix::zeros(n).sub(&r);
            out[10 * i + j] = r;
        }
    }
    out
}

fn to_tensor(mats: &[FieldMatrix], kind: Kind) -> FieldTensor {
    GenTensor::from_fn(vec![Axis::up(kind), Axis::down(V), Axis::down(V), Axis::down(kind)], |ix| {
        mats[10 * ix[1] + ix[2]].get(ix[0], ix[3]).clone()
    })
}

pub fn spinor_curvature(conn: &Connection) -> FieldTensor {
    let gamma: Vec<FieldMatrix> = (0..10).map(|k| conn.spinor_matrix(k)).collect();
    to_tensor(&matrix_curvature(&gamma), Kind::Spinor)
}

/// `R^l_{ijk}` straight from the vector connection.
pub fn vector_curvature(conn: &Connection) -> FieldTensor {
    let gamma: Vec<FieldMatrix> = (0..10).map(|k| conn.vector_matrix(k)).collect();
    to_tensor(&matrix_curvature(&gamma), V)
}

/// `R^B_{ijA}` straight from the versor connection.
pub fn versor_curvature(conn: &Connection) -> FieldTensor {
    let gamma: Vec<FieldMatrix> = (0..10).map(|k| conn.versor_matrix(k)).collect();
    to_tensor(&matrix_curvature(&gamma), Kind::Versor)
}

fn pair_tensor(f: impl Fn(usize, usize) -> Field) -> FieldTensor {
    GenTensor::from_fn(vec![Axis::down(V), Axis::down(V)], |ix| f(ix[0], ix[1]))
}

/// Splits the spinor curvature into `F_ij 1 + R^k_ij T_k`. A versor
/// component is impossible for a spinor connection without one.
pub fn curvature_components(spinor: &FieldTensor) -> Result<(FieldTensor, FieldTensor), GeometryError> {
    let alg = algebra();
    let mat = |i: usize, j: usize| FieldMatrix::from_fn(4, |a, b| spinor.get(&[a, i, j, b]).clone());
    let mats: Vec<FieldMatrix> = (0..100).map(|o| mat(o / 10, o % 10)).collect();
    let quarter = Scalar::frac(1, 4);
    let field = pair_tensor(|i, j| mats[10 * i + j].trace().scale(&quarter));
    let reduced = GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V)], |ix| {
        mats[10 * ix[1] + ix[2]].trace_against(&alg.spinor[ix[0]]).scale(&alg.ginv[ix[0]])
    });
    let versor = GenTensor::from_fn(vec![Axis::up(Kind::Versor), Axis::down(V), Axis::down(V)], |ix| {
        let gi = alg.gv[ix[0]].inv().expect("versor metric is diagonal and invertible");
        mats[10 * ix[1] + ix[2]].trace_against(&alg.p[ix[0]]).scale(&gi)
    });
    if let Some(e) = GeometryError::nonzero("versor component of the spinor curvature", &versor) {
        return Err(e);
    }
    Ok((field, reduced))
}

/// `F_ij = ∂_iA_j - ∂_jA_i`
pub fn field_from_potential(conn: &Connection) -> FieldTensor {
    pair_tensor(|i, j| &conn.a[j].partial(i) - &conn.a[i].partial(j))
}

/// Curvature of the Crump connection, `∂_iH_j - ∂_jH_i`.
pub fn bullet_curvature(conn: &Connection) -> FieldTensor {
    pair_tensor(|i, j| &conn.crump(j).partial(i) - &conn.crump(i).partial(j))
}

/// `R^k_ij = ∂_iG^k_j - ∂_jG^k_i - G^x_iG^y_jT^k_xy + Γ^k_imG^m_j - Γ^k_jmG^m_i`
pub fn reduced_from_potential(conn: &Connection) -> FieldTensor {
    let alg = algebra();
    let gam: Vec<FieldMatrix> = (0..10).map(|k| conn.vector_matrix(k)).collect();
    GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V)], |ix| {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        let mut r = &conn.g[j][k].partial(i) - &conn.g[i][k].partial(j);
        for x in 0..10 {
            for y in 0..10 {
                let t = alg.t(k, x, y);
                if !t.is_zero() && !conn.g[i][x].is_zero() && !conn.g[j][y].is_zero() {
                    r.add_in_place(&(&conn.g[i][x] * &conn.g[j][y]), &-t);
                }
            }
        }
        for m in 0..10 {
            r.add_in_place(&(gam[i].get(k, m) * &conn.g[j][m]), &Scalar::one());
            r.add_in_place(&(gam[j].get(k, m) * &conn.g[i][m]), &Scalar::int(-1));
        }
        r
    })
}

/// `R^t_ij T^l_tk`
pub fn riemann_from_reduced(reduced: &FieldTensor) -> FieldTensor {
    let alg = algebra();
    GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V), Axis::down(V)], |ix| {
        let mut r = Field::zero();
        for t in 0..10 {
            r.add_in_place(reduced.get(&[t, ix[1], ix[2]]), alg.t(ix[0], t, ix[3]));
        }
        r
    })
}

/// `R^t_ij T^B_tA`
pub fn versor_from_reduced(reduced: &FieldTensor) -> FieldTensor {
    let alg = algebra();
    GenTensor::from_fn(vec![Axis::up(Kind::Versor), Axis::down(V), Axis::down(V), Axis::down(Kind::Versor)], |ix| {
        let mut r = Field::zero();
        for t in 0..10 {
            r.add_in_place(reduced.get(&[t, ix[1], ix[2]]), alg.versor[t].get(ix[0], ix[3]));
        }
        r
    })
}

/// The vector-connection curvature, which must be generated by the reduced
/// curvature.
pub fn riemann(conn: &Connection) -> Result<FieldTensor, GeometryError> {
    let direct = vector_curvature(conn);
    let (_, reduced) = curvature_components(&spinor_curvature(conn))?;
    let diff = direct.sub(&riemann_from_reduced(&reduced)).expect("same axes");
    match GeometryError::nonzero("Riemann tensor minus R^t_ij T^l_tk", &diff) {
        Some(e) => Err(e),
        None => Ok(direct),
    }
}

/// `R_ij = R^x_{iy} T^y_{xj}`
pub fn ricci(reduced: &FieldTensor) -> FieldTensor {
    let alg = algebra();
    pair_tensor(|i, j| {
        let mut r = Field::zero();
        for x in 0..10 {
            for y in 0..10 {
                let t = alg.t(y, x, j);
                if !t.is_zero() {
                    r.add_in_place(reduced.get(&[x, i, y]), t);
                }
            }
        }
        r
    })
}

/// `R = g^ij R_ij`
pub fn scalar_curvature(ricci: &FieldTensor) -> Field {
    let alg = algebra();
    let mut r = Field::zero();
    for i in 0..10 {
        r.add_in_place(ricci.get(&[i, i]), &alg.ginv[i]);
    }
    r
}

/// `R_ij - ½ g_ij R`
pub fn einstein(ricci: &FieldTensor, scalar: &Field) -> FieldTensor {
    let alg = algebra();
    let half = Scalar::frac(-1, 2);
    pair_tensor(|i, j| {
        let mut e = ricci.get(&[i, j]).clone();
        if i == j {
            e.add_in_place(scalar, &(&half * &alg.g[i]));
        }
        e
    })
}

/// `U^k_m = ∇^j R^k_{jm} - ½ T^j_{ms} g^{st} R^k_{jt}`
pub fn ussher(conn: &Connection, reduced: &FieldTensor) -> FieldTensor {
    let alg = algebra();
    let d = covariant_derivative(reduced, conn);
    let half = Scalar::frac(-1, 2);
    GenTensor::from_fn(vec![Axis::up(V), Axis::down(V)], |ix| {
        let (k, m) = (ix[0], ix[1]);
        let mut u = Field::zero();
        for j in 0..10 {
            u.add_in_place(d.get(&[j, k, j, m]), &alg.ginv[j]);
            for s in 0..10 {
                let t = alg.t(j, m, s);
                if !t.is_zero() {
                    u.add_in_place(reduced.get(&[k, j, s]), &(&(&half * t) * &alg.ginv[s]));
                }
            }
        }
        u
    })
}

pub fn curvature_bundle(conn: &Connection) -> Result<CurvatureBundle, GeometryError> {
    let spinor = spinor_curvature(conn);
    let (field, reduced) = curvature_components(&spinor)?;
    let riemann = vector_curvature(conn);
    let ricci = ricci(&reduced);
    let scalar = scalar_curvature(&ricci);
    let einstein = einstein(&ricci, &scalar);
    let ussher = ussher(conn, &reduced);
    let bullet = bullet_curvature(conn);
    Ok(CurvatureBundle { spinor, field, reduced, riemann, ricci, scalar, einstein, ussher, bullet })
}
