//! The extended Ampère-Gauss source and the second-order gravitational
//! equations in Ussher's tensor.

use adskit_algebra::algebra;
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Matrix, Scalar, Tensor};
use serde::{Deserialize, Serialize};

use crate::connection::Connection;
use crate::curvature::{curvature_components, spinor_curvature, ussher};
use crate::derivative::covariant_derivative;
use crate::GeometryError;

const V: Kind = Kind::Vector;

/// `J_i = ∇^j F_ji - ½ g^{ts} T^r_{it} F_rs`
pub fn ampere_gauss_source(conn: &Connection) -> Result<FieldTensor, GeometryError> {
    let alg = algebra();
    let (f, _) = curvature_components(&spinor_curvature(conn))?;
    let d = covariant_derivative(&f, conn);
    let half = Scalar::frac(-1, 2);
    Ok(GenTensor::from_fn(vec![Axis::down(V)], |ix| {
        let i = ix[0];
        let mut j_i = Field::zero();
        for j in 0..10 {
            j_i.add_in_place(d.get(&[j, j, i]), &alg.ginv[j]);
        }
        for t in 0..10 {
            for r in 0..10 {
                let c = alg.t(r, i, t);
                if !c.is_zero() {
                    j_i.add_in_place(f.get(&[r, t]), &(&(&half * c) * &alg.ginv[t]));
                }
            }
        }
        j_i
    }))
}

/// `g^{ij} ∇̂_i F_jk` with the torsion-free derivative `∇̂_k = ∇_k + ½T_k**`.
pub fn ampere_gauss_torsion_free(conn: &Connection) -> Result<FieldTensor, GeometryError> {
    let alg = algebra();
    let (f, _) = curvature_components(&spinor_curvature(conn))?;
    let d = covariant_derivative(&f, conn);
    let half = Scalar::frac(1, 2);
    Ok(GenTensor::from_fn(vec![Axis::down(V)], |ix| {
        let k = ix[0];
        let mut out = Field::zero();
        for i in 0..10 {
            let mut hat = d.get(&[i, i, k]).clone();
            // T_i** on the two lower indices of F_ik
            for m in 0..10 {
                let a = alg.t(m, i, i);
                if !a.is_zero() {
                    hat.add_in_place(f.get(&[m, k]), &-(&half * a));
                }
                let b = alg.t(m, i, k);
                if !b.is_zero() {
                    hat.add_in_place(f.get(&[i, m]), &-(&half * b));
                }
            }
            out.add_in_place(&hat, &alg.ginv[i]);
        }
        out
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientTensors {
    /// `A^{tkm}_{in}`, axes `(t, k, m, i, n)`.
    pub a: Tensor,
    /// `B^{km}_{in}`, axes `(k, m, i, n)`.
    pub b: Tensor,
    /// The `3/2` multiplying the source.
    pub source_factor: Scalar,
}

impl CoefficientTensors {
    /// `B` as a map from `X^i_k` (column `10i + k`) to `Y^m_n` (row `10m + n`).
    pub fn b_matrix(&self) -> Matrix {
        Matrix::from_fn(100, 100, |row, col| self.b.get(&[col % 10, row / 10, col / 10, row % 10]).clone())
    }
}

/// `A^{tkm}_{in} = T^t_in g^km - 1^k_n T^m_is g^ts` and
/// `B^{km}_{in} = 3g^km g_in + 6·1^m_i 1^k_n - g^kj T^t_jn T^m_it`.
pub fn coefficient_tensors() -> CoefficientTensors {
    let alg = algebra();
    let tor = &alg.torsion;
    let id = Tensor::identity(V);
    let err = "coefficient tensor shapes";

    // T^t_in g^km: axes (t,i,n,k,m) -> (t,k,m,i,n)
    let a1 = tor.outer(&alg.metric_inv).permute(&[0, 3, 4, 1, 2]).expect(err);
    // T^m_is g^ts: (m,i,t); times 1^k_n: (m,i,t,k,n) -> (t,k,m,i,n)
    let tg = tor.contract_with(2, &alg.metric_inv, 1).expect(err);
    let a2 = tg.outer(&id).permute(&[2, 3, 0, 1, 4]).expect(err);
    let a = a1.sub(&a2).expect(err);

    // 3 g^km g_in: (k,m,i,n)
    let b1 = alg.metric_inv.outer(&alg.metric).scale(&Scalar::int(3));
    // 6 1^m_i 1^k_n: (m,i,k,n) -> (k,m,i,n)
    let b2 = id.outer(&id).permute(&[2, 0, 1, 3]).expect(err).scale(&Scalar::int(6));
    // g^kj T^t_jn: (k,t,n); with T^m_it over t: (k,n,m,i) -> (k,m,i,n)
    let gt = alg.metric_inv.contract_with(1, tor, 1).expect(err);
    let b3 = gt.contract_with(1, tor, 2).expect(err).permute(&[0, 2, 3, 1]).expect(err);
    let b = b1.add(&b2).expect(err).sub(&b3).expect(err);

    CoefficientTensors { a, b, source_factor: Scalar::frac(3, 2) }
}

/// Sign of the electromagnetic term in the combined Lagrangian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EmSign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquationKind {
    SmallField,
    Exact(EmSign),
    LargeField,
    ScalarDark,
}

/// `A^{tkm}_{in} ∇_t X^i_k + B^{km}_{in} X^i_k`, axes `(m, n)`.
pub fn linear_part(co: &CoefficientTensors, x: &FieldTensor, conn: &Connection) -> FieldTensor {
    let d = covariant_derivative(x, conn);
    GenTensor::from_fn(vec![Axis::up(V), Axis::down(V)], |ix| {
        let (m, n) = (ix[0], ix[1]);
        let mut out = Field::zero();
        for i in 0..10 {
            for k in 0..10 {
                let b = co.b.get(&[k, m, i, n]);
                if !b.is_zero() {
                    out.add_in_place(x.get(&[i, k]), b);
                }
                for t in 0..10 {
                    let a = co.a.get(&[t, k, m, i, n]);
                    if !a.is_zero() {
                        out.add_in_place(d.get(&[t, i, k]), a);
                    }
                }
            }
        }
        out
    })
}

/// `W^m_p = (R^s_ai R^t_bj g_st g^ab ± 4 F_aj F_bi g^ab)(4 g^jm 1^i_p - g^ij 1^m_p)`;
/// `None` drops the field term.
pub fn second_order_term(conn: &Connection, sign: Option<EmSign>) -> Result<FieldTensor, GeometryError> {
    let alg = algebra();
    let (f, r) = curvature_components(&spinor_curvature(conn))?;
    let em = match sign {
        Some(EmSign::Plus) => Scalar::int(4),
        Some(EmSign::Minus) => Scalar::int(-4),
        None => Scalar::zero(),
    };
    // q_ij, both lower
    let q = GenTensor::from_fn(vec![Axis::down(V), Axis::down(V)], |ix| {
        let (i, j) = (ix[0], ix[1]);
        let mut s = Field::zero();
        for a in 0..10 {
            for t in 0..10 {
                let x = r.get(&[t, a, i]);
                let y = r.get(&[t, a, j]);
                if !x.is_zero() && !y.is_zero() {
                    s.add_in_place(&(x * y), &(&alg.g[t] * &alg.ginv[a]));
                }
            }
            if !em.is_zero() {
                let x = f.get(&[a, j]);
                let y = f.get(&[a, i]);
                if !x.is_zero() && !y.is_zero() {
                    s.add_in_place(&(x * y), &(&em * &alg.ginv[a]));
                }
            }
        }
        s
    });
    let mut trace = Field::zero();
    for i in 0..10 {
        trace.add_in_place(q.get(&[i, i]), &alg.ginv[i]);
    }
    Ok(GenTensor::from_fn(vec![Axis::up(V), Axis::down(V)], |ix| {
        let (m, p) = (ix[0], ix[1]);
        let mut w = q.get(&[p, m]).scale(&(&Scalar::int(4) * &alg.ginv[m]));
        if m == p {
            w.add_in_place(&trace, &Scalar::int(-1));
        }
        w
    }))
}

/// `V^i_k = ∇^p R^i_{pk}`
pub fn curvature_divergence(conn: &Connection) -> Result<FieldTensor, GeometryError> {
    let alg = algebra();
    let (_, r) = curvature_components(&spinor_curvature(conn))?;
    let d = covariant_derivative(&r, conn);
    Ok(GenTensor::from_fn(vec![Axis::up(V), Axis::down(V)], |ix| {
        let mut v = Field::zero();
        for p in 0..10 {
            v.add_in_place(d.get(&[p, ix[0], p, ix[1]]), &alg.ginv[p]);
        }
        v
    }))
}

/// `∇^t X^i_k T^k_{it} - 3X^k_k`
pub fn scalar_dark_part(x: &FieldTensor, conn: &Connection) -> Field {
    let alg = algebra();
    let d = covariant_derivative(x, conn);
    let mut out = Field::zero();
    for i in 0..10 {
        for k in 0..10 {
            for t in 0..10 {
                let c = alg.t(k, i, t);
                if !c.is_zero() {
                    out.add_in_place(d.get(&[t, i, k]), &(c * &alg.ginv[t]));
                }
            }
        }
        out.add_in_place(x.get(&[i, i]), &Scalar::int(-3));
    }
    out
}

fn check_shape(s: &FieldTensor) -> Result<(), GeometryError> {
    if s.axes() != [Axis::up(V), Axis::down(V)] {
        return Err(GeometryError::Shape { op: "equation_residual", got: format!("source with {} axes", s.rank()) });
    }
    Ok(())
}

/// Left side minus right side of the named equation with unknown `x`
/// (axes `(i, k)`) and source `S^m_n`:
///
/// * small field: `A∇X + BX - (3/2)S`
/// * exact: `A∇X + BX - (3/2)(S + W)`
/// * large field: `-A∇X + BX + (3/2)W_g - (3/2)S`, the printed coefficients
/// * scalar dark: `∇^tX^i_kT^k_it - 3X^k_k + (3/2)S^m_m`
pub fn equation_residual_for(kind: EquationKind, x: &FieldTensor, conn: &Connection, s: &FieldTensor) -> Result<FieldTensor, GeometryError> {
    check_shape(s)?;
    check_shape(x)?;
    let co = coefficient_tensors();
    let three_halves = co.source_factor.clone();
    let neg = -&three_halves;
    match kind {
        EquationKind::SmallField => Ok(linear_part(&co, x, conn).add(&s.scale(&neg)).expect("shape")),
        EquationKind::Exact(sign) => {
            let w = second_order_term(conn, Some(sign))?;
            Ok(linear_part(&co, x, conn).add(&s.add(&w).expect("shape").scale(&neg)).expect("shape"))
        }
        EquationKind::LargeField => {
            let flipped = CoefficientTensors { a: co.a.scale(&Scalar::int(-1)), ..co.clone() };
            let w = second_order_term(conn, None)?;
            let lhs = linear_part(&flipped, x, conn).add(&w.scale(&three_halves)).expect("shape");
            Ok(lhs.add(&s.scale(&neg)).expect("shape"))
        }
        EquationKind::ScalarDark => {
            let mut r = scalar_dark_part(x, conn);
            for m in 0..10 {
                r.add_in_place(s.get(&[m, m]), &three_halves);
            }
            Ok(GenTensor::scalar(r))
        }
    }
}

/// [`equation_residual_for`] with the unknown each equation is written in:
/// Ussher's tensor, or `∇^pR^i_{pk}` for the large-field form.
pub fn equation_residual(kind: EquationKind, conn: &Connection, s: &FieldTensor) -> Result<FieldTensor, GeometryError> {
    let x = match kind {
        EquationKind::LargeField => curvature_divergence(conn)?,
        _ => {
            let (_, r) = curvature_components(&spinor_curvature(conn))?;
            ussher(conn, &r)
        }
    };
    equation_residual_for(kind, &x, conn, s)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApparentSource {
    /// `K^i_k`, if the system is consistent.
    pub particular: Option<Tensor>,
    pub kernel: Vec<Tensor>,
    pub rank: usize,
}

fn as_pair_tensor(v: &[Scalar]) -> Tensor {
    Tensor::from_fn(vec![Axis::up(V), Axis::down(V)], |ix| v[10 * ix[0] + ix[1]].clone())
}

/// Solves `B^{km}_{in} K^i_k = (3/2) S^m_n` exactly.
pub fn apparent_source_solve(s: &Tensor) -> Result<ApparentSource, GeometryError> {
    if s.axes() != [Axis::up(V), Axis::down(V)] {
        return Err(GeometryError::Shape { op: "apparent_source_solve", got: format!("source with {} axes", s.rank()) });
    }
    let co = coefficient_tensors();
    let rhs: Vec<Scalar> = (0..100).map(|o| s.get(&[o / 10, o % 10]) * &co.source_factor).collect();
    let sol = co.b_matrix().solve(&rhs);
    Ok(ApparentSource {
        particular: sol.particular.as_deref().map(as_pair_tensor),
        kernel: sol.kernel.iter().map(|v| as_pair_tensor(v)).collect(),
        rank: sol.rank,
    })
}

/// Applies `B` to a constant `K^i_k`.
pub fn apply_b(k: &Tensor) -> Tensor {
    let co = coefficient_tensors();
    let v: Vec<Scalar> = (0..100).map(|o| k.get(&[o / 10, o % 10]).clone()).collect();
    as_pair_tensor(&co.b_matrix().mul_vec(&v))
}
