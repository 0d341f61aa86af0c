//! The covariant derivative on tensors of any index structure.

use adskit_algebra::action::local_action;
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Scalar};

use crate::connection::Connection;
use crate::fmat::FieldMatrix;

/// Charge under the scalar potential: `+1` per upper spinor index, `-1` per
/// lower one, and `2w` for bullet weight `w`.
pub fn scalar_charge(axes: &[Axis]) -> i64 {
    axes.iter()
        .map(|a| match a.kind {
            Kind::Spinor if a.upper => 1,
            Kind::Spinor => -1,
            Kind::Bullet(w) => 2 * w as i64,
            _ => 0,
        })
        .sum()
}

pub fn times(x: &FieldTensor, f: &Field) -> FieldTensor {
    if f.is_zero() {
        return GenTensor::zeros(x.axes().to_vec());
    }
    x.map(|v| if v.is_zero() { Field::zero() } else { v * f })
}

pub fn partial(x: &FieldTensor, k: usize) -> FieldTensor {
    x.map(|v| v.partial(k))
}

/// `M` acting on axis `n`: `M X` on an upper axis, `-Mᵀ X` on a lower one.
pub fn apply_on_axis(x: &FieldTensor, n: usize, m: &FieldMatrix) -> FieldTensor {
    let upper = x.axes()[n].upper;
    let mut out: FieldTensor = GenTensor::zeros(x.axes().to_vec());
    for (idx, v) in x.iter() {
        if v.is_zero() {
            continue;
        }
        let j = idx[n];
        let mut to = idx.clone();
        for i in 0..m.n {
            let c = if upper { m.get(i, j) } else { m.get(j, i) };
            if c.is_zero() {
                continue;
            }
            to[n] = i;
            let p = c * v;
            let s = if upper { Scalar::one() } else { Scalar::int(-1) };
            out.get_mut(&to).add_in_place(&p, &s);
        }
    }
    out
}

/// Local actions `T_t**(X)` for the generators that appear in the
/// gravitational potential.
fn actions(x: &FieldTensor, conn: &Connection) -> Vec<Option<FieldTensor>> {
    (0..10).map(|t| (0..10).any(|k| !conn.g[k][t].is_zero()).then(|| local_action(t, x))).collect()
}

fn along(x: &FieldTensor, conn: &Connection, k: usize, acts: &[Option<FieldTensor>]) -> FieldTensor {
    let mut d = partial(x, k);
    for (t, act) in acts.iter().enumerate() {
        if let Some(act) = act {
            if !conn.g[k][t].is_zero() {
                d = d.add(&times(act, &conn.g[k][t])).expect("same axes");
            }
        }
    }
    let q = scalar_charge(x.axes());
    if q != 0 && !conn.a[k].is_zero() {
        d = d.add(&times(x, &conn.a[k].scale(&Scalar::int(q)))).expect("same axes");
    }
    if let Some(extra) = &conn.vector_extra {
        if !extra[k].is_zero() {
            for (n, ax) in x.axes().iter().enumerate() {
                if ax.kind == Kind::Vector {
                    d = d.add(&apply_on_axis(x, n, &extra[k])).expect("same axes");
                }
            }
        }
    }
    d
}

/// `∇_k X` for a single direction.
pub fn derivative_along(x: &FieldTensor, conn: &Connection, k: usize) -> FieldTensor {
    along(x, conn, k, &actions(x, conn))
}

/// `∇_k X`, with the new lower vector index `k` placed first.
pub fn covariant_derivative(x: &FieldTensor, conn: &Connection) -> FieldTensor {
    let acts = actions(x, conn);
    let mut axes = vec![Axis::down(Kind::Vector)];
    axes.extend_from_slice(x.axes());
    let mut entries = Vec::with_capacity(10 * x.len());
    for k in 0..10 {
        entries.extend(along(x, conn, k, &acts).entries().iter().cloned());
    }
    GenTensor::from_vec(axes, entries).expect("derivative shape")
}

/// `∇^k X = g^{kk} ∇_k X`, new upper index first.
pub fn raised_derivative(x: &FieldTensor, conn: &Connection) -> FieldTensor {
    let d = covariant_derivative(x, conn);
    let ginv = &adskit_algebra::algebra().ginv;
    let mut axes = d.axes().to_vec();
    axes[0] = Axis::up(Kind::Vector);
    GenTensor::from_fn(axes, |ix| d.get(ix).scale(&ginv[ix[0]]))
}
