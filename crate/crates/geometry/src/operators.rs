//! Gradient, divergence, curl and the Laplacians built from the covariant
//! derivative.

use adskit_algebra::action::local_action;
use adskit_algebra::algebra;
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Scalar};
use serde::{Deserialize, Serialize};

use crate::connection::Connection;
use crate::derivative::{covariant_derivative, raised_derivative};
use crate::GeometryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Operator {
    Grad,
    Div,
    Curl,
    Laplacian,
    VersorLaplacian,
    Box,
}

fn describe(x: &FieldTensor) -> String {
    let axes: Vec<String> = x.axes().iter().map(|a| a.to_string()).collect();
    format!("a tensor with axes [{}]", axes.join(", "))
}

/// Sum of `x[i, i, rest…]` weighted by `w(i)`, dropping the first two axes.
fn trace_first_pair(x: &FieldTensor, w: impl Fn(usize) -> Scalar) -> FieldTensor {
    let axes = x.axes()[2..].to_vec();
    GenTensor::from_fn(axes, |rest| {
        let mut acc = Field::zero();
        let mut ix = vec![0, 0];
        ix.extend_from_slice(rest);
        for i in 0..10 {
            ix[0] = i;
            ix[1] = i;
            acc.add_in_place(x.get(&ix), &w(i));
        }
        acc
    })
}

pub fn grad(x: &FieldTensor, conn: &Connection) -> FieldTensor {
    raised_derivative(x, conn)
}

/// `∇_i v^i…` over the first index, which must be an upper vector.
pub fn div(x: &FieldTensor, conn: &Connection) -> Result<FieldTensor, GeometryError> {
    match x.axes().first() {
        Some(a) if *a == Axis::up(Kind::Vector) => Ok(trace_first_pair(&covariant_derivative(x, conn), |_| Scalar::one())),
        _ => Err(GeometryError::Shape { op: "Div", got: describe(x) }),
    }
}

/// `g^{ii} T_i**(∇_i X)`
pub fn curl(x: &FieldTensor, conn: &Connection) -> FieldTensor {
    let alg = algebra();
    let d = covariant_derivative(x, conn);
    let block = x.len();
    let mut out = GenTensor::zeros(x.axes().to_vec());
    for i in 0..10 {
        let di = GenTensor::from_vec(x.axes().to_vec(), d.entries()[i * block..(i + 1) * block].to_vec()).expect("block shape");
        out = out.add(&local_action(i, &di).scale(&alg.ginv[i])).expect("same axes");
    }
    out
}

/// `g_ij ∇^i∇^j X`
pub fn laplacian(x: &FieldTensor, conn: &Connection) -> FieldTensor {
    let alg = algebra();
    let d2 = covariant_derivative(&covariant_derivative(x, conn), conn);
    trace_first_pair(&d2, |i| alg.ginv[i].clone())
}

/// `g^A_ij ∇^i∇^j X`, with the new versor index first.
pub fn versor_laplacian(x: &FieldTensor, conn: &Connection) -> FieldTensor {
    let alg = algebra();
    let d2 = covariant_derivative(&covariant_derivative(x, conn), conn);
    let mut axes = vec![Axis::up(Kind::Versor)];
    axes.extend_from_slice(x.axes());
    GenTensor::from_fn(axes, |ix| {
        let mut acc = Field::zero();
        let mut at = vec![0, 0];
        at.extend_from_slice(&ix[1..]);
        for i in 0..10 {
            for j in 0..10 {
                let c = alg.jordan.get(&[ix[0], i, j]);
                if c.is_zero() {
                    continue;
                }
                at[0] = i;
                at[1] = j;
                acc.add_in_place(d2.get(&at), &(&(c * &alg.ginv[i]) * &alg.ginv[j]));
            }
        }
        acc
    })
}

/// `g_AB g^A_ij g^B_kl ∇^i∇^j∇^k∇^l f` on scalar fields.
pub fn box_operator(x: &FieldTensor, conn: &Connection) -> Result<FieldTensor, GeometryError> {
    if x.rank() != 0 {
        return Err(GeometryError::Shape { op: "Box", got: describe(x) });
    }
    let alg = algebra();
    let mut d = x.clone();
    for _ in 0..4 {
        d = covariant_derivative(&d, conn);
    }
    // raised Jordan tensor g^{A ij}
    let jr = |a: usize, i: usize, j: usize| &(alg.jordan.get(&[a, i, j]) * &alg.ginv[i]) * &alg.ginv[j];
    let mut acc = Field::zero();
    for a in 0..5 {
        for (i, j) in pairs(|i, j| !alg.jordan.get(&[a, i, j]).is_zero()) {
            for (k, l) in pairs(|k, l| !alg.jordan.get(&[a, k, l]).is_zero()) {
                let c = &(&alg.gv[a] * &jr(a, i, j)) * &jr(a, k, l);
                acc.add_in_place(d.get(&[i, j, k, l]), &c);
            }
        }
    }
    Ok(GenTensor::scalar(acc))
}

fn pairs(keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (0..10).flat_map(|i| (0..10).map(move |j| (i, j))).filter(|&(i, j)| keep(i, j)).collect()
}

pub fn invariant_operator(op: Operator, x: &FieldTensor, conn: &Connection) -> Result<FieldTensor, GeometryError> {
    match op {
        Operator::Grad => Ok(grad(x, conn)),
        Operator::Div => div(x, conn),
        Operator::Curl => Ok(curl(x, conn)),
        Operator::Laplacian => Ok(laplacian(x, conn)),
        Operator::VersorLaplacian => Ok(versor_laplacian(x, conn)),
        Operator::Box => box_operator(x, conn),
    }
}
