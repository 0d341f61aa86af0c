//! Local action of the basis on tensors of any index structure.

use adskit_core::{Axis, GenTensor, Kind, Matrix, Ring};

use crate::lie::algebra;

/// Matrix by which `T_k` acts on one axis: the representation matrix on
/// upper indices, minus its transpose on lower ones, zero on bullets.
pub fn axis_generator(axis: Axis, k: usize) -> Matrix {
    let alg = algebra();
    let m = match axis.kind {
        Kind::Vector => &alg.adjoint[k],
        Kind::Versor => &alg.versor[k],
        Kind::Spinor => &alg.spinor[k],
        Kind::Bullet(_) => return Matrix::zeros(1, 1),
    };
    if axis.upper {
        m.clone()
    } else {
        m.transpose().neg()
    }
}

/// `T_k**(X)`: the derivation extending `T_k` over every axis.
pub fn local_action<V: Ring>(k: usize, t: &GenTensor<V>) -> GenTensor<V> {
    let mut out = GenTensor::zeros(t.axes().to_vec());
    for (n, ax) in t.axes().iter().enumerate() {
        if matches!(ax.kind, Kind::Bullet(_)) {
            continue;
        }
        let part = t.transform_axis(n, &axis_generator(*ax, k));
        out = out.add(&part).expect("same axes");
    }
    out
}

/// First generator under which `t` is not invariant.
pub fn invariance_violation<V: Ring>(t: &GenTensor<V>) -> Option<usize> {
    (0..10).find(|&k| !local_action(k, t).is_zero())
}
