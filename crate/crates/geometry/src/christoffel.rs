//! The torsion-free connection `C = Γ + ½T` and its curvature.

use adskit_algebra::algebra;
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Scalar};
use serde::Serialize;

use crate::connection::Connection;
use crate::curvature::{matrix_curvature, scalar_curvature, vector_curvature};
use crate::fmat::FieldMatrix;

const V: Kind = Kind::Vector;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChristoffelReport {
    /// `C^k_ij`
    pub symbols: FieldTensor,
    /// `R̂^l_{ijk}`
    pub riemann: FieldTensor,
    /// `R̂_ij = R̂^y_{iyj}`
    pub ricci: FieldTensor,
    pub scalar: Field,
}

/// Which sign of the torsion-squared shift to compare against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shift {
    /// `R̂ = R + ¼TT`, `R̂_ij = R_ij - (3/2)g_ij`, `R̂ = R - 15`.
    Printed,
    /// `R̂ = R - ¼TT`, `R̂_ij = R_ij + (3/2)g_ij`, `R̂ = R + 15`.
    Opposite,
}

pub fn christoffel_comparison(conn: &Connection) -> ChristoffelReport {
    let alg = algebra();
    let half = Scalar::frac(1, 2);
    let mats: Vec<FieldMatrix> = (0..10)
        .map(|i| conn.vector_matrix(i).add(&FieldMatrix::scaled(&alg.adjoint[i], &Field::constant(half.clone()))))
        .collect();
    let symbols = GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V)], |ix| mats[ix[1]].get(ix[0], ix[2]).clone());
    let curv = matrix_curvature(&mats);
    let riemann = GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V), Axis::down(V)], |ix| {
        curv[10 * ix[1] + ix[2]].get(ix[0], ix[3]).clone()
    });
    let ricci = riemann_ricci(&riemann);
    let scalar = scalar_curvature(&ricci);
    ChristoffelReport { symbols, riemann, ricci, scalar }
}

/// `R_ij = R^y_{iyj}`
pub fn riemann_ricci(riemann: &FieldTensor) -> FieldTensor {
    GenTensor::from_fn(vec![Axis::down(V), Axis::down(V)], |ix| {
        let mut r = Field::zero();
        for y in 0..10 {
            r.add_in_place(riemann.get(&[y, ix[0], y, ix[1]]), &Scalar::one());
        }
        r
    })
}

/// Residuals of the three relations between the torsion-free and the
/// original curvature: Riemann, Ricci and scalar.
pub fn christoffel_residuals(conn: &Connection, shift: Shift) -> (FieldTensor, FieldTensor, FieldTensor) {
    let alg = algebra();
    let sign = match shift {
        Shift::Printed => Scalar::one(),
        Shift::Opposite => Scalar::int(-1),
    };
    let hat = christoffel_comparison(conn);
    let riem = vector_curvature(conn);
    let quarter = &sign * &Scalar::frac(1, 4);
    let d_riem = GenTensor::from_fn(riem.axes().to_vec(), |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        let mut tt = Scalar::zero();
        for m in 0..10 {
            tt += &(alg.t(m, i, j) * alg.t(l, m, k));
        }
        let mut d = hat.riemann.get(ix) - riem.get(ix);
        d.add_in_place(&Field::one(), &-(&quarter * &tt));
        d
    });
    // the Ricci relation is checked against R_ij = R^y_{iyj} of the same Riemann tensor
    let ric = riemann_ricci(&riem);
    let shift_ricci = &sign * &Scalar::frac(-3, 2);
    let d_ricci = GenTensor::from_fn(ric.axes().to_vec(), |ix| {
        let mut d = hat.ricci.get(ix) - ric.get(ix);
        if ix[0] == ix[1] {
            d.add_in_place(&Field::one(), &-(&shift_ricci * &alg.g[ix[0]]));
        }
        d
    });
    let r = scalar_curvature(&ric);
    let mut d_scalar = &hat.scalar - &r;
    d_scalar.add_in_place(&Field::one(), &(&sign * &Scalar::int(15)));
    (d_riem, d_ricci, GenTensor::scalar(d_scalar))
}
