//! Named differential identities, each evaluated as an exact tensor of
//! fields that must vanish term by term.

use adskit_algebra::algebra;
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::christoffel::{christoffel_residuals, Shift};
use crate::connection::{random_polynomial, Connection};
use crate::curvature::*;
use crate::derivative::covariant_derivative;
use crate::equations::{ampere_gauss_source, ampere_gauss_torsion_free};
use crate::operators::{curl, div, grad};
use crate::GeometryError;

const V: Kind = Kind::Vector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub leading_term: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub name: String,
    /// First nonzero component, if any.
    pub witness: Option<Witness>,
    /// Holds only when the connection's torsion is the structure constants.
    pub framework_only: bool,
}

impl Residual {
    pub fn of(name: &str, t: &FieldTensor) -> Self {
        let witness = t.first_nonzero().map(|(indices, v)| Witness {
            indices,
            leading_term: v.leading_term().map(|l| l.to_string()).unwrap_or_default(),
        });
        Residual { name: name.to_string(), witness, framework_only: false }
    }

    fn framework(mut self) -> Self {
        self.framework_only = true;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.witness.is_none()
    }
}

/// Test fields for the operator identities.
#[derive(Clone, Debug)]
pub struct Probes {
    pub scalar: Field,
    /// Upper vector field `v^i`.
    pub vector: FieldTensor,
}

impl Probes {
    pub fn seeded(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
        let active = [0, 1, 4];
        let mut scalar = random_polynomial(&mut rng, &active, 2);
        if scalar.is_zero() {
            scalar = &Field::var(0) * &Field::var(1);
        }
        let comps: Vec<Field> = (0..10).map(|_| random_polynomial(&mut rng, &active, 2)).collect();
        let vector = GenTensor::from_vec(vec![Axis::up(V)], comps).expect("vector shape");
        Probes { scalar, vector }
    }
}

fn t3(up: bool, f: impl FnMut(&[usize]) -> Field) -> FieldTensor {
    let first = if up { Axis::up(V) } else { Axis::down(V) };
    GenTensor::from_fn(vec![first, Axis::down(V), Axis::down(V)], f)
}

fn t4(f: impl FnMut(&[usize]) -> Field) -> FieldTensor {
    GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V), Axis::down(V)], f)
}

fn vec_down(f: impl FnMut(&[usize]) -> Field) -> FieldTensor {
    GenTensor::from_fn(vec![Axis::down(V)], f)
}

fn vec_up(f: impl FnMut(&[usize]) -> Field) -> FieldTensor {
    GenTensor::from_fn(vec![Axis::up(V)], f)
}

fn sum(parts: impl IntoIterator<Item = (Field, Scalar)>) -> Field {
    let mut acc = Field::zero();
    for (f, s) in parts {
        acc.add_in_place(&f, &s);
    }
    acc
}

fn cyc(i: usize, j: usize, k: usize) -> [(usize, usize, usize); 3] {
    [(i, j, k), (j, k, i), (k, i, j)]
}

/// Derivative block `∇_k X` with its prepended index fixed.
fn d_at<'a>(d: &'a FieldTensor, k: usize, rest: &[usize]) -> &'a Field {
    let mut ix = vec![k];
    ix.extend_from_slice(rest);
    d.get(&ix)
}

pub fn identity_suite(conn: &Connection) -> Result<Vec<Residual>, GeometryError> {
    identity_suite_with(conn, &Probes::seeded(1))
}

pub fn identity_suite_with(conn: &Connection, probes: &Probes) -> Result<Vec<Residual>, GeometryError> {
    let alg = algebra();
    let one = Scalar::one;
    let half = Scalar::frac(1, 2);
    let t = |k: usize, i: usize, j: usize| alg.t(k, i, j).clone();
    let mut out = Vec::new();

    let spin = spinor_curvature(conn);
    let versor_part = {
        let vp = GenTensor::from_fn(vec![Axis::up(Kind::Versor), Axis::down(V), Axis::down(V)], |ix| {
            let inv = alg.gv[ix[0]].inv().expect("diagonal versor metric");
            let mut acc = Field::zero();
            for a in 0..4 {
                for b in 0..4 {
                    let p = alg.p[ix[0]].get(b, a);
                    if !p.is_zero() {
                        acc.add_in_place(spin.get(&[a, ix[1], ix[2], b]), &(p * &inv));
                    }
                }
            }
            acc
        });
        Residual::of("versor_projection", &vp)
    };
    out.push(versor_part);
    let (f, r) = curvature_components(&spin)?;
    let riem = vector_curvature(conn);
    let ric = ricci(&r);
    let scal = scalar_curvature(&ric);
    let u = ussher(conn, &r);

    out.push(Residual::of("field_dual_path", &f.sub(&field_from_potential(conn)).expect("shape")));
    out.push(Residual::of("reduced_dual_path", &r.sub(&reduced_from_potential(conn)).expect("shape")));
    out.push(Residual::of("bullet_curvature", &bullet_curvature(conn).sub(&f.scale(&Scalar::int(2))).expect("shape")));
    out.push(Residual::of("riemann_decomposition", &riem.sub(&riemann_from_reduced(&r)).expect("shape")));
    out.push(Residual::of("versor_curvature", &versor_curvature(conn).sub(&versor_from_reduced(&r)).expect("shape")));

    // first Bianchi identity, with the torsion of the framework
    let tor = alg.torsion.map(|v| Field::constant(v.clone()));
    let dtor = covariant_derivative(&tor, conn);
    let b1 = t4(|ix| {
        let l = ix[0];
        sum(cyc(ix[1], ix[2], ix[3]).into_iter().flat_map(|(i, j, k)| {
            let mut terms = vec![(riem.get(&[l, i, j, k]).clone(), one()), (d_at(&dtor, k, &[l, i, j]).clone(), one())];
            let tt: Scalar = (0..10).map(|x| &t(l, k, x) * &t(x, i, j)).sum();
            terms.push((Field::constant(tt), one()));
            terms
        }))
    });
    out.push(Residual::of("bianchi_1", &b1).framework());
    let b1r = t4(|ix| {
        let l = ix[0];
        sum(cyc(ix[1], ix[2], ix[3])
            .into_iter()
            .flat_map(|(i, j, k)| (0..10).map(move |m| (m, i, j, k)))
            .map(|(m, i, j, k)| (r.get(&[m, i, j]).clone(), t(l, m, k))))
    });
    out.push(Residual::of("bianchi_1_reduced", &b1r).framework());

    // second Bianchi identity
    let driem = covariant_derivative(&riem, conn);
    let b2 = GenTensor::from_fn(vec![Axis::up(V), Axis::down(V), Axis::down(V), Axis::down(V), Axis::down(V)], |ix| {
        let (l, s) = (ix[0], ix[4]);
        sum(cyc(ix[1], ix[2], ix[3]).into_iter().flat_map(|(i, j, k)| {
            let mut terms = vec![(d_at(&driem, k, &[l, i, j, s]).clone(), one())];
            for x in 0..10 {
                let c = t(x, i, j);
                if !c.is_zero() {
                    terms.push((riem.get(&[l, k, x, s]).clone(), c));
                }
            }
            terms
        }))
    });
    out.push(Residual::of("bianchi_2", &b2).framework());
    let dr = covariant_derivative(&r, conn);
    let b2r = t4(|ix| {
        let l = ix[0];
        sum(cyc(ix[1], ix[2], ix[3]).into_iter().flat_map(|(i, j, k)| {
            let mut terms = vec![(d_at(&dr, i, &[l, j, k]).clone(), one())];
            for m in 0..10 {
                terms.push((r.get(&[l, i, m]).clone(), t(m, j, k)));
            }
            terms
        }))
    });
    out.push(Residual::of("bianchi_2_reduced", &b2r).framework());
    let df = covariant_derivative(&f, conn);
    let b2f = t3(false, |ix| {
        sum(cyc(ix[0], ix[1], ix[2]).into_iter().flat_map(|(i, j, k)| {
            let mut terms = vec![(d_at(&df, i, &[j, k]).clone(), one())];
            for m in 0..10 {
                terms.push((f.get(&[i, m]).clone(), t(m, j, k)));
            }
            terms
        }))
    });
    out.push(Residual::of("bianchi_2_field", &b2f).framework());
    let fg = t3(false, |ix| sum(cyc(ix[0], ix[1], ix[2]).into_iter().map(|(i, j, k)| (f.get(&[j, k]).partial(i), one()))));
    out.push(Residual::of("faraday_gauss", &fg));

    // contractions
    out.push(Residual::of("ricci_trace", &vec_down(|ix| sum((0..10).map(|m| (r.get(&[m, ix[0], m]).clone(), one()))))).framework());
    let sym = GenTensor::from_fn(vec![Axis::down(V), Axis::down(V)], |ix| ric.get(ix) - ric.get(&[ix[1], ix[0]]));
    out.push(Residual::of("ricci_symmetry", &sym).framework());
    let divr = GenTensor::from_fn(vec![Axis::down(V), Axis::down(V)], |ix| sum((0..10).map(|k| (d_at(&dr, k, &[k, ix[0], ix[1]]).clone(), one()))));
    out.push(Residual::of("div_reduced", &divr).framework());
    let dric = covariant_derivative(&ric, conn);
    let dscal = covariant_derivative(&GenTensor::scalar(scal.clone()), conn);
    let div_ricci = vec_down(|ix| sum((0..10).map(|tt| (dric.get(&[tt, tt, ix[0]]).clone(), alg.ginv[tt].clone()))));
    let grad_r = vec_down(|ix| {
        let mut g = dscal.get(&[ix[0]]).clone();
        g.add_in_place(div_ricci.get(ix), &Scalar::int(-2));
        g
    });
    out.push(Residual::of("grad_scalar", &grad_r).framework());
    let ein = einstein(&ric, &scal);
    let dein = covariant_derivative(&ein, conn);
    let div_ein = vec_down(|ix| sum((0..10).map(|i| (dein.get(&[i, i, ix[0]]).clone(), alg.ginv[i].clone()))));
    out.push(Residual::of("einstein_divergence", &div_ein).framework());

    // Ussher's tensor
    let du = covariant_derivative(&u, conn);
    let u1 = vec_up(|ix| sum((0..10).map(|m| (du.get(&[m, ix[0], m]).clone(), alg.ginv[m].clone()))));
    out.push(Residual::of("ussher_1", &u1).framework());
    let tr_u = sum((0..10).map(|k| (u.get(&[k, k]).clone(), one())));
    out.push(Residual::of("ussher_2", &GenTensor::scalar(&tr_u - &scal.scale(&half))).framework());
    let tu = vec_down(|ix| {
        let i = ix[0];
        sum((0..10).flat_map(|m| (0..10).map(move |k| (m, k))).map(|(m, k)| (u.get(&[k, m]).clone(), t(m, i, k))))
    });
    let u3 = vec_down(|ix| tu.get(ix) + &div_ricci.get(ix).clone());
    out.push(Residual::of("ussher_3", &u3).framework());
    let u4 = vec_down(|ix| {
        let mut x = tu.get(ix).clone();
        x.add_in_place(dscal.get(ix), &half);
        x
    });
    out.push(Residual::of("ussher_4", &u4).framework());
    let dtru = covariant_derivative(&GenTensor::scalar(tr_u.clone()), conn);
    let u5 = vec_down(|ix| tu.get(ix) + dtru.get(ix));
    out.push(Residual::of("ussher_5", &u5).framework());
    let u6 = vec_down(|ix| {
        let m = ix[0];
        let mut x = sum((0..10).map(|k| (du.get(&[k, k, m]).clone(), one())));
        for a in 0..10 {
            for b in 0..10 {
                let c = t(a, m, b);
                if !c.is_zero() {
                    x.add_in_place(u.get(&[b, a]), &c);
                }
            }
        }
        // g^ij R^l_ik T^s_lm R^k_js
        for i in 0..10 {
            for l in 0..10 {
                for k in 0..10 {
                    let rl = r.get(&[l, i, k]);
                    if rl.is_zero() {
                        continue;
                    }
                    for s in 0..10 {
                        let c = t(s, l, m);
                        let rk = r.get(&[k, i, s]);
                        if !c.is_zero() && !rk.is_zero() {
                            x.add_in_place(&(rl * rk), &-(&c * &alg.ginv[i]));
                        }
                    }
                }
            }
        }
        x
    });
    out.push(Residual::of("ussher_6", &u6).framework());

    // Ussher's identity in spinor, vector and scalar form
    let raised_divergence = |curv: &FieldTensor| -> FieldTensor {
        // V_i… = ∇^j K_ji… - ½ g^ts T^r_it K_rs…, for K with its pair of form indices first
        let dk = covariant_derivative(curv, conn);
        let mut axes = vec![Axis::down(V)];
        axes.extend_from_slice(&curv.axes()[2..]);
        let inner = GenTensor::from_fn(axes, |ix| {
            let i = ix[0];
            let rest = &ix[1..];
            let mut acc = Field::zero();
            for j in 0..10 {
                let mut at = vec![j, j, i];
                at.extend_from_slice(rest);
                acc.add_in_place(dk.get(&at), &alg.ginv[j]);
                for rr in 0..10 {
                    let c = t(rr, i, j);
                    if !c.is_zero() {
                        let mut at2 = vec![rr, j];
                        at2.extend_from_slice(rest);
                        acc.add_in_place(curv.get(&at2), &-(&(&half * &c) * &alg.ginv[j]));
                    }
                }
            }
            acc
        });
        let dv = covariant_derivative(&inner, conn);
        GenTensor::from_fn(inner.axes()[1..].to_vec(), |rest| {
            let mut acc = Field::zero();
            for i in 0..10 {
                let mut at = vec![i, i];
                at.extend_from_slice(rest);
                acc.add_in_place(dv.get(&at), &alg.ginv[i]);
            }
            acc
        })
    };
    // form indices first: (i, j, α, β) and (i, j, k)
    let spin_forms = spin.permute(&[1, 2, 0, 3]).expect("spinor curvature axes");
    out.push(Residual::of("ussher_identity", &raised_divergence(&spin_forms)).framework());
    let r_forms = r.permute(&[1, 2, 0]).expect("reduced curvature axes");
    out.push(Residual::of("ussher_identity_reduced", &raised_divergence(&r_forms)).framework());
    let j = ampere_gauss_source(conn)?;
    let dj = covariant_derivative(&j, conn);
    let cons = GenTensor::scalar(sum((0..10).map(|i| (dj.get(&[i, i]).clone(), alg.ginv[i].clone()))));
    out.push(Residual::of("ampere_gauss_conservation", &cons).framework());
    out.push(Residual::of("ampere_gauss_torsion_free", &j.sub(&ampere_gauss_torsion_free(conn)?).expect("shape")));

    // invariant operators
    let gf = grad(&GenTensor::scalar(probes.scalar.clone()), conn);
    let cg = curl(&gf, conn).add(&gf.scale(&Scalar::int(3))).expect("shape");
    out.push(Residual::of("curl_grad", &cg).framework());
    let dv = div(&probes.vector, conn)?;
    let dcv = div(&curl(&probes.vector, conn), conn)?;
    out.push(Residual::of("div_curl", &dcv.add(&dv.scale(&Scalar::int(3))).expect("shape")).framework());

    // Haar measure: Γ^a_{ka} = 0, so ε = 1 solves ∂_kε = εΓ^a_{ka}
    let haar = vec_down(|ix| {
        conn.vector_matrix(ix[0]).trace()
    });
    out.push(Residual::of("haar_trace", &haar));

    // torsion-free curvature against the printed shift
    let (cr, cric, cs) = christoffel_residuals(conn, Shift::Printed);
    out.push(Residual::of("christoffel_riemann", &cr).framework());
    out.push(Residual::of("christoffel_ricci", &cric).framework());
    out.push(Residual::of("christoffel_scalar", &cs).framework());
    let (or, oric, os) = christoffel_residuals(conn, Shift::Opposite);
    out.push(Residual::of("christoffel_riemann_opposite", &or).framework());
    out.push(Residual::of("christoffel_ricci_opposite", &oric).framework());
    out.push(Residual::of("christoffel_scalar_opposite", &os).framework());

    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
