//! The extended Dirac operator on spinor fields, its plane-wave spectrum,
//! the γ-matrix identification, probability currents and the Lagrangian
//! density.

use adskit_algebra::algebra;
use adskit_algebra::basis::{omega, p_matrix};
use adskit_core::{Axis, Field, FieldTensor, GenTensor, Kind, Matrix, Momentum, Rational, Scalar};
use serde::Serialize;

use crate::connection::{random_polynomial, Connection};
use crate::derivative::covariant_derivative;
use crate::operators::curl;
use crate::GeometryError;

/// A complex 4-component spinor field `ψ^α`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpinorField(pub [Field; 4]);

impl SpinorField {
    pub fn zero() -> Self {
        SpinorField(std::array::from_fn(|_| Field::zero()))
    }

    pub fn constant(u: &[Scalar]) -> Self {
        SpinorField(std::array::from_fn(|a| Field::constant(u[a].clone())))
    }

    /// `u · exp(i p·x)`
    pub fn plane_wave(u: &[Scalar], p: &Momentum) -> Self {
        let w = Field::plane_wave(p.clone());
        SpinorField(std::array::from_fn(|a| w.scale(&u[a])))
    }

    pub fn conj(&self) -> Self {
        SpinorField(std::array::from_fn(|a| self.0[a].conj()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Field::is_zero)
    }

    pub fn add(&self, o: &SpinorField) -> Self {
        SpinorField(std::array::from_fn(|a| &self.0[a] + &o.0[a]))
    }

    pub fn sub(&self, o: &SpinorField) -> Self {
        SpinorField(std::array::from_fn(|a| &self.0[a] - &o.0[a]))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        SpinorField(std::array::from_fn(|a| self.0[a].scale(s)))
    }

    pub fn times(&self, f: &Field) -> Self {
        SpinorField(std::array::from_fn(|a| &self.0[a] * f))
    }

    pub fn apply(&self, m: &Matrix) -> Self {
        SpinorField(std::array::from_fn(|r| {
            let mut acc = Field::zero();
            for c in 0..4 {
                if !m.get(r, c).is_zero() {
                    acc.add_in_place(&self.0[c], m.get(r, c));
                }
            }
            acc
        }))
    }

    pub fn partial(&self, k: usize) -> Self {
        SpinorField(std::array::from_fn(|a| self.0[a].partial(k)))
    }

    pub fn to_tensor(&self) -> FieldTensor {
        GenTensor::from_vec(vec![Axis::up(Kind::Spinor)], self.0.to_vec()).expect("spinor shape")
    }

    pub fn from_tensor(t: &FieldTensor) -> Self {
        SpinorField(std::array::from_fn(|a| t.get(&[a]).clone()))
    }

    pub fn first_nonzero(&self) -> Option<(usize, &Field)> {
        self.0.iter().enumerate().find(|(_, f)| !f.is_zero())
    }
}

/// Seeded complex polynomial spinor times `exp(i(t + 2y))`.
pub fn random_spinor(seed: u64, active: &[usize], degree: u32) -> SpinorField {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5917);
    let wave = Field::plane_wave(Momentum::from_ints([1, 0, 2, 0, 0, 0, 0, 0, 0, 0]));
    SpinorField(std::array::from_fn(|_| {
        let re = random_polynomial(&mut rng, active, degree);
        let im = random_polynomial(&mut rng, active, degree.saturating_sub(1));
        &(&re + &im.scale(&Scalar::i())) * &wave
    }))
}

/// `aᵀ M b`
pub fn bilinear(a: &SpinorField, m: &Matrix, b: &SpinorField) -> Field {
    let mut acc = Field::zero();
    for r in 0..4 {
        for c in 0..4 {
            let s = m.get(r, c);
            if !s.is_zero() && !a.0[r].is_zero() && !b.0[c].is_zero() {
                acc.add_in_place(&(&a.0[r] * &b.0[c]), s);
            }
        }
    }
    acc
}

/// A real Crump factor `h_•`, constant in the bullet basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrumpFactor {
    h: Scalar,
}

impl CrumpFactor {
    pub fn new(h: Scalar) -> Result<Self, GeometryError> {
        if h.is_zero() {
            return Err(GeometryError::Unsupported("zero Crump factor".into()));
        }
        if !h.is_real() {
            return Err(GeometryError::Unsupported(format!("complex Crump factor {h}")));
        }
        Ok(CrumpFactor { h })
    }

    pub fn one() -> Self {
        CrumpFactor { h: Scalar::one() }
    }

    pub fn value(&self) -> &Scalar {
        &self.h
    }

    pub fn as_tensor(&self) -> FieldTensor {
        GenTensor::from_vec(vec![Axis::bullet(-1)], vec![Field::constant(self.h.clone())]).expect("bullet shape")
    }

    /// `H_k` defined by `∇_k h = H_k h`.
    pub fn connection(&self, conn: &Connection) -> Vec<Field> {
        let d = covariant_derivative(&self.as_tensor(), conn);
        let inv = self.h.inv().expect("nonzero");
        (0..10).map(|k| d.get(&[k, 0]).scale(&inv)).collect()
    }

    /// `H^k`
    pub fn raised(&self, conn: &Connection) -> Vec<Field> {
        let ginv = &algebra().ginv;
        self.connection(conn).iter().enumerate().map(|(k, f)| f.scale(&ginv[k])).collect()
    }
}

/// `T^μ_{kν}∇^kψ^ν`
pub fn extended_curl(psi: &SpinorField, conn: &Connection) -> SpinorField {
    SpinorField::from_tensor(&curl(&psi.to_tensor(), conn))
}

/// `H^k T^μ_{kν}ψ^ν`; the constraint asking this to vanish is reported,
/// never imposed.
pub fn annoyance(psi: &SpinorField, h: &CrumpFactor, conn: &Connection) -> SpinorField {
    let alg = algebra();
    let mut out = SpinorField::zero();
    for (k, hk) in h.raised(conn).iter().enumerate() {
        if !hk.is_zero() {
            out = out.add(&psi.apply(&alg.spinor[k]).times(hk));
        }
    }
    out
}

/// `T∇ψ - αH^kT_kψ + λψ`; the Lagrangian equation is `α = -½`.
pub fn alpha_residual(psi: &SpinorField, lambda: &Scalar, alpha: &Scalar, h: &CrumpFactor, conn: &Connection) -> SpinorField {
    extended_curl(psi, conn).sub(&annoyance(psi, h, conn).scale(alpha)).add(&psi.scale(lambda))
}

/// `T^ν_{kμ}∇^kψ^μ + ½H^kT^ν_{kμ}ψ^μ + λψ^ν`
pub fn dirac_residual(psi: &SpinorField, lambda: &Scalar, h: &CrumpFactor, conn: &Connection) -> SpinorField {
    alpha_residual(psi, lambda, &Scalar::frac(-1, 2), h, conn)
}

/// `-T∂_t + X∂_x + Y∂_y + Z∂_z`
pub fn poincare_operator(psi: &SpinorField) -> SpinorField {
    let alg = algebra();
    let mut out = psi.partial(0).apply(&alg.spinor[0]).scale(&Scalar::int(-1));
    for k in 1..4 {
        out = out.add(&psi.partial(k).apply(&alg.spinor[k]));
    }
    out
}

/// `i p_k g^{kk} T_k`: the flat extended curl on `u·exp(i p·x)`.
pub fn dirac_matrix(p: &Momentum) -> Matrix {
    let alg = algebra();
    let mut m = Matrix::zeros(4, 4);
    for k in 0..10 {
        if p.0[k] != Rational::from_integer(0.into()) {
            let c = &(&Scalar::i() * &Scalar::real(p.0[k].clone())) * &alg.ginv[k];
            m = m.add(&alg.spinor[k].scale(&c));
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Spectrum {
    /// All four eigenvalues, with multiplicity.
    Eigenvalues(Vec<Scalar>),
    /// Characteristic polynomial coefficients `c_0..c_4`.
    CharPoly(Vec<Scalar>),
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Square root within the Gaussian rationals of a real scalar.
fn real_sqrt(s: &Scalar) -> Option<Scalar> {
    if !s.is_real() {
        return None;
    }
    let zero = Rational::from_integer(0.into());
    if *s.re() >= zero {
        rational_sqrt(s.re()).map(Scalar::real)
    } else {
        rational_sqrt(&-s.re().clone()).map(|r| Scalar::new(zero, r))
    }
}

/// Eigenvalues of the flat operator on phase-`p` plane waves. Closed form
/// for a single nonzero momentum component, else the characteristic
/// polynomial.
pub fn plane_wave_dispersion(p: &Momentum) -> Spectrum {
    let m = dirac_matrix(p);
    let zero = Rational::from_integer(0.into());
    let aligned = p.0.iter().filter(|c| **c != zero).count() <= 1;
    if aligned && m.trace().is_zero() {
        if let Some(r) = m.mul(&m).as_scalar_multiple().as_ref().and_then(real_sqrt) {
            let neg = -&r;
            return Spectrum::Eigenvalues(vec![r.clone(), r, neg.clone(), neg]);
        }
    }
    Spectrum::CharPoly(m.char_poly())
}

/// Flat plane-wave solutions `u·exp(i p·x)` of the residual equation with
/// `h` constant: one per closed-form eigenvalue `ν` of [`dirac_matrix`] and
/// eigenvector `u`, with `λ = -ν`.
pub fn plane_wave_solutions(p: &Momentum) -> Vec<(Scalar, SpinorField)> {
    let Spectrum::Eigenvalues(ev) = plane_wave_dispersion(p) else {
        return Vec::new();
    };
    let m = dirac_matrix(p);
    let mut out = Vec::new();
    for (n, nu) in ev.iter().enumerate() {
        if n > 0 && ev[n - 1] == *nu {
            continue;
        }
        for u in m.sub(&Matrix::identity(4).scale(nu)).nullspace() {
            out.push((-nu, SpinorField::plane_wave(&u, p)));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaCheck {
    pub name: String,
    pub holds: bool,
}

/// `γ⁰ = -2iT, γ^a = 2i(X, Y, Z)`
pub fn gamma_matrices() -> [Matrix; 4] {
    let alg = algebra();
    let two_i = Scalar::complex(0, 1, 2, 1);
    std::array::from_fn(|mu| {
        let s = if mu == 0 { -&two_i } else { two_i.clone() };
        alg.spinor[mu].scale(&s)
    })
}

pub fn gamma_suite() -> Vec<GammaCheck> {
    let alg = algebra();
    let g = gamma_matrices();
    let id = Matrix::identity(4);
    let eta = |mu: usize, nu: usize| match (mu == nu, mu) {
        (false, _) => Scalar::zero(),
        (true, 0) => Scalar::int(1),
        _ => Scalar::int(-1),
    };
    let mut out = Vec::new();
    let mut check = |name: String, holds: bool| out.push(GammaCheck { name, holds });
    for mu in 0..4 {
        for nu in mu..4 {
            let want = id.scale(&(&Scalar::int(2) * &eta(mu, nu)));
            check(format!("anticommutator_{mu}{nu}"), g[mu].anticommutator(&g[nu]) == want);
        }
    }
    for (mu, gm) in g.iter().enumerate() {
        let dagger = gm.conj_transpose();
        let (kind, want) = if mu == 0 { ("hermitian", gm.clone()) } else { ("anti_hermitian", gm.neg()) };
        check(format!("gamma{mu}_{kind}"), dagger == want);
        check(format!("gamma{mu}_unitary"), gm.mul(&dagger) == id);
    }
    let txyz = alg.spinor[0].mul(&alg.spinor[1]).mul(&alg.spinor[2]).mul(&alg.spinor[3]).scale(&Scalar::int(8));
    check("txyz_is_p_lambda".into(), txyz == p_matrix(0));
    out
}

/// The probability currents of a spinor field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Currents {
    /// `J = h s^•_{αβ} ψ^α ψ̄^β`
    pub scalar: Field,
    /// `J_k = h s^•_{λα} T^λ_{kβ} ψ̄^α ψ^β`
    pub vector: Vec<Field>,
    /// `J_A = h s^•_{λα} T^λ_{Aβ} ψ̄^α ψ^β`
    pub versor: Vec<Field>,
    /// `J^•_k = s^•_{λα} T^λ_{kβ} ψ̄^α ψ^β`
    pub bullet: Vec<Field>,
}

/// `J^•_k`
fn bullet_current(psi: &SpinorField) -> Vec<Field> {
    let alg = algebra();
    let bar = psi.conj();
    let wt = omega().transpose();
    (0..10).map(|k| bilinear(&bar, &wt.mul(&alg.spinor[k]), psi)).collect()
}

pub fn currents(psi: &SpinorField, h: &CrumpFactor) -> Currents {
    let bar = psi.conj();
    let wt = omega().transpose();
    let bullet = bullet_current(psi);
    Currents {
        scalar: bilinear(psi, &omega(), &bar).scale(&h.h),
        vector: bullet.iter().map(|f| f.scale(&h.h)).collect(),
        versor: (0..5).map(|a| bilinear(&bar, &wt.mul(&p_matrix(a)), psi).scale(&h.h)).collect(),
        bullet,
    }
}

fn divergence(t: &FieldTensor, conn: &Connection) -> Field {
    let ginv = &algebra().ginv;
    let d = covariant_derivative(t, conn);
    let mut acc = Field::zero();
    for k in 0..10 {
        let mut ix = vec![k, k];
        ix.resize(d.rank(), 0);
        acc.add_in_place(d.get(&ix), &ginv[k]);
    }
    acc
}

/// `∇^kJ^•_k`, differentiating the bullet current as a weight-one covector.
pub fn bullet_divergence(psi: &SpinorField, conn: &Connection) -> Field {
    let t = GenTensor::from_vec(vec![Axis::down(Kind::Vector), Axis::bullet(1)], bullet_current(psi)).expect("current shape");
    divergence(&t, conn)
}

/// `(∇^kJ_k, H^kJ_k)`
pub fn vector_divergence(psi: &SpinorField, h: &CrumpFactor, conn: &Connection) -> (Field, Field) {
    let j = currents(psi, h).vector;
    let t = GenTensor::from_vec(vec![Axis::down(Kind::Vector)], j.clone()).expect("current shape");
    let mut hj = Field::zero();
    for (hk, jk) in h.raised(conn).iter().zip(&j) {
        if !hk.is_zero() {
            hj.add_in_place(&(hk * jk), &Scalar::one());
        }
    }
    (divergence(&t, conn), hj)
}

/// `∇^kJ_k - (1+2α)H^kJ_k`, zero on real-λ solutions of the α-equation.
pub fn conservation_defect(psi: &SpinorField, alpha: &Scalar, h: &CrumpFactor, conn: &Connection) -> Field {
    let (div, hj) = vector_divergence(psi, h, conn);
    let factor = &Scalar::one() + &(&Scalar::int(2) * alpha);
    let mut out = div;
    out.add_in_place(&hj, &-factor);
    out
}

/// `h[ψ̄ᵀΩᵀρ + ψᵀΩᵀρ̄] + h(λ̄-λ)ψ̄ᵀΩᵀψ` with `ρ` the α-residual: what
/// [`conservation_defect`] must equal for every spinor field.
pub fn conservation_source(psi: &SpinorField, lambda: &Scalar, alpha: &Scalar, h: &CrumpFactor, conn: &Connection) -> Field {
    let rho = alpha_residual(psi, lambda, alpha, h, conn);
    let wt = omega().transpose();
    let bar = psi.conj();
    let mut out = bilinear(&bar, &wt, &rho);
    out.add_in_place(&bilinear(psi, &wt, &rho.conj()), &Scalar::one());
    out.add_in_place(&bilinear(&bar, &wt, psi), &(&lambda.conj() - lambda));
    out.scale(&h.h)
}

/// `(L_D, L)` with `L = ψ̄_μ T^μ_{kν}∇^kψ^ν + λψ̄_νψ^ν` and `ψ_ν = h s^•_{νβ}ψ^β`.
pub fn dirac_lagrangian(psi: &SpinorField, lambda: &Scalar, h: &CrumpFactor, conn: &Connection) -> (Field, Field) {
    let inner = extended_curl(psi, conn).add(&psi.scale(lambda));
    let l = bilinear(&psi.conj(), &omega().transpose(), &inner).scale(&h.h);
    (l.im_part(), l)
}
