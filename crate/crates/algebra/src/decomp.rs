//! Splitting tensor spaces into irreducibles, the symplectic form and the
//! superalgebra constants.

use std::collections::BTreeMap;

use adskit_core::{rat, Axis, Kind, Matrix, Rational, Scalar, Tensor};
use serde::Serialize;

use crate::basis::{self, NAMES};
use crate::lie::algebra;
use crate::roots::{self, Weight};
use crate::AlgebraError;

/// `s^•_{αβ}` (axes bullet(+1), spinor_, spinor_) and its dual `s_•^{αβ}`.
#[derive(Clone, Debug)]
pub struct SymplecticForm {
    pub lower: Tensor,
    pub upper: Tensor,
}

/// Both forms carry the printed Ω; the dual condition
/// `s_•^{αλ} s^•_{βλ} = 1^α_β` then holds because Ω is orthogonal.
pub fn symplectic_form() -> SymplecticForm {
    let om = basis::omega();
    let lower = Tensor::from_fn(vec![Axis::bullet(1), Axis::down(Kind::Spinor), Axis::down(Kind::Spinor)], |ix| {
        om.get(ix[1], ix[2]).clone()
    });
    let upper = Tensor::from_fn(vec![Axis::bullet(-1), Axis::up(Kind::Spinor), Axis::up(Kind::Spinor)], |ix| {
        om.get(ix[1], ix[2]).clone()
    });
    SymplecticForm { lower, upper }
}

impl SymplecticForm {
    /// `s_•^{αλ} s^•_{βλ}`, as a mixed spinor tensor with the bullets contracted.
    pub fn dual_product(&self) -> Tensor {
        // axes: b-, α^, λ^, b+, β_, λ_
        let both = self.upper.outer(&self.lower);
        both.contract(2, 5).and_then(|t| t.contract(0, 2)).expect("matching axes")
    }

    /// `s_•^{αβ} s^•_{αβ}` and the bullet weight of the product.
    pub fn full_contraction(&self) -> (Scalar, i32) {
        let both = self.upper.outer(&self.lower);
        let w = both.bullet_weight();
        let s = both.contract(1, 4).and_then(|t| t.contract(1, 3)).and_then(|t| t.contract(0, 1)).expect("matching axes");
        (s.entries()[0].clone(), w)
    }

    /// `v_β = s_{βα} v^α` (lower on the left).
    pub fn lower(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..4)
            .map(|b| (0..4).map(|a| self.lower.get(&[0, b, a]) * &v[a]).sum())
            .collect()
    }

    /// `v^γ = v_β s^{βγ}` (raise on the right).
    pub fn raise(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..4)
            .map(|g| (0..4).map(|b| &v[b] * self.upper.get(&[0, b, g])).sum())
            .collect()
    }
}

/// `M = ½·scalar·1 + x^k T_k + x^A P_A`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpinorTransform {
    pub scalar: Scalar,
    pub vector: Vec<Scalar>,
    pub versor: Vec<Scalar>,
}

pub fn decompose_spinor_transform(m: &Matrix) -> SpinorTransform {
    let alg = algebra();
    let scalar = &m.trace() / &Scalar::int(2);
    let vector = (0..10).map(|k| &alg.ginv[k] * &alg.spinor[k].mul(m).trace()).collect();
    let versor = (0..5).map(|a| &(&Scalar::one() / &alg.gv[a]) * &alg.p[a].mul(m).trace()).collect();
    SpinorTransform { scalar, vector, versor }
}

impl SpinorTransform {
    pub fn reconstruct(&self) -> Matrix {
        let alg = algebra();
        let mut m = Matrix::identity(4).scale(&(&self.scalar / &Scalar::int(2)));
        for (c, t) in self.vector.iter().zip(&alg.spinor) {
            m = m.add(&t.scale(c));
        }
        for (c, p) in self.versor.iter().zip(&alg.p) {
            m = m.add(&p.scale(c));
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Factor {
    Spinor,
    Versor,
    Vector,
}

impl Factor {
    pub fn dim(self) -> usize {
        match self {
            Factor::Spinor => 4,
            Factor::Versor => 5,
            Factor::Vector => 10,
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Factor::Spinor => Kind::Spinor,
            Factor::Versor => Kind::Versor,
            Factor::Vector => Kind::Vector,
        }
    }

    /// Generator matrices of this representation.
    pub fn matrices(self) -> &'static [Matrix] {
        let alg = algebra();
        match self {
            Factor::Spinor => &alg.spinor,
            Factor::Versor => &alg.versor,
            Factor::Vector => &alg.adjoint,
        }
    }

    fn highest(self) -> Weight {
        match self {
            Factor::Spinor => Weight::doubled(1, 1),
            Factor::Versor => Weight::int(1, 0),
            Factor::Vector => Weight::int(1, 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Symmetry {
    Full,
    Symmetric,
    Antisymmetric,
}

/// A tensor product of representations, optionally (anti)symmetrised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Space {
    pub factors: Vec<Factor>,
    pub symmetry: Symmetry,
}

impl Space {
    pub fn new(factors: Vec<Factor>, symmetry: Symmetry) -> Self {
        Space { factors, symmetry }
    }

    pub fn full_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim()).collect()
    }

    /// Columns spanning the space inside the full product, each with a pivot
    /// row that no other column touches.
    fn basis(&self) -> Result<Vec<(usize, Vec<(usize, Scalar)>)>, AlgebraError> {
        let shape = self.shape();
        let n = self.full_dim();
        if self.symmetry == Symmetry::Full {
            return Ok((0..n).map(|i| (i, vec![(i, Scalar::one())])).collect());
        }
        if self.factors.windows(2).any(|w| w[0] != w[1]) {
            return Err(AlgebraError::Dimension("symmetrised spaces need identical factors".into()));
        }
        let sign = self.symmetry == Symmetry::Antisymmetric;
        let mut out = Vec::new();
        for idx in adskit_core::MultiIndex::new(&shape) {
            let ordered = idx.windows(2).all(|p| if sign { p[0] < p[1] } else { p[0] <= p[1] });
            if !ordered {
                continue;
            }
            let mut col: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (perm, s) in permutations(idx.len()) {
                let p: Vec<usize> = perm.iter().map(|&k| idx[k]).collect();
                let off = flat(&p, &shape);
                let c = if sign && s < 0 { Scalar::int(-1) } else { Scalar::one() };
                *col.entry(off).or_insert_with(Scalar::zero) += &c;
            }
            let pivot = flat(&idx, &shape);
            let scale = col[&pivot].inv().expect("pivot entry is nonzero");
            let col: Vec<(usize, Scalar)> = col.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, &v * &scale)).collect();
            out.push((pivot, col));
        }
        Ok(out)
    }

    /// Sparse action of `T_k` on a vector of the full product.
    fn act_full(&self, k: usize, v: &BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let shape = self.shape();
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&off, x) in v {
            let idx = unflat(off, &shape);
            for (pos, f) in self.factors.iter().enumerate() {
                let m = &f.matrices()[k];
                for r in 0..f.dim() {
                    let c = m.get(r, idx[pos]);
                    if c.is_zero() {
                        continue;
                    }
                    let mut j = idx.clone();
                    j[pos] = r;
                    *out.entry(flat(&j, &shape)).or_insert_with(Scalar::zero) += &(c * x);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Generator matrices restricted to the space, in its own basis.
    pub fn action(&self) -> Result<Vec<Matrix>, AlgebraError> {
        let basis = self.basis()?;
        let pivots: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(c, (p, _))| (*p, c)).collect();
        let d = basis.len();
        let mut mats = Vec::with_capacity(10);
        for k in 0..10 {
            let mut m = Matrix::zeros(d, d);
            for (c, (_, col)) in basis.iter().enumerate() {
                let v: BTreeMap<usize, Scalar> = col.iter().cloned().collect();
                let w = self.act_full(k, &v);
                // Coordinates read off at pivots, then checked by reconstruction.
                let mut back: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (&off, x) in &w {
                    if let Some(&r) = pivots.get(&off) {
                        m.set(r, c, x.clone());
                        for (o, y) in &basis[r].1 {
                            *back.entry(*o).or_insert_with(Scalar::zero) += &(x * y);
                        }
                    }
                }
                back.retain(|_, v| !v.is_zero());
                if back != w {
                    return Err(AlgebraError::Mismatch(format!("space is not invariant under {}", NAMES[k])));
                }
            }
            mats.push(m);
        }
        Ok(mats)
    }

    fn max_highest(&self) -> Weight {
        self.factors.iter().fold(Weight::int(0, 0), |w, f| w.add(f.highest()))
    }
}

fn flat(idx: &[usize], shape: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (&i, &n)| acc * n + i)
}

fn unflat(mut off: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for p in (0..shape.len()).rev() {
        idx[p] = off % shape[p];
        off /= shape[p];
    }
    idx
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let s = if inv % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

/// `g^{ij} ρ(T_i) ρ(T_j)` for a list of generator matrices.
pub fn casimir_matrix(mats: &[Matrix]) -> Matrix {
    let alg = algebra();
    let n = mats[0].rows();
    (0..10).fold(Matrix::zeros(n, n), |acc, i| acc.add(&mats[i].mul(&mats[i]).scale(&alg.ginv[i])))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub mu: Rational,
    pub highest: Weight,
    pub dim: usize,
    /// Copies of the irreducible in this eigenspace.
    pub multiplicity: usize,
    pub projector: Matrix,
}

#[derive(Clone, Debug)]
pub struct DecompReport {
    pub space: Space,
    pub dim: usize,
    pub components: Vec<Component>,
    /// Generator matrices on the space, for commutation checks.
    pub action: Vec<Matrix>,
}

impl DecompReport {
    /// `(μ, dim)` pairs in ascending μ.
    pub fn summary(&self) -> Vec<(Rational, usize)> {
        self.components.iter().map(|c| (c.mu.clone(), c.dim)).collect()
    }

    /// Idempotent, mutually annihilating, summing to the identity and
    /// commuting with the action; returns the first failure.
    pub fn projector_failure(&self) -> Option<String> {
        let id = Matrix::identity(self.dim);
        let mut sum = Matrix::zeros(self.dim, self.dim);
        for (n, c) in self.components.iter().enumerate() {
            let p = &c.projector;
            if p.mul(p) != *p {
                return Some(format!("projector μ={} is not idempotent", c.mu));
            }
            if p.trace() != Scalar::int(c.dim as i64) {
                return Some(format!("projector μ={} has trace {} but dimension {}", c.mu, p.trace(), c.dim));
            }
            for d in &self.components[n + 1..] {
                if !p.mul(&d.projector).is_zero() {
                    return Some(format!("projectors μ={} and μ={} do not annihilate", c.mu, d.mu));
                }
            }
            for (k, a) in self.action.iter().enumerate() {
                if p.mul(a) != a.mul(p) {
                    return Some(format!("projector μ={} does not commute with {}", c.mu, NAMES[k]));
                }
            }
            sum = sum.add(p);
        }
        (sum != id).then(|| "projectors do not sum to the identity".into())
    }
}

/// Dominant weights with `q` no larger than that of `top`, grouped by `μ`.
pub fn casimir_candidates(top: Weight) -> BTreeMap<Rational, Vec<Weight>> {
    let mut out: BTreeMap<Rational, Vec<Weight>> = BTreeMap::new();
    for q2 in 0..=top.q2 {
        for s2 in 0..=q2 {
            let h = Weight::doubled(q2, s2);
            if let Ok((mu, _)) = roots::casimir_eigenvalues(h) {
                out.entry(mu).or_default().push(h);
            }
        }
    }
    out
}

/// Splits a space into Casimir eigenspaces, each identified with the unique
/// candidate highest weight of that eigenvalue.
pub fn rep_split(space: &Space) -> Result<DecompReport, AlgebraError> {
    let action = space.action()?;
    let dim = action[0].rows();
    let c = casimir_matrix(&action);
    let top = space.max_highest();

    let candidates = casimir_candidates(top);
    let mut found = Vec::new();
    let mut total = 0;
    for (mu, hs) in &candidates {
        let shifted = c.sub(&Matrix::identity(dim).scale(&Scalar::real(mu.clone())));
        let k = dim - shifted.rank();
        if k == 0 {
            continue;
        }
        if hs.len() > 1 {
            let names: Vec<String> = hs.iter().map(|h| h.to_string()).collect();
            return Err(AlgebraError::RepeatedCasimir(format!("{} shared by {}", adskit_core::rational_to_string(mu), names.join(", "))));
        }
        let h = hs[0];
        let irrep = roots::irrep_dimension(h)? as usize;
        if k % irrep != 0 {
            return Err(AlgebraError::Mismatch(format!("eigenspace μ={mu} has dimension {k}, not a multiple of {irrep}")));
        }
        total += k;
        found.push((mu.clone(), h, k, k / irrep));
    }
    if total != dim {
        return Err(AlgebraError::Mismatch(format!("eigenspaces cover {total} of {dim} dimensions")));
    }

    let components = found
        .iter()
        .map(|(mu, h, k, mult)| {
            let mut p = Matrix::identity(dim);
            for (nu, _, _, _) in &found {
                if nu == mu {
                    continue;
                }
                let f = Scalar::real(mu - nu).inv().expect("distinct eigenvalues");
                let shifted = c.sub(&Matrix::identity(dim).scale(&Scalar::real(nu.clone())));
                p = p.mul(&shifted.scale(&f));
            }
            Component { mu: mu.clone(), highest: *h, dim: *k, multiplicity: *mult, projector: p }
        })
        .collect();
    Ok(DecompReport { space: space.clone(), dim, components, action })
}

/// The scalar `g^{ij} T_i T_j` in one representation.
pub fn casimir_identity_check(rep: Factor) -> Result<Scalar, AlgebraError> {
    casimir_matrix(rep.matrices())
        .as_scalar_multiple()
        .ok_or_else(|| AlgebraError::Mismatch(format!("{rep:?} Casimir is not scalar")))
}

/// `g^{AB} g_A^{ij} g_B^{kl} T_i T_j T_k T_l` in one representation, if scalar.
pub fn quartic_identity_value(rep: Factor) -> Option<Scalar> {
    let alg = algebra();
    let mats = rep.matrices();
    let n = mats[0].rows();
    let mut w = vec![Matrix::zeros(n, n); 5];
    for (a, wa) in w.iter_mut().enumerate() {
        for i in 0..10 {
            for j in 0..10 {
                let c = alg.jordan.get(&[a, i, j]);
                if !c.is_zero() {
                    let c = &(c * &alg.ginv[i]) * &alg.ginv[j];
                    *wa = wa.add(&mats[i].mul(&mats[j]).scale(&c));
                }
            }
        }
    }
    let sum = (0..5).fold(Matrix::zeros(n, n), |acc, a| acc.add(&w[a].mul(&w[a]).scale(&alg.gv[a].inv().unwrap())));
    sum.as_scalar_multiple()
}

/// Checks the Jordan split `{T_i,T_j} = ½g_ij 1 + g^A_ij P_A` and the product
/// split `T_i T_j = ½T^k_ij T_k + ¼g_ij 1 + ½g^A_ij P_A` for all 100 pairs.
pub fn jordan_versor() -> Result<Tensor, AlgebraError> {
    let alg = algebra();
    let half = Scalar::frac(1, 2);
    let quarter = Scalar::frac(1, 4);
    for i in 0..10 {
        for j in 0..10 {
            let gij = alg.metric.get(&[i, j]);
            let mut versor = Matrix::zeros(4, 4);
            for a in 0..5 {
                versor = versor.add(&alg.p[a].scale(alg.jordan.get(&[a, i, j])));
            }
            let jb = Matrix::identity(4).scale(&(&half * gij)).add(&versor);
            if alg.spinor[i].anticommutator(&alg.spinor[j]) != jb {
                return Err(AlgebraError::Mismatch(format!("Jordan split fails at ({},{})", NAMES[i], NAMES[j])));
            }
            let mut prod = Matrix::identity(4).scale(&(&quarter * gij)).add(&versor.scale(&half));
            for k in 0..10 {
                prod = prod.add(&alg.spinor[k].scale(&(&half * alg.t(k, i, j))));
            }
            if alg.spinor[i].mul(&alg.spinor[j]) != prod {
                return Err(AlgebraError::Mismatch(format!("product split fails at ({},{})", NAMES[i], NAMES[j])));
            }
            if alg.jordan.get(&[0, i, j]) != alg.jordan.get(&[0, j, i]) {
                return Err(AlgebraError::Mismatch(format!("g^A is not symmetric at ({},{})", NAMES[i], NAMES[j])));
            }
        }
    }
    Ok(alg.jordan.clone())
}

/// Names and first failing generator of every tensor that must be locally
/// invariant.
pub fn local_invariance_report() -> Vec<(&'static str, Option<usize>)> {
    use crate::action::invariance_violation;
    let alg = algebra();
    let s = symplectic_form();
    vec![
        ("s_bullet_lower", invariance_violation(&s.lower)),
        ("s_bullet_upper", invariance_violation(&s.upper)),
        ("g_ij", invariance_violation(&alg.metric)),
        ("g^ij", invariance_violation(&alg.metric_inv)),
        ("g_AB", invariance_violation(&alg.versor_metric)),
        ("g^A_ij", invariance_violation(&alg.jordan)),
        ("T^a_Ab", invariance_violation(&alg.versor_gen)),
        ("T^a_ib", invariance_violation(&alg.spinor_gen)),
        ("T^k_ij", invariance_violation(&alg.torsion)),
        ("T^B_iA", invariance_violation(&alg.versor_action)),
    ]
}

fn four_spinor_axes(weight: i32) -> Vec<Axis> {
    let mut axes = vec![Axis::bullet(weight)];
    axes.extend(std::iter::repeat(Axis::down(Kind::Spinor)).take(4));
    axes
}

/// `ε_{αβγδ}` with `ε_{1234} = 1`.
pub fn epsilon() -> Tensor {
    let mut e = Tensor::zeros(four_spinor_axes(0)[1..].to_vec());
    for (p, s) in permutations(4) {
        e.set(&p, Scalar::int(s));
    }
    e
}

/// Cyclic sum over the first three of four spinor slots.
fn cyclic3(f: impl Fn(usize, usize, usize, usize) -> Scalar) -> impl Fn(&[usize]) -> Scalar {
    move |ix: &[usize]| {
        let (a, b, c, d) = (ix[1], ix[2], ix[3], ix[4]);
        &(&f(a, b, c, d) + &f(b, c, a, d)) + &f(c, a, b, d)
    }
}

/// `s_{αλ} T^λ_{iβ} T^δ_{jγ} g^{ij}` cyclic in `(αβγ)`; axes
/// bullet(+1), α_, β_, γ_, δ^.
pub fn superalgebra_residual() -> Tensor {
    let alg = algebra();
    let om = basis::omega();
    // (Ω T_i)[α][β] = s_{αλ} T^λ_{iβ}
    let st: Vec<Matrix> = alg.spinor.iter().map(|t| om.mul(t)).collect();
    let f = |a: usize, b: usize, c: usize, d: usize| -> Scalar {
        (0..10)
            .map(|i| &(st[i].get(a, b) * alg.spinor[i].get(d, c)) * &alg.ginv[i])
            .sum()
    };
    let g = cyclic3(f);
    let axes = vec![Axis::bullet(1), Axis::down(Kind::Spinor), Axis::down(Kind::Spinor), Axis::down(Kind::Spinor), Axis::up(Kind::Spinor)];
    Tensor::from_fn(axes, |ix| g(ix))
}

/// `E_{αβγδ} = s_{αβ}s_{γδ}` cyclic in `(αβγ)`.
pub fn e_tensor() -> Tensor {
    let om = basis::omega();
    let g = cyclic3(|a, b, c, d| om.get(a, b) * om.get(c, d));
    Tensor::from_fn(four_spinor_axes(2), |ix| g(ix))
}

/// `B_{αβγδ} = s_{αλ} T^λ_{Aβ} g^{AB} T^μ_{Bγ} s_{μδ}` cyclic in `(αβγ)`.
pub fn b_tensor() -> Tensor {
    let alg = algebra();
    let om = basis::omega();
    let left: Vec<Matrix> = alg.p.iter().map(|p| om.mul(p)).collect();
    let right: Vec<Matrix> = alg.p.iter().map(|p| p.transpose().mul(&om)).collect();
    let g = cyclic3(|a, b, c, d| {
        (0..5)
            .map(|x| &(left[x].get(a, b) * right[x].get(c, d)) * &alg.gv[x].inv().unwrap())
            .sum()
    });
    Tensor::from_fn(four_spinor_axes(2), |ix| g(ix))
}

/// Coefficients of a completely antisymmetric four-spinor tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct Antisym4 {
    /// `X = against_epsilon · ε`
    pub against_epsilon: Scalar,
    /// `X = against_e · E`; this is the two-bullet scalar.
    pub against_e: Scalar,
}

/// Reads a four-spinor tensor (optionally preceded by one bullet axis) as a
/// multiple of `ε`, rejecting anything not completely antisymmetric.
pub fn antisym4_intertwiner(x: &Tensor) -> Result<Antisym4, AlgebraError> {
    let spin = x.axes().iter().filter(|a| a.kind == Kind::Spinor && !a.upper).count();
    let bullets = x.axes().iter().filter(|a| matches!(a.kind, Kind::Bullet(_))).count();
    if spin != 4 || bullets + spin != x.rank() {
        return Err(AlgebraError::Dimension("expected four lower spinor axes".into()));
    }
    let at = |ix: &[usize]| -> Scalar {
        let mut full = vec![0; bullets];
        full.extend_from_slice(ix);
        x.get(&full).clone()
    };
    let coef = at(&[0, 1, 2, 3]);
    let eps = epsilon();
    for idx in adskit_core::MultiIndex::new(&[4, 4, 4, 4]) {
        if at(&idx) != &coef * eps.get(&idx) {
            return Err(AlgebraError::Mismatch(format!("not completely antisymmetric at {idx:?}")));
        }
    }
    let k = e_tensor().get(&[0, 0, 1, 2, 3]).clone();
    Ok(Antisym4 { against_e: &coef / &k, against_epsilon: coef })
}

/// `(k, c)` from `E = kε` and `B = ckε`.
pub fn superalgebra_constants() -> Result<(Scalar, Scalar), AlgebraError> {
    let e = antisym4_intertwiner(&e_tensor())?;
    let b = antisym4_intertwiner(&b_tensor())?;
    Ok((e.against_epsilon, b.against_e))
}

/// The map `X^{ij} ↦ X^{ij} T^α_{iλ} s^{λβ} T^γ_{jμ} s^{μδ}` from vector
/// pairs to four upper spinor indices, as a 256×100 matrix.
pub fn vector_pair_to_spinor4() -> Matrix {
    let alg = algebra();
    let om = basis::omega();
    let ts: Vec<Matrix> = alg.spinor.iter().map(|t| t.mul(&om)).collect();
    Matrix::from_fn(256, 100, |r, c| {
        let (a, b, g, d) = (r / 64, (r / 16) % 4, (r / 4) % 4, r % 4);
        let (i, j) = (c / 10, c % 10);
        ts[i].get(a, b) * ts[j].get(g, d)
    })
}

/// Outcome of relating the two 35-dimensional components.
#[derive(Clone, Debug, PartialEq)]
pub struct Intertwining {
    /// Rank of the map restricted to the vector-pair component.
    pub rank: usize,
    /// The map commutes with all ten generators.
    pub equivariant: bool,
    /// The image lies in the symmetric four-spinor space.
    pub lands_in_symmetric: bool,
    /// Casimir eigenvalue on the image.
    pub image_mu: Option<Scalar>,
}

/// Maps the `(2,2)` component of vector⊗vector into four-spinors.
pub fn intertwine_35() -> Result<Intertwining, AlgebraError> {
    let vv = Space::new(vec![Factor::Vector, Factor::Vector], Symmetry::Full);
    let split = rep_split(&vv)?;
    let top = split
        .components
        .iter()
        .find(|c| c.highest == Weight::int(2, 2))
        .ok_or_else(|| AlgebraError::Mismatch("no (2,2) component in vector⊗vector".into()))?;
    let m = vector_pair_to_spinor4();
    let s4 = Space::new(vec![Factor::Spinor; 4], Symmetry::Full);
    let act4 = s4.action()?;
    let equivariant = (0..10).all(|k| m.mul(&split.action[k]) == act4[k].mul(&m));
    let image = m.mul(&top.projector);
    let rank = image.rank();
    let lands_in_symmetric = (0..image.cols()).all(|c| {
        (0..256).all(|r| {
            let idx = unflat(r, &[4, 4, 4, 4]);
            permutations(4).iter().all(|(p, _)| {
                let q: Vec<usize> = p.iter().map(|&k| idx[k]).collect();
                image.get(flat(&q, &[4, 4, 4, 4]), c) == image.get(r, c)
            })
        })
    });
    let c4 = casimir_matrix(&act4);
    let ci = c4.mul(&image);
    let mu = Scalar::real(rat(16, 1));
    let image_mu = (ci == image.scale(&mu)).then_some(mu);
    Ok(Intertwining { rank, equivariant, lands_in_symmetric, image_mu })
}
