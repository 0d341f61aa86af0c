//! Structure constants, invariant metrics and the versor data, all extracted
//! from the explicit matrices and checked against the printed tables.

use std::sync::OnceLock;

use adskit_core::{Axis, Kind, Matrix, Scalar, Tensor};

use crate::basis::{self, extended_names, printed_constants, render_combination, NAMES, VERSOR_NAMES};
use crate::AlgebraError;

pub fn bracket(a: &Matrix, b: &Matrix) -> Result<Matrix, AlgebraError> {
    if !a.is_square() || !a.same_shape(b) {
        return Err(AlgebraError::Dimension(format!(
            "{}x{} against {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(a.commutator(b))
}

/// Coefficients of `m` in the span of `basis`, solved exactly; `None` when
/// `m` lies outside the span.
pub fn expand(m: &Matrix, basis: &[Matrix]) -> Option<Vec<Scalar>> {
    let n = m.rows() * m.cols();
    let sys = Matrix::from_fn(n, basis.len(), |r, c| basis[c].entries()[r].clone());
    let sol = sys.solve(m.entries());
    debug_assert!(sol.kernel.is_empty(), "basis is linearly dependent");
    sol.particular
}

/// `c[i][j][k]`: coefficient of basis element `k` in `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketTable {
    pub names: Vec<&'static str>,
    pub coeffs: Vec<Vec<Vec<Scalar>>>,
}

/// One cell where an extracted table disagrees with the printed one.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub row: &'static str,
    pub col: &'static str,
    pub printed: String,
    pub computed: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]: printed {}, computed {}", self.row, self.col, self.printed, self.computed)
    }
}

impl BracketTable {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[i][j][k]
    }

    pub fn cell(&self, i: usize, j: usize) -> String {
        render_combination(&self.coeffs[i][j], &self.names)
    }

    pub fn from_ints(names: Vec<&'static str>, c: &[Vec<Vec<i64>>]) -> Self {
        let coeffs = c.iter().map(|r| r.iter().map(|v| v.iter().map(|&x| Scalar::int(x)).collect()).collect()).collect();
        BracketTable { names, coeffs }
    }

    /// Cells over unordered pairs `i < j` that differ from `printed`, plus
    /// any antisymmetry violation.
    pub fn compare(&self, printed: &BracketTable) -> Vec<Mismatch> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if self.coeffs[i][j] != printed.coeffs[i][j] || self.coeffs[j][i] != printed.coeffs[j][i] {
                    out.push(Mismatch {
                        row: self.names[i],
                        col: self.names[j],
                        printed: printed.cell(i, j),
                        computed: self.cell(i, j),
                    });
                }
            }
        }
        out
    }

    /// Unordered pairs `i < j`.
    pub fn pair_count(&self) -> usize {
        self.dim() * (self.dim() - 1) / 2
    }

    /// `T^k_ij` with axes `(k, i, j)`; only for the ten-element algebra.
    pub fn to_tensor(&self) -> Tensor {
        assert_eq!(self.dim(), 10);
        Tensor::from_fn(vec![Axis::up(Kind::Vector), Axis::down(Kind::Vector), Axis::down(Kind::Vector)], |ix| {
            self.coeffs[ix[1]][ix[2]][ix[0]].clone()
        })
    }
}

/// Expands every bracket of `mats` in the span of `mats`.
pub fn bracket_table(mats: &[Matrix], names: Vec<&'static str>) -> Result<BracketTable, AlgebraError> {
    let n = mats.len();
    let mut coeffs = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let b = bracket(&mats[i], &mats[j])?;
            coeffs[i][j] = expand(&b, mats).ok_or_else(|| AlgebraError::NotInSpan(format!("[{},{}]", names[i], names[j])))?;
        }
    }
    Ok(BracketTable { names, coeffs })
}

pub fn printed_table() -> BracketTable {
    BracketTable::from_ints(NAMES.to_vec(), &printed_constants(false))
}

pub fn printed_so33_table() -> BracketTable {
    BracketTable::from_ints(extended_names(), &printed_constants(true))
}

/// Structure constants extracted from the spinor matrices.
pub fn structure_constants() -> Result<BracketTable, AlgebraError> {
    bracket_table(&basis::spinor_matrices(), NAMES.to_vec())
}

/// Structure constants in ordinary units: the basis is rescaled by
/// `1/r` (T), `1/(rc)` (X,Y,Z), `1/c` (A,B,C) and `1` (I,J,K).
pub fn scaled_algebra(r: &Scalar, c: &Scalar) -> Result<BracketTable, AlgebraError> {
    if r.is_zero() || c.is_zero() {
        return Err(AlgebraError::Dimension("r and c must be nonzero".into()));
    }
    let one = Scalar::one();
    let rinv = &one / r;
    let cinv = &one / c;
    let rcinv = &rinv * &cinv;
    let scale: Vec<Scalar> = (0..10)
        .map(|i| match i {
            0 => rinv.clone(),
            1..=3 => rcinv.clone(),
            4..=6 => cinv.clone(),
            _ => one.clone(),
        })
        .collect();
    let base = structure_constants()?;
    let mut out = base.clone();
    for i in 0..10 {
        for j in 0..10 {
            for k in 0..10 {
                out.coeffs[i][j][k] = &(&(&scale[i] * &scale[j]) / &scale[k]) * base.get(i, j, k);
            }
        }
    }
    Ok(out)
}

/// `[[a,b],c] + [[b,c],a] + [[c,a],b]` for every triple `i<j<k`; returns
/// the first offending triple.
pub fn jacobi_violation(mats: &[Matrix]) -> Option<(usize, usize, usize)> {
    let n = mats.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (&mats[i], &mats[j], &mats[k]);
                let s = a.commutator(b).commutator(c).add(&b.commutator(c).commutator(a)).add(&c.commutator(a).commutator(b));
                if !s.is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Adjoint matrices `ad(e_i)[k][j] = T^k_ij`.
pub fn adjoint_matrices(t: &BracketTable) -> Vec<Matrix> {
    (0..t.dim()).map(|i| Matrix::from_fn(t.dim(), t.dim(), |k, j| t.get(i, j, k).clone())).collect()
}

/// Every constant tensor the geometry needs, built once from the matrices.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub spinor: Vec<Matrix>,
    pub versor: Vec<Matrix>,
    pub p: Vec<Matrix>,
    pub adjoint: Vec<Matrix>,
    pub table: BracketTable,
    /// `T^k_ij`, axes `(k, i, j)`.
    pub torsion: Tensor,
    /// `g_ij`
    pub metric: Tensor,
    /// `g^ij`
    pub metric_inv: Tensor,
    /// `g_AB`
    pub versor_metric: Tensor,
    /// `g^AB`
    pub versor_metric_inv: Tensor,
    /// `T^α_iβ`, axes `(α, i, β)`.
    pub spinor_gen: Tensor,
    /// `T^α_Aβ` (the `P_A`), axes `(α, A, β)`.
    pub versor_gen: Tensor,
    /// `T^B_iA`, axes `(B, i, A)`.
    pub versor_action: Tensor,
    /// `T^k_AB` from `[P_A, P_B] = T^k_AB T_k`, axes `(k, A, B)`.
    pub versor_torsion: Tensor,
    /// `g^A_ij`, axes `(A, i, j)`.
    pub jordan: Tensor,
    /// Diagonal of `g_ij`.
    pub g: [Scalar; 10],
    /// Diagonal of `g^ij`.
    pub ginv: [Scalar; 10],
    /// Diagonal of `g_AB`.
    pub gv: [Scalar; 5],
}

impl Algebra {
    fn build() -> Result<Algebra, AlgebraError> {
        let spinor = basis::spinor_matrices();
        let versor = basis::versor_matrices();
        let p = basis::p_matrices();
        let table = structure_constants()?;
        let adjoint = adjoint_matrices(&table);
        let torsion = table.to_tensor();

        let v = Kind::Vector;
        let ve = Kind::Versor;
        let sp = Kind::Spinor;
        let metric = Tensor::from_fn(vec![Axis::down(v), Axis::down(v)], |ix| spinor[ix[0]].mul(&spinor[ix[1]]).trace());
        let gm = Matrix::from_fn(10, 10, |r, c| metric.get(&[r, c]).clone());
        let gi = gm.inverse().ok_or(AlgebraError::Singular("g_ij"))?;
        let metric_inv = Tensor::from_fn(vec![Axis::up(v), Axis::up(v)], |ix| gi.get(ix[0], ix[1]).clone());
        let versor_metric = Tensor::from_fn(vec![Axis::down(ve), Axis::down(ve)], |ix| p[ix[0]].mul(&p[ix[1]]).trace());
        let vm = Matrix::from_fn(5, 5, |r, c| versor_metric.get(&[r, c]).clone());
        let vi = vm.inverse().ok_or(AlgebraError::Singular("g_AB"))?;
        let versor_metric_inv = Tensor::from_fn(vec![Axis::up(ve), Axis::up(ve)], |ix| vi.get(ix[0], ix[1]).clone());

        let spinor_gen = Tensor::from_fn(vec![Axis::up(sp), Axis::down(v), Axis::down(sp)], |ix| spinor[ix[1]].get(ix[0], ix[2]).clone());
        let versor_gen = Tensor::from_fn(vec![Axis::up(sp), Axis::down(ve), Axis::down(sp)], |ix| p[ix[1]].get(ix[0], ix[2]).clone());

        let mut versor_action = Tensor::zeros(vec![Axis::up(ve), Axis::down(v), Axis::down(ve)]);
        for i in 0..10 {
            for a in 0..5 {
                let b = bracket(&spinor[i], &p[a])?;
                let c = expand(&b, &p).ok_or_else(|| AlgebraError::NotInSpan(format!("[{}, {}]", NAMES[i], VERSOR_NAMES[a])))?;
                for (bb, x) in c.into_iter().enumerate() {
                    versor_action.set(&[bb, i, a], x);
                }
            }
        }
        let mut versor_torsion = Tensor::zeros(vec![Axis::up(v), Axis::down(ve), Axis::down(ve)]);
        for a in 0..5 {
            for b in 0..5 {
                let m = bracket(&p[a], &p[b])?;
                let c = expand(&m, &spinor).ok_or_else(|| AlgebraError::NotInSpan(format!("[{}, {}]", VERSOR_NAMES[a], VERSOR_NAMES[b])))?;
                for (k, x) in c.into_iter().enumerate() {
                    versor_torsion.set(&[k, a, b], x);
                }
            }
        }

        let g: [Scalar; 10] = std::array::from_fn(|i| metric.get(&[i, i]).clone());
        let ginv: [Scalar; 10] = std::array::from_fn(|i| metric_inv.get(&[i, i]).clone());
        let gv: [Scalar; 5] = std::array::from_fn(|a| versor_metric.get(&[a, a]).clone());
        if !is_diagonal(&gm) {
            return Err(AlgebraError::Singular("g_ij is not diagonal"));
        }

        // g^A_ij = g^AB tr(P_B {T_i, T_j})
        let mut jordan = Tensor::zeros(vec![Axis::up(ve), Axis::down(v), Axis::down(v)]);
        for i in 0..10 {
            for j in 0..10 {
                let jb = spinor[i].anticommutator(&spinor[j]);
                for a in 0..5 {
                    let x = &vi.get(a, a).clone() * &p[a].mul(&jb).trace();
                    jordan.set(&[a, i, j], x);
                }
            }
        }

        Ok(Algebra {
            spinor,
            versor,
            p,
            adjoint,
            table,
            torsion,
            metric,
            metric_inv,
            versor_metric,
            versor_metric_inv,
            spinor_gen,
            versor_gen,
            versor_action,
            versor_torsion,
            jordan,
            g,
            ginv,
            gv,
        })
    }

    /// `T^k_ij`
    pub fn t(&self, k: usize, i: usize, j: usize) -> &Scalar {
        self.table.get(i, j, k)
    }
}

fn is_diagonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| r == c || m.get(r, c).is_zero()))
}

/// The shared algebra data.
pub fn algebra() -> &'static Algebra {
    static CELL: OnceLock<Algebra> = OnceLock::new();
    CELL.get_or_init(|| Algebra::build().unwrap_or_else(|e| panic!("algebra tables are inconsistent: {e}")))
}

/// Spinor Killing form, compared against one sixth of the adjoint one.
pub fn killing_metric() -> Result<(Tensor, Tensor), AlgebraError> {
    let alg = algebra();
    for i in 0..10 {
        for j in 0..10 {
            let adj = alg.adjoint[i].mul(&alg.adjoint[j]).trace();
            if &(&adj / &Scalar::int(6)) != alg.metric.get(&[i, j]) {
                return Err(AlgebraError::Mismatch(format!("g_{}{} is not 1/6 of the adjoint form", NAMES[i], NAMES[j])));
            }
        }
    }
    Ok((alg.metric.clone(), alg.metric_inv.clone()))
}

/// The products that each `P_A` must equal: `(sign·2, left, right)`.
pub const P_PRODUCTS: [[(i64, usize, usize); 6]; 5] = [
    [(-2, 4, 7), (-2, 7, 4), (-2, 5, 8), (-2, 8, 5), (-2, 6, 9), (-2, 9, 6)],
    [(2, 1, 7), (2, 7, 1), (2, 2, 8), (2, 8, 2), (2, 3, 9), (2, 9, 3)],
    [(2, 0, 7), (2, 7, 0), (-2, 3, 5), (-2, 5, 3), (2, 2, 6), (2, 6, 2)],
    [(2, 0, 8), (2, 8, 0), (-2, 1, 6), (-2, 6, 1), (2, 3, 4), (2, 4, 3)],
    [(2, 0, 9), (2, 9, 0), (-2, 2, 4), (-2, 4, 2), (2, 1, 5), (2, 5, 1)],
];

/// Checks the six product forms, tracelessness and Ω-symmetry of every `P_A`.
pub fn p_matrices() -> Result<Vec<Matrix>, AlgebraError> {
    let alg = algebra();
    let om = basis::omega();
    for (a, prods) in P_PRODUCTS.iter().enumerate() {
        for &(s, l, r) in prods {
            let m = alg.spinor[l].mul(&alg.spinor[r]).scale(&Scalar::int(s));
            if m != alg.p[a] {
                return Err(AlgebraError::Mismatch(format!("{} != {}·{}{}", VERSOR_NAMES[a], s, NAMES[l], NAMES[r])));
            }
        }
        if !alg.p[a].trace().is_zero() {
            return Err(AlgebraError::Mismatch(format!("tr {} != 0", VERSOR_NAMES[a])));
        }
        if alg.p[a].transpose().mul(&om) != om.mul(&alg.p[a]) {
            return Err(AlgebraError::Mismatch(format!("{} is not Ω-symmetric", VERSOR_NAMES[a])));
        }
    }
    Ok(alg.p.clone())
}

/// First basis element whose versor action differs from its 5-D matrix.
pub fn versor_action_mismatch() -> Option<usize> {
    let alg = algebra();
    (0..10).find(|&i| {
        let m = Matrix::from_fn(5, 5, |b, a| alg.versor_action.get(&[b, i, a]).clone());
        m != alg.versor[i]
    })
}

/// The so(3,3) table over `P_λ..P_z, T..K` extracted from the matrices.
pub fn so33_extension() -> Result<BracketTable, AlgebraError> {
    let mats: Vec<Matrix> = basis::p_matrices().into_iter().chain(basis::spinor_matrices()).collect();
    bracket_table(&mats, extended_names())
}
