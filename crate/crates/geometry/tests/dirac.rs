use adskit_algebra::algebra;
use adskit_algebra::basis::omega;
use adskit_algebra::decomp::symplectic_form;
use adskit_core::{coord_index, Field, Matrix, Momentum, Scalar};
use adskit_geometry::connection::random_polynomial;
use adskit_geometry::dirac::*;
use adskit_geometry::{random_connection, random_general, Connection};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(name: &str) -> usize {
    coord_index(name).unwrap()
}

/// A basis vector of `ker(M - μ)`.
fn eigenvector(m: &Matrix, mu: &Scalar) -> Vec<Scalar> {
    let shifted = m.sub(&Matrix::identity(4).scale(mu));
    shifted.nullspace().into_iter().next().expect("eigenvalue")
}

fn time_wave(p0: i64) -> Momentum {
    let mut p = [0; 10];
    p[0] = p0;
    Momentum::from_ints(p)
}

fn random_spinor(seed: u64, active: &[usize]) -> SpinorField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wave = Field::plane_wave(Momentum::from_ints([1, 0, 2, 0, 0, 0, 0, 0, 0, 0]));
    SpinorField(std::array::from_fn(|_| {
        let re = random_polynomial(&mut rng, active, 2);
        let im = random_polynomial(&mut rng, active, 1);
        &(&re + &im.scale(&Scalar::i())) * &wave
    }))
}

/// Framework connection with constant `A_x = a`.
fn constant_ax(a: i64) -> Connection {
    let mut pot = vec![Field::zero(); 10];
    pot[c("x")] = Field::constant(Scalar::int(a));
    Connection::framework(pot)
}

/// Constant `X`-eigenspinor solving the α-equation under [`constant_ax`]:
/// the curl is `aXψ - (5/4)ψ` and `H^kT_kψ = -2aXψ`.
fn framework_solution(a: i64, mu: &Scalar, alpha: &Scalar) -> (SpinorField, Scalar) {
    let alg = algebra();
    let u = eigenvector(&alg.spinor[c("x")], mu);
    let one_two_alpha = &Scalar::one() + &(&Scalar::int(2) * alpha);
    let lambda = &Scalar::frac(5, 4) - &(&(&one_two_alpha * &Scalar::int(a)) * mu);
    (SpinorField::constant(&u), lambda)
}

#[test]
fn curl_of_constant_spinor_is_zero_when_flat() {
    let psi = SpinorField::constant(&[Scalar::one(), Scalar::int(2), Scalar::i(), Scalar::zero()]);
    assert!(extended_curl(&psi, &Connection::flat()).is_zero());
}

#[test]
fn curl_of_time_wave_multiplies_by_minus_i_p0_t() {
    let alg = algebra();
    let u = [Scalar::one(), Scalar::int(-1), Scalar::frac(1, 2), Scalar::i()];
    let psi = SpinorField::plane_wave(&u, &time_wave(3));
    let want = psi.apply(&alg.spinor[0].scale(&Scalar::complex(0, 1, -3, 1)));
    assert_eq!(extended_curl(&psi, &Connection::flat()), want);
}

#[test]
fn scalar_potential_enters_as_a_k_g_kk_t_k() {
    let alg = algebra();
    let f = &Field::var(c("y")) + &Field::constant(Scalar::int(2));
    let mut conn = Connection::flat();
    conn.a[c("x")] = f.clone();
    let u = [Scalar::one(), Scalar::zero(), Scalar::int(3), Scalar::zero()];
    let psi = SpinorField::constant(&u);
    let want = psi.apply(&alg.spinor[c("x")]).times(&f.scale(&alg.ginv[c("x")]));
    assert_eq!(extended_curl(&psi, &conn), want);
}

#[test]
fn curl_matches_direct_expansion() {
    // Σ g^{kk} T_k (∂_k ψ + A_k ψ + G^t_k T_t ψ)
    let alg = algebra();
    let conn = random_general(4, &[0, 1, 4], 1).unwrap();
    let psi = random_spinor(2, &[0, 1, 4]);
    let mut want = SpinorField::zero();
    for k in 0..10 {
        let mut d = psi.partial(k).add(&psi.times(&conn.a[k]));
        for t in 0..10 {
            d = d.add(&psi.apply(&alg.spinor[t]).times(&conn.g[k][t]));
        }
        want = want.add(&d.apply(&alg.spinor[k]).scale(&alg.ginv[k]));
    }
    assert_eq!(extended_curl(&psi, &conn), want);
}

#[test]
fn poincare_restriction_is_the_four_term_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let wave = Field::plane_wave(Momentum::from_ints([2, -1, 0, 3, 0, 0, 0, 0, 0, 0]));
    let psi = SpinorField(std::array::from_fn(|_| &random_polynomial(&mut rng, &[0, 1, 2, 3], 2) * &wave));
    assert_eq!(extended_curl(&psi, &Connection::flat()), poincare_operator(&psi));
}

#[test]
fn time_wave_solution_needs_minus_i_half_eigenvector() {
    let alg = algebra();
    let flat = Connection::flat();
    let h = CrumpFactor::one();
    let p0 = 3;
    let lambda = Scalar::frac(p0, 2);
    let minus = eigenvector(&alg.spinor[0], &Scalar::complex(0, 1, -1, 2));
    let plus = eigenvector(&alg.spinor[0], &Scalar::complex(0, 1, 1, 2));
    let psi = SpinorField::plane_wave(&minus, &time_wave(p0));
    assert!(dirac_residual(&psi, &lambda, &h, &flat).is_zero());
    assert!(!dirac_residual(&psi, &Scalar::int(p0), &h, &flat).is_zero());
    // the +i/2 eigenvector solves the equation with the opposite λ
    let other = SpinorField::plane_wave(&plus, &time_wave(p0));
    assert!(!dirac_residual(&other, &lambda, &h, &flat).is_zero());
    assert!(dirac_residual(&other, &-lambda, &h, &flat).is_zero());
}

#[test]
fn plane_wave_solutions_solve_the_equation() {
    let flat = Connection::flat();
    let h = CrumpFactor::one();
    for p in [time_wave(2), Momentum::from_ints([0, 0, 0, 0, 3, 0, 0, 0, 0, 0]), Momentum::zero()] {
        let sols = plane_wave_solutions(&p);
        assert_eq!(sols.len(), 4);
        for (lambda, psi) in &sols {
            assert!(dirac_residual(psi, lambda, &h, &flat).is_zero());
            assert!(dirac_lagrangian(psi, lambda, &h, &flat).0.is_zero());
        }
    }
    assert!(plane_wave_solutions(&Momentum::from_ints([1, 1, 0, 0, 0, 0, 0, 0, 0, 0])).is_empty());
}

#[test]
fn crump_connection_follows_bullet_weight() {
    let conn = random_connection(3, &[0, 1], 2).unwrap();
    let h = CrumpFactor::new(Scalar::int(5)).unwrap();
    for (k, hk) in h.connection(&conn).iter().enumerate() {
        assert_eq!(hk, &conn.crump(k).scale(&Scalar::int(-1)));
    }
    assert!(CrumpFactor::new(Scalar::i()).is_err());
    assert!(CrumpFactor::new(Scalar::zero()).is_err());
}

#[test]
fn dispersion_examples() {
    let half = Scalar::frac(1, 2);
    let i_half = Scalar::complex(0, 1, 1, 2);
    assert_eq!(
        plane_wave_dispersion(&time_wave(1)),
        Spectrum::Eigenvalues(vec![half.clone(), half.clone(), -&half, -&half])
    );
    assert_eq!(plane_wave_dispersion(&Momentum::zero()), Spectrum::Eigenvalues(vec![Scalar::zero(); 4]));
    let px = Momentum::from_ints([0, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(plane_wave_dispersion(&px), Spectrum::Eigenvalues(vec![i_half.clone(), i_half.clone(), -&i_half, -&i_half]));
    let mixed = Momentum::from_ints([1, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(plane_wave_dispersion(&mixed), Spectrum::CharPoly(dirac_matrix(&mixed).char_poly()));
}

#[test]
fn time_eigenvalues_match_minus_i_t() {
    // -iT has the T eigenvalues ±i/2 rotated to ±1/2
    let alg = algebra();
    let m = alg.spinor[0].scale(&Scalar::complex(0, 1, -1, 1));
    assert_eq!(dirac_matrix(&time_wave(1)), m);
    for mu in [Scalar::frac(1, 2), Scalar::frac(-1, 2)] {
        let shifted = m.sub(&Matrix::identity(4).scale(&mu));
        assert_eq!(shifted.nullspace().len(), 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn axis_spectra_are_symmetric_roots_of_the_char_poly(axis in 0usize..10, n in -6i64..=6, d in 1i64..=4) {
        let mut p = Momentum::zero();
        p.0[axis] = adskit_core::rat(n, d);
        let Spectrum::Eigenvalues(ev) = plane_wave_dispersion(&p) else {
            return Err(TestCaseError::fail("axis momentum without closed form"));
        };
        prop_assert_eq!(&ev[0], &-&ev[2]);
        let m = dirac_matrix(&p);
        for e in &ev {
            prop_assert!(m.sub(&Matrix::identity(4).scale(e)).det().is_zero());
        }
        // expanding Π(x - λ_i) reproduces the characteristic polynomial
        let mut poly = vec![Scalar::one()];
        for e in &ev {
            let mut next = vec![Scalar::zero(); poly.len() + 1];
            for (k, cf) in poly.iter().enumerate() {
                next[k + 1] += cf;
                next[k] -= &(cf * e);
            }
            poly = next;
        }
        prop_assert_eq!(poly, m.char_poly());
    }
}

#[test]
fn gamma_identification_holds() {
    let report = gamma_suite();
    assert_eq!(report.len(), 10 + 8 + 1);
    for chk in &report {
        assert!(chk.holds, "{} fails", chk.name);
    }
    let g = gamma_matrices();
    assert_eq!(g[0].mul(&g[0]), Matrix::identity(4));
    assert!(g[1].anticommutator(&g[2]).is_zero());
}

#[test]
fn currents_of_zero_spinor_vanish() {
    let cur = currents(&SpinorField::zero(), &CrumpFactor::one());
    assert!(cur.scalar.is_zero());
    assert!(cur.vector.iter().chain(&cur.versor).chain(&cur.bullet).all(Field::is_zero));
}

#[test]
fn basis_spinor_current_matches_contraction() {
    let alg = algebra();
    let s = symplectic_form();
    // s^•_{λα} T^λ_{kβ}: axes (•, α, k, β)
    let st = s.lower.contract_with(1, &alg.spinor_gen, 0).unwrap();
    for a in 0..4 {
        let mut u = vec![Scalar::zero(); 4];
        u[a] = Scalar::one();
        let cur = currents(&SpinorField::constant(&u), &CrumpFactor::one());
        for k in 0..10 {
            assert_eq!(cur.vector[k], Field::constant(st.get(&[0, a, k, a]).clone()));
        }
    }
}

#[test]
fn currents_are_real_for_real_h() {
    let psi = random_spinor(5, &[0, 1]);
    let h = CrumpFactor::new(Scalar::frac(-2, 3)).unwrap();
    let cur = currents(&psi, &h);
    assert!(cur.vector.iter().all(Field::is_real));
    // J and J_A pair ψ with ψ̄ through antisymmetric matrices, so they are imaginary
    assert_eq!(cur.scalar.conj(), cur.scalar.scale(&Scalar::int(-1)));
    for j in &cur.versor {
        assert_eq!(j.conj(), j.scale(&Scalar::int(-1)));
    }
    assert_eq!(cur.scalar, omega_pair(&psi).scale(h.value()));
}

fn omega_pair(psi: &SpinorField) -> Field {
    let om = omega();
    let bar = psi.conj();
    let mut acc = Field::zero();
    for a in 0..4 {
        for b in 0..4 {
            acc.add_in_place(&(&psi.0[a] * &bar.0[b]), om.get(a, b));
        }
    }
    acc
}

#[test]
fn bullet_current_is_conserved_for_plane_wave_solutions() {
    let alg = algebra();
    let u = eigenvector(&alg.spinor[0], &Scalar::complex(0, 1, -1, 2));
    let psi = SpinorField::plane_wave(&u, &time_wave(2));
    assert!(dirac_residual(&psi, &Scalar::one(), &CrumpFactor::one(), &Connection::flat()).is_zero());
    assert!(bullet_divergence(&psi, &Connection::flat()).is_zero());
}

#[test]
fn bullet_current_is_conserved_on_curved_solutions() {
    let conn = constant_ax(3);
    for mu in [Scalar::frac(1, 2), Scalar::frac(-1, 2)] {
        // with α = 0 this is the equation without the Crump term
        let (psi, lambda) = framework_solution(3, &mu, &Scalar::zero());
        assert!(alpha_residual(&psi, &lambda, &Scalar::zero(), &CrumpFactor::one(), &conn).is_zero());
        assert!(bullet_divergence(&psi, &conn).is_zero());
    }
}

#[test]
fn bullet_divergence_detects_non_solutions() {
    let conn = random_connection(2, &[0, 1], 1).unwrap();
    assert!(!bullet_divergence(&random_spinor(3, &[0, 1]), &conn).is_zero());
}

/// A solution of the α-equation under [`constant_ax`]: two plane waves
/// sharing the eigenvalue `root` of `M_p = a(1+2α)X + dirac_matrix(p)`, so
/// that `λ = 5/4 - root`. A single wave has a parallel current on which
/// `H^kJ_k` vanishes; the cross terms of the sum do not.
fn superposed_solution(a: i64, alpha: &Scalar, second: [i64; 10], root: &Scalar) -> (SpinorField, Scalar) {
    let alg = algebra();
    let c = &(&Scalar::one() + &(&Scalar::int(2) * alpha)) * &Scalar::int(a);
    let mut psi = SpinorField::zero();
    for p in [[4, 0, 0, 0, 0, 0, 0, 0, 0, 0], second] {
        let p = Momentum::from_ints(p);
        let m = alg.spinor[1].scale(&c).add(&dirac_matrix(&p));
        psi = psi.add(&SpinorField::plane_wave(&eigenvector(&m, root), &p));
    }
    (psi, &Scalar::frac(5, 4) - root)
}

#[test]
fn alpha_law_holds_on_solutions() {
    let h = CrumpFactor::new(Scalar::int(3)).unwrap();
    // a²(1+2α)² + 16 = 4root², and the second momentum gives the same M²;
    // with α = -½ the x-momentum is what makes J_x nonzero
    let along_x = [5, 3, 0, 0, 0, 0, 0, 0, 0, 0];
    let along_y = [5, 0, 3, 0, 0, 0, 0, 0, 0, 0];
    let cases = [
        (Scalar::frac(-1, 2), 2, along_x, Scalar::int(2)),
        (Scalar::zero(), 3, along_y, Scalar::frac(5, 2)),
        (Scalar::one(), 1, along_y, Scalar::frac(5, 2)),
    ];
    for (alpha, a, second, root) in cases {
        let conn = constant_ax(a);
        for r in [root.clone(), -&root] {
            let (psi, lambda) = superposed_solution(a, &alpha, second, &r);
            assert!(alpha_residual(&psi, &lambda, &alpha, &h, &conn).is_zero());
            assert!(conservation_defect(&psi, &alpha, &h, &conn).is_zero());
            let (_, hj) = vector_divergence(&psi, &h, &conn);
            assert!(!hj.is_zero(), "H^kJ_k vanishes for α = {alpha}, root {r}");
            let wrong = &alpha + &Scalar::one();
            assert!(!conservation_defect(&psi, &wrong, &h, &conn).is_zero());
        }
    }
}

#[test]
fn constant_eigenspinors_carry_no_crump_flux() {
    // X-eigenspaces are Ω-isotropic, so J_x vanishes on them
    let conn = constant_ax(2);
    let h = CrumpFactor::new(Scalar::int(3)).unwrap();
    for alpha in [Scalar::frac(-1, 2), Scalar::zero(), Scalar::one()] {
        let (psi, lambda) = framework_solution(2, &Scalar::frac(1, 2), &alpha);
        assert!(alpha_residual(&psi, &lambda, &alpha, &h, &conn).is_zero());
        let (div, hj) = vector_divergence(&psi, &h, &conn);
        assert!(div.is_zero() && hj.is_zero());
    }
}

/// `h s^•_{μα}(ψ̄^α ρ^μ + ψ^α ρ̄^μ) + h(λ̄-λ) s^•_{μα} ψ̄^α ψ^μ`, with ρ the
/// α-residual, summed component by component from the symplectic tensor.
fn alpha_law_oracle(psi: &SpinorField, lambda: &Scalar, alpha: &Scalar, h: &CrumpFactor, conn: &Connection) -> Field {
    let s = symplectic_form();
    let rho = alpha_residual(psi, lambda, alpha, h, conn);
    let (bar, rho_bar) = (psi.conj(), rho.conj());
    let shift = &lambda.conj() - lambda;
    let mut out = Field::zero();
    for mu in 0..4 {
        for a in 0..4 {
            let w = s.lower.get(&[0, mu, a]);
            if w.is_zero() {
                continue;
            }
            let mut term = &bar.0[a] * &rho.0[mu];
            term.add_in_place(&(&psi.0[a] * &rho_bar.0[mu]), &Scalar::one());
            term.add_in_place(&(&bar.0[a] * &psi.0[mu]), &shift);
            out.add_in_place(&term, &(w * h.value()));
        }
    }
    out
}

#[test]
fn alpha_law_is_an_identity_for_random_spinors() {
    let conn = random_connection(6, &[0, 1], 1).unwrap();
    let h = CrumpFactor::new(Scalar::frac(1, 2)).unwrap();
    let psi = random_spinor(8, &[0, 1]);
    let lambda = Scalar::complex(1, 3, 2, 1);
    for alpha in [Scalar::frac(-1, 2), Scalar::zero(), Scalar::one()] {
        let defect = conservation_defect(&psi, &alpha, &h, &conn);
        assert_eq!(defect, alpha_law_oracle(&psi, &lambda, &alpha, &h, &conn));
        assert_eq!(defect, conservation_source(&psi, &lambda, &alpha, &h, &conn));
    }
}

#[test]
fn lagrangian_of_zero_spinor_is_zero() {
    let (ld, l) = dirac_lagrangian(&SpinorField::zero(), &Scalar::one(), &CrumpFactor::one(), &Connection::flat());
    assert!(ld.is_zero() && l.is_zero());
}

#[test]
fn lagrangian_vanishes_on_solutions() {
    let alg = algebra();
    let u = eigenvector(&alg.spinor[0], &Scalar::complex(0, 1, -1, 2));
    let psi = SpinorField::plane_wave(&u, &time_wave(4));
    let (ld, l) = dirac_lagrangian(&psi, &Scalar::int(2), &CrumpFactor::one(), &Connection::flat());
    assert!(ld.is_zero() && l.is_zero());
    // with H ≠ 0 only the imaginary part is forced to vanish
    let conn = constant_ax(1);
    let h = CrumpFactor::new(Scalar::int(2)).unwrap();
    let (psi, lambda) = framework_solution(1, &Scalar::frac(1, 2), &Scalar::frac(-1, 2));
    assert!(dirac_residual(&psi, &lambda, &h, &conn).is_zero());
    assert!(!annoyance(&psi, &h, &conn).is_zero());
    assert!(dirac_lagrangian(&psi, &lambda, &h, &conn).0.is_zero());
}

#[test]
fn real_part_of_lagrangian_is_half_the_current_balance() {
    let conn = random_connection(9, &[0, 2], 2).unwrap();
    let h = CrumpFactor::new(Scalar::int(-3)).unwrap();
    let psi = random_spinor(4, &[0, 2]);
    let (_, l) = dirac_lagrangian(&psi, &Scalar::frac(7, 5), &h, &conn);
    let (div, hj) = vector_divergence(&psi, &h, &conn);
    assert_eq!(l.re_part(), (&div - &hj).scale(&Scalar::frac(1, 2)));
}
