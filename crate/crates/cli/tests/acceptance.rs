//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero when any outcome differs from the expected one recorded in
//! `EXPECTED_FAIL`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use adskit::suites::{geometry_checks, plane_wave_checks, table_checks};
use adskit_algebra::basis::printed_constants;
use adskit_algebra::decomp::{self, Factor, Space, Symmetry};
use adskit_algebra::roots::{self, Weight, FIGURE_WEIGHTS};
use adskit_algebra::{algebra, enveloping, lie, BracketTable};
use adskit_core::{rat, Axis, Field, Kind, Matrix, Momentum, Scalar, Tensor};
use adskit_geometry::cosmology::{cosmological_r, QUOTED_R_SECONDS};
use adskit_geometry::dirac::{self, CrumpFactor, SpinorField};
use adskit_geometry::equations::coefficient_tensors;
use adskit_geometry::{random_connection, Connection};
use rayon::prelude::*;

/// Criteria whose printed claim does not hold. The geometry suite fails on
/// the printed Christoffel relations, which hold with the opposite sign.
const EXPECTED_FAIL: &[u32] = &[7];
const CHRISTOFFEL: [&str; 3] = ["geometry/christoffel_ricci", "geometry/christoffel_riemann", "geometry/christoffel_scalar"];

struct Outcome {
    pass: bool,
    detail: String,
    /// A failure is confined to the known cause.
    known_cause: bool,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), known_cause: true }
}

fn within(t: Duration, budget_s: u64) -> bool {
    t <= Duration::from_secs(budget_s)
}

fn commutator_tables() -> Outcome {
    let start = Instant::now();
    let (Ok(t), Ok(x)) = (lie::structure_constants(), lie::so33_extension()) else {
        return outcome(false, "table extraction failed");
    };
    let pairs = table_checks("so23", &t, &lie::printed_table());
    let ext = table_checks("so33", &x, &lie::printed_so33_table());
    let bad = pairs.iter().chain(&ext).filter(|(_, r)| r.is_err()).count();
    let el = start.elapsed();
    outcome(
        bad == 0 && pairs.len() == 45 && ext.len() == 105 && within(el, 1),
        format!("{} + {} pairs, {bad} mismatched, {el:.2?}", pairs.len(), ext.len()),
    )
}

fn casimir_spectra() -> Outcome {
    let start = Instant::now();
    let want = [
        (Weight::doubled(1, 1), rat(5, 2), rat(1, 4), Factor::Spinor),
        (Weight::int(1, 0), rat(4, 1), rat(1, 1), Factor::Versor),
        (Weight::int(1, 1), rat(6, 1), rat(16, 9), Factor::Vector),
    ];
    let mut ok = true;
    let mut seen = Vec::new();
    for (h, mu, rho, rep) in want {
        let eig = roots::casimir_eigenvalues(h).ok();
        let scalar = decomp::casimir_identity_check(rep).ok();
        seen.push(match &eig {
            Some((m, r)) => format!("{h}: μ = {m}, ρ = {r}"),
            None => format!("{h}: no eigenvalues"),
        });
        ok &= eig == Some((mu.clone(), rho)) && scalar == Some(Scalar::real(mu));
    }
    let el = start.elapsed();
    outcome(ok && within(el, 1), format!("{}, {el:.2?}", seen.join(", ")))
}

fn dimensions() -> Outcome {
    let start = Instant::now();
    let mut dims = Vec::new();
    let mut agree = true;
    for (h, _) in FIGURE_WEIGHTS {
        let k: u64 = roots::weight_diagram(h).map(|d| d.values().sum()).unwrap_or(0);
        let w = roots::weyl_dimension(h).unwrap_or(u64::MAX);
        agree &= k == w;
        dims.push(k);
    }
    dims.sort();
    let el = start.elapsed();
    outcome(agree && dims == [1, 4, 5, 10, 14, 16, 20, 35, 35] && within(el, 5), format!("Kostant = Weyl, {dims:?}, {el:.2?}"))
}

fn centrality() -> Outcome {
    let start = Instant::now();
    let q = enveloping::centrality_check(&enveloping::quadratic_casimir());
    let r = enveloping::centrality_check(&enveloping::quartic_casimir());
    let el = start.elapsed();
    outcome(q.is_ok() && r.is_ok() && within(el, 30), format!("Q central: {}, R central: {}, {el:.2?}", q.is_ok(), r.is_ok()))
}

fn superalgebra() -> Outcome {
    let res = decomp::superalgebra_residual();
    let consts = decomp::superalgebra_constants().ok();
    let want = Some((Scalar::int(-1), Scalar::frac(-5, 4)));
    outcome(
        res.len() == 256 && res.is_zero() && consts == want,
        format!("residual {} components, zero {}, (k, c) = {consts:?}", res.len(), res.is_zero()),
    )
}

fn splits() -> Outcome {
    use Factor::*;
    let start = Instant::now();
    let cases = [
        (Space::new(vec![Spinor, Spinor], Symmetry::Full), vec![1, 5, 10]),
        (Space::new(vec![Vector, Vector], Symmetry::Full), vec![1, 5, 10, 14, 35, 35]),
        (Space::new(vec![Spinor, Versor], Symmetry::Full), vec![4, 16]),
        (Space::new(vec![Spinor; 3], Symmetry::Symmetric), vec![20]),
        (Space::new(vec![Spinor; 4], Symmetry::Symmetric), vec![35]),
    ];
    let results: Vec<Result<Vec<usize>, String>> = cases
        .par_iter()
        .map(|(space, want)| {
            let rep = decomp::rep_split(space).map_err(|e| e.to_string())?;
            let got: Vec<usize> = rep.summary().into_iter().map(|(_, d)| d).collect();
            if &got != want {
                return Err(format!("{got:?} != {want:?}"));
            }
            rep.projector_failure().map_or(Ok(got), Err)
        })
        .collect();
    let el = start.elapsed();
    let ok = results.iter().all(Result::is_ok);
    let shown: Vec<String> = results.iter().map(|r| format!("{r:?}")).collect();
    outcome(ok && within(el, 30), format!("{}, {el:.2?}", shown.join(" ")))
}

/// Twenty framework connections over varied degrees and coordinate sets.
fn geometry_suite() -> Outcome {
    let start = Instant::now();
    let actives: [&[usize]; 7] = [&[0], &[0, 1], &[0, 1, 4], &[2, 5, 8], &[3, 7], &[1, 9, 4], &[6]];
    let failures: Vec<(u64, String, String)> = (1..=20u64)
        .into_par_iter()
        .flat_map_iter(|seed| {
            let active = actives[seed as usize % actives.len()];
            let conn = random_connection(seed, active, (seed % 3) as u32).expect("within limits");
            geometry_checks(&conn).into_iter().filter_map(move |(name, r)| r.err().map(|w| (seed, name, w)))
        })
        .collect();
    let el = start.elapsed();
    let unexpected: Vec<&(u64, String, String)> = failures.iter().filter(|(_, n, _)| !CHRISTOFFEL.contains(&n.as_str())).collect();
    let detail = match (unexpected.first(), failures.first()) {
        (Some((s, _, w)), _) => format!("unexpected failure at seed {s}: {w}"),
        (None, Some((s, _, w))) => format!("{} failing checks, all printed Christoffel relations; first at seed {s}: {w}", failures.len()),
        (None, None) => "every residual is zero".into(),
    };
    let mut o = outcome(failures.is_empty() && within(el, 600), format!("{detail}, {el:.2?}"));
    o.known_cause = unexpected.is_empty() && within(el, 600);
    o
}

/// Independent component sums for both coefficient tensors.
fn coefficient_oracle() -> (Tensor, Tensor) {
    const V: Kind = Kind::Vector;
    let alg = algebra();
    let d = |a: usize, b: usize| if a == b { Scalar::one() } else { Scalar::zero() };
    let g = |i: usize, j: usize| &d(i, j) * &alg.g[i];
    let gi = |i: usize, j: usize| &d(i, j) * &alg.ginv[i];
    let t = |k: usize, i: usize, j: usize| alg.t(k, i, j).clone();
    let a = Tensor::from_fn(vec![Axis::up(V), Axis::up(V), Axis::up(V), Axis::down(V), Axis::down(V)], |ix| {
        let (tt, k, m, i, n) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
        let mut s = &t(tt, i, n) * &gi(k, m);
        for q in 0..10 {
            s -= &(&(&d(k, n) * &t(m, i, q)) * &gi(tt, q));
        }
        s
    });
    let b = Tensor::from_fn(vec![Axis::up(V), Axis::up(V), Axis::down(V), Axis::down(V)], |ix| {
        let (k, m, i, n) = (ix[0], ix[1], ix[2], ix[3]);
        let mut s = &(&Scalar::int(3) * &gi(k, m)) * &g(i, n);
        s += &(&(&Scalar::int(6) * &d(m, i)) * &d(k, n));
        for j in 0..10 {
            for tt in 0..10 {
                s -= &(&(&gi(k, j) * &t(tt, j, n)) * &t(m, i, tt));
            }
        }
        s
    });
    (a, b)
}

fn coefficients() -> Outcome {
    let co = coefficient_tensors();
    let (a, b) = coefficient_oracle();
    let mut trace = Scalar::zero();
    for k in 0..10 {
        for m in 0..10 {
            trace += co.b.get(&[k, m, k, m]);
        }
    }
    // Killing identity: tr B = 3·10 + 6·10 - g^{kk} T^t_km T^m_kt
    let alg = algebra();
    let mut killing = Scalar::zero();
    for k in 0..10 {
        for tt in 0..10 {
            for m in 0..10 {
                killing += &(&alg.ginv[k] * &(alg.t(tt, k, m) * alg.t(m, k, tt)));
            }
        }
    }
    let expected = &Scalar::int(90) - &killing;
    let ok = co.a == a && co.b == b && trace == Scalar::int(30) && expected == trace;
    outcome(ok, format!("A match {}, B match {}, trace {trace}, Killing oracle {expected}", co.a == a, co.b == b))
}

fn eigenvector(m: &Matrix, mu: &Scalar) -> Option<Vec<Scalar>> {
    m.sub(&Matrix::identity(4).scale(mu)).nullspace().into_iter().next()
}

/// Two plane waves sharing one eigenvalue of `a(1+2α)X + dirac_matrix(p)`,
/// solving the α-equation under a framework connection with `A_x = a`.
fn superposed(a: i64, alpha: &Scalar, second: [i64; 10], root: &Scalar) -> Option<(SpinorField, Scalar, Connection)> {
    let alg = algebra();
    let c = &(&Scalar::one() + &(&Scalar::int(2) * alpha)) * &Scalar::int(a);
    let mut psi = SpinorField::zero();
    for p in [[4, 0, 0, 0, 0, 0, 0, 0, 0, 0], second] {
        let p = Momentum::from_ints(p);
        let m = alg.spinor[1].scale(&c).add(&dirac::dirac_matrix(&p));
        psi = psi.add(&SpinorField::plane_wave(&eigenvector(&m, root)?, &p));
    }
    let mut pot = vec![Field::zero(); 10];
    pot[1] = Field::constant(Scalar::int(a));
    Some((psi, &Scalar::frac(5, 4) - root, Connection::framework(pot)))
}

fn dirac_checks() -> Outcome {
    let mut notes = Vec::new();
    let gamma = dirac::gamma_suite();
    let gamma_ok = gamma.len() == 19 && gamma.iter().all(|g| g.holds);
    notes.push(format!("gamma {}/{}", gamma.iter().filter(|g| g.holds).count(), gamma.len()));

    let half = Scalar::frac(1, 2);
    let disp = dirac::plane_wave_dispersion(&Momentum::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
    let disp_ok = disp == dirac::Spectrum::Eigenvalues(vec![half.clone(), half.clone(), -&half, -&half]);
    notes.push(format!("time dispersion {disp:?}"));

    let waves: Vec<Result<(), String>> = (0..10).map(plane_wave_checks).collect();
    let waves_ok = waves.iter().all(Result::is_ok);
    notes.push(format!("plane waves {}/10", waves.iter().filter(|r| r.is_ok()).count()));

    let h = CrumpFactor::new(Scalar::int(3)).expect("real");
    let along_x = [5, 3, 0, 0, 0, 0, 0, 0, 0, 0];
    let along_y = [5, 0, 3, 0, 0, 0, 0, 0, 0, 0];
    let cases = [
        (Scalar::frac(-1, 2), 2, along_x, Scalar::int(2)),
        (Scalar::zero(), 3, along_y, Scalar::frac(5, 2)),
        (Scalar::one(), 1, along_y, Scalar::frac(5, 2)),
    ];
    let mut law_ok = true;
    for (alpha, a, second, root) in cases {
        for r in [root.clone(), -&root] {
            let Some((psi, lambda, conn)) = superposed(a, &alpha, second, &r) else {
                law_ok = false;
                continue;
            };
            let solves = dirac::alpha_residual(&psi, &lambda, &alpha, &h, &conn).is_zero();
            let conserved = dirac::conservation_defect(&psi, &alpha, &h, &conn).is_zero();
            let (_, hj) = dirac::vector_divergence(&psi, &h, &conn);
            law_ok &= solves && conserved && !hj.is_zero();
        }
    }
    let conn = random_connection(6, &[0, 1], 1).expect("within limits");
    let psi = dirac::random_spinor(8, &[0, 1], 2);
    let lambda = Scalar::complex(1, 3, 2, 1);
    for alpha in [Scalar::frac(-1, 2), Scalar::zero(), Scalar::one()] {
        let d = dirac::conservation_defect(&psi, &alpha, &h, &conn);
        law_ok &= d == dirac::conservation_source(&psi, &lambda, &alpha, &h, &conn);
    }
    notes.push(format!("(1+2α) law {law_ok}"));
    outcome(gamma_ok && disp_ok && waves_ok && law_ok, notes.join(", "))
}

fn cosmology() -> Outcome {
    match cosmological_r(1.0e-52, 2.998e8) {
        Ok(r) => outcome(
            (8.0e17..=8.4e17).contains(&r) && (0.1..=10.0).contains(&(r / QUOTED_R_SECONDS)),
            format!("r = {r:.3e} s, quoted {QUOTED_R_SECONDS:.1e} s, discrepancy ratio {:.2}", r / QUOTED_R_SECONDS),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn negative_controls() -> Outcome {
    let mut notes = Vec::new();

    let mut consts = printed_constants(false);
    consts[1][2][0] += 1;
    let corrupted = BracketTable::from_ints(lie::printed_table().names.clone(), &consts);
    let table = lie::structure_constants().map(|t| table_checks("liealg/bracket", &t, &corrupted)).unwrap_or_default();
    let table_hit = table.iter().find(|(_, r)| r.is_err());
    notes.push(match table_hit {
        Some((n, Err(w))) => format!("{n}: {w}"),
        _ => "corrupted constant undetected".into(),
    });

    let conn = random_connection(3, &[0, 1, 4], 2).expect("within limits").corrupted(1);
    let geo = geometry_checks(&conn);
    let bianchi = geo.iter().find(|(n, r)| n == "geometry/bianchi_1" && r.is_err());
    notes.push(match bianchi {
        Some((n, Err(w))) => format!("{n}: {w}"),
        _ => "corrupted connection undetected".into(),
    });

    let (lambda, psi) = dirac::plane_wave_solutions(&Momentum::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0, 0])).remove(0);
    let off = &lambda + &Scalar::one();
    let res = dirac::dirac_residual(&psi, &off, &CrumpFactor::one(), &Connection::flat());
    let dirac_hit = res.first_nonzero().map(|(a, f)| format!("dirac/residual[{a}]: {}", f.leading_term().map(|l| l.to_string()).unwrap_or_default()));
    notes.push(dirac_hit.clone().unwrap_or_else(|| "non-eigen λ undetected".into()));

    outcome(table_hit.is_some() && bianchi.is_some() && dirac_hit.is_some(), notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "commutator tables", commutator_tables),
        (2, "Casimir spectra", casimir_spectra),
        (3, "representation dimensions", dimensions),
        (4, "PBW centrality", centrality),
        (5, "superalgebra constants", superalgebra),
        (6, "tensor splits", splits),
        (7, "geometry identity suite", geometry_suite),
        (8, "coefficient tensors", coefficients),
        (9, "Dirac", dirac_checks),
        (10, "cosmology", cosmology),
        (11, "negative controls", negative_controls),
    ];
    let mut surprises = 0;
    for (n, name, f) in criteria {
        let o = f();
        println!("criterion {n} ({name}): {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        let expected = if EXPECTED_FAIL.contains(&n) { !o.pass && o.known_cause } else { o.pass };
        if !expected {
            surprises += 1;
        }
    }
    if surprises == 0 {
        println!("acceptance: outcomes as expected (criterion 7 fails on the printed Christoffel relations)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {surprises} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
