//! The verification suites. Each suite is a list of jobs; jobs run in
//! parallel and each yields one or more named checks.

use adskit_algebra::basis::{p_matrix, NAMES};
use adskit_algebra::decomp::{self, Factor, Space, Symmetry};
use adskit_algebra::roots::{self, Weight, FIGURE_WEIGHTS};
use adskit_algebra::{algebra, enveloping, lie, BracketTable};
use adskit_core::{rat, Field, Momentum, Rational, Scalar, COORDS};
use adskit_geometry::cosmology::cosmological_r;
use adskit_geometry::dirac::{self, CrumpFactor, SpinorField};
use adskit_geometry::equations::coefficient_tensors;
use adskit_geometry::{identity_suite, random_connection, Connection, GeometryError};
use clap::ValueEnum;
use rayon::prelude::*;

use crate::report::{expect_eq, timed, Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Liealg,
    Reptheory,
    Enveloping,
    Tensordecomp,
    Geometry,
    Dirac,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Liealg, Suite::Reptheory, Suite::Enveloping, Suite::Tensordecomp, Suite::Geometry, Suite::Dirac];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Liealg => "liealg",
            Suite::Reptheory => "reptheory",
            Suite::Enveloping => "enveloping",
            Suite::Tensordecomp => "tensordecomp",
            Suite::Geometry => "geometry",
            Suite::Dirac => "dirac",
            Suite::All => "all",
        }
    }
}

/// Seed and generator limits shared by the geometry and Dirac suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub degree: u32,
    pub active: Vec<usize>,
}

impl Options {
    /// Fails on the same limits the connection generator enforces.
    pub fn validate(&self) -> Result<(), GeometryError> {
        random_connection(1, &self.active, self.degree).map(|_| ())
    }

    pub fn active_names(&self) -> Vec<String> {
        self.active.iter().map(|&k| COORDS[k].to_string()).collect()
    }
}

type Outcome = Vec<(String, Result<(), String>)>;
type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

fn job(f: impl Fn() -> Outcome + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn one(name: impl Into<String>, r: Result<(), String>) -> Outcome {
    vec![(name.into(), r)]
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

/// Expand the suite list, run every job and collect a sorted report.
pub fn run_verify(suites: &[Suite], opts: &Options) -> Report {
    let mut chosen: Vec<Suite> = if suites.is_empty() || suites.contains(&Suite::All) {
        Suite::EACH.to_vec()
    } else {
        suites.to_vec()
    };
    chosen.sort();
    chosen.dedup();
    let jobs: Vec<Job> = chosen.iter().flat_map(|s| jobs_for(*s, opts)).collect();
    let checks: Vec<Check> = jobs.par_iter().flat_map_iter(|j| timed(|| j())).collect();
    let names = chosen.iter().map(|s| s.name().to_string()).collect();
    Report::new(names, opts.seed, opts.degree, opts.active_names(), checks)
}

pub fn jobs_for(suite: Suite, opts: &Options) -> Vec<Job> {
    match suite {
        Suite::Liealg => liealg(),
        Suite::Reptheory => reptheory(),
        Suite::Enveloping => enveloping_jobs(),
        Suite::Tensordecomp => tensordecomp(),
        Suite::Geometry => geometry(opts),
        Suite::Dirac => dirac_jobs(opts),
        Suite::All => Suite::EACH.iter().flat_map(|s| jobs_for(*s, opts)).collect(),
    }
}

/// One check per unordered pair `i < j`, failing on any mismatched cell.
pub fn table_checks(prefix: &str, computed: &BracketTable, printed: &BracketTable) -> Outcome {
    let diff = computed.compare(printed);
    let n = computed.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (computed.names[i], computed.names[j]);
            let bad: Vec<String> = diff
                .iter()
                .filter(|m| (m.row == a && m.col == b) || (m.row == b && m.col == a))
                .map(|m| m.to_string())
                .collect();
            out.push((format!("{prefix}/[{a},{b}]"), ensure(bad.is_empty(), || bad.join("; "))));
        }
    }
    out
}

fn liealg() -> Vec<Job> {
    vec![
        job(|| match lie::structure_constants() {
            Ok(t) => table_checks("liealg/bracket", &t, &lie::printed_table()),
            Err(e) => one("liealg/bracket", Err(e.to_string())),
        }),
        job(|| match lie::so33_extension() {
            Ok(t) => table_checks("liealg/so33", &t, &lie::printed_so33_table()),
            Err(e) => one("liealg/so33", Err(e.to_string())),
        }),
        job(|| {
            let alg = algebra();
            [("spinor", &alg.spinor), ("versor", &alg.versor), ("adjoint", &alg.adjoint)]
                .into_iter()
                .map(|(name, mats)| {
                    let v = lie::jacobi_violation(mats);
                    (format!("liealg/jacobi/{name}"), ensure(v.is_none(), || format!("triple {v:?}")))
                })
                .collect()
        }),
        job(|| {
            let v = lie::versor_action_mismatch();
            one("liealg/versor_action", ensure(v.is_none(), || format!("generator {v:?}")))
        }),
        job(|| {
            let alg = algebra();
            let r = lie::killing_metric().map_err(|e| e.to_string()).and_then(|(g, _)| {
                (0..10)
                    .flat_map(|i| (0..10).map(move |j| (i, j)))
                    .find(|&(i, j)| *g.get(&[i, j]) != if i == j { alg.g[i].clone() } else { Scalar::zero() })
                    .map_or(Ok(()), |(i, j)| Err(format!("g[{},{}] = {}", NAMES[i], NAMES[j], g.get(&[i, j]))))
            });
            one("liealg/killing_metric", r)
        }),
        job(|| {
            let r = roots::root_system().map_err(|e| e.to_string()).and_then(|rs| ensure(rs.len() == 8, || format!("{} roots", rs.len())));
            let w = roots::weyl_group().len();
            vec![
                ("liealg/roots".into(), r),
                ("liealg/weyl_group".into(), ensure(w == 8, || format!("{w} elements"))),
            ]
        }),
        job(|| {
            let r = lie::p_matrices().map(|_| ()).map_err(|e| e.to_string());
            one("liealg/p_matrices", r)
        }),
    ]
}

/// Highest weights with their printed quadratic and quartic Casimir values.
pub fn casimir_table() -> [(Weight, Rational, Rational); 3] {
    [
        (Weight::doubled(1, 1), rat(5, 2), rat(1, 4)),
        (Weight::int(1, 0), rat(4, 1), rat(1, 1)),
        (Weight::int(1, 1), rat(6, 1), rat(16, 9)),
    ]
}

fn reptheory() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for (h, d) in FIGURE_WEIGHTS {
        jobs.push(job(move || {
            let r = roots::irrep_dimension(h).and_then(|k| roots::weyl_dimension(h).map(|w| (k, w)));
            let dim = match r {
                Ok((k, w)) if k == d && w == d => Ok(()),
                Ok((k, w)) => Err(format!("Kostant {k}, Weyl {w}, expected {d}")),
                Err(e) => Err(e.to_string()),
            };
            let mult = roots::weight_diagram(h).map_err(|e| e.to_string()).and_then(|diag| {
                diag.iter()
                    .find_map(|(w, m)| match roots::freudenthal_multiplicity(h, *w) {
                        Ok(f) if f == *m => None,
                        Ok(f) => Some(format!("{w}: Kostant {m}, Freudenthal {f}")),
                        Err(e) => Some(e.to_string()),
                    })
                    .map_or(Ok(()), Err)
            });
            vec![(format!("reptheory/dimension/{h}"), dim), (format!("reptheory/multiplicity/{h}"), mult)]
        }));
    }
    jobs.push(job(|| {
        casimir_table()
            .into_iter()
            .map(|(h, mu, rho)| {
                let r = roots::casimir_eigenvalues(h).map_err(|e| e.to_string()).and_then(|(m, r)| {
                    ensure(m == mu && r == rho, || format!("got ({m}, {r}), expected ({mu}, {rho})"))
                });
                (format!("reptheory/casimir/{h}"), r)
            })
            .collect()
    }));
    jobs.push(job(|| {
        [(Factor::Spinor, "spinor", rat(5, 2)), (Factor::Versor, "versor", rat(4, 1)), (Factor::Vector, "vector", rat(6, 1))]
            .into_iter()
            .map(|(f, name, mu)| {
                let r = decomp::casimir_identity_check(f).map_err(|e| e.to_string()).and_then(|s| expect_eq(&s, &Scalar::real(mu)));
                (format!("reptheory/casimir_scalar/{name}"), r)
            })
            .collect()
    }));
    jobs
}

fn enveloping_jobs() -> Vec<Job> {
    let central = |name: &'static str, e: fn() -> enveloping::EnvElement| {
        job(move || {
            let r = enveloping::centrality_check(&e()).map_err(|(g, c)| format!("[{}, {name}] leaves {} terms", NAMES[g], c.terms().count()));
            one(format!("enveloping/central/{name}"), r)
        })
    };
    vec![
        central("Q", enveloping::quadratic_casimir),
        central("R", enveloping::quartic_casimir),
        job(|| {
            let alg = algebra();
            enveloping::versor_polynomials()
                .iter()
                .enumerate()
                .map(|(a, p)| (format!("enveloping/versor_polynomial/{a}"), ensure(p.evaluate(&alg.spinor) == p_matrix(a), || "evaluates to a different matrix".into())))
                .collect()
        }),
    ]
}

/// Named tensor-product spaces and their expected component dimensions.
pub fn split_table() -> Vec<(&'static str, Space, Vec<usize>)> {
    use Factor::*;
    vec![
        ("spinor_spinor", Space::new(vec![Spinor, Spinor], Symmetry::Full), vec![1, 5, 10]),
        ("vector_vector", Space::new(vec![Vector, Vector], Symmetry::Full), vec![1, 5, 10, 14, 35, 35]),
        ("spinor_versor", Space::new(vec![Spinor, Versor], Symmetry::Full), vec![4, 16]),
        ("sym3_spinor", Space::new(vec![Spinor; 3], Symmetry::Symmetric), vec![20]),
        ("sym4_spinor", Space::new(vec![Spinor; 4], Symmetry::Symmetric), vec![35]),
    ]
}

fn tensordecomp() -> Vec<Job> {
    let mut jobs: Vec<Job> = split_table()
        .into_iter()
        .map(|(name, space, dims)| {
            job(move || {
                let r = decomp::rep_split(&space).map_err(|e| e.to_string()).and_then(|rep| {
                    let got: Vec<usize> = rep.summary().into_iter().map(|(_, d)| d).collect();
                    ensure(got == dims, || format!("dimensions {got:?}, expected {dims:?}"))?;
                    rep.projector_failure().map_or(Ok(()), Err)
                });
                one(format!("tensordecomp/split/{name}"), r)
            })
        })
        .collect();
    jobs.push(job(|| {
        let res = decomp::superalgebra_residual();
        let cyclic = ensure(res.is_zero(), || format!("{:?}", res.first_nonzero()));
        let consts = decomp::superalgebra_constants()
            .map_err(|e| e.to_string())
            .and_then(|(k, c)| ensure(k == Scalar::int(-1) && c == Scalar::frac(-5, 4), || format!("k = {k}, c = {c}")));
        vec![("tensordecomp/superalgebra_cyclic".into(), cyclic), ("tensordecomp/superalgebra_constants".into(), consts)]
    }));
    jobs.push(job(|| {
        decomp::local_invariance_report()
            .into_iter()
            .map(|(name, bad)| (format!("tensordecomp/invariant/{name}"), ensure(bad.is_none(), || format!("moved by {}", NAMES[bad.unwrap_or(0)]))))
            .collect()
    }));
    jobs
}

/// Identity-suite checks for one connection. Framework-only identities are
/// skipped on the flat connection, which lacks the invariant torsion.
pub fn geometry_checks(conn: &Connection) -> Outcome {
    match identity_suite(conn) {
        Ok(res) => res
            .into_iter()
            .filter(|r| !(conn.is_flat() && r.framework_only))
            .map(|r| {
                let w = r.witness.map(|w| format!("{} at {:?}: {}", r.name, w.indices, w.leading_term));
                (format!("geometry/{}", r.name), w.map_or(Ok(()), Err))
            })
            .collect(),
        Err(e) => one("geometry/identity_suite", Err(e.to_string())),
    }
}

fn geometry(opts: &Options) -> Vec<Job> {
    let o = opts.clone();
    vec![
        job(move || match random_connection(o.seed, &o.active, o.degree) {
            Ok(conn) => geometry_checks(&conn),
            Err(e) => one("geometry/connection", Err(e.to_string())),
        }),
        job(|| {
            let b = coefficient_tensors().b;
            let mut tr = Scalar::zero();
            for k in 0..10 {
                for m in 0..10 {
                    tr += b.get(&[k, m, k, m]);
                }
            }
            one("geometry/coefficient_trace", expect_eq(&tr, &Scalar::int(30)))
        }),
        job(|| {
            let r = cosmological_r(1.0e-52, 2.998e8)
                .map_err(|e| e.to_string())
                .and_then(|r| ensure((8.0e17..=8.4e17).contains(&r), || format!("r = {r:e} s")));
            one("geometry/cosmological_r", r)
        }),
    ]
}

fn unit_momentum(k: usize) -> Momentum {
    let mut p = [0; 10];
    p[k] = 1;
    Momentum::from_ints(p)
}

fn zero_field(name: &str, f: &Field) -> Result<(), String> {
    ensure(f.is_zero(), || format!("{name} = {}", f.leading_term().map(|l| l.to_string()).unwrap_or_default()))
}

fn zero_spinor(name: &str, s: &SpinorField) -> Result<(), String> {
    match s.first_nonzero() {
        None => Ok(()),
        Some((a, f)) => Err(format!("{name}[{a}] = {}", f.leading_term().map(|l| l.to_string()).unwrap_or_default())),
    }
}

/// Residual, `L_D` and bullet divergence on every flat unit-momentum solution.
pub fn plane_wave_checks(k: usize) -> Result<(), String> {
    let flat = Connection::flat();
    let h = CrumpFactor::one();
    let sols = dirac::plane_wave_solutions(&unit_momentum(k));
    ensure(sols.len() == 4, || format!("{} solutions", sols.len()))?;
    for (lambda, psi) in &sols {
        zero_spinor("residual", &dirac::dirac_residual(psi, lambda, &h, &flat))?;
        zero_field("L_D", &dirac::dirac_lagrangian(psi, lambda, &h, &flat).0)?;
        zero_field("div J•", &dirac::bullet_divergence(psi, &flat))?;
    }
    Ok(())
}

fn dirac_jobs(opts: &Options) -> Vec<Job> {
    let mut jobs: Vec<Job> = vec![
        job(|| dirac::gamma_suite().into_iter().map(|g| (format!("dirac/gamma/{}", g.name), ensure(g.holds, || "fails".into()))).collect()),
        job(|| {
            let half = Scalar::frac(1, 2);
            let want = dirac::Spectrum::Eigenvalues(vec![half.clone(), half.clone(), -&half, -&half]);
            let got = dirac::plane_wave_dispersion(&unit_momentum(0));
            one("dirac/dispersion/t", ensure(got == want, || format!("{got:?}")))
        }),
        job(|| {
            let psi = SpinorField(std::array::from_fn(|a| {
                let base = Field::var(a);
                &(&base * &Field::var(3 - a)) + &Field::plane_wave(Momentum::from_ints([1, 2, -1, 3, 0, 0, 0, 0, 0, 0]))
            }));
            let diff = dirac::extended_curl(&psi, &Connection::flat()).sub(&dirac::poincare_operator(&psi));
            one("dirac/poincare_restriction", zero_spinor("difference", &diff))
        }),
    ];
    for k in 0..10 {
        jobs.push(job(move || one(format!("dirac/plane_wave/{}", COORDS[k]), plane_wave_checks(k))));
    }
    let o = opts.clone();
    jobs.push(job(move || {
        let conn = match random_connection(o.seed, &o.active, o.degree.min(1)) {
            Ok(c) => c,
            Err(e) => return one("dirac/connection", Err(e.to_string())),
        };
        let psi = dirac::random_spinor(o.seed, &o.active, o.degree.min(2));
        let h = CrumpFactor::new(Scalar::frac(-3, 2)).expect("real");
        let lambda = Scalar::frac(7, 3);
        let mut out: Outcome = [Scalar::frac(-1, 2), Scalar::zero(), Scalar::one()]
            .into_iter()
            .map(|alpha| {
                let d = dirac::conservation_defect(&psi, &alpha, &h, &conn);
                let s = dirac::conservation_source(&psi, &lambda, &alpha, &h, &conn);
                (format!("dirac/alpha_identity/{alpha}"), zero_field("defect - source", &(&d - &s)))
            })
            .collect();
        let (_, l) = dirac::dirac_lagrangian(&psi, &lambda, &h, &conn);
        let (div, hj) = dirac::vector_divergence(&psi, &h, &conn);
        let gap = &l.re_part() - &(&div - &hj).scale(&Scalar::frac(1, 2));
        out.push(("dirac/lagrangian_real_part".into(), zero_field("Re L - ½(∇J - HJ)", &gap)));
        let j = dirac::currents(&psi, &h);
        out.push(("dirac/current_real".into(), ensure(j.vector.iter().all(Field::is_real), || "J_k has an imaginary part".into())));
        out
    }));
    jobs
}
