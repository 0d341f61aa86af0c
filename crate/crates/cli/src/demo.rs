//! The `demo` subcommands.

use adskit_core::{parse_rational, FieldTensor, Momentum, Scalar, COORDS};
use adskit_geometry::cosmology::{cosmological_r, QUOTED_R_SECONDS};
use adskit_geometry::curvature::{field_from_potential, reduced_from_potential};
use adskit_geometry::dirac::{self, CrumpFactor, Spectrum};
use adskit_geometry::{random_connection, Connection, GeometryError};
use serde::Serialize;

use crate::report::{timed, Report};
use crate::suites::{geometry_checks, Options};

#[derive(Debug, Serialize)]
pub struct Cosmo {
    pub lambda_per_m2: f64,
    pub c_m_per_s: f64,
    pub computed_r_seconds: f64,
    pub quoted_r_seconds: f64,
    pub ratio_computed_to_quoted: f64,
    /// The two values disagree by more than ten percent.
    pub discrepancy: bool,
}

pub fn cosmo(lambda: f64, c: f64) -> Result<Cosmo, GeometryError> {
    let r = cosmological_r(lambda, c)?;
    let ratio = r / QUOTED_R_SECONDS;
    Ok(Cosmo {
        lambda_per_m2: lambda,
        c_m_per_s: c,
        computed_r_seconds: r,
        quoted_r_seconds: QUOTED_R_SECONDS,
        ratio_computed_to_quoted: ratio,
        discrepancy: !(0.9..=1.1).contains(&ratio),
    })
}

pub fn parse_momentum(text: &str) -> Result<Momentum, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 10 {
        return Err(format!("momentum needs 10 components, got {}", parts.len()));
    }
    let mut p = Momentum::zero();
    for (k, s) in parts.iter().enumerate() {
        p.0[k] = parse_rational(s).map_err(|e| e.to_string())?;
    }
    Ok(p)
}

#[derive(Debug, Serialize)]
pub struct DiracSolution {
    pub lambda: Scalar,
    pub spinor: Vec<Scalar>,
    pub residual_zero: bool,
    pub lagrangian_zero: bool,
}

#[derive(Debug, Serialize)]
pub struct DiracDemo {
    pub momentum: Vec<String>,
    pub spectrum: Spectrum,
    /// Empty unless the spectrum has a closed form.
    pub solutions: Vec<DiracSolution>,
}

impl DiracDemo {
    pub fn passed(&self) -> bool {
        self.solutions.iter().all(|s| s.residual_zero && s.lagrangian_zero)
    }
}

pub fn dirac_demo(p: &Momentum) -> DiracDemo {
    let flat = Connection::flat();
    let h = CrumpFactor::one();
    let solutions = dirac::plane_wave_solutions(p)
        .into_iter()
        .map(|(lambda, psi)| {
            let residual_zero = dirac::dirac_residual(&psi, &lambda, &h, &flat).is_zero();
            let lagrangian_zero = dirac::dirac_lagrangian(&psi, &lambda, &h, &flat).0.is_zero();
            // amplitude at the origin: each component is u_a·exp(i p·x)
            let spinor = psi.0.iter().map(|f| f.iter().next().map(|(_, _, c)| c.clone()).unwrap_or_default()).collect();
            DiracSolution { lambda, spinor, residual_zero, lagrangian_zero }
        })
        .collect();
    DiracDemo { momentum: p.0.iter().map(|r| r.to_string()).collect(), spectrum: dirac::plane_wave_dispersion(p), solutions }
}

#[derive(Debug, Serialize)]
pub struct Component {
    pub indices: Vec<&'static str>,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct GeometryDemo {
    pub flat: bool,
    /// Nonzero `F_ij`.
    pub field: Vec<Component>,
    /// Nonzero `R^k_ij`.
    pub reduced: Vec<Component>,
    pub report: Report,
}

fn components(t: &FieldTensor) -> Vec<Component> {
    t.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(ix, v)| Component { indices: ix.iter().map(|&i| COORDS[i]).collect(), value: v.to_string() })
        .collect()
}

pub fn geometry_demo(opts: &Options) -> Result<GeometryDemo, GeometryError> {
    let conn = random_connection(opts.seed, &opts.active, opts.degree)?;
    let checks = timed(|| geometry_checks(&conn));
    Ok(GeometryDemo {
        flat: conn.is_flat(),
        field: components(&field_from_potential(&conn)),
        reduced: components(&reduced_from_potential(&conn)),
        report: Report::new(vec!["geometry".into()], opts.seed, opts.degree, opts.active_names(), checks),
    })
}
