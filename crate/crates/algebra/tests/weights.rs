use adskit_algebra::roots::{self, Weight, FIGURE_WEIGHTS};
use adskit_algebra::{algebra, AlgebraError};
use adskit_core::rat;
use proptest::prelude::*;

#[test]
fn roots_satisfy_eigen_relations() {
    let rs = roots::root_system().unwrap();
    assert_eq!(rs.len(), 8);
    for r in &rs {
        assert!(rs.iter().any(|o| o.a == -r.a && o.b == -r.b));
    }
    assert_eq!(roots::weyl_group().len(), 8);
}

#[test]
fn multiplicity_examples() {
    let h = Weight::int(1, 1);
    assert_eq!(roots::kostant_multiplicity(h, h).unwrap(), 1);
    assert_eq!(roots::kostant_multiplicity(h, Weight::int(0, 0)).unwrap(), 2);
    assert_eq!(roots::freudenthal_multiplicity(h, Weight::int(0, 0)).unwrap(), 2);
    let sp = Weight::doubled(1, 1);
    assert_eq!(roots::kostant_multiplicity(sp, Weight::doubled(1, -1)).unwrap(), 1);
    assert_eq!(roots::freudenthal_multiplicity(sp, Weight::doubled(1, -1)).unwrap(), 1);
    assert!(matches!(roots::kostant_multiplicity(Weight::int(0, 1), h), Err(AlgebraError::NotDominant(_))));
    assert!(roots::irrep_dimension(Weight::doubled(1, 0)).is_err());
}

#[test]
fn figure_dimensions() {
    for (h, d) in FIGURE_WEIGHTS {
        assert_eq!(roots::irrep_dimension(h).unwrap(), d, "{h}");
        assert_eq!(roots::weyl_dimension(h).unwrap(), d, "{h}");
        let diag = roots::weight_diagram(h).unwrap();
        for (w, m) in &diag {
            assert_eq!(roots::freudenthal_multiplicity(h, *w).unwrap(), *m, "{h} at {w}");
        }
    }
}

#[test]
fn casimir_examples() {
    let cases = [
        (Weight::doubled(1, 1), rat(5, 2), rat(1, 4)),
        (Weight::int(1, 0), rat(4, 1), rat(1, 1)),
        (Weight::int(1, 1), rat(6, 1), rat(16, 9)),
        (Weight::int(0, 0), rat(0, 1), rat(0, 1)),
    ];
    for (h, mu, rho) in cases {
        assert_eq!(roots::casimir_eigenvalues(h).unwrap(), (mu, rho), "{h}");
    }
}

#[test]
fn csa_spectra_match_weight_diagrams() {
    let alg = algebra();
    let s = roots::csa_spectrum(&alg.spinor[0], &alg.spinor[7], 4);
    assert_eq!(s, roots::weight_diagram(Weight::doubled(1, 1)).unwrap());
    let v = roots::csa_spectrum(&alg.versor[0], &alg.versor[7], 4);
    assert_eq!(v, roots::weight_diagram(Weight::int(1, 0)).unwrap());
    let a = roots::csa_spectrum(&alg.adjoint[0], &alg.adjoint[7], 4);
    assert_eq!(a, roots::weight_diagram(Weight::int(1, 1)).unwrap());
}

#[test]
fn weight_parsing() {
    assert_eq!(Weight::parse("3/2,1/2"), Some(Weight::doubled(3, 1)));
    assert_eq!(Weight::parse("1,1"), Some(Weight::int(1, 1)));
    assert_eq!(Weight::parse("1/3,0"), None);
    assert_eq!(Weight::doubled(3, 1).to_string(), "(3/2,1/2)");
}

fn dominant_weight() -> impl Strategy<Value = Weight> {
    (0i64..6, 0i64..6).prop_filter_map("dominant", |(a, b)| {
        let w = Weight::doubled(a.max(b), a.min(b));
        w.is_dominant().then_some(w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn diagrams_are_weyl_symmetric(h in dominant_weight()) {
        let d = roots::weight_diagram(h).unwrap();
        for (w, m) in &d {
            let flips = [
                Weight::doubled(-w.q2, w.s2),
                Weight::doubled(w.q2, -w.s2),
                Weight::doubled(w.s2, w.q2),
            ];
            for f in flips {
                prop_assert_eq!(d.get(&f), Some(m));
            }
        }
        prop_assert_eq!(d.values().sum::<u64>(), roots::weyl_dimension(h).unwrap());
    }
}
