use adskit_algebra::basis::{self, NAMES};
use adskit_algebra::lie::{self, bracket, expand};
use adskit_algebra::{algebra, AlgebraError};
use adskit_core::{Matrix, Scalar};

fn idx(n: &str) -> usize {
    NAMES.iter().position(|m| *m == n).unwrap()
}

#[test]
fn bracket_examples() {
    let s = basis::spinor_matrices();
    assert_eq!(bracket(&s[idx("T")], &s[idx("X")]).unwrap(), s[idx("A")]);
    assert_eq!(bracket(&s[idx("X")], &s[idx("Y")]).unwrap(), s[idx("K")].neg());
    assert!(bracket(&s[0], &s[0]).unwrap().is_zero());
    let e = bracket(&s[0], &basis::versor_matrix(0));
    assert!(matches!(e, Err(AlgebraError::Dimension(_))));
}

#[test]
fn extracted_table_matches_printed() {
    let t = lie::structure_constants().unwrap();
    let diff = t.compare(&lie::printed_table());
    assert!(diff.is_empty(), "{diff:?}");
    assert_eq!(t.pair_count(), 45);
    assert_eq!(t.get(idx("T"), idx("X"), idx("A")), &Scalar::one());
    assert_eq!(t.get(idx("I"), idx("J"), idx("K")), &Scalar::one());
    assert!((0..10).all(|k| t.get(0, 0, k).is_zero()));
}

#[test]
fn so33_table_matches_printed() {
    let t = lie::so33_extension().unwrap();
    let diff = t.compare(&lie::printed_so33_table());
    assert!(diff.is_empty(), "{:#?}", diff);
    assert_eq!(t.pair_count(), 105);
}

#[test]
fn scaled_algebra_examples() {
    let one = Scalar::one();
    assert_eq!(lie::scaled_algebra(&one, &one).unwrap(), lie::structure_constants().unwrap());
    let r = Scalar::int(3);
    let c = Scalar::int(5);
    let t = lie::scaled_algebra(&r, &c).unwrap();
    assert_eq!(t.get(idx("T"), idx("X"), idx("A")), &Scalar::frac(1, 9));
    assert_eq!(t.get(idx("X"), idx("A"), idx("T")), &Scalar::frac(-1, 25));
    assert_eq!(t.get(idx("X"), idx("Y"), idx("K")), &Scalar::frac(-1, 225));
    assert_eq!(t.get(idx("A"), idx("B"), idx("K")), &Scalar::frac(-1, 25));
    assert_eq!(t.get(idx("I"), idx("J"), idx("K")), &Scalar::one());
}

#[test]
fn metric_examples() {
    let (g, gi) = lie::killing_metric().unwrap();
    let t = &basis::spinor_matrix(0);
    assert_eq!(g.get(&[0, 0]), &t.mul(t).trace());
    assert_eq!(g.get(&[0, 0]), &Scalar::int(-1));
    assert_eq!(g.get(&[1, 1]), &Scalar::int(1));
    assert!(g.get(&[0, 1]).is_zero());
    for i in 0..10 {
        assert_eq!(&(g.get(&[i, i]) * gi.get(&[i, i])), &Scalar::one());
    }
}

#[test]
fn p_matrix_examples() {
    lie::p_matrices().unwrap();
    let s = basis::spinor_matrices();
    let p = basis::p_matrices();
    assert_eq!(s[idx("X")].anticommutator(&s[idx("I")]), p[1]);
    let txyz = s[0].mul(&s[1]).mul(&s[2]).mul(&s[3]).scale(&Scalar::int(8));
    assert_eq!(txyz, p[0]);
    assert!(p[2].trace().is_zero());
    assert_eq!(lie::versor_action_mismatch(), None);
}

#[test]
fn representation_invariants() {
    let alg = algebra();
    let om = basis::omega();
    let om5 = basis::omega5();
    for i in 0..10 {
        let d = &alg.spinor[i];
        assert!(d.transpose().mul(&om).add(&om.mul(d)).is_zero());
        let v = &alg.versor[i];
        assert!(v.transpose().mul(&om5).add(&om5.mul(v)).is_zero());
        let sign = if basis::is_compact(i) { -4 } else { 4 };
        assert_eq!(d.inverse().unwrap(), d.scale(&Scalar::int(sign)), "{}", NAMES[i]);
    }
    assert_eq!(lie::jacobi_violation(&alg.spinor), None);
    assert_eq!(lie::jacobi_violation(&alg.versor), None);
    assert_eq!(lie::jacobi_violation(&alg.adjoint), None);
    // The 5-D matrices are a representation with the same constants.
    let t5 = lie::bracket_table(&alg.versor, NAMES.to_vec()).unwrap();
    assert!(t5.compare(&lie::printed_table()).is_empty());
    let t10 = lie::bracket_table(&alg.adjoint, NAMES.to_vec()).unwrap();
    assert!(t10.compare(&lie::printed_table()).is_empty());
}

#[test]
fn expansion_outside_span_is_none() {
    let s = basis::spinor_matrices();
    assert!(expand(&Matrix::identity(4), &s).is_none());
}
