//! Roots, the Weyl group, weight multiplicities (Kostant and Freudenthal)
//! and Casimir eigenvalues.
//!
//! Weights are stored doubled, so `(q, s) = (1/2, 1/2)` is `Weight { q2: 1, s2: 1 }`;
//! `q` is the eigenvalue of `T` divided by `i`, `s` that of `I`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use adskit_core::{rat, Matrix, Rational, Scalar};
use serde::{Deserialize, Serialize};

use crate::lie::algebra;
use crate::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub q2: i64,
    pub s2: i64,
}

impl Weight {
    pub const fn doubled(q2: i64, s2: i64) -> Self {
        Weight { q2, s2 }
    }

    /// Whole-number coordinates.
    pub const fn int(q: i64, s: i64) -> Self {
        Weight { q2: 2 * q, s2: 2 * s }
    }

    pub fn q(&self) -> Rational {
        rat(self.q2, 2)
    }

    pub fn s(&self) -> Rational {
        rat(self.s2, 2)
    }

    pub fn add(self, o: Weight) -> Weight {
        Weight { q2: self.q2 + o.q2, s2: self.s2 + o.s2 }
    }

    pub fn sub(self, o: Weight) -> Weight {
        Weight { q2: self.q2 - o.q2, s2: self.s2 - o.s2 }
    }

    pub fn scale(self, k: i64) -> Weight {
        Weight { q2: self.q2 * k, s2: self.s2 * k }
    }

    fn dot(self, o: Weight) -> i64 {
        self.q2 * o.q2 + self.s2 * o.s2
    }

    /// `q ≥ s ≥ 0` with `q - s` whole.
    pub fn is_dominant(&self) -> bool {
        self.q2 >= self.s2 && self.s2 >= 0 && (self.q2 - self.s2) % 2 == 0
    }

    /// Parses `q,s` with each part an integer or `n/2`.
    pub fn parse(text: &str) -> Option<Weight> {
        let (a, b) = text.split_once(',')?;
        Some(Weight { q2: parse_half(a.trim())?, s2: parse_half(b.trim())? })
    }
}

fn parse_half(s: &str) -> Option<i64> {
    let r = adskit_core::parse_rational(s).ok()?;
    let two = &r * rat(2, 1);
    if !two.is_integer() {
        return None;
    }
    num_traits::ToPrimitive::to_i64(two.numer())
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: i64| if v % 2 == 0 { format!("{}", v / 2) } else { format!("{v}/2") };
        write!(f, "({},{})", show(self.q2), show(self.s2))
    }
}

/// Positive roots, doubled: `(1,-1)`, `(0,1)`, `(1,0)`, `(1,1)`.
pub const POSITIVE_ROOTS: [Weight; 4] =
    [Weight::doubled(2, -2), Weight::doubled(0, 2), Weight::doubled(2, 0), Weight::doubled(2, 2)];

/// Half the sum of positive roots, `(3/2, 1/2)`.
pub const RHO: Weight = Weight::doubled(3, 1);

/// A root with its element as a complex combination of the basis,
/// normalisation dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub arrow: &'static str,
    /// Root in whole units: `[T, E] = i·a E`, `[I, E] = i·b E`.
    pub a: i64,
    pub b: i64,
    pub element: [Scalar; 10],
}

impl Root {
    pub fn matrix(&self) -> Matrix {
        combine(&self.element, &algebra().spinor)
    }
}

pub fn combine(coeffs: &[Scalar], mats: &[Matrix]) -> Matrix {
    let mut m = Matrix::zeros(mats[0].rows(), mats[0].cols());
    for (c, b) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            m = m.add(&b.scale(c));
        }
    }
    m
}

fn element(parts: &[(usize, i64, i64)]) -> [Scalar; 10] {
    let mut e: [Scalar; 10] = std::array::from_fn(|_| Scalar::zero());
    for &(k, re, im) in parts {
        e[k] = Scalar::complex(re, 1, im, 1);
    }
    e
}

/// The eight roots as printed (the `↓` element's `2/√2` factor is treated as
/// a misprint of `1/√2`; scale is irrelevant).
pub fn roots() -> Vec<Root> {
    let (y, z, a, b, c, j, k) = (2, 3, 4, 5, 6, 8, 9);
    let x = 1;
    vec![
        Root { arrow: "→", a: 1, b: 0, element: element(&[(a, 1, 0), (x, 0, 1)]) },
        Root { arrow: "←", a: -1, b: 0, element: element(&[(a, -1, 0), (x, 0, 1)]) },
        Root { arrow: "↑", a: 0, b: 1, element: element(&[(j, 1, 0), (k, 0, -1)]) },
        Root { arrow: "↓", a: 0, b: -1, element: element(&[(j, 1, 0), (k, 0, 1)]) },
        Root { arrow: "↗", a: 1, b: 1, element: element(&[(c, 1, 0), (y, -1, 0), (b, 0, 1), (z, 0, 1)]) },
        Root { arrow: "↖", a: -1, b: 1, element: element(&[(c, 1, 0), (y, 1, 0), (b, 0, 1), (z, 0, -1)]) },
        Root { arrow: "↘", a: 1, b: -1, element: element(&[(c, -1, 0), (y, -1, 0), (b, 0, 1), (z, 0, -1)]) },
        Root { arrow: "↙", a: -1, b: -1, element: element(&[(c, -1, 0), (y, 1, 0), (b, 0, 1), (z, 0, 1)]) },
    ]
}

/// Checks `[T, E] = i·a E` and `[I, E] = i·b E` for every root, plus `[T, I] = 0`.
pub fn root_system() -> Result<Vec<Root>, AlgebraError> {
    let alg = algebra();
    let (t, im) = (&alg.spinor[0], &alg.spinor[7]);
    if !t.commutator(im).is_zero() {
        return Err(AlgebraError::Mismatch("[T, I] != 0".into()));
    }
    let rs = roots();
    for r in &rs {
        let e = r.matrix();
        if e.is_zero() {
            return Err(AlgebraError::Mismatch(format!("root {} has zero element", r.arrow)));
        }
        for (h, v, name) in [(t, r.a, "T"), (im, r.b, "I")] {
            if h.commutator(&e) != e.scale(&Scalar::complex(0, 1, v, 1)) {
                return Err(AlgebraError::Mismatch(format!("[{name}, E] for root {} is not {v}i·E", r.arrow)));
            }
        }
    }
    Ok(rs)
}

/// Signed permutations of `(q, s)` with their determinants.
pub fn weyl_group() -> Vec<([[i64; 2]; 2], i64)> {
    let mut out = Vec::new();
    for swap in [false, true] {
        for sq in [1, -1] {
            for ss in [1, -1] {
                let m = if swap { [[0, sq], [ss, 0]] } else { [[sq, 0], [0, ss]] };
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                out.push((m, det));
            }
        }
    }
    out
}

fn act(m: &[[i64; 2]; 2], w: Weight) -> Weight {
    Weight { q2: m[0][0] * w.q2 + m[0][1] * w.s2, s2: m[1][0] * w.q2 + m[1][1] * w.s2 }
}

/// Dominant representative of the Weyl orbit.
pub fn dominant(w: Weight) -> Weight {
    let (a, b) = (w.q2.abs(), w.s2.abs());
    Weight { q2: a.max(b), s2: a.min(b) }
}

thread_local! {
    static PARTITIONS: RefCell<HashMap<(i64, i64), u64>> = RefCell::new(HashMap::new());
}

/// Kostant partition function: ways to write `v` (whole units) as a
/// non-negative combination of the four positive roots.
pub fn partition(vq: i64, vs: i64) -> u64 {
    if let Some(v) = PARTITIONS.with(|m| m.borrow().get(&(vq, vs)).copied()) {
        return v;
    }
    // v = a(1,-1) + b(0,1) + c(1,0) + d(1,1)
    let mut n = 0;
    if vq >= 0 {
        for a in 0..=vq {
            for d in 0..=vq - a {
                let b = vs + a - d;
                if b >= 0 {
                    n += 1;
                }
            }
        }
    }
    PARTITIONS.with(|m| m.borrow_mut().insert((vq, vs), n));
    n
}

fn check_dominant(h: Weight) -> Result<(), AlgebraError> {
    if h.is_dominant() {
        Ok(())
    } else {
        Err(AlgebraError::NotDominant(h.to_string()))
    }
}

/// Multiplicity of `w` in the irreducible with highest weight `h`, by the
/// alternating Weyl-group sum over the partition function.
pub fn kostant_multiplicity(h: Weight, w: Weight) -> Result<u64, AlgebraError> {
    check_dominant(h)?;
    let d = h.sub(w);
    if d.q2 % 2 != 0 || d.s2 % 2 != 0 {
        return Ok(0);
    }
    let target = w.add(RHO);
    let mut sum: i64 = 0;
    for (m, sgn) in weyl_group() {
        let v = act(&m, h.add(RHO)).sub(target);
        if v.q2 % 2 != 0 || v.s2 % 2 != 0 {
            continue;
        }
        sum += sgn * partition(v.q2 / 2, v.s2 / 2) as i64;
    }
    u64::try_from(sum).map_err(|_| AlgebraError::Mismatch(format!("negative multiplicity {sum} at {w}")))
}

/// Independent multiplicity oracle by Freudenthal's recursion.
pub fn freudenthal_multiplicity(h: Weight, w: Weight) -> Result<u64, AlgebraError> {
    check_dominant(h)?;
    let mut memo = HashMap::new();
    Ok(freudenthal(h, dominant(w), &mut memo))
}

fn below(h: Weight, w: Weight) -> bool {
    // h - w = a(1,-1) + b(0,1) with a, b whole and non-negative
    let d = h.sub(w);
    if d.q2 % 2 != 0 || d.s2 % 2 != 0 {
        return false;
    }
    let a = d.q2 / 2;
    let b = (d.s2 + d.q2) / 2;
    a >= 0 && b >= 0
}

fn freudenthal(h: Weight, w: Weight, memo: &mut HashMap<Weight, u64>) -> u64 {
    let w = dominant(w);
    if w == h {
        return 1;
    }
    if !below(h, w) {
        return 0;
    }
    if let Some(&m) = memo.get(&w) {
        return m;
    }
    let hr = h.add(RHO);
    let wr = w.add(RHO);
    let denom = hr.dot(hr) - wr.dot(wr);
    let mut num: i64 = 0;
    for alpha in POSITIVE_ROOTS {
        let mut k = 1;
        loop {
            let v = w.add(alpha.scale(k));
            if !below(h, dominant(v)) {
                break;
            }
            num += 2 * freudenthal(h, v, memo) as i64 * v.dot(alpha);
            k += 1;
        }
    }
    assert!(denom > 0 && num % denom == 0, "Freudenthal recursion is not integral at {w}");
    let m = (num / denom) as u64;
    memo.insert(w, m);
    m
}

/// All weights with nonzero multiplicity, keyed in `(q, s)` order.
pub fn weight_diagram(h: Weight) -> Result<BTreeMap<Weight, u64>, AlgebraError> {
    check_dominant(h)?;
    let mut out = BTreeMap::new();
    let r = h.q2;
    let mut q2 = -r;
    while q2 <= r {
        let mut s2 = -r;
        while s2 <= r {
            let w = Weight { q2, s2 };
            let m = kostant_multiplicity(h, w)?;
            if m > 0 {
                out.insert(w, m);
            }
            s2 += 2;
        }
        q2 += 2;
    }
    Ok(out)
}

/// Weyl dimension formula `Π (h+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(h: Weight) -> Result<u64, AlgebraError> {
    check_dominant(h)?;
    let mut num = rat(1, 1);
    for a in POSITIVE_ROOTS {
        num *= rat(h.add(RHO).dot(a), RHO.dot(a));
    }
    assert!(num.is_integer());
    Ok(num_traits::ToPrimitive::to_u64(num.numer()).expect("dimension fits u64"))
}

/// Kostant-summed dimension, cross-checked against the Weyl formula.
pub fn irrep_dimension(h: Weight) -> Result<u64, AlgebraError> {
    let k: u64 = weight_diagram(h)?.values().sum();
    let w = weyl_dimension(h)?;
    if k != w {
        return Err(AlgebraError::Mismatch(format!("dimension of {h}: Kostant {k}, Weyl {w}")));
    }
    Ok(k)
}

/// `(μ, ρ)` with `μ = q(q+3) + s(s+1)` and `ρ = q - s + (4/9) s² (q+1)²`.
pub fn casimir_eigenvalues(h: Weight) -> Result<(Rational, Rational), AlgebraError> {
    check_dominant(h)?;
    let (q, s) = (h.q(), h.s());
    let one = rat(1, 1);
    let mu = &q * (&q + rat(3, 1)) + &s * (&s + &one);
    let qp = &q + &one;
    let r = &q - &s + rat(4, 9) * &s * &s * &qp * &qp;
    Ok((mu, r))
}

/// Joint `(T, I)` eigenvalue multiplicities of a representation, computed
/// exactly as kernel dimensions over the candidate weights.
pub fn csa_spectrum(t: &Matrix, i: &Matrix, max2: i64) -> BTreeMap<Weight, u64> {
    let n = t.rows();
    let mut out = BTreeMap::new();
    for q2 in -max2..=max2 {
        for s2 in -max2..=max2 {
            let lt = t.sub(&Matrix::identity(n).scale(&Scalar::new(rat(0, 1), rat(q2, 2))));
            let li = i.sub(&Matrix::identity(n).scale(&Scalar::new(rat(0, 1), rat(s2, 2))));
            let stacked = Matrix::from_fn(2 * n, n, |r, c| if r < n { lt.get(r, c).clone() } else { li.get(r - n, c).clone() });
            let k = n - stacked.rank();
            if k > 0 {
                out.insert(Weight { q2, s2 }, k as u64);
            }
        }
    }
    out
}

/// The highest weights of the small-dimensional figure with their printed
/// dimensions.
pub const FIGURE_WEIGHTS: [(Weight, u64); 9] = [
    (Weight::int(0, 0), 1),
    (Weight::doubled(1, 1), 4),
    (Weight::int(1, 0), 5),
    (Weight::int(1, 1), 10),
    (Weight::doubled(3, 1), 16),
    (Weight::doubled(3, 3), 20),
    (Weight::int(2, 0), 14),
    (Weight::int(2, 1), 35),
    (Weight::int(2, 2), 35),
];

/// ASCII grid of a weight diagram, `q` across and `s` down.
pub fn ascii_grid(diagram: &BTreeMap<Weight, u64>) -> String {
    let r = diagram.keys().map(|w| w.q2.abs().max(w.s2.abs())).max().unwrap_or(0);
    let mut out = String::new();
    for s2 in (-r..=r).rev() {
        for q2 in -r..=r {
            let cell = match diagram.get(&Weight { q2, s2 }) {
                Some(m) => m.to_string(),
                None if (q2 + s2) % 2 == 0 && (q2 - r) % 2 == 0 => ".".into(),
                None => " ".into(),
            };
            out.push_str(&format!("{cell:>3}"));
        }
        out.push('\n');
    }
    out
}
