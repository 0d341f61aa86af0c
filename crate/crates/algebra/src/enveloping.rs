//! Universal enveloping algebra in PBW normal form, ordered `T ≺ X ≺ … ≺ K`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use adskit_core::{rat, Matrix, Rational, Scalar};
use num_traits::{One, Zero};

use crate::basis::NAMES;
use crate::lie::algebra;

pub type Word = Vec<u8>;

/// Linear combination of ordered monomials with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnvElement {
    terms: BTreeMap<Word, Rational>,
}

fn bracket_coeffs(x: u8, y: u8) -> Vec<(u8, Rational)> {
    let alg = algebra();
    (0..10u8)
        .filter_map(|k| {
            let c = alg.t(k as usize, x as usize, y as usize);
            (!c.is_zero()).then(|| (k, c.re().clone()))
        })
        .collect()
}

fn is_ordered(w: &[u8]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

impl EnvElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(rat(1, 1), vec![])
    }

    /// A single word, not yet normalised.
    pub fn word(c: Rational, w: Word) -> Self {
        let mut e = Self::zero();
        e.push(w, c);
        e
    }

    pub fn generator(g: u8) -> Self {
        Self::word(rat(1, 1), vec![g])
    }

    /// Word from symbol names, e.g. `&["X", "T"]`.
    pub fn from_names(c: Rational, names: &[&str]) -> Self {
        let w = names
            .iter()
            .map(|n| NAMES.iter().position(|m| m == n).unwrap_or_else(|| panic!("unknown generator {n}")) as u8)
            .collect();
        Self::word(c, w)
    }

    fn push(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|w| is_ordered(w))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for (w, c) in &o.terms {
            e.push(w.clone(), c.clone());
        }
        e
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut e = Self::zero();
        for (w, c) in &self.terms {
            e.push(w.clone(), c * s);
        }
        e
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    /// Concatenation product, normalised.
    pub fn mul(&self, o: &Self) -> Self {
        let mut e = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                e.push(w, x * y);
            }
        }
        e.normal_form()
    }

    /// `self·o - o·self`, normalised.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Rewrites every out-of-order adjacent pair `xy → yx + [x,y]`, always
    /// at the leftmost such pair.
    pub fn normal_form(&self) -> Self {
        self.normal_form_with(&mut |_| 0)
    }

    /// As [`normal_form`](Self::normal_form), with `choose` picking which of
    /// the out-of-order positions to rewrite next.
    pub fn normal_form_with(&self, choose: &mut dyn FnMut(usize) -> usize) -> Self {
        let mut out = Self::zero();
        let mut pending: Vec<(Word, Rational)> = self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = pending.pop() {
            let bad: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]).collect();
            if bad.is_empty() {
                out.push(w, c);
                continue;
            }
            let p = bad[choose(bad.len()) % bad.len()];
            let (x, y) = (w[p], w[p + 1]);
            let mut swapped = w.clone();
            swapped.swap(p, p + 1);
            pending.push((swapped, c.clone()));
            for (k, s) in bracket_coeffs(x, y) {
                let mut v = Vec::with_capacity(w.len() - 1);
                v.extend_from_slice(&w[..p]);
                v.push(k);
                v.extend_from_slice(&w[p + 2..]);
                pending.push((v, &c * &s));
            }
        }
        out
    }

    /// Evaluates in a matrix representation given by the ten generator matrices.
    pub fn evaluate(&self, mats: &[Matrix]) -> Matrix {
        let n = mats[0].rows();
        let mut acc = Matrix::zeros(n, n);
        for (w, c) in &self.terms {
            let mut m = Matrix::identity(n);
            for &g in w {
                m = m.mul(&mats[g as usize]);
            }
            acc = acc.add(&m.scale(&Scalar::real(c.clone())));
        }
        acc
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: String = if w.is_empty() { "1".into() } else { w.iter().map(|&g| NAMES[g as usize]).collect() };
                format!("{}·{}", adskit_core::rational_to_string(c), word)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn square(g: usize, sign: i64) -> EnvElement {
    EnvElement::word(rat(sign, 1), vec![g as u8, g as u8])
}

/// `Q = -T² + X² + Y² + Z² + A² + B² + C² - I² - J² - K²`.
pub fn quadratic_casimir() -> EnvElement {
    let signs = [-1, 1, 1, 1, 1, 1, 1, -1, -1, -1];
    signs.iter().enumerate().fold(EnvElement::zero(), |e, (g, &s)| e.add(&square(g, s)))
}

/// Degree-two polynomials for `P_λ, P_t, P_x, P_y, P_z`, each `2/3` times a
/// sum of three products.
pub fn versor_polynomials() -> Vec<EnvElement> {
    let forms: [[(i64, &str, &str); 3]; 5] = [
        [(-1, "A", "I"), (-1, "B", "J"), (-1, "C", "K")],
        [(1, "X", "I"), (1, "Y", "J"), (1, "Z", "K")],
        [(1, "T", "I"), (-1, "B", "Z"), (1, "C", "Y")],
        [(1, "T", "J"), (-1, "C", "X"), (1, "A", "Z")],
        [(1, "T", "K"), (-1, "A", "Y"), (1, "B", "X")],
    ];
    forms
        .iter()
        .map(|f| {
            f.iter()
                .fold(EnvElement::zero(), |e, &(s, a, b)| e.add(&EnvElement::from_names(rat(2 * s, 3), &[a, b])))
                .normal_form()
        })
        .collect()
}

/// `R = P_λ² + P_t² - P_x² - P_y² - P_z²`.
pub fn quartic_casimir() -> EnvElement {
    let p = versor_polynomials();
    let signs = [1, 1, -1, -1, -1];
    p.iter().zip(signs).fold(EnvElement::zero(), |e, (x, s)| e.add(&x.mul(x).scale(&rat(s, 1))))
}

/// `Ok` when `e` commutes with all ten generators, else the first generator
/// and the nonzero commutator.
pub fn centrality_check(e: &EnvElement) -> Result<(), (usize, EnvElement)> {
    for g in 0..10 {
        let c = e.commutator(&EnvElement::generator(g as u8));
        if !c.is_zero() {
            return Err((g, c));
        }
    }
    Ok(())
}
