//! Sparse polynomials in the ten frame coordinates, each monomial optionally
//! carrying a plane-wave factor `exp(i p·x)` with rational momentum `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{parse_rational, rational_to_string, Rational, Scalar};

/// Coordinate names in frozen order; index `k` is the coordinate paired with
/// basis element `k` of the algebra.
pub const COORDS: [&str; 10] = ["t", "x", "y", "z", "a", "b", "c", "i", "j", "k"];

pub fn coord_index(name: &str) -> Option<usize> {
    COORDS.iter().position(|c| *c == name)
}

pub type Exponents = [u8; 10];

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Momentum(pub [Rational; 10]);

impl Momentum {
    pub fn zero() -> Self {
        Momentum(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn from_ints(p: [i64; 10]) -> Self {
        Momentum(p.map(|n| Rational::from_integer(n.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.is_zero())
    }

    pub fn add(&self, o: &Momentum) -> Momentum {
        Momentum(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }

    pub fn neg(&self) -> Momentum {
        Momentum(std::array::from_fn(|k| -self.0[k].clone()))
    }
}

impl Default for Momentum {
    fn default() -> Self {
        Momentum::zero()
    }
}

type Poly = BTreeMap<Exponents, Scalar>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Field {
    terms: BTreeMap<Momentum, Poly>,
}

impl Field {
    pub fn zero() -> Self {
        Field::default()
    }

    pub fn one() -> Self {
        Field::constant(Scalar::one())
    }

    pub fn constant(s: Scalar) -> Self {
        Field::monomial(s, [0; 10])
    }

    /// The coordinate function `x_k`.
    pub fn var(k: usize) -> Self {
        let mut e = [0; 10];
        e[k] = 1;
        Field::monomial(Scalar::one(), e)
    }

    pub fn monomial(coef: Scalar, exps: Exponents) -> Self {
        Field::term(Momentum::zero(), exps, coef)
    }

    pub fn term(phase: Momentum, exps: Exponents, coef: Scalar) -> Self {
        let mut f = Field::zero();
        if !coef.is_zero() {
            f.terms.entry(phase).or_default().insert(exps, coef);
        }
        f
    }

    /// `exp(i p·x)`.
    pub fn plane_wave(p: Momentum) -> Self {
        Field::term(p, [0; 10], Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the field is a phase-free constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (p, poly) = self.terms.iter().next()?;
                if !p.is_zero() || poly.len() != 1 {
                    return None;
                }
                poly.get(&[0; 10]).cloned()
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(|p| p.len()).sum()
    }

    pub fn degree(&self) -> u32 {
        self.iter()
            .map(|(_, e, _)| e.iter().map(|&d| d as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn phases(&self) -> impl Iterator<Item = &Momentum> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Momentum, &Exponents, &Scalar)> {
        self.terms
            .iter()
            .flat_map(|(p, poly)| poly.iter().map(move |(e, c)| (p, e, c)))
    }

    /// First term in canonical order, used as a witness for nonzero residuals.
    pub fn leading_term(&self) -> Option<Field> {
        self.iter()
            .next()
            .map(|(p, e, c)| Field::term(p.clone(), *e, c.clone()))
    }

    /// `self += other * s`
    pub fn add_in_place(&mut self, other: &Field, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (p, poly) in &other.terms {
            let dst = self.terms.entry(p.clone()).or_default();
            for (e, c) in poly {
                let add = if s.is_one() { c.clone() } else { c * s };
                match dst.get_mut(e) {
                    Some(v) => {
                        *v += &add;
                        if v.is_zero() {
                            dst.remove(e);
                        }
                    }
                    None => {
                        dst.insert(*e, add);
                    }
                }
            }
            if dst.is_empty() {
                self.terms.remove(p);
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Field {
        if s.is_zero() {
            return Field::zero();
        }
        if s.is_one() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, poly)| (p.clone(), poly.iter().map(|(e, c)| (*e, c * s)).collect()))
            .collect();
        Field { terms }
    }

    pub fn pow(&self, n: u32) -> Field {
        let mut out = Field::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact `∂/∂x_k`, including `∂_k exp(i p·x) = i p_k exp(i p·x)`.
    pub fn partial(&self, k: usize) -> Field {
        assert!(k < 10, "coordinate index {k} out of range");
        let mut out = Field::zero();
        for (p, poly) in &self.terms {
            let mut dst = Poly::new();
            let ipk = Scalar::new(Rational::zero(), p.0[k].clone());
            for (e, c) in poly {
                if !ipk.is_zero() {
                    accumulate(&mut dst, *e, c * &ipk);
                }
                if e[k] > 0 {
                    let mut e2 = *e;
                    e2[k] -= 1;
                    accumulate(&mut dst, e2, c * &Scalar::int(e[k] as i64));
                }
            }
            if !dst.is_empty() {
                out.terms.insert(p.clone(), dst);
            }
        }
        out
    }

    /// Complex conjugate: coefficients conjugated, phases negated.
    pub fn conj(&self) -> Field {
        let terms = self
            .terms
            .iter()
            .map(|(p, poly)| (p.neg(), poly.iter().map(|(e, c)| (*e, c.conj())).collect()))
            .collect();
        Field { terms }
    }

    pub fn re_part(&self) -> Field {
        (self + &self.conj()).scale(&Scalar::frac(1, 2))
    }

    pub fn im_part(&self) -> Field {
        (self - &self.conj()).scale(&Scalar::complex(0, 1, -1, 2))
    }

    /// True when the field equals its conjugate.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }
}

fn accumulate(dst: &mut Poly, e: Exponents, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match dst.get_mut(&e) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                dst.remove(&e);
            }
        }
        None => {
            dst.insert(e, c);
        }
    }
}

impl<'a> Add<&'a Field> for &'a Field {
    type Output = Field;
    fn add(self, o: &Field) -> Field {
        let mut out = self.clone();
        out.add_in_place(o, &Scalar::one());
        out
    }
}

impl<'a> Sub<&'a Field> for &'a Field {
    type Output = Field;
    fn sub(self, o: &Field) -> Field {
        let mut out = self.clone();
        out.add_in_place(o, &Scalar::int(-1));
        out
    }
}

impl Neg for &Field {
    type Output = Field;
    fn neg(self) -> Field {
        self.scale(&Scalar::int(-1))
    }
}

impl<'a> Mul<&'a Field> for &'a Field {
    type Output = Field;
    fn mul(self, o: &Field) -> Field {
        if self.is_zero() || o.is_zero() {
            return Field::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut out = Field::zero();
        for (p1, poly1) in &self.terms {
            for (p2, poly2) in &o.terms {
                let p = p1.add(p2);
                let dst = out.terms.entry(p.clone()).or_default();
                for (e1, c1) in poly1 {
                    for (e2, c2) in poly2 {
                        let e: Exponents = std::array::from_fn(|k| e1[k] + e2[k]);
                        accumulate(dst, e, c1 * c2);
                    }
                }
                if dst.is_empty() {
                    out.terms.remove(&p);
                }
            }
        }
        out
    }
}

macro_rules! owned_field_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Field> for Field {
            type Output = Field;
            fn $m(self, o: Field) -> Field { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Field> for Field {
            type Output = Field;
            fn $m(self, o: &Field) -> Field { (&self).$m(o) }
        }
    )*};
}
owned_field_ops!(Add add, Sub sub, Mul mul);

impl Neg for Field {
    type Output = Field;
    fn neg(self) -> Field {
        -&self
    }
}

impl From<Scalar> for Field {
    fn from(s: Scalar) -> Self {
        Field::constant(s)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, poly) in &self.terms {
            let mut parts = Vec::new();
            for (e, c) in poly {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .map(|(k, &d)| if d == 1 { COORDS[k].to_string() } else { format!("{}^{}", COORDS[k], d) })
                    .collect();
                let coef = if c.is_real() { c.to_string() } else { format!("({c})") };
                parts.push(if mono.is_empty() {
                    coef
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{}*{}", coef, mono.join("*"))
                });
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if p.is_zero() {
                write!(f, "{}", parts.join(" + "))?;
            } else {
                let arg: Vec<String> = p
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| !r.is_zero())
                    .map(|(k, r)| format!("{}*{}", r, COORDS[k]))
                    .collect();
                write!(f, "({})*exp(i({}))", parts.join(" + "), arg.join(" + "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase: Option<Vec<String>>,
    exp: Exponents,
    coef: Scalar,
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .iter()
            .map(|(p, e, c)| TermRepr {
                phase: (!p.is_zero()).then(|| p.0.iter().map(rational_to_string).collect()),
                exp: *e,
                coef: c.clone(),
            })
            .collect();
        terms.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let terms = Vec::<TermRepr>::deserialize(de)?;
        let mut out = Field::zero();
        for t in terms {
            let phase = match t.phase {
                None => Momentum::zero(),
                Some(v) => {
                    if v.len() != 10 {
                        return Err(D::Error::custom("phase must have 10 components"));
                    }
                    let mut p = Momentum::zero();
                    for (k, s) in v.iter().enumerate() {
                        p.0[k] = parse_rational(s).map_err(D::Error::custom)?;
                    }
                    p
                }
            };
            out.add_in_place(&Field::term(phase, t.exp, t.coef), &Scalar::one());
        }
        Ok(out)
    }
}
