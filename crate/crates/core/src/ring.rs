//! Minimal commutative-ring interface shared by [`Scalar`] and [`Field`] so
//! tensors can hold either.

use std::fmt::Debug;

use crate::field::Field;
use crate::scalar::Scalar;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn conj(&self) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn add_assign(&mut self, o: &Self) {
        *self = Ring::add(self, o);
    }

    /// `self += a * s`, the inner step of every contraction.
    fn add_scaled(&mut self, a: &Self, s: &Scalar) {
        if !s.is_zero() && !a.is_zero() {
            self.add_assign(&a.scale(s));
        }
    }

    fn from_scalar(s: &Scalar) -> Self {
        Self::one().scale(s)
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
    fn conj(&self) -> Self {
        Scalar::conj(self)
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
}

impl Ring for Field {
    fn zero() -> Self {
        Field::zero()
    }
    fn one() -> Self {
        Field::one()
    }
    fn is_zero(&self) -> bool {
        Field::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Scalar) -> Self {
        Field::scale(self, s)
    }
    fn conj(&self) -> Self {
        Field::conj(self)
    }
    fn add_assign(&mut self, o: &Self) {
        Field::add_in_place(self, o, &Scalar::one());
    }
    fn add_scaled(&mut self, a: &Self, s: &Scalar) {
        Field::add_in_place(self, a, s);
    }
}
