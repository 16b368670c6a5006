use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::algebra::GradedBasis;
use crate::grading::GroupElement;
use crate::scalar::Scalar;

/// A vector in a graded space, as a sparse map from basis index to
/// coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<S> {
    coeffs: BTreeMap<usize, S>,
}

/// Degree information of an element relative to a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(GroupElement),
    Mixed,
}

impl<S: Scalar> Default for Element<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Element<S> {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, S::one())
    }

    pub fn term(i: usize, c: S) -> Self {
        let mut e = Self::zero();
        e.add_term(i, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(&i).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, i: usize, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&i) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(i, sum);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (&i, v) in &other.coeffs {
            self.add_term(i, v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// The part of `self` supported on basis entries of degree `deg`.
    pub fn component(&self, basis: &GradedBasis, deg: &GroupElement) -> Self {
        Self::from_terms(self.terms().filter(|(i, _)| basis.degree(*i) == deg).map(|(i, c)| (i, c.clone())))
    }

    pub fn homogeneity(&self, basis: &GradedBasis) -> Homogeneity {
        let mut degs = self.coeffs.keys().map(|&i| basis.degree(i));
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) if degs.all(|e| e == d) => Homogeneity::Homogeneous(d.clone()),
            Some(_) => Homogeneity::Mixed,
        }
    }

    /// Renders as `a1 - 2*a3 + 1/2*a2` style text using basis names.
    pub fn render(&self, basis: &GradedBasis) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.terms().enumerate() {
            let (neg, mag) = if *c < S::zero() { (true, -c.clone()) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(basis.name(i));
        }
        out
    }
}

impl<S: Scalar> Add for Element<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (i, c) in rhs.coeffs {
            self.add_term(i, c);
        }
        self
    }
}

impl<S: Scalar> Sub for Element<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (i, c) in rhs.coeffs {
            self.add_term(i, -c);
        }
        self
    }
}

impl<S: Scalar> Neg for Element<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|(i, c)| (i, -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut e = Element::term(0, q(2));
        e.add_term(0, q(-2));
        assert!(e.is_zero());
        assert_eq!(Element::from_terms([(1, q(0))]), Element::zero());
        let x = Element::from_terms([(0, q(1)), (2, q(3))]);
        assert_eq!(x.clone() - x.clone(), Element::zero());
        assert_eq!(-x.clone() + x, Element::zero());
    }
}
