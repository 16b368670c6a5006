use std::collections::BTreeMap;

use crate::algebra::{Element, GradedBasis};
use crate::error::{Error, Result};
use crate::report::{Violation, ViolationReport};
use crate::scalar::Scalar;

/// A linear map between graded spaces, stored by the images of the domain
/// basis vectors. Missing columns are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenMap<S> {
    domain_dim: usize,
    codomain_dim: usize,
    columns: BTreeMap<usize, Element<S>>,
}

impl<S: Scalar> EvenMap<S> {
    pub fn from_columns(
        domain_dim: usize,
        codomain_dim: usize,
        columns: impl IntoIterator<Item = (usize, Element<S>)>,
    ) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (i, img) in columns {
            if i >= domain_dim {
                return Err(Error::Malformed(format!("map column {i} outside a domain of dimension {domain_dim}")));
            }
            if img.max_index().is_some_and(|k| k >= codomain_dim) {
                return Err(Error::Malformed(format!("image of column {i} leaves the codomain")));
            }
            if !img.is_zero() {
                out.insert(i, img);
            }
        }
        Ok(Self { domain_dim, codomain_dim, columns: out })
    }

    pub fn identity(dim: usize) -> Self {
        Self { domain_dim: dim, codomain_dim: dim, columns: (0..dim).map(|i| (i, Element::basis(i))).collect() }
    }

    pub fn zero(domain_dim: usize, codomain_dim: usize) -> Self {
        Self { domain_dim, codomain_dim, columns: BTreeMap::new() }
    }

    /// `x_i -> diag[i] x_i`.
    pub fn diagonal(diag: Vec<S>) -> Self {
        let n = diag.len();
        Self::from_columns(n, n, diag.into_iter().enumerate().map(|(i, c)| (i, Element::term(i, c))))
            .expect("diagonal columns stay in range")
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn column(&self, i: usize) -> Element<S> {
        self.columns.get(&i).cloned().unwrap_or_default()
    }

    pub fn columns(&self) -> impl Iterator<Item = (usize, &Element<S>)> {
        self.columns.iter().map(|(&i, e)| (i, e))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.domain_dim == self.codomain_dim && *self == Self::identity(self.domain_dim)
    }

    pub fn apply(&self, x: &Element<S>) -> Element<S> {
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            if let Some(img) = self.columns.get(&i) {
                out.add_scaled(img, c);
            }
        }
        out
    }

    /// `self o inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.codomain_dim != self.domain_dim {
            return Err(Error::DimensionMismatch { expected: self.domain_dim, got: inner.codomain_dim });
        }
        Self::from_columns(
            inner.domain_dim,
            self.codomain_dim,
            inner.columns.iter().map(|(&i, img)| (i, self.apply(img))),
        )
    }
}

/// Free-function form of [`EvenMap::apply`].
pub fn apply_map<S: Scalar>(f: &EvenMap<S>, x: &Element<S>) -> Element<S> {
    f.apply(x)
}

/// Checks that every basis vector lands in the component of its own degree.
/// Each violation carries the part of the image outside that component.
pub fn is_even_map<S: Scalar>(f: &EvenMap<S>, domain: &GradedBasis, codomain: &GradedBasis) -> ViolationReport<S> {
    let entries = (0..f.domain_dim())
        .filter_map(|i| {
            let img = f.column(i);
            let off = img.clone() - img.component(codomain, domain.degree(i));
            (!off.is_zero()).then(|| Violation { identity: "even-map".into(), tuple: vec![i], residual: off })
        })
        .collect();
    ViolationReport::new("even-map", 1, f.domain_dim(), entries)
}
