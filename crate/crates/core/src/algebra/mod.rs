//! Graded algebras given by sparse structure constants.

mod basis;
mod element;
mod map;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use basis::{BasisEntry, GradedBasis};
pub(crate) use basis::is_identifier;
pub use element::{Element, Homogeneity};
pub use map::{apply_map, is_even_map, EvenMap};

use crate::error::{Error, Result};
use crate::grading::{BiCharacter, GroupSpec};
use crate::report::{scan_report, Violation, ViolationReport};
use crate::scalar::Scalar;

/// Sparse table of products of basis vectors. Absent pairs multiply to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<S> {
    products: BTreeMap<(usize, usize), Element<S>>,
}

impl<S: Scalar> Default for StructureConstants<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> StructureConstants<S> {
    pub fn new() -> Self {
        Self { products: BTreeMap::new() }
    }

    /// Sets `x_i x_j`; a zero value removes the entry.
    pub fn set(&mut self, i: usize, j: usize, value: Element<S>) {
        if value.is_zero() {
            self.products.remove(&(i, j));
        } else {
            self.products.insert((i, j), value);
        }
    }

    pub fn with(mut self, i: usize, j: usize, value: Element<S>) -> Self {
        self.set(i, j, value);
        self
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Element<S>> {
        self.products.get(&(i, j))
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.products.contains_key(&(i, j))
    }

    /// Stored products in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Element<S>)> {
        self.products.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.products.len()
    }

    pub fn is_empty(&self) -> bool {
        self.products.is_empty()
    }

    /// Applies `f` to every stored product.
    pub fn map_values(&self, mut f: impl FnMut((usize, usize), &Element<S>) -> Element<S>) -> Self {
        let mut out = Self::new();
        for (k, v) in self.iter() {
            out.set(k.0, k.1, f(k, v));
        }
        out
    }
}

/// Which definition an algebra claims to satisfy. Used to pick the default
/// verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    LieColor,
    HomLieColor,
    HomColor,
    Raw,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::LieColor => "lie-color",
            Self::HomLieColor => "hom-lie-color",
            Self::HomColor => "hom-color",
            Self::Raw => "raw",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lie-color" => Self::LieColor,
            "hom-lie-color" => Self::HomLieColor,
            "hom-color" => Self::HomColor,
            "raw" => Self::Raw,
            other => return Err(Error::Malformed(format!("unknown flavor `{other}`"))),
        })
    }
}

/// A finite-dimensional graded algebra `(A, mu, zeta, eps)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra<S> {
    epsilon: BiCharacter<S>,
    basis: GradedBasis,
    mult: StructureConstants<S>,
    twist: Option<EvenMap<S>>,
    flavor: Flavor,
}

/// What [`GradedAlgebra::skew_complete`] changed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkewCompletion {
    /// Pairs `(j, i)` filled from a stored `(i, j)`.
    pub filled: Vec<(usize, usize)>,
    /// Indices `i` whose absent square `x_i x_i` defaulted to zero although the
    /// component of degree `2 deg(x_i)` is nonzero, so the grading alone does
    /// not force it.
    pub unforced_diagonals: Vec<usize>,
}

impl<S: Scalar> GradedAlgebra<S> {
    /// Builds an algebra, rejecting uneven products and uneven twists.
    pub fn new(
        epsilon: BiCharacter<S>,
        basis: GradedBasis,
        mult: StructureConstants<S>,
        twist: Option<EvenMap<S>>,
        flavor: Flavor,
    ) -> Result<Self> {
        let a = Self::new_unchecked(epsilon, basis, mult, twist, flavor)?;
        if let Some(v) = check_evenness(&a).first() {
            return Err(Error::Malformed(format!("product is not even: {}", v.render(&a.basis))));
        }
        if let Some(z) = &a.twist {
            if let Some(v) = is_even_map(z, &a.basis, &a.basis).first() {
                return Err(Error::Malformed(format!("twist is not even: {}", v.render(&a.basis))));
            }
        }
        Ok(a)
    }

    /// Builds an algebra checking only indices and degrees, so that uneven
    /// fixtures can be represented and reported on.
    pub fn new_unchecked(
        epsilon: BiCharacter<S>,
        basis: GradedBasis,
        mult: StructureConstants<S>,
        twist: Option<EvenMap<S>>,
        flavor: Flavor,
    ) -> Result<Self> {
        let n = basis.len();
        for e in &basis.entries().iter().map(|e| &e.degree).collect::<Vec<_>>() {
            if !epsilon.spec().is_canonical(e) {
                return Err(Error::Malformed(format!("degree {e} does not belong to the grading group")));
            }
        }
        for ((i, j), v) in mult.iter() {
            if i >= n || j >= n || v.max_index().is_some_and(|k| k >= n) {
                return Err(Error::Malformed(format!("product ({i},{j}) refers to a missing basis vector")));
            }
        }
        if let Some(z) = &twist {
            if z.domain_dim() != n || z.codomain_dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: z.domain_dim() });
            }
        }
        Ok(Self { epsilon, basis, mult, twist, flavor })
    }

    pub fn spec(&self) -> &GroupSpec {
        self.epsilon.spec()
    }

    pub fn epsilon(&self) -> &BiCharacter<S> {
        &self.epsilon
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn mult(&self) -> &StructureConstants<S> {
        &self.mult
    }

    pub fn twist(&self) -> Option<&EvenMap<S>> {
        self.twist.as_ref()
    }

    /// The twisting map, or the identity when none is attached.
    pub fn twist_or_identity(&self) -> EvenMap<S> {
        self.twist.clone().unwrap_or_else(|| EvenMap::identity(self.dim()))
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `eps(deg x_i, deg x_j)`.
    pub fn eps(&self, i: usize, j: usize) -> S {
        self.epsilon.eval(self.basis.degree(i), self.basis.degree(j))
    }

    /// Dense table of `eps(deg x_i, deg x_j)`.
    pub fn eps_table(&self) -> Vec<Vec<S>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.eps(i, j)).collect()).collect()
    }

    pub fn product(&self, i: usize, j: usize) -> Element<S> {
        self.mult.get(i, j).cloned().unwrap_or_default()
    }

    /// Bilinear extension of the structure constants.
    pub fn mult_eval(&self, x: &Element<S>, y: &Element<S>) -> Element<S> {
        let mut out = Element::zero();
        for (i, xi) in x.terms() {
            for (j, yj) in y.terms() {
                if let Some(p) = self.mult.get(i, j) {
                    out.add_scaled(p, &(xi.clone() * yj.clone()));
                }
            }
        }
        out
    }

    pub fn with_mult(&self, mult: StructureConstants<S>) -> Result<Self> {
        Self::new_unchecked(self.epsilon.clone(), self.basis.clone(), mult, self.twist.clone(), self.flavor)
    }

    pub fn with_twist(&self, twist: Option<EvenMap<S>>) -> Result<Self> {
        Self::new_unchecked(self.epsilon.clone(), self.basis.clone(), self.mult.clone(), twist, self.flavor)
    }

    pub fn with_epsilon(&self, epsilon: BiCharacter<S>) -> Result<Self> {
        Self::new_unchecked(epsilon, self.basis.clone(), self.mult.clone(), self.twist.clone(), self.flavor)
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        Self { flavor, ..self.clone() }
    }

    /// Fills every absent `[x_j, x_i]` with `-eps(x_i, x_j) [x_i, x_j]` from a
    /// stored `[x_i, x_j]`. Squares that are absent stay zero.
    pub fn skew_complete(&self) -> (Self, SkewCompletion) {
        let mut mult = self.mult.clone();
        let mut note = SkewCompletion::default();
        for ((i, j), v) in self.mult.iter() {
            if i != j && !self.mult.contains(j, i) {
                mult.set(j, i, v.scale(&-self.eps(i, j)));
                note.filled.push((j, i));
            }
        }
        note.filled.sort();
        let spec = self.spec();
        for i in 0..self.dim() {
            if !self.mult.contains(i, i) {
                let d = self.basis.degree(i);
                let twice = spec.add(d, d).expect("basis degrees are canonical");
                if !self.basis.component(&twice).is_empty() {
                    note.unforced_diagonals.push(i);
                }
            }
        }
        let out = Self { mult, ..self.clone() };
        (out, note)
    }
}

/// Free-function form of [`GradedAlgebra::mult_eval`].
pub fn mult_eval<S: Scalar>(a: &GradedAlgebra<S>, x: &Element<S>, y: &Element<S>) -> Element<S> {
    a.mult_eval(x, y)
}

/// One violation per basis pair whose product leaves the component of degree
/// `deg x_i + deg x_j`; the residual is the offending part of the product.
pub fn check_evenness<S: Scalar>(a: &GradedAlgebra<S>) -> ViolationReport<S> {
    let spec = a.spec();
    let basis = a.basis();
    let n = a.dim();
    let entries = a
        .mult()
        .iter()
        .filter_map(|((i, j), v)| {
            let target = spec.add(basis.degree(i), basis.degree(j)).expect("canonical degrees");
            let off = v.clone() - v.component(basis, &target);
            (!off.is_zero()).then(|| Violation { identity: "evenness".into(), tuple: vec![i, j], residual: off })
        })
        .collect();
    ViolationReport::new("evenness", 2, n * n, entries)
}

/// Checks `zeta(x_i x_j) = zeta(x_i) zeta(x_j)` on all basis pairs; the residual
/// is the left side minus the right side.
pub fn is_endomorphism<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    let images: Vec<_> = (0..a.dim()).map(|i| zeta.column(i)).collect();
    scan_report("endomorphism", a.dim(), 2, 1, |t| {
        let (i, j) = (t[0], t[1]);
        zeta.apply(&a.product(i, j)) - a.mult_eval(&images[i], &images[j])
    })
}
