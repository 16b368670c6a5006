//! Algebra-producing constructions: the color commutator, the two
//! endomorphism twists, sigma-twists and the Laurent extension.

mod laurent;

pub use laurent::{
    laurent_extend, laurent_substitution_map, ExtendedElement, LaurentExtension, LaurentPoly, LaurentShift,
    SampleConfig, SampleReport,
};

use std::fmt::Write as _;

use crate::algebra::{is_endomorphism, is_even_map, EvenMap, Flavor, GradedAlgebra, StructureConstants};
use crate::axioms::{check_eps_jacobi, check_eps_skew, check_hom_associativity};
use crate::error::{Error, Result};
use crate::grading::{delta_from_sigma, validate_multiplier, validate_symmetric_multiplier, LawCheck, SigmaForm};
use crate::report::ViolationReport;
use crate::scalar::Scalar;

/// A constructed algebra plus any precondition that did not hold.
#[derive(Clone, Debug, PartialEq)]
pub struct Built<S> {
    pub algebra: GradedAlgebra<S>,
    pub warnings: Vec<String>,
}

fn describe_first<S: Scalar>(r: &ViolationReport<S>, a: &GradedAlgebra<S>) -> String {
    r.first().map(|v| v.render(a.basis())).unwrap_or_default()
}

/// `[x, y] = mu(x, y) - eps(x, y) mu(y, x)` on all basis pairs, with the same
/// basis, eps and twist. A failed Hom-associativity precondition is reported
/// as a warning; the algebra is produced either way.
pub fn commutator_algebra<S: Scalar>(a: &GradedAlgebra<S>) -> Built<S> {
    let mut mult = StructureConstants::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.product(i, j) - a.product(j, i).scale(&a.eps(i, j));
            mult.set(i, j, v);
        }
    }
    let mut warnings = Vec::new();
    let assoc = check_hom_associativity(a, &a.twist_or_identity());
    if !assoc.passed() {
        warnings.push(format!("input is not Hom-associative: {}", describe_first(&assoc, a)));
    }
    let algebra = a.with_mult(mult).expect("same basis").with_flavor(Flavor::HomLieColor);
    Built { algebra, warnings }
}

fn require_even<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> Result<()> {
    if zeta.domain_dim() != a.dim() || zeta.codomain_dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: zeta.domain_dim() });
    }
    let even = is_even_map(zeta, a.basis(), a.basis());
    match even.first() {
        Some(v) => Err(Error::Precondition(format!("map is not even at {}", a.basis().name(v.tuple[0])))),
        None => Ok(()),
    }
}

fn require_endomorphism<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> Result<()> {
    let r = is_endomorphism(a, zeta);
    match r.first() {
        Some(v) => Err(Error::Precondition(format!(
            "map is not an algebra endomorphism at ({},{}): residual {}",
            a.basis().name(v.tuple[0]),
            a.basis().name(v.tuple[1]),
            v.residual.render(a.basis())
        ))),
        None => Ok(()),
    }
}

/// `(A, zeta o mu, zeta)` for an associative `A` and an even endomorphism
/// `zeta`; the result is a Hom-color algebra.
pub fn endo_twist_mult<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> Result<GradedAlgebra<S>> {
    let assoc = check_hom_associativity(a, &EvenMap::identity(a.dim()));
    if !assoc.passed() {
        return Err(Error::Precondition(format!("algebra is not associative: {}", describe_first(&assoc, a))));
    }
    require_even(a, zeta)?;
    require_endomorphism(a, zeta)?;
    let mult = a.mult().map_values(|_, v| zeta.apply(v));
    Ok(a.with_mult(mult)?.with_twist(Some(zeta.clone()))?.with_flavor(Flavor::HomColor))
}

/// `(L, zeta o [.,.], zeta)` for a Lie color algebra `L` and an even
/// endomorphism `zeta`; the result is a Hom-Lie color algebra.
pub fn endo_twist_bracket<S: Scalar>(l: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> Result<GradedAlgebra<S>> {
    let skew = check_eps_skew(l);
    if !skew.passed() {
        return Err(Error::Precondition(format!("bracket is not eps-skew: {}", describe_first(&skew, l))));
    }
    let jac = check_eps_jacobi(l);
    if !jac.passed() {
        return Err(Error::Precondition(format!("bracket fails eps-Jacobi: {}", describe_first(&jac, l))));
    }
    require_even(l, zeta)?;
    require_endomorphism(l, zeta)?;
    let mult = l.mult().map_values(|_, v| zeta.apply(v));
    Ok(l.with_mult(mult)?.with_twist(Some(zeta.clone()))?.with_flavor(Flavor::HomLieColor))
}

/// How a sigma-twist treats the commutation factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaMode {
    /// `sigma` must be a symmetric multiplier; eps is kept.
    Symmetric,
    /// `sigma` must be a multiplier; eps becomes `eps * delta`.
    Multiplier,
}

impl std::str::FromStr for SigmaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(Self::Symmetric),
            "multiplier" => Ok(Self::Multiplier),
            other => Err(Error::Malformed(format!("unknown sigma mode `{other}`"))),
        }
    }
}

fn law_error(what: &str, check: LawCheck) -> Result<()> {
    match check.counterexample {
        None => Ok(()),
        Some((law, elems)) => {
            let mut s = String::new();
            for (k, g) in elems.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{g}");
            }
            Err(Error::Precondition(format!("sigma is not a {what}: {law:?} law fails at ({s})")))
        }
    }
}

/// `[x, y]^sigma = sigma(deg x, deg y) [x, y]`, with sigma validated on the
/// degrees of the basis (and evaluated on their pairwise sums).
pub fn sigma_twist<S: Scalar>(l: &GradedAlgebra<S>, sigma: &SigmaForm<S>, mode: SigmaMode) -> Result<GradedAlgebra<S>> {
    if sigma.spec() != l.spec() {
        return Err(Error::SpecMismatch);
    }
    let support = l.basis().degree_support();
    let epsilon = match mode {
        SigmaMode::Symmetric => {
            law_error("symmetric multiplier", validate_symmetric_multiplier(sigma, &support)?)?;
            l.epsilon().clone()
        }
        SigmaMode::Multiplier => {
            law_error("multiplier", validate_multiplier(sigma, &support)?)?;
            l.epsilon().product(&delta_from_sigma(sigma).to_bicharacter()?)?
        }
    };
    let basis = l.basis();
    let mut mult = StructureConstants::new();
    for ((i, j), v) in l.mult().iter() {
        mult.set(i, j, v.scale(&sigma.eval(basis.degree(i), basis.degree(j))?));
    }
    l.with_mult(mult)?.with_epsilon(epsilon)
}

#[cfg(test)]
mod tests;
