use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grading::{BiCharacter, GroupElement, GroupSpec};
use crate::scalar::Scalar;

/// A map `Gamma x Gamma -> F*` used to rescale brackets.
///
/// Bimultiplicative forms are total. Coboundary forms are total when `omega`
/// has a default; otherwise they are defined wherever the three `omega`
/// lookups succeed. Explicit tables are defined exactly on their keys.
#[derive(Clone, Debug, PartialEq)]
pub enum SigmaForm<S> {
    Bimultiplicative {
        spec: GroupSpec,
        matrix: Vec<Vec<S>>,
    },
    Coboundary {
        spec: GroupSpec,
        omega: BTreeMap<GroupElement, S>,
        default: Option<S>,
    },
    Explicit {
        spec: GroupSpec,
        table: BTreeMap<(GroupElement, GroupElement), S>,
    },
}

fn nonzero<'a, S: Scalar>(mut values: impl Iterator<Item = &'a S>) -> Result<()> {
    if values.any(|v| v.is_zero()) {
        Err(Error::Malformed("sigma values must be nonzero".into()))
    } else {
        Ok(())
    }
}

impl<S: Scalar> SigmaForm<S> {
    /// `sigma(a, b) = prod b[i][j]^(a_i b_j)`. The table must be compatible
    /// with the torsion orders so that the value does not depend on lifts.
    pub fn bimultiplicative(spec: GroupSpec, matrix: Vec<Vec<S>>) -> Result<Self> {
        let n = spec.rank();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: matrix.len() });
        }
        nonzero(matrix.iter().flatten())?;
        for i in 0..n {
            for j in 0..n {
                for order in [spec.order_of(i), spec.order_of(j)].into_iter().flatten() {
                    if !matrix[i][j].pow_signed(order as i64).is_one() {
                        return Err(Error::Malformed(format!(
                            "sigma entry [{i}][{j}] is incompatible with torsion order {order}"
                        )));
                    }
                }
            }
        }
        Ok(Self::Bimultiplicative { spec, matrix })
    }

    pub fn trivial(spec: GroupSpec) -> Self {
        let n = spec.rank();
        Self::Bimultiplicative { spec, matrix: vec![vec![S::one(); n]; n] }
    }

    /// `tau(a, b) = omega(a + b) / (omega(a) omega(b))`.
    pub fn coboundary(spec: GroupSpec, omega: BTreeMap<GroupElement, S>, default: Option<S>) -> Result<Self> {
        nonzero(omega.values().chain(default.iter()))?;
        for g in omega.keys() {
            if !spec.is_canonical(g) {
                return Err(Error::Malformed(format!("omega key {g} is not canonical")));
            }
        }
        Ok(Self::Coboundary { spec, omega, default })
    }

    pub fn explicit(spec: GroupSpec, table: BTreeMap<(GroupElement, GroupElement), S>) -> Result<Self> {
        nonzero(table.values())?;
        for (a, b) in table.keys() {
            if !spec.is_canonical(a) || !spec.is_canonical(b) {
                return Err(Error::Malformed(format!("sigma key ({a}, {b}) is not canonical")));
            }
        }
        Ok(Self::Explicit { spec, table })
    }

    /// Tabulates any form on `support x support` as an explicit table.
    pub fn tabulate(&self, support: &[GroupElement]) -> Result<Self> {
        let mut table = BTreeMap::new();
        for a in support {
            for b in support {
                table.insert((a.clone(), b.clone()), self.eval(a, b)?);
            }
        }
        Self::explicit(self.spec().clone(), table)
    }

    pub fn spec(&self) -> &GroupSpec {
        match self {
            Self::Bimultiplicative { spec, .. } | Self::Coboundary { spec, .. } | Self::Explicit { spec, .. } => spec,
        }
    }

    pub fn eval(&self, alpha: &GroupElement, beta: &GroupElement) -> Result<S> {
        let spec = self.spec();
        let miss = || Error::SupportMiss { alpha: alpha.clone(), beta: beta.clone() };
        match self {
            Self::Bimultiplicative { matrix, .. } => {
                let (a, b) = (alpha.coords(), beta.coords());
                if a.len() != spec.rank() || b.len() != spec.rank() {
                    return Err(Error::DimensionMismatch { expected: spec.rank(), got: a.len().max(b.len()) });
                }
                let mut acc = S::one();
                for (i, &ai) in a.iter().enumerate() {
                    for (j, &bj) in b.iter().enumerate() {
                        if ai != 0 && bj != 0 {
                            acc = acc * matrix[i][j].pow_signed(ai * bj);
                        }
                    }
                }
                Ok(acc)
            }
            Self::Coboundary { omega, default, .. } => {
                let w = |g: &GroupElement| omega.get(g).or(default.as_ref()).cloned();
                let sum = spec.add(alpha, beta)?;
                let (ws, wa, wb) = (w(&sum).ok_or_else(miss)?, w(alpha).ok_or_else(miss)?, w(beta).ok_or_else(miss)?);
                Ok(ws / (wa * wb))
            }
            Self::Explicit { table, .. } => table
                .get(&(alpha.clone(), beta.clone()))
                .cloned()
                .ok_or_else(miss),
        }
    }
}

/// Free-function form of [`SigmaForm::eval`].
pub fn sigma_eval<S: Scalar>(sigma: &SigmaForm<S>, alpha: &GroupElement, beta: &GroupElement) -> Result<S> {
    sigma.eval(alpha, beta)
}

/// Which multiplier identity a counterexample violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierLaw {
    /// `s(a, b+c) s(b, c) = s(a, b) s(a+b, c)`.
    Cocycle,
    /// `s(a, b) = s(b, a)`.
    Symmetry,
    /// `s(a, b) s(c, a+b)` is invariant under cyclic permutation of `(a, b, c)`.
    Cyclic,
}

/// Result of a law check over a finite support: `None` means the law holds.
#[derive(Clone, Debug, PartialEq)]
pub struct LawCheck {
    pub counterexample: Option<(MultiplierLaw, Vec<GroupElement>)>,
}

impl LawCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    fn fail(law: MultiplierLaw, elems: &[&GroupElement]) -> Self {
        Self { counterexample: Some((law, elems.iter().map(|&g| g.clone()).collect())) }
    }
}

fn sorted_support(support: &[GroupElement]) -> Vec<GroupElement> {
    let mut s = support.to_vec();
    s.sort();
    s.dedup();
    s
}

/// Checks the multiplier (2-cocycle) law on all triples of `support`,
/// returning the lexicographically first failing triple.
pub fn validate_multiplier<S: Scalar>(sigma: &SigmaForm<S>, support: &[GroupElement]) -> Result<LawCheck> {
    let spec = sigma.spec();
    let support = sorted_support(support);
    for a in &support {
        for b in &support {
            for c in &support {
                let lhs = sigma.eval(a, &spec.add(b, c)?)? * sigma.eval(b, c)?;
                let rhs = sigma.eval(a, b)? * sigma.eval(&spec.add(a, b)?, c)?;
                if lhs != rhs {
                    return Ok(LawCheck::fail(MultiplierLaw::Cocycle, &[a, b, c]));
                }
            }
        }
    }
    Ok(LawCheck { counterexample: None })
}

/// Checks symmetry on pairs, then cyclic invariance on triples.
pub fn validate_symmetric_multiplier<S: Scalar>(
    sigma: &SigmaForm<S>,
    support: &[GroupElement],
) -> Result<LawCheck> {
    let spec = sigma.spec();
    let support = sorted_support(support);
    for (k, a) in support.iter().enumerate() {
        for b in &support[k + 1..] {
            if sigma.eval(a, b)? != sigma.eval(b, a)? {
                return Ok(LawCheck::fail(MultiplierLaw::Symmetry, &[a, b]));
            }
        }
    }
    let term = |x: &GroupElement, y: &GroupElement, z: &GroupElement| -> Result<S> {
        Ok(sigma.eval(x, y)? * sigma.eval(z, &spec.add(x, y)?)?)
    };
    for a in &support {
        for b in &support {
            for c in &support {
                let t = term(a, b, c)?;
                if t != term(b, c, a)? || t != term(c, a, b)? {
                    return Ok(LawCheck::fail(MultiplierLaw::Cyclic, &[a, b, c]));
                }
            }
        }
    }
    Ok(LawCheck { counterexample: None })
}

/// The bi-character `delta(a, b) = sigma(a, b) / sigma(b, a)` associated
/// with a multiplier.
#[derive(Clone, Debug, PartialEq)]
pub struct Delta<S> {
    sigma: SigmaForm<S>,
}

impl<S: Scalar> Delta<S> {
    pub fn eval(&self, alpha: &GroupElement, beta: &GroupElement) -> Result<S> {
        Ok(self.sigma.eval(alpha, beta)? / self.sigma.eval(beta, alpha)?)
    }

    /// Materializes delta on generator pairs. For a bimultiplicative sigma
    /// this is `b[i][j] / b[j][i]`; otherwise sigma must be defined on every
    /// generator pair.
    pub fn to_bicharacter(&self) -> Result<BiCharacter<S>> {
        let spec = self.sigma.spec().clone();
        let n = spec.rank();
        let matrix = match &self.sigma {
            SigmaForm::Bimultiplicative { matrix, .. } => (0..n)
                .map(|i| (0..n).map(|j| matrix[i][j].clone() / matrix[j][i].clone()).collect())
                .collect(),
            _ => {
                let mut m = Vec::with_capacity(n);
                for i in 0..n {
                    let mut row = Vec::with_capacity(n);
                    for j in 0..n {
                        row.push(self.eval(&spec.generator(i), &spec.generator(j))?);
                    }
                    m.push(row);
                }
                m
            }
        };
        BiCharacter::new(spec, matrix)
    }
}

/// Builds the evaluator for the bi-character associated with `sigma`.
pub fn delta_from_sigma<S: Scalar>(sigma: &SigmaForm<S>) -> Delta<S> {
    Delta { sigma: sigma.clone() }
}
