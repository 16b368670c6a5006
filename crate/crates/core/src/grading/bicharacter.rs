use std::fmt;

use crate::error::{Error, Result};
use crate::grading::{GroupElement, GroupSpec};
use crate::scalar::Scalar;

/// A commutation factor on a [`GroupSpec`], stored as its values on pairs of
/// generators and extended bimultiplicatively.
#[derive(Clone, Debug, PartialEq)]
pub struct BiCharacter<S> {
    spec: GroupSpec,
    matrix: Vec<Vec<S>>,
}

/// One failed bi-character invariant on the generator table.
#[derive(Clone, Debug, PartialEq)]
pub enum BiCharacterViolation<S> {
    /// `b[i][j] * b[j][i] != 1`.
    Reciprocal { i: usize, j: usize, product: S },
    /// `b[i][i]` is not `+1` or `-1`.
    Diagonal { i: usize, value: S },
    /// `b[i][j]^order != 1` although one of the two generators has that order.
    Torsion { i: usize, j: usize, order: u64 },
}

impl<S: fmt::Display> fmt::Display for BiCharacterViolation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Reciprocal { i, j, product } => {
                write!(f, "reciprocal: b[{i}][{j}]*b[{j}][{i}] = {product}, expected 1")
            }
            Self::Diagonal { i, value } => write!(f, "diagonal: b[{i}][{i}] = {value}, expected +1 or -1"),
            Self::Torsion { i, j, order } => write!(f, "torsion: b[{i}][{j}]^{order} != 1"),
        }
    }
}

/// Outcome of [`validate_bicharacter`]; empty means valid.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport<S> {
    pub violations: Vec<BiCharacterViolation<S>>,
}

impl<S> ValidationReport<S> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a generator table against the bi-character invariants.
///
/// Zero entries are not in the multiplicative group and make the input
/// malformed rather than merely invalid.
pub fn validate_bicharacter<S: Scalar>(
    spec: &GroupSpec,
    matrix: &[Vec<S>],
) -> Result<ValidationReport<S>> {
    let n = spec.rank();
    if matrix.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: matrix.len() });
    }
    for row in matrix {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
        if row.iter().any(|v| v.is_zero()) {
            return Err(Error::Malformed("bi-character entries must be nonzero".into()));
        }
    }

    let mut violations = Vec::new();
    for i in 0..n {
        if !matrix[i][i].is_unit_sign() {
            violations.push(BiCharacterViolation::Diagonal { i, value: matrix[i][i].clone() });
        }
        for j in 0..n {
            if i < j {
                let product = matrix[i][j].clone() * matrix[j][i].clone();
                if !product.is_one() {
                    violations.push(BiCharacterViolation::Reciprocal { i, j, product });
                }
            }
            for order in [spec.order_of(j), spec.order_of(i)].into_iter().flatten() {
                if !matrix[i][j].pow_signed(order as i64).is_one() {
                    violations.push(BiCharacterViolation::Torsion { i, j, order });
                    break;
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

impl<S: Scalar> BiCharacter<S> {
    /// Validates and wraps a generator table.
    pub fn new(spec: GroupSpec, matrix: Vec<Vec<S>>) -> Result<Self> {
        let report = validate_bicharacter(&spec, &matrix)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::Malformed(format!("not a bi-character: {v}")));
        }
        Ok(Self { spec, matrix })
    }

    /// The trivial commutation factor, identically 1.
    pub fn trivial(spec: GroupSpec) -> Self {
        let n = spec.rank();
        Self { spec, matrix: vec![vec![S::one(); n]; n] }
    }

    /// `(-1)^{sum_i a_i b_i}`-style factors: `b[i][j] = (-1)^{exponents[i][j]}`.
    pub fn from_sign_exponents(spec: GroupSpec, exponents: &[Vec<u8>]) -> Result<Self> {
        let matrix = exponents
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| if e % 2 == 0 { S::one() } else { -S::one() })
                    .collect()
            })
            .collect();
        Self::new(spec, matrix)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.matrix
    }

    /// `prod_{i,j} b[i][j]^(a_i * b_j)`.
    pub fn eval(&self, alpha: &GroupElement, beta: &GroupElement) -> S {
        let (a, b) = (alpha.coords(), beta.coords());
        let n = self.spec.rank();
        assert!(a.len() == n && b.len() == n, "degree outside the grading group");
        let mut acc = S::one();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc = acc * self.matrix[i][j].pow_signed(ai * bj);
                }
            }
        }
        acc
    }

    /// Pointwise product `(eps*delta)(a, b) = eps(a, b) delta(a, b)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.clone() * y.clone()).collect())
            .collect();
        Self::new(self.spec.clone(), matrix)
    }
}

/// Free-function form of [`BiCharacter::eval`].
pub fn bicharacter_eval<S: Scalar>(eps: &BiCharacter<S>, alpha: &GroupElement, beta: &GroupElement) -> S {
    eps.eval(alpha, beta)
}

/// Free-function form of [`BiCharacter::product`].
pub fn product_bicharacter<S: Scalar>(eps: &BiCharacter<S>, delta: &BiCharacter<S>) -> Result<BiCharacter<S>> {
    eps.product(delta)
}
