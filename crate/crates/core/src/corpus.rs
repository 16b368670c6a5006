//! Builders for the worked examples and the fixtures used by the test suite.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{is_endomorphism, Element, EvenMap, Flavor, GradedAlgebra, GradedBasis, StructureConstants};
use crate::constructions::{endo_twist_bracket, endo_twist_mult, sigma_twist, SigmaMode};
use crate::error::{Error, Result};
use crate::grading::{BiCharacter, GroupSpec, SigmaForm};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum CorpusId<S> {
    /// Color sl(2) with eps = (-1)^(a1 b2 + a2 b1).
    Sl2Color,
    /// Color sl(2) with eps = (-1)^(a1 b1 + a2 b2); fails eps-Jacobi.
    Sl2ColorPrintedEps,
    /// Sl2Color twisted by zeta = diag(-1, -1, 1).
    Sl2Hom,
    HeisenbergColor,
    /// HeisenbergColor twisted by diag(l1, l2, l1 l2).
    HeisenbergHom(S, S),
    /// Witt type over Z2 with eps(1,1) = -1 and s = 1.
    WittZ2,
    /// The group algebra F[Z2] twisted by u1 -> -u1.
    GroupHomAssoc,
    /// Sl2Hom twisted by sigma = (-1)^(a1 b2) in multiplier mode.
    Sl2SigmaTwist,
}

impl<S> CorpusId<S> {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Sl2Color => "sl2-color",
            Self::Sl2ColorPrintedEps => "sl2-color-paper-eps",
            Self::Sl2Hom => "sl2-hom",
            Self::HeisenbergColor => "heisenberg-color",
            Self::HeisenbergHom(..) => "heisenberg-hom",
            Self::WittZ2 => "witt-z2",
            Self::GroupHomAssoc => "group-hom-assoc",
            Self::Sl2SigmaTwist => "sl2-sigma-twist",
        }
    }
}

impl<S: Scalar> CorpusId<S> {
    /// Every fixed id plus the Heisenberg family at `(1, 1)`, `(2, 3)` and `(-1, 1/2)`.
    pub fn all() -> Vec<Self> {
        let half = S::one() / S::from_int(2);
        vec![
            Self::Sl2Color,
            Self::Sl2ColorPrintedEps,
            Self::Sl2Hom,
            Self::HeisenbergColor,
            Self::HeisenbergHom(S::one(), S::one()),
            Self::HeisenbergHom(S::from_int(2), S::from_int(3)),
            Self::HeisenbergHom(-S::one(), half),
            Self::WittZ2,
            Self::GroupHomAssoc,
            Self::Sl2SigmaTwist,
        ]
    }

    /// Parses an id and its positional parameters.
    pub fn parse(id: &str, params: &[S]) -> Result<Self> {
        let no_params = |v: Self| {
            if params.is_empty() {
                Ok(v)
            } else {
                Err(Error::Malformed(format!("example `{id}` takes no parameters")))
            }
        };
        match id {
            "sl2-color" => no_params(Self::Sl2Color),
            "sl2-color-paper-eps" => no_params(Self::Sl2ColorPrintedEps),
            "sl2-hom" => no_params(Self::Sl2Hom),
            "heisenberg-color" => no_params(Self::HeisenbergColor),
            "heisenberg-hom" => match params {
                [l1, l2] => Ok(Self::HeisenbergHom(l1.clone(), l2.clone())),
                [] => Ok(Self::HeisenbergHom(S::one(), S::one())),
                _ => Err(Error::Malformed("heisenberg-hom takes two parameters".into())),
            },
            "witt-z2" => no_params(Self::WittZ2),
            "group-hom-assoc" => no_params(Self::GroupHomAssoc),
            "sl2-sigma-twist" => no_params(Self::Sl2SigmaTwist),
            other => Err(Error::UnknownExample(other.to_owned())),
        }
    }
}

impl<S: fmt::Display> fmt::Display for CorpusId<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HeisenbergHom(a, b) => write!(f, "heisenberg-hom({a},{b})"),
            Self::Sl2Color => f.write_str("sl2-color"),
            Self::Sl2ColorPrintedEps => f.write_str("sl2-color-paper-eps"),
            Self::Sl2Hom => f.write_str("sl2-hom"),
            Self::HeisenbergColor => f.write_str("heisenberg-color"),
            Self::WittZ2 => f.write_str("witt-z2"),
            Self::GroupHomAssoc => f.write_str("group-hom-assoc"),
            Self::Sl2SigmaTwist => f.write_str("sl2-sigma-twist"),
        }
    }
}

impl<S: Scalar> FromStr for CorpusId<S> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, &[])
    }
}

/// Which commutation factor the sl(2) fixture uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2Epsilon {
    /// `(-1)^(a1 b2 + a2 b1)`: every choice of constants satisfies eps-Jacobi.
    Symmetric,
    /// `(-1)^(a1 b1 + a2 b2)` as printed.
    Printed,
}

fn int<S: Scalar>(n: i64) -> S {
    S::from_int(n)
}

/// sl(2) over Z2^2 with only `<a1,a2> = -a3, <a2,a3> = a1, <a3,a1> = a2`
/// stored.
pub fn sl2_raw_brackets<S: Scalar>(which: Sl2Epsilon) -> GradedAlgebra<S> {
    let g = GroupSpec::z2_power(2);
    let exps: [[u8; 2]; 2] = match which {
        Sl2Epsilon::Symmetric => [[0, 1], [1, 0]],
        Sl2Epsilon::Printed => [[1, 0], [0, 1]],
    };
    let eps = BiCharacter::from_sign_exponents(g.clone(), &exps.map(|r| r.to_vec())).expect("valid sign table");
    let basis = GradedBasis::from_pairs(&g, [("a1", vec![1, 0]), ("a2", vec![0, 1]), ("a3", vec![1, 1])])
        .expect("valid basis");
    let mult = StructureConstants::new()
        .with(0, 1, Element::term(2, int(-1)))
        .with(1, 2, Element::basis(0))
        .with(2, 0, Element::basis(1));
    GradedAlgebra::new(eps, basis, mult, None, Flavor::LieColor).expect("even table")
}

fn heisenberg_color<S: Scalar>() -> GradedAlgebra<S> {
    let g = GroupSpec::z2_power(3);
    let diag: Vec<Vec<u8>> = (0..3).map(|i| (0..3).map(|j| u8::from(i == j)).collect()).collect();
    let eps = BiCharacter::from_sign_exponents(g.clone(), &diag).expect("valid sign table");
    let basis = GradedBasis::from_pairs(&g, [("e1", vec![1, 1, 0]), ("e2", vec![1, 0, 1]), ("e3", vec![0, 1, 1])])
        .expect("valid basis");
    let mult = StructureConstants::new().with(0, 1, Element::basis(2));
    let raw = GradedAlgebra::new(eps, basis, mult, None, Flavor::LieColor).expect("even table");
    raw.skew_complete().0
}

fn witt_z2<S: Scalar>() -> GradedAlgebra<S> {
    let g = GroupSpec::z2_power(1);
    let eps = BiCharacter::new(g.clone(), vec![vec![int(-1)]]).expect("valid");
    let basis = GradedBasis::from_pairs(&g, [("e0", vec![0]), ("e1", vec![1])]).expect("valid basis");
    // [e_a, e_b] = (s(b) - eps(a, b) s(a)) e_{a+b} with s = 1
    let mut mult = StructureConstants::new();
    for a in 0..2usize {
        for b in 0..2usize {
            let (da, db) = (basis.degree(a), basis.degree(b));
            let c = S::one() - eps.eval(da, db);
            let target = basis.index_of(if (a + b) % 2 == 0 { "e0" } else { "e1" }).expect("present");
            mult.set(a, b, Element::term(target, c));
        }
    }
    GradedAlgebra::new(eps, basis, mult, None, Flavor::LieColor).expect("even table")
}

/// The group algebra `F[Z2]`, `u_i u_j = u_{i+j}`, with trivial eps.
pub fn group_algebra_z2<S: Scalar>() -> GradedAlgebra<S> {
    let g = GroupSpec::z2_power(1);
    let basis = GradedBasis::from_pairs(&g, [("u0", vec![0]), ("u1", vec![1])]).expect("valid basis");
    let mut mult = StructureConstants::new();
    for i in 0..2 {
        for j in 0..2 {
            mult.set(i, j, Element::basis((i + j) % 2));
        }
    }
    GradedAlgebra::new(BiCharacter::trivial(g), basis, mult, None, Flavor::Raw).expect("even table")
}

/// `sigma = (-1)^(a1 b2)` on Z2^2.
pub fn upper_sign_sigma<S: Scalar>() -> SigmaForm<S> {
    SigmaForm::bimultiplicative(GroupSpec::z2_power(2), vec![vec![S::one(), -S::one()], vec![S::one(), S::one()]])
        .expect("valid sigma")
}

pub fn build<S: Scalar>(id: &CorpusId<S>) -> Result<GradedAlgebra<S>> {
    Ok(match id {
        CorpusId::Sl2Color => sl2_raw_brackets(Sl2Epsilon::Symmetric).skew_complete().0,
        CorpusId::Sl2ColorPrintedEps => sl2_raw_brackets(Sl2Epsilon::Printed).skew_complete().0,
        CorpusId::Sl2Hom => {
            let zeta = EvenMap::diagonal(vec![-S::one(), -S::one(), S::one()]);
            endo_twist_bracket(&build(&CorpusId::Sl2Color)?, &zeta)?
        }
        CorpusId::HeisenbergColor => heisenberg_color(),
        CorpusId::HeisenbergHom(l1, l2) => {
            if l1.is_zero() || l2.is_zero() {
                return Err(Error::Precondition("heisenberg-hom parameters must be nonzero".into()));
            }
            let zeta = EvenMap::diagonal(vec![l1.clone(), l2.clone(), l1.clone() * l2.clone()]);
            endo_twist_bracket(&heisenberg_color(), &zeta)?
        }
        CorpusId::WittZ2 => witt_z2(),
        CorpusId::GroupHomAssoc => {
            let zeta = EvenMap::diagonal(vec![S::one(), -S::one()]);
            endo_twist_mult(&group_algebra_z2(), &zeta)?
        }
        CorpusId::Sl2SigmaTwist => sigma_twist(&build(&CorpusId::Sl2Hom)?, &upper_sign_sigma(), SigmaMode::Multiplier)?,
    })
}

/// All diagonal maps with entries from `candidates` that are algebra
/// endomorphisms of `l`, in lexicographic order of candidate positions. The
/// zero map is included when 0 is a candidate.
pub fn solve_diagonal_endomorphisms<S: Scalar>(l: &GradedAlgebra<S>, candidates: &[S]) -> Vec<EvenMap<S>> {
    let n = l.dim();
    let mut out = Vec::new();
    if candidates.is_empty() && n > 0 {
        return out;
    }
    let mut idx = vec![0usize; n];
    loop {
        let zeta = EvenMap::diagonal(idx.iter().map(|&k| candidates[k].clone()).collect());
        if is_endomorphism(l, &zeta).passed() {
            out.push(zeta);
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < candidates.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
