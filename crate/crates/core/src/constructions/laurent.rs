use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{EvenMap, GradedAlgebra};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::scalar::Scalar;

/// A Laurent polynomial `sum c_e t^e` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<i64, S>,
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn monomial(c: S, exp: i64) -> Self {
        Self::from_terms([(exp, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> S {
        self.terms.get(&exp).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn add_term(&mut self, exp: i64, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms().map(|(e, v)| (e, v.clone() * c.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            for (f, d) in other.terms() {
                out.add_term(e + f, c.clone() * d.clone());
            }
        }
        out
    }

    /// `f(t) -> f(lambda + t)`, defined only for polynomials (no negative
    /// exponents).
    pub fn shift_argument(&self, lambda: &S) -> Result<Self> {
        if let Some(e) = self.min_exponent().filter(|&e| e < 0) {
            return Err(Error::NegativeExponent(e));
        }
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            // (t + lambda)^e = sum_k C(e, k) lambda^(e-k) t^k
            let mut binom = S::one();
            for k in 0..=e {
                let v = c.clone() * binom.clone() * lambda.pow_signed(e - k);
                out.add_term(k, v);
                binom = binom * S::from_int(e - k) / S::from_int(k + 1);
            }
        }
        Ok(out)
    }
}

/// A finite sum `sum_i x_i (x) f_i(t)` in `L (x) F[t, 1/t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedElement<S> {
    terms: BTreeMap<usize, LaurentPoly<S>>,
}

impl<S: Scalar> Default for ExtendedElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> ExtendedElement<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `x_i (x) f`.
    pub fn pure(i: usize, f: LaurentPoly<S>) -> Self {
        let mut e = Self::zero();
        e.add_poly(i, f);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn poly(&self, i: usize) -> LaurentPoly<S> {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly<S>)> {
        self.terms.iter().map(|(&i, p)| (i, p))
    }

    pub fn add_poly(&mut self, i: usize, f: LaurentPoly<S>) {
        let sum = match self.terms.remove(&i) {
            Some(old) => old.add(&f),
            None => f,
        };
        if !sum.is_zero() {
            self.terms.insert(i, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, p) in other.terms() {
            out.add_poly(i, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (i, p) in self.terms() {
            out.add_poly(i, p.scale(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    /// Applies `f(t) -> g(f)(t)` to every polynomial factor.
    pub fn map_polys(&self, mut g: impl FnMut(&LaurentPoly<S>) -> Result<LaurentPoly<S>>) -> Result<Self> {
        let mut out = Self::zero();
        for (i, p) in self.terms() {
            out.add_poly(i, g(p)?);
        }
        Ok(out)
    }
}

/// The substitution `x (x) f(t) -> x (x) f(lambda + t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentShift<S> {
    pub lambda: S,
}

impl<S: Scalar> LaurentShift<S> {
    pub fn apply(&self, x: &ExtendedElement<S>) -> Result<ExtendedElement<S>> {
        x.map_polys(|p| p.shift_argument(&self.lambda))
    }
}

pub fn laurent_substitution_map<S: Scalar>(lambda: S) -> LaurentShift<S> {
    LaurentShift { lambda }
}

/// Parameters for sampled verification on the extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub count: usize,
    /// Exponents are drawn from `[-bound, bound]`, or `[0, bound]` when
    /// `nonnegative` is set.
    pub degree_bound: i64,
    pub seed: u64,
    pub nonnegative: bool,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { count: 64, degree_bound: 4, seed: 0x5EED, nonnegative: false }
    }
}

/// Outcome of a sampled identity check. Failures carry the sample index and
/// the nonzero residual.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleReport<S> {
    pub identity: String,
    pub tested: usize,
    pub failures: Vec<(usize, ExtendedElement<S>)>,
}

impl<S> SampleReport<S> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `L' = L (x) F[t, 1/t]` with `[x (x) f, y (x) g] = [x, y] (x) fg` and twist
/// `zeta (x) id`. Optionally the whole structure is further twisted by a
/// shift `zeta_lambda`: the bracket becomes `zeta_lambda o [.,.]` and the twist
/// becomes `zeta_lambda`.
#[derive(Clone, Debug)]
pub struct LaurentExtension<'a, S> {
    algebra: &'a GradedAlgebra<S>,
    zeta: EvenMap<S>,
    shift: Option<LaurentShift<S>>,
}

pub fn laurent_extend<S: Scalar>(l: &GradedAlgebra<S>) -> LaurentExtension<'_, S> {
    LaurentExtension { algebra: l, zeta: l.twist_or_identity(), shift: None }
}

impl<'a, S: Scalar> LaurentExtension<'a, S> {
    pub fn algebra(&self) -> &GradedAlgebra<S> {
        self.algebra
    }

    /// The Hom-Lie color deformation `(L', zeta_lambda o [.,.], zeta_lambda)`.
    pub fn shift_twisted(&self, lambda: S) -> Self {
        Self { algebra: self.algebra, zeta: self.zeta.clone(), shift: Some(laurent_substitution_map(lambda)) }
    }

    /// The untwisted extension bracket `[x, y]_L (x) f g`.
    pub fn base_bracket(&self, x: &ExtendedElement<S>, y: &ExtendedElement<S>) -> ExtendedElement<S> {
        let mut out = ExtendedElement::zero();
        for (i, f) in x.terms() {
            for (j, g) in y.terms() {
                let prod = self.algebra.product(i, j);
                if prod.is_zero() {
                    continue;
                }
                let fg = f.mul(g);
                for (k, c) in prod.terms() {
                    out.add_poly(k, fg.scale(c));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &ExtendedElement<S>, y: &ExtendedElement<S>) -> Result<ExtendedElement<S>> {
        let b = self.base_bracket(x, y);
        match &self.shift {
            Some(s) => s.apply(&b),
            None => Ok(b),
        }
    }

    pub fn twist(&self, x: &ExtendedElement<S>) -> Result<ExtendedElement<S>> {
        if let Some(s) = &self.shift {
            return s.apply(x);
        }
        let mut out = ExtendedElement::zero();
        for (i, f) in x.terms() {
            for (k, c) in self.zeta.column(i).terms() {
                out.add_poly(k, f.scale(c));
            }
        }
        Ok(out)
    }

    /// Degree of a homogeneous element; `None` for zero or mixed elements.
    pub fn degree(&self, x: &ExtendedElement<S>) -> Option<GroupElement> {
        let basis = self.algebra.basis();
        let mut degs = x.terms().map(|(i, _)| basis.degree(i));
        let first = degs.next()?;
        degs.all(|d| d == first).then(|| first.clone())
    }

    fn eps(&self, x: &ExtendedElement<S>, y: &ExtendedElement<S>) -> Result<S> {
        match (self.degree(x), self.degree(y)) {
            (Some(a), Some(b)) => Ok(self.algebra.epsilon().eval(&a, &b)),
            _ if x.is_zero() || y.is_zero() => Ok(S::one()),
            _ => Err(Error::NotHomogeneous),
        }
    }

    /// Draws one homogeneous element: a random degree present in `L`, and a
    /// random nonzero Laurent coefficient on each basis vector of that degree.
    pub fn sample_element(&self, rng: &mut impl Rng, cfg: &SampleConfig) -> ExtendedElement<S> {
        let basis = self.algebra.basis();
        let support = basis.degree_support();
        if support.is_empty() {
            return ExtendedElement::zero();
        }
        let deg = &support[rng.gen_range(0..support.len())];
        let lo = if cfg.nonnegative { 0 } else { -cfg.degree_bound };
        let mut out = ExtendedElement::zero();
        for i in basis.component(deg) {
            let nterms = rng.gen_range(1..=3);
            let mut p = LaurentPoly::zero();
            for _ in 0..nterms {
                let mut c = rng.gen_range(-3..=3i64);
                if c == 0 {
                    c = 1;
                }
                p = p.add(&LaurentPoly::monomial(S::from_int(c), rng.gen_range(lo..=cfg.degree_bound)));
            }
            if p.is_zero() {
                p = LaurentPoly::monomial(S::one(), 0);
            }
            out.add_poly(i, p);
        }
        out
    }

    /// `cfg.count` reproducible homogeneous triples.
    pub fn sample_triples(&self, cfg: &SampleConfig) -> Vec<[ExtendedElement<S>; 3]> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        (0..cfg.count)
            .map(|_| {
                [self.sample_element(&mut rng, cfg), self.sample_element(&mut rng, cfg), self.sample_element(&mut rng, cfg)]
            })
            .collect()
    }

    /// `[x, y] + eps(x, y) [y, x] = 0` on the first two entries of each sample.
    pub fn check_eps_skew(&self, samples: &[[ExtendedElement<S>; 3]]) -> Result<SampleReport<S>> {
        let mut failures = Vec::new();
        for (n, [x, y, _]) in samples.iter().enumerate() {
            let r = self.bracket(x, y)?.add(&self.bracket(y, x)?.scale(&self.eps(x, y)?));
            if !r.is_zero() {
                failures.push((n, r));
            }
        }
        Ok(SampleReport { identity: "eps-skew".into(), tested: samples.len(), failures })
    }

    /// Cyclic `eps(z,x)[t(x),[y,z]]` sum on each sample.
    pub fn check_hom_eps_jacobi(&self, samples: &[[ExtendedElement<S>; 3]]) -> Result<SampleReport<S>> {
        let mut failures = Vec::new();
        for (n, [x, y, z]) in samples.iter().enumerate() {
            let term = |a: &ExtendedElement<S>, b: &ExtendedElement<S>, c: &ExtendedElement<S>| -> Result<_> {
                Ok(self.bracket(&self.twist(a)?, &self.bracket(b, c)?)?.scale(&self.eps(c, a)?))
            };
            let r = term(x, y, z)?.add(&term(y, z, x)?).add(&term(z, x, y)?);
            if !r.is_zero() {
                failures.push((n, r));
            }
        }
        Ok(SampleReport { identity: "hom-eps-jacobi".into(), tested: samples.len(), failures })
    }

    /// `phi([x, y]) = [phi(x), phi(y)]` on the first two entries of each sample.
    pub fn check_endomorphism(
        &self,
        phi: impl Fn(&ExtendedElement<S>) -> Result<ExtendedElement<S>>,
        samples: &[[ExtendedElement<S>; 3]],
    ) -> Result<SampleReport<S>> {
        let mut failures = Vec::new();
        for (n, [x, y, _]) in samples.iter().enumerate() {
            let r = phi(&self.bracket(x, y)?)?.sub(&self.bracket(&phi(x)?, &phi(y)?)?);
            if !r.is_zero() {
                failures.push((n, r));
            }
        }
        Ok(SampleReport { identity: "endomorphism".into(), tested: samples.len(), failures })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, CorpusId};
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, q(c))))
    }

    /// Expands `(lambda + t)^e` by repeated multiplication, independent of the
    /// binomial formula.
    fn shifted_by_multiplication(f: &LaurentPoly<Rational>, lambda: i64) -> LaurentPoly<Rational> {
        let base = poly(&[(0, lambda), (1, 1)]);
        let mut out = LaurentPoly::zero();
        for (e, c) in f.terms() {
            let mut p = poly(&[(0, 1)]);
            for _ in 0..e {
                p = p.mul(&base);
            }
            out = out.add(&p.scale(c));
        }
        out
    }

    #[test]
    fn binomial_shift() {
        assert_eq!(poly(&[(2, 1)]).shift_argument(&q(1)).unwrap(), poly(&[(2, 1), (1, 2), (0, 1)]));
        assert_eq!(poly(&[(3, 1)]).shift_argument(&q(2)).unwrap(), poly(&[(3, 1), (2, 6), (1, 12), (0, 8)]));
        let f = poly(&[(0, 5), (2, -1), (4, 3)]);
        assert_eq!(f.shift_argument(&q(0)).unwrap(), f);
        for lambda in [-2, 1, 3] {
            assert_eq!(f.shift_argument(&q(lambda)).unwrap(), shifted_by_multiplication(&f, lambda));
        }
        assert_eq!(poly(&[(-1, 1)]).shift_argument(&q(1)), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn extended_sl2_bracket() {
        let l = corpus::build(&CorpusId::Sl2Hom).unwrap();
        let ext = laurent_extend(&l);
        let x = ExtendedElement::pure(0, poly(&[(2, 1)]));
        let y = ExtendedElement::pure(1, poly(&[(-1, 1)]));
        assert_eq!(ext.bracket(&x, &y).unwrap(), ExtendedElement::pure(2, poly(&[(1, -1)])));
        assert!(ext.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn extended_witt_bracket() {
        let w = corpus::build(&CorpusId::WittZ2).unwrap();
        let ext = laurent_extend(&w);
        let x = ExtendedElement::pure(1, poly(&[(1, 1)]));
        assert_eq!(ext.bracket(&x, &x).unwrap(), ExtendedElement::pure(0, poly(&[(2, 2)])));
    }

    #[test]
    fn sampling_is_reproducible_and_homogeneous() {
        let l = corpus::build::<Rational>(&CorpusId::Sl2Hom).unwrap();
        let ext = laurent_extend(&l);
        let cfg = SampleConfig::default();
        let a = ext.sample_triples(&cfg);
        assert_eq!(a, ext.sample_triples(&cfg));
        assert_eq!(a.len(), 64);
        for t in &a {
            for x in t {
                assert!(ext.degree(x).is_some());
                for (_, p) in x.terms() {
                    assert!(p.terms().all(|(e, _)| (-4..=4).contains(&e)));
                }
            }
        }
        let other = ext.sample_triples(&SampleConfig { seed: 1, ..cfg });
        assert_ne!(a, other);
    }

    #[test]
    fn shift_is_an_endomorphism_of_the_witt_extension() {
        let w = corpus::build(&CorpusId::WittZ2).unwrap();
        let ext = laurent_extend(&w);
        let cfg = SampleConfig { nonnegative: true, ..SampleConfig::default() };
        let samples = ext.sample_triples(&cfg);
        for lambda in [q(0), q(2), Rational::new((-3).into(), 2.into())] {
            let shift = laurent_substitution_map(lambda.clone());
            assert!(ext.check_endomorphism(|x| shift.apply(x), &samples).unwrap().passed());
            let deformed = ext.shift_twisted(lambda);
            assert!(deformed.check_eps_skew(&samples).unwrap().passed());
            assert!(deformed.check_hom_eps_jacobi(&samples).unwrap().passed());
        }
        // Negative exponents are outside the domain of the shift.
        let neg = ext.sample_triples(&SampleConfig::default());
        let shift = laurent_substitution_map(q(1));
        assert!(neg.iter().flatten().any(|x| shift.apply(x).is_err()));
    }

    #[test]
    fn jacobi_failure_survives_extension() {
        let l = corpus::sl2_raw_brackets::<Rational>(corpus::Sl2Epsilon::Printed).skew_complete().0;
        let ext = laurent_extend(&l);
        let samples = ext.sample_triples(&SampleConfig::default());
        assert!(!ext.check_hom_eps_jacobi(&samples).unwrap().passed());
        let sym = corpus::sl2_raw_brackets::<Rational>(corpus::Sl2Epsilon::Symmetric).skew_complete().0;
        let good = laurent_extend(&sym);
        assert!(good.check_hom_eps_jacobi(&samples).unwrap().passed());
    }
}
