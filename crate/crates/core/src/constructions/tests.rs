use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::Element;
use crate::axioms::{check_eps_skew, check_hom_eps_jacobi, check_morphism};
use crate::corpus::{self, solve_diagonal_endomorphisms, CorpusId};
use crate::grading::{BiCharacter, GroupElement, GroupSpec};
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn e(terms: &[(usize, i64)]) -> Element<Rational> {
    Element::from_terms(terms.iter().map(|&(i, c)| (i, q(c))))
}

fn build(id: CorpusId<Rational>) -> GradedAlgebra<Rational> {
    corpus::build(&id).unwrap()
}

fn klein() -> GroupSpec {
    GroupSpec::z2_power(2)
}

fn g(c: [i64; 2]) -> GroupElement {
    klein().element(c.to_vec()).unwrap()
}

fn hom_lie_ok(a: &GradedAlgebra<Rational>) -> bool {
    check_eps_skew(a).passed() && check_hom_eps_jacobi(a, &a.twist_or_identity()).passed()
}

#[test]
fn commutator_of_group_algebra() {
    let f = corpus::group_algebra_z2::<Rational>();
    let c = commutator_algebra(&f);
    assert!(c.warnings.is_empty());
    assert!(c.algebra.mult().is_empty());
    assert_eq!(c.algebra.flavor(), Flavor::HomLieColor);

    let odd = f.with_epsilon(BiCharacter::from_sign_exponents(GroupSpec::z2_power(1), &[vec![1]]).unwrap()).unwrap();
    let c = commutator_algebra(&odd).algebra;
    assert_eq!(c.product(1, 1), e(&[(0, 2)]));
    assert!(check_eps_skew(&c).passed());

    let twisted = build(CorpusId::GroupHomAssoc);
    assert!(commutator_algebra(&twisted).algebra.mult().is_empty());
}

#[test]
fn commutator_warns_but_builds() {
    let l = build(CorpusId::Sl2Color);
    let c = commutator_algebra(&l);
    assert_eq!(c.warnings.len(), 1);
    assert!(c.warnings[0].starts_with("input is not Hom-associative: hom-associativity @"));
    assert!(check_eps_skew(&c.algebra).passed());
}

#[test]
fn endo_twist_mult_examples() {
    let f = corpus::group_algebra_z2::<Rational>();
    let zeta = EvenMap::diagonal(vec![q(1), q(-1)]);
    let t = endo_twist_mult(&f, &zeta).unwrap();
    assert_eq!(t.product(1, 1), e(&[(0, 1)]));
    assert_eq!(t.product(0, 1), e(&[(1, -1)]));
    assert_eq!(t.flavor(), Flavor::HomColor);
    assert!(crate::axioms::check_hom_associativity(&t, &zeta).passed());
    // zeta o mu_zeta = mu_zeta o zeta^2
    assert!(crate::algebra::is_endomorphism(&t, &zeta).passed());

    let same = endo_twist_mult(&f, &EvenMap::identity(2)).unwrap();
    assert_eq!(same.mult(), f.mult());

    let err = endo_twist_mult(&f, &EvenMap::diagonal(vec![q(1), q(2)])).unwrap_err();
    assert!(err.to_string().contains("(u1,u1)"), "{err}");
    assert!(endo_twist_mult(&build(CorpusId::Sl2Color), &EvenMap::identity(3)).is_err());
}

#[test]
fn endo_twist_bracket_examples() {
    let l = build(CorpusId::Sl2Color);
    let t = endo_twist_bracket(&l, &EvenMap::diagonal(vec![q(-1), q(-1), q(1)])).unwrap();
    assert_eq!(t.product(0, 1), e(&[(2, -1)]));
    assert_eq!(t.product(1, 2), e(&[(0, -1)]));
    assert_eq!(t.product(2, 0), e(&[(1, -1)]));
    assert_eq!(endo_twist_bracket(&l, &EvenMap::identity(3)).unwrap().mult(), l.mult());

    let h = build(CorpusId::HeisenbergHom(q(2), q(3)));
    assert_eq!(h.product(0, 1), e(&[(2, 6)]));
    assert_eq!(h.mult().len(), 2);
    assert!(h.mult().iter().all(|((i, j), _)| (i, j) == (0, 1) || (i, j) == (1, 0)));

    let err = endo_twist_bracket(&l, &EvenMap::diagonal(vec![q(2), q(1), q(1)])).unwrap_err();
    assert_eq!(err.to_string(), "precondition failed: map is not an algebra endomorphism at (a1,a2): residual a3");
    assert!(endo_twist_bracket(&build(CorpusId::Sl2ColorPrintedEps), &EvenMap::identity(3)).is_err());
}

#[test]
fn twisted_corpus_algebras_are_hom_lie() {
    let candidates = [q(-1), q(1), q(2), Rational::new(1.into(), 2.into())];
    for id in [CorpusId::Sl2Color, CorpusId::HeisenbergColor, CorpusId::WittZ2] {
        let l = build(id);
        let sols = solve_diagonal_endomorphisms(&l, &candidates);
        assert!(!sols.is_empty());
        for zeta in sols {
            assert!(hom_lie_ok(&endo_twist_bracket(&l, &zeta).unwrap()));
        }
    }
}

#[test]
fn twisting_is_functorial() {
    let l = build(CorpusId::Sl2Color);
    let zeta = EvenMap::diagonal(vec![q(-1), q(-1), q(1)]);
    let twisted = endo_twist_bracket(&l, &zeta).unwrap();
    for f in solve_diagonal_endomorphisms(&l, &[q(-1), q(1)]) {
        assert!(check_morphism(&l, &l, &f).unwrap().passed());
        assert_eq!(f.compose(&zeta).unwrap(), zeta.compose(&f).unwrap());
        assert!(check_morphism(&twisted, &twisted, &f).unwrap().passed());
    }
}

#[test]
fn sigma_twist_multiplier_example() {
    let l = build(CorpusId::Sl2Hom);
    let t = sigma_twist(&l, &corpus::upper_sign_sigma(), SigmaMode::Multiplier).unwrap();
    assert_eq!(t.product(0, 1), e(&[(2, 1)]));
    assert_eq!(t.product(1, 2), e(&[(0, -1)]));
    assert_eq!(t.product(2, 0), e(&[(1, -1)]));
    assert_eq!(t.twist(), l.twist());
    // eps' * delta with both (-1)^(a1 b2 + a2 b1) cancels to the trivial bicharacter
    assert_eq!(t.epsilon(), &BiCharacter::trivial(klein()));
    assert!(hom_lie_ok(&t));
    assert_eq!(t, build(CorpusId::Sl2SigmaTwist));
}

#[test]
fn sigma_twist_trivial_and_symmetric() {
    let l = build(CorpusId::Sl2Hom);
    for mode in [SigmaMode::Symmetric, SigmaMode::Multiplier] {
        assert_eq!(sigma_twist(&l, &SigmaForm::trivial(klein()), mode).unwrap(), l);
    }
    let omega = BTreeMap::from([(g([0, 0]), q(1)), (g([1, 0]), q(2)), (g([0, 1]), q(3)), (g([1, 1]), q(5))]);
    let sigma = SigmaForm::coboundary(klein(), omega, None).unwrap();
    let sl2 = build(CorpusId::Sl2Color);
    let t = sigma_twist(&sl2, &sigma, SigmaMode::Symmetric).unwrap();
    assert_eq!(t.product(0, 1), Element::term(2, Rational::new((-5).into(), 6.into())));
    assert_eq!(t.epsilon(), sl2.epsilon());
}

#[test]
fn sigma_twist_rejections() {
    let l = build(CorpusId::Sl2Hom);
    let err = sigma_twist(&l, &corpus::upper_sign_sigma(), SigmaMode::Symmetric).unwrap_err();
    assert_eq!(err.to_string(), "precondition failed: sigma is not a symmetric multiplier: Symmetry law fails at ((0,1),(1,0))");

    let mut table = BTreeMap::new();
    for a in klein().elements().unwrap() {
        for b in klein().elements().unwrap() {
            table.insert((a.clone(), b), q(1));
        }
    }
    table.insert((g([1, 0]), g([0, 1])), q(-1));
    let bad = SigmaForm::explicit(klein(), table.clone()).unwrap();
    let err = sigma_twist(&l, &bad, SigmaMode::Multiplier).unwrap_err();
    assert_eq!(err.to_string(), "precondition failed: sigma is not a multiplier: Cocycle law fails at ((0,1),(1,0),(0,1))");

    table.insert((g([1, 0]), g([0, 1])), q(1));
    table.remove(&(g([1, 1]), g([1, 1])));
    let partial = SigmaForm::explicit(klein(), table).unwrap();
    assert!(matches!(sigma_twist(&l, &partial, SigmaMode::Multiplier), Err(Error::SupportMiss { .. })));

    let other = SigmaForm::<Rational>::trivial(GroupSpec::z2_power(3));
    assert_eq!(sigma_twist(&l, &other, SigmaMode::Symmetric), Err(Error::SpecMismatch));
}

fn random_omega(rng: &mut ChaCha8Rng) -> SigmaForm<Rational> {
    let omega = klein()
        .elements()
        .unwrap()
        .into_iter()
        .map(|x| {
            let mut v = 0;
            while v == 0 {
                v = rng.gen_range(-5i64..=5);
            }
            (x, Rational::new(v.into(), rng.gen_range(1i64..=4).into()))
        })
        .collect();
    SigmaForm::coboundary(klein(), omega, None).unwrap()
}

#[test]
fn sigma_twists_preserve_hom_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let inputs = [build(CorpusId::Sl2Hom), build(CorpusId::Sl2ColorPrintedEps)];
    for _ in 0..10 {
        let sigma = random_omega(&mut rng);
        for l in &inputs {
            let t = sigma_twist(l, &sigma, SigmaMode::Symmetric).unwrap();
            assert_eq!(t.epsilon(), l.epsilon());
            let before = check_hom_eps_jacobi(l, &l.twist_or_identity()).passed();
            assert_eq!(check_hom_eps_jacobi(&t, &t.twist_or_identity()).passed(), before);
        }
    }
    for exps in [[[0u8, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 1], [0, 0]], [[1, 1], [0, 1]], [[0, 0], [1, 1]]] {
        let m = exps.map(|r| r.map(|x| if x == 1 { q(-1) } else { q(1) }).to_vec()).to_vec();
        let sigma = SigmaForm::bimultiplicative(klein(), m).unwrap();
        let t = sigma_twist(&build(CorpusId::Sl2Hom), &sigma, SigmaMode::Multiplier).unwrap();
        assert!(hom_lie_ok(&t));
    }
}

#[test]
fn morphisms_survive_sigma_twists() {
    let l = build(CorpusId::Sl2Hom);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sigmas = [corpus::upper_sign_sigma(), random_omega(&mut rng)];
    let modes = [SigmaMode::Multiplier, SigmaMode::Symmetric];
    for f in solve_diagonal_endomorphisms(&l, &[q(-1), q(1)]) {
        assert!(check_morphism(&l, &l, &f).unwrap().passed());
        for (sigma, mode) in sigmas.iter().zip(modes) {
            let t = sigma_twist(&l, sigma, mode).unwrap();
            assert!(check_morphism(&t, &t, &f).unwrap().passed());
        }
    }
}
