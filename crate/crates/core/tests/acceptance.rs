//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::BTreeMap;
use std::fs;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chromalie::algebra::is_endomorphism;
use chromalie::axioms::{
    check_admissible, check_alternating_sum, check_eps_jacobi, check_eps_skew, check_g_hom_associative,
    check_hom_eps_jacobi, check_s_symmetry, SubgroupTag,
};
use chromalie::cli;
use chromalie::constructions::{
    endo_twist_bracket, laurent_extend, laurent_substitution_map, sigma_twist, ExtendedElement, LaurentPoly,
    SampleConfig, SigmaMode,
};
use chromalie::corpus::{self, solve_diagonal_endomorphisms, CorpusId};
use chromalie::grading::{delta_from_sigma, validate_bicharacter, GroupElement, GroupSpec};
use chromalie::io;
use chromalie::scalar::Scalar;
use chromalie::{BiCharacter, Element, EvenMap, Flavor, GradedAlgebra, GradedBasis, Rational, SigmaForm, StructureConstants};

type Outcome = Result<String, String>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn e(terms: &[(usize, Rational)]) -> Element<Rational> {
    Element::from_terms(terms.iter().cloned())
}

fn build(id: CorpusId<Rational>) -> GradedAlgebra<Rational> {
    corpus::build(&id).expect("corpus builds")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn hom_jacobi(a: &GradedAlgebra<Rational>) -> bool {
    check_hom_eps_jacobi(a, &a.twist_or_identity()).passed()
}

fn klein() -> GroupSpec {
    GroupSpec::z2_power(2)
}

fn sign(bit: i64) -> Rational {
    if bit.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

fn c1_sl2_twist() -> Outcome {
    let a = build(CorpusId::Sl2Hom);
    ensure(a.product(0, 1) == e(&[(2, q(-1))]), "<a1,a2> != -a3")?;
    ensure(a.product(1, 2) == e(&[(0, q(-1))]), "<a2,a3> != -a1")?;
    ensure(a.product(2, 0) == e(&[(1, q(-1))]), "<a3,a1> != -a2")?;
    let r = check_hom_eps_jacobi(&a, a.twist().ok_or("no twist")?);
    ensure(r.passed() && r.tested == 27, format!("hom-eps-jacobi: {} violations over {}", r.entries.len(), r.tested))?;
    Ok("3 relations, 27 triples".into())
}

fn c2_endomorphisms() -> Outcome {
    let l = build(CorpusId::Sl2Color);
    let got = solve_diagonal_endomorphisms(&l, &[q(-1), q(1)]);
    // Direct enumeration of xy = z, yz = x, zx = y over {-1, 1}.
    let mut expected = Vec::new();
    for x in [-1i64, 1] {
        for y in [-1i64, 1] {
            for z in [-1i64, 1] {
                if x * y == z && y * z == x && z * x == y {
                    expected.push(EvenMap::diagonal(vec![q(x), q(y), q(z)]));
                }
            }
        }
    }
    ensure(got == expected, format!("{} solutions, expected {}", got.len(), expected.len()))?;
    ensure(!is_endomorphism(&l, &EvenMap::diagonal(vec![q(2), q(2), q(2)])).passed(), "diag(2,2,2) accepted")?;
    Ok(format!("{} solutions, diag(2,2,2) rejected", got.len()))
}

fn c3_heisenberg() -> Outcome {
    for (l1, l2) in [(q(1), q(1)), (q(2), q(3)), (q(-1), frac(1, 2))] {
        let h = build(CorpusId::HeisenbergHom(l1.clone(), l2.clone()));
        let prod = l1.clone() * l2.clone();
        let nonzero: Vec<_> = h.mult().iter().map(|((i, j), v)| ((i, j), v.clone())).collect();
        // the sole bracket, stored in both orders since eps(e1, e2) = -1 makes it symmetric
        let want = vec![((0, 1), e(&[(2, prod.clone())])), ((1, 0), e(&[(2, prod.clone())]))];
        ensure(nonzero == want, format!("({l1},{l2}): unexpected table"))?;
        let r = check_hom_eps_jacobi(&h, h.twist().ok_or("no twist")?);
        ensure(r.passed() && r.tested == 27, format!("({l1},{l2}): hom-eps-jacobi fails"))?;
    }
    Ok("3 parameter pairs".into())
}

fn c4_sigma_twist() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("sl2-hom.json");
    let sigma_path = dir.path().join("sigma.json");
    let out = dir.path().join("out.json");
    fs::write(&input, io::serialize_algebra(&build(CorpusId::Sl2Hom))).map_err(|e| e.to_string())?;
    let sigma = SigmaForm::bimultiplicative(klein(), vec![vec![q(1), q(-1)], vec![q(1), q(1)]]).map_err(|e| e.to_string())?;
    fs::write(&sigma_path, io::serialize_sigma(&sigma)).map_err(|e| e.to_string())?;
    let o = cli::run([
        "chromalie",
        "twist-sigma",
        input.to_str().unwrap(),
        "--sigma",
        sigma_path.to_str().unwrap(),
        "--mode",
        "multiplier",
        "-o",
        out.to_str().unwrap(),
    ]);
    ensure(o.code == 0, format!("exit {}: {}", o.code, o.stderr))?;
    let t = io::parse_algebra(&fs::read_to_string(&out).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(t.product(0, 1) == e(&[(2, q(1))]), "<a1,a2> != a3")?;
    ensure(t.product(1, 2) == e(&[(0, q(-1))]), "<a2,a3> != -a1")?;
    ensure(t.product(2, 0) == e(&[(1, q(-1))]), "<a3,a1> != -a2")?;

    // delta against (-1)^(a1 b2 - a2 b1) on every pair of Z2^2
    let delta = delta_from_sigma(&sigma);
    let elems = klein().elements().ok_or("finite group")?;
    for a in &elems {
        for b in &elems {
            let (x, y) = (a.coords(), b.coords());
            let want = sign(x[0] * y[1] - x[1] * y[0]);
            ensure(delta.eval(a, b).map_err(|e| e.to_string())? == want, format!("delta wrong at ({a},{b})"))?;
        }
    }
    let l = build(CorpusId::Sl2Hom);
    let ed = l.epsilon().product(&delta.to_bicharacter().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(validate_bicharacter(&klein(), ed.matrix()).map_err(|e| e.to_string())?.is_valid(), "eps*delta invalid")?;
    ensure(t.epsilon() == &ed, "output eps is not eps*delta")?;
    ensure(hom_jacobi(&t) && check_eps_skew(&t).passed(), "output fails Hom-Jacobi under eps*delta")?;
    Ok("3 relations, delta and eps*delta verified".into())
}

fn c5_negative_fixture() -> Outcome {
    let a = build(CorpusId::Sl2ColorPrintedEps);
    let r = check_eps_jacobi(&a);
    let first = r.first().ok_or("eps-jacobi unexpectedly passes")?;
    let line = first.render(a.basis());
    ensure(line == "eps-jacobi @ (a1,a1,a2) residual -2*a2", format!("first violation: {line}"))?;
    Ok(line)
}

/// A seeded random algebra on a1=(1,0), a2=(0,1), a3=(1,1) over Z2^2: a
/// random symmetric sign bicharacter, random even products (many zero) and
/// a random diagonal twist.
fn random_algebra(rng: &mut ChaCha8Rng) -> GradedAlgebra<Rational> {
    let g = klein();
    let (p, r, s) = (rng.gen_range(0..2u8), rng.gen_range(0..2u8), rng.gen_range(0..2u8));
    let eps = BiCharacter::from_sign_exponents(g.clone(), &[vec![p, r], vec![r, s]]).expect("valid");
    let basis = GradedBasis::from_pairs(&g, [("a1", vec![1, 0]), ("a2", vec![0, 1]), ("a3", vec![1, 1])]).expect("valid");
    let density = rng.gen_range(0.0..1.0);
    let mut mult = StructureConstants::new();
    for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)] {
        if rng.gen_bool(density) {
            mult.set(i, j, Element::term(3 - i - j, q(rng.gen_range(-3..=3))));
        }
    }
    let twist = EvenMap::diagonal((0..3).map(|_| q(rng.gen_range(-2..=2))).collect());
    GradedAlgebra::new(eps, basis, mult, Some(twist), Flavor::Raw).expect("even by construction")
}

fn random_algebras() -> Vec<GradedAlgebra<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    (0..64).map(|_| random_algebra(&mut rng)).collect()
}

fn corpus_algebras() -> Vec<GradedAlgebra<Rational>> {
    CorpusId::all().iter().map(|id| corpus::build(id).expect("corpus builds")).collect()
}

fn c6_admissibility() -> Outcome {
    let mut admissible = 0;
    let all: Vec<_> = corpus_algebras().into_iter().chain(random_algebras()).collect();
    for (n, a) in all.iter().enumerate() {
        let z = a.twist_or_identity();
        let p = [check_admissible(a, &z).passed(), check_alternating_sum(a, &z).passed(), check_s_symmetry(a, &z).passed()];
        ensure(p[0] == p[1] && p[1] == p[2], format!("instance {n}: predicates disagree {p:?}"))?;
        admissible += usize::from(p[0]);
    }
    ensure(admissible > 0 && admissible < all.len(), "agreement is vacuous (all pass or all fail)")?;
    Ok(format!("{} instances, {admissible} admissible", all.len()))
}

fn c7_subgroups() -> Outcome {
    let g = build(CorpusId::GroupHomAssoc);
    for tag in SubgroupTag::ALL {
        ensure(check_g_hom_associative(&g, g.twist().ok_or("no twist")?, tag).passed(), format!("group-hom-assoc fails {tag}"))?;
    }
    let mut premises = 0;
    for (n, a) in random_algebras().iter().enumerate() {
        let z = a.twist_or_identity();
        let g6 = check_g_hom_associative(a, &z, SubgroupTag::G6).passed();
        for tag in &SubgroupTag::ALL[..5] {
            if check_g_hom_associative(a, &z, *tag).passed() {
                premises += 1;
                ensure(g6, format!("random instance {n} passes {tag} but not G6"))?;
            }
        }
    }
    Ok(format!("G1..G6 on group-hom-assoc, {premises} implications on random instances"))
}

fn c8_twist_preservation() -> Outcome {
    let candidates = [q(-1), q(1), q(2), q(-2), frac(1, 2)];
    let mut twists = 0;
    for id in [CorpusId::Sl2Color, CorpusId::HeisenbergColor, CorpusId::WittZ2] {
        let l = build(id.clone());
        for zeta in solve_diagonal_endomorphisms(&l, &candidates) {
            let t = endo_twist_bracket(&l, &zeta).map_err(|e| format!("{id}: {e}"))?;
            ensure(check_eps_skew(&t).passed() && hom_jacobi(&t), format!("{id}: twist fails"))?;
            twists += 1;
        }
    }
    let l = build(CorpusId::Sl2Hom);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for n in 0..10 {
        let omega: BTreeMap<GroupElement, Rational> = klein()
            .elements()
            .ok_or("finite group")?
            .into_iter()
            .map(|g| {
                let mut v = 0;
                while v == 0 {
                    v = rng.gen_range(-9i64..=9);
                }
                (g, frac(v, rng.gen_range(1..=5)))
            })
            .collect();
        let sigma = SigmaForm::coboundary(klein(), omega, None).map_err(|e| e.to_string())?;
        let t = sigma_twist(&l, &sigma, SigmaMode::Symmetric).map_err(|e| format!("omega {n}: {e}"))?;
        ensure(t.epsilon() == l.epsilon(), "eps changed")?;
        ensure(hom_jacobi(&t), format!("omega {n}: Hom-Jacobi fails"))?;
    }
    Ok(format!("{twists} endomorphism twists, 10 symmetric sigma twists"))
}

fn c9_laurent() -> Outcome {
    let l = build(CorpusId::Sl2Hom);
    let ext = laurent_extend(&l);
    let cfg = SampleConfig::default();
    ensure(cfg.seed == 0x5EED && cfg.count == 64 && cfg.degree_bound == 4, "unexpected defaults")?;
    let samples = ext.sample_triples(&cfg);
    ensure(samples.len() == 64, "sample count")?;
    let skew = ext.check_eps_skew(&samples).map_err(|e| e.to_string())?;
    let jac = ext.check_hom_eps_jacobi(&samples).map_err(|e| e.to_string())?;
    ensure(skew.passed(), format!("{} skew failures", skew.failures.len()))?;
    ensure(jac.passed(), format!("{} Hom-Jacobi failures", jac.failures.len()))?;
    let shift = laurent_substitution_map(q(2));
    let img = shift.apply(&ExtendedElement::pure(0, LaurentPoly::monomial(q(1), 3))).map_err(|e| e.to_string())?;
    let want = LaurentPoly::from_terms([(3, q(1)), (2, q(6)), (1, q(12)), (0, q(8))]);
    ensure(img.poly(0) == want, "t^3 shifted by 2")?;
    Ok("64 samples, t^3 -> t^3+6t^2+12t+8".into())
}

fn verify_outputs(files: &[(String, std::path::PathBuf)], jobs: &str) -> Vec<(i32, String)> {
    let mut out = Vec::new();
    for (_, path) in files {
        let p = path.to_str().unwrap();
        for extra in [&[][..], &["--all"][..], &["--all", "--format", "json"][..], &["--skew-complete"][..]] {
            let mut args = vec!["chromalie", "verify", p, "--jobs", jobs];
            args.extend_from_slice(extra);
            let o = cli::run(args);
            out.push((o.code, o.stdout + &o.stderr));
        }
    }
    out
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for id in CorpusId::<Rational>::all() {
        let a = corpus::build(&id).map_err(|e| e.to_string())?;
        let text = io::serialize_algebra(&a);
        let back = io::parse_algebra(&text).map_err(|e| format!("{id}: {e}"))?;
        ensure(back == a, format!("{id}: parse o serialize changed the algebra"))?;
        ensure(io::serialize_algebra(&back) == text, format!("{id}: serialization not a fixed point"))?;
        let path = dir.path().join(format!("{}-{}.json", id.name(), files.len()));
        fs::write(&path, &text).map_err(|e| e.to_string())?;
        files.push((id.to_string(), path));
    }
    let runs = [verify_outputs(&files, "1"), verify_outputs(&files, "1"), verify_outputs(&files, "4"), verify_outputs(&files, "4")];
    for r in &runs[1..] {
        ensure(r == &runs[0], "verify output differs between runs or worker counts")?;
    }
    Ok(format!("{} corpus files, {} reports x 4 runs", files.len(), runs[0].len()))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("sl(2) twist reproduction", Duration::from_secs(1), c1_sl2_twist),
        ("endomorphism solution set", Duration::from_secs(1), c2_endomorphisms),
        ("Heisenberg family", Duration::from_secs(1), c3_heisenberg),
        ("sigma-twist reproduction", Duration::from_secs(1), c4_sigma_twist),
        ("negative fixture", Duration::from_secs(1), c5_negative_fixture),
        ("admissibility oracle equivalence", Duration::from_secs(30), c6_admissibility),
        ("subgroup hierarchy", Duration::from_secs(30), c7_subgroups),
        ("twist-preservation properties", Duration::from_secs(10), c8_twist_preservation),
        ("Laurent extension sampling", Duration::from_secs(5), c9_laurent),
        ("determinism and round-trip", Duration::from_secs(5), c10_determinism),
    ];
    let mut failed = 0;
    for (n, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match result {
            Ok(d) if took > *limit => Err(format!("{d}; took {took:?}, limit {limit:?}")),
            r => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {} ms)", n + 1, took.as_millis()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
