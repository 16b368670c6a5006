//! Exhaustive verification of the graded identities over basis tuples.
//!
//! Every check evaluates the identity on basis vectors only; bilinearity
//! (trilinearity) extends the result to all homogeneous elements. Checks
//! read whatever table is present and never apply skew completion.

mod permutation;

pub use permutation::{permutation_parity, Perm, SubgroupTag};
pub use crate::report::{Violation, ViolationReport};

use crate::algebra::{is_even_map, Element, EvenMap, GradedAlgebra};
use crate::constructions::commutator_algebra;
use crate::error::{Error, Result};
use crate::report::scan_report;
use crate::scalar::Scalar;

/// Runs checks with a fixed degree of parallelism. Reports do not depend on
/// the worker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verifier {
    workers: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Self { workers: 1 }
    }
}

/// Precomputed data shared by the triple checks.
struct Ctx<'a, S> {
    a: &'a GradedAlgebra<S>,
    eps: Vec<Vec<S>>,
    zeta: Vec<Element<S>>,
}

impl<'a, S: Scalar> Ctx<'a, S> {
    fn new(a: &'a GradedAlgebra<S>, zeta: &EvenMap<S>) -> Self {
        Self { a, eps: a.eps_table(), zeta: (0..a.dim()).map(|i| zeta.column(i)).collect() }
    }

    fn mu(&self, x: &Element<S>, y: &Element<S>) -> Element<S> {
        self.a.mult_eval(x, y)
    }

    fn basis_mu(&self, i: usize, j: usize) -> Element<S> {
        self.a.product(i, j)
    }

    /// `mu(zeta x_i, mu(x_j, x_k)) - mu(mu(x_i, x_j), zeta x_k)`.
    fn assoc(&self, i: usize, j: usize, k: usize) -> Element<S> {
        self.mu(&self.zeta[i], &self.basis_mu(j, k)) - self.mu(&self.basis_mu(i, j), &self.zeta[k])
    }

    /// Bilinear color commutator `mu(u, v) - eps(u, v) mu(v, u)`.
    fn commutator(&self, u: &Element<S>, v: &Element<S>) -> Element<S> {
        let mut out = Element::zero();
        for (p, up) in u.terms() {
            for (r, vr) in v.terms() {
                let c = up.clone() * vr.clone();
                out.add_scaled(&self.basis_mu(p, r), &c);
                out.add_scaled(&self.basis_mu(r, p), &-(c * self.eps[p][r].clone()));
            }
        }
        out
    }

    fn s_value(&self, i: usize, j: usize, k: usize) -> Element<S> {
        let e = &self.eps;
        self.assoc(i, j, k).scale(&e[k][i]) + self.assoc(j, k, i).scale(&e[i][j]) + self.assoc(k, i, j).scale(&e[j][k])
    }

    fn s_commutator_form(&self, i: usize, j: usize, k: usize) -> Element<S> {
        let e = &self.eps;
        self.commutator(&self.zeta[i], &self.basis_mu(j, k)).scale(&e[k][i])
            + self.commutator(&self.zeta[j], &self.basis_mu(k, i)).scale(&e[i][j])
            + self.commutator(&self.zeta[k], &self.basis_mu(i, j)).scale(&e[j][k])
    }

    /// `sum_{pi in G} sgn(pi) |pi(x)| a(pi(x))`.
    fn g_sum(&self, g: SubgroupTag, t: [usize; 3]) -> Element<S> {
        let mut out = Element::zero();
        for &pi in g.elements() {
            let [p, q, r] = pi.apply(&t);
            let mut coeff = S::from_int(pi.sign());
            let mut cur = t;
            for &gen in pi.word().iter().rev() {
                let s = gen as usize - 1;
                coeff = coeff * self.eps[cur[s]][cur[s + 1]].clone();
                cur.swap(s, s + 1);
            }
            out.add_scaled(&self.assoc(p, q, r), &coeff);
        }
        out
    }

    /// Cyclic sum `eps(z,x)[t(x),[y,z]] + eps(x,y)[t(y),[z,x]] + eps(y,z)[t(z),[x,y]]`
    /// where `t` is the twist (identity for the plain Jacobi identity).
    fn jacobi(&self, i: usize, j: usize, k: usize, twisted: bool) -> Element<S> {
        let e = &self.eps;
        let outer = |x: usize| if twisted { self.zeta[x].clone() } else { Element::basis(x) };
        self.mu(&outer(i), &self.basis_mu(j, k)).scale(&e[k][i])
            + self.mu(&outer(j), &self.basis_mu(k, i)).scale(&e[i][j])
            + self.mu(&outer(k), &self.basis_mu(i, j)).scale(&e[j][k])
    }
}

impl Verifier {
    pub fn new(workers: usize) -> Self {
        Self { workers: workers.max(1) }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// `[x,y] + eps(x,y)[y,x] = 0` on all ordered basis pairs.
    pub fn eps_skew<S: Scalar>(&self, a: &GradedAlgebra<S>) -> ViolationReport<S> {
        let eps = a.eps_table();
        scan_report("eps-skew", a.dim(), 2, self.workers, |t| {
            let (i, j) = (t[0], t[1]);
            a.product(i, j) + a.product(j, i).scale(&eps[i][j])
        })
    }

    pub fn eps_jacobi<S: Scalar>(&self, a: &GradedAlgebra<S>) -> ViolationReport<S> {
        let ctx = Ctx::new(a, &EvenMap::identity(a.dim()));
        scan_report("eps-jacobi", a.dim(), 3, self.workers, |t| ctx.jacobi(t[0], t[1], t[2], false))
    }

    pub fn hom_eps_jacobi<S: Scalar>(&self, a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
        let ctx = Ctx::new(a, zeta);
        scan_report("hom-eps-jacobi", a.dim(), 3, self.workers, |t| ctx.jacobi(t[0], t[1], t[2], true))
    }

    pub fn hom_associativity<S: Scalar>(&self, a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
        let ctx = Ctx::new(a, zeta);
        scan_report("hom-associativity", a.dim(), 3, self.workers, |t| ctx.assoc(t[0], t[1], t[2]))
    }

    /// Vanishing of `a(x, y, x)` for homogeneous `x`. For components of
    /// dimension above one this is checked in polarized form:
    /// `a(x_i, y, x_k) + a(x_k, y, x_i)` at `(i, j, k)` with `i < k` of equal degree.
    pub fn flexible<S: Scalar>(&self, a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
        let ctx = Ctx::new(a, zeta);
        let basis = a.basis();
        scan_report("flexible", a.dim(), 3, self.workers, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            if i == k {
                ctx.assoc(i, j, i)
            } else if i < k && basis.degree(i) == basis.degree(k) {
                ctx.assoc(i, j, k) + ctx.assoc(k, j, i)
            } else {
                Element::zero()
            }
        })
    }

    /// `S(x,y,z) = eps(x,y) eps(y,z) eps(z,x) S(x,z,y)`.
    pub fn s_symmetry<S: Scalar>(&self, a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
        let ctx = Ctx::new(a, zeta);
        let e = &ctx.eps;
        scan_report("s-symmetry", a.dim(), 3, self.workers, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let f = e[i][j].clone() * e[j][k].clone() * e[k][i].clone();
            ctx.s_value(i, j, k) - ctx.s_value(i, k, j).scale(&f)
        })
    }

    pub fn g_hom_associative<S: Scalar>(
        &self,
        a: &GradedAlgebra<S>,
        zeta: &EvenMap<S>,
        g: SubgroupTag,
    ) -> ViolationReport<S> {
        let ctx = Ctx::new(a, zeta);
        let name = format!("g{}-hom-associativity", g.index());
        scan_report(&name, a.dim(), 3, self.workers, |t| ctx.g_sum(g, [t[0], t[1], t[2]]))
    }

    /// Hom-eps-Jacobi identity of the color commutator of `mu`.
    pub fn admissible<S: Scalar>(&self, a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
        let comm = commutator_algebra(a).algebra;
        let mut r = self.hom_eps_jacobi(&comm, zeta);
        r.identity = "admissible".into();
        for v in &mut r.entries {
            v.identity = "admissible".into();
        }
        r
    }

    /// The vanishing of the full alternating sum over `S_3`.
    pub fn alternating_sum<S: Scalar>(&self, a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
        let ctx = Ctx::new(a, zeta);
        scan_report("alternating-sum", a.dim(), 3, self.workers, |t| ctx.g_sum(SubgroupTag::G6, [t[0], t[1], t[2]]))
    }
}

pub fn check_eps_skew<S: Scalar>(a: &GradedAlgebra<S>) -> ViolationReport<S> {
    Verifier::default().eps_skew(a)
}

pub fn check_eps_jacobi<S: Scalar>(a: &GradedAlgebra<S>) -> ViolationReport<S> {
    Verifier::default().eps_jacobi(a)
}

pub fn check_hom_eps_jacobi<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    Verifier::default().hom_eps_jacobi(a, zeta)
}

pub fn check_hom_associativity<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    Verifier::default().hom_associativity(a, zeta)
}

pub fn check_flexible<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    Verifier::default().flexible(a, zeta)
}

pub fn check_s_symmetry<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    Verifier::default().s_symmetry(a, zeta)
}

pub fn check_g_hom_associative<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>, g: SubgroupTag) -> ViolationReport<S> {
    Verifier::default().g_hom_associative(a, zeta, g)
}

pub fn check_admissible<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    Verifier::default().admissible(a, zeta)
}

pub fn check_alternating_sum<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>) -> ViolationReport<S> {
    Verifier::default().alternating_sum(a, zeta)
}

/// Extends a function of basis triples trilinearly to arbitrary elements.
fn trilinear<S: Scalar>(
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
    f: impl Fn(usize, usize, usize) -> Element<S>,
) -> Element<S> {
    let mut out = Element::zero();
    for (i, xi) in x.terms() {
        for (j, yj) in y.terms() {
            for (k, zk) in z.terms() {
                out.add_scaled(&f(i, j, k), &(xi.clone() * yj.clone() * zk.clone()));
            }
        }
    }
    out
}

/// The zeta-associator `mu(zeta x, mu(y, z)) - mu(mu(x, y), zeta z)`.
pub fn associator<S: Scalar>(
    a: &GradedAlgebra<S>,
    zeta: &EvenMap<S>,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> Element<S> {
    a.mult_eval(&zeta.apply(x), &a.mult_eval(y, z)) - a.mult_eval(&a.mult_eval(x, y), &zeta.apply(z))
}

/// `S(x,y,z) = eps(z,x) a(x,y,z) + eps(x,y) a(y,z,x) + eps(y,z) a(z,x,y)`,
/// extended trilinearly from basis triples.
pub fn cyclic_s<S: Scalar>(
    a: &GradedAlgebra<S>,
    zeta: &EvenMap<S>,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> Element<S> {
    let ctx = Ctx::new(a, zeta);
    trilinear(x, y, z, |i, j, k| ctx.s_value(i, j, k))
}

/// The same quantity written with color commutators:
/// `eps(z,x)[zeta x, mu(y,z)] + eps(x,y)[zeta y, mu(z,x)] + eps(y,z)[zeta z, mu(x,y)]`.
pub fn cyclic_s_commutator_form<S: Scalar>(
    a: &GradedAlgebra<S>,
    zeta: &EvenMap<S>,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> Element<S> {
    let ctx = Ctx::new(a, zeta);
    trilinear(x, y, z, |i, j, k| ctx.s_commutator_form(i, j, k))
}

/// `sum_{pi in G} sgn(pi) |pi(x)| a(pi(x))` for basis indices.
pub fn g_associator_sum<S: Scalar>(a: &GradedAlgebra<S>, zeta: &EvenMap<S>, g: SubgroupTag, t: [usize; 3]) -> Element<S> {
    Ctx::new(a, zeta).g_sum(g, t)
}

/// Checks that `f: A -> B` is even, intertwines the twists
/// (`f o zeta_A = zeta_B o f`, missing twists read as identities) and
/// preserves products on all basis pairs.
pub fn check_morphism<S: Scalar>(a: &GradedAlgebra<S>, b: &GradedAlgebra<S>, f: &EvenMap<S>) -> Result<ViolationReport<S>> {
    if f.domain_dim() != a.dim() || f.codomain_dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: f.domain_dim() });
    }
    if a.spec() != b.spec() {
        return Err(Error::SpecMismatch);
    }
    let mut even = is_even_map(f, a.basis(), b.basis());
    for v in &mut even.entries {
        v.identity = "morphism-even".into();
    }
    let (za, zb) = (a.twist_or_identity(), b.twist_or_identity());
    let twist = scan_report("morphism-twist", a.dim(), 1, 1, |t| {
        let x = Element::basis(t[0]);
        f.apply(&za.apply(&x)) - zb.apply(&f.apply(&x))
    });
    let images: Vec<_> = (0..a.dim()).map(|i| f.column(i)).collect();
    let product = scan_report("morphism-product", a.dim(), 2, 1, |t| {
        f.apply(&a.product(t[0], t[1])) - b.mult_eval(&images[t[0]], &images[t[1]])
    });
    Ok(ViolationReport::merge("morphism", [even, twist, product]))
}
