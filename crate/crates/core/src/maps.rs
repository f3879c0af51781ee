//! The maps `u`, `U` into the free module and the matrix algebra, the
//! anti-isomorphism `φ` with the dual path algebra, and related checks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::GenWord;
use crate::error::{Error, Result};
use crate::graph::{DGraph, PreDGraph};
use crate::ideal::{to_row, Lattice};
use crate::laurent::{LaurentPoly, SpecializationMap};
use crate::pathalg::{random_path, Path, PathElem};
use crate::reps::{tau_word, FreeModuleElement};
use crate::rho::{self, braid_defect, rho_apply, rho_word, GeneratorSet};

/// Sparse matrix `Σ c_{x,y} e_{x,y}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatrixElem {
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl MatrixElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(x: usize, y: usize) -> Self {
        let mut m = Self::zero();
        m.add_entry(x, y, &LaurentPoly::one());
        m
    }

    pub fn add_entry(&mut self, x: usize, y: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry((x, y)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&(x, y));
        }
    }

    pub fn get(&self, x: usize, y: usize) -> LaurentPoly {
        self.entries.get(&(x, y)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &LaurentPoly)> + '_ {
        self.entries.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(x, y), c) in &other.entries {
            out.add_entry(x, y, c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&(x, y), a) in &self.entries {
            out.add_entry(x, y, &(a * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(x, y), a) in &self.entries {
            for (&(y2, z), b) in other.entries.range((y, 0)..(y + 1, 0)) {
                debug_assert_eq!(y, y2);
                out.add_entry(x, z, &(a * b));
            }
        }
        out
    }

    /// `π₂`: `e_{x,y} -> y`.
    pub fn row_sum_projection(&self) -> FreeModuleElement {
        let mut out = FreeModuleElement::zero();
        for (&(_, y), c) in &self.entries {
            out.add_term(y, c);
        }
        out
    }
}

/// Product of the edge weights along `p`; `1` for a vertex.
pub fn mu_of_path(g: &DGraph, p: &Path) -> LaurentPoly {
    p.edges().iter().fold(LaurentPoly::one(), |acc, &e| &acc * &g.mu[e])
}

/// `u(p) = μ(p) s(p)`.
pub fn u_map(g: &DGraph, w: &PathElem) -> FreeModuleElement {
    let mut out = FreeModuleElement::zero();
    for (p, c) in w.terms() {
        out.add_term(p.source(), &(c * &mu_of_path(g, p)));
    }
    out
}

/// `U(p) = μ(p) e_{t(p), s(p)}`.
pub fn big_u_map(g: &DGraph, w: &PathElem) -> MatrixElem {
    let mut out = MatrixElem::zero();
    for (p, c) in w.terms() {
        out.add_entry(p.target(), p.source(), &(c * &mu_of_path(g, p)));
    }
    out
}

/// Checks `U(ρ_word(q)) = Σ_p c_p μ(p) (e_{t(p)} ⊗ τ_word(s(p)))`.
pub fn check_u_equivariance(g: &DGraph, word: &GenWord, w: &PathElem) -> bool {
    let lhs = big_u_map(g, &rho_word(&g.base, word, w));
    let tau = tau_word(g, word);
    let mut rhs = MatrixElem::zero();
    for (p, c) in w.terms() {
        let scale = c * &mu_of_path(g, p);
        for (y, a) in tau.column(p.source()).terms() {
            rhs.add_entry(p.target(), y, &(a * &scale));
        }
    }
    lhs == rhs
}

/// `φ`: reverses every path. Vertices and edges of the dual share
/// positions with the original, so the same map is `φ^{-1}`.
pub fn phi(w: &PathElem) -> PathElem {
    w.map_paths(Path::reversed)
}

/// `<p, q^d> = p · φ^{-1}(q^d)`.
pub fn bilinear_form(p: &PathElem, qd: &PathElem) -> PathElem {
    p * &phi(qd)
}

/// `<ρ_word(p), q^d> = <p, ρ^d_{reversed word}(q^d)>`.
pub fn check_contragredience(g: &PreDGraph, dual: &PreDGraph, word: &GenWord, p: &PathElem, qd: &PathElem) -> bool {
    let lhs = bilinear_form(&rho_word(g, word, p), qd);
    let rhs = bilinear_form(p, &rho_word(dual, &word.reversed(), qd));
    lhs == rhs
}

/// Whether every vertex `y` is reached by a path `x <- ... <- y`; with
/// nonzero constant weights this is surjectivity of `Ũ_x`.
pub fn check_ux_surjective(g: &DGraph, x: usize) -> Result<bool> {
    if let Some(e) = g.mu.iter().position(|m| m.is_zero() || !m.is_constant()) {
        return Err(Error::Invalid(format!(
            "surjectivity test needs nonzero constant weights, edge {} has {}",
            g.quiver().edge(e).id,
            g.mu[e]
        )));
    }
    let q = g.quiver();
    let mut seen = vec![false; q.num_vertices()];
    let mut stack = vec![x];
    seen[x] = true;
    while let Some(y) = stack.pop() {
        for &e in q.edges_into(y) {
            let z = q.edge(e).source;
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    Ok(seen.into_iter().all(|b| b))
}

/// `U(x) = e_{x,x}` for all vertices, and `U(p) != 0` for the sampled
/// paths with nonzero weight.
pub fn check_nontrivial(g: &DGraph, samples: usize, seed: u64) -> bool {
    let q = g.quiver();
    let vertices_ok = (0..q.num_vertices()).all(|x| big_u_map(g, &PathElem::vertex(x)) == MatrixElem::unit(x, x));
    if q.num_vertices() == 0 {
        return vertices_ok;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vertices_ok
        && (0..samples).all(|_| {
            let p = random_path(q, &mut rng, 5);
            mu_of_path(g, &p).is_zero() || !big_u_map(g, &PathElem::from_path(p)).is_zero()
        })
}

/// A random word of length at most `max_len`.
pub fn random_word<R: Rng>(rank: usize, rng: &mut R, max_len: usize) -> GenWord {
    let len = rng.gen_range(0..=max_len);
    GenWord((0..len).map(|_| rng.gen_range(0..rank)).collect())
}

/// Outcome of a randomized identity sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub cases: usize,
    pub failures: Vec<(GenWord, PathElem)>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random `(word, path)` cases of the `U`-equivariance identity.
pub fn equivariance_sweep(g: &DGraph, cases: usize, max_word: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport { cases, failures: Vec::new() };
    if g.quiver().num_vertices() == 0 {
        return report;
    }
    for _ in 0..cases {
        let word = random_word(g.datum().coxeter.rank(), &mut rng, max_word);
        let q = PathElem::from_path(random_path(g.quiver(), &mut rng, 4));
        if !check_u_equivariance(g, &word, &q) {
            report.failures.push((word, q));
        }
    }
    report
}

/// Random cases of the contragredience identity between `g` and its dual.
pub fn contragredience_sweep(g: &PreDGraph, cases: usize, max_word: usize, seed: u64) -> SweepReport {
    let dual = g.dual();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport { cases, failures: Vec::new() };
    if g.quiver.num_vertices() == 0 {
        return report;
    }
    for _ in 0..cases {
        let word = random_word(g.coxeter().rank(), &mut rng, max_word);
        let p = PathElem::from_path(random_path(&g.quiver, &mut rng, 3));
        let qd = PathElem::from_path(random_path(&dual.quiver, &mut rng, 3));
        if !check_contragredience(g, &dual, &word, &p, &qd) {
            report.failures.push((word, p));
        }
    }
    report
}

/// Generator-level duality: for every pair, vertices `x, z` and power `i`,
/// the right-split component `X^{r,s,x}_i z` of `g` and the component
/// `Y^{r,s,z^d}_i x^d` of the dual satisfy
/// `φ(X z) = (-1)^{m-1} Y x^d`, and `φ(X z)` lies in the integer span of
/// the dual's right-split components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityReport {
    pub checked: usize,
    pub sign_failures: Vec<(usize, usize, usize, usize, i64)>,
    pub span_failures: Vec<(usize, usize, usize, usize, i64)>,
}

impl DualityReport {
    pub fn pass(&self) -> bool {
        self.sign_failures.is_empty() && self.span_failures.is_empty()
    }
}

pub fn duality_check(g: &PreDGraph) -> Result<DualityReport> {
    let dual = g.dual();
    let n = g.quiver.num_vertices();
    let mut span = Lattice::new();
    for e in rho::j0_raw(&dual, true).entries() {
        span.insert(to_row(&e.body));
    }
    let mut report = DualityReport::default();
    for (r, s) in g.coxeter().s2fin() {
        let m = g.coxeter().order(r, s).finite().expect("finite order");
        let sign = if m % 2 == 1 { LaurentPoly::one() } else { -LaurentPoly::one() };
        let primal: Vec<BTreeMap<i64, PathElem>> =
            (0..n).map(|x| braid_defect(g, r, s, x).map(|d| d.decompose_by_vpower())).collect::<Result<_>>()?;
        let dualside: Vec<BTreeMap<i64, PathElem>> =
            (0..n).map(|z| braid_defect(&dual, r, s, z).map(|d| d.decompose_by_vpower())).collect::<Result<_>>()?;
        for x in 0..n {
            for z in 0..n {
                let powers: std::collections::BTreeSet<i64> =
                    primal[x].keys().chain(dualside[z].keys()).copied().collect();
                for i in powers {
                    let xz = primal[x].get(&i).map(|c| c * &PathElem::vertex(z)).unwrap_or_default();
                    let yx = dualside[z].get(&i).map(|c| c * &PathElem::vertex(x)).unwrap_or_default();
                    report.checked += 1;
                    let image = phi(&xz);
                    if image != yx.scale(&sign) {
                        report.sign_failures.push((r, s, x, z, i));
                    }
                    if !span.contains(&to_row(&image)) {
                        report.span_failures.push((r, s, x, z, i));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Result of recomputing defects over a specialized datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub generators: GeneratorSet,
    pub mismatches: Vec<(usize, usize, usize)>,
}

impl SpecializationReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Defects with parameters `f(a_r)`, `f(b_r)` compared against the
/// `f`-images of the unspecialized defects.
pub fn specialize_defects(g: &PreDGraph, f: &SpecializationMap) -> Result<SpecializationReport> {
    let special = PreDGraph { datum: g.datum.specialize(f), ..g.clone() };
    let mut mismatches = Vec::new();
    let mut entries = Vec::new();
    for (r, s) in g.coxeter().s2fin() {
        for x in 0..g.quiver.num_vertices() {
            let direct = braid_defect(&special, r, s, x)?;
            if direct != braid_defect(g, r, s, x)?.specialize(f) {
                mismatches.push((r, s, x));
            }
            entries.extend(rho::components_of(&direct, r, s, x, false));
        }
    }
    Ok(SpecializationReport { generators: GeneratorSet::new(entries), mismatches })
}

/// `ρ^f_r(1) = Σ_x ρ_r(x)` computed over the datum specialized by `f`.
pub fn action_element(g: &PreDGraph, r: usize, f: &SpecializationMap) -> PathElem {
    let special = PreDGraph { datum: g.datum.specialize(f), ..g.clone() };
    rho_apply(&special, r, &PathElem::identity(&g.quiver))
}

/// Checks, for `b = ρ''_{r2}(1)` and `a = ρ'_{r1}(1)`, that the two
/// actions on `p` commute, `(b p) a = b (p a)`, and that the right
/// multiplication by `a` is `ρ'_{r1}` itself.
pub fn check_bimodule(
    g: &PreDGraph,
    r1: usize,
    f1: &SpecializationMap,
    r2: usize,
    f2: &SpecializationMap,
    p: &PathElem,
) -> bool {
    let a = action_element(g, r1, f1);
    let b = action_element(g, r2, f2);
    let special = PreDGraph { datum: g.datum.specialize(f1), ..g.clone() };
    let commute = &(&b * p) * &a == &b * &(p * &a);
    commute && p * &a == rho_apply(&special, r1, p)
}
