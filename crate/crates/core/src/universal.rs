//! The universal pre-D-graph of a dihedral pair and its push-forward.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::coxeter::{CoxeterDatum, CoxeterOrder, GenWord, HeckeDatum};
use crate::error::{Error, Result};
use crate::graph::{PreDGraph, Quiver};
use crate::ideal;
use crate::laurent::LaurentPoly;
use crate::pathalg::{Path, PathElem};
use crate::rho::{self, GeneratorEntry, GeneratorSet};

pub const X_R: usize = 0;
pub const X_S: usize = 1;
pub const X_EMPTY: usize = 2;
pub const X_WP: usize = 3;

pub const EMPTY_NAME: &str = "∅";
pub const WP_NAME: &str = "℘";

/// Complete quiver with loops on `x_r, x_s, x_∅, x_℘`, labelled
/// `{r}, {s}, ∅, {r, s}`. The edge `a <- b` has index `4a + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalGraph {
    pub graph: PreDGraph,
    pub r: usize,
    pub s: usize,
}

impl UniversalGraph {
    pub fn new(datum: HeckeDatum, r: usize, s: usize) -> Result<Self> {
        if r == s {
            return Err(Error::Invalid("universal graph needs two distinct generators".into()));
        }
        let names = [
            datum.coxeter.name(r).to_string(),
            datum.coxeter.name(s).to_string(),
            EMPTY_NAME.to_string(),
            WP_NAME.to_string(),
        ];
        let mut edges = Vec::with_capacity(16);
        for t in &names {
            for src in &names {
                edges.push((format!("{t}<-{src}"), t.clone(), src.clone()));
            }
        }
        let quiver = Quiver::new(names.to_vec(), edges)?;
        let labels = vec![
            BTreeSet::from([r]),
            BTreeSet::from([s]),
            BTreeSet::new(),
            BTreeSet::from([r, s]),
        ];
        Ok(Self { graph: PreDGraph::new(quiver, labels, datum)?, r, s })
    }

    /// Universal graph of the rank-two system with generators `r`, `s` and
    /// `m(r, s) = m` over the equal-parameter datum.
    pub fn dihedral(m: u32) -> Result<Self> {
        let cox = CoxeterDatum::dihedral("r", "s", CoxeterOrder::Finite(m))?;
        Self::new(HeckeDatum::d_z(cox), 0, 1)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.graph.quiver
    }

    pub fn order(&self) -> Result<usize> {
        let cox = self.graph.coxeter();
        cox.order(self.r, self.s)
            .finite()
            .map(|m| m as usize)
            .ok_or_else(|| Error::InfiniteOrder(cox.name(self.r).to_string(), cox.name(self.s).to_string()))
    }

    pub fn edge_index(a: usize, b: usize) -> usize {
        4 * a + b
    }

    /// Path `x_a <- x_b <- ...` through the given universal vertices.
    pub fn path(&self, vertices: &[usize]) -> Path {
        Path::through(self.quiver(), vertices).expect("complete quiver")
    }

    /// `(a b a ...)_k` as a path through `x_a, x_b`, `k >= 1` vertices.
    pub fn alternating_path(&self, a: usize, b: usize, k: usize) -> Path {
        let vs: Vec<usize> = (0..k).map(|j| if j % 2 == 0 { a } else { b }).collect();
        self.path(&vs)
    }

    /// `∅ (a b a ...)_k ℘`.
    pub fn framed_path(&self, a: usize, b: usize, k: usize) -> Path {
        let mut vs = vec![X_EMPTY];
        vs.extend((0..k).map(|j| if j % 2 == 0 { a } else { b }));
        vs.push(X_WP);
        self.path(&vs)
    }

    /// The universal vertex whose label is `L(y) ∩ {r, s}`.
    pub fn class_of(&self, target: &PreDGraph, y: usize) -> usize {
        match (target.has_label(y, self.r), target.has_label(y, self.s)) {
            (true, false) => X_R,
            (false, true) => X_S,
            (false, false) => X_EMPTY,
            (true, true) => X_WP,
        }
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// `d_m(first, second) = Σ_j (-1)^j C(m-1-j, j) (first second first ...)_{m-2j}`
/// on universal vertices `first`, `second`.
pub fn d_m(u: &UniversalGraph, m: usize, first: usize, second: usize) -> PathElem {
    let mut out = PathElem::zero();
    for j in 0..=(m.saturating_sub(1) / 2) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = LaurentPoly::constant(sign * binomial(m - 1 - j, j));
        out += &PathElem::term(c, u.alternating_path(first, second, m - 2 * j));
    }
    out
}

/// Closed-form generators of `J₀` for the universal graph, in the order
/// `d_m(r, s)`, `d_m(s, r)`, then `∅(srs...)_i℘ - ∅(rsr...)_i℘` for
/// `k = 1..m-1`. Entries carry the power of `v` at which each appears in
/// the defect: `-1` for `d_m`, `-(m-1-k)` for the framed differences.
/// Only valid for the equal-parameter datum.
pub fn universal_generators_raw(u: &UniversalGraph) -> Result<Vec<GeneratorEntry>> {
    let d = &u.graph.datum;
    let dz = |t: usize| d.a[t] == LaurentPoly::v() && d.b[t] == LaurentPoly::v_inv();
    if !dz(u.r) || !dz(u.s) {
        return Err(Error::Invalid("closed form requires a_r = v, b_r = v^-1".into()));
    }
    let m = u.order()?;
    if m < 2 {
        return Err(Error::Invalid("m(r, s) must be at least 2".into()));
    }
    let (r, s) = (u.r, u.s);
    let mut out = vec![
        GeneratorEntry { r, s, x: X_R, i: -1, body: d_m(u, m, X_R, X_S) },
        GeneratorEntry { r, s, x: X_S, i: -1, body: d_m(u, m, X_S, X_R) },
    ];
    for k in 1..m {
        let body = PathElem::from_path(u.framed_path(X_S, X_R, k)) - PathElem::from_path(u.framed_path(X_R, X_S, k));
        out.push(GeneratorEntry { r, s, x: X_EMPTY, i: -((m - 1 - k) as i64), body });
    }
    Ok(out)
}

pub fn universal_generators(u: &UniversalGraph) -> Result<GeneratorSet> {
    Ok(GeneratorSet::new(universal_generators_raw(u)?))
}

/// Closed form after the canonical interreduction, comparable with
/// [`brute_force_generators`].
pub fn universal_generators_reduced(u: &UniversalGraph) -> Result<GeneratorSet> {
    Ok(ideal::interreduce(u.quiver(), universal_generators_raw(u)?))
}

/// Generators of `J₀` of the universal graph from the defects of the pair
/// `(r, s)`, interreduced.
pub fn brute_force_generators(u: &UniversalGraph) -> Result<GeneratorSet> {
    rho::j0_generators_for_pair(&u.graph, u.r, u.s)
}

fn require_dz(u: &UniversalGraph) -> Result<()> {
    let d = &u.graph.datum;
    if d.a[u.r] != LaurentPoly::v() || d.a[u.s] != LaurentPoly::v() {
        return Err(Error::Invalid("C-operators are defined for a_r = v".into()));
    }
    Ok(())
}

/// `C_t = ρ_t - v·Id`.
pub fn c_op(u: &UniversalGraph, t: usize, w: &PathElem) -> PathElem {
    rho::rho_apply(&u.graph, t, w) - w.scale(&LaurentPoly::v())
}

/// Plain product `C_{w0} ∘ ... ∘ C_{wk}`.
pub fn c_product(u: &UniversalGraph, word: &GenWord, w: &PathElem) -> Result<PathElem> {
    require_dz(u)?;
    if word.letters().iter().any(|&t| t != u.r && t != u.s) {
        return Err(Error::Invalid("C-operators only exist for r and s".into()));
    }
    Ok(word.letters().iter().rev().fold(w.clone(), |acc, &t| c_op(u, t, &acc)))
}

/// The operator `C_word` for an alternating word, determined by
/// `C_t ∘ C_{(...)_{k-1}} = C_{(...)_k} + C_{(...)_{k-2}}`, `C_∅ = Id`,
/// `C_{ab} = C_a ∘ C_b`.
pub fn c_word_op(u: &UniversalGraph, word: &GenWord, w: &PathElem) -> Result<PathElem> {
    require_dz(u)?;
    if !word.alternates_in(u.r, u.s) {
        return Err(Error::Invalid("C-words must alternate in r and s".into()));
    }
    let letters = word.letters();
    let n = letters.len();
    // vals[k] = C applied for the suffix of length k
    let mut vals: Vec<PathElem> = vec![w.clone()];
    for k in 1..=n {
        let t = letters[n - k];
        let mut next = c_op(u, t, &vals[k - 1]);
        if k >= 3 {
            next -= &vals[k - 2];
        }
        vals.push(next);
    }
    Ok(vals.pop().expect("nonempty"))
}

/// The homomorphism `ψ_{r,s}: A[Γ^U] -> A[Λ]`.
#[derive(Clone, Debug)]
pub struct Psi {
    classes: Vec<Vec<usize>>,
    edge_images: Vec<Vec<usize>>,
}

impl Psi {
    pub fn new(u: &UniversalGraph, target: &PreDGraph) -> Self {
        let mut classes = vec![Vec::new(); 4];
        for y in 0..target.quiver.num_vertices() {
            classes[u.class_of(target, y)].push(y);
        }
        let mut edge_images = vec![Vec::new(); 16];
        for (k, e) in target.quiver.edges().iter().enumerate() {
            let a = u.class_of(target, e.target);
            let b = u.class_of(target, e.source);
            edge_images[UniversalGraph::edge_index(a, b)].push(k);
        }
        Self { classes, edge_images }
    }

    pub fn class(&self, x: usize) -> &[usize] {
        &self.classes[x]
    }

    pub fn vertex(&self, x: usize) -> PathElem {
        PathElem::from_terms(self.classes[x].iter().map(|&y| (Path::vertex(y), LaurentPoly::one())))
    }

    pub fn edge(&self, target: &PreDGraph, e: usize) -> PathElem {
        PathElem::from_terms(
            self.edge_images[e].iter().map(|&f| (Path::edge(&target.quiver, f), LaurentPoly::one())),
        )
    }

    pub fn path(&self, target: &PreDGraph, p: &Path) -> PathElem {
        if p.is_vertex() {
            return self.vertex(p.target());
        }
        let mut out = self.edge(target, p.edges()[0]);
        for &e in &p.edges()[1..] {
            if out.is_zero() {
                break;
            }
            out = &out * &self.edge(target, e);
        }
        out
    }

    pub fn apply(&self, target: &PreDGraph, w: &PathElem) -> PathElem {
        let mut out = PathElem::zero();
        for (p, c) in w.terms() {
            out += &self.path(target, p).scale(c);
        }
        out
    }
}

/// `y · ψ(defect at x_y)` for the pair `(r, s)`.
pub fn pushforward_defect(target: &PreDGraph, r: usize, s: usize, y: usize) -> Result<PathElem> {
    let u = UniversalGraph::new(target.datum.clone(), r, s)?;
    let psi = Psi::new(&u, target);
    let x = u.class_of(target, y);
    let defect = rho::braid_defect(&u.graph, r, s, x)?;
    Ok(&PathElem::vertex(y) * &psi.apply(target, &defect))
}

/// Where the universal relations come from before being pushed forward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relations {
    /// Closed-form generators (equal-parameter datum only).
    ClosedForm,
    /// Source-split `v`-components of the universal defects.
    Defects,
}

/// Pushes the universal relations of the pair `(r, s)` to `target`: for
/// each target vertex `y`, the elements `y·ψ(g)` for the universal
/// relations `g` attached to the class of `y`. Returned uninterreduced.
pub fn pushforward_raw(target: &PreDGraph, r: usize, s: usize, source: Relations) -> Result<Vec<GeneratorEntry>> {
    let u = UniversalGraph::new(target.datum.clone(), r, s)?;
    let psi = Psi::new(&u, target);
    let universal: Vec<GeneratorEntry> = match source {
        Relations::ClosedForm => universal_generators_raw(&u)?,
        Relations::Defects => {
            let mut all = Vec::new();
            for x in 0..4 {
                all.extend(rho::defect_components(&u.graph, r, s, x, true)?);
            }
            all
        }
    };
    let mut out = Vec::new();
    for y in 0..target.quiver.num_vertices() {
        let x = u.class_of(target, y);
        for g in universal.iter().filter(|g| g.x == x) {
            let body = &PathElem::vertex(y) * &psi.apply(target, &g.body);
            for piece in body.split_by_source().into_values() {
                out.push(GeneratorEntry { r, s, x: y, i: g.i, body: piece });
            }
        }
    }
    Ok(out)
}

pub fn pushforward_generators(target: &PreDGraph, r: usize, s: usize) -> Result<GeneratorSet> {
    let source = if target.datum.is_d_z() { Relations::ClosedForm } else { Relations::Defects };
    Ok(ideal::interreduce(&target.quiver, pushforward_raw(target, r, s, source)?))
}

/// Generating set of `J₀` assembled from all pairs of finite order through
/// the universal graphs.
pub fn generators_via_universal(target: &PreDGraph) -> Result<GeneratorSet> {
    let source = if target.datum.is_d_z() { Relations::ClosedForm } else { Relations::Defects };
    let parts = target
        .coxeter()
        .s2fin()
        .into_par_iter()
        .map(|(r, s)| pushforward_raw(target, r, s, source))
        .collect::<Result<Vec<_>>>()?;
    let raw = GeneratorSet::new(parts.into_iter().flatten());
    Ok(ideal::interreduce(&target.quiver, raw.entries().to_vec()))
}
