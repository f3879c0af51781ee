//! The operators `ρ_r` on `A[Γ]`, braid defects and the generators of `J₀`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::coxeter::{alternating_word, GenWord};
use crate::error::{Error, Result};
use crate::graph::PreDGraph;
use crate::ideal;
use crate::laurent::LaurentPoly;
use crate::pathalg::{Path, PathElem};

/// `ρ_r(x)`.
pub fn rho_on_vertex(g: &PreDGraph, r: usize, x: usize) -> PathElem {
    rho_apply(g, r, &PathElem::vertex(x))
}

/// `ρ_r(u)`, using `ρ_r(p) = p · ρ_r(s(p))`.
pub fn rho_apply(g: &PreDGraph, r: usize, u: &PathElem) -> PathElem {
    let q = &g.quiver;
    let (a, b) = (&g.datum.a[r], -&g.datum.b[r]);
    let mut out = PathElem::zero();
    for (p, c) in u.terms() {
        let x = p.source();
        if g.has_label(x, r) {
            out.add_term(p.clone(), &(c * &b));
            continue;
        }
        out.add_term(p.clone(), &(c * a));
        for &e in q.edges_into(x) {
            if g.has_label(q.edge(e).source, r) {
                let pe = p.concat(&Path::edge(q, e)).expect("edge ends at the source");
                out.add_term(pe, c);
            }
        }
    }
    out
}

/// Applies `ρ_{w0} ∘ ... ∘ ρ_{wk}`; the last letter acts first.
pub fn rho_word(g: &PreDGraph, word: &GenWord, u: &PathElem) -> PathElem {
    word.letters().iter().rev().fold(u.clone(), |acc, &r| rho_apply(g, r, &acc))
}

/// Same value as [`rho_word`] on a vertex, computed by enumerating walks in
/// the quiver extended by one distinguished loop per vertex. Loop steps
/// weigh `a_r` or `-b_r`, edge steps weigh `1`, and the loops are dropped
/// from the resulting path.
pub fn rho_word_explicit(g: &PreDGraph, word: &GenWord, x: usize) -> PathElem {
    let letters: Vec<usize> = word.letters().iter().rev().copied().collect();
    let mut out = PathElem::zero();
    walk(g, &letters, Path::vertex(x), LaurentPoly::one(), &mut out);
    out
}

fn walk(g: &PreDGraph, letters: &[usize], path: Path, weight: LaurentPoly, out: &mut PathElem) {
    let Some((&r, rest)) = letters.split_first() else {
        out.add_term(path, &weight);
        return;
    };
    let q = &g.quiver;
    let x = path.source();
    if g.has_label(x, r) {
        walk(g, rest, path, &weight * &(-&g.datum.b[r]), out);
        return;
    }
    for &e in q.edges_into(x) {
        if g.has_label(q.edge(e).source, r) {
            let next = path.concat(&Path::edge(q, e)).expect("edge ends at the source");
            walk(g, rest, next, weight.clone(), out);
        }
    }
    walk(g, rest, path, &weight * &g.datum.a[r], out);
}

fn finite_order(g: &PreDGraph, r: usize, s: usize) -> Result<usize> {
    let cox = g.coxeter();
    if r == s {
        return Err(Error::Invalid(format!("braid defect needs r != s, got {}", cox.name(r))));
    }
    cox.order(r, s)
        .finite()
        .map(|m| m as usize)
        .ok_or_else(|| Error::InfiniteOrder(cox.name(r).to_string(), cox.name(s).to_string()))
}

/// `((ρ_r ρ_s ρ_r ...)_m - (ρ_s ρ_r ρ_s ...)_m)(u)` with `m = m(r, s)`.
pub fn braid_defect_on(g: &PreDGraph, r: usize, s: usize, u: &PathElem) -> Result<PathElem> {
    let m = finite_order(g, r, s)?;
    Ok(rho_word(g, &alternating_word(r, s, m), u) - rho_word(g, &alternating_word(s, r, m), u))
}

pub fn braid_defect(g: &PreDGraph, r: usize, s: usize, x: usize) -> Result<PathElem> {
    braid_defect_on(g, r, s, &PathElem::vertex(x))
}

/// One generator with the data it came from: the pair `(r, s)`, the vertex
/// `x` whose defect produced it and the power `v^i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeneratorEntry {
    pub r: usize,
    pub s: usize,
    pub x: usize,
    pub i: i64,
    pub body: PathElem,
}

/// Finite generating family of `J₀`, one entry per distinct body up to
/// sign, in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    entries: Vec<GeneratorEntry>,
}

impl GeneratorSet {
    /// Normalizes signs, drops zero bodies and keeps the first entry (in
    /// canonical order) for each body.
    pub fn new(entries: impl IntoIterator<Item = GeneratorEntry>) -> Self {
        let mut all: Vec<GeneratorEntry> = entries
            .into_iter()
            .filter(|e| !e.body.is_zero())
            .map(|mut e| {
                e.body = e.body.sign_normalized();
                e
            })
            .collect();
        all.sort();
        let mut seen = BTreeSet::new();
        all.retain(|e| seen.insert(e.body.clone()));
        Self { entries: all }
    }

    pub fn entries(&self) -> &[GeneratorEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn bodies(&self) -> BTreeSet<PathElem> {
        self.entries.iter().map(|e| e.body.clone()).collect()
    }

    /// Same bodies, provenance ignored.
    pub fn same_bodies(&self, other: &GeneratorSet) -> bool {
        self.bodies() == other.bodies()
    }
}

/// The nonzero `v`-power components of the defect of `(r, s)` at `x`,
/// optionally split by source vertex.
pub fn defect_components(g: &PreDGraph, r: usize, s: usize, x: usize, split: bool) -> Result<Vec<GeneratorEntry>> {
    let defect = braid_defect(g, r, s, x)?;
    Ok(components_of(&defect, r, s, x, split))
}

pub(crate) fn components_of(defect: &PathElem, r: usize, s: usize, x: usize, split: bool) -> Vec<GeneratorEntry> {
    let mut out = Vec::new();
    for (i, part) in defect.decompose_by_vpower() {
        if split {
            for piece in part.split_by_source().into_values() {
                out.push(GeneratorEntry { r, s, x, i, body: piece });
            }
        } else {
            out.push(GeneratorEntry { r, s, x, i, body: part });
        }
    }
    out
}

/// Components of every defect, over all vertices and all pairs of finite
/// order, without any interreduction.
pub fn j0_raw(g: &PreDGraph, split: bool) -> GeneratorSet {
    let jobs: Vec<(usize, usize, usize)> = (0..g.quiver.num_vertices())
        .flat_map(|x| g.coxeter().s2fin().into_iter().map(move |(r, s)| (r, s, x)))
        .collect();
    let parts: Vec<Vec<GeneratorEntry>> = jobs
        .par_iter()
        .map(|&(r, s, x)| defect_components(g, r, s, x, split).expect("pairs have finite order"))
        .collect();
    GeneratorSet::new(parts.into_iter().flatten())
}

/// Canonical generating set: the source-split defect components,
/// interreduced degree by degree (see [`ideal::interreduce`]).
pub fn j0_generators(g: &PreDGraph) -> GeneratorSet {
    ideal::interreduce(&g.quiver, j0_raw(g, true).entries().to_vec())
}

/// Generating set restricted to one pair `(r, s)`.
pub fn j0_generators_for_pair(g: &PreDGraph, r: usize, s: usize) -> Result<GeneratorSet> {
    let mut raw = Vec::new();
    for x in 0..g.quiver.num_vertices() {
        raw.extend(defect_components(g, r, s, x, true)?);
    }
    Ok(ideal::interreduce(&g.quiver, GeneratorSet::new(raw).entries().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterDatum, HeckeDatum};
    use crate::graph::{import_kl_wgraph, WGraphVertex};
    use proptest::prelude::{any, prop_assert_eq, proptest};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn b3() -> CoxeterDatum {
        CoxeterDatum::from_orders(&["r1", "r2", "r3"], &[&[1, 3, 2], &[3, 1, 4], &[2, 4, 1]]).unwrap()
    }

    fn b3_cell() -> PreDGraph {
        let vs: &[WGraphVertex] = &[("y", &["r2"]), ("x1", &["r3"]), ("x2", &["r3"]), ("z", &["r1"])];
        import_kl_wgraph(b3(), vs, &[("y", "x1", 1), ("y", "x2", 1), ("y", "z", 1)]).unwrap().base
    }

    fn one_vertex(labels: &[&str]) -> PreDGraph {
        PreDGraph::from_names(HeckeDatum::d_z(b3()), &[("x", labels)], &[]).unwrap()
    }

    fn el(g: &PreDGraph, s: &str) -> PathElem {
        PathElem::parse(&g.quiver, s).unwrap()
    }

    #[test]
    fn rho_branches() {
        let g = b3_cell();
        let y = g.quiver.vertex("y").unwrap();
        assert_eq!(rho_on_vertex(&g, 1, y), el(&g, "-v^-1*y"));
        assert_eq!(rho_on_vertex(&g, 0, y), el(&g, "v*y + y.z"));
        assert_eq!(rho_on_vertex(&g, 2, y), el(&g, "v*y + y.x1 + y.x2"));
        let x1 = g.quiver.vertex("x1").unwrap();
        assert_eq!(rho_on_vertex(&g, 0, x1), el(&g, "v*x1"));
        assert!(rho_apply(&g, 0, &PathElem::zero()).is_zero());
        let p = el(&g, "y.z");
        assert_eq!(rho_apply(&g, 0, &p), el(&g, "-v^-1*y.z"));
    }

    #[test]
    fn word_order_applies_last_letter_first() {
        let g = b3_cell();
        let z = PathElem::vertex(g.quiver.vertex("z").unwrap());
        let w = GenWord(vec![0, 1]);
        let expected = rho_apply(&g, 0, &rho_apply(&g, 1, &z));
        assert_eq!(rho_word(&g, &w, &z), expected);
        assert_eq!(rho_word(&g, &GenWord::empty(), &z), z);
    }

    #[test]
    fn quadratic_relation() {
        let g = b3_cell();
        for x in 0..4 {
            for r in 0..3 {
                let u = PathElem::vertex(x);
                let plus_b = &rho_apply(&g, r, &u) + &u.scale(&g.datum.b[r]);
                let lhs = &rho_apply(&g, r, &plus_b) - &plus_b.scale(&g.datum.a[r]);
                assert!(lhs.is_zero());
            }
        }
    }

    #[test]
    fn explicit_evaluator_matches() {
        let g = b3_cell();
        let mut words = vec![GenWord::empty()];
        for _ in 0..4 {
            let next: Vec<GenWord> = words
                .iter()
                .flat_map(|w| (0..3).map(move |r| GenWord([w.0.clone(), vec![r]].concat())))
                .collect();
            for w in &next {
                for x in 0..4 {
                    assert_eq!(rho_word(&g, w, &PathElem::vertex(x)), rho_word_explicit(&g, w, x));
                }
            }
            words = next;
        }
    }

    #[test]
    fn defect_is_antisymmetric() {
        let g = b3_cell();
        for (r, s) in g.coxeter().s2fin() {
            for x in 0..4 {
                assert_eq!(braid_defect(&g, s, r, x).unwrap(), -braid_defect(&g, r, s, x).unwrap());
            }
        }
        let free = CoxeterDatum::from_orders(&["a", "b"], &[&[1, 0], &[0, 1]]).unwrap();
        let h = PreDGraph::from_names(HeckeDatum::d_z(free), &[("x", &[])], &[]).unwrap();
        assert!(matches!(braid_defect(&h, 0, 1, 0), Err(Error::InfiniteOrder(_, _))));
    }

    #[test]
    fn one_vertex_generators() {
        assert!(j0_generators(&one_vertex(&[])).is_empty());
        let g = one_vertex(&["r1"]);
        let set = j0_generators(&g);
        assert_eq!(set.bodies(), [el(&g, "x")].into_iter().collect());
        assert!(j0_generators(&one_vertex(&["r1", "r2", "r3"])).is_empty());
        assert!(j0_generators(&one_vertex(&["r1", "r2"])).is_empty());
    }

    #[test]
    fn b3_cell_generators() {
        let g = b3_cell();
        let expected: BTreeSet<PathElem> = [
            "y.z.y - y",
            "z.y.z - z",
            "y.x1.y.x1 + y.x2.y.x1 - 2*y.x1",
            "y.x1.y.x2 + y.x2.y.x2 - 2*y.x2",
            "x1.y.x1.y + x1.y.x2.y - 2*x1.y",
            "x2.y.x1.y + x2.y.x2.y - 2*x2.y",
        ]
        .iter()
        .map(|s| el(&g, s).sign_normalized())
        .collect();
        assert_eq!(j0_generators(&g).bodies(), expected);
    }

    proptest! {
        #[test]
        fn left_module_property(seed in any::<u64>()) {
            let g = b3_cell();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = PathElem::from_path(crate::pathalg::random_path(&g.quiver, &mut rng, 3));
            let u = PathElem::from_path(crate::pathalg::random_path(&g.quiver, &mut rng, 3));
            let r = rng.gen_range(0..3);
            prop_assert_eq!(rho_apply(&g, r, &(&p * &u)), &p * &rho_apply(&g, r, &u));
        }

        #[test]
        fn relabeling_maps_raw_generators(seed in any::<u64>()) {
            let g = b3_cell();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut vperm: Vec<usize> = (0..4).collect();
            let mut eperm: Vec<usize> = (0..6).collect();
            for k in (1..4).rev() { vperm.swap(k, rng.gen_range(0..=k)); }
            for k in (1..6).rev() { eperm.swap(k, rng.gen_range(0..=k)); }
            let h = g.permuted(&vperm, &eperm).unwrap();
            let image = |u: &PathElem| -> PathElem {
                u.map_paths(|p| {
                    if p.is_vertex() {
                        Path::vertex(vperm[p.target()])
                    } else {
                        Path::from_edges(&h.quiver, p.edges().iter().map(|&e| eperm[e]).collect()).unwrap()
                    }
                })
                .sign_normalized()
            };
            let mapped: BTreeSet<PathElem> = j0_raw(&g, false).entries().iter().map(|e| image(&e.body)).collect();
            prop_assert_eq!(mapped, j0_raw(&h, false).bodies());
        }
    }
}
