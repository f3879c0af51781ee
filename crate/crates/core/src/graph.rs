//! Quivers, pre-D-graphs, D-graphs and their duals.

use std::collections::{BTreeSet, HashMap};

use crate::coxeter::{CoxeterDatum, HeckeDatum};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub target: usize,
    pub source: usize,
}

/// A finite quiver. Vertices and edges are addressed by position; ids are
/// kept for input and output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    in_edges: Vec<Vec<usize>>,
    out_edges: Vec<Vec<usize>>,
}

impl Quiver {
    /// Edges are given as `(id, target, source)`.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate vertex id {v:?}")));
            }
        }
        let mut edge_index = HashMap::new();
        let mut out = Vec::with_capacity(edges.len());
        for (k, (id, t, s)) in edges.into_iter().enumerate() {
            let target = *vertex_index.get(&t).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            let source = *vertex_index.get(&s).ok_or_else(|| Error::UnknownVertex(s.clone()))?;
            if edge_index.insert(id.clone(), k).is_some() {
                return Err(Error::Schema(format!("duplicate edge id {id:?}")));
            }
            out.push(Edge { id, target, source });
        }
        Ok(Self::assemble(vertices, out, vertex_index, edge_index))
    }

    fn assemble(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        vertex_index: HashMap<String, usize>,
        edge_index: HashMap<String, usize>,
    ) -> Self {
        let mut in_edges = vec![Vec::new(); vertices.len()];
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            in_edges[e.target].push(k);
            out_edges[e.source].push(k);
        }
        Self { vertices, edges, vertex_index, edge_index, in_edges, out_edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, x: usize) -> &str {
        &self.vertices[x]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_by_id(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    /// Edges `x <- y` ending at `x`.
    pub fn edges_into(&self, x: usize) -> &[usize] {
        &self.in_edges[x]
    }

    /// Edges `y <- x` starting at `x`.
    pub fn edges_out_of(&self, x: usize) -> &[usize] {
        &self.out_edges[x]
    }

    /// Edges with the given target and source.
    pub fn edges_between(&self, target: usize, source: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges[target].iter().copied().filter(move |&e| self.edges[e].source == source)
    }

    /// Whether every ordered vertex pair carries at most one edge, so that
    /// paths can be written as vertex sequences.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert((e.target, e.source)))
    }
}

/// Dual vertex or edge id: `x -> x^d`, with `x^d^d` collapsed back to `x`.
pub fn dual_name(name: &str) -> String {
    match name.strip_suffix("^d") {
        Some(base) => base.to_string(),
        None => format!("{name}^d"),
    }
}

/// Quiver with labels `L(x) ⊆ S` over a Hecke datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreDGraph {
    pub quiver: Quiver,
    pub labels: Vec<BTreeSet<usize>>,
    pub datum: HeckeDatum,
}

impl PreDGraph {
    pub fn new(quiver: Quiver, labels: Vec<BTreeSet<usize>>, datum: HeckeDatum) -> Result<Self> {
        if labels.len() != quiver.num_vertices() {
            return Err(Error::Schema("one label set per vertex required".into()));
        }
        let n = datum.coxeter.rank();
        if labels.iter().flatten().any(|&r| r >= n) {
            return Err(Error::Schema("label outside S".into()));
        }
        Ok(Self { quiver, labels, datum })
    }

    /// Builds a graph from vertex names with label names and
    /// `(target, source)` edges; edge ids are `target<-source`.
    pub fn from_names(datum: HeckeDatum, vertices: &[(&str, &[&str])], edges: &[(&str, &str)]) -> Result<Self> {
        let labels = vertices
            .iter()
            .map(|(_, ls)| ls.iter().map(|l| datum.coxeter.index_of(l)).collect::<Result<BTreeSet<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let quiver = Quiver::new(
            vertices.iter().map(|(v, _)| v.to_string()).collect(),
            edges.iter().map(|(t, s)| (format!("{t}<-{s}"), t.to_string(), s.to_string())).collect(),
        )?;
        Self::new(quiver, labels, datum)
    }

    pub fn coxeter(&self) -> &CoxeterDatum {
        &self.datum.coxeter
    }

    pub fn has_label(&self, x: usize, r: usize) -> bool {
        self.labels[x].contains(&r)
    }

    /// Both finiteness conditions hold for every representable graph.
    pub fn is_dualizable(&self) -> bool {
        true
    }

    pub fn dual(&self) -> Self {
        let q = &self.quiver;
        let vertices: Vec<String> = q.vertices.iter().map(|v| dual_name(v)).collect();
        let edges: Vec<Edge> = q
            .edges
            .iter()
            .map(|e| Edge { id: dual_name(&e.id), target: e.source, source: e.target })
            .collect();
        let vertex_index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let edge_index = edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        let n = self.datum.coxeter.rank();
        let labels = self
            .labels
            .iter()
            .map(|l| (0..n).filter(|r| !l.contains(r)).collect())
            .collect();
        Self {
            quiver: Quiver::assemble(vertices, edges, vertex_index, edge_index),
            labels,
            datum: self.datum.dual(),
        }
    }

    /// Checks that `(i, j)` (vertex map, edge map) is an isomorphism onto
    /// `other`: bijective, compatible with sources, targets and labels, and
    /// the datums agree.
    pub fn is_isomorphism(&self, other: &PreDGraph, i: &[usize], j: &[usize]) -> bool {
        let (a, b) = (&self.quiver, &other.quiver);
        if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
            return false;
        }
        if i.len() != a.num_vertices() || j.len() != a.num_edges() || self.datum != other.datum {
            return false;
        }
        let bij = |m: &[usize], n: usize| m.iter().collect::<BTreeSet<_>>().len() == n && m.iter().all(|&k| k < n);
        if !bij(i, b.num_vertices()) || !bij(j, b.num_edges()) {
            return false;
        }
        let labels_ok = (0..a.num_vertices()).all(|x| self.labels[x] == other.labels[i[x]]);
        let edges_ok = a.edges.iter().enumerate().all(|(k, e)| {
            let f = &b.edges[j[k]];
            f.target == i[e.target] && f.source == i[e.source]
        });
        labels_ok && edges_ok
    }

    /// The renaming maps `x -> (x^d)^d` and `e -> (e^d)^d` as positions,
    /// resolved through ids.
    pub fn double_dual_maps(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let dd = self.dual().dual();
        let i = self
            .quiver
            .vertices
            .iter()
            .map(|v| dd.quiver.vertex(&dual_name(&dual_name(v))))
            .collect::<Result<Vec<_>>>()?;
        let j = self
            .quiver
            .edges
            .iter()
            .map(|e| dd.quiver.edge_by_id(&dual_name(&dual_name(&e.id))))
            .collect::<Result<Vec<_>>>()?;
        Ok((i, j))
    }

    /// Reorders vertices and edges: vertex `x` moves to position
    /// `vperm[x]` and edge `e` to `eperm[e]`; ids are kept.
    pub fn permuted(&self, vperm: &[usize], eperm: &[usize]) -> Result<Self> {
        let q = &self.quiver;
        let mut vertices = vec![String::new(); q.num_vertices()];
        let mut labels = vec![BTreeSet::new(); q.num_vertices()];
        for x in 0..q.num_vertices() {
            vertices[vperm[x]] = q.vertices[x].clone();
            labels[vperm[x]] = self.labels[x].clone();
        }
        let mut edges = vec![(String::new(), String::new(), String::new()); q.num_edges()];
        for (k, e) in q.edges.iter().enumerate() {
            edges[eperm[k]] = (e.id.clone(), q.vertices[e.target].clone(), q.vertices[e.source].clone());
        }
        Self::new(Quiver::new(vertices, edges)?, labels, self.datum.clone())
    }
}

/// Pre-D-graph with edge weights `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGraph {
    pub base: PreDGraph,
    pub mu: Vec<LaurentPoly>,
}

impl DGraph {
    pub fn new(base: PreDGraph, mu: Vec<LaurentPoly>) -> Result<Self> {
        if mu.len() != base.quiver.num_edges() {
            return Err(Error::Schema("mu must be given on every edge".into()));
        }
        Ok(Self { base, mu })
    }

    /// All weights equal to one.
    pub fn unit_weights(base: PreDGraph) -> Self {
        let mu = vec![LaurentPoly::one(); base.quiver.num_edges()];
        Self { base, mu }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.base.quiver
    }

    pub fn datum(&self) -> &HeckeDatum {
        &self.base.datum
    }

    /// Dual graph with `mu^d(e^d) = mu(e)`.
    pub fn dual(&self) -> Self {
        Self { base: self.base.dual(), mu: self.mu.clone() }
    }

    /// Drops the edges with zero weight.
    pub fn reduced(&self) -> Self {
        let q = &self.base.quiver;
        let keep: Vec<usize> = (0..q.num_edges()).filter(|&k| !self.mu[k].is_zero()).collect();
        let edges: Vec<Edge> = keep.iter().map(|&k| q.edges[k].clone()).collect();
        let vertex_index = q.vertex_index.clone();
        let edge_index = edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        let quiver = Quiver::assemble(q.vertices.clone(), edges, vertex_index, edge_index);
        Self {
            base: PreDGraph { quiver, labels: self.base.labels.clone(), datum: self.base.datum.clone() },
            mu: keep.iter().map(|&k| self.mu[k].clone()).collect(),
        }
    }

    /// Strong connectivity through edges with nonzero weight.
    pub fn is_connected(&self) -> bool {
        let q = &self.base.quiver;
        let n = q.num_vertices();
        if n == 0 {
            return true;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                let list = if forward { q.edges_out_of(x) } else { q.edges_into(x) };
                for &e in list {
                    if self.mu[e].is_zero() {
                        continue;
                    }
                    let y = if forward { q.edges[e].target } else { q.edges[e].source };
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen.into_iter().all(|b| b)
        };
        reach(true) && reach(false)
    }
}

/// Vertex of a classical W-graph: id and descent labels.
pub type WGraphVertex<'a> = (&'a str, &'a [&'a str]);

/// Turns a W-graph with undirected integer-weighted edges into a D-graph
/// over the equal-parameter datum.
pub fn import_kl_wgraph(coxeter: CoxeterDatum, vertices: &[WGraphVertex<'_>], edges: &[(&str, &str, i64)]) -> Result<DGraph> {
    let mut directed = Vec::new();
    let mut mu = Vec::new();
    for &(x, y, w) in edges {
        if w == 0 {
            return Err(Error::Invalid(format!("zero weight on edge {{{x}, {y}}}")));
        }
        directed.push((x, y));
        directed.push((y, x));
        mu.push(LaurentPoly::constant(w));
        mu.push(LaurentPoly::constant(w));
    }
    let base = PreDGraph::from_names(HeckeDatum::d_z(coxeter), vertices, &directed)?;
    DGraph::new(base, mu)
}
