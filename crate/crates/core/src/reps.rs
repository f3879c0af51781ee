//! The representation `τ` of a D-graph on the free module over its
//! vertices.

use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{alternating_word, GenWord};
use crate::graph::DGraph;
use crate::laurent::LaurentPoly;

/// Element of the free module on the vertices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeModuleElement {
    terms: BTreeMap<usize, LaurentPoly>,
}

impl FreeModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: usize) -> Self {
        Self::term(x, LaurentPoly::one())
    }

    pub fn term(x: usize, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(x, &c);
        out
    }

    pub fn add_term(&mut self, x: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(x).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn coeff(&self, x: usize) -> LaurentPoly {
        self.terms.get(&x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(&x, c)| (x, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&x, a) in &self.terms {
            out.add_term(x, &(a * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&x, c) in &other.terms {
            out.add_term(x, c);
        }
        out
    }

    /// Kronecker pairing `<x, y^d> = δ_{x,y}` with an element of the dual
    /// module, whose vertices share positions with this one.
    pub fn pair(&self, dual: &Self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&x, c) in &self.terms {
            if let Some(d) = dual.terms.get(&x) {
                out += &(c * d);
            }
        }
        out
    }
}

impl fmt::Debug for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(x, c)| (x, c.to_string()))).finish()
    }
}

/// Dense square matrix over `Z[v, v^-1]`, rows and columns indexed by
/// vertex position. Column `x` is the image of `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    n: usize,
    data: Vec<LaurentPoly>,
}

impl RepMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![LaurentPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = LaurentPoly::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, c: LaurentPoly) {
        self.data[row * self.n + col] = c;
    }

    pub fn column(&self, x: usize) -> FreeModuleElement {
        let mut out = FreeModuleElement::zero();
        for y in 0..self.n {
            out.add_term(y, self.get(y, x));
        }
        out
    }

    pub fn apply(&self, w: &FreeModuleElement) -> FreeModuleElement {
        let mut out = FreeModuleElement::zero();
        for (x, c) in w.terms() {
            out = out.add(&self.column(x).scale(c));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[j * self.n + i] = self.data[i * self.n + j].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self { n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    /// Columns with a nonzero entry.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| (0..self.n).any(|y| !self.get(y, x).is_zero())).collect()
    }

    /// Rows of entries printed as Laurent polynomials.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_strings()).finish()
    }
}

/// Matrix of `τ_r`.
pub fn tau_matrix(g: &DGraph, r: usize) -> RepMatrix {
    let q = g.quiver();
    let d = g.datum();
    let n = q.num_vertices();
    let mut m = RepMatrix::zero(n);
    for x in 0..n {
        if g.base.has_label(x, r) {
            m.set(x, x, -&d.b[r]);
            continue;
        }
        m.set(x, x, d.a[r].clone());
        for &e in q.edges_into(x) {
            let y = q.edge(e).source;
            if g.base.has_label(y, r) {
                let entry = m.get(y, x) + &g.mu[e];
                m.set(y, x, entry);
            }
        }
    }
    m
}

/// Matrix of `τ_{w0} ⋯ τ_{wk}`.
pub fn tau_word(g: &DGraph, word: &GenWord) -> RepMatrix {
    word.letters()
        .iter()
        .fold(RepMatrix::identity(g.quiver().num_vertices()), |acc, &r| acc.mul(&tau_matrix(g, r)))
}

/// Matrix of `τ^d_r` on the dual graph.
pub fn tau_dual_matrix(g: &DGraph, r: usize) -> RepMatrix {
    tau_matrix(&g.dual(), r)
}

/// Generators `r` for which `τ_r` of the dual is not the transpose of `τ_r`.
pub fn tau_duality_failures(g: &DGraph) -> Vec<usize> {
    let dual = g.dual();
    (0..g.datum().coxeter.rank())
        .filter(|&r| tau_matrix(&dual, r) != tau_matrix(g, r).transpose())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFailure {
    pub r: usize,
    pub columns: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidFailure {
    pub r: usize,
    pub s: usize,
    pub columns: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DGraphReport {
    pub quadratic: Vec<QuadraticFailure>,
    pub braid: Vec<BraidFailure>,
}

impl DGraphReport {
    pub fn pass(&self) -> bool {
        self.quadratic.is_empty() && self.braid.is_empty()
    }
}

/// Verifies `(τ_r - a_r)(τ_r + b_r) = 0` for every `r` and the braid
/// relation for every unordered pair of finite order.
pub fn check_dgraph(g: &DGraph) -> DGraphReport {
    let n = g.quiver().num_vertices();
    let d = g.datum();
    let id = RepMatrix::identity(n);
    let mut report = DGraphReport::default();
    for r in 0..d.coxeter.rank() {
        let t = tau_matrix(g, r);
        let lhs = t.sub(&id.scale(&d.a[r])).mul(&t.add(&id.scale(&d.b[r])));
        if !lhs.is_zero() {
            report.quadratic.push(QuadraticFailure { r, columns: lhs.nonzero_columns() });
        }
    }
    for (r, s) in d.coxeter.s2fin() {
        if r > s {
            continue;
        }
        let m = d.coxeter.order(r, s).finite().expect("finite order") as usize;
        let diff = tau_word(g, &alternating_word(r, s, m)).sub(&tau_word(g, &alternating_word(s, r, m)));
        if !diff.is_zero() {
            report.braid.push(BraidFailure { r, s, columns: diff.nonzero_columns() });
        }
    }
    report
}
