//! Coxeter matrices, Hecke datums and generator words.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, SpecializationMap};

/// Order `m(r, s)` of `rs` in `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterOrder {
    Finite(u32),
    Infinite,
}

impl CoxeterOrder {
    pub fn finite(self) -> Option<u32> {
        match self {
            CoxeterOrder::Finite(m) => Some(m),
            CoxeterOrder::Infinite => None,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, CoxeterOrder::Finite(m) if m % 2 == 1)
    }
}

impl fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterOrder::Finite(m) => write!(f, "{m}"),
            CoxeterOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Generators `S` together with an explicit Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDatum {
    generators: Vec<String>,
    matrix: Vec<Vec<CoxeterOrder>>,
    index: HashMap<String, usize>,
}

impl CoxeterDatum {
    pub fn new(generators: Vec<String>, matrix: Vec<Vec<CoxeterOrder>>) -> Result<Self> {
        let n = generators.len();
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.clone(), i).is_some() {
                return Err(Error::CoxeterMatrix(format!("duplicate generator {g:?}")));
            }
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::CoxeterMatrix(format!("matrix must be {n}x{n}")));
        }
        for i in 0..n {
            if matrix[i][i] != CoxeterOrder::Finite(1) {
                return Err(Error::CoxeterMatrix(format!(
                    "m({0}, {0}) must be 1",
                    generators[i]
                )));
            }
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::CoxeterMatrix(format!(
                        "m({}, {}) != m({}, {})",
                        generators[i], generators[j], generators[j], generators[i]
                    )));
                }
                if i != j && matches!(matrix[i][j], CoxeterOrder::Finite(m) if m < 2) {
                    return Err(Error::CoxeterMatrix(format!(
                        "m({}, {}) must be at least 2",
                        generators[i], generators[j]
                    )));
                }
            }
        }
        Ok(Self { generators, matrix, index })
    }

    /// Rank-two system `{r, s}` with `m(r, s) = m`.
    pub fn dihedral(r: &str, s: &str, m: CoxeterOrder) -> Result<Self> {
        let one = CoxeterOrder::Finite(1);
        Self::new(vec![r.to_string(), s.to_string()], vec![vec![one, m], vec![m, one]])
    }

    /// Convenience constructor from integer orders, `0` meaning infinity.
    pub fn from_orders(generators: &[&str], orders: &[&[u32]]) -> Result<Self> {
        let matrix = orders
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&m| if m == 0 { CoxeterOrder::Infinite } else { CoxeterOrder::Finite(m) })
                    .collect()
            })
            .collect();
        Self::new(generators.iter().map(|g| g.to_string()).collect(), matrix)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn name(&self, r: usize) -> &str {
        &self.generators[r]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn order(&self, r: usize, s: usize) -> CoxeterOrder {
        self.matrix[r][s]
    }

    pub fn matrix(&self) -> &[Vec<CoxeterOrder>] {
        &self.matrix
    }

    /// Ordered pairs `(r, s)`, `r != s`, with finite `m(r, s)`, in
    /// lexicographic index order.
    pub fn s2fin(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for r in 0..n {
            for s in 0..n {
                if r != s && self.matrix[r][s].finite().is_some() {
                    out.push((r, s));
                }
            }
        }
        out
    }

    /// Connected components of the graph on `S` whose edges are the pairs
    /// with odd `m(r, s)`. Two simple reflections are conjugate in `W`
    /// exactly when they lie in the same component.
    pub fn odd_components(&self) -> Vec<usize> {
        let n = self.rank();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for r in 0..n {
            for s in (r + 1)..n {
                if self.matrix[r][s].is_odd() {
                    let (a, b) = (find(&mut parent, r), find(&mut parent, s));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }
}

/// A finite sequence of generator indices.
///
/// Words act by composition: `[w0, w1, ..., wk]` denotes the operator
/// `op(w0) ∘ op(w1) ∘ ... ∘ op(wk)`, so the last letter is applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenWord(pub Vec<usize>);

impl GenWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn parse(coxeter: &CoxeterDatum, text: &str) -> Result<Self> {
        let letters = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| coxeter.index_of(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(letters))
    }

    pub fn display(&self, coxeter: &CoxeterDatum) -> String {
        let names: Vec<&str> = self.0.iter().map(|&r| coxeter.name(r)).collect();
        format!("[{}]", names.join(","))
    }

    /// Whether consecutive letters always differ and only `r`, `s` occur.
    pub fn alternates_in(&self, r: usize, s: usize) -> bool {
        self.0.iter().all(|&t| t == r || t == s) && self.0.windows(2).all(|w| w[0] != w[1])
    }
}

/// The alternating word `r s r ...` of length `m`.
pub fn alternating_word(r: usize, s: usize, m: usize) -> GenWord {
    GenWord((0..m).map(|k| if k % 2 == 0 { r } else { s }).collect())
}

/// Hecke datum `(W, S, Z[v, v^-1], (a_r), (b_r))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeDatum {
    pub coxeter: CoxeterDatum,
    pub a: Vec<LaurentPoly>,
    pub b: Vec<LaurentPoly>,
}

/// Which parameter family a validation failure refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamFamily {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamViolation {
    pub family: ParamFamily,
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeReport {
    pub violations: Vec<ParamViolation>,
}

impl HeckeReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl HeckeDatum {
    /// Equal-parameter datum `a_r = v`, `b_r = v^-1`.
    pub fn d_z(coxeter: CoxeterDatum) -> Self {
        let n = coxeter.rank();
        Self {
            coxeter,
            a: vec![LaurentPoly::v(); n],
            b: vec![LaurentPoly::v_inv(); n],
        }
    }

    pub fn new(coxeter: CoxeterDatum, a: Vec<LaurentPoly>, b: Vec<LaurentPoly>) -> Result<Self> {
        if a.len() != coxeter.rank() || b.len() != coxeter.rank() {
            return Err(Error::Invalid("parameter families must cover S".into()));
        }
        Ok(Self { coxeter, a, b })
    }

    pub fn is_d_z(&self) -> bool {
        self.a.iter().all(|p| *p == LaurentPoly::v()) && self.b.iter().all(|p| *p == LaurentPoly::v_inv())
    }

    /// `D^d`: parameters `(a, b) -> (-b, -a)`.
    pub fn dual(&self) -> Self {
        Self {
            coxeter: self.coxeter.clone(),
            a: self.b.iter().map(|p| -p).collect(),
            b: self.a.iter().map(|p| -p).collect(),
        }
    }

    pub fn specialize(&self, f: &SpecializationMap) -> Self {
        Self {
            coxeter: self.coxeter.clone(),
            a: self.a.iter().map(|p| p.specialize(f)).collect(),
            b: self.b.iter().map(|p| p.specialize(f)).collect(),
        }
    }

    /// Checks that both parameter families are constant on conjugacy
    /// classes of simple reflections.
    pub fn validate(&self) -> HeckeReport {
        let comp = self.coxeter.odd_components();
        let n = self.coxeter.rank();
        let mut violations = Vec::new();
        for r in 0..n {
            for s in (r + 1)..n {
                if comp[r] != comp[s] {
                    continue;
                }
                if self.a[r] != self.a[s] {
                    violations.push(ParamViolation { family: ParamFamily::A, r, s });
                }
                if self.b[r] != self.b[s] {
                    violations.push(ParamViolation { family: ParamFamily::B, r, s });
                }
            }
        }
        HeckeReport { violations }
    }
}
