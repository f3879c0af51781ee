//! Paths and the path algebra `A[Γ]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Quiver;
use crate::laurent::{LaurentPoly, SpecializationMap};

/// A path `x0 <-e1- x1 <- ... <-en- xn`, edges listed from the target end.
/// Length-zero paths are the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    target: usize,
    source: usize,
    edges: Vec<usize>,
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.target.cmp(&other.target))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Path {
    pub fn vertex(x: usize) -> Self {
        Self { target: x, source: x, edges: Vec::new() }
    }

    pub fn edge(q: &Quiver, e: usize) -> Self {
        let edge = q.edge(e);
        Self { target: edge.target, source: edge.source, edges: vec![e] }
    }

    /// Path through the given edges, target end first.
    pub fn from_edges(q: &Quiver, edges: Vec<usize>) -> Result<Self> {
        let (first, last) = match (edges.first(), edges.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(Error::Invalid("empty edge list".into())),
        };
        for w in edges.windows(2) {
            if q.edge(w[0]).source != q.edge(w[1]).target {
                return Err(Error::Invalid(format!(
                    "edges {} and {} do not compose",
                    q.edge(w[0]).id,
                    q.edge(w[1]).id
                )));
            }
        }
        Ok(Self { target: q.edge(first).target, source: q.edge(last).source, edges })
    }

    /// Path through a vertex sequence in a quiver with at most one edge per
    /// ordered pair.
    pub fn through(q: &Quiver, vertices: &[usize]) -> Result<Self> {
        match vertices {
            [] => Err(Error::Invalid("empty vertex sequence".into())),
            [x] => Ok(Self::vertex(*x)),
            _ => {
                let mut edges = Vec::with_capacity(vertices.len() - 1);
                for w in vertices.windows(2) {
                    let mut found = q.edges_between(w[0], w[1]);
                    let e = found.next().ok_or_else(|| {
                        Error::UnknownEdge(format!("{}<-{}", q.vertex_name(w[0]), q.vertex_name(w[1])))
                    })?;
                    if found.next().is_some() {
                        return Err(Error::Invalid("ambiguous vertex sequence in a multigraph".into()));
                    }
                    edges.push(e);
                }
                Self::from_edges(q, edges)
            }
        }
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertex sequence from target to source.
    pub fn vertex_sequence(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.target];
        out.extend(self.edges.iter().map(|&e| q.edge(e).source));
        out
    }

    /// `self · other`, or `None` when `s(self) != t(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut edges = Vec::with_capacity(self.edges.len() + other.edges.len());
        edges.extend_from_slice(&self.edges);
        edges.extend_from_slice(&other.edges);
        Some(Path { target: self.target, source: other.source, edges })
    }

    /// The same edges read backwards, as a path of the dual quiver.
    pub fn reversed(&self) -> Path {
        Path {
            target: self.source,
            source: self.target,
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, q: &Quiver, compressed: bool) -> String {
        if compressed {
            let names: Vec<&str> = self.vertex_sequence(q).into_iter().map(|x| q.vertex_name(x)).collect();
            return names.join(".");
        }
        let mut out = q.vertex_name(self.target).to_string();
        for &e in &self.edges {
            let edge = q.edge(e);
            let _ = write!(out, "<-{}-{}", edge.id, q.vertex_name(edge.source));
        }
        out
    }

    /// Parses `x<-e1-y<-e2-z`, or `x.y.z` in a quiver without parallel
    /// edges, or a bare vertex id.
    pub fn parse(q: &Quiver, text: &str) -> Result<Path> {
        let text = text.trim();
        let err = |reason: &str| Error::ParsePath { input: text.to_string(), reason: reason.to_string() };
        if let Ok(x) = q.vertex(text) {
            return Ok(Path::vertex(x));
        }
        if text.contains("<-") {
            for x in 0..q.num_vertices() {
                if let Some(rest) = text.strip_prefix(q.vertex_name(x)) {
                    if let Some(edges) = parse_full_tail(q, x, rest) {
                        return if edges.is_empty() {
                            Ok(Path::vertex(x))
                        } else {
                            Path::from_edges(q, edges)
                        };
                    }
                }
            }
            return Err(err("no matching edge sequence"));
        }
        if !q.is_simple() {
            return Err(err("compressed syntax needs at most one edge per vertex pair"));
        }
        let vertices = text
            .split('.')
            .map(|v| q.vertex(v))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| err("unknown vertex"))?;
        Path::through(q, &vertices).map_err(|_| err("consecutive vertices are not joined by an edge"))
    }
}

fn parse_full_tail(q: &Quiver, at: usize, rest: &str) -> Option<Vec<usize>> {
    if rest.is_empty() {
        return Some(Vec::new());
    }
    let rest = rest.strip_prefix("<-")?;
    for &e in q.edges_into(at) {
        let edge = q.edge(e);
        let Some(after) = rest.strip_prefix(edge.id.as_str()).and_then(|r| r.strip_prefix('-')) else {
            continue;
        };
        let Some(tail) = after.strip_prefix(q.vertex_name(edge.source)) else {
            continue;
        };
        if let Some(mut more) = parse_full_tail(q, edge.source, tail) {
            more.insert(0, e);
            return Some(more);
        }
    }
    None
}

/// Random path of length at most `max_len`, grown from a random target.
pub fn random_path<R: Rng>(q: &Quiver, rng: &mut R, max_len: usize) -> Path {
    let x = rng.gen_range(0..q.num_vertices());
    let len = rng.gen_range(0..=max_len);
    let mut p = Path::vertex(x);
    for _ in 0..len {
        let choices = q.edges_into(p.source);
        if choices.is_empty() {
            break;
        }
        let e = choices[rng.gen_range(0..choices.len())];
        p = p.concat(&Path::edge(q, e)).expect("edge starts at the source");
    }
    p
}

/// Element of `A[Γ]`: finite sum of paths with Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathElem {
    terms: BTreeMap<Path, LaurentPoly>,
}

impl PathElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::term(LaurentPoly::one(), p)
    }

    pub fn vertex(x: usize) -> Self {
        Self::from_path(Path::vertex(x))
    }

    pub fn term(c: LaurentPoly, p: Path) -> Self {
        let mut out = Self::zero();
        out.add_term(p, &c);
        out
    }

    /// `1 = Σ_x x`.
    pub fn identity(q: &Quiver) -> Self {
        let mut out = Self::zero();
        for x in 0..q.num_vertices() {
            out.add_term(Path::vertex(x), &LaurentPoly::one());
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Path, LaurentPoly)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, &c);
        }
        out
    }

    pub fn add_term(&mut self, p: Path, c: &LaurentPoly) {
        self.add_term_owned(p, c.clone());
    }

    fn add_term_owned(&mut self, p: Path, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: &Path) -> LaurentPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// Largest path in the canonical order, with its coefficient.
    pub fn leading(&self) -> Option<(&Path, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    /// Maximal path length.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_constant)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(p, a)| (p.clone(), a * c)))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    pub fn specialize(&self, f: &SpecializationMap) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, a)| (p.clone(), a.specialize(f))))
    }

    /// Applies a map on paths linearly.
    pub fn map_paths<F: FnMut(&Path) -> Path>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, a)| (f(p), a.clone())))
    }

    /// Components `Σ_p coeff_i(c_p) p`, one per occurring power `v^i`.
    pub fn decompose_by_vpower(&self) -> BTreeMap<i64, PathElem> {
        let mut out: BTreeMap<i64, PathElem> = BTreeMap::new();
        for (p, c) in &self.terms {
            for (i, a) in c.terms() {
                out.entry(i).or_default().add_term_owned(p.clone(), LaurentPoly::constant(a.clone()));
            }
        }
        out
    }

    pub fn from_vpower_components(parts: &BTreeMap<i64, PathElem>) -> Self {
        let mut out = Self::zero();
        for (&i, part) in parts {
            out += &part.scale(&LaurentPoly::monomial(1, i));
        }
        out
    }

    /// `x · self · y`.
    pub fn peirce(&self, x: usize, y: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.target == x && p.source == y)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits by source vertex: `self = Σ_z self · z`.
    pub fn split_by_source(&self) -> BTreeMap<usize, PathElem> {
        let mut out: BTreeMap<usize, PathElem> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.source).or_default().terms.insert(p.clone(), c.clone());
        }
        out
    }

    /// Splits by `(target, source)`.
    pub fn split_by_block(&self) -> BTreeMap<(usize, usize), PathElem> {
        let mut out: BTreeMap<(usize, usize), PathElem> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry((p.target, p.source)).or_default().terms.insert(p.clone(), c.clone());
        }
        out
    }

    /// Multiplies by `-1` if needed so that the leading coefficient is
    /// positive. Only meaningful for integral elements.
    pub fn sign_normalized(self) -> Self {
        match self.leading() {
            Some((_, c)) if c.as_constant().is_some_and(|a| a < BigInt::from(0)) => -self,
            _ => self,
        }
    }

    pub fn display(&self, q: &Quiver, compressed: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (p, c)) in self.terms.iter().rev().enumerate() {
            let path = p.display(q, compressed);
            match c.as_constant() {
                Some(a) => {
                    let neg = a < BigInt::from(0);
                    let mag = if neg { -a } else { a };
                    match (k, neg) {
                        (0, true) => out.push('-'),
                        (0, false) => {}
                        (_, true) => out.push_str(" - "),
                        (_, false) => out.push_str(" + "),
                    }
                    if mag != BigInt::from(1) {
                        let _ = write!(out, "{mag}*");
                    }
                }
                None => {
                    if k > 0 {
                        out.push_str(" + ");
                    }
                    let _ = write!(out, "({c})*");
                }
            }
            out.push_str(&path);
        }
        out
    }

    /// Parses sums such as `y.z.y - y` or `(v + v^-1)*x<-e-y + 2*x`.
    /// Binary `+`/`-` must be surrounded by whitespace.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParsePath { input: text.to_string(), reason: reason.to_string() };
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero());
        }
        let chars: Vec<char> = text.chars().collect();
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut negative = false;
        let mut current = String::new();
        for (k, &ch) in chars.iter().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            let spaced = k > 0 && k + 1 < chars.len() && chars[k - 1].is_whitespace() && chars[k + 1].is_whitespace();
            if depth == 0 && (ch == '+' || ch == '-') && spaced {
                pieces.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        pieces.push((negative, current));
        let mut out = Self::zero();
        for (neg, piece) in pieces {
            let mut piece = piece.trim();
            let mut neg = neg;
            if let Some(rest) = piece.strip_prefix('-') {
                neg = !neg;
                piece = rest.trim_start();
            }
            if piece.is_empty() {
                return Err(err("empty term"));
            }
            let (coef, path) = match split_coefficient(piece) {
                Some((c, p)) => {
                    let c = c.trim();
                    let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
                    (c.parse::<LaurentPoly>()?, p)
                }
                None => (LaurentPoly::one(), piece),
            };
            let coef = if neg { -coef } else { coef };
            out += &Self::term(coef, Path::parse(q, path)?);
        }
        Ok(out)
    }
}

fn split_coefficient(piece: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (k, ch) in piece.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => return Some((&piece[..k], &piece[k + 1..])),
            _ => {}
        }
    }
    None
}

impl std::fmt::Debug for PathElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| format!("({c})*{}<-{:?}-{}", p.target, p.edges, p.source))
            .collect();
        write!(f, "PathElem[{}]", items.join(" + "))
    }
}

impl AddAssign<&PathElem> for PathElem {
    fn add_assign(&mut self, rhs: &PathElem) {
        for (p, c) in &rhs.terms {
            self.add_term_owned(p.clone(), c.clone());
        }
    }
}

impl SubAssign<&PathElem> for PathElem {
    fn sub_assign(&mut self, rhs: &PathElem) {
        for (p, c) in &rhs.terms {
            self.add_term_owned(p.clone(), -c);
        }
    }
}

impl Add<&PathElem> for &PathElem {
    type Output = PathElem;
    fn add(self, rhs: &PathElem) -> PathElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PathElem> for &PathElem {
    type Output = PathElem;
    fn sub(self, rhs: &PathElem) -> PathElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for PathElem {
    type Output = PathElem;
    fn add(mut self, rhs: PathElem) -> PathElem {
        self += &rhs;
        self
    }
}

impl Sub for PathElem {
    type Output = PathElem;
    fn sub(mut self, rhs: PathElem) -> PathElem {
        self -= &rhs;
        self
    }
}

impl Neg for &PathElem {
    type Output = PathElem;
    fn neg(self) -> PathElem {
        PathElem { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Neg for PathElem {
    type Output = PathElem;
    fn neg(self) -> PathElem {
        -&self
    }
}

impl Mul<&PathElem> for &PathElem {
    type Output = PathElem;
    fn mul(self, rhs: &PathElem) -> PathElem {
        let mut by_target: BTreeMap<usize, Vec<(&Path, &LaurentPoly)>> = BTreeMap::new();
        for (q, b) in &rhs.terms {
            by_target.entry(q.target).or_default().push((q, b));
        }
        let mut out = PathElem::zero();
        for (p, a) in &self.terms {
            if let Some(list) = by_target.get(&p.source) {
                for (q, b) in list {
                    let pq = p.concat(q).expect("matching endpoints");
                    out.add_term_owned(pq, a * *b);
                }
            }
        }
        out
    }
}

impl Mul for PathElem {
    type Output = PathElem;
    fn mul(self, rhs: PathElem) -> PathElem {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn quiver() -> Quiver {
        let v = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let e = |i: &str, t: &str, s: &str| (i.to_string(), t.to_string(), s.to_string());
        Quiver::new(
            v,
            vec![
                e("a", "x", "y"),
                e("b", "y", "z"),
                e("c", "z", "w"),
                e("d", "y", "x"),
                e("l", "x", "x"),
                e("f", "w", "y"),
            ],
        )
        .unwrap()
    }

    fn p(q: &Quiver, s: &str) -> Path {
        Path::parse(q, s).unwrap()
    }

    fn el(q: &Quiver, s: &str) -> PathElem {
        PathElem::parse(q, s).unwrap()
    }

    #[test]
    fn concatenation() {
        let q = quiver();
        let xy = p(&q, "x.y");
        let yz = p(&q, "y.z");
        assert_eq!(xy.concat(&yz), Some(p(&q, "x.y.z")));
        assert_eq!(xy.concat(&p(&q, "z.w")), None);
        assert_eq!(Path::vertex(0).concat(&xy), Some(xy.clone()));
        assert_eq!(xy.concat(&Path::vertex(1)), Some(xy.clone()));
    }

    #[test]
    fn idempotents_and_identity() {
        let q = quiver();
        let x = PathElem::vertex(0);
        let y = PathElem::vertex(1);
        assert_eq!(&x * &x, x);
        assert!((&x * &y).is_zero());
        let one = PathElem::identity(&q);
        let u = el(&q, "x.y.z - 3*y + (v + v^-1)*x.x");
        assert_eq!(&one * &u, u);
        assert_eq!(&u * &one, u);
    }

    #[test]
    fn scalar_bilinearity() {
        let q = quiver();
        let a = PathElem::from_path(p(&q, "x.y")).scale(&LaurentPoly::v());
        let b = PathElem::from_path(p(&q, "y.z")).scale(&LaurentPoly::v_inv());
        assert_eq!(&a * &b, PathElem::from_path(p(&q, "x.y.z")));
    }

    #[test]
    fn vpower_decomposition() {
        let q = quiver();
        let path = p(&q, "x.y");
        let u = PathElem::term(LaurentPoly::beta(), path.clone());
        let parts = u.decompose_by_vpower();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1], PathElem::from_path(path.clone()));
        assert_eq!(parts[&-1], PathElem::from_path(path));
        let w = el(&q, "3*x.y - 2*y.z");
        assert_eq!(w.decompose_by_vpower().into_iter().collect::<Vec<_>>(), vec![(0, w.clone())]);
        assert!(PathElem::zero().decompose_by_vpower().is_empty());
    }

    #[test]
    fn path_syntax() {
        let q = quiver();
        let full = p(&q, "x<-a-y<-b-z");
        assert_eq!(full, p(&q, "x.y.z"));
        assert_eq!(full.display(&q, false), "x<-a-y<-b-z");
        assert_eq!(full.display(&q, true), "x.y.z");
        assert_eq!(p(&q, "w"), Path::vertex(3));
        assert!(Path::parse(&q, "x.z").is_err());
        assert!(Path::parse(&q, "x<-b-z").is_err());
        assert!(Path::parse(&q, "q").is_err());
    }

    #[test]
    fn element_syntax() {
        let q = quiver();
        let u = el(&q, "y.z.w - 2*y + (v + v^-1)*x.y");
        assert_eq!(u.display(&q, true), "y.z.w + (v + v^-1)*x.y - 2*y");
        assert_eq!(el(&q, &u.display(&q, true)), u);
        assert_eq!(el(&q, "-x.y + x.y"), PathElem::zero());
        assert_eq!(el(&q, "-x").display(&q, true), "-x");
        assert!(PathElem::parse(&q, "x.y +").is_err());
    }

    #[test]
    fn peirce_and_splitting() {
        let q = quiver();
        let u = el(&q, "x.y.z + x.y + 2*x.x.y - y.z");
        assert_eq!(u.peirce(0, 1), el(&q, "x.y + 2*x.x.y"));
        let split = u.split_by_source();
        assert_eq!(split[&2], el(&q, "x.y.z - y.z"));
        let total = split.values().fold(PathElem::zero(), |acc, s| acc + s.clone());
        assert_eq!(total, u);
        assert_eq!(u.degree(), Some(2));
        assert_eq!(el(&q, "-x.y.z + y").sign_normalized(), el(&q, "x.y.z - y"));
    }

    fn random_elem(q: &Quiver, rng: &mut ChaCha8Rng) -> PathElem {
        let n = rng.gen_range(0..4);
        PathElem::from_terms((0..n).map(|_| {
            let c = LaurentPoly::monomial(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
            (random_path(q, rng, 3), c)
        }))
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(seed in any::<u64>()) {
            let q = quiver();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b, c) = (random_elem(&q, &mut rng), random_elem(&q, &mut rng), random_elem(&q, &mut rng));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn peirce_keeps_matching_terms(seed in any::<u64>(), x in 0usize..4, y in 0usize..4) {
            let q = quiver();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_elem(&q, &mut rng);
            let projected = &(&PathElem::vertex(x) * &u) * &PathElem::vertex(y);
            prop_assert_eq!(&projected, &u.peirce(x, y));
            for (p, _) in projected.terms() {
                prop_assert!(p.target() == x && p.source() == y);
            }
        }

        #[test]
        fn vpower_round_trip(seed in any::<u64>()) {
            let q = quiver();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_elem(&q, &mut rng);
            let parts = u.decompose_by_vpower();
            prop_assert!(parts.values().all(|c| c.is_integral() && !c.is_zero()));
            prop_assert_eq!(PathElem::from_vpower_components(&parts), u);
        }

        #[test]
        fn display_round_trip(seed in any::<u64>()) {
            let q = quiver();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_elem(&q, &mut rng);
            prop_assert_eq!(el(&q, &u.display(&q, true)), u.clone());
            prop_assert_eq!(el(&q, &u.display(&q, false)), u);
        }
    }
}
