//! Integer lattices of path-algebra elements and the canonical
//! interreduction of generating families.
//!
//! Elements are compared through their Hermite normal form over `Z` with
//! respect to the canonical path order: the pivot of a row is its largest
//! path, pivot coefficients are positive, and every other row entry in a
//! pivot column lies in `[0, pivot)`.
//!
//! [`interreduce`] processes candidate generators by increasing degree.
//! Candidates of degree `L` in the block `(t, s)` are reduced against the
//! span of all two-sided multiples `p·h·q` of previously kept generators
//! `h` that stay within degree `L`; Hermite rows that are not yet
//! spanned are kept, in increasing pivot order. This certifies that the
//! dropped elements are redundant; it does not decide ideal membership.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::graph::Quiver;
use crate::laurent::LaurentPoly;
use crate::pathalg::{Path, PathElem};
use crate::rho::{GeneratorEntry, GeneratorSet};

/// Sparse integer row indexed by paths.
pub type ZRow = BTreeMap<Path, BigInt>;

/// Integer coefficients of an integral element.
pub fn to_row(u: &PathElem) -> ZRow {
    u.terms()
        .map(|(p, c)| (p.clone(), c.as_constant().expect("integral element")))
        .collect()
}

pub fn from_row(row: &ZRow) -> PathElem {
    PathElem::from_terms(row.iter().map(|(p, c)| (p.clone(), LaurentPoly::constant(c.clone()))))
}

fn axpy(row: &mut ZRow, c: &BigInt, other: &ZRow) {
    if c.is_zero() {
        return;
    }
    for (p, a) in other {
        let slot = row.entry(p.clone()).or_insert_with(BigInt::zero);
        *slot += c * a;
        if slot.is_zero() {
            row.remove(p);
        }
    }
}

fn scaled(row: &ZRow, c: &BigInt) -> ZRow {
    row.iter().map(|(p, a)| (p.clone(), a * c)).collect()
}

/// Row echelon basis of a `Z`-submodule of `Z[paths]`.
#[derive(Clone, Debug, Default)]
pub struct Lattice {
    rows: BTreeMap<Path, ZRow>,
}

impl Lattice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut row: ZRow) {
        loop {
            let Some((lead, c)) = row.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) else {
                return;
            };
            let Some(pivot_row) = self.rows.get(&lead) else {
                if c.is_negative() {
                    row = scaled(&row, &-BigInt::one());
                }
                self.rows.insert(lead, row);
                return;
            };
            let p = pivot_row[&lead].clone();
            if c.is_multiple_of(&p) {
                let k = -(&c / &p);
                let pr = pivot_row.clone();
                axpy(&mut row, &k, &pr);
                continue;
            }
            let eg = p.extended_gcd(&c);
            let pr = pivot_row.clone();
            let mut new_pivot = scaled(&pr, &eg.x);
            axpy(&mut new_pivot, &eg.y, &row);
            let mut rest = scaled(&row, &(&p / &eg.gcd));
            axpy(&mut rest, &-(&c / &eg.gcd), &pr);
            if new_pivot[&lead].is_negative() {
                new_pivot = scaled(&new_pivot, &-BigInt::one());
            }
            self.rows.insert(lead, new_pivot);
            row = rest;
        }
    }

    /// Remainder of `row` after subtracting lattice rows from the top down,
    /// with each pivot-column entry brought into `[0, pivot)`.
    pub fn reduce(&self, mut row: ZRow) -> ZRow {
        let mut cursor: Option<Path> = None;
        loop {
            let next = match &cursor {
                None => row.keys().next_back().cloned(),
                Some(c) => row.range(..c.clone()).next_back().map(|(p, _)| p.clone()),
            };
            let Some(p) = next else {
                return row;
            };
            if let Some(pr) = self.rows.get(&p) {
                let piv = &pr[&p];
                let k = row[&p].div_floor(piv);
                if !k.is_zero() {
                    axpy(&mut row, &-k, pr);
                }
            }
            cursor = Some(p);
        }
    }

    /// Whether `row` lies in the lattice.
    pub fn contains(&self, row: &ZRow) -> bool {
        let mut row = row.clone();
        loop {
            let Some((lead, c)) = row.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) else {
                return true;
            };
            let Some(pr) = self.rows.get(&lead) else {
                return false;
            };
            let piv = &pr[&lead];
            if !c.is_multiple_of(piv) {
                return false;
            }
            axpy(&mut row, &-(&c / piv), pr);
        }
    }

    /// The Hermite normal form, rows in increasing pivot order.
    pub fn hermite_rows(&self) -> Vec<ZRow> {
        self.rows
            .iter()
            .map(|(p, row)| {
                let head: ZRow = [(p.clone(), row[p].clone())].into_iter().collect();
                let mut tail = row.clone();
                tail.remove(p);
                let mut reduced = self.reduce(tail);
                reduced.extend(head);
                reduced
            })
            .collect()
    }
}

/// All paths with the given target and length at most `max_len`, grown at
/// the source end, keyed by source.
fn paths_from_target(q: &Quiver, t: usize, max_len: usize) -> HashMap<usize, Vec<Path>> {
    let mut out: HashMap<usize, Vec<Path>> = HashMap::new();
    let mut layer = vec![Path::vertex(t)];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for p in &layer {
            out.entry(p.source()).or_default().push(p.clone());
            if len < max_len {
                for &e in q.edges_into(p.source()) {
                    next.push(p.concat(&Path::edge(q, e)).expect("composable"));
                }
            }
        }
        layer = next;
    }
    out
}

/// All paths with the given source and length at most `max_len`, keyed by
/// target.
fn paths_to_source(q: &Quiver, s: usize, max_len: usize) -> HashMap<usize, Vec<Path>> {
    let mut out: HashMap<usize, Vec<Path>> = HashMap::new();
    let mut layer = vec![Path::vertex(s)];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for p in &layer {
            out.entry(p.target()).or_default().push(p.clone());
            if len < max_len {
                for &e in q.edges_out_of(p.target()) {
                    next.push(Path::edge(q, e).concat(p).expect("composable"));
                }
            }
        }
        layer = next;
    }
    out
}

struct Kept {
    row: ZRow,
    target: usize,
    source: usize,
    degree: usize,
}

/// Span of the multiples `p·h·q` in block `(t, s)` of total degree at most
/// `max_deg`.
fn multiples_lattice(q: &Quiver, kept: &[Kept], t: usize, s: usize, max_deg: usize) -> Lattice {
    let mut lattice = Lattice::new();
    let slack = kept.iter().map(|h| max_deg.saturating_sub(h.degree)).max().unwrap_or(0);
    let lefts = paths_from_target(q, t, slack);
    let rights = paths_to_source(q, s, slack);
    let empty = Vec::new();
    for h in kept.iter().filter(|h| h.degree <= max_deg) {
        let room = max_deg - h.degree;
        for p in lefts.get(&h.target).unwrap_or(&empty).iter().filter(|p| p.len() <= room) {
            for r in rights.get(&h.source).unwrap_or(&empty).iter().filter(|r| p.len() + r.len() <= room) {
                let row: ZRow = h
                    .row
                    .iter()
                    .map(|(path, c)| {
                        let full = p.concat(path).and_then(|pp| pp.concat(r)).expect("block endpoints");
                        (full, c.clone())
                    })
                    .collect();
                lattice.insert(row);
            }
        }
    }
    lattice
}

/// Canonical interreduction of a generating family.
///
/// Candidates are split into `(target, source)` blocks first. The result
/// generates the same two-sided ideal as the input.
pub fn interreduce(q: &Quiver, candidates: Vec<GeneratorEntry>) -> GeneratorSet {
    let mut pieces: Vec<(usize, (usize, usize), GeneratorEntry)> = Vec::new();
    for c in candidates {
        for (block, body) in c.body.split_by_block() {
            let degree = body.degree().expect("nonzero piece");
            pieces.push((degree, block, GeneratorEntry { body, ..c.clone() }));
        }
    }
    pieces.sort_by_key(|p| (p.0, p.1));

    let mut kept: Vec<Kept> = Vec::new();
    let mut out: Vec<GeneratorEntry> = Vec::new();
    let mut start = 0;
    while start < pieces.len() {
        let (degree, block) = (pieces[start].0, pieces[start].1);
        let end = start + pieces[start..].iter().take_while(|p| (p.0, p.1) == (degree, block)).count();
        let group = &pieces[start..end];
        start = end;

        let base = multiples_lattice(q, &kept, block.0, block.1, degree);
        let mut all = base.clone();
        for (_, _, c) in group {
            all.insert(to_row(&c.body));
        }
        let residues: Vec<ZRow> = group.iter().map(|(_, _, c)| base.reduce(to_row(&c.body))).collect();
        let mut current = base;
        for row in all.hermite_rows() {
            if current.contains(&row) {
                continue;
            }
            current.insert(row.clone());
            let lead = row.keys().next_back().cloned();
            let origin = residues
                .iter()
                .position(|res| res.keys().next_back().cloned() == lead)
                .unwrap_or(0);
            let entry = GeneratorEntry { body: from_row(&row), ..group[origin].2.clone() };
            kept.push(Kept { row, target: block.0, source: block.1, degree });
            out.push(entry);
        }
    }
    GeneratorSet::new(out)
}

/// Whether `u` is a `Z`-combination of the given elements.
pub fn in_span(u: &PathElem, basis: &[PathElem]) -> bool {
    let mut lattice = Lattice::new();
    for b in basis {
        lattice.insert(to_row(b));
    }
    lattice.contains(&to_row(u))
}

/// Whether every element of `gens_a` is a bounded two-sided combination of
/// `gens_b`, using multiples up to the element's own degree plus `extra`.
pub fn generated_within(q: &Quiver, gens_a: &GeneratorSet, gens_b: &GeneratorSet, extra: usize) -> bool {
    let kept: Vec<Kept> = gens_b
        .entries()
        .iter()
        .flat_map(|e| e.body.split_by_block())
        .map(|((t, s), body)| Kept { degree: body.degree().unwrap_or(0), row: to_row(&body), target: t, source: s })
        .collect();
    gens_a.entries().iter().all(|e| {
        e.body.split_by_block().into_iter().all(|((t, s), body)| {
            let deg = body.degree().unwrap_or(0) + extra;
            multiples_lattice(q, &kept, t, s, deg).contains(&to_row(&body))
        })
    })
}
