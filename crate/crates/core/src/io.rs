//! JSON input and output formats.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coxeter::{CoxeterDatum, CoxeterOrder, HeckeDatum};
use crate::error::{Error, Result};
use crate::graph::{DGraph, PreDGraph, Quiver};
use crate::laurent::LaurentPoly;
use crate::reps::RepMatrix;
use crate::rho::GeneratorSet;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderJson {
    Finite(u32),
    Named(String),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<BTreeMap<String, LaurentPoly>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<BTreeMap<String, LaurentPoly>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoxeterJson {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<OrderJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: String,
    #[serde(default)]
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub target: String,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<LaurentPoly>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub coxeter: CoxeterJson,
    pub vertices: Vec<VertexJson>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
}

fn parse_order(o: &OrderJson) -> Result<CoxeterOrder> {
    match o {
        OrderJson::Finite(m) => Ok(CoxeterOrder::Finite(*m)),
        OrderJson::Named(s) if s == "inf" || s == "∞" => Ok(CoxeterOrder::Infinite),
        OrderJson::Named(s) => Err(Error::Schema(format!("matrix entry {s:?} is neither an integer nor \"inf\""))),
    }
}

fn param_family(
    cox: &CoxeterDatum,
    family: Option<&BTreeMap<String, LaurentPoly>>,
    default: LaurentPoly,
) -> Result<Vec<LaurentPoly>> {
    let mut out = vec![default; cox.rank()];
    let Some(map) = family else {
        return Ok(out);
    };
    if let Some(d) = map.get("default") {
        out = vec![d.clone(); cox.rank()];
    }
    for (k, p) in map {
        if k != "default" {
            out[cox.index_of(k)?] = p.clone();
        }
    }
    Ok(out)
}

impl CoxeterJson {
    pub fn to_datum(&self) -> Result<HeckeDatum> {
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(parse_order).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let cox = CoxeterDatum::new(self.generators.clone(), matrix)?;
        let params = self.params.clone().unwrap_or_default();
        let a = param_family(&cox, params.a.as_ref(), LaurentPoly::v())?;
        let b = param_family(&cox, params.b.as_ref(), LaurentPoly::v_inv())?;
        HeckeDatum::new(cox, a, b)
    }

    pub fn from_datum(d: &HeckeDatum) -> Self {
        let cox = &d.coxeter;
        let matrix = cox
            .matrix()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|o| match o {
                        CoxeterOrder::Finite(m) => OrderJson::Finite(*m),
                        CoxeterOrder::Infinite => OrderJson::Named("inf".into()),
                    })
                    .collect()
            })
            .collect();
        let params = if d.is_d_z() {
            None
        } else {
            let family = |ps: &[LaurentPoly]| {
                cox.generators().iter().cloned().zip(ps.iter().cloned()).collect::<BTreeMap<_, _>>()
            };
            Some(ParamsJson { a: Some(family(&d.a)), b: Some(family(&d.b)) })
        };
        Self { generators: cox.generators().to_vec(), matrix, params }
    }
}

/// A parsed graph file: a pre-D-graph, with weights when every edge
/// carries `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInput {
    pub graph: PreDGraph,
    pub mu: Option<Vec<LaurentPoly>>,
}

impl GraphInput {
    pub fn dgraph(&self) -> Option<DGraph> {
        self.mu.clone().map(|mu| DGraph { base: self.graph.clone(), mu })
    }
}

impl GraphJson {
    pub fn to_input(&self) -> Result<GraphInput> {
        let datum = self.coxeter.to_datum()?;
        let labels = self
            .vertices
            .iter()
            .map(|v| {
                v.labels
                    .iter()
                    .map(|l| datum.coxeter.index_of(l))
                    .collect::<Result<BTreeSet<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let id = e.id.clone().unwrap_or_else(|| format!("{}<-{}", e.target, e.source));
                (id, e.target.clone(), e.source.clone())
            })
            .collect();
        let quiver = Quiver::new(self.vertices.iter().map(|v| v.id.clone()).collect(), edges)?;
        let graph = PreDGraph::new(quiver, labels, datum)?;
        let with_mu = self.edges.iter().filter(|e| e.mu.is_some()).count();
        let mu = if with_mu == 0 {
            None
        } else if with_mu == self.edges.len() {
            Some(self.edges.iter().map(|e| e.mu.clone().expect("checked")).collect())
        } else {
            return Err(Error::Schema("mu must be given on all edges or on none".into()));
        };
        Ok(GraphInput { graph, mu })
    }

    pub fn from_graph(g: &PreDGraph, mu: Option<&[LaurentPoly]>) -> Self {
        let cox = g.coxeter();
        let q = &g.quiver;
        let vertices = (0..q.num_vertices())
            .map(|x| VertexJson {
                id: q.vertex_name(x).to_string(),
                labels: g.labels[x].iter().map(|&r| cox.name(r).to_string()).collect(),
            })
            .collect();
        let edges = q
            .edges()
            .iter()
            .enumerate()
            .map(|(k, e)| EdgeJson {
                id: Some(e.id.clone()),
                target: q.vertex_name(e.target).to_string(),
                source: q.vertex_name(e.source).to_string(),
                mu: mu.map(|m| m[k].clone()),
            })
            .collect();
        Self { coxeter: CoxeterJson::from_datum(&g.datum), vertices, edges }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    let json: GraphJson = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    json.to_input()
}

pub fn parse_coxeter(text: &str) -> Result<HeckeDatum> {
    let json: CoxeterJson = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    json.to_datum()
}

pub fn graph_to_json(g: &PreDGraph, mu: Option<&[LaurentPoly]>) -> Value {
    serde_json::to_value(GraphJson::from_graph(g, mu)).expect("serializable")
}

/// One line of a generator listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub r: String,
    pub s: String,
    pub x: String,
    pub i: i64,
    pub body: String,
}

/// Records in set order; bodies use the compressed path syntax when the
/// quiver allows it.
pub fn generator_records(g: &PreDGraph, set: &GeneratorSet) -> Vec<GeneratorRecord> {
    let compressed = g.quiver.is_simple();
    let cox = g.coxeter();
    set.entries()
        .iter()
        .map(|e| GeneratorRecord {
            r: cox.name(e.r).to_string(),
            s: cox.name(e.s).to_string(),
            x: g.quiver.vertex_name(e.x).to_string(),
            i: e.i,
            body: e.body.display(&g.quiver, compressed),
        })
        .collect()
}

pub fn generator_lines(g: &PreDGraph, set: &GeneratorSet) -> String {
    generator_records(g, set)
        .iter()
        .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
        .collect()
}

/// Check report `{check, inputs, pass, witnesses}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub inputs: Value,
    pub pass: bool,
    pub witnesses: Vec<Value>,
}

pub fn matrix_to_json(m: &RepMatrix) -> Value {
    serde_json::to_value(m.to_strings()).expect("serializable")
}
