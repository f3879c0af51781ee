use std::path::Path;

use serde_json::{json, Value};

use hq_core::io::{self, generator_lines, generator_records, GeneratorRecord, GraphInput, Report};
use hq_core::maps::contragredience_sweep;
use hq_core::reps::{self, DGraphReport};
use hq_core::universal::{self, UniversalGraph};
use hq_core::{examples, rho, DGraph, Error, PreDGraph, Result};

use crate::Format;

/// What a command prints and whether its checks passed.
pub struct Outcome {
    pub text: String,
    pub json: String,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn render(&self, format: Format) -> &str {
        match format {
            Format::Text => &self.text,
            Format::Json => &self.json,
        }
    }

    fn from_report(report: Report, notes: Vec<String>) -> Self {
        Self {
            text: report_text(&report),
            json: pretty(&serde_json::to_value(&report).expect("serializable")),
            pass: report.pass,
            notes,
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn report_text(r: &Report) -> String {
    let mut out = format!("{}: {}\n", r.check, if r.pass { "PASS" } else { "FAIL" });
    for w in &r.witnesses {
        out += &format!("  {w}\n");
    }
    out
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<GraphInput> {
    io::parse_graph(&read(path)?)
}

fn names(g: &PreDGraph, columns: &[usize]) -> Vec<String> {
    columns.iter().map(|&x| g.quiver.vertex_name(x).to_string()).collect()
}

fn dgraph_witnesses(g: &DGraph, report: &DGraphReport) -> Vec<Value> {
    let cox = &g.datum().coxeter;
    let mut out = Vec::new();
    for f in &report.quadratic {
        out.push(json!({"kind": "quadratic", "generator": cox.name(f.r), "columns": names(&g.base, &f.columns)}));
    }
    for f in &report.braid {
        out.push(json!({
            "kind": "braid",
            "pair": [cox.name(f.r), cox.name(f.s)],
            "columns": names(&g.base, &f.columns),
        }));
    }
    out
}

pub fn validate(file: &Path) -> Result<Outcome> {
    let input = load_graph(file)?;
    let g = &input.graph;
    let cox = g.coxeter();
    let mut witnesses: Vec<Value> = g
        .datum
        .validate()
        .violations
        .iter()
        .map(|v| {
            let family = match v.family {
                hq_core::coxeter::ParamFamily::A => "a",
                hq_core::coxeter::ParamFamily::B => "b",
            };
            json!({"kind": "parameter", "family": family, "pair": [cox.name(v.r), cox.name(v.s)]})
        })
        .collect();
    let mut notes = Vec::new();
    match input.dgraph() {
        Some(d) => witnesses.extend(dgraph_witnesses(&d, &reps::check_dgraph(&d))),
        None => notes.push("no mu weights; D-graph axioms not checked".to_string()),
    }
    let report = Report {
        check: "validate".into(),
        inputs: json!({"file": file.display().to_string()}),
        pass: witnesses.is_empty(),
        witnesses,
    };
    Ok(Outcome::from_report(report, notes))
}

fn records_text(records: &[GeneratorRecord]) -> String {
    records.iter().map(|r| format!("[{},{} | {} | {}] {}\n", r.r, r.s, r.x, r.i, r.body)).collect()
}

pub fn generators(file: &Path, via_universal: bool, raw: bool) -> Result<Outcome> {
    let g = load_graph(file)?.graph;
    let set = if raw {
        rho::j0_raw(&g, true)
    } else if via_universal {
        universal::generators_via_universal(&g)?
    } else {
        rho::j0_generators(&g)
    };
    Ok(Outcome {
        text: records_text(&generator_records(&g, &set)),
        json: generator_lines(&g, &set),
        pass: true,
        notes: Vec::new(),
    })
}

fn universal_graph(m: Option<u32>, coxeter: Option<&Path>, pair: Option<&str>) -> Result<UniversalGraph> {
    if let Some(m) = m {
        return UniversalGraph::dihedral(m);
    }
    let (Some(file), Some(pair)) = (coxeter, pair) else {
        return Err(Error::Invalid("give --m or both --coxeter and --pair".into()));
    };
    let datum = io::parse_coxeter(&read(file)?)?;
    let Some((r, s)) = pair.split_once(',') else {
        return Err(Error::Invalid(format!("pair {pair:?} is not of the form r,s")));
    };
    let (r, s) = (datum.coxeter.index_of(r.trim())?, datum.coxeter.index_of(s.trim())?);
    UniversalGraph::new(datum, r, s)
}

pub fn universal(m: Option<u32>, coxeter: Option<&Path>, pair: Option<&str>, verify: bool) -> Result<Outcome> {
    let u = universal_graph(m, coxeter, pair)?;
    let closed = universal::universal_generators(&u)?;
    let records = generator_records(&u.graph, &closed);
    if !verify {
        return Ok(Outcome {
            text: records_text(&records),
            json: generator_lines(&u.graph, &closed),
            pass: true,
            notes: Vec::new(),
        });
    }
    let reduced = universal::universal_generators_reduced(&u)?;
    let brute = universal::brute_force_generators(&u)?;
    let matched = reduced.same_bodies(&brute);
    let verdict = if matched { "MATCH" } else { "MISMATCH" };
    let reduced_records = generator_records(&u.graph, &reduced);
    let brute_records = generator_records(&u.graph, &brute);
    let json = json!({
        "closed_form": records,
        "closed_form_reduced": reduced_records,
        "brute_force": brute_records,
        "verdict": verdict,
    });
    let mut text = records_text(&records);
    if !matched {
        text += "closed form, reduced:\n";
        text += &records_text(&reduced_records);
        text += "brute force:\n";
        text += &records_text(&brute_records);
    }
    text += verdict;
    text += "\n";
    Ok(Outcome { text, json: pretty(&json), pass: matched, notes: Vec::new() })
}

pub fn dual(file: &Path, cases: usize, max_word: usize, seed: u64) -> Result<Outcome> {
    let input = load_graph(file)?;
    let g = &input.graph;
    let d = g.dual();
    let cox = g.coxeter();
    let mut witnesses = Vec::new();
    if &d.dual() != g {
        witnesses.push(json!({"kind": "involution"}));
    }
    let sweep = contragredience_sweep(g, cases, max_word, seed);
    for (word, p) in &sweep.failures {
        witnesses.push(json!({
            "kind": "contragredience",
            "word": word.display(cox),
            "path": p.display(&g.quiver, g.quiver.is_simple()),
        }));
    }
    let mut notes = Vec::new();
    match input.dgraph() {
        Some(dg) => {
            for r in reps::tau_duality_failures(&dg) {
                witnesses.push(json!({"kind": "transpose", "generator": cox.name(r)}));
            }
            let dual_graph = dg.dual();
            witnesses.extend(dgraph_witnesses(&dual_graph, &reps::check_dgraph(&dual_graph)));
        }
        None => notes.push("no mu weights; matrix-level checks skipped".to_string()),
    }
    let report = Report {
        check: "dual".into(),
        inputs: json!({"file": file.display().to_string(), "cases": cases, "max_word": max_word, "seed": seed}),
        pass: witnesses.is_empty(),
        witnesses,
    };
    let graph = io::graph_to_json(&d, input.mu.as_deref());
    Ok(Outcome {
        text: pretty(&graph) + &report_text(&report),
        json: pretty(&json!({"dual": graph, "report": report})),
        pass: report.pass,
        notes,
    })
}

pub fn check_dgraph(file: &Path) -> Result<Outcome> {
    let input = load_graph(file)?;
    let Some(g) = input.dgraph() else {
        return Err(Error::Invalid("graph has no mu weights".into()));
    };
    let witnesses = dgraph_witnesses(&g, &reps::check_dgraph(&g));
    let report = Report {
        check: "check-dgraph".into(),
        inputs: json!({"file": file.display().to_string()}),
        pass: witnesses.is_empty(),
        witnesses,
    };
    Ok(Outcome::from_report(report, Vec::new()))
}

pub fn examples(name: Option<&str>) -> Result<Outcome> {
    let Some(name) = name else {
        return Ok(Outcome {
            text: examples::NAMES.iter().map(|n| format!("{n}\n")).collect(),
            json: pretty(&json!(examples::NAMES)),
            pass: true,
            notes: Vec::new(),
        });
    };
    let text = examples::bundled(name)
        .ok_or_else(|| Error::Invalid(format!("no bundled example {name:?}; try one of {}", examples::NAMES.join(", "))))?;
    Ok(Outcome { text: text.to_string(), json: text.to_string(), pass: true, notes: Vec::new() })
}
