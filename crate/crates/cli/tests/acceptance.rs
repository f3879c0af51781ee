//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails or exceeds its time budget.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use hq_core::io::{self, GraphInput};
use hq_core::maps::{contragredience_sweep, duality_check, equivariance_sweep, specialize_defects};
use hq_core::reps::{check_dgraph, tau_matrix};
use hq_core::rho::{j0_generators, rho_apply, rho_word, rho_word_explicit};
use hq_core::universal::generators_via_universal;
use hq_core::{
    alternating_word, examples, CoxeterDatum, DGraph, HeckeDatum, PathElem, PreDGraph, RepMatrix, SpecializationMap,
    UniversalGraph,
};

type Check = fn() -> Result<(), String>;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(format!("{name}.json"))
}

fn hq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hq")).args(args).output().expect("run hq")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn bundled() -> Vec<(&'static str, GraphInput)> {
    examples::NAMES.iter().map(|n| (*n, examples::load(n).unwrap())).collect()
}

fn dgraphs() -> Vec<(&'static str, DGraph)> {
    bundled().into_iter().filter_map(|(n, g)| g.dgraph().map(|d| (n, d))).collect()
}

fn bodies(g: &PreDGraph, texts: &[&str]) -> BTreeSet<PathElem> {
    texts.iter().map(|t| PathElem::parse(&g.quiver, t).unwrap().sign_normalized()).collect()
}

fn universal_verify() -> Result<(), String> {
    for m in 2..=7 {
        let out = hq(&["universal", "--m", &m.to_string(), "--verify"]);
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.success(), format!("m = {m}: exit {:?}", out.status.code()))?;
        ensure(stdout.lines().last() == Some("MATCH"), format!("m = {m}: no MATCH"))?;
    }
    Ok(())
}

fn b3_cell() -> Result<(), String> {
    let g = examples::load("b3_cell").unwrap().graph;
    let expected = bodies(
        &g,
        &[
            "y.z.y - y",
            "z.y.z - z",
            "y.x1.y.x1 + y.x2.y.x1 - 2*y.x1",
            "y.x1.y.x2 + y.x2.y.x2 - 2*y.x2",
            "x1.y.x1.y + x1.y.x2.y - 2*x1.y",
            "x2.y.x1.y + x2.y.x2.y - 2*x2.y",
        ],
    );
    let file = data("b3_cell");
    let file = file.to_str().unwrap();
    for extra in [None, Some("--via-universal")] {
        let mut args = vec!["generators", "--format", "json", file];
        args.extend(extra);
        let out = hq(&args);
        ensure(out.status.success(), format!("{args:?} failed"))?;
        let mut got = BTreeSet::new();
        for line in String::from_utf8_lossy(&out.stdout).lines() {
            let rec: io::GeneratorRecord = serde_json::from_str(line).map_err(|e| e.to_string())?;
            got.insert(PathElem::parse(&g.quiver, &rec.body).map_err(|e| e.to_string())?);
        }
        ensure(got == expected, format!("{args:?}: got {} generators, not the expected six", got.len()))?;
    }
    Ok(())
}

fn one_vertex() -> Result<(), String> {
    let b3 = CoxeterDatum::from_orders(&["r1", "r2", "r3"], &[&[1, 3, 2], &[3, 1, 4], &[2, 4, 1]]).unwrap();
    let a3 = CoxeterDatum::from_orders(&["r1", "r2", "r3"], &[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap();
    for cox in [b3, a3] {
        for mask in 0..8 {
            let labels: Vec<&str> =
                cox.generators().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, n)| n.as_str()).collect();
            let g = PreDGraph::from_names(HeckeDatum::d_z(cox.clone()), &[("x", &labels)], &[]).unwrap();
            let gens = j0_generators(&g).bodies();
            let inside = |r: usize| labels.contains(&cox.name(r));
            let split = cox.s2fin().iter().any(|&(r, s)| cox.order(r, s).is_odd() && inside(r) && !inside(s));
            let expected: BTreeSet<PathElem> = if split { [PathElem::vertex(0)].into() } else { BTreeSet::new() };
            ensure(gens == expected, format!("S' = {labels:?}"))?;
        }
    }
    Ok(())
}

fn asymptotic() -> Result<(), String> {
    let g = examples::load("asymptotic_b3").unwrap().graph;
    let expected = bodies(
        &g,
        &["r1.r2.r1 - r1", "r2.r1.r2 - r2", "r2.r3.r2.r3 - 2*r2.r3", "r3.r2.r3.r2 - 2*r3.r2", "r1.r3", "r3.r1"],
    );
    let brute = j0_generators(&g);
    let via = generators_via_universal(&g).map_err(|e| e.to_string())?;
    ensure(brute.bodies() == expected, "brute force differs from the expected families")?;
    ensure(via.same_bodies(&brute), "push-forward differs from brute force")
}

fn dgraph_axioms() -> Result<(), String> {
    for name in ["a2_cell", "b3_cell"] {
        let out = hq(&["check-dgraph", data(name).to_str().unwrap()]);
        ensure(out.status.code() == Some(0), format!("{name} does not pass"))?;
    }
    let mut g = examples::load("b3_cell").unwrap().dgraph().unwrap();
    g.mu[0] = "2".parse().unwrap();
    let report = check_dgraph(&g);
    ensure(!report.braid.is_empty(), "perturbed weight passes the braid check")?;
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR")).join("b3_perturbed.json");
    std::fs::write(&tmp, io::graph_to_json(&g.base, Some(&g.mu)).to_string()).unwrap();
    let out = hq(&["check-dgraph", "--format", "json", tmp.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(1), "perturbed graph does not exit with 1")?;
    ensure(stdout.contains("\"braid\""), "perturbed graph report has no braid witness")
}

fn sweeps() -> Result<(), String> {
    for (name, g) in dgraphs() {
        let report = equivariance_sweep(&g, 200, 5, 0);
        ensure(report.cases == 200 && report.pass(), format!("{name}: equivariance"))?;
    }
    for (name, input) in bundled() {
        let g = input.graph;
        for (side, graph) in [("graph", g.clone()), ("dual", g.dual())] {
            let report = contragredience_sweep(&graph, 200, 5, 0);
            ensure(report.pass(), format!("{name} {side}: contragredience"))?;
        }
    }
    Ok(())
}

fn quadratic() -> Result<(), String> {
    let mut graphs: Vec<(String, PreDGraph)> = bundled().into_iter().map(|(n, g)| (n.to_string(), g.graph)).collect();
    graphs.push(("universal".into(), UniversalGraph::dihedral(4).unwrap().graph));
    for (name, g) in &graphs {
        let d = &g.datum;
        for r in 0..d.coxeter.rank() {
            for x in 0..g.quiver.num_vertices() {
                let vx = PathElem::vertex(x);
                let shifted = rho_apply(g, r, &vx) + vx.scale(&d.b[r]);
                let lhs = rho_apply(g, r, &shifted) - shifted.scale(&d.a[r]);
                ensure(lhs.is_zero(), format!("{name}: rho, r = {r}, x = {x}"))?;
            }
        }
    }
    for (name, g) in dgraphs() {
        let d = g.datum();
        let id = RepMatrix::identity(g.quiver().num_vertices());
        for r in 0..d.coxeter.rank() {
            let t = tau_matrix(&g, r);
            let lhs = t.sub(&id.scale(&d.a[r])).mul(&t.add(&id.scale(&d.b[r])));
            ensure(lhs.is_zero(), format!("{name}: tau, r = {r}"))?;
        }
    }
    Ok(())
}

fn duality() -> Result<(), String> {
    let g = examples::load("b3_cell").unwrap().graph;
    let report = duality_check(&g).map_err(|e| e.to_string())?;
    ensure(report.checked > 0 && report.pass(), format!("{report:?}"))
}

fn evaluators() -> Result<(), String> {
    let mut graphs: Vec<PreDGraph> = (2..=7).map(|m| UniversalGraph::dihedral(m).unwrap().graph).collect();
    graphs.push(examples::load("b3_cell").unwrap().graph);
    for g in &graphs {
        let rank = g.coxeter().rank();
        for r in 0..rank {
            for s in (0..rank).filter(|&s| s != r) {
                for k in 0..=7 {
                    let w = alternating_word(r, s, k);
                    for x in 0..g.quiver.num_vertices() {
                        let lhs = rho_word(g, &w, &PathElem::vertex(x));
                        ensure(lhs == rho_word_explicit(g, &w, x), format!("word {w:?}, vertex {x}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn specialization() -> Result<(), String> {
    for (name, input) in bundled() {
        for f in [SpecializationMap::at_one(), SpecializationMap::bar()] {
            let report = specialize_defects(&input.graph, &f).map_err(|e| e.to_string())?;
            ensure(report.pass(), format!("{name} at {f}: {:?}", report.mismatches))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Check, u64); 10] = [
        ("universal closed form matches brute force, m = 2..7", universal_verify, 5),
        ("B3 cell generators by both paths", b3_cell, 2),
        ("one-vertex classification for B3 and A3", one_vertex, 1),
        ("asymptotic B3 relations", asymptotic, 2),
        ("D-graph axioms and perturbation", dgraph_axioms, 1),
        ("equivariance and contragredience sweeps", sweeps, 10),
        ("quadratic relations for rho and tau", quadratic, 1),
        ("generator-level duality on B3", duality, 2),
        ("closed-form evaluator on alternating words", evaluators, 3),
        ("specialization at v = 1 and v = v^-1", specialization, 2),
    ];
    let mut failed = 0;
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= Duration::from_secs(*budget) => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {budget} s budget)"),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2}: {name}: {verdict} [{} ms]", k + 1, elapsed.as_millis());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
