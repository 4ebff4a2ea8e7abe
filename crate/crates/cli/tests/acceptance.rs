//! End-to-end acceptance run through the `wopow` binary. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use wopow_core::{phi_weights, WeightedOrientedGraph};

const SYMBOLIC_SQUARE: [&str; 14] = [
    "x1^2*x2^2",
    "x1*x2^2*x3",
    "x2^2*x3^2",
    "x1*x2*x3*x4",
    "x2*x3^2*x4",
    "x3^2*x4^2",
    "x1*x2*x4*x5",
    "x2*x3*x4*x5",
    "x3*x4^2*x5",
    "x1^2*x2*x5^2",
    "x1*x2*x3*x5^2",
    "x1*x4*x5^2",
    "x4^2*x5^2",
    "x1^2*x5^4",
];

const LIFTED_SQUARE: [&str; 14] = [
    "x1^2*x2^4",
    "x1*x2^4*x3",
    "x2^4*x3^2",
    "x1*x2^2*x3*x4^2",
    "x2^2*x3^2*x4^2",
    "x3^2*x4^4",
    "x1*x2^2*x4^2*x5",
    "x2^2*x3*x4^2*x5",
    "x3*x4^4*x5",
    "x1^2*x2^2*x5^2",
    "x1*x2^2*x3*x5^2",
    "x1*x4^2*x5^2",
    "x4^4*x5^2",
    "x1^2*x5^4",
];

type Outcome = Result<(), String>;

/// Cover followed by its L1, L2, L3 parts.
type Partition = (Vec<String>, Vec<String>, Vec<String>, Vec<String>);

type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn wopow(args: &[&str]) -> Result<(i32, Value), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wopow"))
        .args(args)
        .env_remove("WOPOW_THREADS")
        .output()
        .map_err(|e| format!("cannot run wopow: {e}"))?;
    let code = out.status.code().unwrap_or(-1);
    let value = serde_json::from_slice(&out.stdout).map_err(|e| {
        format!(
            "wopow {args:?} exited {code} with unparsable output ({e}): {}",
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok((code, value))
}

fn graph_file(dir: &Path, name: &str, weights: &[u32], edges: &[(&str, &str)]) -> PathBuf {
    let n = weights.len();
    let vertices: Vec<Value> = (1..=n)
        .map(|i| json!({"name": format!("x{i}"), "weight": weights[i - 1]}))
        .collect();
    let edges: Vec<Value> = edges.iter().map(|(a, b)| json!([a, b])).collect();
    let path = dir.join(name);
    std::fs::write(&path, json!({"vertices": vertices, "edges": edges}).to_string()).unwrap();
    path
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().filter_map(|s| s.as_str().map(str::to_string)).collect())
        .unwrap_or_default()
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

const FIVE_CYCLE_EDGES: [(&str, &str); 5] = [
    ("x1", "x2"),
    ("x1", "x5"),
    ("x3", "x2"),
    ("x3", "x4"),
    ("x5", "x4"),
];

const CYCLE4: [(&str, &str); 4] = [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1")];

fn five_cycle_square(dir: &Path) -> Outcome {
    let f = graph_file(dir, "c5.json", &[1, 1, 1, 1, 2], &FIVE_CYCLE_EDGES);
    let (code, ideal) = wopow(&["edge-ideal", f.to_str().unwrap()])?;
    ensure(code == 0, "edge-ideal failed")?;
    ensure(
        ideal["ideal"] == "(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5^2)",
        format!("edge ideal {}", ideal["ideal"]),
    )?;
    let (code, r) = wopow(&["symbolic", "-s", "2", "--method", "both", "--no-timing", f.to_str().unwrap()])?;
    ensure(code == 0 && r["methods_agree"] == true, "methods disagree")?;
    let got = strings(&r["generators"]);
    let want: Vec<String> = SYMBOLIC_SQUARE.iter().map(|s| s.to_string()).collect();
    ensure(sorted(got) == sorted(want), "generator set differs from the listed 14")
}

fn five_cycle_phi(dir: &Path) -> Outcome {
    let f = graph_file(dir, "c5-weighted.json", &[1, 2, 1, 2, 2], &FIVE_CYCLE_EDGES);
    let d = WeightedOrientedGraph::build(
        &["x1", "x2", "x3", "x4", "x5"],
        &[1, 2, 1, 2, 2],
        &FIVE_CYCLE_EDGES,
    )
    .map_err(|e| e.to_string())?;
    let (reduced, reset) = d.sink_weights_to_one();
    let weights = phi_weights(&d, reset);
    let lifted: Vec<String> = SYMBOLIC_SQUARE
        .iter()
        .map(|m| {
            let m = reduced.universe().parse_monomial(m).unwrap();
            reduced.universe().format_monomial(&m.phi_map(&weights).unwrap())
        })
        .collect();
    ensure(lifted == LIFTED_SQUARE, format!("phi images {lifted:?}"))?;
    let (code, r) = wopow(&["phi-check", "-s", "2", f.to_str().unwrap()])?;
    ensure(code == 0 && r["holds"] == true, "phi-check failed")?;
    ensure(strings(&r["reset"]) == ["x2", "x4"], "reset set is not {x2, x4}")?;
    let (_, sym) = wopow(&["symbolic", "-s", "2", "--no-timing", f.to_str().unwrap()])?;
    let want: Vec<String> = LIFTED_SQUARE.iter().map(|s| s.to_string()).collect();
    ensure(sorted(strings(&sym["generators"])) == sorted(want), "direct square differs")
}

fn four_cycle_census(dir: &Path) -> Outcome {
    for w2 in [2u32, 3] {
        let f = graph_file(dir, &format!("c4-{w2}.json"), &[1, w2, 1, 1], &CYCLE4);
        let (code, r) = wopow(&["covers", "--all", f.to_str().unwrap()])?;
        ensure(code == 0, "covers failed")?;
        let covers = r["covers"].as_array().ok_or("no covers")?;
        let strong: Vec<Partition> = covers
            .iter()
            .filter(|c| c["strong"] == true)
            .map(|c| (strings(&c["cover"]), strings(&c["l1"]), strings(&c["l2"]), strings(&c["l3"])))
            .collect();
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let want = vec![
            (s(&["x1", "x3"]), s(&["x1", "x3"]), s(&[]), s(&[])),
            (s(&["x2", "x4"]), s(&["x2", "x4"]), s(&[]), s(&[])),
            (s(&["x2", "x3", "x4"]), s(&["x4"]), s(&["x2"]), s(&["x3"])),
        ];
        ensure(strong == want, format!("w2={w2}: strong covers {strong:?}"))?;
        for bad in [
            &["x1", "x2", "x4"][..],
            &["x1", "x3", "x4"],
            &["x1", "x2", "x3"],
            &["x1", "x2", "x3", "x4"],
        ] {
            let found = covers.iter().find(|c| strings(&c["cover"]) == s(bad));
            ensure(
                found.is_some_and(|c| c["strong"] == false),
                format!("w2={w2}: {bad:?} should be listed and not strong"),
            )?;
        }
        for p in ["2", "3"] {
            let (code, r) = wopow(&["compare", "-s", p, "--no-timing", f.to_str().unwrap()])?;
            ensure(
                code == 0 && r["equal"] == true && r["methods_agree"] == true,
                format!("w2={w2}, s={p}: powers differ"),
            )?;
        }
    }
    Ok(())
}

fn membership(f: &Path, s: u32, w: &str) -> Outcome {
    let json = std::fs::read_to_string(f).unwrap();
    let d = WeightedOrientedGraph::from_json(&serde_json::from_str(&json).unwrap())
        .map_err(|e| e.to_string())?;
    let cmp = wopow_core::compare_powers_detailed(&d, s, &Default::default()).map_err(|e| e.to_string())?;
    let m = d.universe().parse_monomial(w).map_err(|e| e.to_string())?;
    ensure(
        cmp.symbolic.contains(&m).unwrap() && !cmp.ordinary.contains(&m).unwrap(),
        format!("{w} is not in I^({s}) minus I^{s}"),
    )
}

fn weighted_path(dir: &Path) -> Outcome {
    let f = graph_file(dir, "path.json", &[1, 2, 1, 1], &[("x1", "x2"), ("x2", "x3"), ("x3", "x4")]);
    let (code, r) = wopow(&["compare", "-s", "2", "--no-timing", f.to_str().unwrap()])?;
    ensure(code == 0 && r["equal"] == false, "powers reported equal")?;
    ensure(r["witness"] == "x1*x2^2*x3", format!("witness {}", r["witness"]))?;
    membership(&f, 2, "x1*x2^2*x3")
}

fn six_cycle(dir: &Path) -> Outcome {
    let edges = [
        ("x1", "x2"),
        ("x2", "x3"),
        ("x3", "x4"),
        ("x4", "x5"),
        ("x5", "x6"),
        ("x6", "x1"),
    ];
    let f = graph_file(dir, "c6.json", &[1, 2, 1, 1, 1, 1], &edges);
    let (_, r2) = wopow(&["compare", "-s", "2", "--no-timing", f.to_str().unwrap()])?;
    ensure(r2["equal"] == true, "unequal at s=2")?;
    let (_, r3) = wopow(&["compare", "-s", "3", "--no-timing", f.to_str().unwrap()])?;
    ensure(r3["equal"] == false, "equal at s=3")?;
    membership(&f, 3, "x1*x2^2*x3^2*x4")
}

/// Runs a sweep and returns its instances after the generic pass checks.
fn sweep(args: &[&str], expected: usize) -> Result<Vec<Value>, String> {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    let (code, r) = wopow(&full)?;
    let counts = &r["counts"];
    ensure(
        code == 0 && counts["violated"] == 0 && counts["inconclusive"] == 0 && counts["skipped"] == 0,
        format!("counts {counts}"),
    )?;
    let inst = r["instances"].as_array().cloned().unwrap_or_default();
    ensure(inst.len() == expected, format!("{} instances, expected {expected}", inst.len()))?;
    Ok(inst)
}

fn verdict_equal_at(inst: &Value, s: u64) -> Option<bool> {
    inst["verdict"]["powers"]
        .as_array()?
        .iter()
        .find(|p| p["s"] == s)
        .and_then(|p| p["equal"].as_bool())
}

fn biconditional(inst: &[Value], witness_power: u64) -> Outcome {
    for i in inst {
        let v = &i["verdict"];
        ensure(
            v["hypothesis"] == v["conclusion"],
            format!("{}: hypothesis {} but conclusion {}", i["label"], v["hypothesis"], v["conclusion"]),
        )?;
        if v["hypothesis"] == false {
            let w = &v["witness_check"];
            ensure(
                w["s"] == witness_power && w["in_symbolic"] == true && w["in_ordinary"] == false,
                format!("{}: witness {w}", i["label"]),
            )?;
        }
    }
    Ok(())
}

fn odd_cycles() -> Outcome {
    let inst = sweep(&["odd-cycle", "--s-max", "3"], 42)?;
    let seeded = inst
        .iter()
        .filter(|i| i["label"].as_str().unwrap_or("").contains("seeded"))
        .count();
    ensure(seeded == 10, format!("{seeded} seeded orientations"))?;
    biconditional(&inst, 3)
}

fn clique_sums() -> Outcome {
    let inst = sweep(&["clique-sum", "--s-max", "3"], 32)?;
    biconditional(&inst, 3)
}

fn multipartite() -> Outcome {
    let inst = sweep(&["multipartite", "--s-max", "3", "--parts", "1,1,1;2,1,1"], 8 * 8 + 8 * 16)?;
    biconditional(&inst, 2)
}

fn natural_cycles() -> Outcome {
    let inst = sweep(&["natural-cycle", "--n-max", "7"], 31 + 63 + 127)?;
    let mut seen = 0;
    for i in &inst {
        let label = i["label"].as_str().unwrap_or("");
        if !(label.starts_with("C5 ") || label.starts_with("C7 ")) {
            continue;
        }
        seen += 1;
        let all_weighted = !label.split("w=").nth(1).unwrap_or("").split(',').any(|w| w == "1");
        if all_weighted {
            ensure(
                verdict_equal_at(i, 2) == Some(true) && verdict_equal_at(i, 3) == Some(true),
                format!("{label}: not equal at s=2,3"),
            )?;
        } else {
            ensure(verdict_equal_at(i, 2) == Some(false), format!("{label}: equal at s=2"))?;
        }
    }
    ensure(seen == 31 + 127, format!("{seen} C5/C7 instances"))
}

fn all_equal(inst: &[Value]) -> Outcome {
    for i in inst {
        ensure(
            verdict_equal_at(i, 2) == Some(true) && verdict_equal_at(i, 3) == Some(true),
            format!("{}: unequal", i["label"]),
        )?;
    }
    Ok(())
}

fn stars() -> Outcome {
    let inst = sweep(&["star", "--n-max", "4", "--seed", "7", "--s-max", "3"], 50)?;
    all_equal(&inst)
}

fn paths() -> Outcome {
    let inst = sweep(&["path", "--n-max", "5", "--s-max", "3"], 2 * (4 + 8 + 16))?;
    all_equal(&inst)
}

fn oracle() -> Outcome {
    let inst = sweep(&["oracle", "--samples", "100", "--n-max", "7", "--s-max", "3"], 100)?;
    let required = [
        "s=1 methods agree",
        "s=2 methods agree",
        "s=3 methods agree",
        "s=3 ordinary within symbolic",
        "s=1 recovers the edge ideal",
        "decomposition identity",
        "minimal covers are strong",
        "L3 empty iff minimal",
        "radical of each component is its prime",
        "strong covers invariant under clamp",
        "strong covers invariant under sink reset",
    ];
    for i in &inst {
        let checks = i["checks"].as_array().ok_or("no checks")?;
        for name in required {
            ensure(
                checks.iter().any(|c| c["name"] == name && c["passed"] == true),
                format!("{}: {name}", i["label"]),
            )?;
        }
        ensure(checks.iter().all(|c| c["passed"] == true), format!("{}: a check failed", i["label"]))?;
    }
    Ok(())
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let d = dir.path();
    let criteria: Vec<Criterion> = vec![
        ("five-cycle symbolic square", Duration::from_secs(1), Box::new(|| five_cycle_square(d))),
        ("five-cycle phi images", Duration::from_secs(1), Box::new(|| five_cycle_phi(d))),
        ("four-cycle strong-cover census", Duration::from_secs(1), Box::new(|| four_cycle_census(d))),
        ("weighted path counterexample", Duration::from_secs(1), Box::new(|| weighted_path(d))),
        ("six-cycle square and cube", Duration::from_secs(2), Box::new(|| six_cycle(d))),
        ("odd-cycle biconditional sweep", Duration::from_secs(60), Box::new(odd_cycles)),
        ("clique-sum sweep", Duration::from_secs(60), Box::new(clique_sums)),
        ("complete tripartite sweep", Duration::from_secs(120), Box::new(multipartite)),
        ("natural cycle dichotomy", Duration::from_secs(120), Box::new(natural_cycles)),
        ("star sweep", Duration::from_secs(60), Box::new(stars)),
        ("path sweep", Duration::from_secs(60), Box::new(paths)),
        ("oracle agreement suite", Duration::from_secs(300), Box::new(oracle)),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took < *limit, format!("took {took:?}, limit {limit:?}"))
        });
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({} ms)", k + 1, took.as_millis()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({} ms): {why}", k + 1, took.as_millis());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
