//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the lines show up
//! in `cargo test` output; exits non-zero if any criterion fails.

use std::cell::RefCell;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use wcarg::fixtures::fixture;
use wcarg::oracle::Oracle;
use wcarg::principles::random_framework;
use wcarg::ub::{semantic_precedence_with, PrecedenceScope};
use wcarg::weakly_complete::{credulous_wc_at, dung_complete_with, ground_based_trace};
use wcarg::*;

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(format!("{name}.tgf"))
}

/// Runs the binary and remembers each invocation for the determinism re-run.
#[derive(Default)]
struct Cli {
    log: RefCell<Vec<(Vec<String>, Vec<u8>)>>,
}

impl Cli {
    fn raw(args: &[String]) -> (i32, Vec<u8>) {
        let out = Command::new(env!("CARGO_BIN_EXE_wcarg"))
            .args(args)
            .output()
            .expect("binary runs");
        (out.status.code().unwrap_or(-1), out.stdout)
    }

    fn run(&self, args: &[&str]) -> Result<String, String> {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let (code, stdout) = Self::raw(&args);
        self.log.borrow_mut().push((args.clone(), stdout.clone()));
        if code != 0 {
            return Err(format!("`wcarg {}` exited with {code}", args.join(" ")));
        }
        String::from_utf8(stdout).map_err(|e| e.to_string())
    }

    fn solve(&self, task: &str, fixture: &str, extra: &[&str]) -> Result<String, String> {
        let path = fixture_path(fixture);
        let mut args = vec!["solve", task, "-f", path.to_str().unwrap()];
        args.extend_from_slice(extra);
        self.run(&args)
    }

    fn json(&self, task: &str, fixture: &str) -> Result<Value, String> {
        let out = self.solve(task, fixture, &[])?;
        serde_json::from_str(&out).map_err(|e| format!("bad json from {task}: {e}"))
    }
}

fn names(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

fn in_family(v: &Value) -> Vec<Vec<String>> {
    let mut fam: Vec<Vec<String>> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|l| names(&l["in"]))
        .collect();
    fam.sort();
    fam
}

fn ext_family(v: &Value) -> Vec<Vec<String>> {
    let mut fam: Vec<Vec<String>> = v.as_array().unwrap().iter().map(names).collect();
    fam.sort();
    fam
}

fn family(sets: &[&[&str]]) -> Vec<Vec<String>> {
    let mut fam: Vec<Vec<String>> = sets
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect();
    fam.sort();
    fam
}

/// Frameworks for the sampled criteria: n uniform in 1..=max_n, p cycling through the list.
fn sample(count: usize, max_n: usize, seed: u64) -> Vec<Framework> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probs = [0.1, 0.3, 0.5];
    (0..count)
        .map(|i| random_framework(rng.random_range(1..=max_n), probs[i % 3], rng.random()))
        .collect()
}

fn fixture_labellings(cli: &Cli) -> Check {
    let started = Instant::now();
    let cases: [(&str, &[&[&str]]); 5] = [
        ("odd_cycle", &[&[]]),
        ("self_attack", &[&[], &["b"]]),
        ("floating", &[&[], &["a"], &["b"], &["c"]]),
        ("closed_cycle_tail", &[&[], &["d"]]),
        ("self_attack_chain", &[&[], &["b"], &["c"]]),
    ];
    for (name, want) in cases {
        let got = in_family(&cli.json("EE-WCO", name)?);
        ensure(got == family(want), || format!("{name}: got {got:?}"))?;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })
}

fn search_trace() -> Check {
    let started = Instant::now();
    let fw = fixture("rebuttal_into_cycle");
    let set = ground_based_trace(&fw, &Config::sequential()).map_err(|e| e.to_string())?;
    let trace = set.provenance().unwrap_or_default();
    ensure(trace.len() == 5, || format!("{} discoveries", trace.len()))?;
    ensure(set.len() == 4, || format!("{} distinct", set.len()))?;
    let mut grounds: Vec<Vec<&str>> = trace
        .iter()
        .map(|d| {
            let mut g: Vec<&str> = d.grounds.iter().map(|&i| fw.name(i)).collect();
            g.sort();
            g
        })
        .collect();
    grounds.sort();
    let want: Vec<Vec<&str>> = vec![vec![], vec!["a"], vec!["b"], vec!["b", "d"], vec!["d"]];
    ensure(grounds == want, || format!("ground sequences {grounds:?}"))?;
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })
}

fn identities() -> Check {
    let oracle = Oracle::default();
    let cfg = Config::default();
    for (i, fw) in sample(200, 10, 3).iter().enumerate() {
        let wc = weakly_complete_labellings(fw).map_err(|e| e.to_string())?;
        // labellings whose undec set is not strictly inside another's
        let undec_max: Vec<&Labelling> = wc
            .iter()
            .filter(|l| {
                !wc.iter()
                    .any(|m| l.undec_set().is_strict_subset(&m.undec_set()))
            })
            .collect();
        let g = grounded_labelling(fw);
        ensure(
            undec_max == vec![&g] && weakly_grounded_labelling(fw) == g,
            || format!("sample {i}: weakly grounded differs from grounded"),
        )?;
        let wst = weakly_complete::weakly_stable_with(fw, &cfg).map_err(|e| e.to_string())?;
        let st = oracle.brute_force_stable(fw).map_err(|e| e.to_string())?;
        ensure(wst == st, || {
            format!("sample {i}: weakly stable differs from stable")
        })?;
    }
    Ok(())
}

fn oracle_equivalence(samples: &[Framework]) -> Check {
    let oracle = Oracle::default();
    let cfg = Config::default();
    for (i, fw) in samples.iter().enumerate() {
        let fast = weakly_complete_labellings(fw).map_err(|e| e.to_string())?;
        let slow = oracle
            .brute_force_weakly_complete(fw)
            .map_err(|e| e.to_string())?;
        ensure(fast == slow, || {
            format!("sample {i}: weakly complete mismatch")
        })?;
        let co = dung_complete_with(fw, &cfg).map_err(|e| e.to_string())?;
        let co_slow = oracle.brute_force_complete(fw).map_err(|e| e.to_string())?;
        ensure(co == co_slow, || format!("sample {i}: complete mismatch"))?;
    }
    Ok(())
}

fn grounded_and_credulous(samples: &[Framework]) -> Check {
    let oracle = Oracle::default();
    for (i, fw) in samples.iter().enumerate() {
        let g = grounded_labelling(fw).in_set();
        let wc = weakly_complete_labellings(fw).map_err(|e| e.to_string())?;
        ensure(wc.in_sets().all(|s| g.is_subset(s)), || {
            format!("sample {i}: an in-set misses the grounded in-set")
        })?;
        for a in 0..fw.len() {
            let slow = oracle
                .brute_force_credulous(fw, fw.name(a))
                .map_err(|e| e.to_string())?;
            ensure(credulous_wc_at(fw, a) == slow, || {
                format!("sample {i}: credulous disagreement on {}", fw.name(a))
            })?;
        }
    }
    let n = 10_000;
    let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let attacks: Vec<(&str, &str)> = (1..n)
        .map(|i| (names[i - 1].as_str(), names[i].as_str()))
        .collect();
    let chain = Framework::new(&names, attacks).map_err(|e| e.to_string())?;
    let started = Instant::now();
    let last = credulous_wc(&chain, &names[n - 1]).map_err(|e| e.to_string())?;
    let second = credulous_wc(&chain, &names[1]).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(!last && !second, || "chain answers wrong".to_string())?;
    ensure(elapsed < Duration::from_secs(2), || {
        format!("chain took {elapsed:?}")
    })
}

fn principle_matrix(cli: &Cli) -> Check {
    let out = cli.run(&[
        "report",
        "--semantics",
        "WCO,WPR,UBGR",
        "--n",
        "6",
        "--samples",
        "300",
        "--seed",
        "11",
        "--max-cycle",
        "7",
        "--json",
    ])?;
    let report: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(report["frameworks"].as_u64().unwrap_or(0) >= 300, || {
        "too few frameworks".into()
    })?;
    let row = |sem: &str, p: &str| {
        report["rows"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["semantics"] == sem && r["principle"] == p)
            .cloned()
            .unwrap_or(Value::Null)
    };
    let wants: [(&str, &str, bool, Option<&str>); 13] = [
        ("WCO", "conflict-free", true, None),
        ("WCO", "admissible", false, Some("self_attack")),
        ("WCO", "reinstatement", true, None),
        ("WCO", "rejection", true, None),
        ("WCO", "directionality", true, None),
        ("WCO", "abstention", true, None),
        ("WCO", "i-maximality", false, None),
        ("WPR", "directionality", false, Some("floating")),
        ("WPR", "abstention", false, Some("rebuttal")),
        ("WPR", "i-maximality", true, None),
        ("UBGR", "cardinality", true, None),
        ("UBGR", "cycle-homogeneity", true, None),
        ("UBGR", "acyclic-decided", true, None),
    ];
    for (sem, p, holds, source) in wants {
        let r = row(sem, p);
        ensure(r["holds"] == holds, || {
            format!("{sem}/{p}: holds={}", r["holds"])
        })?;
        if let Some(src) = source {
            let got = &r["counterexample"]["source"];
            ensure(got == src, || {
                format!("{sem}/{p}: counterexample from {got}")
            })?;
        }
    }
    let counts = &row("UBGR", "cardinality")["counts"];
    ensure(counts == &serde_json::json!([1, 1]), || {
        format!("UBGR counts {counts}")
    })
}

fn ub_fixtures(cli: &Cli) -> Check {
    let gr = cli.json("SE-UBGR", "self_attack_chain")?;
    ensure(
        names(&gr["in"]) == ["b"] && names(&gr["out"]) == ["c"] && names(&gr["undec"]) == ["a"],
        || format!("ub-grounded {gr}"),
    )?;
    let p7 = cli.json("EE-UBPR", "precedence_cycle")?;
    let want = serde_json::json!([{"in": ["b", "d"], "out": ["c", "e"], "undec": ["a"]}]);
    ensure(p7 == want, || format!("ub-preferred {p7}"))?;
    let fw = fixture("precedence_cycle");
    let rel = semantic_precedence_with(&fw, PrecedenceScope::SameComponent, &Config::default())
        .map_err(|e| e.to_string())?;
    let strict = rel.strict_named(&fw);
    for pair in [("b", "c"), ("c", "d"), ("c", "e")] {
        ensure(strict.contains(&pair), || {
            format!("missing precedence {pair:?}")
        })?;
    }
    let fl = cli.json("EE-UBPR", "floating")?;
    let want = serde_json::json!([
        {"in": ["a"], "out": ["b", "c"], "undec": []},
        {"in": ["b"], "out": ["a", "c"], "undec": []}
    ]);
    ensure(fl == want, || format!("floating ub-preferred {fl}"))
}

fn bbu_fixtures(cli: &Cli) -> Check {
    let limit = Duration::from_secs(5);
    let t = Instant::now();
    let co = ext_family(&cli.json("EE-BBU-CO", "floating")?);
    ensure(co == family(&[&[], &["a"], &["b"]]), || {
        format!("floating complete {co:?}")
    })?;
    ensure(t.elapsed() < limit, || format!("took {:?}", t.elapsed()))?;

    let t = Instant::now();
    let sa = fixture("self_attack");
    let adw = weakly_admissible_sets(&sa).map_err(|e| e.to_string())?;
    let got = io::sorted_extensions(&sa, &adw);
    ensure(got == family(&[&[], &["b"]]), || {
        format!("self-attack weakly admissible {got:?}")
    })?;
    ensure(t.elapsed() < limit, || format!("took {:?}", t.elapsed()))?;

    let t = Instant::now();
    let gr = ext_family(&cli.json("EE-BBU-GR", "split_weak_grounded")?);
    ensure(gr.len() == 2 && gr.iter().all(|e| !e.is_empty()), || {
        format!("split grounded {gr:?}")
    })?;
    ensure(gr == family(&[&["a1", "b1"], &["a2", "b2"]]), || {
        format!("split grounded {gr:?}")
    })?;
    ensure(t.elapsed() < limit, || format!("took {:?}", t.elapsed()))
}

fn divergence(cli: &Cli) -> Check {
    let wc = in_family(&cli.json("EE-WCO", "floating")?);
    ensure(wc.contains(&vec!["c".to_string()]), || {
        "{c} missing from weakly complete".into()
    })?;
    let co = ext_family(&cli.json("EE-BBU-CO", "floating")?);
    ensure(co.iter().all(|e| !e.contains(&"c".to_string())), || {
        format!("BBU complete {co:?}")
    })
}

fn determinism(cli: &Cli) -> Check {
    let log = cli.log.borrow();
    ensure(!log.is_empty(), || "nothing recorded".into())?;
    for (args, first) in log.iter() {
        let (_, again) = Cli::raw(args);
        ensure(&again == first, || {
            format!("`wcarg {}` changed between runs", args.join(" "))
        })?;
    }
    Ok(())
}

fn main() {
    let cli = Cli::default();
    let samples = sample(500, 8, 7);
    let criteria: Vec<Criterion> = vec![
        (
            "fixture labelling sets",
            Box::new(|| fixture_labellings(&cli)),
        ),
        ("ground-based search trace", Box::new(search_trace)),
        (
            "weakly grounded and weakly stable identities",
            Box::new(identities),
        ),
        (
            "oracle equivalence",
            Box::new(|| oracle_equivalence(&samples)),
        ),
        (
            "grounded containment and linear-time credulous test",
            Box::new(|| grounded_and_credulous(&samples)),
        ),
        ("principle matrix", Box::new(|| principle_matrix(&cli))),
        (
            "undecidedness-blocking fixtures",
            Box::new(|| ub_fixtures(&cli)),
        ),
        (
            "weak admissibility fixtures",
            Box::new(|| bbu_fixtures(&cli)),
        ),
        (
            "divergence on the floating assignment",
            Box::new(|| divergence(&cli)),
        ),
        (
            "byte-identical CLI output across runs",
            Box::new(|| determinism(&cli)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = check();
        let took = started.elapsed();
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
