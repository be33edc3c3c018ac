//! Ten acceptance criteria over the property suites. Each prints one PASS/FAIL line.

use std::collections::HashMap;
use std::io::Write;

use essence::cps::NegMutation;
use essence::harness::oracle::ORACLE_MAX_NODES;
use essence::harness::{run_suite, PropertyReport, SuiteConfig, SUITES};

struct Verdict {
    lines: Vec<String>,
    failed: usize,
}

impl Verdict {
    fn record(&mut self, id: usize, name: &str, result: Result<String, String>) {
        let line = match result {
            Ok(detail) => format!("PASS criterion {id:>2} {name}: {detail}"),
            Err(detail) => {
                self.failed += 1;
                format!("FAIL criterion {id:>2} {name}: {detail}")
            }
        };
        // Straight to the handle so the line shows even when output is captured.
        let _ = writeln!(std::io::stdout().lock(), "{line}");
        self.lines.push(line);
    }
}

/// Every listed property passed with at least `min` counted cases.
fn counted(r: &PropertyReport, props: &[&str], min: usize) -> Result<String, String> {
    if !r.passed() {
        let f = r.smallest_failure().unwrap();
        return Err(format!("{} failed on {} ({})", r.id, f.input, f.property));
    }
    let mut shown = Vec::new();
    for p in props {
        let stats: Vec<_> = r.properties.iter().filter(|s| s.name == *p).collect();
        if stats.is_empty() {
            return Err(format!("{}: no property named {p:?}", r.id));
        }
        for s in stats {
            if s.cases < min {
                return Err(format!("{}: {p} ran {} cases, need {min}", r.id, s.cases));
            }
            shown.push(s.cases);
        }
    }
    let lo = shown.iter().min().copied().unwrap_or(0);
    Ok(format!("{} properties, at least {lo} cases each", shown.len()))
}

/// Every property of the report passed with at least `min` cases.
fn all_counted(r: &PropertyReport, min: usize) -> Result<String, String> {
    let names: Vec<&str> = r.properties.iter().map(|p| p.name.as_str()).collect();
    counted(r, &names, min)
}

fn both(a: Result<String, String>, b: Result<String, String>) -> Result<String, String> {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(format!("{x}; {y}")),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn caught(r: &PropertyReport) -> Result<String, String> {
    match r.smallest_failure() {
        None => Err(format!("{} did not notice the mutation", r.id)),
        Some(f) if f.nodes > 10 => Err(format!("{} counterexample has {} nodes: {}", r.id, f.nodes, f.input)),
        Some(f) => Ok(format!("{} caught it with {} nodes: {}", r.id, f.nodes, f.input)),
    }
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig::default();
    assert_eq!(cfg.witness_fuel, 1000);
    assert_eq!(ORACLE_MAX_NODES, 12);
    let reports: HashMap<&str, PropertyReport> =
        SUITES.iter().map(|s| (*s, run_suite(s, &cfg).unwrap())).collect();
    let r = |id: &str| &reports[id];
    let mut v = Verdict { lines: Vec::new(), failed: 0 };

    v.record(1, "source steps are simulated in VFS", all_counted(r("thm1-simulation"), 500));
    v.record(2, "CPS decomposes through VFS", all_counted(r("thm2-decomposition"), 500));
    v.record(
        3,
        "VFS and the modified CPS target correspond",
        both(all_counted(r("thm3-roundtrip"), 1000), all_counted(r("thm3-simulation"), 1000)),
    );
    v.record(
        4,
        "direct-style correspondences",
        both(all_counted(r("thm4-ves-vfs"), 1000), all_counted(r("thm4-ces-cnf"), 1000)),
    );
    v.record(5, "normal forms correspond to small CPS", all_counted(r("thm5-cnf-cps"), 500));
    v.record(
        6,
        "reflections",
        both(all_counted(r("refl-ljq-q"), 300), all_counted(r("refl-q-lnf"), 300)),
    );
    let oracles = ["oracle-admin", "oracle-knl", "oracle-pi"]
        .iter()
        .map(|id| all_counted(r(id), 1))
        .reduce(both)
        .unwrap();
    v.record(7, "normal-form oracles up to 12 nodes", oracles);
    v.record(
        8,
        "typing and subject reduction",
        both(all_counted(r("typing-admissible"), 500), all_counted(r("subject-reduction"), 500)),
    );
    let linear = [
        counted(r("thm5-cnf-cps"), &["normal forms survive the round trip"], 500),
        all_counted(r("linearity"), 500),
    ];
    v.record(9, "continuations are used linearly", linear.into_iter().reduce(both).unwrap());

    let mutated = SuiteConfig { mutation: Some(NegMutation::DropEtaExpansion), ..SuiteConfig::default() };
    let m2 = run_suite("thm2-decomposition", &mutated).unwrap();
    let m3 = run_suite("thm3-roundtrip", &mutated).unwrap();
    v.record(10, "a broken translation is caught and shrunk", both(caught(&m2), caught(&m3)));

    for (id, rep) in &reports {
        if !rep.passed() {
            println!("suite {id} failed:\n{}", rep.render_text());
        }
    }
    assert_eq!(v.failed, 0, "failing criteria:\n{}", v.lines.iter().filter(|l| l.starts_with("FAIL")).cloned().collect::<Vec<_>>().join("\n"));
}
