//! Property suites over every calculus and translation, with random and
//! exhaustive inputs, shrinking, and report rendering.

pub mod gen;
pub mod oracle;
pub mod shrink;
mod suites;

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::cps::{NegMutation, NegativeTranslation};
use crate::error::{Error, Result};
use crate::rewrite::Syntax;

pub use gen::{base_context, gen_planted_c, gen_typed_any, gen_typed_c, random_type, GenConfig, Rng64};
pub use shrink::{shrink_failure, Case};
pub use suites::{check_decomposition, expansion_diagram_check, ga_of_c};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub property: String,
    /// Index of the generated case, for reproduction with the same seed.
    pub case: usize,
    pub input: String,
    pub nodes: usize,
    pub expected: String,
    pub actual: String,
    pub trace: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyStat {
    pub name: String,
    pub cases: usize,
    pub discarded: usize,
    pub failures: usize,
}

/// Outcome of one suite. It passes exactly when `failures` is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub id: String,
    pub cases: usize,
    pub properties: Vec<PropertyStat>,
    pub failures: Vec<Failure>,
}

impl PropertyReport {
    pub fn new(id: &str) -> PropertyReport {
        PropertyReport { id: id.to_string(), ..PropertyReport::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: PropertyReport) {
        self.cases += other.cases;
        self.properties.extend(other.properties);
        self.failures.extend(other.failures);
    }

    pub fn smallest_failure(&self) -> Option<&Failure> {
        self.failures.iter().min_by_key(|f| (f.nodes, f.case))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {} ({} cases)", self.id, self.cases);
        for p in &self.properties {
            let _ = writeln!(
                out,
                "  {:<4} {}: {} cases, {} discarded, {} failures",
                if p.failures == 0 { "ok" } else { "FAIL" },
                p.name,
                p.cases,
                p.discarded,
                p.failures
            );
        }
        for f in self.failures.iter().take(SHOWN_FAILURES) {
            let _ = writeln!(out, "  counterexample for {} (case {}, {} nodes)", f.property, f.case, f.nodes);
            let _ = writeln!(out, "    input:    {}", f.input);
            let _ = writeln!(out, "    expected: {}", f.expected);
            let _ = writeln!(out, "    actual:   {}", f.actual);
            if let Some(t) = &f.trace {
                for line in t.lines() {
                    let _ = writeln!(out, "    | {line}");
                }
            }
        }
        out
    }

    /// One tab-separated `key:value` record per line.
    pub fn render_structured(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "pass" } else { "fail" };
        let _ = writeln!(
            out,
            "record:suite\tsuite:{}\tstatus:{status}\tcases:{}\tfailures:{}",
            self.id,
            self.cases,
            self.failures.len()
        );
        for p in &self.properties {
            let _ = writeln!(
                out,
                "record:property\tsuite:{}\tproperty:{}\tcases:{}\tdiscarded:{}\tfailures:{}",
                self.id,
                clean(&p.name),
                p.cases,
                p.discarded,
                p.failures
            );
        }
        for f in &self.failures {
            let _ = writeln!(
                out,
                "record:failure\tsuite:{}\tproperty:{}\tcase:{}\tnodes:{}\tinput:{}\texpected:{}\tactual:{}",
                self.id,
                clean(&f.property),
                f.case,
                f.nodes,
                clean(&f.input),
                clean(&f.expected),
                clean(&f.actual)
            );
        }
        out
    }
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

const SHOWN_FAILURES: usize = 3;
/// Failures kept per property; the stat keeps the full count.
const KEPT_FAILURES: usize = 20;

/// Options shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub gen: GenConfig,
    /// Overrides every property's default case count.
    pub samples: Option<usize>,
    /// Node budget for simulation witness searches.
    pub witness_fuel: usize,
    /// Corrupts the negative translation, to confirm the suites notice.
    pub mutation: Option<NegMutation>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig { gen: GenConfig::default(), samples: None, witness_fuel: 1000, mutation: None }
    }
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> SuiteConfig {
        SuiteConfig { gen: GenConfig { seed, ..GenConfig::default() }, ..SuiteConfig::default() }
    }

    pub fn negative(&self) -> NegativeTranslation {
        match self.mutation {
            Some(m) => NegativeTranslation::mutated(m),
            None => NegativeTranslation::standard(),
        }
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

/// Result of checking one input.
#[derive(Clone, Debug)]
pub enum Outcome {
    Discard,
    Fail(Mismatch),
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub property: String,
    pub expected: String,
    pub actual: String,
    pub trace: Option<String>,
}

/// `Ok` means the case passed.
pub type Check = std::result::Result<(), Outcome>;

pub fn fail(property: &str, expected: impl ToString, actual: impl ToString) -> Outcome {
    Outcome::Fail(Mismatch {
        property: property.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        trace: None,
    })
}

/// Alpha-equality check.
pub fn same<T: Syntax>(property: &str, expected: &T, actual: &T) -> Check {
    if expected.alpha_eq(actual) {
        Ok(())
    } else {
        Err(fail(property, expected, actual))
    }
}

pub fn ensure(property: &str, ok: bool, expected: impl ToString, actual: impl ToString) -> Check {
    if ok {
        Ok(())
    } else {
        Err(fail(property, expected, actual))
    }
}

/// Turns an error into a failure of `property`.
pub fn must<T>(property: &str, r: Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(|e| fail(property, "success", format!("error: {e}")))
}

/// Turns an error into a discarded case.
pub fn given<T>(r: Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(|_| Outcome::Discard)
}

enum CaseResult {
    Passed,
    Discarded,
    Failed(Failure),
}

/// Runs one property over `default_n` generated cases (or the sample override).
pub fn run_property<I: Case>(
    cfg: &SuiteConfig,
    report: &mut PropertyReport,
    name: &str,
    default_n: usize,
    gen: impl Fn(&mut Rng64) -> Option<I> + Sync,
    check: impl Fn(&I) -> Check + Sync,
) {
    let n = cfg.count(default_n);
    let salt = format!("{}/{name}", report.id);
    let results: Vec<CaseResult> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = cfg.gen.rng_for(&salt, i);
            let Some(input) = (0..16).find_map(|_| gen(&mut rng)) else { return CaseResult::Discarded };
            match check(&input) {
                Ok(()) => CaseResult::Passed,
                Err(Outcome::Discard) => CaseResult::Discarded,
                Err(Outcome::Fail(first)) => {
                    let small = shrink_failure(&input, |c| matches!(check(c), Err(Outcome::Fail(_))));
                    let m = match check(&small) {
                        Err(Outcome::Fail(m)) => m,
                        _ => first,
                    };
                    CaseResult::Failed(Failure {
                        property: if m.property == name { m.property } else { format!("{name}: {}", m.property) },
                        case: i,
                        input: small.render(),
                        nodes: small.nodes(),
                        expected: m.expected,
                        actual: m.actual,
                        trace: m.trace,
                    })
                }
            }
        })
        .collect();
    let mut stat = PropertyStat { name: name.to_string(), cases: 0, discarded: 0, failures: 0 };
    for r in results {
        match r {
            CaseResult::Passed => stat.cases += 1,
            CaseResult::Discarded => stat.discarded += 1,
            CaseResult::Failed(f) => {
                stat.cases += 1;
                stat.failures += 1;
                if stat.failures <= KEPT_FAILURES {
                    report.failures.push(f);
                }
            }
        }
    }
    report.cases += stat.cases;
    report.properties.push(stat);
}

/// Every suite identifier accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "thm1-simulation",
    "thm2-decomposition",
    "thm3-roundtrip",
    "thm3-simulation",
    "thm4-ves-vfs",
    "thm4-ces-cnf",
    "thm5-cnf-cps",
    "refl-ljq-q",
    "refl-q-lnf",
    "oracle-admin",
    "oracle-knl",
    "oracle-pi",
    "typing-admissible",
    "subject-reduction",
    "linearity",
    "lemma-anf",
    "lemma-q",
    "lemma-vfs",
    "lemma-cps",
    "lemma-direct",
];

pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<PropertyReport> {
    cfg.gen.validate()?;
    Ok(match id {
        "thm1-simulation" => suites::thm1(cfg),
        "thm2-decomposition" => suites::thm2(cfg),
        "thm3-roundtrip" => suites::thm3_roundtrip(cfg),
        "thm3-simulation" => suites::thm3_simulation(cfg),
        "thm4-ves-vfs" => suites::thm4_ves_vfs(cfg),
        "thm4-ces-cnf" => suites::thm4_ces_cnf(cfg),
        "thm5-cnf-cps" => suites::thm5(cfg),
        "refl-ljq-q" => suites::refl_ljq_q(cfg),
        "refl-q-lnf" => suites::refl_q_lnf(cfg),
        "oracle-admin" => oracle::oracle_admin(oracle::ORACLE_MAX_NODES),
        "oracle-knl" => oracle::oracle_knl(oracle::ORACLE_MAX_NODES),
        "oracle-pi" => oracle::oracle_pi(oracle::ORACLE_MAX_NODES),
        "typing-admissible" => suites::typing_admissible(cfg),
        "subject-reduction" => suites::subject_reduction(cfg),
        "linearity" => suites::linearity(cfg),
        "lemma-anf" => suites::lemma_anf(cfg),
        "lemma-q" => suites::lemma_q(cfg),
        "lemma-vfs" => suites::lemma_vfs(cfg),
        "lemma-cps" => suites::lemma_cps(cfg),
        "lemma-direct" => suites::lemma_direct(cfg),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// Runs `id`, or every suite when `id` is `all`.
pub fn run_suites(id: &str, cfg: &SuiteConfig) -> Result<Vec<PropertyReport>> {
    if id == "all" {
        SUITES.iter().map(|s| run_suite(s, cfg)).collect()
    } else {
        Ok(vec![run_suite(id, cfg)?])
    }
}
