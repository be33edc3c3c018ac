//! Exhaustive enumeration over a two-name vocabulary and the normal-form oracles.

use rayon::prelude::*;

use crate::direct_style::{is_cnf, pi_normalize_ga, Ga, TermGa};
use crate::lambda_c::{admin_normalize, is_anf, LambdaC, TermC};
use crate::ljq::{is_lnf, knl, TermQ, ValueQ, Q};
use crate::name::Name;
use crate::rewrite::{brute_force_normal_forms, System};
use crate::rewrite::Syntax;

use super::{Failure, PropertyReport, PropertyStat};

/// Node bound for the exhaustive oracles.
pub const ORACLE_MAX_NODES: usize = 12;
/// Terms the brute-force search may visit before giving up.
pub const ORACLE_LIMIT: usize = 100_000;

fn vocab() -> [Name; 2] {
    [Name::new("x"), Name::new("y")]
}

/// Every source term of exactly `n` nodes, for each `n ≤ max`.
pub fn enumerate_c(max: usize) -> Vec<Vec<TermC>> {
    let names = vocab();
    let mut by: Vec<Vec<TermC>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut out = Vec::new();
        if n == 1 {
            out.extend(names.iter().cloned().map(TermC::Var));
        }
        if n >= 3 {
            for x in &names {
                for b in &by[n - 2] {
                    out.push(TermC::Lam(x.clone(), Box::new(b.clone())));
                }
            }
        }
        for i in 1..n.saturating_sub(1) {
            let j = n - 1 - i;
            for m in &by[i] {
                for k in &by[j] {
                    out.push(TermC::App(Box::new(m.clone()), Box::new(k.clone())));
                }
            }
        }
        for i in 1..n.saturating_sub(2) {
            let j = n - 2 - i;
            for x in &names {
                for m in &by[i] {
                    for k in &by[j] {
                        out.push(TermC::Let(x.clone(), Box::new(m.clone()), Box::new(k.clone())));
                    }
                }
            }
        }
        by[n] = out;
    }
    by
}

/// One-cut terms by exact size, with values alongside.
pub fn enumerate_q(max: usize) -> Vec<Vec<TermQ>> {
    let names = vocab();
    let mut terms: Vec<Vec<TermQ>> = vec![Vec::new(); max + 1];
    let mut values: Vec<Vec<ValueQ>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut vs = Vec::new();
        if n == 1 {
            vs.extend(names.iter().cloned().map(ValueQ::Var));
        }
        if n >= 3 {
            for x in &names {
                for b in &terms[n - 2] {
                    vs.push(ValueQ::Lam(x.clone(), Box::new(b.clone())));
                }
            }
        }
        values[n] = vs;
        let mut ts: Vec<TermQ> = values[n - 1].iter().cloned().map(TermQ::Ret).collect();
        for i in 1..n.saturating_sub(3) {
            let j = n - 3 - i;
            for h in &names {
                for y in &names {
                    for v in &values[i] {
                        for b in &terms[j] {
                            ts.push(TermQ::LIntro(h.clone(), v.clone(), y.clone(), Box::new(b.clone())));
                        }
                    }
                }
            }
        }
        for i in 1..n.saturating_sub(2) {
            let j = n - 2 - i;
            for x in &names {
                for m in &terms[i] {
                    for b in &terms[j] {
                        ts.push(TermQ::Cut(Box::new(m.clone()), x.clone(), Box::new(b.clone())));
                    }
                }
            }
        }
        terms[n] = ts;
    }
    terms
}

pub fn enumerate_ga(max: usize) -> Vec<Vec<TermGa>> {
    let names = vocab();
    let mut by: Vec<Vec<TermGa>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut out = Vec::new();
        if n == 1 {
            out.extend(names.iter().cloned().map(TermGa::Var));
        }
        if n >= 3 {
            for x in &names {
                for b in &by[n - 2] {
                    out.push(TermGa::Lam(x.clone(), Box::new(b.clone())));
                }
            }
        }
        for i in 1..n {
            for j in 1..n {
                if i + j + 2 >= n {
                    continue;
                }
                let k = n - 2 - i - j;
                for x in &names {
                    for m in &by[i] {
                        for a in &by[j] {
                            for p in &by[k] {
                                out.push(TermGa::GApp(
                                    Box::new(m.clone()),
                                    Box::new(a.clone()),
                                    x.clone(),
                                    Box::new(p.clone()),
                                ));
                            }
                        }
                    }
                }
            }
        }
        by[n] = out;
    }
    by
}

/// Checks that the search finds exactly one normal form and that it equals `fast`.
fn compare<S: System>(sys: &S, t: &S::T, fast: Result<S::T, String>, grammar: impl Fn(&S::T) -> bool) -> Option<(String, String)> {
    let nfs = match brute_force_normal_forms(sys, t, None, ORACLE_LIMIT) {
        Ok(n) => n,
        Err(e) => return Some(("a finite search".into(), e.to_string())),
    };
    let fast = match fast {
        Ok(f) => f,
        Err(e) => return Some(("a normal form".into(), e)),
    };
    if nfs.len() != 1 {
        let shown: Vec<String> = nfs.iter().map(|n| n.to_string()).collect();
        return Some(("one normal form".into(), format!("{{{}}}", shown.join(", "))));
    }
    if !nfs[0].alpha_eq(&fast) {
        return Some((nfs[0].to_string(), fast.to_string()));
    }
    if !grammar(&fast) {
        return Some(("a term of the target grammar".into(), fast.to_string()));
    }
    None
}

fn run<T: Syntax>(id: &str, property: &str, terms: Vec<T>, check: impl Fn(&T) -> Option<(String, String)> + Sync) -> PropertyReport {
    let results: Vec<(usize, String, usize, (String, String))> = terms
        .par_iter()
        .enumerate()
        .filter_map(|(i, t)| check(t).map(|m| (i, t.to_string(), t.size(), m)))
        .collect();
    let failures: Vec<Failure> = results
        .into_iter()
        .map(|(case, input, nodes, (expected, actual))| Failure {
            property: property.to_string(),
            case,
            input,
            nodes,
            expected,
            actual,
            trace: None,
        })
        .collect();
    PropertyReport {
        id: id.to_string(),
        cases: terms.len(),
        properties: vec![PropertyStat {
            name: property.to_string(),
            cases: terms.len(),
            discarded: 0,
            failures: failures.len(),
        }],
        failures,
    }
}

pub fn oracle_admin(max: usize) -> PropertyReport {
    let terms: Vec<TermC> = enumerate_c(max).into_iter().flatten().collect();
    let sys = LambdaC::admin();
    run("oracle-admin", "admin normal form is unique and computed", terms, |t| {
        let fast = admin_normalize(t).map(|tr| tr.last().clone()).map_err(|e| e.to_string());
        compare(&sys, t, fast, is_anf)
    })
}

pub fn oracle_knl(max: usize) -> PropertyReport {
    let terms: Vec<TermQ> = enumerate_q(max).into_iter().flatten().collect();
    let sys = Q::pi();
    run("oracle-knl", "commutative normal form of one-cut terms is unique and computed", terms, |t| {
        compare(&sys, t, Ok(knl(t)), is_lnf)
    })
}

pub fn oracle_pi(max: usize) -> PropertyReport {
    let terms: Vec<TermGa> = enumerate_ga(max).into_iter().flatten().collect();
    run("oracle-pi", "commutative normal form of generalized applications is unique and computed", terms, |t| {
        let fast = pi_normalize_ga(t, ORACLE_LIMIT).map_err(|e| e.to_string());
        compare(&Ga, t, fast, is_cnf)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations_match_tree_sizes() {
        for (n, ts) in enumerate_c(8).iter().enumerate() {
            assert!(ts.iter().all(|t| t.size() == n));
        }
        for (n, ts) in enumerate_q(9).iter().enumerate() {
            assert!(ts.iter().all(|t| t.size() == n), "size {n}");
        }
        for (n, ts) in enumerate_ga(9).iter().enumerate() {
            assert!(ts.iter().all(|t| t.size() == n));
        }
    }

    #[test]
    fn small_counts() {
        let c = enumerate_c(3);
        assert_eq!(c[1].len(), 2);
        assert_eq!(c[2].len(), 0);
        // \x.x, \x.y, \y.x, \y.y, and four applications of variables
        assert_eq!(c[3].len(), 8);
    }

    #[test]
    fn empty_rule_set_returns_the_term() {
        let t = crate::lambda_c::app(crate::lambda_c::var("x"), crate::lambda_c::var("y"));
        let sys = LambdaC::with_rules(&[]).unwrap();
        let nfs = brute_force_normal_forms(&sys, &t, None, 10).unwrap();
        assert_eq!(nfs, vec![t]);
    }

    #[test]
    fn small_oracles_pass() {
        assert!(oracle_admin(8).passed());
        assert!(oracle_knl(8).passed());
        assert!(oracle_pi(8).passed());
    }
}
