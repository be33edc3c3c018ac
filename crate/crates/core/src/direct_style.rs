//! The two sub-kernels of the administrative normal forms (value enclosed and
//! continuation enclosing style), generalized applications with their commutative
//! normal forms, and the isomorphisms relating them to the sequent and CPS targets.

use std::fmt;

use crate::cps::{Command, Cont, TermCps, ValueCps};
use crate::error::{Error, Result};
use crate::lambda_c::{avoid_binder, contract_c, infer_c, let_compose, TermC};
use crate::name::{fresh_like, fresh_name, Name, NameSet};
use crate::rewrite::{sort_redexes, Calculus, Path, Rule, Scope, Syntax, System, Trace, TraceStep, Tree};
use crate::types::{check_against, synthesize, SimpleType, Ty, TypingContext, Unifier};
use crate::vfs::{FormalContext, TermVfs, ValueVfs};

fn fv_minus(t: &TermC, x: &Name) -> NameSet {
    let mut s = t.free_vars();
    s.remove(x);
    s
}

fn all_nodes(t: &TermC, path: &mut Vec<usize>, out: &mut Vec<(Path, TermC)>) {
    out.push((Path(path.clone()), t.clone()));
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        all_nodes(c, path, out);
        path.pop();
    }
}

// ---------------------------------------------------------------------------
// Value enclosed style

/// Recognizer: `M ::= V | let x := V in c_x`.
pub fn is_ves(t: &TermC) -> bool {
    match t {
        TermC::Var(_) => true,
        TermC::Lam(_, m) => is_ves(m),
        TermC::Let(x, v, c) => is_ves_value(v) && is_ves_ctx(x, c),
        TermC::App(..) => false,
    }
}

pub fn is_ves_value(v: &TermC) -> bool {
    v.is_value() && is_ves(v)
}

/// Recognizer for `c_x ::= M | let y := xW in N` with `x ∉ FV(W) ∪ FV(N)`.
pub fn is_ves_ctx(x: &Name, c: &TermC) -> bool {
    match ves_let_app(x, c) {
        Some((_, w, n)) => is_ves_value(w) && is_ves(n),
        None => is_ves(c),
    }
}

/// Matches `let y := xW in N` with the freshness condition on `x`.
fn ves_let_app<'a>(x: &Name, c: &'a TermC) -> Option<(&'a Name, &'a TermC, &'a TermC)> {
    if let TermC::Let(y, b, n) = c {
        if let TermC::App(h, w) = &**b {
            if **h == TermC::Var(x.clone()) && w.is_value() && !w.occurs_free(x) && (y == x || !n.occurs_free(x)) {
                return Some((y, w, n));
            }
        }
    }
    None
}

/// A term of the value enclosed style.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermVes(TermC);

impl TermVes {
    pub fn new(t: TermC) -> Result<TermVes> {
        if is_ves(&t) {
            Ok(TermVes(t))
        } else {
            Err(Error::Malformed(format!("not in value enclosed style: {t}")))
        }
    }

    pub fn as_c(&self) -> &TermC {
        &self.0
    }

    pub fn into_c(self) -> TermC {
        self.0
    }
}

impl fmt::Display for TermVes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Syntax for TermVes {
    fn tree(&self) -> Tree {
        self.0.tree()
    }
}

/// `LET y := M in P`; the derived let of the kernel restricted to this style.
pub fn ves_let_compose(y: &Name, m: &TermVes, p: &TermVes) -> TermVes {
    TermVes(let_compose(y, &m.0, &p.0))
}

/// `LET y := c_z in P`, which requires `z ∉ FV(P)`.
pub fn ves_let_compose_ctx(z: &Name, y: &Name, c: &TermC, p: &TermVes) -> Result<TermC> {
    if p.0.occurs_free(z) {
        return Err(Error::FreshnessViolation(z.clone()));
    }
    if !is_ves_ctx(z, c) {
        return Err(Error::Malformed(format!("not a context for {z}: {c}")));
    }
    Ok(let_compose(y, c, &p.0))
}

/// Result of a step in the value enclosed style: `let_v` may leave the grammar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VesContractum {
    Ves(TermVes),
    OutsideVes(TermC),
}

fn contract_ves(t: &TermC, rule: Rule) -> Option<TermC> {
    match (rule, t) {
        (Rule::BV, TermC::Let(y, l, c)) => {
            let TermC::Lam(x, m) = &**l else { return None };
            let (z, v, p) = ves_let_app(y, c)?;
            let (x, m) = avoid_binder(x, m, &fv_minus(p, z));
            Some(TermC::Let(x, Box::new(v.clone()), Box::new(let_compose(z, &m, p))))
        }
        (Rule::LetV, TermC::Let(..)) => contract_c(t, Rule::LetV),
        _ => None,
    }
}

/// Redexes whose contractum stays in the style: `let_v` only on plain contexts.
fn ves_redex(t: &TermC, rule: Rule) -> bool {
    match (rule, t) {
        (Rule::LetV, TermC::Let(x, v, c)) => v.is_value() && ves_let_app(x, c).is_none(),
        (Rule::BV, _) => contract_ves(t, rule).is_some(),
        _ => false,
    }
}

pub fn step_ves(t: &TermVes, rule: Rule, path: &Path) -> Result<VesContractum> {
    let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
    if !Ves::ALL_RULES.contains(&rule) {
        return Err(Error::RuleDisabled(rule.to_string()));
    }
    let r = t.0.map_at(&path.0, &mut |s| contract_ves(s, rule).ok_or_else(no)).map_err(|e| match e {
        Error::Malformed(_) => no(),
        e => e,
    })?;
    Ok(if is_ves(&r) { VesContractum::Ves(TermVes(r)) } else { VesContractum::OutsideVes(r) })
}

#[derive(Clone, Debug)]
pub struct Ves;

impl Ves {
    pub const ALL_RULES: [Rule; 2] = [Rule::BV, Rule::LetV];
}

impl System for Ves {
    type T = TermVes;

    fn calculus(&self) -> Calculus {
        Calculus::Ves
    }

    fn rules(&self) -> Vec<Rule> {
        Ves::ALL_RULES.to_vec()
    }

    fn redexes(&self, t: &TermVes) -> Vec<(Rule, Path)> {
        let mut ns = Vec::new();
        all_nodes(&t.0, &mut Vec::new(), &mut ns);
        let mut found = Vec::new();
        for (p, n) in ns {
            for r in Ves::ALL_RULES {
                if ves_redex(&n, r) {
                    found.push((r, p.clone()));
                }
            }
        }
        sort_redexes(&Ves::ALL_RULES, found)
    }

    fn step(&self, t: &TermVes, rule: Rule, path: &Path) -> Result<TermVes> {
        match step_ves(t, rule, path)? {
            VesContractum::Ves(r) => Ok(r),
            VesContractum::OutsideVes(_) => Err(Error::NoRedex { rule: rule.to_string(), path: path.to_string() }),
        }
    }
}

// ---------------------------------------------------------------------------
// Continuation enclosing style

/// Recognizer: `M ::= V | let x := VW in M`.
pub fn is_ces(t: &TermC) -> bool {
    match t {
        TermC::Var(_) => true,
        TermC::Lam(_, m) => is_ces(m),
        TermC::Let(_, b, m) => match &**b {
            TermC::App(v, w) => is_ces_value(v) && is_ces_value(w) && is_ces(m),
            _ => false,
        },
        TermC::App(..) => false,
    }
}

fn is_ces_value(v: &TermC) -> bool {
    v.is_value() && is_ces(v)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermCes(TermC);

impl TermCes {
    pub fn new(t: TermC) -> Result<TermCes> {
        if is_ces(&t) {
            Ok(TermCes(t))
        } else {
            Err(Error::Malformed(format!("not in continuation enclosing style: {t}")))
        }
    }

    pub fn as_c(&self) -> &TermC {
        &self.0
    }

    pub fn into_c(self) -> TermC {
        self.0
    }
}

impl fmt::Display for TermCes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Syntax for TermCes {
    fn tree(&self) -> Tree {
        self.0.tree()
    }
}

/// `LET y := M in P` whose base case substitutes.
pub fn ces_let_compose(y: &Name, m: &TermC, p: &TermC) -> TermC {
    match m {
        TermC::Let(x, b, n) => {
            let (x, n) = avoid_binder(x, n, &fv_minus(p, y));
            TermC::Let(x, b.clone(), Box::new(ces_let_compose(y, &n, p)))
        }
        v => p.subst(y, v),
    }
}

fn contract_ces(t: &TermC) -> Option<TermC> {
    let TermC::Let(y, b, p) = t else { return None };
    let TermC::App(l, v) = &**b else { return None };
    let TermC::Lam(x, m) = &**l else { return None };
    if !v.is_value() {
        return None;
    }
    Some(ces_let_compose(y, &m.subst(x, v), p))
}

#[derive(Clone, Debug)]
pub struct Ces;

impl System for Ces {
    type T = TermCes;

    fn calculus(&self) -> Calculus {
        Calculus::Ces
    }

    fn rules(&self) -> Vec<Rule> {
        vec![Rule::BetaV]
    }

    fn redexes(&self, t: &TermCes) -> Vec<(Rule, Path)> {
        let mut ns = Vec::new();
        all_nodes(&t.0, &mut Vec::new(), &mut ns);
        ns.into_iter().filter(|(_, n)| contract_ces(n).is_some()).map(|(p, _)| (Rule::BetaV, p)).collect()
    }

    fn step(&self, t: &TermCes, rule: Rule, path: &Path) -> Result<TermCes> {
        let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
        if rule != Rule::BetaV {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        let r = t.0.map_at(&path.0, &mut |s| contract_ces(s).ok_or_else(no)).map_err(|e| match e {
            Error::Malformed(_) => no(),
            e => e,
        })?;
        TermCes::new(r)
    }
}

pub fn step_ces(t: &TermCes, path: &Path) -> Result<TermCes> {
    Ces.step(t, Rule::BetaV, path)
}

// ---------------------------------------------------------------------------
// Generalized applications

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermGa {
    Var(Name),
    Lam(Name, Box<TermGa>),
    /// `M(N, x. P)`
    GApp(Box<TermGa>, Box<TermGa>, Name, Box<TermGa>),
}

pub fn gvar(x: &str) -> TermGa {
    TermGa::Var(Name::parse(x))
}

pub fn glam(x: &str, m: TermGa) -> TermGa {
    TermGa::Lam(Name::parse(x), Box::new(m))
}

pub fn gapp(m: TermGa, n: TermGa, x: &str, p: TermGa) -> TermGa {
    TermGa::GApp(Box::new(m), Box::new(n), Name::parse(x), Box::new(p))
}

impl TermGa {
    pub fn is_value(&self) -> bool {
        !matches!(self, TermGa::GApp(..))
    }

    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            TermGa::Var(x) => {
                if !bound.contains(x) {
                    acc.insert(x.clone());
                }
            }
            TermGa::Lam(x, m) => {
                bound.push(x.clone());
                m.fv_into(bound, acc);
                bound.pop();
            }
            TermGa::GApp(m, n, x, p) => {
                m.fv_into(bound, acc);
                n.fv_into(bound, acc);
                bound.push(x.clone());
                p.fv_into(bound, acc);
                bound.pop();
            }
        }
    }

    pub fn free_vars(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.fv_into(&mut Vec::new(), &mut acc);
        acc
    }

    pub fn occurs_free(&self, x: &Name) -> bool {
        self.free_vars().contains(x)
    }

    pub fn names(&self, acc: &mut NameSet) {
        match self {
            TermGa::Var(x) => {
                acc.insert(x.clone());
            }
            TermGa::Lam(x, m) => {
                acc.insert(x.clone());
                m.names(acc);
            }
            TermGa::GApp(m, n, x, p) => {
                acc.insert(x.clone());
                m.names(acc);
                n.names(acc);
                p.names(acc);
            }
        }
    }

    pub fn all_names(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.names(&mut acc);
        acc
    }

    pub fn subst(&self, y: &Name, v: &TermGa) -> TermGa {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &TermGa, fv: &NameSet) -> TermGa {
        match self {
            TermGa::Var(x) if x == y => v.clone(),
            TermGa::Var(_) => self.clone(),
            TermGa::Lam(x, m) => {
                let (x, m) = ga_binder_subst(x, m, y, v, fv);
                TermGa::Lam(x, Box::new(m))
            }
            TermGa::GApp(m, n, x, p) => {
                let m = m.subst_with(y, v, fv);
                let n = n.subst_with(y, v, fv);
                let (x, p) = ga_binder_subst(x, p, y, v, fv);
                TermGa::GApp(Box::new(m), Box::new(n), x, Box::new(p))
            }
        }
    }

    pub fn rename(&self, from: &Name, to: &Name) -> TermGa {
        self.subst(from, &TermGa::Var(to.clone()))
    }

    pub fn children(&self) -> Vec<&TermGa> {
        match self {
            TermGa::Var(_) => vec![],
            TermGa::Lam(_, m) => vec![m],
            TermGa::GApp(m, n, _, p) => vec![m, n, p],
        }
    }

    pub fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermGa) -> Result<TermGa>) -> Result<TermGa> {
        let Some((&i, rest)) = path.split_first() else { return f(self) };
        let bad = || Error::Malformed(format!("path index {i} out of range"));
        Ok(match (self, i) {
            (TermGa::Lam(x, m), 0) => TermGa::Lam(x.clone(), Box::new(m.map_at(rest, f)?)),
            (TermGa::GApp(m, n, x, p), 0) => TermGa::GApp(Box::new(m.map_at(rest, f)?), n.clone(), x.clone(), p.clone()),
            (TermGa::GApp(m, n, x, p), 1) => TermGa::GApp(m.clone(), Box::new(n.map_at(rest, f)?), x.clone(), p.clone()),
            (TermGa::GApp(m, n, x, p), 2) => TermGa::GApp(m.clone(), n.clone(), x.clone(), Box::new(p.map_at(rest, f)?)),
            _ => return Err(bad()),
        })
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            TermGa::Var(x) => sc.var(x),
            TermGa::Lam(x, m) => Tree::node("lam", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
            TermGa::GApp(m, n, x, p) => {
                let tm = m.tree_in(sc);
                let tn = n.tree_in(sc);
                Tree::node("gapp", 1, vec![tm, tn, sc.under(x, |sc| p.tree_in(sc))])
            }
        }
    }
}

fn ga_binder_subst(x: &Name, body: &TermGa, y: &Name, v: &TermGa, fv: &NameSet) -> (Name, TermGa) {
    if x == y || !body.occurs_free(y) {
        return (x.clone(), body.clone());
    }
    if fv.contains(x) {
        let mut avoid = body.all_names();
        avoid.extend(fv.iter().cloned());
        avoid.insert(y.clone());
        let x2 = fresh_like(x, &avoid);
        (x2.clone(), body.rename(x, &x2).subst_with(y, v, fv))
    } else {
        (x.clone(), body.subst_with(y, v, fv))
    }
}

fn ga_avoid(x: &Name, body: &TermGa, clash: &NameSet) -> (Name, TermGa) {
    if !clash.contains(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = body.all_names();
    avoid.extend(clash.iter().cloned());
    let x2 = fresh_like(x, &avoid);
    (x2.clone(), body.rename(x, &x2))
}

impl Syntax for TermGa {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl fmt::Display for TermGa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermGa::Var(x) => write!(f, "{x}"),
            TermGa::Lam(x, m) => write!(f, "\\{x}. {m}"),
            TermGa::GApp(m, n, x, p) => {
                match &**m {
                    TermGa::Lam(..) => write!(f, "({m})")?,
                    _ => write!(f, "{m}")?,
                }
                write!(f, "({n}, {x}. {p})")
            }
        }
    }
}

/// Every generalized application has the shape `V(W, x.P)`.
pub fn is_cnf(t: &TermGa) -> bool {
    match t {
        TermGa::Var(_) => true,
        TermGa::Lam(_, m) => is_cnf(m),
        TermGa::GApp(m, n, _, p) => m.is_value() && n.is_value() && is_cnf(m) && is_cnf(n) && is_cnf(p),
    }
}

/// `⟦N\x⟧P`
pub fn left_subst(n: &TermGa, x: &Name, p: &TermGa) -> TermGa {
    match n {
        TermGa::GApp(v, w, y, n3) => {
            let mut clash = p.free_vars();
            clash.remove(x);
            let (y, n3) = ga_avoid(y, n3, &clash);
            TermGa::GApp(v.clone(), w.clone(), y, Box::new(left_subst(&n3, x, p)))
        }
        v => p.subst(x, v),
    }
}

pub fn contract_ga(t: &TermGa, rule: Rule) -> Option<TermGa> {
    let TermGa::GApp(m, n, x, p) = t else { return None };
    let mut clash_p = p.free_vars();
    clash_p.remove(x);
    match (rule, &**m, &**n) {
        (Rule::Pi1, TermGa::GApp(m1, m2, y, m3), _) => {
            let mut clash = n.free_vars();
            clash.extend(clash_p);
            let (y, m3) = ga_avoid(y, m3, &clash);
            let inner = TermGa::GApp(Box::new(m3), n.clone(), x.clone(), p.clone());
            Some(TermGa::GApp(m1.clone(), m2.clone(), y, Box::new(inner)))
        }
        (Rule::Pi2, v, TermGa::GApp(n1, n2, y, n3)) if v.is_value() => {
            let mut clash = v.free_vars();
            clash.extend(clash_p);
            let (y, n3) = ga_avoid(y, n3, &clash);
            let inner = TermGa::GApp(m.clone(), Box::new(n3), x.clone(), p.clone());
            Some(TermGa::GApp(n1.clone(), n2.clone(), y, Box::new(inner)))
        }
        (Rule::BetaV, TermGa::Lam(y, body), w) if w.is_value() => Some(left_subst(&body.subst(y, w), x, p)),
        _ => None,
    }
}

fn ga_nodes(t: &TermGa, path: &mut Vec<usize>, out: &mut Vec<(Path, TermGa)>) {
    out.push((Path(path.clone()), t.clone()));
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        ga_nodes(c, path, out);
        path.pop();
    }
}

fn ga_redexes(t: &TermGa, rules: &[Rule]) -> Vec<(Rule, Path)> {
    let mut ns = Vec::new();
    ga_nodes(t, &mut Vec::new(), &mut ns);
    let mut found = Vec::new();
    for (p, n) in ns {
        for &r in rules {
            if contract_ga(&n, r).is_some() {
                found.push((r, p.clone()));
            }
        }
    }
    sort_redexes(rules, found)
}

fn ga_step(t: &TermGa, rule: Rule, path: &Path, rules: &[Rule]) -> Result<TermGa> {
    if !rules.contains(&rule) {
        return Err(Error::RuleDisabled(rule.to_string()));
    }
    let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
    t.map_at(&path.0, &mut |s| contract_ga(s, rule).ok_or_else(no)).map_err(|e| match e {
        Error::Malformed(_) => no(),
        e => e,
    })
}

/// Generalized applications under the commutative conversions.
#[derive(Clone, Debug)]
pub struct Ga;

impl Ga {
    pub const ALL_RULES: [Rule; 2] = [Rule::Pi1, Rule::Pi2];
}

impl System for Ga {
    type T = TermGa;

    fn calculus(&self) -> Calculus {
        Calculus::Ga
    }

    fn rules(&self) -> Vec<Rule> {
        Ga::ALL_RULES.to_vec()
    }

    fn redexes(&self, t: &TermGa) -> Vec<(Rule, Path)> {
        ga_redexes(t, &Ga::ALL_RULES)
    }

    fn step(&self, t: &TermGa, rule: Rule, path: &Path) -> Result<TermGa> {
        ga_step(t, rule, path, &Ga::ALL_RULES)
    }
}

/// Commutative normal forms under `β_v`.
#[derive(Clone, Debug)]
pub struct Cnf;

impl System for Cnf {
    type T = TermGa;

    fn calculus(&self) -> Calculus {
        Calculus::Cnf
    }

    fn rules(&self) -> Vec<Rule> {
        vec![Rule::BetaV]
    }

    fn redexes(&self, t: &TermGa) -> Vec<(Rule, Path)> {
        ga_redexes(t, &[Rule::BetaV])
    }

    fn step(&self, t: &TermGa, rule: Rule, path: &Path) -> Result<TermGa> {
        if !is_cnf(t) {
            return Err(Error::Malformed(format!("not a commutative normal form: {t}")));
        }
        ga_step(t, rule, path, &[Rule::BetaV])
    }
}

pub fn step_cnf(t: &TermGa, path: &Path) -> Result<TermGa> {
    Cnf.step(t, Rule::BetaV, path)
}

/// Exhaustive commutative conversion, leftmost-outermost with `π1` before `π2`.
pub fn pi_normalize_ga(t: &TermGa, fuel: usize) -> Result<TermGa> {
    Ok(pi_normalize_trace(t, fuel)?.last().clone())
}

/// `π1` to completion, then one outermost `π2`, repeated.
pub fn pi_normalize_trace(t: &TermGa, fuel: usize) -> Result<Trace<TermGa>> {
    let mut tr = Trace::new(t.clone());
    loop {
        let rs = Ga.redexes(tr.last());
        let Some((r, p)) = rs.iter().find(|(r, _)| *r == Rule::Pi1).or_else(|| rs.first()).cloned() else {
            return Ok(tr);
        };
        if tr.len() >= fuel {
            return Err(Error::FuelExhausted { steps: tr.len() });
        }
        let next = Ga.step(tr.last(), r, &p)?;
        tr.steps.push(TraceStep { rule: Ga.rule_id(r), path: p, result: next });
    }
}

pub fn infer_ga(u: &mut Unifier, t: &TermGa) -> Result<Ty> {
    match t {
        TermGa::Var(x) => u.lookup(x),
        TermGa::Lam(x, m) => {
            let a = u.meta();
            u.bind(x, a.clone());
            let b = infer_ga(u, m);
            u.unbind();
            Ok(Ty::arrow(a, b?))
        }
        TermGa::GApp(m, n, x, p) => {
            let tm = infer_ga(u, m)?;
            let a = infer_ga(u, n)?;
            let b = u.meta();
            u.unify(&tm, &Ty::arrow(a, b.clone()))?;
            u.bind(x, b);
            let r = infer_ga(u, p);
            u.unbind();
            r
        }
    }
}

pub fn typecheck_ga(ctx: &TypingContext, t: &TermGa) -> Result<SimpleType> {
    synthesize(ctx, t, |u| infer_ga(u, t))
}

pub fn check_ga(ctx: &TypingContext, t: &TermGa, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_ga(u, t))
}

pub fn check_direct(ctx: &TypingContext, t: &TermC, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_c(u, t))
}

// ---------------------------------------------------------------------------
// Value enclosed style and value-filling style

/// `Ψ`
pub fn psi(t: &TermVes) -> TermVfs {
    psi_c(&t.0)
}

fn psi_c(t: &TermC) -> TermVfs {
    match t {
        TermC::Let(x, v, c) => TermVfs::CutC(psi_v(v), psi_x(x, c)),
        v => TermVfs::Ret(psi_v(v)),
    }
}

/// `Ψ_v`
pub fn psi_v(v: &TermC) -> ValueVfs {
    match v {
        TermC::Var(x) => ValueVfs::Var(x.clone()),
        TermC::Lam(x, m) => ValueVfs::Lam(x.clone(), Box::new(psi_c(m))),
        _ => unreachable!("value expected"),
    }
}

/// `Ψ_x`
pub fn psi_x(x: &Name, c: &TermC) -> FormalContext {
    match ves_let_app(x, c) {
        Some((y, w, n)) => FormalContext::GApp(psi_v(w), y.clone(), Box::new(psi_c(n))),
        None => FormalContext::Bind(x.clone(), Box::new(psi_c(c))),
    }
}

/// `Θ`
pub fn theta(t: &TermVfs) -> TermVes {
    TermVes(theta_c(t))
}

fn theta_c(t: &TermVfs) -> TermC {
    match t {
        TermVfs::Ret(v) => theta_v(v),
        TermVfs::CutC(v, FormalContext::Bind(y, m)) => TermC::Let(y.clone(), Box::new(theta_v(v)), Box::new(theta_c(m))),
        TermVfs::CutC(v, c) => {
            let mut avoid = c.free_vars();
            c.names(&mut avoid);
            let x = fresh_name("x", &avoid);
            TermC::Let(x.clone(), Box::new(theta_v(v)), Box::new(theta_x(&x, c)))
        }
    }
}

/// `Θ_v`
pub fn theta_v(v: &ValueVfs) -> TermC {
    match v {
        ValueVfs::Var(x) => TermC::Var(x.clone()),
        ValueVfs::Lam(x, m) => TermC::Lam(x.clone(), Box::new(theta_c(m))),
    }
}

/// `Θ_x`; the result is a context indexed by `x`.
pub fn theta_x(x: &Name, c: &FormalContext) -> TermC {
    match c {
        FormalContext::Bind(y, m) => {
            let body = theta_c(m);
            if x == y {
                body
            } else {
                body.subst(y, &TermC::Var(x.clone()))
            }
        }
        FormalContext::GApp(w, y, n) => TermC::Let(
            y.clone(),
            Box::new(TermC::App(Box::new(TermC::Var(x.clone())), Box::new(theta_v(w)))),
            Box::new(theta_c(n)),
        ),
    }
}

// ---------------------------------------------------------------------------
// Continuation enclosing style and commutative normal forms

/// `Υ`
pub fn upsilon(t: &TermCes) -> TermGa {
    upsilon_c(&t.0)
}

fn upsilon_c(t: &TermC) -> TermGa {
    match t {
        TermC::Var(x) => TermGa::Var(x.clone()),
        TermC::Lam(x, m) => TermGa::Lam(x.clone(), Box::new(upsilon_c(m))),
        TermC::Let(x, b, m) => match &**b {
            TermC::App(v, w) => {
                TermGa::GApp(Box::new(upsilon_c(v)), Box::new(upsilon_c(w)), x.clone(), Box::new(upsilon_c(m)))
            }
            _ => unreachable!("continuation enclosing style expected"),
        },
        TermC::App(..) => unreachable!("continuation enclosing style expected"),
    }
}

/// `Φ`; defined on commutative normal forms.
pub fn phi(t: &TermGa) -> Result<TermCes> {
    if !is_cnf(t) {
        return Err(Error::Malformed(format!("not a commutative normal form: {t}")));
    }
    Ok(TermCes(phi_c(t)))
}

fn phi_c(t: &TermGa) -> TermC {
    match t {
        TermGa::Var(x) => TermC::Var(x.clone()),
        TermGa::Lam(x, m) => TermC::Lam(x.clone(), Box::new(phi_c(m))),
        TermGa::GApp(v, w, x, m) => TermC::Let(
            x.clone(),
            Box::new(TermC::App(Box::new(phi_c(v)), Box::new(phi_c(w)))),
            Box::new(phi_c(m)),
        ),
    }
}

// ---------------------------------------------------------------------------
// Commutative normal forms and the small CPS target

/// `V~`
pub fn cnf_negative_value(v: &TermGa) -> ValueCps {
    match v {
        TermGa::Var(x) => ValueCps::Var(x.clone()),
        TermGa::Lam(x, m) => ValueCps::Lam(x.clone(), Box::new(cnf_negative(m))),
        TermGa::GApp(..) => unreachable!("value expected"),
    }
}

/// `M≀`
pub fn cnf_negative_command(t: &TermGa) -> Command {
    match t {
        TermGa::GApp(v, w, x, m) => Command::AppVWK(
            cnf_negative_value(v),
            cnf_negative_value(w),
            Cont::KLam(x.clone(), Box::new(cnf_negative_command(m))),
        ),
        v => Command::KApp(cnf_negative_value(v)),
    }
}

/// `M−`
pub fn cnf_negative(t: &TermGa) -> TermCps {
    TermCps(Box::new(cnf_negative_command(t)))
}

/// `M×`
pub fn cps_inverse_command(m: &Command) -> Result<TermGa> {
    Ok(match m {
        Command::KApp(v) => cps_inverse_value(v)?,
        Command::AppVWK(v, w, Cont::KLam(x, n)) => TermGa::GApp(
            Box::new(cps_inverse_value(v)?),
            Box::new(cps_inverse_value(w)?),
            x.clone(),
            Box::new(cps_inverse_command(n)?),
        ),
        _ => return Err(Error::ModeViolation(format!("not in the small target: {m}"))),
    })
}

pub fn cps_inverse_value(v: &ValueCps) -> Result<TermGa> {
    Ok(match v {
        ValueCps::Var(x) => TermGa::Var(x.clone()),
        ValueCps::Lam(x, p) => TermGa::Lam(x.clone(), Box::new(cps_inverse(p)?)),
    })
}

/// `P+`
pub fn cps_inverse(p: &TermCps) -> Result<TermGa> {
    cps_inverse_command(&p.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cps::{call, clam, cvar, klam, kret, step_cps, CpsMode};
    use crate::lambda_c::{app, lam, let_in, var};
    use crate::vfs::{bind, cutc, garg, vret, vvar};

    fn ves(t: TermC) -> TermVes {
        TermVes::new(t).unwrap()
    }

    #[test]
    fn ves_b_v_example() {
        let t = ves(let_in("y", lam("x", var("x")), let_in("z", app(var("y"), var("v")), var("z"))));
        let VesContractum::Ves(r) = step_ves(&t, Rule::BV, &Path::root()).unwrap() else { panic!() };
        assert!(r.as_c().alpha_eq(&let_in("x", var("v"), let_in("z", var("x"), var("z")))));
    }

    #[test]
    fn ves_let_v_leaves_grammar() {
        let t = ves(let_in("y", var("v"), var("y")));
        assert_eq!(step_ves(&t, Rule::LetV, &Path::root()).unwrap(), VesContractum::Ves(ves(var("v"))));
        let t = ves(let_in("y", var("v"), let_in("z", app(var("y"), var("w")), var("z"))));
        let r = step_ves(&t, Rule::LetV, &Path::root()).unwrap();
        assert_eq!(r, VesContractum::OutsideVes(let_in("z", app(var("v"), var("w")), var("z"))));
        assert!(Ves.redexes(&t).iter().all(|(r, _)| *r != Rule::LetV));
    }

    #[test]
    fn ves_compose_clauses() {
        let p = ves(var("p"));
        let y = Name::parse("y");
        assert_eq!(ves_let_compose(&y, &ves(var("v")), &p).into_c(), let_in("y", var("v"), var("p")));
        let c = let_in("x", app(var("z"), var("w")), var("x"));
        let r = ves_let_compose_ctx(&Name::parse("z"), &y, &c, &p).unwrap();
        assert!(r.alpha_eq(&let_in("x", app(var("z"), var("w")), let_in("y", var("x"), var("p")))));
        let bad = ves(var("z"));
        assert!(matches!(ves_let_compose_ctx(&Name::parse("z"), &y, &c, &bad), Err(Error::FreshnessViolation(_))));
    }

    #[test]
    fn ces_examples() {
        let t = TermCes::new(let_in("y", app(lam("x", var("x")), var("v")), var("y"))).unwrap();
        assert_eq!(step_ces(&t, &Path::root()).unwrap().into_c(), var("v"));
        let body = lam("x", let_in("z", app(var("x"), var("w")), var("z")));
        let t = TermCes::new(let_in("y", app(body, var("v")), app_free("p", "y"))).unwrap();
        let r = step_ces(&t, &Path::root()).unwrap();
        let want = let_in("z", app(var("v"), var("w")), let_in("q", app(var("p"), var("z")), var("q")));
        assert!(r.as_c().alpha_eq(&want));
    }

    fn app_free(f: &str, y: &str) -> TermC {
        let_in("q", app(var(f), var(y)), var("q"))
    }

    #[test]
    fn pi_conversions() {
        let m = gapp(gapp(gvar("m1"), gvar("m2"), "y", gvar("m3")), gvar("n"), "x", gvar("p"));
        let r = contract_ga(&m, Rule::Pi1).unwrap();
        assert!(r.alpha_eq(&gapp(gvar("m1"), gvar("m2"), "y", gapp(gvar("m3"), gvar("n"), "x", gvar("p")))));
        let m = gapp(gvar("v"), gapp(gvar("n1"), gvar("n2"), "y", gvar("n3")), "x", gvar("p"));
        let r = contract_ga(&m, Rule::Pi2).unwrap();
        assert!(r.alpha_eq(&gapp(gvar("n1"), gvar("n2"), "y", gapp(gvar("v"), gvar("n3"), "x", gvar("p")))));
        let c = gapp(gvar("v"), gvar("w"), "x", gvar("x"));
        assert_eq!(pi_normalize_ga(&c, 10).unwrap(), c);
        let deep = gapp(gapp(gvar("a"), gvar("b"), "y", gvar("y")), gapp(gvar("c"), gvar("d"), "z", gvar("z")), "x", gvar("x"));
        assert!(is_cnf(&pi_normalize_ga(&deep, 100).unwrap()));
    }

    #[test]
    fn left_substitution_and_beta() {
        let x = Name::parse("x");
        let p = gapp(gvar("x"), gvar("u"), "z", gvar("z"));
        assert_eq!(left_subst(&gvar("w"), &x, &p), gapp(gvar("w"), gvar("u"), "z", gvar("z")));
        let n = gapp(gvar("v"), gvar("w"), "y", gvar("y"));
        assert!(left_subst(&n, &x, &p).alpha_eq(&gapp(gvar("v"), gvar("w"), "y", gapp(gvar("y"), gvar("u"), "z", gvar("z")))));
        let t = gapp(glam("y", gvar("y")), gvar("w"), "x", p.clone());
        assert_eq!(step_cnf(&t, &Path::root()).unwrap(), gapp(gvar("w"), gvar("u"), "z", gvar("z")));
    }

    #[test]
    fn psi_theta_round_trip() {
        let t = ves(let_in("y", lam("x", var("x")), let_in("z", app(var("y"), var("v")), var("z"))));
        let p = psi(&t);
        assert!(p.alpha_eq(&cutc(crate::vfs::vlam("x", vret(vvar("x"))), garg(vvar("v"), "z", vret(vvar("z"))))));
        assert!(theta(&p).alpha_eq(&t));
        let u = cutc(vvar("v"), bind("y", vret(vvar("y"))));
        assert!(psi(&theta(&u)).alpha_eq(&u));
    }

    #[test]
    fn upsilon_phi_round_trip() {
        let t = TermCes::new(let_in("x", app(var("v"), var("w")), var("x"))).unwrap();
        assert_eq!(upsilon(&t), gapp(gvar("v"), gvar("w"), "x", gvar("x")));
        assert_eq!(phi(&upsilon(&t)).unwrap(), t);
        assert!(phi(&gapp(gapp(gvar("a"), gvar("b"), "y", gvar("y")), gvar("c"), "x", gvar("x"))).is_err());
    }

    #[test]
    fn cnf_and_small_cps() {
        let t = gapp(glam("y", gvar("y")), gvar("w"), "x", gapp(gvar("x"), gvar("u"), "z", gvar("z")));
        let n = cnf_negative_command(&t);
        assert_eq!(n, call(clam("y", kret(cvar("y"))), cvar("w"), klam("x", call(cvar("x"), cvar("u"), klam("z", kret(cvar("z")))))));
        assert_eq!(cps_inverse_command(&n).unwrap(), t);
        let r1 = step_cps(&n, Rule::BetaV, &Path::root(), CpsMode::Small).unwrap();
        let r2 = cnf_negative_command(&step_cnf(&t, &Path::root()).unwrap());
        assert!(r1.alpha_eq(&r2));
        assert_eq!(cnf_negative_command(&gvar("v")), kret(cvar("v")));
    }

    #[test]
    fn ga_typing() {
        let a = SimpleType::atom("a");
        let g = TypingContext::new().with(Name::parse("f"), SimpleType::arrow(a.clone(), a.clone())).with(Name::parse("v"), a.clone());
        let t = gapp(gvar("f"), gvar("v"), "x", gvar("x"));
        assert_eq!(typecheck_ga(&g, &t).unwrap(), a);
    }
}
