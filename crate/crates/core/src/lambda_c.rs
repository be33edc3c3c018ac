//! The computational lambda-calculus, its kernel (ANF), administrative
//! normalization, and the context presentation of the kernel.

use std::fmt;

use crate::error::{Error, Result};
use crate::name::{fresh_like, fresh_name, Name, NameSet};
use crate::rewrite::{
    normalize, sort_redexes, Calculus, Path, Rule, Scope, Syntax, System, Trace, Tree,
};
use crate::types::{check_against, synthesize, synthesize_or, SimpleType, Ty, TypingContext, Unifier};

pub const DEFAULT_FUEL: usize = 10_000;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermC {
    Var(Name),
    Lam(Name, Box<TermC>),
    App(Box<TermC>, Box<TermC>),
    Let(Name, Box<TermC>, Box<TermC>),
}

pub fn var(x: &str) -> TermC {
    TermC::Var(Name::parse(x))
}

pub fn lam(x: &str, body: TermC) -> TermC {
    TermC::Lam(Name::parse(x), Box::new(body))
}

pub fn app(f: TermC, a: TermC) -> TermC {
    TermC::App(Box::new(f), Box::new(a))
}

pub fn let_in(x: &str, bound: TermC, body: TermC) -> TermC {
    TermC::Let(Name::parse(x), Box::new(bound), Box::new(body))
}

impl TermC {
    pub fn is_value(&self) -> bool {
        matches!(self, TermC::Var(_) | TermC::Lam(..))
    }

    pub fn free_vars(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.fv_into(&mut Vec::new(), &mut acc);
        acc
    }

    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            TermC::Var(x) => {
                if !bound.contains(x) {
                    acc.insert(x.clone());
                }
            }
            TermC::Lam(x, m) => {
                bound.push(x.clone());
                m.fv_into(bound, acc);
                bound.pop();
            }
            TermC::App(m, n) => {
                m.fv_into(bound, acc);
                n.fv_into(bound, acc);
            }
            TermC::Let(x, m, n) => {
                m.fv_into(bound, acc);
                bound.push(x.clone());
                n.fv_into(bound, acc);
                bound.pop();
            }
        }
    }

    pub fn occurs_free(&self, x: &Name) -> bool {
        self.free_vars().contains(x)
    }

    /// Every name occurring in the term, bound or free.
    pub fn names(&self, acc: &mut NameSet) {
        match self {
            TermC::Var(x) => {
                acc.insert(x.clone());
            }
            TermC::Lam(x, m) => {
                acc.insert(x.clone());
                m.names(acc);
            }
            TermC::App(m, n) => {
                m.names(acc);
                n.names(acc);
            }
            TermC::Let(x, m, n) => {
                acc.insert(x.clone());
                m.names(acc);
                n.names(acc);
            }
        }
    }

    pub fn all_names(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.names(&mut acc);
        acc
    }

    /// Capture-avoiding `[v/x]self`.
    pub fn subst(&self, x: &Name, v: &TermC) -> TermC {
        let fv = v.free_vars();
        self.subst_with(x, v, &fv)
    }

    fn subst_with(&self, x: &Name, v: &TermC, fv: &NameSet) -> TermC {
        match self {
            TermC::Var(y) => {
                if y == x {
                    v.clone()
                } else {
                    self.clone()
                }
            }
            TermC::Lam(y, m) => {
                let (y, m) = under_binder(y, m, x, v, fv);
                TermC::Lam(y, Box::new(m))
            }
            TermC::App(m, n) => TermC::App(Box::new(m.subst_with(x, v, fv)), Box::new(n.subst_with(x, v, fv))),
            TermC::Let(y, m, n) => {
                let m = m.subst_with(x, v, fv);
                let (y, n) = under_binder(y, n, x, v, fv);
                TermC::Let(y, Box::new(m), Box::new(n))
            }
        }
    }

    /// Renames free `from` to `to`, assuming `to` does not occur in `self`.
    pub fn rename(&self, from: &Name, to: &Name) -> TermC {
        self.subst_with(from, &TermC::Var(to.clone()), &NameSet::from([to.clone()]))
    }

    pub fn children(&self) -> Vec<&TermC> {
        match self {
            TermC::Var(_) => vec![],
            TermC::Lam(_, m) => vec![m],
            TermC::App(m, n) | TermC::Let(_, m, n) => vec![m, n],
        }
    }

    pub fn at(&self, path: &Path) -> Option<&TermC> {
        let mut cur = self;
        for &i in &path.0 {
            cur = *cur.children().get(i)?;
        }
        Some(cur)
    }

    /// Rebuilds the term with the subterm at `path` replaced by `f(subterm)`.
    pub fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermC) -> Result<TermC>) -> Result<TermC> {
        let Some((&i, rest)) = path.split_first() else { return f(self) };
        let bad = || Error::Malformed(format!("path index {i} out of range"));
        Ok(match (self, i) {
            (TermC::Lam(x, m), 0) => TermC::Lam(x.clone(), Box::new(m.map_at(rest, f)?)),
            (TermC::App(m, n), 0) => TermC::App(Box::new(m.map_at(rest, f)?), n.clone()),
            (TermC::App(m, n), 1) => TermC::App(m.clone(), Box::new(n.map_at(rest, f)?)),
            (TermC::Let(x, m, n), 0) => TermC::Let(x.clone(), Box::new(m.map_at(rest, f)?), n.clone()),
            (TermC::Let(x, m, n), 1) => TermC::Let(x.clone(), m.clone(), Box::new(n.map_at(rest, f)?)),
            _ => return Err(bad()),
        })
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            TermC::Var(x) => sc.var(x),
            TermC::Lam(x, m) => Tree::node("lam", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
            TermC::App(m, n) => Tree::node("app", 0, vec![m.tree_in(sc), n.tree_in(sc)]),
            TermC::Let(x, m, n) => {
                let tm = m.tree_in(sc);
                Tree::node("let", 1, vec![tm, sc.under(x, |sc| n.tree_in(sc))])
            }
        }
    }
}

/// Shared binder handling for substitution: returns the possibly renamed binder and body.
fn under_binder(y: &Name, body: &TermC, x: &Name, v: &TermC, fv: &NameSet) -> (Name, TermC) {
    if y == x {
        return (y.clone(), body.clone());
    }
    if !body.occurs_free(x) {
        return (y.clone(), body.clone());
    }
    if fv.contains(y) {
        let mut avoid = body.all_names();
        avoid.extend(fv.iter().cloned());
        avoid.insert(x.clone());
        let y2 = fresh_like(y, &avoid);
        let body2 = body.rename(y, &y2);
        (y2.clone(), body2.subst_with(x, v, fv))
    } else {
        (y.clone(), body.subst_with(x, v, fv))
    }
}

/// Renames binder `x` of a body that is about to move under scope of `clash`.
pub fn avoid_binder(x: &Name, body: &TermC, clash: &NameSet) -> (Name, TermC) {
    if !clash.contains(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = body.all_names();
    avoid.extend(clash.iter().cloned());
    let x2 = fresh_like(x, &avoid);
    (x2.clone(), body.rename(x, &x2))
}

impl Syntax for TermC {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl fmt::Display for TermC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_c(self, f, 0)
    }
}

/// `ctx`: 0 anywhere, 1 function position, 2 argument position.
fn fmt_c(t: &TermC, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
    match t {
        TermC::Var(x) => write!(f, "{x}"),
        TermC::Lam(x, m) => {
            if ctx > 0 {
                write!(f, "(")?;
            }
            write!(f, "\\{x}. ")?;
            fmt_c(m, f, 0)?;
            if ctx > 0 {
                write!(f, ")")?;
            }
            Ok(())
        }
        TermC::Let(x, m, n) => {
            if ctx > 0 {
                write!(f, "(")?;
            }
            write!(f, "let {x} = ")?;
            fmt_c(m, f, 0)?;
            write!(f, " in ")?;
            fmt_c(n, f, 0)?;
            if ctx > 0 {
                write!(f, ")")?;
            }
            Ok(())
        }
        TermC::App(m, n) => {
            if ctx == 2 {
                write!(f, "(")?;
            }
            fmt_c(m, f, 1)?;
            write!(f, " ")?;
            fmt_c(n, f, 2)?;
            if ctx == 2 {
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Reduction in the full calculus

fn fresh_for(stem: &str, ts: &[&TermC]) -> Name {
    let mut avoid = NameSet::new();
    for t in ts {
        t.names(&mut avoid);
    }
    fresh_name(stem, &avoid)
}

/// Contracts a redex of the full calculus at the root of `t`.
pub fn contract_c(t: &TermC, rule: Rule) -> Option<TermC> {
    use TermC::*;
    match (rule, t) {
        (Rule::B, App(m, n)) => match &**m {
            Lam(x, body) => Some(Let(x.clone(), n.clone(), body.clone())),
            _ => None,
        },
        (Rule::LetV, Let(x, v, m)) if v.is_value() => Some(m.subst(x, v)),
        (Rule::EtaLet, Let(x, m, body)) if **body == Var(x.clone()) => Some((**m).clone()),
        (Rule::Assoc, Let(y, inner, p)) => match &**inner {
            Let(x, m, n) => {
                let mut clash = p.free_vars();
                clash.remove(y);
                let (x2, n2) = avoid_binder(x, n, &clash);
                Some(Let(x2, m.clone(), Box::new(Let(y.clone(), Box::new(n2), p.clone()))))
            }
            _ => None,
        },
        (Rule::Let1, App(m, n)) if !m.is_value() => {
            let x = fresh_for("x", &[m, n]);
            Some(Let(x.clone(), m.clone(), Box::new(App(Box::new(Var(x)), n.clone()))))
        }
        (Rule::Let2, App(v, n)) if v.is_value() && !n.is_value() => {
            let x = fresh_for("x", &[v, n]);
            Some(Let(x.clone(), n.clone(), Box::new(App(v.clone(), Box::new(Var(x))))))
        }
        _ => None,
    }
}

fn collect_paths(t: &TermC, path: &mut Vec<usize>, out: &mut Vec<(Path, TermC)>) {
    out.push((Path(path.clone()), t.clone()));
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        collect_paths(c, path, out);
        path.pop();
    }
}

/// The full calculus, optionally restricted to a subset of its rules.
#[derive(Clone, Debug)]
pub struct LambdaC {
    pub rules: Vec<Rule>,
}

impl LambdaC {
    pub const ALL_RULES: [Rule; 6] = [Rule::B, Rule::LetV, Rule::EtaLet, Rule::Assoc, Rule::Let1, Rule::Let2];
    pub const ADMIN_RULES: [Rule; 3] = [Rule::Assoc, Rule::Let1, Rule::Let2];

    pub fn full() -> LambdaC {
        LambdaC { rules: LambdaC::ALL_RULES.to_vec() }
    }

    pub fn admin() -> LambdaC {
        LambdaC { rules: LambdaC::ADMIN_RULES.to_vec() }
    }

    pub fn with_rules(rules: &[Rule]) -> Result<LambdaC> {
        for r in rules {
            if !LambdaC::ALL_RULES.contains(r) {
                return Err(Error::RuleDisabled(r.to_string()));
            }
        }
        Ok(LambdaC { rules: rules.to_vec() })
    }
}

impl System for LambdaC {
    type T = TermC;

    fn calculus(&self) -> Calculus {
        Calculus::LambdaC
    }

    fn rules(&self) -> Vec<Rule> {
        self.rules.clone()
    }

    fn redexes(&self, t: &TermC) -> Vec<(Rule, Path)> {
        let mut nodes = Vec::new();
        collect_paths(t, &mut Vec::new(), &mut nodes);
        let mut found = Vec::new();
        for (p, s) in nodes {
            for &r in &self.rules {
                if contract_c(&s, r).is_some() {
                    found.push((r, p.clone()));
                }
            }
        }
        sort_redexes(&self.rules, found)
    }

    fn step(&self, t: &TermC, rule: Rule, path: &Path) -> Result<TermC> {
        if !self.rules.contains(&rule) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        step_c(t, rule, path)
    }
}

pub fn step_c(t: &TermC, rule: Rule, path: &Path) -> Result<TermC> {
    let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
    if !LambdaC::ALL_RULES.contains(&rule) {
        return Err(Error::RuleDisabled(rule.to_string()));
    }
    t.map_at(&path.0, &mut |s| contract_c(s, rule).ok_or_else(no)).map_err(|e| match e {
        Error::Malformed(_) => no(),
        e => e,
    })
}

/// Normal form under assoc, let_1 and let_2, with its trace.
pub fn admin_normalize(t: &TermC) -> Result<Trace<TermC>> {
    admin_normalize_fuel(t, DEFAULT_FUEL)
}

pub fn admin_normalize_fuel(t: &TermC, fuel: usize) -> Result<Trace<TermC>> {
    normalize(&LambdaC::admin(), t, None, fuel)
}

// ---------------------------------------------------------------------------
// The kernel

pub fn is_anf(t: &TermC) -> bool {
    use TermC::*;
    fn val(t: &TermC) -> bool {
        match t {
            Var(_) => true,
            Lam(_, m) => is_anf(m),
            _ => false,
        }
    }
    match t {
        Var(_) | Lam(..) => val(t),
        App(v, w) => val(v) && val(w),
        Let(_, b, m) => {
            let bound_ok = match &**b {
                App(v, w) => val(v) && val(w),
                other => val(other),
            };
            bound_ok && is_anf(m)
        }
    }
}

/// The derived general let of the kernel.
pub fn let_compose(y: &Name, m: &TermC, p: &TermC) -> TermC {
    match m {
        TermC::Let(x, b, m2) => {
            let mut clash = p.free_vars();
            clash.remove(y);
            let (x2, m2) = avoid_binder(x, m2, &clash);
            TermC::Let(x2, b.clone(), Box::new(let_compose(y, &m2, p)))
        }
        _ => TermC::Let(y.clone(), Box::new(m.clone()), Box::new(p.clone())),
    }
}

/// Kernel contexts with exactly one hole.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ContextK {
    Hole,
    LetHole(Name, TermC),
}

impl ContextK {
    pub fn free_vars(&self) -> NameSet {
        match self {
            ContextK::Hole => NameSet::new(),
            ContextK::LetHole(x, p) => {
                let mut s = p.free_vars();
                s.remove(x);
                s
            }
        }
    }
}

impl fmt::Display for ContextK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextK::Hole => write!(f, "[]"),
            ContextK::LetHole(x, p) => write!(f, "let {x} = [] in {p}"),
        }
    }
}

pub fn fill_context(k: &ContextK, t: &TermC) -> TermC {
    match k {
        ContextK::Hole => t.clone(),
        ContextK::LetHole(x, p) => TermC::Let(x.clone(), Box::new(t.clone()), Box::new(p.clone())),
    }
}

/// `(M : K)` by recursion on `M`.
pub fn colon_k(m: &TermC, k: &ContextK) -> TermC {
    match m {
        TermC::Let(x, b, m2) => {
            let (x2, m2) = avoid_binder(x, m2, &k.free_vars());
            TermC::Let(x2, b.clone(), Box::new(colon_k(&m2, k)))
        }
        _ => fill_context(k, m),
    }
}

fn contract_anf(t: &TermC, rule: Rule, in_let_bound: bool) -> Option<TermC> {
    use TermC::*;
    match (rule, t) {
        (Rule::BV, Let(y, b, p)) => match &**b {
            App(f, v) if v.is_value() => match &**f {
                Lam(x, m) => {
                    let mut clash = p.free_vars();
                    clash.remove(y);
                    let (x2, m2) = avoid_binder(x, m, &clash);
                    Some(Let(x2, v.clone(), Box::new(let_compose(y, &m2, p))))
                }
                _ => None,
            },
            _ => None,
        },
        (Rule::BVPrime, App(f, v)) if !in_let_bound && v.is_value() => match &**f {
            Lam(x, m) => Some(Let(x.clone(), v.clone(), m.clone())),
            _ => None,
        },
        (Rule::LetV, Let(x, v, m)) if v.is_value() => Some(m.subst(x, v)),
        (Rule::EtaLet, Let(x, b, body)) if matches!(**b, App(..)) && **body == Var(x.clone()) => {
            Some((**b).clone())
        }
        _ => None,
    }
}

fn anf_nodes(t: &TermC, path: &mut Vec<usize>, in_bound: bool, out: &mut Vec<(Path, TermC, bool)>) {
    out.push((Path(path.clone()), t.clone(), in_bound));
    let let_bound = matches!(t, TermC::Let(..));
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        anf_nodes(c, path, let_bound && i == 0, out);
        path.pop();
    }
}

/// The kernel with rules B_v, B_v', let_v, eta_let.
#[derive(Clone, Debug)]
pub struct Anf {
    pub rules: Vec<Rule>,
}

impl Anf {
    pub const ALL_RULES: [Rule; 4] = [Rule::BV, Rule::BVPrime, Rule::LetV, Rule::EtaLet];

    pub fn full() -> Anf {
        Anf { rules: Anf::ALL_RULES.to_vec() }
    }
}

impl System for Anf {
    type T = TermC;

    fn calculus(&self) -> Calculus {
        Calculus::Anf
    }

    fn rules(&self) -> Vec<Rule> {
        self.rules.clone()
    }

    fn redexes(&self, t: &TermC) -> Vec<(Rule, Path)> {
        let mut nodes = Vec::new();
        anf_nodes(t, &mut Vec::new(), false, &mut nodes);
        let mut found = Vec::new();
        for (p, s, b) in nodes {
            for &r in &self.rules {
                if contract_anf(&s, r, b).is_some() {
                    found.push((r, p.clone()));
                }
            }
        }
        sort_redexes(&self.rules, found)
    }

    fn step(&self, t: &TermC, rule: Rule, path: &Path) -> Result<TermC> {
        if !self.rules.contains(&rule) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        step_anf(t, rule, path)
    }
}

/// One kernel step. Applications bound by a let are not redex positions.
pub fn step_anf(t: &TermC, rule: Rule, path: &Path) -> Result<TermC> {
    let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
    if !Anf::ALL_RULES.contains(&rule) {
        return Err(Error::RuleDisabled(rule.to_string()));
    }
    let in_bound = match path.0.split_last() {
        Some((&0, parent)) => matches!(t.at(&Path(parent.to_vec())), Some(TermC::Let(..))),
        _ => false,
    };
    t.map_at(&path.0, &mut |s| contract_anf(s, rule, in_bound).ok_or_else(no)).map_err(|e| match e {
        Error::Malformed(_) => no(),
        e => e,
    })
}

// ---------------------------------------------------------------------------
// Typing

pub fn infer_c(u: &mut Unifier, t: &TermC) -> Result<Ty> {
    match t {
        TermC::Var(x) => u.lookup(x),
        TermC::Lam(x, m) => {
            let a = u.meta();
            u.bind(x, a.clone());
            let b = infer_c(u, m);
            u.unbind();
            Ok(Ty::arrow(a, b?))
        }
        TermC::App(m, n) => {
            let tm = infer_c(u, m)?;
            let tn = infer_c(u, n)?;
            let r = u.meta();
            u.unify(&tm, &Ty::arrow(tn, r.clone()))?;
            Ok(r)
        }
        TermC::Let(x, m, n) => {
            let tm = infer_c(u, m)?;
            u.bind(x, tm);
            let r = infer_c(u, n);
            u.unbind();
            r
        }
    }
}

/// Synthesizes the type of `t`; fails when the type is not determined.
pub fn typecheck_c(ctx: &TypingContext, t: &TermC) -> Result<SimpleType> {
    synthesize(ctx, t, |u| infer_c(u, t))
}

/// An instance of the principal type, with undetermined parts set to `fill`.
pub fn instantiate_c(ctx: &TypingContext, t: &TermC, fill: &SimpleType) -> Result<SimpleType> {
    synthesize_or(ctx, fill, |u| infer_c(u, t))
}

pub fn check_c(ctx: &TypingContext, t: &TermC, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_c(u, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::brute_force_normal_forms;

    fn x() -> TermC {
        var("x")
    }

    #[test]
    fn b_rule() {
        let t = app(lam("x", x()), app(var("y"), var("z")));
        let r = step_c(&t, Rule::B, &Path::root()).unwrap();
        assert!(r.alpha_eq(&let_in("x", app(var("y"), var("z")), x())));
    }

    #[test]
    fn let_v_substitutes() {
        let t = let_in("x", var("y"), x());
        assert_eq!(step_c(&t, Rule::LetV, &Path::root()).unwrap(), var("y"));
    }

    #[test]
    fn let_1_proviso() {
        let t = app(app(var("y"), var("z")), var("w"));
        let r = step_c(&t, Rule::Let1, &Path::root()).unwrap();
        assert!(r.alpha_eq(&let_in("x", app(var("y"), var("z")), app(x(), var("w")))));
        assert!(step_c(&app(var("y"), var("z")), Rule::Let1, &Path::root()).is_err());
    }

    #[test]
    fn admin_normal_form_is_unique() {
        let t = app(app(var("y"), var("z")), var("w"));
        let tr = admin_normalize(&t).unwrap();
        tr.replay(&LambdaC::admin()).unwrap();
        let nfs = brute_force_normal_forms(&LambdaC::admin(), &t, None, 10_000).unwrap();
        assert_eq!(nfs.len(), 1);
        assert!(nfs[0].alpha_eq(tr.last()));
        assert!(tr.last().alpha_eq(&let_in("x", app(var("y"), var("z")), app(x(), var("w")))));
    }

    #[test]
    fn assoc_renames_on_clash() {
        // let y = (let x = a in b) in x  -- inner x must not capture the outer free x
        let t = let_in("y", let_in("x", var("a"), var("b")), x());
        let r = step_c(&t, Rule::Assoc, &Path::root()).unwrap();
        assert!(r.free_vars().contains(&Name::new("x")));
    }

    #[test]
    fn assoc_example() {
        let t = let_in("y", let_in("x", var("v"), var("w")), var("p"));
        let r = step_c(&t, Rule::Assoc, &Path::root()).unwrap();
        assert!(r.alpha_eq(&let_in("x", var("v"), let_in("y", var("w"), var("p")))));
    }

    #[test]
    fn kernel_b_v() {
        let t = let_in("y", app(lam("x", x()), var("v")), var("y"));
        let r = step_anf(&t, Rule::BV, &Path::root()).unwrap();
        assert!(r.alpha_eq(&let_in("x", var("v"), let_in("y", x(), var("y")))));
        // the bound application is not a redex position for B_v'
        assert!(step_anf(&t, Rule::BVPrime, &Path(vec![0])).is_err());
    }

    #[test]
    fn kernel_b_v_prime_and_eta() {
        let t = app(lam("x", x()), var("v"));
        assert!(step_anf(&t, Rule::BVPrime, &Path::root()).unwrap().alpha_eq(&let_in("x", var("v"), x())));
        let e = let_in("x", app(var("v"), var("w")), x());
        assert_eq!(step_anf(&e, Rule::EtaLet, &Path::root()).unwrap(), app(var("v"), var("w")));
    }

    #[test]
    fn let_compose_clauses() {
        let y = Name::new("y");
        let p = var("p");
        assert_eq!(let_compose(&y, &var("v"), &p), let_in("y", var("v"), p.clone()));
        let m = let_in("x", var("v"), var("m"));
        assert!(let_compose(&y, &m, &p).alpha_eq(&let_in("x", var("v"), let_in("y", var("m"), p.clone()))));
    }

    #[test]
    fn colon_clauses() {
        let k = ContextK::LetHole(Name::new("x"), var("p"));
        let vw = app(var("v"), var("w"));
        assert_eq!(colon_k(&vw, &k), let_in("x", vw.clone(), var("p")));
        assert_eq!(colon_k(&var("v"), &ContextK::Hole), var("v"));
        let m = let_in("x", var("v"), vw.clone());
        assert!(colon_k(&m, &k).alpha_eq(&let_in("z", var("v"), let_in("x", vw, var("p")))));
    }

    #[test]
    fn anf_recognizer() {
        assert!(is_anf(&let_in("x", app(var("v"), var("w")), x())));
        assert!(!is_anf(&app(app(var("y"), var("z")), var("w"))));
        assert!(!is_anf(&let_in("x", let_in("y", var("a"), var("b")), x())));
    }

    #[test]
    fn typing_examples() {
        let g = TypingContext::new().with(Name::new("y"), SimpleType::atom("a"));
        assert_eq!(typecheck_c(&g, &let_in("x", var("y"), x())).unwrap(), SimpleType::atom("a"));
        assert!(matches!(typecheck_c(&g, &app(var("y"), var("y"))), Err(Error::TypeMismatch { .. })));
        let id = lam("x", x());
        assert!(typecheck_c(&TypingContext::new(), &id).is_err());
        let a = SimpleType::atom("a");
        check_c(&TypingContext::new(), &id, &SimpleType::arrow(a.clone(), a)).unwrap();
    }

    #[test]
    fn omega_exhausts_fuel() {
        let d = lam("x", app(x(), x()));
        let t = app(d.clone(), d);
        let r = normalize(&LambdaC::with_rules(&[Rule::B, Rule::LetV]).unwrap(), &t, None, 10);
        assert!(matches!(r, Err(Error::FuelExhausted { .. })));
    }

    #[test]
    fn full_calculus_example() {
        let t = app(lam("x", x()), app(lam("y", var("y")), var("z")));
        let nfs = brute_force_normal_forms(&LambdaC::full(), &t, None, 10_000).unwrap();
        assert_eq!(nfs.len(), 1);
        assert_eq!(nfs[0], var("z"));
    }
}
