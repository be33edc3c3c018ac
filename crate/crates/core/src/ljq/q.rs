//! The simplified sequent calculus with one cut, and its kernel of left normal forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::name::{fresh_like, Name, NameSet};
use crate::rewrite::{sort_redexes, Calculus, Path, Rule, Scope, Syntax, System, Tree};
use crate::types::{check_against, synthesize, SimpleType, Ty, TypingContext, Unifier};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ValueQ {
    Var(Name),
    Lam(Name, Box<TermQ>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermQ {
    Ret(ValueQ),
    /// `x(V, y. N)`
    LIntro(Name, ValueQ, Name, Box<TermQ>),
    Cut(Box<TermQ>, Name, Box<TermQ>),
}

pub fn qvar(x: &str) -> ValueQ {
    ValueQ::Var(Name::parse(x))
}

pub fn qlam(x: &str, m: TermQ) -> ValueQ {
    ValueQ::Lam(Name::parse(x), Box::new(m))
}

pub fn ret(v: ValueQ) -> TermQ {
    TermQ::Ret(v)
}

pub fn li(x: &str, v: ValueQ, y: &str, n: TermQ) -> TermQ {
    TermQ::LIntro(Name::parse(x), v, Name::parse(y), Box::new(n))
}

pub fn cut(m: TermQ, x: &str, n: TermQ) -> TermQ {
    TermQ::Cut(Box::new(m), Name::parse(x), Box::new(n))
}

pub fn cutv(v: ValueQ, x: &str, n: TermQ) -> TermQ {
    cut(ret(v), x, n)
}

impl ValueQ {
    pub fn is_lam(&self) -> bool {
        matches!(self, ValueQ::Lam(..))
    }

    pub fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            ValueQ::Var(x) => {
                if !bound.contains(x) {
                    acc.insert(x.clone());
                }
            }
            ValueQ::Lam(x, m) => {
                bound.push(x.clone());
                m.fv_into(bound, acc);
                bound.pop();
            }
        }
    }

    pub fn free_vars(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.fv_into(&mut Vec::new(), &mut acc);
        acc
    }

    pub fn names(&self, acc: &mut NameSet) {
        match self {
            ValueQ::Var(x) => {
                acc.insert(x.clone());
            }
            ValueQ::Lam(x, m) => {
                acc.insert(x.clone());
                m.names(acc);
            }
        }
    }

    /// Value substitution `[v/y]self`.
    pub fn subst(&self, y: &Name, v: &ValueQ) -> ValueQ {
        let fv = v.free_vars();
        self.subst_with(y, v, &fv)
    }

    fn subst_with(&self, y: &Name, v: &ValueQ, fv: &NameSet) -> ValueQ {
        match self {
            ValueQ::Var(x) => {
                if x == y {
                    v.clone()
                } else {
                    self.clone()
                }
            }
            ValueQ::Lam(x, m) => {
                let (x, m) = binder_subst(x, m, y, v, fv);
                ValueQ::Lam(x, Box::new(m))
            }
        }
    }

    pub fn rename(&self, from: &Name, to: &Name) -> ValueQ {
        self.subst(from, &ValueQ::Var(to.clone()))
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            ValueQ::Var(x) => sc.var(x),
            ValueQ::Lam(x, m) => Tree::node("lam", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
        }
    }
}

impl TermQ {
    pub fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            TermQ::Ret(v) => v.fv_into(bound, acc),
            TermQ::LIntro(h, v, y, n) => {
                if !bound.contains(h) {
                    acc.insert(h.clone());
                }
                v.fv_into(bound, acc);
                bound.push(y.clone());
                n.fv_into(bound, acc);
                bound.pop();
            }
            TermQ::Cut(m, x, n) => {
                m.fv_into(bound, acc);
                bound.push(x.clone());
                n.fv_into(bound, acc);
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
            TermQ::Ret(v) => v.names(acc),
            TermQ::LIntro(h, v, y, n) => {
                acc.insert(h.clone());
                acc.insert(y.clone());
                v.names(acc);
                n.names(acc);
            }
            TermQ::Cut(m, x, n) => {
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

    /// Value substitution `[v/y]self`, with the critical clause for heads.
    pub fn subst(&self, y: &Name, v: &ValueQ) -> TermQ {
        let fv = v.free_vars();
        self.subst_with(y, v, &fv)
    }

    fn subst_with(&self, y: &Name, v: &ValueQ, fv: &NameSet) -> TermQ {
        match self {
            TermQ::Ret(w) => TermQ::Ret(w.subst_with(y, v, fv)),
            TermQ::LIntro(h, w, z, p) => {
                let w2 = w.subst_with(y, v, fv);
                let (z2, p2) = binder_subst(z, p, y, v, fv);
                if h != y {
                    return TermQ::LIntro(h.clone(), w2, z2, Box::new(p2));
                }
                match v {
                    ValueQ::Var(x) => TermQ::LIntro(x.clone(), w2, z2, Box::new(p2)),
                    ValueQ::Lam(..) => {
                        let mut avoid = fv.clone();
                        w2.names(&mut avoid);
                        p2.names(&mut avoid);
                        avoid.insert(z2.clone());
                        let y2 = if avoid.contains(y) { fresh_like(y, &avoid) } else { y.clone() };
                        TermQ::Cut(
                            Box::new(TermQ::Ret(v.clone())),
                            y2.clone(),
                            Box::new(TermQ::LIntro(y2, w2, z2, Box::new(p2))),
                        )
                    }
                }
            }
            TermQ::Cut(m, x, n) => {
                let m2 = m.subst_with(y, v, fv);
                let (x2, n2) = binder_subst(x, n, y, v, fv);
                TermQ::Cut(Box::new(m2), x2, Box::new(n2))
            }
        }
    }

    pub fn rename(&self, from: &Name, to: &Name) -> TermQ {
        self.subst(from, &ValueQ::Var(to.clone()))
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            TermQ::Ret(v) => Tree::node("ret", 0, vec![v.tree_in(sc)]),
            TermQ::LIntro(h, v, y, n) => {
                let label = format!("li {}", sc.label(h));
                let tv = v.tree_in(sc);
                let tn = sc.under(y, |sc| n.tree_in(sc));
                Tree::node(&label, 2, vec![tv, tn])
            }
            TermQ::Cut(m, x, n) => {
                let tm = m.tree_in(sc);
                Tree::node("cut", 1, vec![tm, sc.under(x, |sc| n.tree_in(sc))])
            }
        }
    }

    pub fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermQ) -> Result<TermQ>) -> Result<TermQ> {
        let Some((&i, rest)) = path.split_first() else { return f(self) };
        let bad = || Error::Malformed(format!("path index {i} out of range"));
        Ok(match (self, i) {
            (TermQ::Ret(v), 0) => TermQ::Ret(v.map_at(rest, f)?),
            (TermQ::LIntro(h, v, y, n), 0) => TermQ::LIntro(h.clone(), v.map_at(rest, f)?, y.clone(), n.clone()),
            (TermQ::LIntro(h, v, y, n), 1) => {
                TermQ::LIntro(h.clone(), v.clone(), y.clone(), Box::new(n.map_at(rest, f)?))
            }
            (TermQ::Cut(m, x, n), 0) => TermQ::Cut(Box::new(m.map_at(rest, f)?), x.clone(), n.clone()),
            (TermQ::Cut(m, x, n), 1) => TermQ::Cut(m.clone(), x.clone(), Box::new(n.map_at(rest, f)?)),
            _ => return Err(bad()),
        })
    }

    /// Every term-sort node with its path.
    pub fn term_nodes(&self, path: &mut Vec<usize>, out: &mut Vec<(Path, TermQ)>) {
        out.push((Path(path.clone()), self.clone()));
        match self {
            TermQ::Ret(v) => {
                path.push(0);
                v.term_nodes(path, out);
                path.pop();
            }
            TermQ::LIntro(_, v, _, n) => {
                path.push(0);
                v.term_nodes(path, out);
                path.pop();
                path.push(1);
                n.term_nodes(path, out);
                path.pop();
            }
            TermQ::Cut(m, _, n) => {
                path.push(0);
                m.term_nodes(path, out);
                path.pop();
                path.push(1);
                n.term_nodes(path, out);
                path.pop();
            }
        }
    }
}

impl ValueQ {
    fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermQ) -> Result<TermQ>) -> Result<ValueQ> {
        match (self, path.split_first()) {
            (ValueQ::Lam(x, m), Some((&0, rest))) => Ok(ValueQ::Lam(x.clone(), Box::new(m.map_at(rest, f)?))),
            _ => Err(Error::Malformed("path does not reach a term".into())),
        }
    }

    fn term_nodes(&self, path: &mut Vec<usize>, out: &mut Vec<(Path, TermQ)>) {
        if let ValueQ::Lam(_, m) = self {
            path.push(0);
            m.term_nodes(path, out);
            path.pop();
        }
    }
}

fn binder_subst(x: &Name, body: &TermQ, y: &Name, v: &ValueQ, fv: &NameSet) -> (Name, TermQ) {
    if x == y || !body.occurs_free(y) {
        return (x.clone(), body.clone());
    }
    if fv.contains(x) {
        let mut avoid = body.all_names();
        avoid.extend(fv.iter().cloned());
        avoid.insert(y.clone());
        let x2 = fresh_like(x, &avoid);
        let b2 = body.rename(x, &x2);
        (x2, b2.subst_with(y, v, fv))
    } else {
        (x.clone(), body.subst_with(y, v, fv))
    }
}

/// Renames binder `x` of `body` away from `clash`.
pub fn avoid_binder_q(x: &Name, body: &TermQ, clash: &NameSet) -> (Name, TermQ) {
    if !clash.contains(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = body.all_names();
    avoid.extend(clash.iter().cloned());
    let x2 = fresh_like(x, &avoid);
    (x2.clone(), body.rename(x, &x2))
}

fn fv_minus(t: &TermQ, x: &Name) -> NameSet {
    let mut s = t.free_vars();
    s.remove(x);
    s
}

impl Syntax for TermQ {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for ValueQ {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl fmt::Display for ValueQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueQ::Var(x) => write!(f, "{x}"),
            ValueQ::Lam(x, m) => write!(f, "\\{x}. {m}"),
        }
    }
}

/// Values in `^V`, which need parentheses around abstractions.
pub(crate) struct Atomic<'a, V>(pub &'a V);

impl fmt::Display for Atomic<'_, ValueQ> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ValueQ::Var(x) => write!(f, "{x}"),
            v => write!(f, "({v})"),
        }
    }
}

impl fmt::Display for TermQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermQ::Ret(v) => write!(f, "^{}", Atomic(v)),
            TermQ::LIntro(h, v, y, n) => write!(f, "{h}({v}, {y}. {n})"),
            TermQ::Cut(m, x, n) => match &**m {
                TermQ::Ret(v) => write!(f, "cut_v({v}, {x}. {n})"),
                _ => write!(f, "cut({m}, {x}. {n})"),
            },
        }
    }
}

// ---------------------------------------------------------------------------
// Rules

/// Root match of B_v including the freshness proviso.
fn b_v_matches(t: &TermQ) -> bool {
    match t {
        TermQ::Cut(m, y, n) => match (&**m, &**n) {
            (TermQ::Ret(ValueQ::Lam(..)), TermQ::LIntro(h, v, x, p)) => {
                h == y && !v.free_vars().contains(y) && (x == y || !p.occurs_free(y))
            }
            _ => false,
        },
        _ => false,
    }
}

pub fn contract_q(t: &TermQ, rule: Rule) -> Option<TermQ> {
    use TermQ::*;
    match (rule, t) {
        (Rule::BV, Cut(m, _, n)) if b_v_matches(t) => match (&**m, &**n) {
            (Ret(ValueQ::Lam(x, body)), LIntro(_, v, z, p)) => Some(Cut(
                Box::new(Cut(Box::new(Ret(v.clone())), x.clone(), body.clone())),
                z.clone(),
                p.clone(),
            )),
            _ => None,
        },
        (Rule::SigmaV, Cut(m, y, n)) if !b_v_matches(t) => match &**m {
            Ret(v) => Some(n.subst(y, v)),
            _ => None,
        },
        (Rule::EtaCut, Cut(m, x, n)) if **n == Ret(ValueQ::Var(x.clone())) => Some((**m).clone()),
        (Rule::Pi1, Cut(m, x, n)) => match &**m {
            LIntro(z, v, y, p) => {
                let (y2, p2) = avoid_binder_q(y, p, &fv_minus(n, x));
                Some(LIntro(z.clone(), v.clone(), y2, Box::new(Cut(Box::new(p2), x.clone(), n.clone()))))
            }
            _ => None,
        },
        (Rule::Pi2, Cut(m, x, n)) => match &**m {
            Cut(m1, y, p) => {
                let (y2, p2) = avoid_binder_q(y, p, &fv_minus(n, x));
                Some(Cut(m1.clone(), y2, Box::new(Cut(Box::new(p2), x.clone(), n.clone()))))
            }
            _ => None,
        },
        _ => None,
    }
}

fn redexes_with(t: &TermQ, rules: &[Rule], contract: fn(&TermQ, Rule) -> Option<TermQ>) -> Vec<(Rule, Path)> {
    let mut nodes = Vec::new();
    t.term_nodes(&mut Vec::new(), &mut nodes);
    let mut found = Vec::new();
    for (p, s) in nodes {
        for &r in rules {
            if contract(&s, r).is_some() {
                found.push((r, p.clone()));
            }
        }
    }
    sort_redexes(rules, found)
}

fn step_with(
    t: &TermQ,
    rule: Rule,
    path: &Path,
    contract: fn(&TermQ, Rule) -> Option<TermQ>,
) -> Result<TermQ> {
    let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
    t.map_at(&path.0, &mut |s| contract(s, rule).ok_or_else(no)).map_err(|e| match e {
        Error::Malformed(_) => no(),
        e => e,
    })
}

/// The simplified calculus, optionally restricted to some of its rules.
#[derive(Clone, Debug)]
pub struct Q {
    pub rules: Vec<Rule>,
}

impl Q {
    pub const ALL_RULES: [Rule; 5] = [Rule::BV, Rule::SigmaV, Rule::EtaCut, Rule::Pi1, Rule::Pi2];

    pub fn full() -> Q {
        Q { rules: Q::ALL_RULES.to_vec() }
    }

    pub fn pi() -> Q {
        Q { rules: vec![Rule::Pi1, Rule::Pi2] }
    }
}

impl System for Q {
    type T = TermQ;

    fn calculus(&self) -> Calculus {
        Calculus::Q
    }

    fn rules(&self) -> Vec<Rule> {
        self.rules.clone()
    }

    fn redexes(&self, t: &TermQ) -> Vec<(Rule, Path)> {
        redexes_with(t, &self.rules, contract_q)
    }

    fn step(&self, t: &TermQ, rule: Rule, path: &Path) -> Result<TermQ> {
        if !self.rules.contains(&rule) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        step_with(t, rule, path, contract_q)
    }
}

pub fn step_q(t: &TermQ, rule: Rule, path: &Path) -> Result<TermQ> {
    Q::full().step(t, rule, path)
}

// ---------------------------------------------------------------------------
// The kernel

pub fn is_lnf(t: &TermQ) -> bool {
    fn val(v: &ValueQ) -> bool {
        match v {
            ValueQ::Var(_) => true,
            ValueQ::Lam(_, m) => is_lnf(m),
        }
    }
    match t {
        TermQ::Ret(v) => val(v),
        TermQ::LIntro(_, v, _, n) => val(v) && is_lnf(n),
        TermQ::Cut(m, _, n) => match &**m {
            TermQ::Ret(v) => val(v) && is_lnf(n),
            _ => false,
        },
    }
}

/// Derived general cut of the kernel, by recursion on the left term.
pub fn cutvc(m: &TermQ, z: &Name, n: &TermQ) -> TermQ {
    match m {
        TermQ::Ret(_) => TermQ::Cut(Box::new(m.clone()), z.clone(), Box::new(n.clone())),
        TermQ::LIntro(x, v, y, m2) => {
            let (y2, m2) = avoid_binder_q(y, m2, &fv_minus(n, z));
            TermQ::LIntro(x.clone(), v.clone(), y2, Box::new(cutvc(&m2, z, n)))
        }
        TermQ::Cut(m1, y, m2) => {
            let (y2, m2) = avoid_binder_q(y, m2, &fv_minus(n, z));
            let rest = cutvc(&m2, z, n);
            match &**m1 {
                TermQ::Ret(_) => TermQ::Cut(m1.clone(), y2, Box::new(rest)),
                _ => cutvc(m1, &y2, &rest),
            }
        }
    }
}

pub fn contract_lnf(t: &TermQ, rule: Rule) -> Option<TermQ> {
    use TermQ::*;
    match (rule, t) {
        (Rule::BV, Cut(m, _, n)) if b_v_matches(t) => match (&**m, &**n) {
            (Ret(ValueQ::Lam(x, body)), LIntro(_, v, z, p)) => {
                let (x2, body2) = avoid_binder_q(x, body, &fv_minus(p, z));
                let inner = cutvc(&body2, z, p);
                Some(Cut(Box::new(Ret(v.clone())), x2, Box::new(inner)))
            }
            _ => None,
        },
        (Rule::SigmaV, _) => contract_q(t, Rule::SigmaV),
        _ => None,
    }
}

/// The kernel of left normal forms, with rules B_v and sigma_v.
#[derive(Clone, Debug)]
pub struct Lnf;

impl Lnf {
    pub const ALL_RULES: [Rule; 2] = [Rule::BV, Rule::SigmaV];
}

impl System for Lnf {
    type T = TermQ;

    fn calculus(&self) -> Calculus {
        Calculus::Lnf
    }

    fn rules(&self) -> Vec<Rule> {
        Lnf::ALL_RULES.to_vec()
    }

    fn redexes(&self, t: &TermQ) -> Vec<(Rule, Path)> {
        redexes_with(t, &Lnf::ALL_RULES, contract_lnf)
    }

    fn step(&self, t: &TermQ, rule: Rule, path: &Path) -> Result<TermQ> {
        if !Lnf::ALL_RULES.contains(&rule) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        step_with(t, rule, path, contract_lnf)
    }
}

pub fn step_lnf(t: &TermQ, rule: Rule, path: &Path) -> Result<TermQ> {
    Lnf.step(t, rule, path)
}

/// Replaces every cut by the derived kernel cut.
pub fn knl(t: &TermQ) -> TermQ {
    match t {
        TermQ::Ret(v) => TermQ::Ret(knl_v(v)),
        TermQ::LIntro(x, v, y, n) => TermQ::LIntro(x.clone(), knl_v(v), y.clone(), Box::new(knl(n))),
        TermQ::Cut(m, y, n) => cutvc(&knl(m), y, &knl(n)),
    }
}

pub fn knl_v(v: &ValueQ) -> ValueQ {
    match v {
        ValueQ::Var(_) => v.clone(),
        ValueQ::Lam(x, m) => ValueQ::Lam(x.clone(), Box::new(knl(m))),
    }
}

// ---------------------------------------------------------------------------
// Typing: focused judgments for values, ordinary ones for terms

pub fn infer_qv(u: &mut Unifier, v: &ValueQ) -> Result<Ty> {
    match v {
        ValueQ::Var(x) => u.lookup(x),
        ValueQ::Lam(x, m) => {
            let a = u.meta();
            u.bind(x, a.clone());
            let b = infer_q(u, m);
            u.unbind();
            Ok(Ty::arrow(a, b?))
        }
    }
}

pub fn infer_q(u: &mut Unifier, t: &TermQ) -> Result<Ty> {
    match t {
        TermQ::Ret(v) => infer_qv(u, v),
        TermQ::LIntro(h, v, y, n) => {
            let th = u.lookup(h)?;
            let a = infer_qv(u, v)?;
            let b = u.meta();
            u.unify(&th, &Ty::arrow(a, b.clone()))?;
            u.bind(y, b);
            let r = infer_q(u, n);
            u.unbind();
            r
        }
        TermQ::Cut(m, x, n) => {
            let a = infer_q(u, m)?;
            u.bind(x, a);
            let r = infer_q(u, n);
            u.unbind();
            r
        }
    }
}

pub fn typecheck_q(ctx: &TypingContext, t: &TermQ) -> Result<SimpleType> {
    synthesize(ctx, t, |u| infer_q(u, t))
}

pub fn check_q(ctx: &TypingContext, t: &TermQ, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_q(u, t))
}

pub fn check_qv(ctx: &TypingContext, v: &ValueQ, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_qv(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{brute_force_normal_forms, find_witness};

    fn n(x: &str) -> Name {
        Name::parse(x)
    }

    #[test]
    fn critical_clause_variable() {
        let t = li("y", qvar("w"), "z", ret(qvar("z")));
        assert_eq!(t.subst(&n("y"), &qvar("x")), li("x", qvar("w"), "z", ret(qvar("z"))));
    }

    #[test]
    fn critical_clause_abstraction() {
        let v = qlam("x", ret(qvar("x")));
        let t = li("y", qvar("w"), "z", ret(qvar("z")));
        let r = t.subst(&n("y"), &v);
        assert!(r.alpha_eq(&cutv(v, "y", li("y", qvar("w"), "z", ret(qvar("z"))))));
    }

    #[test]
    fn homomorphic_case() {
        assert_eq!(ret(qvar("y")).subst(&n("y"), &qvar("v")), ret(qvar("v")));
    }

    #[test]
    fn b_v_and_sigma_partition() {
        let t = cutv(qlam("x", ret(qvar("x"))), "y", li("y", qvar("w"), "z", ret(qvar("z"))));
        let r = step_q(&t, Rule::BV, &Path::root()).unwrap();
        assert!(r.alpha_eq(&cut(cutv(qvar("w"), "x", ret(qvar("x"))), "z", ret(qvar("z")))));
        assert!(step_q(&t, Rule::SigmaV, &Path::root()).is_err());
        // freshness fails, so sigma_v applies instead
        let t2 = cutv(qlam("x", ret(qvar("x"))), "y", li("y", qvar("y"), "z", ret(qvar("z"))));
        assert!(step_q(&t2, Rule::BV, &Path::root()).is_err());
        assert!(step_q(&t2, Rule::SigmaV, &Path::root()).is_ok());
    }

    #[test]
    fn sigma_and_eta_cut_agree() {
        let t = cutv(qvar("v"), "x", ret(qvar("x")));
        let a = step_q(&t, Rule::SigmaV, &Path::root()).unwrap();
        let b = step_q(&t, Rule::EtaCut, &Path::root()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lnf_b_v_example() {
        let t = cutv(qlam("x", ret(qvar("x"))), "y", li("y", qvar("w"), "z", ret(qvar("z"))));
        let r = step_lnf(&t, Rule::BV, &Path::root()).unwrap();
        assert!(r.alpha_eq(&cutv(qvar("w"), "x", cutv(qvar("x"), "z", ret(qvar("z"))))));
        let s = cutv(qvar("w"), "y", ret(qvar("y")));
        assert_eq!(step_lnf(&s, Rule::SigmaV, &Path::root()).unwrap(), ret(qvar("w")));
    }

    #[test]
    fn cutvc_clauses() {
        let nn = ret(qvar("z"));
        assert_eq!(cutvc(&ret(qvar("v")), &n("z"), &nn), cutv(qvar("v"), "z", nn.clone()));
        let m = li("x", qvar("v"), "y", ret(qvar("y")));
        assert!(cutvc(&m, &n("z"), &nn).alpha_eq(&li("x", qvar("v"), "y", cutv(qvar("y"), "z", nn.clone()))));
    }

    #[test]
    fn knl_matches_pi_normal_form() {
        let t = cut(li("x", qvar("v"), "y", ret(qvar("y"))), "z", ret(qvar("z")));
        let k = knl(&t);
        assert!(is_lnf(&k));
        let nfs = brute_force_normal_forms(&Q::pi(), &t, None, 1000).unwrap();
        assert_eq!(nfs.len(), 1);
        assert!(nfs[0].alpha_eq(&k));
        assert!(find_witness(&Q::pi(), &t, &k, None, 100).is_some());
    }

    #[test]
    fn id_lnf() {
        let m = li("x", qvar("v"), "y", ret(qvar("y")));
        let c = cutvc(&m, &n("w"), &ret(qvar("w")));
        assert!(find_witness(&Lnf, &c, &m, None, 100).is_some());
    }

    #[test]
    fn typing_left_intro() {
        let a = SimpleType::atom("a");
        let b = SimpleType::atom("b");
        let g = TypingContext::new().with(n("f"), SimpleType::arrow(a.clone(), b.clone())).with(n("v"), a);
        let t = li("f", qvar("v"), "y", ret(qvar("y")));
        assert_eq!(typecheck_q(&g, &t).unwrap(), b);
    }
}
