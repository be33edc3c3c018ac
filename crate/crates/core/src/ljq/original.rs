//! The sequent calculus with three cuts and fourteen rules, in its original
//! and modified configurations.

use std::fmt;

use crate::error::{Error, Result};
use crate::name::{fresh_like, Name, NameSet};
use crate::rewrite::{sort_redexes, Calculus, Path, Rule, Scope, Syntax, System, Tree};
use crate::types::{check_against, synthesize, SimpleType, Ty, TypingContext, Unifier};

use super::q::{TermQ, ValueQ};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ValueL {
    Var(Name),
    Lam(Name, Box<TermL>),
    /// `cut1(V, x. W)`
    Cut1(Box<ValueL>, Name, Box<ValueL>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermL {
    Ret(ValueL),
    LIntro(Name, ValueL, Name, Box<TermL>),
    /// `cut2(V, x. N)`
    Cut2(ValueL, Name, Box<TermL>),
    /// `cut(M, x. N)`
    Cut3(Box<TermL>, Name, Box<TermL>),
}

/// One node of either sort.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NodeL {
    T(TermL),
    V(ValueL),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LjqMode {
    Original,
    Modified,
}

impl ValueL {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            ValueL::Var(x) => {
                if !bound.contains(x) {
                    acc.insert(x.clone());
                }
            }
            ValueL::Lam(x, m) => {
                bound.push(x.clone());
                m.fv_into(bound, acc);
                bound.pop();
            }
            ValueL::Cut1(v, x, w) => {
                v.fv_into(bound, acc);
                bound.push(x.clone());
                w.fv_into(bound, acc);
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
            ValueL::Var(x) => {
                acc.insert(x.clone());
            }
            ValueL::Lam(x, m) => {
                acc.insert(x.clone());
                m.names(acc);
            }
            ValueL::Cut1(v, x, w) => {
                acc.insert(x.clone());
                v.names(acc);
                w.names(acc);
            }
        }
    }

    pub fn all_names(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.names(&mut acc);
        acc
    }

    /// Variable substitution `[x/y]self`.
    pub fn rename(&self, y: &Name, x: &Name) -> ValueL {
        match self {
            ValueL::Var(z) => ValueL::Var(if z == y { x.clone() } else { z.clone() }),
            ValueL::Lam(z, m) => {
                let (z, m) = binder_rename(z, m, y, x);
                ValueL::Lam(z, Box::new(m))
            }
            ValueL::Cut1(v, z, w) => {
                let v2 = v.rename(y, x);
                let (z, w) = binder_rename_v(z, w, y, x);
                ValueL::Cut1(Box::new(v2), z, Box::new(w))
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            ValueL::Var(x) => sc.var(x),
            ValueL::Lam(x, m) => Tree::node("lam", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
            ValueL::Cut1(v, x, w) => {
                let tv = v.tree_in(sc);
                Tree::node("cut1", 1, vec![tv, sc.under(x, |sc| w.tree_in(sc))])
            }
        }
    }
}

impl TermL {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            TermL::Ret(v) => v.fv_into(bound, acc),
            TermL::LIntro(h, v, y, n) => {
                if !bound.contains(h) {
                    acc.insert(h.clone());
                }
                v.fv_into(bound, acc);
                bound.push(y.clone());
                n.fv_into(bound, acc);
                bound.pop();
            }
            TermL::Cut2(v, x, n) => {
                v.fv_into(bound, acc);
                bound.push(x.clone());
                n.fv_into(bound, acc);
                bound.pop();
            }
            TermL::Cut3(m, x, n) => {
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
            TermL::Ret(v) => v.names(acc),
            TermL::LIntro(h, v, y, n) => {
                acc.insert(h.clone());
                acc.insert(y.clone());
                v.names(acc);
                n.names(acc);
            }
            TermL::Cut2(v, x, n) => {
                acc.insert(x.clone());
                v.names(acc);
                n.names(acc);
            }
            TermL::Cut3(m, x, n) => {
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

    /// Variable substitution `[x/y]self`, capture-avoiding.
    pub fn rename(&self, y: &Name, x: &Name) -> TermL {
        match self {
            TermL::Ret(v) => TermL::Ret(v.rename(y, x)),
            TermL::LIntro(h, v, z, n) => {
                let h2 = if h == y { x.clone() } else { h.clone() };
                let v2 = v.rename(y, x);
                let (z, n) = binder_rename(z, n, y, x);
                TermL::LIntro(h2, v2, z, Box::new(n))
            }
            TermL::Cut2(v, z, n) => {
                let v2 = v.rename(y, x);
                let (z, n) = binder_rename(z, n, y, x);
                TermL::Cut2(v2, z, Box::new(n))
            }
            TermL::Cut3(m, z, n) => {
                let m2 = m.rename(y, x);
                let (z, n) = binder_rename(z, n, y, x);
                TermL::Cut3(Box::new(m2), z, Box::new(n))
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            TermL::Ret(v) => Tree::node("ret", 0, vec![v.tree_in(sc)]),
            TermL::LIntro(h, v, y, n) => {
                let label = format!("li {}", sc.label(h));
                let tv = v.tree_in(sc);
                let tn = sc.under(y, |sc| n.tree_in(sc));
                Tree::node(&label, 2, vec![tv, tn])
            }
            TermL::Cut2(v, x, n) => {
                let tv = v.tree_in(sc);
                Tree::node("cut2", 1, vec![tv, sc.under(x, |sc| n.tree_in(sc))])
            }
            TermL::Cut3(m, x, n) => {
                let tm = m.tree_in(sc);
                Tree::node("cut3", 1, vec![tm, sc.under(x, |sc| n.tree_in(sc))])
            }
        }
    }
}

fn binder_rename(z: &Name, body: &TermL, y: &Name, x: &Name) -> (Name, TermL) {
    if z == y || !body.occurs_free(y) {
        return (z.clone(), body.clone());
    }
    if z == x {
        let mut avoid = body.all_names();
        avoid.insert(x.clone());
        avoid.insert(y.clone());
        let z2 = fresh_like(z, &avoid);
        return (z2.clone(), body.rename(z, &z2).rename(y, x));
    }
    (z.clone(), body.rename(y, x))
}

fn binder_rename_v(z: &Name, body: &ValueL, y: &Name, x: &Name) -> (Name, ValueL) {
    if z == y || !body.free_vars().contains(y) {
        return (z.clone(), body.clone());
    }
    if z == x {
        let mut avoid = body.all_names();
        avoid.insert(x.clone());
        avoid.insert(y.clone());
        let z2 = fresh_like(z, &avoid);
        return (z2.clone(), body.rename(z, &z2).rename(y, x));
    }
    (z.clone(), body.rename(y, x))
}

/// Renames binder `x` of term `body` away from `clash`.
fn avoid_t(x: &Name, body: &TermL, clash: &NameSet) -> (Name, TermL) {
    if !clash.contains(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = body.all_names();
    avoid.extend(clash.iter().cloned());
    let x2 = fresh_like(x, &avoid);
    (x2.clone(), body.rename(x, &x2))
}

impl Syntax for TermL {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl fmt::Display for ValueL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueL::Var(x) => write!(f, "{x}"),
            ValueL::Lam(x, m) => write!(f, "\\{x}. {m}"),
            ValueL::Cut1(v, x, w) => write!(f, "cut1({v}, {x}. {w})"),
        }
    }
}

impl fmt::Display for TermL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermL::Ret(v @ ValueL::Lam(..)) => write!(f, "^({v})"),
            TermL::Ret(v) => write!(f, "^{v}"),
            TermL::LIntro(h, v, y, n) => write!(f, "{h}({v}, {y}. {n})"),
            TermL::Cut2(v, x, n) => write!(f, "cut2({v}, {x}. {n})"),
            TermL::Cut3(m, x, n) => write!(f, "cut({m}, {x}. {n})"),
        }
    }
}

// ---------------------------------------------------------------------------
// Embedding and navigation

pub fn embed_q(t: &TermQ) -> TermL {
    match t {
        TermQ::Ret(v) => TermL::Ret(embed_qv(v)),
        TermQ::LIntro(h, v, y, n) => TermL::LIntro(h.clone(), embed_qv(v), y.clone(), Box::new(embed_q(n))),
        TermQ::Cut(m, x, n) => TermL::Cut3(Box::new(embed_q(m)), x.clone(), Box::new(embed_q(n))),
    }
}

pub fn embed_qv(v: &ValueQ) -> ValueL {
    match v {
        ValueQ::Var(x) => ValueL::Var(x.clone()),
        ValueQ::Lam(x, m) => ValueL::Lam(x.clone(), Box::new(embed_q(m))),
    }
}

/// Inverse of the embedding, defined on terms without explicit substitutions.
pub fn as_q(t: &TermL) -> Option<TermQ> {
    Some(match t {
        TermL::Ret(v) => TermQ::Ret(as_qv(v)?),
        TermL::LIntro(h, v, y, n) => TermQ::LIntro(h.clone(), as_qv(v)?, y.clone(), Box::new(as_q(n)?)),
        TermL::Cut3(m, x, n) => TermQ::Cut(Box::new(as_q(m)?), x.clone(), Box::new(as_q(n)?)),
        TermL::Cut2(..) => return None,
    })
}

pub fn as_qv(v: &ValueL) -> Option<ValueQ> {
    Some(match v {
        ValueL::Var(x) => ValueQ::Var(x.clone()),
        ValueL::Lam(x, m) => ValueQ::Lam(x.clone(), Box::new(as_q(m)?)),
        ValueL::Cut1(..) => return None,
    })
}

/// True when every explicit substitution carries an abstraction.
pub fn explicit_cuts_on_abstractions(t: &TermL) -> bool {
    fn v_ok(v: &ValueL) -> bool {
        match v {
            ValueL::Var(_) => true,
            ValueL::Lam(_, m) => explicit_cuts_on_abstractions(m),
            ValueL::Cut1(c, _, w) => matches!(**c, ValueL::Lam(..)) && v_ok(c) && v_ok(w),
        }
    }
    match t {
        TermL::Ret(v) => v_ok(v),
        TermL::LIntro(_, v, _, n) => v_ok(v) && explicit_cuts_on_abstractions(n),
        TermL::Cut2(v, _, n) => matches!(v, ValueL::Lam(..)) && v_ok(v) && explicit_cuts_on_abstractions(n),
        TermL::Cut3(m, _, n) => explicit_cuts_on_abstractions(m) && explicit_cuts_on_abstractions(n),
    }
}

fn children(n: &NodeL) -> Vec<NodeL> {
    match n {
        NodeL::T(TermL::Ret(v)) => vec![NodeL::V(v.clone())],
        NodeL::T(TermL::LIntro(_, v, _, m)) | NodeL::T(TermL::Cut2(v, _, m)) => {
            vec![NodeL::V(v.clone()), NodeL::T((**m).clone())]
        }
        NodeL::T(TermL::Cut3(m, _, n)) => vec![NodeL::T((**m).clone()), NodeL::T((**n).clone())],
        NodeL::V(ValueL::Var(_)) => vec![],
        NodeL::V(ValueL::Lam(_, m)) => vec![NodeL::T((**m).clone())],
        NodeL::V(ValueL::Cut1(v, _, w)) => vec![NodeL::V((**v).clone()), NodeL::V((**w).clone())],
    }
}

fn nodes(n: &NodeL, path: &mut Vec<usize>, out: &mut Vec<(Path, NodeL)>) {
    out.push((Path(path.clone()), n.clone()));
    for (i, c) in children(n).iter().enumerate() {
        path.push(i);
        nodes(c, path, out);
        path.pop();
    }
}

fn map_at(n: &NodeL, path: &[usize], f: &mut dyn FnMut(&NodeL) -> Result<NodeL>) -> Result<NodeL> {
    let Some((&i, rest)) = path.split_first() else { return f(n) };
    let bad = || Error::Malformed(format!("path index {i} out of range"));
    let t = |x: NodeL| match x {
        NodeL::T(t) => Ok(t),
        _ => Err(Error::Malformed("sort mismatch".into())),
    };
    let v = |x: NodeL| match x {
        NodeL::V(v) => Ok(v),
        _ => Err(Error::Malformed("sort mismatch".into())),
    };
    Ok(match (n, i) {
        (NodeL::T(TermL::Ret(a)), 0) => NodeL::T(TermL::Ret(v(map_at(&NodeL::V(a.clone()), rest, f)?)?)),
        (NodeL::T(TermL::LIntro(h, a, y, m)), 0) => {
            NodeL::T(TermL::LIntro(h.clone(), v(map_at(&NodeL::V(a.clone()), rest, f)?)?, y.clone(), m.clone()))
        }
        (NodeL::T(TermL::LIntro(h, a, y, m)), 1) => NodeL::T(TermL::LIntro(
            h.clone(),
            a.clone(),
            y.clone(),
            Box::new(t(map_at(&NodeL::T((**m).clone()), rest, f)?)?),
        )),
        (NodeL::T(TermL::Cut2(a, x, m)), 0) => {
            NodeL::T(TermL::Cut2(v(map_at(&NodeL::V(a.clone()), rest, f)?)?, x.clone(), m.clone()))
        }
        (NodeL::T(TermL::Cut2(a, x, m)), 1) => {
            NodeL::T(TermL::Cut2(a.clone(), x.clone(), Box::new(t(map_at(&NodeL::T((**m).clone()), rest, f)?)?)))
        }
        (NodeL::T(TermL::Cut3(m, x, p)), 0) => {
            NodeL::T(TermL::Cut3(Box::new(t(map_at(&NodeL::T((**m).clone()), rest, f)?)?), x.clone(), p.clone()))
        }
        (NodeL::T(TermL::Cut3(m, x, p)), 1) => {
            NodeL::T(TermL::Cut3(m.clone(), x.clone(), Box::new(t(map_at(&NodeL::T((**p).clone()), rest, f)?)?)))
        }
        (NodeL::V(ValueL::Lam(x, m)), 0) => {
            NodeL::V(ValueL::Lam(x.clone(), Box::new(t(map_at(&NodeL::T((**m).clone()), rest, f)?)?)))
        }
        (NodeL::V(ValueL::Cut1(a, x, w)), 0) => {
            NodeL::V(ValueL::Cut1(Box::new(v(map_at(&NodeL::V((**a).clone()), rest, f)?)?), x.clone(), w.clone()))
        }
        (NodeL::V(ValueL::Cut1(a, x, w)), 1) => {
            NodeL::V(ValueL::Cut1(a.clone(), x.clone(), Box::new(v(map_at(&NodeL::V((**w).clone()), rest, f)?)?)))
        }
        _ => return Err(bad()),
    })
}

// ---------------------------------------------------------------------------
// Rules

fn fv_minus(t: &TermL, x: &Name) -> NameSet {
    let mut s = t.free_vars();
    s.remove(x);
    s
}

fn rule1_matches(t: &TermL) -> bool {
    match t {
        TermL::Cut3(m, y, n) => match (&**m, &**n) {
            (TermL::Ret(ValueL::Lam(..)), TermL::LIntro(h, v, x, p)) => {
                h == y && !v.free_vars().contains(y) && (x == y || !p.occurs_free(y))
            }
            _ => false,
        },
        _ => false,
    }
}

fn rule5_matches(t: &TermL) -> bool {
    match t {
        TermL::Cut3(m, _, _) => match &**m {
            TermL::Cut3(w, y, inner) => match (&**w, &**inner) {
                (TermL::Ret(_), TermL::LIntro(h, v, x, p)) => {
                    h == y && !v.free_vars().contains(y) && (x == y || !p.occurs_free(y))
                }
                _ => false,
            },
            _ => false,
        },
        _ => false,
    }
}

/// Configuration of the fourteen-rule calculus.
#[derive(Clone, Debug)]
pub struct Ljq {
    pub mode: LjqMode,
    /// Refuse rule (12), whose right-hand side puts a term where a value belongs.
    pub strict_rule12: bool,
    pub rules: Vec<Rule>,
}

impl Ljq {
    pub fn modified() -> Ljq {
        Ljq { mode: LjqMode::Modified, strict_rule12: false, rules: Ljq::rules_for(LjqMode::Modified) }
    }

    pub fn original() -> Ljq {
        Ljq { mode: LjqMode::Original, strict_rule12: false, rules: Ljq::rules_for(LjqMode::Original) }
    }

    pub fn rules_for(mode: LjqMode) -> Vec<Rule> {
        (1..=14u8).filter(|&n| !(mode == LjqMode::Modified && n == 5)).map(Rule::Ljq).collect()
    }

    pub fn with_rules(mut self, rules: &[Rule]) -> Ljq {
        self.rules.retain(|r| rules.contains(r));
        self
    }

    fn contract(&self, n: &NodeL, rule: Rule) -> Option<NodeL> {
        let Rule::Ljq(k) = rule else { return None };
        if self.mode == LjqMode::Modified && k == 5 {
            return None;
        }
        if self.strict_rule12 && k == 12 {
            return None;
        }
        match n {
            NodeL::T(t) => self.contract_t(t, k).map(NodeL::T),
            NodeL::V(v) => contract_v(v, k).map(NodeL::V),
        }
    }

    fn contract_t(&self, t: &TermL, k: u8) -> Option<TermL> {
        use TermL::*;
        match (k, t) {
            (1, Cut3(m, _, n)) if rule1_matches(t) => match (&**m, &**n) {
                (Ret(ValueL::Lam(x, body)), LIntro(_, v, z, p)) => Some(Cut3(
                    Box::new(Cut3(Box::new(Ret(v.clone())), x.clone(), body.clone())),
                    z.clone(),
                    p.clone(),
                )),
                _ => None,
            },
            (2, Cut3(m, y, n)) => match &**m {
                Ret(ValueL::Var(x)) => Some(n.rename(y, x)),
                _ => None,
            },
            (3, Cut3(m, x, n)) if **n == Ret(ValueL::Var(x.clone())) => Some((**m).clone()),
            (4, Cut3(m, x, n)) => match &**m {
                LIntro(z, v, y, p) => {
                    let (y2, p2) = avoid_t(y, p, &fv_minus(n, x));
                    Some(LIntro(z.clone(), v.clone(), y2, Box::new(Cut3(Box::new(p2), x.clone(), n.clone()))))
                }
                _ => None,
            },
            (5, Cut3(m, x, n)) if rule5_matches(t) => match &**m {
                Cut3(w, y, inner) => match &**inner {
                    LIntro(h, v, z, p) => {
                        let clash = fv_minus(n, x);
                        let (z2, p2) = avoid_t(z, p, &clash);
                        let body = LIntro(h.clone(), v.clone(), z2, Box::new(Cut3(Box::new(p2), x.clone(), n.clone())));
                        let (y2, body2) = avoid_t(y, &body, &clash);
                        Some(Cut3(w.clone(), y2, Box::new(body2)))
                    }
                    _ => None,
                },
                _ => None,
            },
            (6, Cut3(m, x, n)) => {
                if self.mode == LjqMode::Original && rule5_matches(t) {
                    return None;
                }
                match &**m {
                    Cut3(m1, y, p) => {
                        let (y2, p2) = avoid_t(y, p, &fv_minus(n, x));
                        Some(Cut3(m1.clone(), y2, Box::new(Cut3(Box::new(p2), x.clone(), n.clone()))))
                    }
                    _ => None,
                }
            }
            (7, Cut3(m, y, n)) if !rule1_matches(t) => match &**m {
                Ret(v @ ValueL::Lam(..)) => Some(Cut2(v.clone(), y.clone(), n.clone())),
                _ => None,
            },
            (11, Cut2(v, x, n)) => match &**n {
                Ret(w) => Some(Ret(ValueL::Cut1(Box::new(v.clone()), x.clone(), Box::new(w.clone())))),
                _ => None,
            },
            (12, Cut2(v, x, n)) => match &**n {
                LIntro(h, w, z, p) if h == x => {
                    let mut clash = v.free_vars();
                    clash.insert(x.clone());
                    let (z2, p2) = avoid_t(z, p, &clash);
                    let inner_w = ValueL::Cut1(Box::new(v.clone()), x.clone(), Box::new(w.clone()));
                    let inner_n = Cut2(v.clone(), x.clone(), Box::new(p2));
                    let mut avoid = v.free_vars();
                    inner_w.names(&mut avoid);
                    inner_n.names(&mut avoid);
                    avoid.insert(z2.clone());
                    let x2 = if v.free_vars().contains(x) { fresh_like(x, &avoid) } else { x.clone() };
                    Some(Cut3(
                        Box::new(Ret(v.clone())),
                        x2.clone(),
                        Box::new(LIntro(x2, inner_w, z2, Box::new(inner_n))),
                    ))
                }
                _ => None,
            },
            (13, Cut2(v, x, n)) => match &**n {
                LIntro(h, w, z, p) if h != x => {
                    let mut clash = v.free_vars();
                    clash.insert(x.clone());
                    let (z2, p2) = avoid_t(z, p, &clash);
                    Some(LIntro(
                        h.clone(),
                        ValueL::Cut1(Box::new(v.clone()), x.clone(), Box::new(w.clone())),
                        z2,
                        Box::new(Cut2(v.clone(), x.clone(), Box::new(p2))),
                    ))
                }
                _ => None,
            },
            (14, Cut2(v, x, n)) => match &**n {
                Cut3(m, y, p) => {
                    let mut clash = v.free_vars();
                    clash.insert(x.clone());
                    let (y2, p2) = avoid_t(y, p, &clash);
                    Some(Cut3(
                        Box::new(Cut2(v.clone(), x.clone(), m.clone())),
                        y2,
                        Box::new(Cut2(v.clone(), x.clone(), Box::new(p2))),
                    ))
                }
                _ => None,
            },
            _ => None,
        }
    }
}

fn contract_v(v: &ValueL, k: u8) -> Option<ValueL> {
    match (k, v) {
        (8, ValueL::Cut1(a, x, w)) if **w == ValueL::Var(x.clone()) => Some((**a).clone()),
        (9, ValueL::Cut1(_, x, w)) => match &**w {
            ValueL::Var(y) if y != x => Some(ValueL::Var(y.clone())),
            _ => None,
        },
        (10, ValueL::Cut1(a, x, w)) => match &**w {
            ValueL::Lam(y, m) => {
                let mut clash = a.free_vars();
                clash.insert(x.clone());
                let (y2, m2) = avoid_t(y, m, &clash);
                Some(ValueL::Lam(y2, Box::new(TermL::Cut2((**a).clone(), x.clone(), Box::new(m2)))))
            }
            _ => None,
        },
        _ => None,
    }
}

impl System for Ljq {
    type T = TermL;

    fn calculus(&self) -> Calculus {
        match self.mode {
            LjqMode::Original => Calculus::LjqOriginal,
            LjqMode::Modified => Calculus::Ljq,
        }
    }

    fn rules(&self) -> Vec<Rule> {
        self.rules.clone()
    }

    fn redexes(&self, t: &TermL) -> Vec<(Rule, Path)> {
        let mut ns = Vec::new();
        nodes(&NodeL::T(t.clone()), &mut Vec::new(), &mut ns);
        let mut found = Vec::new();
        for (p, n) in ns {
            for &r in &self.rules {
                if self.contract(&n, r).is_some() {
                    found.push((r, p.clone()));
                }
            }
        }
        sort_redexes(&self.rules, found)
    }

    fn step(&self, t: &TermL, rule: Rule, path: &Path) -> Result<TermL> {
        if !self.rules.contains(&rule) || (self.strict_rule12 && rule == Rule::Ljq(12)) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
        let r = map_at(&NodeL::T(t.clone()), &path.0, &mut |n| self.contract(n, rule).ok_or_else(no));
        match r {
            Ok(NodeL::T(t)) => Ok(t),
            Ok(NodeL::V(_)) => Err(no()),
            Err(Error::Malformed(_)) => Err(no()),
            Err(e) => Err(e),
        }
    }
}

pub fn step_ljq(t: &TermL, rule: Rule, path: &Path, mode: LjqMode) -> Result<TermL> {
    let sys = match mode {
        LjqMode::Original => Ljq::original(),
        LjqMode::Modified => Ljq::modified(),
    };
    sys.step(t, rule, path)
}

// ---------------------------------------------------------------------------
// The map into the simplified calculus

pub fn smp(t: &TermL) -> TermQ {
    match t {
        TermL::Ret(v) => TermQ::Ret(smp_v(v)),
        TermL::LIntro(h, v, y, n) => TermQ::LIntro(h.clone(), smp_v(v), y.clone(), Box::new(smp(n))),
        TermL::Cut2(v, x, n) => smp(n).subst(x, &smp_v(v)),
        TermL::Cut3(m, x, n) => TermQ::Cut(Box::new(smp(m)), x.clone(), Box::new(smp(n))),
    }
}

pub fn smp_v(v: &ValueL) -> ValueQ {
    match v {
        ValueL::Var(x) => ValueQ::Var(x.clone()),
        ValueL::Lam(x, m) => ValueQ::Lam(x.clone(), Box::new(smp(m))),
        ValueL::Cut1(a, x, w) => smp_v(w).subst(x, &smp_v(a)),
    }
}

// ---------------------------------------------------------------------------
// Typing

fn infer_lv(u: &mut Unifier, v: &ValueL) -> Result<Ty> {
    match v {
        ValueL::Var(x) => u.lookup(x),
        ValueL::Lam(x, m) => {
            let a = u.meta();
            u.bind(x, a.clone());
            let b = infer_l(u, m);
            u.unbind();
            Ok(Ty::arrow(a, b?))
        }
        ValueL::Cut1(a, x, w) => {
            let ta = infer_lv(u, a)?;
            u.bind(x, ta);
            let r = infer_lv(u, w);
            u.unbind();
            r
        }
    }
}

fn infer_l(u: &mut Unifier, t: &TermL) -> Result<Ty> {
    match t {
        TermL::Ret(v) => infer_lv(u, v),
        TermL::LIntro(h, v, y, n) => {
            let th = u.lookup(h)?;
            let a = infer_lv(u, v)?;
            let b = u.meta();
            u.unify(&th, &Ty::arrow(a, b.clone()))?;
            u.bind(y, b);
            let r = infer_l(u, n);
            u.unbind();
            r
        }
        TermL::Cut2(v, x, n) => {
            let a = infer_lv(u, v)?;
            u.bind(x, a);
            let r = infer_l(u, n);
            u.unbind();
            r
        }
        TermL::Cut3(m, x, n) => {
            let a = infer_l(u, m)?;
            u.bind(x, a);
            let r = infer_l(u, n);
            u.unbind();
            r
        }
    }
}

pub fn typecheck_ljq(ctx: &TypingContext, t: &TermL) -> Result<SimpleType> {
    synthesize(ctx, t, |u| infer_l(u, t))
}

pub fn check_ljq(ctx: &TypingContext, t: &TermL, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_l(u, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ljq::q::{cutv, li, qlam, qvar, ret};
    use crate::rewrite::find_witness;

    fn v(x: &str) -> ValueL {
        ValueL::Var(Name::parse(x))
    }

    fn lret(a: ValueL) -> TermL {
        TermL::Ret(a)
    }

    #[test]
    fn rule2_substitutes_variable() {
        let t = TermL::Cut3(Box::new(lret(v("x"))), Name::new("y"), Box::new(lret(v("y"))));
        assert_eq!(step_ljq(&t, Rule::Ljq(2), &Path::root(), LjqMode::Modified).unwrap(), lret(v("x")));
    }

    #[test]
    fn rule8_value_rule() {
        let c = ValueL::Cut1(Box::new(v("w")), Name::new("x"), Box::new(v("x")));
        let t = lret(c);
        let r = step_ljq(&t, Rule::Ljq(8), &Path(vec![0]), LjqMode::Modified).unwrap();
        assert_eq!(r, lret(v("w")));
    }

    #[test]
    fn rule5_dropped_in_modified_mode() {
        // cut(cut(^w, y. y(v, z. ^z)), x. ^x)
        let inner = TermL::LIntro(Name::new("y"), v("v"), Name::new("z"), Box::new(lret(v("z"))));
        let m = TermL::Cut3(Box::new(lret(v("w"))), Name::new("y"), Box::new(inner));
        let t = TermL::Cut3(Box::new(m), Name::new("x"), Box::new(lret(v("x"))));
        assert!(matches!(
            step_ljq(&t, Rule::Ljq(5), &Path::root(), LjqMode::Modified),
            Err(Error::RuleDisabled(_))
        ));
        assert!(step_ljq(&t, Rule::Ljq(5), &Path::root(), LjqMode::Original).is_ok());
        assert!(step_ljq(&t, Rule::Ljq(6), &Path::root(), LjqMode::Original).is_err());
        assert!(step_ljq(&t, Rule::Ljq(6), &Path::root(), LjqMode::Modified).is_ok());
    }

    #[test]
    fn rule12_strict_toggle() {
        let lam = ValueL::Lam(Name::new("u"), Box::new(lret(v("u"))));
        let body = TermL::LIntro(Name::new("x"), v("w"), Name::new("z"), Box::new(lret(v("z"))));
        let t = TermL::Cut2(lam, Name::new("x"), Box::new(body));
        assert!(step_ljq(&t, Rule::Ljq(12), &Path::root(), LjqMode::Modified).is_ok());
        let strict = Ljq { strict_rule12: true, ..Ljq::modified() };
        assert!(strict.step(&t, Rule::Ljq(12), &Path::root()).is_err());
    }

    #[test]
    fn smp_is_identity_on_embedded() {
        let q = cutv(qlam("x", ret(qvar("x"))), "y", li("y", qvar("w"), "z", ret(qvar("z"))));
        assert_eq!(smp(&embed_q(&q)), q);
    }

    #[test]
    fn explicit_cut_reaches_substitution() {
        let lam = ValueL::Lam(Name::new("u"), Box::new(lret(v("u"))));
        let body = TermL::LIntro(Name::new("x"), v("w"), Name::new("z"), Box::new(lret(v("x"))));
        let t = TermL::Cut2(lam, Name::new("x"), Box::new(body));
        let goal = embed_q(&smp(&t));
        let sys = Ljq::modified().with_rules(&(8..=14).map(Rule::Ljq).collect::<Vec<_>>());
        let w = find_witness(&sys, &t, &goal, None, 1000).expect("witness");
        w.replay(&sys).unwrap();
    }

    /// With a variable as the explicit cut value, rule (12) maps to a
    /// backwards step under the simplification map.
    #[test]
    fn rule12_with_variable_value_is_not_simulated() {
        let body = TermL::LIntro(Name::new("x"), v("w"), Name::new("z"), Box::new(lret(v("z"))));
        let t = TermL::Cut2(v("u"), Name::new("x"), Box::new(body));
        let r = step_ljq(&t, Rule::Ljq(12), &Path::root(), LjqMode::Modified).unwrap();
        let (a, b) = (smp(&t), smp(&r));
        assert!(find_witness(&crate::ljq::q::Q::full(), &a, &b, None, 200).is_none());
        assert!(find_witness(&crate::ljq::q::Q::full(), &b, &a, None, 200).is_some());
    }
}
