//! Value-filling style: the sub-kernel with formal contexts, and the translation into it.

use std::fmt;

use crate::error::{Error, Result};
use crate::lambda_c::TermC;
use crate::ljq::q::{Atomic, TermQ, ValueQ};
use crate::name::{fresh_like, fresh_name, Name, NameSet};
use crate::rewrite::{sort_redexes, Calculus, Path, Rule, Scope, Syntax, System, Tree};
use crate::types::{check_against, synthesize, SimpleType, Ty, TypingContext, Unifier};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ValueVfs {
    Var(Name),
    Lam(Name, Box<TermVfs>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermVfs {
    Ret(ValueVfs),
    CutC(ValueVfs, FormalContext),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FormalContext {
    /// `x. M`
    Bind(Name, Box<TermVfs>),
    /// `(W, x. M)`
    GApp(ValueVfs, Name, Box<TermVfs>),
}

pub fn vvar(x: &str) -> ValueVfs {
    ValueVfs::Var(Name::parse(x))
}

pub fn vlam(x: &str, m: TermVfs) -> ValueVfs {
    ValueVfs::Lam(Name::parse(x), Box::new(m))
}

pub fn vret(v: ValueVfs) -> TermVfs {
    TermVfs::Ret(v)
}

pub fn bind(x: &str, m: TermVfs) -> FormalContext {
    FormalContext::Bind(Name::parse(x), Box::new(m))
}

pub fn garg(w: ValueVfs, x: &str, m: TermVfs) -> FormalContext {
    FormalContext::GApp(w, Name::parse(x), Box::new(m))
}

pub fn cutc(v: ValueVfs, c: FormalContext) -> TermVfs {
    TermVfs::CutC(v, c)
}

impl ValueVfs {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            ValueVfs::Var(x) => {
                if !bound.contains(x) {
                    acc.insert(x.clone());
                }
            }
            ValueVfs::Lam(x, m) => {
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
            ValueVfs::Var(x) => {
                acc.insert(x.clone());
            }
            ValueVfs::Lam(x, m) => {
                acc.insert(x.clone());
                m.names(acc);
            }
        }
    }

    pub fn subst(&self, y: &Name, v: &ValueVfs) -> ValueVfs {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &ValueVfs, fv: &NameSet) -> ValueVfs {
        match self {
            ValueVfs::Var(x) if x == y => v.clone(),
            ValueVfs::Var(_) => self.clone(),
            ValueVfs::Lam(x, m) => {
                let (x, m) = binder_subst(x, m, y, v, fv);
                ValueVfs::Lam(x, Box::new(m))
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            ValueVfs::Var(x) => sc.var(x),
            ValueVfs::Lam(x, m) => Tree::node("lam", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
        }
    }

    fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermVfs) -> Result<TermVfs>) -> Result<ValueVfs> {
        match (self, path.split_first()) {
            (ValueVfs::Lam(x, m), Some((&0, rest))) => Ok(ValueVfs::Lam(x.clone(), Box::new(m.map_at(rest, f)?))),
            _ => Err(Error::Malformed("path does not reach a term".into())),
        }
    }

    fn term_nodes(&self, path: &mut Vec<usize>, out: &mut Vec<(Path, TermVfs)>) {
        if let ValueVfs::Lam(_, m) = self {
            path.push(0);
            m.term_nodes(path, out);
            path.pop();
        }
    }
}

impl FormalContext {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        let (x, m) = match self {
            FormalContext::Bind(x, m) => (x, m),
            FormalContext::GApp(w, x, m) => {
                w.fv_into(bound, acc);
                (x, m)
            }
        };
        bound.push(x.clone());
        m.fv_into(bound, acc);
        bound.pop();
    }

    pub fn free_vars(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.fv_into(&mut Vec::new(), &mut acc);
        acc
    }

    pub fn names(&self, acc: &mut NameSet) {
        match self {
            FormalContext::Bind(x, m) => {
                acc.insert(x.clone());
                m.names(acc);
            }
            FormalContext::GApp(w, x, m) => {
                w.names(acc);
                acc.insert(x.clone());
                m.names(acc);
            }
        }
    }

    pub fn subst(&self, y: &Name, v: &ValueVfs) -> FormalContext {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &ValueVfs, fv: &NameSet) -> FormalContext {
        match self {
            FormalContext::Bind(x, m) => {
                let (x, m) = binder_subst(x, m, y, v, fv);
                FormalContext::Bind(x, Box::new(m))
            }
            FormalContext::GApp(w, x, m) => {
                let w = w.subst_with(y, v, fv);
                let (x, m) = binder_subst(x, m, y, v, fv);
                FormalContext::GApp(w, x, Box::new(m))
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            FormalContext::Bind(x, m) => Tree::node("bind", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
            FormalContext::GApp(w, x, m) => {
                let tw = w.tree_in(sc);
                Tree::node("garg", 1, vec![tw, sc.under(x, |sc| m.tree_in(sc))])
            }
        }
    }

    fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermVfs) -> Result<TermVfs>) -> Result<FormalContext> {
        let bad = || Error::Malformed("path does not reach a term".into());
        let Some((&i, rest)) = path.split_first() else { return Err(bad()) };
        Ok(match (self, i) {
            (FormalContext::Bind(x, m), 0) => FormalContext::Bind(x.clone(), Box::new(m.map_at(rest, f)?)),
            (FormalContext::GApp(w, x, m), 0) => FormalContext::GApp(w.map_at(rest, f)?, x.clone(), m.clone()),
            (FormalContext::GApp(w, x, m), 1) => {
                FormalContext::GApp(w.clone(), x.clone(), Box::new(m.map_at(rest, f)?))
            }
            _ => return Err(bad()),
        })
    }

    fn term_nodes(&self, path: &mut Vec<usize>, out: &mut Vec<(Path, TermVfs)>) {
        match self {
            FormalContext::Bind(_, m) => {
                path.push(0);
                m.term_nodes(path, out);
                path.pop();
            }
            FormalContext::GApp(w, _, m) => {
                path.push(0);
                w.term_nodes(path, out);
                path.pop();
                path.push(1);
                m.term_nodes(path, out);
                path.pop();
            }
        }
    }
}

impl TermVfs {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            TermVfs::Ret(v) => v.fv_into(bound, acc),
            TermVfs::CutC(v, c) => {
                v.fv_into(bound, acc);
                c.fv_into(bound, acc);
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
            TermVfs::Ret(v) => v.names(acc),
            TermVfs::CutC(v, c) => {
                v.names(acc);
                c.names(acc);
            }
        }
    }

    pub fn all_names(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.names(&mut acc);
        acc
    }

    /// Plain capture-avoiding substitution `[v/y]self`.
    pub fn subst(&self, y: &Name, v: &ValueVfs) -> TermVfs {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &ValueVfs, fv: &NameSet) -> TermVfs {
        match self {
            TermVfs::Ret(w) => TermVfs::Ret(w.subst_with(y, v, fv)),
            TermVfs::CutC(w, c) => TermVfs::CutC(w.subst_with(y, v, fv), c.subst_with(y, v, fv)),
        }
    }

    pub fn rename(&self, from: &Name, to: &Name) -> TermVfs {
        self.subst(from, &ValueVfs::Var(to.clone()))
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            TermVfs::Ret(v) => Tree::node("ret", 0, vec![v.tree_in(sc)]),
            TermVfs::CutC(v, c) => {
                let tv = v.tree_in(sc);
                Tree::node("cutc", 0, vec![tv, c.tree_in(sc)])
            }
        }
    }

    pub fn map_at(&self, path: &[usize], f: &mut dyn FnMut(&TermVfs) -> Result<TermVfs>) -> Result<TermVfs> {
        let Some((&i, rest)) = path.split_first() else { return f(self) };
        let bad = || Error::Malformed(format!("path index {i} out of range"));
        Ok(match (self, i) {
            (TermVfs::Ret(v), 0) => TermVfs::Ret(v.map_at(rest, f)?),
            (TermVfs::CutC(v, c), 0) => TermVfs::CutC(v.map_at(rest, f)?, c.clone()),
            (TermVfs::CutC(v, c), 1) => TermVfs::CutC(v.clone(), c.map_at(rest, f)?),
            _ => return Err(bad()),
        })
    }

    pub fn term_nodes(&self, path: &mut Vec<usize>, out: &mut Vec<(Path, TermVfs)>) {
        out.push((Path(path.clone()), self.clone()));
        path.push(0);
        match self {
            TermVfs::Ret(v) => v.term_nodes(path, out),
            TermVfs::CutC(v, c) => {
                v.term_nodes(path, out);
                path.pop();
                path.push(1);
                c.term_nodes(path, out);
            }
        }
        path.pop();
    }
}

fn binder_subst(x: &Name, body: &TermVfs, y: &Name, v: &ValueVfs, fv: &NameSet) -> (Name, TermVfs) {
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

fn avoid_binder(x: &Name, body: &TermVfs, clash: &NameSet) -> (Name, TermVfs) {
    if !clash.contains(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = body.all_names();
    avoid.extend(clash.iter().cloned());
    let x2 = fresh_like(x, &avoid);
    (x2.clone(), body.rename(x, &x2))
}

impl Syntax for TermVfs {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for ValueVfs {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for FormalContext {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl fmt::Display for ValueVfs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueVfs::Var(x) => write!(f, "{x}"),
            ValueVfs::Lam(x, m) => write!(f, "\\{x}. {m}"),
        }
    }
}

impl fmt::Display for Atomic<'_, ValueVfs> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ValueVfs::Var(x) => write!(f, "{x}"),
            v => write!(f, "({v})"),
        }
    }
}

impl fmt::Display for FormalContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormalContext::Bind(x, m) => write!(f, "{x}. {m}"),
            FormalContext::GApp(w, x, m) => write!(f, "({w}, {x}. {m})"),
        }
    }
}

impl fmt::Display for TermVfs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermVfs::Ret(v) => write!(f, "^{}", Atomic(v)),
            TermVfs::CutC(v, c) => write!(f, "cut_v({v}, {c})"),
        }
    }
}

// ---------------------------------------------------------------------------
// Composition with a formal context

/// `(M : c')`
pub fn colon_vfs(m: &TermVfs, c2: &FormalContext) -> TermVfs {
    match m {
        TermVfs::Ret(v) => TermVfs::CutC(v.clone(), c2.clone()),
        TermVfs::CutC(v, c) => TermVfs::CutC(v.clone(), ctx_compose(c, c2)),
    }
}

/// `(c : c')`
pub fn ctx_compose(c: &FormalContext, c2: &FormalContext) -> FormalContext {
    let clash = c2.free_vars();
    match c {
        FormalContext::Bind(x, m) => {
            let (x, m) = avoid_binder(x, m, &clash);
            FormalContext::Bind(x, Box::new(colon_vfs(&m, c2)))
        }
        FormalContext::GApp(w, x, m) => {
            let (x, m) = avoid_binder(x, m, &clash);
            FormalContext::GApp(w.clone(), x, Box::new(colon_vfs(&m, c2)))
        }
    }
}

// ---------------------------------------------------------------------------
// Rules

pub fn contract_vfs(t: &TermVfs, rule: Rule) -> Option<TermVfs> {
    match (rule, t) {
        (Rule::BV, TermVfs::CutC(ValueVfs::Lam(x, m), FormalContext::GApp(v, y, n))) => {
            let c = FormalContext::Bind(y.clone(), n.clone());
            let (x, m) = avoid_binder(x, m, &c.free_vars());
            Some(TermVfs::CutC(v.clone(), FormalContext::Bind(x, Box::new(colon_vfs(&m, &c)))))
        }
        (Rule::SigmaV, TermVfs::CutC(v, FormalContext::Bind(y, n))) => Some(n.subst(y, v)),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct Vfs;

impl Vfs {
    pub const ALL_RULES: [Rule; 2] = [Rule::BV, Rule::SigmaV];
}

impl System for Vfs {
    type T = TermVfs;

    fn calculus(&self) -> Calculus {
        Calculus::Vfs
    }

    fn rules(&self) -> Vec<Rule> {
        Vfs::ALL_RULES.to_vec()
    }

    fn redexes(&self, t: &TermVfs) -> Vec<(Rule, Path)> {
        let mut nodes = Vec::new();
        t.term_nodes(&mut Vec::new(), &mut nodes);
        let mut found = Vec::new();
        for (p, s) in nodes {
            for r in Vfs::ALL_RULES {
                if contract_vfs(&s, r).is_some() {
                    found.push((r, p.clone()));
                }
            }
        }
        sort_redexes(&Vfs::ALL_RULES, found)
    }

    fn step(&self, t: &TermVfs, rule: Rule, path: &Path) -> Result<TermVfs> {
        if !Vfs::ALL_RULES.contains(&rule) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
        t.map_at(&path.0, &mut |s| contract_vfs(s, rule).ok_or_else(no)).map_err(|e| match e {
            Error::Malformed(_) => no(),
            e => e,
        })
    }
}

pub fn step_vfs(t: &TermVfs, rule: Rule, path: &Path) -> Result<TermVfs> {
    Vfs.step(t, rule, path)
}

// ---------------------------------------------------------------------------
// Relation to the kernel of left normal forms

pub fn embed_lnf(t: &TermVfs) -> TermQ {
    match t {
        TermVfs::Ret(v) => TermQ::Ret(embed_lnf_v(v)),
        TermVfs::CutC(v, FormalContext::Bind(x, m)) => {
            TermQ::Cut(Box::new(TermQ::Ret(embed_lnf_v(v))), x.clone(), Box::new(embed_lnf(m)))
        }
        TermVfs::CutC(v, FormalContext::GApp(w, x, m)) => {
            let mut avoid = w.free_vars();
            avoid.extend(m.free_vars());
            avoid.insert(x.clone());
            let y = fresh_name("y", &avoid);
            let li = TermQ::LIntro(y.clone(), embed_lnf_v(w), x.clone(), Box::new(embed_lnf(m)));
            TermQ::Cut(Box::new(TermQ::Ret(embed_lnf_v(v))), y, Box::new(li))
        }
    }
}

pub fn embed_lnf_v(v: &ValueVfs) -> ValueQ {
    match v {
        ValueVfs::Var(x) => ValueQ::Var(x.clone()),
        ValueVfs::Lam(x, m) => ValueQ::Lam(x.clone(), Box::new(embed_lnf(m))),
    }
}

/// The expansion `y(W, x.M)` to `cut_v(y, (W, x.M))`.
pub fn expand_lintro(y: &Name, w: ValueVfs, x: &Name, m: TermVfs) -> TermVfs {
    TermVfs::CutC(ValueVfs::Var(y.clone()), FormalContext::GApp(w, x.clone(), Box::new(m)))
}

/// Reads a left normal form back into the sub-kernel, expanding bare left introductions.
pub fn from_lnf(t: &TermQ) -> Result<TermVfs> {
    Ok(match t {
        TermQ::Ret(v) => TermVfs::Ret(from_lnf_v(v)?),
        TermQ::LIntro(y, w, x, m) => expand_lintro(y, from_lnf_v(w)?, x, from_lnf(m)?),
        TermQ::Cut(m, y, n) => {
            let TermQ::Ret(v) = &**m else {
                return Err(Error::Malformed(format!("not a left normal form: {t}")));
            };
            let v = from_lnf_v(v)?;
            match &**n {
                TermQ::LIntro(h, w, x, p) if h == y && !w.free_vars().contains(y) && (x == y || !p.occurs_free(y)) => {
                    TermVfs::CutC(v, FormalContext::GApp(from_lnf_v(w)?, x.clone(), Box::new(from_lnf(p)?)))
                }
                _ => TermVfs::CutC(v, FormalContext::Bind(y.clone(), Box::new(from_lnf(n)?))),
            }
        }
    })
}

pub fn from_lnf_v(v: &ValueQ) -> Result<ValueVfs> {
    Ok(match v {
        ValueQ::Var(x) => ValueVfs::Var(x.clone()),
        ValueQ::Lam(x, m) => ValueVfs::Lam(x.clone(), Box::new(from_lnf(m)?)),
    })
}

// ---------------------------------------------------------------------------
// Typing

pub fn infer_vfs_v(u: &mut Unifier, v: &ValueVfs) -> Result<Ty> {
    match v {
        ValueVfs::Var(x) => u.lookup(x),
        ValueVfs::Lam(x, m) => {
            let a = u.meta();
            u.bind(x, a.clone());
            let b = infer_vfs(u, m);
            u.unbind();
            Ok(Ty::arrow(a, b?))
        }
    }
}

pub fn infer_vfs(u: &mut Unifier, t: &TermVfs) -> Result<Ty> {
    match t {
        TermVfs::Ret(v) => infer_vfs_v(u, v),
        TermVfs::CutC(v, c) => {
            let a = infer_vfs_v(u, v)?;
            infer_ctx(u, &a, c)
        }
    }
}

/// `Γ | hole ⇒ c : B`
pub fn infer_ctx(u: &mut Unifier, hole: &Ty, c: &FormalContext) -> Result<Ty> {
    match c {
        FormalContext::Bind(x, m) => {
            u.bind(x, hole.clone());
            let r = infer_vfs(u, m);
            u.unbind();
            r
        }
        FormalContext::GApp(w, x, m) => {
            let a = infer_vfs_v(u, w)?;
            let b = u.meta();
            u.unify(hole, &Ty::arrow(a, b.clone()))?;
            u.bind(x, b);
            let r = infer_vfs(u, m);
            u.unbind();
            r
        }
    }
}

pub fn typecheck_vfs(ctx: &TypingContext, t: &TermVfs) -> Result<SimpleType> {
    synthesize(ctx, t, |u| infer_vfs(u, t))
}

pub fn check_vfs(ctx: &TypingContext, t: &TermVfs, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_vfs(u, t))
}

pub fn check_vfs_v(ctx: &TypingContext, v: &ValueVfs, ty: &SimpleType) -> Result<()> {
    check_against(ctx, ty, |u| infer_vfs_v(u, v))
}

/// Type of a formal context given its hole type.
pub fn typecheck_ctx(ctx: &TypingContext, hole: &SimpleType, c: &FormalContext) -> Result<SimpleType> {
    synthesize(ctx, c, |u| infer_ctx(u, &Ty::from_simple(hole), c))
}

// ---------------------------------------------------------------------------
// Translation from the source calculus

struct Translator {
    avoid: NameSet,
}

impl Translator {
    fn fresh(&mut self, stem: &str) -> Name {
        let n = fresh_name(stem, &self.avoid);
        self.avoid.insert(n.clone());
        n
    }

    fn value(&mut self, v: &TermC) -> ValueVfs {
        match v {
            TermC::Var(x) => ValueVfs::Var(x.clone()),
            TermC::Lam(x, m) => ValueVfs::Lam(x.clone(), Box::new(self.term(m))),
            _ => unreachable!("value expected"),
        }
    }

    fn term(&mut self, m: &TermC) -> TermVfs {
        let x = self.fresh("z");
        self.colon(m, &x, TermVfs::Ret(ValueVfs::Var(x.clone())))
    }

    /// `(M ; x.N)`
    fn colon(&mut self, m: &TermC, x: &Name, n: TermVfs) -> TermVfs {
        match m {
            TermC::Var(_) | TermC::Lam(..) => {
                TermVfs::CutC(self.value(m), FormalContext::Bind(x.clone(), Box::new(n)))
            }
            TermC::App(p, q) if !p.is_value() => {
                let mv = self.fresh("m");
                let inner = self.colon(&TermC::App(Box::new(TermC::Var(mv.clone())), q.clone()), x, n);
                self.colon(p, &mv, inner)
            }
            TermC::App(p, q) if !q.is_value() => {
                let nv = self.fresh("n");
                let inner = self.colon(&TermC::App(p.clone(), Box::new(TermC::Var(nv.clone()))), x, n);
                self.colon(q, &nv, inner)
            }
            TermC::App(p, q) => {
                let w = self.value(q);
                TermVfs::CutC(self.value(p), FormalContext::GApp(w, x.clone(), Box::new(n)))
            }
            TermC::Let(y, bound, body) => {
                let mut clash = n.free_vars();
                clash.remove(x);
                let (y, body) = if clash.contains(y) {
                    let y2 = self.fresh(&y.base);
                    (y2.clone(), body.rename(y, &y2))
                } else {
                    (y.clone(), (**body).clone())
                };
                let inner = self.colon(&body, x, n);
                self.colon(bound, &y, inner)
            }
        }
    }
}

/// `M•`
pub fn vfs_translate(m: &TermC) -> TermVfs {
    Translator { avoid: m.all_names() }.term(m)
}

/// `V°`; the argument must be a value.
pub fn vfs_translate_value(v: &TermC) -> Result<ValueVfs> {
    if !v.is_value() {
        return Err(Error::Malformed(format!("not a value: {v}")));
    }
    Ok(Translator { avoid: v.all_names() }.value(v))
}

/// `(M ; x.N)` with `x.N` supplied by the caller.
pub fn vfs_translate_in(m: &TermC, x: &Name, n: &TermVfs) -> TermVfs {
    let mut avoid = m.all_names();
    n.names(&mut avoid);
    avoid.insert(x.clone());
    Translator { avoid }.colon(m, x, n.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_c::{app, lam, var};
    use crate::ljq::q::{step_lnf, Lnf};
    use crate::rewrite::find_witness;

    fn id_ret(z: &str) -> FormalContext {
        bind(z, vret(vvar(z)))
    }

    #[test]
    fn b_v_example() {
        let t = cutc(vlam("x", vret(vvar("x"))), garg(vvar("w"), "y", vret(vvar("y"))));
        let r = step_vfs(&t, Rule::BV, &Path::root()).unwrap();
        assert!(r.alpha_eq(&cutc(vvar("w"), bind("x", cutc(vvar("x"), id_ret("y"))))));
    }

    #[test]
    fn sigma_examples() {
        let t = cutc(vvar("w"), id_ret("y"));
        assert_eq!(step_vfs(&t, Rule::SigmaV, &Path::root()).unwrap(), vret(vvar("w")));
        let l = vlam("x", vret(vvar("q")));
        let t = cutc(l.clone(), id_ret("y"));
        assert_eq!(step_vfs(&t, Rule::SigmaV, &Path::root()).unwrap(), vret(l));
        assert!(step_vfs(&t, Rule::BV, &Path::root()).is_err());
    }

    #[test]
    fn colon_clauses() {
        let c = id_ret("z");
        assert_eq!(colon_vfs(&vret(vvar("v")), &c), cutc(vvar("v"), c.clone()));
        let m = cutc(vvar("v"), garg(vvar("w"), "x", vret(vvar("x"))));
        let r = colon_vfs(&m, &c);
        assert!(r.alpha_eq(&cutc(vvar("v"), garg(vvar("w"), "x", cutc(vvar("x"), c.clone())))));
    }

    #[test]
    fn colon_avoids_capture() {
        let m = cutc(vvar("v"), bind("x", vret(vvar("x"))));
        let c = bind("z", vret(vvar("x")));
        let r = colon_vfs(&m, &c);
        assert!(r.free_vars().contains(&Name::parse("x")));
    }

    #[test]
    fn translation_examples() {
        assert!(vfs_translate(&var("x")).alpha_eq(&cutc(vvar("x"), id_ret("z"))));
        assert!(vfs_translate(&app(var("v"), var("w"))).alpha_eq(&cutc(vvar("v"), garg(vvar("w"), "x", vret(vvar("x"))))));
        let m = app(lam("x", var("x")), var("y"));
        let want = cutc(vlam("x", cutc(vvar("x"), id_ret("z"))), garg(vvar("y"), "w", vret(vvar("w"))));
        assert!(vfs_translate(&m).alpha_eq(&want));
    }

    #[test]
    fn translation_let_renames_binder() {
        // (let y = a b in y) y: the outer argument must not be captured
        let m = app(crate::lambda_c::let_in("y", app(var("a"), var("b")), var("y")), var("y"));
        let t = vfs_translate(&m);
        assert!(t.free_vars().contains(&Name::parse("y")));
    }

    #[test]
    fn typing_rules() {
        let a = SimpleType::atom("a");
        let b = SimpleType::atom("b");
        let g = TypingContext::new().with(Name::parse("f"), SimpleType::arrow(a.clone(), b.clone())).with(Name::parse("v"), a.clone());
        let t = cutc(vvar("f"), garg(vvar("v"), "x", vret(vvar("x"))));
        assert_eq!(typecheck_vfs(&g, &t).unwrap(), b);
        let c = garg(vvar("v"), "x", vret(vvar("x")));
        assert_eq!(typecheck_ctx(&g, &SimpleType::arrow(a.clone(), b.clone()), &c).unwrap(), b);
        assert!(typecheck_ctx(&g, &a, &c).is_err());
        assert_eq!(typecheck_ctx(&g, &a, &id_ret("z")).unwrap(), a);
    }

    #[test]
    fn embedding_simulates_steps() {
        let t = cutc(vlam("x", vret(vvar("x"))), garg(vvar("w"), "y", vret(vvar("y"))));
        let r = step_vfs(&t, Rule::BV, &Path::root()).unwrap();
        let e = step_lnf(&embed_lnf(&t), Rule::BV, &Path::root()).unwrap();
        assert!(e.alpha_eq(&embed_lnf(&r)));
        assert!(from_lnf(&embed_lnf(&t)).unwrap().alpha_eq(&t));
    }

    #[test]
    fn expansion_reduces_to_left_intro() {
        let y = Name::parse("y");
        let x = Name::parse("x");
        let e = expand_lintro(&y, vvar("w"), &x, vret(vvar("x")));
        let li = TermQ::LIntro(y, ValueQ::Var(Name::parse("w")), x, Box::new(TermQ::Ret(ValueQ::Var(Name::parse("x")))));
        assert!(find_witness(&Lnf, &embed_lnf(&e), &li, None, 10).is_some());
    }

    #[test]
    fn identity_lemma() {
        let m = cutc(vvar("v"), garg(vvar("w"), "x", vret(vvar("x"))));
        let c = colon_vfs(&m, &id_ret("z"));
        assert!(find_witness(&Vfs, &c, &m, None, 100).is_some());
    }
}
