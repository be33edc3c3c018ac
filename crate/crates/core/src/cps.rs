//! Continuation-passing targets: the original one with a continuation variable, the
//! modified one with a covariable, and the small one with fused substitution.
//! Also the translations into them and the negative translation from value-filling style.

use std::fmt;

use crate::error::{Error, Result};
use crate::lambda_c::TermC;
use crate::name::{fresh_like, fresh_name, Name, NameSet};
use crate::rewrite::{sort_redexes, Calculus, Path, Rule, Scope, Syntax, System, Tree};
use crate::types::{SimpleType, Ty, TypingContext, Unifier};
use crate::vfs::{FormalContext, TermVfs, ValueVfs};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CpsMode {
    /// Continuations may be the bare variable `k`; no `kV` commands.
    Rcps,
    /// `k` only occurs as `kV`.
    Cps,
    /// As `Cps`, without `KV` commands.
    Small,
}

impl CpsMode {
    pub fn calculus(self) -> Calculus {
        match self {
            CpsMode::Rcps => Calculus::Rcps,
            CpsMode::Cps => Calculus::Cps,
            CpsMode::Small => Calculus::SmallCps,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ValueCps {
    Var(Name),
    Lam(Name, Box<TermCps>),
}

/// `λk. M`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermCps(pub Box<Command>);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Command {
    /// `k V`
    KApp(ValueCps),
    /// `K V`
    AppK(Cont, ValueCps),
    /// `V W K`
    AppVWK(ValueCps, ValueCps, Cont),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Cont {
    KLam(Name, Box<Command>),
    KVar,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ContextCps {
    /// `K[_]`
    KHole(Cont),
    /// `[_] W K`
    HoleWK(ValueCps, Cont),
}

pub fn cvar(x: &str) -> ValueCps {
    ValueCps::Var(Name::parse(x))
}

pub fn clam(x: &str, m: Command) -> ValueCps {
    ValueCps::Lam(Name::parse(x), Box::new(TermCps(Box::new(m))))
}

pub fn klam(x: &str, m: Command) -> Cont {
    Cont::KLam(Name::parse(x), Box::new(m))
}

pub fn kret(v: ValueCps) -> Command {
    Command::KApp(v)
}

pub fn pass(k: Cont, v: ValueCps) -> Command {
    Command::AppK(k, v)
}

pub fn call(v: ValueCps, w: ValueCps, k: Cont) -> Command {
    Command::AppVWK(v, w, k)
}

pub fn lamk(m: Command) -> TermCps {
    TermCps(Box::new(m))
}

// ---------------------------------------------------------------------------
// Free variables, names, substitution

impl ValueCps {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            ValueCps::Var(x) => {
                if !bound.contains(x) {
                    acc.insert(x.clone());
                }
            }
            ValueCps::Lam(x, p) => {
                bound.push(x.clone());
                p.0.fv_into(bound, acc);
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
            ValueCps::Var(x) => {
                acc.insert(x.clone());
            }
            ValueCps::Lam(x, p) => {
                acc.insert(x.clone());
                p.0.names(acc);
            }
        }
    }

    pub fn subst(&self, y: &Name, v: &ValueCps) -> ValueCps {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &ValueCps, fv: &NameSet) -> ValueCps {
        match self {
            ValueCps::Var(x) if x == y => v.clone(),
            ValueCps::Var(_) => self.clone(),
            ValueCps::Lam(x, p) => {
                let (x, m) = binder_subst(x, &p.0, y, v, fv);
                ValueCps::Lam(x, Box::new(TermCps(Box::new(m))))
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            ValueCps::Var(x) => sc.var(x),
            ValueCps::Lam(x, p) => Tree::node("lam", 1, vec![sc.under(x, |sc| p.tree_in(sc))]),
        }
    }
}

impl TermCps {
    pub fn free_vars(&self) -> NameSet {
        self.0.free_vars()
    }

    pub fn body(&self) -> &Command {
        &self.0
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        Tree::node("lamk", 1, vec![self.0.tree_in(sc)])
    }
}

impl Command {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        match self {
            Command::KApp(v) => v.fv_into(bound, acc),
            Command::AppK(k, v) => {
                k.fv_into(bound, acc);
                v.fv_into(bound, acc);
            }
            Command::AppVWK(v, w, k) => {
                v.fv_into(bound, acc);
                w.fv_into(bound, acc);
                k.fv_into(bound, acc);
            }
        }
    }

    /// Free ordinary variables; the covariable is not included.
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
            Command::KApp(v) => v.names(acc),
            Command::AppK(k, v) => {
                k.names(acc);
                v.names(acc);
            }
            Command::AppVWK(v, w, k) => {
                v.names(acc);
                w.names(acc);
                k.names(acc);
            }
        }
    }

    pub fn all_names(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.names(&mut acc);
        acc
    }

    pub fn subst(&self, y: &Name, v: &ValueCps) -> Command {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &ValueCps, fv: &NameSet) -> Command {
        match self {
            Command::KApp(w) => Command::KApp(w.subst_with(y, v, fv)),
            Command::AppK(k, w) => Command::AppK(k.subst_with(y, v, fv), w.subst_with(y, v, fv)),
            Command::AppVWK(a, b, k) => {
                Command::AppVWK(a.subst_with(y, v, fv), b.subst_with(y, v, fv), k.subst_with(y, v, fv))
            }
        }
    }

    pub fn rename(&self, from: &Name, to: &Name) -> Command {
        self.subst(from, &ValueCps::Var(to.clone()))
    }

    /// Ordinary substitution `[K/k]self`.
    pub fn subst_k(&self, kk: &Cont) -> Command {
        match self {
            Command::KApp(v) => match kk {
                Cont::KVar => self.clone(),
                _ => Command::AppK(kk.clone(), v.clone()),
            },
            Command::AppK(k, v) => Command::AppK(k.subst_k(kk), v.clone()),
            Command::AppVWK(v, w, k) => Command::AppVWK(v.clone(), w.clone(), k.subst_k(kk)),
        }
    }

    /// `[λx.N/k]self` with the critical clause `[λx.N/k](kV) = [V/x]N`.
    pub fn subst_k_fused(&self, kk: &Cont) -> Command {
        match (self, kk) {
            (Command::KApp(v), Cont::KLam(x, n)) => n.subst(x, v),
            (Command::AppK(k, v), _) => Command::AppK(k.subst_k_fused(kk), v.clone()),
            (Command::AppVWK(v, w, k), _) => Command::AppVWK(v.clone(), w.clone(), k.subst_k_fused(kk)),
            _ => self.subst_k(kk),
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            Command::KApp(v) => Tree::node("kret", 1, vec![v.tree_in(sc)]),
            Command::AppK(k, v) => {
                let tk = k.tree_in(sc);
                Tree::node("pass", 0, vec![tk, v.tree_in(sc)])
            }
            Command::AppVWK(v, w, k) => {
                let tv = v.tree_in(sc);
                let tw = w.tree_in(sc);
                Tree::node("call", 0, vec![tv, tw, k.tree_in(sc)])
            }
        }
    }
}

impl Cont {
    fn fv_into(&self, bound: &mut Vec<Name>, acc: &mut NameSet) {
        if let Cont::KLam(x, m) = self {
            bound.push(x.clone());
            m.fv_into(bound, acc);
            bound.pop();
        }
    }

    pub fn free_vars(&self) -> NameSet {
        let mut acc = NameSet::new();
        self.fv_into(&mut Vec::new(), &mut acc);
        acc
    }

    pub fn names(&self, acc: &mut NameSet) {
        if let Cont::KLam(x, m) = self {
            acc.insert(x.clone());
            m.names(acc);
        }
    }

    pub fn subst(&self, y: &Name, v: &ValueCps) -> Cont {
        self.subst_with(y, v, &v.free_vars())
    }

    fn subst_with(&self, y: &Name, v: &ValueCps, fv: &NameSet) -> Cont {
        match self {
            Cont::KVar => Cont::KVar,
            Cont::KLam(x, m) => {
                let (x, m) = binder_subst(x, m, y, v, fv);
                Cont::KLam(x, Box::new(m))
            }
        }
    }

    pub fn subst_k(&self, kk: &Cont) -> Cont {
        match self {
            Cont::KVar => kk.clone(),
            Cont::KLam(x, m) => {
                let (x, m) = avoid_binder(x, m, &kk.free_vars());
                Cont::KLam(x, Box::new(m.subst_k(kk)))
            }
        }
    }

    fn subst_k_fused(&self, kk: &Cont) -> Cont {
        match self {
            Cont::KVar => kk.clone(),
            Cont::KLam(x, m) => {
                let (x, m) = avoid_binder(x, m, &kk.free_vars());
                Cont::KLam(x, Box::new(m.subst_k_fused(kk)))
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            Cont::KVar => Tree::node("k", 0, vec![]),
            Cont::KLam(x, m) => Tree::node("klam", 1, vec![sc.under(x, |sc| m.tree_in(sc))]),
        }
    }
}

impl ContextCps {
    pub fn free_vars(&self) -> NameSet {
        match self {
            ContextCps::KHole(k) => k.free_vars(),
            ContextCps::HoleWK(w, k) => {
                let mut s = w.free_vars();
                s.extend(k.free_vars());
                s
            }
        }
    }

    fn tree_in(&self, sc: &mut Scope) -> Tree {
        match self {
            ContextCps::KHole(k) => Tree::node("khole", 0, vec![k.tree_in(sc)]),
            ContextCps::HoleWK(w, k) => {
                let tw = w.tree_in(sc);
                Tree::node("holewk", 0, vec![tw, k.tree_in(sc)])
            }
        }
    }
}

fn binder_subst(x: &Name, body: &Command, y: &Name, v: &ValueCps, fv: &NameSet) -> (Name, Command) {
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

fn avoid_binder(x: &Name, body: &Command, clash: &NameSet) -> (Name, Command) {
    if !clash.contains(x) {
        return (x.clone(), body.clone());
    }
    let mut avoid = body.all_names();
    avoid.extend(clash.iter().cloned());
    let x2 = fresh_like(x, &avoid);
    (x2.clone(), body.rename(x, &x2))
}

impl Syntax for Command {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for TermCps {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for ValueCps {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for Cont {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

impl Syntax for ContextCps {
    fn tree(&self) -> Tree {
        self.tree_in(&mut Scope::new())
    }
}

// ---------------------------------------------------------------------------
// Printing

struct AtomV<'a>(&'a ValueCps);

impl fmt::Display for AtomV<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ValueCps::Var(x) => write!(f, "{x}"),
            v => write!(f, "({v})"),
        }
    }
}

struct AtomK<'a>(&'a Cont);

impl fmt::Display for AtomK<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Cont::KVar => f.write_str("k"),
            k => write!(f, "({k})"),
        }
    }
}

impl fmt::Display for ValueCps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueCps::Var(x) => write!(f, "{x}"),
            ValueCps::Lam(x, p) => write!(f, "\\{x}. {p}"),
        }
    }
}

impl fmt::Display for TermCps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\\k. {}", self.0)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::KApp(v) => write!(f, "k @ {}", AtomV(v)),
            Command::AppK(k, v) => write!(f, "{} @ {}", AtomK(k), AtomV(v)),
            Command::AppVWK(v, w, k) => write!(f, "{} {} {}", AtomV(v), AtomV(w), AtomK(k)),
        }
    }
}

impl fmt::Display for Cont {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cont::KVar => f.write_str("k"),
            Cont::KLam(x, m) => write!(f, "\\{x}. {m}"),
        }
    }
}

impl fmt::Display for ContextCps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextCps::KHole(k) => write!(f, "{} @ []", AtomK(k)),
            ContextCps::HoleWK(w, k) => write!(f, "[] {} {}", AtomV(w), AtomK(k)),
        }
    }
}

// ---------------------------------------------------------------------------
// Contexts and structural substitution

pub fn fill_cps(c: &ContextCps, v: &ValueCps) -> Command {
    match c {
        ContextCps::KHole(k) => Command::AppK(k.clone(), v.clone()),
        ContextCps::HoleWK(w, k) => Command::AppVWK(v.clone(), w.clone(), k.clone()),
    }
}

/// `K_C = λz. C[z]`
pub fn context_cont(c: &ContextCps) -> Cont {
    let mut avoid = c.free_vars();
    match c {
        ContextCps::KHole(k) | ContextCps::HoleWK(_, k) => k.names(&mut avoid),
    }
    let z = fresh_name("z", &avoid);
    Cont::KLam(z.clone(), Box::new(fill_cps(c, &ValueCps::Var(z))))
}

/// `[C/k]M` with the critical clause `[C/k](kV) = C[V]`.
pub fn struct_subst(c: &ContextCps, m: &Command) -> Command {
    match m {
        Command::KApp(v) => fill_cps(c, v),
        Command::AppK(k, v) => Command::AppK(struct_subst_k(c, k), v.clone()),
        Command::AppVWK(v, w, k) => Command::AppVWK(v.clone(), w.clone(), struct_subst_k(c, k)),
    }
}

fn struct_subst_k(c: &ContextCps, k: &Cont) -> Cont {
    match k {
        Cont::KVar => context_cont(c),
        Cont::KLam(x, m) => {
            let (x, m) = avoid_binder(x, m, &c.free_vars());
            Cont::KLam(x, Box::new(struct_subst(c, &m)))
        }
    }
}

/// Replaces each bare `k` by `λx. k x`, moving from the original target to the modified one.
pub fn eta_expand_k(m: &Command) -> Command {
    fn val(v: &ValueCps) -> ValueCps {
        match v {
            ValueCps::Var(_) => v.clone(),
            ValueCps::Lam(x, p) => ValueCps::Lam(x.clone(), Box::new(TermCps(Box::new(eta_expand_k(&p.0))))),
        }
    }
    fn cont(k: &Cont) -> Cont {
        match k {
            Cont::KVar => Cont::KLam(Name::with_uid("x", 0), Box::new(Command::KApp(ValueCps::Var(Name::with_uid("x", 0))))),
            Cont::KLam(x, m) => Cont::KLam(x.clone(), Box::new(eta_expand_k(m))),
        }
    }
    match m {
        Command::KApp(v) => Command::KApp(val(v)),
        Command::AppK(k, v) => Command::AppK(cont(k), val(v)),
        Command::AppVWK(v, w, k) => Command::AppVWK(val(v), val(w), cont(k)),
    }
}

// ---------------------------------------------------------------------------
// Linearity and mode audit

/// Free occurrences of `k` in a command.
pub fn k_occurrences(m: &Command) -> usize {
    match m {
        Command::KApp(_) => 1,
        Command::AppK(k, _) | Command::AppVWK(_, _, k) => k_occurrences_k(k),
    }
}

fn k_occurrences_k(k: &Cont) -> usize {
    match k {
        Cont::KVar => 1,
        Cont::KLam(_, m) => k_occurrences(m),
    }
}

/// Checks that every command and continuation has exactly one free `k`, and that
/// only constructors of `mode` are used.
pub fn audit(m: &Command, mode: CpsMode) -> Result<()> {
    fn val(v: &ValueCps, mode: CpsMode) -> Result<()> {
        match v {
            ValueCps::Var(x) if x.is_covar() => Err(Error::LinearityViolation("k used as a value".into())),
            ValueCps::Var(_) => Ok(()),
            ValueCps::Lam(x, p) => {
                if x.is_covar() {
                    return Err(Error::ModeViolation("k bound as a value variable".into()));
                }
                audit(&p.0, mode)
            }
        }
    }
    fn cont(k: &Cont, mode: CpsMode) -> Result<()> {
        match k {
            Cont::KVar if mode != CpsMode::Rcps => Err(Error::ModeViolation(format!("bare k as a continuation in {}", mode.calculus()))),
            Cont::KVar => Ok(()),
            Cont::KLam(x, m) => {
                if x.is_covar() {
                    return Err(Error::ModeViolation("k bound as a value variable".into()));
                }
                audit(m, mode)
            }
        }
    }
    let n = k_occurrences(m);
    if n != 1 {
        return Err(Error::LinearityViolation(format!("{n} free occurrences of k in {m}")));
    }
    match m {
        Command::KApp(_) if mode == CpsMode::Rcps => Err(Error::ModeViolation(format!("k V in {}", mode.calculus()))),
        Command::AppK(..) if mode == CpsMode::Small => Err(Error::ModeViolation(format!("K V in {}", mode.calculus()))),
        Command::KApp(v) => val(v, mode),
        Command::AppK(k, v) => {
            cont(k, mode)?;
            val(v, mode)
        }
        Command::AppVWK(v, w, k) => {
            val(v, mode)?;
            val(w, mode)?;
            cont(k, mode)
        }
    }
}

pub fn audit_term(p: &TermCps, mode: CpsMode) -> Result<()> {
    audit(&p.0, mode)
}

// ---------------------------------------------------------------------------
// Positions and rules

/// Any node a path can reach.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NodeCps {
    Cmd(Command),
    Cont(Cont),
    Val(ValueCps),
    Term(TermCps),
}

fn children(n: &NodeCps) -> Vec<NodeCps> {
    match n {
        NodeCps::Cmd(Command::KApp(v)) => vec![NodeCps::Val(v.clone())],
        NodeCps::Cmd(Command::AppK(k, v)) => vec![NodeCps::Cont(k.clone()), NodeCps::Val(v.clone())],
        NodeCps::Cmd(Command::AppVWK(v, w, k)) => {
            vec![NodeCps::Val(v.clone()), NodeCps::Val(w.clone()), NodeCps::Cont(k.clone())]
        }
        NodeCps::Cont(Cont::KVar) | NodeCps::Val(ValueCps::Var(_)) => vec![],
        NodeCps::Cont(Cont::KLam(_, m)) => vec![NodeCps::Cmd((**m).clone())],
        NodeCps::Val(ValueCps::Lam(_, p)) => vec![NodeCps::Term((**p).clone())],
        NodeCps::Term(p) => vec![NodeCps::Cmd((*p.0).clone())],
    }
}

fn rebuild(n: &NodeCps, i: usize, c: NodeCps) -> Result<NodeCps> {
    let bad = || Error::Malformed("path does not match the node sort".into());
    Ok(match (n, i, c) {
        (NodeCps::Cmd(Command::KApp(_)), 0, NodeCps::Val(v)) => NodeCps::Cmd(Command::KApp(v)),
        (NodeCps::Cmd(Command::AppK(_, v)), 0, NodeCps::Cont(k)) => NodeCps::Cmd(Command::AppK(k, v.clone())),
        (NodeCps::Cmd(Command::AppK(k, _)), 1, NodeCps::Val(v)) => NodeCps::Cmd(Command::AppK(k.clone(), v)),
        (NodeCps::Cmd(Command::AppVWK(_, w, k)), 0, NodeCps::Val(v)) => {
            NodeCps::Cmd(Command::AppVWK(v, w.clone(), k.clone()))
        }
        (NodeCps::Cmd(Command::AppVWK(v, _, k)), 1, NodeCps::Val(w)) => {
            NodeCps::Cmd(Command::AppVWK(v.clone(), w, k.clone()))
        }
        (NodeCps::Cmd(Command::AppVWK(v, w, _)), 2, NodeCps::Cont(k)) => {
            NodeCps::Cmd(Command::AppVWK(v.clone(), w.clone(), k))
        }
        (NodeCps::Cont(Cont::KLam(x, _)), 0, NodeCps::Cmd(m)) => NodeCps::Cont(Cont::KLam(x.clone(), Box::new(m))),
        (NodeCps::Val(ValueCps::Lam(x, _)), 0, NodeCps::Term(p)) => NodeCps::Val(ValueCps::Lam(x.clone(), Box::new(p))),
        (NodeCps::Term(_), 0, NodeCps::Cmd(m)) => NodeCps::Term(TermCps(Box::new(m))),
        _ => return Err(bad()),
    })
}

fn map_at(n: &NodeCps, path: &[usize], f: &mut dyn FnMut(&NodeCps) -> Result<NodeCps>) -> Result<NodeCps> {
    let Some((&i, rest)) = path.split_first() else { return f(n) };
    let kids = children(n);
    let kid = kids.get(i).ok_or_else(|| Error::Malformed(format!("path index {i} out of range")))?;
    rebuild(n, i, map_at(kid, rest, f)?)
}

fn nodes(n: &NodeCps, path: &mut Vec<usize>, out: &mut Vec<(Path, NodeCps)>) {
    out.push((Path(path.clone()), n.clone()));
    for (i, c) in children(n).iter().enumerate() {
        path.push(i);
        nodes(c, path, out);
        path.pop();
    }
}

pub fn contract_cps(n: &NodeCps, rule: Rule, mode: CpsMode) -> Option<NodeCps> {
    match (rule, n) {
        (Rule::SigmaV, NodeCps::Cmd(Command::AppK(Cont::KLam(x, m), v))) => Some(NodeCps::Cmd(m.subst(x, v))),
        (Rule::BetaV, NodeCps::Cmd(Command::AppVWK(ValueCps::Lam(x, p), w, k))) => {
            let body = p.0.subst(x, w);
            Some(NodeCps::Cmd(match mode {
                CpsMode::Small => body.subst_k_fused(k),
                _ => body.subst_k(k),
            }))
        }
        (Rule::BV, NodeCps::Cmd(Command::AppVWK(ValueCps::Lam(x, p), w, k))) => {
            let (x, body) = avoid_binder(x, &p.0, &k.free_vars());
            Some(NodeCps::Cmd(Command::AppK(Cont::KLam(x, Box::new(body.subst_k(k))), w.clone())))
        }
        (Rule::EtaK, NodeCps::Cont(Cont::KLam(x, m))) => match &**m {
            Command::AppK(k, ValueCps::Var(y)) if y == x && !k.free_vars().contains(x) => Some(NodeCps::Cont(k.clone())),
            _ => None,
        },
        _ => None,
    }
}

/// A continuation-passing target; the root of a reduction is a command.
#[derive(Clone, Debug)]
pub struct Cps {
    pub mode: CpsMode,
    pub rules: Vec<Rule>,
}

impl Cps {
    pub fn rules_for(mode: CpsMode) -> Vec<Rule> {
        match mode {
            CpsMode::Rcps => vec![Rule::SigmaV, Rule::BetaV, Rule::EtaK],
            CpsMode::Cps => vec![Rule::SigmaV, Rule::BV],
            CpsMode::Small => vec![Rule::BetaV],
        }
    }

    pub fn new(mode: CpsMode) -> Cps {
        Cps { mode, rules: Cps::rules_for(mode) }
    }

    pub fn rcps() -> Cps {
        Cps::new(CpsMode::Rcps)
    }

    pub fn cps() -> Cps {
        Cps::new(CpsMode::Cps)
    }

    pub fn small() -> Cps {
        Cps::new(CpsMode::Small)
    }

    pub fn with_rules(mut self, rules: &[Rule]) -> Cps {
        self.rules = rules.to_vec();
        self
    }
}

impl System for Cps {
    type T = Command;

    fn calculus(&self) -> Calculus {
        self.mode.calculus()
    }

    fn rules(&self) -> Vec<Rule> {
        self.rules.clone()
    }

    fn redexes(&self, t: &Command) -> Vec<(Rule, Path)> {
        let mut ns = Vec::new();
        nodes(&NodeCps::Cmd(t.clone()), &mut Vec::new(), &mut ns);
        let mut found = Vec::new();
        for (p, n) in ns {
            for &r in &self.rules {
                if contract_cps(&n, r, self.mode).is_some() {
                    found.push((r, p.clone()));
                }
            }
        }
        sort_redexes(&self.rules, found)
    }

    fn step(&self, t: &Command, rule: Rule, path: &Path) -> Result<Command> {
        if !self.rules.contains(&rule) {
            return Err(Error::RuleDisabled(rule.to_string()));
        }
        let no = || Error::NoRedex { rule: rule.to_string(), path: path.to_string() };
        let r = map_at(&NodeCps::Cmd(t.clone()), &path.0, &mut |n| contract_cps(n, rule, self.mode).ok_or_else(no));
        match r {
            Ok(NodeCps::Cmd(m)) => Ok(m),
            Ok(_) | Err(Error::Malformed(_)) => Err(no()),
            Err(e) => Err(e),
        }
    }
}

/// One step at `path`; the contractum is audited for linearity and mode.
pub fn step_cps(t: &Command, rule: Rule, path: &Path, mode: CpsMode) -> Result<Command> {
    if !Cps::rules_for(mode).contains(&rule) {
        return Err(Error::ModeViolation(format!("rule {rule} is not a rule of {}", mode.calculus())));
    }
    let r = Cps::new(mode).step(t, rule, path)?;
    audit(&r, mode)?;
    Ok(r)
}

// ---------------------------------------------------------------------------
// Typing

struct Typer {
    u: Unifier,
    class_a: Vec<Ty>,
    class_b: Vec<Ty>,
}

impl Typer {
    fn new(ctx: &TypingContext) -> Result<Typer> {
        for (x, t) in ctx.iter() {
            if x.is_covar() {
                continue;
            }
            if !t.in_class_a() {
                return Err(Error::ClassViolation(format!("{x} : {t}")));
            }
        }
        Ok(Typer { u: Unifier::new(ctx), class_a: Vec::new(), class_b: Vec::new() })
    }

    fn value(&mut self, v: &ValueCps) -> Result<Ty> {
        match v {
            ValueCps::Var(x) => {
                let t = self.u.lookup(x)?;
                self.class_a.push(t.clone());
                Ok(t)
            }
            ValueCps::Lam(x, p) => {
                let a = self.u.meta();
                self.class_a.push(a.clone());
                self.u.bind(x, a.clone());
                let b = self.term(p);
                self.u.unbind();
                Ok(Ty::arrow(a, b?))
            }
        }
    }

    fn term(&mut self, p: &TermCps) -> Result<Ty> {
        let a = self.u.meta();
        self.class_a.push(a.clone());
        self.u.bind(&Name::covar(), Ty::neg(a.clone()));
        let r = self.command(&p.0);
        self.u.unbind();
        r?;
        let t = Ty::neg(Ty::neg(a));
        self.class_b.push(t.clone());
        Ok(t)
    }

    fn command(&mut self, m: &Command) -> Result<()> {
        match m {
            Command::KApp(v) => {
                let k = self.u.lookup(&Name::covar())?;
                let a = self.value(v)?;
                self.u.unify(&k, &Ty::neg(a))
            }
            Command::AppK(k, v) => {
                let tk = self.cont(k)?;
                let a = self.value(v)?;
                self.u.unify(&tk, &Ty::neg(a))
            }
            Command::AppVWK(v, w, k) => {
                let tv = self.value(v)?;
                let tw = self.value(w)?;
                let a2 = self.u.meta();
                self.class_a.push(a2.clone());
                self.u.unify(&tv, &Ty::arrow(tw, Ty::neg(Ty::neg(a2.clone()))))?;
                let tk = self.cont(k)?;
                self.u.unify(&tk, &Ty::neg(a2))
            }
        }
    }

    fn cont(&mut self, k: &Cont) -> Result<Ty> {
        match k {
            Cont::KVar => self.u.lookup(&Name::covar()),
            Cont::KLam(x, m) => {
                let a = self.u.meta();
                self.class_a.push(a.clone());
                self.u.bind(x, a.clone());
                let r = self.command(m);
                self.u.unbind();
                r?;
                Ok(Ty::neg(a))
            }
        }
    }

    fn finish(&self) -> Result<()> {
        for t in &self.class_a {
            if !self.u.class_a(t) {
                return Err(Error::ClassViolation(self.u.show(t)));
            }
        }
        for t in &self.class_b {
            if !self.u.class_b(t) {
                return Err(Error::ClassViolation(self.u.show(t)));
            }
        }
        Ok(())
    }

    fn ground(&self, t: &Ty, what: &dyn fmt::Display) -> Result<SimpleType> {
        self.u.ground(t).ok_or_else(|| Error::CannotSynthesize(what.to_string()))
    }
}

fn with_k(ctx: &TypingContext, answer: &SimpleType) -> Result<Typer> {
    if !answer.in_class_a() {
        return Err(Error::ClassViolation(answer.to_string()));
    }
    let mut t = Typer::new(ctx)?;
    t.u.bind(&Name::covar(), Ty::from_simple(&SimpleType::neg(answer.clone())));
    Ok(t)
}

/// `Γ ⊢ P : ¬¬A`
pub fn typecheck_cps_term(ctx: &TypingContext, p: &TermCps) -> Result<SimpleType> {
    let mut t = Typer::new(ctx)?;
    let ty = t.term(p)?;
    t.finish()?;
    t.ground(&ty, p)
}

pub fn typecheck_cps_value(ctx: &TypingContext, v: &ValueCps) -> Result<SimpleType> {
    let mut t = Typer::new(ctx)?;
    let ty = t.value(v)?;
    t.finish()?;
    t.ground(&ty, v)
}

pub fn check_cps_value(ctx: &TypingContext, v: &ValueCps, ty: &SimpleType) -> Result<()> {
    let mut t = Typer::new(ctx)?;
    let got = t.value(v)?;
    t.u.unify(&Ty::from_simple(ty), &got)?;
    t.finish()
}

pub fn check_cps_term(ctx: &TypingContext, p: &TermCps, ty: &SimpleType) -> Result<()> {
    let mut t = Typer::new(ctx)?;
    let got = t.term(p)?;
    t.u.unify(&Ty::from_simple(ty), &got)?;
    t.finish()
}

/// `k:¬answer, Γ ⊢ M : ⊥`
pub fn check_cps_command(ctx: &TypingContext, answer: &SimpleType, m: &Command) -> Result<()> {
    let mut t = with_k(ctx, answer)?;
    t.command(m)?;
    t.finish()
}

/// `k:¬answer, Γ ⊢ K : ¬A'`, returning `¬A'`.
pub fn typecheck_cps_cont(ctx: &TypingContext, answer: &SimpleType, k: &Cont) -> Result<SimpleType> {
    let mut t = with_k(ctx, answer)?;
    let ty = t.cont(k)?;
    t.finish()?;
    t.ground(&ty, k)
}

/// `k:¬answer, Γ | hole ⊢ C : ⊥`
pub fn check_cps_context(ctx: &TypingContext, answer: &SimpleType, hole: &SimpleType, c: &ContextCps) -> Result<()> {
    let mut t = with_k(ctx, answer)?;
    let h = Ty::from_simple(hole);
    match c {
        ContextCps::KHole(k) => {
            let tk = t.cont(k)?;
            t.u.unify(&tk, &Ty::neg(h))?;
        }
        ContextCps::HoleWK(w, k) => {
            let tw = t.value(w)?;
            let a2 = t.u.meta();
            t.class_a.push(a2.clone());
            t.u.unify(&h, &Ty::arrow(tw, Ty::neg(Ty::neg(a2.clone()))))?;
            let tk = t.cont(k)?;
            t.u.unify(&tk, &Ty::neg(a2))?;
        }
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// The CPS-translation

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CpsVariant {
    /// `M* = (M : k)`, into the original target.
    Underlined,
    /// `M* = (M : λx.kx)`.
    Modified,
    /// As `Modified`, with `(V : λx.M) = [V†/x]M`.
    Small,
}

impl CpsVariant {
    pub fn mode(self) -> CpsMode {
        match self {
            CpsVariant::Underlined => CpsMode::Rcps,
            CpsVariant::Modified => CpsMode::Cps,
            CpsVariant::Small => CpsMode::Small,
        }
    }
}

struct CpsTranslator {
    avoid: NameSet,
    variant: CpsVariant,
}

impl CpsTranslator {
    fn new(m: &TermC, variant: CpsVariant) -> CpsTranslator {
        CpsTranslator { avoid: m.all_names(), variant }
    }

    fn fresh(&mut self, stem: &str) -> Name {
        let n = fresh_name(stem, &self.avoid);
        self.avoid.insert(n.clone());
        n
    }

    fn value(&mut self, v: &TermC) -> ValueCps {
        match v {
            TermC::Var(x) => ValueCps::Var(x.clone()),
            TermC::Lam(x, m) => ValueCps::Lam(x.clone(), Box::new(self.term(m))),
            _ => unreachable!("value expected"),
        }
    }

    fn term(&mut self, m: &TermC) -> TermCps {
        TermCps(Box::new(self.command(m)))
    }

    fn command(&mut self, m: &TermC) -> Command {
        let k = match self.variant {
            CpsVariant::Underlined => Cont::KVar,
            _ => {
                let x = self.fresh("x");
                Cont::KLam(x.clone(), Box::new(Command::KApp(ValueCps::Var(x))))
            }
        };
        self.colon(m, k)
    }

    /// `(M : K)`
    fn colon(&mut self, m: &TermC, k: Cont) -> Command {
        match m {
            TermC::Var(_) | TermC::Lam(..) => {
                let v = self.value(m);
                match (self.variant, k) {
                    (CpsVariant::Small, Cont::KLam(x, n)) => n.subst(&x, &v),
                    (_, k) => Command::AppK(k, v),
                }
            }
            TermC::App(p, q) if !p.is_value() => {
                let mv = self.fresh("m");
                let inner = self.colon(&TermC::App(Box::new(TermC::Var(mv.clone())), q.clone()), k);
                self.colon(p, Cont::KLam(mv, Box::new(inner)))
            }
            TermC::App(p, q) if !q.is_value() => {
                let nv = self.fresh("n");
                let inner = self.colon(&TermC::App(p.clone(), Box::new(TermC::Var(nv.clone()))), k);
                self.colon(q, Cont::KLam(nv, Box::new(inner)))
            }
            TermC::App(p, q) => {
                let v = self.value(p);
                let w = self.value(q);
                Command::AppVWK(v, w, k)
            }
            TermC::Let(y, bound, body) => {
                let (y, body) = if k.free_vars().contains(y) {
                    let y2 = self.fresh(&y.base);
                    (y2.clone(), body.rename(y, &y2))
                } else {
                    (y.clone(), (**body).clone())
                };
                let inner = self.colon(&body, k);
                self.colon(bound, Cont::KLam(y, Box::new(inner)))
            }
        }
    }
}

/// `M̄ = λk. M*`
pub fn cps_translate(m: &TermC, variant: CpsVariant) -> TermCps {
    CpsTranslator::new(m, variant).term(m)
}

/// `M*`
pub fn cps_command(m: &TermC, variant: CpsVariant) -> Command {
    CpsTranslator::new(m, variant).command(m)
}

/// `V†`
pub fn cps_value(v: &TermC, variant: CpsVariant) -> Result<ValueCps> {
    if !v.is_value() {
        return Err(Error::Malformed(format!("not a value: {v}")));
    }
    Ok(CpsTranslator::new(v, variant).value(v))
}

/// `(M : K)`
pub fn cps_colon(m: &TermC, k: &Cont, variant: CpsVariant) -> Command {
    let mut t = CpsTranslator::new(m, variant);
    k.names(&mut t.avoid);
    t.colon(m, k.clone())
}

// ---------------------------------------------------------------------------
// The negative translation and its inverse

/// Deliberate defects used to check that the harness catches broken translations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NegMutation {
    /// Translates `cut_v(V, x.^x)` as `k V~`, forgetting the expansion of `k`.
    DropEtaExpansion,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NegativeTranslation {
    pub mutation: Option<NegMutation>,
}

impl NegativeTranslation {
    pub fn standard() -> NegativeTranslation {
        NegativeTranslation { mutation: None }
    }

    pub fn mutated(m: NegMutation) -> NegativeTranslation {
        NegativeTranslation { mutation: Some(m) }
    }

    /// `V~`
    pub fn value(&self, v: &ValueVfs) -> ValueCps {
        match v {
            ValueVfs::Var(x) => ValueCps::Var(x.clone()),
            ValueVfs::Lam(x, m) => ValueCps::Lam(x.clone(), Box::new(self.term(m))),
        }
    }

    /// `M−`
    pub fn term(&self, m: &TermVfs) -> TermCps {
        TermCps(Box::new(self.command(m)))
    }

    /// `M≀`
    pub fn command(&self, m: &TermVfs) -> Command {
        match m {
            TermVfs::Ret(v) => Command::KApp(self.value(v)),
            TermVfs::CutC(v, FormalContext::Bind(x, n))
                if self.mutation == Some(NegMutation::DropEtaExpansion)
                    && **n == TermVfs::Ret(ValueVfs::Var(x.clone())) =>
            {
                Command::KApp(self.value(v))
            }
            TermVfs::CutC(v, c) => fill_cps(&self.context(c), &self.value(v)),
        }
    }

    /// `c≀`
    pub fn context(&self, c: &FormalContext) -> ContextCps {
        match c {
            FormalContext::Bind(x, m) => ContextCps::KHole(Cont::KLam(x.clone(), Box::new(self.command(m)))),
            FormalContext::GApp(w, x, m) => {
                ContextCps::HoleWK(self.value(w), Cont::KLam(x.clone(), Box::new(self.command(m))))
            }
        }
    }
}

pub fn negative_translate(m: &TermVfs) -> TermCps {
    NegativeTranslation::standard().term(m)
}

pub fn negative_command(m: &TermVfs) -> Command {
    NegativeTranslation::standard().command(m)
}

pub fn negative_value(v: &ValueVfs) -> ValueCps {
    NegativeTranslation::standard().value(v)
}

pub fn negative_context(c: &FormalContext) -> ContextCps {
    NegativeTranslation::standard().context(c)
}

/// `A~`
pub fn negative_type_value(a: &SimpleType) -> SimpleType {
    a.cps_value()
}

/// `A−`
pub fn negative_type(a: &SimpleType) -> SimpleType {
    a.cps_computation()
}

/// `P+`
pub fn inverse_negative(p: &TermCps) -> Result<TermVfs> {
    inverse_command(&p.0)
}

/// `M×`
pub fn inverse_command(m: &Command) -> Result<TermVfs> {
    Ok(match m {
        Command::KApp(v) => TermVfs::Ret(inverse_value(v)?),
        Command::AppK(Cont::KLam(x, n), v) => {
            TermVfs::CutC(inverse_value(v)?, FormalContext::Bind(x.clone(), Box::new(inverse_command(n)?)))
        }
        Command::AppVWK(v, w, Cont::KLam(x, n)) => TermVfs::CutC(
            inverse_value(v)?,
            FormalContext::GApp(inverse_value(w)?, x.clone(), Box::new(inverse_command(n)?)),
        ),
        _ => return Err(Error::ModeViolation(format!("bare k as a continuation in {m}"))),
    })
}

/// `V××`
pub fn inverse_value(v: &ValueCps) -> Result<ValueVfs> {
    Ok(match v {
        ValueCps::Var(x) => ValueVfs::Var(x.clone()),
        ValueCps::Lam(x, p) => ValueVfs::Lam(x.clone(), Box::new(inverse_negative(p)?)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_c::{app, lam, let_in, var};
    use crate::vfs::{bind, cutc, garg, vfs_translate, vlam, vret, vvar};

    fn kx(x: &str) -> Cont {
        klam(x, kret(cvar(x)))
    }

    #[test]
    fn sigma_and_b_v() {
        let m = pass(kx("x"), cvar("v"));
        assert_eq!(step_cps(&m, Rule::SigmaV, &Path::root(), CpsMode::Cps).unwrap(), kret(cvar("v")));
        let f = clam("x", kret(cvar("x")));
        let m = call(f, cvar("w"), kx("y"));
        let r = step_cps(&m, Rule::BV, &Path::root(), CpsMode::Cps).unwrap();
        assert!(r.alpha_eq(&pass(klam("x", pass(kx("y"), cvar("x"))), cvar("w"))));
        assert!(step_cps(&m, Rule::BetaV, &Path::root(), CpsMode::Cps).is_err());
    }

    #[test]
    fn rcps_rules() {
        let m = pass(klam("x", pass(Cont::KVar, cvar("x"))), cvar("v"));
        let r = step_cps(&m, Rule::EtaK, &Path(vec![0]), CpsMode::Rcps).unwrap();
        assert_eq!(r, pass(Cont::KVar, cvar("v")));
        let f = clam("x", pass(Cont::KVar, cvar("x")));
        let m = call(f, cvar("w"), Cont::KVar);
        let r = step_cps(&m, Rule::BetaV, &Path::root(), CpsMode::Rcps).unwrap();
        assert_eq!(r, pass(Cont::KVar, cvar("w")));
    }

    #[test]
    fn eta_k_needs_freshness() {
        let k = klam("z", call(cvar("x"), cvar("z"), Cont::KVar));
        let m = pass(klam("x", pass(k, cvar("x"))), cvar("v"));
        assert!(step_cps(&m, Rule::EtaK, &Path(vec![0]), CpsMode::Rcps).is_err());
    }

    #[test]
    fn small_beta_fuses() {
        let f = clam("y", kret(cvar("y")));
        let m = call(f, cvar("w"), klam("x", call(cvar("g"), cvar("x"), kx("z"))));
        let r = step_cps(&m, Rule::BetaV, &Path::root(), CpsMode::Small).unwrap();
        assert!(r.alpha_eq(&call(cvar("g"), cvar("w"), kx("z"))));
    }

    #[test]
    fn structural_substitution() {
        let m = call(cvar("f"), cvar("a"), kx("x"));
        let k = klam("y", call(cvar("g"), cvar("y"), kx("z")));
        let c = ContextCps::KHole(k.clone());
        assert!(struct_subst(&c, &m).alpha_eq(&m.subst_k(&k)));
        assert_eq!(fill_cps(&c, &cvar("v")), pass(k.clone(), cvar("v")));
        let kc = context_cont(&ContextCps::HoleWK(cvar("w"), kx("x")));
        let r = step_cps(&pass(kc, cvar("v")), Rule::SigmaV, &Path::root(), CpsMode::Cps).unwrap();
        assert_eq!(r, call(cvar("v"), cvar("w"), kx("x")));
    }

    #[test]
    fn translation_examples() {
        let m = app(lam("x", var("x")), var("y"));
        let want = call(clam("x", pass(kx("z"), cvar("x"))), cvar("y"), kx("w"));
        assert!(cps_command(&m, CpsVariant::Modified).alpha_eq(&want));
        assert_eq!(cps_value(&var("x"), CpsVariant::Modified).unwrap(), cvar("x"));
        let l = let_in("y", app(var("f"), var("a")), var("y"));
        let k = kx("q");
        let got = cps_colon(&l, &k, CpsVariant::Modified);
        let want = call(cvar("f"), cvar("a"), klam("y", pass(k.clone(), cvar("y"))));
        assert!(got.alpha_eq(&want));
    }

    #[test]
    fn small_translation_has_no_pass() {
        let m = app(lam("x", var("x")), var("y"));
        let c = cps_command(&m, CpsVariant::Small);
        assert!(c.alpha_eq(&call(clam("x", kret(cvar("x"))), cvar("y"), kx("w"))));
        audit(&c, CpsMode::Small).unwrap();
    }

    #[test]
    fn underlined_expands_to_modified() {
        let m = app(app(var("f"), var("a")), let_in("y", var("b"), var("y")));
        let u = cps_command(&m, CpsVariant::Underlined);
        audit(&u, CpsMode::Rcps).unwrap();
        assert!(eta_expand_k(&u).alpha_eq(&cps_command(&m, CpsVariant::Modified)));
    }

    #[test]
    fn decomposition_examples() {
        for m in [var("x"), app(var("v"), var("w")), app(lam("x", var("x")), var("y"))] {
            let lhs = negative_translate(&vfs_translate(&m));
            assert!(lhs.alpha_eq(&cps_translate(&m, CpsVariant::Modified)), "{m}");
        }
    }

    #[test]
    fn negative_clauses_and_inverse() {
        assert_eq!(negative_command(&vret(vvar("v"))), kret(cvar("v")));
        let t = cutc(vlam("x", vret(vvar("x"))), garg(vvar("w"), "y", vret(vvar("y"))));
        let n = negative_command(&t);
        assert!(n.alpha_eq(&call(clam("x", kret(cvar("x"))), cvar("w"), kx("y"))));
        assert_eq!(inverse_command(&n).unwrap(), t);
        let u = cutc(vvar("v"), bind("x", vret(vvar("x"))));
        assert_eq!(negative_command(&u), pass(kx("x"), cvar("v")));
        assert_eq!(inverse_command(&kret(cvar("x"))).unwrap(), vret(vvar("x")));
        assert!(inverse_command(&pass(Cont::KVar, cvar("x"))).is_err());
    }

    #[test]
    fn mutation_breaks_round_trip() {
        let t = cutc(vvar("x"), bind("z", vret(vvar("z"))));
        let bad = NegativeTranslation::mutated(NegMutation::DropEtaExpansion).command(&t);
        assert_ne!(inverse_command(&bad).unwrap(), t);
    }

    #[test]
    fn linearity_audit() {
        assert!(audit(&call(cvar("f"), cvar("a"), kx("x")), CpsMode::Cps).is_ok());
        let two = pass(klam("x", kret(cvar("x"))), clam("y", kret(cvar("y"))));
        assert!(audit(&two, CpsMode::Cps).is_ok());
        let stray = kret(ValueCps::Var(Name::covar()));
        assert!(matches!(audit(&stray, CpsMode::Cps), Err(Error::LinearityViolation(_))));
        assert!(matches!(audit(&kret(cvar("x")), CpsMode::Rcps), Err(Error::ModeViolation(_))));
        assert!(matches!(audit(&pass(Cont::KVar, cvar("x")), CpsMode::Cps), Err(Error::ModeViolation(_))));
    }

    #[test]
    fn typing_rules() {
        let a = SimpleType::atom("a");
        let g = TypingContext::new().with(Name::parse("v"), a.clone());
        check_cps_command(&g, &a, &kret(cvar("v"))).unwrap();
        assert!(check_cps_command(&g, &SimpleType::atom("b"), &kret(cvar("v"))).is_err());
        let p = lamk(kret(cvar("v")));
        assert_eq!(typecheck_cps_term(&g, &p).unwrap(), a.cps_computation());
        let hole = SimpleType::arrow(a.clone(), a.cps_computation());
        let c = ContextCps::HoleWK(cvar("v"), kx("x"));
        check_cps_context(&g, &a, &hole, &c).unwrap();
        assert!(matches!(
            typecheck_cps_term(&TypingContext::new().with(Name::parse("v"), SimpleType::Bot), &p),
            Err(Error::ClassViolation(_))
        ));
    }

    #[test]
    fn translation_types() {
        let a = SimpleType::atom("a");
        let b = SimpleType::atom("b");
        let f = SimpleType::arrow(a.clone(), b.clone());
        let g = TypingContext::new().with(Name::parse("f"), f.cps_value()).with(Name::parse("v"), a.clone());
        let m = app(var("f"), app(lam("x", var("x")), var("v")));
        let p = cps_translate(&m, CpsVariant::Modified);
        assert_eq!(typecheck_cps_term(&g, &p).unwrap(), b.cps_computation());
    }
}
