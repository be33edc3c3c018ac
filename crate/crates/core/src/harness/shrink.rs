//! Greedy counterexample shrinking.

use crate::cps::{Command, Cont, TermCps, ValueCps};
use crate::direct_style::TermGa;
use crate::lambda_c::TermC;
use crate::ljq::{TermL, TermQ, ValueL, ValueQ};
use crate::name::Name;
use crate::rewrite::Syntax;
use crate::vfs::{FormalContext, TermVfs, ValueVfs};

/// A property input that can be printed, measured, and shrunk.
pub trait Case: Clone + Send + Sync {
    fn render(&self) -> String;
    fn nodes(&self) -> usize;
    /// One-step reductions of the input, larger cuts first.
    fn shrink(&self) -> Vec<Self>;
}

pub const MAX_SHRINK_STEPS: usize = 200;

/// Repeatedly adopts the first candidate that still fails.
pub fn shrink_failure<I: Case>(input: &I, still_fails: impl Fn(&I) -> bool) -> I {
    let mut cur = input.clone();
    for _ in 0..MAX_SHRINK_STEPS {
        let next = cur.shrink().into_iter().find(|c| c.nodes() < cur.nodes() && still_fails(c));
        match next {
            Some(c) => cur = c,
            None => break,
        }
    }
    cur
}

fn var_names(scope: &[Name], free: &[Name]) -> Vec<Name> {
    let mut out: Vec<Name> = Vec::new();
    for n in scope.iter().rev().chain(free) {
        if !out.contains(n) {
            out.push(n.clone());
        }
    }
    if out.is_empty() {
        out.push(Name::new("x"));
    }
    out
}

macro_rules! syntax_case {
    ($t:ty, $f:ident) => {
        impl Case for $t {
            fn render(&self) -> String {
                self.to_string()
            }
            fn nodes(&self) -> usize {
                self.size()
            }
            fn shrink(&self) -> Vec<Self> {
                let free: Vec<Name> = self.free_vars().into_iter().collect();
                $f(self, &mut Vec::new(), &free)
            }
        }
    };
}

syntax_case!(TermC, shrink_c);
syntax_case!(TermVfs, shrink_vfs);
syntax_case!(Command, shrink_cmd);
syntax_case!(TermQ, shrink_q);
syntax_case!(TermL, shrink_l);
syntax_case!(TermGa, shrink_ga);

impl<A: Case, B: Case> Case for (A, B) {
    fn render(&self) -> String {
        format!("{} ; {}", self.0.render(), self.1.render())
    }
    fn nodes(&self) -> usize {
        self.0.nodes() + self.1.nodes()
    }
    fn shrink(&self) -> Vec<Self> {
        let mut out: Vec<Self> = self.0.shrink().into_iter().map(|a| (a, self.1.clone())).collect();
        out.extend(self.1.shrink().into_iter().map(|b| (self.0.clone(), b)));
        out
    }
}

fn under<T>(scope: &mut Vec<Name>, x: &Name, f: impl FnOnce(&mut Vec<Name>) -> T) -> T {
    scope.push(x.clone());
    let r = f(scope);
    scope.pop();
    r
}

fn shrink_c(t: &TermC, scope: &mut Vec<Name>, free: &[Name]) -> Vec<TermC> {
    use TermC::*;
    let mut out: Vec<TermC> = t.children().into_iter().cloned().collect();
    if !matches!(t, Var(_)) {
        out.extend(var_names(scope, free).into_iter().map(Var));
    }
    match t {
        Var(_) => {}
        Lam(x, m) => {
            let ms = under(scope, x, |sc| shrink_c(m, sc, free));
            out.extend(ms.into_iter().map(|m| Lam(x.clone(), Box::new(m))));
        }
        App(m, n) => {
            out.extend(shrink_c(m, scope, free).into_iter().map(|m| App(Box::new(m), n.clone())));
            out.extend(shrink_c(n, scope, free).into_iter().map(|n| App(m.clone(), Box::new(n))));
        }
        Let(x, m, n) => {
            out.extend(shrink_c(m, scope, free).into_iter().map(|m| Let(x.clone(), Box::new(m), n.clone())));
            let ns = under(scope, x, |sc| shrink_c(n, sc, free));
            out.extend(ns.into_iter().map(|n| Let(x.clone(), m.clone(), Box::new(n))));
        }
    }
    out
}

fn shrink_vfs_v(v: &ValueVfs, scope: &mut Vec<Name>, free: &[Name]) -> Vec<ValueVfs> {
    match v {
        ValueVfs::Var(_) => vec![],
        ValueVfs::Lam(x, m) => {
            let mut out: Vec<ValueVfs> = var_names(scope, free).into_iter().map(ValueVfs::Var).collect();
            let ms = under(scope, x, |sc| shrink_vfs(m, sc, free));
            out.extend(ms.into_iter().map(|m| ValueVfs::Lam(x.clone(), Box::new(m))));
            out
        }
    }
}

fn shrink_vfs(t: &TermVfs, scope: &mut Vec<Name>, free: &[Name]) -> Vec<TermVfs> {
    match t {
        TermVfs::Ret(v) => {
            let mut out: Vec<TermVfs> = match v {
                ValueVfs::Lam(_, m) => vec![(**m).clone()],
                ValueVfs::Var(_) => vec![],
            };
            out.extend(shrink_vfs_v(v, scope, free).into_iter().map(TermVfs::Ret));
            out
        }
        TermVfs::CutC(v, c) => {
            let (x, body) = match c {
                FormalContext::Bind(x, m) | FormalContext::GApp(_, x, m) => (x, m),
            };
            let mut out = vec![(**body).clone(), TermVfs::Ret(v.clone())];
            if let ValueVfs::Lam(_, m) = v {
                out.push((**m).clone());
            }
            if let FormalContext::GApp(w, x, m) = c {
                out.push(TermVfs::CutC(v.clone(), FormalContext::Bind(x.clone(), m.clone())));
                out.extend(
                    shrink_vfs_v(w, scope, free)
                        .into_iter()
                        .map(|w| TermVfs::CutC(v.clone(), FormalContext::GApp(w, x.clone(), m.clone()))),
                );
            }
            out.extend(shrink_vfs_v(v, scope, free).into_iter().map(|v| TermVfs::CutC(v, c.clone())));
            let bs = under(scope, x, |sc| shrink_vfs(body, sc, free));
            out.extend(bs.into_iter().map(|b| {
                let c = match c {
                    FormalContext::Bind(x, _) => FormalContext::Bind(x.clone(), Box::new(b)),
                    FormalContext::GApp(w, x, _) => FormalContext::GApp(w.clone(), x.clone(), Box::new(b)),
                };
                TermVfs::CutC(v.clone(), c)
            }));
            out
        }
    }
}

fn shrink_cps_v(v: &ValueCps, scope: &mut Vec<Name>, free: &[Name]) -> Vec<ValueCps> {
    match v {
        ValueCps::Var(_) => vec![],
        ValueCps::Lam(x, p) => {
            let mut out: Vec<ValueCps> = var_names(scope, free).into_iter().map(ValueCps::Var).collect();
            let ms = under(scope, x, |sc| shrink_cmd(p.body(), sc, free));
            out.extend(ms.into_iter().map(|m| ValueCps::Lam(x.clone(), Box::new(TermCps(Box::new(m))))));
            out
        }
    }
}

fn shrink_cmd(m: &Command, scope: &mut Vec<Name>, free: &[Name]) -> Vec<Command> {
    let lam_body = |v: &ValueCps| match v {
        ValueCps::Lam(_, p) => Some(p.body().clone()),
        ValueCps::Var(_) => None,
    };
    match m {
        Command::KApp(v) => {
            let mut out: Vec<Command> = lam_body(v).into_iter().collect();
            out.extend(shrink_cps_v(v, scope, free).into_iter().map(Command::KApp));
            out
        }
        Command::AppK(k, v) => {
            let mut out = Vec::new();
            if let Cont::KLam(_, n) = k {
                out.push((**n).clone());
            }
            out.push(Command::KApp(v.clone()));
            out.extend(lam_body(v));
            out.extend(shrink_cps_v(v, scope, free).into_iter().map(|v| Command::AppK(k.clone(), v)));
            out.extend(shrink_cont(k, scope, free).into_iter().map(|k| Command::AppK(k, v.clone())));
            out
        }
        Command::AppVWK(v, w, k) => {
            let mut out = Vec::new();
            if let Cont::KLam(_, n) = k {
                out.push((**n).clone());
            }
            out.push(Command::KApp(v.clone()));
            out.push(Command::KApp(w.clone()));
            out.extend(lam_body(v));
            out.extend(lam_body(w));
            out.push(Command::AppK(k.clone(), w.clone()));
            out.extend(shrink_cps_v(v, scope, free).into_iter().map(|v| Command::AppVWK(v, w.clone(), k.clone())));
            out.extend(shrink_cps_v(w, scope, free).into_iter().map(|w| Command::AppVWK(v.clone(), w, k.clone())));
            out.extend(shrink_cont(k, scope, free).into_iter().map(|k| Command::AppVWK(v.clone(), w.clone(), k)));
            out
        }
    }
}

fn shrink_cont(k: &Cont, scope: &mut Vec<Name>, free: &[Name]) -> Vec<Cont> {
    match k {
        Cont::KVar => vec![],
        Cont::KLam(x, n) => {
            let ns = under(scope, x, |sc| shrink_cmd(n, sc, free));
            ns.into_iter().map(|n| Cont::KLam(x.clone(), Box::new(n))).collect()
        }
    }
}

fn shrink_q_v(v: &ValueQ, scope: &mut Vec<Name>, free: &[Name]) -> Vec<ValueQ> {
    match v {
        ValueQ::Var(_) => vec![],
        ValueQ::Lam(x, m) => {
            let mut out: Vec<ValueQ> = var_names(scope, free).into_iter().map(ValueQ::Var).collect();
            let ms = under(scope, x, |sc| shrink_q(m, sc, free));
            out.extend(ms.into_iter().map(|m| ValueQ::Lam(x.clone(), Box::new(m))));
            out
        }
    }
}

fn shrink_q(t: &TermQ, scope: &mut Vec<Name>, free: &[Name]) -> Vec<TermQ> {
    use TermQ::*;
    let lam_body = |v: &ValueQ| match v {
        ValueQ::Lam(_, m) => Some((**m).clone()),
        ValueQ::Var(_) => None,
    };
    match t {
        Ret(v) => {
            let mut out: Vec<TermQ> = lam_body(v).into_iter().collect();
            out.extend(shrink_q_v(v, scope, free).into_iter().map(Ret));
            out
        }
        LIntro(h, v, y, n) => {
            let mut out = vec![(**n).clone(), Ret(v.clone())];
            out.extend(lam_body(v));
            out.extend(shrink_q_v(v, scope, free).into_iter().map(|v| LIntro(h.clone(), v, y.clone(), n.clone())));
            let ns = under(scope, y, |sc| shrink_q(n, sc, free));
            out.extend(ns.into_iter().map(|n| LIntro(h.clone(), v.clone(), y.clone(), Box::new(n))));
            out
        }
        Cut(m, x, n) => {
            let mut out = vec![(**m).clone(), (**n).clone()];
            out.extend(shrink_q(m, scope, free).into_iter().map(|m| Cut(Box::new(m), x.clone(), n.clone())));
            let ns = under(scope, x, |sc| shrink_q(n, sc, free));
            out.extend(ns.into_iter().map(|n| Cut(m.clone(), x.clone(), Box::new(n))));
            out
        }
    }
}

fn shrink_l_v(v: &ValueL, scope: &mut Vec<Name>, free: &[Name]) -> Vec<ValueL> {
    match v {
        ValueL::Var(_) => vec![],
        ValueL::Lam(x, m) => {
            let mut out: Vec<ValueL> = var_names(scope, free).into_iter().map(ValueL::Var).collect();
            let ms = under(scope, x, |sc| shrink_l(m, sc, free));
            out.extend(ms.into_iter().map(|m| ValueL::Lam(x.clone(), Box::new(m))));
            out
        }
        ValueL::Cut1(c, x, w) => {
            let mut out = vec![(**c).clone(), (**w).clone()];
            out.extend(shrink_l_v(c, scope, free).into_iter().map(|c| ValueL::Cut1(Box::new(c), x.clone(), w.clone())));
            let ws = under(scope, x, |sc| shrink_l_v(w, sc, free));
            out.extend(ws.into_iter().map(|w| ValueL::Cut1(c.clone(), x.clone(), Box::new(w))));
            out
        }
    }
}

fn shrink_l(t: &TermL, scope: &mut Vec<Name>, free: &[Name]) -> Vec<TermL> {
    use TermL::*;
    match t {
        Ret(v) => shrink_l_v(v, scope, free).into_iter().map(Ret).collect(),
        LIntro(h, v, y, n) => {
            let mut out = vec![(**n).clone(), Ret(v.clone())];
            out.extend(shrink_l_v(v, scope, free).into_iter().map(|v| LIntro(h.clone(), v, y.clone(), n.clone())));
            let ns = under(scope, y, |sc| shrink_l(n, sc, free));
            out.extend(ns.into_iter().map(|n| LIntro(h.clone(), v.clone(), y.clone(), Box::new(n))));
            out
        }
        Cut2(v, x, n) => {
            let mut out = vec![(**n).clone(), Ret(v.clone())];
            out.extend(shrink_l_v(v, scope, free).into_iter().map(|v| Cut2(v, x.clone(), n.clone())));
            let ns = under(scope, x, |sc| shrink_l(n, sc, free));
            out.extend(ns.into_iter().map(|n| Cut2(v.clone(), x.clone(), Box::new(n))));
            out
        }
        Cut3(m, x, n) => {
            let mut out = vec![(**m).clone(), (**n).clone()];
            out.extend(shrink_l(m, scope, free).into_iter().map(|m| Cut3(Box::new(m), x.clone(), n.clone())));
            let ns = under(scope, x, |sc| shrink_l(n, sc, free));
            out.extend(ns.into_iter().map(|n| Cut3(m.clone(), x.clone(), Box::new(n))));
            out
        }
    }
}

fn shrink_ga(t: &TermGa, scope: &mut Vec<Name>, free: &[Name]) -> Vec<TermGa> {
    use TermGa::*;
    let mut out: Vec<TermGa> = t.children().into_iter().cloned().collect();
    if !matches!(t, Var(_)) {
        out.extend(var_names(scope, free).into_iter().map(Var));
    }
    match t {
        Var(_) => {}
        Lam(x, m) => {
            let ms = under(scope, x, |sc| shrink_ga(m, sc, free));
            out.extend(ms.into_iter().map(|m| Lam(x.clone(), Box::new(m))));
        }
        GApp(m, n, x, p) => {
            out.extend(shrink_ga(m, scope, free).into_iter().map(|m| GApp(Box::new(m), n.clone(), x.clone(), p.clone())));
            out.extend(shrink_ga(n, scope, free).into_iter().map(|n| GApp(m.clone(), Box::new(n), x.clone(), p.clone())));
            let ps = under(scope, x, |sc| shrink_ga(p, sc, free));
            out.extend(ps.into_iter().map(|p| GApp(m.clone(), n.clone(), x.clone(), Box::new(p))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_c::{app, lam, let_in, var};

    #[test]
    fn shrinks_to_minimal_failing_subterm() {
        let t = let_in("z", app(var("f"), var("y")), lam("x", app(app(var("x"), var("x")), var("y"))));
        let has_self_app = |t: &TermC| t.to_string().contains("x x");
        let r = shrink_failure(&t, has_self_app);
        assert!(has_self_app(&r));
        assert!(r.nodes() <= 3, "{r}");
    }

    #[test]
    fn candidates_are_smaller() {
        let t = let_in("z", app(var("f"), var("y")), lam("x", var("x")));
        for c in t.shrink() {
            assert!(c.nodes() < t.nodes(), "{c}");
        }
    }
}
