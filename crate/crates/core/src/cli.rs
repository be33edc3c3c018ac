//! Front-end operations shared by the `essence` binary and the C interface:
//! parse, typecheck, normalize, translate along a pipeline, and check suites.

use std::fmt;
use std::str::FromStr;

use crate::cps::{
    check_cps_command, check_cps_term, cps_translate, inverse_negative, typecheck_cps_term, Cps, CpsVariant,
    NegativeTranslation, TermCps,
};
use crate::direct_style::{
    check_ga, cnf_negative, cps_inverse, phi, psi, theta, typecheck_ga, upsilon, Ces, Cnf, Ga, TermCes, TermVes,
    Ves,
};
use crate::error::{Error, Result};
use crate::harness::{run_suites, PropertyReport, SuiteConfig};
use crate::lambda_c::{admin_normalize, check_c, typecheck_c, Anf, LambdaC};
use crate::ljq::{check_ljq, check_q, knl, smp, typecheck_ljq, typecheck_q, Ljq, Lnf, Q};
use crate::rewrite::{normalize as run, Calculus, Rule, System, Trace};
use crate::syntax::Term;
use crate::types::{SimpleType, TypingContext};
use crate::vfs::{check_vfs, embed_lnf, typecheck_vfs, vfs_translate, Vfs};

pub const DEFAULT_MAX_STEPS: usize = 10_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stage {
    Admin,
    VfsTranslate,
    CpsTranslate,
    Negative,
    InverseNegative,
    Psi,
    Theta,
    Upsilon,
    Phi,
    Smp,
    Knl,
    EmbedLnf,
    CnfNegative,
    CpsInverse,
}

impl Stage {
    pub const ALL: [Stage; 14] = [
        Stage::Admin,
        Stage::VfsTranslate,
        Stage::CpsTranslate,
        Stage::Negative,
        Stage::InverseNegative,
        Stage::Psi,
        Stage::Theta,
        Stage::Upsilon,
        Stage::Phi,
        Stage::Smp,
        Stage::Knl,
        Stage::EmbedLnf,
        Stage::CnfNegative,
        Stage::CpsInverse,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Stage::Admin => "admin",
            Stage::VfsTranslate => "vfs_translate",
            Stage::CpsTranslate => "cps_translate",
            Stage::Negative => "negative",
            Stage::InverseNegative => "inverse_negative",
            Stage::Psi => "psi",
            Stage::Theta => "theta",
            Stage::Upsilon => "upsilon",
            Stage::Phi => "phi",
            Stage::Smp => "smp",
            Stage::Knl => "knl",
            Stage::EmbedLnf => "embed_lnf",
            Stage::CnfNegative => "cnf_negative",
            Stage::CpsInverse => "cps_inverse",
        }
    }

    pub fn source(self) -> Calculus {
        use Calculus as C;
        match self {
            Stage::Admin | Stage::VfsTranslate | Stage::CpsTranslate => C::LambdaC,
            Stage::Negative | Stage::Theta | Stage::EmbedLnf => C::Vfs,
            Stage::InverseNegative => C::Cps,
            Stage::Psi => C::Ves,
            Stage::Upsilon => C::Ces,
            Stage::Phi | Stage::CnfNegative => C::Cnf,
            Stage::Smp => C::Ljq,
            Stage::Knl => C::Q,
            Stage::CpsInverse => C::SmallCps,
        }
    }

    pub fn target(self) -> Calculus {
        use Calculus as C;
        match self {
            Stage::Admin => C::Anf,
            Stage::VfsTranslate | Stage::InverseNegative | Stage::Psi => C::Vfs,
            Stage::CpsTranslate | Stage::Negative => C::Cps,
            Stage::Theta => C::Ves,
            Stage::Upsilon | Stage::CpsInverse => C::Cnf,
            Stage::Phi => C::Ces,
            Stage::Smp => C::Q,
            Stage::Knl | Stage::EmbedLnf => C::Lnf,
            Stage::CnfNegative => C::SmallCps,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Stage {
    type Err = Error;
    fn from_str(s: &str) -> Result<Stage> {
        Stage::ALL.into_iter().find(|st| st.tag() == s).ok_or_else(|| Error::UnknownStage(s.to_string()))
    }
}

/// Whether every term of `found` is a term of `expected`.
pub fn included(found: Calculus, expected: Calculus) -> bool {
    use Calculus as C;
    found == expected
        || matches!(
            (found, expected),
            (C::Anf | C::Ves | C::Ces, C::LambdaC)
                | (C::Ves | C::Ces, C::Anf)
                | (C::Lnf, C::Q)
                | (C::Cnf, C::Ga)
                | (C::SmallCps, C::Cps)
                | (C::Ljq, C::LjqOriginal)
                | (C::LjqOriginal, C::Ljq)
        )
}

/// Translation stages in application order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pipeline(pub Vec<Stage>);

impl FromStr for Pipeline {
    type Err = Error;
    fn from_str(s: &str) -> Result<Pipeline> {
        let parts = s.split(',').map(str::trim).filter(|p| !p.is_empty());
        Ok(Pipeline(parts.map(str::parse).collect::<Result<_>>()?))
    }
}

impl Pipeline {
    /// The calculus of the final term, or the first mismatch.
    pub fn validate(&self, start: Calculus) -> Result<Calculus> {
        let mut cur = start;
        for st in &self.0 {
            if !included(cur, st.source()) {
                return Err(Error::StageMismatch {
                    stage: st.to_string(),
                    expected: st.source().to_string(),
                    found: cur.to_string(),
                });
            }
            cur = st.target();
        }
        Ok(cur)
    }
}

#[derive(Clone, Debug)]
pub struct Snapshot {
    pub stage: Stage,
    pub calculus: Calculus,
    pub term: Term,
}

fn wrong(stage: Stage, t: &Term) -> Error {
    Error::StageMismatch { stage: stage.to_string(), expected: stage.source().to_string(), found: t.kind().to_string() }
}

fn cps_of(t: &Term) -> Option<TermCps> {
    match t {
        Term::Cps(p) => Some(p.clone()),
        Term::Command(m) => Some(TermCps(Box::new(m.clone()))),
        _ => None,
    }
}

pub fn apply_stage(stage: Stage, t: &Term) -> Result<Term> {
    crate::syntax::validate(stage.source(), t).map_err(|_| wrong(stage, t))?;
    let bad = || wrong(stage, t);
    Ok(match (stage, t) {
        (Stage::Admin, Term::C(m)) => Term::C(admin_normalize(m)?.last().clone()),
        (Stage::VfsTranslate, Term::C(m)) => Term::Vfs(vfs_translate(m)),
        (Stage::CpsTranslate, Term::C(m)) => Term::Cps(cps_translate(m, CpsVariant::Modified)),
        (Stage::Negative, Term::Vfs(m)) => Term::Cps(NegativeTranslation::standard().term(m)),
        (Stage::InverseNegative, _) => Term::Vfs(inverse_negative(&cps_of(t).ok_or_else(bad)?)?),
        (Stage::Psi, Term::C(m)) => Term::Vfs(psi(&TermVes::new(m.clone())?)),
        (Stage::Theta, Term::Vfs(m)) => Term::C(theta(m).into_c()),
        (Stage::Upsilon, Term::C(m)) => Term::Ga(upsilon(&TermCes::new(m.clone())?)),
        (Stage::Phi, Term::Ga(m)) => Term::C(phi(m)?.into_c()),
        (Stage::Smp, Term::L(m)) => Term::Q(smp(m)),
        (Stage::Knl, Term::Q(m)) => Term::Q(knl(m)),
        (Stage::EmbedLnf, Term::Vfs(m)) => Term::Q(embed_lnf(m)),
        (Stage::CnfNegative, Term::Ga(m)) => Term::Cps(cnf_negative(m)),
        (Stage::CpsInverse, _) => Term::Ga(cps_inverse(&cps_of(t).ok_or_else(bad)?)?),
        _ => return Err(bad()),
    })
}

/// Runs every stage and keeps each intermediate term. The empty pipeline returns nothing.
pub fn translate(t: &Term, from: Calculus, pipeline: &Pipeline) -> Result<Vec<Snapshot>> {
    pipeline.validate(from)?;
    let mut out: Vec<Snapshot> = Vec::new();
    let mut cur = t.clone();
    for &stage in &pipeline.0 {
        cur = apply_stage(stage, &cur)?;
        out.push(Snapshot { stage, calculus: stage.target(), term: cur.clone() });
    }
    Ok(out)
}

/// Result of normalizing: the normal form and the rendered trace.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub term: Term,
    pub steps: usize,
    pub trace: String,
}

pub fn rules_of(calc: Calculus) -> Vec<Rule> {
    match calc {
        Calculus::LambdaC => LambdaC::full().rules(),
        Calculus::Anf => Anf::full().rules(),
        Calculus::Ves => Ves.rules(),
        Calculus::Ces => Ces.rules(),
        Calculus::Q => Q::full().rules(),
        Calculus::Lnf => Lnf.rules(),
        Calculus::Ljq => Ljq::modified().rules(),
        Calculus::LjqOriginal => Ljq::original().rules(),
        Calculus::Vfs => Vfs.rules(),
        Calculus::Rcps => Cps::rcps().rules(),
        Calculus::Cps => Cps::cps().rules(),
        Calculus::SmallCps => Cps::small().rules(),
        Calculus::Ga => Ga.rules(),
        Calculus::Cnf => Cnf.rules(),
    }
}

fn go<S: System>(sys: &S, t: &S::T, only: Option<&[Rule]>, fuel: usize, wrap: impl Fn(S::T) -> Term) -> Result<Normalized> {
    let tr: Trace<S::T> = run(sys, t, only, fuel)?;
    Ok(Normalized { term: wrap(tr.last().clone()), steps: tr.len(), trace: tr.render() })
}

/// Leftmost-outermost normalization of `t` in `calc`, restricted to `rules` when given.
pub fn normalize(t: &Term, calc: Calculus, rules: Option<&[Rule]>, max_steps: usize) -> Result<Normalized> {
    crate::syntax::validate(calc, t)?;
    if let Some(rs) = rules {
        let known = rules_of(calc);
        if let Some(r) = rs.iter().find(|r| !known.contains(r)) {
            return Err(Error::RuleDisabled(format!("{r} in {calc}")));
        }
    }
    let f = max_steps;
    match (calc, t) {
        (Calculus::LambdaC, Term::C(m)) => go(&LambdaC::full(), m, rules, f, Term::C),
        (Calculus::Anf, Term::C(m)) => go(&Anf::full(), m, rules, f, Term::C),
        (Calculus::Ves, Term::C(m)) => go(&Ves, &TermVes::new(m.clone())?, rules, f, |t| Term::C(t.into_c())),
        (Calculus::Ces, Term::C(m)) => go(&Ces, &TermCes::new(m.clone())?, rules, f, |t| Term::C(t.into_c())),
        (Calculus::Q, Term::Q(m)) => go(&Q::full(), m, rules, f, Term::Q),
        (Calculus::Lnf, Term::Q(m)) => go(&Lnf, m, rules, f, Term::Q),
        (Calculus::Ljq, Term::L(m)) => go(&Ljq::modified(), m, rules, f, Term::L),
        (Calculus::LjqOriginal, Term::L(m)) => go(&Ljq::original(), m, rules, f, Term::L),
        (Calculus::Vfs, Term::Vfs(m)) => go(&Vfs, m, rules, f, Term::Vfs),
        (Calculus::Ga, Term::Ga(m)) => go(&Ga, m, rules, f, Term::Ga),
        (Calculus::Cnf, Term::Ga(m)) => go(&Cnf, m, rules, f, Term::Ga),
        (Calculus::Rcps | Calculus::Cps | Calculus::SmallCps, _) => {
            let sys = match calc {
                Calculus::Rcps => Cps::rcps(),
                Calculus::SmallCps => Cps::small(),
                _ => Cps::cps(),
            };
            match t {
                Term::Cps(p) => go(&sys, p.body(), rules, f, |m| Term::Cps(TermCps(Box::new(m)))),
                Term::Command(m) => go(&sys, m, rules, f, Term::Command),
                _ => Err(Error::Malformed(format!("{t} is not a term of {calc}"))),
            }
        }
        _ => Err(Error::Malformed(format!("{t} is not a term of {calc}"))),
    }
}

/// Synthesizes the type of `t`, or checks it against `ascribed`. A bare CPS
/// command needs an ascription, read as its answer type.
pub fn typecheck(t: &Term, calc: Calculus, ctx: &TypingContext, ascribed: Option<&SimpleType>) -> Result<SimpleType> {
    crate::syntax::validate(calc, t)?;
    if let Some(a) = ascribed {
        match t {
            Term::C(m) => check_c(ctx, m, a)?,
            Term::Q(m) => check_q(ctx, m, a)?,
            Term::L(m) => check_ljq(ctx, m, a)?,
            Term::Vfs(m) => check_vfs(ctx, m, a)?,
            Term::Cps(p) => check_cps_term(ctx, p, a)?,
            Term::Command(m) => check_cps_command(ctx, a, m)?,
            Term::Ga(m) => check_ga(ctx, m, a)?,
        }
        return Ok(a.clone());
    }
    match t {
        Term::C(m) => typecheck_c(ctx, m),
        Term::Q(m) => typecheck_q(ctx, m),
        Term::L(m) => typecheck_ljq(ctx, m),
        Term::Vfs(m) => typecheck_vfs(ctx, m),
        Term::Cps(p) => typecheck_cps_term(ctx, p),
        Term::Command(_) => Err(Error::CannotSynthesize(format!("{t} (ascribe its answer type)"))),
        Term::Ga(m) => typecheck_ga(ctx, m),
    }
}

/// Runs one suite, or all of them for `all`.
pub fn check(suite: &str, cfg: &SuiteConfig) -> Result<Vec<PropertyReport>> {
    run_suites(suite, cfg)
}

/// Process exit status for an error: 3 for fuel, 2 for usage, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::FuelExhausted { .. } => 3,
        Error::Syntax { .. }
        | Error::ReservedName(_)
        | Error::UnknownStage(_)
        | Error::UnknownSuite(_)
        | Error::UnknownCalculus(_)
        | Error::UnknownRule(_)
        | Error::RuleDisabled(_)
        | Error::StageMismatch { .. } => 2,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use crate::Syntax;

    fn c(s: &str) -> Term {
        parse(Calculus::LambdaC, s).unwrap()
    }

    #[test]
    fn value_through_vfs() {
        let p: Pipeline = "vfs_translate".parse().unwrap();
        let out = translate(&c("x"), Calculus::LambdaC, &p).unwrap();
        assert!(out[0].term.alpha_eq(&parse(Calculus::Vfs, "cut_v(x, z. ^z)").unwrap()));
    }

    #[test]
    fn decomposition_live() {
        let t = c("(\\x. x) y");
        let two = translate(&t, Calculus::LambdaC, &"vfs_translate,negative".parse().unwrap()).unwrap();
        let one = translate(&t, Calculus::LambdaC, &"cps_translate".parse().unwrap()).unwrap();
        assert!(two.last().unwrap().term.alpha_eq(&one.last().unwrap().term));
    }

    #[test]
    fn empty_pipeline() {
        assert!(translate(&c("x"), Calculus::LambdaC, &"".parse().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn stage_mismatch() {
        let e = Pipeline(vec![Stage::Negative]).validate(Calculus::LambdaC).unwrap_err();
        assert!(matches!(e, Error::StageMismatch { .. }));
        assert!("vfs_translate,theta,psi,negative,inverse_negative".parse::<Pipeline>().unwrap().validate(Calculus::LambdaC).is_ok());
        assert!(matches!("nope".parse::<Pipeline>(), Err(Error::UnknownStage(_))));
    }

    #[test]
    fn normalize_examples() {
        let r = normalize(&c("(\\x. x) ((\\y. y) z)"), Calculus::LambdaC, None, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(r.term.to_string(), "z");
        let admin = [Rule::Let1, Rule::Let2, Rule::Assoc];
        let r = normalize(&c("f (g x) (h y)"), Calculus::LambdaC, Some(&admin), DEFAULT_MAX_STEPS).unwrap();
        match r.term {
            Term::C(m) => assert!(crate::lambda_c::is_anf(&m)),
            _ => unreachable!(),
        }
        let omega = c("(\\x. x x) (\\x. x x)");
        assert!(matches!(normalize(&omega, Calculus::LambdaC, None, 10), Err(Error::FuelExhausted { .. })));
    }

    #[test]
    fn typecheck_needs_ascription_on_abstractions() {
        let ctx = TypingContext::new();
        let id = c("\\x. x");
        assert!(matches!(typecheck(&id, Calculus::LambdaC, &ctx, None), Err(Error::CannotSynthesize(_))));
        let a = crate::syntax::parse_type("a -> a").unwrap();
        assert_eq!(typecheck(&id, Calculus::LambdaC, &ctx, Some(&a)).unwrap(), a);
    }
}
