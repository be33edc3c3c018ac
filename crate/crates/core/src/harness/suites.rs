use std::collections::HashMap;

use crate::cps::{
    audit, check_cps_command, check_cps_context, check_cps_term, check_cps_value, context_cont, cps_colon,
    cps_command, cps_translate, cps_value, fill_cps, inverse_command, inverse_negative, inverse_value, step_cps,
    struct_subst, Command, ContextCps, Cont, Cps, CpsMode, CpsVariant, NegativeTranslation, TermCps, ValueCps,
};
use crate::direct_style::{
    ces_let_compose, cnf_negative_command, cps_inverse_command, is_ces, is_cnf, is_ves, is_ves_value, left_subst,
    phi, pi_normalize_ga, psi, psi_v, psi_x, theta, theta_v, theta_x, check_ga, upsilon, Ces, Cnf, Ga, TermCes,
    TermGa, TermVes, Ves,
};
use crate::lambda_c::{
    admin_normalize, check_c, infer_c, instantiate_c, is_anf, let_compose, step_c, Anf, LambdaC, TermC,
};
use crate::ljq::{
    check_ljq, check_q, cutvc, embed_q, explicit_cuts_on_abstractions, is_lnf, knl, smp, Ljq, Lnf, TermL,
    TermQ, ValueQ, Q,
};
use crate::ljq::q::contract_q;
use crate::name::{fresh_name, Name};
use crate::rewrite::{find_witness, successors, Path, Rule, Syntax, System};
use crate::types::{SimpleType, TypingContext, Unifier};
use crate::vfs::{
    check_vfs, check_vfs_v, colon_vfs, embed_lnf, from_lnf, vfs_translate,
    vfs_translate_in, vfs_translate_value, FormalContext, TermVfs, ValueVfs, Vfs,
};

use super::gen::{
    base_context, gen_c, gen_ces, gen_cps, gen_ga, gen_ljq, gen_planted_c, gen_q, gen_typed_c, gen_value_c, gen_ves,
    gen_vfs, random_type, sized, GenConfig, Rng64,
};
use super::{ensure, fail, given, must, run_property, same, Check, Outcome, PropertyReport, SuiteConfig};

fn atom() -> SimpleType {
    SimpleType::atom("a")
}

fn x() -> Name {
    Name::new("x")
}

fn y() -> Name {
    Name::new("y")
}

fn z() -> Name {
    Name::new("z")
}

fn bounded(cfg: &SuiteConfig, n: usize) -> usize {
    cfg.gen.max_size.min(n)
}

/// Reaches `goal` from `start` within the witness budget, or fails `property`.
fn reaches<S: System>(property: &str, sys: &S, start: &S::T, goal: &S::T, fuel: usize) -> Check {
    match find_witness(sys, start, goal, None, fuel) {
        Some(_) => Ok(()),
        None => Err(fail(property, format!("{start} ->> {goal}"), format!("no reduction found within {fuel} terms"))),
    }
}

fn listing<T: Syntax>(ts: &[T]) -> String {
    let v: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
    format!("[{}]", v.join(", "))
}

fn multiset<T: Syntax>(ts: &[T]) -> HashMap<crate::rewrite::Tree, usize> {
    let mut m = HashMap::new();
    for t in ts {
        *m.entry(t.tree()).or_insert(0) += 1;
    }
    m
}

/// The one-step successors of `a`, mapped across, are exactly those of `b`.
fn same_steps<A: System, B: System>(
    property: &str,
    sa: &A,
    a: &A::T,
    sb: &B,
    b: &B::T,
    f: impl Fn(&A::T) -> crate::error::Result<B::T>,
) -> Check {
    let mut mapped = Vec::new();
    for (_, _, n) in successors(sa, a, None) {
        mapped.push(must(property, f(&n))?);
    }
    let direct: Vec<B::T> = successors(sb, b, None).into_iter().map(|(_, _, n)| n).collect();
    if multiset(&mapped) == multiset(&direct) {
        Ok(())
    } else {
        Err(fail(property, listing(&mapped), listing(&direct)))
    }
}

/// Every successor of `t` satisfies `ty`.
fn preserved<S: System>(property: &str, sys: &S, t: &S::T, ty: impl Fn(&S::T) -> crate::error::Result<()>) -> Check {
    if let Err(e) = ty(t) {
        return Err(fail(property, format!("{t} is typed"), e));
    }
    for (r, p, n) in successors(sys, t, None) {
        if let Err(e) = ty(&n) {
            return Err(fail(property, format!("{t} -> {n} by {r} at {p} keeps its type"), e));
        }
    }
    Ok(())
}

fn values_c(t: &TermC, out: &mut Vec<TermC>) {
    if t.is_value() {
        out.push(t.clone());
    }
    for c in t.children() {
        values_c(c, out);
    }
}

fn values_vfs(t: &TermVfs, out: &mut Vec<ValueVfs>) {
    fn v(val: &ValueVfs, out: &mut Vec<ValueVfs>) {
        out.push(val.clone());
        if let ValueVfs::Lam(_, m) = val {
            values_vfs(m, out);
        }
    }
    match t {
        TermVfs::Ret(val) => v(val, out),
        TermVfs::CutC(val, c) => {
            v(val, out);
            match c {
                FormalContext::Bind(_, m) => values_vfs(m, out),
                FormalContext::GApp(w, _, m) => {
                    v(w, out);
                    values_vfs(m, out);
                }
            }
        }
    }
}

fn values_cps(m: &Command, out: &mut Vec<ValueCps>) {
    fn v(val: &ValueCps, out: &mut Vec<ValueCps>) {
        out.push(val.clone());
        if let ValueCps::Lam(_, p) = val {
            values_cps(p.body(), out);
        }
    }
    fn k(c: &Cont, out: &mut Vec<ValueCps>) {
        if let Cont::KLam(_, n) = c {
            values_cps(n, out);
        }
    }
    match m {
        Command::KApp(val) => v(val, out),
        Command::AppK(c, val) => {
            k(c, out);
            v(val, out);
        }
        Command::AppVWK(a, b, c) => {
            v(a, out);
            v(b, out);
            k(c, out);
        }
    }
}

/// Source terms as generalized applications: `MN` becomes `M(N, r. r)`.
pub fn ga_of_c(t: &TermC) -> TermGa {
    let r = Name::new("r");
    let id = |m: TermGa, n: TermGa| TermGa::GApp(Box::new(m), Box::new(n), r.clone(), Box::new(TermGa::Var(r.clone())));
    match t {
        TermC::Var(v) => TermGa::Var(v.clone()),
        TermC::Lam(v, m) => TermGa::Lam(v.clone(), Box::new(ga_of_c(m))),
        TermC::App(m, n) => id(ga_of_c(m), ga_of_c(n)),
        TermC::Let(v, m, n) => id(TermGa::Lam(v.clone(), Box::new(ga_of_c(n))), ga_of_c(m)),
    }
}

fn source(cfg: &GenConfig, rng: &mut Rng64, max: usize) -> TermC {
    sized(rng, max.min(cfg.max_size), gen_c)
}

// ---------------------------------------------------------------------------
// Simulation of the source calculus

pub fn thm1(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm1-simulation");
    let ctx = base_context(&cfg.gen);
    for rule in [Rule::B, Rule::LetV, Rule::EtaLet, Rule::Let1, Rule::Let2, Rule::Assoc] {
        let exact = matches!(rule, Rule::Let1 | Rule::Let2 | Rule::Assoc);
        let name = format!("{rule} steps map to {}", if exact { "equal images" } else { "reductions" });
        run_property(
            cfg,
            &mut r,
            &name,
            500,
            |rng| gen_planted_c(&cfg.gen, rng, &ctx, rule).ok(),
            |m: &TermC| {
                given(instantiate_c(&ctx, m, &atom()))?;
                let paths: Vec<Path> =
                    LambdaC::full().redexes(m).into_iter().filter(|(q, _)| *q == rule).map(|(_, p)| p).collect();
                if paths.is_empty() {
                    return Err(Outcome::Discard);
                }
                let src = vfs_translate(m);
                for p in paths {
                    let n = must("step", step_c(m, rule, &p))?;
                    let tgt = vfs_translate(&n);
                    if exact {
                        same("translations coincide", &tgt, &src)?;
                    } else {
                        reaches("translation simulates the step", &Vfs, &src, &tgt, cfg.witness_fuel)?;
                    }
                }
                Ok(())
            },
        );
    }
    r
}

// ---------------------------------------------------------------------------
// Decomposition of the CPS translation

fn decomposition(neg: &NegativeTranslation, m: &TermC, n_src: &TermC) -> Check {
    let mut vals = Vec::new();
    values_c(m, &mut vals);
    for v in &vals {
        let lhs = neg.value(&must("value translation", vfs_translate_value(v))?);
        let rhs = must("value translation", cps_value(v, CpsVariant::Modified))?;
        same("values: VFS then negative equals CPS", &rhs, &lhs)?;
    }
    let n = vfs_translate(n_src);
    let cont = Cont::KLam(x(), Box::new(neg.command(&n)));
    same(
        "colon: translation against a context",
        &cps_colon(m, &cont, CpsVariant::Modified),
        &neg.command(&vfs_translate_in(m, &x(), &n)),
    )?;
    let mv = vfs_translate(m);
    same("commands: VFS then negative equals CPS", &cps_command(m, CpsVariant::Modified), &neg.command(&mv))?;
    same("terms: VFS then negative equals CPS", &cps_translate(m, CpsVariant::Modified), &neg.term(&mv))
}

/// The four decomposition equalities for one source term.
pub fn check_decomposition(m: &TermC) -> PropertyReport {
    let mut r = PropertyReport::new("decomposition");
    let neg = NegativeTranslation::standard();
    let cfg = SuiteConfig { samples: Some(1), ..SuiteConfig::default() };
    let m = m.clone();
    run_property(&cfg, &mut r, "decomposition", 1, |_| Some(m.clone()), |m: &TermC| decomposition(&neg, m, m));
    r
}

pub fn thm2(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm2-decomposition");
    let neg = cfg.negative();
    run_property(
        cfg,
        &mut r,
        "four decomposition equalities",
        500,
        |rng| Some((source(&cfg.gen, rng, 20), source(&cfg.gen, rng, 20))),
        |(m, n): &(TermC, TermC)| decomposition(&neg, m, n),
    );
    r
}

// ---------------------------------------------------------------------------
// VFS and the modified CPS target

pub fn thm3_roundtrip(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm3-roundtrip");
    let neg = cfg.negative();
    let max = cfg.gen.max_size;
    run_property(
        cfg,
        &mut r,
        "VFS terms survive the round trip",
        1000,
        |rng| Some(sized(rng, max, gen_vfs)),
        |m: &TermVfs| {
            let p = neg.term(m);
            must("linearity", audit(p.body(), CpsMode::Cps))?;
            same("term round trip", m, &must("inverse of a term", inverse_negative(&p))?)?;
            same("command round trip", m, &must("inverse of a command", inverse_command(&neg.command(m)))?)?;
            let mut vals = Vec::new();
            values_vfs(m, &mut vals);
            for v in &vals {
                same("value round trip", v, &must("inverse of a value", inverse_value(&neg.value(v)))?)?;
            }
            Ok(())
        },
    );
    run_property(
        cfg,
        &mut r,
        "CPS terms survive the round trip",
        1000,
        |rng| Some(sized(rng, max, |rng, s| gen_cps(rng, s, false))),
        |m: &Command| {
            given(audit(m, CpsMode::Cps))?;
            let p = TermCps(Box::new(m.clone()));
            same("term round trip", &p, &neg.term(&must("inverse of a term", inverse_negative(&p))?))?;
            same("command round trip", m, &neg.command(&must("inverse of a command", inverse_command(m))?))?;
            let mut vals = Vec::new();
            values_cps(m, &mut vals);
            for v in &vals {
                same("value round trip", v, &neg.value(&must("inverse of a value", inverse_value(v))?))?;
            }
            Ok(())
        },
    );
    r
}

pub fn thm3_simulation(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm3-simulation");
    let neg = cfg.negative();
    let max = cfg.gen.max_size;
    let cps = Cps::cps();
    run_property(
        cfg,
        &mut r,
        "VFS steps correspond one to one",
        1000,
        |rng| Some(sized(rng, max, gen_vfs)),
        |m: &TermVfs| same_steps("successors", &Vfs, m, &cps, &neg.command(m), |n| Ok(neg.command(n))),
    );
    run_property(
        cfg,
        &mut r,
        "CPS steps correspond one to one",
        1000,
        |rng| Some(sized(rng, max, |rng, s| gen_cps(rng, s, false))),
        |m: &Command| {
            given(audit(m, CpsMode::Cps))?;
            let back = must("inverse", inverse_command(m))?;
            same_steps("successors", &cps, m, &Vfs, &back, inverse_command)
        },
    );
    r
}

// ---------------------------------------------------------------------------
// Direct-style sub-kernels

fn ves_input(t: &TermC) -> std::result::Result<TermVes, Outcome> {
    given(TermVes::new(t.clone()))
}

fn ces_input(t: &TermC) -> std::result::Result<TermCes, Outcome> {
    given(TermCes::new(t.clone()))
}

fn ves_contexts(t: &TermC, out: &mut Vec<(Name, TermC)>) {
    if let TermC::Let(v, b, c) = t {
        if b.is_value() {
            out.push((v.clone(), (**c).clone()));
        }
    }
    for c in t.children() {
        ves_contexts(c, out);
    }
}

pub fn thm4_ves_vfs(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm4-ves-vfs");
    let max = bounded(cfg, 15);
    run_property(
        cfg,
        &mut r,
        "value enclosed terms survive the round trip",
        1000,
        |rng| Some(sized(rng, max, gen_ves)),
        |m: &TermC| {
            let t = ves_input(m)?;
            same("terms", m, theta(&psi(&t)).as_c())?;
            let mut vals = Vec::new();
            values_c(m, &mut vals);
            for v in &vals {
                same("values", v, &theta_v(&psi_v(v)))?;
            }
            let mut ctxs = Vec::new();
            ves_contexts(m, &mut ctxs);
            for (v, c) in &ctxs {
                same("contexts", c, &theta_x(v, &psi_x(v, c)))?;
            }
            Ok(())
        },
    );
    run_property(
        cfg,
        &mut r,
        "VFS terms survive the round trip",
        1000,
        |rng| Some(sized(rng, max, gen_vfs)),
        |m: &TermVfs| {
            let t = theta(m);
            ensure("image is value enclosed", is_ves(t.as_c()), "value enclosed style", &t)?;
            same("terms", m, &psi(&t))
        },
    );
    run_property(
        cfg,
        &mut r,
        "value enclosed steps correspond one to one",
        1000,
        |rng| Some(sized(rng, max, gen_ves)),
        |m: &TermC| {
            let t = ves_input(m)?;
            same_steps("successors", &Ves, &t, &Vfs, &psi(&t), |n| Ok(psi(n)))
        },
    );
    run_property(
        cfg,
        &mut r,
        "VFS steps correspond one to one",
        1000,
        |rng| Some(sized(rng, max, gen_vfs)),
        |m: &TermVfs| same_steps("successors", &Vfs, m, &Ves, &theta(m), |n| Ok(theta(n))),
    );
    r
}

pub fn thm4_ces_cnf(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm4-ces-cnf");
    let max = bounded(cfg, 15);
    run_property(
        cfg,
        &mut r,
        "continuation enclosing terms survive the round trip",
        1000,
        |rng| Some(sized(rng, max, gen_ces)),
        |m: &TermC| {
            let t = ces_input(m)?;
            let u = upsilon(&t);
            ensure("image is a normal form", is_cnf(&u), "commutative normal form", &u)?;
            same("terms", m, must("inverse", phi(&u))?.as_c())
        },
    );
    run_property(
        cfg,
        &mut r,
        "commutative normal forms survive the round trip",
        1000,
        |rng| Some(sized(rng, max, |rng, s| gen_ga(rng, s, true))),
        |m: &TermGa| {
            let t = given(phi(m))?;
            same("terms", m, &upsilon(&t))
        },
    );
    run_property(
        cfg,
        &mut r,
        "continuation enclosing steps correspond one to one",
        1000,
        |rng| Some(sized(rng, max, gen_ces)),
        |m: &TermC| {
            let t = ces_input(m)?;
            same_steps("successors", &Ces, &t, &Cnf, &upsilon(&t), |n| Ok(upsilon(n)))
        },
    );
    run_property(
        cfg,
        &mut r,
        "normal form steps correspond one to one",
        1000,
        |rng| Some(sized(rng, max, |rng, s| gen_ga(rng, s, true))),
        |m: &TermGa| {
            let t = given(phi(m))?;
            same_steps("successors", &Cnf, m, &Ces, &t, phi)
        },
    );
    r
}

pub fn thm5(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("thm5-cnf-cps");
    let max = bounded(cfg, 15);
    let small = Cps::small();
    let cnf = |rng: &mut Rng64| Some(sized(rng, max, |rng, s| gen_ga(rng, s, true)));
    let cmd = |rng: &mut Rng64| Some(sized(rng, max, |rng, s| gen_cps(rng, s, true)));
    run_property(cfg, &mut r, "normal forms survive the round trip", 1000, cnf, |m: &TermGa| {
        given(if is_cnf(m) { Ok(()) } else { Err(crate::error::Error::Malformed(String::new())) })?;
        let c = cnf_negative_command(m);
        must("linearity", audit(&c, CpsMode::Small))?;
        same("terms", m, &must("inverse", cps_inverse_command(&c))?)
    });
    run_property(cfg, &mut r, "small CPS commands survive the round trip", 1000, cmd, |m: &Command| {
        given(audit(m, CpsMode::Small))?;
        same("commands", m, &cnf_negative_command(&must("inverse", cps_inverse_command(m))?))
    });
    run_property(cfg, &mut r, "normal form steps correspond one to one", 1000, cnf, |m: &TermGa| {
        given(if is_cnf(m) { Ok(()) } else { Err(crate::error::Error::Malformed(String::new())) })?;
        same_steps("successors", &Cnf, m, &small, &cnf_negative_command(m), |n| Ok(cnf_negative_command(n)))
    });
    run_property(cfg, &mut r, "small CPS steps correspond one to one", 1000, cmd, |m: &Command| {
        given(audit(m, CpsMode::Small))?;
        let back = must("inverse", cps_inverse_command(m))?;
        same_steps("successors", &small, m, &Cnf, &back, cps_inverse_command)
    });
    run_property(
        cfg,
        &mut r,
        "left substitution translates to continuation substitution",
        500,
        |rng| Some((sized(rng, max, |rng, s| gen_ga(rng, s, true)), sized(rng, max, |rng, s| gen_ga(rng, s, true)))),
        |(n, m): &(TermGa, TermGa)| {
            if !is_cnf(n) || !is_cnf(m) {
                return Err(Outcome::Discard);
            }
            let lhs = cnf_negative_command(&left_subst(n, &x(), m));
            let k = Cont::KLam(x(), Box::new(cnf_negative_command(m)));
            same("colon-negative", &cnf_negative_command(n).subst_k_fused(&k), &lhs)
        },
    );
    r
}

// ---------------------------------------------------------------------------
// Reflections among the sequent calculi

pub fn refl_ljq_q(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("refl-ljq-q");
    let max = bounded(cfg, 15);
    let fuel = cfg.witness_fuel;
    let ljq = Ljq::modified();
    let q = Q::full();
    let gq = |rng: &mut Rng64| Some(sized(rng, max, |rng, s| gen_q(rng, s, false)));
    let gl = |rng: &mut Rng64| Some(sized(rng, max, gen_ljq));
    run_property(cfg, &mut r, "one-cut steps are three-cut reductions", 300, gq, |m: &TermQ| {
        for (_, _, n) in successors(&q, m, None) {
            reaches("inclusion simulates", &ljq, &embed_q(m), &embed_q(&n), fuel)?;
        }
        Ok(())
    });
    run_property(cfg, &mut r, "three-cut steps map to one-cut reductions", 300, gl, |m: &TermL| {
        if !explicit_cuts_on_abstractions(m) {
            return Err(Outcome::Discard);
        }
        let sm = smp(m);
        for (_, _, n) in successors(&ljq, m, None) {
            reaches("simplification simulates", &q, &sm, &smp(&n), fuel)?;
        }
        Ok(())
    });
    run_property(cfg, &mut r, "terms reduce to their simplification", 300, gl, |m: &TermL| {
        if !explicit_cuts_on_abstractions(m) {
            return Err(Outcome::Discard);
        }
        reaches("reduces to simplification", &ljq, m, &embed_q(&smp(m)), fuel)
    });
    run_property(cfg, &mut r, "simplification fixes one-cut terms", 300, gq, |m: &TermQ| {
        same("identity", m, &smp(&embed_q(m)))
    });
    r
}

pub fn refl_q_lnf(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("refl-q-lnf");
    let max = bounded(cfg, 15);
    let fuel = cfg.witness_fuel;
    let q = Q::full();
    let gq = |rng: &mut Rng64| Some(sized(rng, max, |rng, s| gen_q(rng, s, false)));
    let gn = |rng: &mut Rng64| Some(sized(rng, max, |rng, s| gen_q(rng, s, true)));
    run_property(cfg, &mut r, "kernel steps are one-cut reductions", 300, gn, |m: &TermQ| {
        for (_, _, n) in successors(&Lnf, m, None) {
            reaches("inclusion simulates", &q, m, &n, fuel)?;
        }
        Ok(())
    });
    run_property(cfg, &mut r, "one-cut steps map to kernel reductions", 300, gq, |m: &TermQ| {
        let km = knl(m);
        for (_, _, n) in successors(&q, m, None) {
            reaches("normalization simulates", &Lnf, &km, &knl(&n), fuel)?;
        }
        Ok(())
    });
    run_property(cfg, &mut r, "terms reduce to their kernel form by conversions", 300, gq, |m: &TermQ| {
        reaches("reduces to kernel form", &Q::pi(), m, &knl(m), fuel)
    });
    run_property(cfg, &mut r, "kernel form fixes kernel terms", 300, gn, |m: &TermQ| {
        if !is_lnf(m) {
            return Err(Outcome::Discard);
        }
        same("identity", m, &knl(m))
    });
    r
}

// ---------------------------------------------------------------------------
// Typing

/// A typed term and a second term typed under an extra `z` of the first's type.
fn typed_pair(cfg: &GenConfig, rng: &mut Rng64) -> Option<(TermC, TermC)> {
    let ctx = base_context(cfg);
    let a = random_type(cfg, rng, 2);
    let m = gen_typed_c(cfg, rng, &ctx, &a).ok()?;
    let b = random_type(cfg, rng, 2);
    let n = gen_typed_c(cfg, rng, &ctx.clone().with(z(), a), &b).ok()?;
    Some((m, n))
}

struct Typed {
    ctx: TypingContext,
    a: SimpleType,
    ctx_z: TypingContext,
    b: SimpleType,
}

fn types_of(cfg: &GenConfig, m: &TermC, n: &TermC) -> std::result::Result<Typed, Outcome> {
    let ctx = base_context(cfg);
    let a = given(instantiate_c(&ctx, m, &atom()))?;
    let ctx_z = ctx.clone().with(z(), a.clone());
    let b = given(instantiate_c(&ctx_z, n, &atom()))?;
    Ok(Typed { ctx, a, ctx_z, b })
}

fn dagger(ctx: &TypingContext) -> TypingContext {
    ctx.map_types(SimpleType::cps_value)
}

/// Types of the bound term and the body of `let v = b in c`, inferred together.
fn let_types(ctx: &TypingContext, v: &Name, b: &TermC, c: &TermC) -> crate::error::Result<(SimpleType, SimpleType)> {
    let mut u = Unifier::new(ctx);
    let tb = infer_c(&mut u, b)?;
    u.bind(v, tb.clone());
    let tc = infer_c(&mut u, c)?;
    Ok((u.ground_or(&tb, &atom()), u.ground_or(&tc, &atom())))
}

/// Walks the value lets of a value enclosed term, checking each context's typing image.
fn psi_typing(ctx: &TypingContext, t: &TermC) -> Check {
    if let TermC::Let(v, b, c) = t {
        if b.is_value() {
            let (av, bt) = must("let typed", let_types(ctx, v, b, c))?;
            let inner = ctx.clone().with(v.clone(), av);
            let plugged = TermVfs::CutC(ValueVfs::Var(v.clone()), psi_x(v, c));
            must("context image keeps its type", check_vfs(&inner, &plugged, &bt))?;
            return psi_typing(&inner, c);
        }
    }
    Ok(())
}

pub fn typing_admissible(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("typing-admissible");
    let g = &cfg.gen;
    let neg = cfg.negative();
    run_property(
        cfg,
        &mut r,
        "translations are typed",
        520,
        |rng| typed_pair(g, rng),
        |(m, n): &(TermC, TermC)| {
            let Typed { ctx, a, ctx_z, b } = types_of(g, m, n)?;
            // VFS translation, no type translation
            let mv = vfs_translate(m);
            let nv = vfs_translate(n);
            must("VFS term", check_vfs(&ctx, &mv, &a))?;
            must("VFS term", check_vfs(&ctx_z, &nv, &b))?;
            if m.is_value() {
                must("VFS value", check_vfs_v(&ctx, &must("value", vfs_translate_value(m))?, &a))?;
            }
            must("VFS against a context", check_vfs(&ctx, &vfs_translate_in(m, &z(), &nv), &b))?;
            // CPS translation, both variants
            let cd = dagger(&ctx);
            let czd = dagger(&ctx_z);
            for variant in [CpsVariant::Modified, CpsVariant::Underlined] {
                must("CPS term", check_cps_term(&cd, &cps_translate(m, variant), &a.cps_computation()))?;
                if m.is_value() {
                    must("CPS value", check_cps_value(&cd, &must("value", cps_value(m, variant))?, &a.cps_value()))?;
                }
                let k = Cont::KLam(z(), Box::new(cps_command(n, variant)));
                must("CPS body", check_cps_command(&czd, &b.cps_value(), &cps_command(n, variant)))?;
                must("CPS colon", check_cps_command(&cd, &b.cps_value(), &cps_colon(m, &k, variant)))?;
            }
            // negative translation
            must("negative term", check_cps_term(&cd, &neg.term(&mv), &a.cps_computation()))?;
            must("negative command", check_cps_command(&cd, &a.cps_value(), &neg.command(&mv)))?;
            let c = FormalContext::Bind(z(), Box::new(nv.clone()));
            must("formal context", check_vfs(&ctx_z, &TermVfs::CutC(ValueVfs::Var(z()), c.clone()), &b))?;
            must("negative context", check_cps_context(&cd, &b.cps_value(), &a.cps_value(), &neg.context(&c)))?;
            // direct style
            let ves = theta(&mv);
            must("value enclosed image", check_c(&ctx, ves.as_c(), &a))?;
            psi_typing(&ctx, ves.as_c())?;
            let cnf = must("commutative normal form", pi_normalize_ga(&ga_of_c(m), 10_000))?;
            must("generalized application", check_ga(&ctx, &cnf, &a))?;
            must("small CPS", check_cps_command(&cd, &a.cps_value(), &cnf_negative_command(&cnf)))?;
            let ces = must("continuation enclosing image", phi(&cnf))?;
            must("continuation enclosing image", check_c(&ctx, ces.as_c(), &a))
        },
    );
    r
}

pub fn subject_reduction(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("subject-reduction");
    let g = &cfg.gen;
    let gen = |rng: &mut Rng64| typed_pair(g, rng);
    type P = (TermC, TermC);
    run_property(cfg, &mut r, "source calculus", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        preserved("source", &LambdaC::full(), m, |s| check_c(&t.ctx, s, &t.a))
    });
    run_property(cfg, &mut r, "ANF", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        let a = must("admin", admin_normalize(m))?.last().clone();
        preserved("ANF", &Anf::full(), &a, |s| check_c(&t.ctx, s, &t.a))
    });
    run_property(cfg, &mut r, "VFS", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        preserved("VFS", &Vfs, &vfs_translate(m), |s| check_vfs(&t.ctx, s, &t.a))
    });
    run_property(cfg, &mut r, "one-cut calculus", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        let q = TermQ::Cut(Box::new(embed_lnf(&vfs_translate(m))), z(), Box::new(embed_lnf(&vfs_translate(n))));
        preserved("one-cut", &Q::full(), &q, |s| check_q(&t.ctx, s, &t.b))
    });
    run_property(cfg, &mut r, "three-cut calculus", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        let q = TermQ::Cut(Box::new(embed_lnf(&vfs_translate(m))), z(), Box::new(embed_lnf(&vfs_translate(n))));
        preserved("three-cut", &Ljq::modified(), &embed_q(&q), |s| check_ljq(&t.ctx, s, &t.b))
    });
    run_property(cfg, &mut r, "LNF", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        preserved("LNF", &Lnf, &embed_lnf(&vfs_translate(m)), |s| check_q(&t.ctx, s, &t.a))
    });
    run_property(cfg, &mut r, "original CPS target", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        let cd = dagger(&t.ctx);
        let c = cps_command(m, CpsVariant::Underlined);
        preserved("RCPS", &Cps::rcps(), &c, |s| check_cps_command(&cd, &t.a.cps_value(), s))
    });
    run_property(cfg, &mut r, "modified CPS target", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        let cd = dagger(&t.ctx);
        let c = cps_command(m, CpsVariant::Modified);
        preserved("CPS", &Cps::cps(), &c, |s| check_cps_command(&cd, &t.a.cps_value(), s))
    });
    run_property(cfg, &mut r, "value enclosed style", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        preserved("VES", &Ves, &theta(&vfs_translate(m)), |s| check_c(&t.ctx, s.as_c(), &t.a))
    });
    run_property(cfg, &mut r, "generalized applications", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        preserved("GA", &Ga, &ga_of_c(m), |s| check_ga(&t.ctx, s, &t.a))
    });
    run_property(cfg, &mut r, "commutative normal forms", 520, gen, |(m, n): &P| {
        let t = types_of(g, m, n)?;
        let cnf = must("normal form", pi_normalize_ga(&ga_of_c(m), 10_000))?;
        preserved("CNF", &Cnf, &cnf, |s| check_ga(&t.ctx, s, &t.a))?;
        let ces = must("continuation enclosing", phi(&cnf))?;
        preserved("CES", &Ces, &ces, |s| check_c(&t.ctx, s.as_c(), &t.a))?;
        let cd = dagger(&t.ctx);
        preserved("small CPS", &Cps::small(), &cnf_negative_command(&cnf), |s| {
            check_cps_command(&cd, &t.a.cps_value(), s)
        })
    });
    r
}


// ---------------------------------------------------------------------------
// Linearity of the covariable

fn audited(property: &str, sys: &Cps, m: &Command) -> Check {
    must(property, audit(m, sys.mode))?;
    for (r, p, n) in successors(sys, m, None) {
        if let Err(e) = audit(&n, sys.mode) {
            return Err(fail(property, format!("{m} -> {n} by {r} at {p} stays linear"), e));
        }
    }
    Ok(())
}

pub fn linearity(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("linearity");
    let neg = cfg.negative();
    let max = cfg.gen.max_size;
    run_property(
        cfg,
        &mut r,
        "translations of source terms",
        500,
        |rng| Some(source(&cfg.gen, rng, 20)),
        |m: &TermC| {
            audited("modified CPS", &Cps::cps(), &cps_command(m, CpsVariant::Modified))?;
            audited("original CPS", &Cps::rcps(), &cps_command(m, CpsVariant::Underlined))?;
            audited("negative of VFS", &Cps::cps(), &neg.command(&vfs_translate(m)))?;
            let cnf = must("normal form", pi_normalize_ga(&ga_of_c(m), 10_000))?;
            audited("small CPS", &Cps::small(), &cnf_negative_command(&cnf))
        },
    );
    run_property(
        cfg,
        &mut r,
        "negative translations of VFS terms",
        500,
        |rng| Some(sized(rng, max, gen_vfs)),
        |m: &TermVfs| audited("negative", &Cps::cps(), &neg.command(m)),
    );
    run_property(
        cfg,
        &mut r,
        "CPS steps",
        500,
        |rng| Some(sized(rng, max, |rng, s| gen_cps(rng, s, false))),
        |m: &Command| {
            given(audit(m, CpsMode::Cps))?;
            audited("steps", &Cps::cps(), m)
        },
    );
    r
}

// ---------------------------------------------------------------------------
// Lemmas

pub fn lemma_anf(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("lemma-anf");
    let fuel = cfg.witness_fuel;
    let anf = |rng: &mut Rng64, n: usize| admin_normalize(&sized(rng, n, gen_c)).ok().map(|t| t.last().clone());
    run_property(
        cfg,
        &mut r,
        "admin normalization is idempotent",
        500,
        |rng| Some(source(&cfg.gen, rng, 20)),
        |m: &TermC| {
            let nf = must("normalize", admin_normalize(m))?;
            nf.replay(&LambdaC::admin()).map_err(|e| fail("trace replays", "replayable trace", e))?;
            let t = nf.last();
            ensure("output is ANF", is_anf(t), "ANF", t)?;
            let again = must("normalize", admin_normalize(t))?;
            ensure("idempotent", again.is_empty(), "no steps", again.len())
        },
    );
    run_property(
        cfg,
        &mut r,
        "derived let is the assoc normal form",
        500,
        |rng| Some((anf(rng, 12)?, anf(rng, 12)?)),
        |(m, p): &(TermC, TermC)| {
            if !is_anf(m) || !is_anf(p) {
                return Err(Outcome::Discard);
            }
            let t = TermC::Let(y(), Box::new(m.clone()), Box::new(p.clone()));
            let nf = must("normalize", admin_normalize(&t))?;
            same("derived let", nf.last(), &let_compose(&y(), m, p))
        },
    );
    run_property(
        cfg,
        &mut r,
        "derived let of a variable reduces back",
        300,
        |rng| anf(rng, 12),
        |m: &TermC| {
            if !is_anf(m) {
                return Err(Outcome::Discard);
            }
            let v = fresh_name("x", &m.all_names());
            let t = let_compose(&v, m, &TermC::Var(v.clone()));
            reaches("eta lemma", &Anf::full(), &t, m, fuel)
        },
    );
    run_property(
        cfg,
        &mut r,
        "kernel redexes do not overlap",
        500,
        |rng| anf(rng, 20),
        |m: &TermC| {
            let rs = Anf::full().redexes(m);
            for (_, p) in &rs {
                let at: Vec<Rule> = rs.iter().filter(|(_, q)| q == p).map(|(r, _)| *r).collect();
                let both = |a: Rule, b: Rule| at.contains(&a) && at.contains(&b);
                ensure("no overlap", !both(Rule::BV, Rule::BVPrime) && !both(Rule::BVPrime, Rule::EtaLet), "one rule", format!("{at:?} at {p}"))?;
            }
            Ok(())
        },
    );
    r
}

pub fn lemma_q(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("lemma-q");
    let max = bounded(cfg, 15);
    let fuel = cfg.witness_fuel;
    let gq = |rng: &mut Rng64| Some(sized(rng, max, |rng, s| gen_q(rng, s, false)));
    run_property(
        cfg,
        &mut r,
        "substitutions commute",
        500,
        |rng| Some((sized(rng, max, |rng, s| gen_q(rng, s, false)), sized(rng, 6, |rng, s| gen_q(rng, s, false)))),
        |(m, w): &(TermQ, TermQ)| {
            let TermQ::Ret(w) = w else { return Err(Outcome::Discard) };
            let vy = ValueQ::Var(y());
            let lhs = m.subst(&z(), w).subst(&x(), &vy);
            let rhs = m.subst(&x(), &vy).subst(&z(), &w.subst(&x(), &vy));
            same("sub-of-sub", &rhs, &lhs)
        },
    );
    run_property(
        cfg,
        &mut r,
        "simplification commutes with renaming",
        500,
        |rng| Some(sized(rng, max, gen_ljq)),
        |m: &TermL| same("maps-of-subs", &smp(m).rename(&x(), &y()), &smp(&m.rename(&x(), &y()))),
    );
    run_property(cfg, &mut r, "overlapping rules agree", 500, gq, |m: &TermQ| {
        let TermQ::Ret(v) = m else { return Err(Outcome::Discard) };
        let t = TermQ::Cut(Box::new(TermQ::Ret(v.clone())), x(), Box::new(TermQ::Ret(ValueQ::Var(x()))));
        let a = contract_q(&t, Rule::SigmaV);
        let b = contract_q(&t, Rule::EtaCut);
        ensure("sigma and eta agree", a.is_some() && a == b, format!("{b:?}"), format!("{a:?}"))?;
        let li = TermQ::LIntro(y(), v.clone(), z(), Box::new(TermQ::Ret(ValueQ::Var(z()))));
        let s = li.subst(&y(), &ValueQ::Var(x()));
        ensure("variable into head stays a left introduction", matches!(s, TermQ::LIntro(..)), "left introduction", &s)
    });
    run_property(cfg, &mut r, "kernel form is normal and idempotent", 500, gq, |m: &TermQ| {
        let k = knl(m);
        ensure("kernel", is_lnf(&k), "LNF", &k)?;
        ensure("no conversions left", Q::pi().redexes(&k).is_empty(), "commutative normal", &k)?;
        same("idempotent", &k, &knl(&k))
    });
    run_property(
        cfg,
        &mut r,
        "cut against identity reduces back",
        300,
        |rng| Some(sized(rng, max, |rng, s| gen_q(rng, s, true))),
        |m: &TermQ| {
            if !is_lnf(m) {
                return Err(Outcome::Discard);
            }
            let v = fresh_name("y", &m.all_names());
            let t = cutvc(m, &v, &TermQ::Ret(ValueQ::Var(v.clone())));
            reaches("id-LNF", &Lnf, &t, m, fuel)
        },
    );
    r
}

pub fn lemma_vfs(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("lemma-vfs");
    let max = bounded(cfg, 15);
    let fuel = cfg.witness_fuel;
    let gv = |rng: &mut Rng64| Some(sized(rng, max, gen_vfs));
    run_property(cfg, &mut r, "cut against identity reduces back", 300, gv, |m: &TermVfs| {
        let v = fresh_name("z", &m.all_names());
        let t = colon_vfs(m, &FormalContext::Bind(v.clone(), Box::new(TermVfs::Ret(ValueVfs::Var(v)))));
        reaches("vfs-id", &Vfs, &t, m, fuel)
    });
    run_property(
        cfg,
        &mut r,
        "translation commutes with substitution",
        500,
        |rng| Some((source(&cfg.gen, rng, 15), sized(rng, 6, gen_value_c))),
        |(m, v): &(TermC, TermC)| {
            if !v.is_value() {
                return Err(Outcome::Discard);
            }
            let lhs = vfs_translate(&m.subst(&x(), v));
            let rhs = vfs_translate(m).subst(&x(), &must("value", vfs_translate_value(v))?);
            same("vfs-subs", &rhs, &lhs)
        },
    );
    run_property(cfg, &mut r, "embedding into the kernel simulates steps", 500, gv, |m: &TermVfs| {
        let e = embed_lnf(m);
        ensure("embedding is LNF", is_lnf(&e), "LNF", &e)?;
        same("embedding round trip", m, &must("from LNF", from_lnf(&e))?)?;
        let lnf_succ: Vec<TermQ> = successors(&Lnf, &e, None).into_iter().map(|(_, _, n)| n).collect();
        for (_, _, n) in successors(&Vfs, m, None) {
            let en = embed_lnf(&n);
            if !lnf_succ.iter().any(|s| s.alpha_eq(&en)) {
                return Err(fail("one kernel step", format!("{e} -> {en}"), listing(&lnf_succ)));
            }
        }
        Ok(())
    });
    r
}

pub fn lemma_cps(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("lemma-cps");
    let neg = cfg.negative();
    let max = bounded(cfg, 15);
    let gv = |rng: &mut Rng64| Some((sized(rng, max, gen_vfs), sized(rng, max, gen_vfs)));
    run_property(cfg, &mut r, "composition translates to continuation substitution", 500, gv, |(m, n): &(TermVfs, TermVfs)| {
        let lhs = neg.command(&colon_vfs(m, &FormalContext::Bind(y(), Box::new(n.clone()))));
        let rhs = neg.command(m).subst_k(&Cont::KLam(y(), Box::new(neg.command(n))));
        same("cong-col", &rhs, &lhs)
    });
    run_property(cfg, &mut r, "cut translation is uniform in the context", 500, gv, |(m, _): &(TermVfs, TermVfs)| {
        let TermVfs::CutC(v, c) = m else { return Err(Outcome::Discard) };
        let ctx = neg.context(c);
        let val = neg.value(v);
        same("uniform clause", &neg.command(m), &fill_cps(&ctx, &val))?;
        let redex = Command::AppK(context_cont(&ctx), val.clone());
        let stepped = must("sigma step", step_cps(&redex, Rule::SigmaV, &Path::root(), CpsMode::Cps))?;
        same("context continuation", &fill_cps(&ctx, &val), &stepped)
    });
    run_property(
        cfg,
        &mut r,
        "structural substitution by a continuation hole is ordinary substitution",
        500,
        |rng| Some((sized(rng, max, |rng, s| gen_cps(rng, s, false)), sized(rng, 8, |rng, s| gen_cps(rng, s, false)))),
        |(m, n): &(Command, Command)| {
            let k = Cont::KLam(z(), Box::new(n.clone()));
            same("structural", &m.subst_k(&k), &struct_subst(&ContextCps::KHole(k.clone()), m))
        },
    );
    run_property(
        cfg,
        &mut r,
        "the combined step equals two substitutions",
        500,
        |rng| Some((sized(rng, max, |rng, s| gen_cps(rng, s, false)), sized(rng, 8, |rng, s| gen_cps(rng, s, false)))),
        |(body, n): &(Command, Command)| {
            let w = ValueCps::Var(y());
            let k = Cont::KLam(z(), Box::new(n.clone()));
            let lam = ValueCps::Lam(x(), Box::new(TermCps(Box::new(body.clone()))));
            let redex = Command::AppVWK(lam, w.clone(), k.clone());
            given(audit(&redex, CpsMode::Cps))?;
            let s1 = must("B_v", step_cps(&redex, Rule::BV, &Path::root(), CpsMode::Cps))?;
            let s2 = must("sigma_v", step_cps(&s1, Rule::SigmaV, &Path::root(), CpsMode::Cps))?;
            same("two routes", &body.subst(&x(), &w).subst_k(&k), &s2)
        },
    );
    r
}

/// The four edges of the square relating the two expansions of `VW`.
fn expansion_square(v: &TermC, w: &TermC) -> Check {
    if !v.is_value() || !w.is_value() {
        return Err(Outcome::Discard);
    }
    let mut avoid = v.all_names();
    avoid.extend(w.all_names());
    let xv = fresh_name("x", &avoid);
    avoid.insert(xv.clone());
    let yv = fresh_name("y", &avoid);
    let bx = |t: TermC| Box::new(t);
    let vw = TermC::App(bx(v.clone()), bx(w.clone()));
    let xw = TermC::App(bx(TermC::Var(xv.clone())), bx(w.clone()));
    let upper_left = TermC::Let(xv.clone(), bx(v.clone()), bx(xw.clone()));
    let lower_right = TermC::Let(yv.clone(), bx(vw.clone()), bx(TermC::Var(yv.clone())));
    let lower_left = TermC::Let(xv.clone(), bx(v.clone()), bx(TermC::Let(yv.clone(), bx(xw), bx(TermC::Var(yv)))));
    let root = Path::root();
    same("let_v edge", &vw, &must("let_v", step_c(&upper_left, Rule::LetV, &root))?)?;
    same("eta_let edge", &vw, &must("eta_let", step_c(&lower_right, Rule::EtaLet, &root))?)?;
    same("lower let_v edge", &lower_right, &must("let_v", step_c(&lower_left, Rule::LetV, &root))?)?;
    same("left eta_let edge", &upper_left, &must("eta_let", step_c(&lower_left, Rule::EtaLet, &root.child(1)))?)?;
    if is_ves_value(v) && is_ves_value(w) {
        ensure("lower left is value enclosed", is_ves(&lower_left), "value enclosed style", &lower_left)?;
    }
    if [v, w].iter().all(|t| crate::direct_style::is_ces(t)) {
        ensure("lower right is continuation enclosing", is_ces(&lower_right), "continuation enclosing style", &lower_right)?;
    }
    Ok(())
}

/// Checks the expansion square for one pair of values.
pub fn expansion_diagram_check(v: &TermC, w: &TermC) -> PropertyReport {
    let mut r = PropertyReport::new("expansion-diagram");
    let cfg = SuiteConfig { samples: Some(1), ..SuiteConfig::default() };
    let input = (v.clone(), w.clone());
    run_property(&cfg, &mut r, "expansion square", 1, |_| Some(input.clone()), |(v, w): &(TermC, TermC)| {
        expansion_square(v, w)
    });
    r
}

pub fn lemma_direct(cfg: &SuiteConfig) -> PropertyReport {
    let mut r = PropertyReport::new("lemma-direct");
    let max = bounded(cfg, 15);
    run_property(
        cfg,
        &mut r,
        "translation of the derived let is left substitution",
        500,
        |rng| Some((sized(rng, max, gen_ces), sized(rng, max, gen_ces))),
        |(m, p): &(TermC, TermC)| {
            let (tm, tp) = (ces_input(m)?, ces_input(p)?);
            let l = must("derived let", TermCes::new(ces_let_compose(&y(), m, p)))?;
            same("upsilon-LET", &left_subst(&upsilon(&tm), &y(), &upsilon(&tp)), &upsilon(&l))
        },
    );
    run_property(
        cfg,
        &mut r,
        "inverse of left substitution is the derived let",
        500,
        |rng| Some((sized(rng, max, |rng, s| gen_ga(rng, s, true)), sized(rng, max, |rng, s| gen_ga(rng, s, true)))),
        |(m, p): &(TermGa, TermGa)| {
            let (fm, fp) = (given(phi(m))?, given(phi(p))?);
            let lhs = must("phi", phi(&left_subst(m, &x(), p)))?;
            same("phi-LET", &ces_let_compose(&x(), fm.as_c(), fp.as_c()), lhs.as_c())
        },
    );
    run_property(
        cfg,
        &mut r,
        "expansion square commutes",
        500,
        |rng| Some((sized(rng, 6, gen_value_c), sized(rng, 6, gen_value_c))),
        |(v, w): &(TermC, TermC)| expansion_square(v, w),
    );
    run_property(
        cfg,
        &mut r,
        "commutative conversion reaches the normal form",
        500,
        |rng| Some(sized(rng, max, |rng, s| gen_ga(rng, s, false))),
        |m: &TermGa| {
            let n = must("normalize", pi_normalize_ga(m, 10_000))?;
            ensure("normal form", is_cnf(&n), "commutative normal form", &n)?;
            ensure("no conversions left", Ga.redexes(&n).is_empty(), "normal", &n)?;
            Ok(())
        },
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_c::{app, lam, var};

    #[test]
    fn decomposition_examples() {
        for m in [var("x"), app(var("v"), var("w")), app(lam("x", var("x")), var("y"))] {
            let r = check_decomposition(&m);
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn expansion_square_examples() {
        assert!(expansion_diagram_check(&var("v"), &var("w")).passed());
        let r = expansion_diagram_check(&lam("x", var("x")), &var("w"));
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn ga_of_c_types() {
        let cfg = GenConfig::default();
        let ctx = base_context(&cfg);
        let t = app(var("f"), var("x"));
        check_ga(&ctx, &ga_of_c(&t), &atom()).unwrap();
    }
}
