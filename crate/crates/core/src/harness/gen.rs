//! Random term generation: type-directed for the source calculus, grammar-driven
//! for every other calculus.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cps::{Command, Cont, TermCps, ValueCps};
use crate::direct_style::TermGa;
use crate::error::{Error, Result};
use crate::lambda_c::{contract_c, TermC};
use crate::ljq::{TermL, TermQ, ValueL, ValueQ};
use crate::name::{fresh_name, Name};
use crate::rewrite::{Rule, Syntax};
use crate::types::{SimpleType, TypingContext};
use crate::vfs::{FormalContext, TermVfs, ValueVfs};

pub type Rng64 = ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Upper bound on term size in nodes.
    pub max_size: usize,
    pub atom_pool: Vec<String>,
    /// Probability of preferring a value when both are possible.
    pub value_bias: f64,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> GenConfig {
        GenConfig { max_size: 20, atom_pool: vec!["a".into()], value_bias: 0.3, seed: 0 }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_size == 0 {
            return Err(Error::GenerationFailed("max_size must be at least 1".into()));
        }
        if self.atom_pool.is_empty() {
            return Err(Error::GenerationFailed("atom pool is empty".into()));
        }
        if !(0.0..=1.0).contains(&self.value_bias) {
            return Err(Error::GenerationFailed("value_bias outside [0, 1]".into()));
        }
        Ok(())
    }

    pub fn with_max_size(&self, n: usize) -> GenConfig {
        GenConfig { max_size: n, ..self.clone() }
    }

    /// Independent stream for case `index` of property `salt`.
    pub fn rng_for(&self, salt: &str, index: usize) -> Rng64 {
        use rand::SeedableRng;
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in salt.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x100_0000_01b3);
        }
        let mut z = self.seed ^ h ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        Rng64::seed_from_u64(z ^ (z >> 31))
    }

    fn atoms(&self) -> Vec<SimpleType> {
        self.atom_pool.iter().map(|a| SimpleType::atom(a)).collect()
    }
}

const BINDERS: [&str; 4] = ["x", "y", "z", "w"];
const FREE: [&str; 4] = ["x", "y", "f", "g"];

fn pick_name(rng: &mut Rng64, pool: &[&str]) -> Name {
    Name::new(pool.choose(rng).unwrap())
}

/// Context every typed generator starts from: a few inhabitants per atom.
pub fn base_context(cfg: &GenConfig) -> TypingContext {
    let atoms = cfg.atoms();
    let a = atoms[0].clone();
    let aa = SimpleType::arrow(a.clone(), a.clone());
    let mut g = TypingContext::new()
        .with(Name::new("x"), a.clone())
        .with(Name::new("y"), a.clone())
        .with(Name::new("f"), aa.clone())
        .with(Name::new("g"), SimpleType::arrow(a.clone(), aa.clone()))
        .with(Name::new("h"), SimpleType::arrow(aa, a.clone()));
    for (i, b) in atoms.iter().enumerate().skip(1) {
        let i = i as u32;
        g = g
            .with(Name::with_uid("u", i), b.clone())
            .with(Name::with_uid("p", i), SimpleType::arrow(a.clone(), b.clone()))
            .with(Name::with_uid("q", i), SimpleType::arrow(b.clone(), a.clone()));
    }
    g
}

pub fn random_type(cfg: &GenConfig, rng: &mut Rng64, depth: usize) -> SimpleType {
    let atoms = cfg.atoms();
    if depth == 0 || rng.gen_bool(0.55) {
        return atoms.choose(rng).unwrap().clone();
    }
    SimpleType::arrow(random_type(cfg, rng, depth - 1), random_type(cfg, rng, depth - 1))
}

struct Typed<'a> {
    cfg: &'a GenConfig,
    rng: &'a mut Rng64,
    scope: Vec<(Name, SimpleType)>,
}

#[derive(Clone, Copy, PartialEq)]
enum Shape {
    Lam,
    App,
    Let,
}

impl Typed<'_> {
    fn new<'a>(cfg: &'a GenConfig, rng: &'a mut Rng64, ctx: &TypingContext) -> Typed<'a> {
        let scope = ctx.iter().map(|(n, t)| (n.clone(), t.clone())).collect();
        Typed { cfg, rng, scope }
    }

    fn vars_of(&self, a: &SimpleType) -> Vec<Name> {
        let mut out: Vec<Name> = Vec::new();
        for (i, (n, t)) in self.scope.iter().enumerate() {
            let shadowed = self.scope[i + 1..].iter().any(|(m, _)| m == n);
            if !shadowed && t == a {
                out.push(n.clone());
            }
        }
        out
    }

    fn arg_type(&mut self) -> SimpleType {
        if self.rng.gen_bool(0.4) && !self.scope.is_empty() {
            let i = self.rng.gen_range(0..self.scope.len());
            let t = self.scope[i].1.clone();
            if t.size() <= 5 {
                return t;
            }
        }
        random_type(self.cfg, self.rng, 1)
    }

    fn under<T>(&mut self, x: &Name, a: &SimpleType, f: impl FnOnce(&mut Self) -> T) -> T {
        self.scope.push((x.clone(), a.clone()));
        let r = f(self);
        self.scope.pop();
        r
    }

    fn value(&mut self, a: &SimpleType, s: usize) -> Option<TermC> {
        let vars = self.vars_of(a);
        let lam_ok = matches!(a, SimpleType::Arrow(..)) && s >= 3;
        if !vars.is_empty() && (!lam_ok || self.rng.gen_bool(0.5)) {
            return Some(TermC::Var(vars.choose(self.rng).unwrap().clone()));
        }
        if let SimpleType::Arrow(b, c) = a {
            let x = pick_name(self.rng, &BINDERS);
            let body = self.under(&x, b, |g| g.term(c, s.saturating_sub(2).max(1)))?;
            return Some(TermC::Lam(x, Box::new(body)));
        }
        None
    }

    fn term(&mut self, a: &SimpleType, s: usize) -> Option<TermC> {
        let vars = self.vars_of(a);
        if !vars.is_empty() && (s <= 2 || self.rng.gen_bool(self.cfg.value_bias)) {
            return Some(TermC::Var(vars.choose(self.rng).unwrap().clone()));
        }
        let mut shapes = vec![Shape::App, Shape::Let, Shape::Lam];
        shapes.shuffle(self.rng);
        for sh in shapes {
            if let Some(t) = self.shape(sh, a, s) {
                return Some(t);
            }
        }
        if !vars.is_empty() {
            return Some(TermC::Var(vars.choose(self.rng).unwrap().clone()));
        }
        None
    }

    fn split(&mut self, s: usize, overhead: usize) -> (usize, usize) {
        let rest = s.saturating_sub(overhead).max(2);
        let l = self.rng.gen_range(1..rest);
        (l, rest - l)
    }

    fn shape(&mut self, sh: Shape, a: &SimpleType, s: usize) -> Option<TermC> {
        match sh {
            Shape::Lam => match a {
                SimpleType::Arrow(b, c) if s >= 3 => {
                    let x = pick_name(self.rng, &BINDERS);
                    let body = self.under(&x, b, |g| g.term(c, s - 2))?;
                    Some(TermC::Lam(x, Box::new(body)))
                }
                _ => None,
            },
            Shape::App if s >= 3 => {
                let b = self.arg_type();
                let (l, r) = self.split(s, 1);
                let f = self.term(&SimpleType::arrow(b.clone(), a.clone()), l)?;
                let n = self.term(&b, r)?;
                Some(TermC::App(Box::new(f), Box::new(n)))
            }
            Shape::Let if s >= 4 => {
                let b = self.arg_type();
                let (l, r) = self.split(s, 2);
                let m = self.term(&b, l)?;
                let x = pick_name(self.rng, &BINDERS);
                let n = self.under(&x, &b, |g| g.term(a, r))?;
                Some(TermC::Let(x, Box::new(m), Box::new(n)))
            }
            _ => None,
        }
    }

    fn non_value(&mut self, a: &SimpleType, s: usize) -> Option<TermC> {
        for _ in 0..8 {
            let sh = if self.rng.gen_bool(0.6) { Shape::App } else { Shape::Let };
            if let Some(t) = self.shape(sh, a, s.max(4)) {
                return Some(t);
            }
        }
        None
    }

    /// A redex of `rule` at the root, of type `a`.
    fn redex(&mut self, rule: Rule, a: &SimpleType, s: usize) -> Option<TermC> {
        let b = self.arg_type();
        let x = pick_name(self.rng, &BINDERS);
        let (l, r) = self.split(s, 3);
        let bx = |t: TermC| Box::new(t);
        Some(match rule {
            Rule::B => {
                let body = self.under(&x, &b, |g| g.term(a, l))?;
                let n = self.term(&b, r)?;
                TermC::App(bx(TermC::Lam(x, bx(body))), bx(n))
            }
            Rule::LetV => {
                let v = self.value(&b, l)?;
                let body = self.under(&x, &b, |g| g.term(a, r))?;
                TermC::Let(x, bx(v), bx(body))
            }
            Rule::EtaLet => {
                let m = self.term(a, s.saturating_sub(3).max(1))?;
                TermC::Let(x.clone(), bx(m), bx(TermC::Var(x)))
            }
            Rule::Let1 => {
                let m = self.non_value(&SimpleType::arrow(b.clone(), a.clone()), l)?;
                let n = self.term(&b, r)?;
                TermC::App(bx(m), bx(n))
            }
            Rule::Let2 => {
                let v = self.value(&SimpleType::arrow(b.clone(), a.clone()), l)?;
                let n = self.non_value(&b, r)?;
                TermC::App(bx(v), bx(n))
            }
            Rule::Assoc => {
                let c = self.arg_type();
                let (l1, l2) = self.split(l.max(3), 0);
                let m = self.term(&c, l1)?;
                let z = pick_name(self.rng, &BINDERS);
                let n = self.under(&z, &c, |g| g.term(&b, l2))?;
                let p = self.under(&x, &b, |g| g.term(a, r))?;
                TermC::Let(x, bx(TermC::Let(z, bx(m), bx(n))), bx(p))
            }
            _ => return None,
        })
    }

    /// A term of type `a` with a `rule` redex somewhere inside.
    fn planted(&mut self, rule: Rule, a: &SimpleType, s: usize, depth: usize) -> Option<TermC> {
        if depth == 0 || self.rng.gen_bool(0.4) {
            return self.redex(rule, a, s);
        }
        let bx = |t: TermC| Box::new(t);
        let (l, r) = self.split(s, 2);
        let b = self.arg_type();
        let x = pick_name(self.rng, &BINDERS);
        match self.rng.gen_range(0..5) {
            0 => match a {
                SimpleType::Arrow(c, d) => {
                    let body = self.under(&x, c, |g| g.planted(rule, d, s, depth - 1))?;
                    Some(TermC::Lam(x, bx(body)))
                }
                _ => self.redex(rule, a, s),
            },
            1 => {
                let m = self.term(&b, l)?;
                let body = self.under(&x, &b, |g| g.planted(rule, a, r.max(4), depth - 1))?;
                Some(TermC::Let(x, bx(m), bx(body)))
            }
            2 => {
                let m = self.planted(rule, &b, l.max(4), depth - 1)?;
                let body = self.under(&x, &b, |g| g.term(a, r))?;
                Some(TermC::Let(x, bx(m), bx(body)))
            }
            3 => {
                let f = self.planted(rule, &SimpleType::arrow(b.clone(), a.clone()), l.max(4), depth - 1)?;
                let n = self.term(&b, r)?;
                Some(TermC::App(bx(f), bx(n)))
            }
            _ => {
                let f = self.term(&SimpleType::arrow(b.clone(), a.clone()), l)?;
                let n = self.planted(rule, &b, r.max(4), depth - 1)?;
                Some(TermC::App(bx(f), bx(n)))
            }
        }
    }
}

const TRIES: usize = 64;

/// A term of type `a` under `ctx` whose size is at most `cfg.max_size`.
pub fn gen_typed_c(cfg: &GenConfig, rng: &mut Rng64, ctx: &TypingContext, a: &SimpleType) -> Result<TermC> {
    for _ in 0..TRIES {
        let budget = rng.gen_range(1..=cfg.max_size);
        let mut g = Typed::new(cfg, rng, ctx);
        if let Some(t) = g.term(a, budget) {
            if t.size() <= cfg.max_size {
                return Ok(t);
            }
        }
    }
    Err(Error::GenerationFailed(format!("no inhabitant of {a} within size {}", cfg.max_size)))
}

/// A typed term of random type from the base context.
pub fn gen_typed_any(cfg: &GenConfig, rng: &mut Rng64) -> Result<(TypingContext, TermC)> {
    let ctx = base_context(cfg);
    let a = random_type(cfg, rng, 2);
    Ok((ctx.clone(), gen_typed_c(cfg, rng, &ctx, &a)?))
}

/// A typed term containing at least one redex of a source-calculus rule.
pub fn gen_planted_c(cfg: &GenConfig, rng: &mut Rng64, ctx: &TypingContext, rule: Rule) -> Result<TermC> {
    for _ in 0..TRIES {
        let a = random_type(cfg, rng, 2);
        let budget = rng.gen_range(4..=cfg.max_size.max(4));
        let depth = rng.gen_range(0..4);
        let mut g = Typed::new(cfg, rng, ctx);
        if let Some(t) = g.planted(rule, &a, budget, depth) {
            if has_c_redex(&t, rule) {
                return Ok(t);
            }
        }
    }
    Err(Error::GenerationFailed(format!("could not plant a {rule} redex")))
}

fn has_c_redex(t: &TermC, rule: Rule) -> bool {
    contract_c(t, rule).is_some() || t.children().into_iter().any(|c| has_c_redex(c, rule))
}

// ---------------------------------------------------------------------------
// Untyped, grammar-driven generators. `s` is a node budget.

fn split(rng: &mut Rng64, s: usize, overhead: usize) -> (usize, usize) {
    let rest = s.saturating_sub(overhead).max(2);
    let l = rng.gen_range(1..rest);
    (l, rest - l)
}

fn leaf(rng: &mut Rng64, s: usize, bias: f64) -> bool {
    s <= 2 || rng.gen_bool(bias)
}

pub fn gen_c(rng: &mut Rng64, s: usize) -> TermC {
    if leaf(rng, s, 0.15) {
        return TermC::Var(pick_name(rng, &FREE));
    }
    let x = pick_name(rng, &BINDERS);
    match rng.gen_range(0..3) {
        0 => TermC::Lam(x, Box::new(gen_c(rng, s - 2))),
        1 => {
            let (l, r) = split(rng, s, 1);
            TermC::App(Box::new(gen_c(rng, l)), Box::new(gen_c(rng, r)))
        }
        _ => {
            let (l, r) = split(rng, s, 2);
            TermC::Let(x, Box::new(gen_c(rng, l)), Box::new(gen_c(rng, r)))
        }
    }
}

pub fn gen_value_c(rng: &mut Rng64, s: usize) -> TermC {
    if s <= 2 || rng.gen_bool(0.4) {
        TermC::Var(pick_name(rng, &FREE))
    } else {
        TermC::Lam(pick_name(rng, &BINDERS), Box::new(gen_c(rng, s - 2)))
    }
}

pub fn gen_vfs_value(rng: &mut Rng64, s: usize) -> ValueVfs {
    if s <= 3 || rng.gen_bool(0.4) {
        ValueVfs::Var(pick_name(rng, &FREE))
    } else {
        ValueVfs::Lam(pick_name(rng, &BINDERS), Box::new(gen_vfs(rng, s - 2)))
    }
}

pub fn gen_vfs(rng: &mut Rng64, s: usize) -> TermVfs {
    if leaf(rng, s, 0.15) {
        return TermVfs::Ret(gen_vfs_value(rng, s.saturating_sub(1)));
    }
    let (l, r) = split(rng, s, 3);
    let v = gen_vfs_value(rng, l);
    let x = pick_name(rng, &BINDERS);
    let c = if rng.gen_bool(0.5) {
        FormalContext::Bind(x, Box::new(gen_vfs(rng, r)))
    } else {
        let (l2, r2) = split(rng, r, 0);
        FormalContext::GApp(gen_vfs_value(rng, l2), x, Box::new(gen_vfs(rng, r2)))
    };
    TermVfs::CutC(v, c)
}

pub fn gen_cps_value(rng: &mut Rng64, s: usize) -> ValueCps {
    if s <= 4 || rng.gen_bool(0.4) {
        ValueCps::Var(pick_name(rng, &FREE))
    } else {
        ValueCps::Lam(pick_name(rng, &BINDERS), Box::new(TermCps(Box::new(gen_cps(rng, s - 3, false)))))
    }
}

/// A command of the modified target; `small` omits `K V` commands.
pub fn gen_cps(rng: &mut Rng64, s: usize, small: bool) -> Command {
    if leaf(rng, s, 0.15) {
        let s = s.saturating_sub(1);
        return Command::KApp(if small { gen_small_value(rng, s) } else { gen_cps_value(rng, s) });
    }
    let x = pick_name(rng, &BINDERS);
    if !small && rng.gen_bool(0.4) {
        let (l, r) = split(rng, s, 2);
        let body = gen_cps(rng, l, small);
        return Command::AppK(Cont::KLam(x, Box::new(body)), gen_cps_value(rng, r));
    }
    let (l, r) = split(rng, s, 2);
    let (l1, l2) = split(rng, l, 0);
    let v = if small { gen_small_value(rng, l1) } else { gen_cps_value(rng, l1) };
    let w = if small { gen_small_value(rng, l2) } else { gen_cps_value(rng, l2) };
    Command::AppVWK(v, w, Cont::KLam(x, Box::new(gen_cps(rng, r, small))))
}

fn gen_small_value(rng: &mut Rng64, s: usize) -> ValueCps {
    if s <= 4 || rng.gen_bool(0.4) {
        ValueCps::Var(pick_name(rng, &FREE))
    } else {
        ValueCps::Lam(pick_name(rng, &BINDERS), Box::new(TermCps(Box::new(gen_cps(rng, s - 3, true)))))
    }
}

/// A term of the value enclosed style; the context freshness is arranged by
/// choosing the let binder after its scope is built.
pub fn gen_ves(rng: &mut Rng64, s: usize) -> TermC {
    if leaf(rng, s, 0.15) {
        return gen_ves_value(rng, s.saturating_sub(1));
    }
    let (l, r) = split(rng, s, 2);
    let v = gen_ves_value(rng, l);
    if rng.gen_bool(0.5) {
        let x = pick_name(rng, &BINDERS);
        return TermC::Let(x, Box::new(v), Box::new(gen_ves(rng, r)));
    }
    let (l2, r2) = split(rng, r, 3);
    let w = gen_ves_value(rng, l2);
    let y = pick_name(rng, &BINDERS);
    let n = gen_ves(rng, r2);
    let mut avoid = w.free_vars();
    let mut fvn = n.free_vars();
    fvn.remove(&y);
    avoid.extend(fvn);
    avoid.insert(y.clone());
    let cands: Vec<&str> = BINDERS.iter().copied().filter(|b| !avoid.contains(&Name::new(b))).collect();
    let x = match cands.choose(rng) {
        Some(b) => Name::new(b),
        None => fresh_name("x", &avoid),
    };
    let c = TermC::Let(y, Box::new(TermC::App(Box::new(TermC::Var(x.clone())), Box::new(w))), Box::new(n));
    TermC::Let(x, Box::new(v), Box::new(c))
}

fn gen_ves_value(rng: &mut Rng64, s: usize) -> TermC {
    if s <= 3 || rng.gen_bool(0.4) {
        TermC::Var(pick_name(rng, &FREE))
    } else {
        TermC::Lam(pick_name(rng, &BINDERS), Box::new(gen_ves(rng, s - 2)))
    }
}

pub fn gen_ces(rng: &mut Rng64, s: usize) -> TermC {
    if leaf(rng, s, 0.15) {
        return gen_ces_value(rng, s.saturating_sub(1));
    }
    let (l, r) = split(rng, s, 3);
    let (l1, l2) = split(rng, l, 0);
    let v = gen_ces_value(rng, l1);
    let w = gen_ces_value(rng, l2);
    let x = pick_name(rng, &BINDERS);
    TermC::Let(x, Box::new(TermC::App(Box::new(v), Box::new(w))), Box::new(gen_ces(rng, r)))
}

fn gen_ces_value(rng: &mut Rng64, s: usize) -> TermC {
    if s <= 3 || rng.gen_bool(0.4) {
        TermC::Var(pick_name(rng, &FREE))
    } else {
        TermC::Lam(pick_name(rng, &BINDERS), Box::new(gen_ces(rng, s - 2)))
    }
}

/// Generalized applications; `cnf` keeps heads and arguments values.
pub fn gen_ga(rng: &mut Rng64, s: usize, cnf: bool) -> TermGa {
    if leaf(rng, s, 0.15) {
        return gen_ga_value(rng, s.saturating_sub(1), cnf);
    }
    let (l, r) = split(rng, s, 2);
    let (l1, l2) = split(rng, l, 0);
    let (m, n) = if cnf {
        (gen_ga_value(rng, l1, cnf), gen_ga_value(rng, l2, cnf))
    } else {
        (gen_ga(rng, l1, cnf), gen_ga(rng, l2, cnf))
    };
    TermGa::GApp(Box::new(m), Box::new(n), pick_name(rng, &BINDERS), Box::new(gen_ga(rng, r, cnf)))
}

fn gen_ga_value(rng: &mut Rng64, s: usize, cnf: bool) -> TermGa {
    if s <= 3 || rng.gen_bool(0.4) {
        TermGa::Var(pick_name(rng, &FREE))
    } else {
        TermGa::Lam(pick_name(rng, &BINDERS), Box::new(gen_ga(rng, s - 2, cnf)))
    }
}

fn gen_q_value(rng: &mut Rng64, s: usize, lnf: bool) -> ValueQ {
    if s <= 3 || rng.gen_bool(0.4) {
        ValueQ::Var(pick_name(rng, &FREE))
    } else {
        ValueQ::Lam(pick_name(rng, &BINDERS), Box::new(gen_q(rng, s - 2, lnf)))
    }
}

/// One-cut terms; `lnf` restricts cuts to returned values.
pub fn gen_q(rng: &mut Rng64, s: usize, lnf: bool) -> TermQ {
    if leaf(rng, s, 0.15) {
        return TermQ::Ret(gen_q_value(rng, s.saturating_sub(1), lnf));
    }
    let x = pick_name(rng, &BINDERS);
    if rng.gen_bool(0.35) {
        let (l, r) = split(rng, s, 3);
        let h = pick_name(rng, &FREE);
        return TermQ::LIntro(h, gen_q_value(rng, l, lnf), x, Box::new(gen_q(rng, r, lnf)));
    }
    let (l, r) = split(rng, s, 2);
    let m = if lnf { TermQ::Ret(gen_q_value(rng, l, lnf)) } else { gen_q(rng, l, lnf) };
    TermQ::Cut(Box::new(m), x, Box::new(gen_q(rng, r, lnf)))
}

fn gen_l_lam(rng: &mut Rng64, s: usize) -> ValueL {
    ValueL::Lam(pick_name(rng, &BINDERS), Box::new(gen_ljq(rng, s.saturating_sub(2).max(1))))
}

fn gen_l_value(rng: &mut Rng64, s: usize) -> ValueL {
    if s <= 3 || rng.gen_bool(0.35) {
        return ValueL::Var(pick_name(rng, &FREE));
    }
    if s >= 6 && rng.gen_bool(0.3) {
        let (l, r) = split(rng, s, 2);
        return ValueL::Cut1(Box::new(gen_l_lam(rng, l)), pick_name(rng, &BINDERS), Box::new(gen_l_value(rng, r)));
    }
    gen_l_lam(rng, s)
}

/// Three-cut terms whose explicit substitutions all carry abstractions.
pub fn gen_ljq(rng: &mut Rng64, s: usize) -> TermL {
    if leaf(rng, s, 0.15) {
        return TermL::Ret(gen_l_value(rng, s.saturating_sub(1)));
    }
    let x = pick_name(rng, &BINDERS);
    match rng.gen_range(0..4) {
        0 => {
            let (l, r) = split(rng, s, 3);
            TermL::LIntro(pick_name(rng, &FREE), gen_l_value(rng, l), x, Box::new(gen_ljq(rng, r)))
        }
        1 => {
            let (l, r) = split(rng, s, 2);
            TermL::Cut2(gen_l_lam(rng, l), x, Box::new(gen_ljq(rng, r)))
        }
        _ => {
            let (l, r) = split(rng, s, 2);
            TermL::Cut3(Box::new(gen_ljq(rng, l)), x, Box::new(gen_ljq(rng, r)))
        }
    }
}

/// Retries `f` until it yields a term within `max` nodes.
pub fn sized<T: Syntax>(rng: &mut Rng64, max: usize, mut f: impl FnMut(&mut Rng64, usize) -> T) -> T {
    let mut last = None;
    for _ in 0..TRIES {
        let budget = rng.gen_range(1..=max.max(1));
        let t = f(rng, budget);
        if t.size() <= max {
            return t;
        }
        last = Some(t);
    }
    last.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct_style::{is_ces, is_ves};
    use crate::lambda_c::{check_c, instantiate_c};
    use crate::ljq::explicit_cuts_on_abstractions;
    use rand::SeedableRng;

    #[test]
    fn size_one_picks_a_variable() {
        let cfg = GenConfig { max_size: 1, ..GenConfig::default() };
        let ctx = TypingContext::new().with(Name::new("x"), SimpleType::atom("a"));
        let mut rng = Rng64::seed_from_u64(1);
        assert_eq!(gen_typed_c(&cfg, &mut rng, &ctx, &SimpleType::atom("a")).unwrap(), TermC::Var(Name::new("x")));
    }

    #[test]
    fn identity_is_generated_for_a_to_a() {
        let cfg = GenConfig { max_size: 3, ..GenConfig::default() };
        let a = SimpleType::atom("a");
        let mut rng = Rng64::seed_from_u64(2);
        let t = gen_typed_c(&cfg, &mut rng, &TypingContext::new(), &SimpleType::arrow(a.clone(), a)).unwrap();
        assert!(matches!(t, TermC::Lam(ref x, ref b) if **b == TermC::Var(x.clone())));
    }

    #[test]
    fn typed_generation_typechecks() {
        let cfg = GenConfig::default();
        for i in 0..2000 {
            let mut rng = cfg.rng_for("typed", i);
            let ctx = base_context(&cfg);
            let a = random_type(&cfg, &mut rng, 2);
            let t = gen_typed_c(&cfg, &mut rng, &ctx, &a).unwrap();
            check_c(&ctx, &t, &a).unwrap_or_else(|e| panic!("{t}: {e}"));
            assert!(t.size() <= cfg.max_size);
        }
    }

    #[test]
    fn planting_yields_the_redex() {
        let cfg = GenConfig::default();
        let ctx = base_context(&cfg);
        for rule in [Rule::B, Rule::LetV, Rule::EtaLet, Rule::Let1, Rule::Let2, Rule::Assoc] {
            for i in 0..100 {
                let mut rng = cfg.rng_for("plant", i);
                let t = gen_planted_c(&cfg, &mut rng, &ctx, rule).unwrap();
                assert!(has_c_redex(&t, rule));
                instantiate_c(&ctx, &t, &SimpleType::atom("a")).unwrap();
            }
        }
    }

    #[test]
    fn grammar_generators_stay_in_grammar() {
        let cfg = GenConfig::default();
        for i in 0..500 {
            let mut rng = cfg.rng_for("grammar", i);
            assert!(is_ves(&gen_ves(&mut rng, 15)));
            assert!(is_ces(&gen_ces(&mut rng, 15)));
            assert!(crate::direct_style::is_cnf(&gen_ga(&mut rng, 15, true)));
            assert!(crate::ljq::is_lnf(&gen_q(&mut rng, 15, true)));
            assert!(explicit_cuts_on_abstractions(&gen_ljq(&mut rng, 15)));
            crate::cps::audit(&gen_cps(&mut rng, 15, false), crate::cps::CpsMode::Cps).unwrap();
            crate::cps::audit(&gen_cps(&mut rng, 15, true), crate::cps::CpsMode::Small).unwrap();
        }
    }

    #[test]
    fn same_seed_same_term() {
        let cfg = GenConfig { seed: 42, ..GenConfig::default() };
        let a = gen_typed_any(&cfg, &mut cfg.rng_for("s", 3)).unwrap();
        let b = gen_typed_any(&cfg, &mut cfg.rng_for("s", 3)).unwrap();
        assert_eq!(a.1, b.1);
    }
}
