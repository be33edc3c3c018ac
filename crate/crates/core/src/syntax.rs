//! Concrete syntax: one lexer, a recursive-descent parser per calculus, and a
//! `Term` sum over every representation so front ends can stay generic.

use std::fmt;

use crate::cps::{audit, audit_term, Command, Cont, CpsMode, TermCps, ValueCps};
use crate::direct_style::{is_ces, is_cnf, is_ves, TermGa};
use crate::error::{Error, Result};
use crate::lambda_c::{is_anf, TermC};
use crate::ljq::{is_lnf, TermL, TermQ, ValueL, ValueQ};
use crate::name::Name;
use crate::rewrite::{Calculus, Syntax, Tree};
use crate::types::{SimpleType, TypingContext};
use crate::vfs::{FormalContext, TermVfs, ValueVfs};

/// A parsed term of any calculus. Several calculi share a representation;
/// the calculus tag decides which grammar restrictions apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    C(TermC),
    Q(TermQ),
    L(TermL),
    Vfs(TermVfs),
    /// `\k. M`
    Cps(TermCps),
    Command(Command),
    Ga(TermGa),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::C(t) => t.fmt(f),
            Term::Q(t) => t.fmt(f),
            Term::L(t) => t.fmt(f),
            Term::Vfs(t) => t.fmt(f),
            Term::Cps(t) => t.fmt(f),
            Term::Command(t) => t.fmt(f),
            Term::Ga(t) => t.fmt(f),
        }
    }
}

impl Syntax for Term {
    fn tree(&self) -> Tree {
        match self {
            Term::C(t) => t.tree(),
            Term::Q(t) => t.tree(),
            Term::L(t) => t.tree(),
            Term::Vfs(t) => t.tree(),
            Term::Cps(t) => t.tree(),
            Term::Command(t) => t.tree(),
            Term::Ga(t) => t.tree(),
        }
    }
}

impl Term {
    /// Short name of the representation, for error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Term::C(_) => "source term",
            Term::Q(_) => "one-cut term",
            Term::L(_) => "three-cut term",
            Term::Vfs(_) => "VFS term",
            Term::Cps(_) => "CPS term",
            Term::Command(_) => "CPS command",
            Term::Ga(_) => "generalized application term",
        }
    }
}

/// Checks the grammar restrictions `calc` adds on top of its representation.
pub fn validate(calc: Calculus, t: &Term) -> Result<()> {
    let outside = || Error::Malformed(format!("{t} is not a term of {calc}"));
    let ok = match (calc, t) {
        (Calculus::LambdaC, Term::C(_)) => true,
        (Calculus::Anf, Term::C(m)) => is_anf(m),
        (Calculus::Ves, Term::C(m)) => is_ves(m),
        (Calculus::Ces, Term::C(m)) => is_ces(m),
        (Calculus::Q, Term::Q(_)) => true,
        (Calculus::Lnf, Term::Q(m)) => is_lnf(m),
        (Calculus::Ljq | Calculus::LjqOriginal, Term::L(_)) => true,
        (Calculus::Vfs, Term::Vfs(_)) => true,
        (Calculus::Ga, Term::Ga(_)) => true,
        (Calculus::Cnf, Term::Ga(m)) => is_cnf(m),
        (Calculus::Rcps | Calculus::Cps | Calculus::SmallCps, Term::Cps(p)) => {
            return audit_term(p, cps_mode(calc));
        }
        (Calculus::Rcps | Calculus::Cps | Calculus::SmallCps, Term::Command(m)) => {
            return audit(m, cps_mode(calc));
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(outside())
    }
}

fn cps_mode(calc: Calculus) -> CpsMode {
    match calc {
        Calculus::Rcps => CpsMode::Rcps,
        Calculus::SmallCps => CpsMode::Small,
        _ => CpsMode::Cps,
    }
}

/// Parses `text` as a term of `calc`.
pub fn parse(calc: Calculus, text: &str) -> Result<Term> {
    let (t, ty) = parse_annotated(calc, text)?;
    if ty.is_some() {
        return Err(Error::Syntax { line: 1, col: 1, msg: "unexpected type ascription".into() });
    }
    Ok(t)
}

/// Parses `M` or `M : A`.
pub fn parse_annotated(calc: Calculus, text: &str) -> Result<(Term, Option<SimpleType>)> {
    let mut p = Parser::new(text)?;
    let t = match calc {
        Calculus::LambdaC | Calculus::Anf | Calculus::Ves | Calculus::Ces => Term::C(p.term_c()?),
        Calculus::Q | Calculus::Lnf => Term::Q(p.term_q()?),
        Calculus::Ljq | Calculus::LjqOriginal => Term::L(p.term_l()?),
        Calculus::Vfs => Term::Vfs(p.term_vfs()?),
        Calculus::Rcps | Calculus::Cps | Calculus::SmallCps => p.term_cps()?,
        Calculus::Ga | Calculus::Cnf => Term::Ga(p.term_ga()?),
    };
    let ty = if p.eat(&K::Colon) { Some(p.ty()?) } else { None };
    p.expect(&K::Eof)?;
    validate(calc, &t)?;
    Ok((t, ty))
}

pub fn parse_type(text: &str) -> Result<SimpleType> {
    let mut p = Parser::new(text)?;
    let t = p.ty()?;
    p.expect(&K::Eof)?;
    Ok(t)
}

/// `x : A, y : B`; an empty string is the empty context.
pub fn parse_context(text: &str) -> Result<TypingContext> {
    let mut p = Parser::new(text)?;
    let mut ctx = TypingContext::new();
    if p.at(&K::Eof) {
        return Ok(ctx);
    }
    loop {
        let x = p.name()?;
        p.expect(&K::Colon)?;
        let t = p.ty()?;
        ctx.declare(x, t)?;
        if !p.eat(&K::Comma) {
            break;
        }
    }
    p.expect(&K::Eof)?;
    Ok(ctx)
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum K {
    Ident(String),
    Lambda,
    Dot,
    LParen,
    RParen,
    Comma,
    Caret,
    At,
    Eq,
    Colon,
    Arrow,
    Bot,
    Eof,
}

impl fmt::Display for K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K::Ident(s) => write!(f, "`{s}`"),
            K::Lambda => f.write_str("`\\`"),
            K::Dot => f.write_str("`.`"),
            K::LParen => f.write_str("`(`"),
            K::RParen => f.write_str("`)`"),
            K::Comma => f.write_str("`,`"),
            K::Caret => f.write_str("`^`"),
            K::At => f.write_str("`@`"),
            K::Eq => f.write_str("`=`"),
            K::Colon => f.write_str("`:`"),
            K::Arrow => f.write_str("`->`"),
            K::Bot => f.write_str("`_|_`"),
            K::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Tok {
    k: K,
    line: usize,
    col: usize,
}

const KEYWORDS: [&str; 6] = ["let", "in", "cut", "cut_v", "cut1", "cut2"];

fn lex(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut adv = 1;
        let k = match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '\\' | 'λ' => Some(K::Lambda),
            '.' => Some(K::Dot),
            '(' => Some(K::LParen),
            ')' => Some(K::RParen),
            ',' => Some(K::Comma),
            '^' => Some(K::Caret),
            '@' => Some(K::At),
            '=' => Some(K::Eq),
            ':' => Some(K::Colon),
            '-' if chars.get(i + 1) == Some(&'>') => {
                adv = 2;
                Some(K::Arrow)
            }
            '_' if chars.get(i + 1) == Some(&'|') && chars.get(i + 2) == Some(&'_') => {
                adv = 3;
                Some(K::Bot)
            }
            c if c.is_alphabetic() => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_' || chars[j] == '\'') {
                    j += 1;
                }
                adv = j - i;
                Some(K::Ident(chars[i..j].iter().collect()))
            }
            other => {
                return Err(Error::Syntax { line, col, msg: format!("unexpected character `{other}`") });
            }
        };
        if let Some(k) = k {
            out.push(Tok { k, line: l0, col: c0 });
        }
        i += adv;
        col += adv;
    }
    out.push(Tok { k: K::Eof, line, col });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn bx<T>(t: T) -> Box<T> {
    Box::new(t)
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &K {
        &self.toks[self.pos].k
    }

    fn peek_at(&self, n: usize) -> &K {
        let i = (self.pos + n).min(self.toks.len() - 1);
        &self.toks[i].k
    }

    fn at(&self, k: &K) -> bool {
        self.peek() == k
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), K::Ident(s) if s == kw)
    }

    fn bump(&mut self) -> K {
        let k = self.toks[self.pos].k.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        k
    }

    fn eat(&mut self, k: &K) -> bool {
        if self.at(k) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if self.at_kw(kw) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    fn expect(&mut self, k: &K) -> Result<()> {
        if self.eat(k) {
            Ok(())
        } else {
            self.err(format!("expected {k}, found {}", self.peek()))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> Result<()> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            self.err(format!("expected `{kw}`, found {}", self.peek()))
        }
    }

    /// A variable other than a keyword or the covariable.
    fn name(&mut self) -> Result<Name> {
        match self.peek().clone() {
            K::Ident(s) if KEYWORDS.contains(&s.as_str()) => self.err(format!("keyword `{s}` used as a variable")),
            K::Ident(s) => {
                let n = Name::parse(&s);
                if n.is_covar() {
                    return Err(Error::ReservedName(n));
                }
                self.bump();
                Ok(n)
            }
            other => self.err(format!("expected a variable, found {other}")),
        }
    }

    fn at_name(&self) -> bool {
        matches!(self.peek(), K::Ident(s) if !KEYWORDS.contains(&s.as_str()))
    }

    /// `x.`
    fn binder(&mut self) -> Result<Name> {
        let x = self.name()?;
        self.expect(&K::Dot)?;
        Ok(x)
    }

    // -- source terms

    fn term_c(&mut self) -> Result<TermC> {
        if self.eat(&K::Lambda) {
            let x = self.binder()?;
            return Ok(TermC::Lam(x, bx(self.term_c()?)));
        }
        if self.eat_kw("let") {
            let x = self.name()?;
            self.expect(&K::Eq)?;
            let m = self.term_c()?;
            self.expect_kw("in")?;
            return Ok(TermC::Let(x, bx(m), bx(self.term_c()?)));
        }
        let mut f = self.atom_c()?;
        loop {
            if self.at(&K::Lambda) || self.at_kw("let") {
                return Ok(TermC::App(bx(f), bx(self.term_c()?)));
            }
            if !(self.at_name() || self.at(&K::LParen)) {
                return Ok(f);
            }
            f = TermC::App(bx(f), bx(self.atom_c()?));
        }
    }

    fn atom_c(&mut self) -> Result<TermC> {
        if self.eat(&K::LParen) {
            let t = self.term_c()?;
            self.expect(&K::RParen)?;
            return Ok(t);
        }
        if self.at_name() {
            return Ok(TermC::Var(self.name()?));
        }
        self.err(format!("expected a term, found {}", self.peek()))
    }

    // -- one-cut terms

    fn value_q(&mut self) -> Result<ValueQ> {
        if self.eat(&K::Lambda) {
            let x = self.binder()?;
            return Ok(ValueQ::Lam(x, bx(self.term_q()?)));
        }
        if self.eat(&K::LParen) {
            let v = self.value_q()?;
            self.expect(&K::RParen)?;
            return Ok(v);
        }
        Ok(ValueQ::Var(self.name()?))
    }

    fn term_q(&mut self) -> Result<TermQ> {
        if self.eat(&K::Caret) {
            return Ok(TermQ::Ret(self.value_q()?));
        }
        if self.eat_kw("cut") {
            self.expect(&K::LParen)?;
            let m = self.term_q()?;
            self.expect(&K::Comma)?;
            let x = self.binder()?;
            let n = self.term_q()?;
            self.expect(&K::RParen)?;
            return Ok(TermQ::Cut(bx(m), x, bx(n)));
        }
        if self.eat_kw("cut_v") {
            self.expect(&K::LParen)?;
            let v = self.value_q()?;
            self.expect(&K::Comma)?;
            let x = self.binder()?;
            let n = self.term_q()?;
            self.expect(&K::RParen)?;
            return Ok(TermQ::Cut(bx(TermQ::Ret(v)), x, bx(n)));
        }
        if self.at(&K::LParen) {
            self.bump();
            let t = self.term_q()?;
            self.expect(&K::RParen)?;
            return Ok(t);
        }
        let h = self.name()?;
        self.expect(&K::LParen)?;
        let v = self.value_q()?;
        self.expect(&K::Comma)?;
        let y = self.binder()?;
        let n = self.term_q()?;
        self.expect(&K::RParen)?;
        Ok(TermQ::LIntro(h, v, y, bx(n)))
    }

    // -- three-cut terms

    fn value_l(&mut self) -> Result<ValueL> {
        if self.eat(&K::Lambda) {
            let x = self.binder()?;
            return Ok(ValueL::Lam(x, bx(self.term_l()?)));
        }
        if self.eat(&K::LParen) {
            let v = self.value_l()?;
            self.expect(&K::RParen)?;
            return Ok(v);
        }
        if self.eat_kw("cut1") {
            self.expect(&K::LParen)?;
            let v = self.value_l()?;
            self.expect(&K::Comma)?;
            let x = self.binder()?;
            let w = self.value_l()?;
            self.expect(&K::RParen)?;
            return Ok(ValueL::Cut1(bx(v), x, bx(w)));
        }
        Ok(ValueL::Var(self.name()?))
    }

    fn term_l(&mut self) -> Result<TermL> {
        if self.eat(&K::Caret) {
            return Ok(TermL::Ret(self.value_l()?));
        }
        if self.eat_kw("cut") {
            self.expect(&K::LParen)?;
            let m = self.term_l()?;
            self.expect(&K::Comma)?;
            let x = self.binder()?;
            let n = self.term_l()?;
            self.expect(&K::RParen)?;
            return Ok(TermL::Cut3(bx(m), x, bx(n)));
        }
        if self.eat_kw("cut2") {
            self.expect(&K::LParen)?;
            let v = self.value_l()?;
            self.expect(&K::Comma)?;
            let x = self.binder()?;
            let n = self.term_l()?;
            self.expect(&K::RParen)?;
            return Ok(TermL::Cut2(v, x, bx(n)));
        }
        if self.at(&K::LParen) {
            self.bump();
            let t = self.term_l()?;
            self.expect(&K::RParen)?;
            return Ok(t);
        }
        let h = self.name()?;
        self.expect(&K::LParen)?;
        let v = self.value_l()?;
        self.expect(&K::Comma)?;
        let y = self.binder()?;
        let n = self.term_l()?;
        self.expect(&K::RParen)?;
        Ok(TermL::LIntro(h, v, y, bx(n)))
    }

    // -- VFS

    fn value_vfs(&mut self) -> Result<ValueVfs> {
        if self.eat(&K::Lambda) {
            let x = self.binder()?;
            return Ok(ValueVfs::Lam(x, bx(self.term_vfs()?)));
        }
        if self.eat(&K::LParen) {
            let v = self.value_vfs()?;
            self.expect(&K::RParen)?;
            return Ok(v);
        }
        Ok(ValueVfs::Var(self.name()?))
    }

    fn term_vfs(&mut self) -> Result<TermVfs> {
        if self.eat(&K::Caret) {
            return Ok(TermVfs::Ret(self.value_vfs()?));
        }
        if self.eat_kw("cut_v") {
            self.expect(&K::LParen)?;
            let v = self.value_vfs()?;
            self.expect(&K::Comma)?;
            let c = if self.eat(&K::LParen) {
                let w = self.value_vfs()?;
                self.expect(&K::Comma)?;
                let x = self.binder()?;
                let m = self.term_vfs()?;
                self.expect(&K::RParen)?;
                FormalContext::GApp(w, x, bx(m))
            } else {
                let x = self.binder()?;
                FormalContext::Bind(x, bx(self.term_vfs()?))
            };
            self.expect(&K::RParen)?;
            return Ok(TermVfs::CutC(v, c));
        }
        if self.eat(&K::LParen) {
            let t = self.term_vfs()?;
            self.expect(&K::RParen)?;
            return Ok(t);
        }
        self.err(format!("expected `^` or `cut_v`, found {}", self.peek()))
    }

    // -- CPS

    fn at_k(&self) -> bool {
        matches!(self.peek(), K::Ident(s) if s == "k")
    }

    fn at_k_binder(&self) -> bool {
        self.at(&K::Lambda) && matches!(self.peek_at(1), K::Ident(s) if s == "k") && self.peek_at(2) == &K::Dot
    }

    fn term_cps(&mut self) -> Result<Term> {
        if self.at_k_binder() {
            return Ok(Term::Cps(self.lam_k()?));
        }
        Ok(Term::Command(self.command()?))
    }

    /// `\k. M`
    fn lam_k(&mut self) -> Result<TermCps> {
        self.expect(&K::Lambda)?;
        self.bump();
        self.expect(&K::Dot)?;
        Ok(TermCps(bx(self.command()?)))
    }

    fn command(&mut self) -> Result<Command> {
        if self.at_k() {
            self.bump();
            self.expect(&K::At)?;
            return Ok(Command::KApp(self.atom_value_cps()?));
        }
        if self.eat(&K::LParen) {
            if self.at_k_binder() || !self.at(&K::Lambda) {
                return self.err("expected an abstraction");
            }
            self.bump();
            let x = self.binder()?;
            if self.at_k_binder() {
                let v = ValueCps::Lam(x, bx(self.lam_k()?));
                self.expect(&K::RParen)?;
                return self.call_rest(v);
            }
            let m = self.command()?;
            self.expect(&K::RParen)?;
            self.expect(&K::At)?;
            return Ok(Command::AppK(Cont::KLam(x, bx(m)), self.atom_value_cps()?));
        }
        let v = ValueCps::Var(self.name()?);
        self.call_rest(v)
    }

    /// The `W K` of `V W K`.
    fn call_rest(&mut self, v: ValueCps) -> Result<Command> {
        let w = self.atom_value_cps()?;
        let k = self.atom_cont()?;
        Ok(Command::AppVWK(v, w, k))
    }

    fn value_cps(&mut self) -> Result<ValueCps> {
        if self.eat(&K::Lambda) {
            let x = self.binder()?;
            if !self.at_k_binder() {
                return self.err("expected `\\k.` after a value abstraction");
            }
            return Ok(ValueCps::Lam(x, bx(self.lam_k()?)));
        }
        Ok(ValueCps::Var(self.name()?))
    }

    fn atom_value_cps(&mut self) -> Result<ValueCps> {
        if self.eat(&K::LParen) {
            let v = self.value_cps()?;
            self.expect(&K::RParen)?;
            return Ok(v);
        }
        Ok(ValueCps::Var(self.name()?))
    }

    fn atom_cont(&mut self) -> Result<Cont> {
        if self.at_k() {
            self.bump();
            return Ok(Cont::KVar);
        }
        self.expect(&K::LParen)?;
        self.expect(&K::Lambda)?;
        let x = self.binder()?;
        let m = self.command()?;
        self.expect(&K::RParen)?;
        Ok(Cont::KLam(x, bx(m)))
    }

    // -- generalized applications

    fn term_ga(&mut self) -> Result<TermGa> {
        if self.eat(&K::Lambda) {
            let x = self.binder()?;
            return Ok(TermGa::Lam(x, bx(self.term_ga()?)));
        }
        let mut h = if self.eat(&K::LParen) {
            let t = self.term_ga()?;
            self.expect(&K::RParen)?;
            t
        } else {
            TermGa::Var(self.name()?)
        };
        while self.eat(&K::LParen) {
            let n = self.term_ga()?;
            self.expect(&K::Comma)?;
            let x = self.binder()?;
            let p = self.term_ga()?;
            self.expect(&K::RParen)?;
            h = TermGa::GApp(bx(h), bx(n), x, bx(p));
        }
        Ok(h)
    }

    // -- types

    fn ty(&mut self) -> Result<SimpleType> {
        let a = self.ty_atom()?;
        if self.eat(&K::Arrow) {
            return Ok(SimpleType::arrow(a, self.ty()?));
        }
        Ok(a)
    }

    fn ty_atom(&mut self) -> Result<SimpleType> {
        match self.bump() {
            K::Bot => Ok(SimpleType::Bot),
            K::LParen => {
                let t = self.ty()?;
                self.expect(&K::RParen)?;
                Ok(t)
            }
            K::Ident(s) if !KEYWORDS.contains(&s.as_str()) => Ok(SimpleType::atom(&s)),
            other => {
                self.pos -= 1;
                self.err(format!("expected a type, found {other}"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_c::{app, lam, let_in, var};
    use crate::ljq::q::{cut, li, qlam, qvar, ret};

    fn c(s: &str) -> TermC {
        match parse(Calculus::LambdaC, s).unwrap() {
            Term::C(t) => t,
            _ => unreachable!(),
        }
    }

    #[test]
    fn source_examples() {
        assert_eq!(c("\\x. x"), lam("x", var("x")));
        assert_eq!(c("let x = v w in x"), let_in("x", app(var("v"), var("w")), var("x")));
        assert_eq!(c("f x y"), app(app(var("f"), var("x")), var("y")));
        assert_eq!(c("f (\\x. x)"), app(var("f"), lam("x", var("x"))));
        assert_eq!(c("f \\x. x"), app(var("f"), lam("x", var("x"))));
    }

    #[test]
    fn one_cut_example() {
        let t = parse(Calculus::Q, "cut(^(\\x. ^x), y. y(w, z. ^z))").unwrap();
        let want = cut(ret(qlam("x", ret(qvar("x")))), "y", li("y", qvar("w"), "z", ret(qvar("z"))));
        assert_eq!(t, Term::Q(want.clone()));
        assert_eq!(parse(Calculus::Q, "cut_v(\\x. ^x, y. y(w, z. ^z))").unwrap(), Term::Q(want));
    }

    #[test]
    fn reserved_k() {
        assert!(matches!(parse(Calculus::LambdaC, "\\k. k"), Err(Error::ReservedName(_))));
        assert!(matches!(parse(Calculus::Cps, "\\k. k @ k"), Err(Error::ReservedName(_))));
        assert!(parse(Calculus::Cps, "\\k. (\\x. k @ x) @ y").is_ok());
    }

    #[test]
    fn syntax_error_position() {
        match parse(Calculus::LambdaC, "let x = y\n in )") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 5)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cps_forms() {
        assert_eq!(parse(Calculus::Rcps, "\\k. f x k").unwrap().to_string(), "\\k. f x k");
        assert!(parse(Calculus::Cps, "\\k. f x k").is_err());
        for s in ["\\k. k @ x", "\\k. (\\y. \\k. k @ y) x (\\z. k @ z)", "\\k. (\\y. k @ y) @ (\\x. \\k. k @ x)"] {
            let t = parse(Calculus::Cps, s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(parse(Calculus::SmallCps, "\\k. (\\y. k @ y) @ x").is_err());
    }

    #[test]
    fn types_and_ascription() {
        let t = parse_type("(a -> b) -> _|_").unwrap();
        assert_eq!(t.to_string(), "(a -> b) -> _|_");
        assert_eq!(parse_type("a -> b -> c").unwrap().to_string(), "a -> b -> c");
        let (_, ty) = parse_annotated(Calculus::LambdaC, "\\x. x : a -> a").unwrap();
        assert_eq!(ty.unwrap().to_string(), "a -> a");
        let ctx = parse_context("f : a -> a, x : a").unwrap();
        assert_eq!(ctx.len(), 2);
    }

    #[test]
    fn grammar_restrictions() {
        assert!(parse(Calculus::Anf, "(f x) y").is_err());
        assert!(parse(Calculus::Anf, "let z = f x in z y").is_ok());
        assert!(parse(Calculus::Cnf, "(f(x, y. y))(z, w. w)").is_err());
        assert!(parse(Calculus::Ga, "(f(x, y. y))(z, w. w)").is_ok());
        assert!(parse(Calculus::Vfs, "cut_v(f, (x, y. ^y))").is_ok());
        assert!(parse(Calculus::Lnf, "cut(x(y, z. ^z), w. ^w)").is_err());
    }
}
