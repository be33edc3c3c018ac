//! Simple types, typing contexts, and the unifier the checkers share.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::name::Name;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    Atom(Arc<str>),
    Arrow(Box<SimpleType>, Box<SimpleType>),
    Bot,
}

impl SimpleType {
    pub fn atom(a: &str) -> SimpleType {
        SimpleType::Atom(Arc::from(a))
    }

    pub fn arrow(a: SimpleType, b: SimpleType) -> SimpleType {
        SimpleType::Arrow(Box::new(a), Box::new(b))
    }

    /// `A -> _|_`
    pub fn neg(a: SimpleType) -> SimpleType {
        SimpleType::arrow(a, SimpleType::Bot)
    }

    pub fn size(&self) -> usize {
        match self {
            SimpleType::Arrow(a, b) => 1 + a.size() + b.size(),
            _ => 1,
        }
    }

    /// Value-type translation shared by the CPS and negative translations:
    /// atoms stay, `A -> B` becomes `A' -> ~~B'`.
    pub fn cps_value(&self) -> SimpleType {
        match self {
            SimpleType::Arrow(a, b) => SimpleType::arrow(a.cps_value(), b.cps_computation()),
            t => t.clone(),
        }
    }

    /// `~~A'`
    pub fn cps_computation(&self) -> SimpleType {
        SimpleType::neg(SimpleType::neg(self.cps_value()))
    }

    /// Class A: atoms and `A -> B` with `B` in class B.
    pub fn in_class_a(&self) -> bool {
        match self {
            SimpleType::Atom(_) => true,
            SimpleType::Arrow(a, b) => a.in_class_a() && b.in_class_b(),
            SimpleType::Bot => false,
        }
    }

    /// Class B: `~~A` with `A` in class A.
    pub fn in_class_b(&self) -> bool {
        match self.neg_body().and_then(|t| t.neg_body()) {
            Some(a) => a.in_class_a(),
            None => false,
        }
    }

    fn neg_body(&self) -> Option<&SimpleType> {
        match self {
            SimpleType::Arrow(a, b) if **b == SimpleType::Bot => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::Atom(a) => write!(f, "{a}"),
            SimpleType::Bot => write!(f, "_|_"),
            SimpleType::Arrow(a, b) => {
                if matches!(**a, SimpleType::Arrow(..)) {
                    write!(f, "({a}) -> {b}")
                } else {
                    write!(f, "{a} -> {b}")
                }
            }
        }
    }
}

impl fmt::Debug for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite map from names to types.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct TypingContext {
    entries: BTreeMap<Name, SimpleType>,
}

impl TypingContext {
    pub fn new() -> TypingContext {
        TypingContext::default()
    }

    /// Adds a declaration; redeclaring a name at a different type is an error.
    pub fn declare(&mut self, x: Name, t: SimpleType) -> Result<()> {
        match self.entries.get(&x) {
            Some(old) if *old != t => Err(Error::InconsistentContext(x)),
            _ => {
                self.entries.insert(x, t);
                Ok(())
            }
        }
    }

    pub fn with(mut self, x: Name, t: SimpleType) -> TypingContext {
        self.entries.insert(x, t);
        self
    }

    pub fn get(&self, x: &Name) -> Option<&SimpleType> {
        self.entries.get(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, &SimpleType)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map_types(&self, f: impl Fn(&SimpleType) -> SimpleType) -> TypingContext {
        TypingContext { entries: self.entries.iter().map(|(k, v)| (k.clone(), f(v))).collect() }
    }
}

/// Type with unification variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ty {
    Meta(u32),
    Atom(Arc<str>),
    Arrow(Box<Ty>, Box<Ty>),
    Bot,
}

impl Ty {
    pub fn arrow(a: Ty, b: Ty) -> Ty {
        Ty::Arrow(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Ty) -> Ty {
        Ty::arrow(a, Ty::Bot)
    }

    pub fn from_simple(t: &SimpleType) -> Ty {
        match t {
            SimpleType::Atom(a) => Ty::Atom(a.clone()),
            SimpleType::Bot => Ty::Bot,
            SimpleType::Arrow(a, b) => Ty::arrow(Ty::from_simple(a), Ty::from_simple(b)),
        }
    }
}

/// First-order unifier over `Ty` with an occurs check, plus a scoped environment.
#[derive(Default)]
pub struct Unifier {
    subst: Vec<Option<Ty>>,
    env: Vec<(Name, Ty)>,
}

impl Unifier {
    pub fn new(ctx: &TypingContext) -> Unifier {
        let mut u = Unifier::default();
        for (x, t) in ctx.iter() {
            u.env.push((x.clone(), Ty::from_simple(t)));
        }
        u
    }

    pub fn meta(&mut self) -> Ty {
        self.subst.push(None);
        Ty::Meta(self.subst.len() as u32 - 1)
    }

    pub fn lookup(&self, x: &Name) -> Result<Ty> {
        self.env
            .iter()
            .rev()
            .find(|(n, _)| n == x)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| Error::UnboundVariable(x.clone()))
    }

    pub fn bind(&mut self, x: &Name, t: Ty) {
        self.env.push((x.clone(), t));
    }

    pub fn unbind(&mut self) {
        self.env.pop();
    }

    pub fn resolve(&self, t: &Ty) -> Ty {
        match t {
            Ty::Meta(m) => match &self.subst[*m as usize] {
                Some(t2) => self.resolve(t2),
                None => t.clone(),
            },
            Ty::Arrow(a, b) => Ty::arrow(self.resolve(a), self.resolve(b)),
            _ => t.clone(),
        }
    }

    fn shallow(&self, t: &Ty) -> Ty {
        let mut cur = t.clone();
        while let Ty::Meta(m) = cur {
            match &self.subst[m as usize] {
                Some(t2) => cur = t2.clone(),
                None => break,
            }
        }
        cur
    }

    fn occurs(&self, m: u32, t: &Ty) -> bool {
        match self.shallow(t) {
            Ty::Meta(n) => n == m,
            Ty::Arrow(a, b) => self.occurs(m, &a) || self.occurs(m, &b),
            _ => false,
        }
    }

    pub fn unify(&mut self, expected: &Ty, found: &Ty) -> Result<()> {
        let (a, b) = (self.shallow(expected), self.shallow(found));
        match (&a, &b) {
            (Ty::Meta(m), Ty::Meta(n)) if m == n => Ok(()),
            (Ty::Meta(m), t) | (t, Ty::Meta(m)) => {
                if self.occurs(*m, t) {
                    return Err(self.mismatch(&a, &b));
                }
                self.subst[*m as usize] = Some(t.clone());
                Ok(())
            }
            (Ty::Atom(x), Ty::Atom(y)) if x == y => Ok(()),
            (Ty::Bot, Ty::Bot) => Ok(()),
            (Ty::Arrow(a1, b1), Ty::Arrow(a2, b2)) => {
                self.unify(a1, a2).map_err(|_| self.mismatch(&a, &b))?;
                self.unify(b1, b2).map_err(|_| self.mismatch(&a, &b))
            }
            _ => Err(self.mismatch(&a, &b)),
        }
    }

    fn mismatch(&self, a: &Ty, b: &Ty) -> Error {
        Error::TypeMismatch { expected: self.show(a), found: self.show(b) }
    }

    pub fn show(&self, t: &Ty) -> String {
        match self.resolve(t) {
            Ty::Meta(m) => format!("?{m}"),
            Ty::Atom(a) => a.to_string(),
            Ty::Bot => "_|_".into(),
            Ty::Arrow(a, b) => format!("({} -> {})", self.show(&a), self.show(&b)),
        }
    }

    /// Ground type, if no unification variable remains.
    pub fn ground(&self, t: &Ty) -> Option<SimpleType> {
        match self.resolve(t) {
            Ty::Meta(_) => None,
            Ty::Atom(a) => Some(SimpleType::Atom(a)),
            Ty::Bot => Some(SimpleType::Bot),
            Ty::Arrow(a, b) => Some(SimpleType::arrow(self.ground(&a)?, self.ground(&b)?)),
        }
    }

    /// Ground type with every remaining unification variable read as `fill`.
    pub fn ground_or(&self, t: &Ty, fill: &SimpleType) -> SimpleType {
        match self.resolve(t) {
            Ty::Meta(_) => fill.clone(),
            Ty::Atom(a) => SimpleType::Atom(a),
            Ty::Bot => SimpleType::Bot,
            Ty::Arrow(a, b) => SimpleType::arrow(self.ground_or(&a, fill), self.ground_or(&b, fill)),
        }
    }

    /// Class A check where unresolved variables count as atoms.
    pub fn class_a(&self, t: &Ty) -> bool {
        match self.resolve(t) {
            Ty::Meta(_) | Ty::Atom(_) => true,
            Ty::Bot => false,
            Ty::Arrow(a, b) => self.class_a(&a) && self.class_b(&b),
        }
    }

    pub fn class_b(&self, t: &Ty) -> bool {
        match self.resolve(t) {
            Ty::Arrow(n, bot) if bot == Box::new(Ty::Bot) => match *n {
                Ty::Arrow(a, bot2) if bot2 == Box::new(Ty::Bot) => self.class_a(&a),
                _ => false,
            },
            _ => false,
        }
    }
}

/// Runs an inference closure and returns the ground result type.
pub fn synthesize(
    ctx: &TypingContext,
    what: &dyn fmt::Display,
    f: impl FnOnce(&mut Unifier) -> Result<Ty>,
) -> Result<SimpleType> {
    let mut u = Unifier::new(ctx);
    let t = f(&mut u)?;
    u.ground(&t).ok_or_else(|| Error::CannotSynthesize(what.to_string()))
}

/// Like [`synthesize`], but an undetermined type is instantiated at `fill`.
pub fn synthesize_or(
    ctx: &TypingContext,
    fill: &SimpleType,
    f: impl FnOnce(&mut Unifier) -> Result<Ty>,
) -> Result<SimpleType> {
    let mut u = Unifier::new(ctx);
    let t = f(&mut u)?;
    Ok(u.ground_or(&t, fill))
}

/// Runs an inference closure and checks the result against `expected`.
pub fn check_against(
    ctx: &TypingContext,
    expected: &SimpleType,
    f: impl FnOnce(&mut Unifier) -> Result<Ty>,
) -> Result<()> {
    let mut u = Unifier::new(ctx);
    let t = f(&mut u)?;
    u.unify(&Ty::from_simple(expected), &t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cps_type_translation() {
        let a = SimpleType::atom("a");
        let ab = SimpleType::arrow(a.clone(), SimpleType::atom("b"));
        assert_eq!(ab.cps_value().to_string(), "a -> (b -> _|_) -> _|_");
        assert!(ab.cps_value().in_class_a());
        assert!(ab.cps_computation().in_class_b());
        assert!(!SimpleType::Bot.in_class_a());
    }

    #[test]
    fn unify_occurs_check() {
        let mut u = Unifier::default();
        let m = u.meta();
        assert!(u.unify(&m, &Ty::arrow(m.clone(), Ty::Bot)).is_err());
    }

    #[test]
    fn declare_rejects_conflict() {
        let mut g = TypingContext::new();
        g.declare(Name::new("x"), SimpleType::atom("a")).unwrap();
        assert!(g.declare(Name::new("x"), SimpleType::atom("b")).is_err());
    }
}
