//! Variable names, freshness, and the reserved covariable.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A variable name: a textual stem plus an optional numeric suffix.
///
/// Parsed `x` is `{base: "x", uid: None}` and parsed `x3` is `{base: "x", uid: Some(3)}`.
/// Fresh names always carry a suffix, so they never collide with the reserved `k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name {
    pub base: Arc<str>,
    pub uid: Option<u32>,
}

pub type NameSet = BTreeSet<Name>;

impl Name {
    pub fn new(base: &str) -> Name {
        Name { base: Arc::from(base), uid: None }
    }

    pub fn with_uid(base: &str, uid: u32) -> Name {
        Name { base: Arc::from(base), uid: Some(uid) }
    }

    /// Splits trailing digits into the suffix. `x12` is base `x`, uid 12.
    pub fn parse(text: &str) -> Name {
        let stem = text.trim_end_matches(|c: char| c.is_ascii_digit());
        if stem.is_empty() || stem.len() == text.len() {
            return Name::new(text);
        }
        match text[stem.len()..].parse::<u32>() {
            Ok(uid) => Name::with_uid(stem, uid),
            Err(_) => Name::new(text),
        }
    }

    /// The reserved continuation variable.
    pub fn covar() -> Name {
        Name::new("k")
    }

    pub fn is_covar(&self) -> bool {
        self.uid.is_none() && &*self.base == "k"
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.uid {
            None => write!(f, "{}", self.base),
            Some(u) => write!(f, "{}{}", self.base, u),
        }
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Smallest-suffix name over `stem` not in `avoid`.
pub fn fresh_name(stem: &str, avoid: &NameSet) -> Name {
    let stem = if stem == "k" { "k_" } else { stem };
    let mut uid = 0;
    loop {
        let cand = Name::with_uid(stem, uid);
        if !avoid.contains(&cand) {
            return cand;
        }
        uid += 1;
    }
}

/// Fresh variant of an existing name, keeping its stem.
pub fn fresh_like(name: &Name, avoid: &NameSet) -> Name {
    fresh_name(&name.base, avoid)
}

/// Binder correspondence used by every alpha-equivalence check.
#[derive(Default)]
pub struct AlphaEnv {
    left: Vec<Name>,
    right: Vec<Name>,
}

impl AlphaEnv {
    pub fn new() -> AlphaEnv {
        AlphaEnv::default()
    }

    pub fn push(&mut self, l: &Name, r: &Name) {
        self.left.push(l.clone());
        self.right.push(r.clone());
    }

    pub fn pop(&mut self) {
        self.left.pop();
        self.right.pop();
    }

    pub fn var_eq(&self, l: &Name, r: &Name) -> bool {
        let li = self.left.iter().rposition(|n| n == l);
        let ri = self.right.iter().rposition(|n| n == r);
        match (li, ri) {
            (None, None) => l == r,
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_splits_suffix() {
        assert_eq!(Name::parse("x12"), Name::with_uid("x", 12));
        assert_eq!(Name::parse("x"), Name::new("x"));
        assert_eq!(Name::parse("x'"), Name::new("x'"));
        assert_eq!(Name::parse("x12").to_string(), "x12");
    }

    #[test]
    fn fresh_is_smallest_unused() {
        let mut avoid = NameSet::new();
        assert_eq!(fresh_name("x", &avoid), Name::with_uid("x", 0));
        avoid.insert(Name::with_uid("x", 0));
        avoid.insert(Name::with_uid("x", 1));
        assert_eq!(fresh_name("x", &avoid), Name::with_uid("x", 2));
    }

    #[test]
    fn fresh_never_reserved() {
        let n = fresh_name("k", &NameSet::new());
        assert!(!n.is_covar());
    }

    #[test]
    fn alpha_env_shadowing() {
        let (x, y) = (Name::new("x"), Name::new("y"));
        let mut env = AlphaEnv::new();
        env.push(&x, &y);
        assert!(env.var_eq(&x, &y));
        assert!(!env.var_eq(&x, &x));
        env.push(&x, &x);
        assert!(env.var_eq(&x, &x));
    }
}
