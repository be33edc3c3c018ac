//! Paths, rules, traces, and the generic rewriting engine.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::name::Name;

/// Sequence of child indices from the root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn child(&self, i: usize) -> Path {
        let mut v = self.0.clone();
        v.push(i);
        Path(v)
    }

    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn comparable(&self, other: &Path) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Path {
    type Err = Error;
    fn from_str(s: &str) -> Result<Path> {
        if s == "root" || s.is_empty() {
            return Ok(Path::root());
        }
        s.split('.')
            .map(|p| p.parse::<usize>().map_err(|_| Error::Malformed(format!("bad path {s}"))))
            .collect::<Result<Vec<_>>>()
            .map(Path)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Calculus {
    LambdaC,
    Anf,
    LjqOriginal,
    Ljq,
    Q,
    Lnf,
    Vfs,
    Rcps,
    Cps,
    SmallCps,
    Ves,
    Ces,
    Ga,
    Cnf,
}

impl Calculus {
    pub const ALL: [Calculus; 14] = [
        Calculus::LambdaC,
        Calculus::Anf,
        Calculus::LjqOriginal,
        Calculus::Ljq,
        Calculus::Q,
        Calculus::Lnf,
        Calculus::Vfs,
        Calculus::Rcps,
        Calculus::Cps,
        Calculus::SmallCps,
        Calculus::Ves,
        Calculus::Ces,
        Calculus::Ga,
        Calculus::Cnf,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Calculus::LambdaC => "lc",
            Calculus::Anf => "anf",
            Calculus::LjqOriginal => "ljq-orig",
            Calculus::Ljq => "ljq",
            Calculus::Q => "q",
            Calculus::Lnf => "lnf",
            Calculus::Vfs => "vfs",
            Calculus::Rcps => "rcps",
            Calculus::Cps => "cps",
            Calculus::SmallCps => "cps-small",
            Calculus::Ves => "ves",
            Calculus::Ces => "ces",
            Calculus::Ga => "ga",
            Calculus::Cnf => "cnf",
        }
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Calculus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Calculus> {
        Calculus::ALL
            .iter()
            .copied()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::UnknownCalculus(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Rule {
    B,
    LetV,
    EtaLet,
    Assoc,
    Let1,
    Let2,
    BV,
    BVPrime,
    SigmaV,
    EtaCut,
    Pi1,
    Pi2,
    BetaV,
    EtaK,
    /// Numbered rules of the sequent calculus with explicit cuts.
    Ljq(u8),
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::B => f.write_str("B"),
            Rule::LetV => f.write_str("let_v"),
            Rule::EtaLet => f.write_str("eta_let"),
            Rule::Assoc => f.write_str("assoc"),
            Rule::Let1 => f.write_str("let_1"),
            Rule::Let2 => f.write_str("let_2"),
            Rule::BV => f.write_str("B_v"),
            Rule::BVPrime => f.write_str("B_v'"),
            Rule::SigmaV => f.write_str("sigma_v"),
            Rule::EtaCut => f.write_str("eta_cut"),
            Rule::Pi1 => f.write_str("pi1"),
            Rule::Pi2 => f.write_str("pi2"),
            Rule::BetaV => f.write_str("beta_v"),
            Rule::EtaK => f.write_str("eta_k"),
            Rule::Ljq(n) => write!(f, "({n})"),
        }
    }
}

impl FromStr for Rule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Rule> {
        let r = match s {
            "B" => Rule::B,
            "let_v" => Rule::LetV,
            "eta_let" => Rule::EtaLet,
            "assoc" => Rule::Assoc,
            "let_1" => Rule::Let1,
            "let_2" => Rule::Let2,
            "B_v" => Rule::BV,
            "B_v'" => Rule::BVPrime,
            "sigma_v" => Rule::SigmaV,
            "eta_cut" => Rule::EtaCut,
            "pi1" => Rule::Pi1,
            "pi2" => Rule::Pi2,
            "beta_v" => Rule::BetaV,
            "eta_k" => Rule::EtaK,
            _ => {
                let t = s.trim_start_matches('(').trim_end_matches(')');
                match t.parse::<u8>() {
                    Ok(n) if (1..=14).contains(&n) => Rule::Ljq(n),
                    _ => return Err(Error::UnknownRule(s.to_string())),
                }
            }
        };
        Ok(r)
    }
}

/// A rule tagged with the calculus it belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RuleId {
    pub calculus: Calculus,
    pub rule: Rule,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.calculus, self.rule)
    }
}

/// Alpha-invariant view of a syntax tree. Bound variables are de Bruijn levels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree {
    pub label: String,
    /// Name occurrences carried by the node besides itself (binders, heads).
    pub leaves: u8,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn node(label: &str, leaves: u8, children: Vec<Tree>) -> Tree {
        Tree { label: label.to_string(), leaves, children }
    }

    pub fn size(&self) -> usize {
        1 + self.leaves as usize + self.children.iter().map(Tree::size).sum::<usize>()
    }

    /// Minimal paths at which two trees differ.
    pub fn diff(&self, other: &Tree) -> Vec<Path> {
        let mut out = Vec::new();
        diff_into(self, other, &mut Vec::new(), &mut out);
        out
    }
}

fn diff_into(a: &Tree, b: &Tree, path: &mut Vec<usize>, out: &mut Vec<Path>) {
    if a.label != b.label || a.leaves != b.leaves || a.children.len() != b.children.len() {
        out.push(Path(path.clone()));
        return;
    }
    for (i, (x, y)) in a.children.iter().zip(&b.children).enumerate() {
        path.push(i);
        diff_into(x, y, path, out);
        path.pop();
    }
}

/// Scope stack used while building trees.
#[derive(Default)]
pub struct Scope(Vec<Name>);

impl Scope {
    pub fn new() -> Scope {
        Scope::default()
    }

    pub fn var(&self, x: &Name) -> Tree {
        let label = match self.0.iter().rposition(|n| n == x) {
            Some(i) => format!("#{i}"),
            None => x.to_string(),
        };
        Tree { label, leaves: 0, children: Vec::new() }
    }

    pub fn label(&self, x: &Name) -> String {
        self.var(x).label
    }

    pub fn push(&mut self, x: &Name) {
        self.0.push(x.clone());
    }

    pub fn pop(&mut self) {
        self.0.pop();
    }

    pub fn under<T>(&mut self, x: &Name, f: impl FnOnce(&mut Scope) -> T) -> T {
        self.push(x);
        let r = f(self);
        self.pop();
        r
    }
}

/// Common syntax operations used by the engine and the harness.
pub trait Syntax: Clone + fmt::Display + Send + Sync {
    fn tree(&self) -> Tree;

    fn size(&self) -> usize {
        self.tree().size()
    }

    fn alpha_eq(&self, other: &Self) -> bool {
        self.tree() == other.tree()
    }
}

/// A reduction system over one syntax type.
pub trait System: Sync {
    type T: Syntax;

    fn calculus(&self) -> Calculus;

    /// Enabled rules, in priority order.
    fn rules(&self) -> Vec<Rule>;

    /// All redexes, ordered leftmost-outermost.
    fn redexes(&self, t: &Self::T) -> Vec<(Rule, Path)>;

    fn step(&self, t: &Self::T, rule: Rule, path: &Path) -> Result<Self::T>;

    fn rule_id(&self, rule: Rule) -> RuleId {
        RuleId { calculus: self.calculus(), rule }
    }
}

/// Orders redexes by path (pre-order) then by rule priority.
pub fn sort_redexes(rules: &[Rule], mut found: Vec<(Rule, Path)>) -> Vec<(Rule, Path)> {
    let prio = |r: &Rule| rules.iter().position(|x| x == r).unwrap_or(usize::MAX);
    found.sort_by(|a, b| a.1.cmp(&b.1).then(prio(&a.0).cmp(&prio(&b.0))));
    found
}

#[derive(Clone, Debug)]
pub struct TraceStep<T> {
    pub rule: RuleId,
    pub path: Path,
    pub result: T,
}

/// A replayable reduction sequence.
#[derive(Clone, Debug)]
pub struct Trace<T> {
    pub start: T,
    pub steps: Vec<TraceStep<T>>,
}

impl<T: Syntax> Trace<T> {
    pub fn new(start: T) -> Trace<T> {
        Trace { start, steps: Vec::new() }
    }

    pub fn last(&self) -> &T {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-derives every step with `sys` and compares results up to alpha.
    pub fn replay<S: System<T = T>>(&self, sys: &S) -> Result<()> {
        let mut cur = self.start.clone();
        for s in &self.steps {
            let next = sys.step(&cur, s.rule.rule, &s.path)?;
            if !next.alpha_eq(&s.result) {
                return Err(Error::Malformed(format!("trace step {} at {} does not replay", s.rule, s.path)));
            }
            cur = next;
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = format!("   {}\n", self.start);
        for s in &self.steps {
            out.push_str(&format!("-> {}  [{} @ {}]\n", s.result, s.rule, s.path));
        }
        out
    }
}

fn allowed(rule: Rule, only: Option<&[Rule]>) -> bool {
    only.map_or(true, |rs| rs.contains(&rule))
}

pub fn successors<S: System>(sys: &S, t: &S::T, only: Option<&[Rule]>) -> Vec<(Rule, Path, S::T)> {
    sys.redexes(t)
        .into_iter()
        .filter(|(r, _)| allowed(*r, only))
        .filter_map(|(r, p)| sys.step(t, r, &p).ok().map(|n| (r, p, n)))
        .collect()
}

pub fn is_normal<S: System>(sys: &S, t: &S::T, only: Option<&[Rule]>) -> bool {
    sys.redexes(t).iter().all(|(r, _)| !allowed(*r, only))
}

/// Leftmost-outermost normalization. On fuel exhaustion returns the partial trace.
pub fn normalize_partial<S: System>(
    sys: &S,
    t: &S::T,
    only: Option<&[Rule]>,
    fuel: usize,
) -> (Trace<S::T>, bool) {
    let mut trace = Trace::new(t.clone());
    loop {
        let cur = trace.last().clone();
        let next = sys
            .redexes(&cur)
            .into_iter()
            .filter(|(r, _)| allowed(*r, only))
            .find_map(|(r, p)| sys.step(&cur, r, &p).ok().map(|n| (r, p, n)));
        match next {
            None => return (trace, true),
            Some(_) if trace.len() >= fuel => return (trace, false),
            Some((r, p, n)) => trace.steps.push(TraceStep { rule: sys.rule_id(r), path: p, result: n }),
        }
    }
}

pub fn normalize<S: System>(sys: &S, t: &S::T, only: Option<&[Rule]>, fuel: usize) -> Result<Trace<S::T>> {
    match normalize_partial(sys, t, only, fuel) {
        (tr, true) => Ok(tr),
        (tr, false) => Err(Error::FuelExhausted { steps: tr.len() }),
    }
}

/// Every normal form reachable from `t`, distinct up to alpha.
pub fn brute_force_normal_forms<S: System>(
    sys: &S,
    t: &S::T,
    only: Option<&[Rule]>,
    limit: usize,
) -> Result<Vec<S::T>> {
    let mut seen: HashSet<Tree> = HashSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.tree());
    let mut normals: Vec<S::T> = Vec::new();
    let mut normal_keys: HashSet<Tree> = HashSet::new();
    while let Some(cur) = queue.pop_front() {
        let next = successors(sys, &cur, only);
        if next.is_empty() {
            if normal_keys.insert(cur.tree()) {
                normals.push(cur);
            }
            continue;
        }
        for (_, _, n) in next {
            if seen.insert(n.tree()) {
                if seen.len() > limit {
                    return Err(Error::FuelExhausted { steps: seen.len() });
                }
                queue.push_back(n);
            }
        }
    }
    Ok(normals)
}

/// Searches for a reduction from `start` to `goal` (up to alpha).
///
/// Tries a greedy pass restricted to the region where the terms differ, then a
/// breadth-first search pruned the same way, then an unpruned search.
/// `budget` bounds the number of terms expanded by each search.
pub fn find_witness<S: System>(
    sys: &S,
    start: &S::T,
    goal: &S::T,
    only: Option<&[Rule]>,
    budget: usize,
) -> Option<Trace<S::T>> {
    let goal_tree = goal.tree();
    if start.tree() == goal_tree {
        return Some(Trace::new(start.clone()));
    }
    if let Some(t) = greedy(sys, start, &goal_tree, only, budget) {
        return Some(t);
    }
    bfs(sys, start, &goal_tree, only, budget, true).or_else(|| bfs(sys, start, &goal_tree, only, budget, false))
}

fn relevant(p: &Path, diffs: &[Path]) -> bool {
    diffs.iter().any(|d| d.comparable(p))
}

fn greedy<S: System>(sys: &S, start: &S::T, goal: &Tree, only: Option<&[Rule]>, budget: usize) -> Option<Trace<S::T>> {
    let mut trace = Trace::new(start.clone());
    let mut seen = HashSet::new();
    seen.insert(start.tree());
    for _ in 0..budget {
        let cur = trace.last().clone();
        let diffs = cur.tree().diff(goal);
        if diffs.is_empty() {
            return Some(trace);
        }
        let next = sys
            .redexes(&cur)
            .into_iter()
            .filter(|(r, p)| allowed(*r, only) && relevant(p, &diffs))
            .find_map(|(r, p)| sys.step(&cur, r, &p).ok().map(|n| (r, p, n)))?;
        if !seen.insert(next.2.tree()) {
            return None;
        }
        trace.steps.push(TraceStep { rule: sys.rule_id(next.0), path: next.1, result: next.2 });
    }
    None
}

fn bfs<S: System>(
    sys: &S,
    start: &S::T,
    goal: &Tree,
    only: Option<&[Rule]>,
    budget: usize,
    prune: bool,
) -> Option<Trace<S::T>> {
    struct Node<T> {
        term: T,
        parent: Option<(usize, Rule, Path)>,
    }
    let mut nodes = vec![Node { term: start.clone(), parent: None }];
    let mut seen = HashSet::new();
    seen.insert(start.tree());
    let mut queue = VecDeque::from([0usize]);
    let mut expanded = 0;
    while let Some(i) = queue.pop_front() {
        expanded += 1;
        if expanded > budget {
            return None;
        }
        let cur = nodes[i].term.clone();
        let diffs = cur.tree().diff(goal);
        for (r, p) in sys.redexes(&cur) {
            if !allowed(r, only) || (prune && !relevant(&p, &diffs)) {
                continue;
            }
            let Ok(n) = sys.step(&cur, r, &p) else { continue };
            let key = n.tree();
            if !seen.insert(key.clone()) {
                continue;
            }
            nodes.push(Node { term: n, parent: Some((i, r, p)) });
            let j = nodes.len() - 1;
            if key == *goal {
                let mut steps = Vec::new();
                let mut at = j;
                while let Some((pi, r, p)) = nodes[at].parent.clone() {
                    steps.push(TraceStep { rule: sys.rule_id(r), path: p, result: nodes[at].term.clone() });
                    at = pi;
                }
                steps.reverse();
                return Some(Trace { start: start.clone(), steps });
            }
            queue.push_back(j);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_roundtrip() {
        let p = Path(vec![0, 2, 1]);
        assert_eq!(p.to_string().parse::<Path>().unwrap(), p);
        assert_eq!("root".parse::<Path>().unwrap(), Path::root());
    }

    #[test]
    fn rule_names_roundtrip() {
        for r in [Rule::B, Rule::BVPrime, Rule::SigmaV, Rule::Ljq(12), Rule::EtaK] {
            assert_eq!(r.to_string().parse::<Rule>().unwrap(), r);
        }
        assert!("nope".parse::<Rule>().is_err());
    }

    #[test]
    fn calculus_tags_roundtrip() {
        for c in Calculus::ALL {
            assert_eq!(c.tag().parse::<Calculus>().unwrap(), c);
        }
    }

    #[test]
    fn comparable_paths() {
        let a = Path(vec![0]);
        let b = Path(vec![0, 1]);
        let c = Path(vec![1]);
        assert!(a.comparable(&b) && b.comparable(&a));
        assert!(!b.comparable(&c));
    }
}
