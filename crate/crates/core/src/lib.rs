//! Call-by-value calculi, their translations, and a harness that checks the
//! relations between them.

pub mod cli;
pub mod cps;
pub mod direct_style;
pub mod error;
pub mod harness;
pub mod lambda_c;
pub mod ljq;
pub mod name;
pub mod rewrite;
pub mod syntax;
pub mod types;
pub mod vfs;

pub use error::{Error, Result};
pub use name::Name;
pub use rewrite::{Calculus, Path, Rule, RuleId, Syntax, System, Trace};
pub use types::{SimpleType, TypingContext};
