//! Sequent-calculus terms: the three-cut calculus, the one-cut calculus, and
//! its kernel of left normal forms.

pub mod original;
pub mod q;

pub use original::{
    as_q, check_ljq, embed_q, embed_qv, explicit_cuts_on_abstractions, smp, smp_v, step_ljq, typecheck_ljq, Ljq,
    LjqMode, TermL, ValueL,
};
pub use q::{
    check_q, check_qv, cutvc, is_lnf, knl, knl_v, step_lnf, step_q, typecheck_q, Lnf, TermQ, ValueQ, Q,
};
