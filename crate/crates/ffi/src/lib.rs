//! C interface to `essence`.
//!
//! Terms cross the boundary as opaque `EssTerm` handles. Every entry point
//! returns an `EssStatus`; on anything but `ESS_STATUS_OK` the message is available
//! from `ess_last_error_message` on the same thread until the next call.
//! Strings handed out must be released with `ess_string_free`, terms with
//! `ess_term_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use essence::cli::{self, Pipeline, DEFAULT_MAX_STEPS};
use essence::harness::SuiteConfig;
use essence::syntax::{self, Term};
use essence::{Calculus, Error, Rule};

/// A parsed term together with the calculus it belongs to.
pub struct EssTerm {
    term: Term,
    calculus: Calculus,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EssStatus {
    Ok = 0,
    /// Typing, well-formedness and other semantic errors.
    Failed = 1,
    /// Bad input: syntax, unknown names, disabled rules, mismatched stages.
    Usage = 2,
    /// The step budget ran out.
    FuelExhausted = 3,
    /// A property suite ran and found counterexamples.
    PropertyFailed = 4,
    NullArgument = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn status_of(e: &Error) -> EssStatus {
    set_error(e.to_string());
    match cli::exit_code(e) {
        3 => EssStatus::FuelExhausted,
        2 => EssStatus::Usage,
        _ => EssStatus::Failed,
    }
}

struct Bail(EssStatus);

type Ffi<T> = Result<T, Bail>;

impl From<Error> for Bail {
    fn from(e: Error) -> Bail {
        Bail(status_of(&e))
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Ffi<&'a str> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(Bail(EssStatus::NullArgument));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        Bail(EssStatus::InvalidUtf8)
    })
}

unsafe fn optional<'a>(p: *const c_char, what: &str) -> Ffi<Option<&'a str>> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn handle<'a>(p: *const EssTerm) -> Ffi<&'a EssTerm> {
    p.as_ref().ok_or_else(|| {
        set_error("term handle is null");
        Bail(EssStatus::NullArgument)
    })
}

fn out_ptr<T>(p: *mut T) -> Ffi<()> {
    if p.is_null() {
        set_error("output pointer is null");
        return Err(Bail(EssStatus::NullArgument));
    }
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn boxed(term: Term, calculus: Calculus) -> *mut EssTerm {
    Box::into_raw(Box::new(EssTerm { term, calculus }))
}

fn guard(f: impl FnOnce() -> Ffi<EssStatus>) -> EssStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Bail(s))) => s,
        Err(_) => {
            set_error("internal panic");
            EssStatus::Panic
        }
    }
}

/// Parses `source` as a term of `calculus` (a tag such as `lc`, `vfs`, `cps`).
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ess_parse(calculus: *const c_char, source: *const c_char, out: *mut *mut EssTerm) -> EssStatus {
    guard(|| {
        out_ptr(out)?;
        let calc: Calculus = text(calculus, "calculus")?.parse()?;
        let t = syntax::parse(calc, text(source, "source")?)?;
        *out = boxed(t, calc);
        Ok(EssStatus::Ok)
    })
}

/// Renders a term in the concrete syntax `ess_parse` reads.
///
/// # Safety
/// `term` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ess_print(term: *const EssTerm, out: *mut *mut c_char) -> EssStatus {
    guard(|| {
        out_ptr(out)?;
        *out = c_string(handle(term)?.term.to_string());
        Ok(EssStatus::Ok)
    })
}

/// Tag of the calculus a term belongs to. The string is static; do not free it.
///
/// # Safety
/// `term` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn ess_term_calculus(term: *const EssTerm) -> *const c_char {
    match term.as_ref() {
        None => ptr::null(),
        Some(t) => calculus_tag(t.calculus).as_ptr(),
    }
}

fn calculus_tag(c: Calculus) -> &'static CStr {
    use std::collections::HashMap;
    use std::sync::OnceLock;
    static TAGS: OnceLock<HashMap<Calculus, CString>> = OnceLock::new();
    let tags = TAGS.get_or_init(|| Calculus::ALL.iter().map(|c| (*c, CString::new(c.tag()).unwrap())).collect());
    tags[&c].as_c_str()
}

/// Runs a comma-separated pipeline of stages and returns the final term.
/// An empty pipeline yields a copy of the input.
///
/// # Safety
/// As for `ess_parse`.
#[no_mangle]
pub unsafe extern "C" fn ess_translate(term: *const EssTerm, pipeline: *const c_char, out: *mut *mut EssTerm) -> EssStatus {
    guard(|| {
        out_ptr(out)?;
        let t = handle(term)?;
        let p: Pipeline = text(pipeline, "pipeline")?.parse()?;
        let snaps = cli::translate(&t.term, t.calculus, &p)?;
        *out = match snaps.last() {
            Some(s) => boxed(s.term.clone(), s.calculus),
            None => boxed(t.term.clone(), t.calculus),
        };
        Ok(EssStatus::Ok)
    })
}

/// Normalizes in the term's own calculus. `rules` is null for every rule of
/// the calculus, or a comma-separated list; `max_steps` of 0 means the default
/// budget. `steps` may be null.
///
/// # Safety
/// As for `ess_parse`; `steps` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ess_normalize(
    term: *const EssTerm,
    rules: *const c_char,
    max_steps: usize,
    out: *mut *mut EssTerm,
    steps: *mut usize,
) -> EssStatus {
    guard(|| {
        out_ptr(out)?;
        let t = handle(term)?;
        let rules: Option<Vec<Rule>> = match optional(rules, "rules")? {
            None => None,
            Some(s) => Some(s.split(',').map(|r| r.trim().parse()).collect::<Result<_, Error>>()?),
        };
        let fuel = if max_steps == 0 { DEFAULT_MAX_STEPS } else { max_steps };
        let n = cli::normalize(&t.term, t.calculus, rules.as_deref(), fuel)?;
        if !steps.is_null() {
            *steps = n.steps;
        }
        *out = boxed(n.term, t.calculus);
        Ok(EssStatus::Ok)
    })
}

/// Synthesizes the type of a term, or checks it against `ascription`.
/// `context` is null or a list like `f : a -> a, x : a`.
///
/// # Safety
/// As for `ess_parse`.
#[no_mangle]
pub unsafe extern "C" fn ess_typecheck(
    term: *const EssTerm,
    context: *const c_char,
    ascription: *const c_char,
    out: *mut *mut c_char,
) -> EssStatus {
    guard(|| {
        out_ptr(out)?;
        let t = handle(term)?;
        let ctx = match optional(context, "context")? {
            Some(s) => syntax::parse_context(s)?,
            None => Default::default(),
        };
        let asc = optional(ascription, "ascription")?.map(syntax::parse_type).transpose()?;
        let ty = cli::typecheck(&t.term, t.calculus, &ctx, asc.as_ref())?;
        *out = c_string(ty.to_string());
        Ok(EssStatus::Ok)
    })
}

/// Runs a property suite (or `all`). `samples` of 0 keeps each property's
/// default count. The rendered report goes to `report` unless it is null.
/// Returns `ESS_STATUS_PROPERTY_FAILED` when a counterexample was found.
///
/// # Safety
/// As for `ess_parse`; `report` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ess_check(suite: *const c_char, seed: u64, samples: usize, report: *mut *mut c_char) -> EssStatus {
    guard(|| {
        let mut cfg = SuiteConfig::with_seed(seed);
        if samples > 0 {
            cfg.samples = Some(samples);
        }
        let reports = cli::check(text(suite, "suite")?, &cfg)?;
        if !report.is_null() {
            *report = c_string(reports.iter().map(|r| r.render_text()).collect());
        }
        if reports.iter().all(|r| r.passed()) {
            Ok(EssStatus::Ok)
        } else {
            set_error("property suite found counterexamples");
            Ok(EssStatus::PropertyFailed)
        }
    })
}

/// # Safety
/// `term` must be null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ess_term_free(term: *mut EssTerm) {
    if !term.is_null() {
        drop(Box::from_raw(term));
    }
}

/// # Safety
/// `s` must be null or an unfreed string from this library.
#[no_mangle]
pub unsafe extern "C" fn ess_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Owned by the library.
#[no_mangle]
pub extern "C" fn ess_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
