use std::ffi::{c_char, CStr, CString};
use std::ptr;

use essence_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    ess_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = ess_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn parse(calc: &str, src: &str) -> *mut EssTerm {
    let mut t = ptr::null_mut();
    assert_eq!(ess_parse(c(calc).as_ptr(), c(src).as_ptr(), &mut t), EssStatus::Ok, "{}", last_error());
    t
}

unsafe fn print(t: *const EssTerm) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(ess_print(t, &mut s), EssStatus::Ok);
    take(s)
}

#[test]
fn parse_print_and_calculus() {
    unsafe {
        let t = parse("lc", "(\\x. x)   y");
        assert_eq!(print(t), "(\\x. x) y");
        assert_eq!(CStr::from_ptr(ess_term_calculus(t)).to_str().unwrap(), "lc");
        ess_term_free(t);
        assert!(ess_term_calculus(ptr::null()).is_null());
    }
}

#[test]
fn syntax_errors_report_position() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ess_parse(c("lc").as_ptr(), c("\\x. )").as_ptr(), &mut t), EssStatus::Usage);
        assert!(t.is_null());
        assert!(last_error().contains("1:5"));
        assert_eq!(ess_parse(c("nope").as_ptr(), c("x").as_ptr(), &mut t), EssStatus::Usage);
        assert!(last_error().contains("nope"));
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ess_parse(ptr::null(), c("x").as_ptr(), &mut t), EssStatus::NullArgument);
        assert_eq!(ess_parse(c("lc").as_ptr(), c("x").as_ptr(), ptr::null_mut()), EssStatus::NullArgument);
        let mut s = ptr::null_mut();
        assert_eq!(ess_print(ptr::null(), &mut s), EssStatus::NullArgument);
        ess_term_free(ptr::null_mut());
        ess_string_free(ptr::null_mut());
    }
}

#[test]
fn translate_matches_direct_cps() {
    unsafe {
        let t = parse("lc", "(\\x. x) y");
        let (mut two, mut one) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ess_translate(t, c("vfs_translate,negative").as_ptr(), &mut two), EssStatus::Ok);
        assert_eq!(ess_translate(t, c("cps_translate").as_ptr(), &mut one), EssStatus::Ok);
        assert_eq!(CStr::from_ptr(ess_term_calculus(two)).to_str().unwrap(), "cps");
        let a = essence::syntax::parse(essence::Calculus::Cps, &print(two)).unwrap();
        let b = essence::syntax::parse(essence::Calculus::Cps, &print(one)).unwrap();
        assert!(essence::Syntax::alpha_eq(&a, &b));

        let mut same = ptr::null_mut();
        assert_eq!(ess_translate(t, c("").as_ptr(), &mut same), EssStatus::Ok);
        assert_eq!(print(same), print(t));

        let mut bad = ptr::null_mut();
        assert_eq!(ess_translate(t, c("negative").as_ptr(), &mut bad), EssStatus::Usage);
        for p in [t, one, two, same] {
            ess_term_free(p);
        }
    }
}

#[test]
fn normalize_counts_steps_and_runs_out_of_fuel() {
    unsafe {
        let t = parse("lc", "(\\x. x) ((\\y. y) z)");
        let mut n = ptr::null_mut();
        let mut steps = 0usize;
        assert_eq!(ess_normalize(t, ptr::null(), 0, &mut n, &mut steps), EssStatus::Ok);
        assert_eq!(print(n), "z");
        let direct = essence::cli::normalize(
            &essence::syntax::parse(essence::Calculus::LambdaC, "(\\x. x) ((\\y. y) z)").unwrap(),
            essence::Calculus::LambdaC,
            None,
            100,
        )
        .unwrap();
        assert_eq!(steps, direct.steps);
        assert!(steps > 0);
        ess_term_free(n);

        let mut n = ptr::null_mut();
        assert_eq!(ess_normalize(t, c("let_v").as_ptr(), 0, &mut n, ptr::null_mut()), EssStatus::Ok);
        assert_eq!(print(n), print(t));
        ess_term_free(n);

        let mut n = ptr::null_mut();
        assert_eq!(ess_normalize(t, c("no_such_rule").as_ptr(), 0, &mut n, ptr::null_mut()), EssStatus::Usage);
        ess_term_free(t);

        let omega = parse("lc", "(\\x. x x) (\\x. x x)");
        let mut n = ptr::null_mut();
        assert_eq!(ess_normalize(omega, ptr::null(), 10, &mut n, ptr::null_mut()), EssStatus::FuelExhausted);
        assert!(n.is_null());
        ess_term_free(omega);
    }
}

#[test]
fn typecheck_with_and_without_ascription() {
    unsafe {
        let t = parse("lc", "\\x. f x");
        let mut ty = ptr::null_mut();
        let st = ess_typecheck(t, c("f : a -> a").as_ptr(), c("a -> a").as_ptr(), &mut ty);
        assert_eq!(st, EssStatus::Ok);
        assert_eq!(take(ty), "a -> a");
        let mut ty = ptr::null_mut();
        assert_eq!(ess_typecheck(t, ptr::null(), ptr::null(), &mut ty), EssStatus::Failed);
        let app = parse("lc", "f x");
        let mut ty = ptr::null_mut();
        assert_eq!(ess_typecheck(app, c("f : a -> b, x : a").as_ptr(), ptr::null(), &mut ty), EssStatus::Ok);
        assert_eq!(take(ty), "b");
        ess_term_free(t);
        ess_term_free(app);
    }
}

#[test]
fn check_runs_a_suite() {
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(ess_check(c("lemma-anf").as_ptr(), 3, 20, &mut report), EssStatus::Ok);
        assert!(take(report).starts_with("PASS lemma-anf"));
        assert_eq!(ess_check(c("no-such-suite").as_ptr(), 0, 0, ptr::null_mut()), EssStatus::Usage);
    }
}
