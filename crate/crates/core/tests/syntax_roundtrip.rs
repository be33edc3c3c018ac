//! print then parse is the identity up to alpha and whitespace.

use essence::cps::TermCps;
use essence::harness::gen::{gen_c, gen_ces, gen_cps, gen_ga, gen_ljq, gen_q, gen_ves, gen_vfs, sized, Rng64};
use essence::lambda_c::admin_normalize;
use essence::syntax::{parse, Term};
use essence::{Calculus, Syntax};
use proptest::prelude::*;
use rand::SeedableRng;

fn roundtrip(calc: Calculus, t: Term) -> Result<(), TestCaseError> {
    let printed = t.to_string();
    let back = parse(calc, &printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
    prop_assert!(back.alpha_eq(&t), "{} reparsed as {}", printed, back);
    let spaced = printed.replace(' ', " \n\t ");
    let back = parse(calc, &spaced).map_err(|e| TestCaseError::fail(format!("{spaced:?}: {e}")))?;
    prop_assert!(back.alpha_eq(&t));
    Ok(())
}

fn term(calc: Calculus, seed: u64) -> Term {
    let mut rng = Rng64::seed_from_u64(seed);
    let rng = &mut rng;
    match calc {
        Calculus::LambdaC => Term::C(sized(rng, 25, gen_c)),
        Calculus::Anf => Term::C(admin_normalize(&sized(rng, 25, gen_c)).unwrap().last().clone()),
        Calculus::Ves => Term::C(sized(rng, 25, gen_ves)),
        Calculus::Ces => Term::C(sized(rng, 25, gen_ces)),
        Calculus::Q => Term::Q(sized(rng, 25, |r, s| gen_q(r, s, false))),
        Calculus::Lnf => Term::Q(sized(rng, 25, |r, s| gen_q(r, s, true))),
        Calculus::Ljq | Calculus::LjqOriginal => Term::L(sized(rng, 25, gen_ljq)),
        Calculus::Vfs => Term::Vfs(sized(rng, 25, gen_vfs)),
        Calculus::Cps | Calculus::Rcps => Term::Cps(TermCps(Box::new(sized(rng, 25, |r, s| gen_cps(r, s, false))))),
        Calculus::SmallCps => Term::Command(sized(rng, 25, |r, s| gen_cps(r, s, true))),
        Calculus::Ga => Term::Ga(sized(rng, 25, |r, s| gen_ga(r, s, false))),
        Calculus::Cnf => Term::Ga(sized(rng, 25, |r, s| gen_ga(r, s, true))),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_identity(seed in any::<u64>()) {
        for calc in Calculus::ALL {
            if calc == Calculus::Rcps {
                continue;
            }
            roundtrip(calc, term(calc, seed))?;
        }
    }
}

#[test]
fn rcps_commands_roundtrip() {
    let t = parse(Calculus::Rcps, "\\k. (\\x. \\k. f x k) y k").unwrap();
    assert_eq!(t.to_string(), "\\k. (\\x. \\k. f x k) y k");
}
