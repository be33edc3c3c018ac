//! Structural invariants, driven by proptest seeds through the crate's own generators.

use essence::direct_style::{cnf_negative, cps_inverse, is_cnf, is_ves, pi_normalize_ga, psi, theta, TermVes};
use essence::harness::gen::{gen_c, gen_ga, gen_q, gen_ves, gen_vfs, sized};
use essence::harness::{gen_typed_any, GenConfig, Rng64};
use essence::lambda_c::{admin_normalize, check_c, instantiate_c, is_anf};
use essence::ljq::{is_lnf, knl};
use essence::vfs::{embed_lnf, from_lnf};
use essence::{SimpleType, Syntax};
use proptest::prelude::*;
use rand::SeedableRng;

fn rng(seed: u64) -> Rng64 {
    Rng64::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn alpha_eq_is_reflexive_and_size_positive(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 20, gen_c);
        prop_assert!(t.alpha_eq(&t.clone()));
        prop_assert!(t.size() >= 1);
    }

    #[test]
    fn admin_normal_forms_are_anf_and_stable(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 16, gen_c);
        let n = admin_normalize(&t).unwrap().last().clone();
        prop_assert!(is_anf(&n), "{n}");
        let again = admin_normalize(&n).unwrap();
        prop_assert!(again.is_empty());
    }

    #[test]
    fn admin_normalization_keeps_types(seed in any::<u64>()) {
        let cfg = GenConfig::default();
        let mut r = rng(seed);
        let Ok((ctx, t)) = gen_typed_any(&cfg, &mut r) else { return Ok(()) };
        let a = instantiate_c(&ctx, &t, &SimpleType::atom("a")).unwrap();
        let n = admin_normalize(&t).unwrap().last().clone();
        prop_assert!(check_c(&ctx, &n, &a).is_ok(), "{t} ~> {n} : {a}");
    }

    #[test]
    fn knl_lands_in_lnf_and_is_idempotent(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 16, |r, s| gen_q(r, s, false));
        let n = knl(&t);
        prop_assert!(is_lnf(&n), "{n}");
        prop_assert!(knl(&n).alpha_eq(&n));
    }

    #[test]
    fn lnf_embedding_round_trips(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 20, gen_vfs);
        let q = embed_lnf(&t);
        prop_assert!(is_lnf(&q), "{q}");
        prop_assert!(from_lnf(&q).unwrap().alpha_eq(&t));
    }

    #[test]
    fn ves_and_vfs_round_trip(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 20, gen_ves);
        prop_assume!(is_ves(&t));
        let v = TermVes::new(t.clone()).unwrap();
        prop_assert!(theta(&psi(&v)).alpha_eq(&v));
        let w = sized(&mut rng(seed ^ 1), 20, gen_vfs);
        prop_assert!(psi(&theta(&w)).alpha_eq(&w));
    }

    #[test]
    fn pi_normal_forms_are_cnf(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 14, |r, s| gen_ga(r, s, false));
        let n = pi_normalize_ga(&t, 100_000).unwrap();
        prop_assert!(is_cnf(&n), "{n}");
    }

    #[test]
    fn negative_translation_inverts_on_cnf(seed in any::<u64>()) {
        let t = sized(&mut rng(seed), 20, |r, s| gen_ga(r, s, true));
        let back = cps_inverse(&cnf_negative(&t)).unwrap();
        prop_assert!(back.alpha_eq(&t), "{t} vs {back}");
    }
}
