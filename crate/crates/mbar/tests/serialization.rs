//! JSON and CSV round trips and byte determinism.

mod common;

use mbar::catalog::{build_audited, ClassParams};
use mbar::io::{format_rational, from_json, parse_rational, to_csv, to_json, to_json_pretty};
use mbar::pic::{q, DivisorClass, ModuliBase};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = common::class(&mut rng, 8, 6);
        let text = to_json(&a);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(to_json(&back), text);
        prop_assert_eq!(from_json(&to_json_pretty(&a)).unwrap(), a);
    }

    #[test]
    fn catalog_classes_round_trip(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (name, p) = common::class_params(&mut rng, 7, 5);
        let a = build_audited(name, &p).unwrap().class;
        prop_assert_eq!(from_json(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn rationals_round_trip(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = common::rational(&mut rng);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }
}

#[test]
fn weierstrass_document_is_fixed() {
    let w = build_audited("weierstrass", &ClassParams { g: 3, ..Default::default() }).unwrap().class;
    assert_eq!(
        to_json(&w),
        r#"{"g":3,"n":1,"lambda":"-1","psi":["6"],"delta0":"0","boundary":[{"i":1,"S":[1],"c":"-3"},{"i":2,"S":[1],"c":"-1"}]}"#
    );
    assert_eq!(
        to_csv(&w).unwrap(),
        "generator,i,S,c\nlambda,,,-1\npsi_1,,,6\ndelta_0,,,0\ndelta_{1:{1}},1,1,-3\ndelta_{2:{1}},2,1,-1\n"
    );
}

#[test]
fn mirror_keys_are_accepted() {
    // δ_{1:{1}} on M̄_{3,2} is written here through its complement δ_{2:{2}}.
    let text = r#"{"g":3,"n":2,"lambda":"0","psi":["0","0"],"delta0":"0","boundary":[{"i":2,"S":[2],"c":"5/3"}]}"#;
    let a = from_json(text).unwrap();
    let mut b = DivisorClass::zero(ModuliBase::new(3, 2).unwrap());
    b.add_boundary(1, &[1], &(q(5) / q(3))).unwrap();
    assert_eq!(a, b);
}

#[test]
fn malformed_documents_are_rejected() {
    for text in [
        r#"{"g":3,"n":2,"lambda":"0","psi":["0"],"delta0":"0","boundary":[]}"#,
        r#"{"g":3,"n":1,"lambda":"1/0","psi":["0"],"delta0":"0","boundary":[]}"#,
        r#"{"g":3,"n":1,"lambda":"x","psi":["0"],"delta0":"0","boundary":[]}"#,
        r#"{"g":3,"n":1,"lambda":"0","psi":["0"],"delta0":"0","boundary":[{"i":0,"S":[1],"c":"1"}]}"#,
        r#"{"g":0,"n":1,"lambda":"0","psi":["0"],"delta0":"0","boundary":[]}"#,
        "not json",
    ] {
        assert!(from_json(text).is_err(), "{text}");
    }
}
