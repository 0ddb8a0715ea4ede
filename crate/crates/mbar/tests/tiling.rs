//! Every catalog constructor assigns each canonical boundary generator from
//! exactly one formula regime.

mod common;

use mbar::catalog::{build_audited, CLASS_NAMES};
use mbar::Error;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn check_seed(seed: u64) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let (name, params) = common::class_params(&mut rng, 8, 6);
    let built = build_audited(name, &params).map_err(|e| TestCaseError::fail(format!("{name} {params:?}: {e}")))?;
    let base = built.class.base();
    prop_assert!(base.g <= 8 && base.n <= 6, "{name} {params:?} landed on {base}");
    prop_assert!(built.audit.is_complete(), "{name} {params:?}: {:?}", built.audit);
    prop_assert_eq!(built.audit.generators, base.boundary_indices().len());
    prop_assert!(CLASS_NAMES.contains(&name));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn random_weights_tile(seed in any::<u64>()) {
        check_seed(seed)?;
    }
}

#[test]
fn one_point_families_tile_exhaustively() {
    use mbar::catalog::ClassParams;
    for g in 2..=8u32 {
        let p = |k: Option<u32>, h: Option<u32>| ClassParams { g, k, h, ..Default::default() };
        let mut jobs = vec![("weierstrass", p(None, None)), ("theta-char", p(None, None)), ("dinf", p(None, None))];
        for h in 2..=6 {
            jobs.push(("d1-mero", p(None, Some(h))));
        }
        if g >= 3 {
            jobs.extend([("residual", p(None, None)), ("diaz", p(None, None)), ("bn", p(None, None))]);
            jobs.extend((0..g).map(|k| ("d1-holo", p(Some(k), None))));
        }
        for (name, params) in jobs {
            let built = build_audited(name, &params).unwrap();
            assert!(built.audit.is_complete(), "{name} g={g}: {:?}", built.audit);
        }
    }
}

#[test]
fn coupled_regimes_are_all_used() {
    use mbar::catalog::{ClassParams, SpinParity};
    let params = ClassParams { g: 5, d: Some(vec![-3, -1, 2, 2]), parity: Some(SpinParity::Total), ..Default::default() };
    let audit = build_audited("coupled", &params).unwrap().audit;
    assert_eq!(audit.by_regime.len(), 2, "{audit:?}");
    assert!(audit.by_regime.values().all(|&c| c > 0));
}

#[test]
fn invalid_weights_are_rejected_not_mis_tiled() {
    use mbar::catalog::ClassParams;
    let bad = [
        ("logan", vec![2, 2]),
        ("theta-pullback", vec![1, 2, 1]),
        ("pinch", vec![-1, 1, 2]),
        ("coupled", vec![-2, 1, 1, 0]),
    ];
    for (name, d) in bad {
        let params = ClassParams { g: 3, d: Some(d.clone()), ..Default::default() };
        let err = build_audited(name, &params).unwrap_err();
        assert!(!matches!(err, Error::Tiling { .. }), "{name} {d:?}: {err}");
    }
}
