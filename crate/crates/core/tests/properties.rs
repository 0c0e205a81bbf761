use proptest::prelude::*;

use bicover::certify::{certify, cmd_verify};
use bicover::config::{apply_1324, mk_config, mk_params, Which};
use bicover::qalg::Rat;

fn u_strategy() -> impl Strategy<Value = Rat> {
    (-7i64..=7, 1i64..=4)
        .prop_map(|(a, b)| Rat::new(a, b))
        .prop_filter("excluded u", |u| mk_params(u).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    /// The (13)(24) symmetry sends a configuration at u to one at -u with
    /// the same conditions and the same invariants.
    #[test]
    fn verify_commutes_with_symmetry(u in u_strategy(), a in 1i64..5, b in -5i64..6) {
        let params = mk_params(&u).unwrap();
        let Ok(c) = mk_config(&params, Which::Alpha, &[Rat::from(a), Rat::from(b)]) else {
            return Ok(());
        };
        let image = apply_1324(&c).unwrap();
        prop_assert_eq!(&image.params.u, &-u.clone());
        let (x, y) = (certify(&c), certify(&image));
        prop_assert_eq!(x.status.clone(), y.status.clone());
        prop_assert_eq!(&x.invariants, &y.invariants);
        let holds = |r: &bicover::certify::Certificate| {
            r.conditions.as_ref().map(|c| c.entries().map(|(_, k)| k.holds))
        };
        prop_assert_eq!(holds(&x), holds(&y));
    }

    /// Every point of either conic off the excluded locus verifies.
    #[test]
    fn generic_points_verify(u in u_strategy(), a in 1i64..4, b in -4i64..5, beta in any::<bool>()) {
        let which = if beta { Which::Beta } else { Which::Alpha };
        let lam = [Rat::from(a), Rat::from(b)];
        let cert = cmd_verify(&u, which, &lam).unwrap();
        if cert.config.is_some() {
            prop_assert!(cert.verified(), "{:?}", cert.reasons());
        } else {
            prop_assert!(cert.reasons()[0].starts_with("ExcludedPoint"));
        }
    }
}
