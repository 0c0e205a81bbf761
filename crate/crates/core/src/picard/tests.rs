use proptest::prelude::*;

use super::*;
use crate::config::{mk_config, mk_params, Which};
use crate::linsys::h0;
use crate::qalg::Rat;

fn cat() -> Catalog {
    Catalog::standard()
}

fn golden() -> Config {
    mk_config(&mk_params(&Rat::from(2)).unwrap(), Which::Alpha, &[Rat::from(1), Rat::from(2)]).unwrap()
}

#[test]
fn gram_is_diagonal() {
    for i in 0..RANK {
        for j in 0..RANK {
            let expect = if i != j { 0 } else if i == 0 { 1 } else { -1 };
            assert_eq!(pair(&DivClass::basis(i), &DivClass::basis(j)), expect);
        }
    }
}

#[test]
fn pairing_examples() {
    let c = cat();
    assert_eq!(pair(&c.get("K"), &c.get("K")), -1);
    assert_eq!(pair(&c.get("D"), &c.get("D")), 7);
    assert_eq!(pair(&c.get("B1"), &c.get("B3")), 3);
    assert_eq!(pair(&c.get("B2"), &c.get("B3")), 1);
    assert_eq!(pair(&c.get("B1"), &c.get("B2")), 1);
    assert_eq!(pair(&c.get("E"), &c.get("B3")), 1);
}

#[test]
fn genus_and_self_intersection_of_named_curves() {
    let c = cat();
    for n in NODAL.iter().chain(&["Gamma1", "Gamma2", "Lambda1", "Lambda2"]) {
        assert_eq!(adjunction_genus(&c.get(n)), 0, "{n}");
        assert_eq!(pair(&c.get(n), &c.get(n)), -2, "{n}");
    }
    for n in ["Gamma0", "Lambda0", "B1", "B2"] {
        assert_eq!(adjunction_genus(&c.get(n)), 1, "{n}");
    }
    assert_eq!(adjunction_genus(&c.get("B3")), 0);
    assert_eq!(pair(&c.get("B3"), &c.get("B3")), -1);
}

#[test]
fn riemann_roch_examples() {
    let c = cat();
    assert_eq!(rr_chi(&DivClass::ZERO), 1);
    for k in 1..=4 {
        assert_eq!(rr_chi(&(-c.get("K") + DivClass::ekp(k))), 1);
    }
    assert_eq!(rr_chi(&c.get("D")), 5);
}

#[test]
fn all_identities_hold() {
    let bad: Vec<_> = verify_identities(&cat()).into_iter().filter(|(_, ok)| !ok).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn tampering_is_detected() {
    let mut b2 = cat().get("B2");
    b2.0[1] += 1;
    let t = cat().with_entry("B2", b2);
    let r = verify_identities(&t);
    assert!(r.iter().any(|(n, ok)| n == "D = B2+F" && !ok));
}

#[test]
fn catalog_spot_values() {
    let c = cat();
    assert_eq!(c.get("Lambda1").0, [3, -1, -1, 0, -1, -1, -1, 0, -1, -1, -2]);
    for n in NODAL {
        assert_eq!(pair(&c.get("D"), &c.get(n)), 0);
    }
    assert_eq!(c.entries().len(), 28);
    let t = c.intersection_table();
    assert!(t.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == t[j][i])));
}

#[test]
fn euler_number_bookkeeping() {
    // K^2 + e = 12 chi with e(W) = 3 + 10
    assert_eq!(pair(&DivClass::canonical(), &DivClass::canonical()) + 13, 12);
}

#[test]
fn class_to_spec_examples() {
    let c = cat();
    let g = golden();
    let s = class_to_spec(&(-2 * c.get("K")), &g).unwrap();
    assert_eq!(s.degree, 6);
    assert_eq!(s.conditions.len(), 6);
    assert!(s.conditions[1..5].iter().all(|b| b.mult == 2 && b.infnear.as_ref().unwrap().weight == 2));
    assert_eq!(h0(&s), 0);
    let kl1 = c.get("K") + c.get("L1");
    assert_eq!(kl1, 2 * DivClass::l() - 2 * DivClass::e0() - DivClass::ekp(3) - DivClass::ekp(4) - DivClass::e());
    let s = class_to_spec(&kl1, &g).unwrap();
    assert_eq!(s.conditions[1].vanishing_monomials(), vec![(0, 0)]);
    assert_eq!(h0(&s), 0);
    assert_eq!(h0(&class_to_spec(&c.get("B3"), &g).unwrap()), 1);
    assert!(matches!(class_to_spec(&c.get("K"), &g), Err(PicardError::NotEffectivePattern(_))));
}

#[test]
fn h0_table() {
    let c = cat();
    let g = golden();
    let h = |a: DivClass| h0(&class_to_spec(&a, &g).unwrap());
    let k = c.get("K");
    assert_eq!(h(-2 * k), 0);
    assert_eq!(h(c.get("F")), 2);
    assert_eq!(h(c.get("D")), 5);
    for n in ["B1", "B2", "B3", "Gamma0", "Lambda0", "Gamma1", "Gamma2", "Lambda1", "Lambda2"] {
        assert_eq!(h(c.get(n)), 1, "{n}");
    }
    for n in ["L1", "L2", "L3"] {
        assert_eq!(h(k + c.get(n)), 0, "K+{n}");
    }
}

#[test]
fn pushforward_examples() {
    let c = cat();
    let e = DivClass::e();
    let k1 = ContractedClass::canonical(Contraction::E);
    let gamma = -2 * c.get("K") + 2 * e;
    assert_eq!(pushforward_contract(&gamma, &e).unwrap(), k1.scaled(-2));
    assert_eq!(pushforward_contract(&c.get("Gamma0"), &e).unwrap(), k1.scaled(-1));
    assert_eq!(k1.pair(&k1), 0);
    let b3 = c.get("B3");
    let k2 = ContractedClass::canonical(Contraction::B3);
    assert_eq!(pushforward_contract(&c.get("Lambda0"), &b3).unwrap(), k2.scaled(-1));
    assert_eq!(k2.pair(&k2), 0);
    assert!(matches!(
        pushforward_contract(&c.get("F"), &c.get("F")),
        Err(PicardError::UnsupportedContraction(_))
    ));
    // dropping L along B3 moves its coefficient onto E0 and E
    let pf = pushforward_contract(&DivClass::l(), &b3).unwrap();
    assert_eq!(pf.coeffs, vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
}

fn arb_class() -> impl Strategy<Value = DivClass> {
    proptest::array::uniform11(-4i64..=4).prop_map(DivClass)
}

proptest! {
    #[test]
    fn pushforward_pairing(a in arb_class(), b in arb_class(), along_e in any::<bool>()) {
        let c = if along_e { Contraction::E } else { Contraction::B3 }.class();
        let pa = pushforward_contract(&a, &c).unwrap();
        let pb = pushforward_contract(&b, &c).unwrap();
        prop_assert_eq!(pair(&a, &b), pa.pair(&pb) - pair(&a, &c) * pair(&b, &c));
    }

    #[test]
    fn pairing_is_symmetric_and_bilinear(a in arb_class(), b in arb_class(), x in arb_class()) {
        prop_assert_eq!(pair(&a, &b), pair(&b, &a));
        prop_assert_eq!(pair(&(a + b), &x), pair(&a, &x) + pair(&b, &x));
    }

    #[test]
    fn genus_is_integral(a in arb_class()) {
        let k = DivClass::canonical();
        prop_assert_eq!((pair(&a, &a) + pair(&a, &k)).rem_euclid(2), 0);
    }
}
