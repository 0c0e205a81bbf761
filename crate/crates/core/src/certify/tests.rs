use super::*;

fn lam(a: i64, b: i64) -> [Rat; 2] {
    [Rat::from(a), Rat::from(b)]
}

#[test]
fn golden_certificate() {
    let c = cmd_verify(&Rat::from(2), Which::Alpha, &lam(1, 2)).unwrap();
    assert!(c.verified(), "{:?}", c.reasons());
    assert_eq!(c.exit_code(), 0);
    let inv = c.invariants.as_ref().unwrap();
    assert_eq!((inv.k2, inv.pg, inv.q, inv.chi), (7, 0, 0, 1));
    assert_eq!(inv.eigenspaces, [5, 2, 1, 0]);
    assert!(c.gamma0_match && c.jacobian_identity);
    assert_eq!(c.fibrations.iter().map(|f| f.budget.total).collect::<Vec<_>>(), [13, 13, 13]);
}

#[test]
fn certificate_json_is_stable_and_ordered() {
    let a = cmd_verify(&Rat::from(2), Which::Alpha, &lam(1, 2)).unwrap().to_json();
    let b = cmd_verify(&Rat::from(2), Which::Alpha, &lam(1, 2)).unwrap().to_json();
    assert_eq!(a, b);
    let keys = [
        "\"version\"", "\"input\"", "\"config\"", "\"conditions\"", "\"gamma0_match\"", "\"jacobian_identity\"",
        "\"catalog_identities\"", "\"fibrations\"", "\"snc\"", "\"nef\"", "\"p4\"", "\"invariants\"",
        "\"quotients\"", "\"status\"",
    ];
    let top: Vec<usize> = keys.iter().map(|k| a.find(&format!("\n  {k}")).expect(k)).collect();
    assert!(top.windows(2).all(|w| w[0] < w[1]));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["version"], "1");
    assert_eq!(v["status"], "VERIFIED");
    assert_eq!(v["input"]["u"], "2");
}

#[test]
fn excluded_point_gives_failed_certificate() {
    let c = cmd_verify(&Rat::from(2), Which::Alpha, &lam(1, 1)).unwrap();
    assert_eq!(c.exit_code(), 1);
    assert!(c.reasons()[0].starts_with("ExcludedPoint"), "{:?}", c.reasons());
    assert!(c.reasons()[0].contains("l_p0p4"));
    let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
    assert!(v["status"]["FAILED"].is_array());
    assert!(v["config"].is_null());
}

#[test]
fn bad_u_is_a_parameter_error() {
    for u in [0, 1, -1] {
        assert!(matches!(cmd_verify(&Rat::from(u), Which::Alpha, &lam(1, 2)), Err(CertifyError::BadParameter(_))));
    }
}

#[test]
fn tampered_catalog_fails_with_identity_witness() {
    let cat = Catalog::standard();
    let bad = cat.with_entry("B2", cat.get("B2") + DivClass::e());
    let c = cmd_verify_with(&Rat::from(2), Which::Alpha, &lam(1, 2), &bad).unwrap();
    assert!(!c.verified());
    assert!(c.reasons().iter().any(|r| r.starts_with("catalog:") && r.contains("B2")), "{:?}", c.reasons());
}

#[test]
fn lam_grid_counts_projective_points() {
    // n = 1: (0:1), (1:-1), (1:0), (1:1)
    assert_eq!(lam_grid(1), vec![lam(0, 1), lam(1, -1), lam(1, 0), lam(1, 1)]);
    let g = lam_grid(4);
    for (i, a) in g.iter().enumerate() {
        for b in &g[i + 1..] {
            // distinct projective points: the 2x2 determinant is nonzero
            assert!(!(&a[0] * &b[1] - &a[1] * &b[0]).is_zero());
        }
    }
}

#[test]
fn search_covers_grid_once() {
    let grid = SearchGrid { u: vec![Rat::from(2), Rat::new(3, 2)], which: vec![Which::Alpha, Which::Beta], lam: lam_grid(2), full: false };
    let n = grid.u.len() * grid.which.len() * grid.lam.len();
    let r = cmd_search(grid).unwrap();
    assert_eq!(r.points, n);
    assert_eq!(r.hits.len() + r.failures.values().sum::<usize>(), n);
    assert_eq!(r.failures.keys().collect::<Vec<_>>(), ["ExcludedPoint"]);
}

#[test]
fn empty_grid_is_an_error() {
    let grid = SearchGrid { u: vec![], which: vec![Which::Alpha], lam: lam_grid(1), full: false };
    assert_eq!(cmd_search(grid), Err(CertifyError::EmptyGrid));
}

#[test]
fn catalog_dump() {
    let d = cmd_catalog();
    let l1 = d.entries.iter().find(|e| e.name == "Lambda1").unwrap();
    assert_eq!(l1.class, DivClass([3, -1, -1, 0, -1, -1, -1, 0, -1, -1, -2]));
    let g1 = d.entries.iter().find(|e| e.name == "Gamma1").unwrap();
    assert_eq!(g1.genus, 0);
    let di = d.entries.iter().position(|e| e.name == "D").unwrap();
    for n in crate::picard::NODAL {
        let ci = d.entries.iter().position(|e| e.name == n).unwrap();
        assert_eq!(d.intersection_table[di][ci], 0);
    }
    assert!(d.identities.iter().all(|i| i.holds));
    assert!(d.to_text().contains("intersection table"));
}
