use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::plane::{line_through, local_expansion};
use crate::qalg::q;

fn t() -> Rat {
    q(5, 4)
}

fn p0() -> ProjPoint {
    ProjPoint::new(t(), Rat::one(), Rat::one() + t()).unwrap()
}

fn pk(k: usize) -> ProjPoint {
    [
        ProjPoint::ints(1, 0, 0),
        ProjPoint::ints(0, 1, 0),
        ProjPoint::ints(0, 0, 1),
        ProjPoint::ints(1, 1, 1),
    ][k]
    .clone()
}

fn tangent(k: usize, m: usize, w: usize) -> BaseCondition {
    BaseCondition::infinitely_near(pk(k), m, line_through(&p0(), &pk(k)).unwrap(), w).unwrap()
}

fn gamma0_spec() -> LinSysSpec {
    let mut c = vec![BaseCondition::ordinary(p0(), 1).unwrap()];
    c.extend((0..4).map(|k| tangent(k, 1, 1)));
    LinSysSpec::new(3, c).unwrap()
}

#[test]
fn no_line_has_a_double_point() {
    let s = LinSysSpec::new(1, vec![BaseCondition::ordinary(ProjPoint::ints(2, 3, 7), 2).unwrap()]).unwrap();
    assert_eq!(condition_matrix(&s).rank(), 3);
    assert_eq!(h0(&s), 0);
    assert_eq!(member_basis(&s), Err(LinsysError::EmptySystem));
}

#[test]
fn conic_tangent_at_p3_p4_is_unique() {
    let s = LinSysSpec::new(
        2,
        vec![
            BaseCondition::ordinary(pk(0), 1).unwrap(),
            BaseCondition::ordinary(pk(1), 1).unwrap(),
            tangent(2, 1, 1),
            tangent(3, 1, 1),
        ],
    )
    .unwrap();
    assert_eq!(condition_matrix(&s).rank(), 5);
    let b = member_basis(&s).unwrap();
    // c_{-t} = -(1-t) x1 x2 + x1 x3 - t x2 x3
    let expect = HomPoly::from_terms(
        2,
        &[([1, 1, 0], t() - Rat::one()), ([1, 0, 1], Rat::one()), ([0, 1, 1], -t())],
    );
    assert!(b[0].proportional(&expect));
}

#[test]
fn unique_cubic_through_nine_conditions() {
    let s = gamma0_spec();
    assert_eq!(condition_matrix(&s).rank(), 9);
    let b = member_basis(&s).unwrap();
    assert_eq!(b.len(), 1);
    let one = Rat::one();
    let closed = HomPoly::from_terms(
        3,
        &[
            ([2, 1, 0], &one + t()),
            ([2, 0, 1], -one.clone()),
            ([1, 2, 0], -(&one + t())),
            ([0, 2, 1], t()),
            ([1, 0, 2], one.clone()),
            ([0, 1, 2], -t()),
        ],
    );
    assert!(b[0].proportional(&closed));
}

#[test]
fn pencil_of_lines() {
    let s = LinSysSpec::new(1, vec![BaseCondition::ordinary(p0(), 1).unwrap()]).unwrap();
    assert_eq!(h0(&s), 2);
}

#[test]
fn condition_validation() {
    assert_eq!(
        BaseCondition::infinitely_near(pk(0), 1, ProjLine::ints(1, 0, 0), 1),
        Err(LinsysError::LineMissesPoint)
    );
    assert_eq!(BaseCondition::ordinary(pk(0), 0), Err(LinsysError::VacuousCondition));
    let c = BaseCondition::ordinary(pk(0), 1).unwrap();
    assert!(matches!(
        LinSysSpec::new(2, vec![c.clone(), c]),
        Err(LinsysError::RepeatedPoint(_))
    ));
    assert_eq!(LinSysSpec::new(0, vec![]), Err(LinsysError::ZeroDegree));
}

#[test]
fn proximity_pattern_rows() {
    // weight larger than the multiplicity forces a singular point
    let c = tangent(0, 1, 2);
    assert_eq!(c.vanishing_monomials(), vec![(0, 0), (1, 0), (0, 1), (2, 0)]);
    let c = tangent(0, 2, 2);
    assert_eq!(c.vanishing_monomials(), vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0)]);
}

#[test]
fn irreducibility_examples() {
    let f = HomPoly::from_terms(2, &[([2, 0, 0], Rat::one()), ([0, 1, 1], Rat::one())]);
    assert!(irreducible_specialization_test(&f));
    let g = HomPoly::linear(Rat::one(), Rat::one(), Rat::zero())
        .mul(&HomPoly::linear(Rat::one(), Rat::zero(), Rat::one()));
    assert!(!irreducible_specialization_test(&g));
    // the verdict is over the rationals: x1^2 + x2^2 splits only over Q(i)
    let h = HomPoly::from_terms(2, &[([2, 0, 0], Rat::one()), ([0, 2, 0], Rat::one())]);
    assert_eq!(irreducibility(&h), Irreducibility::Proven);
    let x3sq = HomPoly::var(2).pow(2);
    assert_eq!(irreducibility(&x3sq), Irreducibility::Inconclusive);
    let cubic = member_basis(&gamma0_spec()).unwrap().remove(0);
    assert!(irreducible_specialization_test(&cubic));
}

/// Orders of `f` at the point and at the infinitely near point in the
/// direction `y = 0`, by explicit substitution `y = x w` in the chart.
fn blowup_orders(f: &HomPoly, c: &BaseCondition) -> (usize, usize) {
    let local = c.frame().local_expansion(f);
    let mut g: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for (e, a) in local.terms() {
        if !a.is_zero() {
            // x^i y^j -> x^(i+j) w^j
            *g.entry((e[0] + e[1], e[1])).or_insert_with(Rat::zero) += a;
        }
    }
    g.retain(|_, a| !a.is_zero());
    let m0 = g.keys().map(|k| k.0).min().unwrap();
    let m1 = g.keys().map(|(a, w)| a - m0 + w).min().unwrap();
    (m0, m1)
}

#[test]
fn members_satisfy_blowup_orders() {
    let spec = LinSysSpec::new(
        5,
        vec![
            BaseCondition::ordinary(p0(), 3).unwrap(),
            tangent(0, 1, 2),
            tangent(1, 1, 2),
            tangent(2, 1, 2),
            tangent(3, 1, 1),
        ],
    )
    .unwrap();
    for f in member_basis(&spec).unwrap_or_default() {
        for c in spec.conditions.iter().filter(|c| c.infnear.is_some()) {
            let (m0, m1) = blowup_orders(&f, c);
            let w = c.infnear.as_ref().unwrap().weight;
            assert!(m0 >= c.mult && m0 + m1 >= c.mult + w);
        }
    }
    for f in member_basis(&gamma0_spec()).unwrap() {
        for c in &gamma0_spec().conditions[1..] {
            assert_eq!(blowup_orders(&f, c), (1, 1));
        }
    }
}

#[test]
fn multiplicity_rows_match_local_expansion() {
    let f = member_basis(&gamma0_spec()).unwrap().remove(0);
    let local = local_expansion(&f, &p0(), None).unwrap();
    assert!(local.coeff(0, 0).is_zero());
}

fn arb_point() -> impl Strategy<Value = ProjPoint> {
    (-5i64..=5, -5i64..=5, 1i64..=5).prop_map(|(a, b, c)| ProjPoint::ints(a, b, c))
}

fn nonzero() -> impl Strategy<Value = Rat> {
    (1i64..=5, 1i64..=3, any::<bool>()).prop_map(|(n, d, s)| if s { q(n, d) } else { q(-n, d) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_frame_independent(
        a in nonzero(), f in nonzero(), b in -3i64..=3, c in -3i64..=3, e in -3i64..=3,
        m in 1usize..=2, w in 0usize..=3,
    ) {
        let cond = tangent(3, m, w);
        let spec = LinSysSpec::new(4, vec![cond.clone()]).unwrap();
        let base = cond.frame();
        let inv = base.inverse_matrix();
        let col = |j: usize| -> [Rat; 3] { std::array::from_fn(|r| inv.get(r, j).clone()) };
        let (other, off, pt) = (col(0), col(1), col(2));
        let mix = |u: &[Rat; 3], x: &Rat, v: &[Rat; 3], y: &Rat| -> [Rat; 3] {
            std::array::from_fn(|r| x * &u[r] + y * &v[r])
        };
        let c0 = mix(&other, &a, &pt, &Rat::from(b));
        let c1 = mix(&mix(&off, &Rat::one(), &other, &Rat::from(c)), &Rat::one(), &pt, &Rat::from(e));
        let c2 = mix(&pt, &f, &pt, &Rat::zero());
        let frame = ProjTransform::from_inverse_columns([&c0, &c1, &c2]).unwrap();
        let m1 = condition_matrix(&spec);
        let m2 = condition_matrix_in_frames(&spec, &[frame]).unwrap();
        prop_assert_eq!(m1.rank(), m2.rank());
        // same row space: stacking does not raise the rank
        let mut both = m1.clone();
        for r in 0..m2.rows() {
            both.push_row(m2.row(r).to_vec());
        }
        prop_assert_eq!(both.rank(), m1.rank());
    }

    #[test]
    fn adding_a_point_never_raises_h0(pts in proptest::collection::vec(arb_point(), 1..5), extra in arb_point(), d in 2usize..=4) {
        let mut conds: Vec<BaseCondition> = Vec::new();
        for p in pts {
            if !conds.iter().any(|c| c.point == p) {
                conds.push(BaseCondition::ordinary(p, 1).unwrap());
            }
        }
        prop_assume!(!conds.iter().any(|c| c.point == extra));
        let s = LinSysSpec::new(d, conds).unwrap();
        let before = h0(&s);
        let after = h0(&s.with(BaseCondition::ordinary(extra, 1).unwrap()).unwrap());
        prop_assert!(after <= before && before <= after + 1);
    }

    #[test]
    fn members_satisfy_their_conditions(p in arb_point(), m in 1usize..=2, w in 0usize..=2) {
        let dir = line_through(&p, &ProjPoint::ints(1, 2, 0)).ok();
        prop_assume!(dir.is_some());
        let c = BaseCondition::infinitely_near(p, m, dir.unwrap(), w).unwrap();
        let spec = LinSysSpec::new(3, vec![c.clone()]).unwrap();
        for f in member_basis(&spec).unwrap() {
            let (m0, m1) = blowup_orders(&f, &c);
            prop_assert!(m0 >= m && m0 + m1 >= m + w);
        }
    }
}
