//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bicover::bidouble::Kappa;
use bicover::certify::{certify, cmd_verify, cmd_verify_with, Certificate};
use bicover::config::{
    apply_1324, check_configuration, excluded_curves, gamma0_closed, gamma0_spec, gamma1_spec, gamma2_spec,
    jacobian_certificate, mk_config, mk_params, point_on_conic, q_poly, Which,
};
use bicover::linsys::{condition_matrix, h0, member_basis, BaseCondition, LinSysSpec};
use bicover::picard::{adjunction_genus, class_to_spec, pair, verify_identities, Catalog, DivClass, NODAL};
use bicover::plane::{monomial_count, ProjPoint};
use bicover::qalg::Rat;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn lam(a: i64, b: i64) -> [Rat; 2] {
    [Rat::from(a), Rat::from(b)]
}

fn golden() -> bicover::config::Config {
    mk_config(&mk_params(&Rat::from(2)).unwrap(), Which::Alpha, &lam(1, 2)).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cert = cmd_verify(&Rat::from(2), Which::Alpha, &lam(1, 2)).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    check(cert.verified(), format!("status {:?}", cert.status))?;
    let s = cert.invariants.as_ref().ok_or("no invariants")?;
    check((s.k2, s.pg, s.q, s.chi) == (7, 0, 0, 1), format!("K2, pg, q, chi = {:?}", (s.k2, s.pg, s.q, s.chi)))?;
    check(s.eigenspaces == [5, 2, 1, 0], format!("eigenspaces {:?}", s.eigenspaces))?;
    check(s.kr == [5, 3, 1], format!("KR {:?}", s.kr))?;
    check(s.genus_r == [3, 2, 1], format!("genera {:?}", s.genus_r))?;
    check(s.k == [9, 7, 5], format!("k {:?}", s.k))?;
    let q = &cert.quotients.as_ref().ok_or("no quotients")?.quotients;
    let k2: Vec<i64> = q.iter().map(|x| x.k2_quotient).collect();
    check(k2 == [-2, 0, 2], format!("quotient K2 {k2:?}"))?;
    let kappa: Vec<Kappa> = q.iter().map(|x| x.kappa).collect();
    check(kappa == [Kappa::Dim(0), Kappa::Dim(1), Kappa::GeneralType], format!("kappa {kappa:?}"))?;
    check(took < Duration::from_secs(10), format!("took {took:?}"))?;
    Ok(format!("VERIFIED in {:.2} s", took.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let cat = Catalog::standard();
    let c = golden();
    let k = DivClass::canonical();
    let h = |a: DivClass| class_to_spec(&a, &c).map(|s| h0(&s)).map_err(|e| e.to_string());
    let mut table = vec![
        ("-2K".to_string(), h(-2 * k)?, 0),
        ("D".to_string(), h(cat.get("D"))?, 5),
        ("F".to_string(), h(cat.get("F"))?, 2),
        ("B1".to_string(), h(cat.get("B1"))?, 1),
        ("B2".to_string(), h(cat.get("B2"))?, 1),
    ];
    for i in 1..=3 {
        table.push((format!("K+L{i}"), h(k + cat.get(&format!("L{i}")))?, 0));
    }
    let p0 = c.p0.clone();
    for (n, spec) in [("gamma0", gamma0_spec(&p0)), ("gamma1", gamma1_spec(&p0)), ("gamma2", gamma2_spec(&p0))] {
        table.push((n.to_string(), h0(&spec.map_err(|e| e.to_string())?), 1));
    }
    let bad: Vec<String> = table.iter().filter(|(_, g, w)| g != w).map(|(n, g, w)| format!("h0({n}) = {g}, want {w}")).collect();
    check(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} h0 values match", table.len()))
}

fn criterion_3() -> Outcome {
    let cat = Catalog::standard();
    let ids = verify_identities(&cat);
    let bad: Vec<&String> = ids.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    check(bad.is_empty(), format!("identities fail: {bad:?}"))?;
    let g = |n: &str| cat.get(n);
    let spots = [
        ("D^2", pair(&g("D"), &g("D")), 7),
        ("B1.B3", pair(&g("B1"), &g("B3")), 3),
        ("B2.B3", pair(&g("B2"), &g("B3")), 1),
        ("B1.B2", pair(&g("B1"), &g("B2")), 1),
        ("K^2", pair(&g("K"), &g("K")), -1),
    ];
    for (n, got, want) in spots {
        check(got == want, format!("{n} = {got}, want {want}"))?;
    }
    let rational = NODAL.iter().copied().chain(["Gamma1", "Gamma2", "Lambda1", "Lambda2"]);
    for n in rational {
        check(adjunction_genus(&g(n)) == 0, format!("genus of {n}"))?;
    }
    for n in ["Gamma0", "Lambda0", "B1", "B2"] {
        check(adjunction_genus(&g(n)) == 1, format!("genus of {n}"))?;
    }
    Ok(format!("{} identities, 5 spot values, 16 genera", ids.len()))
}

fn criterion_4() -> Outcome {
    let cat = Catalog::standard();
    let c = golden();
    let fibs = [
        bicover::fibration::verify_rational_fibration(&cat, &c),
        bicover::fibration::verify_elliptic_h1(&cat, &c),
        bicover::fibration::verify_elliptic_h2(&cat, &c),
    ];
    for f in &fibs {
        check(f.budget.total == 13, format!("{}: budget {}", f.name, f.budget.total))?;
        if let Some(i) = f.report.failures().next() {
            return Err(format!("{}: {} ({})", f.name, i.name, i.witness));
        }
    }
    for f in &fibs[1..] {
        check(f.blowdown_budget.as_ref().map(|b| b.total) == Some(12), "blowdown budget")?;
        let star = f.fibers.iter().filter(|d| d.kind == bicover::fibration::FiberKind::I0Star).count();
        check(star == 2, format!("{} I0* fibers", star))?;
    }
    check(fibs[1].multiple_fibers == Some(vec![vec![]]), format!("h1 extra multiple fibers {:?}", fibs[1].multiple_fibers))?;
    check(fibs[2].multiple_fibers == Some(vec![vec![2]]), format!("h2 multiple fibers {:?}", fibs[2].multiple_fibers))?;
    Ok("budgets 13/13/13, I0* patterns, canonical bundle formula, n0 = 2 unique".into())
}

fn criterion_5() -> Outcome {
    let us = [Rat::from(2), Rat::from(3), Rat::new(3, 2), Rat::new(5, 2), Rat::new(-7, 3), Rat::from(9)];
    for u in &us {
        let params = mk_params(u).map_err(|e| e.to_string())?;
        let c = [lam(1, 2), lam(1, 3), lam(2, 5)]
            .iter()
            .find_map(|l| mk_config(&params, Which::Alpha, l).ok())
            .ok_or(format!("no configuration at u = {u}"))?;
        check(jacobian_certificate(&c), format!("Jacobian at u = {u}"))?;
        let basis = member_basis(&gamma0_spec(&params.p0()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        check(basis.len() == 1, format!("gamma0 system dim {} at u = {u}", basis.len()))?;
        check(basis[0].proportional(&gamma0_closed(&params.t)), format!("gamma0 closed form at u = {u}"))?;
    }
    Ok(format!("{} values of u", us.len()))
}

fn sections(c: &Certificate) -> (Vec<bool>, Option<bicover::bidouble::SurfaceInvariants>) {
    let cond = c.conditions.as_ref().map(|r| r.entries().iter().map(|(_, x)| x.holds).collect()).unwrap_or_default();
    (cond, c.invariants.clone())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20261016);
    let mut on_conic = 0;
    let mut passed = 0;
    while passed < 50 {
        let u = loop {
            let u = Rat::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5));
            if mk_params(&u).is_ok() {
                break u;
            }
        };
        let params = mk_params(&u).unwrap();
        let p0 = params.p0();
        let which = if rng.gen_bool(0.5) { Which::Alpha } else { Which::Beta };
        let p = if rng.gen_bool(0.6) {
            let l = [Rat::from(rng.gen_range(0i64..=6)), Rat::from(rng.gen_range(-6i64..=6))];
            if l.iter().all(Rat::is_zero) {
                continue;
            }
            on_conic += 1;
            point_on_conic(&params, which, &l).map_err(|e| e.to_string())?
        } else {
            ProjPoint::ints(rng.gen_range(-20..=20), rng.gen_range(-20..=20), rng.gen_range(1..=20))
        };
        let cluster_hit = p == p0 || bicover::config::base_points().contains(&p);
        if cluster_hit {
            continue;
        }
        let on_q = q_poly(&params).eval(&p).is_zero();
        let off = excluded_curves(&params, &p).is_empty();
        let iv = check_configuration(&p0, &p).iv.holds;
        check(iv == (on_q && off), format!("u = {u}, p = {p}: (IV) {iv}, Q(p)=0 {on_q}, off excluded {off}"))?;
        passed += 1;
    }

    // (13)(24) symmetry on the certificate sections
    for (u, l) in [(Rat::from(2), lam(1, 2)), (Rat::new(3, 2), lam(1, 3))] {
        let c = mk_config(&mk_params(&u).unwrap(), Which::Alpha, &l).map_err(|e| e.to_string())?;
        let image = apply_1324(&c).map_err(|e| e.to_string())?;
        check(image.params.u == -u.clone(), "image lives at -u")?;
        check(sections(&certify(&c)) == sections(&certify(&image)), format!("u = {u}: sections differ"))?;
    }

    // monotone h0 and rank-nullity under added simple points
    let g = golden();
    let mut spec = LinSysSpec::new(4, vec![]).map_err(|e| e.to_string())?;
    let mut last = h0(&spec);
    for i in 0..12i64 {
        let q = ProjPoint::ints(rng.gen_range(-30..=30), rng.gen_range(-30..=30), 1 + i);
        if q == g.p0 || spec.conditions.iter().any(|c| c.point == q) {
            continue;
        }
        spec = spec.with(BaseCondition::ordinary(q, 1).unwrap()).map_err(|e| e.to_string())?;
        let now = h0(&spec);
        check(now <= last && now + 1 >= last, format!("h0 went {last} -> {now}"))?;
        let m = condition_matrix(&spec);
        check(m.rank() + now == monomial_count(4), "rank-nullity")?;
        last = now;
    }
    Ok(format!("{passed} random points ({on_conic} drawn on the conics), symmetry at 2 u values, monotone h0"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bicover")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn criterion_7() -> Outcome {
    for u in ["0", "1", "-1"] {
        let (code, err) = run_cli(&["verify", "--u", u, "--conic", "alpha", "--lam", "1:2"]);
        check(code == 2 && err.contains("bad parameter"), format!("u = {u}: exit {code}, {err}"))?;
    }
    // lam (0:1) lands on the line through p0 and p3
    let (code, err) = run_cli(&["verify", "--u", "2", "--conic", "alpha", "--lam", "0:1"]);
    check(code == 1 && err.contains("ExcludedPoint") && err.contains("l_p0p3"), format!("l_p0p3: exit {code}, {err}"))?;
    let (code, err) = run_cli(&["verify", "--u", "9", "--conic", "alpha", "--point", "13:-26:15"]);
    check(code == 1 && err.contains("ExcludedPoint") && err.contains("gamma0"), format!("gamma0: exit {code}, {err}"))?;
    let cat = Catalog::standard();
    let bad = cat.with_entry("Lambda1", cat.get("Lambda1") + DivClass::ek(1));
    let cert = cmd_verify_with(&Rat::from(2), Which::Alpha, &lam(1, 2), &bad).map_err(|e| e.to_string())?;
    check(
        cert.exit_code() == 1 && cert.reasons().iter().any(|r| r.contains("catalog") && r.contains("Lambda1")),
        format!("tampered catalog: {:?}", cert.reasons()),
    )?;
    Ok("bad u, point on l_p0p3, point on gamma0, tampered catalog".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("golden instance", criterion_1),
        ("h0 table", criterion_2),
        ("lattice suite", criterion_3),
        ("fibration suite", criterion_4),
        ("Jacobian and gamma0 closed form", criterion_5),
        ("property suite", criterion_6),
        ("negative inputs", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
