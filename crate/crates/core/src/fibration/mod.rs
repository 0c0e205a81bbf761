//! The rational fibration `|F|`, the two elliptic fibrations `|Gamma|` and
//! `|Lambda|`, and the facts about the branch curves that rest on them.

mod report;

pub use report::{Item, Report};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Config;
use crate::linsys::{h0, irreducibility, member_basis, BaseCondition, Irreducibility};
use crate::picard::{
    adjunction_genus, class_to_spec, pair, pushforward_contract, rr_chi, Catalog, ContractedClass, DivClass,
    CURVES, NODAL,
};
use crate::plane::{
    binary_resultant, line_through, restrict_to_line, singularity_is_node, tangent_cone, HomPoly,
    LineRestriction, ProjLine, ProjPoint,
};
use crate::qalg::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberKind {
    /// Two `(-1)`-curves meeting once.
    TwoComponent,
    /// `C + 2E' + C'` with the middle curve meeting both ends once.
    Chain,
    #[serde(rename = "I0star")]
    I0Star,
    DoubleSmooth,
    /// A smooth elliptic curve plus a `(-1)`-curve meeting it once.
    EllipticPlusExceptional,
}

impl FiberKind {
    pub fn euler(self) -> i64 {
        match self {
            FiberKind::TwoComponent => 3,
            FiberKind::Chain => 4,
            FiberKind::I0Star => 6,
            FiberKind::DoubleSmooth => 0,
            FiberKind::EllipticPlusExceptional => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub name: String,
    pub class: DivClass,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberDecomposition {
    pub fiber_class: DivClass,
    pub components: Vec<Component>,
    pub kind: FiberKind,
}

impl FiberDecomposition {
    fn new(fiber_class: DivClass, kind: FiberKind, parts: &[(&str, DivClass, i64)]) -> Self {
        FiberDecomposition {
            fiber_class,
            kind,
            components: parts
                .iter()
                .map(|(n, c, m)| Component { name: n.to_string(), class: *c, mult: *m })
                .collect(),
        }
    }

    fn label(&self) -> String {
        self.components
            .iter()
            .map(|c| if c.mult == 1 { c.name.clone() } else { format!("{}{}", c.mult, c.name) })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Sum, per-kind intersection pattern, and component genera.
    pub fn check(&self) -> Vec<Item> {
        let mut out = Vec::new();
        let label = self.label();
        let sum: DivClass = self.components.iter().map(|c| c.mult * c.class).sum();
        out.push(Item::new(format!("{label} sums to the fiber class"), sum == self.fiber_class, format!("{sum}")));
        let cs = &self.components;
        let p = |i: usize, j: usize| pair(&cs[i].class, &cs[j].class);
        let g = |i: usize| adjunction_genus(&cs[i].class);
        let (ok, why) = match self.kind {
            FiberKind::TwoComponent => (
                cs.len() == 2 && p(0, 1) == 1 && p(0, 0) == -1 && p(1, 1) == -1 && g(0) == 0 && g(1) == 0,
                "two rational (-1)-curves meeting once",
            ),
            FiberKind::Chain => (
                cs.len() == 3
                    && p(0, 1) == 1
                    && p(1, 2) == 1
                    && p(0, 2) == 0
                    && cs[1].mult == 2
                    && (0..3).all(|i| g(i) == 0),
                "ends meet the doubled middle curve once and miss each other",
            ),
            FiberKind::I0Star => (
                cs.len() == 5
                    && cs[0].mult == 2
                    && (1..5).all(|i| p(0, i) == 1 && cs[i].mult == 1)
                    && (1..5).all(|i| (i + 1..5).all(|j| p(i, j) == 0))
                    && (0..5).all(|i| p(i, i) == -2 && g(i) == 0),
                "central nodal curve meets four disjoint nodal tails once",
            ),
            FiberKind::DoubleSmooth => (
                cs.len() == 1 && cs[0].mult == 2 && p(0, 0) == 0 && g(0) == 1,
                "twice a smooth elliptic curve of square 0",
            ),
            FiberKind::EllipticPlusExceptional => (
                cs.len() == 2 && p(0, 1) == 1 && g(0) == 1 && p(1, 1) == -1 && g(1) == 0,
                "elliptic curve meeting a (-1)-curve once",
            ),
        };
        out.push(Item::new(format!("{label} has the {:?} pattern", self.kind), ok, why));
        out
    }
}

/// Components of distinct fibers are disjoint.
fn cross_fiber_items(fibers: &[FiberDecomposition]) -> Item {
    for (a, fa) in fibers.iter().enumerate() {
        for fb in &fibers[a + 1..] {
            for x in &fa.components {
                for y in &fb.components {
                    if pair(&x.class, &y.class) != 0 {
                        return Item::new(
                            "components of distinct fibers are disjoint",
                            false,
                            format!("{}.{} = {}", x.name, y.name, pair(&x.class, &y.class)),
                        );
                    }
                }
            }
        }
    }
    Item::new("components of distinct fibers are disjoint", true, format!("{} fibers", fibers.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BudgetEntry {
    pub kind: FiberKind,
    pub euler: i64,
}

/// `e(X) = e(generic fiber) e(P^1) + sum (e(F_s) - e(generic fiber))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerBudget {
    pub surface: String,
    pub generic_fiber_euler: i64,
    pub entries: Vec<BudgetEntry>,
    pub total: i64,
}

impl EulerBudget {
    pub fn new(surface: &str, generic: i64, kinds: &[FiberKind]) -> Self {
        let entries: Vec<BudgetEntry> = kinds.iter().map(|&k| BudgetEntry { kind: k, euler: k.euler() }).collect();
        let total = 2 * generic + entries.iter().map(|e| e.euler - generic).sum::<i64>();
        EulerBudget { surface: surface.into(), generic_fiber_euler: generic, entries, total }
    }
}

/// Multisets `n_1 <= ... <= n_s` of integers `>= 2` with
/// `sum (n_j - 1)/n_j = target`. The search is exhaustive: every term is at
/// least `1/2`, and in a nondecreasing list with `j` terms left each term
/// is at most `r/j` of the remaining `r`.
pub fn multiple_fiber_solutions(target: &Rat) -> Vec<Vec<u64>> {
    fn go(r: &Rat, min_n: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if r.is_zero() {
            out.push(acc.clone());
            return;
        }
        if r.is_negative() {
            return;
        }
        let half = Rat::new(1, 2);
        let max_terms = (r / &half).to_f64().floor() as u64;
        for terms in 1..=max_terms {
            // the smallest remaining term is at most r / terms
            let cap = r / Rat::from(terms as i64);
            if cap >= Rat::one() {
                continue;
            }
            // (n-1)/n <= cap  <=>  n <= 1/(1-cap)
            let n_max = (Rat::one() / (Rat::one() - &cap)).to_f64().floor() as u64;
            for n in min_n.max(2)..=n_max {
                let term = Rat::new(n as i64 - 1, n as i64);
                acc.push(n);
                go(&(r - &term), n, acc, out);
                acc.pop();
            }
            break;
        }
    }
    let mut out = Vec::new();
    go(target, 2, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// The coefficient `c` with `pf(K) = c pf(fiber)` on the blowdown, if any.
fn canonical_ratio(k: &ContractedClass, fiber: &ContractedClass) -> Option<Rat> {
    let i = fiber.coeffs.iter().position(|&x| x != 0)?;
    let c = Rat::new(k.coeffs[i], fiber.coeffs[i]);
    let ok = k
        .coeffs
        .iter()
        .zip(&fiber.coeffs)
        .all(|(a, b)| Rat::from(*a) == &c * Rat::from(*b));
    ok.then_some(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationReport {
    pub name: String,
    pub fiber_class: DivClass,
    pub fibers: Vec<FiberDecomposition>,
    pub budget: EulerBudget,
    pub blowdown_budget: Option<EulerBudget>,
    pub multiple_fibers: Option<Vec<Vec<u64>>>,
    pub report: Report,
}

impl FibrationReport {
    pub fn passes(&self) -> bool {
        self.report.passes() && self.budget.total == 13
    }
}

pub fn verify_rational_fibration(cat: &Catalog, c: &Config) -> FibrationReport {
    let f = cat.get("F");
    let mut r = Report::default();
    r.push("F^2 = 0", pair(&f, &f) == 0, pair(&f, &f).to_string());
    r.push("p_a(F) = 0", adjunction_genus(&f) == 0, adjunction_genus(&f).to_string());
    let h = class_to_spec(&f, c).map(|s| h0(&s));
    r.push("h0(F) = 2", h == Ok(2), format!("{h:?}"));
    let mut fibers = vec![FiberDecomposition::new(
        f,
        FiberKind::TwoComponent,
        &[("E", cat.get("E"), 1), ("B3", cat.get("B3"), 1)],
    )];
    for k in 1..=4 {
        fibers.push(FiberDecomposition::new(
            f,
            FiberKind::Chain,
            &[
                (&format!("C{k}"), cat.get(&format!("C{k}")), 1),
                (&format!("E{k}'"), DivClass::ekp(k), 2),
                (&format!("C{k}'"), cat.get(&format!("C{k}'")), 1),
            ],
        ));
    }
    for d in &fibers {
        r.extend(d.check());
    }
    r.items.push(cross_fiber_items(&fibers));
    let budget = EulerBudget::new(
        "W",
        2,
        &[FiberKind::TwoComponent, FiberKind::Chain, FiberKind::Chain, FiberKind::Chain, FiberKind::Chain],
    );
    r.push("Euler budget 2*2 + (3-2) + 4*(4-2) = 13", budget.total == 13, budget.total.to_string());
    FibrationReport {
        name: "rational fibration |F|".into(),
        fiber_class: f,
        fibers,
        budget,
        blowdown_budget: None,
        multiple_fibers: None,
        report: r,
    }
}

/// Restriction of `f` to `line` with the assigned multiplicities removed;
/// fails unless each assigned point has exactly the assigned multiplicity
/// on the line.
fn residual_on_line(f: &HomPoly, line: &ProjLine, assigned: &[(&ProjPoint, usize)]) -> Result<LineRestriction, String> {
    let mut r = restrict_to_line(f, line).map_err(|e| e.to_string())?;
    for (pt, m) in assigned {
        let got = r.multiplicity_at(pt).map_err(|e| e.to_string())?;
        if got != *m {
            return Err(format!("meets the line at {pt} with multiplicity {got}, assigned {m}"));
        }
        r = r.remove_root(pt, *m).map_err(|e| e.to_string())?;
    }
    Ok(r)
}

fn transversal_item(name: &str, f: &HomPoly, line: &ProjLine, assigned: &[(&ProjPoint, usize)], expect: i64) -> Item {
    match residual_on_line(f, line, assigned) {
        Err(e) => Item::new(name, false, e),
        Ok(r) => Item::new(
            name,
            r.degree as i64 == expect && r.is_squarefree(),
            format!("{} residual intersections, squarefree: {}", r.degree, r.is_squarefree()),
        ),
    }
}

/// Hurwitz: degree of the ramification divisor of a degree-`d` map from a
/// genus-`g` curve to the projective line.
pub fn hurwitz_ramification(g: i64, d: i64) -> i64 {
    2 * g - 2 + 2 * d
}

pub fn verify_elliptic_h1(cat: &Catalog, c: &Config) -> FibrationReport {
    let k = cat.get("K");
    let e = cat.get("E");
    let gamma = -2 * k + 2 * e;
    let mut r = Report::default();
    r.push("Gamma^2 = 0", pair(&gamma, &gamma) == 0, pair(&gamma, &gamma).to_string());
    r.push("K.Gamma = 0", pair(&k, &gamma) == 0, pair(&k, &gamma).to_string());
    r.push("p_a(Gamma) = 1", adjunction_genus(&gamma) == 1, adjunction_genus(&gamma).to_string());
    let g = |n: &str| cat.get(n);
    let fibers = vec![
        FiberDecomposition::new(
            gamma,
            FiberKind::I0Star,
            &[("Gamma1", g("Gamma1"), 2), ("C1", g("C1"), 1), ("C1'", g("C1'"), 1), ("C2", g("C2"), 1), ("C2'", g("C2'"), 1)],
        ),
        FiberDecomposition::new(
            gamma,
            FiberKind::I0Star,
            &[("Gamma2", g("Gamma2"), 2), ("C3", g("C3"), 1), ("C3'", g("C3'"), 1), ("C4", g("C4"), 1), ("C4'", g("C4'"), 1)],
        ),
        FiberDecomposition::new(gamma, FiberKind::DoubleSmooth, &[("Gamma0", g("Gamma0"), 2)]),
        FiberDecomposition::new(gamma, FiberKind::EllipticPlusExceptional, &[("B1", g("B1"), 1), ("E", e, 1)]),
    ];
    for d in &fibers {
        r.extend(d.check());
    }
    r.items.push(cross_fiber_items(&fibers));
    r.push("B1 = -2K+E", g("B1") == -2 * k + e, g("B1").to_string());
    r.push("B1.E = 1", pair(&g("B1"), &e) == 1, pair(&g("B1"), &e).to_string());
    for n in ["C1", "C1'", "C2", "C2'"] {
        let v = pair(&g("Gamma1"), &g(n));
        r.push(format!("Gamma1.{n} = 1"), v == 1, v.to_string());
    }
    let hk = class_to_spec(&(-2 * k), c).map(|s| h0(&s));
    r.push("h0(-2K) = 0", hk == Ok(0), format!("{hk:?}"));

    // canonical bundle formula on the contraction of E
    let pk = ContractedClass::canonical(crate::picard::Contraction::E);
    let pg = pushforward_contract(&gamma, &e).expect("E is contractible");
    let pg0 = pushforward_contract(&g("Gamma0"), &e).expect("E is contractible");
    r.push("K_W1^2 = K_W^2 + 1", pk.pair(&pk) == pair(&k, &k) + 1, pk.pair(&pk).to_string());
    r.push("Gamma' = -2K_W1", pg == pk.scaled(-2), "");
    r.push("Gamma0' = -K_W1", pg0 == pk.scaled(-1), "");
    let residual = pk.add(&pg).add(&pg0.scaled(-1));
    r.push(
        "K_W1 + Gamma' - Gamma0' = 0 (no further multiple fibers)",
        residual.is_zero(),
        format!("{:?}", residual.coeffs),
    );
    // sum (m_j - 1)/m_j over the other multiple fibers, in units of Gamma'
    let target = canonical_ratio(&pk, &pg).map(|x| x + Rat::one() - Rat::new(1, 2));
    let sols = target.as_ref().map(multiple_fiber_solutions);
    r.push(
        "only multiple fiber is 2Gamma0",
        sols.as_deref() == Some(&[vec![]][..]),
        format!("target {target:?}, solutions {sols:?}"),
    );
    let budget = EulerBudget::new(
        "W",
        0,
        &[FiberKind::I0Star, FiberKind::I0Star, FiberKind::DoubleSmooth, FiberKind::EllipticPlusExceptional],
    );
    let down = EulerBudget::new("W1", 0, &[FiberKind::I0Star, FiberKind::I0Star, FiberKind::DoubleSmooth]);
    r.push("Euler budget 6+6+0+1 = 13", budget.total == 13, budget.total.to_string());
    let twelve = 12 - pk.pair(&pk);
    r.push("e(W1) = 12 chi - K_W1^2 = 12", down.total == twelve && twelve == 12, down.total.to_string());

    // restriction of h1 to B3, realized on the line through p0 and p
    let b3 = g("B3");
    let deg = pair(&b3, &gamma);
    let ram = hurwitz_ramification(adjunction_genus(&b3), deg);
    let parts: Vec<i64> = ["Gamma0", "Gamma1", "Gamma2"].iter().map(|n| pair(&b3, &g(n))).collect();
    r.push(
        "deg R = 6 = sum B3.Gamma_j",
        deg == 4 && ram == 6 && parts == [2, 2, 2] && parts.iter().sum::<i64>() == ram,
        format!("deg {deg}, deg R {ram}, parts {parts:?}"),
    );
    match line_through(&c.p0, &c.p) {
        Err(e) => r.push("line p0 p exists", false, e.to_string()),
        Ok(l) => {
            r.items.push(transversal_item("B3 meets Gamma0 transversely", &c.gamma0, &l, &[(&c.p0, 1)], 2));
            r.items.push(transversal_item("B3 meets Gamma1 transversely", &c.gamma1, &l, &[], 2));
            r.items.push(transversal_item("B3 meets Gamma2 transversely", &c.gamma2, &l, &[], 2));
        }
    }
    FibrationReport {
        name: "elliptic fibration |-2K+2E|".into(),
        fiber_class: gamma,
        fibers,
        budget,
        blowdown_budget: Some(down),
        multiple_fibers: sols,
        report: r,
    }
}

/// The unique member of the system of class `name`, if any.
fn plane_model(cat: &Catalog, c: &Config, name: &str) -> Result<HomPoly, String> {
    let spec = class_to_spec(&cat.get(name), c).map_err(|e| e.to_string())?;
    let b = member_basis(&spec).map_err(|e| e.to_string())?;
    if b.len() != 1 {
        return Err(format!("{name}: system of dimension {}", b.len()));
    }
    Ok(b[0].primitive())
}

pub fn verify_elliptic_h2(cat: &Catalog, c: &Config) -> FibrationReport {
    let k = cat.get("K");
    let g = |n: &str| cat.get(n);
    let b3 = g("B3");
    let lambda = -2 * k + 2 * b3;
    let mut r = Report::default();
    r.push("Lambda^2 = 0", pair(&lambda, &lambda) == 0, pair(&lambda, &lambda).to_string());
    r.push("K.Lambda = 0", pair(&k, &lambda) == 0, pair(&k, &lambda).to_string());
    r.push("p_a(Lambda) = 1", adjunction_genus(&lambda) == 1, adjunction_genus(&lambda).to_string());
    let fibers = vec![
        FiberDecomposition::new(
            lambda,
            FiberKind::I0Star,
            &[("Lambda1", g("Lambda1"), 2), ("C1", g("C1"), 1), ("C1'", g("C1'"), 1), ("C3", g("C3"), 1), ("C3'", g("C3'"), 1)],
        ),
        FiberDecomposition::new(
            lambda,
            FiberKind::I0Star,
            &[("Lambda2", g("Lambda2"), 2), ("C2", g("C2"), 1), ("C2'", g("C2'"), 1), ("C4", g("C4"), 1), ("C4'", g("C4'"), 1)],
        ),
        FiberDecomposition::new(lambda, FiberKind::DoubleSmooth, &[("Lambda0", g("Lambda0"), 2)]),
        FiberDecomposition::new(lambda, FiberKind::EllipticPlusExceptional, &[("B2", g("B2"), 1), ("B3", b3, 1)]),
    ];
    for d in &fibers {
        r.extend(d.check());
    }
    r.items.push(cross_fiber_items(&fibers));
    r.push("Lambda0 = -K+B3", g("Lambda0") == -k + b3, g("Lambda0").to_string());
    let quartic = DivClass([4, -2, -1, -1, -1, -1, -1, -1, -1, -1, -2]);
    r.push("Lambda0 = 4L-2E0-sum(Ek+Ek')-2E", g("Lambda0") == quartic, quartic.to_string());
    r.push("B2.B3 = 1", pair(&g("B2"), &b3) == 1, pair(&g("B2"), &b3).to_string());

    let pk = ContractedClass::canonical(crate::picard::Contraction::B3);
    let pl = pushforward_contract(&lambda, &b3).expect("B3 is contractible");
    r.push("K_W2^2 = K_W^2 + 1", pk.pair(&pk) == pair(&k, &k) + 1, pk.pair(&pk).to_string());
    r.push("Lambda' = -2K_W2", pl == pk.scaled(-2), "");
    let target = canonical_ratio(&pk, &pl).map(|x| x + Rat::one());
    let sols = target.as_ref().map(multiple_fiber_solutions);
    r.push(
        "sum (n_j-1)/n_j = 1/2 forces a single double fiber",
        target == Some(Rat::new(1, 2)) && sols.as_deref() == Some(&[vec![2u64]][..]),
        format!("target {target:?}, solutions {sols:?}"),
    );
    let budget = EulerBudget::new(
        "W",
        0,
        &[FiberKind::I0Star, FiberKind::I0Star, FiberKind::DoubleSmooth, FiberKind::EllipticPlusExceptional],
    );
    let down = EulerBudget::new("W2", 0, &[FiberKind::I0Star, FiberKind::I0Star, FiberKind::DoubleSmooth]);
    r.push("Euler budget 6+6+0+1 = 13", budget.total == 13, budget.total.to_string());
    let twelve = 12 - pk.pair(&pk);
    r.push("e(W2) = 12 chi - K_W2^2 = 12", down.total == twelve && twelve == 12, down.total.to_string());

    // restriction of h2 to E: the three curves through p are nodal there
    let e = g("E");
    let deg = pair(&e, &lambda);
    let ram = hurwitz_ramification(0, deg);
    let parts: Vec<i64> = ["Lambda0", "Lambda1", "Lambda2"].iter().map(|n| pair(&e, &g(n))).collect();
    r.push(
        "deg R = 6 = sum E.Lambda_j",
        deg == 4 && ram == 6 && parts == [2, 2, 2],
        format!("deg {deg}, deg R {ram}, parts {parts:?}"),
    );
    match plane_model(cat, c, "Lambda0") {
        Err(e) => r.push("quartic lambda0 exists and is unique", false, e),
        Ok(l0) => {
            r.push("quartic lambda0 exists and is unique", true, "");
            r.push(
                "lambda0 has a node at p0",
                singularity_is_node(&l0, &c.p0).unwrap_or(false),
                "",
            );
            let curves = [("lambda0", &l0), ("lambda1", &c.lambda1), ("lambda2", &c.lambda2)];
            let mut cones = Vec::new();
            for (n, f) in curves {
                r.push(format!("{n} has a node at p"), singularity_is_node(f, &c.p).unwrap_or(false), "");
                cones.push((n, tangent_cone(f, &c.p)));
            }
            let mut distinct = true;
            let mut w = String::new();
            for a in 0..3 {
                for b in a + 1..3 {
                    if let (Ok(x), Ok(y)) = (&cones[a].1, &cones[b].1) {
                        if binary_resultant(x, y).is_zero() {
                            distinct = false;
                            w = format!("{} and {} share a branch direction", cones[a].0, cones[b].0);
                        }
                    } else {
                        distinct = false;
                        w = "missing tangent cone".into();
                    }
                }
            }
            r.push("six branch directions at p pairwise distinct (E transverse to Lambda_j)", distinct, w);
            r.note(format!("lambda0 irreducible over Q: {}", verdict(irreducibility(&l0))));
        }
    }
    FibrationReport {
        name: "elliptic fibration |-2K+2B3|".into(),
        fiber_class: lambda,
        fibers,
        budget,
        blowdown_budget: Some(down),
        multiple_fibers: sols,
        report: r,
    }
}

fn verdict(i: Irreducibility) -> &'static str {
    match i {
        Irreducibility::Proven => "proven",
        Irreducibility::Inconclusive => "inconclusive",
    }
}

pub fn verify_snc(cat: &Catalog, c: &Config) -> Report {
    let g = |n: &str| cat.get(n);
    let (b1, b2, b3) = (g("B1"), g("B2"), g("B3"));
    let mut r = Report::default();
    let triple = (pair(&b1, &b2), pair(&b1, &b3), pair(&b2, &b3));
    r.push("(B1.B2, B1.B3, B2.B3) = (1, 3, 1)", triple == (1, 3, 1), format!("{triple:?}"));
    let mut nodal_ok = true;
    for b in ["B1", "B2", "B3"] {
        for n in NODAL {
            nodal_ok &= pair(&g(b), &g(n)) == 0;
        }
    }
    r.push("B_i.C = 0 for all eight nodal curves", nodal_ok, "");
    let k = g("K");
    for i in 1..=4 {
        let psi_k = -k + DivClass::ekp(i);
        let ok = g("Psi") == 2 * psi_k + g(&format!("C{i}")) + g(&format!("C{i}'"))
            && pair(&psi_k, &psi_k) == 0
            && pair(&k, &psi_k) == 0
            && rr_chi(&psi_k) >= 1;
        r.push(format!("Psi = 2(-K+E{i}')+C{i}+C{i}' and h0(-K+E{i}') >= 1"), ok, format!("chi = {}", rr_chi(&psi_k)));
    }
    // Hurwitz for f restricted to B1 and for the double cover of B2
    let deg_f = pair(&b1, &g("F"));
    let ram_f = hurwitz_ramification(adjunction_genus(&b1), deg_f);
    let ek_parts: i64 = (1..=4).map(|i| pair(&b1, &DivClass::ekp(i))).sum();
    r.push("deg R_f' = 8 = sum B1.Ek'", deg_f == 4 && ram_f == 8 && ek_parts == 8, format!("deg {deg_f}, R {ram_f}"));
    let psi = g("Psi");
    let deg_g = pair(&psi, &b2);
    let ram_g = hurwitz_ramification(adjunction_genus(&b2), deg_g);
    let psi_parts: i64 = (1..=4).map(|i| pair(&(-k + DivClass::ekp(i)), &b2)).sum();
    r.push("deg R_g' = 4 = sum Psi_k.B2", deg_g == 2 && ram_g == 4 && psi_parts == 4, format!("deg {deg_g}, R {ram_g}"));

    let line = match line_through(&c.p0, &c.p) {
        Ok(l) => l,
        Err(e) => {
            r.push("line p0 p exists", false, e.to_string());
            return r;
        }
    };
    let sextic = plane_model(cat, c, "B1");
    let septic = plane_model(cat, c, "B2");
    match (&sextic, &septic) {
        (Ok(s6), Ok(s7)) => {
            r.push("sextic and septic plane models exist and are unique", true, "");
            let a = residual_on_line(s6, &line, &[(&c.p0, 2), (&c.p, 1)]);
            let b = residual_on_line(s7, &line, &[(&c.p0, 3), (&c.p, 3)]);
            match (&a, &b) {
                (Ok(a), Ok(b)) => {
                    r.push(
                        "B1 meets B3 transversely in 3 points",
                        a.degree == 3 && a.is_squarefree(),
                        format!("{} residual points", a.degree),
                    );
                    r.push("B2 meets B3 in 1 point", b.degree == 1, format!("{} residual points", b.degree));
                    r.push("B1, B2, B3 have no common point", !a.shares_root_with(b), "");
                }
                (Err(e), _) | (_, Err(e)) => r.push("restrictions to the line p0 p", false, e.clone()),
            }
            r.note(format!("sextic irreducible over Q: {}", verdict(irreducibility(s6))));
            r.note(format!("septic irreducible over Q: {}", verdict(irreducibility(s7))));
        }
        (Err(e), _) | (_, Err(e)) => r.push("sextic and septic plane models exist and are unique", false, e.clone()),
    }
    r
}

pub fn verify_nef_and_contraction(cat: &Catalog) -> Report {
    let d = cat.get("D");
    let mut r = Report::default();
    r.push("D^2 = 7", pair(&d, &d) == 7, pair(&d, &d).to_string());
    let mut curves: Vec<(String, DivClass)> = CURVES.iter().map(|n| (n.to_string(), cat.get(n))).collect();
    curves.extend((1..=4).map(|k| (format!("E{k}'"), DivClass::ekp(k))));
    curves.push(("E0-curve".into(), DivClass::e0()));
    let negative: Vec<String> = curves.iter().filter(|(_, x)| pair(&d, x) < 0).map(|(n, _)| n.clone()).collect();
    r.push(
        format!("D.X >= 0 for all {} catalog curves", curves.len()),
        negative.is_empty(),
        negative.join(", "),
    );
    let zero: Vec<String> = curves.iter().filter(|(_, x)| pair(&d, x) == 0).map(|(n, _)| n.clone()).collect();
    r.push("D.X = 0 exactly for the eight nodal curves", zero == NODAL, zero.join(", "));
    r.push("D.B2 = 3", pair(&d, &cat.get("B2")) == 3, pair(&d, &cat.get("B2")).to_string());
    r.push("D.Gamma0 = 4", pair(&d, &cat.get("Gamma0")) == 4, pair(&d, &cat.get("Gamma0")).to_string());
    r.note("nefness is certified against the finite catalog of curve classes");
    r
}

/// Number of random points used as freeness evidence for `|D|`.
pub const FREENESS_SAMPLES: usize = 6;
pub const FREENESS_SEED: u64 = 0x5eed_0007;

pub fn verify_birational_p4(cat: &Catalog, c: &Config) -> Report {
    let d = cat.get("D");
    let mut r = Report::default();
    let spec = match class_to_spec(&d, c) {
        Ok(s) => s,
        Err(e) => {
            r.push("D has a plane model", false, e.to_string());
            return r;
        }
    };
    let hd = h0(&spec);
    r.push("h0(D) = 5", hd == 5, hd.to_string());
    let hf = class_to_spec(&cat.get("F"), c).map(|s| h0(&s));
    let b2 = cat.get("B2");
    let deg = pair(&d, &b2);
    let g = adjunction_genus(&b2);
    // Riemann-Roch on the elliptic curve: h0 = deg once deg > 2g - 2
    let on_b2 = if deg > 2 * g - 2 { deg + 1 - g } else { -1 };
    r.push(
        "5 = h0(F) + h0(B2, D|B2) with deg 3 >= 2g(B2)",
        hf == Ok(2) && deg == 3 && deg >= 2 * g && on_b2 == 3 && hd as i64 == 2 + on_b2,
        format!("h0(F) {hf:?}, deg {deg}, h0 on B2 {on_b2}"),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(FREENESS_SEED);
    let cluster: Vec<&ProjPoint> = std::iter::once(&c.p0).chain(c.pk.iter()).chain(std::iter::once(&c.p)).collect();
    let mut drops = Vec::new();
    while drops.len() < FREENESS_SAMPLES {
        let q = ProjPoint::ints(rng.gen_range(-40..=40), rng.gen_range(-40..=40), rng.gen_range(1..=40));
        if cluster.contains(&&q) {
            continue;
        }
        let extra = spec.with(BaseCondition::ordinary(q.clone(), 1).expect("simple point")).expect("distinct");
        drops.push((q, h0(&extra)));
    }
    let ok = drops.iter().all(|(_, h)| *h == 4);
    r.push(
        format!("h0(D - q) = 4 at {FREENESS_SAMPLES} seeded random points q"),
        ok,
        drops.iter().map(|(q, h)| format!("{q}:{h}")).collect::<Vec<_>>().join(" "),
    );
    let d2 = pair(&d, &d);
    let prime = d2 > 1 && (2..d2).all(|x| d2 % x != 0);
    r.push("D^2 = 7 is prime", d2 == 7 && prime, d2.to_string());
    r.note("freeness evidence is probabilistic with a fixed seed");
    r
}
