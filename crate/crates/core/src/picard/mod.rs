//! The Picard lattice of the blowup `W`, the named classes on it, and the
//! bridge from classes to interpolation problems in the plane.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::config::Config;
use crate::linsys::{BaseCondition, LinSysSpec, LinsysError};

pub const RANK: usize = 11;

/// Basis labels in storage order.
pub const BASIS: [&str; RANK] = ["L", "E0", "E1", "E1'", "E2", "E2'", "E3", "E3'", "E4", "E4'", "E"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PicardError {
    #[error("class {0} has nonpositive degree and no plane model")]
    NotEffectivePattern(DivClass),
    #[error("contraction along {0} is not supported")]
    UnsupportedContraction(DivClass),
    #[error("unknown class name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Linsys(#[from] LinsysError),
}

/// A divisor class as integer coordinates over `L, E0, E1, E1', ..., E4,
/// E4', E`, where `E_k` is the total transform of the exceptional curve
/// over `p_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DivClass(pub [i64; RANK]);

impl DivClass {
    pub const ZERO: DivClass = DivClass([0; RANK]);

    pub fn basis(i: usize) -> DivClass {
        let mut c = [0; RANK];
        c[i] = 1;
        DivClass(c)
    }

    pub fn l() -> DivClass {
        Self::basis(0)
    }

    pub fn e0() -> DivClass {
        Self::basis(1)
    }

    /// `E_k` for `k` in `1..=4`.
    pub fn ek(k: usize) -> DivClass {
        assert!((1..=4).contains(&k));
        Self::basis(2 * k)
    }

    /// `E_k'` for `k` in `1..=4`.
    pub fn ekp(k: usize) -> DivClass {
        assert!((1..=4).contains(&k));
        Self::basis(2 * k + 1)
    }

    pub fn e() -> DivClass {
        Self::basis(10)
    }

    /// `-3L + E0 + sum (E_k + E_k') + E`.
    pub fn canonical() -> DivClass {
        let mut c = [1; RANK];
        c[0] = -3;
        DivClass(c)
    }

    pub fn coeffs(&self) -> &[i64; RANK] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0[0]
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, o: DivClass) -> DivClass {
        DivClass(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, o: DivClass) -> DivClass {
        DivClass(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass(self.0.map(|x| -x))
    }
}

impl Mul<DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, c: DivClass) -> DivClass {
        DivClass(c.0.map(|x| self * x))
    }
}

impl std::iter::Sum for DivClass {
    fn sum<I: Iterator<Item = DivClass>>(it: I) -> DivClass {
        it.fold(DivClass::ZERO, Add::add)
    }
}

/// The intersection form `diag(1, -1, ..., -1)`.
pub fn pair(a: &DivClass, b: &DivClass) -> i64 {
    a.0[0] * b.0[0] - (1..RANK).map(|i| a.0[i] * b.0[i]).sum::<i64>()
}

/// Arithmetic genus by adjunction. `K` is a characteristic vector of the
/// lattice, so `a^2 + aK` is always even and the genus is an integer.
pub fn adjunction_genus(a: &DivClass) -> i64 {
    let k = DivClass::canonical();
    let s = pair(a, a) + pair(a, &k);
    debug_assert_eq!(s % 2, 0);
    s / 2 + 1
}

/// Riemann-Roch Euler characteristic `1 + (a^2 - aK)/2` on `W`.
pub fn rr_chi(a: &DivClass) -> i64 {
    let k = DivClass::canonical();
    1 + (pair(a, a) - pair(a, &k)) / 2
}

/// The named classes, stored as literal tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<(String, DivClass)>,
}

const ENTRIES: [(&str, [i64; RANK]); 28] = [
    ("K", [-3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    ("F", [1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("E", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    ("C1", [1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0]),
    ("C1'", [0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0]),
    ("C2", [1, -1, 0, 0, -1, -1, 0, 0, 0, 0, 0]),
    ("C2'", [0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0]),
    ("C3", [1, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0]),
    ("C3'", [0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0]),
    ("C4", [1, -1, 0, 0, 0, 0, 0, 0, -1, -1, 0]),
    ("C4'", [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0]),
    ("Gamma0", [3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0]),
    ("Gamma1", [2, 0, -1, 0, -1, 0, -1, -1, -1, -1, 0]),
    ("Gamma2", [2, 0, -1, -1, -1, -1, -1, 0, -1, 0, 0]),
    ("Lambda0", [4, -2, -1, -1, -1, -1, -1, -1, -1, -1, -2]),
    ("Lambda1", [3, -1, -1, 0, -1, -1, -1, 0, -1, -1, -2]),
    ("Lambda2", [3, -1, -1, -1, -1, 0, -1, -1, -1, 0, -2]),
    ("B1", [6, -2, -2, -2, -2, -2, -2, -2, -2, -2, -1]),
    ("B2", [7, -3, -2, -2, -2, -2, -2, -2, -2, -2, -3]),
    ("B3", [1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1]),
    ("Delta1", [8, -4, -2, -4, -2, -4, -2, -2, -2, -2, -1]),
    ("Delta2", [8, -4, -2, -2, -2, -2, -2, -4, -2, -2, -3]),
    ("Delta3", [2, -2, 0, 0, 0, 0, 0, 0, 0, -2, -1]),
    ("L1", [5, -3, -1, -1, -1, -1, -1, -2, -1, -2, -2]),
    ("L2", [5, -3, -1, -2, -1, -2, -1, -1, -1, -2, -1]),
    ("L3", [8, -4, -2, -3, -2, -3, -2, -3, -2, -2, -2]),
    ("D", [8, -4, -2, -2, -2, -2, -2, -2, -2, -2, -3]),
    ("Psi", [7, -3, -2, -2, -2, -2, -2, -2, -2, -2, -2]),
];

/// Names of the irreducible curve classes in the catalog.
pub const CURVES: [&str; 20] = [
    "E", "C1", "C1'", "C2", "C2'", "C3", "C3'", "C4", "C4'", "Gamma0", "Gamma1", "Gamma2", "Lambda0",
    "Lambda1", "Lambda2", "B1", "B2", "B3", "F", "Psi",
];

pub const NODAL: [&str; 8] = ["C1", "C1'", "C2", "C2'", "C3", "C3'", "C4", "C4'"];

impl Default for Catalog {
    fn default() -> Self {
        Catalog {
            entries: ENTRIES.iter().map(|(n, c)| (n.to_string(), DivClass(*c))).collect(),
        }
    }
}

impl Catalog {
    pub fn standard() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[(String, DivClass)] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> DivClass {
        self.try_get(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_get(&self, name: &str) -> Result<DivClass, PicardError> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| *c)
            .ok_or_else(|| PicardError::UnknownName(name.into()))
    }

    /// Replaces a stored entry (used to exercise the identity checks).
    pub fn with_entry(&self, name: &str, c: DivClass) -> Catalog {
        let mut out = self.clone();
        for e in out.entries.iter_mut().filter(|(n, _)| n == name) {
            e.1 = c;
        }
        out
    }

    /// Intersection numbers of all entries, in catalog order.
    pub fn intersection_table(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|(_, a)| self.entries.iter().map(|(_, b)| pair(a, b)).collect())
            .collect()
    }
}

fn ck(cat: &Catalog, k: usize) -> DivClass {
    cat.get(&format!("C{k}"))
}

fn ckp(cat: &Catalog, k: usize) -> DivClass {
    cat.get(&format!("C{k}'"))
}

fn sum_primes(ks: &[usize]) -> DivClass {
    ks.iter().map(|&k| DivClass::ekp(k)).sum()
}

fn all_exceptional_pairs() -> DivClass {
    (1..=4).map(|k| DivClass::ek(k) + DivClass::ekp(k)).sum()
}

/// Every linear-equivalence identity among the catalog entries, checked as
/// exact tuple equalities.
pub fn verify_identities(cat: &Catalog) -> Vec<(String, bool)> {
    let g = |n: &str| cat.get(n);
    let (l, e0, e) = (DivClass::l(), DivClass::e0(), DivClass::e());
    let k = g("K");
    let (b1, b2, b3) = (g("B1"), g("B2"), g("B3"));
    let delta = [g("Delta1"), g("Delta2"), g("Delta3")];
    let lis = [g("L1"), g("L2"), g("L3")];
    let sigma = all_exceptional_pairs();
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |name: String, ok: bool| out.push((name, ok));

    push("K = -3L+E0+sum(Ek+Ek')+E".into(), k == -3 * l + e0 + sigma + e);
    push("F = L-E0".into(), g("F") == l - e0);
    push("E is the basis class".into(), g("E") == e);
    for i in 1..=4 {
        push(format!("C{i} = L-E0-E{i}-E{i}'"), ck(cat, i) == l - e0 - DivClass::ek(i) - DivClass::ekp(i));
        push(format!("C{i}' = E{i}-E{i}'"), ckp(cat, i) == DivClass::ek(i) - DivClass::ekp(i));
    }
    let ek = DivClass::ek;
    let ekp = DivClass::ekp;
    push(
        "Gamma1 = 2L-E1-E2-E3-E3'-E4-E4'".into(),
        g("Gamma1") == 2 * l - ek(1) - ek(2) - ek(3) - ekp(3) - ek(4) - ekp(4),
    );
    push(
        "Gamma2 = 2L-E1-E1'-E2-E2'-E3-E4".into(),
        g("Gamma2") == 2 * l - ek(1) - ekp(1) - ek(2) - ekp(2) - ek(3) - ek(4),
    );
    push(
        "Lambda1 = 3L-E0-E1-E2-E2'-E3-E4-E4'-2E".into(),
        g("Lambda1") == 3 * l - e0 - ek(1) - ek(2) - ekp(2) - ek(3) - ek(4) - ekp(4) - 2 * e,
    );
    push(
        "Lambda2 = 3L-E0-E1-E1'-E2-E3-E3'-E4-2E".into(),
        g("Lambda2") == 3 * l - e0 - ek(1) - ekp(1) - ek(2) - ek(3) - ekp(3) - ek(4) - 2 * e,
    );
    push("Gamma0 = 3L-E0-sum(Ek+Ek')".into(), g("Gamma0") == 3 * l - e0 - sigma);
    push("Gamma0 = -K+E".into(), g("Gamma0") == -k + e);
    push("B3 = L-E0-E".into(), b3 == l - e0 - e);
    push("B1 = -2K+E".into(), b1 == -2 * k + e);
    push("B1 = 6L-2E0-2sum(Ek+Ek')-E".into(), b1 == 6 * l - 2 * e0 - 2 * sigma - e);
    push("B2 = -2K+B3".into(), b2 == -2 * k + b3);
    push("B2 = 7L-3E0-2sum(Ek+Ek')-3E".into(), b2 == 7 * l - 3 * e0 - 2 * sigma - 3 * e);
    push("Lambda0 = -K+B3".into(), g("Lambda0") == -k + b3);
    push("Lambda0 = 4L-2E0-sum(Ek+Ek')-2E".into(), g("Lambda0") == 4 * l - 2 * e0 - sigma - 2 * e);
    push("D = 2K+B1+B2+B3".into(), g("D") == 2 * k + b1 + b2 + b3);
    push("D = B2+F".into(), g("D") == b2 + g("F"));
    push("Psi = B1+B3".into(), g("Psi") == b1 + b3);
    push("Psi = B2+E".into(), g("Psi") == b2 + e);
    push("Psi = -2K+F".into(), g("Psi") == -2 * k + g("F"));
    for i in 1..=4 {
        push(
            format!("Psi = 2(-K+E{i}')+C{i}+C{i}'"),
            g("Psi") == 2 * (-k + ekp(i)) + ck(cat, i) + ckp(cat, i),
        );
    }
    let gamma = -2 * k + 2 * e;
    let fiber = |a: DivClass, ks: [usize; 2]| 2 * a + ks.iter().map(|&i| ck(cat, i) + ckp(cat, i)).sum();
    push("Gamma = 2Gamma1+C1+C1'+C2+C2'".into(), gamma == fiber(g("Gamma1"), [1, 2]));
    push("Gamma = 2Gamma2+C3+C3'+C4+C4'".into(), gamma == fiber(g("Gamma2"), [3, 4]));
    push("Gamma = 2Gamma0".into(), gamma == 2 * g("Gamma0"));
    push("Gamma = B1+E".into(), gamma == b1 + e);
    let lambda = -2 * k + 2 * b3;
    push("Lambda = 2Lambda1+C1+C1'+C3+C3'".into(), lambda == fiber(g("Lambda1"), [1, 3]));
    push("Lambda = 2Lambda2+C2+C2'+C4+C4'".into(), lambda == fiber(g("Lambda2"), [2, 4]));
    push("Lambda = 2Lambda0".into(), lambda == 2 * g("Lambda0"));
    push("Lambda = B2+B3".into(), lambda == b2 + b3);
    push("F = E+B3".into(), g("F") == e + b3);
    for i in 1..=4 {
        push(format!("F = C{i}+2E{i}'+C{i}'"), g("F") == ck(cat, i) + 2 * ekp(i) + ckp(cat, i));
    }
    push("Delta1 = B1+C1+C1'+C2+C2'".into(), delta[0] == b1 + ck(cat, 1) + ckp(cat, 1) + ck(cat, 2) + ckp(cat, 2));
    push("Delta2 = B2+C3+C3'".into(), delta[1] == b2 + ck(cat, 3) + ckp(cat, 3));
    push("Delta3 = B3+C4+C4'".into(), delta[2] == b3 + ck(cat, 4) + ckp(cat, 4));
    push(
        "Delta1 = -2K+2L-2E0-2E1'-2E2'+E".into(),
        delta[0] == -2 * k + 2 * l - 2 * e0 - 2 * sum_primes(&[1, 2]) + e,
    );
    push("Delta2 = -2K+2L-2E0-2E3'-E".into(), delta[1] == -2 * k + 2 * l - 2 * e0 - 2 * ekp(3) - e);
    push("Delta3 = 2L-2E0-2E4'-E".into(), delta[2] == 2 * l - 2 * e0 - 2 * ekp(4) - e);
    push("L1 = -K+2L-2E0-E3'-E4'-E".into(), lis[0] == -k + 2 * l - 2 * e0 - sum_primes(&[3, 4]) - e);
    push("L2 = -K+2L-2E0-E1'-E2'-E4'".into(), lis[1] == -k + 2 * l - 2 * e0 - sum_primes(&[1, 2, 4]));
    push("L3 = -2K+2L-2E0-E1'-E2'-E3'".into(), lis[2] == -2 * k + 2 * l - 2 * e0 - sum_primes(&[1, 2, 3]));
    for i in 0..3 {
        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
        push(format!("2L{} = Delta{}+Delta{}", i + 1, a + 1, b + 1), 2 * lis[i] == delta[a] + delta[b]);
        push(
            format!("L{}+Delta{} = L{}+L{}", i + 1, i + 1, a + 1, b + 1),
            lis[i] + delta[i] == lis[a] + lis[b],
        );
    }
    out
}

/// The plane interpolation problem whose solutions are the sections of the
/// class `a`. A coefficient `-m` on `E_k` and `-m'` on `E_k'` asks for
/// order at least `m` at `p_k` and at least `m + m'` along the exceptional
/// curve over `p_k'`; nonpositive requirements impose nothing.
pub fn class_to_spec(a: &DivClass, c: &Config) -> Result<LinSysSpec, PicardError> {
    let d = a.degree();
    if d <= 0 {
        return Err(PicardError::NotEffectivePattern(*a));
    }
    let co = a.coeffs();
    let mut conds = Vec::new();
    if co[1] < 0 {
        conds.push(BaseCondition::ordinary(c.p0.clone(), (-co[1]) as usize)?);
    }
    for k in 0..4 {
        let m = -co[2 + 2 * k];
        let total = m - co[3 + 2 * k];
        let mult = m.max(0);
        if total > mult {
            conds.push(BaseCondition::infinitely_near(
                c.pk[k].clone(),
                mult as usize,
                c.lines[k].clone(),
                (total - mult) as usize,
            )?);
        } else if mult > 0 {
            conds.push(BaseCondition::ordinary(c.pk[k].clone(), mult as usize)?);
        }
    }
    if co[10] < 0 {
        conds.push(BaseCondition::ordinary(c.p.clone(), (-co[10]) as usize)?);
    }
    Ok(LinSysSpec::new(d as usize, conds)?)
}

/// Which `(-1)`-curve a blowdown contracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Contraction {
    E,
    B3,
}

impl Contraction {
    pub fn class(self) -> DivClass {
        match self {
            Contraction::E => DivClass::e(),
            Contraction::B3 => DivClass::l() - DivClass::e0() - DivClass::e(),
        }
    }

    fn of(c: &DivClass) -> Option<Contraction> {
        [Contraction::E, Contraction::B3].into_iter().find(|x| x.class() == *c)
    }

    /// The basis index dropped when expressing the orthogonal complement.
    fn dropped(self) -> usize {
        let c = self.class();
        (0..RANK).find(|&j| c.0[j].abs() == 1).expect("unit coordinate")
    }
}

/// A class on the blown-down surface, in coordinates over the projections
/// of the basis classes other than the dropped one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractedClass {
    pub along: Contraction,
    pub coeffs: Vec<i64>,
}

/// Pushforward along the contraction of the `(-1)`-curve `contracted`,
/// realized as the orthogonal projection `a + (a.c) c` onto `c`-perp.
/// It satisfies `a.b = pf(a).pf(b) - (a.c)(b.c)`.
pub fn pushforward_contract(a: &DivClass, contracted: &DivClass) -> Result<ContractedClass, PicardError> {
    let along = Contraction::of(contracted).ok_or(PicardError::UnsupportedContraction(*contracted))?;
    let c = contracted.0;
    let j = along.dropped();
    let coeffs = (0..RANK)
        .filter(|&i| i != j)
        .map(|i| a.0[i] - a.0[j] * c[i] / c[j])
        .collect();
    Ok(ContractedClass { along, coeffs })
}

impl ContractedClass {
    /// Canonical class of the blown-down surface.
    pub fn canonical(along: Contraction) -> ContractedClass {
        pushforward_contract(&DivClass::canonical(), &along.class()).expect("supported")
    }

    fn basis_indices(&self) -> Vec<usize> {
        let j = self.along.dropped();
        (0..RANK).filter(|&i| i != j).collect()
    }

    pub fn pair(&self, o: &ContractedClass) -> i64 {
        assert_eq!(self.along, o.along, "classes on different blowdowns");
        let c = self.along.class();
        let idx = self.basis_indices();
        let mut s = 0;
        for (x, &i) in self.coeffs.iter().zip(&idx) {
            for (y, &k) in o.coeffs.iter().zip(&idx) {
                let ei = DivClass::basis(i);
                let ek = DivClass::basis(k);
                s += x * y * (pair(&ei, &ek) + pair(&ei, &c) * pair(&ek, &c));
            }
        }
        s
    }

    pub fn scaled(&self, k: i64) -> ContractedClass {
        ContractedClass {
            along: self.along,
            coeffs: self.coeffs.iter().map(|x| k * x).collect(),
        }
    }

    pub fn add(&self, o: &ContractedClass) -> ContractedClass {
        assert_eq!(self.along, o.along);
        ContractedClass {
            along: self.along,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests;
