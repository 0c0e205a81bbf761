//! Branch data of the bidouble cover, the invariants of the cover surface,
//! and the three intermediate double covers.

use serde::{Serialize, Serializer};

use crate::config::Config;
use crate::linsys::h0;
use crate::picard::{class_to_spec, pair, Catalog, DivClass, PicardError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BidoubleError {
    #[error("branch identity fails: {0}")]
    IdentityViolation(String),
    #[error("values differ from the expected ones: {}", .0.join("; "))]
    Mismatch(Vec<String>),
    #[error(transparent)]
    Picard(#[from] PicardError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchData {
    #[serde(rename = "Delta")]
    pub delta: [DivClass; 3],
    #[serde(rename = "L")]
    pub l: [DivClass; 3],
}

impl BranchData {
    pub fn total(&self) -> DivClass {
        self.delta.iter().copied().sum()
    }

    /// Every relation the branch data must satisfy, with its outcome.
    pub fn identities(&self, cat: &Catalog) -> Vec<(String, bool)> {
        let (d, l) = (&self.delta, &self.l);
        let mut out = Vec::new();
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            out.push((format!("2L{} = Delta{}+Delta{}", i + 1, j + 1, k + 1), 2 * l[i] == d[j] + d[k]));
            out.push((format!("L{}+Delta{} = L{}+L{}", i + 1, i + 1, j + 1, k + 1), l[i] + d[i] == l[j] + l[k]));
        }
        let g = |n: &str| cat.get(n);
        let c = |ks: &[usize]| -> DivClass {
            ks.iter().map(|k| g(&format!("C{k}")) + g(&format!("C{k}'"))).sum()
        };
        out.push(("Delta1 = B1+C1+C1'+C2+C2'".into(), d[0] == g("B1") + c(&[1, 2])));
        out.push(("Delta2 = B2+C3+C3'".into(), d[1] == g("B2") + c(&[3])));
        out.push(("Delta3 = B3+C4+C4'".into(), d[2] == g("B3") + c(&[4])));
        let (k, ll, e0, e) = (DivClass::canonical(), DivClass::l(), DivClass::e0(), DivClass::e());
        let ep = DivClass::ekp;
        out.push((
            "Delta1 = -2K+2L-2E0-2E1'-2E2'+E".into(),
            d[0] == -2 * k + 2 * ll - 2 * e0 - 2 * ep(1) - 2 * ep(2) + e,
        ));
        out.push(("Delta2 = -2K+2L-2E0-2E3'-E".into(), d[1] == -2 * k + 2 * ll - 2 * e0 - 2 * ep(3) - e));
        out.push(("Delta3 = 2L-2E0-2E4'-E".into(), d[2] == 2 * ll - 2 * e0 - 2 * ep(4) - e));
        out.push(("L1 = -K+2L-2E0-E3'-E4'-E".into(), l[0] == -k + 2 * ll - 2 * e0 - ep(3) - ep(4) - e));
        out.push(("L2 = -K+2L-2E0-E1'-E2'-E4'".into(), l[1] == -k + 2 * ll - 2 * e0 - ep(1) - ep(2) - ep(4)));
        out.push(("L3 = -2K+2L-2E0-E1'-E2'-E3'".into(), l[2] == -2 * k + 2 * ll - 2 * e0 - ep(1) - ep(2) - ep(3)));
        out.push(("Delta contains each nodal curve once".into(), nodal_membership(self, cat)));
        out
    }
}

/// Membership of nodal curves by construction: component `i` of the branch
/// locus lists `C_k, C_k'` for `k` in the `i`-th block.
fn nodal_membership(bd: &BranchData, cat: &Catalog) -> bool {
    let blocks: [&[usize]; 3] = [&[1, 2], &[3], &[4]];
    let bs = ["B1", "B2", "B3"];
    (0..3).all(|i| {
        let c: DivClass = blocks[i].iter().map(|k| cat.get(&format!("C{k}")) + cat.get(&format!("C{k}'"))).sum();
        bd.delta[i] - c == cat.get(bs[i])
    }) && blocks.iter().map(|b| b.len()).sum::<usize>() == 4
}

pub fn branch_data(cat: &Catalog) -> Result<BranchData, BidoubleError> {
    let bd = BranchData {
        delta: [cat.try_get("Delta1")?, cat.try_get("Delta2")?, cat.try_get("Delta3")?],
        l: [cat.try_get("L1")?, cat.try_get("L2")?, cat.try_get("L3")?],
    };
    match bd.identities(cat).into_iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(BidoubleError::IdentityViolation(name)),
        None => Ok(bd),
    }
}

/// Number of isolated fixed points of each involution.
pub const ISOLATED_FIXED_POINTS: [i64; 3] = [9, 7, 5];

/// Dimensions of the invariant part and of the three character parts of the
/// bicanonical space.
pub const EXPECTED_EIGENSPACES: [usize; 4] = [5, 2, 1, 0];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    #[serde(rename = "K2")]
    pub k2: i64,
    pub pg: usize,
    pub q: usize,
    pub chi: i64,
    pub eigenspaces: [usize; 4],
    #[serde(rename = "KR")]
    pub kr: [i64; 3],
    #[serde(rename = "R2")]
    pub r2: [i64; 3],
    #[serde(rename = "genusR")]
    pub genus_r: [i64; 3],
    pub k: [i64; 3],
}

fn h0_of(a: &DivClass, c: &Config) -> Result<usize, BidoubleError> {
    Ok(h0(&class_to_spec(a, c)?))
}

/// Invariants of the cover surface, computed from the lattice and by
/// interpolation on the plane model.
pub fn compute_invariants(bd: &BranchData, cat: &Catalog, c: &Config) -> Result<SurfaceInvariants, BidoubleError> {
    let k = DivClass::canonical();
    let d = cat.try_get("D")?;
    let mut pg = 0;
    for li in &bd.l {
        pg += h0_of(&(k + *li), c)?;
    }
    let mut eig = [h0_of(&(2 * k + bd.total()), c)?, 0, 0, 0];
    for i in 0..3 {
        eig[i + 1] = h0_of(&(2 * k + bd.delta[i] + bd.l[i]), c)?;
    }
    let bs = [cat.try_get("B1")?, cat.try_get("B2")?, cat.try_get("B3")?];
    let kr = bs.map(|b| pair(&d, &b));
    let r2 = bs.map(|b| pair(&b, &b));
    let genus_r: [i64; 3] = std::array::from_fn(|i| (r2[i] + kr[i]) / 2 + 1);
    let q = 0;
    Ok(SurfaceInvariants {
        k2: pair(&d, &d),
        pg,
        q,
        chi: 1 - q as i64 + pg as i64,
        eigenspaces: eig,
        kr,
        r2,
        genus_r,
        k: ISOLATED_FIXED_POINTS,
    })
}

/// [`compute_invariants`] followed by comparison with the stated values.
pub fn invariants_s(bd: &BranchData, cat: &Catalog, c: &Config) -> Result<SurfaceInvariants, BidoubleError> {
    let s = compute_invariants(bd, cat, c)?;
    let mut bad = Vec::new();
    let mut want = |name: &str, ok: bool, got: String| {
        if !ok {
            bad.push(format!("{name}: got {got}"));
        }
    };
    want("K2 = 7", s.k2 == 7, s.k2.to_string());
    want("pg = 0", s.pg == 0, s.pg.to_string());
    want("chi = 1 - q + pg", s.chi == 1 - s.q as i64 + s.pg as i64, s.chi.to_string());
    want("eigenspaces = (5,2,1,0)", s.eigenspaces == EXPECTED_EIGENSPACES, format!("{:?}", s.eigenspaces));
    let total: usize = s.eigenspaces.iter().sum();
    want("sum of eigenspaces = chi + K2", total as i64 == s.chi + s.k2, total.to_string());
    want("KR = (5,3,1)", s.kr == [5, 3, 1], format!("{:?}", s.kr));
    want("R2 = (-1,-1,-1)", s.r2 == [-1; 3], format!("{:?}", s.r2));
    want("genusR = (3,2,1)", s.genus_r == [3, 2, 1], format!("{:?}", s.genus_r));
    want("k = KR + 4", (0..3).all(|i| s.k[i] == s.kr[i] + 4), format!("{:?}", s.k));
    want(
        "character parts below 8",
        s.eigenspaces[1..].iter().all(|&e| e < 8),
        format!("{:?}", &s.eigenspaces[1..]),
    );
    if bad.is_empty() {
        Ok(s)
    } else {
        Err(BidoubleError::Mismatch(bad))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kappa {
    Dim(i64),
    GeneralType,
}

impl Serialize for Kappa {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Kappa::Dim(k) => s.serialize_i64(*k),
            Kappa::GeneralType => s.serialize_str("general type"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuotientLabel {
    #[serde(rename = "Enriques-birational")]
    EnriquesBirational,
    #[serde(rename = "properly-elliptic")]
    ProperlyElliptic,
    #[serde(rename = "numerical-Campedelli-resolution")]
    NumericalCampedelliResolution,
}

/// Disjoint `(-1)`-curves on the intermediate double cover lying over the
/// nodal curves in the branch locus of that cover: four for the first,
/// six for the other two.
pub const CONTRACTED_CURVES: [i64; 3] = [4, 6, 6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub i: usize,
    pub identity: String,
    pub identity_holds: bool,
    #[serde(rename = "K2_Vi")]
    pub k2_vi: i64,
    #[serde(rename = "K2_quotient")]
    pub k2_quotient: i64,
    pub kappa: Kappa,
    pub label: QuotientLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub quotients: [Quotient; 3],
}

impl QuotientReport {
    pub fn passes(&self) -> bool {
        self.quotients.iter().all(|q| q.identity_holds)
            && self.quotients.iter().map(|q| q.k2_quotient).eq([-2, 0, 2])
            && self.quotients.iter().map(|q| q.kappa).eq([Kappa::Dim(0), Kappa::Dim(1), Kappa::GeneralType])
    }
}

/// Quotient data computed from the lattice and interpolation, unchecked.
pub fn compute_quotients(bd: &BranchData, cat: &Catalog, c: &Config) -> Result<QuotientReport, BidoubleError> {
    let k = DivClass::canonical();
    let g = |n: &str| cat.get(n);
    let cs = |ks: &[usize]| -> DivClass { ks.iter().map(|k| g(&format!("C{k}")) + g(&format!("C{k}'"))).sum() };
    let d = g("D");
    // 2(K + L_i) as a pulled-back divisor plus nodal curves over which the
    // cover has (-1)-curves
    let rhs = [
        ("2B3+C3+C3'+C4+C4'", 2 * g("B3") + cs(&[3, 4])),
        ("F+C1+C1'+C2+C2'+C4+C4'", g("F") + cs(&[1, 2, 4])),
        ("D-B3+C1+C1'+C2+C2'+C3+C3'", d - g("B3") + cs(&[1, 2, 3])),
    ];
    let moving = [g("B3"), g("F"), d - g("B3")];
    let labels = [
        QuotientLabel::EnriquesBirational,
        QuotientLabel::ProperlyElliptic,
        QuotientLabel::NumericalCampedelliResolution,
    ];
    let mut out = Vec::new();
    for i in 0..3 {
        let kl = k + bd.l[i];
        let holds = 2 * kl == rhs[i].1;
        let k2_vi = 2 * pair(&kl, &kl);
        let m = moving[i];
        let hm = h0_of(&m, c)? as i64;
        // an effective moving part of positive square makes 2K big
        let kappa = if pair(&m, &m) > 0 && hm > 0 { Kappa::GeneralType } else { Kappa::Dim(hm - 1) };
        out.push(Quotient {
            i: i + 1,
            identity: format!("2(K+L{}) = {}", i + 1, rhs[i].0),
            identity_holds: holds,
            k2_vi,
            k2_quotient: k2_vi + CONTRACTED_CURVES[i],
            kappa,
            label: labels[i],
        });
    }
    Ok(QuotientReport { quotients: out.try_into().expect("three quotients") })
}

/// [`compute_quotients`] followed by comparison with the stated values.
pub fn quotient_invariants(bd: &BranchData, cat: &Catalog, c: &Config) -> Result<QuotientReport, BidoubleError> {
    let report = compute_quotients(bd, cat, c)?;
    let mut bad = Vec::new();
    for q in &report.quotients {
        if !q.identity_holds {
            bad.push(q.identity.clone());
        }
    }
    let k2v: Vec<i64> = report.quotients.iter().map(|q| q.k2_vi).collect();
    if k2v != [-6, -6, -4] {
        bad.push(format!("K2_Vi = {k2v:?}"));
    }
    if !report.passes() && bad.is_empty() {
        bad.push(format!("quotient values {:?}", report.quotients.iter().map(|q| (q.k2_quotient, q.kappa)).collect::<Vec<_>>()));
    }
    if bad.is_empty() {
        Ok(report)
    } else {
        Err(BidoubleError::Mismatch(bad))
    }
}
