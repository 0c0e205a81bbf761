//! The end-to-end pipeline: certificates for single parameter points,
//! grid searches over the parameter space, and catalog dumps.

mod search;

pub use search::{cmd_search, lam_grid, Hit, SearchGrid, SearchResult};

use serde::Serialize;

use crate::bidouble::{branch_data, compute_invariants, compute_quotients, invariants_s, quotient_invariants};
use crate::bidouble::{QuotientReport, SurfaceInvariants};
use crate::config::{
    check_conditions, gamma0_closed, jacobian_certificate, mk_config, mk_config_at_point, mk_params, ConditionReport,
    Config, ConfigError, Params, Which,
};
use crate::fibration::{
    verify_birational_p4, verify_elliptic_h1, verify_elliptic_h2, verify_nef_and_contraction,
    verify_rational_fibration, verify_snc, FibrationReport, Report,
};
use crate::picard::{adjunction_genus, verify_identities, Catalog, DivClass};
use crate::plane::ProjPoint;
use crate::qalg::Rat;

pub const CERTIFICATE_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("empty search grid")]
    EmptyGrid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertInput {
    pub u: Rat,
    pub which: Which,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lam: Option<[Rat; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<ProjPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "FAILED")]
    Failed(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub version: String,
    pub input: CertInput,
    pub config: Option<Config>,
    pub conditions: Option<ConditionReport>,
    pub gamma0_match: bool,
    pub jacobian_identity: bool,
    pub catalog_identities: Vec<NamedCheck>,
    pub fibrations: Vec<FibrationReport>,
    pub snc: Option<Report>,
    pub nef: Report,
    pub p4: Option<Report>,
    pub invariants: Option<SurfaceInvariants>,
    pub quotients: Option<QuotientReport>,
    pub status: Status,
}

impl Certificate {
    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn reasons(&self) -> &[String] {
        match &self.status {
            Status::Verified => &[],
            Status::Failed(r) => r,
        }
    }

    /// Process exit code: 0 verified, 1 failed.
    pub fn exit_code(&self) -> i32 {
        if self.verified() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn report_reasons(prefix: &str, r: &Report, out: &mut Vec<String>) {
    for i in r.failures() {
        out.push(format!("{prefix}: {} ({})", i.name, i.witness));
    }
}

fn lattice_checks(cat: &Catalog) -> Vec<NamedCheck> {
    verify_identities(cat).into_iter().map(|(name, holds)| NamedCheck { name, holds }).collect()
}

/// Certificate for an input rejected before a configuration exists.
fn rejected(input: CertInput, params: &Params, cat: &Catalog, err: &ConfigError) -> Certificate {
    let catalog_identities = lattice_checks(cat);
    let nef = verify_nef_and_contraction(cat);
    let mut reasons = vec![describe(err)];
    reasons.extend(catalog_identities.iter().filter(|c| !c.holds).map(|c| format!("catalog: {}", c.name)));
    Certificate {
        version: CERTIFICATE_VERSION.into(),
        input,
        config: None,
        conditions: None,
        gamma0_match: false,
        jacobian_identity: crate::config::jacobian_identities(&params.t, &params.alpha, &params.beta),
        catalog_identities,
        fibrations: Vec::new(),
        snc: None,
        nef,
        p4: None,
        invariants: None,
        quotients: None,
        status: Status::Failed(reasons),
    }
}

fn bad_parameter(e: ConfigError) -> CertifyError {
    match e {
        ConfigError::BadParameter(m) => CertifyError::BadParameter(m),
        other => CertifyError::BadParameter(other.to_string()),
    }
}

fn describe(err: &ConfigError) -> String {
    match err {
        ConfigError::ExcludedPoint { point, curves } => {
            format!("ExcludedPoint: p = {point} lies on {}", curves.join(", "))
        }
        ConfigError::NotOnConic { point, which } => format!("NotOnConic: p = {point} is not on c_{which}"),
        other => format!("{other}"),
    }
}

/// Runs the full pipeline on a built configuration with a given catalog.
pub fn certify_with(c: &Config, cat: &Catalog, input: CertInput) -> Certificate {
    let mut reasons = Vec::new();
    let conditions = check_conditions(c);
    for (n, chk) in conditions.entries() {
        if !chk.holds {
            reasons.push(format!("condition ({n}): {}", chk.witness));
        }
    }
    let gamma0_match = c.gamma0.proportional(&gamma0_closed(&c.params.t));
    if !gamma0_match {
        reasons.push("gamma0 differs from its closed form".into());
    }
    let jacobian_identity = jacobian_certificate(c);
    if !jacobian_identity {
        reasons.push("Jacobian identities fail".into());
    }
    let catalog_identities = lattice_checks(cat);
    reasons.extend(catalog_identities.iter().filter(|x| !x.holds).map(|x| format!("catalog: {}", x.name)));

    let fibrations = vec![
        verify_rational_fibration(cat, c),
        verify_elliptic_h1(cat, c),
        verify_elliptic_h2(cat, c),
    ];
    for f in &fibrations {
        report_reasons(&f.name, &f.report, &mut reasons);
        if f.budget.total != 13 {
            reasons.push(format!("{}: Euler budget {}", f.name, f.budget.total));
        }
    }
    let snc = verify_snc(cat, c);
    report_reasons("snc", &snc, &mut reasons);
    let nef = verify_nef_and_contraction(cat);
    report_reasons("nef", &nef, &mut reasons);
    let p4 = verify_birational_p4(cat, c);
    report_reasons("P4", &p4, &mut reasons);

    let (invariants, quotients) = match branch_data(cat) {
        Err(e) => {
            reasons.push(format!("branch data: {e}"));
            (None, None)
        }
        Ok(bd) => {
            let inv = compute_invariants(&bd, cat, c);
            if let Err(e) = invariants_s(&bd, cat, c) {
                reasons.push(format!("invariants: {e}"));
            }
            let quo = compute_quotients(&bd, cat, c);
            if let Err(e) = quotient_invariants(&bd, cat, c) {
                reasons.push(format!("quotients: {e}"));
            }
            (inv.ok(), quo.ok())
        }
    };
    Certificate {
        version: CERTIFICATE_VERSION.into(),
        input,
        config: Some(c.clone()),
        conditions: Some(conditions),
        gamma0_match,
        jacobian_identity,
        catalog_identities,
        fibrations,
        snc: Some(snc),
        nef,
        p4: Some(p4),
        invariants,
        quotients,
        status: if reasons.is_empty() { Status::Verified } else { Status::Failed(reasons) },
    }
}

/// Runs the full pipeline on a built configuration.
pub fn certify(c: &Config) -> Certificate {
    let input = CertInput { u: c.params.u.clone(), which: c.which, lam: Some(c.lam.clone()), point: None };
    certify_with(c, &Catalog::standard(), input)
}

/// Certificate for the point of `c_which` with parameter `lam`.
pub fn cmd_verify(u: &Rat, which: Which, lam: &[Rat; 2]) -> Result<Certificate, CertifyError> {
    cmd_verify_with(u, which, lam, &Catalog::standard())
}

pub fn cmd_verify_with(u: &Rat, which: Which, lam: &[Rat; 2], cat: &Catalog) -> Result<Certificate, CertifyError> {
    let params = mk_params(u).map_err(bad_parameter)?;
    let input = CertInput { u: u.clone(), which, lam: Some(lam.clone()), point: None };
    match mk_config(&params, which, lam) {
        Ok(c) => Ok(certify_with(&c, cat, input)),
        Err(ConfigError::BadParameter(m)) => Err(CertifyError::BadParameter(m)),
        Err(e) => Ok(rejected(input, &params, cat, &e)),
    }
}

/// Certificate for an explicitly given point `p`.
pub fn cmd_verify_point(u: &Rat, which: Which, p: &ProjPoint) -> Result<Certificate, CertifyError> {
    let params = mk_params(u).map_err(bad_parameter)?;
    let cat = Catalog::standard();
    let input = CertInput { u: u.clone(), which, lam: None, point: Some(p.clone()) };
    match mk_config_at_point(&params, which, p) {
        Ok(c) => Ok(certify_with(&c, &cat, input)),
        Err(ConfigError::BadParameter(m)) => Err(CertifyError::BadParameter(m)),
        Err(e) => Ok(rejected(input, &params, &cat, &e)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub class: DivClass,
    pub self_intersection: i64,
    pub genus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogDump {
    pub basis: Vec<String>,
    pub entries: Vec<CatalogEntry>,
    pub intersection_table: Vec<Vec<i64>>,
    pub identities: Vec<NamedCheck>,
}

pub fn cmd_catalog() -> CatalogDump {
    let cat = Catalog::standard();
    CatalogDump {
        basis: crate::picard::BASIS.iter().map(|s| s.to_string()).collect(),
        entries: cat
            .entries()
            .iter()
            .map(|(n, c)| CatalogEntry {
                name: n.clone(),
                class: *c,
                self_intersection: crate::picard::pair(c, c),
                genus: adjunction_genus(c),
            })
            .collect(),
        intersection_table: cat.intersection_table(),
        identities: lattice_checks(&cat),
    }
}

impl CatalogDump {
    pub fn to_text(&self) -> String {
        let mut s = format!("basis: {}\n\n", self.basis.join(" "));
        let w = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        s.push_str(&format!("{:w$}  {:40} {:>4} {:>5}\n", "name", "class", "self", "genus"));
        for e in &self.entries {
            s.push_str(&format!("{:w$}  {:40} {:>4} {:>5}\n", e.name, e.class.to_string(), e.self_intersection, e.genus));
        }
        s.push_str("\nintersection table\n");
        s.push_str(&format!("{:w$} ", ""));
        for e in &self.entries {
            s.push_str(&format!("{:>8}", e.name));
        }
        s.push('\n');
        for (e, row) in self.entries.iter().zip(&self.intersection_table) {
            s.push_str(&format!("{:w$} ", e.name));
            for v in row {
                s.push_str(&format!("{v:>8}"));
            }
            s.push('\n');
        }
        s.push_str("\nidentities\n");
        for i in &self.identities {
            s.push_str(&format!("  [{}] {}\n", if i.holds { "ok" } else { "FAIL" }, i.name));
        }
        s
    }
}

pub fn params(u: &Rat) -> Result<Params, CertifyError> {
    mk_params(u).map_err(bad_parameter)
}

#[cfg(test)]
mod tests;
