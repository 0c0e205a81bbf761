use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::{check_conditions, mk_config, mk_params, ConfigError, Which};
use crate::qalg::Rat;

use super::{certify, CertifyError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchGrid {
    pub u: Vec<Rat>,
    pub which: Vec<Which>,
    pub lam: Vec<[Rat; 2]>,
    pub full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hit {
    pub u: Rat,
    pub which: Which,
    pub lam: [Rat; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub grid: SearchGrid,
    pub points: usize,
    pub hits: Vec<Hit>,
    /// Number of grid points per first failing check.
    pub failures: BTreeMap<String, usize>,
}

/// Primitive pairs `(a:b)` with `0 <= a <= n`, `-n <= b <= n`, one
/// representative per projective point.
pub fn lam_grid(n: i64) -> Vec<[Rat; 2]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in -n..=n {
            if num_integer::gcd(a, b) != 1 || (a == 0 && b != 1) {
                continue;
            }
            out.push([Rat::from(a), Rat::from(b)]);
        }
    }
    out
}

fn classify(u: &Rat, which: Which, lam: &[Rat; 2], full: bool) -> Result<(), String> {
    let params = mk_params(u).map_err(|_| "BadParameter".to_string())?;
    let c = mk_config(&params, which, lam).map_err(|e| match e {
        ConfigError::ExcludedPoint { .. } => "ExcludedPoint".to_string(),
        ConfigError::NotOnConic { .. } => "NotOnConic".to_string(),
        ConfigError::BadParameter(_) => "BadParameter".to_string(),
        other => format!("{other}"),
    })?;
    if full {
        let cert = certify(&c);
        match cert.reasons().first() {
            None => Ok(()),
            Some(r) => Err(r.split(':').next().unwrap_or(r).to_string()),
        }
    } else {
        match check_conditions(&c).first_failure() {
            None => Ok(()),
            Some(n) => Err(format!("condition ({n})")),
        }
    }
}

/// Classifies every grid point; the output order follows the grid.
pub fn cmd_search(grid: SearchGrid) -> Result<SearchResult, CertifyError> {
    if grid.u.is_empty() || grid.which.is_empty() || grid.lam.is_empty() {
        return Err(CertifyError::EmptyGrid);
    }
    let mut points: Vec<(Rat, Which, [Rat; 2])> = Vec::new();
    for u in &grid.u {
        for &w in &grid.which {
            for l in &grid.lam {
                points.push((u.clone(), w, l.clone()));
            }
        }
    }
    let outcomes: Vec<Result<(), String>> =
        points.par_iter().map(|(u, w, l)| classify(u, *w, l, grid.full)).collect();
    let mut hits = Vec::new();
    let mut failures = BTreeMap::new();
    for ((u, which, lam), o) in points.iter().zip(outcomes) {
        match o {
            Ok(()) => hits.push(Hit { u: u.clone(), which: *which, lam: lam.clone() }),
            Err(k) => *failures.entry(k).or_insert(0) += 1,
        }
    }
    Ok(SearchResult { points: points.len(), grid, hits, failures })
}
