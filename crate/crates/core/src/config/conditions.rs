use serde::Serialize;

use crate::linsys::{condition_matrix, h0, member_basis, BaseCondition, LinSysSpec};
use crate::plane::{
    binary_resultant, collinearity_det, local_expansion, local_part, monomials, singularity_is_node,
    HomPoly, ProjPoint,
};
use crate::qalg::{Rat, RatMatrix};

use super::{base_points, delta_spec, gamma0_spec, gamma1_spec, gamma2_spec, Config, ConfigError};

/// One verified condition with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: String,
}

impl Check {
    fn pass(w: impl Into<String>) -> Check {
        Check { holds: true, witness: w.into() }
    }

    fn fail(w: impl Into<String>) -> Check {
        Check { holds: false, witness: w.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    #[serde(rename = "I")]
    pub i: Check,
    #[serde(rename = "II")]
    pub ii: Check,
    #[serde(rename = "III")]
    pub iii: Check,
    #[serde(rename = "IV")]
    pub iv: Check,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.i.holds && self.ii.holds && self.iii.holds && self.iv.holds
    }

    pub fn entries(&self) -> [(&'static str, &Check); 4] {
        [("I", &self.i), ("II", &self.ii), ("III", &self.iii), ("IV", &self.iv)]
    }

    /// Name of the first failing condition.
    pub fn first_failure(&self) -> Option<&'static str> {
        self.entries().into_iter().find(|(_, c)| !c.holds).map(|(n, _)| n)
    }
}

const NAMES: [&str; 6] = ["p0", "p1", "p2", "p3", "p4", "p"];

fn check_i(pts: &[ProjPoint; 6]) -> Check {
    let mut count = 0;
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                count += 1;
                if collinearity_det(&pts[a], &pts[b], &pts[c]).is_zero() {
                    return Check::fail(format!("{}, {}, {} are collinear", NAMES[a], NAMES[b], NAMES[c]));
                }
            }
        }
    }
    Check::pass(format!("all {count} triples have nonzero determinant"))
}

fn smooth_unique_conic(spec: Result<LinSysSpec, ConfigError>, name: &str) -> Result<String, String> {
    let spec = spec.map_err(|e| format!("{name}: {e}"))?;
    let basis = member_basis(&spec).unwrap_or_default();
    if basis.len() != 1 {
        return Err(format!("{name}: system of dimension {}", basis.len()));
    }
    let det = basis[0].conic_matrix().det();
    if det.is_zero() {
        return Err(format!("{name}: the unique conic is singular"));
    }
    Ok(format!("{name} unique with nonzero discriminant"))
}

fn check_ii(p0: &ProjPoint) -> Check {
    let a = smooth_unique_conic(gamma1_spec(p0), "gamma1");
    let b = smooth_unique_conic(gamma2_spec(p0), "gamma2");
    match (a, b) {
        (Ok(a), Ok(b)) => Check::pass(format!("{a}; {b}")),
        (Err(e), _) | (_, Err(e)) => Check::fail(e),
    }
}

fn check_iii(p0: &ProjPoint, pts: &[ProjPoint; 6], p: &ProjPoint) -> Check {
    let rows: Vec<Vec<Rat>> = pts
        .iter()
        .map(|q| {
            let c = q.coords();
            monomials(2).map(|e| c[0].pow(e[0] as u32) * c[1].pow(e[1] as u32) * c[2].pow(e[2] as u32)).collect()
        })
        .collect();
    let det = RatMatrix::from_rows(6, rows).det();
    if det.is_zero() {
        return Check::fail("the six points lie on a conic");
    }
    let spec = gamma0_spec(p0).and_then(|s| {
        s.with(BaseCondition::ordinary(p.clone(), 1)?).map_err(ConfigError::from)
    });
    match spec {
        Err(e) => Check::fail(format!("ten-point cubic system: {e}")),
        Ok(s) => {
            let rank = condition_matrix(&s).rank();
            if rank == 10 {
                Check::pass(format!("six-point conic determinant {det}; ten-point cubic matrix rank 10"))
            } else {
                Check::fail(format!("a cubic passes through the ten points (rank {rank})"))
            }
        }
    }
}

/// Complete irreducibility test for a cubic with a double point at `p`: it
/// splits iff it contains a line through `p`, iff the tangent cone and the
/// cubic part at `p` share a direction.
pub fn nodal_cubic_irreducible(f: &HomPoly, p: &ProjPoint) -> bool {
    assert_eq!(f.degree(), 3, "cubic expected");
    let Ok(local) = local_expansion(f, p, None) else { return false };
    let lower_vanish = (0..2).all(|k| local_part(&local, k).iter().all(Rat::is_zero));
    let q = local_part(&local, 2);
    if !lower_vanish || q.iter().all(Rat::is_zero) {
        return false;
    }
    !binary_resultant(&q, &local_part(&local, 3)).is_zero()
}

fn check_lambda(p0: &ProjPoint, p: &ProjPoint, k: usize) -> Result<String, String> {
    let name = format!("lambda{k}");
    let spec = delta_spec(p0, k)
        .and_then(|s| s.with(BaseCondition::ordinary(p.clone(), 2)?).map_err(ConfigError::from))
        .map_err(|e| format!("{name}: {e}"))?;
    let basis = member_basis(&spec).unwrap_or_default();
    match basis.len() {
        0 => return Err(format!("{name}: no member of delta{k} is singular at p")),
        1 => {}
        n => return Err(format!("{name}: dimension jumps to {n}")),
    }
    let f = &basis[0];
    if !singularity_is_node(f, p).unwrap_or(false) {
        return Err(format!("{name}: singular point at p is not a node"));
    }
    if !nodal_cubic_irreducible(f, p) {
        return Err(format!("{name}: contains a line through p"));
    }
    Ok(format!("{name} unique, irreducible, nodal at p"))
}

fn check_iv(p0: &ProjPoint, p: &ProjPoint) -> Check {
    match (check_lambda(p0, p, 1), check_lambda(p0, p, 2)) {
        (Ok(a), Ok(b)) => Check::pass(format!("{a}; {b}")),
        (Err(e), _) | (_, Err(e)) => Check::fail(e),
    }
}

/// Conditions (I)-(IV) for the six points `p0, p1, ..., p4, p` with `p1..p4`
/// in normal form. Works for arbitrary `p0`, not only members of the family.
pub fn check_configuration(p0: &ProjPoint, p: &ProjPoint) -> ConditionReport {
    let [p1, p2, p3, p4] = base_points();
    let pts = [p0.clone(), p1, p2, p3, p4, p.clone()];
    let i = check_i(&pts);
    let ii = check_ii(p0);
    // the remaining systems need distinct points
    let distinct = (0..6).all(|a| (a + 1..6).all(|b| pts[a] != pts[b]));
    if !distinct {
        let f = Check::fail("two of the six points coincide");
        return ConditionReport { i, ii, iii: f.clone(), iv: f };
    }
    ConditionReport {
        i,
        ii,
        iii: check_iii(p0, &pts, p),
        iv: check_iv(p0, p),
    }
}

pub fn check_conditions(c: &Config) -> ConditionReport {
    check_configuration(&c.p0, &c.p)
}

/// `h0` of the system of members of `delta_k` singular at `p`.
pub fn lambda_h0(p0: &ProjPoint, p: &ProjPoint, k: usize) -> Result<usize, ConfigError> {
    Ok(h0(&super::lambda_spec(p0, p, k)?))
}
