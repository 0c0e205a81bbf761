//! Linear systems of plane curves with assigned base points, including
//! infinitely near points of the first order, and their dimensions.

mod modp;

use serde::Serialize;

use crate::plane::{monomial_count, monomials, HomPoly, ProjLine, ProjPoint, ProjTransform};
use crate::qalg::{Rat, RatMatrix, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinsysError {
    #[error("condition line does not pass through its point")]
    LineMissesPoint,
    #[error("condition imposes nothing")]
    VacuousCondition,
    #[error("two conditions share the point {0}")]
    RepeatedPoint(ProjPoint),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("the linear system is empty")]
    EmptySystem,
    #[error("frame does not send the point to (0:0:1) and the direction to y = 0")]
    BadFrame,
}

/// A tangent direction at a base point together with the extra weight
/// assigned to the infinitely near point in that direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfNear {
    pub direction: ProjLine,
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCondition {
    pub point: ProjPoint,
    pub mult: usize,
    pub infnear: Option<InfNear>,
}

impl BaseCondition {
    pub fn ordinary(point: ProjPoint, mult: usize) -> Result<Self, LinsysError> {
        if mult == 0 {
            return Err(LinsysError::VacuousCondition);
        }
        Ok(BaseCondition { point, mult, infnear: None })
    }

    /// Multiplicity `mult` at `point`, and total order `mult + weight` along
    /// the exceptional curve over the point infinitely near in `direction`.
    pub fn infinitely_near(
        point: ProjPoint,
        mult: usize,
        direction: ProjLine,
        weight: usize,
    ) -> Result<Self, LinsysError> {
        if !direction.contains(&point) {
            return Err(LinsysError::LineMissesPoint);
        }
        if mult == 0 && weight == 0 {
            return Err(LinsysError::VacuousCondition);
        }
        Ok(BaseCondition {
            point,
            mult,
            infnear: Some(InfNear { direction, weight }),
        })
    }

    /// The deterministic adapted frame for this condition.
    pub fn frame(&self) -> ProjTransform {
        ProjTransform::adapted(&self.point, self.infnear.as_ref().map(|n| &n.direction))
            .expect("validated condition has an adapted frame")
    }

    /// Local monomials `x^i y^j` whose coefficients must vanish.
    pub fn vanishing_monomials(&self) -> Vec<(usize, usize)> {
        let m = self.mult;
        let total = m + self.infnear.as_ref().map_or(0, |n| n.weight);
        let reach = if self.infnear.is_some() { total.max(m) } else { m };
        let mut out = Vec::new();
        for s in 0..reach {
            for j in 0..=s {
                let i = s - j;
                let by_mult = i + j < m;
                let by_val = self.infnear.is_some() && i + 2 * j < total;
                if by_mult || by_val {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn order(&self) -> usize {
        self.vanishing_monomials().iter().map(|(i, j)| i + j + 1).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinSysSpec {
    pub degree: usize,
    pub conditions: Vec<BaseCondition>,
}

impl LinSysSpec {
    pub fn new(degree: usize, conditions: Vec<BaseCondition>) -> Result<Self, LinsysError> {
        if degree == 0 {
            return Err(LinsysError::ZeroDegree);
        }
        for (a, c) in conditions.iter().enumerate() {
            if conditions[..a].iter().any(|o| o.point == c.point) {
                return Err(LinsysError::RepeatedPoint(c.point.clone()));
            }
        }
        Ok(LinSysSpec { degree, conditions })
    }

    /// The same system with one more condition.
    pub fn with(&self, c: BaseCondition) -> Result<Self, LinsysError> {
        let mut conditions = self.conditions.clone();
        conditions.push(c);
        Self::new(self.degree, conditions)
    }

    pub fn monomial_count(&self) -> usize {
        monomial_count(self.degree)
    }
}

/// Truncated local expansions `x^i y^j` with `i + j < order`, stored by
/// total degree then by `j`.
struct Jet {
    order: usize,
    c: Vec<Rat>,
}

fn jet_index(i: usize, j: usize) -> usize {
    let s = i + j;
    s * (s + 1) / 2 + j
}

impl Jet {
    fn one(order: usize) -> Jet {
        let mut c = vec![Rat::zero(); order * (order + 1) / 2];
        if order > 0 {
            c[0] = Rat::one();
        }
        Jet { order, c }
    }

    fn linear(order: usize, a: &Rat, b: &Rat, c0: &Rat) -> Jet {
        let mut j = Jet::one(order);
        if order > 0 {
            j.c[0] = c0.clone();
        }
        if order > 1 {
            j.c[jet_index(1, 0)] = a.clone();
            j.c[jet_index(0, 1)] = b.clone();
        }
        j
    }

    fn mul(&self, o: &Jet) -> Jet {
        let n = self.order;
        let mut out = vec![Rat::zero(); self.c.len()];
        for s in 0..n {
            for j in 0..=s {
                let a = &self.c[jet_index(s - j, j)];
                if a.is_zero() {
                    continue;
                }
                for t in 0..n - s {
                    for l in 0..=t {
                        let b = &o.c[jet_index(t - l, l)];
                        if !b.is_zero() {
                            out[jet_index(s - j + t - l, j + l)] += &(a * b);
                        }
                    }
                }
            }
        }
        Jet { order: n, c: out }
    }

    fn get(&self, i: usize, j: usize) -> &Rat {
        &self.c[jet_index(i, j)]
    }
}

/// Rows of the conditions of `cond` on degree-`d` forms, computed in the
/// given frame. The frame must send the point to `(0:0:1)` and, when the
/// condition has a direction, that line to `x2 = 0`.
pub fn condition_rows_in_frame(
    d: usize,
    cond: &BaseCondition,
    frame: &ProjTransform,
) -> Result<Vec<Vec<Rat>>, LinsysError> {
    if frame.apply_point(&cond.point) != ProjPoint::ints(0, 0, 1) {
        return Err(LinsysError::BadFrame);
    }
    if let Some(n) = &cond.infnear {
        if frame.apply_line(&n.direction) != ProjLine::ints(0, 1, 0) {
            return Err(LinsysError::BadFrame);
        }
    }
    let wanted = cond.vanishing_monomials();
    let order = cond.order();
    let inv = frame.inverse_matrix();
    let powers: Vec<Vec<Jet>> = (0..3)
        .map(|r| {
            let l = Jet::linear(order, inv.get(r, 0), inv.get(r, 1), inv.get(r, 2));
            let mut v = vec![Jet::one(order)];
            for k in 0..d {
                let next = v[k].mul(&l);
                v.push(next);
            }
            v
        })
        .collect();
    let images: Vec<Jet> = monomials(d)
        .map(|e| powers[0][e[0]].mul(&powers[1][e[1]]).mul(&powers[2][e[2]]))
        .collect();
    Ok(wanted
        .iter()
        .map(|&(i, j)| images.iter().map(|m| m.get(i, j).clone()).collect())
        .collect())
}

/// All linear conditions of `spec` on the coefficient vector of a form in
/// the fixed monomial order.
pub fn condition_matrix(spec: &LinSysSpec) -> RatMatrix {
    let frames: Vec<ProjTransform> = spec.conditions.iter().map(BaseCondition::frame).collect();
    condition_matrix_in_frames(spec, &frames).expect("adapted frames are valid")
}

/// As [`condition_matrix`] with caller-chosen frames, one per condition.
pub fn condition_matrix_in_frames(
    spec: &LinSysSpec,
    frames: &[ProjTransform],
) -> Result<RatMatrix, LinsysError> {
    assert_eq!(frames.len(), spec.conditions.len(), "one frame per condition");
    let mut m = RatMatrix::zeros(0, spec.monomial_count());
    for (c, f) in spec.conditions.iter().zip(frames) {
        for row in condition_rows_in_frame(spec.degree, c, f)? {
            m.push_row(row);
        }
    }
    Ok(m)
}

pub fn h0(spec: &LinSysSpec) -> usize {
    spec.monomial_count() - condition_matrix(spec).rank()
}

/// A basis of the system as primitive integer forms, in the deterministic
/// order of the kernel computation.
pub fn member_basis(spec: &LinSysSpec) -> Result<Vec<HomPoly>, LinsysError> {
    let basis: Vec<HomPoly> = condition_matrix(spec)
        .kernel_basis()
        .into_iter()
        .map(|v| HomPoly::from_coeffs(spec.degree, v))
        .collect();
    if basis.is_empty() {
        Err(LinsysError::EmptySystem)
    } else {
        Ok(basis)
    }
}

/// Outcome of the one-sided irreducibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Proven,
    Inconclusive,
}

/// One-sided test for irreducibility of `f` over the rationals.
///
/// In each affine chart and choice of main variable, `f` is irreducible when
/// its content in the main variable is constant and some specialization of
/// the other variable keeps full degree and is irreducible; the latter is
/// decided from factor-degree patterns modulo several primes.
pub fn irreducible_specialization_test(f: &HomPoly) -> bool {
    irreducibility(f) == Irreducibility::Proven
}

pub fn irreducibility(f: &HomPoly) -> Irreducibility {
    let d = f.degree();
    if f.is_zero() || d < 1 {
        return Irreducibility::Inconclusive;
    }
    if d == 1 {
        return Irreducibility::Proven;
    }
    const ROLES: [(usize, usize, usize); 6] =
        [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 0, 1), (1, 2, 0), (2, 1, 0)];
    for (main, other, chart) in ROLES {
        // the chart variable must not divide f
        if f.terms().all(|(e, c)| c.is_zero() || e[chart] > 0) {
            return Irreducibility::Inconclusive;
        }
        // coefficient of main^i, as a polynomial in the other variable
        let mut by_main: Vec<Vec<Rat>> = vec![vec![Rat::zero(); d + 1]; d + 1];
        for (e, c) in f.terms() {
            by_main[e[main]][e[other]] += c;
        }
        let coeffs: Vec<UPoly> = by_main.into_iter().map(UPoly::new).collect();
        let Some(top) = (0..=d).rev().find(|&i| !coeffs[i].is_zero()) else {
            continue;
        };
        if top == 0 {
            continue;
        }
        let content = coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(UPoly::zero(), |g, c| if g.is_zero() { c.monic() } else { g.gcd(c) });
        if content.degree() != Some(0) {
            continue;
        }
        let mut tried = 0;
        for k in 0..40i64 {
            let y0 = Rat::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
            if coeffs[top].eval(&y0).is_zero() {
                continue;
            }
            let uni = UPoly::new(coeffs[..=top].iter().map(|c| c.eval(&y0)).collect());
            if modp::irreducible_by_degree_patterns(&uni) {
                return Irreducibility::Proven;
            }
            tried += 1;
            if tried >= 12 {
                break;
            }
        }
    }
    Irreducibility::Inconclusive
}

#[cfg(test)]
mod tests;
