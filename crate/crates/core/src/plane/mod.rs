//! Projective-plane primitives over the rationals: points, lines, ternary
//! forms, incidence and tangency, local expansions at a point, and the
//! Jacobian determinant of three forms.

mod hompoly;
mod point;
mod transform;

pub use hompoly::{monomial_count, monomial_index, monomials, HomPoly};
pub use point::{collinearity_det, cross, dot, line_through, ProjLine, ProjPoint};
pub use transform::ProjTransform;

use crate::qalg::{Rat, RatMatrix, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlaneError {
    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("the two points coincide")]
    EqualPoints,
    #[error("the two lines coincide")]
    EqualLines,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not on the line")]
    NotOnLine,
    #[error("point is not a singular point of the curve")]
    NotSingular,
    #[error("the line is a component of the curve")]
    ComponentLine,
    #[error("transformation matrix is singular")]
    SingularTransform,
}

pub fn eval(f: &HomPoly, p: &ProjPoint) -> Rat {
    f.eval(p)
}

/// The three partial derivatives of `f` at `p`.
pub fn gradient(f: &HomPoly, p: &ProjPoint) -> [Rat; 3] {
    f.gradient_coords(p.coords())
}

fn proportional3(a: &[Rat; 3], b: &[Rat; 3]) -> bool {
    cross(a, b).iter().all(Rat::is_zero)
}

/// True iff `p` is a smooth point of `f` whose tangent line is `line`.
pub fn tangent_to_line_at(f: &HomPoly, line: &ProjLine, p: &ProjPoint) -> Result<bool, PlaneError> {
    if !f.eval(p).is_zero() {
        return Err(PlaneError::NotOnCurve);
    }
    if !line.contains(p) {
        return Err(PlaneError::NotOnLine);
    }
    let g = gradient(f, p);
    if g.iter().all(Rat::is_zero) {
        return Ok(false);
    }
    Ok(proportional3(&g, line.coeffs()))
}

/// Degree-`k` part of a local expansion as a binary form, listed
/// `x^k, x^(k-1) y, ..., y^k`.
pub fn local_part(local: &HomPoly, k: usize) -> Vec<Rat> {
    (0..=k).rev().map(|i| local.coeff(i, k - i).clone()).collect()
}

/// Expansion of `f` at `p` in the adapted frame of `(p, direction)`.
pub fn local_expansion(f: &HomPoly, p: &ProjPoint, direction: Option<&ProjLine>) -> Result<HomPoly, PlaneError> {
    Ok(ProjTransform::adapted(p, direction)?.local_expansion(f))
}

/// Multiplicity of the curve `f = 0` at `p` (`degree + 1` for the zero form).
pub fn multiplicity_at(f: &HomPoly, p: &ProjPoint) -> usize {
    let local = local_expansion(f, p, None).expect("default frame exists");
    (0..=f.degree())
        .find(|&k| local_part(&local, k).iter().any(|c| !c.is_zero()))
        .unwrap_or(f.degree() + 1)
}

/// Quadratic tangent cone of `f` at a singular point, as a binary form in
/// the default local frame at `p`.
pub fn tangent_cone(f: &HomPoly, p: &ProjPoint) -> Result<[Rat; 3], PlaneError> {
    if !f.eval(p).is_zero() || gradient(f, p).iter().any(|c| !c.is_zero()) {
        return Err(PlaneError::NotSingular);
    }
    let local = local_expansion(f, p, None)?;
    let q = local_part(&local, 2);
    Ok([q[0].clone(), q[1].clone(), q[2].clone()])
}

/// True iff the singular point `p` of `f` is an ordinary double point.
pub fn singularity_is_node(f: &HomPoly, p: &ProjPoint) -> Result<bool, PlaneError> {
    let [a, b, c] = tangent_cone(f, p)?;
    let disc = &b * &b - Rat::from(4) * &a * &c;
    Ok(!disc.is_zero())
}

/// Resultant of two binary forms given by their coefficient lists
/// (highest power of the first variable first). Vanishes iff the forms have
/// a common zero in the projective line, or one of them is identically zero.
pub fn binary_resultant(a: &[Rat], b: &[Rat]) -> Rat {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    if size == 0 {
        return Rat::one();
    }
    let mut s = RatMatrix::zeros(size, size);
    for r in 0..n {
        for (k, c) in a.iter().enumerate() {
            s.set(r, r + k, c.clone());
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().enumerate() {
            s.set(n + r, r + k, c.clone());
        }
    }
    s.det()
}

/// Determinant of the Jacobian matrix of three forms.
pub fn jacobian_det(f: &HomPoly, g: &HomPoly, h: &HomPoly) -> HomPoly {
    let rows: [[HomPoly; 3]; 3] = [f, g, h].map(|p| [p.partial(0), p.partial(1), p.partial(2)]);
    let term = |a: usize, b: usize, c: usize| rows[0][a].mul(&rows[1][b]).mul(&rows[2][c]);
    term(0, 1, 2)
        .sub(&term(0, 2, 1))
        .sub(&term(1, 0, 2))
        .add(&term(1, 2, 0))
        .add(&term(2, 0, 1))
        .sub(&term(2, 1, 0))
}

/// Parameter value of a point on a parametrized line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineParam {
    Finite(Rat),
    Infinity,
}

/// A form restricted to a line parametrized as `base + s * dir`.
///
/// Stored as the binary form of degree `degree` dehomogenized at the base
/// point side; roots lost at `s = infinity` (the point `dir`) are tracked by
/// the degree drop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRestriction {
    pub base: [Rat; 3],
    pub dir: [Rat; 3],
    pub degree: usize,
    pub poly: UPoly,
}

/// Restricts `f` to `line` using the parametrization through the first two
/// distinct coordinate points of the line.
pub fn restrict_to_line(f: &HomPoly, line: &ProjLine) -> Result<LineRestriction, PlaneError> {
    let mut pts: Vec<ProjPoint> = Vec::new();
    for j in 0..3 {
        let e: [Rat; 3] = std::array::from_fn(|k| if k == j { Rat::one() } else { Rat::zero() });
        if let Ok(p) = ProjPoint::from_coords(cross(line.coeffs(), &e)) {
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    let base = pts[0].coords().clone();
    let dir = pts[1].coords().clone();
    // x_v := dir_v * s + base_v * w, read off in s with w = 1
    let forms: [HomPoly; 3] = std::array::from_fn(|v| HomPoly::linear(dir[v].clone(), Rat::zero(), base[v].clone()));
    let sub = f.compose(&forms);
    let poly = UPoly::new((0..=f.degree()).map(|i| sub.coeff(i, 0).clone()).collect());
    if poly.is_zero() {
        return Err(PlaneError::ComponentLine);
    }
    Ok(LineRestriction {
        base,
        dir,
        degree: f.degree(),
        poly,
    })
}

impl LineRestriction {
    pub fn infinity_multiplicity(&self) -> usize {
        self.degree - self.poly.degree().expect("nonzero restriction")
    }

    pub fn param_of(&self, p: &ProjPoint) -> Result<LineParam, PlaneError> {
        let x = p.coords();
        if proportional3(x, &self.dir) {
            return Ok(LineParam::Infinity);
        }
        // x ~ base + s dir: pick a coordinate where base + s dir is solvable
        let line = cross(&self.base, &self.dir);
        if !dot(&line, x).is_zero() {
            return Err(PlaneError::NotOnLine);
        }
        for k in 0..3 {
            for l in 0..3 {
                // x_k (base_l + s dir_l) = x_l (base_k + s dir_k)
                let a = &x[k] * &self.dir[l] - &x[l] * &self.dir[k];
                if a.is_zero() {
                    continue;
                }
                let b = &x[l] * &self.base[k] - &x[k] * &self.base[l];
                return Ok(LineParam::Finite(b / a));
            }
        }
        unreachable!("point off the direction has a finite parameter")
    }

    pub fn multiplicity_at(&self, p: &ProjPoint) -> Result<usize, PlaneError> {
        Ok(match self.param_of(p)? {
            LineParam::Infinity => self.infinity_multiplicity(),
            LineParam::Finite(s) => self.poly.root_multiplicity(&s),
        })
    }

    /// Removes `m` roots at `p`; fails if `p` has lower multiplicity.
    pub fn remove_root(&self, p: &ProjPoint, m: usize) -> Result<LineRestriction, PlaneError> {
        if self.multiplicity_at(p)? < m {
            return Err(PlaneError::NotOnCurve);
        }
        let mut out = self.clone();
        out.degree -= m;
        if let LineParam::Finite(s) = self.param_of(p)? {
            let lin = UPoly::linear_root(&s);
            for _ in 0..m {
                out.poly = out.poly.div_exact(&lin).expect("multiplicity checked");
            }
        }
        Ok(out)
    }

    /// All roots simple (over an algebraic closure), counting infinity.
    pub fn is_squarefree(&self) -> bool {
        let inf = self.infinity_multiplicity();
        inf <= 1 && (self.poly.degree() == Some(0) || self.poly.is_squarefree())
    }

    /// True iff the two restrictions (same parametrization) share a root.
    pub fn shares_root_with(&self, o: &LineRestriction) -> bool {
        assert!(self.base == o.base && self.dir == o.dir, "different parametrizations");
        (self.infinity_multiplicity() > 0 && o.infinity_multiplicity() > 0)
            || self.poly.gcd(&o.poly).degree().unwrap_or(0) > 0
    }
}
