use crate::qalg::{Rat, RatMatrix};

use super::hompoly::HomPoly;
use super::point::{cross, ProjLine, ProjPoint};
use super::PlaneError;

/// An invertible projective transformation. Points map by `matrix * x`;
/// forms map by substitution with the inverse, so zero sets map to zero sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjTransform {
    matrix: RatMatrix,
    inverse: RatMatrix,
}

impl ProjTransform {
    pub fn new(matrix: RatMatrix) -> Result<Self, PlaneError> {
        assert!(matrix.rows() == 3 && matrix.cols() == 3, "3x3 matrix expected");
        let inverse = matrix.inverse().ok_or(PlaneError::SingularTransform)?;
        Ok(ProjTransform { matrix, inverse })
    }

    /// The transformation whose inverse has the given columns.
    pub fn from_inverse_columns(cols: [&[Rat; 3]; 3]) -> Result<Self, PlaneError> {
        let inv = RatMatrix::from_rows(
            3,
            (0..3).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect(),
        );
        let matrix = inv.inverse().ok_or(PlaneError::SingularTransform)?;
        Ok(ProjTransform {
            matrix,
            inverse: inv,
        })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &RatMatrix {
        &self.inverse
    }

    pub fn det(&self) -> Rat {
        self.matrix.det()
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        p.mapped(&self.matrix).expect("invertible map sends points to points")
    }

    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        // l . x = 0  <=>  (l * M^-1) . (M x) = 0
        let v = self.inverse.transpose().mul_vec(l.coeffs());
        ProjLine::new(v[0].clone(), v[1].clone(), v[2].clone()).expect("invertible map")
    }

    pub fn apply_poly(&self, f: &HomPoly) -> HomPoly {
        let forms: [HomPoly; 3] = std::array::from_fn(|r| {
            HomPoly::linear(
                self.inverse.get(r, 0).clone(),
                self.inverse.get(r, 1).clone(),
                self.inverse.get(r, 2).clone(),
            )
        });
        f.compose(&forms)
    }

    /// The deterministic frame used for local expansions at `point`.
    ///
    /// The result sends `point` to `(0:0:1)` and `direction` (or, when absent,
    /// the first coordinate-adapted line through `point`) to `x2 = 0`, so the
    /// affine chart `x3 = 1` has local coordinates `(x, y) = (x1, x2)` with
    /// the direction along `y = 0`.
    pub fn adapted(point: &ProjPoint, direction: Option<&ProjLine>) -> Result<Self, PlaneError> {
        let pc = point.coords();
        let line = match direction {
            Some(l) => {
                if !l.contains(point) {
                    return Err(PlaneError::NotOnLine);
                }
                l.clone()
            }
            None => {
                let e = (0..3)
                    .map(unit)
                    .find(|e| !cross(pc, e).iter().all(Rat::is_zero))
                    .expect("some basis vector differs from the point");
                let [a, b, c] = cross(pc, &e);
                ProjLine::new(a, b, c)?
            }
        };
        let other = (0..3)
            .map(|j| cross(line.coeffs(), &unit(j)))
            .find(|q| !q.iter().all(Rat::is_zero) && !cross(q, pc).iter().all(Rat::is_zero))
            .expect("a line carries two coordinate points");
        let off = (0..3)
            .find(|&j| !line.coeffs()[j].is_zero())
            .map(unit)
            .expect("nonzero line");
        Self::from_inverse_columns([&other, &off, pc])
    }

    /// Coefficients of `f` in the local chart of this frame: the coefficient
    /// of `x^i y^j` is `result.coeff(i, j)`.
    pub fn local_expansion(&self, f: &HomPoly) -> HomPoly {
        self.apply_poly(f)
    }
}

fn unit(j: usize) -> [Rat; 3] {
    std::array::from_fn(|k| if k == j { Rat::one() } else { Rat::zero() })
}
