use std::fmt;

use serde::Serialize;

use crate::qalg::{primitive_integer_vector, Rat, RatMatrix};

use super::PlaneError;

/// Cross product of two coordinate triples.
pub fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn normalize(v: [Rat; 3]) -> Result<[Rat; 3], PlaneError> {
    if v.iter().all(Rat::is_zero) {
        return Err(PlaneError::ZeroVector);
    }
    let p = primitive_integer_vector(&v);
    Ok([p[0].clone(), p[1].clone(), p[2].clone()])
}

/// A point of the projective plane, stored as a primitive integer triple
/// whose first nonzero coordinate is positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: [Rat; 3],
}

/// A line, in dual coordinates, normalized like [`ProjPoint`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ProjLine {
    coeffs: [Rat; 3],
}

impl ProjPoint {
    pub fn new(x1: Rat, x2: Rat, x3: Rat) -> Result<Self, PlaneError> {
        Ok(ProjPoint {
            coords: normalize([x1, x2, x3])?,
        })
    }

    pub fn from_coords(c: [Rat; 3]) -> Result<Self, PlaneError> {
        Ok(ProjPoint {
            coords: normalize(c)?,
        })
    }

    /// Panics on the zero triple; meant for literals.
    pub fn ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(a.into(), b.into(), c.into()).expect("nonzero point literal")
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.coords
    }

    pub fn on_line(&self, l: &ProjLine) -> bool {
        dot(&self.coords, &l.coeffs).is_zero()
    }

    /// Image under a 3x3 matrix acting on column vectors.
    pub fn mapped(&self, m: &RatMatrix) -> Result<Self, PlaneError> {
        let v = m.mul_vec(&self.coords);
        Self::new(v[0].clone(), v[1].clone(), v[2].clone())
    }
}

impl ProjLine {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, PlaneError> {
        Ok(ProjLine {
            coeffs: normalize([a, b, c])?,
        })
    }

    pub fn ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(a.into(), b.into(), c.into()).expect("nonzero line literal")
    }

    pub fn coeffs(&self) -> &[Rat; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        p.on_line(self)
    }

    /// The point where two distinct lines meet.
    pub fn meet(&self, other: &ProjLine) -> Result<ProjPoint, PlaneError> {
        ProjPoint::from_coords(cross(&self.coeffs, &other.coeffs)).map_err(|_| PlaneError::EqualLines)
    }
}

/// The line through two distinct points.
pub fn line_through(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine, PlaneError> {
    let c = cross(&a.coords, &b.coords);
    if c.iter().all(Rat::is_zero) {
        return Err(PlaneError::EqualPoints);
    }
    let [x, y, z] = c;
    ProjLine::new(x, y, z)
}

/// Determinant of the three coordinate vectors; zero iff collinear.
pub fn collinearity_det(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Rat {
    dot(&a.coords, &cross(&b.coords, &c.coords))
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
