use std::fmt;

use serde::Serialize;

use crate::qalg::{primitive_integer_vector, Rat};

use super::point::ProjPoint;

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Exponent triples of degree `d` in the fixed order: descending
/// lexicographic in the first two exponents.
pub fn monomials(d: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..=d)
        .rev()
        .flat_map(move |i| (0..=d - i).rev().map(move |j| [i, j, d - i - j]))
}

/// Position of `x1^i x2^j x3^(d-i-j)` in the fixed order.
pub fn monomial_index(d: usize, i: usize, j: usize) -> usize {
    let a = d - i;
    a * (a + 1) / 2 + (a - j)
}

/// A ternary form of fixed degree with rational coefficients.
///
/// Coefficients are kept exactly as computed; [`HomPoly::primitive`] gives
/// the normalized representative used whenever a form stands for a curve.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct HomPoly {
    degree: usize,
    coeffs: Vec<Rat>,
}

impl HomPoly {
    pub fn zero(degree: usize) -> Self {
        HomPoly {
            degree,
            coeffs: vec![Rat::zero(); monomial_count(degree)],
        }
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), monomial_count(degree), "coefficient count");
        HomPoly { degree, coeffs }
    }

    /// Builds a form from `(exponents, coefficient)` terms; repeated
    /// exponents accumulate.
    pub fn from_terms(degree: usize, terms: &[([usize; 3], Rat)]) -> Self {
        let mut p = Self::zero(degree);
        for (e, c) in terms {
            assert_eq!(e[0] + e[1] + e[2], degree, "inhomogeneous term");
            p.coeffs[monomial_index(degree, e[0], e[1])] += c;
        }
        p
    }

    pub fn linear(a: Rat, b: Rat, c: Rat) -> Self {
        Self::from_coeffs(1, vec![a, b, c])
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// The coordinate function `x_{v+1}`.
    pub fn var(v: usize) -> Self {
        let mut p = Self::zero(1);
        p.coeffs[v] = Rat::one();
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rat {
        &self.coeffs[monomial_index(self.degree, i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &Rat)> {
        monomials(self.degree).zip(self.coeffs.iter())
    }

    pub fn add(&self, o: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, o.degree, "subtracting forms of different degree");
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> HomPoly {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, o: &HomPoly) -> HomPoly {
        let d = self.degree + o.degree;
        let mut out = HomPoly::zero(d);
        for (ea, a) in self.terms() {
            if a.is_zero() {
                continue;
            }
            for (eb, b) in o.terms() {
                if b.is_zero() {
                    continue;
                }
                let idx = monomial_index(d, ea[0] + eb[0], ea[1] + eb[1]);
                out.coeffs[idx] += &(a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> HomPoly {
        let mut acc = HomPoly::constant(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval_coords(&self, x: &[Rat; 3]) -> Rat {
        let pows: Vec<Vec<Rat>> = x
            .iter()
            .map(|xi| {
                let mut v = vec![Rat::one()];
                for k in 0..self.degree {
                    let next = &v[k] * xi;
                    v.push(next);
                }
                v
            })
            .collect();
        self.terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| c * &pows[0][e[0]] * &pows[1][e[1]] * &pows[2][e[2]])
            .sum()
    }

    pub fn eval(&self, p: &ProjPoint) -> Rat {
        self.eval_coords(p.coords())
    }

    /// Partial derivative in `x_{v+1}`. The derivative of a constant is the
    /// zero form of degree 0.
    pub fn partial(&self, v: usize) -> HomPoly {
        if self.degree == 0 {
            return HomPoly::zero(0);
        }
        let d = self.degree - 1;
        let mut out = HomPoly::zero(d);
        for (e, c) in self.terms() {
            if e[v] == 0 || c.is_zero() {
                continue;
            }
            let mut f = e;
            f[v] -= 1;
            out.coeffs[monomial_index(d, f[0], f[1])] += &(c * Rat::from(e[v] as i64));
        }
        out
    }

    pub fn gradient_coords(&self, x: &[Rat; 3]) -> [Rat; 3] {
        [
            self.partial(0).eval_coords(x),
            self.partial(1).eval_coords(x),
            self.partial(2).eval_coords(x),
        ]
    }

    /// Substitutes `x_v := forms[v]`; all three forms must share a degree.
    pub fn compose(&self, forms: &[HomPoly; 3]) -> HomPoly {
        let e = forms[0].degree;
        assert!(forms.iter().all(|f| f.degree == e), "substitution forms of mixed degree");
        let powers: Vec<Vec<HomPoly>> = forms
            .iter()
            .map(|f| {
                let mut v = vec![HomPoly::constant(Rat::one())];
                for k in 0..self.degree {
                    let next = v[k].mul(f);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = HomPoly::zero(self.degree * e);
        for (ex, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let m = powers[0][ex[0]].mul(&powers[1][ex[1]]).mul(&powers[2][ex[2]]);
            out = out.add(&m.scale(c));
        }
        out
    }

    /// Primitive integer representative with positive leading coefficient.
    pub fn primitive(&self) -> HomPoly {
        HomPoly {
            degree: self.degree,
            coeffs: primitive_integer_vector(&self.coeffs),
        }
    }

    /// True iff both forms have the same degree and are proportional
    /// (the zero form is proportional only to itself).
    pub fn proportional(&self, o: &HomPoly) -> bool {
        self.degree == o.degree && self.primitive() == o.primitive()
    }

    /// Symmetric matrix of a quadratic form (twice the Gram matrix).
    pub fn conic_matrix(&self) -> crate::qalg::RatMatrix {
        assert_eq!(self.degree, 2, "conic matrix of a non-conic");
        let c = |i, j| self.coeff(i, j).clone();
        let two = Rat::from(2);
        crate::qalg::RatMatrix::from_rows(
            3,
            vec![
                vec![&two * c(2, 0), c(1, 1), c(1, 0)],
                vec![c(1, 1), &two * c(0, 2), c(0, 1)],
                vec![c(1, 0), c(0, 1), &two * c(0, 0)],
            ],
        )
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mut s = format!("{c}");
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => s.push_str(&format!("*x{}", v + 1)),
                    _ => s.push_str(&format!("*x{}^{}", v + 1, k)),
                }
            }
            parts.push(s);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
