//! The two-parameter family of six-point configurations: parameters, the
//! points `p0, ..., p4, p`, the auxiliary curves, and conditions (I)-(IV).

mod conditions;

pub use conditions::{
    check_conditions, check_configuration, lambda_h0, nodal_cubic_irreducible, Check, ConditionReport,
};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::linsys::{member_basis, BaseCondition, LinSysSpec, LinsysError};
use crate::plane::{jacobian_det, line_through, HomPoly, PlaneError, ProjLine, ProjPoint, ProjTransform};
use crate::qalg::{primitive_integer_vector, Rat, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("p = {point} lies on the excluded curve(s) {}", curves.join(", "))]
    ExcludedPoint { point: ProjPoint, curves: Vec<String> },
    #[error("p = {point} is not on the conic c_{which}")]
    NotOnConic { point: ProjPoint, which: Which },
    #[error("linear system {system} has dimension {dim}, expected {expected}")]
    DegenerateSystem { system: String, dim: usize, expected: String },
    #[error(transparent)]
    Linsys(#[from] LinsysError),
    #[error(transparent)]
    Plane(#[from] PlaneError),
}

/// Rational parameters of the family: `t = (u^2+1)/(2u)` and
/// `s = (u^2-1)/(2u)` make `t^2 - 1 = s^2` a square, so that the two roots
/// `alpha, beta = -t^2 +- t s` of `z^2 + 2t^2 z + t^2` are rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub u: Rat,
    pub t: Rat,
    pub s: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

pub fn mk_params(u: &Rat) -> Result<Params, ConfigError> {
    if u.is_zero() || u.abs().is_one() {
        return Err(ConfigError::BadParameter(format!("u = {u} is excluded (u must avoid 0, 1, -1)")));
    }
    let two_u = Rat::from(2) * u;
    let u2 = u * u;
    let t = (&u2 + Rat::one()) / &two_u;
    let s = (&u2 - Rat::one()) / &two_u;
    let t2 = &t * &t;
    let ts = &t * &s;
    let alpha = -t2.clone() + &ts;
    let beta = -t2 - ts;
    Ok(Params { u: u.clone(), t, s, alpha, beta })
}

impl Params {
    pub fn p0(&self) -> ProjPoint {
        ProjPoint::new(self.t.clone(), Rat::one(), Rat::one() + &self.t).expect("nonzero")
    }

    pub fn root(&self, which: Which) -> &Rat {
        match which {
            Which::Alpha => &self.alpha,
            Which::Beta => &self.beta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Alpha,
    Beta,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Alpha => "alpha",
            Which::Beta => "beta",
        })
    }
}

impl FromStr for Which {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "alpha" => Ok(Which::Alpha),
            "beta" => Ok(Which::Beta),
            _ => Err(format!("expected alpha or beta, got {s:?}")),
        }
    }
}

/// `c_a = -(1+a) x1 x2 + x1 x3 + a x2 x3`, the conics through `p1, ..., p4`.
pub fn conic_c(a: &Rat) -> HomPoly {
    HomPoly::from_terms(
        2,
        &[
            ([1, 1, 0], -(Rat::one() + a)),
            ([1, 0, 1], Rat::one()),
            ([0, 1, 1], a.clone()),
        ],
    )
}

/// The closed form of the cubic through `p0` and the eight points
/// `p_k, p_k'`.
pub fn gamma0_closed(t: &Rat) -> HomPoly {
    let one = Rat::one();
    HomPoly::from_terms(
        3,
        &[
            ([2, 1, 0], &one + t),
            ([2, 0, 1], -one.clone()),
            ([1, 2, 0], -(&one + t)),
            ([0, 2, 1], t.clone()),
            ([1, 0, 2], one.clone()),
            ([0, 1, 2], -t.clone()),
        ],
    )
}

/// `Q = c_alpha * c_beta`.
pub fn q_poly(params: &Params) -> HomPoly {
    conic_c(&params.alpha).mul(&conic_c(&params.beta))
}

fn lin(a: Rat, b: Rat, c: Rat) -> HomPoly {
    HomPoly::linear(a, b, c)
}

fn ri(n: i64) -> Rat {
    Rat::from(n)
}

/// The conic through `p0, ..., p4`.
pub fn conic_through_p0(t: &Rat) -> HomPoly {
    let t2 = t * t;
    HomPoly::from_terms(
        2,
        &[([1, 1, 0], &t2 - Rat::one()), ([1, 0, 1], Rat::one()), ([0, 1, 1], -t2)],
    )
}

/// Three reducible cubics spanning the system `delta_k` (`k` = 1 or 2).
pub fn delta_generators(t: &Rat, k: usize) -> [HomPoly; 3] {
    let one = Rat::one();
    let c0 = conic_through_p0(t);
    match k {
        1 => [
            lin(-(&one + t), ri(0), t.clone())
                .mul(&lin(ri(0), ri(1), ri(-1)))
                .mul(&lin(ri(1), ri(-1), ri(0))),
            lin(t.clone(), ri(-1), &one - t).mul(&HomPoly::var(2)).mul(&HomPoly::var(0)),
            c0.mul(&lin(ri(1), ri(0), ri(-1))),
        ],
        2 => [
            lin(ri(0), -(&one + t), ri(1)).mul(&HomPoly::var(0)).mul(&lin(ri(1), ri(-1), ri(0))),
            lin(ri(1), -t.clone(), ri(0)).mul(&lin(ri(0), ri(1), ri(-1))).mul(&HomPoly::var(2)),
            c0.mul(&HomPoly::var(1)),
        ],
        _ => panic!("delta index must be 1 or 2"),
    }
}

/// Checks the two Jacobian factorizations for the given `t` and conic roots.
pub fn jacobian_identities(t: &Rat, alpha: &Rat, beta: &Rat) -> bool {
    let one = Rat::one();
    let three = HomPoly::constant(ri(3));
    let q = conic_c(alpha).mul(&conic_c(beta));
    let [a, b, c] = delta_generators(t, 1);
    let f = jacobian_det(&a, &b, &c);
    let f_expect = three
        .mul(&lin(-(&one + t), ri(0), t.clone()))
        .mul(&lin(t.clone(), ri(-1), &one - t))
        .mul(&q);
    let [a, b, c] = delta_generators(t, 2);
    let g = jacobian_det(&a, &b, &c);
    let g_expect = three
        .mul(&lin(ri(0), -(&one + t), ri(1)))
        .mul(&lin(ri(1), -t.clone(), ri(0)))
        .mul(&q);
    f == f_expect && g == g_expect
}

pub fn jacobian_certificate(c: &Config) -> bool {
    let p = &c.params;
    jacobian_identities(&p.t, &p.alpha, &p.beta)
}

/// Rational parametrization of `c_which` from its point `p1`: the line
/// `x2 : x3 = lam` through `p1` meets the conic once more.
pub fn point_on_conic(params: &Params, which: Which, lam: &[Rat; 2]) -> Result<ProjPoint, ConfigError> {
    if lam.iter().all(Rat::is_zero) {
        return Err(ConfigError::BadParameter("lam must not be 0:0".into()));
    }
    let a = params.root(which);
    let (x2, x3) = (&lam[0], &lam[1]);
    let k = x3 - (Rat::one() + a) * x2;
    if k.is_zero() {
        return Ok(ProjPoint::ints(1, 0, 0));
    }
    Ok(ProjPoint::new(-(a * x2 * x3), x2 * &k, x3 * &k)?)
}

/// The six base points `p1, ..., p4` in normal form.
pub fn base_points() -> [ProjPoint; 4] {
    [
        ProjPoint::ints(1, 0, 0),
        ProjPoint::ints(0, 1, 0),
        ProjPoint::ints(0, 0, 1),
        ProjPoint::ints(1, 1, 1),
    ]
}

pub fn tangency_lines(p0: &ProjPoint) -> Result<[ProjLine; 4], PlaneError> {
    let pk = base_points();
    Ok([
        line_through(p0, &pk[0])?,
        line_through(p0, &pk[1])?,
        line_through(p0, &pk[2])?,
        line_through(p0, &pk[3])?,
    ])
}

fn simple(p: &ProjPoint) -> Result<BaseCondition, LinsysError> {
    BaseCondition::ordinary(p.clone(), 1)
}

fn through_prime(p0: &ProjPoint, k: usize) -> Result<BaseCondition, ConfigError> {
    let pk = &base_points()[k];
    Ok(BaseCondition::infinitely_near(pk.clone(), 1, line_through(p0, pk)?, 1)?)
}

/// Curves through `p_k` for `k` in `plain` and through `p_k, p_k'` for `k`
/// in `primed` (indices 0-based), optionally through `p0`.
fn base_spec(
    degree: usize,
    p0: &ProjPoint,
    with_p0: bool,
    plain: &[usize],
    primed: &[usize],
) -> Result<LinSysSpec, ConfigError> {
    let pk = base_points();
    let mut c = Vec::new();
    if with_p0 {
        c.push(simple(p0)?);
    }
    for k in 0..4 {
        if primed.contains(&k) {
            c.push(through_prime(p0, k)?);
        } else if plain.contains(&k) {
            c.push(simple(&pk[k])?);
        }
    }
    Ok(LinSysSpec::new(degree, c)?)
}

/// Conics through `p1, p2, p3, p3', p4, p4'`.
pub fn gamma1_spec(p0: &ProjPoint) -> Result<LinSysSpec, ConfigError> {
    base_spec(2, p0, false, &[0, 1], &[2, 3])
}

/// Conics through `p1, p1', p2, p2', p3, p4`.
pub fn gamma2_spec(p0: &ProjPoint) -> Result<LinSysSpec, ConfigError> {
    base_spec(2, p0, false, &[2, 3], &[0, 1])
}

/// Cubics through `p0` and all `p_k, p_k'`.
pub fn gamma0_spec(p0: &ProjPoint) -> Result<LinSysSpec, ConfigError> {
    base_spec(3, p0, true, &[], &[0, 1, 2, 3])
}

/// `delta_1`: cubics through `p0, ..., p4, p2', p4'`; `delta_2`: through
/// `p0, ..., p4, p1', p3'`.
pub fn delta_spec(p0: &ProjPoint, k: usize) -> Result<LinSysSpec, ConfigError> {
    match k {
        1 => base_spec(3, p0, true, &[0, 2], &[1, 3]),
        2 => base_spec(3, p0, true, &[1, 3], &[0, 2]),
        _ => panic!("delta index must be 1 or 2"),
    }
}

/// Members of `delta_k` singular at `p`.
pub fn lambda_spec(p0: &ProjPoint, p: &ProjPoint, k: usize) -> Result<LinSysSpec, ConfigError> {
    Ok(delta_spec(p0, k)?.with(BaseCondition::ordinary(p.clone(), 2)?)?)
}

fn unique_member(spec: &LinSysSpec, name: &str) -> Result<HomPoly, ConfigError> {
    let basis = member_basis(spec).unwrap_or_default();
    if basis.len() != 1 {
        return Err(ConfigError::DegenerateSystem {
            system: name.into(),
            dim: basis.len(),
            expected: "1".into(),
        });
    }
    Ok(basis[0].primitive())
}

/// A member of the family: parameters, the six points and derived curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub params: Params,
    pub which: Which,
    /// Normalized parameter `x2 : x3` of `p` on the conic.
    pub lam: [Rat; 2],
    pub p0: ProjPoint,
    pub pk: [ProjPoint; 4],
    pub p: ProjPoint,
    /// `l_{p0 p_k}` for `k = 1..4`.
    pub lines: [ProjLine; 4],
    pub gamma0: HomPoly,
    pub gamma1: HomPoly,
    pub gamma2: HomPoly,
    pub lambda1: HomPoly,
    pub lambda2: HomPoly,
}

/// Names of the excluded curves through `p`.
pub fn excluded_curves(params: &Params, p: &ProjPoint) -> Vec<String> {
    let p0 = params.p0();
    let mut out = Vec::new();
    if let Ok(lines) = tangency_lines(&p0) {
        for (k, l) in lines.iter().enumerate() {
            if l.contains(p) {
                out.push(format!("l_p0p{}", k + 1));
            }
        }
    }
    if gamma0_closed(&params.t).eval(p).is_zero() {
        out.push("gamma0".into());
    }
    out
}

pub fn mk_config(params: &Params, which: Which, lam: &[Rat; 2]) -> Result<Config, ConfigError> {
    let p = point_on_conic(params, which, lam)?;
    mk_config_at_point(params, which, &p)
}

/// Builds the configuration with a given sixth point, which must avoid the
/// excluded locus and lie on `c_which`.
pub fn mk_config_at_point(params: &Params, which: Which, p: &ProjPoint) -> Result<Config, ConfigError> {
    let bad = excluded_curves(params, p);
    if !bad.is_empty() {
        return Err(ConfigError::ExcludedPoint { point: p.clone(), curves: bad });
    }
    if !conic_c(params.root(which)).eval(p).is_zero() {
        return Err(ConfigError::NotOnConic { point: p.clone(), which });
    }
    let c = p.coords();
    let lam_v = primitive_integer_vector(&[c[1].clone(), c[2].clone()]);
    let lam = [lam_v[0].clone(), lam_v[1].clone()];
    let p0 = params.p0();
    let lines = tangency_lines(&p0)?;
    let gamma0 = unique_member(&gamma0_spec(&p0)?, "gamma0")?;
    let gamma1 = conic_c(&-params.t.clone()).primitive();
    let gamma2 = conic_c(&params.t).primitive();
    let lambda1 = unique_member(&lambda_spec(&p0, p, 1)?, "lambda1")?;
    let lambda2 = unique_member(&lambda_spec(&p0, p, 2)?, "lambda2")?;
    Ok(Config {
        params: params.clone(),
        which,
        lam,
        p0,
        pk: base_points(),
        p: p.clone(),
        lines,
        gamma0,
        gamma1,
        gamma2,
        lambda1,
        lambda2,
    })
}

/// The involution exchanging `p1 <-> p3` and `p2 <-> p4`.
pub fn transform_1324() -> ProjTransform {
    ProjTransform::new(RatMatrix::from_i64(&[&[0, -1, 1], &[0, -1, 0], &[1, -1, 0]]))
        .expect("invertible")
}

/// Image of `c` under the (13)(24) involution: the configuration for
/// `-u` with the transformed sixth point, which stays on the same labelled
/// conic because `alpha(-t) = alpha(t)`.
pub fn apply_1324(c: &Config) -> Result<Config, ConfigError> {
    let params = mk_params(&-c.params.u.clone())?;
    let p = transform_1324().apply_point(&c.p);
    mk_config_at_point(&params, c.which, &p)
}

/// Checks that every stored curve of `c` is carried by the involution to
/// the matching curve of `image`.
pub fn involution_matches(c: &Config, image: &Config) -> bool {
    let t = transform_1324();
    let tp0 = t.apply_point(&c.p0);
    tp0 == image.p0
        && t.apply_poly(&c.gamma0).proportional(&image.gamma0)
        && t.apply_poly(&c.gamma1).proportional(&image.gamma2)
        && t.apply_poly(&c.gamma2).proportional(&image.gamma1)
        && t.apply_poly(&c.lambda1).proportional(&image.lambda1)
        && t.apply_poly(&c.lambda2).proportional(&image.lambda2)
}

#[derive(Serialize)]
struct PointsView<'a> {
    p0: &'a ProjPoint,
    p1: &'a ProjPoint,
    p2: &'a ProjPoint,
    p3: &'a ProjPoint,
    p4: &'a ProjPoint,
    p: &'a ProjPoint,
}

#[derive(Serialize)]
struct CurvesView<'a> {
    gamma0: &'a [Rat],
    gamma1: &'a [Rat],
    gamma2: &'a [Rat],
    lambda1: &'a [Rat],
    lambda2: &'a [Rat],
}

#[derive(Serialize)]
struct ConfigView<'a> {
    u: &'a Rat,
    which: Which,
    lam: &'a [Rat; 2],
    points: PointsView<'a>,
    lines: &'a [ProjLine; 4],
    curves: CurvesView<'a>,
}

impl Serialize for Config {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConfigView {
            u: &self.params.u,
            which: self.which,
            lam: &self.lam,
            points: PointsView {
                p0: &self.p0,
                p1: &self.pk[0],
                p2: &self.pk[1],
                p3: &self.pk[2],
                p4: &self.pk[3],
                p: &self.p,
            },
            lines: &self.lines,
            curves: CurvesView {
                gamma0: self.gamma0.coeffs(),
                gamma1: self.gamma1.coeffs(),
                gamma2: self.gamma2.coeffs(),
                lambda1: self.lambda1.coeffs(),
                lambda2: self.lambda2.coeffs(),
            },
        }
        .serialize(s)
    }
}
