//! Independent measurement of a space curve `(T_a(t), T_b(t), z(t))`.
//!
//! Double points come from their closed-form parameters, never from a
//! geometric search. At each one the sign of `D = (z(t) − z(s)) x'(t) y'(t)`
//! says whether the crossing is a right twist, and for `a = 3` the signs
//! `(−1)^{i+1} sign(D_i)` read left to right are the Conway form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bridge::{canonicalize_fraction, equivalent, Equivalence, KnotRecord, TwoBridgeKnot};
use crate::chebyshev::{chebyshev_t, cos_diff_sign};
use crate::contfrac::Fraction;
use crate::diagram::{enumerate_crossings, ConwayForm, DiagramError};
use crate::heights::{HeightPolynomial, ParamRecord};

pub const DEFAULT_SEPARATION_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("crossing (h={h}, k={k}) has |z(t) - z(s)| = {gap:e}, below the floor {floor:e}")]
    AmbiguousCrossing { h: i64, k: i64, gap: f64, floor: f64 },
    #[error("measured diagram on C({0}, b) is not a Conway normal form; only a = 3 is supported")]
    NotTwoBridge(i64),
    #[error("degree mismatch: parametrization has a = {0}")]
    BadDegree(i64),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Height function of the curve.
#[derive(Clone, Debug, PartialEq)]
pub enum Height {
    /// `z = T_c(t)`; signs are decided exactly.
    Chebyshev(i64),
    Polynomial(HeightPolynomial),
}

impl Height {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Height::Chebyshev(c) => chebyshev_t(*c as u32, t),
            Height::Polynomial(p) => p.eval(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasuredCrossing {
    pub h: i64,
    pub k: i64,
    pub index: usize,
    pub t: f64,
    pub s: f64,
    pub x: f64,
    pub y: f64,
    /// `z(t) − z(s)`.
    pub dz: f64,
    /// Sign of `z(t) − z(s)`, exact for Chebyshev heights.
    pub dz_sign: i8,
    #[serde(rename = "D_sign")]
    pub d_sign: i8,
    /// `(−1)^{index+1} sign(D)` for `a = 3`.
    pub conway_sign: Option<i8>,
}

impl MeasuredCrossing {
    pub fn right_twist(&self) -> bool {
        self.d_sign > 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub a: i64,
    pub b: i64,
    /// In the left-to-right order of the diagram.
    pub crossings: Vec<MeasuredCrossing>,
    /// Smallest `|z(t) − z(s)|` over all crossings.
    pub min_separation: f64,
}

impl CurveSample {
    pub fn d_signs(&self) -> Vec<i8> {
        self.crossings.iter().map(|c| c.d_sign).collect()
    }

    /// The measured Conway form (only for `a = 3`).
    pub fn conway_form(&self) -> Result<ConwayForm, OracleError> {
        if self.a != 3 {
            return Err(OracleError::NotTwoBridge(self.a));
        }
        let signs = self.crossings.iter().map(|c| c.conway_sign.expect("a = 3")).collect();
        Ok(ConwayForm::new(signs)?)
    }
}

/// Measures every crossing of `(T_a, T_b, z)`.
pub fn measure_crossings(
    a: i64,
    b: i64,
    z: &Height,
    floor: f64,
) -> Result<CurveSample, OracleError> {
    let ab = a * b;
    let mut crossings = Vec::new();
    let mut min_separation = f64::INFINITY;
    for c in enumerate_crossings(a, b)? {
        let dz = z.eval(c.t) - z.eval(c.s);
        let dz_sign = match z {
            Height::Chebyshev(deg) => cos_diff_sign(deg * c.m_t, deg * c.m_s, ab),
            Height::Polynomial(_) => float_sign(dz),
        };
        let gap = dz.abs();
        if dz_sign == 0 || gap < floor {
            return Err(OracleError::AmbiguousCrossing { h: c.h, k: c.k, gap, floor });
        }
        min_separation = min_separation.min(gap);
        let d_sign = dz_sign * c.xy_sign;
        let conway_sign = (a == 3).then(|| if c.index % 2 == 1 { d_sign } else { -d_sign });
        crossings.push(MeasuredCrossing {
            h: c.h,
            k: c.k,
            index: c.index,
            t: c.t,
            s: c.s,
            x: c.x,
            y: c.y,
            dz,
            dz_sign,
            d_sign,
            conway_sign,
        });
    }
    Ok(CurveSample { a, b, crossings, min_separation })
}

fn float_sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Canonical knot of a measured `C(3, b)` diagram.
pub fn recover_knot(sample: &CurveSample) -> Result<TwoBridgeKnot, OracleError> {
    Ok(sample.conway_form()?.knot())
}

/// Outcome of checking a parametrization against its intended knot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub expected: KnotRecord,
    pub measured: KnotRecord,
    pub equivalence: Equivalence,
    pub measured_form: ConwayForm,
    pub crossings: Vec<MeasuredCrossing>,
    pub min_separation: f64,
    pub verdict: bool,
}

/// Measures `(T_3, T_b, C)` and compares the recovered knot with `S(r)`.
/// The verdict requires the same knot, chirality included.
pub fn verify_parametrization(
    r: &Fraction,
    p: &ParamRecord,
    floor: f64,
) -> Result<VerifyReport, OracleError> {
    if p.a != 3 {
        return Err(OracleError::BadDegree(p.a));
    }
    let expected = canonicalize_fraction(r)
        .map_err(|e| OracleError::Diagram(DiagramError::InvalidForm(e.to_string())))?;
    let sample = measure_crossings(3, p.b, &Height::Polynomial(p.height()), floor)?;
    let measured_form = sample.conway_form()?;
    let measured = measured_form.knot();
    let equivalence = equivalent(&expected, &measured);
    Ok(VerifyReport {
        expected: expected.record(),
        measured: measured.record(),
        equivalence,
        measured_form,
        min_separation: sample.min_separation,
        crossings: sample.crossings,
        verdict: equivalence == Equivalence::Same,
    })
}
