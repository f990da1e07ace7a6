//! Height polynomials `z = C(t)` turning a Conway diagram `C(3, b)` into a
//! polynomial knot `(T_3(t), T_b(t), C(t))`.
//!
//! The Gauss sequence records, in parameter order, whether each passage
//! through a crossing is over (`+1`) or under (`−1`). Any `C` with the sign
//! of the Gauss sequence at every event realises the diagram; placing one
//! root in each gap where the sequence changes sign gives `b + deg C = 3N`
//! for minimal diagrams.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bridge::canonicalize_fraction;
use crate::contfrac::{CfError, Fraction};
use crate::diagram::{enumerate_crossings, minimal_diagram, ConwayForm, DiagramError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error("empty Gauss sequence")]
    EmptySequence,
    #[error("invalid Conway form: {0}")]
    InvalidForm(String),
    #[error("S({0}) is a two-component link")]
    IsLink(Fraction),
    #[error("Gauss sequence is not odd, so no odd height polynomial follows it")]
    NotOdd,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Cf(#[from] CfError),
}

/// One passage of the curve through a crossing.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussEvent {
    /// The parameter, `cos(m π / 3b)`.
    pub param: f64,
    /// The integer `m` locating the parameter exactly.
    pub m: i64,
    /// `+1` over, `−1` under.
    pub sign: i8,
    /// 1-based Conway index of the crossing.
    pub crossing: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussSequence {
    pub b: i64,
    /// Sorted by strictly increasing parameter.
    pub events: Vec<GaussEvent>,
}

impl GaussSequence {
    pub fn signs(&self) -> Vec<i8> {
        self.events.iter().map(|e| e.sign).collect()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// `g(−t) = −g(t)`: the event at `−t` has the opposite sign.
    pub fn is_odd(&self) -> bool {
        let n = self.events.len();
        (0..n).all(|i| {
            let (e, f) = (&self.events[i], &self.events[n - 1 - i]);
            e.m + f.m == 3 * self.b && e.sign == -f.sign
        })
    }
}

/// Gauss sequence that realises `form` on `C(3, b)`.
///
/// Crossing `i` (counted from the left) is a right twist iff
/// `(−1)^{i+1} e_i > 0`, and a right twist means
/// `(z(t) − z(s)) x'(t) y'(t) > 0`. This fixes which parameter passes over.
pub fn gauss_sequence(form: &ConwayForm) -> Result<GaussSequence, HeightError> {
    let b = form.b();
    if b % 3 == 0 {
        return Err(HeightError::InvalidForm(format!("b = {b} is divisible by 3")));
    }
    let crossings = enumerate_crossings(3, b)?;
    debug_assert_eq!(crossings.len(), form.len());
    let mut events = Vec::with_capacity(2 * crossings.len());
    for (c, &e) in crossings.iter().zip(form.signs()) {
        let parity: i8 = if c.index % 2 == 1 { 1 } else { -1 };
        let dz = e * parity * c.xy_sign;
        events.push(GaussEvent { param: c.t, m: c.m_t, sign: dz, crossing: c.index });
        events.push(GaussEvent { param: c.s, m: c.m_s, sign: -dz, crossing: c.index });
    }
    // cos(mπ/3b) increases as m decreases
    events.sort_by_key(|e| std::cmp::Reverse(e.m));
    Ok(GaussSequence { b, events })
}

pub fn count_sign_changes(g: &GaussSequence) -> usize {
    sign_changes(&g.signs())
}

pub fn sign_changes(signs: &[i8]) -> usize {
    signs.windows(2).filter(|w| w[0] * w[1] < 0).count()
}

/// `C(t) = leading_sign · ∏ (t − r)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightPolynomial {
    pub roots: Vec<f64>,
    pub leading_sign: i8,
}

impl HeightPolynomial {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.roots.iter().fold(self.leading_sign as f64, |acc, r| acc * (t - r))
    }

    /// Root set symmetric about 0, with 0 a root iff the degree is odd.
    /// For a product of linear factors this is exactly `C(−t) = −C(t)`.
    pub fn is_odd(&self) -> bool {
        let n = self.roots.len();
        let symmetric = (0..n).all(|i| self.roots[i] == -self.roots[n - 1 - i]);
        let zero = self.roots.iter().filter(|&&r| r == 0.0).count();
        symmetric && zero == n % 2
    }

    /// Coefficients from degree 0 upward. Only for display and tests;
    /// expanding loses accuracy for large degrees.
    pub fn coefficients(&self) -> Vec<f64> {
        let mut c = vec![self.leading_sign as f64];
        for r in &self.roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i + 1] += ci;
                next[i] -= r * ci;
            }
            c = next;
        }
        c
    }
}

impl fmt::Display for HeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.leading_sign < 0 {
            f.write_str("-")?;
        }
        if self.roots.is_empty() {
            return f.write_str("1");
        }
        for &r in &self.roots {
            if r == 0.0 {
                f.write_str("t")?;
            } else if r > 0.0 {
                write!(f, "(t-{})", sig6(r))?;
            } else {
                write!(f, "(t+{})", sig6(-r))?;
            }
        }
        Ok(())
    }
}

/// Six significant digits, without trailing zeros.
fn sig6(x: f64) -> String {
    let s = format!("{:.5e}", x);
    let v: f64 = s.parse().expect("formatted float parses");
    let mut out = format!("{}", v);
    if out.len() > 12 {
        out = s;
    }
    out
}

/// Height polynomial with one root at the midpoint of every gap where the
/// Gauss sequence changes sign; the leading sign matches the rightmost event.
///
/// With `amphicheiral` set the sequence must be odd, and the result is then
/// an odd polynomial because the parameters are exactly symmetric.
pub fn build_height(g: &GaussSequence, amphicheiral: bool) -> Result<HeightPolynomial, HeightError> {
    let last = g.events.last().ok_or(HeightError::EmptySequence)?;
    if amphicheiral && !g.is_odd() {
        return Err(HeightError::NotOdd);
    }
    let roots = g
        .events
        .windows(2)
        .filter(|w| w[0].sign != w[1].sign)
        .map(|w| (w[0].param + w[1].param) / 2.0)
        .collect();
    let poly = HeightPolynomial { roots, leading_sign: last.sign };
    debug_assert!(sign_certificate(g, &poly));
    Ok(poly)
}

/// `C(t_i) g_i > 0` at every event.
pub fn sign_certificate(g: &GaussSequence, c: &HeightPolynomial) -> bool {
    g.events.iter().all(|e| c.eval(e.param) * e.sign as f64 > 0.0)
}

/// A polynomial parametrization `(T_3(t), T_b(t), C(t))` of a knot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parametrization {
    pub a: i64,
    pub b: i64,
    pub z: HeightPolynomial,
    pub crossing_number: u64,
    pub form: ConwayForm,
    /// The diagram came from the expansion of `α/(α−β)`.
    pub mirrored: bool,
}

impl Parametrization {
    pub fn record(&self) -> ParamRecord {
        ParamRecord {
            a: self.a,
            b: self.b,
            z_roots: self.z.roots.clone(),
            z_leading_sign: self.z.leading_sign,
            n: self.crossing_number,
        }
    }
}

/// JSON form of a parametrization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamRecord {
    pub a: i64,
    pub b: i64,
    pub z_roots: Vec<f64>,
    pub z_leading_sign: i8,
    #[serde(rename = "N")]
    pub n: u64,
}

impl ParamRecord {
    pub fn height(&self) -> HeightPolynomial {
        HeightPolynomial { roots: self.z_roots.clone(), leading_sign: self.z_leading_sign }
    }
}

/// Minimal diagram, then Gauss sequence, then height polynomial.
pub fn parametrization(r: &Fraction) -> Result<Parametrization, HeightError> {
    if r.numer().is_even() {
        return Err(HeightError::IsLink(r.clone()));
    }
    let d = minimal_diagram(r)?;
    let n = crate::diagram::cn_u64(r)?;
    let amphicheiral = canonicalize_fraction(r)
        .map(|k| k.is_amphicheiral())
        .unwrap_or(false);
    let g = gauss_sequence(&d.form)?;
    let z = build_height(&g, amphicheiral)?;
    Ok(Parametrization { a: 3, b: d.b, z, crossing_number: n, form: d.form, mirrored: d.mirrored })
}
