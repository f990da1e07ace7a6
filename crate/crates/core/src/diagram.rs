//! Chebyshev diagrams `C(a, b)`: the plane curves `x = T_a(t)`, `y = T_b(t)`.
//!
//! For `a = 3` the `b − 1` double points lie on the two lines `y = ±√3/2` and
//! have pairwise distinct abscissae `cos(jπ/b)`. Reading the crossings from
//! left to right gives a Conway diagram `C(e_1, …, e_{b−1})`, and every
//! two-bridge knot has such a diagram with `N < b < 3N/2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bridge::{canonicalize, TwoBridgeKnot};
use crate::chebyshev::{cos_pi_ratio, fold_pi_ratio, sin_pi_sign};
use crate::contfrac::{
    crossing_number, eval_projective, is_one_regular, pm_word, regular_expansion,
    CfError, Fraction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("degrees {0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("degrees must be at least 2, got ({0}, {1})")]
    DegreeTooSmall(i64, i64),
    #[error("fraction {0} is not greater than one")]
    NotGreaterThanOne(Fraction),
    #[error("S({0}) is a two-component link and has no C(3, b) diagram")]
    IsLink(Fraction),
    #[error("Conway forms have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("Conway form has crossing number {found}, expected {expected}")]
    CrossingNumberMismatch { expected: u64, found: u64 },
    #[error("invalid Conway form: {0}")]
    InvalidForm(String),
    #[error(transparent)]
    Cf(#[from] CfError),
}

/// Which of the two lines `y = ±√3/2` carries a crossing of `C(3, b)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    Upper,
    Lower,
}

/// A double point of `C(a, b)`.
///
/// The two parameters are `t = cos(m_t π/(ab))` and `s = cos(m_s π/(ab))` with
/// `m_t = kb + ha` and `m_s = |kb − ha|`, for integers `h, k ≥ 1` and
/// `kb + ha < ab`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingPoint {
    pub h: i64,
    pub k: i64,
    pub m_t: i64,
    pub m_s: i64,
    pub t: f64,
    pub s: f64,
    pub x: f64,
    pub y: f64,
    /// Row for `a = 3`; `None` for other degrees.
    pub row: Option<Row>,
    /// 1-based position in the left-to-right order.
    pub index: usize,
    /// Exact sign of `x'(t) y'(t)`.
    pub xy_sign: i8,
}

impl CrossingPoint {
    /// `x'(t) y'(t)` at the parameter `s`: the same product with both
    /// derivatives taken along the other branch.
    pub fn xy_sign_at_s(&self, a: i64, b: i64) -> i8 {
        sin_pi_sign(self.m_s, b) * sin_pi_sign(self.m_s, a)
    }
}

/// All `(a−1)(b−1)/2` double points of `C(a, b)`, sorted by increasing `x`
/// and then increasing `y`. Indices are assigned in that order.
pub fn enumerate_crossings(a: i64, b: i64) -> Result<Vec<CrossingPoint>, DiagramError> {
    if a < 2 || b < 2 {
        return Err(DiagramError::DegreeTooSmall(a, b));
    }
    if a.gcd(&b) != 1 {
        return Err(DiagramError::NotCoprime(a, b));
    }
    let ab = a * b;
    let mut out = Vec::with_capacity(((a - 1) * (b - 1) / 2) as usize);
    for k in 1..a {
        for h in 1..b {
            let m_t = k * b + h * a;
            if m_t >= ab {
                break;
            }
            let m_s = (k * b - h * a).abs();
            let y = cos_pi_ratio(m_t, a);
            let row = (a == 3).then_some(if y > 0.0 { Row::Upper } else { Row::Lower });
            out.push(CrossingPoint {
                h,
                k,
                m_t,
                m_s,
                t: cos_pi_ratio(m_t, ab),
                s: cos_pi_ratio(m_s, ab),
                x: cos_pi_ratio(m_t, b),
                y,
                row,
                index: 0,
                xy_sign: sin_pi_sign(m_t, b) * sin_pi_sign(m_t, a),
            });
        }
    }
    // cos(jπ/b) increases as the folded j decreases
    out.sort_by_key(|c| (-fold_pi_ratio(c.m_t, b), -fold_pi_ratio(c.m_t, a)));
    for (i, c) in out.iter_mut().enumerate() {
        c.index = i + 1;
    }
    Ok(out)
}

/// Conway form `C(e_1, …, e_{b−1})` of a `C(3, b)` diagram, crossings read
/// from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct ConwayForm {
    signs: Vec<i8>,
}

impl ConwayForm {
    /// Any `±1` sequence whose length is not `≡ 2 (mod 3)`.
    pub fn new(signs: Vec<i8>) -> Result<Self, DiagramError> {
        if signs.is_empty() {
            return Err(DiagramError::InvalidForm("empty sign sequence".into()));
        }
        if let Some(i) = signs.iter().position(|&e| e != 1 && e != -1) {
            return Err(DiagramError::InvalidForm(format!("sign {} at position {i}", signs[i])));
        }
        if signs.len() % 3 == 2 {
            return Err(DiagramError::InvalidForm(format!(
                "length {} gives b = {}, a multiple of 3",
                signs.len(),
                signs.len() + 1
            )));
        }
        Ok(ConwayForm { signs })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Degree `b = n + 1` of the Chebyshev diagram.
    pub fn b(&self) -> i64 {
        self.signs.len() as i64 + 1
    }

    /// Whether the signs are a 1-regular sequence (or its negation).
    pub fn is_normal(&self) -> bool {
        is_one_regular(&self.signs)
    }

    pub fn negated(&self) -> ConwayForm {
        ConwayForm { signs: self.signs.iter().map(|e| -e).collect() }
    }

    pub fn reversed(&self) -> ConwayForm {
        ConwayForm { signs: self.signs.iter().rev().copied().collect() }
    }

    /// `(α, β)` with `[e_1, …, e_n] = α/β`, evaluated projectively.
    pub fn value(&self) -> (BigInt, BigInt) {
        let (a, b) = eval_projective(&self.signs);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            (-a, -b)
        } else {
            (a, b)
        }
    }

    /// The Schubert fraction `[e_1, …, e_n]`, or `None` when it is `∞`.
    pub fn fraction(&self) -> Option<Fraction> {
        let (a, b) = self.value();
        Fraction::new(a, b).ok()
    }

    /// Canonical knot drawn by this diagram.
    pub fn knot(&self) -> TwoBridgeKnot {
        let (a, b) = self.value();
        canonicalize(a, b).expect("length is not 2 mod 3, so alpha is odd and nonzero")
    }
}

impl TryFrom<Vec<i8>> for ConwayForm {
    type Error = DiagramError;

    fn try_from(v: Vec<i8>) -> Result<Self, Self::Error> {
        ConwayForm::new(v)
    }
}

impl From<ConwayForm> for Vec<i8> {
    fn from(f: ConwayForm) -> Self {
        f.signs
    }
}

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.signs.iter().map(|e| e.to_string()).collect();
        write!(f, "C({})", body.join(","))
    }
}

/// A minimal Chebyshev diagram for a two-bridge knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalDiagram {
    pub form: ConwayForm,
    pub b: i64,
    /// `true` when the form is the negated expansion of `α/(α−β)` rather
    /// than the expansion of `α/β`. Both draw the same knot.
    pub mirrored: bool,
}

/// Minimal `C(3, b)` diagram of `S(r)`, `r = α/β > 1`.
///
/// Uses the shorter of the 1-regular expansions of `α/β` and `α/(α−β)`;
/// the second one is negated, since `−α/(α−β) ≡ α/β` as Schubert fractions.
pub fn minimal_diagram(r: &Fraction) -> Result<MinimalDiagram, DiagramError> {
    if !r.greater_than_one() {
        return Err(DiagramError::NotGreaterThanOne(r.clone()));
    }
    if r.numer().is_even() {
        return Err(DiagramError::IsLink(r.clone()));
    }
    let alpha = r.numer().clone();
    let gamma = Fraction::new(alpha.clone(), &alpha - r.denom())?;
    let e = regular_expansion(r)?;
    let f = regular_expansion(&gamma)?;
    // the two lengths always differ mod 3
    if e.len() == f.len() {
        return Err(DiagramError::InvalidForm(format!(
            "expansions of {r} and {gamma} have equal length"
        )));
    }
    let (signs, mirrored) = if e.len() < f.len() {
        (e.into_terms(), false)
    } else {
        (f.negated().into_terms(), true)
    };
    let form = ConwayForm::new(signs)?;
    let b = form.b();
    Ok(MinimalDiagram { form, b, mirrored })
}

/// Word criterion for minimality: `deg_P(PGP) ≥ deg_M(PGP) + 3`, which is
/// equivalent to `ℓ(r) < 3N/2 − 1`.
pub fn is_minimal_by_word(r: &Fraction) -> Result<bool, DiagramError> {
    if !r.greater_than_one() {
        return Err(CfError::NotPgpForm(r.clone()).into());
    }
    let w = pm_word(&regular_expansion(r)?)?;
    if w.strip_outer_p().is_none() {
        return Err(CfError::NotPgpForm(r.clone()).into());
    }
    Ok(w.deg_p() >= w.deg_m() + 3)
}

/// Whether two minimal Conway forms of a knot with crossing number `n_cross`
/// agree up to the reversal symmetry `e = (−1)^{n+1} (ε_n, …, ε_1)`.
pub fn conway_reversal_check(
    f1: &ConwayForm,
    f2: &ConwayForm,
    n_cross: u64,
) -> Result<bool, DiagramError> {
    if f1.len() != f2.len() {
        return Err(DiagramError::LengthMismatch(f1.len(), f2.len()));
    }
    for f in [f1, f2] {
        let found: u64 = crossing_number_of(f);
        if found != n_cross {
            return Err(DiagramError::CrossingNumberMismatch { expected: n_cross, found });
        }
    }
    if f1 == f2 {
        return Ok(true);
    }
    let mut rev = f1.reversed();
    if f1.len() % 2 == 0 {
        rev = rev.negated();
    }
    Ok(&rev == f2)
}

fn crossing_number_of(f: &ConwayForm) -> u64 {
    let k = f.knot();
    u64::try_from(k.crossing_number()).unwrap_or(u64::MAX)
}

/// Crossing number of `r > 1` as a machine integer.
pub(crate) fn cn_u64(r: &Fraction) -> Result<u64, CfError> {
    Ok(u64::try_from(crossing_number(r)?).unwrap_or(u64::MAX))
}

/// Default polyline density of [`render_svg`].
pub const DEFAULT_SAMPLES_PER_LOBE: usize = 64;

/// SVG drawing of the diagram `(T_3(t), T_b(t))` realising `form`, with a
/// gap in the strand that passes under at each crossing.
pub fn render_svg(form: &ConwayForm, samples_per_lobe: usize) -> Result<String, DiagramError> {
    use std::f64::consts::PI;
    use std::fmt::Write;

    let b = form.b();
    let g = crate::heights::gauss_sequence(form)
        .map_err(|e| DiagramError::InvalidForm(e.to_string()))?;
    let samples_per_lobe = samples_per_lobe.max(4);
    let step = PI / (b as f64 * samples_per_lobe as f64);
    let half_gap = PI / (12.0 * b as f64);
    // τ = mπ/3b, and the curve is (cos 3τ, cos bτ) for τ ∈ [0, π]
    let mut unders: Vec<f64> = g
        .events
        .iter()
        .filter(|e| e.sign < 0)
        .map(|e| e.m as f64 * PI / (3.0 * b as f64))
        .collect();
    unders.sort_by(f64::total_cmp);

    let mut bounds = vec![0.0];
    for u in &unders {
        bounds.push(u - half_gap);
        bounds.push(u + half_gap);
    }
    bounds.push(PI);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" width="600" height="600">"#
    );
    let _ = writeln!(out, "  <title>{form} on C(3,{b})</title>");
    let _ = writeln!(
        out,
        r#"  <g transform="scale(1,-1)" fill="none" stroke="black" stroke-width="0.012" stroke-linecap="round">"#
    );
    for seg in bounds.chunks(2) {
        let (lo, hi) = (seg[0], seg[1]);
        let n = (((hi - lo) / step).ceil() as usize).max(1);
        let mut pts = String::new();
        for i in 0..=n {
            let tau = lo + (hi - lo) * i as f64 / n as f64;
            let (x, y) = ((3.0 * tau).cos(), (b as f64 * tau).cos());
            let _ = write!(pts, "{x:.5},{y:.5} ");
        }
        let _ = writeln!(out, r#"    <polyline points="{}"/>"#, pts.trim_end());
    }
    let _ = writeln!(out, "  </g>\n</svg>");
    Ok(out)
}
