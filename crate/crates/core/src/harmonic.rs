//! Harmonic knots `H(3, b, c)`: the curves `(T_3(t), T_b(t), T_c(t))`.
//!
//! Every such knot is two-bridge. For `b < c < 2b` with `b + c ≡ 0 (mod 3)`
//! write `c = 2b − 3λ`; the Conway form is `e_k = sign(sin(kλπ/b))` and the
//! crossing number is `b − λ`. Any other admissible pair reduces to exactly
//! one such pair by the mirror moves `H(3,b,c) = mirror H(3,c,b)`,
//! `H(3,b,b+3μ) = mirror H(3,b,|b−3μ|)` and
//! `H(3,b,2b+3μ) = mirror H(3,b,|2b−3μ|)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bridge::{canonicalize_fraction, TwoBridgeKnot};
use crate::chebyshev::sin_pi_sign;
use crate::contfrac::Fraction;
use crate::diagram::ConwayForm;
use crate::serde_int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarmonicError {
    #[error("lambda = {lambda} is not admissible for b = {b} (need gcd 1 and 0 < lambda < b/2)")]
    BadLambda { b: i64, lambda: i64 },
    #[error("b = {0} is divisible by 3")]
    BDivisibleBy3(i64),
    #[error("b = {0} is not of the form 3n + 1")]
    NotOneModThree(i64),
    #[error("degrees ({0}, {1}, {2}) are not pairwise coprime positive integers")]
    NotPairwiseCoprime(i64, i64, i64),
    #[error("only a = 3 is classified, got a = {0}")]
    ADifferentFrom3(i64),
    #[error("H(3, {0}, {1}) reduces to a diagram with at most one crossing: the unknot")]
    Trivial(i64, i64),
    #[error("index {index} is out of range for n = {n}")]
    IndexOutOfRange { index: i64, n: i64 },
    #[error("S({0}) is a two-component link")]
    IsLink(Fraction),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HarmonicSpec {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl HarmonicSpec {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, HarmonicError> {
        if a < 1 || b < 1 || c < 1 || a.gcd(&b) != 1 || a.gcd(&c) != 1 || b.gcd(&c) != 1 {
            return Err(HarmonicError::NotPairwiseCoprime(a, b, c));
        }
        Ok(HarmonicSpec { a, b, c })
    }
}

impl fmt::Display for HarmonicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.a, self.b, self.c)
    }
}

/// `C(e_1, …, e_{b−1})` with `e_k = sign(sin(kλπ/b))`, the diagram of
/// `H(3, b, 2b − 3λ)`.
pub fn harmonic_conway(b: i64, lambda: i64) -> Result<ConwayForm, HarmonicError> {
    if b % 3 == 0 {
        return Err(HarmonicError::BDivisibleBy3(b));
    }
    if lambda <= 0 || 2 * lambda >= b || lambda.gcd(&b) != 1 {
        return Err(HarmonicError::BadLambda { b, lambda });
    }
    let signs = (1..b).map(|k| sin_pi_sign(k * lambda, b)).collect();
    Ok(ConwayForm::new(signs).expect("b is not a multiple of 3"))
}

/// The `c' < c` with `H(3, b, c') = mirror H(3, b, c)` given by
/// `c' ≡ c (mod 2a)` and `c' ≡ −c (mod 2b)`, if one exists.
pub fn mirror_equivalent_c(a: i64, b: i64, c: i64) -> Result<Option<i64>, HarmonicError> {
    HarmonicSpec::new(a, b, c)?;
    // a, b coprime, so x ≡ c (2a), x ≡ −c (2b) is solvable mod lcm(2a, 2b) = 2ab
    let (m1, m2) = (2 * a, 2 * b);
    let g = m1.gcd(&m2);
    let r1 = c.rem_euclid(m1);
    let r2 = (-c).rem_euclid(m2);
    if (r2 - r1) % g != 0 {
        return Ok(None);
    }
    let l = m1 / g * m2;
    let e = (m1 / g).extended_gcd(&(m2 / g));
    let k = ((r2 - r1) / g % (m2 / g) * e.x).rem_euclid(m2 / g);
    let x = (r1 + m1 * k).rem_euclid(l);
    Ok((x > 0 && x < c).then_some(x))
}

/// Result of reducing `H(3, b, c)` to its canonical pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalHarmonic {
    pub b_prime: i64,
    pub c_prime: i64,
    pub lambda: i64,
    /// Parity of the mirror moves: the input is the mirror of `H(3,b',c')`.
    pub mirror: bool,
    /// Schubert fraction of `H(3, b', c')` from its Conway form.
    pub fraction: Fraction,
    pub crossing_number: i64,
    pub form: ConwayForm,
    /// Pairs visited, starting with the input.
    pub chain: Vec<(i64, i64)>,
}

impl CanonicalHarmonic {
    /// The canonical knot of the input triple (mirror applied).
    pub fn knot(&self) -> TwoBridgeKnot {
        let k = canonicalize_fraction(&self.fraction).expect("harmonic fractions are reduced");
        if self.mirror {
            k.mirror_image()
        } else {
            k
        }
    }
}

/// Reduces `H(3, b, c)` to the unique `(b', c')` with `b' < c' < 2b'` and
/// `b' + c' ≡ 0 (mod 3)`.
pub fn classify(spec: HarmonicSpec) -> Result<CanonicalHarmonic, HarmonicError> {
    let HarmonicSpec { a, b, c } = spec;
    if a != 3 {
        return Err(HarmonicError::ADifferentFrom3(a));
    }
    HarmonicSpec::new(a, b, c)?;
    let (mut b, mut c) = (b, c);
    let mut mirror = false;
    let mut chain = vec![(b, c)];
    loop {
        if b.min(c) <= 2 {
            return Err(HarmonicError::Trivial(spec.b, spec.c));
        }
        if c < b {
            std::mem::swap(&mut b, &mut c);
        } else if (c - b) % 3 == 0 {
            c = (2 * b - c).abs();
        } else if c > 2 * b {
            c = (4 * b - c).abs();
        } else {
            break;
        }
        mirror = !mirror;
        chain.push((b, c));
    }
    let lambda = (2 * b - c) / 3;
    debug_assert_eq!(2 * b - 3 * lambda, c);
    let form = harmonic_conway(b, lambda)?;
    let (num, den) = form.value();
    let fraction = Fraction::new(num, den).expect("odd numerator");
    Ok(CanonicalHarmonic {
        b_prime: b,
        c_prime: c,
        lambda,
        mirror,
        fraction,
        crossing_number: b - lambda,
        form,
        chain,
    })
}

/// Necessary condition for `S(α/β)` to be some `H(3, b, c)`: `β² ≡ ±1 (mod α)`.
pub fn is_harmonic_candidate(k: &TwoBridgeKnot) -> Result<bool, HarmonicError> {
    if k.is_link() {
        return Err(HarmonicError::IsLink(k.fraction()));
    }
    let alpha = k.alpha();
    if alpha == &BigInt::from(1) {
        return Ok(true);
    }
    let sq = (k.beta() * k.beta()).mod_floor(alpha);
    Ok(sq == BigInt::from(1) || sq == alpha - 1)
}

/// The three kinds of crossings of `C(3, 3n+1)`: `A_k`, `B_k`, `C_k` sit at
/// `x = cos(jπ/b)` with `j = 3k+1`, `3k+2`, `3k+3`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedFormPoint {
    A,
    B,
    C,
}

impl ClosedFormPoint {
    /// Point and index of the crossing at `x = cos(jπ/b)`, `1 ≤ j ≤ b − 1`.
    pub fn locate(j: i64) -> (ClosedFormPoint, i64) {
        let k = (j - 1) / 3;
        let p = match (j - 1) % 3 {
            0 => ClosedFormPoint::A,
            1 => ClosedFormPoint::B,
            _ => ClosedFormPoint::C,
        };
        (p, k)
    }
}

/// Sign of `D = (z(t) − z(s)) x'(t) y'(t)` at a crossing of
/// `H(3, 3n+1, 2b − 3λ)`, with `θ = λπ/b`:
///
/// ```text
/// D(A_k) ~ (−1)^k     sin((3k+1)θ)
/// D(B_k) ~ (−1)^{k+1} sin((3k+2)θ)
/// D(C_k) ~ (−1)^k     sin((3k+3)θ)
/// ```
pub fn crossing_sign_closed_form(
    b: i64,
    lambda: i64,
    point: ClosedFormPoint,
    k: i64,
) -> Result<i8, HarmonicError> {
    if b < 4 || b % 3 != 1 {
        return Err(HarmonicError::NotOneModThree(b));
    }
    if lambda.gcd(&b) != 1 {
        return Err(HarmonicError::BadLambda { b, lambda });
    }
    let n = (b - 1) / 3;
    if k < 0 || k >= n {
        return Err(HarmonicError::IndexOutOfRange { index: k, n });
    }
    let alt: i8 = if k % 2 == 0 { 1 } else { -1 };
    let (mult, sign) = match point {
        ClosedFormPoint::A => (3 * k + 1, alt),
        ClosedFormPoint::B => (3 * k + 2, -alt),
        ClosedFormPoint::C => (3 * k + 3, alt),
    };
    Ok(sign * sin_pi_sign(mult * lambda, b))
}

/// Closed-form `D` signs for every crossing, indexed by `j − 1` where the
/// crossing sits at `x = cos(jπ/b)`.
pub fn closed_form_d_signs(b: i64, lambda: i64) -> Result<Vec<i8>, HarmonicError> {
    (1..b)
        .map(|j| {
            let (p, k) = ClosedFormPoint::locate(j);
            crossing_sign_closed_form(b, lambda, p, k)
        })
        .collect()
}

/// One line of the harmonic atlas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRecord {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub b_canon: i64,
    pub c_canon: i64,
    pub mirror: bool,
    #[serde(with = "serde_int")]
    pub alpha: BigInt,
    #[serde(with = "serde_int")]
    pub beta: BigInt,
    #[serde(rename = "N")]
    pub n: i64,
    pub amphicheiral: bool,
}

impl AtlasRecord {
    /// `alpha/beta` is the Schubert fraction of `H(3, b_canon, c_canon)`.
    pub fn from_canonical(spec: HarmonicSpec, h: &CanonicalHarmonic) -> Self {
        let k = canonicalize_fraction(&h.fraction).expect("reduced fraction");
        AtlasRecord {
            a: spec.a,
            b: spec.b,
            c: spec.c,
            b_canon: h.b_prime,
            c_canon: h.c_prime,
            mirror: h.mirror,
            alpha: h.fraction.numer().clone(),
            beta: h.fraction.denom().clone(),
            n: h.crossing_number,
            amphicheiral: k.is_amphicheiral(),
        }
    }
}

/// All non-trivial `H(3, b, c)` with `b ≤ b_max`, `c ≤ c_max`, sorted by `(b, c)`.
pub fn atlas(b_max: i64, c_max: i64) -> Vec<AtlasRecord> {
    use rayon::prelude::*;
    let pairs: Vec<(i64, i64)> = (1..=b_max)
        .flat_map(|b| (1..=c_max).map(move |c| (b, c)))
        .filter(|&(b, c)| b % 3 != 0 && c % 3 != 0 && b.gcd(&c) == 1)
        .collect();
    let mut out: Vec<AtlasRecord> = pairs
        .par_iter()
        .filter_map(|&(b, c)| {
            let spec = HarmonicSpec { a: 3, b, c };
            classify(spec).ok().map(|h| AtlasRecord::from_canonical(spec, &h))
        })
        .collect();
    out.sort_by_key(|r| (r.b, r.c));
    out
}
