//! Two-bridge knots and links up to isotopy, keyed by their Schubert fraction.
//!
//! `S(α/β)` and `S(α'/β')` are isotopic iff `α = α'` and `β' ≡ β^{±1} (mod α)`;
//! the mirror of `S(α/β)` is `S(α/−β)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contfrac::{crossing_number, Fraction};
use crate::serde_int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("alpha must be positive, got {0}")]
    AlphaNonPositive(BigInt),
    #[error("{alpha} and {beta} are not coprime")]
    NotCoprime { alpha: BigInt, beta: BigInt },
    #[error("{kind} index {index} is out of range")]
    IndexOutOfRange { kind: FamilyKind, index: u64 },
    #[error("S({0}) is a two-component link, not a knot")]
    IsLink(Fraction),
}

/// A two-bridge knot (or two-component link) in canonical form.
///
/// `beta` is the least element of `{β, β⁻¹, −β, −β⁻¹} mod α` and `mirror`
/// records whether that least element came from the negated pair, i.e.
/// whether the knot is the mirror image of `S(alpha/beta)`. When the knot is
/// amphicheiral the flag is always `false`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeKnot {
    alpha: BigInt,
    beta: BigInt,
    mirror: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Equivalence {
    Same,
    Mirror,
    Distinct,
}

/// Reduces `S(α/β)` to its canonical representative.
///
/// `α = 1` is accepted and yields the unknot `S(1/0)`, stored with `β = 0`.
pub fn canonicalize(
    alpha: impl Into<BigInt>,
    beta: impl Into<BigInt>,
) -> Result<TwoBridgeKnot, BridgeError> {
    let (alpha, beta) = (alpha.into(), beta.into());
    if !alpha.is_positive() {
        return Err(BridgeError::AlphaNonPositive(alpha));
    }
    if !alpha.gcd(&beta).is_one() {
        return Err(BridgeError::NotCoprime { alpha, beta });
    }
    if alpha.is_one() {
        return Ok(TwoBridgeKnot { alpha, beta: BigInt::zero(), mirror: false });
    }
    let b = beta.mod_floor(&alpha);
    let inv = mod_inverse(&b, &alpha);
    let direct = (&b).min(&inv).clone();
    let neg_b = &alpha - &b;
    let neg_inv = &alpha - &inv;
    let negated = (&neg_b).min(&neg_inv).clone();
    let (beta, mirror) = if negated < direct { (negated, true) } else { (direct, false) };
    Ok(TwoBridgeKnot { alpha, beta, mirror })
}

/// Canonical knot of a Schubert fraction (sign carried by the denominator).
pub fn canonicalize_fraction(r: &Fraction) -> Result<TwoBridgeKnot, BridgeError> {
    canonicalize(r.numer().clone(), r.denom().clone())
}

/// Inverse of a unit `b` modulo `m > 1`, in `[1, m)`.
pub(crate) fn mod_inverse(b: &BigInt, m: &BigInt) -> BigInt {
    let e = b.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

impl TwoBridgeKnot {
    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    /// Canonical `β ∈ [1, α)` (or `0` for the unknot).
    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    pub fn mirror(&self) -> bool {
        self.mirror
    }

    pub fn is_knot(&self) -> bool {
        self.alpha.is_odd()
    }

    pub fn is_link(&self) -> bool {
        self.alpha.is_even()
    }

    pub fn is_unknot(&self) -> bool {
        self.alpha.is_one()
    }

    /// `β² ≡ −1 (mod α)`.
    pub fn is_amphicheiral(&self) -> bool {
        if self.alpha.is_one() {
            return true;
        }
        let sq = (&self.beta * &self.beta).mod_floor(&self.alpha);
        sq == &self.alpha - 1
    }

    /// A Schubert fraction for this exact knot (mirror included).
    pub fn fraction(&self) -> Fraction {
        if self.alpha.is_one() {
            return Fraction::from_integer(1);
        }
        let beta = if self.mirror { -self.beta.clone() } else { self.beta.clone() };
        Fraction::new(self.alpha.clone(), beta).expect("alpha is positive")
    }

    pub fn mirror_image(&self) -> TwoBridgeKnot {
        if self.is_amphicheiral() {
            return self.clone();
        }
        TwoBridgeKnot { mirror: !self.mirror, ..self.clone() }
    }

    pub fn crossing_number(&self) -> BigUint {
        if self.alpha.is_one() {
            return BigUint::zero();
        }
        let r = Fraction::new(self.alpha.clone(), self.beta.clone()).expect("alpha positive");
        crossing_number(&r).expect("canonical beta is below alpha")
    }

    pub fn record(&self) -> KnotRecord {
        KnotRecord {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            mirror: self.mirror,
            crossing_number: self.crossing_number().into(),
            amphicheiral: self.is_amphicheiral(),
        }
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_link() { "link" } else { "knot" };
        if self.mirror {
            write!(f, "mirror of S({}/{}) [{kind}]", self.alpha, self.beta)
        } else {
            write!(f, "S({}/{}) [{kind}]", self.alpha, self.beta)
        }
    }
}

/// Compares two canonical knots. Mirror images of an amphicheiral knot
/// count as the same knot.
pub fn equivalent(k1: &TwoBridgeKnot, k2: &TwoBridgeKnot) -> Equivalence {
    if k1.alpha != k2.alpha || k1.beta != k2.beta {
        Equivalence::Distinct
    } else if k1.mirror == k2.mirror || k1.is_amphicheiral() {
        Equivalence::Same
    } else {
        Equivalence::Mirror
    }
}

/// JSON form of a knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    #[serde(with = "serde_int")]
    pub alpha: BigInt,
    #[serde(with = "serde_int")]
    pub beta: BigInt,
    pub mirror: bool,
    #[serde(with = "serde_int")]
    pub crossing_number: BigInt,
    pub amphicheiral: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Torus knots `T(2, 2n+1)`.
    Torus,
    /// Twist knots `S(n + 1/2)`.
    Twist,
    /// Stevedore knots `S(2k + 2 + 1/(2k))`.
    Stevedore,
    /// `F_b / F_{b−1}`, the all-ones Conway form of length `b − 1`.
    Fibonacci,
    /// `C(1, 1, −1 ×(n+2), 1, 1)`, with fraction `5F_{n+1}/(F_{n+1}+F_{n−1})`.
    Kn,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Torus => "torus",
            FamilyKind::Twist => "twist",
            FamilyKind::Stevedore => "stevedore",
            FamilyKind::Fibonacci => "fibonacci",
            FamilyKind::Kn => "kn",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "torus" => Ok(FamilyKind::Torus),
            "twist" => Ok(FamilyKind::Twist),
            "stevedore" => Ok(FamilyKind::Stevedore),
            "fibonacci" => Ok(FamilyKind::Fibonacci),
            "kn" => Ok(FamilyKind::Kn),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub index: u64,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, index: u64) -> Self {
        FamilySpec { kind, index }
    }
}

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Schubert fraction of a named family member.
///
/// Index ranges: torus, twist and stevedore need `n ≥ 1`, fibonacci needs
/// `b ≥ 3` (so the fraction exceeds one) and `K_n` needs `n ≥ 2`.
pub fn family_fraction(f: FamilySpec) -> Result<Fraction, BridgeError> {
    let n = f.index;
    let min = match f.kind {
        FamilyKind::Torus | FamilyKind::Twist | FamilyKind::Stevedore => 1,
        FamilyKind::Fibonacci => 3,
        FamilyKind::Kn => 2,
    };
    if n < min || n > 100_000 {
        return Err(BridgeError::IndexOutOfRange { kind: f.kind, index: n });
    }
    let big = BigInt::from(n);
    let r = match f.kind {
        FamilyKind::Torus => Fraction::new(2 * &big + 1, 1),
        FamilyKind::Twist => Fraction::new(2 * &big + 1, 2),
        FamilyKind::Stevedore => {
            let odd = 2 * &big + 1;
            Fraction::new(&odd * &odd, 2 * &big)
        }
        FamilyKind::Fibonacci => Fraction::new(fibonacci(n), fibonacci(n - 1)),
        FamilyKind::Kn => {
            let f1 = fibonacci(n + 1);
            let beta = &f1 + fibonacci(n - 1);
            Fraction::new(5 * f1, beta)
        }
    };
    Ok(r.expect("family denominators are nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: i64, b: i64) -> TwoBridgeKnot {
        canonicalize(a, b).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(k(9, 7), k(9, 4));
        assert_eq!(equivalent(&k(9, 2), &k(9, 7)), Equivalence::Mirror);
        let t = k(3, 1);
        assert_eq!(t.beta(), &BigInt::from(1));
        assert!(!t.mirror());
        assert_eq!(k(3, 2), t.mirror_image());
        assert_eq!(k(9, 2).beta(), &BigInt::from(2));
        assert!(k(9, 7).mirror());
        assert_eq!(k(7, -6), k(7, 1));
        assert!(k(7, 6).mirror());
    }

    #[test]
    fn canonical_errors() {
        assert!(matches!(canonicalize(0, 1), Err(BridgeError::AlphaNonPositive(_))));
        assert!(matches!(canonicalize(9, 3), Err(BridgeError::NotCoprime { .. })));
        assert!(matches!(canonicalize(9, 0), Err(BridgeError::NotCoprime { .. })));
        assert!(k(1, 0).is_unknot());
    }

    #[test]
    fn equivalence_examples() {
        assert_eq!(equivalent(&k(5, 3), &k(5, 2)), Equivalence::Same);
        assert_eq!(equivalent(&k(7, 6), &k(9, 7)), Equivalence::Distinct);
        assert_eq!(equivalent(&k(9, 7), &k(9, 4)), Equivalence::Same);
        assert!(k(5, 2).is_amphicheiral());
        assert!(!k(5, 2).mirror());
    }

    #[test]
    fn fraction_round_trip() {
        for (a, b) in [(9, 7), (9, 2), (5, 3), (7, 6), (13, 5), (8, 3)] {
            let kn = k(a, b);
            assert_eq!(canonicalize_fraction(&kn.fraction()).unwrap(), kn);
        }
    }

    #[test]
    fn family_examples() {
        let f = |kind, n| family_fraction(FamilySpec::new(kind, n)).unwrap().to_string();
        assert_eq!(f(FamilyKind::Twist, 3), "7/2");
        assert_eq!(f(FamilyKind::Stevedore, 1), "9/2");
        assert_eq!(f(FamilyKind::Fibonacci, 5), "5/3");
        assert_eq!(f(FamilyKind::Torus, 3), "7/1");
        assert_eq!(f(FamilyKind::Kn, 4), "25/7");
        assert_eq!(f(FamilyKind::Kn, 2), "10/3");
        assert!(family_fraction(FamilySpec::new(FamilyKind::Kn, 1)).is_err());
        assert!(family_fraction(FamilySpec::new(FamilyKind::Torus, 0)).is_err());
    }

    #[test]
    fn record_fields() {
        let r = k(9, 7).record();
        assert_eq!(r.crossing_number, BigInt::from(6));
        assert!(r.mirror && !r.amphicheiral);
        assert_eq!(fibonacci(10), BigInt::from(55));
    }
}
