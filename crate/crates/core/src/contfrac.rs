//! Exact continued fractions: classical expansions, 1-regular `[±1, …, ±1]`
//! expansions, and the free monoid generated by the Möbius maps
//!
//! ```text
//! P : x ↦ 1 + 1/x        M : x ↦ 1/(1 + x)
//! ```
//!
//! together with its 2×2 integer matrix representation. A rational `r > 0`
//! is written `r = G(∞)` for a unique word `G` ending in `P`, and the word is
//! read off the 1-regular expansion by replacing every sign-changing couple
//! `(e_i, e_{i+1})` by `M` and every remaining term by `P`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("quotient {index} is zero")]
    ZeroQuotient { index: usize },
    #[error("continued fraction tail starting at quotient {index} evaluates to zero")]
    DivisionByZeroTail { index: usize },
    #[error("empty continued fraction")]
    Empty,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("fraction {0} is not greater than one")]
    NotGreaterThanOne(Fraction),
    #[error("fraction {0} is not positive")]
    NonPositiveInput(Fraction),
    #[error("term {index} is not +1 or -1")]
    NotUnit { index: usize },
    #[error("sequence is not 1-regular")]
    NotOneRegular,
    #[error("the first two terms must both be +1")]
    WrongLeadingSigns,
    #[error("fraction {0} is not of the form PGP(oo)")]
    NotPgpForm(Fraction),
    #[error("cannot parse fraction from {0:?}")]
    Parse(String),
}

/// A reduced rational `num/den`.
///
/// The sign is always carried by the denominator, so `-7/6` is stored as
/// `7/-6`: the Schubert fraction of the mirror of `S(7/6)`. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, CfError> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(CfError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Fraction { num, den: BigInt::one() });
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        if num.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Fraction { num, den })
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction::new(n, 1).expect("denominator is one")
    }

    /// Numerator, always `>= 0`.
    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    /// Denominator, carrying the sign of the fraction.
    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive() && self.den.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Compares the fraction with 1.
    pub fn cmp_one(&self) -> Ordering {
        if self.den.is_negative() {
            Ordering::Less
        } else {
            self.num.cmp(&self.den)
        }
    }

    pub fn greater_than_one(&self) -> bool {
        self.cmp_one() == Ordering::Greater
    }

    pub fn abs(&self) -> Fraction {
        Fraction { num: self.num.clone(), den: self.den.abs() }
    }

    /// `-r`, the Schubert fraction of the mirror image.
    pub fn negated(&self) -> Fraction {
        if self.is_zero() {
            return self.clone();
        }
        Fraction { num: self.num.clone(), den: -&self.den }
    }

    /// Representative `α/β'` with `0 < β' < α` and `β' ≡ β (mod α)`, which
    /// names the same two-bridge link as `α/β`. `None` when `α <= 1`.
    pub fn schubert_representative(&self) -> Option<Fraction> {
        if self.num <= BigInt::one() {
            return None;
        }
        let b = self.den.mod_floor(&self.num);
        Some(Fraction { num: self.num.clone(), den: b })
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl serde::Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Fraction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for Fraction {
    type Err = CfError;

    /// Accepts `"a/b"` or `"a"`; a minus sign on either part negates the value.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CfError::Parse(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        Fraction::new(n, d)
    }
}

/// Classical expansion `[q_1, …, q_n]` with positive quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCF(Vec<BigUint>);

impl ClassicalCF {
    pub fn quotients(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self) -> Fraction {
        let q: Vec<BigInt> = self.0.iter().map(|q| BigInt::from(q.clone())).collect();
        eval_cf(&q).expect("positive quotients never produce a zero tail")
    }
}

/// A 1-regular continued fraction `[e_1, …, e_n]` with `e_i = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularCF(Vec<i8>);

impl RegularCF {
    /// Validates that every term is `±1` and the sequence is 1-regular.
    pub fn new(terms: Vec<i8>) -> Result<Self, CfError> {
        if terms.is_empty() {
            return Err(CfError::Empty);
        }
        if let Some(index) = terms.iter().position(|&e| e != 1 && e != -1) {
            return Err(CfError::NotUnit { index });
        }
        if !is_one_regular(&terms) {
            return Err(CfError::NotOneRegular);
        }
        Ok(RegularCF(terms))
    }

    pub fn terms(&self) -> &[i8] {
        &self.0
    }

    /// The length `ℓ`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign_changes(&self) -> usize {
        sign_changes(&self.0)
    }

    pub fn negated(&self) -> RegularCF {
        RegularCF(self.0.iter().map(|e| -e).collect())
    }

    pub fn value(&self) -> Fraction {
        eval_signs(&self.0).expect("1-regular sequences have no zero tail")
    }

    pub fn into_terms(self) -> Vec<i8> {
        self.0
    }
}

impl fmt::Display for RegularCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signs(f, &self.0)
    }
}

pub(crate) fn write_signs(f: &mut fmt::Formatter<'_>, signs: &[i8]) -> fmt::Result {
    f.write_str("[")?;
    for (i, e) in signs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str("]")
}

/// Nonzero terms, equal final signs, and no two consecutive sign changes.
pub fn is_one_regular<T>(terms: &[T]) -> bool
where
    T: Copy + Into<i64>,
{
    let t: Vec<i64> = terms.iter().map(|&x| x.into()).collect();
    if t.is_empty() || t.contains(&0) {
        return false;
    }
    let n = t.len();
    if n >= 2 && t[n - 2].signum() != t[n - 1].signum() {
        return false;
    }
    t.windows(3)
        .all(|w| !(w[0].signum() != w[1].signum() && w[1].signum() != w[2].signum()))
}

pub(crate) fn sign_changes(terms: &[i8]) -> usize {
    terms.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Evaluates `[q_1, …, q_n] = q_1 + 1/(q_2 + 1/(… + 1/q_n))` exactly.
///
/// Evaluation runs right to left; a tail that is exactly zero where it would
/// be inverted is rejected rather than treated as infinity.
pub fn eval_cf(quotients: &[BigInt]) -> Result<Fraction, CfError> {
    let Some(last) = quotients.last() else {
        return Err(CfError::Empty);
    };
    if let Some(index) = quotients.iter().position(|q| q.is_zero()) {
        return Err(CfError::ZeroQuotient { index });
    }
    // tail = p / q
    let mut p = last.clone();
    let mut q = BigInt::one();
    for (index, qi) in quotients.iter().enumerate().rev().skip(1) {
        if p.is_zero() {
            return Err(CfError::DivisionByZeroTail { index: index + 1 });
        }
        let next = qi * &p + &q;
        q = std::mem::replace(&mut p, next);
    }
    Fraction::new(p, q)
}

/// [`eval_cf`] for a sequence of small signed quotients.
pub fn eval_signs(terms: &[i8]) -> Result<Fraction, CfError> {
    let q: Vec<BigInt> = terms.iter().map(|&e| BigInt::from(e)).collect();
    eval_cf(&q)
}

/// Projective evaluation of `[q_1, …, q_n]` as the first column of
/// `∏ [[q_i, 1], [1, 0]]`. Zero tails are allowed here (they pass through
/// `∞`), which is what a Conway diagram with arbitrary signs requires.
/// Returns `(α, β)` with `gcd = 1`; `β = 0` means the value is `∞`.
pub fn eval_projective(terms: &[i8]) -> (BigInt, BigInt) {
    let mut m = Mat2::identity();
    for &e in terms {
        m = m.mul(&Mat2::new(e, 1, 1, 0));
    }
    (m.a, m.c)
}

/// Classical expansion of `r > 1` with positive quotients, normalised so
/// the last quotient is at least 2 whenever there is more than one.
pub fn classical_expansion(r: &Fraction) -> Result<ClassicalCF, CfError> {
    if !r.greater_than_one() {
        return Err(CfError::NotGreaterThanOne(r.clone()));
    }
    let mut a = r.num.magnitude().clone();
    let mut b = r.den.magnitude().clone();
    let mut out = Vec::new();
    while !b.is_zero() {
        let (q, rem) = a.div_rem(&b);
        out.push(q);
        a = std::mem::replace(&mut b, rem);
    }
    // Euclid on coprime inputs ends with a quotient >= 2 unless n = 1.
    debug_assert!(out.len() == 1 || out.last().is_some_and(|q| *q >= BigUint::from(2u8)));
    Ok(ClassicalCF(out))
}

/// Crossing number `q_1 + … + q_n` of `r > 1`.
pub fn crossing_number(r: &Fraction) -> Result<BigUint, CfError> {
    Ok(classical_expansion(r)?.0.iter().sum())
}

/// The unique 1-regular expansion of `r > 0`, built by height descent:
/// `α/β = P(β/(α-β))` when `α > β`, `α/β = M((β-α)/α)` when `β > α`.
pub fn regular_expansion(r: &Fraction) -> Result<RegularCF, CfError> {
    if !r.is_positive() {
        return Err(CfError::NonPositiveInput(r.clone()));
    }
    let word = pm_word_of(r);
    Ok(word.to_regular())
}

/// 1-regular expansion of any nonzero rational. For `r < 0` this is the
/// negation of the expansion of `|r|`; the flag reports that case.
pub fn signed_regular_expansion(r: &Fraction) -> Result<(RegularCF, bool), CfError> {
    if r.is_zero() {
        return Err(CfError::NonPositiveInput(r.clone()));
    }
    if r.is_positive() {
        Ok((regular_expansion(r)?, false))
    } else {
        Ok((regular_expansion(&r.abs())?.negated(), true))
    }
}

fn pm_word_of(r: &Fraction) -> PMWord {
    let mut a = r.num.magnitude().clone();
    let mut b = r.den.magnitude().clone();
    let mut letters = Vec::new();
    loop {
        match a.cmp(&b) {
            Ordering::Equal => {
                letters.push(Letter::P);
                break;
            }
            Ordering::Greater => {
                letters.push(Letter::P);
                a -= &b;
                std::mem::swap(&mut a, &mut b);
            }
            Ordering::Less => {
                letters.push(Letter::M);
                b -= &a;
                std::mem::swap(&mut a, &mut b);
            }
        }
    }
    PMWord { letters }
}

/// Crossing number from a 1-regular expansion with `e_1 = e_2 = 1`:
/// `Σ|a_i| − #{i : a_i a_{i+1} < 0}`.
pub fn cn_from_regular(cf: &RegularCF) -> Result<usize, CfError> {
    let t = cf.terms();
    if t.len() < 2 || t[0] != 1 || t[1] != 1 {
        return Err(CfError::WrongLeadingSigns);
    }
    Ok(t.len() - cf.sign_changes())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    P,
    M,
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::P => Mat2::p(),
            Letter::M => Mat2::m(),
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::P => Letter::M,
            Letter::M => Letter::P,
        }
    }
}

/// A word in the free monoid `⟨P, M⟩`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PMWord {
    letters: Vec<Letter>,
}

impl PMWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        PMWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn deg_p(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::P).count()
    }

    pub fn deg_m(&self) -> usize {
        self.letters.len() - self.deg_p()
    }

    /// Swaps `P` and `M` (the homomorphism `G ↦ Ĝ`).
    pub fn hat(&self) -> PMWord {
        PMWord { letters: self.letters.iter().map(|l| l.swapped()).collect() }
    }

    /// Reverses the word (the anti-homomorphism `G ↦ Ḡ`).
    pub fn bar(&self) -> PMWord {
        PMWord { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    pub fn concat(&self, other: &PMWord) -> PMWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PMWord { letters }
    }

    /// The inner word `G` of `PGP`, if the word has that shape.
    pub fn strip_outer_p(&self) -> Option<PMWord> {
        match self.letters.as_slice() {
            [Letter::P, inner @ .., Letter::P] => Some(PMWord { letters: inner.to_vec() }),
            _ => None,
        }
    }

    /// Expands back to `±1` terms: `P` emits `s`, `M` emits `s, -s` and flips `s`.
    pub fn to_regular(&self) -> RegularCF {
        let mut s: i8 = 1;
        let mut out = Vec::with_capacity(self.letters.len() * 2);
        for l in &self.letters {
            match l {
                Letter::P => out.push(s),
                Letter::M => {
                    out.push(s);
                    out.push(-s);
                    s = -s;
                }
            }
        }
        RegularCF(out)
    }

    /// `G(∞)`, i.e. the ratio of the first column of the matrix product.
    pub fn value(&self) -> Result<Fraction, CfError> {
        let (a, b) = word_to_matrix(self).apply_to_infinity();
        Fraction::new(a, b)
    }
}

impl fmt::Display for PMWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&x| x == l).count();
            let c = if l == Letter::P { 'P' } else { 'M' };
            if run == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Word of a 1-regular expansion (sign-changing couples become `M`).
pub fn pm_word(cf: &RegularCF) -> Result<PMWord, CfError> {
    let t = cf.terms();
    if !is_one_regular(t) {
        return Err(CfError::NotOneRegular);
    }
    // 1-regularity makes the greedy pairing unambiguous.
    let mut letters = Vec::with_capacity(t.len());
    let mut i = 0;
    while i < t.len() {
        if i + 1 < t.len() && t[i] != t[i + 1] {
            letters.push(Letter::M);
            i += 2;
        } else {
            letters.push(Letter::P);
            i += 1;
        }
    }
    Ok(PMWord { letters })
}

/// Row-major 2×2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn p() -> Self {
        Mat2::new(1, 1, 1, 0)
    }

    pub fn m() -> Self {
        Mat2::new(0, 1, 1, 1)
    }

    pub fn j() -> Self {
        Mat2::new(0, 1, 1, 0)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 { a: self.a.clone(), b: self.c.clone(), c: self.b.clone(), d: self.d.clone() }
    }

    /// The matrix applied to the column `(1, 0)`.
    pub fn apply_to_infinity(&self) -> (BigInt, BigInt) {
        (self.a.clone(), self.c.clone())
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

pub fn word_to_matrix(w: &PMWord) -> Mat2 {
    w.letters.iter().fold(Mat2::identity(), |acc, l| acc.mul(&l.matrix()))
}

/// The fractions attached to `α/β = PGP(∞)` by conjugating `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateFractions {
    /// `β/α = MĜP(∞)`
    pub beta_over_alpha: Fraction,
    /// `α/(α−β) = PĜP(∞)`
    pub alpha_over_alpha_minus_beta: Fraction,
    /// `α/β' = PḠP(∞)` with `0 < β' < α`, `ββ' ≡ (−1)^{N−1} (mod α)`
    pub alpha_over_beta_prime: Fraction,
    pub word: PMWord,
    pub beta_over_alpha_word: PMWord,
    pub alpha_over_alpha_minus_beta_word: PMWord,
    pub alpha_over_beta_prime_word: PMWord,
}

/// Computes the three conjugate fractions of `r = PGP(∞)` from the words
/// `MĜP`, `PĜP` and `PḠP`.
pub fn conjugate_fractions(r: &Fraction) -> Result<ConjugateFractions, CfError> {
    if !r.greater_than_one() {
        return Err(CfError::NotPgpForm(r.clone()));
    }
    let word = pm_word_of(r);
    let g = word.strip_outer_p().ok_or_else(|| CfError::NotPgpForm(r.clone()))?;
    let p = PMWord::new(vec![Letter::P]);
    let m = PMWord::new(vec![Letter::M]);
    let beta_over_alpha_word = m.concat(&g.hat()).concat(&p);
    let alpha_over_alpha_minus_beta_word = p.concat(&g.hat()).concat(&p);
    let alpha_over_beta_prime_word = p.concat(&g.bar()).concat(&p);
    Ok(ConjugateFractions {
        beta_over_alpha: beta_over_alpha_word.value()?,
        alpha_over_alpha_minus_beta: alpha_over_alpha_minus_beta_word.value()?,
        alpha_over_beta_prime: alpha_over_beta_prime_word.value()?,
        word,
        beta_over_alpha_word,
        alpha_over_alpha_minus_beta_word,
        alpha_over_beta_prime_word,
    })
}

/// `ℓ mod 3` of a 1-regular expansion. The residue fixes the parities of
/// `α/β`: 2 iff `α` even, 0 iff `β` even, 1 iff both odd.
pub fn parity_class(cf: &RegularCF) -> Result<u8, CfError> {
    if !is_one_regular(cf.terms()) {
        return Err(CfError::NotOneRegular);
    }
    let residue = (cf.len() % 3) as u8;
    debug_assert_eq!(parities_for_residue(residue), {
        let v = cf.value();
        (v.numer().is_even(), v.denom().is_even())
    });
    Ok(residue)
}

/// `(α even, β even)` forced by a length residue.
pub fn parities_for_residue(residue: u8) -> (bool, bool) {
    match residue % 3 {
        2 => (true, false),
        0 => (false, true),
        _ => (false, false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromyReport {
    pub g_palindromic: bool,
    /// `β² mod α`, in `[0, α)`.
    pub beta_sq_mod_alpha: BigInt,
    pub amphicheiral: bool,
    pub two_component: bool,
}

/// Palindromy and amphicheirality data of `α/β` with `α > β > 0`.
pub fn palindromy_report(r: &Fraction) -> Result<PalindromyReport, CfError> {
    if !r.greater_than_one() {
        return Err(CfError::NotGreaterThanOne(r.clone()));
    }
    let word = pm_word_of(r);
    let g = word.strip_outer_p().ok_or_else(|| CfError::NotPgpForm(r.clone()))?;
    let alpha = r.numer();
    let sq = (r.denom() * r.denom()).mod_floor(alpha);
    let minus_one = (alpha - BigInt::one()).mod_floor(alpha);
    Ok(PalindromyReport {
        g_palindromic: g.is_palindrome(),
        amphicheiral: sq == minus_one,
        beta_sq_mod_alpha: sq,
        two_component: alpha.is_even(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(a: i64, b: i64) -> Fraction {
        Fraction::new(a, b).unwrap()
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fraction_normalises_sign_into_denominator() {
        let f = fr(-14, 12);
        assert_eq!(f.to_string(), "7/-6");
        assert_eq!("-7/6".parse::<Fraction>().unwrap(), f);
        assert_eq!("7/-6".parse::<Fraction>().unwrap(), f);
        assert_eq!(fr(0, -5).to_string(), "0/1");
        assert_eq!(Fraction::new(1, 0), Err(CfError::ZeroDenominator));
        assert!("x/2".parse::<Fraction>().is_err());
        assert_eq!("9".parse::<Fraction>().unwrap(), fr(9, 1));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_cf(&bi(&[1, 3, 2])).unwrap(), fr(9, 7));
        assert_eq!(eval_cf(&bi(&[1])).unwrap(), fr(1, 1));
        assert_eq!(eval_cf(&bi(&[1, 1, -1, -1, -1, 1, 1, -1, -1])).unwrap(), fr(9, 2));
        assert_eq!(eval_cf(&bi(&[4, 2])).unwrap(), fr(9, 2));
    }

    #[test]
    fn eval_rejects_zero_quotients_and_zero_tails() {
        assert_eq!(eval_cf(&bi(&[1, 0, 2])), Err(CfError::ZeroQuotient { index: 1 }));
        // [1, -1, 1, x]: the tail [1, -1] is zero
        assert!(matches!(
            eval_cf(&bi(&[2, 1, -1])),
            Err(CfError::DivisionByZeroTail { .. })
        ));
        assert_eq!(eval_cf(&[]), Err(CfError::Empty));
        // a zero final value is fine
        assert_eq!(eval_cf(&bi(&[1, -1])).unwrap(), fr(0, 1));
    }

    #[test]
    fn projective_eval_passes_through_infinity() {
        // [1, -1, 1, x] = -x
        let (a, b) = eval_projective(&[1, -1, 1, 1, 1]);
        assert_eq!(Fraction::new(a, b).unwrap(), fr(-2, 1));
    }

    #[test]
    fn classical_examples() {
        let q = |a, b| {
            classical_expansion(&fr(a, b))
                .unwrap()
                .quotients()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(q(9, 7), "1,3,2");
        assert_eq!(q(9, 2), "4,2");
        assert_eq!(q(5, 3), "1,1,2");
        assert!(matches!(classical_expansion(&fr(1, 1)), Err(CfError::NotGreaterThanOne(_))));
        assert!(classical_expansion(&fr(3, -2)).is_err());
    }

    #[test]
    fn crossing_number_examples() {
        let cn = |a, b| crossing_number(&fr(a, b)).unwrap();
        assert_eq!(cn(9, 7), BigUint::from(6u8));
        assert_eq!(cn(2, 1), BigUint::from(2u8));
        assert_eq!(cn(25, 11), BigUint::from(8u8));
    }

    #[test]
    fn regular_examples() {
        assert_eq!(regular_expansion(&fr(9, 7)).unwrap().terms(), &[1, 1, 1, -1, -1, -1, -1]);
        assert_eq!(regular_expansion(&fr(1, 1)).unwrap().terms(), &[1]);
        assert_eq!(
            regular_expansion(&fr(9, 2)).unwrap().terms(),
            &[1, 1, -1, -1, -1, 1, 1, -1, -1]
        );
        assert!(matches!(regular_expansion(&fr(-9, 2)), Err(CfError::NonPositiveInput(_))));
        let (neg, flipped) = signed_regular_expansion(&fr(7, -6)).unwrap();
        assert!(flipped);
        assert_eq!(neg.terms(), &[-1, -1, -1, 1, 1, 1, -1, -1, -1]);
    }

    #[test]
    fn regular_cf_validation() {
        assert_eq!(RegularCF::new(vec![1, -1]), Err(CfError::NotOneRegular));
        assert_eq!(RegularCF::new(vec![1, -1, 1, 1]), Err(CfError::NotOneRegular));
        assert_eq!(RegularCF::new(vec![1, 2]), Err(CfError::NotUnit { index: 1 }));
        assert_eq!(RegularCF::new(vec![]), Err(CfError::Empty));
        assert!(RegularCF::new(vec![1, 1, -1, -1]).is_ok());
    }

    #[test]
    fn cn_from_regular_examples() {
        let r = |v: &[i8]| cn_from_regular(&RegularCF::new(v.to_vec()).unwrap());
        assert_eq!(r(&[1, 1, 1, -1, -1, -1, -1]), Ok(6));
        assert_eq!(r(&[1, 1, -1, -1, -1, 1, 1, -1, -1]), Ok(6));
        assert_eq!(r(&[1, 1]), Ok(2));
        assert_eq!(r(&[1]), Err(CfError::WrongLeadingSigns));
        assert_eq!(r(&[1, -1, -1]), Err(CfError::WrongLeadingSigns));
    }

    #[test]
    fn pm_word_examples() {
        let w = |a, b| pm_word(&regular_expansion(&fr(a, b)).unwrap()).unwrap().to_string();
        assert_eq!(w(9, 7), "P^2MP^3");
        assert_eq!(w(9, 2), "PMPM^2P");
        assert_eq!(w(1, 1), "P");
    }

    #[test]
    fn matrix_examples() {
        let p5 = PMWord::new(vec![Letter::P; 5]);
        assert_eq!(word_to_matrix(&p5), Mat2::new(8, 5, 5, 3));
        assert_eq!(word_to_matrix(&PMWord::default()), Mat2::identity());
        use Letter::{M, P};
        let k2 = PMWord::new(vec![P, M, P, P, M, P]);
        assert_eq!(word_to_matrix(&k2), Mat2::new(10, 3, 3, 1));
        let k4 = PMWord::new(vec![P, M, P, P, P, P, M, P]);
        let (a, b) = word_to_matrix(&k4).apply_to_infinity();
        assert_eq!((a, b), (BigInt::from(25), BigInt::from(7)));
        assert_eq!(Mat2::j().mul(&Mat2::p()).mul(&Mat2::j()), Mat2::m());
    }

    #[test]
    fn conjugate_examples() {
        let c = conjugate_fractions(&fr(9, 7)).unwrap();
        assert_eq!(c.beta_over_alpha, fr(7, 9));
        assert_eq!(c.alpha_over_alpha_minus_beta, fr(9, 2));
        // 7 * 5 = 35 ≡ -1 = (-1)^{N-1} (mod 9) with N = 6
        assert_eq!(c.alpha_over_beta_prime, fr(9, 5));
        let len = |f: &Fraction| regular_expansion(f).unwrap().len();
        assert_eq!(len(&fr(9, 7)) + len(&c.alpha_over_alpha_minus_beta), 16);
        assert_eq!(len(&c.alpha_over_beta_prime), 7);

        let c = conjugate_fractions(&fr(2, 1)).unwrap();
        assert_eq!(c.beta_over_alpha, fr(1, 2));
        assert_eq!(len(&fr(1, 2)) + len(&fr(2, 1)), 5);
        assert!(matches!(conjugate_fractions(&fr(2, 3)), Err(CfError::NotPgpForm(_))));
    }

    #[test]
    fn parity_examples() {
        let p = |v: &[i8]| parity_class(&RegularCF::new(v.to_vec()).unwrap()).unwrap();
        assert_eq!(p(&[1, 1, 1, -1, -1, -1, -1]), 1);
        assert_eq!(p(&[1]), 1);
        assert_eq!(p(&[1, 1]), 2);
        assert_eq!(parities_for_residue(2), (true, false));
    }

    #[test]
    fn palindromy_examples() {
        let r = palindromy_report(&fr(5, 3)).unwrap();
        assert!(r.amphicheiral && r.g_palindromic && !r.two_component);
        let r = palindromy_report(&fr(9, 2)).unwrap();
        assert!(!r.amphicheiral);
        assert_eq!(r.beta_sq_mod_alpha, BigInt::from(4));
        let r = palindromy_report(&fr(3, 1)).unwrap();
        assert!(r.g_palindromic && !r.amphicheiral);
        assert_eq!(r.beta_sq_mod_alpha, BigInt::from(1));
    }

    #[test]
    fn word_display_and_shapes() {
        use Letter::{M, P};
        let w = PMWord::new(vec![P, M, M, P]);
        assert_eq!(w.to_string(), "PM^2P");
        assert_eq!(w.hat().to_string(), "MP^2M");
        assert!(w.is_palindrome());
        assert_eq!(w.strip_outer_p().unwrap().to_string(), "M^2");
        assert_eq!(PMWord::new(vec![M, P]).strip_outer_p(), None);
    }
}
