//! Randomised and exhaustive invariants.

mod common;

use std::collections::HashMap;

use chebknot::bridge::{canonicalize, equivalent, Equivalence};
use chebknot::chebyshev::chebyshev_t;
use chebknot::contfrac::{
    cn_from_regular, conjugate_fractions, eval_cf, eval_signs, is_one_regular, regular_expansion,
    word_to_matrix, Fraction, Letter, PMWord,
};
use chebknot::diagram::{conway_reversal_check, enumerate_crossings, minimal_diagram};
use chebknot::harmonic::{classify, is_harmonic_candidate, mirror_equivalent_c, HarmonicSpec};
use common::{cn, gcd};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coprime_pair(max: u64) -> impl Strategy<Value = (u64, u64)> {
    (2..max)
        .prop_flat_map(|a| (Just(a), 1..a))
        .prop_filter("coprime", |&(a, b)| gcd(a, b) == 1)
}

fn harmonic_triple() -> impl Strategy<Value = (i64, i64)> {
    (4i64..60, 4i64..200)
        .prop_filter("admissible", |&(b, c)| {
            b % 3 != 0 && c % 3 != 0 && b != c && gcd(b as u64, c as u64) == 1
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn regular_expansion_round_trips((a, b) in coprime_pair(1 << 50)) {
        let r = Fraction::new(a, b).unwrap();
        let e = regular_expansion(&r).unwrap();
        prop_assert!(is_one_regular(e.terms()));
        prop_assert_eq!(eval_signs(e.terms()).unwrap(), r);
        let n = cn(a, b) as usize;
        prop_assert_eq!(cn_from_regular(&e).unwrap(), n);
        // ℓ = p + 2m and N = p + m with m the number of sign changes
        prop_assert_eq!(e.len(), n + e.sign_changes());
    }

    #[test]
    fn sign_flip_identity(
        x in 1i64..50, a in 1i64..50, b in 2i64..50,
        c in 2i64..50, d in 1i64..50, y in 1i64..50,
    ) {
        let big = |v: &[i64]| v.iter().map(|&q| BigInt::from(q)).collect::<Vec<_>>();
        let lhs = eval_cf(&big(&[x, a, b, -c, -d, -y]));
        let rhs = eval_cf(&big(&[x, a, b - 1, 1, c - 1, d, y]));
        if let (Ok(l), Ok(r)) = (lhs, rhs) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn reversal_gives_the_conjugate_fraction((a, b) in coprime_pair(1 << 30)) {
        let r = Fraction::new(a, b).unwrap();
        let e = regular_expansion(&r).unwrap();
        let conj = conjugate_fractions(&r).unwrap();
        let mut rev: Vec<i8> = e.terms().iter().rev().copied().collect();
        let last = *e.terms().last().unwrap();
        for t in &mut rev {
            *t *= last;
        }
        prop_assert_eq!(eval_signs(&rev).unwrap(), conj.alpha_over_beta_prime.clone());
        // ββ' ≡ (−1)^{N−1} (mod α)
        let n = cn(a, b);
        let bp = u64::try_from(conj.alpha_over_beta_prime.denom()).unwrap();
        let want = if n % 2 == 1 { 1 } else { a - 1 };
        prop_assert_eq!((b as u128 * bp as u128 % a as u128) as u64, want % a);
    }

    #[test]
    fn mirror_law_for_harmonic_knots((b, c) in harmonic_triple()) {
        if let Some(c2) = mirror_equivalent_c(3, b, c).unwrap() {
            prop_assume!(c2 % 3 != 0 && gcd(b as u64, c2 as u64) == 1 && c2 != b);
            let (Ok(h1), Ok(h2)) = (
                classify(HarmonicSpec::new(3, b, c).unwrap()),
                classify(HarmonicSpec::new(3, b, c2).unwrap()),
            ) else {
                return Ok(());
            };
            prop_assert_eq!(h1.knot(), h2.knot().mirror_image());
        }
    }

    #[test]
    fn classification_is_idempotent((b, c) in harmonic_triple()) {
        let Ok(h) = classify(HarmonicSpec::new(3, b, c).unwrap()) else {
            return Ok(());
        };
        let (b2, c2) = (h.b_prime, h.c_prime);
        prop_assert!(b2 < c2 && c2 < 2 * b2 && (b2 + c2) % 3 == 0);
        let again = classify(HarmonicSpec::new(3, b2, c2).unwrap()).unwrap();
        prop_assert!(!again.mirror);
        prop_assert_eq!(again.chain.len(), 1);
        prop_assert_eq!(&again.fraction, &h.fraction);
        prop_assert!(is_harmonic_candidate(&h.knot()).unwrap());
    }

    #[test]
    fn reversed_forms_draw_the_same_knot((a, b) in coprime_pair(5000)) {
        prop_assume!(a % 2 == 1 && a > 2);
        let r = Fraction::new(a, b).unwrap();
        let f = minimal_diagram(&r).unwrap().form;
        let mut g = f.reversed();
        if f.len() % 2 == 0 {
            g = g.negated();
        }
        let n = cn(a, b).min(cn(a, a - b));
        prop_assert!(conway_reversal_check(&f, &g, n).unwrap());
        prop_assert_eq!(g.knot(), f.knot());
        prop_assert_eq!(f.knot(), canonicalize(a, b).unwrap());
    }
}

#[test]
fn canonical_knot_is_constant_on_orbits() {
    for a in (3..=300u64).step_by(2) {
        for b in 1..a {
            if gcd(a, b) != 1 {
                continue;
            }
            let k = canonicalize(a, b).unwrap();
            let inv = (1..a).find(|&x| b * x % a == 1).unwrap();
            assert_eq!(canonicalize(a, inv).unwrap(), k);
            assert_eq!(canonicalize(a, b + 3 * a).unwrap(), k);
            assert_eq!(canonicalize(a, -(b as i64)).unwrap(), k.mirror_image());
            let amphi = (b * b + 1) % a == 0;
            assert_eq!(k.is_amphicheiral(), amphi, "{a}/{b}");
            assert_eq!(k.crossing_number(), cn(a, b).min(cn(a, inv)).into());
        }
    }
}

#[test]
fn words_are_determined_by_their_matrices() {
    let mut seen: HashMap<_, PMWord> = HashMap::new();
    for len in 0..=12usize {
        for bits in 0u32..(1 << len) {
            let w = PMWord::new(
                (0..len).map(|i| if bits >> i & 1 == 1 { Letter::M } else { Letter::P }).collect(),
            );
            let m = word_to_matrix(&w);
            let det = if len % 2 == 0 { 1 } else { -1 };
            assert_eq!(m.det(), BigInt::from(det));
            if let Some(prev) = seen.insert(format!("{m:?}"), w.clone()) {
                panic!("{prev} and {w} share a matrix");
            }
        }
    }
}

#[test]
fn canonical_harmonic_pairs_are_distinct_knots() {
    let mut knots = Vec::new();
    for b in 4..=30i64 {
        for c in (b + 1)..(2 * b).min(31) {
            if (b + c) % 3 != 0 || gcd(b as u64, c as u64) != 1 {
                continue;
            }
            let h = classify(HarmonicSpec::new(3, b, c).unwrap()).unwrap();
            assert!(!h.mirror);
            knots.push(((b, c), h.knot()));
        }
    }
    for (i, (p1, k1)) in knots.iter().enumerate() {
        for (p2, k2) in &knots[i + 1..] {
            assert_eq!(equivalent(k1, k2), Equivalence::Distinct, "{p1:?} vs {p2:?}");
        }
    }
}

#[test]
fn crossings_are_double_points() {
    for a in 2..=5i64 {
        for b in (a + 1)..=40 {
            if gcd(a as u64, b as u64) != 1 {
                continue;
            }
            let cr = enumerate_crossings(a, b).unwrap();
            assert_eq!(cr.len() as i64, (a - 1) * (b - 1) / 2);
            for w in cr.windows(2) {
                assert!(w[0].x <= w[1].x + 1e-12);
            }
            for c in &cr {
                assert!(c.t != c.s);
                for p in [c.t, c.s] {
                    assert!((chebyshev_t(a as u32, p) - c.x).abs() < 1e-9, "a={a} b={b}");
                    assert!((chebyshev_t(b as u32, p) - c.y).abs() < 1e-9, "a={a} b={b}");
                }
            }
            // t ↦ −t maps the curve to (±x, ±y) with signs (−1)^a, (−1)^b
            if a % 2 == 1 {
                assert_symmetric(cr.iter().map(|c| c.x).collect());
            }
            if b % 2 == 1 {
                assert_symmetric(cr.iter().map(|c| c.y).collect());
            }
        }
    }
}

fn assert_symmetric(mut v: Vec<f64>) {
    let mut neg: Vec<f64> = v.iter().map(|x| -x).collect();
    v.sort_by(f64::total_cmp);
    neg.sort_by(f64::total_cmp);
    for (p, q) in v.iter().zip(&neg) {
        assert!((p - q).abs() < 1e-12);
    }
}
