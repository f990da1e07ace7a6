//! Small independent reference implementations shared by the integration
//! tests. Everything here uses machine integers and textbook algorithms,
//! not the library.

#![allow(dead_code)]

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euclid quotients of `a/b`, `a > b > 0`.
pub fn quotients(mut a: u64, mut b: u64) -> Vec<u64> {
    let mut q = Vec::new();
    while b != 0 {
        q.push(a / b);
        (a, b) = (b, a % b);
    }
    q
}

pub fn cn(a: u64, b: u64) -> u64 {
    quotients(a, b).iter().sum()
}

/// `[e_1, …, e_n]` as a projective pair `(p, q)` with `p ≥ 0`.
pub fn eval_signs(e: &[i8]) -> (i128, i128) {
    // first column of ∏ [[e_i, 1], [1, 0]]
    let (mut a, mut b, mut c, mut d) = (1i128, 0i128, 0i128, 1i128);
    for &x in e {
        let x = x as i128;
        (a, b, c, d) = (a * x + b, a, c * x + d, c);
    }
    let _ = (b, d);
    if a < 0 {
        (-a, -c)
    } else {
        (a, c)
    }
}

pub fn fib(n: u64) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// All `(α, β, N)` with `α` odd, `0 < β < α`, `gcd = 1` and `2 < N ≤ n_max`.
/// `α ≤ F_{n_max+1}` bounds every fraction with crossing number `n_max`.
pub fn knots_up_to(n_max: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    let amax = fib(n_max + 1);
    for a in (3..=amax).step_by(2) {
        for b in 1..a {
            if gcd(a, b) != 1 {
                continue;
            }
            let n = cn(a, b);
            if n <= n_max {
                out.push((a, b, n));
            }
        }
    }
    out
}

pub fn mod_pow2(b: u64, a: u64) -> u64 {
    (b as u128 * b as u128 % a as u128) as u64
}

/// Brute-force isotopy test: same `α` and `β' ≡ β^{±1} (mod α)`.
pub fn same_knot(a1: i128, b1: i128, a2: i128, b2: i128) -> bool {
    if a1 != a2 {
        return false;
    }
    if a1 == 1 {
        return true;
    }
    let (b1, b2) = (b1.rem_euclid(a1), b2.rem_euclid(a1));
    b1 == b2 || (b1 * b2).rem_euclid(a1) == 1
}
