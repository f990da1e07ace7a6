//! Chebyshev polynomials and exact sign tests for trigonometric values at
//! rational multiples of `π`.

use std::f64::consts::PI;

/// Reduces `m` modulo `2d` and folds it into `[0, d]`, so that
/// `cos(mπ/d) = cos(jπ/d)` for the returned `j`.
pub fn fold_pi_ratio(m: i64, d: i64) -> i64 {
    assert!(d > 0, "denominator must be positive");
    let r = m.rem_euclid(2 * d);
    if r > d {
        2 * d - r
    } else {
        r
    }
}

/// `cos(mπ/d)` computed so that `cos((d−j)π/d) == −cos(jπ/d)` holds bit for
/// bit and `cos(π/2)` is exactly zero. Parameter sets that are symmetric
/// about the origin stay exactly symmetric in `f64`.
pub fn cos_pi_ratio(m: i64, d: i64) -> f64 {
    let j = fold_pi_ratio(m, d);
    match (2 * j).cmp(&d) {
        std::cmp::Ordering::Equal => 0.0,
        std::cmp::Ordering::Greater => -((((d - j) as f64) * PI) / d as f64).cos(),
        std::cmp::Ordering::Less => (((j as f64) * PI) / d as f64).cos(),
    }
}

/// Exact sign of `sin(pπ/q)`, `q > 0`: zero iff `q | p`.
pub fn sin_pi_sign(p: i64, q: i64) -> i8 {
    assert!(q > 0, "denominator must be positive");
    let r = p.rem_euclid(2 * q);
    if r == 0 || r == q {
        0
    } else if r < q {
        1
    } else {
        -1
    }
}

/// Exact sign of `cos(pπ/q)`, `q > 0`.
pub fn cos_pi_sign(p: i64, q: i64) -> i8 {
    // cos x = sin(x + π/2)
    sin_pi_sign(2 * p + q, 2 * q)
}

/// Exact sign of `cos(Aπ/q) − cos(Bπ/q)` via
/// `cos A − cos B = −2 sin((A+B)/2) sin((A−B)/2)`.
pub fn cos_diff_sign(a: i64, b: i64, q: i64) -> i8 {
    -sin_pi_sign(a + b, 2 * q) * sin_pi_sign(a - b, 2 * q)
}

/// `T_n(t)` by the three-term recurrence, valid for any real `t`.
pub fn chebyshev_t(n: u32, t: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => t,
        _ => {
            let (mut prev, mut cur) = (1.0, t);
            for _ in 1..n {
                let next = 2.0 * t * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `T_n'(t) = n U_{n−1}(t)`.
pub fn chebyshev_t_derivative(n: u32, t: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    // U_0 = 1, U_1 = 2t
    let (mut prev, mut cur) = (1.0, 2.0 * t);
    if n == 1 {
        return 1.0;
    }
    for _ in 2..n {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    n as f64 * cur
}
