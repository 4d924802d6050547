//! Minkowski question-mark function via continued fractions.
//!
//! ?([0; a1, a2, ...]) = sum_k (-1)^(k+1) * 2^(1 - (a1 + ... + ak)),
//! which is the Stern-Brocot dyadic expansion.

use crate::error::{Error, Result};

/// Exact-rational evaluation of ?(p/q) for p/q in [0, 1].
///
/// The continued fraction of a rational terminates, and the dyadic tail
/// below 2^-1074 underflows to zero, so the result is accurate to well
/// under 1e-12 absolute.
pub fn minkowski_q_rational(p: u64, q: u64) -> Result<f64> {
    if q == 0 || p > q {
        return Err(Error::DomainError(
            "argument must be a rational in [0, 1]".into(),
        ));
    }
    let (mut num, mut den) = (p, q);
    let mut acc = 0.0f64;
    let mut sign = 1.0f64;
    let mut expo: i64 = 1;
    while num != 0 {
        // Continued-fraction digit of num/den (den/num integer part after
        // inversion): here x = num/den < 1, digit = floor(den/num).
        let digit = den / num;
        let rem = den % num;
        expo -= digit as i64;
        if expo < -1080 {
            break;
        }
        acc += sign * (expo as f64).exp2();
        sign = -sign;
        den = num;
        num = rem;
    }
    Ok(acc)
}

/// Double-precision evaluation of ?(x) for x in [0, 1]; uses up to 64
/// continued-fraction digits of x.
pub fn minkowski_q(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::DomainError("argument must lie in [0, 1]".into()));
    }
    let mut y = x;
    let mut acc = 0.0f64;
    let mut sign = 1.0f64;
    let mut expo: i64 = 1;
    for _ in 0..64 {
        if y <= 0.0 {
            break;
        }
        let inv = 1.0 / y;
        let digit = inv.floor();
        if !digit.is_finite() || digit > 1.1e18 {
            break;
        }
        expo -= digit as i64;
        if expo < -1080 {
            break;
        }
        acc += sign * (expo as f64).exp2();
        sign = -sign;
        y = inv - digit;
    }
    Ok(acc)
}
