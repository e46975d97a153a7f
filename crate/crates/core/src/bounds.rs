//! Exact series arithmetic for the junta-size constant.
//!
//! The chain being reproduced: per-degree hitting-set maxima bound the
//! growth of the weight maximum, giving
//! `C* <= min_d ( d/2 + sum_{i>d} i^3 2^{-i} )`; the tail has the closed
//! form `2^{-d}(d^3 + 6d^2 + 18d + 26)`, checked here by the telescoping
//! identity `tail(d-1) - tail(d) = d^3 2^{-d}`. Everything is computed in
//! arbitrary-precision rationals; decimal output is a rendering choice,
//! never an intermediate.

pub use num::BigRational;
use num::{BigInt, One, Signed, Zero};

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pow2(d: u32) -> BigInt {
    BigInt::one() << d
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// `sum_{i=d+1}^infty i^3 2^{-i}`, exactly: `2^{-d}(d^3 + 6d^2 + 18d + 26)`.
pub fn tail_sum(d: u32) -> BigRational {
    let d = BigInt::from(d);
    let num = &d * &d * &d + 6 * &d * &d + 18 * &d + 26;
    ratio(num, pow2(d.try_into().expect("small exponent")))
}

/// `d/2 + tail_sum(d)`: an upper bound on the limiting constant obtained by
/// cutting the series at `d`.
pub fn cstar_upper(d: u32) -> BigRational {
    assert!(d >= 1, "cutoff must be at least 1");
    ratio(int(d as i64), int(2)) + tail_sum(d)
}

/// Argmin of [`cstar_upper`] over `1..=dmax` with exact comparisons;
/// the lowest `d` wins ties.
pub fn cstar_upper_best(dmax: u32) -> (u32, BigRational) {
    assert!(dmax >= 1);
    let mut best_d = 1;
    let mut best = cstar_upper(1);
    for d in 2..=dmax {
        let v = cstar_upper(d);
        if v < best {
            best = v;
            best_d = d;
        }
    }
    (best_d, best)
}

/// Largest `d <= dmax` with `d^3 2^{-d} > 1/2`; the finite difference
/// `cstar_upper(d+1) - cstar_upper(d) = 1/2 - (d+1)^3 2^{-(d+1)}` shows the
/// descent stops exactly there.
pub fn largest_summand_above_half(dmax: u32) -> Option<u32> {
    (1..=dmax)
        .filter(|&d| {
            let d_big = BigInt::from(d);
            let summand = ratio(&d_big * &d_big * &d_big, pow2(d));
            summand > ratio(int(1), int(2))
        })
        .max()
}

/// `1 - 2^{-d}`, the selector-chain lower bound on `C_d`.
pub fn cd_lower(d: u32) -> BigRational {
    BigRational::one() - ratio(BigInt::one(), pow2(d))
}

/// `sum h_i 2^{-i}` for a list of per-degree hitting-set maxima
/// `h_1, ..., h_k`.
pub fn cd_upper_from_h(hs: &[u64]) -> BigRational {
    assert!(!hs.is_empty(), "need at least one per-degree value");
    hs.iter()
        .enumerate()
        .map(|(idx, &h)| ratio(BigInt::from(h), pow2(idx as u32 + 1)))
        .sum()
}

/// Render with `sig` significant digits, rounding half away from zero.
/// Trailing fractional zeros are stripped.
pub fn to_decimal_string(r: &BigRational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let a = r.abs();
    let ten = BigRational::from_integer(int(10));

    // Find e10 with 10^e10 <= a < 10^(e10+1).
    let mut e10: i64 = 0;
    let mut p = BigRational::one();
    while a >= &p * &ten {
        p *= &ten;
        e10 += 1;
    }
    while a < p {
        p /= &ten;
        e10 -= 1;
    }

    let decimals = sig as i64 - 1 - e10;
    let mut scale = BigRational::one();
    for _ in 0..decimals.abs() {
        scale *= &ten;
    }
    let scaled = if decimals >= 0 { &a * &scale } else { &a / &scale };
    let rounded = (scaled + ratio(int(1), int(2))).floor().to_integer();

    let sign = if r.is_negative() { "-" } else { "" };
    let digits = rounded.to_string();
    let body = if decimals <= 0 {
        format!("{digits}{}", "0".repeat(decimals.unsigned_abs() as usize))
    } else {
        let decimals = decimals as usize;
        let padded = format!("{digits:0>width$}", width = decimals + 1);
        let split = padded.len() - decimals;
        let (int_part, frac_part) = padded.split_at(split);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        }
    };
    format!("{sign}{body}")
}
