//! Rendering of exact rationals as decimals with a fixed number of
//! significant digits, rounding half away from zero.

use minmotion_core::exact::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// Returns `(digits, e)` with `digits` having exactly `sig` digits and
/// `|r| ≈ digits * 10^(e + 1 - sig)`.
fn significant(r: &Rational, sig: u32) -> (BigInt, i64) {
    let (num, den) = (r.numer().abs(), r.denom().clone());
    // floor(log10 |r|), starting from the digit counts
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    let ge = |e: i64| {
        if e >= 0 {
            num >= &den * pow10(e as u32)
        } else {
            &num * pow10((-e) as u32) >= den
        }
    };
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }
    let shift = sig as i64 - 1 - e;
    let (n, d) = if shift >= 0 {
        (num * pow10(shift as u32), den)
    } else {
        (num, den * pow10((-shift) as u32))
    };
    let (q, rem) = n.div_rem(&d);
    let mut digits = if rem * 2 >= d { q + 1 } else { q };
    if digits == pow10(sig) {
        digits /= 10;
        e += 1;
    }
    (digits, e)
}

/// Plain notation for moderate exponents, scientific otherwise; trailing
/// zeros after the decimal point are dropped.
pub fn render(r: &Rational, sig: u32) -> String {
    let sig = sig.max(1);
    if r.is_zero() {
        return "0".into();
    }
    let (digits, e) = significant(r, sig);
    let s = digits.to_string();
    let sign = if r.is_negative() { "-" } else { "" };
    let body = if (-7..21).contains(&e) {
        if e < 0 {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), s)
        } else if (e as usize) + 1 >= s.len() {
            format!("{}{}", s, "0".repeat(e as usize + 1 - s.len()))
        } else {
            let (a, b) = s.split_at(e as usize + 1);
            format!("{a}.{b}")
        }
    } else {
        let (a, b) = s.split_at(1);
        let mant = if b.is_empty() {
            a.to_string()
        } else {
            format!("{a}.{b}")
        };
        return format!("{sign}{}e{e}", trim(&mant));
    };
    format!("{sign}{}", trim(&body))
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
