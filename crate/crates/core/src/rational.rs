//! Exact rational arithmetic.
//!
//! All probabilities, spherical function values, and moment statistics in
//! this crate are [`Rat`] values: arbitrary-precision rationals kept in
//! lowest terms with positive denominator. The representation is
//! `num_rational::BigRational`, which maintains both invariants after every
//! operation; the helpers here cover the factorial/binomial plumbing the
//! combinatorics needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `i` as an exact rational.
pub fn rat(i: i64) -> Rat {
    Rat::from_integer(BigInt::from(i))
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_of(i: &BigInt) -> Rat {
    Rat::from_integer(i.clone())
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `2^k` for possibly negative `k`.
pub fn pow2(k: i64) -> Rat {
    let p = BigInt::one() << k.unsigned_abs() as usize;
    if k >= 0 {
        rat_of(&p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

/// Exact integer power of a rational, with negative exponents allowed for
/// nonzero bases.
pub fn pow_rat(x: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc = acc.recip();
    }
    acc
}

/// The rational as `f64`, via a scaled quotient so that values far outside
/// the `f64` integer range still round sensibly.
pub fn to_f64(x: &Rat) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    big_to_f64(n) / big_to_f64(d)
}

fn big_to_f64(i: &BigInt) -> f64 {
    // Exact for |i| < 2^53; for larger values take the top 64 bits and scale.
    let neg = i.is_negative();
    let mag = i.abs();
    let bits = mag.bits();
    let v = if bits <= 63 {
        let digits = mag.to_u64_digits().1;
        (*digits.first().unwrap_or(&0)) as f64
    } else {
        let shift = bits - 63;
        let top = mag >> shift;
        let digits = top.to_u64_digits().1;
        (digits[0] as f64) * 2f64.powi(shift as i32)
    };
    if neg {
        -v
    } else {
        v
    }
}

/// Render "p/q" (or just "p" for integers), the exact form used in CSV.
pub fn render(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 7), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let x = frac(4, -6);
        assert_eq!(x, frac(-2, 3));
        assert!(x.denom() > &BigInt::zero());
        assert_eq!(render(&x), "-2/3");
        assert_eq!(render(&rat(7)), "7");
    }

    #[test]
    fn powers() {
        assert_eq!(pow2(-3), frac(1, 8));
        assert_eq!(pow2(10), rat(1024));
        assert_eq!(pow_rat(&frac(2, 3), -2), frac(9, 4));
    }

    #[test]
    fn f64_conversion_handles_large_values() {
        let big = factorial(30);
        let approx = to_f64(&rat_of(&big));
        assert!((approx / 2.652528598121910e32 - 1.0).abs() < 1e-12);
        assert_eq!(to_f64(&frac(1, 2)), 0.5);
        assert_eq!(to_f64(&rat(-3)), -3.0);
    }
}
