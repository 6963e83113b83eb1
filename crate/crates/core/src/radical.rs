//! Exact values of the form `c * sqrt(r)` with `c` rational and `r` a
//! nonnegative rational.
//!
//! Spectrum atoms and step bounds are all of this shape (the scaling factor
//! in front of every `W` is a square root of a rational). Equality and
//! ordering are decided exactly by comparing signs and squares, so no
//! factorization of the radicand is ever required; display extracts small
//! square factors for readability only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rat};

/// `coeff * sqrt(radicand)` with `radicand` a nonnegative integer.
///
/// Construction normalizes `sqrt(p/q)` to `sqrt(p*q)/q` so the radicand is
/// integral, and collapses zeros to `0 * sqrt(1)`.
#[derive(Clone, Debug)]
pub struct Radical {
    coeff: Rat,
    radicand: BigInt,
}

impl Radical {
    /// `coeff * sqrt(radicand)`; `radicand` must be a nonnegative rational.
    pub fn new(coeff: Rat, radicand: Rat) -> Self {
        assert!(
            !radicand.is_negative(),
            "radicand must be nonnegative, got {radicand}"
        );
        if coeff.is_zero() || radicand.is_zero() {
            return Radical {
                coeff: Rat::zero(),
                radicand: BigInt::one(),
            };
        }
        // sqrt(p/q) = sqrt(p q) / q
        let p = radicand.numer().clone();
        let q = radicand.denom().clone();
        Radical {
            coeff: coeff / rational::rat_of(&q),
            radicand: p * q,
        }
    }

    pub fn zero() -> Self {
        Radical::new(Rat::zero(), Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        Radical::new(c, Rat::one())
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The exact square, a rational.
    pub fn square(&self) -> Rat {
        &self.coeff * &self.coeff * rational::rat_of(&self.radicand)
    }

    pub fn abs(&self) -> Radical {
        Radical {
            coeff: self.coeff.abs(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Radical {
        Radical::new(&self.coeff * c, rational::rat_of(&self.radicand))
    }

    /// Cube: `c^3 r * sqrt(r)`.
    pub fn cube(&self) -> Radical {
        Radical {
            coeff: &self.coeff * &self.coeff * &self.coeff * rational::rat_of(&self.radicand),
            radicand: self.radicand.clone(),
        }
    }

    /// True when the two radicands differ by the square of a rational, i.e.
    /// the values live on the same one-dimensional Q-line. Values on
    /// distinct lines are linearly independent over Q, which is what makes
    /// exact zero-mean checks on mixed spectra possible.
    pub fn same_square_class(&self, other: &Radical) -> bool {
        if self.is_zero() || other.is_zero() {
            return true;
        }
        // r1/r2 = (a/g)/(b/g); a square iff both reduced parts are squares.
        let g = self.radicand.gcd(&other.radicand);
        is_perfect_square(&(&self.radicand / &g)) && is_perfect_square(&(&other.radicand / &g))
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.coeff) * rational::to_f64(&rational::rat_of(&self.radicand)).sqrt()
    }

    /// Exact form "c" or "c*sqrt(k)" with small square factors pulled out of
    /// the radicand for display.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (square, rest) = extract_small_squares(&self.radicand);
        let c = &self.coeff * rational::rat_of(&square);
        if rest.is_one() {
            rational::render(&c)
        } else {
            format!("{}*sqrt({})", rational::render(&c), rest)
        }
    }
}

impl PartialEq for Radical {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Radical {}

impl PartialOrd for Radical {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Radical {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let s1 = sign_of(&self.coeff);
        let s2 = sign_of(&other.coeff);
        if s1 != s2 {
            return s1.cmp(&s2);
        }
        if s1 == 0 {
            return Ordering::Equal;
        }
        // Same strict sign: compare squares, oriented by the sign.
        let c = self.square().cmp(&other.square());
        if s1 > 0 {
            c
        } else {
            c.reverse()
        }
    }
}

impl std::fmt::Display for Radical {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

fn sign_of(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Pull squares of primes below 1000 (and any whole square remainder) out of
/// `n`, returning `(s, rest)` with `n = s^2 * rest`.
fn extract_small_squares(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut square_root = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest && p < BigInt::from(1000) {
        loop {
            let pp = &p * &p;
            if (&rest % &pp).is_zero() {
                rest /= &pp;
                square_root *= &p;
            } else {
                break;
            }
        }
        p += 1;
    }
    if is_perfect_square(&rest) {
        square_root *= rest.sqrt();
        rest = BigInt::one();
    }
    (square_root, rest)
}
