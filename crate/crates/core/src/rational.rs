//! Exact scalars: arbitrary-precision integers and rationals, plus the small
//! combinatorial helpers (factorials, generalized binomials, powers) used
//! throughout the crate.
//!
//! `Rational` is always stored in lowest terms with a positive denominator,
//! and its `Display`/`FromStr` forms are the wire format used everywhere:
//! `p/q`, with `/q` omitted when the denominator is 1 and the sign carried
//! by the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rational = BigRational;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Exact fraction from small integers. Panics on a zero denominator.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}

pub fn rat_int(n: Int) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// Generalized binomial coefficient `C(a, b)` for integer `a` (possibly
/// negative) and `b >= 0`, by the falling-product formula. The division by
/// `b!` is always exact; a nonzero remainder would be an internal error.
pub fn binomial(a: i64, b: i64) -> Int {
    if b < 0 {
        return Int::zero();
    }
    let mut num = Int::one();
    for t in 0..b {
        num *= Int::from(a - t);
    }
    let den = factorial(b as u64);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "binomial({a}, {b}) is not an integer");
    q
}

/// `2^k` as a big integer.
pub fn pow2(k: u64) -> Int {
    Int::one() << k
}

/// `(-2)^k` as a big integer.
pub fn neg_pow2(k: u64) -> Int {
    let v = pow2(k);
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `(-1)^k` as a big integer.
pub fn sign(k: u64) -> Int {
    if k % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// True if the rational is an exact integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Convert an integer-valued rational into an `Int`, or report where the
/// exactness broke.
pub fn to_integer(r: &Rational) -> Option<Int> {
    if is_integer(r) {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Absolute value helper used by test generators.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rat(2, -4);
        assert_eq!(r.numer(), &int(-1));
        assert_eq!(r.denom(), &int(2));
        assert_eq!(r.to_string(), "-1/2");
        assert_eq!(rat(6, 3).to_string(), "2");
    }

    #[test]
    fn wire_format_round_trips() {
        for s in ["0", "7", "-7", "3/4", "-3/4", "22/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn binomial_handles_negative_upper_index() {
        assert_eq!(binomial(-1, 0), int(1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(4, 7), int(0));
        assert_eq!(binomial(3, -1), int(0));
        // C(-1, 2) = (-1)(-2)/2 = 1 by the falling-product formula
        assert_eq!(binomial(-1, 2), int(1));
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(10), int(3_628_800));
    }

    #[test]
    fn signed_powers_of_two() {
        assert_eq!(neg_pow2(0), int(1));
        assert_eq!(neg_pow2(3), int(-8));
        assert_eq!(pow2(10), int(1024));
    }
}
