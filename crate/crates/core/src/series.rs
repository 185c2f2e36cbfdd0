//! Truncated formal power series over exact rationals.
//!
//! A [`PowerSeries`] holds the coefficients of `u^0 .. u^N` for an explicit
//! truncation order `N`; every coefficient below the order is exact, and no
//! operation ever claims coefficients beyond the common truncation order
//! (binary operations truncate to the minimum of the two orders, which keeps
//! the kernel composable).
//!
//! The module also provides the six column EGFs of the scaled triangles
//! ([`family_egf`]) and the Bernoulli / tangent numbers, all derived from the
//! same exact arithmetic. These serve as an oracle that is independent of
//! the triangle recurrences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{factorial, is_integer, pow2, rat_int, Int, Rational};

/// Tags for the six scaled triangles and their EGF families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Scaled Stirling cycle numbers, factor `(-2)^(n-m)`.
    StirlingFirstScaled,
    /// Scaled Stirling subset numbers, factor `2^(n-m)`.
    StirlingSecondScaled,
    /// Arctanh (sign-rotated arctan) numbers.
    ArcTanh,
    /// Tanh (sign-rotated tangent) numbers.
    Tanh,
    /// Unsigned Lah numbers `n!/m! C(n-1,m-1)`.
    LahLower,
    /// Signed Lah numbers, factor `(-1)^(n-m)`.
    LahUpper,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::StirlingFirstScaled,
        FamilyId::StirlingSecondScaled,
        FamilyId::ArcTanh,
        FamilyId::Tanh,
        FamilyId::LahLower,
        FamilyId::LahUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::StirlingFirstScaled => "s1",
            FamilyId::StirlingSecondScaled => "s2",
            FamilyId::ArcTanh => "arctanh",
            FamilyId::Tanh => "tanh",
            FamilyId::LahLower => "lah",
            FamilyId::LahUpper => "lah-upper",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// `compose`: the inner series must have zero constant term.
    InnerConstantNotZero,
    /// `exp`: the argument must have zero constant term.
    ExpConstantNotZero,
    /// `log`: the argument must have constant term 1.
    LogConstantNotOne,
    /// `recip`: the argument must have nonzero constant term.
    RecipConstantZero,
    /// `shift_down(k)`: the first `k` coefficients must vanish.
    NotDivisibleByPower(usize),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::InnerConstantNotZero => {
                write!(f, "composition requires an inner series with zero constant term")
            }
            SeriesError::ExpConstantNotZero => {
                write!(f, "exp requires a series with zero constant term")
            }
            SeriesError::LogConstantNotOne => {
                write!(f, "log requires a series with constant term 1")
            }
            SeriesError::RecipConstantZero => {
                write!(f, "reciprocal requires a nonzero constant term")
            }
            SeriesError::NotDivisibleByPower(k) => {
                write!(f, "series is not divisible by u^{k}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// A formal power series truncated at an explicit order.
///
/// Invariant: `coeffs.len() == order + 1`, so the zero series of order `N`
/// still stores `N + 1` zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The identity series `u` (or the zero series when `order == 0`).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^k`; zero beyond the stored order is *not* claimed,
    /// so indexing past the order is a caller bug.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `n! * [u^n]`, the EGF reading of the `n`-th coefficient.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        rat_int(factorial(n as u64)) * &self.coeffs[n]
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        c.resize(order + 1, Rational::zero());
        PowerSeries { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// `outer(inner)`, truncated to the smaller order. The inner series must
    /// have zero constant term for the substitution to be well defined on
    /// truncations.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantNotZero);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        // Horner from the highest stored coefficient down.
        let mut acc = PowerSeries::constant(self.coeffs[self.order()].clone(), order);
        for k in (0..self.order()).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// `a^m` by repeated squaring, at the order of `a`.
    pub fn pow_int(&self, m: u32) -> PowerSeries {
        let mut base = self.clone();
        let mut exp = m;
        let mut acc = PowerSeries::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact truncated exponential; requires zero constant term.
    ///
    /// Uses the ODE recurrence `n b_n = sum_{k=1..n} k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantNotZero);
        }
        let order = self.order();
        let mut b = vec![Rational::zero(); order + 1];
        b[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || b[n - k].is_zero() {
                    continue;
                }
                acc += rat_int(Int::from(k)) * &self.coeffs[k] * &b[n - k];
            }
            b[n] = acc / rat_int(Int::from(n));
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// Exact truncated logarithm; requires constant term 1.
    ///
    /// Uses `n b_n = n a_n - sum_{k=1..n-1} k b_k a_{n-k}`.
    pub fn log(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantNotOne);
        }
        let order = self.order();
        let mut b = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            let mut acc = rat_int(Int::from(n)) * &self.coeffs[n];
            for k in 1..n {
                if b[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                acc -= rat_int(Int::from(k)) * &b[k] * &self.coeffs[n - k];
            }
            b[n] = acc / rat_int(Int::from(n));
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// Multiplicative inverse via the log/exp pair: `a = c(1 + g)` with unit
    /// constant after scaling, then `1/a = (1/c) exp(-log(1 + g))`.
    pub fn recip(&self) -> Result<PowerSeries, SeriesError> {
        let c = &self.coeffs[0];
        if c.is_zero() {
            return Err(SeriesError::RecipConstantZero);
        }
        let inv_c = Rational::one() / c;
        let unit = self.scale(&inv_c);
        let log = unit.log().map_err(|_| SeriesError::RecipConstantZero)?;
        let inv_unit = log.neg().exp().expect("negated log has zero constant term");
        Ok(inv_unit.scale(&inv_c))
    }

    pub fn div(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        Ok(self.mul(&other.recip()?))
    }

    /// Divide by `u^k`: drops the first `k` coefficients, which must vanish.
    /// The order shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Result<PowerSeries, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByPower(k));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    fn neg(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn zip(&self, other: &PowerSeries, f: impl Fn(&Rational, &Rational) -> Rational) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|k| f(&self.coeffs[k], &other.coeffs[k]))
                .collect(),
        }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::neg(self)
    }
}

/// `1 + c*u` as a series.
fn one_plus(c: i64, order: usize) -> PowerSeries {
    let mut s = PowerSeries::one(order);
    if order >= 1 {
        s.coeffs[1] = Rational::from_integer(Int::from(c));
    }
    s
}

/// `exp(c*u) - 1`.
fn expm1(c: i64, order: usize) -> PowerSeries {
    let arg = PowerSeries::x(order).scale(&Rational::from_integer(Int::from(c)));
    let e = arg.exp().expect("c*u has zero constant term");
    &e - &PowerSeries::one(order)
}

/// `arctanh u = (1/2) log((1+u)/(1-u))`.
pub fn arctanh(order: usize) -> PowerSeries {
    let p = one_plus(1, order).log().expect("constant term 1");
    let m = one_plus(-1, order).log().expect("constant term 1");
    (&p - &m).scale(&Rational::new(Int::one(), Int::from(2)))
}

/// `tanh u = (e^{2u} - 1) / (e^{2u} + 1)`.
pub fn tanh(order: usize) -> PowerSeries {
    let e = expm1(2, order);
    let denom = &e + &PowerSeries::constant(Rational::from_integer(Int::from(2)), order);
    e.div(&denom).expect("denominator has constant term 2")
}

/// `u coth u = cosh u / (sinh u / u)`, the EGF of `2^{2j} B_{2j}/(2j)!`.
pub fn u_coth_u(order: usize) -> PowerSeries {
    // cosh and sinh from exp(u), exp(-u); the removable u factor of sinh is
    // cancelled before inversion.
    let ep = expm1(1, order + 1);
    let em = expm1(-1, order + 1);
    let two = Rational::from_integer(Int::from(2));
    let cosh = (&(&ep + &em) + &PowerSeries::constant(two.clone(), order + 1))
        .scale(&(Rational::one() / &two));
    let sinh = (&ep - &em).scale(&(Rational::one() / &two));
    let sinh_over_u = sinh.shift_down(1).expect("sinh has zero constant term");
    cosh.truncated(order)
        .div(&sinh_over_u.truncated(order))
        .expect("sinh u / u has constant term 1")
}

/// Bernoulli number `B_n` with the `B_1 = -1/2` convention, read off from
/// the EGF `u/(e^u - 1)`.
pub fn bernoulli(n: usize) -> Rational {
    let base = expm1(1, n + 1)
        .shift_down(1)
        .expect("e^u - 1 has zero constant term");
    let g = base.recip().expect("(e^u - 1)/u has constant term 1");
    g.egf_coeff(n)
}

/// `n! [u^n] tanh u` as an exact integer, from the Bernoulli closed form
/// `4^{j+1}(4^{j+1}-1) B_{2j+2} / (2j+2)` for `n = 2j+1`; zero for even `n`.
/// This route never expands the tanh series, so it is an independent witness
/// for it.
pub fn tanh_number(n: usize) -> Int {
    if n % 2 == 0 {
        return Int::zero();
    }
    let j = (n - 1) / 2;
    let p = rat_int(pow2(2 * (j as u64 + 1))); // 4^(j+1)
    let v = &p * (&p - Rational::one()) * bernoulli(2 * j + 2)
        / rat_int(Int::from(2 * j + 2));
    debug_assert!(is_integer(&v));
    v.numer().clone()
}

/// Classical positive tangent number `T_n` for odd `n`:
/// `T_{2j+1} = (-1)^j * (2j+1)! [u^{2j+1}] tanh u`.
pub fn tangent_number(n: usize) -> Int {
    assert!(n % 2 == 1, "tangent numbers have odd index");
    let j = (n - 1) / 2;
    let t = tanh_number(n);
    if j % 2 == 0 {
        t
    } else {
        -t
    }
}

/// The `m`-th column EGF of a scaled triangle family, exactly as the
/// closed forms list them: `(1/m!) f(u)^m` with
///
/// * `f = (1/2) ln(1+2u)` for the scaled Stirling cycle numbers,
/// * `f = (e^{2u}-1)/2` for the scaled Stirling subset numbers,
/// * `f = arctanh u` and `f = tanh u` for the tanh pair,
/// * `f = u/(1-u)` and `f = u/(1+u)` for the Lah pair.
pub fn family_egf(family: FamilyId, m: u32, order: usize) -> PowerSeries {
    let base = match family {
        FamilyId::StirlingFirstScaled => {
            let ln = one_plus(2, order).log().expect("constant term 1");
            ln.scale(&Rational::new(Int::one(), Int::from(2)))
        }
        FamilyId::StirlingSecondScaled => {
            expm1(2, order).scale(&Rational::new(Int::one(), Int::from(2)))
        }
        FamilyId::ArcTanh => arctanh(order),
        FamilyId::Tanh => tanh(order),
        FamilyId::LahLower => PowerSeries::x(order)
            .mul(&one_plus(-1, order).recip().expect("constant term 1")),
        FamilyId::LahUpper => PowerSeries::x(order)
            .mul(&one_plus(1, order).recip().expect("constant term 1")),
    };
    base.pow_int(m)
        .scale(&(Rational::one() / rat_int(factorial(m as u64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ps(coeffs: &[Rational]) -> PowerSeries {
        PowerSeries::from_coeffs(coeffs.to_vec())
    }

    fn ps_i64(coeffs: &[i64]) -> PowerSeries {
        ps(&coeffs.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn mul_identity_and_monomials() {
        let one_plus_u = ps_i64(&[1, 1]);
        assert_eq!(one_plus_u.mul(&ps_i64(&[1, 0])), ps_i64(&[1, 1]));
        let u = PowerSeries::x(4);
        assert_eq!(u.mul(&u).coeffs(), PowerSeries::from_coeffs(vec![
            rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)
        ]).coeffs());
    }

    #[test]
    fn arctanh_squared_frozen() {
        // (u + u^3/3 + u^5/5)^2 = u^2 + (2/3)u^4 + (23/45)u^6
        let a = arctanh(6);
        let sq = a.mul(&a);
        let expect = ps(&[
            rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1),
            rat(2, 3), rat(0, 1), rat(23, 45),
        ]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn compose_trivial_and_square() {
        let f = ps(&[rat(0, 1), rat(1, 1), rat(-2, 1), rat(7, 2)]);
        // outer = u
        assert_eq!(PowerSeries::x(3).compose(&f).unwrap(), f);
        // outer = u^2, inner = u + u^2 at order 3 -> u^2 + 2u^3
        let outer = ps_i64(&[0, 0, 1, 0]);
        let inner = ps_i64(&[0, 1, 1, 0]);
        let got = outer.compose(&inner).unwrap();
        assert_eq!(got, ps_i64(&[0, 0, 1, 2]));
    }

    #[test]
    fn compose_substitution_gives_tanh() {
        // tanh u = v/(1+v) at v = (e^{2u}-1)/2
        let order = 7;
        let v = PowerSeries::x(order)
            .mul(&one_plus(1, order).recip().unwrap()); // u/(1+u)
        let inner = expm1(2, order).scale(&rat(1, 2));
        let composed = v.compose(&inner).unwrap();
        assert_eq!(composed, tanh(order));
        // frozen: u - u^3/3 + 2u^5/15 - 17 u^7/315
        let expect = ps(&[
            rat(0, 1), rat(1, 1), rat(0, 1), rat(-1, 3),
            rat(0, 1), rat(2, 15), rat(0, 1), rat(-17, 315),
        ]);
        assert_eq!(composed, expect);
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let inner = ps_i64(&[1, 1]);
        assert_eq!(
            PowerSeries::x(1).compose(&inner).unwrap_err(),
            SeriesError::InnerConstantNotZero
        );
    }

    #[test]
    fn exp_log_basics() {
        assert_eq!(PowerSeries::zero(3).exp().unwrap(), PowerSeries::one(3));
        // log(1+u) = u - u^2/2 + u^3/3
        let l = one_plus(1, 3).log().unwrap();
        assert_eq!(l, ps(&[rat(0, 1), rat(1, 1), rat(-1, 2), rat(1, 3)]));
        assert!(PowerSeries::one(2).exp().is_err());
        assert!(PowerSeries::x(2).log().is_err());
    }

    #[test]
    fn arctanh_matches_half_log_ratio() {
        // (1/2) log((1+u)/(1-u)) = u + u^3/3 + u^5/5
        let a = arctanh(5);
        assert_eq!(
            a,
            ps(&[rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 5)])
        );
    }

    #[test]
    fn pow_int_cases() {
        let a = ps(&[rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1)]);
        assert_eq!(a.pow_int(0), PowerSeries::one(4));
        let sq = a.pow_int(2);
        assert_eq!(sq, ps(&[rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(2, 3)]));
        // tanh^2 at order 6: u^2 - (2/3)u^4 + (17/45)u^6
        let t2 = tanh(6).pow_int(2);
        assert_eq!(
            t2,
            ps(&[
                rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1),
                rat(-2, 3), rat(0, 1), rat(17, 45),
            ])
        );
    }

    #[test]
    fn bernoulli_frozen_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn tangent_numbers_frozen() {
        assert_eq!(tangent_number(1), Int::from(1));
        assert_eq!(tangent_number(3), Int::from(2));
        assert_eq!(tangent_number(5), Int::from(16));
        assert_eq!(tangent_number(7), Int::from(272));
        assert_eq!(tangent_number(9), Int::from(7936));
        assert_eq!(tanh_number(3), Int::from(-2));
        assert_eq!(tanh_number(4), Int::from(0));
    }

    #[test]
    fn family_egf_examples() {
        assert_eq!(
            family_egf(FamilyId::ArcTanh, 1, 5),
            ps(&[rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 5)])
        );
        assert_eq!(
            family_egf(FamilyId::Tanh, 1, 5),
            ps(&[rat(0, 1), rat(1, 1), rat(0, 1), rat(-1, 3), rat(0, 1), rat(2, 15)])
        );
        assert_eq!(family_egf(FamilyId::LahLower, 0, 4), PowerSeries::one(4));
    }

    #[test]
    fn arctanh_egf_coefficients_are_shifted_factorials() {
        // n! [u^n] arctanh = (n-1)! for odd n, 0 for even n >= 2
        let a = family_egf(FamilyId::ArcTanh, 1, 11);
        for n in 1..=11 {
            let expect = if n % 2 == 1 {
                rat_int(factorial(n as u64 - 1))
            } else {
                Rational::zero()
            };
            assert_eq!(a.egf_coeff(n), expect, "n = {n}");
        }
    }

    #[test]
    fn tanh_egf_matches_bernoulli_closed_form() {
        let t = family_egf(FamilyId::Tanh, 1, 13);
        for j in 0..=6 {
            let n = 2 * j + 1;
            assert_eq!(t.egf_coeff(n), rat_int(tanh_number(n)), "n = {n}");
        }
    }

    #[test]
    fn u_coth_u_frozen() {
        let s = u_coth_u(8);
        assert_eq!(
            s,
            ps(&[
                rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(-1, 45),
                rat(0, 1), rat(2, 945), rat(0, 1), rat(-1, 4725),
            ])
        );
    }

    #[test]
    fn recip_and_shift_down() {
        let g = one_plus(-1, 6).recip().unwrap(); // 1/(1-u) = sum u^k
        assert_eq!(g, ps_i64(&[1, 1, 1, 1, 1, 1, 1]));
        assert!(PowerSeries::x(3).recip().is_err());
        let u3 = ps_i64(&[0, 0, 0, 5]);
        assert_eq!(u3.shift_down(2).unwrap(), ps_i64(&[0, 5]));
        assert!(u3.shift_down(4).is_err());
        assert!(ps_i64(&[0, 1, 0, 5]).shift_down(2).is_err());
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = ps_i64(&[1, 2, 3, 4, 5]);
        let b = ps_i64(&[1, 1]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.mul(&b), ps_i64(&[1, 3]));
    }
}
