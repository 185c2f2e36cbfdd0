//! Dense exact polynomials and the Stirling / tanh / Lah polynomial families.
//!
//! The diagonals `f(x, x-k)` (and `f(x+k, x)`) of the six triangles are
//! polynomials in `x`. They are realized here by exact interpolation from
//! integer samples taken strictly *beyond* the forced roots `x = 0..k`, so
//! that the subsequent exact division by the falling factorial
//! `x(x-1)...(x-k)` independently verifies that those roots are really
//! present; a nonzero remainder is an integrity error. Interpolation
//! oversamples by two points and requires the extra samples to lie on the
//! curve, which turns the degree claims into checks instead of assumptions.
//!
//! From the quotients:
//!
//! * `stirling_poly(k)` is `S1bar(x, x-k) / x^(k+1 falling)`, degree `k-1`;
//! * `tanh_poly(k)` is built as the binomial sum
//!   `sum_i C(x-1,i) sigma_{k-i}(x-i)` (the `i = k` term collapses to
//!   `C(x-1,k-1)/k`), comes out zero for odd `k`, and agrees with the
//!   direct quotient `theta(x, x-k) / x^(k+1 falling)`;
//! * `lah_poly(k)` is `C(x,k)/x`, degree `k-1`.
//!
//! `k = 0` exists only in product form (`x * poly_0(x) = 1`): the Stirling
//! and tanh constructors return that product form for `k = 0`, while
//! `lah_poly(0)` is a domain error, matching the family contracts.

use std::fmt;
use std::ops::Neg;

use num_traits::{One, Signed, Zero};

use crate::rational::{factorial, pow2, rat_int, Int, Rational};
use crate::report::IdentityReport;
use crate::series::{arctanh, bernoulli, tanh_number, u_coth_u, FamilyId, PowerSeries};
use crate::triangles::TriangleSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    EmptyInterpolation,
    DuplicateAbscissa(Rational),
    DivisionByZero,
    /// Exact division left a remainder: a vanishing-roots claim failed.
    NonzeroRemainder,
    /// An oversampled point did not lie on the interpolated curve.
    OversampleMismatch { family: FamilyId, k: usize },
    /// `lah_poly(0)`: only the product form `x*lambda_0(x) = 1` exists.
    LahZeroIndex,
    /// `entry_via_poly` is defined for the arctanh/tanh families only.
    UnsupportedFamily(FamilyId),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::EmptyInterpolation => write!(f, "interpolation needs at least one point"),
            PolyError::DuplicateAbscissa(x) => write!(f, "duplicate abscissa {x}"),
            PolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
            PolyError::NonzeroRemainder => write!(f, "polynomial division left a remainder"),
            PolyError::OversampleMismatch { family, k } => {
                write!(f, "oversample check failed for {family} diagonal k = {k}")
            }
            PolyError::LahZeroIndex => {
                write!(f, "lambda_0 is not a polynomial; only x*lambda_0(x) = 1 is defined")
            }
            PolyError::UnsupportedFamily(fam) => {
                write!(f, "polynomial bridge is defined for arctanh/tanh, not {fam}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Dense polynomial over the rationals; `coeffs[j]` multiplies `x^j` and no
/// trailing zeros are stored, so the zero polynomial is the empty list and
/// `degree()` is `None` for it (the usual "degree minus infinity" sentinel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat_int(Int::from(x)))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Substitute `x -> a + b*x` (plain polynomial evaluation; the negative
    /// and shifted arguments used by dualities are ordinary substitutions,
    /// no analytic continuation machinery).
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Polynomial {
        let lin = Polynomial::new(vec![a.clone(), b.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// `p(x + c)`.
    pub fn shifted(&self, c: i64) -> Polynomial {
        self.compose_linear(&rat_int(Int::from(c)), &Rational::one())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match j {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if j == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree < #points through the given points, by
/// Newton's divided differences (exact).
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial, PolyError> {
    if points.is_empty() {
        return Err(PolyError::EmptyInterpolation);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(PolyError::DuplicateAbscissa(xi.clone()));
            }
        }
    }
    // divided-difference coefficients
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = points.len();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in 0..(n - level) {
            let dx = &points[i + level].0 - &points[i].0;
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        table.truncate(n - level);
        coeffs.push(table[0].clone());
    }
    // assemble Newton form by Horner over (x - x_j)
    let mut p = Polynomial::constant(coeffs[n - 1].clone());
    for j in (0..n - 1).rev() {
        let lin = Polynomial::new(vec![-&points[j].0, Rational::one()]);
        p = p.mul(&lin).add(&Polynomial::constant(coeffs[j].clone()));
    }
    Ok(p)
}

/// Exact quotient `p / q`; a nonzero remainder signals a bug or a wrong
/// sample set, not a rounding choice, so it is an error.
pub fn divide_exact(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    if q.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let dq = q.degree().expect("nonzero divisor");
    let lead = q.leading().expect("nonzero divisor").clone();
    let mut rem = p.coeffs.to_vec();
    if rem.len() < q.coeffs.len() {
        return if p.is_zero() {
            Ok(Polynomial::zero())
        } else {
            Err(PolyError::NonzeroRemainder)
        };
    }
    let mut quot = vec![Rational::zero(); rem.len() - dq];
    for j in (dq..rem.len()).rev() {
        let c = &rem[j] / &lead;
        if !c.is_zero() {
            for (t, qc) in q.coeffs.iter().enumerate() {
                let delta = qc * &c;
                rem[j - dq + t] -= delta;
            }
        }
        quot[j - dq] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(PolyError::NonzeroRemainder);
    }
    Ok(Polynomial::new(quot))
}

/// `x(x-1)...(x-(factors-1))`, i.e. the falling factorial with the given
/// number of factors; `x^(k+1 falling)` is `falling_factorial(k+1)`.
pub fn falling_factorial(factors: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for t in 0..factors {
        p = p.mul(&Polynomial::new(vec![
            rat_int(-Int::from(t)),
            Rational::one(),
        ]));
    }
    p
}

/// `C(x + shift, k)` as a polynomial.
pub fn binomial_poly_shifted(shift: i64, k: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for t in 0..k {
        p = p.mul(&Polynomial::new(vec![
            rat_int(Int::from(shift - t as i64)),
            Rational::one(),
        ]));
    }
    p.scale(&(Rational::one() / rat_int(factorial(k as u64))))
}

/// `C(x, k)`.
pub fn binomial_poly(k: usize) -> Polynomial {
    binomial_poly_shifted(0, k)
}

/// Whether a family's polynomial diagonal is `f(x, x-k)` (upper index runs)
/// or `f(x+k, x)` (lower index runs).
fn diagonal_is_upper(family: FamilyId) -> bool {
    matches!(
        family,
        FamilyId::StirlingFirstScaled | FamilyId::ArcTanh | FamilyId::LahLower
    )
}

/// Interpolate the diagonal polynomial of a triangle family:
/// `x -> f(x, x-k)` for the scaled-cycle/arctanh/lower-Lah families, and
/// `x -> f(x+k, x)` for their inverse mates.
///
/// Samples are taken beyond the forced roots (`x = k+1 ..` resp. `x = 1 ..`)
/// under the provable degree bound `2k`; two extra samples must lie on the
/// interpolant or the construction reports an integrity error.
pub fn diagonal_poly(
    tri: &TriangleSet,
    family: FamilyId,
    k: usize,
) -> Result<Polynomial, PolyError> {
    let needed = 2 * k + 1;
    let sample = |x: usize| -> Rational {
        let v = if diagonal_is_upper(family) {
            tri.entry_signed(family, x, x as isize - k as isize)
        } else {
            tri.entry(family, x + k, x)
        };
        rat_int(v)
    };
    let first = if diagonal_is_upper(family) { k + 1 } else { 1 };
    let points: Vec<(Rational, Rational)> = (first..first + needed)
        .map(|x| (rat_int(Int::from(x)), sample(x)))
        .collect();
    let p = interpolate(&points)?;
    for x in first + needed..first + needed + 2 {
        if p.eval_int(x as i64) != sample(x) {
            return Err(PolyError::OversampleMismatch { family, k });
        }
    }
    Ok(p)
}

/// The scaled Stirling polynomial `sigma_k(x) = S1bar(x, x-k)/x^(k+1 falling)`
/// for `k >= 1` (degree `k - 1`); for `k = 0` the product form
/// `x*sigma_0(x) = 1`, i.e. the constant 1.
pub fn stirling_poly(tri: &TriangleSet, k: usize) -> Result<Polynomial, PolyError> {
    if k == 0 {
        return Ok(Polynomial::one());
    }
    let diag = diagonal_poly(tri, FamilyId::StirlingFirstScaled, k)?;
    divide_exact(&diag, &falling_factorial(k + 1))
}

/// The tanh polynomial `delta_k`, built as the binomial sum of Stirling
/// polynomials `sum_{i=0..k} C(x-1,i) sigma_{k-i}(x-i)`; the `i = k` term is
/// the product-form collapse `C(x-1,k-1)/k`. Odd `k` comes out as the
/// genuine zero polynomial (kept, so generating-function sums stay
/// index-uniform); `k = 0` is the product form `x*delta_0(x) = 1`.
pub fn tanh_poly(tri: &TriangleSet, k: usize) -> Result<Polynomial, PolyError> {
    if k == 0 {
        return Ok(Polynomial::one());
    }
    let mut acc = Polynomial::zero();
    for i in 0..k {
        let sigma = stirling_poly(tri, k - i)?;
        let term = binomial_poly_shifted(-1, i).mul(&sigma.shifted(-(i as i64)));
        acc = acc.add(&term);
    }
    let tail = binomial_poly_shifted(-1, k - 1)
        .scale(&(Rational::one() / rat_int(Int::from(k))));
    Ok(acc.add(&tail))
}

/// The Lah polynomial `lambda_k(x) = C(x,k)/x` for `k >= 1` (degree `k-1`).
/// `k = 0` is a domain error: only the product form `x*lambda_0(x) = 1`
/// exists.
pub fn lah_poly(k: usize) -> Result<Polynomial, PolyError> {
    if k == 0 {
        return Err(PolyError::LahZeroIndex);
    }
    divide_exact(&binomial_poly(k), &Polynomial::x())
}

/// Recover a tanh-family triangle entry through the polynomial bridge:
/// `theta(n,m) = (n!/(m-1)!) delta_{n-m}(n)` and
/// `Theta(n,m) = -(n!/(m-1)!) delta_{n-m}(-m)`.
///
/// The tanh form evaluates at the negative argument `-m`, which is exactly
/// the duality `theta(n,m) = Theta(-m,-n)` read through the quotient
/// definition. The diagonal `n = m` uses the `k = 0` product form and gives 1.
pub fn entry_via_poly(
    tri: &TriangleSet,
    family: FamilyId,
    n: usize,
    m: usize,
) -> Result<Rational, PolyError> {
    if !matches!(family, FamilyId::ArcTanh | FamilyId::Tanh) {
        return Err(PolyError::UnsupportedFamily(family));
    }
    assert!(
        (1..=n).contains(&m),
        "entry_via_poly requires 1 <= m <= n"
    );
    let k = n - m;
    let prefactor = rat_int(factorial(n as u64)) / rat_int(factorial(m as u64 - 1));
    if k == 0 {
        // (n!/(n-1)!) * delta_0 at the pair level: x*delta_0(x) = 1 at x = n
        // for theta, x = -m with the leading minus for Theta; both give 1.
        return Ok(Rational::one());
    }
    let delta = tanh_poly(tri, k)?;
    let value = match family {
        FamilyId::ArcTanh => prefactor * delta.eval_int(n as i64),
        _ => -(prefactor * delta.eval_int(-(m as i64))),
    };
    Ok(value)
}

/// The generating-function identities for the polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfCheck {
    /// `sum_k x delta_k(x) u^k = (u coth u)^x`
    CothPower,
    /// `sum_k x delta_k(k+x) u^k = ((1/u) arctanh u)^x`
    ArcTanhPower,
    /// `sum_k x lambda_k(x) u^k = (1+u)^x`
    LahBinomial,
    /// `sum_k x lambda_k(k+x) u^k = (1-u)^(-x)`
    LahNegative,
}

impl GfCheck {
    pub const ALL: [GfCheck; 4] = [
        GfCheck::CothPower,
        GfCheck::ArcTanhPower,
        GfCheck::LahBinomial,
        GfCheck::LahNegative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfCheck::CothPower => "coth-power",
            GfCheck::ArcTanhPower => "arctanh-power",
            GfCheck::LahBinomial => "lah-binomial",
            GfCheck::LahNegative => "lah-negative",
        }
    }
}

/// Compare, coefficient by coefficient up to `order`, the polynomial-side
/// sum of a generating-function identity against the series-kernel closed
/// form, at a positive integer `x`.
pub fn gf_check(
    tri: &TriangleSet,
    which: GfCheck,
    x: u32,
    order: usize,
) -> Result<IdentityReport, PolyError> {
    assert!(x >= 1, "gf_check requires x >= 1");
    let mut report = IdentityReport::new(format!("gf/{} x={x}", which.name()));
    let xr = rat_int(Int::from(x));

    // polynomial side: coefficient of u^k
    let mut lhs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let c = if k == 0 {
            Rational::one() // x * poly_0(x) = 1 in product form
        } else {
            match which {
                GfCheck::CothPower => &xr * tanh_poly(tri, k)?.eval(&xr),
                GfCheck::ArcTanhPower => {
                    &xr * tanh_poly(tri, k)?.eval_int(k as i64 + x as i64)
                }
                GfCheck::LahBinomial => &xr * lah_poly(k)?.eval(&xr),
                GfCheck::LahNegative => &xr * lah_poly(k)?.eval_int(k as i64 + x as i64),
            }
        };
        lhs.push(c);
    }

    // series side
    let one = PowerSeries::one(order);
    let u = PowerSeries::x(order);
    let rhs = match which {
        GfCheck::CothPower => u_coth_u(order).pow_int(x),
        GfCheck::ArcTanhPower => arctanh(order + 1)
            .shift_down(1)
            .expect("arctanh has zero constant term")
            .pow_int(x),
        GfCheck::LahBinomial => (&one + &u).pow_int(x),
        GfCheck::LahNegative => (&one - &u)
            .pow_int(x)
            .recip()
            .expect("(1-u)^x has constant term 1")
            .truncated(order),
    };

    for (k, l) in lhs.iter().enumerate() {
        report.check(format!("u^{k}"), l.clone(), rhs.coeff(k).clone());
    }
    Ok(report)
}

/// One computed-vs-closed-form pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuePair {
    pub computed: Rational,
    pub expected: Rational,
}

impl ValuePair {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

/// The special values of `delta_k` against their closed forms:
/// `delta_k(1) = 2^k B_k/k! + [k=1]`, `k delta_k(0) = 2^k(2^k-2) B_k/k!`,
/// `delta_k(-1) = -Theta_{k+1}/(k+1)!`, and for even `k = 2j`
/// `delta_k(k+1) = 1/(k+1)`.
#[derive(Debug, Clone)]
pub struct SpecialValues {
    pub at_one: ValuePair,
    pub k_at_zero: ValuePair,
    pub at_minus_one: ValuePair,
    /// Only meaningful for even `k` (the odd case is the zero polynomial).
    pub at_succ: Option<ValuePair>,
}

impl SpecialValues {
    pub fn all_match(&self) -> bool {
        self.at_one.matches()
            && self.k_at_zero.matches()
            && self.at_minus_one.matches()
            && self.at_succ.as_ref().is_none_or(ValuePair::matches)
    }
}

pub fn special_values(tri: &TriangleSet, k: usize) -> Result<SpecialValues, PolyError> {
    assert!(k >= 1, "special values start at k = 1");
    let d = tanh_poly(tri, k)?;
    let b = bernoulli(k);
    let kf = rat_int(factorial(k as u64));
    let two_k = rat_int(pow2(k as u64));
    let at_one = ValuePair {
        computed: d.eval_int(1),
        expected: &two_k * &b / &kf
            + if k == 1 { Rational::one() } else { Rational::zero() },
    };
    let k_at_zero = ValuePair {
        computed: rat_int(Int::from(k)) * d.eval_int(0),
        expected: &two_k * (&two_k - rat_int(Int::from(2))) * &b / &kf,
    };
    let at_minus_one = ValuePair {
        computed: d.eval_int(-1),
        expected: -rat_int(tanh_number(k + 1)) / rat_int(factorial(k as u64 + 1)),
    };
    let at_succ = (k % 2 == 0).then(|| ValuePair {
        computed: d.eval_int(k as i64 + 1),
        expected: Rational::one() / rat_int(Int::from(k + 1)),
    });
    Ok(SpecialValues {
        at_one,
        k_at_zero,
        at_minus_one,
        at_succ,
    })
}
