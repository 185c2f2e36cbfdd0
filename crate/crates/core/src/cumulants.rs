//! Exact cumulants of shifted-gamma densities and negative binomial
//! distributions, three-cumulant matching, and the reciprocal linear
//! relations tying the matched pair's cumulant sequences together.
//!
//! Everything is computed symbolically in exact rationals from the
//! parameters; no sampling and no density evaluation. The claims being
//! checked are algebraic identities in the cumulants:
//!
//! * shifted gamma: `gamma(1) = -c + ab`, `gamma(n) = (n-1)! a b^n`;
//! * negative binomial: `eta(n) = sum_m r (m-1)! 2^(m-n) S2bar(n,m) lambda^m`;
//! * matching (first three cumulants equal) pins
//!   `a = r lambda(1+lambda)/(1/2+lambda)^2`, `b = 1/2 + lambda`,
//!   `c = r lambda/(1+2lambda)`, inverted by `r = ab^2/(b^2 - 1/4)`,
//!   `lambda = b - 1/2`;
//! * on the scaled vectors `2^n kappa(n) / r`, the arctanh triangle carries
//!   eta to gamma and the tanh triangle carries gamma back;
//! * as `lambda -> 0` with `r lambda = alpha` fixed, the relations collapse
//!   to the factorial/power-of-two inversion pair.
//!
//! The scaled relations are linear in `1/r`, so the Poisson limit is checked
//! on `r`-scaled vectors (`2^n kappa(n)`), which stay finite as `r` grows.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{factorial, pow2, rat_int, Int, Rational};
use crate::report::IdentityReport;
use crate::series::FamilyId;
use crate::triangles::TriangleSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CumulantError {
    /// Shape and scale of the shifted gamma must be positive.
    InvalidGammaParams(String),
    /// `r > 0` and `lambda >= 0` for the negative binomial.
    InvalidNegBinParams(String),
    /// Matching with `lambda = 0` would produce a degenerate (a = 0) gamma.
    DegenerateMatch,
    /// Backward matching needs `b > 1/2`.
    ScaleNotMatchable(Rational),
    /// The Poisson limit needs `alpha > 0`.
    NonPositiveAlpha(Rational),
}

impl fmt::Display for CumulantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CumulantError::InvalidGammaParams(msg) => {
                write!(f, "invalid shifted-gamma parameters: {msg}")
            }
            CumulantError::InvalidNegBinParams(msg) => {
                write!(f, "invalid negative binomial parameters: {msg}")
            }
            CumulantError::DegenerateMatch => {
                write!(f, "matching requires lambda > 0 (lambda = 0 degenerates to a = 0)")
            }
            CumulantError::ScaleNotMatchable(b) => {
                write!(f, "matching requires scale b > 1/2, got b = {b}")
            }
            CumulantError::NonPositiveAlpha(a) => {
                write!(f, "Poisson limit requires alpha > 0, got {a}")
            }
        }
    }
}

impl std::error::Error for CumulantError {}

/// Parameters of the shifted-gamma density (gamma translated by `-c`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedGammaParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl ShiftedGammaParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, CumulantError> {
        if !a.is_positive() {
            return Err(CumulantError::InvalidGammaParams(format!("shape a = {a} <= 0")));
        }
        if !b.is_positive() {
            return Err(CumulantError::InvalidGammaParams(format!("scale b = {b} <= 0")));
        }
        Ok(ShiftedGammaParams { a, b, c })
    }
}

/// Parameters of the negative binomial distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegBinParams {
    pub r: Rational,
    pub lambda: Rational,
}

impl NegBinParams {
    pub fn new(r: Rational, lambda: Rational) -> Result<Self, CumulantError> {
        if !r.is_positive() {
            return Err(CumulantError::InvalidNegBinParams(format!("r = {r} <= 0")));
        }
        if lambda.is_negative() {
            return Err(CumulantError::InvalidNegBinParams(format!(
                "lambda = {lambda} < 0"
            )));
        }
        Ok(NegBinParams { r, lambda })
    }
}

/// A finite sequence of exact cumulants; `values[n-1]` is the n-th cumulant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantVector {
    values: Vec<Rational>,
    scaled: bool,
}

impl CumulantVector {
    pub fn from_values(values: Vec<Rational>) -> Self {
        CumulantVector {
            values,
            scaled: false,
        }
    }

    /// The n-th cumulant, 1-indexed.
    pub fn nth(&self, n: usize) -> &Rational {
        &self.values[n - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_scaled(&self) -> bool {
        self.scaled
    }

    /// The scaled vector `kappa_bar(n) = 2^n kappa(n) / r`.
    pub fn scaled_by(&self, r: &Rational) -> CumulantVector {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| v * rat_int(pow2(i as u64 + 1)) / r)
            .collect();
        CumulantVector {
            values,
            scaled: true,
        }
    }
}

/// First `n_max` cumulants of the shifted gamma:
/// `gamma(1) = -c + ab`, `gamma(n) = (n-1)! a b^n` for `n > 1`.
pub fn sg_cumulants(p: &ShiftedGammaParams, n_max: usize) -> CumulantVector {
    assert!(n_max >= 1);
    let mut values = Vec::with_capacity(n_max);
    let mut b_pow = p.b.clone();
    values.push(-&p.c + &p.a * &b_pow);
    for n in 2..=n_max {
        b_pow *= &p.b;
        values.push(rat_int(factorial(n as u64 - 1)) * &p.a * &b_pow);
    }
    CumulantVector::from_values(values)
}

/// First `n_max` cumulants of the negative binomial via the scaled subset
/// triangle: `eta(n) = sum_{m=1..n} r (m-1)! 2^(m-n) S2bar(n,m) lambda^m`.
pub fn nb_cumulants(tri: &TriangleSet, p: &NegBinParams, n_max: usize) -> CumulantVector {
    assert!(n_max >= 1);
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = Rational::zero();
        let mut lam_pow = Rational::one();
        for m in 1..=n {
            lam_pow *= &p.lambda;
            let s = tri.entry(FamilyId::StirlingSecondScaled, n, m);
            // 2^(m-n) with m <= n: an exact rational with power-of-two denominator
            let scale = Rational::new(Int::one(), pow2((n - m) as u64));
            acc += rat_int(factorial(m as u64 - 1)) * scale * rat_int(s) * &lam_pow;
        }
        values.push(&p.r * acc);
    }
    CumulantVector::from_values(values)
}

/// Matching conditions, forward direction: the shifted gamma sharing its
/// first three cumulants with `nb(r, lambda)`. Requires `lambda > 0`.
pub fn match_nb_to_sg(p: &NegBinParams) -> Result<ShiftedGammaParams, CumulantError> {
    if p.lambda.is_zero() {
        return Err(CumulantError::DegenerateMatch);
    }
    let half = Rational::new(Int::one(), Int::from(2));
    let b = &half + &p.lambda;
    let a = &p.r * &p.lambda * (Rational::one() + &p.lambda) / (&b * &b);
    let c = &p.r * &p.lambda
        / (Rational::one() + rat_int(Int::from(2)) * &p.lambda);
    ShiftedGammaParams::new(a, b, c)
}

/// Matching conditions, backward direction: `r = ab^2/(b^2 - 1/4)`,
/// `lambda = b - 1/2`. Requires `b > 1/2`.
pub fn match_sg_to_nb(p: &ShiftedGammaParams) -> Result<NegBinParams, CumulantError> {
    let half = Rational::new(Int::one(), Int::from(2));
    if p.b <= half {
        return Err(CumulantError::ScaleNotMatchable(p.b.clone()));
    }
    let quarter = Rational::new(Int::one(), Int::from(4));
    let b2 = &p.b * &p.b;
    let r = &p.a * &b2 / (&b2 - quarter);
    let lambda = &p.b - half;
    NegBinParams::new(r, lambda)
}

/// Which cumulant sequence a coefficient row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CumulantSide {
    /// Shifted gamma, coefficients
    /// `gamma(n,m) = 2^m (m-1)! [lbar(n-1,m-1) + 2m lbar(n-1,m)]`.
    Gamma,
    /// Negative binomial, coefficients `eta(n,m) = 2^m (m-1)! S2bar(n,m)`.
    Eta,
}

impl CumulantSide {
    pub fn name(self) -> &'static str {
        match self {
            CumulantSide::Gamma => "gamma",
            CumulantSide::Eta => "eta",
        }
    }
}

/// Coefficients `[kappa(n,1), ..., kappa(n,n)]` of the scaled cumulant as a
/// polynomial in lambda: `kappa_bar(n) = sum_m kappa(n,m) lambda^m`.
///
/// The n = 1 gamma row relies on the corrected Lah row-zero initial
/// condition (`lbar(0,0) = 1`), which reproduces `gamma_bar(1) = 2 lambda`.
pub fn cumulant_coeffs(tri: &TriangleSet, side: CumulantSide, n: usize) -> Vec<Rational> {
    assert!(n >= 1);
    (1..=n)
        .map(|m| {
            let weight = rat_int(pow2(m as u64) * factorial(m as u64 - 1));
            let body = match side {
                CumulantSide::Gamma => {
                    let low = tri.entry_signed(FamilyId::LahLower, n - 1, m as isize - 1);
                    let high = tri.entry(FamilyId::LahLower, n - 1, m);
                    rat_int(low + Int::from(2 * m) * high)
                }
                CumulantSide::Eta => rat_int(tri.entry(FamilyId::StirlingSecondScaled, n, m)),
            };
            weight * body
        })
        .collect()
}

/// Verify both reciprocal linear relations on a matched pair, plus the
/// coefficient-level system obtained by equating like powers of lambda.
///
/// For `0 <= n <= n_max`:
/// `gamma_bar(n+1) = sum_i theta(n,i) eta_bar(i+1)` and
/// `eta_bar(n+1) = sum_i Theta(n,i) gamma_bar(i+1)`; and for
/// `0 <= m <= n <= n_max` the lambda-coefficient identities
/// `eta(n+1,m+1) = sum_i Theta(n,i) gamma(i+1,m+1)` and
/// `gamma(n+1,m+1) = sum_i theta(n,i) eta(i+1,m+1)`.
pub fn reciprocity_check(
    tri: &TriangleSet,
    p: &NegBinParams,
    n_max: usize,
) -> Result<IdentityReport, CumulantError> {
    let sg = match_nb_to_sg(p)?;
    let mut report = IdentityReport::new(format!(
        "reciprocity r={}, lambda={}, n<={n_max}",
        p.r, p.lambda
    ));

    let gam = sg_cumulants(&sg, n_max + 1).scaled_by(&p.r);
    let eta = nb_cumulants(tri, p, n_max + 1).scaled_by(&p.r);
    for n in 0..=n_max {
        let mut to_gamma = Rational::zero();
        let mut to_eta = Rational::zero();
        for i in 0..=n {
            let th = tri.entry(FamilyId::ArcTanh, n, i);
            let tt = tri.entry(FamilyId::Tanh, n, i);
            to_gamma += rat_int(th) * eta.nth(i + 1);
            to_eta += rat_int(tt) * gam.nth(i + 1);
        }
        report.check(format!("gamma({}) n={n}", n + 1), gam.nth(n + 1).clone(), to_gamma);
        report.check(format!("eta({}) n={n}", n + 1), eta.nth(n + 1).clone(), to_eta);
    }

    // coefficient-level system: like powers of lambda on both sides
    let gamma_rows: Vec<Vec<Rational>> = (1..=n_max + 1)
        .map(|n| cumulant_coeffs(tri, CumulantSide::Gamma, n))
        .collect();
    let eta_rows: Vec<Vec<Rational>> = (1..=n_max + 1)
        .map(|n| cumulant_coeffs(tri, CumulantSide::Eta, n))
        .collect();
    let coeff = |rows: &[Vec<Rational>], n: usize, m: usize| -> Rational {
        rows[n - 1].get(m - 1).cloned().unwrap_or_else(Rational::zero)
    };
    for n in 0..=n_max {
        for m in 0..=n {
            let mut eta_side = Rational::zero();
            let mut gamma_side = Rational::zero();
            for i in m..=n {
                eta_side +=
                    rat_int(tri.entry(FamilyId::Tanh, n, i)) * coeff(&gamma_rows, i + 1, m + 1);
                gamma_side +=
                    rat_int(tri.entry(FamilyId::ArcTanh, n, i)) * coeff(&eta_rows, i + 1, m + 1);
            }
            report.check(
                format!("eta-coeff n={n},m={m}"),
                coeff(&eta_rows, n + 1, m + 1),
                eta_side,
            );
            report.check(
                format!("gamma-coeff n={n},m={m}"),
                coeff(&gamma_rows, n + 1, m + 1),
                gamma_side,
            );
        }
    }
    Ok(report)
}

/// The Poisson limit: `lambda -> 0` with `r lambda = alpha` fixed. The
/// negative binomial tends to Poisson (all cumulants `alpha`), the matched
/// gamma to `(4 alpha, 1/2, alpha)`, and on `r`-scaled vectors
/// (`2^n kappa(n)`, the `1/r` cancelling in the linear relations) the
/// reciprocity collapses to the inversion pair
/// `n! = sum_i theta(n,i) 2^(i-1)` and `2^(n-1) = sum_i Theta(n,i) i!`,
/// which is checked here both through the cumulant forms and directly.
pub fn poisson_limit_check(
    tri: &TriangleSet,
    alpha: &Rational,
    n_max: usize,
) -> Result<IdentityReport, CumulantError> {
    if !alpha.is_positive() {
        return Err(CumulantError::NonPositiveAlpha(alpha.clone()));
    }
    let mut report = IdentityReport::new(format!("poisson-limit alpha={alpha}, n<={n_max}"));

    // r-scaled limit vectors: eta_tilde(n) = 2^n alpha;
    // gamma_tilde(1) = 2 alpha, gamma_tilde(n) = 4 alpha (n-1)! for n > 1
    // (from gamma(n) = (n-1)! 4 alpha / 2^n at the limit parameters).
    let eta_t = |n: usize| rat_int(pow2(n as u64)) * alpha;
    let gam_t = |n: usize| {
        if n == 1 {
            rat_int(Int::from(2)) * alpha
        } else {
            rat_int(Int::from(4) * factorial(n as u64 - 1)) * alpha
        }
    };

    // limit gamma params are (4 alpha, 1/2, alpha): cross-check gamma_tilde
    let limit_sg = ShiftedGammaParams::new(
        rat_int(Int::from(4)) * alpha,
        Rational::new(Int::one(), Int::from(2)),
        alpha.clone(),
    )
    .expect("limit parameters are positive");
    let direct = sg_cumulants(&limit_sg, n_max + 1);
    for n in 1..=n_max + 1 {
        report.check(
            format!("limit-gamma n={n}"),
            rat_int(pow2(n as u64)) * direct.nth(n),
            gam_t(n),
        );
    }

    for n in 0..=n_max {
        let mut to_gamma = Rational::zero();
        let mut to_eta = Rational::zero();
        for i in 0..=n {
            to_gamma += rat_int(tri.entry(FamilyId::ArcTanh, n, i)) * eta_t(i + 1);
            to_eta += rat_int(tri.entry(FamilyId::Tanh, n, i)) * gam_t(i + 1);
        }
        report.check(format!("limit-reciprocal gamma n={n}"), gam_t(n + 1), to_gamma);
        report.check(format!("limit-reciprocal eta n={n}"), eta_t(n + 1), to_eta);
    }

    // the reduced inversion pair itself
    for n in 1..=n_max {
        let mut s1 = Rational::zero();
        let mut s2 = Rational::zero();
        for i in 1..=n {
            s1 += rat_int(tri.entry(FamilyId::ArcTanh, n, i) * pow2(i as u64 - 1));
            s2 += rat_int(tri.entry(FamilyId::Tanh, n, i) * factorial(i as u64));
        }
        report.check(format!("n! n={n}"), rat_int(factorial(n as u64)), s1);
        report.check(format!("2^(n-1) n={n}"), rat_int(pow2(n as u64 - 1)), s2);
    }
    Ok(report)
}
