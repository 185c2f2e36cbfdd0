//! Named verification suites.
//!
//! Each suite exercises one block of exact identities over its standard
//! range and returns an [`IdentityReport`] carrying every check and any
//! witnessing mismatch. The CLI `verify` subcommand and the acceptance test
//! target both run these; the ranges default to the values the acceptance
//! criteria pin down.
//!
//! Randomized inputs (round-trip vectors, matched cumulant pairs) come from
//! a fixed-seed generator so every run checks the same instances.

use std::ops::Neg;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use num_traits::{One, Zero};

use crate::conversions::{
    apply_sequence, convert_entry, corollary_sum, corollary_target, m1_identity,
    orthogonality_check, ConversionRule, CorollaryVariant, InversePair, M1Identity,
};
use crate::cumulants::{
    match_nb_to_sg, nb_cumulants, poisson_limit_check, reciprocity_check, sg_cumulants,
    NegBinParams,
};
use crate::polynomials::{
    binomial_poly_shifted, diagonal_poly, divide_exact, falling_factorial, gf_check, lah_poly,
    special_values, stirling_poly, tanh_poly, entry_via_poly, GfCheck, Polynomial,
};
use crate::rational::{factorial, rat, rat_int, Int, Rational};
use crate::report::IdentityReport;
use crate::series::{family_egf, FamilyId};
use crate::triangles::TriangleSet;

const SEED: u64 = 0x5717_1a4b_0c3d_2e1f;

/// Orthogonality of all three inverse pairs, both product orders.
pub fn orthogonality_suite(tri: &TriangleSet, n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("orthogonality n<={n_max}"));
    for pair in InversePair::ALL {
        report.absorb(orthogonality_check(tri, pair, n_max));
    }
    report
}

/// Every triangle entry against `n! [u^n]` of its column EGF.
pub fn egf_suite(tri: &TriangleSet, n_max: usize, m_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new(format!("egf-oracle n<={n_max}, m<={m_max}"));
    for family in FamilyId::ALL {
        for m in 0..=m_max {
            let egf = family_egf(family, m, n_max);
            for n in 0..=n_max {
                let via_series = egf.egf_coeff(n);
                report.check(
                    format!("{family} n={n},m={m}"),
                    via_series,
                    rat_int(tri.entry(family, n, m as usize)),
                );
            }
        }
    }
    report
}

/// The eight conversion rules against their target triangles, plus the
/// rule/partner round trip on fixed-seed random integer vectors.
pub fn table2_suite(tri: &TriangleSet, n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("table2 n<={n_max}"));
    for rule in ConversionRule::ALL {
        for n in 0..=n_max {
            for m in 0..=n {
                report.check(
                    format!("{rule} n={n},m={m}"),
                    convert_entry(tri, rule, n, m).expect("m <= n"),
                    tri.entry(rule.target(), n, m),
                );
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for trial in 0..20 {
        let len = rng.gen_range(1..=12);
        let seq: Vec<Int> = (0..len).map(|_| Int::from(rng.gen_range(-99..=99))).collect();
        let rule = ConversionRule::ALL[trial % ConversionRule::ALL.len()];
        let transformed = apply_sequence(tri, rule, &seq);
        let back = apply_sequence(tri, rule.partner(), &transformed);
        report.check_that(
            format!("round-trip {rule} trial={trial} len={len}"),
            back == seq,
            format!("{back:?} != {seq:?}"),
        );
    }
    report
}

/// All four diagonal-sum variants of the corollary.
pub fn corollary_suite(tri: &TriangleSet, n_max: usize, k_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("corollary n<={n_max}, k<={k_max}"));
    for variant in CorollaryVariant::ALL {
        for n in 0..=n_max {
            for k in 0..=k_max.min(n) {
                report.check(
                    format!("{} n={n},k={k}", variant.name()),
                    corollary_sum(tri, variant, n, k),
                    corollary_target(tri, variant, n, k),
                );
            }
        }
    }
    report
}

/// The whole m = 1 identity family on its parity domains.
pub fn m1_suite(tri: &TriangleSet, n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("m1 n<={n_max}"));
    for id in M1Identity::ALL {
        for n in 1..=n_max {
            if !id.applies_to(n) {
                continue;
            }
            let (lhs, rhs) = m1_identity(tri, id, n);
            report.check(format!("{id} n={n}"), lhs, rhs);
        }
    }
    report
}

/// Degree and leading-coefficient laws, the explicit small tanh polynomials,
/// the tanh-polynomial recurrence, the odd-sum zero identity, the signed
/// inverse of the binomial convolution, the Lah duality, and the polynomial
/// bridge back to the triangles.
pub fn polynomials_suite(tri: &TriangleSet, k_max: usize, bridge_n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("polynomials k<={k_max}"));

    // degree 3j and leading 1/(3^j j!) resp. (-1)^j/(3^j j!) for the
    // interpolated diagonals theta(x,x-k), Theta(x+k,x), k = 2j
    for j in 1..=(k_max / 2) {
        let k = 2 * j;
        let lead = Rational::one() / rat_int(Int::from(3).pow(j as u32) * factorial(j as u64));
        match diagonal_poly(tri, FamilyId::ArcTanh, k) {
            Ok(p) => {
                report.check(format!("deg theta-diag k={k}"), fmt_deg(&p), format!("{}", 3 * j));
                report.check(
                    format!("lead theta-diag k={k}"),
                    p.leading().cloned().unwrap_or_else(Rational::zero),
                    lead.clone(),
                );
            }
            Err(e) => report.check_that(format!("theta-diag k={k}"), false, e.to_string()),
        }
        match diagonal_poly(tri, FamilyId::Tanh, k) {
            Ok(p) => {
                let expect = if j % 2 == 0 { lead.clone() } else { -lead.clone() };
                report.check(format!("deg Theta-diag k={k}"), fmt_deg(&p), format!("{}", 3 * j));
                report.check(
                    format!("lead Theta-diag k={k}"),
                    p.leading().cloned().unwrap_or_else(Rational::zero),
                    expect,
                );
            }
            Err(e) => report.check_that(format!("Theta-diag k={k}"), false, e.to_string()),
        }
    }

    // explicit small delta polynomials
    let explicit: [(usize, &[(i64, i64)]); 3] = [
        (2, &[(1, 3)]),
        (4, &[(-7, 90), (1, 18)]),
        (6, &[(62, 2835), (-7, 270), (1, 162)]),
    ];
    for (k, coeffs) in explicit {
        let expect = Polynomial::new(coeffs.iter().map(|&(p, q)| rat(p, q)).collect());
        match tanh_poly(tri, k) {
            Ok(d) => report.check_that(
                format!("delta_{k} explicit"),
                d == expect,
                format!("{d} != {expect}"),
            ),
            Err(e) => report.check_that(format!("delta_{k}"), false, e.to_string()),
        }
    }

    // delta_k degree law: zero for odd k, degree k/2 - 1 for even k > 0
    for k in 1..=k_max {
        match tanh_poly(tri, k) {
            Ok(d) => {
                let expect = if k % 2 == 1 {
                    "zero".to_string()
                } else if k == 2 {
                    "0".to_string() // constant 1/3
                } else {
                    format!("{}", k / 2 - 1)
                };
                let got = if d.is_zero() {
                    "zero".to_string()
                } else {
                    fmt_deg(&d)
                };
                report.check(format!("deg delta_{k}"), got, expect);
            }
            Err(e) => report.check_that(format!("delta_{k}"), false, e.to_string()),
        }
    }

    // recurrence (x+1) d_k(x+1) = (x-k) d_k(x) + (x-1) d_{k-2}(x-1)
    for k in 2..=k_max {
        let ok = (|| -> Result<bool, crate::polynomials::PolyError> {
            let dk = tanh_poly(tri, k)?;
            let x_plus_1 = Polynomial::new(vec![Rational::one(), Rational::one()]);
            let lhs = x_plus_1.mul(&dk.shifted(1));
            let tail = if k == 2 {
                Polynomial::one()
            } else {
                let x_minus_1 = Polynomial::new(vec![-Rational::one(), Rational::one()]);
                x_minus_1.mul(&tanh_poly(tri, k - 2)?.shifted(-1))
            };
            let x_minus_k = Polynomial::new(vec![rat(-(k as i64), 1), Rational::one()]);
            Ok(lhs == x_minus_k.mul(&dk).add(&tail))
        })();
        match ok {
            Ok(b) => report.check_that(format!("recurrence k={k}"), b, "polynomial identity"),
            Err(e) => report.check_that(format!("recurrence k={k}"), false, e.to_string()),
        }
    }

    // odd-k sum of binomial-weighted Stirling polynomials is the zero
    // polynomial; the i = 0 term must be included (without it the sum is
    // -sigma_k, not zero)
    for j in 0..=(k_max.saturating_sub(1)) / 2 {
        let k = 2 * j + 1;
        match tanh_poly(tri, k) {
            Ok(d) => report.check_that(
                format!("odd-sum zero j={j}"),
                d.is_zero(),
                format!("sum = {d}"),
            ),
            Err(e) => report.check_that(format!("odd-sum j={j}"), false, e.to_string()),
        }
    }

    // signed inverse: sigma_k(x) = sum_i (-1)^i C(x-1,i) delta_{k-i}(x-i)
    for k in 1..=k_max.min(10) {
        let ok = (|| -> Result<bool, crate::polynomials::PolyError> {
            let mut acc = Polynomial::zero();
            for i in 0..k {
                let term = binomial_poly_shifted(-1, i)
                    .mul(&tanh_poly(tri, k - i)?.shifted(-(i as i64)));
                acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            let tail = binomial_poly_shifted(-1, k - 1)
                .scale(&(Rational::one() / rat_int(Int::from(k))));
            acc = if k % 2 == 0 { acc.add(&tail) } else { acc.sub(&tail) };
            Ok(acc == stirling_poly(tri, k)?)
        })();
        match ok {
            Ok(b) => report.check_that(format!("signed-inverse k={k}"), b, "polynomial identity"),
            Err(e) => report.check_that(format!("signed-inverse k={k}"), false, e.to_string()),
        }
    }

    // cross-route: delta_k from the binomial sum equals the direct quotient
    // of the interpolated theta diagonal
    for k in (2..=k_max).step_by(2) {
        let ok = (|| -> Result<bool, crate::polynomials::PolyError> {
            let diag = diagonal_poly(tri, FamilyId::ArcTanh, k)?;
            let q = divide_exact(&diag, &falling_factorial(k + 1))?;
            Ok(q == tanh_poly(tri, k)?)
        })();
        match ok {
            Ok(b) => report.check_that(format!("cross-route k={k}"), b, "routes agree"),
            Err(e) => report.check_that(format!("cross-route k={k}"), false, e.to_string()),
        }
    }

    // Lah duality lambda_k(k-x) = (-1)^(k+1) lambda_k(x)
    for k in 1..=k_max {
        match lah_poly(k) {
            Ok(l) => {
                let reflected = l.compose_linear(&rat(k as i64, 1), &rat(-1, 1));
                let expect = if k % 2 == 1 { l.clone() } else { (&l).neg() };
                report.check_that(
                    format!("lah-duality k={k}"),
                    reflected == expect,
                    "reflection law",
                );
            }
            Err(e) => report.check_that(format!("lah-duality k={k}"), false, e.to_string()),
        }
    }

    // the polynomial bridge reproduces the triangles
    for n in 1..=bridge_n_max {
        for m in 1..=n {
            for family in [FamilyId::ArcTanh, FamilyId::Tanh] {
                match entry_via_poly(tri, family, n, m) {
                    Ok(v) => report.check(
                        format!("bridge {family} n={n},m={m}"),
                        v,
                        rat_int(tri.entry(family, n, m)),
                    ),
                    Err(e) => {
                        report.check_that(format!("bridge {family} n={n},m={m}"), false, e.to_string())
                    }
                }
            }
        }
    }

    report
}

fn fmt_deg(p: &Polynomial) -> String {
    match p.degree() {
        Some(d) => format!("{d}"),
        None => "zero".to_string(),
    }
}

/// Generating-function identities for the polynomial families, plus the
/// special values of the tanh polynomials.
pub fn gf_suite(
    tri: &TriangleSet,
    x_max: u32,
    tanh_order: usize,
    lah_order: usize,
    special_k_max: usize,
) -> IdentityReport {
    let mut report = IdentityReport::new(format!(
        "gf x<={x_max}, orders {tanh_order}/{lah_order}"
    ));
    for x in 1..=x_max {
        for which in GfCheck::ALL {
            let order = match which {
                GfCheck::CothPower | GfCheck::ArcTanhPower => tanh_order,
                _ => lah_order,
            };
            match gf_check(tri, which, x, order) {
                Ok(r) => report.absorb(r),
                Err(e) => {
                    report.check_that(format!("{} x={x}", which.name()), false, e.to_string())
                }
            }
        }
    }
    for k in 1..=special_k_max {
        match special_values(tri, k) {
            Ok(sv) => {
                report.check(format!("delta_{k}(1)"), sv.at_one.computed, sv.at_one.expected);
                report.check(
                    format!("k delta_{k}(0)"),
                    sv.k_at_zero.computed,
                    sv.k_at_zero.expected,
                );
                report.check(
                    format!("delta_{k}(-1)"),
                    sv.at_minus_one.computed,
                    sv.at_minus_one.expected,
                );
                if let Some(pair) = sv.at_succ {
                    report.check(format!("delta_{k}({})", k + 1), pair.computed, pair.expected);
                }
            }
            Err(e) => report.check_that(format!("special k={k}"), false, e.to_string()),
        }
    }
    report
}

/// Fixed-seed random rationals with small numerators and denominators.
fn random_rational(rng: &mut StdRng, positive: bool) -> Rational {
    let num = if positive {
        rng.gen_range(1..=12)
    } else {
        rng.gen_range(-12..=12)
    };
    let den = rng.gen_range(1..=12);
    rat(num, den)
}

/// Matched-pair cumulant agreement, Theorem-2 reciprocity with the
/// coefficient-level system, and the equivalence with the Table-2 rule
/// `S2bar = sum Theta lbar` run on the same index range.
pub fn cumulants_suite(tri: &TriangleSet, n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("cumulants n<={n_max}"));
    let mut rng = StdRng::seed_from_u64(SEED ^ 0xc0ff_ee00);

    for trial in 0..20 {
        let r = random_rational(&mut rng, true);
        let lambda = random_rational(&mut rng, true);
        let p = NegBinParams::new(r.clone(), lambda.clone()).expect("positive by construction");
        let sg = match_nb_to_sg(&p).expect("lambda > 0");
        let g = sg_cumulants(&sg, 4);
        let e = nb_cumulants(tri, &p, 4);
        for n in 1..=3 {
            report.check(
                format!("match trial={trial} kappa({n})"),
                g.nth(n).clone(),
                e.nth(n).clone(),
            );
        }
        report.check_that(
            format!("match trial={trial} kappa(4) differs"),
            g.nth(4) != e.nth(4),
            format!("both fourth cumulants equal {}", g.nth(4)),
        );
        if trial < 3 {
            match reciprocity_check(tri, &p, n_max) {
                Ok(r) => report.absorb(r),
                Err(e) => report.check_that(format!("reciprocity trial={trial}"), false, e.to_string()),
            }
        }
    }

    // equivalence: the coefficient-level system above passes iff the
    // Table-2 rule S2bar(n,m) = sum_i Theta(n,i) lbar(i,m) does; run the
    // rule on the same range so both sides of the equivalence are exercised
    for n in 0..=n_max {
        for m in 0..=n {
            report.check(
                format!("equivalence rule n={n},m={m}"),
                convert_entry(tri, ConversionRule::Stirling2FromTanh, n, m).expect("m <= n"),
                tri.entry(FamilyId::StirlingSecondScaled, n, m),
            );
        }
    }
    report
}

/// The Poisson limit reduction for several alpha values.
pub fn poisson_suite(tri: &TriangleSet, n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(format!("poisson n<={n_max}"));
    for alpha in [rat(1, 1), rat(1, 2), rat(3, 1)] {
        match poisson_limit_check(tri, &alpha, n_max) {
            Ok(r) => report.absorb(r),
            Err(e) => report.check_that(format!("alpha={alpha}"), false, e.to_string()),
        }
    }
    report
}

/// Suite selector used by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orthogonality,
    Egf,
    Table2,
    Corollary,
    M1,
    Polynomials,
    Gf,
    Cumulants,
    Poisson,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Orthogonality,
        Suite::Egf,
        Suite::Table2,
        Suite::Corollary,
        Suite::M1,
        Suite::Polynomials,
        Suite::Gf,
        Suite::Cumulants,
        Suite::Poisson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Egf => "egf",
            Suite::Table2 => "table2",
            Suite::Corollary => "corollary",
            Suite::M1 => "m1",
            Suite::Polynomials => "polynomials",
            Suite::Gf => "gf",
            Suite::Cumulants => "cumulants",
            Suite::Poisson => "poisson",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// Run the suite; `n_max` overrides the suite's primary range (the
    /// acceptance default is used when absent).
    pub fn run(self, tri: &TriangleSet, n_max: Option<usize>) -> IdentityReport {
        match self {
            Suite::Orthogonality => orthogonality_suite(tri, n_max.unwrap_or(40)),
            Suite::Egf => egf_suite(tri, n_max.unwrap_or(24), 8),
            Suite::Table2 => table2_suite(tri, n_max.unwrap_or(30)),
            Suite::Corollary => corollary_suite(tri, n_max.unwrap_or(20), 10),
            Suite::M1 => m1_suite(tri, n_max.unwrap_or(25)),
            Suite::Polynomials => {
                let k = n_max.unwrap_or(12).max(2);
                polynomials_suite(tri, k, 20.min(k + 8))
            }
            Suite::Gf => {
                let order = n_max.unwrap_or(16);
                gf_suite(tri, 5, order, order.min(12), 12.min(order))
            }
            Suite::Cumulants => cumulants_suite(tri, n_max.unwrap_or(12)),
            Suite::Poisson => poisson_suite(tri, n_max.unwrap_or(15)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_reduced_ranges() {
        let tri = TriangleSet::new();
        for suite in Suite::ALL {
            let report = suite.run(&tri, Some(6));
            assert!(report.passed(), "{report}");
        }
    }
}
