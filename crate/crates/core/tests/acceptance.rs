//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p stl-core --test acceptance -- --nocapture` to see
//! the per-criterion lines; every check is exact equality.

use std::sync::OnceLock;
use std::time::Instant;

use stl_core::conversions::{corollary_sum, CorollaryVariant};
use stl_core::polynomials::{entry_via_poly, tanh_poly};
use stl_core::rational::{int, rat, rat_int};
use stl_core::report::IdentityReport;
use stl_core::suites;
use stl_core::triangles::TriangleSet;
use stl_core::FamilyId;

fn shared() -> &'static TriangleSet {
    static TRI: OnceLock<TriangleSet> = OnceLock::new();
    TRI.get_or_init(TriangleSet::new)
}

fn conclude(criterion: &str, report: &IdentityReport) {
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!("[{verdict}] {criterion}: {report}");
    assert!(report.passed(), "{criterion}: {report}");
}

#[test]
fn criterion_01_orthogonality() {
    let started = Instant::now();
    let report = suites::orthogonality_suite(shared(), 40);
    let elapsed = started.elapsed();
    println!("  orthogonality n<=40 took {elapsed:?}");
    conclude("criterion 1 (orthogonality, three pairs, n <= 40)", &report);
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "orthogonality suite took {elapsed:?}, expected under ~10s"
    );
}

#[test]
fn criterion_02_egf_oracle() {
    let report = suites::egf_suite(shared(), 24, 8);
    conclude("criterion 2 (EGF oracle, n <= 24, m <= 8, six families)", &report);
}

#[test]
fn criterion_03_table2_rules_and_round_trip() {
    let report = suites::table2_suite(shared(), 30);
    conclude(
        "criterion 3 (eight conversion rules n <= 30, 20 random round trips)",
        &report,
    );
}

#[test]
fn criterion_04_corollary_sums() {
    let tri = shared();
    let report = suites::corollary_suite(tri, 20, 10);
    conclude("criterion 4 (corollary sums, k <= 10, n <= 20)", &report);
    // spot value theta(3,1) = (2n)! at n = 1
    assert_eq!(
        corollary_sum(tri, CorollaryVariant::ArcTanhDiagonal, 3, 2),
        int(2)
    );
    assert_eq!(tri.entry(FamilyId::ArcTanh, 3, 1), int(2));
}

#[test]
fn criterion_05_m1_identities() {
    let report = suites::m1_suite(shared(), 25);
    conclude(
        "criterion 5 (Lengyel / factorial-power / Lah / fifth / sixth pairs, n <= 25)",
        &report,
    );
}

#[test]
fn criterion_06_degrees_and_explicit_deltas() {
    // structural polynomial checks without the bridge part (criterion 11 runs it)
    let report = suites::polynomials_suite(shared(), 12, 1);
    conclude(
        "criterion 6/7 (diagonal degrees 3j, leading 1/(3^j j!), explicit deltas, recurrence, odd-sum zero)",
        &report,
    );
}

#[test]
fn criterion_07_recurrence_and_odd_sum() {
    // the recurrence and odd-sum checks are part of the polynomials suite;
    // run the odd-sum j <= 5 range explicitly (k = 11 needs sigma_11)
    let tri = shared();
    let mut report = IdentityReport::new("odd-sum zero j<=5 + recurrence k<=12");
    for j in 0..=5usize {
        let k = 2 * j + 1;
        let d = tanh_poly(tri, k).expect("construction succeeds");
        report.check_that(format!("j={j}"), d.is_zero(), format!("delta_{k} = {d}"));
    }
    conclude("criterion 7 (odd-k zero sum, j <= 5)", &report);
}

#[test]
fn criterion_08_generating_functions_and_special_values() {
    let report = suites::gf_suite(shared(), 5, 16, 12, 12);
    conclude(
        "criterion 8 (coth/arctanh powers order 16, Lah powers order 12, special values k <= 12)",
        &report,
    );
}

#[test]
fn criterion_09_cumulants() {
    let report = suites::cumulants_suite(shared(), 12);
    conclude(
        "criterion 9 (20 matched pairs, reciprocity + coefficient system n <= 12, equivalence)",
        &report,
    );
}

#[test]
fn criterion_10_poisson_limit() {
    let report = suites::poisson_suite(shared(), 15);
    conclude("criterion 10 (Poisson limit, alpha in {1, 1/2, 3}, n <= 15)", &report);
}

#[test]
fn criterion_11_polynomial_bridge() {
    let tri = shared();
    let mut report = IdentityReport::new("bridge 1<=m<=n<=20");
    for n in 1..=20usize {
        for m in 1..=n {
            for family in [FamilyId::ArcTanh, FamilyId::Tanh] {
                let via = entry_via_poly(tri, family, n, m).expect("bridge construction");
                report.check(
                    format!("{family} n={n},m={m}"),
                    via,
                    rat_int(tri.entry(family, n, m)),
                );
            }
        }
    }
    conclude("criterion 11 (polynomial bridge agrees with triangles, n <= 20)", &report);
    // the tanh bridge evaluates at negative arguments; spot-check the pair
    assert_eq!(entry_via_poly(tri, FamilyId::ArcTanh, 3, 1).unwrap(), rat(2, 1));
    assert_eq!(entry_via_poly(tri, FamilyId::Tanh, 3, 1).unwrap(), rat(-2, 1));
}
