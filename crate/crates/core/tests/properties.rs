//! Property tests: algebraic laws that should hold for arbitrary inputs,
//! not just the frozen examples.

use proptest::collection::vec;
use proptest::prelude::*;

use stl_core::conversions::{apply_sequence, ConversionRule};
use stl_core::polynomials::{divide_exact, interpolate, Polynomial};
use stl_core::rational::{rat, Int, Rational};
use stl_core::series::PowerSeries;
use stl_core::triangles::TriangleSet;

fn rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=8).prop_map(|(p, q)| rat(p, q))
}

fn series(order: usize) -> impl Strategy<Value = PowerSeries> {
    vec(rational(), order + 1).prop_map(PowerSeries::from_coeffs)
}

/// A series with zero constant term (the domain of exp/compose).
fn series_no_const(order: usize) -> impl Strategy<Value = PowerSeries> {
    vec(rational(), order).prop_map(|mut coeffs| {
        coeffs.insert(0, Rational::new(Int::from(0), Int::from(1)));
        PowerSeries::from_coeffs(coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        let ab_c = &(&a + &b) + &c;
        let a_bc = &a + &(&b + &c);
        prop_assert_eq!(ab_c, a_bc, "addition associativity");
        prop_assert_eq!(a.mul(&b), b.mul(&a), "multiplication commutativity");
        let left = a.mul(&(&b + &c));
        let right = &a.mul(&b) + &a.mul(&c);
        prop_assert_eq!(left, right, "distributivity");
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)), "multiplication associativity");
    }

    #[test]
    fn exp_log_are_inverse(a in series_no_const(6)) {
        let e = a.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), a);
    }

    #[test]
    fn log_exp_round_trip_on_unit_series(g in series_no_const(6)) {
        let one_plus_g = &PowerSeries::one(6) + &g;
        let l = one_plus_g.log().unwrap();
        prop_assert_eq!(l.exp().unwrap(), one_plus_g);
    }

    #[test]
    fn recip_multiplies_to_one(a in series(5), c in (1i64..=9, 1i64..=5).prop_map(|(p, q)| rat(p, q))) {
        // force a nonzero constant term
        let s = &PowerSeries::constant(c, 5) + &a.mul(&PowerSeries::x(5));
        let r = s.recip().unwrap();
        prop_assert_eq!(s.mul(&r), PowerSeries::one(5));
    }

    #[test]
    fn interpolation_passes_through_points(ys in vec(rational(), 1..=7)) {
        let points: Vec<(Rational, Rational)> = ys
            .iter()
            .enumerate()
            .map(|(i, y)| (rat(i as i64, 1), y.clone()))
            .collect();
        let p = interpolate(&points).unwrap();
        prop_assert!(p.degree().map_or(0, |d| d + 1) <= points.len());
        for (x, y) in &points {
            prop_assert_eq!(&p.eval(x), y);
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(
        pc in vec(rational(), 1..=5),
        qc in vec(rational(), 1..=4),
    ) {
        let p = Polynomial::new(pc);
        let q = Polynomial::new(qc);
        prop_assume!(!q.is_zero());
        let prod = p.mul(&q);
        prop_assert_eq!(divide_exact(&prod, &q).unwrap(), p);
    }

    #[test]
    fn conversion_round_trip(values in vec(-50i64..=50, 1..=12), rule_idx in 0usize..8) {
        let tri = TriangleSet::new();
        let seq: Vec<Int> = values.into_iter().map(Int::from).collect();
        let rule = ConversionRule::ALL[rule_idx];
        let there = apply_sequence(&tri, rule, &seq);
        let back = apply_sequence(&tri, rule.partner(), &there);
        prop_assert_eq!(back, seq);
    }

    #[test]
    fn polynomial_eval_is_ring_homomorphism(
        pc in vec(rational(), 0..=5),
        qc in vec(rational(), 0..=5),
        x in rational(),
    ) {
        let p = Polynomial::new(pc);
        let q = Polynomial::new(qc);
        prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * q.eval(&x));
    }
}
