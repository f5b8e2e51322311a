use geneuler::egf::{egf_rows_integral, frobenius_egf};
use geneuler::presets::preset_catalog;
use geneuler::scalar::rat;
use geneuler::transforms::{gamma_decompose, lift_a_to_t, FrobeniusParams};
use geneuler::triangle::{build_companion, build_master, Affine, RecurrenceRule};
use geneuler::{Poly, Rational, TriangleParams};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    small_rat().prop_filter("nonzero", |r| *r != rat(0, 1))
}

/// Master parameters with `b1 = d a1 - c`.
fn compatible() -> impl Strategy<Value = TriangleParams> {
    (nonzero_rat(), proptest::collection::vec(small_rat(), 7)).prop_map(|(lambda, v)| {
        let [a0, a1, a2, b0, b2, c, d]: [Rational; 7] = v.try_into().unwrap();
        let b1 = d.clone() * a1.clone() - c.clone();
        TriangleParams { lambda, a0, a1, a2, b0, b1, b2, c, d }
    })
}

/// The reversed rows satisfy the recurrence with the two main coefficients
/// exchanged and the skip term turned into a forward term.
fn reciprocal_rule(p: &TriangleParams) -> RecurrenceRule<Rational> {
    let beta = p.lambda.clone();
    RecurrenceRule::new(
        "reciprocal",
        Affine::new(p.b0.clone() + p.b1.clone(), -p.b1.clone(), p.b2.clone()),
        Affine::new(beta.clone() * (p.a0.clone() + p.a1.clone()), -(beta.clone() * p.a1.clone()), beta * p.a2.clone()),
    )
    .with_term(-1, Affine::new(rat(0, 1), p.skip_coeff(), p.skip_coeff()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn master_builder_matches_generic_engine(p in compatible()) {
        let a = build_master(&p, 8).unwrap();
        let b = p.master_rule().build(8);
        prop_assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn reciprocal_is_an_involution_and_satisfies_reversed_rule(p in compatible()) {
        let t = build_master(&p, 8).unwrap();
        let r = t.reciprocal();
        let rr = r.reciprocal();
        prop_assert_eq!(rr.rows(), t.rows());
        let direct = reciprocal_rule(&p).build(8);
        prop_assert_eq!(r.rows(), direct.rows());
    }

    #[test]
    fn lift_paths_agree(p in compatible()) {
        let a = build_companion(&p, 8).unwrap();
        let t = build_master(&p, 8).unwrap();
        for n in 0..=8 {
            let by_coeff = lift_a_to_t(&a, &p.lambda, &p.d, n).unwrap();
            let by_poly = a.row_poly(n).unwrap().linear_lift(n, &p.lambda, &p.d).unwrap();
            prop_assert_eq!(Poly::new(by_coeff.clone()), by_poly);
            prop_assert_eq!(Poly::new(by_coeff), t.row_poly(n).unwrap());
        }
    }

    #[test]
    fn egf_rows_integral_for_integer_parameters(a1 in 1i64..4, a2 in 0i64..4, b1 in 1i64..4, b2k in 0i64..3) {
        // b2 a multiple of b1 keeps the exponent an integer; half-integer
        // exponents are covered below
        let p = FrobeniusParams::from_ints(a1, a2, b1, b2k * b1).unwrap();
        prop_assert!(egf_rows_integral(&frobenius_egf(&p, 6).unwrap()));
    }

    #[test]
    fn egf_rows_integral_for_general_integer_parameters(a1 in 1i64..4, a2 in -3i64..4, b1 in 1i64..4, b2 in -3i64..4) {
        let p = FrobeniusParams::from_ints(a1, a2, b1, b2).unwrap();
        let s = frobenius_egf(&p, 6).unwrap();
        prop_assert!(egf_rows_integral(&s));
        let rows = p.build(6);
        for n in 0..=6 {
            prop_assert_eq!(s.egf_coeff(n), rows.row_poly(n).unwrap());
        }
    }

    #[test]
    fn gamma_round_trip_on_symmetric_input(g in proptest::collection::vec(small_rat(), 1..5), extra in 0usize..3) {
        let n = 2 * (g.len() - 1) + extra;
        let p = geneuler::transforms::gamma_basis_sum(&g, n);
        let back = gamma_decompose(&p, n).unwrap();
        prop_assert_eq!(back.reconstruct(), p);
    }
}

#[test]
fn lift_consistency_for_master_presets() {
    for preset in preset_catalog() {
        let Some(p) = preset.master_params() else { continue };
        let a = build_companion(p, 15).unwrap();
        let t = preset.build(15).unwrap();
        for n in 0..=15 {
            let by_coeff = lift_a_to_t(&a, &p.lambda, &p.d, n).unwrap();
            let by_poly = a.row_poly(n).unwrap().linear_lift(n, &p.lambda, &p.d).unwrap();
            assert_eq!(Poly::new(by_coeff), by_poly, "{} n = {n}", preset.id);
            assert_eq!(by_poly, t.row_poly(n).unwrap(), "{} n = {n}", preset.id);
        }
    }
}

#[test]
fn palindromic_generalized_eulerian_rows() {
    for preset in ["eulerian-shifted", "eulerian-typeB"] {
        let t = geneuler::presets::find_preset(preset).unwrap().build(15).unwrap();
        for n in 0..=15 {
            assert!(t.row_poly(n).unwrap().is_palindromic(n), "{preset} n = {n}");
        }
    }
}
