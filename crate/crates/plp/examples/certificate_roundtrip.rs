//! Solve an instance, emit its certificate as JSON, parse the JSON back, and
//! audit the parsed certificate against the instance; also evaluate the
//! instance at fixed parameter values as an independent cross-check.

use plp::json::{certificate_from_value, certificate_to_value, instance_to_value};
use plp::plp::{
    check_certificate, feasibility_at_point, solve_side, PlpInstance, PolyMatrix, SearchCaps,
    Side, Verdict,
};
use plp::poly::{rat, Poly};

fn main() {
    // x <= delta^2 and x >= delta: infeasible on (0, 1), feasible left of 0
    let a = PolyMatrix::new(vec![
        vec![Poly::from_i64(&[-1])],
        vec![Poly::from_i64(&[1])],
    ])
    .unwrap();
    let b = vec![
        Poly::from_coeffs(vec![rat(0, 1), rat(0, 1), rat(-1, 1)]),
        Poly::from_i64(&[0, 1]),
    ];
    let inst = PlpInstance::new(a, b).unwrap();
    println!("instance: {}", instance_to_value(&inst));

    for (side, expected) in [(Side::Positive, Verdict::Infeasible), (Side::Negative, Verdict::Feasible)] {
        let cert = solve_side(&inst, side, &SearchCaps::full());
        assert_eq!(cert.verdict, expected);
        let emitted = certificate_to_value(&cert);
        println!("certificate ({side:?}): {emitted}");

        // round-trip: parse the emitted JSON; feasible certificates are
        // additionally re-audited (residual signs, root counts, midpoint)
        let parsed = certificate_from_value(&emitted).unwrap();
        assert_eq!(parsed, cert);
        if parsed.verdict == Verdict::Feasible {
            assert!(check_certificate(&inst, &parsed), "audit failed after round-trip");
        }

        // byte-exact re-emission
        assert_eq!(certificate_to_value(&parsed).to_string(), emitted.to_string());
    }

    // independent fixed-point evaluations on both sides
    assert!(!feasibility_at_point(&inst, &rat(1, 20)));
    assert!(feasibility_at_point(&inst, &rat(-1, 20)));
    println!("point checks: infeasible at 1/20, feasible at -1/20");
}
