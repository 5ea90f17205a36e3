//! Classify a small two-variable instance whose feasible region collapses to
//! the origin at 0 and vanishes on one side: the solver proves feasibility
//! for delta < 0, feasibility at delta = 0, and infeasibility on (0, eps).
//!
//! Constraints (eps = 1/10), written as A(delta) x >= b(delta) over (x, y):
//!   y - x >= 0
//!   y + x >= 0
//!   -y >= eps - 1
//!   -y >= eps*delta - delta^2
//!   y >= delta - 1

use plp::json::{classification_to_value, instance_to_value};
use plp::plp::{classify_local, PlpInstance, PolyMatrix, Summary, Verdict};
use plp::poly::{rat, Poly};

fn main() {
    let a = PolyMatrix::new(vec![
        vec![Poly::from_i64(&[-1]), Poly::from_i64(&[1])],
        vec![Poly::from_i64(&[1]), Poly::from_i64(&[1])],
        vec![Poly::zero(), Poly::from_i64(&[-1])],
        vec![Poly::zero(), Poly::from_i64(&[-1])],
        vec![Poly::zero(), Poly::from_i64(&[1])],
    ])
    .unwrap();
    let b = vec![
        Poly::zero(),
        Poly::zero(),
        Poly::constant(rat(-9, 10)),
        Poly::from_coeffs(vec![rat(0, 1), rat(1, 10), rat(-1, 1)]),
        Poly::from_i64(&[-1, 1]),
    ];
    let inst = PlpInstance::new(a, b).unwrap();
    println!("instance: {}", instance_to_value(&inst));

    let cls = classify_local(&inst);
    println!("classification: {}", classification_to_value(&cls));

    assert_eq!(cls.negative.verdict, Verdict::Feasible);
    assert_eq!(cls.origin.status, plp::lp::LpStatus::Optimal);
    assert_eq!(cls.positive.verdict, Verdict::Infeasible);
    assert_eq!(cls.summary, Summary::Mixed);
    println!("summary: mixed, as expected (feasible left of 0, infeasible right of 0)");
}
