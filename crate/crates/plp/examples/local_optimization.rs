//! Local parametric optimization near 0+: four one-variable programs that
//! exercise each outcome, including an optimum whose value blows up as the
//! parameter vanishes.

use plp::opt::{solve_local_opt, OptStatus, ParamLp};
use plp::plp::PolyMatrix;
use plp::poly::{rat, Poly, Rat};
use plp::ratfunc::RatFunc;

fn one_constraint(c: Poly, a: Poly, b: Poly) -> ParamLp {
    ParamLp::new(vec![c], PolyMatrix::new(vec![vec![a]]).unwrap(), vec![b]).unwrap()
}

fn main() {
    // max x s.t. x <= delta, x >= 0: tight parametric bound
    let lp = one_constraint(Poly::one(), Poly::one(), Poly::from_i64(&[0, 1]));
    let out = solve_local_opt(&lp);
    assert_eq!(out.status, OptStatus::LocallyOptimal);
    let delta = RatFunc::from_poly(Poly::from_i64(&[0, 1]));
    assert_eq!(out.value.as_ref().unwrap(), &delta);
    assert_eq!(&out.x.as_ref().unwrap()[0], &delta);
    println!("max x s.t. x <= delta        -> optimal, x = value = delta");

    // max x s.t. delta*x <= 1, x >= 0: optimum 1/delta, a pole at 0
    let lp = one_constraint(Poly::one(), Poly::from_i64(&[0, 1]), Poly::one());
    let out = solve_local_opt(&lp);
    assert_eq!(out.status, OptStatus::LocallyOptimal);
    let inv = RatFunc::new(Poly::one(), Poly::from_i64(&[0, 1])).unwrap();
    assert_eq!(out.value.as_ref().unwrap(), &inv);
    println!("max x s.t. delta*x <= 1      -> optimal, value = 1/delta (pole at 0)");

    // max x s.t. x <= -delta, x >= 0: empty for delta > 0
    let lp = one_constraint(Poly::one(), Poly::one(), Poly::from_i64(&[0, -1]));
    let out = solve_local_opt(&lp);
    assert_eq!(out.status, OptStatus::LocallyInfeasible);
    println!("max x s.t. x <= -delta       -> locally infeasible");

    // max x s.t. 0*x <= 1, x >= 0: nothing restrains x
    let lp = one_constraint(Poly::one(), Poly::zero(), Poly::one());
    let out = solve_local_opt(&lp);
    assert_eq!(out.status, OptStatus::LocallyUnbounded);
    println!("max x s.t. 0*x <= 1          -> locally unbounded");

    // point agreement: the symbolic optimum matches a fixed-parameter solve
    let lp = one_constraint(Poly::one(), Poly::from_i64(&[0, 1]), Poly::one());
    let out = solve_local_opt(&lp);
    let r = &out.radius.as_ref().unwrap().value;
    let d: Rat = r / rat(2, 1);
    let fixed = plp::lp::lp_optimize(
        &{
            let mut prog = plp::lp::LinProgram::new(1);
            prog.push(plp::lp::LinConstraint::le(vec![d.clone()], Rat::from_integer(1.into())));
            prog.push(plp::lp::LinConstraint::ge(vec![Rat::from_integer(1.into())], Rat::from_integer(0.into())));
            prog
        },
        &[Rat::from_integer(1.into())],
        plp::lp::Direction::Max,
    );
    assert_eq!(fixed.value.unwrap(), out.value.unwrap().eval(&d).unwrap());
    println!("fixed-parameter cross-check at radius/2 agrees exactly");
}
