//! Local optimization of a parametric LP near 0⁺.
//!
//! Convention: maximize c(d)ᵀx subject to A(d) x <= b(d), x >= 0. For small
//! d > 0 the program is either infeasible, unbounded, or optimized by a
//! rational function x(d); which case holds is itself decided by three
//! feasibility questions on derived 1-PLP instances (primal, dual, and the
//! strong-duality system), each answered by the core side solver.

use crate::plp::{
    check_certificate, solve_side, PlpInstance, PolyMatrix, SearchCaps, Side, SideCertificate,
    Verdict,
};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::sturm::RootBound;
use crate::Result;

/// max cᵀx s.t. A x <= b, x >= 0, with polynomial data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamLp {
    pub c: Vec<Poly>,
    pub a: PolyMatrix,
    pub b: Vec<Poly>,
}

impl ParamLp {
    pub fn new(c: Vec<Poly>, a: PolyMatrix, b: Vec<Poly>) -> Result<Self> {
        if c.len() != a.cols() {
            return Err(crate::Error::DimensionMismatch(format!(
                "objective has {} entries for {} columns",
                c.len(),
                a.cols()
            )));
        }
        if b.len() != a.rows() {
            return Err(crate::Error::DimensionMismatch(format!(
                "rhs has {} entries for {} rows",
                b.len(),
                a.rows()
            )));
        }
        Ok(ParamLp { c, a, b })
    }

    fn n(&self) -> usize {
        self.a.cols()
    }
    fn m(&self) -> usize {
        self.a.rows()
    }

    /// {A x <= b, x >= 0} in the core solver's A(d) x >= b(d) orientation.
    pub fn primal_instance(&self) -> PlpInstance {
        let n = self.n();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..self.m() {
            rows.push(self.a.row(i).iter().map(|p| -p).collect());
            rhs.push(-&self.b[i]);
        }
        for j in 0..n {
            let mut r = vec![Poly::zero(); n];
            r[j] = Poly::one();
            rows.push(r);
            rhs.push(Poly::zero());
        }
        PlpInstance::new(PolyMatrix::new(rows).unwrap(), rhs).unwrap()
    }

    /// {Aᵀ y >= c, y >= 0}.
    pub fn dual_instance(&self) -> PlpInstance {
        let m = self.m();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..self.n() {
            rows.push((0..m).map(|i| self.a.entry(i, j).clone()).collect());
            rhs.push(self.c[j].clone());
        }
        for i in 0..m {
            let mut r = vec![Poly::zero(); m];
            r[i] = Poly::one();
            rows.push(r);
            rhs.push(Poly::zero());
        }
        PlpInstance::new(PolyMatrix::new(rows).unwrap(), rhs).unwrap()
    }

    /// {A x <= b, x >= 0, Aᵀ y >= c, y >= 0, cᵀx >= bᵀy} over (x, y); a
    /// solution's x-block is optimal wherever the system holds, since weak
    /// duality pins cᵀx to bᵀy.
    pub fn combined_instance(&self) -> PlpInstance {
        let n = self.n();
        let m = self.m();
        let dim = n + m;
        let mut rows: Vec<Vec<Poly>> = Vec::new();
        let mut rhs = Vec::new();
        let pad = |xs: Vec<Poly>, at: usize| {
            let mut r = vec![Poly::zero(); dim];
            for (k, p) in xs.into_iter().enumerate() {
                r[at + k] = p;
            }
            r
        };
        for i in 0..m {
            rows.push(pad(self.a.row(i).iter().map(|p| -p).collect(), 0));
            rhs.push(-&self.b[i]);
        }
        for j in 0..n {
            let mut r = vec![Poly::zero(); dim];
            r[j] = Poly::one();
            rows.push(r);
            rhs.push(Poly::zero());
        }
        for j in 0..n {
            rows.push(pad((0..m).map(|i| self.a.entry(i, j).clone()).collect(), n));
            rhs.push(self.c[j].clone());
        }
        for i in 0..m {
            let mut r = vec![Poly::zero(); dim];
            r[n + i] = Poly::one();
            rows.push(r);
            rhs.push(Poly::zero());
        }
        let mut duality = vec![Poly::zero(); dim];
        for j in 0..n {
            duality[j] = self.c[j].clone();
        }
        for i in 0..m {
            duality[n + i] = -&self.b[i];
        }
        rows.push(duality);
        rhs.push(Poly::zero());
        PlpInstance::new(PolyMatrix::new(rows).unwrap(), rhs).unwrap()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OptStatus {
    LocallyInfeasible,
    LocallyUnbounded,
    LocallyOptimal,
    /// A sub-solve gave up at its degree cap; no verdict.
    UnknownAtCap,
}

#[derive(Clone, Debug)]
pub struct OptOutcome {
    pub status: OptStatus,
    pub x: Option<Vec<RatFunc>>,
    pub value: Option<RatFunc>,
    pub radius: Option<RootBound>,
    /// The certificate of the combined primal-dual system, whose solution
    /// carries the dual block for auditing.
    pub certificate: Option<SideCertificate>,
}

pub fn solve_local_opt(lp: &ParamLp) -> OptOutcome {
    solve_local_opt_with_caps(lp, &SearchCaps::full())
}

pub fn solve_local_opt_with_caps(lp: &ParamLp, caps: &SearchCaps) -> OptOutcome {
    let bare = |status: OptStatus| OptOutcome {
        status,
        x: None,
        value: None,
        radius: None,
        certificate: None,
    };
    let primal = solve_side(&lp.primal_instance(), Side::Positive, caps);
    match primal.verdict {
        Verdict::Infeasible => return bare(OptStatus::LocallyInfeasible),
        Verdict::UnknownAtCap => return bare(OptStatus::UnknownAtCap),
        Verdict::Feasible => {}
    }
    let dual = solve_side(&lp.dual_instance(), Side::Positive, caps);
    match dual.verdict {
        Verdict::Infeasible => return bare(OptStatus::LocallyUnbounded),
        Verdict::UnknownAtCap => return bare(OptStatus::UnknownAtCap),
        Verdict::Feasible => {}
    }
    let combined_inst = lp.combined_instance();
    let combined = solve_side(&combined_inst, Side::Positive, caps);
    match combined.verdict {
        Verdict::UnknownAtCap => bare(OptStatus::UnknownAtCap),
        Verdict::Infeasible => unreachable!(
            "primal and dual locally feasible imply the strong-duality system is too"
        ),
        Verdict::Feasible => {
            debug_assert!(check_certificate(&combined_inst, &combined));
            let sol = combined.solution.as_ref().unwrap();
            let x: Vec<RatFunc> = sol[..lp.n()].to_vec();
            let value = lp
                .c
                .iter()
                .zip(&x)
                .map(|(cj, xj)| xj.mul(&RatFunc::from_poly(cj.clone())))
                .fold(RatFunc::zero(), |acc, t| acc.add(&t));
            OptOutcome {
                status: OptStatus::LocallyOptimal,
                x: Some(x),
                value: Some(value),
                radius: combined.radius.clone(),
                certificate: Some(combined),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{lp_optimize, Direction, LinConstraint, LinProgram, LpStatus};
    use crate::poly::{rat_int, Rat};
    use num_traits::Zero;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_i64(coeffs)
    }

    fn single_constraint(c: Poly, a: Poly, b: Poly) -> ParamLp {
        ParamLp::new(vec![c], PolyMatrix::new(vec![vec![a]]).unwrap(), vec![b]).unwrap()
    }

    /// Solve the fixed-parameter LP max cᵀx, Ax <= b, x >= 0 exactly.
    fn fixed_opt(lp: &ParamLp, delta: &Rat) -> Option<Rat> {
        let n = lp.c.len();
        let mut prog = LinProgram::new(n);
        for (row, rhs) in (0..lp.b.len()).map(|i| (lp.a.row(i), &lp.b[i])) {
            prog.push(LinConstraint::le(
                row.iter().map(|p| p.eval(delta)).collect(),
                rhs.eval(delta),
            ));
        }
        for j in 0..n {
            let mut r = vec![Rat::zero(); n];
            r[j] = rat_int(1);
            prog.push(LinConstraint::ge(r, Rat::zero()));
        }
        let obj: Vec<Rat> = lp.c.iter().map(|p| p.eval(delta)).collect();
        let out = lp_optimize(&prog, &obj, Direction::Max);
        (out.status == LpStatus::Optimal).then(|| out.value.unwrap())
    }

    #[test]
    fn tight_parametric_bound() {
        // max x s.t. x <= d: optimum x(d) = d
        let lp = single_constraint(poly(&[1]), poly(&[1]), poly(&[0, 1]));
        let out = solve_local_opt(&lp);
        assert_eq!(out.status, OptStatus::LocallyOptimal);
        let x = &out.x.as_ref().unwrap()[0];
        assert_eq!(x, &RatFunc::from_poly(poly(&[0, 1])));
        assert_eq!(out.value.as_ref().unwrap(), &RatFunc::from_poly(poly(&[0, 1])));
        // point agreement at half the certified radius
        let half = &out.radius.as_ref().unwrap().value / rat_int(2);
        assert_eq!(fixed_opt(&lp, &half), out.value.unwrap().eval(&half));
    }

    #[test]
    fn pole_valued_optimum() {
        // max x s.t. d·x <= 1: optimum x(d) = 1/d
        let lp = single_constraint(poly(&[1]), poly(&[0, 1]), poly(&[1]));
        let out = solve_local_opt(&lp);
        assert_eq!(out.status, OptStatus::LocallyOptimal);
        let expect = RatFunc::new(Poly::one(), poly(&[0, 1])).unwrap();
        assert_eq!(out.x.as_ref().unwrap()[0], expect);
        assert_eq!(out.value.as_ref().unwrap(), &expect);
        let half = &out.radius.as_ref().unwrap().value / rat_int(2);
        assert_eq!(fixed_opt(&lp, &half), out.value.unwrap().eval(&half));
    }

    #[test]
    fn locally_infeasible() {
        // max x s.t. x <= −d, x >= 0
        let lp = single_constraint(poly(&[1]), poly(&[1]), poly(&[0, -1]));
        assert_eq!(solve_local_opt(&lp).status, OptStatus::LocallyInfeasible);
    }

    #[test]
    fn locally_unbounded() {
        // max x s.t. 0·x <= 1, x >= 0
        let lp = single_constraint(poly(&[1]), poly(&[]), poly(&[1]));
        assert_eq!(solve_local_opt(&lp).status, OptStatus::LocallyUnbounded);
    }

    #[test]
    fn duality_gap_closed_symbolically() {
        // cᵀx(d) = bᵀy(d) as rational functions on the combined certificate
        let lp = single_constraint(poly(&[1]), poly(&[0, 1]), poly(&[1]));
        let out = solve_local_opt(&lp);
        let sol = out.certificate.as_ref().unwrap().solution.as_ref().unwrap();
        let (x, y) = (&sol[0], &sol[1]);
        let cx = x.mul(&RatFunc::from_poly(poly(&[1])));
        let by = y.mul(&RatFunc::from_poly(poly(&[1])));
        assert_eq!(cx, by);
    }
}
