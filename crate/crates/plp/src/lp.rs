//! Exact rational-arithmetic linear programming.
//!
//! Two-phase dense simplex with Bland's anti-cycling pivot rule over
//! arbitrary-precision rationals: deterministic, exact, and certificate-
//! producing. Infeasible programs yield Farkas multipliers; unbounded
//! programs yield an improving ray. Equality constraints are eliminated by
//! Gaussian substitution before the simplex runs, with multiplier histories
//! carried along so certificates still refer to the original rows.

use crate::poly::Rat;
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::cell::Cell;

thread_local! {
    static LP_CALLS: Cell<u64> = const { Cell::new(0) };
    static LP_PIVOTS: Cell<u64> = const { Cell::new(0) };
}

/// (simplex solves, pivots) performed by this thread so far; the search
/// logs deltas per candidate so runs can be compared and reproduced.
pub fn lp_stats() -> (u64, u64) {
    (LP_CALLS.with(Cell::get), LP_PIVOTS.with(Cell::get))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Ge,
    Le,
    Eq,
}

/// One row `coeffs · x {>=,<=,=} rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinConstraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
    pub sense: Sense,
}

impl LinConstraint {
    pub fn ge(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        LinConstraint { coeffs, rhs, sense: Sense::Ge }
    }
    pub fn le(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        LinConstraint { coeffs, rhs, sense: Sense::Le }
    }
    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        LinConstraint { coeffs, rhs, sense: Sense::Eq }
    }

    /// Flip LE rows so every inequality reads `coeffs · x >= rhs`.
    fn normalized(&self) -> LinConstraint {
        match self.sense {
            Sense::Le => LinConstraint {
                coeffs: self.coeffs.iter().map(|c| -c).collect(),
                rhs: -&self.rhs,
                sense: Sense::Ge,
            },
            _ => self.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinProgram {
    pub dim: usize,
    pub constraints: Vec<LinConstraint>,
}

impl LinProgram {
    pub fn new(dim: usize) -> Self {
        LinProgram { dim, constraints: vec![] }
    }

    pub fn push(&mut self, c: LinConstraint) {
        assert_eq!(c.coeffs.len(), self.dim, "constraint dimension mismatch");
        self.constraints.push(c);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LpStatus {
    Infeasible,
    Unbounded,
    Optimal,
}

/// Solver outcome. `witness` is a feasible point (the optimizer when
/// Optimal); `ray` is an improving direction when Unbounded; `farkas` holds
/// one multiplier per original constraint when Infeasible, oriented against
/// the GE-normalized rows (LE rows count as their negation, EQ multipliers
/// are sign-free).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub witness: Option<Vec<Rat>>,
    pub value: Option<Rat>,
    pub ray: Option<Vec<Rat>>,
    pub farkas: Option<Vec<Rat>>,
}

impl LpOutcome {
    fn infeasible(farkas: Vec<Rat>) -> Self {
        LpOutcome { status: LpStatus::Infeasible, witness: None, value: None, ray: None, farkas: Some(farkas) }
    }
    fn optimal(witness: Vec<Rat>, value: Rat) -> Self {
        LpOutcome { status: LpStatus::Optimal, witness: Some(witness), value: Some(value), ray: None, farkas: None }
    }
    fn unbounded(witness: Vec<Rat>, ray: Vec<Rat>) -> Self {
        LpOutcome { status: LpStatus::Unbounded, witness: Some(witness), value: None, ray: Some(ray), farkas: None }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Max,
    Min,
}

// ---------------------------------------------------------------------------
// Equality presolve

/// A working row `coeffs · x (sense) rhs` plus the multipliers over the
/// original constraint list that produced it.
#[derive(Clone)]
struct WorkRow {
    coeffs: Vec<Rat>,
    rhs: Rat,
    history: Vec<(usize, Rat)>, // sparse: (original constraint index, multiplier)
    origin: usize,              // original constraint index of the base row
}

fn history_add(h: &mut Vec<(usize, Rat)>, other: &[(usize, Rat)], scale: &Rat) {
    for (idx, m) in other {
        let add = m * scale;
        if add.is_zero() {
            continue;
        }
        match h.iter_mut().find(|(i, _)| i == idx) {
            Some((_, v)) => *v = &*v + add,
            None => h.push((*idx, add)),
        }
    }
    h.retain(|(_, v)| !v.is_zero());
}

struct Presolved {
    dim: usize,
    /// Free original-variable indices, in ascending order.
    free: Vec<usize>,
    /// Substitutions in application order: x[var] = c + lin · x (lin over
    /// original indices, referencing only variables still free at that step).
    subs: Vec<(usize, Rat, Vec<Rat>)>,
    /// Remaining GE rows over the free variables (compact indexing).
    rows: Vec<WorkRow>,
    n_constraints: usize,
}

enum PresolveResult {
    Ok(Presolved),
    /// The equalities alone are contradictory; multipliers attached.
    Infeasible(Vec<Rat>),
}

/// Substitute all equality rows away by Gaussian elimination, tracking
/// multiplier histories for Farkas certificates.
fn presolve(prog: &LinProgram) -> PresolveResult {
    let dim = prog.dim;
    let mut eq_rows: Vec<WorkRow> = vec![];
    let mut ge_rows: Vec<WorkRow> = vec![];
    for (idx, c) in prog.constraints.iter().enumerate() {
        let n = c.normalized();
        let row = WorkRow {
            coeffs: n.coeffs,
            rhs: n.rhs,
            history: vec![(idx, Rat::from_integer(1.into()))],
            origin: idx,
        };
        match n.sense {
            Sense::Eq => eq_rows.push(row),
            Sense::Ge => ge_rows.push(row),
            Sense::Le => unreachable!(),
        }
    }

    let mut eliminated = vec![false; dim];
    let mut subs = Vec::new();
    for k in 0..eq_rows.len() {
        let (done, rest) = eq_rows.split_at_mut(k);
        let _ = done;
        let row = rest[0].clone();
        let pivot = row.coeffs.iter().position(|c| !c.is_zero());
        let Some(v) = pivot else {
            if row.rhs.is_zero() {
                continue; // redundant 0 = 0
            }
            // 0 = rhs with rhs != 0: the history is a direct contradiction.
            let sign = if row.rhs.is_positive() { 1 } else { -1 };
            let mut farkas = vec![Rat::zero(); prog.constraints.len()];
            for (idx, m) in &row.history {
                farkas[*idx] = m * Rat::from_integer(sign.into());
            }
            return PresolveResult::Infeasible(farkas);
        };
        let g = row.coeffs[v].clone();
        // x[v] = rhs/g - sum_{u != v} coeffs[u]/g * x[u]
        let mut lin = vec![Rat::zero(); dim];
        for (u, c) in row.coeffs.iter().enumerate() {
            if u != v && !c.is_zero() {
                lin[u] = -(c / &g);
            }
        }
        subs.push((v, &row.rhs / &g, lin));
        eliminated[v] = true;
        // eliminate v from every other working row
        let reduce = |r: &mut WorkRow| {
            if r.coeffs[v].is_zero() {
                return;
            }
            let beta = -(&r.coeffs[v] / &g);
            for u in 0..dim {
                let add = &beta * &row.coeffs[u];
                r.coeffs[u] = &r.coeffs[u] + add;
            }
            r.rhs = &r.rhs + &beta * &row.rhs;
            history_add(&mut r.history, &row.history, &beta);
        };
        for r in rest[1..].iter_mut() {
            reduce(r);
        }
        for r in ge_rows.iter_mut() {
            reduce(r);
        }
    }

    let free: Vec<usize> = (0..dim).filter(|&v| !eliminated[v]).collect();
    // compact the GE rows to the free variables
    let rows = ge_rows
        .into_iter()
        .map(|r| WorkRow {
            coeffs: free.iter().map(|&v| r.coeffs[v].clone()).collect(),
            rhs: r.rhs,
            history: r.history,
            origin: r.origin,
        })
        .collect();
    PresolveResult::Ok(Presolved { dim, free, subs, rows, n_constraints: prog.constraints.len() })
}

impl Presolved {
    /// Recover the full-dimensional point from values of the free variables.
    fn expand_point(&self, free_vals: &[Rat]) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.dim];
        for (i, &v) in self.free.iter().enumerate() {
            x[v] = free_vals[i].clone();
        }
        for (v, c, lin) in self.subs.iter().rev() {
            let mut val = c.clone();
            for (u, l) in lin.iter().enumerate() {
                if !l.is_zero() {
                    val = val + l * &x[u];
                }
            }
            x[*v] = val;
        }
        x
    }

    /// Recover a full-dimensional direction (homogeneous part only).
    fn expand_ray(&self, free_vals: &[Rat]) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.dim];
        for (i, &v) in self.free.iter().enumerate() {
            x[v] = free_vals[i].clone();
        }
        for (v, _, lin) in self.subs.iter().rev() {
            let mut val = Rat::zero();
            for (u, l) in lin.iter().enumerate() {
                if !l.is_zero() {
                    val = val + l * &x[u];
                }
            }
            x[*v] = val;
        }
        x
    }

    /// Combine simplex multipliers on the reduced rows into multipliers on
    /// the original constraint list.
    fn expand_farkas(&self, reduced: &[Rat]) -> Vec<Rat> {
        let mut farkas = vec![Rat::zero(); self.n_constraints];
        for (row, lam) in self.rows.iter().zip(reduced) {
            if lam.is_zero() {
                continue;
            }
            for (idx, m) in &row.history {
                farkas[*idx] = &farkas[*idx] + lam * m;
            }
        }
        farkas
    }
}

// ---------------------------------------------------------------------------
// Simplex core (standard form over nonnegative split variables)

enum SimplexResult {
    Optimal { x: Vec<Rat> },
    Unbounded { x: Vec<Rat>, ray: Vec<Rat> },
    /// One multiplier per input GE row.
    Infeasible { farkas: Vec<Rat> },
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // m x ncols
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, j: usize, cost: &mut Vec<Rat>, zval: &mut Rat) {
        LP_PIVOTS.with(|c| {
            let n = c.get() + 1;
            c.set(n);
            if n % 20000 == 0 {
                let bits: usize = self
                    .rows
                    .iter()
                    .flatten()
                    .map(|v| v.numer().bits() as usize + v.denom().bits() as usize)
                    .sum();
                log::trace!("pivot #{n}: tableau {}x{}, total coeff bits {bits}", self.rows.len(), self.ncols);
            }
        });
        let piv = self.rows[r][j].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &piv;
            }
        }
        self.rhs[r] = &self.rhs[r] / &piv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let factor = self.rows[i][j].clone();
            for u in 0..self.ncols {
                if !self.rows[r][u].is_zero() {
                    let sub = &factor * &self.rows[r][u];
                    self.rows[i][u] = &self.rows[i][u] - sub;
                }
            }
            let sub = &factor * &self.rhs[r];
            self.rhs[i] = &self.rhs[i] - sub;
        }
        if !cost[j].is_zero() {
            let factor = cost[j].clone();
            for u in 0..self.ncols {
                if !self.rows[r][u].is_zero() {
                    let sub = &factor * &self.rows[r][u];
                    cost[u] = &cost[u] - sub;
                }
            }
            *zval = &*zval - &factor * &self.rhs[r];
        }
        self.basis[r] = j;
    }

    /// Bland's rule: minimize; returns false when optimal, errs into
    /// Unbounded via the Option in `entering_unbounded`.
    fn run(&mut self, cost: &mut Vec<Rat>, zval: &mut Rat, allowed: &[bool]) -> Option<usize> {
        loop {
            let entering = (0..self.ncols).find(|&j| allowed[j] && cost[j].is_negative());
            let Some(j) = entering else { return None };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, j, cost, zval),
                None => return Some(j), // unbounded along column j
            }
        }
    }
}

/// Solve: minimize `obj · x` over free variables `x` subject to GE rows.
/// Variables are split into nonnegative pairs internally.
fn simplex_ge(nfree: usize, rows: &[(Vec<Rat>, Rat)], obj: &[Rat]) -> SimplexResult {
    LP_CALLS.with(|c| c.set(c.get() + 1));
    let m = rows.len();
    let ny = 2 * nfree;
    let nslack = m;
    // artificial columns allocated lazily below
    let mut negated = vec![false; m];
    let mut art_col: Vec<Option<usize>> = vec![None; m];
    let mut ncols = ny + nslack;
    for (i, (_, b)) in rows.iter().enumerate() {
        if b.is_negative() {
            negated[i] = true;
        } else {
            art_col[i] = Some(ncols);
            ncols += 1;
        }
    }
    let mut t = Tableau { rows: Vec::with_capacity(m), rhs: Vec::with_capacity(m), basis: vec![0; m], ncols };
    for (i, (a, b)) in rows.iter().enumerate() {
        let mut row = vec![Rat::zero(); ncols];
        let sgn: Rat = Rat::from_integer(if negated[i] { (-1).into() } else { 1.into() });
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                row[2 * k] = c * &sgn;
                row[2 * k + 1] = -(c * &sgn);
            }
        }
        row[ny + i] = -&sgn; // surplus: a·y − s = b, sign-flipped with the row
        if let Some(ac) = art_col[i] {
            row[ac] = Rat::from_integer(1.into());
            t.basis[i] = ac;
        } else {
            t.basis[i] = ny + i; // slack basic: row was negated, so its coeff is +1
        }
        t.rhs.push(b * &sgn);
        t.rows.push(row);
    }

    // Phase 1: minimize the sum of artificials.
    let mut cost = vec![Rat::zero(); ncols];
    let mut zval = Rat::zero();
    for ac in art_col.iter().flatten() {
        cost[*ac] = Rat::from_integer(1.into());
    }
    // express the cost through the initial basis (artificials are basic)
    for i in 0..m {
        if art_col[i].is_some() {
            for u in 0..ncols {
                if !t.rows[i][u].is_zero() {
                    let sub = &t.rows[i][u];
                    cost[u] = &cost[u] - sub;
                }
            }
            zval = &zval - &t.rhs[i];
        }
    }
    let allowed = vec![true; ncols];
    let unb = t.run(&mut cost, &mut zval, &allowed);
    debug_assert!(unb.is_none(), "phase-1 objective is bounded below by zero");
    // current phase-1 objective value is -zval
    if !zval.is_zero() {
        // infeasible: dual multipliers from the reduced costs of each row's
        // initial identity column (cost 1 for artificials, 0 for slacks)
        let mut farkas = vec![Rat::zero(); m];
        for i in 0..m {
            let (col, c0): (usize, Rat) = match art_col[i] {
                Some(ac) => (ac, Rat::from_integer(1.into())),
                None => (ny + i, Rat::zero()),
            };
            let y = c0 - &cost[col]; // y_i = c_col − reduced cost
            farkas[i] = if negated[i] { -y } else { y };
        }
        return SimplexResult::Infeasible { farkas };
    }

    // Drive leftover artificials out of the basis, dropping redundant rows.
    let is_art = |j: usize| j >= ny + nslack;
    let mut i = 0;
    while i < t.rows.len() {
        if is_art(t.basis[i]) {
            match (0..ny + nslack).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j, &mut cost, &mut zval),
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    // Phase 2: the real objective, artificial columns barred.
    let mut cost2 = vec![Rat::zero(); ncols];
    for (k, c) in obj.iter().enumerate() {
        cost2[2 * k] = c.clone();
        cost2[2 * k + 1] = -c;
    }
    let mut z2 = Rat::zero();
    for (i, &b) in t.basis.iter().enumerate() {
        if cost2[b].is_zero() {
            continue;
        }
        let factor = cost2[b].clone();
        for u in 0..ncols {
            if !t.rows[i][u].is_zero() {
                let sub = &factor * &t.rows[i][u];
                cost2[u] = &cost2[u] - sub;
            }
        }
        z2 = &z2 - &factor * &t.rhs[i];
    }
    let allowed2: Vec<bool> = (0..ncols).map(|j| !is_art(j)).collect();
    let unb = t.run(&mut cost2, &mut z2, &allowed2);

    let mut yvals = vec![Rat::zero(); ncols];
    for (i, &b) in t.basis.iter().enumerate() {
        yvals[b] = t.rhs[i].clone();
    }
    let x: Vec<Rat> = (0..nfree).map(|k| &yvals[2 * k] - &yvals[2 * k + 1]).collect();
    match unb {
        None => SimplexResult::Optimal { x },
        Some(j) => {
            // increasing column j by 1 moves each basic variable by −T[i][j]
            let mut dir = vec![Rat::zero(); ncols];
            dir[j] = Rat::from_integer(1.into());
            for (i, &b) in t.basis.iter().enumerate() {
                dir[b] = -&t.rows[i][j];
            }
            let ray: Vec<Rat> = (0..nfree).map(|k| &dir[2 * k] - &dir[2 * k + 1]).collect();
            SimplexResult::Unbounded { x, ray }
        }
    }
}

// ---------------------------------------------------------------------------
// Public operations

/// Exact optimization. Determinism: identical input yields an identical
/// outcome, witness included.
pub fn lp_optimize(prog: &LinProgram, objective: &[Rat], direction: Direction) -> LpOutcome {
    assert_eq!(objective.len(), prog.dim, "objective dimension mismatch");
    let pre = match presolve(prog) {
        PresolveResult::Infeasible(farkas) => return LpOutcome::infeasible(farkas),
        PresolveResult::Ok(p) => p,
    };
    // compose the objective with the substitutions
    let mut full_obj = objective.to_vec();
    for (v, _, lin) in &pre.subs {
        let cv = std::mem::replace(&mut full_obj[*v], Rat::zero());
        if cv.is_zero() {
            continue;
        }
        for (u, l) in lin.iter().enumerate() {
            if !l.is_zero() {
                full_obj[u] = &full_obj[u] + &cv * l;
            }
        }
    }
    let mut red_obj: Vec<Rat> = pre.free.iter().map(|&v| full_obj[v].clone()).collect();
    if direction == Direction::Max {
        for c in red_obj.iter_mut() {
            *c = -&*c;
        }
    }
    let rows: Vec<(Vec<Rat>, Rat)> =
        pre.rows.iter().map(|r| (r.coeffs.clone(), r.rhs.clone())).collect();
    match simplex_ge(pre.free.len(), &rows, &red_obj) {
        SimplexResult::Infeasible { farkas } => LpOutcome::infeasible(pre.expand_farkas(&farkas)),
        SimplexResult::Optimal { x } => {
            let witness = pre.expand_point(&x);
            let value = dot(objective, &witness);
            debug_assert!(satisfies_all(prog, &witness));
            LpOutcome::optimal(witness, value)
        }
        SimplexResult::Unbounded { x, ray } => {
            let witness = pre.expand_point(&x);
            debug_assert!(satisfies_all(prog, &witness));
            let ray = pre.expand_ray(&ray);
            // orient the improving ray with the requested direction
            let d = dot(objective, &ray);
            debug_assert!(!d.is_zero());
            let flip = match direction {
                Direction::Max => d.is_negative(),
                Direction::Min => d.is_positive(),
            };
            let ray = if flip { ray.iter().map(|c| -c).collect() } else { ray };
            LpOutcome::unbounded(witness, ray)
        }
    }
}

/// Feasibility: Optimal with a witness, or Infeasible with Farkas
/// multipliers retained in the outcome.
pub fn lp_feasible(prog: &LinProgram) -> LpOutcome {
    let zero_obj = vec![Rat::zero(); prog.dim];
    let out = lp_optimize(prog, &zero_obj, Direction::Min);
    debug_assert_ne!(out.status, LpStatus::Unbounded);
    if out.status == LpStatus::Infeasible {
        debug_assert!(check_farkas(prog, out.farkas.as_ref().unwrap()));
    }
    out
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rat::zero(), |s, v| s + v)
}

/// Exact re-substitution of a point into every constraint.
pub fn satisfies_all(prog: &LinProgram, x: &[Rat]) -> bool {
    prog.constraints.iter().all(|c| {
        let lhs = dot(&c.coeffs, x);
        match c.sense {
            Sense::Ge => lhs >= c.rhs,
            Sense::Le => lhs <= c.rhs,
            Sense::Eq => lhs == c.rhs,
        }
    })
}

/// Audit a Farkas certificate: multipliers on GE-normalized rows must be
/// nonnegative on inequalities (sign-free on equalities), combine the
/// coefficient rows to zero, and combine the right-hand sides to a positive
/// number. Such a combination proves the program empty.
pub fn check_farkas(prog: &LinProgram, multipliers: &[Rat]) -> bool {
    if multipliers.len() != prog.constraints.len() {
        return false;
    }
    let mut combo = vec![Rat::zero(); prog.dim];
    let mut rhs = Rat::zero();
    for (c, lam) in prog.constraints.iter().zip(multipliers) {
        let n = c.normalized();
        if n.sense == Sense::Ge && lam.is_negative() {
            return false;
        }
        for (u, a) in n.coeffs.iter().enumerate() {
            combo[u] = &combo[u] + lam * a;
        }
        rhs = rhs + lam * &n.rhs;
    }
    combo.iter().all(|c| c.is_zero()) && rhs.is_positive()
}

/// True iff `functional · x = offset` on every feasible point, decided by
/// maximizing and minimizing the functional.
pub fn is_forced_zero(prog: &LinProgram, functional: &[Rat], offset: &Rat) -> Result<bool> {
    let max = lp_optimize(prog, functional, Direction::Max);
    match max.status {
        LpStatus::Infeasible => return Err(Error::ForcedZeroOnEmptySet),
        LpStatus::Unbounded => return Ok(false),
        LpStatus::Optimal => {
            if max.value.as_ref() != Some(offset) {
                return Ok(false);
            }
        }
    }
    let min = lp_optimize(prog, functional, Direction::Min);
    Ok(min.status == LpStatus::Optimal && min.value.as_ref() == Some(offset))
}

/// A point satisfying all equalities exactly and all inequalities strictly,
/// found by maximizing a uniform slack t with t <= 1.
pub fn relative_interior_point(
    equalities: &[LinConstraint],
    inequalities: &[LinConstraint],
) -> Result<Vec<Rat>> {
    let dim = equalities
        .iter()
        .chain(inequalities)
        .map(|c| c.coeffs.len())
        .next()
        .unwrap_or(0);
    let mut prog = LinProgram::new(dim + 1);
    for e in equalities {
        debug_assert_eq!(e.sense, Sense::Eq);
        let mut coeffs = e.coeffs.clone();
        coeffs.push(Rat::zero());
        prog.push(LinConstraint::eq(coeffs, e.rhs.clone()));
    }
    let minus_one = -Rat::from_integer(1.into());
    for q in inequalities {
        let n = q.normalized();
        debug_assert_eq!(n.sense, Sense::Ge);
        let mut coeffs = n.coeffs;
        coeffs.push(minus_one.clone()); // coeffs·x − t ≥ rhs
        prog.push(LinConstraint::ge(coeffs, n.rhs));
    }
    let mut t_row = vec![Rat::zero(); dim + 1];
    t_row[dim] = Rat::from_integer(1.into());
    prog.push(LinConstraint::le(t_row.clone(), Rat::from_integer(1.into())));
    let out = lp_optimize(&prog, &t_row, Direction::Max);
    match out.status {
        LpStatus::Infeasible => Err(Error::InvalidInput("relative interior of empty set".into())),
        LpStatus::Unbounded => unreachable!("objective t is bounded above by 1"),
        LpStatus::Optimal => {
            if !out.value.unwrap().is_positive() {
                return Err(Error::MustPromoteToEquality);
            }
            let mut witness = out.witness.unwrap();
            witness.truncate(dim);
            Ok(witness)
        }
    }
}
