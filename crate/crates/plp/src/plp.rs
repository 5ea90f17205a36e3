//! Local feasibility of one-parameter polynomial linear programs.
//!
//! The solver decides whether `A(d) x >= b(d)` has solutions for every `d`
//! in a one-sided punctured neighbourhood of 0. Feasibility on (0, eps) is
//! equivalent to the existence of a rational-function solution
//! `x(d) = p(d) / (d^c (1 + d q1(d)))` of bounded degree; searching for its
//! coefficients reduces to a chain condition on the constraint polynomials
//! `f_i(d) = A_i(d) p(d) − b_i(d) q(d)`: the first nonzero coefficient of
//! each f_i must be positive (or the whole chain zero). That condition is a
//! union-of-half-affine-subspaces emptiness problem, decided by subspace
//! elimination over exact LPs.

use crate::lp::{
    self, is_forced_zero, lp_feasible, lp_optimize, Direction, LinConstraint, LinProgram,
    LpOutcome, LpStatus,
};
use crate::poly::{rat_int, Poly, Rat};
use crate::ratfunc::RatFunc;
use crate::sturm::{self, smallest_positive_root_bound, RootBound, WitnessKind};
use crate::{Error, Result};
use num_traits::{Signed, Zero};

// ---------------------------------------------------------------------------
// Instances

/// Rectangular grid of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<Poly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged polynomial matrix".into()));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }
    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i]
    }

    pub fn max_degree(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn map<F: Fn(&Poly) -> Poly>(&self, f: F) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

/// The system `A(d) x >= b(d)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlpInstance {
    pub a: PolyMatrix,
    pub b: Vec<Poly>,
}

impl PlpInstance {
    pub fn new(a: PolyMatrix, b: Vec<Poly>) -> Result<Self> {
        if b.len() != a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "A has {} rows but b has {} entries",
                a.rows(),
                b.len()
            )));
        }
        Ok(PlpInstance { a, b })
    }

    pub fn n_vars(&self) -> usize {
        self.a.cols()
    }
    pub fn n_constraints(&self) -> usize {
        self.a.rows()
    }

    /// Max degree D over all entries of A and b.
    pub fn max_degree(&self) -> usize {
        self.a
            .max_degree()
            .max(self.b.iter().filter_map(|p| p.degree()).max().unwrap_or(0))
    }

    /// The degree bound 2nD on numerator and denominator of a rational
    /// solution, below which feasibility is guaranteed to show up.
    pub fn full_degree_bound(&self) -> usize {
        2 * self.n_vars() * self.max_degree()
    }

    pub fn map_polys<F: Fn(&Poly) -> Poly>(&self, f: F) -> PlpInstance {
        PlpInstance {
            a: self.a.map(&f),
            b: self.b.iter().map(&f).collect(),
        }
    }

    /// Mirror the parameter: the negative side of `self` is the positive
    /// side of the mirrored instance.
    pub fn substitute_neg(&self) -> PlpInstance {
        self.map_polys(|p| p.substitute_neg())
    }

    /// The ordinary LP at a fixed parameter value.
    pub fn eval_at(&self, delta: &Rat) -> LinProgram {
        let mut prog = LinProgram::new(self.n_vars());
        for i in 0..self.n_constraints() {
            let coeffs = self.a.row(i).iter().map(|p| p.eval(delta)).collect();
            prog.push(LinConstraint::ge(coeffs, self.b[i].eval(delta)));
        }
        prog
    }
}

/// Exact feasibility of the instance at one parameter value.
pub fn feasibility_at_point(inst: &PlpInstance, delta: &Rat) -> bool {
    lp_feasible(&inst.eval_at(delta)).status == LpStatus::Optimal
}

// ---------------------------------------------------------------------------
// Coefficient space and chains

/// Index layout for the unknown coefficients: first the numerator
/// coefficients h_{j,t} (variable-major), then the denominator-tail
/// coefficients g_0 .. g_{deg_q1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoeffSpace {
    pub n_vars: usize,
    pub c: usize,
    pub deg_p: usize,
    pub deg_q1: usize,
}

impl CoeffSpace {
    pub fn total_dim(&self) -> usize {
        self.n_vars * (self.deg_p + 1) + self.deg_q1 + 1
    }
    pub fn h_index(&self, var: usize, pow: usize) -> usize {
        debug_assert!(var < self.n_vars && pow <= self.deg_p);
        var * (self.deg_p + 1) + pow
    }
    pub fn q_index(&self, pow: usize) -> usize {
        debug_assert!(pow <= self.deg_q1);
        self.n_vars * (self.deg_p + 1) + pow
    }

    /// Decode a coefficient point into the numerators p_j and the full
    /// denominator q(d) = d^c (1 + d q1(d)).
    pub fn decode(&self, point: &[Rat]) -> (Vec<Poly>, Poly) {
        assert_eq!(point.len(), self.total_dim());
        let nums: Vec<Poly> = (0..self.n_vars)
            .map(|j| {
                Poly::from_coeffs((0..=self.deg_p).map(|t| point[self.h_index(j, t)].clone()).collect())
            })
            .collect();
        let q1 = Poly::from_coeffs((0..=self.deg_q1).map(|s| point[self.q_index(s)].clone()).collect());
        let den = (&Poly::one() + &q1.shift_up(1)).shift_up(self.c);
        (nums, den)
    }
}

/// An affine functional `lin · x + k` over the coefficient space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffForm {
    pub lin: Vec<Rat>,
    pub k: Rat,
}

impl AffForm {
    pub fn zero(dim: usize) -> Self {
        AffForm { lin: vec![Rat::zero(); dim], k: Rat::zero() }
    }
    pub fn is_zero(&self) -> bool {
        self.k.is_zero() && self.lin.iter().all(|c| c.is_zero())
    }
    pub fn is_constant(&self) -> bool {
        self.lin.iter().all(|c| c.is_zero())
    }
    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.lin
            .iter()
            .zip(x)
            .map(|(a, v)| a * v)
            .fold(self.k.clone(), |s, t| s + t)
    }
    /// The constraint `self >= 0`.
    pub fn ge_zero(&self) -> LinConstraint {
        LinConstraint::ge(self.lin.clone(), -&self.k)
    }
    /// The constraint `self = 0`.
    pub fn eq_zero(&self) -> LinConstraint {
        LinConstraint::eq(self.lin.clone(), -&self.k)
    }
}

/// The delta-coefficients of one constraint polynomial f_i, each an affine
/// functional over the coefficient space. Trailing identically-zero forms
/// are trimmed, so the chain length is the exact symbolic degree plus one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffChain {
    pub constraint_index: usize,
    pub forms: Vec<AffForm>,
}

/// Expand f_i(d) = A_i(d) · p(d) − d^{c+1} q1(d) b_i(d) − d^c b_i(d)
/// symbolically into per-power affine functionals.
pub fn build_coeff_chains(inst: &PlpInstance, space: &CoeffSpace) -> Vec<CoeffChain> {
    let n = inst.n_vars();
    debug_assert_eq!(n, space.n_vars);
    let dim = space.total_dim();
    let deg_a = inst.a.max_degree();
    let deg_b = inst.b.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let max_pow = (deg_a + space.deg_p).max(space.c + 1 + space.deg_q1 + deg_b).max(space.c + deg_b);
    let mut chains = Vec::with_capacity(inst.n_constraints());
    for i in 0..inst.n_constraints() {
        let mut forms: Vec<AffForm> = (0..=max_pow).map(|_| AffForm::zero(dim)).collect();
        // A_i(d) · p(d): coefficient of d^r picks A_ij[r−t] · h_{j,t}
        for j in 0..n {
            let a = inst.a.entry(i, j);
            for (u, coeff) in a.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for t in 0..=space.deg_p {
                    let idx = space.h_index(j, t);
                    forms[u + t].lin[idx] = &forms[u + t].lin[idx] + coeff;
                }
            }
        }
        // − d^{c+1} q1(d) b_i(d): coefficient of d^{c+1+s+u} gets −b_i[u] g_s
        for (u, coeff) in inst.b[i].coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for s in 0..=space.deg_q1 {
                let idx = space.q_index(s);
                let r = space.c + 1 + s + u;
                forms[r].lin[idx] = &forms[r].lin[idx] - coeff;
            }
            // − d^c b_i(d): constant part
            let r = space.c + u;
            forms[r].k = &forms[r].k - coeff;
        }
        while forms.last().map_or(false, |f| f.is_zero()) {
            forms.pop();
        }
        chains.push(CoeffChain { constraint_index: i, forms });
    }
    chains
}

// ---------------------------------------------------------------------------
// Subspace elimination

/// An affine subspace cut by one strict inequality: {equalities = 0,
/// strict < 0}. Construction rejects empty sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfAffineSubspace {
    pub equalities: Vec<AffForm>,
    pub strict: AffForm,
}

impl HalfAffineSubspace {
    pub fn new(equalities: Vec<AffForm>, strict: AffForm, ambient_dim: usize) -> Result<Self> {
        let mut prog = LinProgram::new(ambient_dim);
        for e in &equalities {
            prog.push(e.eq_zero());
        }
        let out = lp_optimize(&prog, &strict.lin, Direction::Min);
        match out.status {
            LpStatus::Infeasible => {
                return Err(Error::InvalidInput("inconsistent equalities in half-affine subspace".into()))
            }
            LpStatus::Unbounded => {}
            LpStatus::Optimal => {
                if !(out.value.unwrap() + &strict.k).is_negative() {
                    return Err(Error::InvalidInput("empty half-affine subspace: strict part unattainable".into()));
                }
            }
        }
        Ok(HalfAffineSubspace { equalities, strict })
    }
}

/// A polyhedron maintained incrementally, with a cached witness point to
/// short-circuit forced-zero probes.
struct PSet {
    prog: LinProgram,
    witness: Option<Vec<Rat>>,
    known_empty: bool,
}

impl PSet {
    fn new(dim: usize) -> Self {
        PSet { prog: LinProgram::new(dim), witness: None, known_empty: false }
    }

    /// True iff the set is nonempty; refreshes the witness.
    fn nonempty(&mut self) -> bool {
        if self.known_empty {
            return false;
        }
        if self.witness.is_some() {
            return true;
        }
        match lp_feasible(&self.prog) {
            out if out.status == LpStatus::Optimal => {
                self.witness = out.witness;
                true
            }
            _ => {
                self.known_empty = true;
                false
            }
        }
    }

    fn add_ge(&mut self, form: &AffForm) {
        self.prog.push(form.ge_zero());
        if let Some(w) = &self.witness {
            if form.eval(w).is_negative() {
                self.witness = None;
            }
        }
    }

    fn add_eq(&mut self, form: &AffForm) {
        self.prog.push(form.eq_zero());
        if let Some(w) = &self.witness {
            if !form.eval(w).is_zero() {
                self.witness = None;
            }
        }
    }

    /// Is `form = 0` across the whole set? Requires the set nonempty.
    fn forced_zero(&mut self, form: &AffForm) -> bool {
        assert!(self.nonempty());
        if form.is_constant() {
            return form.k.is_zero();
        }
        if !form.eval(self.witness.as_ref().unwrap()).is_zero() {
            return false;
        }
        is_forced_zero(&self.prog, &form.lin, &-&form.k).expect("set checked nonempty")
    }

    /// One solve deciding all frontiers at once: maximize a uniform slack t
    /// subject to the set's constraints, `form_i >= t` for every frontier,
    /// and `t <= 1`. Every frontier already satisfies `>= 0` on the set, so
    /// the optimum is 0 or positive. A positive optimum certifies that no
    /// frontier is forced to zero (the witness makes them all strictly
    /// positive at once); a zero optimum means at least one frontier is
    /// forced to zero — by convexity, averaging per-frontier positivity
    /// witnesses would otherwise yield a point with uniform positive slack —
    /// and any forced-zero frontier must vanish at the returned witness.
    /// Returns None when the set is empty.
    fn max_uniform_slack(&mut self, frontiers: &[&AffForm]) -> Option<(bool, Vec<Rat>)> {
        if self.known_empty {
            return None;
        }
        let dim = self.prog.dim;
        let one = Rat::from_integer(1.into());
        let mut prog = LinProgram::new(dim + 1);
        for c in &self.prog.constraints {
            let mut coeffs = c.coeffs.clone();
            coeffs.push(Rat::zero());
            prog.push(LinConstraint { coeffs, rhs: c.rhs.clone(), sense: c.sense });
        }
        for f in frontiers {
            let mut coeffs = f.lin.clone();
            coeffs.push(-&one); // lin · x - t >= -k
            prog.push(LinConstraint::ge(coeffs, -&f.k));
        }
        let mut t_row = vec![Rat::zero(); dim + 1];
        t_row[dim] = one;
        prog.push(LinConstraint::le(t_row.clone(), t_row[dim].clone()));
        let out = lp_optimize(&prog, &t_row, Direction::Max);
        match out.status {
            LpStatus::Infeasible => {
                // t is free below, so only an empty base set can do this
                self.known_empty = true;
                self.witness = None;
                None
            }
            LpStatus::Unbounded => unreachable!("slack objective bounded above by 1"),
            LpStatus::Optimal => {
                let positive = out.value.unwrap().is_positive();
                let mut w = out.witness.unwrap();
                w.truncate(dim);
                self.witness = Some(w.clone());
                Some((positive, w))
            }
        }
    }

    /// Like `forced_zero` but assumes `form >= 0` already holds on the set,
    /// so a single maximization settles it (and refreshes the witness).
    fn forced_zero_nonneg(&mut self, form: &AffForm) -> bool {
        assert!(self.nonempty());
        if form.is_constant() {
            return form.k.is_zero();
        }
        if form.eval(self.witness.as_ref().unwrap()).is_positive() {
            return false;
        }
        let out = lp_optimize(&self.prog, &form.lin, Direction::Max);
        match out.status {
            LpStatus::Infeasible => unreachable!("set checked nonempty"),
            LpStatus::Unbounded => {
                if let Some(w) = out.witness {
                    self.witness = Some(w);
                }
                false
            }
            LpStatus::Optimal => {
                let max_val = out.value.unwrap() + &form.k;
                self.witness = out.witness;
                max_val.is_zero()
            }
        }
    }
}

/// Does the complement of the union of the half-affine subspaces contain a
/// point? Repeatedly discard any subspace whose affine hull contains the
/// running polyhedron P, adding the complementary closed half-space to P;
/// the answer is whether P survives nonempty.
pub fn subspace_elimination_generic(spaces: &[HalfAffineSubspace], ambient_dim: usize) -> bool {
    let mut p = PSet::new(ambient_dim);
    let mut remaining: Vec<&HalfAffineSubspace> = spaces.iter().collect();
    loop {
        if !p.nonempty() {
            return false;
        }
        let pos = remaining
            .iter()
            .position(|b| b.equalities.iter().all(|e| p.forced_zero(e)));
        match pos {
            Some(idx) => {
                let b = remaining.remove(idx);
                // P ⊆ aff(B): carve B away by requiring strict >= 0
                let complement = AffForm { lin: b.strict.lin.clone(), k: b.strict.k.clone() };
                p.add_ge(&complement);
            }
            None => return true,
        }
    }
}

/// Per-chain search state for the specialized elimination.
enum ChainState {
    /// `added` leading forms have been constrained `>= 0`; all but the last
    /// of them are proven zero on P.
    Active { added: usize },
    /// Every form in the chain is proven zero on P.
    AllZero,
}

/// Specialized subspace elimination over coefficient chains: returns a
/// coefficient point at which the first nonzero entry of each chain is
/// strictly positive (chains proven all-zero are allowed), or None when no
/// such point exists for these degree caps.
pub fn subspace_elimination_plp(chains: &[CoeffChain], space: &CoeffSpace) -> Option<Vec<Rat>> {
    let dim = space.total_dim();
    let active: Vec<&CoeffChain> = chains.iter().filter(|ch| !ch.forms.is_empty()).collect();
    if active.is_empty() {
        return Some(vec![Rat::zero(); dim]);
    }
    let mut p = PSet::new(dim);
    let mut states: Vec<ChainState> = active.iter().map(|_| ChainState::Active { added: 0 }).collect();
    let mut pass = 0usize;
    loop {
        if !p.nonempty() {
            return None;
        }
        pass += 1;
        let pass_started = std::time::Instant::now();
        let stats0 = lp::lp_stats();
        let mut updated = false;
        for (ch, st) in active.iter().zip(states.iter_mut()) {
            // aff of a chain's first half-subspace is the whole space
            if matches!(st, ChainState::Active { added: 0 }) {
                p.add_ge(&ch.forms[0]);
                *st = ChainState::Active { added: 1 };
                updated = true;
            }
        }
        let frontiers: Vec<&AffForm> = active
            .iter()
            .zip(&states)
            .filter_map(|(ch, st)| match st {
                ChainState::Active { added } => Some(&ch.forms[added - 1]),
                ChainState::AllZero => None,
            })
            .collect();
        if frontiers.is_empty() {
            // every chain proven all-zero: the cached witness satisfies all
            // the recorded equalities
            break;
        }
        let n_frontiers = frontiers.len();
        let Some((all_positive, w)) = p.max_uniform_slack(&frontiers) else {
            return None;
        };
        if all_positive {
            // every proven-zero form vanishes at w and every frontier is
            // strictly positive there: w is a valid coefficient point
            let stats1 = lp::lp_stats();
            log::trace!(
                "pass {pass}: uniform slack positive over {n_frontiers} frontiers, {} LP solves, {} pivots, {:.1?}",
                stats1.0 - stats0.0,
                stats1.1 - stats0.1,
                pass_started.elapsed()
            );
            return Some(w);
        }
        // Zero slack optimum: some frontier is forced to zero, and it is
        // among those vanishing at the current witness, which the probes
        // below skip past cheaply.
        for (ch, st) in active.iter().zip(states.iter_mut()) {
            let ChainState::Active { added } = st else { continue };
            debug_assert!(*added > 0, "chains staged before probing");
            if !p.nonempty() {
                return None;
            }
            let frontier = &ch.forms[*added - 1];
            if p.forced_zero_nonneg(frontier) {
                p.add_eq(frontier);
                if *added == ch.forms.len() {
                    *st = ChainState::AllZero;
                } else {
                    p.add_ge(&ch.forms[*added]);
                    *st = ChainState::Active { added: *added + 1 };
                }
                updated = true;
            }
        }
        let stats1 = lp::lp_stats();
        log::trace!(
            "pass {pass}: {} active chains, {} LP solves, {} pivots, {:.1?}",
            states.iter().filter(|s| matches!(s, ChainState::Active { .. })).count(),
            stats1.0 - stats0.0,
            stats1.1 - stats0.1,
            pass_started.elapsed()
        );
        if !updated {
            // zero slack guarantees a forced-zero frontier, so the probes
            // above always advance some chain
            unreachable!("zero uniform slack with no forced-zero frontier");
        }
    }
    if !p.nonempty() {
        return None;
    }
    Some(p.witness.expect("nonempty set caches a witness"))
}


// ---------------------------------------------------------------------------
// Side solver

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Positive,
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Feasible,
    Infeasible,
    /// The capped search found nothing, but the caps were below the sound
    /// degree bound: no verdict either way.
    UnknownAtCap,
}

#[derive(Clone, PartialEq, Debug)]
pub struct SideCertificate {
    pub side: Side,
    pub verdict: Verdict,
    pub solution: Option<Vec<RatFunc>>,
    pub radius: Option<RootBound>,
    pub c_used: Option<usize>,
    pub degrees_used: Option<(usize, usize)>,
}

/// Degree-cap policy for the deepening search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchCaps {
    /// Cap on c + deg_p + deg_q1 for the ascending phase.
    pub total: usize,
    /// When set, exhaust the sound 2nD bound so a failed search proves
    /// infeasibility; otherwise failure is Unknown-at-cap.
    pub full_bound: bool,
}

pub const DEGREE_CAP_ENV: &str = "PLP_DEGREE_CAP";
const DEFAULT_QUICK_TOTAL: usize = 2;

impl SearchCaps {
    /// Sound default: quick ascending phase, then the full bound.
    pub fn full() -> Self {
        SearchCaps { total: DEFAULT_QUICK_TOTAL, full_bound: true }
    }

    /// Capped search; failures are Unknown-at-cap. The default cap comes
    /// from the PLP_DEGREE_CAP environment variable when set.
    pub fn capped_default() -> Self {
        let total = std::env::var(DEGREE_CAP_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_QUICK_TOTAL);
        SearchCaps { total, full_bound: false }
    }

    pub fn capped(total: usize) -> Self {
        SearchCaps { total, full_bound: false }
    }
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps::full()
    }
}

/// Candidate (c, deg_p, deg_q1) triples in deterministic order: ascending by
/// total size, then lexicographically. In full-bound mode one dominating
/// candidate is appended: c = 2nD, deg_p = 4nD, deg_q1 = 2nD covers every
/// rational solution within the 2nD degree bound, because
/// p / (d^{c'} (1 + d q1)) with c' <= 2nD rewrites as
/// (d^{2nD − c'} p) / (d^{2nD} (1 + d q1)) without leaving those caps.
fn candidates(caps: &SearchCaps, bound: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=caps.total {
        for c in 0..=total {
            for deg_p in 0..=(total - c) {
                out.push((c, deg_p, total - c - deg_p));
            }
        }
    }
    if caps.full_bound {
        let top = (bound, 2 * bound, bound);
        if !out.contains(&top) {
            out.push(top);
        }
    }
    out
}

/// Decide feasibility of the instance on one punctured side of 0.
pub fn solve_side(inst: &PlpInstance, side: Side, caps: &SearchCaps) -> SideCertificate {
    match side {
        Side::Negative => {
            let mirrored = inst.substitute_neg();
            let mut cert = solve_side(&mirrored, Side::Positive, caps);
            cert.side = Side::Negative;
            cert.solution = cert.solution.take().map(|sol| {
                sol.iter()
                    .map(|r| {
                        RatFunc::new(r.num().substitute_neg(), r.den().substitute_neg())
                            .expect("mirrored denominator stays nonzero")
                    })
                    .collect()
            });
            cert
        }
        Side::Positive => solve_positive(inst, caps),
    }
}

fn solve_positive(inst: &PlpInstance, caps: &SearchCaps) -> SideCertificate {
    let n = inst.n_vars();
    let bound = inst.full_degree_bound();
    for (c, deg_p, deg_q1) in candidates(caps, bound) {
        let space = CoeffSpace { n_vars: n, c, deg_p, deg_q1 };
        log::debug!(
            "candidate c={c} deg_p={deg_p} deg_q1={deg_q1} (dim {})",
            space.total_dim()
        );
        let started = std::time::Instant::now();
        let stats0 = lp::lp_stats();
        let chains = build_coeff_chains(inst, &space);
        let outcome = subspace_elimination_plp(&chains, &space);
        let stats1 = lp::lp_stats();
        log::debug!(
            "candidate c={c} deg_p={deg_p} deg_q1={deg_q1}: {} after {} LP solves, {} pivots, {:.1?}",
            if outcome.is_some() { "feasible" } else { "eliminated" },
            stats1.0 - stats0.0,
            stats1.1 - stats0.1,
            started.elapsed()
        );
        if let Some(point) = outcome {
            let (nums, den) = space.decode(&point);
            let mut family: Vec<Poly> = (0..inst.n_constraints())
                .map(|i| {
                    let mut f = Poly::zero();
                    for j in 0..n {
                        f = &f + &(inst.a.entry(i, j) * &nums[j]);
                    }
                    &f - &(&inst.b[i] * &den)
                })
                .collect();
            family.push(den.clone());
            let radius = smallest_positive_root_bound(&family)
                .expect("chain construction guarantees positivity near zero");
            let solution = nums
                .into_iter()
                .map(|p| RatFunc::new(p, den.clone()).expect("denominator is nonzero"))
                .collect();
            return SideCertificate {
                side: Side::Positive,
                verdict: Verdict::Feasible,
                solution: Some(solution),
                radius: Some(radius),
                c_used: Some(c),
                degrees_used: Some((deg_p, deg_q1)),
            };
        }
    }
    SideCertificate {
        side: Side::Positive,
        verdict: if caps.full_bound { Verdict::Infeasible } else { Verdict::UnknownAtCap },
        solution: None,
        radius: None,
        c_used: None,
        degrees_used: None,
    }
}

// ---------------------------------------------------------------------------
// Classification at and around the origin

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Summary {
    LocallyFeasible,
    LocallyInfeasible,
    Mixed,
    /// Some side came back Unknown-at-cap, so no summary can be proven.
    UnknownAtCap,
}

#[derive(Clone, Debug)]
pub struct LocalClassification {
    pub negative: SideCertificate,
    pub origin: LpOutcome,
    pub positive: SideCertificate,
    pub summary: Summary,
}

pub fn classify_local(inst: &PlpInstance) -> LocalClassification {
    classify_local_with_caps(inst, &SearchCaps::full())
}

pub fn classify_local_with_caps(inst: &PlpInstance, caps: &SearchCaps) -> LocalClassification {
    let negative = solve_side(inst, Side::Negative, caps);
    let positive = solve_side(inst, Side::Positive, caps);
    let origin = lp_feasible(&inst.eval_at(&Rat::zero()));
    let verdicts = [negative.verdict, positive.verdict];
    let summary = if verdicts.contains(&Verdict::UnknownAtCap) {
        Summary::UnknownAtCap
    } else {
        let origin_feasible = origin.status == LpStatus::Optimal;
        let all_feasible =
            origin_feasible && verdicts.iter().all(|v| *v == Verdict::Feasible);
        let all_infeasible =
            !origin_feasible && verdicts.iter().all(|v| *v == Verdict::Infeasible);
        if all_feasible {
            Summary::LocallyFeasible
        } else if all_infeasible {
            Summary::LocallyInfeasible
        } else {
            Summary::Mixed
        }
    };
    LocalClassification { negative, origin, positive, summary }
}

// ---------------------------------------------------------------------------
// Certificate audit

/// Independently re-check a Feasible side certificate: recompute each
/// constraint residual as a rational function, verify its sign pattern near
/// zero, Sturm-count roots on the claimed interval, and exact-evaluate at
/// the midpoint. Malformed certificates return false (with a logged reason).
pub fn check_certificate(inst: &PlpInstance, cert: &SideCertificate) -> bool {
    if cert.verdict != Verdict::Feasible {
        log::warn!("certificate audit requires a Feasible verdict");
        return false;
    }
    let (inst, solution) = match cert.side {
        Side::Positive => (inst.clone(), cert.solution.clone()),
        Side::Negative => (
            inst.substitute_neg(),
            cert.solution.as_ref().map(|sol| {
                sol.iter()
                    .map(|r| {
                        RatFunc::new(r.num().substitute_neg(), r.den().substitute_neg()).unwrap()
                    })
                    .collect()
            }),
        ),
    };
    let Some(solution) = solution else {
        log::warn!("certificate missing a solution");
        return false;
    };
    let Some(radius) = &cert.radius else {
        log::warn!("certificate missing a radius");
        return false;
    };
    if solution.len() != inst.n_vars() {
        log::warn!("solution length does not match the instance");
        return false;
    }
    if !radius.value.is_positive() {
        log::warn!("non-positive radius");
        return false;
    }
    // every component's denominator must be positive immediately right of 0
    for r in &solution {
        let first = r.den().valuation().map(|v| r.den().coeff(v));
        if !first.map_or(false, |c| c.is_positive()) {
            log::warn!("solution denominator not positive near zero");
            return false;
        }
    }
    let half = &radius.value / rat_int(2);
    for i in 0..inst.n_constraints() {
        // residual_i = A_i · x − b_i as a rational function
        let mut res = RatFunc::from_poly(-&inst.b[i]);
        for j in 0..inst.n_vars() {
            res = res.add(&solution[j].mul(&RatFunc::from_poly(inst.a.entry(i, j).clone())));
        }
        if res.is_zero() {
            continue;
        }
        // poles of the residual must stay outside (0, radius]
        let den = res.den();
        let dv = den.valuation().unwrap();
        let den_tail = den.shift_down(dv);
        if root_in_interval(&den_tail, radius) {
            log::warn!("constraint {i}: solution has a pole inside the claimed interval");
            return false;
        }
        // sign of the residual on (0, radius]: num·den must be positive
        let g = res.num() * den;
        let gv = g.valuation().unwrap();
        let g_tail = g.shift_down(gv);
        if !g_tail.coeff(0).is_positive() {
            log::warn!("constraint {i}: residual not positive near zero");
            return false;
        }
        if root_in_interval(&g_tail, radius) {
            log::warn!("constraint {i}: residual changes sign inside the claimed interval");
            return false;
        }
        // independent exact midpoint evaluation
        match res.eval(&half) {
            Some(v) if !v.is_negative() => {}
            _ => {
                log::warn!("constraint {i}: residual not satisfied at the interval midpoint");
                return false;
            }
        }
    }
    true
}

/// Does `p` (nonzero, p(0) != 0) have a root in the certified interval —
/// (0, value] for IsolatedBelowRoot, (0, ∞) for NoPositiveRoot?
fn root_in_interval(p: &Poly, radius: &RootBound) -> bool {
    let zero = Rat::zero();
    match radius.witness_kind {
        WitnessKind::NoPositiveRoot => {
            sturm::sturm_count_above(p, &zero).map_or(true, |c| c > 0)
        }
        WitnessKind::IsolatedBelowRoot => {
            if p.eval(&radius.value).is_zero() {
                return true;
            }
            sturm::sturm_count(p, &zero, &radius.value).map_or(true, |c| c > 0)
        }
    }
}

// re-exported for integration tests that audit Farkas data
pub use lp::check_farkas;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn pm(entries: Vec<Vec<Poly>>) -> PolyMatrix {
        PolyMatrix::new(entries).unwrap()
    }

    fn single(a: Poly, b: Poly) -> PlpInstance {
        PlpInstance::new(pm(vec![vec![a]]), vec![b]).unwrap()
    }

    #[test]
    fn chain_expansion_shifted_denominator() {
        // A = [d], b = [1], c = 1, deg_p = 0, deg_q1 = 0:
        // f = d·h0 − d²·g0 − d, so [f]0 = 0, [f]1 = h0 − 1, [f]2 = −g0
        let inst = single(Poly::from_i64(&[0, 1]), Poly::one());
        let space = CoeffSpace { n_vars: 1, c: 1, deg_p: 0, deg_q1: 0 };
        let chains = build_coeff_chains(&inst, &space);
        assert_eq!(chains.len(), 1);
        let forms = &chains[0].forms;
        assert_eq!(forms.len(), 3);
        assert!(forms[0].is_zero());
        assert_eq!(forms[1].lin, vec![rat_int(1), rat_int(0)]);
        assert_eq!(forms[1].k, rat_int(-1));
        assert_eq!(forms[2].lin, vec![rat_int(0), rat_int(-1)]);
        assert_eq!(forms[2].k, rat_int(0));
    }

    #[test]
    fn chain_expansion_linear_numerator() {
        // A = [1], b = [d], c = 0, deg_p = 1, deg_q1 = 0:
        // f = h0 + h1 d − d² g0 − d: [f]0 = h0, [f]1 = h1 − 1, [f]2 = −g0
        let inst = single(Poly::one(), Poly::from_i64(&[0, 1]));
        let space = CoeffSpace { n_vars: 1, c: 0, deg_p: 1, deg_q1: 0 };
        let chains = build_coeff_chains(&inst, &space);
        let forms = &chains[0].forms;
        assert_eq!(forms.len(), 3);
        assert_eq!(forms[0].lin, vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(forms[0].k, rat_int(0));
        assert_eq!(forms[1].lin, vec![rat_int(0), rat_int(1), rat_int(0)]);
        assert_eq!(forms[1].k, rat_int(-1));
        assert_eq!(forms[2].lin, vec![rat_int(0), rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn chain_zero_instance() {
        let inst = single(Poly::zero(), Poly::zero());
        let space = CoeffSpace { n_vars: 1, c: 0, deg_p: 2, deg_q1: 1 };
        let chains = build_coeff_chains(&inst, &space);
        assert!(chains[0].forms.is_empty());
    }

    #[test]
    fn generic_elimination_cases() {
        // no subspaces: the whole plane survives
        assert!(subspace_elimination_generic(&[], 2));

        // {x < 1} ∪ {−x < 0} covers all of R
        let b1 = HalfAffineSubspace::new(
            vec![],
            AffForm { lin: vec![rat_int(1)], k: rat_int(-1) },
            1,
        )
        .unwrap();
        let b2 = HalfAffineSubspace::new(
            vec![],
            AffForm { lin: vec![rat_int(-1)], k: rat_int(0) },
            1,
        )
        .unwrap();
        assert!(!subspace_elimination_generic(&[b1, b2], 1));

        // a single half-space leaves its complement
        let b = HalfAffineSubspace::new(
            vec![],
            AffForm { lin: vec![rat_int(1), rat_int(0)], k: rat_int(0) },
            2,
        )
        .unwrap();
        assert!(subspace_elimination_generic(&[b], 2));
    }

    #[test]
    fn plp_elimination_single_frontier() {
        // single chain [h − 1]: frontier must come out strictly positive
        let space = CoeffSpace { n_vars: 1, c: 0, deg_p: 0, deg_q1: 0 };
        let dim = space.total_dim();
        let mut form = AffForm::zero(dim);
        form.lin[0] = rat_int(1);
        form.k = rat_int(-1);
        let chains = vec![CoeffChain { constraint_index: 0, forms: vec![form.clone()] }];
        let point = subspace_elimination_plp(&chains, &space).unwrap();
        assert!(form.eval(&point).is_positive());
    }

    #[test]
    fn plp_elimination_zero_then_free() {
        // chain [0, h]: the zero form is vacuous, then h > 0 is demanded
        let space = CoeffSpace { n_vars: 1, c: 0, deg_p: 0, deg_q1: 0 };
        let dim = space.total_dim();
        let mut h = AffForm::zero(dim);
        h.lin[0] = rat_int(1);
        let chains =
            vec![CoeffChain { constraint_index: 0, forms: vec![AffForm::zero(dim), h.clone()] }];
        let point = subspace_elimination_plp(&chains, &space).unwrap();
        assert!(h.eval(&point).is_positive());
    }

    #[test]
    fn plp_elimination_conflicting_chains() {
        // chains [h, −1] and [−h]: h is forced to 0, then −1 >= 0 empties P
        let space = CoeffSpace { n_vars: 1, c: 0, deg_p: 0, deg_q1: 0 };
        let dim = space.total_dim();
        let mut h = AffForm::zero(dim);
        h.lin[0] = rat_int(1);
        let mut neg_h = AffForm::zero(dim);
        neg_h.lin[0] = rat_int(-1);
        let mut minus_one = AffForm::zero(dim);
        minus_one.k = rat_int(-1);
        let chains = vec![
            CoeffChain { constraint_index: 0, forms: vec![h, minus_one] },
            CoeffChain { constraint_index: 1, forms: vec![neg_h] },
        ];
        assert!(subspace_elimination_plp(&chains, &space).is_none());
    }

    #[test]
    fn solve_side_pole_instance() {
        // d·x >= 1 is feasible just right of 0 via x ~ 1/d, on all of (0, ∞)
        let inst = single(Poly::from_i64(&[0, 1]), Poly::one());
        let cert = solve_side(&inst, Side::Positive, &SearchCaps::full());
        assert_eq!(cert.verdict, Verdict::Feasible);
        assert_eq!(cert.c_used, Some(1));
        assert_eq!(
            cert.radius.as_ref().unwrap().witness_kind,
            WitnessKind::NoPositiveRoot
        );
        assert!(check_certificate(&inst, &cert));
    }

    #[test]
    fn solve_side_infeasible() {
        // x >= d and −x >= 0 conflict for every d > 0
        let inst = PlpInstance::new(
            pm(vec![vec![Poly::one()], vec![Poly::from_i64(&[-1])]]),
            vec![Poly::from_i64(&[0, 1]), Poly::zero()],
        )
        .unwrap();
        let cert = solve_side(&inst, Side::Positive, &SearchCaps::full());
        assert_eq!(cert.verdict, Verdict::Infeasible);
        // while the capped search alone cannot conclude
        let capped = solve_side(&inst, Side::Positive, &SearchCaps::capped(0));
        assert_eq!(capped.verdict, Verdict::UnknownAtCap);
    }

    #[test]
    fn solve_side_degenerate_degree() {
        // d² x >= d needs x ~ 1/d
        let inst = single(Poly::from_i64(&[0, 0, 1]), Poly::from_i64(&[0, 1]));
        let cert = solve_side(&inst, Side::Positive, &SearchCaps::full());
        assert_eq!(cert.verdict, Verdict::Feasible);
        assert_eq!(cert.c_used, Some(1));
        assert!(check_certificate(&inst, &cert));
        let sol = &cert.solution.as_ref().unwrap()[0];
        // solution behaves like a simple pole at zero
        let v = sol.eval(&rat(1, 8)).unwrap();
        assert!(v >= rat_int(8));
    }

    #[test]
    fn classify_trivially_feasible_and_infeasible() {
        // x >= d²: x = 1 works on both sides and at zero
        let inst = single(Poly::one(), Poly::from_i64(&[0, 0, 1]));
        let cls = classify_local(&inst);
        assert_eq!(cls.summary, Summary::LocallyFeasible);
        assert!(check_certificate(&inst, &cls.positive));
        assert!(check_certificate(&inst, &cls.negative));

        // 0 >= 1 never holds
        let inst = single(Poly::zero(), Poly::one());
        let cls = classify_local(&inst);
        assert_eq!(cls.summary, Summary::LocallyInfeasible);
    }

    #[test]
    fn side_symmetry() {
        // x >= d is feasible on the positive side only via growing x; on the
        // negative side x = 0 works. Mirroring must match.
        let inst = single(Poly::one(), Poly::from_i64(&[0, 1]));
        let neg = solve_side(&inst, Side::Negative, &SearchCaps::full());
        let mirrored = solve_side(&inst.substitute_neg(), Side::Positive, &SearchCaps::full());
        assert_eq!(neg.verdict, mirrored.verdict);
        assert_eq!(neg.c_used, mirrored.c_used);
        assert!(check_certificate(&inst, &neg));
    }

    #[test]
    fn certificate_tampering_detected() {
        // x >= 1 and d x <= 1/2: any solution stops working by d = 1/2
        let a = PolyMatrix::new(vec![
            vec![Poly::one()],
            vec![Poly::from_i64(&[0, -1])],
        ])
        .unwrap();
        let inst =
            PlpInstance::new(a, vec![Poly::one(), Poly::constant(rat(-1, 2))]).unwrap();
        let cert = solve_side(&inst, Side::Positive, &SearchCaps::full());
        assert_eq!(cert.verdict, Verdict::Feasible);
        assert!(check_certificate(&inst, &cert));
        // inflate the radius beyond the certified zone
        let mut bad = cert.clone();
        if let Some(r) = bad.radius.as_mut() {
            r.value = rat_int(4);
        }
        assert!(!check_certificate(&inst, &bad));
    }

    #[test]
    fn certificate_denominator_sign_rejected() {
        // a solution equal to 1/d as a function, but written with a
        // denominator that is negative immediately right of zero
        let inst = single(Poly::from_i64(&[0, 1]), Poly::one());
        let cert = solve_side(&inst, Side::Positive, &SearchCaps::full());
        let mut bad = cert.clone();
        bad.solution = Some(vec![RatFunc::new(
            Poly::from_i64(&[-1, -1]),
            Poly::from_i64(&[0, -1, 0, 1]),
        )
        .unwrap()]);
        assert!(!check_certificate(&inst, &bad));
    }

    #[test]
    fn point_feasibility() {
        // x >= d at fixed parameter values
        let inst = single(Poly::one(), Poly::from_i64(&[0, 1]));
        assert!(feasibility_at_point(&inst, &rat(1, 2)));
        assert!(feasibility_at_point(&inst, &rat_int(0)));
        // 0 >= 1 is infeasible anywhere
        let bad = single(Poly::zero(), Poly::one());
        assert!(!feasibility_at_point(&bad, &rat(1, 100)));
    }
}
