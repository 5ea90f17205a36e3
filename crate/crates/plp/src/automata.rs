//! Potential-function search for probabilistic cellular automata and for
//! broadcasting on the grid, reduced to 1-PLP feasibility.
//!
//! Configurations live over the alphabet {0, 1, ?}, where ? marks sites at
//! which two coupled trajectories disagree. A potential assigns a weight to
//! every length-l pattern; it certifies ergodicity (or impossibility of
//! broadcasting) when its expected value cannot increase under the chain and
//! stays nonnegative on every cyclic string. Nonnegativity on cycles is a
//! no-negative-cycle condition on the de Bruijn pattern graph, expressible
//! with per-vertex heights z — which is what turns the whole search into a
//! parametric LP in the noise level p.

use crate::plp::{solve_side, PlpInstance, PolyMatrix, SearchCaps, Side, SideCertificate, Verdict};
use crate::poly::{rat, Poly, Rat};
use crate::ratfunc::RatFunc;
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

// ---------------------------------------------------------------------------
// Patterns

/// A string over {0, 1, ?}, indexed base-3 with 0->0, 1->1, ?->2 and the
/// leftmost symbol most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pattern {
    symbols: Vec<u8>,
}

impl Pattern {
    pub fn parse(s: &str) -> Result<Pattern> {
        if s.is_empty() {
            return Err(Error::InvalidInput("empty pattern".into()));
        }
        let symbols = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '?' => Ok(2),
                other => Err(Error::InvalidInput(format!("bad pattern symbol {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Pattern { symbols })
    }

    pub fn from_index(index: usize, len: usize) -> Pattern {
        let mut symbols = vec![0u8; len];
        let mut rest = index;
        for k in (0..len).rev() {
            symbols[k] = (rest % 3) as u8;
            rest /= 3;
        }
        debug_assert_eq!(rest, 0);
        Pattern { symbols }
    }

    pub fn index(&self) -> usize {
        self.symbols.iter().fold(0, |acc, &s| acc * 3 + s as usize)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn is_binary(&self) -> bool {
        self.symbols.iter().all(|&s| s < 2)
    }

    pub fn has_question(&self) -> bool {
        self.symbols.iter().any(|&s| s == 2)
    }

    /// First len−1 symbols (tail vertex of the edge this pattern forms).
    pub fn prefix(&self) -> Pattern {
        Pattern { symbols: self.symbols[..self.symbols.len() - 1].to_vec() }
    }

    /// Last len−1 symbols.
    pub fn suffix(&self) -> Pattern {
        Pattern { symbols: self.symbols[1..].to_vec() }
    }

    pub fn starts_with(&self, other: &Pattern) -> bool {
        self.symbols.len() >= other.symbols.len()
            && self.symbols[..other.symbols.len()] == other.symbols[..]
    }

    /// "?" prepended: the ?s0 pattern of the ergodicity reduction.
    pub fn with_question_prefix(&self) -> Pattern {
        let mut symbols = vec![2u8];
        symbols.extend_from_slice(&self.symbols);
        Pattern { symbols }
    }

    /// Cyclic length-`len` window starting at position i.
    fn cyclic_window(&self, i: usize, len: usize) -> Pattern {
        let n = self.symbols.len();
        Pattern { symbols: (0..len).map(|k| self.symbols[(i + k) % n]).collect() }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", ['0', '1', '?'][s as usize])?;
        }
        Ok(())
    }
}

/// All binary (no-?) patterns with length 1..=max_len, ordered by length
/// then index — the deterministic s0 candidate order.
pub fn binary_patterns_up_to(max_len: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for idx in 0..3usize.pow(len as u32) {
            let p = Pattern::from_index(idx, len);
            if p.is_binary() {
                out.push(p);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Transition tables

/// Single-step transition probabilities: row = length-2 pattern (the two
/// neighbours read by the rule), column = output symbol, entries polynomial
/// in the noise level p. Rows must sum to 1, and every entry must be a
/// probability for small p (spot-checked at sample points).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionTable {
    entries: Vec<[Poly; 3]>, // 9 rows
}

impl TransitionTable {
    pub fn new(entries: Vec<[Poly; 3]>) -> Result<Self> {
        if entries.len() != 9 {
            return Err(Error::DimensionMismatch("transition table must have 9 rows".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            let sum = row.iter().fold(Poly::zero(), |a, p| &a + p);
            if sum != Poly::one() {
                return Err(Error::InvalidInput(format!(
                    "transition row {} does not sum to 1",
                    Pattern::from_index(i, 2)
                )));
            }
            for sample in [rat(1, 10), rat(1, 4), rat(49, 100)] {
                if row.iter().any(|p| p.eval(&sample).is_negative()) {
                    return Err(Error::InvalidInput(format!(
                        "transition row {} goes negative on (0, 1/2)",
                        Pattern::from_index(i, 2)
                    )));
                }
            }
        }
        Ok(TransitionTable { entries })
    }

    pub fn entry(&self, window: &Pattern, out: u8) -> &Poly {
        debug_assert_eq!(window.len(), 2);
        &self.entries[window.index()][out as usize]
    }

    fn from_i64ated(rows: [[&[i64]; 3]; 9]) -> TransitionTable {
        TransitionTable::new(
            rows.iter()
                .map(|r| [Poly::from_i64(r[0]), Poly::from_i64(r[1]), Poly::from_i64(r[2])])
                .collect(),
        )
        .expect("built-in table is valid")
    }

    /// NAND with independent noise on each vertex.
    pub fn vertex_nand() -> TransitionTable {
        // rows in pattern order 00, 01, 0?, 10, 11, 1?, ?0, ?1, ??
        Self::from_i64ated([
            [&[0, 1], &[1, -1], &[]],
            [&[0, 1], &[1, -1], &[]],
            [&[0, 1], &[1, -1], &[]],
            [&[0, 1], &[1, -1], &[]],
            [&[1, -1], &[0, 1], &[]],
            [&[0, 1], &[0, 1], &[1, -2]],
            [&[0, 1], &[1, -1], &[]],
            [&[0, 1], &[0, 1], &[1, -2]],
            [&[0, 1], &[0, 1], &[1, -2]],
        ])
    }

    /// NAND with independent noise on each incoming edge; also the
    /// broadcasting NAND rule.
    pub fn edge_nand() -> TransitionTable {
        Self::from_i64ated([
            [&[0, 0, 1], &[1, 0, -1], &[]],
            [&[0, 1, -1], &[1, -1, 1], &[]],
            [&[0, 0, 1], &[1, -1, 1], &[0, 1, -2]],
            [&[0, 1, -1], &[1, -1, 1], &[]],
            [&[1, -2, 1], &[0, 2, -1], &[]],
            [&[0, 1, -1], &[0, 2, -1], &[1, -3, 2]],
            [&[0, 0, 1], &[1, -1, 1], &[0, 1, -2]],
            [&[0, 1, -1], &[0, 2, -1], &[1, -3, 2]],
            [&[0, 0, 1], &[0, 2, -1], &[1, -2]],
        ])
    }

    /// The IMP (implication) broadcasting rule with edge noise.
    pub fn imp() -> TransitionTable {
        Self::from_i64ated([
            [&[0, 1, -1], &[1, -1, 1], &[]],
            [&[0, 0, 1], &[1, 0, -1], &[]],
            [&[0, 0, 1], &[1, -1, 1], &[0, 1, -2]],
            [&[1, -2, 1], &[0, 2, -1], &[]],
            [&[0, 1, -1], &[1, -1, 1], &[]],
            [&[0, 1, -1], &[0, 2, -1], &[1, -3, 2]],
            [&[0, 1, -1], &[0, 2, -1], &[1, -3, 2]],
            [&[0, 0, 1], &[1, -1, 1], &[0, 1, -2]],
            [&[0, 0, 1], &[0, 2, -1], &[1, -2]],
        ])
    }
}

// ---------------------------------------------------------------------------
// Matrix builders

/// One-step action on pattern weights: entry (s of length l+1, s' of length
/// l) is the product of table entries over sliding windows of s.
pub fn build_c(table: &TransitionTable, ell: usize) -> PolyMatrix {
    assert!(ell >= 1);
    let rows = 3usize.pow(ell as u32 + 1);
    let cols = 3usize.pow(ell as u32);
    let entries = (0..rows)
        .map(|r| {
            let s = Pattern::from_index(r, ell + 1);
            (0..cols)
                .map(|c| {
                    let sp = Pattern::from_index(c, ell);
                    let mut prod = Poly::one();
                    for i in 0..ell {
                        let window = Pattern {
                            symbols: vec![s.symbols[i], s.symbols[i + 1]],
                        };
                        prod = &prod * table.entry(&window, sp.symbols[i]);
                        if prod.is_zero() {
                            break;
                        }
                    }
                    prod
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(entries).unwrap()
}

/// Prefix-extension operator: column s has a 1 exactly in the rows whose
/// pattern begins with s (extensions appended on the right), reflecting the
/// identity {s} = {s0} + {s1} + {s?}.
pub fn build_p(ell_from: usize, ell_to: usize) -> PolyMatrix {
    assert!(ell_to >= ell_from);
    let rows = 3usize.pow(ell_to as u32);
    let cols = 3usize.pow(ell_from as u32);
    let entries = (0..rows)
        .map(|r| {
            let rp = Pattern::from_index(r, ell_to);
            (0..cols)
                .map(|c| {
                    if rp.starts_with(&Pattern::from_index(c, ell_from)) {
                        Poly::one()
                    } else {
                        Poly::zero()
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(entries).unwrap()
}

/// Telescoping matrix of the pattern graph: the row of edge e (a pattern of
/// length l+1) reads z_{prefix(e)} − z_{suffix(e)} over the vertex space.
pub fn build_cycle_matrix(ell: usize) -> PolyMatrix {
    assert!(ell >= 1);
    let rows = 3usize.pow(ell as u32 + 1);
    let cols = 3usize.pow(ell as u32);
    let entries = (0..rows)
        .map(|r| {
            let e = Pattern::from_index(r, ell + 1);
            let (pre, suf) = (e.prefix().index(), e.suffix().index());
            (0..cols)
                .map(|c| {
                    let mut v = Poly::zero();
                    if c == pre {
                        v = &v + &Poly::one();
                    }
                    if c == suf {
                        v = &v - &Poly::one();
                    }
                    v
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(entries).unwrap()
}

// ---------------------------------------------------------------------------
// Instance assembly

/// Ergodicity system for a PCA rule: unknowns (w: 3^l, z: 3^l); for every
/// edge e of the pattern graph,
///   z_prefix − z_suffix <= [P(w) − C w − P({?s0})]_e,
/// rearranged into the core solver's A(d) x >= b(d) orientation with d = p.
pub fn assemble_pca_plp(table: &TransitionTable, ell: usize, s0: &Pattern) -> Result<PlpInstance> {
    if !s0.is_binary() {
        return Err(Error::InvalidInput("s0 must contain only 0/1 symbols".into()));
    }
    if s0.len() > ell {
        return Err(Error::InvalidInput(format!(
            "s0 has length {} exceeding l = {}",
            s0.len(),
            ell
        )));
    }
    let nv = 3usize.pow(ell as u32);
    let ne = 3 * nv;
    let c = build_c(table, ell);
    let qs0 = s0.with_question_prefix();
    let mut rows = Vec::with_capacity(ne);
    let mut rhs = Vec::with_capacity(ne);
    for r in 0..ne {
        let e = Pattern::from_index(r, ell + 1);
        let mut row = vec![Poly::zero(); 2 * nv];
        // w-block: P(w)_e − (C w)_e = w_{prefix(e)} − Σ C_{e,s} w_s
        row[e.prefix().index()] = Poly::one();
        for s in 0..nv {
            row[s] = &row[s] - c.entry(r, s);
        }
        // z-block: −z_prefix + z_suffix
        row[nv + e.prefix().index()] = &row[nv + e.prefix().index()] - &Poly::one();
        row[nv + e.suffix().index()] = &row[nv + e.suffix().index()] + &Poly::one();
        rows.push(row);
        rhs.push(if e.starts_with(&qs0) { Poly::one() } else { Poly::zero() });
    }
    PlpInstance::new(PolyMatrix::new(rows)?, rhs)
}

/// Broadcasting-impossibility system: unknowns (w: 3^l, z: 3^l, z': 3^l);
/// two telescoping blocks
///   z_prefix − z_suffix  <= [P(w) − C w]_e
///   z'_prefix − z'_suffix <= [P(w) − P({?})]_e
/// plus w_s = 0 for every ?-free pattern s (as paired inequalities).
pub fn assemble_broadcast_plp(table: &TransitionTable, ell: usize) -> Result<PlpInstance> {
    let nv = 3usize.pow(ell as u32);
    let ne = 3 * nv;
    let c = build_c(table, ell);
    let question = Pattern::parse("?").unwrap();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..ne {
        let e = Pattern::from_index(r, ell + 1);
        let mut row = vec![Poly::zero(); 3 * nv];
        row[e.prefix().index()] = Poly::one();
        for s in 0..nv {
            row[s] = &row[s] - c.entry(r, s);
        }
        row[nv + e.prefix().index()] = &row[nv + e.prefix().index()] - &Poly::one();
        row[nv + e.suffix().index()] = &row[nv + e.suffix().index()] + &Poly::one();
        rows.push(row);
        rhs.push(Poly::zero());
    }
    for r in 0..ne {
        let e = Pattern::from_index(r, ell + 1);
        let mut row = vec![Poly::zero(); 3 * nv];
        row[e.prefix().index()] = Poly::one();
        row[2 * nv + e.prefix().index()] = &row[2 * nv + e.prefix().index()] - &Poly::one();
        row[2 * nv + e.suffix().index()] = &row[2 * nv + e.suffix().index()] + &Poly::one();
        rows.push(row);
        rhs.push(if e.starts_with(&question) { Poly::one() } else { Poly::zero() });
    }
    for s in 0..nv {
        if Pattern::from_index(s, ell).has_question() {
            continue;
        }
        let mut up = vec![Poly::zero(); 3 * nv];
        up[s] = Poly::one();
        let mut down = vec![Poly::zero(); 3 * nv];
        down[s] = -&Poly::one();
        rows.push(up);
        rhs.push(Poly::zero());
        rows.push(down);
        rhs.push(Poly::zero());
    }
    PlpInstance::new(PolyMatrix::new(rows)?, rhs)
}

// ---------------------------------------------------------------------------
// Potentials

/// Pattern-indexed weights c_s = coeffs[s] / shared_den, polynomials in the
/// noise level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Potential {
    pub length: usize,
    pub coeffs: Vec<Poly>,
    pub shared_den: Poly,
}

impl Potential {
    pub fn new(length: usize, coeffs: Vec<Poly>, shared_den: Poly) -> Result<Self> {
        if coeffs.len() != 3usize.pow(length as u32) {
            return Err(Error::DimensionMismatch(format!(
                "potential of length {} needs {} coefficients, got {}",
                length,
                3usize.pow(length as u32),
                coeffs.len()
            )));
        }
        if shared_den.is_zero() {
            return Err(Error::InvalidInput("zero shared denominator".into()));
        }
        Ok(Potential { length, coeffs, shared_den })
    }

    /// The denominator must be strictly positive immediately right of 0.
    pub fn den_positive_near_zero(&self) -> bool {
        self.shared_den
            .valuation()
            .map_or(false, |v| self.shared_den.coeff(v).is_positive())
    }

    pub fn coeff(&self, s: &Pattern) -> &Poly {
        &self.coeffs[s.index()]
    }
}

/// Σ_s c_s · (cyclic occurrences of s in y): the numerator polynomial of the
/// potential's value on the cyclic string y.
pub fn cycle_value(w: &Potential, y: &Pattern) -> Poly {
    let mut total = Poly::zero();
    for i in 0..y.len() {
        let window = y.cyclic_window(i, w.length);
        total = &total + &w.coeffs[window.index()];
    }
    total
}

/// Bellman-Ford on the pattern graph: true iff the edge weighting admits no
/// negative cycle.
pub fn negative_cycle_check(weights: &[Rat], ell: usize) -> bool {
    let nv = 3usize.pow(ell as u32);
    let ne = 3 * nv;
    assert_eq!(weights.len(), ne, "one weight per length-{} pattern", ell + 1);
    let edges: Vec<(usize, usize, &Rat)> = (0..ne)
        .map(|r| {
            let e = Pattern::from_index(r, ell + 1);
            (e.prefix().index(), e.suffix().index(), &weights[r])
        })
        .collect();
    let mut dist = vec![Rat::zero(); nv]; // virtual source at distance 0 to all
    for _ in 0..nv {
        let mut changed = false;
        for &(u, v, w) in &edges {
            let cand = &dist[u] + w;
            if cand < dist[v] {
                dist[v] = cand;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    // one more pass: any further improvement exposes a negative cycle
    edges.iter().all(|&(u, v, w)| &dist[u] + w >= dist[v])
}

// ---------------------------------------------------------------------------
// Search and verification

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Pca,
    Broadcast,
}

#[derive(Clone, Debug)]
pub struct FindSuccess {
    pub ell: usize,
    pub s0: Option<Pattern>,
    pub certificate: SideCertificate,
    pub potential: Potential,
}

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub ell: usize,
    pub s0: Option<Pattern>,
    pub verdict: Verdict,
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    let (q, r) = a.divrem(&g);
    debug_assert!(r.is_zero());
    &q * b
}

/// Decode the w-block of a solved instance into a Potential on a common
/// denominator, normalized so the denominator's lowest coefficient is 1.
pub fn decode_potential(solution: &[RatFunc], ell: usize) -> Result<Potential> {
    let nv = 3usize.pow(ell as u32);
    let w = &solution[..nv];
    let mut den = Poly::one();
    for r in w {
        den = poly_lcm(&den, r.den());
    }
    let coeffs: Vec<Poly> = w
        .iter()
        .map(|r| {
            let (scale, rem) = den.divrem(r.den());
            debug_assert!(rem.is_zero());
            r.num() * &scale
        })
        .collect();
    let v = den.valuation().expect("nonzero");
    let lead = den.coeff(v);
    let inv = Rat::one() / lead;
    Potential::new(ell, coeffs.iter().map(|p| p.scale(&inv)).collect(), den.scale(&inv))
}

/// Try candidates in deterministic order (ascending l, then s0 by length
/// and index; broadcast ignores s0) and return the first locally feasible
/// one, or the full per-candidate verdict list if everything fails.
pub fn find_potential(
    kind: Kind,
    table: &TransitionTable,
    ells: &[usize],
    caps: &SearchCaps,
) -> std::result::Result<FindSuccess, Vec<CandidateReport>> {
    let mut reports = Vec::new();
    for &ell in ells {
        let s0s: Vec<Option<Pattern>> = match kind {
            Kind::Pca => binary_patterns_up_to(ell).into_iter().map(Some).collect(),
            Kind::Broadcast => vec![None],
        };
        for s0 in s0s {
            let inst = match kind {
                Kind::Pca => assemble_pca_plp(table, ell, s0.as_ref().unwrap()),
                Kind::Broadcast => assemble_broadcast_plp(table, ell),
            }
            .expect("candidate construction is in-range");
            log::info!(
                "trying l={ell}{}",
                s0.as_ref().map(|p| format!(", s0={p}")).unwrap_or_default()
            );
            let cert = solve_side(&inst, Side::Positive, caps);
            if cert.verdict == Verdict::Feasible {
                let potential = decode_potential(cert.solution.as_ref().unwrap(), ell)
                    .expect("solution w-block decodes");
                return Ok(FindSuccess { ell, s0, certificate: cert, potential });
            }
            reports.push(CandidateReport { ell, s0, verdict: cert.verdict });
        }
    }
    Err(reports)
}

/// Substitute the leading `vals.len()` variables of an instance by fixed
/// rational functions vals[j] = coeffs[j]/den and clear the denominator
/// (valid sign-wise because den > 0 near 0⁺ is checked by callers).
fn substitute_prefix_vars(inst: &PlpInstance, coeffs: &[Poly], den: &Poly) -> PlpInstance {
    let n = inst.n_vars();
    let k = coeffs.len();
    let mut rows = Vec::with_capacity(inst.n_constraints());
    let mut rhs = Vec::with_capacity(inst.n_constraints());
    for i in 0..inst.n_constraints() {
        let row: Vec<Poly> = (k..n).map(|j| inst.a.entry(i, j) * den).collect();
        let mut b = &inst.b[i] * den;
        for (j, u) in coeffs.iter().enumerate() {
            b = &b - &(inst.a.entry(i, j) * u);
        }
        rows.push(row);
        rhs.push(b);
    }
    PlpInstance::new(PolyMatrix::new(rows).unwrap(), rhs).unwrap()
}

/// Check a concrete potential: substitute it into the assembled system,
/// leaving only the height variables unknown, and solve near 0⁺.
pub fn verify_potential(
    kind: Kind,
    table: &TransitionTable,
    ell: usize,
    s0: Option<&Pattern>,
    w: &Potential,
    caps: &SearchCaps,
) -> Result<SideCertificate> {
    if w.length != ell {
        return Err(Error::DimensionMismatch(format!(
            "potential length {} does not match l = {ell}",
            w.length
        )));
    }
    if !w.den_positive_near_zero() {
        return Err(Error::InvalidInput(
            "shared denominator not positive near zero".into(),
        ));
    }
    let inst = match kind {
        Kind::Pca => {
            let s0 = s0.ok_or_else(|| Error::InvalidInput("pca verification needs s0".into()))?;
            assemble_pca_plp(table, ell, s0)?
        }
        Kind::Broadcast => assemble_broadcast_plp(table, ell)?,
    };
    let reduced = substitute_prefix_vars(&inst, &w.coeffs, &w.shared_den);
    Ok(solve_side(&reduced, Side::Positive, caps))
}

/// Edge weights of the PCA system at a fixed noise level, with the
/// potential substituted: weight_e = [P(w) − C w − P({?s0})]_e evaluated at
/// `at`. A z-height certificate exists iff these admit no negative cycle.
pub fn pca_edge_weights(
    table: &TransitionTable,
    ell: usize,
    s0: &Pattern,
    w: &Potential,
    at: &Rat,
) -> Result<Vec<Rat>> {
    let nv = 3usize.pow(ell as u32);
    let c = build_c(table, ell);
    let qs0 = s0.with_question_prefix();
    let den = w.shared_den.eval(at);
    if !den.is_positive() {
        return Err(Error::InvalidInput("denominator not positive at the sample point".into()));
    }
    let wvals: Vec<Rat> = w.coeffs.iter().map(|p| p.eval(at) / &den).collect();
    Ok((0..3 * nv)
        .map(|r| {
            let e = Pattern::from_index(r, ell + 1);
            let mut v = wvals[e.prefix().index()].clone();
            for s in 0..nv {
                v = v - c.entry(r, s).eval(at) * &wvals[s];
            }
            if e.starts_with(&qs0) {
                v = v - Rat::one();
            }
            v
        })
        .collect())
}

/// The two edge-weight vectors of the broadcasting system at a fixed noise
/// level: ([P(w) − C w]_e, [P(w) − P({?})]_e).
pub fn broadcast_edge_weights(
    table: &TransitionTable,
    ell: usize,
    w: &Potential,
    at: &Rat,
) -> Result<(Vec<Rat>, Vec<Rat>)> {
    let nv = 3usize.pow(ell as u32);
    let c = build_c(table, ell);
    let question = Pattern::parse("?").unwrap();
    let den = w.shared_den.eval(at);
    if !den.is_positive() {
        return Err(Error::InvalidInput("denominator not positive at the sample point".into()));
    }
    let wvals: Vec<Rat> = w.coeffs.iter().map(|p| p.eval(at) / &den).collect();
    let first = (0..3 * nv)
        .map(|r| {
            let e = Pattern::from_index(r, ell + 1);
            let mut v = wvals[e.prefix().index()].clone();
            for s in 0..nv {
                v = v - c.entry(r, s).eval(at) * &wvals[s];
            }
            v
        })
        .collect();
    let second = (0..3 * nv)
        .map(|r| {
            let e = Pattern::from_index(r, ell + 1);
            let mut v = wvals[e.prefix().index()].clone();
            if e.starts_with(&question) {
                v = v - Rat::one();
            }
            v
        })
        .collect();
    Ok((first, second))
}

// ---------------------------------------------------------------------------
// Presets

/// Named workflows exposed on the command line.
pub fn preset(name: &str) -> Result<(Kind, TransitionTable, usize, Option<Pattern>)> {
    match name {
        "pca-nand-vertex" => Ok((
            Kind::Pca,
            TransitionTable::vertex_nand(),
            3,
            Some(Pattern::parse("01").unwrap()),
        )),
        "pca-nand-edge" => Ok((
            Kind::Pca,
            TransitionTable::edge_nand(),
            3,
            Some(Pattern::parse("10").unwrap()),
        )),
        "broadcast-nand" => Ok((Kind::Broadcast, TransitionTable::edge_nand(), 3, None)),
        "broadcast-imp" => Ok((Kind::Broadcast, TransitionTable::imp(), 3, None)),
        other => Err(Error::InvalidInput(format!("unknown preset {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn pattern_indexing_roundtrip() {
        let p = Pattern::parse("?0").unwrap();
        assert_eq!(p.index(), 6);
        assert_eq!(Pattern::from_index(6, 2), p);
        assert_eq!(Pattern::parse("01").unwrap().index(), 1);
        for idx in 0..27 {
            assert_eq!(Pattern::from_index(idx, 3).index(), idx);
        }
    }

    #[test]
    fn table_entries() {
        let vertex = TransitionTable::vertex_nand();
        assert_eq!(
            vertex.entry(&Pattern::parse("11").unwrap(), 0),
            &Poly::from_i64(&[1, -1])
        );
        let edge = TransitionTable::edge_nand();
        assert_eq!(
            edge.entry(&Pattern::parse("00").unwrap(), 0),
            &Poly::from_i64(&[0, 0, 1])
        );
        let imp = TransitionTable::imp();
        assert_eq!(
            imp.entry(&Pattern::parse("10").unwrap(), 0),
            &Poly::from_i64(&[1, -2, 1])
        );
    }

    #[test]
    fn c_matrix_product_entry() {
        // C₂("111", "00") multiplies two windows "11" -> "0": (1−p)²
        let c = build_c(&TransitionTable::vertex_nand(), 2);
        let row = Pattern::parse("111").unwrap().index();
        let col = Pattern::parse("00").unwrap().index();
        assert_eq!(c.entry(row, col), &Poly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn c_rows_are_stochastic() {
        for table in [
            TransitionTable::vertex_nand(),
            TransitionTable::edge_nand(),
            TransitionTable::imp(),
        ] {
            for ell in 1..=3 {
                let c = build_c(&table, ell);
                for r in 0..c.rows() {
                    let sum = (0..c.cols()).fold(Poly::zero(), |a, s| &a + c.entry(r, s));
                    assert_eq!(sum, Poly::one(), "row {r} at l={ell}");
                }
            }
        }
    }

    #[test]
    fn p_matrix_prefix_structure() {
        let p = build_p(1, 2);
        let col0 = Pattern::parse("0").unwrap().index();
        for row_pat in ["00", "01", "0?"] {
            assert_eq!(p.entry(Pattern::parse(row_pat).unwrap().index(), col0), &Poly::one());
        }
        assert_eq!(p.entry(Pattern::parse("10").unwrap().index(), col0), &Poly::zero());
        // identity when levels match
        let id = build_p(2, 2);
        for r in 0..9 {
            for c in 0..9 {
                assert_eq!(id.entry(r, c) == &Poly::one(), r == c);
            }
        }
        // 1 -> 3: each column has 9 ones and rows partition
        let p3 = build_p(1, 3);
        for c in 0..3 {
            let ones = (0..27).filter(|&r| p3.entry(r, c) == &Poly::one()).count();
            assert_eq!(ones, 9);
        }
        for r in 0..27 {
            let ones = (0..3).filter(|&c| p3.entry(r, c) == &Poly::one()).count();
            assert_eq!(ones, 1);
        }
    }

    #[test]
    fn cycle_matrix_shape() {
        let a = build_cycle_matrix(1);
        assert_eq!((a.rows(), a.cols()), (9, 3));
        let row01 = Pattern::parse("01").unwrap().index();
        assert_eq!(a.entry(row01, 0), &Poly::one());
        assert_eq!(a.entry(row01, 1), &(-&Poly::one()));
        // self-loop rows vanish
        let row00 = Pattern::parse("00").unwrap().index();
        for c in 0..3 {
            assert_eq!(a.entry(row00, c), &Poly::zero());
        }
        // column sums vanish: in-degree equals out-degree
        for c in 0..3 {
            let sum = (0..9).fold(Poly::zero(), |acc, r| &acc + a.entry(r, c));
            assert_eq!(sum, Poly::zero());
        }
    }

    #[test]
    fn pca_instance_shape() {
        let inst = assemble_pca_plp(
            &TransitionTable::vertex_nand(),
            3,
            &Pattern::parse("01").unwrap(),
        )
        .unwrap();
        assert_eq!(inst.n_constraints(), 81);
        assert_eq!(inst.n_vars(), 54);
        assert!(inst.max_degree() <= 3);
        let edge = assemble_pca_plp(
            &TransitionTable::edge_nand(),
            3,
            &Pattern::parse("10").unwrap(),
        )
        .unwrap();
        assert_eq!((edge.n_constraints(), edge.n_vars()), (81, 54));
        assert!(edge.max_degree() <= 6);
    }

    #[test]
    fn pca_self_loop_row_is_pure_bound() {
        // z coefficients cancel on a self-loop edge like "0000"
        let inst = assemble_pca_plp(
            &TransitionTable::vertex_nand(),
            3,
            &Pattern::parse("01").unwrap(),
        )
        .unwrap();
        let row = Pattern::parse("0000").unwrap().index();
        for zc in 27..54 {
            assert!(inst.a.entry(row, zc).is_zero());
        }
    }

    #[test]
    fn s0_validation() {
        let t = TransitionTable::vertex_nand();
        assert!(assemble_pca_plp(&t, 1, &Pattern::parse("01").unwrap()).is_err());
        assert!(assemble_pca_plp(&t, 2, &Pattern::parse("0?").unwrap()).is_err());
    }

    #[test]
    fn broadcast_pins_question_free_weights() {
        let inst = assemble_broadcast_plp(&TransitionTable::edge_nand(), 1).unwrap();
        // 9 + 9 edge rows + 2 patterns ("0", "1") × 2 paired rows
        assert_eq!(inst.n_constraints(), 22);
        assert_eq!(inst.n_vars(), 9);
    }

    #[test]
    fn cycle_values() {
        // w = 1·{01}: two cyclic occurrences in "0101"
        let mut coeffs = vec![Poly::zero(); 9];
        coeffs[Pattern::parse("01").unwrap().index()] = Poly::one();
        let w = Potential::new(2, coeffs, Poly::one()).unwrap();
        assert_eq!(
            cycle_value(&w, &Pattern::parse("0101").unwrap()),
            Poly::from_i64(&[2])
        );
        // w = 1·{?}: one ? in "0?1"
        let mut coeffs = vec![Poly::zero(); 3];
        coeffs[2] = Poly::one();
        let w = Potential::new(1, coeffs, Poly::one()).unwrap();
        assert_eq!(cycle_value(&w, &Pattern::parse("0?1").unwrap()), Poly::one());
        // w = 1·{00} on "0": the single wrap window "00"
        let mut coeffs = vec![Poly::zero(); 9];
        coeffs[0] = Poly::one();
        let w = Potential::new(2, coeffs, Poly::one()).unwrap();
        assert_eq!(cycle_value(&w, &Pattern::parse("0").unwrap()), Poly::one());
    }

    #[test]
    fn negative_cycles() {
        assert!(negative_cycle_check(&vec![rat_int(1); 9], 1));
        let mut weights = vec![Rat::zero(); 9];
        weights[Pattern::parse("00").unwrap().index()] = rat_int(-1);
        assert!(!negative_cycle_check(&weights, 1));
    }

    #[test]
    fn presets_resolve() {
        for name in ["pca-nand-vertex", "pca-nand-edge", "broadcast-nand", "broadcast-imp"] {
            assert!(preset(name).is_ok());
        }
        assert!(preset("nonsense").is_err());
    }
}
