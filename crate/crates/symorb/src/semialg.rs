//! Emptiness decisions for basic row-symmetric sign systems in one column.
//!
//! A system is a conjunction of `f >= 0` and `g > 0` conditions on
//! `x[1..m][1]`. Viewed as a condition on infinite sequences (every
//! m-tuple of distinct entries must satisfy the symmetrized system), the
//! solution set is nonempty exactly when it contains a constant sequence,
//! a strictly increasing one, or a strictly decreasing one: any infinite
//! sequence has a monotone or constant subsequence, and the condition is
//! closed under subsequences. The three branches are decided exactly, in
//! that order, and every positive answer ships a witness prefix that is
//! re-verified entry by entry before being returned.

use crate::cad::{clamp_lower, sample_below, Cad, CadError, CandidateLimit};
use crate::monomial::MonomialOrder;
use crate::perm::FinitePermutation;
use crate::poly::Poly;
use crate::realalg::{
    univariate_sat, ExtendedLimit, RealPoint, SatResult, UniPoly, UnivariateSignSystem,
};
use crate::var::VarIndex;
use num_rational::BigRational;
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemialgError {
    #[error("main variables must live in column 1, found {0}")]
    SingleColumn(VarIndex),
    #[error("unresolved parameters: {}", format_vars(.0))]
    UnresolvedParameters(Vec<VarIndex>),
    #[error(transparent)]
    Projection(#[from] CadError),
    #[error("witness verification failed: {0}")]
    WitnessVerification(String),
}

fn format_vars(vars: &[VarIndex]) -> String {
    vars.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Sign conditions on one column of main variables, plus optional
/// parameters to be fixed later through `decide_fiber`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantSignSystem {
    weak: Vec<Poly>,
    strict: Vec<Poly>,
    rows: u32,
}

impl EquivariantSignSystem {
    pub fn new(weak: Vec<Poly>, strict: Vec<Poly>) -> Result<Self, SemialgError> {
        let mut rows = 0;
        for p in weak.iter().chain(&strict) {
            for v in p.vars() {
                if let VarIndex::Main { row, col } = v {
                    if col != 1 {
                        return Err(SemialgError::SingleColumn(v));
                    }
                    rows = rows.max(row);
                }
            }
        }
        Ok(EquivariantSignSystem { weak, strict, rows })
    }

    pub fn weak(&self) -> &[Poly] {
        &self.weak
    }

    pub fn strict(&self) -> &[Poly] {
        &self.strict
    }

    /// Highest row index in use; the symmetric group acts on 1..=rows.
    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn param_vars(&self) -> Vec<VarIndex> {
        let mut out = BTreeSet::new();
        for p in self.weak.iter().chain(&self.strict) {
            for v in p.vars() {
                if v.is_param() {
                    out.insert(v);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn has_params(&self) -> bool {
        self.weak.iter().chain(&self.strict).any(|p| p.has_params())
    }
}

/// One conjunct of a symmetrized system: `poly > 0` or `poly >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignCondition {
    pub poly: Poly,
    pub strict: bool,
}

impl SignCondition {
    /// Scales by the reciprocal of |leading coefficient|: a canonical
    /// representative of the positive-scaling class that keeps the sign.
    fn normalized(poly: Poly, strict: bool) -> SignCondition {
        let poly = match poly.leading_term(&MonomialOrder::Grevlex) {
            None => poly,
            Some((_, c)) => {
                let scale = c.abs().recip();
                poly.scale(&scale)
            }
        };
        SignCondition { poly, strict }
    }

    fn holds(&self, value: &BigRational) -> bool {
        if self.strict {
            value > &BigRational::from_integer(0.into())
        } else {
            value >= &BigRational::from_integer(0.into())
        }
    }
}

impl fmt::Display for SignCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} 0", self.poly, if self.strict { ">" } else { ">=" })
    }
}

/// The closure of a sign system under the row-permutation action,
/// deduplicated up to positive scaling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedSystem {
    rows: u32,
    conjuncts: Vec<SignCondition>,
}

impl SymmetrizedSystem {
    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn conjuncts(&self) -> &[SignCondition] {
        &self.conjuncts
    }

    /// Exact membership of a full assignment row -> value.
    pub fn holds_at(&self, values: &BTreeMap<u32, BigRational>) -> bool {
        let asg: BTreeMap<VarIndex, BigRational> = values
            .iter()
            .map(|(r, v)| (VarIndex::main(*r, 1), v.clone()))
            .collect();
        self.conjuncts.iter().all(|c| {
            let v = c.poly.evaluate(&asg).expect("assignment covers all rows");
            c.holds(&v)
        })
    }
}

fn permutations(m: u32) -> Vec<FinitePermutation> {
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            current.push(v);
            rec(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    let mut images = Vec::new();
    rec(&mut (1..=m).collect(), &mut Vec::new(), &mut images);
    images
        .into_iter()
        .map(|img| {
            FinitePermutation::from_mapping((1..=m).zip(img)).expect("images form a permutation")
        })
        .collect()
}

/// All row-permutation images of all conditions, deduplicated. Trivially
/// true weak conditions (the zero polynomial) are dropped; a strict zero
/// stays and makes the system contradictory.
pub fn symmetrize(sys: &EquivariantSignSystem) -> Result<SymmetrizedSystem, SemialgError> {
    if sys.has_params() {
        return Err(SemialgError::UnresolvedParameters(sys.param_vars()));
    }
    let m = sys.rows();
    let mut set: BTreeSet<SignCondition> = BTreeSet::new();
    for sigma in permutations(m) {
        for (list, strict) in [(&sys.weak, false), (&sys.strict, true)] {
            for p in list.iter() {
                let q = p.apply_perm(&sigma);
                if q.is_zero() && !strict {
                    continue;
                }
                set.insert(SignCondition::normalized(q, strict));
            }
        }
    }
    Ok(SymmetrizedSystem { rows: m, conjuncts: set.into_iter().collect() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// What kind of sequence realizes a nonempty system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    Constant(RealPoint),
    Increasing(ExtendedLimit),
    Decreasing(ExtendedLimit),
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::Constant(c) => write!(f, "constant {c}"),
            WitnessKind::Increasing(l) => write!(f, "increasing with limit {l}"),
            WitnessKind::Decreasing(l) => write!(f, "decreasing with limit {l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Empty,
    NonEmpty { kind: WitnessKind, witness: Vec<RealPoint> },
    Unsupported { reason: String },
}

impl Decision {
    pub fn is_nonempty(&self) -> bool {
        matches!(self, Decision::NonEmpty { .. })
    }
}

fn witness_len(m: u32) -> usize {
    (3 * m as usize).max(6)
}

/// Every ordered tuple of `m` distinct indices below `len`.
fn distinct_index_tuples(len: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in 0..len {
            if !cur.contains(&i) {
                cur.push(i);
                rec(len, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(len, m, &mut Vec::new(), &mut out);
    out
}

/// Exact check that every distinct-index m-tuple of the prefix satisfies
/// every conjunct.
fn verify_prefix(conjuncts: &[SignCondition], m: u32, entries: &[BigRational]) -> bool {
    if m == 0 {
        return conjuncts
            .iter()
            .all(|c| c.holds(&c.poly.as_constant().expect("no variables")));
    }
    let tuples = distinct_index_tuples(entries.len(), m as usize);
    crate::par::map_collect(&tuples, |tuple| {
        let mut values = BTreeMap::new();
        for (r, idx) in tuple.iter().enumerate() {
            values.insert(VarIndex::main(r as u32 + 1, 1), entries[*idx].clone());
        }
        conjuncts.iter().all(|c| {
            let v = c.poly.evaluate(&values).expect("tuple covers all rows");
            c.holds(&v)
        })
    })
    .into_iter()
    .all(|ok| ok)
}

/// Verification for a constant witness: all tuples are the diagonal, so a
/// single sign evaluation per conjunct suffices, and it stays exact for
/// algebraic points.
fn verify_constant(conjuncts: &[SignCondition], m: u32, point: &RealPoint) -> bool {
    let diag = diagonal_map(m);
    conjuncts.iter().all(|c| {
        let u = UniPoly::from_poly(&c.poly.substitute(&diag)).expect("diagonal is univariate");
        let s = point.sign_of(&u);
        if c.strict {
            s > 0
        } else {
            s >= 0
        }
    })
}

fn diagonal_map(m: u32) -> BTreeMap<VarIndex, Poly> {
    let mut map = BTreeMap::new();
    for i in 2..=m {
        map.insert(VarIndex::main(i, 1), Poly::var(VarIndex::main(1, 1)));
    }
    map
}

/// Decides whether the system admits a constant sequence: substitute one
/// shared variable for every row and solve the univariate sign system.
pub fn decide_constant(sys: &EquivariantSignSystem) -> Result<Decision, SemialgError> {
    if sys.has_params() {
        return Err(SemialgError::UnresolvedParameters(sys.param_vars()));
    }
    let m = sys.rows();
    let diag = diagonal_map(m);
    let to_uni = |p: &Poly| UniPoly::from_poly(&p.substitute(&diag)).expect("diagonal is univariate");
    let uni = UnivariateSignSystem {
        weak: sys.weak.iter().map(to_uni).collect(),
        strict: sys.strict.iter().map(to_uni).collect(),
    };
    match univariate_sat(&uni) {
        SatResult::Empty => Ok(Decision::Empty),
        SatResult::NonEmpty(point) => {
            let conjuncts = symmetrize(sys)?;
            if !verify_constant(conjuncts.conjuncts(), m, &point) {
                return Err(SemialgError::WitnessVerification(format!(
                    "constant witness {point} fails a conjunct"
                )));
            }
            let witness = vec![point.clone(); witness_len(m)];
            Ok(Decision::NonEmpty { kind: WitnessKind::Constant(point), witness })
        }
    }
}

/// The increasing-sequence kernel. Returns the limit and a verified-ready
/// strictly increasing rational prefix, or None when no candidate limit
/// admits one.
fn increasing_search(
    conjuncts: &[SignCondition],
    m: u32,
    cap: u32,
) -> Result<Option<(ExtendedLimit, Vec<BigRational>)>, SemialgError> {
    for c in conjuncts {
        if let Some(v) = c.poly.as_constant() {
            if !c.holds(&v) {
                return Ok(None);
            }
        }
    }
    let pool: Vec<Poly> = conjuncts
        .iter()
        .filter(|c| !c.poly.is_constant())
        .map(|c| c.poly.clone())
        .collect();
    let marker = VarIndex::param(1);
    let cad = Cad::build(&pool, m, marker, cap)?;
    let (roots, samples) = cad.candidate_points();
    let mut candidates = vec![CandidateLimit::PlusInfinity];
    candidates.extend(roots.into_iter().map(CandidateLimit::Finite));
    candidates.extend(samples.into_iter().map(|q| CandidateLimit::Finite(RealPoint::Rat(q))));

    // conjuncts bucketed by the deepest row they mention: the descent stops
    // at the first depth whose sample already violates one, sparing the
    // deeper fibers (the sample tuple is deterministic, so pruning agrees
    // with checking the finished tuple)
    let mut by_depth: Vec<Vec<&SignCondition>> = vec![Vec::new(); m as usize + 1];
    for c in conjuncts.iter().filter(|c| !c.poly.is_constant()) {
        let d = c
            .poly
            .vars()
            .iter()
            .filter_map(|v| v.row())
            .max()
            .expect("non-constant conjunct mentions a row") as usize;
        by_depth[d].push(c);
    }

    'cand: for cand in candidates {
        let mut prefix: Vec<BigRational> = Vec::new();
        let mut values = BTreeMap::new();
        for depth in 1..=m as usize {
            let lower = clamp_lower(cad.theta(&prefix, &cand), prefix.last());
            let s = sample_below(lower.as_ref(), &cand);
            values.insert(VarIndex::main(depth as u32, 1), s.clone());
            prefix.push(s);
            for c in &by_depth[depth] {
                let v = c.poly.evaluate(&values).expect("rows up to this depth assigned");
                if !c.holds(&v) {
                    continue 'cand;
                }
            }
        }
        let entries = extend_witness(&cad, &cand, prefix[0].clone(), m);
        let limit = match cand {
            CandidateLimit::PlusInfinity => ExtendedLimit::PlusInfinity,
            CandidateLimit::Finite(p) => ExtendedLimit::Finite(p),
        };
        return Ok(Some((limit, entries)));
    }
    Ok(None)
}

/// Grows the witness prefix one entry at a time. Each new entry must clear
/// every fiber breakpoint below the limit over every increasing prefix of
/// the existing entries, at every depth: tuples formed later always sit in
/// the sign-invariant cells the search certified.
fn extend_witness(cad: &Cad, limit: &CandidateLimit, first: BigRational, m: u32) -> Vec<BigRational> {
    let target = witness_len(m);
    let mut entries = vec![first];
    // prefixes recur as the witness grows (only those touching the newest
    // entry are new), so breakpoints are worth remembering
    let mut memo: BTreeMap<Vec<BigRational>, Option<RealPoint>> = BTreeMap::new();
    while entries.len() < target {
        let last = entries.last().expect("nonempty").clone();
        let mut lower = RealPoint::Rat(last);
        for l in 1..=m as usize {
            for tau in index_combinations(entries.len(), l - 1) {
                let prefix: Vec<BigRational> = tau.iter().map(|i| entries[*i].clone()).collect();
                let t = memo
                    .entry(prefix)
                    .or_insert_with_key(|p| cad.theta(p, limit));
                if let Some(t) = t {
                    if *t > lower {
                        lower = t.clone();
                    }
                }
            }
        }
        let lower = clamp_lower(Some(lower), None);
        entries.push(sample_below(lower.as_ref(), limit));
    }
    entries
}

/// Ascending index combinations of size `k` from `0..len`.
fn index_combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

fn negated_conjuncts(conjuncts: &[SignCondition], m: u32) -> Vec<SignCondition> {
    let mut map = BTreeMap::new();
    for i in 1..=m {
        let v = VarIndex::main(i, 1);
        map.insert(v, -Poly::var(v));
    }
    conjuncts
        .iter()
        .map(|c| SignCondition::normalized(c.poly.substitute(&map), c.strict))
        .collect()
}

/// Decides whether the system admits a strictly monotone sequence in the
/// given direction. Exact for up to three rows; more rows answer
/// Unsupported rather than guessing. Decreasing delegates to the
/// increasing kernel through the reflection x -> -x.
pub fn decide_monotone(sys: &EquivariantSignSystem, dir: Direction) -> Result<Decision, SemialgError> {
    decide_monotone_capped(sys, dir, crate::cad::DEFAULT_PROJECTION_DEGREE_CAP)
}

/// `decide_monotone` with an explicit projection degree cap.
pub fn decide_monotone_capped(
    sys: &EquivariantSignSystem,
    dir: Direction,
    cap: u32,
) -> Result<Decision, SemialgError> {
    if sys.has_params() {
        return Err(SemialgError::UnresolvedParameters(sys.param_vars()));
    }
    let m = sys.rows();
    if m > 3 {
        return Ok(Decision::Unsupported {
            reason: format!("{m} rows in use; the monotone decision is exact only up to 3"),
        });
    }
    let symmetrized = symmetrize(sys)?;
    let conjuncts = match dir {
        Direction::Increasing => symmetrized.conjuncts().to_vec(),
        Direction::Decreasing => negated_conjuncts(symmetrized.conjuncts(), m),
    };
    if m == 0 {
        let ok = conjuncts
            .iter()
            .all(|c| c.holds(&c.poly.as_constant().expect("no variables")));
        if !ok {
            return Ok(Decision::Empty);
        }
        let (kind, sign) = match dir {
            Direction::Increasing => (WitnessKind::Increasing(ExtendedLimit::PlusInfinity), 1),
            Direction::Decreasing => (WitnessKind::Decreasing(ExtendedLimit::MinusInfinity), -1),
        };
        let witness = (1..=witness_len(0) as i64)
            .map(|k| RealPoint::Rat(BigRational::from_integer((sign * k).into())))
            .collect();
        return Ok(Decision::NonEmpty { kind, witness });
    }
    let Some((limit, entries)) = increasing_search(&conjuncts, m, cap)? else {
        return Ok(Decision::Empty);
    };
    if !verify_prefix(&conjuncts, m, &entries) {
        return Err(SemialgError::WitnessVerification(format!(
            "monotone witness prefix {} fails a conjunct",
            entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(match dir {
        Direction::Increasing => Decision::NonEmpty {
            kind: WitnessKind::Increasing(limit),
            witness: entries.into_iter().map(RealPoint::Rat).collect(),
        },
        Direction::Decreasing => {
            let limit = match limit {
                ExtendedLimit::PlusInfinity => ExtendedLimit::MinusInfinity,
                ExtendedLimit::MinusInfinity => ExtendedLimit::PlusInfinity,
                ExtendedLimit::Finite(p) => ExtendedLimit::Finite(p.neg()),
            };
            Decision::NonEmpty {
                kind: WitnessKind::Decreasing(limit),
                witness: entries.into_iter().map(|e| RealPoint::Rat(-e)).collect(),
            }
        }
    })
}

/// Full emptiness decision: constant, then increasing, then decreasing;
/// the first nonempty branch wins, so reported kinds are deterministic.
pub fn decide_nonempty(sys: &EquivariantSignSystem) -> Result<Decision, SemialgError> {
    decide_nonempty_capped(sys, crate::cad::DEFAULT_PROJECTION_DEGREE_CAP)
}

/// `decide_nonempty` with an explicit projection degree cap.
pub fn decide_nonempty_capped(sys: &EquivariantSignSystem, cap: u32) -> Result<Decision, SemialgError> {
    let constant = decide_constant(sys)?;
    if constant.is_nonempty() {
        return Ok(constant);
    }
    #[cfg(feature = "parallel")]
    let (inc, dec) = rayon::join(
        || decide_monotone_capped(sys, Direction::Increasing, cap),
        || decide_monotone_capped(sys, Direction::Decreasing, cap),
    );
    #[cfg(not(feature = "parallel"))]
    let (inc, dec) = {
        let inc = decide_monotone_capped(sys, Direction::Increasing, cap);
        match inc {
            Ok(ref d) if d.is_nonempty() => (inc, Ok(Decision::Empty)),
            _ => {
                let dec = decide_monotone_capped(sys, Direction::Decreasing, cap);
                (inc, dec)
            }
        }
    };
    let inc = inc?;
    if inc.is_nonempty() {
        return Ok(inc);
    }
    let dec = dec?;
    if dec.is_nonempty() {
        return Ok(dec);
    }
    if let Decision::Unsupported { .. } = inc {
        return Ok(inc);
    }
    Ok(Decision::Empty)
}

/// Fixes all parameters to rationals and decides the resulting system:
/// the fiber of the parametrized family over one point.
pub fn decide_fiber(
    sys: &EquivariantSignSystem,
    values: &BTreeMap<u32, BigRational>,
) -> Result<Decision, SemialgError> {
    decide_fiber_capped(sys, values, crate::cad::DEFAULT_PROJECTION_DEGREE_CAP)
}

/// `decide_fiber` with an explicit projection degree cap.
pub fn decide_fiber_capped(
    sys: &EquivariantSignSystem,
    values: &BTreeMap<u32, BigRational>,
    cap: u32,
) -> Result<Decision, SemialgError> {
    let map: BTreeMap<VarIndex, BigRational> = values
        .iter()
        .map(|(k, v)| (VarIndex::param(*k), v.clone()))
        .collect();
    let weak: Vec<Poly> = sys.weak.iter().map(|p| p.partial_eval(&map)).collect();
    let strict: Vec<Poly> = sys.strict.iter().map(|p| p.partial_eval(&map)).collect();
    let fixed = EquivariantSignSystem::new(weak, strict)?;
    if fixed.has_params() {
        return Err(SemialgError::UnresolvedParameters(fixed.param_vars()));
    }
    decide_nonempty_capped(&fixed, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::{rat, rat_int};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn sys(weak: &[&str], strict: &[&str]) -> EquivariantSignSystem {
        EquivariantSignSystem::new(
            weak.iter().map(|s| p(s)).collect(),
            strict.iter().map(|s| p(s)).collect(),
        )
        .unwrap()
    }

    fn rats(entries: &[(i64, i64)]) -> Vec<RealPoint> {
        entries.iter().map(|(n, d)| RealPoint::Rat(rat(*n, *d))).collect()
    }

    #[test]
    fn symmetrize_examples() {
        let s = symmetrize(&sys(&[], &["x[2][1] - x[1][1]"])).unwrap();
        assert_eq!(s.rows(), 2);
        assert_eq!(
            s.conjuncts().to_vec(),
            vec![
                SignCondition { poly: p("x[1][1] - x[2][1]"), strict: true },
                SignCondition { poly: p("x[2][1] - x[1][1]"), strict: true },
            ]
        );

        let s = symmetrize(&sys(&[], &["(x[1][1] - x[2][1])^2"])).unwrap();
        assert_eq!(s.conjuncts().len(), 1);

        let s = symmetrize(&sys(&["x[1][1]"], &[])).unwrap();
        assert_eq!(s.rows(), 1);
        assert_eq!(
            s.conjuncts().to_vec(),
            vec![SignCondition { poly: p("x[1][1]"), strict: false }]
        );

        // positive rescaling lands on the same conjunct
        let s2 = symmetrize(&sys(&["7*x[1][1]"], &[])).unwrap();
        assert_eq!(s.conjuncts(), s2.conjuncts());
    }

    #[test]
    fn symmetrize_rejects_params() {
        let r = symmetrize(&sys(&[], &["s[1] - x[1][1]"]));
        assert!(matches!(r, Err(SemialgError::UnresolvedParameters(_))));
    }

    #[test]
    fn column_restriction_enforced() {
        let r = EquivariantSignSystem::new(vec![p("x[1][2]")], vec![]);
        assert!(matches!(r, Err(SemialgError::SingleColumn(_))));
    }

    #[test]
    fn constant_branch_examples() {
        let d = decide_constant(&sys(&["x[1][1] - x[2][1]"], &["x[1][1]*(1 - x[1][1])"])).unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Constant(RealPoint::Rat(rat(1, 2))),
                witness: vec![RealPoint::Rat(rat(1, 2)); 6],
            }
        );

        let d = decide_constant(&sys(&[], &["x[2][1] - x[1][1]"])).unwrap();
        assert_eq!(d, Decision::Empty);

        let d = decide_constant(&sys(&[], &["1"])).unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Constant(RealPoint::Rat(rat_int(0))),
                witness: vec![RealPoint::Rat(rat_int(0)); 6],
            }
        );
    }

    #[test]
    fn monotone_all_distinct() {
        let d = decide_monotone(&sys(&[], &["(x[1][1] - x[2][1])^2"]), Direction::Increasing)
            .unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Increasing(ExtendedLimit::PlusInfinity),
                witness: rats(&[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1)]),
            }
        );
    }

    #[test]
    fn monotone_contradictory() {
        let d = decide_monotone(&sys(&[], &["x[2][1] - x[1][1]"]), Direction::Increasing).unwrap();
        assert_eq!(d, Decision::Empty);
    }

    #[test]
    fn monotone_bounded_limit() {
        let d = decide_monotone(
            &sys(&["1 - x[1][1]^2"], &["(x[1][1] - x[2][1])^2"]),
            Direction::Increasing,
        )
        .unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Increasing(ExtendedLimit::Finite(RealPoint::Rat(rat_int(1)))),
                witness: rats(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]),
            }
        );
    }

    #[test]
    fn monotone_decreasing_mirror() {
        let d = decide_monotone(&sys(&[], &["(x[1][1] - x[2][1])^2"]), Direction::Decreasing)
            .unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Decreasing(ExtendedLimit::MinusInfinity),
                witness: rats(&[(-1, 1), (-2, 1), (-3, 1), (-4, 1), (-5, 1), (-6, 1)]),
            }
        );

        let d = decide_monotone(
            &sys(&["1 - x[1][1]^2"], &["(x[1][1] - x[2][1])^2"]),
            Direction::Decreasing,
        )
        .unwrap();
        match d {
            Decision::NonEmpty { kind: WitnessKind::Decreasing(ExtendedLimit::Finite(l)), witness } => {
                assert_eq!(l, RealPoint::Rat(rat_int(-1)));
                for w in witness.windows(2) {
                    assert!(w[0] > w[1], "strictly decreasing");
                }
            }
            other => panic!("expected a finite decreasing limit, got {other:?}"),
        }
    }

    #[test]
    fn nonempty_examples() {
        let d = decide_nonempty(&sys(&["x[1][1] - x[2][1]"], &["x[1][1]*(1 - x[1][1])"])).unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Constant(RealPoint::Rat(rat(1, 2))),
                witness: vec![RealPoint::Rat(rat(1, 2)); 6],
            }
        );

        let d = decide_nonempty(&sys(&[], &["x[2][1] - x[1][1]"])).unwrap();
        assert_eq!(d, Decision::Empty);

        let d = decide_nonempty(&sys(&["-(x[1][1] - x[2][1])^2"], &["x[1][1] - 7"])).unwrap();
        assert_eq!(
            d,
            Decision::NonEmpty {
                kind: WitnessKind::Constant(RealPoint::Rat(rat_int(8))),
                witness: vec![RealPoint::Rat(rat_int(8)); 6],
            }
        );
    }

    #[test]
    fn fiber_examples() {
        let family = sys(&[], &["s[1] - x[1][1]^2"]);
        let at = |v: i64| {
            let mut map = BTreeMap::new();
            map.insert(1, rat_int(v));
            decide_fiber(&family, &map).unwrap()
        };
        assert_eq!(
            at(1),
            Decision::NonEmpty {
                kind: WitnessKind::Constant(RealPoint::Rat(rat_int(0))),
                witness: vec![RealPoint::Rat(rat_int(0)); 6],
            }
        );
        assert_eq!(at(-1), Decision::Empty);
        assert_eq!(at(0), Decision::Empty);

        let missing = decide_fiber(&family, &BTreeMap::new());
        assert!(matches!(missing, Err(SemialgError::UnresolvedParameters(_))));
    }

    #[test]
    fn unsupported_beyond_three_rows() {
        let wide = sys(&[], &["(x[1][1] - x[4][1])^2"]);
        let d = decide_monotone(&wide, Direction::Increasing).unwrap();
        assert!(matches!(d, Decision::Unsupported { .. }));
        let d = decide_nonempty(&wide).unwrap();
        assert!(matches!(d, Decision::Unsupported { .. }));
    }

    #[test]
    fn three_rows_all_distinct() {
        let wide = sys(
            &[],
            &["(x[1][1] - x[2][1])^2", "(x[1][1] - x[3][1])^2", "(x[2][1] - x[3][1])^2"],
        );
        let d = decide_nonempty(&wide).unwrap();
        match d {
            Decision::NonEmpty { kind: WitnessKind::Increasing(ExtendedLimit::PlusInfinity), witness } => {
                assert_eq!(witness.len(), 9);
                let expect: Vec<RealPoint> =
                    (1..=9).map(|k| RealPoint::Rat(rat_int(k))).collect();
                assert_eq!(witness, expect);
            }
            other => panic!("expected an unbounded increasing witness, got {other:?}"),
        }
    }

    #[test]
    fn witness_respects_awkward_sections() {
        // the section x2 = (x1 + 1)/2 runs exactly through the naive
        // midpoint-halving points toward the limit 1
        let d = decide_nonempty(&sys(
            &["1 - x[1][1]^2"],
            &["(x[1][1] - x[2][1])^2", "(2*x[2][1] - x[1][1] - 1)^2"],
        ))
        .unwrap();
        match d {
            Decision::NonEmpty { kind, witness } => {
                let entries: Vec<BigRational> = witness
                    .iter()
                    .map(|w| w.as_rational().expect("monotone witnesses are rational").clone())
                    .collect();
                let m = 2;
                let conjuncts = symmetrize(&sys(
                    &["1 - x[1][1]^2"],
                    &["(x[1][1] - x[2][1])^2", "(2*x[2][1] - x[1][1] - 1)^2"],
                ))
                .unwrap();
                assert!(verify_prefix(conjuncts.conjuncts(), m, &entries), "kind {kind}");
            }
            Decision::Empty => panic!("system is realizable"),
            Decision::Unsupported { reason } => panic!("unsupported: {reason}"),
        }
    }

    #[test]
    fn empty_verdict_survives_a_dense_candidate_pool() {
        // an unsatisfiable mix whose projection pool has dozens of
        // high-degree algebraic candidates; the decision must exhaust them
        // all, which leans on the shared root isolation staying cheap
        let d = decide_nonempty(&sys(
            &["3/2*x[1][1] + x[2][1]^2 - x[1][1]^2", "x[2][1] - x[1][1] + 1/2*x[1][1]^2"],
            &["-1/2 - x[1][1]*x[2][1] - 3*x[1][1]^2", "x[1][1]^2"],
        ))
        .unwrap();
        assert!(matches!(d, Decision::Empty));
    }
}
