//! Cylindrical projection kernel for the monotone-sequence search.
//!
//! Given the polynomials of a sign system in `x[1..m][1]` plus a fresh
//! marker variable standing for the limit of an increasing sequence, this
//! builds the tower of projection pools `F_m, ..., F_0` (eliminating the
//! highest row first) and answers two questions exactly:
//!
//! - which limits can matter at all: the roots of the base pool `F_0`
//!   partition the marker axis into cells on which the searched predicate
//!   is invariant, so roots + one rational sample per complementary cell
//!   + "+infinity" exhaust the candidates;
//! - for a fixed candidate limit `p`, the "cell immediately below `p`" at
//!   each depth: its breakpoints are the roots of the depth's pool
//!   specialized at the rational prefix chosen so far and at the marker
//!   value `p`.
//!
//! The projection operator keeps, per polynomial: all coefficients with
//! respect to the eliminated variable when the leading one is non-constant
//! (sections can then appear or escape), the discriminant when it is
//! non-constant and not identically zero, and all pairwise resultants that
//! are non-constant. Outputs are normalized monic and, once univariate,
//! squarefree. An identically zero discriminant means a repeated factor;
//! for the squares that actually arise here (squares of polynomials with a
//! single root function, like `(x1-x2)^2`) the roots are delineable
//! without extra breakpoints, so nothing is added. Squares whose base has
//! two or more merging root functions would need more care; callers
//! re-verify every positive answer by exact evaluation, so a missed
//! breakpoint can cost completeness on such inputs but never soundness of
//! a reported witness.

use crate::monomial::MonomialOrder;
use crate::poly::Poly;
use crate::realalg::{
    all_roots_sorted, cmp_refining, interleaved_samples, merge_roots, rational_between, RealPoint,
    UniPoly,
};
use crate::resultant::{as_univariate_in, derivative, div_exact, resultant, subresultant_prs};
use crate::var::VarIndex;
use num_rational::BigRational;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;
use thiserror::Error;

/// Cap on the total degree of any projection polynomial.
pub const DEFAULT_PROJECTION_DEGREE_CAP: u32 = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CadError {
    #[error("projection polynomial of degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
}

/// A candidate limit for a strictly increasing sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateLimit {
    Finite(RealPoint),
    PlusInfinity,
}

/// Normal form for pool membership: monic, squarefree once univariate,
/// and None for constants (they carry no root structure).
fn normalized(p: &Poly) -> Option<Poly> {
    if p.is_constant() {
        return None;
    }
    let vars = p.vars();
    if vars.len() == 1 {
        let v = *vars.iter().next().expect("one variable");
        let u = UniPoly::from_poly(p).expect("single variable");
        return Some(u.squarefree_part().monic().to_poly(v));
    }
    Some(p.monic(&MonomialOrder::Grevlex))
}

fn push_normalized(out: &mut BTreeSet<Poly>, p: Poly, cap: u32) -> Result<(), CadError> {
    if let Some(q) = normalized(&p) {
        let degree = q.total_degree();
        if degree > cap {
            return Err(CadError::DegreeCap { degree, cap });
        }
        out.insert(q);
    }
    Ok(())
}

fn proj(pool: &[Poly], z: VarIndex, cap: u32) -> Result<Vec<Poly>, CadError> {
    let mut out = BTreeSet::new();
    let mut with_z = Vec::new();
    for f in pool {
        if f.degree_in(z) == 0 {
            push_normalized(&mut out, f.clone(), cap)?;
        } else {
            with_z.push(f);
        }
    }
    for f in &with_z {
        let coeffs = as_univariate_in(f, z);
        let lc = coeffs.last().expect("degree >= 1 in z");
        if !lc.is_constant() {
            for c in &coeffs {
                push_normalized(&mut out, c.clone(), cap)?;
            }
        }
        let disc = resultant(f, &derivative(f, z), z);
        if !disc.is_zero() {
            push_normalized(&mut out, disc, cap)?;
        }
    }
    for (i, f) in with_z.iter().enumerate() {
        for g in &with_z[i + 1..] {
            push_normalized(&mut out, resultant(f, g, z), cap)?;
        }
    }
    Ok(out.into_iter().collect())
}

/// The projection tower. `pools[l]` lives in `x[1..l][1]` and the marker.
#[derive(Debug)]
pub struct Cad {
    pools: Vec<Vec<Poly>>,
    rows: u32,
    marker: VarIndex,
    // roots of the marker-free fiber polynomials per prefix; these do not
    // depend on the candidate limit, and the limit search revisits the same
    // prefixes for every candidate
    free_roots: Mutex<BTreeMap<Vec<BigRational>, Vec<RealPoint>>>,
    // roots contributed by marker-involving fiber polynomials at an
    // algebraic limit, keyed by prefix and the limit's defining polynomial:
    // the resultant step sees only the defining, so all roots of one base
    // polynomial share this work. The second component lists the pool
    // entries whose resultant with the defining vanished; those need the
    // per-point fallback.
    #[allow(clippy::type_complexity)]
    marked_roots: Mutex<BTreeMap<(Vec<BigRational>, Vec<BigRational>), (Vec<RealPoint>, Vec<usize>)>>,
}

impl Cad {
    /// Builds the tower for `rows` main variables, augmenting the inputs
    /// with the markers `x[i][1] - marker`.
    pub fn build(polys: &[Poly], rows: u32, marker: VarIndex, cap: u32) -> Result<Cad, CadError> {
        assert!(rows >= 1, "at least one row");
        let mut top = BTreeSet::new();
        for p in polys {
            push_normalized(&mut top, p.clone(), cap)?;
        }
        for i in 1..=rows {
            let m = &Poly::var(VarIndex::main(i, 1)) - &Poly::var(marker);
            push_normalized(&mut top, m, cap)?;
        }
        let mut pools = vec![Vec::new(); rows as usize + 1];
        pools[rows as usize] = top.into_iter().collect();
        for l in (1..=rows as usize).rev() {
            pools[l - 1] = proj(&pools[l], VarIndex::main(l as u32, 1), cap)?;
        }
        Ok(Cad {
            pools,
            rows,
            marker,
            free_roots: Mutex::new(BTreeMap::new()),
            marked_roots: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    /// The base pool, univariate in the marker.
    pub fn base_pool(&self) -> &[Poly] {
        &self.pools[0]
    }

    /// Candidate limits: all real roots of the base pool, and one rational
    /// sample per complementary interval.
    pub fn candidate_points(&self) -> (Vec<RealPoint>, Vec<BigRational>) {
        let unis: Vec<UniPoly> = self.pools[0]
            .iter()
            .map(|p| UniPoly::from_poly(p).expect("base pool is univariate in the marker"))
            .collect();
        let roots = all_roots_sorted(&unis);
        let samples = interleaved_samples(&roots);
        (roots, samples)
    }

    fn prefix_assignment(prefix: &[BigRational]) -> BTreeMap<VarIndex, BigRational> {
        let mut asg = BTreeMap::new();
        for (i, v) in prefix.iter().enumerate() {
            asg.insert(VarIndex::main(i as u32 + 1, 1), v.clone());
        }
        asg
    }

    /// Marker-free pool polynomials at depth `prefix.len() + 1`,
    /// specialized at the rational prefix, as univariate polynomials in the
    /// depth's variable. Their roots do not depend on the candidate limit.
    fn fiber_polys_free(&self, prefix: &[BigRational]) -> Vec<UniPoly> {
        let depth = prefix.len() + 1;
        assert!(depth <= self.rows as usize, "prefix too long");
        let asg = Self::prefix_assignment(prefix);
        let mut unis = Vec::new();
        for f in &self.pools[depth] {
            if f.degree_in(self.marker) > 0 {
                continue;
            }
            let g = f.partial_eval(&asg);
            if g.is_constant() {
                continue;
            }
            unis.push(UniPoly::from_poly(&g).expect("fiber polynomial is univariate"));
        }
        unis
    }

    /// Marker-involving pool polynomials at depth `prefix.len() + 1`,
    /// specialized at the rational prefix and at a rational or infinite
    /// marker value. Algebraic limits go through `marked_fiber_roots`.
    fn fiber_polys_marked(&self, prefix: &[BigRational], limit: &CandidateLimit) -> Vec<UniPoly> {
        let asg = Self::prefix_assignment(prefix);
        let mut unis = Vec::new();
        for f in self.marked_pool(prefix.len() + 1) {
            let g = f.partial_eval(&asg);
            let h = match limit {
                CandidateLimit::PlusInfinity => {
                    // at +infinity only sections whose marker part vanished
                    // at the prefix survive
                    if g.degree_in(self.marker) > 0 {
                        continue;
                    }
                    g
                }
                CandidateLimit::Finite(RealPoint::Rat(r)) => {
                    let mut m = BTreeMap::new();
                    m.insert(self.marker, r.clone());
                    g.partial_eval(&m)
                }
                CandidateLimit::Finite(RealPoint::Alg(_)) => {
                    unreachable!("algebraic limits are handled by marked_fiber_roots")
                }
            };
            if h.is_constant() {
                continue;
            }
            unis.push(UniPoly::from_poly(&h).expect("fiber polynomial is univariate"));
        }
        unis
    }

    fn marked_pool(&self, depth: usize) -> impl Iterator<Item = &Poly> {
        assert!(depth <= self.rows as usize, "prefix too long");
        self.pools[depth]
            .iter()
            .filter(move |f| f.degree_in(self.marker) > 0)
    }

    /// Breakpoints contributed by the marker-involving pool at an algebraic
    /// limit. The resultant elimination and root isolation depend only on
    /// the limit's defining polynomial, so they are cached and shared by all
    /// of its roots; only pool entries whose resultant vanishes identically
    /// (a shared marker-factor) fall back to the per-point elimination.
    fn marked_fiber_roots(
        &self,
        prefix: &[BigRational],
        a: &crate::realalg::RealAlgebraicNumber,
    ) -> Vec<RealPoint> {
        let asg = Self::prefix_assignment(prefix);
        let key = (prefix.to_vec(), a.defining().coeffs().to_vec());
        let (mut roots, degenerate) = {
            let mut cache = self.marked_roots.lock().expect("no panics while held");
            let entry = cache.entry(key).or_insert_with(|| {
                let dp = a.defining().to_poly(self.marker);
                let mut clean = Vec::new();
                let mut degenerate = Vec::new();
                for (i, f) in self.pools[prefix.len() + 1].iter().enumerate() {
                    if f.degree_in(self.marker) == 0 {
                        continue;
                    }
                    let g = f.partial_eval(&asg);
                    if g.degree_in(self.marker) == 0 {
                        clean.push(g);
                        continue;
                    }
                    let r = resultant(&g, &dp, self.marker);
                    if r.is_zero() {
                        degenerate.push(i);
                    } else {
                        clean.push(r);
                    }
                }
                let unis: Vec<UniPoly> = clean
                    .iter()
                    .filter(|h| !h.is_constant())
                    .map(|h| UniPoly::from_poly(h).expect("fiber polynomial is univariate"))
                    .collect();
                (all_roots_sorted(&unis), degenerate)
            });
            (entry.0.clone(), entry.1.clone())
        };
        for &i in &degenerate {
            let g = self.pools[prefix.len() + 1][i].partial_eval(&asg);
            if let Some(h) = self.eliminate_marker(&g, a) {
                if !h.is_constant() {
                    let u = UniPoly::from_poly(&h).expect("fiber polynomial is univariate");
                    merge_roots(&mut roots, all_roots_sorted(&[u]));
                }
            }
        }
        roots
    }

    /// Replaces the marker in `g` by the algebraic number defined by `d`
    /// (restricted to the caller's isolating interval): the resultant with
    /// the defining polynomial is a superset of the true breakpoint set,
    /// which only refines cells. None when `g` vanishes identically there.
    ///
    /// A zero resultant means `g` shares a marker-factor `e` with `d`;
    /// the point is a root of exactly one of `e`, `d/e` (d is squarefree),
    /// so either `g` vanishes on the whole fiber or the retry with `d/e`
    /// makes progress.
    fn eliminate_marker(&self, g: &Poly, a: &crate::realalg::RealAlgebraicNumber) -> Option<Poly> {
        let point = RealPoint::Alg(a.clone());
        let mut d = a.defining().clone();
        loop {
            let dp = d.to_poly(self.marker);
            let r = resultant(g, &dp, self.marker);
            if !r.is_zero() {
                return Some(r);
            }
            let prs = subresultant_prs(g, &dp, self.marker);
            let shared = prs.last().expect("inputs are nonzero");
            let e = self.marker_primitive_part(shared);
            if point.sign_of(&e) == 0 {
                return None;
            }
            let (q, rem) = d.divrem(&e);
            debug_assert!(rem.is_zero(), "shared factor divides the defining polynomial");
            d = q;
        }
    }

    fn marker_primitive_part(&self, r: &Poly) -> UniPoly {
        let coeffs = as_univariate_in(r, self.marker);
        let mut content: Option<UniPoly> = None;
        for c in &coeffs {
            if c.is_zero() {
                continue;
            }
            let u = UniPoly::from_poly(c).expect("coefficient in one variable");
            content = Some(match content {
                None => u,
                Some(acc) => acc.gcd(&u),
            });
        }
        let content = content.expect("nonzero polynomial");
        let e_poly = if content.is_constant() {
            r.clone()
        } else {
            let xv = *r
                .vars()
                .iter()
                .find(|v| **v != self.marker)
                .expect("non-constant content has a variable");
            div_exact(r, &content.to_poly(xv))
        };
        UniPoly::from_poly(&e_poly).expect("marker-only factor").monic()
    }

    /// Largest breakpoint strictly below the limit on the axis at depth
    /// `prefix.len() + 1`, or None when the whole axis below is one cell.
    pub fn theta(&self, prefix: &[BigRational], limit: &CandidateLimit) -> Option<RealPoint> {
        let mut roots = {
            let mut cache = self.free_roots.lock().expect("no panics while held");
            cache
                .entry(prefix.to_vec())
                .or_insert_with(|| all_roots_sorted(&self.fiber_polys_free(prefix)))
                .clone()
        };
        let marked = match limit {
            CandidateLimit::Finite(RealPoint::Alg(a)) => self.marked_fiber_roots(prefix, a),
            _ => all_roots_sorted(&self.fiber_polys_marked(prefix, limit)),
        };
        merge_roots(&mut roots, marked);
        match limit {
            CandidateLimit::PlusInfinity => roots.pop(),
            CandidateLimit::Finite(p) => {
                // first index whose root is >= p; the answer sits just below
                let mut point = p.clone();
                let mut lo = 0usize;
                let mut hi = roots.len();
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    match cmp_refining(&mut roots[mid], &mut point) {
                        Ordering::Less => lo = mid + 1,
                        _ => hi = mid,
                    }
                }
                if lo == 0 {
                    None
                } else {
                    Some(roots.swap_remove(lo - 1))
                }
            }
        }
    }

    /// The sample tuple of the nested cells immediately below the limit:
    /// one strictly increasing rational per row.
    pub fn descend(&self, limit: &CandidateLimit) -> Vec<BigRational> {
        let mut prefix: Vec<BigRational> = Vec::new();
        for _ in 1..=self.rows {
            let theta = self.theta(&prefix, limit);
            let lower = clamp_lower(theta, prefix.last());
            let s = sample_below(lower.as_ref(), limit);
            prefix.push(s);
        }
        prefix
    }
}

/// The larger of the breakpoint and the previously chosen sample.
pub fn clamp_lower(theta: Option<RealPoint>, prev: Option<&BigRational>) -> Option<RealPoint> {
    match (theta, prev) {
        (None, None) => None,
        (Some(t), None) => Some(t),
        (None, Some(p)) => Some(RealPoint::Rat(p.clone())),
        (Some(t), Some(p)) => {
            let pv = RealPoint::Rat(p.clone());
            Some(if t > pv { t } else { pv })
        }
    }
}

/// A rational strictly between `lower` (or the start of the cell) and the
/// limit. With no lower bound: floor(p) - 1 below a finite limit, and 1
/// below +infinity (any point of the full line serves; 1 keeps unbounded
/// witnesses on the familiar 1, 2, 3, ... track).
pub fn sample_below(lower: Option<&RealPoint>, limit: &CandidateLimit) -> BigRational {
    match (lower, limit) {
        (None, CandidateLimit::PlusInfinity) => BigRational::one(),
        (Some(t), CandidateLimit::PlusInfinity) => t.ceil() + BigRational::one(),
        (None, CandidateLimit::Finite(p)) => p.floor() - BigRational::one(),
        (Some(t), CandidateLimit::Finite(p)) => rational_between(t, p),
    }
}
