//! Exact univariate real algebra: Sturm chains, root isolation, real
//! algebraic numbers, sign evaluation, and satisfiability of sign systems.
//!
//! Everything is rational arithmetic; no floating point anywhere. Real
//! algebraic numbers are (squarefree defining polynomial, isolating open
//! interval) pairs whose endpoints are never roots. Refinement that lands
//! exactly on the root collapses the number to a rational.

use crate::poly::Poly;
use crate::var::VarIndex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealAlgError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("interval endpoint {endpoint} is a root")]
    EndpointIsRoot { endpoint: BigRational },
    #[error("polynomial is not univariate (uses {vars} variables)")]
    NotUnivariate { vars: usize },
    #[error("empty interval: {lo} >= {hi}")]
    EmptyInterval { lo: BigRational, hi: BigRational },
}

fn sign_rat(r: &BigRational) -> i8 {
    match r.cmp(&BigRational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Dense univariate polynomial over the rationals, coefficients ascending,
/// top coefficient nonzero (empty vector = zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|c| crate::rat_int(*c)).collect())
    }

    /// A multivariate polynomial in at most one variable, reinterpreted.
    pub fn from_poly(p: &Poly) -> Result<UniPoly, RealAlgError> {
        let vars = p.vars();
        if vars.len() > 1 {
            return Err(RealAlgError::NotUnivariate { vars: vars.len() });
        }
        match vars.into_iter().next() {
            None => Ok(match p.as_constant() {
                Some(c) => UniPoly::constant(c),
                None => UniPoly::zero(),
            }),
            Some(v) => {
                let deg = p.degree_in(v);
                let mut coeffs = vec![BigRational::zero(); deg as usize + 1];
                for (m, c) in p.terms() {
                    coeffs[m.exponent(v) as usize] = c.clone();
                }
                Ok(UniPoly::from_coeffs(coeffs))
            }
        }
    }

    /// Rendering back into the multivariate world on variable `v`.
    pub fn to_poly(&self, v: VarIndex) -> Poly {
        let mut acc = Poly::zero();
        let xv = Poly::var(v);
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &xv.pow(e as u32).scale(c);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(e, c)| c * BigRational::from(BigInt::from(e)))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Reversal of the axis: q(x) = p(-x).
    pub fn reflect(&self) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| if e % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Quotient and remainder of rational long division.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.leading().unwrap();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / dl;
            quot[shift] = factor.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                let idx = shift + i;
                let sub = c * &factor;
                rem[idx] -= sub;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Positive rescale to integer coefficients with content 1. Sign
    /// pattern is preserved, which is all Sturm theory needs.
    pub fn make_primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from(den_lcm.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        UniPoly {
            coeffs: ints
                .into_iter()
                .map(|c| BigRational::from(c / &content))
                .collect(),
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm with
    /// primitive rescaling to curb coefficient growth.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.make_primitive();
        let mut b = other.make_primitive();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.make_primitive();
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() || self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Strict bound B with every real root in (-B, B): 1 + max |c_i| / |c_n|.
    pub fn root_bound(&self) -> BigRational {
        let lead = match self.leading() {
            None => return BigRational::one(),
            Some(l) => l.abs(),
        };
        let max_rest = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        BigRational::one() + max_rest / lead
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(VarIndex::main(1, 1)))
    }
}

/// Sturm chain of the squarefree part, each member rescaled positive
/// primitive.
fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let q = p.squarefree_part();
    if q.is_zero() || q.is_constant() {
        return vec![q];
    }
    let mut chain = vec![q.make_primitive(), q.derivative().make_primitive()];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().make_primitive());
    }
    chain
}

fn sign_variations(chain: &[UniPoly], t: &BigRational) -> usize {
    let mut last: i8 = 0;
    let mut count = 0;
    for p in chain {
        let s = sign_rat(&p.eval(t));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of `p` in the open interval (lo, hi).
/// Endpoints must not be roots.
pub fn sturm_count(p: &UniPoly, lo: &BigRational, hi: &BigRational) -> Result<usize, RealAlgError> {
    if lo >= hi {
        return Err(RealAlgError::EmptyInterval { lo: lo.clone(), hi: hi.clone() });
    }
    if p.is_zero() {
        return Err(RealAlgError::ZeroPolynomial);
    }
    for t in [lo, hi] {
        if p.eval(t).is_zero() {
            return Err(RealAlgError::EndpointIsRoot { endpoint: t.clone() });
        }
    }
    let chain = sturm_chain(p);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// A real algebraic number: the unique root of `defining` (monic,
/// squarefree) inside the open interval (lo, hi), whose endpoints are not
/// roots.
#[derive(Debug, Clone)]
pub struct RealAlgebraicNumber {
    defining: UniPoly,
    lo: BigRational,
    hi: BigRational,
    // sign of `defining` at `lo`, cached so a bisection step costs one
    // evaluation at the midpoint and nothing else
    lo_sign: i8,
}

/// One bisection step either tightens the interval or lands exactly on the
/// root.
pub enum RefineOutcome {
    Exact(BigRational),
    Tighter(RealAlgebraicNumber),
}

impl RealAlgebraicNumber {
    fn new_unchecked(defining: UniPoly, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(!defining.eval(&hi).is_zero());
        let lo_sign = sign_rat(&defining.eval(&lo));
        debug_assert!(lo_sign != 0);
        RealAlgebraicNumber {
            defining,
            lo,
            hi,
            lo_sign,
        }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Exact rational value when the defining polynomial is linear.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.defining.degree() == 1 {
            let c = &self.defining.coeffs()[0];
            let l = &self.defining.coeffs()[1];
            Some(-(c / l))
        } else {
            None
        }
    }

    pub fn refine(&self) -> RefineOutcome {
        let mid = (&self.lo + &self.hi) / BigRational::from(BigInt::from(2));
        let at_mid = self.defining.eval(&mid);
        if at_mid.is_zero() {
            return RefineOutcome::Exact(mid);
        }
        // squarefree with a single simple root inside: the sign flips
        // exactly at the root
        let mid_sign = sign_rat(&at_mid);
        if mid_sign != self.lo_sign {
            RefineOutcome::Tighter(RealAlgebraicNumber {
                defining: self.defining.clone(),
                lo: self.lo.clone(),
                hi: mid,
                lo_sign: self.lo_sign,
            })
        } else {
            RefineOutcome::Tighter(RealAlgebraicNumber {
                defining: self.defining.clone(),
                lo: mid,
                hi: self.hi.clone(),
                lo_sign: mid_sign,
            })
        }
    }
}

impl fmt::Display for RealAlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {})", self.defining, self.lo, self.hi)
    }
}

/// Isolates the distinct real roots of `p`, ascending.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<RealAlgebraicNumber>, RealAlgError> {
    if p.is_zero() {
        return Err(RealAlgError::ZeroPolynomial);
    }
    let q = p.squarefree_part();
    if q.is_constant() {
        return Ok(Vec::new());
    }
    let bound = q.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    let chain = sturm_chain(&q);
    let count_in = |a: &BigRational, b: &BigRational| -> usize {
        sign_variations(&chain, a) - sign_variations(&chain, b)
    };
    let two = BigRational::from(BigInt::from(2));

    // carve an isolating interval with non-root endpoints around a known
    // rational root
    let carve = |mid: &BigRational, radius: &BigRational| -> (BigRational, BigRational) {
        let mut eps = radius / &two;
        loop {
            let a = mid - &eps;
            let b = mid + &eps;
            if !q.eval(&a).is_zero() && !q.eval(&b).is_zero() && count_in(&a, &b) == 1 {
                return (a, b);
            }
            eps /= &two;
        }
    };

    let mut intervals: Vec<(BigRational, BigRational)> = Vec::new();
    let total = count_in(&lo, &hi);
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, c)) = stack.pop() {
        match c {
            0 => {}
            1 => intervals.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                if q.eval(&mid).is_zero() {
                    let radius = (&b - &a) / &two;
                    let (ia, ib) = carve(&mid, &radius);
                    intervals.push((ia.clone(), ib.clone()));
                    let left = count_in(&a, &ia);
                    let right = count_in(&ib, &b);
                    stack.push((a, ia, left));
                    stack.push((ib, b, right));
                } else {
                    let left = count_in(&a, &mid);
                    stack.push((a, mid.clone(), left));
                    stack.push((mid, b, c - left));
                }
            }
        }
    }
    intervals.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(intervals
        .into_iter()
        .map(|(a, b)| RealAlgebraicNumber::new_unchecked(q.clone(), a, b))
        .collect())
}

/// Rational roots by the rational root theorem on the primitive integer
/// form. Best effort: gives up (returns only the trivial root 0, if any)
/// when an end coefficient is too large to factor by trial division. Used
/// to present algebraic numbers that happen to be rational in rational
/// form; comparisons never depend on it.
pub fn rational_roots(p: &UniPoly) -> Vec<BigRational> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let prim = p.make_primitive();
    let coeffs = prim.coeffs();
    let low = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let a0 = coeffs[low].to_integer();
    let an = coeffs.last().expect("nonzero").to_integer();
    let (Some(nums), Some(dens)) = (small_divisors(&a0), small_divisors(&an)) else {
        return roots;
    };
    if nums.len() * dens.len() > 128 {
        // smooth end coefficients can have far more divisor pairs than are
        // worth testing exactly
        return roots;
    }
    for n in &nums {
        for d in &dens {
            for cand in [BigRational::new(n.clone(), d.clone()), BigRational::new(-n.clone(), d.clone())] {
                if prim.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Positive divisors of `n`, or None when |n| exceeds 10^6. This routine
/// runs on every polynomial whose roots get isolated, so it has to stay
/// cheap; larger end coefficients simply forgo the rational presentation.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    use num_traits::ToPrimitive;
    let n = n.abs().to_u64().filter(|&v| v <= 1_000_000)?;
    debug_assert!(n > 0, "primitive polynomials have nonzero end coefficients");
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(BigInt::from(i));
            if i != n / i {
                divs.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Some(divs)
}

/// A real point: rational, or algebraic with an isolating interval.
/// Algebraic points with linear defining polynomials collapse to rationals
/// at construction, so `Rat` is the canonical form whenever possible.
#[derive(Debug, Clone)]
pub enum RealPoint {
    Rat(BigRational),
    Alg(RealAlgebraicNumber),
}

impl RealPoint {
    pub fn rational(r: BigRational) -> Self {
        RealPoint::Rat(r)
    }

    pub fn algebraic(a: RealAlgebraicNumber) -> Self {
        if let Some(r) = a.as_rational() {
            return RealPoint::Rat(r);
        }
        // the defining polynomial may still have a rational root inside the
        // isolating interval; carry such points in their rational form
        for r in rational_roots(&a.defining) {
            if r > a.lo && r < a.hi {
                return RealPoint::Rat(r);
            }
        }
        RealPoint::Alg(a)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RealPoint::Rat(r) => Some(r),
            RealPoint::Alg(_) => None,
        }
    }

    /// Lower and upper rational bounds (degenerate for rationals).
    fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            RealPoint::Rat(r) => (r.clone(), r.clone()),
            RealPoint::Alg(a) => (a.lo.clone(), a.hi.clone()),
        }
    }

    /// One refinement step; rationals are already exact. Returns whether
    /// anything changed.
    fn refine_in_place(&mut self) -> bool {
        if let RealPoint::Alg(a) = self {
            match a.refine() {
                RefineOutcome::Exact(r) => *self = RealPoint::Rat(r),
                RefineOutcome::Tighter(t) => *self = RealPoint::Alg(t),
            }
            true
        } else {
            false
        }
    }

    pub fn neg(&self) -> RealPoint {
        match self {
            RealPoint::Rat(r) => RealPoint::Rat(-r),
            RealPoint::Alg(a) => RealPoint::algebraic(RealAlgebraicNumber::new_unchecked(
                a.defining.reflect().monic(),
                -a.hi.clone(),
                -a.lo.clone(),
            )),
        }
    }

    /// floor of the point, exact.
    pub fn floor(&self) -> BigRational {
        let mut p = self.clone();
        loop {
            match &p {
                RealPoint::Rat(r) => return r.floor(),
                RealPoint::Alg(a) => {
                    if a.lo.floor() == a.hi.floor() {
                        return a.lo.floor();
                    }
                    // a single integer candidate may sit inside a narrow
                    // straddling interval; test it directly so the loop
                    // terminates when the root is that integer
                    if a.width() < BigRational::one() {
                        let n = a.hi.floor();
                        if a.defining.eval(&n).is_zero() && n > a.lo && n < a.hi {
                            return n;
                        }
                    }
                }
            }
            p.refine_in_place();
        }
    }

    pub fn ceil(&self) -> BigRational {
        -(self.neg().floor())
    }

    /// Exact sign of `f` at the point.
    pub fn sign_of(&self, f: &UniPoly) -> i8 {
        if f.is_zero() {
            return 0;
        }
        match self {
            RealPoint::Rat(r) => sign_rat(&f.eval(r)),
            RealPoint::Alg(a) => {
                let g = f.gcd(&a.defining);
                if !g.is_constant() {
                    // any root of g inside the isolating interval must be
                    // this number, so one count means f vanishes here
                    if sturm_count(&g, &a.lo, &a.hi).expect("endpoints are not roots of g") == 1 {
                        return 0;
                    }
                }
                // f does not vanish here: shrink until f has constant sign
                // on the closed interval
                let fsq = f.squarefree_part();
                let mut cur = RealPoint::Alg(a.clone());
                loop {
                    match &cur {
                        RealPoint::Rat(r) => return sign_rat(&f.eval(r)),
                        RealPoint::Alg(a) => {
                            let at_lo = f.eval(&a.lo);
                            if !at_lo.is_zero()
                                && !f.eval(&a.hi).is_zero()
                                && sturm_count(&fsq, &a.lo, &a.hi).expect("checked endpoints") == 0
                            {
                                return sign_rat(&at_lo);
                            }
                        }
                    }
                    cur.refine_in_place();
                }
            }
        }
    }

    fn is_rat(&self) -> bool {
        matches!(self, RealPoint::Rat(_))
    }
}

/// Three-way comparison that refines the isolating intervals in place, so
/// the progress survives in the callers' points and repeated comparisons
/// against the same roots get cheaper instead of starting over. Equality is
/// decided exactly, once per representation state: two algebraic points are
/// equal iff their defining polynomials share a root in the overlap of the
/// intervals, and that root is then the unique root of either inside it.
pub(crate) fn cmp_refining(x: &mut RealPoint, y: &mut RealPoint) -> Ordering {
    let mut tested: Option<(bool, bool)> = None;
    loop {
        let kinds = (x.is_rat(), y.is_rat());
        if tested != Some(kinds) {
            tested = Some(kinds);
            match (&*x, &*y) {
                (RealPoint::Rat(a), RealPoint::Rat(b)) => return a.cmp(b),
                (RealPoint::Alg(a), RealPoint::Rat(r)) | (RealPoint::Rat(r), RealPoint::Alg(a)) => {
                    if r > &a.lo && r < &a.hi && a.defining.eval(r).is_zero() {
                        return Ordering::Equal;
                    }
                }
                (RealPoint::Alg(a), RealPoint::Alg(b)) => {
                    let lo = a.lo.clone().max(b.lo.clone());
                    let hi = a.hi.clone().min(b.hi.clone());
                    if lo < hi {
                        let h = a.defining.gcd(&b.defining);
                        // overlap endpoints come from isolating intervals,
                        // so they are never roots of the common factor
                        if !h.is_constant()
                            && sturm_count(&h, &lo, &hi).expect("endpoints are not roots") == 1
                        {
                            return Ordering::Equal;
                        }
                    }
                }
            }
        }
        // distinct from here on: shrink until the bounds separate
        let (xl, xh) = x.bounds();
        let (yl, yh) = y.bounds();
        if xh <= yl {
            return Ordering::Less;
        }
        if yh <= xl {
            return Ordering::Greater;
        }
        x.refine_in_place();
        y.refine_in_place();
    }
}

impl PartialEq for RealPoint {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for RealPoint {}

impl PartialOrd for RealPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealPoint::Rat(a), RealPoint::Rat(b)) => a.cmp(b),
            _ => cmp_refining(&mut self.clone(), &mut other.clone()),
        }
    }
}

impl fmt::Display for RealPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealPoint::Rat(r) => write!(f, "{r}"),
            RealPoint::Alg(a) => write!(f, "{a}"),
        }
    }
}

/// A rational strictly between two distinct points. Picks the rational of
/// smallest denominator in the gap: every later computation carries these
/// sample values inside polynomial coefficients, so their size matters far
/// more than their position.
pub fn rational_between(a: &RealPoint, b: &RealPoint) -> BigRational {
    assert!(a < b, "rational_between requires a < b");
    let mut x = a.clone();
    let mut y = b.clone();
    loop {
        let (_, xh) = x.bounds();
        let (yl, _) = y.bounds();
        if xh < yl {
            return simplest_in_open(&xh, &yl);
        }
        if let (RealPoint::Rat(p), RealPoint::Rat(q)) = (&x, &y) {
            return simplest_in_open(p, q);
        }
        x.refine_in_place();
        y.refine_in_place();
    }
}

/// The smallest-denominator rational strictly between `lo` and `hi`, by
/// continued-fraction descent on the endpoints.
pub fn simplest_in_open(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo < hi, "simplest_in_open requires lo < hi");
    let zero = BigRational::zero();
    if *lo < zero && *hi > zero {
        return zero;
    }
    if *hi <= zero {
        return -simplest_in_open(&-hi.clone(), &-lo.clone());
    }
    // 0 <= lo < hi
    let next = lo.floor() + BigRational::one();
    if next < *hi {
        return next;
    }
    let a = lo.floor();
    let frac = lo - &a;
    if frac.is_zero() {
        // the gap sits inside (a, a+1]: its members are a + 1/t with
        // t > 1/(hi - a)
        let t = (hi - &a).recip();
        return a + (t.floor() + BigRational::one()).recip();
    }
    &a + simplest_in_open(&(hi - &a).recip(), &frac.recip()).recip()
}

/// Limits of monotone sequences: a real point or a signed infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedLimit {
    Finite(RealPoint),
    PlusInfinity,
    MinusInfinity,
}

impl fmt::Display for ExtendedLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedLimit::Finite(p) => write!(f, "{p}"),
            ExtendedLimit::PlusInfinity => write!(f, "+infinity"),
            ExtendedLimit::MinusInfinity => write!(f, "-infinity"),
        }
    }
}

/// All distinct real roots of all the (nonconstant) polynomials, sorted
/// ascending, duplicates across polynomials removed.
pub fn all_roots_sorted(polys: &[UniPoly]) -> Vec<RealPoint> {
    let mut roots: Vec<RealPoint> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        let isolated = isolate_roots(p).expect("nonzero by filter");
        // every root shares the squarefree defining polynomial, so one
        // rational-root scan covers them all
        let pool = match isolated.first() {
            Some(a) if a.defining().degree() > 1 => rational_roots(a.defining()),
            _ => Vec::new(),
        };
        for a in isolated {
            let point = if let Some(r) = a.as_rational() {
                RealPoint::Rat(r)
            } else if let Some(r) = pool.iter().find(|r| *r > a.lo() && *r < a.hi()) {
                RealPoint::Rat(r.clone())
            } else {
                RealPoint::Alg(a)
            };
            insert_root(&mut roots, point);
        }
    }
    roots
}

/// Merges more roots into an already sorted, duplicate-free list.
pub fn merge_roots(roots: &mut Vec<RealPoint>, more: Vec<RealPoint>) {
    for p in more {
        insert_root(roots, p);
    }
}

// Ordered insert with refining comparisons: interval progress made while
// placing one root stays in the list and speeds up the next insert. A
// duplicate is kept once, preferring the rational presentation.
fn insert_root(roots: &mut Vec<RealPoint>, mut p: RealPoint) {
    let mut lo = 0usize;
    let mut hi = roots.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        match cmp_refining(&mut p, &mut roots[mid]) {
            Ordering::Less => hi = mid,
            Ordering::Greater => lo = mid + 1,
            Ordering::Equal => {
                if p.is_rat() && !roots[mid].is_rat() {
                    roots[mid] = p;
                }
                return;
            }
        }
    }
    roots.insert(lo, p);
}

/// Rational sample points interleaving the sorted roots: one below the
/// smallest (floor - 1), one strictly between each consecutive pair, one
/// above the largest (ceil + 1). With no roots the single sample is 0.
pub fn interleaved_samples(roots: &[RealPoint]) -> Vec<BigRational> {
    if roots.is_empty() {
        return vec![BigRational::zero()];
    }
    let mut samples = Vec::with_capacity(roots.len() + 1);
    samples.push(roots[0].floor() - BigRational::one());
    for pair in roots.windows(2) {
        samples.push(rational_between(&pair[0], &pair[1]));
    }
    samples.push(roots[roots.len() - 1].ceil() + BigRational::one());
    samples
}

/// Conjunction of sign conditions on one real variable.
#[derive(Debug, Clone, Default)]
pub struct UnivariateSignSystem {
    pub weak: Vec<UniPoly>,
    pub strict: Vec<UniPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Empty,
    NonEmpty(RealPoint),
}

fn satisfies(sys: &UnivariateSignSystem, p: &RealPoint) -> bool {
    sys.weak.iter().all(|f| p.sign_of(f) >= 0) && sys.strict.iter().all(|g| p.sign_of(g) > 0)
}

/// Decides whether some real number satisfies every sign condition. The
/// real line is decomposed by all roots of all constraint polynomials; the
/// rational samples are tried first (ascending), then the roots themselves
/// (ascending), and the first satisfying point is the witness.
pub fn univariate_sat(sys: &UnivariateSignSystem) -> SatResult {
    // constant constraints decide immediately or drop out
    for f in &sys.weak {
        if f.is_constant() {
            let c = f.coeffs().first().cloned().unwrap_or_else(BigRational::zero);
            if c < BigRational::zero() {
                return SatResult::Empty;
            }
        }
    }
    for g in &sys.strict {
        if g.is_constant() {
            let c = g.coeffs().first().cloned().unwrap_or_else(BigRational::zero);
            if c <= BigRational::zero() {
                return SatResult::Empty;
            }
        }
    }
    let all: Vec<UniPoly> = sys.weak.iter().chain(&sys.strict).cloned().collect();
    let roots = all_roots_sorted(&all);
    for s in interleaved_samples(&roots) {
        let p = RealPoint::Rat(s);
        if satisfies(sys, &p) {
            return SatResult::NonEmpty(p);
        }
    }
    for r in roots {
        if satisfies(sys, &r) {
            return SatResult::NonEmpty(r);
        }
    }
    SatResult::Empty
}
