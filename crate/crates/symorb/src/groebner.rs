//! Buchberger's algorithm, normal forms, elimination, radical membership.
//!
//! Everything here is deterministic: the pair queue is ordered, bases are
//! kept sorted by leading term, and the output is the unique reduced monic
//! Gröbner basis for the handle's order. A degree cap bounds every
//! intermediate reduction so runaway computations fail fast with a typed
//! error instead of consuming the machine.

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::var::VarIndex;
use num_rational::BigRational;
use std::collections::{BTreeSet, BTreeMap};
use std::sync::OnceLock;
use thiserror::Error;

pub const DEFAULT_DEGREE_CAP: u32 = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("degree cap exceeded: intermediate degree {degree} > cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
}

/// An ideal presented by generators, with a monomial order and a lazily
/// computed, cached reduced Gröbner basis.
#[derive(Debug)]
pub struct Ideal {
    generators: Vec<Poly>,
    order: MonomialOrder,
    degree_cap: u32,
    gb: OnceLock<Result<Vec<Poly>, GroebnerError>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(v) = self.gb.get() {
            let _ = gb.set(v.clone());
        }
        Ideal {
            generators: self.generators.clone(),
            order: self.order.clone(),
            degree_cap: self.degree_cap,
            gb,
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.order == other.order
            && self.degree_cap == other.degree_cap
    }
}
impl Eq for Ideal {}

impl Ideal {
    /// Builds a handle. Zero generators are dropped and the list is sorted
    /// and deduplicated, so equal presentations compare equal.
    pub fn new<I: IntoIterator<Item = Poly>>(generators: I, order: MonomialOrder) -> Self {
        let mut gens: Vec<Poly> = generators.into_iter().filter(|p| !p.is_zero()).collect();
        gens.sort();
        gens.dedup();
        Ideal {
            generators: gens,
            order,
            degree_cap: DEFAULT_DEGREE_CAP,
            gb: OnceLock::new(),
        }
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        if cap != self.degree_cap {
            self.degree_cap = cap;
            self.gb = OnceLock::new();
        }
        self
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// All variables appearing in the generators.
    pub fn ambient_vars(&self) -> BTreeSet<VarIndex> {
        self.generators.iter().flat_map(|g| g.vars()).collect()
    }

    /// The reduced monic Gröbner basis, computed once and cached.
    pub fn groebner_basis(&self) -> Result<&[Poly], GroebnerError> {
        let r = self
            .gb
            .get_or_init(|| buchberger(&self.generators, &self.order, self.degree_cap));
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// Installs a known reduced basis (used by elimination, where the
    /// filtered basis is already the reduced basis of the contraction).
    fn with_known_gb(generators: Vec<Poly>, order: MonomialOrder, cap: u32) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(Ok(generators.clone()));
        Ideal { generators, order, degree_cap: cap, gb }
    }

    /// Fully reduced normal form of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly, GroebnerError> {
        let gb = self.groebner_basis()?;
        reduce_full(f, gb, &self.order, self.degree_cap)
    }

    /// Ideal membership: the normal form vanishes.
    pub fn contains(&self, f: &Poly) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The contraction to the polynomial ring on `keep`: a Gröbner basis is
    /// computed for a block order that eliminates everything else, and the
    /// elements supported on `keep` are returned (they form the reduced
    /// grevlex basis of the elimination ideal).
    pub fn elimination_ideal(&self, keep: &BTreeSet<VarIndex>) -> Result<Ideal, GroebnerError> {
        let eliminated: BTreeSet<VarIndex> = self
            .ambient_vars()
            .into_iter()
            .filter(|v| !keep.contains(v))
            .collect();
        let order = MonomialOrder::Block { eliminated };
        let gb = buchberger(&self.generators, &order, self.degree_cap)?;
        let kept: Vec<Poly> = gb
            .into_iter()
            .filter(|g| g.vars().iter().all(|v| keep.contains(v)))
            .collect();
        Ok(Ideal::with_known_gb(kept, MonomialOrder::Grevlex, self.degree_cap))
    }

    /// Radical membership via the auxiliary-variable trick: `f` is in the
    /// radical iff adjoining `1 - t*f` for a fresh variable `t` produces the
    /// unit ideal.
    pub fn radical_contains(&self, f: &Poly) -> Result<bool, GroebnerError> {
        if f.is_zero() {
            return Ok(true);
        }
        let fresh = self
            .generators
            .iter()
            .map(|g| g.max_param_index())
            .chain([f.max_param_index()])
            .max()
            .unwrap_or(0)
            + 1;
        let t = Poly::var(VarIndex::param(fresh));
        let one_minus_tf = &Poly::one() - &(&t * f);
        let mut gens = self.generators.clone();
        gens.push(one_minus_tf);
        let probe = Ideal::new(gens, MonomialOrder::Grevlex).with_degree_cap(self.degree_cap);
        Ok(probe.groebner_basis()? == [Poly::one()])
    }
}

/// Full reduction of `f` by `basis`: no term of the result is divisible by
/// any basis leading term. Intermediate blowup beyond `cap` is an error.
pub fn reduce_full(
    f: &Poly,
    basis: &[Poly],
    order: &MonomialOrder,
    cap: u32,
) -> Result<Poly, GroebnerError> {
    let lts: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("basis elements are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut remainder = Poly::zero();
    'outer: while !p.is_zero() {
        let deg = p.total_degree();
        if deg > cap {
            return Err(GroebnerError::DegreeCapExceeded { degree: deg, cap });
        }
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (gm, gc)) in lts.iter().enumerate() {
            if gm.divides(&lm) {
                let t = gm.div_into(&lm).unwrap();
                let coeff = &lc / gc;
                p = &p - &basis[i].mul_term(&t, &coeff);
                continue 'outer;
            }
        }
        remainder.add_term(lm.clone(), lc.clone());
        p.add_term(lm, -lc);
    }
    Ok(remainder)
}

/// Key for the pair queue: normal selection strategy picks the pair whose
/// lcm has minimal total degree; remaining components only break ties
/// deterministically.
type PairKey = (u32, Monomial, usize, usize);

fn pair_key(i: usize, j: usize, lts: &[(Monomial, BigRational)]) -> PairKey {
    let lcm = lts[i].0.lcm(&lts[j].0);
    (lcm.total_degree(), lcm, i, j)
}

/// Buchberger with the product and chain criteria, then reduction to the
/// unique reduced monic basis, sorted ascending by leading term.
pub fn buchberger(
    generators: &[Poly],
    order: &MonomialOrder,
    cap: u32,
) -> Result<Vec<Poly>, GroebnerError> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in generators {
        if !g.is_zero() {
            let deg = g.total_degree();
            if deg > cap {
                return Err(GroebnerError::DegreeCapExceeded { degree: deg, cap });
            }
            basis.push(g.clone());
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut lts: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).unwrap();
            (m.clone(), c.clone())
        })
        .collect();

    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert(pair_key(i, j, &lts));
        }
    }

    while let Some(key) = pending.pop_first() {
        let (_, ref lcm, i, j) = key;

        // product criterion: coprime leading terms reduce to zero
        if lts[i].0.is_coprime_with(&lts[j].0) {
            continue;
        }
        // chain criterion: some k divides the lcm and both mixed pairs are
        // already handled (not pending)
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lts[k].0.divides(lcm)
                && !pending.contains(&pair_key(i.min(k), i.max(k), &lts))
                && !pending.contains(&pair_key(j.min(k), j.max(k), &lts))
        });
        if chained {
            continue;
        }

        let s = s_poly(&basis[i], &basis[j], &lts[i], &lts[j]);
        let r = reduce_full(&s, &basis, order, cap)?;
        if r.is_zero() {
            continue;
        }
        let (m, c) = r.leading_term(order).unwrap();
        lts.push((m.clone(), c.clone()));
        basis.push(r);
        let new = basis.len() - 1;
        for k in 0..new {
            pending.insert(pair_key(k, new, &lts));
        }
    }

    Ok(reduce_basis(basis, order, cap)?)
}

fn s_poly(
    f: &Poly,
    g: &Poly,
    (fm, fc): &(Monomial, BigRational),
    (gm, gc): &(Monomial, BigRational),
) -> Poly {
    let lcm = fm.lcm(gm);
    let tf = fm.div_into(&lcm).unwrap();
    let tg = gm.div_into(&lcm).unwrap();
    let a = f.mul_term(&tf, &fc.recip());
    let b = g.mul_term(&tg, &gc.recip());
    &a - &b
}

/// Minimizes and inter-reduces a Gröbner basis into the reduced monic basis.
fn reduce_basis(basis: Vec<Poly>, order: &MonomialOrder, cap: u32) -> Result<Vec<Poly>, GroebnerError> {
    // sort ascending by leading term so that divisors precede multiples
    let mut with_lt: Vec<(Monomial, Poly)> = basis
        .into_iter()
        .map(|g| {
            let lt = g.leading_term(order).unwrap().0.clone();
            (lt, g)
        })
        .collect();
    with_lt.sort_by(|(a, pa), (b, pb)| a.cmp_with(b, order).then_with(|| pa.cmp(pb)));

    // minimal basis: keep only elements whose leading term no kept leading
    // term divides
    let mut minimal: Vec<(Monomial, Poly)> = Vec::new();
    for (lt, g) in with_lt {
        if !minimal.iter().any(|(kept, _)| kept.divides(&lt)) {
            minimal.push((lt, g));
        }
    }

    // inter-reduce tails; leading terms are pairwise indivisible so they
    // survive reduction against the others
    let polys: Vec<Poly> = minimal.iter().map(|(_, g)| g.clone()).collect();
    let mut reduced: Vec<Poly> = Vec::with_capacity(polys.len());
    for i in 0..polys.len() {
        let others: Vec<Poly> = polys
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = if others.is_empty() {
            polys[i].clone()
        } else {
            reduce_full(&polys[i], &others, order, cap)?
        };
        debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
        reduced.push(r.monic(order));
    }
    reduced.sort_by(|a, b| {
        a.leading_term(order)
            .unwrap()
            .0
            .cmp_with(b.leading_term(order).unwrap().0, order)
    });
    Ok(reduced)
}

/// Convenience used all over the tests: membership of `f` in the ideal
/// generated by `gens` under grevlex with the default cap.
pub fn reduces_to_zero(f: &Poly, gens: &[Poly]) -> Result<bool, GroebnerError> {
    Ideal::new(gens.to_vec(), MonomialOrder::Grevlex).contains(f)
}

/// Equality of two ideals as sets: mutual reduction of generators to zero.
pub fn same_ideal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    for g in b.generators() {
        if !a.contains(g)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !b.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partial-evaluation image of an ideal's generators (used when
/// specializing parameters), kept here so callers don't re-implement the
/// zero-filtering.
pub fn specialize_generators(gens: &[Poly], assignment: &BTreeMap<VarIndex, BigRational>) -> Vec<Poly> {
    gens.iter()
        .map(|g| g.partial_eval(assignment))
        .filter(|g| !g.is_zero())
        .collect()
}
