//! Symmetric ideals at a finite truncation level.
//!
//! The ambient ring has variables x[i][j] for rows i up to a level k, acted
//! on by row permutations. This module builds the level-k generators of:
//! orbit ideals of finitely many polynomials, vanishing ideals of orbit
//! closures of eventually-constant point sequences, fixed-point ideals, and
//! ideals of sequence families obtained by eliminating parameters from a
//! per-row instantiated presentation. Direct determinantal and Vandermonde
//! builders serve as cross-checks for the family route.

use crate::groebner::{GroebnerError, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::resultant::det_poly_matrix;
use crate::var::VarIndex;
use num_rational::BigRational;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivariantError {
    #[error("generator occupies {width} rows but the level is {level}")]
    WidthExceedsLevel { width: u32, level: u32 },
    #[error("component {component} needs level >= {needed}, got {level}")]
    LevelTooSmall { component: usize, needed: u32, level: u32 },
    #[error("polynomial must be supported on row 1 only, found {0}")]
    NotRowOne(VarIndex),
    #[error("column {col} exceeds the declared arity {ncols}")]
    ColumnOutOfRange { col: u32, ncols: u32 },
    #[error("parameter index {index} exceeds the declared count {count}")]
    ParamOutOfRange { index: u32, count: u32 },
    #[error("point has {got} coordinates, expected {expected}")]
    WrongArity { expected: u32, got: usize },
    #[error("component {component} has finite multiplicity but is not a single explicit point")]
    FiniteMultiplicityOnNonPoint { component: usize },
    #[error("component {component} has multiplicity 0; capacities start at 1")]
    ZeroMultiplicity { component: usize },
    #[error("sequence descriptor must contain at least one point")]
    EmptyDescriptor,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

fn check_cols(p: &Poly, ncols: u32) -> Result<(), EquivariantError> {
    for v in p.vars() {
        if let VarIndex::Main { col, .. } = v {
            if col > ncols {
                return Err(EquivariantError::ColumnOutOfRange { col, ncols });
            }
        }
    }
    Ok(())
}

fn check_row_one(p: &Poly) -> Result<(), EquivariantError> {
    for v in p.vars() {
        if let Some(r) = v.row() {
            if r != 1 {
                return Err(EquivariantError::NotRowOne(v));
            }
        }
    }
    Ok(())
}

/// All injective maps from `support` into {1..k}, in lexicographic order of
/// their image tuples.
fn injections(support: &[u32], k: u32) -> Vec<BTreeMap<u32, u32>> {
    fn rec(
        support: &[u32],
        pos: usize,
        k: u32,
        used: &mut Vec<bool>,
        cur: &mut BTreeMap<u32, u32>,
        out: &mut Vec<BTreeMap<u32, u32>>,
    ) {
        if pos == support.len() {
            out.push(cur.clone());
            return;
        }
        for target in 1..=k {
            if !used[target as usize] {
                used[target as usize] = true;
                cur.insert(support[pos], target);
                rec(support, pos + 1, k, used, cur, out);
                cur.remove(&support[pos]);
                used[target as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; k as usize + 1];
    rec(support, 0, k, &mut used, &mut BTreeMap::new(), &mut out);
    out
}

/// Ascending `m`-element subsets of {1..n}.
fn combinations(n: u32, m: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let remaining = m - cur.len();
        for v in start..=n {
            if (n - v + 1) as usize >= remaining {
                cur.push(v);
                rec(v + 1, n, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, n, m, &mut Vec::new(), &mut out);
    out
}

/// A symmetric ideal presented by finitely many generators whose orbit
/// under all row permutations generates the full ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIdealSpec {
    ncols: u32,
    generators: Vec<Poly>,
}

impl SymmetricIdealSpec {
    pub fn new<I: IntoIterator<Item = Poly>>(ncols: u32, generators: I) -> Result<Self, EquivariantError> {
        let gens: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            check_cols(g, ncols)?;
        }
        Ok(SymmetricIdealSpec { ncols, generators: gens })
    }

    pub fn ncols(&self) -> u32 {
        self.ncols
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }
}

/// The level-k truncation of the orbit ideal: every image of every
/// generator under an injective relocation of its occupied rows into
/// {1..k}. All of Sym(k) would give the same ideal with factorially more
/// duplicates.
pub fn orbit_truncate(spec: &SymmetricIdealSpec, k: u32) -> Result<Ideal, EquivariantError> {
    let mut images: BTreeSet<Poly> = BTreeSet::new();
    for g in &spec.generators {
        let support: Vec<u32> = g.main_rows().into_iter().collect();
        let width = support.len() as u32;
        if width > k {
            return Err(EquivariantError::WidthExceedsLevel { width, level: k });
        }
        let injs = injections(&support, k);
        images.extend(crate::par::map_collect(&injs, |inj| g.rename_rows(|r| inj[&r])));
    }
    Ok(Ideal::new(images, MonomialOrder::Grevlex))
}

/// How many times a value may occur in a member sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

/// One irreducible piece of the configuration variety. Components that are
/// single points may carry a finite occurrence capacity; everything else
/// admits unboundedly many entries. `complement_generators` vanish on the
/// union of the other components but not on this one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpec {
    pub complement_generators: Vec<Poly>,
    pub multiplicity: Multiplicity,
    pub point: Option<Vec<BigRational>>,
}

/// Data for the vanishing ideal of an orbit closure: generators of the
/// vanishing ideal of the whole configuration (row 1), plus per-component
/// complement generators and capacities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClosureSpec {
    ncols: u32,
    vp_generators: Vec<Poly>,
    components: Vec<ComponentSpec>,
}

impl OrbitClosureSpec {
    pub fn new(
        ncols: u32,
        vp_generators: Vec<Poly>,
        components: Vec<ComponentSpec>,
    ) -> Result<Self, EquivariantError> {
        for g in &vp_generators {
            check_row_one(g)?;
            check_cols(g, ncols)?;
        }
        for (ci, comp) in components.iter().enumerate() {
            for g in &comp.complement_generators {
                check_row_one(g)?;
                check_cols(g, ncols)?;
            }
            match comp.multiplicity {
                Multiplicity::Finite(0) => {
                    return Err(EquivariantError::ZeroMultiplicity { component: ci })
                }
                Multiplicity::Finite(_) if comp.point.is_none() => {
                    return Err(EquivariantError::FiniteMultiplicityOnNonPoint { component: ci })
                }
                _ => {}
            }
            if let Some(pt) = &comp.point {
                if pt.len() != ncols as usize {
                    return Err(EquivariantError::WrongArity { expected: ncols, got: pt.len() });
                }
            }
        }
        Ok(OrbitClosureSpec { ncols, vp_generators, components })
    }

    pub fn ncols(&self) -> u32 {
        self.ncols
    }

    pub fn vp_generators(&self) -> &[Poly] {
        &self.vp_generators
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }
}

/// Level-k generators of the orbit-closure vanishing ideal: every row
/// embedding of the configuration generators, plus, for each finite-capacity
/// point, the orbit of the product of one complement generator over nu+1
/// distinct rows (which outlaws nu+1 simultaneous visits to that point).
pub fn orbit_closure_generators(spec: &OrbitClosureSpec, k: u32) -> Result<Ideal, EquivariantError> {
    let mut gens: BTreeSet<Poly> = BTreeSet::new();
    for f in &spec.vp_generators {
        for i in 1..=k {
            gens.insert(f.row_embed(i).expect("validated row-1 support"));
        }
    }
    for (ci, comp) in spec.components.iter().enumerate() {
        let Multiplicity::Finite(nu) = comp.multiplicity else {
            continue;
        };
        let needed = nu + 1;
        if needed > k {
            return Err(EquivariantError::LevelTooSmall { component: ci, needed, level: k });
        }
        for g in &comp.complement_generators {
            let mut prod = Poly::one();
            for r in 1..=needed {
                prod = &prod * &g.row_embed(r).expect("validated row-1 support");
            }
            let support: Vec<u32> = prod.main_rows().into_iter().collect();
            let injs = injections(&support, k);
            gens.extend(crate::par::map_collect(&injs, |inj| prod.rename_rows(|r| inj[&r])));
        }
    }
    Ok(Ideal::new(gens, MonomialOrder::Grevlex))
}

/// An eventually-constant sequence of rational points: the explicit prefix
/// followed by `tail` forever. A missing tail repeats the last explicit
/// point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePrefixDescriptor {
    ncols: u32,
    explicit_points: Vec<Vec<BigRational>>,
    tail: Option<Vec<BigRational>>,
}

impl SequencePrefixDescriptor {
    pub fn new(
        ncols: u32,
        explicit_points: Vec<Vec<BigRational>>,
        tail: Option<Vec<BigRational>>,
    ) -> Result<Self, EquivariantError> {
        if explicit_points.is_empty() && tail.is_none() {
            return Err(EquivariantError::EmptyDescriptor);
        }
        for p in explicit_points.iter().chain(tail.as_ref()) {
            if p.len() != ncols as usize {
                return Err(EquivariantError::WrongArity { expected: ncols, got: p.len() });
            }
        }
        Ok(SequencePrefixDescriptor { ncols, explicit_points, tail })
    }

    pub fn ncols(&self) -> u32 {
        self.ncols
    }

    pub fn explicit_points(&self) -> &[Vec<BigRational>] {
        &self.explicit_points
    }

    /// The value repeated forever: the declared tail, or the last explicit
    /// point.
    pub fn effective_tail(&self) -> &Vec<BigRational> {
        self.tail
            .as_ref()
            .or_else(|| self.explicit_points.last())
            .expect("descriptor is nonempty")
    }
}

fn row_one_assignment(point: &[BigRational]) -> BTreeMap<VarIndex, BigRational> {
    point
        .iter()
        .enumerate()
        .map(|(j, c)| (VarIndex::main(1, j as u32 + 1), c.clone()))
        .collect()
}

/// Membership of the sequence in the orbit closure: every entry lies in the
/// configuration, and each finite-capacity point occurs at most its capacity
/// many times (the tail value occurs infinitely often).
pub fn orbit_closure_member(
    spec: &OrbitClosureSpec,
    p: &SequencePrefixDescriptor,
) -> Result<bool, EquivariantError> {
    if p.ncols() != spec.ncols {
        return Err(EquivariantError::WrongArity {
            expected: spec.ncols,
            got: p.ncols() as usize,
        });
    }
    let tail = p.effective_tail().clone();
    let mut entries: Vec<&Vec<BigRational>> = p.explicit_points().iter().collect();
    entries.push(&tail);
    for entry in &entries {
        let assignment = row_one_assignment(entry);
        for f in &spec.vp_generators {
            let value = f.evaluate(&assignment).expect("validated row-1 support");
            if !num_traits::Zero::is_zero(&value) {
                return Ok(false);
            }
        }
    }
    for (ci, comp) in spec.components.iter().enumerate() {
        let Multiplicity::Finite(nu) = comp.multiplicity else {
            continue;
        };
        let v = comp
            .point
            .as_ref()
            .ok_or(EquivariantError::FiniteMultiplicityOnNonPoint { component: ci })?;
        if &tail == v {
            return Ok(false);
        }
        let count = p.explicit_points().iter().filter(|e| *e == v).count();
        if count > nu as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The ideal of the set of sequences all of whose entries satisfy the given
/// row-1 equations: one embedded copy per row.
pub fn fixed_point_generators(prime_generators: &[Poly], k: u32) -> Result<Ideal, EquivariantError> {
    let mut gens: BTreeSet<Poly> = BTreeSet::new();
    for f in prime_generators {
        check_row_one(f)?;
        for i in 1..=k {
            gens.insert(f.row_embed(i).expect("just validated"));
        }
    }
    Ok(Ideal::new(gens, MonomialOrder::Grevlex))
}

/// A family of points parametrized by a base: `generators` cut out the
/// incidence set in the shared parameters s[1..shared_params], auxiliary
/// per-point parameters s[shared_params+1..shared_params+fiber_params], and
/// one row of coordinates x[1][1..ncols]. Shared parameters are common to
/// all rows of an instantiation; fiber parameters get a fresh copy per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    ncols: u32,
    shared_params: u32,
    fiber_params: u32,
    generators: Vec<Poly>,
}

impl FamilySpec {
    pub fn new(
        ncols: u32,
        shared_params: u32,
        fiber_params: u32,
        generators: Vec<Poly>,
    ) -> Result<Self, EquivariantError> {
        let count = shared_params + fiber_params;
        for g in &generators {
            check_row_one(g)?;
            check_cols(g, ncols)?;
            for v in g.vars() {
                if let VarIndex::Param { index } = v {
                    if index > count {
                        return Err(EquivariantError::ParamOutOfRange { index, count });
                    }
                }
            }
        }
        Ok(FamilySpec { ncols, shared_params, fiber_params, generators })
    }

    pub fn ncols(&self) -> u32 {
        self.ncols
    }

    pub fn shared_params(&self) -> u32 {
        self.shared_params
    }

    pub fn fiber_params(&self) -> u32 {
        self.fiber_params
    }

    pub fn param_count(&self) -> u32 {
        self.shared_params + self.fiber_params
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }
}

/// The level-k ideal of sequences whose every entry lies in a single fiber
/// of the family: instantiate the presentation at each row (sharing the
/// base parameters, duplicating the fiber parameters) and eliminate all
/// parameters.
pub fn seq_ideal_level(family: &FamilySpec, k: u32) -> Result<Ideal, EquivariantError> {
    assert!(k >= 1, "level must be at least 1");
    let shared = family.shared_params;
    let fiber = family.fiber_params;
    let mut gens = Vec::new();
    for i in 1..=k {
        for g in &family.generators {
            gens.push(g.rename_vars(|v| match v {
                VarIndex::Main { col, .. } => VarIndex::main(i, col),
                VarIndex::Param { index } if index > shared => {
                    VarIndex::param(shared + (i - 1) * fiber + (index - shared))
                }
                p => p,
            }));
        }
    }
    let full = Ideal::new(gens, MonomialOrder::Grevlex);
    let keep: BTreeSet<VarIndex> = full
        .ambient_vars()
        .into_iter()
        .filter(|v| v.is_main())
        .collect();
    Ok(full.elimination_ideal(&keep)?)
}

/// Points on an unknown r-dimensional linear subspace of n-space: the
/// subspace basis is shared, the coefficients of each point are per-row.
pub fn rank_family(r: u32, n: u32) -> FamilySpec {
    assert!(r >= 1 && n >= 1);
    let mut gens = Vec::new();
    for j in 1..=n {
        // x[1][j] - sum_t c_t * b_t[j], basis entries s[(t-1)n + j], coefficients s[rn + t]
        let mut rhs = Poly::zero();
        for t in 1..=r {
            let coeff = Poly::var(VarIndex::param(r * n + t));
            let basis = Poly::var(VarIndex::param((t - 1) * n + j));
            rhs = &rhs + &(&coeff * &basis);
        }
        gens.push(&Poly::var(VarIndex::main(1, j)) - &rhs);
    }
    FamilySpec::new(n, r * n, r, gens).expect("construction is well formed")
}

/// Exponent tuples of the monomials of total degree at most d in n
/// variables, ascending by degree then lexicographically.
fn exponent_tuples(d: u32, n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n as usize {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|t| (t.iter().sum::<u32>(), t.clone()));
    out
}

fn monomial_in_row(row: u32, exps: &[u32]) -> Poly {
    let m = Monomial::from_exps(
        exps.iter()
            .enumerate()
            .map(|(j, e)| (VarIndex::main(row, j as u32 + 1), *e)),
    );
    let mut p = Poly::zero();
    p.add_term(m, crate::rat_int(1));
    p
}

/// Points on an unknown hypersurface of degree at most d in n-space, in the
/// affine chart where the coefficient of the largest monomial is 1. The
/// shared parameters are the remaining coefficients; there are no fiber
/// parameters.
pub fn hypersurface_family(d: u32, n: u32) -> FamilySpec {
    assert!(d >= 1 && n >= 1);
    let tuples = exponent_tuples(d, n);
    let m = tuples.len();
    let mut gen = monomial_in_row(1, &tuples[m - 1]);
    for (q, t) in tuples[..m - 1].iter().enumerate() {
        let coeff = Poly::var(VarIndex::param(q as u32 + 1));
        gen = &gen + &(&coeff * &monomial_in_row(1, t));
    }
    FamilySpec::new(n, (m - 1) as u32, 0, vec![gen]).expect("construction is well formed")
}

/// Sequences lying on a common hypersurface of degree at most d, built
/// directly: all maximal minors of the k x M matrix whose row i lists the
/// degree-at-most-d monomials in x[i][*], M = C(n+d, d). Below M rows the
/// condition is vacuous and the ideal is zero.
pub fn vandermonde_seq_ideal(d: u32, n: u32, k: u32) -> Ideal {
    let tuples = exponent_tuples(d, n);
    let m = tuples.len();
    let mut gens = Vec::new();
    if (k as usize) >= m {
        for rows in combinations(k, m) {
            let mat: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&i| tuples.iter().map(|t| monomial_in_row(i, t)).collect())
                .collect();
            gens.push(det_poly_matrix(&mat));
        }
    }
    Ideal::new(gens, MonomialOrder::Grevlex)
}

/// Sequences of rank at most r in n-space: all (r+1)x(r+1) minors of the
/// n x k coordinate matrix whose columns are the points. Zero ideal when no
/// minors of that size exist.
pub fn grassmannian_seq_ideal(r: u32, n: u32, k: u32) -> Ideal {
    let size = (r + 1) as usize;
    let mut gens = Vec::new();
    if size <= n as usize && size <= k as usize {
        for js in combinations(n, size) {
            for is in combinations(k, size) {
                let mat: Vec<Vec<Poly>> = js
                    .iter()
                    .map(|&j| is.iter().map(|&i| Poly::var(VarIndex::main(i, j))).collect())
                    .collect();
                gens.push(det_poly_matrix(&mat));
            }
        }
    }
    Ideal::new(gens, MonomialOrder::Grevlex)
}

/// Probes whether the generator-image truncation at level k agrees with the
/// contraction of the level-(k+1) truncation to the first k rows.
pub fn check_truncation_stable(spec: &SymmetricIdealSpec, k: u32) -> Result<bool, EquivariantError> {
    let level_k = orbit_truncate(spec, k)?;
    let above = orbit_truncate(spec, k + 1)?;
    let keep: BTreeSet<VarIndex> = above
        .ambient_vars()
        .into_iter()
        .filter(|v| v.row().is_none_or(|r| r <= k))
        .collect();
    let contraction = above.elimination_ideal(&keep)?;
    Ok(level_k.groebner_basis()? == contraction.groebner_basis()?)
}
