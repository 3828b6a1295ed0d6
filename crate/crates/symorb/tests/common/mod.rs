//! Shared oracles for the integration suites. Everything here recomputes
//! answers from first principles (linear algebra, exhaustive enumeration,
//! grid search) so that library results are checked against genuinely
//! independent implementations rather than against themselves.

#![allow(dead_code)]

pub mod props;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use symorb::realalg::{RealPoint, UniPoly};
use symorb::{rat_int, BigRational, Monomial, Poly, VarIndex};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in [-bound, bound] and denominator 1 or 2.
pub fn small_rational(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    let numer = rng.random_range(-bound..=bound);
    let denom = if rng.random_bool(0.3) { 2 } else { 1 };
    BigRational::new(numer.into(), denom.into())
}

/// Random polynomial in the given variables: up to `max_terms` monomials of
/// total degree at most `max_deg` with small rational coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: &[VarIndex], max_deg: u32, max_terms: usize) -> Poly {
    let terms = rng.random_range(1..=max_terms);
    let mut p = Poly::zero();
    for _ in 0..terms {
        let mut exps: BTreeMap<VarIndex, u32> = BTreeMap::new();
        let mut budget = max_deg;
        for &v in vars {
            if budget == 0 {
                break;
            }
            let e = rng.random_range(0..=budget);
            if e > 0 {
                exps.insert(v, e);
                budget -= e;
            }
        }
        let c = small_rational(rng, 3);
        if !num_traits::Zero::is_zero(&c) {
            p.add_term(Monomial::from_exps(exps), c);
        }
    }
    p
}

/// All monomials over `vars` of total degree at most `bound`.
pub fn monomials_up_to(vars: &[VarIndex], bound: u32) -> Vec<Monomial> {
    fn rec(vars: &[VarIndex], bound: u32, cur: &mut Vec<(VarIndex, u32)>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => out.push(Monomial::from_exps(cur.iter().cloned())),
            Some((&v, rest)) => {
                for e in 0..=bound {
                    if e > 0 {
                        cur.push((v, e));
                    }
                    rec(rest, bound - e, cur, out);
                    if e > 0 {
                        cur.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, bound, &mut Vec::new(), &mut out);
    out
}

/// Degree-bounded ideal membership by exact linear algebra: f is accepted
/// exactly when it is a combination sum(m_i * g_i) with every product of
/// total degree at most `bound`. Acceptance proves membership outright;
/// rejection only says no certificate exists below the bound.
pub fn linalg_member(f: &Poly, gens: &[Poly], vars: &[VarIndex], bound: u32) -> bool {
    let columns = monomials_up_to(vars, bound);
    let col_index: BTreeMap<&Monomial, usize> = columns.iter().zip(0usize..).collect();
    let to_vec = |p: &Poly| -> Option<Vec<BigRational>> {
        let mut row = vec![BigRational::from_integer(0.into()); columns.len()];
        for (m, c) in p.terms() {
            row[*col_index.get(m)?] = c.clone();
        }
        Some(row)
    };
    // incremental row echelon over Q: pivots[j] is a row with leading column j
    let mut pivots: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    let reduce = |mut row: Vec<BigRational>, pivots: &BTreeMap<usize, Vec<BigRational>>| {
        for (j, pivot) in pivots {
            if !num_traits::Zero::is_zero(&row[*j]) {
                let factor = &row[*j] / &pivot[*j];
                for (a, b) in row.iter_mut().zip(pivot) {
                    *a = &*a - &factor * b;
                }
            }
        }
        row
    };
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let gdeg = g.total_degree();
        if gdeg > bound {
            continue;
        }
        for m in monomials_up_to(vars, bound - gdeg) {
            let product = g.mul_term(&m, &BigRational::from_integer(1.into()));
            let Some(vec) = to_vec(&product) else { continue };
            let reduced = reduce(vec, &pivots);
            if let Some(lead) = reduced.iter().position(|c| !num_traits::Zero::is_zero(c)) {
                pivots.insert(lead, reduced);
            }
        }
    }
    let Some(fvec) = to_vec(f) else { return false };
    let reduced = reduce(fvec, &pivots);
    reduced.iter().all(num_traits::Zero::is_zero)
}

fn ordered_distinct_tuples(len: usize, m: usize) -> Vec<Vec<usize>> {
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

/// Independent witness check: instead of symmetrizing the system it ranges
/// over every ordered tuple of distinct witness indices and evaluates the
/// original polynomials exactly, which quantifies over the same set.
pub fn verify_witness(weak: &[Poly], strict: &[Poly], m: u32, witness: &[RealPoint]) -> bool {
    if witness.len() < (m as usize).max(1) {
        return false;
    }
    if let Some(rationals) = witness
        .iter()
        .map(|w| w.as_rational().cloned())
        .collect::<Option<Vec<BigRational>>>()
    {
        return verify_rational_witness(weak, strict, m, &rationals);
    }
    // non-rational entries only arise for constant witnesses
    let first = &witness[0];
    if witness.iter().any(|w| w != first) {
        return false;
    }
    let mut diag: BTreeMap<VarIndex, Poly> = BTreeMap::new();
    for i in 2..=m {
        diag.insert(VarIndex::main(i, 1), Poly::var(VarIndex::main(1, 1)));
    }
    let sign_ok = |p: &Poly, strict_cond: bool| {
        let u = UniPoly::from_poly(&p.substitute(&diag)).expect("diagonal is univariate");
        let s = first.sign_of(&u);
        if strict_cond {
            s > 0
        } else {
            s >= 0
        }
    };
    weak.iter().all(|p| sign_ok(p, false)) && strict.iter().all(|p| sign_ok(p, true))
}

pub fn verify_rational_witness(
    weak: &[Poly],
    strict: &[Poly],
    m: u32,
    entries: &[BigRational],
) -> bool {
    if m == 0 {
        let ok = |p: &Poly, strict_cond: bool| {
            let v = p.as_constant().expect("no variables in a 0-row system");
            if strict_cond {
                v > rat_int(0)
            } else {
                v >= rat_int(0)
            }
        };
        return weak.iter().all(|p| ok(p, false)) && strict.iter().all(|p| ok(p, true));
    }
    for tuple in ordered_distinct_tuples(entries.len(), m as usize) {
        let values: BTreeMap<VarIndex, BigRational> = tuple
            .iter()
            .enumerate()
            .map(|(r, idx)| (VarIndex::main(r as u32 + 1, 1), entries[*idx].clone()))
            .collect();
        let ok = |p: &Poly, strict_cond: bool| {
            let v = p.evaluate(&values).expect("tuple assigns every row");
            if strict_cond {
                v > rat_int(0)
            } else {
                v >= rat_int(0)
            }
        };
        if !weak.iter().all(|p| ok(p, false)) || !strict.iter().all(|p| ok(p, true)) {
            return false;
        }
    }
    true
}

/// Brute-force search for a verified witness prefix: constants over a
/// half-integer grid, the arithmetic ramp 1,2,3,..., its negation, and
/// geometric approaches q(1 - 2^-i) toward each grid value q, probed both
/// from the start and deeper along the sequence.
pub fn brute_force_witness(weak: &[Poly], strict: &[Poly], m: u32) -> Option<Vec<BigRational>> {
    let len = (3 * m as usize).max(6);
    let mut candidates: Vec<Vec<BigRational>> = Vec::new();
    let grid: Vec<BigRational> = (-6..=6).map(|n| BigRational::new(n.into(), 2.into())).collect();
    for c in &grid {
        candidates.push(vec![c.clone(); len]);
    }
    candidates.push((1..=len as i64).map(rat_int).collect());
    candidates.push((1..=len as i64).map(|k| rat_int(-k)).collect());
    for q in &grid {
        if num_traits::Zero::is_zero(q) {
            continue;
        }
        for start in [1u32, 10] {
            let seq: Vec<BigRational> = (start..start + len as u32)
                .map(|i| {
                    let scale = BigRational::new(1.into(), symorb::BigInt::from(2).pow(i));
                    q * (rat_int(1) - scale)
                })
                .collect();
            candidates.push(seq);
        }
    }
    candidates
        .into_iter()
        .find(|entries| verify_rational_witness(weak, strict, m, entries))
}
