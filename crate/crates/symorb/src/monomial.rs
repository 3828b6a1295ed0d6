//! Monomials and monomial orders.

use crate::var::VarIndex;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A monomial: finitely many variables with positive exponents.
///
/// The derived `Ord` is *not* used; `Ord` is implemented by hand as graded
/// reverse lexicographic over the canonical variable order, which is also the
/// storage order inside [`crate::poly::Poly`]. Equal monomials therefore have
/// bit-identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VarIndex, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: BTreeMap::new() }
    }

    pub fn var(v: VarIndex) -> Self {
        Monomial::from_exps([(v, 1)])
    }

    /// Builds a monomial, dropping zero exponents and summing duplicates.
    pub fn from_exps<I: IntoIterator<Item = (VarIndex, u32)>>(exps: I) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in exps {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps: m }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarIndex) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Drops `v` entirely (used when splitting off a univariate view).
    pub fn remove_var(&mut self, v: VarIndex) {
        self.exps.remove(&v);
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarIndex> + '_ {
        self.exps.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarIndex, u32)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, e)| other.exponent(*v) >= *e)
    }

    /// `other / self`, if divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = BTreeMap::new();
        for (v, e) in &other.exps {
            let d = e.checked_sub(self.exponent(*v))?;
            if d > 0 {
                exps.insert(*v, d);
            }
        }
        if self.exps.iter().any(|(v, e)| other.exponent(*v) < *e) {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let cur = exps.entry(*v).or_insert(0);
            *cur = (*cur).max(*e);
        }
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.keys().all(|v| !other.exps.contains_key(v))
    }

    /// Renames variables through `f`. The map must be injective on the
    /// variables of the monomial (row permutations are).
    pub fn rename_vars(&self, f: impl Fn(VarIndex) -> VarIndex) -> Monomial {
        let mut exps = BTreeMap::new();
        for (v, e) in &self.exps {
            let w = f(*v);
            let prev = exps.insert(w, *e);
            debug_assert!(prev.is_none(), "variable renaming collided at {w}");
        }
        Monomial { exps }
    }

    /// Degree restricted to a variable subset.
    fn degree_in(&self, set: &BTreeSet<VarIndex>) -> u32 {
        self.exps
            .iter()
            .filter(|(v, _)| set.contains(v))
            .map(|(_, e)| e)
            .sum()
    }

    /// Graded reverse lexicographic comparison over the full variable set.
    fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.cmp_revlex_tie(other, None),
            ord => ord,
        }
    }

    /// Grevlex restricted to a block of variables.
    fn cmp_grevlex_in(&self, other: &Monomial, set: &BTreeSet<VarIndex>) -> Ordering {
        match self.degree_in(set).cmp(&other.degree_in(set)) {
            Ordering::Equal => self.cmp_revlex_tie(other, Some(set)),
            ord => ord,
        }
    }

    /// Reverse-lex tie-break: walk variables from least significant (largest
    /// `VarIndex`) to most significant; at the first differing exponent the
    /// monomial with the *smaller* exponent is the larger one.
    fn cmp_revlex_tie(&self, other: &Monomial, set: Option<&BTreeSet<VarIndex>>) -> Ordering {
        let mut a = self.exps.iter().rev().filter(|(v, _)| set.is_none_or(|s| s.contains(v))).peekable();
        let mut b = other.exps.iter().rev().filter(|(v, _)| set.is_none_or(|s| s.contains(v))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                // `a` still has a variable beyond everything left in `b`:
                // that variable is the least significant difference and only
                // `a` carries it, so `a` is smaller.
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // `va` is less significant and only in `a`.
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {
                        if ea != eb {
                            // larger exponent at the least significant spot
                            // makes the monomial smaller
                            return eb.cmp(ea);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }

    /// Lexicographic comparison: most significant variable first.
    fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }

    pub fn cmp_with(&self, other: &Monomial, order: &MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Grevlex => self.cmp_grevlex(other),
            MonomialOrder::Lex => self.cmp_lex(other),
            MonomialOrder::Block { eliminated } => {
                match self.cmp_grevlex_in(other, eliminated) {
                    Ordering::Equal => {
                        // Tie on the dominant block: compare the remainder by
                        // grevlex. Restricting grevlex to the complement needs
                        // the kept variables; build the filter on the fly.
                        let kept: BTreeSet<VarIndex> = self
                            .exps
                            .keys()
                            .chain(other.exps.keys())
                            .copied()
                            .filter(|v| !eliminated.contains(v))
                            .collect();
                        self.cmp_grevlex_in(other, &kept)
                    }
                    ord => ord,
                }
            }
        }
    }
}

/// Canonical storage order: grevlex over the canonical variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial order for Gröbner computations.
///
/// `Block` is an elimination order: monomials compare first by their part in
/// the `eliminated` block (grevlex), then by the rest (grevlex). A Gröbner
/// basis under it intersected with the kept variables is a Gröbner basis of
/// the elimination ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    Block { eliminated: BTreeSet<VarIndex> },
}

impl MonomialOrder {
    pub fn block_eliminating<I: IntoIterator<Item = VarIndex>>(vars: I) -> Self {
        MonomialOrder::Block { eliminated: vars.into_iter().collect() }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Block { eliminated } => {
                write!(f, "block(eliminate ")?;
                for (i, v) in eliminated.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(row: u32) -> VarIndex {
        VarIndex::main(row, 1)
    }

    fn m(exps: &[(VarIndex, u32)]) -> Monomial {
        Monomial::from_exps(exps.iter().copied())
    }

    #[test]
    fn grevlex_textbook_cases() {
        // with x1 > x2 > x3: x1^5*x2*x3 > x1^4*x2*x3^2 (same degree, smaller
        // exponent at the least significant variable wins)
        let a = m(&[(x(1), 5), (x(2), 1), (x(3), 1)]);
        let b = m(&[(x(1), 4), (x(2), 1), (x(3), 2)]);
        assert_eq!(a.cmp_with(&b, &MonomialOrder::Grevlex), Ordering::Greater);

        // x2^3*x1 > x1^2*x2*x3
        let c = m(&[(x(1), 1), (x(2), 3)]);
        let d = m(&[(x(1), 2), (x(2), 1), (x(3), 1)]);
        assert_eq!(c.cmp_with(&d, &MonomialOrder::Grevlex), Ordering::Greater);

        // degree dominates
        let e = m(&[(x(3), 5)]);
        let f = m(&[(x(1), 4)]);
        assert_eq!(e.cmp_with(&f, &MonomialOrder::Grevlex), Ordering::Greater);
    }

    #[test]
    fn lex_is_significance_first() {
        let a = m(&[(x(1), 1)]);
        let b = m(&[(x(2), 5)]);
        assert_eq!(a.cmp_with(&b, &MonomialOrder::Lex), Ordering::Greater);

        let c = m(&[(x(1), 1), (x(2), 1)]);
        let d = m(&[(x(1), 1), (x(3), 4)]);
        assert_eq!(c.cmp_with(&d, &MonomialOrder::Lex), Ordering::Greater);
    }

    #[test]
    fn block_order_dominates_by_eliminated_part() {
        let s1 = VarIndex::param(1);
        let order = MonomialOrder::block_eliminating([s1]);
        // s1 beats any power of main variables
        let a = m(&[(s1, 1)]);
        let b = m(&[(x(1), 9)]);
        assert_eq!(a.cmp_with(&b, &order), Ordering::Greater);
        // ties on the block fall through to grevlex on the rest
        let c = m(&[(s1, 1), (x(1), 2)]);
        let d = m(&[(s1, 1), (x(2), 1)]);
        assert_eq!(c.cmp_with(&d, &order), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[(x(1), 2), (x(2), 1)]);
        let b = m(&[(x(1), 1)]);
        assert!(b.divides(&a));
        assert_eq!(b.div_into(&a).unwrap(), m(&[(x(1), 1), (x(2), 1)]));
        assert!(a.div_into(&b).is_none());
        assert_eq!(a.lcm(&b), a);
        assert!(m(&[(x(1), 1)]).is_coprime_with(&m(&[(x(2), 3)])));
    }
}
