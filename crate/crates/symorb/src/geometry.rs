//! Rational line arrangements in the plane and an exact test for whether
//! the open region they carve out reaches past the closed unit disk.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn rat_i(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Finitely many open half-planes `a*x_i + b*y_i + z_i > 0`; the region is
/// their intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    pub lines: Vec<(BigRational, BigRational, BigRational)>,
}

impl LineArrangement {
    pub fn new(lines: Vec<(BigRational, BigRational, BigRational)>) -> Self {
        LineArrangement { lines }
    }

    /// The same arrangement with line `j` removed.
    pub fn without_line(&self, j: usize) -> Self {
        let mut lines = self.lines.clone();
        lines.remove(j);
        LineArrangement { lines }
    }
}

/// A convex polygon inscribed in the unit circle, as the arrangement of
/// its edge lines oriented inward. Vertices sit exactly on the circle via
/// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)) over an even rational grid in
/// [-2, 2]; that range spans more than a half-circle of angles, so the
/// origin is interior and every z_i comes out strictly positive, which the
/// constructor asserts rather than assumes.
pub fn ngon_instance(n: u32) -> LineArrangement {
    assert!(n >= 3, "a polygon needs at least 3 edges");
    let vertices: Vec<(BigRational, BigRational)> = (0..n)
        .map(|j| {
            // t_j = -2 + 4j/(n-1), ascending means ascending in angle
            let t = rat_i(-2) + rat_i(4) * rat_i(j as i64) / rat_i(n as i64 - 1);
            let t2 = &t * &t;
            let den = rat_i(1) + &t2;
            let x = (rat_i(1) - &t2) / &den;
            let y = (rat_i(2) * &t) / &den;
            assert!((&x * &x + &y * &y).is_one(), "vertex off the unit circle");
            (x, y)
        })
        .collect();
    let lines = (0..n as usize)
        .map(|j| {
            let p = &vertices[j];
            let q = &vertices[(j + 1) % n as usize];
            let (dx, dy) = (&q.0 - &p.0, &q.1 - &p.1);
            let (mut nx, mut ny) = (dy, -dx);
            let mut z = -(&nx * &p.0 + &ny * &p.1);
            if z.is_negative() {
                nx = -nx;
                ny = -ny;
                z = -z;
            }
            assert!(z.is_positive(), "origin must lie strictly inside");
            for v in &vertices {
                assert!(
                    !(&nx * &v.0 + &ny * &v.1 + &z).is_negative(),
                    "edge line must support the polygon"
                );
            }
            (nx, ny, z)
        })
        .collect();
    LineArrangement { lines }
}

/// Fourier-Motzkin elimination of one variable from strict constraints
/// `alpha*u + beta*v + gamma > 0`, eliminating `u`. Exact for strict
/// systems over the reals.
fn eliminate_first(cons: &[(BigRational, BigRational, BigRational)]) -> Vec<(BigRational, BigRational)> {
    let mut lowers = Vec::new();
    let mut uppers = Vec::new();
    let mut out = Vec::new();
    for (alpha, beta, gamma) in cons {
        if alpha.is_zero() {
            out.push((beta.clone(), gamma.clone()));
        } else if alpha.is_positive() {
            lowers.push((alpha, beta, gamma));
        } else {
            uppers.push((alpha, beta, gamma));
        }
    }
    for (al, bl, gl) in &lowers {
        for (au, bu, gu) in &uppers {
            // positive combination al*(upper) - au*(lower) drops u
            out.push((*al * *bu - *au * *bl, *al * *gu - *au * *gl));
        }
    }
    out
}

fn strictly_feasible(cons: &[(BigRational, BigRational, BigRational)]) -> bool {
    let in_b = eliminate_first(cons);
    let lifted: Vec<(BigRational, BigRational, BigRational)> = in_b
        .into_iter()
        .map(|(beta, gamma)| (beta, BigRational::zero(), gamma))
        .collect();
    eliminate_first(&lifted)
        .into_iter()
        .all(|(_, gamma)| gamma.is_positive())
}

/// A nonempty open region is unbounded exactly when the closure's
/// recession cone `{d : n_i . d >= 0}` is nonzero; in the plane a nonzero
/// cone always has a boundary ray orthogonal to some normal, so the
/// rotations of the normals are a complete candidate set.
fn is_unbounded(cons: &[(BigRational, BigRational, BigRational)]) -> bool {
    for (x, y, _) in cons {
        for d in [(-y.clone(), x.clone()), (y.clone(), -x.clone())] {
            if cons.iter().all(|(u, v, _)| !(u * &d.0 + v * &d.1).is_negative()) {
                return true;
            }
        }
    }
    false
}

/// Vertices of the closure polygon: pairwise line intersections that
/// satisfy every closed constraint.
fn closure_vertices(
    cons: &[(BigRational, BigRational, BigRational)],
) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    for i in 0..cons.len() {
        for j in i + 1..cons.len() {
            let (xi, yi, zi) = &cons[i];
            let (xj, yj, zj) = &cons[j];
            let det = xi * yj - yi * xj;
            if det.is_zero() {
                continue;
            }
            let a = (yi * zj - yj * zi) / &det;
            let b = (xj * zi - xi * zj) / &det;
            if cons.iter().all(|(u, v, w)| !(u * &a + v * &b + w).is_negative()) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether the open region contains a point outside the closed unit disk.
/// Empty region: no. Unbounded: yes. Bounded: the squared norm is convex,
/// so its maximum over the closure sits at a vertex, and a vertex strictly
/// outside pulls nearby interior points outside with it.
pub fn region_escapes_disk(arr: &LineArrangement) -> bool {
    let mut cons = Vec::new();
    for (x, y, z) in &arr.lines {
        if x.is_zero() && y.is_zero() {
            if !z.is_positive() {
                return false;
            }
        } else {
            cons.push((x.clone(), y.clone(), z.clone()));
        }
    }
    if cons.is_empty() {
        return true;
    }
    if !strictly_feasible(&cons) {
        return false;
    }
    if is_unbounded(&cons) {
        return true;
    }
    let one = BigRational::one();
    closure_vertices(&cons)
        .into_iter()
        .any(|(a, b)| &a * &a + &b * &b > one)
}
