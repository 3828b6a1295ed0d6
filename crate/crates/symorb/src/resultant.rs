//! Resultants and polynomial-matrix determinants over the multivariate
//! coefficient ring.
//!
//! The resultant uses the subresultant PRS so intermediate coefficient
//! growth stays polynomial. Exact division of multivariate polynomials is
//! done term by term against the grevlex leading term of the divisor.

use crate::monomial::MonomialOrder;
use crate::poly::Poly;
use crate::var::VarIndex;

/// Coefficient vector of `f` viewed as univariate in `z`, ascending in
/// degree. The zero polynomial gets an empty vector.
pub fn as_univariate_in(f: &Poly, z: VarIndex) -> Vec<Poly> {
    if f.is_zero() {
        return Vec::new();
    }
    let deg = f.degree_in(z);
    let mut coeffs = vec![Poly::zero(); (deg + 1) as usize];
    for (m, c) in f.terms() {
        let e = m.exponent(z) as usize;
        let mut rest = m.clone();
        rest.remove_var(z);
        coeffs[e].add_term(rest, c.clone());
    }
    coeffs
}

fn from_univariate_in(coeffs: &[Poly], z: VarIndex) -> Poly {
    let mut acc = Poly::zero();
    let zp = Poly::var(z);
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &(c * &zp.pow(e as u32));
        }
    }
    acc
}

fn trim(coeffs: &mut Vec<Poly>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// Exact division `num / den`, panicking if `den` does not divide `num`.
/// Callers only use this where divisibility is guaranteed (subresultant
/// theory, cofactor expansion cleanups).
pub fn div_exact(num: &Poly, den: &Poly) -> Poly {
    assert!(!den.is_zero(), "division by zero polynomial");
    let order = MonomialOrder::Grevlex;
    let (dm, dc) = {
        let (m, c) = den.leading_term(&order).unwrap();
        (m.clone(), c.clone())
    };
    let mut rem = num.clone();
    let mut quot = Poly::zero();
    while !rem.is_zero() {
        let (rm, rc) = {
            let (m, c) = rem.leading_term(&order).unwrap();
            (m.clone(), c.clone())
        };
        let t = dm
            .div_into(&rm)
            .expect("exact division: leading term not divisible");
        let coeff = &rc / &dc;
        quot.add_term(t.clone(), coeff.clone());
        rem = &rem - &den.mul_term(&t, &coeff);
    }
    quot
}

/// Pseudo-remainder of `a` by `b` (coefficient vectors, `deg a >= deg b`):
/// prem(a, b) with the exact premultiplication
/// `lc(b)^(deg a - deg b + 1) * a = q*b + r`. When the degree drops faster
/// than one per step the remaining power of `lc(b)` is applied at the end,
/// which the subresultant divisions rely on.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    assert!(!b.is_empty());
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    let mut deficit = (r.len() - 1 - db + 1) as u32;
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        // r := lb*r - lr * z^shift * b
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bc) in b.iter().enumerate() {
            let sub = &lr * bc;
            r[k + shift] = &r[k + shift] - &sub;
        }
        trim(&mut r);
        deficit -= 1;
    }
    if deficit > 0 && !r.is_empty() {
        let scale = pow_poly(lb, deficit);
        for c in r.iter_mut() {
            *c = &*c * &scale;
        }
    }
    r
}

fn pow_poly(base: &Poly, e: u32) -> Poly {
    base.pow(e)
}

/// Resultant of `f` and `g` with respect to `z`, computed by the
/// subresultant polynomial remainder sequence. Conventions:
/// `Res(f, g) = 0` when either is zero (unless the other is a nonzero
/// constant in `z`), and for constant `g = c`, `Res = c^deg(f)`.
pub fn resultant(f: &Poly, g: &Poly, z: VarIndex) -> Poly {
    let fa = as_univariate_in(f, z);
    let ga = as_univariate_in(g, z);
    resultant_vec(&fa, &ga)
}

fn resultant_vec(fa: &[Poly], ga: &[Poly]) -> Poly {
    let mut a = fa.to_vec();
    let mut b = ga.to_vec();
    trim(&mut a);
    trim(&mut b);
    match (a.len(), b.len()) {
        (0, 0) => return Poly::zero(),
        (0, 1) | (1, 0) => return Poly::one(),
        (0, _) | (_, 0) => return Poly::zero(),
        (1, _) => return pow_poly(&a[0], (b.len() - 1) as u32),
        (_, 1) => return pow_poly(&b[0], (a.len() - 1) as u32),
        _ => {}
    }
    if a.len() < b.len() {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let r = resultant_vec(&b, &a);
        return if da % 2 == 1 && db % 2 == 1 { -r } else { r };
    }

    // subresultant PRS (Cohen, "A course in computational algebraic number
    // theory", alg. 3.3.7), tracking the sign from degree parities
    let mut sign_flip = false;
    let mut g_coef = Poly::one();
    let mut h_coef = Poly::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let delta = (da - db) as u32;
        let mut r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return Poly::zero();
        }
        let divisor = &g_coef * &pow_poly(&h_coef, delta);
        for c in r.iter_mut() {
            *c = div_exact(c, &divisor);
        }
        a = b;
        b = r;
        g_coef = a.last().unwrap().clone();
        h_coef = if delta == 0 {
            h_coef
        } else if delta == 1 {
            g_coef.clone()
        } else {
            div_exact(&pow_poly(&g_coef, delta), &pow_poly(&h_coef, delta - 1))
        };
        if b.len() == 1 {
            // h' = h^(1-db') * lb^(db')  with db' = deg(a) now
            let da2 = a.len() - 1;
            let lb = b[0].clone();
            let res = if da2 == 0 {
                // both constants cannot happen: a had degree >= 1
                lb
            } else {
                div_exact(&pow_poly(&lb, da2 as u32), &pow_poly(&h_coef, (da2 - 1) as u32))
            };
            return if sign_flip { -res } else { res };
        }
    }
}

/// The subresultant polynomial remainder sequence of `f` and `g` with
/// respect to `z`, higher degree first. The last entry is (an associate
/// of) their gcd in `Q(other vars)[z]`, up to a content in the other
/// variables. Empty only when both inputs are zero.
pub fn subresultant_prs(f: &Poly, g: &Poly, z: VarIndex) -> Vec<Poly> {
    let mut a = as_univariate_in(f, z);
    let mut b = as_univariate_in(g, z);
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut out = Vec::new();
    if a.is_empty() {
        return out;
    }
    out.push(from_univariate_in(&a, z));
    if b.is_empty() {
        return out;
    }
    out.push(from_univariate_in(&b, z));
    let mut g_coef = Poly::one();
    let mut h_coef = Poly::one();
    while b.len() > 1 {
        let delta = (a.len() - b.len()) as u32;
        let mut r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        let divisor = &g_coef * &pow_poly(&h_coef, delta);
        for c in r.iter_mut() {
            *c = div_exact(c, &divisor);
        }
        out.push(from_univariate_in(&r, z));
        a = b;
        b = r;
        g_coef = a.last().unwrap().clone();
        h_coef = if delta == 0 {
            h_coef
        } else if delta == 1 {
            g_coef.clone()
        } else {
            div_exact(&pow_poly(&g_coef, delta), &pow_poly(&h_coef, delta - 1))
        };
    }
    out
}

/// Determinant of a square matrix of polynomials by cofactor expansion
/// along the first row. Fine for the small minors this crate builds.
pub fn det_poly_matrix(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero();
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let cof = &*entry * &det_poly_matrix(&minor);
                acc = if j % 2 == 0 { &acc + &cof } else { &acc - &cof };
            }
            acc
        }
    }
}

/// Discriminant-flavored helper: resultant of `f` and its derivative in `z`.
pub fn res_with_derivative(f: &Poly, z: VarIndex) -> Poly {
    resultant(f, &derivative(f, z), z)
}

/// Formal partial derivative with respect to `z`.
pub fn derivative(f: &Poly, z: VarIndex) -> Poly {
    let coeffs = as_univariate_in(f, z);
    if coeffs.len() <= 1 {
        return Poly::zero();
    }
    let derived: Vec<Poly> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(e, c)| c.scale(&crate::rat_int(e as i64)))
        .collect();
    from_univariate_in(&derived, z)
}
