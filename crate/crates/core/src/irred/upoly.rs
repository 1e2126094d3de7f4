//! Dense univariate polynomials over ℚ (coefficients low → high), with just
//! enough factoring for characteristic polynomials of small matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::Matrix;
use crate::ring::Rational;

pub type UPoly = Vec<Rational>;

// divisor enumeration is skipped for constants beyond this bound
const DIVISOR_LIMIT: u64 = 1 << 40;

pub fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn monic(p: UPoly) -> UPoly {
    let p = trim(p);
    match p.last() {
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
        None => p,
    }
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// `p(A)` by Horner's rule.
pub fn eval_matrix(p: &[Rational], a: &Matrix<Rational>) -> Matrix<Rational> {
    let d = a.rows();
    let id = Matrix::identity_q(d);
    let mut acc = Matrix::zeros(d, d, &Rational::zero());
    for c in p.iter().rev() {
        acc = acc
            .mul(a)
            .expect("square")
            .add(&id.scale(c))
            .expect("square");
    }
    acc
}

pub fn derivative(p: &[Rational]) -> UPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
        .collect()
}

/// Quotient and remainder of `a / b`, `b` nonzero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (UPoly, UPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    let lead = b[db].recip();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] * &lead;
        for (k, c) in b.iter().enumerate().take(db + 1) {
            let idx = dr - db + k;
            r[idx] -= &f * c;
        }
        q[dr - db] = f;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> UPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&y).is_some() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Distinct monic square-free parts `f_1, f_2, …` with `p = c · Π f_i^i`
/// (Yun); empty parts are dropped.
pub fn squarefree_parts(p: &[Rational]) -> Vec<UPoly> {
    let p = monic(p.to_vec());
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let dp = derivative(&p);
    let mut a = gcd(&p, &dp);
    let mut b = divrem(&p, &a).0;
    let mut c = divrem(&dp, &a).0;
    let mut out = Vec::new();
    loop {
        let db = derivative(&b);
        let d: UPoly = c
            .iter()
            .zip(db.iter().chain(std::iter::repeat(&Rational::zero())))
            .map(|(x, y)| x - y)
            .chain(db.iter().skip(c.len()).map(|y| -y))
            .collect();
        a = gcd(&b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            out.push(a.clone());
        }
        b = divrem(&b, &a).0;
        if degree(&b).unwrap_or(0) == 0 {
            break;
        }
        c = divrem(&d, &a).0;
    }
    out
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Distinct rational roots, ascending. `None` when the coefficients are too
/// large for the divisor search.
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let p = trim(p.to_vec());
    let Some(deg) = degree(&p) else {
        return Some(Vec::new());
    };
    let mut roots = Vec::new();
    // strip the root 0
    let low = p.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let p = &p[low..];
    if deg == low {
        return Some(roots);
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let num_divs = divisors(&ints[0])?;
    let den_divs = divisors(ints.last().unwrap())?;
    for q in &den_divs {
        for a in &num_divs {
            for s in [1i64, -1] {
                let x = Rational::new(BigInt::from(*a) * s, BigInt::from(*q));
                if eval(p, &x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Splits a quartic without rational roots into two monic quadratics over
/// ℚ, if possible.
fn split_quartic(f: &[Rational]) -> Option<(UPoly, UPoly)> {
    let f = monic(f.to_vec());
    // y = L·x makes the polynomial monic with integer coefficients; by
    // Gauss's lemma any rational factorisation is then integral
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let g: Vec<BigInt> = (0..4)
        .map(|k| (&f[k] * Rational::from_integer(l.pow(4 - k as u32))).to_integer())
        .collect();
    let (d, c, b, a) = (&g[0], &g[1], &g[2], &g[3]);
    let found = |p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt| {
        &(p + r) == a && &(p * r + q + s) == b && &(p * s + q * r) == c && &(q * s) == d
    };
    for q0 in divisors(d)? {
        for sign in [1i64, -1] {
            let q = BigInt::from(q0) * sign;
            let s = d / &q;
            let pr = if s != q {
                let (num, den) = (c - &q * a, &s - &q);
                if !(&num % &den).is_zero() {
                    continue;
                }
                let p = num / den;
                let r = a - &p;
                (p, r)
            } else {
                let disc = a * a - BigInt::from(4) * (b - BigInt::from(2) * &q);
                if disc.is_negative() {
                    continue;
                }
                let root = disc.sqrt();
                if &root * &root != disc || (a + &root).is_odd() {
                    continue;
                }
                let p = (a + &root) / 2;
                let r = a - &p;
                (p, r)
            };
            let (p, r) = pr;
            if found(&p, &q, &r, &s) {
                let back = |lin: &BigInt, cst: &BigInt| -> UPoly {
                    let l = Rational::from_integer(l.clone());
                    vec![
                        Rational::from_integer(cst.clone()) / (&l * &l),
                        Rational::from_integer(lin.clone()) / l,
                        Rational::one(),
                    ]
                };
                return Some((back(&p, &q), back(&r, &s)));
            }
        }
    }
    None
}

/// Monic factors of `p` over ℚ, each listed once: linear factors from
/// rational roots, then the remaining cofactor of every square-free part.
/// Quartic cofactors are split into quadratics where possible, so every
/// factor of degree ≤ 4 is irreducible; higher-degree cofactors may still
/// split and are returned unsplit.
pub fn factor(p: &[Rational]) -> Vec<UPoly> {
    let mut out = Vec::new();
    for part in squarefree_parts(p) {
        let mut rest = part;
        if let Some(roots) = rational_roots(&rest) {
            for r in roots {
                let lin = vec![-r, Rational::one()];
                rest = divrem(&rest, &lin).0;
                out.push(lin);
            }
        }
        match degree(&rest) {
            Some(4) => match split_quartic(&rest) {
                Some((f, g)) => out.extend([f, g]),
                None => out.push(monic(rest)),
            },
            Some(k) if k > 0 => out.push(monic(rest)),
            _ => {}
        }
    }
    out
}
