//! Exact arithmetic in the cyclotomic field `Q(zeta_{4p})` with
//! `zeta_{4p} = exp(pi*i/(2p))`.
//!
//! Elements are residues modulo the `4p`-th cyclotomic polynomial with
//! rational coefficients, so equality testing is canonical and exact. The
//! field houses every scalar used by the categorical computations:
//! `zeta = zeta_{4p}^{2q}`, the braiding coefficient `A = zeta_{4p}^q`,
//! twist scalars `exp(2*pi*i*h_r)`, the loop value
//! `delta = -zeta - zeta^{-1}`, and the quantum integers `[n]`.

use crate::level::Level;
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("operands live over different levels: {0} vs {1}")]
    MixedLevels(Level, Level),
    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,
}

/// The `n`-th cyclotomic polynomial as integer coefficients, constant term
/// first, computed by exact division of `x^n - 1` by all `Phi_d` with
/// `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of integer polynomials; the divisor is monic and the
/// division leaves no remainder for the cyclotomic recursion.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem: Vec<BigInt> = num.to_vec();
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        quot[k] = c.clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            while n % f == 0 {
                n /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact element of `Q(zeta_{4p})`, stored in reduced canonical form of
/// degree `< phi(4p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycNumber {
    level: Level,
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl CycNumber {
    pub fn zero(lv: Level) -> CycNumber {
        let deg = euler_phi(lv.root_order()) as usize;
        CycNumber {
            level: lv,
            coeffs: vec![BigRational::zero(); deg],
        }
    }

    pub fn one(lv: Level) -> CycNumber {
        let mut x = CycNumber::zero(lv);
        x.coeffs[0] = BigRational::one();
        x
    }

    pub fn from_rational(lv: Level, value: BigRational) -> CycNumber {
        let mut x = CycNumber::zero(lv);
        x.coeffs[0] = value;
        x
    }

    pub fn from_integer(lv: Level, value: i64) -> CycNumber {
        CycNumber::from_rational(lv, rat(value))
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Builds an element from arbitrary-degree coefficients, reducing
    /// modulo the `4p`-th cyclotomic polynomial.
    pub fn from_poly(lv: Level, poly: &[BigRational]) -> CycNumber {
        let phi = cyclotomic_polynomial(lv.root_order());
        let deg = phi.len() - 1;
        let mut rem: Vec<BigRational> = poly.to_vec();
        if rem.len() < deg {
            rem.resize(deg, BigRational::zero());
        }
        // reduce modulo the monic polynomial phi
        for k in (deg..rem.len()).rev() {
            let c = rem[k].clone();
            if !c.is_zero() {
                rem[k] = BigRational::zero();
                for (i, d) in phi.iter().enumerate().take(deg) {
                    let shift = k - deg + i;
                    let sub = &c * BigRational::from(d.clone());
                    rem[shift] -= sub;
                }
            }
        }
        rem.truncate(deg);
        CycNumber {
            level: lv,
            coeffs: rem,
        }
    }
}

fn check_levels(a: &CycNumber, b: &CycNumber) -> Result<(), CycError> {
    if a.level != b.level {
        return Err(CycError::MixedLevels(a.level, b.level));
    }
    Ok(())
}

/// `zeta_{4p}^exponent` as a canonical field element; exponents may be
/// negative and are reduced modulo `4p`.
pub fn cyc_root(lv: Level, exponent: i64) -> CycNumber {
    let order = lv.root_order() as i64;
    let e = exponent.rem_euclid(order) as usize;
    let mut poly = vec![BigRational::zero(); e + 1];
    poly[e] = BigRational::one();
    CycNumber::from_poly(lv, &poly)
}

/// The distinguished root `zeta = exp(pi*i*q/p) = zeta_{4p}^{2q}`.
pub fn zeta(lv: Level) -> CycNumber {
    cyc_root(lv, 2 * lv.q() as i64)
}

/// The braiding coefficient `A = exp(pi*i*q/(2p)) = zeta_{4p}^q`.
pub fn braiding_root(lv: Level) -> CycNumber {
    cyc_root(lv, lv.q() as i64)
}

/// The loop value `delta = -zeta - zeta^{-1} = -2cos(pi*q/p)`.
pub fn delta(lv: Level) -> CycNumber {
    let q = lv.q() as i64;
    cyc_neg(&cyc_add(&cyc_root(lv, 2 * q), &cyc_root(lv, -2 * q)).unwrap())
}

pub fn cyc_add(a: &CycNumber, b: &CycNumber) -> Result<CycNumber, CycError> {
    check_levels(a, b)?;
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| x + y)
        .collect();
    Ok(CycNumber {
        level: a.level,
        coeffs,
    })
}

pub fn cyc_sub(a: &CycNumber, b: &CycNumber) -> Result<CycNumber, CycError> {
    cyc_add(a, &cyc_neg(b))
}

pub fn cyc_neg(a: &CycNumber) -> CycNumber {
    CycNumber {
        level: a.level,
        coeffs: a.coeffs.iter().map(|c| -c).collect(),
    }
}

pub fn cyc_mul(a: &CycNumber, b: &CycNumber) -> Result<CycNumber, CycError> {
    check_levels(a, b)?;
    let mut prod = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            prod[i + j] += x * y;
        }
    }
    Ok(CycNumber::from_poly(a.level, &prod))
}

pub fn cyc_scale(a: &CycNumber, s: &BigRational) -> CycNumber {
    CycNumber {
        level: a.level,
        coeffs: a.coeffs.iter().map(|c| c * s).collect(),
    }
}

/// The involutive automorphism sending `zeta_{4p}` to its inverse
/// (complex conjugation on the standard embedding).
pub fn cyc_conjugate(a: &CycNumber) -> CycNumber {
    let order = a.level.root_order() as usize;
    let mut poly = vec![BigRational::zero(); order];
    for (i, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            poly[(order - i) % order] += c;
        }
    }
    CycNumber::from_poly(a.level, &poly)
}

/// Multiplicative inverse via the extended Euclidean algorithm against the
/// (irreducible) modulus.
pub fn cyc_inverse(a: &CycNumber) -> Result<CycNumber, CycError> {
    if a.is_zero() {
        return Err(CycError::DivisionByZero);
    }
    let phi: Vec<BigRational> = cyclotomic_polynomial(a.level.root_order())
        .into_iter()
        .map(BigRational::from)
        .collect();
    // extended gcd over Q[x]: s*a + t*phi = gcd = const
    let mut r0 = phi;
    let mut r1 = a.coeffs.clone();
    trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1 = vec![BigRational::one()];
    while poly_degree(&r1) > 0 {
        let (q, rem) = poly_divmod(&r0, &r1);
        let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_next;
        if r1.is_empty() {
            // gcd landed on a polynomial of positive degree: impossible for
            // an irreducible modulus, so this indicates a zero input
            return Err(CycError::DivisionByZero);
        }
    }
    let c = r1[0].clone();
    let inv: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
    Ok(CycNumber::from_poly(a.level, &inv))
}

pub fn cyc_div(a: &CycNumber, b: &CycNumber) -> Result<CycNumber, CycError> {
    check_levels(a, b)?;
    cyc_mul(a, &cyc_inverse(b)?)
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_degree(p: &[BigRational]) -> isize {
    p.len() as isize - 1
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = poly_degree(den);
    assert!(dd >= 0);
    if poly_degree(&rem) < dd {
        return (vec![], rem);
    }
    let qn = (poly_degree(&rem) - dd) as usize;
    let lead = den.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); qn + 1];
    for k in (0..=qn).rev() {
        if rem.len() < k + dd as usize + 1 {
            continue;
        }
        let c = &rem[k + dd as usize] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let sub = &c * d;
            rem[k + i] -= sub;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// The quantum integer `[n] = (zeta^n - zeta^{-n})/(zeta - zeta^{-1})`,
/// computed as the balanced power sum `zeta^{n-1} + zeta^{n-3} + ... +
/// zeta^{1-n}`; it vanishes exactly when `p | n`, and `[-n] = -[n]`.
pub fn quantum_int(lv: Level, n: i64) -> CycNumber {
    if n == 0 {
        return CycNumber::zero(lv);
    }
    if n < 0 {
        return cyc_neg(&quantum_int(lv, -n));
    }
    let q = lv.q() as i64;
    let mut acc = CycNumber::zero(lv);
    let mut e = n - 1;
    while e >= 1 - n {
        acc = cyc_add(&acc, &cyc_root(lv, 2 * q * e)).unwrap();
        e -= 2;
    }
    acc
}

/// Numerical evaluation at `zeta_{4p} = exp(pi*i/(2p))`; relative error is
/// far below `1e-12` for the coefficient sizes produced here.
pub fn to_complex(a: &CycNumber) -> Complex64 {
    let theta = std::f64::consts::PI / (2.0 * a.level.p() as f64);
    let root = Complex64::new(theta.cos(), theta.sin());
    let mut acc = Complex64::new(0.0, 0.0);
    for c in a.coeffs.iter().rev() {
        acc = acc * root + Complex64::new(rational_to_f64(c), 0.0);
    }
    acc
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl fmt::Display for CycNumber {
    /// Renders as a polynomial in `z = zeta_{4p}`, e.g. `1/2*z^3 - z + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_unit_coeff = mag.is_one();
            match (i, is_unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::make_level;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials_match_classical_values() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(20), ints(&[1, 0, -1, 0, 1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_reduce_canonically() {
        let lv = make_level(2, 1).unwrap();
        assert_eq!(cyc_root(lv, 0), CycNumber::one(lv));
        // zeta_8^4 = -1
        assert_eq!(cyc_root(lv, 4), CycNumber::from_integer(lv, -1));
        // full turn
        assert_eq!(cyc_root(lv, 8), CycNumber::one(lv));
        assert_eq!(cyc_root(lv, -4), CycNumber::from_integer(lv, -1));
    }

    #[test]
    fn zeta_plus_conjugate_is_twice_cosine() {
        // at (3,1): zeta + conj(zeta) = 2cos(pi/3) = 1
        let lv = make_level(3, 1).unwrap();
        let z = zeta(lv);
        let s = cyc_add(&z, &cyc_conjugate(&z)).unwrap();
        assert_eq!(s, CycNumber::one(lv));
    }

    #[test]
    fn conjugate_is_involutive_automorphism() {
        let lv = make_level(5, 2).unwrap();
        let a = cyc_add(&cyc_root(lv, 3), &cyc_scale(&cyc_root(lv, 7), &rat(5))).unwrap();
        let b = cyc_sub(&cyc_root(lv, 11), &CycNumber::from_integer(lv, 2)).unwrap();
        assert_eq!(cyc_conjugate(&cyc_conjugate(&a)), a);
        assert_eq!(
            cyc_conjugate(&cyc_mul(&a, &b).unwrap()),
            cyc_mul(&cyc_conjugate(&a), &cyc_conjugate(&b)).unwrap()
        );
        // multiplicative identity
        assert_eq!(cyc_mul(&a, &CycNumber::one(lv)).unwrap(), a);
    }

    #[test]
    fn mixed_levels_rejected() {
        let a = CycNumber::one(make_level(3, 1).unwrap());
        let b = CycNumber::one(make_level(5, 1).unwrap());
        assert!(matches!(cyc_add(&a, &b), Err(CycError::MixedLevels(_, _))));
    }

    #[test]
    fn field_inverse() {
        let lv = make_level(5, 2).unwrap();
        for e in [1i64, 3, 7, 9] {
            let a = cyc_add(&cyc_root(lv, e), &CycNumber::from_integer(lv, 3)).unwrap();
            let inv = cyc_inverse(&a).unwrap();
            assert_eq!(cyc_mul(&a, &inv).unwrap(), CycNumber::one(lv));
        }
        assert_eq!(
            cyc_inverse(&CycNumber::zero(lv)),
            Err(CycError::DivisionByZero)
        );
    }

    #[test]
    fn quantum_integers() {
        let lv = make_level(3, 1).unwrap();
        assert_eq!(quantum_int(lv, 1), CycNumber::one(lv));
        let z = zeta(lv);
        let two = cyc_add(&z, &cyc_conjugate(&z)).unwrap();
        assert_eq!(quantum_int(lv, 2), two);
        assert!(quantum_int(lv, 3).is_zero());
        assert_eq!(quantum_int(lv, -2), cyc_neg(&quantum_int(lv, 2)));
    }

    #[test]
    fn quantum_int_recursion_and_vanishing() {
        for (p, q) in [(2i64, 1i64), (3, 2), (5, 2), (7, 3)] {
            let lv = make_level(p, q).unwrap();
            let two = quantum_int(lv, 2);
            for n in 1..=(4 * p) {
                let lhs = quantum_int(lv, n + 1);
                let rhs = cyc_sub(
                    &cyc_mul(&two, &quantum_int(lv, n)).unwrap(),
                    &quantum_int(lv, n - 1),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "recursion at n={n}, (p,q)=({p},{q})");
            }
            for n in 1..=(10 * p) {
                assert_eq!(quantum_int(lv, n).is_zero(), n % p == 0);
            }
        }
    }

    #[test]
    fn numeric_evaluation() {
        let lv2 = make_level(2, 1).unwrap();
        let one = to_complex(&CycNumber::one(lv2));
        assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // delta vanishes at p = 2
        assert!(to_complex(&delta(lv2)).norm() < 1e-12);
        assert!(delta(lv2).is_zero());
        // delta = -2cos(pi/3) = -1 at (3,1)
        let lv3 = make_level(3, 1).unwrap();
        assert!((to_complex(&delta(lv3)) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert_eq!(delta(lv3), CycNumber::from_integer(lv3, -1));
        // delta = -2cos(2pi/5) at (5,2)
        let lv5 = make_level(5, 2).unwrap();
        let expect = -2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((to_complex(&delta(lv5)) - Complex64::new(expect, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn to_complex_is_ring_homomorphism() {
        let lv = make_level(5, 3).unwrap();
        let a = cyc_add(&cyc_root(lv, 7), &cyc_scale(&cyc_root(lv, 2), &rat(3))).unwrap();
        let b = cyc_sub(&cyc_root(lv, 13), &cyc_root(lv, 5)).unwrap();
        let lhs = to_complex(&cyc_mul(&a, &b).unwrap());
        let rhs = to_complex(&a) * to_complex(&b);
        assert!((lhs - rhs).norm() < 1e-10);
        let lhs = to_complex(&cyc_add(&a, &b).unwrap());
        let rhs = to_complex(&a) + to_complex(&b);
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn distributivity_on_random_triples() {
        let lv = make_level(7, 2).unwrap();
        let mut vals = vec![];
        for e in 0..6 {
            vals.push(cyc_add(&cyc_root(lv, 5 * e + 1), &CycNumber::from_integer(lv, e - 2)).unwrap());
        }
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    let lhs = cyc_mul(&cyc_add(a, b).unwrap(), c).unwrap();
                    let rhs = cyc_add(&cyc_mul(a, c).unwrap(), &cyc_mul(b, c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn display_forms() {
        let lv = make_level(2, 1).unwrap();
        assert_eq!(CycNumber::zero(lv).to_string(), "0");
        assert_eq!(CycNumber::one(lv).to_string(), "1");
        assert_eq!(cyc_neg(&cyc_root(lv, 3)).to_string(), "-z^3");
        let x = cyc_sub(
            &cyc_scale(&cyc_root(lv, 2), &BigRational::new(BigInt::from(1), BigInt::from(2))),
            &CycNumber::one(lv),
        )
        .unwrap();
        assert_eq!(x.to_string(), "1/2*z^2 - 1");
    }
}
