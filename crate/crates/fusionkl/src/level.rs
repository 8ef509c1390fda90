//! Admissible-level arithmetic.
//!
//! A level is a pair of coprime integers `(p, q)` with `p >= 2`, `q >= 1`,
//! encoding `k = -2 + p/q` with shifted level `kappa = p/q`. All structural
//! results used elsewhere in the crate assume `p >= 2`; the semisimple
//! `p = 1` family is rejected outright.

use num::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LevelError {
    #[error("p = {0} is not supported: p must be at least 2")]
    UnsupportedP(i64),
    #[error("q = {0} is invalid: q must be at least 1")]
    InvalidQ(i64),
    #[error("p = {0} and q = {1} are not coprime (gcd = {2})")]
    NonCoprime(i64, i64, i64),
    #[error("index r = {0} is out of range: r must be at least 1")]
    IndexOutOfRange(i64),
}

/// A validated admissible-level parameter pair `(p, q)`.
///
/// Invariants: `p >= 2`, `q >= 1`, `gcd(p, q) = 1`. The shifted level is
/// `kappa = p/q` and the level itself is `k = -2 + p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Level {
    p: u32,
    q: u32,
}

impl<'de> Deserialize<'de> for Level {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Level, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            p: i64,
            q: i64,
        }
        let raw = Raw::deserialize(d)?;
        make_level(raw.p, raw.q).map_err(serde::de::Error::custom)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Validates and constructs a level from raw integers.
pub fn make_level(p: i64, q: i64) -> Result<Level, LevelError> {
    if p < 2 {
        return Err(LevelError::UnsupportedP(p));
    }
    if q < 1 {
        return Err(LevelError::InvalidQ(q));
    }
    let g = gcd(p as u64, q as u64);
    if g != 1 {
        return Err(LevelError::NonCoprime(p, q, g as i64));
    }
    Ok(Level {
        p: p as u32,
        q: q as u32,
    })
}

impl Level {
    pub fn new(p: i64, q: i64) -> Result<Level, LevelError> {
        make_level(p, q)
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Order of the root of unity generating the scalar field, `4p`.
    pub fn root_order(&self) -> u64 {
        4 * self.p as u64
    }

    /// Decomposes `r >= 1` as `n*p + s` with `0 <= s < p`.
    pub fn split_index(&self, r: u64) -> (u64, u64) {
        (r / self.p(), r % self.p())
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Lowest conformal weight `h_r = q(r^2 - 1)/(4p)` of the generalized Verma
/// module with `r`-dimensional top.
pub fn conformal_weight(lv: Level, r: i64) -> Result<BigRational, LevelError> {
    if r < 1 {
        return Err(LevelError::IndexOutOfRange(r));
    }
    let num = num::BigInt::from(lv.q()) * num::BigInt::from(r * r - 1);
    let den = num::BigInt::from(4 * lv.p());
    Ok(BigRational::new(num, den))
}

/// Element of Z/2Z, the parity grading by sl2-weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_weight(w: u64) -> Parity {
        if w % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Parity of an sl2 highest weight (`r - 1` for affine labels of index `r`,
/// `lambda` for quantum labels).
pub fn parity(top_weight: i64) -> Result<Parity, LevelError> {
    if top_weight < 0 {
        return Err(LevelError::IndexOutOfRange(top_weight));
    }
    Ok(Parity::from_weight(top_weight as u64))
}

/// The 3-cocycle sign `(-1)^{i1*i2*i3}` on Z/2Z: `-1` exactly when all three
/// parities are odd.
pub fn cocycle_sign(i1: Parity, i2: Parity, i3: Parity) -> i8 {
    if i1 == Parity::Odd && i2 == Parity::Odd && i3 == Parity::Odd {
        -1
    } else {
        1
    }
}

/// The four braiding flavors: the standard braiding, its sign twist on the
/// odd-odd sector, the reverse braiding, and the sign twist of the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Standard,
    Twisted,
    Reverse,
    TwistedReverse,
}

/// Sign choice for the ribbon twist compatible with a given braiding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwistSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// One of the eight braided ribbon structures (4 flavors x 2 twist signs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidingVariant {
    pub flavor: Flavor,
    pub sign: TwistSign,
}

impl BraidingVariant {
    pub const STANDARD: BraidingVariant = BraidingVariant {
        flavor: Flavor::Standard,
        sign: TwistSign::Plus,
    };

    pub fn new(flavor: Flavor, sign: TwistSign) -> Self {
        BraidingVariant { flavor, sign }
    }

    /// All eight variants, in a fixed order.
    pub fn all() -> [BraidingVariant; 8] {
        use Flavor::*;
        use TwistSign::*;
        let mut out = [BraidingVariant::STANDARD; 8];
        let mut i = 0;
        for fl in [Standard, Twisted, Reverse, TwistedReverse] {
            for sg in [Plus, Minus] {
                out[i] = BraidingVariant::new(fl, sg);
                i += 1;
            }
        }
        out
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::Standard => "standard",
            Flavor::Twisted => "twisted",
            Flavor::Reverse => "reverse",
            Flavor::TwistedReverse => "twisted-reverse",
        };
        write!(f, "{s}")
    }
}

impl fmt::Display for TwistSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistSign::Plus => write!(f, "+"),
            TwistSign::Minus => write!(f, "-"),
        }
    }
}

/// The unique representation `q' = sign*q + 2np` with `1 <= q <= p-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelRepresentation {
    pub canonical_q: u64,
    pub n: u64,
    pub positive: bool,
}

/// Finds the unique `(q, n, sign)` with `q' = +q + 2np` (`n >= 0`) or
/// `q' = -q + 2np` (`n >= 1`), `1 <= q <= p-1`, by exhaustive search.
pub fn level_representation(p: u64, q_prime: u64) -> LevelRepresentation {
    let bound = (q_prime + p) / (2 * p) + 1;
    let mut found = None;
    for n in 0..=bound {
        let base = 2 * n * p;
        if q_prime >= base {
            let rest = q_prime - base;
            if (1..=p - 1).contains(&rest) {
                assert!(found.is_none(), "level representation is not unique");
                found = Some(LevelRepresentation {
                    canonical_q: rest,
                    n,
                    positive: true,
                });
            }
        }
        if n >= 1 && base > q_prime {
            let rest = base - q_prime;
            if (1..=p - 1).contains(&rest) {
                assert!(found.is_none(), "level representation is not unique");
                found = Some(LevelRepresentation {
                    canonical_q: rest,
                    n,
                    positive: false,
                });
            }
        }
    }
    found.expect("every coprime q' has a representation +-q + 2np")
}

/// Reduces `(p, q')` to the canonical level with `1 <= q <= p-1` and reports
/// which braided ribbon structure on the canonical level the standard
/// structure of `(p, q')` is equivalent to.
///
/// Writing `q' = +q + 2np`, even `n` gives the standard structure and odd
/// `n` the sign-twisted braiding with the minus twist; `q' = -q + 2np` gives
/// the reverse counterparts.
pub fn classify_level(p: i64, q_prime: i64) -> Result<(Level, BraidingVariant), LevelError> {
    let raw = make_level(p, q_prime)?;
    let rep = level_representation(raw.p(), raw.q());
    let canonical = make_level(p, rep.canonical_q as i64)?;
    let variant = match (rep.positive, rep.n % 2 == 0) {
        (true, true) => BraidingVariant::new(Flavor::Standard, TwistSign::Plus),
        (true, false) => BraidingVariant::new(Flavor::Twisted, TwistSign::Minus),
        (false, true) => BraidingVariant::new(Flavor::Reverse, TwistSign::Plus),
        (false, false) => BraidingVariant::new(Flavor::TwistedReverse, TwistSign::Minus),
    };
    Ok((canonical, variant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn make_level_validates() {
        assert_eq!(make_level(3, 1).unwrap(), Level { p: 3, q: 1 });
        assert_eq!(make_level(4, 2), Err(LevelError::NonCoprime(4, 2, 2)));
        assert_eq!(make_level(1, 3), Err(LevelError::UnsupportedP(1)));
        assert_eq!(make_level(2, 0), Err(LevelError::InvalidQ(0)));
        assert_eq!(make_level(-3, 1), Err(LevelError::UnsupportedP(-3)));
    }

    #[test]
    fn conformal_weights() {
        let lv = make_level(3, 1).unwrap();
        assert_eq!(conformal_weight(lv, 2).unwrap(), rat(1, 4));
        assert_eq!(conformal_weight(lv, 1).unwrap(), rat(0, 1));
        let lv2 = make_level(2, 1).unwrap();
        assert_eq!(conformal_weight(lv2, 4).unwrap(), rat(15, 8));
        assert!(conformal_weight(lv, 0).is_err());
    }

    #[test]
    fn weight_differences_have_denominator_dividing_4p() {
        for (p, q) in [(2i64, 1i64), (3, 1), (3, 2), (5, 2), (7, 3)] {
            let lv = make_level(p, q).unwrap();
            for r in 1..=30 {
                for s in 1..=30 {
                    let d = conformal_weight(lv, r).unwrap() - conformal_weight(lv, s).unwrap();
                    let four_p = BigInt::from(4 * p);
                    // denominator of the reduced difference divides 4p
                    assert_eq!((&four_p % d.denom()), BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn parity_and_cocycle() {
        assert_eq!(parity(0).unwrap(), Parity::Even);
        assert_eq!(parity(1).unwrap(), Parity::Odd);
        assert_eq!(parity(6).unwrap(), Parity::Even);
        assert!(parity(-1).is_err());
        use Parity::*;
        assert_eq!(cocycle_sign(Odd, Odd, Odd), -1);
        assert_eq!(cocycle_sign(Even, Odd, Odd), 1);
        assert_eq!(cocycle_sign(Even, Even, Even), 1);
    }

    #[test]
    fn classify_examples() {
        let (lv, v) = classify_level(3, 7).unwrap();
        assert_eq!((lv.p(), lv.q()), (3, 1));
        assert_eq!(v, BraidingVariant::new(Flavor::Twisted, TwistSign::Minus));

        let (lv, v) = classify_level(3, 2).unwrap();
        assert_eq!((lv.p(), lv.q()), (3, 2));
        assert_eq!(v, BraidingVariant::STANDARD);

        // 8 = -2 + 2*1*5 is the unique representation (sign -, n = 1 odd).
        let (lv, v) = classify_level(5, 8).unwrap();
        assert_eq!((lv.p(), lv.q()), (5, 2));
        assert_eq!(
            v,
            BraidingVariant::new(Flavor::TwistedReverse, TwistSign::Minus)
        );
    }

    #[test]
    fn classify_is_idempotent() {
        for (p, q) in [(3i64, 7i64), (5, 8), (3, 2), (7, 45), (5, 13)] {
            let (lv, _) = classify_level(p, q).unwrap();
            let (lv2, v2) = classify_level(lv.p() as i64, lv.q() as i64).unwrap();
            assert_eq!(lv, lv2);
            assert_eq!(v2, BraidingVariant::STANDARD);
        }
    }

    #[test]
    fn representation_unique_by_brute_force() {
        for p in 2u64..=12 {
            for qp in 1u64..=200 {
                if gcd(p, qp) != 1 {
                    continue;
                }
                // count representations directly
                let mut count = 0;
                for n in 0..=((qp + p) / (2 * p) + 1) {
                    for sign in [1i64, -1] {
                        if sign < 0 && n == 0 {
                            continue;
                        }
                        let v = sign * qp as i64 + 2 * n as i64 * p as i64;
                        let q = if sign > 0 {
                            qp as i64 - 2 * n as i64 * p as i64
                        } else {
                            2 * n as i64 * p as i64 - qp as i64
                        };
                        let _ = v;
                        if q >= 1 && q <= p as i64 - 1 {
                            count += 1;
                        }
                    }
                }
                assert_eq!(count, 1, "p={p} q'={qp}");
                // and level_representation finds it without panicking
                let rep = level_representation(p, qp);
                let reconstructed = if rep.positive {
                    rep.canonical_q as i64 + 2 * rep.n as i64 * p as i64
                } else {
                    -(rep.canonical_q as i64) + 2 * rep.n as i64 * p as i64
                };
                assert_eq!(reconstructed, qp as i64);
            }
        }
    }
}
