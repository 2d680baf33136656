//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Rationals keep a machine-word fast path and promote to arbitrary
//! precision only on overflow, which keeps the Groebner inner loops free
//! of allocation for the common small coefficients.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::AlgError;

/// An exact rational: reduced, positive denominator. `Big` is only used
/// when the value does not fit the small form, so representations are
/// canonical and derived equality is sound.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Rational {
    Small { n: i64, d: u64 },
    Big(Box<BigRational>),
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn zero() -> Rational {
        Rational::Small { n: 0, d: 1 }
    }

    pub fn one() -> Rational {
        Rational::Small { n: 1, d: 1 }
    }

    fn small_reduced(n: i128, d: i128) -> Option<Rational> {
        debug_assert!(d != 0);
        let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
        let gg = {
            let mut a = n.unsigned_abs();
            let mut b = d.unsigned_abs();
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a.max(1)
        };
        let (n, d) = (n / gg as i128, d / gg as i128);
        if n >= i64::MIN as i128 && n <= i64::MAX as i128 && d <= u64::MAX as i128 {
            Some(Rational::Small {
                n: n as i64,
                d: d as u64,
            })
        } else {
            None
        }
    }

    fn from_i128_pair(n: i128, d: i128) -> Rational {
        match Rational::small_reduced(n, d) {
            Some(r) => r,
            None => Rational::normalize_big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn normalize_big(b: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_u64()) {
            Rational::Small { n, d }
        } else {
            Rational::Big(Box::new(b))
        }
    }

    pub fn from_i64(n: i64) -> Rational {
        Rational::Small { n, d: 1 }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { n, d } => {
                BigRational::new(BigInt::from(*n), BigInt::from(*d))
            }
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { n: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { n: 1, d: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small { n, .. } => *n < 0,
            Rational::Big(b) => b.numer().is_negative(),
        }
    }

    pub fn add(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small { n: a, d: b }, Rational::Small { n: c, d: e }) => {
                let n = *a as i128 * *e as i128 + *c as i128 * *b as i128;
                let d = *b as i128 * *e as i128;
                Rational::from_i128_pair(n, d)
            }
            _ => Rational::normalize_big(self.to_big() + o.to_big()),
        }
    }

    pub fn neg(&self) -> Rational {
        match self {
            Rational::Small { n, d } if *n != i64::MIN => Rational::Small { n: -n, d: *d },
            _ => Rational::normalize_big(-self.to_big()),
        }
    }

    pub fn mul(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small { n: a, d: b }, Rational::Small { n: c, d: e }) => {
                // cross-reduce before multiplying to keep products small
                let g1 = gcd_u64(a.unsigned_abs(), *e).max(1);
                let g2 = gcd_u64(c.unsigned_abs(), *b).max(1);
                let n = (*a / g1 as i64) as i128 * (*c / g2 as i64) as i128;
                let d = (*b / g2) as i128 * (*e / g1) as i128;
                Rational::from_i128_pair(n, d)
            }
            _ => Rational::normalize_big(self.to_big() * o.to_big()),
        }
    }

    pub fn inv(&self) -> Rational {
        match self {
            Rational::Small { n, d } => {
                debug_assert!(*n != 0);
                if *n > 0 {
                    Rational::from_i128_pair(*d as i128, *n as i128)
                } else {
                    Rational::from_i128_pair(-(*d as i128), -(*n as i128))
                }
            }
            Rational::Big(b) => Rational::normalize_big(b.recip()),
        }
    }
}

/// A coefficient field descriptor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// The rational numbers.
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Field, AlgError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(AlgError::ModulusNotPrime(p))
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(Rational::zero()),
            Field::Prime(p) => FieldElem::Mod { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(Rational::one()),
            Field::Prime(p) => FieldElem::Mod { v: 1 % *p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(Rational::from_i64(n)),
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                FieldElem::Mod { v: m, p: *p }
            }
        }
    }

    /// `num/den` as a field element; in `F_p` the denominator is inverted.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElem, AlgError> {
        if den == 0 {
            return Err(AlgError::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(FieldElem::Rat(Rational::from_i128_pair(
                num as i128,
                den as i128,
            ))),
            Field::Prime(_) => self.from_i64(num).div(&self.from_i64(den)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of a coefficient field.
///
/// Rationals are kept reduced with a positive denominator; prime-field
/// residues live in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElem {
    Rat(Rational),
    Mod { v: u64, p: u64 },
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rat(_) => Field::Rationals,
            FieldElem::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_one(),
            FieldElem::Mod { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a.add(b)),
            (FieldElem::Mod { v: a, p }, FieldElem::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli");
                FieldElem::Mod {
                    v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(a.neg()),
            FieldElem::Mod { v, p } => FieldElem::Mod {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a.mul(b)),
            (FieldElem::Mod { v: a, p }, FieldElem::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli");
                FieldElem::Mod {
                    v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn inv(&self) -> Result<FieldElem, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Rat(a) => FieldElem::Rat(a.inv()),
            FieldElem::Mod { v, p } => FieldElem::Mod {
                v: mod_inverse(*v, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem, AlgError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Renders the element the way the session format expects it.
    pub fn render(&self) -> String {
        use alloc::format;
        match self {
            FieldElem::Rat(Rational::Small { n, d }) => {
                if *d == 1 {
                    format!("{n}")
                } else {
                    format!("{n}/{d}")
                }
            }
            FieldElem::Rat(Rational::Big(b)) => {
                if b.denom().is_one() {
                    format!("{}", b.numer())
                } else {
                    format!("{}/{}", b.numer(), b.denom())
                }
            }
            FieldElem::Mod { v, .. } => format!("{v}"),
        }
    }

    /// True for rationals with negative numerator; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_negative(),
            FieldElem::Mod { .. } => false,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut t0, mut t1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "element not invertible");
    t0.rem_euclid(p as i128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rationals;
        let half = q.from_ratio(2, 4).unwrap();
        assert_eq!(half, q.from_ratio(1, 2).unwrap());
        assert_eq!(half.render(), "1/2");
    }

    #[test]
    fn inverse_in_f5() {
        let f5 = Field::prime(5).unwrap();
        let two = f5.from_i64(2);
        assert_eq!(two.inv().unwrap(), f5.from_i64(3));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(Field::prime(4), Err(AlgError::ModulusNotPrime(4)));
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
    }

    #[test]
    fn negative_residues_normalize() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.from_i64(-1), f7.from_i64(6));
    }
}
