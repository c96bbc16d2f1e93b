//! Field contexts: the scalar domains behind the generic linear algebra.
//!
//! A [`Field`] value carries whatever runtime data the arithmetic needs
//! (the prime p, the cyclotomic order m) and exposes exact operations on
//! its element type. Matrices are generic over this trait.

use std::fmt;

use num_traits::Zero;

use super::cyclo::CycloNum;
use super::rat::Rat;
use super::ExactError;

/// An exact field with elements of type `Self::Elem`.
pub trait Field: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; [`ExactError::DivisionByZero`] on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ExactError>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The rational field Q.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::from_integer(1.into())
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn inv(&self, a: &Rat) -> Result<Rat, ExactError> {
        if a.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
}

/// Deterministic Miller-Rabin primality test for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let modpow = |mut base: u128, mut exp: u64, m: u128| -> u128 {
        let mut acc: u128 = 1;
        base %= m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow(a as u128, d, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..r - 1 {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field F_p for a runtime prime p; elements are residues in
/// `0..p` stored as `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn embed_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64, ExactError> {
        if *a == 0 {
            return Err(ExactError::DivisionByZero);
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(s0.rem_euclid(self.p as i128) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// The cyclotomic field Q(zeta_m).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycloField {
    order: u32,
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1);
        CycloField { order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

impl Field for CycloField {
    type Elem = CycloNum;

    fn zero(&self) -> CycloNum {
        CycloNum::zero(self.order)
    }
    fn one(&self) -> CycloNum {
        CycloNum::one(self.order)
    }
    fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.add(b).expect("elements share the field order")
    }
    fn sub(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.sub(b).expect("elements share the field order")
    }
    fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.mul(b).expect("elements share the field order")
    }
    fn neg(&self, a: &CycloNum) -> CycloNum {
        a.neg()
    }
    fn inv(&self, a: &CycloNum) -> Result<CycloNum, ExactError> {
        a.inv()
    }
    fn is_zero(&self, a: &CycloNum) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
    }

    #[test]
    fn prime_field_ops() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.add(&2, &2), 1);
        assert_eq!(f3.inv(&2).unwrap(), 2);
        assert_eq!(f3.neg(&1), 2);
        assert_eq!(f3.embed_i64(-1), 2);
        assert_eq!(PrimeField::new(6), Err(ExactError::NotPrime(6)));
        assert_eq!(f3.inv(&0), Err(ExactError::DivisionByZero));
    }
}
