//! Elements of the cyclotomic field Q(zeta_m).

use std::fmt;

use num_traits::Zero;

use super::poly::cyclotomic_polynomial;
use super::poly::euler_phi;
use super::rat::{rat_int, Rat};
use super::ExactError;

/// A dense polynomial over Q, constant term first. Internal helper for
/// reduction and inversion modulo the cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq)]
struct QPoly(Vec<Rat>);

impl QPoly {
    fn trim(mut v: Vec<Rat>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        QPoly(v)
    }

    fn zero() -> Self {
        QPoly(vec![])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn from_int_coeffs(coeffs: &[num_bigint::BigInt]) -> Self {
        QPoly::trim(
            coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![rat_int(0); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::trim(out)
    }

    fn sub(&self, rhs: &QPoly) -> QPoly {
        let mut out = vec![rat_int(0); self.0.len().max(rhs.0.len())];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.0.iter().enumerate() {
            out[i] -= b;
        }
        QPoly::trim(out)
    }

    fn scale(&self, c: &Rat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Division with remainder by a non-zero divisor.
    fn divrem(&self, div: &QPoly) -> (QPoly, QPoly) {
        let dd = div.degree().expect("division by zero polynomial");
        let lead_inv = div.0[dd].recip();
        let mut rem = self.0.clone();
        let mut quot = vec![rat_int(0); self.0.len().saturating_sub(dd)];
        let mut i = rem.len();
        while i > dd {
            i -= 1;
            let top = rem[i].clone();
            if top.is_zero() {
                continue;
            }
            let q = &top * &lead_inv;
            let shift = i - dd;
            for (j, dc) in div.0.iter().enumerate() {
                let delta = &q * dc;
                rem[shift + j] -= delta;
            }
            quot[shift] = q;
        }
        (QPoly::trim(quot), QPoly::trim(rem))
    }
}

/// Extended Euclid over Q[t]: returns (g, s) with s*a = g (mod b).
fn half_egcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = QPoly(vec![rat_int(1)]);
    let mut s1 = QPoly::zero();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

/// An exact element of the cyclotomic field Q(zeta_m), stored as a
/// polynomial in zeta_m reduced modulo the m-th cyclotomic polynomial.
///
/// The coefficient vector always has length phi(m), so equality of
/// elements of a common order is coefficient comparison. Operations on
/// elements of different orders are rejected rather than coerced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<Rat>,
}

impl CycloNum {
    fn phi(order: u32) -> usize {
        euler_phi(order as u64) as usize
    }

    fn modulus(order: u32) -> QPoly {
        QPoly::from_int_coeffs(cyclotomic_polynomial(order as u64).coeffs())
    }

    fn reduce(order: u32, p: QPoly) -> CycloNum {
        let deg = Self::phi(order);
        let mut coeffs = if p.degree().is_some_and(|d| d >= deg) {
            p.divrem(&Self::modulus(order)).1 .0
        } else {
            p.0
        };
        coeffs.resize(deg, rat_int(0));
        CycloNum { order, coeffs }
    }

    /// The zero element of Q(zeta_m).
    pub fn zero(order: u32) -> CycloNum {
        assert!(order >= 1);
        CycloNum {
            order,
            coeffs: vec![rat_int(0); Self::phi(order)],
        }
    }

    /// The unit of Q(zeta_m).
    pub fn one(order: u32) -> CycloNum {
        CycloNum::from_rat(order, rat_int(1))
    }

    /// A rational embedded in Q(zeta_m).
    pub fn from_rat(order: u32, r: Rat) -> CycloNum {
        assert!(order >= 1);
        Self::reduce(order, QPoly::trim(vec![r]))
    }

    pub fn from_int(order: u32, n: i64) -> CycloNum {
        CycloNum::from_rat(order, rat_int(n))
    }

    /// zeta_m^a, reduced modulo the m-th cyclotomic polynomial. Negative
    /// exponents are taken modulo m.
    pub fn zeta_power(order: u32, a: i64) -> CycloNum {
        assert!(order >= 1);
        let e = a.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![rat_int(0); e + 1];
        coeffs[e] = rat_int(1);
        Self::reduce(order, QPoly::trim(coeffs))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of zeta_m^0 .. zeta_m^{phi(m)-1}.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &CycloNum::one(self.order)
    }

    fn check_order(&self, other: &CycloNum) -> Result<(), ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloNum) -> Result<CycloNum, ExactError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycloNum) -> Result<CycloNum, ExactError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNum) -> Result<CycloNum, ExactError> {
        self.check_order(other)?;
        let prod = QPoly::trim(self.coeffs.clone()).mul(&QPoly::trim(other.coeffs.clone()));
        Ok(Self::reduce(self.order, prod))
    }

    pub fn scaled(&self, c: &Rat) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against
    /// the m-th cyclotomic polynomial over Q.
    pub fn inv(&self) -> Result<CycloNum, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let f = QPoly::trim(self.coeffs.clone());
        let (g, s) = half_egcd(&f, &Self::modulus(self.order));
        // Phi_m is irreducible over Q, so the gcd is a non-zero constant.
        debug_assert_eq!(g.degree(), Some(0));
        let scale = g.0[0].recip();
        Ok(Self::reduce(self.order, s.scale(&scale)))
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{}", self.order)?,
                _ => write!(f, "({c})*z{}^{e}", self.order)?,
            }
        }
        Ok(())
    }
}
