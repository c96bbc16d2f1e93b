//! The Orlik-Solomon algebra in degrees <= 2 and the Aomoto complex.
//!
//! Degree 1 has one generator e_H per hyperplane. Degree 2 is presented
//! per flat: the flat X with anchor H0 = min(A_X) contributes the basis
//! elements e_{H0} ^ e_K for K in A_X \ {H0}, so dim A^2 = sum (q_X - 1).
//! A product e_H e_K rewrites into this basis through the collinearity
//! relation at the unique flat of {H, K}:
//!
//! * anchor involved: a signed basis element;
//! * otherwise:       e_H e_K = e_{H0} e_K - e_{H0} e_H.
//!
//! For a coefficient vector a the Aomoto differential delta_a is left
//! multiplication by a on A^1 -> A^2 (and 1 -> a on A^0 -> A^1); since
//! a ^ a = 0, delta_a really is a differential.

use std::collections::HashMap;

use thiserror::Error;

use crate::arrangement::IncidenceL2;
use crate::exactmath::{ExactError, Field, Mat, PrimeField, Rat, Rationals};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OsError {
    #[error("product e_H e_H with H = {0} is zero; indices must differ")]
    EqualIndices(u32),
    #[error("hyperplane index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Fixed bases for the degree-1 and degree-2 parts of the Orlik-Solomon
/// algebra of an incidence structure.
#[derive(Debug, Clone)]
pub struct OsAlgebra<'a> {
    inc: &'a IncidenceL2,
    basis2: Vec<(u32, u32)>,
    index_of: HashMap<(u32, u32), usize>,
}

impl<'a> OsAlgebra<'a> {
    pub fn new(inc: &'a IncidenceL2) -> Self {
        let mut basis2 = Vec::new();
        let mut index_of = HashMap::new();
        for flat in inc.flats() {
            let anchor = flat.anchor();
            for &k in &flat.hyperplanes()[1..] {
                index_of.insert((anchor, k), basis2.len());
                basis2.push((anchor, k));
            }
        }
        OsAlgebra {
            inc,
            basis2,
            index_of,
        }
    }

    pub fn incidence(&self) -> &IncidenceL2 {
        self.inc
    }

    pub fn dim1(&self) -> usize {
        self.inc.n() as usize
    }

    pub fn dim2(&self) -> usize {
        self.basis2.len()
    }

    /// The degree-2 basis as (anchor, other) pairs, in flat order.
    pub fn basis2(&self) -> &[(u32, u32)] {
        &self.basis2
    }

    /// The product e_h e_k, expanded in the degree-2 basis as at most two
    /// signed terms (basis index, sign).
    pub fn product(&self, h: u32, k: u32) -> Result<Vec<(usize, i8)>, OsError> {
        let n = self.inc.n();
        for idx in [h, k] {
            if idx < 1 || idx > n {
                return Err(OsError::IndexOutOfRange { index: idx, n });
            }
        }
        if h == k {
            return Err(OsError::EqualIndices(h));
        }
        let flat = self.inc.flat(
            self.inc
                .flat_of_pair(h, k)
                .expect("every pair lies in a flat"),
        );
        let anchor = flat.anchor();
        if anchor == h {
            Ok(vec![(self.index_of[&(anchor, k)], 1)])
        } else if anchor == k {
            Ok(vec![(self.index_of[&(anchor, h)], -1)])
        } else {
            Ok(vec![
                (self.index_of[&(anchor, k)], 1),
                (self.index_of[&(anchor, h)], -1),
            ])
        }
    }

    /// The matrix of delta_a : A^1 -> A^2 in the fixed bases, for the
    /// coefficient vector `a` (one entry per hyperplane) over `field`.
    pub fn delta_matrix<F: Field>(&self, field: F, a: &[F::Elem]) -> Result<Mat<F>, ExactError> {
        let n = self.dim1();
        if a.len() != n {
            return Err(ExactError::LengthMismatch {
                expected: n,
                got: a.len(),
            });
        }
        let mut m = Mat::zeros(field.clone(), self.dim2(), n);
        for k in 1..=n as u32 {
            for h in 1..=n as u32 {
                if h == k || field.is_zero(&a[h as usize - 1]) {
                    continue;
                }
                for (row, sign) in self.product(h, k).expect("indices valid and distinct") {
                    let col = k as usize - 1;
                    let term = &a[h as usize - 1];
                    let updated = if sign > 0 {
                        field.add(m.get(row, col), term)
                    } else {
                        field.sub(m.get(row, col), term)
                    };
                    m.set(row, col, updated);
                }
            }
        }
        Ok(m)
    }
}

/// The Aomoto-Betti number beta_p = dim H^1(A tensor F_p, delta_sigma),
/// for sigma the all-ones (diagonal) class. sigma is a non-zero cocycle
/// and the image of A^0 is its line, so beta_p = nullity(delta^1) - 1.
pub fn beta_p(inc: &IncidenceL2, p: u64) -> Result<u64, ExactError> {
    let field = PrimeField::new(p)?;
    let os = OsAlgebra::new(inc);
    let sigma = vec![field.one(); os.dim1()];
    let m = os.delta_matrix(field, &sigma)?;
    let nullity = m.nullity();
    debug_assert!(nullity >= 1, "the diagonal class is always a cocycle");
    Ok(nullity as u64 - 1)
}

/// Nullity of delta_a : A^1 -> A^2 over Q; the resonance membership test.
pub fn aomoto_nullity(inc: &IncidenceL2, a: &[Rat]) -> Result<usize, ExactError> {
    let os = OsAlgebra::new(inc);
    let m = os.delta_matrix(Rationals, a)?;
    Ok(m.nullity())
}
