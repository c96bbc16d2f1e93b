use num_bigint::BigInt;

/// An exact rational number, always reduced to lowest terms with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

/// `numer / denom` as a [`Rat`]. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
