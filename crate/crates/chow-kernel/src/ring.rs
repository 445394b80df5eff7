use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{ChowError, Result};

/// Number of stored coefficients: degrees 0 through 3 in H.
pub const TOP_DEGREE: usize = 3;

/// An element `a0 + a1 H + a2 H^2 + a3 H^3` of `Q[H]/(H^4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedClass {
    coeffs: [BigRational; TOP_DEGREE + 1],
}

impl TruncatedClass {
    pub fn new(coeffs: [BigRational; TOP_DEGREE + 1]) -> Self {
        TruncatedClass { coeffs }
    }

    pub fn from_ints(c: [i64; TOP_DEGREE + 1]) -> Self {
        TruncatedClass {
            coeffs: c.map(|x| BigRational::from_integer(BigInt::from(x))),
        }
    }

    pub fn unit() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    /// The total Chern class `1 + aH` of the line bundle `O(a)`.
    pub fn line(a: i64) -> Self {
        Self::from_ints([1, a, 0, 0])
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational; TOP_DEGREE + 1] {
        &self.coeffs
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn invert(&self) -> Result<Self> {
        ring_invert(self)
    }

    /// Integer value of coefficient `i`, if it is integral.
    pub fn integer_coeff(&self, i: usize) -> Result<BigInt> {
        let c = &self.coeffs[i];
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(ChowError::NonIntegral(format_rational(c)))
        }
    }
}

/// Product in `Q[H]/(H^4)`.
pub fn ring_mul(x: &TruncatedClass, y: &TruncatedClass) -> TruncatedClass {
    let mut out: [BigRational; TOP_DEGREE + 1] = std::array::from_fn(|_| BigRational::zero());
    for i in 0..=TOP_DEGREE {
        if x.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=(TOP_DEGREE - i) {
            out[i + j] += &x.coeffs[i] * &y.coeffs[j];
        }
    }
    TruncatedClass { coeffs: out }
}

/// Multiplicative inverse; fails with "not invertible" when `a0 = 0`.
pub fn ring_invert(x: &TruncatedClass) -> Result<TruncatedClass> {
    if !x.is_unit() {
        return Err(ChowError::NotInvertible);
    }
    let a0_inv = x.coeffs[0].recip();
    let mut inv: [BigRational; TOP_DEGREE + 1] = std::array::from_fn(|_| BigRational::zero());
    inv[0] = a0_inv.clone();
    // b_k = -(1/a0) * sum_{i=1..k} a_i b_{k-i}
    for k in 1..=TOP_DEGREE {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            acc += &x.coeffs[i] * &inv[k - i];
        }
        inv[k] = -(acc * &a0_inv);
    }
    Ok(TruncatedClass { coeffs: inv })
}

/// Product of `1 + t H` over the given twists.
pub fn product_of_lines(twists: &[i64]) -> TruncatedClass {
    twists
        .iter()
        .fold(TruncatedClass::unit(), |acc, &t| ring_mul(&acc, &TruncatedClass::line(t)))
}

impl Mul for &TruncatedClass {
    type Output = TruncatedClass;
    fn mul(self, rhs: &TruncatedClass) -> TruncatedClass {
        ring_mul(self, rhs)
    }
}

impl Mul for TruncatedClass {
    type Output = TruncatedClass;
    fn mul(self, rhs: TruncatedClass) -> TruncatedClass {
        ring_mul(&self, &rhs)
    }
}

impl One for TruncatedClass {
    fn one() -> Self {
        Self::unit()
    }
}

impl fmt::Display for TruncatedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Lowest-terms rendering: "10", "-7/2".
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
