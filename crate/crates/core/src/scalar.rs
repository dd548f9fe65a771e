//! Coefficient traits shared by [`MPoly`](crate::MPoly) and
//! [`BiSeries`](crate::BiSeries).
//!
//! Everything in the verification path instantiates these with `BigInt` and
//! `BigRational`. Machine integers and floats also satisfy the bounds, which is
//! handy for quick numeric spot checks but carries no exactness guarantee.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, NumAssignRef};

/// A commutative ring of coefficients.
pub trait Ring: Num + NumAssignRef + Clone + Debug + Display + Send + Sync + 'static {}

impl<T> Ring for T where T: Num + NumAssignRef + Clone + Debug + Display + Send + Sync + 'static {}

/// A field of coefficients with a way to embed small integers.
pub trait Field: Ring + FromPrimitive {
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("small integer must embed in the coefficient field")
    }
}

impl<T> Field for T where T: Ring + FromPrimitive {}

/// `m!` in the coefficient ring.
pub fn factorial<T: Ring>(m: usize) -> T {
    let mut acc = T::one();
    let mut k = T::one();
    for _ in 0..m {
        acc *= &k;
        k += &T::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn factorials() {
        assert_eq!(factorial::<BigInt>(0), BigInt::from(1));
        assert_eq!(factorial::<BigInt>(6), BigInt::from(720));
        assert_eq!(factorial::<i64>(5), 120);
        assert_eq!(
            factorial::<BigRational>(4),
            BigRational::from_integer(BigInt::from(24))
        );
    }

    #[test]
    fn rationals_embed_small_integers() {
        let x = BigRational::from_usize_exact(7);
        assert_eq!(x, BigRational::from_integer(BigInt::from(7)));
        assert_eq!(f64::from_usize_exact(3), 3.0);
    }
}
