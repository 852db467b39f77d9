//! Sparse multivariate polynomial arithmetic over exact rationals.
//!
//! Variables carry a tri-degree `(a, q, t)`; all ring operations are pure and
//! polynomials are immutable values, safe to share between threads.

mod poly;
mod symfn;

pub use poly::{Monomial, Polynomial, TriDegree, VarKind, Variable};
pub use symfn::{
    complete_homogeneous, elementary, factorization_coeffs, is_symmetric, power_sum,
    power_sum_in_basis, power_sum_jacobian,
};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
