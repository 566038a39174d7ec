//! Exact scalars: rationals, Laurent polynomials in `q`, the field ℚ(q) and
//! balanced quantum integers.

mod laurent;
pub mod modp;
mod qnum;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;
pub use qnum::{q_binom, q_factorial, q_int};
pub use ratfunc::RatFunc;
