//! Exact polynomial arithmetic over `F_p` in `k[x_1..x_n, y_1..y_n]`,
//! Gröbner bases, and the ideal operations built on them.

mod field;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod polynomial;
mod ring;

pub use field::{Coeff, PrimeField, DEFAULT_CHARACTERISTIC};
pub use groebner::GroebnerBasis;
pub use ideal::{Ideal, IdealJson};
pub use monomial::{Monomial, DEGREE_CAP, MAX_VARS};
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term};
pub use ring::Ring;

