//! Polynomial arithmetic over the rationals.

mod matrix;
mod monomial;
mod polymatrix;
mod polynomial;
mod rational;
mod ring;

pub use matrix::{rref, QMatrix, SparseEchelon, SparseVector};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use polymatrix::{maximal_minors, wedge_power, wedge_power_dense, PolyMatrix};
pub use polynomial::Polynomial;
pub use rational::{denominator_lcm, Rational};
pub use ring::{plucker_name, Ring};
