//! Exact arithmetic over `Q`: rationals, polynomials, Laurent polynomials,
//! rational functions, and the action of `sigma`.

mod base;
mod factored;
mod laurent;
mod poly;
mod ratfun;
mod rational;

pub use base::{apply_sigma, shifted_factor, sigma_point, BaseFlavor, SigmaAction};
pub use factored::FactoredPoly;
pub use laurent::LaurentPoly;
pub use poly::{poly_gcd, Poly};
pub use ratfun::RatFun;
pub use rational::Rational;
