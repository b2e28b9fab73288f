//! Exact rational arithmetic: sparse multivariate polynomials, dense
//! polynomials in the degree variable `d`, and rational functions of `d`.

mod dfrac;
mod fracpoly;
mod interpolate;
mod monomial;
mod multipoly;
mod parse;
mod unipoly;

pub use dfrac::DFrac;
pub use fracpoly::FracPoly;
pub use interpolate::interpolate_d;
pub use monomial::{Monomial, Var, NVARS};
pub use multipoly::MultiPoly;
pub use unipoly::UniPoly;

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}
