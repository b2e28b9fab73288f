use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Rational function in `d`, kept in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DFrac {
    num: UniPoly,
    den: UniPoly,
}

impl DFrac {
    /// Reduces `num / den`; the result has a monic denominator coprime to the numerator.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero").clone();
        Ok(Self {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// `m / (d - shift)`; the twist parameter of the recursion.
    pub fn ratio_over_shift(m: i64, shift: i64) -> Self {
        Self::new(UniPoly::from_int(m), UniPoly::linear_root(shift)).expect("nonzero")
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at `d = k`.
    pub fn eval_int(&self, k: i64) -> Result<Rational> {
        let den = self.den.eval_int(k);
        if den.is_zero() {
            return Err(Error::PoleAtD(k));
        }
        Ok(self.num.eval_int(k) / den)
    }
}

impl fmt::Display for DFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &DFrac {
    type Output = DFrac;
    fn add(self, rhs: &DFrac) -> DFrac {
        DFrac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &DFrac {
    type Output = DFrac;
    fn sub(self, rhs: &DFrac) -> DFrac {
        self + &(-rhs)
    }
}

impl Mul for &DFrac {
    type Output = DFrac;
    fn mul(self, rhs: &DFrac) -> DFrac {
        DFrac::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &DFrac {
    type Output = DFrac;
    fn neg(self) -> DFrac {
        DFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Zero for DFrac {
    fn zero() -> Self {
        DFrac::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for DFrac {
    type Output = DFrac;
    fn add(self, rhs: DFrac) -> DFrac {
        &self + &rhs
    }
}
