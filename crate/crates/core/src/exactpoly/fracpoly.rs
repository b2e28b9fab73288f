use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{DFrac, Monomial, MultiPoly, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// Polynomial whose scalars are rational functions of `d`.
///
/// Stored as `num / den` with a single shared denominator `den` in `d`.
/// The pair is kept reduced: `den` is monic and coprime to the
/// `d`-coefficient of every monomial of `num`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracPoly {
    num: MultiPoly,
    den: UniPoly,
}

impl FracPoly {
    pub fn new(num: MultiPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn from_dfrac(f: &DFrac) -> Self {
        Self::reduced(MultiPoly::from_unipoly(f.num(), Var::D), f.den().clone())
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn num(&self) -> &MultiPoly {
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

    fn reduced(num: MultiPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc_inv = den.leading().expect("nonzero denominator").recip();
        if den.degree() == Some(0) {
            return Self {
                num: num.scale(&lc_inv),
                den: UniPoly::one(),
            };
        }
        let groups = d_coefficients(&num);
        let mut g = den.clone();
        for c in groups.values() {
            if g.degree() == Some(0) {
                break;
            }
            g = g.gcd(c);
        }
        if g.degree().unwrap_or(0) == 0 {
            return Self {
                num: num.scale(&lc_inv),
                den: den.monic(),
            };
        }
        let new_den = den.exact_div(&g).expect("gcd divides");
        let lc_inv = new_den.leading().unwrap().recip();
        let mut out = MultiPoly::zero();
        for (m, c) in groups {
            let q = c.exact_div(&g).expect("gcd divides").scale(&lc_inv);
            out += &MultiPoly::from_unipoly(&q, Var::D).mul_monomial(&m);
        }
        Self {
            num: out,
            den: new_den.monic(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn scale_dfrac(&self, f: &DFrac) -> Self {
        Self::reduced(
            &self.num * &MultiPoly::from_unipoly(f.num(), Var::D),
            &self.den * f.den(),
        )
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::reduced(&self.num * p, self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Applies a linear operator that commutes with scalars in `d`.
    pub fn map_num(&self, f: impl FnOnce(&MultiPoly) -> MultiPoly) -> Self {
        Self::reduced(f(&self.num), self.den.clone())
    }

    /// Substitutes polynomials with rational-function scalars for variables.
    ///
    /// A binding for `d` itself must be a polynomial in `d` alone.
    pub fn substitute(&self, bindings: &HashMap<Var, FracPoly>) -> Self {
        let mut den = self.den.clone();
        if let Some(img) = bindings.get(&Var::D) {
            let inner = img
                .as_unipoly()
                .expect("binding for d must be a polynomial in d");
            den = den.compose(&inner);
        }
        // Each bound variable v of maximal degree k contributes den_v^k to the
        // common denominator; a term with v^e is padded by den_v^(k - e).
        let mut max_deg: HashMap<Var, u32> = HashMap::new();
        for (m, _) in self.num.terms() {
            for (v, e) in m.vars() {
                if bindings.contains_key(&v) {
                    let slot = max_deg.entry(v).or_insert(0);
                    *slot = (*slot).max(e);
                }
            }
        }
        let mut common = UniPoly::one();
        for (v, k) in &max_deg {
            common = &common * &bindings[v].den.pow(*k);
        }
        let mut num_pows: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut den_pows: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero();
        for (m, c) in self.num.terms() {
            let mut rest = *m;
            let mut term = MultiPoly::constant(c.clone());
            for (v, k) in &max_deg {
                let e = m.exp(*v);
                let img = &bindings[v];
                rest = rest.with(*v, 0);
                if e > 0 {
                    let p = num_pows.entry((*v, e)).or_insert_with(|| img.num.pow(e));
                    term = &term * p;
                }
                if *k > e {
                    let pad = den_pows
                        .entry((*v, k - e))
                        .or_insert_with(|| MultiPoly::from_unipoly(&img.den.pow(k - e), Var::D));
                    term = &term * pad;
                }
            }
            acc += &term.mul_monomial(&rest);
        }
        Self::reduced(acc, &den * &common)
    }

    pub fn as_unipoly(&self) -> Option<UniPoly> {
        if !self.is_polynomial() {
            return None;
        }
        self.num.to_unipoly(Var::D)
    }

    /// The polynomial itself, provided every denominator has cancelled.
    pub fn to_multipoly(&self, context: &str) -> Result<MultiPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::PolynomialityViolation {
                context: context.to_string(),
                denominator: self.den.to_string(),
            })
        }
    }

    /// Sets `d = k`.
    pub fn evaluate_d(&self, k: i64) -> Result<MultiPoly> {
        let den = self.den.eval_int(k);
        if den.is_zero() {
            return Err(Error::PoleAtD(k));
        }
        Ok(self
            .num
            .eval_var(Var::D, &Rational::from_integer(k.into()))
            .scale(&den.recip()))
    }

    /// Scalar coefficient of a `d`-free monomial.
    pub fn coefficient(&self, m: &Monomial) -> DFrac {
        let (_, rest) = m.split(&[Var::D]);
        let groups = d_coefficients(&self.num);
        match groups.get(&rest) {
            None => DFrac::zero(),
            Some(c) => DFrac::new(c.clone(), self.den.clone()).expect("nonzero"),
        }
    }

    /// All `d`-free monomials with their scalar coefficients.
    pub fn coefficients(&self) -> BTreeMap<Monomial, DFrac> {
        d_coefficients(&self.num)
            .into_iter()
            .map(|(m, c)| (m, DFrac::new(c, self.den.clone()).expect("nonzero")))
            .collect()
    }
}

/// Groups a polynomial by its `d`-free monomials; values are univariate in `d`.
fn d_coefficients(p: &MultiPoly) -> BTreeMap<Monomial, UniPoly> {
    let others: Vec<Var> = Var::ALL.iter().copied().filter(|v| *v != Var::D).collect();
    p.collect_in(&others)
        .into_iter()
        .map(|(m, c)| (m, c.to_unipoly(Var::D).expect("only d remains")))
        .collect()
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &FracPoly {
    type Output = FracPoly;
    fn add(self, rhs: &FracPoly) -> FracPoly {
        if self.den == rhs.den {
            return FracPoly::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let lf = rhs.den.exact_div(&g).expect("gcd divides");
        let rf = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &MultiPoly::from_unipoly(&lf, Var::D))
            + &(&rhs.num * &MultiPoly::from_unipoly(&rf, Var::D));
        FracPoly::reduced(num, &self.den * &lf)
    }
}

impl Sub for &FracPoly {
    type Output = FracPoly;
    fn sub(self, rhs: &FracPoly) -> FracPoly {
        self + &(-rhs)
    }
}

impl Mul for &FracPoly {
    type Output = FracPoly;
    fn mul(self, rhs: &FracPoly) -> FracPoly {
        FracPoly::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &FracPoly {
    type Output = FracPoly;
    fn neg(self) -> FracPoly {
        FracPoly {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Zero for FracPoly {
    fn zero() -> Self {
        FracPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for FracPoly {
    type Output = FracPoly;
    fn add(self, rhs: FracPoly) -> FracPoly {
        &self + &rhs
    }
}
