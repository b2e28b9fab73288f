use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Monomial, Rational, UniPoly, Var};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in graded-lex order and zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn monomial(c: i64, pairs: &[(Var, u32)]) -> Self {
        Self::term(
            Rational::from_integer(c.into()),
            Monomial::from_pairs(pairs),
        )
    }

    /// Builds `sum c_i d^i` from a univariate polynomial in `var`.
    pub fn from_unipoly(p: &UniPoly, var: Var) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::ONE.with(var, i as u32), c.clone());
        }
        out
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Variables that occur with a positive exponent, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|v| self.terms.keys().any(|m| m.exp(*v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn total_degree_in(&self, vars: &[Var]) -> Option<u32> {
        self.terms.keys().map(|m| m.degree_in(vars)).max()
    }

    /// True when every term has the same total degree in `vars`.
    pub fn is_homogeneous_in(&self, vars: &[Var]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree_in(vars));
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Interprets the polynomial as univariate in `v`, if no other variable occurs.
    pub fn to_unipoly(&self, v: Var) -> Option<UniPoly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.degree() != m.exp(v) {
                return None;
            }
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exchanges the roles of two variables.
    pub fn swap(&self, x: Var, y: Var) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap(x, y), c.clone()))
                .collect(),
        }
    }

    pub fn rename(&self, from: Var, to: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(from);
            let nm = m.with(from, 0);
            let nm = nm.with(to, nm.exp(to) + e);
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Replaces each bound variable by a polynomial; unbound variables pass through.
    pub fn substitute(&self, bindings: &HashMap<Var, MultiPoly>) -> Self {
        let mut powers: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut acc = Self::constant(c.clone());
            for (v, e) in m.vars() {
                if let Some(img) = bindings.get(&v) {
                    rest = rest.with(v, 0);
                    let p = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                    acc = &acc * p;
                }
            }
            out += &acc.mul_monomial(&rest);
        }
        out
    }

    /// Sets `v` to a rational value.
    pub fn eval_var(&self, v: Var, x: &Rational) -> Self {
        let mut out = Self::zero();
        let mut pow_cache: Vec<Rational> = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while pow_cache.len() <= e {
                let next = pow_cache.last().unwrap() * x;
                pow_cache.push(next);
            }
            out.add_term(m.with(v, 0), c * &pow_cache[e]);
        }
        out
    }

    /// Groups terms by their monomial in `vars`; the values carry the remaining variables.
    pub fn collect_in(&self, vars: &[Var]) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside).or_default().add_term(outside, c.clone());
        }
        out
    }

    /// Coefficient of `v^k`, as a polynomial in the other variables.
    pub fn coefficient_of(&self, v: Var, k: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                out.add_term(m.with(v, 0), c.clone());
            }
        }
        out
    }

    /// Divides by a polynomial in `d`, when it divides every coefficient.
    pub fn exact_div_d(&self, q: &UniPoly) -> Option<Self> {
        let others: Vec<Var> = Var::ALL.iter().copied().filter(|v| *v != Var::D).collect();
        let mut out = Self::zero();
        for (m, c) in self.collect_in(&others) {
            let quot = c.to_unipoly(Var::D)?.exact_div(q)?;
            out += &Self::from_unipoly(&quot, Var::D).mul_monomial(&m);
        }
        Some(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> MultiPoly {
        MultiPoly::var(Var::A)
    }
    fn b() -> MultiPoly {
        MultiPoly::var(Var::B)
    }
    fn d() -> MultiPoly {
        MultiPoly::var(Var::D)
    }

    #[test]
    fn binomial_square() {
        let s = &a() + &b();
        let expected = MultiPoly::monomial(1, &[(Var::A, 2)])
            + MultiPoly::monomial(2, &[(Var::A, 1), (Var::B, 1)])
            + MultiPoly::monomial(1, &[(Var::B, 2)]);
        assert_eq!(&s * &s, expected);
    }

    #[test]
    fn absorbing_zero() {
        let p = &(&a() - &b()) * &MultiPoly::zero();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn weighted_pair_product() {
        // d b (a + (d-1) b) = d a b + (d^2 - d) b^2
        let lhs = &(&d() * &b()) * &(&a() + &(&(&d() - &MultiPoly::one()) * &b()));
        let rhs = MultiPoly::monomial(1, &[(Var::D, 1), (Var::A, 1), (Var::B, 1)])
            + MultiPoly::monomial(1, &[(Var::D, 2), (Var::B, 2)])
            - MultiPoly::monomial(1, &[(Var::D, 1), (Var::B, 2)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_shift() {
        let p = MultiPoly::monomial(1, &[(Var::A, 2)]);
        let mut bind = HashMap::new();
        bind.insert(Var::A, &a() + &b());
        let s = &a() + &b();
        assert_eq!(p.substitute(&bind), &s * &s);
    }

    #[test]
    fn self_difference_is_empty() {
        let p = &(&a() + &d()).pow(3) - &b();
        assert!((&p - &p).is_empty());
    }

    #[test]
    fn eval_and_collect() {
        let p = &(&d() * &(&d() - &MultiPoly::one())) * &(&a() + &b());
        let at4 = p.eval_var(Var::D, &Rational::from_integer(4.into()));
        assert_eq!(at4, (&a() + &b()).scale(&Rational::from_integer(12.into())));
        let groups = p.collect_in(&[Var::A, Var::B]);
        assert_eq!(groups.len(), 2);
        let ca = &groups[&Monomial::var(Var::A)];
        assert_eq!(
            ca.to_unipoly(Var::D).unwrap(),
            UniPoly::from_ints(&[0, -1, 1])
        );
    }
}
