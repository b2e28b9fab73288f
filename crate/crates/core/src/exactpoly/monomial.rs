use std::cmp::Ordering;
use std::fmt;

/// Formal variables that can appear in a [`MultiPoly`](super::MultiPoly).
///
/// `A`, `B` are the Chern roots of the rank two bundle, `C1`, `C2` its Chern
/// classes, `D` the degree of the hypersurface, `Zeta`, `Eta` the Chern roots
/// on the flag manifold with `Sigma1 = Zeta + Eta`, and `Xi` the hyperplane
/// class of a linear system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    C1,
    C2,
    D,
    Zeta,
    Eta,
    Sigma1,
    Xi,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::A,
        Var::B,
        Var::C1,
        Var::C2,
        Var::D,
        Var::Zeta,
        Var::Eta,
        Var::Sigma1,
        Var::Xi,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::D => "d",
            Var::Zeta => "zeta",
            Var::Eta => "eta",
            Var::Sigma1 => "sigma1",
            Var::Xi => "xi",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.symbol() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Exponent vector over [`Var::ALL`].
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the earlier variable decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Self {
        Self::ONE.with(v, 1)
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Self::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, e: u32) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|v| self.exp(*v)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o += e;
        }
        out
    }

    pub fn swap(mut self, x: Var, y: Var) -> Self {
        self.0.swap(x.index(), y.index());
        self
    }

    /// Splits into the part supported on `vars` and the rest.
    pub fn split(&self, vars: &[Var]) -> (Monomial, Monomial) {
        let mut inside = Self::ONE;
        let mut outside = *self;
        for &v in vars {
            inside.0[v.index()] = self.0[v.index()];
            outside.0[v.index()] = 0;
        }
        (inside, outside)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .iter()
            .copied()
            .filter(move |v| self.exp(*v) > 0)
            .map(move |v| (v, self.exp(v)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
