use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, format_rational, int, parse_rational, Rational};
use crate::error::{CoxError, Result};

/// Polynomial in `(x, y)` with rational coefficients, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn monomial(c: Rational, k: u32, l: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, l, c);
        p
    }

    pub fn from_ints(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(k, l, c) in terms {
            p.add_term(k, l, int(c));
        }
        p
    }

    /// Univariate in `x` from coefficients indexed by degree.
    pub fn from_x_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as u32, 0, c);
        }
        p
    }

    pub fn add_term(&mut self, k: u32, l: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((k, l)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(k, l));
        }
    }

    pub fn coeff(&self, k: u32, l: u32) -> Rational {
        self.terms.get(&(k, l)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(k, l), c)| (k, l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero();
        for (k, l, a) in self.terms() {
            p.add_term(k, l, a * c);
        }
        p
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, _)| k).max()
    }

    pub fn is_univariate_x(&self) -> bool {
        self.terms.keys().all(|&(_, l)| l == 0)
    }

    /// Sets `y = 1`, leaving a polynomial in `x`.
    pub fn at_y_one(&self) -> Self {
        let mut p = Self::zero();
        for (k, _, c) in self.terms() {
            p.add_term(k, 0, c.clone());
        }
        p
    }

    /// Sets `y = 0`.
    pub fn at_y_zero(&self) -> Self {
        let mut p = Self::zero();
        for (k, l, c) in self.terms() {
            if l == 0 {
                p.add_term(k, 0, c.clone());
            }
        }
        p
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// `x^n p(1/x, y)`; `None` if some x-degree exceeds `n`.
    pub fn reverse_x(&self, n: u32) -> Option<Self> {
        let mut p = Self::zero();
        for (k, l, c) in self.terms() {
            p.add_term(n.checked_sub(k)?, l, c.clone());
        }
        Some(p)
    }

    /// `(1 - x)^n F(x/(1-x), xy/(1-x))`. Each term `c x^k y^l` becomes
    /// `c x^(k+l) y^l (1-x)^(n-k-l)`, so every term needs `k + l <= n`.
    pub fn substitute(&self, n: u32) -> Result<Self> {
        let mut p = Self::zero();
        for (k, l, c) in self.terms() {
            let rest = n
                .checked_sub(k + l)
                .ok_or(CoxError::DegreeOverflow { k, l, n })?;
            for j in 0..=rest {
                let b = binomial(rest as u64, j as u64) as i64;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                p.add_term(k + l + j, l, c * int(sign * b));
            }
        }
        Ok(p)
    }

    pub fn to_json(&self) -> BiPolyJson {
        BiPolyJson {
            terms: self
                .terms()
                .map(|(k, l, c)| (k, l, format_rational(c)))
                .collect(),
        }
    }

    pub fn from_json(j: &BiPolyJson) -> Option<Self> {
        let mut p = Self::zero();
        for (k, l, c) in &j.terms {
            p.add_term(*k, *l, parse_rational(c)?);
        }
        Some(p)
    }
}

/// Wire form `{"terms": [[k, l, "num/den"], ...]}` sorted by `(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiPolyJson {
    pub terms: Vec<(u32, u32, String)>,
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, l, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut vars = String::new();
            match k {
                0 => {}
                1 => vars.push('x'),
                _ => vars.push_str(&format!("x^{k}")),
            }
            match l {
                0 => {}
                1 => vars.push('y'),
                _ => vars.push_str(&format!("y^{l}")),
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (k, l, c) in o.terms() {
            p.add_term(k, l, c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (k, l, c) in o.terms() {
            p.add_term(k, l, -c);
        }
        p
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut p = BiPoly::zero();
        for (k1, l1, a) in self.terms() {
            for (k2, l2, b) in o.terms() {
                p.add_term(k1 + k2, l1 + l2, a * b);
            }
        }
        p
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}
