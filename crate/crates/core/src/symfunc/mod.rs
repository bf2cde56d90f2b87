//! Symmetric functions in the power-sum basis with coefficients in `Q[t]`,
//! truncated above a fixed degree, and plethysm with `t` plethystic.

mod gerst;

pub use gerst::*;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::arith::{int, partitions_of, Partition, Rational, UniPoly};
use crate::error::{CoxError, Result};

/// `sum_lambda c_lambda(t) p_lambda`, with every term of degree above
/// `max_degree` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, UniPoly>,
    max_degree: u32,
}

impl SymFunc {
    pub fn zero(max_degree: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            max_degree,
        }
    }

    pub fn one(max_degree: u32) -> Self {
        Self::constant(UniPoly::one(), max_degree)
    }

    pub fn constant(c: UniPoly, max_degree: u32) -> Self {
        Self::term(Partition::empty(), c, max_degree)
    }

    /// `c * p_lambda` (zero if `|lambda|` exceeds the truncation).
    pub fn term(lambda: Partition, c: UniPoly, max_degree: u32) -> Self {
        let mut f = Self::zero(max_degree);
        f.add_term(lambda, c);
        f
    }

    pub fn p(k: u32, max_degree: u32) -> Self {
        Self::term(Partition::new(vec![k]), UniPoly::one(), max_degree)
    }

    pub fn p_lambda(lambda: Partition, max_degree: u32) -> Self {
        Self::term(lambda, UniPoly::one(), max_degree)
    }

    /// `h_n = sum_{lambda |- n} p_lambda / z_lambda`.
    pub fn h(n: u32, max_degree: u32) -> Self {
        let mut f = Self::zero(max_degree);
        for lambda in partitions_of(n) {
            let c = Rational::new(One::one(), lambda.z());
            f.add_term(lambda, UniPoly::constant(c));
        }
        f
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        let mut f = Self::zero(max_degree);
        for (lambda, c) in &self.terms {
            f.add_term(lambda.clone(), c.clone());
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: UniPoly) {
        if lambda.size() > self.max_degree || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert_with(UniPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> UniPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &UniPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> UniPoly {
        self.coeff(&Partition::empty())
    }

    /// Homogeneous component of degree `n`.
    pub fn component(&self, n: u32) -> Self {
        let mut f = Self::zero(self.max_degree);
        for (lambda, c) in &self.terms {
            if lambda.size() == n {
                f.add_term(lambda.clone(), c.clone());
            }
        }
        f
    }

    pub fn scale(&self, c: &UniPoly) -> Self {
        let mut f = Self::zero(self.max_degree);
        for (lambda, v) in &self.terms {
            f.add_term(lambda.clone(), v * c);
        }
        f
    }

    pub fn map_coeffs(&self, mut op: impl FnMut(&UniPoly) -> UniPoly) -> Self {
        let mut f = Self::zero(self.max_degree);
        for (lambda, v) in &self.terms {
            f.add_term(lambda.clone(), op(v));
        }
        f
    }

    /// `p_lambda -> (-1)^{|lambda| - l(lambda)} p_lambda`.
    pub fn omega(&self) -> Self {
        let mut f = Self::zero(self.max_degree);
        for (lambda, v) in &self.terms {
            let odd = (lambda.size() as usize - lambda.len()) % 2 == 1;
            f.add_term(lambda.clone(), if odd { -v } else { v.clone() });
        }
        f
    }

    pub fn eval_t(&self, t: &Rational) -> Self {
        self.map_coeffs(|v| UniPoly::constant(v.eval(t)))
    }

    /// Divides every coefficient by `1 - t`.
    pub fn divide_one_minus_t(&self) -> Result<Self> {
        let mut f = Self::zero(self.max_degree);
        for (lambda, v) in &self.terms {
            f.add_term(lambda.clone(), v.divide_exact(&UniPoly::one_minus_t())?);
        }
        Ok(f)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.max_degree), |acc, _| &acc * self)
    }

    /// `1 / (1 + self)` for `self` without constant term.
    pub fn one_plus_inverse(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(CoxError::ConstantTermInInner);
        }
        let mut acc = Self::one(self.max_degree);
        let mut power = Self::one(self.max_degree);
        let neg = -self;
        for _ in 0..self.max_degree {
            power = &power * &neg;
            acc = &acc + &power;
        }
        Ok(acc)
    }

    /// `d/dp_1`.
    pub fn dp1(&self) -> Self {
        let mut f = Self::zero(self.max_degree);
        for (lambda, v) in &self.terms {
            let m = lambda.ones();
            if let Some(rest) = lambda.remove_one() {
                f.add_term(rest, v.scale(&int(m as i64)));
            }
        }
        f
    }

    /// `p_d o self`: `p_k -> p_{dk}` and `t -> t^d`.
    pub fn adams(&self, d: u32) -> Self {
        let mut f = Self::zero(self.max_degree);
        for (lambda, v) in &self.terms {
            f.add_term(lambda.scale(d), v.inflate(d as usize));
        }
        f
    }

    /// `self o inner`; the coefficients of `self` are scalars for the outer
    /// substitution, while `t` inside `inner` is plethystic.
    pub fn plethysm(&self, inner: &SymFunc) -> Result<SymFunc> {
        if !inner.constant_term().is_zero() {
            return Err(CoxError::ConstantTermInInner);
        }
        let n = self.max_degree.min(inner.max_degree);
        let inner = inner.with_max_degree(n);
        let adams: Vec<SymFunc> = (0..=n).map(|d| if d == 0 { SymFunc::one(n) } else { inner.adams(d) }).collect();
        let mut cache: HashMap<Partition, SymFunc> = HashMap::new();
        cache.insert(Partition::empty(), SymFunc::one(n));
        let mut out = SymFunc::zero(n);
        for (lambda, c) in &self.terms {
            if lambda.size() > n {
                continue;
            }
            let image = power_plethysm(lambda, &adams, &mut cache);
            out = &out + &image.scale(c);
        }
        Ok(out)
    }
}

fn power_plethysm(lambda: &Partition, adams: &[SymFunc], cache: &mut HashMap<Partition, SymFunc>) -> SymFunc {
    if let Some(f) = cache.get(lambda) {
        return f.clone();
    }
    let parts = lambda.parts();
    let rest = Partition::new(parts[1..].to_vec());
    let tail = power_plethysm(&rest, adams, cache);
    let f = &adams[parts[0] as usize] * &tail;
    cache.insert(lambda.clone(), f.clone());
    f
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(lambda, c)| {
                if lambda.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*p{lambda}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl std::ops::Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut f = self.with_max_degree(self.max_degree.min(rhs.max_degree));
        for (lambda, c) in &rhs.terms {
            f.add_term(lambda.clone(), c.clone());
        }
        f
    }
}

impl std::ops::Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|v| -v)
    }
}

impl std::ops::Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let n = self.max_degree.min(rhs.max_degree);
        let mut f = SymFunc::zero(n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if a.size() + b.size() <= n {
                    f.add_term(a.merge(b), x * y);
                }
            }
        }
        f
    }
}

/// Classical Möbius function.
pub fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `Com = sum_{n >= 1} h_n`.
pub fn com(max_degree: u32) -> SymFunc {
    (1..=max_degree).fold(SymFunc::zero(max_degree), |acc, n| &acc + &SymFunc::h(n, max_degree))
}

/// `Lie_n = (1/n) sum_{d | n} mu(d) p_d^{n/d}`.
pub fn lie(n: u32, max_degree: u32) -> SymFunc {
    let mut f = SymFunc::zero(max_degree);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu != 0 {
            let lambda = Partition::new(vec![d; (n / d) as usize]);
            f.add_term(lambda, UniPoly::constant(Rational::new(mu.into(), n.into())));
        }
    }
    f
}

/// Sign convention for the suspended Lie series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Twist {
    /// `sum_n (-t)^{n-1} Lie_n`.
    Literal,
    /// `sum_n (-t)^{n-1} omega(Lie_n)`.
    Omega,
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Literal => "literal",
            Twist::Omega => "omega",
        })
    }
}

pub fn sigma_t_lie(twist: Twist, max_degree: u32) -> SymFunc {
    let mut f = SymFunc::zero(max_degree);
    for n in 1..=max_degree {
        let l = lie(n, max_degree);
        let l = match twist {
            Twist::Literal => l,
            Twist::Omega => l.omega(),
        };
        let sign = if n % 2 == 1 { 1 } else { -1 };
        f = &f + &l.scale(&UniPoly::monomial(int(sign), (n - 1) as usize));
    }
    f
}

/// Frobenius characteristic `sum_lambda chi(C_lambda) p_lambda / z_lambda`.
pub fn characteristic(values: &[(Partition, UniPoly)], max_degree: u32) -> SymFunc {
    let mut f = SymFunc::zero(max_degree);
    for (lambda, chi) in values {
        let z = Rational::from_integer(lambda.z());
        f.add_term(lambda.clone(), chi.scale(&(Rational::one() / z)));
    }
    f
}

/// Inverse of [`characteristic`] on the degree-`n` component.
pub fn class_function(f: &SymFunc, n: u32) -> Vec<(Partition, UniPoly)> {
    partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let z = Rational::from_integer(lambda.z());
            let v = f.coeff(&lambda).scale(&z);
            (lambda, v)
        })
        .collect()
}

/// `m^2 - m`, `m` the number of fixed points.
pub fn chi_r_type_a(lambda: &Partition) -> i64 {
    let m = lambda.ones() as i64;
    m * m - m
}
