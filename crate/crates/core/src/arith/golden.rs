use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rational, Rational};

/// An element `a + b*phi` of `Q(sqrt 5)`, with `phi^2 = phi + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    pub a: Rational,
    pub b: Rational,
}

impl GoldenNumber {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(super::int(n), Rational::zero())
    }

    pub fn phi() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, `phi -> 1 - phi`.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.a + &self.b, -self.b.clone())
    }

    /// Field norm `a^2 + ab - b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign of the real value `a + b(1 + sqrt 5)/2`.
    pub fn signum(&self) -> Ordering {
        // 2 * value = x + y sqrt 5 with x = 2a + b, y = b
        let x: Rational = &self.a + &self.a + &self.b;
        let y = &self.b;
        let sx = x.cmp(&Rational::zero());
        let sy = y.cmp(&Rational::zero());
        match (sx, sy) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (sx, _) => {
                // mixed signs: |x| vs |y| sqrt 5
                let lhs = &x * &x;
                let rhs = y * y * super::int(5);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sx,
                    Ordering::Less => sx.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self::new(c.a / &n, c.b / &n))
    }

    /// Floating approximation, for display and test oracles only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * phi
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by real value.
impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*phi", self.b);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}*phi", self.a, sign, self.b.abs())
    }
}

impl GoldenNumber {
    /// JSON form: `"a/b"` strings for both components.
    pub fn to_json_pair(&self) -> (String, String) {
        (format_rational(&self.a), format_rational(&self.b))
    }
}

impl<'a> Add<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, o: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, o: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, o: &GoldenNumber) -> GoldenNumber {
        // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        let bd = &self.b * &o.b;
        GoldenNumber::new(
            &self.a * &o.a + &bd,
            &self.a * &o.b + &self.b * &o.a + bd,
        )
    }
}

impl<'a> Div<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &GoldenNumber) -> GoldenNumber {
        self * &o.inverse().expect("division by zero in Q(phi)")
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GoldenNumber {
            type Output = GoldenNumber;
            fn $m(self, o: GoldenNumber) -> GoldenNumber {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GoldenNumber {
        GoldenNumber::new(int(a), int(b))
    }

    fn arb_golden() -> impl Strategy<Value = GoldenNumber> {
        (-50i64..50, 1i64..8, -50i64..50, 1i64..8)
            .prop_map(|(a, da, b, db)| GoldenNumber::new(rat(a, da), rat(b, db)))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenNumber::phi();
        assert_eq!(&phi * &phi, &phi + &GoldenNumber::from_int(1));
    }

    #[test]
    fn inverse_and_norm() {
        let x = g(2, 3);
        assert_eq!(&x * &x.inverse().unwrap(), GoldenNumber::from_int(1));
        assert_eq!(GoldenNumber::phi().norm(), int(-1));
        assert!(GoldenNumber::default().inverse().is_none());
    }

    #[test]
    fn sign_edge_cases() {
        assert_eq!(g(0, 0).signum(), Ordering::Equal);
        assert_eq!(g(-1, 1).signum(), Ordering::Greater); // phi - 1
        assert_eq!(g(2, -1).signum(), Ordering::Greater); // 2 - phi
        assert_eq!(g(1, -1).signum(), Ordering::Less); // 1 - phi
        assert_eq!(g(-2, 1).signum(), Ordering::Less); // phi - 2
        assert_eq!(GoldenNumber::new(rat(-1, 2), int(0)).signum(), Ordering::Less);
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_golden(), y in arb_golden(), z in arb_golden()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
        }
    }

    #[test]
    fn sign_agrees_with_float_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        let sqrt5 = 5f64.sqrt();
        for _ in 0..10_000 {
            let a = rng.gen_range(-1000i64..1000);
            let b = rng.gen_range(-1000i64..1000);
            let value = a as f64 + b as f64 * (1.0 + sqrt5) / 2.0;
            let expected = if value > 0.0 {
                Ordering::Greater
            } else if value < 0.0 {
                Ordering::Less
            } else {
                Ordering::Equal
            };
            assert_eq!(g(a, b).signum(), expected, "a={a} b={b}");
        }
    }
}
