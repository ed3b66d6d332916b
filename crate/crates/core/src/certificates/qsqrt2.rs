//! Exact arithmetic in the field `ℚ(√2)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// `p + q√2` with rational `p`, `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub p: BigRational,
    pub q: BigRational,
}

/// Rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QSqrt2 {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        QSqrt2 { p, q }
    }

    /// `(pn/pd) + (qn/qd)√2`.
    pub fn from_fracs(pn: i64, pd: i64, qn: i64, qd: i64) -> Self {
        QSqrt2::new(rat(pn, pd), rat(qn, qd))
    }

    pub fn int(n: i64) -> Self {
        QSqrt2::new(rat(n, 1), BigRational::zero())
    }

    pub fn rational(r: BigRational) -> Self {
        QSqrt2::new(r, BigRational::zero())
    }

    pub fn zero() -> Self {
        QSqrt2::int(0)
    }

    pub fn one() -> Self {
        QSqrt2::int(1)
    }

    pub fn sqrt2() -> Self {
        QSqrt2::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `p − q√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2::new(self.p.clone(), -self.q.clone())
    }

    /// `p² − 2q²`, the field norm.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - rat(2, 1) * &self.q * &self.q
    }

    /// Exact sign in `{−1, 0, 1}`.
    pub fn sign(&self) -> i32 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sp == sq || sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        // Opposite signs: |p| vs |q|√2, i.e. p² vs 2q².
        match (&self.p * &self.p).cmp(&(rat(2, 1) * &self.q * &self.q)) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.sign() >= 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QSqrt2::new(c.p / &n, c.q / n))
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * std::f64::consts::SQRT_2
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&QSqrt2> for &QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: &QSqrt2) -> QSqrt2 {
                let f: fn(&QSqrt2, &QSqrt2) -> QSqrt2 = $body;
                f(self, o)
            }
        }
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: QSqrt2) -> QSqrt2 {
                (&self).$m(&o)
            }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: &QSqrt2) -> QSqrt2 {
                (&self).$m(o)
            }
        }
        impl $tr<QSqrt2> for &QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: QSqrt2) -> QSqrt2 {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| QSqrt2::new(&a.p + &b.p, &a.q + &b.q));
forward_binop!(Sub, sub, |a, b| QSqrt2::new(&a.p - &b.p, &a.q - &b.q));
forward_binop!(Mul, mul, |a, b| QSqrt2::new(
    &a.p * &b.p + rat(2, 1) * &a.q * &b.q,
    &a.p * &b.q + &a.q * &b.p
));
forward_binop!(Div, div, |a, b| a * &b
    .recip()
    .expect("division by zero in Q(sqrt 2)"));

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.p, -self.q)
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.p.clone(), -self.q.clone())
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "{}√2", self.q),
            (false, false) if self.q.is_negative() => {
                write!(f, "{} - {}√2", self.p, -self.q.clone())
            }
            (false, false) => write!(f, "{} + {}√2", self.p, self.q),
        }
    }
}

impl Serialize for QSqrt2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QSqrt2", 3)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("q", &self.q.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(pn: i64, pd: i64, qn: i64, qd: i64) -> QSqrt2 {
        QSqrt2::from_fracs(pn, pd, qn, qd)
    }

    #[test]
    fn examples() {
        let r2 = QSqrt2::sqrt2();
        assert_eq!(&r2 * &r2, QSqrt2::int(2));
        assert_eq!(q(-4, 1, 3, 1).sign(), 1);
        assert_eq!(q(10, 1, -3, 1) * q(10, 1, 3, 1), QSqrt2::int(82));
        assert_eq!(q(3, 1, -3, 2).sign(), 1);
        assert_eq!(q(-3, 1, 2, 1).sign(), -1);
        assert_eq!(QSqrt2::zero().sign(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(q(2, 3, -1, 2).to_string(), "2/3 - 1/2√2");
        assert_eq!(QSqrt2::sqrt2().to_string(), "1√2");
        assert_eq!(QSqrt2::int(5).to_string(), "5");
    }

    fn arb() -> impl Strategy<Value = QSqrt2> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| q(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            if !x.is_zero() {
                prop_assert_eq!(&x * x.recip().unwrap(), QSqrt2::one());
            }
        }

        #[test]
        fn sign_matches_float(x in arb()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.sign(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn order_is_consistent(x in arb(), y in arb()) {
            prop_assert_eq!(x < y, (&y - &x).sign() > 0);
            prop_assert_eq!(x.clone().max(y.clone()) >= y, true);
        }
    }
}
