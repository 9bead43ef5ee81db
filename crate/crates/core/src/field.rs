//! Exact arithmetic in `Q(√3)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational {0:?}")]
    Malformed(String),
}

/// `a + b√3` with rational `a`, `b` (always reduced, positive denominators).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt3 {
    a: BigRational,
    b: BigRational,
}

pub const SQRT3_F64: f64 = 1.732_050_807_568_877_2;

impl QSqrt3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    /// `a_num/a_den + (b_num/b_den)√3`.
    pub fn from_ratios(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        Self::new(ratio(a_num, a_den), ratio(b_num, b_den))
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::zero())
    }

    pub fn rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero())
    }

    /// `√3`.
    pub fn sqrt3() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// Exact: `a + b√3 = 0` iff `a = b = 0` because `√3` is irrational.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a - b√3`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 3b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(3.into()) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let norm = self.norm();
        Ok(Self::new(&self.a / &norm, -(&self.b / &norm)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.inverse()?)
    }

    /// Sign of the real number, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sb == 0 {
            return sa;
        }
        // Opposite signs: compare a² with 3b².
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(3.into()) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    /// Non-authoritative float view.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * SQRT3_F64
    }
}

fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn fmt_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::Malformed(s.to_string());
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})√3", self.b),
            (false, false) => write!(f, "{} + ({})√3", self.a, self.b),
        }
    }
}

/// Wire form: exact `"num/den"` strings plus a float view for humans.
#[derive(Serialize, Deserialize)]
struct QSqrt3Record {
    a: String,
    b: String,
    #[serde(default, skip_deserializing)]
    approx: f64,
}

impl Serialize for QSqrt3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QSqrt3Record {
            a: fmt_rational(&self.a),
            b: fmt_rational(&self.b),
            approx: self.to_f64(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSqrt3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = QSqrt3Record::deserialize(d)?;
        let a = parse_rational(&r.a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&r.b).map_err(serde::de::Error::custom)?;
        Ok(Self::new(a, b))
    }
}

impl Zero for QSqrt3 {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        QSqrt3::is_zero(self)
    }
}

impl One for QSqrt3 {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Add<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: &QSqrt3) -> QSqrt3 {
        let three = BigRational::from_integer(3.into());
        QSqrt3::new(
            &self.a * &o.a + three * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

/// Panics on division by zero; use [`QSqrt3::checked_div`] otherwise.
impl Div<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn div(self, o: &QSqrt3) -> QSqrt3 {
        self.checked_div(o).expect("division by zero in Q(√3)")
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, o: QSqrt3) -> QSqrt3 { (&self).$m(&o) }
        }
        impl $tr<&QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, o: &QSqrt3) -> QSqrt3 { (&self).$m(o) }
        }
        impl $tr<QSqrt3> for &QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, o: QSqrt3) -> QSqrt3 { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&QSqrt3> for QSqrt3 {
    fn add_assign(&mut self, o: &QSqrt3) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&QSqrt3> for QSqrt3 {
    fn sub_assign(&mut self, o: &QSqrt3) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl MulAssign<&QSqrt3> for QSqrt3 {
    fn mul_assign(&mut self, o: &QSqrt3) {
        *self = &*self * o;
    }
}

impl From<i64> for QSqrt3 {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}
