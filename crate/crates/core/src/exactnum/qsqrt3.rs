use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::Rational;
use crate::{Error, Result};

/// An element `u + v·√3` of the field ℚ(√3).
///
/// √3 is irrational, so the pair `(u, v)` is unique and equality is
/// componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    u: Rational,
    v: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl QSqrt3 {
    pub fn new(u: Rational, v: Rational) -> Self {
        QSqrt3 { u, v }
    }

    pub fn from_rational(u: Rational) -> Self {
        QSqrt3 { u, v: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// √3 itself.
    pub fn sqrt3() -> Self {
        QSqrt3 { u: Rational::zero(), v: Rational::one() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.u
    }

    pub fn sqrt3_part(&self) -> &Rational {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QSqrt3 { u: self.u.clone(), v: -&self.v }
    }

    /// u² − 3v², the product of the element with its conjugate.
    pub fn norm(&self) -> Rational {
        self.u.square() - Rational::from(3i64) * self.v.square()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QSqrt3 { u: &self.u * k, v: &self.v * k }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let inv = norm.recip()?;
        Ok(self.conjugate().scale(&inv))
    }

    pub fn checked_div(&self, rhs: &QSqrt3) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// One entry point for the four field operations.
    pub fn arith(lhs: &QSqrt3, rhs: &QSqrt3, op: ArithOp) -> Result<QSqrt3> {
        match op {
            ArithOp::Add => Ok(lhs + rhs),
            ArithOp::Sub => Ok(lhs - rhs),
            ArithOp::Mul => Ok(lhs * rhs),
            ArithOp::Div => lhs.checked_div(rhs),
        }
    }

    /// Exact sign of the real number `u + v√3`.
    ///
    /// When the two parts disagree in sign the larger of u² and 3v² wins;
    /// they can only tie at zero.
    pub fn sign(&self) -> i8 {
        let su = self.u.signum();
        let sv = self.v.signum();
        if su == 0 {
            return sv;
        }
        if sv == 0 || su == sv {
            return su;
        }
        let u2 = self.u.square();
        let v2 = Rational::from(3i64) * self.v.square();
        match u2.cmp(&v2) {
            std::cmp::Ordering::Greater => su,
            std::cmp::Ordering::Less => sv,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// `Some(u)` when the √3 part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.v.is_zero().then_some(&self.u)
    }
}

impl From<Rational> for QSqrt3 {
    fn from(u: Rational) -> Self {
        QSqrt3::from_rational(u)
    }
}

impl From<i64> for QSqrt3 {
    fn from(n: i64) -> Self {
        QSqrt3::from_rational(Rational::from(n))
    }
}

impl Add<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 { u: plus(&self.u, &rhs.u), v: plus(&self.v, &rhs.v) }
    }
}

impl Sub<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 { u: minus(&self.u, &rhs.u), v: minus(&self.v, &rhs.v) }
    }
}

impl Mul<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        let vv = product(&self.v, &rhs.v).map(|p| Rational::from(3i64) * p);
        let u = sum(product(&self.u, &rhs.u), vv);
        let v = sum(product(&self.u, &rhs.v), product(&self.v, &rhs.u));
        QSqrt3 { u, v }
    }
}

// Many coordinates are purely rational or purely irrational; skipping zero
// terms avoids needless bignum work.
fn product(a: &Rational, b: &Rational) -> Option<Rational> {
    (!a.is_zero() && !b.is_zero()).then(|| a * b)
}

fn plus(a: &Rational, b: &Rational) -> Rational {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => b.clone(),
        (_, true) => a.clone(),
        _ => a + b,
    }
}

fn minus(a: &Rational, b: &Rational) -> Rational {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => -b,
        (_, true) => a.clone(),
        _ => a - b,
    }
}

fn sum(a: Option<Rational>, b: Option<Rational>) -> Rational {
    match (a, b) {
        (Some(a), Some(b)) => a + b,
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => Rational::zero(),
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: QSqrt3) -> QSqrt3 {
        &self + &rhs
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: QSqrt3) -> QSqrt3 {
        &self - &rhs
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: QSqrt3) -> QSqrt3 {
        &self * &rhs
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 { u: -&self.u, v: -&self.v }
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        -&self
    }
}

/// `u + v*sqrt3`, each part in rational text form.
impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt3", self.u, self.v)
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QSqrt3 {
    type Err = Error;

    /// Accepts `u + v*sqrt3`, a bare rational `u`, or a bare `v*sqrt3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_surd = |part: &str| -> Result<Rational> {
            part.trim()
                .strip_suffix("*sqrt3")
                .ok_or_else(|| Error::Parse(format!("malformed sqrt3 term in {s:?}")))?
                .parse()
        };
        if let Some((u, v)) = s.split_once(" + ") {
            return Ok(QSqrt3::new(u.parse()?, parse_surd(v)?));
        }
        if s.ends_with("*sqrt3") {
            return Ok(QSqrt3::new(Rational::zero(), parse_surd(s)?));
        }
        Ok(QSqrt3::from_rational(s.parse()?))
    }
}
