//! Scalar backends.
//!
//! Every numeric routine in the crate is generic over [`Field`], which has two
//! implementations:
//!
//! - [`QuadRational`]: exact arithmetic in a real quadratic field `Q(sqrt d)`.
//!   Rational `q` whose square root is irrational (`q = 1/2`, `q = 3/4`) still
//!   gets exact half-integer powers, and signs are decided exactly.
//! - [`BigFloat`]: binary floating point with a caller-chosen precision.
//!
//! Mixing the two inside one computation is impossible by construction. The
//! dynamically tagged [`Scalar`] is used at API boundaries (reports, CLI) and
//! rejects mixed-mode operations with [`Error::ModeMismatch`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu::base::{Abs, BitTest, SquareRoot, UnsignedAbs};
use dashu::float::round::mode::HalfEven;
use dashu::float::FBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = RBig;

/// Default number of significant decimal digits in float mode.
pub const DEFAULT_DIGITS: u32 = 50;

/// Extra binary digits carried beyond the requested decimal precision.
pub const GUARD_BITS: usize = 24;

/// Arithmetic mode of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Mode {
    Exact,
    Float { digits: u32 },
}

impl Mode {
    pub fn is_exact(self) -> bool {
        matches!(self, Mode::Exact)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float { digits } => write!(f, "float({digits})"),
        }
    }
}

/// Number field interface shared by the exact and floating backends.
///
/// Constants are produced from an existing value (`x.lift(..)`, `x.one()`) so
/// that float precision propagates without a global context.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn is_exact() -> bool;

    fn mode(&self) -> Mode;

    /// The rational `r` in the same context as `self`.
    fn lift(&self, r: &Rational) -> Self;

    fn int(&self, n: i64) -> Self {
        self.lift(&Rational::from(n))
    }

    fn ratio(&self, num: i64, den: i64) -> Self {
        self.lift(&(Rational::from(num) / Rational::from(den)))
    }

    fn zero(&self) -> Self {
        self.int(0)
    }

    fn one(&self) -> Self {
        self.int(1)
    }

    fn is_zero(&self) -> bool;

    /// -1, 0 or 1.
    fn signum(&self) -> i32;

    fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn powi(&self, n: i64) -> Self {
        if n < 0 {
            return self.one() / self.powi(-n);
        }
        let mut base = self.clone();
        let mut acc = self.one();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    fn to_f64(&self) -> f64;

    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;

    /// The value as a machine integer, when it is exactly one.
    fn as_integer(&self) -> Option<i64>;

    /// Unit roundoff of the representation; zero for exact values.
    fn epsilon(&self) -> Self;

    fn try_sqrt(&self) -> Result<Self>;

    fn try_exp(&self) -> Result<Self>;

    fn try_ln(&self) -> Result<Self>;

    fn to_scalar(&self) -> Scalar;

    /// Rational bounds `lo <= self <= hi` about `bits` bits wide.
    fn enclose_rational(&self, bits: usize) -> (Rational, Rational);

    fn max_with(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_with(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

fn rsign(r: &Rational) -> i32 {
    match r.cmp(&Rational::ZERO) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

// ---------------------------------------------------------------------------
// Exact backend
// ---------------------------------------------------------------------------

/// An element `rational + surd * sqrt(radicand)` of a real quadratic field.
///
/// `radicand` is squarefree; rational values carry `radicand == 1` and a zero
/// surd part. Operands from two different irrational fields cannot be
/// combined; doing so is an internal error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRational {
    rational: Rational,
    surd: Rational,
    radicand: u64,
}

impl QuadRational {
    pub fn from_rational(r: Rational) -> Self {
        QuadRational {
            rational: r,
            surd: Rational::ZERO,
            radicand: 1,
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    fn new(rational: Rational, surd: Rational, radicand: u64) -> Self {
        if surd.is_zero() || radicand == 1 {
            let rational = if radicand == 1 { rational + surd } else { rational };
            return Self::from_rational(rational);
        }
        QuadRational {
            rational,
            surd,
            radicand,
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        match rsign(r) {
            -1 => return Err(Error::Domain(format!("square root of negative value {r}"))),
            0 => return Ok(Self::from_i64(0)),
            _ => {}
        }
        // sqrt(n/m) = sqrt(n*m)/m
        let num = r.numerator().clone().unsigned_abs();
        let den = r.denominator().clone();
        let product = &num * &den;
        let (square_root, radicand) = squarefree_split(&product)?;
        let coeff = RBig::from_parts(IBig::from(square_root), den);
        Ok(Self::new(Rational::ZERO, coeff, radicand))
    }

    fn join(a: u64, b: u64) -> u64 {
        match (a, b) {
            (1, d) | (d, 1) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("values from incompatible fields Q(sqrt {x}) and Q(sqrt {y})"),
        }
    }

    fn conjugate(&self) -> Self {
        QuadRational {
            rational: self.rational.clone(),
            surd: -self.surd.clone(),
            radicand: self.radicand,
        }
    }

    /// `rational^2 - surd^2 * radicand`
    fn norm(&self) -> Rational {
        self.rational.sqr() - self.surd.sqr() * Rational::from(self.radicand)
    }

    fn sign(&self) -> i32 {
        let sa = rsign(&self.rational);
        let sb = rsign(&self.surd);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        if self.rational.sqr() > self.surd.sqr() * Rational::from(self.radicand) {
            sa
        } else {
            sb
        }
    }

    /// Rational bounds `lo <= self <= hi` with about `bits` significant bits.
    pub fn enclose(&self, bits: usize) -> (Rational, Rational) {
        if self.radicand == 1 {
            return (
                round_rational(&self.rational, bits, false),
                round_rational(&self.rational, bits, true),
            );
        }
        let scale_bits = bits + 8 + self.surd_magnitude_bits();
        let (root_lo, root_hi) = sqrt_bounds(self.radicand, scale_bits);
        let (lo, hi) = if rsign(&self.surd) > 0 {
            (
                self.rational.clone() + self.surd.clone() * root_lo,
                self.rational.clone() + self.surd.clone() * root_hi,
            )
        } else {
            (
                self.rational.clone() + self.surd.clone() * root_hi,
                self.rational.clone() + self.surd.clone() * root_lo,
            )
        };
        (round_rational(&lo, bits, false), round_rational(&hi, bits, true))
    }

    fn surd_magnitude_bits(&self) -> usize {
        let n = self.surd.numerator().clone().unsigned_abs().bit_len();
        let d = self.surd.denominator().bit_len();
        n.saturating_sub(d)
    }
}

/// Splits `n = s^2 * d` with `d` squarefree. Returns `(s, d)`.
fn squarefree_split(n: &UBig) -> Result<(UBig, u64)> {
    let root = n.sqrt();
    if &(&root * &root) == n {
        return Ok((root, 1));
    }
    let mut rest = n.clone();
    let mut square = UBig::ONE;
    let mut free = UBig::ONE;
    let mut p: u64 = 2;
    const TRIAL_LIMIT: u64 = 1 << 20;
    while p <= TRIAL_LIMIT && UBig::from(p) * UBig::from(p) <= rest {
        let bp = UBig::from(p);
        let mut count = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &bp;
        }
        if count % 2 == 1 {
            free *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > UBig::ONE {
        let r = rest.sqrt();
        if &r * &r == rest {
            square *= r;
        } else if UBig::from(TRIAL_LIMIT) * UBig::from(TRIAL_LIMIT) > rest {
            free *= rest;
        } else {
            return Err(Error::OffGrid(format!("square root of {n}: radicand too large to factor")));
        }
    }
    let free = u64::try_from(free)
        .map_err(|_| Error::OffGrid(format!("square root of {n}: radicand exceeds 64 bits")))?;
    Ok((square, free))
}

/// Integer-scaled bounds on `sqrt(d)`: `lo <= sqrt(d) <= hi` with `hi - lo = 2^-bits`.
fn sqrt_bounds(d: u64, bits: usize) -> (Rational, Rational) {
    let scaled = UBig::from(d) << (2 * bits);
    let root = scaled.sqrt();
    let den = UBig::ONE << bits;
    let lo = RBig::from_parts(IBig::from(root.clone()), den.clone());
    let hi = RBig::from_parts(IBig::from(root + UBig::ONE), den);
    (lo, hi)
}

/// Rounds `r` to a dyadic rational with roughly `bits` significant bits,
/// downward or upward.
pub fn round_rational(r: &Rational, bits: usize, up: bool) -> Rational {
    if r.is_zero() {
        return Rational::ZERO;
    }
    let n_bits = r.numerator().clone().unsigned_abs().bit_len() as isize;
    let d_bits = r.denominator().bit_len() as isize;
    let shift = bits as isize - (n_bits - d_bits);
    if r.denominator().is_one() && shift <= 0 && n_bits <= bits as isize {
        return r.clone();
    }
    let scaled = if shift >= 0 {
        r.clone() * Rational::from(IBig::ONE << shift as usize)
    } else {
        r.clone() / Rational::from(IBig::ONE << (-shift) as usize)
    };
    let int = if up { scaled.ceil() } else { scaled.floor() };
    if shift >= 0 {
        RBig::from_parts(int, UBig::ONE << shift as usize)
    } else {
        Rational::from(int << (-shift) as usize)
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numerator(), r.denominator())
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.rational, f)?;
        if self.radicand != 1 {
            write!(f, "+")?;
            fmt_rational(&self.surd, f)?;
            write!(f, "*sqrt({})", self.radicand)?;
        }
        Ok(())
    }
}

impl PartialOrd for QuadRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.radicand == 1 && other.radicand == 1 {
            return self.rational.partial_cmp(&other.rational);
        }
        Some((self.clone() - other).sign().cmp(&0))
    }
}

impl Add<&QuadRational> for QuadRational {
    type Output = QuadRational;
    fn add(self, rhs: &QuadRational) -> QuadRational {
        let d = Self::join(self.radicand, rhs.radicand);
        QuadRational::new(self.rational + &rhs.rational, self.surd + &rhs.surd, d)
    }
}

impl Sub<&QuadRational> for QuadRational {
    type Output = QuadRational;
    fn sub(self, rhs: &QuadRational) -> QuadRational {
        let d = Self::join(self.radicand, rhs.radicand);
        QuadRational::new(self.rational - &rhs.rational, self.surd - &rhs.surd, d)
    }
}

impl Mul<&QuadRational> for QuadRational {
    type Output = QuadRational;
    fn mul(self, rhs: &QuadRational) -> QuadRational {
        if rhs.radicand == 1 {
            return QuadRational::new(
                self.rational * &rhs.rational,
                self.surd * &rhs.rational,
                self.radicand,
            );
        }
        if self.radicand == 1 {
            return QuadRational::new(
                &self.rational * &rhs.rational,
                &self.rational * &rhs.surd,
                rhs.radicand,
            );
        }
        let d = Self::join(self.radicand, rhs.radicand);
        let rational = &self.rational * &rhs.rational
            + &self.surd * &rhs.surd * Rational::from(d);
        let surd = &self.rational * &rhs.surd + &self.surd * &rhs.rational;
        QuadRational::new(rational, surd, d)
    }
}

impl Div<&QuadRational> for QuadRational {
    type Output = QuadRational;
    fn div(self, rhs: &QuadRational) -> QuadRational {
        assert!(!rhs.is_zero_value(), "division by zero in exact arithmetic");
        if rhs.radicand == 1 {
            return QuadRational::new(
                self.rational / &rhs.rational,
                self.surd / &rhs.rational,
                self.radicand,
            );
        }
        let norm = rhs.norm();
        let num = self * &rhs.conjugate();
        QuadRational::new(num.rational / &norm, num.surd / &norm, num.radicand)
    }
}

impl QuadRational {
    fn is_zero_value(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl Neg for QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        QuadRational {
            rational: -self.rational,
            surd: -self.surd,
            radicand: self.radicand,
        }
    }
}

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self * &rhs
            }
        }
        impl Div for $t {
            type Output = $t;
            fn div(self, rhs: $t) -> $t {
                self / &rhs
            }
        }
    };
}

forward_owned_ops!(QuadRational);
forward_owned_ops!(BigFloat);

impl Field for QuadRational {
    fn is_exact() -> bool {
        true
    }

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn lift(&self, r: &Rational) -> Self {
        Self::from_rational(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }

    fn signum(&self) -> i32 {
        self.sign()
    }

    fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().value();
        if self.radicand == 1 {
            return a;
        }
        a + self.surd.to_f64().value() * (self.radicand as f64).sqrt()
    }

    fn to_rational(&self) -> Option<Rational> {
        (self.radicand == 1).then(|| self.rational.clone())
    }

    fn as_integer(&self) -> Option<i64> {
        let r = self.to_rational()?;
        if !r.is_int() {
            return None;
        }
        i64::try_from(r.numerator().clone()).ok()
    }

    fn epsilon(&self) -> Self {
        Self::from_i64(0)
    }

    fn try_sqrt(&self) -> Result<Self> {
        match self.to_rational() {
            Some(r) => Self::sqrt_of(&r),
            None => Err(Error::ExactUnsupported("sqrt of a quadratic irrational")),
        }
    }

    fn try_exp(&self) -> Result<Self> {
        if self.is_zero_value() {
            return Ok(Self::from_i64(1));
        }
        Err(Error::ExactUnsupported("exp"))
    }

    fn try_ln(&self) -> Result<Self> {
        if self.to_rational().is_some_and(|r| r.is_one()) {
            return Ok(Self::from_i64(0));
        }
        Err(Error::ExactUnsupported("ln"))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Exact(self.clone())
    }

    fn enclose_rational(&self, bits: usize) -> (Rational, Rational) {
        self.enclose(bits)
    }
}

// ---------------------------------------------------------------------------
// Float backend
// ---------------------------------------------------------------------------

type Repr = FBig<HalfEven, 2>;

/// Arbitrary-precision binary float. Arithmetic results carry the larger of
/// the operand precisions.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct BigFloat(Repr);

/// Binary precision used for `digits` significant decimal digits.
pub fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
}

impl BigFloat {
    pub fn from_rational(r: &Rational, bits: usize) -> Self {
        BigFloat(r.to_float::<HalfEven, 2>(bits.max(2)).value())
    }

    pub fn from_i64(n: i64, bits: usize) -> Self {
        Self::from_rational(&Rational::from(n), bits)
    }

    /// Exact conversion of an `f64`, then widened to `bits`.
    pub fn from_f64(x: f64, bits: usize) -> Result<Self> {
        let r = Repr::try_from(x).map_err(|_| Error::Domain(format!("non-finite float {x}")))?;
        Ok(BigFloat(r.with_precision(bits).value()))
    }

    pub fn with_digits(r: &Rational, digits: u32) -> Self {
        Self::from_rational(r, bits_for_digits(digits))
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    /// Approximate significant decimal digits carried.
    pub fn digits(&self) -> u32 {
        ((self.precision().saturating_sub(GUARD_BITS)) as f64 / std::f64::consts::LOG2_10).floor()
            as u32
    }

    pub fn inner(&self) -> &FBig<HalfEven, 2> {
        &self.0
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.repr().is_zero() {
            return write!(f, "0");
        }
        let digits = (self.precision() as f64 / std::f64::consts::LOG2_10).floor() as usize;
        let dec = self.0.clone().with_base_and_precision::<10>(digits.max(1)).value();
        write!(f, "{dec}")
    }
}

impl Add<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        BigFloat(self.0 + &rhs.0)
    }
}

impl Sub<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        BigFloat(self.0 - &rhs.0)
    }
}

impl Mul<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        BigFloat(self.0 * &rhs.0)
    }
}

impl Div<&BigFloat> for BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.0.repr().is_zero(), "division by zero in float arithmetic");
        BigFloat(self.0 / &rhs.0)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

impl Field for BigFloat {
    fn is_exact() -> bool {
        false
    }

    fn mode(&self) -> Mode {
        Mode::Float {
            digits: self.digits(),
        }
    }

    fn lift(&self, r: &Rational) -> Self {
        Self::from_rational(r, self.precision())
    }

    fn is_zero(&self) -> bool {
        self.0.repr().is_zero()
    }

    fn signum(&self) -> i32 {
        match self.0.partial_cmp(&Repr::ZERO) {
            Some(Ordering::Less) => -1,
            Some(Ordering::Greater) => 1,
            _ => 0,
        }
    }

    fn abs(&self) -> Self {
        BigFloat(self.0.clone().abs())
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    fn to_rational(&self) -> Option<Rational> {
        let (significand, exponent) = self.0.repr().clone().into_parts();
        let r = if exponent >= 0 {
            Rational::from(significand << exponent as usize)
        } else {
            RBig::from_parts(significand, UBig::ONE << (-exponent) as usize)
        };
        Some(r)
    }

    fn as_integer(&self) -> Option<i64> {
        if !self.0.repr().is_int() {
            return None;
        }
        let r = self.to_rational()?;
        i64::try_from(r.numerator().clone()).ok()
    }

    fn epsilon(&self) -> Self {
        let e = RBig::from_parts(IBig::ONE, UBig::ONE << self.precision());
        self.lift(&e)
    }

    fn try_sqrt(&self) -> Result<Self> {
        if self.signum() < 0 {
            return Err(Error::Domain(format!("square root of negative value {self}")));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(BigFloat(self.0.sqrt()))
    }

    fn try_exp(&self) -> Result<Self> {
        Ok(BigFloat(self.0.exp()))
    }

    fn try_ln(&self) -> Result<Self> {
        if self.signum() <= 0 {
            return Err(Error::Domain(format!("logarithm of nonpositive value {self}")));
        }
        Ok(BigFloat(self.0.ln()))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Float(self.clone())
    }

    fn enclose_rational(&self, _bits: usize) -> (Rational, Rational) {
        let r = self.to_rational().expect("binary floats are rational");
        (r.clone(), r)
    }
}

// ---------------------------------------------------------------------------
// Dynamically tagged scalar
// ---------------------------------------------------------------------------

/// A value tagged with its arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(QuadRational),
    Float(BigFloat),
}

macro_rules! checked_op {
    ($name:ident, $op:tt, $sym:literal) => {
        pub fn $name(&self, rhs: &Scalar) -> Result<Scalar> {
            match (self, rhs) {
                (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.clone() $op b)),
                (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a.clone() $op b)),
                _ => Err(Error::ModeMismatch(format!(
                    "{} {} {}",
                    self.mode(),
                    $sym,
                    rhs.mode()
                ))),
            }
        }
    };
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(x) => x.mode(),
            Scalar::Float(x) => x.mode(),
        }
    }

    /// Builds a scalar from a rational in the given mode.
    pub fn from_rational(r: &Rational, mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Exact(QuadRational::from_rational(r.clone())),
            Mode::Float { digits } => Scalar::Float(BigFloat::with_digits(r, digits)),
        }
    }

    checked_op!(try_add, +, "+");
    checked_op!(try_sub, -, "-");
    checked_op!(try_mul, *, "*");

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        let zero = match rhs {
            Scalar::Exact(b) => b.is_zero(),
            Scalar::Float(b) => b.is_zero(),
        };
        if zero && self.mode() == rhs.mode() {
            return Err(Error::Domain("division by zero".into()));
        }
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.clone() / b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a.clone() / b)),
            _ => Err(Error::ModeMismatch(format!("{} / {}", self.mode(), rhs.mode()))),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(x) => x.to_f64(),
            Scalar::Float(x) => x.to_f64(),
        }
    }

    pub fn as_exact(&self) -> Option<&QuadRational> {
        match self {
            Scalar::Exact(x) => Some(x),
            Scalar::Float(_) => None,
        }
    }

    pub fn as_float(&self) -> Option<&BigFloat> {
        match self {
            Scalar::Float(x) => Some(x),
            Scalar::Exact(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(x) => write!(f, "{x}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `"n/d"`, an integer, or a decimal literal (`"0.25"`, `"-1.5e-3"`)
/// into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = IBig::from_str(n.trim()).map_err(|_| bad())?;
        let d = UBig::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(RBig::from_parts(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let value = UBig::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = UBig::from(10u8);
    let mut r = if scale >= 0 {
        Rational::from(value * ten.pow(scale as usize))
    } else {
        RBig::from_parts(IBig::from(value), ten.pow((-scale) as usize))
    };
    if negative {
        r = -r;
    }
    Ok(r)
}
