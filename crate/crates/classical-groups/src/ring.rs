//! Exact scalar arithmetic.
//!
//! Everything downstream is generic over [`Ring`]: arbitrary-precision
//! integers and rationals, modular integers Z/m (m composite allowed),
//! dual numbers R[t]/(t²), and tangent elements carrying a whole vector
//! of first-order directions at once. No floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// Commutative unital ring, element-level interface.
///
/// `inv` returns `None` on non-units instead of panicking: Z/m with
/// composite m is a legitimate instance and its zero divisors must be
/// reported, not crashed on.
pub trait Ring: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn is_unit(&self) -> bool {
        self.inv().is_some()
    }

    fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

/// Marker for rings in which every nonzero element is a unit.
pub trait Field: Ring {
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// All elements, for finite fields; `None` when the field is infinite.
    fn enumerate() -> Option<Vec<Self>> {
        None
    }

    /// `Some(true)` iff the element is a square; `None` when undecidable.
    fn is_square(&self) -> Option<bool> {
        Self::enumerate().map(|all| all.iter().any(|x| x.mul(x) == *self))
    }

    /// Canonical representative of the class in K*/(K*)²: `1` for squares,
    /// a fixed nonsquare otherwise (squarefree part over ℚ). `None` when
    /// undecidable, and `0` stays `0`.
    fn square_class(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.is_square()? {
            return Some(Self::one());
        }
        let all = Self::enumerate()?;
        all.into_iter().find(|x| !x.is_zero() && x.is_square() == Some(false))
    }
}

/// Arbitrary-precision integers.
pub type Int = BigInt;

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        if self.abs() == One::one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

/// Arbitrary-precision rationals, always in lowest terms with positive
/// denominator (the `num` invariant).
pub type Rat = BigRational;

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {
    fn is_square(&self) -> Option<bool> {
        use num::Signed;
        if self.numer().is_negative() {
            return Some(false);
        }
        let square = |n: &BigInt| {
            let r = n.sqrt();
            &r * &r == *n
        };
        Some(square(self.numer()) && square(self.denom()))
    }

    fn square_class(&self) -> Option<Self> {
        use num::Signed;
        // p/q and p*q are in the same class; return its squarefree part
        let mut n = self.numer() * self.denom();
        if n == BigInt::from(0) {
            return Some(<Self as Ring>::zero());
        }
        let mut d = BigInt::from(2);
        while &d * &d <= n.clone().abs() {
            let dd = &d * &d;
            while (&n % &dd) == BigInt::from(0) {
                n /= &dd;
            }
            d += 1;
        }
        Some(BigRational::from(n))
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Z/M. The modulus is a const generic so `zero`/`one` need no context.
/// M need not be prime; inversion reports non-units via `None`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Zmod<const M: u64> {
    value: u64,
}

impl<const M: u64> Zmod<M> {
    pub fn new(v: i64) -> Self {
        let m = M as i64;
        Zmod {
            value: v.rem_euclid(m) as u64,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// All M elements, in order.
    pub fn all() -> Vec<Self> {
        (0..M).map(|v| Zmod { value: v }).collect()
    }

    /// All units of Z/M.
    pub fn units() -> Vec<Self> {
        Self::all().into_iter().filter(|x| x.is_unit()).collect()
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl<const M: u64> Ring for Zmod<M> {
    fn zero() -> Self {
        Zmod { value: 0 }
    }
    fn one() -> Self {
        Zmod { value: 1 % M }
    }
    fn add(&self, other: &Self) -> Self {
        Zmod {
            value: (self.value + other.value) % M,
        }
    }
    fn neg(&self) -> Self {
        Zmod {
            value: (M - self.value) % M,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Zmod {
            value: (self.value as u128 * other.value as u128 % M as u128) as u64,
        }
    }
    fn inv(&self) -> Option<Self> {
        let (g, x, _) = ext_gcd(self.value as i64, M as i64);
        if g == 1 || g == -1 {
            Some(Zmod::new(x * g.signum()))
        } else {
            None
        }
    }
    fn from_int(n: i64) -> Self {
        Zmod::new(n)
    }
}

impl<const M: u64> fmt::Display for Zmod<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub type F2 = Zmod<2>;
pub type F3 = Zmod<3>;
pub type F5 = Zmod<5>;
pub type F7 = Zmod<7>;

macro_rules! zmod_field {
    ($($m:literal),*) => {$(
        impl Field for Zmod<$m> {
            fn enumerate() -> Option<Vec<Self>> {
                Some(Self::all())
            }
        }
    )*};
}
zmod_field!(2, 3, 5, 7);

/// Dual numbers R[t]/(t²): a + t·b.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dual<R: Ring> {
    pub re: R,
    pub d: R,
}

impl<R: Ring> Dual<R> {
    pub fn new(re: R, d: R) -> Self {
        Dual { re, d }
    }

    pub fn constant(re: R) -> Self {
        Dual {
            re,
            d: R::zero(),
        }
    }

    /// The generator t.
    pub fn t() -> Self {
        Dual {
            re: R::zero(),
            d: R::one(),
        }
    }
}

impl<R: Ring> Ring for Dual<R> {
    fn zero() -> Self {
        Dual::constant(R::zero())
    }
    fn one() -> Self {
        Dual::constant(R::one())
    }
    fn add(&self, other: &Self) -> Self {
        Dual {
            re: self.re.add(&other.re),
            d: self.d.add(&other.d),
        }
    }
    fn neg(&self) -> Self {
        Dual {
            re: self.re.neg(),
            d: self.d.neg(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Dual {
            re: self.re.mul(&other.re),
            d: self.re.mul(&other.d).add(&self.d.mul(&other.re)),
        }
    }
    fn inv(&self) -> Option<Self> {
        // (a + tb)^-1 = a^-1 - t a^-2 b
        let ai = self.re.inv()?;
        Some(Dual {
            re: ai.clone(),
            d: ai.mul(&ai).mul(&self.d).neg(),
        })
    }
    fn from_int(n: i64) -> Self {
        Dual::constant(R::from_int(n))
    }
}

impl<R: Ring> fmt::Display for Dual<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + t*{}", self.re, self.d)
    }
}

/// First-order jet with several tangent directions:
/// (r, ℓ) · (r', ℓ') = (r r', r ℓ' + r' ℓ), every product of two
/// linear parts vanishes. Linear parts of different lengths are
/// compared and combined as if padded with zeros, so `zero`/`one`
/// need no dimension context.
#[derive(Clone, Debug)]
pub struct Tangent<R: Ring> {
    pub base: R,
    pub lin: Vec<R>,
}

impl<R: Ring> Tangent<R> {
    pub fn new(base: R, lin: Vec<R>) -> Self {
        let mut t = Tangent { base, lin };
        t.trim();
        t
    }

    pub fn constant(base: R) -> Self {
        Tangent { base, lin: vec![] }
    }

    /// The k-th tangent direction: 0 + t_k.
    pub fn direction(k: usize) -> Self {
        let mut lin = vec![R::zero(); k + 1];
        lin[k] = R::one();
        Tangent {
            base: R::zero(),
            lin,
        }
    }

    pub fn lin_coeff(&self, k: usize) -> R {
        self.lin.get(k).cloned().unwrap_or_else(R::zero)
    }

    fn trim(&mut self) {
        while self.lin.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.lin.pop();
        }
    }
}

impl<R: Ring> PartialEq for Tangent<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.base != other.base {
            return false;
        }
        let n = self.lin.len().max(other.lin.len());
        (0..n).all(|k| self.lin_coeff(k) == other.lin_coeff(k))
    }
}

impl<R: Ring> Eq for Tangent<R> {}

impl<R: Ring> std::hash::Hash for Tangent<R> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.base.hash(state);
        let last = (0..self.lin.len()).rev().find(|&k| !self.lin[k].is_zero());
        if let Some(last) = last {
            self.lin[..=last].hash(state);
        }
    }
}

impl<R: Ring> Ring for Tangent<R> {
    fn zero() -> Self {
        Tangent::constant(R::zero())
    }
    fn one() -> Self {
        Tangent::constant(R::one())
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.lin.len().max(other.lin.len());
        let lin = (0..n)
            .map(|k| self.lin_coeff(k).add(&other.lin_coeff(k)))
            .collect();
        Tangent::new(self.base.add(&other.base), lin)
    }
    fn neg(&self) -> Self {
        Tangent {
            base: self.base.neg(),
            lin: self.lin.iter().map(|c| c.neg()).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let n = self.lin.len().max(other.lin.len());
        let lin = (0..n)
            .map(|k| {
                self.base
                    .mul(&other.lin_coeff(k))
                    .add(&other.base.mul(&self.lin_coeff(k)))
            })
            .collect();
        Tangent::new(self.base.mul(&other.base), lin)
    }
    fn inv(&self) -> Option<Self> {
        let bi = self.base.inv()?;
        let bi2 = bi.mul(&bi);
        Some(Tangent::new(
            bi,
            self.lin.iter().map(|c| bi2.mul(c).neg()).collect(),
        ))
    }
    fn from_int(n: i64) -> Self {
        Tangent::constant(R::from_int(n))
    }
}

impl<R: Ring> fmt::Display for Tangent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for (k, c) in self.lin.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " + {}*t{}", c, k)?;
            }
        }
        Ok(())
    }
}

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}
