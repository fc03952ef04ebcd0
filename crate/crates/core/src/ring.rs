//! Exact arithmetic in `Z[ω]`, `ω = exp(iπ/4)`, and in its `1/√2` localization.
//!
//! Elements are stored in the power basis `(1, ω, ω², ω³)` with arbitrary
//! precision coordinates. Since `ω⁴ = -1`, a product is a negacyclic
//! convolution of the coordinate vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + bω + cω² + dω³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycloElem {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl CycloElem {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self { a: n.into(), ..Self::default() }
    }

    /// `re + im·i`, with `i = ω²`.
    pub fn gaussian(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { a: re.into(), c: im.into(), ..Self::default() }
    }

    pub fn omega() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 0, 1, 0)
    }

    /// `√2 = ω - ω³`.
    pub fn sqrt2() -> Self {
        Self::new(0, 1, 0, -1)
    }

    /// `ω^j` for any integer `j`.
    pub fn omega_pow(j: i64) -> Self {
        let j = j.rem_euclid(8) as usize;
        let sign = if j >= 4 { -1 } else { 1 };
        let mut coords = [0i64; 4];
        coords[j % 4] = sign;
        Self::new(coords[0], coords[1], coords[2], coords[3])
    }

    pub fn coords(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Complex conjugation: `ω ↦ ω⁻¹ = -ω³`.
    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.d, c: -&self.c, d: -&self.b }
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.b == -&self.d
    }

    /// Multiplies by `ω^j`. This only permutes and negates coordinates.
    pub fn mul_omega_pow(&self, j: i64) -> Self {
        let mut out = [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()];
        for _ in 0..j.rem_euclid(8) {
            let [a, b, c, d] = out;
            out = [-d, a, b, c];
        }
        let [a, b, c, d] = out;
        Self { a, b, c, d }
    }

    /// Multiplies by `√2`.
    pub fn mul_sqrt2(&self) -> Self {
        Self { a: &self.b - &self.d, b: &self.a + &self.c, c: &self.b + &self.d, d: &self.c - &self.a }
    }

    pub fn is_divisible_by_sqrt2(&self) -> bool {
        (&self.a + &self.c).is_even() && (&self.b + &self.d).is_even()
    }

    /// Exact division by `√2`, i.e. multiplication by `√2 / 2`.
    pub fn sqrt2_divide(&self) -> Result<Self> {
        if !self.is_divisible_by_sqrt2() {
            return Err(Error::NotDivisible);
        }
        let doubled = self.mul_sqrt2();
        Ok(Self { a: doubled.a / 2, b: doubled.b / 2, c: doubled.c / 2, d: doubled.d / 2 })
    }

    /// Returns the rational integer `x / √2^k`, failing when it is not one.
    pub fn integer_over_sqrt2_power(&self, k: u32) -> Result<BigInt> {
        let mut x = self.clone();
        for _ in 0..k {
            x = x.sqrt2_divide().map_err(|_| Error::NotRealInteger)?;
        }
        if x.b.is_zero() && x.c.is_zero() && x.d.is_zero() {
            Ok(x.a)
        } else {
            Err(Error::NotRealInteger)
        }
    }

    /// Squared modulus as an element of `Z[√2]`: `conj(x)·x`.
    pub fn norm_sq(&self) -> Self {
        self.conj() * self
    }

    /// `Some(j)` when `self = ω^j`.
    pub fn as_omega_power(&self) -> Option<u8> {
        (0..8u8).find(|&j| *self == Self::omega_pow(j as i64))
    }

    /// Largest coordinate bit length, used for diagnostics.
    pub fn bits(&self) -> u64 {
        self.coords().iter().map(|x| x.bits()).max().unwrap_or(0)
    }
}

impl From<i64> for CycloElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        CycloElem { a: &self.a + &rhs.a, b: &self.b + &rhs.b, c: &self.c + &rhs.c, d: &self.d + &rhs.d }
    }
}

impl Add for CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: CycloElem) -> CycloElem {
        &self + &rhs
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        CycloElem { a: &self.a - &rhs.a, b: &self.b - &rhs.b, c: &self.c - &rhs.c, d: &self.d - &rhs.d }
    }
}

impl Sub for CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: CycloElem) -> CycloElem {
        &self - &rhs
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        let x = self.coords();
        let y = rhs.coords();
        // Skip zero coordinates: generator matrices are very sparse in this basis.
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = *xi * *yj;
                let k = i + j;
                if k < 4 {
                    out[k] += p;
                } else {
                    out[k - 4] -= p;
                }
            }
        }
        let [a, b, c, d] = out;
        CycloElem { a, b, c, d }
    }
}

impl Mul for CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: CycloElem) -> CycloElem {
        &self * &rhs
    }
}

impl Mul<&CycloElem> for CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        &self * rhs
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, ""), (&self.b, "ω"), (&self.c, "ω²"), (&self.d, "ω³")];
        let mut first = true;
        for (coef, unit) in terms {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{unit}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `num / √2^k`, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicScalar {
    num: CycloElem,
    k: u32,
}

impl DyadicScalar {
    pub fn new(num: CycloElem, k: u32) -> Self {
        let mut s = Self { num, k };
        s.reduce();
        s
    }

    pub fn num(&self) -> &CycloElem {
        &self.num
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.num.is_divisible_by_sqrt2() {
            // Divisibility was just checked.
            self.num = self.num.sqrt2_divide().expect("divisible");
            self.k -= 1;
        }
    }

    fn lift_to(&self, k: u32) -> CycloElem {
        let mut x = self.num.clone();
        for _ in self.k..k {
            x = x.mul_sqrt2();
        }
        x
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let k = self.k.max(rhs.k);
        Self::new(&self.lift_to(k) + &rhs.lift_to(k), k)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, self.k + rhs.k)
    }

    pub fn conj(&self) -> Self {
        Self { num: self.num.conj(), k: self.k }
    }
}

impl fmt::Display for DyadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/√2^{}", self.num, self.k)
        }
    }
}
