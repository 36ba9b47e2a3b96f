//! Exact arithmetic in `R_N = Z[q] / (1 + q + ... + q^{N-1})`.
//!
//! Elements are stored in the basis `1, q, ..., q^{N-2}`; the top power is
//! eliminated with `q^{N-1} = -(1 + q + ... + q^{N-2})`. Since the defining
//! polynomial divides `q^N - 1`, `q^N = 1` holds in the ring, so exponents are
//! reduced mod `N` before the rewrite.
//!
//! Coefficients are `i64` with checked arithmetic. The `checked_*` methods
//! report [`AlgebraError::Overflow`]; the operator impls panic with the same
//! message.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{AlgebraError, Result};

/// The order `N >= 2` of the root of unity `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(usize);

impl Order {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            Err(AlgebraError::InvalidOrder(n))
        } else {
            Ok(Order(n))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Reduces a possibly negative integer into `0..N`.
    #[inline]
    pub fn reduce(self, k: i64) -> usize {
        k.rem_euclid(self.0 as i64) as usize
    }

    pub(crate) fn ensure_same(self, other: Order) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch { left: self.0, right: other.0 })
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An exact element of `R_N` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: Order,
    coeffs: Vec<i64>,
}

impl CycNum {
    pub fn zero(order: Order) -> Self {
        CycNum { order, coeffs: vec![0; order.get() - 1] }
    }

    pub fn one(order: Order) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: Order, value: i64) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = value;
        out
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(order: Order, n: i64) -> Self {
        let e = order.reduce(n);
        let len = order.get() - 1;
        if e < len {
            let mut coeffs = vec![0; len];
            coeffs[e] = 1;
            CycNum { order, coeffs }
        } else {
            CycNum { order, coeffs: vec![-1; len] }
        }
    }

    /// The telescoped q-integer `sum_{j=0}^{s-1} q^{step * j}`.
    ///
    /// Stands in for `(1 - q^{step*s}) / (1 - q^step)` without dividing, so it
    /// is defined even where the denominator vanishes or is a zero divisor.
    pub fn q_integer(order: Order, s: usize, step: i64) -> Self {
        let mut dense = vec![0i64; order.get()];
        for j in 0..s {
            dense[order.reduce(step * j as i64)] += 1;
        }
        Self::from_dense(order, &dense).expect("q-integer coefficients fit in i64")
    }

    /// Builds an element from coefficients of `q^0 .. q^{N-1}` (length `N`),
    /// or from an already-canonical vector (length `N - 1`).
    pub fn from_dense(order: Order, dense: &[i64]) -> Result<Self> {
        let n = order.get();
        let mut full = vec![0i64; n];
        for (k, &c) in dense.iter().enumerate() {
            let slot = &mut full[k % n];
            *slot = slot.checked_add(c).ok_or(AlgebraError::Overflow)?;
        }
        let top = full[n - 1];
        let coeffs = full[..n - 1]
            .iter()
            .map(|&c| c.checked_sub(top).ok_or(AlgebraError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycNum { order, coeffs })
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    /// Canonical coefficients of `1, q, ..., q^{N-2}`.
    #[inline]
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.order.ensure_same(other.order)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycNum { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.order.ensure_same(other.order)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(*b).ok_or(AlgebraError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycNum { order: self.order, coeffs })
    }

    pub fn checked_neg(&self) -> Result<CycNum> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_neg().ok_or(AlgebraError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycNum { order: self.order, coeffs })
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.order.ensure_same(other.order)?;
        let n = self.order.get();
        let mut dense = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let slot = &mut dense[(i + j) % n];
                let prod = a.checked_mul(b).ok_or(AlgebraError::Overflow)?;
                *slot = slot.checked_add(prod).ok_or(AlgebraError::Overflow)?;
            }
        }
        Self::from_dense(self.order, &dense)
    }

    pub fn checked_scale(&self, k: i64) -> Result<CycNum> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(k).ok_or(AlgebraError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycNum { order: self.order, coeffs })
    }

    /// Multiplies by `q^k`; a cyclic shift followed by reduction.
    pub fn mul_q_pow(&self, k: i64) -> CycNum {
        let n = self.order.get();
        let shift = self.order.reduce(k);
        let mut dense = vec![0i64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            dense[(i + shift) % n] = c;
        }
        Self::from_dense(self.order, &dense).expect("shift cannot overflow")
    }

    pub fn pow(&self, mut e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluates at `q = exp(2 pi i / N)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order.get() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| Complex64::from_polar(c as f64, TAU * k as f64 / n))
            .sum()
    }
}

/// `q^n` in `R_N`, validating `N`.
pub fn q_pow(n: usize, exponent: i64) -> Result<CycNum> {
    Ok(CycNum::q_pow(Order::new(n)?, exponent))
}

/// See [`CycNum::q_integer`].
pub fn q_integer(n: usize, s: usize, step: i64) -> Result<CycNum> {
    Ok(CycNum::q_integer(Order::new(n)?, s, step))
}

fn unwrap_op<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        unwrap_op(self.checked_add(rhs))
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        unwrap_op(self.checked_sub(rhs))
    }
}

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        unwrap_op(self.checked_mul(rhs))
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        unwrap_op(self.checked_neg())
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl std::iter::Sum for CycNum {
    /// Panics on an empty iterator: the order cannot be inferred.
    fn sum<I: Iterator<Item = CycNum>>(mut iter: I) -> CycNum {
        let first = iter.next().expect("sum of an empty CycNum iterator");
        iter.fold(first, |acc, x| acc + x)
    }
}

/// Ascending powers, e.g. `-1 - q`, `2 + q^2`, `3q - q^3`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
