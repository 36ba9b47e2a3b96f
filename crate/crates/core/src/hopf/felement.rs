//! Normal-form arithmetic in the quotiented quantum group `F`.
//!
//! `F` is generated by `a, b, c` subject to `ab = q ba`, `ac = q ca`,
//! `bc = cb`, `a^N = 1`, `b^N = c^N = 0`; `d` is eliminated through
//! `d = a^{N-1}(1 + q bc)`. Normal-ordered monomials `a^α b^β c^γ` form a
//! basis of dimension `N^3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::{CycNum, Order};
use crate::error::Result;
use crate::render;

/// Exponents of the normal-ordered monomial `a^α b^β c^γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FIndex {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl FIndex {
    pub const UNIT: FIndex = FIndex { a: 0, b: 0, c: 0 };

    pub fn all(order: Order) -> impl Iterator<Item = FIndex> {
        let n = order.get();
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| FIndex { a, b, c })))
    }

    pub(crate) fn monomial(self) -> String {
        render::monomial(&[("a", self.a), ("b", self.b), ("c", self.c)])
    }
}

/// `(a^α b^β c^γ)(a^α' b^β' c^γ') = q^{-(β+γ)α'} a^{α+α'} b^{β+β'} c^{γ+γ'}`,
/// or `None` when a `b` or `c` power reaches `N`.
pub fn monomial_mul(order: Order, u: FIndex, v: FIndex) -> Option<(FIndex, CycNum)> {
    let n = order.get();
    let b = u.b + v.b;
    let c = u.c + v.c;
    if b >= n || c >= n {
        return None;
    }
    let idx = FIndex { a: (u.a + v.a) % n, b, c };
    let coeff = CycNum::q_pow(order, -(((u.b + u.c) * v.a) as i64));
    Some((idx, coeff))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FElement {
    order: Order,
    terms: BTreeMap<FIndex, CycNum>,
}

impl FElement {
    pub fn zero(order: Order) -> Self {
        FElement { order, terms: BTreeMap::new() }
    }

    pub fn one(order: Order) -> Self {
        Self::monomial(order, FIndex::UNIT)
    }

    pub fn monomial(order: Order, idx: FIndex) -> Self {
        Self::term(idx, CycNum::one(order))
    }

    /// `c · a^α b^β c^γ`, reducing `α` mod `N` and annihilating `β, γ >= N`.
    pub fn term(idx: FIndex, coeff: CycNum) -> Self {
        let order = coeff.order();
        let mut out = Self::zero(order);
        let n = order.get();
        if idx.b < n && idx.c < n {
            out.add_term(FIndex { a: idx.a % n, ..idx }, coeff);
        }
        out
    }

    pub fn scalar(coeff: CycNum) -> Self {
        Self::term(FIndex::UNIT, coeff)
    }

    pub fn a(order: Order) -> Self {
        Self::monomial(order, FIndex { a: 1, b: 0, c: 0 })
    }

    pub fn b(order: Order) -> Self {
        Self::monomial(order, FIndex { a: 0, b: 1, c: 0 })
    }

    pub fn c(order: Order) -> Self {
        Self::monomial(order, FIndex { a: 0, b: 0, c: 1 })
    }

    /// `d`, eliminated as `a^{N-1} + q a^{N-1} bc`.
    pub fn d(order: Order) -> Self {
        expand_d(order)
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (FIndex, &CycNum)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, idx: FIndex) -> CycNum {
        self.terms.get(&idx).cloned().unwrap_or_else(|| CycNum::zero(self.order))
    }

    pub(crate) fn add_term(&mut self, idx: FIndex, coeff: CycNum) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(existing) => {
                *existing = &*existing + &coeff;
                if existing.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, coeff);
            }
        }
    }

    pub fn scale(&self, c: &CycNum) -> FElement {
        let mut out = Self::zero(self.order);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &FElement) -> Result<FElement> {
        self.order.ensure_same(other.order)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &FElement) -> Result<FElement> {
        self.order.ensure_same(other.order)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, -v);
        }
        Ok(out)
    }

    /// Normal-ordered product.
    pub fn checked_mul(&self, other: &FElement) -> Result<FElement> {
        self.order.ensure_same(other.order)?;
        let mut out = Self::zero(self.order);
        for (i, x) in &self.terms {
            for (j, y) in &other.terms {
                if let Some((k, f)) = monomial_mul(self.order, *i, *j) {
                    out.add_term(k, &(x * y) * &f);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> FElement {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }
}

/// `f_mul` of the two normal forms.
pub fn f_mul(u: &FElement, v: &FElement) -> Result<FElement> {
    u.checked_mul(v)
}

/// `d = a^{N-1}(1 + q bc)` in normal form.
pub fn expand_d(order: Order) -> FElement {
    let n = order.get();
    let top = n - 1;
    let mut out = FElement::monomial(order, FIndex { a: top, b: 0, c: 0 });
    out.add_term(FIndex { a: top, b: 1, c: 1 }, CycNum::q_pow(order, 1));
    out
}

/// Outcome of the q-determinant check with `d` eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDet {
    /// `ad - q bc`
    pub left: FElement,
    /// `da - q^{-1} bc`
    pub right: FElement,
}

impl QDet {
    pub fn compute(order: Order) -> Self {
        let a = FElement::a(order);
        let d = expand_d(order);
        let bc = &FElement::b(order) * &FElement::c(order);
        let left = &(&a * &d) - &bc.scale(&CycNum::q_pow(order, 1));
        let right = &(&d * &a) - &bc.scale(&CycNum::q_pow(order, -1));
        QDet { left, right }
    }

    pub fn holds(&self) -> bool {
        let one = FElement::one(self.left.order());
        self.left == one && self.right == one
    }
}

/// True iff `ad - q bc = 1` and `da - q^{-1} bc = 1` with `d` expanded.
pub fn qdet_check(order: Order) -> bool {
    QDet::compute(order).holds()
}

/// A letter of a word in the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FLetter {
    A,
    B,
    C,
}

/// Which out-of-order adjacent pair the rewriter swaps first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Normalizes a word by repeated adjacent swaps (`ba → q^{-1} ab`,
/// `ca → q^{-1} ac`, `cb → bc`), then applies `a^N = 1`, `b^N = c^N = 0`.
///
/// Independent of [`monomial_mul`]; the two agree iff the rewriting system is
/// confluent on the word.
pub fn normalize_word(order: Order, word: &[FLetter], strategy: RewriteStrategy) -> FElement {
    let mut letters = word.to_vec();
    let mut exponent = 0i64;
    loop {
        let mut positions = (0..letters.len().saturating_sub(1)).filter(|&i| letters[i] > letters[i + 1]);
        let pos = match strategy {
            RewriteStrategy::LeftmostFirst => positions.next(),
            RewriteStrategy::RightmostFirst => positions.next_back(),
        };
        let Some(i) = pos else { break };
        if letters[i + 1] == FLetter::A {
            exponent -= 1;
        }
        letters.swap(i, i + 1);
    }
    let count = |l: FLetter| letters.iter().filter(|&&x| x == l).count();
    let idx = FIndex { a: count(FLetter::A), b: count(FLetter::B), c: count(FLetter::C) };
    FElement::term(idx, CycNum::q_pow(order, exponent))
}

/// Folds a word through [`f_mul`].
pub fn word_product(order: Order, word: &[FLetter]) -> FElement {
    word.iter().fold(FElement::one(order), |acc, l| {
        let g = match l {
            FLetter::A => FElement::a(order),
            FLetter::B => FElement::b(order),
            FLetter::C => FElement::c(order),
        };
        &acc * &g
    })
}

fn unwrap_op<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add<&FElement> for &FElement {
    type Output = FElement;
    fn add(self, rhs: &FElement) -> FElement {
        unwrap_op(self.checked_add(rhs))
    }
}

impl Sub<&FElement> for &FElement {
    type Output = FElement;
    fn sub(self, rhs: &FElement) -> FElement {
        unwrap_op(self.checked_sub(rhs))
    }
}

impl Mul<&FElement> for &FElement {
    type Output = FElement;
    fn mul(self, rhs: &FElement) -> FElement {
        unwrap_op(self.checked_mul(rhs))
    }
}

impl Neg for &FElement {
    type Output = FElement;
    fn neg(self) -> FElement {
        self.scale(&-CycNum::one(self.order))
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render::write_sum(f, self.terms.iter().map(|(k, v)| (v, k.monomial())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn swap_examples() {
        let n = ord(3);
        let ba = &FElement::b(n) * &FElement::a(n);
        let ab = &FElement::a(n) * &FElement::b(n);
        assert_eq!(ba, ab.scale(&CycNum::q_pow(n, -1)));
        assert_eq!(ba.to_string(), "(-1 - q)·a^1·b^1");
        assert_eq!(&FElement::c(n) * &FElement::b(n), &FElement::b(n) * &FElement::c(n));
    }

    #[test]
    fn truncation() {
        for k in 2..=7 {
            let n = ord(k);
            let top = (k - 1) as u32;
            assert_eq!(&FElement::a(n).pow(top) * &FElement::a(n), FElement::one(n));
            assert!((&FElement::b(n).pow(top) * &FElement::b(n)).is_zero());
            assert!(FElement::c(n).pow(k as u32).is_zero());
        }
    }

    #[test]
    fn expand_d_examples() {
        let n = ord(3);
        assert_eq!(expand_d(n).to_string(), "a^2 + (q)·a^2·b^1·c^1");
        for k in 2..=7 {
            let n = ord(k);
            let bc = &FElement::b(n) * &FElement::c(n);
            let expected = &FElement::one(n) + &bc.scale(&CycNum::q_pow(n, 1));
            assert_eq!(&FElement::a(n) * &expand_d(n), expected);
        }
    }

    #[test]
    fn d_power_is_one_for_odd_primes() {
        for k in [3, 5, 7] {
            let n = ord(k);
            assert_eq!(expand_d(n).pow(k as u32), FElement::one(n), "N={k}");
        }
    }

    #[test]
    fn qdet() {
        for k in [3, 5] {
            assert!(qdet_check(ord(k)));
        }
    }

    #[test]
    fn defining_relations_with_d_expanded() {
        for k in 2..=6 {
            let n = ord(k);
            let (a, b, c, d) = (FElement::a(n), FElement::b(n), FElement::c(n), expand_d(n));
            let q = CycNum::q_pow(n, 1);
            assert_eq!(&a * &b, (&b * &a).scale(&q));
            assert_eq!(&a * &c, (&c * &a).scale(&q));
            assert_eq!(&b * &d, (&d * &b).scale(&q));
            assert_eq!(&c * &d, (&d * &c).scale(&q));
            let lhs = &(&a * &d) - &(&d * &a);
            let rhs = (&b * &c).scale(&(&q - &CycNum::q_pow(n, -1)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rewriting_agrees_with_closed_form() {
        use FLetter::*;
        let n = ord(3);
        let words: [&[FLetter]; 4] = [&[C, B, A], &[B, A, A, C], &[A, C, A, B, A], &[C, A, C, A]];
        for w in words {
            let l = normalize_word(n, w, RewriteStrategy::LeftmostFirst);
            let r = normalize_word(n, w, RewriteStrategy::RightmostFirst);
            assert_eq!(l, r);
            assert_eq!(l, word_product(n, w));
        }
    }
}
