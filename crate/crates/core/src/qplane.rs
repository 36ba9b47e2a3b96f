//! The cyclic quantum plane `M_N`: generators `x`, `y` with `xy = q yx` and
//! `x^N = y^N = 1`, spanned by the `N^2` monomials `x^r y^s`.
//!
//! Products go through structure constants; [`PlaneMatrix`] is the concrete
//! `N x N` representation (shift and clock matrices) kept as an independent
//! cross-check.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::{CycNum, Order};
use crate::error::Result;
use crate::render;

/// Label of the basis monomial `x^r y^s`, indices reduced mod `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub r: usize,
    pub s: usize,
}

impl BasisIndex {
    pub fn new(order: Order, r: i64, s: i64) -> Self {
        BasisIndex { r: order.reduce(r), s: order.reduce(s) }
    }

    pub const UNIT: BasisIndex = BasisIndex { r: 0, s: 0 };
    pub const X: BasisIndex = BasisIndex { r: 1, s: 0 };
    pub const Y: BasisIndex = BasisIndex { r: 0, s: 1 };

    /// All `N^2` indices in lexicographic `(r, s)` order.
    pub fn all(order: Order) -> impl Iterator<Item = BasisIndex> + Clone {
        let n = order.get();
        (0..n).flat_map(move |r| (0..n).map(move |s| BasisIndex { r, s }))
    }

    /// Position in [`BasisIndex::all`].
    pub fn position(self, order: Order) -> usize {
        self.r * order.get() + self.s
    }

    pub(crate) fn monomial(self) -> String {
        render::monomial(&[("x", self.r), ("y", self.s)])
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.monomial();
        f.write_str(if m.is_empty() { "1" } else { &m })
    }
}

/// Product of two basis monomials: `x^r y^s · x^m y^n = q^{-ms} x^{r+m} y^{s+n}`.
pub fn basis_mul(order: Order, i: BasisIndex, j: BasisIndex) -> (BasisIndex, CycNum) {
    let k = BasisIndex::new(order, (i.r + j.r) as i64, (i.s + j.s) as i64);
    let c = CycNum::q_pow(order, -((j.r * i.s) as i64));
    (k, c)
}

/// Structure constant `f^{ij}_k`.
pub fn structure_f(order: Order, i: BasisIndex, j: BasisIndex, k: BasisIndex) -> CycNum {
    let (target, c) = basis_mul(order, i, j);
    if target == k {
        c
    } else {
        CycNum::zero(order)
    }
}

/// Bracket structure constant `C^{ij}_k = (q^{-ms} - q^{-nr}) δ δ`.
pub fn structure_c(order: Order, i: BasisIndex, j: BasisIndex, k: BasisIndex) -> CycNum {
    let target = BasisIndex::new(order, (i.r + j.r) as i64, (i.s + j.s) as i64);
    if target != k {
        return CycNum::zero(order);
    }
    let ms = (j.r * i.s) as i64;
    let nr = (j.s * i.r) as i64;
    CycNum::q_pow(order, -ms) - CycNum::q_pow(order, -nr)
}

/// `q^{rn - ms}`, the factor with `α_i α_j = q^{rn-ms} α_j α_i`.
pub fn braiding_factor(order: Order, i: BasisIndex, j: BasisIndex) -> CycNum {
    CycNum::q_pow(order, (i.r * j.s) as i64 - (j.r * i.s) as i64)
}

/// A finite `R_N`-linear combination of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneElement {
    order: Order,
    terms: BTreeMap<BasisIndex, CycNum>,
}

impl PlaneElement {
    pub fn zero(order: Order) -> Self {
        PlaneElement { order, terms: BTreeMap::new() }
    }

    pub fn one(order: Order) -> Self {
        Self::basis(order, BasisIndex::UNIT)
    }

    pub fn x(order: Order) -> Self {
        Self::basis(order, BasisIndex::X)
    }

    pub fn y(order: Order) -> Self {
        Self::basis(order, BasisIndex::Y)
    }

    pub fn basis(order: Order, idx: BasisIndex) -> Self {
        Self::term(idx, CycNum::one(order))
    }

    pub fn term(idx: BasisIndex, coeff: CycNum) -> Self {
        let mut out = Self::zero(coeff.order());
        out.add_term(idx, coeff);
        out
    }

    pub fn scalar(coeff: CycNum) -> Self {
        Self::term(BasisIndex::UNIT, coeff)
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisIndex, &CycNum)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, idx: BasisIndex) -> CycNum {
        self.terms.get(&idx).cloned().unwrap_or_else(|| CycNum::zero(self.order))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · α_idx`, dropping the entry if it cancels.
    pub fn add_term(&mut self, idx: BasisIndex, coeff: CycNum) {
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

    pub fn scale(&self, c: &CycNum) -> PlaneElement {
        let mut out = Self::zero(self.order);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &PlaneElement) -> Result<PlaneElement> {
        self.order.ensure_same(other.order)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PlaneElement) -> Result<PlaneElement> {
        self.order.ensure_same(other.order)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, -v);
        }
        Ok(out)
    }

    /// Product via the structure constants `f`.
    pub fn checked_mul(&self, other: &PlaneElement) -> Result<PlaneElement> {
        self.order.ensure_same(other.order)?;
        let mut out = Self::zero(self.order);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let (k, f) = basis_mul(self.order, *i, *j);
                out.add_term(k, &(a * b) * &f);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> PlaneElement {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Applies `f` to each basis monomial and extends linearly.
    pub fn map_linear<F>(&self, mut f: F) -> PlaneElement
    where
        F: FnMut(BasisIndex) -> PlaneElement,
    {
        let mut out = Self::zero(self.order);
        for (i, c) in &self.terms {
            for (k, v) in f(*i).terms {
                out.add_term(k, c * &v);
            }
        }
        out
    }
}

fn unwrap_op<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add<&PlaneElement> for &PlaneElement {
    type Output = PlaneElement;
    fn add(self, rhs: &PlaneElement) -> PlaneElement {
        unwrap_op(self.checked_add(rhs))
    }
}

impl Sub<&PlaneElement> for &PlaneElement {
    type Output = PlaneElement;
    fn sub(self, rhs: &PlaneElement) -> PlaneElement {
        unwrap_op(self.checked_sub(rhs))
    }
}

impl Mul<&PlaneElement> for &PlaneElement {
    type Output = PlaneElement;
    fn mul(self, rhs: &PlaneElement) -> PlaneElement {
        unwrap_op(self.checked_mul(rhs))
    }
}

impl Neg for &PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        self.scale(&-CycNum::one(self.order))
    }
}

impl fmt::Display for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render::write_sum(f, self.terms.iter().map(|(k, v)| (v, k.monomial())))
    }
}

/// `ab - ba`.
pub fn bracket(a: &PlaneElement, b: &PlaneElement) -> Result<PlaneElement> {
    a.checked_mul(b)?.checked_sub(&b.checked_mul(a)?)
}

/// The inner derivation `e_i = [α_i, ·]` applied to `target`.
pub fn derivation(i: BasisIndex, target: &PlaneElement) -> PlaneElement {
    let generator = PlaneElement::basis(target.order(), i);
    unwrap_op(bracket(&generator, target))
}

/// A square matrix over `R_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMatrix {
    order: Order,
    entries: Vec<Vec<CycNum>>,
}

impl PlaneMatrix {
    pub fn zero(order: Order) -> Self {
        let n = order.get();
        PlaneMatrix { order, entries: vec![vec![CycNum::zero(order); n]; n] }
    }

    pub fn identity(order: Order) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order.get() {
            m.entries[i][i] = CycNum::one(order);
        }
        m
    }

    /// Builds a matrix from `N` rows of `N` entries; `None` on a shape mismatch.
    pub fn from_rows(order: Order, rows: Vec<Vec<CycNum>>) -> Option<Self> {
        let n = order.get();
        let square = rows.len() == n && rows.iter().all(|r| r.len() == n && r.iter().all(|c| c.order() == order));
        square.then_some(PlaneMatrix { order, entries: rows })
    }

    /// The cyclic shift: ones on the superdiagonal and in the bottom-left corner.
    pub fn shift(order: Order) -> Self {
        let n = order.get();
        let mut m = Self::zero(order);
        for i in 0..n {
            m.entries[i][(i + 1) % n] = CycNum::one(order);
        }
        m
    }

    /// The clock matrix `diag(1, q, ..., q^{N-1})`.
    pub fn clock(order: Order) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order.get() {
            m.entries[i][i] = CycNum::q_pow(order, i as i64);
        }
        m
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<CycNum>] {
        &self.entries
    }

    pub fn scale(&self, c: &CycNum) -> PlaneMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e * c).collect())
            .collect();
        PlaneMatrix { order: self.order, entries }
    }

    pub fn pow(&self, e: u32) -> PlaneMatrix {
        (0..e).fold(Self::identity(self.order), |acc, _| &acc * self)
    }
}

impl Mul<&PlaneMatrix> for &PlaneMatrix {
    type Output = PlaneMatrix;
    fn mul(self, rhs: &PlaneMatrix) -> PlaneMatrix {
        let n = self.order.get();
        let mut out = PlaneMatrix::zero(self.order);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = &out.entries[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add<&PlaneMatrix> for &PlaneMatrix {
    type Output = PlaneMatrix;
    fn add(self, rhs: &PlaneMatrix) -> PlaneMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        PlaneMatrix { order: self.order, entries }
    }
}

/// `α^{rs} ↦ X^r Y^s`, extended linearly.
pub fn rep_matrix(e: &PlaneElement) -> PlaneMatrix {
    let order = e.order();
    let shift = PlaneMatrix::shift(order);
    let clock = PlaneMatrix::clock(order);
    e.terms().fold(PlaneMatrix::zero(order), |acc, (idx, c)| {
        let m = &shift.pow(idx.r as u32) * &clock.pow(idx.s as u32);
        &acc + &m.scale(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    fn idx(r: usize, s: usize) -> BasisIndex {
        BasisIndex { r, s }
    }

    #[test]
    fn basis_mul_examples() {
        let n = ord(3);
        let (k, c) = basis_mul(n, BasisIndex::Y, BasisIndex::X);
        assert_eq!(k, idx(1, 1));
        assert_eq!(c, CycNum::q_pow(n, -1));
        for i in BasisIndex::all(n) {
            assert_eq!(basis_mul(n, BasisIndex::UNIT, i), (i, CycNum::one(n)));
        }
        assert_eq!(basis_mul(n, BasisIndex::X, BasisIndex::X), (idx(2, 0), CycNum::one(n)));
    }

    #[test]
    fn braiding_examples() {
        let n = ord(3);
        assert_eq!(braiding_factor(n, BasisIndex::X, BasisIndex::Y), CycNum::q_pow(n, 1));
        for i in BasisIndex::all(n) {
            assert!(braiding_factor(n, i, i).is_one());
        }
        assert_eq!(braiding_factor(n, idx(1, 1), idx(2, 1)), CycNum::q_pow(n, -1));
    }

    #[test]
    fn bracket_examples() {
        let n = ord(4);
        let expected = PlaneElement::term(idx(1, 1), CycNum::one(n) - CycNum::q_pow(n, -1));
        let xy = bracket(&PlaneElement::x(n), &PlaneElement::y(n)).unwrap();
        assert_eq!(xy, expected);
        assert_eq!(derivation(BasisIndex::X, &PlaneElement::y(n)), expected);
        for i in BasisIndex::all(n) {
            let a = PlaneElement::basis(n, i);
            assert!(bracket(&a, &a).unwrap().is_zero());
            assert!(derivation(i, &a).is_zero());
            assert!(derivation(BasisIndex::UNIT, &a).is_zero());
        }
    }

    #[test]
    fn bracket_matches_structure_c() {
        let n = ord(5);
        for i in BasisIndex::all(n) {
            for j in BasisIndex::all(n) {
                let lhs = bracket(&PlaneElement::basis(n, i), &PlaneElement::basis(n, j)).unwrap();
                let mut rhs = PlaneElement::zero(n);
                for k in BasisIndex::all(n) {
                    rhs.add_term(k, structure_c(n, i, j, k));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn order_mismatch() {
        let a = PlaneElement::x(ord(3));
        let b = PlaneElement::x(ord(4));
        assert!(a.checked_mul(&b).is_err());
        assert!(bracket(&a, &b).is_err());
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let n = ord(3);
        let x = PlaneElement::x(n);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d, PlaneElement::zero(n));
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn matrix_generators() {
        for n in 2..=6 {
            let o = ord(n);
            let x = rep_matrix(&PlaneElement::x(o));
            let y = rep_matrix(&PlaneElement::y(o));
            assert_eq!(&x * &y, (&y * &x).scale(&CycNum::q_pow(o, 1)));
            assert_eq!(x.pow(n as u32), PlaneMatrix::identity(o));
            assert_eq!(y.pow(n as u32), PlaneMatrix::identity(o));
            assert_eq!(rep_matrix(&PlaneElement::one(o)), PlaneMatrix::identity(o));
        }
    }

    #[test]
    fn rendering() {
        let n = ord(3);
        let e = &(&PlaneElement::y(n) * &PlaneElement::x(n)) + &PlaneElement::x(n).pow(2);
        assert_eq!(e.to_string(), "(-1 - q)·x^1·y^1 + x^2");
        assert_eq!(PlaneElement::x(n).pow(3).to_string(), "1");
        assert_eq!(PlaneElement::scalar(CycNum::from_int(n, 2)).to_string(), "(2)");
    }
}
