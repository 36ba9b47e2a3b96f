//! Left and right coactions of `F` on the plane.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::felement::{expand_d, monomial_mul, FElement, FIndex};
use crate::cyclotomic::{CycNum, Order};
use crate::error::Result;
use crate::qplane::{basis_mul, BasisIndex, PlaneElement};

/// Which factor `F` occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `F ⊗ M`
    Left,
    /// `M ⊗ F`
    Right,
}

/// An element of `F ⊗ M` or `M ⊗ F`, with factor-wise multiplication
/// `(u ⊗ z)(u' ⊗ z') = uu' ⊗ zz'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    order: Order,
    side: Side,
    terms: BTreeMap<(BasisIndex, FIndex), CycNum>,
}

impl TensorElement {
    pub fn zero(order: Order, side: Side) -> Self {
        TensorElement { order, side, terms: BTreeMap::new() }
    }

    pub fn one(order: Order, side: Side) -> Self {
        let mut out = Self::zero(order, side);
        out.add_term(FIndex::UNIT, BasisIndex::UNIT, CycNum::one(order));
        out
    }

    /// `u ⊗ z` (or `z ⊗ u` on the right), expanded bilinearly.
    pub fn pure(side: Side, u: &FElement, z: &PlaneElement) -> Self {
        let mut out = Self::zero(u.order(), side);
        for (fi, fc) in u.terms() {
            for (pi, pc) in z.terms() {
                out.add_term(fi, pi, fc * pc);
            }
        }
        out
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
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

    pub fn terms(&self) -> impl Iterator<Item = (FIndex, BasisIndex, &CycNum)> {
        self.terms.iter().map(|((p, f), c)| (*f, *p, c))
    }

    fn add_term(&mut self, f: FIndex, p: BasisIndex, coeff: CycNum) {
        if coeff.is_zero() {
            return;
        }
        let key = (p, f);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = &*existing + &coeff;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    fn compatible(&self, other: &TensorElement) -> Result<()> {
        self.order.ensure_same(other.order)?;
        assert_eq!(self.side, other.side, "tensor sides differ");
        Ok(())
    }

    pub fn scale(&self, c: &CycNum) -> TensorElement {
        let mut out = Self::zero(self.order, self.side);
        for ((p, f), v) in &self.terms {
            out.add_term(*f, *p, v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.compatible(other)?;
        let mut out = self.clone();
        for ((p, f), v) in &other.terms {
            out.add_term(*f, *p, v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.compatible(other)?;
        let mut out = self.clone();
        for ((p, f), v) in &other.terms {
            out.add_term(*f, *p, -v);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.compatible(other)?;
        let mut out = Self::zero(self.order, self.side);
        for ((p1, f1), c1) in &self.terms {
            for ((p2, f2), c2) in &other.terms {
                let Some((f, fc)) = monomial_mul(self.order, *f1, *f2) else {
                    continue;
                };
                let (p, pc) = basis_mul(self.order, *p1, *p2);
                out.add_term(f, p, &(&(c1 * c2) * &fc) * &pc);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> TensorElement {
        (0..e).fold(Self::one(self.order, self.side), |acc, _| &acc * self)
    }
}

fn unwrap_op<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        unwrap_op(self.checked_add(rhs))
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        unwrap_op(self.checked_sub(rhs))
    }
}

impl Mul<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        unwrap_op(self.checked_mul(rhs))
    }
}

fn factor(mono: String) -> String {
    if mono.is_empty() {
        "1".to_owned()
    } else {
        mono
    }
}

/// `(c)·[a^1] ⊗ [x^1] + ...`; the `F` factor comes first on the left side.
impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((pi, fi), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let (fm, pm) = (factor(fi.monomial()), factor(pi.monomial()));
            let (l, r) = match self.side {
                Side::Left => (fm, pm),
                Side::Right => (pm, fm),
            };
            if c.is_one() {
                write!(f, "[{l}] ⊗ [{r}]")?;
            } else {
                write!(f, "({c})·[{l}] ⊗ [{r}]")?;
            }
        }
        Ok(())
    }
}

/// Images of `x` and `y` under the coaction on `side`.
///
/// Left: `x ↦ a⊗x + b⊗y`, `y ↦ c⊗x + d⊗y`.
/// Right: `x ↦ x⊗a + y⊗c`, `y ↦ x⊗b + y⊗d`.
pub fn coact_generators(order: Order, side: Side) -> (TensorElement, TensorElement) {
    let (a, b, c, d) = (FElement::a(order), FElement::b(order), FElement::c(order), expand_d(order));
    let (x, y) = (PlaneElement::x(order), PlaneElement::y(order));
    let t = |u: &FElement, z: &PlaneElement| TensorElement::pure(side, u, z);
    match side {
        Side::Left => (&t(&a, &x) + &t(&b, &y), &t(&c, &x) + &t(&d, &y)),
        Side::Right => (&t(&a, &x) + &t(&c, &y), &t(&b, &x) + &t(&d, &y)),
    }
}

/// Coaction extended as an algebra map on monomials, `δ(x^r y^s) = δ(x)^r δ(y)^s`,
/// and linearly on sums.
pub fn coact(side: Side, z: &PlaneElement) -> TensorElement {
    let order = z.order();
    let n = order.get();
    let (dx, dy) = coact_generators(order, side);
    let mut x_pows = vec![TensorElement::one(order, side)];
    let mut y_pows = vec![TensorElement::one(order, side)];
    let (max_r, max_s) = z.terms().fold((0, 0), |(r, s), (i, _)| (r.max(i.r), s.max(i.s)));
    for k in 1..=max_r.min(n - 1) {
        let next = &x_pows[k - 1] * &dx;
        x_pows.push(next);
    }
    for k in 1..=max_s.min(n - 1) {
        let next = &y_pows[k - 1] * &dy;
        y_pows.push(next);
    }
    let mut out = TensorElement::zero(order, side);
    for (i, c) in z.terms() {
        let img = &x_pows[i.r] * &y_pows[i.s];
        out = &out + &img.scale(c);
    }
    out
}

pub fn coact_left(z: &PlaneElement) -> TensorElement {
    coact(Side::Left, z)
}

pub fn coact_right(z: &PlaneElement) -> TensorElement {
    coact(Side::Right, z)
}
