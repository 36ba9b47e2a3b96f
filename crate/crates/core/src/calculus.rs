//! The `Z_N`-graded differential calculus on `Z_N ⊂ M_N`.
//!
//! `Ω^k` is spanned by `x^k y^s`; the differential is
//! `d(x^r y^s) = (1 - q^{r-s}) x^{r+1} y^s`, the closed form of the
//! q-commutator `x z - q^k z x` on a form of degree `k`. Degrees wrap mod `N`,
//! so `d` maps `Ω^{N-1}` back to `Ω^0`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::{CycNum, Order};
use crate::error::{AlgebraError, Result};
use crate::qplane::{BasisIndex, PlaneElement};

/// `|x^r y^s| = r + s mod N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grading(pub usize);

/// Form degree `r mod N` of `x^r y^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormDegree(pub usize);

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for FormDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn grading(order: Order, idx: BasisIndex) -> Grading {
    Grading((idx.r + idx.s) % order.get())
}

pub fn degree(idx: BasisIndex) -> FormDegree {
    FormDegree(idx.r)
}

/// The common form degree of all terms, if there is one. Zero has none.
pub fn homogeneous_degree(z: &PlaneElement) -> Option<FormDegree> {
    let mut degrees = z.terms().map(|(i, _)| i.r);
    let first = degrees.next()?;
    degrees.all(|r| r == first).then_some(FormDegree(first))
}

/// Basis of `Ω^k = x^k Ω^0`.
pub fn omega(order: Order, k: FormDegree) -> Result<Vec<BasisIndex>> {
    let n = order.get();
    if k.0 >= n {
        return Err(AlgebraError::DegreeOutOfRange { degree: k.0, order: n });
    }
    Ok((0..n).map(|s| BasisIndex { r: k.0, s }).collect())
}

/// `d(x^r y^s) = (1 - q^{r-s}) x^{r+1} y^s`, extended linearly.
pub fn d(z: &PlaneElement) -> PlaneElement {
    let order = z.order();
    z.map_linear(|i| {
        let c = CycNum::one(order) - CycNum::q_pow(order, i.r as i64 - i.s as i64);
        PlaneElement::term(BasisIndex::new(order, i.r as i64 + 1, i.s as i64), c)
    })
}

/// The q-commutator `x z - q^k z x` for `z` homogeneous of degree `k`.
pub fn d_qcommutator(z: &PlaneElement) -> Result<PlaneElement> {
    let order = z.order();
    if z.is_zero() {
        return Ok(z.clone());
    }
    let k = homogeneous_degree(z).ok_or(AlgebraError::NotHomogeneous)?;
    let x = PlaneElement::x(order);
    Ok(&(&x * z) - &(z * &x).scale(&CycNum::q_pow(order, k.0 as i64)))
}

/// `d(pw) - d(p) w - q^k p d(w)` for `p` homogeneous of degree `k`.
pub fn leibniz_defect(p: &PlaneElement, w: &PlaneElement) -> Result<PlaneElement> {
    p.order().ensure_same(w.order())?;
    let order = p.order();
    if p.is_zero() {
        return Ok(PlaneElement::zero(order));
    }
    let k = homogeneous_degree(p).ok_or(AlgebraError::NotHomogeneous)?;
    let lhs = d(&p.checked_mul(w)?);
    let first = &d(p) * w;
    let second = (p * &d(w)).scale(&CycNum::q_pow(order, k.0 as i64));
    Ok(&(&lhs - &first) - &second)
}

/// `d` applied `m` times.
pub fn d_power(z: &PlaneElement, m: usize) -> PlaneElement {
    (0..m).fold(z.clone(), |acc, _| d(&acc))
}

/// Grading `g` ↦ basis indices with `r + s ≡ g`, in the same listing order
/// as the decomposition block `N_{g+1}`.
pub fn grading_table(order: Order) -> BTreeMap<Grading, Vec<BasisIndex>> {
    let n = order.get() as i64;
    (0..n)
        .map(|g| {
            let members = (0..n)
                .map(|j| {
                    let r = (g - j).rem_euclid(n);
                    BasisIndex::new(order, r, g - r)
                })
                .collect();
            (Grading(g as usize), members)
        })
        .collect()
}

/// `(α, dα)` for every basis element, lexicographic.
pub fn differential_table(order: Order) -> Vec<(BasisIndex, PlaneElement)> {
    BasisIndex::all(order)
        .map(|i| (i, d(&PlaneElement::basis(order, i))))
        .collect()
}

/// One line per basis element: `d(x^1·y^1) = ...`.
pub fn differential_table_text(order: Order) -> String {
    differential_table(order)
        .into_iter()
        .map(|(i, img)| format!("d({i}) = {img}\n"))
        .collect()
}

/// The `N = 3` differential table in canonical rendering.
pub const N3_DIFFERENTIAL_TABLE: &str = include_str!("../golden/n3_differential_table");

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    fn e(n: Order, r: usize, s: usize) -> PlaneElement {
        PlaneElement::basis(n, BasisIndex { r, s })
    }

    #[test]
    fn n3_differential_examples() {
        let n = ord(3);
        let one_minus_q2 = CycNum::one(n) - CycNum::q_pow(n, 2);
        assert!(d(&PlaneElement::one(n)).is_zero());
        assert_eq!(d(&e(n, 0, 1)), e(n, 1, 1).scale(&one_minus_q2));
        assert_eq!(d(&e(n, 2, 0)), PlaneElement::one(n).scale(&one_minus_q2));
        assert!(d(&e(n, 1, 1)).is_zero());
    }

    #[test]
    fn golden_table_matches() {
        assert_eq!(differential_table_text(ord(3)), N3_DIFFERENTIAL_TABLE);
    }

    #[test]
    fn omega_spaces() {
        let n = ord(3);
        let one = omega(n, FormDegree(1)).unwrap();
        assert_eq!(one, vec![BasisIndex { r: 1, s: 0 }, BasisIndex { r: 1, s: 1 }, BasisIndex { r: 1, s: 2 }]);
        assert_eq!(omega(n, FormDegree(0)).unwrap()[2], BasisIndex { r: 0, s: 2 });
        assert_eq!(
            omega(n, FormDegree(3)),
            Err(AlgebraError::DegreeOutOfRange { degree: 3, order: 3 })
        );
    }

    #[test]
    fn closed_form_matches_qcommutator() {
        for k in 2..=8 {
            let n = ord(k);
            for i in BasisIndex::all(n) {
                let z = PlaneElement::basis(n, i);
                assert_eq!(d(&z), d_qcommutator(&z).unwrap(), "N={k} {i}");
            }
        }
    }

    #[test]
    fn leibniz_examples() {
        let n = ord(3);
        let y = PlaneElement::y(n);
        assert!(leibniz_defect(&y, &y).unwrap().is_zero());
        for i in BasisIndex::all(n) {
            assert!(leibniz_defect(&PlaneElement::basis(n, i), &PlaneElement::one(n)).unwrap().is_zero());
        }
        let mixed = &PlaneElement::x(n) + &y;
        assert_eq!(leibniz_defect(&mixed, &y), Err(AlgebraError::NotHomogeneous));
    }

    #[test]
    fn nilpotency() {
        let n = ord(3);
        assert!(d_power(&PlaneElement::y(n), 3).is_zero());
        for k in [3, 5, 7] {
            let n = ord(k);
            for i in BasisIndex::all(n) {
                let z = PlaneElement::basis(n, i);
                assert_eq!(d_power(&z, 1), d(&z));
                assert!(d_power(&z, k).is_zero());
            }
        }
    }

    #[test]
    fn grading_examples() {
        let n = ord(3);
        let t = grading_table(n);
        let idx = |r, s| BasisIndex { r, s };
        assert_eq!(t[&Grading(1)], vec![idx(1, 0), idx(0, 1), idx(2, 2)]);
        assert_eq!(t[&Grading(0)], vec![idx(0, 0), idx(2, 1), idx(1, 2)]);
        assert_eq!(grading(n, BasisIndex::X), Grading(1));
        assert_eq!(grading(n, BasisIndex::Y), Grading(1));
        assert_eq!(grading(n, BasisIndex::UNIT), Grading(0));
    }
}
