//! Normal-form evaluation of parsed expressions.

use std::fmt;

use super::parse::{parse, Algebra, Expr, ExprError, Symbol};
use crate::cyclotomic::{CycNum, Order};
use crate::hopf::FElement;
use crate::qplane::PlaneElement;

/// The evaluated normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Plane(PlaneElement),
    QuantumGroup(FElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Plane(p) => p.fmt(f),
            Value::QuantumGroup(u) => u.fmt(f),
        }
    }
}

trait Target: Clone + Sized {
    fn scalar(c: CycNum) -> Self;
    fn generator(order: Order, s: Symbol) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Target for PlaneElement {
    fn scalar(c: CycNum) -> Self {
        PlaneElement::scalar(c)
    }
    fn generator(order: Order, s: Symbol) -> Self {
        match s {
            Symbol::X => PlaneElement::x(order),
            Symbol::Y => PlaneElement::y(order),
            _ => unreachable!("algebra checked before evaluation"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Target for FElement {
    fn scalar(c: CycNum) -> Self {
        FElement::scalar(c)
    }
    fn generator(order: Order, s: Symbol) -> Self {
        match s {
            Symbol::A => FElement::a(order),
            Symbol::B => FElement::b(order),
            Symbol::C => FElement::c(order),
            Symbol::D => FElement::d(order),
            _ => unreachable!("algebra checked before evaluation"),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

fn pow<T: Target>(base: &T, mut e: u64, one: T) -> T {
    let mut acc = one;
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&sq);
        }
        e >>= 1;
        if e > 0 {
            sq = sq.mul(&sq);
        }
    }
    acc
}

fn eval_in<T: Target>(e: &Expr, order: Order) -> Result<T, ExprError> {
    let one = || T::scalar(CycNum::one(order));
    Ok(match e {
        Expr::Int(k) => T::scalar(CycNum::from_int(order, *k)),
        Expr::Sym(Symbol::Q) => T::scalar(CycNum::q_pow(order, 1)),
        Expr::Sym(s) => T::generator(order, *s),
        Expr::Pow(base, k) => {
            // x, y, a and q have order dividing N, so exponents reduce mod N.
            let invertible = matches!(**base, Expr::Sym(Symbol::X | Symbol::Y | Symbol::A | Symbol::Q));
            if invertible {
                let b = eval_in::<T>(base, order)?;
                pow(&b, order.reduce(*k) as u64, one())
            } else if *k < 0 {
                return Err(ExprError::NonInvertible(base.to_string()));
            } else {
                let b = eval_in::<T>(base, order)?;
                pow(&b, *k as u64, one())
            }
        }
        Expr::Mul(factors) => {
            let mut acc = one();
            for f in factors {
                acc = acc.mul(&eval_in::<T>(f, order)?);
            }
            acc
        }
        Expr::Add(l, r) => eval_in::<T>(l, order)?.add(&eval_in::<T>(r, order)?),
        Expr::Sub(l, r) => eval_in::<T>(l, order)?.sub(&eval_in::<T>(r, order)?),
        Expr::Neg(inner) => eval_in::<T>(inner, order)?.neg(),
    })
}

/// Evaluates to a normal form in the algebra implied by the symbols.
pub fn eval(e: &Expr, order: Order) -> Result<Value, ExprError> {
    match e.algebra()? {
        Algebra::Plane => eval_in(e, order).map(Value::Plane),
        Algebra::QuantumGroup => eval_in(e, order).map(Value::QuantumGroup),
    }
}

/// Parses, evaluates at order `n` and renders the normal form.
pub fn eval_str(input: &str, n: usize) -> Result<String, ExprError> {
    let order = Order::new(n)?;
    Ok(eval(&parse(input)?, order)?.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_examples() {
        assert_eq!(eval_str("x*y - q*y*x", 3).unwrap(), "0");
        assert_eq!(eval_str("x^0", 3).unwrap(), "1");
        assert_eq!(eval_str("y*x", 3).unwrap(), "(-1 - q)·x^1·y^1");
        assert_eq!(eval_str("x^3", 3).unwrap(), "1");
        assert_eq!(eval_str("x^-1", 4).unwrap(), "x^3");
        assert_eq!(eval_str("q^1000000000000", 3).unwrap(), eval_str("q", 3).unwrap());
    }

    #[test]
    fn quantum_group_examples() {
        assert_eq!(eval_str("b*a", 3).unwrap(), "(-1 - q)·a^1·b^1");
        assert_eq!(eval_str("a*d - q*b*c", 5).unwrap(), "1");
        assert_eq!(eval_str("b^5", 5).unwrap(), "0");
        assert_eq!(eval_str("a^-1", 3).unwrap(), "a^2");
    }

    #[test]
    fn errors() {
        assert!(matches!(eval_str("x*a", 3), Err(ExprError::MixedAlgebra { .. })));
        assert!(matches!(eval_str("b^-1", 3), Err(ExprError::NonInvertible(_))));
        assert!(matches!(eval_str("(x + y)^-1", 3), Err(ExprError::NonInvertible(_))));
        assert!(matches!(eval_str("x", 1), Err(ExprError::Algebra(_))));
    }

    #[test]
    fn rendered_forms_reparse() {
        for s in ["y*x + 3x^2 - q^2 y", "(1 - q)^3 x y^2", "b a c a + d", "d^2 - a"] {
            let once = eval_str(s, 5).unwrap();
            assert_eq!(eval_str(&once, 5).unwrap(), once, "{s}");
        }
    }
}
