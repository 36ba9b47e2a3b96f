//! Exact computer algebra for the cyclic quantum plane `M_N`.
//!
//! The plane is the algebra generated by `x`, `y` with `xy = q yx` and
//! `x^N = y^N = 1`, where `q` is an `N`-th root of unity, realised here by
//! exact arithmetic in `Z[q] / (1 + q + ... + q^{N-1})`. On top of it the
//! crate provides
//!
//! - [`cyclotomic`]: the scalar ring,
//! - [`qplane`]: structure-constant products, brackets, inner derivations and
//!   the matrix representation,
//! - [`hopf`]: the quantum group `F` at a root of unity, its coactions on the
//!   plane, the dual generators `H`, `X±` and the decomposition of the plane
//!   into `N` invariant blocks,
//! - [`calculus`]: the `Z_N`-graded differential with `d^N = 0`,
//! - [`cli`]: an expression evaluator, table emitters and the verification
//!   sweep behind the `cyclic-plane` binary.
//!
//! ```
//! use cyclic_plane::{calculus, cyclotomic::Order, qplane::PlaneElement};
//!
//! let n = Order::new(3).unwrap();
//! let y = PlaneElement::y(n);
//! assert_eq!(calculus::d(&y).to_string(), "(2 + q)·x^1·y^1");
//! assert!(calculus::d_power(&y, 3).is_zero());
//! ```

pub mod calculus;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod hopf;
pub mod qplane;
pub mod report;

mod render;

pub use cyclotomic::{CycNum, Order};
pub use error::{AlgebraError, Result};
pub use qplane::{BasisIndex, PlaneElement};
