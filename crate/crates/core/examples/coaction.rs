//! Left and right coactions of F on the plane, and which relations they preserve.

use cyclic_plane::hopf::{coact_generators, coact_left, coact_right, Side, TensorElement};
use cyclic_plane::{CycNum, Order, PlaneElement};

fn main() -> cyclic_plane::Result<()> {
    for n in [3, 4] {
        let order = Order::new(n)?;
        println!("N = {n}");
        println!("  δ_L(xy) = {}", coact_left(&(&PlaneElement::x(order) * &PlaneElement::y(order))));
        println!("  δ_R(x)  = {}", coact_right(&PlaneElement::x(order)));
        for side in [Side::Left, Side::Right] {
            let (x, y) = coact_generators(order, side);
            let braid = &(&x * &y) - &(&y * &x).scale(&CycNum::q_pow(order, 1));
            let cyclic = &x.pow(n as u32) - &TensorElement::one(order, side);
            println!("  {side:?}: x'y' - q y'x' = {braid}");
            println!("  {side:?}: x'^N - 1⊗1   = {cyclic}");
        }
    }
    Ok(())
}
