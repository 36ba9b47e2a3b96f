//! The dual algebra H = {H, H^-1, X+, X-} acting on the plane, from the pairing and in closed form.

use cyclic_plane::hopf::{act, act_from_coaction, DualGenerator, LinearOperator};
use cyclic_plane::{BasisIndex, Order, PlaneElement};

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(3)?;
    for z in [PlaneElement::one(n), PlaneElement::x(n), PlaneElement::y(n)] {
        for g in DualGenerator::ALL {
            println!("{g}({z}) = {}", act_from_coaction(g, &z)?);
        }
    }

    let z = PlaneElement::basis(n, BasisIndex::new(n, 1, 2));
    for g in DualGenerator::ALL {
        println!("{g}({z}) = {}", act(g, &z));
    }

    for k in [5, 6] {
        let order = Order::new(k)?;
        let h = LinearOperator::of(order, DualGenerator::H);
        let xp = LinearOperator::of(order, DualGenerator::XPlus);
        println!(
            "N = {k}: H^N = 1 {}, (X+)^N = 0 {}",
            h.pow(k as u32) == LinearOperator::identity(order),
            xp.pow(k as u32).is_zero()
        );
    }
    Ok(())
}
