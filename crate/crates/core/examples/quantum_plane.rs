//! The cyclic quantum plane: xy = qyx, x^N = y^N = 1, its structure constants and bracket.

use cyclic_plane::qplane::{basis_mul, bracket, braiding_factor, derivation, structure_c};
use cyclic_plane::{BasisIndex, Order, PlaneElement};

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(3)?;
    let (x, y) = (PlaneElement::x(n), PlaneElement::y(n));

    println!("xy       = {}", &x * &y);
    println!("yx       = {}", &y * &x);
    println!("x^3      = {}", x.pow(3));
    println!("(x+y)^3  = {}", (&x + &y).pow(3));
    println!("[x, y]   = {}", bracket(&x, &y)?);

    let i = BasisIndex::new(n, 1, 2);
    let j = BasisIndex::new(n, 2, 2);
    let (k, f) = basis_mul(n, i, j);
    println!("α({i}) α({j}) = ({f}) α({k})");
    println!("braiding factor q^(rn-ms) = {}", braiding_factor(n, i, j));
    println!("C[{i},{j}]_{k} = {}", structure_c(n, i, j, k));

    // The inner derivation e_i = [α^i, -] acting on y.
    println!("e_{i}(y) = {}", derivation(i, &y));
    Ok(())
}
