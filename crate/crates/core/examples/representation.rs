//! The N-dimensional representation x ↦ shift, y ↦ clock.

use cyclic_plane::qplane::{rep_matrix, PlaneMatrix};
use cyclic_plane::{Order, PlaneElement};

fn show(name: &str, m: &PlaneMatrix) {
    println!("{name}:");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|c| format!("{:>8}", c.to_string())).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(4)?;
    let x = rep_matrix(&PlaneElement::x(n));
    let y = rep_matrix(&PlaneElement::y(n));
    show("rep(x)", &x);
    show("rep(y)", &y);
    show("rep(x) rep(y)", &(&x * &y));
    println!("rep(x)^4 = 1: {}", x.pow(4) == PlaneMatrix::identity(n));
    let xy = &PlaneElement::x(n) * &PlaneElement::y(n);
    println!("rep(xy) = rep(x) rep(y): {}", rep_matrix(&xy) == &x * &y);
    Ok(())
}
