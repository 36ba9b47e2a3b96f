//! The Z_N-graded calculus: d(α^{rs}) = (1 - q^{r-s}) α^{r+1,s}, with d^N = 0.

use cyclic_plane::calculus::{d, d_power, d_qcommutator, leibniz_defect, omega, FormDegree};
use cyclic_plane::{BasisIndex, Order, PlaneElement};

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(4)?;
    let z = PlaneElement::basis(n, BasisIndex::new(n, 0, 1));
    for m in 0..=4 {
        println!("d^{m}(y) = {}", d_power(&z, m));
    }
    println!("d(y) via the q-commutator with x: {}", d_qcommutator(&z)?);

    let p = PlaneElement::basis(n, BasisIndex::new(n, 1, 3));
    println!("d({p} · y) = {}", d(&(&p * &z)));
    println!("Leibniz defect on ({p}, y): {}", leibniz_defect(&p, &z)?);

    for k in 0..4 {
        let forms: Vec<String> = omega(n, FormDegree(k))?.iter().map(|i| i.to_string()).collect();
        println!("Ω^{k}: {}", forms.join(", "));
    }
    Ok(())
}
