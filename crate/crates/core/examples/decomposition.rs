//! The splitting of the plane into N blocks N_k that the dual action preserves.

use cyclic_plane::cli::table::decomposition_text;
use cyclic_plane::hopf::{decompose, invariance_check};
use cyclic_plane::Order;

fn main() -> cyclic_plane::Result<()> {
    for n in [3, 4] {
        let dec = decompose(Order::new(n)?);
        print!("{}", decomposition_text(&dec));
        for e in invariance_check(&dec) {
            println!("  {} {}", e.id, e.status.as_str());
        }
    }
    Ok(())
}
