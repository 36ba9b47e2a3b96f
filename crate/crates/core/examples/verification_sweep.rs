//! Runs the identity registry over several orders and summarises it.

use cyclic_plane::cli::verify::run_verify;
use cyclic_plane::report::Status;
use cyclic_plane::Order;

fn main() -> cyclic_plane::Result<()> {
    let orders: Vec<Order> = (2..=9).map(Order::new).collect::<Result<_, _>>()?;
    let reports = run_verify(&orders, &[], false).expect("no filter");
    for r in &reports {
        let s = r.summary;
        println!("N = {}: {} pass, {} fail, {} recorded", r.n, s.pass, s.fail, s.recorded);
        for e in r.entries.iter().filter(|e| e.status == Status::RecordedFalse) {
            println!("    does not hold: {}", e.id);
        }
    }
    Ok(())
}
