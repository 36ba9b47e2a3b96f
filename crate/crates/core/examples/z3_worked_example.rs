//! N = 3 in full: the differential table, the action table and the grading triples.

use cyclic_plane::cli::table::{emit_table, TableFormat, TableKind};
use cyclic_plane::Order;

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(3)?;
    for kind in [TableKind::Differential, TableKind::Action, TableKind::Decomposition] {
        println!("== {}", kind.name());
        print!("{}", emit_table(kind, n, TableFormat::Text));
    }
    Ok(())
}
