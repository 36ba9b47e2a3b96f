//! Every table kind in every output format.

use cyclic_plane::cli::table::{emit_table, TableFormat, TableKind};
use cyclic_plane::Order;

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(2)?;
    for kind in [TableKind::StructureF, TableKind::StructureC] {
        print!("{}", emit_table(kind, n, TableFormat::Text));
    }
    print!("{}", emit_table(TableKind::Decomposition, Order::new(3)?, TableFormat::Json));
    let tex = emit_table(TableKind::Differential, Order::new(3)?, TableFormat::Latex);
    println!("LaTeX document: {} lines", tex.lines().count());
    Ok(())
}
