//! The link of the origin in M0,5 is the Petersen graph. Prints it as DOT.
//!
//! `cargo run --example petersen_link | dot -Tsvg > petersen.svg`

use tropmod::moduli::link_graph;

fn main() -> tropmod::Result<()> {
    let g = link_graph(5)?;
    eprintln!(
        "{} vertices, {} edges, degrees {:?}, girth {:?}",
        g.vertices.len(),
        g.edges.len(),
        g.degrees(),
        g.girth()
    );
    print!("{}", g.to_dot());
    Ok(())
}
