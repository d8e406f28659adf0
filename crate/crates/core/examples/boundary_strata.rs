//! Cutting a compactified curve along its infinite edges and gluing it back.

use tropmod::maps::decompose_boundary;
use tropmod::moduli::{embed, ModuliPoint};
use tropmod::trees::{LeafSet, Split};
use tropmod::EdgeLength;

fn main() -> tropmod::Result<()> {
    let n = 7;
    let leaves = LeafSet::range(n)?;
    let x = ModuliPoint::new(
        leaves,
        [
            (Split::of(n, &[1, 2])?, EdgeLength::Infinite),
            (Split::of(n, &[1, 2, 3])?, EdgeLength::integer(4)?),
            (Split::of(n, &[6, 7])?, EdgeLength::Infinite),
            (Split::of(n, &[5, 6, 7])?, EdgeLength::ratio(1, 2)?),
        ],
    )?;
    println!("x = {x}  (interior: {})", x.is_interior());
    let infinite = embed(&x)?.entries().iter().filter(|e| !e.is_finite()).count();
    println!("{infinite} of the coordinates are infinite");

    let d = decompose_boundary(&x)?;
    for (i, c) in d.components.iter().enumerate() {
        println!("component {i}: leaves {:?}, markers {:?}, {}", c.point.leaves().to_vec(), c.markers, c.point);
    }
    for g in &d.gluings {
        println!("marker {} glues components {:?} along {}", g.marker, g.components, g.split.bipartition());
    }
    assert_eq!(d.glue()?, x);
    println!("glued back: {}", d.glue()?);
    Ok(())
}
