//! The forgetful map M0,5 -> M0,4 on cones, and its four sections.

use std::collections::BTreeMap;

use tropmod::maps::{forget, forget_cone, section};
use tropmod::moduli::ModuliPoint;
use tropmod::trees::{enumerate_types, Split};
use tropmod::EdgeLength;

fn main() -> tropmod::Result<()> {
    let mut fibres: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for t in enumerate_types(5, 2)? {
        let image = forget_cone(&t, 5)?;
        fibres.entry(image.to_string()).or_default().push(t.to_string());
    }
    for (base, facets) in &fibres {
        println!("over {base}: {}", facets.join(" "));
    }

    let s = Split::of(4, &[1, 2])?;
    let x = ModuliPoint::new(s.leaves(), [(s, EdgeLength::integer(3)?)])?;
    println!("\nx = {x}");
    for k in 1..=4 {
        let y = section(&x, k)?;
        println!("  section {k}: {y}");
        assert_eq!(forget(&y, 5)?, x);
    }
    Ok(())
}
