//! Cone counts of M0,n by dimension, and the cones of M0,5.
//!
//! `cargo run --example enumerate_types -- 7`

use tropmod::trees::{count_rays, enumerate_types};

fn main() -> tropmod::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n must be an integer"));
    println!("n = {n}");
    for dim in 0..=n - 3 {
        println!("  dim {dim}: {} cones", enumerate_types(n, dim)?.len());
    }
    println!("  rays by formula: {}", count_rays(n)?);

    println!("\nM0,5 rays:");
    for t in enumerate_types(5, 1)? {
        let s = t.splits().iter().next().unwrap();
        println!("  {}", s.bipartition());
    }
    println!("M0,5 facets:");
    for t in enumerate_types(5, 2)? {
        println!("  {t}  valences {:?}", t.valence_profile());
    }
    Ok(())
}
