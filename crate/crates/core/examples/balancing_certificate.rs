//! Balancing and local smoothness of M0,n at every codimension-one face.
//!
//! `cargo run --release --example balancing_certificate -- 7`

use std::time::Instant;

use tropmod::divisors::{check_all_smooth, check_balanced, moduli_fan};

fn main() -> tropmod::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n must be an integer"));
    let start = Instant::now();
    let fan = moduli_fan(n)?;
    let balanced = check_balanced(&fan)?;
    let smooth = check_all_smooth(n)?;
    println!("M0,{n}: {} facets, {} codimension-one faces", fan.len(), balanced.len());
    println!("  balanced: {}", balanced.iter().filter(|r| r.balanced).count());
    println!("  smooth:   {}", smooth.iter().filter(|r| r.passed()).count());

    let r = &smooth[0];
    println!("\nface {}:", r.face);
    for a in &r.adjacent {
        println!("  +{} along {}", a.weight, a.split.bipartition());
    }
    println!("  elementary divisors {:?}", r.elementary_divisors.as_deref().unwrap_or_default());
    println!("done in {:.2?}", start.elapsed());
    Ok(())
}
