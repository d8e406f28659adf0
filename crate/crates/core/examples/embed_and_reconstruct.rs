//! Double-ratio coordinates of a random curve, and recovering the curve
//! from them.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use tropmod::moduli::{embed, reconstruct, CoordinateSystem, ModuliPoint};
use tropmod::trees::{random_trivalent, LeafSet};
use tropmod::EdgeLength;

fn main() -> tropmod::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let leaves = LeafSet::range(6)?;
    let ty = random_trivalent(leaves, &mut rng)?;
    let lengths = ty
        .splits()
        .iter()
        .map(|_| EdgeLength::finite(BigRational::new(rng.random_range(1..20).into(), rng.random_range(1..5).into())))
        .collect::<tropmod::Result<Vec<_>>>()?;
    let x = ModuliPoint::from_type(&ty, lengths)?;
    println!("curve: {x}");

    let coords = CoordinateSystem::new(leaves)?;
    let v = embed(&x)?;
    println!("{} coordinates, nonzero ones:", v.entries().len());
    for (r, e) in coords.indices().iter().zip(v.entries()) {
        if !e.is_zero() {
            println!("  {r} = {e}");
        }
    }

    let back = reconstruct(&v)?;
    println!("reconstructed: {back}");
    assert_eq!(back, x);
    Ok(())
}
