//! The psi-class divisors of M0,5 and M0,6, and the canonical class.

use tropmod::divisors::{canonical_divisor, check_psi_balanced, psi_divisor};
use tropmod::moduli::{embed, CoordinateSystem, ModuliPoint};
use tropmod::trees::{enumerate_types, Split};
use tropmod::EdgeLength;

fn main() -> tropmod::Result<()> {
    let psi = psi_divisor(5, 1)?;
    println!("Psi_1 in M0,5 has {} rays:", psi.len());
    let coords = CoordinateSystem::for_n(5)?;
    let mut sum = vec![0i64; coords.len()];
    for t in psi.cones().keys() {
        let s: Split = *t.splits().iter().next().unwrap();
        let x = ModuliPoint::new(s.leaves(), [(s, EdgeLength::integer(1)?)])?;
        let v = embed(&x)?;
        for (acc, e) in sum.iter_mut().zip(v.entries()) {
            *acc += i64::from(e.signum());
        }
        println!("  {}", s.bipartition());
    }
    println!("gradient sum: {sum:?}");

    for n in 5..=6 {
        for k in 1..=n {
            let reports = check_psi_balanced(n, k)?;
            let ok = reports.iter().all(|r| r.balanced);
            println!("n={n} k={k}: {} cones, {} faces, balanced {ok}", psi_divisor(n, k)?.len(), reports.len());
        }
    }

    let t = &enumerate_types(6, 1)?[0];
    let k = canonical_divisor(t);
    println!("canonical class on {t}: {:?}, degree {}", k.multiplicities, k.degree());
    Ok(())
}
