//! Max-plus arithmetic and the corner locus of the tropical line.

use num_rational::BigRational;
use tropmod::semiring::{trop_add, trop_mul, AffineFunction, TropicalNumber, TropicalPolynomial};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn main() -> tropmod::Result<()> {
    let a = TropicalNumber::integer(3);
    let b = TropicalNumber::finite(BigRational::new((-1).into(), 2.into()));
    println!("{a} (+) {b} = {}", trop_add(&a, &b));
    println!("{a} (x) {b} = {}", trop_mul(&a, &b));
    println!("{a} (x) -inf = {}", trop_mul(&a, &TropicalNumber::NEG_INF));
    println!("inverse of {a}: {}", a.inverse().unwrap());

    // max(x, y, 0)
    let line = TropicalPolynomial::new(
        2,
        [
            (vec![1, 0], TropicalNumber::integer(0)),
            (vec![0, 1], TropicalNumber::integer(0)),
            (vec![0, 0], TropicalNumber::integer(0)),
        ],
    )?;
    for (x, y) in [(0, 0), (4, 4), (-3, 0), (0, -3), (1, 2), (-1, -2)] {
        let p = [q(x), q(y)];
        println!("f({x},{y}) = {:>2}  on the line: {}", line.eval(&p)?, line.is_zero_point(&p)?);
    }

    let f = AffineFunction::new(vec![2, -1], q(5));
    let p = [q(1), q(7)];
    println!("f = 5 + 2x - y: f(1,7) = {}, (1/f)(1,7) = {}", f.eval(&p)?, f.inverse().eval(&p)?);
    Ok(())
}
