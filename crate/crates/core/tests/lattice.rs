use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use tropmod::lattice::{in_integer_span, in_rational_span, is_saturated, primitive, IntegerMatrix};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Determinant by permutation expansion.
fn leibniz(m: &[Vec<i64>]) -> BigInt {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let mut det = BigInt::zero();
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let term = (0..n).fold(BigInt::one(), |acc, i| acc * m[i][p[i]]);
        if inversions % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-range..=range, cols), rows)
}

/// Identity mixed by elementary row operations: row_i += c · row_j, and swaps.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..30).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c, swap) in ops {
            if i == j {
                continue;
            }
            if swap {
                m.swap(i, j);
            } else {
                let src = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(src) {
                    *x += c * y;
                }
            }
        }
        m
    })
}

#[test]
fn known_divisors() {
    let m = IntegerMatrix::from_i64(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
    assert_eq!(m.smith_divisors(), big(&[2, 6, 12]));
    assert_eq!(leibniz(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).abs(), BigInt::from(144));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn determinant_is_product_of_divisors(n in 1usize..=4, seed in prop::collection::vec(-9i64..=9, 16)) {
        let rows: Vec<Vec<i64>> = seed.chunks(4).take(n).map(|r| r[..n].to_vec()).collect();
        let m = IntegerMatrix::from_i64(n, &rows).unwrap();
        let divisors = m.smith_divisors();
        let det = leibniz(&rows).abs();
        if det.is_zero() {
            prop_assert!(m.rank() < n);
        } else {
            prop_assert_eq!(divisors.len(), n);
            prop_assert_eq!(divisors.iter().product::<BigInt>(), det);
            for w in divisors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn unimodular_matrices_are_saturated(m in (1usize..=5).prop_flat_map(unimodular)) {
        let n = m.len();
        let mat = IntegerMatrix::from_i64(n, &m).unwrap();
        prop_assert!(is_saturated(&mat).unwrap());
        prop_assert_eq!(leibniz(&m).abs(), BigInt::one());
    }

    #[test]
    fn scaled_rows_are_not_saturated(m in (2usize..=4).prop_flat_map(unimodular), k in 2i64..=5) {
        let n = m.len();
        let mut rows = m.clone();
        for x in rows[0].iter_mut() {
            *x *= k;
        }
        prop_assert!(!is_saturated(&IntegerMatrix::from_i64(n, &rows).unwrap()).unwrap());
    }

    #[test]
    fn integer_span_implies_rational_span(rows in matrix(3, 5, 4), v in prop::collection::vec(-6i64..=6, 5)) {
        let m = IntegerMatrix::from_i64(5, &rows).unwrap();
        let v = big(&v);
        if in_integer_span(&v, &m).unwrap() {
            prop_assert!(in_rational_span(&v, &m).unwrap());
        }
    }

    #[test]
    fn combinations_are_in_the_span(rows in matrix(3, 5, 4), c in prop::collection::vec(-5i64..=5, 3), d in 2i64..=4) {
        let m = IntegerMatrix::from_i64(5, &rows).unwrap();
        let combo: Vec<BigInt> = (0..5).map(|j| BigInt::from((0..3).map(|i| c[i] * rows[i][j]).sum::<i64>())).collect();
        prop_assert!(in_integer_span(&combo, &m).unwrap());
        prop_assert!(in_rational_span(&combo, &m).unwrap());
        prop_assert!(in_integer_span(&combo.iter().map(|x| x * d).collect::<Vec<_>>(), &m).unwrap());
    }

    #[test]
    fn hermite_form_has_the_same_span(rows in matrix(4, 4, 5)) {
        let m = IntegerMatrix::from_i64(4, &rows).unwrap();
        let h = m.hermite_normal_form();
        for r in h.rows() {
            prop_assert!(in_integer_span(r, &m).unwrap());
        }
        for r in m.rows() {
            prop_assert!(in_integer_span(r, &h).unwrap());
        }
        prop_assert_eq!(h.nrows(), m.rank());
    }

    #[test]
    fn primitive_is_idempotent(v in prop::collection::vec(-50i64..=50, 1..8)) {
        let v = big(&v);
        if v.iter().all(Zero::is_zero) {
            prop_assert!(primitive(&v).is_err());
        } else {
            let p = primitive(&v).unwrap();
            prop_assert_eq!(primitive(&p).unwrap(), p.clone());
            let g = p.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            prop_assert_eq!(g, BigInt::one());
        }
    }
}

#[test]
fn rank_deficient_saturation_is_an_error() {
    let m = IntegerMatrix::from_i64(3, &[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
    assert!(matches!(is_saturated(&m), Err(tropmod::Error::RankDeficient { .. })));
}
