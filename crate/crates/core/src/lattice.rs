//! Integer linear algebra over arbitrary-precision integers.
//!
//! Everything here works on row lattices: the subgroup of `Z^N` generated by
//! the rows of an [`IntegerMatrix`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<IntegerMatrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
        }
        Ok(IntegerMatrix { cols, rows })
    }

    pub fn from_i64(cols: usize, rows: &[Vec<i64>]) -> Result<IntegerMatrix> {
        IntegerMatrix::new(cols, rows.iter().map(|r| to_big(r)).collect())
    }

    pub fn empty(cols: usize) -> IntegerMatrix {
        IntegerMatrix { cols, rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: row.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Row-style Hermite normal form with zero rows dropped: echelon form,
    /// positive pivots, entries above a pivot reduced into `[0, pivot)`.
    pub fn hermite_normal_form(&self) -> IntegerMatrix {
        let mut a = self.rows.clone();
        let mut r = 0;
        for c in 0..self.cols {
            if r == a.len() {
                break;
            }
            while let Some(p) = (r..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()))
            {
                a.swap(r, p);
                let mut done = true;
                for i in r + 1..a.len() {
                    if a[i][c].is_zero() {
                        continue;
                    }
                    let q = a[i][c].div_floor(&a[r][c]);
                    sub_multiple(&mut a, i, r, &q);
                    done &= a[i][c].is_zero();
                }
                if done {
                    break;
                }
            }
            if a[r][c].is_zero() {
                continue;
            }
            if a[r][c].is_negative() {
                for x in &mut a[r] {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if !q.is_zero() {
                    sub_multiple(&mut a, i, r, &q);
                }
            }
            r += 1;
        }
        a.truncate(r);
        IntegerMatrix { cols: self.cols, rows: a }
    }

    pub fn rank(&self) -> usize {
        self.hermite_normal_form().nrows()
    }

    /// Nonzero elementary divisors `d_1 | d_2 | ...` of the Smith normal form.
    pub fn smith_divisors(&self) -> Vec<BigInt> {
        let mut a = self.rows.clone();
        let (m, n) = (a.len(), self.cols);
        let mut out = Vec::new();
        for t in 0..m.min(n) {
            loop {
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        if !a[i][j].is_zero()
                            && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                        {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else { return out };
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                let mut clean = true;
                for i in t + 1..m {
                    let q = a[i][t].div_floor(&a[t][t]);
                    if !q.is_zero() {
                        sub_multiple(&mut a, i, t, &q);
                    }
                    clean &= a[i][t].is_zero();
                }
                for j in t + 1..n {
                    let q = a[t][j].div_floor(&a[t][t]);
                    if !q.is_zero() {
                        for row in a.iter_mut() {
                            let d = &q * &row[t];
                            row[j] -= d;
                        }
                    }
                    clean &= a[t][j].is_zero();
                }
                if !clean {
                    continue;
                }
                // d_t must divide the rest; otherwise fold an offending row in.
                let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match offending {
                    Some(i) => {
                        let row = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(row) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
            out.push(a[t][t].abs());
        }
        out
    }
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `a[i] -= q * a[r]`.
fn sub_multiple(a: &mut [Vec<BigInt>], i: usize, r: usize, q: &BigInt) {
    let (src, dst) = if i < r {
        let (lo, hi) = a.split_at_mut(r);
        (&hi[0], &mut lo[i])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[r], &mut hi[0])
    };
    for (x, y) in dst.iter_mut().zip(src) {
        *x -= q * y;
    }
}

/// Divides by the gcd of the entries; signs are kept.
pub fn primitive(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

pub fn primitive_i64(v: &[i64]) -> Result<Vec<BigInt>> {
    primitive(&to_big(v))
}

pub fn in_rational_span(v: &[BigInt], m: &IntegerMatrix) -> Result<bool> {
    if v.len() != m.cols {
        return Err(Error::DimensionMismatch { expected: m.cols, got: v.len() });
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let mut ext = m.clone();
    ext.rows.push(v.to_vec());
    Ok(ext.rank() == m.rank())
}

/// Membership in the row lattice, by reduction against the Hermite form.
pub fn in_integer_span(v: &[BigInt], m: &IntegerMatrix) -> Result<bool> {
    if v.len() != m.cols {
        return Err(Error::DimensionMismatch { expected: m.cols, got: v.len() });
    }
    let h = m.hermite_normal_form();
    let mut rest = v.to_vec();
    for row in h.rows() {
        let c = row.iter().position(|x| !x.is_zero()).expect("HNF rows are nonzero");
        if rest[..c].iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
        let (q, r) = rest[c].div_rem(&row[c]);
        if !r.is_zero() {
            return Ok(false);
        }
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    Ok(rest.iter().all(Zero::is_zero))
}

/// Whether the row lattice equals its saturation `span_Q(rows) ∩ Z^N`, i.e.
/// every elementary divisor is 1. Rows must be independent.
pub fn is_saturated(m: &IntegerMatrix) -> Result<bool> {
    let divisors = m.smith_divisors();
    if divisors.len() < m.nrows() {
        return Err(Error::RankDeficient { rank: divisors.len(), rows: m.nrows() });
    }
    Ok(divisors.iter().all(One::is_one))
}
