//! Tropical arithmetic over exact rationals.
//!
//! Tropical addition is `max`, tropical multiplication is ordinary addition,
//! `-inf` is the additive zero and `0` the multiplicative unit.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An element of `R ∪ {-inf}`. `None` is the tropical zero `-inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalNumber(Option<BigRational>);

impl TropicalNumber {
    pub const NEG_INF: TropicalNumber = TropicalNumber(None);

    pub fn finite(q: BigRational) -> Self {
        TropicalNumber(Some(q))
    }

    pub fn integer(v: i64) -> Self {
        TropicalNumber(Some(BigRational::from_integer(v.into())))
    }

    /// The tropical unit, `0`.
    pub fn one() -> Self {
        TropicalNumber(Some(BigRational::zero()))
    }

    pub fn zero() -> Self {
        Self::NEG_INF
    }

    pub fn value(&self) -> Option<&BigRational> {
        self.0.as_ref()
    }

    pub fn is_neg_inf(&self) -> bool {
        self.0.is_none()
    }

    /// Tropical inverse `-a`; `-inf` has none.
    pub fn inverse(&self) -> Option<TropicalNumber> {
        self.0.as_ref().map(|q| TropicalNumber(Some(-q)))
    }
}

impl fmt::Display for TropicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(q) => write!(f, "{q}"),
            None => f.write_str("-inf"),
        }
    }
}

pub fn trop_add(a: &TropicalNumber, b: &TropicalNumber) -> TropicalNumber {
    // `None < Some(_)` in the derived order, so `max` treats -inf as neutral.
    a.max(b).clone()
}

pub fn trop_mul(a: &TropicalNumber, b: &TropicalNumber) -> TropicalNumber {
    match (&a.0, &b.0) {
        (Some(x), Some(y)) => TropicalNumber(Some(x + y)),
        _ => TropicalNumber::NEG_INF,
    }
}

/// A tropical Laurent polynomial `max_j (a_j + <j, x>)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl TropicalPolynomial {
    /// Builds a polynomial from `(exponent, coefficient)` terms.
    ///
    /// Terms with coefficient `-inf` are dropped; repeated exponents keep the
    /// tropical sum (maximum) of their coefficients. At least one finite term
    /// must remain.
    pub fn new<I>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, TropicalNumber)>,
    {
        let mut map: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: exp.len() });
            }
            let Some(c) = coeff.0 else { continue };
            map.entry(exp)
                .and_modify(|old| {
                    if c > *old {
                        *old = c.clone();
                    }
                })
                .or_insert(c);
        }
        if map.is_empty() {
            return Err(Error::Parse("tropical polynomial needs a finite term".into()));
        }
        Ok(TropicalPolynomial { vars, terms: map })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn term_values<'a>(
        &'a self,
        x: &'a [BigRational],
    ) -> Result<impl Iterator<Item = BigRational> + 'a> {
        if x.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: x.len() });
        }
        Ok(self.terms.iter().map(move |(exp, coeff)| {
            exp.iter()
                .zip(x)
                .fold(coeff.clone(), |acc, (&e, xi)| acc + xi * BigInt::from(e))
        }))
    }

    pub fn eval(&self, x: &[BigRational]) -> Result<BigRational> {
        Ok(self.term_values(x)?.max().expect("polynomial has a term"))
    }

    /// Whether `x` lies on the corner locus: the maximum is attained by at
    /// least two distinct monomials.
    pub fn is_zero_point(&self, x: &[BigRational]) -> Result<bool> {
        let mut best: Option<BigRational> = None;
        let mut ties = 0usize;
        for v in self.term_values(x)? {
            match &best {
                Some(b) if v < *b => {}
                Some(b) if v == *b => ties += 1,
                _ => {
                    best = Some(v);
                    ties = 1;
                }
            }
        }
        Ok(ties >= 2)
    }
}

pub fn eval_polynomial(f: &TropicalPolynomial, x: &[BigRational]) -> Result<BigRational> {
    f.eval(x)
}

pub fn is_zero_point(f: &TropicalPolynomial, x: &[BigRational]) -> Result<bool> {
    f.is_zero_point(x)
}

/// An affine function with integer slope. Both it and its negation are
/// single-monomial tropical Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFunction {
    pub slope: Vec<i64>,
    pub constant: BigRational,
}

impl AffineFunction {
    pub fn new(slope: Vec<i64>, constant: BigRational) -> Self {
        AffineFunction { slope, constant }
    }

    pub fn eval(&self, x: &[BigRational]) -> Result<BigRational> {
        self.to_polynomial().eval(x)
    }

    /// The tropical quotient `1/f`, i.e. `-f`.
    pub fn inverse(&self) -> AffineFunction {
        AffineFunction {
            slope: self.slope.iter().map(|s| -s).collect(),
            constant: -self.constant.clone(),
        }
    }

    pub fn to_polynomial(&self) -> TropicalPolynomial {
        TropicalPolynomial::new(
            self.slope.len(),
            [(self.slope.clone(), TropicalNumber::finite(self.constant.clone()))],
        )
        .expect("single finite term")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn t(v: i64) -> TropicalNumber {
        TropicalNumber::integer(v)
    }

    /// max(x, y, 0)
    fn line() -> TropicalPolynomial {
        TropicalPolynomial::new(
            2,
            [(vec![1, 0], t(0)), (vec![0, 1], t(0)), (vec![0, 0], t(0))],
        )
        .unwrap()
    }

    #[test]
    fn add_and_mul() {
        assert_eq!(trop_add(&t(2), &t(3)), t(3));
        assert_eq!(trop_add(&TropicalNumber::NEG_INF, &t(5)), t(5));
        assert_eq!(trop_add(&t(-1), &t(-1)), t(-1));
        assert_eq!(trop_mul(&t(2), &t(3)), t(5));
        assert_eq!(trop_mul(&t(7), &TropicalNumber::one()), t(7));
        assert_eq!(trop_mul(&TropicalNumber::NEG_INF, &t(7)), TropicalNumber::NEG_INF);
    }

    #[test]
    fn evaluation() {
        let f = line();
        assert_eq!(f.eval(&[q(0), q(0)]).unwrap(), q(0));
        assert_eq!(f.eval(&[q(5), q(3)]).unwrap(), q(5));
        // max(0 + 2x, 1 + x) at x = 2: terms give 4 and 3.
        let g = TropicalPolynomial::new(1, [(vec![2], t(0)), (vec![1], t(1))]).unwrap();
        assert_eq!(g.eval(&[q(2)]).unwrap(), q(4));
    }

    #[test]
    fn zero_points_of_the_line() {
        let f = line();
        assert!(f.is_zero_point(&[q(0), q(0)]).unwrap());
        assert!(!f.is_zero_point(&[q(5), q(3)]).unwrap());
        assert!(f.is_zero_point(&[q(2), q(2)]).unwrap());
        assert!(f.is_zero_point(&[q(-4), q(0)]).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(TropicalPolynomial::new(1, [(vec![1], TropicalNumber::NEG_INF)]).is_err());
        assert!(TropicalPolynomial::new(2, [(vec![1], t(0))]).is_err());
        assert!(line().eval(&[q(1)]).is_err());
    }

    #[test]
    fn affine_inverse_cancels() {
        let f = AffineFunction::new(vec![1, -2], q(3));
        let x = [q(4), q(1)];
        let sum = f.eval(&x).unwrap() + f.inverse().eval(&x).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn duplicate_exponents_keep_max() {
        let f = TropicalPolynomial::new(1, [(vec![1], t(0)), (vec![1], t(2))]).unwrap();
        assert_eq!(f.terms().count(), 1);
        assert_eq!(f.eval(&[q(0)]).unwrap(), q(2));
    }
}
