//! Weighted fans supported on the moduli space and their certificates.
//!
//! A pure-dimensional weighted fan is balanced at a codimension-one face `τ`
//! when the weighted sum of the primitive directions of the cones around `τ`
//! lies in the linear span of `τ`. Cones here are simplicial and indexed by
//! split sets, so the faces of a cone are its sub-split-sets and the
//! direction of a cone over a face is the gradient of its extra split.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{in_integer_span, in_rational_span, IntegerMatrix};
use crate::moduli::CoordinateSystem;
use crate::trees::{enumerate_types, CombinatorialType, Label, LeafSet, Split, TreeRealization};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFan {
    leaves: LeafSet,
    dim: usize,
    cones: BTreeMap<CombinatorialType, u64>,
}

impl WeightedFan {
    /// Repeated cones have their weights added.
    pub fn new<I>(leaves: LeafSet, dim: usize, cones: I) -> Result<WeightedFan>
    where
        I: IntoIterator<Item = (CombinatorialType, u64)>,
    {
        let mut map = BTreeMap::new();
        for (t, w) in cones {
            if w == 0 {
                return Err(Error::InvalidWeight(w));
            }
            if t.leaves() != leaves {
                return Err(Error::DimensionMismatch { expected: leaves.len(), got: t.n() });
            }
            if t.dim() != dim {
                return Err(Error::NotPure);
            }
            *map.entry(t).or_insert(0) += w;
        }
        Ok(WeightedFan { leaves, dim, cones: map })
    }

    pub fn leaves(&self) -> LeafSet {
        self.leaves
    }

    pub fn n(&self) -> usize {
        self.leaves.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &BTreeMap<CombinatorialType, u64> {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacentCone {
    pub cone: CombinatorialType,
    /// The split of `cone` missing from the face.
    pub split: Split,
    pub weight: u64,
    pub direction: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancingReport {
    pub face: CombinatorialType,
    pub adjacent: Vec<AdjacentCone>,
    /// `Σ weight · direction`.
    pub sum: Vec<BigInt>,
    pub balanced: bool,
    /// Local smoothness verdict, when it was checked.
    pub smooth: Option<bool>,
    pub elementary_divisors: Option<Vec<BigInt>>,
}

impl BalancingReport {
    pub fn passed(&self) -> bool {
        self.balanced && self.smooth != Some(false)
    }
}

fn direction(coords: &CoordinateSystem, s: &Split) -> Vec<i64> {
    coords.indices().iter().map(|r| r.sigma(s)).collect()
}

fn face_matrix(coords: &CoordinateSystem, face: &CombinatorialType) -> Result<IntegerMatrix> {
    let rows: Vec<Vec<i64>> = face.splits().iter().map(|s| direction(coords, s)).collect();
    IntegerMatrix::from_i64(coords.len(), &rows)
}

fn weighted_sum(len: usize, adjacent: &[AdjacentCone]) -> Vec<BigInt> {
    let mut sum = vec![BigInt::zero(); len];
    for a in adjacent {
        let w = BigInt::from(a.weight);
        for (acc, &d) in sum.iter_mut().zip(&a.direction) {
            if d != 0 {
                *acc += &w * d;
            }
        }
    }
    sum
}

/// All trivalent types, weight one.
pub fn moduli_fan(n: usize) -> Result<WeightedFan> {
    if n < 4 {
        return Err(Error::InvalidLeafCount(n));
    }
    let facets = enumerate_types(n, n - 3)?;
    WeightedFan::new(LeafSet::range(n)?, n - 3, facets.into_iter().map(|t| (t, 1)))
}

/// One report per codimension-one face of the fan, in face order.
pub fn check_balanced(fan: &WeightedFan) -> Result<Vec<BalancingReport>> {
    if fan.dim == 0 {
        return Ok(Vec::new());
    }
    let coords = CoordinateSystem::new(fan.leaves)?;
    let mut faces: BTreeMap<CombinatorialType, Vec<AdjacentCone>> = BTreeMap::new();
    for (cone, &weight) in &fan.cones {
        for s in cone.splits() {
            faces.entry(cone.contract(s)?).or_default().push(AdjacentCone {
                cone: cone.clone(),
                split: *s,
                weight,
                direction: direction(&coords, s),
            });
        }
    }
    faces
        .into_par_iter()
        .map(|(face, adjacent)| {
            let sum = weighted_sum(coords.len(), &adjacent);
            let balanced = in_rational_span(&sum, &face_matrix(&coords, &face)?)?;
            Ok(BalancingReport { face, adjacent, sum, balanced, smooth: None, elementary_divisors: None })
        })
        .collect()
}

/// Integral certificate at a codimension-one type: the three resolution
/// directions sum into the integer span of the face, and the face directions
/// together with two resolution directions span a saturated lattice.
pub fn check_smooth_local(n: usize, tau: &CombinatorialType) -> Result<BalancingReport> {
    if tau.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: tau.n() });
    }
    let coords = CoordinateSystem::new(tau.leaves())?;
    let adjacent: Vec<AdjacentCone> = tau
        .resolution_splits()?
        .into_iter()
        .map(|s| {
            Ok(AdjacentCone {
                cone: tau.refine(s)?,
                split: s,
                weight: 1,
                direction: direction(&coords, &s),
            })
        })
        .collect::<Result<_>>()?;
    let face = face_matrix(&coords, tau)?;
    let sum = weighted_sum(coords.len(), &adjacent);
    let balanced = in_rational_span(&sum, &face)?;
    let integral = in_integer_span(&sum, &face)?;
    let mut local = face;
    for a in &adjacent[..2] {
        local.push_row(a.direction.iter().map(|&d| BigInt::from(d)).collect())?;
    }
    let divisors = local.smith_divisors();
    let saturated = divisors.len() == local.nrows() && divisors.iter().all(|d| *d == BigInt::from(1));
    Ok(BalancingReport {
        face: tau.clone(),
        adjacent,
        sum,
        balanced,
        smooth: Some(integral && saturated),
        elementary_divisors: Some(divisors),
    })
}

/// [`check_smooth_local`] at every codimension-one type of `M_{0,n}`.
pub fn check_all_smooth(n: usize) -> Result<Vec<BalancingReport>> {
    if n < 4 {
        return Err(Error::InvalidLeafCount(n));
    }
    enumerate_types(n, n - 4)?.par_iter().map(|t| check_smooth_local(n, t)).collect()
}

/// Codimension-one types whose 4-valent vertex carries leaf `k`, weight one.
pub fn psi_divisor(n: usize, k: Label) -> Result<WeightedFan> {
    if n < 4 {
        return Err(Error::InvalidLeafCount(n));
    }
    if !(1..=n).contains(&k) {
        return Err(Error::InvalidLabel(k));
    }
    let cones = enumerate_types(n, n - 4)?.into_iter().filter(|t| {
        let tree = t.to_tree();
        tree.codim_one_vertex().is_some_and(|v| tree.vertices[v].leaves.contains(&k))
    });
    WeightedFan::new(LeafSet::range(n)?, n - 4, cones.map(|t| (t, 1)))
}

pub fn check_psi_balanced(n: usize, k: Label) -> Result<Vec<BalancingReport>> {
    if n < 5 {
        return Err(Error::InvalidLeafCount(n));
    }
    check_balanced(&psi_divisor(n, k)?)
}

/// Vertex multiplicities `valence - 2` of the canonical class, aligned with
/// `tree.vertices`.
#[derive(Debug, Clone)]
pub struct CanonicalDivisor {
    pub tree: TreeRealization,
    pub multiplicities: Vec<usize>,
}

impl CanonicalDivisor {
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

pub fn canonical_divisor(t: &CombinatorialType) -> CanonicalDivisor {
    let tree = t.to_tree();
    let multiplicities = tree.vertices.iter().map(|v| v.valence() - 2).collect();
    CanonicalDivisor { tree, multiplicities }
}
