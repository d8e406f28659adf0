//! Points of the moduli space, double-ratio coordinates and the embedding.
//!
//! A double ratio is indexed by two disjoint ordered pairs `((i, j), (k, l))`.
//! Its value at a curve is the signed length of the common part of the paths
//! `i -> j` and `k -> l`: a split `S` contributes `+len(S)` when it separates
//! `i` from `j` and `k` from `l` with `i`, `k` on the same side, `-len(S)`
//! when it separates both pairs the other way round, and nothing otherwise.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{EdgeLength, Extended};
use crate::trees::{enumerate_types, CombinatorialType, Label, LeafSet, Split};

/// A curve: a combinatorial type with a length on every bounded edge.
///
/// Points with an infinite length lie on the boundary of the compactified
/// moduli space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuliPoint {
    ty: CombinatorialType,
    lengths: BTreeMap<Split, EdgeLength>,
}

impl ModuliPoint {
    pub fn new<I>(leaves: LeafSet, edges: I) -> Result<ModuliPoint>
    where
        I: IntoIterator<Item = (Split, EdgeLength)>,
    {
        let mut lengths = BTreeMap::new();
        for (s, l) in edges {
            if let EdgeLength::Finite(q) = &l {
                if !q.is_positive() {
                    return Err(Error::InvalidLength(q.to_string()));
                }
            }
            if lengths.insert(s, l).is_some() {
                return Err(Error::InvalidSplit(format!("{} given twice", s.bipartition())));
            }
        }
        let ty = CombinatorialType::new(leaves, lengths.keys().copied())?;
        Ok(ModuliPoint { ty, lengths })
    }

    /// Lengths listed in the type's split order.
    pub fn from_type(ty: &CombinatorialType, lengths: Vec<EdgeLength>) -> Result<ModuliPoint> {
        if lengths.len() != ty.dim() {
            return Err(Error::DimensionMismatch { expected: ty.dim(), got: lengths.len() });
        }
        ModuliPoint::new(ty.leaves(), ty.splits().iter().copied().zip(lengths))
    }

    /// The cone point of the moduli space: the curve with one vertex.
    pub fn origin(leaves: LeafSet) -> Result<ModuliPoint> {
        Ok(ModuliPoint { ty: CombinatorialType::star(leaves)?, lengths: BTreeMap::new() })
    }

    pub fn ty(&self) -> &CombinatorialType {
        &self.ty
    }

    pub fn leaves(&self) -> LeafSet {
        self.ty.leaves()
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    pub fn lengths(&self) -> &BTreeMap<Split, EdgeLength> {
        &self.lengths
    }

    pub fn length(&self, s: &Split) -> Option<&EdgeLength> {
        self.lengths.get(s)
    }

    /// Whether all lengths are finite.
    pub fn is_interior(&self) -> bool {
        self.lengths.values().all(EdgeLength::is_finite)
    }

    /// Multiplies every length by a positive rational.
    pub fn scale(&self, factor: &BigRational) -> Result<ModuliPoint> {
        let lengths = self
            .lengths
            .iter()
            .map(|(s, l)| Ok((*s, l.scale(factor)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(ModuliPoint { ty: self.ty.clone(), lengths })
    }
}

impl fmt::Display for ModuliPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.lengths.iter().map(|(s, l)| format!("{}:{}", s.to_text(), l)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Two disjoint ordered pairs of labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatioIndex {
    pub first: (Label, Label),
    pub second: (Label, Label),
}

impl RatioIndex {
    pub fn new(first: (Label, Label), second: (Label, Label)) -> Result<RatioIndex> {
        let labels = [first.0, first.1, second.0, second.1];
        let set = LeafSet::from_labels(labels)?;
        if set.len() != 4 {
            return Err(Error::Parse(format!("ratio index needs four distinct labels, got {labels:?}")));
        }
        Ok(RatioIndex { first, second })
    }

    pub fn labels(&self) -> LeafSet {
        LeafSet::from_labels([self.first.0, self.first.1, self.second.0, self.second.1])
            .expect("validated on construction")
    }

    /// The stored representative of this coordinate and the sign relating
    /// the two (`value(self) = sign * value(canonical)`).
    pub fn canonical(&self) -> (RatioIndex, i64) {
        let mut sign = 1;
        let mut orient = |(a, b): (Label, Label)| {
            if a < b {
                (a, b)
            } else {
                sign = -sign;
                (b, a)
            }
        };
        let p = orient(self.first);
        let q = orient(self.second);
        let (first, second) = if p.0 < q.0 { (p, q) } else { (q, p) };
        (RatioIndex { first, second }, sign)
    }

    /// Contribution sign of split `s`: nonzero only when `s` separates both
    /// pairs, positive when the first elements of the pairs share a side.
    pub fn sigma(&self, s: &Split) -> i64 {
        let (i, j) = self.first;
        let (k, l) = self.second;
        if !s.separates(i, j) || !s.separates(k, l) {
            0
        } else if s.same_side(i, k) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for RatioIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.first.0, self.first.1, self.second.0, self.second.1)
    }
}

/// The ordered coordinate list for a leaf set: 4-subsets `a<b<c<d` in
/// lexicographic order, each contributing `ab|cd`, `ac|bd`, `ad|bc`.
#[derive(Debug, Clone)]
pub struct CoordinateSystem {
    leaves: LeafSet,
    indices: Vec<RatioIndex>,
    blocks: HashMap<u64, usize>,
}

impl CoordinateSystem {
    pub fn new(leaves: LeafSet) -> Result<CoordinateSystem> {
        if leaves.len() < 4 {
            return Err(Error::InvalidLeafCount(leaves.len()));
        }
        let labels = leaves.to_vec();
        let mut indices = Vec::new();
        let mut blocks = HashMap::new();
        let m = labels.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for d in c + 1..m {
                        let [a, b, c, d] = [labels[a], labels[b], labels[c], labels[d]];
                        let key = LeafSet::from_labels([a, b, c, d])?.bits();
                        blocks.insert(key, indices.len() / 3);
                        indices.push(RatioIndex { first: (a, b), second: (c, d) });
                        indices.push(RatioIndex { first: (a, c), second: (b, d) });
                        indices.push(RatioIndex { first: (a, d), second: (b, c) });
                    }
                }
            }
        }
        Ok(CoordinateSystem { leaves, indices, blocks })
    }

    pub fn for_n(n: usize) -> Result<CoordinateSystem> {
        CoordinateSystem::new(LeafSet::range(n)?)
    }

    pub fn leaves(&self) -> LeafSet {
        self.leaves
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[RatioIndex] {
        &self.indices
    }

    /// Position of the stored representative of `r`, with the relating sign.
    pub fn position(&self, r: &RatioIndex) -> Option<(usize, i64)> {
        let (canon, sign) = r.canonical();
        let block = *self.blocks.get(&canon.labels().bits())?;
        // `canon.first.0` is the smallest label, so the partner's rank picks the pairing.
        let offset = canon.labels().iter().position(|y| y == canon.first.1).expect("in quartet") - 1;
        Some((3 * block + offset, sign))
    }

    /// The 4-subsets in coordinate order.
    pub fn quartets(&self) -> impl Iterator<Item = [Label; 4]> + '_ {
        self.indices.chunks(3).map(|c| [c[0].first.0, c[0].first.1, c[0].second.0, c[0].second.1])
    }
}

pub fn canonical_coordinates(n: usize) -> Result<Vec<RatioIndex>> {
    Ok(CoordinateSystem::for_n(n)?.indices)
}

/// A point of `Q ∪ {±inf}` to the power `N = 3 * C(n, 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddingVector {
    leaves: LeafSet,
    entries: Vec<Extended>,
}

impl EmbeddingVector {
    pub fn new(leaves: LeafSet, entries: Vec<Extended>) -> Result<EmbeddingVector> {
        let expected = expected_len(leaves.len());
        if leaves.len() < 4 {
            return Err(Error::InvalidLeafCount(leaves.len()));
        }
        if entries.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: entries.len() });
        }
        Ok(EmbeddingVector { leaves, entries })
    }

    pub fn leaves(&self) -> LeafSet {
        self.leaves
    }

    pub fn entries(&self) -> &[Extended] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Extended> {
        self.entries
    }

    /// Value of an arbitrary ratio index, reading the stored representative.
    pub fn get(&self, coords: &CoordinateSystem, r: &RatioIndex) -> Option<Extended> {
        let (pos, sign) = coords.position(r)?;
        let v = self.entries[pos].clone();
        Some(if sign < 0 { -v } else { v })
    }
}

fn expected_len(m: usize) -> usize {
    if m < 4 {
        0
    } else {
        m * (m - 1) * (m - 2) * (m - 3) / 8
    }
}

fn signed_sum<'a, I>(terms: I) -> Extended
where
    I: IntoIterator<Item = (i64, &'a EdgeLength)>,
{
    terms
        .into_iter()
        .filter(|(sigma, _)| *sigma != 0)
        .fold(Extended::zero(), |acc, (sigma, len)| {
            acc.checked_add(&(len * sigma))
                .expect("splits on a common path are oriented consistently")
        })
}

pub fn double_ratio(x: &ModuliPoint, r: &RatioIndex) -> Result<Extended> {
    if !r.labels().is_subset(x.leaves()) {
        return Err(Error::InvalidLabel(r.labels().difference(x.leaves()).min().unwrap_or(0)));
    }
    Ok(signed_sum(x.lengths.iter().map(|(s, l)| (r.sigma(s), l))))
}

pub fn embed_with(coords: &CoordinateSystem, x: &ModuliPoint) -> Result<EmbeddingVector> {
    if coords.leaves() != x.leaves() {
        return Err(Error::DimensionMismatch { expected: coords.leaves().len(), got: x.n() });
    }
    let entries = coords
        .indices()
        .iter()
        .map(|r| signed_sum(x.lengths.iter().map(|(s, l)| (r.sigma(s), l))))
        .collect();
    Ok(EmbeddingVector { leaves: x.leaves(), entries })
}

/// The vector of all double ratios in canonical coordinate order.
pub fn embed(x: &ModuliPoint) -> Result<EmbeddingVector> {
    embed_with(&CoordinateSystem::new(x.leaves())?, x)
}

/// Gradient of the embedding along the length of `s` on a cone containing
/// (or refinable by) `s`.
pub fn direction_vector(t: &CombinatorialType, s: &Split) -> Result<Vec<i64>> {
    if !t.contains(s) && !t.compatible_with(s) {
        return Err(Error::IncompatibleSplit(s.bipartition()));
    }
    let coords = CoordinateSystem::new(t.leaves())?;
    Ok(coords.indices().iter().map(|r| r.sigma(s)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quartet {
    Star,
    /// Index of the vanishing pairing within the block.
    Resolved(usize),
}

/// Inverts [`embed`] on finite vectors.
///
/// Reads quartet topologies from the vanishing pattern, grows the split
/// system one label at a time, assigns each split the smallest absolute
/// value among its mixed coordinates and finally re-embeds to confirm.
pub fn reconstruct(v: &EmbeddingVector) -> Result<ModuliPoint> {
    let coords = CoordinateSystem::new(v.leaves)?;
    let mut values: Vec<&BigRational> = Vec::with_capacity(v.entries.len());
    for (r, e) in coords.indices().iter().zip(&v.entries) {
        match e.finite() {
            Some(q) => values.push(q),
            None => return Err(Error::NotInImage(format!("entry {r} is infinite"))),
        }
    }
    let mut quartets: HashMap<u64, Quartet> = HashMap::new();
    for (block, four) in coords.quartets().enumerate() {
        let b = &values[3 * block..3 * block + 3];
        let zeros: Vec<usize> = (0..3).filter(|&i| b[i].is_zero()).collect();
        let q = match zeros.as_slice() {
            [_, _, _] => Quartet::Star,
            [z] => Quartet::Resolved(*z),
            _ => {
                return Err(Error::NotInImage(format!(
                    "quartet {four:?} has values ({}, {}, {})",
                    b[0], b[1], b[2]
                )))
            }
        };
        quartets.insert(LeafSet::from_labels(four)?.bits(), q);
    }

    let resolves = |a: Label, b: Label, c: Label, d: Label| -> bool {
        let four = LeafSet::from_labels([a, b, c, d]).expect("labels of the leaf set");
        let Some(&Quartet::Resolved(z)) = quartets.get(&four.bits()) else { return false };
        // Pairing z of the sorted quartet pairs its smallest label with the (z+1)-th.
        let sorted = four.to_vec();
        let partner = sorted[z + 1];
        let low = sorted[0];
        let pair = LeafSet::from_labels([a, b]).expect("labels");
        pair == LeafSet::from_labels([low, partner]).expect("labels")
            || pair == four.difference(LeafSet::from_labels([low, partner]).expect("labels"))
    };
    let is_split = |side: LeafSet, rest: LeafSet| -> bool {
        let a = side.to_vec();
        let b = rest.to_vec();
        for (i, &p) in a.iter().enumerate() {
            for &q in &a[i + 1..] {
                for (k, &r) in b.iter().enumerate() {
                    for &s in &b[k + 1..] {
                        if !resolves(p, q, r, s) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    };

    let labels = v.leaves.to_vec();
    let mut prefix = LeafSet::from_labels(labels[..3].iter().copied())?;
    let mut sides: Vec<LeafSet> = Vec::new();
    for &x in &labels[3..] {
        let next = prefix.with(x);
        let mut candidates: BTreeSet<LeafSet> = BTreeSet::new();
        for &side in &sides {
            candidates.insert(side.with(x));
            candidates.insert(prefix.difference(side).with(x));
        }
        for l in prefix.iter() {
            candidates.insert(LeafSet::singleton(l).with(x));
        }
        sides = candidates
            .into_iter()
            .filter(|&side| side.len() >= 2 && next.len() - side.len() >= 2)
            .filter(|&side| is_split(side, next.difference(side)))
            .collect();
        prefix = next;
    }

    let mut edges = Vec::with_capacity(sides.len());
    for side in sides {
        let split = Split::new(v.leaves, side)?;
        let (a, b) = (split.side().to_vec(), split.complement().to_vec());
        let mut best: Option<BigRational> = None;
        for (i, &p) in a.iter().enumerate() {
            for &q in &a[i + 1..] {
                for (k, &r) in b.iter().enumerate() {
                    for &s in &b[k + 1..] {
                        let idx = RatioIndex { first: (p, r), second: (q, s) };
                        let (pos, _) = coords.position(&idx).expect("index of the leaf set");
                        let m = values[pos].abs();
                        if best.as_ref().is_none_or(|b| m < *b) {
                            best = Some(m);
                        }
                    }
                }
            }
        }
        let len = best.expect("split sides have two leaves each");
        if len.is_zero() {
            return Err(Error::NotInImage(format!("split {} has length 0", split.bipartition())));
        }
        edges.push((split, EdgeLength::Finite(len)));
    }
    let point = ModuliPoint::new(v.leaves, edges)
        .map_err(|e| Error::NotInImage(format!("recovered splits are invalid: {e}")))?;
    if embed_with(&coords, &point)?.entries != v.entries {
        return Err(Error::NotInImage("re-embedding does not reproduce the vector".into()));
    }
    Ok(point)
}

/// The link of the origin: rays as vertices, 2-dimensional cones as edges.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub vertices: Vec<CombinatorialType>,
    pub edges: Vec<(usize, usize)>,
}

impl LinkGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist: Vec<Option<usize>> = vec![None; n];
            let mut via: Vec<Option<usize>> = vec![None; n];
            dist[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u].expect("queued vertices have a distance");
                for &(w, e) in &adj[u] {
                    if via[u] == Some(e) {
                        continue;
                    }
                    match dist[w] {
                        None => {
                            dist[w] = Some(du + 1);
                            via[w] = Some(e);
                            queue.push_back(w);
                        }
                        Some(dw) => {
                            let c = du + dw + 1;
                            best = Some(best.map_or(c, |b| b.min(c)));
                        }
                    }
                }
            }
        }
        best
    }

    /// Undirected DOT graph; node ids are canonical split texts.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph link {\n");
        for v in &self.vertices {
            let s = v.splits().iter().next().expect("rays have one split");
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", s.to_text(), s.bipartition());
        }
        for &(a, b) in &self.edges {
            let sa = self.vertices[a].splits().iter().next().expect("ray");
            let sb = self.vertices[b].splits().iter().next().expect("ray");
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", sa.to_text(), sb.to_text());
        }
        out.push_str("}\n");
        out
    }
}

pub fn link_graph(n: usize) -> Result<LinkGraph> {
    if n < 5 {
        return Err(Error::InvalidLeafCount(n));
    }
    let vertices = enumerate_types(n, 1)?;
    let index: HashMap<Split, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, t)| (*t.splits().iter().next().expect("ray"), i))
        .collect();
    let edges = enumerate_types(n, 2)?
        .iter()
        .map(|t| {
            let mut it = t.splits().iter();
            let a = index[it.next().expect("two splits")];
            let b = index[it.next().expect("two splits")];
            (a, b)
        })
        .collect();
    Ok(LinkGraph { vertices, edges })
}
