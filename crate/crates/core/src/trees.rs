//! Combinatorial types of rational curves with marked leaves.
//!
//! A tree with marked leaves and internal vertices of valence at least three
//! is determined by the leaf bipartitions cut out by its bounded edges. Types
//! are stored in that form: a leaf set plus a set of pairwise compatible
//! splits. Internal vertices are never named; [`TreeRealization`] rebuilds
//! them on demand.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// A marking. Labels are small positive integers, at most [`MAX_LABEL`].
pub type Label = usize;

pub const MAX_LABEL: Label = 63;

/// A set of labels, stored as a bitmask (bit `l` for label `l`).
///
/// Sets are ordered lexicographically by their sorted label sequences, so
/// `{2,3} < {2,3,4} < {2,4}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LeafSet(u64);

impl LeafSet {
    pub const EMPTY: LeafSet = LeafSet(0);

    /// `{1, ..., n}`.
    pub fn range(n: usize) -> Result<LeafSet> {
        if n > MAX_LABEL {
            return Err(Error::LabelOutOfRange(n));
        }
        Ok(LeafSet(((1u128 << (n + 1)) - 2) as u64))
    }

    pub fn from_labels<I: IntoIterator<Item = Label>>(labels: I) -> Result<LeafSet> {
        let mut set = LeafSet::EMPTY;
        for l in labels {
            if l == 0 || l > MAX_LABEL {
                return Err(Error::LabelOutOfRange(l));
            }
            set.0 |= 1 << l;
        }
        Ok(set)
    }

    pub fn singleton(l: Label) -> LeafSet {
        debug_assert!((1..=MAX_LABEL).contains(&l));
        LeafSet(1 << l)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, l: Label) -> bool {
        l <= MAX_LABEL && self.0 & (1 << l) != 0
    }

    pub fn with(self, l: Label) -> LeafSet {
        LeafSet(self.0 | LeafSet::singleton(l).0)
    }

    pub fn without(self, l: Label) -> LeafSet {
        if l > MAX_LABEL {
            return self;
        }
        LeafSet(self.0 & !(1 << l))
    }

    pub fn union(self, other: LeafSet) -> LeafSet {
        LeafSet(self.0 | other.0)
    }

    pub fn intersection(self, other: LeafSet) -> LeafSet {
        LeafSet(self.0 & other.0)
    }

    pub fn difference(self, other: LeafSet) -> LeafSet {
        LeafSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: LeafSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: LeafSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<Label> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Label)
    }

    pub fn max(self) -> Option<Label> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as Label)
    }

    pub fn iter(self) -> impl Iterator<Item = Label> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let l = bits.trailing_zeros() as Label;
            bits &= bits - 1;
            Some(l)
        })
    }

    pub fn to_vec(self) -> Vec<Label> {
        self.iter().collect()
    }

    /// Labels concatenated (`"45"`), or comma separated once any label has
    /// two digits.
    pub fn to_text(self) -> String {
        if self.max().is_some_and(|m| m >= 10) {
            self.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
        } else {
            self.iter().map(|l| l.to_string()).collect()
        }
    }
}

impl Ord for LeafSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let p = diff.trailing_zeros();
        let above = if p == 63 { 0 } else { !0u64 << (p + 1) };
        if self.0 & (1 << p) != 0 {
            // `self` continues with p; `other` continues with something larger or ends.
            if other.0 & above == 0 { Ordering::Greater } else { Ordering::Less }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for LeafSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LeafSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A bipartition of the leaves with at least two leaves on each side: the
/// data of one bounded edge.
///
/// The stored side is the one not containing the smallest leaf label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split {
    leaves: LeafSet,
    side: LeafSet,
}

impl Split {
    /// Canonicalizes `side` (either half of the bipartition may be given).
    pub fn new(leaves: LeafSet, side: LeafSet) -> Result<Split> {
        if !side.is_subset(leaves) {
            return Err(Error::InvalidSplit(format!(
                "side {side:?} is not contained in the leaves {leaves:?}"
            )));
        }
        let other = leaves.difference(side);
        if side.len() < 2 || other.len() < 2 {
            return Err(Error::InvalidSplit(format!(
                "{}|{} has a side with fewer than two leaves",
                side.to_text(),
                other.to_text()
            )));
        }
        let root = leaves.min().expect("nonempty");
        let side = if side.contains(root) { other } else { side };
        Ok(Split { leaves, side })
    }

    /// Split of `{1..n}` with the given side.
    pub fn of(n: usize, side: &[Label]) -> Result<Split> {
        let leaves = LeafSet::range(n)?;
        let side = LeafSet::from_labels(side.iter().copied())?;
        Split::new(leaves, side)
    }

    pub fn leaves(&self) -> LeafSet {
        self.leaves
    }

    /// The canonical side (without the smallest label).
    pub fn side(&self) -> LeafSet {
        self.side
    }

    pub fn complement(&self) -> LeafSet {
        self.leaves.difference(self.side)
    }

    /// The half of the bipartition containing `l`.
    pub fn part_of(&self, l: Label) -> LeafSet {
        if self.side.contains(l) { self.side } else { self.complement() }
    }

    pub fn same_side(&self, a: Label, b: Label) -> bool {
        self.side.contains(a) == self.side.contains(b)
    }

    pub fn separates(&self, a: Label, b: Label) -> bool {
        !self.same_side(a, b)
    }

    /// Two splits are compatible when some pair of their halves is disjoint.
    pub fn compatible(&self, other: &Split) -> bool {
        let (a, ac) = (self.side, self.complement());
        let (b, bc) = (other.side, other.complement());
        !a.intersects(b) || !a.intersects(bc) || !ac.intersects(b) || !ac.intersects(bc)
    }

    /// Restriction to the leaves without `j`, or `None` when it degenerates
    /// to a leaf edge.
    pub fn forget(&self, j: Label) -> Option<Split> {
        let leaves = self.leaves.without(j);
        Split::new(leaves, self.side.without(j)).ok()
    }

    /// Image under an injective relabeling of the leaves.
    pub fn relabel(&self, f: &impl Fn(Label) -> Label) -> Result<Split> {
        let leaves = LeafSet::from_labels(self.leaves.iter().map(f))?;
        if leaves.len() != self.leaves.len() {
            return Err(Error::InvalidSplit("relabeling is not injective".into()));
        }
        Split::new(leaves, LeafSet::from_labels(self.side.iter().map(f))?)
    }

    pub fn to_text(&self) -> String {
        self.side.to_text()
    }

    /// Both halves, the one holding the smallest label first: `"12|345"`.
    pub fn bipartition(&self) -> String {
        format!("{}|{}", self.complement().to_text(), self.side.to_text())
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Split({})", self.bipartition())
    }
}

/// A set of pairwise compatible splits of a fixed leaf set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombinatorialType {
    leaves: LeafSet,
    splits: BTreeSet<Split>,
}

/// Where a new leaf can be attached: in the middle of a bounded edge or of
/// the leaf edge of an existing label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSite {
    Bounded(Split),
    Leaf(Label),
}

impl CombinatorialType {
    pub fn new<I: IntoIterator<Item = Split>>(leaves: LeafSet, splits: I) -> Result<Self> {
        if leaves.len() < 3 {
            return Err(Error::InvalidLeafCount(leaves.len()));
        }
        let splits: BTreeSet<Split> = splits.into_iter().collect();
        for s in &splits {
            if s.leaves != leaves {
                return Err(Error::InvalidSplit(format!(
                    "{} is a split of {:?}, not {:?}",
                    s.bipartition(),
                    s.leaves,
                    leaves
                )));
            }
        }
        let list: Vec<&Split> = splits.iter().collect();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if !a.compatible(b) {
                    return Err(Error::IncompatibleSplits(a.bipartition(), b.bipartition()));
                }
            }
        }
        Ok(CombinatorialType { leaves, splits })
    }

    /// Type over `{1..n}` from split sides.
    pub fn of(n: usize, sides: &[&[Label]]) -> Result<Self> {
        let leaves = LeafSet::range(n)?;
        let splits = sides
            .iter()
            .map(|s| Split::of(n, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(leaves, splits)
    }

    /// The type with a single internal vertex.
    pub fn star(leaves: LeafSet) -> Result<Self> {
        Self::new(leaves, [])
    }

    pub fn leaves(&self) -> LeafSet {
        self.leaves
    }

    pub fn n(&self) -> usize {
        self.leaves.len()
    }

    pub fn splits(&self) -> &BTreeSet<Split> {
        &self.splits
    }

    /// Number of bounded edges, the dimension of the cone.
    pub fn dim(&self) -> usize {
        self.splits.len()
    }

    pub fn is_trivalent(&self) -> bool {
        self.splits.len() + 3 == self.n()
    }

    pub fn contains(&self, s: &Split) -> bool {
        self.splits.contains(s)
    }

    pub fn is_face_of(&self, other: &CombinatorialType) -> bool {
        self.leaves == other.leaves && self.splits.is_subset(&other.splits)
    }

    pub fn compatible_with(&self, s: &Split) -> bool {
        s.leaves == self.leaves && self.splits.iter().all(|t| t.compatible(s))
    }

    /// Contracts the bounded edge of `s`.
    pub fn contract(&self, s: &Split) -> Result<CombinatorialType> {
        if !self.splits.contains(s) {
            return Err(Error::SplitAbsent(s.bipartition()));
        }
        let mut splits = self.splits.clone();
        splits.remove(s);
        Ok(CombinatorialType { leaves: self.leaves, splits })
    }

    /// Adds a compatible split.
    pub fn refine(&self, s: Split) -> Result<CombinatorialType> {
        if !self.compatible_with(&s) {
            return Err(Error::IncompatibleSplit(s.bipartition()));
        }
        let mut splits = self.splits.clone();
        splits.insert(s);
        Ok(CombinatorialType { leaves: self.leaves, splits })
    }

    /// Image under an injective relabeling of the leaves.
    pub fn relabel(&self, f: &impl Fn(Label) -> Label) -> Result<CombinatorialType> {
        let leaves = LeafSet::from_labels(self.leaves.iter().map(f))?;
        if leaves.len() != self.leaves.len() {
            return Err(Error::InvalidSplit("relabeling is not injective".into()));
        }
        let splits = self.splits.iter().map(|s| s.relabel(f)).collect::<Result<BTreeSet<_>>>()?;
        Ok(CombinatorialType { leaves, splits })
    }

    pub fn edge_sites(&self) -> Vec<EdgeSite> {
        self.splits
            .iter()
            .map(|s| EdgeSite::Bounded(*s))
            .chain(self.leaves.iter().map(EdgeSite::Leaf))
            .collect()
    }

    /// Subdivides the edge at `site` and hangs the new leaf `label` there.
    pub fn attach_leaf(&self, site: EdgeSite, label: Label) -> Result<CombinatorialType> {
        if label == 0 || label > MAX_LABEL {
            return Err(Error::LabelOutOfRange(label));
        }
        if self.leaves.contains(label) {
            return Err(Error::InvalidSplit(format!("label {label} is already a leaf")));
        }
        let leaves = self.leaves.with(label);
        let mut splits = BTreeSet::new();
        match site {
            EdgeSite::Bounded(edge) => {
                if !self.splits.contains(&edge) {
                    return Err(Error::SplitAbsent(edge.bipartition()));
                }
                let (a, b) = (edge.side, edge.complement());
                for s in &self.splits {
                    if *s == edge {
                        continue;
                    }
                    // The half of `s` that contains the subdivided edge meets both
                    // halves of `edge`; the new leaf joins that half.
                    let grow = if s.side.intersects(a) && s.side.intersects(b) {
                        s.side
                    } else {
                        s.complement()
                    };
                    splits.insert(Split::new(leaves, grow.with(label))?);
                }
                splits.insert(Split::new(leaves, a.with(label))?);
                splits.insert(Split::new(leaves, b.with(label))?);
            }
            EdgeSite::Leaf(l) => {
                if !self.leaves.contains(l) {
                    return Err(Error::InvalidLabel(l));
                }
                for s in &self.splits {
                    splits.insert(Split::new(leaves, s.part_of(l).with(label))?);
                }
                let pair = LeafSet::singleton(l).with(label);
                if leaves.len() - pair.len() >= 2 {
                    splits.insert(Split::new(leaves, pair)?);
                }
            }
        }
        Ok(CombinatorialType { leaves, splits })
    }

    pub fn to_tree(&self) -> TreeRealization {
        TreeRealization::build(self)
    }

    /// Sorted internal-vertex valences.
    pub fn valence_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.to_tree().vertices.iter().map(TreeVertex::valence).collect();
        v.sort_unstable();
        v
    }

    /// For a type with one 4-valent vertex and all others trivalent, the three
    /// splits that resolve the 4-valent vertex.
    pub fn resolution_splits(&self) -> Result<[Split; 3]> {
        let tree = self.to_tree();
        let v = tree.codim_one_vertex().ok_or_else(|| Error::NotCodimensionOne(self.valence_profile()))?;
        let b = &tree.vertices[v].branches;
        let pair = |i: usize| Split::new(self.leaves, b[0].union(b[i]));
        Ok([pair(1)?, pair(2)?, pair(3)?])
    }

    /// The three trivalent-at-that-vertex types resolving the 4-valent vertex.
    pub fn resolutions(&self) -> Result<Vec<CombinatorialType>> {
        let mut out = self
            .resolution_splits()?
            .into_iter()
            .map(|s| self.refine(s))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for CombinatorialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.splits.iter().map(Split::to_text).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for CombinatorialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.splits.iter().map(Split::bipartition).collect();
        write!(f, "Type{:?}[{}]", self.leaves, parts.join(", "))
    }
}

/// An internal vertex of a realized tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeVertex {
    /// Leaves attached directly to this vertex.
    pub leaves: Vec<Label>,
    /// Bounded edges at this vertex.
    pub splits: Vec<Split>,
    /// For every incident edge (leaf edges first, then `splits` in order) the
    /// leaves beyond it.
    pub branches: Vec<LeafSet>,
}

impl TreeVertex {
    pub fn valence(&self) -> usize {
        self.leaves.len() + self.splits.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedEdge {
    pub split: Split,
    /// `ends[0]` is on the side of the smallest label.
    pub ends: [usize; 2],
}

/// The explicit tree of a combinatorial type.
#[derive(Debug, Clone)]
pub struct TreeRealization {
    pub leaves: LeafSet,
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<BoundedEdge>,
}

impl TreeRealization {
    fn build(t: &CombinatorialType) -> TreeRealization {
        let leaves = t.leaves;
        let root = leaves.min().expect("at least three leaves");
        // Vertex 0 is the vertex at the root leaf; vertex i + 1 is the far end of
        // the i-th split, whose cluster is the canonical side.
        let splits: Vec<Split> = t.splits.iter().copied().collect();
        let clusters: Vec<LeafSet> = std::iter::once(leaves.without(root))
            .chain(splits.iter().map(|s| s.side))
            .collect();
        let parent = |c: usize| -> usize {
            (0..clusters.len())
                .filter(|&p| p != c && clusters[c].is_subset(clusters[p]) && clusters[p] != clusters[c])
                .min_by_key(|&p| clusters[p].len())
                .expect("top cluster contains every cluster")
        };
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); clusters.len()];
        for c in 1..clusters.len() {
            children[parent(c)].push(c);
        }
        let mut vertices = Vec::with_capacity(clusters.len());
        let mut edges = Vec::with_capacity(splits.len());
        for (v, kids) in children.iter().enumerate() {
            let covered = kids.iter().fold(LeafSet::EMPTY, |acc, &k| acc.union(clusters[k]));
            let mut direct = clusters[v].difference(covered);
            if v == 0 {
                direct = direct.with(root);
            }
            let mut vertex = TreeVertex {
                leaves: direct.to_vec(),
                splits: Vec::new(),
                branches: direct.iter().map(LeafSet::singleton).collect(),
            };
            if v > 0 {
                vertex.splits.push(splits[v - 1]);
                vertex.branches.push(leaves.difference(clusters[v]));
            }
            for &k in kids {
                vertex.splits.push(splits[k - 1]);
                vertex.branches.push(clusters[k]);
                edges.push(BoundedEdge { split: splits[k - 1], ends: [v, k] });
            }
            vertices.push(vertex);
        }
        edges.sort_by_key(|e| e.split);
        TreeRealization { leaves, vertices, edges }
    }

    /// The vertex carrying leaf `l`.
    pub fn leaf_vertex(&self, l: Label) -> Option<usize> {
        self.vertices.iter().position(|v| v.leaves.contains(&l))
    }

    /// The unique 4-valent vertex, when every other vertex is trivalent.
    pub fn codim_one_vertex(&self) -> Option<usize> {
        let mut found = None;
        for (i, v) in self.vertices.iter().enumerate() {
            match v.valence() {
                3 => {}
                4 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Per vertex, the incident `(edge index, neighbour)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.ends[0]].push((i, e.ends[1]));
            adj[e.ends[1]].push((i, e.ends[0]));
        }
        adj
    }

    /// Bounded edges on the path from leaf `a` to leaf `b`, each with
    /// `true` when walked from `ends[0]` to `ends[1]`.
    pub fn path(&self, a: Label, b: Label) -> Option<Vec<(usize, bool)>> {
        let start = self.leaf_vertex(a)?;
        let goal = self.leaf_vertex(b)?;
        let adj = self.adjacency();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertices.len()];
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &(e, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        let mut path = Vec::new();
        let mut v = goal;
        while v != start {
            let (u, e) = prev[v]?;
            path.push((e, self.edges[e].ends[0] == u));
            v = u;
        }
        path.reverse();
        Some(path)
    }

    /// Recomputes each bounded edge's split from the topology alone.
    pub fn edge_splits(&self) -> Result<BTreeSet<Split>> {
        let adj = self.adjacency();
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mut side = LeafSet::EMPTY;
                let mut stack = vec![e.ends[1]];
                let mut seen = vec![false; self.vertices.len()];
                seen[e.ends[1]] = true;
                seen[e.ends[0]] = true;
                while let Some(v) = stack.pop() {
                    side = self.vertices[v].leaves.iter().fold(side, |s, &l| s.with(l));
                    for &(f, w) in &adj[v] {
                        if f != i && !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                Split::new(self.leaves, side)
            })
            .collect()
    }
}

/// All trivalent types on `leaves`, by attaching leaves in increasing order
/// to every edge.
pub fn trivalent_types(leaves: LeafSet) -> Result<Vec<CombinatorialType>> {
    if leaves.len() < 3 {
        return Err(Error::InvalidLeafCount(leaves.len()));
    }
    let labels = leaves.to_vec();
    let base = LeafSet::from_labels(labels[..3].iter().copied())?;
    let mut layer = vec![CombinatorialType::star(base)?];
    for &l in &labels[3..] {
        let mut next = Vec::with_capacity(layer.len() * (2 * layer[0].n() - 3));
        for t in &layer {
            for site in t.edge_sites() {
                next.push(t.attach_leaf(site, l)?);
            }
        }
        layer = next;
    }
    layer.sort();
    Ok(layer)
}

/// All combinatorial types on `{1..n}` with exactly `dim` bounded edges.
pub fn enumerate_types(n: usize, dim: usize) -> Result<Vec<CombinatorialType>> {
    if n < 3 {
        return Err(Error::InvalidLeafCount(n));
    }
    if dim > n - 3 {
        return Err(Error::InvalidDimension { dim, max: n - 3 });
    }
    let leaves = LeafSet::range(n)?;
    let facets = trivalent_types(leaves)?;
    if dim == n - 3 {
        return Ok(facets);
    }
    let mut out = BTreeSet::new();
    for f in &facets {
        let splits: Vec<Split> = f.splits.iter().copied().collect();
        for_each_subset(&splits, dim, &mut |chosen| {
            out.insert(CombinatorialType { leaves, splits: chosen.iter().copied().collect() });
        });
    }
    Ok(out.into_iter().collect())
}

fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - acc.len() {
                break;
            }
            acc.push(items[i]);
            go(items, k, i + 1, acc, f);
            acc.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Number of rays of the moduli space: bipartitions with both sides of size
/// at least two.
pub fn count_rays(n: usize) -> Result<u64> {
    if !(4..=MAX_LABEL).contains(&n) {
        return Err(Error::InvalidLeafCount(n));
    }
    Ok((1u64 << (n - 1)) - 1 - n as u64)
}

/// Uniformly random trivalent type on `leaves`.
pub fn random_trivalent<R: Rng + ?Sized>(leaves: LeafSet, rng: &mut R) -> Result<CombinatorialType> {
    if leaves.len() < 3 {
        return Err(Error::InvalidLeafCount(leaves.len()));
    }
    let labels = leaves.to_vec();
    let mut t = CombinatorialType::star(LeafSet::from_labels(labels[..3].iter().copied())?)?;
    for &l in &labels[3..] {
        let sites = t.edge_sites();
        let site = sites[rng.random_range(0..sites.len())];
        t = t.attach_leaf(site, l)?;
    }
    Ok(t)
}

pub fn contract(t: &CombinatorialType, s: &Split) -> Result<CombinatorialType> {
    t.contract(s)
}

pub fn resolutions(t: &CombinatorialType) -> Result<Vec<CombinatorialType>> {
    t.resolutions()
}

pub fn to_tree(t: &CombinatorialType) -> TreeRealization {
    t.to_tree()
}

pub fn valence_profile(t: &CombinatorialType) -> Vec<usize> {
    t.valence_profile()
}
