//! Forgetful maps, their sections and the boundary strata of the
//! compactification.
//!
//! Labels are never renumbered implicitly: forgetting `j` leaves a curve over
//! the remaining labels, and a section adds the label one past the largest.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::moduli::ModuliPoint;
use crate::number::EdgeLength;
use crate::trees::{CombinatorialType, Label, LeafSet, Split, MAX_LABEL};

/// Contracts the leaf `j` and stabilizes.
///
/// Splits that become leaf edges are dropped; splits whose restrictions
/// coincide (the two edges at the vertex that loses `j`) merge and add their
/// lengths.
pub fn forget(x: &ModuliPoint, j: Label) -> Result<ModuliPoint> {
    if !x.leaves().contains(j) {
        return Err(Error::InvalidLabel(j));
    }
    if x.n() < 4 {
        return Err(Error::TooFewLeaves(x.n()));
    }
    let mut merged: BTreeMap<Split, EdgeLength> = BTreeMap::new();
    for (s, len) in x.lengths() {
        if let Some(r) = s.forget(j) {
            merged
                .entry(r)
                .and_modify(|old| *old = &*old + len)
                .or_insert_with(|| len.clone());
        }
    }
    ModuliPoint::new(x.leaves().without(j), merged)
}

/// The combinatorial type of `forget` on the interior of the cone of `t`.
pub fn forget_cone(t: &CombinatorialType, j: Label) -> Result<CombinatorialType> {
    if !t.leaves().contains(j) {
        return Err(Error::InvalidLabel(j));
    }
    if t.n() < 4 {
        return Err(Error::TooFewLeaves(t.n()));
    }
    CombinatorialType::new(t.leaves().without(j), t.splits().iter().filter_map(|s| s.forget(j)))
}

/// The section of the forgetful map of the new label through leaf `k`: the
/// new leaf sprouts next to `k` on an edge of infinite length.
pub fn section(x: &ModuliPoint, k: Label) -> Result<ModuliPoint> {
    if !x.leaves().contains(k) {
        return Err(Error::InvalidLabel(k));
    }
    let new = x.leaves().max().expect("nonempty") + 1;
    if new > MAX_LABEL {
        return Err(Error::LabelOutOfRange(new));
    }
    let leaves = x.leaves().with(new);
    let mut edges = Vec::with_capacity(x.lengths().len() + 1);
    for (s, len) in x.lengths() {
        edges.push((Split::new(leaves, s.part_of(k).with(new))?, len.clone()));
    }
    edges.push((Split::new(leaves, LeafSet::singleton(k).with(new))?, EdgeLength::Infinite));
    ModuliPoint::new(leaves, edges)
}

/// Relabels leaves by an injective map.
pub fn relabel(x: &ModuliPoint, f: &impl Fn(Label) -> Label) -> Result<ModuliPoint> {
    let leaves = LeafSet::from_labels(x.leaves().iter().map(f))?;
    if leaves.len() != x.n() {
        return Err(Error::InvalidSplit("relabeling is not injective".into()));
    }
    let edges = x
        .lengths()
        .iter()
        .map(|(s, l)| Ok((s.relabel(f)?, l.clone())))
        .collect::<Result<Vec<_>>>()?;
    ModuliPoint::new(leaves, edges)
}

/// Renumbers the leaves `1..=n` preserving their order.
pub fn relabel_dense(x: &ModuliPoint) -> Result<ModuliPoint> {
    let rank: HashMap<Label, Label> = x.leaves().iter().enumerate().map(|(i, l)| (l, i + 1)).collect();
    relabel(x, &|l| rank[&l])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryComponent {
    /// A curve over its original leaves plus one marker per cut edge.
    pub point: ModuliPoint,
    pub markers: Vec<Label>,
}

/// One infinite edge that was cut. Both sides carry `marker` as a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gluing {
    pub marker: Label,
    pub split: Split,
    /// Component on the side of the smallest label, then the other one.
    pub components: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDecomposition {
    pub leaves: LeafSet,
    pub components: Vec<BoundaryComponent>,
    pub gluings: Vec<Gluing>,
}

impl BoundaryDecomposition {
    /// Reassembles the compactified curve.
    pub fn glue(&self) -> Result<ModuliPoint> {
        let by_marker: HashMap<Label, &Gluing> = self.gluings.iter().map(|g| (g.marker, g)).collect();
        let markers = self.gluings.iter().fold(LeafSet::EMPTY, |acc, g| acc.with(g.marker));
        // Original leaves on the far side of `marker` as seen from `from`.
        fn beyond(
            d: &BoundaryDecomposition,
            by_marker: &HashMap<Label, &Gluing>,
            markers: LeafSet,
            from: usize,
            marker: Label,
        ) -> LeafSet {
            let g = by_marker[&marker];
            let to = if g.components[0] == from { g.components[1] } else { g.components[0] };
            let comp = &d.components[to];
            let own = comp.point.leaves().difference(markers);
            comp.markers
                .iter()
                .filter(|&&m| m != marker)
                .fold(own, |acc, &m| acc.union(beyond(d, by_marker, markers, to, m)))
        }
        let mut edges = Vec::new();
        for (c, comp) in self.components.iter().enumerate() {
            for (s, len) in comp.point.lengths() {
                let side = s.side().iter().fold(LeafSet::EMPTY, |acc, l| {
                    if markers.contains(l) {
                        acc.union(beyond(self, &by_marker, markers, c, l))
                    } else {
                        acc.with(l)
                    }
                });
                edges.push((Split::new(self.leaves, side)?, len.clone()));
            }
        }
        for g in &self.gluings {
            edges.push((g.split, EdgeLength::Infinite));
        }
        ModuliPoint::new(self.leaves, edges)
    }
}

/// Cuts every edge of infinite length.
///
/// Markers are fresh labels above the largest leaf, assigned to the infinite
/// splits in split order.
pub fn decompose_boundary(x: &ModuliPoint) -> Result<BoundaryDecomposition> {
    let tree = x.ty().to_tree();
    let adj = tree.adjacency();
    let top = x.leaves().max().expect("nonempty");
    let mut marker_of: HashMap<usize, Label> = HashMap::new();
    let mut next = top;
    for (i, e) in tree.edges.iter().enumerate() {
        if !x.length(&e.split).expect("every split has a length").is_finite() {
            next += 1;
            if next > MAX_LABEL {
                return Err(Error::LabelOutOfRange(next));
            }
            marker_of.insert(i, next);
        }
    }
    // Vertices reachable from `start` without crossing infinite edges or `skip`.
    let reach = |start: usize, skip: Option<usize>| -> Vec<usize> {
        let mut seen = vec![false; tree.vertices.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for &(e, w) in &adj[v] {
                if Some(e) != skip && !marker_of.contains_key(&e) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out
    };
    let labels_of = |vertices: &[usize]| -> LeafSet {
        let mut set = LeafSet::EMPTY;
        for &v in vertices {
            set = tree.vertices[v].leaves.iter().fold(set, |s, &l| s.with(l));
            for &(e, _) in &adj[v] {
                if let Some(&m) = marker_of.get(&e) {
                    set = set.with(m);
                }
            }
        }
        set
    };

    let mut component_of = vec![usize::MAX; tree.vertices.len()];
    let mut components = Vec::new();
    for v in 0..tree.vertices.len() {
        if component_of[v] != usize::MAX {
            continue;
        }
        let members = reach(v, None);
        let c = components.len();
        for &u in &members {
            component_of[u] = c;
        }
        let leaves = labels_of(&members);
        let mut edges = Vec::new();
        for (i, e) in tree.edges.iter().enumerate() {
            if marker_of.contains_key(&i) || component_of[e.ends[0]] != c {
                continue;
            }
            let side = labels_of(&reach(e.ends[1], Some(i)));
            edges.push((Split::new(leaves, side)?, x.length(&e.split).expect("length").clone()));
        }
        let mut markers: Vec<Label> = leaves.iter().filter(|&l| l > top).collect();
        markers.sort_unstable();
        components.push(BoundaryComponent { point: ModuliPoint::new(leaves, edges)?, markers });
    }
    let mut gluings: Vec<Gluing> = marker_of
        .iter()
        .map(|(&i, &marker)| {
            let e = &tree.edges[i];
            Gluing {
                marker,
                split: e.split,
                components: [component_of[e.ends[0]], component_of[e.ends[1]]],
            }
        })
        .collect();
    gluings.sort_by_key(|g| g.marker);
    Ok(BoundaryDecomposition { leaves: x.leaves(), components, gluings })
}
