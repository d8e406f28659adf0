//! Independent oracles and samplers shared by the integration tests and the
//! acceptance runner. Nothing here goes through the library's tree code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use tropmod::moduli::ModuliPoint;
use tropmod::trees::{random_trivalent, Label, LeafSet, Split};
use tropmod::{EdgeLength, Extended};

/// A split as the sorted side not containing leaf 1.
pub type SideKey = Vec<Label>;

/// Leaves are vertices `1..=n`; internal vertices are `n+1..=n+m`.
#[derive(Debug, Clone)]
pub struct Graph {
    pub n: usize,
    pub vertices: usize,
    /// `(u, v, length)`; leaf edges carry length zero.
    pub edges: Vec<(usize, usize, BigRational)>,
}

impl Graph {
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices + 1];
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            adj[u].push((i, v));
            adj[v].push((i, u));
        }
        adj
    }

    fn is_internal(&self, v: usize) -> bool {
        v > self.n
    }

    /// Leaves reachable from `start` without using edge `cut`.
    fn leaves_beyond(&self, adj: &[Vec<(usize, usize)>], start: usize, cut: usize) -> Vec<Label> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.vertices + 1];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            if v <= self.n {
                out.push(v);
            }
            for &(e, w) in &adj[v] {
                if e != cut && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Splits of the internal edges, keyed canonically, with their lengths.
    pub fn splits(&self) -> Vec<(SideKey, BigRational)> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for (i, (u, v, len)) in self.edges.iter().enumerate() {
            if !(self.is_internal(*u) && self.is_internal(*v)) {
                continue;
            }
            let side = self.leaves_beyond(&adj, *v, i);
            let side = if side.contains(&1) {
                (1..=self.n).filter(|l| !side.contains(l)).collect()
            } else {
                side
            };
            out.push((side, len.clone()));
        }
        out.sort();
        out
    }

    pub fn split_keys(&self) -> BTreeSet<SideKey> {
        self.splits().into_iter().map(|(k, _)| k).collect()
    }

    pub fn to_point(&self) -> ModuliPoint {
        let leaves = LeafSet::range(self.n).unwrap();
        let edges = self.splits().into_iter().map(|(side, len)| {
            let s = Split::new(leaves, LeafSet::from_labels(side).unwrap()).unwrap();
            (s, EdgeLength::finite(len).unwrap())
        });
        ModuliPoint::new(leaves, edges).unwrap()
    }

    /// Vertex path from `a` to `b` as `(edge, from, to)` steps.
    fn path(&self, adj: &[Vec<(usize, usize)>], a: usize, b: usize) -> Vec<(usize, usize, usize)> {
        let mut prev = vec![None; self.vertices + 1];
        let mut seen = vec![false; self.vertices + 1];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(v) = queue.pop_front() {
            for &(e, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((e, v));
                    queue.push_back(w);
                }
            }
        }
        let mut steps = Vec::new();
        let mut v = b;
        while v != a {
            let (e, u) = prev[v].expect("tree is connected");
            steps.push((e, u, v));
            v = u;
        }
        steps.reverse();
        steps
    }

    /// Signed length of the overlap of the paths `i→j` and `k→l`: positive
    /// when the shared edges are walked in the same direction.
    pub fn path_ratio(&self, i: Label, j: Label, k: Label, l: Label) -> BigRational {
        let adj = self.adjacency();
        let first: HashMap<usize, (usize, usize)> =
            self.path(&adj, i, j).into_iter().map(|(e, u, v)| (e, (u, v))).collect();
        let mut total = BigRational::from_integer(0.into());
        for (e, u, v) in self.path(&adj, k, l) {
            if let Some(&(a, b)) = first.get(&e) {
                let len = &self.edges[e].2;
                if (a, b) == (u, v) {
                    total += len;
                } else {
                    assert_eq!((a, b), (v, u));
                    total -= len;
                }
            }
        }
        total
    }
}

pub fn random_length<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.random_range(1..=bound)), BigInt::from(rng.random_range(1..=bound)))
}

/// A random trivalent tree built by subdividing random edges, with random
/// positive internal lengths.
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R, bound: i64) -> Graph {
    assert!(n >= 3);
    let zero = BigRational::from_integer(0.into());
    let centre = n + 1;
    let mut g = Graph { n, vertices: centre, edges: (1..=3).map(|l| (l, centre, zero.clone())).collect() };
    for leaf in 4..=n {
        let e = rng.random_range(0..g.edges.len());
        let (u, v, _) = g.edges[e].clone();
        g.vertices += 1;
        let w = g.vertices;
        g.edges[e] = (u, w, zero.clone());
        g.edges.push((w, v, zero.clone()));
        g.edges.push((leaf, w, zero.clone()));
    }
    for (u, v, len) in g.edges.iter_mut() {
        if g.n < *u && g.n < *v {
            *len = random_length(rng, bound);
        }
    }
    g
}

/// Decodes a Prüfer sequence over vertices `1..=total`.
pub fn prufer_decode(seq: &[usize], total: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; total + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(total - 1);
    for &v in seq {
        let leaf = (1..=total).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=total).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn split_set(n: usize, m: usize, edges: &[(usize, usize)]) -> BTreeSet<SideKey> {
    let zero = BigRational::from_integer(0.into());
    let g = Graph { n, vertices: n + m, edges: edges.iter().map(|&(u, v)| (u, v, zero.clone())).collect() };
    g.split_keys()
}

/// Every sequence over `n+1..=n+m` of length `n+m−2` in which each symbol
/// occurs at least twice (exactly twice when `exact`).
fn sequences(n: usize, m: usize, exact: bool, f: &mut dyn FnMut(&[usize])) {
    let len = n + m - 2;
    let mut seq = vec![0; len];
    let mut count = vec![0usize; m];
    fn rec(
        pos: usize,
        seq: &mut Vec<usize>,
        count: &mut Vec<usize>,
        n: usize,
        exact: bool,
        f: &mut dyn FnMut(&[usize]),
    ) {
        let len = seq.len();
        let missing: usize = count.iter().map(|&c| 2usize.saturating_sub(c)).sum();
        if missing > len - pos {
            return;
        }
        if pos == len {
            f(seq);
            return;
        }
        for s in 0..count.len() {
            if exact && count[s] == 2 {
                continue;
            }
            count[s] += 1;
            seq[pos] = n + 1 + s;
            rec(pos + 1, seq, count, n, exact, f);
            count[s] -= 1;
        }
    }
    rec(0, &mut seq, &mut count, n, exact, f);
}

/// Distinct leaf-labelled trees with `n` leaves and `m` internal vertices
/// of valence ≥ 3, as split sets. Internal labels are erased by keeping
/// only the splits.
pub fn prufer_types(n: usize, m: usize) -> BTreeSet<BTreeSet<SideKey>> {
    let total = n + m;
    let trivalent = m == n - 2;
    let mut out = BTreeSet::new();
    sequences(n, m, trivalent, &mut |seq| {
        let edges = prufer_decode(seq, total);
        out.insert(split_set(n, m, &edges));
    });
    out
}

/// Number of labelled trees counted before erasing internal labels.
pub fn prufer_sequence_count(n: usize, m: usize) -> u64 {
    let mut c = 0;
    sequences(n, m, m == n - 2, &mut |_| c += 1);
    c
}

pub fn side_key(s: &Split) -> SideKey {
    let side = if s.side().contains(1) { s.complement() } else { s.side() };
    side.to_vec()
}

pub fn type_key(splits: &BTreeSet<Split>) -> BTreeSet<SideKey> {
    splits.iter().map(side_key).collect()
}

/// Random facet point, or with `faces` a random face of one, with lengths
/// whose numerators and denominators are at most `bound`.
pub fn random_point<R: Rng + ?Sized>(n: usize, rng: &mut R, bound: i64, faces: bool) -> ModuliPoint {
    let leaves = LeafSet::range(n).unwrap();
    let t = random_trivalent(leaves, rng).unwrap();
    let mut edges = Vec::new();
    for s in t.splits() {
        if !faces || rng.random_range(0..3) != 0 {
            edges.push((*s, EdgeLength::finite(random_length(rng, bound)).unwrap()));
        }
    }
    ModuliPoint::new(leaves, edges).unwrap()
}

/// Like [`random_point`] but with some lengths infinite.
pub fn random_boundary_point<R: Rng + ?Sized>(n: usize, rng: &mut R, bound: i64) -> ModuliPoint {
    let x = random_point(n, rng, bound, true);
    let edges: Vec<(Split, EdgeLength)> = x
        .lengths()
        .iter()
        .map(|(s, l)| (*s, if rng.random_range(0..3) == 0 { EdgeLength::Infinite } else { l.clone() }))
        .collect();
    ModuliPoint::new(x.leaves(), edges).unwrap()
}

pub fn ext(q: BigRational) -> Extended {
    Extended::Finite(q)
}

pub fn double_factorial(k: u64) -> u64 {
    (1..=k).rev().step_by(2).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
