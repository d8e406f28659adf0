mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use tropmod::moduli::{
    canonical_coordinates, double_ratio, embed, embed_with, link_graph, reconstruct, CoordinateSystem,
    RatioIndex,
};
use tropmod::trees::{enumerate_types, Split};
use tropmod::{EdgeLength, Extended};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn m04_rays_and_their_sum() {
    let coords = canonical_coordinates(4).unwrap();
    let shown: Vec<String> = coords.iter().map(|r| r.to_string()).collect();
    assert_eq!(shown, ["((1,2),(3,4))", "((1,3),(2,4))", "((1,4),(2,3))"]);
    let want = [[0, 1, 1], [1, 0, -1], [-1, -1, 0]];
    let mut sum = [0i64; 3];
    for (side, want) in [[1, 2], [1, 3], [1, 4]].iter().zip(want) {
        let s = Split::of(4, side).unwrap();
        let x = tropmod::moduli::ModuliPoint::new(s.leaves(), [(s, EdgeLength::integer(1).unwrap())]).unwrap();
        let v = embed(&x).unwrap();
        let got: Vec<Extended> = want.iter().map(|&w| Extended::from_integer(w)).collect();
        assert_eq!(v.entries(), &got[..], "ray {}", s.bipartition());
        for (acc, w) in sum.iter_mut().zip(want) {
            *acc += w;
        }
    }
    assert_eq!(sum, [0, 0, 0]);
}

#[test]
fn coordinate_count_is_three_per_quartet() {
    for n in 4..=9u64 {
        assert_eq!(CoordinateSystem::for_n(n as usize).unwrap().len() as u64, 3 * binomial(n, 4));
    }
}

#[test]
fn petersen_graph() {
    let g = link_graph(5).unwrap();
    assert_eq!(g.vertices.len(), 10);
    assert_eq!(g.edges.len(), 15);
    assert!(g.degrees().iter().all(|&d| d == 3));
    assert_eq!(g.girth(), Some(5));
}

#[test]
fn link_sizes_for_n6() {
    let g = link_graph(6).unwrap();
    assert_eq!(g.vertices.len(), enumerate_types(6, 1).unwrap().len());
    assert_eq!(g.edges.len(), enumerate_types(6, 2).unwrap().len());
}

fn quartet_pattern(v: &[Extended]) {
    for block in v.chunks(3) {
        let zeros = block.iter().filter(|e| e.is_zero()).count();
        match zeros {
            3 => {}
            1 => {
                let nz: Vec<&Extended> = block.iter().filter(|e| !e.is_zero()).collect();
                assert_eq!(nz[0].abs(), nz[1].abs(), "block {block:?}");
                assert!(nz[0].abs() > Extended::zero());
            }
            _ => panic!("quartet block {block:?} has {zeros} zeros"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn split_formula_matches_graph_paths(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_graph(n, &mut rng, 1000);
        let x = g.to_point();
        let coords = CoordinateSystem::for_n(n).unwrap();
        let v = embed_with(&coords, &x).unwrap();
        for (r, e) in coords.indices().iter().zip(v.entries()) {
            let (i, j) = r.first;
            let (k, l) = r.second;
            prop_assert_eq!(e, &ext(g.path_ratio(i, j, k, l)), "{}", r);
        }
    }

    #[test]
    fn split_formula_matches_realized_tree_paths(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_point(n, &mut rng, 1000, true);
        let tree = x.ty().to_tree();
        for r in canonical_coordinates(n).unwrap() {
            let (i, j) = r.first;
            let (k, l) = r.second;
            let p1 = tree.path(i, j).unwrap();
            let p2 = tree.path(k, l).unwrap();
            let mut total = q(0);
            for (e, dir) in &p2 {
                if let Some((_, dir1)) = p1.iter().find(|(f, _)| f == e) {
                    let len = x.length(&tree.edges[*e].split).unwrap().as_finite().unwrap().clone();
                    if dir == dir1 { total += len } else { total -= len }
                }
            }
            prop_assert_eq!(double_ratio(&x, &r).unwrap(), ext(total));
        }
    }

    #[test]
    fn quartets_and_signs(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_boundary_point(n, &mut rng, 1000);
        let v = embed(&x).unwrap();
        quartet_pattern(v.entries());
        for r in canonical_coordinates(n).unwrap() {
            let signs: Vec<i64> = x.ty().splits().iter().map(|s| r.sigma(s)).filter(|&s| s != 0).collect();
            prop_assert!(signs.windows(2).all(|w| w[0] == w[1]), "{} on {}", r, x);
        }
    }

    #[test]
    fn embedding_is_linear_on_cones(n in 4usize..=8, seed in any::<u64>(), a in 1i64..50, b in 1i64..50) {
        let mut rng = seeded(seed);
        let x = random_point(n, &mut rng, 1000, true);
        let lambda = BigRational::new(a.into(), b.into());
        let scaled = embed(&x.scale(&lambda).unwrap()).unwrap();
        let v = embed(&x).unwrap();
        for (s, e) in scaled.entries().iter().zip(v.entries()) {
            prop_assert_eq!(s.clone(), ext(e.finite().unwrap() * &lambda));
        }
    }

    #[test]
    fn compatible_coordinates_vanish(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_boundary_point(n, &mut rng, 1000);
        for s in x.ty().splits() {
            let a = s.side().to_vec();
            let b = s.complement().to_vec();
            for (ii, &i) in a.iter().enumerate() {
                for &j in &a[ii + 1..] {
                    for (kk, &k) in b.iter().enumerate() {
                        for &l in &b[kk + 1..] {
                            let r = RatioIndex::new((i, j), (k, l)).unwrap();
                            prop_assert!(double_ratio(&x, &r).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lengths_are_minimal_compatible_entries(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_boundary_point(n, &mut rng, 1000);
        let v = embed(&x).unwrap();
        let coords = CoordinateSystem::for_n(n).unwrap();
        for (s, len) in x.lengths() {
            let mut best: Option<Extended> = None;
            for (r, e) in coords.indices().iter().zip(v.entries()) {
                let (i, j) = r.first;
                let (k, l) = r.second;
                if s.separates(i, j) && s.separates(k, l) {
                    prop_assert!(e.abs() >= Extended::from(len));
                    best = Some(best.map_or(e.abs(), |b| b.min(e.abs())));
                }
            }
            prop_assert_eq!(best, Some(Extended::from(len)));
        }
    }

    #[test]
    fn reconstruct_inverts_embed(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_point(n, &mut rng, 1_000_000, true);
        prop_assert_eq!(reconstruct(&embed(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn reconstruct_refuses_infinite_entries(n in 4usize..=9, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_boundary_point(n, &mut rng, 1000);
        let v = embed(&x).unwrap();
        if v.entries().iter().all(Extended::is_finite) {
            prop_assert!(x.is_interior());
            prop_assert_eq!(reconstruct(&v).unwrap(), x);
        } else {
            prop_assert!(matches!(reconstruct(&v), Err(tropmod::Error::NotInImage(_))));
        }
    }

    #[test]
    fn rejects_vectors_off_the_image(n in 5usize..=7, seed in any::<u64>(), pos in any::<prop::sample::Index>()) {
        let mut rng = seeded(seed);
        let x = random_point(n, &mut rng, 100, false);
        let mut entries = embed(&x).unwrap().into_entries();
        let i = pos.index(entries.len());
        entries[i] = ext(entries[i].finite().unwrap() + q(1));
        let v = tropmod::moduli::EmbeddingVector::new(x.leaves(), entries).unwrap();
        prop_assert!(reconstruct(&v).is_err());
    }
}

#[test]
fn small_vectors() {
    let leaves = tropmod::trees::LeafSet::range(4).unwrap();
    let v = |e: [i64; 3]| tropmod::moduli::EmbeddingVector::new(leaves, e.iter().map(|&x| Extended::from_integer(x)).collect()).unwrap();
    let x = reconstruct(&v([0, 5, 5])).unwrap();
    assert_eq!(x.to_string(), tropmod::moduli::ModuliPoint::new(leaves, [(Split::of(4, &[1, 2]).unwrap(), EdgeLength::integer(5).unwrap())]).unwrap().to_string());
    assert!(matches!(reconstruct(&v([1, 1, 1])), Err(tropmod::Error::NotInImage(_))));
    assert!(matches!(reconstruct(&v([0, 5, 4])), Err(tropmod::Error::NotInImage(_))));
}

#[test]
fn origin_embeds_to_zero_and_back() {
    for n in 4..=7 {
        let x = tropmod::moduli::ModuliPoint::origin(tropmod::trees::LeafSet::range(n).unwrap()).unwrap();
        let v = embed(&x).unwrap();
        assert!(v.entries().iter().all(Extended::is_zero));
        assert_eq!(reconstruct(&v).unwrap(), x);
    }
}
