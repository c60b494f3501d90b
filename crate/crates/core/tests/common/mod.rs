#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use surftutte::build::{
    disjoint_union, from_rotation_system, standard_bouquet, BouquetSpec, HalfEdge,
    RotationSystem, Sign,
};
use surftutte::groups::{self, FiniteGroup};
use surftutte::poly::{MultiPoly, Var};
use surftutte::premap::Premap;

pub fn h(edge: usize, end: u8) -> HalfEdge {
    HalfEdge::new(edge, end)
}

/// Rotation system from `(edge, end)` lists per vertex; all signs positive
/// unless listed in `negative`.
pub fn rotation(vertices: &[&[(usize, u8)]], edges: usize, negative: &[usize]) -> Premap {
    let r = RotationSystem {
        vertices: vertices
            .iter()
            .map(|v| v.iter().map(|&(e, end)| h(e, end)).collect())
            .collect(),
        signs: (0..edges)
            .map(|e| {
                if negative.contains(&e) {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect(),
        isolated_vertices: 0,
    };
    from_rotation_system(&r).unwrap()
}

pub fn random_rotation_system(rng: &mut ChaCha8Rng, max_edges: usize) -> RotationSystem {
    let m = rng.gen_range(0..=max_edges);
    let v = rng.gen_range(1..=m + 1);
    let mut vertices: Vec<Vec<HalfEdge>> = vec![Vec::new(); v];
    for e in 0..m {
        for end in 0..2 {
            vertices[rng.gen_range(0..v)].push(h(e, end));
        }
    }
    for rot in &mut vertices {
        rot.shuffle(rng);
    }
    let signs = (0..m)
        .map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })
        .collect();
    RotationSystem {
        vertices,
        signs,
        isolated_vertices: rng.gen_range(0..2),
    }
}

pub fn random_maps(seed: u64, count: usize, max_edges: usize) -> Vec<Premap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| from_rotation_system(&random_rotation_system(&mut rng, max_edges)).unwrap())
        .collect()
}

fn bouquet(orientable: bool, genus: usize, edges: usize) -> Premap {
    standard_bouquet(BouquetSpec {
        orientable,
        genus,
        edges,
    })
    .unwrap()
}

/// Thirty named maps with at most four edges.
pub fn corpus() -> Vec<(String, Premap)> {
    let mut maps: Vec<(String, Premap)> = vec![
        ("plane loop".into(), Premap::plane_loop()),
        ("twisted loop".into(), Premap::twisted_loop()),
        ("bridge".into(), Premap::bridge()),
        ("torus bouquet".into(), bouquet(true, 1, 2)),
        ("genus 2 cross-cap bouquet".into(), bouquet(false, 2, 2)),
        ("isolated vertex".into(), Premap::isolated_vertices(1)),
        ("plane digon".into(), rotation(&[&[(0, 0), (1, 0)], &[(0, 1), (1, 1)]], 2, &[])),
        (
            "twisted digon".into(),
            rotation(&[&[(0, 0), (1, 0)], &[(0, 1), (1, 1)]], 2, &[1]),
        ),
        ("path of two".into(), rotation(&[&[(0, 0)], &[(0, 1), (1, 0)], &[(1, 1)]], 2, &[])),
        (
            "path of three".into(),
            rotation(&[&[(0, 0)], &[(0, 1), (1, 0)], &[(1, 1), (2, 0)], &[(2, 1)]], 3, &[]),
        ),
        (
            "triangle".into(),
            rotation(&[&[(0, 0), (2, 1)], &[(1, 0), (0, 1)], &[(2, 0), (1, 1)]], 3, &[]),
        ),
        (
            "mobius triangle".into(),
            rotation(&[&[(0, 0), (2, 1)], &[(1, 0), (0, 1)], &[(2, 0), (1, 1)]], 3, &[2]),
        ),
        (
            "plane theta".into(),
            rotation(&[&[(0, 0), (1, 0), (2, 0)], &[(2, 1), (1, 1), (0, 1)]], 3, &[]),
        ),
        (
            "toroidal theta".into(),
            rotation(&[&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 1), (2, 1)]], 3, &[]),
        ),
        ("torus bouquet with loop".into(), bouquet(true, 1, 3)),
        ("cross-cap bouquet with loop".into(), bouquet(false, 1, 2)),
        ("three cross-caps".into(), bouquet(false, 3, 3)),
        ("double torus bouquet".into(), bouquet(true, 2, 4)),
        (
            "plane loop and twisted loop".into(),
            disjoint_union(&[Premap::plane_loop(), Premap::twisted_loop()]),
        ),
        (
            "bridge and twisted loop".into(),
            disjoint_union(&[Premap::bridge(), Premap::twisted_loop()]),
        ),
        (
            "star".into(),
            rotation(&[&[(0, 0), (1, 0), (2, 0)], &[(0, 1)], &[(1, 1)], &[(2, 1)]], 3, &[]),
        ),
        (
            "square".into(),
            rotation(
                &[&[(0, 0), (3, 1)], &[(1, 0), (0, 1)], &[(2, 0), (1, 1)], &[(3, 0), (2, 1)]],
                4,
                &[],
            ),
        ),
        (
            "triangle with pendant".into(),
            rotation(&[&[(0, 0), (2, 1), (3, 0)], &[(1, 0), (0, 1)], &[(2, 0), (1, 1)], &[(3, 1)]], 4, &[]),
        ),
        (
            "crossed plane loops".into(),
            rotation(&[&[(0, 0), (1, 0), (0, 1), (1, 1)]], 2, &[1]),
        ),
        (
            "loop on a bridge".into(),
            rotation(&[&[(0, 0), (1, 0), (1, 1)], &[(0, 1)]], 2, &[1]),
        ),
    ];
    let mut seed = 1;
    while maps.len() < 30 {
        for p in random_maps(seed, 1, 4) {
            if p.edge_count() >= 2 {
                maps.push((format!("random {seed}"), p));
            }
        }
        seed += 1;
    }
    maps
}

/// A genus-0 embedding of the graph, the first found when trying rotation
/// systems in a fixed order.
pub fn plane_embedding(vertex_count: usize, edges: &[(usize, usize)]) -> Premap {
    let mut incident: Vec<Vec<HalfEdge>> = vec![Vec::new(); vertex_count];
    for (e, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(h(e, 0));
        incident[b].push(h(e, 1));
    }
    let mut options: Vec<Vec<Vec<HalfEdge>>> = Vec::new();
    for rot in &incident {
        let mut perms = Vec::new();
        if rot.len() <= 2 {
            perms.push(rot.clone());
        } else {
            let (first, rest) = rot.split_first().unwrap();
            for p in permutations(rest) {
                let mut v = vec![*first];
                v.extend(p);
                perms.push(v);
            }
        }
        options.push(perms);
    }
    let mut idx = vec![0usize; vertex_count];
    loop {
        let r = RotationSystem {
            vertices: (0..vertex_count).map(|v| options[v][idx[v]].clone()).collect(),
            signs: vec![Sign::Plus; edges.len()],
            isolated_vertices: 0,
        };
        let p = from_rotation_system(&r).unwrap();
        if p.params().s == 0 {
            return p;
        }
        let mut i = 0;
        loop {
            assert!(i < vertex_count, "graph has no plane embedding");
            idx[i] += 1;
            if idx[i] < options[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// Twenty plane maps: paths, cycles, trees, the theta graph, K4 and a wheel.
pub fn plane_maps() -> Vec<(String, Premap)> {
    let path = |n: usize| -> Vec<(usize, usize)> { (0..n).map(|i| (i, i + 1)).collect() };
    let cycle = |n: usize| -> Vec<(usize, usize)> { (0..n).map(|i| (i, (i + 1) % n)).collect() };
    let mut out: Vec<(String, Premap)> = Vec::new();
    for n in 1..=4 {
        out.push((format!("path {n}"), plane_embedding(n + 1, &path(n))));
    }
    for n in 1..=5 {
        out.push((format!("cycle {n}"), plane_embedding(n, &cycle(n))));
    }
    out.push(("theta".into(), plane_embedding(2, &[(0, 1), (0, 1), (0, 1)])));
    out.push((
        "k4".into(),
        plane_embedding(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]),
    ));
    out.push((
        "wheel 4".into(),
        plane_embedding(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
        ),
    ));
    out.push(("star 4".into(), plane_embedding(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])));
    out.push((
        "spider".into(),
        plane_embedding(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]),
    ));
    out.push(("bowtie".into(), plane_embedding(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])));
    out.push(("digon with loop".into(), plane_embedding(2, &[(0, 1), (0, 1), (0, 0)])));
    out.push(("two plane loops".into(), plane_embedding(1, &[(0, 0), (0, 0)])));
    out.push((
        "square with chord".into(),
        plane_embedding(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ));
    out.push((
        "path and triangle".into(),
        disjoint_union(&[
            plane_embedding(2, &path(1)),
            plane_embedding(3, &cycle(3)),
        ]),
    ));
    out.push(("isolated pair".into(), Premap::isolated_vertices(2)));
    assert_eq!(out.len(), 20);
    out
}

/// Underlying graph: vertex count and edge endpoint pairs.
pub fn underlying_graph(p: &Premap) -> (usize, Vec<(usize, usize)>) {
    let n = p.cross_count();
    let mut vertex_of = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if vertex_of[start] != usize::MAX {
            continue;
        }
        let mut c = start;
        let mut members = Vec::new();
        loop {
            members.push(c);
            c = p.tau(c);
            if c == start {
                break;
            }
        }
        // the partner cycle holds the side-swapped crosses
        for &c in &members {
            vertex_of[c] = count;
            vertex_of[c ^ 2] = count;
        }
        count += 1;
    }
    let edges = (0..p.edge_count())
        .map(|e| (vertex_of[4 * e], vertex_of[4 * e + 1]))
        .collect();
    (count + p.isolated_count(), edges)
}

fn rank(vertices: usize, edges: &[(usize, usize)], subset: u64) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut r = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if subset >> i & 1 == 1 {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                r += 1;
            }
        }
    }
    r
}

/// `Σ_A (X-1)^{r(E)-r(A)} (Y-1)^{|A|-r(A)}` on the underlying graph.
pub fn graph_tutte(p: &Premap) -> MultiPoly {
    let (v, edges) = underlying_graph(p);
    let m = edges.len();
    let xm1 = MultiPoly::var(Var::X) - MultiPoly::one();
    let ym1 = MultiPoly::var(Var::Y) - MultiPoly::one();
    let full = rank(v, &edges, (1u64 << m) - 1);
    let mut out = MultiPoly::zero();
    for a in 0..1u64 << m {
        let r = rank(v, &edges, a);
        out += &(&xm1.pow((full - r) as u32) * &ym1.pow(a.count_ones() - r as u32));
    }
    out
}

/// Number of conjugacy classes, straight from the table.
pub fn conjugacy_classes(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for y in 0..n {
            seen[g.mul(g.mul(y, x), g.inv(y))] = true;
        }
    }
    classes
}

pub fn involutions_and_identity(g: &FiniteGroup) -> usize {
    (0..g.order()).filter(|&x| g.mul(x, x) == 0).count()
}

/// The groups used by the flow checks.
pub fn flow_groups() -> Vec<FiniteGroup> {
    vec![
        groups::cyclic(2),
        groups::cyclic(3),
        groups::cyclic(4),
        groups::product(&groups::cyclic(2), &groups::cyclic(2)),
        groups::cyclic(6),
        groups::symmetric(3),
        groups::dihedral(8),
        groups::quaternion8(),
    ]
}

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}
