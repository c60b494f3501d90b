//! Build maps from rotation systems and read off their parameters.
//!
//! `cargo run --example premap_basics`

use surftutte::build::{from_rotation_system, standard_bouquet, BouquetSpec, HalfEdge, RotationSystem, Sign};
use surftutte::premap::{classify_edge, components, Premap};

fn main() {
    for (name, p) in [
        ("plane loop", Premap::plane_loop()),
        ("twisted loop", Premap::twisted_loop()),
        ("bridge", Premap::bridge()),
    ] {
        let params = p.params();
        println!(
            "{name:<13} v={} e={} f={} s={} gbar={} edge 0 is {:?}",
            params.v,
            params.e,
            params.f,
            params.s,
            params.gbar,
            classify_edge(&p, 0).unwrap()
        );
    }

    // a triangle with one twisted edge lives on the projective plane
    let h = HalfEdge::new;
    let mobius = from_rotation_system(&RotationSystem {
        vertices: vec![vec![h(0, 0), h(2, 1)], vec![h(1, 0), h(0, 1)], vec![h(2, 0), h(1, 1)]],
        signs: vec![Sign::Plus, Sign::Plus, Sign::Minus],
        isolated_vertices: 1,
    })
    .unwrap();
    println!("mobius triangle: {:?}", mobius.params());
    for (i, c) in components(&mobius).iter().enumerate() {
        println!("  component {i}: {} edges, gbar {}", c.edge_count(), c.params().gbar);
    }
    println!("vertex rotations {:?}", mobius.vertex_cycles());
    println!("face boundaries  {:?}", mobius.face_cycles());

    let double_torus = standard_bouquet(BouquetSpec {
        orientable: true,
        genus: 2,
        edges: 5,
    })
    .unwrap();
    println!("double torus bouquet with a spare loop: {:?}", double_torus.params());
    let relabelled = double_torus.canonical();
    println!("canonical form equivalent: {}", relabelled.is_equivalent(&double_torus));
}
