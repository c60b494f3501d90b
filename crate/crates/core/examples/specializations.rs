//! Krushkal, Tutte and signed-graph polynomials read from one subset table.
//!
//! `cargo run --example specializations`

use surftutte::build::{from_rotation_system, HalfEdge, RotationSystem, Sign};
use surftutte::poly::Style;
use surftutte::tutte::MinorTable;
use surftutte::Limits;

fn main() -> Result<(), surftutte::ComputeError> {
    let h = HalfEdge::new;
    // theta graph, once in the plane and once with all three ends reversed
    let plane = vec![vec![h(0, 0), h(1, 0), h(2, 0)], vec![h(2, 1), h(1, 1), h(0, 1)]];
    let torus = vec![vec![h(0, 0), h(1, 0), h(2, 0)], vec![h(0, 1), h(1, 1), h(2, 1)]];
    for (name, vertices, signs) in [
        ("plane theta", plane.clone(), vec![Sign::Plus; 3]),
        ("toroidal theta", torus, vec![Sign::Plus; 3]),
        ("twisted theta", plane, vec![Sign::Plus, Sign::Minus, Sign::Plus]),
    ] {
        let p = from_rotation_system(&RotationSystem {
            vertices,
            signs,
            isolated_vertices: 0,
        })
        .unwrap();
        let table = MinorTable::new(&p, &Limits::default())?;
        println!("{name} (gbar {})", table.signed_genus);
        println!("  Krushkal {}", table.krushkal()?.fmt_with(Style::Upper));
        println!("  Tutte    {}", table.tutte()?.fmt_with(Style::Upper));
        println!("  signed   {}", table.signed()?.fmt_with(Style::Upper));
    }
    Ok(())
}
