//! Local group-valued flows and tensions counted three ways.
//!
//! `cargo run --example local_flows`

use surftutte::build::{standard_bouquet, BouquetSpec};
use surftutte::flows;
use surftutte::groups;
use surftutte::Limits;

fn main() -> Result<(), surftutte::ComputeError> {
    let l = Limits::default();
    let torus = standard_bouquet(BouquetSpec {
        orientable: true,
        genus: 1,
        edges: 2,
    })
    .unwrap();
    for g in [groups::cyclic(3), groups::symmetric(3), groups::quaternion8()] {
        println!(
            "{:<12} flows: brute {} formula {} tutte {}; all tensions {} (closed form {})",
            g.name(),
            flows::brute_force_flows(&torus, &g, true, &l)?,
            flows::flow_count_formula(&torus, &g, &l)?,
            flows::flow_count_via_tutte(&torus, &g, &l)?,
            flows::brute_force_tensions(&torus, &g, false, &l)?,
            flows::tension_count_closed(&torus, &g, &l)?,
        );
    }
    for n in [2, 4, 6] {
        let g = groups::cyclic(n);
        println!(
            "Z{n}: abelian closed form on the torus bouquet gives {}",
            flows::abelian_flow_count(&torus, &g, &l)?
        );
    }
    let g = groups::symmetric(3);
    println!("zeta(S3, g) for g = -2..2:");
    for k in -2..=2 {
        println!("  {k:>2}: {}", g.zeta(k, &l)?);
    }
    Ok(())
}
