//! Quasi-trees by signed genus, and where the plain evaluation undercounts.
//!
//! `cargo run --example quasi_trees`

use surftutte::build::{standard_bouquet, BouquetSpec};
use surftutte::premap::Premap;
use surftutte::tutte::MinorTable;
use surftutte::Limits;

fn report(name: &str, p: &Premap) -> Result<(), surftutte::ComputeError> {
    let t = MinorTable::new(p, &Limits::default())?;
    let g = t.signed_genus.abs();
    println!("{name} (gbar {}), forests and bouquet minors {:?}", t.signed_genus, t.quasi_forests()?);
    for h in -g..=g {
        println!(
            "  h={h:>2}: {} quasi-trees (evaluation gives {})",
            t.quasi_trees(h)?,
            t.quasi_trees_eval(h)?
        );
    }
    Ok(())
}

fn main() -> Result<(), surftutte::ComputeError> {
    let torus = standard_bouquet(BouquetSpec {
        orientable: true,
        genus: 1,
        edges: 3,
    })
    .unwrap();
    report("torus bouquet", &torus)?;
    let odd = Premap::from_cycles(3, &[vec![0, 7, 8, 3, 4, 9], vec![1, 10, 5, 2, 11, 6]], 0).unwrap();
    report("three cross-cap map", &odd)?;
    Ok(())
}
