//! The surface Tutte polynomial and its renormalized forms.
//!
//! `cargo run --example surface_polynomial`

use surftutte::build::{standard_bouquet, BouquetSpec};
use surftutte::ops::dual;
use surftutte::premap::Premap;
use surftutte::tutte::{swap_xy, MinorTable};
use surftutte::Limits;

fn main() -> Result<(), surftutte::ComputeError> {
    let maps = [
        ("plane loop", Premap::plane_loop()),
        ("twisted loop", Premap::twisted_loop()),
        (
            "torus bouquet",
            standard_bouquet(BouquetSpec {
                orientable: true,
                genus: 1,
                edges: 2,
            })
            .unwrap(),
        ),
        (
            "Klein bottle bouquet",
            standard_bouquet(BouquetSpec {
                orientable: false,
                genus: 2,
                edges: 2,
            })
            .unwrap(),
        ),
    ];
    for (name, p) in &maps {
        let table = MinorTable::new(p, &Limits::default())?;
        let t = table.surface_tutte();
        println!("{name}");
        println!("  T  = {t}");
        println!("  T~ = {}", table.tilde_tutte());
        println!("  Q~ = {}", table.q_poly());
        let swapped = MinorTable::new(&dual(p), &Limits::default())?.surface_tutte();
        println!("  dual swaps x and y: {}", swapped == swap_xy(&t));
    }
    Ok(())
}
