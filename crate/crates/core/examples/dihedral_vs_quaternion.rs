//! D8 and Q8 have the same character degrees but different
//! Frobenius-Schur indicators, so only cross-cap maps tell them apart.
//!
//! `cargo run --example dihedral_vs_quaternion`

use surftutte::build::{standard_bouquet, BouquetSpec};
use surftutte::flows::brute_force_flows;
use surftutte::groups;
use surftutte::Limits;

fn main() -> Result<(), surftutte::ComputeError> {
    let l = Limits::default();
    let (d8, q8) = (groups::dihedral(8), groups::quaternion8());
    for orientable in [true, false] {
        for genus in 1..=2 {
            let p = standard_bouquet(BouquetSpec {
                orientable,
                genus,
                edges: if orientable { 2 * genus } else { genus },
            })
            .unwrap();
            println!(
                "gbar {:>2}: D8 {:>5}  Q8 {:>5}",
                p.params().gbar,
                brute_force_flows(&p, &d8, true, &l)?,
                brute_force_flows(&p, &q8, true, &l)?
            );
        }
    }
    Ok(())
}
