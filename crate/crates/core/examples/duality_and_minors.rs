//! Duals, deletion, contraction and the pair `(M/A, M\Aᶜ)`.
//!
//! `cargo run --example duality_and_minors`

use surftutte::build::{standard_bouquet, BouquetSpec};
use surftutte::ops::{contract, delete, dual, minor_pair};
use surftutte::premap::Premap;

fn show(label: &str, p: &Premap) {
    let q = p.params();
    println!("{label:<26} v={} e={} f={} k={} gbar={}", q.v, q.e, q.f, q.k, q.gbar);
}

fn main() {
    let torus = standard_bouquet(BouquetSpec {
        orientable: true,
        genus: 1,
        edges: 3,
    })
    .unwrap();
    show("M", &torus);
    show("M*", &dual(&torus));
    show("M\\0", &delete(&torus, 0).unwrap());
    show("M/0", &contract(&torus, 0).unwrap());
    show("(M*\\0)*", &dual(&delete(&dual(&torus), 0).unwrap()));

    println!("\nminor pairs over every A:");
    let m = torus.edge_count();
    for bits in 0..1u32 << m {
        let a: Vec<usize> = (0..m).filter(|i| bits >> i & 1 == 1).collect();
        let (contracted, restricted) = minor_pair(&torus, &a).unwrap();
        println!(
            "  A={a:?}: s(M/A)={} s(M\\Ac)={}",
            contracted.params().s,
            restricted.params().s
        );
    }
}
