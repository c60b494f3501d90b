//! Reading and writing premap-v1, rotation-v1 and group-v1 documents.
//!
//! `cargo run --example file_formats`

use surftutte::groups::{catalog, parse_group, serialize_group};
use surftutte::io::{parse_map, parse_rotation_system, serialize_map, serialize_rotation_system};

fn main() {
    let rotation = r#"{"format":"rotation-v1","edges":2,"isolated_vertices":0,
        "signs":["+","−"],"vertices":[["0.0","1.0","0.1","1.1"]]}"#;
    let r = parse_rotation_system(rotation).unwrap();
    println!("{}", serialize_rotation_system(&r));
    let p = parse_map(rotation).unwrap();
    println!("{}", serialize_map(&p));
    println!("{:?}", p.params());

    match parse_map(r#"{"format":"premap-v1","edges":1,"isolated_vertices":0,"tau":[[0,2],[1,3]]}"#) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let klein = catalog("product(cyclic2,cyclic2)").unwrap();
    let text = serialize_group(&klein);
    println!("{text}");
    println!("order {} after reading back", parse_group(&text).unwrap().order());
}
