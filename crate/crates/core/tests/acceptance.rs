//! The ten acceptance criteria, each printed as one pass/fail line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use surftutte::build::{disjoint_union, standard_bouquet, BouquetSpec};
use surftutte::flows::{self, CountKind};
use surftutte::groups::{self, FiniteGroup};
use surftutte::ops::{contract, delete, dual, minor_pair_mask, mask_from_bits};
use surftutte::poly::{Rational, Style};
use surftutte::premap::{components, validate_premap, Premap};
use surftutte::tutte::{
    self, krushkal_from_surface, plane_form, renormalize, swap_xy, MinorTable,
};
use surftutte::Limits;

fn random_corpus() -> Vec<Premap> {
    random_maps(2024, 200, 6)
}

fn small_corpus() -> Vec<(String, Premap)> {
    corpus()
        .into_iter()
        .filter(|(_, p)| p.edge_count() <= 4)
        .collect()
}

fn axioms() {
    for p in random_corpus() {
        assert!(validate_premap(p.edge_count(), p.tau_images()).is_ok());
        let total = p.params();
        assert_eq!(total.s as i64, 2 * total.k as i64 - total.chi);
        for c in p.component_stats() {
            let chi = c.v as i64 - c.e as i64 + c.f as i64;
            let s = 2 - chi;
            assert!(s >= 0);
            assert_eq!(c.euler_genus() as i64, s);
            if c.orientable {
                assert_eq!(s % 2, 0);
            }
        }
    }
}

fn duality() {
    for p in random_corpus() {
        let d = dual(&p);
        assert_eq!(dual(&d), p);
        for e in 0..p.edge_count() {
            let lhs = dual(&contract(&p, e).unwrap());
            let rhs = delete(&d, e).unwrap();
            assert!(lhs.is_equivalent(&rhs), "edge {e} of {p:?}");
        }
        let (a, b) = (p.params(), d.params());
        assert_eq!((a.v, a.e, a.f, a.k, a.s, a.orientable), (b.f, b.e, b.v, b.k, b.s, b.orientable));
    }
}

fn subadditivity() {
    let maps: Vec<Premap> = corpus()
        .into_iter()
        .map(|(_, p)| p)
        .chain(random_corpus())
        .chain(random_maps(77, 10, 8))
        .filter(|p| p.edge_count() <= 8)
        .collect();
    let mut equalities = 0;
    let mut strict = 0;
    for p in &maps {
        let total = p.params();
        let m = p.edge_count();
        for bits in 0..1u64 << m {
            let (contracted, restricted) = minor_pair_mask(p, &mask_from_bits(m, bits)).unwrap();
            let (c, r) = (contracted.params(), restricted.params());
            assert!(r.s + c.s <= total.s);
            let first = r.k as i64 - total.k as i64 - r.f as i64 + c.k as i64;
            let second = c.k as i64 - total.k as i64 - c.v as i64 + r.k as i64;
            let equal = r.s + c.s == total.s;
            assert_eq!(equal, first == 0 && second == 0, "{p:?} subset {bits:b}");
            if equal {
                equalities += 1;
            } else {
                strict += 1;
            }
        }
    }
    assert!(equalities > 0 && strict > 0);
}

fn polynomial_identities() {
    let maps: Vec<Premap> = corpus()
        .into_iter()
        .map(|(_, p)| p)
        .chain(random_maps(5, 50, 7))
        .collect();
    for p in &maps {
        let table = MinorTable::new(p, &Limits::default()).unwrap();
        let t = table.surface_tutte();
        let d = dual(p);
        let dual_table = MinorTable::new(&d, &Limits::default()).unwrap();
        assert_eq!(dual_table.surface_tutte(), swap_xy(&t));
        assert_eq!(renormalize(&t).unwrap(), table.tilde_tutte());
        assert_eq!(dual_table.tilde_tutte(), swap_xy(&table.tilde_tutte()));
        let k = p.params().k;
        assert_eq!(krushkal_from_surface(&t, k).unwrap(), table.krushkal_direct());
        assert_eq!(table.tutte().unwrap(), graph_tutte(p));
    }
    let named = corpus();
    for (i, (_, p)) in named.iter().enumerate().step_by(3) {
        for (_, q) in named.iter().skip(i).step_by(4) {
            if p.edge_count() + q.edge_count() > 8 {
                continue;
            }
            let u = disjoint_union(&[p.clone(), q.clone()]);
            let product = &tutte::surface_tutte(p).unwrap() * &tutte::surface_tutte(q).unwrap();
            assert_eq!(tutte::surface_tutte(&u).unwrap(), product);
        }
    }
    for (name, p) in plane_maps() {
        let t = tutte::surface_tutte(&p).unwrap();
        assert_eq!(t, plane_form(&graph_tutte(&p), p.params().k), "{name}");
    }
}

fn hand_computed() {
    let text = |p: &Premap, f: fn(&MinorTable) -> String| f(&MinorTable::new(p, &Limits::default()).unwrap());
    assert_eq!(
        text(&Premap::plane_loop(), |t| t.surface_tutte().to_string()),
        "x0*y0 + y*x0^2*y0"
    );
    assert_eq!(
        text(&Premap::twisted_loop(), |t| t.surface_tutte().to_string()),
        "x*xg(-1)*y0 + y*x0*yg(-1)"
    );
    assert_eq!(
        text(&Premap::bridge(), |t| t.krushkal().unwrap().fmt_with(Style::Upper)),
        "X"
    );
    assert_eq!(text(&Premap::twisted_loop(), |t| t.q_poly().to_string()), "a + b");
    assert_eq!(
        text(&Premap::twisted_loop(), |t| t.signed().unwrap().fmt_with(Style::Upper)),
        "Z"
    );
}

fn flow_agreement() {
    let l = Limits::default();
    let maps = small_corpus();
    assert_eq!(maps.len(), 30);
    for g in flow_groups() {
        for (name, p) in &maps {
            for nowhere in [true, false] {
                let brute = flows::brute_force_flows(p, &g, nowhere, &l).unwrap();
                let (formula, via) = if nowhere {
                    (
                        flows::flow_count_formula(p, &g, &l).unwrap(),
                        flows::flow_count_via_tutte(p, &g, &l).unwrap(),
                    )
                } else {
                    (
                        flows::flow_count_closed(p, &g, &l).unwrap(),
                        flows::all_via_tutte(p, &g, CountKind::Flows, &l).unwrap(),
                    )
                };
                assert_eq!((&brute, &brute), (&formula, &via), "flows {name} {}", g.name());
                let brute = flows::brute_force_tensions(p, &g, nowhere, &l).unwrap();
                let (formula, via) = if nowhere {
                    (
                        flows::tension_count_formula(p, &g, &l).unwrap(),
                        flows::tension_count_via_tutte(p, &g, &l).unwrap(),
                    )
                } else {
                    (
                        flows::tension_count_closed(p, &g, &l).unwrap(),
                        flows::all_via_tutte(p, &g, CountKind::Tensions, &l).unwrap(),
                    )
                };
                assert_eq!((&brute, &brute), (&formula, &via), "tensions {name} {}", g.name());
            }
        }
    }
}

fn d8_q8() {
    let l = Limits::default();
    let (d8, q8) = (groups::dihedral(8), groups::quaternion8());
    let lx = Premap::twisted_loop();
    assert_eq!(flows::brute_force_flows(&lx, &d8, true, &l).unwrap(), int(5));
    assert_eq!(flows::brute_force_flows(&lx, &q8, true, &l).unwrap(), int(1));
    let mut orientable = 0;
    for (name, p) in small_corpus() {
        if !p.params().orientable {
            continue;
        }
        orientable += 1;
        assert_eq!(
            flows::brute_force_flows(&p, &d8, true, &l).unwrap(),
            flows::brute_force_flows(&p, &q8, true, &l).unwrap(),
            "{name}"
        );
    }
    assert!(orientable >= 10);
}

fn catalog_groups() -> Vec<FiniteGroup> {
    let mut out = flow_groups();
    for name in ["cyclic5", "dihedral6", "dihedral10", "symmetric4", "klein4"] {
        out.push(groups::catalog(name).unwrap());
    }
    out
}

fn closed_tensions() {
    let l = Limits::default();
    for g in flow_groups() {
        for (name, p) in small_corpus() {
            if p.params().k != 1 {
                continue;
            }
            assert_eq!(
                flows::tension_count_closed(&p, &g, &l).unwrap(),
                flows::brute_force_tensions(&p, &g, false, &l).unwrap(),
                "{name} {}",
                g.name()
            );
        }
    }
    for g in catalog_groups() {
        let z = |k| g.zeta(k, &l).unwrap();
        let q = |n: usize| Rational::from_integer(int(n as i64));
        assert_eq!(z(0), q(g.order()), "{}", g.name());
        assert_eq!(z(1), q(conjugacy_classes(&g)), "{}", g.name());
        assert_eq!(z(-1), q(involutions_and_identity(&g)), "{}", g.name());
    }
}

fn abelian() {
    let l = Limits::default();
    let abelian: Vec<FiniteGroup> = catalog_groups().into_iter().filter(|g| g.is_abelian()).collect();
    assert!(abelian.len() >= 5);
    for g in &abelian {
        for (name, p) in small_corpus() {
            assert_eq!(
                flows::abelian_flow_count(&p, g, &l).unwrap(),
                flows::brute_force_flows(&p, g, true, &l).unwrap(),
                "{name} {}",
                g.name()
            );
        }
        let two_d = g.square_roots_of_identity() as i64;
        assert_eq!(
            flows::abelian_flow_count(&Premap::twisted_loop(), g, &l).unwrap(),
            int(two_d - 1)
        );
    }
}

fn quasi_trees() {
    for (name, p) in corpus() {
        let table = MinorTable::new(&p, &Limits::default()).unwrap();
        if table.components != 1 {
            continue;
        }
        let g = table.signed_genus.abs();
        for h in -g..=g {
            assert_eq!(
                table.quasi_trees_eval(h).unwrap(),
                table.quasi_trees_direct(h),
                "{name} h={h}"
            );
        }
    }
    for genus in 0..=3usize {
        for edges in 0..=8usize {
            for orientable in [true, false] {
                let needed = if orientable { 2 * genus } else { genus };
                if edges < needed || (!orientable && genus == 0) {
                    continue;
                }
                let p = standard_bouquet(BouquetSpec {
                    orientable,
                    genus,
                    edges,
                })
                .unwrap();
                let expected = if orientable { edges - 2 * genus + 1 } else { edges - genus + 1 };
                assert_eq!(p.params().f, expected, "{orientable} {genus} {edges}");
                assert_eq!(components(&p).len(), 1);
            }
        }
    }
}

fn main() {
    let criteria: [(&str, fn(), u64); 10] = [
        ("axiom suite", axioms, 5),
        ("duality suite", duality, 10),
        ("genus subadditivity", subadditivity, 60),
        ("polynomial identities", polynomial_identities, 60),
        ("hand-computed polynomials", hand_computed, 1),
        ("flow three-way agreement", flow_agreement, 300),
        ("D8 and Q8 separation", d8_q8, 30),
        ("closed-form tensions and zeta sanity", closed_tensions, 60),
        ("abelian closed form", abelian, 30),
        ("quasi-tree counts", quasi_trees, 60),
    ];
    let mut failed = 0;
    for (i, (name, run, seconds)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(seconds);
        let status = match (&outcome, in_time) {
            (Ok(()), true) => "pass",
            (Ok(()), false) => "FAIL (too slow)",
            (Err(_), _) => "FAIL",
        };
        if status != "pass" {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {status:<15} {name} ({:.2?}, limit {seconds}s)",
            i + 1,
            elapsed
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
