//! Builders: signed rotation systems, standard bouquets and disjoint unions.

use crate::premap::{sigma, theta, theta_sigma, Cross, Premap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: usize,
    /// 0 or 1.
    pub end: u8,
}

impl HalfEdge {
    pub fn new(edge: usize, end: u8) -> Self {
        HalfEdge { edge, end }
    }
}

/// A graph embedding given by the cyclic order of half-edges at each vertex
/// and a sign per edge. An empty rotation is an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub vertices: Vec<Vec<HalfEdge>>,
    pub signs: Vec<Sign>,
    pub isolated_vertices: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("no standard bouquet with orientable={orientable}, genus {genus}, {edges} edges")]
    SpecOutOfRange {
        orientable: bool,
        genus: usize,
        edges: usize,
    },
}

fn carried(h: HalfEdge, sign: Sign) -> Cross {
    let a = 4 * h.edge;
    match (h.end, sign) {
        (0, _) => a,
        (_, Sign::Plus) => theta_sigma(a),
        (_, Sign::Minus) => theta(a),
    }
}

/// Writes the cycle `(c1 .. ck)` and its partner `(σck .. σc1)` into `tau`.
fn push_vertex(tau: &mut [usize], cycle: &[Cross]) {
    let k = cycle.len();
    for i in 0..k {
        let (c, d) = (cycle[i], cycle[(i + 1) % k]);
        tau[c] = d;
        tau[sigma(d)] = sigma(c);
    }
}

pub fn from_rotation_system(r: &RotationSystem) -> Result<Premap, BuildError> {
    let m = r.signs.len();
    let mut seen = vec![[false; 2]; m];
    for h in r.vertices.iter().flatten() {
        if h.edge >= m || h.end > 1 {
            return Err(BuildError::MalformedRotation(format!(
                "half-edge {}.{} does not exist in a system with {m} edges",
                h.edge, h.end
            )));
        }
        let slot = &mut seen[h.edge][h.end as usize];
        if *slot {
            return Err(BuildError::MalformedRotation(format!(
                "half-edge {}.{} appears twice",
                h.edge, h.end
            )));
        }
        *slot = true;
    }
    for (e, ends) in seen.iter().enumerate() {
        if let Some(end) = ends.iter().position(|s| !s) {
            return Err(BuildError::MalformedRotation(format!(
                "half-edge {e}.{end} is missing"
            )));
        }
    }
    let mut tau = vec![0; 4 * m];
    let mut isolated = r.isolated_vertices;
    for rotation in &r.vertices {
        if rotation.is_empty() {
            isolated += 1;
            continue;
        }
        let cycle: Vec<Cross> = rotation
            .iter()
            .map(|&h| carried(h, r.signs[h.edge]))
            .collect();
        push_vertex(&mut tau, &cycle);
    }
    Ok(Premap::from_parts_unchecked(m, tau, isolated))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BouquetSpec {
    pub orientable: bool,
    pub genus: usize,
    pub edges: usize,
}

/// The one-vertex map whose first `2g` (or `g`) edges carry all the genus
/// and whose remaining edges are planar loops.
pub fn standard_bouquet(spec: BouquetSpec) -> Result<Premap, BuildError> {
    let BouquetSpec {
        orientable,
        genus: g,
        edges: m,
    } = spec;
    let in_range = if orientable { m >= 2 * g } else { g >= 1 && m >= g };
    if !in_range {
        return Err(BuildError::SpecOutOfRange {
            orientable,
            genus: g,
            edges: m,
        });
    }
    if m == 0 {
        return Ok(Premap::isolated_vertices(1));
    }
    let a = |i: usize| 4 * i;
    let mut cycle = Vec::with_capacity(2 * m);
    let handles = if orientable {
        for i in 0..g {
            let (x, y) = (a(2 * i), a(2 * i + 1));
            cycle.extend([x, y, theta_sigma(x), theta_sigma(y)]);
        }
        2 * g
    } else {
        for i in 0..g {
            cycle.extend([a(i), theta(a(i))]);
        }
        g
    };
    for i in handles..m {
        cycle.extend([a(i), theta_sigma(a(i))]);
    }
    let mut tau = vec![0; 4 * m];
    push_vertex(&mut tau, &cycle);
    Ok(Premap::from_parts_unchecked(m, tau, 0))
}

/// Places the maps side by side, offsetting edge ids in order.
pub fn disjoint_union(ps: &[Premap]) -> Premap {
    let mut edges = 0;
    let mut isolated = 0;
    let mut tau = Vec::new();
    for p in ps {
        let offset = 4 * edges;
        tau.extend(p.tau_images().iter().map(|&c| c + offset));
        edges += p.edge_count();
        isolated += p.isolated_count();
    }
    Premap::from_parts_unchecked(edges, tau, isolated)
}
