//! Premaps: maps encoded as Tutte's permutation triple `(θ, σ, τ)`.
//!
//! Every edge `e` owns the four crosses `4e`, `4e+1`, `4e+2`, `4e+3`, read as
//! `a`, `θa`, `σa`, `θσa`. With that labelling `θ` is `c ^ 1` and `σ` is
//! `c ^ 2`, so only the vertex rotation `τ` is stored. Isolated vertices
//! (pairs of empty `τ`-cycles) cannot be written in a permutation array and
//! are kept as a separate count.

use std::collections::VecDeque;
use std::fmt;

/// A cross id in `[0, 4m)`.
pub type Cross = usize;

/// The end-swapping involution.
#[inline]
pub const fn theta(c: Cross) -> Cross {
    c ^ 1
}

/// The side-swapping involution.
#[inline]
pub const fn sigma(c: Cross) -> Cross {
    c ^ 2
}

/// `θσ`, which swaps both side and end.
#[inline]
pub const fn theta_sigma(c: Cross) -> Cross {
    c ^ 3
}

/// The edge owning a cross.
#[inline]
pub const fn edge_of(c: Cross) -> usize {
    c >> 2
}

/// A permutation of `[0, n)` stored by images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image array; `None` unless it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    /// Builds a permutation of `[0, n)` from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &c) in cycle.iter().enumerate() {
                if c >= n || seen[c] {
                    return None;
                }
                seen[c] = true;
                images[c] = cycle[(i + 1) % cycle.len()];
            }
        }
        Some(Permutation { images })
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each rotated to start at its minimum, ordered by
    /// that minimum. Fixed points are included as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.images)
    }
}

pub(crate) fn cycles_of(images: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            cycle.push(c);
            c = images[c];
        }
        out.push(cycle);
    }
    out
}

/// Cycle index of every point.
pub(crate) fn cycle_ids(images: &[usize]) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; images.len()];
    let mut count = 0;
    for start in 0..images.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let mut c = start;
        while id[c] == usize::MAX {
            id[c] = count;
            c = images[c];
        }
        count += 1;
    }
    (id, count)
}

/// One failed premap condition, with a witness cross where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The rotation array has the wrong length for the edge count.
    WrongLength { expected: usize, found: usize },
    /// The rotation array is not a bijection of `[0, 4m)`.
    NotBijective { cross: Cross },
    /// `τσ ≠ στ⁻¹` at this cross.
    AxiomThreeViolated { cross: Cross },
    /// The cross and its `σ`-image lie in the same `τ`-cycle.
    AxiomFourViolated { cross: Cross },
    /// The cross and its `θ`-image lie in the same face cycle.
    FacePairing { cross: Cross },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, found } => {
                write!(f, "rotation has {found} entries, expected {expected}")
            }
            Violation::NotBijective { cross } => {
                write!(f, "rotation is not a bijection (cross {cross})")
            }
            Violation::AxiomThreeViolated { cross } => {
                write!(f, "tau*sigma != sigma*tau^-1 at cross {cross}")
            }
            Violation::AxiomFourViolated { cross } => write!(
                f,
                "cross {cross} and its sigma-image share a tau-cycle"
            ),
            Violation::FacePairing { cross } => write!(
                f,
                "cross {cross} and its theta-image share a face cycle"
            ),
        }
    }
}

/// Outcome of [`validate_premap`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a raw rotation array against the premap axioms.
///
/// Axioms (1) and (2) hold by the cross labelling. Axiom (5), transitivity,
/// is dropped because premaps here may be disconnected.
pub fn validate_premap(edges: usize, tau: &[usize]) -> ValidationReport {
    let n = 4 * edges;
    let mut report = ValidationReport::default();
    if tau.len() != n {
        report.violations.push(Violation::WrongLength {
            expected: n,
            found: tau.len(),
        });
        return report;
    }
    let mut inv = vec![usize::MAX; n];
    for (c, &t) in tau.iter().enumerate() {
        if t >= n || inv[t] != usize::MAX {
            report.violations.push(Violation::NotBijective { cross: c });
            return report;
        }
        inv[t] = c;
    }
    if let Some(c) = (0..n).find(|&c| tau[sigma(c)] != sigma(inv[c])) {
        report.violations.push(Violation::AxiomThreeViolated { cross: c });
    }
    let (ids, _) = cycle_ids(tau);
    if let Some(c) = (0..n).find(|&c| ids[c] == ids[sigma(c)]) {
        report.violations.push(Violation::AxiomFourViolated { cross: c });
    }
    if report.is_ok() {
        let phi: Vec<usize> = (0..n).map(|c| tau[theta_sigma(c)]).collect();
        let (fids, _) = cycle_ids(&phi);
        if let Some(c) = (0..n).find(|&c| fids[c] == fids[theta(c)]) {
            report.violations.push(Violation::FacePairing { cross: c });
        }
    }
    report
}

/// A map given by its vertex rotation `τ` on `4m` crosses plus a count of
/// isolated vertices. Values are always valid premaps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Premap {
    edges: usize,
    tau: Vec<usize>,
    isolated: usize,
}

/// Error from constructing a premap out of raw parts.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid premap: {0}")]
pub struct InvalidPremap(pub ValidationReport);

impl Premap {
    /// Validates and wraps a rotation array.
    pub fn new(edges: usize, tau: Vec<usize>, isolated: usize) -> Result<Self, InvalidPremap> {
        let report = validate_premap(edges, &tau);
        if !report.is_ok() {
            return Err(InvalidPremap(report));
        }
        Ok(Premap {
            edges,
            tau,
            isolated,
        })
    }

    /// Builds `τ` from its nonempty cycles. Every cross must appear exactly once.
    pub fn from_cycles(
        edges: usize,
        cycles: &[Vec<usize>],
        isolated: usize,
    ) -> Result<Self, InvalidPremap> {
        let n = 4 * edges;
        let mut tau = vec![usize::MAX; n];
        for (ci, cycle) in cycles.iter().enumerate() {
            for (i, &c) in cycle.iter().enumerate() {
                if c >= n || tau[c] != usize::MAX {
                    let cross = if c < n { c } else { ci };
                    return Err(InvalidPremap(ValidationReport {
                        violations: vec![Violation::NotBijective { cross }],
                    }));
                }
                tau[c] = cycle[(i + 1) % cycle.len()];
            }
        }
        if let Some(c) = tau.iter().position(|&t| t == usize::MAX) {
            return Err(InvalidPremap(ValidationReport {
                violations: vec![Violation::NotBijective { cross: c }],
            }));
        }
        Premap::new(edges, tau, isolated)
    }

    pub(crate) fn from_parts_unchecked(edges: usize, tau: Vec<usize>, isolated: usize) -> Self {
        debug_assert!(
            validate_premap(edges, &tau).is_ok(),
            "internal premap construction broke an axiom: {}",
            validate_premap(edges, &tau)
        );
        Premap {
            edges,
            tau,
            isolated,
        }
    }

    /// The map with no vertices and no edges.
    pub fn empty() -> Self {
        Premap {
            edges: 0,
            tau: Vec::new(),
            isolated: 0,
        }
    }

    /// `n` isolated vertices and nothing else.
    pub fn isolated_vertices(n: usize) -> Self {
        Premap {
            edges: 0,
            tau: Vec::new(),
            isolated: n,
        }
    }

    /// A loop on one vertex in the plane: `τ = (a θσa)(θa σa)`.
    pub fn plane_loop() -> Self {
        Premap::from_parts_unchecked(1, vec![3, 2, 1, 0], 0)
    }

    /// A loop in the projective plane: `τ = (a θa)(σa θσa)`.
    pub fn twisted_loop() -> Self {
        Premap::from_parts_unchecked(1, vec![1, 0, 3, 2], 0)
    }

    /// One edge joining two vertices of degree one.
    pub fn bridge() -> Self {
        Premap::from_parts_unchecked(1, vec![0, 1, 2, 3], 0)
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn cross_count(&self) -> usize {
        4 * self.edges
    }

    pub fn isolated_count(&self) -> usize {
        self.isolated
    }

    /// The rotation `τ` as an image array.
    pub fn tau_images(&self) -> &[usize] {
        &self.tau
    }

    #[inline]
    pub fn tau(&self, c: Cross) -> Cross {
        self.tau[c]
    }

    /// The face permutation `φ = τθσ`.
    #[inline]
    pub fn phi(&self, c: Cross) -> Cross {
        self.tau[theta_sigma(c)]
    }

    pub fn phi_images(&self) -> Vec<usize> {
        (0..self.cross_count()).map(|c| self.phi(c)).collect()
    }

    /// Nonempty cycles of `τ` in canonical order.
    pub fn tau_cycles(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.tau)
    }

    pub fn phi_cycles(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.phi_images())
    }

    /// For each vertex (a pair of `τ`-cycles) the member cycle holding the
    /// smaller minimal cross, rotated to start there.
    pub fn vertex_cycles(&self) -> Vec<Vec<usize>> {
        primary_cycles(&self.tau, sigma)
    }

    /// For each face the member `φ`-cycle holding the smaller minimal cross.
    pub fn face_cycles(&self) -> Vec<Vec<usize>> {
        primary_cycles(&self.phi_images(), theta)
    }
}

/// Picks one cycle out of each pair `(Z)(Z⁻¹)`, where the partner of a
/// cycle is reached through `partner`.
fn primary_cycles(images: &[usize], partner: fn(Cross) -> Cross) -> Vec<Vec<usize>> {
    let (ids, _) = cycle_ids(images);
    cycles_of(images)
        .into_iter()
        .filter(|cycle| {
            // cycles come ordered by minimum, so the first member of a pair
            // is the one whose minimum is smaller than its partner's
            let min = cycle[0];
            let partner_min = cycle.iter().map(|&c| partner(c)).min().unwrap();
            debug_assert_ne!(ids[min], ids[partner_min]);
            min < partner_min
        })
        .collect()
}

/// Numerical parameters of a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct MapParams {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub k: usize,
    pub chi: i64,
    #[serde(rename = "euler_genus")]
    pub s: usize,
    #[serde(rename = "signed_genus")]
    pub gbar: i64,
    pub orientable: bool,
    pub r: usize,
    pub n: usize,
    pub rstar: usize,
    pub nstar: usize,
}

impl MapParams {
    fn from_counts(v: usize, e: usize, f: usize, k: usize, orientable: bool) -> Self {
        let chi = v as i64 - e as i64 + f as i64;
        let s = 2 * k as i64 - chi;
        debug_assert!(s >= 0, "negative Euler genus");
        let s = s as usize;
        let gbar = if orientable {
            debug_assert!(s % 2 == 0);
            (s / 2) as i64
        } else {
            -(s as i64)
        };
        let r = v - k;
        let rstar = f - k;
        MapParams {
            v,
            e,
            f,
            k,
            chi,
            s,
            gbar,
            orientable,
            r,
            n: e - r,
            rstar,
            nstar: e - rstar,
        }
    }
}

/// Vertex, edge and face counts and orientability of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentStats {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub orientable: bool,
}

impl ComponentStats {
    pub const ISOLATED_VERTEX: ComponentStats = ComponentStats {
        v: 1,
        e: 0,
        f: 1,
        orientable: true,
    };

    pub fn euler_genus(&self) -> usize {
        let s = 2 + self.e as i64 - self.v as i64 - self.f as i64;
        debug_assert!(s >= 0);
        s as usize
    }

    /// `g` if orientable, `-g` otherwise.
    pub fn signed_genus(&self) -> i64 {
        let s = self.euler_genus() as i64;
        if self.orientable {
            s / 2
        } else {
            -s
        }
    }

    pub fn params(&self) -> MapParams {
        MapParams::from_counts(self.v, self.e, self.f, 1, self.orientable)
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

/// Component label of each cross, with labels numbered by minimum cross.
pub(crate) fn component_labels(tau: &[usize]) -> (Vec<usize>, usize) {
    let n = tau.len();
    let mut uf = UnionFind::new(n);
    for c in 0..n {
        uf.union(c, theta(c));
        uf.union(c, sigma(c));
        uf.union(c, tau[c]);
    }
    let mut label = vec![usize::MAX; n];
    let mut root_label = vec![usize::MAX; n];
    let mut count = 0;
    for c in 0..n {
        let r = uf.find(c);
        if root_label[r] == usize::MAX {
            root_label[r] = count;
            count += 1;
        }
        label[c] = root_label[r];
    }
    (label, count)
}

impl Premap {
    /// Per-component statistics, ordered by minimal cross with isolated
    /// vertices last (the same order as [`components`]).
    pub fn component_stats(&self) -> Vec<ComponentStats> {
        component_stats_raw(&self.tau, self.isolated)
    }

    pub fn params(&self) -> MapParams {
        map_params(self)
    }
}

pub(crate) fn component_stats_raw(tau: &[usize], isolated: usize) -> Vec<ComponentStats> {
    let n = tau.len();
    let (label, k) = component_labels(tau);
    let mut stats = vec![
        ComponentStats {
            v: 0,
            e: 0,
            f: 0,
            orientable: true,
        };
        k
    ];
    for c in (0..n).step_by(4) {
        stats[label[c]].e += 1;
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if !seen[start] {
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = tau[c];
            }
            stats[label[start]].v += 1;
        }
    }
    seen.iter_mut().for_each(|s| *s = false);
    for start in 0..n {
        if !seen[start] {
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = tau[theta_sigma(c)];
            }
            stats[label[start]].f += 1;
        }
    }
    // orbits of <θσ, τ>: one per component if non-orientable, two otherwise
    let mut uf = UnionFind::new(n);
    for c in 0..n {
        uf.union(c, theta_sigma(c));
        uf.union(c, tau[c]);
    }
    let mut orbits = vec![0usize; k];
    for c in 0..n {
        if uf.find(c) == c {
            orbits[label[c]] += 1;
        }
    }
    for (st, &o) in stats.iter_mut().zip(&orbits) {
        debug_assert!(o == 1 || o == 2, "orbit count {o}");
        debug_assert!(st.v % 2 == 0 && st.f % 2 == 0);
        st.v /= 2;
        st.f /= 2;
        st.orientable = o == 2;
    }
    stats.extend(std::iter::repeat(ComponentStats::ISOLATED_VERTEX).take(isolated));
    stats
}

/// All structural parameters of a map. Counts are summed over components;
/// the signed genus is `s/2` for orientable maps and `-s` otherwise.
pub fn map_params(p: &Premap) -> MapParams {
    let stats = p.component_stats();
    let v = stats.iter().map(|s| s.v).sum();
    let f = stats.iter().map(|s| s.f).sum();
    let orientable = stats.iter().all(|s| s.orientable);
    MapParams::from_counts(v, p.edges, f, stats.len(), orientable)
}

/// Splits a premap into connected components, each relabelled with its
/// edges in original order. Components are ordered by minimal cross and
/// isolated vertices come last as single-vertex premaps.
pub fn components(p: &Premap) -> Vec<Premap> {
    let (label, k) = component_labels(&p.tau);
    let mut edge_lists: Vec<Vec<usize>> = vec![Vec::new(); k];
    for e in 0..p.edges {
        edge_lists[label[4 * e]].push(e);
    }
    let mut out: Vec<Premap> = edge_lists
        .iter()
        .map(|edges| restrict_to_edges(p, edges))
        .collect();
    out.extend((0..p.isolated).map(|_| Premap::isolated_vertices(1)));
    out
}

/// Relabels a `τ`-closed set of edges (listed in the desired order) into a
/// fresh premap without isolated vertices.
fn restrict_to_edges(p: &Premap, edges: &[usize]) -> Premap {
    let mut new_edge = vec![usize::MAX; p.edges];
    for (i, &e) in edges.iter().enumerate() {
        new_edge[e] = i;
    }
    let relabel = |c: Cross| 4 * new_edge[edge_of(c)] + (c & 3);
    let mut tau = vec![0; 4 * edges.len()];
    for &e in edges {
        for j in 0..4 {
            let c = 4 * e + j;
            tau[relabel(c)] = relabel(p.tau[c]);
        }
    }
    Premap::from_parts_unchecked(edges.len(), tau, 0)
}

/// Edge classification by how its crosses sit in the vertex rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    NonLoop,
    NonTwistedLoop,
    TwistedLoop,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("edge {edge} out of range for a map with {edges} edges")]
pub struct EdgeOutOfRange {
    pub edge: usize,
    pub edges: usize,
}

fn same_tau_cycle(p: &Premap, a: Cross, b: Cross) -> bool {
    let mut c = p.tau[a];
    loop {
        if c == b {
            return true;
        }
        if c == a {
            return false;
        }
        c = p.tau[c];
    }
}

pub fn classify_edge(p: &Premap, e: usize) -> Result<EdgeKind, EdgeOutOfRange> {
    if e >= p.edges {
        return Err(EdgeOutOfRange {
            edge: e,
            edges: p.edges,
        });
    }
    let a = 4 * e;
    Ok(if same_tau_cycle(p, a, theta(a)) {
        EdgeKind::TwistedLoop
    } else if same_tau_cycle(p, a, theta_sigma(a)) {
        EdgeKind::NonTwistedLoop
    } else {
        EdgeKind::NonLoop
    })
}

/// A relabelling-invariant fingerprint: two premaps are equivalent exactly
/// when their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Canonical rotation arrays of the components with edges, sorted.
    pub components: Vec<Vec<usize>>,
    pub isolated: usize,
}

impl Premap {
    pub fn canonical_form(&self) -> CanonicalForm {
        let mut comps: Vec<Vec<usize>> = components(self)
            .iter()
            .filter(|c| c.edges > 0)
            .map(canonical_connected)
            .collect();
        comps.sort();
        CanonicalForm {
            components: comps,
            isolated: self.isolated,
        }
    }

    /// Premap equivalence: a bijection of crosses carrying `θ, σ, τ` of one
    /// map onto those of the other.
    pub fn is_equivalent(&self, other: &Premap) -> bool {
        self.edges == other.edges
            && self.isolated == other.isolated
            && self.canonical_form() == other.canonical_form()
    }

    /// The representative of this premap's equivalence class.
    pub fn canonical(&self) -> Premap {
        let form = self.canonical_form();
        let mut tau = Vec::new();
        for comp in &form.components {
            let offset = tau.len();
            tau.extend(comp.iter().map(|&c| c + offset));
        }
        Premap::from_parts_unchecked(tau.len() / 4, tau, form.isolated)
    }
}

/// Every equivalence of a connected premap is fixed by the image of one
/// cross, so trying each start and keeping the smallest relabelled rotation
/// gives a canonical representative.
fn canonical_connected(p: &Premap) -> Vec<usize> {
    let n = p.cross_count();
    let mut best: Option<Vec<usize>> = None;
    let mut label = vec![usize::MAX; n];
    for start in 0..n {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        let mut next_edge = 0;
        let assign = |c: Cross, label: &mut Vec<usize>, next_edge: &mut usize| {
            let base = 4 * *next_edge;
            label[c] = base;
            label[theta(c)] = base + 1;
            label[sigma(c)] = base + 2;
            label[theta_sigma(c)] = base + 3;
            *next_edge += 1;
        };
        assign(start, &mut label, &mut next_edge);
        let mut order: Vec<Cross> = vec![start, theta(start), sigma(start), theta_sigma(start)];
        let mut queue: VecDeque<usize> = (0..4).collect();
        while let Some(i) = queue.pop_front() {
            let d = p.tau[order[i]];
            if label[d] == usize::MAX {
                let before = order.len();
                assign(d, &mut label, &mut next_edge);
                order.extend([d, theta(d), sigma(d), theta_sigma(d)]);
                queue.extend(before..before + 4);
            }
        }
        debug_assert_eq!(order.len(), n, "component not connected");
        let mut tau = vec![0; n];
        for &c in &order {
            tau[label[c]] = label[p.tau[c]];
        }
        if best.as_ref().map_or(true, |b| tau < *b) {
            best = Some(tau);
        }
    }
    best.unwrap_or_default()
}
