//! Duality, deletion, contraction and minors.
//!
//! Every result is relabelled so that surviving edges keep their relative
//! order and occupy `0..m'`. Because of that, removing a set of edges in one
//! pass gives exactly the same premap as removing them one at a time in any
//! order.

use crate::premap::{edge_of, theta_sigma, Cross, EdgeOutOfRange, Premap};

/// Swaps the roles of `θ` and `σ` inside one edge.
#[inline]
fn swap_roles(c: Cross) -> Cross {
    match c & 3 {
        1 | 2 => c ^ 3,
        _ => c,
    }
}

/// The dual map: vertices and faces trade places on the same surface.
pub fn dual(p: &Premap) -> Premap {
    let n = p.cross_count();
    let tau = (0..n)
        .map(|c| swap_roles(p.phi(swap_roles(c))))
        .collect();
    Premap::from_parts_unchecked(p.edge_count(), tau, p.isolated_count())
}

fn check_edges(p: &Premap, edges: &[usize]) -> Result<Vec<bool>, EdgeOutOfRange> {
    let mut mask = vec![false; p.edge_count()];
    for &e in edges {
        if e >= p.edge_count() {
            return Err(EdgeOutOfRange {
                edge: e,
                edges: p.edge_count(),
            });
        }
        mask[e] = true;
    }
    Ok(mask)
}

fn check_mask(p: &Premap, mask: &[bool]) -> Result<(), EdgeOutOfRange> {
    if mask.len() != p.edge_count() {
        return Err(EdgeOutOfRange {
            edge: mask.len(),
            edges: p.edge_count(),
        });
    }
    Ok(())
}

/// New position of each surviving edge.
fn compaction(removed: &[bool]) -> (Vec<usize>, usize) {
    let mut map = vec![usize::MAX; removed.len()];
    let mut next = 0;
    for (e, &r) in removed.iter().enumerate() {
        if !r {
            map[e] = next;
            next += 1;
        }
    }
    (map, next)
}

/// Number of cycle pairs of `perm` made entirely of removed crosses.
fn emptied_pairs(n: usize, perm: impl Fn(Cross) -> Cross, removed: &[bool]) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut all_removed = true;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            all_removed &= removed[edge_of(c)];
            c = perm(c);
        }
        count += all_removed as usize;
    }
    debug_assert!(count % 2 == 0);
    count / 2
}

fn rebuild(
    p: &Premap,
    removed: &[bool],
    extra_isolated: usize,
    next: impl Fn(Cross) -> Cross,
) -> Premap {
    let (map, kept) = compaction(removed);
    let relabel = |c: Cross| 4 * map[edge_of(c)] + (c & 3);
    let mut tau = vec![0; 4 * kept];
    for b in 0..p.cross_count() {
        if !removed[edge_of(b)] {
            tau[relabel(b)] = relabel(next(b));
        }
    }
    Premap::from_parts_unchecked(kept, tau, p.isolated_count() + extra_isolated)
}

/// Deletes every edge flagged in `mask` (length `m`).
pub fn delete_mask(p: &Premap, mask: &[bool]) -> Result<Premap, EdgeOutOfRange> {
    check_mask(p, mask)?;
    let iso = emptied_pairs(p.cross_count(), |c| p.tau(c), mask);
    Ok(rebuild(p, mask, iso, |b| {
        let mut d = p.tau(b);
        while mask[edge_of(d)] {
            d = p.tau(d);
        }
        d
    }))
}

/// Contracts every edge flagged in `mask` (length `m`).
pub fn contract_mask(p: &Premap, mask: &[bool]) -> Result<Premap, EdgeOutOfRange> {
    check_mask(p, mask)?;
    let n = p.cross_count();
    let iso = emptied_pairs(n, |c| p.phi(c), mask);
    Ok(rebuild(p, mask, iso, |b| {
        let mut d = p.tau(b);
        let mut steps = 0;
        while mask[edge_of(d)] {
            d = p.tau(theta_sigma(d));
            steps += 1;
            assert!(steps <= n, "contraction skip did not terminate");
        }
        d
    }))
}

pub fn delete(p: &Premap, e: usize) -> Result<Premap, EdgeOutOfRange> {
    delete_edges(p, &[e])
}

pub fn contract(p: &Premap, e: usize) -> Result<Premap, EdgeOutOfRange> {
    contract_edges(p, &[e])
}

pub fn delete_edges(p: &Premap, edges: &[usize]) -> Result<Premap, EdgeOutOfRange> {
    delete_mask(p, &check_edges(p, edges)?)
}

pub fn contract_edges(p: &Premap, edges: &[usize]) -> Result<Premap, EdgeOutOfRange> {
    contract_mask(p, &check_edges(p, edges)?)
}

/// `(M/A)\B` for disjoint `A` and `B`.
///
/// # Panics
/// If the sets overlap.
pub fn minor(p: &Premap, contract: &[usize], delete: &[usize]) -> Result<Premap, EdgeOutOfRange> {
    let a = check_edges(p, contract)?;
    let b = check_edges(p, delete)?;
    assert!(
        a.iter().zip(&b).all(|(x, y)| !(*x && *y)),
        "contraction and deletion sets overlap"
    );
    let deleted = delete_mask(p, &b)?;
    let remaining: Vec<bool> = a
        .iter()
        .zip(&b)
        .filter(|(_, &del)| !del)
        .map(|(&con, _)| con)
        .collect();
    contract_mask(&deleted, &remaining)
}

/// `(M/A, M\Aᶜ)` for `A` given as a mask.
pub fn minor_pair_mask(p: &Premap, in_a: &[bool]) -> Result<(Premap, Premap), EdgeOutOfRange> {
    let complement: Vec<bool> = in_a.iter().map(|x| !x).collect();
    Ok((contract_mask(p, in_a)?, delete_mask(p, &complement)?))
}

/// `(M/A, M\Aᶜ)`: contract the edges of `A`, or keep only them.
pub fn minor_pair(p: &Premap, a: &[usize]) -> Result<(Premap, Premap), EdgeOutOfRange> {
    minor_pair_mask(p, &check_edges(p, a)?)
}

/// Edge subset of an `m`-edge map read from the low bits of `bits`.
pub fn mask_from_bits(m: usize, bits: u64) -> Vec<bool> {
    (0..m).map(|e| bits >> e & 1 == 1).collect()
}
