//! Local `G`-flows and `G`-tensions: brute force, closed forms, and
//! evaluations of the surface Tutte polynomial.
//!
//! An assignment gives each edge `e` a value `g_e`. As a flow it puts `g_e`
//! on `4e, 4e+1` and `g_e⁻¹` on `4e+2, 4e+3`, and the product around each
//! vertex must be trivial. As a tension it puts `g_e` on `4e, 4e+2` and
//! `g_e⁻¹` on `4e+1, 4e+3`, with the condition taken around faces.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{ComputeError, Limits};
use crate::groups::FiniteGroup;
use crate::ops::{delete_mask, dual, mask_from_bits};
use crate::poly::{Rational, Var};
use crate::premap::{components, Cross, Premap};
use crate::tutte::MinorTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountKind {
    Flows,
    Tensions,
}

/// Value carried by a cross under a flow.
#[inline]
fn flow_value(g: &FiniteGroup, values: &[usize], c: Cross) -> usize {
    let x = values[c >> 2];
    if c & 2 == 0 {
        x
    } else {
        g.inv(x)
    }
}

#[inline]
fn tension_value(g: &FiniteGroup, values: &[usize], c: Cross) -> usize {
    let x = values[c >> 2];
    if c & 1 == 0 {
        x
    } else {
        g.inv(x)
    }
}

fn cycles_hold(
    g: &FiniteGroup,
    cycles: &[Vec<Cross>],
    values: &[usize],
    value: fn(&FiniteGroup, &[usize], Cross) -> usize,
) -> bool {
    cycles.iter().all(|cycle| {
        cycle
            .iter()
            .fold(0, |acc, &c| g.mul(acc, value(g, values, c)))
            == 0
    })
}

/// Whether the edge values form a local flow.
pub fn is_local_flow(p: &Premap, g: &FiniteGroup, values: &[usize]) -> bool {
    cycles_hold(g, &p.vertex_cycles(), values, flow_value)
}

/// Whether the edge values form a local tension.
pub fn is_local_tension(p: &Premap, g: &FiniteGroup, values: &[usize]) -> bool {
    cycles_hold(g, &p.face_cycles(), values, tension_value)
}

fn brute_force(
    p: &Premap,
    g: &FiniteGroup,
    nowhere_identity: bool,
    limits: &Limits,
    cycles: Vec<Vec<Cross>>,
    value: fn(&FiniteGroup, &[usize], Cross) -> usize,
) -> Result<BigInt, ComputeError> {
    let m = p.edge_count();
    let n = g.order();
    let needed = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if needed > limits.flow_budget {
        return Err(ComputeError::BudgetExceeded {
            needed,
            budget: limits.flow_budget,
        });
    }
    let lo = if nowhere_identity { 1 } else { 0 };
    if m == 0 {
        return Ok(BigInt::one());
    }
    // split on the value of the last edge, run the rest in mixed radix
    let count: u64 = (lo..n)
        .into_par_iter()
        .map(|last| {
            let mut values = vec![lo; m];
            values[m - 1] = last;
            let mut count = 0u64;
            loop {
                if cycles_hold(g, &cycles, &values, value) {
                    count += 1;
                }
                let mut i = 0;
                while i + 1 < m {
                    values[i] += 1;
                    if values[i] < n {
                        break;
                    }
                    values[i] = lo;
                    i += 1;
                }
                if i + 1 == m {
                    break;
                }
            }
            count
        })
        .sum();
    Ok(BigInt::from(count))
}

/// Local flows by enumeration of all `|G|^m` assignments.
pub fn brute_force_flows(
    p: &Premap,
    g: &FiniteGroup,
    nowhere_identity: bool,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    brute_force(p, g, nowhere_identity, limits, p.vertex_cycles(), flow_value)
}

/// Local tensions by enumeration, checked against flows on the dual.
pub fn brute_force_tensions(
    p: &Premap,
    g: &FiniteGroup,
    nowhere_identity: bool,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    let direct = brute_force(p, g, nowhere_identity, limits, p.face_cycles(), tension_value)?;
    let via_dual = brute_force_flows(&dual(p), g, nowhere_identity, limits)?;
    if direct != via_dual {
        return Err(ComputeError::MethodDisagreement(format!(
            "tensions {direct} but flows on the dual {via_dual}"
        )));
    }
    Ok(direct)
}

fn order_power(g: &FiniteGroup, e: i64) -> Rational {
    num_traits::Pow::pow(&Rational::from_integer(BigInt::from(g.order())), e as i32)
}

fn to_integer(q: Rational, what: &str) -> Result<BigInt, ComputeError> {
    if !q.is_integer() {
        return Err(ComputeError::MethodDisagreement(format!(
            "{what} evaluated to the fraction {q}"
        )));
    }
    Ok(q.to_integer())
}

/// All local tensions, `∏ |G|^{n*(Mᵢ) - 1} z(G, ḡ(Mᵢ))` over components.
pub fn tension_count_closed(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    let mut total = Rational::one();
    for c in components(p) {
        let params = c.params();
        total *= order_power(g, params.nstar as i64 - 1) * g.zeta(params.gbar, limits)?;
    }
    let total = to_integer(total, "closed tension count")?;
    assert!(!total.is_negative());
    Ok(total)
}

/// All local flows: tensions of the dual.
pub fn flow_count_closed(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    tension_count_closed(&dual(p), g, limits)
}

/// Nowhere-identity flows by inclusion-exclusion over `M\Aᶜ`, each term
/// the closed count of all flows on that submap.
pub fn flow_count_formula(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    flow_count_formula_with(p, g, limits, |gbar| g.zeta(gbar, limits))
}

/// As [`flow_count_formula`] with the genus sums supplied by the caller.
pub fn flow_count_formula_with(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
    zeta: impl Fn(i64) -> Result<Rational, ComputeError>,
) -> Result<BigInt, ComputeError> {
    let table = MinorTable::new(p, limits)?;
    let m = p.edge_count() as i64;
    let mut zetas: BTreeMap<i64, Rational> = BTreeMap::new();
    let mut total = Rational::zero();
    for (_, r, count) in &table.entries {
        let mut term = Rational::from_integer(BigInt::from(*count));
        if (m - r.e() as i64) % 2 == 1 {
            term = -term;
        }
        for c in &r.0 {
            let gbar = c.signed_genus();
            let z = match zetas.entry(gbar) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(zeta(gbar)?),
            };
            term *= order_power(g, c.params().n as i64 - 1) * &*z;
        }
        total += term;
    }
    to_integer(total, "flow formula")
}

/// Nowhere-identity tensions: flows of the dual.
pub fn tension_count_formula(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    flow_count_formula(&dual(p), g, limits)
}

/// `(-1)^{e - v} 𝒯(x = 1, x_g = 1, y = -|G|, y_g = -z(G, g)/|G|)`, or the
/// swapped evaluation with sign `(-1)^{e - f}` for tensions.
pub fn count_via_tutte(
    p: &Premap,
    g: &FiniteGroup,
    kind: CountKind,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    let table = MinorTable::new(p, limits)?;
    let t = table.surface_tutte();
    let order = Rational::from_integer(BigInt::from(g.order()));
    let mut values: BTreeMap<Var, Rational> = BTreeMap::new();
    for v in t.variables() {
        let (cycle_var, genus) = match (kind, v) {
            (CountKind::Flows, Var::Y) | (CountKind::Tensions, Var::X) => (true, None),
            (CountKind::Flows, Var::Yg(k)) | (CountKind::Tensions, Var::Xg(k)) => (true, Some(k)),
            _ => (false, None),
        };
        let value = match (cycle_var, genus) {
            (false, _) => Rational::one(),
            (true, None) => -order.clone(),
            (true, Some(k)) => -g.zeta(k, limits)? / &order,
        };
        values.insert(v, value);
    }
    let value = t.eval_with(|v| values[&v].clone());
    let params = p.params();
    let exponent = match kind {
        CountKind::Flows => params.e as i64 - params.v as i64,
        CountKind::Tensions => params.e as i64 - params.f as i64,
    };
    let value = if exponent.rem_euclid(2) == 1 { -value } else { value };
    to_integer(value, "surface Tutte evaluation")
}

pub fn flow_count_via_tutte(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    count_via_tutte(p, g, CountKind::Flows, limits)
}

pub fn tension_count_via_tutte(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    count_via_tutte(p, g, CountKind::Tensions, limits)
}

/// All flows (or tensions) as a sum of nowhere-identity counts of the
/// minors that drop the identity edges, each from the Tutte evaluation.
pub fn all_via_tutte(
    p: &Premap,
    g: &FiniteGroup,
    kind: CountKind,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    let m = p.edge_count();
    if m > limits.max_edges || m >= 64 {
        return Err(ComputeError::SubsetCapExceeded {
            edges: m,
            cap: limits.max_edges,
        });
    }
    let mut total = BigInt::zero();
    for bits in 0..1u64 << m {
        let identity_edges = mask_from_bits(m, bits);
        let minor = match kind {
            CountKind::Flows => delete_mask(p, &identity_edges),
            CountKind::Tensions => crate::ops::contract_mask(p, &identity_edges),
        }
        .expect("mask length");
        total += count_via_tutte(&minor, g, kind, limits)?;
    }
    Ok(total)
}

/// The abelian closed form with `2^d = #{g : g² = 1}` and `m = |G|/2^d`.
pub fn abelian_flow_count(
    p: &Premap,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<BigInt, ComputeError> {
    if !g.is_abelian() {
        return Err(ComputeError::NotAbelian(g.name().to_string()));
    }
    let two_d = BigInt::from(g.square_roots_of_identity());
    let odd = BigInt::from(g.order()) / &two_d;
    let table = MinorTable::new(p, limits)?;
    let m = p.edge_count();
    let mut total = BigInt::zero();
    for (_, r, count) in &table.entries {
        let base = r.e() as i64 - table.vertices as i64;
        let e1 = base + r.k() as i64;
        let e2 = base + r.orientable_components() as i64;
        assert!(e1 >= 0 && e2 >= 0);
        let term = BigInt::from(*count)
            * num_traits::pow(two_d.clone(), e1 as usize)
            * num_traits::pow(odd.clone(), e2 as usize);
        if (m - r.e()) % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}
