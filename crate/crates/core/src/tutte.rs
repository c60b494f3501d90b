//! The surface Tutte polynomial and its specializations, by expansion over
//! all edge subsets `A` of the pair of minors `M/A` and `M\Aᶜ`.
//!
//! Every polynomial here depends on a subset only through the component
//! statistics of its two minors, so the expensive pass over `2^m` subsets
//! is done once by [`MinorTable`] and each polynomial is read off it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{ComputeError, Limits};
use crate::ops::{contract_mask, delete_mask, mask_from_bits};
use crate::poly::{Image, Monomial, MultiPoly, Rational, Var};
use crate::premap::{ComponentStats, Premap};

/// Euler genus of a surface with the given signed genus.
pub fn euler_genus_of(gbar: i64) -> u32 {
    if gbar >= 0 {
        2 * gbar as u32
    } else {
        (-gbar) as u32
    }
}

/// Components of a minor, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorShape(pub Vec<ComponentStats>);

impl MinorShape {
    fn of(p: &Premap) -> Self {
        let mut stats = p.component_stats();
        stats.sort();
        MinorShape(stats)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn orientable_components(&self) -> usize {
        self.0.iter().filter(|c| c.orientable).count()
    }

    pub fn v(&self) -> usize {
        self.0.iter().map(|c| c.v).sum()
    }

    pub fn e(&self) -> usize {
        self.0.iter().map(|c| c.e).sum()
    }

    pub fn f(&self) -> usize {
        self.0.iter().map(|c| c.f).sum()
    }

    pub fn s(&self) -> u32 {
        self.0.iter().map(|c| c.euler_genus() as u32).sum()
    }

    pub fn r(&self) -> u32 {
        (self.v() - self.k()) as u32
    }

    pub fn rstar(&self) -> u32 {
        (self.f() - self.k()) as u32
    }

    pub fn n(&self) -> u32 {
        self.e() as u32 - self.r()
    }

    pub fn nstar(&self) -> u32 {
        self.e() as u32 - self.rstar()
    }

    fn genus_vars(&self, var: fn(i64) -> Var) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(move |c| (var(c.signed_genus()), 1))
    }
}

/// How often each pair `(M/A, M\Aᶜ)` of minor shapes occurs over all `A`.
#[derive(Clone, Debug)]
pub struct MinorTable {
    pub edges: usize,
    /// `k(M)`.
    pub components: usize,
    /// `v(M)`.
    pub vertices: usize,
    /// Genus of the map when connected.
    pub signed_genus: i64,
    /// `(M/A shape, M\Aᶜ shape, count)`, sorted by shape.
    pub entries: Vec<(MinorShape, MinorShape, u64)>,
}

type Tally = HashMap<(MinorShape, MinorShape), u64>;

impl MinorTable {
    pub fn new(p: &Premap, limits: &Limits) -> Result<Self, ComputeError> {
        let m = p.edge_count();
        if m > limits.max_edges || m >= 64 {
            return Err(ComputeError::SubsetCapExceeded {
                edges: m,
                cap: limits.max_edges,
            });
        }
        let total: u64 = 1 << m;
        let chunk = 1u64 << m.saturating_sub(6).min(12);
        let tally: Tally = (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut local = Tally::new();
                for bits in c * chunk..((c + 1) * chunk).min(total) {
                    let in_a = mask_from_bits(m, bits);
                    let complement: Vec<bool> = in_a.iter().map(|x| !x).collect();
                    let contracted = contract_mask(p, &in_a).expect("mask length");
                    let restricted = delete_mask(p, &complement).expect("mask length");
                    *local
                        .entry((MinorShape::of(&contracted), MinorShape::of(&restricted)))
                        .or_default() += 1;
                }
                local
            })
            .reduce(Tally::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        let mut entries: Vec<_> = tally.into_iter().map(|((c, r), n)| (c, r, n)).collect();
        entries.sort();
        let params = p.params();
        Ok(MinorTable {
            edges: m,
            components: params.k,
            vertices: params.v,
            signed_genus: params.gbar,
            entries,
        })
    }

    /// Number of subsets summed over; always `2^m`.
    pub fn contributions(&self) -> u64 {
        self.entries.iter().map(|e| e.2).sum()
    }

    fn sum_monomials(&self, mono: impl Fn(&MinorShape, &MinorShape) -> Monomial) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (c, r, n) in &self.entries {
            out.add_term(mono(c, r), BigInt::from(*n));
        }
        out
    }

    fn sum_polys(&self, poly: impl Fn(&MinorShape, &MinorShape) -> MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (c, r, n) in &self.entries {
            out += &(&poly(c, r) * &MultiPoly::constant(*n));
        }
        out
    }

    /// `Σ_A x^{n*(M/A)} y^{n(M\Aᶜ)} ∏ x_{ḡ(Mᵢ)} ∏ y_{ḡ(Mⱼ)}`.
    pub fn surface_tutte(&self) -> MultiPoly {
        self.sum_monomials(|c, r| {
            Monomial::from_powers(
                [(Var::X, c.nstar()), (Var::Y, r.n())]
                    .into_iter()
                    .chain(c.genus_vars(Var::Xg))
                    .chain(r.genus_vars(Var::Yg)),
            )
        })
    }

    /// As [`surface_tutte`](Self::surface_tutte) with `x, y` raised to rank and
    /// dual rank.
    pub fn tilde_tutte(&self) -> MultiPoly {
        self.sum_monomials(|c, r| {
            Monomial::from_powers(
                [(Var::X, c.r()), (Var::Y, r.rstar())]
                    .into_iter()
                    .chain(c.genus_vars(Var::Xg))
                    .chain(r.genus_vars(Var::Yg)),
            )
        })
    }

    /// `Σ_A x^{r(M/A)} y^{r*(M\Aᶜ)} a^{s(M/A)} b^{s(M\Aᶜ)}`.
    pub fn q_poly(&self) -> MultiPoly {
        self.sum_monomials(|c, r| {
            Monomial::from_powers([
                (Var::X, c.r()),
                (Var::Y, r.rstar()),
                (Var::A, c.s()),
                (Var::B, r.s()),
            ])
        })
    }

    /// Krushkal's polynomial summed directly. `A` and `B` carry half
    /// exponents: `α^s` is `a^{s/2}`.
    pub fn krushkal_direct(&self) -> MultiPoly {
        let xm1 = MultiPoly::var(Var::X) - MultiPoly::one();
        self.sum_polys(|c, r| {
            &xm1.pow((r.k() - self.components) as u32)
                * &MultiPoly::monomial([(Var::Y, r.n()), (Var::A, c.s()), (Var::B, r.s())])
        })
    }

    /// Krushkal's polynomial, checked against the specialization of the
    /// surface Tutte polynomial.
    pub fn krushkal(&self) -> Result<MultiPoly, ComputeError> {
        let direct = self.krushkal_direct();
        let via = krushkal_from_surface(&self.surface_tutte(), self.components)?;
        agree("krushkal", direct, via)
    }

    /// Tutte polynomial of the underlying graph.
    pub fn tutte(&self) -> Result<MultiPoly, ComputeError> {
        tutte_from_surface(&self.surface_tutte(), self.components)
    }

    pub fn signed_direct(&self) -> MultiPoly {
        let xm1 = MultiPoly::var(Var::X) - MultiPoly::one();
        let ym1 = MultiPoly::var(Var::Y) - MultiPoly::one();
        let zm1 = MultiPoly::var(Var::Z) - MultiPoly::one();
        self.sum_polys(|_, r| {
            let y_exp = r.e() + r.orientable_components() - self.vertices;
            &(&xm1.pow((r.k() - self.components) as u32) * &ym1.pow(y_exp as u32))
                * &zm1.pow((r.k() - r.orientable_components()) as u32)
        })
    }

    /// The signed-graph polynomial `S(X, Y, Z)`, checked against the surface
    /// Tutte specialization.
    pub fn signed(&self) -> Result<MultiPoly, ComputeError> {
        let direct = self.signed_direct();
        let via = signed_from_surface(&self.surface_tutte(), self.components)?;
        agree("signed", direct, via)
    }

    pub fn quasi_trees_direct(&self, hbar: i64) -> u64 {
        self.entries
            .iter()
            .filter(|(_, r, _)| {
                r.k() == 1 && r.0[0].f == 1 && r.0[0].signed_genus() == hbar
            })
            .map(|e| e.2)
            .sum()
    }

    /// Quasi-trees of signed genus `hbar` by evaluating the renormalized
    /// polynomial at `x = y = 0`, `x_{ḡ-h̄} = y_{h̄} = 1` and every other genus
    /// variable 0. Exact for orientable maps; a non-orientable map of Euler
    /// genus 3 or more can have quasi-trees this misses, see
    /// [`quasi_trees`](Self::quasi_trees).
    pub fn quasi_trees_eval(&self, hbar: i64) -> Result<u64, ComputeError> {
        if self.components != 1 {
            return Err(ComputeError::NotConnected);
        }
        let g = self.signed_genus;
        if hbar.abs() > g.abs() {
            return Ok(0);
        }
        let value = self.tilde_tutte().eval_with(|v| {
            let hit = match v {
                Var::Xg(i) => i == g - hbar,
                Var::Yg(j) => j == hbar,
                _ => false,
            };
            if hit {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        Ok(to_count(&value))
    }

    /// Quasi-trees of signed genus `hbar`: the coefficients of the
    /// renormalized polynomial on monomials free of `y` whose only `y`-family
    /// factor is a single `y_{h̄}`. Checked against enumeration.
    pub fn quasi_trees(&self, hbar: i64) -> Result<u64, ComputeError> {
        if self.components != 1 {
            return Err(ComputeError::NotConnected);
        }
        let mut total = BigInt::zero();
        for (m, c) in self.tilde_tutte().terms() {
            let mut ys = m
                .powers()
                .iter()
                .filter(|(v, _)| matches!(v, Var::Y | Var::Yg(_)));
            if ys.next() == Some(&(Var::Yg(hbar), 1)) && ys.next().is_none() {
                total += c;
            }
        }
        let total = total.to_u64().expect("count out of range");
        let direct = self.quasi_trees_direct(hbar);
        if total != direct {
            return Err(ComputeError::MethodDisagreement(format!(
                "quasi-trees of genus {hbar}: coefficients give {total}, enumeration gives {direct}"
            )));
        }
        Ok(total)
    }

    /// `(quasi-forests, subsets whose contraction is a union of bouquets)`.
    pub fn quasi_forests(&self) -> Result<(u64, u64), ComputeError> {
        let q = self.q_poly();
        let at = |x: i64, y: i64| {
            to_count(&q.eval_with(|v| {
                Rational::from_integer(BigInt::from(match v {
                    Var::X => x,
                    Var::Y => y,
                    _ => 1,
                }))
            }))
        };
        let (forests, bouquets) = (at(1, 0), at(0, 1));
        let direct_forests: u64 = self
            .entries
            .iter()
            .filter(|(_, r, _)| r.0.iter().all(|c| c.f == 1))
            .map(|e| e.2)
            .sum();
        let direct_bouquets: u64 = self
            .entries
            .iter()
            .filter(|(c, _, _)| c.0.iter().all(|c| c.v == 1))
            .map(|e| e.2)
            .sum();
        if (forests, bouquets) != (direct_forests, direct_bouquets) {
            return Err(ComputeError::MethodDisagreement(format!(
                "quasi-forests: evaluation gives ({forests}, {bouquets}), enumeration gives ({direct_forests}, {direct_bouquets})"
            )));
        }
        Ok((forests, bouquets))
    }
}

fn to_count(q: &Rational) -> u64 {
    assert!(q.is_integer(), "count evaluated to a fraction");
    q.to_integer().to_u64().expect("count out of range")
}

fn agree(what: &str, direct: MultiPoly, via: MultiPoly) -> Result<MultiPoly, ComputeError> {
    if direct != via {
        return Err(ComputeError::MethodDisagreement(format!(
            "{what}: subset sum {direct} vs specialization {via}"
        )));
    }
    Ok(direct)
}

/// `x_ḡ ↦ x^{-s(ḡ)} x_ḡ` and `y_ḡ ↦ y^{-s(ḡ)} y_ḡ`: turns the surface Tutte
/// polynomial into its renormalized form.
pub fn renormalize(t: &MultiPoly) -> Result<MultiPoly, ComputeError> {
    Ok(t.substitute(|v| match v {
        Var::Xg(g) => Some(Image {
            poly: MultiPoly::var(v),
            x_shift: -(euler_genus_of(g) as i32),
            y_shift: 0,
        }),
        Var::Yg(g) => Some(Image {
            poly: MultiPoly::var(v),
            x_shift: 0,
            y_shift: -(euler_genus_of(g) as i32),
        }),
        _ => None,
    })?)
}

/// Swaps `x ↔ y` and `x_g ↔ y_g`; the surface Tutte polynomial of the dual.
pub fn swap_xy(t: &MultiPoly) -> MultiPoly {
    t.substitute(|v| {
        Some(Image::poly(MultiPoly::var(match v {
            Var::X => Var::Y,
            Var::Y => Var::X,
            Var::Xg(g) => Var::Yg(g),
            Var::Yg(g) => Var::Xg(g),
            other => other,
        })))
    })
    .expect("no shifts")
}

fn x_minus_one() -> MultiPoly {
    MultiPoly::var(Var::X) - MultiPoly::one()
}

/// `x = 1, x_g = α^{s(g)}, y = Y, y_g = (X - 1) β^{s(g)}`, divided by `(X - 1)^k`.
pub fn krushkal_from_surface(t: &MultiPoly, k: usize) -> Result<MultiPoly, ComputeError> {
    let special = t.substitute(|v| match v {
        Var::X => Some(MultiPoly::one().into()),
        Var::Y => Some(MultiPoly::var(Var::Y).into()),
        Var::Xg(g) => Some(MultiPoly::monomial([(Var::A, euler_genus_of(g))]).into()),
        Var::Yg(g) => Some(
            (&x_minus_one() * &MultiPoly::monomial([(Var::B, euler_genus_of(g))])).into(),
        ),
        _ => None,
    })?;
    Ok(special.div_linear(Var::X, &BigInt::one(), k as u32)?)
}

/// `x = 1, y = Y - 1, x_g = 1, y_g = X - 1`, divided by `(X - 1)^k`.
pub fn tutte_from_surface(t: &MultiPoly, k: usize) -> Result<MultiPoly, ComputeError> {
    let special = t.substitute(|v| match v {
        Var::X | Var::Xg(_) => Some(MultiPoly::one().into()),
        Var::Y => Some((MultiPoly::var(Var::Y) - MultiPoly::one()).into()),
        Var::Yg(_) => Some(x_minus_one().into()),
        _ => None,
    })?;
    Ok(special.div_linear(Var::X, &BigInt::one(), k as u32)?)
}

/// As [`tutte_from_surface`], except `y_g = (X - 1)(Z - 1)/(Y - 1)` for
/// `g < 0`. Each term's `(Y - 1)` denominators are cancelled against its
/// power of `y` before expanding.
pub fn signed_from_surface(t: &MultiPoly, k: usize) -> Result<MultiPoly, ComputeError> {
    let ym1 = MultiPoly::var(Var::Y) - MultiPoly::one();
    let zm1 = MultiPoly::var(Var::Z) - MultiPoly::one();
    let xm1 = x_minus_one();
    let mut out = MultiPoly::zero();
    for (m, c) in t.terms() {
        let mut y_exp = m.exponent(Var::Y) as i64;
        let mut yg = 0;
        let mut negative = 0;
        for &(v, e) in m.powers() {
            if let Var::Yg(g) = v {
                yg += e;
                if g < 0 {
                    negative += e;
                }
            }
        }
        y_exp -= negative as i64;
        if y_exp < 0 {
            return Err(ComputeError::MethodDisagreement(format!(
                "signed substitution leaves (Y - 1) in a denominator at {}",
                MultiPoly::term(c.clone(), m.clone())
            )));
        }
        let term = &(&ym1.pow(y_exp as u32) * &xm1.pow(yg)) * &zm1.pow(negative);
        out += &(&term * &MultiPoly::constant(c.clone()));
    }
    Ok(out.div_linear(Var::X, &BigInt::one(), k as u32)?)
}

/// `(x₀y₀)^k T(y₀x + 1, x₀y + 1)`, which equals the surface Tutte polynomial
/// of a plane map.
pub fn plane_form(tutte: &MultiPoly, k: usize) -> MultiPoly {
    let x0 = MultiPoly::var(Var::Xg(0));
    let y0 = MultiPoly::var(Var::Yg(0));
    let sub = tutte
        .substitute(|v| match v {
            Var::X => Some((&y0 * &MultiPoly::var(Var::X) + MultiPoly::one()).into()),
            Var::Y => Some((&x0 * &MultiPoly::var(Var::Y) + MultiPoly::one()).into()),
            _ => None,
        })
        .expect("no shifts");
    &(&x0 * &y0).pow(k as u32) * &sub
}

macro_rules! with_default_limits {
    ($(#[$doc:meta])* $name:ident => $method:ident -> $ret:ty) => {
        $(#[$doc])*
        pub fn $name(p: &Premap) -> Result<$ret, ComputeError> {
            let table = MinorTable::new(p, &Limits::default())?;
            table.$method()
        }
    };
}

pub fn surface_tutte(p: &Premap) -> Result<MultiPoly, ComputeError> {
    Ok(MinorTable::new(p, &Limits::default())?.surface_tutte())
}

pub fn tilde_tutte(p: &Premap) -> Result<MultiPoly, ComputeError> {
    Ok(MinorTable::new(p, &Limits::default())?.tilde_tutte())
}

pub fn q_poly(p: &Premap) -> Result<MultiPoly, ComputeError> {
    Ok(MinorTable::new(p, &Limits::default())?.q_poly())
}

with_default_limits!(krushkal => krushkal -> MultiPoly);
with_default_limits!(tutte_of_underlying => tutte -> MultiPoly);
with_default_limits!(signed_s_poly => signed -> MultiPoly);
with_default_limits!(quasi_forest_counts => quasi_forests -> (u64, u64));

pub fn quasi_tree_count(p: &Premap, hbar: i64) -> Result<u64, ComputeError> {
    MinorTable::new(p, &Limits::default())?.quasi_trees(hbar)
}
