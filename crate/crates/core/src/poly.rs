//! Sparse multivariate polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

pub type Rational = BigRational;

/// Indeterminates. `A` and `B` stand for square roots, so `A^s` means `a^{s/2}`.
/// `Xg(k)` and `Yg(k)` are indexed by signed genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    A,
    B,
    Xg(i64),
    Yg(i64),
}

/// How variables are spelled when printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    /// `x`, `y`, `z`, `a`, `b`, `x0`, `yg(-1)`.
    #[default]
    Lower,
    /// `X`, `Y`, `Z`, `alpha`, `beta`.
    Upper,
}

impl Var {
    pub fn name(self, style: Style) -> String {
        match (self, style) {
            (Var::X, Style::Lower) => "x".into(),
            (Var::Y, Style::Lower) => "y".into(),
            (Var::Z, Style::Lower) => "z".into(),
            (Var::A, Style::Lower) => "a".into(),
            (Var::B, Style::Lower) => "b".into(),
            (Var::X, Style::Upper) => "X".into(),
            (Var::Y, Style::Upper) => "Y".into(),
            (Var::Z, Style::Upper) => "Z".into(),
            (Var::A, Style::Upper) => "alpha".into(),
            (Var::B, Style::Upper) => "beta".into(),
            (Var::Xg(k), _) if k >= 0 => format!("x{k}"),
            (Var::Yg(k), _) if k >= 0 => format!("y{k}"),
            (Var::Xg(k), _) => format!("xg({k})"),
            (Var::Yg(k), _) => format!("yg({k})"),
        }
    }
}

/// Variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits off the exponent of `v`.
    fn split(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()))
    }

    fn fmt_with(&self, style: Style) -> String {
        self.0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.name(style)
                } else {
                    format!("{}^{e}", v.name(style))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Total degree first, then lexicographic on the sorted powers.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("substitution left a negative power of {0:?}")]
    NegativeExponentRemains(Var),
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
}

/// A polynomial with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Image of one variable under [`MultiPoly::substitute`]: `poly · x^x_shift · y^y_shift`,
/// where the shifts may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    pub poly: MultiPoly,
    pub x_shift: i32,
    pub y_shift: i32,
}

impl Image {
    pub fn poly(poly: MultiPoly) -> Self {
        Image {
            poly,
            x_shift: 0,
            y_shift: 0,
        }
    }
}

impl From<MultiPoly> for Image {
    fn from(poly: MultiPoly) -> Self {
        Image::poly(poly)
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn monomial(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        MultiPoly::term(1, Monomial::from_powers(powers))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval_with(&self, value: impl Fn(Var) -> Rational) -> Rational {
        let mut cache: HashMap<Var, Rational> = HashMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for &(v, e) in &m.0 {
                let x = cache.entry(v).or_insert_with(|| value(v));
                t *= Pow::pow(&*x, e);
            }
            total += t;
        }
        total
    }

    /// Evaluates with `assignment`, using `default` for unlisted variables.
    pub fn eval(&self, assignment: &HashMap<Var, Rational>, default: &Rational) -> Rational {
        self.eval_with(|v| assignment.get(&v).unwrap_or(default).clone())
    }

    /// Replaces each variable by its image; variables mapped to `None` are
    /// kept. Powers of `x` and `y` are tracked as signed integers until the
    /// end, so images may carry negative shifts as long as they cancel.
    pub fn substitute(&self, rule: impl Fn(Var) -> Option<Image>) -> Result<MultiPoly, PolyError> {
        let mut images: HashMap<Var, Laurent> = HashMap::new();
        let mut out = Laurent::default();
        for (m, c) in &self.terms {
            let mut t = Laurent::constant(c.clone());
            for &(v, e) in &m.0 {
                let image = images
                    .entry(v)
                    .or_insert_with(|| Laurent::from_image(rule(v).unwrap_or_else(|| Image::poly(MultiPoly::var(v)))));
                t = t.mul(&image.pow(e));
            }
            out.add(t);
        }
        out.into_poly()
    }

    /// Exact division by `(v - c)^times`.
    pub fn div_linear(&self, v: Var, c: &BigInt, times: u32) -> Result<MultiPoly, PolyError> {
        let mut p = self.clone();
        for _ in 0..times {
            p = p.div_linear_once(v, c)?;
        }
        Ok(p)
    }

    fn div_linear_once(&self, v: Var, c: &BigInt) -> Result<MultiPoly, PolyError> {
        // group by the part of the monomial free of v; each group is a
        // univariate polynomial in v divided synthetically
        let mut groups: BTreeMap<Monomial, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (m, coef) in &self.terms {
            let (e, rest) = m.split(v);
            groups.entry(rest).or_default().insert(e, coef.clone());
        }
        let mut out = MultiPoly::zero();
        for (rest, coeffs) in groups {
            let deg = *coeffs.keys().next_back().unwrap();
            let mut carry = BigInt::zero();
            for e in (0..=deg).rev() {
                let a = coeffs.get(&e).cloned().unwrap_or_default() + &carry;
                if e == 0 {
                    if !a.is_zero() {
                        return Err(PolyError::NotDivisible(format!(
                            "({} - {c})",
                            v.name(Style::Lower)
                        )));
                    }
                } else {
                    out.add_term(rest.mul(&Monomial::from_powers([(v, e - 1)])), a.clone());
                    carry = a * c;
                }
            }
        }
        Ok(out)
    }

    pub fn fmt_with(&self, style: Style) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if m.is_one() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&m.fmt_with(style));
            } else {
                s.push_str(&format!("{mag}*{}", m.fmt_with(style)));
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(Style::Lower))
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// Laurent in `x` and `y` only: keyed by signed `x`, `y` powers and the
/// remaining monomial.
#[derive(Clone, Debug, Default)]
struct Laurent {
    terms: BTreeMap<(i64, i64, Monomial), BigInt>,
}

impl Laurent {
    fn constant(c: BigInt) -> Self {
        let mut l = Laurent::default();
        l.push((0, 0, Monomial::one()), c);
        l
    }

    fn from_image(image: Image) -> Self {
        let mut l = Laurent::default();
        for (m, c) in image.poly.terms {
            let (ex, rest) = m.split(Var::X);
            let (ey, rest) = rest.split(Var::Y);
            l.push(
                (
                    ex as i64 + image.x_shift as i64,
                    ey as i64 + image.y_shift as i64,
                    rest,
                ),
                c,
            );
        }
        l
    }

    fn push(&mut self, key: (i64, i64, Monomial), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
    }

    fn add(&mut self, other: Laurent) {
        for (k, c) in other.terms {
            self.push(k, c);
        }
    }

    fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for ((x1, y1, m1), c1) in &self.terms {
            for ((x2, y2, m2), c2) in &other.terms {
                out.push((x1 + x2, y1 + y2, m1.mul(m2)), c1 * c2);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Laurent {
        let mut out = Laurent::constant(BigInt::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    fn into_poly(self) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero();
        for ((ex, ey, rest), c) in self.terms {
            if c.is_zero() {
                continue;
            }
            if ex < 0 {
                return Err(PolyError::NegativeExponentRemains(Var::X));
            }
            if ey < 0 {
                return Err(PolyError::NegativeExponentRemains(Var::Y));
            }
            let m = rest.mul(&Monomial::from_powers([(Var::X, ex as u32), (Var::Y, ey as u32)]));
            out.add_term(m, c);
        }
        Ok(out)
    }
}
