//! Finite groups as Cayley tables, and the genus sums `z(G, ḡ)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ComputeError, Limits};
use crate::poly::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    NotSquare { row: usize },
    OutOfRange { row: usize, col: usize },
    NoIdentity { element: usize },
    NoInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::NotSquare { row } => write!(f, "row {row} has the wrong length"),
            GroupViolation::OutOfRange { row, col } => {
                write!(f, "entry ({row}, {col}) is not an element")
            }
            GroupViolation::NoIdentity { element } => {
                write!(f, "element 0 is not an identity for {element}")
            }
            GroupViolation::NoInverse { element } => write!(f, "element {element} has no inverse"),
            GroupViolation::NotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupReport {
    pub violations: Vec<GroupViolation>,
}

impl GroupReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for GroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        if parts.is_empty() {
            write!(f, "ok")
        } else {
            write!(f, "{}", parts.join("; "))
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    Invalid(GroupReport),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("syntax error: {0}")]
    SyntaxError(String),
}

/// Checks the group axioms with 0 as identity. Stops at the first failing
/// kind of check.
pub fn validate_group(table: &[Vec<usize>]) -> GroupReport {
    let n = table.len();
    let mut report = GroupReport::default();
    let mut fail = |v| {
        report.violations.push(v);
    };
    if n == 0 {
        fail(GroupViolation::NoIdentity { element: 0 });
        return report;
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            fail(GroupViolation::NotSquare { row });
            return report;
        }
        if let Some(col) = r.iter().position(|&x| x >= n) {
            fail(GroupViolation::OutOfRange { row, col });
            return report;
        }
    }
    if let Some(element) = (0..n).find(|&a| table[0][a] != a || table[a][0] != a) {
        fail(GroupViolation::NoIdentity { element });
        return report;
    }
    if let Some(element) =
        (0..n).find(|&a| !(0..n).any(|b| table[a][b] == 0 && table[b][a] == 0))
    {
        fail(GroupViolation::NoInverse { element });
        return report;
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    fail(GroupViolation::NotAssociative { a, b, c });
                    return report;
                }
            }
        }
    }
    report
}

/// A group on `0..n` with identity 0.
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    zeta_memo: RwLock<HashMap<i64, Rational>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            name: self.name.clone(),
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            zeta_memo: RwLock::new(self.zeta_memo.read().unwrap().clone()),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order())
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::named(format!("table{}", table.len()), table)
    }

    fn named(name: String, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let report = validate_group(&table);
        if !report.is_ok() {
            return Err(GroupError::Invalid(report));
        }
        let inverse = (0..table.len())
            .map(|a| table[a].iter().position(|&x| x == 0).unwrap())
            .collect();
        Ok(FiniteGroup {
            name,
            table,
            inverse,
            zeta_memo: RwLock::new(HashMap::new()),
        })
    }

    fn from_mul(name: String, n: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::named(name, table).expect("catalog constructions are groups")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `#{g : g² = 1}`.
    pub fn square_roots_of_identity(&self) -> usize {
        (0..self.order()).filter(|&g| self.mul(g, g) == 0).count()
    }

    /// `z(G, ḡ)`: `|G|^{1-2g} #{∏[aᵢ,bᵢ] = 1}` for `ḡ = g ≥ 0` and
    /// `|G|^{1-g} #{∏cᵢ² = 1}` for `ḡ = -g < 0`.
    pub fn zeta(&self, gbar: i64, limits: &Limits) -> Result<Rational, ComputeError> {
        if let Some(z) = self.zeta_memo.read().unwrap().get(&gbar) {
            return Ok(z.clone());
        }
        let n = self.order() as u128;
        let needed = gbar.unsigned_abs() as u128 * n * n;
        if needed > limits.zeta_budget {
            return Err(ComputeError::BudgetExceeded {
                needed,
                budget: limits.zeta_budget,
            });
        }
        let g = gbar.unsigned_abs() as u32;
        let count = if gbar >= 0 {
            self.relator_solutions(g, |a, b| {
                let ab = self.mul(a, b);
                self.mul(self.mul(ab, self.inv(a)), self.inv(b))
            }, true)
        } else {
            self.relator_solutions(g, |c, _| self.mul(c, c), false)
        };
        let order = BigRational::from_integer(BigInt::from(self.order()));
        let exponent: i32 = if gbar >= 0 { 1 - 2 * g as i32 } else { 1 - g as i32 };
        let z = BigRational::from_integer(count) * Pow::pow(&order, exponent);
        self.zeta_memo.write().unwrap().insert(gbar, z.clone());
        Ok(z)
    }

    /// Number of tuples whose product of `g` word values is the identity.
    /// Each factor is `word(a, b)` over pairs when `pairs`, else `word(c, _)`.
    fn relator_solutions(&self, g: u32, word: impl Fn(usize, usize) -> usize, pairs: bool) -> BigInt {
        let n = self.order();
        let mut weight = vec![BigInt::zero(); n];
        for a in 0..n {
            if pairs {
                for b in 0..n {
                    weight[word(a, b)] += 1;
                }
            } else {
                weight[word(a, 0)] += 1;
            }
        }
        let mut dist = vec![BigInt::zero(); n];
        dist[0] = BigInt::one();
        for _ in 0..g {
            let mut next = vec![BigInt::zero(); n];
            for (x, dx) in dist.iter().enumerate() {
                if dx.is_zero() {
                    continue;
                }
                for (t, wt) in weight.iter().enumerate() {
                    if !wt.is_zero() {
                        next[self.mul(x, t)] += dx * wt;
                    }
                }
            }
            dist = next;
        }
        dist.swap_remove(0)
    }
}

/// Direct product, with `(a, b)` stored at `a·|H| + b`.
pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    FiniteGroup::from_mul(
        format!("product({},{})", g.name, h.name),
        g.order() * m,
        |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m),
    )
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    FiniteGroup::from_mul(format!("cyclic{n}"), n, |a, b| (a + b) % n)
}

/// Dihedral group of the given order `2n`; `r^i s^j` is element `i + n·j`.
pub fn dihedral(order: usize) -> FiniteGroup {
    assert!(order >= 2 && order % 2 == 0);
    let n = order / 2;
    FiniteGroup::from_mul(format!("dihedral{order}"), order, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let rot = if j == 0 { i + k } else { i + n - k };
        rot % n + n * ((j + l) % 2)
    })
}

/// `1, -1, i, -i, j, -j, k, -k` in that order.
pub fn quaternion8() -> FiniteGroup {
    // unit products in {1, i, j, k} with a sign
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    FiniteGroup::from_mul("quaternion8".into(), 8, |x, y| {
        let (u, v) = (x / 2, y / 2);
        let (w, neg) = UNIT[u][v];
        2 * w + ((x % 2 + y % 2 + neg as usize) % 2)
    })
}

/// Permutations of `0..n` in lexicographic order, composed as `(ab)(i) = a(b(i))`.
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!((1..=5).contains(&n));
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
    loop {
        let mut p = perms.last().unwrap().clone();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        perms.push(p);
    }
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    FiniteGroup::from_mul(format!("symmetric{n}"), perms.len(), |a, b| {
        let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
        index[&c]
    })
}

/// Looks up a group by name: `cyclic4` or `cyclic(4)`, `dihedral8`,
/// `quaternion8`, `symmetric3`, `klein4`, `Z4`, `D8`, `Q8`, `S3`, and
/// `product(G,H)` of any of these.
pub fn catalog(name: &str) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownGroup(name.to_string());
    let name = name.trim();
    if let Some(inner) = name.strip_prefix("product(").and_then(|s| s.strip_suffix(')')) {
        let split = split_top_level(inner).ok_or_else(unknown)?;
        let (a, b) = (catalog(split.0)?, catalog(split.1)?);
        return Ok(product(&a, &b));
    }
    let head_len = name
        .find(|c: char| c.is_ascii_digit() || c == '(')
        .ok_or_else(unknown)?;
    let (head, rest) = name.split_at(head_len);
    let digits = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    let n: usize = digits.parse().map_err(|_| unknown())?;
    match head {
        "cyclic" | "Z" | "C" if (1..=64).contains(&n) => Ok(cyclic(n)),
        "dihedral" | "D" if n >= 2 && n % 2 == 0 && n <= 64 => Ok(dihedral(n)),
        "quaternion" | "Q" if n == 8 => Ok(quaternion8()),
        "symmetric" | "S" if (1..=5).contains(&n) => Ok(symmetric(n)),
        "klein" | "V" if n == 4 => Ok(product(&cyclic(2), &cyclic(2))),
        _ => Err(unknown()),
    }
}

fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    format: String,
    order: usize,
    table: Vec<Vec<usize>>,
}

pub const GROUP_FORMAT: &str = "group-v1";

pub fn parse_group(text: &str) -> Result<FiniteGroup, GroupError> {
    let doc: GroupDoc =
        serde_json::from_str(text).map_err(|e| GroupError::SyntaxError(e.to_string()))?;
    if doc.format != GROUP_FORMAT {
        return Err(GroupError::SyntaxError(format!(
            "expected format `{GROUP_FORMAT}`, found `{}`",
            doc.format
        )));
    }
    if doc.table.len() != doc.order {
        return Err(GroupError::SyntaxError(format!(
            "order {} but {} rows",
            doc.order,
            doc.table.len()
        )));
    }
    FiniteGroup::from_table(doc.table)
}

pub fn serialize_group(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupDoc {
        format: GROUP_FORMAT.into(),
        order: g.order(),
        table: g.table.clone(),
    })
    .expect("serializing plain data")
}
