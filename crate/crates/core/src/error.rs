use crate::poly::PolyError;

/// Work bounds for the exponential computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count for subset expansion over all `2^m` edge sets.
    pub max_edges: usize,
    /// Largest `|G|^m` for brute-force flow enumeration.
    pub flow_budget: u128,
    /// Largest `|g| · |G|^2` for the group genus counts.
    pub zeta_budget: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_edges: 20,
            flow_budget: 10_000_000,
            zeta_budget: 100_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ComputeError {
    #[error("{edges} edges exceeds the subset cap of {cap}")]
    SubsetCapExceeded { edges: usize, cap: usize },
    #[error("work estimate {needed} exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("map is not connected")]
    NotConnected,
    #[error("methods disagree: {0}")]
    MethodDisagreement(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
