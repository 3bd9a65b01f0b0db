//! Search budgets. Exhaustive kernels count the nodes they expand and give
//! up with an explicit error instead of ever returning a wrong answer.

use crate::Error;

/// Default number of search nodes a single exhaustive kernel may expand.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable that overrides the default budget in the CLI.
pub const BUDGET_ENV: &str = "THETALAB_BUDGET";

#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// Budget taken from `THETALAB_BUDGET` if set, otherwise the default.
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Budget::new(limit)
    }

    /// Counts one expanded search node.
    pub fn tick(&mut self) -> Result<(), Error> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhausts_exactly_at_limit() {
        let mut b = Budget::new(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_err());
    }
}
