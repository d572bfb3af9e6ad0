//! Logical search budgets. Library searches count node expansions; they never
//! look at the clock. A shared cancel flag lets a caller stop a search early.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Budget {
    pub nodes: u64,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn nodes(nodes: u64) -> Self {
        Budget { nodes, cancel: None }
    }

    pub fn unlimited() -> Self {
        Budget::nodes(u64::MAX)
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter { used: 0, limit: self.nodes, cancel: self.cancel.clone() }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Self::DEFAULT_NODES)
    }
}

/// Running node counter for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    pub used: u64,
    limit: u64,
    cancel: Option<Arc<AtomicBool>>,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { nodes: self.limit, bounds: None });
        }
        if self.used % 4096 == 0 {
            if let Some(flag) = &self.cancel {
                if flag.load(Ordering::Relaxed) {
                    return Err(Error::Cancelled { nodes: self.used });
                }
            }
        }
        Ok(())
    }

    /// A budget for a nested search holding whatever this meter has left.
    pub fn remaining(&self) -> Budget {
        Budget { nodes: self.limit.saturating_sub(self.used), cancel: self.cancel.clone() }
    }

    /// Charge the work a nested search reported.
    pub fn charge(&mut self, nodes: u64) -> Result<()> {
        self.used = self.used.saturating_add(nodes);
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { nodes: self.limit, bounds: None });
        }
        Ok(())
    }
}
