//! Wall-clock budgets for searches that can blow up.

use crate::error::{Error, Result};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn within(d: Duration) -> Self {
        Budget { deadline: Instant::now().checked_add(d) }
    }

    pub fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// `Err(Timeout)` once the deadline has passed.
    pub fn check(&self) -> Result<()> {
        if self.exhausted() {
            Err(Error::Timeout)
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
