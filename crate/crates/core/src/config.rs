use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// How independent pieces of work are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled, and runs sequentially
    /// otherwise.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Resource limits shared by the enumerating semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Refuse full enumeration above this many arguments.
    pub max_args: Option<usize>,
    /// Refuse to hold more than this many distinct labellings.
    pub max_labellings: Option<usize>,
    /// Refuse weak admissibility computations above this many arguments.
    pub max_bbu_args: Option<usize>,
    pub deadline: Option<Instant>,
    pub execution: Execution,
}

pub const DEFAULT_MAX_ARGS: usize = 25;
pub const DEFAULT_MAX_BBU_ARGS: usize = 20;

impl Default for Config {
    fn default() -> Self {
        Config {
            max_args: Some(DEFAULT_MAX_ARGS),
            max_labellings: None,
            max_bbu_args: Some(DEFAULT_MAX_BBU_ARGS),
            deadline: None,
            execution: Execution::default(),
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            execution: Execution::Sequential,
            ..Config::default()
        }
    }

    /// Sets both the enumeration and the weak admissibility argument limits.
    pub fn with_max_args(mut self, max: Option<usize>) -> Self {
        self.max_args = max;
        self.max_bbu_args = max;
        self
    }

    pub fn with_timeout(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub(crate) fn check_size(&self, n: usize, what: &str) -> Result<()> {
        match self.max_args {
            Some(max) if n > max => Err(Error::Limit(format!(
                "{what} refuses {n} arguments (limit {max})"
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_bbu_size(&self, n: usize) -> Result<()> {
        match self.max_bbu_args {
            Some(max) if n > max => Err(Error::Limit(format!(
                "weak admissibility refuses {n} arguments (limit {max})"
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_count(&self, count: usize) -> Result<()> {
        match self.max_labellings {
            Some(max) if count > max => Err(Error::Limit(format!("more than {max} labellings"))),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Limit("time budget exhausted".into())),
            _ => Ok(()),
        }
    }
}
