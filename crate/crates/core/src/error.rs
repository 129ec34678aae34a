use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("{0} requires a finite field")]
    InfiniteField(&'static str),
    #[error("field mismatch: {0}")]
    FieldMismatch(&'static str),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is singular")]
    Singular(&'static str),
    #[error("{stage}: search space of {needed} candidates exceeds the budget of {limit}")]
    BudgetExceeded {
        stage: &'static str,
        needed: u128,
        limit: u64,
    },
    #[error("{structure} fails {}", failed.join(", "))]
    Unsatisfied {
        structure: &'static str,
        failed: Vec<String>,
    },
    #[error("{operation} requires characteristic {requirement}, field has characteristic {found}")]
    Characteristic {
        operation: &'static str,
        requirement: &'static str,
        found: u64,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
