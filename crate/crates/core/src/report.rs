//! Condition-by-condition verdicts with the failing basis tuples.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;

/// One named condition and every basis-index tuple on which it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub witnesses: Vec<Vec<usize>>,
}

impl Condition {
    pub fn new(name: &'static str) -> Self {
        Condition {
            name,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn fail(&mut self, tuple: &[usize]) {
        self.witnesses.push(tuple.to_vec());
    }
}

/// Ordered list of condition verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub conditions: Vec<Condition>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.conditions.extend(other.conditions);
    }

    pub fn passed(&self) -> bool {
        self.conditions.iter().all(Condition::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// Whether the named condition is present and passes.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(Condition::passed)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.conditions
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.to_string())
            .collect()
    }

    /// `Ok(())` when everything passes, otherwise [`Error::Unsatisfied`].
    pub fn into_result(&self, structure: &'static str) -> Result<(), Error> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::Unsatisfied {
                structure,
                failed: self.failed_names(),
            })
        }
    }
}
