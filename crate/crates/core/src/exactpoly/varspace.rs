use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};

/// Which graded piece a coordinate belongs to: the `g0` block or the `g1` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Part {
    Zero,
    One,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::Zero => "ZERO",
            Part::One => "ONE",
        })
    }
}

/// Ordered, bi-graded set of variable identifiers.
///
/// The order fixes the graded-lexicographic term order used for printing:
/// earlier variables are larger.
#[derive(Clone)]
pub struct VarSpace {
    names: Vec<String>,
    parts: Vec<Part>,
    index: FxHashMap<String, usize>,
}

pub type Space = Arc<VarSpace>;

impl VarSpace {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, Part)>) -> Result<Space> {
        let mut names = Vec::new();
        let mut parts = Vec::new();
        let mut index = FxHashMap::default();
        for (name, part) in vars {
            let name = name.into();
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("invalid variable identifier `{name}`")));
            }
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::DuplicateVariable(name));
            }
            names.push(name);
            parts.push(part);
        }
        Ok(Arc::new(VarSpace { names, parts, index }))
    }

    /// All variables labelled `Part::Zero`.
    pub fn ungraded<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Space> {
        VarSpace::new(names.into_iter().map(|n| (n, Part::Zero)))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn part(&self, i: usize) -> Part {
        self.parts[i]
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn indices_of(&self, part: Part) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.parts[i] == part).collect()
    }
}

impl PartialEq for VarSpace {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.parts == other.parts
    }
}

impl Eq for VarSpace {}

impl fmt::Debug for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.names.iter().zip(&self.parts))
            .finish()
    }
}

pub(crate) fn same_space(a: &Space, b: &Space) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
