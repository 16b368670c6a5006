use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grading::{GroupElement, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub name: String,
    pub degree: GroupElement,
}

/// An ordered homogeneous basis. Iteration order is the order given at
/// construction and is used for every report.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    entries: Vec<BasisEntry>,
    index: HashMap<String, usize>,
}

impl PartialEq for GradedBasis {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GradedBasis {
    pub fn new(spec: &GroupSpec, entries: Vec<BasisEntry>) -> Result<Self> {
        let mut index = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            if !is_identifier(&e.name) {
                return Err(Error::Malformed(format!("basis name `{}` is not an identifier", e.name)));
            }
            if !spec.is_canonical(&e.degree) {
                return Err(Error::Malformed(format!(
                    "degree {} of `{}` is not a canonical element of the grading group",
                    e.degree, e.name
                )));
            }
            if index.insert(e.name.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate basis name `{}`", e.name)));
            }
        }
        Ok(Self { entries, index })
    }

    /// Convenience constructor from `(name, coordinates)` pairs.
    pub fn from_pairs<'a>(spec: &GroupSpec, pairs: impl IntoIterator<Item = (&'a str, Vec<i64>)>) -> Result<Self> {
        let entries = pairs
            .into_iter()
            .map(|(name, coords)| Ok(BasisEntry { name: name.to_owned(), degree: spec.element(coords)? }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec, entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn name(&self, i: usize) -> &str {
        &self.entries[i].name
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.entries[i].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Distinct degrees occurring in the basis, sorted.
    pub fn degree_support(&self) -> Vec<GroupElement> {
        let mut d: Vec<_> = self.entries.iter().map(|e| e.degree.clone()).collect();
        d.sort();
        d.dedup();
        d
    }

    /// Indices of the basis vectors spanning the component of degree `deg`.
    pub fn component(&self, deg: &GroupElement) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degree(i) == deg).collect()
    }
}
