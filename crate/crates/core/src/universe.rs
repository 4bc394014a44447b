//! Variable universes and bitmask variable sets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported universe. Variable sets are stored as `u32` masks, so
/// this may be raised up to 32 without changing representations.
pub const MAX_VARS: usize = 16;

/// A subset of a universe, stored as a bitmask over variable indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        VarSet(1 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VarSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == mask {
                None
            } else {
                Some(current.wrapping_sub(mask) & mask)
            };
            Some(VarSet(current))
        })
    }

    /// Re-index the members of `self` that lie in `within` so that the k-th
    /// member of `within` becomes index k.
    pub fn compress(self, within: VarSet) -> VarSet {
        let mut out = 0u32;
        for (k, i) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        VarSet(out)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VarSet::from_indices(iter)
    }
}

/// An ordered list of distinct variable labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    /// Labels must be nonempty and made of ASCII letters, digits, `_` or `.`.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(Error::UniverseSize { got: names.len(), max: MAX_VARS });
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_label(name) {
                return Err(Error::InvalidLabel(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Universe { names })
    }

    /// Universe labelled `0`, `1`, ..., `n-1`.
    pub fn numbered(n: usize) -> Result<Self> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> VarSet {
        VarSet((((1u64) << self.len()) - 1) as u32)
    }

    pub fn contains_set(&self, set: VarSet) -> bool {
        set.is_subset(self.full())
    }

    pub fn check_set(&self, set: VarSet) -> Result<()> {
        if self.contains_set(set) {
            Ok(())
        } else {
            Err(Error::OutOfUniverse(set))
        }
    }

    pub fn complement(&self, set: VarSet) -> VarSet {
        self.full().difference(set)
    }

    /// The universe made of the members of `set`, in their original order.
    pub fn sub_universe(&self, set: VarSet) -> Result<Universe> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        Ok(Universe { names: set.iter().map(|i| self.names[i].clone()).collect() })
    }

    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<VarSet> {
        let mut set = VarSet::EMPTY;
        for label in labels {
            set.insert(self.index_of(label)?);
        }
        Ok(set)
    }

    /// Parses `-`, the empty string, or comma-separated labels.
    pub fn parse_set(&self, text: &str) -> Result<VarSet> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(VarSet::EMPTY);
        }
        self.set_of(text.split(',').map(str::trim))
    }

    /// Inverse of [`Universe::parse_set`]; the empty set prints as `-`.
    pub fn format_set(&self, set: VarSet) -> String {
        if set.is_empty() {
            return "-".to_string();
        }
        set.iter().map(|i| self.names[i].as_str()).collect::<Vec<_>>().join(",")
    }
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label != "-"
        && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

/// Reads the `vars: a b c` header shared by all text formats.
pub(crate) fn parse_vars_header(line: &str, line_no: usize) -> Result<Universe> {
    let rest = line.trim().strip_prefix("vars:").ok_or_else(|| Error::Parse {
        line: line_no,
        message: "expected `vars:` header".to_string(),
    })?;
    Universe::new(rest.split_whitespace()).map_err(|e| Error::Parse { line: line_no, message: e.to_string() })
}

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}
