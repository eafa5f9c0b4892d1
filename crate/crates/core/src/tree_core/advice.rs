use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::tree::NodeId;

/// A finite string over the symbols `0..λ`.
///
/// Shared behind an `Arc`: balls clone advice per node, and many schemes hand
/// the same long string to every node.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AdviceString(Arc<[u8]>);

impl AdviceString {
    pub fn new(symbols: Vec<u8>) -> Self {
        AdviceString(symbols.into())
    }

    pub fn empty() -> Self {
        AdviceString::default()
    }

    pub fn symbol(s: u8) -> Self {
        AdviceString::new(vec![s])
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    /// Digits `0-9` for small alphabets, `-` for the empty string.
    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return "-".to_string();
        }
        if self.0.iter().all(|&s| s < 10) {
            self.0.iter().map(|&s| char::from(b'0' + s)).collect()
        } else {
            self.0.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn from_text(text: &str) -> Option<Self> {
        if text == "-" {
            return Some(AdviceString::empty());
        }
        if text.contains('.') {
            let symbols: Option<Vec<u8>> = text.split('.').map(|t| t.parse().ok()).collect();
            return symbols.map(AdviceString::new);
        }
        let symbols: Option<Vec<u8>> =
            text.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        symbols.map(AdviceString::new)
    }
}

impl fmt::Debug for AdviceString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() > 64 {
            write!(f, "\"{}…\"({})", &self.to_text()[..64], self.0.len())
        } else {
            write!(f, "\"{}\"", self.to_text())
        }
    }
}

impl From<&[u8]> for AdviceString {
    fn from(s: &[u8]) -> Self {
        AdviceString(s.into())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdviceError {
    #[error("node {node} carries symbol {symbol}, outside the alphabet of size {alphabet}")]
    SymbolOutOfRange { node: NodeId, symbol: u8, alphabet: usize },
    #[error("alphabet size must be at least 2, got {0}")]
    BadAlphabet(usize),
}

/// The oracle's output: one advice string per node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdviceAssignment {
    alphabet: usize,
    strings: Vec<AdviceString>,
}

impl AdviceAssignment {
    pub fn new(alphabet: usize, strings: Vec<AdviceString>) -> Result<Self, AdviceError> {
        if alphabet < 2 {
            return Err(AdviceError::BadAlphabet(alphabet));
        }
        for (node, s) in strings.iter().enumerate() {
            if let Some(&symbol) = s.as_slice().iter().find(|&&x| usize::from(x) >= alphabet) {
                return Err(AdviceError::SymbolOutOfRange { node, symbol, alphabet });
            }
        }
        Ok(AdviceAssignment { alphabet, strings })
    }

    /// Every node gets the empty string.
    pub fn blank(alphabet: usize, nodes: usize) -> Self {
        AdviceAssignment { alphabet: alphabet.max(2), strings: vec![AdviceString::empty(); nodes] }
    }

    /// One single-symbol string per node.
    pub fn from_colors(alphabet: usize, colors: &[u8]) -> Result<Self, AdviceError> {
        let table: Vec<AdviceString> = (0..alphabet.min(256)).map(|s| AdviceString::symbol(s as u8)).collect();
        let strings = colors
            .iter()
            .map(|&c| table.get(usize::from(c)).cloned().unwrap_or_else(|| AdviceString::symbol(c)))
            .collect();
        Self::new(alphabet, strings)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn get(&self, v: NodeId) -> &AdviceString {
        &self.strings[v]
    }

    pub fn strings(&self) -> &[AdviceString] {
        &self.strings
    }

    pub fn node_count(&self) -> usize {
        self.strings.len()
    }

    /// Length of the longest string.
    pub fn size(&self) -> usize {
        self.strings.iter().map(AdviceString::len).max().unwrap_or(0)
    }

    /// Number of distinct strings.
    pub fn valency(&self) -> usize {
        self.strings.iter().collect::<HashSet<_>>().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_and_valency() {
        let a = AdviceAssignment::new(
            2,
            vec![AdviceString::new(vec![1, 0, 1]), AdviceString::empty(), AdviceString::new(vec![1, 0, 1])],
        )
        .unwrap();
        assert_eq!(a.size(), 3);
        assert_eq!(a.valency(), 2);
    }

    #[test]
    fn rejects_symbols_outside_alphabet() {
        let err = AdviceAssignment::new(2, vec![AdviceString::new(vec![2])]).unwrap_err();
        assert_eq!(err, AdviceError::SymbolOutOfRange { node: 0, symbol: 2, alphabet: 2 });
    }

    #[test]
    fn text_round_trip() {
        for s in [vec![], vec![0, 1, 1], vec![3, 12, 0]] {
            let a = AdviceString::new(s);
            assert_eq!(AdviceString::from_text(&a.to_text()), Some(a));
        }
    }
}
