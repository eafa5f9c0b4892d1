//! What a region carries: the top's encoded root path, closed by one
//! [`SECOND_COLOR`], with a separator after every `k` symbols, padded with
//! [`FIRST_COLOR`] up to the region's capacity.

use super::markers::{window_len, MarkerError};
use crate::codec::{decode_sequence, encode_sequence, insert_separators, remove_separators, CodecError, FIRST_COLOR, SECOND_COLOR};
use crate::tree_core::{NodeId, PathCode};

/// Payload symbols a region offers: `k - 2` pieces of `q - (2k + 9)` each.
pub fn capacity(k: usize, q: usize) -> usize {
    (k - 2) * q.saturating_sub(window_len(k))
}

pub fn coding_payload(path: &[usize], k: usize, q: usize, lambda: usize, top: NodeId) -> Result<Vec<u8>, MarkerError> {
    let mut body = encode_sequence(path, lambda).expect("alphabet checked by the caller");
    body.push(SECOND_COLOR);
    let mut s = insert_separators(&body, k);
    let capacity = capacity(k, q);
    if s.len() > capacity {
        return Err(MarkerError::CapacityExceeded { top, needed: s.len(), capacity });
    }
    s.resize(capacity, FIRST_COLOR);
    Ok(s)
}

pub fn decode_payload(symbols: &[u8], k: usize, lambda: usize) -> Result<PathCode, CodecError> {
    let end = symbols.iter().rposition(|&x| x != FIRST_COLOR).map_or(0, |i| i + 1);
    let mut body = remove_separators(&symbols[..end], k)?;
    if body.pop() != Some(SECOND_COLOR) {
        return Err(CodecError::Malformed("payload lacks its terminator".into()));
    }
    decode_sequence(&body, lambda)
}
