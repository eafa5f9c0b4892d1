//! Self-delimiting encodings of integer sequences over a λ-ary alphabet, the
//! separator layer used inside marker payloads, and the fixed-field records
//! of the unbounded scheme.
//!
//! Binary (`λ = 2`): each bit `b` becomes `1b`; the first pair of every
//! number after the first is replaced by the comma `0` followed by the bare
//! leading bit. So `(3, 5)` becomes `1111 0 1 10 11`. For `λ > 2` the pair
//! prefix is symbol 0 and the comma symbol 1. Either way a number with `d`
//! digits costs exactly `2d` symbols.

use thiserror::Error;

use crate::tree_core::PathCode;

/// The symbol separators and padding use; also the pair prefix for `λ > 2`.
pub const FIRST_COLOR: u8 = 0;
/// The symbol closing a payload; also the comma for `λ > 2`.
pub const SECOND_COLOR: u8 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("malformed encoding: {0}")]
    Malformed(String),
    #[error("alphabet size must be at least 2, got {0}")]
    BadAlphabet(usize),
}

fn malformed(msg: impl Into<String>) -> CodecError {
    CodecError::Malformed(msg.into())
}

/// (pair prefix, comma) for an alphabet of size `lambda`.
fn markers(lambda: usize) -> (u8, u8) {
    if lambda == 2 {
        (1, 0)
    } else {
        (FIRST_COLOR, SECOND_COLOR)
    }
}

/// Base-`lambda` digits, most significant first; zero is the single digit 0.
pub fn digits(mut value: usize, lambda: usize) -> Vec<u8> {
    let mut out = Vec::new();
    loop {
        out.push((value % lambda) as u8);
        value /= lambda;
        if value == 0 {
            break;
        }
    }
    out.reverse();
    out
}

pub fn encode_sequence(seq: &[usize], lambda: usize) -> Result<Vec<u8>, CodecError> {
    if !(2..=256).contains(&lambda) {
        return Err(CodecError::BadAlphabet(lambda));
    }
    let (prefix, comma) = markers(lambda);
    let mut out = Vec::new();
    for (i, &value) in seq.iter().enumerate() {
        for (j, d) in digits(value, lambda).into_iter().enumerate() {
            out.push(if j == 0 && i > 0 { comma } else { prefix });
            out.push(d);
        }
    }
    Ok(out)
}

pub fn decode_sequence(code: &[u8], lambda: usize) -> Result<PathCode, CodecError> {
    if !(2..=256).contains(&lambda) {
        return Err(CodecError::BadAlphabet(lambda));
    }
    if code.len() % 2 == 1 {
        return Err(malformed("odd length"));
    }
    let (prefix, comma) = markers(lambda);
    let mut out: Vec<usize> = Vec::new();
    // digits of the number being read, for the leading-zero check
    let mut current_digits = 0usize;
    for (k, pair) in code.chunks(2).enumerate() {
        let (head, d) = (pair[0], pair[1]);
        if usize::from(d) >= lambda {
            return Err(malformed(format!("digit {d} at pair {k}")));
        }
        let starts_number = if head == prefix {
            k == 0
        } else if head == comma {
            if k == 0 {
                return Err(malformed("leading comma"));
            }
            true
        } else {
            return Err(malformed(format!("symbol {head} at pair {k}")));
        };
        if starts_number {
            out.push(usize::from(d));
            current_digits = 1;
        } else {
            let last = out.last_mut().unwrap();
            if current_digits == 1 && *last == 0 {
                return Err(malformed("leading zero"));
            }
            *last = last
                .checked_mul(lambda)
                .and_then(|x| x.checked_add(usize::from(d)))
                .ok_or_else(|| malformed("number overflows"))?;
            current_digits += 1;
        }
    }
    Ok(out)
}

/// Inserts [`FIRST_COLOR`] after every `k` symbols, except at the very end.
pub fn insert_separators(s: &[u8], k: usize) -> Vec<u8> {
    assert!(k > 0, "block length must be positive");
    let mut out = Vec::with_capacity(s.len() + s.len() / k);
    for (i, block) in s.chunks(k).enumerate() {
        if i > 0 {
            out.push(FIRST_COLOR);
        }
        out.extend_from_slice(block);
    }
    out
}

pub fn remove_separators(s: &[u8], k: usize) -> Result<Vec<u8>, CodecError> {
    assert!(k > 0, "block length must be positive");
    let mut out = Vec::with_capacity(s.len());
    for (i, &x) in s.iter().enumerate() {
        if i % (k + 1) == k {
            if x != FIRST_COLOR {
                return Err(malformed(format!("expected separator at {i}")));
            }
            if i + 1 == s.len() {
                return Err(malformed("trailing separator"));
            }
        } else {
            out.push(x);
        }
    }
    Ok(out)
}

/// The three small fields and the piece of a root path each node stores in
/// the unbounded scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedRecord {
    /// Depth class: 3 at the root, otherwise `(depth - 1) mod 3`.
    pub m1: u8,
    pub m2: u8,
    pub m3: u8,
    pub piece: Vec<u8>,
}

/// `m1` on three bits, then `m2`, `m3`, then the piece verbatim.
pub fn pack_record(m1: u8, m2: u8, m3: u8, piece: &[u8]) -> Vec<u8> {
    assert!(m1 <= 3 && m2 <= 1 && m3 <= 1, "record fields out of range");
    let mut out = vec![0, (m1 >> 1) & 1, m1 & 1, m2, m3];
    out.extend_from_slice(piece);
    out
}

pub fn unpack_record(s: &[u8]) -> Result<PackedRecord, CodecError> {
    if s.len() < 5 {
        return Err(malformed("record shorter than five symbols"));
    }
    if s[..5].iter().any(|&b| b > 1) {
        return Err(malformed("record header is not binary"));
    }
    if s[0] != 0 {
        return Err(malformed("first field above 3"));
    }
    Ok(PackedRecord { m1: s[1] * 2 + s[2], m2: s[3], m3: s[4], piece: s[5..].to_vec() })
}
