//! Colorings under which the colored map of a family member lets every node
//! find itself within τ rounds. Colors are `0 = c1`, `1 = c2`, and so on.

use super::general::{digits, GeneralFamilyParams, Regime};
use super::{FamilyError, Role, TreeFamily};

fn mismatch(m: String) -> Result<Vec<u8>, FamilyError> {
    Err(FamilyError::RegimeMismatch(m))
}

/// Strings of `width` colors naming the strands `1..=strands`.
fn strand_strings(strands: usize, lambda: usize, width: usize) -> Option<Vec<Vec<usize>>> {
    let room = (lambda as u128).checked_pow(width as u32).unwrap_or(u128::MAX);
    (room >= strands as u128).then(|| (0..strands).map(|j| digits(j, lambda, width)).collect())
}

/// The coloring for the regime the family was built for. It depends only on
/// node roles, so the same coloring serves every member.
pub fn witness_coloring(family: &TreeFamily, params: &GeneralFamilyParams, lambda: usize) -> Result<Vec<u8>, FamilyError> {
    let tau = params.tau;
    if tau <= 2 {
        return mismatch(format!("τ = {tau} leaves no room for strand strings"));
    }
    if !(2..=256).contains(&lambda) {
        return mismatch(format!("need 2 ≤ λ ≤ 256, got {lambda}"));
    }
    let h = params.half_length();
    let bits = params.distance_bits();
    // grey leaves spell the distance from the center to their node in binary
    let grey = |level: usize, bit: usize| digits(h - level, 2, bits)[bit];
    let colors: Vec<usize> = match params.regime {
        Regime::Small { .. } => {
            let Some(strings) = strand_strings(params.k2, lambda, params.z_prime) else {
                return mismatch(format!("λ^z' cannot name {} strands with z' = {}", params.k2, params.z_prime));
            };
            family
                .roles
                .iter()
                .map(|role| match *role {
                    Role::Grey { level, bit, .. } => grey(level, bit),
                    Role::Dotted { strand, slot, .. } => strings[strand - 1][slot],
                    _ => 0,
                })
                .collect()
        }
        Regime::Medium { .. } => {
            if params.k1 != 1 {
                return mismatch(format!("path strings cannot tell {} subtrees apart", params.k1));
            }
            let Some(strings) = strand_strings(params.k2, lambda, tau - 2) else {
                return mismatch(format!("λ^(τ-2) cannot name {} strands", params.k2));
            };
            family
                .roles
                .iter()
                .map(|role| match *role {
                    Role::Path { strand, level, .. } if level >= 3 => strings[strand - 1][(level - 3) % (tau - 2)],
                    Role::Grey { level, bit, .. } => grey(level, bit),
                    _ => 0,
                })
                .collect()
        }
        Regime::Large { .. } => {
            if (params.k1, params.k2) != (1, 2) {
                return mismatch(format!("two colors name two paths, not {}·{}", params.k1, params.k2));
            }
            family
                .roles
                .iter()
                .map(|role| match *role {
                    Role::Path { strand, .. } => strand - 1,
                    Role::Grey { level, bit, .. } => grey(level, bit),
                    _ => 0,
                })
                .collect()
        }
    };
    Ok(colors.into_iter().map(|c| c as u8).collect())
}
