//! Two members an observer cannot tell apart under any oracle with short
//! advice, found by counting: members whose unlabeled views coincide can be
//! separated only by the advice inside the view, and there are too few
//! labelings of that view for all of their paths to the leader.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{FamilyError, TreeFamily};
use crate::tree_core::{extract_ball_labeled, extract_ball_with_ids, path_ports, AdviceString, NodeId, PathCode, Port};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PigeonholeWitness {
    pub half: usize,
    pub observer: NodeId,
    pub first: Vec<Port>,
    pub second: Vec<Port>,
    /// Advice for each position of the observer's ball, in ball order, given
    /// identically in both members.
    pub labeling: Vec<AdviceString>,
}

/// Assignments of binary strings of length at most `bits` to `positions`
/// nodes using at most `lambda` distinct strings, saturating.
pub fn labeling_count(positions: usize, bits: usize, lambda: usize) -> u128 {
    let strings: u128 = if bits >= 126 { u128::MAX } else { (1u128 << (bits + 1)) - 1 };
    let top = lambda.min(positions);
    // partitions of the positions into exactly j blocks
    let mut blocks = vec![0u128; top + 1];
    blocks[0] = 1;
    for _ in 0..positions {
        for j in (1..=top).rev() {
            blocks[j] = blocks[j].saturating_mul(j as u128).saturating_add(blocks[j - 1]);
        }
        blocks[0] = 0;
    }
    let mut total = 0u128;
    let mut falling = 1u128;
    for (j, &count) in blocks.iter().enumerate().skip(1) {
        let fresh = strings.saturating_sub(j as u128 - 1);
        if fresh == 0 {
            break;
        }
        falling = falling.saturating_mul(fresh);
        total = total.saturating_add(count.saturating_mul(falling));
    }
    total
}

struct Sighting {
    index: u128,
    view: Vec<usize>,
    path: PathCode,
    view_size: usize,
}

/// Examines the first `member_cap` members of each half in descriptor order.
/// For every observer, members are grouped by what the observer sees without
/// advice; a group holding more distinct paths to the leader than there are
/// labelings of the view yields a witness: its first member and the first
/// member whose path is new past that count, both with the first labeling.
pub fn pigeonhole_check(
    family: &TreeFamily,
    advice_bits: usize,
    lambda: usize,
    tau: usize,
    member_cap: u128,
) -> Result<PigeonholeWitness, FamilyError> {
    for half in 0..2 {
        let count = family.member_count(half).unwrap_or(u128::MAX).min(member_cap);
        if count < 2 {
            continue;
        }
        let leader = family.halves[half].leader;
        for &observer in &family.halves[half].observers {
            let sightings: Vec<Sighting> = (0..count)
                .into_par_iter()
                .map(|index| {
                    let tree = family.member(half, &family.descriptor(half, index))?;
                    let blank = vec![AdviceString::empty(); tree.node_count()];
                    let ball = extract_ball_labeled(&tree, &blank, observer, tau);
                    Ok(Sighting { index, view_size: ball.len(), view: ball.serialize(), path: path_ports(&tree, observer, leader) })
                })
                .collect::<Result<_, FamilyError>>()?;
            let mut groups: Vec<Vec<&Sighting>> = Vec::new();
            let mut group_of: HashMap<&[usize], usize> = HashMap::new();
            for s in &sightings {
                let g = *group_of.entry(&s.view).or_insert_with(|| {
                    groups.push(Vec::new());
                    groups.len() - 1
                });
                groups[g].push(s);
            }
            for group in groups {
                let room = labeling_count(group[0].view_size, advice_bits, lambda);
                let mut paths: Vec<&PathCode> = Vec::new();
                for s in &group {
                    if paths.contains(&&s.path) {
                        continue;
                    }
                    if paths.len() as u128 == room {
                        return Ok(PigeonholeWitness {
                            half,
                            observer,
                            first: family.descriptor(half, group[0].index),
                            second: family.descriptor(half, s.index),
                            labeling: vec![AdviceString::empty(); s.view_size],
                        });
                    }
                    paths.push(&s.path);
                }
            }
        }
    }
    Err(FamilyError::Exhausted)
}

/// Rebuilds both members, labels the observer's view in each, and checks the
/// views agree while the paths to the leader do not.
pub fn check_witness(family: &TreeFamily, witness: &PigeonholeWitness, tau: usize) -> Result<(), FamilyError> {
    if witness.first == witness.second {
        return Err(FamilyError::SameMember);
    }
    let leader = family.halves[witness.half].leader;
    let view = |descriptor: &[Port]| -> Result<_, FamilyError> {
        let tree = family.member(witness.half, descriptor)?;
        let blank = vec![AdviceString::empty(); tree.node_count()];
        let (_, ids) = extract_ball_with_ids(&tree, &blank, witness.observer, tau);
        if ids.len() != witness.labeling.len() {
            return Err(FamilyError::BallsDiffer);
        }
        let mut labels = blank;
        for (&id, advice) in ids.iter().zip(&witness.labeling) {
            labels[id] = advice.clone();
        }
        let ball = extract_ball_labeled(&tree, &labels, witness.observer, tau);
        Ok((ball, path_ports(&tree, witness.observer, leader)))
    };
    let (ball_a, path_a) = view(&witness.first)?;
    let (ball_b, path_b) = view(&witness.second)?;
    if ball_a != ball_b {
        return Err(FamilyError::BallsDiffer);
    }
    if path_a == path_b {
        return Err(FamilyError::SamePath);
    }
    Ok(())
}
