use std::collections::HashMap;
use std::hash::Hash;

use super::tree::PortLabeledTree;

/// Class ids such that two nodes share an id exactly when their radius-`radius`
/// labeled balls coincide.
///
/// Computed by refinement: a node's radius-t ball is fixed by its own label
/// and degree plus, per port, the far port and the neighbor's radius-(t-1)
/// ball, because every such neighbor ball lies inside the radius-t ball.
pub fn ball_classes<L: Hash + Eq + Clone>(tree: &PortLabeledTree, labels: &[L], radius: usize) -> Vec<u32> {
    let n = tree.node_count();
    let mut base: HashMap<(L, usize), u32> = HashMap::new();
    let mut class: Vec<u32> = (0..n)
        .map(|v| {
            let next = base.len() as u32;
            *base.entry((labels[v].clone(), tree.degree(v))).or_insert(next)
        })
        .collect();
    let start = class.clone();
    let mut distinct = base.len();
    for _ in 0..radius {
        let mut table: HashMap<Vec<u32>, u32> = HashMap::with_capacity(n);
        let mut key = Vec::new();
        let next: Vec<u32> = (0..n)
            .map(|v| {
                key.clear();
                key.push(start[v]);
                for &(w, back) in tree.neighbors(v) {
                    key.push(back as u32);
                    key.push(class[w]);
                }
                let fresh = table.len() as u32;
                *table.entry(key.clone()).or_insert(fresh)
            })
            .collect();
        let now = table.len();
        class = next;
        // once the partition stops splitting it is stable for every larger radius
        if now == distinct {
            break;
        }
        distinct = now;
    }
    class
}
