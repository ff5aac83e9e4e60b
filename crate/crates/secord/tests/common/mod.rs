//! Helpers shared by the integration suites.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use secord::family::{GroundSet, Section, SetFamily};
use secord::Limits;

pub fn limits() -> Limits {
    Limits::default()
}

pub fn numbered_ground(c: usize) -> Arc<GroundSet> {
    GroundSet::new((1..=c).map(|i| i.to_string())).unwrap()
}

/// The strict pair from the two-component worked example.
pub fn worked_pair() -> (SetFamily, SetFamily) {
    let ground = numbered_ground(3);
    let x = SetFamily::from_labels(Arc::clone(&ground), [vec!["3"], vec!["1", "2", "3"]]).unwrap();
    let y = SetFamily::from_labels(ground, [vec!["2", "3"], vec!["1", "3"]]).unwrap();
    (x, y)
}

/// Every nonempty subset of `0..c`.
pub fn nonempty_subsets(c: usize) -> Vec<BTreeSet<usize>> {
    (1u64..(1 << c))
        .map(|mask| (0..c).filter(|&e| mask >> e & 1 == 1).collect())
        .collect()
}

/// Every family of arity `n` over the numbered ground of size `c`.
pub fn exhaustive_families(c: usize, n: usize) -> Vec<SetFamily> {
    let ground = numbered_ground(c);
    let subsets = nonempty_subsets(c);
    let mut families = Vec::new();
    let mut choice = vec![0usize; n];
    'outer: loop {
        let components = choice.iter().map(|&k| subsets[k].clone()).collect();
        families.push(SetFamily::new(Arc::clone(&ground), components).unwrap());
        for pos in (0..n).rev() {
            choice[pos] += 1;
            if choice[pos] < subsets.len() {
                continue 'outer;
            }
            choice[pos] = 0;
        }
        return families;
    }
}

/// Every sorted `n`-tuple over `0..c`, i.e. every candidate section.
pub fn all_candidate_sections(c: usize, n: usize) -> Vec<Section> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((prefix, lo)) = stack.pop() {
        if prefix.len() == n {
            out.push(Section::new(prefix));
            continue;
        }
        for e in lo..c {
            let mut next = prefix.clone();
            next.push(e);
            stack.push((next, e));
        }
    }
    out.sort();
    out
}
