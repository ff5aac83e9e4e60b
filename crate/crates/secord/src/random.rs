//! Seeded generators for benchmark and test instances.
//!
//! Everything here is driven by an explicit RNG so that a `(seed, shape)`
//! pair pins the whole instance stream. The function generators favour
//! coverage over uniformity and are calibration utilities, not samplers of
//! any particular distribution.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitword::BitWord;
use crate::boolfn::BooleanFunction;
use crate::family::{GroundSet, SetFamily};

/// RNG for the instance stream identified by `(seed, stream)`.
pub fn instance_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Ground set `{"1", ..., "c"}`.
pub fn numbered_ground(c: usize) -> Arc<GroundSet> {
    GroundSet::new((1..=c).map(|i| i.to_string())).expect("distinct numbered labels")
}

/// A uniformly chosen nonempty subset of `0..c` (empty draws are retried).
pub fn random_nonempty_subset<R: Rng>(rng: &mut R, c: usize) -> BTreeSet<usize> {
    loop {
        let subset: BTreeSet<usize> = (0..c).filter(|_| rng.gen::<bool>()).collect();
        if !subset.is_empty() {
            return subset;
        }
    }
}

/// Family of `n` independently drawn nonempty components.
pub fn random_family<R: Rng>(rng: &mut R, ground: &Arc<GroundSet>, n: usize) -> SetFamily {
    let c = ground.len();
    let components = (0..n).map(|_| random_nonempty_subset(rng, c)).collect();
    SetFamily::new(Arc::clone(ground), components).expect("components drawn from the ground set")
}

/// Pointwise-nonempty subfamily of `family`: each component is a nonempty
/// subset of the corresponding component, so the result precedes `family`.
pub fn random_subfamily<R: Rng>(rng: &mut R, family: &SetFamily) -> SetFamily {
    let components = family
        .components()
        .iter()
        .map(|component| loop {
            let picked: BTreeSet<usize> =
                component.iter().copied().filter(|_| rng.gen::<bool>()).collect();
            if !picked.is_empty() {
                break picked;
            }
        })
        .collect();
    SetFamily::new(Arc::clone(family.ground()), components).expect("subsets of valid components")
}

/// Random monotone function with `f(0) = 0` and no identically-zero
/// coordinate, built by monotone closure of random seed rows.
pub fn random_monotone_function<R: Rng>(rng: &mut R, n: usize) -> BooleanFunction {
    assert!((1..=16).contains(&n), "generator meant for exhaustive widths");
    let rows = 1usize << n;
    let mut table = vec![0u64; rows];
    for coordinate in 0..n {
        let bit = 1u64 << coordinate;
        loop {
            let mut column = vec![false; rows];
            let mut seeded = false;
            for slot in column.iter_mut().skip(1) {
                if rng.gen_bool(0.15) {
                    *slot = true;
                    seeded = true;
                }
            }
            if !seeded {
                continue;
            }
            // monotone closure: a row is set once any subset of it is seeded
            for v in 1..rows {
                if column[v] {
                    table[v] |= bit;
                    continue;
                }
                let mut rest = v;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    if table[v & !low] & bit != 0 {
                        table[v] |= bit;
                        break;
                    }
                    rest ^= low;
                }
            }
            break;
        }
    }
    let outputs = table
        .into_iter()
        .map(|bits| BitWord::from_packed(n, bits))
        .collect();
    BooleanFunction::from_table(n, outputs).expect("full table")
}

/// Random monotone contractive function, grown upward from the constant
/// bottom function by weight-respecting bit raises.
pub fn random_monotone_contractive_function<R: Rng>(rng: &mut R, n: usize) -> BooleanFunction {
    assert!((1..=16).contains(&n), "generator meant for exhaustive widths");
    let rows = 1usize << n;
    let mut table = vec![0u64; rows];
    let raises = rng.gen_range(0..=3 * rows);
    for _ in 0..raises {
        let base = rng.gen_range(1..rows);
        let coordinate = rng.gen_range(0..n);
        let bit = 1u64 << coordinate;
        if table[base] & bit != 0 {
            continue;
        }
        // Raising at `base` must raise everything above it; check the whole
        // upward cone keeps its weight budget first.
        let feasible = (base..rows).all(|v| {
            v & base != base
                || ((table[v] | bit).count_ones() as usize) <= (v as u64).count_ones() as usize
        });
        if !feasible {
            continue;
        }
        for (v, row) in table.iter_mut().enumerate().skip(base) {
            if v & base == base {
                *row |= bit;
            }
        }
    }
    let outputs = table
        .into_iter()
        .map(|bits| BitWord::from_packed(n, bits))
        .collect();
    BooleanFunction::from_table(n, outputs).expect("full table")
}
