//! Wire-pair separation for contractive increasing functions.
//!
//! Any finite cell basis of maximal arity `m` would force, on every
//! non-invertible generated function, a pair of input wires that the
//! function cannot tell apart once some `m - 2` other wires are pinned to
//! zero. [`separating_function`] builds a strictly increasing function on
//! `n = 2^{m+1} + 4` wires that *can* tell every pair apart under every such
//! pinning; [`refute_arity`] runs the full scan and reports the witnesses.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitword::{combinations, BitWord};
use crate::boolfn::BooleanFunction;
use crate::{Error, Limits, Result};

/// Shape classes of the separating function, in matching precedence order.
///
/// Exactly one class matches each word; the block shapes require the 1-bits
/// to form precisely the stated pattern with every other coordinate zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// The empty word.
    Empty,
    /// A single 1.
    Singleton,
    /// Even weight of at least 2.
    Even,
    /// Weight 3 as an adjacent pair, a gap, then a lone 1.
    PairGapUnit,
    /// Any other weight-3 word.
    OtherTriple,
    /// A run of `2^k` ones, a gap of `2^k` zeros, then a lone 1 (`k > 1`).
    RunGapUnit,
    /// A lone 1, a gap of `2^k` zeros, then a run of `2^k` ones (`k > 1`).
    UnitGapRun,
    /// Every remaining word; such words always have odd weight.
    OddRest,
}

/// All 1-positions, ascending.
fn positions(u: BitWord) -> Vec<usize> {
    u.support().collect()
}

fn is_run(positions: &[usize]) -> bool {
    positions.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Classify a word by the precedence order of the case list.
pub fn classify(u: BitWord) -> CaseTag {
    let weight = u.weight();
    match weight {
        0 => CaseTag::Empty,
        1 => CaseTag::Singleton,
        w if w % 2 == 0 => CaseTag::Even,
        3 => {
            let p = positions(u);
            if p[1] == p[0] + 1 && p[2] > p[1] + 1 {
                CaseTag::PairGapUnit
            } else {
                CaseTag::OtherTriple
            }
        }
        w => {
            let run = w - 1;
            if run >= 4 && run.is_power_of_two() {
                let p = positions(u);
                if is_run(&p[..run]) && p[run] == p[0] + 2 * run {
                    return CaseTag::RunGapUnit;
                }
                if is_run(&p[1..]) && p[1] == p[0] + run + 1 {
                    return CaseTag::UnitGapRun;
                }
            }
            CaseTag::OddRest
        }
    }
}

/// `1^w 0...`: the weight-`w` word pushed to the left edge.
fn left_block(n: usize, w: usize) -> BitWord {
    if w == 0 {
        BitWord::zero(n)
    } else {
        BitWord::from_packed(n, ((1u64 << w) - 1) << (n - w))
    }
}

/// `1^{w-1} 0 1 0...`: the left block with its last 1 moved one slot right.
fn shifted_block(n: usize, w: usize) -> BitWord {
    debug_assert!(w >= 3 && w < n);
    left_block(n, w - 1).with_bit(w + 1, true)
}

/// The strictly increasing function whose wire pairs always separate.
///
/// The width must be even and at least 8: odd weights are mapped to blocks
/// of the same weight plus one trailing coordinate, which must fit the word.
pub fn separating_function(n: usize) -> Result<BooleanFunction> {
    if n < 8 || !n.is_multiple_of(2) || n > crate::MAX_WIDTH {
        return Err(Error::InvalidSeparatingWidth(n));
    }
    Ok(BooleanFunction::from_rule(n, move |u| {
        let w = u.weight();
        match classify(u) {
            CaseTag::Empty => BitWord::zero(n),
            CaseTag::PairGapUnit | CaseTag::RunGapUnit | CaseTag::UnitGapRun => {
                shifted_block(n, w)
            }
            _ => left_block(n, w),
        }
    }))
}

/// A choice of wire pair plus pinned-to-zero coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Placement {
    pub i1: usize,
    pub i2: usize,
    pub pinned: Vec<usize>,
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i1, self.i2)?;
        for k in &self.pinned {
            write!(f, ",{k}")?;
        }
        Ok(())
    }
}

/// Search for an assignment of the free wires that makes `f` distinguish
/// wires `i1` and `i2` with the `pinned` wires held at zero.
///
/// Returns a word `v` supported outside `pinned ∪ {i1, i2}` such that
/// `f(v ∨ e_{i1}) != f(v ∨ e_{i2})`, or `None` after exhausting all
/// assignments. Single contiguous runs are tried first (they cover the
/// constructive shapes above); the exhaustive fallback keeps a `None`
/// answer sound.
pub fn differentiates(
    f: &BooleanFunction,
    i1: usize,
    i2: usize,
    pinned: &[usize],
) -> Result<Option<BitWord>> {
    let n = f.width();
    if i1 == 0 || i2 == 0 || i1 >= i2 || i2 > n {
        return Err(Error::InvalidPlacement);
    }
    let mut blocked = vec![false; n + 1];
    blocked[i1] = true;
    blocked[i2] = true;
    for &k in pinned {
        if k == 0 || k > n || blocked[k] {
            return Err(Error::InvalidPlacement);
        }
        blocked[k] = true;
    }

    let e1 = BitWord::unit(n, i1);
    let e2 = BitWord::unit(n, i2);
    let split = |v: BitWord| (f.evaluate(v.join(e1)), f.evaluate(v.join(e2)));

    // Empty assignment, then contiguous runs of free coordinates.
    let (a, b) = split(BitWord::zero(n));
    if a != b {
        return Ok(Some(BitWord::zero(n)));
    }
    for start in 1..=n {
        let mut v = BitWord::zero(n);
        let mut end = start;
        while end <= n && !blocked[end] {
            v = v.with_bit(end, true);
            let (a, b) = split(v);
            if a != b {
                return Ok(Some(v));
            }
            end += 1;
        }
    }

    // Exhaustive fallback over subsets of the free coordinates.
    let free: Vec<usize> = (1..=n).filter(|&k| !blocked[k]).collect();
    for mask in 1u64..(1 << free.len()) {
        let mut v = BitWord::zero(n);
        for (bit, &coordinate) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                v = v.with_bit(coordinate, true);
            }
        }
        let (a, b) = split(v);
        if a != b {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Result of scanning every wire pair and pinning of a separating function.
#[derive(Clone, Debug)]
pub struct RefutationReport {
    pub m: usize,
    pub n: usize,
    /// Number of wire pairs `i1 < i2` scanned.
    pub pairs_checked: usize,
    /// Placements with no differentiating assignment.
    pub failures: Vec<Placement>,
    pub increasing: bool,
    pub contractive: bool,
    pub strictly_increasing: bool,
    /// Differentiating assignment found for each placement.
    pub witnesses: BTreeMap<Placement, BitWord>,
}

impl RefutationReport {
    /// The report certifies the refutation only when every placement
    /// separated and all three function checks passed.
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
            && self.increasing
            && self.contractive
            && self.strictly_increasing
    }
}

/// Scan the separating function against every arity-`m` placement.
///
/// Uses `n = 2^{m+1} + 4` wires unless overridden. For every pair
/// `i1 < i2` and every choice of `m - 2` pinned wires among the rest, a
/// differentiating assignment is searched; the report collects failures,
/// witnesses, and the three function checks.
pub fn refute_arity(
    m: usize,
    n_override: Option<usize>,
    limits: &Limits,
) -> Result<RefutationReport> {
    if m < 2 {
        return Err(Error::ArityBelowRange(m));
    }
    let default_n = (1usize << (m + 1)) + 4;
    let n = n_override.unwrap_or(default_n);
    if n > limits.sweep_width {
        return Err(Error::SweepWidthExceeded {
            width: n,
            cap: limits.sweep_width,
        });
    }
    let f = separating_function(n)?.materialized(limits)?;

    let increasing = f.is_increasing(limits)?;
    let contractive = f.is_contractive(limits)?;
    let strictly_increasing = f.is_strictly_increasing(limits)?;

    let mut failures = Vec::new();
    let mut witnesses = BTreeMap::new();
    let mut pairs_checked = 0;
    for i1 in 1..=n {
        for i2 in i1 + 1..=n {
            pairs_checked += 1;
            let others: Vec<usize> = (1..=n).filter(|&k| k != i1 && k != i2).collect();
            for selector in combinations(others.len(), m - 2)? {
                let pinned: Vec<usize> =
                    selector.support().map(|pos| others[pos - 1]).collect();
                let placement = Placement { i1, i2, pinned };
                match differentiates(&f, i1, i2, &placement.pinned)? {
                    Some(assignment) => {
                        witnesses.insert(placement, assignment);
                    }
                    None => failures.push(placement),
                }
            }
        }
    }
    Ok(RefutationReport {
        m,
        n,
        pairs_checked,
        failures,
        increasing,
        contractive,
        strictly_increasing,
        witnesses,
    })
}
