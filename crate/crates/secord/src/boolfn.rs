//! Boolean functions `B^n -> B^n` and the predicates that classify them.
//!
//! A [`BooleanFunction`] is either an explicit truth table or a closed-form
//! rule behind the same evaluation contract. Tables keep exhaustive analysis
//! cheap for small widths; rules let wide functions be swept lazily without
//! materializing `2^n` rows up front.

use std::sync::Arc;

use crate::bitword::BitWord;
use crate::perm::Permutation;
use crate::{Error, Limits, Result};

#[derive(Clone)]
enum Body {
    Table(Arc<Vec<u64>>),
    Rule(Arc<dyn Fn(BitWord) -> BitWord + Send + Sync>),
}

/// A total function `B^n -> B^n`.
#[derive(Clone)]
pub struct BooleanFunction {
    width: usize,
    body: Body,
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.body {
            Body::Table(_) => "table",
            Body::Rule(_) => "rule",
        };
        write!(f, "BooleanFunction(width={}, {kind})", self.width)
    }
}

impl BooleanFunction {
    /// Function given by an explicit table of `2^width` outputs indexed by
    /// the packed value of the input.
    pub fn from_table(width: usize, outputs: Vec<BitWord>) -> Result<Self> {
        let expected = 1usize << width;
        if outputs.len() != expected {
            return Err(Error::TableLengthMismatch {
                expected,
                got: outputs.len(),
            });
        }
        if let Some(bad) = outputs.iter().find(|o| o.width() != width) {
            return Err(Error::WidthMismatch {
                left: width,
                right: bad.width(),
            });
        }
        Ok(BooleanFunction {
            width,
            body: Body::Table(Arc::new(outputs.iter().map(|o| o.index()).collect())),
        })
    }

    /// Function given by a closed-form rule.
    pub fn from_rule<F>(width: usize, rule: F) -> Self
    where
        F: Fn(BitWord) -> BitWord + Send + Sync + 'static,
    {
        BooleanFunction {
            width,
            body: Body::Rule(Arc::new(rule)),
        }
    }

    pub fn identity(width: usize) -> Self {
        BooleanFunction::from_rule(width, |u| u)
    }

    /// The function sending every input to `value`.
    pub fn constant(value: BitWord) -> Self {
        BooleanFunction::from_rule(value.width(), move |_| value)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn evaluate(&self, u: BitWord) -> BitWord {
        assert_eq!(u.width(), self.width, "evaluating at the wrong width");
        match &self.body {
            Body::Table(table) => u.with_packed(table[u.index() as usize]),
            Body::Rule(rule) => {
                let out = rule(u);
                assert_eq!(out.width(), self.width, "rule changed the width");
                out
            }
        }
    }

    /// Table-backed copy; sweeps all `2^n` inputs of a rule once.
    pub fn materialized(&self, limits: &Limits) -> Result<Self> {
        self.check_sweepable(limits)?;
        match &self.body {
            Body::Table(_) => Ok(self.clone()),
            Body::Rule(_) => {
                let table: Vec<u64> = (0..1u64 << self.width)
                    .map(|v| self.evaluate(BitWord::from_packed(self.width, v)).index())
                    .collect();
                Ok(BooleanFunction {
                    width: self.width,
                    body: Body::Table(Arc::new(table)),
                })
            }
        }
    }

    /// The full output column, indexed by packed input value.
    pub fn outputs(&self, limits: &Limits) -> Result<Vec<BitWord>> {
        self.check_sweepable(limits)?;
        Ok((0..1u64 << self.width)
            .map(|v| self.evaluate(BitWord::from_packed(self.width, v)))
            .collect())
    }

    fn check_sweepable(&self, limits: &Limits) -> Result<()> {
        if self.width > limits.sweep_width {
            return Err(Error::SweepWidthExceeded {
                width: self.width,
                cap: limits.sweep_width,
            });
        }
        Ok(())
    }

    /// Monotone in the pointwise order. Checked on all covering pairs:
    /// `f(u) <= f(v)` whenever `v` flips one 0 of `u` to 1.
    pub fn is_increasing(&self, limits: &Limits) -> Result<bool> {
        let table = self.materialized(limits)?;
        for v in 0..1u64 << self.width {
            let u = BitWord::from_packed(self.width, v);
            let fu = table.evaluate(u);
            for s in u.successors() {
                if !fu.leq(table.evaluate(s)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Never increases the weight: `|f(u)| <= |u|` everywhere.
    pub fn is_contractive(&self, limits: &Limits) -> Result<bool> {
        self.check_sweepable(limits)?;
        for v in 0..1u64 << self.width {
            let u = BitWord::from_packed(self.width, v);
            if self.evaluate(u).weight() > u.weight() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Increasing with `|f(u)| = |u|` everywhere.
    pub fn is_strictly_increasing(&self, limits: &Limits) -> Result<bool> {
        let table = self.materialized(limits)?;
        for v in 0..1u64 << self.width {
            let u = BitWord::from_packed(self.width, v);
            if table.evaluate(u).weight() != u.weight() {
                return Ok(false);
            }
        }
        table.is_increasing(limits)
    }

    /// Recover the permutation a contractive increasing function acts by.
    ///
    /// Requires `is_increasing` and `is_contractive` (error otherwise: the
    /// recovery argument is only valid under those hypotheses). Returns
    /// `Some(tau)` when the unit words map to pairwise distinct unit words;
    /// the table is then verified to equal the action of `tau` everywhere.
    pub fn as_permutation(&self, limits: &Limits) -> Result<Option<Permutation>> {
        let table = self.materialized(limits)?;
        if !table.is_increasing(limits)? || !table.is_contractive(limits)? {
            return Err(Error::NotContractiveIncreasing);
        }
        let mut images = vec![0usize; self.width];
        let mut used = vec![false; self.width];
        for i in 1..=self.width {
            let image = table.evaluate(BitWord::unit(self.width, i));
            if image.weight() != 1 {
                return Ok(None);
            }
            let j = image.support().next().unwrap();
            if used[j - 1] {
                return Ok(None);
            }
            used[j - 1] = true;
            images[i - 1] = j;
        }
        let tau = Permutation::from_images(&images).expect("distinct images");
        // Distinct unit images force the whole table to be the action.
        for v in 0..1u64 << self.width {
            let u = BitWord::from_packed(self.width, v);
            assert_eq!(
                table.evaluate(u),
                tau.apply_to_word(u),
                "unit-determined function must act as its permutation"
            );
        }
        Ok(Some(tau))
    }

    /// `self` after `other`: `u -> self(other(u))`.
    pub fn compose(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let f = self.clone();
        let g = other.clone();
        Ok(BooleanFunction::from_rule(self.width, move |u| {
            f.evaluate(g.evaluate(u))
        }))
    }

    /// Extensional equality, decided by a full sweep.
    pub fn agrees_with(&self, other: &BooleanFunction, limits: &Limits) -> Result<bool> {
        if self.width != other.width {
            return Ok(false);
        }
        self.check_sweepable(limits)?;
        Ok((0..1u64 << self.width).all(|v| {
            let u = BitWord::from_packed(self.width, v);
            self.evaluate(u) == other.evaluate(u)
        }))
    }
}

/// The coordinate action of a permutation as a boolean function.
pub fn permutation_action(sigma: &Permutation) -> BooleanFunction {
    let sigma = sigma.clone();
    BooleanFunction::from_rule(sigma.degree(), move |u| sigma.apply_to_word(u))
}

/// The and/or cell on coordinates `(i, j)`, identity elsewhere: output `i`
/// is the meet of inputs `i` and `j`, output `j` their join.
pub fn and_or_cell(n: usize, i: usize, j: usize) -> Result<BooleanFunction> {
    if i == 0 || j == 0 || i >= j || j > n {
        return Err(Error::InvalidCellCoordinates { i, j, width: n });
    }
    Ok(BooleanFunction::from_rule(n, move |u| {
        let (a, b) = (u.bit(i), u.bit(j));
        u.with_bit(i, a && b).with_bit(j, a || b)
    }))
}
