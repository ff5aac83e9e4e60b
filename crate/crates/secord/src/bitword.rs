//! Fixed-width boolean words with the pointwise lattice structure.
//!
//! A word of width `n` lives in `B^n` with `B = {0, 1}` ordered by `0 <= 1`.
//! Coordinates are 1-based and coordinate 1 is the leftmost character of the
//! textual rendering, so `"011101"` has coordinate 1 clear and coordinate 2
//! set. Ascending packed value therefore coincides with reading the rendered
//! word as a binary numeral.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, MAX_WIDTH};

/// An element of `B^n`, packed into a single machine word.
///
/// Words are immutable values; all operations are pure. The lattice
/// operations panic on width mismatch: mixing widths is a programming
/// error, not a data error.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    width: u8,
    // Coordinate i occupies bit (width - i); bits at and above `width` are zero.
    bits: u64,
}

impl BitWord {
    /// The all-zeros word of the given width.
    pub fn zero(width: usize) -> Self {
        assert!(
            (1..=MAX_WIDTH).contains(&width),
            "width must be in 1..={MAX_WIDTH}, got {width}"
        );
        BitWord {
            width: width as u8,
            bits: 0,
        }
    }

    /// The all-ones word of the given width.
    pub fn top(width: usize) -> Self {
        BitWord::zero(width).with_packed((1u64 << width) - 1)
    }

    /// The word `e_i` with a single 1 at coordinate `i` (1-based).
    pub fn unit(width: usize, coordinate: usize) -> Self {
        let zero = BitWord::zero(width);
        assert!(
            (1..=width).contains(&coordinate),
            "coordinate {coordinate} out of range 1..={width}"
        );
        zero.with_packed(1u64 << (width - coordinate))
    }

    /// Rebuild a word of this width from a packed value.
    pub fn with_packed(self, bits: u64) -> Self {
        debug_assert!(bits >> self.width == 0, "packed value exceeds width");
        BitWord {
            width: self.width,
            bits,
        }
    }

    /// Word of width `width` whose packed value is `bits`.
    pub fn from_packed(width: usize, bits: u64) -> Self {
        BitWord::zero(width).with_packed(bits)
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    /// Packed value; doubles as the row index of truth tables.
    pub fn index(self) -> u64 {
        self.bits
    }

    /// Number of 1s in the word.
    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Value at coordinate `i` (1-based, coordinate 1 leftmost).
    pub fn bit(self, coordinate: usize) -> bool {
        assert!(
            (1..=self.width()).contains(&coordinate),
            "coordinate {coordinate} out of range 1..={}",
            self.width
        );
        (self.bits >> (self.width() - coordinate)) & 1 == 1
    }

    /// Copy of the word with coordinate `i` forced to `value`.
    pub fn with_bit(self, coordinate: usize, value: bool) -> Self {
        assert!((1..=self.width()).contains(&coordinate));
        let mask = 1u64 << (self.width() - coordinate);
        self.with_packed(if value {
            self.bits | mask
        } else {
            self.bits & !mask
        })
    }

    /// Coordinatewise maximum. Panics on width mismatch.
    pub fn join(self, other: BitWord) -> BitWord {
        assert_eq!(self.width, other.width, "join of words of unequal widths");
        self.with_packed(self.bits | other.bits)
    }

    /// Coordinatewise minimum. Panics on width mismatch.
    pub fn meet(self, other: BitWord) -> BitWord {
        assert_eq!(self.width, other.width, "meet of words of unequal widths");
        self.with_packed(self.bits & other.bits)
    }

    /// Pointwise order: every 1 of `self` is a 1 of `other`.
    pub fn leq(self, other: BitWord) -> bool {
        assert_eq!(self.width, other.width, "comparing words of unequal widths");
        self.bits & !other.bits == 0
    }

    /// 1-based coordinates carrying a 1, ascending.
    pub fn support(self) -> impl Iterator<Item = usize> {
        let width = self.width();
        let bits = self.bits;
        (1..=width).filter(move |i| (bits >> (width - i)) & 1 == 1)
    }

    /// All words obtained by flipping exactly one 0 to 1, ascending packed value.
    pub fn successors(self) -> impl Iterator<Item = BitWord> {
        let free = !self.bits & ((1u64 << self.width) - 1);
        let base = self;
        (0..self.width())
            .filter(move |pos| free >> pos & 1 == 1)
            .map(move |pos| base.with_packed(base.bits | (1 << pos)))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.width() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > MAX_WIDTH {
            return Err(Error::InvalidWord(s.to_owned()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidWord(s.to_owned())),
                };
        }
        Ok(BitWord::from_packed(s.len(), bits))
    }
}

/// All words of width `n` and weight `w`, in ascending packed value.
///
/// The stream contains exactly `C(n, w)` words. Successive same-weight values
/// are produced with Gosper's hack.
pub fn combinations(n: usize, w: usize) -> Result<Combinations> {
    if !(1..=MAX_WIDTH).contains(&n) {
        return Err(Error::InvalidWidth(n));
    }
    if w > n {
        return Err(Error::WeightOutOfRange { weight: w, width: n });
    }
    Ok(Combinations {
        width: n,
        next: Some(if w == 0 { 0 } else { (1u64 << w) - 1 }),
    })
}

/// Iterator returned by [`combinations`].
#[derive(Debug, Clone)]
pub struct Combinations {
    width: usize,
    next: Option<u64>,
}

impl Iterator for Combinations {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            let shifted = (current ^ ripple) >> (low.trailing_zeros() + 2);
            let candidate = ripple | shifted;
            (candidate >> self.width == 0).then_some(candidate)
        };
        Some(BitWord::from_packed(self.width, current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn weight_counts_ones() {
        assert_eq!(w("0110").weight(), 2);
        assert_eq!(w("0000").weight(), 0);
        assert_eq!(w("111011").weight(), 5);
    }

    #[test]
    fn join_is_pointwise_or() {
        assert_eq!(w("0110").join(w("0011")), w("0111"));
        assert_eq!(w("0110").join(w("0000")), w("0110"));
        assert_eq!(w("0110").join(w("0110")), w("0110"));
    }

    #[test]
    fn meet_is_pointwise_and() {
        assert_eq!(w("0110").meet(w("0011")), w("0010"));
        assert_eq!(w("0110").meet(w("1111")), w("0110"));
        assert_eq!(w("0110").meet(w("0000")), w("0000"));
    }

    #[test]
    fn leq_is_pointwise() {
        assert!(w("0100").leq(w("0110")));
        assert!(!w("0110").leq(w("0100")));
        assert!(w("0110").leq(w("0110")));
    }

    #[test]
    #[should_panic(expected = "unequal widths")]
    fn join_rejects_width_mismatch() {
        let _ = w("01").join(w("011"));
    }

    #[test]
    fn rendering_puts_coordinate_one_leftmost() {
        let u = BitWord::unit(6, 2).join(BitWord::unit(6, 3)).join(BitWord::unit(6, 4)).join(BitWord::unit(6, 6));
        assert_eq!(u.to_string(), "011101");
        assert!(u.bit(2) && !u.bit(1) && u.bit(6));
        assert_eq!(u, w("011101"));
    }

    #[test]
    fn combinations_4_2_golden_order() {
        let words: Vec<String> = combinations(4, 2).unwrap().map(|u| u.to_string()).collect();
        assert_eq!(words, ["0011", "0101", "0110", "1001", "1010", "1100"]);
    }

    #[test]
    fn combinations_degenerate_weights() {
        let zero: Vec<BitWord> = combinations(5, 0).unwrap().collect();
        assert_eq!(zero, vec![BitWord::zero(5)]);
        let full: Vec<BitWord> = combinations(3, 3).unwrap().collect();
        assert_eq!(full, vec![w("111")]);
        assert!(matches!(
            combinations(3, 4),
            Err(Error::WeightOutOfRange { .. })
        ));
    }

    #[test]
    fn combinations_exhaustive_counts() {
        fn binomial(n: usize, k: usize) -> u64 {
            (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
        }
        for n in 1..=16 {
            for k in 0..=n {
                let mut seen = std::collections::BTreeSet::new();
                for u in combinations(n, k).unwrap() {
                    assert_eq!(u.weight(), k);
                    assert!(seen.insert(u.index()), "duplicate {u} for ({n},{k})");
                }
                assert_eq!(seen.len() as u64, binomial(n, k), "count for ({n},{k})");
            }
        }
    }

    #[test]
    fn successors_flip_one_zero() {
        let got: Vec<String> = w("00").successors().map(|u| u.to_string()).collect();
        assert_eq!(got, ["01", "10"]);
        assert_eq!(w("11").successors().count(), 0);
        let got: Vec<String> = w("010").successors().map(|u| u.to_string()).collect();
        assert_eq!(got, ["011", "110"]);
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(matches!("".parse::<BitWord>(), Err(Error::InvalidWord(_))));
        assert!(matches!("0121".parse::<BitWord>(), Err(Error::InvalidWord(_))));
        assert!("0".repeat(MAX_WIDTH + 1).parse::<BitWord>().is_err());
    }

    fn arb_word(width: usize) -> impl Strategy<Value = BitWord> {
        (0..(1u64 << width)).prop_map(move |bits| BitWord::from_packed(width, bits))
    }

    proptest! {
        #[test]
        fn leq_is_a_partial_order(
            a in arb_word(9), b in arb_word(9), c in arb_word(9)
        ) {
            prop_assert!(a.leq(a));
            if a.leq(b) && b.leq(a) {
                prop_assert_eq!(a, b);
            }
            if a.leq(b) && b.leq(c) {
                prop_assert!(a.leq(c));
            }
        }

        #[test]
        fn weight_is_subadditive_and_monotone(a in arb_word(11), b in arb_word(11)) {
            prop_assert!(a.join(b).weight() <= a.weight() + b.weight());
            if a.leq(b) {
                prop_assert!(a.weight() <= b.weight());
            }
        }

        #[test]
        fn successor_count_and_weights(a in arb_word(10)) {
            let successors: Vec<BitWord> = a.successors().collect();
            prop_assert_eq!(successors.len(), a.width() - a.weight());
            for s in successors {
                prop_assert_eq!(s.weight(), a.weight() + 1);
                prop_assert!(a.leq(s));
            }
        }

        #[test]
        fn display_round_trips(a in arb_word(12)) {
            prop_assert_eq!(a.to_string().parse::<BitWord>().unwrap(), a);
        }
    }
}
