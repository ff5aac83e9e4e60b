//! Deciding `X ⊑ Y` (section inclusion) and its certificates.
//!
//! The fast route works entirely on the boolean lattice: seed a sparse map
//! with `chi_Y(a) -> join of chi_X(a)` over the ground set, then complete it
//! to the least monotone cover by sweeping the weight levels of `B^n`. The
//! order holds exactly when the cover stays contractive, i.e. never exceeds
//! the weight of its argument. [`naive_check`] is the independent oracle:
//! enumerate the sections of `X` and match each one against `Y`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::bitword::{combinations, BitWord};
use crate::boolfn::BooleanFunction;
use crate::family::{component_order, SetFamily};
use crate::perm::Permutation;
use crate::{Error, Limits, Result};

/// Sparse seed of the least monotone cover of `chi_Y -> chi_X`.
///
/// Keys are the distinct values of `chi_Y`; each maps to the join of
/// `chi_X(a)` over the elements `a` sharing that key. Missing keys read as
/// the bottom word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMap {
    width: usize,
    entries: HashMap<u64, u64>,
}

impl CoverMap {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value at `u`, defaulting to the bottom word.
    pub fn get(&self, u: BitWord) -> BitWord {
        assert_eq!(u.width(), self.width, "cover map width mismatch");
        u.with_packed(self.entries.get(&u.index()).copied().unwrap_or(0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (BitWord, BitWord)> + '_ {
        let width = self.width;
        self.entries
            .iter()
            .map(move |(&k, &v)| (BitWord::from_packed(width, k), BitWord::from_packed(width, v)))
    }
}

fn check_compatible(x: &SetFamily, y: &SetFamily) -> Result<()> {
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: y.arity(),
        });
    }
    if x.ground().labels() != y.ground().labels() {
        return Err(Error::GroundMismatch);
    }
    Ok(())
}

/// Seed the least monotone cover: for each ground element `a`, the entry at
/// `chi_Y(a)` accumulates `chi_X(a)` by join.
pub fn least_cover_map(x: &SetFamily, y: &SetFamily) -> Result<CoverMap> {
    check_compatible(x, y)?;
    x.require_nonempty()?;
    y.require_nonempty()?;
    let mut entries: HashMap<u64, u64> = HashMap::new();
    for a in 0..x.ground().len() {
        let key = y.chi_index(a).index();
        let value = x.chi_index(a).index();
        *entries.entry(key).or_insert(0) |= value;
    }
    Ok(CoverMap {
        width: x.arity(),
        entries,
    })
}

/// Outcome of the weight-level sweep: the completed cover table, or the
/// first word whose cover exceeded its weight.
fn sweep_cover(x: &SetFamily, y: &SetFamily, limits: &Limits) -> Result<std::result::Result<Vec<u64>, BitWord>> {
    let n = x.arity();
    if n > limits.sweep_width {
        return Err(Error::SweepWidthExceeded {
            width: n,
            cap: limits.sweep_width,
        });
    }
    let seed = least_cover_map(x, y)?;
    let mut table = vec![0u64; 1usize << n];
    for (key, value) in &seed.entries {
        table[*key as usize] = *value;
    }
    // Level w reads finished level w-1 entries in place, exactly the sparse
    // map update of the decision procedure.
    for w in 0..=n {
        for u in combinations(n, w).expect("valid width and weight") {
            let packed = u.index();
            let mut value = table[packed as usize];
            let mut rest = packed;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                value |= table[(packed & !low) as usize];
                rest ^= low;
            }
            table[packed as usize] = value;
            if value.count_ones() as usize > w {
                return Ok(Err(u));
            }
        }
    }
    Ok(Ok(table))
}

/// Decide `X ⊑ Y` through the least monotone cover.
///
/// Returns true exactly when the cover `f` satisfies `|f(u)| <= |u|` for
/// every `u`; the sweep aborts on the first violation.
pub fn fast_check(x: &SetFamily, y: &SetFamily, limits: &Limits) -> Result<bool> {
    Ok(sweep_cover(x, y, limits)?.is_ok())
}

/// Decide `X ⊑ Y` by brute force: every enumerated section of `X` must
/// match against `Y`.
pub fn naive_check(x: &SetFamily, y: &SetFamily, limits: &Limits) -> Result<bool> {
    check_compatible(x, y)?;
    y.require_nonempty()?;
    for section in x.enumerate_sections(limits)? {
        if !y.is_section(&section)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Certificate for `X ⊑ Y`: the least monotone cover as a full truth table.
///
/// When the order holds the returned function is increasing, contractive,
/// and satisfies `X ⊆ lift(f, Y)` pointwise; otherwise `None`.
pub fn witness(x: &SetFamily, y: &SetFamily, limits: &Limits) -> Result<Option<BooleanFunction>> {
    match sweep_cover(x, y, limits)? {
        Ok(table) => {
            let n = x.arity();
            let outputs = table
                .into_iter()
                .map(|bits| BitWord::from_packed(n, bits))
                .collect();
            Ok(Some(BooleanFunction::from_table(n, outputs)?))
        }
        Err(_) => Ok(None),
    }
}

/// Replay a boolean function as a set operator: element `a` lands in
/// component `i` of the result exactly when `f(chi_Y(a))` has bit `i` set.
///
/// The result may have empty components; it is then rejected by section and
/// order queries but remains a valid value.
pub fn lift(f: &BooleanFunction, y: &SetFamily) -> Result<SetFamily> {
    if f.width() != y.arity() {
        return Err(Error::WidthMismatch {
            left: f.width(),
            right: y.arity(),
        });
    }
    let n = y.arity();
    let mut components = vec![BTreeSet::new(); n];
    for a in 0..y.ground().len() {
        let image = f.evaluate(y.chi_index(a));
        for i in image.support() {
            components[i - 1].insert(a);
        }
    }
    SetFamily::new(Arc::clone(y.ground()), components)
}

/// Search for a component permutation carrying `X` to `Y`.
///
/// Matching equal components greedily with multiplicity succeeds exactly
/// when the canonical forms agree, which by the equivalence characterization
/// is exactly `Sec X = Sec Y`.
pub fn equiv_check(x: &SetFamily, y: &SetFamily) -> Result<Option<Permutation>> {
    check_compatible(x, y)?;
    let n = x.arity();
    let mut taken = vec![false; n];
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let position = (0..n).find(|&j| !taken[j] && x.component(i) == y.component(j));
        match position {
            Some(j) => {
                taken[j] = true;
                images.push(j + 1);
            }
            None => return Ok(None),
        }
    }
    let sigma = Permutation::from_images(&images).expect("distinct images by construction");
    debug_assert_eq!(&x.permuted(&sigma), y);
    Ok(Some(sigma))
}

/// Multisets of components compared for [`equiv_check`]-style equality.
pub fn same_canonical_form(x: &SetFamily, y: &SetFamily) -> bool {
    let mut a = x.components().to_vec();
    let mut b = y.components().to_vec();
    a.sort_by(component_order);
    b.sort_by(component_order);
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GroundSet;

    fn family(ground: &[&str], components: &[&[&str]]) -> SetFamily {
        let g = GroundSet::new(ground.iter().copied()).unwrap();
        SetFamily::from_labels(g, components.iter().map(|c| c.iter().copied())).unwrap()
    }

    /// The two-component pair whose sections witness a strict order.
    fn worked_pair() -> (SetFamily, SetFamily) {
        (
            family(&["1", "2", "3"], &[&["3"], &["1", "2", "3"]]),
            family(&["1", "2", "3"], &[&["2", "3"], &["1", "3"]]),
        )
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn least_cover_map_golden() {
        let (x, y) = worked_pair();
        let cover = least_cover_map(&x, &y).unwrap();
        assert_eq!(cover.len(), 3);
        let mut rows: Vec<(String, String)> = cover
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        rows.sort();
        assert_eq!(
            rows,
            [
                ("01".into(), "01".into()),
                ("10".into(), "01".into()),
                ("11".into(), "11".into())
            ]
        );
        // missing key reads as bottom
        assert_eq!(cover.get("00".parse().unwrap()).to_string(), "00");
    }

    #[test]
    fn least_cover_map_of_family_with_itself_sits_below_keys() {
        let (x, _) = worked_pair();
        let cover = least_cover_map(&x, &x).unwrap();
        for (key, value) in cover.iter() {
            assert!(value.leq(key));
        }
    }

    #[test]
    fn least_cover_map_seeds_bottom_key_for_unused_elements() {
        // "1" lies in no component of y, but in a component of x.
        let x = family(&["1", "2"], &[&["1", "2"]]);
        let y = family(&["1", "2"], &[&["2"]]);
        let cover = least_cover_map(&x, &y).unwrap();
        let bottom_value = cover.get("0".parse().unwrap());
        assert!(!bottom_value.is_zero());
        assert!(!fast_check(&x, &y, &limits()).unwrap());
    }

    #[test]
    fn fast_check_worked_example_and_reflexivity() {
        let (x, y) = worked_pair();
        assert!(fast_check(&x, &y, &limits()).unwrap());
        assert!(!fast_check(&y, &x, &limits()).unwrap());
        assert!(fast_check(&x, &x, &limits()).unwrap());
        assert!(fast_check(&y, &y, &limits()).unwrap());
    }

    #[test]
    fn naive_check_agrees_on_worked_example() {
        let (x, y) = worked_pair();
        assert!(naive_check(&x, &y, &limits()).unwrap());
        assert!(!naive_check(&y, &x, &limits()).unwrap());
        assert!(naive_check(&x, &x, &limits()).unwrap());
    }

    #[test]
    fn fast_check_input_validation() {
        let (x, y) = worked_pair();
        let other_ground = family(&["1", "2"], &[&["1"], &["2"]]);
        assert!(matches!(
            fast_check(&x, &other_ground, &limits()),
            Err(Error::GroundMismatch)
        ));
        let unary = family(&["1", "2", "3"], &[&["1"]]);
        assert!(matches!(
            fast_check(&x, &unary, &limits()),
            Err(Error::ArityMismatch { .. })
        ));
        let g = GroundSet::new(["1"]).unwrap();
        let empty = SetFamily::new(g, vec![BTreeSet::from([0]), BTreeSet::new()]).unwrap();
        let mate = family(&["1"], &[&["1"], &["1"]]);
        assert!(matches!(
            fast_check(&empty, &mate, &limits()),
            Err(Error::EmptyComponent { index: 2 })
        ));
        let narrow = Limits {
            sweep_width: 1,
            ..Limits::default()
        };
        assert!(matches!(
            fast_check(&x, &y, &narrow),
            Err(Error::SweepWidthExceeded { width: 2, cap: 1 })
        ));
    }

    #[test]
    fn witness_worked_example_table() {
        let (x, y) = worked_pair();
        let f = witness(&x, &y, &limits()).unwrap().expect("order holds");
        let rows: Vec<String> = (0..4)
            .map(|v| f.evaluate(BitWord::from_packed(2, v)).to_string())
            .collect();
        assert_eq!(rows, ["00", "01", "01", "11"]);
        assert!(witness(&y, &x, &limits()).unwrap().is_none());
    }

    #[test]
    fn witness_of_reflexive_pair_sits_below_identity() {
        let (x, _) = worked_pair();
        let f = witness(&x, &x, &limits()).unwrap().unwrap();
        for v in 0..4u64 {
            let u = BitWord::from_packed(2, v);
            assert!(f.evaluate(u).leq(u));
        }
    }

    #[test]
    fn lift_identity_and_constant() {
        let (_, y) = worked_pair();
        let id = BooleanFunction::identity(2);
        assert_eq!(lift(&id, &y).unwrap(), y);

        let bottom = BooleanFunction::constant(BitWord::zero(2));
        let lifted = lift(&bottom, &y).unwrap();
        assert!(lifted.components().iter().all(|c| c.is_empty()));
        assert!(!lifted.all_nonempty());

        let wide = BooleanFunction::identity(3);
        assert!(matches!(
            lift(&wide, &y),
            Err(Error::WidthMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn lift_and_or_cell_is_intersection_union() {
        let y = family(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let cell = crate::boolfn::and_or_cell(2, 1, 2).unwrap();
        let lifted = lift(&cell, &y).unwrap();
        let inter: BTreeSet<usize> = y.component(0) & y.component(1);
        let union: BTreeSet<usize> = y.component(0) | y.component(1);
        assert_eq!(lifted.component(0), &inter);
        assert_eq!(lifted.component(1), &union);
        assert!(fast_check(&lifted, &y, &limits()).unwrap());
    }

    #[test]
    fn equiv_check_finds_swap_and_rejects_worked_pair() {
        let a = family(&["1", "2"], &[&["1"], &["2"]]);
        let b = family(&["1", "2"], &[&["2"], &["1"]]);
        let sigma = equiv_check(&a, &b).unwrap().expect("swapped components");
        assert_eq!(sigma.images(), vec![2, 1]);
        assert_eq!(a.permuted(&sigma), b);

        let id = equiv_check(&a, &a).unwrap().unwrap();
        assert_eq!(a.permuted(&id), a);

        let (x, y) = worked_pair();
        assert!(equiv_check(&x, &y).unwrap().is_none());
        assert!(!same_canonical_form(&x, &y));
    }

    #[test]
    fn equiv_check_handles_repeated_components() {
        let a = family(&["1", "2"], &[&["1"], &["1"], &["2"]]);
        let b = family(&["1", "2"], &[&["1"], &["2"], &["1"]]);
        let sigma = equiv_check(&a, &b).unwrap().unwrap();
        assert_eq!(a.permuted(&sigma), b);
    }
}
