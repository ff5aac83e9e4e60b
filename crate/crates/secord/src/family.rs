//! Ground sets, tuples of subsets, and their unordered sections.
//!
//! A [`SetFamily`] is an n-tuple of subsets of a shared [`GroundSet`]. Its
//! *sections* are the multisets `[a_1, ..., a_n]` obtainable by drawing one
//! element per component in some order; [`Section`] stores the sorted tuple
//! as the canonical orbit representative. Membership is decided by maximum
//! bipartite matching, enumeration by a capped product walk, and [`divide`]
//! undoes one component in the sense of the section "product".

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::bitword::BitWord;
use crate::perm::Permutation;
use crate::{Error, Limits, Result, MAX_WIDTH};

/// Largest width accepted by [`canonical_family`]; the ground set has
/// `2^n - 1` elements, so this keeps construction enumeration-safe.
pub const CANONICAL_FAMILY_MAX_WIDTH: usize = 16;

/// An ordered finite set of distinct labels.
///
/// Labels are opaque strings externally; everything internal speaks dense
/// indices `0..len`.
#[derive(Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(GroundSet { labels, index }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty ground sets
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// A canonical unordered section: the sorted tuple of element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Section(Vec<usize>);

impl Section {
    /// Canonicalize an arbitrary draw by sorting it.
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        Section(elements)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    /// The section extended by one element, re-canonicalized.
    pub fn extended(&self, element: usize) -> Section {
        let mut elements = self.0.clone();
        elements.push(element);
        Section::new(elements)
    }

    /// Render as `[a,b,c]` using the ground set's labels.
    pub fn display<'a>(&'a self, ground: &'a GroundSet) -> SectionDisplay<'a> {
        SectionDisplay {
            section: self,
            ground,
        }
    }
}

pub struct SectionDisplay<'a> {
    section: &'a Section,
    ground: &'a GroundSet,
}

impl fmt::Display for SectionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, &e) in self.section.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.ground.label(e))?;
        }
        write!(f, "]")
    }
}

/// An n-tuple of subsets of a ground set.
///
/// Families with empty components are constructible (they arise as outputs
/// of lifted boolean functions) but every section or order query requires
/// all components nonempty and fails with [`Error::EmptyComponent`] otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground: Arc<GroundSet>,
    components: Vec<BTreeSet<usize>>,
    all_nonempty: bool,
}

impl SetFamily {
    pub fn new(ground: Arc<GroundSet>, components: Vec<BTreeSet<usize>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::NoComponents);
        }
        if components.len() > MAX_WIDTH {
            return Err(Error::InvalidWidth(components.len()));
        }
        for component in &components {
            if let Some(&out) = component.iter().find(|&&e| e >= ground.len()) {
                return Err(Error::UnknownLabel(format!("#{out}")));
            }
        }
        let all_nonempty = components.iter().all(|c| !c.is_empty());
        Ok(SetFamily {
            ground,
            components,
            all_nonempty,
        })
    }

    /// Convenience constructor from label lists.
    pub fn from_labels<I, J, S>(ground: Arc<GroundSet>, components: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut indexed = Vec::new();
        for component in components {
            let mut set = BTreeSet::new();
            for label in component {
                let label = label.as_ref();
                let index = ground
                    .index_of(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_owned()))?;
                set.insert(index);
            }
            indexed.push(set);
        }
        SetFamily::new(ground, indexed)
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn component(&self, i: usize) -> &BTreeSet<usize> {
        &self.components[i]
    }

    pub fn components(&self) -> &[BTreeSet<usize>] {
        &self.components
    }

    pub fn all_nonempty(&self) -> bool {
        self.all_nonempty
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        match self.components.iter().position(|c| c.is_empty()) {
            None => Ok(()),
            Some(index) => Err(Error::EmptyComponent { index: index + 1 }),
        }
    }

    /// Characteristic word of element index `a`: bit `i` is set iff the
    /// element belongs to component `i`.
    pub fn chi_index(&self, a: usize) -> BitWord {
        debug_assert!(a < self.ground.len());
        let mut out = BitWord::zero(self.arity());
        for (i, component) in self.components.iter().enumerate() {
            if component.contains(&a) {
                out = out.with_bit(i + 1, true);
            }
        }
        out
    }

    /// Characteristic word of a labelled element.
    pub fn chi(&self, label: &str) -> Result<BitWord> {
        let a = self
            .ground
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))?;
        Ok(self.chi_index(a))
    }

    /// Product of the component cardinalities, saturating at `u128::MAX`.
    pub fn product_size(&self) -> u128 {
        self.components
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    /// Every section of the family, canonicalized and deduplicated.
    ///
    /// Walks the full cartesian product, so the component product must stay
    /// within `limits.product_cap`.
    pub fn enumerate_sections(&self, limits: &Limits) -> Result<BTreeSet<Section>> {
        self.require_nonempty()?;
        let product = self.product_size();
        if product > limits.product_cap as u128 {
            return Err(Error::ProductCapExceeded {
                product,
                cap: limits.product_cap,
            });
        }
        let pools: Vec<Vec<usize>> = self
            .components
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        let mut sections = BTreeSet::new();
        let mut odometer = vec![0usize; pools.len()];
        'outer: loop {
            let draw: Vec<usize> = odometer.iter().zip(&pools).map(|(&k, p)| p[k]).collect();
            sections.insert(Section::new(draw));
            for pos in (0..odometer.len()).rev() {
                odometer[pos] += 1;
                if odometer[pos] < pools[pos].len() {
                    continue 'outer;
                }
                odometer[pos] = 0;
            }
            break;
        }
        Ok(sections)
    }

    /// Does the multiset `s` match this family?
    ///
    /// Decided by maximum bipartite matching on the graph joining tuple
    /// position `i` to component `j` when `s_i` belongs to component `j`;
    /// the section is valid exactly when a perfect matching exists.
    pub fn is_section(&self, s: &Section) -> Result<bool> {
        self.require_nonempty()?;
        if s.arity() != self.arity() {
            return Err(Error::SectionArityMismatch {
                section: s.arity(),
                family: self.arity(),
            });
        }
        let n = self.arity();
        // matched_with[j] = tuple position currently assigned to component j
        let mut matched_with: Vec<Option<usize>> = vec![None; n];
        for position in 0..n {
            let mut visited = vec![false; n];
            if !self.augment(s, position, &mut visited, &mut matched_with) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn augment(
        &self,
        s: &Section,
        position: usize,
        visited: &mut [bool],
        matched_with: &mut [Option<usize>],
    ) -> bool {
        let element = s.elements()[position];
        for j in 0..self.arity() {
            if visited[j] || !self.components[j].contains(&element) {
                continue;
            }
            visited[j] = true;
            let free = match matched_with[j] {
                None => true,
                Some(other) => self.augment(s, other, visited, matched_with),
            };
            if free {
                matched_with[j] = Some(position);
                return true;
            }
        }
        false
    }

    /// Components sorted by cardinality then contents.
    ///
    /// Two families have equal canonical forms exactly when one is a
    /// coordinate permutation of the other.
    pub fn canonical_components(&self) -> Vec<BTreeSet<usize>> {
        let mut sorted = self.components.clone();
        sorted.sort_by(component_order);
        sorted
    }

    /// The family with components rearranged by `sigma` (component `i` moves
    /// to position `sigma(i)`).
    pub fn permuted(&self, sigma: &Permutation) -> SetFamily {
        SetFamily {
            ground: self.ground.clone(),
            components: sigma.apply_to_tuple(&self.components),
            all_nonempty: self.all_nonempty,
        }
    }
}

pub(crate) fn component_order(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Division of a collection of sections by a nonempty subset `Z`:
/// the arity-(n-1) sections whose every `Z`-extension lies in `sections`.
pub fn divide(sections: &BTreeSet<Section>, z: &BTreeSet<usize>) -> Result<BTreeSet<Section>> {
    if z.is_empty() {
        return Err(Error::EmptyDivisor);
    }
    let Some(first) = sections.iter().next() else {
        return Ok(BTreeSet::new());
    };
    let arity = first.arity();
    if arity < 2 {
        return Err(Error::DivisionArityTooSmall(arity));
    }
    if let Some(bad) = sections.iter().find(|s| s.arity() != arity) {
        return Err(Error::MixedArities(arity, bad.arity()));
    }
    // Every admissible remainder arises by deleting one entry of some member,
    // so candidates beyond those cannot pass the for-all test.
    let mut candidates = BTreeSet::new();
    for section in sections {
        for drop in 0..arity {
            let mut rest = section.elements().to_vec();
            rest.remove(drop);
            candidates.insert(Section(rest));
        }
    }
    Ok(candidates
        .into_iter()
        .filter(|rest| z.iter().all(|&a| sections.contains(&rest.extended(a))))
        .collect())
}

/// The width-`n` family over the `2^n - 1` nonzero words whose
/// characteristic map is the identity: element `u` belongs to component `i`
/// exactly when coordinate `i` of `u` is set.
pub fn canonical_family(n: usize) -> Result<SetFamily> {
    if n == 0 || n > CANONICAL_FAMILY_MAX_WIDTH {
        return Err(Error::CanonicalFamilyWidth(n));
    }
    let words: Vec<BitWord> = (1..(1u64 << n)).map(|bits| BitWord::from_packed(n, bits)).collect();
    let ground = GroundSet::new(words.iter().map(|u| u.to_string()))?;
    let components = (1..=n)
        .map(|i| {
            words
                .iter()
                .enumerate()
                .filter(|(_, u)| u.bit(i))
                .map(|(idx, _)| idx)
                .collect()
        })
        .collect();
    SetFamily::new(ground, components)
}
