use std::cmp::Ordering;
use std::fmt;

/// Labels are positive integers.
pub type Label = u32;

/// A finite set of positive labels stored as a bitset. Trailing zero words
/// are never stored, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LabelSet {
    words: Vec<u64>,
}

impl LabelSet {
    pub fn new() -> Self {
        LabelSet { words: Vec::new() }
    }

    pub fn singleton(l: Label) -> Self {
        let mut s = LabelSet::new();
        s.insert(l);
        s
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: Label, hi: Label) -> Self {
        (lo..=hi).collect()
    }

    #[inline]
    fn slot(l: Label) -> (usize, u64) {
        assert!(l >= 1, "labels are positive");
        let i = (l - 1) as usize;
        (i / 64, 1u64 << (i % 64))
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, l: Label) -> bool {
        let (w, bit) = Self::slot(l);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn remove(&mut self, l: Label) -> bool {
        let (w, bit) = Self::slot(l);
        if w >= self.words.len() || self.words[w] & bit == 0 {
            return false;
        }
        self.words[w] &= !bit;
        self.trim();
        true
    }

    #[inline]
    pub fn contains(&self, l: Label) -> bool {
        if l == 0 {
            return false;
        }
        let (w, bit) = Self::slot(l);
        w < self.words.len() && self.words[w] & bit != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Labels in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(i as Label * 64 + b + 1)
            })
        })
    }

    pub fn max_label(&self) -> Option<Label> {
        let last = *self.words.last()?;
        Some((self.words.len() as Label - 1) * 64 + (63 - last.leading_zeros()) + 1)
    }

    pub fn union_with(&mut self, other: &LabelSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &LabelSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &LabelSet) -> LabelSet {
        let mut s = LabelSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &LabelSet) -> LabelSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn intersects(&self, other: &LabelSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &LabelSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(&self, other: &LabelSet) -> bool {
        self.is_subset(other) && self != other
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        let mut s = LabelSet::new();
        for l in iter {
            s.insert(l);
        }
        s
    }
}

impl<const N: usize> From<[Label; N]> for LabelSet {
    fn from(arr: [Label; N]) -> Self {
        arr.into_iter().collect()
    }
}

/// Lexicographic order of the increasing label sequences.
impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space separated labels.
impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}
