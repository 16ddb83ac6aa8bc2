//! Words in a finitely generated free group and GF(2) group-ring sums.
//!
//! Letters are `(generator index, inverted)` pairs. Group-ring elements
//! keep their words freely reduced, so mod-2 cancellation of equal group
//! elements happens on insertion.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

/// Freely reducible word; not tied to any presentation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct GroupWord(Vec<(usize, bool)>);

impl GroupWord {
    #[must_use]
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    #[must_use]
    pub fn generator(g: usize) -> Self {
        GroupWord(alloc::vec![(g, false)])
    }

    pub fn from_letters(letters: &[(usize, bool)]) -> Self {
        GroupWord(letters.to_vec())
    }

    #[must_use]
    pub fn letters(&self) -> &[(usize, bool)] {
        &self.0
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: usize, inverted: bool) {
        self.0.push((g, inverted));
    }

    #[must_use]
    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        w.0.extend_from_slice(&other.0);
        w
    }

    #[must_use]
    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|&(g, i)| (g, !i)).collect())
    }

    /// Prefix of the first `k` letters.
    #[must_use]
    pub fn prefix(&self, k: usize) -> GroupWord {
        GroupWord(self.0[..k].to_vec())
    }

    /// Cancels adjacent inverse pairs until none remain.
    #[must_use]
    pub fn free_reduce(&self) -> GroupWord {
        let mut out: Vec<(usize, bool)> = Vec::with_capacity(self.0.len());
        for &(g, i) in &self.0 {
            if out.last() == Some(&(g, !i)) {
                out.pop();
            } else {
                out.push((g, i));
            }
        }
        GroupWord(out)
    }

    /// Largest generator index mentioned, if any.
    #[must_use]
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    /// Renders with the given generator names, `^-1` marking inverses.
    #[must_use]
    pub fn render(&self, names: &[&str]) -> String {
        if self.0.is_empty() {
            return String::from("1");
        }
        let mut s = String::new();
        for (k, &(g, inv)) in self.0.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}{}", names[g], if inv { "^-1" } else { "" });
        }
        s
    }
}

/// GF(2) sum of group elements; words are stored freely reduced.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRing(BTreeSet<GroupWord>);

impl GroupRing {
    #[must_use]
    pub fn zero() -> Self {
        GroupRing(BTreeSet::new())
    }

    #[must_use]
    pub fn one() -> Self {
        let mut r = GroupRing::zero();
        r.toggle(GroupWord::identity());
        r
    }

    pub fn toggle(&mut self, w: GroupWord) {
        let w = w.free_reduce();
        if !self.0.remove(&w) {
            self.0.insert(w);
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &GroupWord> {
        self.0.iter()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_assign(&mut self, other: &GroupRing) {
        for w in &other.0 {
            self.toggle(w.clone());
        }
    }

    /// Left translation by a single word.
    #[must_use]
    pub fn left_mul(&self, w: &GroupWord) -> GroupRing {
        let mut out = GroupRing::zero();
        for t in &self.0 {
            out.toggle(w.concat(t));
        }
        out
    }

    /// Applies `w -> w^-1` to every term.
    #[must_use]
    pub fn invert_terms(&self) -> GroupRing {
        let mut out = GroupRing::zero();
        for t in &self.0 {
            out.toggle(t.inverse());
        }
        out
    }
}

/// Fox derivative with respect to generator `g`, taken mod 2.
///
/// Follows the left product rule `d(uv) = du + u dv` with `d(x)/dx = 1`
/// and `d(x^-1)/dx = x^-1` (signs are invisible mod 2): a positive
/// occurrence at position `i` contributes the prefix before it, an
/// inverted occurrence contributes the prefix through it.
#[must_use]
pub fn fox_derivative(w: &GroupWord, g: usize) -> GroupRing {
    let mut out = GroupRing::zero();
    for (i, &(h, inv)) in w.letters().iter().enumerate() {
        if h != g {
            continue;
        }
        out.toggle(w.prefix(if inv { i + 1 } else { i }));
    }
    out
}
