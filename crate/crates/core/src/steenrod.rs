//! The mod-2 Steenrod algebra: admissible rewriting and the action on
//! polynomial algebras.
//!
//! Monomials are composites `Sq^{i1} ... Sq^{ir}` with positive
//! exponents, admissible when every adjacent pair satisfies
//! `i_k >= 2 i_{k+1}`. [`adem_rewrite`] repeatedly replaces the leftmost
//! inadmissible pair using the Adem relation
//!
//! ```text
//! Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c      (a < 2b)
//! ```
//!
//! with binomials mod 2 decided by the bitwise subset rule. The action on
//! `F2[t1..tk]` (generators in degree 1) combines the Cartan formula with
//! `Sq^i(t^n) = binom(n, i) t^{n+i}` and serves as an independent check
//! that rewriting never changes the operation.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// Lucas: `binom(n, k)` is odd exactly when `k` is a bitwise subset of `n`.
#[inline]
#[must_use]
pub fn binom_odd(n: u64, k: u64) -> bool {
    n & k == k
}

// ===== Monomials and sums =====

/// Composite of Steenrod squares; the empty composite is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    #[must_use]
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(exponents: &[u32]) -> Self {
        assert!(
            exponents.iter().all(|&e| e > 0),
            "Sq^0 is elided, exponents must be positive"
        );
        Monomial(exponents.to_vec())
    }

    #[must_use]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[must_use]
    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= 2 * w[1])
    }

    /// Index of the leftmost inadmissible adjacent pair.
    #[must_use]
    fn first_violation(&self) -> Option<usize> {
        (0..self.0.len().saturating_sub(1)).find(|&k| self.0[k] < 2 * self.0[k + 1])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "Sq^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formal GF(2) sum of monomials; insertion toggles membership.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Sum(pub BTreeSet<Monomial>);

impl Sum {
    #[must_use]
    pub fn zero() -> Self {
        Sum(BTreeSet::new())
    }

    #[must_use]
    pub fn of(monomials: &[&[u32]]) -> Self {
        let mut s = Sum::zero();
        for m in monomials {
            s.toggle(Monomial::new(m));
        }
        s
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn is_admissible(&self) -> bool {
        self.0.iter().all(Monomial::is_admissible)
    }

    /// Degree when homogeneous; `None` for the zero sum or mixed degrees.
    #[must_use]
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.0.iter().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for Sum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Sum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ===== Adem rewriting =====

/// Rewrites into the admissible basis. The leftmost inadmissible pair is
/// replaced first; mod-2 cancellation happens as admissible monomials
/// accumulate. Degree-preserving and idempotent on admissible input.
#[must_use]
pub fn adem_rewrite(sum: &Sum) -> Sum {
    let mut out = Sum::zero();
    let mut work: Vec<Monomial> = sum.0.iter().cloned().collect();
    while let Some(m) = work.pop() {
        let Some(k) = m.first_violation() else {
            out.toggle(m);
            continue;
        };
        let (a, b) = (m.0[k], m.0[k + 1]);
        for c in 0..=a / 2 {
            if !binom_odd(u64::from(b - c - 1), u64::from(a - 2 * c)) {
                continue;
            }
            let mut e = Vec::with_capacity(m.0.len() + 1);
            e.extend_from_slice(&m.0[..k]);
            e.push(a + b - c);
            if c > 0 {
                e.push(c);
            }
            e.extend_from_slice(&m.0[k + 2..]);
            work.push(Monomial(e));
        }
    }
    out
}

/// Remainder of the square-of-a-power relation
/// `Sq^{2^j} Sq^{2^j} + sum_{i=start}^{j-1} Sq^{2^{j+1}-2^i} Sq^{2^i}`
/// after admissible rewriting. Zero means the relation holds; starting
/// the sum at 1 instead of 0 leaves the witness `Sq^{2^{j+1}-1} Sq^1`.
#[must_use]
pub fn kervaire_relation_remainder(j: u32, start: u32) -> Sum {
    assert!(
        (1..=6).contains(&j),
        "j = {j} outside the supported range 1..=6"
    );
    assert!(start <= 1, "start index must be 0 or 1");
    let mut s = Sum::zero();
    let p = 1u32 << j;
    s.toggle(Monomial(vec![p, p]));
    for i in start..j {
        s.toggle(Monomial(vec![2 * p - (1 << i), 1 << i]));
    }
    adem_rewrite(&s)
}

// ===== Action on polynomial algebras =====

/// Element of `F2[t1..tk]`, all generators in degree 1. Terms are
/// exponent vectors; insertion toggles, so arithmetic is mod 2.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyElement {
    vars: usize,
    terms: BTreeSet<Vec<u32>>,
}

impl PolyElement {
    #[must_use]
    pub fn zero(vars: usize) -> Self {
        PolyElement {
            vars,
            terms: BTreeSet::new(),
        }
    }

    /// Single monomial from an exponent vector.
    pub fn monomial(expts: &[u32]) -> Self {
        let mut p = PolyElement::zero(expts.len());
        p.toggle(expts.to_vec());
        p
    }

    /// Product of all generators, one each: `t1 t2 ... tk`.
    #[must_use]
    pub fn top_product(vars: usize) -> Self {
        PolyElement::monomial(&vec![1; vars])
    }

    pub fn toggle(&mut self, term: Vec<u32>) {
        assert_eq!(term.len(), self.vars, "exponent vector arity mismatch");
        if !self.terms.remove(&term) {
            self.terms.insert(term);
        }
    }

    #[must_use]
    pub fn vars(&self) -> usize {
        self.vars
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.iter()
    }

    pub fn add_assign(&mut self, other: &PolyElement) {
        assert_eq!(self.vars, other.vars, "arity mismatch");
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for term in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut printed = false;
            let mut buf = String::new();
            for (v, &e) in term.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed {
                    buf.push(' ');
                }
                printed = true;
                if e == 1 {
                    write!(buf, "t{}", v + 1)?;
                } else {
                    write!(buf, "t{}^{e}", v + 1)?;
                }
            }
            if printed {
                write!(f, "{buf}")?;
            } else {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Sq^n` on a polynomial: Cartan across the variables, binomial rule on
/// each power. Compositions with an even binomial are pruned through the
/// subset test, so only terms that survive mod 2 are walked.
#[must_use]
pub fn sq(n: u32, p: &PolyElement) -> PolyElement {
    let mut out = PolyElement::zero(p.vars);
    for term in &p.terms {
        sq_term(n, term, 0, &mut Vec::with_capacity(term.len()), &mut out);
    }
    out
}

fn sq_term(left: u32, term: &[u32], var: usize, picked: &mut Vec<u32>, out: &mut PolyElement) {
    if var == term.len() {
        if left == 0 {
            out.toggle(picked.clone());
        }
        return;
    }
    // remaining capacity: each variable absorbs at most its exponent
    let capacity: u32 = term[var..].iter().sum();
    if left > capacity {
        return;
    }
    let m = term[var];
    for i in 0..=m.min(left) {
        if !binom_odd(u64::from(m), u64::from(i)) {
            continue;
        }
        picked.push(m + i);
        sq_term(left - i, term, var + 1, picked, out);
        picked.pop();
    }
}

/// A composite `Sq^{i1} ... Sq^{ir}` acting on `p`, rightmost factor
/// first.
#[must_use]
pub fn monomial_action(m: &Monomial, p: &PolyElement) -> PolyElement {
    let mut acc = p.clone();
    for &e in m.0.iter().rev() {
        acc = sq(e, &acc);
    }
    acc
}

/// A formal sum acting on `p`.
#[must_use]
pub fn sum_action(s: &Sum, p: &PolyElement) -> PolyElement {
    let mut acc = PolyElement::zero(p.vars);
    for m in &s.0 {
        acc.add_assign(&monomial_action(m, p));
    }
    acc
}

/// All admissible monomials of the given degree, ascending.
#[must_use]
pub fn admissible_monomials(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    // exponents are chosen right to left: each new leading exponent must
    // be at least twice its successor
    fn rec(remaining: u32, min_lead: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            let mut m: Vec<u32> = prefix.clone();
            m.reverse();
            out.push(Monomial(m));
            return;
        }
        for lead in min_lead..=remaining {
            if remaining - lead > 0 && remaining - lead < 2 * lead {
                continue; // cannot be completed admissibly
            }
            prefix.push(lead);
            rec(remaining - lead, 2 * lead, prefix, out);
            prefix.pop();
        }
    }
    rec(degree, 1, &mut prefix, &mut out);
    out.sort();
    out
}

// ===== Tests =====
