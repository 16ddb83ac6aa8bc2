//! Quadratic refinements of alternating forms over GF(2) and the Arf
//! invariant.
//!
//! A space is a symmetric zero-diagonal Gram matrix plus the values of q
//! on the standard basis; q extends to the whole space through
//! `q(x + y) = q(x) + q(y) + B(x, y)`. Two independent routes to the Arf
//! invariant are provided: summing `q(a)q(b)` over an extracted
//! symplectic basis, and counting zeros of q (majority count means
//! Arf 0). The pair is cross-checked in the test suite and by the
//! verification reports.

use alloc::vec::Vec;
use core::fmt;

use crate::f2::{BitMatrix, BitVec};

#[derive(Clone, PartialEq, Eq)]
pub enum FormError {
    /// Gram matrix not symmetric or with a nonzero diagonal entry.
    BadGram {
        row: usize,
        col: usize,
    },
    /// Basis value vector length disagrees with the Gram dimension.
    SizeMismatch {
        gram: usize,
        q: usize,
    },
    OddDimension(usize),
    /// Nonzero vector pairing to zero with everything.
    Degenerate {
        radical: BitVec,
    },
    /// Exhaustive enumeration refused above this dimension.
    TooLarge {
        dim: usize,
        max: usize,
    },
    /// Zero count fits neither `2^(n-1) + 2^(g-1)` nor `2^(n-1) - 2^(g-1)`.
    CountInconsistent {
        zeros: u64,
        dim: usize,
    },
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::BadGram { row, col } => {
                write!(f, "gram matrix is not alternating at ({row}, {col})")
            }
            FormError::SizeMismatch { gram, q } => {
                write!(f, "gram dimension {gram} but {q} basis values")
            }
            FormError::OddDimension(d) => write!(f, "no symplectic basis in odd dimension {d}"),
            FormError::Degenerate { radical } => {
                write!(f, "degenerate pairing; radical vector {radical}")
            }
            FormError::TooLarge { dim, max } => {
                write!(f, "refusing to enumerate 2^{dim} vectors (limit 2^{max})")
            }
            FormError::CountInconsistent { zeros, dim } => {
                write!(
                    f,
                    "{zeros} zeros in dimension {dim} matches neither Arf count"
                )
            }
        }
    }
}

impl fmt::Debug for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

const ENUM_LIMIT: usize = 24;

/// Alternating inner product with a quadratic refinement.
#[derive(Clone)]
pub struct QuadraticSpace {
    gram: BitMatrix,
    q: BitVec,
}

impl QuadraticSpace {
    pub fn new(gram: BitMatrix, q: BitVec) -> Result<Self, FormError> {
        let n = gram.rows();
        if gram.cols() != n {
            return Err(FormError::SizeMismatch {
                gram: gram.cols(),
                q: n,
            });
        }
        if q.len() != n {
            return Err(FormError::SizeMismatch {
                gram: n,
                q: q.len(),
            });
        }
        for i in 0..n {
            if gram.get(i, i) {
                return Err(FormError::BadGram { row: i, col: i });
            }
            for j in i + 1..n {
                if gram.get(i, j) != gram.get(j, i) {
                    return Err(FormError::BadGram { row: i, col: j });
                }
            }
        }
        Ok(QuadraticSpace { gram, q })
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    #[must_use]
    pub fn gram(&self) -> &BitMatrix {
        &self.gram
    }

    #[must_use]
    pub fn bilinear(&self, u: &BitVec, v: &BitVec) -> bool {
        u.dot(&self.gram.apply(v))
    }

    /// q extended from the basis by the refinement rule.
    #[must_use]
    pub fn q(&self, v: &BitVec) -> bool {
        let mut acc = self.q.dot(v);
        for i in v.ones() {
            for j in self.gram.row(i).ones() {
                if j > i && v.get(j) {
                    acc = !acc;
                }
            }
        }
        acc
    }

    /// Arf invariant through a symplectic basis: the sum of `q(a)q(b)`
    /// over hyperbolic pairs.
    pub fn arf(&self) -> Result<bool, FormError> {
        let pairs = symplectic_basis(&self.gram)?;
        let mut acc = false;
        for (a, b) in &pairs {
            acc ^= self.q(a) & self.q(b);
        }
        Ok(acc)
    }

    /// Number of vectors with q = 0, by full enumeration.
    pub fn zero_count(&self) -> Result<u64, FormError> {
        let n = self.dim();
        if n > ENUM_LIMIT {
            return Err(FormError::TooLarge {
                dim: n,
                max: ENUM_LIMIT,
            });
        }
        let rows: Vec<u32> = (0..n)
            .map(|i| {
                let mut m = 0u32;
                for j in self.gram.row(i).ones() {
                    m |= 1 << j;
                }
                m
            })
            .collect();
        let mut qmask = 0u32;
        for i in self.q.ones() {
            qmask |= 1 << i;
        }
        let mut zeros = 0u64;
        for v in 0u32..1 << n {
            let mut parity = (qmask & v).count_ones();
            let mut rest = v;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                // pairs i < j only: mask away columns up to i
                parity += (rows[i as usize] & v & !((2u32 << i) - 1)).count_ones();
            }
            if parity.is_multiple_of(2) {
                zeros += 1;
            }
        }
        Ok(zeros)
    }

    /// Independent route to the Arf invariant: a quadratic refinement has
    /// `2^(n-1) + 2^(g-1)` zeros when Arf is 0 and `2^(n-1) - 2^(g-1)`
    /// when Arf is 1. Any other count is reported as an inconsistency.
    pub fn arf_count_oracle(&self) -> Result<bool, FormError> {
        let n = self.dim();
        if n % 2 == 1 {
            return Err(FormError::OddDimension(n));
        }
        let zeros = self.zero_count()?;
        let g = n / 2;
        let majority = ((1u64 << n) + (1u64 << g)) / 2;
        let minority = ((1u64 << n) - (1u64 << g)) / 2;
        if zeros == majority {
            Ok(false)
        } else if zeros == minority {
            Ok(true)
        } else {
            Err(FormError::CountInconsistent { zeros, dim: n })
        }
    }
}

/// Splits a nondegenerate alternating Gram matrix into hyperbolic pairs.
///
/// Deterministic: the next pair always takes the lowest-index remaining
/// vector and its lowest-index partner with a nonzero pairing, then
/// corrects the rest to lie in the pair's orthogonal complement. Vectors
/// are returned in the original coordinates.
pub fn symplectic_basis(gram: &BitMatrix) -> Result<Vec<(BitVec, BitVec)>, FormError> {
    let n = gram.rows();
    assert_eq!(gram.cols(), n, "gram must be square");
    if n % 2 == 1 {
        return Err(FormError::OddDimension(n));
    }
    let pair = |u: &BitVec, v: &BitVec| u.dot(&gram.apply(v));
    let mut remaining: Vec<BitVec> = (0..n).map(|i| BitVec::from_indices(n, &[i])).collect();
    let mut pairs = Vec::with_capacity(n / 2);
    while !remaining.is_empty() {
        let u = remaining.remove(0);
        let Some(k) = (0..remaining.len()).find(|&k| pair(&u, &remaining[k])) else {
            return Err(FormError::Degenerate { radical: u });
        };
        let v = remaining.remove(k);
        for w in &mut remaining {
            if pair(w, &v) {
                w.xor_assign(&u);
            }
            if pair(w, &u) {
                w.xor_assign(&v);
            }
        }
        pairs.push((u, v));
    }
    Ok(pairs)
}

/// Checks that `pairs` is symplectic for `gram`: within-pair pairing 1,
/// all other pairings 0. Used by tests and reports.
#[must_use]
pub fn is_symplectic(gram: &BitMatrix, pairs: &[(BitVec, BitVec)]) -> bool {
    let pair = |u: &BitVec, v: &BitVec| u.dot(&gram.apply(v));
    let mut flat = Vec::new();
    for (a, b) in pairs {
        flat.push(a.clone());
        flat.push(b.clone());
    }
    for (i, x) in flat.iter().enumerate() {
        for (j, y) in flat.iter().enumerate() {
            let expect = (i / 2 == j / 2) && i != j;
            if pair(x, y) != expect {
                return false;
            }
        }
    }
    true
}

// ===== Tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn hyperbolic(genus: usize) -> BitMatrix {
        // pairs (2i, 2i+1)
        BitMatrix::from_fn(2 * genus, 2 * genus, |i, j| i / 2 == j / 2 && i != j)
    }

    fn space(gram: BitMatrix, q: &[u8]) -> QuadraticSpace {
        QuadraticSpace::new(gram, BitVec::from_bits(q)).unwrap()
    }

    #[test]
    fn refinement_rule_holds_everywhere() {
        let s = space(hyperbolic(2), &[1, 0, 1, 1]);
        for x in 0u32..16 {
            for y in 0u32..16 {
                let vx = BitVec::from_bits(&[
                    (x & 1) as u8,
                    (x >> 1 & 1) as u8,
                    (x >> 2 & 1) as u8,
                    (x >> 3 & 1) as u8,
                ]);
                let vy = BitVec::from_bits(&[
                    (y & 1) as u8,
                    (y >> 1 & 1) as u8,
                    (y >> 2 & 1) as u8,
                    (y >> 3 & 1) as u8,
                ]);
                let sum = vx.xor(&vy);
                assert_eq!(
                    s.q(&sum),
                    s.q(&vx) ^ s.q(&vy) ^ s.bilinear(&vx, &vy),
                    "refinement rule fails at x={x} y={y}"
                );
            }
        }
    }

    #[test]
    fn arf_of_standard_forms() {
        assert!(!space(hyperbolic(1), &[0, 0]).arf().unwrap());
        assert!(space(hyperbolic(1), &[1, 1]).arf().unwrap());
        // two odd pairs cancel
        assert!(!space(hyperbolic(2), &[1, 1, 1, 1]).arf().unwrap());
        // lone odd pair among trivial ones
        assert!(space(hyperbolic(4), &[0, 0, 0, 0, 0, 0, 1, 1])
            .arf()
            .unwrap());
    }

    #[test]
    fn zero_counts_match_both_classes() {
        // q = x1 x2 + x3 x4 vanishes on 10 of 16 vectors
        assert_eq!(
            space(hyperbolic(2), &[0, 0, 0, 0]).zero_count().unwrap(),
            10
        );
        // odd form in one pair: single zero
        assert_eq!(space(hyperbolic(1), &[1, 1]).zero_count().unwrap(), 1);
    }

    #[test]
    fn oracle_agrees_on_small_standard_forms() {
        for qbits in 0u32..16 {
            let q: Vec<u8> = (0..4).map(|i| (qbits >> i & 1) as u8).collect();
            let s = space(hyperbolic(2), &q);
            assert_eq!(s.arf().unwrap(), s.arf_count_oracle().unwrap(), "q = {q:?}");
        }
    }

    #[test]
    fn disjoint_pair_gram_splits_into_the_three_pairs() {
        let pairs_of_four = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = BitMatrix::from_fn(6, 6, |i, j| {
            let (a, b) = pairs_of_four[i];
            let (c, d) = pairs_of_four[j];
            a != c && a != d && b != c && b != d
        });
        let pairs = symplectic_basis(&g).unwrap();
        assert!(is_symplectic(&g, &pairs));
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|(a, b)| (a.first_one().unwrap(), b.first_one().unwrap()))
            .collect();
        // lowest-index tie-breaking picks the complementary partner each time
        assert_eq!(idx, vec![(0, 5), (1, 4), (2, 3)]);
        for (a, b) in &pairs {
            assert_eq!(a.weight(), 1, "no corrections needed for this gram");
            assert_eq!(b.weight(), 1);
        }
    }

    #[test]
    fn degenerate_gram_names_a_radical_vector() {
        let g = BitMatrix::zero(2, 2);
        match symplectic_basis(&g) {
            Err(FormError::Degenerate { radical }) => {
                assert_eq!(radical, BitVec::from_indices(2, &[0]));
            }
            other => panic!("expected degenerate error, got {other:?}"),
        }
    }

    #[test]
    fn odd_dimension_is_rejected() {
        let g = BitMatrix::zero(3, 3);
        assert!(matches!(
            symplectic_basis(&g),
            Err(FormError::OddDimension(3))
        ));
    }

    #[test]
    fn bad_gram_is_rejected() {
        let mut g = BitMatrix::zero(2, 2);
        g.set(0, 1, true); // asymmetric
        assert!(matches!(
            QuadraticSpace::new(g, BitVec::zeros(2)),
            Err(FormError::BadGram { row: 0, col: 1 })
        ));
        let mut d = BitMatrix::zero(2, 2);
        d.set(1, 1, true);
        assert!(matches!(
            QuadraticSpace::new(d, BitVec::zeros(2)),
            Err(FormError::BadGram { row: 1, col: 1 })
        ));
    }

    #[test]
    fn inconsistent_count_is_flagged() {
        // degenerate but alternating gram passes construction; the oracle
        // then sees 4 zeros where a nondegenerate refinement allows 1 or 3
        let s = space(BitMatrix::zero(2, 2), &[0, 0]);
        assert!(matches!(
            s.arf_count_oracle(),
            Err(FormError::CountInconsistent { zeros: 4, dim: 2 })
        ));
    }

    #[test]
    fn fourth_pair_carries_the_jones_value() {
        // covered pair values (0,0), (0,0), (1,1) and a fourth pair whose
        // second value is free: the product vanishes either way, so Arf
        // stays 1 under both fillings
        for free in [0u8, 1] {
            let s = space(hyperbolic(4), &[0, 0, 0, 0, 1, 1, 0, free]);
            assert!(s.arf().unwrap());
            assert!(s.arf_count_oracle().unwrap());
        }
    }

    #[test]
    fn arf_stable_under_symplectic_transvections() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let genus = rng.gen_range(1..=4usize);
            let n = 2 * genus;
            let g = hyperbolic(genus);
            let q: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
            let s = space(g.clone(), &q);
            let reference = s.arf().unwrap();
            // accumulate a symplectic change of basis out of transvections
            let mut basis: Vec<BitVec> = (0..n).map(|i| BitVec::from_indices(n, &[i])).collect();
            for _ in 0..6 {
                let mut v = BitVec::zeros(n);
                for i in 0..n {
                    if rng.gen_bool(0.5) {
                        v.set(i, true);
                    }
                }
                if v.is_zero() {
                    continue;
                }
                for b in &mut basis {
                    if b.dot(&g.apply(&v)) {
                        b.xor_assign(&v);
                    }
                }
            }
            // same form read in the new basis: gram is preserved exactly
            for (i, bi) in basis.iter().enumerate() {
                for (j, bj) in basis.iter().enumerate() {
                    assert_eq!(bi.dot(&g.apply(bj)), g.get(i, j));
                }
            }
            let q2: Vec<u8> = basis.iter().map(|b| u8::from(s.q(b))).collect();
            let s2 = space(g, &q2);
            assert_eq!(
                s2.arf().unwrap(),
                reference,
                "Arf moved under a base change"
            );
        }
    }
}
