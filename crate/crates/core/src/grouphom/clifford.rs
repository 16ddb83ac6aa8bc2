//! Signed permutation representations and their Pin lifts.
//!
//! An orthogonal representation by signed permutation matrices lifts,
//! generator by generator, into the Clifford algebra with `e_i^2 = s`
//! for a chosen sign `s`. Each generator image factors into at most
//! `n` integer reflections; the product of the reflection vectors is a
//! lift of the image under the twisted adjoint action. Evaluating the
//! relator on these lifts yields a scalar whose sign is the obstruction
//! to a consistent lift of the whole representation.
//!
//! All arithmetic is exact: Clifford elements carry `i128` blade
//! coefficients plus a separate positive norm factor, so no square
//! roots or floats appear.

use alloc::vec::Vec;

use super::{GroupError, Presentation, Representation};
use crate::f2::{BitMatrix, BitVec};

/// Which sign `e_i^2` takes in the Clifford algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signature {
    Plus,
    Minus,
}

impl Signature {
    fn scalar(self) -> i128 {
        match self {
            Signature::Plus => 1,
            Signature::Minus => -1,
        }
    }
}

/// `e_i -> signs[i] * e_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self, GroupError> {
        let n = perm.len();
        let mut seen = alloc::vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(GroupError::ImageNotInvertible {
                    generator: usize::MAX,
                });
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(GroupError::ImageNotInvertible {
                generator: usize::MAX,
            });
        }
        Ok(SignedPerm { perm, signs })
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: alloc::vec![1; n],
        }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Matrix column `i` as an integer vector.
    #[must_use]
    pub fn column(&self, i: usize) -> Vec<i64> {
        let mut c = alloc::vec![0i64; self.n()];
        c[self.perm[i]] = i64::from(self.signs[i]);
        c
    }

    /// `self` after `other`: acts like matrix product self * other.
    #[must_use]
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.n();
        let mut perm = alloc::vec![0usize; n];
        let mut signs = alloc::vec![1i8; n];
        for i in 0..n {
            perm[i] = self.perm[other.perm[i]];
            signs[i] = self.signs[other.perm[i]] * other.signs[i];
        }
        SignedPerm { perm, signs }
    }

    #[must_use]
    pub fn inverse(&self) -> SignedPerm {
        let n = self.n();
        let mut perm = alloc::vec![0usize; n];
        let mut signs = alloc::vec![1i8; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i) && self.signs.iter().all(|&s| s == 1)
    }

    /// Determinant, always plus or minus one.
    #[must_use]
    pub fn det(&self) -> i8 {
        let mut sign = 1i8;
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0usize;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len.is_multiple_of(2) {
                sign = -sign;
            }
        }
        for &s in &self.signs {
            sign *= s;
        }
        sign
    }

    /// Mod-2 shadow: the underlying permutation matrix.
    #[must_use]
    pub fn to_f2(&self) -> BitMatrix {
        BitMatrix::from_permutation(&self.perm)
    }
}

/// Orthogonal representation of a presentation by signed permutations.
#[derive(Clone, Debug)]
pub struct OrthogonalRep {
    n: usize,
    images: Vec<SignedPerm>,
}

impl OrthogonalRep {
    pub fn new(pres: &Presentation, images: Vec<SignedPerm>) -> Result<Self, GroupError> {
        if images.len() != pres.generators() {
            return Err(GroupError::WrongImageCount {
                expected: pres.generators(),
                got: images.len(),
            });
        }
        let n = images.first().map_or(0, SignedPerm::n);
        for (g, im) in images.iter().enumerate() {
            if im.n() != n {
                return Err(GroupError::ImageNotSquare { generator: g });
            }
        }
        let rep = OrthogonalRep { n, images };
        if !rep.evaluate(pres.relator()).is_identity() {
            return Err(GroupError::RelatorNotKilled);
        }
        Ok(rep)
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn generator_image(&self, g: usize) -> &SignedPerm {
        &self.images[g]
    }

    #[must_use]
    pub fn evaluate(&self, w: &super::GroupWord) -> SignedPerm {
        let mut m = SignedPerm::identity(self.n);
        for &(g, inv) in w.letters() {
            let im = if inv {
                self.images[g].inverse()
            } else {
                self.images[g].clone()
            };
            m = m.compose(&im);
        }
        m
    }

    /// Forgets signs, leaving the GF(2) permutation representation.
    pub fn reduction(&self, pres: &Presentation) -> Result<Representation, GroupError> {
        Representation::new(pres, self.images.iter().map(SignedPerm::to_f2).collect())
    }

    /// Determinant character: bit `g` set when generator `g` reverses
    /// orientation.
    #[must_use]
    pub fn w1_bits(&self) -> BitVec {
        BitVec::from_bits(
            &self
                .images
                .iter()
                .map(|m| u8::from(m.det() < 0))
                .collect::<Vec<_>>(),
        )
    }
}

/// Clifford element: `coeffs[mask]` multiplies the blade with factors
/// `e_i` for the set bits of `mask`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
struct CliffordElement {
    n: usize,
    coeffs: Vec<i128>,
}

impl CliffordElement {
    fn zero(n: usize) -> Self {
        CliffordElement {
            n,
            coeffs: alloc::vec![0; 1 << n],
        }
    }

    fn scalar(n: usize, c: i128) -> Self {
        let mut e = CliffordElement::zero(n);
        e.coeffs[0] = c;
        e
    }

    fn vector(n: usize, v: &[i64]) -> Self {
        let mut e = CliffordElement::zero(n);
        for (i, &c) in v.iter().enumerate() {
            e.coeffs[1 << i] = i128::from(c);
        }
        e
    }

    fn scale(&self, c: i128) -> Self {
        CliffordElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    /// Blade product `e_S e_T` with `e_i^2 = s`: returns mask and sign.
    fn blade_mul(mut s_mask: u32, t_mask: u32, s: i128) -> (u32, i128) {
        let mut sign = 1i128;
        let mut t = t_mask;
        while t != 0 {
            let j = t.trailing_zeros();
            t &= t - 1;
            let higher = s_mask & !((1u32 << (j + 1)) - 1);
            if higher.count_ones() % 2 == 1 {
                sign = -sign;
            }
            if s_mask & (1 << j) != 0 {
                s_mask &= !(1 << j);
                sign *= s;
            } else {
                s_mask |= 1 << j;
            }
        }
        (s_mask, sign)
    }

    fn mul(&self, other: &CliffordElement, sig: Signature) -> CliffordElement {
        debug_assert_eq!(self.n, other.n);
        let s = sig.scalar();
        let mut out = CliffordElement::zero(self.n);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let (mask, sign) = Self::blade_mul(a as u32, b as u32, s);
                out.coeffs[mask as usize] += sign * ca * cb;
            }
        }
        out
    }

    /// Reverses factor order in every blade: sign `(-1)^(k(k-1)/2)` on
    /// grade `k`. Anti-automorphism.
    fn reverse(&self) -> CliffordElement {
        let mut out = self.clone();
        for (mask, c) in out.coeffs.iter_mut().enumerate() {
            let k = (mask as u32).count_ones() as i128;
            if (k * (k - 1) / 2) % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    fn as_scalar(&self) -> Option<i128> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

/// Lift of one group element: the actual Pin element is
/// `element / sqrt(norm)`; `factors` counts the reflection vectors in
/// the product, which controls the sign picked up on inversion.
#[derive(Clone, Debug)]
struct PinLift {
    element: CliffordElement,
    norm: i128,
    factors: usize,
}

impl PinLift {
    fn identity(n: usize) -> Self {
        PinLift {
            element: CliffordElement::scalar(n, 1),
            norm: 1,
            factors: 0,
        }
    }

    fn mul(&self, other: &PinLift, sig: Signature) -> PinLift {
        PinLift {
            element: self.element.mul(&other.element, sig),
            norm: self.norm * other.norm,
            factors: self.factors + other.factors,
        }
    }

    fn inverse(&self, sig: Signature) -> PinLift {
        let mut e = self.element.reverse();
        if sig == Signature::Minus && self.factors % 2 == 1 {
            e = e.scale(-1);
        }
        PinLift {
            element: e,
            norm: self.norm,
            factors: self.factors,
        }
    }
}

/// Writes a signed permutation as a composite of reflections in integer
/// vectors, first factor outermost. Identity gives an empty list.
#[must_use]
pub fn reflection_factors(m: &SignedPerm) -> Vec<Vec<i64>> {
    let n = m.n();
    let mut cols: Vec<Vec<i64>> = (0..n).map(|i| m.column(i)).collect();
    let mut factors = Vec::new();
    for i in 0..n {
        let mut v: Vec<i64> = cols[i].clone();
        v[i] -= 1;
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        let g = v.iter().fold(0i64, |acc, &c| gcd(acc, c.abs()));
        for c in &mut v {
            *c /= g;
        }
        let norm: i64 = v.iter().map(|&c| c * c).sum();
        for col in cols.iter_mut() {
            let dot: i64 = col.iter().zip(&v).map(|(&a, &b)| a * b).sum();
            let t = 2 * dot;
            debug_assert_eq!(t % norm, 0, "reflection must keep integer entries");
            let t = t / norm;
            for (c, &vc) in col.iter_mut().zip(&v) {
                *c -= t * vc;
            }
        }
        factors.push(v);
    }
    debug_assert!(
        cols.iter()
            .enumerate()
            .all(|(i, c)| { c.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)) }),
        "factorization must exhaust the matrix"
    );
    factors
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Applies the reflection in `v` to an integer vector. Test helper and
/// cross-check for the factorization.
#[must_use]
pub fn reflect(v: &[i64], x: &[i64]) -> Vec<i64> {
    let norm: i64 = v.iter().map(|&c| c * c).sum();
    let dot: i64 = v.iter().zip(x).map(|(&a, &b)| a * b).sum();
    let t = 2 * dot;
    assert_eq!(t % norm, 0);
    let t = t / norm;
    x.iter().zip(v).map(|(&xc, &vc)| xc - t * vc).collect()
}

fn lift_generator(m: &SignedPerm, sig: Signature) -> PinLift {
    let n = m.n();
    let mut lift = PinLift::identity(n);
    for v in reflection_factors(m) {
        let norm: i64 = v.iter().map(|&c| c * c).sum();
        let next = PinLift {
            element: CliffordElement::vector(n, &v),
            norm: i128::from(norm),
            factors: 1,
        };
        lift = lift.mul(&next, sig);
    }
    lift
}

/// Sign obstruction to lifting the representation into the Pin group of
/// the chosen signature: false when the relator's lift is `+1`, true
/// when it is forced to `-1`.
///
/// Panics if the relator lift is not scalar, which cannot happen for a
/// representation that kills the relator.
#[must_use]
pub fn pin_obstruction(pres: &Presentation, rep: &OrthogonalRep, sig: Signature) -> bool {
    let n = rep.n();
    let lifts: Vec<PinLift> = (0..pres.generators())
        .map(|g| lift_generator(rep.generator_image(g), sig))
        .collect();
    let mut acc = PinLift::identity(n);
    for &(g, inv) in pres.relator().letters() {
        let step = if inv {
            lifts[g].inverse(sig)
        } else {
            lifts[g].clone()
        };
        acc = acc.mul(&step, sig);
    }
    let lambda = acc
        .element
        .as_scalar()
        .expect("relator lift must be scalar");
    assert_eq!(lambda * lambda, acc.norm, "relator lift must be a unit");
    lambda < 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouphom::{cup_eval, Cocycle, GroupWord};

    fn pres() -> Presentation {
        Presentation::squared_generator_surface(1)
    }

    fn sp(perm: [usize; 4], signs: [i8; 4]) -> SignedPerm {
        SignedPerm::new(perm.to_vec(), signs.to_vec()).unwrap()
    }

    /// a = (A C), b1 = (A B)(C D), b2 = (A D)(B C), all signs positive.
    fn default_orth() -> OrthogonalRep {
        OrthogonalRep::new(
            &pres(),
            alloc::vec![
                sp([2, 1, 0, 3], [1, 1, 1, 1]),
                sp([1, 0, 3, 2], [1, 1, 1, 1]),
                sp([3, 2, 1, 0], [1, 1, 1, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn signed_perm_algebra() {
        let a = sp([2, 1, 0, 3], [1, -1, 1, 1]);
        assert!(a.compose(&a.inverse()).is_identity());
        let b = sp([1, 0, 3, 2], [1, 1, -1, 1]);
        let ab = a.compose(&b);
        // Column check: (ab) e_0 = a (b e_0) = a e_1 = -e_1.
        assert_eq!(ab.column(0), alloc::vec![0, -1, 0, 0]);
        assert_eq!(a.det(), 1); // transposition * one sign flip
        assert_eq!(sp([2, 1, 0, 3], [1, 1, 1, 1]).det(), -1);
        assert_eq!(sp([0, 1, 2, 3], [-1, 1, 1, 1]).det(), -1);
    }

    #[test]
    fn blade_multiplication() {
        let n = 4;
        let e1 = CliffordElement::vector(n, &[1, 0, 0, 0]);
        let e2 = CliffordElement::vector(n, &[0, 1, 0, 0]);
        let e12 = e1.mul(&e2, Signature::Plus);
        let e21 = e2.mul(&e1, Signature::Plus);
        assert_eq!(e12.coeffs[0b11], 1);
        assert_eq!(e21.coeffs[0b11], -1);
        assert_eq!(e1.mul(&e1, Signature::Plus).as_scalar(), Some(1));
        assert_eq!(e1.mul(&e1, Signature::Minus).as_scalar(), Some(-1));
        // (e1 e2) e3 = e1 (e2 e3) spot check
        let e3 = CliffordElement::vector(n, &[0, 0, 1, 0]);
        let l = e12.mul(&e3, Signature::Minus);
        let r = e1.mul(&e2.mul(&e3, Signature::Minus), Signature::Minus);
        assert_eq!(l, r);
        // reversal flips the bivector sign
        assert_eq!(e12.reverse().coeffs[0b11], -1);
    }

    #[test]
    fn reversal_is_anti_automorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for sig in [Signature::Plus, Signature::Minus] {
            for _ in 0..30 {
                let mut a = CliffordElement::zero(4);
                let mut b = CliffordElement::zero(4);
                for _ in 0..4 {
                    a.coeffs[rng.gen_range(0..16)] += rng.gen_range(-3i128..=3);
                    b.coeffs[rng.gen_range(0..16)] += rng.gen_range(-3i128..=3);
                }
                assert_eq!(a.mul(&b, sig).reverse(), b.reverse().mul(&a.reverse(), sig));
            }
        }
    }

    #[test]
    fn factorization_reconstructs_matrix() {
        let cases = [
            sp([2, 1, 0, 3], [1, 1, 1, 1]),
            sp([1, 0, 3, 2], [1, 1, 1, 1]),
            sp([3, 2, 1, 0], [1, 1, 1, 1]),
            sp([0, 1, 2, 3], [-1, -1, -1, -1]),
            sp([1, 2, 3, 0], [1, -1, 1, -1]),
            sp([0, 1, 2, 3], [1, 1, 1, 1]),
        ];
        for m in cases {
            let factors = reflection_factors(&m);
            assert!(factors.len() <= 4);
            for i in 0..4 {
                let mut x = alloc::vec![0i64; 4];
                x[i] = 1;
                // first factor outermost
                let mut y = x.clone();
                for v in factors.iter().rev() {
                    y = reflect(v, &y);
                }
                assert_eq!(y, m.column(i), "column {i} of {m:?}");
            }
        }
        assert!(reflection_factors(&SignedPerm::identity(4)).is_empty());
    }

    #[test]
    fn trivial_and_central_images_lift() {
        let p = pres();
        let id = SignedPerm::identity(4);
        let trivial =
            OrthogonalRep::new(&p, alloc::vec![id.clone(), id.clone(), id.clone()]).unwrap();
        assert!(!pin_obstruction(&p, &trivial, Signature::Plus));
        assert!(!pin_obstruction(&p, &trivial, Signature::Minus));

        // b2 -> -I, others trivial: lifts exist for both signs.
        let minus = sp([0, 1, 2, 3], [-1, -1, -1, -1]);
        let central = OrthogonalRep::new(&p, alloc::vec![id.clone(), id, minus]).unwrap();
        assert!(!pin_obstruction(&p, &central, Signature::Plus));
        assert!(!pin_obstruction(&p, &central, Signature::Minus));
    }

    #[test]
    fn default_action_obstruction_split() {
        let p = pres();
        let orth = default_orth();
        assert!(pin_obstruction(&p, &orth, Signature::Plus));
        assert!(!pin_obstruction(&p, &orth, Signature::Minus));
    }

    #[test]
    fn w1_of_default_action() {
        let orth = default_orth();
        assert_eq!(orth.w1_bits(), BitVec::from_bits(&[1, 0, 0]));
    }

    fn w1_square(p: &Presentation, orth: &OrthogonalRep) -> bool {
        let triv = Representation::trivial(p);
        let bits = orth.w1_bits();
        let vals: Vec<BitVec> = (0..p.generators())
            .map(|g| BitVec::from_bits(&[u8::from(bits.get(g))]))
            .collect();
        let u = Cocycle::from_values(p, &triv, vals).unwrap();
        assert!(
            u.is_cocycle(p, &triv),
            "determinant character must vanish on the relator"
        );
        cup_eval(p, &triv, &u, &u, &BitMatrix::identity(1))
    }

    #[test]
    fn obstruction_difference_is_w1_squared() {
        let p = pres();
        let reps = [
            default_orth(),
            OrthogonalRep::new(
                &p,
                alloc::vec![
                    sp([0, 1, 2, 3], [1, -1, -1, 1]),
                    sp([1, 0, 2, 3], [1, 1, 1, 1]),
                    sp([0, 1, 2, 3], [-1, -1, 1, 1]),
                ],
            )
            .unwrap(),
            OrthogonalRep::new(
                &p,
                alloc::vec![
                    sp([2, 1, 0, 3], [1, 1, 1, 1]),
                    sp([0, 1, 2, 3], [1, 1, 1, 1]),
                    sp([0, 1, 2, 3], [1, 1, 1, 1]),
                ],
            )
            .unwrap(),
        ];
        for orth in &reps {
            let plus = pin_obstruction(&p, orth, Signature::Plus);
            let minus = pin_obstruction(&p, orth, Signature::Minus);
            assert_eq!(plus ^ minus, w1_square(&p, orth), "images {orth:?}");
        }
    }

    #[test]
    fn reduction_matches_permutation_shadow() {
        let p = pres();
        let orth = default_orth();
        let rep = orth.reduction(&p).unwrap();
        assert_eq!(rep.dim(), 4);
        let w = GroupWord::from_letters(&[(0, false), (1, false)]);
        assert_eq!(rep.evaluate(&w), orth.evaluate(&w).to_f2());
    }
}
