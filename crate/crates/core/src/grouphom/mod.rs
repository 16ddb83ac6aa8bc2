//! Group cohomology of a one-relator presentation through Fox calculus.
//!
//! A presentation with generators `x_1..x_g` and a single relator `r`
//! gives a three-term chain complex for any GF(2) representation `rho`.
//! On the cochain side the differentials use `rho` directly; on the
//! chain side every group element passes through the inversion
//! involution of the group ring, which is what makes the two boundary
//! maps compose to zero when images fail to commute.
//!
//! Cocycles are crossed homomorphisms stored by their generator values.
//! The module evaluates them on words, cups them against the relator,
//! and turns coefficient vectors transported around loops into chains.

pub mod clifford;
pub mod word;

use alloc::string::String;
use alloc::vec::Vec;

use crate::f2::{BitMatrix, BitVec};
pub use word::{fox_derivative, GroupRing, GroupWord};

/// One-relator presentation. Generator names are kept for rendering.
#[derive(Clone, Debug)]
pub struct Presentation {
    names: Vec<String>,
    relator: GroupWord,
}

/// Why a presentation or representation was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    NoGenerators,
    DuplicateName(String),
    RelatorOutOfRange { letter: usize, generators: usize },
    WrongImageCount { expected: usize, got: usize },
    ImageNotSquare { generator: usize },
    ImageNotInvertible { generator: usize },
    RelatorNotKilled,
    CoefficientMismatch { expected: usize, got: usize },
    PairingNotInvariant { generator: usize },
    VectorNotInvariant { word: String },
}

impl core::fmt::Display for GroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupError::NoGenerators => write!(f, "presentation needs at least one generator"),
            GroupError::DuplicateName(n) => write!(f, "generator name {n:?} repeats"),
            GroupError::RelatorOutOfRange { letter, generators } => write!(
                f,
                "relator letter refers to generator {letter} but only {generators} exist"
            ),
            GroupError::WrongImageCount { expected, got } => {
                write!(f, "expected {expected} generator images, got {got}")
            }
            GroupError::ImageNotSquare { generator } => {
                write!(
                    f,
                    "image of generator {generator} is not square of the common size"
                )
            }
            GroupError::ImageNotInvertible { generator } => {
                write!(f, "image of generator {generator} is singular over GF(2)")
            }
            GroupError::RelatorNotKilled => {
                write!(
                    f,
                    "representation does not send the relator to the identity"
                )
            }
            GroupError::CoefficientMismatch { expected, got } => {
                write!(
                    f,
                    "coefficient vector has length {got}, representation acts on {expected}"
                )
            }
            GroupError::PairingNotInvariant { generator } => {
                write!(
                    f,
                    "pairing is not preserved by the image of generator {generator}"
                )
            }
            GroupError::VectorNotInvariant { word } => {
                write!(f, "coefficient vector is not fixed by {word}")
            }
        }
    }
}

impl Presentation {
    pub fn new(names: &[&str], relator: GroupWord) -> Result<Self, GroupError> {
        if names.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(GroupError::DuplicateName(String::from(*n)));
            }
        }
        if let Some(m) = relator.max_generator() {
            if m >= names.len() {
                return Err(GroupError::RelatorOutOfRange {
                    letter: m,
                    generators: names.len(),
                });
            }
        }
        Ok(Presentation {
            names: names.iter().map(|s| String::from(*s)).collect(),
            relator,
        })
    }

    /// Genus-`g` orientable surface-like shape with an extra squared
    /// generator in front: `c c b_1 b_2 b_1^-1 b_2^-1 ...` for `pairs`
    /// commutator pairs. With one pair this is the presentation used by
    /// the default data set.
    pub fn squared_generator_surface(pairs: usize) -> Self {
        let mut names: Vec<String> = alloc::vec![String::from("a")];
        for i in 1..=pairs {
            names.push(alloc::format!("b{i}"));
            names.push(alloc::format!("c{i}"));
        }
        let mut r = GroupWord::identity();
        r.push(0, false);
        r.push(0, false);
        for i in 0..pairs {
            let (b, c) = (1 + 2 * i, 2 + 2 * i);
            r.push(b, false);
            r.push(c, false);
            r.push(b, true);
            r.push(c, true);
        }
        let names_ref: Vec<&str> = names.iter().map(String::as_str).collect();
        Presentation::new(&names_ref, r).expect("constructed in range")
    }

    #[must_use]
    pub fn generators(&self) -> usize {
        self.names.len()
    }

    #[must_use]
    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    #[must_use]
    pub fn relator(&self) -> &GroupWord {
        &self.relator
    }

    /// `1 - g + 1`, the Euler characteristic of the two-complex with one
    /// cell in each dimension 0 and 2 and one per generator in degree 1.
    #[must_use]
    pub fn euler_characteristic(&self) -> i64 {
        2 - self.names.len() as i64
    }
}

/// GF(2) representation: one invertible matrix per generator, relator
/// mapped to the identity. Inverses are precomputed.
#[derive(Clone, Debug)]
pub struct Representation {
    dim: usize,
    images: Vec<BitMatrix>,
    inverses: Vec<BitMatrix>,
}

impl Representation {
    pub fn new(pres: &Presentation, images: Vec<BitMatrix>) -> Result<Self, GroupError> {
        if images.len() != pres.generators() {
            return Err(GroupError::WrongImageCount {
                expected: pres.generators(),
                got: images.len(),
            });
        }
        let dim = images.first().map_or(0, BitMatrix::rows);
        let mut inverses = Vec::with_capacity(images.len());
        for (g, m) in images.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(GroupError::ImageNotSquare { generator: g });
            }
            match m.inverse() {
                Some(inv) => inverses.push(inv),
                None => return Err(GroupError::ImageNotInvertible { generator: g }),
            }
        }
        let rep = Representation {
            dim,
            images,
            inverses,
        };
        if rep.evaluate(pres.relator()) != BitMatrix::identity(dim) {
            return Err(GroupError::RelatorNotKilled);
        }
        Ok(rep)
    }

    /// One-dimensional trivial representation, usable with any presentation.
    #[must_use]
    pub fn trivial(pres: &Presentation) -> Self {
        let id = BitMatrix::identity(1);
        Representation {
            dim: 1,
            images: alloc::vec![id.clone(); pres.generators()],
            inverses: alloc::vec![id; pres.generators()],
        }
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[must_use]
    pub fn generator_image(&self, g: usize) -> &BitMatrix {
        &self.images[g]
    }

    #[must_use]
    pub fn letter_image(&self, g: usize, inverted: bool) -> &BitMatrix {
        if inverted {
            &self.inverses[g]
        } else {
            &self.images[g]
        }
    }

    #[must_use]
    pub fn evaluate(&self, w: &GroupWord) -> BitMatrix {
        let mut m = BitMatrix::identity(self.dim);
        for &(g, inv) in w.letters() {
            m = m.mul(self.letter_image(g, inv));
        }
        m
    }

    /// Sum of `rho(w)` over the terms of a group-ring element.
    #[must_use]
    pub fn evaluate_ring(&self, r: &GroupRing) -> BitMatrix {
        let mut m = BitMatrix::zero(self.dim, self.dim);
        for t in r.terms() {
            m = m.add(&self.evaluate(t));
        }
        m
    }

    /// Checks `v^T P w` is preserved by every generator image.
    pub fn check_pairing_invariant(&self, pairing: &BitMatrix) -> Result<(), GroupError> {
        for (g, m) in self.images.iter().enumerate() {
            if &m.transpose().mul(pairing).mul(m) != pairing {
                return Err(GroupError::PairingNotInvariant { generator: g });
            }
        }
        Ok(())
    }
}

/// Chain and cochain complexes of a presentation with coefficients.
///
/// Cochain side (`d0`, `d1`) computes cohomology; chain side (`del1`,
/// `del2`) computes homology. Slots of the middle term follow generator
/// order, `dim` coordinates per generator.
#[derive(Clone, Debug)]
pub struct FoxComplex {
    dim: usize,
    gens: usize,
    d0: BitMatrix,
    d1: BitMatrix,
    del1: BitMatrix,
    del2: BitMatrix,
}

/// Dimensions of homology or cohomology in degrees 0, 1, 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

impl HomologyDims {
    #[must_use]
    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

impl FoxComplex {
    #[must_use]
    pub fn new(pres: &Presentation, rep: &Representation) -> Self {
        let (m, g) = (rep.dim(), pres.generators());
        let id = BitMatrix::identity(m);

        // d0 stacks rho(x)+1, d1 lays rho(dr/dx) side by side.
        let mut d0_blocks: Vec<BitMatrix> = Vec::with_capacity(g);
        let mut d1_blocks: Vec<BitMatrix> = Vec::with_capacity(g);
        // Chain side: everything runs through term inversion first.
        let mut del1_blocks: Vec<BitMatrix> = Vec::with_capacity(g);
        let mut del2_blocks: Vec<BitMatrix> = Vec::with_capacity(g);
        for x in 0..g {
            d0_blocks.push(rep.generator_image(x).add(&id));
            let dr = fox_derivative(pres.relator(), x);
            d1_blocks.push(rep.evaluate_ring(&dr));
            del1_blocks.push(rep.letter_image(x, true).add(&id));
            del2_blocks.push(rep.evaluate_ring(&dr.invert_terms()));
        }
        let d0 = vstack_all(&d0_blocks);
        let d1 = hstack_all(&d1_blocks);
        let del1 = hstack_all(&del1_blocks);
        let del2 = vstack_all(&del2_blocks);

        debug_assert!(
            d1.mul(&d0).is_zero(),
            "cochain differentials must compose to zero"
        );
        debug_assert!(
            del1.mul(&del2).is_zero(),
            "chain differentials must compose to zero"
        );

        FoxComplex {
            dim: m,
            gens: g,
            d0,
            d1,
            del1,
            del2,
        }
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[must_use]
    pub fn generators(&self) -> usize {
        self.gens
    }

    #[must_use]
    pub fn d0(&self) -> &BitMatrix {
        &self.d0
    }

    #[must_use]
    pub fn d1(&self) -> &BitMatrix {
        &self.d1
    }

    #[must_use]
    pub fn boundary1(&self) -> &BitMatrix {
        &self.del1
    }

    #[must_use]
    pub fn boundary2(&self) -> &BitMatrix {
        &self.del2
    }

    #[must_use]
    pub fn cohomology_dims(&self) -> HomologyDims {
        let r0 = self.d0.rank();
        let r1 = self.d1.rank();
        HomologyDims {
            h0: self.dim - r0,
            h1: self.gens * self.dim - r0 - r1,
            h2: self.dim - r1,
        }
    }

    #[must_use]
    pub fn homology_dims(&self) -> HomologyDims {
        let r1 = self.del1.rank();
        let r2 = self.del2.rank();
        HomologyDims {
            h0: self.dim - r1,
            h1: self.gens * self.dim - r1 - r2,
            h2: self.dim - r2,
        }
    }

    /// Representatives for H^1: kernel vectors of `d1` that stay
    /// independent after the coboundaries are thrown in. Deterministic
    /// given the canonical kernel basis.
    #[must_use]
    pub fn h1_cocycle_basis(&self) -> Vec<BitVec> {
        let mut span: Vec<BitVec> = Vec::new();
        for c in 0..self.d0.cols() {
            absorb(&mut span, self.d0.column(c));
        }
        let mut reps = Vec::new();
        for k in self.d1.kernel_basis() {
            if absorb(&mut span, k.clone()) {
                reps.push(k);
            }
        }
        reps
    }

    /// Coordinates of a cocycle's class in the `h1_cocycle_basis`, or
    /// `None` if the vector is not a cocycle.
    #[must_use]
    pub fn class_coordinates(&self, v: &BitVec) -> Option<BitVec> {
        if !self.d1.apply(v).is_zero() {
            return None;
        }
        let reps = self.h1_cocycle_basis();
        let mut cols: Vec<BitVec> = reps.clone();
        for c in 0..self.d0.cols() {
            cols.push(self.d0.column(c));
        }
        let m = BitMatrix::from_rows(cols).transpose();
        let sol = m.solve(v).expect("cocycle must lie in reps + coboundaries");
        Some(BitVec::from_bits(
            &(0..reps.len())
                .map(|i| u8::from(sol.get(i)))
                .collect::<Vec<_>>(),
        ))
    }
}

fn hstack_all(blocks: &[BitMatrix]) -> BitMatrix {
    let mut it = blocks.iter();
    let first = it.next().expect("at least one generator").clone();
    it.fold(first, |acc, b| acc.hstack(b))
}

fn vstack_all(blocks: &[BitMatrix]) -> BitMatrix {
    let mut it = blocks.iter();
    let first = it.next().expect("at least one generator").clone();
    it.fold(first, |acc, b| acc.vstack(b))
}

/// Gaussian absorption: returns true (and extends the spanning set) if
/// `v` was independent of it.
fn absorb(span: &mut Vec<BitVec>, mut v: BitVec) -> bool {
    for b in span.iter() {
        let p = b.first_one().expect("span holds nonzero vectors");
        if v.get(p) {
            v.xor_assign(b);
        }
    }
    if v.is_zero() {
        return false;
    }
    // Keep the set echelonized so each stored vector has a unique pivot.
    let p = v.first_one().expect("nonzero");
    for b in span.iter_mut() {
        if b.get(p) {
            b.xor_assign(&v);
        }
    }
    span.push(v);
    true
}

/// Crossed homomorphism, stored as its generator values glued into one
/// vector of length `generators * dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    dim: usize,
    values: BitVec,
}

impl Cocycle {
    pub fn from_values(
        pres: &Presentation,
        rep: &Representation,
        values: Vec<BitVec>,
    ) -> Result<Self, GroupError> {
        if values.len() != pres.generators() {
            return Err(GroupError::WrongImageCount {
                expected: pres.generators(),
                got: values.len(),
            });
        }
        for v in &values {
            if v.len() != rep.dim() {
                return Err(GroupError::CoefficientMismatch {
                    expected: rep.dim(),
                    got: v.len(),
                });
            }
        }
        let mut glued = BitVec::zeros(0);
        for v in &values {
            glued = glued.concat(v);
        }
        Ok(Cocycle {
            dim: rep.dim(),
            values: glued,
        })
    }

    #[must_use]
    pub fn from_flat(dim: usize, values: BitVec) -> Self {
        debug_assert_eq!(values.len() % dim.max(1), 0);
        Cocycle { dim, values }
    }

    #[must_use]
    pub fn flat(&self) -> &BitVec {
        &self.values
    }

    #[must_use]
    pub fn generator_value(&self, g: usize) -> BitVec {
        self.values.slice(g * self.dim, self.dim)
    }

    /// Crossed evaluation: `u(wx) = u(w) + rho(w) u(x)` and
    /// `u(x^-1) = rho(x)^-1 u(x)`.
    #[must_use]
    pub fn evaluate(&self, rep: &Representation, w: &GroupWord) -> BitVec {
        let mut acc = BitVec::zeros(self.dim);
        let mut prefix = BitMatrix::identity(self.dim);
        for &(g, inv) in w.letters() {
            if inv {
                prefix = prefix.mul(rep.letter_image(g, true));
                acc.xor_assign(&prefix.apply(&self.generator_value(g)));
            } else {
                acc.xor_assign(&prefix.apply(&self.generator_value(g)));
                prefix = prefix.mul(rep.generator_image(g));
            }
        }
        acc
    }

    /// True when the crossed rule sends the relator to zero, i.e. the
    /// values define a genuine cocycle.
    #[must_use]
    pub fn is_cocycle(&self, pres: &Presentation, rep: &Representation) -> bool {
        self.evaluate(rep, pres.relator()).is_zero()
    }
}

/// Value of the cup product of two degree-one classes on the relator
/// class, using `pairing` on coefficients. The pairing must be
/// invariant or the answer depends on the chosen representatives.
///
/// The relator's fundamental chain assigns each letter a base point:
/// the prefix before a positive letter, the prefix through an inverted
/// one (the edge is traversed backwards, so it is based at the far
/// end). Each letter then contributes the pairing of `u` at the base
/// against `v` of the underlying generator, translated to the base.
#[must_use]
pub fn cup_eval(
    pres: &Presentation,
    rep: &Representation,
    u: &Cocycle,
    v: &Cocycle,
    pairing: &BitMatrix,
) -> bool {
    let mut total = false;
    let mut prefix = GroupWord::identity();
    for &(g, inv) in pres.relator().letters() {
        if inv {
            prefix.push(g, true);
        }
        let u_at = u.evaluate(rep, &prefix);
        let v_at = rep.evaluate(&prefix).apply(&v.generator_value(g));
        total ^= u_at.dot(&pairing.apply(&v_at));
        if !inv {
            prefix.push(g, false);
        }
    }
    total
}

/// Chain in the middle term whose pairing against any cocycle equals
/// the cup product of that cocycle with `v`. This is the cap with the
/// relator class, written through the inversion involution; it needs an
/// invariant pairing for the adjunction to hold.
#[must_use]
pub fn pd_cap(
    pres: &Presentation,
    rep: &Representation,
    v: &Cocycle,
    _pairing: &BitMatrix,
) -> BitVec {
    let m = rep.dim();
    let mut slots = alloc::vec![BitVec::zeros(m); pres.generators()];
    let mut prefix = GroupWord::identity();
    for &(g, inv) in pres.relator().letters() {
        if inv {
            prefix.push(g, true);
        }
        let payload = rep.evaluate(&prefix).apply(&v.generator_value(g));
        for (x, slot) in slots.iter_mut().enumerate() {
            for t in fox_derivative(&prefix, x).terms() {
                let carried = rep.evaluate(&t.inverse()).apply(&payload);
                slot.xor_assign(&carried);
            }
        }
        if !inv {
            prefix.push(g, false);
        }
    }
    let mut flat = BitVec::zeros(0);
    for s in &slots {
        flat = flat.concat(s);
    }
    flat
}

/// Chain swept out by carrying an invariant coefficient vector around a
/// loop: positive letters contribute through the inverse of the prefix
/// before them, inverted letters through the inverse of the prefix
/// ending at them. Rejects vectors the loop does not fix.
pub fn loop_cycle(
    pres: &Presentation,
    rep: &Representation,
    w: &GroupWord,
    omega: &BitVec,
) -> Result<BitVec, GroupError> {
    if omega.len() != rep.dim() {
        return Err(GroupError::CoefficientMismatch {
            expected: rep.dim(),
            got: omega.len(),
        });
    }
    if rep.evaluate(w).apply(omega) != *omega {
        return Err(GroupError::VectorNotInvariant {
            word: w.render(&pres.names()),
        });
    }
    let m = rep.dim();
    let mut slots = alloc::vec![BitVec::zeros(m); pres.generators()];
    let mut prefix_inv = BitMatrix::identity(m);
    for &(g, inv) in w.letters() {
        if inv {
            prefix_inv = rep.generator_image(g).mul(&prefix_inv);
            let mut s = slots[g].clone();
            s.xor_assign(&prefix_inv.apply(omega));
            slots[g] = s;
        } else {
            let mut s = slots[g].clone();
            s.xor_assign(&prefix_inv.apply(omega));
            slots[g] = s;
            prefix_inv = rep.letter_image(g, true).mul(&prefix_inv);
        }
    }
    let mut flat = BitVec::zeros(0);
    for s in &slots {
        flat = flat.concat(s);
    }
    Ok(flat)
}
