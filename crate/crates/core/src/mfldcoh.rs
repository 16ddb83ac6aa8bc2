//! Truncated polynomial cohomology rings and the two exact sequences
//! that read manifold homology off linear algebra: the transfer (Gysin)
//! sequence of a double cover and the Wang sequence of a mapping torus.
//!
//! Everything is additive: elements are GF(2) sets of exponent vectors,
//! the ring multiplication truncates, and the sequences reduce to rank
//! computations on multiplication and monodromy matrices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::f2::{BitMatrix, BitVec};

/// `F2[t_1..t_k]` with `t_i^bounds[i] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedRing {
    bounds: Vec<u32>,
}

/// Exponent vector; length equals the ring's variable count.
pub type Monomial = Vec<u32>;

/// GF(2) sum of monomials, kept inside the truncation box.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RingElement {
    terms: BTreeSet<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    NoVariables,
    ZeroBound {
        variable: usize,
    },
    WrongArity {
        expected: usize,
        got: usize,
    },
    ExponentOutOfRange {
        monomial: Monomial,
        variable: usize,
    },
    Inhomogeneous,
    DegreeMismatch {
        expected: u32,
        got: u32,
    },
    SizeMismatch {
        degree: usize,
        rows: usize,
        cols: usize,
    },
    NotInvertible {
        degree: usize,
    },
    NotEquivariant {
        degree: usize,
    },
}

impl core::fmt::Display for RingError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RingError::NoVariables => write!(f, "ring needs at least one variable"),
            RingError::ZeroBound { variable } => {
                write!(
                    f,
                    "truncation bound of variable {variable} must be positive"
                )
            }
            RingError::WrongArity { expected, got } => {
                write!(
                    f,
                    "monomial has {got} exponents, ring has {expected} variables"
                )
            }
            RingError::ExponentOutOfRange { monomial, variable } => {
                write!(
                    f,
                    "monomial {monomial:?} exceeds the bound of variable {variable}"
                )
            }
            RingError::Inhomogeneous => write!(f, "element mixes degrees"),
            RingError::DegreeMismatch { expected, got } => {
                write!(f, "expected degree {expected}, got {got}")
            }
            RingError::SizeMismatch { degree, rows, cols } => {
                write!(
                    f,
                    "matrix at degree {degree} is {rows}x{cols}, dimensions disagree"
                )
            }
            RingError::NotInvertible { degree } => {
                write!(f, "monodromy at degree {degree} is singular")
            }
            RingError::NotEquivariant { degree } => {
                write!(
                    f,
                    "multiplication from degree {degree} does not commute with the monodromy"
                )
            }
        }
    }
}

impl RingElement {
    #[must_use]
    pub fn zero() -> Self {
        RingElement::default()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    #[must_use]
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Common degree of all terms; zero element reports `None`, mixed
    /// degrees report `Err`.
    pub fn degree(&self) -> Result<Option<u32>, RingError> {
        let mut out = None;
        for m in &self.terms {
            let d: u32 = m.iter().sum();
            match out {
                None => out = Some(d),
                Some(seen) if seen != d => return Err(RingError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(out)
    }
}

impl TruncatedRing {
    pub fn new(bounds: Vec<u32>) -> Result<Self, RingError> {
        if bounds.is_empty() {
            return Err(RingError::NoVariables);
        }
        if let Some(v) = bounds.iter().position(|&b| b == 0) {
            return Err(RingError::ZeroBound { variable: v });
        }
        Ok(TruncatedRing { bounds })
    }

    #[must_use]
    pub fn vars(&self) -> usize {
        self.bounds.len()
    }

    #[must_use]
    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Largest degree with a nonzero graded piece.
    #[must_use]
    pub fn top_degree(&self) -> u32 {
        self.bounds.iter().map(|&b| b - 1).sum()
    }

    /// Validated element from explicit exponent vectors.
    pub fn element(&self, monomials: &[&[u32]]) -> Result<RingElement, RingError> {
        let mut e = RingElement::zero();
        for m in monomials {
            if m.len() != self.vars() {
                return Err(RingError::WrongArity {
                    expected: self.vars(),
                    got: m.len(),
                });
            }
            if let Some(v) = (0..m.len()).find(|&v| m[v] >= self.bounds[v]) {
                return Err(RingError::ExponentOutOfRange {
                    monomial: m.to_vec(),
                    variable: v,
                });
            }
            e.toggle(m.to_vec());
        }
        Ok(e)
    }

    /// Monomials of total degree `d`, lexicographically sorted.
    #[must_use]
    pub fn degree_basis(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![0u32; self.vars()];
        self.enumerate(0, d, &mut cur, &mut out);
        out
    }

    fn enumerate(&self, var: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if var + 1 == self.vars() {
            if left < self.bounds[var] {
                cur[var] = left;
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..self.bounds[var].min(left + 1) {
            cur[var] = e;
            self.enumerate(var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }

    #[must_use]
    pub fn dim(&self, d: u32) -> usize {
        self.degree_basis(d).len()
    }

    /// Dimensions of every graded piece, degree 0 through the top.
    #[must_use]
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top_degree()).map(|d| self.dim(d)).collect()
    }

    /// Product with truncation: any exponent reaching its bound kills
    /// the monomial.
    #[must_use]
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for m in &a.terms {
            'terms: for n in &b.terms {
                let mut s = m.clone();
                for v in 0..self.vars() {
                    s[v] += n[v];
                    if s[v] >= self.bounds[v] {
                        continue 'terms;
                    }
                }
                out.toggle(s);
            }
        }
        out
    }

    #[must_use]
    pub fn power(&self, a: &RingElement, k: u32) -> RingElement {
        let mut out = self
            .element(&[&alloc::vec![0; self.vars()]])
            .expect("unit in range");
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    /// Matrix of `x -> c x` from the degree-`d` basis to the basis in
    /// degree `d + deg c`, columns indexed by the source monomials.
    pub fn mult_matrix(&self, c: &RingElement, d: u32) -> Result<BitMatrix, RingError> {
        let dc = c.degree()?.unwrap_or(1);
        let src = self.degree_basis(d);
        let dst = self.degree_basis(d + dc);
        let mut m = BitMatrix::zero(dst.len(), src.len());
        for (j, s) in src.iter().enumerate() {
            let mut e = RingElement::zero();
            e.toggle(s.clone());
            for t in self.mul(c, &e).terms() {
                let i = dst.binary_search(t).expect("product stays in the box");
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    /// Permutation matrix of a variable swap on the degree-`d` basis.
    /// Requires the swapped variables to share a truncation bound.
    #[must_use]
    pub fn swap_matrix(&self, v1: usize, v2: usize, d: u32) -> BitMatrix {
        assert_eq!(self.bounds[v1], self.bounds[v2], "swap needs equal bounds");
        let basis = self.degree_basis(d);
        let mut m = BitMatrix::zero(basis.len(), basis.len());
        for (j, mono) in basis.iter().enumerate() {
            let mut im = mono.clone();
            im.swap(v1, v2);
            let i = basis.binary_search(&im).expect("swap preserves the box");
            m.set(i, j, true);
        }
        m
    }

    /// Normal form of `u^k` modulo the ideal generated by `pi`,
    /// reduced degree by degree against the image of multiplication by
    /// `pi`. A zero result certifies the power vanishes in the
    /// quotient.
    pub fn power_mod_ideal(
        &self,
        pi: &RingElement,
        u: &RingElement,
        k: u32,
    ) -> Result<RingElement, RingError> {
        let dpi = pi.degree()?.unwrap_or(1);
        let p = self.power(u, k);
        let mut out = RingElement::zero();
        // Split into graded components and reduce each one.
        let mut degrees = BTreeSet::new();
        for m in p.terms() {
            degrees.insert(m.iter().sum::<u32>());
        }
        for d in degrees {
            let basis = self.degree_basis(d);
            let mut v = crate::f2::BitVec::zeros(basis.len());
            for m in p.terms() {
                if m.iter().sum::<u32>() == d {
                    v.flip(basis.binary_search(m).expect("element in range"));
                }
            }
            if d >= dpi {
                let image = self.mult_matrix(pi, d - dpi)?;
                let (rref, pivots) = image.transpose().rref();
                for (r, &col) in pivots.iter().enumerate() {
                    if v.get(col) {
                        v.xor_assign(rref.row(r));
                    }
                }
            }
            for (i, m) in basis.iter().enumerate() {
                if v.get(i) {
                    out.toggle(m.clone());
                }
            }
        }
        Ok(out)
    }
}

/// Betti numbers of a double cover from the transfer sequence: maps[k]
/// is cup product with the classifying degree-1 class from degree k to
/// k+1, and the cover's degree-k dimension is the kernel at k plus the
/// cokernel into k.
pub fn gysin_betti(dims: &[usize], maps: &[BitMatrix]) -> Result<Vec<usize>, RingError> {
    if maps.len() + 1 != dims.len() {
        return Err(RingError::SizeMismatch {
            degree: maps.len(),
            rows: 0,
            cols: 0,
        });
    }
    for (k, m) in maps.iter().enumerate() {
        if m.rows() != dims[k + 1] || m.cols() != dims[k] {
            return Err(RingError::SizeMismatch {
                degree: k,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    let ranks: Vec<usize> = maps.iter().map(BitMatrix::rank).collect();
    let rank_at = |k: isize| -> usize {
        if k < 0 || k as usize >= ranks.len() {
            0
        } else {
            ranks[k as usize]
        }
    };
    Ok((0..dims.len())
        .map(|k| 2 * dims[k] - rank_at(k as isize) - rank_at(k as isize - 1))
        .collect())
}

/// Cover dimensions for a truncated ring and a degree-1 class.
pub fn double_cover_betti(ring: &TruncatedRing, pi: &RingElement) -> Result<Vec<usize>, RingError> {
    match pi.degree()? {
        None | Some(1) => {}
        Some(got) => return Err(RingError::DegreeMismatch { expected: 1, got }),
    }
    let top = ring.top_degree();
    let maps: Vec<BitMatrix> = (0..top)
        .map(|d| ring.mult_matrix(pi, d))
        .collect::<Result<_, _>>()?;
    gysin_betti(&ring.dims(), &maps)
}

/// Fiber homology dimensions with one monodromy matrix per degree.
#[derive(Clone, Debug)]
pub struct MonodromyData {
    dims: Vec<usize>,
    maps: Vec<BitMatrix>,
}

impl MonodromyData {
    pub fn new(dims: Vec<usize>, maps: Vec<BitMatrix>) -> Result<Self, RingError> {
        if maps.len() != dims.len() {
            return Err(RingError::SizeMismatch {
                degree: maps.len(),
                rows: 0,
                cols: 0,
            });
        }
        for (q, m) in maps.iter().enumerate() {
            if m.rows() != dims[q] || m.cols() != dims[q] {
                return Err(RingError::SizeMismatch {
                    degree: q,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if !m.is_invertible() {
                return Err(RingError::NotInvertible { degree: q });
            }
        }
        Ok(MonodromyData { dims, maps })
    }

    /// Identity monodromy on the given fiber dimensions.
    pub fn trivial(dims: Vec<usize>) -> Self {
        let maps = dims.iter().map(|&d| BitMatrix::identity(d)).collect();
        MonodromyData { dims, maps }
    }

    #[must_use]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[must_use]
    pub fn map(&self, q: usize) -> &BitMatrix {
        &self.maps[q]
    }
}

/// Mapping-torus homology via the Wang sequence: degree n collects the
/// cokernel of `monodromy + 1` in fiber degree n and its kernel in
/// degree n-1.
#[must_use]
pub fn wang_betti(data: &MonodromyData) -> Vec<usize> {
    let n = data.dims.len();
    let defect: Vec<usize> = (0..n)
        .map(|q| {
            let m = data.maps[q].add(&BitMatrix::identity(data.dims[q]));
            data.dims[q] - m.rank()
        })
        .collect();
    // ker and coker of an endomorphism share their dimension defect.
    (0..=n)
        .map(|k| {
            let here = if k < n { defect[k] } else { 0 };
            let below = if k > 0 { defect[k - 1] } else { 0 };
            here + below
        })
        .collect()
}

/// Kernel basis, column-space reduction data and free coordinates of an
/// endomorphism-plus-identity; the shared plumbing for splitting a
/// degree into invariants and coinvariants.
struct Splitting {
    inv: Vec<BitVec>,
    rref: BitMatrix,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl Splitting {
    fn of(a: &BitMatrix) -> Self {
        let (rref, pivots) = a.transpose().rref();
        let free = (0..a.rows()).filter(|c| !pivots.contains(c)).collect();
        Splitting {
            inv: a.kernel_basis(),
            rref,
            pivots,
            free,
        }
    }

    /// Coordinates of `v` in the coinvariant basis: reduce modulo the
    /// column space, then read off the free positions.
    fn coinv_coords(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (r, &col) in self.pivots.iter().enumerate() {
            if v.get(col) {
                v.xor_assign(self.rref.row(r));
            }
        }
        let mut out = BitVec::zeros(self.free.len());
        for (i, &col) in self.free.iter().enumerate() {
            if v.get(col) {
                out.set(i, true);
            }
        }
        out
    }

    /// Coordinates of an invariant vector in the kernel basis.
    fn inv_coords(&self, v: &BitVec) -> BitVec {
        if self.inv.is_empty() {
            assert!(v.is_zero(), "image of an invariant must stay invariant");
            return BitVec::zeros(0);
        }
        let basis = BitMatrix::from_rows(self.inv.clone()).transpose();
        basis
            .solve(v)
            .expect("image of an invariant must stay invariant")
    }
}

/// Betti numbers of the double cover of a mapping torus, classified by
/// a degree-1 fiber class that the monodromy fixes and that vanishes on
/// the base circle. The torus cohomology is modeled additively through
/// the Wang splitting -- degree m holds the monodromy invariants of
/// fiber degree m plus the coinvariants of degree m-1 -- and the
/// covering class multiplies blockwise. `mults[k]` is multiplication by
/// the class on fiber degree k; it must commute with the monodromy.
pub fn mapping_torus_cover_betti(
    monodromy: &MonodromyData,
    mults: &[BitMatrix],
) -> Result<Vec<usize>, RingError> {
    let dims = monodromy.dims();
    let n = dims.len();
    if mults.len() + 1 != n {
        return Err(RingError::SizeMismatch {
            degree: mults.len(),
            rows: 0,
            cols: 0,
        });
    }
    for (k, m) in mults.iter().enumerate() {
        if m.rows() != dims[k + 1] || m.cols() != dims[k] {
            return Err(RingError::SizeMismatch {
                degree: k,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if monodromy.map(k + 1).mul(m) != m.mul(monodromy.map(k)) {
            return Err(RingError::NotEquivariant { degree: k });
        }
    }
    let layers: Vec<Splitting> = (0..n)
        .map(|k| Splitting::of(&monodromy.map(k).add(&BitMatrix::identity(dims[k]))))
        .collect();
    let inv_dim = |k: usize| if k < n { layers[k].inv.len() } else { 0 };
    let coker_dim = |k: usize| if k < n { layers[k].free.len() } else { 0 };
    // Torus degree m = invariants of fiber degree m + coinvariants of
    // fiber degree m-1.
    let torus_dims: Vec<usize> = (0..=n)
        .map(|m| inv_dim(m) + if m > 0 { coker_dim(m - 1) } else { 0 })
        .collect();
    let torus_maps: Vec<BitMatrix> = (0..n)
        .map(|m| {
            let rows = torus_dims[m + 1];
            let mut p = BitMatrix::zero(rows, torus_dims[m]);
            // Invariant block: fiber degree m -> m+1.
            if m + 1 < n {
                for (j, v) in layers[m].inv.iter().enumerate() {
                    let w = layers[m + 1].inv_coords(&mults[m].apply(v));
                    for i in w.ones() {
                        p.set(i, j, true);
                    }
                }
            }
            // Coinvariant block: fiber degree m-1 -> m.
            if m > 0 {
                let (off_r, off_c) = (inv_dim(m + 1), inv_dim(m));
                for (j, &col) in layers[m - 1].free.iter().enumerate() {
                    let w = layers[m].coinv_coords(&mults[m - 1].column(col));
                    for i in w.ones() {
                        p.set(off_r + i, off_c + j, true);
                    }
                }
            }
            p
        })
        .collect();
    gysin_betti(&torus_dims, &torus_maps)
}
