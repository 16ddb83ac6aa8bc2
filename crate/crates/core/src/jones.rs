//! Invariants of a closed 30-dimensional total space: a flat bundle of
//! four 7-sphere factors over a closed surface, holonomy permuting the
//! factors through a dihedral action of order eight.
//!
//! The homology bookkeeping runs through the Fox complex of the
//! surface group with three coefficient systems (trivial, factors,
//! unordered factor pairs). The middle dimension carries an
//! intersection form evaluated by cup products against the
//! disjointness pairing on pairs; a quadratic refinement on a
//! catalogued family of product cycles feeds the Arf invariant.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::f2::{BitMatrix, BitVec};
use crate::grouphom::{
    cup_eval, loop_cycle, Cocycle, FoxComplex, GroupError, GroupWord, HomologyDims, Presentation,
    Representation,
};

pub const BASE_NAMES: [&str; 4] = ["A", "B", "C", "D"];
pub const PAIR_NAMES: [&str; 6] = ["AB", "AC", "AD", "BC", "BD", "CD"];

/// Catalog indices recorded as dual partners in the middle dimension.
/// The recomputed intersection table confirms only the first; the
/// others are kept so reports can show the comparison.
pub const RECORDED_DUAL_PAIRS: [(usize, usize); 4] = [(0, 1), (2, 5), (6, 3), (7, 4)];

/// Catalog indices whose product cycles are recorded as disjoint.
pub const CROSS_ZERO_PAIR: (usize, usize) = (7, 5);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JonesError {
    EntryOutOfRange {
        entry: usize,
    },
    DuplicateAssignment {
        entry: usize,
    },
    /// The fiber class is not fixed by the loop, so no product cycle
    /// exists for this catalog row.
    CycleUndefined {
        label: String,
    },
    /// A linear dependency among the covered classes violates the
    /// refinement rule: the q-values plus the pairwise intersections
    /// over the dependent set do not sum to zero.
    InconsistentAssignments {
        entries: Vec<usize>,
    },
}

impl core::fmt::Display for JonesError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            JonesError::EntryOutOfRange { entry } => {
                write!(f, "catalog entry {entry} does not exist")
            }
            JonesError::DuplicateAssignment { entry } => {
                write!(f, "catalog entry {entry} is assigned twice")
            }
            JonesError::CycleUndefined { label } => {
                write!(
                    f,
                    "no product cycle for {label}: fiber class not fixed by the loop"
                )
            }
            JonesError::InconsistentAssignments { entries } => {
                write!(
                    f,
                    "q-values on entries {entries:?} violate the refinement rule"
                )
            }
        }
    }
}

/// One catalogued product cycle: a fiber class carried around a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub loop_name: String,
    pub word: GroupWord,
    /// Index into `PAIR_NAMES`.
    pub fiber: usize,
}

/// Middle-dimension counts along the surgery description: cycles over
/// the punctured base, the image entering from the boundary torus, and
/// the resulting middle Betti number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiddleStages {
    pub punctured: usize,
    pub boundary_image: usize,
    pub middle: usize,
    /// Fiber classes killed by the boundary map, in pair coordinates.
    pub boundary_kernel: Vec<BitVec>,
}

/// Outcome of the Arf restriction to catalogued dual pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArfRestriction {
    /// Arf sum over the fully covered recorded pairs, trusting the
    /// recorded duality.
    pub arf_recorded_pairing: bool,
    /// Arf sum over the covered pairs the recomputed intersection
    /// table confirms as dual.
    pub arf_computed_pairing: bool,
    pub pairs_covered: usize,
    pub pairs_confirmed: usize,
    /// Covered recorded pairs whose members do not intersect.
    pub dropped: Vec<(usize, usize)>,
    /// Rank of the span of all covered classes.
    pub covered_dim: usize,
    pub ambient_dim: usize,
    /// True when the covered span is a proper subspace of the middle
    /// cohomology.
    pub proper: bool,
}

pub struct JonesData {
    pres: Presentation,
    base: Representation,
    pairs: Representation,
    pairing: BitMatrix,
    complex: FoxComplex,
}

fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    match (lo, hi) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!("pair of distinct indices below four"),
    }
}

/// Permutation action on unordered pairs induced by a permutation of
/// the four factors.
fn induced_pair_matrix(base: &[usize; 4]) -> BitMatrix {
    let mut perm = [0usize; 6];
    for i in 0..4 {
        for j in (i + 1)..4 {
            perm[pair_index(i, j)] = pair_index(base[i], base[j]);
        }
    }
    BitMatrix::from_permutation(&perm)
}

impl JonesData {
    /// Builds the default holonomy data and validates it: the relator
    /// dies in both representations, the disjointness pairing is
    /// invariant, and the induced pair action matches the factor
    /// action.
    #[must_use]
    pub fn new() -> Self {
        let relator = GroupWord::from_letters(&[
            (0, false),
            (0, false),
            (1, false),
            (2, false),
            (1, true),
            (2, true),
        ]);
        let pres = Presentation::new(&["a", "b1", "b2"], relator).expect("fixed data in range");

        let base_perms: [[usize; 4]; 3] = [
            [2, 1, 0, 3], // a: swap first and third factor
            [1, 0, 3, 2], // b1: (first second)(third fourth)
            [3, 2, 1, 0], // b2: (first fourth)(second third)
        ];
        let base = Representation::new(
            &pres,
            base_perms
                .iter()
                .map(|p| BitMatrix::from_permutation(p))
                .collect(),
        )
        .expect("factor permutations kill the relator");
        let pairs =
            Representation::new(&pres, base_perms.iter().map(induced_pair_matrix).collect())
                .expect("pair permutations kill the relator");

        // Complementary pairs are the disjoint ones: AB|CD, AC|BD, AD|BC.
        let pairing = BitMatrix::from_permutation(&[5, 4, 3, 2, 1, 0]);
        pairs
            .check_pairing_invariant(&pairing)
            .expect("disjointness is holonomy invariant");

        let complex = FoxComplex::new(&pres, &pairs);
        JonesData {
            pres,
            base,
            pairs,
            pairing,
            complex,
        }
    }

    #[must_use]
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    #[must_use]
    pub fn base_rep(&self) -> &Representation {
        &self.base
    }

    #[must_use]
    pub fn pair_rep(&self) -> &Representation {
        &self.pairs
    }

    #[must_use]
    pub fn pairing(&self) -> &BitMatrix {
        &self.pairing
    }

    #[must_use]
    pub fn complex(&self) -> &FoxComplex {
        &self.complex
    }

    /// Order of the holonomy image in the factor permutations.
    #[must_use]
    pub fn holonomy_order(&self) -> usize {
        let gens: Vec<BitMatrix> = (0..self.pres.generators())
            .map(|g| self.base.generator_image(g).clone())
            .collect();
        let mut seen: Vec<BitMatrix> = alloc::vec![BitMatrix::identity(self.base.dim())];
        let mut frontier = seen.clone();
        while let Some(m) = frontier.pop() {
            for g in &gens {
                let next = g.mul(&m);
                if !seen.contains(&next) {
                    seen.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        seen.len()
    }

    /// Homology of the base surface in the three coefficient systems
    /// carried by the fiber: trivial, factors, unordered pairs.
    #[must_use]
    pub fn block_dims(&self) -> [HomologyDims; 3] {
        let trivial = FoxComplex::new(&self.pres, &Representation::trivial(&self.pres));
        let factors = FoxComplex::new(&self.pres, &self.base);
        [
            trivial.homology_dims(),
            factors.homology_dims(),
            self.complex.homology_dims(),
        ]
    }

    /// Betti numbers of the total space, degrees 0 through 30. The
    /// fiber contributes in degrees divisible by seven, so each
    /// coefficient block lands in three consecutive degrees and the
    /// spectral sequence has nowhere to go.
    #[must_use]
    pub fn full_betti(&self) -> Vec<usize> {
        let [trivial, factors, pairs] = self.block_dims();
        let mut betti = alloc::vec![0usize; 31];
        for (start, dims) in [
            (0, &trivial),
            (7, &factors),
            (14, &pairs),
            (21, &factors),
            (28, &trivial),
        ] {
            betti[start] += dims.h0;
            betti[start + 1] += dims.h1;
            betti[start + 2] += dims.h2;
        }
        betti
    }

    /// The three counts of the middle-dimension computation, plus the
    /// fiber classes the boundary map kills.
    #[must_use]
    pub fn middle_stages(&self) -> MiddleStages {
        let d1 = self.complex.boundary1();
        let d2 = self.complex.boundary2();
        MiddleStages {
            punctured: d1.cols() - d1.rank(),
            boundary_image: d2.rank(),
            middle: self.complex.homology_dims().h1,
            boundary_kernel: d2.kernel_basis(),
        }
    }

    /// Cocycle representatives for the middle cohomology.
    #[must_use]
    pub fn h1_basis(&self) -> Vec<BitVec> {
        self.complex.h1_cocycle_basis()
    }

    /// Intersection Gram matrix of the middle cohomology basis under
    /// the disjointness pairing.
    #[must_use]
    pub fn gram(&self) -> BitMatrix {
        let basis = self.h1_basis();
        let dim = self.pairs.dim();
        let cocycles: Vec<Cocycle> = basis
            .iter()
            .map(|v| Cocycle::from_flat(dim, v.clone()))
            .collect();
        BitMatrix::from_fn(basis.len(), basis.len(), |i, j| {
            cup_eval(
                &self.pres,
                &self.pairs,
                &cocycles[i],
                &cocycles[j],
                &self.pairing,
            )
        })
    }

    /// The catalogued product cycles: a fiber pair class over a loop.
    /// The last entry records a naming variant whose fiber class the
    /// loop does not fix; it stays in the catalog so reports can say
    /// so.
    #[must_use]
    pub fn catalog(&self) -> Vec<CatalogEntry> {
        let a = GroupWord::generator(0);
        let b1 = GroupWord::generator(1);
        let b2 = GroupWord::generator(2);
        let conj = |g: usize| GroupWord::from_letters(&[(0, false), (g, false), (0, true)]);
        let cb1 = conj(1);
        let cb2 = conj(2);
        let rows: [(&GroupWord, &str, usize); 9] = [
            (&a, "a", 1),
            (&a, "a", 4),
            (&b1, "b1", 0),
            (&b1, "b1", 5),
            (&b2, "b2", 3),
            (&cb2, "a b2 a^-1", 5),
            (&cb2, "a b2 a^-1", 0),
            (&cb1, "a b1 a^-1", 2),
            (&cb1, "a b1 a^-1", 1),
        ];
        rows.iter()
            .map(|(w, name, fiber)| CatalogEntry {
                label: format!("{} over {}", PAIR_NAMES[*fiber], name),
                loop_name: String::from(*name),
                word: (*w).clone(),
                fiber: *fiber,
            })
            .collect()
    }

    /// Product cycle of a catalog entry as a chain over the punctured
    /// base, or an error when the loop moves the fiber class.
    pub fn catalog_cycle(&self, entry: &CatalogEntry) -> Result<BitVec, JonesError> {
        let mut omega = BitVec::zeros(self.pairs.dim());
        omega.set(entry.fiber, true);
        loop_cycle(&self.pres, &self.pairs, &entry.word, &omega).map_err(|e| match e {
            GroupError::VectorNotInvariant { .. } => JonesError::CycleUndefined {
                label: entry.label.clone(),
            },
            other => panic!("unexpected failure building a catalog cycle: {other}"),
        })
    }

    /// Pairing of a middle cocycle (flat coordinates) against a middle
    /// chain, slot by slot through the disjointness pairing.
    #[must_use]
    pub fn class_pairing(&self, cocycle: &BitVec, chain: &BitVec) -> bool {
        let m = self.pairs.dim();
        let mut total = false;
        for x in 0..self.pres.generators() {
            let u = cocycle.slice(x * m, m);
            let z = chain.slice(x * m, m);
            total ^= u.dot(&self.pairing.apply(&z));
        }
        total
    }

    /// Evaluation vector of a chain against the middle cohomology
    /// basis; equal vectors mean homologous cycles.
    #[must_use]
    pub fn eval_vector(&self, chain: &BitVec) -> BitVec {
        let basis = self.h1_basis();
        let hits: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, u)| self.class_pairing(u, chain))
            .map(|(i, _)| i)
            .collect();
        BitVec::from_indices(basis.len(), &hits)
    }

    /// Intersection number of two middle cycles, computed through the
    /// Gram matrix of the cohomology basis.
    #[must_use]
    pub fn cycle_intersection(&self, z1: &BitVec, z2: &BitVec) -> bool {
        let ginv = self.gram().inverse().expect("middle form is nondegenerate");
        self.eval_vector(z1).dot(&ginv.apply(&self.eval_vector(z2)))
    }

    /// Intersection table of the catalogued cycles. Entries whose
    /// cycle is undefined get an all-zero row and a listing in
    /// `undefined`.
    #[must_use]
    pub fn intersection_table(&self) -> CatalogIntersections {
        let catalog = self.catalog();
        let cycles: Vec<Option<BitVec>> =
            catalog.iter().map(|e| self.catalog_cycle(e).ok()).collect();
        let undefined: Vec<usize> = cycles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(i, _)| i)
            .collect();
        let ginv = self.gram().inverse().expect("middle form is nondegenerate");
        let evals: Vec<Option<BitVec>> = cycles
            .iter()
            .map(|c| c.as_ref().map(|z| self.eval_vector(z)))
            .collect();
        let table = BitMatrix::from_fn(catalog.len(), catalog.len(), |i, j| {
            match (&evals[i], &evals[j]) {
                (Some(ei), Some(ej)) => ei.dot(&ginv.apply(ej)),
                _ => false,
            }
        });
        CatalogIntersections { table, undefined }
    }

    /// Arf invariant restricted to the recorded dual pairs that are
    /// fully covered by the given `(entry, q)` assignments. Two sums
    /// come back: one trusting the recorded pairing, one keeping only
    /// the pairs the computed intersections confirm. Assignments must
    /// respect the refinement rule along every linear dependency among
    /// the covered classes.
    pub fn restricted_arf(&self, q: &[(usize, bool)]) -> Result<ArfRestriction, JonesError> {
        let catalog = self.catalog();
        let mut assigned: Vec<Option<bool>> = alloc::vec![None; catalog.len()];
        for &(entry, value) in q {
            if entry >= catalog.len() {
                return Err(JonesError::EntryOutOfRange { entry });
            }
            if assigned[entry].is_some() {
                return Err(JonesError::DuplicateAssignment { entry });
            }
            assigned[entry] = Some(value);
        }

        // Every assigned entry must actually name a cycle.
        let mut cycles: Vec<Option<BitVec>> = alloc::vec![None; catalog.len()];
        for (i, slot) in assigned.iter().enumerate() {
            if slot.is_some() {
                cycles[i] = Some(self.catalog_cycle(&catalog[i])?);
            }
        }

        let members: Vec<usize> = (0..catalog.len())
            .filter(|&i| assigned[i].is_some())
            .collect();
        let evals: Vec<BitVec> = members
            .iter()
            .map(|&i| self.eval_vector(cycles[i].as_ref().expect("assigned entries have cycles")))
            .collect();

        // A dependent subset of classes sums to zero, so the
        // refinement rule pins its q-sum to the pairwise intersections.
        if !evals.is_empty() {
            let ginv = self.gram().inverse().expect("middle form is nondegenerate");
            for kernel in BitMatrix::from_rows(evals.clone())
                .transpose()
                .kernel_basis()
            {
                let subset: Vec<usize> = (0..members.len()).filter(|&k| kernel.get(k)).collect();
                let mut total = false;
                for (x, &k) in subset.iter().enumerate() {
                    total ^= assigned[members[k]].unwrap();
                    for &l in &subset[x + 1..] {
                        total ^= evals[k].dot(&ginv.apply(&evals[l]));
                    }
                }
                if total {
                    return Err(JonesError::InconsistentAssignments {
                        entries: subset.iter().map(|&k| members[k]).collect(),
                    });
                }
            }
        }

        let covered: Vec<(usize, usize)> = RECORDED_DUAL_PAIRS
            .iter()
            .copied()
            .filter(|&(i, j)| assigned[i].is_some() && assigned[j].is_some())
            .collect();
        let mut arf_recorded = false;
        let mut arf_computed = false;
        let mut dropped = Vec::new();
        for &(i, j) in &covered {
            let term = assigned[i].unwrap() && assigned[j].unwrap();
            arf_recorded ^= term;
            let zi = cycles[i].as_ref().expect("covered members have cycles");
            let zj = cycles[j].as_ref().expect("covered members have cycles");
            if self.cycle_intersection(zi, zj) {
                arf_computed ^= term;
            } else {
                dropped.push((i, j));
            }
        }

        let covered_dim = if evals.is_empty() {
            0
        } else {
            BitMatrix::from_rows(evals).rank()
        };
        let ambient_dim = self.complex.homology_dims().h1;
        Ok(ArfRestriction {
            arf_recorded_pairing: arf_recorded,
            arf_computed_pairing: arf_computed,
            pairs_covered: covered.len(),
            pairs_confirmed: covered.len() - dropped.len(),
            dropped,
            covered_dim,
            ambient_dim,
            proper: covered_dim < ambient_dim,
        })
    }
}

impl Default for JonesData {
    fn default() -> Self {
        JonesData::new()
    }
}

/// Catalog intersection numbers with the rows that had no cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogIntersections {
    pub table: BitMatrix,
    pub undefined: Vec<usize>,
}

/// Default quadratic values: exactly the three pinned by the recorded
/// construction, zero on the first recorded pair's first member and
/// one on both members of the fourth. Everything else is left
/// unassigned ("correlated, no contribution").
#[must_use]
pub fn default_q_assignments() -> Vec<(usize, bool)> {
    alloc::vec![(0, false), (7, true), (4, true)]
}

/// Plain alternating sum of a Betti vector.
#[must_use]
pub fn alternating_sum(betti: &[usize]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

/// Alternating sum taken inside each coefficient block: the sign only
/// depends on the degree mod seven, so every block contributes its
/// base Euler characteristic without the fiber degree flipping signs.
#[must_use]
pub fn block_signed_sum(betti: &[usize]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(n, &b)| {
            if (n % 7) % 2 == 0 {
                b as i64
            } else {
                -(b as i64)
            }
        })
        .sum()
}
