//! TOML input schemas and their conversion into core objects.
//!
//! Every schema rejects unknown keys, and every conversion turns a
//! malformed file into an error message instead of a panic, so the
//! binary can exit with a usage failure.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use kervaire_core::f2::{BitMatrix, BitVec};
use kervaire_core::grouphom::clifford::{OrthogonalRep, SignedPerm};
use kervaire_core::grouphom::Presentation;
use kervaire_core::jones::{JonesData, PAIR_NAMES};
use kervaire_core::mfldcoh::{MonodromyData, RingElement, TruncatedRing};
use kervaire_core::quadform::QuadraticSpace;

/// Bundled assignment table matching the recorded construction.
pub const DEFAULT_Q_TABLE: &str = include_str!("../data/default_q_table.toml");

fn parse_file<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn bit_value(v: u8) -> Result<bool> {
    match v {
        0 => Ok(false),
        1 => Ok(true),
        _ => bail!("entries must be 0 or 1, got {v}"),
    }
}

fn bit_matrix(rows: &[Vec<u8>]) -> Result<BitMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != cols {
            bail!("row {i} has {} entries, expected {cols}", row.len());
        }
        for &b in row {
            bit_value(b)?;
        }
        out.push(BitVec::from_bits(row));
    }
    Ok(BitMatrix::from_rows(out))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QTableFile {
    #[serde(default)]
    assignment: Vec<QAssignment>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QAssignment {
    #[serde(rename = "loop")]
    loop_name: String,
    fiber: String,
    q: u8,
}

/// Reads a quadratic assignment table, or the bundled default when no
/// path is given, and resolves each row against the cycle catalog.
pub fn read_q_table(path: Option<&Path>, data: &JonesData) -> Result<Vec<(usize, bool)>> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => String::from(DEFAULT_Q_TABLE),
    };
    let parsed: QTableFile = toml::from_str(&text).context("parsing the assignment table")?;
    let catalog = data.catalog();
    let mut out = Vec::with_capacity(parsed.assignment.len());
    for row in &parsed.assignment {
        let index = catalog
            .iter()
            .position(|e| e.loop_name == row.loop_name && PAIR_NAMES[e.fiber] == row.fiber);
        let Some(index) = index else {
            let labels: Vec<&str> = catalog.iter().map(|e| e.label.as_str()).collect();
            bail!(
                "no catalog entry '{} over {}'; catalogued: {}",
                row.fiber,
                row.loop_name,
                labels.join(", ")
            );
        };
        out.push((index, bit_value(row.q).context("q value")?));
    }
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GysinFile {
    truncations: Vec<u32>,
    pi: Vec<Vec<u32>>,
}

/// Reads a truncated ring description plus the class to divide by.
pub fn read_gysin(path: &Path) -> Result<(TruncatedRing, RingElement)> {
    let parsed: GysinFile = parse_file(path)?;
    let ring = TruncatedRing::new(parsed.truncations).map_err(|e| anyhow!("{e}"))?;
    let monomials: Vec<&[u32]> = parsed.pi.iter().map(Vec::as_slice).collect();
    let pi = ring.element(&monomials).map_err(|e| anyhow!("{e}"))?;
    Ok((ring, pi))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WangFile {
    dims: Vec<usize>,
    matrices: Vec<Vec<Vec<u8>>>,
}

/// Reads graded fiber dimensions and one monodromy matrix per degree.
pub fn read_wang(path: &Path) -> Result<MonodromyData> {
    let parsed: WangFile = parse_file(path)?;
    let maps = parsed
        .matrices
        .iter()
        .enumerate()
        .map(|(d, rows)| bit_matrix(rows).with_context(|| format!("matrix in degree {d}")))
        .collect::<Result<Vec<_>>>()?;
    MonodromyData::new(parsed.dims, maps).map_err(|e| anyhow!("{e}"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlatFile {
    generator: Vec<FlatGenerator>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlatGenerator {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

/// Reads signed-permutation images for the three generators of the
/// base surface group.
pub fn read_flat(path: &Path) -> Result<(Presentation, OrthogonalRep)> {
    let parsed: FlatFile = parse_file(path)?;
    let pres = Presentation::squared_generator_surface(1);
    if parsed.generator.len() != pres.generators() {
        bail!(
            "expected {} generator images, got {}",
            pres.generators(),
            parsed.generator.len()
        );
    }
    let images = parsed
        .generator
        .into_iter()
        .enumerate()
        .map(|(g, img)| {
            SignedPerm::new(img.perm, img.signs).map_err(|e| anyhow!("generator {g}: {e}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let orth = OrthogonalRep::new(&pres, images).map_err(|e| anyhow!("{e}"))?;
    Ok((pres, orth))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArfFile {
    gram: Vec<Vec<u8>>,
    q: Vec<u8>,
}

/// Reads an alternating Gram matrix with basis values of a quadratic
/// refinement.
pub fn read_arf(path: &Path) -> Result<QuadraticSpace> {
    let parsed: ArfFile = parse_file(path)?;
    let gram = bit_matrix(&parsed.gram).context("gram matrix")?;
    for &b in &parsed.q {
        bit_value(b).context("q vector")?;
    }
    QuadraticSpace::new(gram, BitVec::from_bits(&parsed.q)).map_err(|e| anyhow!("{e}"))
}
