//! File formats: numeric CSV input, JSON artifacts, grid specifications.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use aaa_core::{BoundaryCurve, Complex64, Error as CoreError, SampleSet};
use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// A parsed CSV record and its 1-based line number in the file.
pub struct Row {
    pub line: usize,
    pub values: Vec<f64>,
}

/// Reads a CSV of numbers. A first line that does not parse is taken as a
/// header; any later unparsable field is an error naming its row.
pub fn read_numeric_csv(path: &Path, min_cols: usize, max_cols: usize) -> Result<Vec<Row>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    let mut rows = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let record = record.with_context(|| format!("{}: malformed CSV", path.display()))?;
        let line = record.position().map_or(k + 1, |p| p.line() as usize);
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(f64::from_str).collect();
        match parsed {
            Err(_) if k == 0 => continue,
            Err(_) => bail!("{}: row {line}: non-numeric field", path.display()),
            Ok(values) => {
                if values.len() < min_cols || values.len() > max_cols {
                    bail!(
                        "{}: row {line}: expected {} columns, found {}",
                        path.display(),
                        if min_cols == max_cols {
                            min_cols.to_string()
                        } else {
                            format!("{min_cols} to {max_cols}")
                        },
                        values.len()
                    );
                }
                if let Some(v) = values.iter().find(|v| !v.is_finite()) {
                    bail!("{}: row {line}: non-finite value {v}", path.display());
                }
                rows.push(Row { line, values });
            }
        }
    }
    if rows.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    Ok(rows)
}

/// Samples from a CSV with columns `re(z), im(z), re(f), im(f)`.
pub fn read_samples(path: &Path) -> Result<SampleSet> {
    let rows = read_numeric_csv(path, 4, 4)?;
    let z = rows.iter().map(|r| Complex64::new(r.values[0], r.values[1])).collect();
    let f = rows.iter().map(|r| Complex64::new(r.values[2], r.values[3])).collect();
    SampleSet::new(z, f).map_err(|e| match e {
        CoreError::DuplicatePoint { first, second } => anyhow!(
            "{}: row {} repeats the point z of row {}",
            path.display(),
            rows[second].line,
            rows[first].line
        ),
        other => anyhow!("{}: {other}", path.display()),
    })
}

/// How corner indices of a boundary geometry are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CornerMode {
    /// Every vertex is a corner (polygon).
    All,
    /// No corners (discretized smooth curve).
    None,
    /// Vertices whose optional third column is nonzero.
    Column,
}

/// Boundary vertices from a CSV with columns `re, im[, corner]`.
pub fn read_curve(path: &Path, corners: CornerMode) -> Result<BoundaryCurve> {
    let rows = read_numeric_csv(path, 2, 3)?;
    let vertices = rows.iter().map(|r| Complex64::new(r.values[0], r.values[1])).collect();
    let corner_indices = match corners {
        CornerMode::All => (0..rows.len()).collect(),
        CornerMode::None => Vec::new(),
        CornerMode::Column => rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.values.get(2).is_some_and(|&v| v != 0.0))
            .map(|(i, _)| i)
            .collect(),
    };
    BoundaryCurve::new(vertices, Some(corner_indices)).map_err(|e| anyhow!("{}: {e}", path.display()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    serde_json::from_reader(std::io::BufReader::new(file))
        .with_context(|| format!("{}: invalid JSON", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut out = create(path)?;
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(file))
}

/// A writer on the given file, or on stdout when no path is given.
pub fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(std::io::stdout())),
    })
}

/// Rectangular evaluation grid, written `re_min,re_max,im_min,im_max,nx,ny`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    /// The point in column `i`, row `j`.
    pub fn point(&self, i: usize, j: usize) -> Complex64 {
        let x = self.re_min + (self.re_max - self.re_min) * i as f64 / (self.nx - 1) as f64;
        let y = self.im_min + (self.im_max - self.im_min) * j as f64 / (self.ny - 1) as f64;
        Complex64::new(x, y)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err("expected re_min,re_max,im_min,im_max,nx,ny".into());
        }
        let real = |k: usize| parts[k].parse::<f64>().map_err(|e| format!("{}: {e}", parts[k]));
        let count = |k: usize| parts[k].parse::<usize>().map_err(|e| format!("{}: {e}", parts[k]));
        let g = GridSpec {
            re_min: real(0)?,
            re_max: real(1)?,
            im_min: real(2)?,
            im_max: real(3)?,
            nx: count(4)?,
            ny: count(5)?,
        };
        if !(g.re_min < g.re_max && g.im_min < g.im_max) {
            return Err("grid bounds must satisfy min < max".into());
        }
        if g.nx < 2 || g.ny < 2 {
            return Err("grid needs at least 2 points in each direction".into());
        }
        Ok(g)
    }
}
