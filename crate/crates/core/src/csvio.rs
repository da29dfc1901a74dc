//! Self-describing CSV files.
//!
//! Series files:
//!
//! ```text
//! # kind=<label> grid=<t_min,dt,n> columns=t,value        (real)
//! # kind=<label> grid=<t_min,dt,n> columns=t,re,im        (complex)
//! ```
//!
//! Scalogram files hold one real-valued part per file:
//!
//! ```text
//! # kind=<label> grid=<t_min,dt,n> scales=<a1;a2;...> fc=<f_c>
//! c[a1, 0],c[a1, 1],...
//! ```
//!
//! Every float is written with 17 significant digits, which reads back to
//! the identical `f64`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::cwt::{ScaleRange, Scalogram};
use crate::error::{Error, Result};
use crate::grid::{ComplexSeries, RealSeries, Series, TimeGrid};

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| Error::Csv(format!("not a number: `{s}`")))
}

fn grid_field(g: &TimeGrid) -> String {
    format!("{},{},{}", num(g.t_min()), num(g.dt()), g.len())
}

fn parse_grid(s: &str) -> Result<TimeGrid> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Csv(format!("grid must be t_min,dt,n, got `{s}`")));
    }
    let n = parts[2].trim().parse::<usize>().map_err(|_| Error::Csv(format!("bad sample count `{}`", parts[2])))?;
    TimeGrid::new(parse_num(parts[0])?, parse_num(parts[1])?, n)
}

/// Parsed `# key=value ...` header line.
#[derive(Debug, Clone, PartialEq)]
pub struct Header {
    fields: BTreeMap<String, String>,
}

impl Header {
    fn parse(line: &str) -> Result<Self> {
        let body = line.strip_prefix('#').ok_or_else(|| Error::Csv("missing `#` header line".into()))?;
        let mut fields = BTreeMap::new();
        for token in body.split_whitespace() {
            let (k, v) =
                token.split_once('=').ok_or_else(|| Error::Csv(format!("header token `{token}` is not key=value")))?;
            fields.insert(k.to_string(), v.to_string());
        }
        Ok(Self { fields })
    }

    pub fn get(&self, key: &str) -> Result<&str> {
        self.fields.get(key).map(String::as_str).ok_or_else(|| Error::Csv(format!("header has no `{key}`")))
    }

    pub fn kind(&self) -> Result<&str> {
        self.get("kind")
    }

    pub fn grid(&self) -> Result<TimeGrid> {
        parse_grid(self.get("grid")?)
    }
}

fn split_header(text: &str) -> Result<(Header, impl Iterator<Item = &str>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = Header::parse(lines.next().ok_or_else(|| Error::Csv("empty file".into()))?)?;
    Ok((header, lines))
}

fn parse_row(line: &str, width: usize) -> Result<Vec<f64>> {
    let cells: Vec<f64> = line.split(',').map(parse_num).collect::<Result<_>>()?;
    if cells.len() != width {
        return Err(Error::Csv(format!("expected {width} columns, got {}", cells.len())));
    }
    Ok(cells)
}

pub fn write_real_series(kind: &str, x: &RealSeries) -> String {
    let g = x.grid();
    let mut out = format!("# kind={kind} grid={} columns=t,value\n", grid_field(g));
    for (k, v) in x.values().iter().enumerate() {
        let _ = writeln!(out, "{},{}", num(g.time(k)), num(*v));
    }
    out
}

pub fn write_complex_series(kind: &str, x: &ComplexSeries) -> String {
    let g = x.grid();
    let mut out = format!("# kind={kind} grid={} columns=t,re,im\n", grid_field(g));
    for (k, v) in x.values().iter().enumerate() {
        let _ = writeln!(out, "{},{},{}", num(g.time(k)), num(v.re), num(v.im));
    }
    out
}

fn read_columns(text: &str, expected: &str) -> Result<(Header, TimeGrid, Vec<Vec<f64>>)> {
    let (header, lines) = split_header(text)?;
    let columns = header.get("columns")?;
    if columns != expected {
        return Err(Error::Csv(format!("expected columns {expected}, got {columns}")));
    }
    let width = expected.split(',').count();
    let grid = header.grid()?;
    let rows: Vec<Vec<f64>> = lines.map(|l| parse_row(l, width)).collect::<Result<_>>()?;
    if rows.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), actual: rows.len() });
    }
    Ok((header, grid, rows))
}

pub fn read_real_series(text: &str) -> Result<(Header, RealSeries)> {
    let (header, grid, rows) = read_columns(text, "t,value")?;
    let x = Series::new(grid, rows.iter().map(|r| r[1]).collect())?;
    Ok((header, x))
}

pub fn read_complex_series(text: &str) -> Result<(Header, ComplexSeries)> {
    let (header, grid, rows) = read_columns(text, "t,re,im")?;
    let x = Series::new(grid, rows.iter().map(|r| Complex64::new(r[1], r[2])).collect())?;
    Ok((header, x))
}

/// One real-valued view of a scalogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Real,
    Imag,
    Modulus,
    Phase,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::Real, Part::Imag, Part::Modulus, Part::Phase];

    pub fn name(&self) -> &'static str {
        match self {
            Part::Real => "real",
            Part::Imag => "imag",
            Part::Modulus => "modulus",
            Part::Phase => "phase",
        }
    }

    pub fn apply(&self, c: Complex64) -> f64 {
        match self {
            Part::Real => c.re,
            Part::Imag => c.im,
            Part::Modulus => c.norm(),
            Part::Phase => c.arg(),
        }
    }
}

pub fn write_scalogram(kind: &str, s: &Scalogram, part: Part) -> String {
    let scales: Vec<String> = s.scales().scales().iter().map(|a| num(*a)).collect();
    let mut out = format!(
        "# kind={kind} grid={} scales={} fc={}\n",
        grid_field(s.grid()),
        scales.join(";"),
        num(s.center_frequency())
    );
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|&c| num(part.apply(c))).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// A scalogram file read back: header plus the real-valued rows it holds.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalogramTable {
    pub header: Header,
    pub grid: TimeGrid,
    pub scales: ScaleRange,
    pub center_frequency: f64,
    pub rows: Vec<Vec<f64>>,
}

impl ScalogramTable {
    /// Rebuild a real scalogram from a `real` file.
    pub fn into_real_scalogram(self) -> Result<Scalogram> {
        let coeffs = self.rows.into_iter().map(|r| r.into_iter().map(|v| Complex64::new(v, 0.0)).collect()).collect();
        Scalogram::from_rows(self.scales, self.grid, coeffs, self.center_frequency)
    }

    /// Rebuild a complex scalogram from its `real` and `imag` files.
    pub fn combine(real: Self, imag: Self) -> Result<Scalogram> {
        if real.grid != imag.grid || real.scales != imag.scales {
            return Err(Error::GridMismatch);
        }
        let coeffs = real
            .rows
            .into_iter()
            .zip(imag.rows)
            .map(|(re, im)| re.into_iter().zip(im).map(|(a, b)| Complex64::new(a, b)).collect())
            .collect();
        Scalogram::from_rows(real.scales, real.grid, coeffs, real.center_frequency)
    }
}

pub fn read_scalogram(text: &str) -> Result<ScalogramTable> {
    let (header, lines) = split_header(text)?;
    let grid = header.grid()?;
    let scales = ScaleRange::new(header.get("scales")?.split(';').map(parse_num).collect::<Result<_>>()?)?;
    let center_frequency = parse_num(header.get("fc")?)?;
    let rows: Vec<Vec<f64>> = lines.map(|l| parse_row(l, grid.len())).collect::<Result<_>>()?;
    if rows.len() != scales.len() {
        return Err(Error::LengthMismatch { expected: scales.len(), actual: rows.len() });
    }
    Ok(ScalogramTable { header, grid, scales, center_frequency, rows })
}
