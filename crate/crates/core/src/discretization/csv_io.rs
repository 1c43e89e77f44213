//! Field CSV format: header `x,y,re,im` (`x1,x2,y1,y2,re,im` on squares), one
//! row per product node in row-major order, 17 significant digits.

use std::io::{Read, Write};

use super::{BipartiteField, BoxDomain, ClosedField};
use crate::{CMatrix, Error, Result, C64};

fn header(dim: usize) -> Vec<&'static str> {
    match dim {
        1 => vec!["x", "y", "re", "im"],
        _ => vec!["x1", "x2", "y1", "y2", "re", "im"],
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_matrix<W: Write>(
    writer: W,
    dim: usize,
    points: &[Vec<f64>],
    values: &CMatrix,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(header(dim))?;
    let mut row = Vec::with_capacity(2 * dim + 2);
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            row.clear();
            row.extend(p.iter().chain(q).map(|v| fmt(*v)));
            let z = values[(i, j)];
            row.push(fmt(z.re));
            row.push(fmt(z.im));
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn read_matrix<R: Read>(reader: R, dim: usize, points: &[Vec<f64>]) -> Result<CMatrix> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let expected_header = header(dim);
    let got: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if got != expected_header {
        return Err(Error::Csv(format!(
            "expected header {}, got {}",
            expected_header.join(","),
            got.join(",")
        )));
    }
    let m = points.len();
    let scale = points.iter().flatten().fold(1.0f64, |a, b| a.max(b.abs()));
    let mut values = CMatrix::zeros(m, m);
    let mut count = 0;
    for (n, record) in r.records().enumerate() {
        let record = record?;
        if n >= m * m {
            count = n + 1;
            continue;
        }
        let nums: Vec<f64> = record
            .iter()
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Csv(format!("row {}: {e}", n + 2)))?;
        if nums.len() != 2 * dim + 2 {
            return Err(Error::Csv(format!(
                "row {}: expected {} columns",
                n + 2,
                2 * dim + 2
            )));
        }
        let (i, j) = (n / m, n % m);
        let coords = points[i].iter().chain(&points[j]);
        if coords.zip(&nums).any(|(a, b)| (a - b).abs() > 1e-9 * scale) {
            return Err(Error::Csv(format!(
                "row {}: node coordinates do not match the grid",
                n + 2
            )));
        }
        values[(i, j)] = C64::new(nums[2 * dim], nums[2 * dim + 1]);
        count = n + 1;
    }
    if count != m * m {
        return Err(Error::Csv(format!(
            "expected {} rows for this grid, got {count}",
            m * m
        )));
    }
    Ok(values)
}

fn site_points(domain: BoxDomain) -> Vec<Vec<f64>> {
    (0..domain.sites()).map(|s| domain.site_point(s)).collect()
}

fn closed_points(domain: BoxDomain) -> Vec<Vec<f64>> {
    (0..domain.closed_sites())
        .map(|c| domain.closed_point(c))
        .collect()
}

pub fn write_field<W: Write>(writer: W, field: &BipartiteField) -> Result<()> {
    let d = field.domain();
    write_matrix(writer, d.dim(), &site_points(d), field.values())
}

/// Reads a field over the interior nodes of `domain`; row count, order and
/// coordinates must match the grid.
pub fn read_field<R: Read>(reader: R, domain: BoxDomain) -> Result<BipartiteField> {
    let values = read_matrix(reader, domain.dim(), &site_points(domain))?;
    BipartiteField::new(domain, values)
}

pub fn write_closed_field<W: Write>(writer: W, field: &ClosedField) -> Result<()> {
    let d = field.domain();
    write_matrix(writer, d.dim(), &closed_points(d), field.values())
}

pub fn read_closed_field<R: Read>(reader: R, domain: BoxDomain) -> Result<ClosedField> {
    let values = read_matrix(reader, domain.dim(), &closed_points(domain))?;
    ClosedField::new(domain, values)
}
