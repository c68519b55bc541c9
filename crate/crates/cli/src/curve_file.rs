//! CSV curve files: `lambda, W0..Wn, S, I` followed by the optional quotient
//! columns, one row per grid point, 17 significant digits.

use std::io::{Read, Write};

use wulff_core::FamilyCurve;

use crate::CliError;

pub fn header(curve: &FamilyCurve) -> Vec<String> {
    let mut h = vec!["lambda".to_string()];
    h.extend((0..=curve.dim).map(|i| format!("W{i}")));
    h.push("S".into());
    h.extend(curve.columns.iter().map(|q| q.to_string()));
    h
}

pub fn rows(curve: &FamilyCurve) -> Vec<Vec<f64>> {
    curve
        .records
        .iter()
        .map(|r| {
            let mut row = vec![r.lambda];
            row.extend(&r.w.w);
            row.push(r.w.surface());
            row.extend(&r.values);
            row
        })
        .collect()
}

pub fn write_curve<W: Write>(curve: &FamilyCurve, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header(curve))?;
    for row in rows(curve) {
        w.write_record(row.iter().map(|x| format!("{x:.16e}")))?;
    }
    w.flush()?;
    Ok(())
}

/// A parsed curve file.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }
}

pub fn read_curve<R: Read>(input: R) -> Result<CurveTable, CliError> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(String::from).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|s| s.trim().parse::<f64>().map_err(|e| CliError::Input(format!("bad number `{s}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.windows(2).any(|w| !(w[1][0] > w[0][0])) {
        return Err(CliError::Input("curve rows are not sorted by lambda".into()));
    }
    Ok(CurveTable { header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_rows() {
        let text = "lambda,W0\n1.0,2.0\n0.5,1.0\n";
        assert!(matches!(read_curve(text.as_bytes()), Err(CliError::Input(_))));
        let t = read_curve("lambda,W0\n0.5,1.0\n1.0,2.0\n".as_bytes()).unwrap();
        assert_eq!(t.column("W0"), Some(vec![1.0, 2.0]));
        assert_eq!(t.column("S"), None);
    }
}
