//! `{"n": 2, "entries": [[[re, im], ...], ...]}`, row-major.

use std::path::Path;

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use sectoria_core::CMatrix;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    #[cfg(test)]
    pub fn from_matrix(a: &CMatrix) -> Self {
        let n = a.dim();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| [a[(i, j)].re, a[(i, j)].im]).collect())
            .collect();
        Self { n, entries }
    }

    pub fn to_matrix(&self) -> Result<CMatrix> {
        if self.n == 0 {
            bail!("matrix dimension must be at least 1");
        }
        if self.entries.len() != self.n {
            bail!("expected {} rows, found {}", self.n, self.entries.len());
        }
        let mut data = Vec::with_capacity(self.n * self.n);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.n {
                bail!("row {i} has {} entries, expected {}", row.len(), self.n);
            }
            data.extend(row.iter().map(|&[re, im]| Complex64::new(re, im)));
        }
        Ok(CMatrix::from_row_major(self.n, data)?)
    }

    pub fn parse(text: &str) -> Result<CMatrix> {
        let file: MatrixFile = serde_json::from_str(text).context("malformed matrix JSON")?;
        file.to_matrix()
    }

    pub fn load(path: &Path) -> Result<CMatrix> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"n": 2, "entries": [[[0,0],[1,0]],[[0,0],[0,0]]]}"#;
        let a = MatrixFile::parse(text).unwrap();
        assert_eq!(a[(0, 1)], Complex64::new(1.0, 0.0));
        let again = MatrixFile::parse(&serde_json::to_string(&MatrixFile::from_matrix(&a)).unwrap()).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(MatrixFile::parse(r#"{"n": 2, "entries": [[[0,0],[1,0]]]}"#).is_err());
        assert!(MatrixFile::parse(r#"{"n": 0, "entries": []}"#).is_err());
        assert!(MatrixFile::parse(r#"{"n": 1, "entries": [[[0,0,0]]]}"#).is_err());
        assert!(MatrixFile::parse(r#"{"n": 1, "entries": [[[0,0]]]"#).is_err());
        assert!(MatrixFile::parse(r#"{"n": 1, "entries": [[[0,0]]], "x": 1}"#).is_err());
    }
}
