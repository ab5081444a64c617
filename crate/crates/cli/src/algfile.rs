//! The on-disk algebra description: name, dimensions, sparse structure
//! constants (1-based indices, `i < j` required), row-major Gram matrix on
//! `m`, and an optional drift vector.

use flagcurv::lie::{DriftVector, LieAlgebraSpec, ReductiveSpace};
use flagcurv::Error;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// One structure constant `c^k_{ij} = c` with 1-based indices.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: f64,
}

/// Serialized form of a reductive space plus optional drift.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub h_dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    /// Row-major `(dim − h_dim)²` entries.
    pub gram: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| {
            Error::Input(format!(
                "algebra file parse error at line {}, column {}: {}",
                e.line(),
                e.column(),
                e
            ))
        })
    }

    /// Builds the algebra alone, without the splitting checks. Lets the
    /// validate command report structural defects on files whose space
    /// construction would fail.
    pub fn to_algebra(&self) -> Result<LieAlgebraSpec, Error> {
        if self.basis.len() != self.dim {
            return Err(Error::Input(format!(
                "expected {} basis labels, got {}",
                self.dim,
                self.basis.len()
            )));
        }
        for e in &self.brackets {
            if e.i < 1 || e.j < 1 || e.k < 1 {
                return Err(Error::Input(format!(
                    "structure constant indices are 1-based, got ({},{},{})",
                    e.i, e.j, e.k
                )));
            }
        }
        let entries: Vec<(usize, usize, usize, f64)> = self
            .brackets
            .iter()
            .map(|e| (e.i - 1, e.j - 1, e.k - 1, e.c))
            .collect();
        LieAlgebraSpec::from_brackets(self.name.clone(), self.dim, &entries)?
            .with_labels(self.basis.clone())
    }

    pub fn to_space(&self) -> Result<(ReductiveSpace, DriftVector), Error> {
        let algebra = self.to_algebra()?;
        let m_dim = self
            .dim
            .checked_sub(self.h_dim)
            .filter(|&m| m > 0)
            .ok_or_else(|| {
                Error::Input(format!(
                    "h_dim = {} leaves m empty (dim = {})",
                    self.h_dim, self.dim
                ))
            })?;
        if self.gram.len() != m_dim * m_dim {
            return Err(Error::Input(format!(
                "gram must have {} entries for m_dim = {m_dim}, got {}",
                m_dim * m_dim,
                self.gram.len()
            )));
        }
        let gram = DMatrix::from_row_slice(m_dim, m_dim, &self.gram);
        let rs = ReductiveSpace::new(algebra, self.h_dim, gram)?;
        let x = match &self.x {
            Some(coords) => {
                if coords.len() != m_dim {
                    return Err(Error::Input(format!(
                        "drift vector must have {m_dim} entries, got {}",
                        coords.len()
                    )));
                }
                DriftVector::new(DVector::from_column_slice(coords))
            }
            None => DriftVector::zero(m_dim),
        };
        Ok((rs, x))
    }

    /// Inverse of [`AlgebraFile::to_space`] for spaces built in code.
    pub fn from_space(rs: &ReductiveSpace, x: &DriftVector) -> Self {
        let n = rs.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let c = rs.algebra().c(i, j, k);
                    if c != 0.0 {
                        brackets.push(BracketEntry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            c,
                        });
                    }
                }
            }
        }
        let md = rs.m_dim();
        let mut gram = Vec::with_capacity(md * md);
        for r in 0..md {
            for c in 0..md {
                gram.push(rs.gram()[(r, c)]);
            }
        }
        Self {
            name: rs.algebra().name().to_string(),
            dim: n,
            h_dim: rs.h_dim(),
            basis: rs.algebra().basis_labels().to_vec(),
            brackets,
            gram,
            x: Some(x.coords.iter().cloned().collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagcurv::spaces::Builtin;

    #[test]
    fn round_trip_is_exact() {
        for builtin in [
            Builtin::Heisenberg3,
            Builtin::Su2,
            Builtin::Su2XR(0.5),
            Builtin::Abelian(4),
            Builtin::ToyGh4,
        ] {
            let (rs, x) = builtin.build().unwrap();
            let file = AlgebraFile::from_space(&rs, &x);
            let reparsed = AlgebraFile::parse(&file.to_json()).unwrap();
            assert_eq!(file, reparsed);
            let (rs2, x2) = reparsed.to_space().unwrap();
            assert_eq!(rs, rs2);
            assert_eq!(x, x2);
        }
    }

    #[test]
    fn duplicate_entry_rejected() {
        let text = r#"{"name":"d","dim":3,"h_dim":0,"basis":["e1","e2","e3"],
            "brackets":[{"i":1,"j":2,"k":3,"c":1.0},{"i":1,"j":2,"k":3,"c":2.0}],
            "gram":[1,0,0,0,1,0,0,0,1]}"#;
        let file = AlgebraFile::parse(text).unwrap();
        let err = file.to_space().unwrap_err();
        assert!(err.to_string().contains("duplicate structure constant (1,2,3)"));
    }

    #[test]
    fn unordered_indices_rejected() {
        let text = r#"{"name":"d","dim":3,"h_dim":0,"basis":["e1","e2","e3"],
            "brackets":[{"i":2,"j":1,"k":3,"c":1.0}],
            "gram":[1,0,0,0,1,0,0,0,1]}"#;
        let err = AlgebraFile::parse(text).unwrap().to_space().unwrap_err();
        assert!(err.to_string().contains("i < j"));
    }

    #[test]
    fn indefinite_gram_rejected() {
        let text = r#"{"name":"d","dim":2,"h_dim":0,"basis":["e1","e2"],
            "brackets":[],"gram":[1,0,0,-1]}"#;
        let err = AlgebraFile::parse(text).unwrap().to_space().unwrap_err();
        assert!(err.to_string().contains("positive definite"));
    }
}
