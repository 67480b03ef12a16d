//! JSON representation files:
//!
//! ```json
//! { "dimension": 2, "generators": ["a", "b"],
//!   "matrices": [[["1", "1"], ["0", "1"]], [["1", "0"], ["1", "1"]]] }
//! ```
//!
//! Entries are rationals written as strings (`"3"`, `"-7/3"`), rows in order.

use serde::{Deserialize, Serialize};

use super::{RepError, Representation};
use crate::matrix::Matrix;
use crate::words::Presentation;
use crate::{Rational, RationalRep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    pub dimension: usize,
    pub generators: Vec<String>,
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl RepFile {
    pub fn from_rep(rep: &RationalRep) -> Self {
        RepFile {
            dimension: rep.n,
            generators: rep.generators.clone(),
            matrices: rep
                .matrices
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, RepError> {
        serde_json::from_str(text).map_err(|e| RepError::File(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Converts to a representation of `p`, matching generators by name and
    /// checking the relators.
    pub fn to_rep(&self, p: &Presentation) -> Result<RationalRep, RepError> {
        if self.generators.len() != self.matrices.len() {
            return Err(RepError::File("one matrix per generator required".into()));
        }
        let mut mats = Vec::with_capacity(p.generator_count());
        for name in p.generators() {
            let k = self
                .generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| RepError::File(format!("no matrix for generator `{name}`")))?;
            mats.push(self.matrix(k)?);
        }
        if mats.len() != self.generators.len() {
            return Err(RepError::File(
                "file names generators not in the presentation".into(),
            ));
        }
        Representation::for_presentation_dim(p, self.dimension, mats)
    }

    fn matrix(&self, k: usize) -> Result<Matrix<Rational>, RepError> {
        let rows = &self.matrices[k];
        if rows.len() != self.dimension || rows.iter().any(|r| r.len() != self.dimension) {
            return Err(RepError::Shape {
                generator: k,
                n: self.dimension,
            });
        }
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        s.trim()
                            .parse::<Rational>()
                            .map_err(|_| RepError::File(format!("bad rational `{s}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(parsed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_presentation;

    #[test]
    fn round_trip() {
        let p = parse_presentation("<a,b|>").unwrap();
        let text = r#"{"dimension": 2, "generators": ["b", "a"],
            "matrices": [[["1","0"],["1","1"]], [["1","1/2"],["0","-3"]]]}"#;
        let f = RepFile::parse(text).unwrap();
        let rep = f.to_rep(&p).unwrap();
        assert_eq!(rep.matrices()[0][(0, 1)], crate::qq(1, 2));
        let again = RepFile::parse(&RepFile::from_rep(&rep).to_json()).unwrap();
        assert_eq!(again.to_rep(&p).unwrap(), rep);
    }

    #[test]
    fn rejects_bad_files() {
        let p = parse_presentation("<a|a^2>").unwrap();
        let bad = |t: &str| RepFile::parse(t).and_then(|f| f.to_rep(&p));
        assert!(bad(r#"{"dimension":1,"generators":["a"],"matrices":[[["2"]]]}"#).is_err());
        assert!(bad(r#"{"dimension":1,"generators":["b"],"matrices":[[["1"]]]}"#).is_err());
        assert!(bad(r#"{"dimension":2,"generators":["a"],"matrices":[[["1"]]]}"#).is_err());
        assert!(bad(r#"{"dimension":1,"generators":["a"],"matrices":[[["x"]]]}"#).is_err());
        assert!(bad(r#"{"dimension":1,"generators":["a"],"matrices":[[["-1"]]]}"#).is_ok());
    }
}
