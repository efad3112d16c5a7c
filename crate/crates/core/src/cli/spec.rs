//! JSON matroid specifications.

use serde::{Deserialize, Serialize};

use crate::builders::{graphic, linear_gf2};
use crate::error::Result;
use crate::matroid::{validate_family, Matroid, ValidationLevel};

/// A matroid as it appears on the command line, optionally wrapped in
/// `{"dual": ...}` any number of times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidSpec {
    Dual { dual: Box<MatroidSpec> },
    Plain(PlainSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PlainSpec {
    Uniform {
        r: usize,
        n: usize,
    },
    Graphic {
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    },
    Gf2 {
        columns: Vec<Vec<u8>>,
    },
    Circuits {
        ground: Vec<String>,
        circuits: Vec<Vec<String>>,
    },
}

impl MatroidSpec {
    pub fn parse(text: &str) -> std::result::Result<MatroidSpec, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Builds the matroid and checks its circuits at `level`.
    pub fn build(&self, level: ValidationLevel) -> Result<Matroid> {
        match self {
            MatroidSpec::Dual { dual } => dual.build(level)?.dual(),
            MatroidSpec::Plain(p) => {
                let m = match p {
                    PlainSpec::Uniform { r, n } => Matroid::uniform(*r, *n)?,
                    PlainSpec::Graphic { vertices, edges } => graphic(vertices, edges)?,
                    PlainSpec::Gf2 { columns } => linear_gf2(columns)?,
                    PlainSpec::Circuits { ground, circuits } => {
                        return Matroid::from_labeled_circuits(ground, circuits, level)
                    }
                };
                validate_family(m.circuits(), level)?;
                Ok(m)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let u = MatroidSpec::parse(r#"{"kind":"uniform","r":2,"n":4}"#).unwrap();
        assert_eq!(u.build(ValidationLevel::Full).unwrap().len(), 4);
        let g = MatroidSpec::parse(
            r#"{"kind":"graphic","vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["c","a"]]}"#,
        )
        .unwrap();
        let m = g.build(ValidationLevel::Full).unwrap();
        assert_eq!(m.rank(m.ground()), 2);
        let b = MatroidSpec::parse(r#"{"kind":"gf2","columns":[[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(b.build(ValidationLevel::Full).unwrap().circuits().len(), 1);
        let d = MatroidSpec::parse(r#"{"dual":{"dual":{"kind":"uniform","r":1,"n":3}}}"#).unwrap();
        assert_eq!(
            d.build(ValidationLevel::Full).unwrap(),
            Matroid::uniform(1, 3).unwrap()
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(MatroidSpec::parse(r#"{"kind":"uniform","r":2}"#).is_err());
        assert!(MatroidSpec::parse(r#"{"kind":"sphere"}"#).is_err());
        let bad = MatroidSpec::parse(
            r#"{"kind":"circuits","ground":["a","b","c","d"],"circuits":[["a","b"],["b","c","d"]]}"#,
        )
        .unwrap();
        assert!(bad.build(ValidationLevel::Full).is_err());
        assert!(bad.build(ValidationLevel::Antichain).is_ok());
    }
}
