//! JSON file formats: fields, defining sets and construction specs.

use std::fs;
use std::path::Path;

use mincode_core::constructions::ConstructionSpec;
use mincode_core::gf::{field_make, FieldSpec};
use mincode_core::linalg::{GFVector, VectorMultiset};
use serde::{Deserialize, Serialize};

use crate::error::{AppError, Result};

/// `{"p":…,"e":…,"modulus":[c_0,…,c_e]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

impl FieldJson {
    pub fn from_field(field: &FieldSpec) -> Self {
        FieldJson {
            p: field.characteristic(),
            e: field.degree(),
            modulus: field.modulus().to_vec(),
        }
    }

    pub fn to_field(&self) -> Result<FieldSpec> {
        Ok(field_make(u64::from(self.p), self.e, Some(&self.modulus))?)
    }
}

/// A defining set on disk. Vectors are sorted; repeated rows are multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSetFile {
    pub field: FieldJson,
    pub k: usize,
    pub vectors: Vec<Vec<u32>>,
}

impl DefiningSetFile {
    pub fn from_multiset(d: &VectorMultiset) -> Self {
        DefiningSetFile {
            field: FieldJson::from_field(d.field()),
            k: d.ambient_dim(),
            vectors: d.iter().map(GFVector::values).collect(),
        }
    }

    pub fn to_multiset(&self) -> Result<VectorMultiset> {
        let field = self.field.to_field()?;
        Ok(VectorMultiset::from_values(&field, self.k, &self.vectors)?)
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| AppError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_defining_set(path: &Path) -> Result<VectorMultiset> {
    let file: DefiningSetFile = serde_json::from_str(&read_text(path)?)?;
    file.to_multiset()
}

pub fn defining_set_json(d: &VectorMultiset) -> String {
    let mut text = serde_json::to_string(&DefiningSetFile::from_multiset(d)).expect("plain data");
    text.push('\n');
    text
}

pub fn write_defining_set(path: &Path, d: &VectorMultiset) -> Result<()> {
    write_text(path, &defining_set_json(d))
}

/// Inline JSON, or the path of a file holding it.
pub fn parse_spec(arg: &str) -> Result<ConstructionSpec> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        read_text(Path::new(arg))?
    };
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mincode_core::constructions::Family;
    use mincode_core::gf::field_of_order;

    #[test]
    fn field_json_roundtrip() {
        for q in [2, 4, 9, 27] {
            let f = field_of_order(q).unwrap();
            let j = FieldJson::from_field(&f);
            assert_eq!(j.to_field().unwrap(), f);
        }
        let text =
            serde_json::to_string(&FieldJson::from_field(&field_of_order(4).unwrap())).unwrap();
        assert_eq!(text, r#"{"p":2,"e":2,"modulus":[1,1,1]}"#);
        let bad = FieldJson {
            p: 2,
            e: 2,
            modulus: vec![1, 0, 1],
        };
        assert!(bad.to_field().is_err());
    }

    #[test]
    fn defining_set_keeps_multiplicity_and_order() {
        let f = field_of_order(3).unwrap();
        let d = VectorMultiset::from_values(&f, 2, &[vec![1, 2], vec![0, 1], vec![1, 2]]).unwrap();
        let text = defining_set_json(&d);
        assert_eq!(
            text,
            "{\"field\":{\"p\":3,\"e\":1,\"modulus\":[0,1]},\"k\":2,\"vectors\":[[0,1],[1,2],[1,2]]}\n"
        );
        let back: DefiningSetFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_multiset().unwrap(), d);
    }

    #[test]
    fn spec_json_shapes() {
        let spec =
            parse_spec(r#"{"family":"monomial","q":3,"k":4,"h":3,"projective":false}"#).unwrap();
        assert_eq!(
            spec,
            ConstructionSpec::new(Family::Monomial { q: 3, k: 4, h: 3 })
        );
        let lift = parse_spec(
            r#"{"family":"lift","inner":[{"family":"weight_le","q":3,"k":6,"h":2},{"family":"weight_le","q":3,"k":6,"h":2}]}"#,
        )
        .unwrap();
        assert!(matches!(lift.family, Family::Lift { .. }));
        let union =
            parse_spec(r#"{"family":"hyperplane_union","q":3,"k":4,"S":[[1,0,0,0]]}"#).unwrap();
        assert!(matches!(union.family, Family::HyperplaneUnion { .. }));
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(parse_spec(&text).unwrap(), spec);
        assert!(parse_spec(r#"{"family":"nope"}"#).is_err());
    }
}
