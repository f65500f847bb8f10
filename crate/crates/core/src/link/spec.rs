use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{LinkError, MAX_COMPONENTS};
use crate::poly::{parse_poly, MultiPoly};

/// A link with `d` components and the Alexander polynomial of every nonempty
/// sublink, each in `|S|` variables ordered by component index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkSpec {
    pub name: String,
    pub d: usize,
    pub ambient: String,
    sublinks: BTreeMap<Vec<usize>, MultiPoly>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkDocument {
    #[serde(default)]
    name: String,
    components: usize,
    #[serde(default = "default_ambient")]
    ambient: String,
    sublinks: Vec<SublinkDocument>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SublinkDocument {
    indices: Vec<usize>,
    alexander: String,
}

fn default_ambient() -> String {
    "S3".to_string()
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> LinkError {
    LinkError::Schema { path: path.into(), message: message.into() }
}

/// All nonempty subsets of `1..=d` as sorted index vectors.
pub(crate) fn nonempty_subsets(d: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << d))
        .map(|bits| (0..d).filter(|i| bits & (1 << i) != 0).map(|i| i + 1).collect())
        .collect()
}

impl LinkSpec {
    /// Builds a spec from `(indices, polynomial)` pairs, checking completeness.
    pub fn new(name: &str, d: usize, ambient: &str, entries: Vec<(Vec<usize>, MultiPoly)>) -> Result<Self, LinkError> {
        if d == 0 || d > MAX_COMPONENTS {
            return Err(schema("components", format!("must lie in 1..={MAX_COMPONENTS}, got {d}")));
        }
        let mut sublinks = BTreeMap::new();
        for (k, (idx, f)) in entries.into_iter().enumerate() {
            let path = format!("sublinks[{k}].indices");
            if idx.is_empty() {
                return Err(schema(path, "empty index set"));
            }
            if idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err(schema(path, format!("{idx:?} is not strictly increasing")));
            }
            if idx[0] < 1 || *idx.last().unwrap() > d {
                return Err(schema(path, format!("{idx:?} outside 1..={d}")));
            }
            if f.nvars() != idx.len() {
                return Err(schema(
                    format!("sublinks[{k}].alexander"),
                    format!("{} variables for {} components", f.nvars(), idx.len()),
                ));
            }
            if f.is_zero() {
                return Err(schema(format!("sublinks[{k}].alexander"), "zero polynomial"));
            }
            if sublinks.insert(idx.clone(), f).is_some() {
                return Err(schema(path, format!("duplicate entry {idx:?}")));
            }
        }
        for s in nonempty_subsets(d) {
            if !sublinks.contains_key(&s) {
                return Err(LinkError::MissingSublink(s));
            }
        }
        Ok(LinkSpec { name: name.to_string(), d, ambient: ambient.to_string(), sublinks })
    }

    /// Alexander polynomial of the sublink with the given sorted 1-based indices.
    pub fn alexander(&self, indices: &[usize]) -> Option<&MultiPoly> {
        self.sublinks.get(indices)
    }

    pub fn sublinks(&self) -> impl Iterator<Item = (&Vec<usize>, &MultiPoly)> {
        self.sublinks.iter()
    }

    pub fn to_json(&self) -> String {
        let doc = LinkDocument {
            name: self.name.clone(),
            components: self.d,
            ambient: self.ambient.clone(),
            sublinks: self
                .sublinks
                .iter()
                .map(|(idx, f)| SublinkDocument { indices: idx.clone(), alexander: f.to_canonical_string() })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

/// Parses and validates a link document.
pub fn load_link_spec(document: &str) -> Result<LinkSpec, LinkError> {
    let doc: LinkDocument = serde_json::from_str(document).map_err(|e| LinkError::Json(e.to_string()))?;
    if doc.components == 0 || doc.components > MAX_COMPONENTS {
        return Err(schema("components", format!("must lie in 1..={MAX_COMPONENTS}, got {}", doc.components)));
    }
    let mut entries = Vec::with_capacity(doc.sublinks.len());
    for (k, s) in doc.sublinks.into_iter().enumerate() {
        let f = parse_poly(&s.alexander, s.indices.len())
            .map_err(|source| LinkError::Parse { path: format!("sublinks[{k}].alexander"), source })?;
        entries.push((s.indices, f));
    }
    LinkSpec::new(&doc.name, doc.components, &doc.ambient, entries)
}

fn one(n: usize) -> MultiPoly {
    MultiPoly::constant(n, BigInt::from(1))
}

/// The `k`-twisted Whitehead link; both components are unknots and unlinked.
pub fn whitehead_link(k: i64) -> Result<LinkSpec, LinkError> {
    let delta = super::whitehead_delta(k)?;
    LinkSpec::new(
        &format!("whitehead-{k}"),
        2,
        "S3",
        vec![(vec![1], one(1)), (vec![2], one(1)), (vec![1, 2], delta)],
    )
}

/// The trefoil knot, `t^2 - t + 1`.
pub fn trefoil() -> LinkSpec {
    let f = MultiPoly::from_i64_terms(1, &[(1, &[2]), (-1, &[1]), (1, &[0])]);
    LinkSpec::new("trefoil", 1, "S3", vec![(vec![1], f)]).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    const WHITEHEAD: &str = r#"{
        "name": "whitehead-1", "components": 2, "ambient": "S3",
        "sublinks": [
            {"indices": [1], "alexander": "1"},
            {"indices": [2], "alexander": "1"},
            {"indices": [1, 2], "alexander": "1 + t1*t2"}
        ]
    }"#;

    #[test]
    fn loads_whitehead() {
        let l = load_link_spec(WHITEHEAD).unwrap();
        assert_eq!(l.d, 2);
        assert_eq!(l.alexander(&[1, 2]).unwrap(), &whitehead_link(1).unwrap().alexander(&[1, 2]).unwrap().clone());
        assert_eq!(l.alexander(&[1]).unwrap(), &one(1));
        assert_eq!(load_link_spec(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn missing_sublink_is_named() {
        let doc = WHITEHEAD.replace(r#"{"indices": [1], "alexander": "1"},"#, "");
        assert_eq!(load_link_spec(&doc), Err(LinkError::MissingSublink(vec![1])));
    }

    #[test]
    fn parse_errors_carry_path() {
        let doc = WHITEHEAD.replace("1 + t1*t2", "1 + t1*t3");
        match load_link_spec(&doc) {
            Err(LinkError::Parse { path, source }) => {
                assert_eq!(path, "sublinks[2].alexander");
                assert_eq!(source.position(), Some(7));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(load_link_spec("{"), Err(LinkError::Json(_))));
        let doc = WHITEHEAD.replace("[1, 2]", "[2, 1]");
        assert!(matches!(load_link_spec(&doc), Err(LinkError::Schema { .. })));
        let doc = WHITEHEAD.replace("\"components\": 2", "\"components\": 0");
        assert!(matches!(load_link_spec(&doc), Err(LinkError::Schema { .. })));
    }

    #[test]
    fn trefoil_is_valid() {
        let t = trefoil();
        assert_eq!(t.d, 1);
        let text = t.to_json();
        assert_eq!(load_link_spec(&text).unwrap(), t);
    }
}
