//! JSON space documents.
//!
//! ```json
//! { "points": ["a", "b"], "opens": [["b"], ["a", "b"]] }
//! { "points": ["a", "b"], "subbasis": [["b"]] }
//! { "points": ["a", "b"], "poset": { "leq": [["a", "b"]], "topology": "scott" } }
//! ```
//!
//! The empty set and the whole space may be omitted from `opens`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::FinitePoset;
use crate::space::FiniteSpace;
use crate::topology::{poset_topology, TopologyKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    /// `[x, y]` means `x ≤ y`; the reflexive-transitive closure is taken.
    pub leq: Vec<[String; 2]>,
    pub topology: TopologyKind,
}

/// Fields are declared in key order so the writer emits sorted keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<String>>>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl SpaceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
    }

    pub fn to_space(&self) -> Result<FiniteSpace> {
        let n = self.points.len();
        let mut seen = HashSet::new();
        if let Some(dup) = self.points.iter().find(|p| !seen.insert(p.as_str())) {
            return Err(parse_err(format!("duplicate point {dup:?}")));
        }
        let index = |name: &str| {
            self.points.iter().position(|p| p == name).ok_or_else(|| parse_err(format!("unknown point {name:?}")))
        };
        let set = |names: &[String]| names.iter().map(|s| index(s)).collect::<Result<PointSet>>();
        let given = [self.opens.is_some(), self.subbasis.is_some(), self.poset.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(parse_err("exactly one of opens, subbasis or poset is required"));
        }
        let x = if let Some(opens) = &self.opens {
            let mut sets = opens.iter().map(|o| set(o)).collect::<Result<Vec<_>>>()?;
            sets.push(PointSet::EMPTY);
            sets.push(PointSet::full(n));
            sets.sort_by_key(|s| s.canonical_key());
            sets.dedup();
            FiniteSpace::from_opens(n, &sets)?
        } else if let Some(sub) = &self.subbasis {
            let sets = sub.iter().map(|o| set(o)).collect::<Result<Vec<_>>>()?;
            FiniteSpace::generate(n, &sets)?
        } else {
            let spec = self.poset.as_ref().expect("one field is present");
            let pairs = spec.leq.iter().map(|[a, b]| Ok((index(a)?, index(b)?))).collect::<Result<Vec<_>>>()?;
            poset_topology(&FinitePoset::from_pairs(n, &pairs)?, spec.topology)?
        };
        x.with_names(self.points.clone())
    }

    /// Points sorted by name, every nonempty proper open listed by size
    /// then name order.
    pub fn canonical(x: &FiniteSpace) -> Self {
        let mut points: Vec<String> = (0..x.len()).map(|i| x.name(i)).collect();
        points.sort();
        let full = x.full();
        let mut opens: Vec<Vec<String>> = x
            .opens()
            .iter()
            .filter(|u| !u.is_empty() && **u != full)
            .map(|&u| {
                let mut names = x.set_names(u);
                names.sort();
                names
            })
            .collect();
        opens.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SpaceDocument { opens: Some(opens), points, poset: None, subbasis: None }
    }

    pub fn write(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

pub fn read_space(text: &str) -> Result<FiniteSpace> {
    SpaceDocument::parse(text)?.to_space()
}

pub fn write_space(x: &FiniteSpace) -> String {
    SpaceDocument::canonical(x).write()
}

/// `a,b;c` as a family `{{a,b},{c}}`; `{}` stands for the empty member.
pub fn parse_family(x: &FiniteSpace, text: &str) -> Result<Vec<PointSet>> {
    text.split(';').map(|part| parse_set(x, part)).collect()
}

pub fn parse_set(x: &FiniteSpace, text: &str) -> Result<PointSet> {
    let t = text.trim();
    if t.is_empty() || t == "{}" {
        return Ok(PointSet::EMPTY);
    }
    let names: Vec<&str> = t.trim_start_matches('{').trim_end_matches('}').split(',').map(str::trim).collect();
    x.set_from_names(&names)
}

pub fn format_set(x: &FiniteSpace, a: PointSet) -> String {
    format!("{{{}}}", x.set_names(a).join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_shapes_agree() {
        let a = read_space(r#"{"points":["a","b"],"opens":[["b"]]}"#).unwrap();
        let b = read_space(r#"{"points":["a","b"],"subbasis":[["b"]]}"#).unwrap();
        let c = read_space(r#"{"points":["a","b"],"poset":{"leq":[["a","b"]],"topology":"alexandroff"}}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(a.is_homeomorphic(&FiniteSpace::sierpinski()));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{"points":["a","a"],"opens":[]}"#,
            r#"{"points":["a"],"opens":[["z"]]}"#,
            r#"{"points":["a","b"]}"#,
            r#"{"points":["a","b"],"opens":[],"subbasis":[]}"#,
            r#"{"points":["a","b"],"opens":[]}"#,
            r#"{"points":["a"],"extra":1,"opens":[]}"#,
        ] {
            assert!(read_space(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_writer_is_a_fixed_point() {
        let x = read_space(r#"{"points":["z","m","a"],"opens":[["z"],["m"],["z","m"]]}"#).unwrap();
        let once = write_space(&x);
        let y = read_space(&once).unwrap();
        assert_eq!(write_space(&y), once);
        assert!(x.is_homeomorphic(&y));
        assert!(once.find("\"opens\"").unwrap() < once.find("\"points\"").unwrap());
    }

    #[test]
    fn family_syntax() {
        let x = FiniteSpace::v_space().with_names(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let f = parse_family(&x, "b,c; {a}").unwrap();
        assert_eq!(f, vec![PointSet::from_indices([1, 2]), PointSet::singleton(0)]);
        assert_eq!(format_set(&x, f[0]), "{b,c}");
    }
}
