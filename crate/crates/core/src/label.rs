//! Structured vertex names.
//!
//! The derived ordering (variant first, then payload lexicographically) is the
//! single tie-breaker used by every construction in the crate: whenever a
//! choice is arbitrary, the smallest label goes first.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexLabel {
    Int(i64),
    /// Strictly increasing elements, all at least 1.
    Set(Vec<u32>),
    /// Copy of a base vertex on one level of a generalized Mycielskian.
    Level { base: Box<VertexLabel>, level: u32 },
    Apex,
    Pair(i64, i64),
}

impl VertexLabel {
    pub fn int(n: i64) -> Self {
        VertexLabel::Int(n)
    }

    /// Builds a set label, sorting the elements.
    pub fn set<I: IntoIterator<Item = u32>>(elems: I) -> Self {
        let mut v: Vec<u32> = elems.into_iter().collect();
        v.sort_unstable();
        VertexLabel::Set(v)
    }

    pub fn level(base: VertexLabel, level: u32) -> Self {
        VertexLabel::Level { base: Box::new(base), level }
    }

    pub fn pair(i: i64, j: i64) -> Self {
        VertexLabel::Pair(i, j)
    }

    pub fn is_valid(&self) -> bool {
        match self {
            VertexLabel::Int(_) | VertexLabel::Apex => true,
            VertexLabel::Set(s) => s.iter().all(|&e| e >= 1) && s.windows(2).all(|w| w[0] < w[1]),
            VertexLabel::Level { base, .. } => base.is_valid(),
            VertexLabel::Pair(i, j) => i != j,
        }
    }

    pub fn as_set(&self) -> Option<&[u32]> {
        match self {
            VertexLabel::Set(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(i64, i64)> {
        match self {
            VertexLabel::Pair(i, j) => Some((*i, *j)),
            _ => None,
        }
    }

    /// Compact JSON text, used as the object key when labels index a map.
    pub fn key(&self) -> String {
        serde_json::to_string(self).expect("labels always serialize")
    }

    pub fn from_key(key: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(key)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(n) => write!(f, "{n}"),
            VertexLabel::Set(s) => {
                write!(f, "{{")?;
                for (i, e) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "}}")
            }
            VertexLabel::Level { base, level } => write!(f, "({base};{level})"),
            VertexLabel::Apex => write!(f, "z"),
            VertexLabel::Pair(i, j) => write!(f, "({i},{j})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format() {
        let cases = [
            (VertexLabel::Int(3), r#"{"int":3}"#),
            (VertexLabel::set([3, 1]), r#"{"set":[1,3]}"#),
            (VertexLabel::level(VertexLabel::Int(0), 2), r#"{"level":{"base":{"int":0},"level":2}}"#),
            (VertexLabel::Apex, r#""apex""#),
            (VertexLabel::pair(1, 2), r#"{"pair":[1,2]}"#),
        ];
        for (label, text) in cases {
            assert_eq!(label.key(), text);
            assert_eq!(VertexLabel::from_key(text).unwrap(), label);
        }
    }

    #[test]
    fn order_is_variant_then_payload() {
        let mut v = vec![
            VertexLabel::pair(1, 2),
            VertexLabel::Apex,
            VertexLabel::level(VertexLabel::Int(1), 0),
            VertexLabel::set([2]),
            VertexLabel::set([1, 5]),
            VertexLabel::Int(7),
            VertexLabel::level(VertexLabel::Int(0), 1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                VertexLabel::Int(7),
                VertexLabel::set([1, 5]),
                VertexLabel::set([2]),
                VertexLabel::level(VertexLabel::Int(0), 1),
                VertexLabel::level(VertexLabel::Int(1), 0),
                VertexLabel::Apex,
                VertexLabel::pair(1, 2),
            ]
        );
    }

    #[test]
    fn validity() {
        assert!(!VertexLabel::Set(vec![2, 2]).is_valid());
        assert!(!VertexLabel::Set(vec![0, 1]).is_valid());
        assert!(!VertexLabel::pair(3, 3).is_valid());
        assert!(VertexLabel::level(VertexLabel::Apex, 4).is_valid());
    }
}
