//! JSON encodings.
//!
//! * quaternion: `[x0, x1, x2, x3]`
//! * multivector: `{"n": n, "coeffs": {"<bitmask>": value, …}}`
//! * series: `{"kind": "quaternion" | "clifford", "n": n?, "coeffs": [scalar, …]}`,
//!   optionally with `"tail_model": {"C": c, "r": r, "s": s?}` (or the string
//!   `"unknown"`) when read as a Fock element.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::fock::{Tail, TailModel};
use crate::hypercomplex::{Multivector, Quaternion, ScalarKind};
use crate::slicefun::SliceSeries;
use crate::{Error, Result};

/// A scalar of either algebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyScalar {
    Quaternion(Quaternion),
    Clifford(Multivector),
}

impl AnyScalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyScalar::Quaternion(_) => ScalarKind::Quaternion,
            AnyScalar::Clifford(m) => ScalarKind::Clifford(m.generators()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("scalar: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("scalars serialize")
    }
}

/// A series of either algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySeries {
    Quaternion(SliceSeries<Quaternion>),
    Clifford(SliceSeries<Multivector>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesDoc {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    coeffs: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tail_model: Option<Value>,
}

impl AnySeries {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnySeries::Quaternion(_) => ScalarKind::Quaternion,
            AnySeries::Clifford(f) => f.kind(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(parse_fock_document(text)?.0)
    }

    pub fn to_json(&self) -> String {
        let doc = match self {
            AnySeries::Quaternion(f) => SeriesDoc {
                kind: "quaternion".into(),
                n: None,
                coeffs: f.coeffs().iter().map(|c| serde_json::to_value(c).expect("serializable")).collect(),
                tail_model: None,
            },
            AnySeries::Clifford(f) => SeriesDoc {
                kind: "clifford".into(),
                n: Some(f.coeffs()[0].generators()),
                coeffs: f.coeffs().iter().map(|c| serde_json::to_value(c).expect("serializable")).collect(),
                tail_model: None,
            },
        };
        serde_json::to_string(&doc).expect("serializable")
    }
}

impl From<SliceSeries<Quaternion>> for AnySeries {
    fn from(f: SliceSeries<Quaternion>) -> Self {
        AnySeries::Quaternion(f)
    }
}

impl From<SliceSeries<Multivector>> for AnySeries {
    fn from(f: SliceSeries<Multivector>) -> Self {
        AnySeries::Clifford(f)
    }
}

/// Reads a series document together with its tail descriptor. A missing
/// `tail_model` means the series is exactly the stored polynomial.
pub fn parse_fock_document(text: &str) -> Result<(AnySeries, Tail)> {
    let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("series: {e}")))?;
    let series = match doc.kind.as_str() {
        "quaternion" => {
            if doc.n.is_some() {
                return Err(Error::Parse("quaternion series take no `n`".into()));
            }
            let coeffs = doc
                .coeffs
                .into_iter()
                .map(|v| serde_json::from_value::<Quaternion>(v).map_err(|e| Error::Parse(format!("coefficient: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            AnySeries::Quaternion(SliceSeries::new(coeffs)?)
        }
        "clifford" => {
            let n = doc.n.ok_or_else(|| Error::Parse("clifford series need `n`".into()))?;
            let coeffs = doc
                .coeffs
                .into_iter()
                .map(|v| {
                    let m = serde_json::from_value::<Multivector>(v).map_err(|e| Error::Parse(format!("coefficient: {e}")))?;
                    if m.generators() != n {
                        return Err(Error::KindMismatch { expected: ScalarKind::Clifford(n), found: ScalarKind::Clifford(m.generators()) });
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>>>()?;
            AnySeries::Clifford(SliceSeries::new(coeffs)?)
        }
        other => return Err(Error::Parse(format!("unknown series kind `{other}`"))),
    };
    let tail = match doc.tail_model {
        None => Tail::Exact,
        Some(Value::String(s)) if s == "unknown" => Tail::Unknown,
        Some(v) => Tail::Modeled(
            serde_json::from_value::<TailModel>(v).map_err(|e| Error::Parse(format!("tail_model: {e}")))?,
        ),
    };
    Ok((series, tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_series_document() {
        let text = r#"{"kind":"quaternion","coeffs":[[1,0,0,0],[0,0,1,0]]}"#;
        let f = AnySeries::parse(text).unwrap();
        let AnySeries::Quaternion(ref q) = f else { panic!("wrong kind") };
        assert_eq!(q.coeffs()[1], Quaternion::J);
        assert_eq!(AnySeries::parse(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn clifford_series_document() {
        let text = r#"{"kind":"clifford","n":2,"coeffs":[{"n":2,"coeffs":{"0":1.0}},{"n":2,"coeffs":{"3":2.0}}],
                       "tail_model":{"C":1.0,"r":0.5}}"#;
        let (f, tail) = parse_fock_document(text).unwrap();
        assert_eq!(f.kind(), ScalarKind::Clifford(2));
        assert_eq!(tail, Tail::Modeled(TailModel::factorial(1.0, 0.5)));
        assert_eq!(AnySeries::parse(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn schema_violations() {
        assert!(AnySeries::parse(r#"{"kind":"octonion","coeffs":[[1,0,0,0]]}"#).is_err());
        assert!(AnySeries::parse(r#"{"kind":"quaternion","coeffs":[]}"#).is_err());
        assert!(AnySeries::parse(r#"{"kind":"quaternion","coeffs":[[1,0,0]]}"#).is_err());
        assert!(AnySeries::parse(r#"{"kind":"clifford","coeffs":[{"n":2,"coeffs":{}}]}"#).is_err());
        assert!(matches!(
            AnySeries::parse(r#"{"kind":"clifford","n":3,"coeffs":[{"n":2,"coeffs":{}}]}"#),
            Err(Error::KindMismatch { .. })
        ));
        assert!(AnySeries::parse(r#"{"kind":"quaternion","coeffs":[[1,0,0,0]],"extra":1}"#).is_err());
    }

    #[test]
    fn scalars() {
        assert_eq!(AnyScalar::parse("[0,1,0,0]").unwrap(), AnyScalar::Quaternion(Quaternion::I));
        let m = AnyScalar::parse(r#"{"n":3,"coeffs":{"1":1.0}}"#).unwrap();
        assert_eq!(m.kind(), ScalarKind::Clifford(3));
        assert!(AnyScalar::parse("[1,2]").is_err());
    }
}
