//! JSON representation files.
//!
//! ```json
//! {"arrows": [[["1"]], [["0"]]], "dims": [1, 1], "field": "Q",
//!  "quiver": {"arrows": [[0, 1], [0, 1]], "vertices": 2}}
//! ```
//!
//! Scalars are strings (`"p/q"`) over ℚ and `{"num": [...], "den": [...]}`
//! coefficient lists over ℚ(t). Keys are written sorted, so re-serializing a
//! parsed file is a canonicalization.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldTag, Matrix, Rational, RationalFunction};
use crate::quiver::Quiver;
use crate::rep::{Rep, RepMap};
use crate::tame::{AdicTower, PrueferTower};

/// A parsed representation over either supported field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRep {
    Q(Rep<Rational>),
    Qt(Rep<RationalFunction>),
}

impl AnyRep {
    pub fn field(&self) -> FieldTag {
        match self {
            AnyRep::Q(_) => FieldTag::Q,
            AnyRep::Qt(_) => FieldTag::Qt,
        }
    }

    pub fn dims(&self) -> &[usize] {
        match self {
            AnyRep::Q(x) => x.dims(),
            AnyRep::Qt(x) => x.dims(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyRep::Q(x) => rep_to_json(x),
            AnyRep::Qt(x) => rep_to_json(x),
        }
    }

    pub fn into_rational(self) -> Result<Rep<Rational>> {
        match self {
            AnyRep::Q(x) => Ok(x),
            AnyRep::Qt(_) => Err(Error::Precondition("this operation needs a representation over Q".into())),
        }
    }
}

fn quiver_to_json(q: &Quiver) -> Value {
    json!({
        "vertices": q.vertex_count(),
        "arrows": q.arrows().iter().map(|&(s, t)| json!([s, t])).collect::<Vec<_>>(),
    })
}

fn quiver_from_json(v: &Value) -> Result<Quiver> {
    let n = v
        .get("vertices")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("quiver needs an integer `vertices`".into()))?;
    let arrows = v
        .get("arrows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("quiver needs an `arrows` list".into()))?
        .iter()
        .map(|a| match a.as_array().map(|p| (p.first().and_then(Value::as_u64), p.get(1).and_then(Value::as_u64), p.len())) {
            Some((Some(s), Some(t), 2)) => Ok((s as usize, t as usize)),
            _ => Err(Error::Parse(format!("arrow {a} is not a pair [s, t]"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Quiver::new(n as usize, arrows)
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(F::to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json<F: Field>(v: &Value, rows: usize, cols: usize) -> Result<Matrix<F>> {
    let rs = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a list of rows, got {v}")))?;
    if rs.len() != rows {
        return Err(Error::DimensionMismatch(format!("expected {rows} rows, got {}", rs.len())));
    }
    let parsed = rs
        .iter()
        .map(|r| {
            let entries = r
                .as_array()
                .ok_or_else(|| Error::Parse(format!("expected a row, got {r}")))?;
            if entries.len() != cols {
                return Err(Error::DimensionMismatch(format!("expected {cols} columns, got {}", entries.len())));
            }
            entries.iter().map(F::from_json).collect()
        })
        .collect::<Result<Vec<Vec<F>>>>()?;
    Matrix::from_rows(parsed, cols)
}

pub fn rep_to_json<F: Field>(x: &Rep<F>) -> Value {
    json!({
        "quiver": quiver_to_json(x.quiver()),
        "field": F::TAG.as_str(),
        "dims": x.dims(),
        "arrows": x.arrows().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

fn rep_from_json_typed<F: Field>(v: &Value, q: Quiver) -> Result<Rep<F>> {
    let dims = v
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `dims`".into()))?
        .iter()
        .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad dimension {d}"))))
        .collect::<Result<Vec<_>>>()?;
    if dims.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch(format!("{} dims for {} vertices", dims.len(), q.vertex_count())));
    }
    let arrows = v
        .get("arrows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `arrows`".into()))?;
    if arrows.len() != q.arrow_count() {
        return Err(Error::DimensionMismatch(format!("{} matrices for {} arrows", arrows.len(), q.arrow_count())));
    }
    let mats = q
        .arrows()
        .iter()
        .zip(arrows)
        .map(|(&(s, t), m)| matrix_from_json(m, dims[t], dims[s]))
        .collect::<Result<Vec<_>>>()?;
    Rep::new(q, dims, mats)
}

pub fn rep_from_json(v: &Value) -> Result<AnyRep> {
    let q = quiver_from_json(v.get("quiver").ok_or_else(|| Error::Parse("missing `quiver`".into()))?)?;
    match v.get("field").and_then(Value::as_str) {
        Some("Q") => Ok(AnyRep::Q(rep_from_json_typed(v, q)?)),
        Some("Qt") => Ok(AnyRep::Qt(rep_from_json_typed(v, q)?)),
        other => Err(Error::Parse(format!("field must be \"Q\" or \"Qt\", got {other:?}"))),
    }
}

pub fn parse_rep(text: &str) -> Result<AnyRep> {
    rep_from_json(&serde_json::from_str(text)?)
}

pub fn read_rep(path: &Path) -> Result<AnyRep> {
    parse_rep(&std::fs::read_to_string(path)?)
}

pub fn map_to_json<F: Field>(f: &RepMap<F>) -> Value {
    json!({
        "source_dims": f.source().dims(),
        "target_dims": f.target().dims(),
        "maps": f.maps().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// A map together with its source and target: `{"source", "target", "maps"}`.
pub fn map_file_to_json<F: Field>(f: &RepMap<F>) -> Value {
    json!({
        "source": rep_to_json(f.source()),
        "target": rep_to_json(f.target()),
        "maps": f.maps().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// Reads a map file over ℚ.
pub fn map_from_json(v: &Value) -> Result<RepMap<Rational>> {
    let part = |k: &str| -> Result<Rep<Rational>> {
        rep_from_json(v.get(k).ok_or_else(|| Error::Parse(format!("missing `{k}`")))?)?.into_rational()
    };
    let (source, target) = (part("source")?, part("target")?);
    let mats = v
        .get("maps")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `maps`".into()))?;
    if mats.len() != source.dims().len() {
        return Err(Error::DimensionMismatch(format!("{} matrices for {} vertices", mats.len(), source.dims().len())));
    }
    let maps = mats
        .iter()
        .enumerate()
        .map(|(v, m)| matrix_from_json(m, target.dim(v), source.dim(v)))
        .collect::<Result<Vec<_>>>()?;
    RepMap::new(source, target, maps)
}

fn tower_json(kind: &str, label: String, stages: &[Rep<Rational>], monos: &[RepMap<Rational>], epis: &[RepMap<Rational>]) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(kind));
    m.insert("label".into(), json!(label));
    m.insert("field".into(), json!(FieldTag::Q.as_str()));
    m.insert("stages".into(), Value::Array(stages.iter().map(rep_to_json).collect()));
    m.insert("monos".into(), Value::Array(monos.iter().map(map_to_json).collect()));
    m.insert("epis".into(), Value::Array(epis.iter().map(map_to_json).collect()));
    Value::Object(m)
}

pub fn prufer_tower_to_json(t: &PrueferTower) -> Value {
    tower_json("pruefer", format!("Pruefer({})", t.point), &t.stages, &t.monos, &t.epis)
}

pub fn adic_tower_to_json(t: &AdicTower) -> Value {
    tower_json("adic", format!("Adic({})", t.point), &t.stages, &t.monos, &t.epis)
}

/// Pretty-printed with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generic::generic_module;
    use crate::tame::{kron_preinjective, kron_regular, prufer_tower, TubePoint};

    #[test]
    fn round_trip_is_canonical() {
        let x = kron_regular(&"x^2+1".parse().unwrap(), 2).unwrap();
        let text = to_canonical_string(&rep_to_json(&x));
        let back = parse_rep(&text).unwrap();
        assert_eq!(back, AnyRep::Q(x));
        assert_eq!(to_canonical_string(&back.to_json()), text);

        let q = generic_module();
        let text = to_canonical_string(&rep_to_json(&q));
        assert!(text.contains("\"field\": \"Qt\""));
        assert_eq!(parse_rep(&text).unwrap(), AnyRep::Qt(q));
    }

    #[test]
    fn lenient_input_is_canonicalized() {
        let loose = r#"{"field":"Q","dims":[1,1],"quiver":{"vertices":2,"arrows":[[0,1],[0,1]]},"arrows":[[["2/4"]],[[0]]]}"#;
        let x = parse_rep(loose).unwrap();
        let text = to_canonical_string(&x.to_json());
        assert!(text.contains("\"1/2\""));
        assert_eq!(parse_rep(&text).unwrap(), x);
    }

    #[test]
    fn malformed_files() {
        let ok = to_canonical_string(&rep_to_json(&kron_preinjective(1)));
        assert!(parse_rep(&ok.replace("\"Q\"", "\"R\"")).is_err());
        assert!(parse_rep(&ok.replace("\"dims\": [\n    2,\n    1\n  ]", "\"dims\": [2, 2]")).is_err());
        assert!(parse_rep("{").is_err());
        assert!(parse_rep(r#"{"quiver":{"vertices":2,"arrows":[[0]]},"field":"Q","dims":[0,0],"arrows":[[]]}"#).is_err());
    }

    #[test]
    fn tower_file() {
        let t = prufer_tower(&TubePoint::linear(0), 3).unwrap();
        let v = prufer_tower_to_json(&t);
        assert_eq!(v["stages"].as_array().unwrap().len(), 3);
        assert_eq!(v["monos"].as_array().unwrap().len(), 2);
        assert_eq!(v["label"], "Pruefer(x)");
    }
}
