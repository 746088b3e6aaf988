//! JSON formats for ideals, cell complexes and command output.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::cellcomplex::{FaceSpec, LabeledCellComplex, Vertex};
use crate::error::{Error, Result};
use crate::hull::orient_to_simplex;
use crate::linalg::Rational;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::poly::SignedMonomial;
use crate::residue::{ChainMap, ResidueCurrent};
use crate::resolution::FreeComplex;

pub const SCHEMA: &str = "cellres/1";

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    // serde_json already reports the line and column
    Error::Parse(e.to_string())
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let raw: IdealJson = serde_json::from_str(text).map_err(parse_error)?;
    if raw.n == 0 {
        return Err(Error::ZeroDimension);
    }
    for g in &raw.generators {
        if g.len() != raw.n {
            return Err(Error::LengthMismatch {
                expected: raw.n,
                found: g.len(),
            });
        }
    }
    MonomialIdeal::new(raw.generators.into_iter().map(ExponentVector::from).collect())
}

pub fn ideal_to_json(m: &MonomialIdeal) -> Value {
    json!({
        "n": m.n(),
        "generators": m.generators().iter().map(|g| g.as_slice().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    id: usize,
    coords: Vec<String>,
    label: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FaceJson {
    vertices: Vec<usize>,
    #[serde(default)]
    orientation_basis: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    vertices: Vec<VertexJson>,
    faces: Vec<FaceJson>,
}

/// Read a labeled complex. Faces listed without a basis get the default
/// orientation, and top-dimensional ones are then aligned with the simplex
/// of pure powers when the labels include all of them.
pub fn parse_complex(text: &str) -> Result<LabeledCellComplex> {
    let raw: ComplexJson = serde_json::from_str(text).map_err(parse_error)?;
    let nvars = raw
        .vertices
        .first()
        .map(|v| v.label.len())
        .ok_or_else(|| Error::InvalidComplex("no vertices".into()))?;
    let vertices = raw
        .vertices
        .into_iter()
        .map(|v| {
            Ok(Vertex {
                id: v.id,
                point: v.coords.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?,
                label: ExponentVector::from(v.label),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut unoriented = Vec::new();
    let mut specs = Vec::new();
    for f in raw.faces {
        let basis = match f.orientation_basis {
            Some(rows) => Some(
                rows.iter()
                    .map(|r| r.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let mut key = f.vertices.clone();
        key.sort_unstable();
        key.dedup();
        if basis.is_none() {
            unoriented.push(key);
        }
        specs.push(FaceSpec {
            vertices: f.vertices,
            basis,
        });
    }
    let mut x = LabeledCellComplex::from_faces(nvars, vertices, specs)?;
    let top = nvars as i32 - 1;
    let targets: Vec<usize> = unoriented
        .iter()
        .filter_map(|vs| x.face_index(vs))
        .filter(|&f| x.face(f).dim == top && top > 0)
        .collect();
    let has_pure_powers = (0..nvars).all(|i| x.vertices().any(|v| v.label.pure_power_variable() == Some(i)));
    if !targets.is_empty() && has_pure_powers {
        orient_to_simplex(&mut x, &targets)?;
    }
    Ok(x)
}

/// Every nonempty face with its basis, in the input format.
pub fn complex_to_json(x: &LabeledCellComplex) -> Value {
    let vertices: Vec<Value> = x
        .vertices()
        .map(|v| {
            json!({
                "id": v.id,
                "coords": v.point.iter().map(format_rational).collect::<Vec<_>>(),
                "label": v.label.as_slice(),
            })
        })
        .collect();
    let faces: Vec<Value> = x
        .faces()
        .iter()
        .filter(|f| f.dim >= 0)
        .map(|f| {
            json!({
                "vertices": f.vertices,
                "orientation_basis": f.basis.iter()
                    .map(|w| w.iter().map(format_rational).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "vertices": vertices, "faces": faces })
}

/// Faces grouped by dimension, with labels.
pub fn complex_summary(x: &LabeledCellComplex) -> Value {
    let by_dim: Vec<Value> = (0..=x.dim())
        .map(|k| {
            let faces: Vec<Value> = x
                .faces_of_dim(k)
                .map(|f| json!({"face": x.face(f).vertices, "label": x.face(f).label.as_slice()}))
                .collect();
            json!({"dim": k, "count": faces.len(), "faces": faces})
        })
        .collect();
    json!({ "dim": x.dim(), "levels": by_dim })
}

fn entries_json(m: &[Vec<SignedMonomial>], rows: &[Vec<usize>], cols: &[Vec<usize>]) -> Vec<Value> {
    let mut out = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        for (i, row) in rows.iter().enumerate() {
            let e = &m[i][j];
            if !e.is_zero() {
                out.push(json!({"row": row, "col": col, "sign": e.sign, "exp": e.exp.as_slice()}));
            }
        }
    }
    out
}

fn level_faces(f: &FreeComplex, k: i32) -> Vec<Vec<usize>> {
    f.level(k).iter().map(|g| g.vertices.clone()).collect()
}

pub fn free_complex_to_json(f: &FreeComplex) -> Value {
    let levels: Vec<Value> = (-1..=f.length())
        .map(|k| {
            let gens: Vec<Value> = f
                .level(k)
                .iter()
                .map(|g| json!({"face": g.vertices, "degree": g.label.as_slice()}))
                .collect();
            json!({"k": k, "basis": gens})
        })
        .collect();
    let matrices: Vec<Value> = (0..=f.length())
        .map(|k| {
            json!({
                "k": k,
                "rows": f.level(k - 1).len(),
                "cols": f.level(k).len(),
                "entries": entries_json(f.matrix(k), &level_faces(f, k - 1), &level_faces(f, k)),
            })
        })
        .collect();
    json!({ "levels": levels, "matrices": matrices })
}

pub fn chain_map_to_json(a: &ChainMap, psi: &FreeComplex, phi: &FreeComplex) -> Value {
    let matrices: Vec<Value> = (-1..=a.top())
        .map(|k| {
            json!({
                "k": k,
                "rows": phi.level(k).len(),
                "cols": psi.level(k).len(),
                "entries": entries_json(a.matrix(k), &level_faces(phi, k), &level_faces(psi, k)),
            })
        })
        .collect();
    Value::Array(matrices)
}

pub fn residue_to_json(r: &ResidueCurrent) -> Value {
    Value::Array(
        r.entries
            .iter()
            .map(|(face, c)| json!({"face": face, "sign": c.sign, "alpha": c.alpha.as_slice()}))
            .collect(),
    )
}

/// Wrap a payload with the schema tag and command name.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("schema".into(), Value::from(SCHEMA));
    obj.insert("command".into(), Value::from(command));
    match payload {
        Value::Object(map) => obj.extend(map),
        other => {
            obj.insert("result".into(), other);
        }
    }
    Value::Object(obj)
}
