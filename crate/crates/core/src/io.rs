//! Instance files, payload serialization and lattice export.
//!
//! An instance file is JSON:
//! `{"category": "finrel"|"finpinj"|"fdhilb"|"boolhat", "atoms": [...],
//!   "objects": [...], "morphisms": [{"name", "src", "tgt", "data"}]}`.
//! Set objects are `{"name", "elements": [labels]}`, Hilbert spaces
//! `{"name", "dim"}` and Boolean-algebra objects `{"name", "element": [atoms]}`
//! (with `"atoms"` naming the algebra). Relation data is a `tgt × src` array
//! of 0/1 rows, partial injections a `{"x": "y"}` map, linear maps a
//! `tgt × src` array of `[re, im]` pairs (plain numbers are read as real),
//! and Boolean-algebra morphisms an atom list.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::category::{DaggerKernelCategory, KernelSub};
use crate::error::{Error, Result};
use crate::instances::{
    BoolElem, BoolHat, BoolMor, Dim, FdHilb, FinPInj, FinRel, FinSet, LinearMap, PartialInjection,
    Relation,
};
use crate::kck::{Kck, KckMorphism};
use crate::ksub::lattice::KSubLattice;

/// JSON rendering of objects, morphisms and kernel subobjects.
pub trait JsonPayload: DaggerKernelCategory {
    fn object_json(&self, x: &Self::Object) -> Value;

    /// The payload alone, in the instance-file format.
    fn data_json(&self, f: &Self::Morphism) -> Value;

    fn morphism_json(&self, f: &Self::Morphism) -> Value {
        json!({
            "src": self.object_json(&self.source(f)),
            "tgt": self.object_json(&self.target(f)),
            "data": self.data_json(f),
        })
    }

    /// Short human label for a kernel subobject.
    fn sub_label(&self, m: &KernelSub<Self::Morphism>) -> String;
}

fn set_json(x: &FinSet) -> Value {
    json!(x.labels())
}

fn subset_label(x: &FinSet) -> String {
    format!("{{{}}}", x.labels().join(","))
}

impl JsonPayload for FinRel {
    fn object_json(&self, x: &FinSet) -> Value {
        set_json(x)
    }

    fn data_json(&self, f: &Relation) -> Value {
        let rows: Vec<Vec<u8>> = (0..f.tgt().len())
            .map(|y| (0..f.src().len()).map(|x| f.related(x, y) as u8).collect())
            .collect();
        json!(rows)
    }

    fn sub_label(&self, m: &KernelSub<Relation>) -> String {
        subset_label(m.mor.src())
    }
}

impl JsonPayload for FinPInj {
    fn object_json(&self, x: &FinSet) -> Value {
        set_json(x)
    }

    fn data_json(&self, f: &PartialInjection) -> Value {
        let map: BTreeMap<&str, &str> = f
            .table()
            .iter()
            .enumerate()
            .filter_map(|(x, y)| {
                y.map(|y| (f.src().labels()[x].as_str(), f.tgt().labels()[y].as_str()))
            })
            .collect();
        json!(map)
    }

    fn sub_label(&self, m: &KernelSub<PartialInjection>) -> String {
        subset_label(m.mor.src())
    }
}

impl JsonPayload for FdHilb {
    fn object_json(&self, x: &Dim) -> Value {
        json!(x.0)
    }

    fn data_json(&self, f: &LinearMap) -> Value {
        let m = f.matrix();
        let rows: Vec<Vec<[f64; 2]>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        json!(rows)
    }

    fn sub_label(&self, m: &KernelSub<LinearMap>) -> String {
        let mat = m.mor.matrix();
        let cols: Vec<String> = (0..mat.ncols())
            .map(|j| {
                let entries: Vec<String> = (0..mat.nrows()).map(|i| fmt_complex(mat[(i, j)])).collect();
                format!("({})", entries.join(","))
            })
            .collect();
        if cols.is_empty() {
            "0".into()
        } else {
            format!("span{{{}}}", cols.join(","))
        }
    }
}

fn fmt_complex(z: Complex64) -> String {
    let r = |v: f64| {
        let s = format!("{v:.3}");
        let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    };
    if z.im.abs() < 5e-4 {
        r(z.re)
    } else if z.re.abs() < 5e-4 {
        format!("{}i", r(z.im))
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", r(z.re), r(z.im.abs()))
    }
}

impl JsonPayload for BoolHat {
    fn object_json(&self, x: &BoolElem) -> Value {
        json!(self.atom_names(*x))
    }

    fn data_json(&self, f: &BoolMor) -> Value {
        json!(self.atom_names(f.elem))
    }

    fn sub_label(&self, m: &KernelSub<BoolMor>) -> String {
        format!("{{{}}}", self.atom_names(m.mor.elem).join(","))
    }
}

impl<C> JsonPayload for Kck<C>
where
    C: JsonPayload + crate::dagcat::KernelOps,
{
    fn object_json(&self, x: &C::Object) -> Value {
        self.base().object_json(x)
    }

    fn data_json(&self, f: &KckMorphism<C::Morphism>) -> Value {
        json!({"c": self.base().morphism_json(&f.c), "k": self.base().morphism_json(&f.k)})
    }

    fn sub_label(&self, m: &KernelSub<KckMorphism<C::Morphism>>) -> String {
        self.base().sub_label(&KernelSub::from_kernel(m.mor.k.clone()))
    }
}

/// A parsed instance file: named objects and morphisms of one category.
#[derive(Debug, Clone)]
pub struct Doc<C: DaggerKernelCategory> {
    pub cat: C,
    pub objects: Vec<(String, C::Object)>,
    pub morphisms: Vec<(String, C::Morphism)>,
}

impl<C: DaggerKernelCategory> Doc<C> {
    pub fn object(&self, name: &str) -> Result<&C::Object> {
        self.objects
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, o)| o)
            .ok_or_else(|| Error::InvalidObject(format!("unknown object {name}")))
    }

    pub fn morphism(&self, name: &str) -> Result<&C::Morphism> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::InvalidPayload(format!("unknown morphism {name}")))
    }
}

/// A parsed instance file of any of the four categories.
#[derive(Debug, Clone)]
pub enum Instance {
    FinRel(Doc<FinRel>),
    FinPInj(Doc<FinPInj>),
    FdHilb(Doc<FdHilb>),
    BoolHat(Doc<BoolHat>),
}

impl Instance {
    pub fn category(&self) -> &'static str {
        match self {
            Instance::FinRel(_) => "finrel",
            Instance::FinPInj(_) => "finpinj",
            Instance::FdHilb(_) => "fdhilb",
            Instance::BoolHat(_) => "boolhat",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    category: String,
    #[serde(default)]
    atoms: Vec<String>,
    #[serde(default)]
    objects: Vec<RawObject>,
    #[serde(default)]
    morphisms: Vec<RawMorphism>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObject {
    name: String,
    elements: Option<Vec<String>>,
    dim: Option<usize>,
    element: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    name: String,
    src: String,
    tgt: String,
    data: Value,
}

fn lookup<'a, O>(objects: &'a [(String, O)], name: &str) -> Result<&'a O> {
    objects
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, o)| o)
        .ok_or_else(|| Error::InvalidObject(format!("unknown object {name}")))
}

fn bad(name: &str, what: &str) -> Error {
    Error::InvalidPayload(format!("morphism {name}: {what}"))
}

fn bit_matrix(name: &str, data: &Value, rows: usize, cols: usize) -> Result<Vec<Vec<bool>>> {
    let arr = data.as_array().ok_or_else(|| bad(name, "expected an array of rows"))?;
    if arr.len() != rows {
        return Err(bad(name, &format!("expected {rows} rows, found {}", arr.len())));
    }
    arr.iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| bad(name, "row is not an array"))?;
            if row.len() != cols {
                return Err(bad(name, &format!("expected {cols} columns, found {}", row.len())));
            }
            row.iter()
                .map(|v| match v.as_u64() {
                    Some(0) => Ok(false),
                    Some(1) => Ok(true),
                    _ => Err(bad(name, "entries must be 0 or 1")),
                })
                .collect()
        })
        .collect()
}

fn complex_matrix(name: &str, data: &Value, rows: usize, cols: usize) -> Result<Vec<Vec<Complex64>>> {
    let arr = data.as_array().ok_or_else(|| bad(name, "expected an array of rows"))?;
    if arr.len() != rows {
        return Err(bad(name, &format!("expected {rows} rows, found {}", arr.len())));
    }
    arr.iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| bad(name, "row is not an array"))?;
            if row.len() != cols {
                return Err(bad(name, &format!("expected {cols} columns, found {}", row.len())));
            }
            row.iter()
                .map(|v| {
                    if let Some(re) = v.as_f64() {
                        return Ok(Complex64::new(re, 0.0));
                    }
                    match v.as_array().map(|p| p.as_slice()) {
                        Some([re, im]) => match (re.as_f64(), im.as_f64()) {
                            (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
                            _ => Err(bad(name, "entries must be numbers")),
                        },
                        _ => Err(bad(name, "entries must be [re, im] pairs")),
                    }
                })
                .collect()
        })
        .collect()
}

fn string_list(name: &str, data: &Value) -> Result<Vec<String>> {
    serde_json::from_value(data.clone()).map_err(|_| bad(name, "expected a list of atoms"))
}

fn set_object(o: &RawObject) -> Result<FinSet> {
    let elems = o
        .elements
        .as_ref()
        .ok_or_else(|| Error::InvalidObject(format!("object {} needs \"elements\"", o.name)))?;
    let set = FinSet::new(elems.iter().cloned())?;
    if set.len() != elems.len() {
        return Err(Error::InvalidObject(format!("object {} has duplicate labels", o.name)));
    }
    Ok(set)
}

/// Parses an instance file. JSON syntax errors report line and column.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    match raw.category.as_str() {
        "finrel" => {
            let objects = raw
                .objects
                .iter()
                .map(|o| Ok((o.name.clone(), set_object(o)?)))
                .collect::<Result<Vec<_>>>()?;
            let morphisms = raw
                .morphisms
                .iter()
                .map(|m| {
                    let (x, y) = (lookup(&objects, &m.src)?, lookup(&objects, &m.tgt)?);
                    let bits = bit_matrix(&m.name, &m.data, y.len(), x.len())?;
                    let pairs: Vec<(usize, usize)> = (0..x.len())
                        .flat_map(|i| (0..y.len()).map(move |j| (i, j)))
                        .filter(|&(i, j)| bits[j][i])
                        .collect();
                    Ok((m.name.clone(), Relation::from_pairs(x.clone(), y.clone(), &pairs)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Instance::FinRel(Doc {
                cat: FinRel,
                objects,
                morphisms,
            }))
        }
        "finpinj" => {
            let objects = raw
                .objects
                .iter()
                .map(|o| Ok((o.name.clone(), set_object(o)?)))
                .collect::<Result<Vec<_>>>()?;
            let morphisms = raw
                .morphisms
                .iter()
                .map(|m| {
                    let (x, y) = (lookup(&objects, &m.src)?, lookup(&objects, &m.tgt)?);
                    let map: BTreeMap<String, String> = serde_json::from_value(m.data.clone())
                        .map_err(|_| bad(&m.name, "expected a {\"x\": \"y\"} map"))?;
                    let pairs: Vec<(&str, &str)> =
                        map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                    let f = PartialInjection::from_label_pairs(x.clone(), y.clone(), &pairs)
                        .map_err(|e| bad(&m.name, &e.to_string()))?;
                    Ok((m.name.clone(), f))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Instance::FinPInj(Doc {
                cat: FinPInj,
                objects,
                morphisms,
            }))
        }
        "fdhilb" => {
            let objects = raw
                .objects
                .iter()
                .map(|o| {
                    let d = o.dim.ok_or_else(|| {
                        Error::InvalidObject(format!("object {} needs \"dim\"", o.name))
                    })?;
                    Ok((o.name.clone(), Dim(d)))
                })
                .collect::<Result<Vec<_>>>()?;
            let morphisms = raw
                .morphisms
                .iter()
                .map(|m| {
                    let (x, y) = (*lookup(&objects, &m.src)?, *lookup(&objects, &m.tgt)?);
                    let rows = complex_matrix(&m.name, &m.data, y.0, x.0)?;
                    let mat = nalgebra::DMatrix::from_fn(y.0, x.0, |i, j| rows[i][j]);
                    Ok((m.name.clone(), LinearMap::new(x, y, mat)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Instance::FdHilb(Doc {
                cat: FdHilb::default(),
                objects,
                morphisms,
            }))
        }
        "boolhat" => {
            let cat = BoolHat::new(raw.atoms.iter().cloned())?;
            let objects = raw
                .objects
                .iter()
                .map(|o| {
                    let atoms = o.element.as_ref().ok_or_else(|| {
                        Error::InvalidObject(format!("object {} needs \"element\"", o.name))
                    })?;
                    let names: Vec<&str> = atoms.iter().map(String::as_str).collect();
                    Ok((o.name.clone(), cat.element(&names)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let morphisms = raw
                .morphisms
                .iter()
                .map(|m| {
                    let (x, y) = (*lookup(&objects, &m.src)?, *lookup(&objects, &m.tgt)?);
                    let atoms = string_list(&m.name, &m.data)?;
                    let names: Vec<&str> = atoms.iter().map(String::as_str).collect();
                    let e = cat.element(&names).map_err(|e| bad(&m.name, &e.to_string()))?;
                    Ok((m.name.clone(), cat.morphism(x, y, e)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Instance::BoolHat(Doc {
                cat,
                objects,
                morphisms,
            }))
        }
        other => Err(Error::InvalidObject(format!("unknown category {other}"))),
    }
}

/// Lattice tables as JSON.
pub fn lattice_json<C: JsonPayload>(cat: &C, l: &KSubLattice<C>) -> Value {
    let labels: Vec<String> = l.elements.iter().map(|m| cat.sub_label(m)).collect();
    let elements: Vec<Value> = l.elements.iter().map(|m| cat.morphism_json(&m.mor)).collect();
    json!({
        "instance": cat.name(),
        "codomain": cat.object_json(&l.codomain),
        "labels": labels,
        "elements": elements,
        "leq": l.leq,
        "meet": l.meet,
        "join": l.join,
        "ortho": l.ortho,
        "bottom": l.bottom,
        "top": l.top,
    })
}

/// Hasse diagram in DOT, cover edges only, drawn bottom-up.
pub fn lattice_dot<C: JsonPayload>(cat: &C, l: &KSubLattice<C>) -> String {
    let mut out = String::from("digraph ksub {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, m) in l.elements.iter().enumerate() {
        let label = cat.sub_label(m).replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{label}\"];").expect("string write");
    }
    for i in 0..l.len() {
        for j in 0..l.len() {
            if l.covers(i, j) {
                writeln!(out, "  n{i} -> n{j};").expect("string write");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::DaggerKernelCategory;

    #[test]
    fn relation_round_trip() {
        let text = r#"{"category": "finrel",
            "objects": [{"name": "X", "elements": ["0", "1"]}, {"name": "Y", "elements": ["a", "b"]}],
            "morphisms": [{"name": "R", "src": "X", "tgt": "Y", "data": [[1, 1], [0, 0]]}]}"#;
        let Instance::FinRel(doc) = parse_instance(text).unwrap() else { panic!() };
        let r = doc.morphism("R").unwrap();
        assert_eq!(r.pairs(), [(0, 0), (1, 0)]);
        assert_eq!(FinRel.data_json(r), json!([[1, 1], [0, 0]]));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_instance("{\n  \"category\": }").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn pinj_and_boolhat_payloads() {
        let text = r#"{"category": "finpinj",
            "objects": [{"name": "X", "elements": ["0", "1"]}, {"name": "A", "elements": ["a"]}],
            "morphisms": [{"name": "f", "src": "X", "tgt": "A", "data": {"0": "a"}}]}"#;
        let Instance::FinPInj(doc) = parse_instance(text).unwrap() else { panic!() };
        assert_eq!(doc.morphism("f").unwrap().table(), [Some(0), None]);
        let text = r#"{"category": "boolhat", "atoms": ["p", "q"],
            "objects": [{"name": "P", "element": ["p"]}, {"name": "T", "element": ["p", "q"]}],
            "morphisms": [{"name": "g", "src": "P", "tgt": "T", "data": ["p"]}]}"#;
        let Instance::BoolHat(doc) = parse_instance(text).unwrap() else { panic!() };
        let g = doc.morphism("g").unwrap();
        assert_eq!(doc.cat.data_json(g), json!(["p"]));
        let bad = r#"{"category": "boolhat", "atoms": ["p", "q"],
            "objects": [{"name": "P", "element": ["p"]}, {"name": "Q", "element": ["q"]}],
            "morphisms": [{"name": "g", "src": "P", "tgt": "Q", "data": ["p"]}]}"#;
        assert!(parse_instance(bad).is_err());
    }

    #[test]
    fn fdhilb_payload() {
        let text = r#"{"category": "fdhilb",
            "objects": [{"name": "C2", "dim": 2}],
            "morphisms": [{"name": "f", "src": "C2", "tgt": "C2", "data": [[[0, 1], 0], [0, 0]]}]}"#;
        let Instance::FdHilb(doc) = parse_instance(text).unwrap() else { panic!() };
        let f = doc.morphism("f").unwrap();
        assert_eq!(f.matrix()[(0, 0)], Complex64::new(0.0, 1.0));
        assert!(doc.cat.is_identity(&doc.cat.identity(&Dim(2))));
    }

    #[test]
    fn diamond_dot() {
        let l = KSubLattice::build(&FinRel, &FinSet::range(2)).unwrap();
        let dot = lattice_dot(&FinRel, &l);
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("label=\"{0,1}\""));
    }
}
