//! The JSON interchange formats for algebras, maps and sigma forms.
//!
//! Rationals are written as strings matching `-?[0-9]+(/[1-9][0-9]*)?` in
//! lowest terms. Output key order is fixed and products are sorted by basis
//! index, so serialization is byte-stable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::algebra::{is_identifier, BasisEntry, Element, EvenMap, Flavor, GradedAlgebra, GradedBasis, StructureConstants};
use crate::error::{Error, Result};
use crate::grading::{BiCharacter, GroupElement, GroupSpec, SigmaForm};
use crate::Rational;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

/// Parses a rational in the interchange grammar.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let body = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let ok = digits(num) && den.is_none_or(|d| digits(d) && !d.starts_with('0'));
    if !ok {
        return Err(malformed(format!("`{s}` is not a rational (expected p or p/q)")));
    }
    let mut n: BigInt = num.parse().map_err(|_| malformed(format!("bad numerator in `{s}`")))?;
    if s.starts_with('-') {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| malformed(format!("bad denominator in `{s}`")))?,
        None => BigInt::from(1),
    };
    Ok(Rational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

fn rat_value(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(format!("{ctx}: missing key `{key}`")))
}

fn as_object<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| malformed(format!("{ctx}: expected an object")))
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("{ctx}: expected an array")))
}

fn as_rational(v: &Value, ctx: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| malformed(format!("{ctx}: {e}"))),
        _ => Err(malformed(format!("{ctx}: rationals must be strings"))),
    }
}

fn as_int(v: &Value, ctx: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| malformed(format!("{ctx}: expected an integer")))
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| malformed(format!("line {} column {}: {}", e.line(), e.column(), e)))
}

fn parse_degree(spec: &GroupSpec, v: &Value, ctx: &str) -> Result<GroupElement> {
    let coords = as_array(v, ctx)?
        .iter()
        .map(|c| as_int(c, ctx))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != spec.rank() {
        return Err(malformed(format!("{ctx}: degree has {} coordinates, group has {}", coords.len(), spec.rank())));
    }
    let g = spec.element(coords.clone())?;
    if g.coords() != coords.as_slice() {
        return Err(malformed(format!("{ctx}: degree {coords:?} is not reduced")));
    }
    Ok(g)
}

fn degree_value(g: &GroupElement) -> Value {
    Value::Array(g.coords().iter().map(|&c| Value::from(c)).collect())
}

fn parse_group(v: &Value) -> Result<GroupSpec> {
    let obj = as_object(v, "group")?;
    let free = get(obj, "free_rank", "group")?
        .as_u64()
        .ok_or_else(|| malformed("group.free_rank: expected a non-negative integer"))?;
    let torsion = as_array(get(obj, "torsion", "group")?, "group.torsion")?
        .iter()
        .map(|t| t.as_u64().ok_or_else(|| malformed("group.torsion: expected non-negative integers")))
        .collect::<Result<Vec<_>>>()?;
    GroupSpec::new(free as usize, torsion)
}

fn parse_matrix(v: &Value, ctx: &str) -> Result<Vec<Vec<Rational>>> {
    as_array(v, ctx)?
        .iter()
        .map(|row| as_array(row, ctx)?.iter().map(|x| as_rational(x, ctx)).collect())
        .collect()
}

fn matrix_value(m: &[Vec<Rational>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(rat_value).collect())).collect())
}

fn parse_element(basis: &GradedBasis, v: &Value, ctx: &str) -> Result<Element<Rational>> {
    let mut e = Element::zero();
    for (name, c) in as_object(v, ctx)? {
        let k = basis.index_of(name).ok_or_else(|| malformed(format!("{ctx}: unknown basis name `{name}`")))?;
        e.add_term(k, as_rational(c, ctx)?);
    }
    Ok(e)
}

fn element_value(basis: &GradedBasis, e: &Element<Rational>) -> Value {
    Value::Object(e.terms().map(|(k, c)| (basis.name(k).to_owned(), rat_value(c))).collect())
}

/// Parses a map block `{ "x": { "y": "c", ... }, ... }` from `domain` to
/// `codomain`. Absent columns are zero.
pub fn parse_map_value(domain: &GradedBasis, codomain: &GradedBasis, v: &Value) -> Result<EvenMap<Rational>> {
    let mut cols = Vec::new();
    for (name, img) in as_object(v, "map")? {
        let i = domain.index_of(name).ok_or_else(|| malformed(format!("map: unknown basis name `{name}`")))?;
        cols.push((i, parse_element(codomain, img, &format!("map.{name}"))?));
    }
    EvenMap::from_columns(domain.len(), codomain.len(), cols)
}

pub fn map_value(domain: &GradedBasis, codomain: &GradedBasis, f: &EvenMap<Rational>) -> Value {
    Value::Object(
        (0..domain.len())
            .map(|i| (domain.name(i).to_owned(), element_value(codomain, &f.column(i))))
            .collect(),
    )
}

/// Parses a standalone map file.
pub fn parse_map(domain: &GradedBasis, codomain: &GradedBasis, text: &str) -> Result<EvenMap<Rational>> {
    parse_map_value(domain, codomain, &parse_json(text)?)
}

pub fn serialize_map(domain: &GradedBasis, codomain: &GradedBasis, f: &EvenMap<Rational>) -> String {
    pretty(&map_value(domain, codomain, f))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Parses an algebra file. Structural problems (syntax, unknown names,
/// non-canonical degrees, invalid eps) are errors; uneven products are
/// accepted so that verification can report them.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebra<Rational>> {
    let root = parse_json(text)?;
    let obj = as_object(&root, "document")?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "group" | "epsilon" | "basis" | "products" | "twist" | "flavor") {
            return Err(malformed(format!("unknown top-level key `{key}`")));
        }
    }
    let spec = parse_group(get(obj, "group", "document")?)?;
    let eps_obj = as_object(get(obj, "epsilon", "document")?, "epsilon")?;
    let eps = BiCharacter::new(spec.clone(), parse_matrix(get(eps_obj, "matrix", "epsilon")?, "epsilon.matrix")?)?;

    let mut entries = Vec::new();
    for (n, b) in as_array(get(obj, "basis", "document")?, "basis")?.iter().enumerate() {
        let ctx = format!("basis[{n}]");
        let bo = as_object(b, &ctx)?;
        let name = get(bo, "name", &ctx)?.as_str().ok_or_else(|| malformed(format!("{ctx}.name: expected a string")))?;
        let degree = parse_degree(&spec, get(bo, "degree", &ctx)?, &ctx)?;
        entries.push(BasisEntry { name: name.to_owned(), degree });
    }
    let basis = GradedBasis::new(&spec, entries)?;

    let mut mult = StructureConstants::new();
    if let Some(p) = obj.get("products") {
        for (key, val) in as_object(p, "products")? {
            let ctx = format!("products.\"{key}\"");
            let (l, r) = key.split_once(',').ok_or_else(|| malformed(format!("{ctx}: key must be `name1,name2`")))?;
            let idx = |s: &str| {
                basis.index_of(s.trim()).ok_or_else(|| malformed(format!("{ctx}: unknown basis name `{}`", s.trim())))
            };
            let (i, j) = (idx(l)?, idx(r)?);
            if mult.contains(i, j) {
                return Err(malformed(format!("{ctx}: duplicate product")));
            }
            mult.set(i, j, parse_element(&basis, val, &ctx)?);
        }
    }
    let twist = obj.get("twist").map(|t| parse_map_value(&basis, &basis, t)).transpose()?;
    let flavor = match obj.get("flavor") {
        Some(Value::String(s)) => s.parse()?,
        Some(_) => return Err(malformed("flavor: expected a string")),
        None => Flavor::Raw,
    };
    GradedAlgebra::new_unchecked(eps, basis, mult, twist, flavor)
}

pub fn algebra_value(a: &GradedAlgebra<Rational>) -> Value {
    let spec = a.spec();
    let basis = a.basis();
    let mut root = Map::new();
    let mut group = Map::new();
    group.insert("free_rank".into(), Value::from(spec.free_rank()));
    group.insert("torsion".into(), Value::Array(spec.torsion_orders().iter().map(|&n| Value::from(n)).collect()));
    root.insert("group".into(), Value::Object(group));
    let mut eps = Map::new();
    eps.insert("matrix".into(), matrix_value(a.epsilon().matrix()));
    root.insert("epsilon".into(), Value::Object(eps));
    root.insert(
        "basis".into(),
        Value::Array(
            basis
                .entries()
                .iter()
                .map(|e| {
                    let mut m = Map::new();
                    m.insert("name".into(), Value::String(e.name.clone()));
                    m.insert("degree".into(), degree_value(&e.degree));
                    Value::Object(m)
                })
                .collect(),
        ),
    );
    root.insert(
        "products".into(),
        Value::Object(
            a.mult()
                .iter()
                .map(|((i, j), v)| (format!("{},{}", basis.name(i), basis.name(j)), element_value(basis, v)))
                .collect(),
        ),
    );
    if let Some(z) = a.twist() {
        root.insert("twist".into(), map_value(basis, basis, z));
    }
    root.insert("flavor".into(), Value::String(a.flavor().to_string()));
    Value::Object(root)
}

pub fn serialize_algebra(a: &GradedAlgebra<Rational>) -> String {
    pretty(&algebra_value(a))
}

/// Parses a sigma file against the grading group of the target algebra.
pub fn parse_sigma(spec: &GroupSpec, text: &str) -> Result<SigmaForm<Rational>> {
    let root = parse_json(text)?;
    let obj = as_object(&root, "sigma")?;
    let kind = get(obj, "kind", "sigma")?.as_str().ok_or_else(|| malformed("sigma.kind: expected a string"))?;
    match kind {
        "bimultiplicative" => SigmaForm::bimultiplicative(spec.clone(), parse_matrix(get(obj, "matrix", "sigma")?, "sigma.matrix")?),
        "coboundary" => {
            let mut omega = BTreeMap::new();
            for (n, e) in as_array(get(obj, "omega", "sigma")?, "sigma.omega")?.iter().enumerate() {
                let ctx = format!("sigma.omega[{n}]");
                let eo = as_object(e, &ctx)?;
                let g = parse_degree(spec, get(eo, "degree", &ctx)?, &ctx)?;
                if omega.insert(g, as_rational(get(eo, "value", &ctx)?, &ctx)?).is_some() {
                    return Err(malformed(format!("{ctx}: duplicate degree")));
                }
            }
            let default = obj.get("default").map(|d| as_rational(d, "sigma.default")).transpose()?;
            SigmaForm::coboundary(spec.clone(), omega, default)
        }
        "explicit" => {
            let mut table = BTreeMap::new();
            for (n, e) in as_array(get(obj, "table", "sigma")?, "sigma.table")?.iter().enumerate() {
                let ctx = format!("sigma.table[{n}]");
                let eo = as_object(e, &ctx)?;
                let a = parse_degree(spec, get(eo, "alpha", &ctx)?, &ctx)?;
                let b = parse_degree(spec, get(eo, "beta", &ctx)?, &ctx)?;
                if table.insert((a, b), as_rational(get(eo, "value", &ctx)?, &ctx)?).is_some() {
                    return Err(malformed(format!("{ctx}: duplicate entry")));
                }
            }
            SigmaForm::explicit(spec.clone(), table)
        }
        other => Err(malformed(format!("sigma.kind: unknown kind `{other}`"))),
    }
}

pub fn serialize_sigma(sigma: &SigmaForm<Rational>) -> String {
    let mut root = Map::new();
    match sigma {
        SigmaForm::Bimultiplicative { matrix, .. } => {
            root.insert("kind".into(), Value::from("bimultiplicative"));
            root.insert("matrix".into(), matrix_value(matrix));
        }
        SigmaForm::Coboundary { omega, default, .. } => {
            root.insert("kind".into(), Value::from("coboundary"));
            root.insert(
                "omega".into(),
                Value::Array(
                    omega
                        .iter()
                        .map(|(g, v)| {
                            let mut m = Map::new();
                            m.insert("degree".into(), degree_value(g));
                            m.insert("value".into(), rat_value(v));
                            Value::Object(m)
                        })
                        .collect(),
                ),
            );
            if let Some(d) = default {
                root.insert("default".into(), rat_value(d));
            }
        }
        SigmaForm::Explicit { table, .. } => {
            root.insert("kind".into(), Value::from("explicit"));
            root.insert(
                "table".into(),
                Value::Array(
                    table
                        .iter()
                        .map(|((a, b), v)| {
                            let mut m = Map::new();
                            m.insert("alpha".into(), degree_value(a));
                            m.insert("beta".into(), degree_value(b));
                            m.insert("value".into(), rat_value(v));
                            Value::Object(m)
                        })
                        .collect(),
                ),
            );
        }
    }
    pretty(&Value::Object(root))
}

/// Whether `s` is usable as a basis name.
pub fn valid_name(s: &str) -> bool {
    is_identifier(s)
}
