//! JSON definition files and reports.
//!
//! Polynomials travel either in the wire form
//! `[{"coeff": "p/q", "vars": {"d": 2, "l1": 1}}, ...]` or as a compact
//! expression string such as `"l1*d^2 - 3/2"`. Parsing is strict: unknown
//! fields, duplicate keys, non-reduced rationals and repeated monomials are
//! rejected, and syntax errors carry line and column.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::ConformalEndo;
use crate::algebra::{Element, Generator, Parity, Superalgebra};
use crate::cohomology::Cochain;
use crate::constructions::{HomAssocConformal, JordanLieSuperalgebra};
use crate::derivation::DerivationCandidate;
use crate::exactmath::rational::{parse_canonical, to_canonical_string};
use crate::exactmath::{parse_poly, Monomial, Poly, PolyMatrix, Rational, Var};
use crate::report::{CheckOutcome, Report};
use crate::representation::Representation;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{0}")]
    Semantic(#[from] crate::Error),
    #[error("{context}: {message}")]
    Reference { context: String, message: String },
}

pub type IoResult<T> = std::result::Result<T, IoError>;

fn reference(context: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Reference {
        context: context.into(),
        message: message.into(),
    }
}

/// A JSON object whose keys must be distinct; insertion order is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictMap<V>(pub Vec<(String, V)>);

impl<V> Default for StrictMap<V> {
    fn default() -> Self {
        StrictMap(Vec::new())
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for StrictMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V_<V>(PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for V_<V> {
            type Value = StrictMap<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with distinct keys")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                while let Some(key) = map.next_key::<String>()? {
                    if !seen.insert(key.clone()) {
                        return Err(de::Error::custom(format!("duplicate key `{key}`")));
                    }
                    out.push((key, map.next_value()?));
                }
                Ok(StrictMap(out))
            }
        }
        deserializer.deserialize_map(V_(PhantomData))
    }
}

impl<V: Serialize> Serialize for StrictMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Str(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireTerm {
    coeff: Coeff,
    #[serde(default)]
    vars: StrictMap<u32>,
}

fn valid_var_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn poly_from_terms(terms: Vec<WireTerm>) -> Result<Poly, String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for term in terms {
        let c = match term.coeff {
            Coeff::Int(n) => Rational::from_integer(n.into()),
            Coeff::Str(s) => parse_canonical(&s).map_err(|e| e.to_string())?,
        };
        if c == Rational::default() {
            return Err("zero coefficient in wire form".into());
        }
        let mut factors = Vec::new();
        for (name, e) in term.vars.0 {
            if !valid_var_name(&name) {
                return Err(format!("invalid variable name `{name}`"));
            }
            if e == 0 {
                return Err(format!("zero exponent for `{name}`"));
            }
            factors.push((Var::new(&name), e));
        }
        let m = Monomial::from_factors(factors);
        if !seen.insert(m.clone()) {
            return Err(format!("repeated monomial `{m}`"));
        }
        out.push((m, c));
    }
    Ok(Poly::from_terms(out))
}

/// A polynomial in the wire form or as a compact expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirePoly(pub Poly);

impl<'de> Deserialize<'de> for WirePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = WirePoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a polynomial (list of terms or expression string)")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<WirePoly, E> {
                parse_poly(s)
                    .map(WirePoly)
                    .map_err(|e| E::custom(format!("`{s}`: {e}")))
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> Result<WirePoly, E> {
                Ok(WirePoly(Poly::int(n)))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> Result<WirePoly, E> {
                let n = i64::try_from(n).map_err(|_| E::custom("integer out of range"))?;
                Ok(WirePoly(Poly::int(n)))
            }
            fn visit_seq<A: de::SeqAccess<'de>>(self, mut seq: A) -> Result<WirePoly, A::Error> {
                let mut terms = Vec::new();
                while let Some(t) = seq.next_element::<WireTerm>()? {
                    terms.push(t);
                }
                poly_from_terms(terms).map(WirePoly).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_any(PolyVisitor)
    }
}

impl Serialize for WirePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        poly_to_json(&self.0).serialize(serializer)
    }
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                let vars: serde_json::Map<String, Value> = m
                    .factors()
                    .iter()
                    .map(|(v, e)| (v.name().to_string(), json!(e)))
                    .collect();
                json!({"coeff": to_canonical_string(c), "vars": vars})
            })
            .collect(),
    )
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    name: String,
    parity: u8,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    target: String,
    poly: WirePoly,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    delta: i64,
    #[serde(default)]
    scalar_params: Vec<String>,
    basis: Vec<GeneratorFile>,
    alpha: Vec<Vec<WirePoly>>,
    #[serde(default)]
    brackets: StrictMap<Vec<EntryFile>>,
}

fn generators(basis: Vec<GeneratorFile>) -> IoResult<Vec<Generator>> {
    basis
        .into_iter()
        .map(|g| {
            let p = Parity::from_bit(g.parity).ok_or_else(|| reference(&g.name, "parity must be 0 or 1"))?;
            Ok(Generator::new(&g.name, p))
        })
        .collect()
}

fn generators_json(basis: &[Generator]) -> Value {
    Value::Array(
        basis
            .iter()
            .map(|g| json!({"name": g.name, "parity": g.parity.bit()}))
            .collect(),
    )
}

fn matrix(rows: Vec<Vec<WirePoly>>, n: usize, what: &str) -> IoResult<PolyMatrix> {
    if n == 0 && rows.is_empty() {
        return Ok(PolyMatrix::zeros(0, 0));
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(reference(what, format!("expected a {n}x{n} matrix")));
    }
    Ok(
        PolyMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|p| p.0).collect()).collect())
            .expect("rectangular"),
    )
}

pub fn matrix_to_json(m: &PolyMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(poly_to_json).collect()))
            .collect(),
    )
}

fn index(names: &[String], name: &str, context: &str) -> IoResult<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| reference(context, format!("unknown generator `{name}`")))
}

fn split_key(key: &str, arity: usize) -> Vec<&str> {
    if arity == 0 && key.is_empty() {
        Vec::new()
    } else {
        key.split('|').collect()
    }
}

fn element(entries: Vec<EntryFile>, names: &[String], context: &str) -> IoResult<Element> {
    let mut v = Element::zero(names.len());
    let mut seen = BTreeSet::new();
    for e in entries {
        let k = index(names, &e.target, context)?;
        if !seen.insert(k) {
            return Err(reference(context, format!("target `{}` listed twice", e.target)));
        }
        v.set(k, e.poly.0);
    }
    Ok(v)
}

pub fn element_to_json(v: &Element, names: &[String]) -> Value {
    Value::Array(
        v.support()
            .map(|(k, p)| json!({"target": names[k], "poly": poly_to_json(p)}))
            .collect(),
    )
}

fn scalar_params(names: Vec<String>) -> IoResult<BTreeSet<Var>> {
    let mut out = BTreeSet::new();
    for n in names {
        if !valid_var_name(&n) {
            return Err(reference("scalar_params", format!("invalid name `{n}`")));
        }
        if !out.insert(Var::new(&n)) {
            return Err(reference("scalar_params", format!("`{n}` listed twice")));
        }
    }
    Ok(out)
}

fn pair_map(
    map: StrictMap<Vec<EntryFile>>,
    names: &[String],
    what: &str,
) -> IoResult<BTreeMap<(usize, usize), Element>> {
    let mut out = BTreeMap::new();
    for (key, entries) in map.0 {
        let context = format!("{what} `{key}`");
        let parts = split_key(&key, 2);
        if parts.len() != 2 {
            return Err(reference(&context, "keys have the form `a|b`"));
        }
        let pair = (index(names, parts[0], &context)?, index(names, parts[1], &context)?);
        out.insert(pair, element(entries, names, &context)?);
    }
    Ok(out)
}

pub fn parse_algebra(text: &str) -> IoResult<Superalgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let basis = generators(file.basis)?;
    let names: Vec<String> = basis.iter().map(|g| g.name.clone()).collect();
    let alpha = matrix(file.alpha, names.len(), "alpha")?;
    let stored = pair_map(file.brackets, &names, "bracket")?;
    let params = scalar_params(file.scalar_params)?;
    Ok(Superalgebra::new(file.delta, basis, alpha, stored, params)?)
}

fn pairs_json(map: &BTreeMap<(usize, usize), Element>, names: &[String]) -> Value {
    let obj: serde_json::Map<String, Value> = map
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|((i, j), v)| (format!("{}|{}", names[*i], names[*j]), element_to_json(v, names)))
        .collect();
    Value::Object(obj)
}

/// The algebra with the bracket orientations it was given.
pub fn algebra_to_json(a: &Superalgebra) -> Value {
    let names = a.names();
    json!({
        "delta": a.delta(),
        "scalar_params": a.scalar_params().iter().map(|v| v.name().to_string()).collect::<Vec<_>>(),
        "basis": generators_json(a.basis()),
        "alpha": matrix_to_json(a.alpha()),
        "brackets": pairs_json(a.stored(), &names),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    module_basis: Vec<GeneratorFile>,
    beta: Vec<Vec<WirePoly>>,
    #[serde(default)]
    rho: StrictMap<Vec<Vec<WirePoly>>>,
}

pub fn parse_representation(a: &Superalgebra, text: &str) -> IoResult<Representation> {
    let file: RepresentationFile = serde_json::from_str(text)?;
    let basis = generators(file.module_basis)?;
    let m = basis.len();
    let beta = matrix(file.beta, m, "beta")?;
    let names = a.names();
    let mut rho = vec![PolyMatrix::zeros(m, m); a.dim()];
    for (key, rows) in file.rho.0 {
        let i = index(&names, &key, "rho")?;
        rho[i] = matrix(rows, m, &format!("rho `{key}`"))?;
    }
    Ok(Representation::new(a, basis, beta, rho)?)
}

pub fn representation_to_json(a: &Superalgebra, r: &Representation) -> Value {
    let rho: serde_json::Map<String, Value> = r
        .rho()
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(i, m)| (a.name(i).to_string(), matrix_to_json(m)))
        .collect();
    json!({
        "module_basis": generators_json(r.module_basis()),
        "beta": matrix_to_json(r.beta()),
        "rho": rho,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CochainFile {
    arity: usize,
    parity: u8,
    #[serde(default)]
    values: StrictMap<Vec<EntryFile>>,
}

/// Keys are `a|b|..` in nondecreasing basis order (the empty string for a
/// 0-cochain); values are module elements.
pub fn parse_cochain(a: &Superalgebra, r: &Representation, text: &str) -> IoResult<Cochain> {
    let file: CochainFile = serde_json::from_str(text)?;
    let parity = Parity::from_bit(file.parity).ok_or_else(|| reference("cochain", "parity must be 0 or 1"))?;
    let names = a.names();
    let module = r.names();
    let mut values = BTreeMap::new();
    for (key, entries) in file.values.0 {
        let context = format!("cochain value `{key}`");
        let parts = split_key(&key, file.arity);
        if parts.len() != file.arity {
            return Err(reference(&context, format!("expected {} arguments", file.arity)));
        }
        let t = parts
            .iter()
            .map(|p| index(&names, p, &context))
            .collect::<IoResult<Vec<_>>>()?;
        values.insert(t, element(entries, &module, &context)?);
    }
    Ok(Cochain::new(a, r, file.arity, parity, values)?)
}

pub fn cochain_to_json(a: &Superalgebra, r: &Representation, c: &Cochain) -> Value {
    let names = a.names();
    let module = r.names();
    let values: serde_json::Map<String, Value> = c
        .values()
        .iter()
        .map(|(t, v)| {
            let key: Vec<&str> = t.iter().map(|&i| names[i].as_str()).collect();
            (key.join("|"), element_to_json(v, &module))
        })
        .collect();
    json!({"arity": c.arity(), "parity": c.parity().bit(), "values": values})
}

pub fn parse_matrix(text: &str, n: usize) -> IoResult<PolyMatrix> {
    let rows: Vec<Vec<WirePoly>> = serde_json::from_str(text)?;
    matrix(rows, n, "matrix")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivationFile {
    parity: u8,
    k: u32,
    matrix: Vec<Vec<WirePoly>>,
}

/// `{"parity": 0, "k": 1, "matrix": [[Poly in l1, d]]}` with
/// `D_l1(e_j) = sum_i matrix[i][j] e_i`.
pub fn parse_derivation(a: &Superalgebra, text: &str) -> IoResult<DerivationCandidate> {
    let file: DerivationFile = serde_json::from_str(text)?;
    let parity = Parity::from_bit(file.parity).ok_or_else(|| reference("derivation", "parity must be 0 or 1"))?;
    let m = matrix(file.matrix, a.dim(), "derivation matrix")?;
    let mut allowed = a.scalar_params().clone();
    allowed.insert(Var::d());
    allowed.insert(Var::lambda(1));
    for (r, c, p) in m.entries() {
        crate::algebra::superalgebra::check_vars(p, &allowed, &format!("derivation[{r}][{c}]"))?;
        if !p.is_zero() && a.parity(r) != a.parity(c) + parity {
            return Err(crate::Error::Grading {
                location: format!("derivation[{r}][{c}]"),
                target: a.name(r).to_string(),
            }
            .into());
        }
    }
    Ok(DerivationCandidate::new(ConformalEndo::in_l1(parity, m), file.k))
}

pub fn derivation_to_json(d: &DerivationCandidate) -> Value {
    let map = d.map.with_var(Var::lambda(1));
    json!({"parity": d.parity().bit(), "k": d.k, "matrix": matrix_to_json(map.entries())})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarEntry {
    target: String,
    coeff: Coeff,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    delta: i64,
    basis: Vec<GeneratorFile>,
    alpha: Vec<Vec<Coeff>>,
    #[serde(default)]
    brackets: StrictMap<Vec<ScalarEntry>>,
}

fn rational(c: Coeff) -> IoResult<Rational> {
    match c {
        Coeff::Int(n) => Ok(Rational::from_integer(n.into())),
        Coeff::Str(s) => parse_canonical(&s).map_err(|e| reference("coefficient", e.to_string())),
    }
}

/// A finite-dimensional algebra with rational structure constants:
/// `{"delta", "basis", "alpha": [[q]], "brackets": {"x|y": [{"target", "coeff"}]}}`.
/// With `checked` the axioms must hold.
pub fn parse_jordan_lie(text: &str, checked: bool) -> IoResult<JordanLieSuperalgebra> {
    let file: LieFile = serde_json::from_str(text)?;
    let basis = generators(file.basis)?;
    let names: Vec<String> = basis.iter().map(|g| g.name.clone()).collect();
    let n = names.len();
    let alpha = file
        .alpha
        .into_iter()
        .map(|r| r.into_iter().map(rational).collect::<IoResult<Vec<_>>>())
        .collect::<IoResult<Vec<_>>>()?;
    let mut brackets = BTreeMap::new();
    for (key, entries) in file.brackets.0 {
        let context = format!("bracket `{key}`");
        let parts = split_key(&key, 2);
        if parts.len() != 2 {
            return Err(reference(&context, "keys have the form `a|b`"));
        }
        let pair = (index(&names, parts[0], &context)?, index(&names, parts[1], &context)?);
        let mut v = vec![Rational::default(); n];
        for e in entries {
            v[index(&names, &e.target, &context)?] = rational(e.coeff)?;
        }
        brackets.insert(pair, v);
    }
    let g = if checked {
        JordanLieSuperalgebra::new(file.delta, basis, brackets, alpha)?
    } else {
        JordanLieSuperalgebra::new_unchecked(file.delta, basis, brackets, alpha)?
    };
    Ok(g)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HomAssocFile {
    delta: i64,
    basis: Vec<GeneratorFile>,
    alpha: Vec<Vec<WirePoly>>,
    #[serde(default)]
    products: StrictMap<Vec<EntryFile>>,
}

/// `{"delta", "basis", "alpha", "products": {"a|b": [entries]}}`; absent
/// products are zero.
pub fn parse_hom_assoc(text: &str) -> IoResult<HomAssocConformal> {
    let file: HomAssocFile = serde_json::from_str(text)?;
    let basis = generators(file.basis)?;
    let names: Vec<String> = basis.iter().map(|g| g.name.clone()).collect();
    let alpha = matrix(file.alpha, names.len(), "alpha")?;
    let products = pair_map(file.products, &names, "product")?;
    Ok(HomAssocConformal::new(file.delta, basis, alpha, products)?)
}

fn outcome_to_json(c: &CheckOutcome) -> Value {
    let failures: Vec<Value> = c
        .failures()
        .map(|id| json!({"location": id.location, "residual": element_to_json(id.residual(), &c.names)}))
        .collect();
    let violations: Vec<Value> = c
        .violations
        .iter()
        .map(|v| json!({"location": v.location, "message": v.message}))
        .collect();
    json!({
        "name": c.name,
        "passed": c.passed(),
        "identities": c.identities.len(),
        "failures": failures,
        "violations": violations,
    })
}

pub fn report_to_json(r: &Report) -> Value {
    json!({
        "subject": r.subject,
        "passed": r.passed(),
        "elapsed_ms": r.elapsed.as_secs_f64() * 1000.0,
        "checks": r.checks.iter().map(outcome_to_json).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}
