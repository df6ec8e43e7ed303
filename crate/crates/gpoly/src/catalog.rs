//! Named-matroid catalog and the JSON interchange format.
//!
//! A matroid description is a JSON object with exactly one defining variant:
//!
//! - `{"n": 4, "bases": [[1,3],[1,4],...]}` — explicit bases;
//! - `{"n": 7, "rank": 3, "nonbases": [[1,2,3],...]}` — all `rank`-subsets
//!   except the listed ones;
//! - `{"schubert": {"n": 12, "upper": [1,2,5,7,10]}}` — Schubert matroid;
//! - `{"graph": {"vertices": 4, "edges": [[1,2],...]}}` — cycle matroid of a
//!   multigraph, elements numbered by 1-based edge position;
//! - `{"name": "fano"}` or `{"name": "uniform", "params": {"r": 2, "n": 4}}`
//!   — catalog reference.
//!
//! An optional `"label"` string is carried through unchanged. Unknown keys
//! are rejected. The named entries with fixed data live as JSON files under
//! `data/` in this exact format, so they can be audited field by field.

use std::collections::{BTreeMap, HashSet};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Matroid};
use crate::schubert::SchubertMatroid;

/// A parsed matroid description: one defining variant plus an optional label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidSpec {
    pub label: Option<String>,
    pub form: SpecForm,
}

/// The defining variant of a [`MatroidSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecForm {
    /// Explicit list of bases on ground set `{1..n}`.
    Bases { n: usize, bases: Vec<Vec<usize>> },
    /// All `rank`-subsets of `{1..n}` except the listed ones.
    Nonbases { n: usize, rank: usize, nonbases: Vec<Vec<usize>> },
    /// Schubert matroid `S(n, upper)`.
    Schubert { n: usize, upper: Vec<usize> },
    /// Cycle matroid of a multigraph; elements are 1-based edge indices.
    Graph { vertices: usize, edges: Vec<(usize, usize)> },
    /// Catalog entry, optionally parameterized.
    Named { name: String, params: BTreeMap<String, usize> },
}

/// A realized description: either a general matroid with explicit bases or a
/// Schubert matroid (which keeps its lattice-path structure available).
#[derive(Debug, Clone)]
pub enum Realized {
    General(Matroid),
    Schubert(SchubertMatroid),
}

impl Realized {
    pub fn into_matroid(self) -> Matroid {
        match self {
            Realized::General(m) => m,
            Realized::Schubert(s) => s.to_matroid(),
        }
    }

    pub fn as_schubert(&self) -> Option<&SchubertMatroid> {
        match self {
            Realized::Schubert(s) => Some(s),
            Realized::General(_) => None,
        }
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

/// Parse a JSON matroid description. Errors name the offending field.
pub fn parse_matroid(text: &[u8]) -> Result<MatroidSpec> {
    let s = std::str::from_utf8(text).map_err(|_| schema("input is not valid UTF-8"))?;
    let v: Value =
        serde_json::from_str(s).map_err(|e| schema(format!("malformed JSON: {e}")))?;
    spec_from_value(&v)
}

fn get_uint(obj: &Map<String, Value>, field: &str) -> Result<usize> {
    let v = obj
        .get(field)
        .ok_or_else(|| schema(format!("missing field {field:?}")))?;
    match v.as_u64() {
        Some(u) => Ok(u as usize),
        None => Err(schema(format!("{field:?} must be a nonnegative integer"))),
    }
}

fn check_n(n: usize) -> Result<usize> {
    if (1..=64).contains(&n) {
        Ok(n)
    } else {
        Err(schema(format!("\"n\" is {n}, supported range is 1..=64")))
    }
}

/// Read a list of element lists (for `bases` / `nonbases`), checking every
/// label against the ground set and rejecting duplicates.
fn element_rows(obj: &Map<String, Value>, field: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let v = obj.get(field).unwrap();
    let rows = v
        .as_array()
        .ok_or_else(|| schema(format!("{field:?} must be an array of element lists")))?;
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(rows.len());
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for (i, row) in rows.iter().enumerate() {
        let items = row
            .as_array()
            .ok_or_else(|| schema(format!("{field}[{i}] must be an array of integers")))?;
        let mut elems = Vec::with_capacity(items.len());
        for (j, item) in items.iter().enumerate() {
            let e = item
                .as_u64()
                .ok_or_else(|| schema(format!("{field}[{i}][{j}] must be an integer")))?
                as usize;
            if e < 1 || e > n {
                return Err(schema(format!(
                    "{field}[{i}][{j}] = {e} is out of range 1..={n}"
                )));
            }
            if elems.contains(&e) {
                return Err(schema(format!("{field}[{i}] repeats element {e}")));
            }
            elems.push(e);
        }
        let mut key = elems.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            return Err(schema(format!("{field}[{i}] duplicates an earlier entry")));
        }
        out.push(elems);
    }
    Ok(out)
}

/// Reject any present key outside the allowed set for the detected form.
fn check_keys(obj: &Map<String, Value>, form: &str, allowed: &[&str]) -> Result<()> {
    for k in obj.keys() {
        if k != "label" && !allowed.contains(&k.as_str()) {
            return Err(schema(format!(
                "key {k:?} is not allowed with the {form:?} form"
            )));
        }
    }
    Ok(())
}

fn spec_from_value(v: &Value) -> Result<MatroidSpec> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema("top level must be a JSON object"))?;
    const KNOWN: [&str; 9] = [
        "label", "n", "rank", "bases", "nonbases", "schubert", "graph", "name", "params",
    ];
    for k in obj.keys() {
        if !KNOWN.contains(&k.as_str()) {
            return Err(schema(format!("unknown key {k:?}")));
        }
    }
    let label = match obj.get("label") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(schema("\"label\" must be a string")),
    };

    let markers = ["bases", "nonbases", "schubert", "graph", "name"];
    let present: Vec<&str> = markers.iter().copied().filter(|k| obj.contains_key(*k)).collect();
    if present.len() != 1 {
        return Err(schema(format!(
            "expected exactly one of \"bases\", \"nonbases\", \"schubert\", \"graph\", \"name\"; found {}",
            present.len()
        )));
    }

    let form = match present[0] {
        "bases" => {
            check_keys(obj, "bases", &["bases", "n"])?;
            let n = check_n(get_uint(obj, "n")?)?;
            let bases = element_rows(obj, "bases", n)?;
            SpecForm::Bases { n, bases }
        }
        "nonbases" => {
            check_keys(obj, "nonbases", &["nonbases", "n", "rank"])?;
            let n = check_n(get_uint(obj, "n")?)?;
            let rank = get_uint(obj, "rank")?;
            if rank > n {
                return Err(schema(format!("\"rank\" is {rank}, must be at most n = {n}")));
            }
            let nonbases = element_rows(obj, "nonbases", n)?;
            for (i, row) in nonbases.iter().enumerate() {
                if row.len() != rank {
                    return Err(schema(format!(
                        "nonbases[{i}] has {} elements, expected rank {rank}",
                        row.len()
                    )));
                }
            }
            SpecForm::Nonbases { n, rank, nonbases }
        }
        "schubert" => {
            check_keys(obj, "schubert", &["schubert"])?;
            let inner = obj["schubert"]
                .as_object()
                .ok_or_else(|| schema("\"schubert\" must be an object"))?;
            for k in inner.keys() {
                if k != "n" && k != "upper" {
                    return Err(schema(format!("unknown key {k:?} inside \"schubert\"")));
                }
            }
            let n = check_n(get_uint(inner, "n")?)?;
            let upper_val = inner
                .get("upper")
                .ok_or_else(|| schema("missing field \"upper\""))?;
            let items = upper_val
                .as_array()
                .ok_or_else(|| schema("\"upper\" must be an array of integers"))?;
            let mut upper = Vec::with_capacity(items.len());
            for (j, item) in items.iter().enumerate() {
                let e = item
                    .as_u64()
                    .ok_or_else(|| schema(format!("upper[{j}] must be an integer")))?
                    as usize;
                if e < 1 || e > n {
                    return Err(schema(format!("upper[{j}] = {e} is out of range 1..={n}")));
                }
                upper.push(e);
            }
            SpecForm::Schubert { n, upper }
        }
        "graph" => {
            check_keys(obj, "graph", &["graph"])?;
            let inner = obj["graph"]
                .as_object()
                .ok_or_else(|| schema("\"graph\" must be an object"))?;
            for k in inner.keys() {
                if k != "vertices" && k != "edges" {
                    return Err(schema(format!("unknown key {k:?} inside \"graph\"")));
                }
            }
            let vertices = get_uint(inner, "vertices")?;
            if vertices == 0 {
                return Err(schema("\"vertices\" must be at least 1"));
            }
            let rows = inner
                .get("edges")
                .ok_or_else(|| schema("missing field \"edges\""))?
                .as_array()
                .ok_or_else(|| schema("\"edges\" must be an array of endpoint pairs"))?;
            if rows.len() > 64 {
                return Err(schema(format!(
                    "graph has {} edges, supported maximum is 64",
                    rows.len()
                )));
            }
            let mut edges = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let pair = row
                    .as_array()
                    .ok_or_else(|| schema(format!("edges[{i}] must be a pair of vertices")))?;
                if pair.len() != 2 {
                    return Err(schema(format!(
                        "edges[{i}] has {} entries, expected 2",
                        pair.len()
                    )));
                }
                let mut ends = [0usize; 2];
                for (j, item) in pair.iter().enumerate() {
                    let e = item
                        .as_u64()
                        .ok_or_else(|| schema(format!("edges[{i}][{j}] must be an integer")))?
                        as usize;
                    if e < 1 || e > vertices {
                        return Err(schema(format!(
                            "edges[{i}][{j}] = {e} is out of range 1..={vertices}"
                        )));
                    }
                    ends[j] = e;
                }
                edges.push((ends[0], ends[1]));
            }
            SpecForm::Graph { vertices, edges }
        }
        "name" => {
            check_keys(obj, "name", &["name", "params"])?;
            let name = obj["name"]
                .as_str()
                .ok_or_else(|| schema("\"name\" must be a string"))?
                .to_string();
            let mut params = BTreeMap::new();
            if let Some(pv) = obj.get("params") {
                let pobj = pv
                    .as_object()
                    .ok_or_else(|| schema("\"params\" must be an object"))?;
                for (k, val) in pobj {
                    let u = val.as_u64().ok_or_else(|| {
                        schema(format!("params.{k} must be a nonnegative integer"))
                    })? as usize;
                    params.insert(k.clone(), u);
                }
            }
            SpecForm::Named { name, params }
        }
        _ => unreachable!(),
    };
    Ok(MatroidSpec { label, form })
}

/// Canonical JSON for a `MatroidSpec` (keys alphabetized). `parse_matroid`
/// of the output reproduces the input value exactly.
pub fn serialize_spec(spec: &MatroidSpec) -> String {
    let mut obj = Map::new();
    if let Some(l) = &spec.label {
        obj.insert("label".into(), json!(l));
    }
    match &spec.form {
        SpecForm::Bases { n, bases } => {
            obj.insert("n".into(), json!(n));
            obj.insert("bases".into(), json!(bases));
        }
        SpecForm::Nonbases { n, rank, nonbases } => {
            obj.insert("n".into(), json!(n));
            obj.insert("rank".into(), json!(rank));
            obj.insert("nonbases".into(), json!(nonbases));
        }
        SpecForm::Schubert { n, upper } => {
            obj.insert("schubert".into(), json!({ "n": n, "upper": upper }));
        }
        SpecForm::Graph { vertices, edges } => {
            let rows: Vec<[usize; 2]> = edges.iter().map(|&(a, b)| [a, b]).collect();
            obj.insert("graph".into(), json!({ "vertices": vertices, "edges": rows }));
        }
        SpecForm::Named { name, params } => {
            obj.insert("name".into(), json!(name));
            if !params.is_empty() {
                obj.insert("params".into(), json!(params));
            }
        }
    }
    Value::Object(obj).to_string()
}

/// All `r`-subsets of `{1..n}` in lexicographic order. Every `r`-subset
/// dominates `{1..r}` componentwise, so the uniform Schubert matroid's basis
/// enumeration produces exactly this family.
fn r_subsets(n: usize, r: usize) -> Vec<ElementSet> {
    if r == 0 {
        return vec![ElementSet::empty()];
    }
    SchubertMatroid::new(n, (1..=r).collect())
        .expect("1 <= r <= n <= 64 was checked")
        .bases()
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Joins the two classes; false if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.0[ra] = rb;
            true
        }
    }
}

/// Spanning trees of a connected multigraph as edge sets (1-based edge
/// indices), in lexicographic order.
fn spanning_trees(vertices: usize, edges: &[(usize, usize)]) -> Result<Vec<ElementSet>> {
    let mut dsu = Dsu::new(vertices);
    for &(a, b) in edges {
        dsu.union(a - 1, b - 1);
    }
    let root = dsu.find(0);
    if (1..vertices).any(|v| dsu.find(v) != root) {
        return Err(Error::GraphNotConnected);
    }

    let need = vertices - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    // depth-first selection in index order; each level clones the small
    // union-find state rather than implementing rollback
    fn rec(
        edges: &[(usize, usize)],
        from: usize,
        need: usize,
        dsu: &Dsu,
        chosen: &mut Vec<usize>,
        out: &mut Vec<ElementSet>,
    ) {
        if need == 0 {
            let mut set = ElementSet::empty();
            for &i in chosen.iter() {
                set = set.with(i + 1);
            }
            out.push(set);
            return;
        }
        for i in from..edges.len() {
            if edges.len() - i < need {
                break;
            }
            let mut next = Dsu(dsu.0.clone());
            let (a, b) = edges[i];
            if !next.union(a - 1, b - 1) {
                continue; // self-loop or cycle-creating edge
            }
            chosen.push(i);
            rec(edges, i + 1, need - 1, &next, chosen, out);
            chosen.pop();
        }
    }
    rec(edges, 0, need, &Dsu::new(vertices), &mut chosen, &mut out);
    Ok(out)
}

/// Build explicit bases from a spec. Data-driven forms are validated against
/// the basis-exchange axiom, so a corrupted data file cannot slip through.
pub fn realize(spec: &MatroidSpec) -> Result<Realized> {
    match &spec.form {
        SpecForm::Bases { n, bases } => {
            Ok(Realized::General(Matroid::from_base_lists(*n, bases, true)?))
        }
        SpecForm::Nonbases { n, rank, nonbases } => {
            let excluded: HashSet<ElementSet> =
                nonbases.iter().map(|row| ElementSet::of(row)).collect();
            let kept = r_subsets(*n, *rank)
                .into_iter()
                .filter(|s| !excluded.contains(s));
            Ok(Realized::General(Matroid::from_bases(*n, kept, true)?))
        }
        SpecForm::Schubert { n, upper } => {
            Ok(Realized::Schubert(SchubertMatroid::new(*n, upper.clone())?))
        }
        SpecForm::Graph { vertices, edges } => {
            let trees = spanning_trees(*vertices, edges)?;
            Ok(Realized::General(Matroid::from_bases(edges.len(), trees, true)?))
        }
        SpecForm::Named { name, params } => realize(&catalog_lookup(name, params)?),
    }
}

static DATA: &[(&str, &str, &str)] = &[
    ("ag23", "ternary affine plane AG(2,3): 9 points, rank 3, 12 line nonbases", include_str!("../data/ag23.json")),
    ("ag32", "binary affine cube AG(3,2): 8 points, rank 4, 14 plane nonbases", include_str!("../data/ag32.json")),
    ("ag32p", "AG(3,2) with one plane relaxed", include_str!("../data/ag32p.json")),
    ("fano", "Fano plane: 7 points, rank 3, 7 line nonbases", include_str!("../data/fano.json")),
    ("k123", "cycle matroid of the complete tripartite graph K_{1,2,3}", include_str!("../data/k123.json")),
    ("k33", "cycle matroid of K_{3,3}", include_str!("../data/k33.json")),
    ("k4", "cycle matroid of K_4", include_str!("../data/k4.json")),
    ("k5", "cycle matroid of K_5", include_str!("../data/k5.json")),
    ("nonfano", "Fano plane with one line relaxed", include_str!("../data/nonfano.json")),
    ("nonpappus", "Pappus configuration with the conclusion line relaxed", include_str!("../data/nonpappus.json")),
    ("pappus", "Pappus configuration: 9 points, rank 3, 9 line nonbases", include_str!("../data/pappus.json")),
    ("r8", "real affine cube: 8 points, rank 4, 12 plane nonbases", include_str!("../data/r8.json")),
    ("vamos", "Vamos matroid: 8 points, rank 4, 5 plane nonbases", include_str!("../data/vamos.json")),
    ("w3", "cycle matroid of the 3-spoke wheel", include_str!("../data/w3.json")),
    ("w4", "cycle matroid of the 4-spoke wheel", include_str!("../data/w4.json")),
    ("w5", "cycle matroid of the 5-spoke wheel", include_str!("../data/w5.json")),
];

/// Parametric entries, with the parameters they take.
static PARAMETRIC: &[(&str, &str)] = &[
    ("catalan", "Catalan matroid S(2r, {1,3,...,2r-1}); params: r in 1..=32"),
    ("uniform", "uniform matroid U_{r,n}; params: r, n with r <= n <= 64"),
    ("whirl", "rank-r wheel with the rim circuit relaxed; params: r in 2..=8"),
];

/// Catalog names with one-line descriptions, alphabetized.
pub fn catalog_names() -> Vec<(&'static str, &'static str)> {
    let mut all: Vec<(&'static str, &'static str)> = DATA
        .iter()
        .map(|&(name, desc, _)| (name, desc))
        .chain(PARAMETRIC.iter().copied())
        .collect();
    all.sort_by_key(|&(name, _)| name);
    all
}

fn bad_params(name: &str, reason: impl Into<String>) -> Error {
    Error::BadCatalogParams { name: name.into(), reason: reason.into() }
}

/// Check the parameter map holds exactly `keys`, returning their values.
fn require_params(name: &str, params: &BTreeMap<String, usize>, keys: &[&str]) -> Result<Vec<usize>> {
    for k in params.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(bad_params(
                name,
                format!("unexpected parameter {k:?} (takes {})", keys.join(", ")),
            ));
        }
    }
    keys.iter()
        .map(|k| {
            params
                .get(*k)
                .copied()
                .ok_or_else(|| bad_params(name, format!("missing parameter {k:?}")))
        })
        .collect()
}

/// Edge list of the r-spoke wheel: hub vertex 1, rim vertices 2..=r+1,
/// spokes as elements 1..=r and rim edges as elements r+1..=2r.
fn wheel_edges(r: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=r).map(|i| (1, i + 1)).collect();
    edges.extend((2..=r).map(|v| (v, v + 1)));
    edges.push((2, r + 1));
    edges
}

/// Look up a catalog entry. Fixed entries take no parameters; `uniform`,
/// `catalan`, and `whirl` are built on demand from theirs.
pub fn catalog_lookup(name: &str, params: &BTreeMap<String, usize>) -> Result<MatroidSpec> {
    match name {
        "uniform" => {
            let vals = require_params(name, params, &["r", "n"])?;
            let (r, n) = (vals[0], vals[1]);
            if !(1..=64).contains(&n) {
                return Err(bad_params(name, format!("n = {n} is out of range 1..=64")));
            }
            if r > n {
                return Err(bad_params(name, format!("r = {r} exceeds n = {n}")));
            }
            let form = if r == 0 {
                // rank zero: the empty set is the single basis
                SpecForm::Bases { n, bases: vec![vec![]] }
            } else {
                SpecForm::Schubert { n, upper: (1..=r).collect() }
            };
            Ok(MatroidSpec { label: Some(format!("uniform(r={r},n={n})")), form })
        }
        "catalan" => {
            let vals = require_params(name, params, &["r"])?;
            let r = vals[0];
            if !(1..=32).contains(&r) {
                return Err(bad_params(name, format!("r = {r} is out of range 1..=32")));
            }
            Ok(MatroidSpec {
                label: Some(format!("catalan(r={r})")),
                form: SpecForm::Schubert { n: 2 * r, upper: (1..=r).map(|i| 2 * i - 1).collect() },
            })
        }
        "whirl" => {
            let vals = require_params(name, params, &["r"])?;
            let r = vals[0];
            if !(2..=8).contains(&r) {
                return Err(bad_params(name, format!("r = {r} is out of range 2..=8")));
            }
            let trees = spanning_trees(r + 1, &wheel_edges(r))
                .expect("wheels are connected");
            let rim: Vec<usize> = (r + 1..=2 * r).collect();
            let mut bases: Vec<Vec<usize>> = trees.into_iter().map(ElementSet::to_vec).collect();
            bases.push(rim);
            Ok(MatroidSpec {
                label: Some(format!("whirl(r={r})")),
                form: SpecForm::Bases { n: 2 * r, bases },
            })
        }
        _ => {
            if let Some(&(_, _, text)) = DATA.iter().find(|&&(n, _, _)| n == name) {
                if !params.is_empty() {
                    return Err(bad_params(name, "takes no parameters"));
                }
                return parse_matroid(text.as_bytes());
            }
            let known: Vec<&str> = catalog_names().iter().map(|&(n, _)| n).collect();
            Err(Error::UnknownCatalogName { name: name.into(), known: known.join(", ") })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> MatroidSpec {
        parse_matroid(s.as_bytes()).unwrap()
    }

    fn parse_err(s: &str) -> String {
        parse_matroid(s.as_bytes()).unwrap_err().to_string()
    }

    fn by_name(name: &str) -> Matroid {
        realize(&catalog_lookup(name, &BTreeMap::new()).unwrap())
            .unwrap()
            .into_matroid()
    }

    #[test]
    fn parses_explicit_bases() {
        let spec = parse(r#"{"n":4,"bases":[[1,3],[1,4],[2,3],[2,4],[3,4]]}"#);
        let m = realize(&spec).unwrap().into_matroid();
        assert_eq!((m.n(), m.rank(), m.num_bases()), (4, 2, 5));
        assert!(!m.is_basis(ElementSet::of(&[1, 2])));
    }

    #[test]
    fn parses_schubert_form() {
        let spec = parse(r#"{"schubert":{"n":12,"upper":[1,2,5,7,10]}}"#);
        let r = realize(&spec).unwrap();
        let s = r.as_schubert().unwrap();
        assert_eq!((s.n(), s.rank()), (12, 5));
    }

    #[test]
    fn parses_label_passthrough() {
        let spec = parse(r#"{"label":"demo","n":2,"bases":[[1],[2]]}"#);
        assert_eq!(spec.label.as_deref(), Some("demo"));
    }

    #[test]
    fn rejects_missing_or_multiple_variants() {
        assert!(parse_err(r#"{"n":4,"rank":2}"#).contains("exactly one of"));
        assert!(parse_err("{}").contains("exactly one of"));
        assert!(parse_err(r#"{"n":2,"bases":[[1]],"name":"fano"}"#).contains("exactly one of"));
    }

    #[test]
    fn rejects_unknown_and_misplaced_keys() {
        assert!(parse_err(r#"{"n":4,"bases":[[1,2]],"color":"red"}"#).contains("color"));
        assert!(parse_err(r#"{"n":4,"rank":2,"bases":[[1,2]]}"#).contains("rank"));
        assert!(parse_err(r#"{"schubert":{"n":4,"upper":[1],"rank":1}}"#).contains("rank"));
        assert!(parse_err(r#"{"graph":{"vertices":2,"edges":[[1,2]],"weights":[3]}}"#)
            .contains("weights"));
    }

    #[test]
    fn rejects_bad_element_data() {
        assert!(parse_err(r#"{"n":4,"bases":[[1,5]]}"#).contains("bases[0][1] = 5"));
        assert!(parse_err(r#"{"n":4,"bases":[[1,1]]}"#).contains("repeats element 1"));
        assert!(parse_err(r#"{"n":4,"bases":[[1,2],[2,1]]}"#).contains("duplicates"));
        assert!(parse_err(r#"{"n":7,"rank":3,"nonbases":[[1,2]]}"#).contains("expected rank 3"));
        assert!(parse_err(r#"{"n":0,"bases":[[]]}"#).contains("supported range"));
        assert!(parse_err(r#"{"schubert":{"n":4,"upper":[0]}}"#).contains("upper[0]"));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_err("{\"n\":4,").contains("malformed JSON"));
        assert!(parse_err("[1,2,3]").contains("JSON object"));
        assert!(parse_matroid(&[0xff, 0xfe]).unwrap_err().to_string().contains("UTF-8"));
    }

    #[test]
    fn graph_form_counts_spanning_trees() {
        let spec = parse(
            r#"{"graph":{"vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}}"#,
        );
        let m = realize(&spec).unwrap().into_matroid();
        assert_eq!((m.n(), m.rank(), m.num_bases()), (6, 3, 16));
    }

    #[test]
    fn graph_must_be_connected() {
        let spec = parse(r#"{"graph":{"vertices":4,"edges":[[1,2],[3,4]]}}"#);
        assert!(matches!(realize(&spec), Err(Error::GraphNotConnected)));
    }

    #[test]
    fn graph_self_loop_becomes_matroid_loop() {
        let spec = parse(r#"{"graph":{"vertices":2,"edges":[[1,2],[2,2]]}}"#);
        let m = realize(&spec).unwrap().into_matroid();
        let (loops, _) = m.loops_coloops();
        assert_eq!(loops, ElementSet::of(&[2]));
    }

    #[test]
    fn named_uniform_variants() {
        let mut p = BTreeMap::new();
        p.insert("r".to_string(), 2);
        p.insert("n".to_string(), 4);
        let m = realize(&catalog_lookup("uniform", &p).unwrap()).unwrap().into_matroid();
        assert_eq!((m.rank(), m.num_bases()), (2, 6));

        let coloop: BTreeMap<String, usize> =
            [("r".to_string(), 1), ("n".to_string(), 1)].into();
        let m = realize(&catalog_lookup("uniform", &coloop).unwrap()).unwrap().into_matroid();
        assert_eq!((m.n(), m.rank(), m.num_bases()), (1, 1, 1));

        let loops: BTreeMap<String, usize> =
            [("r".to_string(), 0), ("n".to_string(), 3)].into();
        let m = realize(&catalog_lookup("uniform", &loops).unwrap()).unwrap().into_matroid();
        assert_eq!((m.rank(), m.loops_coloops().0.len()), (0, 3));
    }

    #[test]
    fn catalan_entry_is_the_staircase() {
        let p: BTreeMap<String, usize> = [("r".to_string(), 5)].into();
        let spec = catalog_lookup("catalan", &p).unwrap();
        assert_eq!(
            spec.form,
            SpecForm::Schubert { n: 10, upper: vec![1, 3, 5, 7, 9] }
        );
    }

    #[test]
    fn whirl_relaxes_the_wheel_rim() {
        let p2: BTreeMap<String, usize> = [("r".to_string(), 2)].into();
        let m = realize(&catalog_lookup("whirl", &p2).unwrap()).unwrap().into_matroid();
        // rank-2 whirl is the four-point line
        assert_eq!((m.n(), m.rank(), m.num_bases()), (4, 2, 6));

        let p3: BTreeMap<String, usize> = [("r".to_string(), 3)].into();
        let m3 = realize(&catalog_lookup("whirl", &p3).unwrap()).unwrap().into_matroid();
        let rim = ElementSet::of(&[4, 5, 6]);
        assert_eq!(m3.num_bases(), 17);
        assert!(m3.is_basis(rim));
        assert!(!by_name("w3").is_basis(rim));
    }

    #[test]
    fn round_trip_serialization() {
        let raw = [
            r#"{"n":4,"bases":[[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
            r#"{"schubert":{"n":12,"upper":[1,2,5,7,10]}}"#,
            r#"{"label":"x","graph":{"vertices":3,"edges":[[1,2],[2,3],[1,3]]}}"#,
            r#"{"name":"uniform","params":{"n":4,"r":2}}"#,
        ];
        for s in raw {
            let spec = parse(s);
            assert_eq!(parse(&serialize_spec(&spec)), spec, "round trip failed for {s}");
        }
        for &(name, _, text) in DATA {
            let spec = parse(text);
            assert_eq!(parse(&serialize_spec(&spec)), spec, "round trip failed for {name}");
        }
    }

    #[test]
    fn all_fixed_entries_realize_cleanly() {
        // (name, elements, rank, bases); counts independently verified from
        // the defining data (line/plane counts, Kirchhoff tree counts)
        let expected = [
            ("ag23", 9, 3, 72),
            ("ag32", 8, 4, 56),
            ("ag32p", 8, 4, 57),
            ("fano", 7, 3, 28),
            ("k123", 11, 5, 216),
            ("k33", 9, 5, 81),
            ("k4", 6, 3, 16),
            ("k5", 10, 4, 125),
            ("nonfano", 7, 3, 29),
            ("nonpappus", 9, 3, 76),
            ("pappus", 9, 3, 75),
            ("r8", 8, 4, 58),
            ("vamos", 8, 4, 65),
            ("w3", 6, 3, 16),
            ("w4", 8, 4, 45),
            ("w5", 10, 5, 121),
        ];
        for (name, n, rank, bases) in expected {
            let m = by_name(name);
            assert_eq!((m.n(), m.rank(), m.num_bases()), (n, rank, bases), "{name}");
            let (loops, coloops) = m.loops_coloops();
            assert!(loops.is_empty() && coloops.is_empty(), "{name} has loops/coloops");
        }
    }

    #[test]
    fn unknown_name_lists_the_catalog() {
        let err = catalog_lookup("fanno", &BTreeMap::new()).unwrap_err().to_string();
        assert!(err.contains("fano") && err.contains("vamos") && err.contains("whirl"));
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let none = BTreeMap::new();
        assert!(catalog_lookup("catalan", &none).unwrap_err().to_string().contains("missing"));

        let weird: BTreeMap<String, usize> = [("k".to_string(), 3)].into();
        assert!(catalog_lookup("catalan", &weird).unwrap_err().to_string().contains("unexpected"));

        let zero: BTreeMap<String, usize> = [("r".to_string(), 0)].into();
        assert!(catalog_lookup("catalan", &zero).unwrap_err().to_string().contains("out of range"));

        let extra: BTreeMap<String, usize> = [("r".to_string(), 1)].into();
        assert!(catalog_lookup("fano", &extra).unwrap_err().to_string().contains("no parameters"));
    }
}
