//! Line-oriented text format for algebra definitions.
//!
//! ```text
//! # comment
//! [algebra]
//! field = Q
//! group = Z/2 x Z/2
//! basis = 1 i j k
//! unit = 1
//!
//! [degrees]
//! i = (1,0)
//!
//! [products]
//! i * j = k
//!
//! [witnesses]
//! inverse i = -1*i
//! ```
//!
//! Instead of `basis`/`[degrees]`/`[products]` a `[constructor]` section
//! names a built-in family (`name = quaternion`, `a = -1`, ...). Table groups
//! use `group = table` plus a `[group-table]` section with a `labels = ...`
//! line and one `g = g*h1 g*h2 ...` row per label. Missing degrees default to
//! the identity; omitted products are zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::constructors::{
    checkerboard_grading, field_algebra, group_ring, laurent, matrix_algebra, quaternion, skew_grading, symbol_algebra,
    trivially_graded_field, QuaternionGrading,
};
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, GradedRing, TwistedGroupAlgebra};
use crate::group::{GradeGroup, GroupElement};
use crate::linalg::{unit_vector, Vector};
use crate::matrix_ring::ShiftedMatrixAlgebra;
use crate::scalar::{FieldSpec, Scalar};

/// Built-in families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructor {
    Quaternion {
        a: Scalar,
        b: Scalar,
        grading: QuaternionGrading,
    },
    Symbol {
        n: usize,
        a: Scalar,
        b: Scalar,
        xi: Scalar,
    },
    /// `K[G]` for the file's group.
    GroupRing,
    /// `M_n(K)`, trivially graded by the file's group.
    Matrix {
        n: usize,
    },
    /// `K` in the identity degree of the file's group.
    TrivialField,
    /// `K[x^k, x^-k]` graded by `Z`.
    Laurent {
        step: i64,
    },
    /// `M_n(K[x^k, x^-k])` shifted by integer degrees.
    ShiftedLaurent {
        step: i64,
        shift: Vec<i64>,
    },
    /// `M_2(K)` graded by `Z/2` with diagonal matrices in degree 0.
    Checkerboard,
    /// A `Z/2`-grading of `M_2(K)` with a non-homogeneous `e11`.
    Skew,
}

impl Constructor {
    fn name(&self) -> &'static str {
        match self {
            Constructor::Quaternion { .. } => "quaternion",
            Constructor::Symbol { .. } => "symbol",
            Constructor::GroupRing => "group-ring",
            Constructor::Matrix { .. } => "matrix",
            Constructor::TrivialField => "trivial-field",
            Constructor::Laurent { .. } => "laurent",
            Constructor::ShiftedLaurent { .. } => "shifted-laurent",
            Constructor::Checkerboard => "checkerboard",
            Constructor::Skew => "skew",
        }
    }

    /// Parameters in canonical order.
    fn params(&self) -> Vec<(&'static str, String)> {
        match self {
            Constructor::Quaternion { a, b, grading } => {
                vec![
                    ("a", a.to_string()),
                    ("b", b.to_string()),
                    ("grading", grading.to_string()),
                ]
            }
            Constructor::Symbol { n, a, b, xi } => vec![
                ("n", n.to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("xi", xi.to_string()),
            ],
            Constructor::Matrix { n } => vec![("n", n.to_string())],
            Constructor::Laurent { step } => vec![("step", step.to_string())],
            Constructor::ShiftedLaurent { step, shift } => {
                let s: Vec<String> = shift.iter().map(i64::to_string).collect();
                vec![("step", step.to_string()), ("shift", format!("({})", s.join(",")))]
            }
            Constructor::GroupRing | Constructor::TrivialField | Constructor::Checkerboard | Constructor::Skew => {
                vec![]
            }
        }
    }
}

/// The parsed ring.
#[derive(Clone, Debug)]
pub enum Structure {
    Finite(GradedAlgebra),
    Twisted(TwistedGroupAlgebra),
    Shifted(ShiftedMatrixAlgebra),
}

impl Structure {
    pub fn ring(&self) -> &dyn GradedRing {
        match self {
            Structure::Finite(a) => a,
            Structure::Twisted(t) => t,
            Structure::Shifted(s) => s,
        }
    }

    pub fn finite(&self) -> Option<&GradedAlgebra> {
        match self {
            Structure::Finite(a) => Some(a),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Inverse(Vector, Vector),
    Idempotent(Vector),
}

#[derive(Clone, Debug)]
pub struct Definition {
    pub field: FieldSpec,
    pub group: GradeGroup,
    pub constructor: Option<Constructor>,
    pub witnesses: Vec<Witness>,
    pub structure: Structure,
}

impl Definition {
    pub fn ring(&self) -> &dyn GradedRing {
        self.structure.ring()
    }

    pub fn finite(&self) -> Option<&GradedAlgebra> {
        self.structure.finite()
    }

    pub fn idempotents(&self) -> impl Iterator<Item = &Vector> {
        self.witnesses.iter().filter_map(|w| match w {
            Witness::Idempotent(e) => Some(e),
            Witness::Inverse(..) => None,
        })
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => perr(line, other.to_string()),
    })
}

struct Entry {
    line: usize,
    key: String,
    value: String,
}

const SECTIONS: [&str; 6] = [
    "algebra",
    "degrees",
    "products",
    "group-table",
    "constructor",
    "witnesses",
];

fn split_sections(text: &str) -> Result<BTreeMap<&'static str, (usize, Vec<Entry>)>> {
    let mut out: BTreeMap<&'static str, (usize, Vec<Entry>)> = BTreeMap::new();
    let mut current: Option<&'static str> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = SECTIONS
                .iter()
                .find(|s| **s == name.trim())
                .ok_or_else(|| perr(line, format!("unknown section [{name}]")))?;
            if out.contains_key(name) {
                return Err(perr(line, format!("duplicate section [{name}]")));
            }
            out.insert(name, (line, Vec::new()));
            current = Some(name);
            continue;
        }
        let sec = current.ok_or_else(|| perr(line, "entry before any section header"))?;
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| perr(line, format!("expected `key = value`, found `{content}`")))?;
        out.get_mut(sec).expect("inserted").1.push(Entry {
            line,
            key: key.trim().to_string(),
            value: value.trim().to_string(),
        });
    }
    Ok(out)
}

fn keyed<'a>(entries: &'a [Entry], section: &str, allowed: &[&str]) -> Result<BTreeMap<&'a str, &'a Entry>> {
    let mut map = BTreeMap::new();
    for e in entries {
        if !allowed.contains(&e.key.as_str()) {
            return Err(perr(e.line, format!("unknown key `{}` in [{section}]", e.key)));
        }
        if map.insert(e.key.as_str(), e).is_some() {
            return Err(perr(e.line, format!("duplicate key `{}`", e.key)));
        }
    }
    Ok(map)
}

fn required<'a>(map: &BTreeMap<&str, &'a Entry>, key: &str, section: &str, header: usize) -> Result<&'a Entry> {
    map.get(key)
        .copied()
        .ok_or_else(|| perr(header, format!("[{section}] is missing `{key}`")))
}

fn parse_table_group(entries: &[Entry], header: usize) -> Result<GradeGroup> {
    let first = entries
        .first()
        .filter(|e| e.key == "labels")
        .ok_or_else(|| perr(header, "[group-table] must start with `labels = ...`"))?;
    let labels: Vec<String> = first.value.split_whitespace().map(String::from).collect();
    let mut table = vec![None; labels.len()];
    for e in &entries[1..] {
        let row = labels
            .iter()
            .position(|l| *l == e.key)
            .ok_or_else(|| perr(e.line, format!("row for unknown element `{}`", e.key)))?;
        let cells = e
            .value
            .split_whitespace()
            .map(|c| {
                labels
                    .iter()
                    .position(|l| l == c)
                    .ok_or_else(|| perr(e.line, format!("unknown element `{c}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cells.len() != labels.len() {
            return Err(perr(
                e.line,
                format!("row has {} entries, expected {}", cells.len(), labels.len()),
            ));
        }
        if table[row].replace(cells).is_some() {
            return Err(perr(e.line, format!("duplicate row `{}`", e.key)));
        }
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(k, r)| r.ok_or_else(|| perr(header, format!("missing row `{}`", labels[k]))))
        .collect::<Result<Vec<_>>>()?;
    at_line(header, GradeGroup::table(labels, table))
}

fn parse_constructor(field: FieldSpec, entries: &[Entry], header: usize) -> Result<Constructor> {
    let map = keyed(
        entries,
        "constructor",
        &["name", "a", "b", "grading", "n", "xi", "step", "shift"],
    )?;
    let name = required(&map, "name", "constructor", header)?;
    let scalar = |k: &str| -> Result<Scalar> {
        let e = required(&map, k, "constructor", header)?;
        at_line(e.line, field.parse_scalar(&e.value))
    };
    let integer = |k: &str| -> Result<i64> {
        let e = required(&map, k, "constructor", header)?;
        e.value
            .parse::<i64>()
            .map_err(|_| perr(e.line, format!("`{k}` must be an integer")))
    };
    let positive = |k: &str| -> Result<usize> {
        let v = integer(k)?;
        usize::try_from(v)
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| perr(map[k].line, format!("`{k}` must be positive")))
    };
    let c = match name.value.as_str() {
        "quaternion" => {
            let g = required(&map, "grading", "constructor", header)?;
            Constructor::Quaternion {
                a: scalar("a")?,
                b: scalar("b")?,
                grading: at_line(g.line, g.value.parse())?,
            }
        }
        "symbol" => Constructor::Symbol {
            n: positive("n")?,
            a: scalar("a")?,
            b: scalar("b")?,
            xi: scalar("xi")?,
        },
        "group-ring" => Constructor::GroupRing,
        "matrix" => Constructor::Matrix { n: positive("n")? },
        "trivial-field" => Constructor::TrivialField,
        "laurent" => Constructor::Laurent {
            step: positive("step")? as i64,
        },
        "shifted-laurent" => {
            let e = required(&map, "shift", "constructor", header)?;
            let inner = e.value.trim().trim_start_matches('(').trim_end_matches(')');
            let shift = inner
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| perr(e.line, "shift must be a tuple of integers"))?;
            Constructor::ShiftedLaurent {
                step: positive("step")? as i64,
                shift,
            }
        }
        "checkerboard" => Constructor::Checkerboard,
        "skew" => Constructor::Skew,
        other => return Err(perr(name.line, format!("unknown constructor `{other}`"))),
    };
    // Reject parameters the constructor does not take.
    let taken: Vec<&str> = c.params().iter().map(|(k, _)| *k).collect();
    for (k, e) in &map {
        if *k != "name" && !taken.contains(k) {
            return Err(perr(e.line, format!("`{k}` is not a parameter of {}", c.name())));
        }
    }
    Ok(c)
}

fn build_constructor(field: FieldSpec, group: &GradeGroup, c: &Constructor) -> Result<Structure> {
    let need_trivial_group = |what: &str| -> Result<()> {
        if *group != GradeGroup::trivial() {
            return Err(Error::InvalidInput(format!(
                "{what} fixes its own grade group; omit `group`"
            )));
        }
        Ok(())
    };
    Ok(match c {
        Constructor::Quaternion { a, b, grading } => {
            need_trivial_group("quaternion")?;
            Structure::Finite(quaternion(field, a, b, *grading)?)
        }
        Constructor::Symbol { n, a, b, xi } => {
            need_trivial_group("symbol")?;
            Structure::Finite(symbol_algebra(field, *n, a, b, xi)?)
        }
        Constructor::GroupRing => Structure::Finite(group_ring(field, group)?),
        Constructor::Matrix { n } => Structure::Finite(matrix_algebra(field, *n, group)?),
        Constructor::TrivialField => Structure::Finite(trivially_graded_field(field, group)),
        Constructor::Laurent { step } => {
            need_trivial_group("laurent")?;
            Structure::Twisted(laurent(field_algebra(field), *step)?)
        }
        Constructor::ShiftedLaurent { step, shift } => {
            need_trivial_group("shifted-laurent")?;
            let base: Arc<dyn GradedRing> = Arc::new(laurent(field_algebra(field), *step)?);
            let shift = shift.iter().map(|&d| GroupElement(vec![d])).collect();
            Structure::Shifted(ShiftedMatrixAlgebra::new(base, shift)?)
        }
        Constructor::Checkerboard => {
            need_trivial_group("checkerboard")?;
            Structure::Finite(checkerboard_grading(field)?)
        }
        Constructor::Skew => {
            need_trivial_group("skew")?;
            Structure::Finite(skew_grading(field)?)
        }
    })
}

fn parse_explicit(
    field: FieldSpec,
    group: &GradeGroup,
    algebra: &BTreeMap<&str, &Entry>,
    sections: &BTreeMap<&'static str, (usize, Vec<Entry>)>,
    header: usize,
) -> Result<GradedAlgebra> {
    let basis_entry = required(algebra, "basis", "algebra", header)?;
    let labels: Vec<String> = basis_entry.value.split_whitespace().map(String::from).collect();
    if labels.is_empty() {
        return Err(perr(basis_entry.line, "empty basis"));
    }
    for l in &labels {
        if l.contains(['*', '=', '#', '+']) || l.starts_with('-') {
            return Err(perr(basis_entry.line, format!("`{l}` cannot be used as a basis label")));
        }
    }
    let index = |l: &str, line: usize| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| perr(line, format!("unknown basis label `{l}`")))
    };
    // Elements are parsed against a placeholder whose extra last coordinate
    // catches bare scalars, which are only meaningful via a label for 1.
    let mut plabels = labels.clone();
    plabels.push("#scalar".into());
    let n = labels.len();
    let placeholder = Algebra::from_fn(
        field,
        plabels,
        |i, j| match (i == n, j == n) {
            (true, _) => unit_vector(field, n + 1, j),
            (_, true) => unit_vector(field, n + 1, i),
            _ => vec![field.zero(); n + 1],
        },
        Some(unit_vector(field, n + 1, n)),
    )
    .expect("unitization of a zero algebra");
    let parse_el = |text: &str, line: usize| -> Result<Vector> {
        let mut v = at_line(line, placeholder.parse_element(text))?;
        if !v.pop().expect("extra coordinate").is_zero() {
            return Err(perr(
                line,
                format!("`{text}` has a bare scalar term; write it as a multiple of a basis label"),
            ));
        }
        Ok(v)
    };
    let mut quads = Vec::new();
    let mut seen = BTreeMap::new();
    if let Some((_, entries)) = sections.get("products") {
        for e in entries {
            let (l, r) = e
                .key
                .split_once('*')
                .ok_or_else(|| perr(e.line, "products are written `a * b = element`"))?;
            let (i, j) = (index(l.trim(), e.line)?, index(r.trim(), e.line)?);
            if seen.insert((i, j), e.line).is_some() {
                return Err(perr(
                    e.line,
                    format!("product {} * {} given twice", labels[i], labels[j]),
                ));
            }
            for (k, c) in parse_el(&e.value, e.line)?.into_iter().enumerate() {
                if !c.is_zero() {
                    quads.push((i, j, k, c));
                }
            }
        }
    }
    let unit = match algebra.get("unit") {
        Some(e) => Some(parse_el(&e.value, e.line)?),
        None => None,
    };
    let alg = at_line(header, Algebra::new(field, labels.clone(), quads, unit))?;
    let mut degrees = vec![group.identity(); labels.len()];
    if let Some((_, entries)) = sections.get("degrees") {
        let mut given = vec![false; labels.len()];
        for e in entries {
            let k = index(&e.key, e.line)?;
            if std::mem::replace(&mut given[k], true) {
                return Err(perr(e.line, format!("degree of `{}` given twice", e.key)));
            }
            degrees[k] = at_line(e.line, group.parse_element(&e.value))?;
        }
    }
    let header_deg = sections.get("degrees").map_or(header, |s| s.0);
    at_line(header_deg, GradedAlgebra::new(alg, group.clone(), degrees))
}

/// Parses a definition file. Errors carry 1-based line numbers.
pub fn parse_definition(text: &str) -> Result<Definition> {
    let sections = split_sections(text)?;
    let (header, entries) = sections
        .get("algebra")
        .ok_or_else(|| perr(0, "missing [algebra] section"))?;
    let header = *header;
    let algebra = keyed(entries, "algebra", &["field", "group", "basis", "unit"])?;
    let fe = required(&algebra, "field", "algebra", header)?;
    let field: FieldSpec = at_line(fe.line, fe.value.parse())?;
    let group = match algebra.get("group") {
        Some(e) if e.value == "table" => {
            let (h, rows) = sections
                .get("group-table")
                .ok_or_else(|| perr(e.line, "`group = table` needs a [group-table] section"))?;
            parse_table_group(rows, *h)?
        }
        Some(e) => {
            if let Some((h, _)) = sections.get("group-table") {
                return Err(perr(*h, "[group-table] given but `group` is not `table`"));
            }
            at_line(e.line, e.value.parse())?
        }
        None => GradeGroup::trivial(),
    };
    let (constructor, structure) = match sections.get("constructor") {
        Some((h, centries)) => {
            for (key, sec) in [
                ("basis", None),
                ("unit", None),
                ("", Some("degrees")),
                ("", Some("products")),
            ] {
                let clash = match sec {
                    None => algebra.get(key).map(|e| e.line),
                    Some(s) => sections.get(s).map(|x| x.0),
                };
                if let Some(line) = clash {
                    return Err(perr(
                        line,
                        "a [constructor] definition cannot also give an explicit basis",
                    ));
                }
            }
            let c = parse_constructor(field, centries, *h)?;
            let s = at_line(*h, build_constructor(field, &group, &c))?;
            (Some(c), s)
        }
        None => (
            None,
            Structure::Finite(parse_explicit(field, &group, &algebra, &sections, header)?),
        ),
    };
    let mut def = Definition {
        field,
        group,
        constructor,
        witnesses: Vec::new(),
        structure,
    };
    if let Some((h, wentries)) = sections.get("witnesses") {
        let fin = def
            .finite()
            .cloned()
            .ok_or_else(|| perr(*h, "witnesses are only supported for finite-dimensional definitions"))?;
        let a = fin.algebra();
        let mut pairs = Vec::new();
        for e in wentries {
            if let Some(u) = e.key.strip_prefix("inverse ") {
                let u = at_line(e.line, a.parse_element(u))?;
                let v = at_line(e.line, a.parse_element(&e.value))?;
                pairs.push((u.clone(), v.clone()));
                def.witnesses.push(Witness::Inverse(u, v));
            } else if e.key == "idempotent" {
                let x = at_line(e.line, a.parse_element(&e.value))?;
                if a.mul(&x, &x) != x {
                    return Err(perr(e.line, format!("{} is not idempotent", a.format_element(&x))));
                }
                def.witnesses.push(Witness::Idempotent(x));
            } else {
                return Err(perr(e.line, format!("unknown witness `{}`", e.key)));
            }
        }
        let fin = at_line(*h, fin.with_units(pairs))?;
        def.structure = Structure::Finite(fin);
    }
    Ok(def)
}

fn write_group_table(out: &mut String, group: &GradeGroup) {
    if let GradeGroup::Table(t) = group {
        let labels = t.labels();
        let _ = writeln!(out, "\n[group-table]\nlabels = {}", labels.join(" "));
        for (i, row) in t.table().iter().enumerate() {
            let cells: Vec<&str> = row.iter().map(|&k| labels[k].as_str()).collect();
            let _ = writeln!(out, "{} = {}", labels[i], cells.join(" "));
        }
    }
}

/// Canonical text for a definition: fixed section and key order, products
/// listed by basis index, every nonzero product spelled out.
pub fn serialize_definition(def: &Definition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[algebra]\nfield = {}", def.field);
    let group_line = match &def.group {
        GradeGroup::Table(_) => Some("table".to_string()),
        g if *g == GradeGroup::trivial() => None,
        g => Some(g.to_string()),
    };
    if let Some(g) = &group_line {
        let _ = writeln!(out, "group = {g}");
    }
    let fin = def.finite();
    match &def.constructor {
        Some(c) => {
            let _ = writeln!(out, "\n[constructor]\nname = {}", c.name());
            for (k, v) in c.params() {
                let _ = writeln!(out, "{k} = {v}");
            }
        }
        None => {
            let g = fin.expect("explicit definitions are finite");
            let a = g.algebra();
            let _ = writeln!(out, "basis = {}", a.labels().join(" "));
            let _ = writeln!(out, "unit = {}", a.format_element(a.unit()));
            let e = g.group().identity();
            let nontrivial: Vec<usize> = (0..a.dim()).filter(|&k| g.degree_of(k) != &e).collect();
            if !nontrivial.is_empty() {
                let _ = writeln!(out, "\n[degrees]");
                for k in nontrivial {
                    let _ = writeln!(out, "{} = {}", a.labels()[k], g.group().format_element(g.degree_of(k)));
                }
            }
            let _ = writeln!(out, "\n[products]");
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let v = a.mul(&a.basis_vector(i), &a.basis_vector(j));
                    if v.iter().any(|c| !c.is_zero()) {
                        let _ = writeln!(out, "{} * {} = {}", a.labels()[i], a.labels()[j], a.format_element(&v));
                    }
                }
            }
        }
    }
    write_group_table(&mut out, &def.group);
    if !def.witnesses.is_empty() {
        let a = fin.expect("witnesses need a finite algebra").algebra();
        let _ = writeln!(out, "\n[witnesses]");
        for w in &def.witnesses {
            let _ = match w {
                Witness::Inverse(u, v) => writeln!(out, "inverse {} = {}", a.format_element(u), a.format_element(v)),
                Witness::Idempotent(x) => writeln!(out, "idempotent = {}", a.format_element(x)),
            };
        }
    }
    out
}

/// Explicit definition of a finite graded algebra (no constructor).
pub fn explicit_definition(g: &GradedAlgebra) -> Definition {
    Definition {
        field: g.algebra().field(),
        group: g.group().clone(),
        constructor: None,
        witnesses: g
            .units()
            .iter()
            .map(|(u, v)| Witness::Inverse(u.clone(), v.clone()))
            .collect(),
        structure: Structure::Finite(g.clone()),
    }
}
