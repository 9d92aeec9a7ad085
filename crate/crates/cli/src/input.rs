//! Loading named objects from TOML input files.
//!
//! A file holds up to six tables of named objects. Indices are 0-based basis
//! positions; scalars are written as integers or as strings `"p"` / `"p/q"`.
//!
//! ```toml
//! [algebras.two_dim]
//! dim = 2
//! labels = ["e1", "e2"]
//! binary = [[0, 1, 0, "1"]]          # [e_i, e_j] has coefficient "1" on e_k
//! ternary = [[0, 1, 1, 0, "1"]]      # {e_i, e_j, e_k} has coefficient "1" on e_l
//!
//! [operators.T]
//! algebra = "two_dim"
//! matrix = [["2", "3"], ["0", "5"]]  # rows; column j is T(e_j)
//! weight = "-1/5"
//!
//! [representations.adj]
//! algebra = "two_dim"
//! kind = "adjoint"                   # module operator = the named operator
//! operator = "T"
//! ```
//!
//! Binary and ternary structure constants are antisymmetric in their first
//! two slots; the loader fills in the mirrored entry and rejects entries that
//! contradict each other.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use rly_core::algebra::{antisymmetric_bilinear, antisymmetric_trilinear};
use rly_core::representation::adjoint_rep;
use rly_core::{
    Bilinear, ComplexKind, ExtensionCocycle, LyAlgebra, Matrix, Representation, ReynoldsOperator, Scalar, Trilinear,
    TruncatedDeformation,
};
use serde::Deserialize;
use toml::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default)]
    operators: BTreeMap<String, RawOperator>,
    #[serde(default)]
    representations: BTreeMap<String, RawRepresentation>,
    #[serde(default)]
    cochains: BTreeMap<String, RawCochain>,
    #[serde(default)]
    deformations: BTreeMap<String, RawDeformation>,
    #[serde(default)]
    extensions: BTreeMap<String, RawExtension>,
}

type RawEntries = Vec<Vec<Value>>;
type RawMatrix = Vec<Vec<Value>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    labels: Option<Vec<String>>,
    #[serde(default)]
    binary: RawEntries,
    #[serde(default)]
    ternary: RawEntries,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    algebra: String,
    matrix: RawMatrix,
    weight: Value,
}

#[derive(Debug, Default, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum RepKind {
    Adjoint,
    #[default]
    Explicit,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    algebra: String,
    operator: Option<String>,
    #[serde(default)]
    kind: RepKind,
    module_dim: Option<usize>,
    /// `[i, row, col, value]`: entry of ρ(e_i).
    #[serde(default)]
    rho: RawEntries,
    /// `[i, j, row, col, value]`: entry of θ(e_i, e_j).
    #[serde(default)]
    theta: RawEntries,
    module_op: Option<RawMatrix>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochain {
    algebra: String,
    operator: Option<String>,
    representation: String,
    complex: ComplexKind,
    degree: usize,
    coords: Vec<Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    algebra: String,
    operator: String,
    terms: Vec<RawTerm>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    #[serde(default)]
    binary: RawEntries,
    #[serde(default)]
    ternary: RawEntries,
    operator: Option<RawMatrix>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExtension {
    algebra: String,
    operator: String,
    representation: String,
    #[serde(default)]
    nu: RawEntries,
    #[serde(default)]
    psi: RawEntries,
    chi: Option<RawMatrix>,
}

#[derive(Debug, Clone)]
pub struct OperatorEntry {
    pub algebra: String,
    pub op: ReynoldsOperator,
}

#[derive(Debug, Clone)]
pub struct RepEntry {
    pub algebra: String,
    pub operator: Option<String>,
    pub rep: Representation,
}

#[derive(Debug, Clone)]
pub struct CochainEntry {
    pub algebra: String,
    pub operator: Option<String>,
    pub representation: String,
    pub complex: ComplexKind,
    pub degree: usize,
    pub coords: Vec<Scalar>,
}

#[derive(Debug, Clone)]
pub struct DeformationEntry {
    pub algebra: String,
    pub operator: String,
    pub deformation: TruncatedDeformation,
}

#[derive(Debug, Clone)]
pub struct ExtensionEntry {
    pub algebra: String,
    pub operator: String,
    pub representation: String,
    pub cocycle: ExtensionCocycle,
}

/// Which table a name was found in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectKind {
    Algebra,
    Operator,
    Representation,
    Cochain,
    Deformation,
    Extension,
}

impl std::fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ObjectKind::Algebra => "algebra",
            ObjectKind::Operator => "operator",
            ObjectKind::Representation => "representation",
            ObjectKind::Cochain => "cochain",
            ObjectKind::Deformation => "deformation",
            ObjectKind::Extension => "extension",
        })
    }
}

/// Every object from the loaded files, with cross-references resolved and
/// dimensions checked.
#[derive(Debug, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, LyAlgebra>,
    pub operators: BTreeMap<String, OperatorEntry>,
    pub representations: BTreeMap<String, RepEntry>,
    pub cochains: BTreeMap<String, CochainEntry>,
    pub deformations: BTreeMap<String, DeformationEntry>,
    pub extensions: BTreeMap<String, ExtensionEntry>,
}

impl Workspace {
    pub fn load<P: AsRef<Path>>(paths: &[P]) -> CliResult<Self> {
        let mut sources = Vec::new();
        for path in paths {
            let path = path.as_ref();
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
            sources.push((path.display().to_string(), text));
        }
        Self::from_sources(&sources)
    }

    /// Parses `(origin, text)` pairs as if each were a separate file.
    pub fn from_sources(sources: &[(String, String)]) -> CliResult<Self> {
        let mut merged = RawFile::default();
        let mut seen: HashMap<String, String> = HashMap::new();
        for (origin, text) in sources {
            let raw: RawFile =
                toml::from_str(text).map_err(|e| CliError::Parse { origin: origin.clone(), message: e.to_string() })?;
            let mut claim = |name: &str| -> CliResult<()> {
                match seen.insert(name.to_string(), origin.clone()) {
                    Some(first) => {
                        Err(CliError::DuplicateName { name: name.to_string(), first, second: origin.clone() })
                    }
                    None => Ok(()),
                }
            };
            for name in raw
                .algebras
                .keys()
                .chain(raw.operators.keys())
                .chain(raw.representations.keys())
                .chain(raw.cochains.keys())
                .chain(raw.deformations.keys())
                .chain(raw.extensions.keys())
            {
                claim(name)?;
            }
            merged.algebras.extend(raw.algebras);
            merged.operators.extend(raw.operators);
            merged.representations.extend(raw.representations);
            merged.cochains.extend(raw.cochains);
            merged.deformations.extend(raw.deformations);
            merged.extensions.extend(raw.extensions);
        }
        Self::resolve(merged)
    }

    fn resolve(raw: RawFile) -> CliResult<Self> {
        let mut ws = Workspace::default();
        for (name, r) in raw.algebras {
            let a = algebra(&format!("algebras.{name}"), &r)?;
            ws.algebras.insert(name, a);
        }
        for (name, r) in raw.operators {
            let ctx = format!("operators.{name}");
            let n = ws.algebra(&r.algebra)?.dim();
            let matrix = matrix(&ctx, "matrix", &r.matrix, n, n)?;
            let weight = scalar(&ctx, &r.weight)?;
            ws.operators.insert(name, OperatorEntry { algebra: r.algebra, op: ReynoldsOperator::new(matrix, weight) });
        }
        for (name, r) in raw.representations {
            let ctx = format!("representations.{name}");
            let rep = ws.representation_from(&ctx, &r)?;
            ws.representations.insert(name, RepEntry { algebra: r.algebra, operator: r.operator, rep });
        }
        for (name, r) in raw.cochains {
            let ctx = format!("cochains.{name}");
            let a = ws.algebra(&r.algebra)?;
            if let Some(op) = &r.operator {
                ws.operator_on(&ctx, op, &r.algebra)?;
            }
            let rep = &ws.representation_on(&ctx, &r.representation, &r.algebra)?.rep;
            if r.degree == 0 {
                return Err(CliError::invalid(&ctx, "degree must be at least 1"));
            }
            let layout = rly_core::cohomology::Layout::new(a.dim(), rep.module_dim());
            let expected = match r.complex {
                ComplexKind::Rly if r.degree >= 2 => layout.dim(r.degree) + layout.dim(r.degree - 1),
                _ => layout.dim(r.degree),
            };
            let coords = r.coords.iter().map(|v| scalar(&ctx, v)).collect::<CliResult<Vec<_>>>()?;
            if coords.len() != expected {
                return Err(CliError::DimMismatch { context: format!("{ctx}.coords"), expected, found: coords.len() });
            }
            ws.cochains.insert(
                name,
                CochainEntry {
                    algebra: r.algebra,
                    operator: r.operator,
                    representation: r.representation,
                    complex: r.complex,
                    degree: r.degree,
                    coords,
                },
            );
        }
        for (name, r) in raw.deformations {
            let ctx = format!("deformations.{name}");
            let a = ws.algebra(&r.algebra)?;
            let op = &ws.operator_on(&ctx, &r.operator, &r.algebra)?.op;
            let n = a.dim();
            let mut higher = Vec::new();
            for (k, term) in r.terms.iter().enumerate() {
                let tctx = format!("{ctx}.terms[{k}]");
                let f = bilinear(&tctx, &term.binary, n, n)?;
                let g = trilinear(&tctx, &term.ternary, n, n)?;
                let t = match &term.operator {
                    Some(rows) => matrix(&tctx, "operator", rows, n, n)?,
                    None => Matrix::zeros(n, n),
                };
                higher.push((f, g, t));
            }
            let deformation = TruncatedDeformation::new(a, op, higher).map_err(|e| CliError::invalid(&ctx, e))?;
            ws.deformations.insert(name, DeformationEntry { algebra: r.algebra, operator: r.operator, deformation });
        }
        for (name, r) in raw.extensions {
            let ctx = format!("extensions.{name}");
            let n = ws.algebra(&r.algebra)?.dim();
            ws.operator_on(&ctx, &r.operator, &r.algebra)?;
            let m = ws.representation_on(&ctx, &r.representation, &r.algebra)?.rep.module_dim();
            let cocycle = ExtensionCocycle {
                nu: bilinear(&ctx, &r.nu, n, m)?,
                psi: trilinear(&ctx, &r.psi, n, m)?,
                chi: match &r.chi {
                    Some(rows) => matrix(&ctx, "chi", rows, m, n)?,
                    None => Matrix::zeros(m, n),
                },
            };
            ws.extensions.insert(
                name,
                ExtensionEntry { algebra: r.algebra, operator: r.operator, representation: r.representation, cocycle },
            );
        }
        Ok(ws)
    }

    fn representation_from(&self, ctx: &str, r: &RawRepresentation) -> CliResult<Representation> {
        let a = self.algebra(&r.algebra)?;
        let op = match &r.operator {
            Some(name) => Some(&self.operator_on(ctx, name, &r.algebra)?.op),
            None => None,
        };
        let n = a.dim();
        match r.kind {
            RepKind::Adjoint => {
                if r.module_dim.is_some() || !r.rho.is_empty() || !r.theta.is_empty() || r.module_op.is_some() {
                    return Err(CliError::invalid(
                        ctx,
                        "an adjoint representation takes only `algebra` and `operator`",
                    ));
                }
                Ok(adjoint_rep(a, op))
            }
            RepKind::Explicit => {
                let m =
                    r.module_dim.ok_or_else(|| CliError::invalid(ctx, "explicit representations need `module_dim`"))?;
                let mut rho = vec![Matrix::zeros(m, m); n];
                for (idx, v) in plain_entries(ctx, "rho", &r.rho, &[n, m, m])? {
                    rho[idx[0]][(idx[1], idx[2])] = v;
                }
                let mut theta = vec![Matrix::zeros(m, m); n * n];
                for (idx, v) in plain_entries(ctx, "theta", &r.theta, &[n, n, m, m])? {
                    theta[idx[0] * n + idx[1]][(idx[2], idx[3])] = v;
                }
                let module_op = match &r.module_op {
                    Some(rows) => Some(matrix(ctx, "module_op", rows, m, m)?),
                    None => None,
                };
                Representation::new(n, m, rho, theta, module_op).map_err(|e| CliError::invalid(ctx, e))
            }
        }
    }

    pub fn algebra(&self, name: &str) -> CliResult<&LyAlgebra> {
        self.algebras.get(name).ok_or_else(|| CliError::not_found("algebra", name))
    }

    pub fn operator(&self, name: &str) -> CliResult<&OperatorEntry> {
        self.operators.get(name).ok_or_else(|| CliError::not_found("operator", name))
    }

    pub fn representation(&self, name: &str) -> CliResult<&RepEntry> {
        self.representations.get(name).ok_or_else(|| CliError::not_found("representation", name))
    }

    /// The named operator, which must act on the named algebra.
    pub fn operator_on(&self, ctx: &str, name: &str, algebra: &str) -> CliResult<&OperatorEntry> {
        let entry = self.operator(name)?;
        if entry.algebra != algebra {
            return Err(CliError::invalid(
                ctx,
                format!("operator `{name}` acts on `{}`, not `{algebra}`", entry.algebra),
            ));
        }
        Ok(entry)
    }

    /// The named representation, which must be a representation of the named algebra.
    pub fn representation_on(&self, ctx: &str, name: &str, algebra: &str) -> CliResult<&RepEntry> {
        let entry = self.representation(name)?;
        if entry.algebra != algebra {
            return Err(CliError::invalid(
                ctx,
                format!("representation `{name}` is over `{}`, not `{algebra}`", entry.algebra),
            ));
        }
        Ok(entry)
    }

    /// The table holding `name`.
    pub fn kind_of(&self, name: &str) -> CliResult<ObjectKind> {
        let found = [
            (self.algebras.contains_key(name), ObjectKind::Algebra),
            (self.operators.contains_key(name), ObjectKind::Operator),
            (self.representations.contains_key(name), ObjectKind::Representation),
            (self.cochains.contains_key(name), ObjectKind::Cochain),
            (self.deformations.contains_key(name), ObjectKind::Deformation),
            (self.extensions.contains_key(name), ObjectKind::Extension),
        ];
        found.into_iter().find(|(hit, _)| *hit).map(|(_, k)| k).ok_or_else(|| CliError::not_found("object", name))
    }
}

fn algebra(ctx: &str, r: &RawAlgebra) -> CliResult<LyAlgebra> {
    let n = r.dim;
    let binary = bilinear(ctx, &r.binary, n, n)?;
    let ternary = trilinear(ctx, &r.ternary, n, n)?;
    let mut a = LyAlgebra::new(binary, ternary).map_err(|e| CliError::invalid(ctx, e))?;
    if let Some(labels) = &r.labels {
        if labels.len() != n {
            return Err(CliError::DimMismatch { context: format!("{ctx}.labels"), expected: n, found: labels.len() });
        }
        a = a.with_labels(labels.clone()).map_err(|e| CliError::invalid(ctx, e))?;
    }
    Ok(a)
}

pub(crate) fn scalar(ctx: &str, v: &Value) -> CliResult<Scalar> {
    match v {
        Value::Integer(i) => Ok(Scalar::from_int(*i)),
        Value::String(s) => s.parse().map_err(|e| CliError::invalid(ctx, e)),
        other => Err(CliError::invalid(ctx, format!("expected an integer or a string like \"-1/5\", found {other}"))),
    }
}

fn index(ctx: &str, v: &Value, bound: usize) -> CliResult<usize> {
    let i = v.as_integer().ok_or_else(|| CliError::invalid(ctx, format!("expected a basis index, found {v}")))?;
    usize::try_from(i)
        .ok()
        .filter(|&i| i < bound)
        .ok_or_else(|| CliError::invalid(ctx, format!("index {i} out of range 0..{bound}")))
}

/// Parses `[i_1, …, i_k, value]` rows, rejecting repeated index tuples with
/// different values.
fn plain_entries(ctx: &str, field: &str, rows: &RawEntries, bounds: &[usize]) -> CliResult<Vec<(Vec<usize>, Scalar)>> {
    let ctx = format!("{ctx}.{field}");
    let mut seen: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for row in rows {
        if row.len() != bounds.len() + 1 {
            return Err(CliError::invalid(
                &ctx,
                format!("entries need {} indices and a value, found {} items", bounds.len(), row.len()),
            ));
        }
        let idx = row.iter().zip(bounds).map(|(v, &b)| index(&ctx, v, b)).collect::<CliResult<Vec<_>>>()?;
        let value = scalar(&ctx, row.last().expect("nonempty"))?;
        if let Some(old) = seen.get(&idx) {
            if *old != value {
                return Err(CliError::invalid(
                    &ctx,
                    format!("entry {idx:?} given twice with values {old} and {value}"),
                ));
            }
        }
        seen.insert(idx, value);
    }
    Ok(seen.into_iter().collect())
}

/// Entries antisymmetric in the first two indices, normalized so the first
/// index is smaller. A diagonal entry must be zero; an entry and its mirror
/// must agree up to sign.
fn antisymmetric_entries(
    ctx: &str,
    field: &str,
    rows: &RawEntries,
    bounds: &[usize],
) -> CliResult<Vec<(Vec<usize>, Scalar)>> {
    let ctx_field = format!("{ctx}.{field}");
    let mut canonical: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (mut idx, value) in plain_entries(ctx, field, rows, bounds)? {
        let value = match idx[0].cmp(&idx[1]) {
            std::cmp::Ordering::Less => value,
            std::cmp::Ordering::Greater => {
                idx.swap(0, 1);
                -value
            }
            std::cmp::Ordering::Equal if value.is_zero() => continue,
            std::cmp::Ordering::Equal => {
                return Err(CliError::invalid(&ctx_field, format!("entry {idx:?} must vanish by antisymmetry")));
            }
        };
        if let Some(old) = canonical.get(&idx) {
            if *old != value {
                return Err(CliError::invalid(
                    &ctx_field,
                    format!("entries at {idx:?} and its antisymmetric image disagree ({old} vs {})", -&value),
                ));
            }
        }
        canonical.insert(idx, value);
    }
    Ok(canonical.into_iter().collect())
}

fn bilinear(ctx: &str, rows: &RawEntries, n: usize, out: usize) -> CliResult<Bilinear> {
    let entries: Vec<_> = antisymmetric_entries(ctx, "binary", rows, &[n, n, out])?
        .into_iter()
        .map(|(i, v)| (i[0], i[1], i[2], v))
        .collect();
    if n == out {
        return Ok(antisymmetric_bilinear(n, &entries));
    }
    let mut b = Bilinear::zeros(n, out);
    for (i, j, k, v) in entries {
        b.set(j, i, k, -&v);
        b.set(i, j, k, v);
    }
    Ok(b)
}

fn trilinear(ctx: &str, rows: &RawEntries, n: usize, out: usize) -> CliResult<Trilinear> {
    let entries: Vec<_> = antisymmetric_entries(ctx, "ternary", rows, &[n, n, n, out])?
        .into_iter()
        .map(|(i, v)| (i[0], i[1], i[2], i[3], v))
        .collect();
    if n == out {
        return Ok(antisymmetric_trilinear(n, &entries));
    }
    let mut t = Trilinear::zeros(n, out);
    for (i, j, k, l, v) in entries {
        t.set(j, i, k, l, -&v);
        t.set(i, j, k, l, v);
    }
    Ok(t)
}

fn matrix(ctx: &str, field: &str, rows: &RawMatrix, r: usize, c: usize) -> CliResult<Matrix> {
    let ctx = format!("{ctx}.{field}");
    if rows.len() != r {
        return Err(CliError::DimMismatch { context: format!("{ctx} rows"), expected: r, found: rows.len() });
    }
    let mut out = Vec::with_capacity(r);
    for row in rows {
        if row.len() != c {
            return Err(CliError::DimMismatch { context: format!("{ctx} columns"), expected: c, found: row.len() });
        }
        out.push(row.iter().map(|v| scalar(&ctx, v)).collect::<CliResult<Vec<_>>>()?);
    }
    if r == 0 {
        return Ok(Matrix::zeros(0, c));
    }
    Matrix::from_rows(out).map_err(|e| CliError::invalid(&ctx, e))
}

#[cfg(test)]
mod tests;
