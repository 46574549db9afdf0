//! Instance files: one self-describing JSON document per instance.
//!
//! Every scalar is a string (`"n"`, `"p/q"`, `"k mod p"`); JSON numbers are
//! rejected for scalars so no value ever passes through floating point.
//! Matrices are lists of rows and act on column vectors. A tensor
//! `t ∈ A⊗A` is the coefficient matrix `t[i][j]` of `e_i⊗e_j`. A product
//! grid `g[i][j]` is the coordinate vector of `e_i e_j`. A comultiplication
//! is the list of tensors `Δ(e_0), …, Δ(e_{n-1})`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactfield::{BilinearMap, CoMap, FieldKind, LinMap, Scalar, Tensor2, Vector};
use crate::structures::{AlgebraData, ModuleData, Pairing, StructureMaps};

type Row = Vec<String>;
type Matrix = Vec<Row>;
type Grid = Vec<Vec<Row>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: String,
    pub dim: usize,
    pub mul: Grid,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Row>,
    #[serde(default, skip_serializing_if = "MapsBlock::is_empty")]
    pub maps: MapsBlock,
    #[serde(default, skip_serializing_if = "TensorsBlock::is_empty")]
    pub tensors: TensorsBlock,
    #[serde(default, skip_serializing_if = "ScalarsBlock::is_empty")]
    pub scalars: ScalarsBlock,
    #[serde(default, skip_serializing_if = "OperatorsBlock::is_empty")]
    pub operators: OperatorsBlock,
    #[serde(default, skip_serializing_if = "ProductsBlock::is_empty")]
    pub products: ProductsBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleBlock>,
    #[serde(default, skip_serializing_if = "ComultiplicationBlock::is_empty")]
    pub comultiplication: ComultiplicationBlock,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<TaskSpec>,
}

macro_rules! optional_block {
    ($name:ident { $($field:ident : $ty:ty),* $(,)? }) => {
        #[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name {
            $(
                #[serde(default, skip_serializing_if = "Option::is_none")]
                pub $field: Option<$ty>,
            )*
        }

        impl $name {
            pub fn is_empty(&self) -> bool {
                true $(&& self.$field.is_none())*
            }
        }
    };
}

optional_block!(MapsBlock { alpha: Matrix, beta: Matrix, psi: Matrix, omega: Matrix });
optional_block!(TensorsBlock { r: Matrix, s: Matrix, u: Matrix });
optional_block!(ScalarsBlock { lambda: String, gamma: String });
optional_block!(ProductsBlock { prec: Grid, succ: Grid, prelie: Grid });
optional_block!(ComultiplicationBlock { delta: Vec<Matrix>, delta1: Vec<Matrix>, delta2: Vec<Matrix> });

/// `R`, `S` act on the algebra; `T` acts on the module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorsBlock {
    #[serde(default, rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<Matrix>,
    #[serde(default, rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<Matrix>,
    #[serde(default, rename = "T", skip_serializing_if = "Option::is_none")]
    pub t: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Grid>,
}

impl OperatorsBlock {
    pub fn is_empty(&self) -> bool {
        self == &OperatorsBlock::default()
    }
}

/// `left[a][m]` is the coordinate vector of `e_a▷e_m`, `right[m][a]` that
/// of `e_m◁e_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Grid>,
    pub alpha: Matrix,
    pub beta: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub run: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<super::report::Outcome>,
}

/// A validated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: Option<String>,
    pub kind: FieldKind,
    pub alg: AlgebraData,
    pub maps: StructureMaps,
    pub r: Option<Tensor2>,
    pub s: Option<Tensor2>,
    pub u: Option<Tensor2>,
    pub lambda: Option<Scalar>,
    pub gamma: Option<Scalar>,
    pub op_r: Option<LinMap>,
    pub op_s: Option<LinMap>,
    pub op_t: Option<LinMap>,
    pub xi: Option<BilinearMap>,
    pub zeta: Option<BilinearMap>,
    pub prec: Option<BilinearMap>,
    pub succ: Option<BilinearMap>,
    pub prelie: Option<BilinearMap>,
    pub module: Option<ModuleData>,
    pub delta: Option<CoMap>,
    pub delta1: Option<CoMap>,
    pub delta2: Option<CoMap>,
    pub tasks: Vec<TaskSpec>,
}

/// A diagnostic with the JSON path (and, for syntax errors, the position)
/// of the offending value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(path: &str, message: impl Into<String>) -> FormatError {
    FormatError {
        path: path.to_string(),
        message: message.into(),
    }
}

struct Reader {
    kind: FieldKind,
    n: usize,
}

impl Reader {
    fn scalar(&self, path: &str, s: &str) -> Result<Scalar, FormatError> {
        Scalar::parse_in(s, self.kind).map_err(|e| err(path, format!("{e} in {s:?}")))
    }

    fn vector(&self, path: &str, row: &[String], len: usize) -> Result<Vector, FormatError> {
        if row.len() != len {
            return Err(err(path, format!("expected {len} entries, found {}", row.len())));
        }
        row.iter()
            .enumerate()
            .map(|(i, s)| self.scalar(&format!("{path}[{i}]"), s))
            .collect::<Result<Vec<_>, _>>()
            .map(Vector::new)
    }

    fn rows(&self, path: &str, m: &Matrix, size: usize) -> Result<Vec<Vec<Scalar>>, FormatError> {
        if m.len() != size {
            return Err(err(path, format!("expected {size} rows, found {}", m.len())));
        }
        m.iter()
            .enumerate()
            .map(|(i, row)| self.vector(&format!("{path}[{i}]"), row, size).map(Vector::into_inner))
            .collect()
    }

    fn matrix(&self, path: &str, m: &Matrix, size: usize) -> Result<LinMap, FormatError> {
        LinMap::from_rows(self.rows(path, m, size)?).map_err(|e| err(path, e.to_string()))
    }

    fn tensor(&self, path: &str, m: &Matrix) -> Result<Tensor2, FormatError> {
        Tensor2::from_rows(self.rows(path, m, self.n)?).map_err(|e| err(path, e.to_string()))
    }

    fn grid(&self, path: &str, g: &Grid, rows: usize, cols: usize, out: usize) -> Result<Vec<Vec<Vec<Scalar>>>, FormatError> {
        if g.len() != rows {
            return Err(err(path, format!("expected {rows} rows, found {}", g.len())));
        }
        g.iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != cols {
                    return Err(err(&format!("{path}[{i}]"), format!("expected {cols} entries, found {}", row.len())));
                }
                row.iter()
                    .enumerate()
                    .map(|(j, v)| self.vector(&format!("{path}[{i}][{j}]"), v, out).map(Vector::into_inner))
                    .collect()
            })
            .collect()
    }

    fn bilinear(&self, path: &str, g: &Grid) -> Result<BilinearMap, FormatError> {
        BilinearMap::from_grid(self.grid(path, g, self.n, self.n, self.n)?).map_err(|e| err(path, e.to_string()))
    }

    fn comap(&self, path: &str, images: &[Matrix]) -> Result<CoMap, FormatError> {
        if images.len() != self.n {
            return Err(err(path, format!("expected {} images, found {}", self.n, images.len())));
        }
        let ts = images
            .iter()
            .enumerate()
            .map(|(j, m)| self.tensor(&format!("{path}[{j}]"), m))
            .collect::<Result<Vec<_>, _>>()?;
        CoMap::new(ts).map_err(|e| err(path, e.to_string()))
    }

    fn module(&self, b: &ModuleBlock) -> Result<ModuleData, FormatError> {
        let (n, m) = (self.n, b.dim);
        if m == 0 {
            return Err(err("module.dim", "dimension must be positive"));
        }
        let left = match &b.left {
            Some(g) => Some(Pairing::from_grid(self.grid("module.left", g, n, m, m)?, m, m).map_err(|e| err("module.left", e.to_string()))?),
            None => None,
        };
        let right = match &b.right {
            Some(g) => Some(Pairing::from_grid(self.grid("module.right", g, m, n, m)?, n, m).map_err(|e| err("module.right", e.to_string()))?),
            None => None,
        };
        if left.is_none() && right.is_none() {
            return Err(err("module", "a module needs a left or a right action"));
        }
        Ok(ModuleData {
            dim: m,
            left,
            right,
            alpha: self.matrix("module.alpha", &b.alpha, m)?,
            beta: self.matrix("module.beta", &b.beta, m)?,
        })
    }
}

fn opt<T, U>(v: &Option<T>, f: impl FnOnce(&T) -> Result<U, FormatError>) -> Result<Option<U>, FormatError> {
    v.as_ref().map(f).transpose()
}

/// Parses JSON text; syntax and schema errors carry line and column.
pub fn parse_file(text: &str) -> Result<InstanceFile, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError {
        path: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

pub fn validate(file: &InstanceFile) -> Result<Instance, FormatError> {
    let kind: FieldKind = file.field.parse().map_err(|e: crate::exactfield::FieldError| err("field", e.to_string()))?;
    let n = file.dim;
    if n == 0 {
        return Err(err("dim", "dimension must be positive"));
    }
    let rd = Reader { kind, n };
    let mul = rd.bilinear("mul", &file.mul)?;
    let unit = opt(&file.unit, |u| rd.vector("unit", u, n))?;
    let alg = AlgebraData::new(mul, unit).map_err(|e| err("mul", e.to_string()))?;
    let map = |name: &str, m: &Option<Matrix>| -> Result<LinMap, FormatError> {
        match m {
            Some(m) => rd.matrix(&format!("maps.{name}"), m, n),
            None => Ok(LinMap::identity(kind, n)),
        }
    };
    let mb = &file.maps;
    let maps = StructureMaps::new(map("alpha", &mb.alpha)?, map("beta", &mb.beta)?, map("psi", &mb.psi)?, map("omega", &mb.omega)?);
    let tb = &file.tensors;
    let sb = &file.scalars;
    let ob = &file.operators;
    let pb = &file.products;
    let cb = &file.comultiplication;
    let module = opt(&file.module, |b| rd.module(b))?;
    let op_t = match (&ob.t, &module) {
        (Some(t), Some(m)) => Some(rd.matrix("operators.T", t, m.dim)?),
        (Some(t), None) => Some(rd.matrix("operators.T", t, n)?),
        (None, _) => None,
    };
    Ok(Instance {
        name: file.name.clone(),
        kind,
        r: opt(&tb.r, |m| rd.tensor("tensors.r", m))?,
        s: opt(&tb.s, |m| rd.tensor("tensors.s", m))?,
        u: opt(&tb.u, |m| rd.tensor("tensors.u", m))?,
        lambda: opt(&sb.lambda, |s| rd.scalar("scalars.lambda", s))?,
        gamma: opt(&sb.gamma, |s| rd.scalar("scalars.gamma", s))?,
        op_r: opt(&ob.r, |m| rd.matrix("operators.R", m, n))?,
        op_s: opt(&ob.s, |m| rd.matrix("operators.S", m, n))?,
        op_t,
        xi: opt(&ob.xi, |g| rd.bilinear("operators.xi", g))?,
        zeta: opt(&ob.zeta, |g| rd.bilinear("operators.zeta", g))?,
        prec: opt(&pb.prec, |g| rd.bilinear("products.prec", g))?,
        succ: opt(&pb.succ, |g| rd.bilinear("products.succ", g))?,
        prelie: opt(&pb.prelie, |g| rd.bilinear("products.prelie", g))?,
        module,
        delta: opt(&cb.delta, |c| rd.comap("comultiplication.delta", c))?,
        delta1: opt(&cb.delta1, |c| rd.comap("comultiplication.delta1", c))?,
        delta2: opt(&cb.delta2, |c| rd.comap("comultiplication.delta2", c))?,
        tasks: file.tasks.clone(),
        alg,
        maps,
    })
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    validate(&parse_file(text)?)
}

/// Canonical scalar text: residues print as plain integers since the field
/// is declared once at the top of the file.
fn scalar_text(s: &Scalar) -> String {
    match s {
        Scalar::Prime { residue, .. } => residue.to_string(),
        other => other.to_string(),
    }
}

fn row_text(v: &[Scalar]) -> Row {
    v.iter().map(scalar_text).collect()
}

fn matrix_text(rows: Vec<Vec<Scalar>>) -> Matrix {
    rows.iter().map(|r| row_text(r)).collect()
}

fn grid_text(grid: Vec<Vec<Vec<Scalar>>>) -> Grid {
    grid.iter().map(|row| row.iter().map(|v| row_text(v)).collect()).collect()
}

fn comap_text(c: &CoMap) -> Vec<Matrix> {
    c.images().iter().map(|t| matrix_text(t.rows())).collect()
}

pub fn emit(inst: &Instance) -> InstanceFile {
    let m = &inst.maps;
    InstanceFile {
        name: inst.name.clone(),
        field: inst.kind.to_string(),
        dim: inst.alg.dim(),
        mul: grid_text(inst.alg.mul().grid()),
        unit: inst.alg.unit().map(|u| row_text(u)),
        maps: MapsBlock {
            alpha: Some(matrix_text(m.alpha.rows())),
            beta: Some(matrix_text(m.beta.rows())),
            psi: Some(matrix_text(m.psi.rows())),
            omega: Some(matrix_text(m.omega.rows())),
        },
        tensors: TensorsBlock {
            r: inst.r.as_ref().map(|t| matrix_text(t.rows())),
            s: inst.s.as_ref().map(|t| matrix_text(t.rows())),
            u: inst.u.as_ref().map(|t| matrix_text(t.rows())),
        },
        scalars: ScalarsBlock {
            lambda: inst.lambda.as_ref().map(scalar_text),
            gamma: inst.gamma.as_ref().map(scalar_text),
        },
        operators: OperatorsBlock {
            r: inst.op_r.as_ref().map(|f| matrix_text(f.rows())),
            s: inst.op_s.as_ref().map(|f| matrix_text(f.rows())),
            t: inst.op_t.as_ref().map(|f| matrix_text(f.rows())),
            xi: inst.xi.as_ref().map(|b| grid_text(b.grid())),
            zeta: inst.zeta.as_ref().map(|b| grid_text(b.grid())),
        },
        products: ProductsBlock {
            prec: inst.prec.as_ref().map(|b| grid_text(b.grid())),
            succ: inst.succ.as_ref().map(|b| grid_text(b.grid())),
            prelie: inst.prelie.as_ref().map(|b| grid_text(b.grid())),
        },
        module: inst.module.as_ref().map(|md| ModuleBlock {
            dim: md.dim,
            left: md.left.as_ref().map(|p| grid_text(p.grid())),
            right: md.right.as_ref().map(|p| grid_text(p.grid())),
            alpha: matrix_text(md.alpha.rows()),
            beta: matrix_text(md.beta.rows()),
        }),
        comultiplication: ComultiplicationBlock {
            delta: inst.delta.as_ref().map(comap_text),
            delta1: inst.delta1.as_ref().map(comap_text),
            delta2: inst.delta2.as_ref().map(comap_text),
        },
        tasks: inst.tasks.clone(),
    }
}

pub fn emit_text(inst: &Instance) -> String {
    let value = serde_json::to_value(emit(inst)).expect("instance serializes");
    let mut out = String::new();
    write_compact(&value, 0, &mut out);
    out.push('\n');
    out
}

/// Pretty JSON with flat arrays and flat objects kept on one line.
pub fn write_compact(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_compact(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.values().all(|x| !x.is_array() && !x.is_object()) => {
            let fields: Vec<String> = map
                .iter()
                .map(|(k, x)| format!("{}: {}", serde_json::to_string(k).expect("key"), serde_json::to_string(x).expect("scalar")))
                .collect();
            out.push_str(&format!("{{{}}}", fields.join(", ")));
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_compact(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        other => out.push_str(&serde_json::to_string(other).expect("scalar")),
    }
}

impl Instance {
    /// The algebra and maps alone, with every optional block empty.
    pub fn bare(name: Option<String>, alg: AlgebraData, maps: StructureMaps) -> Instance {
        Instance {
            name,
            kind: alg.kind(),
            alg,
            maps,
            r: None,
            s: None,
            u: None,
            lambda: None,
            gamma: None,
            op_r: None,
            op_s: None,
            op_t: None,
            xi: None,
            zeta: None,
            prec: None,
            succ: None,
            prelie: None,
            module: None,
            delta: None,
            delta1: None,
            delta2: None,
            tasks: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const DUAL: &str = r#"{
        "field": "Q", "dim": 2,
        "mul": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
        "unit": ["1","0"],
        "tensors": {"r": [["0","0"],["0","1"]]},
        "scalars": {"lambda": "-1/2"}
    }"#;

    #[test]
    fn parses_and_defaults_maps() {
        let inst = parse_instance(DUAL).unwrap();
        let (alg, maps) = corpus::dual_numbers(FieldKind::Rational);
        assert_eq!(inst.alg, alg);
        assert_eq!(inst.maps, maps);
        assert_eq!(inst.lambda, Some(Scalar::rational(-1, 2).unwrap()));
        assert_eq!(inst.r, Some(Tensor2::basis(FieldKind::Rational, 2, 1, 1)));
    }

    #[test]
    fn round_trip_is_exact() {
        let inst = parse_instance(DUAL).unwrap();
        let again = parse_instance(&emit_text(&inst)).unwrap();
        assert_eq!(inst, again);
        assert_eq!(emit_text(&inst), emit_text(&again));
    }

    #[test]
    fn rejects_bad_input_with_a_path() {
        let e = parse_instance(&DUAL.replace("\"-1/2\"", "\"1/0\"")).unwrap_err();
        assert_eq!(e.path, "scalars.lambda");
        let e = parse_instance(&DUAL.replace("\"dim\": 2", "\"dim\": 2, \"extra\": 1")).unwrap_err();
        assert!(e.message.contains("unknown field"), "{e}");
        let e = parse_instance(&DUAL.replace("\"-1/2\"", "-0.5")).unwrap_err();
        assert!(e.path.starts_with("line "), "{e}");
        let e = parse_instance(&DUAL.replace("[[\"0\",\"0\"],[\"0\",\"1\"]]", "[[\"0\",\"0\"]]")).unwrap_err();
        assert_eq!(e.path, "tensors.r");
    }

    #[test]
    fn prime_field_residues_reduce() {
        let text = r#"{"field": "F_3", "dim": 1, "mul": [[["4"]]], "unit": ["1 mod 3"]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.alg, corpus::field(FieldKind::Prime(3)).0);
        assert!(parse_instance(&text.replace("1 mod 3", "1 mod 5")).is_err());
    }
}
