//! Serializable reports. Every exact value is a string: polynomials in
//! graded-lex order, rationals as `a/b`, algebraic numbers as polynomials in
//! `z` together with the modulus of their field. Floating point only appears
//! inside values tagged `"numeric"`.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_ID: &str = "planemap-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct MapSpecText {
    pub p: String,
    pub q: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobianSection {
    pub jac: String,
    pub is_keller: bool,
}

/// How the map was brought to monic form. Resultant data, fibers and
/// branches refer to the normalized map `(p', q')`.
#[derive(Debug, Clone, Serialize)]
pub struct NormalizationSection {
    pub shear: u32,
    pub target_scale: [String; 2],
    pub p: String,
    pub q: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultantSection {
    pub n: u32,
    pub r_top: String,
    pub r_zero: String,
    pub sakkalis: bool,
    pub geometric_degree: u32,
    /// `irreducible`, `reducible` or `unverified`.
    pub irreducibility: String,
    /// Exponent `l` with `R = alpha · base^l`, when that structure exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_exponent: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum InvertibilitySection {
    Invertible {
        g1: String,
        g2: String,
        lambda1: String,
        lambda2: String,
    },
    NotInvertible {
        n: u32,
        r_top: String,
        failed: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericRoot {
    pub kind: &'static str,
    pub precision: u32,
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationSection {
    pub n: u32,
    pub first_kind_poly: String,
    pub second_kind_poly: String,
    pub degenerate_flag: bool,
    pub first_kind_roots: Vec<NumericRoot>,
    pub second_kind_roots: Vec<NumericRoot>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermText {
    pub exp: i64,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchSection {
    pub m: u32,
    pub x_scale: String,
    /// Modulus of the coefficient field, `null` for the rationals.
    pub field: Option<String>,
    pub ramification: u32,
    pub exact: bool,
    pub resolved: bool,
    pub order: u32,
    pub y: Vec<TermText>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundedBranchSection {
    pub branch: BranchSection,
    pub b0: String,
    pub b1: String,
    pub gap_status: String,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorSection {
    pub code: String,
    pub message: String,
}

impl From<&crate::Error> for ErrorSection {
    fn from(e: &crate::Error) -> Self {
        ErrorSection {
            code: e.code().to_string(),
            message: e.to_string(),
        }
    }
}

/// A section that may have failed on its own without failing the command.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Fallible<T> {
    Ok(T),
    Err { error: ErrorSection },
}

impl<T> Fallible<T> {
    pub fn from_result(r: crate::Result<T>) -> Self {
        match r {
            Ok(v) => Fallible::Ok(v),
            Err(e) => Fallible::Err { error: (&e).into() },
        }
    }

    pub fn ok(&self) -> Option<&T> {
        match self {
            Fallible::Ok(v) => Some(v),
            Fallible::Err { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberSection {
    /// The fiber `p = c` of the input map.
    pub c: String,
    /// The same fiber as `p' = c'` of the normalized map.
    pub normalized_c: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Fallible<ClassificationSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branches: Option<Fallible<Vec<BranchSection>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded_branches: Option<Fallible<Vec<BoundedBranchSection>>>,
    /// Truncation order the series were finally computed with.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_used: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub total_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub toolkit_version: &'static str,
    pub command: String,
    pub map: MapSpecText,
    pub jacobian: JacobianSection,
    pub normalization: NormalizationSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resultant: Option<ResultantSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonproper_set: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invertibility: Option<InvertibilitySection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fibers: Vec<FiberSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Indented `key: value` rendering of the same content.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = String::new();
        render_text(&value, 0, &mut out);
        out
    }
}

/// The JSON body printed when a command fails as a whole.
pub fn error_json(e: &crate::Error) -> String {
    let body = serde_json::json!({
        "schema": SCHEMA_ID,
        "toolkit_version": env!("CARGO_PKG_VERSION"),
        "error": ErrorSection::from(e),
    });
    let mut s = serde_json::to_string_pretty(&body).expect("error serializes");
    s.push('\n');
    s
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar_text(val) {
                    Some(s) => out.push_str(&format!("{}{}: {}\n", pad, k, s)),
                    None if is_empty(val) => out.push_str(&format!("{}{}: []\n", pad, k)),
                    None => {
                        out.push_str(&format!("{}{}:\n", pad, k));
                        render_text(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(s) => out.push_str(&format!("{}- {}\n", pad, s)),
                    None => {
                        out.push_str(&format!("{}-\n", pad));
                        render_text(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!(
            "{}{}\n",
            pad,
            scalar_text(other).unwrap_or_default()
        )),
    }
}

fn is_empty(v: &Value) -> bool {
    matches!(v, Value::Array(a) if a.is_empty()) || matches!(v, Value::Object(o) if o.is_empty())
}
