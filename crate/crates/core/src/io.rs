//! The JSON matrix file format.
//!
//! ```json
//! {"field": {"kind": "prime", "p": 2}, "variables": ["x", "y", "z"], "size": 5,
//!  "upper": [[1, 4, "x"], [1, 5, "z"]]}
//! ```
//!
//! `upper` lists strictly upper-triangular entries (1-based); omitted pairs
//! are zero. `variables` renames x, y, z and defaults to those names.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pfaffian::SkewMatrix;
use crate::polyring::{Field, Polynomial};

const DEFAULT_VARIABLES: [&str; 3] = ["x", "y", "z"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDescriptor {
    Prime { p: u32 },
    Rational,
}

impl FieldDescriptor {
    pub fn field(&self) -> Result<Field> {
        match self {
            FieldDescriptor::Prime { p } => Field::prime(*p),
            FieldDescriptor::Rational => Ok(Field::Rational),
        }
    }
}

impl From<Field> for FieldDescriptor {
    fn from(field: Field) -> Self {
        match field {
            Field::Prime { p } => FieldDescriptor::Prime { p },
            Field::Rational => FieldDescriptor::Rational,
        }
    }
}

fn default_variables() -> Vec<String> {
    DEFAULT_VARIABLES.iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub field: FieldDescriptor,
    #[serde(default = "default_variables")]
    pub variables: Vec<String>,
    pub size: usize,
    pub upper: Vec<(usize, usize, String)>,
}

fn offset_to_line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.chars().count(), |n| before[n + 1..].chars().count()) + 1;
    (line, column)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Replaces whole identifiers of `text` by the table; other text is copied.
/// Also returns, for each byte of the output, the offset it came from.
fn rename(text: &str, from: &[String], to: &[String]) -> std::result::Result<(String, Vec<usize>), (usize, String)> {
    let mut out = String::with_capacity(text.len());
    let mut origin = Vec::with_capacity(text.len());
    let mut chars = text.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        if !is_ident_start(c) {
            out.push(c);
            origin.extend(std::iter::repeat_n(start, c.len_utf8()));
            continue;
        }
        let mut end = start + c.len_utf8();
        while let Some(&(n, d)) = chars.peek() {
            if !is_ident(d) {
                break;
            }
            end = n + d.len_utf8();
            chars.next();
        }
        let word = &text[start..end];
        match from.iter().position(|v| v == word) {
            Some(l) => {
                out.push_str(&to[l]);
                origin.extend(std::iter::repeat_n(start, to[l].len()));
            }
            None => return Err((start, format!("unknown variable '{word}'"))),
        }
    }
    origin.push(text.len());
    Ok((out, origin))
}

impl MatrixDocument {
    /// Parses the JSON text. Syntax and shape errors carry the line and
    /// column in `text`.
    pub fn parse(text: &str) -> Result<MatrixDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<String> = self
            .upper
            .iter()
            .map(|(i, j, p)| format!("    [{i}, {j}, {}]", serde_json::to_string(p).expect("string")))
            .collect();
        let upper = if entries.is_empty() { "[]".to_string() } else { format!("[\n{}\n  ]", entries.join(",\n")) };
        format!(
            "{{\n  \"field\": {},\n  \"variables\": {},\n  \"size\": {},\n  \"upper\": {}\n}}\n",
            serde_json::to_string(&self.field).expect("field"),
            serde_json::to_string(&self.variables).expect("variables"),
            self.size,
            upper
        )
    }

    /// The document of T with the default variable names, nonzero entries only.
    pub fn from_matrix(t: &SkewMatrix) -> MatrixDocument {
        MatrixDocument {
            field: t.field().into(),
            variables: default_variables(),
            size: t.size(),
            upper: t.upper_entries().into_iter().filter(|(_, _, p)| !p.is_zero()).map(|(i, j, p)| (i, j, p.to_string())).collect(),
        }
    }

    /// Renames the variables, rewriting every entry.
    pub fn with_variables(&self, variables: [&str; 3]) -> Result<MatrixDocument> {
        let to: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        check_variables(&to)?;
        let upper = self
            .upper
            .iter()
            .map(|(i, j, p)| {
                rename(p, &self.variables, &to)
                    .map(|(q, _)| (*i, *j, q))
                    .map_err(|(_, message)| Error::Argument(format!("entry ({i}, {j}): {message}")))
            })
            .collect::<Result<_>>()?;
        Ok(MatrixDocument { variables: to, upper, ..self.clone() })
    }

    /// Validates the document and builds T. Errors inside an entry string
    /// report line 1 and the column within that string.
    pub fn to_matrix(&self) -> Result<SkewMatrix> {
        self.build(|_, at, message| Error::Parse { line: 1, column: at + 1, message })
    }

    /// `locate(entry, byte offset in the entry string, message)` builds parse errors.
    fn build(&self, locate: impl Fn(usize, usize, String) -> Error) -> Result<SkewMatrix> {
        let field = self.field.field()?;
        check_variables(&self.variables)?;
        let plain = default_variables();
        let mut entries = Vec::with_capacity(self.upper.len());
        for (n, (i, j, text)) in self.upper.iter().enumerate() {
            let (renamed, origin) =
                rename(text, &self.variables, &plain).map_err(|(at, message)| locate(n, at, format!("entry ({i}, {j}): {message}")))?;
            let poly = Polynomial::parse(&renamed, field).map_err(|e| match e {
                Error::Parse { column, message, .. } => locate(n, origin[(column - 1).min(renamed.len())], format!("entry ({i}, {j}): {message}")),
                other => other,
            })?;
            entries.push((*i, *j, poly));
        }
        SkewMatrix::from_upper(field, self.size, entries)
    }
}

fn check_variables(vars: &[String]) -> Result<()> {
    if vars.len() != 3 {
        return Err(Error::Argument(format!("expected 3 variable names, found {}", vars.len())));
    }
    for (n, v) in vars.iter().enumerate() {
        let mut chars = v.chars();
        if !chars.next().is_some_and(is_ident_start) || !chars.all(is_ident) {
            return Err(Error::Argument(format!("invalid variable name '{v}'")));
        }
        if vars[..n].contains(v) {
            return Err(Error::Argument(format!("repeated variable name '{v}'")));
        }
    }
    Ok(())
}

/// Byte offset of the opening quote of each `upper` entry string, found by
/// scanning forward from the `upper` key for the re-encoded literal.
fn entry_offsets(text: &str, doc: &MatrixDocument) -> Vec<Option<usize>> {
    let mut from = text.find("\"upper\"").unwrap_or(0);
    doc.upper
        .iter()
        .map(|(_, _, p)| {
            let literal = serde_json::to_string(p).expect("string");
            let found = text[from..].find(&literal).map(|k| from + k);
            if let Some(k) = found {
                from = k + literal.len();
            }
            found
        })
        .collect()
}

/// Parses a matrix file into a validated skew-symmetric matrix. Errors
/// inside polynomial strings are reported at their line and column in `text`.
pub fn parse_matrix(text: &str) -> Result<SkewMatrix> {
    let doc = MatrixDocument::parse(text)?;
    let offsets = entry_offsets(text, &doc);
    let fallback = text.find("\"upper\"").unwrap_or(0);
    doc.build(|n, at, message| {
        let (line, col) = match offsets[n] {
            Some(start) => offset_to_line_col(text, start + 1 + at),
            None => offset_to_line_col(text, fallback),
        };
        Error::Parse { line, column: col, message }
    })
}

/// Serializes T with the default variable names.
pub fn write_matrix(t: &SkewMatrix) -> String {
    MatrixDocument::from_matrix(t).to_json()
}
