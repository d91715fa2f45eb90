//! Instance files: line 1 holds `A`, line 2 holds `B`, as whitespace
//! separated signed decimal integers. Lines starting with `#` are comments.
//! LF and CRLF line endings are both accepted.

use std::fmt;

use lcais::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; 0 when the error is not tied to a line.
    pub line: usize,
    /// 1-based column of the offending token, in characters.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(
                f,
                "line {}, column {}: {}",
                self.line, self.column, self.message
            )
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub a: Vec<Value>,
    pub b: Vec<Value>,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
}

fn parse_line(line_no: usize, line: &str, out: &mut Vec<Value>) -> Result<(), ParseError> {
    let mut rest = line;
    let mut consumed = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        let column = line[..consumed + start].chars().count() + 1;
        let value = token.parse::<Value>().map_err(|e| ParseError {
            line: line_no,
            column,
            message: match e.kind() {
                std::num::IntErrorKind::PosOverflow | std::num::IntErrorKind::NegOverflow => {
                    format!("`{token}` does not fit in a 64-bit signed integer")
                }
                _ => format!("`{token}` is not an integer"),
            },
        })?;
        out.push(value);
        consumed += start + len;
        rest = &tail[len..];
    }
    Ok(())
}

/// Parses a two-line instance.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let lines: Vec<(usize, &str)> = data_lines(text).collect();
    if lines.len() != 2 {
        return Err(ParseError {
            line: lines.get(2).map_or(0, |l| l.0),
            column: 1,
            message: format!(
                "expected exactly 2 data lines (A and B), found {}",
                lines.len()
            ),
        });
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    parse_line(lines[0].0, lines[0].1, &mut a)?;
    parse_line(lines[1].0, lines[1].1, &mut b)?;
    Ok(Instance { a, b })
}

/// Parses a file holding a single sequence, possibly spread over several
/// lines.
pub fn parse_sequence(text: &str) -> Result<Vec<Value>, ParseError> {
    let mut out = Vec::new();
    for (line_no, line) in data_lines(text) {
        parse_line(line_no, line, &mut out)?;
    }
    Ok(out)
}

fn join(values: &[Value]) -> String {
    values
        .iter()
        .map(Value::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders an instance with an optional `#` header line.
pub fn write_instance(instance: &Instance, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        out.push_str("# ");
        out.push_str(h);
        out.push('\n');
    }
    out.push_str(&join(&instance.a));
    out.push('\n');
    out.push_str(&join(&instance.b));
    out.push('\n');
    out
}
