use serde::Serialize;
use sunya_core::RuleTrace;

/// The single JSON object printed per invocation. Fields that a command
/// does not produce are left out.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interpretations: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<RuleTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub columns: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<String>>>,
}

/// A finished command: what to print in text mode and in JSON mode.
pub struct Output {
    pub text: String,
    pub report: Report,
}

impl Output {
    pub fn table(columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        let text = align(columns, &rows);
        Output {
            text,
            report: Report {
                columns: Some(columns.iter().map(|c| c.to_string()).collect()),
                rows: Some(rows),
                ..Report::default()
            },
        }
    }
}

/// Left-aligned columns separated by two spaces, header first.
pub fn align(columns: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = columns.iter().map(|c| width(c)).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(cell));
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            out.extend(std::iter::repeat_n(' ', w - width(cell)));
        }
        out.trim_end().to_string()
    };
    let mut lines = vec![line(columns.to_vec())];
    lines.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_columns() {
        let rows = vec![vec!["I".to_string(), "1".to_string()], vec!["M".to_string(), "1000".to_string()]];
        assert_eq!(align(&["letter", "value"], &rows), "letter  value\nI       1\nM       1000");
    }

    #[test]
    fn omits_absent_fields() {
        let r = Report { value: Some("7".into()), ..Report::default() };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"value":"7"}"#);
    }
}
