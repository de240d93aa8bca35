//! Tabular output in markdown, CSV, and JSON.

use std::fmt;

use num_bigint::BigInt;

/// One table cell: an exact integer or free text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(BigInt),
    Text(String),
}

impl Cell {
    pub fn int<T: Into<BigInt>>(value: T) -> Self {
        Cell::Int(value.into())
    }

    pub fn text(value: impl Into<String>) -> Self {
        Cell::Text(value.into())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Text(v) => write!(f, "{v}"),
        }
    }
}

/// A titled table with optional footnotes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDoc {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl TableDoc {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        TableDoc {
            title: title.into(),
            headers: headers.iter().map(|h| (*h).to_owned()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn push_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Looks up a cell by 1-based row order as pushed and header name.
    pub fn cell(&self, row: usize, header: &str) -> Option<&Cell> {
        let col = self.headers.iter().position(|h| h == header)?;
        self.rows.get(row).and_then(|r| r.get(col))
    }

    pub fn to_markdown(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(String::len).collect();
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::to_string).collect())
            .collect();
        for row in &rendered {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }

        let mut out = String::new();
        out.push_str(&format!("## {}\n\n", self.title));
        let header_line: Vec<String> = self
            .headers
            .iter()
            .enumerate()
            .map(|(i, h)| format!("{:<width$}", h, width = widths[i]))
            .collect();
        out.push_str(&format!("| {} |\n", header_line.join(" | ")));
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&format!("| {} |\n", rule.join(" | ")));
        for row in &rendered {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
                .collect();
            out.push_str(&format!("| {} |\n", line.join(" | ")));
        }
        for note in &self.notes {
            out.push_str(&format!("\n{note}\n"));
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.headers)?;
        for row in &self.rows {
            let record: Vec<String> = row.iter().map(Cell::to_string).collect();
            writer.write_record(&record)?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    /// JSON array of row objects keyed by header. Integers are emitted as
    /// bare JSON numbers — they are exact, so no string fallback is needed
    /// on the write side.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"title\": {},\n", json_string(&self.title)));
        out.push_str("  \"rows\": [\n");
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str("    {");
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str(", ");
                }
                out.push_str(&json_string(&self.headers[c]));
                out.push_str(": ");
                match cell {
                    Cell::Int(v) => out.push_str(&v.to_string()),
                    Cell::Text(v) => out.push_str(&json_string(v)),
                }
            }
            out.push('}');
            if r + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ],\n");
        out.push_str("  \"notes\": [");
        for (i, note) in self.notes.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(&json_string(note));
        }
        out.push_str("]\n}\n");
        out
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// The output formats the CLI can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl TableDoc {
    pub fn render(&self, format: Format) -> Result<String, csv::Error> {
        match format {
            Format::Markdown => Ok(self.to_markdown()),
            Format::Csv => self.to_csv(),
            Format::Json => Ok(self.to_json()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TableDoc {
        let mut doc = TableDoc::new("Sample", &["n", "value", "note"]);
        doc.push_row(vec![Cell::int(1), Cell::int(3), Cell::text("")]);
        doc.push_row(vec![
            Cell::int(2),
            Cell::Int("123456789012345678901234567890".parse().unwrap()),
            Cell::text("big, exact"),
        ]);
        doc.push_note("One note.");
        doc
    }

    #[test]
    fn markdown_is_aligned_and_complete() {
        let text = sample().to_markdown();
        assert!(text.starts_with("## Sample\n"));
        assert!(text.contains("| n | value"));
        assert!(text.contains("123456789012345678901234567890"));
        assert!(text.trim_end().ends_with("One note."));
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        let text = sample().to_csv().unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,value,note"));
        assert_eq!(lines.next(), Some("1,3,"));
        assert_eq!(
            lines.next(),
            Some("2,123456789012345678901234567890,\"big, exact\"")
        );
    }

    #[test]
    fn json_escapes_and_keeps_integers_bare() {
        let mut doc = TableDoc::new("Quote \"me\"", &["k"]);
        doc.push_row(vec![Cell::text("line\nbreak")]);
        doc.push_row(vec![Cell::int(7)]);
        let text = doc.to_json();
        assert!(text.contains("\"Quote \\\"me\\\"\""));
        assert!(text.contains("\"line\\nbreak\""));
        assert!(text.contains("\"k\": 7"));
    }

    #[test]
    fn cell_lookup_by_header() {
        let doc = sample();
        assert_eq!(doc.cell(0, "value"), Some(&Cell::int(3)));
        assert_eq!(doc.cell(1, "note"), Some(&Cell::text("big, exact")));
        assert_eq!(doc.cell(0, "absent"), None);
    }
}
