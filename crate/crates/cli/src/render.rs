//! Text, JSON and CSV renderers.

use clap::ValueEnum;
use liejordan_core::rootdata::DominantWeight;
use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One command's result in every output format. `csv[0]` is the header.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub csv: Vec<Vec<String>>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => serde_json::to_string_pretty(&self.json).map_err(|e| e.to_string()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                let s = String::from_utf8(bytes).map_err(|e| e.to_string())?;
                Ok(s.trim_end().to_string())
            }
        }
    }
}

/// Decimal, with a digit count appended past 40 digits.
pub fn big_text(v: &BigUint) -> String {
    let s = v.to_string();
    if s.len() > 40 {
        format!("{s} ({} digits)", s.len())
    } else {
        s
    }
}

pub fn weights_text(ws: &[DominantWeight]) -> String {
    ws.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_get_digit_counts() {
        assert_eq!(big_text(&BigUint::from(7u32)), "7");
        let v: BigUint = "1".repeat(41).parse().unwrap();
        assert!(big_text(&v).ends_with("(41 digits)"));
    }

    #[test]
    fn csv_quotes_commas() {
        let r = Report {
            text: String::new(),
            json: serde_json::Value::Null,
            csv: vec![vec!["w".into()], vec!["(1,0)".into()]],
        };
        assert_eq!(r.render(Format::Csv).unwrap(), "w\n\"(1,0)\"");
    }

    #[test]
    fn columns_align() {
        let rows = vec![
            vec!["a".into(), "bb".into()],
            vec!["ccc".into(), "d".into()],
        ];
        assert_eq!(aligned(&rows), "a    bb\nccc  d");
    }
}
