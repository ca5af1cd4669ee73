use num_rational::Ratio;
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A header row and string cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::domain(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }

    pub fn to_tsv(&self) -> String {
        let mut s = self.header.join("\t");
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join("\t"));
            s.push('\n');
        }
        s
    }
}

/// Everything a command can print; the format flag picks one.
#[derive(Clone, Debug, Default)]
pub struct Output {
    pub text: String,
    /// One JSON document per line.
    pub json: Vec<Value>,
    pub table: Option<Table>,
}

impl Output {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s = String::new();
                for v in &self.json {
                    s.push_str(&serde_json::to_string(v)?);
                    s.push('\n');
                }
                Ok(s)
            }
            Format::Csv => self
                .table
                .as_ref()
                .ok_or_else(|| CliError::parse("--csv is only available for tables"))?
                .to_csv(),
        }
    }
}

pub fn ratio(q: &Ratio<u64>) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_uses_lf() {
        let mut t = Table::new(&["n", "as"]);
        t.push(vec!["2".into(), "a,b".into()]);
        assert_eq!(t.to_csv().unwrap(), "n,as\n2,\"a,b\"\n");
    }

    #[test]
    fn ratios() {
        assert_eq!(ratio(&Ratio::new(6, 2)), "3");
        assert_eq!(ratio(&Ratio::new(4, 3)), "4/3");
    }
}
