use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use wfk_core::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// What a subcommand produced, in all the shapes it can be printed in.
pub struct Output {
    /// Serialized once: keys sorted for data, field order for reports.
    pub json: String,
    pub csv: Option<Vec<Vec<String>>>,
    pub pretty: String,
    /// `Some(false)` marks a failed verification suite.
    pub pass: Option<bool>,
}

impl Output {
    pub fn data<T: Serialize>(value: &T, csv: Option<Vec<Vec<String>>>, pretty: String) -> Result<Self> {
        Ok(Output {
            json: serde_json::to_value(value)?.to_string(),
            csv,
            pretty,
            pass: None,
        })
    }

    pub fn report(r: &VerificationReport) -> Result<Self> {
        let mut rows = vec![vec!["probe".into(), "lhs".into(), "rhs".into(), "equal".into()]];
        rows.extend(
            r.probes
                .iter()
                .map(|p| vec![p.probe.clone(), p.lhs.clone(), p.rhs.clone(), p.equal.to_string()]),
        );
        Ok(Output {
            json: r.to_json(),
            csv: Some(rows),
            pretty: pretty_report(r),
            pass: Some(r.pass),
        })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => format!("{}\n", self.json),
            Format::Pretty => self.pretty.clone(),
            Format::Csv => {
                let rows = self.csv.as_ref().context("this command has no CSV form")?;
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in rows {
                    w.write_record(row)?;
                }
                String::from_utf8(w.into_inner()?)?
            }
        })
    }

    pub fn write(&self, format: Format, emit: Option<&Path>) -> Result<()> {
        let text = self.render(format)?;
        match emit {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn pretty_report(r: &VerificationReport) -> String {
    let failed = r.failures().count();
    let mut s = format!(
        "{}: {} ({} probes, {} failed)\n",
        r.suite,
        if r.pass { "PASS" } else { "FAIL" },
        r.probes.len(),
        failed
    );
    for p in r.failures().take(20) {
        s += &format!("  {}\n    lhs = {}\n    rhs = {}\n", p.probe, p.lhs, p.rhs);
    }
    if failed > 20 {
        s += &format!("  ... {} more\n", failed - 20);
    }
    s
}

/// Integer matrix as CSV rows.
pub fn matrix_rows<T: ToString>(m: &[Vec<T>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// Space-aligned table for terminal output.
pub fn pretty_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|x| x.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, x)| format!("{:>w$}", x, w = width[c]))
            .collect();
        s += line.join("  ").trim_end();
        s.push('\n');
    }
    s
}
