use std::fmt::Write as _;
use std::io;
use std::str::FromStr;

use super::{AuditReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Tsv,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "tsv" => Ok(OutputFormat::Tsv),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(format!("unknown report format `{s}`")),
        }
    }
}

fn witness_field(r: &AuditReport) -> String {
    r.witness.as_ref().map_or_else(|| "-".to_string(), |w| w.to_string())
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

pub fn render(reports: &[AuditReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(reports),
        OutputFormat::Tsv => {
            let mut out = String::from("claim\tinstance\tverdict\texpected\tactual\twitness\n");
            for r in reports {
                let fields = [
                    r.claim.to_string(),
                    r.instance.clone(),
                    r.verdict.to_string(),
                    r.expected.clone(),
                    r.actual.clone(),
                    witness_field(r),
                ];
                let fields: Vec<String> = fields.iter().map(|f| clean(f)).collect();
                out.push_str(&fields.join("\t"));
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_csv(reports, &mut buf).expect("writing to memory");
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
    }
}

fn render_text(reports: &[AuditReport]) -> String {
    let mut out = String::new();
    let (mut pass, mut fail, mut skipped) = (0, 0, 0);
    for r in reports {
        match r.verdict {
            Verdict::Pass => pass += 1,
            Verdict::Fail => fail += 1,
            Verdict::Skipped(_) => skipped += 1,
        }
        let _ = write!(out, "{:<21} {:<11} {}", r.verdict.to_string(), r.claim.name(), r.instance);
        if !r.expected.is_empty() || !r.actual.is_empty() {
            let _ = write!(out, ": expected {}, actual {}", r.expected, r.actual);
        }
        out.push('\n');
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "    witness: {w}");
        }
        for note in &r.notes {
            let _ = writeln!(out, "    {note}");
        }
    }
    let _ = writeln!(out, "{pass} passed, {fail} failed, {skipped} skipped");
    out
}

/// CSV with a header row; notes are joined with `; `.
pub fn write_csv<W: io::Write>(reports: &[AuditReport], writer: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["claim", "instance", "verdict", "expected", "actual", "witness", "upper_bound", "notes"])?;
    for r in reports {
        let upper = match r.upper_bound {
            Some(true) => "valid",
            Some(false) => "invalid",
            None => "",
        };
        w.write_record([
            r.claim.name(),
            &r.instance,
            &r.verdict.to_string(),
            &r.expected,
            &r.actual,
            &witness_field(r),
            upper,
            &r.notes.join("; "),
        ])?;
    }
    w.flush()?;
    Ok(())
}
