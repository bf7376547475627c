use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use fibideal::{GaussInt, QuadInt};
use serde::{Deserialize, Serialize};

/// One line of `lambda` / `cn` JSON output. All integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRow {
    pub n: u64,
    pub lambda: String,
    /// Coefficients of `q^0..q^{2n}`.
    pub cn_coeffs: Vec<String>,
    /// Per-method values, present with `--method all`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_by_method: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval_minus_one: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval_i: Option<GaussInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval_alpha: Option<QuadInt>,
}

pub fn open_sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json_lines<T: Serialize>(sink: &mut dyn Write, rows: &[T]) -> Result<()> {
    for row in rows {
        serde_json::to_writer(&mut *sink, row)?;
        sink.write_all(b"\n")?;
    }
    sink.flush()?;
    Ok(())
}

pub fn write_csv(sink: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
