use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use crate::Failure;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report serializes");
    out.push(b'\n');
    out
}

pub fn csv<T: Serialize>(rows: &[T]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    w.into_inner().map_err(|e| Failure::Input(e.to_string()))
}

pub fn write(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, bytes).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Rounds to 10 significant digits so printed values are stable.
pub fn round10(x: f64) -> f64 {
    format!("{x:.9e}").parse().expect("formatted float parses")
}

pub fn round10_all(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(round10).collect()
}
