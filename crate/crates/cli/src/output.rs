use std::io::Write;
use std::path::Path;

use markovmaps::markov::{ConcurrenceTrajectory, ScanResult};
use tempfile::NamedTempFile;

use crate::CliError;

/// Significant digits used for every floating-point value in CSV output.
pub const CSV_DIGITS: usize = 12;

/// C `%.*g`-style formatting: shortest of fixed and scientific notation
/// with `digits` significant digits and trailing zeros removed.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn g(x: f64) -> String {
    format_sig(x, CSV_DIGITS)
}

pub fn scan_csv(scan: &ScanResult) -> String {
    let mut out = String::from("t1,t2,min_choi_eig,cp,semigroup_defect\n");
    for r in &scan.rows {
        let cp = match r.cp {
            Some(true) => "true",
            Some(false) => "false",
            None => "",
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            g(r.t1),
            g(r.t2),
            g(r.min_choi_eig),
            cp,
            g(r.semigroup_defect)
        ));
    }
    out
}

pub fn concurrence_csv(traj: &ConcurrenceTrajectory) -> String {
    let mut out = String::from("t,p,concurrence\n");
    for r in &traj.rows {
        out.push_str(&format!("{},{},{}\n", g(r.t), g(r.p), g(r.concurrence)));
    }
    out
}

/// Writes `contents` to a temporary file beside `path`, then renames it into
/// place so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}
