use std::fmt::Write as _;
use std::path::Path;

use markovmaps::dynmaps::{diagnose, intermediate_amap, DynMapError, MapFile};
use markovmaps::markov::{
    classify_model, concurrence_trajectory, scan_divisibility, MarkovError, TimeGrid, Verdict,
};
use markovmaps::models::ModelFamily;

use crate::args::{build_config, point_config, CONCURRENCE_GRID, SCAN_GRID};
use crate::output::{concurrence_csv, format_sig, scan_csv, write_atomic};
use crate::{Cli, CliError, Command, CommandKind, Report, RunConfig, EXIT_NCP, EXIT_OK};

fn num(x: f64) -> String {
    format_sig(x, 12)
}

fn cp_word(cp: bool) -> &'static str {
    if cp {
        "CP"
    } else {
        "NCP"
    }
}

/// Writes `contents` to `--out` if set and returns `summary`, otherwise
/// returns `contents` for stdout.
fn emit(out: Option<&Path>, contents: String, summary: String) -> Result<String, CliError> {
    match out {
        Some(path) => {
            write_atomic(path, &contents)?;
            Ok(format!("{summary}\nwrote {}\n", path.display()))
        }
        None => Ok(contents),
    }
}

fn grid(cfg: &RunConfig) -> Result<TimeGrid, CliError> {
    TimeGrid::linspace(cfg.grid.t_start, cfg.grid.t_end, cfg.grid.steps)
        .map_err(|e| CliError::InvalidConfig(e.to_string()))
}

pub fn cmd_check(
    path: &Path,
    cp_tol: f64,
    n_samples: usize,
    seed: u64,
) -> Result<Report, CliError> {
    if !(cp_tol.is_finite() && cp_tol > 0.0) {
        return Err(CliError::InvalidConfig(format!(
            "--cp-tol must be positive, got {cp_tol}"
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file = MapFile::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let diag = diagnose(&file.to_amap(), cp_tol, n_samples, seed);

    let mut s = String::new();
    let _ = writeln!(s, "file: {}", path.display());
    let _ = writeln!(s, "kind: {}, d = {}", file.kind, file.d);
    let _ = writeln!(s, "tp_defect: {}", num(diag.tp_defect));
    let _ = writeln!(s, "herm_defect: {}", num(diag.herm_defect));
    let _ = writeln!(s, "min_choi_eig: {}", num(diag.min_choi_eig));
    let _ = writeln!(
        s,
        "block_pos_min: {} ({n_samples} samples, seed {seed})",
        num(diag.block_pos_min)
    );
    let _ = writeln!(s, "CP: {}", if diag.is_cp { "yes" } else { "no" });
    let _ = writeln!(s, "TP: {}", if diag.is_tp { "yes" } else { "no" });
    Ok(Report {
        stdout: s,
        exit_code: if diag.is_cp && diag.is_tp {
            EXIT_OK
        } else {
            EXIT_NCP
        },
    })
}

pub fn cmd_model(cfg: &RunConfig, t1: f64, t2: Option<f64>) -> Result<Report, CliError> {
    let a1 = cfg.model.amap(t1)?;
    let (file, what) = match t2 {
        None => (MapFile::from_amap(&a1), format!("A({t1},0)")),
        Some(t2) => {
            if !(t2 > t1) {
                return Err(CliError::InvalidConfig(format!(
                    "need --t2 > --t1, got t1 = {t1}, t2 = {t2}"
                )));
            }
            let a2 = cfg.model.amap(t2)?;
            let inter =
                intermediate_amap(&a2, &a1, cfg.singular_tol).map_err(|e| singular_at(e, t1))?;
            (
                MapFile::from_bmap(&inter.to_bmap()),
                format!("B({t2},{t1})"),
            )
        }
    };
    let summary = format!("{} map {what} for {}", file.kind, cfg.model);
    Ok(Report::ok(emit(
        cfg.out.as_deref(),
        file.to_json_string(),
        summary,
    )?))
}

fn singular_at(e: DynMapError, t1: f64) -> CliError {
    match e {
        DynMapError::SingularIntermediateMap { .. } => CliError::IntermediateUndefined { t1 },
        other => other.into(),
    }
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<Report, CliError> {
    let scan =
        scan_divisibility(&cfg.model, &grid(cfg)?, cfg.cp_tol, cfg.singular_tol).map_err(|e| {
            match e {
                MarkovError::EmptyGrid | MarkovError::InvalidGrid(_) => {
                    CliError::InvalidConfig(e.to_string())
                }
                other => other.into(),
            }
        })?;
    let ncp = scan.rows.iter().filter(|r| r.cp == Some(false)).count();
    let undefined = scan.rows.iter().filter(|r| r.cp.is_none()).count();
    let summary = format!(
        "{} pairs for {}: {ncp} NCP, {undefined} undefined, min eigenvalue {}, max semigroup defect {}",
        scan.rows.len(),
        cfg.model,
        num(scan.min_eigenvalue()),
        num(scan.max_semigroup_defect())
    );
    Ok(Report::ok(emit(
        cfg.out.as_deref(),
        scan_csv(&scan),
        summary,
    )?))
}

pub fn cmd_concurrence(cfg: &RunConfig) -> Result<Report, CliError> {
    let ModelFamily::Werner(f) = cfg.model else {
        return Err(CliError::InvalidConfig(
            "concurrence needs a werner-* model".into(),
        ));
    };
    let traj = concurrence_trajectory(&f, &grid(cfg)?)?;
    let summary = format!("{} samples for p(t) = {f}", traj.rows.len());
    Ok(Report::ok(emit(
        cfg.out.as_deref(),
        concurrence_csv(&traj),
        summary,
    )?))
}

pub fn cmd_classify(cfg: &RunConfig, t1: f64, t2: f64) -> Result<Report, CliError> {
    if !(t2 > t1 && t1 > 0.0) {
        return Err(CliError::InvalidConfig(format!(
            "need t2 > t1 > 0, got t1 = {t1}, t2 = {t2}"
        )));
    }
    let c =
        classify_model(&cfg.model, t1, t2, cfg.cp_tol, cfg.singular_tol).map_err(|e| match e {
            MarkovError::Map(DynMapError::SingularIntermediateMap { .. }) => {
                CliError::IntermediateUndefined { t1 }
            }
            other => other.into(),
        })?;
    let r = c.record;
    let mut s = String::new();
    let _ = writeln!(s, "model: {}", cfg.model);
    let _ = writeln!(s, "t1 = {}, t2 = {}", num(t1), num(t2));
    let _ = writeln!(s, "min eig B(t1,0): {}", num(c.min_eig_t1));
    let _ = writeln!(s, "min eig B(t2,0): {}", num(c.min_eig_t2));
    let _ = writeln!(s, "min eig B(t2,t1): {}", num(c.min_eig_intermediate));
    let inter = r.cp_intermediate.map_or("-", cp_word);
    let _ = writeln!(
        s,
        "B(t1,0): {}, B(t2,0): {}, B(t2,t1): {inter}",
        cp_word(r.cp_t1),
        cp_word(r.cp_t2)
    );
    let _ = writeln!(s, "verdict: {}", r.verdict);
    Ok(Report {
        stdout: s,
        exit_code: if r.verdict == Verdict::Markov {
            EXIT_OK
        } else {
            EXIT_NCP
        },
    })
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Check {
            file,
            cp_tol,
            seed,
            samples,
        } => cmd_check(file, *cp_tol, *samples, *seed),
        Command::Model {
            model,
            t1,
            t2,
            tol,
            out,
        } => {
            let cfg = point_config(CommandKind::Model, model, tol, out.clone())?;
            cmd_model(&cfg, *t1, *t2)
        }
        Command::Scan {
            model,
            grid,
            tol,
            seed,
            out,
        } => {
            let cfg = build_config(
                CommandKind::Scan,
                model,
                grid.resolve(SCAN_GRID),
                tol,
                *seed,
                out.clone(),
            )?;
            cmd_scan(&cfg)
        }
        Command::Concurrence {
            model,
            grid,
            seed,
            out,
        } => {
            let cfg = build_config(
                CommandKind::Concurrence,
                model,
                grid.resolve(CONCURRENCE_GRID),
                &Default::default(),
                *seed,
                out.clone(),
            )?;
            cmd_concurrence(&cfg)
        }
        Command::Classify { model, t1, t2, tol } => {
            let cfg = point_config(CommandKind::Classify, model, tol, None)?;
            cmd_classify(&cfg, *t1, *t2)
        }
    }
}
