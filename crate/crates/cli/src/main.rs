//! `flagcurv` — flag curvatures of invariant Randers metrics from
//! Lie-algebra data.
//!
//! Exit codes: 0 success, 2 invalid input, 3 degenerate flag,
//! 4 hypothesis violation or unsupported configuration.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nalgebra::DVector;

use flagcurv::lie::unit;
use flagcurv::randers::{self, CurvatureReport, Flag, RandersSpec, DENGHOU_LABEL};
use flagcurv::spaces::{self, Builtin};
use flagcurv::{DriftVector, Error, ReductiveSpace};
use flagcurv_cli::algfile::AlgebraFile;
use flagcurv_cli::render::{render, Val};

#[derive(Parser)]
#[command(name = "flagcurv", version, about = "Flag curvature of invariant Randers metrics on homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// Closed form pinned against the Koszul oracle (default).
    OracleConsistent,
    /// The published expression, verbatim, plus the discrepancy fields.
    PaperLiteral,
    /// Every variant side by side.
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an algebra file: indices, antisymmetry, Jacobi, splitting, gram
    Validate {
        path: PathBuf,
    },
    /// Flag curvature of one flag, every applicable formula variant
    FlagCurvature {
        /// Algebra file (alternative to --builtin)
        path: Option<PathBuf>,
        /// Built-in space: heisenberg3 | su2 | su2_x_r:<t> | abelian:<n> | toy_gh4
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        /// Flagpole, comma-separated m-coordinates
        #[arg(long)]
        y: String,
        /// Transverse edge, comma-separated m-coordinates
        #[arg(long)]
        u: String,
        #[arg(long, value_enum, default_value_t = VariantArg::OracleConsistent)]
        variant: VariantArg,
        /// Evaluate the closed form even when its hypotheses fail
        #[arg(long)]
        force: bool,
        /// Human-readable output instead of the report document
        #[arg(long)]
        pretty: bool,
    },
    /// Refuted formula vs the Koszul oracle over basis and random flags
    Counterexample {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        /// Number of random flags on top of all basis pairs
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pretty: bool,
    },
    /// Batch evaluation over a flag grid, one row per flag
    Sweep {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        /// "basis" (all basis pairs) or "random:<count>:<seed>"
        #[arg(long, default_value = "basis")]
        grid: String,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Write a built-in space as an algebra file
    Export {
        #[arg(long)]
        builtin: String,
        /// Output path; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::DegenerateFlag(_) | Error::UndefinedDirection(_) => 3,
        Error::HypothesisViolation(_) | Error::Unsupported(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Error> {
    match cmd {
        Cmd::Validate { path } => cmd_validate(&path),
        Cmd::FlagCurvature {
            path,
            builtin,
            y,
            u,
            variant,
            force,
            pretty,
        } => cmd_flag_curvature(path.as_deref(), builtin.as_deref(), &y, &u, variant, force, pretty),
        Cmd::Counterexample {
            path,
            builtin,
            samples,
            seed,
            pretty,
        } => cmd_counterexample(path.as_deref(), builtin.as_deref(), samples, seed, pretty),
        Cmd::Sweep {
            path,
            builtin,
            grid,
            force,
            pretty,
        } => cmd_sweep(path.as_deref(), builtin.as_deref(), &grid, force, pretty),
        Cmd::Export { builtin, output } => cmd_export(&builtin, output.as_deref()),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_source(
    path: Option<&Path>,
    builtin: Option<&str>,
) -> Result<(ReductiveSpace, DriftVector), Error> {
    match (path, builtin) {
        (Some(p), None) => AlgebraFile::parse(&read_file(p)?)?.to_space(),
        (None, Some(b)) => Builtin::parse(b)?.build(),
        _ => Err(Error::Input(
            "give exactly one of an algebra file or --builtin".into(),
        )),
    }
}

fn parse_coords(s: &str, expected: usize, what: &str) -> Result<DVector<f64>, Error> {
    let parts: Result<Vec<f64>, _> = s.split(',').map(|p| p.trim().parse::<f64>()).collect();
    let coords = parts.map_err(|_| Error::Input(format!("cannot parse {what} coordinates '{s}'")))?;
    if coords.len() != expected {
        return Err(Error::Input(format!(
            "{what} needs {expected} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(DVector::from_vec(coords))
}

fn cmd_validate(path: &Path) -> Result<(), Error> {
    let mut diagnostics: Vec<String> = Vec::new();
    let outcome: Result<(), Error> = (|| {
        let file = AlgebraFile::parse(&read_file(path)?)?;
        let algebra = file.to_algebra()?;
        for v in algebra.validate().violations {
            diagnostics.push(match v {
                flagcurv::lie::Violation::Antisymmetry { i, j, k, residual } => format!(
                    "antisymmetry violation at ({},{},{}): residual {residual:e}",
                    i + 1,
                    j + 1,
                    k + 1
                ),
                flagcurv::lie::Violation::Jacobi {
                    i,
                    j,
                    k,
                    component,
                    residual,
                } => format!(
                    "Jacobi violation on ({},{},{}) component {}: residual {residual:e}",
                    i + 1,
                    j + 1,
                    k + 1,
                    component + 1
                ),
            });
        }
        let (rs, x) = file.to_space()?;
        let adm = rs.check_drift_admissible(&x)?;
        if !adm.norm_bound {
            diagnostics.push(format!("drift norm g(X,X) = {} is not < 1", adm.x_norm_sq));
        }
        if !adm.ad_invariant {
            diagnostics.push(format!(
                "drift is not ad(h)-invariant (max |[h,X]| = {:e})",
                adm.max_h_bracket
            ));
        }
        Ok(())
    })();
    let error = outcome.as_ref().err().map(|e| e.to_string());
    let valid = error.is_none() && diagnostics.is_empty();
    let doc = Val::Obj(vec![
        ("command", Val::Str("validate".into())),
        ("file", Val::Str(path.display().to_string())),
        ("valid", Val::Bool(valid)),
        (
            "diagnostics",
            Val::List(diagnostics.iter().cloned().map(Val::Str).collect()),
        ),
        (
            "error",
            error.clone().map(Val::Str).unwrap_or(Val::Null),
        ),
    ]);
    print!("{}", render(&doc));
    if valid {
        Ok(())
    } else {
        Err(Error::Input(
            error.unwrap_or_else(|| format!("{} structural violations", diagnostics.len())),
        ))
    }
}

fn report_fields(rep: &CurvatureReport, variant: VariantArg) -> Vec<(&'static str, Val)> {
    let show_literal = matches!(variant, VariantArg::PaperLiteral | VariantArg::All);
    vec![
        ("norm_y", Val::Num(rep.norm_y)),
        (
            "g_y",
            Val::Obj(vec![
                ("yy", Val::Num(rep.g_y_yy)),
                ("uu", Val::Num(rep.g_y_uu)),
                ("yu", Val::Num(rep.g_y_yu)),
            ]),
        ),
        (
            "hypotheses",
            Val::Obj(vec![
                ("naturally_reductive", Val::Bool(rep.naturally_reductive)),
                ("drift_parallel", Val::Bool(rep.drift_parallel)),
            ]),
        ),
        (
            "curvatures",
            Val::Obj(vec![
                (
                    "thm42_oracle_consistent",
                    Val::opt_num(rep.k_thm42_oracle_consistent),
                ),
                (
                    "thm42_paper_literal",
                    if show_literal {
                        Val::opt_num(rep.k_thm42_paper_literal)
                    } else {
                        Val::Null
                    },
                ),
                ("assembled_oracle", Val::opt_num(rep.k_assembled_oracle)),
                ("thm22_denghou", Val::Num(rep.k_thm22_denghou)),
                ("thm22_denghou_label", Val::Str(DENGHOU_LABEL.into())),
                ("sectional_g", Val::opt_num(rep.sectional_g)),
            ]),
        ),
        (
            "diagnostics",
            Val::Obj(vec![
                (
                    "thm42_variants_abs",
                    if show_literal {
                        Val::opt_num(rep.diff_thm42_variants_abs)
                    } else {
                        Val::Null
                    },
                ),
                (
                    "thm42_variants_rel",
                    if show_literal {
                        Val::opt_num(rep.diff_thm42_variants_rel)
                    } else {
                        Val::Null
                    },
                ),
                (
                    "thm42_vs_assembled_abs",
                    Val::opt_num(rep.diff_thm42_vs_assembled_abs),
                ),
                (
                    "denghou_vs_sectional_abs",
                    Val::opt_num(rep.diff_denghou_vs_sectional_abs),
                ),
                ("fd_step", Val::opt_num(rep.fd_step)),
                ("fd_error_estimate", Val::opt_num(rep.fd_error_estimate)),
            ]),
        ),
    ]
}

fn pretty_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:+.12e}")).unwrap_or_else(|| "-".into())
}

fn cmd_flag_curvature(
    path: Option<&Path>,
    builtin: Option<&str>,
    y: &str,
    u: &str,
    variant: VariantArg,
    force: bool,
    pretty: bool,
) -> Result<(), Error> {
    let (rs, x) = load_source(path, builtin)?;
    let spec = RandersSpec::new(rs, x)?;
    let md = spec.space().m_dim();
    let flag = Flag::new(
        parse_coords(y, md, "flagpole")?,
        parse_coords(u, md, "transverse edge")?,
    );
    if !(spec.is_naturally_reductive() && spec.is_drift_parallel()) && !force {
        let mut missing = Vec::new();
        if !spec.is_naturally_reductive() {
            missing.push("space is not naturally reductive");
        }
        if !spec.is_drift_parallel() {
            missing.push("drift is not parallel");
        }
        return Err(Error::HypothesisViolation(format!(
            "{}; rerun with --force to evaluate anyway",
            missing.join("; ")
        )));
    }
    let rep = randers::curvature_report(&spec, &flag, force)?;
    if pretty {
        println!("algebra              : {}", spec.space().algebra().name());
        println!("flag Y               : {:?}", rep.flag_y);
        println!("flag U               : {:?}", rep.flag_u);
        println!("F(Y)                 : {:+.12e}", rep.norm_y);
        println!(
            "naturally reductive  : {} / drift parallel: {}",
            rep.naturally_reductive, rep.drift_parallel
        );
        println!(
            "K thm42 (oracle)     : {}",
            pretty_opt(rep.k_thm42_oracle_consistent)
        );
        if matches!(variant, VariantArg::PaperLiteral | VariantArg::All) {
            println!(
                "K thm42 (literal)    : {}",
                pretty_opt(rep.k_thm42_paper_literal)
            );
        }
        println!("K assembled          : {}", pretty_opt(rep.k_assembled_oracle));
        println!(
            "K thm22 (denghou)    : {:+.12e}   [{}]",
            rep.k_thm22_denghou, DENGHOU_LABEL
        );
        println!("K sectional (g)      : {}", pretty_opt(rep.sectional_g));
    } else {
        let mut fields = vec![
            ("command", Val::Str("flag-curvature".into())),
            ("algebra", Val::Str(spec.space().algebra().name().into())),
            ("h_dim", Val::Int(spec.space().h_dim() as i64)),
            ("m_dim", Val::Int(md as i64)),
            ("forced", Val::Bool(force)),
            (
                "flag",
                Val::Obj(vec![
                    ("y", Val::num_list(&rep.flag_y)),
                    ("u", Val::num_list(&rep.flag_u)),
                ]),
            ),
        ];
        fields.extend(report_fields(&rep, variant));
        print!("{}", render(&Val::Obj(fields)));
    }
    Ok(())
}

fn cmd_counterexample(
    path: Option<&Path>,
    builtin: Option<&str>,
    samples: usize,
    seed: u64,
    pretty: bool,
) -> Result<(), Error> {
    let (rs, _) = load_source(path, builtin)?;
    let rep = spaces::run_counterexample(&rs, samples, seed)?;
    if pretty {
        println!("algebra : {}", rep.algebra);
        println!("seed    : {}", rep.seed);
        println!(
            "verdict : {}",
            if rep.verdict {
                "MISMATCH DEMONSTRATED (refuted formula is zero against nonzero curvature)"
            } else {
                "no mismatch (flat space)"
            }
        );
        println!(
            "sign mix: {} positive / {} negative / {} zero",
            rep.positive, rep.negative, rep.zero
        );
        println!("{:<12} {:>18} {:>18}", "flag", "K_thm22", "K_oracle");
        for row in &rep.rows {
            println!(
                "{:<12} {:>18.10} {:>18.10}",
                row.label, row.k_thm22, row.k_oracle
            );
        }
    } else {
        let rows: Vec<Val> = rep
            .rows
            .iter()
            .map(|r| {
                Val::Obj(vec![
                    ("flag", Val::Str(r.label.clone())),
                    ("y", Val::num_list(r.y.as_slice())),
                    ("u", Val::num_list(r.u.as_slice())),
                    ("k_thm22", Val::Num(r.k_thm22)),
                    ("k_oracle", Val::Num(r.k_oracle)),
                ])
            })
            .collect();
        let doc = Val::Obj(vec![
            ("command", Val::Str("counterexample".into())),
            ("algebra", Val::Str(rep.algebra.clone())),
            ("seed", Val::Int(rep.seed as i64)),
            ("samples", Val::Int(samples as i64)),
            ("verdict", Val::Bool(rep.verdict)),
            (
                "sign_mix",
                Val::Obj(vec![
                    ("positive", Val::Int(rep.positive as i64)),
                    ("negative", Val::Int(rep.negative as i64)),
                    ("zero", Val::Int(rep.zero as i64)),
                ]),
            ),
            ("thm22_label", Val::Str(DENGHOU_LABEL.into())),
            ("rows", Val::List(rows)),
        ]);
        print!("{}", render(&doc));
    }
    Ok(())
}

fn parse_grid(grid: &str, rs: &ReductiveSpace) -> Result<Vec<(String, Flag)>, Error> {
    let md = rs.m_dim();
    if grid == "basis" {
        let mut flags = Vec::new();
        for i in 0..md {
            for j in (i + 1)..md {
                flags.push((
                    format!("basis:{},{}", i + 1, j + 1),
                    Flag::new(unit(md, i), unit(md, j)),
                ));
            }
        }
        return Ok(flags);
    }
    if let Some(rest) = grid.strip_prefix("random:") {
        let mut parts = rest.split(':');
        let count: usize = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| Error::Input(format!("bad grid spec '{grid}'")))?;
        let seed: u64 = match parts.next() {
            Some(s) => s
                .parse()
                .map_err(|_| Error::Input(format!("bad grid seed in '{grid}'")))?,
            None => 0,
        };
        return Ok(spaces::sample_flags(rs, count, seed)
            .into_iter()
            .enumerate()
            .map(|(i, f)| (format!("random:{i}"), f))
            .collect());
    }
    Err(Error::Input(format!(
        "grid must be 'basis' or 'random:<count>:<seed>', got '{grid}'"
    )))
}

fn cmd_sweep(
    path: Option<&Path>,
    builtin: Option<&str>,
    grid: &str,
    force: bool,
    pretty: bool,
) -> Result<(), Error> {
    let (rs, x) = load_source(path, builtin)?;
    let spec = RandersSpec::new(rs, x)?;
    let flags = parse_grid(grid, spec.space())?;
    let mut reports = Vec::with_capacity(flags.len());
    for (label, flag) in &flags {
        reports.push((label.clone(), randers::curvature_report(&spec, flag, force)?));
    }
    if pretty {
        println!("algebra: {} (grid {grid})", spec.space().algebra().name());
        println!(
            "{:<12} {:>16} {:>16} {:>16} {:>16}",
            "flag", "thm42_oracle", "assembled", "thm22_denghou", "sectional_g"
        );
        for (label, rep) in &reports {
            let s = |v: Option<f64>| v.map(|x| format!("{x:+.8}")).unwrap_or_else(|| "-".into());
            println!(
                "{:<12} {:>16} {:>16} {:>16.8} {:>16}",
                label,
                s(rep.k_thm42_oracle_consistent),
                s(rep.k_assembled_oracle),
                rep.k_thm22_denghou,
                s(rep.sectional_g)
            );
        }
    } else {
        let rows: Vec<Val> = reports
            .iter()
            .map(|(label, rep)| {
                let mut fields = vec![
                    ("flag", Val::Str(label.clone())),
                    ("y", Val::num_list(&rep.flag_y)),
                    ("u", Val::num_list(&rep.flag_u)),
                ];
                fields.extend(report_fields(rep, VariantArg::All));
                Val::Obj(fields)
            })
            .collect();
        let doc = Val::Obj(vec![
            ("command", Val::Str("sweep".into())),
            ("algebra", Val::Str(spec.space().algebra().name().into())),
            ("grid", Val::Str(grid.into())),
            ("forced", Val::Bool(force)),
            ("rows", Val::List(rows)),
        ]);
        print!("{}", render(&doc));
    }
    Ok(())
}

fn cmd_export(builtin: &str, output: Option<&Path>) -> Result<(), Error> {
    let (rs, x) = Builtin::parse(builtin)?.build()?;
    let json = AlgebraFile::from_space(&rs, &x).to_json();
    match output {
        Some(path) => std::fs::write(path, json)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}
