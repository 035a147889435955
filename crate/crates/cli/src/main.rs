use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use wedderburn_core::cohomology::h2_structure;
use wedderburn_core::decomposition::{table_report, wedderburn_seeded, TableKind};
use wedderburn_core::ff::DEFAULT_SEED;
use wedderburn_core::oracle::{build_algebra, oracle_decomposition_seeded, ExplicitAlgebra};
use wedderburn_core::orbits::analyze;
use wedderburn_core::report::{render_blocks, DecompositionReport, H2Report, OrbitAnalysisReport};
use wedderburn_core::scan::{run_scan, ScanConfig};
use wedderburn_core::{validate_spec, CocycleClass, Execution, SimpleBlock};

/// Wedderburn decompositions of twisted group algebras F_ell^alpha (C_p x| C_m).
#[derive(Parser, Debug)]
#[command(name = "wedderburn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form decomposition, optionally checked against the oracle.
    Decompose {
        #[command(flatten)]
        params: AlgebraParams,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Frobenius and C_m orbit data behind the decomposition.
    Orbits {
        #[command(flatten)]
        group: GroupParams,
        #[arg(long)]
        ell: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The classes of H^2(C_m, F_ell^x).
    H2 {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs the oracle and compares it with the closed form.
    Verify {
        #[command(flatten)]
        params: AlgebraParams,
        #[command(flatten)]
        common: Common,
    },
    /// Regenerates the orbit-shape tables for m = 2, 3, 4 or all m.
    Tables {
        /// 2, 3, 4 or "general".
        #[arg(long, default_value = "general")]
        m: String,
        #[arg(long, default_value_t = 100)]
        max_p: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7,11,13")]
        ell_list: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Checks every tuple up to the bounds; one JSON line per tuple with --format json.
    Scan {
        #[arg(long, default_value_t = 31)]
        max_p: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7,13")]
        ell_list: Vec<u64>,
        #[arg(long, default_value_t = 400)]
        oracle_cap: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run on the calling thread only.
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct GroupParams {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    r: u64,
}

#[derive(Args, Debug)]
struct AlgebraParams {
    #[command(flatten)]
    group: GroupParams,
    #[arg(long)]
    ell: u64,
    /// Cocycle parameter, reduced mod ell.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    lambda: i64,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized polynomial splitter.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Corrupt one entry of the oracle's multiplication table.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Raised for invalid parameters; everything else that fails is a check failure.
#[derive(Debug)]
struct Usage(anyhow::Error);

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn usage<E: Into<anyhow::Error>>(e: E) -> Usage {
    Usage(e.into())
}

fn print(s: &str) -> Result<(), Usage> {
    io::stdout().write_all(s.as_bytes()).context("writing to stdout").map_err(usage)
}

fn run(cli: Cli) -> Result<Outcome, Usage> {
    match cli.command {
        Command::Decompose { params, verify, common } => decompose(&params, verify, &common),
        Command::Verify { params, common } => decompose(&params, true, &common),
        Command::Orbits { group, ell, format } => {
            let spec = validate_spec(group.p, group.m, group.r).map_err(usage)?;
            spec.check_coefficients(ell).map_err(usage)?;
            let analysis = analyze(&spec, ell).map_err(usage)?;
            let rep = OrbitAnalysisReport::new(&spec, ell, &analysis);
            match format {
                Format::Text => print(&rep.render_text())?,
                Format::Json => print(&format!("{}\n", serde_json::to_string(&rep).map_err(usage)?))?,
            }
            Ok(Outcome::Ok)
        }
        Command::H2 { ell, m, format } => {
            let rep = H2Report::new(&h2_structure(ell, m).map_err(usage)?);
            match format {
                Format::Text => print(&rep.render_text())?,
                Format::Json => print(&format!("{}\n", serde_json::to_string(&rep).map_err(usage)?))?,
            }
            Ok(Outcome::Ok)
        }
        Command::Tables { m, max_p, ell_list, format } => tables(&m, max_p, &ell_list, format),
        Command::Scan { max_p, ell_list, oracle_cap, seed, sequential, format } => {
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let cfg = ScanConfig { max_p, ells: ell_list, oracle_cap, seed, exec };
            let report = run_scan(&cfg).map_err(usage)?;
            let mut out = String::new();
            for rec in &report.records {
                match format {
                    Format::Json => {
                        out.push_str(&serde_json::to_string(rec).map_err(usage)?);
                        out.push('\n');
                    }
                    Format::Text if !rec.ok => {
                        out.push_str(&format!(
                            "FAIL p={} m={} r={} ell={} class={}: {}\n",
                            rec.p,
                            rec.m,
                            rec.r,
                            rec.ell,
                            rec.class_index,
                            rec.violations.join("; ")
                        ));
                    }
                    Format::Text => {}
                }
            }
            for g in report.groups.iter().filter(|g| !g.ok()) {
                let line = format!("FAIL p={} m={} r={} ell={}: matrix blocks depend on the class\n", g.p, g.m, g.r, g.ell);
                match format {
                    Format::Json => eprint!("{line}"),
                    Format::Text => out.push_str(&line),
                }
            }
            print(&out)?;
            match format {
                Format::Json => eprintln!("{}", report.summary()),
                Format::Text => print(&format!("{}\n", report.summary()))?,
            }
            Ok(if report.ok() { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

fn perturb(alg: &mut ExplicitAlgebra) {
    let (a, b) = (alg.generators()[0], alg.generators()[1]);
    if alg.field().characteristic() == 2 {
        // F_2 has no second unit, so redirect the product instead.
        let (_, z) = alg.product(b, a);
        alg.perturb_index(a, b, z);
    } else {
        let (c, _) = alg.product(a, b);
        alg.perturb_scalar(a, b, alg.field().add(c, 1));
    }
}

fn decompose(params: &AlgebraParams, verify: bool, common: &Common) -> Result<Outcome, Usage> {
    let g = &params.group;
    let spec = validate_spec(g.p, g.m, g.r).map_err(usage)?;
    spec.check_coefficients(params.ell).map_err(usage)?;
    let cls = CocycleClass::from_integer(params.ell, g.m, params.lambda).map_err(usage)?;
    let dec = wedderburn_seeded(&spec, &cls, common.seed).map_err(usage)?;

    let mut oracle_text = None;
    let verified = if verify {
        let mut alg = build_algebra(&spec, &cls).map_err(usage)?;
        if common.inject_fault {
            perturb(&mut alg);
        }
        let (matches, text) = match oracle_decomposition_seeded(&alg, common.seed, Execution::Parallel) {
            Ok(o) => (o.blocks == dec.all_blocks(), render_sorted(params.ell, &o.blocks)),
            Err(e) => (false, format!("failed: {e}")),
        };
        oracle_text = Some(text);
        Some(matches)
    } else {
        None
    };

    let rep = DecompositionReport::new(&dec, &cls, verified);
    match common.format {
        Format::Json => print(&format!("{}\n", rep.to_json()))?,
        Format::Text => {
            let mut text = rep.render_text();
            if let Some(o) = oracle_text {
                text.push_str(&format!("oracle blocks: {o}\n"));
            }
            print(&text)?;
        }
    }
    Ok(if verified == Some(false) { Outcome::Failed } else { Outcome::Ok })
}

fn render_sorted(ell: u64, blocks: &[SimpleBlock]) -> String {
    let (mut commutative, matrix): (Vec<SimpleBlock>, Vec<SimpleBlock>) = blocks.iter().partition(|b| b.n == 1);
    commutative.extend(matrix);
    render_blocks(ell, &commutative)
}

fn tables(m: &str, max_p: u64, ells: &[u64], format: Format) -> Result<Outcome, Usage> {
    let kind = match m {
        "general" => TableKind::General,
        other => TableKind::Fixed(other.parse().with_context(|| format!("--m must be an integer or \"general\", got {other:?}")).map_err(usage)?),
    };
    let report = table_report(kind, ells, 3..=max_p, Execution::Parallel).map_err(usage)?;
    match format {
        Format::Json => print(&format!("{}\n", serde_json::to_string(&report).map_err(usage)?))?,
        Format::Text => {
            let mut out = format!("{} sweep, p <= {max_p}, ell in {ells:?}: {} tuples\n", kind.label(), report.tuples);
            for row in &report.rows {
                let (p, r, ell) = row.witness;
                out.push_str(&format!(
                    "  m={} t={} h={} s={} r_mat={} n={}  f in {:?}  ({} occurrences, e.g. p={p} r={r} ell={ell})  {}\n",
                    row.m,
                    row.t,
                    row.h,
                    row.s,
                    row.r_mat,
                    row.n,
                    row.f_values,
                    row.occurrences,
                    row.reference.map_or("NOT IN REFERENCE TABLE".to_string(), |l| format!("row: {l}")),
                ));
            }
            out.push_str(if report.all_contained() { "all rows contained\n" } else { "some rows not contained\n" });
            print(&out)?;
        }
    }
    Ok(if report.all_contained() { Outcome::Ok } else { Outcome::Failed })
}
