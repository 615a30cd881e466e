mod report;
mod run;

use clap::{Args, Parser, Subcommand};
use run::NilpotentConfig;
use std::path::PathBuf;
use std::process::ExitCode;

/// Braided centers of module algebras over quasi-triangular Hopf algebras,
/// computed exactly over cyclotomic fields.
#[derive(Parser)]
#[command(name = "bcenter", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel kernels (1 runs sequentially).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Comma-separated check groups to run (default: all of the scenario's).
    #[arg(long, global = true, value_delimiter = ',')]
    checks: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Nilpotent line over k Z_n acting on k[u]: B-center, oracle, YD
    /// structure, transport to the smash product and comparison across γ.
    Uqsl2 {
        #[command(flatten)]
        p: Nilpotent,
        /// Print the data of this configuration in the `custom` input format.
        #[arg(long)]
        emit_input: bool,
    },
    /// Sweedler's Hopf algebra with R_ξ acting on k[u].
    Sweedler {
        #[arg(long, default_value = "1")]
        xi: String,
        #[arg(long, default_value = "1")]
        gamma: String,
        #[arg(long, default_value_t = 8)]
        degree: u32,
        #[arg(long)]
        emit_input: bool,
    },
    /// Centralizer of the derivations in a truncated Weyl algebra.
    Weyl {
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long, default_value_t = 8)]
        degree: u32,
    },
    /// Drinfeld double of the nilpotent line, its identification with
    /// u_q(sl2), and the induced action on z.
    Double {
        #[command(flatten)]
        p: Nilpotent,
        /// Pairing value ⟨x*, x⟩ (default 1/(q - q^-1)).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Associativity, quasi-triangularity, Hopf, YD and hexagon suites.
    Axioms {
        #[command(flatten)]
        p: Nilpotent,
        /// ξ for the Sweedler R-matrix.
        #[arg(long, default_value = "1")]
        xi: String,
    },
    /// B-center of user-supplied (K, R, H, A) data in JSON.
    Custom {
        /// Input file (schema bcenter.input/1).
        input: PathBuf,
    },
}

#[derive(Args)]
struct Nilpotent {
    /// Order of q².
    #[arg(long, default_value_t = 3)]
    n: u32,
    /// q = ζ_m^e, given as m:e.
    #[arg(long, value_parser = parse_q)]
    q: Option<(u32, u32)>,
    #[arg(long, default_value = "1")]
    gamma: String,
    /// Truncation degree of k[u] (default 2n + 2).
    #[arg(long)]
    degree: Option<u32>,
}

impl Nilpotent {
    fn config(&self, lambda: Option<String>) -> NilpotentConfig {
        NilpotentConfig { n: self.n, q: self.q, gamma: self.gamma.clone(), degree: self.degree, lambda }
    }
}

fn parse_q(s: &str) -> Result<(u32, u32), String> {
    let (m, e) = s.split_once(':').ok_or_else(|| format!("expected m:e, got '{s}'"))?;
    let m = m.trim().parse().map_err(|_| format!("bad m in '{s}'"))?;
    let e = e.trim().parse().map_err(|_| format!("bad e in '{s}'"))?;
    Ok((m, e))
}

fn emit(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

fn execute(cli: &Cli) -> bcenter::Result<(String, bool)> {
    use run::*;
    let report = match &cli.cmd {
        Cmd::Uqsl2 { p, emit_input } => {
            if *emit_input {
                let parts = nilpotent_parts(&p.config(None))?;
                let input = bcenter::custom::CustomInput::export(&parts.setup.a, Some(parts.setup.qp.root))?;
                return Ok((emit(&serde_json::to_value(&input)?), true));
            }
            uqsl2_scenario(&p.config(None), &Selector::new(&cli.checks, NILPOTENT_GROUPS)?)?
        }
        Cmd::Sweedler { xi, gamma, degree, emit_input } => {
            if *emit_input {
                let f = bcenter::scalars::field_new(1)?;
                let fmt = bcenter::scalars::ScalarFormat::plain();
                let s = bcenter::scenarios::SweedlerSetup::new(&fmt.parse(xi, f)?, &fmt.parse(gamma, f)?, *degree)?;
                let input = bcenter::custom::CustomInput::export(&s.a, None)?;
                return Ok((emit(&serde_json::to_value(&input)?), true));
            }
            sweedler_scenario(xi, gamma, *degree, &Selector::new(&cli.checks, SWEEDLER_GROUPS)?)?
        }
        Cmd::Weyl { vars, degree } => weyl_scenario(*vars, *degree, &Selector::new(&cli.checks, WEYL_GROUPS)?)?,
        Cmd::Double { p, lambda } => {
            double_scenario(&p.config(lambda.clone()), &Selector::new(&cli.checks, DOUBLE_GROUPS)?)?
        }
        Cmd::Axioms { p, xi } => axioms_scenario(&p.config(None), xi, &Selector::new(&cli.checks, AXIOM_GROUPS)?)?,
        Cmd::Custom { input } => {
            let sel = Selector::new(&cli.checks, CUSTOM_GROUPS)?;
            let text = std::fs::read_to_string(input)?;
            let (inp, built) = custom_setup(&text)?;
            custom_scenario(&inp, &built.a, &built.format, &sel)?
        }
    };
    let out = if cli.json { emit(&report.to_json()) } else { report.to_text() };
    Ok((out, report.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j <= 1 {
            bcenter::par::set_sequential(true);
        } else {
            bcenter::par::set_threads(j);
        }
    }
    match execute(&cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match &e {
                bcenter::Error::AxiomFailure { check, witness } => {
                    eprintln!("abort: axiom check '{check}' failed");
                    eprintln!("witness: {witness}");
                }
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(2)
        }
    }
}
