//! The `saito` command line.
//!
//! Exit codes: 0 when everything was computed and every requested check
//! passed, 1 when an input fails a hypothesis, 2 when an identity fails or
//! a check is inconclusive, 3 for input errors. Results go to the output
//! stream and diagnostics to the error stream.

use crate::invariants::{verify_cor_5_4, CaseContext, InvariantError, Ratio, Rf};
use crate::io::{build_report, builtin, families, parse_case, CaseFile, Identity, Invariant, Outcome, ReportDocument};
use crate::order::MonomialOrder;
use crate::sb::Dimension;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Environment variable overriding the cap of the `r_f` search.
pub const RF_CAP_VAR: &str = "SAITO_RF_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "saito",
    version,
    about = "Bruce-Roberts numbers, Tjurina numbers and GSV indices of 1-forms along hypersurface germs",
    after_help = "A CASE is a case file or the name of a built-in case (example-3-2, pq-family, m-family).\n\
                  Built-in parameters are given with --param, e.g. --param p=3 --param q=4."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute invariants of a case.
    Compute {
        #[command(flatten)]
        case: CaseArgs,
        /// Invariant to compute; repeatable. Defaults to the case's own
        /// selection, or all of them.
        #[arg(long = "invariant", value_name = "NAME")]
        invariants: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check identities between invariants.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value = "all")]
        identity: IdentityArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate a family of cases.
    Table {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        m_min: u32,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Work with case files.
    Case {
        #[command(subcommand)]
        action: CaseAction,
    },
}

#[derive(Subcommand, Debug)]
enum CaseAction {
    /// Print a built-in case as case-file text.
    Emit {
        name: String,
        /// Parameters as key=value.
        params: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct CaseArgs {
    /// Case file path or built-in case name.
    case: String,
    /// Parameter of a built-in case, key=value; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[arg(long, value_parser = parse_order)]
    order: Option<MonomialOrder>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Print JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum IdentityArg {
    TheoremA,
    #[value(name = "prop-5-1")]
    Prop51,
    Equality,
    #[value(name = "cor-5-4")]
    Cor54,
    All,
}

impl IdentityArg {
    fn identities(self) -> Vec<Identity> {
        match self {
            IdentityArg::TheoremA => vec![Identity::TheoremA],
            IdentityArg::Prop51 => vec![Identity::Prop51],
            IdentityArg::Equality => vec![Identity::Equality],
            IdentityArg::Cor54 => vec![Identity::Cor54],
            IdentityArg::All => Identity::ALL.to_vec(),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    MFamily,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse().map_err(|_| format!("unknown order `{s}`; expected negdegrevlex or neglex"))
}

/// Runs the command line with `SAITO_RF_CAP` read from the environment.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cap = std::env::var(RF_CAP_VAR).ok();
    run_with(args, cap.as_deref(), out, err)
}

/// Runs the command line with an explicit `SAITO_RF_CAP` value.
pub fn run_with<I, S>(args: I, rf_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let cap = match rf_cap.map(str::trim).filter(|s| !s.is_empty()) {
        None => None,
        Some(s) => match s.parse::<u32>() {
            Ok(c) if c >= 1 => Some(c),
            _ => {
                let _ = writeln!(err, "error: {RF_CAP_VAR} must be a positive integer, found `{s}`");
                return EXIT_INPUT;
            }
        },
    };
    match cli.command {
        Command::Compute {
            case,
            invariants,
            output,
        } => {
            let mut wanted = Vec::new();
            for name in &invariants {
                match name.parse::<Invariant>() {
                    Ok(i) => wanted.push(i),
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return EXIT_INPUT;
                    }
                }
            }
            evaluate(&case, Request::Invariants(wanted), cap, output.json, out, err)
        }
        Command::Verify { case, identity, output } => {
            evaluate(&case, Request::Identities(identity.identities()), cap, output.json, out, err)
        }
        Command::Table {
            family: FamilyArg::MFamily,
            m_min,
            m_max,
            json,
        } => table(m_min, m_max, cap, json, out, err),
        Command::Case {
            action: CaseAction::Emit { name, params },
        } => match builtin(&name, &params) {
            Ok(text) => {
                let _ = write!(out, "{text}");
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        },
    }
}

enum Request {
    Invariants(Vec<Invariant>),
    Identities(Vec<Identity>),
}

fn load(case: &CaseArgs) -> Result<(String, CaseFile), String> {
    let path = std::path::Path::new(&case.case);
    let text = if families::BUILTINS.contains(&case.case.as_str()) && !path.exists() {
        builtin(&case.case, &case.params).map_err(|e| e.to_string())?
    } else {
        if !case.params.is_empty() {
            return Err("--param only applies to built-in cases".into());
        }
        std::fs::read_to_string(path).map_err(|e| format!("cannot read `{}`: {e}", case.case))?
    };
    let file = parse_case(&text).map_err(|e| format!("{}: {e}", case.case))?;
    Ok((text, file))
}

fn evaluate(
    case: &CaseArgs,
    request: Request,
    cap: Option<u32>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let (_, file) = match load(case) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let (invariants, identities) = match request {
        Request::Invariants(list) if list.is_empty() && file.options.invariants.is_empty() => {
            (Invariant::ALL.to_vec(), Vec::new())
        }
        Request::Invariants(list) if list.is_empty() => (file.options.invariants.clone(), Vec::new()),
        Request::Invariants(list) => (list, Vec::new()),
        Request::Identities(ids) => (Vec::new(), ids),
    };
    let order = case.order.or(file.options.order).unwrap_or_default();
    let docs: Vec<ReportDocument> = file
        .instances
        .iter()
        .map(|inst| {
            let mut ctx = CaseContext::new(inst.input.clone()).with_order(order);
            if let Some(c) = cap.or(file.options.rf_cap) {
                ctx.set_rf_cap(c);
            }
            build_report(&file, inst, &ctx, &invariants, &identities)
        })
        .collect();
    if json {
        let body = if docs.len() == 1 {
            docs[0].to_json()
        } else {
            serde_json::to_string_pretty(&docs).expect("reports serialize")
        };
        let _ = writeln!(out, "{body}");
    } else {
        for (k, d) in docs.iter().enumerate() {
            if k > 0 {
                let _ = writeln!(out);
            }
            let _ = write!(out, "{}", d.to_text());
        }
    }
    for d in &docs {
        for p in &d.problems {
            let lambda = d.case.lambda.as_ref().map(|l| format!(" (lambda = {l})")).unwrap_or_default();
            let _ = writeln!(err, "{}{lambda}: {}", p.item, p.message);
        }
    }
    exit_code(&docs)
}

fn exit_code(docs: &[ReportDocument]) -> i32 {
    if docs.iter().any(|d| d.has(Outcome::Failed) || d.has(Outcome::Inconclusive)) {
        EXIT_FAILED
    } else if docs.iter().any(|d| d.has(Outcome::Hypothesis)) {
        EXIT_HYPOTHESIS
    } else {
        EXIT_OK
    }
}

/// One row of the family table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u32,
    #[serde(rename = "mu_BR")]
    pub mu_br: Dimension,
    #[serde(rename = "tau_BR")]
    pub tau_br: Dimension,
    pub ratio: Ratio,
    pub rf: Rf,
    /// Whether `mu_BR <= rf * tau_BR`; absent when `rf` was not found.
    pub cor_5_4: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub family: String,
    pub rows: Vec<TableRow>,
}

fn table_row(m: u32, cap: Option<u32>) -> Result<TableRow, InvariantError> {
    let file = parse_case(&families::m_family(m)).expect("built-in cases parse");
    let mut ctx = CaseContext::new(file.instances[0].input.clone());
    if let Some(c) = cap {
        ctx.set_rf_cap(c);
    }
    let r = verify_cor_5_4(&ctx)?;
    Ok(TableRow {
        m,
        mu_br: Dimension::Finite(r.mu_br),
        tau_br: Dimension::Finite(r.tau_br),
        ratio: r.ratio,
        rf: r.rf,
        cor_5_4: r.holds,
    })
}

/// Rows are computed in parallel and reported in order of `m`.
pub fn m_family_table(m_min: u32, m_max: u32, cap: Option<u32>) -> Result<Table, InvariantError> {
    let rows = (m_min..=m_max)
        .into_par_iter()
        .map(|m| table_row(m, cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Table {
        family: "m-family".into(),
        rows,
    })
}

fn table(m_min: u32, m_max: u32, cap: Option<u32>, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if m_min == 0 || m_min > m_max {
        let _ = writeln!(err, "error: need 1 <= --m-min <= --m-max, found {m_min} and {m_max}");
        return EXIT_INPUT;
    }
    let table = match m_family_table(m_min, m_max, cap) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if e.is_hypothesis_failure() { EXIT_HYPOTHESIS } else { EXIT_FAILED };
        }
    };
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&table).expect("tables serialize"));
    } else {
        let _ = writeln!(out, "{:>4}  {:>8}  {:>8}  {:>12}  {:>4}  mu <= r_f tau", "m", "mu_BR", "tau_BR", "mu/tau", "r_f");
        for r in &table.rows {
            let holds = r.cor_5_4.map_or("unknown".to_string(), |h| h.to_string());
            let _ = writeln!(
                out,
                "{:>4}  {:>8}  {:>8}  {:>12}  {:>4}  {}",
                r.m,
                r.mu_br.to_string(),
                r.tau_br.to_string(),
                r.ratio.to_string(),
                r.rf.to_string(),
                holds
            );
        }
    }
    let mut code = EXIT_OK;
    for r in &table.rows {
        match r.cor_5_4 {
            Some(true) => {}
            Some(false) => {
                let _ = writeln!(err, "m = {}: mu_BR / tau_BR = {} exceeds r_f = {}", r.m, r.ratio, r.rf);
                code = EXIT_FAILED;
            }
            None => {
                let _ = writeln!(err, "m = {}: r_f {} is beyond the cap", r.m, r.rf);
                code = EXIT_FAILED;
            }
        }
    }
    code
}
