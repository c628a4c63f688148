//! `g2verify`: runs the engine's checks from the command line.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error.
//! Set `G2_JSON_PRETTY=1` to indent `--json` output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use g2hom::catalog::{
    aloff_wallach_check, case_names, enumeration_report, find_case, qklm_report, verify_all, verify_record,
};
use g2hom::homspace::nearly_kaehler_product_check;
use g2hom::liealg::g2_subgroup_table;
use g2hom::octonion::{build_omega, check_normed_division, hodge_golden_check, multiplication_from_omega};
use g2hom::rational::{parse_rational, render};
use g2hom::report::{ReportEnvelope, Status};
use g2hom::{Error, Orientation};

#[derive(Parser)]
#[command(name = "g2verify", version, about = "Exact checks for homogeneous G2-structures")]
struct Cli {
    /// Print the JSON report envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verification commands.
    #[command(subcommand)]
    Verify(Verify),
    /// Isotropy weights.
    #[command(subcommand)]
    Weights(Weights),
    /// Parameter checks.
    #[command(subcommand)]
    Check(Check),
    /// Reference tables.
    #[command(subcommand)]
    Table(Table),
    /// Candidate algebras g for a given isotropy dimension.
    Enumerate {
        #[arg(long = "dim-h")]
        dim_h: usize,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Octonion table from the three-form; normed division identity.
    Octonion {
        #[arg(long, hide = true, value_name = "I,J")]
        corrupt: Option<String>,
    },
    /// Hodge dual of the standard three-form.
    Hodge {
        #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = ["+1", "1", "-1"])]
        orientation: String,
    },
    /// One catalog case.
    Case { name: String },
    /// Every catalog case.
    All,
    /// Product of a nearly Kähler six-manifold with a line.
    NkProduct(Lambda),
}

#[derive(Args)]
struct Lambda {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Subcommand)]
enum Weights {
    /// Isotropy of SU(3)/U(1)_{k,l}.
    #[command(name = "aloff-wallach")]
    AloffWallach {
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(allow_negative_numbers = true)]
        l: i64,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Whether SU(2)^3/U(1)^2_{k,l,m} has isotropy inside G2 (k ≥ l ≥ m ≥ 0).
    Qklm { k: i64, l: i64, m: i64 },
}

#[derive(Subcommand)]
enum Table {
    /// Connected subgroups of G2 by isotropy splitting.
    #[command(name = "g2-subgroups")]
    G2Subgroups,
}

struct Output {
    envelope: ReportEnvelope,
    text: String,
}

enum Failure {
    Usage(String),
    Engine(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::Parse(_) | Error::UnknownCase(_) => Failure::Usage(e.to_string()),
            other => Failure::Engine(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    let pretty = std::env::var("G2_JSON_PRETTY").is_ok_and(|v| !v.is_empty() && v != "0");
    match run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = if cli.json {
                writeln!(stdout, "{}", out.envelope.to_json(pretty))
            } else {
                write!(stdout, "{}", out.text)
            };
            match out.envelope.status {
                Status::Fail => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(msg)) => {
            eprintln!("verification error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Verify(v) => verify(v),
        Command::Weights(Weights::AloffWallach { k, l }) => {
            let r = aloff_wallach_check(*k, *l)?;
            let text = format!(
                "U(1)_{{{k},{l}}} in SU(3)\n  rates     {:?} (predicted {:?})\n  splitting {}\n  match     {}\n{}\n",
                r.rates,
                r.predicted_rates,
                r.display,
                r.matched
                    .as_ref()
                    .map(|m| format!("{} {:?}", m.label, m.parameters.unwrap_or_default()))
                    .unwrap_or_else(|| "none".into()),
                verdict(r.passed)
            );
            let env =
                ReportEnvelope::new("weights aloff-wallach", json!({"k": k, "l": l}), Status::from_pass(r.passed), &r);
            Ok(Output { envelope: env, text })
        }
        Command::Check(Check::Qklm { k, l, m }) => {
            let r = qklm_report(*k, *l, *m)?;
            let text = format!("{}\n  splitting {}\n  oracle    {}\n", r.admits, r.display, r.oracle);
            let status = Status::from_pass(r.admits == r.oracle);
            let env = ReportEnvelope::new("check qklm", json!({"k": k, "l": l, "m": m}), status, &r);
            Ok(Output { envelope: env, text })
        }
        Command::Table(Table::G2Subgroups) => {
            let rows = g2_subgroup_table();
            let mut text = String::new();
            for r in &rows {
                text.push_str(&format!("{:<18} dim {:>2}  {}\n", r.label, r.dim, r.display));
            }
            let env = ReportEnvelope::new("table g2-subgroups", json!({}), Status::Info, &rows);
            Ok(Output { envelope: env, text })
        }
        Command::Enumerate { dim_h } => {
            let r = enumeration_report(*dim_h)?;
            let mut text = format!("h = {} (dim {})\n", r.h.meta.name, dim_h);
            for c in &r.candidates {
                text.push_str(&format!("  {:<24} {}\n", c.g_name, c.status));
            }
            text.push_str(&format!("survivors: {}\n", r.survivors.join(", ")));
            let env = ReportEnvelope::new("enumerate", json!({"dim_h": dim_h}), Status::Info, &r);
            Ok(Output { envelope: env, text })
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("expected two indices 0..7 as I,J, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > 7 || b > 7 {
        return Err(bad());
    }
    Ok((a, b))
}

fn verify(v: &Verify) -> Result<Output, Failure> {
    match v {
        Verify::Octonion { corrupt } => {
            let mut table = multiplication_from_omega(&build_omega())?;
            let mut inputs = json!({});
            if let Some(spec) = corrupt {
                let (i, j) = parse_pair(spec)?;
                let flipped = table.product_of_basis(i, j).scale(&g2hom::rational::q(-1));
                table.set_product(i, j, flipped);
                inputs = json!({"corrupt": [i, j]});
            }
            let report = check_normed_division(&table);
            let x1x2 = table.product_of_basis(1, 2).to_text();
            let x2x4 = table.product_of_basis(2, 4).to_text();
            let text = format!(
                "normed division: {}\n  details {}\n  x1*x2 = {x1x2}\n  x2*x4 = {x2x4}\n{}",
                verdict(report.passed()),
                report.details,
                report.witness.as_ref().map(|w| format!("  witness {w}\n")).unwrap_or_default()
            );
            let body = json!({"report": report, "x1x2": x1x2, "x2x4": x2x4});
            let env = ReportEnvelope::new("verify octonion", inputs, Status::from_pass(report.passed()), &body);
            Ok(Output { envelope: env, text })
        }
        Verify::Hodge { orientation } => {
            let sign = if orientation == "-1" { -1 } else { 1 };
            let r = hodge_golden_check(Orientation::from_sign(sign)?)?;
            let text = format!(
                "omega          {}\n*omega         {}\nexpected       {}\nmetric = I     {}\n{}\n",
                r.omega.to_text(),
                r.computed.to_text(),
                r.expected.to_text(),
                r.metric_is_identity,
                if r.matches { "PASS" } else { "FAIL: mismatch" }
            );
            let env =
                ReportEnvelope::new("verify hodge", json!({"orientation": sign}), Status::from_pass(r.matches), &r);
            Ok(Output { envelope: env, text })
        }
        Verify::Case { name } => {
            let rec = find_case(name).ok_or_else(|| {
                Failure::Usage(format!("unknown case {name:?}; valid names: {}", case_names().join(", ")))
            })?;
            let out = verify_record(&rec);
            let mut text = format!(
                "{} [{}]\n  g = {}, h = {}\n  expected {}  matched {}\n  splitting {}\n",
                out.case,
                out.title,
                out.g,
                out.h,
                out.expected_label,
                out.matched_label.as_deref().unwrap_or("none"),
                out.splitting.as_deref().unwrap_or("-"),
            );
            if let Some(r) = &out.report {
                text.push_str(&format!(
                    "  omega   {}\n  *omega  {}\n  d*omega {}\n  cosymplectic {}\n",
                    r.g2_form.to_text(),
                    r.star_form.to_text(),
                    r.d_star_form.to_text(),
                    r.cosymplectic
                ));
            }
            if let Some(e) = &out.error {
                text.push_str(&format!("  error {e}\n"));
            }
            text.push_str(verdict(out.passed));
            text.push('\n');
            let env = ReportEnvelope::new("verify case", json!({"name": name}), Status::from_pass(out.passed), &out);
            Ok(Output { envelope: env, text })
        }
        Verify::All => {
            let mut all = verify_all();
            let mut text = String::new();
            for o in &all {
                text.push_str(&format!(
                    "{:<16} {:<4} {:<18} cosymplectic {}\n",
                    o.case,
                    verdict(o.passed),
                    o.matched_label.as_deref().unwrap_or("none"),
                    o.cosymplectic.map(|c| c.to_string()).unwrap_or_else(|| "-".into())
                ));
            }
            let ok = all.iter().all(|o| o.passed);
            text.push_str(&format!("{} of {} cases pass\n", all.iter().filter(|o| o.passed).count(), all.len()));
            for o in &mut all {
                o.report = None;
            }
            let env = ReportEnvelope::new("verify all", json!({}), Status::from_pass(ok), &all);
            Ok(Output { envelope: env, text })
        }
        Verify::NkProduct(Lambda { lambda }) => {
            let l = parse_rational(lambda)?;
            let r = nearly_kaehler_product_check(&l)?;
            let text = format!(
                "lambda {}\n  omega   {}\n  *omega  {}\n  d*omega {}\n{}\n",
                render(&l),
                r.omega.to_text(),
                r.star_omega.to_text(),
                r.d_star_omega.to_text(),
                verdict(r.cosymplectic)
            );
            let env = ReportEnvelope::new(
                "verify nk-product",
                json!({"lambda": render(&l)}),
                Status::from_pass(r.cosymplectic),
                &r,
            );
            Ok(Output { envelope: env, text })
        }
    }
}
