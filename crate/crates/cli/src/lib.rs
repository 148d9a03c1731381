//! Command-line front end for `swfold`.
//!
//! [`run`] executes one invocation and returns everything it would print,
//! so tests can drive the CLI without spawning a process.

pub mod render;
pub mod spec;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use swfold_core::obstruction::{product_report, stabilization_note};
use swfold_core::{
    circle_bundle_sw_closed_form, circle_bundle_sw_direct, equal_up_to_sign, euler_search,
    fold_or_product, is_injective_fold, laurent::parse_linear_form, taubes_report,
    theorem1_applicable, ErrorKind, FoldOutcome, KnotTable, ThreeManifold,
};

pub use spec::load_spec;

/// Environment variable naming an extra knot-registration file.
pub const KNOT_TABLE_ENV: &str = "SWFOLD_KNOT_TABLE";

#[derive(Debug, Parser)]
#[command(name = "swfold", version, about = "Seiberg-Witten polynomials of circle bundles over 3-manifolds")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print only the resulting polynomial or verdict.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or extend the knot table.
    Knot {
        #[command(subcommand)]
        action: KnotAction,
    },
    /// SW polynomial of the 3-manifold described by a spec file.
    Sw3 { spec: PathBuf },
    /// Fold the 3-manifold polynomial by an Euler class.
    Fold {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// SW polynomial of a circle bundle over a closed surface.
    Bundle {
        #[arg(long)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Taubes obstruction for one Euler class.
    Obstruct {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// Obstruction for every Euler class in a box.
    Search {
        spec: PathBuf,
        #[arg(long = "box", default_value_t = 5)]
        bound: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum KnotAction {
    List,
    Show { name: String },
    Register { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Closed,
    Both,
}

#[derive(Debug)]
pub enum CliError {
    Core(swfold_core::Error),
    Io { path: String, msg: String },
    Schema { path: String, field: String, msg: String },
    Usage(String),
    Mismatch(String),
}

impl From<swfold_core::Error> for CliError {
    fn from(e: swfold_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Structural | ErrorKind::Syntax | ErrorKind::Name => 2,
                ErrorKind::Domain | ErrorKind::Hypothesis => 1,
            },
            CliError::Io { .. } | CliError::Schema { .. } | CliError::Usage(_) => 2,
            CliError::Mismatch(_) => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io { .. } => "E-IO",
            CliError::Schema { .. } => "E-SCHEMA",
            CliError::Usage(_) => "E-USAGE",
            CliError::Mismatch(_) => "E-MISMATCH",
        }
    }

    /// Single line: `error[CODE]: message`.
    pub fn line(&self) -> String {
        let msg = match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io { path, msg } => format!("{path}: {msg}"),
            CliError::Schema { path, field, msg } => format!("{path}: at `{field}`: {msg}"),
            CliError::Usage(m) | CliError::Mismatch(m) => m.clone(),
        };
        format!("error[{}]: {}", self.code(), msg.replace('\n', " "))
    }
}

/// What one invocation prints, and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub command: String,
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

struct Ctx {
    json: bool,
    quiet: bool,
    table: KnotTable,
}

impl Ctx {
    fn emit(&self, text: String, payload: Value) -> String {
        if self.json {
            render::json_text(&payload)
        } else {
            text
        }
    }
}

/// Runs `swfold` with `args` (program name first). `knot_table` is an extra
/// registration file, normally taken from [`KNOT_TABLE_ENV`].
pub fn run_with(args: &[String], knot_table: Option<&Path>) -> OutputRecord {
    let command = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    OutputRecord {
                        command,
                        stdout: rendered,
                        stderr: String::new(),
                        status: 0,
                    }
                }
                _ => {
                    let first = rendered
                        .lines()
                        .next()
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ")
                        .to_string();
                    let err = CliError::Usage(first);
                    OutputRecord {
                        command,
                        stdout: String::new(),
                        stderr: format!("{}\n{rendered}", err.line()),
                        status: err.exit_code(),
                    }
                }
            };
        }
    };
    match execute(cli, knot_table) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            OutputRecord {
                command,
                stdout: out,
                stderr: String::new(),
                status: 0,
            }
        }
        Err(e) => OutputRecord {
            command,
            stdout: String::new(),
            stderr: format!("{}\n", e.line()),
            status: e.exit_code(),
        },
    }
}

/// Like [`run_with`], reading the extra knot table from the environment.
pub fn run(args: &[String]) -> OutputRecord {
    let extra = std::env::var_os(KNOT_TABLE_ENV).map(PathBuf::from);
    run_with(args, extra.as_deref())
}

fn execute(cli: Cli, knot_table: Option<&Path>) -> Result<String, CliError> {
    let mut table = KnotTable::builtin()?;
    if let Some(path) = knot_table {
        spec::register_file(path, &mut table)?;
    }
    let mut ctx = Ctx {
        json: cli.json,
        quiet: cli.quiet,
        table,
    };
    match cli.command {
        Command::Knot { action } => knot(&mut ctx, action),
        Command::Sw3 { spec } => {
            let m = load_spec(&spec, &mut ctx.table)?;
            Ok(sw3(&ctx, &m))
        }
        Command::Fold { spec, chi } => {
            let m = load_spec(&spec, &mut ctx.table)?;
            fold_cmd(&ctx, &m, &chi)
        }
        Command::Bundle {
            genus,
            euler,
            method,
        } => bundle(&ctx, genus, euler, method),
        Command::Obstruct { spec, chi } => {
            let m = load_spec(&spec, &mut ctx.table)?;
            obstruct(&ctx, &m, &chi)
        }
        Command::Search { spec, bound } => {
            let m = load_spec(&spec, &mut ctx.table)?;
            search(&ctx, &m, bound)
        }
    }
}

fn knot(ctx: &mut Ctx, action: KnotAction) -> Result<String, CliError> {
    let (records, command) = match action {
        KnotAction::List => (ctx.table.records().cloned().collect::<Vec<_>>(), "knot list"),
        KnotAction::Show { name } => (vec![ctx.table.lookup(&name)?.clone()], "knot show"),
        KnotAction::Register { file } => {
            let names = spec::register_file(&file, &mut ctx.table)?;
            let records = names
                .iter()
                .map(|n| ctx.table.lookup(n).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            (records, "knot register")
        }
    };
    let text = records
        .iter()
        .map(|k| {
            if ctx.quiet {
                format!("{}\t{}", k.name, k.alexander)
            } else {
                render::knot_text(k)
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let payload = json!({
        "command": command,
        "knots": records.iter().map(render::knot_json).collect::<Vec<_>>(),
    });
    Ok(ctx.emit(text, payload))
}

fn sw3(ctx: &Ctx, m: &ThreeManifold) -> String {
    let text = if ctx.quiet {
        m.sw3.to_text()
    } else {
        format!("{}SW3 = {}", render::manifold_header(m), m.sw3)
    };
    let mut payload = render::manifold_json(m);
    payload["command"] = json!("sw3");
    payload["sw3"] = json!(m.sw3.to_text());
    ctx.emit(text, payload)
}

fn fold_cmd(ctx: &Ctx, m: &ThreeManifold, chi_text: &str) -> Result<String, CliError> {
    let chi = parse_linear_form(chi_text, &m.basis)?;
    let applicability = theorem1_applicable(m, &chi)?;
    let outcome = fold_or_product(m, &chi)?;
    let mut payload = render::manifold_json(m);
    payload["command"] = json!("fold");
    payload["sw3"] = json!(m.sw3.to_text());
    payload["chi_vector"] = json!(chi.to_vec());
    payload["b_plus"] = json!(applicability.b_plus);
    let mut text = render::manifold_header(m);
    match &outcome {
        FoldOutcome::Folded(f) => {
            let q = f.quotient();
            let injective = is_injective_fold(m, &chi)?;
            payload["case"] = json!("folded");
            payload["chi"] = json!(f.euler_class().to_text());
            payload["pivot"] = json!(m.basis.names()[q.pivot()]);
            payload["modulus"] = json!(q.modulus());
            payload["injective"] = json!(injective);
            payload["sw4"] = json!(f.to_text());
            text += &format!(
                "euler class: {} (pivot {}, modulus {})\nb+ = {}\ninjective: {}\nSW4 = {}",
                f.euler_class(),
                m.basis.names()[q.pivot()],
                q.modulus(),
                applicability.b_plus,
                render::yes_no(injective),
                f.poly()
            );
            if ctx.quiet {
                text = f.to_text();
            }
        }
        FoldOutcome::Product(p) => {
            payload["case"] = json!("product");
            payload["chi"] = json!("0");
            payload["injective"] = json!(true);
            payload["sw4"] = json!(p.to_text());
            text += &format!(
                "euler class: 0\nproduct case: torsion Euler class, X = M x S1 and SW4 = SW3\nSW4 = {p}"
            );
            if ctx.quiet {
                text = p.to_text();
            }
        }
    }
    Ok(ctx.emit(text, payload))
}

fn bundle(ctx: &Ctx, genus: i64, euler: i64, method: Method) -> Result<String, CliError> {
    let direct = matches!(method, Method::Direct | Method::Both)
        .then(|| circle_bundle_sw_direct(genus, euler))
        .transpose()?;
    let closed = matches!(method, Method::Closed | Method::Both)
        .then(|| circle_bundle_sw_closed_form(genus, euler))
        .transpose()?;
    let matched = match (&direct, &closed) {
        (Some(d), Some(c)) => Some(equal_up_to_sign(d, c)?),
        _ => None,
    };
    let mut lines = Vec::new();
    if !ctx.quiet {
        lines.push(format!(
            "circle bundle over genus {genus} surface, euler number {euler}"
        ));
    }
    if let Some(d) = &direct {
        lines.push(format!("direct: {}", d.poly()));
    }
    if let Some(c) = &closed {
        lines.push(format!("closed: {}", c.poly()));
        let literal = swfold_core::fold::closed_form_literal(genus, euler)?;
        if !ctx.quiet && &literal != c.poly() {
            lines.push(format!("closed, as written (t^i for odd n): {literal}"));
        }
    }
    match matched {
        Some(true) => lines.push("MATCH (up to sign)".into()),
        Some(false) => lines.push("MISMATCH".into()),
        None => {}
    }
    let mut payload = json!({
        "command": "bundle",
        "genus": genus,
        "euler": euler,
        "method": format!("{method:?}").to_lowercase(),
    });
    if let Some(d) = &direct {
        payload["direct"] = json!(d.to_text());
    }
    if let Some(c) = &closed {
        payload["closed"] = json!(c.to_text());
    }
    if let Some(m) = matched {
        payload["match_up_to_sign"] = json!(m);
    }
    let out = ctx.emit(lines.join("\n"), payload);
    if matched == Some(false) {
        return Err(CliError::Mismatch(format!(
            "direct and closed-form results differ for genus {genus}, euler {euler}"
        )));
    }
    Ok(out)
}

fn obstruct(ctx: &Ctx, m: &ThreeManifold, chi_text: &str) -> Result<String, CliError> {
    let chi = parse_linear_form(chi_text, &m.basis)?;
    let (report, sw4) = match fold_or_product(m, &chi)? {
        FoldOutcome::Folded(f) => (taubes_report(&f, m), f.poly().clone()),
        FoldOutcome::Product(p) => (product_report(m), p),
    };
    let verdict = if report.obstructed {
        "OBSTRUCTED: no class with SW = ±1; no symplectic structure with either orientation"
    } else {
        "not obstructed: some class has SW = ±1"
    };
    let text = if ctx.quiet {
        verdict.split(':').next().unwrap_or(verdict).to_string()
    } else {
        let units = if report.unit_classes.is_empty() {
            "none".to_string()
        } else {
            report
                .unit_classes
                .iter()
                .map(|(e, c)| format!("{} ({c:+})", render::class_text(&m.basis, e)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!(
            "{}source: {}\nSW4 = {}\nunit classes: {}\nverdict: {}\nfibered orbit space: {}",
            render::manifold_header(m),
            report.source,
            sw4,
            units,
            verdict,
            report.fibered_orbit
        )
    };
    let chi_label = if chi.is_zero() {
        "0".to_string()
    } else {
        swfold_core::EulerClass::new(&m.basis, chi.clone())?.to_text()
    };
    let payload = json!({
        "command": "obstruct",
        "manifold": m.name,
        "chi": chi_label,
        "sw4": sw4.to_text(),
        "obstructed": report.obstructed,
        "unit_classes": render::unit_classes_json(&m.basis, &report.unit_classes),
        "injective": chi.is_zero() || is_injective_fold(m, &chi)?,
        "fibered_orbit": report.fibered_orbit,
    });
    Ok(ctx.emit(text, payload))
}

fn search(ctx: &Ctx, m: &ThreeManifold, bound: i64) -> Result<String, CliError> {
    let result = euler_search(m, bound)?;
    let note = stabilization_note(m, bound)?;
    let text = if ctx.quiet {
        format!("all obstructed: {}", render::yes_no(result.all_obstructed))
    } else {
        render::search_text(m, &result, &note)
    };
    let payload = render::search_json(m, &result, &note);
    Ok(ctx.emit(text, payload))
}
