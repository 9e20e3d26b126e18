//! The `cascade` command line.
//!
//! Every flag can also come from a flat `key = value` file given with
//! `--config`; flags win on conflict. Exit status is 0 on success, 1 on a
//! usage or computation error and 2 when the oracle finds the parameters
//! outside the adiabatic regime.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::figures::{Figure, FIGURE_POINTS, PLOT_GAMMA_C, PLOT_KAPPA};
use crate::model::SystemParams;
use crate::oracle::{compare_with_analytic, FockConfig, Tolerances, Verdict};
use crate::report::{full_report, TextReport};
use crate::sweep::{maximize, sweep, BaseRates, OptimumResult, Quantity, SweepSpec, SweepTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_OUTSIDE_REGIME: i32 = 2;

const PLOT_GAMMA: f64 = 0.3;

#[derive(Debug, Parser)]
#[command(
    name = "cascade",
    version,
    about = "Steady-state photon statistics and squeezing of a driven three-level cascade atom in a cavity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form steady state, photon number, squeezing and superposed mode at one point.
    #[command(allow_negative_numbers = true)]
    Report {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Curve data of one figure (fig2 to fig7). Defaults: gamma_c = 0.5,
    /// kappa = 0.8, 401 points on epsilon in [0, 2] ([0, 20] for fig6);
    /// gamma = 0 and 0.3 for fig2, fig5, fig6, gamma = 0.3 otherwise.
    #[command(allow_negative_numbers = true)]
    Figure {
        /// Figure id.
        id: String,
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        range: RangeFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Any closed-form quantities over an epsilon grid.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        range: RangeFlags,
        /// Comma-separated quantity selectors (default: all).
        #[arg(long)]
        quantities: Option<String>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Golden-section maximum of one quantity over epsilon.
    #[command(allow_negative_numbers = true)]
    Maximize {
        #[command(flatten)]
        params: ParamFlags,
        /// Quantity selector, e.g. s-plus.
        #[arg(long)]
        quantity: Option<String>,
        /// Search interval `lo,hi` (default 0,20).
        #[arg(long)]
        bracket: Option<String>,
        /// Final bracket width (default 1e-8).
        #[arg(long)]
        tol: Option<String>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Full master-equation check of the closed forms on a truncated Fock space.
    #[command(allow_negative_numbers = true)]
    Oracle {
        #[command(flatten)]
        params: ParamFlags,
        /// Truncations `Nb,N1,N2` of modes b, a1, a2 (default 6,3,3).
        #[arg(long)]
        dims: Option<String>,
        /// Evolution horizon.
        #[arg(long = "t-end")]
        t_end: Option<String>,
        /// Integration step.
        #[arg(long)]
        dt: Option<String>,
        /// Largest allowed population of a top Fock level (default 1e-3).
        #[arg(long = "leak-tol")]
        leak_tol: Option<String>,
        /// Relative tolerance on atomic populations and coherence (default 0.02).
        #[arg(long = "pop-tol")]
        pop_tol: Option<String>,
        /// Relative tolerance on field moments (default 0.05).
        #[arg(long = "field-tol")]
        field_tol: Option<String>,
        #[command(flatten)]
        output: OutputFlags,
    },
}

#[derive(Debug, Args)]
struct ParamFlags {
    /// Atom-cavity coupling.
    #[arg(long)]
    g: Option<String>,
    /// Cavity damping rate.
    #[arg(long)]
    kappa: Option<String>,
    /// Coherent drive amplitude.
    #[arg(long)]
    eta: Option<String>,
    /// Spontaneous emission rate (comma list for figure and sweep).
    #[arg(long)]
    gamma: Option<String>,
    /// Stimulated emission decay constant 4g^2/kappa.
    #[arg(long = "gamma-c")]
    gamma_c: Option<String>,
    /// Effective drive 2g eta/kappa.
    #[arg(long)]
    epsilon: Option<String>,
}

#[derive(Debug, Args)]
struct RangeFlags {
    #[arg(long = "eps-min")]
    eps_min: Option<String>,
    #[arg(long = "eps-max")]
    eps_max: Option<String>,
    #[arg(long)]
    points: Option<String>,
}

#[derive(Debug, Args)]
struct OutputFlags {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// report, csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Flat `key = value` file supplying any of the flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

type Flags = Vec<(&'static str, Option<String>)>;

impl ParamFlags {
    fn flags(&self) -> Flags {
        vec![
            ("g", self.g.clone()),
            ("kappa", self.kappa.clone()),
            ("eta", self.eta.clone()),
            ("gamma", self.gamma.clone()),
            ("gamma-c", self.gamma_c.clone()),
            ("epsilon", self.epsilon.clone()),
        ]
    }
}

impl RangeFlags {
    fn flags(&self) -> Flags {
        vec![
            ("eps-min", self.eps_min.clone()),
            ("eps-max", self.eps_max.clone()),
            ("points", self.points.clone()),
        ]
    }
}

impl OutputFlags {
    fn flags(&self) -> Flags {
        vec![
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("format", self.format.clone()),
        ]
    }
}

/// Merged settings: config file first, flags on top.
#[derive(Debug, Default)]
struct Settings {
    values: BTreeMap<String, String>,
}

fn config_error(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

impl Settings {
    fn load(config: Option<&Path>, flags: Flags) -> Result<Self> {
        let allowed: Vec<&str> = flags.iter().map(|(k, _)| *k).collect();
        let mut values = BTreeMap::new();
        if let Some(path) = config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| config_error(format!("cannot read config {}: {e}", path.display())))?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| {
                    config_error(format!(
                        "{}:{}: expected `key = value`",
                        path.display(),
                        lineno + 1
                    ))
                })?;
                let key = key.trim().replace('_', "-");
                if !allowed.contains(&key.as_str()) {
                    return Err(config_error(format!(
                        "{}:{}: key `{key}` is not accepted here; valid keys: {}",
                        path.display(),
                        lineno + 1,
                        allowed.join(", ")
                    )));
                }
                if values
                    .insert(key.clone(), value.trim().to_string())
                    .is_some()
                {
                    return Err(config_error(format!(
                        "{}:{}: duplicate key `{key}`",
                        path.display(),
                        lineno + 1
                    )));
                }
            }
        }
        for (key, value) in flags {
            if let Some(v) = value {
                values.insert(key.to_string(), v);
            }
        }
        Ok(Self { values })
    }

    fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    fn str(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn f64(&self, key: &str) -> Result<Option<f64>> {
        self.str(key).map(|v| parse_f64(key, v)).transpose()
    }

    fn require_f64(&self, key: &str) -> Result<f64> {
        self.f64(key)?
            .ok_or_else(|| config_error(format!("missing `--{key}`")))
    }

    fn f64_list(&self, key: &str) -> Result<Option<Vec<f64>>> {
        self.str(key)
            .map(|v| v.split(',').map(|x| parse_f64(key, x)).collect())
            .transpose()
    }

    fn usize(&self, key: &str) -> Result<Option<usize>> {
        self.str(key)
            .map(|v| {
                v.trim().parse::<usize>().map_err(|_| {
                    config_error(format!(
                        "invalid value `{v}` for `{key}`: expected a non-negative integer"
                    ))
                })
            })
            .transpose()
    }

    fn reject(&self, keys: &[&str], why: &str) -> Result<()> {
        match keys.iter().find(|k| self.has(k)) {
            Some(k) => Err(config_error(format!("`--{k}` is not accepted here: {why}"))),
            None => Ok(()),
        }
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    let x: f64 = v.trim().parse().map_err(|_| {
        config_error(format!(
            "invalid value `{v}` for `{key}`: expected a number"
        ))
    })?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(config_error(format!(
            "invalid value `{v}` for `{key}`: must be finite"
        )))
    }
}

/// Exactly one of the two parameter sets.
fn system_params(s: &Settings) -> Result<SystemParams> {
    let hamiltonian = s.has("g") || s.has("eta");
    let plot = s.has("gamma-c") || s.has("epsilon");
    match (hamiltonian, plot) {
        (true, true) => Err(config_error(
            "mixed parameter styles: give either --g --kappa --eta --gamma or \
             --gamma-c --kappa --gamma --epsilon",
        )),
        (true, false) => SystemParams::derive(
            s.require_f64("g")?,
            s.require_f64("kappa")?,
            s.require_f64("eta")?,
            s.require_f64("gamma")?,
        ),
        (false, true) => SystemParams::from_plot_set(
            s.require_f64("gamma-c")?,
            s.require_f64("kappa")?,
            s.require_f64("gamma")?,
            s.require_f64("epsilon")?,
        ),
        (false, false) => Err(config_error(
            "missing parameters: give --g --kappa --eta --gamma or \
             --gamma-c --kappa --gamma --epsilon",
        )),
    }
}

/// Rates held fixed while epsilon varies.
fn swept_rates(s: &Settings) -> Result<(f64, f64)> {
    s.reject(
        &["epsilon"],
        "epsilon is the swept variable; use --eps-min and --eps-max",
    )?;
    s.reject(
        &["g", "eta"],
        "give the fixed rates as --gamma-c and --kappa",
    )?;
    Ok((
        s.f64("gamma-c")?.unwrap_or(PLOT_GAMMA_C),
        s.f64("kappa")?.unwrap_or(PLOT_KAPPA),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Report,
    Csv,
    Json,
}

fn format(s: &Settings, default: Format) -> Result<Format> {
    match s.str("format") {
        None => Ok(default),
        Some("report") => Ok(Format::Report),
        Some("csv") => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(config_error(format!(
            "unknown format `{other}`; valid formats: report, csv, json"
        ))),
    }
}

struct Output {
    text: String,
    status: i32,
}

fn table_output(s: &Settings, table: &SweepTable) -> Result<Output> {
    let text = match format(s, Format::Csv)? {
        Format::Csv => table.to_csv(),
        Format::Json => to_json(table),
        Format::Report => {
            return Err(config_error(
                "format `report` is not available for curve data; use csv or json",
            ))
        }
    };
    Ok(Output {
        text,
        status: EXIT_OK,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn range(s: &Settings, spec: &mut SweepSpec) -> Result<()> {
    if let Some(v) = s.f64("eps-min")? {
        spec.eps_min = v;
    }
    if let Some(v) = s.f64("eps-max")? {
        spec.eps_max = v;
    }
    if let Some(v) = s.usize("points")? {
        spec.points = v;
    }
    Ok(())
}

fn cmd_report(s: &Settings) -> Result<Output> {
    let report = full_report(&system_params(s)?)?;
    let text = match format(s, Format::Report)? {
        Format::Report => report.to_text(),
        Format::Csv => report.to_csv(),
        Format::Json => to_json(&report),
    };
    Ok(Output {
        text,
        status: EXIT_OK,
    })
}

fn cmd_figure(id: &str, s: &Settings) -> Result<Output> {
    let figure: Figure = id.parse()?;
    let mut spec = figure.spec();
    let (gamma_c, kappa) = swept_rates(s)?;
    spec.gamma_c = gamma_c;
    spec.kappa = kappa;
    if let Some(gammas) = s.f64_list("gamma")? {
        spec.gammas = gammas;
    }
    range(s, &mut spec)?;
    table_output(s, &sweep(&spec)?)
}

fn cmd_sweep(s: &Settings) -> Result<Output> {
    let (gamma_c, kappa) = swept_rates(s)?;
    let quantities = match s.str("quantities") {
        Some(list) => list
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Quantity>>>()?,
        None => Quantity::ALL.to_vec(),
    };
    let mut spec = SweepSpec {
        gamma_c,
        kappa,
        gammas: s.f64_list("gamma")?.unwrap_or_else(|| vec![PLOT_GAMMA]),
        eps_min: 0.0,
        eps_max: 2.0,
        points: FIGURE_POINTS,
        quantities,
    };
    range(s, &mut spec)?;
    table_output(s, &sweep(&spec)?)
}

#[derive(Debug, Serialize)]
struct MaximizeOutput {
    quantity: Quantity,
    rates: BaseRates,
    search_interval: (f64, f64),
    tol: f64,
    #[serde(flatten)]
    outcome: MaximizeOutcome,
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum MaximizeOutcome {
    Interior(OptimumResult),
    Boundary {
        side: crate::error::BracketSide,
        epsilon: f64,
        value: f64,
    },
}

impl MaximizeOutput {
    fn to_text(&self) -> String {
        let mut r = TextReport::new();
        r.section("search")
            .text("quantity", self.quantity)
            .num("gamma_c", self.rates.gamma_c)
            .num("kappa", self.rates.kappa)
            .num("gamma", self.rates.gamma)
            .num("bracket_lo", self.search_interval.0)
            .num("bracket_hi", self.search_interval.1)
            .num("tol", self.tol);
        r.section("optimum");
        match &self.outcome {
            MaximizeOutcome::Interior(o) => {
                r.text("status", "interior")
                    .num("eps_star", o.eps_star)
                    .num("value", o.value_star)
                    .num("bracket_width", o.bracket)
                    .text("evaluations", o.evaluations);
            }
            MaximizeOutcome::Boundary {
                side,
                epsilon,
                value,
            } => {
                r.text("status", "boundary")
                    .text("side", side)
                    .num("epsilon", *epsilon)
                    .num("value", *value)
                    .text(
                        "notice",
                        format!(
                            "maximum attained at the {side} end of the bracket; \
                             the quantity has no interior maximum there"
                        ),
                    );
            }
        }
        r.finish()
    }

    fn to_csv(&self) -> String {
        let (status, eps, value) = match &self.outcome {
            MaximizeOutcome::Interior(o) => ("interior".to_string(), o.eps_star, o.value_star),
            MaximizeOutcome::Boundary {
                side,
                epsilon,
                value,
            } => (format!("boundary_{side}"), *epsilon, *value),
        };
        format!(
            "quantity,gamma_c,kappa,gamma,status,eps_star,value\n{},{},{},{},{status},{eps},{value}\n",
            self.quantity, self.rates.gamma_c, self.rates.kappa, self.rates.gamma
        )
    }
}

fn cmd_maximize(s: &Settings) -> Result<Output> {
    let (gamma_c, kappa) = swept_rates(s)?;
    let quantity: Quantity = s
        .str("quantity")
        .ok_or_else(|| config_error("missing `--quantity`"))?
        .parse()?;
    let rates = BaseRates {
        gamma_c,
        kappa,
        gamma: s.f64("gamma")?.unwrap_or(PLOT_GAMMA),
    };
    let bracket = match s.f64_list("bracket")? {
        None => (0.0, 20.0),
        Some(v) if v.len() == 2 => (v[0], v[1]),
        Some(_) => return Err(config_error("`--bracket` takes two numbers `lo,hi`")),
    };
    let tol = s.f64("tol")?.unwrap_or(1e-8);
    let outcome = match maximize(&rates, quantity, bracket, tol) {
        Ok(o) => MaximizeOutcome::Interior(o),
        Err(Error::BoundaryMaximum { side, at, value }) => MaximizeOutcome::Boundary {
            side,
            epsilon: at,
            value,
        },
        Err(e) => return Err(e),
    };
    let out = MaximizeOutput {
        quantity,
        rates,
        search_interval: bracket,
        tol,
        outcome,
    };
    let text = match format(s, Format::Report)? {
        Format::Report => out.to_text(),
        Format::Csv => out.to_csv(),
        Format::Json => to_json(&out),
    };
    Ok(Output {
        text,
        status: EXIT_OK,
    })
}

fn parse_dims(v: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<usize> = v
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| {
            config_error(format!(
                "invalid value `{v}` for `dims`: expected `Nb,N1,N2`"
            ))
        })?;
    match parts[..] {
        [b, a1, a2] => Ok((b, a1, a2)),
        _ => Err(config_error(format!(
            "invalid value `{v}` for `dims`: expected three counts"
        ))),
    }
}

fn cmd_oracle(s: &Settings) -> Result<Output> {
    let params = system_params(s)?;
    let (b, a1, a2) = s
        .str("dims")
        .map(parse_dims)
        .transpose()?
        .unwrap_or((6, 3, 3));
    let mut config = FockConfig::with_dims(b, a1, a2);
    config.t_end = s.f64("t-end")?;
    config.dt = s.f64("dt")?;
    if let Some(v) = s.f64("leak-tol")? {
        config.leak_tolerance = v;
    }
    let mut tolerances = Tolerances::default();
    if let Some(v) = s.f64("pop-tol")? {
        tolerances.populations = v;
    }
    if let Some(v) = s.f64("field-tol")? {
        tolerances.field_moments = v;
    }
    let report = compare_with_analytic(&params, &config, &tolerances)?;
    let text = match format(s, Format::Report)? {
        Format::Report => report.to_text(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json() + "\n",
    };
    let status = match report.verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::OutsideAdiabaticRegime => EXIT_OUTSIDE_REGIME,
    };
    Ok(Output { text, status })
}

fn execute(command: Command) -> Result<(Output, Option<PathBuf>)> {
    let (output, flags): (&OutputFlags, Flags) = match &command {
        Command::Report { params, output } => (output, params.flags()),
        Command::Figure {
            params,
            range,
            output,
            ..
        } => (output, [params.flags(), range.flags()].concat()),
        Command::Sweep {
            params,
            range,
            quantities,
            output,
        } => (
            output,
            [
                params.flags(),
                range.flags(),
                vec![("quantities", quantities.clone())],
            ]
            .concat(),
        ),
        Command::Maximize {
            params,
            quantity,
            bracket,
            tol,
            output,
        } => (
            output,
            [
                params.flags(),
                vec![
                    ("quantity", quantity.clone()),
                    ("bracket", bracket.clone()),
                    ("tol", tol.clone()),
                ],
            ]
            .concat(),
        ),
        Command::Oracle {
            params,
            dims,
            t_end,
            dt,
            leak_tol,
            pop_tol,
            field_tol,
            output,
        } => (
            output,
            [
                params.flags(),
                vec![
                    ("dims", dims.clone()),
                    ("t-end", t_end.clone()),
                    ("dt", dt.clone()),
                    ("leak-tol", leak_tol.clone()),
                    ("pop-tol", pop_tol.clone()),
                    ("field-tol", field_tol.clone()),
                ],
            ]
            .concat(),
        ),
    };
    let flags = [flags, output.flags()].concat();
    let settings = Settings::load(output.config.as_deref(), flags)?;
    let out = settings.str("out").map(PathBuf::from);
    let result = match &command {
        Command::Report { .. } => cmd_report(&settings),
        Command::Figure { id, .. } => cmd_figure(id, &settings),
        Command::Sweep { .. } => cmd_sweep(&settings),
        Command::Maximize { .. } => cmd_maximize(&settings),
        Command::Oracle { .. } => cmd_oracle(&settings),
    }?;
    Ok((result, out))
}

/// Runs the command line `args` (program name first) and returns the exit
/// status. Data goes to `stdout` or the `--out` file, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_ERROR
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command) {
        Ok((output, path)) => {
            let written = match path {
                Some(path) => std::fs::write(&path, &output.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(output.text.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => output.status,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_ERROR
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cascade").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn mixed_styles_are_rejected() {
        let (code, out, err) = run_capture(&[
            "report",
            "--g",
            "0.3",
            "--gamma-c",
            "0.5",
            "--kappa",
            "0.8",
            "--gamma",
            "0.3",
            "--epsilon",
            "0.6",
        ]);
        assert_eq!(code, EXIT_ERROR);
        assert!(out.is_empty());
        assert!(
            err.starts_with("error: configuration error: mixed parameter styles"),
            "{err}"
        );
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = run_capture(&["report", "--bogus"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("--bogus"));
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("oracle"));
    }

    #[test]
    fn invalid_parameter_names_field() {
        let (code, _, err) = run_capture(&[
            "report",
            "--gamma-c",
            "0.5",
            "--kappa",
            "-1",
            "--gamma",
            "0.3",
            "--epsilon",
            "0.6",
        ]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("kappa"), "{err}");
    }

    #[test]
    fn dims_parsing() {
        assert_eq!(parse_dims("16,5,5").unwrap(), (16, 5, 5));
        assert!(parse_dims("16,5").is_err());
        assert!(parse_dims("a,b,c").is_err());
    }

    #[test]
    fn sweep_rejects_fixed_epsilon() {
        let (code, _, err) = run_capture(&["sweep", "--epsilon", "0.6"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("swept variable"), "{err}");
    }

    #[test]
    fn unknown_format_lists_choices() {
        let (code, _, err) = run_capture(&["figure", "fig2", "--format", "xml"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("report, csv, json"), "{err}");
    }
}
