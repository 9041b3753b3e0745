mod plot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cusp_norm::families::{fig8_dataset, pretzel_dataset, twobridge_pair, twobridge_splits};
use cusp_norm::io;
use cusp_norm::rational::{decimal, format_rational, parse_rational, to_f64};
use cusp_norm::verify::{self, Check};
use cusp_norm::{ManifoldData, Rational, Slope, Status, SurfaceData, VerifyReport};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cusp-norm", version, about = "Slope lengths and Culler-Shalen norms on a cusp")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact values of one quantity.
    Eval {
        quantity: Quantity,
        #[command(flatten)]
        input: Input,
    },
    /// Run a checker and print its report.
    Verify {
        statement: Statement,
        #[command(flatten)]
        input: Input,
        /// Sweep slopes with |p| <= N and 1 <= q <= N plus the meridian.
        #[arg(long, value_name = "N")]
        range: Option<u32>,
    },
    /// Emit a built-in dataset.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Draw the norm ball of radius |m| against a length ellipse.
    Plot {
        kind: PlotKind,
        #[arg(short, long = "manifold", value_name = "PATH")]
        manifold: PathBuf,
        #[arg(long, value_name = "FILE.svg")]
        out: PathBuf,
        /// Squared length of the ellipse; defaults to 9/4 * |m|^2.
        #[arg(long, value_parser = parse_level)]
        level: Option<Rational>,
    },
    /// Summary of every checker on a manifold.
    Report {
        #[arg(short, long = "manifold", value_name = "PATH")]
        manifold: PathBuf,
        #[arg(long, value_name = "N", default_value_t = 50)]
        range: u32,
    },
}

#[derive(Args)]
struct Input {
    #[arg(short, long = "manifold", value_name = "PATH")]
    manifold: Option<PathBuf>,
    #[arg(short = 'r', long = "slope", value_name = "P/Q", allow_hyphen_values = true, value_parser = parse_slope)]
    slopes: Vec<Slope>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Length,
    Norm,
    Distance,
}

#[derive(Clone, Copy, ValueEnum)]
enum Statement {
    Thm1,
    Thm2,
    Thm3,
    PropLength,
    PropNorm,
    Prop4,
    Prop6,
    CorUbdiam,
    CorEuler,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    UnitBall,
}

#[derive(Subcommand)]
enum Family {
    /// Figure-eight knot exterior.
    Fig8 {
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// (-2, 3, n) pretzel knot exterior.
    Pretzel {
        #[arg(long, value_name = "K")]
        n: i64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Checkerboard pair checks for every split of a two-bridge knot.
    Twobridge {
        #[arg(long, value_name = "C")]
        crossings: i64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn parse_slope(text: &str) -> Result<Slope, String> {
    text.parse().map_err(|e: cusp_norm::Error| e.to_string())
}

fn parse_level(text: &str) -> Result<Rational, String> {
    let level = parse_rational(text).map_err(|e| e.to_string())?;
    if level <= Rational::from_integer(0.into()) {
        return Err(format!("level {text} must be positive"));
    }
    Ok(level)
}

/// What a command produced: text lines, the structured form, and whether
/// every check passed.
struct Output {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Output {
    fn plain(text: String, json: serde_json::Value) -> Self {
        Output { text, json, ok: true }
    }
}

type CmdResult = Result<Output, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("json renders")
                ),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Eval { quantity, input } => eval(quantity, &input),
        Command::Verify {
            statement,
            input,
            range,
        } => {
            let m = load(input.manifold.as_deref())?;
            let checks = verify_statement(statement, &m, &input.slopes, range).map_err(|e| e.to_string())?;
            Ok(render_checks(checks))
        }
        Command::Family { family } => emit_family(family),
        Command::Plot {
            kind: PlotKind::UnitBall,
            manifold,
            out,
            level,
        } => {
            let m = load(Some(&manifold))?;
            let svg = plot::unit_ball_svg(&m, level.as_ref())?;
            write(&out, &svg)?;
            Ok(Output::plain(
                format!("wrote {}\n", out.display()),
                json!({ "wrote": out.display().to_string() }),
            ))
        }
        Command::Report { manifold, range } => report(&load(Some(&manifold))?, range),
    }
}

fn load(path: Option<&Path>) -> Result<ManifoldData, String> {
    let path = path.ok_or("this command needs -m/--manifold")?;
    io::load(path).map_err(|e| e.to_string())
}

fn write(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn one_slope(slopes: &[Slope]) -> Result<Slope, String> {
    match slopes {
        [r] => Ok(*r),
        _ => Err(format!("expected one -r/--slope, got {}", slopes.len())),
    }
}

fn eval(quantity: Quantity, input: &Input) -> CmdResult {
    match quantity {
        Quantity::Distance => {
            let [r, s] = input.slopes[..] else {
                return Err(format!("expected two -r/--slope, got {}", input.slopes.len()));
            };
            let d = r.distance(&s);
            Ok(Output::plain(
                format!("{d}\n"),
                json!({ "slopes": [r.to_string(), s.to_string()], "distance": d.to_string() }),
            ))
        }
        Quantity::Length => {
            let r = one_slope(&input.slopes)?;
            let m = load(input.manifold.as_deref())?;
            let cusp = m.cusp().ok_or("manifold has no cusp data")?;
            let sq = cusp.squared_length(&r);
            let length = decimal(to_f64(&sq).sqrt());
            Ok(Output::plain(
                format!("{} (length {length})\n", format_rational(&sq)),
                json!({ "slope": r.to_string(), "squared_length": format_rational(&sq), "length": length }),
            ))
        }
        Quantity::Norm => {
            let r = one_slope(&input.slopes)?;
            let m = load(input.manifold.as_deref())?;
            let value = match (m.norm(), r.is_meridian()) {
                (Some(norm), _) => norm.evaluate(&r),
                (None, true) => m.meridian_norm().ok_or("manifold has no norm data")?,
                (None, false) => return Err("manifold has no norm data".into()),
            };
            Ok(Output::plain(
                format!("{value}\n"),
                json!({ "slope": r.to_string(), "norm": value.to_string() }),
            ))
        }
    }
}

/// Labelled checks; the label is shown only when several checks are printed.
type Labelled = Vec<(String, Check)>;

fn pair(slopes: &[Slope], m: &ManifoldData) -> cusp_norm::Result<(Slope, Slope)> {
    match slopes {
        [r1, r2] => Ok((*r1, *r2)),
        [] => verify::extremal_integral_pair(m.boundary_slopes()),
        _ => Err(cusp_norm::Error::InvalidParameter(format!(
            "expected two -r/--slope, got {}",
            slopes.len()
        ))),
    }
}

fn surface_at<'a>(m: &'a ManifoldData, r: &Slope) -> cusp_norm::Result<&'a SurfaceData> {
    m.surfaces()
        .iter()
        .find(|s| s.slope == *r)
        .ok_or_else(|| cusp_norm::Error::InvalidParameter(format!("no surface with slope {r}")))
}

fn surface_pairs<'a>(
    m: &'a ManifoldData,
    slopes: &[Slope],
) -> cusp_norm::Result<Vec<(&'a SurfaceData, &'a SurfaceData)>> {
    match slopes {
        [r1, r2] => Ok(vec![(surface_at(m, r1)?, surface_at(m, r2)?)]),
        [] => {
            let s = m.surfaces();
            Ok((0..s.len())
                .flat_map(|i| (i + 1..s.len()).map(move |j| (&s[i], &s[j])))
                .filter(|(a, b)| a.slope != b.slope)
                .collect())
        }
        _ => Err(cusp_norm::Error::InvalidParameter(format!(
            "expected two -r/--slope, got {}",
            slopes.len()
        ))),
    }
}

fn report_only(label: String, report: VerifyReport) -> (String, Check) {
    (label, Check::Report(report))
}

fn verify_statement(
    statement: Statement,
    m: &ManifoldData,
    slopes: &[Slope],
    range: Option<u32>,
) -> cusp_norm::Result<Labelled> {
    let need = |what: &str| cusp_norm::Error::InvalidParameter(format!("manifold has no {what} data"));
    Ok(match statement {
        Statement::Thm1 => match (slopes, range) {
            ([], range) => vec![(
                "thm1".into(),
                Check::Sweep(verify::sweep_norm_ge_length(m, range.unwrap_or(50))?),
            )],
            (slopes, _) => slopes
                .iter()
                .map(|r| report_only(r.to_string(), verify::verify_norm_ge_length(m, r)))
                .collect(),
        },
        Statement::Thm2 => match range {
            Some(n) if slopes.is_empty() => {
                vec![("thm2".into(), Check::Sweep(verify::sweep_thm_length_norm(m, n)?))]
            }
            _ => {
                let (r1, r2) = pair(slopes, m)?;
                vec![report_only(
                    format!("({r1}, {r2})"),
                    verify::verify_thm_length_norm(m, &r1, &r2)?,
                )]
            }
        },
        Statement::Thm3 => {
            let targets: Vec<Slope> = match slopes {
                [] => m.boundary_slopes().finite().copied().collect(),
                s => s.to_vec(),
            };
            targets
                .iter()
                .map(|r| Ok(report_only(r.to_string(), verify::verify_thm_diam(m, r)?)))
                .collect::<cusp_norm::Result<_>>()?
        }
        Statement::PropLength => {
            let cusp = m.cusp().ok_or_else(|| need("cusp"))?;
            let (r1, r2) = pair(slopes, m)?;
            vec![report_only(
                format!("({r1}, {r2})"),
                verify::verify_prop_length(cusp, &r1, &r2)?,
            )]
        }
        Statement::PropNorm => {
            let norm = m.norm().ok_or_else(|| need("norm"))?;
            let (r1, r2) = pair(slopes, m)?;
            vec![report_only(
                format!("({r1}, {r2})"),
                verify::verify_prop_norm(norm, &r1, &r2, m.boundary_slopes())?,
            )]
        }
        Statement::Prop4 => vec![report_only("prop4".into(), verify::prop4_hypothesis(m))],
        Statement::Prop6 => {
            let pairs = surface_pairs(m, slopes)?;
            if pairs.is_empty() {
                vec![report_only(
                    "prop6".into(),
                    VerifyReport::not_applicable(verify::PROP6, "needs two surfaces with distinct slopes"),
                )]
            } else {
                pairs
                    .into_iter()
                    .map(|(a, b)| {
                        report_only(format!("({}, {})", a.slope, b.slope), verify::prop6_condition(a, b))
                    })
                    .collect()
            }
        }
        Statement::CorUbdiam => vec![report_only("cor-ubdiam".into(), verify::verify_cor_ubdiam(m))],
        Statement::CorEuler => {
            let pairs: Vec<_> = surface_pairs(m, slopes)?
                .into_iter()
                .filter(|(a, b)| slopes.len() == 2 || (a.slope.is_finite() && b.slope.is_finite() && a.euler < 0 && b.euler < 0))
                .collect();
            if pairs.is_empty() {
                vec![report_only(
                    "cor-euler".into(),
                    VerifyReport::not_applicable(verify::COR_EULER, "needs two finite-slope surfaces with negative Euler characteristic"),
                )]
            } else {
                pairs
                    .into_iter()
                    .map(|(a, b)| {
                        Ok(report_only(
                            format!("({}, {})", a.slope, b.slope),
                            verify::corollary_euler(&a.slope, &b.slope, a, b)?,
                        ))
                    })
                    .collect::<cusp_norm::Result<_>>()?
            }
        }
        Statement::All => verify::verify_all(m, range.unwrap_or(50))?
            .into_iter()
            .map(|c| (c.statement().to_string(), c))
            .collect(),
    })
}

fn render_checks(checks: Labelled) -> Output {
    let ok = checks.iter().all(|(_, c)| !c.status().is_failure());
    let text = match checks.as_slice() {
        [(_, only)] => format!("{only}\n"),
        many => {
            let width = many.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
            many.iter()
                .map(|(label, c)| format!("{label:<width$}  {c}\n"))
                .collect()
        }
    };
    let json = match checks.as_slice() {
        [(_, only)] => only.to_json(),
        many => serde_json::Value::Array(
            many.iter()
                .map(|(label, c)| {
                    let mut value = c.to_json();
                    value["label"] = json!(label);
                    value
                })
                .collect(),
        ),
    };
    Output { text, json, ok }
}

fn emit_family(family: Family) -> CmdResult {
    let (out, rendered, ok) = match family {
        Family::Fig8 { out } => (out, io::to_json_string(&fig8_dataset()), true),
        Family::Pretzel { n, out } => {
            let m = pretzel_dataset(n).map_err(|e| e.to_string())?;
            (out, io::to_json_string(&m), true)
        }
        Family::Twobridge { crossings, out } => {
            cusp_norm::FamilySpec::TwoBridge {
                crossings,
                split: None,
            }
            .validate()
            .map_err(|e| e.to_string())?;
            let checks: Labelled = twobridge_splits(crossings)
                .into_iter()
                .map(|(chi1, chi2)| {
                    twobridge_pair(crossings, chi1, chi2)
                        .map(|r| report_only(format!("chi = ({chi1}, {chi2})"), r))
                })
                .collect::<cusp_norm::Result<_>>()
                .map_err(|e| e.to_string())?;
            let rendered = render_checks(checks);
            let text = serde_json::to_string_pretty(&rendered.json).expect("json renders") + "\n";
            (out, text, rendered.ok)
        }
    };
    let json: serde_json::Value = serde_json::from_str(&rendered).expect("emitted json parses");
    match out {
        Some(path) => {
            write(&path, &rendered)?;
            Ok(Output {
                text: format!("wrote {}\n", path.display()),
                json: json!({ "wrote": path.display().to_string() }),
                ok,
            })
        }
        None => Ok(Output {
            text: rendered,
            json,
            ok,
        }),
    }
}

fn report(m: &ManifoldData, range: u32) -> CmdResult {
    let mut lines = vec![format!("manifold: {}", m.name())];
    let mut summary = serde_json::Map::new();
    summary.insert("name".into(), json!(m.name()));
    if let Some(cusp) = m.cusp() {
        let (sys, at) = cusp.systole_squared();
        lines.push(format!(
            "cusp: gram ({}, {}, {}){}, area^2 {}, systole^2 {} at {at}",
            cusp.g_mm(),
            cusp.g_ml(),
            cusp.g_ll(),
            if cusp.is_maximal() { " maximal" } else { "" },
            cusp.area_squared(),
            sys
        ));
        summary.insert(
            "cusp".into(),
            json!({
                "area_squared": format_rational(&cusp.area_squared()),
                "systole_squared": format_rational(&sys),
                "systole_slope": at.to_string(),
                "maximal": cusp.is_maximal(),
            }),
        );
    }
    if let Some(norm) = m.norm() {
        let terms: Vec<String> = norm
            .terms()
            .iter()
            .map(|t| format!("{}*D(r, {})", t.weight, t.slope))
            .collect();
        let (min, at) = norm.min_norm_nontrivial();
        lines.push(format!(
            "norm: {}; |m| = {}, minimal norm {min} at {at}",
            terms.join(" + "),
            norm.meridian_norm()
        ));
        summary.insert(
            "norm".into(),
            json!({
                "meridian_norm": norm.meridian_norm().to_string(),
                "minimal_norm": min.to_string(),
                "minimal_slope": at.to_string(),
            }),
        );
    } else if let Some(c) = m.meridian_norm_certificate() {
        lines.push(format!("norm: |m| = {c} (certificate)"));
        summary.insert("norm".into(), json!({ "meridian_norm": c.to_string() }));
    }
    let boundary: Vec<String> = m.boundary_slopes().slopes().iter().map(ToString::to_string).collect();
    let diam = m
        .boundary_slopes()
        .diam()
        .map(|d| format_rational(&d))
        .unwrap_or_else(|_| "undefined".into());
    lines.push(format!("boundary slopes: {}; diam {diam}", boundary.join(", ")));
    summary.insert("boundary_slopes".into(), json!(boundary));
    summary.insert("diam".into(), json!(diam));

    let checks = verify::verify_all(m, range).map_err(|e| e.to_string())?;
    let rendered = render_checks(
        checks
            .into_iter()
            .map(|c| (c.statement().to_string(), c))
            .collect(),
    );
    let checks_json = match rendered.json {
        serde_json::Value::Array(items) => items,
        single => vec![single],
    };
    summary.insert("checks".into(), serde_json::Value::Array(checks_json));
    let mut text = lines.join("\n") + "\n\n";
    text.push_str(&rendered.text);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let failures = summary["checks"]
        .as_array()
        .map(|a| a.iter().filter(|c| c["status"] == json!(Status::Fails)).count())
        .unwrap_or(0);
    text.push_str(&format!("\n{failures} failing\n"));
    Ok(Output {
        text,
        json: serde_json::Value::Object(summary),
        ok: rendered.ok,
    })
}
