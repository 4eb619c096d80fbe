use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use naples_core::*;
use serde_json::{json, Value};

use crate::harness::{self, VerificationReport};
use crate::output::{big, csv_field, poly_json, series_json, series_latex, to_json_line, Format};
use crate::render;

/// Environment variable overriding the factorial-enumeration ceiling.
pub const MAX_N_ENV: &str = "NAPLES_MAX_N";

/// Largest fiber `fiber --list` will print.
const LIST_LIMIT: u64 = 1_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "naples", version, about = "k-Naples parking functions: counts, fibers, area statistics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output encoding
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for enumeration (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Every computation is deterministic; only `none` is accepted
    #[arg(long, global = true, default_value = "none", value_parser = ["none"])]
    pub seed: String,
    /// Ceiling on n for factorial-time enumeration (overrides NAPLES_MAX_N)
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Include wall-clock timings in the verification report
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Recursive,
    Permsum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderKind {
    Tikz,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of k-Naples parking functions of length n
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Size (or members) of the fiber of a permutation under the outcome map
    Fiber {
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        list: bool,
    },
    /// Fiber-size generating function F_n, or G_n with --log
    Gf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        log: bool,
    },
    /// Distribution of area_k over PF_{n,k}
    Qdist {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// area_k of a preference
    Area {
        #[arg(long)]
        pref: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Labeled Dyck path of a parking function, or the k-lattice path of a decreasing preference with --k
    Path {
        #[arg(long)]
        pref: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        render: Option<RenderKind>,
    },
    /// Run every cross-check up to n-max
    Verify {
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Resource(String),
}

impl From<NaplesError> for Failure {
    fn from(e: NaplesError) -> Self {
        match e {
            NaplesError::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

/// Output and exit code of one invocation.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn limit(global: &GlobalOpts) -> Result<EnumerationLimit, Failure> {
    if let Some(m) = global.max_n {
        return Ok(EnumerationLimit(m));
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(EnumerationLimit)
            .map_err(|_| Failure::Invalid(format!("{MAX_N_ENV}={v:?} is not a number"))),
        Err(_) => Ok(EnumerationLimit::DEFAULT),
    }
}

fn scalar(format: Format, header: &[&str], fields: Vec<(&str, Value)>, latex: String) -> String {
    match format {
        Format::Json => to_json_line(&Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())),
        Format::Csv => {
            let row: Vec<String> = fields
                .iter()
                .map(|(_, v)| match v {
                    Value::String(s) => csv_field(s),
                    other => csv_field(&other.to_string()),
                })
                .collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Latex => format!("{latex}\n"),
    }
}

fn run_command(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    let format = g.format;
    match &cli.command {
        Command::Count { n, k, method } => {
            let kp = NaplesParameter(*k);
            let value = match method {
                Method::Closed if *k != 0 => {
                    return Err(Failure::Invalid("the closed form counts k = 0 only".into()))
                }
                Method::Closed => count_pf_closed(*n),
                Method::Recursive => count_npf_recursive(*n, kp),
                Method::Permsum => count_npf_permsum_with(*n, kp, limit(g)?)?,
            };
            let method_name = method.to_possible_value().unwrap().get_name().to_string();
            Ok(Outcome::ok(scalar(
                format,
                &["n", "k", "method", "count"],
                vec![
                    ("n", json!(n)),
                    ("k", json!(k)),
                    ("method", json!(method_name)),
                    ("count", big(&value)),
                ],
                value.to_string(),
            )))
        }
        Command::Fiber { sigma, k, list } => {
            let sigma: Permutation = sigma.parse()?;
            let kp = NaplesParameter(*k);
            let size = fiber_size(&sigma, kp);
            let members: Option<Vec<String>> = if *list {
                if size > num_bigint::BigUint::from(LIST_LIMIT) {
                    return Err(Failure::Resource(format!(
                        "fiber has {size} members, above the listing limit {LIST_LIMIT}"
                    )));
                }
                Some(fiber_members(&sigma, kp).map(|p| p.to_string()).collect())
            } else {
                None
            };
            let profile = ell_profile(&sigma, kp);
            let text = match format {
                Format::Json => {
                    let mut obj = json!({
                        "sigma": sigma.to_string(),
                        "k": k,
                        "ell": profile.ell_k,
                        "size": big(&size),
                    });
                    if let Some(m) = &members {
                        obj["members"] = json!(m);
                    }
                    to_json_line(&obj)
                }
                Format::Csv => match &members {
                    Some(m) => {
                        let mut s = "member\n".to_string();
                        for p in m {
                            s.push_str(&csv_field(p));
                            s.push('\n');
                        }
                        s
                    }
                    None => format!("sigma,k,size\n{},{k},{size}\n", csv_field(&sigma.to_string())),
                },
                Format::Latex => match &members {
                    Some(m) => format!("{}\n", m.join(", ")),
                    None => format!("{size}\n"),
                },
            };
            Ok(Outcome::ok(text))
        }
        Command::Gf { n, log } => {
            let series = if *log {
                log_gf(*n)
            } else {
                fiber_gf_direct_with(*n, limit(g)?)?
            };
            let text = match format {
                Format::Json => to_json_line(&json!({
                    "n": n,
                    "series": if *log { "G" } else { "F" },
                    "terms": series_json(&series),
                })),
                Format::Csv => {
                    let mut s = "key,coeff\n".to_string();
                    for (key, c) in series.iter() {
                        s.push_str(&format!("{key},{c}\n"));
                    }
                    s
                }
                Format::Latex => format!("{}\n", series_latex(&series, *log)),
            };
            Ok(Outcome::ok(text))
        }
        Command::Qdist { n, k } => {
            let poly = area_distribution_with(*n, NaplesParameter(*k), limit(g)?)?;
            let text = match format {
                Format::Json => to_json_line(&json!({ "n": n, "k": k, "distribution": poly_json(&poly) })),
                Format::Csv => {
                    let mut s = "exponent,coeff\n".to_string();
                    for (e, c) in poly.coeffs().iter().enumerate() {
                        s.push_str(&format!("{e},{c}\n"));
                    }
                    s
                }
                Format::Latex => format!("{}\n", poly.to_latex()),
            };
            Ok(Outcome::ok(text))
        }
        Command::Area { pref, k } => {
            let p: ParkingPreference = pref.parse()?;
            let value = area_k(&p, NaplesParameter(*k))?;
            Ok(Outcome::ok(scalar(
                format,
                &["pref", "k", "area"],
                vec![("pref", json!(p.to_string())), ("k", json!(k)), ("area", json!(value))],
                value.to_string(),
            )))
        }
        Command::Path { pref, k, render } => {
            let p: ParkingPreference = pref.parse()?;
            let (path, kind, bound) = match k {
                Some(k) => (decreasing_to_klattice(&p, NaplesParameter(*k))?, "k-lattice", *k),
                None => (pf_to_labeled_dyck(&p)?, "labeled-dyck", 0),
            };
            if let Some(r) = render {
                return Ok(Outcome::ok(match r {
                    RenderKind::Tikz => render::tikz(&path, bound),
                    RenderKind::Svg => render::svg(&path, bound),
                }));
            }
            let text = match format {
                Format::Json => {
                    let mut obj = json!({
                        "pref": p.to_string(),
                        "kind": kind,
                        "k": bound,
                        "steps": path.word(),
                        "vertices": path.vertices(),
                    });
                    if let Some(l) = &path.labels {
                        obj["labels"] = json!(l);
                    }
                    to_json_line(&obj)
                }
                Format::Csv => {
                    let labels = path
                        .labels
                        .as_ref()
                        .map(|l| l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                        .unwrap_or_default();
                    format!("kind,k,steps,labels\n{kind},{bound},{},{}\n", path.word(), csv_field(&labels))
                }
                Format::Latex => render::tikz(&path, bound),
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify { n_max } => {
            let report = harness::verify(*n_max)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok(Outcome {
                text: report_text(&report, format, g.timings),
                code,
            })
        }
    }
}

pub fn report_text(report: &VerificationReport, format: Format, timings: bool) -> String {
    match format {
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let mut obj = json!({
                        "name": c.name,
                        "range": c.range,
                        "passed": c.passed,
                        "counterexample": c.counterexample,
                    });
                    if timings {
                        obj["elapsed_ms"] = json!(c.elapsed.as_millis() as u64);
                    }
                    obj
                })
                .collect();
            to_json_line(&json!({ "n_max": report.n_max, "passed": report.passed(), "checks": checks }))
        }
        Format::Csv => {
            let mut s = String::from(if timings {
                "name,range,passed,counterexample,elapsed_ms\n"
            } else {
                "name,range,passed,counterexample\n"
            });
            for c in &report.checks {
                s.push_str(&format!(
                    "{},{},{},{}",
                    csv_field(&c.name),
                    csv_field(&c.range),
                    c.passed,
                    csv_field(c.counterexample.as_deref().unwrap_or(""))
                ));
                if timings {
                    s.push_str(&format!(",{}", c.elapsed.as_millis()));
                }
                s.push('\n');
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{l|l|l}\ncheck & range & result \\\\\n\\hline\n");
            for c in &report.checks {
                let result = if c.passed { "pass" } else { "FAIL" };
                s.push_str(&format!("\\texttt{{{}}} & ${}$ & {result} \\\\\n", c.name, c.range));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    }
}

/// Parses `args` (program name first), runs the command, writes its output,
/// and returns the process exit code.
pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INVALID
                }
            };
        }
    };
    let result = match cli.global.threads {
        Some(0) => Err(Failure::Invalid("--threads must be positive".into())),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| run_command(&cli)),
            Err(e) => Err(Failure::Invalid(format!("cannot start {t} threads: {e}"))),
        },
        None => run_command(&cli),
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
    }
}
