//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::builders::{
    build_cut_hexagon, build_d, build_d_prime, build_hexagon, build_p, build_p_prime, build_rg,
    BuildError, DParams, RgFamily,
};
use crate::count::{count_via_strip, count_weighted, enumerate_tilings};
use crate::formulas::{
    eval_conjecture, eval_d, eval_d_prime, eval_gap_minus_one, eval_hyp, eval_macmahon,
    eval_proctor, eval_proctor_prime_at, eval_proctor_sym_at, eval_rg_formula_at,
    ConjectureVariant, FormulaResult, HypSpec, ProductRule,
};
use crate::identities::{resolve_suite, run_grid, Bounds};
use crate::lattice::Region;
use crate::number::{as_integer, format_exact, parse_exact, ExactNumber};
use crate::svg::{render_svg, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lozenge",
    version,
    about = "Exact lozenge tiling counts, closed forms and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the (weighted) tilings of a region.
    Count {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = Engine::Dp)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate a closed form.
    Formula {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        params: Params,
        /// Product rule for eq-2.2 and eq-2.3.
        #[arg(long, value_enum, default_value_t = Rule::Separate)]
        rule: Rule,
        /// Numerator parameters of a hypergeometric series, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        numer: Vec<String>,
        /// Denominator parameters of a hypergeometric series, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        denom: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check identities on a parameter grid.
    Verify {
        /// Identity ids, comma separated, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = Bounds::default().max_x)]
        max_x: u32,
        #[arg(long, default_value_t = Bounds::default().max_y)]
        max_y: u32,
        #[arg(long, default_value_t = Bounds::default().max_m)]
        max_m: u32,
        #[arg(long, default_value_t = Bounds::default().max_a)]
        max_a: u32,
        #[arg(long, default_value_t = Bounds::default().max_c)]
        max_c: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Draw a region, optionally with one tiling, as SVG.
    Render {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overlay the first tiling found.
        #[arg(long)]
        tiling: bool,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
    },
}

#[derive(Args, Debug, Default)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Hexagon,
    CutHexagon,
    #[value(name = "D")]
    D,
    #[value(name = "Dprime")]
    DPrime,
    #[value(name = "P")]
    P,
    #[value(name = "Pprime")]
    PPrime,
    #[value(name = "R")]
    R,
    #[value(name = "G")]
    G,
    #[value(name = "Rprime")]
    RPrime,
    #[value(name = "Gprime")]
    GPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Profile dynamic program.
    Dp,
    /// Strip forced lozenges, then the dynamic program.
    Strip,
    /// Exhaustive backtracking, capped at 64 triangles.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Rule {
    Separate,
    Joint,
}

/// A message for standard error and the exit code that goes with it.
struct Fail(i32, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

impl From<BuildError> for Fail {
    fn from(e: BuildError) -> Self {
        usage(e.to_string())
    }
}

impl Params {
    fn raw(&self, name: &str) -> Option<&str> {
        match name {
            "a" => self.a.as_deref(),
            "b" => self.b.as_deref(),
            "c" => self.c.as_deref(),
            "x" => self.x.as_deref(),
            "y" => self.y.as_deref(),
            "z" => self.z.as_deref(),
            "m" => self.m.as_deref(),
            "k" => self.k.as_deref(),
            _ => None,
        }
    }

    fn exact(&self, name: &str) -> Result<ExactNumber, Fail> {
        let s = self
            .raw(name)
            .ok_or_else(|| usage(format!("missing --{name}")))?;
        parse_exact(s).map_err(|e| usage(format!("--{name}: {e}")))
    }

    fn int(&self, name: &str) -> Result<i64, Fail> {
        let q = self.exact(name)?;
        as_integer(&q).ok_or_else(|| {
            usage(format!(
                "--{name} must be an integer, got {}",
                format_exact(&q)
            ))
        })
    }

    fn nat(&self, name: &str) -> Result<u32, Fail> {
        let n = self.int(name)?;
        u32::try_from(n)
            .map_err(|_| usage(format!("--{name} must be a nonnegative integer, got {n}")))
    }

    /// The given parameters, for JSON output.
    fn as_json(&self, names: &[&str]) -> Value {
        let map: BTreeMap<&str, &str> = names
            .iter()
            .filter_map(|n| self.raw(n).map(|v| (*n, v)))
            .collect();
        json!(map)
    }
}

fn family_params(f: Family) -> &'static [&'static str] {
    match f {
        Family::Hexagon | Family::CutHexagon | Family::P => &["a", "b", "c"],
        Family::D | Family::DPrime => &["x", "y", "z", "m"],
        Family::PPrime => &["a", "c"],
        Family::R | Family::G | Family::RPrime | Family::GPrime => &["x", "a", "k"],
    }
}

fn family_name(f: Family) -> String {
    f.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn build_family(f: Family, p: &Params) -> Result<Region, Fail> {
    let rg = |fam: RgFamily| -> Result<Region, Fail> {
        Ok(build_rg(fam, p.nat("x")?, p.nat("a")?, p.nat("k")?))
    };
    let d = || -> Result<DParams, Fail> {
        Ok(DParams::new(
            p.nat("x")?,
            p.nat("y")?,
            p.nat("z")?,
            p.nat("m")?,
        )?)
    };
    Ok(match f {
        Family::Hexagon => build_hexagon(p.nat("a")?, p.nat("b")?, p.nat("c")?),
        Family::CutHexagon => build_cut_hexagon(p.nat("a")?, p.nat("b")?, p.nat("c")?)?,
        Family::D => build_d(&d()?),
        Family::DPrime => build_d_prime(&d()?),
        Family::P => build_p(p.nat("a")?, p.nat("b")?, p.nat("c")?)?,
        Family::PPrime => build_p_prime(p.nat("a")?, p.nat("c")?),
        Family::R => rg(RgFamily::R)?,
        Family::G => rg(RgFamily::G)?,
        Family::RPrime => rg(RgFamily::RPrime)?,
        Family::GPrime => rg(RgFamily::GPrime)?,
    })
}

fn to_json_line(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain JSON values serialize")
}

fn cmd_count(
    family: Family,
    p: &Params,
    engine: Engine,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let region = build_family(family, p)?;
    let value = match engine {
        Engine::Dp => count_weighted(&region).value,
        Engine::Strip => count_via_strip(&region).value,
        Engine::Oracle => {
            enumerate_tilings(&region, None, false)
                .map_err(|e| usage(e.to_string()))?
                .result
                .value
        }
    };
    let text = match format {
        Format::Plain => format_exact(&value),
        Format::Json => to_json_line(&json!({
            "family": family_name(family),
            "params": p.as_json(family_params(family)),
            "count": format_exact(&value),
            "count_numerator": value.numer().to_string(),
            "count_denominator": value.denom().to_string(),
            "engine": format!("{engine:?}").to_lowercase(),
        })),
    };
    writeln!(out, "{text}").map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

/// Formula ids understood by `formula`, with the parameters each reads.
pub const FORMULA_IDS: &[(&str, &str)] = &[
    ("eq-2.2", "x y m [--rule]"),
    ("eq-2.3", "x y m [--rule]"),
    ("eq-2.4", "x y z m (x may be a fraction)"),
    ("eq-2.5", "x y z m (x may be a fraction)"),
    ("eq-4.1", "a b c"),
    ("eq-4.2", "a c"),
    ("eq-4.3", "x a k"),
    ("eq-4.4", "x a k"),
    ("eq-4.15", "x y m"),
    ("eq-4.16", "a c"),
    ("eq-4.18", "x a k"),
    ("eq-4.19", "x a k"),
    ("macmahon", "a b c"),
    ("3f2", "--numer ... --denom ..."),
];

fn evaluate_formula(
    id: &str,
    p: &Params,
    rule: Rule,
    numer: &[String],
    denom: &[String],
) -> Result<(FormulaResult, Value), Fail> {
    let rule = match rule {
        Rule::Separate => ProductRule::Separate,
        Rule::Joint => ProductRule::Joint,
    };
    let rg = |fam: RgFamily| -> Result<FormulaResult, Fail> {
        Ok(eval_rg_formula_at(
            fam,
            &p.exact("x")?,
            p.int("a")?,
            p.int("k")?,
        ))
    };
    let names: &[&str] = match id {
        "eq-2.2" | "eq-2.3" | "eq-4.15" => &["x", "y", "m"],
        "eq-2.4" | "eq-2.5" => &["x", "y", "z", "m"],
        "eq-4.1" | "macmahon" => &["a", "b", "c"],
        "eq-4.2" | "eq-4.16" => &["a", "c"],
        "eq-4.3" | "eq-4.4" | "eq-4.18" | "eq-4.19" => &["x", "a", "k"],
        _ => &[],
    };
    let value = match id {
        "eq-2.2" => eval_conjecture(
            ConjectureVariant::D,
            p.int("x")?,
            p.int("y")?,
            p.int("m")?,
            rule,
        ),
        "eq-2.3" => eval_conjecture(
            ConjectureVariant::DPrime,
            p.int("x")?,
            p.int("y")?,
            p.int("m")?,
            rule,
        ),
        "eq-2.4" => eval_d(&p.exact("x")?, p.int("y")?, p.int("z")?, p.int("m")?),
        "eq-2.5" => eval_d_prime(&p.exact("x")?, p.int("y")?, p.int("z")?, p.int("m")?),
        "eq-4.1" => eval_proctor(p.int("a")?, p.int("b")?, p.int("c")?),
        "eq-4.2" => eval_proctor_sym_at(p.int("a")?, &p.exact("c")?),
        "eq-4.16" => eval_proctor_prime_at(p.int("a")?, &p.exact("c")?),
        "eq-4.3" => rg(RgFamily::R)?,
        "eq-4.4" => rg(RgFamily::G)?,
        "eq-4.18" => rg(RgFamily::RPrime)?,
        "eq-4.19" => rg(RgFamily::GPrime)?,
        "eq-4.15" => eval_gap_minus_one(&p.exact("x")?, p.int("y")?, p.int("m")?),
        "macmahon" => eval_macmahon(p.int("a")?, p.int("b")?, p.int("c")?),
        "3f2" => {
            let parse = |v: &[String]| -> Result<Vec<ExactNumber>, Fail> {
                v.iter()
                    .map(|s| parse_exact(s).map_err(|e| usage(format!("series parameter: {e}"))))
                    .collect()
            };
            let (n, d) = (parse(numer)?, parse(denom)?);
            let spec = HypSpec::new(n, d);
            let shown = json!({ "numer": numer, "denom": denom });
            return Ok((eval_hyp(&spec), shown));
        }
        other => {
            let known: Vec<&str> = FORMULA_IDS.iter().map(|(id, _)| *id).collect();
            return Err(usage(format!(
                "unknown formula id `{other}`; known: {}",
                known.join(", ")
            )));
        }
    };
    Ok((value, p.as_json(names)))
}

fn cmd_formula(
    id: &str,
    p: &Params,
    rule: Rule,
    numer: &[String],
    denom: &[String],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let (value, shown) = evaluate_formula(id, p, rule, numer, denom)?;
    let value = value.map_err(|e| usage(format!("{id}: {e}")))?;
    let text = match format {
        Format::Plain => format_exact(&value),
        Format::Json => {
            to_json_line(&json!({ "id": id, "params": shown, "value": format_exact(&value) }))
        }
    };
    writeln!(out, "{text}").map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: &[String],
    bounds: &Bounds,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let ids: Vec<&str> = suite.iter().map(String::as_str).collect();
    resolve_suite(&ids).map_err(|e| {
        usage(format!(
            "{e}; try `all` or one of the ids listed in the README"
        ))
    })?;
    let reports = run_grid(&ids, bounds).map_err(|e| usage(e.to_string()))?;
    let pass = reports.iter().all(|r| r.passed());
    let io = |e: std::io::Error| usage(e.to_string());
    match format {
        Format::Plain => {
            for r in &reports {
                writeln!(out, "{r}").map_err(io)?;
            }
            writeln!(
                out,
                "{}",
                if pass {
                    "all identities hold"
                } else {
                    "FAILED"
                }
            )
            .map_err(io)?;
        }
        Format::Json => {
            let v = json!({ "suite": suite.join(","), "identities": reports, "pass": pass });
            writeln!(out, "{}", to_json_line(&v)).map_err(io)?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_render(
    family: Family,
    p: &Params,
    path: Option<&PathBuf>,
    opts: &RenderOptions,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let region = build_family(family, p)?;
    let svg = render_svg(&region, opts);
    match path {
        Some(path) => {
            std::fs::write(path, svg).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => out
            .write_all(svg.as_bytes())
            .map_err(|e| usage(e.to_string()))?,
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Count {
            family,
            params,
            engine,
            format,
        } => cmd_count(*family, params, *engine, *format, out),
        Command::Formula {
            id,
            params,
            rule,
            numer,
            denom,
            format,
        } => cmd_formula(id, params, *rule, numer, denom, *format, out),
        Command::Verify {
            suite,
            max_x,
            max_y,
            max_m,
            max_a,
            max_c,
            format,
        } => {
            let bounds = Bounds {
                max_x: *max_x,
                max_y: *max_y,
                max_m: *max_m,
                max_a: *max_a,
                max_c: *max_c,
            };
            cmd_verify(suite, &bounds, *format, out)
        }
        Command::Render {
            family,
            params,
            out: path,
            tiling,
            scale,
        } => {
            if !(scale.is_finite() && *scale > 0.0) {
                Err(usage("--scale must be positive"))
            } else {
                cmd_render(
                    *family,
                    params,
                    path.as_ref(),
                    &RenderOptions {
                        scale: *scale,
                        tiling: *tiling,
                    },
                    out,
                )
            }
        }
    };
    match result {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
