//! The `antipode` command line.
//!
//! Exit codes: 0 when every checked equality holds, 1 on a verification
//! failure, 2 on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::expansion::{enumerate_tuples, TableauTuple};
use crate::involution::{fixed_to_rspp, is_fixed, phi, OrbitKind, OrbitReport};
use crate::polynomials::SignConvention;
use crate::render::render_tuple;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::enumerate_rspp;
use crate::verify::{sweep, SweepEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "antipode",
    version,
    about = "Verify the Schur antipode through its sign-reversing involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the full cancellation ladder for one shape.
    Verify(VerifyArgs),
    /// Verify every shape λ/μ with |λ| up to a bound.
    Sweep(SweepArgs),
    /// Apply the involution once to a tuple read from a JSON file.
    Orbit(FileArgs),
    /// List the fixed points of the involution and their RSPP images.
    Fixed(ShapeArgs),
    /// Draw a tuple with block indices in the cell corners.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    #[default]
    Ascii,
    Json,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    /// Outer partition, comma separated (e.g. `4,3`).
    #[arg(long)]
    lambda: Partition,
    /// Inner partition; the empty string is the empty partition.
    #[arg(long, default_value = "")]
    mu: Partition,
    /// Number of variables; entries range over 1..=N.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    vars: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Drop the (−1)^k sign from the Takeuchi sum. The ladder must then fail.
    #[arg(long, hide = true)]
    flip_sign: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Largest |λ| to check.
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    /// Number of variables; entries range over 1..=N.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    vars: u32,
    #[arg(long, hide = true)]
    flip_sign: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct FileArgs {
    /// Tuple JSON file.
    file: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Tuple JSON file.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
    format: RenderFormat,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };

    let (out_path, result) = match &cli.command {
        Command::Verify(a) => (a.shape.output.out.clone(), cmd_verify(a)),
        Command::Sweep(a) => (a.output.out.clone(), cmd_sweep(a)),
        Command::Orbit(a) => (a.output.out.clone(), cmd_orbit(a)),
        Command::Fixed(a) => (a.output.out.clone(), cmd_fixed(a)),
        Command::Render(a) => (a.out.clone(), cmd_render(a)),
    };
    match result {
        Ok((text, code)) => {
            if let Err(e) = emit(out_path.as_deref(), &text, stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn shape_of(a: &ShapeArgs) -> std::result::Result<SkewShape, Failure> {
    SkewShape::new(a.lambda.clone(), a.mu.clone()).map_err(|e| Failure::usage(e.to_string()))
}

fn internal(e: crate::Error) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: e.to_string(),
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report types serialize");
    s.push('\n');
    s
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn convention(flip: bool) -> SignConvention {
    if flip {
        SignConvention::Constant
    } else {
        SignConvention::Alternating
    }
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let shape = shape_of(&a.shape)?;
    let (entry, ladder) =
        SweepEntry::verify(&shape, a.shape.vars as usize, convention(a.flip_sign)).map_err(internal)?;
    let text = match a.shape.output.format {
        Format::Json => json_line(&entry),
        Format::Text => {
            let mut s = format!("shape {shape} in {} variables\n", a.shape.vars);
            s += &format!(
                "  tuples: {}, fixed points: {}\n",
                ladder.tuple_count, ladder.fixed_count
            );
            s += &format!("  takeuchi expansion : {}\n", ladder.takeuchi);
            s += &format!("  signed tuple sum   : {}\n", ladder.tuple_sum);
            s += &format!("  fixed-point sum    : {}\n", ladder.fixed_sum);
            s += &format!("  signed rspp sum    : {}\n", ladder.rspp_sum);
            s += &format!("  closed form        : {}\n", ladder.closed_form);
            let failures = ladder.failures();
            if failures.is_empty() {
                s += "identity holds\n";
            } else {
                s += &format!("identity FAILS: {}\n", failures.join(", "));
            }
            s
        }
    };
    Ok((text, verdict(entry.identity_ok)))
}

fn cmd_sweep(a: &SweepArgs) -> Outcome {
    let report = sweep(a.max_size, a.vars as usize, convention(a.flip_sign)).map_err(internal)?;
    let text = match a.output.format {
        Format::Json => report.entries.iter().map(json_line).collect(),
        Format::Text => {
            let mut s = String::new();
            for e in &report.entries {
                s += &format!(
                    "{}/{} N={} tuples={} fixed={} {} {}ms\n",
                    e.lambda,
                    e.mu,
                    e.num_vars,
                    e.tuple_count,
                    e.fixed_count,
                    if e.identity_ok { "ok" } else { "FAIL" },
                    e.elapsed_ms
                );
            }
            let failed = report.failures().count();
            s += &format!("{} shapes checked, {} failed\n", report.entries.len(), failed);
            s
        }
    };
    Ok((text, verdict(report.all_ok())))
}

fn read_tuple(path: &Path) -> std::result::Result<TableauTuple, Failure> {
    let data = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&data).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn cmd_orbit(a: &FileArgs) -> Outcome {
    let t = read_tuple(&a.file)?;
    let report = OrbitReport::of(&t);
    // the involution must send the image back
    let ok = phi(&report.output) == t;
    let text = match a.output.format {
        Format::Json => json_line(&report),
        Format::Text => {
            let mut s = String::new();
            match (report.kind, report.cell) {
                (OrbitKind::Fixed, _) | (_, None) => s += "cell(T) = none; T is fixed\n",
                (kind, Some(c)) => {
                    let word = if kind == OrbitKind::Split { "split" } else { "merge" };
                    s += &format!("cell(T) = {c}, {word}\n");
                }
            }
            s += "input:\n";
            s += &render_tuple(&report.input);
            s += "output:\n";
            s += &render_tuple(&report.output);
            s
        }
    };
    Ok((text, verdict(ok)))
}

fn cmd_fixed(a: &ShapeArgs) -> Outcome {
    let shape = shape_of(a)?;
    let tuples = enumerate_tuples(shape.inner(), shape.outer(), a.vars).map_err(internal)?;
    let mut lines = Vec::new();
    let mut count = 0usize;
    let mut text = String::new();
    for t in tuples.filter(is_fixed) {
        count += 1;
        let rspp = fixed_to_rspp(&t).map_err(internal)?;
        match a.output.format {
            Format::Json => lines.push(json_line(&serde_json::json!({ "tuple": t, "rspp": rspp }))),
            Format::Text => {
                let rows: Vec<String> = rspp.rows().iter().map(|r| format!("{r:?}")).collect();
                let idx: Vec<String> = t.concat().index_rows().iter().map(|r| format!("{r:?}")).collect();
                text += &format!("#{count}: rspp {} blocks {}\n", rows.join(" "), idx.join(" "));
            }
        }
    }
    let rspp_count = enumerate_rspp(&shape, a.vars).count();
    match a.output.format {
        Format::Json => {
            text = lines.concat();
            text += &json_line(&serde_json::json!({ "count": count, "rspp_count": rspp_count }));
        }
        Format::Text => text += &format!("{count} fixed points, {rspp_count} row-strict plane partitions\n"),
    }
    Ok((text, verdict(count == rspp_count)))
}

fn cmd_render(a: &RenderArgs) -> Outcome {
    let t = read_tuple(&a.file)?;
    let text = match a.format {
        RenderFormat::Ascii => render_tuple(&t),
        RenderFormat::Json => json_line(&t),
    };
    Ok((text, EXIT_OK))
}
