//! The `artin` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use artin_core::builtin;
use artin_core::galois::DEFAULT_VALIDATION_BOUND;
use artin_core::lseries::{artin_prefix, dedekind_zeta_prefix_direct, DirichletPrefix, RelativeSetup, DEFAULT_BOUND};
use artin_core::mapper::PrimeMapper;
use artin_core::verifier::{run_builtin, RunOptions, S3Remark, StatementId, BUILTIN_NAMES, DEFAULT_ZETA_BOUND};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bundle::Bundle;
use crate::parallel::RayonMapper;
use crate::report::{render, Format, Outcome, Summary, EXIT_INPUT, EXIT_OK};

#[derive(Parser)]
#[command(name = "artin", version, about = "Check statements about Artin L-series on concrete Galois extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks: a statement id or `all` over a bundle, or `builtin:s3` / `builtin:octic`.
    Run {
        target: String,
        bundle: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Bound for the octic zeta-function comparisons.
        #[arg(long)]
        zeta_bound: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Write a Dirichlet coefficient table, one `n: a_n` line per index.
    ///
    /// Selections: `builtin:s3/zeta`, `builtin:s3/chi2`, `builtin:s3/chi3`,
    /// `builtin:octic/zeta`, `builtin:octic/zeta48`, `builtin:octic/chi1`,
    /// `builtin:octic/chi2`, or with a bundle `setup:<name>` and `zeta:<polynomial>`.
    ExportPrefix {
        selection: String,
        bundle: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Coefficient bound B (default 1000, or the bundle's `bound`).
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_VALIDATION_BOUND)]
    validation_bound: u64,
    /// Worker threads; 0 uses every core. Never changes the output.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Run { target, bundle, format, zeta_bound, common } => {
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Structured => Format::Structured,
            };
            run(&target, bundle.as_deref(), format, zeta_bound, &common)
        }
        Command::ExportPrefix { selection, bundle, common } => export_prefix(&selection, bundle.as_deref(), &common),
    }
}

fn fail(message: impl std::fmt::Display) -> i32 {
    eprintln!("artin: {message}");
    EXIT_INPUT
}

fn mapper(threads: usize) -> Result<RayonMapper, i32> {
    RayonMapper::new(threads).map_err(|e| fail(format!("cannot start thread pool: {e}")))
}

fn load_bundle(path: &Path, validation_bound: u64, mapper: &dyn PrimeMapper) -> Result<Bundle, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display())))?;
    Bundle::parse(&text, validation_bound, mapper).map_err(|errors| {
        for e in &errors {
            eprintln!("artin: {}:{e}", path.display());
        }
        EXIT_INPUT
    })
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), i32> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| fail(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(fail)
        }
    }
}

fn run(target: &str, bundle: Option<&Path>, format: Format, zeta_bound: Option<usize>, common: &Common) -> i32 {
    let start = Instant::now();
    let mapper = match mapper(common.threads) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let mut opts = RunOptions {
        bound: common.bound.unwrap_or(DEFAULT_BOUND),
        zeta_bound: zeta_bound.unwrap_or(DEFAULT_ZETA_BOUND),
        validation_bound: common.validation_bound,
    };
    let outcomes = if let Some(name) = target.strip_prefix("builtin:") {
        if !BUILTIN_NAMES.contains(&name) {
            return fail(format!("unknown builtin '{name}' (expected one of {})", BUILTIN_NAMES.join(", ")));
        }
        if bundle.is_some() {
            return fail("a builtin target takes no bundle");
        }
        match run_builtin(name, &opts, None, &mapper) {
            Ok(v) => v.into_iter().map(Outcome::Verdict).collect::<Vec<_>>(),
            Err(e) => return fail(e),
        }
    } else {
        let filter = match target {
            "all" => None,
            id => match StatementId::parse(id) {
                Some(s) => Some(s),
                None => return fail(format!("unknown statement id '{id}'; try `artin run --help`")),
            },
        };
        let Some(path) = bundle else {
            return fail(format!("`run {target}` needs a bundle file (or use builtin:s3 / builtin:octic)"));
        };
        let b = match load_bundle(path, opts.validation_bound, &mapper) {
            Ok(b) => b,
            Err(code) => return code,
        };
        opts.bound = common.bound.or(b.bound).unwrap_or(DEFAULT_BOUND);
        opts.zeta_bound = zeta_bound.or(b.zeta_bound).unwrap_or(DEFAULT_ZETA_BOUND);
        let selected: Vec<_> = b.checks.iter().filter(|c| filter.is_none_or(|f| c.statement == f)).collect();
        if selected.is_empty() {
            return fail(format!("the bundle has no '{target}' checks"));
        }
        selected
            .into_iter()
            .map(|c| match c.run(&opts, &mapper) {
                Ok(v) => Outcome::Verdict(v),
                Err(e) => Outcome::Error { statement: c.statement, label: c.label.clone(), message: e.to_string() },
            })
            .collect()
    };
    let text = render(format, target, &opts, &outcomes);
    if let Err(code) = write_output(common.output.as_deref(), &text) {
        return code;
    }
    let summary = Summary::of(&outcomes);
    eprintln!(
        "artin: {} checks in {:.2} s on {} threads",
        outcomes.len(),
        start.elapsed().as_secs_f64(),
        mapper.threads()
    );
    summary.exit_code()
}

fn builtin_prefix(
    selection: &str,
    bound: usize,
    opts: &Common,
    mapper: &dyn PrimeMapper,
) -> Result<DirichletPrefix, String> {
    let e = |e: artin_core::Error| e.to_string();
    match selection {
        "s3/zeta" => dedekind_zeta_prefix_direct(&builtin::s3_polynomial(), bound, mapper).map_err(e),
        "octic/zeta" => dedekind_zeta_prefix_direct(&builtin::octic_polynomial(), bound, mapper).map_err(e),
        "octic/zeta48" => dedekind_zeta_prefix_direct(&builtin::octic48_polynomial(), bound, mapper).map_err(e),
        "s3/chi2" | "s3/chi3" => {
            let ctx = builtin::s3_context_with(opts.validation_bound, mapper).map_err(e)?;
            let data = S3Remark::from_context(ctx.clone()).map_err(e)?;
            let chi = if selection == "s3/chi2" { data.chi2 } else { data.chi3 };
            let setup = RelativeSetup::new(ctx, data.u, data.v, chi).map_err(e)?;
            artin_prefix(&setup, bound, mapper).map_err(e)
        }
        "octic/chi1" | "octic/chi2" => {
            let ctx = builtin::octic_context_with(opts.validation_bound, mapper).map_err(e)?;
            let g = ctx.group();
            let u = builtin::octic_u(g);
            let v = if selection == "octic/chi1" { builtin::octic_v1(g) } else { builtin::octic_v2(g) };
            let q = g.quotient(&u, &v).map_err(e)?;
            let table = artin_core::character::character_table(&q.group).map_err(e)?;
            let one = artin_core::character::ClassFunction::trivial(&q.group);
            let chi = table.irreducibles().iter().find(|c| **c != one).cloned().ok_or("trivial quotient")?;
            let setup = RelativeSetup::new(ctx.clone(), u, v, chi).map_err(e)?;
            artin_prefix(&setup, bound, mapper).map_err(e)
        }
        other => Err(format!("unknown builtin selection '{other}'")),
    }
}

fn export_prefix(selection: &str, bundle: Option<&Path>, common: &Common) -> i32 {
    let mapper = match mapper(common.threads) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let result = if let Some(rest) = selection.strip_prefix("builtin:") {
        if bundle.is_some() {
            return fail("a builtin selection takes no bundle");
        }
        builtin_prefix(rest, common.bound.unwrap_or(DEFAULT_BOUND), common, &mapper)
    } else {
        let Some(path) = bundle else {
            return fail(format!("selection '{selection}' needs a bundle file"));
        };
        let b = match load_bundle(path, common.validation_bound, &mapper) {
            Ok(b) => b,
            Err(code) => return code,
        };
        let bound = common.bound.or(b.bound).unwrap_or(DEFAULT_BOUND);
        if let Some(name) = selection.strip_prefix("setup:") {
            b.setup_prefix(name, bound, &mapper)
        } else if let Some(name) = selection.strip_prefix("zeta:") {
            b.zeta_prefix(name, bound, &mapper)
        } else {
            Err(format!("unknown selection '{selection}' (expected setup:<name> or zeta:<polynomial>)"))
        }
    };
    match result {
        Ok(prefix) => match write_output(common.output.as_deref(), &prefix.to_table()) {
            Ok(()) => EXIT_OK,
            Err(code) => code,
        },
        Err(message) => fail(message),
    }
}
