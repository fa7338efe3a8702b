//! Command-line front end: `compute`, `transform` and `verify` over graph
//! files. [`run`] returns the exit code and never terminates the process.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{parse, serialize};
use crate::identities::{
    check_determination, check_duality, check_homfly_formula, check_jones_mirror,
    check_rearranged_br, check_tensor_c3, check_tensor_odd, determination_points, verify_all,
    IdentityError, Reading, UpperLimit, VerificationReport, DETERMINATION_POINTS,
};
use crate::invariants::{
    bollobas_riordan, homfly_formula, homfly_full, jones_cp, jones_from_homfly, kauffman_bracket,
    tutte, InvariantError,
};
use crate::ribbon::RibbonGraph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ribbonpoly",
    version,
    about = "Exact ribbon graph polynomials and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an invariant of each graph in the file.
    Compute {
        #[arg(value_enum)]
        kind: Invariant,
        file: PathBuf,
        /// Writhe for jones-cp; defaults to -e on C3-subdivided graphs.
        #[arg(long, allow_hyphen_values = true)]
        writhe: Option<i64>,
        /// Only the graph with this name.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Print transformed graphs in canonical form.
    Transform {
        #[command(subcommand)]
        op: Transform,
    },
    /// Check identities and print one report line per identity and graph.
    Verify {
        #[command(subcommand)]
        which: Check,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Invariant {
    Br,
    Tutte,
    Homfly,
    HomflyFull,
    JonesCp,
    JonesHomfly,
    Bracket,
}

#[derive(Debug, Subcommand)]
enum Transform {
    /// Dual ribbon graph.
    Dual { file: PathBuf },
    /// Subdivide every edge into q - 1 edges.
    Tensor { q: u32, file: PathBuf },
}

#[derive(Debug, Args)]
struct Target {
    file: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Only the graph with this name.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Every identity whose preconditions hold.
    All(Target),
    Duality(Target),
    Determination(Target),
    TensorC3(Target),
    TensorOdd {
        p: u32,
        #[command(flatten)]
        target: Target,
    },
    JonesMirror(Target),
    /// Both sums for the Bollobás–Riordan polynomial.
    Eq12(Target),
    /// HOMFLY closed formula against the resolution sum.
    Thm32(Target),
}

/// Something the user has to fix; reported on stderr with exit code 2.
#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:\n{source}")]
    Parse {
        path: String,
        source: crate::format::ParseErrors,
    },
    #[error("no graph named `{0}`")]
    NoSuchGraph(String),
    #[error("graph `{graph}`: {message}")]
    Graph { graph: String, message: String },
}

fn graph_error(g: &RibbonGraph, e: impl std::fmt::Display) -> InputError {
    InputError::Graph {
        graph: g.name().to_string(),
        message: e.to_string(),
    }
}

fn load(path: &PathBuf, only: Option<&str>) -> Result<Vec<RibbonGraph>, InputError> {
    let shown = path.display().to_string();
    let mut text = String::new();
    let read = if shown == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|source| InputError::Io {
        path: shown.clone(),
        source,
    })?;
    let graphs = parse(&text).map_err(|source| InputError::Parse {
        path: shown,
        source,
    })?;
    match only {
        None => Ok(graphs),
        Some(name) => {
            let picked: Vec<_> = graphs.into_iter().filter(|g| g.name() == name).collect();
            if picked.is_empty() {
                Err(InputError::NoSuchGraph(name.to_string()))
            } else {
                Ok(picked)
            }
        }
    }
}

fn invariant(g: &RibbonGraph, kind: Invariant, writhe: Option<i64>) -> Result<String, InputError> {
    let wrap = |e: InvariantError| graph_error(g, e);
    Ok(match kind {
        Invariant::Br => bollobas_riordan(g).to_string(),
        Invariant::Tutte => tutte(g).to_string(),
        Invariant::Homfly => homfly_formula(g).to_string(),
        Invariant::HomflyFull => homfly_full(g).map_err(wrap)?.to_string(),
        Invariant::JonesCp => {
            let w = match (writhe, g.tensor_of()) {
                (Some(w), _) => w,
                (None, Some(3)) => -(g.num_edges() as i64),
                (None, _) => {
                    return Err(graph_error(
                        g,
                        "jones-cp needs --writhe unless the graph is marked `tensor 3`",
                    ))
                }
            };
            jones_cp(g, w).map_err(wrap)?.to_string()
        }
        Invariant::JonesHomfly => jones_from_homfly(g).to_string(),
        Invariant::Bracket => kauffman_bracket(g).to_string(),
    })
}

fn compute(
    graphs: &[RibbonGraph],
    kind: Invariant,
    writhe: Option<i64>,
) -> Result<String, InputError> {
    if let [g] = graphs {
        return Ok(format!("{}\n", invariant(g, kind, writhe)?));
    }
    let mut out = String::new();
    for g in graphs {
        out.push_str(&format!("{}: {}\n", g.name(), invariant(g, kind, writhe)?));
    }
    Ok(out)
}

fn transform(op: &Transform) -> Result<String, InputError> {
    let (file, q) = match op {
        Transform::Dual { file } => (file, None),
        Transform::Tensor { q, file } => (file, Some(*q)),
    };
    let graphs = load(file, None)?;
    let mut out = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let t = match q {
            None => g.dual(),
            Some(q) => g.tensor_cycle(q),
        };
        out.push(t.map_err(|e| graph_error(g, e))?);
    }
    Ok(serialize(&out))
}

fn reports(which: &Check) -> Result<(u64, Vec<VerificationReport>), InputError> {
    let target = match which {
        Check::All(t)
        | Check::Duality(t)
        | Check::Determination(t)
        | Check::TensorC3(t)
        | Check::TensorOdd { target: t, .. }
        | Check::JonesMirror(t)
        | Check::Eq12(t)
        | Check::Thm32(t) => t,
    };
    let graphs = load(&target.file, target.graph.as_deref())?;
    let seed = target.seed;
    let mut out = Vec::new();
    for g in &graphs {
        let wrap = |e: IdentityError| graph_error(g, e);
        match which {
            Check::All(_) => out.extend(verify_all(g, seed)),
            Check::Duality(_) => out.push(check_duality(g).map_err(wrap)?),
            Check::Determination(_) => {
                let points = determination_points(DETERMINATION_POINTS, seed);
                out.push(check_determination(g, &points, Reading::PlusOne).map_err(wrap)?);
            }
            Check::TensorC3(_) => out.push(check_tensor_c3(g, seed)),
            Check::TensorOdd { p, .. } => {
                out.push(check_tensor_odd(g, *p, seed, UpperLimit::Exclusive).map_err(wrap)?)
            }
            Check::JonesMirror(_) => out.push(check_jones_mirror(g).map_err(wrap)?),
            Check::Eq12(_) => out.push(check_rearranged_br(g)),
            Check::Thm32(_) => out.push(check_homfly_formula(g)),
        }
    }
    Ok((seed, out))
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 when an identity
/// fails and 2 for unusable input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute {
            kind,
            file,
            writhe,
            graph,
        } => load(file, graph.as_deref())
            .and_then(|gs| compute(&gs, *kind, *writhe))
            .map(|s| (s, EXIT_OK)),
        Command::Transform { op } => transform(op).map(|s| (s, EXIT_OK)),
        Command::Verify { which } => reports(which).map(|(seed, reports)| {
            let mut text = format!("# seed={seed}\n");
            for r in &reports {
                text.push_str(&format!("{r}\n"));
            }
            let code = if reports.iter().all(VerificationReport::passed) {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            (text, code)
        }),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
