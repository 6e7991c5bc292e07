use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zonocone::commands::{self, Ctx, Outcome};
use zonocone::input::load_graph;
use zonocone::{AppError, AppResult};
use zonocone_core::Limits;

/// Deformation cones of graphical zonotopes, computed exactly.
///
/// Graphs are a file (first line `n`, then `i j` per edge) or a generator:
/// complete:N, path:N, cycle:N, empty:N, kbip:A,B, cyc3:N, wedge_k4:N,
/// bitriangle.
///
/// Exit status: 0 success, 1 failed validation, 2 invalid input, 3 effort
/// cap exceeded.
#[derive(Parser)]
#[command(name = "zonocone", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on acyclic orientations enumerated per graph.
    #[arg(long, global = true, default_value_t = Limits::default().max_orientations)]
    max_orientations: usize,
    /// Cap on rays alive during ray enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_rays)]
    max_rays: usize,
    /// Cap on the dimension of a cone handed to ray enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_dim)]
    max_dim: usize,
    /// Cap on the number of rays for face-lattice enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_fvector_rays)]
    max_fvector_rays: usize,
    /// Worker threads for censuses (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex, edge, triangle and clique counts.
    Info { graph: String },
    /// Dimension and facets of the deformation cone, checked against the
    /// clique formulas.
    Cone {
        graph: String,
        /// Write the cone (labels and equalities) as JSON to this file, or `-`
        /// for standard output.
        #[arg(long)]
        export: Option<String>,
    },
    /// Extreme rays, named by summand for graphs without K4.
    Rays { graph: String },
    /// Face numbers of the deformation cone, rays first.
    Fvector { graph: String },
    /// Split a deformation into segments and signed triangles (graphs
    /// without K4).
    Decompose {
        graph: String,
        /// JSON array in Edge order, or an expression like
        /// `1*e(0,1) + 1*t(0,1,2)`; either inline or a file name.
        #[arg(long)]
        lengths: String,
    },
    /// Vertices of the deformed polytope with the given edge lengths.
    Polytope {
        graph: String,
        #[arg(long)]
        lengths: String,
    },
    /// Number of extreme rays per dimension of their polytopes.
    Census { graph: String },
    /// Census table of a family (cyc3 or wedge_k4) as TSV.
    Table {
        family: String,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Check that the rays are exactly the segments and signed triangles.
    Check { graph: String },
}

fn run(cli: &Cli) -> AppResult<Outcome> {
    let ctx = Ctx {
        limits: Limits {
            max_orientations: cli.max_orientations,
            max_rays: cli.max_rays,
            max_dim: cli.max_dim,
            max_fvector_rays: cli.max_fvector_rays,
        },
        json: cli.json,
    };
    match &cli.command {
        Command::Info { graph } => commands::info(&ctx, &load_graph(graph)?),
        Command::Cone { graph, export } => {
            let g = load_graph(graph)?;
            if let Some(path) = export {
                let text = commands::cone_export(&g, &ctx.limits)?;
                if path == "-" {
                    return Ok(Outcome { text, ok: true });
                }
                std::fs::write(path, text).map_err(|source| AppError::Io {
                    path: path.clone(),
                    source,
                })?;
            }
            commands::cone(&ctx, &g)
        }
        Command::Rays { graph } => commands::rays(&ctx, &load_graph(graph)?),
        Command::Fvector { graph } => commands::fvector(&ctx, &load_graph(graph)?),
        Command::Decompose { graph, lengths } => commands::decompose_lengths(&ctx, &load_graph(graph)?, lengths),
        Command::Polytope { graph, lengths } => commands::polytope(&ctx, &load_graph(graph)?, lengths),
        Command::Census { graph } => commands::census(&ctx, &load_graph(graph)?),
        Command::Table { family, n_min, n_max } => commands::table(&ctx, family, *n_min, *n_max),
        Command::Check { graph } => commands::check(&ctx, &load_graph(graph)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("zonocone: cannot start worker threads: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("zonocone: validation failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("zonocone: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
