//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 on usage or input errors, 2 when `verify` finds violations.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aut::{automorphism_cycle_data, enumerate_automorphisms, Automorphism, CycleData};
use crate::canon::canonical_form;
use crate::corpus::{sweep_theorem, CorpusSpec};
use crate::error::{Error, Result};
use crate::families::{build_family, eq1_sweep, legal_params, verify_family, FamilyCheck, FamilyKind, FamilyParams};
use crate::graph::{EdgeId, Graph};
use crate::limits::Limits;
use crate::orientation::{
    or_orbits_bruteforce, orientability, theta_k_with, theta_parity, theta_s_with, ArrowArrangement,
    SpanningForest, ThetaRegistry,
};
use crate::perm::Permutation;
use crate::report::{render, to_sorted_json, ReportFormat};
use crate::sign::Sign;
use crate::text::{format_graph, parse_graph, parse_graphs};

/// Largest `n` the `families` command will sweep.
pub const MAX_CLI_FAMILY_N: u32 = 6;

#[derive(Parser, Debug)]
#[command(name = "orientkit", version, about = "Orientation signs on automorphism groups of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse graph files and print their normal form and invariants.
    Parse { file: PathBuf },
    /// List the automorphism group.
    Aut {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate Θ_K, Θ_S and vertex parity on every automorphism.
    Theta {
        file: PathBuf,
        /// Use random arrows and spanning-forest roots from this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Orientability verdict for one orientation homomorphism.
    Orient {
        file: PathBuf,
        #[arg(long, default_value = "k")]
        theta: String,
        /// Also compute the orbits on (enumeration, sign) pairs.
        #[arg(long)]
        bruteforce: bool,
        #[arg(long)]
        json: bool,
    },
    /// Contract the orbit of an edge under an automorphism.
    Contract {
        file: PathBuf,
        #[arg(long)]
        edge: EdgeId,
        /// Half-edge permutation as an image list, e.g. [1,0,2,3]. Defaults to the identity.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Build and check the cyclic edge-transitive families.
    Families {
        #[arg(long, default_value_t = 3)]
        max_n: u32,
        #[arg(long)]
        family: Option<FamilyKind>,
        #[arg(long)]
        json: bool,
    },
    /// Sweep the corpus and compare Θ_K with Θ_S on every automorphism.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_edges: usize,
        /// Allow loops (default).
        #[arg(long, conflicts_with = "no_loops")]
        allow_loops: bool,
        #[arg(long)]
        no_loops: bool,
        /// Only connected graphs (default).
        #[arg(long, conflicts_with = "include_disconnected")]
        connected_only: bool,
        #[arg(long)]
        include_disconnected: bool,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

fn dispatch(command: Command) -> Result<i32> {
    let out = match command {
        Command::Parse { file } => cmd_parse(&file)?,
        Command::Aut { file, json } => cmd_aut(&load(&file)?, json)?,
        Command::Theta { file, seed, json } => cmd_theta(&load(&file)?, seed, json)?,
        Command::Orient {
            file,
            theta,
            bruteforce,
            json,
        } => cmd_orient(&load(&file)?, &theta, bruteforce, json)?,
        Command::Contract { file, edge, phi } => cmd_contract(&load(&file)?, edge, phi.as_deref())?,
        Command::Families { max_n, family, json } => cmd_families(max_n, family, json)?,
        Command::Verify {
            max_edges,
            allow_loops: _,
            no_loops,
            connected_only: _,
            include_disconnected,
            format,
            out,
        } => {
            let spec = CorpusSpec {
                max_edges,
                allow_loops: !no_loops,
                connected_only: !include_disconnected,
                max_half_edges: Limits::from_env().max_half_edges,
            };
            let report = sweep_theorem(&spec)?;
            let text = render(&report, format)?;
            match out {
                Some(path) => fs::write(&path, text).map_err(|source| Error::Io { path, source })?,
                None => print!("{text}"),
            }
            eprintln!(
                "graphs={} automorphisms={} violations={}",
                report.totals.graphs, report.totals.automorphisms, report.totals.violations
            );
            return Ok(if report.is_clean() { 0 } else { 2 });
        }
    };
    print!("{out}");
    Ok(0)
}

fn cmd_parse(file: &Path) -> Result<String> {
    let mut out = String::new();
    for g in parse_graphs(&read(file)?)? {
        let canon = String::from_utf8(canonical_form(&g)?).expect("text form is utf-8");
        let loops = (0..g.vertex_count()).map(|v| g.loop_count_at(v)).sum::<usize>();
        writeln!(out, "{g}").unwrap();
        writeln!(
            out,
            "  vertices={} edges={} b1={} components={} loops={}",
            g.vertex_count(),
            g.edge_count(),
            g.first_betti(),
            g.connected_components().len(),
            loops
        )
        .unwrap();
        writeln!(out, "  canonical: {canon}").unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct AutRow {
    automorphism: Permutation,
    cycles: CycleData,
}

fn cmd_aut(g: &Graph, json: bool) -> Result<String> {
    let group = enumerate_automorphisms(g)?;
    let rows: Vec<AutRow> = group
        .iter()
        .map(|a| AutRow {
            automorphism: a.perm().clone(),
            cycles: automorphism_cycle_data(g, a),
        })
        .collect();
    if json {
        return to_sorted_json(&rows);
    }
    let mut out = format!("order {}\n", rows.len());
    for row in rows {
        writeln!(
            out,
            "{}  half-edges {:?} edges {:?} vertices {:?}",
            row.automorphism, row.cycles.half_edges, row.cycles.edges, row.cycles.vertices
        )
        .unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct ThetaRow {
    automorphism: Permutation,
    theta_k: Sign,
    theta_s: Sign,
    theta_parity: Sign,
    agree: bool,
}

fn cmd_theta(g: &Graph, seed: Option<u64>, json: bool) -> Result<String> {
    let group = enumerate_automorphisms(g)?;
    let (arrows, forest) = match seed {
        None => (ArrowArrangement::default_for(g), SpanningForest::default_for(g)),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let arrows = ArrowArrangement::random(g, &mut rng);
            let mut roots: Vec<usize> = (0..g.vertex_count()).collect();
            roots.shuffle(&mut rng);
            (arrows, SpanningForest::bfs(g, &roots))
        }
    };
    let rows: Vec<ThetaRow> = group
        .iter()
        .map(|a| {
            let theta_k = theta_k_with(g, &arrows, &forest, a);
            let theta_s = theta_s_with(g, &arrows, a);
            ThetaRow {
                automorphism: a.perm().clone(),
                theta_k,
                theta_s,
                theta_parity: theta_parity(g, a),
                agree: theta_k == theta_s,
            }
        })
        .collect();
    if json {
        return to_sorted_json(&rows);
    }
    let mut out = String::from("automorphism\ttheta_k\ttheta_s\ttheta_parity\tagree\n");
    for r in rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.automorphism, r.theta_k, r.theta_s, r.theta_parity, r.agree
        )
        .unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct OrientOutput {
    theta: String,
    verdict: String,
    witness: Option<Permutation>,
    orbit_count: Option<usize>,
    z2_free: Option<bool>,
}

fn cmd_orient(g: &Graph, theta: &str, bruteforce: bool, json: bool) -> Result<String> {
    let registry = ThetaRegistry::with_defaults();
    let hom = registry.require(theta)?;
    let report = orientability(g, hom)?;
    let (orbit_count, z2_free) = if bruteforce {
        let summary = or_orbits_bruteforce(g, hom)?;
        (Some(summary.orbit_count), Some(summary.z2_free))
    } else {
        (None, None)
    };
    let out = OrientOutput {
        theta: report.theta,
        verdict: report.verdict.to_string(),
        witness: report.witness,
        orbit_count,
        z2_free,
    };
    if json {
        return to_sorted_json(&out);
    }
    let mut text = format!("theta {}\n{}\n", out.theta, out.verdict);
    if let Some(w) = &out.witness {
        writeln!(text, "witness {w}").unwrap();
    }
    if let (Some(n), Some(free)) = (out.orbit_count, out.z2_free) {
        writeln!(text, "orbit_count {n}\nz2_free {free}").unwrap();
    }
    Ok(text)
}

fn cmd_contract(g: &Graph, edge: EdgeId, phi: Option<&str>) -> Result<String> {
    let phi = match phi {
        Some(text) => Automorphism::new(g, text.parse::<Permutation>()?)?,
        None => Automorphism::identity(g),
    };
    let oc = g.contract_edge_orbit(phi.perm(), edge)?;
    Ok(format!(
        "orbit {:?}\ngraph {}\nphi {}\nresidual_vertices {}\n",
        oc.orbit,
        oc.graph(),
        oc.phi,
        oc.residual_perm.len()
    ))
}

#[derive(Serialize)]
struct FamilyOutput {
    params: FamilyParams,
    graph: String,
    psi: Permutation,
    check: FamilyCheck,
    eq1_checked: usize,
    eq1_equal: usize,
}

fn cmd_families(max_n: u32, family: Option<FamilyKind>, json: bool) -> Result<String> {
    if max_n > MAX_CLI_FAMILY_N {
        return Err(crate::families::FamilyError::ParamRange(format!(
            "--max-n {max_n} exceeds {MAX_CLI_FAMILY_N}"
        ))
        .into());
    }
    let mut rows = Vec::new();
    for params in legal_params(max_n, family) {
        let inst = build_family(params)?;
        let check = verify_family(&inst);
        let eq1 = eq1_sweep(&inst)?;
        rows.push(FamilyOutput {
            params,
            graph: format_graph(&inst.graph),
            psi: inst.psi.clone(),
            check,
            eq1_checked: eq1.len(),
            eq1_equal: eq1.iter().filter(|(_, _, r)| r.equal).count(),
        });
    }
    if json {
        return to_sorted_json(&rows);
    }
    let mut out = String::new();
    for r in rows {
        let status = if r.check.passed() { "ok".to_string() } else { r.check.failures.join("; ") };
        writeln!(out, "{}", r.params).unwrap();
        writeln!(out, "  graph {}", r.graph).unwrap();
        writeln!(out, "  psi {}", r.psi).unwrap();
        writeln!(out, "  check {status}").unwrap();
        writeln!(out, "  eq1 {}/{} equal", r.eq1_equal, r.eq1_checked).unwrap();
    }
    Ok(out)
}
