mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use burnkit::burning::{evaluate, last_and_unique};
use burnkit::gadgets::{
    make_bt, make_btp, make_c, make_p, make_t, make_tail, make_y, GadgetHandle, Landmarks,
};
use burnkit::generators;
use burnkit::io::{read_graph, write_dot, write_graph};
use burnkit::lift::{build_hd, ProjectMode};
use burnkit::reduction::{audit_sequence, build_h, vc_to_witness, ReductionInstance};
use burnkit::solvers::{burning_number_exact, vertex_cover_exact};
use burnkit::{BurningSequence, Graph};

use report::{CliError, Report};

#[derive(Parser)]
#[command(name = "burnkit", version, about = "Graph burning toolkit")]
struct Cli {
    /// Append a timing section to the report.
    #[arg(long, global = true)]
    timings: bool,
    /// Also write the report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    T,
    Bt,
    Btp,
    P,
    Y,
    Tail,
    C,
    Path,
    Cycle,
    Complete,
    K4,
    K33,
    Prism,
    Petersen,
    Cubic,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a gadget or test graph with its landmark sidecar.
    GenGadget {
        #[arg(ignore_case = true)]
        kind: Kind,
        params: Vec<usize>,
        #[arg(short, value_name = "GRAPH")]
        o: PathBuf,
        #[arg(short, value_name = "LANDMARKS")]
        l: Option<PathBuf>,
        /// Seed for `cubic`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build H from a connected cubic graph.
    Reduce {
        graph: PathBuf,
        /// Edge to subdivide; defaults to the smallest edge.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<String>>,
        #[arg(short, value_name = "GRAPH")]
        o: PathBuf,
        #[arg(short, value_name = "LANDMARKS")]
        l: Option<PathBuf>,
        /// Defaults to the output path with extension `meta`.
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Turn a vertex cover of G' into a burning sequence of H.
    Witness {
        meta: PathBuf,
        #[arg(short, value_name = "SEQ")]
        o: PathBuf,
        /// Whitespace-separated cover of G'; a minimum cover is computed otherwise.
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Block partition, owners and edge representation of a sequence of H.
    Audit { meta: PathBuf, seq: PathBuf },
    /// Simulate a sequence.
    Burn { graph: PathBuf, seq: PathBuf },
    /// Exact burning number.
    SolveBurn {
        graph: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, value_name = "SEQ")]
        o: Option<PathBuf>,
    },
    /// Exact minimum vertex cover.
    SolveVc {
        graph: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, value_name = "COVER")]
        o: Option<PathBuf>,
    },
    /// Build H_d over a cubic base and optionally lift a base sequence.
    Lift {
        base: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(short, value_name = "GRAPH")]
        o: PathBuf,
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(long, value_name = "SEQ", requires = "seq")]
        seq_out: Option<PathBuf>,
    },
    /// Project a sequence of H_d onto H_(d').
    Project {
        base: PathBuf,
        seq: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dprime: usize,
        #[arg(short, value_name = "SEQ")]
        o: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Basic graph statistics.
    Stats { graph: PathBuf },
    /// DOT export; landmark vertices are highlighted.
    Dot {
        graph: PathBuf,
        #[arg(short, value_name = "LANDMARKS")]
        l: Option<PathBuf>,
        #[arg(short, value_name = "DOT")]
        o: Option<PathBuf>,
    },
}

fn read(path: &Path, rep: &mut Report) -> Result<String, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    rep.input(text.as_bytes());
    Ok(text)
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn load_graph(path: &Path, rep: &mut Report) -> Result<Graph, CliError> {
    Ok(read_graph(&read(path, rep)?)?)
}

fn load_seq(path: &Path, rep: &mut Report) -> Result<BurningSequence, CliError> {
    Ok(BurningSequence::parse(&read(path, rep)?))
}

fn gadget(kind: Kind, params: &[usize], seed: u64) -> Result<GadgetHandle, CliError> {
    let arity = match kind {
        Kind::Tail | Kind::K4 | Kind::K33 | Kind::Prism | Kind::Petersen => 0,
        Kind::Bt | Kind::P | Kind::C | Kind::Path | Kind::Cycle | Kind::Complete | Kind::Cubic => 1,
        Kind::T | Kind::Y => 2,
        Kind::Btp => 3,
    };
    if params.len() != arity {
        return Err(CliError::Usage(format!(
            "{kind:?} takes {arity} parameters, got {}",
            params.len()
        )));
    }
    let plain = |graph| GadgetHandle {
        graph,
        landmarks: Landmarks::new(),
    };
    let p = params;
    Ok(match kind {
        Kind::T => make_t(p[0], p[1])?,
        Kind::Bt => make_bt(p[0])?,
        Kind::Btp => make_btp(p[0], p[1], p[2])?,
        Kind::P => make_p(p[0])?,
        Kind::Y => make_y(p[0], p[1])?,
        Kind::Tail => make_tail(),
        Kind::C => make_c(p[0])?,
        Kind::Path => plain(generators::path(p[0])),
        Kind::Cycle if p[0] < 3 => return Err(CliError::Usage("cycle needs n >= 3".into())),
        Kind::Cycle => plain(generators::cycle(p[0])),
        Kind::Complete => plain(generators::complete(p[0])),
        Kind::K4 => plain(generators::k4()),
        Kind::K33 => plain(generators::k33()),
        Kind::Prism => plain(generators::prism()),
        Kind::Petersen => plain(generators::petersen()),
        Kind::Cubic if p[0] < 4 || p[0] % 2 == 1 => {
            return Err(CliError::Usage("cubic needs an even n >= 4".into()))
        }
        Kind::Cubic => plain(generators::random_cubic(
            p[0],
            &mut ChaCha8Rng::seed_from_u64(seed),
        )),
    })
}

fn graph_kv(rep: &mut Report, prefix: &str, g: &Graph) {
    rep.kv(&format!("{prefix}vertices"), g.vertex_count());
    rep.kv(&format!("{prefix}edges"), g.edge_count());
}

fn run(cmd: Command, rep: &mut Report) -> Result<(), CliError> {
    match cmd {
        Command::GenGadget {
            kind,
            params,
            o,
            l,
            seed,
        } => {
            rep.param(&format!("{kind:?} {params:?} {seed}"));
            let g = gadget(kind, &params, seed)?;
            rep.kv("kind", format!("{kind:?}"));
            rep.kv("params", join(params.iter()));
            graph_kv(rep, "", &g.graph);
            rep.kv("landmarks", g.landmarks.iter().count());
            write(&o, &write_graph(&g.graph))?;
            if let Some(l) = l {
                write(&l, &g.landmarks.to_sidecar())?;
            }
        }
        Command::Reduce {
            graph,
            edge,
            o,
            l,
            meta,
        } => {
            let g = load_graph(&graph, rep)?;
            let edge = edge.as_deref().map(|e| (e[0].as_str(), e[1].as_str()));
            rep.param(&format!("{edge:?}"));
            let t = Instant::now();
            let inst = build_h(&g, edge)?;
            rep.timing("build_ms", t.elapsed());
            let s = &inst.subdivision;
            rep.kv("edge", format!("{} {}", s.p, s.q));
            rep.kv("x", &s.x);
            rep.kv("y", &s.y);
            for (k, v) in inst.params.to_kv() {
                rep.kv(k, v);
            }
            graph_kv(rep, "h_", &inst.h);
            rep.kv("cubic", inst.h.is_regular(3));
            rep.kv("connected", inst.h.is_connected());
            write(&o, &write_graph(&inst.h))?;
            write(
                &meta.unwrap_or_else(|| o.with_extension("meta")),
                &inst.to_meta(),
            )?;
            if let Some(l) = l {
                write(&l, &inst.landmarks().to_sidecar())?;
            }
        }
        Command::Witness {
            meta,
            o,
            cover,
            budget,
        } => {
            let inst = ReductionInstance::from_meta(&read(&meta, rep)?)?;
            let cover: Vec<String> = match cover {
                Some(p) => read(&p, rep)?
                    .split_whitespace()
                    .map(str::to_owned)
                    .collect(),
                None => {
                    let r = vertex_cover_exact(inst.g_prime(), budget)?;
                    rep.timing("cover_ms", r.stats.elapsed);
                    r.witness
                }
            };
            let seq = vc_to_witness(&inst, &cover)?;
            rep.kv("cover_size", cover.len());
            rep.kv("cover", join(cover.iter()));
            rep.kv("length", seq.len());
            rep.kv("threshold", inst.params.threshold(cover.len()));
            write(&o, &seq.to_text())?;
        }
        Command::Audit { meta, seq } => {
            let inst = ReductionInstance::from_meta(&read(&meta, rep)?)?;
            let seq = load_seq(&seq, rep)?;
            let a = audit_sequence(&inst, &seq)?;
            for (k, v) in a.to_kv() {
                rep.kv(&k, v);
            }
        }
        Command::Burn { graph, seq } => {
            let g = load_graph(&graph, rep)?;
            let seq = load_seq(&seq, rep)?;
            let ev = evaluate(&g, &seq)?;
            let s = &ev.schedule;
            let unburned = s.unburned().count();
            rep.kv("length", seq.len());
            rep.kv("valid", ev.violation.is_none());
            rep.kv("unburned", unburned);
            match (&ev.violation, s.completion_step()) {
                (Some(v), _) => {
                    rep.kv("violation_position", v.position);
                    rep.kv("violation_vertex", g.label(v.vertex));
                    rep.kv("outcome", format!("invalid at step {}", v.position));
                    rep.fail("InvalidSequence");
                }
                (None, Some(step)) => {
                    rep.kv("last_and_unique", last_and_unique(s)?.len());
                    rep.kv("outcome", format!("complete at step {step}"));
                }
                (None, None) => {
                    rep.kv("outcome", format!("incomplete, {unburned} unburned"));
                    rep.fail("IncompleteSchedule");
                }
            }
        }
        Command::SolveBurn { graph, budget, o } => {
            let g = load_graph(&graph, rep)?;
            rep.param(&format!("{budget:?}"));
            let r = burning_number_exact(&g, budget)?;
            rep.kv("value", r.value);
            rep.kv("witness", join(r.witness.sources().iter()));
            rep.kv("nodes", r.stats.nodes);
            rep.timing("solve_ms", r.stats.elapsed);
            if let Some(o) = o {
                write(&o, &r.witness.to_text())?;
            }
        }
        Command::SolveVc { graph, budget, o } => {
            let g = load_graph(&graph, rep)?;
            rep.param(&format!("{budget:?}"));
            let r = vertex_cover_exact(&g, budget)?;
            rep.kv("value", r.value);
            rep.kv("cover", join(r.witness.iter()));
            rep.kv("nodes", r.stats.nodes);
            rep.timing("solve_ms", r.stats.elapsed);
            if let Some(o) = o {
                write(&o, &(r.witness.join("\n") + "\n"))?;
            }
        }
        Command::Lift {
            base,
            d,
            o,
            seq,
            seq_out,
        } => {
            let g = load_graph(&base, rep)?;
            rep.param(&d.to_string());
            let h = build_hd(&g, d)?;
            graph_kv(rep, "", &h.graph);
            rep.kv("regular_degree", d);
            write(&o, &write_graph(&h.graph))?;
            if let Some(seq) = seq {
                let s = load_seq(&seq, rep)?;
                let lifted = h.lift_sequence(&s)?;
                rep.kv("input_length", s.len());
                rep.kv("lifted_length", lifted.len());
                rep.kv("lifted", join(lifted.sources().iter()));
                if let Some(out) = seq_out {
                    write(&out, &lifted.to_text())?;
                }
            }
        }
        Command::Project {
            base,
            seq,
            d,
            dprime,
            o,
            strict,
        } => {
            let g = load_graph(&base, rep)?;
            let s = load_seq(&seq, rep)?;
            rep.param(&format!("{d} {dprime} {strict}"));
            let h = build_hd(&g, d)?;
            let mode = if strict {
                ProjectMode::Strict
            } else {
                ProjectMode::Repair
            };
            let p = h.project_sequence(&s, dprime, mode)?;
            rep.kv("input_length", s.len());
            rep.kv("projected_length", p.len());
            rep.kv("projected", join(p.sources().iter()));
            write(&o, &p.to_text())?;
        }
        Command::Stats { graph } => {
            let g = load_graph(&graph, rep)?;
            graph_kv(rep, "", &g);
            rep.kv("connected", g.is_connected());
            let hist = g.degree_histogram();
            rep.kv(
                "degree_histogram",
                join(hist.iter().map(|(d, c)| format!("{d}:{c}"))),
            );
            rep.kv(
                "regular_degree",
                g.regular_degree().map_or("none".into(), |d| d.to_string()),
            );
        }
        Command::Dot { graph, l, o } => {
            let g = load_graph(&graph, rep)?;
            let lm = match l {
                Some(p) => Some(Landmarks::parse_sidecar(&read(&p, rep)?)?),
                None => None,
            };
            let dot = write_dot(&g, lm.as_ref());
            match o {
                Some(o) => {
                    graph_kv(rep, "", &g);
                    write(&o, &dot)?;
                }
                None => {
                    print!("{dot}");
                    rep.silence();
                }
            }
        }
    }
    Ok(())
}

fn join<T: ToString>(it: impl IntoIterator<Item = T>) -> String {
    it.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::GenGadget { .. } => "gen-gadget",
        Command::Reduce { .. } => "reduce",
        Command::Witness { .. } => "witness",
        Command::Audit { .. } => "audit",
        Command::Burn { .. } => "burn",
        Command::SolveBurn { .. } => "solve-burn",
        Command::SolveVc { .. } => "solve-vc",
        Command::Lift { .. } => "lift",
        Command::Project { .. } => "project",
        Command::Stats { .. } => "stats",
        Command::Dot { .. } => "dot",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut rep = Report::new(command_name(&cli.command));
    let start = Instant::now();
    let result = run(cli.command, &mut rep);
    rep.timing("total_ms", start.elapsed());
    let result = result.and_then(|()| rep.emit(cli.timings, cli.report.as_deref()));
    match result {
        Ok(()) if rep.failure().is_none() => ExitCode::SUCCESS,
        Ok(()) => {
            eprintln!("error\t{}", rep.failure().unwrap_or_default());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error\t{}\n{e}", e.name());
            ExitCode::from(e.exit_code())
        }
    }
}
