//! `framekit`: checks and constructions for finite lattices, frames,
//! spaces and stratified-category scenarios.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a
//! precondition (spectrality, distributivity) is not met, 2 on invalid
//! input.

mod report;

use clap::{ArgGroup, Parser, Subcommand};
use framekit_core::json::{self, PosetJson, ScenarioJson, SpaceJson};
use framekit_core::ttmodel::{self, checks};
use framekit_core::{dot, duality, enumerate, FiniteLattice, FiniteSpace, Frame, Subset};
use report::Report;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "framekit",
    version,
    about = "Finite lattices, frames, spaces and their dualities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the primary JSON output to this file
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Write a DOT diagram (Hasse / specialization / recollement) here
    #[arg(long, global = true, value_name = "OUT")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check against a lattice or space file
    #[command(group(ArgGroup::new("which").required(true).args(
        ["distributive", "frame", "coherent", "enough_points", "sober", "spectral"])))]
    Check {
        /// Lattice check: distributivity, with a witness triple on failure
        #[arg(long)]
        distributive: bool,
        /// Lattice check: the frame law
        #[arg(long)]
        frame: bool,
        /// Lattice check: the four equivalent coherence conditions
        #[arg(long)]
        coherent: bool,
        /// Lattice check: injectivity of the Stone-open assignment
        #[arg(long = "enough-points")]
        enough_points: bool,
        /// Space check: sobriety
        #[arg(long)]
        sober: bool,
        /// Space check: spectrality
        #[arg(long)]
        spectral: bool,
        path: PathBuf,
    },
    /// Stone spectrum of a lattice file, emitted as a space
    Spectrum { path: PathBuf },
    /// Hochster dual of a spectral space file
    Dual { path: PathBuf },
    /// Ideal completion of a lattice file
    IdealCompletion { path: PathBuf },
    /// The Stone correspondence between distributive lattices and spectral spaces
    #[command(group(ArgGroup::new("dir").required(true).args(["to_space", "to_lattice", "roundtrip"])))]
    Stone {
        /// Lattice file to spectral space
        #[arg(long = "to-space")]
        to_space: bool,
        /// Space file to lattice of quasi-compact opens
        #[arg(long = "to-lattice")]
        to_lattice: bool,
        /// Verify both roundtrips on a lattice or space file
        #[arg(long)]
        roundtrip: bool,
        path: PathBuf,
    },
    /// Stratified-model scenario commands
    Model {
        #[command(subcommand)]
        cmd: ModelCmd,
    },
    /// Enumerate instances (posets, lattices, spaces, random-lattices), one JSON per line
    Enumerate {
        /// posets | lattices | spaces | random-lattices
        kind: String,
        /// Element count (capped at 7); maximum size for random-lattices
        n: usize,
        /// Number of random lattices to draw
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Seed for the random corpus
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size cap for random-lattices (defaults to the positional n)
        #[arg(long = "max-size")]
        max_size: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Run the full verification suite on a scenario
    Verify { path: PathBuf },
    /// Spectrum of the Bousfield lattice of a scenario
    Spectrum { path: PathBuf },
    /// The thick-class lattice of a scenario
    Thick { path: PathBuf },
    /// Balmer-style primes and the dual-space homeomorphism
    Balmer { path: PathBuf },
    /// Four-factor decomposition for a pair of localizing supports
    Recollement {
        path: PathBuf,
        /// Primes of the first support (comma separated labels)
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        u1: Vec<String>,
        /// Primes of the second support
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        u2: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli, started) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Output<'a> {
    json: Option<&'a Path>,
    dot: Option<&'a Path>,
}

impl Output<'_> {
    fn emit(&self, payload: &str) -> std::io::Result<()> {
        print!("{payload}");
        if let Some(path) = self.json {
            std::fs::write(path, payload)?;
        }
        Ok(())
    }

    fn emit_dot(&self, diagram: &str) -> std::io::Result<()> {
        if let Some(path) = self.dot {
            std::fs::write(path, diagram)?;
        }
        Ok(())
    }
}

fn run(cli: &Cli, started: Instant) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let out = Output {
        json: cli.json.as_deref(),
        dot: cli.dot.as_deref(),
    };
    let code = match &cli.command {
        Command::Check {
            distributive,
            frame,
            coherent,
            enough_points,
            sober,
            spectral,
            path,
        } => {
            let mut report = Report::new("check", started);
            if *sober || *spectral {
                let space = load_space(path)?;
                if *sober {
                    report.push("sober", space.is_sober(), None);
                } else {
                    report.push("spectral", space.is_spectral(), None);
                }
                if let Ok(order) = space.specialization_order() {
                    out.emit_dot(&dot::poset_dot(&order))?;
                }
            } else {
                let lattice = load_lattice(path)?;
                if *distributive {
                    match lattice.distributivity_witness() {
                        None => report.push("distributive", true, None),
                        Some((a, b, c)) => report.push(
                            "distributive",
                            false,
                            Some(format!(
                                "witness: ({}, {}, {})",
                                lattice.label(a),
                                lattice.label(b),
                                lattice.label(c)
                            )),
                        ),
                    }
                } else if *frame {
                    match Frame::verify(lattice.clone()) {
                        Ok(_) => report.push("frame", true, None),
                        Err(e) => report.push("frame", false, Some(e.to_string())),
                    }
                } else if *enough_points {
                    match Frame::verify(lattice.clone()) {
                        Ok(f) => report.push("enough-points", f.has_enough_points(), None),
                        Err(e) => report.push("enough-points", false, Some(e.to_string())),
                    }
                } else if *coherent {
                    let r = framekit_core::frame::coherence_report(&lattice);
                    report.push(
                        "coherent",
                        r.all(),
                        Some(format!(
                            "conditions: [{}, {}, {}, {}]",
                            r.coherent_frame,
                            r.frame_enough_points_spectral,
                            r.ideal_completion_of_distributive,
                            r.cg_distributive_sublattice
                        )),
                    );
                    report.push("coherence-conditions-agree", r.is_consistent(), None);
                }
                out.emit_dot(&dot::poset_dot(lattice.carrier()))?;
            }
            let report = report.finish(started);
            let ok = report.ok;
            out.emit(&json::to_pretty(&report))?;
            exit_ok(ok)
        }
        Command::Spectrum { path } => {
            let lattice = load_lattice(path)?;
            let frame = match Frame::verify(lattice) {
                Ok(f) => f,
                Err(e) => return fail(&e.to_string()),
            };
            let sp = frame.spectrum();
            out.emit(&json::to_pretty(&json::space_to_json(&sp.space)))?;
            if let Ok(order) = sp.space.specialization_order() {
                out.emit_dot(&dot::poset_dot(&order))?;
            }
            ExitCode::SUCCESS
        }
        Command::Dual { path } => {
            let space = load_space(path)?;
            match space.hochster_dual() {
                Ok(d) => {
                    out.emit(&json::to_pretty(&json::space_to_json(&d)))?;
                    if let Ok(order) = d.specialization_order() {
                        out.emit_dot(&dot::poset_dot(&order))?;
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e.to_string())?,
            }
        }
        Command::IdealCompletion { path } => {
            let lattice = load_lattice(path)?;
            let completion = lattice.ideal_completion();
            out.emit(&json::to_pretty(&json::lattice_to_json(
                &completion.lattice,
            )))?;
            out.emit_dot(&dot::poset_dot(completion.lattice.carrier()))?;
            ExitCode::SUCCESS
        }
        Command::Stone {
            to_space,
            to_lattice,
            roundtrip,
            path,
        } => {
            if *to_space {
                let lattice = load_lattice(path)?;
                match duality::lattice_to_space(&lattice) {
                    Ok(space) => {
                        out.emit(&json::to_pretty(&json::space_to_json(&space)))?;
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail(&e.to_string())?,
                }
            } else if *to_lattice {
                let space = load_space(path)?;
                match duality::space_to_lattice(&space) {
                    Ok(lattice) => {
                        out.emit(&json::to_pretty(&json::lattice_to_json(&lattice)))?;
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail(&e.to_string())?,
                }
            } else {
                debug_assert!(*roundtrip);
                let mut report = Report::new("stone --roundtrip", started);
                match sniff_kind(path)? {
                    Kind::Lattice => {
                        let lattice = load_lattice(path)?;
                        match duality::stone_roundtrip_lattice(&lattice) {
                            Ok(r) => report.push(
                                "lattice-roundtrip",
                                r.ok,
                                r.witness.map(|w| format!("iso: {w:?}")),
                            ),
                            Err(e) => report.push("lattice-roundtrip", false, Some(e.to_string())),
                        }
                    }
                    Kind::Space => {
                        let space = load_space(path)?;
                        match duality::stone_roundtrip_space(&space) {
                            Ok(r) => report.push(
                                "space-roundtrip",
                                r.ok,
                                r.witness.map(|w| format!("homeo: {w:?}")),
                            ),
                            Err(e) => report.push("space-roundtrip", false, Some(e.to_string())),
                        }
                    }
                }
                let report = report.finish(started);
                let ok = report.ok;
                out.emit(&json::to_pretty(&report))?;
                exit_ok(ok)
            }
        }
        Command::Model { cmd } => run_model(cmd, &out, started)?,
        Command::Enumerate {
            kind,
            n,
            count,
            seed,
            max_size,
        } => {
            let mut lines = String::new();
            match kind.as_str() {
                "posets" => {
                    for p in enumerate::posets(*n)? {
                        lines.push_str(&line(&json::poset_to_json(&p)));
                    }
                }
                "lattices" => {
                    for l in enumerate::lattices(*n)? {
                        lines.push_str(&line(&json::lattice_to_json(&l)));
                    }
                }
                "spaces" => {
                    for s in enumerate::spaces(*n)? {
                        lines.push_str(&line(&json::space_to_json(&s)));
                    }
                }
                "random-lattices" => {
                    for l in enumerate::random_lattices(*count, max_size.unwrap_or(*n), *seed) {
                        lines.push_str(&line(&json::lattice_to_json(&l)));
                    }
                }
                other => return Err(format!("unknown kind: {other}").into()),
            }
            out.emit(&lines)?;
            ExitCode::SUCCESS
        }
    };
    Ok(code)
}

fn run_model(
    cmd: &ModelCmd,
    out: &Output<'_>,
    started: Instant,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    Ok(match cmd {
        ModelCmd::Verify { path } => {
            let scn = load_scenario(path)?;
            let model_report = checks::verify_scenario(&scn);
            let mut report = Report::new("model verify", started);
            for c in model_report.checks {
                report.push(c.name, c.pass, c.witness);
            }
            let report = report.finish(started);
            let ok = report.ok;
            out.emit(&json::to_pretty(&report))?;
            exit_ok(ok)
        }
        ModelCmd::Spectrum { path } => {
            let scn = load_scenario(path)?;
            let sp = ttmodel::bousfield_lattice(&scn.space).spectrum();
            out.emit(&json::to_pretty(&json::space_to_json(&sp.space)))?;
            ExitCode::SUCCESS
        }
        ModelCmd::Thick { path } => {
            let scn = load_scenario(path)?;
            let thick = ttmodel::thick_lattice(&scn.space);
            out.emit(&json::to_pretty(&json::lattice_to_json(thick.lattice())))?;
            out.emit_dot(&dot::poset_dot(thick.lattice().carrier()))?;
            ExitCode::SUCCESS
        }
        ModelCmd::Balmer { path } => {
            let scn = load_scenario(path)?;
            let balmer = checks::balmer_report(&scn.space);
            let labels = scn.space.primes().labels().to_vec();
            #[derive(serde::Serialize)]
            struct BalmerJson {
                primes: Vec<PrimeJson>,
                equals_spectrum_primes: bool,
                tensor_prime_ok: bool,
                homeomorphism_ok: bool,
            }
            #[derive(serde::Serialize)]
            struct PrimeJson {
                prime: String,
                class: Vec<String>,
            }
            let payload = BalmerJson {
                primes: labels
                    .iter()
                    .enumerate()
                    .map(|(p, l)| PrimeJson {
                        prime: l.clone(),
                        class: balmer.classes[p]
                            .0
                            .iter()
                            .map(|i| labels[i].clone())
                            .collect(),
                    })
                    .collect(),
                equals_spectrum_primes: balmer.equals_spectrum_primes,
                tensor_prime_ok: balmer.tensor_prime_ok,
                homeomorphism_ok: balmer.homeo_ok,
            };
            let ok = balmer.ok();
            out.emit(&json::to_pretty(&payload))?;
            exit_ok(ok)
        }
        ModelCmd::Recollement { path, u1, u2 } => {
            let scn = load_scenario(path)?;
            let parse = |labels: &[String]| -> Result<Subset, Box<dyn std::error::Error>> {
                let filtered: Vec<&String> = labels.iter().filter(|l| !l.is_empty()).collect();
                Ok(scn.space.subset_of_labels(&filtered)?)
            };
            let r = checks::recollement_decompose(&scn.space, parse(u1)?, parse(u2)?);
            #[derive(serde::Serialize)]
            struct RecollementJson {
                blocks: Vec<Vec<String>>,
                factor_sizes: [usize; 4],
                total: usize,
                ok: bool,
            }
            let payload = RecollementJson {
                blocks: r.blocks.iter().map(|&b| scn.space.label_set(b)).collect(),
                factor_sizes: r.factor_sizes,
                total: r.total,
                ok: r.ok(),
            };
            out.emit(&json::to_pretty(&payload))?;
            out.emit_dot(&dot::recollement_dot(&scn.space, &r))?;
            exit_ok(r.ok())
        }
    })
}

fn line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn exit_ok(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail(msg: &str) -> Result<ExitCode, Box<dyn std::error::Error>> {
    eprintln!("check failed: {msg}");
    Ok(ExitCode::from(1))
}

enum Kind {
    Lattice,
    Space,
}

fn sniff_kind(path: &Path) -> Result<Kind, Box<dyn std::error::Error>> {
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let obj = value.as_object().ok_or("input must be a JSON object")?;
    if obj.contains_key("points") || (obj.contains_key("poset") && obj.contains_key("side")) {
        Ok(Kind::Space)
    } else if obj.contains_key("elements") {
        Ok(Kind::Lattice)
    } else {
        Err("input is neither a lattice nor a space".into())
    }
}

fn load_lattice(path: &Path) -> Result<FiniteLattice, Box<dyn std::error::Error>> {
    let j: PosetJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(json::lattice_from_json(&j)?)
}

fn load_space(path: &Path) -> Result<FiniteSpace, Box<dyn std::error::Error>> {
    let j: SpaceJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(json::space_from_json(&j)?)
}

fn load_scenario(path: &Path) -> Result<ttmodel::Scenario, Box<dyn std::error::Error>> {
    let j: ScenarioJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(json::scenario_from_json(&j)?)
}
