//! `spnr` — truth-table circuit simulation from stdin, plus network and
//! binding-statistics subcommands.
//!
//! With no subcommand the program reads a truth-table job from stdin
//! (`spnr < func.txt`): 2^n `input:output` lines in increasing output
//! order, then the input to evaluate, then a mode letter (A, P, or S).

mod job;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use job::{resolve_seed, run_job, stdin_driver, OutputFormat};
use spnr::network::{eval_network, network_distribution};
use spnr::posner::{entanglement_measure, joint_probs, p_react};
use spnr::seeding::trial_rng;
use spnr::{BitString, JointPseudoSpinState64, Network64};

#[derive(Parser)]
#[command(name = "spnr", about = "restricted-gate-set circuit simulator")]
struct Cli {
    /// Number of simulation trials (modes S and `network eval`)
    #[arg(long, global = true, default_value_t = 100)]
    trials: u64,

    /// Master seed; omitted means system entropy (the chosen seed is
    /// reported on stderr)
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate or enumerate a layered threshold/quantum network
    Network {
        #[command(subcommand)]
        command: NetworkCommand,
    },
    /// Pseudo-spin binding statistics
    Posner {
        #[command(subcommand)]
        command: PosnerCommand,
    },
}

#[derive(Subcommand)]
enum NetworkCommand {
    /// Sample forward passes of a network description file
    Eval {
        /// JSON network description
        file: PathBuf,
        /// input bit string for the first layer
        #[arg(long)]
        input: String,
    },
    /// Exact output distribution by branch enumeration
    Dist {
        file: PathBuf,
        #[arg(long)]
        input: String,
    },
}

#[derive(Subcommand)]
enum PosnerCommand {
    /// Bonding probability of one entangled pair state
    React { state: PathBuf },
    /// Joint binding distribution of two pair states
    Joint { a: PathBuf, b: PathBuf },
    /// Binding-correlation measure of two pair states
    Ent { a: PathBuf, b: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(mut cli: Cli) -> anyhow::Result<()> {
    match cli.command.take() {
        None => {
            let mut raw = String::new();
            std::io::stdin().read_to_string(&mut raw)?;
            let mut spec = stdin_driver(&raw)?;
            spec.trials = cli.trials;
            spec.seed = cli.seed;
            spec.format = cli.format;
            let out = run_job(&spec)?;
            for line in &out.stderr {
                eprintln!("{line}");
            }
            print!("{}", out.stdout);
            Ok(())
        }
        Some(Command::Network { command }) => run_network(command, &cli),
        Some(Command::Posner { command }) => run_posner(command, cli.format),
    }
}

fn load_network(path: &PathBuf) -> anyhow::Result<Network64> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn load_state(path: &PathBuf) -> anyhow::Result<JointPseudoSpinState64> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn run_network(command: NetworkCommand, cli: &Cli) -> anyhow::Result<()> {
    match command {
        NetworkCommand::Eval { file, input } => {
            let net = load_network(&file)?;
            let input: BitString = input.parse()?;
            let (seed, noted) = resolve_seed(cli.seed);
            if let Some(note) = noted {
                eprintln!("{note}");
            }
            let outputs: Vec<BitString> = (0..cli.trials)
                .map(|i| eval_network(&net, &input, &mut trial_rng(seed, i)))
                .collect::<Result<_, _>>()?;
            match cli.format {
                OutputFormat::Plain => {
                    for o in &outputs {
                        println!("{o}");
                    }
                }
                OutputFormat::Json => {
                    let mut counts = std::collections::BTreeMap::<String, u64>::new();
                    for o in &outputs {
                        *counts.entry(o.to_string()).or_default() += 1;
                    }
                    println!(
                        "{}",
                        json!({ "seed": seed, "trials": cli.trials, "counts": counts })
                    );
                }
            }
        }
        NetworkCommand::Dist { file, input } => {
            let net = load_network(&file)?;
            let input: BitString = input.parse()?;
            let dist = network_distribution(&net, &input)?;
            match cli.format {
                OutputFormat::Plain => {
                    for (outcome, p) in dist.iter() {
                        println!("{outcome} {p}");
                    }
                }
                OutputFormat::Json => {
                    println!("{}", json!({ "distribution": dist.to_map() }));
                }
            }
        }
    }
    Ok(())
}

fn run_posner(command: PosnerCommand, format: OutputFormat) -> anyhow::Result<()> {
    match command {
        PosnerCommand::React { state } => {
            let p = p_react(&load_state(&state)?)?;
            match format {
                OutputFormat::Plain => println!("{p}"),
                OutputFormat::Json => println!("{}", json!({ "p_react": p })),
            }
        }
        PosnerCommand::Joint { a, b } => {
            let d = joint_probs(&load_state(&a)?, &load_state(&b)?)?;
            print_joint(&d.p, format, None);
        }
        PosnerCommand::Ent { a, b } => {
            let d = joint_probs(&load_state(&a)?, &load_state(&b)?)?;
            let e = entanglement_measure(&d);
            print_joint(&d.p, format, Some(e));
        }
    }
    Ok(())
}

fn print_joint(p: &[[f64; 2]; 2], format: OutputFormat, measure: Option<f64>) {
    match format {
        OutputFormat::Plain => {
            println!("P11 {}", p[1][1]);
            println!("P10 {}", p[1][0]);
            println!("P01 {}", p[0][1]);
            println!("P00 {}", p[0][0]);
            if let Some(e) = measure {
                println!("E {e}");
            }
        }
        OutputFormat::Json => {
            let mut body = json!({
                "joint": { "11": p[1][1], "10": p[1][0], "01": p[0][1], "00": p[0][0] }
            });
            if let Some(e) = measure {
                body["entanglement"] = json!(e);
            }
            println!("{body}");
        }
    }
}
