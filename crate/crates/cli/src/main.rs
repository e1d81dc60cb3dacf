//! `ccsg`: generate keystreams, linearize generators and attack intercepts.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ccsg_core::algebra::RuleVector;
use ccsg_core::attack::{render_trace, run_attack, Verdict};
use ccsg_core::engines::{ca_generate, lfsr_generate, solve_cell_seed};
use ccsg_core::generators::{generate, shrink_generate, GeneratorSpec};
use ccsg_core::linearizer::{linearize_generator, synthesize_ca_pair};
use ccsg_core::{AttackError, BitSeq, Gf2Poly, SpecDocument};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ccsg", version, about = "Shrinking and clock-controlled shrinking generators: keystreams, CA models, attacks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print keystream bits as a 0/1 string.
    Generate {
        /// JSON spec with l1, l2, c1, c2, is1, is2 and optional taps.
        #[arg(long)]
        spec: PathBuf,
        /// Number of bits to print.
        #[arg(long)]
        bits: usize,
        /// Sequence to print; defaults to ccsg when taps are present, else shrink.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Absolute position of the first printed bit.
        #[arg(long, default_value_t = 0)]
        origin: usize,
        /// Register for --kind lfsr.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        register: u8,
        /// Cell (1-based) of the first CA model for --kind ca.
        #[arg(long, default_value_t = 1)]
        cell: usize,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the two 90/150 CA models of a generator.
    Linearize {
        /// JSON spec; initial states are not needed.
        #[arg(long)]
        spec: PathBuf,
        /// Also print every concatenation step.
        #[arg(long)]
        trace: bool,
    },
    /// Print the mirror pair of 90/150 rule vectors with a given characteristic polynomial.
    Synthesize {
        /// Exponent list, e.g. "0,2,5" for 1+x^2+x^5.
        #[arg(long)]
        poly: String,
    },
    /// Recover both initial states from intercepted keystream bits.
    Attack {
        /// JSON spec with the public parameters; is1 and is2 are ignored.
        #[arg(long)]
        spec: PathBuf,
        /// Intercepted bits as a 0/1 string.
        #[arg(long)]
        intercepted: String,
        /// Absolute keystream position of the first intercepted bit.
        #[arg(long, default_value_t = 0)]
        origin: usize,
        /// Print the reconstructed bits and the hypothesis tree on standard error.
        #[arg(long)]
        trace: bool,
        /// Write the JSON result to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Shrink,
    Ccsg,
    Lfsr,
    Ca,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(e: impl std::fmt::Display) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn read_spec(path: &Path) -> Result<SpecDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    SpecDocument::from_json(&text).map_err(Failure::validation)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::validation(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(Failure::validation)
        }
    }
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn keystream_bits(spec: &GeneratorSpec, kind: Kind, n: usize, register: u8, cell: usize) -> Result<Vec<bool>, Failure> {
    Ok(match kind {
        Kind::Shrink => shrink_generate(spec, n).map_err(Failure::validation)?.into_bits(),
        Kind::Ccsg => generate(spec, n).into_bits(),
        Kind::Lfsr => {
            let st = if register == 1 { spec.sr1() } else { spec.sr2() };
            lfsr_generate(&st, n).into_bits()
        }
        Kind::Ca => {
            let public = spec.public();
            let lin = linearize_generator(public.l1(), public.c2(), public.w()).map_err(Failure::validation)?;
            let model = lin.first();
            if cell == 0 || cell > model.len() {
                return Err(Failure::validation(format!("cell {cell} outside 1..={}", model.len())));
            }
            let target = generate(spec, 2 * model.len());
            let st = solve_cell_seed(model, 1, &target)
                .ok_or_else(|| Failure::validation("the CA model does not realize this keystream"))?;
            ca_generate(&st, n).swap_remove(cell - 1).into_bits()
        }
    })
}

fn cmd_generate(
    spec: &Path,
    n: usize,
    kind: Option<Kind>,
    origin: usize,
    register: u8,
    cell: usize,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let spec = read_spec(spec)?.spec().map_err(Failure::validation)?;
    let kind = kind.unwrap_or(if spec.public().is_ccsg() { Kind::Ccsg } else { Kind::Shrink });
    let bits = keystream_bits(&spec, kind, origin + n, register, cell)?;
    emit(output, &format!("{}\n", bit_string(&bits[origin..])))
}

fn print_vector(label: &str, rv: &RuleVector) -> String {
    format!("{label} {} {}\n", rv.to_binary(), rv.to_hex())
}

fn cmd_linearize(spec: &Path, trace: bool) -> Result<(), Failure> {
    let public = read_spec(spec)?.public().map_err(Failure::validation)?;
    let lin = linearize_generator(public.l1(), public.c2(), public.w()).map_err(Failure::validation)?;
    let mut out = format!("exponent {}\nP {}\nmodel {}\n", lin.exponent, lin.p.to_exponent_list(), lin.model_char_poly());
    if trace {
        for (k, chain) in lin.chains.iter().enumerate() {
            for (step, rv) in chain.iter().enumerate() {
                out.push_str(&print_vector(&format!("CA{} step {step}:", k + 1), rv));
            }
        }
    }
    out.push_str(&print_vector("CA1", lin.first()));
    out.push_str(&print_vector("CA2", lin.second()));
    emit(None, &out)
}

fn cmd_synthesize(poly: &str) -> Result<(), Failure> {
    let p = Gf2Poly::parse_exponent_list(poly).map_err(Failure::validation)?;
    let (a, b) = synthesize_ca_pair(&p).map_err(Failure::validation)?;
    emit(None, &format!("{}{}", print_vector("CA1", &a), print_vector("CA2", &b)))
}

fn cmd_attack(spec: &Path, intercepted: &str, origin: usize, trace: bool, output: Option<&Path>) -> Result<(), Failure> {
    let public = read_spec(spec)?.public().map_err(Failure::validation)?;
    let bits = BitSeq::parse(intercepted).map_err(|e| Failure::validation(format!("intercepted: {e}")))?;
    let z = BitSeq::with_origin(bits.into_bits(), origin);
    let run = run_attack(&z, &public).map_err(|e| match e {
        AttackError::ConflictingReconstruction { .. } | AttackError::RegenerationMismatch { .. } => {
            Failure { code: 3, message: e.to_string() }
        }
        other => Failure::validation(other),
    })?;
    if trace {
        eprintln!("known keystream bits by column:\n{}", run.phase1.known.render(false));
        eprintln!("hypotheses:\n{}", render_trace(&run.search));
    }
    let nodes_expanded = run.nodes_expanded();
    let reconstructed = run.phase1.reconstructed_positions();
    match run.verdict {
        Verdict::Unique { candidate, keystream } => {
            let doc = json!({
                "is1": bit_string(&candidate.is1),
                "is2": bit_string(&candidate.is2),
                "keystream": keystream.to_string(),
                "reconstructed_positions": reconstructed,
                "nodes_expanded": nodes_expanded,
            });
            emit(output, &format!("{doc}\n"))
        }
        Verdict::Ambiguous(candidates) => {
            let doc = json!({ "candidates": candidates, "nodes_expanded": nodes_expanded });
            emit(output, &format!("{doc}\n"))?;
            Err(Failure { code: 4, message: format!("{} candidate state pairs remain", candidates.len()) })
        }
        Verdict::Exhausted => Err(Failure { code: 3, message: AttackError::Exhausted.to_string() }),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate { spec, bits, kind, origin, register, cell, output } => {
            cmd_generate(spec, *bits, *kind, *origin, *register, *cell, output.as_deref())
        }
        Command::Linearize { spec, trace } => cmd_linearize(spec, *trace),
        Command::Synthesize { poly } => cmd_synthesize(poly),
        Command::Attack { spec, intercepted, origin, trace, output } => {
            cmd_attack(spec, intercepted, *origin, *trace, output.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
