//! Command-line surface: classification queries, signature recovery,
//! table and cube emission, verification sweeps, and reduction of
//! built-in or user-supplied gamma sets.
//!
//! Exit codes: 0 all-pass, 1 verification or validation failure, 2 usage
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cliffordlab::gamma_json::{matrix_to_data, GammaSetFile};
use cliffordlab::matrep::{reduce, MatrixRep, Reduction};
use cliffordlab::render;
use cliffordlab::tol::Tolerances;
use cliffordlab::verify::{self, VerifyOptions, DEFAULT_SEED, MAX_BLADE_N, MAX_MATRIX_N};

use cliffordlab_core::bits::SignBit;
use cliffordlab_core::classify::{recover_signature, recover_signature_from_s};
use cliffordlab_core::Signature;

const EXIT_OK: u8 = 0;
const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_sign(value: &str) -> Result<SignBit, String> {
    match value {
        "+1" => Ok(SignBit::Plus),
        "-1" => Ok(SignBit::Minus),
        other => Err(format!("expected \"+1\" or \"-1\", got \"{other}\"")),
    }
}

#[derive(Parser)]
#[command(
    name = "cliffordlab",
    version,
    about = "Clifford algebra signatures, involution elements and matrix reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the Clifford algebra of a signature (k, l).
    Classify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recover nu mod 8 (and candidate signatures) from involution data.
    #[command(group(ArgGroup::new("parity").required(true).args(["omega_sq", "s"])))]
    Recover {
        #[arg(long)]
        n: u32,
        #[arg(long = "theta-sq", value_parser = parse_sign, allow_hyphen_values = true)]
        theta_sq: SignBit,
        #[arg(long = "omega-sq", value_parser = parse_sign, allow_hyphen_values = true)]
        omega_sq: Option<SignBit>,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        s: Option<SignBit>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the n-versus-nu classification table.
    Table {
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the nu-digit cube of division algebras.
    Cube {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the verification sweeps and report each identity.
    Verify {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u32,
        #[arg(long = "with-matrix")]
        with_matrix: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduce a representation to its real or quaternionic subalgebra.
    #[command(group(ArgGroup::new("source").required(true).multiple(true).args(["k", "input"])))]
    Reduce {
        #[arg(long, requires = "l", conflicts_with = "input")]
        k: Option<u32>,
        #[arg(long, requires = "k", conflicts_with = "input")]
        l: Option<u32>,
        /// Gamma-set JSON file ({"m": int, "gammas": [...]}).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Classify { k, l, format, output } => cmd_classify(k, l, format, output.as_deref()),
        Command::Recover { n, theta_sq, omega_sq, s, format, output } => {
            cmd_recover(n, theta_sq, omega_sq, s, format, output.as_deref())
        }
        Command::Table { max_n, format, output } => cmd_table(max_n, format, output.as_deref()),
        Command::Cube { format, output } => cmd_cube(format, output.as_deref()),
        Command::Verify { max_n, with_matrix, seed, format, output } => {
            cmd_verify(max_n, with_matrix, seed, format, output.as_deref())
        }
        Command::Reduce { k, l, input, format, output } => {
            cmd_reduce(k, l, input.as_deref(), format, output.as_deref())
        }
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn emit(rendered: &str, output: Option<&Path>) -> u8 {
    match output {
        None => {
            print!("{rendered}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(path, rendered) {
            Ok(()) => EXIT_OK,
            Err(err) => {
                eprintln!("error: cannot write {}: {err}", path.display());
                EXIT_FAILURE
            }
        },
    }
}

fn cmd_classify(k: u32, l: u32, format: Format, output: Option<&Path>) -> u8 {
    let sig = Signature::new(k, l);
    let rendered = match format {
        Format::Text => render::classify_text(sig),
        Format::Json => format!("{:#}\n", render::classify_json(sig)),
        Format::Csv => render::classify_csv(sig),
    };
    emit(&rendered, output)
}

fn cmd_recover(
    n: u32,
    theta_sq: SignBit,
    omega_sq: Option<SignBit>,
    s: Option<SignBit>,
    format: Format,
    output: Option<&Path>,
) -> u8 {
    let recovered = match (omega_sq, s) {
        (Some(omega), _) => recover_signature(n, theta_sq, omega),
        (None, Some(s)) => recover_signature_from_s(n, theta_sq, s),
        (None, None) => unreachable!("clap group requires one"),
    };
    let residue = match recovered {
        Ok(residue) => residue,
        Err(err) => return usage_error(&err.to_string()),
    };
    let rendered = match format {
        Format::Text => {
            let sources = match (omega_sq, s) {
                (Some(omega), _) => format!("theta^2 = {theta_sq}, omega^2 = {omega}"),
                (None, Some(s)) => format!("theta^2 = {theta_sq}, s = {s}"),
                _ => unreachable!(),
            };
            render::recover_text(n, residue, &sources)
        }
        Format::Json => {
            let sources = json!({
                "theta_sq": theta_sq.value(),
                "omega_sq": omega_sq.map(SignBit::value),
                "s": s.map(SignBit::value),
            });
            format!("{:#}\n", render::recover_json(n, residue, sources))
        }
        Format::Csv => {
            let mut out = String::from("n,nu_mod_8,k,l\n");
            for sig in render::recover_candidates(n, residue) {
                out.push_str(&format!("{n},{residue},{},{}\n", sig.k, sig.l));
            }
            out
        }
    };
    emit(&rendered, output)
}

fn cmd_table(max_n: u32, format: Format, output: Option<&Path>) -> u8 {
    if max_n > 7 {
        return usage_error("--max-n must be at most 7 for the table");
    }
    let rendered = match format {
        Format::Text => render::table_text(max_n),
        Format::Json => format!("{:#}\n", render::table_json(max_n)),
        Format::Csv => render::table_csv(max_n),
    };
    emit(&rendered, output)
}

fn cmd_cube(format: Format, output: Option<&Path>) -> u8 {
    let rendered = match format {
        Format::Text => render::cube_text(),
        Format::Json => format!("{:#}\n", render::cube_json()),
        Format::Csv => render::cube_csv(),
    };
    emit(&rendered, output)
}

fn cmd_verify(max_n: u32, with_matrix: bool, seed: u64, format: Format, output: Option<&Path>) -> u8 {
    if max_n < 2 || !max_n.is_multiple_of(2) {
        return usage_error("--max-n must be even and at least 2");
    }
    if max_n > MAX_BLADE_N {
        return usage_error(&format!("--max-n must be at most {MAX_BLADE_N}"));
    }
    if with_matrix && max_n > MAX_MATRIX_N {
        return usage_error(&format!("--max-n must be at most {MAX_MATRIX_N} with --with-matrix"));
    }

    let report = verify::run(&VerifyOptions {
        max_n,
        with_matrix,
        seed,
        tol: Tolerances::from_env(),
    });
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => format!("{}\n", report.to_json_string()),
        Format::Csv => report.to_csv(),
    };
    let wrote = emit(&rendered, output);
    if wrote != EXIT_OK {
        return wrote;
    }
    if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn render_reduction(rep: &MatrixRep, red: &Reduction, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "kind: {}\nsignature: ({}, {})   m = {}   spinor dim = {}\n",
                red.kind.label(),
                rep.effective_signature().k,
                rep.effective_signature().l,
                rep.m(),
                rep.dim()
            );
            out.push_str(&format!(
                "reduction defect: {:.3e} (lambda = {:+.6})\n",
                red.max_defect, red.structure.lambda
            ));
            out.push_str("basis change (columns):\n");
            out.push_str(&compact_matrix(&red.basis_change));
            for (j, gamma) in red.gammas.iter().enumerate() {
                out.push_str(&format!("transformed gamma[{j}]:\n"));
                out.push_str(&compact_matrix(gamma));
            }
            out
        }
        Format::Json | Format::Csv => {
            let value = json!({
                "m": rep.m(),
                "gammas": red.gammas.iter().map(matrix_to_data).collect::<Vec<_>>(),
                "kind": red.kind.label(),
                "basis_change": matrix_to_data(&red.basis_change),
                "lambda": red.structure.lambda,
                "max_defect": red.max_defect,
            });
            format!("{value:#}\n")
        }
    }
}

fn compact_matrix(m: &cliffordlab::matrep::CMat) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        out.push_str("  ");
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            out.push_str(&format!("{:>6.2}{:+.2}i ", z.re, z.im));
        }
        out.push('\n');
    }
    out
}

fn cmd_reduce(
    k: Option<u32>,
    l: Option<u32>,
    input: Option<&Path>,
    format: Format,
    output: Option<&Path>,
) -> u8 {
    if format == Format::Csv {
        return usage_error("reduce supports --format text or json");
    }
    let tol = Tolerances::from_env();

    let rep = match (k, l, input) {
        (Some(k), Some(l), None) => match MatrixRep::build(Signature::new(k, l)) {
            Ok(rep) => rep,
            Err(err) => return usage_error(&err.to_string()),
        },
        (None, None, Some(path)) => {
            let raw = match std::fs::read_to_string(path) {
                Ok(raw) => raw,
                Err(err) => return usage_error(&format!("cannot read {}: {err}", path.display())),
            };
            let file: GammaSetFile = match serde_json::from_str(&raw) {
                Ok(file) => file,
                Err(err) => return usage_error(&format!("malformed gamma-set JSON: {err}")),
            };
            match file.into_rep(&tol) {
                Ok(rep) => rep,
                Err(err) => {
                    eprintln!("error: representation validation failed: {err}");
                    return EXIT_FAILURE;
                }
            }
        }
        _ => return usage_error("pass either --k and --l, or --input"),
    };

    match reduce(&rep, &tol) {
        Ok(red) => emit(&render_reduction(&rep, &red, format), output),
        Err(err) => {
            eprintln!("error: reduction failed: {err}");
            EXIT_FAILURE
        }
    }
}
