//! Command line interface for exact completion certificates of unimodular
//! rows and for the floating-point topology of the maps those rows induce.
//!
//! Every subcommand reads ring elements as comma-separated polynomial
//! expressions, emits either a human-readable text report or canonical JSON,
//! and exits with 0 on success, 1 on a domain failure, and 2 on a syntax
//! failure. JSON output is byte-stable: identical invocations produce
//! identical bytes.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use unirow::topology::{
    eval_row_map, sample_variety, straight_line_homotopy_check, winding_of_row_map,
    SampleGenerator, VarietySample, MEMBERSHIP_TOL,
};
use unirow::unimodular::certificate::FactorDto;
use unirow::unimodular::euclid::euclid_complete;
use unirow::unimodular::lift::{transform_row_with_lift, transform_row_with_lift_mod};
use unirow::unimodular::skew::{conjugate_skew, quaternion_left_matrix, skew_matrix};
use unirow::unimodular::swan::swan_complete;
use unirow::unimodular::{partial_unimodular_reduce, vaserstein_isotopy};
use unirow::{
    certificate_from_json, parse_ring, Certificate, CompletionCertificate, ElementaryFactorization,
    ElementaryOp, Error, Polynomial, Provenance, Result, RingContext, RingMatrix, UnimodularRow,
};

/// Ring used by `winding` when no `--ring` is given: the unit circle.
const DEFAULT_LOOP_RING: &str = "Q[x,y]/(x^2+y^2-1)";

#[derive(Parser)]
#[command(
    name = "unirow",
    version,
    about = "Exact certificates for unimodular rows and the topology of their induced maps",
    long_about = "Constructs and checks completion certificates for unimodular rows over Z, Q, \
multivariate rational polynomial rings, and principal quotients, and analyzes the maps such \
rows induce on sampled real varieties.\n\nRings are written as Z, Q, Q[x,y], or \
Q[x,y]/(x^2+y^2-1). Rows and witnesses are comma-separated polynomial expressions; whitespace \
is insignificant. Exit codes: 0 success, 1 domain failure, 2 syntax failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a witness certifies a row as unimodular
    Verify {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries, comma separated
        #[arg(long)]
        row: String,
        /// Witness entries, comma separated
        #[arg(long)]
        witness: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reduce a row to the first standard basis vector and emit a certificate
    ///
    /// Rows of length two over Z or a univariate polynomial ring are reduced
    /// by remainder descent. Longer rows need `--prefix-witness d1,...,di`
    /// with sum(a_k d_k) = 1 over the first i entries.
    Complete {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries, comma separated
        #[arg(long)]
        row: String,
        /// Witness for a proper prefix of the row, comma separated
        #[arg(long)]
        prefix_witness: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Connect two witnesses of one row by a determinant-one matrix path
    ///
    /// Takes `--witness` twice: the starting witness and the target witness.
    /// The certificate carries a matrix path over the ring extended by a
    /// fresh parameter.
    Isotopy {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries, comma separated
        #[arg(long)]
        row: String,
        /// Witness entries, comma separated; give this flag exactly twice
        #[arg(long)]
        witness: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Complete a length-3 row with squared first entry from a witness pair
    ///
    /// Given a row (a, b, c) and a witness (a', b', c') with
    /// aa' + bb' + cc' = 1, emits a certificate for (a^2, b, c).
    Swan {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries a, b, c
        #[arg(long)]
        row: String,
        /// Witness entries a', b', c'
        #[arg(long)]
        witness: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lift a factorization through a quotient and apply it upstairs
    ///
    /// The operations act over the quotient `--ring`; the row and witness
    /// live over its base polynomial ring (over Z when `--mod` is given).
    /// Prints a completion certificate when the lifted factorization lands
    /// on the first standard basis vector, otherwise a transport report.
    Lift {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries over the base ring, comma separated
        #[arg(long)]
        row: String,
        /// Witness entries over the base ring, comma separated
        #[arg(long)]
        witness: String,
        /// Integer modulus; requires --ring Z
        #[arg(long = "mod")]
        modulus: Option<String>,
        /// Shear operations as JSON: [[i, j, "lambda"], ...] with 1-based indices
        #[arg(value_name = "OPS")]
        ops: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the 4x4 alternating form of a length-3 row and pairing vector
    Skew {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries a1, a2, a3
        #[arg(long)]
        row: String,
        /// Pairing vector entries b1, b2, b3
        #[arg(long)]
        witness: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Conjugate the alternating form of a row by elementary operations
    ///
    /// The operations describe a 3x3 elementary factorization T; the form is
    /// conjugated by the block matrix diag(1, T).
    Conjugate {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries a1, a2, a3
        #[arg(long)]
        row: String,
        /// Pairing vector entries b1, b2, b3
        #[arg(long)]
        witness: String,
        /// Shear operations as JSON: [[i, j, "lambda"], ...] with 1-based indices
        #[arg(value_name = "OPS")]
        ops: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the left-multiplication matrix of a quaternion
    ///
    /// The four row entries are the coefficients of 1, i, j, k. The
    /// determinant of the resulting 4x4 matrix is the squared norm.
    Quaternion {
        #[command(flatten)]
        ring: RingArg,
        /// Quaternion coefficients x1, x2, x3, x4
        #[arg(long)]
        row: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Trace the map a row induces on a sampled real variety
    ///
    /// The ring must be a quotient in two variables (sampled as a circle
    /// loop) or three variables (sampled as a latitude-longitude sphere
    /// grid). Text output is CSV; JSON output is the full trace.
    Evaluate {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries, comma separated
        #[arg(long)]
        row: String,
        #[command(flatten)]
        samples: SamplesArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Test admissibility of the straight-line homotopy between two rows
    ///
    /// Takes `--row` twice. The homotopy is admissible when the segment
    /// between the two induced maps stays away from the origin at every
    /// sampled point and interpolation step.
    Homotopy {
        #[command(flatten)]
        ring: RingArg,
        /// Row entries, comma separated; give this flag exactly twice
        #[arg(long)]
        row: Vec<String>,
        #[command(flatten)]
        samples: SamplesArg,
        /// Interpolation steps between the two maps
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the winding number of a length-2 row around a sampled loop
    ///
    /// Without `--ring` the row is evaluated on the unit circle
    /// Q[x,y]/(x^2+y^2-1).
    Winding {
        /// Ring to sample; must produce a closed loop
        #[arg(long)]
        ring: Option<String>,
        /// Row entries, comma separated
        #[arg(long)]
        row: String,
        #[command(flatten)]
        samples: SamplesArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-check a serialized certificate from its file alone
    #[command(name = "verify-cert")]
    VerifyCert {
        /// Path to a certificate JSON file
        #[arg(value_name = "FILE")]
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct RingArg {
    /// Ring to work over: Z, Q, Q[x,...], or Q[x,...]/(modulus)
    #[arg(long)]
    ring: String,
}

#[derive(Args)]
struct SamplesArg {
    /// Sample count along each closed direction of the variety
    #[arg(long, default_value_t = 360)]
    samples: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Command {
    fn output(&self) -> &OutputArgs {
        match self {
            Command::Verify { output, .. }
            | Command::Complete { output, .. }
            | Command::Isotopy { output, .. }
            | Command::Swan { output, .. }
            | Command::Lift { output, .. }
            | Command::Skew { output, .. }
            | Command::Conjugate { output, .. }
            | Command::Quaternion { output, .. }
            | Command::Evaluate { output, .. }
            | Command::Homotopy { output, .. }
            | Command::Winding { output, .. }
            | Command::VerifyCert { output, .. } => output,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.command.output().format;
    let dest = cli.command.output().out.clone();
    match execute(&cli.command, format) {
        Ok(body) => match dest {
            Some(path) => match fs::write(&path, format!("{body}\n")) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error[io]: cannot write '{}': {e}", path.display());
                    ExitCode::from(1)
                }
            },
            None => emit(&body),
        },
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(if e.is_syntax() { 2 } else { 1 })
        }
    }
}

/// Print to stdout, treating a closed pipe as a normal end of output.
fn emit(body: &str) -> ExitCode {
    let mut out = io::stdout().lock();
    match writeln!(out, "{body}").and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[io]: cannot write to stdout: {e}");
            ExitCode::from(1)
        }
    }
}

fn execute(command: &Command, format: Format) -> Result<String> {
    match command {
        Command::Verify { ring, row, witness, .. } => {
            let ctx = parse_ring(&ring.ring)?;
            let entries = parse_row(&ctx, row)?;
            let wit = parse_row(&ctx, witness)?;
            let row = UnimodularRow::new(ctx.clone(), entries, wit)?;
            Ok(match format {
                Format::Text => "OK".into(),
                Format::Json => pretty(json!({
                    "ok": true,
                    "ring": ctx.to_string(),
                    "row": poly_strings(row.entries()),
                    "witness": poly_strings(row.witness()),
                })),
            })
        }
        Command::Complete { ring, row, prefix_witness, .. } => {
            let cert = complete_row(&ring.ring, row, prefix_witness.as_deref())?;
            Ok(render_certificate(&Certificate::Completion(cert), format))
        }
        Command::Isotopy { ring, row, witness, .. } => {
            if witness.len() != 2 {
                return Err(Error::Parse {
                    position: 0,
                    message: format!(
                        "isotopy needs --witness exactly twice, got {} occurrence(s)",
                        witness.len()
                    ),
                });
            }
            let ctx = parse_ring(&ring.ring)?;
            let a = parse_row(&ctx, row)?;
            let b = parse_row(&ctx, &witness[0])?;
            let c = parse_row(&ctx, &witness[1])?;
            let cert = vaserstein_isotopy(&ctx, &a, &b, &c)?;
            Ok(render_certificate(&Certificate::Isotopy(cert), format))
        }
        Command::Swan { ring, row, witness, .. } => {
            let ctx = parse_ring(&ring.ring)?;
            let a = parse_row(&ctx, row)?;
            let b = parse_row(&ctx, witness)?;
            let cert = swan_complete(&ctx, &a, &b)?;
            Ok(render_certificate(&Certificate::Completion(cert), format))
        }
        Command::Lift { ring, row, witness, modulus, ops, .. } => {
            lift_row(&ring.ring, row, witness, modulus.as_deref(), ops, format)
        }
        Command::Skew { ring, row, witness, .. } => {
            let ctx = parse_ring(&ring.ring)?;
            let a = parse_row(&ctx, row)?;
            let b = parse_row(&ctx, witness)?;
            render_matrix(&skew_matrix(&ctx, &a, &b)?, format)
        }
        Command::Conjugate { ring, row, witness, ops, .. } => {
            let ctx = parse_ring(&ring.ring)?;
            let a = parse_row(&ctx, row)?;
            let b = parse_row(&ctx, witness)?;
            let form = skew_matrix(&ctx, &a, &b)?;
            let tau = ElementaryFactorization::new(ctx.clone(), 3, parse_ops(&ctx, ops)?)?;
            render_matrix(&conjugate_skew(&form, &tau)?, format)
        }
        Command::Quaternion { ring, row, .. } => {
            let ctx = parse_ring(&ring.ring)?;
            let x = parse_row(&ctx, row)?;
            render_matrix(&quaternion_left_matrix(&ctx, &x)?, format)
        }
        Command::Evaluate { ring, row, samples, .. } => {
            let ctx = parse_ring(&ring.ring)?;
            let entries = parse_row(&ctx, row)?;
            let sample = variety_sample(&ctx, samples.samples)?;
            let trace = eval_row_map(&entries, &sample)?;
            Ok(match format {
                Format::Text => trace.to_csv().trim_end().to_string(),
                Format::Json => trace.to_json(),
            })
        }
        Command::Homotopy { ring, row, samples, steps, .. } => {
            if row.len() != 2 {
                return Err(Error::Parse {
                    position: 0,
                    message: format!(
                        "homotopy needs --row exactly twice, got {} occurrence(s)",
                        row.len()
                    ),
                });
            }
            let ctx = parse_ring(&ring.ring)?;
            let sample = variety_sample(&ctx, samples.samples)?;
            let f = eval_row_map(&parse_row(&ctx, &row[0])?, &sample)?;
            let g = eval_row_map(&parse_row(&ctx, &row[1])?, &sample)?;
            let report = straight_line_homotopy_check(&f, &g, *steps)?;
            Ok(match format {
                Format::Text => {
                    format!("admissible: {}\nmin_norm: {}", report.admissible, report.min_norm)
                }
                Format::Json => pretty(json!({
                    "admissible": report.admissible,
                    "min_norm": report.min_norm,
                })),
            })
        }
        Command::Winding { ring, row, samples, .. } => {
            let spec = ring.as_deref().unwrap_or(DEFAULT_LOOP_RING);
            let ctx = parse_ring(spec)?;
            let entries = parse_row(&ctx, row)?;
            let sample = variety_sample(&ctx, samples.samples)?;
            let report = winding_of_row_map(&entries, &sample)?;
            Ok(match format {
                Format::Text => format!(
                    "winding: {}\nresidual: {}\nmin_norm: {}",
                    report.winding, report.residual, report.min_norm
                ),
                Format::Json => pretty(json!({
                    "min_norm": report.min_norm,
                    "residual": report.residual,
                    "winding": report.winding,
                })),
            })
        }
        Command::VerifyCert { file, .. } => {
            let src = fs::read_to_string(file).map_err(|e| Error::CertificateInvalid {
                reason: format!("cannot read '{}': {e}", file.display()),
            })?;
            let cert = certificate_from_json(&src)?;
            cert.verify()?;
            Ok(match format {
                Format::Text => {
                    format!("OK: {} certificate ({})", cert.kind(), cert.provenance_name())
                }
                Format::Json => pretty(json!({
                    "kind": cert.kind(),
                    "ok": true,
                    "provenance": cert.provenance_name(),
                })),
            })
        }
    }
}

/// Completion dispatch: remainder descent for pairs, prefix-witness
/// reduction for longer rows.
fn complete_row(
    ring: &str,
    row: &str,
    prefix_witness: Option<&str>,
) -> Result<CompletionCertificate> {
    let ctx = parse_ring(ring)?;
    let entries = parse_row(&ctx, row)?;
    match prefix_witness {
        Some(src) => {
            let prefix = parse_row(&ctx, src)?;
            if prefix.len() >= entries.len() {
                return Err(Error::DimensionMismatch {
                    detail: format!(
                        "prefix witness of length {} must be shorter than the row of length {}",
                        prefix.len(),
                        entries.len()
                    ),
                });
            }
            // A witness of a prefix extends to a witness of the whole row by
            // zero padding, so the row can be checked before reducing it.
            let mut witness = prefix.clone();
            witness.resize(entries.len(), ctx.zero());
            let row = UnimodularRow::new(ctx.clone(), entries, witness)?;
            let factorization = partial_unimodular_reduce(&row, &prefix)?;
            let matrix = factorization.inverse().product_matrix()?;
            CompletionCertificate::new(row, factorization, matrix, Provenance::PartialUnimodular)
        }
        None => {
            if entries.len() != 2 {
                return Err(Error::DimensionMismatch {
                    detail: format!(
                        "remainder descent completes rows of length 2, got {}; longer rows need --prefix-witness",
                        entries.len()
                    ),
                });
            }
            euclid_complete(&ctx, &entries[0], &entries[1])
        }
    }
}

/// Lift dispatch: polynomial quotients without `--mod`, Z/(m) with it. The
/// row and witness are parsed over the base ring the lift targets.
fn lift_row(
    ring: &str,
    row: &str,
    witness: &str,
    modulus: Option<&str>,
    ops: &str,
    format: Format,
) -> Result<String> {
    let ctx = parse_ring(ring)?;
    let (base, m) = match modulus {
        Some(src) => {
            if ctx != RingContext::Integers {
                return Err(Error::ContextMismatch {
                    detail: format!("--mod needs --ring Z, got '{ctx}'"),
                });
            }
            let m: BigInt = src.trim().parse().map_err(|e| Error::Parse {
                position: 0,
                message: format!("invalid integer modulus '{src}': {e}"),
            })?;
            (ctx.clone(), Some(m))
        }
        None => match &ctx {
            RingContext::PrincipalQuotient { .. } => {
                (RingContext::polynomial_ring(ctx.vars())?, None)
            }
            other => {
                return Err(Error::ContextMismatch {
                    detail: format!(
                        "lift needs a quotient ring, or Z with --mod; got '{other}'"
                    ),
                })
            }
        },
    };
    let entries = parse_row(&base, row)?;
    let wit = parse_row(&base, witness)?;
    let upstairs = UnimodularRow::new(base, entries, wit)?;
    let fbar = ElementaryFactorization::new(ctx.clone(), upstairs.len(), parse_ops(&ctx, ops)?)?;
    let (moved, lifted) = match m {
        Some(m) => transform_row_with_lift_mod(&upstairs, &fbar, &m)?,
        None => transform_row_with_lift(&upstairs, &fbar)?,
    };
    if moved.is_standard_basis() {
        let matrix = lifted.inverse().product_matrix()?;
        let cert = CompletionCertificate::new(upstairs, lifted, matrix, Provenance::Lifted)?;
        return Ok(render_certificate(&Certificate::Completion(cert), format));
    }
    let lifted_ops: Vec<FactorDto> =
        lifted.ops().iter().map(|op| FactorDto(op.i(), op.j(), op.lambda().to_string())).collect();
    Ok(match format {
        Format::Text => [
            "transport report".to_string(),
            format!("ring: {}", upstairs.ctx()),
            format!("row: {}", poly_list(upstairs.entries())),
            format!("witness: {}", poly_list(upstairs.witness())),
            format!("moved row: {}", poly_list(moved.entries())),
            format!("moved witness: {}", poly_list(moved.witness())),
            format!("operations: {}", lifted_ops.len()),
        ]
        .join("\n"),
        Format::Json => pretty(json!({
            "moved_row": poly_strings(moved.entries()),
            "moved_witness": poly_strings(moved.witness()),
            "operations": serde_json::to_value(&lifted_ops).expect("serializable operations"),
            "ring": upstairs.ctx().to_string(),
            "row": poly_strings(upstairs.entries()),
            "witness": poly_strings(upstairs.witness()),
        })),
    })
}

/// Parse a comma-separated list of ring elements.
fn parse_row(ctx: &RingContext, src: &str) -> Result<Vec<Polynomial>> {
    src.split(',').map(|part| ctx.parse(part)).collect()
}

/// Parse shear operations from their serialized form `[[i, j, "lambda"], ...]`.
fn parse_ops(ctx: &RingContext, src: &str) -> Result<Vec<ElementaryOp>> {
    let dtos: Vec<FactorDto> = serde_json::from_str(src).map_err(|e| Error::Parse {
        position: 0,
        message: format!("operations must be JSON [[i, j, \"lambda\"], ...]: {e}"),
    })?;
    dtos.into_iter()
        .map(|FactorDto(i, j, lambda)| ElementaryOp::new(i, j, ctx.parse(&lambda)?))
        .collect()
}

/// Sample the variety cut out by the ring's modulus: a loop for two
/// variables, a latitude-longitude grid for three.
fn variety_sample(ctx: &RingContext, samples: usize) -> Result<VarietySample> {
    let generator = match ctx.nvars() {
        2 => SampleGenerator::Circle { samples },
        3 => SampleGenerator::Sphere { bands: (samples / 2).max(2), samples },
        n => {
            return Err(Error::ContextMismatch {
                detail: format!("sampling needs a quotient in 2 or 3 variables, got {n}"),
            })
        }
    };
    sample_variety(ctx, &generator, MEMBERSHIP_TOL)
}

fn render_certificate(cert: &Certificate, format: Format) -> String {
    match format {
        Format::Json => cert.to_json(),
        Format::Text => match cert {
            Certificate::Completion(c) => [
                format!("completion certificate ({})", cert.provenance_name()),
                format!("ring: {}", c.row().ctx()),
                format!("row: {}", poly_list(c.row().entries())),
                format!("witness: {}", poly_list(c.row().witness())),
                format!("operations: {}", c.factorization().ops().len()),
                "matrix:".to_string(),
                matrix_block(c.matrix()),
            ]
            .join("\n"),
            Certificate::Isotopy(c) => [
                "isotopy certificate".to_string(),
                format!("ring: {}", c.base_ctx()),
                format!("parameter: {}", c.parameter()),
                format!("row: {}", poly_list(c.row())),
                format!("witness: {}", poly_list(c.witness())),
                format!("target: {}", poly_list(c.target())),
                "path matrix:".to_string(),
                matrix_block(c.beta()),
            ]
            .join("\n"),
        },
    }
}

fn render_matrix(matrix: &RingMatrix, format: Format) -> Result<String> {
    let det = matrix.determinant()?;
    Ok(match format {
        Format::Text => format!("{}\ndeterminant: {det}", matrix_block(matrix)),
        Format::Json => pretty(json!({
            "det": det.to_string(),
            "matrix": serde_json::to_value(matrix.to_dto()).expect("serializable matrix"),
        })),
    })
}

fn poly_list(items: &[Polynomial]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn poly_strings(items: &[Polynomial]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn matrix_block(matrix: &RingMatrix) -> String {
    matrix.to_string().trim_end().to_string()
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("serializable report")
}
