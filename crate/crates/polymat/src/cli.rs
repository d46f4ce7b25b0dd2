//! Command-line surface: subcommands, input resolution, output rendering,
//! and the exit-code contract.
//!
//! Exit codes: 0 success; 1 domain/validation error (axiom violations,
//! non-M-convex input); 2 malformed input; 3 internal cross-check mismatch
//! (a `--via both` disagreement or a nonzero valuative residual) — the
//! "invariant falsified or bug" signal.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::fixtures;
use crate::invariants::{self, cave, cave_permuted, mobius, snapper};
use crate::io::{betti_csv, mobius_csv, var_names, FormatError, PolymatroidFile, PolynomialOutput};
use crate::lorentzian::{is_denormalized_lorentzian, lorentzian_diagnostic, sign_change};
use crate::point::PointSet;
use crate::poly::SparsePoly;
use crate::polymatroid::{Polymatroid, PolymatroidError};
use crate::syzygy::{
    betti_table, hs_from_betti, hs_ideal, k_polynomial_from_betti, k_polynomial_from_cave,
    polymatroidal_ideal, MonomialIdeal, SyzygyError,
};
use crate::valuative::{check_relation, hyperplane_split, valuative_residual, ValuativeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser)]
#[command(name = "polymat", version, about = "Exact invariants of polymatroids")]
struct Cli {
    /// Output format. CSV is reserved for Betti and Möbius tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Cage override `m1,…,mp` for duality-dependent commands.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    cage: Option<Vec<i64>>,
    /// Worker threads for the Betti and Hessian sweeps.
    #[arg(long, global = true)]
    parallel: Option<usize>,
    /// Seed for randomized split selection.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KpolyVia {
    Cave,
    Betti,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HsVia {
    Mobius,
    Betti,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LorentzianTarget {
    Kpoly,
    CaveDual,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polymatroid file against the four axioms.
    Validate { input: String },
    /// Lattice points of the base polytope.
    BasePoints { input: String },
    /// Lattice points of the independence polytope.
    IndepPoints { input: String },
    /// Möbius table over I(𝒫) ∩ ℕ^p.
    Mobius { input: String },
    /// Cave polynomial, optionally through a permuted expansion.
    Cave {
        input: String,
        /// Permutation of [p] as 1-based images, e.g. `2,3,1`.
        #[arg(long)]
        permute: Option<String>,
    },
    /// Snapper polynomial (binomial transform of the cave polynomial).
    Snapper { input: String },
    /// Minimal generators of the polymatroidal ideal.
    Ideal { input: String },
    /// K-polynomial of the polymatroidal ideal.
    Kpoly {
        input: String,
        #[arg(long, value_enum)]
        via: KpolyVia,
    },
    /// Multigraded Betti numbers via the upper Koszul oracle.
    Betti { input: String },
    /// Homological shift ideal HS_i.
    Hs {
        input: String,
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum)]
        via: HsVia,
    },
    /// Dual polymatroid with respect to the cage.
    Dual { input: String },
    /// Is the cave support a generalized polymatroid?
    CheckGpm { input: String },
    /// Sign-change → homogenize → denormalized-Lorentzian verdict.
    Lorentzian {
        input: String,
        #[arg(long, value_enum)]
        target: LorentzianTarget,
    },
    /// Hyperplane split of the base points, with optional valuativity check.
    Split {
        input: String,
        /// Subset J as 1-based indices, e.g. `3` or `1,2`. Chosen from the
        /// seed when omitted.
        #[arg(long)]
        subset: Option<String>,
        /// Integer threshold c. Chosen from the seed when omitted.
        #[arg(long)]
        threshold: Option<i64>,
        #[arg(long)]
        check_valuative: bool,
    },
    /// Built-in fixture corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List fixture names.
    List,
    /// Emit a fixture as a polymatroid file.
    Emit { name: String },
}

/// A failure carrying its exit code and a machine-readable error object.
struct Failure {
    exit: i32,
    code: String,
    message: String,
    witness: Option<String>,
}

impl Failure {
    fn new(exit: i32, code: &str, message: String) -> Self {
        Failure {
            exit,
            code: code.to_string(),
            message,
            witness: None,
        }
    }

    fn with_witness(mut self, witness: String) -> Self {
        self.witness = Some(witness);
        self
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Malformed(m) => Failure::new(EXIT_MALFORMED, "malformed", m),
            FormatError::Domain(d) => d.into(),
        }
    }
}

impl From<PolymatroidError> for Failure {
    fn from(e: PolymatroidError) -> Self {
        let code = match &e {
            PolymatroidError::MissingSubset { .. } => "missing-subset",
            PolymatroidError::AxiomViolation { .. } => "axiom-violation",
            PolymatroidError::CageTooSmall { .. } => "cage-too-small",
            PolymatroidError::DimensionMismatch { .. } => "dimension-mismatch",
            PolymatroidError::NotMConvex => "not-mconvex",
            PolymatroidError::InvalidParameter(_) => "invalid-parameter",
        };
        Failure::new(EXIT_DOMAIN, code, e.to_string())
    }
}

impl From<SyzygyError> for Failure {
    fn from(e: SyzygyError) -> Self {
        match e {
            SyzygyError::EmptyIdeal => Failure::new(EXIT_DOMAIN, "empty-ideal", e.to_string()),
            SyzygyError::Polymatroid(p) => p.into(),
        }
    }
}

impl From<ValuativeError> for Failure {
    fn from(e: ValuativeError) -> Self {
        let code = match &e {
            ValuativeError::NotMConvex { .. } => "not-mconvex",
            ValuativeError::EmptyPiece { .. } => "empty-piece",
            ValuativeError::RelationInvalid { .. } => "relation-invalid",
        };
        Failure::new(EXIT_DOMAIN, code, e.to_string())
    }
}

/// Parses arguments, runs the command, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with code 0; bad usage is
            // malformed input.
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
        }
    };
    if let Some(n) = cli.parallel {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    match execute(&cli) {
        Ok(output) => {
            println!("{output}");
            EXIT_OK
        }
        Err(failure) => {
            if cli.format == Format::Json {
                let obj = json!({
                    "code": failure.code,
                    "message": failure.message,
                    "witness": failure.witness,
                });
                eprintln!("{obj}");
            } else {
                eprintln!("error: {}", failure.message);
                if let Some(w) = &failure.witness {
                    eprintln!("witness: {w}");
                }
            }
            failure.exit
        }
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Validate { input } => {
            let p = load(input)?;
            render_validate(cli, &p)
        }
        Command::BasePoints { input } => {
            let p = load(input)?;
            render_points(cli, &p.base_points())
        }
        Command::IndepPoints { input } => {
            let p = load(input)?;
            render_points(cli, &p.independence_points())
        }
        Command::Mobius { input } => {
            let p = load(input)?;
            render_mobius(cli, &mobius(&p))
        }
        Command::Cave { input, permute } => {
            let p = load(input)?;
            let f = match permute {
                None => cave(&p),
                Some(text) => {
                    let perm = parse_permutation(text, p.ground_set_size())?;
                    cave_permuted(&p, &perm)
                }
            };
            render_poly(cli, &f, false)
        }
        Command::Snapper { input } => {
            let p = load(input)?;
            render_poly(cli, &snapper(&p), false)
        }
        Command::Ideal { input } => {
            let p = load(input)?;
            render_ideal(cli, &polymatroidal_ideal(&p))
        }
        Command::Kpoly { input, via } => {
            let p = load(input)?;
            let cage = effective_cage(cli, &p);
            let f = match via {
                KpolyVia::Cave => k_polynomial_from_cave(&p, &cage)?,
                KpolyVia::Betti => {
                    let table = betti_table(&polymatroidal_ideal(&p))?;
                    k_polynomial_from_betti(&table, p.ground_set_size())
                }
                KpolyVia::Both => {
                    let via_cave = k_polynomial_from_cave(&p, &cage)?;
                    let table = betti_table(&polymatroidal_ideal(&p))?;
                    let via_betti = k_polynomial_from_betti(&table, p.ground_set_size());
                    if via_cave != via_betti {
                        let diff = via_cave.sub(&via_betti).expect("same dimension");
                        return Err(Failure::new(
                            EXIT_MISMATCH,
                            "kpoly-mismatch",
                            "cave and Betti K-polynomial routes disagree".into(),
                        )
                        .with_witness(diff.to_string()));
                    }
                    via_cave
                }
            };
            render_poly(cli, &f, false)
        }
        Command::Betti { input } => {
            let p = load(input)?;
            let table = betti_table(&polymatroidal_ideal(&p))?;
            render_betti(cli, &table, p.ground_set_size())
        }
        Command::Hs { input, index, via } => {
            let p = load(input)?;
            let cage = effective_cage(cli, &p);
            let ideal = match via {
                HsVia::Mobius => hs_ideal(&p, &cage, *index)?,
                HsVia::Betti => {
                    let table = betti_table(&polymatroidal_ideal(&p))?;
                    hs_from_betti(&table, p.ground_set_size(), *index)
                }
                HsVia::Both => {
                    let via_mobius = hs_ideal(&p, &cage, *index)?;
                    let table = betti_table(&polymatroidal_ideal(&p))?;
                    let via_betti = hs_from_betti(&table, p.ground_set_size(), *index);
                    if via_mobius != via_betti {
                        return Err(Failure::new(
                            EXIT_MISMATCH,
                            "hs-mismatch",
                            format!("Möbius and Betti HS_{index} routes disagree"),
                        )
                        .with_witness(format!(
                            "mobius: {}; betti: {}",
                            via_mobius.generator_set(),
                            via_betti.generator_set()
                        )));
                    }
                    via_mobius
                }
            };
            render_ideal(cli, &ideal)
        }
        Command::Dual { input } => {
            let p = load(input)?;
            let cage = effective_cage(cli, &p);
            let dual = p.dual(&cage)?;
            match cli.format {
                Format::Json => Ok(PolymatroidFile::from_polymatroid(&dual).to_json()),
                Format::Pretty => Ok(dual.base_points().to_string()),
                Format::Csv => Err(csv_unsupported()),
            }
        }
        Command::CheckGpm { input } => {
            let p = load(input)?;
            let verdict = invariants::generalized_polymatroid_check(&cave(&p))
                .expect("cave polynomials are nonzero");
            match cli.format {
                Format::Json => Ok(json!({ "generalized_polymatroid": verdict }).to_string()),
                Format::Pretty => Ok(format!("generalized polymatroid: {verdict}")),
                Format::Csv => Err(csv_unsupported()),
            }
        }
        Command::Lorentzian { input, target } => {
            let p = load(input)?;
            let cage = effective_cage(cli, &p);
            let f = match target {
                LorentzianTarget::Kpoly => k_polynomial_from_cave(&p, &cage)?,
                LorentzianTarget::CaveDual => cave(&p.dual(&cage)?),
            };
            let flipped = sign_change(&f).expect("target polynomials are nonzero");
            let homog = flipped.homogenize().expect("nonzero");
            let diagnostic =
                lorentzian_diagnostic(&homog.normalize()).expect("nonzero after normalization");
            let verdict = diagnostic.is_none();
            debug_assert_eq!(verdict, is_denormalized_lorentzian(&homog).unwrap());
            match cli.format {
                Format::Json => Ok(json!({
                    "denormalized_lorentzian": verdict,
                    "diagnostic": diagnostic.map(|d| d.to_string()),
                })
                .to_string()),
                Format::Pretty => match diagnostic {
                    None => Ok("denormalized Lorentzian: true".to_string()),
                    Some(d) => Ok(format!("denormalized Lorentzian: false ({d})")),
                },
                Format::Csv => Err(csv_unsupported()),
            }
        }
        Command::Split {
            input,
            subset,
            threshold,
            check_valuative,
        } => {
            let p = load(input)?;
            let base = p.base_points();
            let (subset, threshold) = resolve_split(cli, &base, subset, threshold)?;
            let pieces = hyperplane_split(&base, &subset, threshold)?;
            let mut residual_line = None;
            if *check_valuative {
                let relation = pieces.relation(&base)?;
                if let Some(witness) = check_relation(&relation) {
                    return Err(Failure::new(
                        EXIT_MISMATCH,
                        "relation-invalid",
                        "indicator relation fails".into(),
                    )
                    .with_witness(format!("{witness:?}")));
                }
                let residual = valuative_residual(&relation)?;
                if !residual.is_zero() {
                    return Err(Failure::new(
                        EXIT_MISMATCH,
                        "valuativity-violated",
                        "cave polynomial residual of the split relation is nonzero".into(),
                    )
                    .with_witness(residual.to_string()));
                }
                residual_line = Some("valuative residual: 0".to_string());
            }
            match cli.format {
                Format::Json => {
                    let points = |s: &PointSet| s.iter().cloned().collect::<Vec<_>>();
                    Ok(json!({
                        "subset": subset.iter().map(|j| j + 1).collect::<Vec<_>>(),
                        "threshold": threshold,
                        "below": points(&pieces.below),
                        "above": points(&pieces.above),
                        "on": points(&pieces.on),
                        "valuative_residual_zero": check_valuative.then_some(true),
                    })
                    .to_string())
                }
                Format::Pretty => {
                    let mut out = String::new();
                    let subset_1based: Vec<usize> = subset.iter().map(|j| j + 1).collect();
                    writeln!(
                        out,
                        "subset J = {subset_1based:?}, threshold c = {threshold}"
                    )
                    .unwrap();
                    writeln!(out, "below:  {}", pieces.below).unwrap();
                    writeln!(out, "above:  {}", pieces.above).unwrap();
                    write!(out, "middle: {}", pieces.on).unwrap();
                    if let Some(line) = residual_line {
                        write!(out, "\n{line}").unwrap();
                    }
                    Ok(out)
                }
                Format::Csv => Err(csv_unsupported()),
            }
        }
        Command::Fixtures { action } => match action {
            FixturesAction::List => {
                let names: Vec<String> = fixtures::all().into_iter().map(|(n, _)| n).collect();
                match cli.format {
                    Format::Json => Ok(serde_json::to_string(&names).unwrap()),
                    Format::Pretty => Ok(names.join("\n")),
                    Format::Csv => Err(csv_unsupported()),
                }
            }
            FixturesAction::Emit { name } => match fixtures::by_name(name) {
                Some(p) => Ok(PolymatroidFile::from_polymatroid(&p).to_json()),
                None => Err(Failure::new(
                    EXIT_MALFORMED,
                    "unknown-fixture",
                    format!("unknown fixture {name:?}"),
                )),
            },
        },
    }
}

fn csv_unsupported() -> Failure {
    Failure::new(
        EXIT_MALFORMED,
        "csv-unsupported",
        "CSV output is reserved for Betti and Möbius tables".into(),
    )
}

/// Resolves `FILE` as stdin (`-`), a path, or a fixture name, in that order.
fn load(input: &str) -> Result<Polymatroid, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::new(EXIT_MALFORMED, "io", e.to_string()))?;
        buf
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::new(EXIT_MALFORMED, "io", e.to_string()))?
    } else if let Some(p) = fixtures::by_name(input) {
        return Ok(p);
    } else {
        return Err(Failure::new(
            EXIT_MALFORMED,
            "no-input",
            format!("{input:?} is neither a file nor a known fixture"),
        ));
    };
    Ok(PolymatroidFile::from_json(&text)?.to_polymatroid()?)
}

fn effective_cage(cli: &Cli, p: &Polymatroid) -> Vec<i64> {
    cli.cage.clone().unwrap_or_else(|| p.cage().to_vec())
}

/// `"2,3,1"` → 0-based images `[1,2,0]`.
fn parse_permutation(text: &str, p: usize) -> Result<Vec<usize>, Failure> {
    let images: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().ok())
        .collect::<Option<_>>()
        .ok_or_else(|| {
            Failure::new(
                EXIT_MALFORMED,
                "bad-permutation",
                format!("bad permutation {text:?}"),
            )
        })?;
    let mut seen = vec![false; p];
    if images.len() != p || images.iter().any(|&v| v == 0 || v > p) {
        return Err(Failure::new(
            EXIT_MALFORMED,
            "bad-permutation",
            format!("{text:?} is not a permutation of 1..={p}"),
        ));
    }
    for &v in &images {
        if seen[v - 1] {
            return Err(Failure::new(
                EXIT_MALFORMED,
                "bad-permutation",
                format!("{text:?} repeats {v}"),
            ));
        }
        seen[v - 1] = true;
    }
    Ok(images.into_iter().map(|v| v - 1).collect())
}

/// Either the explicit subset/threshold, or a seeded choice among all splits
/// that produce three nonempty M-convex pieces.
fn resolve_split(
    cli: &Cli,
    base: &PointSet,
    subset: &Option<String>,
    threshold: &Option<i64>,
) -> Result<(Vec<usize>, i64), Failure> {
    if let Some(text) = subset {
        let indices: Vec<usize> = text
            .split(',')
            .map(|s| s.trim().parse::<usize>().ok())
            .collect::<Option<_>>()
            .ok_or_else(|| {
                Failure::new(EXIT_MALFORMED, "bad-subset", format!("bad subset {text:?}"))
            })?;
        if indices.iter().any(|&j| j == 0 || j > base.dim()) {
            return Err(Failure::new(
                EXIT_MALFORMED,
                "bad-subset",
                format!("subset {text:?} leaves [{}]", base.dim()),
            ));
        }
        let threshold = threshold.ok_or_else(|| {
            Failure::new(
                EXIT_MALFORMED,
                "missing-threshold",
                "--threshold is required with --subset".into(),
            )
        })?;
        return Ok((indices.iter().map(|&j| j - 1).collect(), threshold));
    }
    let candidates = candidate_splits(base);
    if candidates.is_empty() {
        return Err(Failure::new(
            EXIT_DOMAIN,
            "no-split",
            "no nondegenerate hyperplane split exists for this polymatroid".into(),
        ));
    }
    let pick = (splitmix64(cli.seed) % candidates.len() as u64) as usize;
    Ok(candidates[pick].clone())
}

/// All (subset, threshold) pairs whose split succeeds, in deterministic order.
fn candidate_splits(base: &PointSet) -> Vec<(Vec<usize>, i64)> {
    let p = base.dim();
    let mut out = Vec::new();
    for mask in 1u32..((1 << p) - 1) {
        let subset: Vec<usize> = (0..p).filter(|&j| mask & (1 << j) != 0).collect();
        let levels: Vec<i64> = base
            .iter()
            .map(|n| subset.iter().map(|&j| n[j]).sum())
            .collect();
        let (lo, hi) = (*levels.iter().min().unwrap(), *levels.iter().max().unwrap());
        for c in lo..=hi {
            if hyperplane_split(base, &subset, c).is_ok() {
                out.push((subset.clone(), c));
            }
        }
    }
    out
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn render_validate(cli: &Cli, p: &Polymatroid) -> Result<String, Failure> {
    match cli.format {
        Format::Json => Ok(json!({
            "valid": true,
            "p": p.ground_set_size(),
            "rank": p.total_rank(),
            "cage": p.cage(),
        })
        .to_string()),
        Format::Pretty => Ok(format!(
            "valid polymatroid: p = {}, rank = {}, cage = {:?}",
            p.ground_set_size(),
            p.total_rank(),
            p.cage()
        )),
        Format::Csv => Err(csv_unsupported()),
    }
}

fn render_points(cli: &Cli, s: &PointSet) -> Result<String, Failure> {
    match cli.format {
        Format::Json => {
            let points: Vec<_> = s.iter().cloned().collect();
            Ok(json!({ "p": s.dim(), "points": points }).to_string())
        }
        Format::Pretty => Ok(s.to_string()),
        Format::Csv => Err(csv_unsupported()),
    }
}

fn render_poly(cli: &Cli, f: &SparsePoly, homogenized: bool) -> Result<String, Failure> {
    match cli.format {
        Format::Json => {
            let out = PolynomialOutput::from_poly(f, var_names(f.nvars(), homogenized));
            Ok(serde_json::to_string(&out).unwrap())
        }
        Format::Pretty => Ok(f.to_string()),
        Format::Csv => Err(csv_unsupported()),
    }
}

fn render_ideal(cli: &Cli, ideal: &MonomialIdeal) -> Result<String, Failure> {
    match cli.format {
        Format::Json => {
            let gens: Vec<_> = ideal.generators().cloned().collect();
            Ok(json!({ "nvars": ideal.nvars(), "generators": gens }).to_string())
        }
        Format::Pretty => Ok(ideal.render_text()),
        Format::Csv => Err(csv_unsupported()),
    }
}

fn render_mobius(cli: &Cli, table: &crate::invariants::MobiusTable) -> Result<String, Failure> {
    match cli.format {
        Format::Json => {
            let values: Vec<_> = table
                .iter()
                .map(|(n, v)| json!({ "point": n, "mu": v }))
                .collect();
            Ok(json!({ "p": table.dim(), "values": values }).to_string())
        }
        Format::Pretty => {
            let lines: Vec<String> = table
                .iter()
                .map(|(n, v)| {
                    let coords: Vec<String> = n.iter().map(|c| c.to_string()).collect();
                    format!("mu({}) = {v}", coords.join(","))
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Format::Csv => Ok(mobius_csv(table).trim_end().to_string()),
    }
}

fn render_betti(
    cli: &Cli,
    table: &crate::syzygy::BettiTable,
    nvars: usize,
) -> Result<String, Failure> {
    match cli.format {
        Format::Json => {
            let entries: Vec<_> = table
                .iter()
                .map(|(i, b, v)| json!({ "i": i, "degree": b, "beta": v }))
                .collect();
            Ok(json!({ "nvars": nvars, "entries": entries }).to_string())
        }
        Format::Pretty => {
            let lines: Vec<String> = table
                .iter()
                .map(|(i, b, v)| {
                    let coords: Vec<String> = b.iter().map(|c| c.to_string()).collect();
                    format!("beta_{{{i},({})}} = {v}", coords.join(","))
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Format::Csv => Ok(betti_csv(table, nvars).trim_end().to_string()),
    }
}
