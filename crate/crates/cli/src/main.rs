mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sharpknot::{
    bennequin_bound, braid_closure, default_table, identify, jones, load_table, nonalternating_certificate,
    parse_braid, parse_pd, positive_sharp_braid, seifert_genus_upper, signature_goeritz, simplify,
    theorem1_certificate, theorem1_threshold, theorem2_equality, u_sharp_bounds, BraidWord, KnotError, KnotTable,
    PlanarDiagram,
};

use report::{DiagramReport, Identification, InputEcho, Report};

#[derive(Parser)]
#[command(name = "sharpknot", version, about = "Positive sharp moves, knot invariants and unknotting certificates")]
struct Cli {
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Writhe, Seifert circles, genus bound, 1+w-O, signature and Jones polynomial.
    Stats(InputArgs),
    /// Apply positive sharp moves to a braid and certify the output.
    Sharp(SharpArgs),
    /// Bounds on the sharp unknotting number and the equality test u# = |s|/8.
    Certify(CertifyArgs),
    /// Match a diagram against the knot table.
    Identify(IdentifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Braid word, e.g. "-1 2 1 3 2"; an optional "strands=K;" prefix fixes the strand count.
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
    #[arg(long)]
    pd: Option<String>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    input: Input,
}

#[derive(Args)]
struct SharpArgs {
    /// Braid word to modify.
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    /// Number of positive sharp moves.
    #[arg(short = 'n', default_value_t = 1)]
    n: u64,
    /// Strand index and word offset, "i,offset"; defaults to strands 1-4 at the top of the word.
    #[arg(long, value_parser = parse_site)]
    site: Option<(usize, usize)>,
    /// Upper bound for the genus of the input knot (default: Seifert surface genus).
    #[arg(long)]
    genus_bound: Option<u64>,
    /// Knot table CSV (default: $SHARPKNOT_TABLE or the bundled table).
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    input: Input,
    /// Positive sharp moves to apply to a braid input before certifying.
    #[arg(short = 'n', default_value_t = 0)]
    n: u64,
    /// Strand index and word offset for the moves, "i,offset".
    #[arg(long, value_parser = parse_site)]
    site: Option<(usize, usize)>,
    /// Number of sharp moves known to unknot the knot (an upper bound for u#).
    #[arg(long)]
    witness: Option<u64>,
    /// Upper bound for the genus of the input knot.
    #[arg(long)]
    genus_bound: Option<u64>,
}

#[derive(Args)]
struct IdentifyArgs {
    #[command(flatten)]
    input: Input,
    /// Knot table CSV (default: $SHARPKNOT_TABLE or the bundled table).
    #[arg(long)]
    table: Option<PathBuf>,
}

fn parse_site(s: &str) -> Result<(usize, usize), String> {
    let (i, o) = s.split_once(',').ok_or("expected i,offset")?;
    let i = i.trim().parse().map_err(|e| format!("strand index: {e}"))?;
    let o = o.trim().parse().map_err(|e| format!("offset: {e}"))?;
    Ok((i, o))
}

enum Parsed {
    Braid(BraidWord),
    Pd(PlanarDiagram),
}

impl Parsed {
    fn read(input: &Input) -> Result<(Parsed, InputEcho), KnotError> {
        match (&input.braid, &input.pd) {
            (Some(b), _) => Ok((Parsed::Braid(parse_braid(b)?), InputEcho { kind: "braid", text: b.clone() })),
            (None, Some(p)) => Ok((Parsed::Pd(parse_pd(p)?), InputEcho { kind: "pd", text: p.clone() })),
            (None, None) => unreachable!("clap requires one input"),
        }
    }

    fn diagram(&self) -> PlanarDiagram {
        match self {
            Parsed::Braid(b) => braid_closure(b),
            Parsed::Pd(d) => d.clone(),
        }
    }

    fn braid(&self) -> Option<&BraidWord> {
        match self {
            Parsed::Braid(b) => Some(b),
            Parsed::Pd(_) => None,
        }
    }
}

fn exit_code(e: &KnotError) -> u8 {
    match e {
        KnotError::CrossingBudget { .. } => 3,
        _ => 2,
    }
}

fn table(path: &Option<PathBuf>) -> Result<KnotTable, KnotError> {
    match path {
        Some(p) => load_table(p),
        None => default_table(),
    }
}

fn genus_bound(d: &PlanarDiagram, supplied: Option<u64>) -> Result<u64, KnotError> {
    match supplied {
        Some(g) => Ok(g),
        None => Ok(seifert_genus_upper(d)?.as_integer().expect("knot diagrams have integral genus")),
    }
}

/// Applies `n` moves at `site`, defaulting to strands 1-4 at the top of the current word.
fn apply_moves(
    b: &BraidWord,
    n: u64,
    site: Option<(usize, usize)>,
    report: &mut Report,
) -> Result<BraidWord, KnotError> {
    let mut out = b.clone();
    for _ in 0..n {
        let (i, offset) = site.unwrap_or((1, out.len()));
        let (next, record) = positive_sharp_braid(&out, i, offset)?;
        report.moves.push(record);
        out = next;
    }
    Ok(out)
}

fn cmd_stats(args: &InputArgs) -> Result<Report, KnotError> {
    let (parsed, echo) = Parsed::read(&args.input)?;
    let mut warnings = vec![];
    let diagram = DiagramReport::new(&parsed.diagram(), parsed.braid(), &mut warnings);
    let mut report = Report::new("stats", echo, diagram);
    report.warnings = warnings;
    Ok(report)
}

fn cmd_sharp(args: &SharpArgs) -> Result<Report, KnotError> {
    let b = parse_braid(&args.braid)?;
    let d = braid_closure(&b);
    let mut warnings = vec![];
    let diagram = DiagramReport::new(&d, Some(&b), &mut warnings);
    let mut report = Report::new("sharp", InputEcho { kind: "braid", text: args.braid.clone() }, diagram);
    report.warnings = warnings;

    let genus = if d.is_knot() { Some(genus_bound(&d, args.genus_bound)?) } else { None };
    if let Some(g) = genus {
        let threshold = theorem1_threshold(&d, g)?;
        report.threshold = Some(threshold);
        if args.n < threshold {
            report
                .warnings
                .push(format!("n = {} is below the threshold {threshold}; the certificate may still fire", args.n));
        }
    }
    let out = apply_moves(&b, args.n, args.site, &mut report)?;
    if args.n == 0 {
        return Ok(report);
    }
    let d_out = braid_closure(&out);
    report.output = Some(DiagramReport::new(&d_out, Some(&out), &mut report.warnings));
    if d_out.is_knot() {
        if let Some(g) = genus {
            report.certificates.push(theorem1_certificate(&d, g, args.n)?);
        }
        report.certificates.push(nonalternating_certificate(&d_out)?);
        match identify(&d_out, &table(&args.table)?) {
            Ok(m) => report.identification = Some(Identification::new(m)),
            Err(e @ KnotError::CrossingBudget { .. }) => report.warnings.push(format!("identification skipped: {e}")),
            Err(e) => return Err(e),
        }
    } else {
        report.warnings.push("output is not a knot; no certificate".into());
    }
    Ok(report)
}

fn cmd_certify(args: &CertifyArgs) -> Result<Report, KnotError> {
    let (parsed, echo) = Parsed::read(&args.input)?;
    let mut warnings = vec![];
    let d_in = parsed.diagram();
    let diagram = DiagramReport::new(&d_in, parsed.braid(), &mut warnings);
    let mut report = Report::new("certify", echo, diagram);
    report.warnings = warnings;

    let d = if args.n > 0 {
        let Some(b) = parsed.braid() else {
            return Err(KnotError::InvalidSite("sharp moves need a braid input".into()));
        };
        let out = apply_moves(b, args.n, args.site, &mut report)?;
        let d_out = braid_closure(&out);
        report.output = Some(DiagramReport::new(&d_out, Some(&out), &mut report.warnings));
        if d_in.is_knot() {
            let g = genus_bound(&d_in, args.genus_bound)?;
            report.certificates.push(theorem1_certificate(&d_in, g, args.n)?);
        }
        d_out
    } else {
        d_in
    };
    d.require_knot()?;

    let s = bennequin_bound(&d)?;
    let sigma = signature_goeritz(&d)?;
    report.certificates.push(nonalternating_certificate(&d)?);
    let bounds = match u_sharp_bounds(&s, sigma, args.witness) {
        Ok(b) => b,
        Err(KnotError::NegativeSBound(v)) => {
            report.warnings.push(format!("1+w-O = {v} is negative; certify the mirror image instead"));
            report.verdict = Some("inconclusive");
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.bounds = Some(bounds);
    let simple = simplify(&d);
    let trivial = jones(&simple)?.is_trivial() && signature_goeritz(&simple)?.sigma == 0;
    match theorem2_equality(&bounds, &s, sigma, trivial) {
        Ok(c) => {
            report.verdict = Some(if c.verdict { "true" } else { "false" });
            report.certificates.push(c);
        }
        Err(KnotError::BoundsNotPinned(why)) => {
            report.warnings.push(why);
            report.verdict = Some("inconclusive");
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn cmd_identify(args: &IdentifyArgs) -> Result<Report, KnotError> {
    let (parsed, echo) = Parsed::read(&args.input)?;
    let d = parsed.diagram();
    let matches = identify(&d, &table(&args.table)?)?;
    let mut warnings = vec![];
    let diagram = DiagramReport::new(&d, parsed.braid(), &mut warnings);
    let mut report = Report::new("identify", echo, diagram);
    report.warnings = warnings;
    report.identification = Some(Identification::new(matches));
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Stats(a) => cmd_stats(a),
        Command::Sharp(a) => cmd_sharp(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Identify(a) => cmd_identify(a),
    };
    match result {
        Ok(report) => {
            let text = if cli.pretty { serde_json::to_string_pretty(&report) } else { serde_json::to_string(&report) };
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", text.expect("reports serialize")) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
