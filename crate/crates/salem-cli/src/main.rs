//! `salem`: generation, certification, sieving, bound reports, and batch
//! tables for Salem/Pisot polynomials of prescribed trace.
//!
//! Exit codes: 0 success/verified; 1 verification or sieve failed;
//! 2 inconclusive; 3 usage or IO error. Stdout carries machine-readable
//! output only; diagnostics go to stderr.

mod doc;
mod table;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use salem_core::certify::{
    certify_pisot, certify_salem, salem_value, PisotVerdict, SalemCertificate, SalemVerdict,
};
use salem_core::construct::{
    family, generate_pisot, generate_salem_candidate, ExponentSpec, Family, Policy,
};
use salem_core::cyclo::{sieve_gcd_test, strip_cyclotomic};
use salem_core::poly::IntPolynomial;
use serde::Serialize;

use doc::{
    decode_input, decimal_floor, encode_json, encode_text, interval_strings, poly_to_document,
    CertificateSummary, Metadata, ReportJson,
};

const EXIT_OK: i32 = 0;
const EXIT_FAILED: i32 = 1;
const EXIT_INCONCLUSIVE: i32 = 2;
const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(name = "salem", version, about = "Salem and Pisot numbers of any prescribed trace")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write elapsed wall time to stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a polynomial of prescribed trace.
    #[command(subcommand)]
    Gen(GenTarget),
    /// Print a named fixture polynomial.
    Family {
        name: FamilyName,
        /// Parameter for the quartic family (its trace), n >= 1.
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a polynomial read from FILE (JSON document or text line).
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Auto)]
        kind: KindArg,
        /// Bits of precision for the certified value bracket.
        #[arg(long, default_value_t = 64)]
        precision: u32,
    },
    /// Run the cyclotomic gcd sieve on a polynomial read from FILE.
    Sieve { file: PathBuf },
    /// Degree and exponent bound reports.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// CSV of generated data for traces 0..=MAX (header: trace,degree,sieve,value).
    Table {
        #[arg(long, value_parser = ["salem"])]
        kind: String,
        #[arg(long)]
        max_trace: u64,
        /// Worker threads; output bytes are independent of this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    /// Salem target: monic reciprocal candidate of trace −TRACE.
    Salem {
        /// Trace magnitude T; the output has trace −T.
        #[arg(long)]
        trace: u64,
        #[arg(long, value_enum, default_value_t = PolicyArg::FirstPrimes)]
        policy: PolicyArg,
        /// Run the cyclotomic gcd sieve; failure exits 1.
        #[arg(long)]
        sieve: bool,
        /// Certify root locations; non-Salem exits 1, inconclusive 2.
        #[arg(long)]
        certify: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bits of precision for the certified value bracket.
        #[arg(long, default_value_t = 64)]
        precision: u32,
    },
    /// Pisot target: minimal-polynomial candidate of trace −TRACE.
    Pisot {
        #[arg(long)]
        trace: u64,
        #[arg(long)]
        certify: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// First-primes degree and the double-log degree bound for a Salem trace.
    Salem {
        #[arg(long)]
        trace: u64,
    },
    /// Degree bound for a Pisot trace.
    Pisot {
        #[arg(long)]
        trace: u64,
    },
    /// Killer-exponent estimates for support count n (even, >= 2).
    Killer {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    FirstPrimes,
    Killer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Salem,
    Pisot,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Quartic,
    SexticZero,
    Lehmer,
    Degree8,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(EXIT_OK);
            }
            eprint!("{e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    let started = Instant::now();
    let code = match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    if cli.timing {
        eprintln!("elapsed: {:.3?}", started.elapsed());
    }
    std::process::exit(code);
}

fn dispatch(cmd: Command) -> Result<i32, Box<dyn std::error::Error>> {
    match cmd {
        Command::Gen(GenTarget::Salem {
            trace,
            policy,
            sieve,
            certify,
            format,
            out,
            precision,
        }) => gen_salem(trace, policy, sieve, certify, format, out.as_deref(), precision),
        Command::Gen(GenTarget::Pisot {
            trace,
            certify,
            format,
            out,
        }) => gen_pisot(trace, certify, format, out.as_deref()),
        Command::Family { name, n, format, out } => family_cmd(name, n, format, out.as_deref()),
        Command::Verify {
            file,
            kind,
            precision,
        } => verify_cmd(&file, kind, precision),
        Command::Sieve { file } => sieve_cmd(&file),
        Command::Bounds(which) => bounds_cmd(which),
        Command::Table {
            kind: _,
            max_trace,
            jobs,
        } => {
            emit(&table::render(max_trace, jobs), None)?;
            Ok(EXIT_OK)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

/// Failure dominates inconclusive dominates success.
fn combine(a: i32, b: i32) -> i32 {
    if a == EXIT_FAILED || b == EXIT_FAILED {
        EXIT_FAILED
    } else {
        a.max(b)
    }
}

fn verdict_name(v: SalemVerdict) -> &'static str {
    match v {
        SalemVerdict::Salem => "salem",
        SalemVerdict::ReciprocalPisot => "reciprocal-pisot",
        SalemVerdict::NotSalem => "not-salem",
        SalemVerdict::Inconclusive => "inconclusive",
    }
}

fn salem_exit(v: SalemVerdict) -> i32 {
    match v {
        SalemVerdict::Salem => EXIT_OK,
        SalemVerdict::ReciprocalPisot | SalemVerdict::NotSalem => EXIT_FAILED,
        SalemVerdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Value bracket rendered at 12 fractional digits; refined past the default
/// when a higher precision is requested and the verdict allows it.
fn salem_value_string(
    s: &IntPolynomial,
    cert: &SalemCertificate,
    precision: u32,
) -> Option<String> {
    if precision > 64 && cert.value.is_some() {
        if let Ok(iv) = salem_value(s, precision) {
            return Some(decimal_floor(iv.lo(), 12));
        }
    }
    cert.value.as_ref().map(|iv| decimal_floor(iv.lo(), 12))
}

fn salem_summary(s: &IntPolynomial, cert: &SalemCertificate, precision: u32) -> CertificateSummary {
    CertificateSummary {
        verdict: verdict_name(cert.verdict).to_owned(),
        value: salem_value_string(s, cert, precision),
        reason: cert.reason.map(str::to_owned),
    }
}

fn gen_salem(
    trace: u64,
    policy: PolicyArg,
    sieve: bool,
    certify: bool,
    format: Format,
    out: Option<&Path>,
    precision: u32,
) -> Result<i32, Box<dyn std::error::Error>> {
    if policy == PolicyArg::Killer {
        let rec = generate_salem_candidate(trace, Policy::Killer);
        let ExponentSpec::Killer { report, description } = &rec.exponents else {
            unreachable!("killer policy yields killer exponents");
        };
        #[derive(Serialize)]
        struct KillerDoc<'a> {
            kind: &'a str,
            trace: i64,
            n: usize,
            description: &'a str,
            report: ReportJson,
        }
        let mut text = serde_json::to_string(&KillerDoc {
            kind: "killer-report",
            trace: rec.trace,
            n: rec.n,
            description,
            report: ReportJson::from(report),
        })?;
        text.push('\n');
        emit(&text, out)?;
        return Ok(EXIT_OK);
    }

    let rec = generate_salem_candidate(trace, Policy::FirstPrimes);
    let s = rec.reduced().expect("first-primes output materializes");
    let mut meta = Metadata::default();
    if let ExponentSpec::Primes(ks) = &rec.exponents {
        meta.exponents = Some(ks.clone());
    }
    let mut code = EXIT_OK;
    let mut kind = "salem-candidate";
    if sieve {
        let result = sieve_gcd_test(s);
        meta.sieve_passed = Some(result.passed);
        if !result.passed {
            code = combine(code, EXIT_FAILED);
        }
    }
    if certify {
        let cert = certify_salem(s);
        if cert.verdict == SalemVerdict::Salem {
            kind = "salem";
        }
        meta.certificate = Some(salem_summary(s, &cert, precision));
        code = combine(code, salem_exit(cert.verdict));
    }
    let text = match format {
        Format::Json => encode_json(&poly_to_document(kind, s, Some(meta))),
        Format::Text => encode_text(s),
    };
    emit(&text, out)?;
    Ok(code)
}

fn gen_pisot(
    trace: u64,
    certify: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<i32, Box<dyn std::error::Error>> {
    let rec = generate_pisot(trace);
    let p = rec.reduced().expect("pisot output materializes");
    let mut meta = Metadata::default();
    if let ExponentSpec::Primes(ks) = &rec.exponents {
        meta.exponents = Some(ks.clone());
    }
    if let Some(m) = rec.stripped_multiplicity {
        meta.stripped_factors = Some(vec![(1, m)]);
    }
    let mut code = EXIT_OK;
    if certify {
        let cert = certify_pisot(p);
        meta.certificate = Some(CertificateSummary {
            verdict: match cert.verdict {
                PisotVerdict::Pisot => "pisot",
                PisotVerdict::NotPisot => "not-pisot",
                PisotVerdict::Inconclusive => "inconclusive",
            }
            .to_owned(),
            value: cert.dominant.as_ref().map(|iv| decimal_floor(iv.lo(), 12)),
            reason: cert.reason.map(str::to_owned),
        });
        code = match cert.verdict {
            PisotVerdict::Pisot => EXIT_OK,
            PisotVerdict::NotPisot => EXIT_FAILED,
            PisotVerdict::Inconclusive => EXIT_INCONCLUSIVE,
        };
    }
    let text = match format {
        Format::Json => encode_json(&poly_to_document("pisot", p, Some(meta))),
        Format::Text => encode_text(p),
    };
    emit(&text, out)?;
    Ok(code)
}

fn family_cmd(
    name: FamilyName,
    n: Option<i64>,
    format: Format,
    out: Option<&Path>,
) -> Result<i32, Box<dyn std::error::Error>> {
    let which = match (name, n) {
        (FamilyName::Quartic, Some(n)) => Family::Quartic(n),
        (FamilyName::Quartic, None) => return Err("quartic requires --n".into()),
        (_, Some(_)) => return Err("--n only applies to quartic".into()),
        (FamilyName::SexticZero, None) => Family::SexticZero,
        (FamilyName::Lehmer, None) => Family::Lehmer,
        (FamilyName::Degree8, None) => Family::Degree8NegTrace,
    };
    let p = family(which)?;
    let text = match format {
        Format::Json => encode_json(&poly_to_document("salem-candidate", &p, None)),
        Format::Text => encode_text(&p),
    };
    emit(&text, out)?;
    Ok(EXIT_OK)
}

fn verify_cmd(
    file: &Path,
    kind: KindArg,
    precision: u32,
) -> Result<i32, Box<dyn std::error::Error>> {
    let content = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let (p, parsed) = decode_input(&content)?;
    let resolved = match kind {
        KindArg::Salem => KindArg::Salem,
        KindArg::Pisot => KindArg::Pisot,
        KindArg::Auto => match parsed.as_ref().map(|d| d.kind.as_str()) {
            Some("salem") | Some("salem-candidate") => KindArg::Salem,
            Some("pisot") => KindArg::Pisot,
            // Shape decides: even-degree monic palindromes go down the
            // Salem path.
            _ => {
                if p.is_monic() && p.is_reciprocal() && p.degree().unwrap() % 2 == 0 {
                    KindArg::Salem
                } else {
                    KindArg::Pisot
                }
            }
        },
    };
    match resolved {
        KindArg::Salem => {
            let cert = certify_salem(&p);
            let meta = Metadata {
                certificate: Some(salem_summary(&p, &cert, precision)),
                ..Metadata::default()
            };
            let kind = if cert.verdict == SalemVerdict::Salem {
                "salem"
            } else {
                "salem-candidate"
            };
            emit(&encode_json(&poly_to_document(kind, &p, Some(meta))), None)?;
            Ok(salem_exit(cert.verdict))
        }
        _ => {
            let cert = certify_pisot(&p);
            let meta = Metadata {
                certificate: Some(CertificateSummary {
                    verdict: match cert.verdict {
                        PisotVerdict::Pisot => "pisot",
                        PisotVerdict::NotPisot => "not-pisot",
                        PisotVerdict::Inconclusive => "inconclusive",
                    }
                    .to_owned(),
                    value: cert.dominant.as_ref().map(|iv| decimal_floor(iv.lo(), 12)),
                    reason: cert.reason.map(str::to_owned),
                }),
                ..Metadata::default()
            };
            emit(&encode_json(&poly_to_document("pisot", &p, Some(meta))), None)?;
            Ok(match cert.verdict {
                PisotVerdict::Pisot => EXIT_OK,
                PisotVerdict::NotPisot => EXIT_FAILED,
                PisotVerdict::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
    }
}

fn sieve_cmd(file: &Path) -> Result<i32, Box<dyn std::error::Error>> {
    let content = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let (p, _) = decode_input(&content)?;
    let sieve = sieve_gcd_test(&p);
    let strip = strip_cyclotomic(&p);
    #[derive(Serialize)]
    struct SieveJson {
        passed: bool,
        witness_degree: usize,
        stripped_factors: Vec<(u64, u32)>,
        quotient_degree: usize,
    }
    let mut text = serde_json::to_string(&SieveJson {
        passed: sieve.passed,
        witness_degree: sieve.witness_gcd.degree().unwrap_or(0),
        stripped_factors: strip.sieve.stripped_factors.clone(),
        quotient_degree: strip.quotient.degree().unwrap_or(0),
    })?;
    text.push('\n');
    emit(&text, None)?;
    Ok(if sieve.passed { EXIT_OK } else { EXIT_FAILED })
}

fn bounds_cmd(which: BoundsCmd) -> Result<i32, Box<dyn std::error::Error>> {
    let mut text = match which {
        BoundsCmd::Salem { trace } => {
            if trace < 1 {
                return Err("bounds salem requires --trace >= 1".into());
            }
            let (degree, double_log) = salem_core::bounds::salem_degree_bounds(trace);
            #[derive(Serialize)]
            struct SalemBoundJson {
                trace: i64,
                degree: u64,
                /// The constructed degree is at most exp(exp(hi)).
                double_log_degree_bound: [String; 2],
            }
            serde_json::to_string(&SalemBoundJson {
                trace: -(trace.to_i64().ok_or("trace out of range")?),
                degree,
                double_log_degree_bound: interval_strings(&double_log, 12),
            })?
        }
        BoundsCmd::Pisot { trace } => {
            let degree = salem_core::bounds::pisot_degree_bound(trace);
            #[derive(Serialize)]
            struct PisotBoundJson {
                trace: i64,
                degree_bound: u64,
            }
            serde_json::to_string(&PisotBoundJson {
                trace: -(trace.to_i64().ok_or("trace out of range")?),
                degree_bound: degree,
            })?
        }
        BoundsCmd::Killer { n } => {
            if n < 2 || n % 2 != 0 {
                return Err("bounds killer requires even --n >= 2".into());
            }
            let report = salem_core::bounds::killer_exponent_report(n);
            serde_json::to_string(&ReportJson::from(&report))?
        }
    };
    text.push('\n');
    emit(&text, None)?;
    Ok(EXIT_OK)
}
