//! Command-line front end: construct codes, re-certify stored descriptors,
//! replay the built-in showcase instances, sweep feasible parameters to CSV,
//! and run seeded erasure-repair demos.
//!
//! Machine output (JSON descriptors, CSV, reports) goes to stdout; the
//! human-readable summary, with exponents in signed form, goes to stderr.
//! Exit codes: 0 success, 2 parameter errors, 3 certification failures,
//! 4 search caps exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::construct::{
    certify, check_mds, construct_lrc, construct_mds_q_plus_1, default_step, feasible_mds,
    feasible_parameters, ConstructOptions, DVariant, ExhaustivePolicy, Family, LrcCode, LrcParams,
    MdsCheck, OptimalityCertificate,
};
use crate::cyclic::{CyclicCode, DefiningSet, DEFAULT_ENUM_CAP};
use crate::descriptor::{describe_lrc, describe_mds, CodeDescriptor, RebuiltCode};
use crate::field::FieldCtx;
use crate::reference::REFERENCE_INSTANCES;
use crate::repair::{repair_cost, repair_plan, RepairStep, Word};
use crate::{descriptor, Error, Result};

/// Environment variable overriding the default codeword-enumeration cap.
pub const ENUM_CAP_ENV: &str = "CYCLIC_LRC_ENUM_CAP";

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Construct and audit optimal cyclic locally repairable codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code, certify it, and emit its JSON descriptor.
    Construct(ConstructArgs),
    /// Rebuild a stored descriptor and reproduce its certificate exactly.
    Certify(CertifyArgs),
    /// Replay the built-in showcase instances against their frozen data.
    Examples(ExamplesArgs),
    /// Certify every feasible instance up to a length bound; emit CSV.
    Sweep(SweepArgs),
    /// Erase symbols of a codeword and repair them group by group.
    RepairDemo(RepairDemoArgs),
    /// List every feasible parameter tuple for a field.
    Params(ParamsArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Family: qminus1, qplus1-rlocal, qplus1-rdelta, or mds.
    #[arg(long)]
    family: String,
    /// Field size (any prime power).
    #[arg(long)]
    q: u64,
    /// Code length; must divide q - 1 or q + 1 as the family demands.
    #[arg(long)]
    n: usize,
    /// Code dimension.
    #[arg(long)]
    k: usize,
    /// Locality r; required except for mds.
    #[arg(long)]
    r: Option<usize>,
    /// Group tolerance delta; required except for mds.
    #[arg(long)]
    delta: Option<usize>,
    /// Run spacing; defaults to the smallest the rule accepts.
    #[arg(long)]
    b: Option<usize>,
    /// Symmetric-run layout where two exist: zero or half.
    #[arg(long, default_value = "zero")]
    variant: String,
    /// Distance enumeration policy: skip, if-fits, or require.
    #[arg(long, default_value = "if-fits")]
    exhaustive: String,
    /// Write the descriptor to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Descriptor JSON file to re-check.
    descriptor: PathBuf,
}

#[derive(Args)]
struct ExamplesArgs {
    /// Also enumerate distances where the codeword space fits the cap.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Field size (any prime power).
    #[arg(long)]
    q: u64,
    /// Largest length to consider.
    #[arg(long)]
    max_n: usize,
    /// Append the mds family rows after the locality families.
    #[arg(long)]
    with_mds: bool,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the CSV to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RepairDemoArgs {
    /// Descriptor JSON file of the code to demo.
    descriptor: PathBuf,
    /// Coordinates to erase, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    erase: Vec<usize>,
    /// Message symbols (field codes); drawn from the seed when omitted.
    #[arg(long, value_delimiter = ',')]
    message: Option<Vec<u32>>,
    /// PRNG seed for the random message.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ParamsArgs {
    /// Field size (any prime power).
    #[arg(long)]
    q: u64,
    /// Largest length to consider.
    #[arg(long)]
    max_n: usize,
    /// Append the mds (n, k) pairs after the locality families.
    #[arg(long)]
    with_mds: bool,
}

/// Parses arguments from the process environment, runs the chosen command,
/// and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let cap = enum_cap_from_env();
    let outcome = match cli.command {
        Command::Construct(a) => cmd_construct(a, cap),
        Command::Certify(a) => cmd_certify(a, cap),
        Command::Examples(a) => cmd_examples(a, cap),
        Command::Sweep(a) => cmd_sweep(a, cap),
        Command::RepairDemo(a) => cmd_repair_demo(a),
        Command::Params(a) => cmd_params(a, cap),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn enum_cap_from_env() -> u64 {
    std::env::var(ENUM_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::SizeCapExceeded { .. } | Error::SearchSpaceTooLarge { .. } => 4,
        Error::DescriptorMismatch { .. } => 3,
        _ => 2,
    }
}

fn parse_policy(s: &str) -> Result<ExhaustivePolicy> {
    match s {
        "skip" => Ok(ExhaustivePolicy::Skip),
        "if-fits" => Ok(ExhaustivePolicy::IfFits),
        "require" => Ok(ExhaustivePolicy::Require),
        other => Err(Error::ParamDomain {
            reason: format!("unknown policy {other:?}; expected skip, if-fits, or require"),
        }),
    }
}

/// Exponent set in the signed convention, ascending.
fn signed_set(set: &DefiningSet) -> String {
    let reps: Vec<String> = set.signed_reps().iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", reps.join(", "))
}

fn emit_descriptor(desc: &CodeDescriptor, out: Option<&PathBuf>) -> Result<()> {
    let json = desc.to_json();
    match out {
        Some(path) => std::fs::write(path, json + "\n").map_err(|e| Error::ParamDomain {
            reason: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn lrc_summary(lrc: &LrcCode, cert: &OptimalityCertificate) {
    let p = lrc.params();
    let code = lrc.code();
    eprintln!(
        "[{}, {}] cyclic code over {}, family {}, rule {}",
        p.n,
        p.k,
        code.base_field().id(),
        p.family.tag(),
        lrc.rule()
    );
    eprintln!(
        "locality (r, delta) = ({}, {}), b = {}, {} groups of size {}",
        p.r,
        p.delta,
        p.b,
        lrc.repair_groups().group_count(),
        lrc.repair_groups().group_size()
    );
    let offsets: Vec<String> = lrc
        .locality_offsets()
        .iter()
        .map(|x| x.to_string())
        .collect();
    eprintln!("coset offsets (signed): {{{}}}", offsets.join(", "));
    eprintln!("run D (signed): {}", signed_set(lrc.run_set()));
    eprintln!(
        "defining set Z (signed, {} exponents): {}",
        code.zeros().len(),
        signed_set(code.zeros())
    );
    let mut bounds = format!(
        "bounds: bch >= {}, singleton <= {}",
        cert.bch_bound, cert.singleton_bound
    );
    if cert.d_exact_by_sandwich {
        bounds.push_str(&format!(" => d = {} exactly", cert.singleton_bound));
    }
    if let Some(d) = cert.d_exhaustive {
        bounds.push_str(&format!("; enumerated d = {d}"));
    }
    eprintln!("{bounds}");
    eprintln!(
        "locality check: every group distance >= {} -> {}",
        p.delta, cert.locality.verdict
    );
    eprintln!(
        "verdict: {}",
        if cert.verdict { "optimal" } else { "NOT optimal" }
    );
}

fn mds_summary(code: &CyclicCode, rule: &str, check: &MdsCheck) {
    eprintln!(
        "[{}, {}] cyclic code over {}, family mds, rule {}",
        code.n(),
        code.k(),
        code.base_field().id(),
        rule
    );
    eprintln!(
        "defining set Z (signed, {} exponents): {}",
        code.zeros().len(),
        signed_set(code.zeros())
    );
    let mut bounds = format!(
        "bounds: bch >= {}, singleton <= {}",
        check.bch_bound, check.singleton_bound
    );
    if let Some(d) = check.d_exhaustive {
        bounds.push_str(&format!("; enumerated d = {d}"));
    }
    eprintln!("{bounds}");
    eprintln!(
        "verdict: {}",
        if check.verdict {
            "distance meets the singleton bound"
        } else {
            "NOT mds"
        }
    );
}

fn cmd_construct(args: ConstructArgs, cap: u64) -> Result<i32> {
    let family: Family = args.family.parse()?;
    let variant: DVariant = args.variant.parse()?;
    let policy = parse_policy(&args.exhaustive)?;
    let ctx = FieldCtx::shared_for(args.q)?;
    if family == Family::Mds {
        if args.r.is_some() || args.delta.is_some() || args.b.is_some() {
            return Err(Error::ParamDomain {
                reason: "family mds takes no --r, --delta, or --b".into(),
            });
        }
        let (code, rule) = construct_mds_q_plus_1(&ctx, args.n, args.k, variant)?;
        let check = check_mds(&code, args.k, policy, cap)?;
        mds_summary(&code, rule, &check);
        emit_descriptor(&describe_mds(&code, rule, &check), args.out.as_ref())?;
        return Ok(if check.verdict { 0 } else { 3 });
    }
    let (Some(r), Some(delta)) = (args.r, args.delta) else {
        return Err(Error::ParamDomain {
            reason: format!("family {family} needs --r and --delta"),
        });
    };
    let params = LrcParams {
        q: args.q,
        n: args.n,
        k: args.k,
        r,
        delta,
        b: args.b.unwrap_or_else(|| default_step(family, delta)),
        family,
    };
    let opts = ConstructOptions {
        i_list: None,
        variant,
    };
    let lrc = construct_lrc(&ctx, &params, &opts)?;
    let cert = certify(&lrc, policy, cap)?;
    lrc_summary(&lrc, &cert);
    emit_descriptor(&describe_lrc(&lrc, &cert), args.out.as_ref())?;
    Ok(if cert.verdict { 0 } else { 3 })
}

fn cmd_certify(args: CertifyArgs, cap: u64) -> Result<i32> {
    let text = std::fs::read_to_string(&args.descriptor).map_err(|e| Error::ParamDomain {
        reason: format!("cannot read {}: {e}", args.descriptor.display()),
    })?;
    let desc = CodeDescriptor::from_json(&text)?;
    let rebuilt = descriptor::verify(&desc, cap)?;
    match &rebuilt {
        RebuiltCode::Lrc(lrc) => eprintln!(
            "rebuilt [{}, {}] over {} via rule {}; certificate reproduced exactly",
            lrc.params().n,
            lrc.params().k,
            lrc.code().base_field().id(),
            lrc.rule()
        ),
        RebuiltCode::Mds(code) => eprintln!(
            "rebuilt [{}, {}] over {} via rule {}; certificate reproduced exactly",
            code.n(),
            code.k(),
            code.base_field().id(),
            desc.theorem
        ),
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&desc.certificate).expect("certificate serializes")
    );
    Ok(if desc.certificate.verdict() { 0 } else { 3 })
}

fn cmd_examples(args: ExamplesArgs, cap: u64) -> Result<i32> {
    let policy = if args.exhaustive {
        ExhaustivePolicy::IfFits
    } else {
        ExhaustivePolicy::Skip
    };
    let mut all_ok = true;
    for inst in &REFERENCE_INSTANCES {
        let p = inst.params;
        let label = format!(
            "q={} n={} k={} r={} delta={} b={} rule={}",
            p.q, p.n, p.k, p.r, p.delta, p.b, inst.rule
        );
        let verdict = (|| -> Result<Vec<String>> {
            let ctx = FieldCtx::shared_for(p.q)?;
            let lrc = inst.build(&ctx)?;
            let mut problems = Vec::new();
            if lrc.rule() != inst.rule {
                problems.push(format!("rule {} fired instead", lrc.rule()));
            }
            if lrc.code().zeros().to_vec() != inst.zeros {
                problems.push("defining set differs from the frozen one".into());
            }
            let cert = certify(&lrc, policy, cap)?;
            if cert.singleton_bound != inst.distance {
                problems.push(format!(
                    "distance {} != expected {}",
                    cert.singleton_bound, inst.distance
                ));
            }
            if !cert.verdict {
                problems.push("certificate verdict false".into());
            }
            Ok(problems)
        })();
        match verdict {
            Ok(problems) if problems.is_empty() => {
                println!("PASS {label} d={}", inst.distance);
            }
            Ok(problems) => {
                all_ok = false;
                println!("FAIL {label}: {}", problems.join("; "));
            }
            Err(e) => {
                all_ok = false;
                println!("FAIL {label}: {e}");
            }
        }
    }
    eprintln!(
        "{} showcase instances, {}",
        REFERENCE_INSTANCES.len(),
        if all_ok { "all reproduced" } else { "FAILURES above" }
    );
    Ok(if all_ok { 0 } else { 3 })
}

/// Column layout of the sweep CSV.
pub const SWEEP_CSV_HEADER: &str =
    "q,n,k,r,delta,b,family,theorem,|Z|,bch,singleton,d_exhaustive,locality_ok,optimal";

fn sweep_rows(q: u64, max_n: usize, with_mds: bool, cap: u64) -> Result<(Vec<String>, bool)> {
    let ctx = FieldCtx::shared_for(q)?;
    let tuples = feasible_parameters(q, max_n, cap)?;
    let lrc_rows: Vec<Result<(String, bool)>> = tuples
        .par_iter()
        .map(|t| {
            let p = t.params;
            let lrc = construct_lrc(&ctx, &p, &ConstructOptions::default())?;
            let cert = certify(&lrc, ExhaustivePolicy::IfFits, cap)?;
            let dex = cert.d_exhaustive.map_or(String::new(), |d| d.to_string());
            let row = format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                p.q,
                p.n,
                p.k,
                p.r,
                p.delta,
                p.b,
                p.family.tag(),
                lrc.rule(),
                lrc.code().zeros().len(),
                cert.bch_bound,
                cert.singleton_bound,
                dex,
                cert.locality.verdict,
                cert.verdict
            );
            Ok((row, cert.verdict))
        })
        .collect();
    let mut rows = Vec::with_capacity(lrc_rows.len());
    let mut all_ok = true;
    for item in lrc_rows {
        let (row, ok) = item?;
        all_ok &= ok;
        rows.push(row);
    }
    if with_mds {
        let mds_rows: Vec<Result<(String, bool)>> = feasible_mds(q, max_n)?
            .par_iter()
            .map(|t| {
                let (code, rule) = construct_mds_q_plus_1(&ctx, t.n, t.k, DVariant::ZeroCentered)?;
                let check = check_mds(&code, t.k, ExhaustivePolicy::IfFits, cap)?;
                let dex = check.d_exhaustive.map_or(String::new(), |d| d.to_string());
                let row = format!(
                    "{},{},{},,,,mds,{},{},{},{},{},,{}",
                    q,
                    t.n,
                    t.k,
                    rule,
                    code.zeros().len(),
                    check.bch_bound,
                    check.singleton_bound,
                    dex,
                    check.verdict
                );
                Ok((row, check.verdict))
            })
            .collect();
        for item in mds_rows {
            let (row, ok) = item?;
            all_ok &= ok;
            rows.push(row);
        }
    }
    Ok((rows, all_ok))
}

fn cmd_sweep(args: SweepArgs, cap: u64) -> Result<i32> {
    let run = || sweep_rows(args.q, args.max_n, args.with_mds, cap);
    let (rows, all_ok) = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::ParamDomain {
                reason: format!("cannot build a {jobs}-thread pool: {e}"),
            })?
            .install(run),
        None => run(),
    }?;
    let mut csv = String::new();
    csv.push_str(SWEEP_CSV_HEADER);
    csv.push_str("\r\n");
    for row in &rows {
        csv.push_str(row);
        csv.push_str("\r\n");
    }
    match &args.out {
        Some(path) => std::fs::write(path, &csv).map_err(|e| Error::ParamDomain {
            reason: format!("cannot write {}: {e}", path.display()),
        })?,
        None => print!("{csv}"),
    }
    eprintln!(
        "{} instances over GF({}) up to n = {}: {}",
        rows.len(),
        args.q,
        args.max_n,
        if all_ok { "all optimal" } else { "FAILURES present" }
    );
    Ok(if all_ok { 0 } else { 3 })
}

fn cmd_repair_demo(args: RepairDemoArgs) -> Result<i32> {
    let text = std::fs::read_to_string(&args.descriptor).map_err(|e| Error::ParamDomain {
        reason: format!("cannot read {}: {e}", args.descriptor.display()),
    })?;
    let desc = CodeDescriptor::from_json(&text)?;
    let RebuiltCode::Lrc(lrc) = descriptor::rebuild(&desc)? else {
        return Err(Error::ParamDomain {
            reason: "repair-demo needs a locally repairable code, not an mds descriptor".into(),
        });
    };
    let code = lrc.code();
    let ctx = code.base_field();
    let p = *lrc.params();
    for &coord in &args.erase {
        if coord >= p.n {
            return Err(Error::ParamDomain {
                reason: format!("erasure coordinate {coord} is out of range for length {}", p.n),
            });
        }
    }
    let message = match args.message {
        Some(msg) => {
            if msg.len() != p.k {
                return Err(Error::ParamDomain {
                    reason: format!("message needs {} symbols, got {}", p.k, msg.len()),
                });
            }
            if let Some(&bad) = msg.iter().find(|&&c| (c as u64) >= p.q) {
                return Err(Error::ParamDomain {
                    reason: format!("message symbol {bad} is outside GF({})", p.q),
                });
            }
            msg
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..p.k).map(|_| rng.gen_range(0..p.q) as u32).collect()
        }
    };
    let codeword = code.systematic_encode(&message);

    eprintln!(
        "[{}, {}] code over {}, rule {}, {} groups of size {}, delta = {}",
        p.n,
        p.k,
        ctx.id(),
        lrc.rule(),
        lrc.repair_groups().group_count(),
        lrc.repair_groups().group_size(),
        p.delta
    );
    eprintln!("message:  {}", Word::from_codeword(ctx.id(), &message));
    let clean = Word::from_codeword(ctx.id(), &codeword);
    eprintln!("codeword: {clean}");

    let mut word = clean.clone();
    word.erase(&args.erase);
    eprintln!("received: {word}");

    let costs: Vec<(usize, usize, usize)> = (0..lrc.repair_groups().group_count())
        .filter_map(|g| {
            let coords = lrc.repair_groups().group_coords(g);
            let erased = coords.iter().filter(|&&i| word.get(i).is_none()).count();
            (erased > 0).then(|| (g, erased, repair_cost(&lrc, &word, g)))
        })
        .collect();
    for &(g, erased, cost) in &costs {
        eprintln!("group {g}: {erased} erased, repair reads {cost} symbols");
    }

    let steps = repair_plan(&lrc, &mut word)?;
    let mut step_reports = Vec::new();
    for step in &steps {
        match step {
            RepairStep::Local {
                group,
                repaired,
                symbols_read,
            } => {
                for &coord in repaired {
                    eprintln!(
                        "coordinate {coord} restored to {:x} locally within group {group}",
                        word.get(coord).expect("repaired coordinate has a value")
                    );
                }
                step_reports.push(json!({
                    "kind": "local",
                    "group": group,
                    "repaired": repaired,
                    "symbols_read": symbols_read,
                }));
            }
            RepairStep::Global {
                repaired,
                symbols_read,
            } => {
                for &coord in repaired {
                    eprintln!(
                        "coordinate {coord} restored to {:x} by the global decoder",
                        word.get(coord).expect("repaired coordinate has a value")
                    );
                }
                step_reports.push(json!({
                    "kind": "global",
                    "repaired": repaired,
                    "symbols_read": symbols_read,
                }));
            }
        }
    }
    eprintln!("repaired: {word}");
    let restored = word == clean;
    eprintln!(
        "round trip: {}",
        if restored { "exact" } else { "MISMATCH" }
    );

    let report = json!({
        "n": p.n,
        "k": p.k,
        "delta": p.delta,
        "seed": args.seed,
        "erased": args.erase,
        "costs": costs
            .iter()
            .map(|&(g, erased, cost)| json!({
                "group": g,
                "erased": erased,
                "symbols_read": cost,
            }))
            .collect::<Vec<_>>(),
        "steps": step_reports,
        "restored": restored,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(if restored { 0 } else { 3 })
}

fn cmd_params(args: ParamsArgs, cap: u64) -> Result<i32> {
    let tuples = feasible_parameters(args.q, args.max_n, cap)?;
    let mut entries: Vec<serde_json::Value> = tuples
        .iter()
        .map(|t| {
            let p = t.params;
            json!({
                "q": p.q,
                "n": p.n,
                "k": p.k,
                "r": p.r,
                "delta": p.delta,
                "b": p.b,
                "family": p.family.tag(),
                "theorem": t.rule,
            })
        })
        .collect();
    let mut mds_count = 0;
    if args.with_mds {
        for t in feasible_mds(args.q, args.max_n)? {
            entries.push(json!({
                "q": args.q,
                "n": t.n,
                "k": t.k,
                "family": "mds",
                "theorem": t.rule,
            }));
            mds_count += 1;
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&entries).expect("entries serialize")
    );
    eprintln!(
        "{} locality tuples{} over GF({}) up to n = {}",
        entries.len() - mds_count,
        if args.with_mds {
            format!(" and {mds_count} mds pairs")
        } else {
            String::new()
        },
        args.q,
        args.max_n
    );
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policies_and_exit_codes() {
        assert_eq!(parse_policy("skip").unwrap(), ExhaustivePolicy::Skip);
        assert_eq!(parse_policy("if-fits").unwrap(), ExhaustivePolicy::IfFits);
        assert_eq!(parse_policy("require").unwrap(), ExhaustivePolicy::Require);
        assert!(parse_policy("always").is_err());
        assert_eq!(
            exit_code_for(&Error::ParamDomain { reason: "x".into() }),
            2
        );
        assert_eq!(
            exit_code_for(&Error::NonexistentMDS { q: 27, n: 28, k: 4 }),
            2
        );
        assert_eq!(
            exit_code_for(&Error::DescriptorMismatch { what: "x".into() }),
            3
        );
        assert_eq!(exit_code_for(&Error::SizeCapExceeded { size: 2, cap: 1 }), 4);
        assert_eq!(
            exit_code_for(&Error::SearchSpaceTooLarge { size: 2, cap: 1 }),
            4
        );
    }

    #[test]
    fn signed_rendering() {
        let set = DefiningSet::new(12, [0, 1, 2, 9, 10, 11]);
        assert_eq!(signed_set(&set), "{-3, -2, -1, 0, 1, 2}");
    }

    #[test]
    fn clap_wiring_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
