use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rlat_core::census::{self, CensusRecord};
use rlat_core::enumerate::EnumOptions;
use rlat_core::format::{dot_hasse, dot_spec, emit_algebra, parse_algebra};
use rlat_core::harness::{run_suite, SuiteOptions};
use rlat_core::sample::DEFAULT_SEED;
use rlat_core::spectrum::{CollectionKind, PrimeCollection};
use rlat_core::{
    Algebra, ElementSet, Error, Filter, HullKernelSpace, PointSet, Spectrum, TopologyKind,
};

mod json;

use json::Envelope;

#[derive(Parser)]
#[command(
    name = "rlat",
    version,
    about = "Finite residuated lattices, prime spectra and hull-kernel topologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a residuated lattice.
    Validate { file: PathBuf },
    /// List every filter.
    Filters {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Prime, maximal and minimal prime filters, D(P) and x^perp.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Hull-kernel (or dual) topology on a collection of primes.
    Topology {
        file: PathBuf,
        /// spec | max | min | minover:<e1,e2,..> | list:<f1;f2;..> with fi = e1,e2,..
        #[arg(long, default_value = "spec")]
        collection: String,
        /// Use the dual topology generated by the h(x).
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the theorem catalog.
    Theorems {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate algebras of a given size and run the catalog on each.
    Search {
        #[arg(long)]
        size: usize,
        /// Include every size from 2 up to --size.
        #[arg(long)]
        upto: bool,
        /// Write one JSON record per algebra to this file.
        #[arg(long)]
        census_out: Option<PathBuf>,
        #[arg(long, default_value_t = EnumOptions::default().max_algebras)]
        max_algebras: usize,
        /// Wall-clock limit in seconds for the enumeration of each size.
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Write the algebra as DOT or in canonical .rlat form.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, conflicts_with = "rlat")]
        dot: Option<DotKind>,
        #[arg(long)]
        rlat: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DotKind {
    Hasse,
    Spec,
}

enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// Output already printed; only the exit code is left.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse { .. }) | Failure::Io(..) | Failure::Usage(_) => 2,
            Failure::Core(Error::InternalInconsistency(_)) | Failure::Checks => 3,
            Failure::Core(Error::CapExceeded { .. }) => 4,
            Failure::Core(_) => 1,
        }
    }

    fn report(&self) {
        match self {
            Failure::Core(Error::ValidationFailed(report)) => {
                eprintln!("error: {} law violations", report.violations.len());
                for v in &report.violations {
                    eprintln!("  {}: witness {:?}", v.law, v.witness);
                }
            }
            Failure::Core(e) => eprintln!("error: {e}"),
            Failure::Io(path, e) => eprintln!("error: {}: {e}", path.display()),
            Failure::Usage(msg) => eprintln!("error: {msg}"),
            Failure::Checks => {}
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            f.report();
            ExitCode::from(f.code())
        }
    }
}

fn seed() -> Result<u64, Failure> {
    match std::env::var("RLAT_SEED") {
        Err(_) => Ok(DEFAULT_SEED),
        Ok(s) => {
            let s = s.trim();
            let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
                Some(hex) => u64::from_str_radix(hex, 16),
                None => s.parse(),
            };
            parsed.map_err(|_| Failure::Usage(format!("RLAT_SEED `{s}` is not an integer")))
        }
    }
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Ok(parse_algebra(&text)?)
}

fn fmt_set(alg: &Algebra, s: ElementSet) -> String {
    format!("{{{}}}", alg.set_names(s).join(","))
}

fn fmt_points(s: PointSet) -> String {
    let parts: Vec<String> = s.iter().map(|i| format!("P{i}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => {
            let alg = load(&file)?;
            println!(
                "valid: {} elements, {}",
                alg.size(),
                if alg.is_mtl() {
                    "prelinear"
                } else {
                    "not prelinear"
                }
            );
            Ok(())
        }
        Command::Filters { file, json } => {
            let alg = load(&file)?;
            let sp = Spectrum::new(&alg)?;
            if json {
                let payload = json::filters(&alg, sp.filters(), &sp);
                print!("{}", Envelope::new("filters", Some(&alg), payload).render());
            } else {
                println!("{} filters", sp.filters().len());
                for f in sp.filters().iter() {
                    println!("{}", fmt_set(&alg, f.elems()));
                }
            }
            Ok(())
        }
        Command::Spectrum { file, json } => {
            let alg = load(&file)?;
            let sp = Spectrum::new(&alg)?;
            let payload = json::spectrum_payload(&alg, &sp)?;
            if json {
                print!(
                    "{}",
                    Envelope::new("spectrum", Some(&alg), payload).render()
                );
                return Ok(());
            }
            for (label, family) in [
                ("Spec", &payload.spec),
                ("Max", &payload.max),
                ("Min", &payload.min),
            ] {
                let sets: Vec<String> = family
                    .iter()
                    .map(|s| format!("{{{}}}", s.join(",")))
                    .collect();
                println!("{label}: {}", sets.join(" "));
            }
            println!("unique maximal above every prime: {}", payload.pm);
            for d in &payload.d_sets {
                println!("D({{{}}}) = {{{}}}", d.prime.join(","), d.d_set.join(","));
            }
            for p in &payload.perp {
                println!("{}^perp = {{{}}}", p.element, p.perp.join(","));
            }
            Ok(())
        }
        Command::Topology {
            file,
            collection,
            dual,
            json,
        } => {
            let alg = load(&file)?;
            let sp = Spectrum::new(&alg)?;
            let pi = parse_collection(&alg, &sp, &collection)?;
            let space = HullKernelSpace::new(&alg, pi)?;
            let kind = if dual {
                TopologyKind::Dual
            } else {
                TopologyKind::HullKernel
            };
            let separation = space.separation(&alg, kind)?;
            let compactness = space.compactness(&alg, &sp)?;
            let payload =
                json::topology_payload(&alg, collection, &space, kind, separation, compactness);
            if json {
                print!(
                    "{}",
                    Envelope::new("topology", Some(&alg), payload).render()
                );
            } else {
                print_topology(&alg, &space, kind, &payload);
            }
            Ok(())
        }
        Command::Theorems { file, json } => {
            let alg = load(&file)?;
            let report = run_suite(&alg, SuiteOptions { seed: seed()? })?;
            if json {
                print!(
                    "{}",
                    Envelope::new("theorems", Some(&alg), &report).render()
                );
            } else {
                for c in &report.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    print!("{status} {} ({} instances)", c.id, c.instances);
                    match &c.witness {
                        Some(w) if !c.passed => println!(": {w}"),
                        _ => println!(),
                    }
                }
                let s = report.summary;
                println!(
                    "{} checks, {} passed, {} failed",
                    s.total, s.passed, s.failed
                );
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Search {
            size,
            upto,
            census_out,
            max_algebras,
            time_limit,
            json,
        } => search(size, upto, census_out, max_algebras, time_limit, json),
        Command::Export { file, dot, rlat } => {
            let alg = load(&file)?;
            match (dot, rlat) {
                (Some(DotKind::Hasse), _) => print!("{}", dot_hasse(&alg)),
                (Some(DotKind::Spec), _) => print!("{}", dot_spec(&alg, &Spectrum::new(&alg)?)),
                (None, true) => print!("{}", emit_algebra(&alg)),
                (None, false) => {
                    return Err(Failure::Usage(
                        "export needs --dot hasse|spec or --rlat".into(),
                    ))
                }
            }
            Ok(())
        }
    }
}

fn print_topology(
    alg: &Algebra,
    space: &HullKernelSpace,
    kind: TopologyKind,
    payload: &json::TopologyPayload,
) {
    let top = space.topology(kind);
    let label = match kind {
        TopologyKind::HullKernel => "hull-kernel",
        TopologyKind::Dual => "dual",
    };
    println!(
        "collection {} ({} points), {label} topology",
        payload.collection,
        space.len()
    );
    for (i, p) in space.collection().members().iter().enumerate() {
        println!("  P{i} = {}", fmt_set(alg, p.elems()));
    }
    println!("basis:");
    for b in &payload.basis {
        let set: PointSet = b.points.iter().copied().collect();
        println!("  {}({}) = {}", b.kind, b.element, fmt_points(set));
    }
    let opens: Vec<String> = top.opens().iter().map(|&o| fmt_points(o)).collect();
    println!("opens: {}", opens.join(" "));
    let s = payload.separation;
    println!(
        "t0={} t1={} hausdorff={} normal={} t4={}",
        s.t0, s.t1, s.hausdorff, s.normal, s.t4
    );
    let c = payload.compactness;
    println!(
        "compact_h={} compact_d={} full={} contains_min_over_core={}",
        c.compact_h, c.compact_d, c.full, c.contains_min_over_core
    );
    let k = payload.connectedness;
    println!(
        "zero_dimensional={} totally_disconnected={} extremally_disconnected={} stonean={}",
        k.zero_dimensional, k.totally_disconnected, k.extremally_disconnected, k.stonean
    );
}

fn parse_names(alg: &Algebra, list: &str) -> Result<ElementSet, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            alg.index_of(name)
                .ok_or_else(|| Failure::Usage(format!("unknown element `{name}`")))
        })
        .collect()
}

fn parse_collection(alg: &Algebra, sp: &Spectrum, spec: &str) -> Result<PrimeCollection, Failure> {
    match spec {
        "spec" => Ok(sp.spec().clone()),
        "max" => Ok(sp.max().clone()),
        "min" => Ok(sp.min().clone()),
        _ => {
            if let Some(list) = spec.strip_prefix("minover:") {
                let set = parse_names(alg, list)?;
                return Ok(sp.min_over(alg, set)?);
            }
            if let Some(list) = spec.strip_prefix("list:") {
                let mut members = Vec::new();
                for (i, part) in list.split(';').enumerate() {
                    let set = parse_names(alg, part)?;
                    let f = Filter::new(alg, set).ok_or(Error::NotPrimeCollection(i))?;
                    members.push(f);
                }
                return Ok(PrimeCollection::new(alg, CollectionKind::Custom, members)?);
            }
            Err(Failure::Usage(format!(
                "unknown collection `{spec}`; expected spec, max, min, minover:<elements> or list:<filters>"
            )))
        }
    }
}

fn search(
    size: usize,
    upto: bool,
    out: Option<PathBuf>,
    max_algebras: usize,
    time_limit: Option<u64>,
    json: bool,
) -> Outcome {
    let enum_options = EnumOptions {
        max_algebras,
        time_limit: time_limit.map(Duration::from_secs),
    };
    let suite = SuiteOptions { seed: seed()? };
    let mut writer = match &out {
        Some(path) => Some(std::io::BufWriter::new(
            fs::File::create(path).map_err(|e| Failure::Io(path.clone(), e))?,
        )),
        None => None,
    };
    let mut write_error = None;
    let mut failing: Vec<(usize, usize, Vec<String>)> = Vec::new();
    let mut sink = |r: &CensusRecord| {
        if let Some(w) = writer.as_mut() {
            if let Err(e) = writeln!(w, "{}", r.to_json_line()) {
                write_error.get_or_insert(e);
            }
        }
        if !r.failed.is_empty() {
            failing.push((r.size, r.index, r.failed.clone()));
        }
    };
    let sizes: Vec<usize> = if upto {
        (2..=size).collect()
    } else {
        vec![size]
    };
    let mut summaries = Vec::new();
    let mut cap_error = None;
    for n in sizes {
        match census::census_size(n, &enum_options, suite, &mut sink) {
            Ok(s) => summaries.push(s),
            Err(e) => {
                cap_error = Some(e);
                break;
            }
        }
    }
    if let Some(mut w) = writer {
        if let Err(e) = w.flush() {
            write_error.get_or_insert(e);
        }
    }
    if let (Some(e), Some(path)) = (write_error, out) {
        return Err(Failure::Io(path, e));
    }

    if json {
        let payload = json::SearchPayload {
            sizes: summaries.clone(),
            source: "enumerated by this tool",
        };
        print!("{}", Envelope::new("search", None, payload).render());
    } else {
        println!("size algebras mtl pm star bigstar failing");
        for s in &summaries {
            println!(
                "{:>4} {:>8} {:>3} {:>2} {:>4} {:>7} {:>7}",
                s.size, s.algebras, s.mtl, s.pm, s.star, s.bigstar, s.failing
            );
        }
        for (n, i, ids) in &failing {
            eprintln!("size {n} #{i}: {}", ids.join(", "));
        }
    }
    if let Some(e) = cap_error {
        return Err(e.into());
    }
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
