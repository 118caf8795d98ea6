//! Command-line front end for the lattice and Galois-connection toolkit.
//!
//! Exit codes are uniform across commands:
//!
//! * `0` — success: the input is valid and the property asked about holds.
//! * `1` — the property asked about is false, or a witness search found one.
//! * `2` — input error: unreadable, unparseable, or out-of-bounds input.
//! * `3` — alarm: a proved theorem failed to verify, indicating a bug in the
//!   toolkit itself rather than a fact about the input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use latgal::abelian::{self, FinAbGroup};
use latgal::essentiality::{
    closed_elements, hollow_dimension, is_extending, uniform_dimension,
};
use latgal::galois::{CorrespondenceMode, GaloisConnection, GaloisError};
use latgal::lattice::{Elem, Lattice};
use latgal::report::{
    self, adjunction_failure, connection_report, lattice_report, to_json_pretty,
    ConnectionReport, SCHEMA_VERSION,
};
use latgal::search::{
    connection_reproducer, find_witness, run_theorem_suite, PropertyQuery, QueryTarget,
    WitnessInstance,
};
use latgal::textio::{
    emit_dot, load_connection, parse_lattice_file, parse_lattice_str, parse_map_file,
    print_lattice, TextIoError,
};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_ALARM: u8 = 3;

#[derive(Parser)]
#[command(
    name = "latgal",
    version,
    about = "Finite bounded lattices, Galois connections, and their classification",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a lattice file; optionally render its Hasse
    /// diagram as DOT.
    CheckLattice(CheckLatticeArgs),
    /// Full structural property report for a lattice file.
    Props(LatticeArgs),
    /// Verify that two map files form an adjoint pair.
    CheckConn(ConnArgs),
    /// Classify a connection's transfer properties and verify every
    /// applicable theorem.
    Classify(ConnArgs),
    /// Fixed points of the round-trips and the closed-element
    /// correspondence of a connection.
    Bijection(ConnArgs),
    /// Uniform and hollow dimension of a lattice, or the dimension-transfer
    /// theorem on a connection.
    Udim(LatticeOrConnArgs),
    /// Extending property of a modular lattice, or its transfer across a
    /// connection.
    Extending(LatticeOrConnArgs),
    /// Order-dual of a lattice, or the coclosed correspondence of a
    /// connection.
    Dual(DualArgs),
    /// Hunt for a witness instance of a property query, or sweep the
    /// exhaustive theorem suite.
    Search(SearchArgs),
    /// Subgroup lattices of finite abelian groups and the module
    /// connections built from their hom-sets.
    Abelian(AbelianArgs),
}

#[derive(Args)]
struct CheckLatticeArgs {
    /// Lattice file.
    file: PathBuf,
    /// Emit the Hasse diagram as a DOT digraph instead of a summary.
    #[arg(long)]
    dot: bool,
    /// Fill the closed elements in the DOT output.
    #[arg(long, requires = "dot")]
    highlight_closed: bool,
    /// Emit JSON.
    #[arg(long, conflicts_with = "dot")]
    json: bool,
}

#[derive(Args)]
struct LatticeArgs {
    /// Lattice file.
    file: PathBuf,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConnArgs {
    /// Lower-adjoint map file.
    #[arg(long)]
    alpha: PathBuf,
    /// Upper-adjoint map file.
    #[arg(long)]
    beta: PathBuf,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LatticeOrConnArgs {
    /// Lattice file (omit when examining a connection with --alpha/--beta).
    #[arg(
        value_name = "LATTICE",
        conflicts_with_all = ["alpha", "beta"],
        required_unless_present = "alpha"
    )]
    file: Option<PathBuf>,
    /// Lower-adjoint map file.
    #[arg(long, requires = "beta")]
    alpha: Option<PathBuf>,
    /// Upper-adjoint map file.
    #[arg(long, requires = "alpha")]
    beta: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DualArgs {
    /// Lattice file (omit when examining a connection with --alpha/--beta).
    #[arg(
        value_name = "LATTICE",
        conflicts_with_all = ["alpha", "beta"],
        required_unless_present = "alpha"
    )]
    file: Option<PathBuf>,
    /// Lower-adjoint map file.
    #[arg(long, requires = "beta")]
    alpha: Option<PathBuf>,
    /// Upper-adjoint map file.
    #[arg(long, requires = "alpha")]
    beta: Option<PathBuf>,
    /// Emit the dual lattice as DOT.
    #[arg(long, conflicts_with_all = ["json", "alpha"])]
    dot: bool,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    /// Query single lattices.
    Lattice,
    /// Query Galois connections.
    Connection,
}

#[derive(Args)]
struct SearchArgs {
    /// Boolean property query, e.g. "retractable & !essential".
    #[arg(long, conflicts_with = "suite", required_unless_present = "suite")]
    query: Option<String>,
    /// What the query ranges over.
    #[arg(long, value_enum, default_value_t = TargetArg::Connection)]
    target: TargetArg,
    /// Largest lattice size to enumerate.
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    /// Run the exhaustive theorem suite instead of a witness hunt.
    #[arg(long)]
    suite: bool,
    /// Directory to write reproducer files into (witness instances, suite
    /// failures).
    #[arg(long)]
    reproducer_dir: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ConnectionKind {
    /// Common-kernel connection into the reversed subgroup lattice of the
    /// first group.
    Kernels,
    /// Image-sum connection into the subgroup lattice of the second group.
    Images,
}

#[derive(Args)]
struct AbelianArgs {
    /// Cyclic component orders of the group, comma separated (e.g. `2,4`).
    #[arg(long)]
    group: String,
    /// Orders of a second group; classifies a module connection built from
    /// the homomorphisms GROUP → HOM instead of printing a lattice.
    #[arg(long, requires = "connection")]
    hom: Option<String>,
    /// Which module connection to classify.
    #[arg(long, value_enum, requires = "hom")]
    connection: Option<ConnectionKind>,
    /// Emit the subgroup lattice as DOT.
    #[arg(long, conflicts_with_all = ["json", "hom"])]
    dot: bool,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    // Die silently when the read end of a pipe closes (`latgal … | head`),
    // like other line-oriented tools, instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    let code = match cli.command {
        Command::CheckLattice(args) => cmd_check_lattice(&args),
        Command::Props(args) => cmd_props(&args),
        Command::CheckConn(args) => cmd_check_conn(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Bijection(args) => cmd_bijection(&args),
        Command::Udim(args) => cmd_udim(&args),
        Command::Extending(args) => cmd_extending(&args),
        Command::Dual(args) => cmd_dual(&args),
        Command::Search(args) => cmd_search(&args),
        Command::Abelian(args) => cmd_abelian(&args),
    };
    ExitCode::from(code)
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

fn mark(b: bool) -> &'static str {
    if b {
        "\u{2713}"
    } else {
        "\u{2717}"
    }
}

fn label_set(l: &Lattice, elems: &[Elem]) -> String {
    let labels: Vec<&str> = elems.iter().map(|&e| l.label(e)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn load_lattice(path: &Path) -> Result<Lattice, u8> {
    parse_lattice_file(path).map_err(input_error)
}

/// Loads a connection. `Err(code)` is a ready exit code: input errors have
/// been printed, and a law violation (monotonicity/adjunction) has been
/// reported in the chosen format — the maps are well-formed but simply do
/// not form a connection, which is a negative answer, not an input error.
fn load_conn(alpha: &Path, beta: &Path, json: bool) -> Result<GaloisConnection, u8> {
    match load_connection(alpha, beta) {
        Ok(conn) => Ok(conn),
        Err(TextIoError::Connection(
            e @ (GaloisError::NotMonotone { .. } | GaloisError::NotAdjoint { .. }),
        )) => {
            // Re-parse the header for names; the maps parsed once already.
            let (name, domain, codomain) = match parse_map_file(alpha) {
                Ok(m) => (m.name, m.from_lattice, m.to_lattice),
                Err(err) => return Err(input_error(err)),
            };
            let report = adjunction_failure(&name, &domain, &codomain, &e);
            if json {
                print!("{}", to_json_pretty(&report));
            } else {
                println!("connection {name}: {domain} \u{21c4} {codomain}");
                println!("  adjunction  {}  ({e})", mark(false));
            }
            Err(EXIT_FAIL)
        }
        Err(e) => Err(input_error(e)),
    }
}

fn cmd_check_lattice(args: &CheckLatticeArgs) -> u8 {
    let l = match load_lattice(&args.file) {
        Ok(l) => l,
        Err(code) => return code,
    };
    // The printer promises round-trip stability; a mismatch is a toolkit bug.
    match parse_lattice_str(&print_lattice(&l), "round-trip") {
        Ok(back) if back == l => {}
        _ => {
            eprintln!("alarm: lattice failed to round-trip through its own text format");
            return EXIT_ALARM;
        }
    }
    if args.dot {
        let highlight =
            if args.highlight_closed { closed_elements(&l) } else { Vec::new() };
        print!("{}", emit_dot(&l, &highlight));
    } else if args.json {
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "lattice": l.name(),
            "size": l.n(),
            "valid": true,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!(
            "lattice {}: {} elements, bottom {}, top {}, {} cover pairs \u{2014} valid",
            l.name(),
            l.n(),
            l.label(l.bottom()),
            l.label(l.top()),
            l.covers().len(),
        );
    }
    EXIT_PASS
}

fn cmd_props(args: &LatticeArgs) -> u8 {
    let l = match load_lattice(&args.file) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let report = lattice_report(&l);
    if args.json {
        print!("{}", to_json_pretty(&report));
        return EXIT_PASS;
    }
    println!("lattice {}: {} elements", report.lattice, report.size);
    println!("  modular               {}", mark(report.modular));
    println!("  distributive          {}", mark(report.distributive));
    println!("  unique closures       {}", mark(report.uc));
    println!("  uniform               {}", mark(report.uniform));
    match report.extending {
        Some(ext) => println!("  extending             {}", mark(ext)),
        None => println!("  extending             \u{2014} (not modular)"),
    }
    println!("  cyclically generated  {}", mark(report.cyclically_generated));
    println!(
        "  uniform dimension     {}  (witness {{{}}})",
        report.uniform_dimension,
        report.uniform_dimension_witness.join(", "),
    );
    println!("  closed                {{{}}}", report.closed.join(", "));
    println!("  coclosed              {{{}}}", report.coclosed.join(", "));
    println!("  cyclic                {{{}}}", report.cyclic.join(", "));
    EXIT_PASS
}

fn cmd_check_conn(args: &ConnArgs) -> u8 {
    let conn = match load_conn(&args.alpha, &args.beta, args.json) {
        Ok(conn) => conn,
        Err(code) => return code,
    };
    if args.json {
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "connection": conn.name(),
            "domain": conn.a().name(),
            "codomain": conn.b().name(),
            "adjunction": true,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!(
            "connection {}: {} ({} elements) \u{21c4} {} ({} elements)",
            conn.name(),
            conn.a().name(),
            conn.a().n(),
            conn.b().name(),
            conn.b().n(),
        );
        println!("  adjunction  {}", mark(true));
    }
    EXIT_PASS
}

fn witness_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|i| i.as_str().unwrap_or_default().to_owned())
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

fn theorem_summary(v: &Value) -> String {
    match v["status"].as_str().unwrap_or("unknown") {
        "passed" => "passed".to_owned(),
        "hypotheses_not_met" => {
            let missing: Vec<&str> = v["missing"]
                .as_array()
                .map(|a| a.iter().filter_map(Value::as_str).collect())
                .unwrap_or_default();
            format!("hypotheses not met ({})", missing.join(", "))
        }
        "violation" => format!(
            "VIOLATION: {}",
            v["description"].as_str().unwrap_or("unknown")
        ),
        other => other.to_owned(),
    }
}

fn print_classification(report: &ConnectionReport) {
    println!(
        "connection {}: {} \u{21c4} {}",
        report.connection, report.domain, report.codomain
    );
    println!("  adjunction                         {}", mark(report.adjunction));
    let props = report.properties.as_ref().expect("classification ran");
    let rows: [(&str, &str, bool); 10] = [
        ("essential", "essential", props.essential),
        ("cyclically essential", "cyclically_essential", props.cyclically_essential),
        ("retractable", "retractable", props.retractable),
        ("unique closure", "uc", props.uc),
        ("coessential", "coessential", props.coessential),
        ("coretractable", "coretractable", props.coretractable),
        ("unique coclosure", "ucc", props.ucc),
        ("additive upper adjoint", "beta_additive", props.beta_additive),
        ("top preserved by lower adjoint", "alpha_top", props.alpha_top),
        ("bottom preserved by upper adjoint", "beta_bottom", props.beta_bottom),
    ];
    for (display, key, holds) in rows {
        let mut line = format!("  {display:<35}{}", mark(holds));
        if let Some(w) = props.witnesses.get(key) {
            write!(line, "  witness {}", witness_string(w)).unwrap();
        }
        println!("{line}");
    }
    let theorems = report.theorems.as_ref().expect("classification ran");
    println!("theorems");
    println!("  dimension transfer      {}", theorem_summary(&theorems.udim));
    println!("  closed correspondence   {}", theorem_summary(&theorems.correspondence));
    println!("  extending transfer      {}", theorem_summary(&theorems.extending));
    println!(
        "  coclosed correspondence {}",
        theorem_summary(&theorems.dual_correspondence)
    );
}

/// Shared by `classify` and `abelian --connection`: renders the report and
/// derives the exit code — `0` only when the three headline transfer
/// properties all hold, `3` when a theorem verdict is a violation.
fn classification_output(conn: &GaloisConnection, json: bool) -> u8 {
    let report = connection_report(conn);
    if json {
        print!("{}", to_json_pretty(&report));
    } else {
        print_classification(&report);
    }
    if report.has_violation() {
        return EXIT_ALARM;
    }
    let props = report.properties.as_ref().expect("classification ran");
    if props.essential && props.retractable && props.uc {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_classify(args: &ConnArgs) -> u8 {
    match load_conn(&args.alpha, &args.beta, args.json) {
        Ok(conn) => classification_output(&conn, args.json),
        Err(code) => code,
    }
}

fn cmd_bijection(args: &ConnArgs) -> u8 {
    let conn = match load_conn(&args.alpha, &args.beta, args.json) {
        Ok(conn) => conn,
        Err(code) => return code,
    };
    let (galois_a, galois_b) = conn.galois_elements();
    let closed_a = closed_elements(conn.a());
    let closed_b = closed_elements(conn.b());
    let correspondence = report::correspondence_json(&conn);
    if args.json {
        let labels = |l: &Lattice, elems: &[Elem]| {
            Value::Array(elems.iter().map(|&e| json!(l.label(e))).collect())
        };
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "connection": conn.name(),
            "domain": conn.a().name(),
            "codomain": conn.b().name(),
            "galois_domain": labels(conn.a(), &galois_a),
            "galois_codomain": labels(conn.b(), &galois_b),
            "closed_domain": labels(conn.a(), &closed_a),
            "closed_codomain": labels(conn.b(), &closed_b),
            "correspondence": correspondence,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!(
            "connection {}: {} \u{21c4} {}",
            conn.name(),
            conn.a().name(),
            conn.b().name()
        );
        println!("  fixed points (domain)    {}", label_set(conn.a(), &galois_a));
        println!("  fixed points (codomain)  {}", label_set(conn.b(), &galois_b));
        println!("  closed (domain)          {}", label_set(conn.a(), &closed_a));
        println!("  closed (codomain)        {}", label_set(conn.b(), &closed_b));
        println!("  correspondence           {}", theorem_summary(&correspondence));
        if correspondence["status"] == "passed" {
            let set = |v: &Value| {
                let items: Vec<&str> = v
                    .as_array()
                    .map(|a| a.iter().filter_map(Value::as_str).collect())
                    .unwrap_or_default();
                format!("{{{}}}", items.join(", "))
            };
            println!(
                "    mode {}, domain set {}, codomain set {}",
                correspondence["mode"].as_str().unwrap_or("?"),
                set(&correspondence["domain_set"]),
                set(&correspondence["codomain_set"]),
            );
        }
    }
    // The exit code reflects the correspondence theorem on this connection.
    let result = match conn.closed_correspondence(CorrespondenceMode::Modular) {
        Err(GaloisError::HypothesisNotMet { .. }) => {
            conn.closed_correspondence(CorrespondenceMode::General)
        }
        other => other,
    };
    match result {
        Ok(r) if r.verified => EXIT_PASS,
        Ok(_) => EXIT_ALARM,
        Err(GaloisError::HypothesisNotMet { .. }) => EXIT_FAIL,
        Err(_) => EXIT_ALARM,
    }
}

fn status_code(v: &Value) -> u8 {
    match v["status"].as_str().unwrap_or("violation") {
        "passed" => EXIT_PASS,
        "hypotheses_not_met" => EXIT_FAIL,
        _ => EXIT_ALARM,
    }
}

fn cmd_udim(args: &LatticeOrConnArgs) -> u8 {
    if let Some(file) = &args.file {
        let l = match load_lattice(file) {
            Ok(l) => l,
            Err(code) => return code,
        };
        let uniform = uniform_dimension(&l);
        let hollow = hollow_dimension(&l);
        if args.json {
            let labels =
                |elems: &[Elem]| elems.iter().map(|&e| l.label(e)).collect::<Vec<_>>();
            let payload = json!({
                "schema": SCHEMA_VERSION,
                "lattice": l.name(),
                "size": l.n(),
                "uniform_dimension": uniform.value,
                "uniform_dimension_witness": labels(&uniform.witness),
                "hollow_dimension": hollow.value,
                "hollow_dimension_witness": labels(&hollow.witness),
            });
            print!("{}", to_json_pretty(&payload));
        } else {
            println!(
                "lattice {}: uniform dimension {} (witness {}), hollow dimension {} (witness {})",
                l.name(),
                uniform.value,
                label_set(&l, &uniform.witness),
                hollow.value,
                label_set(&l, &hollow.witness),
            );
        }
        return EXIT_PASS;
    }
    let (alpha, beta) = (args.alpha.as_ref().unwrap(), args.beta.as_ref().unwrap());
    let conn = match load_conn(alpha, beta, args.json) {
        Ok(conn) => conn,
        Err(code) => return code,
    };
    let verdict = report::udim_json(&conn);
    if args.json {
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "connection": conn.name(),
            "udim": verdict,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!("connection {}: dimension transfer {}", conn.name(), theorem_summary(&verdict));
        if verdict["status"] == "passed" {
            println!(
                "  domain dimension {}, codomain dimension {}",
                verdict["domain_dimension"], verdict["codomain_dimension"]
            );
        }
    }
    status_code(&verdict)
}

fn cmd_extending(args: &LatticeOrConnArgs) -> u8 {
    if let Some(file) = &args.file {
        let l = match load_lattice(file) {
            Ok(l) => l,
            Err(code) => return code,
        };
        let extending = match is_extending(&l) {
            Ok(b) => b,
            Err(e) => return input_error(e),
        };
        if args.json {
            let payload = json!({
                "schema": SCHEMA_VERSION,
                "lattice": l.name(),
                "extending": extending,
            });
            print!("{}", to_json_pretty(&payload));
        } else {
            println!("lattice {}: extending {}", l.name(), mark(extending));
        }
        return if extending { EXIT_PASS } else { EXIT_FAIL };
    }
    let (alpha, beta) = (args.alpha.as_ref().unwrap(), args.beta.as_ref().unwrap());
    let conn = match load_conn(alpha, beta, args.json) {
        Ok(conn) => conn,
        Err(code) => return code,
    };
    let verdict = report::extending_json(&conn);
    if args.json {
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "connection": conn.name(),
            "extending": verdict,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!(
            "connection {}: extending transfer {}",
            conn.name(),
            theorem_summary(&verdict)
        );
        if verdict["status"] == "passed" {
            println!(
                "  domain extending {}, codomain extending {}, to domain: {}, to codomain: {}",
                verdict["domain_extending"],
                verdict["codomain_extending"],
                verdict["to_domain"].as_str().unwrap_or("?"),
                verdict["to_codomain"].as_str().unwrap_or("?"),
            );
        }
    }
    status_code(&verdict)
}

fn cmd_dual(args: &DualArgs) -> u8 {
    if let Some(file) = &args.file {
        let l = match load_lattice(file) {
            Ok(l) => l,
            Err(code) => return code,
        };
        let dual = l.dual();
        if args.dot {
            print!("{}", emit_dot(&dual, &[]));
        } else if args.json {
            print!("{}", to_json_pretty(&lattice_report(&dual)));
        } else {
            print!("{}", print_lattice(&dual));
        }
        return EXIT_PASS;
    }
    let (alpha, beta) = (args.alpha.as_ref().unwrap(), args.beta.as_ref().unwrap());
    let conn = match load_conn(alpha, beta, args.json) {
        Ok(conn) => conn,
        Err(code) => return code,
    };
    let verdict = report::dual_correspondence_json(&conn);
    if args.json {
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "connection": conn.name(),
            "coessential": conn.is_coessential(),
            "coretractable": conn.is_coretractable(),
            "ucc": conn.is_ucc(),
            "dual_correspondence": verdict,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!(
            "connection {}: {} \u{21c4} {}",
            conn.name(),
            conn.a().name(),
            conn.b().name()
        );
        println!("  coessential              {}", mark(conn.is_coessential()));
        println!("  coretractable            {}", mark(conn.is_coretractable()));
        println!("  unique coclosure         {}", mark(conn.is_ucc()));
        println!("  coclosed correspondence  {}", theorem_summary(&verdict));
        if verdict["status"] == "passed" {
            println!(
                "    coclosed domain {}, coclosed codomain {}",
                verdict["coclosed_domain"], verdict["coclosed_codomain"]
            );
        }
    }
    status_code(&verdict)
}

fn write_reproducer(dir: &Path, file_name: &str, content: &str) -> Result<PathBuf, u8> {
    if let Err(e) = fs::create_dir_all(dir) {
        return Err(input_error(format!("cannot create `{}`: {e}", dir.display())));
    }
    let path = dir.join(file_name);
    match fs::write(&path, content) {
        Ok(()) => Ok(path),
        Err(e) => Err(input_error(format!("cannot write `{}`: {e}", path.display()))),
    }
}

fn cmd_search(args: &SearchArgs) -> u8 {
    if args.suite {
        return cmd_search_suite(args);
    }
    let target = match args.target {
        TargetArg::Lattice => QueryTarget::Lattice,
        TargetArg::Connection => QueryTarget::Connection,
    };
    let query_text = args.query.as_ref().expect("clap enforces --query without --suite");
    let query = match PropertyQuery::parse(query_text, target) {
        Ok(q) => q,
        Err(e) => return input_error(e),
    };
    let search = match find_witness(&query, args.max_size) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let target_name = match target {
        QueryTarget::Lattice => "lattice",
        QueryTarget::Connection => "connection",
    };

    let witness_value = search.witness.as_ref().map(|found| {
        let (kind, name, size, text) = match &found.instance {
            WitnessInstance::Lattice(l) => {
                ("lattice", l.name().to_owned(), l.n(), print_lattice(l))
            }
            WitnessInstance::Connection(g) => (
                "connection",
                g.name().to_owned(),
                g.a().n().max(g.b().n()),
                connection_reproducer(g),
            ),
        };
        (kind, name, size, text, &found.certificate)
    });

    let mut written: Option<PathBuf> = None;
    if let (Some(dir), Some((kind, name, _, text, _))) =
        (&args.reproducer_dir, &witness_value)
    {
        let extension = if *kind == "lattice" { "lat" } else { "txt" };
        let sanitized: String = name
            .chars()
            .map(|c| if c.is_alphanumeric() { c } else { '_' })
            .collect();
        match write_reproducer(dir, &format!("{sanitized}.{extension}"), text) {
            Ok(path) => written = Some(path),
            Err(code) => return code,
        }
    }

    if args.json {
        let witness_json = match &witness_value {
            Some((kind, name, size, text, certificate)) => json!({
                "kind": kind,
                "name": name,
                "size": size,
                "text": text,
                "certificate": certificate,
            }),
            None => Value::Null,
        };
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "target": target_name,
            "query": query.expr().to_string(),
            "max_size": args.max_size,
            "searched_max_size": search.searched_max_size,
            "witness": witness_json,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        match &witness_value {
            Some((kind, name, size, text, certificate)) => {
                println!("witness {kind} `{name}` (size {size}) for: {}", query.expr());
                for (atom, value) in certificate.iter() {
                    println!("  {atom:<24}{}", mark(*value));
                }
                match &written {
                    Some(path) => println!("reproducer written to {}", path.display()),
                    None => print!("{text}"),
                }
            }
            None => println!(
                "none: no {target_name} up to size {} satisfies: {}",
                search.searched_max_size,
                query.expr()
            ),
        }
    }
    if search.witness.is_some() {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn cmd_search_suite(args: &SearchArgs) -> u8 {
    let report = match run_theorem_suite(args.max_size) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let mut written = 0usize;
    if let Some(dir) = &args.reproducer_dir {
        for clause in &report.clauses {
            for (i, failure) in clause.failures.iter().enumerate() {
                let file = format!("{}-{i}.txt", clause.name);
                if let Err(code) = write_reproducer(dir, &file, &failure.reproducer) {
                    return code;
                }
                written += 1;
            }
        }
    }
    if args.json {
        let clauses: Vec<Value> = report
            .clauses
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "instances": c.instances,
                    "failures": c.failures.iter().map(|f| &f.description).collect::<Vec<_>>(),
                })
            })
            .collect();
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "max_size": report.max_size,
            "lattices_tested": report.lattices_tested,
            "connections_tested": report.connections_tested,
            "total_failures": report.total_failures(),
            "clauses": clauses,
        });
        print!("{}", to_json_pretty(&payload));
    } else {
        println!(
            "theorem suite up to size {}: {} lattices, {} connections",
            report.max_size, report.lattices_tested, report.connections_tested
        );
        for clause in &report.clauses {
            println!(
                "  {:<44}{:>8} instances  {}",
                clause.name,
                clause.instances,
                if clause.failures.is_empty() {
                    "pass".to_owned()
                } else {
                    format!("{} FAILURES", clause.failures.len())
                }
            );
        }
        if written > 0 {
            println!(
                "{written} reproducer file(s) written to {}",
                args.reproducer_dir.as_ref().unwrap().display()
            );
        }
    }
    if report.total_failures() == 0 {
        EXIT_PASS
    } else {
        EXIT_ALARM
    }
}

fn parse_group(text: &str) -> Result<FinAbGroup, String> {
    let orders: Vec<u32> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{t}` is not a cyclic order (expected e.g. `2,4`)"))
        })
        .collect::<Result<_, String>>()?;
    FinAbGroup::new(&orders).map_err(|e| e.to_string())
}

fn tuple_string(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn cmd_abelian(args: &AbelianArgs) -> u8 {
    let group = match parse_group(&args.group) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    if let Some(hom_text) = &args.hom {
        let codomain = match parse_group(hom_text) {
            Ok(g) => g,
            Err(e) => return input_error(e),
        };
        let kind = args.connection.expect("clap enforces --connection with --hom");
        let built = match kind {
            ConnectionKind::Kernels => abelian::connection_rm_lu(&group, &codomain),
            ConnectionKind::Images => abelian::connection_rn_lu(&group, &codomain),
        };
        return match built {
            Ok(conn) => classification_output(&conn, args.json),
            Err(e) => input_error(e),
        };
    }
    let subgroups = match abelian::subgroups(&group) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let lattice = match abelian::subgroup_lattice(&group) {
        Ok(l) => l,
        Err(e) => return input_error(e),
    };
    if args.dot {
        print!("{}", emit_dot(&lattice, &[]));
    } else if args.json {
        print!("{}", to_json_pretty(&lattice_report(&lattice)));
    } else {
        println!("# subgroups of {}", group.name());
        for (i, sub) in subgroups.iter().enumerate() {
            let members: Vec<String> =
                sub.tuples().iter().map(|t| tuple_string(t)).collect();
            println!("# {} = {{{}}}", lattice.label(i), members.join(", "));
        }
        print!("{}", print_lattice(&lattice));
    }
    EXIT_PASS
}
