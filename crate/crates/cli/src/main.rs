use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use coxcat_core::arith::{format_rational, int};
use coxcat_core::characters;
use coxcat_core::cluster;
use coxcat_core::root_poset;
use coxcat_core::root_system::tabulated_full_reflections;
use coxcat_core::symfunc;
use coxcat_core::verify::{self, Check, Status, VerificationReport, VerifyOptions};
use coxcat_core::{CoxError, RootSystem};

#[derive(Parser)]
#[command(name = "coxcat", version, about = "Exact root-system, antichain, cluster and character computations")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Truncation degree for symmetric-function checks.
    #[arg(long, global = true, default_value_t = symfunc::DEFAULT_MAX_DEGREE)]
    max_degree: u32,
    /// Allow cluster complexes of rank 7 and 8.
    #[arg(long, global = true)]
    allow_large: bool,
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include wall-clock timings in verification reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, exponents and full reflections.
    Roots { r#type: String },
    /// Antichain counts and the N, H, P polynomials.
    Antichains { r#type: String },
    /// Face numbers of the cluster complex.
    Fpoly { r#type: String },
    /// Graded Orlik-Solomon character per conjugacy class.
    OsCharacter { r#type: String },
    /// Gerst series class functions and derivative identities.
    Gerst,
    /// Full-reflection table.
    Table {
        #[arg(required = true)]
        types: Vec<String>,
    },
    /// Run a named check (or `all`) on a type.
    Verify { check: String, r#type: String },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<CoxError> for Failure {
    fn from(e: CoxError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn build(label: &str) -> Result<RootSystem, Failure> {
    Ok(RootSystem::build(label)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("json"));
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Roots { r#type } => cmd_roots(cli, &build(r#type)?),
        Command::Antichains { r#type } => cmd_antichains(cli, &build(r#type)?),
        Command::Fpoly { r#type } => cmd_fpoly(cli, &build(r#type)?),
        Command::OsCharacter { r#type } => cmd_os_character(cli, &build(r#type)?),
        Command::Gerst => cmd_gerst(cli),
        Command::Table { types } => cmd_table(cli, types),
        Command::Verify { check, r#type } => cmd_verify(cli, check, &build(r#type)?),
    }
}

fn cmd_roots(cli: &Cli, rs: &RootSystem) -> Outcome {
    let summary = rs.summary();
    if cli.json {
        print_json(&serde_json::to_value(&summary).expect("json"));
        return Ok(());
    }
    println!("type {}", summary.type_label);
    println!("rank {}", summary.rank);
    println!("coxeter number {}", summary.coxeter_number);
    println!("group order {}", summary.group_order);
    println!("exponents {:?}", summary.exponents);
    println!("positive roots {}", summary.num_positive_roots);
    for (i, r) in summary.positive_roots.iter().enumerate() {
        println!("  {i:>3}  ({})", r.join(", "));
    }
    println!("full reflections {}", summary.full_reflections);
    println!("formula {}", summary.formula_value);
    Ok(())
}

fn cmd_antichains(cli: &Cli, rs: &RootSystem) -> Outcome {
    let (_, s) = root_poset::summarize(rs)?;
    let by_card: Vec<(u32, u64)> = s.tally.by_card().into_iter().collect();
    if cli.json {
        print_json(&json!({
            "type": rs.label(),
            "total": s.tally.total(),
            "product_formula": format_rational(&s.catalan),
            "by_cardinality": by_card,
            "narayana": s.narayana.to_json(),
            "h": s.h.to_json(),
            "p_direct": s.p_direct.to_json(),
            "p_mobius": s.p_mobius.to_json(),
        }));
        return Ok(());
    }
    println!("type {}", rs.label());
    println!("antichains {}", s.tally.total());
    println!("product formula {}", format_rational(&s.catalan));
    for (k, c) in by_card {
        println!("  cardinality {k}: {c}");
    }
    println!("N(x) = {}", s.narayana);
    println!("H(x,y) = {}", s.h);
    println!("P(x) = {}", s.p_direct);
    println!("P(x) by Mobius inversion = {}", s.p_mobius);
    Ok(())
}

fn cmd_fpoly(cli: &Cli, rs: &RootSystem) -> Outcome {
    let faces = cluster::cluster_faces(rs, cli.allow_large)?;
    let f = faces.f_polynomial();
    if cli.json {
        print_json(&json!({
            "type": rs.label(),
            "f": f.to_json(),
            "faces": faces.total(),
            "facets": faces.facets(),
        }));
        return Ok(());
    }
    println!("type {}", rs.label());
    println!("F(x,y) = {f}");
    println!("faces {}", faces.total());
    println!("facets {}", faces.facets());
    Ok(())
}

fn cmd_os_character(cli: &Cli, rs: &RootSystem) -> Outcome {
    let t = characters::character_table(rs)?;
    let rows: Vec<Value> = t
        .group
        .classes
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "label": c.label,
                "size": c.size,
                "chi": t.graded.values[i].to_json(),
                "chi_r": t.chi_r[i],
                "chi_g_prime": format_rational(&t.g_prime[i]),
            })
        })
        .collect();
    if cli.json {
        print_json(&json!({
            "type": rs.label(),
            "group_order": t.group.order(),
            "dims": t.graded.dims,
            "classes": rows,
        }));
        return Ok(());
    }
    println!("type {}  |W| = {}  dims {:?}", rs.label(), t.group.order(), t.graded.dims);
    for (i, c) in t.group.classes.classes.iter().enumerate() {
        println!(
            "  {:<16} size {:<5} chi_R {:<4} chi_G' {:<8} chi(t) = {}",
            c.label,
            c.size,
            t.chi_r[i],
            format_rational(&t.g_prime[i]),
            t.graded.values[i]
        );
    }
    Ok(())
}

fn cmd_gerst(cli: &Cli) -> Outcome {
    let n = cli.max_degree;
    let (calibration, bundle) = symfunc::calibrated_bundle(n)?;
    let checks: Vec<(&str, Result<Value, CoxError>)> = vec![
        ("d/dp1 Com", symfunc::verify_com_derivative(&bundle, n).map(|r| json!(r))),
        ("d/dp1 Sigma_t Lie", symfunc::verify_lie_derivative(&bundle, n).map(|r| json!(r))),
        (
            "second derivative",
            symfunc::verify_second_derivative_identity(&bundle, n).map(|r| json!(r)),
        ),
        ("bonzero", symfunc::verify_bonzero(&bundle, n).map(|r| json!(r))),
    ];
    let ok = checks.iter().all(|(_, r)| r.is_ok());
    let degrees = symfunc::gerst_class_functions(&bundle, n);
    if cli.json {
        let results: Vec<Value> = checks
            .iter()
            .map(|(name, r)| match r {
                Ok(v) => json!({ "check": name, "status": "pass", "report": v }),
                Err(e) => json!({ "check": name, "status": "fail", "witness": e.to_string() }),
            })
            .collect();
        print_json(&json!({
            "max_degree": n,
            "calibration": calibration,
            "degrees": degrees,
            "checks": results,
        }));
    } else {
        println!("twist {}", calibration.twist);
        for step in &calibration.steps {
            println!(
                "  n = {}: literal {}, omega {}",
                step.n,
                if step.literal_matches { "matches" } else { "differs" },
                if step.omega_matches { "matches" } else { "differs" }
            );
        }
        for d in &degrees {
            println!("degree {}", d.n);
            for (lambda, chi) in &d.classes {
                println!("  {lambda:<16} [{}]", chi.coeffs.join(", "));
            }
        }
        for (name, r) in &checks {
            match r {
                Ok(_) => println!("PASS {name}"),
                Err(e) => println!("FAIL {name}: {e}"),
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_table(cli: &Cli, labels: &[String]) -> Outcome {
    let systems = labels.iter().map(|l| build(l)).collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Value> = systems
        .iter()
        .map(|rs| {
            let counted = rs.full_reflection_count();
            let formula = rs.formula_value();
            let matched = formula == int(counted as i64) && counted == tabulated_full_reflections(rs.kind());
            json!({
                "type": rs.label(),
                "n": rs.rank(),
                "h": rs.coxeter_number,
                "order": rs.group_order,
                "exponents": rs.exponents(),
                "f_counted": counted,
                "f_formula": format_rational(&formula),
                "match": matched,
            })
        })
        .collect();
    if cli.json {
        print_json(&Value::Array(rows.clone()));
    } else {
        println!(
            "{:<8} {:>2} {:>3} {:>12} {:<28} {:>9} {:>9} match",
            "type", "n", "h", "|W|", "exponents", "f_W", "formula"
        );
        for r in &rows {
            let exps: Vec<String> = r["exponents"].as_array().unwrap().iter().map(|e| e.to_string()).collect();
            println!(
                "{:<8} {:>2} {:>3} {:>12} {:<28} {:>9} {:>9} {}",
                r["type"].as_str().unwrap(),
                r["n"].to_string(),
                r["h"].to_string(),
                r["order"].to_string(),
                exps.join(","),
                r["f_counted"].to_string(),
                r["f_formula"].as_str().unwrap(),
                if r["match"].as_bool().unwrap() { "yes" } else { "NO" }
            );
        }
    }
    if rows.iter().all(|r| r["match"].as_bool().unwrap()) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn print_report_text(r: &VerificationReport) {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let timing = r.timing_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
    println!("{status} {} {}{timing}", r.check, r.type_label);
    if let Some(reason) = &r.reason {
        println!("  reason: {reason}");
    }
    for w in &r.witnesses {
        println!("  witness: {w}");
    }
}

fn cmd_verify(cli: &Cli, check: &str, rs: &RootSystem) -> Outcome {
    let opts = VerifyOptions {
        max_degree: cli.max_degree,
        allow_large: cli.allow_large,
        timing: cli.timing,
    };
    let reports = if check == "all" {
        verify::run_all(rs, &opts)
    } else {
        let check: Check = check.parse()?;
        vec![verify::run_check(check, rs, &opts)?]
    };
    if cli.json {
        let v = if check == "all" {
            json!({ "type": rs.label(), "reports": reports })
        } else {
            json!(reports[0])
        };
        print_json(&v);
    } else {
        for r in &reports {
            print_report_text(r);
        }
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}
