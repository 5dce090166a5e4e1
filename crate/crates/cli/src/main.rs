//! `nielsen` — exact Nielsen coincidence numbers and minimum numbers
//! for maps from spheres to spherical space forms, driven by a catalog
//! of homotopy-group data.
//!
//! Exit codes: 0 success, 1 usage error, 2 missing catalog data,
//! 3 catalog validation failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nielsen_core::catalog::{
    bundled_small_cases, bundled_toda_16_6, load_catalog_str, Catalog, CheckStatus,
};
use nielsen_core::census::{census_bruteforce, census_closed_form, sphere_census, CensusRow};
use nielsen_core::minimum::{mc, McOutcome, MccOutcome};
use nielsen_core::nielsen::{nielsen_number, ClassFlags, NielsenQuery};
use nielsen_core::{Cardinality, Error, GroupOrder, Level, SphereGroupKey};

#[derive(Parser)]
#[command(
    name = "nielsen",
    version,
    about = "Nielsen coincidence numbers and minimum numbers for sphere maps",
    disable_help_subcommand = true
)]
struct Cli {
    /// Catalog file (also: NIELSEN_CATALOG env var, or the bundled
    /// names `toda_16_6` / `small_cases`). Default: toda_16_6.
    #[arg(long, global = true)]
    catalog: Option<String>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute N_r, MCC and MC for one pair of liftings.
    Compute(ComputeArgs),
    /// Value distribution of N_r over all pairs of classes.
    Census(CensusArgs),
    /// Load a catalog and run every validation check.
    Validate,
    /// Reproduce the bundled value-distribution table.
    Tables(TablesArgs),
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Order of the deck transformation group (or `inf`).
    #[arg(long)]
    k: String,
    /// Suspension level (or `inf`).
    #[arg(long)]
    r: String,
    /// Lifting of the first map: comma-separated coefficients against
    /// the catalog's generator order.
    #[arg(long)]
    f1: String,
    /// Lifting of the second map.
    #[arg(long)]
    f2: String,
    /// Kervaire-invariant-one flag for the common lifting.
    #[arg(long)]
    kervaire: Option<bool>,
    /// Hopf invariant of the common lifting is not divisible by 4.
    #[arg(long = "hopf-mod4")]
    hopf_mod4: Option<bool>,
    /// Echo the generator legend of pi_m(S^n).
    #[arg(long)]
    names: bool,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Order of the deck transformation group (1 or 2 for the closed forms).
    #[arg(long)]
    k: u64,
    /// Level: a number, `inf`, or `all` for every level up to stability.
    #[arg(long, default_value = "all")]
    r: String,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Brute,
    Both,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, default_value_t = 16)]
    m: u32,
    #[arg(long, default_value_t = 6)]
    n: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successes, everything else is usage.
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };

    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::MissingData(_) => 2,
        Error::ParseError(_)
        | Error::SchemaViolation(_)
        | Error::IllDefinedHom(_)
        | Error::InconsistentStability(_) => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let (catalog, label) = resolve_catalog(cli.catalog.as_deref())?;
    match cli.command {
        Command::Compute(args) => cmd_compute(&catalog, &args, cli.format),
        Command::Census(args) => cmd_census(&catalog, &args, cli.format),
        Command::Validate => cmd_validate(&catalog, &label, cli.format),
        Command::Tables(args) => cmd_tables(&catalog, &args, cli.format),
    }
}

fn resolve_catalog(arg: Option<&str>) -> Result<(Catalog, String), Error> {
    let spec = arg
        .map(str::to_owned)
        .or_else(|| std::env::var("NIELSEN_CATALOG").ok());
    let spec = match spec {
        None => {
            return Ok((
                load_catalog_str(bundled_toda_16_6())?,
                "toda_16_6 (bundled)".into(),
            ))
        }
        Some(s) => s,
    };
    match spec.as_str() {
        "toda_16_6" | "toda_16_6.catalog" => Ok((
            load_catalog_str(bundled_toda_16_6())?,
            "toda_16_6 (bundled)".into(),
        )),
        "small_cases" | "small_cases.catalog" => Ok((
            load_catalog_str(bundled_small_cases())?,
            "small_cases (bundled)".into(),
        )),
        path => Ok((
            nielsen_core::catalog::load_catalog(&PathBuf::from(path))?,
            path.to_string(),
        )),
    }
}

/// Canonical JSON: sorted keys, so re-rendering a parsed report is
/// byte-identical.
fn print_json(value: serde_json::Value) {
    println!("{value}");
}

macro_rules! to_canonical {
    ($value:expr) => {
        serde_json::to_value($value).expect("report serializes")
    };
}

fn parse_coeffs(text: &str) -> Result<Vec<i64>, Error> {
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidQuery(format!("bad coefficient `{part}`")))
        })
        .collect()
}

fn cmd_compute(catalog: &Catalog, args: &ComputeArgs, format: Format) -> Result<ExitCode, Error> {
    let k: GroupOrder = args.k.parse().map_err(Error::InvalidQuery)?;
    let r: Level = args.r.parse().map_err(Error::InvalidQuery)?;
    let f1 = parse_coeffs(&args.f1)?;
    let f2 = parse_coeffs(&args.f2)?;
    let query =
        NielsenQuery::new(catalog, args.m, args.n, k, r, &f1, &f2)?.with_flags(ClassFlags {
            kervaire_one: args.kervaire,
            hopf_not_divisible_by_4: args.hopf_mod4,
        });

    let nielsen = nielsen_number(catalog, &query)?;
    let minimum = match k {
        GroupOrder::Finite(_) => Some(mc(catalog, &query)?),
        GroupOrder::Infinite => None,
    };

    let group = catalog.group(SphereGroupKey::new(args.m, args.n))?;

    if format == Format::Json {
        let report = json!({
            "query": {
                "m": args.m, "n": args.n,
                "k": args.k, "r": args.r,
                "f1": f1, "f2": f2,
            },
            "nielsen": to_canonical!(&nielsen),
            "minimum": minimum.as_ref().map(|v| to_canonical!(v)),
            "generators": group.generator_names(),
        });
        print_json(report);
        return Ok(ExitCode::SUCCESS);
    }

    if args.names {
        let legend: Vec<String> = group
            .generator_names()
            .iter()
            .zip(group.factors())
            .map(|(name, &d)| {
                if d == 0 {
                    format!("{name} (Z)")
                } else {
                    format!("{name} (Z{d})")
                }
            })
            .collect();
        println!(
            "generators of pi_{}(S^{}): {}",
            args.m,
            args.n,
            legend.join(", ")
        );
    }
    println!(
        "N_{} = {}   [clause {}]",
        args.r,
        nielsen.value,
        nielsen.clause.as_str()
    );
    match &minimum {
        None => println!("MCC, MC not computed: infinite deck transformation group"),
        Some(v) => {
            match &v.mcc {
                MccOutcome::Value(x) => {
                    println!("MCC = {x}   [{}, {}]", v.rule, v.certainty.as_str())
                }
                MccOutcome::Undecided { undecided } => {
                    println!("MCC = UNDECIDED ({undecided})   [{}]", v.rule)
                }
            }
            match &v.mc {
                McOutcome::Finite(x) => println!("MC  = {x}"),
                McOutcome::Infinite => println!("MC  = INFINITE"),
                McOutcome::Undecided(reason) => println!("MC  = UNDECIDED ({reason})"),
            }
        }
    }
    println!(
        "witness: E^r(f1) = ({}), E^r(f2) = ({}){}",
        nielsen.witness.e_r_f1.join(", "),
        nielsen.witness.e_r_f2.join(", "),
        match &nielsen.witness.e_r_reflected_f2 {
            Some(v) => format!(", E^r((-i)f2) = ({})", v.join(", ")),
            None => String::new(),
        }
    );
    Ok(ExitCode::SUCCESS)
}

enum LevelChoice {
    All,
    One(Level),
}

fn census_levels(catalog: &Catalog, m: u32, n: u32, arg: &str) -> Result<Vec<Level>, Error> {
    match arg {
        "all" => {
            let stable = if m == n {
                0
            } else {
                catalog.flags(SphereGroupKey::new(m, n)).stable_from
            };
            let mut levels: Vec<Level> = (0..=stable).map(Level::Finite).collect();
            levels.push(Level::Infinity);
            Ok(levels)
        }
        other => {
            let level: Level = other.parse().map_err(Error::InvalidQuery)?;
            Ok(vec![level])
        }
    }
}

fn closed_row(catalog: &Catalog, m: u32, n: u32, k: u64, r: Level) -> Result<CensusRow, Error> {
    match k {
        1 => sphere_census(catalog, m, n, r),
        2 => census_closed_form(catalog, m, n, r),
        other => Err(Error::HypothesisViolated(format!(
            "no closed-form census for deck groups of order {other}"
        ))),
    }
}

fn cmd_census(catalog: &Catalog, args: &CensusArgs, format: Format) -> Result<ExitCode, Error> {
    let choice = if args.r == "all" {
        LevelChoice::All
    } else {
        LevelChoice::One(args.r.parse().map_err(Error::InvalidQuery)?)
    };
    let levels = match choice {
        LevelChoice::All => census_levels(catalog, args.m, args.n, "all")?,
        LevelChoice::One(level) => vec![level],
    };

    struct OutRow {
        row: CensusRow,
        method: &'static str,
        agree: Option<bool>,
    }

    let mut rows: Vec<OutRow> = Vec::new();
    for &r in &levels {
        match args.method {
            Method::Closed => rows.push(OutRow {
                row: closed_row(catalog, args.m, args.n, args.k, r)?,
                method: "closed",
                agree: None,
            }),
            Method::Brute => rows.push(OutRow {
                row: census_bruteforce(catalog, args.m, args.n, GroupOrder::Finite(args.k), r)?,
                method: "brute",
                agree: None,
            }),
            Method::Both => {
                let closed = closed_row(catalog, args.m, args.n, args.k, r)?;
                let brute =
                    census_bruteforce(catalog, args.m, args.n, GroupOrder::Finite(args.k), r)?;
                let agree = closed == brute;
                rows.push(OutRow {
                    row: closed,
                    method: "both",
                    agree: Some(agree),
                });
            }
        }
    }

    if format == Format::Json {
        let out: Vec<serde_json::Value> = rows
            .iter()
            .map(|o| {
                let mut v = to_canonical!(&o.row);
                v["method"] = json!(o.method);
                if let Some(agree) = o.agree {
                    v["agree"] = json!(agree);
                }
                v
            })
            .collect();
        print_json(json!({ "m": args.m, "n": args.n, "k": args.k, "rows": out }));
        return Ok(ExitCode::SUCCESS);
    }

    let values: Vec<u64> = rows
        .iter()
        .flat_map(|o| o.row.counts.keys().copied())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut header = vec!["r".to_string()];
    header.extend(values.iter().map(|v| format!("#{v}")));
    header.push("ker".into());
    header.push("q".into());
    if args.method == Method::Both {
        header.push("check".into());
    }
    let mut table: Vec<Vec<String>> = vec![header];
    for o in &rows {
        let mut line = vec![o.row.r.to_string()];
        for v in &values {
            line.push(o.row.count(*v).to_string());
        }
        line.push(o.row.ker_e_r_h.to_string());
        line.push(o.row.q_r.to_string());
        if let Some(agree) = o.agree {
            line.push(if agree { "AGREE" } else { "DISAGREE" }.into());
        }
        table.push(line);
    }
    print_aligned(&table);

    let disagreement = rows.iter().any(|o| o.agree == Some(false));
    if disagreement {
        eprintln!("error: brute-force census disagrees with the closed form");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_aligned(table: &[Vec<String>]) {
    if table.is_empty() {
        return;
    }
    let cols = table.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in table {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    for row in table {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:>width$}", width = widths[i]))
            .collect();
        println!("{}", line.join("  "));
    }
}

fn cmd_validate(catalog: &Catalog, label: &str, format: Format) -> Result<ExitCode, Error> {
    // Loading already enforced the hard invariants (schema,
    // well-definedness, involutions, stability); what follows are the
    // report-level checks.
    let mut lines: Vec<(String, CheckStatus, String)> = Vec::new();

    for key in catalog.keys() {
        let report = catalog.validate_reflection_invariance(key)?;
        for (status, detail) in &report.lines {
            lines.push((report.name.clone(), *status, detail.clone()));
        }
    }

    // Kernel sequences and their monotonicity, for every key whose
    // suspension chain is present.
    for key in catalog.keys() {
        let stable = catalog.flags(key).stable_from;
        let mut seq: Vec<Cardinality> = Vec::new();
        let mut complete = true;
        for r in 0..=stable {
            match catalog.ker_e_r_h(key, Level::Finite(r)) {
                Ok(card) => seq.push(card),
                Err(Error::MissingData(_)) => {
                    complete = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !complete || seq.is_empty() {
            continue;
        }
        let name = format!("kernel sequence at {key}");
        let rendered: Vec<String> = seq.iter().map(Cardinality::to_string).collect();
        let monotone = seq.windows(2).all(|w| w[0] <= w[1]);
        if monotone {
            lines.push((
                name,
                CheckStatus::Pass,
                format!("[{}]", rendered.join(", ")),
            ));
        } else {
            lines.push((
                name,
                CheckStatus::Fail,
                format!("not nondecreasing: [{}]", rendered.join(", ")),
            ));
        }
    }

    let failed = lines.iter().any(|(_, s, _)| *s == CheckStatus::Fail);

    if format == Format::Json {
        let out: Vec<serde_json::Value> = lines
            .iter()
            .map(|(name, status, detail)| {
                json!({
                    "check": name,
                    "status": match status {
                        CheckStatus::Pass => "pass",
                        CheckStatus::Fail => "fail",
                        CheckStatus::Skip => "skip",
                    },
                    "detail": detail,
                })
            })
            .collect();
        print_json(json!({
            "catalog": label,
            "groups": catalog.keys().count(),
            "checks": out,
            "ok": !failed,
        }));
    } else {
        println!("catalog: {label}");
        println!("groups: {}", catalog.keys().count());
        for (name, status, detail) in &lines {
            let tag = match status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "SKIP",
            };
            println!("{tag}  {name}: {detail}");
        }
        println!(
            "{}",
            if failed {
                "RESULT: FAIL"
            } else {
                "RESULT: PASS"
            }
        );
    }

    Ok(if failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_tables(catalog: &Catalog, args: &TablesArgs, format: Format) -> Result<ExitCode, Error> {
    let key = SphereGroupKey::new(args.m, args.n);
    let stable = catalog.flags(key).stable_from;
    let mut levels: Vec<Level> = (0..=stable).map(Level::Finite).collect();
    levels.push(Level::Infinity);

    struct Column {
        labels: Vec<Level>,
        ker: Cardinality,
        space_form: CensusRow,
        sphere: CensusRow,
    }

    let mut columns: Vec<Column> = Vec::new();
    for &r in &levels {
        let ker = catalog.ker_e_r_h(key, r)?;
        let space_form = census_closed_form(catalog, args.m, args.n, r)?;
        let sphere = sphere_census(catalog, args.m, args.n, r)?;
        let same = columns.last().is_some_and(|c: &Column| {
            c.ker == ker
                && c.space_form.counts == space_form.counts
                && c.sphere.counts == sphere.counts
        });
        if same {
            columns.last_mut().expect("nonempty").labels.push(r);
        } else {
            columns.push(Column {
                labels: vec![r],
                ker,
                space_form,
                sphere,
            });
        }
    }

    let label_of = |col: &Column| -> String {
        if col.labels.contains(&Level::Infinity) && col.labels.len() > 1 {
            format!(">={}", col.labels[0])
        } else {
            col.labels
                .iter()
                .map(Level::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    };

    if format == Format::Json {
        let out: Vec<serde_json::Value> = columns
            .iter()
            .map(|c| {
                json!({
                    "r": label_of(c),
                    "ker": to_canonical!(&c.ker),
                    "space_form": to_canonical!(&c.space_form.counts),
                    "sphere_loose": to_canonical!(&c.sphere.count(0)),
                })
            })
            .collect();
        print_json(json!({ "m": args.m, "n": args.n, "columns": out }));
        return Ok(ExitCode::SUCCESS);
    }

    let mut table: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["r".to_string()];
    header.extend(columns.iter().map(label_of));
    table.push(header);
    let row = |name: &str, cells: Vec<String>| {
        let mut line = vec![name.to_string()];
        line.extend(cells);
        line
    };
    table.push(row(
        "#Ker(E^r h)",
        columns.iter().map(|c| c.ker.to_string()).collect(),
    ));
    for value in [0u64, 1, 2] {
        table.push(row(
            &format!("#_r^{value} (k=2)"),
            columns
                .iter()
                .map(|c| c.space_form.count(value).to_string())
                .collect(),
        ));
    }
    table.push(row(
        "#_r^0 (k=1)",
        columns
            .iter()
            .map(|c| c.sphere.count(0).to_string())
            .collect(),
    ));
    print_aligned(&table);
    Ok(ExitCode::SUCCESS)
}
