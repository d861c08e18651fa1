//! Command-line front end: single-permutation classification, the census
//! over all of `S_n`, cover diagrams, and the Grassmannian, partial-flag and
//! matrix Schubert entry points.

use std::process;

use clap::{Parser, Subcommand, ValueEnum};

use schubert::{
    bar_diagram, build_system, census, classify, is_gorenstein, matrix_schubert_embed,
    min_coset_rep, CensusOptions, Composition, PermError, Permutation, RectPartition,
};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Classify Schubert varieties of the flag variety"
)]
struct Cli {
    /// Output format (csv applies to `count` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// In `count`, also tally the factorial and Fano columns
    #[arg(long, global = true)]
    full: bool,
    /// Cross-check the combinatorial Gorenstein test against the
    /// linear-system solver and fail on any disagreement
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the Schubert variety indexed by a permutation
    ///
    /// Exits 0 when the variety is Gorenstein, 1 when it is not, and 2 on
    /// input errors.
    Classify {
        /// Permutation, space-separated ("3 1 4 2") or digits ("3142", n <= 9)
        perm: String,
    },
    /// Count Gorenstein and smooth Schubert varieties over all of S_n
    Count {
        n: usize,
        /// Allow n > 10
        #[arg(long)]
        force: bool,
        /// Shard the sweep across worker threads
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Render the cover diagram of a permutation and solve its system
    Diagram { perm: String },
    /// Classify a Grassmannian Schubert variety given by a partition
    Grassmannian {
        /// Partition, comma-separated parts ("6,5,5,3,2"; "0" for empty)
        shape: String,
        /// Bounding rectangle as ROWSxWIDTH, e.g. "5x7"
        #[arg(long)]
        rect: String,
    },
    /// Classify a partial-flag Schubert variety given by a coset
    Coset {
        perm: String,
        /// Block sizes of the flag composition, e.g. "2,2,3"
        #[arg(long)]
        blocks: String,
    },
    /// Embed v as v x id in S_2n and classify the matrix Schubert variety
    EmbedMatrix { perm: String },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            process::exit(2);
        }
    }
}

fn run(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Classify { perm } => cmd_classify(perm, cli),
        Command::Count { n, force, threads } => cmd_count(*n, *force, *threads, cli),
        Command::Diagram { perm } => cmd_diagram(perm, cli),
        Command::Grassmannian { shape, rect } => cmd_grassmannian(shape, rect, cli),
        Command::Coset { perm, blocks } => cmd_coset(perm, blocks, cli),
        Command::EmbedMatrix { perm } => cmd_embed_matrix(perm, cli),
    }
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    text.parse().map_err(|e: PermError| e.to_string())
}

fn oracle_check(w: &Permutation) -> Result<(), String> {
    let combinatorial = is_gorenstein(w);
    let feasible = build_system(w).solve().is_some();
    if combinatorial != feasible {
        return Err(format!(
            "oracle disagreement on {w}: combinatorial test says {combinatorial}, \
             linear system says {feasible}"
        ));
    }
    Ok(())
}

fn reject_csv(cli: &Cli) -> Result<(), String> {
    if cli.format == Format::Csv {
        return Err("csv output is only available for count".to_string());
    }
    Ok(())
}

/// Prints a classification report and returns the Gorenstein exit code.
fn emit_report(
    report: &schubert::ClassificationReport,
    cli: &Cli,
    json_wrap: Option<serde_json::Value>,
    text_headers: &[String],
) -> Result<i32, String> {
    reject_csv(cli)?;
    match cli.format {
        Format::Text => {
            for line in text_headers {
                println!("{line}");
            }
            print!("{report}");
        }
        Format::Json => match json_wrap {
            Some(wrapped) => println!("{wrapped}"),
            None => println!("{}", report.to_json()),
        },
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(if report.gorenstein { 0 } else { 1 })
}

fn cmd_classify(perm: &str, cli: &Cli) -> Result<i32, String> {
    let w = parse_perm(perm)?;
    if cli.oracle {
        oracle_check(&w)?;
    }
    let report = classify(&w);
    emit_report(&report, cli, None, &[])
}

fn cmd_count(n: usize, force: bool, threads: usize, cli: &Cli) -> Result<i32, String> {
    if n == 0 {
        return Err("n must be at least 1".to_string());
    }
    if n > 10 && !force {
        return Err(format!(
            "n={n} would sweep {n}! permutations; pass --force to run it anyway"
        ));
    }
    let opts = CensusOptions {
        full: cli.full,
        oracle: cli.oracle,
        threads,
    };
    let row = census(n, &opts).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Text => println!("{row}"),
        Format::Json => println!("{}", row.to_json()),
        Format::Csv => {
            println!("{}", row.csv_header());
            println!("{}", row.to_csv());
        }
    }
    Ok(0)
}

fn cmd_diagram(perm: &str, cli: &Cli) -> Result<i32, String> {
    let w = parse_perm(perm)?;
    let system = build_system(&w);
    reject_csv(cli)?;
    match cli.format {
        Format::Json => println!("{}", system.to_json()),
        Format::Text => {
            print!("{}", bar_diagram(&w));
            println!();
            match system.solve() {
                Some(alpha) => {
                    for (r, value) in alpha.values().iter().enumerate() {
                        println!("a{} = {}", r + 1, value);
                    }
                    println!("solution: {alpha}");
                }
                None => {
                    for r in 1..w.n() {
                        println!("a{r} = \u{2205}");
                    }
                    println!("infeasible");
                }
            }
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(0)
}

fn cmd_grassmannian(shape: &str, rect: &str, cli: &Cli) -> Result<i32, String> {
    let (rows, width) = parse_rect(rect)?;
    let parts = parse_parts(shape)?;
    let partition = RectPartition::from_parts(rows, width, &parts).map_err(|e| e.to_string())?;
    let v = partition.to_permutation();
    let gorenstein = is_gorenstein(&v);
    // a Grassmannian Schubert variety is smooth exactly when the partition's
    // complement in the rectangle is a rectangle, i.e. at most one corner
    let smooth = partition.inner_corners().len() <= 1;
    let frak = partition.frak_i();
    reject_csv(cli)?;
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "rectangle": [rows, width],
                "partition": partition.parts(),
                "permutation": v,
                "corner_distances": partition.corner_distances(),
                "frak_i": frak.value(),
                "gorenstein": gorenstein,
                "smooth": smooth,
            })
        ),
        Format::Text => {
            println!("rectangle: {rows} x {width}");
            println!(
                "partition: ({})",
                partition
                    .parts()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("permutation: {v}");
            println!(
                "corner distances: ({})",
                partition
                    .corner_distances()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            match frak.value() {
                Some(d) => println!("frak_i: {d}"),
                None => println!("frak_i: mixed"),
            }
            println!("gorenstein: {gorenstein}");
            println!("smooth: {smooth}");
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(if gorenstein { 0 } else { 1 })
}

fn cmd_coset(perm: &str, blocks: &str, cli: &Cli) -> Result<i32, String> {
    let w = parse_perm(perm)?;
    let sizes = parse_blocks(blocks)?;
    let composition = Composition::from_block_sizes(&sizes).map_err(|e| e.to_string())?;
    let representative = min_coset_rep(&w, &composition).map_err(|e| e.to_string())?;
    if cli.oracle {
        oracle_check(&representative)?;
    }
    let report = classify(&representative);
    let wrapped = serde_json::json!({
        "coset_of": w,
        "blocks": sizes,
        "report": report.to_json(),
    });
    let headers = vec![format!("coset of: {w}"), format!("blocks: {blocks}")];
    emit_report(&report, cli, Some(wrapped), &headers)
}

fn cmd_embed_matrix(perm: &str, cli: &Cli) -> Result<i32, String> {
    let v = parse_perm(perm)?;
    let w = matrix_schubert_embed(&v);
    if cli.oracle {
        oracle_check(&w)?;
    }
    let report = classify(&w);
    let wrapped = serde_json::json!({
        "v": v,
        "report": report.to_json(),
    });
    let headers = vec![format!("v: {v}")];
    emit_report(&report, cli, Some(wrapped), &headers)
}

fn parse_rect(text: &str) -> Result<(usize, usize), String> {
    let (rows, width) = text
        .split_once('x')
        .ok_or_else(|| format!("rectangle {text:?} must look like ROWSxWIDTH, e.g. 5x7"))?;
    let rows: usize = rows
        .trim()
        .parse()
        .map_err(|_| format!("{rows:?} is not a row count"))?;
    let width: usize = width
        .trim()
        .parse()
        .map_err(|_| format!("{width:?} is not a width"))?;
    if rows == 0 || width == 0 {
        return Err("the rectangle must have positive dimensions".to_string());
    }
    Ok((rows, width))
}

fn parse_parts(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("{part:?} is not a partition part"))
        })
        .collect()
}

fn parse_blocks(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|size| {
            size.trim()
                .parse::<usize>()
                .map_err(|_| format!("{size:?} is not a block size"))
        })
        .collect()
}
