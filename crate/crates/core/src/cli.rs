//! Command-line front end behind the `monster` binary.
//!
//! Exit status is 0 on success, 1 on a domain error (rendered in the chosen
//! output format) and 2 on a usage error (reported on the diagnostic stream).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::charts::{self, Chart, CoordinateName};
use crate::codeword::{self, CodeWord, MultiplicityVector};
use crate::counting;
use crate::error::{Error, Violation};
use crate::rvt;
use crate::strata;
use crate::trees::{self, IncreasingTree};

/// Which subcommand exposes each library operation.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("codeword::validate", "validate"),
    ("codeword::multiplicities", "validate"),
    ("codeword::from_multiplicities", "validate"),
    ("codeword::parse", "validate"),
    ("codeword::format", "validate"),
    ("codeword::enumerate", "enumerate"),
    ("rvt::validate_rvt", "translate"),
    ("rvt::rvt_to_subscript", "translate"),
    ("rvt::subscript_to_rvt", "translate"),
    ("strata::locus", "validate"),
    ("strata::codimension", "dims"),
    ("strata::ambient_dimension", "dims"),
    ("strata::stratum_dimension", "dims"),
    ("strata::contains", "poset"),
    ("strata::excision_set", "poset"),
    ("strata::hasse", "poset"),
    ("charts::shortest_name", "equations"),
    ("charts::coordinate_table", "equations"),
    ("charts::meets", "equations"),
    ("charts::equations", "equations"),
    ("charts::witness_chart", "witness"),
    ("counting::count_table", "count"),
    ("counting::count", "count"),
    ("counting::stirling_first", "count"),
    ("trees::word_to_tree", "tree"),
    ("trees::tree_to_word", "tree"),
    ("trees::enumerate_trees", "tree"),
];

#[derive(Debug, Parser)]
#[command(name = "monster", version, about = "Strata, charts and counts for the monster tower")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format.
    #[arg(short = 'f', long = "format", value_enum, default_value = "text")]
    pub format: Format,
    /// Write to FILE instead of standard output.
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a code word, or rebuild one from multiplicities, and describe its locus.
    Validate {
        #[arg(short = 'm', long = "dimension")]
        m: u32,
        #[arg(short = 'w', long = "word", conflicts_with = "counts")]
        word: Option<String>,
        /// Word length, used with --counts.
        #[arg(short = 'k', long = "level", requires = "counts")]
        k: Option<usize>,
        /// Comma-separated n_2,...,n_k.
        #[arg(long = "counts", requires = "k")]
        counts: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Stream every valid word of one length.
    Enumerate {
        #[arg(short = 'k', long = "level")]
        k: usize,
        #[arg(short = 'm', long = "dimension")]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Count words with the N(k, r) recurrence.
    Count {
        #[arg(short = 'k', long = "level")]
        k: usize,
        #[arg(short = 'm', long = "dimension", required_unless_present = "stirling")]
        m: Option<u32>,
        /// Print unsigned Stirling numbers c(k, j), j = 0..=k, instead.
        #[arg(long)]
        stirling: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Translate between RVT words and subscript words (m = 3).
    Translate {
        #[arg(short = 'm', long = "dimension", default_value_t = 3)]
        m: u32,
        #[arg(short = 'w', long = "word", required_unless_present = "rvt", conflicts_with = "rvt")]
        word: Option<String>,
        #[arg(long)]
        rvt: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Stratification poset, excision set of a word, or a containment query.
    Poset {
        #[arg(short = 'k', long = "level", required_unless_present = "word")]
        k: Option<usize>,
        #[arg(short = 'm', long = "dimension")]
        m: u32,
        /// Print the excision set of WORD instead of the whole poset.
        #[arg(short = 'w', long = "word", conflicts_with = "k")]
        word: Option<String>,
        /// With --word: does the locus of WORD contain the locus of OTHER?
        #[arg(long, requires = "word", value_name = "OTHER")]
        contains: Option<String>,
        /// Largest poset to build.
        #[arg(long, default_value_t = strata::DEFAULT_NODE_LIMIT)]
        limit: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Equations of a locus in a chart, or the chart's coordinate names.
    Equations {
        #[arg(short = 'm', long = "dimension")]
        m: u32,
        #[arg(short = 'c', long = "chart", required_unless_present = "name")]
        chart: Option<String>,
        #[arg(short = 'w', long = "word", requires = "chart")]
        word: Option<String>,
        /// With --word: only report whether the locus meets the chart.
        #[arg(long, requires = "word")]
        meets: bool,
        /// Canonicalize a coordinate name such as x2(32).
        #[arg(long, conflicts_with_all = ["chart", "word"])]
        name: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Greedy chart meeting the locus of a word.
    Witness {
        #[arg(short = 'm', long = "dimension")]
        m: u32,
        #[arg(short = 'w', long = "word")]
        word: String,
        #[command(flatten)]
        out: Output,
    },
    /// Word to increasing tree, tree to word, or all trees of a size.
    Tree {
        #[arg(short = 'm', long = "dimension")]
        m: Option<u32>,
        #[arg(short = 'w', long = "word", conflicts_with_all = ["tree", "k"])]
        word: Option<String>,
        /// Parent list "0,1,0" or {"k":..,"parent":[..]}.
        #[arg(short = 't', long = "tree", conflicts_with = "k")]
        tree: Option<String>,
        #[arg(short = 'k', long = "level")]
        k: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Ambient dimension of M(k) and, given a word, its stratum dimension.
    Dims {
        #[arg(short = 'k', long = "level", required_unless_present = "word")]
        k: Option<usize>,
        #[arg(short = 'm', long = "dimension")]
        m: u32,
        #[arg(short = 'w', long = "word")]
        word: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Enumerate { .. } => "enumerate",
            Command::Count { .. } => "count",
            Command::Translate { .. } => "translate",
            Command::Poset { .. } => "poset",
            Command::Equations { .. } => "equations",
            Command::Witness { .. } => "witness",
            Command::Tree { .. } => "tree",
            Command::Dims { .. } => "dims",
        }
    }

    fn output(&self) -> &Output {
        match self {
            Command::Validate { out, .. }
            | Command::Enumerate { out, .. }
            | Command::Count { out, .. }
            | Command::Translate { out, .. }
            | Command::Poset { out, .. }
            | Command::Equations { out, .. }
            | Command::Witness { out, .. }
            | Command::Tree { out, .. }
            | Command::Dims { out, .. } => out,
        }
    }

    fn allows_dot(&self) -> bool {
        match self {
            Command::Poset { word, .. } => word.is_none(),
            Command::Tree { .. } => true,
            _ => false,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                2
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
                0
            };
        }
    };
    execute(&cli.command, stdout, stderr)
}

pub fn execute(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let out = command.output();
    if out.format == Format::Dot && !command.allows_dot() {
        let _ = writeln!(stderr, "error: --format dot is only available for poset and tree");
        return 2;
    }
    let mut file;
    let sink: &mut dyn Write = match &out.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot open {}: {e}", path.display());
                return 2;
            }
        },
        None => stdout,
    };
    let status = match dispatch(command, out.format, sink) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => match render_error(&e, out.format, sink) {
            Ok(()) => 1,
            Err(io) => {
                let _ = writeln!(stderr, "error: {io}");
                1
            }
        },
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    };
    if let Err(e) = sink.flush() {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }
    status
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidWord(_) => "invalid_word",
        Error::DimensionTooSmall { .. } => "dimension_too_small",
        Error::EmptyWord => "empty_word",
        Error::SubscriptTooSmall { .. } => "subscript_too_small",
        Error::SubscriptsNotIncreasing => "subscripts_not_increasing",
        Error::Syntax { .. } => "syntax",
        Error::MultiplicityOutOfRange { .. } => "multiplicity_out_of_range",
        Error::MultiplicityIndex { .. } => "multiplicity_index",
        Error::Occupancy { .. } => "occupancy",
        Error::InvalidRvt { .. } | Error::RvtFirstNotR { .. } => "invalid_rvt",
        Error::RvtDimension { .. } => "rvt_dimension",
        Error::LengthMismatch { .. } => "length_mismatch",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::ChartLevelOutOfRange { .. } => "chart_level_out_of_range",
        Error::CoordinateOutOfRange { .. } => "coordinate_out_of_range",
        Error::DoesNotMeetChart => "does_not_meet_chart",
        Error::InvalidTree { .. } | Error::EmptyTree => "invalid_tree",
        Error::TooManyNodes { .. } => "too_many_nodes",
        Error::Json(_) => "json",
    }
}

fn violation_json(v: &Violation) -> Value {
    json!({"rule": v.rule(), "position": v.position(), "message": v.to_string()})
}

fn render_error(e: &Error, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let mut body = json!({"kind": error_kind(e), "message": e.to_string()});
            match e {
                Error::InvalidWord(vs) => {
                    body["violations"] = vs.0.iter().map(violation_json).collect();
                }
                Error::Syntax { offset, .. } => body["offset"] = json!(offset),
                _ => {}
            }
            writeln!(sink, "{}", json!({ "error": body }))
        }
        Format::Text | Format::Dot => match e {
            Error::InvalidWord(vs) => {
                for v in &vs.0 {
                    writeln!(sink, "invalid: {v}")?;
                }
                Ok(())
            }
            other => writeln!(sink, "error: {other}"),
        },
    }
}

fn word(text: &str, m: u32) -> Result<CodeWord, Error> {
    codeword::parse(text, m)
}

fn parse_counts(text: &str) -> Result<Vec<usize>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("invalid multiplicity list {text:?}")))
        })
        .collect()
}

fn emit_json(sink: &mut dyn Write, value: &Value) -> Outcome {
    writeln!(sink, "{value}")?;
    Ok(())
}

fn dispatch(command: &Command, format: Format, sink: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { m, word: text, k, counts, .. } => {
            let w = match (text, k, counts) {
                (Some(text), _, _) => word(text, *m)?,
                (None, Some(k), Some(counts)) => {
                    let v = MultiplicityVector::from_counts(*k, &parse_counts(counts)?)?;
                    codeword::from_multiplicities(&v, *m)?
                }
                _ => return Err(Failure::Usage("validate needs --word or --level with --counts".into())),
            };
            let n = w.multiplicities();
            let locus = strata::locus(&w);
            match format {
                Format::Json => emit_json(
                    sink,
                    &json!({
                        "valid": true,
                        "word": w.to_json(),
                        "text": codeword::format(&w),
                        "multiplicities": n.as_slice(),
                        "locus": locus.factors,
                        "codimension": locus.codimension(),
                    }),
                ),
                _ => {
                    writeln!(sink, "valid: {}", codeword::format(&w))?;
                    let counts = n.iter().map(|(j, c)| format!("n{j}={c}")).join(" ");
                    writeln!(sink, "multiplicities: {counts}")?;
                    writeln!(sink, "locus: {locus}")?;
                    writeln!(sink, "codimension: {}", locus.codimension())?;
                    Ok(())
                }
            }
        }
        Command::Enumerate { k, m, .. } => {
            for w in codeword::enumerate(*k, *m)? {
                match format {
                    Format::Json => writeln!(sink, "{}", w.to_json())?,
                    _ => writeln!(sink, "{}", codeword::format(&w))?,
                }
            }
            Ok(())
        }
        Command::Count { k, m, stirling, .. } => {
            if *stirling {
                let values: Vec<String> = (0..=*k).map(|j| counting::stirling_first(*k, j).to_string()).collect();
                return match format {
                    Format::Json => emit_json(sink, &json!({"n": k, "c": values})),
                    _ => {
                        writeln!(sink, "{}", values.join(" "))?;
                        Ok(())
                    }
                };
            }
            let m = m.ok_or_else(|| Failure::Usage("count needs --dimension".into()))?;
            let table = counting::count_table(*k, m)?;
            match format {
                Format::Json => emit_json(sink, &table.to_json()),
                _ => {
                    writeln!(sink, "{}", table.total())?;
                    Ok(())
                }
            }
        }
        Command::Translate { m, word: text, rvt: rvt_text, .. } => {
            if *m != 3 {
                return Err(Error::RvtDimension { m: *m }.into());
            }
            match (text, rvt_text) {
                (Some(text), None) => {
                    let r = rvt::subscript_to_rvt(&word(text, *m)?)?;
                    match format {
                        Format::Json => emit_json(sink, &r.to_json()),
                        _ => Ok(writeln!(sink, "{r}")?),
                    }
                }
                (None, Some(rvt_text)) => {
                    let w = rvt::rvt_to_subscript(&rvt::parse_rvt(rvt_text)?);
                    match format {
                        Format::Json => emit_json(sink, &w.to_json()),
                        _ => Ok(writeln!(sink, "{}", codeword::format(&w))?),
                    }
                }
                _ => Err(Failure::Usage("translate needs exactly one of --word or --rvt".into())),
            }
        }
        Command::Poset { k, m, word: text, contains, limit, .. } => {
            if let Some(text) = text {
                let w = word(text, *m)?;
                if let Some(other) = contains {
                    let answer = strata::contains(&w, &word(other, *m)?)?;
                    return match format {
                        Format::Json => emit_json(sink, &json!({ "contains": answer })),
                        _ => Ok(writeln!(sink, "{answer}")?),
                    };
                }
                let set = strata::excision_set(&w);
                return match format {
                    Format::Json => {
                        let items: Vec<Value> = set
                            .iter()
                            .map(|x| json!({"word": codeword::format(x), "locus": strata::locus(x).factors}))
                            .collect();
                        emit_json(sink, &Value::Array(items))
                    }
                    _ => {
                        for x in &set {
                            writeln!(sink, "{}\t{}", codeword::format(x), strata::locus(x))?;
                        }
                        Ok(())
                    }
                };
            }
            let k = k.ok_or_else(|| Failure::Usage("poset needs --level or --word".into()))?;
            let poset = strata::hasse_with_limit(k, *m, *limit)?;
            match format {
                Format::Json => emit_json(sink, &poset.to_json()),
                Format::Dot => Ok(sink.write_all(poset.to_dot().as_bytes())?),
                Format::Text => {
                    for (i, w) in poset.nodes().iter().enumerate() {
                        writeln!(sink, "{i}\t{}", codeword::format(w))?;
                    }
                    for (a, b) in poset.covers() {
                        writeln!(sink, "{a} -> {b}")?;
                    }
                    Ok(())
                }
            }
        }
        Command::Equations { m, chart, word: text, meets, name, .. } => {
            if let Some(name) = name {
                let parsed: CoordinateName = name.parse()?;
                if parsed.q < 1 || parsed.q > *m {
                    return Err(Error::CoordinateOutOfRange { q: parsed.q, m: *m }.into());
                }
                let short = charts::shortest_name(&parsed);
                return match format {
                    Format::Json => emit_json(sink, &json!(short)),
                    _ => Ok(writeln!(sink, "{short}")?),
                };
            }
            let chart_text = chart.as_deref().ok_or_else(|| Failure::Usage("equations needs --chart".into()))?;
            let chart = Chart::parse(chart_text, *m)?;
            let Some(text) = text else {
                let table = charts::coordinate_table(&chart);
                return match format {
                    Format::Json => {
                        let rows: Vec<Vec<Value>> = table
                            .rows
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .map(|e| json!({"name": e.name, "shortest": e.shortest, "retained": e.retained}))
                                    .collect()
                            })
                            .collect();
                        emit_json(
                            sink,
                            &json!({"rows": rows, "distinct": table.distinct_coordinates().len()}),
                        )
                    }
                    _ => Ok(sink.write_all(table.render().as_bytes())?),
                };
            };
            let w = word(text, *m)?;
            if *meets {
                let answer = charts::meets(&w, &chart)?;
                return match format {
                    Format::Json => emit_json(sink, &json!({ "meets": answer })),
                    _ => Ok(writeln!(sink, "{answer}")?),
                };
            }
            let eqs = charts::equations(&w, &chart)?;
            match format {
                Format::Json => emit_json(sink, &json!(eqs)),
                _ => Ok(sink.write_all(charts::render_equations(&eqs).as_bytes())?),
            }
        }
        Command::Witness { m, word: text, .. } => {
            let w = word(text, *m)?;
            let chart = charts::witness_chart(&w);
            match format {
                Format::Json => emit_json(sink, &json!({"m": m, "chart": chart.levels()})),
                _ => Ok(writeln!(sink, "{chart}")?),
            }
        }
        Command::Tree { m, word: text, tree, k, .. } => match (text, tree, k) {
            (Some(text), None, None) => {
                let m = m.ok_or_else(|| Failure::Usage("tree --word needs --dimension".into()))?;
                let t = trees::word_to_tree(&word(text, m)?);
                write_tree(&t, format, sink)
            }
            (None, Some(tree_text), None) => {
                let t: IncreasingTree = tree_text.parse()?;
                let m = m.unwrap_or((t.k() as u32).max(2));
                let w = trees::tree_to_word(&t, m)?;
                match format {
                    Format::Json => emit_json(sink, &w.to_json()),
                    Format::Dot => Err(Failure::Usage("tree --tree produces a word; use text or json".into())),
                    Format::Text => Ok(writeln!(sink, "{}", codeword::format(&w))?),
                }
            }
            (None, None, Some(k)) => {
                for t in trees::enumerate_trees(*k)? {
                    write_tree(&t, format, sink)?;
                }
                Ok(())
            }
            _ => Err(Failure::Usage("tree needs exactly one of --word, --tree or --level".into())),
        },
        Command::Dims { k, m, word: text, .. } => {
            let w = text.as_deref().map(|t| word(t, *m)).transpose()?;
            let level = match (&w, k) {
                (Some(w), Some(k)) if w.len() != *k => {
                    return Err(Error::LengthMismatch { left: *k, right: w.len() }.into());
                }
                (Some(w), _) => w.len(),
                (None, Some(k)) => *k,
                (None, None) => return Err(Failure::Usage("dims needs --level or --word".into())),
            };
            if *m < 2 {
                return Err(Error::DimensionTooSmall { m: *m }.into());
            }
            let ambient = strata::ambient_dimension(level, *m);
            match (format, &w) {
                (Format::Json, None) => emit_json(sink, &json!({"k": level, "m": m, "ambient": ambient})),
                (Format::Json, Some(w)) => emit_json(
                    sink,
                    &json!({
                        "k": level,
                        "m": m,
                        "ambient": ambient,
                        "codimension": strata::codimension(w),
                        "stratum": strata::stratum_dimension(w),
                    }),
                ),
                (_, None) => Ok(writeln!(sink, "ambient: {ambient}")?),
                (_, Some(w)) => {
                    writeln!(sink, "ambient: {ambient}")?;
                    writeln!(sink, "codimension: {}", strata::codimension(w))?;
                    writeln!(sink, "stratum: {}", strata::stratum_dimension(w))?;
                    Ok(())
                }
            }
        }
    }
}

fn write_tree(t: &IncreasingTree, format: Format, sink: &mut dyn Write) -> Outcome {
    match format {
        Format::Json => emit_json(sink, &t.to_json()),
        Format::Dot => Ok(sink.write_all(t.to_dot().as_bytes())?),
        Format::Text => Ok(writeln!(sink, "{t}")?),
    }
}
