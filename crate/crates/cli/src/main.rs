use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use melograph::cluster::{distance_matrix, upgma, WindowPolicy};
use melograph::enumerate::{census, family, rank, RankedMelody};
use melograph::frechet::{dfd_melody, mean_difference_hint, tdfd, Window, DEFAULT_WINDOW_RADIUS};
use melograph::numeric::format_rational;
use melograph::symmetry::detect_symmetry;
use melograph::{corpus, export, io, slope, tables, Melody};

const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;

/// Slope, symmetry and transposed Fréchet analysis of melodies.
///
/// FILE is a line-delimited JSON melody file, or one of the bundled sets
/// `@anthems`, `@rows`, `@examples`.
#[derive(Parser)]
#[command(name = "melograph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Melody file, or @anthems / @rows / @examples
    file: String,
    /// Stop at the first malformed record instead of skipping it
    #[arg(long)]
    fail_fast: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact least-squares slope of each melody
    Slope(Input),
    /// M-graph points, or a DOT digraph with --dot
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
        /// Annotate the axis of symmetry when one exists
        #[arg(long)]
        axis: bool,
        /// Only this melody
        #[arg(long)]
        name: Option<String>,
    },
    /// Reflective symmetry report per melody
    Symmetry(Input),
    /// Discrete Fréchet distance and an optimal coupling
    Dfd {
        #[command(flatten)]
        input: Input,
        a: String,
        b: String,
    },
    /// Fréchet distance of A against every transposition of B in a window
    Tdfd {
        #[command(flatten)]
        input: Input,
        a: String,
        b: String,
        /// Inclusive range LO..HI (default: rounded mean difference ± 12)
        #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
        window: Option<Window>,
    },
    /// Distance matrix (CSV) and group-average merge trace
    Cluster {
        #[command(flatten)]
        input: Input,
        /// `hint`, `hint:RADIUS`, or `fixed:LO..HI`
        #[arg(long, default_value = "hint", allow_hyphen_values = true, value_parser = parse_policy)]
        window_policy: WindowPolicy,
    },
    /// Rank and count slopes over all orderings of a pitch set
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        first: i64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        set: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        top: usize,
        #[arg(long, default_value_t = 3)]
        decimals: u32,
    },
    /// Regenerate every reproducible table as CSV
    Tables {
        #[arg(long, default_value = "tables")]
        out: PathBuf,
    },
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo = lo
        .trim()
        .parse::<i64>()
        .map_err(|e| format!("bad LO: {e}"))?;
    let hi = hi
        .trim()
        .parse::<i64>()
        .map_err(|e| format!("bad HI: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok(Window::new(lo, hi))
}

fn parse_policy(s: &str) -> Result<WindowPolicy, String> {
    match s.split_once(':') {
        None if s == "hint" => Ok(WindowPolicy::MeanHint {
            radius: DEFAULT_WINDOW_RADIUS,
        }),
        Some(("hint", r)) => r
            .parse::<i64>()
            .ok()
            .filter(|r| *r >= 0)
            .map(|radius| WindowPolicy::MeanHint { radius })
            .ok_or_else(|| format!("bad radius {r:?}")),
        Some(("fixed", w)) => parse_window(w).map(WindowPolicy::Fixed),
        _ => Err(format!(
            "expected hint, hint:RADIUS or fixed:LO..HI, got {s:?}"
        )),
    }
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<melograph::Error> for Failure {
    fn from(e: melograph::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn load(input: &Input) -> Result<Vec<Melody>, Failure> {
    let bundled = match input.file.as_str() {
        "@anthems" => Some(corpus::anthems()),
        "@rows" => Some(corpus::rows()),
        "@examples" => Some(corpus::examples()),
        _ => None,
    };
    if let Some(ms) = bundled {
        return Ok(ms);
    }
    if input.file.starts_with('@') {
        return Err(Failure::Usage(format!(
            "unknown bundled set {}",
            input.file
        )));
    }
    let parsed = io::parse_melody_file(&input.file, input.fail_fast)?;
    for d in &parsed.diagnostics {
        eprintln!("warning: {}: {d}", input.file);
    }
    Ok(parsed.melodies)
}

fn pick<'a>(ms: &'a [Melody], name: &str) -> Result<&'a Melody, Failure> {
    corpus::find(ms, name).ok_or_else(|| Failure::Usage(format!("unknown melody name {name:?}")))
}

fn run(cli: Cli, out: &mut impl Write) -> CmdResult {
    match cli.command {
        Command::Slope(input) => {
            writeln!(out, "name\tmelody\tslope\tvalue\tsign").ok();
            for m in load(&input)? {
                match slope::slope_of_melody(&m) {
                    Ok(s) => writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        m.label(),
                        m,
                        s,
                        s.display(3),
                        s.sign().as_str()
                    ),
                    Err(e) => writeln!(out, "{}\t{}\tundefined\t-\t{}", m.label(), m, e),
                }
                .ok();
            }
        }
        Command::Graph {
            input,
            dot,
            axis,
            name,
        } => {
            let ms = load(&input)?;
            let selected: Vec<&Melody> = match &name {
                Some(n) => vec![pick(&ms, n)?],
                None => ms.iter().collect(),
            };
            for m in selected {
                let line = if axis {
                    detect_symmetry(m).ok().and_then(|r| r.axis().copied())
                } else {
                    None
                };
                if dot {
                    write!(out, "{}", export::to_dot(m, line.as_ref())?).ok();
                } else {
                    let g = m.m_graph()?;
                    let pts: Vec<String> = g.points().iter().map(|p| p.to_string()).collect();
                    write!(out, "{}\t{}", m.label(), pts.join(" ")).ok();
                    if let Some(l) = line {
                        write!(out, "\taxis: {l}").ok();
                    }
                    writeln!(out).ok();
                }
            }
        }
        Command::Symmetry(input) => {
            writeln!(out, "name\tmelody\tsymmetric\tcase\taxis").ok();
            for m in load(&input)? {
                match detect_symmetry(&m) {
                    Ok(r) => writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        m.label(),
                        m,
                        r.is_symmetric(),
                        r.case().map_or("-", |c| c.as_str()),
                        r.axis().map_or("-".to_string(), |l| l.to_string()),
                    ),
                    Err(e) => writeln!(out, "{}\t{}\tunsupported\t-\t{}", m.label(), m, e),
                }
                .ok();
            }
        }
        Command::Dfd { input, a, b } => {
            let ms = load(&input)?;
            let (ma, mb) = (pick(&ms, &a)?, pick(&ms, &b)?);
            let r = dfd_melody(ma, mb)?;
            writeln!(out, "distance\t{}", r.display(3)).ok();
            writeln!(out, "squared\t{}", r.squared_distance).ok();
            writeln!(out, "coupling\t{}", r.coupling).ok();
            let (pa, pb) = (ma.m_graph()?, mb.m_graph()?);
            for &(i, j) in r.coupling.pairs() {
                let (p, q) = (pa.points()[i - 1], pb.points()[j - 1]);
                writeln!(
                    out,
                    "p{i} {p}\tq{j} {q}\t{}",
                    melograph::numeric::format_sqrt(p.squared_distance(q), 3)
                )
                .ok();
            }
        }
        Command::Tdfd {
            input,
            a,
            b,
            window,
        } => {
            let ms = load(&input)?;
            let (ma, mb) = (pick(&ms, &a)?, pick(&ms, &b)?);
            let hint = mean_difference_hint(ma, mb)?;
            let r = tdfd(ma, mb, window)?;
            writeln!(
                out,
                "# window {}  mean difference {}",
                r.window,
                format_rational(&hint, 3)
            )
            .ok();
            writeln!(out, "t,distance").ok();
            for row in &r.per_t {
                writeln!(out, "{},{}", row.t, row.display(3)).ok();
            }
            writeln!(out, "# minimum t={} distance={}", r.t_star, r.display(3)).ok();
        }
        Command::Cluster {
            input,
            window_policy,
        } => {
            let ms = load(&input)?;
            let dm = distance_matrix(&ms, window_policy)?;
            write!(out, "{}", dm.to_csv(3)).ok();
            writeln!(out).ok();
            write!(out, "{}", upgma(&dm)).ok();
        }
        Command::Enumerate {
            first,
            set,
            top,
            decimals,
        } => {
            let f = family(first, &set)?;
            let r = rank(&f, top.min(f.len()))?;
            let print = |out: &mut dyn Write, title: &str, rows: &[RankedMelody], sign: &str| {
                writeln!(out, "# {title}").ok();
                writeln!(out, "ranking,melody,slope").ok();
                for e in rows {
                    writeln!(
                        out,
                        "{sign}{},\"{}\",{}",
                        e.rank,
                        e.melody,
                        e.slope.display(decimals)
                    )
                    .ok();
                }
            };
            print(out, "largest slopes", &r.top, "");
            print(out, "smallest slopes", &r.bottom, "-");
            let c = census(&f)?;
            writeln!(out, "# census").ok();
            writeln!(out, "positive,negative,zero").ok();
            writeln!(out, "{},{},{}", c.positive, c.negative, c.zero).ok();
        }
        Command::Tables { out: dir } => {
            let written = tables::write_tables(&dir)?;
            for t in written {
                writeln!(out, "{}", dir.join(t.file_name).display()).ok();
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(EXIT_DATA)
        }
    }
}
