mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use obgenus::braid::BraidWord;
use obgenus::classify::{classify_dbc, classify_pants, obg_eval_with_book};
use obgenus::exactalg::{cokernel, smith_normal_form};
use obgenus::mcg::PantsMonodromy;
use obgenus::openbook::{dbc_open_book, AnnulusPlumbing, OpenBook};
use obgenus::Error;
use serde_json::json;

use report::Report;

/// Open books with small pages: classification, homology and open book genus.
#[derive(Parser, Debug)]
#[command(name = "obgenus", version)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Emit a short human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pair-of-pants open book with monodromy t1^r1 t2^r2 t3^r3.
    Pants {
        /// Exponents "r1,r2,r3".
        #[arg(allow_hyphen_values = true)]
        exponents: String,
    },
    /// Double branched cover of a braid closure.
    Dbc {
        /// Signed generator indices, e.g. "1 2 -1".
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, short = 'n')]
        strands: Option<usize>,
        /// Only report the lifted page and its genus bound (any strand count).
        #[arg(long)]
        page_only: bool,
    },
    /// Plumb pages: disk, annulus, pants, torus or g:b.
    Plumb {
        #[arg(required = true, num_args = 1.., value_delimiter = ',')]
        pages: Vec<String>,
        /// Page recorded when two annuli are plumbed.
        #[arg(long, value_enum, default_value_t = Annuli::Hopf)]
        annuli: Annuli,
    },
    /// Smith normal form of an integer matrix, "[[a,b],[c,d]]" or "a b; c d".
    Snf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Closure data, Burau matrix at t = -1 and determinant of a braid.
    BraidInfo {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, short = 'n')]
        strands: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Annuli {
    Hopf,
    Pants,
}

enum Failure {
    Usage(String),
    Input(Error),
    Domain(Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn to_json(&self) -> String {
        let (kind, message) = match self {
            Failure::Usage(m) => ("usage", m.clone()),
            Failure::Input(e) => ("parse", e.to_string()),
            Failure::Domain(e) => ("domain", e.to_string()),
        };
        json!({ "error": kind, "message": message }).to_string()
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::RaggedRows { .. }
            | Error::LetterOutOfRange { .. }
            | Error::NoStrands
            | Error::InvalidPage { .. } => Failure::Input(e),
            _ => Failure::Domain(e),
        }
    }
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Pants { exponents } => {
            let m: PantsMonodromy = exponents.parse()?;
            let book = OpenBook::pants(m);
            let class = classify_pants(&m);
            let obg = obg_eval_with_book(&class, &book);
            Ok(report::classification(json!(m.to_string()), None, &class, &obg))
        }
        Command::Dbc { word, strands, page_only } => {
            let w = BraidWord::parse(&word, strands)?;
            let input = json!({ "word": w.to_string(), "strands": w.strands() });
            let book = dbc_open_book(&w);
            if page_only {
                return Ok(report::page_only(input, &book));
            }
            let class = classify_dbc(&w)?;
            let obg = obg_eval_with_book(&class, &book);
            Ok(report::classification(input, Some(&book), &class, &obg))
        }
        Command::Plumb { pages, annuli } => {
            let books = pages.iter().map(|p| input::parse_page(p)).collect::<Result<Vec<_>, _>>()?;
            if books.len() < 2 {
                return Err(Failure::Usage("plumbing needs at least two pages".into()));
            }
            let model = match annuli {
                Annuli::Hopf => AnnulusPlumbing::HopfBand,
                Annuli::Pants => AnnulusPlumbing::Pants,
            };
            let result = books[1..].iter().fold(books[0].clone(), |acc, b| acc.plumb_with(b, model));
            let names: Vec<String> = pages.iter().map(|p| p.trim().to_string()).collect();
            Ok(report::plumbing(json!(names), &books, &result))
        }
        Command::Snf { matrix } => {
            let a = input::parse_matrix(&matrix)?;
            let snf = smith_normal_form(&a);
            Ok(report::smith(json!(a.to_string()), &snf, &cokernel(&a)))
        }
        Command::BraidInfo { word, strands } => {
            let w = BraidWord::parse(&word, strands)?;
            let input = json!({ "word": w.to_string(), "strands": w.strands() });
            Ok(report::braid_info(input, &w))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or_default().trim_start_matches("error: ");
            let f = Failure::Usage(first.to_string());
            eprintln!("{}", f.to_json());
            return ExitCode::from(f.code());
        }
    };
    match run(cli.command) {
        Ok(report) => {
            println!("{}", report.render(cli.pretty));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.to_json());
            ExitCode::from(f.code())
        }
    }
}
