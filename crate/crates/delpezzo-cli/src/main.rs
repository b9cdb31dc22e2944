//! `delpezzo`: command-line frontend for divisor-class arithmetic on the
//! quartic del Pezzo surface.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use delpezzo::lattice::DivisorClass;
use delpezzo::weyl::{ParseWordError, WeylWord};

mod render;
mod sweep;

#[derive(Parser)]
#[command(
    name = "delpezzo",
    version,
    about = "Divisor classes on the quartic del Pezzo surface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical invariants and criteria for one class
    Info {
        /// Class in canonical form, e.g. 3;1,1,1,1,1
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The 16 lines, with their incidence graph in DOT form
    Lines {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The 16 five-tuples of mutually skew lines
    Skew {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a word of generators to a class
    Cremona {
        /// Word such as q(1,2,3),p(2,1,3,4,5); empty for the identity
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Greedy re-marking of a class toward the very-ample normal form
    Normalize {
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Whether the class is (very) ample
    Ample {
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Whether the class contains an irreducible curve
    Irreducible {
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate every class with |a| ≤ B and |bᵢ| ≤ B
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

enum CliError {
    /// Malformed input text: exit code 2.
    Parse(String),
    /// Structurally valid input outside the domain: exit code 3.
    Domain(String),
    Io(io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parse(m) | CliError::Domain(m) => m.clone(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_class(text: &str) -> Result<DivisorClass, CliError> {
    text.parse::<DivisorClass>()
        .map_err(|e| CliError::Parse(e.to_string()))
}

fn parse_word(text: &str) -> Result<WeylWord, CliError> {
    text.parse::<WeylWord>().map_err(|e| match e {
        ParseWordError::Syntax { .. } => CliError::Parse(e.to_string()),
        ParseWordError::InvalidTriple { .. } | ParseWordError::InvalidPermutation { .. } => {
            CliError::Domain(e.to_string())
        }
    })
}

fn unsupported_format(command: &str, format: Format) -> CliError {
    CliError::Parse(format!("format {format:?} is not supported by `{command}`").to_lowercase())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Info { class, format } => {
            let class = parse_class(&class)?;
            match format {
                Format::Text => write!(out, "{}", render::info_text(class))?,
                Format::Json => writeln!(out, "{}", render::info_json(class))?,
                other => return Err(unsupported_format("info", other)),
            }
        }
        Command::Lines { format } => match format {
            Format::Text => write!(out, "{}", render::lines_text())?,
            Format::Json => writeln!(out, "{}", render::lines_json())?,
            Format::Dot => write!(out, "{}", render::lines_dot())?,
            other => return Err(unsupported_format("lines", other)),
        },
        Command::Skew { format } => match format {
            Format::Text => write!(out, "{}", render::skew_text())?,
            Format::Json => writeln!(out, "{}", render::skew_json())?,
            other => return Err(unsupported_format("skew", other)),
        },
        Command::Cremona {
            word,
            class,
            format,
        } => {
            let word = parse_word(&word)?;
            let class = parse_class(&class)?;
            let image = word.apply(class);
            match format {
                Format::Text => writeln!(out, "{image}")?,
                Format::Json => writeln!(out, "{}", render::class_json(image))?,
                other => return Err(unsupported_format("cremona", other)),
            }
        }
        Command::Normalize { class, format } => {
            let class = parse_class(&class)?;
            match format {
                Format::Text => write!(out, "{}", render::normalize_text(class))?,
                Format::Json => writeln!(out, "{}", render::normalize_json(class))?,
                other => return Err(unsupported_format("normalize", other)),
            }
        }
        Command::Ample { class, format } => {
            let class = parse_class(&class)?;
            let ample = delpezzo::is_very_ample(class);
            match format {
                Format::Text => writeln!(out, "{ample}")?,
                Format::Json => writeln!(out, "{}", render::ample_json(class, ample))?,
                other => return Err(unsupported_format("ample", other)),
            }
        }
        Command::Irreducible { class, format } => {
            let class = parse_class(&class)?;
            let verdict = delpezzo::contains_irreducible(class);
            match format {
                Format::Text => writeln!(out, "{verdict}")?,
                Format::Json => writeln!(out, "{}", render::verdict_json(verdict))?,
                other => return Err(unsupported_format("irreducible", other)),
            }
        }
        Command::Sweep { bound, format } => {
            if !(1..=6).contains(&bound) {
                return Err(CliError::Domain(format!(
                    "sweep bound {bound} outside the supported range 1..=6"
                )));
            }
            match format {
                Format::Csv => sweep::write_csv(bound, out)?,
                Format::Json => sweep::write_json(bound, out)?,
                other => return Err(unsupported_format("sweep", other)),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
