use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use immuchess::board::default_board;
use immuchess::fen::parse_fen;
use immuchess::perft::{divide, perft};
use immuchess::pgn::{parse_pgn, replay, serialize_game, uci_string, GameResult, PgnGame};
use immuchess::Colour;

/// Validate PGN files, count perft nodes and round-trip games.
#[derive(Debug, Parser)]
#[command(name = "immuchess", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Replay every game in the given PGN files and report any illegal move.
    Validate {
        /// Print the board after every ply.
        #[arg(long, short)]
        verbose: bool,
        /// Treat a result tag that contradicts the final position as an error.
        #[arg(long)]
        strict: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Count leaf nodes of the legal move tree.
    Perft {
        #[arg(long, short, allow_negative_numbers = true)]
        depth: i64,
        /// Start from this FEN instead of the initial position.
        #[arg(long)]
        fen: Option<String>,
        /// Print the node count below each root move.
        #[arg(long)]
        divide: bool,
    },
    /// Parse, replay and re-serialize a PGN file, writing `<stem>.out.pgn`.
    Roundtrip { file: PathBuf },
}

/// Exit status for a run that found problems in its input.
const EXIT_INVALID: u8 = 1;
/// Exit status for a file that could not be read or written.
const EXIT_IO: u8 = 2;

struct Style {
    enabled: bool,
}

impl Style {
    fn detect() -> Style {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style {
            enabled: !no_color && io::stdout().is_terminal(),
        }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.enabled {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn ok(&self, text: &str) -> String {
        self.paint("32", text)
    }

    fn warn(&self, text: &str) -> String {
        self.paint("33", text)
    }

    fn error(&self, text: &str) -> String {
        self.paint("31", text)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style::detect();
    match cli.command {
        Command::Validate {
            verbose,
            strict,
            files,
        } => validate(&files, verbose, strict, &style),
        Command::Perft { depth, fen, divide } => run_perft(depth, fen.as_deref(), divide),
        Command::Roundtrip { file } => roundtrip(&file),
    }
}

fn describe(game: &PgnGame) -> String {
    let tag = |name| game.tag(name).unwrap_or("?");
    format!(
        "{} vs {}, {} {}",
        tag("White"),
        tag("Black"),
        tag("Event"),
        tag("Date")
    )
}

fn validate(files: &[PathBuf], verbose: bool, strict: bool, style: &Style) -> ExitCode {
    let mut io_failed = false;
    let mut invalid = false;
    let mut out = io::stdout().lock();
    for path in files {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                io_failed = true;
                continue;
            }
        };
        let games = match parse_pgn(&text) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{}: {} {e}", path.display(), style.error("parse error:"));
                invalid = true;
                continue;
            }
        };
        for (i, game) in games.iter().enumerate() {
            let label = format!("{} #{} [{}]", path.display(), i + 1, describe(game));
            let played = match replay(game) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(out, "{label}: {} at {e}", style.error("error"));
                    invalid = true;
                    continue;
                }
            };
            if verbose {
                for (ply, (token, pos)) in game.tokens.iter().zip(&played.positions).enumerate() {
                    let _ = writeln!(out, "ply {} {token}\n{}", ply + 1, pos.board().board_state());
                }
            }
            let engine = GameResult::from_winner(played.winner);
            let contradicts = played.winner.is_some() && engine != game.result;
            let plies = played.moves.len();
            if contradicts {
                let note = format!(
                    "final position is {} but the result is {}",
                    engine.as_str(),
                    game.result.as_str()
                );
                if strict {
                    let _ = writeln!(out, "{label}: {} {note}", style.error("error"));
                    invalid = true;
                } else {
                    let _ = writeln!(out, "{label}: {} ({plies} plies), {} {note}", style.ok("ok"), style.warn("warning:"));
                }
            } else {
                let _ = writeln!(out, "{label}: {} ({plies} plies, {})", style.ok("ok"), game.result.as_str());
            }
        }
    }
    if io_failed {
        ExitCode::from(EXIT_IO)
    } else if invalid {
        ExitCode::from(EXIT_INVALID)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_perft(depth: i64, fen: Option<&str>, split: bool) -> ExitCode {
    let Ok(depth) = u32::try_from(depth) else {
        eprintln!("depth must be a non-negative integer, got {depth}");
        return ExitCode::from(EXIT_INVALID);
    };
    let (board, side) = match fen {
        None => (default_board(), Colour::White),
        Some(f) => match parse_fen(f) {
            Ok(pos) => pos,
            Err(e) => {
                eprintln!("invalid FEN: {e}");
                return ExitCode::from(EXIT_INVALID);
            }
        },
    };
    if split && depth > 0 {
        let mut total = 0;
        for (mov, nodes) in divide(&board, side, depth) {
            println!("{}: {nodes}", uci_string(&mov));
            total += nodes;
        }
        println!("\ntotal: {total}");
    } else {
        println!("{}", perft(&board, side, depth));
    }
    ExitCode::SUCCESS
}

fn output_path(input: &Path) -> PathBuf {
    let stem = input.file_stem().unwrap_or_default().to_string_lossy();
    input.with_file_name(format!("{stem}.out.pgn"))
}

fn roundtrip(path: &Path) -> ExitCode {
    let fail = |stage: &str, detail: String| {
        eprintln!("{}: {stage} failed: {detail}", path.display());
        ExitCode::from(EXIT_INVALID)
    };
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(EXIT_IO);
        }
    };
    let games = match parse_pgn(&text) {
        Ok(g) => g,
        Err(e) => return fail("parse", e.to_string()),
    };
    let mut written = String::new();
    for (i, game) in games.iter().enumerate() {
        let played = match replay(game) {
            Ok(r) => r,
            Err(e) => return fail("replay", format!("game {}: {e}", i + 1)),
        };
        let pgn = match serialize_game(&game.tags, &played.moves, game.result) {
            Ok(s) => s,
            Err(e) => return fail("serialize", format!("game {}: {e}", i + 1)),
        };
        let again = match parse_pgn(&pgn) {
            Ok(g) => g,
            Err(e) => return fail("re-parse", format!("game {}: {e}", i + 1)),
        };
        if again.len() != 1 || again[0].tokens != game.tokens {
            return fail("compare", format!("game {}: move tokens differ", i + 1));
        }
        if !written.is_empty() {
            written.push('\n');
        }
        written.push_str(&pgn);
    }
    let out = output_path(path);
    if let Err(e) = fs::write(&out, written) {
        eprintln!("{}: {e}", out.display());
        return ExitCode::from(EXIT_IO);
    }
    println!("{} games round-tripped to {}", games.len(), out.display());
    ExitCode::SUCCESS
}
