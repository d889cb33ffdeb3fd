//! PGN text to [`PgnGame`] values.

use std::fmt;

use thiserror::Error;

use super::{GameResult, PgnGame, SanToken};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgnErrorKind {
    MalformedTag,
    UnterminatedComment,
    UnrecognizedToken,
    Variation,
    MissingResult,
    ResultTagMismatch,
}

impl fmt::Display for PgnErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PgnErrorKind::MalformedTag => "malformed tag pair",
            PgnErrorKind::UnterminatedComment => "unterminated comment",
            PgnErrorKind::UnrecognizedToken => "unrecognized token",
            PgnErrorKind::Variation => "recursive variations are not supported",
            PgnErrorKind::MissingResult => "game has no result marker",
            PgnErrorKind::ResultTagMismatch => "result marker disagrees with the Result tag",
        })
    }
}

/// A syntax error with the 1-based position of the offending lexeme.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind} at {lexeme:?}")]
pub struct PgnError {
    pub line: usize,
    pub column: usize,
    pub lexeme: String,
    pub kind: PgnErrorKind,
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Scanner {
    fn new(text: &str) -> Scanner {
        let text = text.strip_prefix('\u{feff}').unwrap_or(text);
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn mark(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn error(&self, at: (usize, usize), lexeme: impl Into<String>, kind: PgnErrorKind) -> PgnError {
        PgnError {
            line: at.0,
            column: at.1,
            lexeme: lexeme.into(),
            kind,
        }
    }

    fn skip_line(&mut self) {
        while let Some(c) = self.bump() {
            if c == '\n' {
                break;
            }
        }
    }

    /// Skips whitespace, `{}` and `;` comments, and `%` escape lines.
    fn skip_trivia(&mut self) -> Result<(), PgnError> {
        while let Some(c) = self.peek() {
            match c {
                c if c.is_whitespace() => {
                    self.bump();
                }
                ';' => self.skip_line(),
                '%' if self.column == 1 => self.skip_line(),
                '{' => {
                    let start = self.mark();
                    self.bump();
                    loop {
                        match self.bump() {
                            Some('}') => break,
                            Some(_) => {}
                            None => {
                                return Err(self.error(start, "{", PgnErrorKind::UnterminatedComment))
                            }
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(())
    }

    fn take_while(&mut self, mut keep: impl FnMut(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|&c| keep(c)) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn tag_pair(&mut self) -> Result<(String, String), PgnError> {
        let start = self.mark();
        let bad = |s: &Scanner, lexeme: String| s.error(start, lexeme, PgnErrorKind::MalformedTag);
        self.bump(); // '['
        self.take_while(|c| c == ' ' || c == '\t');
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            let rest = self.take_while(|c| c != '\n');
            return Err(bad(self, format!("[{rest}")));
        }
        self.take_while(|c| c == ' ' || c == '\t');
        if self.peek() != Some('"') {
            let rest = self.take_while(|c| c != '\n');
            return Err(bad(self, format!("[{name} {rest}")));
        }
        self.bump();
        let mut value = String::new();
        loop {
            match self.bump() {
                Some('"') => break,
                Some('\\') => match self.bump() {
                    Some(c @ ('"' | '\\')) => value.push(c),
                    Some(c) => {
                        value.push('\\');
                        value.push(c);
                    }
                    None => return Err(bad(self, format!("[{name} \"{value}"))),
                },
                Some('\n') | None => return Err(bad(self, format!("[{name} \"{value}"))),
                Some(c) => value.push(c),
            }
        }
        self.take_while(|c| c == ' ' || c == '\t');
        if self.bump() != Some(']') {
            return Err(bad(self, format!("[{name} \"{value}\"")));
        }
        Ok((name, value))
    }
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || "{}()[];$".contains(c)
}

enum Symbol {
    Result(GameResult),
    San(SanToken),
    Skip,
}

fn classify(symbol: &str) -> Option<Symbol> {
    if let Some(r) = GameResult::parse(symbol) {
        return Some(Symbol::Result(r));
    }
    if symbol.chars().all(|c| c == '.') || symbol.chars().all(|c| c == '!' || c == '?') {
        return Some(Symbol::Skip);
    }
    let mut rest = symbol;
    if symbol.starts_with(|c: char| c.is_ascii_digit()) && !symbol.starts_with("0-0") {
        // Move number, optionally glued to the move: `12.`, `12...`, `12.Nf3`.
        rest = symbol.trim_start_matches(|c: char| c.is_ascii_digit());
        let dotted = rest.trim_start_matches('.');
        if dotted.len() == rest.len() && !rest.is_empty() {
            return None;
        }
        rest = dotted;
        if rest.is_empty() {
            return Some(Symbol::Skip);
        }
    }
    rest.parse().ok().map(Symbol::San)
}

/// Parses every game in `text`. Comments, numeric annotation glyphs and
/// move-suffix annotations are dropped.
pub fn parse_pgn(text: &str) -> Result<Vec<PgnGame>, PgnError> {
    let mut s = Scanner::new(text);
    let mut games = Vec::new();
    loop {
        s.skip_trivia()?;
        if s.peek().is_none() {
            return Ok(games);
        }
        games.push(parse_game(&mut s)?);
    }
}

fn parse_game(s: &mut Scanner) -> Result<PgnGame, PgnError> {
    let mut tags = Vec::new();
    while s.peek() == Some('[') {
        tags.push(s.tag_pair()?);
        s.skip_trivia()?;
    }

    let mut tokens = Vec::new();
    let result = loop {
        s.skip_trivia()?;
        let at = s.mark();
        let Some(c) = s.peek() else {
            return Err(s.error(at, "", PgnErrorKind::MissingResult));
        };
        match c {
            '(' => return Err(s.error(at, "(", PgnErrorKind::Variation)),
            '[' => {
                let lexeme = s.take_while(|c| c != '\n');
                return Err(s.error(at, lexeme, PgnErrorKind::MissingResult));
            }
            '$' => {
                s.bump();
                if s.take_while(|c| c.is_ascii_digit()).is_empty() {
                    return Err(s.error(at, "$", PgnErrorKind::UnrecognizedToken));
                }
            }
            ')' | '}' => {
                s.bump();
                return Err(s.error(at, c.to_string(), PgnErrorKind::UnrecognizedToken));
            }
            _ => {
                let symbol = s.take_while(|c| !is_delimiter(c));
                match classify(&symbol) {
                    Some(Symbol::Result(r)) => break r,
                    Some(Symbol::San(t)) => tokens.push(t),
                    Some(Symbol::Skip) => {}
                    None => return Err(s.error(at, symbol, PgnErrorKind::UnrecognizedToken)),
                }
            }
        }
    };

    let game = PgnGame {
        tags,
        tokens,
        result,
    };
    if let Some(tagged) = game.tag("Result").and_then(GameResult::parse) {
        if tagged != result {
            return Err(s.error(s.mark(), result.as_str(), PgnErrorKind::ResultTagMismatch));
        }
    }
    Ok(game)
}
