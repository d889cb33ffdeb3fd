//! Portable Game Notation: parsing, move resolution and export.
//!
//! Parsing turns text into [`PgnGame`] values whose moves are
//! [`SanToken`]s. A token only becomes a [`Move`](crate::board::Move) when
//! it is resolved against a live [`Game`](crate::game::Game), since SAN
//! names a target square and leaves the origin to be inferred.

use std::collections::BTreeMap;
use std::fmt;

use crate::piece::{Coordinate, PieceType};

mod parse;
mod replay;
mod san;
mod write;

pub use parse::{parse_pgn, PgnError, PgnErrorKind};
pub use replay::{replay, Replay, ReplayError, ReplayErrorKind};
pub use san::{
    move_to_pgn_string, move_to_san_token, resolve_san, CheckMark, SanError, SanKind,
    SanParseError, SanToken,
};
pub use write::{serialize_game, SerializeError};

pub const FILE_CHARS: &str = "abcdefgh";
pub const RANK_CHARS: &str = "12345678";

const PIECE_LETTERS: [(PieceType, &str); 6] = [
    (PieceType::Pawn, ""),
    (PieceType::Rook, "R"),
    (PieceType::Knight, "N"),
    (PieceType::Bishop, "B"),
    (PieceType::Queen, "Q"),
    (PieceType::King, "K"),
];

/// The character tables used to read and write squares and pieces. Every
/// map is injective, so each can be inverted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMaps {
    pub files: BTreeMap<char, u8>,
    pub ranks: BTreeMap<char, u8>,
    pub pieces: BTreeMap<PieceType, &'static str>,
}

impl CharMaps {
    pub fn file_char(&self, x: u8) -> Option<char> {
        self.files.iter().find(|(_, &v)| v == x).map(|(&c, _)| c)
    }

    pub fn rank_char(&self, y: u8) -> Option<char> {
        self.ranks.iter().find(|(_, &v)| v == y).map(|(&c, _)| c)
    }

    pub fn piece_for_letter(&self, letter: &str) -> Option<PieceType> {
        self.pieces
            .iter()
            .find(|(_, &l)| l == letter)
            .map(|(&t, _)| t)
    }
}

pub fn char_maps() -> CharMaps {
    CharMaps {
        files: FILE_CHARS.chars().zip(1..).collect(),
        ranks: RANK_CHARS.chars().zip(1..).collect(),
        pieces: PIECE_LETTERS.into_iter().collect(),
    }
}

pub fn file_to_x(c: char) -> Option<u8> {
    FILE_CHARS.find(c).map(|i| i as u8 + 1)
}

pub fn rank_to_y(c: char) -> Option<u8> {
    RANK_CHARS.find(c).map(|i| i as u8 + 1)
}

/// Panics unless `x` is in `1..=8`.
pub fn x_to_file(x: u8) -> char {
    FILE_CHARS.as_bytes()[x as usize - 1] as char
}

/// Panics unless `y` is in `1..=8`.
pub fn y_to_rank(y: u8) -> char {
    RANK_CHARS.as_bytes()[y as usize - 1] as char
}

pub fn piece_letter(kind: PieceType) -> &'static str {
    PIECE_LETTERS
        .iter()
        .find(|(t, _)| *t == kind)
        .map(|(_, l)| *l)
        .expect("every type has a letter")
}

pub fn piece_for_letter(c: char) -> Option<PieceType> {
    match c {
        'R' => Some(PieceType::Rook),
        'N' => Some(PieceType::Knight),
        'B' => Some(PieceType::Bishop),
        'Q' => Some(PieceType::Queen),
        'K' => Some(PieceType::King),
        _ => None,
    }
}

/// `e4` style name of a square.
pub fn square_name(c: Coordinate) -> String {
    let mut s = String::with_capacity(2);
    s.push(x_to_file(c.x()));
    s.push(y_to_rank(c.y()));
    s
}

pub fn parse_square(s: &str) -> Option<Coordinate> {
    let mut chars = s.chars();
    let (Some(f), Some(r), None) = (chars.next(), chars.next(), chars.next()) else {
        return None;
    };
    Coordinate::new(file_to_x(f)? as i32, rank_to_y(r)? as i32)
}

/// Long algebraic `e2e4` / `e7e8q`, as used by perft divide listings.
pub fn uci_string(m: &crate::board::Move) -> String {
    let mut s = square_name(m.from().square);
    s.push_str(&square_name(m.to().square));
    if m.is_promotion() {
        s.push_str(&piece_letter(m.to().kind).to_ascii_lowercase());
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameResult {
    WhiteWins,
    BlackWins,
    Draw,
    Unknown,
}

impl GameResult {
    pub fn as_str(self) -> &'static str {
        match self {
            GameResult::WhiteWins => "1-0",
            GameResult::BlackWins => "0-1",
            GameResult::Draw => "1/2-1/2",
            GameResult::Unknown => "*",
        }
    }

    pub fn parse(s: &str) -> Option<GameResult> {
        match s {
            "1-0" => Some(GameResult::WhiteWins),
            "0-1" => Some(GameResult::BlackWins),
            "1/2-1/2" => Some(GameResult::Draw),
            "*" => Some(GameResult::Unknown),
            _ => None,
        }
    }

    /// The result a finished game implies; `None` (still ongoing) maps to
    /// [`GameResult::Unknown`].
    pub fn from_winner(winner: Option<crate::game::Winner>) -> GameResult {
        use crate::game::Winner;
        use crate::piece::Colour;
        match winner {
            Some(Winner::Player(Colour::White)) => GameResult::WhiteWins,
            Some(Winner::Player(Colour::Black)) => GameResult::BlackWins,
            Some(Winner::Remis) => GameResult::Draw,
            None => GameResult::Unknown,
        }
    }
}

impl fmt::Display for GameResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One game as read from a PGN file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PgnGame {
    pub tags: Vec<(String, String)>,
    pub tokens: Vec<SanToken>,
    pub result: GameResult,
}

impl PgnGame {
    pub fn tag(&self, name: &str) -> Option<&str> {
        self.tags
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }
}
