//! Standard Algebraic Notation for single moves.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{file_to_x, parse_square, piece_for_letter, piece_letter, square_name, x_to_file, y_to_rank};
use crate::board::{self, Board, Move};
use crate::game::Game;
use crate::piece::{Colour, Coordinate, PieceType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SanKind {
    Normal,
    KingsideCastle,
    QueensideCastle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CheckMark {
    #[default]
    None,
    Check,
    Mate,
}

impl CheckMark {
    fn suffix(self) -> &'static str {
        match self {
            CheckMark::None => "",
            CheckMark::Check => "+",
            CheckMark::Mate => "#",
        }
    }
}

/// A parsed SAN move, not yet tied to a position.
///
/// `promotion` is only ever set for pawns and only to a promotable type.
/// Castles carry `PieceType::King` and no target square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SanToken {
    pub kind: SanKind,
    pub piece: PieceType,
    pub target: Option<Coordinate>,
    pub capture: bool,
    pub promotion: Option<PieceType>,
    pub file: Option<u8>,
    pub rank: Option<u8>,
    pub check: CheckMark,
}

impl SanToken {
    fn castle(kind: SanKind, check: CheckMark) -> SanToken {
        SanToken {
            kind,
            piece: PieceType::King,
            target: None,
            capture: false,
            promotion: None,
            file: None,
            rank: None,
            check,
        }
    }

    /// The same token without origin hints.
    pub fn without_disambiguation(&self) -> SanToken {
        SanToken {
            file: if self.piece == PieceType::Pawn { self.file } else { None },
            rank: None,
            ..*self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid SAN {0:?}")]
pub struct SanParseError(pub String);

impl FromStr for SanToken {
    type Err = SanParseError;

    fn from_str(text: &str) -> Result<SanToken, SanParseError> {
        let err = || SanParseError(text.to_string());
        let mut s = text.trim_end_matches(['!', '?']);
        let check = if let Some(rest) = s.strip_suffix('#') {
            s = rest;
            CheckMark::Mate
        } else if let Some(rest) = s.strip_suffix('+') {
            s = rest;
            CheckMark::Check
        } else {
            CheckMark::None
        };

        match s {
            "O-O" | "0-0" => return Ok(SanToken::castle(SanKind::KingsideCastle, check)),
            "O-O-O" | "0-0-0" => return Ok(SanToken::castle(SanKind::QueensideCastle, check)),
            _ => {}
        }
        if !s.is_ascii() {
            return Err(err());
        }

        let (piece, mut body) = match s.chars().next().and_then(piece_for_letter) {
            Some(kind) => (kind, &s[1..]),
            None => (PieceType::Pawn, s),
        };

        let mut promotion = None;
        if let Some(last) = body.chars().last().and_then(piece_for_letter) {
            if piece != PieceType::Pawn || !last.is_promotable() {
                return Err(err());
            }
            promotion = Some(last);
            body = &body[..body.len() - 1];
            body = body.strip_suffix('=').unwrap_or(body);
        }

        if body.len() < 2 {
            return Err(err());
        }
        let target = parse_square(&body[body.len() - 2..]).ok_or_else(err)?;
        body = &body[..body.len() - 2];
        let capture = match body.strip_suffix('x') {
            Some(rest) => {
                body = rest;
                true
            }
            None => false,
        };

        let mut file = None;
        let mut rank = None;
        let mut hints = body.chars();
        match (hints.next(), hints.next(), hints.next()) {
            (None, _, _) => {}
            (Some(c), None, _) => {
                if let Some(x) = file_to_x(c) {
                    file = Some(x);
                } else if let Some(y) = super::rank_to_y(c) {
                    rank = Some(y);
                } else {
                    return Err(err());
                }
            }
            (Some(f), Some(r), None) => {
                file = Some(file_to_x(f).ok_or_else(err)?);
                rank = Some(super::rank_to_y(r).ok_or_else(err)?);
            }
            _ => return Err(err()),
        }

        if piece == PieceType::Pawn {
            // Pawn captures name the origin file; pushes name nothing.
            if rank.is_some() || file.is_some() != capture {
                return Err(err());
            }
            if promotion.is_some() != (target.y() == 1 || target.y() == 8) {
                return Err(err());
            }
        }

        Ok(SanToken {
            kind: SanKind::Normal,
            piece,
            target: Some(target),
            capture,
            promotion,
            file,
            rank,
            check,
        })
    }
}

impl fmt::Display for SanToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SanKind::KingsideCastle => f.write_str("O-O")?,
            SanKind::QueensideCastle => f.write_str("O-O-O")?,
            SanKind::Normal => {
                f.write_str(piece_letter(self.piece))?;
                if let Some(x) = self.file {
                    write!(f, "{}", x_to_file(x))?;
                }
                if let Some(y) = self.rank {
                    write!(f, "{}", y_to_rank(y))?;
                }
                if self.capture {
                    f.write_str("x")?;
                }
                if let Some(t) = self.target {
                    f.write_str(&square_name(t))?;
                }
                if let Some(p) = self.promotion {
                    write!(f, "={}", piece_letter(p))?;
                }
            }
        }
        f.write_str(self.check.suffix())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SanError {
    #[error("{0} does not match a legal move")]
    Illegal(String),
    #[error("{san} is ambiguous: {candidates} legal moves match")]
    Ambiguous { san: String, candidates: usize },
    #[error("{san} claims {claimed:?} but the position after it has {actual:?}")]
    CheckMarkMismatch {
        san: String,
        claimed: CheckMark,
        actual: CheckMark,
    },
    #[error("{0} is not a legal move for the side to move")]
    NotLegal(Move),
}

fn is_capture(board: &Board, m: &Move) -> bool {
    board.board_state().obstacles().is_occupied(m.to().square) || board::iss_en_passant(board, m)
}

fn matches(token: &SanToken, board: &Board, m: &Move) -> bool {
    let (from, to) = (m.from(), m.to());
    match token.kind {
        SanKind::KingsideCastle | SanKind::QueensideCastle => {
            let kingside = token.kind == SanKind::KingsideCastle;
            board::iss_castling(board, m) && (to.square.x() > from.square.x()) == kingside
        }
        SanKind::Normal => {
            from.kind == token.piece
                && Some(to.square) == token.target
                && to.kind == token.promotion.unwrap_or(from.kind)
                && token.file.is_none_or(|x| from.square.x() == x)
                && token.rank.is_none_or(|y| from.square.y() == y)
                && is_capture(board, m) == token.capture
                && !(token.piece == PieceType::King && board::iss_castling(board, m))
        }
    }
}

/// The check mark a move deserves in the position it creates.
fn check_mark_after(board: &Board, mover: Colour) -> CheckMark {
    let opponent = mover.opposite();
    let state = board.board_state();
    let checked = state
        .king(opponent)
        .is_some_and(|k| board::is_square_attacked(state, k, mover));
    if !checked {
        CheckMark::None
    } else if board::has_legal_move(board, opponent) {
        CheckMark::Check
    } else {
        CheckMark::Mate
    }
}

/// Finds the unique legal move of the side to move that `token` denotes. A
/// `+` or `#` on the token must hold in the resulting position.
pub fn resolve_san(token: &SanToken, game: &Game) -> Result<Move, SanError> {
    let board = game.board();
    let mut candidates = game
        .legal_moves()
        .into_iter()
        .filter(|m| matches(token, board, m));
    let Some(found) = candidates.next() else {
        return Err(SanError::Illegal(token.to_string()));
    };
    let extra = candidates.count();
    if extra > 0 {
        return Err(SanError::Ambiguous {
            san: token.to_string(),
            candidates: extra + 1,
        });
    }
    if token.check != CheckMark::None {
        let actual = check_mark_after(&board::apply_unchecked(board, found), game.turn());
        let holds = match token.check {
            CheckMark::Check => actual != CheckMark::None,
            _ => actual == CheckMark::Mate,
        };
        if !holds {
            return Err(SanError::CheckMarkMismatch {
                san: token.to_string(),
                claimed: token.check,
                actual,
            });
        }
    }
    Ok(found)
}

/// The minimal SAN token for a legal move.
pub fn move_to_san_token(mov: &Move, game: &Game) -> Result<SanToken, SanError> {
    let legal = game.legal_moves();
    if mov.colour() != game.turn() || !legal.contains(mov) {
        return Err(SanError::NotLegal(*mov));
    }
    let board = game.board();
    let check = check_mark_after(&board::apply_unchecked(board, *mov), game.turn());

    if board::iss_castling(board, mov) {
        let kind = if mov.to().square.x() > mov.from().square.x() {
            SanKind::KingsideCastle
        } else {
            SanKind::QueensideCastle
        };
        return Ok(SanToken::castle(kind, check));
    }

    let from = mov.from();
    let capture = is_capture(board, mov);
    let (mut file, mut rank) = (None, None);
    if from.kind == PieceType::Pawn {
        if capture {
            file = Some(from.square.x());
        }
    } else {
        let rivals: Vec<Coordinate> = legal
            .iter()
            .filter(|m| {
                m.from().kind == from.kind
                    && m.to().square == mov.to().square
                    && m.from().square != from.square
            })
            .map(|m| m.from().square)
            .collect();
        if !rivals.is_empty() {
            if rivals.iter().all(|s| s.x() != from.square.x()) {
                file = Some(from.square.x());
            } else if rivals.iter().all(|s| s.y() != from.square.y()) {
                rank = Some(from.square.y());
            } else {
                file = Some(from.square.x());
                rank = Some(from.square.y());
            }
        }
    }

    Ok(SanToken {
        kind: SanKind::Normal,
        piece: from.kind,
        target: Some(mov.to().square),
        capture,
        promotion: mov.is_promotion().then_some(mov.to().kind),
        file,
        rank,
        check,
    })
}

/// Minimal SAN text for a legal move, e.g. `Nbd7`, `exd5`, `e8=Q+`, `O-O`.
pub fn move_to_pgn_string(mov: &Move, game: &Game) -> Result<String, SanError> {
    move_to_san_token(mov, game).map(|t| t.to_string())
}
