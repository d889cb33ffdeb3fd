//! Minimal FEN import for loading test positions.
//!
//! Boards carry no castling or en passant flags; both are derived from the
//! move history. A FEN position is therefore turned into a board with a
//! short synthetic history that reproduces the FEN's rights: a rook step
//! off every corner whose castling right is absent, and a pawn double step
//! as the most recent move when an en passant square is given. Halfmove
//! and fullmove counters are accepted and ignored.

use thiserror::Error;

use crate::board::{Board, BoardError, BoardState, History, Move};
use crate::piece::{Colour, Coordinate, Piece, PieceType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FenError {
    #[error("missing {0} field")]
    MissingField(&'static str),
    #[error("bad piece placement: {0}")]
    BadPlacement(String),
    #[error("bad side to move {0:?}")]
    BadSide(String),
    #[error("bad castling field {0:?}")]
    BadCastling(String),
    #[error("bad en passant field {0:?}")]
    BadEnPassant(String),
    #[error(transparent)]
    Board(#[from] BoardError),
}

pub const STARTING_FEN: &str = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

fn piece_from_char(c: char) -> Option<(PieceType, Colour)> {
    let colour = if c.is_ascii_uppercase() {
        Colour::White
    } else {
        Colour::Black
    };
    let kind = match c.to_ascii_lowercase() {
        'p' => PieceType::Pawn,
        'r' => PieceType::Rook,
        'n' => PieceType::Knight,
        'b' => PieceType::Bishop,
        'q' => PieceType::Queen,
        'k' => PieceType::King,
        _ => return None,
    };
    Some((kind, colour))
}

fn parse_placement(field: &str) -> Result<Vec<Piece>, FenError> {
    let rows: Vec<&str> = field.split('/').collect();
    if rows.len() != 8 {
        return Err(FenError::BadPlacement(format!("expected 8 ranks, got {}", rows.len())));
    }
    let mut pieces = Vec::new();
    for (row, text) in rows.iter().enumerate() {
        let y = 8 - row as i32;
        let mut x = 1;
        for c in text.chars() {
            if let Some(skip) = c.to_digit(10).filter(|d| (1..=8).contains(d)) {
                x += skip as i32;
            } else {
                let (kind, colour) = piece_from_char(c)
                    .ok_or_else(|| FenError::BadPlacement(format!("unexpected {c:?}")))?;
                let square = Coordinate::new(x, y)
                    .ok_or_else(|| FenError::BadPlacement(format!("rank {y} overflows")))?;
                pieces.push(Piece::new(kind, square, colour));
                x += 1;
            }
            if x > 9 {
                return Err(FenError::BadPlacement(format!("rank {y} overflows")));
            }
        }
        if x != 9 {
            return Err(FenError::BadPlacement(format!("rank {y} has {} files", x - 1)));
        }
    }
    Ok(pieces)
}

fn corner(colour: Colour, kingside: bool) -> (Coordinate, Coordinate) {
    let rank = colour.home_rank() as i32;
    let (from, to) = if kingside { (8, 7) } else { (1, 2) };
    (
        Coordinate::new(from, rank).expect("on board"),
        Coordinate::new(to, rank).expect("on board"),
    )
}

/// Parses `placement side [castling [en-passant [halfmove fullmove]]]`.
pub fn parse_fen(fen: &str) -> Result<(Board, Colour), FenError> {
    let mut fields = fen.split_whitespace();
    let placement = fields.next().ok_or(FenError::MissingField("placement"))?;
    let side = fields.next().ok_or(FenError::MissingField("side to move"))?;
    let castling = fields.next().unwrap_or("-");
    let en_passant = fields.next().unwrap_or("-");

    let pieces = parse_placement(placement)?;
    let state = BoardState::new(pieces)?;
    let to_move = match side {
        "w" => Colour::White,
        "b" => Colour::Black,
        _ => return Err(FenError::BadSide(side.to_string())),
    };

    let mut rights = [[false; 2]; 2];
    if castling != "-" {
        for c in castling.chars() {
            let (colour, kingside) = match c {
                'K' => (Colour::White, true),
                'Q' => (Colour::White, false),
                'k' => (Colour::Black, true),
                'q' => (Colour::Black, false),
                _ => return Err(FenError::BadCastling(castling.to_string())),
            };
            rights[colour as usize][kingside as usize] = true;
        }
    }

    let mut newest_first = Vec::new();
    if en_passant != "-" {
        newest_first.push(double_push_for(&state, to_move, en_passant)?);
    }
    for colour in Colour::ALL {
        for kingside in [true, false] {
            if !rights[colour as usize][kingside as usize] {
                let (from, to) = corner(colour, kingside);
                let rook = Piece::new(PieceType::Rook, from, colour);
                newest_first.push(Move::new(rook, rook.with_square(to))?);
            }
        }
    }
    Ok((Board::new(state, History::from_newest_first(newest_first)), to_move))
}

fn double_push_for(state: &BoardState, to_move: Colour, field: &str) -> Result<Move, FenError> {
    let bad = || FenError::BadEnPassant(field.to_string());
    let mut chars = field.chars();
    let (Some(file), Some(rank), None) = (chars.next(), chars.next(), chars.next()) else {
        return Err(bad());
    };
    let x = ('a'..='h').position(|f| f == file).ok_or_else(bad)? as i32 + 1;
    let y = rank.to_digit(10).ok_or_else(bad)? as i32;
    let pusher = to_move.opposite();
    // The skipped square lies between the pusher's start rank and landing.
    let start = pusher.pawn_rank() as i32;
    if y != start + pusher.forward() {
        return Err(bad());
    }
    let from = Coordinate::new(x, start).ok_or_else(bad)?;
    let landing = Coordinate::new(x, y + pusher.forward()).ok_or_else(bad)?;
    let pawn = Piece::new(PieceType::Pawn, landing, pusher);
    if !state.contains(&pawn) || state.piece_at(from).is_some() {
        return Err(bad());
    }
    Ok(Move::new(pawn.with_square(from), pawn)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{castling_possible, default_board, legal_moves};

    #[test]
    fn starting_position_matches_default_board() {
        let (board, side) = parse_fen(STARTING_FEN).unwrap();
        assert_eq!(side, Colour::White);
        assert_eq!(board.board_state(), default_board().board_state());
        assert!(board.history().is_empty());
    }

    #[test]
    fn castling_rights_become_history() {
        let fen = "r3k2r/8/8/8/8/8/8/R3K2R w Kq - 0 1";
        let (board, _) = parse_fen(fen).unwrap();
        let king = board.board_state().piece_at(Coordinate::new(5, 1).unwrap()).unwrap();
        let castles = castling_possible(&board, &king).unwrap();
        assert_eq!(castles.len(), 1);
        assert_eq!(castles[0].to().square.x(), 7);
        let bk = board.board_state().piece_at(Coordinate::new(5, 8).unwrap()).unwrap();
        let castles = castling_possible(&board, &bk).unwrap();
        assert_eq!(castles.len(), 1);
        assert_eq!(castles[0].to().square.x(), 3);
    }

    #[test]
    fn en_passant_square_becomes_last_move() {
        let fen = "4k3/8/8/3pP3/8/8/8/4K3 w - d6 0 2";
        let (board, side) = parse_fen(fen).unwrap();
        assert_eq!(side, Colour::White);
        let last = board.history().last_move().unwrap();
        assert_eq!(last.from().square, Coordinate::new(4, 7).unwrap());
        let ep = legal_moves(&board, Colour::White)
            .into_iter()
            .filter(|m| m.to().square == Coordinate::new(4, 6).unwrap())
            .count();
        assert_eq!(ep, 1);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_fen(""), Err(FenError::MissingField("placement")));
        assert_eq!(
            parse_fen("8/8/8/8/8/8/8/4K3"),
            Err(FenError::MissingField("side to move"))
        );
        assert!(matches!(parse_fen("8/8/8/8/8/8/8/4K4 w"), Err(FenError::BadPlacement(_))));
        assert!(matches!(parse_fen("8/8/8/8/8/8/4K3 w"), Err(FenError::BadPlacement(_))));
        assert!(matches!(parse_fen("8/8/8/8/8/8/8/4X3 w"), Err(FenError::BadPlacement(_))));
        assert!(matches!(parse_fen("8/8/8/8/8/8/8/4K3 x"), Err(FenError::BadSide(_))));
        assert!(matches!(parse_fen("8/8/8/8/8/8/8/4K3 w KX"), Err(FenError::BadCastling(_))));
        assert!(matches!(parse_fen("8/8/8/8/8/8/8/4K3 w - e3"), Err(FenError::BadEnPassant(_))));
        assert!(matches!(
            parse_fen("8/8/8/8/8/8/8/8 w"),
            Err(FenError::Board(BoardError::EmptyState))
        ));
    }
}
