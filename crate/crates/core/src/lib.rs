//! A chess rules engine built from immutable values.
//!
//! Pieces are plain `(type, square, colour)` triples, a board is a set of
//! pieces plus the list of moves that produced it, and every move returns a
//! new board. Castling rights and en passant are derived from the move
//! history rather than stored as flags.
//!
//! ```
//! use immuchess::game::{game_move, new_game};
//! use immuchess::pgn::{resolve_san, SanToken};
//!
//! let game = new_game();
//! let token: SanToken = "e4".parse().unwrap();
//! let mov = resolve_san(&token, &game).unwrap();
//! let (next, winner) = game_move(&game, mov).unwrap();
//! assert!(winner.is_none());
//! assert_eq!(next.board().history().len(), 1);
//! ```

pub mod board;
pub mod fen;
pub mod game;
pub mod perft;
pub mod pgn;
pub mod piece;

pub use board::{Board, BoardError, BoardState, History, Move};
pub use game::{Game, GameError, Winner};
pub use piece::{Colour, Coordinate, Piece, PieceType};
