//! Turn order and end-of-game detection.

use std::fmt;

use thiserror::Error;

use crate::board::{self, Board, BoardError, Move};
use crate::piece::Colour;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("it is {turn}'s turn, but the move is by {mover}")]
    WrongTurn { turn: Colour, mover: Colour },
    #[error(transparent)]
    Board(#[from] BoardError),
}

/// How a finished game ended. An ongoing game has no winner, which is
/// represented as `Option<Winner>::None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Winner {
    Player(Colour),
    Remis,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::Player(c) => write!(f, "{c} wins"),
            Winner::Remis => f.write_str("remis"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Game {
    board: Board,
    turn: Colour,
}

impl Game {
    pub fn new(board: Board, turn: Colour) -> Game {
        Game { board, turn }
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn turn(&self) -> Colour {
        self.turn
    }

    /// Legal moves for the side to move.
    pub fn legal_moves(&self) -> Vec<Move> {
        board::legal_moves(&self.board, self.turn)
    }
}

impl Default for Game {
    fn default() -> Game {
        new_game()
    }
}

/// The initial position, white to move.
pub fn new_game() -> Game {
    Game::new(board::default_board(), Colour::White)
}

/// The outcome if `to_move` has to move on `board` now, or `None` while it
/// still has a legal move.
pub fn outcome(board: &Board, to_move: Colour) -> Option<Winner> {
    if board::has_legal_move(board, to_move) {
        return None;
    }
    let checked = board
        .board_state()
        .king(to_move)
        .is_some_and(|k| board::is_square_attacked(board.board_state(), k, to_move.opposite()));
    Some(if checked {
        Winner::Player(to_move.opposite())
    } else {
        Winner::Remis
    })
}

/// Plays `mov` for the side to move.
///
/// When the opponent is left without a legal move the game is over: the
/// winner is the mover on checkmate and [`Winner::Remis`] on stalemate, and
/// the returned game keeps the mover as the side to move next to the final
/// board. Otherwise the turn passes and the winner is `None`.
pub fn game_move(game: &Game, mov: Move) -> Result<(Game, Option<Winner>), GameError> {
    if mov.colour() != game.turn {
        return Err(GameError::WrongTurn {
            turn: game.turn,
            mover: mov.colour(),
        });
    }
    let new_board = board::make_move(&game.board, mov)?;
    let opponent = game.turn.opposite();
    match outcome(&new_board, opponent) {
        Some(winner) => Ok((Game::new(new_board, game.turn), Some(winner))),
        None => Ok((Game::new(new_board, opponent), None)),
    }
}
