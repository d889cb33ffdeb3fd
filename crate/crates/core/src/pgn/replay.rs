use thiserror::Error;

use super::{resolve_san, PgnGame, SanError};
use crate::board::Move;
use crate::game::{game_move, new_game, Game, GameError, Winner};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayErrorKind {
    #[error(transparent)]
    San(#[from] SanError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("the game was already over")]
    GameOver,
}

/// A move that could not be played, numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ply {ply} ({san}): {kind}")]
pub struct ReplayError {
    pub ply: usize,
    pub san: String,
    pub kind: ReplayErrorKind,
}

/// A game played through the engine from the initial position.
#[derive(Debug, Clone)]
pub struct Replay {
    pub moves: Vec<Move>,
    /// The game after each ply.
    pub positions: Vec<Game>,
    pub winner: Option<Winner>,
}

impl Replay {
    pub fn final_game(&self) -> Game {
        self.positions.last().cloned().unwrap_or_else(new_game)
    }
}

pub fn replay(pgn: &PgnGame) -> Result<Replay, ReplayError> {
    let mut game = new_game();
    let mut winner = None;
    let mut moves = Vec::with_capacity(pgn.tokens.len());
    let mut positions = Vec::with_capacity(pgn.tokens.len());
    for (i, token) in pgn.tokens.iter().enumerate() {
        let fail = |kind: ReplayErrorKind| ReplayError {
            ply: i + 1,
            san: token.to_string(),
            kind,
        };
        if winner.is_some() {
            return Err(fail(ReplayErrorKind::GameOver));
        }
        let mov = resolve_san(token, &game).map_err(|e| fail(e.into()))?;
        let (next, w) = game_move(&game, mov).map_err(|e| fail(e.into()))?;
        moves.push(mov);
        positions.push(next.clone());
        game = next;
        winner = w;
    }
    Ok(Replay {
        moves,
        positions,
        winner,
    })
}
