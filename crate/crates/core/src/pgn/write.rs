use thiserror::Error;

use super::{move_to_san_token, GameResult, SanError};
use crate::board::Move;
use crate::game::{game_move, new_game, GameError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SerializeError {
    #[error("ply {ply}: {source}")]
    San { ply: usize, source: SanError },
    #[error("ply {ply}: {source}")]
    Game { ply: usize, source: GameError },
    #[error("ply {0}: the game was already over")]
    GameOver(usize),
}

/// The seven tag roster, in export order.
const ROSTER: [(&str, &str); 7] = [
    ("Event", "?"),
    ("Site", "?"),
    ("Date", "????.??.??"),
    ("Round", "?"),
    ("White", "?"),
    ("Black", "?"),
    ("Result", "*"),
];

const LINE_WIDTH: usize = 79;

fn escape(value: &str) -> String {
    value.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Writes one game in export format: the seven tag roster first (missing
/// tags filled with placeholders, `Result` taken from `result`), any other
/// tags in their given order, then numbered movetext ending in the result.
pub fn serialize_game(
    tags: &[(String, String)],
    moves: &[Move],
    result: GameResult,
) -> Result<String, SerializeError> {
    let mut out = String::new();
    for (name, default) in ROSTER {
        let value = if name == "Result" {
            result.as_str()
        } else {
            tags.iter()
                .find(|(n, _)| n == name)
                .map_or(default, |(_, v)| v.as_str())
        };
        out.push_str(&format!("[{name} \"{}\"]\n", escape(value)));
    }
    for (name, value) in tags {
        if !ROSTER.iter().any(|(n, _)| n == name) {
            out.push_str(&format!("[{name} \"{}\"]\n", escape(value)));
        }
    }
    out.push('\n');

    let mut words = Vec::with_capacity(moves.len() * 3 / 2 + 1);
    let mut game = new_game();
    let mut over = false;
    for (i, mov) in moves.iter().enumerate() {
        let ply = i + 1;
        if over {
            return Err(SerializeError::GameOver(ply));
        }
        let token = move_to_san_token(mov, &game).map_err(|source| SerializeError::San { ply, source })?;
        if i % 2 == 0 {
            words.push(format!("{}.", i / 2 + 1));
        }
        words.push(token.to_string());
        let (next, winner) = game_move(&game, *mov).map_err(|source| SerializeError::Game { ply, source })?;
        game = next;
        over = winner.is_some();
    }
    words.push(result.as_str().to_string());

    let mut line_len = 0;
    for word in words {
        if line_len > 0 && line_len + 1 + word.len() > LINE_WIDTH {
            out.push('\n');
            line_len = 0;
        } else if line_len > 0 {
            out.push(' ');
            line_len += 1;
        }
        out.push_str(&word);
        line_len += word.len();
    }
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgn::{parse_pgn, replay};

    #[test]
    fn empty_game() {
        let text = serialize_game(&[], &[], GameResult::Unknown).unwrap();
        assert_eq!(
            text,
            "[Event \"?\"]\n[Site \"?\"]\n[Date \"????.??.??\"]\n[Round \"?\"]\n[White \"?\"]\n[Black \"?\"]\n[Result \"*\"]\n\n*\n"
        );
    }

    #[test]
    fn fools_mate_movetext() {
        let game = &parse_pgn("1. f3 e5 2. g4 Qh4# 0-1").unwrap()[0];
        let moves = replay(game).unwrap().moves;
        let tags = vec![("White".to_string(), "Fool".to_string()), ("ECO".to_string(), "A00".to_string())];
        let text = serialize_game(&tags, &moves, GameResult::BlackWins).unwrap();
        assert!(text.ends_with("\n\n1. f3 e5 2. g4 Qh4# 0-1\n"));
        assert!(text.contains("[White \"Fool\"]\n[Black \"?\"]\n[Result \"0-1\"]\n[ECO \"A00\"]\n"));
        let again = &parse_pgn(&text).unwrap()[0];
        assert_eq!(again.tokens, game.tokens);
    }

    #[test]
    fn wraps_long_movetext() {
        let text = "1. Nf3 Nf6 2. Ng1 Ng8 3. Nf3 Nf6 4. Ng1 Ng8 5. Nf3 Nf6 6. Ng1 Ng8 7. Nf3 Nf6 8. Ng1 Ng8 9. Nf3 Nf6 10. Ng1 Ng8 *";
        let game = &parse_pgn(text).unwrap()[0];
        let moves = replay(game).unwrap().moves;
        let out = serialize_game(&[], &moves, GameResult::Unknown).unwrap();
        assert!(out.lines().all(|l| l.len() <= LINE_WIDTH));
        assert_eq!(parse_pgn(&out).unwrap()[0].tokens, game.tokens);
    }

    #[test]
    fn rejects_unreplayable_moves() {
        let game = &parse_pgn("1. e4 e5 *").unwrap()[0];
        let moves = replay(game).unwrap().moves;
        let err = serialize_game(&[], &moves[1..], GameResult::Unknown).unwrap_err();
        assert!(matches!(err, SerializeError::San { ply: 1, .. }));
    }
}
