//! Performance test: counts the leaf nodes of the legal move tree.
//!
//! See <https://www.chessprogramming.org/Perft>. Root moves are searched in
//! parallel; the totals do not depend on scheduling.

use rayon::prelude::*;

use crate::board::{apply_unchecked, legal_moves, Board, Move};
use crate::piece::Colour;

/// Number of legal move sequences of exactly `depth` plies.
pub fn perft(board: &Board, to_move: Colour, depth: u32) -> u64 {
    if depth == 0 {
        return 1;
    }
    divide(board, to_move, depth).iter().map(|(_, n)| n).sum()
}

/// Leaf counts below each legal root move, in generation order.
pub fn divide(board: &Board, to_move: Colour, depth: u32) -> Vec<(Move, u64)> {
    if depth == 0 {
        return Vec::new();
    }
    legal_moves(board, to_move)
        .into_par_iter()
        .map(|m| {
            let child = apply_unchecked(board, m);
            (m, count(&child, to_move.opposite(), depth - 1))
        })
        .collect()
}

fn count(board: &Board, to_move: Colour, depth: u32) -> u64 {
    match depth {
        0 => 1,
        1 => legal_moves(board, to_move).len() as u64,
        _ => legal_moves(board, to_move)
            .into_iter()
            .map(|m| count(&apply_unchecked(board, m), to_move.opposite(), depth - 1))
            .sum(),
    }
}
