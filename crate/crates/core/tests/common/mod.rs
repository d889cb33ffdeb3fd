#![allow(dead_code)]

pub mod oracle;

use std::collections::{BTreeSet, HashMap, HashSet};

use immuchess::board::{legal_moves, Board, BoardState, History, Move};
use immuchess::{Colour, Coordinate, Piece, PieceType};
use rand::Rng;

use oracle::{Kind, OracleBoard, OracleMove, Sq};

pub fn sq(x: i32, y: i32) -> Coordinate {
    Coordinate::new(x, y).unwrap()
}

fn to_kind(t: PieceType) -> Kind {
    match t {
        PieceType::Pawn => Kind::P,
        PieceType::Knight => Kind::N,
        PieceType::Bishop => Kind::B,
        PieceType::Rook => Kind::R,
        PieceType::Queen => Kind::Q,
        PieceType::King => Kind::K,
    }
}

fn to_type(k: Kind) -> PieceType {
    match k {
        Kind::P => PieceType::Pawn,
        Kind::N => PieceType::Knight,
        Kind::B => PieceType::Bishop,
        Kind::R => PieceType::Rook,
        Kind::Q => PieceType::Queen,
        Kind::K => PieceType::King,
    }
}

fn pos(c: Coordinate) -> Sq {
    (c.x() as i32, c.y() as i32)
}

pub fn engine_moves(board: &Board, side: Colour) -> BTreeSet<OracleMove> {
    legal_moves(board, side)
        .iter()
        .map(|m| (pos(m.from().square), pos(m.to().square), to_kind(m.to().kind)))
        .collect()
}

/// A position in both representations, built from the same data.
pub struct Fixture {
    pub board: Board,
    pub side: Colour,
    pub oracle: OracleBoard,
}

fn colour(white: bool) -> Colour {
    if white {
        Colour::White
    } else {
        Colour::Black
    }
}

/// `history` is oldest first.
pub fn fixture(cells: &HashMap<Sq, (Kind, bool)>, white_to_move: bool, history: &[(Sq, Sq, Kind, bool)]) -> Fixture {
    let state = BoardState::new(
        cells
            .iter()
            .map(|(&(x, y), &(k, w))| Piece::new(to_type(k), sq(x, y), colour(w))),
    )
    .unwrap();
    let moves: Vec<Move> = history
        .iter()
        .rev()
        .map(|&(f, t, k, w)| {
            let p = Piece::new(to_type(k), sq(f.0, f.1), colour(w));
            Move::new(p, p.with_square(sq(t.0, t.1))).unwrap()
        })
        .collect();
    let touched: HashSet<Sq> = history.iter().flat_map(|&(f, t, _, _)| [f, t]).collect();
    Fixture {
        board: Board::new(state, History::from_newest_first(moves)),
        side: colour(white_to_move),
        oracle: OracleBoard {
            cells: cells.clone(),
            white_to_move,
            touched,
            last: history.last().map(|&(f, t, k, _)| (f, t, k)),
        },
    }
}

/// A random legal-looking position with both kings and at most six pieces.
/// The side not to move is never in check. Kings and rooks are often put on
/// their home squares so castling comes up, and the last move is sometimes
/// a double pawn step that can be taken en passant.
pub fn random_small_position<R: Rng>(rng: &mut R) -> Fixture {
    loop {
        let mut cells: HashMap<Sq, (Kind, bool)> = HashMap::new();
        let place = |rng: &mut R, kind: Kind, white: bool, cells: &mut HashMap<Sq, (Kind, bool)>| loop {
            let s = (rng.random_range(1..=8), rng.random_range(1..=8));
            if kind == Kind::P && (s.1 == 1 || s.1 == 8) {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = cells.entry(s) {
                e.insert((kind, white));
                return;
            }
        };
        for white in [true, false] {
            let rank = if white { 1 } else { 8 };
            if rng.random_bool(0.4) {
                cells.insert((5, rank), (Kind::K, white));
                for corner in [1, 8] {
                    if rng.random_bool(0.5) && cells.len() < 6 {
                        cells.insert((corner, rank), (Kind::R, white));
                    }
                }
            } else {
                place(rng, Kind::K, white, &mut cells);
            }
        }
        let extra = rng.random_range(0..=6 - cells.len());
        for _ in 0..extra {
            let kind = [Kind::P, Kind::P, Kind::N, Kind::B, Kind::R, Kind::Q][rng.random_range(0..6)];
            let white = rng.random_bool(0.5);
            place(rng, kind, white, &mut cells);
        }
        let white_to_move = rng.random_bool(0.5);

        let mut history = Vec::new();
        // Occasionally strip castling rights by touching a corner.
        for (x, y) in [(1, 1), (8, 1), (1, 8), (8, 8)] {
            if rng.random_bool(0.15) {
                let w = y == 1;
                history.push(((x, y), (x, if w { 2 } else { 7 }), Kind::R, w));
            }
        }
        // A double step by the side that just moved, if one fits.
        let pusher = !white_to_move;
        let (start, landing) = if pusher { (2, 4) } else { (7, 5) };
        let candidates: Vec<Sq> = cells
            .iter()
            .filter(|(&(x, y), &(k, w))| {
                k == Kind::P
                    && w == pusher
                    && y == landing
                    && !cells.contains_key(&(x, start))
                    && !cells.contains_key(&(x, (start + landing) / 2))
            })
            .map(|(&s, _)| s)
            .collect();
        if !candidates.is_empty() && rng.random_bool(0.7) {
            let s = candidates[rng.random_range(0..candidates.len())];
            history.push(((s.0, start), s, Kind::P, pusher));
        }

        let oracle = OracleBoard {
            cells: cells.clone(),
            white_to_move,
            touched: HashSet::new(),
            last: None,
        };
        if oracle.in_check(!white_to_move) {
            continue;
        }
        return fixture(&cells, white_to_move, &history);
    }
}
