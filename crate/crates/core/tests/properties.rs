mod common;

use std::collections::BTreeSet;

use immuchess::board::{
    attacked_squares, is_square_attacked, legal_moves, make_move, Board, BoardState, History, Move,
};
use immuchess::game::{game_move, new_game, Game};
use immuchess::pgn::{char_maps, move_to_san_token, resolve_san, SanError, SanToken, FILE_CHARS, RANK_CHARS};
use immuchess::piece::{
    knight_move_pattern, possible_moves_direction, type_based_moves, Obstacle, ObstacleSet,
    MAX_RAY_LENGTH, QUEEN_DIRECTIONS,
};
use immuchess::{Colour, Coordinate, Piece, PieceType};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::random_small_position;

fn square() -> impl Strategy<Value = Coordinate> {
    (0usize..64).prop_map(Coordinate::from_index)
}

fn colour() -> impl Strategy<Value = Colour> {
    prop_oneof![Just(Colour::White), Just(Colour::Black)]
}

fn kind() -> impl Strategy<Value = PieceType> {
    proptest::sample::select(PieceType::ALL.to_vec())
}

/// A piece and a scattering of other obstacles that never share its square.
fn piece_among_obstacles() -> impl Strategy<Value = (Piece, ObstacleSet)> {
    (
        kind(),
        square(),
        colour(),
        proptest::collection::btree_map(0usize..64, colour(), 0..24),
    )
        .prop_map(|(k, sq, c, others)| {
            let obstacles = others
                .into_iter()
                .map(|(i, colour)| Obstacle {
                    square: Coordinate::from_index(i),
                    colour,
                })
                .filter(|o| o.square != sq);
            (Piece::new(k, sq, c), ObstacleSet::from_obstacles(obstacles).unwrap())
        })
}

fn mirror_piece(p: Piece) -> Piece {
    Piece::new(p.kind, p.square.mirrored(), p.colour.opposite())
}

fn mirror_board(board: &Board) -> Board {
    let state = BoardState::new(board.board_state().pieces().map(mirror_piece)).unwrap();
    let history = History::from_newest_first(
        board
            .history()
            .iter()
            .map(|m| Move::new(mirror_piece(m.from()), mirror_piece(m.to())).unwrap())
            .collect::<Vec<_>>(),
    );
    Board::new(state, history)
}

/// Plays `plies` random legal moves from the initial position.
fn random_walk(seed: u64, plies: usize) -> Game {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut game = new_game();
    for _ in 0..plies {
        let moves = game.legal_moves();
        if moves.is_empty() {
            break;
        }
        let (next, winner) = game_move(&game, moves[rng.random_range(0..moves.len())]).unwrap();
        if winner.is_some() {
            break;
        }
        game = next;
    }
    game
}

proptest! {
    #[test]
    fn type_based_moves_stay_on_board_and_off_friends((p, os) in piece_among_obstacles()) {
        let targets = type_based_moves(&p, &os);
        prop_assert!(!targets.contains(p.square));
        for t in targets.iter() {
            prop_assert_ne!(os.colour_at(t), Some(p.colour));
        }
    }

    #[test]
    fn rays_are_short_collinear_and_stop_at_the_first_obstacle(
        (p, os) in piece_among_obstacles(),
        dir in proptest::sample::select(QUEEN_DIRECTIONS.to_vec()),
    ) {
        let ray = possible_moves_direction(&p, &os, dir);
        prop_assert!(ray.len() <= MAX_RAY_LENGTH);
        // Walking out from the piece, the ray is a prefix: every reachable
        // square up to the first obstacle, which is included only if hostile.
        let mut expected = BTreeSet::new();
        let mut cur = p.square;
        while let Some(next) = cur.offset(dir.0, dir.1) {
            match os.colour_at(next) {
                None => {
                    expected.insert(next);
                }
                Some(c) => {
                    if c != p.colour {
                        expected.insert(next);
                    }
                    break;
                }
            }
            cur = next;
        }
        prop_assert_eq!(ray.iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn knights_jump_over_everything((p, os) in piece_among_obstacles()) {
        let knight = p.with_kind(PieceType::Knight);
        let open = knight_move_pattern(&knight, &ObstacleSet::new());
        let blocked = knight_move_pattern(&knight, &os);
        let friends = os.squares_of(knight.colour);
        prop_assert_eq!(blocked.bits(), open.bits() & !friends.bits());
    }

    #[test]
    fn attacked_squares_agrees_with_point_queries(seed in any::<u64>()) {
        let game = random_walk(seed, 40);
        let state = game.board().board_state();
        for by in Colour::ALL {
            let all = attacked_squares(state, by);
            // Squares held by `by` itself are defended, not attacked.
            for sq in Coordinate::all().filter(|&s| state.obstacles().colour_at(s) != Some(by)) {
                prop_assert_eq!(all.contains(sq), is_square_attacked(state, sq, by));
            }
        }
    }

    #[test]
    fn colour_mirror_preserves_legal_moves(seed in any::<u64>()) {
        let f = random_small_position(&mut ChaCha8Rng::seed_from_u64(seed));
        let mirrored = mirror_board(&f.board);
        let expected: BTreeSet<Move> = legal_moves(&f.board, f.side)
            .into_iter()
            .map(|m| Move::new(mirror_piece(m.from()), mirror_piece(m.to())).unwrap())
            .collect();
        let actual: BTreeSet<Move> = legal_moves(&mirrored, f.side.opposite()).into_iter().collect();
        prop_assert_eq!(actual, expected);
    }

    #[test]
    fn san_round_trips_and_is_minimal(seed in any::<u64>(), plies in 0usize..80) {
        let game = random_walk(seed, plies);
        for mov in game.legal_moves() {
            let token = move_to_san_token(&mov, &game).unwrap();
            let reparsed: SanToken = token.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, token);
            prop_assert_eq!(resolve_san(&token, &game).unwrap(), mov);

            if token.piece != PieceType::Pawn && (token.file.is_some() || token.rank.is_some()) {
                let bare = token.without_disambiguation();
                let is_ambiguous = matches!(resolve_san(&bare, &game), Err(SanError::Ambiguous { .. }));
                prop_assert!(is_ambiguous, "{} needs no disambiguation", token);
                if token.file.is_some() && token.rank.is_some() {
                    for partial in [SanToken { rank: None, ..token }, SanToken { file: None, ..token }] {
                        prop_assert!(resolve_san(&partial, &game).is_err(), "{} is not minimal", token);
                    }
                }
            }
        }
    }

    #[test]
    fn make_move_appends_exactly_one_history_entry(seed in any::<u64>(), plies in 0usize..60) {
        let game = random_walk(seed, plies);
        for mov in game.legal_moves() {
            let next = make_move(game.board(), mov).unwrap();
            let history = next.history();
            prop_assert_eq!(history.len(), game.board().history().len() + 1);
            prop_assert_eq!(history.last_move(), Some(&mov));
            prop_assert!(history.iter().skip(1).eq(game.board().history().iter()));
            prop_assert!(!next.board_state().contains(&mov.from()));
            prop_assert!(next.board_state().contains(&mov.to()));
        }
    }
}

#[test]
fn character_maps_are_bijective() {
    let maps = char_maps();
    assert_eq!(maps.files.len(), 8);
    assert_eq!(maps.ranks.len(), 8);
    for (i, (f, r)) in FILE_CHARS.chars().zip(RANK_CHARS.chars()).enumerate() {
        let v = i as u8 + 1;
        assert_eq!(maps.files[&f], v);
        assert_eq!(maps.ranks[&r], v);
        assert_eq!(maps.file_char(v), Some(f));
        assert_eq!(maps.rank_char(v), Some(r));
    }
    let letters: BTreeSet<&str> = maps.pieces.values().copied().collect();
    assert_eq!(letters.len(), PieceType::ALL.len());
    for kind in PieceType::ALL {
        assert_eq!(maps.piece_for_letter(maps.pieces[&kind]), Some(kind));
    }
}

#[test]
fn history_prepend_shares_the_tail() {
    let game = random_walk(11, 30);
    let base = game.board().history().clone();
    let mov = game.legal_moves()[0];
    let longer = base.prepended(mov);
    assert_eq!(longer.len(), base.len() + 1);
    assert_eq!(longer.last_move(), Some(&mov));
    assert!(longer.iter().skip(1).eq(base.iter()));
    assert_eq!(base, game.board().history().clone());
    for sq in [mov.from().square, mov.to().square] {
        assert!(longer.touched_squares().contains(sq));
    }
    assert!(base.touched_squares().is_subset(longer.touched_squares()));
}
