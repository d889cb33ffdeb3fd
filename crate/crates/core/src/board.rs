//! Board state, move history and the full legal-move rules.
//!
//! Legal moves are found by taking the simple type-based moves, adding the
//! history-dependent special moves (double step, en passant, promotion,
//! castling) and removing every move that is impossible: those that leave
//! the mover's king attacked, and pawn moves to the last rank that do not
//! promote. Every transition returns a new [`Board`]; inputs are never
//! modified.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::piece::{
    pawn_attacks, type_based_moves, Colour, Coordinate, ObstacleSet, Piece, PieceError,
    PieceType, SquareSet, BISHOP_DIRECTIONS, KING_OFFSETS, KNIGHT_OFFSETS, ROOK_DIRECTIONS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("a board state needs at least one piece")]
    EmptyState,
    #[error(transparent)]
    Piece(#[from] PieceError),
    #[error("more than one {0} king")]
    ExtraKing(Colour),
    #[error("no {0} king on the board")]
    MissingKing(Colour),
    #[error("{0} is not on the board")]
    PieceNotOnBoard(Piece),
    #[error("expected a {expected}, got {found}")]
    WrongPieceType { expected: PieceType, found: Piece },
    #[error("malformed move: {0}")]
    MalformedMove(&'static str),
    #[error("illegal move {0}")]
    IllegalMove(Move),
    #[error("{0} is not a castling move")]
    NotCastling(Move),
    #[error("{0} is not an en passant capture")]
    NotEnPassant(Move),
}

/// A piece before and after moving. The two sides share a colour and differ
/// in square; the type changes only when a pawn promotes on its last rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    from: Piece,
    to: Piece,
}

impl Move {
    pub fn new(from: Piece, to: Piece) -> Result<Move, BoardError> {
        if from.colour != to.colour {
            return Err(BoardError::MalformedMove("a move cannot change colour"));
        }
        if from.square == to.square {
            return Err(BoardError::MalformedMove("a move must change square"));
        }
        if from.kind != to.kind
            && !(from.kind == PieceType::Pawn
                && to.kind.is_promotable()
                && to.square.y() == from.colour.last_rank())
        {
            return Err(BoardError::MalformedMove(
                "only a pawn reaching the last rank may change type",
            ));
        }
        Ok(Move { from, to })
    }

    pub(crate) const fn new_unchecked(from: Piece, to: Piece) -> Move {
        Move { from, to }
    }

    /// Same type and colour, new square.
    pub(crate) const fn relocate(piece: Piece, square: Coordinate) -> Move {
        Move {
            from: piece,
            to: piece.with_square(square),
        }
    }

    pub const fn from(&self) -> Piece {
        self.from
    }

    pub const fn to(&self) -> Piece {
        self.to
    }

    pub const fn colour(&self) -> Colour {
        self.from.colour
    }

    pub fn is_promotion(&self) -> bool {
        self.from.kind != self.to.kind
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}->{}",
            self.from.colour, self.from.kind, self.from.square, self.to.square
        )?;
        if self.is_promotion() {
            write!(f, "={}", self.to.kind)?;
        }
        Ok(())
    }
}

struct HistoryNode {
    mov: Move,
    len: usize,
    // Every square any move in this suffix started from or landed on.
    touched: SquareSet,
    next: Option<Arc<HistoryNode>>,
}

/// Moves played so far, most recent first. Prepending shares the tail, so
/// copies of a board are cheap.
#[derive(Clone, Default)]
pub struct History {
    head: Option<Arc<HistoryNode>>,
}

impl History {
    pub const fn new() -> History {
        History { head: None }
    }

    /// Builds a history from moves listed newest first.
    pub fn from_newest_first<I>(moves: I) -> History
    where
        I: IntoIterator<Item = Move>,
    {
        let mut moves: Vec<Move> = moves.into_iter().collect();
        moves.reverse();
        moves
            .into_iter()
            .fold(History::new(), |h, m| h.prepended(m))
    }

    pub fn prepended(&self, mov: Move) -> History {
        let mut touched = self.touched_squares();
        touched.insert(mov.from.square);
        touched.insert(mov.to.square);
        History {
            head: Some(Arc::new(HistoryNode {
                mov,
                len: self.len() + 1,
                touched,
                next: self.head.clone(),
            })),
        }
    }

    pub fn len(&self) -> usize {
        self.head.as_ref().map_or(0, |n| n.len)
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_none()
    }

    pub fn last_move(&self) -> Option<&Move> {
        self.head.as_deref().map(|n| &n.mov)
    }

    /// Newest first.
    pub fn iter(&self) -> HistoryIter<'_> {
        HistoryIter {
            node: self.head.as_deref(),
        }
    }

    /// Squares that some recorded move left from or arrived on.
    pub fn touched_squares(&self) -> SquareSet {
        self.head.as_ref().map_or(SquareSet::EMPTY, |n| n.touched)
    }
}

pub struct HistoryIter<'a> {
    node: Option<&'a HistoryNode>,
}

impl<'a> Iterator for HistoryIter<'a> {
    type Item = &'a Move;

    fn next(&mut self) -> Option<&'a Move> {
        let node = self.node?;
        self.node = node.next.as_deref();
        Some(&node.mov)
    }
}

impl PartialEq for History {
    fn eq(&self, other: &History) -> bool {
        match (&self.head, &other.head) {
            (Some(a), Some(b)) if Arc::ptr_eq(a, b) => true,
            _ => self.len() == other.len() && self.iter().eq(other.iter()),
        }
    }
}

impl Eq for History {}

impl Hash for History {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.len().hash(state);
        for m in self.iter() {
            m.hash(state);
        }
    }
}

impl fmt::Debug for History {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// The set of pieces on the board: at least one piece, no two on the same
/// square, at most one king per colour.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoardState {
    cells: [Option<(PieceType, Colour)>; 64],
    // Derived from `cells`.
    obstacles: ObstacleSet,
    kings: [Option<Coordinate>; 2],
}

impl BoardState {
    pub fn new<I>(pieces: I) -> Result<BoardState, BoardError>
    where
        I: IntoIterator<Item = Piece>,
    {
        let mut state = BoardState {
            cells: [None; 64],
            obstacles: ObstacleSet::new(),
            kings: [None; 2],
        };
        for p in pieces {
            if state.cells[p.square.index()].is_some() {
                return Err(PieceError::SquareOccupied(p.square).into());
            }
            if p.kind == PieceType::King && state.kings[p.colour.index()].is_some() {
                return Err(BoardError::ExtraKing(p.colour));
            }
            state.place(p);
        }
        if state.obstacles.is_empty() {
            return Err(BoardError::EmptyState);
        }
        Ok(state)
    }

    pub fn piece_at(&self, square: Coordinate) -> Option<Piece> {
        self.cells[square.index()].map(|(kind, colour)| Piece::new(kind, square, colour))
    }

    pub fn contains(&self, piece: &Piece) -> bool {
        self.cells[piece.square.index()] == Some((piece.kind, piece.colour))
    }

    /// Pieces in square order, rank 1 first.
    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        self.obstacles
            .occupied()
            .into_iter()
            .filter_map(|sq| self.piece_at(sq))
    }

    pub fn pieces_of(&self, colour: Colour) -> impl Iterator<Item = Piece> + '_ {
        self.obstacles
            .squares_of(colour)
            .into_iter()
            .filter_map(|sq| self.piece_at(sq))
    }

    pub fn len(&self) -> usize {
        self.obstacles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.obstacles.is_empty()
    }

    /// Every piece projected to an obstacle.
    pub fn obstacles(&self) -> &ObstacleSet {
        &self.obstacles
    }

    pub fn king(&self, colour: Colour) -> Option<Coordinate> {
        self.kings[colour.index()]
    }

    fn place(&mut self, p: Piece) {
        self.cells[p.square.index()] = Some((p.kind, p.colour));
        // The caller has cleared the square.
        let _ = self.obstacles.insert(crate::piece::Obstacle {
            square: p.square,
            colour: p.colour,
        });
        if p.kind == PieceType::King {
            self.kings[p.colour.index()] = Some(p.square);
        }
    }

    fn clear(&mut self, square: Coordinate) {
        if let Some((kind, colour)) = self.cells[square.index()].take() {
            self.obstacles.remove(square);
            if kind == PieceType::King {
                self.kings[colour.index()] = None;
            }
        }
    }

    /// Renders rank 8 first; uppercase is white, lowercase black.
    pub fn ascii(&self) -> String {
        let mut out = String::with_capacity(72);
        for y in (1..=8).rev() {
            for x in 1..=8 {
                let sq = Coordinate::new(x, y).expect("on board");
                out.push(match self.piece_at(sq) {
                    Some(p) => piece_char(p),
                    None => '.',
                });
            }
            out.push('\n');
        }
        out
    }
}

fn piece_char(p: Piece) -> char {
    let c = match p.kind {
        PieceType::Pawn => 'p',
        PieceType::Rook => 'r',
        PieceType::Knight => 'n',
        PieceType::Bishop => 'b',
        PieceType::Queen => 'q',
        PieceType::King => 'k',
    };
    match p.colour {
        Colour::White => c.to_ascii_uppercase(),
        Colour::Black => c,
    }
}

impl fmt::Debug for BoardState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pieces()).finish()
    }
}

impl fmt::Display for BoardState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Board {
    board_state: BoardState,
    history: History,
}

impl Board {
    pub fn new(board_state: BoardState, history: History) -> Board {
        Board {
            board_state,
            history,
        }
    }

    pub fn board_state(&self) -> &BoardState {
        &self.board_state
    }

    pub fn history(&self) -> &History {
        &self.history
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.board_state.fmt(f)
    }
}

const BACK_RANK: [PieceType; 8] = [
    PieceType::Rook,
    PieceType::Knight,
    PieceType::Bishop,
    PieceType::Queen,
    PieceType::King,
    PieceType::Bishop,
    PieceType::Knight,
    PieceType::Rook,
];

/// The initial position with an empty history.
pub fn default_board() -> Board {
    let mut pieces = Vec::with_capacity(32);
    for colour in Colour::ALL {
        for (file, kind) in (1..=8).zip(BACK_RANK) {
            let back = Coordinate::new(file, colour.home_rank() as i32).expect("on board");
            let front = Coordinate::new(file, colour.pawn_rank() as i32).expect("on board");
            pieces.push(Piece::new(kind, back, colour));
            pieces.push(Piece::new(PieceType::Pawn, front, colour));
        }
    }
    let state = BoardState::new(pieces).expect("initial position is valid");
    Board::new(state, History::new())
}

/// Squares attacked by the pieces of `by`. Pawns contribute both forward
/// diagonals whether or not they are occupied, and never their push square.
pub fn attacked_squares(state: &BoardState, by: Colour) -> SquareSet {
    let os = state.obstacles();
    state.pieces_of(by).fold(SquareSet::EMPTY, |acc, p| {
        acc | match p.kind {
            PieceType::Pawn => pawn_attacks(p.square, p.colour),
            _ => type_based_moves(&p, os),
        }
    })
}

/// Whether any piece of `by` attacks `target`. Agrees with
/// [`attacked_squares`] for squares not occupied by `by`.
pub fn is_square_attacked(state: &BoardState, target: Coordinate, by: Colour) -> bool {
    let has = |sq: Option<Coordinate>, kinds: &[PieceType]| {
        sq.and_then(|s| state.cells[s.index()])
            .is_some_and(|(k, c)| c == by && kinds.contains(&k))
    };

    if KNIGHT_OFFSETS
        .iter()
        .any(|&(dx, dy)| has(target.offset(dx, dy), &[PieceType::Knight]))
    {
        return true;
    }
    if KING_OFFSETS
        .iter()
        .any(|&(dx, dy)| has(target.offset(dx, dy), &[PieceType::King]))
    {
        return true;
    }
    // A pawn of `by` attacks `target` from one rank behind it.
    let back = -by.forward();
    if [-1, 1]
        .iter()
        .any(|&dx| has(target.offset(dx, back), &[PieceType::Pawn]))
    {
        return true;
    }

    let slides = |dirs: &[(i32, i32)], kinds: &[PieceType]| {
        dirs.iter().any(|&(dx, dy)| {
            let mut sq = target;
            while let Some(next) = sq.offset(dx, dy) {
                if let Some((k, c)) = state.cells[next.index()] {
                    return c == by && kinds.contains(&k);
                }
                sq = next;
            }
            false
        })
    };
    slides(&ROOK_DIRECTIONS, &[PieceType::Rook, PieceType::Queen])
        || slides(&BISHOP_DIRECTIONS, &[PieceType::Bishop, PieceType::Queen])
}

fn king_attacked(state: &BoardState, colour: Colour) -> bool {
    state
        .king(colour)
        .is_some_and(|k| is_square_attacked(state, k, colour.opposite()))
}

/// Whether the king of `colour` is attacked. Fails if there is no such king.
pub fn in_check(state: &BoardState, colour: Colour) -> Result<bool, BoardError> {
    let king = state.king(colour).ok_or(BoardError::MissingKing(colour))?;
    Ok(is_square_attacked(state, king, colour.opposite()))
}

fn require_on_board(state: &BoardState, piece: &Piece) -> Result<(), BoardError> {
    if state.contains(piece) {
        Ok(())
    } else {
        Err(BoardError::PieceNotOnBoard(*piece))
    }
}

fn require_kind(piece: &Piece, expected: PieceType) -> Result<(), BoardError> {
    if piece.kind == expected {
        Ok(())
    } else {
        Err(BoardError::WrongPieceType {
            expected,
            found: *piece,
        })
    }
}

fn push_pawn_move_two(state: &BoardState, pawn: Piece, out: &mut Vec<Move>) {
    if pawn.square.y() != pawn.colour.pawn_rank() {
        return;
    }
    let forward = pawn.colour.forward();
    let (Some(over), Some(target)) = (
        pawn.square.offset(0, forward),
        pawn.square.offset(0, 2 * forward),
    ) else {
        return;
    };
    let os = state.obstacles();
    if !os.is_occupied(over) && !os.is_occupied(target) {
        out.push(Move::relocate(pawn, target));
    }
}

/// The two-square advance from the pawn's starting rank, when both squares
/// ahead are empty.
pub fn pawn_move_two(state: &BoardState, pawn: &Piece) -> Result<Vec<Move>, BoardError> {
    require_kind(pawn, PieceType::Pawn)?;
    require_on_board(state, pawn)?;
    let mut out = Vec::new();
    push_pawn_move_two(state, *pawn, &mut out);
    Ok(out)
}

fn push_en_passant(board: &Board, pawn: Piece, out: &mut Vec<Move>) {
    let Some(last) = board.history.last_move() else {
        return;
    };
    let (from, to) = (last.from.square, last.to.square);
    let double_push = last.from.kind == PieceType::Pawn
        && last.from.colour != pawn.colour
        && from.x() == to.x()
        && from.y().abs_diff(to.y()) == 2;
    if !double_push || to.y() != pawn.square.y() || to.x().abs_diff(pawn.square.x()) != 1 {
        return;
    }
    // Still there: nothing else has moved since.
    if board.board_state.piece_at(to) != Some(last.to) {
        return;
    }
    if let Some(target) = pawn
        .square
        .offset(to.x() as i32 - pawn.square.x() as i32, pawn.colour.forward())
    {
        out.push(Move::relocate(pawn, target));
    }
}

/// En passant captures available to `pawn`. Only the move just played can
/// be captured this way.
pub fn en_passant(board: &Board, pawn: &Piece) -> Result<Vec<Move>, BoardError> {
    require_kind(pawn, PieceType::Pawn)?;
    require_on_board(&board.board_state, pawn)?;
    let mut out = Vec::new();
    push_en_passant(board, *pawn, &mut out);
    Ok(out)
}

fn push_pawn_promotion(state: &BoardState, pawn: Piece, out: &mut Vec<Move>) {
    let last = pawn.colour.last_rank();
    for sq in type_based_moves(&pawn, state.obstacles()) {
        if sq.y() == last {
            for kind in PieceType::PROMOTABLE {
                out.push(Move::new_unchecked(pawn, Piece::new(kind, sq, pawn.colour)));
            }
        }
    }
}

/// For each last-rank square the pawn can reach, one move per promotable
/// type.
pub fn pawn_promotion(state: &BoardState, pawn: &Piece) -> Result<Vec<Move>, BoardError> {
    require_kind(pawn, PieceType::Pawn)?;
    require_on_board(state, pawn)?;
    let mut out = Vec::new();
    push_pawn_promotion(state, *pawn, &mut out);
    Ok(out)
}

const KING_FILE: u8 = 5;

fn push_castling(board: &Board, king: Piece, out: &mut Vec<Move>) {
    let rank = king.colour.home_rank();
    if king.square.x() != KING_FILE || king.square.y() != rank {
        return;
    }
    let touched = board.history.touched_squares();
    if touched.contains(king.square) {
        return;
    }
    let state = &board.board_state;
    let enemy = king.colour.opposite();
    if is_square_attacked(state, king.square, enemy) {
        return;
    }
    let at = |x: u8| Coordinate::new(x as i32, rank as i32).expect("on board");
    // (rook file, direction of king travel)
    for (rook_file, step) in [(8u8, 1i32), (1, -1)] {
        let corner = at(rook_file);
        if touched.contains(corner)
            || state.piece_at(corner) != Some(Piece::new(PieceType::Rook, corner, king.colour))
        {
            continue;
        }
        let lo = KING_FILE.min(rook_file) + 1;
        let hi = KING_FILE.max(rook_file);
        if (lo..hi).any(|x| state.obstacles().is_occupied(at(x))) {
            continue;
        }
        let crossed = at((KING_FILE as i32 + step) as u8);
        let dest = at((KING_FILE as i32 + 2 * step) as u8);
        if is_square_attacked(state, crossed, enemy) || is_square_attacked(state, dest, enemy) {
            continue;
        }
        out.push(Move::relocate(king, dest));
    }
}

/// Castling moves for `king`, expressed as the king's two-file step.
pub fn castling_possible(board: &Board, king: &Piece) -> Result<Vec<Move>, BoardError> {
    require_kind(king, PieceType::King)?;
    require_on_board(&board.board_state, king)?;
    let mut out = Vec::new();
    push_castling(board, *king, &mut out);
    Ok(out)
}

fn push_stateful_possible(board: &Board, piece: Piece, out: &mut Vec<Move>) {
    match piece.kind {
        PieceType::Pawn => {
            push_pawn_move_two(&board.board_state, piece, out);
            push_en_passant(board, piece, out);
            push_pawn_promotion(&board.board_state, piece, out);
        }
        PieceType::King => push_castling(board, piece, out),
        _ => {}
    }
}

/// Special moves that depend on the piece type and the history.
pub fn stateful_possible_moves(board: &Board, piece: &Piece) -> Result<Vec<Move>, BoardError> {
    require_on_board(&board.board_state, piece)?;
    let mut out = Vec::new();
    push_stateful_possible(board, *piece, &mut out);
    Ok(out)
}

/// Simple moves lifted to `Move` values plus the special moves, before any
/// filtering.
fn candidate_moves(board: &Board, piece: Piece, out: &mut Vec<Move>) {
    out.extend(
        type_based_moves(&piece, board.board_state.obstacles())
            .into_iter()
            .map(|sq| Move::relocate(piece, sq)),
    );
    push_stateful_possible(board, piece, out);
}

fn is_impossible(state: &BoardState, mov: &Move) -> bool {
    let unpromoted = mov.from.kind == PieceType::Pawn
        && mov.to.kind == PieceType::Pawn
        && mov.to.square.y() == mov.from.colour.last_rank();
    unpromoted || king_attacked(&next_state(state, mov), mov.from.colour)
}

/// Candidate moves for `piece` that the rules forbid: those leaving its own
/// king attacked, and unpromoted pawn moves to the last rank.
pub fn stateful_impossible_moves(board: &Board, piece: &Piece) -> Result<Vec<Move>, BoardError> {
    require_on_board(&board.board_state, piece)?;
    let mut out = Vec::new();
    candidate_moves(board, *piece, &mut out);
    out.retain(|m| is_impossible(&board.board_state, m));
    Ok(out)
}

fn push_possible_moves(board: &Board, piece: Piece, out: &mut Vec<Move>) {
    let start = out.len();
    candidate_moves(board, piece, out);
    let mut keep = start;
    for i in start..out.len() {
        if !is_impossible(&board.board_state, &out[i]) {
            out.swap(keep, i);
            keep += 1;
        }
    }
    out.truncate(keep);
}

/// Every legal move of `piece`.
pub fn possible_moves(board: &Board, piece: &Piece) -> Result<Vec<Move>, BoardError> {
    require_on_board(&board.board_state, piece)?;
    let mut out = Vec::new();
    push_possible_moves(board, *piece, &mut out);
    Ok(out)
}

/// Every legal move for the side `colour`.
pub fn legal_moves(board: &Board, colour: Colour) -> Vec<Move> {
    let mut out = Vec::with_capacity(48);
    for piece in board.board_state.pieces_of(colour) {
        push_possible_moves(board, piece, &mut out);
    }
    out
}

pub(crate) fn has_legal_move(board: &Board, colour: Colour) -> bool {
    let mut buf = Vec::with_capacity(32);
    board.board_state.pieces_of(colour).any(|piece| {
        buf.clear();
        push_possible_moves(board, piece, &mut buf);
        !buf.is_empty()
    })
}

fn is_castling(mov: &Move) -> bool {
    mov.from.kind == PieceType::King && mov.from.square.x().abs_diff(mov.to.square.x()) == 2
}

fn is_en_passant(state: &BoardState, mov: &Move) -> bool {
    mov.from.kind == PieceType::Pawn
        && mov.from.square.x() != mov.to.square.x()
        && !state.obstacles().is_occupied(mov.to.square)
}

/// A king moving two files: only castling does that.
pub fn iss_castling(_board: &Board, mov: &Move) -> bool {
    is_castling(mov)
}

/// A pawn moving diagonally onto an empty square: only en passant does that.
pub fn iss_en_passant(board: &Board, mov: &Move) -> bool {
    is_en_passant(&board.board_state, mov)
}

fn castled_state(state: &BoardState, mov: &Move) -> BoardState {
    let rank = mov.from.square.y() as i32;
    let kingside = mov.to.square.x() > mov.from.square.x();
    let (corner_file, rook_file) = if kingside { (8, 6) } else { (1, 4) };
    let corner = Coordinate::new(corner_file, rank).expect("on board");
    let rook_to = Coordinate::new(rook_file, rank).expect("on board");
    let mut next = state.clone();
    next.clear(mov.from.square);
    next.clear(corner);
    next.place(mov.to);
    next.place(Piece::new(PieceType::Rook, rook_to, mov.from.colour));
    next
}

fn en_passant_state(state: &BoardState, mov: &Move) -> BoardState {
    let victim = Coordinate::new(mov.to.square.x() as i32, mov.from.square.y() as i32)
        .expect("on board");
    let mut next = state.clone();
    next.clear(victim);
    next.clear(mov.from.square);
    next.place(mov.to);
    next
}

fn other_state(state: &BoardState, mov: &Move) -> BoardState {
    let mut next = state.clone();
    next.clear(mov.to.square);
    next.clear(mov.from.square);
    next.place(mov.to);
    next
}

fn next_state(state: &BoardState, mov: &Move) -> BoardState {
    if is_castling(mov) {
        castled_state(state, mov)
    } else if is_en_passant(state, mov) {
        en_passant_state(state, mov)
    } else {
        other_state(state, mov)
    }
}

/// Applies a move already known to be legal.
pub(crate) fn apply_unchecked(board: &Board, mov: Move) -> Board {
    Board {
        board_state: next_state(&board.board_state, &mov),
        history: board.history.prepended(mov),
    }
}

fn require_legal(board: &Board, mov: &Move) -> Result<(), BoardError> {
    require_on_board(&board.board_state, &mov.from)?;
    let mut moves = Vec::new();
    push_possible_moves(board, mov.from, &mut moves);
    if moves.contains(mov) {
        Ok(())
    } else {
        Err(BoardError::IllegalMove(*mov))
    }
}

/// Plays `mov`, which must be one of `possible_moves(board, mov.from())`.
pub fn make_move(board: &Board, mov: Move) -> Result<Board, BoardError> {
    require_legal(board, &mov)?;
    Ok(apply_unchecked(board, mov))
}

/// Ordinary moves, captures and promotions: the target square is cleared
/// and the moved piece placed there.
pub fn move_other(board: &Board, mov: Move) -> Result<Board, BoardError> {
    require_legal(board, &mov)?;
    if is_castling(&mov) {
        return Err(BoardError::IllegalMove(mov));
    }
    if is_en_passant(&board.board_state, &mov) {
        return Err(BoardError::IllegalMove(mov));
    }
    Ok(Board {
        board_state: other_state(&board.board_state, &mov),
        history: board.history.prepended(mov),
    })
}

/// Moves the king two files and the corner rook onto the square it crossed.
pub fn move_castling(board: &Board, mov: Move) -> Result<Board, BoardError> {
    require_legal(board, &mov)?;
    if !is_castling(&mov) {
        return Err(BoardError::NotCastling(mov));
    }
    Ok(Board {
        board_state: castled_state(&board.board_state, &mov),
        history: board.history.prepended(mov),
    })
}

/// Moves the pawn diagonally and removes the enemy pawn beside its origin.
pub fn move_en_passant(board: &Board, mov: Move) -> Result<Board, BoardError> {
    require_legal(board, &mov)?;
    if !is_en_passant(&board.board_state, &mov) {
        return Err(BoardError::NotEnPassant(mov));
    }
    Ok(Board {
        board_state: en_passant_state(&board.board_state, &mov),
        history: board.history.prepended(mov),
    })
}
