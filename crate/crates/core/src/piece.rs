//! Colours, piece types, coordinates and the obstacle-aware movement
//! patterns of each piece type.
//!
//! Nothing here knows about move history. The patterns describe where a
//! piece could go given only which squares are occupied and by whom; special
//! moves and check filtering are layered on top in [`crate::board`].

use std::fmt;
use std::ops::{BitOr, Not};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PieceError {
    #[error("square {0} is already occupied")]
    SquareOccupied(Coordinate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    pub const ALL: [Colour; 2] = [Colour::White, Colour::Black];

    pub const fn opposite(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }

    /// Direction of pawn travel along the y axis.
    pub const fn forward(self) -> i32 {
        match self {
            Colour::White => 1,
            Colour::Black => -1,
        }
    }

    /// Rank holding the king and rooks in the initial position.
    pub const fn home_rank(self) -> u8 {
        match self {
            Colour::White => 1,
            Colour::Black => 8,
        }
    }

    /// Rank the pawns start on.
    pub const fn pawn_rank(self) -> u8 {
        match self {
            Colour::White => 2,
            Colour::Black => 7,
        }
    }

    /// Rank on which a pawn of this colour must promote.
    pub const fn last_rank(self) -> u8 {
        match self {
            Colour::White => 8,
            Colour::Black => 1,
        }
    }

    pub(crate) const fn index(self) -> usize {
        self as usize
    }
}

impl Not for Colour {
    type Output = Colour;

    fn not(self) -> Colour {
        self.opposite()
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::White => "white",
            Colour::Black => "black",
        })
    }
}

pub const fn opposite_colour(c: Colour) -> Colour {
    c.opposite()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceType {
    Pawn,
    Rook,
    Knight,
    Bishop,
    Queen,
    King,
}

impl PieceType {
    pub const ALL: [PieceType; 6] = [
        PieceType::Pawn,
        PieceType::Rook,
        PieceType::Knight,
        PieceType::Bishop,
        PieceType::Queen,
        PieceType::King,
    ];

    /// Types a pawn may promote to.
    pub const PROMOTABLE: [PieceType; 4] = [
        PieceType::Knight,
        PieceType::Bishop,
        PieceType::Rook,
        PieceType::Queen,
    ];

    pub const fn is_promotable(self) -> bool {
        matches!(
            self,
            PieceType::Knight | PieceType::Bishop | PieceType::Rook | PieceType::Queen
        )
    }
}

impl fmt::Display for PieceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieceType::Pawn => "pawn",
            PieceType::Rook => "rook",
            PieceType::Knight => "knight",
            PieceType::Bishop => "bishop",
            PieceType::Queen => "queen",
            PieceType::King => "king",
        })
    }
}

/// A square on the board. Both axes run 1 to 8; `x` is the file and `y` the
/// rank. Values outside that range cannot be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coordinate {
    // y first so that the derived ordering walks rank by rank.
    y: u8,
    x: u8,
}

impl Coordinate {
    /// Returns `None` unless both components lie in `1..=8`.
    pub fn new(x: i32, y: i32) -> Option<Coordinate> {
        if (1..=8).contains(&x) && (1..=8).contains(&y) {
            Some(Coordinate {
                x: x as u8,
                y: y as u8,
            })
        } else {
            None
        }
    }

    pub const fn x(self) -> u8 {
        self.x
    }

    pub const fn y(self) -> u8 {
        self.y
    }

    /// The square displaced by `(dx, dy)`, if it is still on the board.
    pub fn offset(self, dx: i32, dy: i32) -> Option<Coordinate> {
        Coordinate::new(self.x as i32 + dx, self.y as i32 + dy)
    }

    /// Dense index in `0..64`, rank-major.
    pub const fn index(self) -> usize {
        (self.y as usize - 1) * 8 + (self.x as usize - 1)
    }

    pub const fn from_index(index: usize) -> Coordinate {
        assert!(index < 64);
        Coordinate {
            x: (index % 8) as u8 + 1,
            y: (index / 8) as u8 + 1,
        }
    }

    /// All 64 squares, rank 1 first.
    pub fn all() -> impl Iterator<Item = Coordinate> {
        (0..64).map(Coordinate::from_index)
    }

    /// Reflection through the horizontal midline.
    pub fn mirrored(self) -> Coordinate {
        Coordinate {
            x: self.x,
            y: 9 - self.y,
        }
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub fn coordinate_factory(x: i32, y: i32) -> Option<Coordinate> {
    Coordinate::new(x, y)
}

/// A set of squares, stored as a 64-bit mask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SquareSet(u64);

impl SquareSet {
    pub const EMPTY: SquareSet = SquareSet(0);

    pub const fn from_bits(bits: u64) -> SquareSet {
        SquareSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, c: Coordinate) {
        self.0 |= 1 << c.index();
    }

    pub fn remove(&mut self, c: Coordinate) {
        self.0 &= !(1 << c.index());
    }

    pub const fn contains(self, c: Coordinate) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: SquareSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> SquareSetIter {
        SquareSetIter(self.0)
    }
}

impl BitOr for SquareSet {
    type Output = SquareSet;

    fn bitor(self, rhs: SquareSet) -> SquareSet {
        SquareSet(self.0 | rhs.0)
    }
}

impl FromIterator<Coordinate> for SquareSet {
    fn from_iter<I: IntoIterator<Item = Coordinate>>(iter: I) -> SquareSet {
        let mut set = SquareSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl IntoIterator for SquareSet {
    type Item = Coordinate;
    type IntoIter = SquareSetIter;

    fn into_iter(self) -> SquareSetIter {
        self.iter()
    }
}

pub struct SquareSetIter(u64);

impl Iterator for SquareSetIter {
    type Item = Coordinate;

    fn next(&mut self) -> Option<Coordinate> {
        if self.0 == 0 {
            return None;
        }
        let index = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(Coordinate::from_index(index))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SquareSetIter {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    pub kind: PieceType,
    pub square: Coordinate,
    pub colour: Colour,
}

impl Piece {
    pub const fn new(kind: PieceType, square: Coordinate, colour: Colour) -> Piece {
        Piece {
            kind,
            square,
            colour,
        }
    }

    pub const fn with_square(self, square: Coordinate) -> Piece {
        Piece { square, ..self }
    }

    pub const fn with_kind(self, kind: PieceType) -> Piece {
        Piece { kind, ..self }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} at {}", self.colour, self.kind, self.square)
    }
}

/// What a moving piece needs to know about another piece: where it is and
/// whether it can be captured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obstacle {
    pub square: Coordinate,
    pub colour: Colour,
}

/// A set of obstacles with at most one obstacle per square.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ObstacleSet {
    by_colour: [u64; 2],
}

impl ObstacleSet {
    pub const fn new() -> ObstacleSet {
        ObstacleSet { by_colour: [0; 2] }
    }

    pub fn from_obstacles<I>(obstacles: I) -> Result<ObstacleSet, PieceError>
    where
        I: IntoIterator<Item = Obstacle>,
    {
        let mut set = ObstacleSet::new();
        for o in obstacles {
            set.insert(o)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, o: Obstacle) -> Result<(), PieceError> {
        if self.colour_at(o.square).is_some() {
            return Err(PieceError::SquareOccupied(o.square));
        }
        self.by_colour[o.colour.index()] |= 1 << o.square.index();
        Ok(())
    }

    pub fn remove(&mut self, square: Coordinate) {
        let mask = !(1u64 << square.index());
        self.by_colour[0] &= mask;
        self.by_colour[1] &= mask;
    }

    pub const fn colour_at(&self, square: Coordinate) -> Option<Colour> {
        let bit = 1u64 << square.index();
        if self.by_colour[0] & bit != 0 {
            Some(Colour::White)
        } else if self.by_colour[1] & bit != 0 {
            Some(Colour::Black)
        } else {
            None
        }
    }

    pub const fn is_occupied(&self, square: Coordinate) -> bool {
        (self.by_colour[0] | self.by_colour[1]) & (1 << square.index()) != 0
    }

    pub const fn squares_of(&self, colour: Colour) -> SquareSet {
        SquareSet::from_bits(self.by_colour[colour.index()])
    }

    pub const fn occupied(&self) -> SquareSet {
        SquareSet::from_bits(self.by_colour[0] | self.by_colour[1])
    }

    pub const fn len(&self) -> usize {
        self.occupied().len()
    }

    pub const fn is_empty(&self) -> bool {
        self.occupied().is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Obstacle> + '_ {
        Colour::ALL.into_iter().flat_map(move |colour| {
            self.squares_of(colour)
                .iter()
                .map(move |square| Obstacle { square, colour })
        })
    }
}

/// Projects pieces onto the squares they block. Fails if two pieces share a
/// square.
pub fn pieces_to_obstacles<'a, I>(pieces: I) -> Result<ObstacleSet, PieceError>
where
    I: IntoIterator<Item = &'a Piece>,
{
    ObstacleSet::from_obstacles(pieces.into_iter().map(|p| Obstacle {
        square: p.square,
        colour: p.colour,
    }))
}

/// Knight offsets, listed 2-up-1-right first and then clockwise in pairs.
pub const KNIGHT_OFFSETS: [(i32, i32); 8] = [
    (1, 2),
    (-1, 2),
    (1, -2),
    (-1, -2),
    (2, 1),
    (-2, 1),
    (2, -1),
    (-2, -1),
];

pub const ROOK_DIRECTIONS: [(i32, i32); 4] = [(0, 1), (0, -1), (1, 0), (-1, 0)];

pub const BISHOP_DIRECTIONS: [(i32, i32); 4] = [(1, 1), (-1, -1), (-1, 1), (1, -1)];

pub const QUEEN_DIRECTIONS: [(i32, i32); 8] = [
    (0, 1),
    (0, -1),
    (1, 0),
    (-1, 0),
    (1, 1),
    (-1, -1),
    (-1, 1),
    (1, -1),
];

pub const KING_OFFSETS: [(i32, i32); 8] = QUEEN_DIRECTIONS;

/// Longest possible ray on an 8x8 board.
pub const MAX_RAY_LENGTH: usize = 7;

/// A single step in `dir`. Returns the target unless it is off the board or
/// holds a piece of the mover's colour. Enemy-occupied targets are returned.
pub fn possible_move_direction(p: &Piece, os: &ObstacleSet, dir: (i32, i32)) -> Option<Coordinate> {
    let target = p.square.offset(dir.0, dir.1)?;
    match os.colour_at(target) {
        Some(c) if c == p.colour => None,
        _ => Some(target),
    }
}

/// The ray from `p` in `dir`. Stops before the edge and before a friendly
/// piece; includes and stops at the first enemy piece. A zero direction
/// yields the empty set.
pub fn possible_moves_direction(p: &Piece, os: &ObstacleSet, dir: (i32, i32)) -> SquareSet {
    let mut ray = SquareSet::EMPTY;
    if dir == (0, 0) {
        return ray;
    }
    let mut current = p.square;
    for _ in 0..MAX_RAY_LENGTH {
        let Some(next) = current.offset(dir.0, dir.1) else {
            break;
        };
        match os.colour_at(next) {
            Some(c) if c == p.colour => break,
            Some(_) => {
                ray.insert(next);
                break;
            }
            None => {
                ray.insert(next);
                current = next;
            }
        }
    }
    ray
}

fn step_pattern(p: &Piece, os: &ObstacleSet, offsets: &[(i32, i32)]) -> SquareSet {
    offsets
        .iter()
        .filter_map(|&dir| possible_move_direction(p, os, dir))
        .collect()
}

fn ray_pattern(p: &Piece, os: &ObstacleSet, directions: &[(i32, i32)]) -> SquareSet {
    directions
        .iter()
        .fold(SquareSet::EMPTY, |acc, &dir| acc | possible_moves_direction(p, os, dir))
}

pub fn knight_move_pattern(p: &Piece, os: &ObstacleSet) -> SquareSet {
    step_pattern(p, os, &KNIGHT_OFFSETS)
}

pub fn king_move_pattern(p: &Piece, os: &ObstacleSet) -> SquareSet {
    step_pattern(p, os, &KING_OFFSETS)
}

pub fn rook_move_pattern(p: &Piece, os: &ObstacleSet) -> SquareSet {
    ray_pattern(p, os, &ROOK_DIRECTIONS)
}

pub fn bishop_move_pattern(p: &Piece, os: &ObstacleSet) -> SquareSet {
    ray_pattern(p, os, &BISHOP_DIRECTIONS)
}

pub fn queen_move_pattern(p: &Piece, os: &ObstacleSet) -> SquareSet {
    ray_pattern(p, os, &QUEEN_DIRECTIONS)
}

/// One step forward onto an empty square, or one step diagonally forward
/// onto an enemy piece. The double step is history-dependent and handled by
/// the board.
pub fn pawn_move_pattern(p: &Piece, os: &ObstacleSet) -> SquareSet {
    let forward = p.colour.forward();
    let mut moves = SquareSet::EMPTY;
    if let Some(ahead) = p.square.offset(0, forward) {
        if !os.is_occupied(ahead) {
            moves.insert(ahead);
        }
    }
    moves | pawn_attack_pattern(p.square, p.colour, os)
}

/// Forward diagonals of a pawn that hold an enemy piece.
fn pawn_attack_pattern(square: Coordinate, colour: Colour, os: &ObstacleSet) -> SquareSet {
    pawn_attacks(square, colour)
        .iter()
        .filter(|&c| os.colour_at(c) == Some(colour.opposite()))
        .collect()
}

/// Both forward diagonals of a pawn regardless of occupancy.
pub fn pawn_attacks(square: Coordinate, colour: Colour) -> SquareSet {
    let forward = colour.forward();
    [-1, 1]
        .into_iter()
        .filter_map(|dx| square.offset(dx, forward))
        .collect()
}

/// Squares `p` could reach ignoring check and special moves.
pub fn type_based_moves(p: &Piece, os: &ObstacleSet) -> SquareSet {
    match p.kind {
        PieceType::Pawn => pawn_move_pattern(p, os),
        PieceType::Rook => rook_move_pattern(p, os),
        PieceType::Knight => knight_move_pattern(p, os),
        PieceType::Bishop => bishop_move_pattern(p, os),
        PieceType::Queen => queen_move_pattern(p, os),
        PieceType::King => king_move_pattern(p, os),
    }
}
