//! A deliberately naive move generator used to cross-check the engine.
//!
//! It shares no code with the library: every (from, to) pair on the board
//! is tried against the rules written out literally, each candidate is
//! played on a copy, and it is kept if the mover's king is not attacked
//! afterwards. Slow, but small enough to audit by eye.

use std::collections::{BTreeSet, HashMap, HashSet};

pub type Sq = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    P,
    N,
    B,
    R,
    Q,
    K,
}

#[derive(Debug, Clone)]
pub struct OracleBoard {
    pub cells: HashMap<Sq, (Kind, bool)>,
    pub white_to_move: bool,
    /// Squares some earlier move started from or landed on.
    pub touched: HashSet<Sq>,
    /// The last move: (from, to, moved kind).
    pub last: Option<(Sq, Sq, Kind)>,
}

/// (from, to, kind after the move)
pub type OracleMove = (Sq, Sq, Kind);

fn on_board(s: Sq) -> bool {
    (1..=8).contains(&s.0) && (1..=8).contains(&s.1)
}

fn dir(white: bool) -> i32 {
    if white {
        1
    } else {
        -1
    }
}

impl OracleBoard {
    pub fn initial() -> OracleBoard {
        let back = [Kind::R, Kind::N, Kind::B, Kind::Q, Kind::K, Kind::B, Kind::N, Kind::R];
        let mut cells = HashMap::new();
        for x in 1..=8 {
            cells.insert((x, 1), (back[x as usize - 1], true));
            cells.insert((x, 2), (Kind::P, true));
            cells.insert((x, 7), (Kind::P, false));
            cells.insert((x, 8), (back[x as usize - 1], false));
        }
        OracleBoard {
            cells,
            white_to_move: true,
            touched: HashSet::new(),
            last: None,
        }
    }

    fn path_clear(&self, from: Sq, to: Sq) -> bool {
        let (dx, dy) = ((to.0 - from.0).signum(), (to.1 - from.1).signum());
        let mut s = (from.0 + dx, from.1 + dy);
        while s != to {
            if self.cells.contains_key(&s) {
                return false;
            }
            s = (s.0 + dx, s.1 + dy);
        }
        true
    }

    /// Whether the piece on `from` attacks `target` (pawns: diagonally only).
    fn attacks(&self, from: Sq, target: Sq) -> bool {
        let Some(&(kind, white)) = self.cells.get(&from) else {
            return false;
        };
        let (dx, dy) = (target.0 - from.0, target.1 - from.1);
        if (dx, dy) == (0, 0) {
            return false;
        }
        match kind {
            Kind::P => dx.abs() == 1 && dy == dir(white),
            Kind::N => (dx.abs() == 1 && dy.abs() == 2) || (dx.abs() == 2 && dy.abs() == 1),
            Kind::K => dx.abs() <= 1 && dy.abs() <= 1,
            Kind::R => (dx == 0 || dy == 0) && self.path_clear(from, target),
            Kind::B => dx.abs() == dy.abs() && self.path_clear(from, target),
            Kind::Q => {
                (dx == 0 || dy == 0 || dx.abs() == dy.abs()) && self.path_clear(from, target)
            }
        }
    }

    pub fn attacked_by(&self, target: Sq, white: bool) -> bool {
        self.cells
            .iter()
            .any(|(&s, &(_, w))| w == white && self.attacks(s, target))
    }

    pub fn king_of(&self, white: bool) -> Option<Sq> {
        self.cells
            .iter()
            .find(|(_, &(k, w))| k == Kind::K && w == white)
            .map(|(&s, _)| s)
    }

    pub fn in_check(&self, white: bool) -> bool {
        self.king_of(white)
            .is_some_and(|k| self.attacked_by(k, !white))
    }

    /// Whether a piece may go from `from` to `to` by the movement rules,
    /// ignoring whether the king ends up attacked.
    fn may_move(&self, from: Sq, to: Sq) -> bool {
        let Some(&(kind, white)) = self.cells.get(&from) else {
            return false;
        };
        if let Some(&(_, w)) = self.cells.get(&to) {
            if w == white {
                return false;
            }
        }
        let target_empty = !self.cells.contains_key(&to);
        let (dx, dy) = (to.0 - from.0, to.1 - from.1);
        match kind {
            Kind::P => {
                let d = dir(white);
                let start = if white { 2 } else { 7 };
                if dx == 0 && dy == d {
                    target_empty
                } else if dx == 0 && dy == 2 * d {
                    from.1 == start && target_empty && !self.cells.contains_key(&(from.0, from.1 + d))
                } else if dx.abs() == 1 && dy == d {
                    !target_empty || self.en_passant_victim(from, to).is_some()
                } else {
                    false
                }
            }
            Kind::K if dy == 0 && dx.abs() == 2 => self.may_castle(from, to, white),
            _ => self.attacks(from, to),
        }
    }

    fn en_passant_victim(&self, from: Sq, to: Sq) -> Option<Sq> {
        let (lf, lt, lk) = self.last?;
        let victim = (to.0, from.1);
        let white = self.cells.get(&from)?.1;
        let double = lk == Kind::P && lf.0 == lt.0 && (lf.1 - lt.1).abs() == 2;
        let still_there = self.cells.get(&victim) == Some(&(Kind::P, !white));
        (double && lt == victim && still_there && !self.cells.contains_key(&to)).then_some(victim)
    }

    fn may_castle(&self, from: Sq, to: Sq, white: bool) -> bool {
        let rank = if white { 1 } else { 8 };
        if from != (5, rank) || to.1 != rank || self.touched.contains(&from) {
            return false;
        }
        let corner = if to.0 > from.0 { (8, rank) } else { (1, rank) };
        if self.touched.contains(&corner) || self.cells.get(&corner) != Some(&(Kind::R, white)) {
            return false;
        }
        let (lo, hi) = (from.0.min(corner.0), from.0.max(corner.0));
        if (lo + 1..hi).any(|x| self.cells.contains_key(&(x, rank))) {
            return false;
        }
        let step = (to.0 - from.0).signum();
        let king_path = [from, (from.0 + step, rank), to];
        !king_path.iter().any(|&s| self.attacked_by(s, !white))
    }

    pub fn play(&self, m: OracleMove) -> OracleBoard {
        let (from, to, kind) = m;
        let mut next = self.clone();
        let (moved, white) = next.cells.remove(&from).expect("piece on from");
        if moved == Kind::P {
            if let Some(v) = self.en_passant_victim(from, to) {
                next.cells.remove(&v);
            }
        }
        if moved == Kind::K && (to.0 - from.0).abs() == 2 {
            let (corner, rook_to) = if to.0 > from.0 {
                ((8, from.1), (6, from.1))
            } else {
                ((1, from.1), (4, from.1))
            };
            next.cells.remove(&corner);
            next.cells.insert(rook_to, (Kind::R, white));
        }
        next.cells.insert(to, (kind, white));
        next.touched.insert(from);
        next.touched.insert(to);
        next.last = Some((from, to, moved));
        next.white_to_move = !self.white_to_move;
        next
    }

    /// Every legal move of the side to move.
    pub fn legal_moves(&self) -> BTreeSet<OracleMove> {
        let white = self.white_to_move;
        let mut out = BTreeSet::new();
        for fx in 1..=8 {
            for fy in 1..=8 {
                let from = (fx, fy);
                let Some(&(kind, w)) = self.cells.get(&from) else {
                    continue;
                };
                if w != white {
                    continue;
                }
                for tx in 1..=8 {
                    for ty in 1..=8 {
                        let to = (tx, ty);
                        if to == from || !on_board(to) || !self.may_move(from, to) {
                            continue;
                        }
                        let last_rank = if white { 8 } else { 1 };
                        let kinds: &[Kind] = if kind == Kind::P && ty == last_rank {
                            &[Kind::N, Kind::B, Kind::R, Kind::Q]
                        } else {
                            std::slice::from_ref(&kind)
                        };
                        for &k in kinds {
                            let m = (from, to, k);
                            if !self.play(m).in_check(white) {
                                out.insert(m);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn perft(&self, depth: u32) -> u64 {
        if depth == 0 {
            return 1;
        }
        self.legal_moves()
            .into_iter()
            .map(|m| self.play(m).perft(depth - 1))
            .sum()
    }
}
