//! Board geometry and the brute-force placement counter.
//!
//! Squares are `(col, row)` pairs, both 1-based. Two pieces attack each other
//! when they share a line along one of the piece's basic moves; blocking is
//! not modelled, which gives the same nonattacking sets as blocking semantics.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::{Error, Piece, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub col: i64,
    pub row: i64,
}

impl Square {
    pub fn new(col: i64, row: i64) -> Self {
        Square { col, row }
    }

    /// Strictly below the main diagonal.
    pub fn below_diagonal(self) -> bool {
        self.row < self.col
    }
}

/// A set of pairwise non-parallel primitive move vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSet {
    moves: Vec<(i64, i64)>,
}

impl MoveSet {
    pub fn new(moves: Vec<(i64, i64)>) -> Result<Self> {
        for &(dc, dr) in &moves {
            if (dc, dr) == (0, 0) || dc.gcd(&dr) != 1 {
                return Err(Error::InvalidMove(dc, dr));
            }
        }
        for (i, &(a, b)) in moves.iter().enumerate() {
            for &(c, d) in &moves[i + 1..] {
                if a * d - b * c == 0 {
                    return Err(Error::ParallelMoves(a, b, c, d));
                }
            }
        }
        Ok(MoveSet { moves })
    }

    pub fn bishop() -> Self {
        MoveSet {
            moves: vec![(1, 1), (-1, 1)],
        }
    }

    pub fn anassa() -> Self {
        MoveSet {
            moves: vec![(0, 1), (1, 1)],
        }
    }

    pub fn rook() -> Self {
        MoveSet {
            moves: vec![(1, 0), (0, 1)],
        }
    }

    pub fn moves(&self) -> &[(i64, i64)] {
        &self.moves
    }

    /// Line invariant of `s` for move `(dc, dr)`: constant along the line.
    fn line_of(s: Square, (dc, dr): (i64, i64)) -> i64 {
        dr * s.col - dc * s.row
    }
}

impl Piece {
    /// Move set used by the oracle. The single-color rook boards are bishop
    /// boards restricted to one color.
    pub fn move_set(self) -> MoveSet {
        match self {
            Piece::Anassa => MoveSet::anassa(),
            Piece::Bishop | Piece::White | Piece::Black => MoveSet::bishop(),
        }
    }

    /// The board the piece's count refers to.
    pub fn board(self, m: usize) -> Board {
        match self {
            Piece::Bishop | Piece::Anassa => Board::square(m),
            Piece::White => Board::color(m, Color::White),
            Piece::Black => Board::color(m, Color::Black),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    /// `col + row` even; contains `(1, 1)`.
    White,
    Black,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    size: usize,
    squares: BTreeSet<Square>,
}

impl Board {
    /// Panics if a square lies outside `[1, size]^2`.
    pub fn from_squares(size: usize, squares: impl IntoIterator<Item = Square>) -> Self {
        let squares: BTreeSet<Square> = squares.into_iter().collect();
        let n = size as i64;
        assert!(
            squares
                .iter()
                .all(|s| (1..=n).contains(&s.col) && (1..=n).contains(&s.row)),
            "square outside a board of size {size}"
        );
        Board { size, squares }
    }

    /// The full `m×m` board.
    pub fn square(m: usize) -> Self {
        let n = m as i64;
        let squares = (1..=n).flat_map(|c| (1..=n).map(move |r| Square::new(c, r)));
        Board::from_squares(m, squares)
    }

    pub fn square_checked(m: i64) -> Result<Self> {
        if m < 0 {
            return Err(Error::NegativeBoard(m));
        }
        Ok(Board::square(m as usize))
    }

    pub fn color(m: usize, color: Color) -> Self {
        let want = match color {
            Color::White => 0,
            Color::Black => 1,
        };
        let squares = Board::square(m)
            .squares
            .into_iter()
            .filter(|s| (s.col + s.row).rem_euclid(2) == want);
        Board::from_squares(m, squares)
    }

    /// The subset whose removal collapses `S_m` onto `S_{m-1}`.
    ///
    /// Bishop: the main diagonal plus the squares `(i, i+1)` directly above
    /// it. Anassa: the main diagonal plus the last file without its diagonal
    /// square.
    pub fn inductive_subset(m: usize, piece: Piece) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyBoard);
        }
        let n = m as i64;
        let diagonal = (1..=n).map(|i| Square::new(i, i));
        let squares: Vec<Square> = match piece {
            Piece::Anassa => diagonal.chain((1..n).map(|r| Square::new(n, r))).collect(),
            _ => diagonal
                .chain((1..n).map(|i| Square::new(i, i + 1)))
                .collect(),
        };
        Ok(Board::from_squares(m, squares))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, s: Square) -> bool {
        self.squares.contains(&s)
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.squares.iter().copied()
    }

    pub fn difference(&self, other: &Board) -> Board {
        Board {
            size: self.size,
            squares: self.squares.difference(&other.squares).copied().collect(),
        }
    }
}

/// Whether a piece on `a` attacks a piece on `b`.
pub fn attacks(a: Square, b: Square, ms: &MoveSet) -> Result<bool> {
    if a == b {
        return Err(Error::SameSquare {
            col: a.col,
            row: a.row,
        });
    }
    Ok(ms
        .moves()
        .iter()
        .any(|&v| MoveSet::line_of(a, v) == MoveSet::line_of(b, v)))
}

/// Squares of a board with their line indices, one per move family.
struct LineIndex {
    squares: Vec<Square>,
    lines: Vec<Vec<usize>>,
    line_count: usize,
}

impl LineIndex {
    fn new(board: &Board, ms: &MoveSet) -> Self {
        let mut ids: HashMap<(usize, i64), usize> = HashMap::new();
        // canonical order: columns left to right, then rows
        let squares: Vec<Square> = board.squares().collect();
        let lines = squares
            .iter()
            .map(|&s| {
                ms.moves()
                    .iter()
                    .enumerate()
                    .map(|(f, &v)| {
                        let next = ids.len();
                        *ids.entry((f, MoveSet::line_of(s, v))).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        LineIndex {
            squares,
            lines,
            line_count: ids.len(),
        }
    }
}

struct Search<'a, F: FnMut(usize, &[usize])> {
    index: &'a LineIndex,
    k_max: usize,
    used: Vec<bool>,
    chosen: Vec<usize>,
    visit: F,
}

impl<F: FnMut(usize, &[usize])> Search<'_, F> {
    fn run(&mut self, start: usize) {
        (self.visit)(self.chosen.len(), &self.chosen);
        if self.chosen.len() == self.k_max {
            return;
        }
        for i in start..self.index.squares.len() {
            let lines = &self.index.lines[i];
            if lines.iter().any(|&l| self.used[l]) {
                continue;
            }
            for &l in lines {
                self.used[l] = true;
            }
            self.chosen.push(i);
            self.run(i + 1);
            self.chosen.pop();
            for &l in lines {
                self.used[l] = false;
            }
        }
    }
}

/// Visits every nonattacking placement of at most `k_max` pieces, each as a
/// set of square indices into `index.squares` in increasing order.
fn for_each_placement(index: &LineIndex, k_max: usize, visit: impl FnMut(usize, &[usize])) {
    let mut search = Search {
        index,
        k_max,
        used: vec![false; index.line_count],
        chosen: Vec::with_capacity(k_max),
        visit,
    };
    search.run(0);
}

/// Counts of nonattacking placements of `0..=k_max` pieces.
pub fn count_by_size(board: &Board, ms: &MoveSet, k_max: usize) -> Vec<BigInt> {
    let index = LineIndex::new(board, ms);
    let mut counts = vec![0u128; k_max + 1];
    for_each_placement(&index, k_max, |k, _| counts[k] += 1);
    counts.into_iter().map(BigInt::from).collect()
}

/// Number of `k`-subsets of the board with no attacking pair.
pub fn count_nonattacking(board: &Board, ms: &MoveSet, k: usize) -> BigInt {
    count_by_size(board, ms, k).pop().unwrap_or_default()
}

/// Anassa placements on `S_m` split by pieces strictly below the diagonal:
/// entry `[k][p]` for `0 <= p <= k <= m`.
pub fn count_below_diag_table(m: usize) -> Vec<Vec<BigInt>> {
    let index = LineIndex::new(&Board::square(m), &MoveSet::anassa());
    let mut table = vec![vec![0u128; m + 1]; m + 1];
    for_each_placement(&index, m, |k, chosen| {
        let p = chosen
            .iter()
            .filter(|&&i| index.squares[i].below_diagonal())
            .count();
        table[k][p] += 1;
    });
    table
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Anassa placements of `k` pieces on `S_m` with exactly `p` strictly below
/// the main diagonal.
pub fn count_nonattacking_below_diag(m: usize, k: usize, p: usize) -> BigInt {
    if k > m || p > k {
        return BigInt::default();
    }
    count_below_diag_table(m)[k][p].clone()
}

/// Counts on `S_m` minus the inductive subset agree with counts on
/// `S_{m-1}` for every `k <= k_max`.
pub fn verify_collapse(m: usize, piece: Piece, k_max: usize) -> Result<bool> {
    let ms = piece.move_set();
    let reduced = Board::square(m).difference(&Board::inductive_subset(m, piece)?);
    let smaller = Board::square(m - 1);
    Ok(count_by_size(&reduced, &ms, k_max) == count_by_size(&smaller, &ms, k_max))
}

/// The bijection `S_m - I_m -> S_{m-1}`.
///
/// Bishop: squares below the diagonal shift one file left, squares above
/// the superdiagonal shift one rank down. Anassa: squares above the
/// diagonal shift one rank down and the rest stay put.
pub fn collapse_bijection(m: usize, piece: Piece) -> Result<BTreeMap<Square, Square>> {
    let reduced = Board::square(m).difference(&Board::inductive_subset(m, piece)?);
    Ok(reduced
        .squares()
        .map(|s| {
            let image = collapse_image(s, m as i64, piece).expect("square lies in S_m - I_m");
            (s, image)
        })
        .collect())
}

fn collapse_image(s: Square, m: i64, piece: Piece) -> Option<Square> {
    let (i, j) = (s.col, s.row);
    match piece {
        Piece::Anassa if i < j => Some(Square::new(i, j - 1)),
        Piece::Anassa if j < i && i < m => Some(s),
        Piece::Anassa => None,
        _ if 2 <= i && i > j => Some(Square::new(i - 1, j)),
        _ if 3 <= j && j > i + 1 => Some(Square::new(i, j - 1)),
        _ => None,
    }
}

/// Checks that a map is a bijection onto `target` preserving attacks in both
/// directions.
pub fn preserves_attacks(map: &BTreeMap<Square, Square>, target: &Board, ms: &MoveSet) -> bool {
    let image: BTreeSet<Square> = map.values().copied().collect();
    if image.len() != map.len() || image != target.squares().collect() {
        return false;
    }
    let pairs: Vec<(&Square, &Square)> = map.iter().collect();
    pairs.iter().enumerate().all(|(i, &(a, fa))| {
        pairs[i + 1..]
            .iter()
            .all(|&(b, fb)| attacks(*a, *b, ms).ok() == attacks(*fa, *fb, ms).ok())
    })
}
