//! Shapes, cells, letters, tableau validation, exhaustive enumeration,
//! weights, and reading words.
//!
//! Coordinate convention: rows are indexed from the bottom starting at 1,
//! columns from the left starting at 1. The shifted diagram of a strict
//! partition puts row `r` in columns `r ..= r + gamma_r - 1`, so the main
//! diagonal is the set of cells `(r, r)`. North of `(r, c)` is `(r+1, c)`,
//! east is `(r, c+1)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A weakly decreasing sequence of positive integers. The empty shape is
/// allowed and indexes the single empty tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row length, or 0 for rows beyond the shape.
    pub fn row_len(&self, row: usize) -> usize {
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.0.iter().enumerate() {
            for c in 1..=len {
                out.push(Cell::new(i + 1, c));
            }
        }
        out
    }

    /// Drops a nonnegative weight vector's trailing zeros and checks the
    /// remainder is weakly decreasing.
    pub fn from_weight(counts: &[usize]) -> Result<Self> {
        let mut parts = counts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.windows(2).all(|w| w[0] > w[1]) && parts.iter().all(|&p| p > 0);
        if ok {
            Ok(StrictPartition(parts))
        } else {
            Err(Error::InvalidStrictPartition(parts))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Shifted diagram membership: row `r` occupies columns
    /// `r ..= r + gamma_r - 1`.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= cell.row
            && cell.col < cell.row + self.row_len(cell.row)
            && self.row_len(cell.row) > 0
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.0.iter().enumerate() {
            let r = i + 1;
            for c in r..r + len {
                out.push(Cell::new(r, c));
            }
        }
        out
    }

    pub fn from_weight(counts: &[usize]) -> Result<Self> {
        let mut parts = counts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        StrictPartition::new(parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A cell of a diagram, 1-indexed, rows counted from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn north(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn on_diagonal(self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A possibly marked letter, totally ordered 1' < 1 < 2' < 2 < ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: usize,
    pub marked: bool,
}

impl Letter {
    pub fn unmarked(value: usize) -> Self {
        Letter {
            value,
            marked: false,
        }
    }

    pub fn marked(value: usize) -> Self {
        Letter {
            value,
            marked: true,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // marked i' sorts just below unmarked i
        (self.value, !self.marked).cmp(&(other.value, !other.marked))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.marked { "'" } else { "" })
    }
}

/// Entry multiplicities by value; marked and unmarked letters of value `i`
/// both count toward coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A reading word: each letter remembers the cell it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub origins: Vec<Cell>,
}

impl Word {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase. Stored bottom row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn max_value(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Replaces the entry at `cell`; private to the crate so operators can
    /// rebuild through validation.
    pub(crate) fn with_entry(&self, cell: Cell, value: usize) -> Result<YoungTableau> {
        let mut rows = self.rows.clone();
        rows[cell.row - 1][cell.col - 1] = value;
        validate_young(self.shape.clone(), rows)
    }

    /// Canonical compact id, stable across runs.
    pub fn id(&self) -> String {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|");
        format!("y[{}]", rows)
    }

    /// Text rendering, rows printed top-first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let line = row
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// A semistandard shifted tableau. Row `r` is stored left-to-right starting
/// at column `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<Letter>>,
}

impl ShiftedTableau {
    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        if cell.row < 1 || cell.col < cell.row {
            return None;
        }
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - cell.row))
            .copied()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn max_value(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|l| l.value)
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn with_entries(&self, changes: &[(Cell, Letter)]) -> Result<ShiftedTableau> {
        let mut rows = self.rows.clone();
        for &(cell, letter) in changes {
            rows[cell.row - 1][cell.col - cell.row] = letter;
        }
        validate_shifted(self.shape.clone(), rows)
    }

    pub fn id(&self) -> String {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|");
        format!("s[{}]", rows)
    }

    /// Text rendering, rows printed top-first, each row indented to its
    /// starting column.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate().rev() {
            let mut line = "  ".repeat(i);
            line.push_str(
                &row.iter()
                    .map(|l| format!("{:<2}", l.to_string()))
                    .collect::<Vec<_>>()
                    .join(""),
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Validates a Young filling given bottom-first rows.
pub fn validate_young(shape: Partition, rows: Vec<Vec<usize>>) -> Result<YoungTableau> {
    if rows.len() != shape.len() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} rows, got {}",
            shape.len(),
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(i + 1) {
            return Err(Error::ShapeMismatch(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                shape.row_len(i + 1)
            )));
        }
        if row.iter().any(|&v| v == 0) {
            return Err(Error::ShapeMismatch(format!(
                "row {} contains a zero entry",
                i + 1
            )));
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for c in 1..row.len() {
            if row[c - 1] > row[c] {
                return Err(Error::OrderViolation {
                    cell: Cell::new(i + 1, c + 1),
                    detail: format!("row entry {} < western neighbor {}", row[c], row[c - 1]),
                });
            }
        }
    }
    for i in 1..rows.len() {
        for c in 0..rows[i].len() {
            if rows[i][c] < rows[i - 1][c] {
                return Err(Error::OrderViolation {
                    cell: Cell::new(i + 1, c + 1),
                    detail: format!(
                        "column entry {} < southern neighbor {}",
                        rows[i][c],
                        rows[i - 1][c]
                    ),
                });
            }
            if rows[i][c] == rows[i - 1][c] {
                return Err(Error::ColumnMultiplicity {
                    col: c + 1,
                    value: rows[i][c],
                });
            }
        }
    }
    Ok(YoungTableau { shape, rows })
}

/// Validates a shifted filling given bottom-first rows; row `r`'s first
/// entry sits at column `r`.
pub fn validate_shifted(shape: StrictPartition, rows: Vec<Vec<Letter>>) -> Result<ShiftedTableau> {
    if rows.len() != shape.len() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} rows, got {}",
            shape.len(),
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(i + 1) {
            return Err(Error::ShapeMismatch(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                shape.row_len(i + 1)
            )));
        }
        if row.iter().any(|l| l.value == 0) {
            return Err(Error::ShapeMismatch(format!(
                "row {} contains a zero entry",
                i + 1
            )));
        }
    }
    let t = ShiftedTableau { shape, rows };
    // diagonal marks
    for r in 1..=t.shape.len() {
        if let Some(l) = t.get(Cell::new(r, r)) {
            if l.marked {
                return Err(Error::DiagonalMark(Cell::new(r, r)));
            }
        }
    }
    // row and column order
    for cell in t.shape.cells() {
        let here = t.get(cell).unwrap();
        if let Some(e) = t.get(cell.east()) {
            if e < here {
                return Err(Error::OrderViolation {
                    cell: cell.east(),
                    detail: format!("row entry {} < western neighbor {}", e, here),
                });
            }
        }
        if let Some(n) = t.get(cell.north()) {
            if n < here {
                return Err(Error::OrderViolation {
                    cell: cell.north(),
                    detail: format!("column entry {} < southern neighbor {}", n, here),
                });
            }
        }
    }
    // per column at most one unmarked i; per row at most one marked i'
    let maxv = t.max_value();
    let maxcol = t.shape.row_len(1).max(1);
    for v in 1..=maxv {
        for col in 1..=maxcol {
            let count = t
                .shape
                .cells()
                .iter()
                .filter(|&&c| {
                    c.col == col && t.get(c) == Some(Letter::unmarked(v))
                })
                .count();
            if count > 1 {
                return Err(Error::ColumnMultiplicity { col, value: v });
            }
        }
        for row in 1..=t.shape.len() {
            let count = t.rows[row - 1]
                .iter()
                .filter(|&&l| l == Letter::marked(v))
                .count();
            if count > 1 {
                return Err(Error::RowMultiplicity { row, value: v });
            }
        }
    }
    Ok(t)
}

/// All semistandard Young tableaux of the given shape with entries in
/// `1..=n`, sorted lexicographically by row reading word.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<YoungTableau> {
    assert!(n >= 1, "alphabet bound must be at least 1");
    let cells = shape.cells();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill_young(&cells, 0, n, &mut rows, &mut out, shape);
    out.sort_by_key(|t| row_word(t).letters);
    out
}

fn fill_young(
    cells: &[Cell],
    idx: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<YoungTableau>,
    shape: &Partition,
) {
    if idx == cells.len() {
        out.push(YoungTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let cell = cells[idx];
    let (r, c) = (cell.row - 1, cell.col - 1);
    let west = if c > 0 { rows[r][c - 1] } else { 1 };
    let south = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for v in west.max(south)..=n {
        rows[r][c] = v;
        fill_young(cells, idx + 1, n, rows, out, shape);
    }
    rows[r][c] = 0;
}

/// All semistandard shifted tableaux of the given shape over the alphabet
/// `{1', 1, ..., n', n}`, sorted lexicographically by hook reading word.
/// No `1'` ever appears: any placement of one forces a diagonal mark or a
/// repeated marked letter in a row.
pub fn enumerate_ssht(shape: &StrictPartition, n: usize) -> Vec<ShiftedTableau> {
    assert!(n >= 1, "alphabet bound must be at least 1");
    let cells = shape.cells();
    let mut rows: Vec<Vec<Letter>> = shape
        .parts()
        .iter()
        .map(|&l| vec![Letter::unmarked(0); l])
        .collect();
    let mut out = Vec::new();
    fill_shifted(&cells, 0, n, &mut rows, &mut out, shape);
    out.sort_by(|a, b| hook_word(a).letters.cmp(&hook_word(b).letters));
    out
}

fn fill_shifted(
    cells: &[Cell],
    idx: usize,
    n: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<ShiftedTableau>,
    shape: &StrictPartition,
) {
    if idx == cells.len() {
        out.push(ShiftedTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let cell = cells[idx];
    let (r, c) = (cell.row - 1, cell.col - cell.row);
    let west = if c > 0 { Some(rows[r][c - 1]) } else { None };
    // southern neighbor of (row, col) is (row-1, col), stored at offset
    // col - (row-1) = c + 1 in the row below
    let south = if r > 0 {
        rows[r - 1].get(c + 1).copied()
    } else {
        None
    };
    let min = west.max(south).unwrap_or(Letter::marked(1));
    for v in 1..=n {
        for marked in [true, false] {
            let letter = Letter { value: v, marked };
            if letter < min {
                continue;
            }
            if marked && cell.on_diagonal() {
                continue;
            }
            // at most one marked i' per row: equal letters in a weakly
            // increasing row are contiguous, so the western neighbor check
            // suffices; same for unmarked i per column.
            if marked && west == Some(letter) {
                continue;
            }
            if !marked && south == Some(letter) {
                continue;
            }
            rows[r][c] = letter;
            fill_shifted(cells, idx + 1, n, rows, out, shape);
        }
    }
    rows[r][c] = Letter::unmarked(0);
}

/// Entry multiplicities of a Young tableau, by value, padded to length `n`.
pub fn weight_young(t: &YoungTableau, n: usize) -> Result<Weight> {
    let mut counts = vec![0usize; n];
    for row in t.rows() {
        for &v in row {
            if v > n {
                return Err(Error::ValueOutOfRange { value: v, bound: n });
            }
            counts[v - 1] += 1;
        }
    }
    Ok(Weight(counts))
}

/// Entry multiplicities of a shifted tableau; marked and unmarked letters
/// of value `i` both count toward coordinate `i`.
pub fn weight_shifted(t: &ShiftedTableau, n: usize) -> Result<Weight> {
    let mut counts = vec![0usize; n];
    for row in t.rows() {
        for l in row {
            if l.value > n {
                return Err(Error::ValueOutOfRange {
                    value: l.value,
                    bound: n,
                });
            }
            counts[l.value - 1] += 1;
        }
    }
    Ok(Weight(counts))
}

/// Row reading word: rows left to right, from the top row down to row 1.
pub fn row_word(t: &YoungTableau) -> Word {
    let mut letters = Vec::with_capacity(t.size());
    let mut origins = Vec::with_capacity(t.size());
    for r in (1..=t.shape().len()).rev() {
        for c in 1..=t.shape().row_len(r) {
            letters.push(Letter::unmarked(t.get(Cell::new(r, c)).unwrap()));
            origins.push(Cell::new(r, c));
        }
    }
    Word { letters, origins }
}

/// Hook reading word: for `i` from `max(gamma_1, l(gamma))` down to 1, the
/// marked entries up column `i` then the unmarked entries along row `i`,
/// left to right.
pub fn hook_word(t: &ShiftedTableau) -> Word {
    let shape = t.shape();
    let mut letters = Vec::with_capacity(t.size());
    let mut origins = Vec::with_capacity(t.size());
    if shape.is_empty() {
        return Word { letters, origins };
    }
    let top = shape.row_len(1).max(shape.len());
    for i in (1..=top).rev() {
        // marked entries of column i, bottom to top
        for r in 1..=shape.len().min(i) {
            let cell = Cell::new(r, i);
            if let Some(l) = t.get(cell) {
                if l.marked {
                    letters.push(l);
                    origins.push(cell);
                }
            }
        }
        // unmarked entries of row i, left to right
        if i <= shape.len() {
            for c in i..i + shape.row_len(i) {
                let cell = Cell::new(i, c);
                let l = t.get(cell).unwrap();
                if !l.marked {
                    letters.push(l);
                    origins.push(cell);
                }
            }
        }
    }
    Word { letters, origins }
}

// ---------------------------------------------------------------------
// JSON tableau format
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CellJson {
    v: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    m: bool,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    kind: String,
    shape: Vec<usize>,
    rows: Vec<Vec<CellJson>>,
}

/// Either flavor of tableau, for IO surfaces that accept both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tableau {
    Young(YoungTableau),
    Shifted(ShiftedTableau),
}

impl Tableau {
    pub fn id(&self) -> String {
        match self {
            Tableau::Young(t) => t.id(),
            Tableau::Shifted(t) => t.id(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Tableau::Young(t) => t.render(),
            Tableau::Shifted(t) => t.render(),
        }
    }

    pub fn weight(&self, n: usize) -> Result<Weight> {
        match self {
            Tableau::Young(t) => weight_young(t, n),
            Tableau::Shifted(t) => weight_shifted(t, n),
        }
    }
}

pub fn young_to_json(t: &YoungTableau) -> serde_json::Value {
    let doc = TableauJson {
        kind: "young".into(),
        shape: t.shape().parts().to_vec(),
        rows: t
            .rows()
            .iter()
            .map(|r| r.iter().map(|&v| CellJson { v, m: false }).collect())
            .collect(),
    };
    serde_json::to_value(doc).expect("tableau serialization cannot fail")
}

pub fn shifted_to_json(t: &ShiftedTableau) -> serde_json::Value {
    let doc = TableauJson {
        kind: "shifted".into(),
        shape: t.shape().parts().to_vec(),
        rows: t
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|l| CellJson {
                        v: l.value,
                        m: l.marked,
                    })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("tableau serialization cannot fail")
}

pub fn tableau_from_json(value: &serde_json::Value) -> Result<Tableau> {
    let doc: TableauJson = serde_json::from_value(value.clone())?;
    match doc.kind.as_str() {
        "young" => {
            let shape = Partition::new(doc.shape)?;
            let mut rows = Vec::with_capacity(doc.rows.len());
            for row in &doc.rows {
                if row.iter().any(|c| c.m) {
                    return Err(Error::Parse(
                        "young tableau contains a marked entry".into(),
                    ));
                }
                rows.push(row.iter().map(|c| c.v).collect());
            }
            Ok(Tableau::Young(validate_young(shape, rows)?))
        }
        "shifted" => {
            let shape = StrictPartition::new(doc.shape)?;
            let rows = doc
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| Letter {
                            value: c.v,
                            marked: c.m,
                        })
                        .collect()
                })
                .collect();
            Ok(Tableau::Shifted(validate_shifted(shape, rows)?))
        }
        other => Err(Error::Parse(format!("unknown tableau kind {other:?}"))),
    }
}

/// Parses "3,1" into parts; the empty string denotes the empty shape.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad shape part {p:?}: {e}")))
        })
        .collect()
}

/// All partitions of total size `size` (including the empty one when
/// `size == 0`).
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size.max(1), &mut Vec::new(), &mut out);
    out
}

/// All strict partitions of total size `size`.
pub fn strict_partitions_of(size: usize) -> Vec<StrictPartition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if remaining == 0 {
            out.push(StrictPartition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            if p > 0 {
                rec(remaining - p, p.saturating_sub(1), prefix, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn young(shape: &[usize], rows: &[&[usize]]) -> YoungTableau {
        validate_young(
            Partition::new(shape.to_vec()).unwrap(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    fn letter(s: &str) -> Letter {
        let marked = s.ends_with('\'');
        let v: usize = s.trim_end_matches('\'').parse().unwrap();
        Letter { value: v, marked }
    }

    pub(crate) fn shifted(shape: &[usize], rows: &[&[&str]]) -> ShiftedTableau {
        validate_shifted(
            StrictPartition::new(shape.to_vec()).unwrap(),
            rows.iter()
                .map(|r| r.iter().map(|s| letter(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn letter_order() {
        assert!(letter("1'") < letter("1"));
        assert!(letter("1") < letter("2'"));
        assert!(letter("2'") < letter("2"));
        assert!(letter("2") < letter("3'"));
    }

    #[test]
    fn validate_young_examples() {
        young(&[3, 1], &[&[1, 1, 1], &[2]]);
        young(&[1], &[&[1]]);
        let err = validate_young(
            Partition::new(vec![2, 1]).unwrap(),
            vec![vec![1, 1], vec![1]],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::ColumnMultiplicity { col: 1, value: 1 }
        ));
    }

    #[test]
    fn validate_shifted_examples() {
        // row 1 = 1 2' 2, row 2 = 2 at column 2
        shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        shifted(&[2], &[&["1", "1"]]);
        let err = validate_shifted(
            StrictPartition::new(vec![3, 1]).unwrap(),
            vec![
                vec![letter("1'"), letter("1"), letter("1")],
                vec![letter("2")],
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::DiagonalMark(c) if c == Cell::new(1, 1)));
    }

    #[test]
    fn shifted_diagonal_membership() {
        let gamma = StrictPartition::new(vec![3, 1]).unwrap();
        assert!(gamma.contains(Cell::new(1, 1)));
        assert!(gamma.contains(Cell::new(1, 3)));
        assert!(!gamma.contains(Cell::new(1, 4)));
        assert!(gamma.contains(Cell::new(2, 2)));
        assert!(!gamma.contains(Cell::new(2, 1)));
        assert!(!gamma.contains(Cell::new(2, 3)));
    }

    #[test]
    fn enumerate_ssyt_counts() {
        let shape = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(enumerate_ssyt(&shape, 3).len(), 15);
        let col = Partition::new(vec![1]).unwrap();
        let ts = enumerate_ssyt(&col, 2);
        assert_eq!(ts.len(), 2);
        let forced = enumerate_ssyt(&Partition::new(vec![2, 2]).unwrap(), 2);
        assert_eq!(forced.len(), 1);
        assert_eq!(forced[0].rows(), &[vec![1, 1], vec![2, 2]]);
    }

    #[test]
    fn enumerate_ssht_counts() {
        let shape = StrictPartition::new(vec![3, 1]).unwrap();
        assert_eq!(enumerate_ssht(&shape, 3).len(), 24);
        let single = StrictPartition::new(vec![1]).unwrap();
        let ts = enumerate_ssht(&single, 1);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].get(Cell::new(1, 1)), Some(Letter::unmarked(1)));
    }

    #[test]
    fn enumerate_empty_shape() {
        let shape = Partition::new(vec![]).unwrap();
        assert_eq!(enumerate_ssyt(&shape, 3).len(), 1);
        let strict = StrictPartition::new(vec![]).unwrap();
        assert_eq!(enumerate_ssht(&strict, 3).len(), 1);
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let shape = StrictPartition::new(vec![3, 1]).unwrap();
        let a = enumerate_ssht(&shape, 3);
        let b = enumerate_ssht(&shape, 3);
        assert_eq!(a, b);
        let mut ids: Vec<String> = a.iter().map(|t| t.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), a.len());
    }

    #[test]
    fn no_one_prime_and_no_square_blocks() {
        for size in 1..=5 {
            for shape in strict_partitions_of(size) {
                for t in enumerate_ssht(&shape, 3) {
                    for cell in shape.cells() {
                        let l = t.get(cell).unwrap();
                        assert!(!(l.value == 1 && l.marked), "1' in {}", t.id());
                        // no 2x2 block of a single value
                        let same = |c: Cell| t.get(c).map(|x| x.value) == Some(l.value);
                        assert!(
                            !(same(cell.north()) && same(cell.east()) && same(cell.north().east())),
                            "2x2 block of {} in {}",
                            l.value,
                            t.id()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weights() {
        let t = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        assert_eq!(weight_shifted(&t, 2).unwrap(), Weight(vec![1, 3]));
        let y = young(&[3, 1], &[&[1, 1, 1], &[2]]);
        assert_eq!(weight_young(&y, 2).unwrap(), Weight(vec![3, 1]));
        let empty = validate_young(Partition::new(vec![]).unwrap(), vec![]).unwrap();
        assert_eq!(weight_young(&empty, 3).unwrap(), Weight(vec![0, 0, 0]));
        assert!(weight_young(&y, 1).is_err());
    }

    #[test]
    fn row_word_examples() {
        let y = young(&[3, 1], &[&[1, 1, 1], &[2]]);
        let w = row_word(&y);
        let vals: Vec<usize> = w.letters.iter().map(|l| l.value).collect();
        assert_eq!(vals, vec![2, 1, 1, 1]);
        let y2 = young(&[3, 1], &[&[1, 2, 2], &[2]]);
        let vals2: Vec<usize> = row_word(&y2).letters.iter().map(|l| l.value).collect();
        assert_eq!(vals2, vec![2, 1, 2, 2]);
        let empty = validate_young(Partition::new(vec![]).unwrap(), vec![]).unwrap();
        assert!(row_word(&empty).is_empty());
    }

    #[test]
    fn hook_word_examples() {
        let t = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        let w = hook_word(&t);
        let rendered: Vec<String> = w.letters.iter().map(|l| l.to_string()).collect();
        assert_eq!(rendered, vec!["2'", "2", "1", "2"]);
        assert_eq!(
            w.origins,
            vec![
                Cell::new(1, 2),
                Cell::new(2, 2),
                Cell::new(1, 1),
                Cell::new(1, 3)
            ]
        );

        let t2 = shifted(&[3, 1], &[&["1", "1", "2'"], &["2"]]);
        let rendered2: Vec<String> = hook_word(&t2).letters.iter().map(|l| l.to_string()).collect();
        assert_eq!(rendered2, vec!["2'", "2", "1", "1"]);

        let single = shifted(&[1], &[&["1"]]);
        let rendered3: Vec<String> =
            hook_word(&single).letters.iter().map(|l| l.to_string()).collect();
        assert_eq!(rendered3, vec!["1"]);
    }

    #[test]
    fn json_round_trip() {
        let t = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        let v = shifted_to_json(&t);
        assert_eq!(v["kind"], "shifted");
        assert_eq!(v["rows"][0][1]["m"], true);
        match tableau_from_json(&v).unwrap() {
            Tableau::Shifted(back) => assert_eq!(back, t),
            _ => panic!("wrong kind"),
        }
        let y = young(&[3, 1], &[&[1, 1, 1], &[2]]);
        match tableau_from_json(&young_to_json(&y)).unwrap() {
            Tableau::Young(back) => assert_eq!(back, y),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn shape_listing() {
        assert_eq!(partitions_of(4).len(), 5);
        let strict: Vec<_> = strict_partitions_of(6)
            .into_iter()
            .map(|s| s.parts().to_vec())
            .collect();
        assert!(strict.contains(&vec![6]));
        assert!(strict.contains(&vec![5, 1]));
        assert!(strict.contains(&vec![4, 2]));
        assert!(strict.contains(&vec![3, 2, 1]));
        assert_eq!(strict.len(), 4);
    }
}
