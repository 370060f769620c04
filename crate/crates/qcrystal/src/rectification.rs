//! Symmetric tableaux and rectification: shifted tableaux unfold to
//! partial fillings of a self-conjugate shape, and a jeu-de-taquin style
//! slide procedure collapses those to Young tableaux.

use crate::error::{Error, Result};
use crate::tableaux::{
    validate_shifted, validate_young, Cell, Letter, Partition, ShiftedTableau, StrictPartition,
    YoungTableau,
};
use serde::{Deserialize, Serialize};

/// A partition-shaped filling with holes. The diagonal cells of the
/// current shape are always filled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFilling {
    shape: Partition,
    /// rows[r-1][c-1], None marking a hole
    rows: Vec<Vec<Option<usize>>>,
}

impl PartialFilling {
    pub fn new(shape: Partition, rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
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
            if row.iter().any(|v| *v == Some(0)) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} contains a zero entry",
                    i + 1
                )));
            }
        }
        let pf = PartialFilling { shape, rows };
        for r in 1..=pf.shape.len() {
            let d = Cell::new(r, r);
            if pf.shape.contains(d) && pf.get(d).is_none() {
                return Err(Error::InvalidSymmetric(format!("diagonal cell {d} is a hole")));
            }
        }
        Ok(pf)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
            .flatten()
    }

    pub fn is_hole(&self, cell: Cell) -> bool {
        self.shape.contains(cell) && self.get(cell).is_none()
    }

    pub fn holes(&self) -> Vec<Cell> {
        self.shape
            .cells()
            .into_iter()
            .filter(|&c| self.get(c).is_none())
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let line: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Some(x) => x.to_string(),
                    None => ".".into(),
                })
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// A partial filling of the self-conjugate shape sym(gamma) where exactly
/// one member of each off-diagonal transpose pair is filled and folding
/// back across the diagonal gives a valid shifted tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricTableau {
    filling: PartialFilling,
}

impl SymmetricTableau {
    pub fn filling(&self) -> &PartialFilling {
        &self.filling
    }

    pub fn into_filling(self) -> PartialFilling {
        self.filling
    }
}

/// The self-conjugate partition whose diagram is the shifted diagram of
/// gamma together with its transpose.
pub fn sym_shape(gamma: &StrictPartition) -> Partition {
    if gamma.is_empty() {
        return Partition::new(vec![]).unwrap();
    }
    let height = gamma.parts()[0]; // columns of the transpose reach this far up
    let mut parts = Vec::new();
    for r in 1..=height.max(gamma.len()) {
        // columns c <= r-1 contributed by the transpose, then the shifted row
        let transpose: usize = (1..r)
            .filter(|&c| gamma.row_len(c) > 0 && r < c + gamma.row_len(c))
            .count();
        let own = gamma.row_len(r);
        let total = if own > 0 { r - 1 + own } else { transpose };
        if total == 0 {
            break;
        }
        parts.push(total);
    }
    Partition::new(parts).expect("sym of a strict partition is a partition")
}

/// Reflects every marked entry across the diagonal, yielding the partial
/// filling of sym(gamma) that rectification consumes.
pub fn to_symmetric(t: &ShiftedTableau) -> SymmetricTableau {
    let nu = sym_shape(t.shape());
    let mut rows: Vec<Vec<Option<usize>>> = nu
        .parts()
        .iter()
        .map(|&l| vec![None; l])
        .collect();
    for cell in t.shape().cells() {
        let l = t.get(cell).unwrap();
        let target = if l.marked {
            Cell::new(cell.col, cell.row)
        } else {
            cell
        };
        rows[target.row - 1][target.col - 1] = Some(l.value);
    }
    let filling = PartialFilling::new(nu, rows)
        .expect("reflection of a valid shifted tableau fills the diagonal");
    SymmetricTableau { filling }
}

/// Folds the below-diagonal entries back across the diagonal as marked
/// letters. Errors exactly when the input is not a valid symmetric tableau.
pub fn from_symmetric(s: &PartialFilling) -> Result<ShiftedTableau> {
    let nu = s.shape();
    // self-conjugacy and the one-of-each-pair condition
    for cell in nu.cells() {
        let mirror = Cell::new(cell.col, cell.row);
        if !nu.contains(mirror) {
            return Err(Error::InvalidSymmetric(format!(
                "shape is not self-conjugate at {cell}"
            )));
        }
        if cell.row < cell.col {
            let a = s.get(cell).is_some();
            let b = s.get(mirror).is_some();
            if a == b {
                return Err(Error::InvalidSymmetric(format!(
                    "cells {cell} and {mirror} are {}",
                    if a { "both filled" } else { "both holes" }
                )));
            }
        }
    }
    let mut parts = Vec::new();
    for r in 1.. {
        let len = nu.row_len(r);
        if len < r {
            break;
        }
        parts.push(len - (r - 1));
    }
    let gamma = StrictPartition::new(parts)
        .map_err(|_| Error::InvalidSymmetric("above-diagonal part is not a shifted diagram".into()))?;
    let rows: Vec<Vec<Letter>> = gamma
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            let r = i + 1;
            (r..r + len)
                .map(|c| match s.get(Cell::new(r, c)) {
                    Some(v) => Letter::unmarked(v),
                    None => Letter::marked(
                        s.get(Cell::new(c, r))
                            .expect("pair condition guarantees the mirror is filled"),
                    ),
                })
                .collect()
        })
        .collect();
    validate_shifted(gamma, rows)
}

/// Validates a partial filling as a symmetric tableau.
pub fn validate_symmetric(s: PartialFilling) -> Result<SymmetricTableau> {
    from_symmetric(&s)?;
    Ok(SymmetricTableau { filling: s })
}

/// One recorded rectification event, for --trace output.
#[derive(Debug, Clone, Serialize)]
pub struct RectStep {
    pub hole: [usize; 2],
    pub action: String,
    pub state: String,
}

/// Slides holes out of a partial filling until none remain. Panics if a
/// slide would empty a diagonal cell or no rule applies: both indicate an
/// input outside the procedure's domain.
pub fn rectify(s: &PartialFilling, trace: Option<&mut Vec<RectStep>>) -> Result<YoungTableau> {
    let mut shape = s.shape.clone();
    let mut rows = s.rows.clone();
    let mut log = trace;

    let get = |rows: &Vec<Vec<Option<usize>>>, shape: &Partition, cell: Cell| -> Option<usize> {
        if !shape.contains(cell) {
            return None;
        }
        rows[cell.row - 1][cell.col - 1]
    };

    loop {
        // pick the hole with maximal row+col; below-diagonal candidates
        // (maximal row) take precedence over above-diagonal ones (minimal
        // row) at equal sums
        let holes: Vec<Cell> = shape
            .cells()
            .into_iter()
            .filter(|&c| rows[c.row - 1][c.col - 1].is_none())
            .collect();
        if holes.is_empty() {
            break;
        }
        let d = holes.iter().map(|c| c.row + c.col).max().unwrap();
        let at_d: Vec<Cell> = holes.into_iter().filter(|c| c.row + c.col == d).collect();
        let below = at_d.iter().filter(|c| c.row > c.col).max_by_key(|c| c.row);
        let above = at_d.iter().filter(|c| c.row < c.col).min_by_key(|c| c.row);
        let mut hole = *below.or(above).expect("a diagonal cell is never a hole");

        loop {
            let north = get(&rows, &shape, hole.north());
            let east = get(&rows, &shape, hole.east());
            let north_in = shape.contains(hole.north());
            let east_in = shape.contains(hole.east());
            // neighbors of the active hole are filled whenever in shape
            assert!(!north_in || north.is_some(), "hole north of hole at {hole}");
            assert!(!east_in || east.is_some(), "hole east of hole at {hole}");

            if !north_in && !east_in {
                let mut parts = shape.parts().to_vec();
                parts[hole.row - 1] -= 1;
                rows[hole.row - 1].pop();
                if parts[hole.row - 1] == 0 {
                    parts.pop();
                    rows.pop();
                }
                shape = Partition::new(parts).expect("corner removal keeps a partition");
                if let Some(log) = log.as_deref_mut() {
                    log.push(RectStep {
                        hole: [hole.row, hole.col],
                        action: format!("delete {hole}"),
                        state: render(&rows),
                    });
                }
                break;
            }
            let (from, action) = match (north, east) {
                (Some(i), e) if !east_in || e.unwrap() >= i => {
                    (hole.north(), format!("pull {i} down into {hole}"))
                }
                (n, Some(i)) if !north_in || n.unwrap() > i => {
                    (hole.east(), format!("pull {i} left into {hole}"))
                }
                _ => panic!("no slide rule applies at {hole}:\n{}", render(&rows)),
            };
            rows[hole.row - 1][hole.col - 1] = rows[from.row - 1][from.col - 1].take();
            if let Some(log) = log.as_deref_mut() {
                log.push(RectStep {
                    hole: [hole.row, hole.col],
                    action,
                    state: render(&rows),
                });
            }
            hole = from;
        }
    }

    let filled: Vec<Vec<usize>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.unwrap()).collect())
        .collect();
    validate_young(shape, filled)
}

fn render(rows: &[Vec<Option<usize>>]) -> String {
    let mut out = String::new();
    for row in rows.iter().rev() {
        let line: Vec<String> = row
            .iter()
            .map(|v| match v {
                Some(x) => x.to_string(),
                None => ".".into(),
            })
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Rectification of a shifted tableau: unfold across the diagonal, then
/// slide the holes out.
pub fn rect(t: &ShiftedTableau) -> Result<YoungTableau> {
    rectify(to_symmetric(t).filling(), None)
}

// ---------------------------------------------------------------------
// JSON: the tableau format plus a "holes" list
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct PartialJson {
    kind: String,
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>, // 0 at holes
    holes: Vec<[usize; 2]>,
}

pub fn partial_to_json(p: &PartialFilling) -> serde_json::Value {
    let doc = PartialJson {
        kind: "partial".into(),
        shape: p.shape.parts().to_vec(),
        rows: p
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.unwrap_or(0)).collect())
            .collect(),
        holes: p
            .holes()
            .iter()
            .map(|c| [c.row, c.col])
            .collect(),
    };
    serde_json::to_value(doc).expect("partial filling serialization cannot fail")
}

pub fn partial_from_json(value: &serde_json::Value) -> Result<PartialFilling> {
    let doc: PartialJson = serde_json::from_value(value.clone())?;
    if doc.kind != "partial" {
        return Err(Error::Parse(format!("unknown filling kind {:?}", doc.kind)));
    }
    let shape = Partition::new(doc.shape)?;
    let mut rows: Vec<Vec<Option<usize>>> = doc
        .rows
        .iter()
        .map(|r| r.iter().map(|&v| (v > 0).then_some(v)).collect())
        .collect();
    for &[r, c] in &doc.holes {
        let cell = Cell::new(r, c);
        if !shape.contains(cell) {
            return Err(Error::Parse(format!("hole {cell} outside the shape")));
        }
        if rows[r - 1][c - 1].is_some() {
            return Err(Error::Parse(format!("hole {cell} carries an entry")));
        }
    }
    // holes are exactly the zero cells
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            let cell = Cell::new(i + 1, j + 1);
            if v.is_none() && !doc.holes.contains(&[cell.row, cell.col]) {
                return Err(Error::Parse(format!("cell {cell} is empty but not listed as a hole")));
            }
        }
    }
    PartialFilling::new(shape, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_ssht, strict_partitions_of, weight_shifted, weight_young};

    fn letter(s: &str) -> Letter {
        let marked = s.ends_with('\'');
        Letter {
            value: s.trim_end_matches('\'').parse().unwrap(),
            marked,
        }
    }

    fn shifted(shape: &[usize], rows: &[&[&str]]) -> ShiftedTableau {
        validate_shifted(
            StrictPartition::new(shape.to_vec()).unwrap(),
            rows.iter()
                .map(|r| r.iter().map(|s| letter(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sym_shapes() {
        assert_eq!(
            sym_shape(&StrictPartition::new(vec![3, 1]).unwrap()).parts(),
            &[3, 2, 1]
        );
        assert_eq!(
            sym_shape(&StrictPartition::new(vec![6, 4, 3, 1]).unwrap()).parts(),
            &[6, 5, 5, 4, 3, 1]
        );
        assert!(sym_shape(&StrictPartition::new(vec![]).unwrap()).is_empty());
        // self-conjugacy at desk scale
        for size in 0..=7 {
            for gamma in strict_partitions_of(size) {
                let nu = sym_shape(&gamma);
                for cell in nu.cells() {
                    assert!(nu.contains(Cell::new(cell.col, cell.row)), "{gamma} -> {nu}");
                }
            }
        }
    }

    #[test]
    fn unfold_recovers_marked_row() {
        let t = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        let s = to_symmetric(&t);
        let f = s.filling();
        assert_eq!(f.shape().parts(), &[3, 2, 1]);
        assert_eq!(f.get(Cell::new(1, 1)), Some(1));
        assert_eq!(f.get(Cell::new(1, 3)), Some(2));
        assert_eq!(f.get(Cell::new(2, 2)), Some(2));
        assert_eq!(f.get(Cell::new(2, 1)), Some(2));
        assert_eq!(
            f.holes(),
            vec![Cell::new(1, 2), Cell::new(3, 1)]
        );
    }

    #[test]
    fn unfold_no_marks_keeps_entries() {
        let t = shifted(&[3, 1], &[&["1", "1", "1"], &["2"]]);
        let f = to_symmetric(&t);
        let f = f.filling();
        assert_eq!(f.get(Cell::new(1, 2)), Some(1));
        assert_eq!(f.get(Cell::new(2, 1)), None);
        assert_eq!(f.get(Cell::new(3, 1)), None);
    }

    #[test]
    fn round_trip_desk_scale() {
        for size in 0..=5 {
            for gamma in strict_partitions_of(size) {
                for t in enumerate_ssht(&gamma, 3) {
                    let s = to_symmetric(&t);
                    let back = from_symmetric(s.filling()).unwrap();
                    assert_eq!(back, t);
                }
            }
        }
    }

    #[test]
    fn rect_examples() {
        let a = shifted(&[3, 1], &[&["1", "1", "1"], &["2"]]);
        let ra = rect(&a).unwrap();
        assert_eq!(ra.shape().parts(), &[3, 1]);
        assert_eq!(ra.rows(), &[vec![1, 1, 1], vec![2]]);

        let b = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        let rb = rect(&b).unwrap();
        assert_eq!(rb.rows(), &[vec![1, 2, 2], vec![2]]);
    }

    #[test]
    fn rect_no_holes_is_identity() {
        let full = PartialFilling::new(
            Partition::new(vec![2, 1]).unwrap(),
            vec![vec![Some(1), Some(2)], vec![Some(2)]],
        )
        .unwrap();
        let y = rectify(&full, None).unwrap();
        assert_eq!(y.rows(), &[vec![1, 2], vec![2]]);
    }

    #[test]
    fn rect_preserves_weight_and_partitions_fibers() {
        let gamma = StrictPartition::new(vec![3, 1]).unwrap();
        let all = enumerate_ssht(&gamma, 3);
        let mut by_shape: std::collections::BTreeMap<Vec<usize>, Vec<String>> =
            Default::default();
        for t in &all {
            let y = rect(t).unwrap();
            assert_eq!(
                weight_young(&y, 3).unwrap(),
                weight_shifted(t, 3).unwrap()
            );
            by_shape
                .entry(y.shape().parts().to_vec())
                .or_default()
                .push(y.id());
        }
        let sizes: Vec<(Vec<usize>, usize)> = by_shape
            .iter()
            .map(|(k, v)| (k.clone(), v.len()))
            .collect();
        assert_eq!(
            sizes,
            vec![
                (vec![2, 1, 1], 3),
                (vec![2, 2], 6),
                (vec![3, 1], 15)
            ]
        );
        // injectivity within each fiber
        for (_, ids) in by_shape {
            let mut sorted = ids.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), ids.len());
        }
    }

    #[test]
    fn commutation_spot_check() {
        let gamma = StrictPartition::new(vec![3, 1]).unwrap();
        for t in enumerate_ssht(&gamma, 3) {
            for i in 1..3 {
                let lhs = crate::operators::f_shifted(&t, i).map(|ft| rect(&ft).unwrap());
                let rhs = crate::operators::f_young(&rect(&t).unwrap(), i);
                assert_eq!(lhs, rhs, "commutation fails at {} color {i}", t.id());
            }
        }
    }

    #[test]
    fn trace_records_steps() {
        let t = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        let mut steps = Vec::new();
        rectify(to_symmetric(&t).filling(), Some(&mut steps)).unwrap();
        assert!(!steps.is_empty());
        assert!(steps.iter().any(|s| s.action.starts_with("delete")));
    }

    #[test]
    fn json_round_trip() {
        let t = shifted(&[3, 1], &[&["1", "2'", "2"], &["2"]]);
        let f = to_symmetric(&t).into_filling();
        let v = partial_to_json(&f);
        assert_eq!(partial_from_json(&v).unwrap(), f);
        assert_eq!(v["holes"][0][0], 1);
    }

    #[test]
    fn invalid_symmetric_rejected() {
        // both members of a pair filled
        let bad = PartialFilling::new(
            Partition::new(vec![2, 2]).unwrap(),
            vec![vec![Some(1), Some(1)], vec![Some(1), Some(2)]],
        )
        .unwrap();
        assert!(validate_symmetric(bad).is_err());
        // diagonal hole rejected at construction
        assert!(PartialFilling::new(
            Partition::new(vec![2, 2]).unwrap(),
            vec![vec![None, Some(1)], vec![Some(1), Some(2)]],
        )
        .is_err());
    }
}
