//! The restriction-induction Bratteli diagram of the pair `(S_n, S_{n−1})`,
//! vacillating tableaux, set-partition tableaux, and the insertion bijection
//! between them.
//!
//! Levels of the diagram are indexed by half-integers stored as `two_level`:
//! even levels hold partitions of `n`, odd levels partitions of `n−1`. Each
//! half step removes one box, each integer step adds one box, and path counts
//! accumulate Pascal-style.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigUint, One, Zero};

use crate::combinatorics::{add_box, remove_box, IntegerPartition};
use crate::setpart::{enumerate_set_partitions, SetPartition};
use crate::{Error, Result};

/// The branching graph with path counts, up to a requested level.
#[derive(Clone, Debug)]
pub struct BratteliDiagram {
    n: usize,
    /// `levels[two_level]` maps each vertex to its path count from the root.
    levels: Vec<BTreeMap<IntegerPartition, BigUint>>,
}

impl BratteliDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_two_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn vertices(&self, two_level: usize) -> Option<&BTreeMap<IntegerPartition, BigUint>> {
        self.levels.get(two_level)
    }

    pub fn path_count(&self, two_level: usize, shape: &IntegerPartition) -> Option<&BigUint> {
        self.levels.get(two_level).and_then(|lvl| lvl.get(shape))
    }

    /// Sum of squared path counts on one level (the centralizer dimension).
    pub fn level_dimension(&self, two_level: usize) -> Option<BigUint> {
        self.levels
            .get(two_level)
            .map(|lvl| lvl.values().map(|c| c * c).sum())
    }

    /// DOT rendering with vertices labeled `partition:count`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (lvl, vertices) in self.levels.iter().enumerate() {
            out.push_str("  { rank=same;");
            for shape in vertices.keys() {
                out.push_str(&format!(" \"L{lvl}_{shape}\";"));
            }
            out.push_str(" }\n");
            for (shape, count) in vertices {
                out.push_str(&format!(
                    "  \"L{lvl}_{shape}\" [label=\"{shape}:{count}\"];\n"
                ));
            }
        }
        for lvl in 0..self.levels.len().saturating_sub(1) {
            for shape in self.levels[lvl].keys() {
                let children = if lvl % 2 == 0 {
                    remove_box(shape)
                } else {
                    add_box(shape)
                };
                for child in children {
                    if self.levels[lvl + 1].contains_key(&child) {
                        out.push_str(&format!(
                            "  \"L{lvl}_{shape}\" -> \"L{}_{child}\";\n",
                            lvl + 1
                        ));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the diagram for the pair `(S_n, S_{n−1})` through `max_two_level`,
/// with path counts. All edge multiplicities are one for this pair.
pub fn build_bratteli(n: usize, max_two_level: usize) -> Result<BratteliDiagram> {
    if n < 2 {
        return Err(Error::InvalidIntegerPartition(format!(
            "the branching pair needs n >= 2, got {n}"
        )));
    }
    let root = IntegerPartition::new(vec![n])?;
    let mut levels = vec![BTreeMap::from([(root, BigUint::one())])];
    for lvl in 0..max_two_level {
        let mut next: BTreeMap<IntegerPartition, BigUint> = BTreeMap::new();
        for (shape, count) in &levels[lvl] {
            let children = if lvl % 2 == 0 {
                remove_box(shape)
            } else {
                add_box(shape)
            };
            for child in children {
                let entry = next.entry(child).or_insert_with(BigUint::zero);
                *entry += count;
            }
        }
        levels.push(next);
    }
    Ok(BratteliDiagram { n, levels })
}

/// A path in the Bratteli diagram recorded as its shape sequence
/// `λ^(0) = [n], λ^(1/2) = [n−1], ..., λ^(k)` (length `2k + 1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VacillatingTableau {
    n: usize,
    shapes: Vec<IntegerPartition>,
}

impl VacillatingTableau {
    pub fn new(n: usize, shapes: Vec<IntegerPartition>) -> Result<Self> {
        let vt = VacillatingTableau { n, shapes };
        vt.validate()?;
        Ok(vt)
    }

    fn validate(&self) -> Result<()> {
        if self.shapes.len().is_multiple_of(2) || self.shapes.is_empty() {
            return Err(Error::InvalidVacillating(
                "sequence must have odd length 2k+1".into(),
            ));
        }
        if self.shapes[0] != IntegerPartition::new(vec![self.n])? {
            return Err(Error::InvalidVacillating(format!(
                "sequence must start at [{}]",
                self.n
            )));
        }
        for (i, w) in self.shapes.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            let ok = if i % 2 == 0 {
                remove_box(a).contains(b)
            } else {
                add_box(a).contains(b)
            };
            if !ok {
                return Err(Error::InvalidVacillating(format!(
                    "illegal step {a} -> {b} at position {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of full (remove, add) steps.
    pub fn length_k(&self) -> usize {
        (self.shapes.len() - 1) / 2
    }

    pub fn shapes(&self) -> &[IntegerPartition] {
        &self.shapes
    }

    /// Shape at half-integer level `two_j/2`.
    pub fn shape_at(&self, two_j: usize) -> &IntegerPartition {
        &self.shapes[two_j]
    }

    pub fn final_shape(&self) -> &IntegerPartition {
        self.shapes.last().unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "shapes": self.shapes.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing n".into()))? as usize;
        let shapes = v
            .get("shapes")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("missing shapes".into()))?
            .iter()
            .map(|s| {
                let parts = s
                    .as_array()
                    .ok_or_else(|| Error::Parse("shape must be an array".into()))?
                    .iter()
                    .map(|p| {
                        p.as_u64()
                            .map(|u| u as usize)
                            .ok_or_else(|| Error::Parse("bad part".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                IntegerPartition::new(parts)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, shapes)
    }
}

impl fmt::Display for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VacillatingTableau{self}")
    }
}

/// One box of a set-partition tableau: the zero marker or a nonempty set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TabBox {
    Zero,
    Block(Vec<usize>),
}

impl TabBox {
    pub fn block(entries: impl IntoIterator<Item = usize>) -> TabBox {
        let mut v: Vec<usize> = entries.into_iter().collect();
        v.sort_unstable();
        assert!(!v.is_empty(), "nonzero boxes must be nonempty");
        TabBox::Block(v)
    }

    pub fn max(&self) -> Option<usize> {
        match self {
            TabBox::Zero => None,
            TabBox::Block(v) => v.last().copied(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, TabBox::Zero)
    }

    /// Box order governed by maxima; the zero marker sits below everything.
    fn cmp_max(&self, other: &TabBox) -> Ordering {
        match (self.max(), other.max()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b),
        }
    }
}

impl fmt::Display for TabBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TabBox::Zero => write!(f, "0"),
            TabBox::Block(v) => write!(
                f,
                "{}",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
        }
    }
}

/// A filling of a Young diagram whose nonzero boxes carry the blocks of a set
/// partition of `{1..k}` and whose zero boxes pad the first row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPartitionTableau {
    rows: Vec<Vec<TabBox>>,
}

impl SetPartitionTableau {
    pub fn new(rows: Vec<Vec<TabBox>>) -> Result<Self> {
        let t = SetPartitionTableau { rows };
        t.validate()?;
        Ok(t)
    }

    /// The all-zero single-row tableau of length `n` (the `k = 0` case).
    pub fn all_zeros(n: usize) -> Self {
        SetPartitionTableau {
            rows: vec![vec![TabBox::Zero; n]],
        }
    }

    pub fn rows(&self) -> &[Vec<TabBox>] {
        &self.rows
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("rows weakly decrease")
    }

    /// Number of nonzero boxes.
    pub fn block_boxes(&self) -> usize {
        self.rows.iter().flatten().filter(|b| !b.is_zero()).count()
    }

    /// Largest entry, or 0 for an all-zero tableau.
    pub fn content_k(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .filter_map(|b| b.max())
            .max()
            .unwrap_or(0)
    }

    /// The set partition of `{1..k}` carried by the nonzero boxes; `None` for
    /// the all-zero tableau of `k = 0`.
    pub fn associated_set_partition(&self) -> Option<SetPartition> {
        let blocks: Vec<Vec<usize>> = self
            .rows
            .iter()
            .flatten()
            .filter_map(|b| match b {
                TabBox::Zero => None,
                TabBox::Block(v) => Some(v.clone()),
            })
            .collect();
        if blocks.is_empty() {
            return None;
        }
        let k = self.content_k();
        SetPartition::from_blocks(k, &blocks).ok()
    }

    fn validate(&self) -> Result<()> {
        if self.rows.is_empty() || self.rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty rows are not allowed".into()));
        }
        if !self.rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease".into(),
            ));
        }
        // Zero boxes form a prefix of row 1 and appear nowhere else.
        for (r, row) in self.rows.iter().enumerate() {
            let mut seen_nonzero = false;
            for b in row {
                if b.is_zero() {
                    if r != 0 || seen_nonzero {
                        return Err(Error::InvalidTableau(
                            "zero boxes must form a prefix of row 1".into(),
                        ));
                    }
                } else {
                    seen_nonzero = true;
                }
            }
        }
        // Nonzero boxes partition {1..k}.
        let k = self.content_k();
        if k > 0 {
            let mut seen = vec![false; k];
            for b in self.rows.iter().flatten() {
                if let TabBox::Block(v) = b {
                    for &e in v {
                        if e == 0 || e > k || seen[e - 1] {
                            return Err(Error::InvalidTableau(format!(
                                "entries must partition 1..{k}"
                            )));
                        }
                        seen[e - 1] = true;
                    }
                }
            }
            if !seen.iter().all(|&s| s) {
                return Err(Error::InvalidTableau(format!("entries must cover 1..{k}")));
            }
        }
        // Strict increase along rows and down columns among nonzero boxes
        // (zero boxes compare equal to each other and below everything).
        for (r, row) in self.rows.iter().enumerate() {
            for (c, b) in row.iter().enumerate() {
                if c + 1 < row.len() {
                    let right = &row[c + 1];
                    let ord = b.cmp_max(right);
                    if !(ord == Ordering::Less || (b.is_zero() && right.is_zero())) {
                        return Err(Error::InvalidTableau(format!(
                            "row {r} fails to increase at column {c}"
                        )));
                    }
                }
                if r + 1 < self.rows.len() && c < self.rows[r + 1].len() {
                    let below = &self.rows[r + 1][c];
                    if b.cmp_max(below) != Ordering::Less {
                        return Err(Error::InvalidTableau(format!(
                            "column {c} fails to increase at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|b| match b {
                                TabBox::Zero => serde_json::json!([0]),
                                TabBox::Block(v) => serde_json::json!(v),
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected array of rows".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("expected array of boxes".into()))?
                    .iter()
                    .map(|b| {
                        let entries = b
                            .as_array()
                            .ok_or_else(|| Error::Parse("box must be an array".into()))?
                            .iter()
                            .map(|x| {
                                x.as_u64()
                                    .map(|u| u as usize)
                                    .ok_or_else(|| Error::Parse("bad entry".into()))
                            })
                            .collect::<Result<Vec<usize>>>()?;
                        Ok(if entries == vec![0] {
                            TabBox::Zero
                        } else {
                            TabBox::block(entries)
                        })
                    })
                    .collect::<Result<Vec<TabBox>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

impl fmt::Display for SetPartitionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|b| format!("[{b}]"))
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        write!(f, "{}", rendered.join(" / "))
    }
}

/// All vacillating tableaux of the given shape and length, ordered
/// lexicographically on the shape sequence. The count is `m_{k,n}^λ`.
pub fn enumerate_vacillating(
    lambda: &IntegerPartition,
    k: usize,
    n: usize,
) -> Result<Vec<VacillatingTableau>> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.to_string(), n));
    }
    let start = IntegerPartition::new(vec![n])?;
    let mut out = Vec::new();
    let mut prefix = vec![start.clone()];
    fn rec(
        prefix: &mut Vec<IntegerPartition>,
        steps_left: usize,
        target: &IntegerPartition,
        n: usize,
        out: &mut Vec<VacillatingTableau>,
    ) {
        if steps_left == 0 {
            if prefix.last().unwrap() == target {
                out.push(VacillatingTableau {
                    n,
                    shapes: prefix.clone(),
                });
            }
            return;
        }
        let current = prefix.last().unwrap().clone();
        for mid in remove_box(&current) {
            for next in add_box(&mid) {
                prefix.push(mid.clone());
                prefix.push(next);
                rec(prefix, steps_left - 1, target, n, out);
                prefix.pop();
                prefix.pop();
            }
        }
    }
    rec(&mut prefix, k, lambda, n, &mut out);
    out.sort();
    Ok(out)
}

/// All standard fillings of the skew cells (value -> cell), used to lay set
/// partition blocks into a shape by increasing maxima.
fn standard_skew_fillings(outer: &IntegerPartition, inner_cols: usize) -> Vec<Vec<(usize, usize)>> {
    // Cells of outer minus the first `inner_cols` cells of row 1.
    let mut cells = Vec::new();
    for r in 0..outer.len() {
        let start = if r == 0 { inner_cols } else { 0 };
        for c in start..outer.row(r) {
            cells.push((r, c));
        }
    }
    let mut fillings = Vec::new();
    let mut order = Vec::new();
    fn rec(
        cells: &[(usize, usize)],
        inner_cols: usize,
        used: &mut Vec<bool>,
        order: &mut Vec<(usize, usize)>,
        fillings: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if order.len() == cells.len() {
            fillings.push(order.clone());
            return;
        }
        for (i, &(r, c)) in cells.iter().enumerate() {
            if used[i] {
                continue;
            }
            let left_start = if r == 0 { inner_cols } else { 0 };
            let left_ok = c == left_start || order.iter().any(|&x| x == (r, c - 1));
            let up_ok =
                r == 0 || !cells.contains(&(r - 1, c)) || order.iter().any(|&x| x == (r - 1, c));
            if left_ok && up_ok {
                used[i] = true;
                order.push((r, c));
                rec(cells, inner_cols, used, order, fillings);
                order.pop();
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; cells.len()];
    rec(&cells, inner_cols, &mut used, &mut order, &mut fillings);
    fillings
}

/// All set-partition tableaux of the given shape with content
/// `{0^{n−t}, 1..k}` for some admissible `t`.
pub fn enumerate_spt(
    lambda: &IntegerPartition,
    k: usize,
    n: usize,
) -> Result<Vec<SetPartitionTableau>> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.to_string(), n));
    }
    let mut out = Vec::new();
    let t_min = n - lambda.row(0); // |λ^#|
    for t in t_min..=n.min(k) {
        if t == 0 {
            // Only the all-zero tableau, and only for the one-row shape.
            if k == 0 && lambda.len() == 1 {
                out.push(SetPartitionTableau::all_zeros(n));
            }
            continue;
        }
        if k == 0 {
            continue;
        }
        let partitions: Vec<SetPartition> = enumerate_set_partitions(k, Some(t))?
            .into_iter()
            .filter(|p| p.block_count() == t)
            .collect();
        let zeros = n - t;
        let fillings = standard_skew_fillings(lambda, zeros);
        for pi in &partitions {
            // Blocks ordered by maximum; the filling places the j-th smallest
            // maximum at the cell holding value j.
            let mut blocks = pi.blocks();
            blocks.sort_by_key(|b| *b.last().unwrap());
            for filling in &fillings {
                let mut rows: Vec<Vec<TabBox>> = (0..lambda.len())
                    .map(|r| {
                        let fill = if r == 0 { zeros } else { 0 };
                        vec![TabBox::Zero; fill]
                    })
                    .collect();
                // Cells must be appended in column order per row.
                let mut placed: Vec<Vec<(usize, TabBox)>> = vec![Vec::new(); lambda.len()];
                for (j, &(r, c)) in filling.iter().enumerate() {
                    placed[r].push((c, TabBox::block(blocks[j].clone())));
                }
                for (r, mut items) in placed.into_iter().enumerate() {
                    items.sort_by_key(|&(c, _)| c);
                    for (_, b) in items {
                        rows[r].push(b);
                    }
                }
                out.push(SetPartitionTableau::new(rows)?);
            }
        }
    }
    Ok(out)
}

/// Schensted row insertion of a box governed by box maxima, carrying the full
/// contents. Returns the new tableau and the cell where the shape grew.
pub fn schensted_insert(
    tableau: &SetPartitionTableau,
    incoming: TabBox,
) -> (SetPartitionTableau, (usize, usize)) {
    let mut rows = tableau.rows.clone();
    let mut current = incoming;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![current]);
            return (SetPartitionTableau { rows }, (r, 0));
        }
        // Leftmost entry strictly greater than the incoming box.
        let bump = rows[r]
            .iter()
            .position(|b| b.cmp_max(&current) == Ordering::Greater);
        match bump {
            None => {
                rows[r].push(current);
                let c = rows[r].len() - 1;
                return (SetPartitionTableau { rows }, (r, c));
            }
            Some(c) => {
                current = std::mem::replace(&mut rows[r][c], current);
                r += 1;
            }
        }
    }
}

/// Inverse of row insertion: removes the box at the given outer corner and
/// reverse-bumps it up through the rows; returns the shrunken tableau and the
/// box that pops out of row 1.
pub fn schensted_uninsert(
    tableau: &SetPartitionTableau,
    corner: (usize, usize),
) -> Result<(SetPartitionTableau, TabBox)> {
    let (r0, c0) = corner;
    let mut rows = tableau.rows.clone();
    if r0 >= rows.len() || c0 + 1 != rows[r0].len() {
        return Err(Error::InvalidTableau(format!(
            "({r0}, {c0}) is not the last cell of its row"
        )));
    }
    if r0 + 1 < rows.len() && rows[r0 + 1].len() > c0 {
        return Err(Error::InvalidTableau(format!(
            "({r0}, {c0}) is not an outer corner"
        )));
    }
    let mut current = rows[r0].pop().unwrap();
    if rows[r0].is_empty() {
        rows.remove(r0);
    }
    for r in (0..r0).rev() {
        // Rightmost entry strictly smaller than the travelling box.
        let pos = rows[r]
            .iter()
            .rposition(|b| b.cmp_max(&current) == Ordering::Less)
            .ok_or_else(|| Error::InvalidTableau("reverse bump found no smaller entry".into()))?;
        current = std::mem::replace(&mut rows[r][pos], current);
    }
    Ok((SetPartitionTableau { rows }, current))
}

/// The cell of `larger/smaller` when the shapes differ by one box.
fn diff_cell(larger: &IntegerPartition, smaller: &IntegerPartition) -> Result<(usize, usize)> {
    for r in 0..larger.len() {
        if larger.row(r) == smaller.row(r) + 1 {
            return Ok((r, smaller.row(r)));
        }
        if larger.row(r) != smaller.row(r) {
            break;
        }
    }
    Err(Error::InvalidVacillating(format!(
        "{larger} and {smaller} do not differ by one box"
    )))
}

/// Set-partition tableaux to vacillating tableaux: repeatedly remove the box
/// holding the current largest entry, delete the entry, and row-insert the
/// remainder, recording shapes at every half step.
pub fn bijection_a(spt: &SetPartitionTableau) -> Result<VacillatingTableau> {
    Ok(bijection_a_with_trace(spt)?.0)
}

/// Same as [`bijection_a`], also returning a plain-text step trace in the
/// row-by-row layout used for worked examples.
pub fn bijection_a_with_trace(spt: &SetPartitionTableau) -> Result<(VacillatingTableau, String)> {
    spt.validate()?;
    let k = spt.content_k();
    let n = spt.shape().size();
    let mut shapes_rev: Vec<IntegerPartition> = vec![spt.shape()];
    let mut trace_lines: Vec<String> = vec![format!("j={k}\t{spt}")];
    let mut current = spt.clone();
    for j in (1..=k).rev() {
        // The box containing j: unique because j is the current maximum.
        let mut location = None;
        for (r, row) in current.rows.iter().enumerate() {
            for (c, b) in row.iter().enumerate() {
                if let TabBox::Block(v) = b {
                    if v.contains(&j) && location.replace((r, c)).is_some() {
                        return Err(Error::InvalidTableau(format!("entry {j} appears twice")));
                    }
                }
            }
        }
        let (r, c) =
            location.ok_or_else(|| Error::InvalidTableau(format!("entry {j} is missing")))?;
        // Remove that box; it must sit at an outer corner.
        if c + 1 != current.rows[r].len()
            || (r + 1 < current.rows.len() && current.rows[r + 1].len() > c)
        {
            return Err(Error::InvalidTableau(format!(
                "the box holding {j} is not removable"
            )));
        }
        let mut rows = current.rows.clone();
        let mut boxed = rows[r].pop().unwrap();
        if rows[r].is_empty() {
            rows.remove(r);
        }
        let half = SetPartitionTableau { rows };
        shapes_rev.push(half.shape());
        // Delete j; an emptied box becomes the zero marker.
        if let TabBox::Block(v) = &mut boxed {
            v.retain(|&e| e != j);
            if v.is_empty() {
                boxed = TabBox::Zero;
            }
        }
        trace_lines.push(format!("j={}.5\t{half}  <- [{boxed}]", j - 1));
        let (next, _) = schensted_insert(&half, boxed);
        // Every intermediate stays semistandard under the box-max order.
        next.validate()?;
        shapes_rev.push(next.shape());
        trace_lines.push(format!("j={}\t{next}", j - 1));
        current = next;
    }
    if current.rows.iter().flatten().any(|b| !b.is_zero()) || current.rows.len() != 1 {
        return Err(Error::InvalidTableau(
            "insertion did not terminate at the all-zero row".into(),
        ));
    }
    shapes_rev.reverse();
    trace_lines.reverse();
    let vt = VacillatingTableau::new(n, shapes_rev)?;
    Ok((vt, trace_lines.join("\n")))
}

/// Vacillating tableaux to set-partition tableaux: the step-by-step inverse
/// of [`bijection_a`], built by un-inserting at the removed cell and placing
/// the box (with the new largest entry added) at the added cell.
pub fn bijection_b(vt: &VacillatingTableau) -> Result<SetPartitionTableau> {
    let k = vt.length_k();
    let mut current = SetPartitionTableau::all_zeros(vt.n());
    for j in 1..=k {
        let prev = vt.shape_at(2 * (j - 1));
        let half = vt.shape_at(2 * j - 1);
        let next = vt.shape_at(2 * j);
        let removed = diff_cell(prev, half)?;
        let (rest, mut boxed) = schensted_uninsert(&current, removed)?;
        // Add j; the zero marker is displaced.
        boxed = match boxed {
            TabBox::Zero => TabBox::block([j]),
            TabBox::Block(mut v) => {
                v.push(j);
                TabBox::block(v)
            }
        };
        let (r, c) = diff_cell(next, half)?;
        let mut rows = rest.rows.clone();
        if r == rows.len() {
            rows.push(Vec::new());
        }
        if rows[r].len() != c {
            return Err(Error::InvalidVacillating(format!(
                "cannot place a box at ({r}, {c})"
            )));
        }
        rows[r].push(boxed);
        current = SetPartitionTableau { rows };
        current.validate()?;
    }
    if &current.shape() != vt.final_shape() {
        return Err(Error::InvalidVacillating(
            "reconstruction ended at the wrong shape".into(),
        ));
    }
    Ok(current)
}

/// Splits a shape-`[n]` vacillating tableau of even length `2k` into the pair
/// (first half, reversed second half), both of length `k` and equal final
/// shape.
pub fn halves_split(vt: &VacillatingTableau) -> Result<(VacillatingTableau, VacillatingTableau)> {
    let k2 = vt.length_k();
    if !k2.is_multiple_of(2) {
        return Err(Error::InvalidVacillating("length must be even".into()));
    }
    if vt.final_shape() != &IntegerPartition::new(vec![vt.n()])? {
        return Err(Error::InvalidVacillating("shape must be [n]".into()));
    }
    let k = k2 / 2;
    let first = VacillatingTableau::new(vt.n(), vt.shapes[..=2 * k].to_vec())?;
    let mut second_shapes: Vec<IntegerPartition> = vt.shapes[2 * k..].to_vec();
    second_shapes.reverse();
    let second = VacillatingTableau::new(vt.n(), second_shapes)?;
    Ok((first, second))
}

/// Inverse of [`halves_split`]: concatenates the first half with the reversal
/// of the second half. Both must end at the same shape.
pub fn halves_join(
    first: &VacillatingTableau,
    second: &VacillatingTableau,
) -> Result<VacillatingTableau> {
    if first.n() != second.n() || first.final_shape() != second.final_shape() {
        return Err(Error::InvalidVacillating(
            "halves must match in n and final shape".into(),
        ));
    }
    let mut shapes = first.shapes.clone();
    let mut tail = second.shapes.clone();
    tail.pop();
    tail.reverse();
    shapes.extend(tail);
    VacillatingTableau::new(first.n(), shapes)
}
