//! Integer partitions, hooks, standard and skew tableau counts, and the
//! Stirling/Bell number family.

use std::fmt;

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Validates that `parts` is weakly decreasing with all parts positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidIntegerPartition("zero part".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIntegerPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row length with out-of-range rows read as 0.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, other: &IntegerPartition) -> bool {
        (0..other.len()).all(|i| self.row(i) >= other.row(i))
    }

    /// The partition with one copy of the largest part removed (λ^#).
    pub fn drop_largest_part(&self) -> IntegerPartition {
        IntegerPartition {
            parts: self.parts.iter().copied().skip(1).collect(),
        }
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> IntegerPartition {
        let cols = self.row(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        IntegerPartition { parts }
    }

    /// Parses `"[6,5,3,3]"` (or the same without brackets).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.parts.iter().map(|&p| p.into()).collect())
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A skew shape `outer/inner` with cellwise containment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: IntegerPartition,
    inner: IntegerPartition,
}

impl SkewShape {
    pub fn new(outer: IntegerPartition, inner: IntegerPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidIntegerPartition(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &IntegerPartition {
        &self.outer
    }

    pub fn inner(&self) -> &IntegerPartition {
        &self.inner
    }

    /// Cells of the skew diagram as (row, col), both 0-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for r in 0..self.outer.len() {
            for c in self.inner.row(r)..self.outer.row(r) {
                cells.push((r, c));
            }
        }
        cells
    }

    pub fn cell_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// Stirling number of the second kind `S(k, t)`: set partitions of a `k`-set
/// into exactly `t` blocks. `S(0,0) = 1`, and `S(k,t) = 0` for `t > k`.
pub fn stirling2(k: usize, t: usize) -> BigUint {
    if t > k {
        return BigUint::zero();
    }
    if k == 0 {
        return BigUint::one();
    }
    if t == 0 {
        return BigUint::zero();
    }
    let mut prev = vec![BigUint::zero(); t + 1];
    prev[0] = BigUint::one();
    for _ in 1..=k {
        let mut curr = vec![BigUint::zero(); t + 1];
        for j in 1..=t {
            curr[j] = &prev[j - 1] + &prev[j] * BigUint::from(j);
        }
        prev = curr;
    }
    prev[t].clone()
}

/// Bell number `B(m) = Σ_t S(m, t)`.
pub fn bell(m: usize) -> BigUint {
    (0..=m).map(|t| stirling2(m, t)).sum()
}

/// Restricted Bell number `B(m, n) = Σ_{t≤n} S(m, t)`: set partitions of an
/// `m`-set into at most `n` blocks.
pub fn restricted_bell(m: usize, n: usize) -> BigUint {
    (0..=n.min(m)).map(|t| stirling2(m, t)).sum()
}

/// Hook length of the cell `(row, col)` (0-based) in `lambda`.
pub fn hook_length(lambda: &IntegerPartition, row: usize, col: usize) -> usize {
    let arm = lambda.row(row) - col - 1;
    let leg = lambda
        .parts()
        .iter()
        .skip(row + 1)
        .filter(|&&p| p > col)
        .count();
    arm + leg + 1
}

/// Number of standard Young tableaux of shape `lambda` by the hook-length
/// formula `n! / Π h(b)`.
pub fn hook_dimension(lambda: &IntegerPartition) -> BigUint {
    let n = lambda.size();
    let mut numer = BigUint::one();
    for j in 1..=n {
        numer *= BigUint::from(j);
    }
    let mut denom = BigUint::one();
    for r in 0..lambda.len() {
        for c in 0..lambda.row(r) {
            denom *= BigUint::from(hook_length(lambda, r, c));
        }
    }
    numer / denom
}

/// Number of standard fillings of a skew shape (rows and columns strictly
/// increasing), by direct backtracking over the cells.
pub fn skew_count(shape: &SkewShape) -> BigUint {
    let cells = shape.cells();
    let n = cells.len();
    if n == 0 {
        return BigUint::one();
    }
    let index: std::collections::HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();

    // Values 1..n are placed one at a time at any cell whose left and upper
    // skew neighbors are already filled.
    fn rec(
        cells: &[(usize, usize)],
        index: &std::collections::HashMap<(usize, usize), usize>,
        filled: &mut Vec<bool>,
        placed: usize,
    ) -> BigUint {
        if placed == cells.len() {
            return BigUint::one();
        }
        let mut total = BigUint::zero();
        for i in 0..cells.len() {
            if filled[i] {
                continue;
            }
            let (r, c) = cells[i];
            let left_ok = c == 0 || index.get(&(r, c - 1)).is_none_or(|&j| filled[j]);
            let up_ok = r == 0 || index.get(&(r - 1, c)).is_none_or(|&j| filled[j]);
            if left_ok && up_ok {
                filled[i] = true;
                total += rec(cells, index, filled, placed + 1);
                filled[i] = false;
            }
        }
        total
    }
    let mut filled = vec![false; n];
    rec(&cells, &index, &mut filled, 0)
}

/// Aitken's determinant `f^{λ/ν} = N! · det( 1 / (λ_i - ν_j - i + j)! )`,
/// kept as an independent cross-check on [`skew_count`].
pub fn skew_count_determinant(shape: &SkewShape) -> BigUint {
    let lam = shape.outer();
    let nu = shape.inner();
    let n = lam.len();
    if n == 0 {
        return BigUint::one();
    }
    let entry = |i: usize, j: usize| -> BigRational {
        let v = lam.row(i) as i64 - nu.row(j) as i64 - i as i64 + j as i64;
        if v < 0 {
            return BigRational::zero();
        }
        let mut f = BigInt::one();
        for x in 1..=v {
            f *= BigInt::from(x);
        }
        BigRational::new(BigInt::one(), f)
    };
    let mut mat: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !mat[r][col].is_zero());
        let Some(p) = pivot else {
            return BigUint::zero();
        };
        if p != col {
            mat.swap(p, col);
            det = -det;
        }
        det *= mat[col][col].clone();
        let inv = mat[col][col].recip();
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &mat[col][c];
                mat[r][c] = &mat[r][c] - sub;
            }
        }
    }
    let mut total = det;
    for x in 1..=shape.cell_count() {
        total *= BigRational::from(BigInt::from(x));
    }
    assert!(
        total.is_integer() && !total.is_negative(),
        "Aitken determinant must be a nonnegative integer"
    );
    total.to_integer().to_biguint().unwrap()
}

/// All partitions of `n`, largest-part-first order. `n = 0` yields the single
/// empty partition.
pub fn integer_partitions(n: usize) -> Vec<IntegerPartition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<IntegerPartition>,
    ) {
        if remaining == 0 {
            out.push(IntegerPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions reachable by removing one box from a row end.
pub fn remove_box(lambda: &IntegerPartition) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    for i in 0..lambda.len() {
        if i + 1 == lambda.len() || lambda.parts[i] > lambda.parts[i + 1] {
            let mut parts = lambda.parts.clone();
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.remove(i);
            }
            out.push(IntegerPartition { parts });
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Partitions reachable by adding one box at a row end.
pub fn add_box(lambda: &IntegerPartition) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    for i in 0..=lambda.len() {
        let can = if i == 0 {
            true
        } else {
            lambda.row(i) < lambda.parts[i - 1]
        };
        if can {
            let mut parts = lambda.parts.clone();
            if i == lambda.len() {
                parts.push(1);
            } else {
                parts[i] += 1;
            }
            out.push(IntegerPartition { parts });
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation_and_parse() {
        assert!(IntegerPartition::new(vec![3, 4]).is_err());
        assert!(IntegerPartition::new(vec![3, 0]).is_err());
        assert_eq!(
            IntegerPartition::parse("[6,5,3,3]").unwrap(),
            ip(&[6, 5, 3, 3])
        );
        assert_eq!(
            IntegerPartition::parse("[]").unwrap(),
            IntegerPartition::empty()
        );
        assert_eq!(ip(&[6, 5, 3, 3]).to_string(), "[6,5,3,3]");
        assert_eq!(ip(&[4, 2, 1]).drop_largest_part(), ip(&[2, 1]));
        assert_eq!(ip(&[3, 2]).conjugate(), ip(&[2, 2, 1]));
    }

    #[test]
    fn stirling_and_bell_values() {
        assert_eq!(stirling2(0, 0), BigUint::from(1u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(3, 5), BigUint::from(0u32));
        assert_eq!(restricted_bell(6, 3), BigUint::from(122u32));
        assert_eq!(restricted_bell(8, 2), BigUint::from(128u32));
        assert_eq!(bell(12), BigUint::from(4213597u64));
        assert_eq!(bell(0), BigUint::from(1u32));
    }

    #[test]
    fn restricted_bell_saturates() {
        for m in 0..=10 {
            for n in m..=12 {
                assert_eq!(restricted_bell(m, n), bell(m), "m={m}, n={n}");
            }
        }
    }

    #[test]
    fn restricted_bell_counts_enumeration() {
        use crate::setpart::enumerate_set_partitions;
        use num::ToPrimitive;
        for m in 1..=8 {
            for n in 1..=8 {
                let count = enumerate_set_partitions(m, Some(n)).unwrap().len();
                assert_eq!(
                    restricted_bell(m, n).to_usize().unwrap(),
                    count,
                    "B({m},{n})"
                );
            }
        }
    }

    #[test]
    fn hook_lengths_and_dimensions() {
        // Shaded box of [6,5,3,3] at row 2, column 2 (1-based) has hook 6.
        assert_eq!(hook_length(&ip(&[6, 5, 3, 3]), 1, 1), 6);
        assert_eq!(hook_dimension(&ip(&[5])), BigUint::from(1u32));
        for n in 2..=7 {
            assert_eq!(
                hook_dimension(&ip(&[n - 1, 1])),
                BigUint::from((n - 1) as u32),
                "f^[n-1,1] at n={n}"
            );
        }
        assert_eq!(hook_dimension(&ip(&[2, 1])), BigUint::from(2u32));
    }

    /// Σ_{λ⊢n} (f^λ)² = n!.
    #[test]
    fn squared_dimensions_sum_to_factorial() {
        for n in 1..=8 {
            let mut total = BigUint::from(0u32);
            for lam in integer_partitions(n) {
                let f = hook_dimension(&lam);
                total += &f * &f;
            }
            let mut fact = BigUint::from(1u32);
            for j in 1..=n {
                fact *= BigUint::from(j as u32);
            }
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn skew_counts() {
        // Empty inner shape agrees with the hook-length formula.
        for n in 1..=6 {
            for lam in integer_partitions(n) {
                let shape = SkewShape::new(lam.clone(), IntegerPartition::empty()).unwrap();
                assert_eq!(skew_count(&shape), hook_dimension(&lam), "λ = {lam}");
            }
        }
        let shape = SkewShape::new(ip(&[2, 1]), ip(&[1])).unwrap();
        assert_eq!(skew_count(&shape), BigUint::from(2u32));
        // Containment failure is an error at construction.
        assert!(SkewShape::new(ip(&[2, 1]), ip(&[3])).is_err());
    }

    #[test]
    fn skew_count_matches_aitken_determinant() {
        for n in 1..=6 {
            for lam in integer_partitions(n) {
                for inner_size in 0..=n {
                    for nu in integer_partitions(inner_size) {
                        if !lam.contains(&nu) {
                            continue;
                        }
                        let shape = SkewShape::new(lam.clone(), nu.clone()).unwrap();
                        assert_eq!(
                            skew_count(&shape),
                            skew_count_determinant(&shape),
                            "λ = {lam}, ν = {nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn partition_enumeration_and_boxes() {
        assert_eq!(integer_partitions(5).len(), 7);
        assert_eq!(integer_partitions(0).len(), 1);
        assert_eq!(remove_box(&ip(&[4])), vec![ip(&[3])]);
        let mut added = add_box(&ip(&[3]));
        added.sort();
        let mut expect = vec![ip(&[4]), ip(&[3, 1])];
        expect.sort();
        assert_eq!(added, expect);
        assert_eq!(remove_box(&ip(&[2, 2])), vec![ip(&[2, 1])]);
        assert_eq!(add_box(&ip(&[2, 2])), {
            let mut v = vec![ip(&[3, 2]), ip(&[2, 2, 1])];
            v.sort();
            v
        });
    }
}
