//! Set partitions of `{1, ..., m}`, the refinement lattice, and its Möbius
//! function.
//!
//! A [`SetPartition`] is stored as a restricted-growth string: element `i`
//! carries the index of its block, blocks numbered by first occurrence. That
//! string is simultaneously the canonical form (equality and ordering are
//! label-wise) and the standard labeling used by the tensor representation.

use std::fmt;

use num::{BigInt, One};

use crate::{Error, Result};

/// A partition of `{1, ..., m}` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    /// `labels[i]` is the 0-based block index of element `i + 1`; the vector
    /// is a restricted-growth string: `labels[0] == 0` and each label exceeds
    /// the running maximum by at most one.
    labels: Vec<u8>,
}

impl SetPartition {
    /// Builds a partition from explicit blocks covering `{1, ..., m}`.
    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if m > u8::MAX as usize {
            return Err(Error::InvalidSetPartition(format!(
                "ground set of size {m} is larger than supported"
            )));
        }
        let mut owner = vec![None::<usize>; m];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > m {
                    return Err(Error::InvalidSetPartition(format!(
                        "element {e} outside [1, {m}]"
                    )));
                }
                if owner[e - 1].replace(b).is_some() {
                    return Err(Error::InvalidSetPartition(format!(
                        "element {e} appears twice"
                    )));
                }
            }
        }
        let mut relabel = vec![None::<u8>; blocks.len()];
        let mut next = 0u8;
        let mut labels = Vec::with_capacity(m);
        for e in 0..m {
            let b = owner[e].ok_or_else(|| {
                Error::InvalidSetPartition(format!("element {} not covered", e + 1))
            })?;
            let lab = *relabel[b].get_or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
            labels.push(lab);
        }
        Ok(SetPartition { labels })
    }

    /// Builds a partition directly from a restricted-growth string.
    pub fn from_labels(labels: Vec<u8>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let mut max_seen = 0u8;
        for (i, &l) in labels.iter().enumerate() {
            let bound = if i == 0 { 0 } else { max_seen + 1 };
            if l > bound {
                return Err(Error::InvalidSetPartition(
                    "labels are not a restricted-growth string".into(),
                ));
            }
            max_seen = max_seen.max(l);
        }
        Ok(SetPartition { labels })
    }

    /// The finest partition: every element a singleton.
    pub fn singletons(m: usize) -> Self {
        assert!(m >= 1 && m <= u8::MAX as usize);
        SetPartition {
            labels: (0..m as u8).collect(),
        }
    }

    /// The coarsest partition: one block.
    pub fn one_block(m: usize) -> Self {
        assert!(m >= 1);
        SetPartition { labels: vec![0; m] }
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&l| l as usize).max().unwrap() + 1
    }

    /// 0-based block index of element `e` (1-based).
    pub fn block_index(&self, e: usize) -> usize {
        self.labels[e - 1] as usize
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a - 1] == self.labels[b - 1]
    }

    /// The restricted-growth string; block indices follow first occurrence,
    /// which is exactly the standard labeling of the partition.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Blocks as sorted element lists, ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    /// The partition induced on a subset of the ground set. `elems` lists the
    /// chosen elements in the order they should be renumbered `1, ..., len`.
    pub fn restrict(&self, elems: &[usize]) -> SetPartition {
        let mut relabel: Vec<Option<u8>> = vec![None; self.block_count()];
        let mut next = 0u8;
        let mut labels = Vec::with_capacity(elems.len());
        for &e in elems {
            let b = self.labels[e - 1] as usize;
            let lab = *relabel[b].get_or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
            labels.push(lab);
        }
        SetPartition { labels }
    }

    /// Coarsens by uniting the blocks named (by 0-based index) in each group.
    pub(crate) fn merge_block_groups(&self, groups: &[Vec<usize>]) -> SetPartition {
        let nb = self.block_count();
        let mut target: Vec<usize> = (0..nb).collect();
        for group in groups {
            if let Some((&first, rest)) = group.split_first() {
                for &b in rest {
                    let t = target[first];
                    let s = target[b];
                    if t != s {
                        for x in target.iter_mut() {
                            if *x == s {
                                *x = t;
                            }
                        }
                    }
                }
            }
        }
        let mut relabel: Vec<Option<u8>> = vec![None; nb];
        let mut next = 0u8;
        let labels = self
            .labels
            .iter()
            .map(|&l| {
                let b = target[l as usize];
                *relabel[b].get_or_insert_with(|| {
                    let l = next;
                    next += 1;
                    l
                })
            })
            .collect();
        SetPartition { labels }
    }

    /// Parses either the compact form `"1,4,5|2,8|3,6,7"` or a JSON
    /// array-of-arrays `[[1,4,5],[2,8],[3,6,7]]`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let blocks: Vec<Vec<usize>> = if s.starts_with('[') {
            let v: serde_json::Value =
                serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            let outer = v
                .as_array()
                .ok_or_else(|| Error::Parse("expected a JSON array of arrays".into()))?;
            outer
                .iter()
                .map(|b| {
                    b.as_array()
                        .ok_or_else(|| Error::Parse("expected a JSON array of arrays".into()))?
                        .iter()
                        .map(|x| {
                            x.as_u64()
                                .map(|u| u as usize)
                                .ok_or_else(|| Error::Parse(format!("bad element {x}")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?
        } else {
            s.split('|')
                .map(|b| {
                    b.split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|e| Error::Parse(format!("bad element {x:?}: {e}")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?
        };
        let m = blocks.iter().flatten().copied().max().unwrap_or(0);
        if m == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Self::from_blocks(m, &blocks)
    }

    /// JSON array-of-arrays form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.blocks()
                .into_iter()
                .map(|b| serde_json::Value::Array(b.into_iter().map(|e| e.into()).collect()))
                .collect(),
        )
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// Enumerates all set partitions of `{1, ..., m}` in restricted-growth-string
/// order, optionally bounded by a maximum block count. The count is the Bell
/// number `B(m)`, or the restricted Bell number `B(m, max_blocks)`.
pub fn enumerate_set_partitions(m: usize, max_blocks: Option<usize>) -> Result<Vec<SetPartition>> {
    if m == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if m > u8::MAX as usize {
        return Err(Error::InvalidSetPartition(format!(
            "ground set of size {m} is larger than supported"
        )));
    }
    let cap = max_blocks.unwrap_or(m).min(m);
    if cap == 0 {
        return Ok(Vec::new());
    }
    fn rec(labels: &mut Vec<u8>, pos: usize, used: usize, cap: usize, out: &mut Vec<SetPartition>) {
        if pos == labels.len() {
            out.push(SetPartition {
                labels: labels.clone(),
            });
            return;
        }
        let top = if used < cap { used } else { used - 1 };
        for l in 0..=top {
            labels[pos] = l as u8;
            rec(labels, pos + 1, used.max(l + 1), cap, out);
        }
    }
    let mut out = Vec::new();
    let mut labels = vec![0u8; m];
    rec(&mut labels, 1, 1, cap, &mut out);
    Ok(out)
}

/// Tests `pi ⪯ rho` in the refinement order: every block of `pi` lies inside
/// a block of `rho`.
pub fn is_refinement(pi: &SetPartition, rho: &SetPartition) -> Result<bool> {
    if pi.ground_size() != rho.ground_size() {
        return Err(Error::DimensionMismatch(
            pi.ground_size(),
            rho.ground_size(),
        ));
    }
    let mut image = vec![None::<u8>; pi.block_count()];
    for i in 0..pi.ground_size() {
        let b = pi.labels[i] as usize;
        let target = rho.labels[i];
        match image[b] {
            None => image[b] = Some(target),
            Some(t) if t == target => {}
            Some(_) => return Ok(false),
        }
    }
    Ok(true)
}

/// All coarsenings of `pi` (including `pi` itself), i.e. every `rho` with
/// `pi ⪯ rho`, in a deterministic order.
pub fn coarsenings(pi: &SetPartition) -> Vec<SetPartition> {
    let nb = pi.block_count();
    let block_partitions = enumerate_set_partitions(nb, None).expect("block count is at least one");
    let mut out: Vec<SetPartition> = block_partitions
        .iter()
        .map(|bp| {
            // bp partitions the blocks of pi; push the grouping down to elements.
            let groups: Vec<Vec<usize>> = bp
                .blocks()
                .into_iter()
                .map(|g| g.into_iter().map(|b| b - 1).collect())
                .collect();
            pi.merge_block_groups(&groups)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Möbius function of the set-partition lattice: if block `i` of `rho` is the
/// union of `b_i` blocks of `pi`, then `μ(pi, rho) = Π (-1)^(b_i-1) (b_i-1)!`.
pub fn mobius(pi: &SetPartition, rho: &SetPartition) -> Result<BigInt> {
    if !is_refinement(pi, rho)? {
        return Err(Error::NotComparable);
    }
    let mut counts = vec![0usize; rho.block_count()];
    let mut seen = vec![false; pi.block_count()];
    for i in 0..pi.ground_size() {
        let pb = pi.labels[i] as usize;
        if !seen[pb] {
            seen[pb] = true;
            counts[rho.labels[i] as usize] += 1;
        }
    }
    let mut result = BigInt::one();
    for &b in &counts {
        let mut factor = BigInt::one();
        for j in 1..b {
            factor *= BigInt::from(j);
        }
        if b % 2 == 0 {
            factor = -factor;
        }
        result *= factor;
    }
    Ok(result)
}

/// For `pi` on an even ground set `2k`: the partitions induced on the bottom
/// row `{1..k}` and the top row `{k+1..2k}` (reduced mod `k`), plus `|pi|`.
pub fn propagating_data(pi: &SetPartition) -> Result<(SetPartition, SetPartition, usize)> {
    let m = pi.ground_size();
    if !m.is_multiple_of(2) {
        return Err(Error::OddGroundSet(m));
    }
    let k = m / 2;
    let bottom: Vec<usize> = (1..=k).collect();
    let top: Vec<usize> = (k + 1..=m).collect();
    Ok((pi.restrict(&bottom), pi.restrict(&top), pi.block_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    /// Bell numbers by the Bell-triangle recurrence, independent of the
    /// Stirling-number path used elsewhere.
    fn bell_triangle(upto: usize) -> Vec<u64> {
        let mut bells = vec![1u64];
        let mut row = vec![1u64];
        for _ in 1..=upto {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let y = next.last().unwrap() + x;
                next.push(y);
            }
            bells.push(next[0]);
            row = next;
        }
        bells
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = SetPartition::from_blocks(4, &[vec![2, 1], vec![4, 3]]).unwrap();
        let b = SetPartition::from_blocks(4, &[vec![3, 4], vec![1, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1,2|3,4");
        assert_eq!(a.labels(), &[0, 0, 1, 1]);
    }

    #[test]
    fn from_blocks_rejects_bad_input() {
        assert!(SetPartition::from_blocks(0, &[]).is_err());
        assert!(SetPartition::from_blocks(3, &[vec![1, 2]]).is_err());
        assert!(SetPartition::from_blocks(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::from_blocks(3, &[vec![1, 2, 3], vec![]]).is_err());
        assert!(SetPartition::from_blocks(3, &[vec![1, 2, 4]]).is_err());
    }

    #[test]
    fn parse_both_forms() {
        let a = sp("1,4,5|2,8|3,6,7");
        let b = sp("[[1,4,5],[2,8],[3,6,7]]");
        assert_eq!(a, b);
        assert_eq!(a.ground_size(), 8);
        assert_eq!(a.to_json().to_string(), "[[1,4,5],[2,8],[3,6,7]]");
        assert!(SetPartition::parse("1,2|2,3").is_err());
        assert!(SetPartition::parse("").is_err());
    }

    #[test]
    fn enumerate_counts_match_bell_triangle() {
        let bells = bell_triangle(10);
        for m in 1..=10 {
            let all = enumerate_set_partitions(m, None).unwrap();
            assert_eq!(all.len() as u64, bells[m], "B({m})");
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len(), "duplicates at m = {m}");
        }
    }

    #[test]
    fn enumerate_singleton_ground_set() {
        let all = enumerate_set_partitions(1, None).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn enumerate_m4_gives_15() {
        assert_eq!(enumerate_set_partitions(4, None).unwrap().len(), 15);
    }

    #[test]
    fn enumerate_restricted_m6_max3_gives_122() {
        assert_eq!(enumerate_set_partitions(6, Some(3)).unwrap().len(), 122);
    }

    #[test]
    fn enumerate_rejects_empty_ground_set() {
        assert!(matches!(
            enumerate_set_partitions(0, None),
            Err(Error::EmptyGroundSet)
        ));
    }

    #[test]
    fn refinement_basics() {
        let fine = SetPartition::singletons(4);
        let coarse = SetPartition::one_block(4);
        let pi = sp("1,2|3,4");
        assert!(is_refinement(&pi, &pi).unwrap());
        assert!(is_refinement(&fine, &coarse).unwrap());
        assert!(!is_refinement(&sp("1,2|3,4"), &sp("1,3|2,4")).unwrap());
        assert!(is_refinement(&fine, &SetPartition::singletons(5)).is_err());
    }

    #[test]
    fn coarsenings_examples() {
        let top = SetPartition::one_block(5);
        assert_eq!(coarsenings(&top), vec![top.clone()]);
        // The five coarsenings of 1|23|4.
        let c = coarsenings(&sp("1|2,3|4"));
        assert_eq!(c.len(), 5);
        let expect = ["1|2,3|4", "1,2,3|4", "1|2,3,4", "1,4|2,3", "1,2,3,4"];
        for e in expect {
            assert!(c.contains(&sp(e)), "missing {e}");
        }
        // And the bottom of Π_4 sees the whole lattice.
        assert_eq!(coarsenings(&SetPartition::singletons(4)).len(), 15);
    }

    #[test]
    fn coarsenings_agree_with_filtered_enumeration() {
        for m in 1..=6 {
            for pi in enumerate_set_partitions(m, None).unwrap() {
                let direct = coarsenings(&pi);
                let mut filtered: Vec<_> = enumerate_set_partitions(m, None)
                    .unwrap()
                    .into_iter()
                    .filter(|rho| is_refinement(&pi, rho).unwrap())
                    .collect();
                let mut direct_sorted = direct.clone();
                direct_sorted.sort();
                filtered.sort();
                assert_eq!(direct_sorted, filtered, "pi = {pi}");
            }
        }
    }

    #[test]
    fn mobius_values() {
        let pi = sp("1|2,3|4");
        assert_eq!(mobius(&pi, &pi).unwrap(), BigInt::from(1));
        assert_eq!(
            mobius(&SetPartition::singletons(4), &SetPartition::one_block(4)).unwrap(),
            BigInt::from(-6)
        );
        assert_eq!(
            mobius(&pi, &SetPartition::one_block(4)).unwrap(),
            BigInt::from(2)
        );
        assert!(matches!(
            mobius(&sp("1,2|3,4"), &sp("1,3|2,4")),
            Err(Error::NotComparable)
        ));
    }

    /// The closed product formula against the defining lattice recursion.
    #[test]
    fn mobius_matches_lattice_recursion() {
        fn mobius_recursive(pi: &SetPartition, rho: &SetPartition) -> i64 {
            if pi == rho {
                return 1;
            }
            let mut total = 0i64;
            for sigma in coarsenings(pi) {
                if &sigma != rho && is_refinement(&sigma, rho).unwrap() {
                    total += mobius_recursive(pi, &sigma);
                }
            }
            -total
        }
        for m in 1..=5 {
            for pi in enumerate_set_partitions(m, None).unwrap() {
                for rho in coarsenings(&pi) {
                    let fast = mobius(&pi, &rho).unwrap().to_i64().unwrap();
                    assert_eq!(fast, mobius_recursive(&pi, &rho), "μ({pi}, {rho})");
                }
            }
        }
    }

    /// Zeta/Möbius inversion: Σ_{π⪯σ⪯ϱ} μ(σ,ϱ) = δ_{π,ϱ}.
    #[test]
    fn zeta_mobius_inversion() {
        for m in 1..=6 {
            for pi in enumerate_set_partitions(m, None).unwrap() {
                for rho in coarsenings(&pi) {
                    let mut total = BigInt::from(0);
                    for sigma in coarsenings(&pi) {
                        if is_refinement(&sigma, &rho).unwrap() {
                            total += mobius(&sigma, &rho).unwrap();
                        }
                    }
                    let expected = BigInt::from(i32::from(pi == rho));
                    assert_eq!(total, expected, "π = {pi}, ϱ = {rho}");
                }
            }
        }
        // m = 7, 8: the widest intervals, from the all-singleton partition.
        for m in 7..=8 {
            let top = SetPartition::one_block(m);
            let mut total = BigInt::from(0);
            for sigma in enumerate_set_partitions(m, None).unwrap() {
                total += mobius(&sigma, &top).unwrap();
            }
            assert_eq!(total, BigInt::from(0), "bottom-to-top interval at m = {m}");
            // And a mid-lattice coarsening.
            let mid =
                SetPartition::from_blocks(m, &[(1..=3).collect(), (4..=m).collect()]).unwrap();
            let mut total = BigInt::from(0);
            for sigma in enumerate_set_partitions(m, None).unwrap() {
                if is_refinement(&sigma, &mid).unwrap() {
                    total += mobius(&sigma, &mid).unwrap();
                }
            }
            assert_eq!(total, BigInt::from(0), "mid interval at m = {m}");
        }
    }

    #[test]
    fn propagating_data_examples() {
        // Identity pattern: all columns are through-strands.
        let k = 4;
        let ident =
            SetPartition::from_blocks(2 * k, &(1..=k).map(|c| vec![c, k + c]).collect::<Vec<_>>())
                .unwrap();
        let (bot, top, count) = propagating_data(&ident).unwrap();
        assert_eq!(bot, SetPartition::singletons(k));
        assert_eq!(top, SetPartition::singletons(k));
        assert_eq!(count, k);

        // Worked example on eight points.
        let pi = sp("1,4,5|2,8|3,6,7");
        let (bot, top, count) = propagating_data(&pi).unwrap();
        assert_eq!(bot, sp("1,4|2|3"));
        assert_eq!(top, sp("1|2,3|4"));
        assert_eq!(count, 3);

        let pi = sp("1,2,3|4,5,6");
        let (bot, top, count) = propagating_data(&pi).unwrap();
        assert_eq!(bot, SetPartition::one_block(3));
        assert_eq!(top, SetPartition::one_block(3));
        assert_eq!(count, 2);

        assert!(matches!(
            propagating_data(&sp("1|2,3")),
            Err(Error::OddGroundSet(3))
        ));
    }
}
