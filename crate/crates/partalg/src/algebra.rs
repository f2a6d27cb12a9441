//! Elements of `P_k(n)` and `P_{k+1/2}(n)` in the diagram and orbit bases:
//! multiplication, change of basis, generators, presentation relations, and
//! the essential idempotents that generate the kernel of the tensor action.
//!
//! Levels are encoded by `two_k`. Even `two_k = 2k` is the whole algebra
//! `P_k(n)` on the partition lattice of `[1, 2k]`; odd `two_k = 2K - 1` is
//! the half algebra `P_{K-1/2}(n)`, spanned by partitions of `[1, 2K]` that
//! keep `K` and `2K` in one block. Diagrams have bottom vertices `1..K` and
//! top vertices `K+1..2K`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::setpart::{coarsenings, mobius, propagating_data, SetPartition};
use crate::{Error, Rational, Result};

/// Which of the two distinguished bases the coefficients refer to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Diagram,
    Orbit,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Diagram => write!(f, "diagram"),
            Basis::Orbit => write!(f, "orbit"),
        }
    }
}

/// Truncation mode for orbit-basis multiplication.
///
/// `Abstract` keeps every coarsening term, which is the multiplication of the
/// abstract algebra; `Image` drops terms with more than `n` blocks, which is
/// the multiplication of the centralizer image where those terms act as zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitProductMode {
    Abstract,
    Image,
}

/// Ground-set size used by level `two_k`: `2k` for even, `two_k + 1` for odd.
pub fn ground_size(two_k: usize) -> usize {
    two_k + (two_k % 2)
}

/// A finite linear combination of set partitions with exact rational
/// coefficients, tagged with its basis and the parameters `(two_k, n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    two_k: usize,
    n: usize,
    basis: Basis,
    terms: BTreeMap<SetPartition, Rational>,
}

impl AlgebraElement {
    /// Builds an element, validating every key and dropping zero coefficients.
    pub fn new(
        basis: Basis,
        two_k: usize,
        n: usize,
        terms: impl IntoIterator<Item = (SetPartition, Rational)>,
    ) -> Result<Self> {
        assert!(two_k >= 1 && n >= 1, "two_k and n must be positive");
        let mut map: BTreeMap<SetPartition, Rational> = BTreeMap::new();
        for (key, coeff) in terms {
            check_key(&key, two_k)?;
            if coeff.is_zero() {
                continue;
            }
            let entry = map.entry(key).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            two_k,
            n,
            basis,
            terms: map,
        })
    }

    pub fn zero(basis: Basis, two_k: usize, n: usize) -> Self {
        AlgebraElement {
            two_k,
            n,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis element with the given coefficient.
    pub fn single(
        basis: Basis,
        two_k: usize,
        n: usize,
        key: SetPartition,
        coeff: Rational,
    ) -> Result<Self> {
        Self::new(basis, two_k, n, [(key, coeff)])
    }

    /// The identity `I_k` (diagram basis): all columns are through-strands.
    pub fn identity(two_k: usize, n: usize) -> Self {
        let key = identity_partition(two_k);
        AlgebraElement {
            two_k,
            n,
            basis: Basis::Diagram,
            terms: BTreeMap::from([(key, Rational::one())]),
        }
    }

    pub fn two_k(&self) -> usize {
        self.two_k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn ground_size(&self) -> usize {
        ground_size(self.two_k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, key: &SetPartition) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        assert_eq!(self.basis, other.basis, "cannot add across bases");
        let mut terms = self.terms.clone();
        for (key, coeff) in &other.terms {
            let entry = terms.entry(key.clone()).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            two_k: self.two_k,
            n: self.n,
            basis: self.basis,
            terms,
        })
    }

    pub fn scale(&self, factor: &Rational) -> AlgebraElement {
        if factor.is_zero() {
            return AlgebraElement::zero(self.basis, self.two_k, self.n);
        }
        AlgebraElement {
            two_k: self.two_k,
            n: self.n,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.two_k != other.two_k || self.n != other.n {
            return Err(Error::ParameterMismatch(
                self.two_k,
                self.n,
                other.two_k,
                other.n,
            ));
        }
        Ok(())
    }

    /// Rewrites in the orbit basis via `d_π = Σ_{π ⪯ ϱ} x_ϱ`.
    pub fn to_orbit(&self) -> AlgebraElement {
        if self.basis == Basis::Orbit {
            return self.clone();
        }
        let mut terms: BTreeMap<SetPartition, Rational> = BTreeMap::new();
        for (key, coeff) in &self.terms {
            for rho in coarsenings(key) {
                let entry = terms.entry(rho).or_insert_with(Rational::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        AlgebraElement {
            two_k: self.two_k,
            n: self.n,
            basis: Basis::Orbit,
            terms,
        }
    }

    /// Rewrites in the diagram basis via `x_π = Σ_{π ⪯ ϱ} μ(π, ϱ) d_ϱ`.
    pub fn to_diagram(&self) -> AlgebraElement {
        if self.basis == Basis::Diagram {
            return self.clone();
        }
        let mut terms: BTreeMap<SetPartition, Rational> = BTreeMap::new();
        for (key, coeff) in &self.terms {
            for rho in coarsenings(key) {
                let mu = mobius(key, &rho).expect("coarsening is comparable");
                let entry = terms.entry(rho).or_insert_with(Rational::zero);
                *entry += coeff * Rational::from(mu);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        AlgebraElement {
            two_k: self.two_k,
            n: self.n,
            basis: Basis::Diagram,
            terms,
        }
    }

    pub fn to_basis(&self, basis: Basis) -> AlgebraElement {
        match basis {
            Basis::Diagram => self.to_diagram(),
            Basis::Orbit => self.to_orbit(),
        }
    }

    /// Diagram-basis product: bilinear extension of
    /// `d_{π1} d_{π2} = n^{[π1∗π2]} d_{π1∗π2}` (stack `π1` over `π2`, remove
    /// middle-only components, one factor `n` each). Operands in the orbit
    /// basis are converted first.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let a = self.to_diagram();
        let b = other.to_diagram();
        let k = self.ground_size() / 2;
        let n_big = BigInt::from(self.n);
        let mut terms: BTreeMap<SetPartition, Rational> = BTreeMap::new();
        for (p1, c1) in &a.terms {
            for (p2, c2) in &b.terms {
                let (product, removed) = concatenate(p1, p2, k);
                let mut coeff = c1 * c2;
                for _ in 0..removed {
                    coeff *= Rational::from(n_big.clone());
                }
                let entry = terms.entry(product).or_insert_with(Rational::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            two_k: self.two_k,
            n: self.n,
            basis: Basis::Diagram,
            terms,
        })
    }

    /// Orbit-basis product. `x_{π1} x_{π2}` vanishes unless the partition
    /// `π1` induces on its bottom row equals (mod `k`) the one `π2` induces
    /// on its top row; otherwise it is
    /// `Σ_ϱ (n − |ϱ|)_{[π1∗π2]} x_ϱ` over all coarsenings `ϱ` of `π1∗π2`
    /// obtained by joining top-row-only blocks of `π1` with bottom-row-only
    /// blocks of `π2` (a partial matching, "join nothing" included).
    pub fn multiply_orbit(
        &self,
        other: &AlgebraElement,
        mode: OrbitProductMode,
    ) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let a = self.to_orbit();
        let b = other.to_orbit();
        let k = self.ground_size() / 2;
        let mut terms: BTreeMap<SetPartition, Rational> = BTreeMap::new();
        for (p1, c1) in &a.terms {
            let (bot1, _, _) = propagating_data(p1).expect("even ground set");
            for (p2, c2) in &b.terms {
                let (_, top2, _) = propagating_data(p2).expect("even ground set");
                if bot1 != top2 {
                    continue;
                }
                let coeff = c1 * c2;
                for (rho, factor) in orbit_product_terms(p1, p2, k, self.n) {
                    if mode == OrbitProductMode::Image && rho.block_count() > self.n {
                        continue;
                    }
                    let entry = terms.entry(rho).or_insert_with(Rational::zero);
                    *entry += &coeff * Rational::from(factor);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            two_k: self.two_k,
            n: self.n,
            basis: Basis::Orbit,
            terms,
        })
    }

    /// Image under the tower `P_k ⊂ P_{k+1/2} ⊂ P_{k+1}`: vertical
    /// through-strands are adjoined on the right until `target_two_k`.
    ///
    /// The tower maps are algebra homomorphisms defined by widening diagram
    /// basis keys, so orbit-basis input is routed through the diagram basis
    /// and converted back afterwards (a widened orbit key alone is not the
    /// homomorphic image).
    pub fn embed(&self, target_two_k: usize) -> Result<AlgebraElement> {
        if target_two_k < self.two_k {
            return Err(Error::ShrinkingEmbed {
                target: target_two_k,
                current: self.two_k,
            });
        }
        if self.basis == Basis::Orbit {
            return Ok(self.to_diagram().embed(target_two_k)?.to_orbit());
        }
        let mut current = self.clone();
        while current.two_k < target_two_k {
            current = if current.two_k.is_multiple_of(2) {
                // Even to odd: the ground set grows by one column, which is a
                // new through-strand shared by both rows.
                let k = current.two_k / 2;
                let mut terms = BTreeMap::new();
                for (key, coeff) in &current.terms {
                    terms.insert(widen_by_column(key, k), coeff.clone());
                }
                AlgebraElement {
                    two_k: current.two_k + 1,
                    n: current.n,
                    basis: current.basis,
                    terms,
                }
            } else {
                // Odd to even: same ground set, the half-algebra constraint is
                // simply dropped.
                AlgebraElement {
                    two_k: current.two_k + 1,
                    ..current
                }
            };
        }
        Ok(current)
    }

    /// The documented JSON element format.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "two_k": self.two_k,
            "n": self.n,
            "basis": self.basis.to_string(),
            "terms": self.terms.iter().map(|(key, coeff)| {
                serde_json::json!({
                    "partition": key.to_string(),
                    "coeff": coeff.to_string(),
                })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let two_k = obj
            .get("two_k")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing two_k".into()))? as usize;
        let n = obj
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing n".into()))? as usize;
        let basis = match obj.get("basis").and_then(|x| x.as_str()) {
            Some("diagram") => Basis::Diagram,
            Some("orbit") => Basis::Orbit,
            other => return Err(Error::Parse(format!("bad basis {other:?}"))),
        };
        let mut terms = Vec::new();
        let list = obj
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        for item in list {
            let part = item
                .get("partition")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Parse("term without partition".into()))?;
            let coeff = item
                .get("coeff")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Parse("term without coeff".into()))?;
            let key = SetPartition::parse(part)?;
            let key = pad_to_ground(&key, ground_size(two_k))?;
            let coeff: Rational = coeff
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient {coeff:?}: {e}")))?;
            terms.push((key, coeff));
        }
        Self::new(basis, two_k, n, terms)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::Diagram => "d",
            Basis::Orbit => "x",
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, coeff)| format!("{coeff} {sym}[{key}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraElement(two_k={}, n={}, {})",
            self.two_k, self.n, self
        )
    }
}

/// Validates one key against `two_k`: correct ground size, and for odd levels
/// membership in the half lattice.
fn check_key(key: &SetPartition, two_k: usize) -> Result<()> {
    let ground = ground_size(two_k);
    if key.ground_size() != ground {
        return Err(Error::InconsistentGroundSet {
            two_k,
            got: key.ground_size(),
        });
    }
    if two_k % 2 == 1 {
        let mid = ground / 2;
        if !key.same_block(mid, ground) {
            return Err(Error::HalfAlgebraViolation { mid, last: ground });
        }
    }
    Ok(())
}

/// The identity pattern `{1, k+1 | 2, k+2 | ... | k, 2k}` at level `two_k`.
pub fn identity_partition(two_k: usize) -> SetPartition {
    let k = ground_size(two_k) / 2;
    SetPartition::from_blocks(2 * k, &(1..=k).map(|c| vec![c, k + c]).collect::<Vec<_>>())
        .expect("identity pattern is valid")
}

/// Re-indexes a partition on `2k` points to `2k + 2` points with a fresh
/// through-column `{k+1, 2k+2}` on the right.
fn widen_by_column(key: &SetPartition, k: usize) -> SetPartition {
    let mut blocks: Vec<Vec<usize>> = key
        .blocks()
        .into_iter()
        .map(|b| {
            b.into_iter()
                .map(|e| if e <= k { e } else { e + 1 })
                .collect()
        })
        .collect();
    blocks.push(vec![k + 1, 2 * k + 2]);
    SetPartition::from_blocks(2 * k + 2, &blocks).expect("widening preserves validity")
}

/// Accepts keys parsed from user input whose maximum element fell short of
/// the ground size; missing elements become singletons.
fn pad_to_ground(key: &SetPartition, ground: usize) -> Result<SetPartition> {
    if key.ground_size() == ground {
        return Ok(key.clone());
    }
    if key.ground_size() > ground {
        return Err(Error::InconsistentGroundSet {
            two_k: ground,
            got: key.ground_size(),
        });
    }
    let mut blocks = key.blocks();
    for e in key.ground_size() + 1..=ground {
        blocks.push(vec![e]);
    }
    SetPartition::from_blocks(ground, &blocks)
}

/// Stacks `π1` over `π2` (each on `2k` points), identifying `π1`'s bottom row
/// with `π2`'s top row. Returns the resulting partition (bottom row from
/// `π2`, top row from `π1`) and the number of removed middle-only components.
pub fn concatenate(p1: &SetPartition, p2: &SetPartition, k: usize) -> (SetPartition, usize) {
    // Union-find over 3k nodes: 0..k bottom (π2), k..2k middle, 2k..3k top (π1).
    let mut parent: Vec<usize> = (0..3 * k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            parent[r] = parent[parent[r]];
            r = parent[r];
        }
        r
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let ra = find(parent, a);
        let rb = find(parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    };
    // π2: element e ≤ k is a bottom node, e > k a middle node.
    let p2_node = |e: usize| if e <= k { e - 1 } else { k + (e - k) - 1 };
    // π1: element e ≤ k is a middle node, e > k a top node.
    let p1_node = |e: usize| {
        if e <= k {
            k + e - 1
        } else {
            2 * k + (e - k) - 1
        }
    };
    for block in p2.blocks() {
        for w in block.windows(2) {
            union(&mut parent, p2_node(w[0]), p2_node(w[1]));
        }
    }
    for block in p1.blocks() {
        for w in block.windows(2) {
            union(&mut parent, p1_node(w[0]), p1_node(w[1]));
        }
    }
    // Components keeping only their bottom/top members become result blocks;
    // components made of middle nodes alone are counted and dropped.
    let mut groups: BTreeMap<usize, (Vec<usize>, bool)> = BTreeMap::new();
    for node in 0..3 * k {
        let root = find(&mut parent, node);
        let entry = groups.entry(root).or_insert_with(|| (Vec::new(), false));
        if node < k {
            entry.0.push(node + 1);
        } else if node >= 2 * k {
            entry.0.push(k + (node - 2 * k) + 1);
        } else {
            entry.1 = true;
        }
    }
    let mut removed = 0usize;
    let mut blocks = Vec::new();
    for (_, (members, touches_middle)) in groups {
        if members.is_empty() {
            if touches_middle {
                removed += 1;
            }
        } else {
            blocks.push(members);
        }
    }
    let result = SetPartition::from_blocks(2 * k, &blocks).expect("concatenation is a partition");
    (result, removed)
}

/// The coarsening terms of one orbit product `x_{π1} x_{π2}` (middles already
/// known to match): pairs `(ϱ, (n − |ϱ|)_{[π1∗π2]})` over all partial
/// matchings of `π1`'s top-row-only blocks with `π2`'s bottom-row-only blocks.
fn orbit_product_terms(
    p1: &SetPartition,
    p2: &SetPartition,
    k: usize,
    n: usize,
) -> Vec<(SetPartition, BigInt)> {
    let (base, removed) = concatenate(p1, p2, k);
    // Top-row-only blocks of π1 and bottom-row-only blocks of π2 survive into
    // the concatenation untouched; locate them as blocks of `base`.
    let mut top_only: Vec<usize> = Vec::new();
    let mut bottom_only: Vec<usize> = Vec::new();
    for (idx, block) in base.blocks().iter().enumerate() {
        if block.iter().all(|&e| e > k) {
            // A top-row block of the result is a block of π1; joinable only
            // if it was already a full block of π1 (top-only there).
            if is_block_of(p1, block) {
                top_only.push(idx);
            }
        } else if block.iter().all(|&e| e <= k) && is_block_of(p2, block) {
            bottom_only.push(idx);
        }
    }
    let mut out = Vec::new();
    let mut matching: Vec<(usize, usize)> = Vec::new();
    enumerate_matchings(
        &top_only,
        &bottom_only,
        0,
        &mut vec![false; bottom_only.len()],
        &mut matching,
        &mut |matched| {
            let groups: Vec<Vec<usize>> = matched.iter().map(|&(t, b)| vec![t, b]).collect();
            let rho = base.merge_block_groups(&groups);
            let blocks = rho.block_count();
            out.push((rho, falling_factorial(n as i64 - blocks as i64, removed)));
        },
    );
    out
}

fn is_block_of(p: &SetPartition, block: &[usize]) -> bool {
    let lab = p.block_index(block[0]);
    let size = (1..=p.ground_size())
        .filter(|&e| p.block_index(e) == lab)
        .count();
    size == block.len() && block.iter().all(|&e| p.block_index(e) == lab)
}

/// All partial matchings between `tops` and `bottoms` (as block indices).
fn enumerate_matchings(
    tops: &[usize],
    bottoms: &[usize],
    i: usize,
    used: &mut Vec<bool>,
    current: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if i == tops.len() {
        emit(current);
        return;
    }
    // Leave tops[i] unmatched.
    enumerate_matchings(tops, bottoms, i + 1, used, current, emit);
    for (j, &b) in bottoms.iter().enumerate() {
        if !used[j] {
            used[j] = true;
            current.push((tops[i], b));
            enumerate_matchings(tops, bottoms, i + 1, used, current, emit);
            current.pop();
            used[j] = false;
        }
    }
}

/// `(m)_ℓ = m (m−1) ⋯ (m−ℓ+1)` over the integers (negative `m` allowed).
pub fn falling_factorial(m: i64, ell: usize) -> BigInt {
    let mut result = BigInt::one();
    for i in 0..ell as i64 {
        result *= BigInt::from(m - i);
    }
    result
}

/// The transposition generator `s_i` swapping columns `i` and `i+1`.
pub fn generator_s(i: usize, k: usize, n: usize) -> Result<AlgebraElement> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange { index: i, k });
    }
    let blocks: Vec<Vec<usize>> = (1..=k)
        .map(|c| {
            if c == i {
                vec![i, k + i + 1]
            } else if c == i + 1 {
                vec![i + 1, k + i]
            } else {
                vec![c, k + c]
            }
        })
        .collect();
    let key = SetPartition::from_blocks(2 * k, &blocks).expect("valid generator pattern");
    AlgebraElement::single(Basis::Diagram, 2 * k, n, key, Rational::one())
}

/// The contraction generator `p_i`: column `i` is split into two singletons,
/// and the whole diagram carries the normalization `1/n`.
pub fn generator_p(i: usize, k: usize, n: usize) -> Result<AlgebraElement> {
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, k });
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for c in 1..=k {
        if c == i {
            blocks.push(vec![i]);
            blocks.push(vec![k + i]);
        } else {
            blocks.push(vec![c, k + c]);
        }
    }
    let key = SetPartition::from_blocks(2 * k, &blocks).expect("valid generator pattern");
    AlgebraElement::single(
        Basis::Diagram,
        2 * k,
        n,
        key,
        Rational::new(BigInt::one(), BigInt::from(n)),
    )
}

/// The merge generator `b_i = p_{i+1/2}`: columns `i` and `i+1` form one
/// four-vertex block.
pub fn generator_b(i: usize, k: usize, n: usize) -> Result<AlgebraElement> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange { index: i, k });
    }
    let mut blocks: Vec<Vec<usize>> = vec![vec![i, i + 1, k + i, k + i + 1]];
    for c in 1..=k {
        if c != i && c != i + 1 {
            blocks.push(vec![c, k + c]);
        }
    }
    let key = SetPartition::from_blocks(2 * k, &blocks).expect("valid generator pattern");
    AlgebraElement::single(Basis::Diagram, 2 * k, n, key, Rational::one())
}

/// `p_ℓ` for half-integer `ℓ` encoded as `two_ell = 2ℓ`: even values are the
/// `p_i`, odd values the `b_i`, and `p_{1/2} = p_{k+1/2} = I_k`.
pub fn generator_p_half(two_ell: usize, k: usize, n: usize) -> Result<AlgebraElement> {
    if two_ell == 1 || two_ell == 2 * k + 1 {
        return Ok(AlgebraElement::identity(2 * k, n));
    }
    if two_ell.is_multiple_of(2) {
        generator_p(two_ell / 2, k, n)
    } else {
        generator_b(two_ell / 2, k, n)
    }
}

/// Outcome of checking one defining relation instance.
#[derive(Clone, Debug)]
pub struct PresentationReport {
    /// Relation identifier: clause letter plus the indices involved.
    pub relation: String,
    pub holds: bool,
    /// The two sides, kept only when the relation fails.
    pub witness: Option<(AlgebraElement, AlgebraElement)>,
}

impl PresentationReport {
    fn check(relation: String, lhs: AlgebraElement, rhs: AlgebraElement) -> Self {
        let holds = lhs == rhs;
        PresentationReport {
            relation,
            holds,
            witness: if holds { None } else { Some((lhs, rhs)) },
        }
    }
}

/// Evaluates every instance of the defining relations of `P_k(n)` by explicit
/// multiplication. Clause (a) covers the symmetric-group relations, (b) the
/// idempotent relations among the `p_ℓ`, and (c) the mixed relations.
///
/// One normalization note: with the `1/n` scaling baked into the integer
/// `p_i` (which makes every `p_ℓ` idempotent), the absorption relation picks
/// up a compensating factor and reads `n · p_ℓ p_{ℓ±1/2} p_ℓ = p_ℓ` whenever
/// `ℓ±1/2` names an actual generator; exact evaluation on the tensor action
/// (which is faithful for n ≥ 2k) confirms the factor is forced. The
/// degenerate instances with `p_{1/2} = I_k = p_{k+1/2}` stay factor-free.
pub fn check_presentation(k: usize, n: usize) -> Result<Vec<PresentationReport>> {
    let ident = AlgebraElement::identity(2 * k, n);
    let s = |i: usize| generator_s(i, k, n);
    let p = |two_ell: usize| generator_p_half(two_ell, k, n);
    let mut reports = Vec::new();

    // (a) s_i^2 = I; far commutation; braid relation.
    for i in 1..k {
        let si = s(i)?;
        reports.push(PresentationReport::check(
            format!("a: s{i}^2 = I"),
            si.multiply(&si)?,
            ident.clone(),
        ));
        for j in 1..k {
            if j > i + 1 {
                let sj = s(j)?;
                reports.push(PresentationReport::check(
                    format!("a: s{i} s{j} = s{j} s{i}"),
                    si.multiply(&sj)?,
                    sj.multiply(&si)?,
                ));
            }
        }
        if i + 1 < k {
            let sj = s(i + 1)?;
            reports.push(PresentationReport::check(
                format!("a: s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
                si.multiply(&sj)?.multiply(&si)?,
                sj.multiply(&si)?.multiply(&sj)?,
            ));
        }
    }

    // (b) p_ℓ^2 = p_ℓ; far commutation; p_ℓ p_{ℓ±1/2} p_ℓ = p_ℓ.
    let ells: Vec<usize> = (2..=2 * k).collect();
    for &le in &ells {
        let pl = p(le)?;
        reports.push(PresentationReport::check(
            format!("b: p[{}/2]^2 = p[{}/2]", le, le),
            pl.multiply(&pl)?,
            pl.clone(),
        ));
        for &me in &ells {
            if me > le && me != le + 1 {
                let pm = p(me)?;
                reports.push(PresentationReport::check(
                    format!("b: p[{le}/2] p[{me}/2] commute"),
                    pl.multiply(&pm)?,
                    pm.multiply(&pl)?,
                ));
            }
        }
        for delta in [-1i64, 1] {
            let me = (le as i64 + delta) as usize;
            if !(1..=2 * k + 1).contains(&me) {
                continue;
            }
            let pm = p(me)?;
            let triple = pl.multiply(&pm)?.multiply(&pl)?;
            if me == 1 || me == 2 * k + 1 {
                // p_{1/2} and p_{k+1/2} are the identity: no factor.
                reports.push(PresentationReport::check(
                    format!("b: p[{le}/2] p[{me}/2] p[{le}/2] = p[{le}/2]"),
                    triple,
                    pl.clone(),
                ));
            } else {
                reports.push(PresentationReport::check(
                    format!("b: n p[{le}/2] p[{me}/2] p[{le}/2] = p[{le}/2]"),
                    triple.scale(&Rational::from(BigInt::from(n))),
                    pl.clone(),
                ));
            }
        }
    }

    // (c) mixed relations between the s_i and the p_ℓ.
    for i in 1..k {
        let si = s(i)?;
        let pi = p(2 * i)?;
        let pi1 = p(2 * (i + 1))?;
        let ph = p(2 * i + 1)?;
        reports.push(PresentationReport::check(
            format!("c: s{i} p{i} p{} = p{i} p{}", i + 1, i + 1),
            si.multiply(&pi)?.multiply(&pi1)?,
            pi.multiply(&pi1)?,
        ));
        reports.push(PresentationReport::check(
            format!("c: s{i} p{i} s{i} = p{}", i + 1),
            si.multiply(&pi)?.multiply(&si)?,
            pi1.clone(),
        ));
        reports.push(PresentationReport::check(
            format!("c: s{i} p[{}/2] = p[{}/2]", 2 * i + 1, 2 * i + 1),
            si.multiply(&ph)?,
            ph.clone(),
        ));
        reports.push(PresentationReport::check(
            format!("c: p[{}/2] s{i} = p[{}/2]", 2 * i + 1, 2 * i + 1),
            ph.multiply(&si)?,
            ph.clone(),
        ));
        if i + 1 < k {
            let sj = s(i + 1)?;
            let ph3 = p(2 * i + 3)?;
            reports.push(PresentationReport::check(
                format!(
                    "c: s{i} s{} p[{}/2] s{} s{i} = p[{}/2]",
                    i + 1,
                    2 * i + 1,
                    i + 1,
                    2 * i + 3
                ),
                si.multiply(&sj)?
                    .multiply(&ph)?
                    .multiply(&sj)?
                    .multiply(&si)?,
                ph3.clone(),
            ));
        }
        // s_i commutes with p_ℓ away from ℓ ∈ {i−1/2, i, i+1/2, i+1, i+3/2}.
        for &le in &ells {
            let near = [2 * i - 1, 2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3];
            if near.contains(&le) {
                continue;
            }
            let pl = p(le)?;
            reports.push(PresentationReport::check(
                format!("c: s{i} p[{le}/2] = p[{le}/2] s{i}"),
                si.multiply(&pl)?,
                pl.multiply(&si)?,
            ));
        }
    }
    Ok(reports)
}

/// The essential idempotent `e_{k,n}` (orbit basis) at level `two_k`, defined
/// for `two_k > n`. For `n ≥ K > n/2` (with `K = ⌈two_k/2⌉`) the first
/// `n+1−K` columns split into top and bottom singletons and the remaining
/// `2K−n−1` columns are through-strands (`n+1` blocks in total); for `K > n`
/// every column is a through-strand. Odd levels reuse the element one half
/// step up, which lies in the half algebra because its last column is a
/// through-strand.
pub fn e_kn(two_k: usize, n: usize) -> Result<AlgebraElement> {
    if two_k <= n {
        return Err(Error::NotInKernelRange { two_k, n });
    }
    let cap_k = ground_size(two_k) / 2;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let split_columns = if cap_k > n { 0 } else { n + 1 - cap_k };
    for c in 1..=cap_k {
        if c <= split_columns {
            blocks.push(vec![c]);
            blocks.push(vec![cap_k + c]);
        } else {
            blocks.push(vec![c, cap_k + c]);
        }
    }
    let key = SetPartition::from_blocks(2 * cap_k, &blocks).expect("valid idempotent pattern");
    AlgebraElement::single(Basis::Orbit, two_k, n, key, Rational::one())
}

/// The constant in `e_{k,n}^2 = c_{k,n} e_{k,n}`: `(−1)^{n+1−K} (n+1−K)!`
/// when `n ≥ K > n/2`, and `1` when `K > n`.
pub fn e_kn_constant(two_k: usize, n: usize) -> Result<BigInt> {
    if two_k <= n {
        return Err(Error::NotInKernelRange { two_k, n });
    }
    let cap_k = ground_size(two_k) / 2;
    if cap_k > n {
        return Ok(BigInt::one());
    }
    let m = n + 1 - cap_k;
    let mut c = BigInt::one();
    for j in 1..=m {
        c *= BigInt::from(j);
    }
    if m % 2 == 1 {
        c = -c;
    }
    Ok(c)
}
