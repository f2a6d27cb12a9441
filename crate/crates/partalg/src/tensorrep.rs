//! The representation of `P_k(n)` on the `k`-th tensor power of the
//! `n`-dimensional permutation module, its half-integer variant, and the
//! exact linear algebra for image dimensions, kernels, and principal ideals.
//!
//! Tensor-space basis vectors are indexed by `k`-tuples over `[1, n]` in
//! mixed-radix order with the leftmost factor most significant. The matrix of
//! an operator holds entry `((r'), (r))` at `(row, col) = (idx(r'), idx(r))`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{One, Zero};

use crate::algebra::{AlgebraElement, Basis};
use crate::setpart::{enumerate_set_partitions, SetPartition};
use crate::{Error, Rational, Result};

/// Work limits for tensor-space computations.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest admissible matrix dimension / vectorized length.
    pub max_rows: usize,
    /// Largest admissible diagram-basis size for ideal-span closures.
    pub max_ideal_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_rows: 20_000,
            max_ideal_basis: 250,
        }
    }
}

/// A sparse matrix with exact rational entries and no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseExactMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseExactMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseExactMatrix {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseExactMatrix {
            dim,
            entries: (0..dim).map(|i| ((i, i), Rational::one())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_entry(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        let entry = self
            .entries
            .entry((row, col))
            .or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> SparseExactMatrix {
        if factor.is_zero() {
            return SparseExactMatrix::zero(self.dim);
        }
        SparseExactMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(&rc, v)| (rc, v * factor))
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseExactMatrix) -> Result<SparseExactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_entry(r, c, v.clone());
        }
        Ok(out)
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn mul(&self, other: &SparseExactMatrix) -> Result<SparseExactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseExactMatrix::zero(self.dim);
        for (&(r, s), v) in &self.entries {
            if let Some(row) = by_row.get(&s) {
                for &(c, w) in row {
                    out.add_entry(r, c, v * w);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Rational {
        let mut t = Rational::zero();
        for (&(r, c), v) in &self.entries {
            if r == c {
                t += v;
            }
        }
        t
    }

    /// Coordinate-triple text: one `row col p/q` line per entry.
    pub fn to_coord_text(&self) -> String {
        let mut out = String::new();
        for (&(r, c), v) in &self.entries {
            out.push_str(&format!("{r} {c} {v}\n"));
        }
        out
    }

    /// JSON wrapper with the dimension and context metadata.
    pub fn to_json(&self, two_k: usize, n: usize) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "two_k": two_k,
            "n": n,
            "entries": self
                .entries
                .iter()
                .map(|(&(r, c), v)| serde_json::json!([r, c, v.to_string()]))
                .collect::<Vec<_>>(),
        })
    }
}

fn checked_power(base: usize, exp: usize, max: usize) -> Result<usize> {
    let mut value = 1usize;
    for _ in 0..exp {
        value = value
            .checked_mul(base)
            .filter(|&v| v <= max)
            .ok_or_else(|| {
                Error::BudgetExceeded(format!("{base}^{exp} exceeds the {max}-row budget"))
            })?;
    }
    Ok(value)
}

/// Mixed-radix index of a `k`-tuple over `[1, n]`, leftmost most significant.
pub fn tuple_index(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * n + (t - 1))
}

/// The standard labeling of a set partition as a tuple `(b_π | b_π')`: entry
/// `i` is the 1-based index of the block containing `i`, blocks numbered by
/// first occurrence. Its equality pattern is exactly `pi`, so it names the
/// orbit of tuples attached to the partition.
pub fn standard_labeling(pi: &SetPartition) -> Vec<usize> {
    pi.labels().iter().map(|&l| l as usize + 1).collect()
}

/// The matrix of an algebra element on tensor space. Even levels act on
/// `n^k`-dimensional space directly; odd levels are routed to [`phi_half`].
pub fn phi(e: &AlgebraElement, n: usize) -> Result<SparseExactMatrix> {
    phi_with_budget(e, n, &Budget::default())
}

pub fn phi_with_budget(e: &AlgebraElement, n: usize, budget: &Budget) -> Result<SparseExactMatrix> {
    if e.two_k() % 2 == 1 {
        return phi_half_with_budget(e, n, budget);
    }
    let k = e.two_k() / 2;
    let dim = checked_power(n, k, budget.max_rows)?;
    let mut out = SparseExactMatrix::zero(dim);
    for (key, coeff) in e.terms() {
        let nb = key.block_count();
        let exact = e.basis() == Basis::Orbit;
        if exact && nb > n {
            continue; // the orbit element acts as zero
        }
        for assignment in block_assignments(nb, n, exact) {
            let values: Vec<usize> = (1..=2 * k)
                .map(|pos| assignment[key.block_index(pos)])
                .collect();
            let col = tuple_index(&values[..k], n);
            let row = tuple_index(&values[k..], n);
            out.add_entry(row, col, coeff.clone());
        }
    }
    Ok(out)
}

/// The half-level action on `n^k`-dimensional space: tuples gain a frozen
/// final coordinate `n`, so the block holding the middle column is pinned to
/// the value `n`.
pub fn phi_half(e: &AlgebraElement, n: usize) -> Result<SparseExactMatrix> {
    phi_half_with_budget(e, n, &Budget::default())
}

pub fn phi_half_with_budget(
    e: &AlgebraElement,
    n: usize,
    budget: &Budget,
) -> Result<SparseExactMatrix> {
    if e.two_k().is_multiple_of(2) {
        return Err(Error::OddGroundSet(e.two_k()));
    }
    let cap_k = e.ground_size() / 2;
    let k = cap_k - 1;
    let dim = checked_power(n, k, budget.max_rows)?;
    let mut out = SparseExactMatrix::zero(dim);
    for (key, coeff) in e.terms() {
        let nb = key.block_count();
        let pinned = key.block_index(cap_k);
        let exact = e.basis() == Basis::Orbit;
        if exact && nb > n {
            continue;
        }
        for assignment in pinned_block_assignments(nb, pinned, n, exact) {
            let values: Vec<usize> = (1..=2 * cap_k)
                .map(|pos| assignment[key.block_index(pos)])
                .collect();
            debug_assert_eq!(values[cap_k - 1], n);
            debug_assert_eq!(values[2 * cap_k - 1], n);
            let col = tuple_index(&values[..k], n);
            let row = tuple_index(&values[cap_k..cap_k + k], n);
            out.add_entry(row, col, coeff.clone());
        }
    }
    Ok(out)
}

/// Value assignments for the blocks: injective (orbit rule, pattern holds
/// "iff") or arbitrary (diagram rule, pattern holds "when").
fn block_assignments(nb: usize, n: usize, injective: bool) -> Vec<Vec<usize>> {
    if injective {
        (1..=n).permutations(nb).collect()
    } else {
        std::iter::repeat_n(1..=n, nb)
            .multi_cartesian_product()
            .collect()
    }
}

/// Assignments with one block pinned to the value `n`; the remaining blocks
/// are injective into `[1, n−1]` (orbit) or arbitrary in `[1, n]` (diagram).
fn pinned_block_assignments(
    nb: usize,
    pinned: usize,
    n: usize,
    injective: bool,
) -> Vec<Vec<usize>> {
    let free = nb - 1;
    let choices: Vec<Vec<usize>> = if injective {
        (1..n).permutations(free).collect()
    } else {
        std::iter::repeat_n(1..=n, free)
            .multi_cartesian_product()
            .collect()
    };
    choices
        .into_iter()
        .map(|choice| {
            let mut assignment = Vec::with_capacity(nb);
            let mut it = choice.into_iter();
            for b in 0..nb {
                if b == pinned {
                    assignment.push(n);
                } else {
                    assignment.push(it.next().expect("enough free values"));
                }
            }
            assignment
        })
        .collect()
}

/// 0/1 matrix of the diagonal action of a permutation of `[1, n]` on
/// `k`-tuples. `sigma[i-1]` is the image of `i`.
pub fn permutation_matrix(sigma: &[usize], k: usize) -> Result<SparseExactMatrix> {
    permutation_matrix_with_budget(sigma, k, &Budget::default())
}

pub fn permutation_matrix_with_budget(
    sigma: &[usize],
    k: usize,
    budget: &Budget,
) -> Result<SparseExactMatrix> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &image in sigma {
        if image == 0 || image > n || seen[image - 1] {
            return Err(Error::NotAPermutation);
        }
        seen[image - 1] = true;
    }
    let dim = checked_power(n, k, budget.max_rows)?;
    let mut out = SparseExactMatrix::zero(dim);
    for tuple in std::iter::repeat_n(1..=n, k).multi_cartesian_product() {
        let image: Vec<usize> = tuple.iter().map(|&t| sigma[t - 1]).collect();
        out.add_entry(
            tuple_index(&image, n),
            tuple_index(&tuple, n),
            Rational::one(),
        );
    }
    if k == 0 {
        out = SparseExactMatrix::identity(1);
    }
    Ok(out)
}

fn adjacent_transposition(i: usize, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|j| {
            if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            }
        })
        .collect()
}

/// Whether `m` commutes with the adjacent transpositions generating `S_n`
/// acting diagonally on `k`-tuples.
pub fn commutant_check(m: &SparseExactMatrix, n: usize, k: usize) -> Result<bool> {
    for i in 1..n {
        let p = permutation_matrix(&adjacent_transposition(i, n), k)?;
        if m.mul(&p)? != p.mul(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `S_{n−1}` variant: only transpositions fixing the letter `n`.
pub fn commutant_check_sn_minus_one(m: &SparseExactMatrix, n: usize, k: usize) -> Result<bool> {
    for i in 1..n.saturating_sub(1) {
        let p = permutation_matrix(&adjacent_transposition(i, n), k)?;
        if m.mul(&p)? != p.mul(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Incremental sparse Gaussian elimination over exact rationals: rows are
/// kept keyed by their leading index. Returns whether the vector enlarged the
/// span.
fn echelon_insert(
    rows: &mut BTreeMap<usize, BTreeMap<usize, Rational>>,
    mut v: BTreeMap<usize, Rational>,
) -> bool {
    loop {
        v.retain(|_, c| !c.is_zero());
        let Some((&lead, _)) = v.iter().next() else {
            return false;
        };
        match rows.get(&lead) {
            None => {
                rows.insert(lead, v);
                return true;
            }
            Some(pivot) => {
                let factor = &v[&lead] / &pivot[&lead];
                for (idx, w) in pivot.clone() {
                    let entry = v.entry(idx).or_insert_with(Rational::zero);
                    *entry -= &factor * w;
                }
            }
        }
    }
}

/// Exact rank of a list of sparse vectors.
pub fn sparse_rank(vectors: impl IntoIterator<Item = BTreeMap<usize, Rational>>) -> usize {
    let mut rows = BTreeMap::new();
    let mut rank = 0;
    for v in vectors {
        if echelon_insert(&mut rows, v) {
            rank += 1;
        }
    }
    rank
}

/// The coefficient vector of one orbit matrix on `2k`-tuples: 1 at every
/// tuple whose equality pattern is exactly `pi`.
fn orbit_coefficient_vector(pi: &SetPartition, n: usize) -> BTreeMap<usize, Rational> {
    let nb = pi.block_count();
    let m = pi.ground_size();
    let mut v = BTreeMap::new();
    for assignment in block_assignments(nb, n, true) {
        let tuple: Vec<usize> = (1..=m).map(|pos| assignment[pi.block_index(pos)]).collect();
        v.insert(tuple_index(&tuple, n), Rational::one());
    }
    v
}

/// The coefficient vector of one diagram matrix: 1 at every tuple whose
/// pattern coarsens `pi`.
fn diagram_coefficient_vector(pi: &SetPartition, n: usize) -> BTreeMap<usize, Rational> {
    let nb = pi.block_count();
    let m = pi.ground_size();
    let mut v = BTreeMap::new();
    for assignment in block_assignments(nb, n, false) {
        let tuple: Vec<usize> = (1..=m).map(|pos| assignment[pi.block_index(pos)]).collect();
        v.insert(tuple_index(&tuple, n), Rational::one());
    }
    v
}

/// Number of set partitions of `[1, 2k]` with at most `n` blocks, counted by
/// direct enumeration (the orbit count of the diagonal action).
pub fn orbit_count(k: usize, n: usize) -> Result<usize> {
    Ok(enumerate_set_partitions(2 * k, Some(n))?.len())
}

/// Exact rank of the vectorized images `{Φ(x_π) : |π| ≤ n}`, computed from
/// the `2k`-tuple coefficient vectors. Equals `B(2k, n)`.
pub fn image_dimension(k: usize, n: usize) -> Result<usize> {
    image_dimension_with_budget(k, n, &Budget::default())
}

pub fn image_dimension_with_budget(k: usize, n: usize, budget: &Budget) -> Result<usize> {
    checked_power(n, 2 * k, budget.max_rows)?;
    let vectors = enumerate_set_partitions(2 * k, Some(n))?
        .into_iter()
        .map(|pi| orbit_coefficient_vector(&pi, n));
    Ok(sparse_rank(vectors))
}

/// Same rank computed from materialized matrices; the two routes must agree.
pub fn image_dimension_via_matrices(k: usize, n: usize, budget: &Budget) -> Result<usize> {
    let dim = checked_power(n, k, budget.max_rows)?;
    let mut vectors = Vec::new();
    for pi in enumerate_set_partitions(2 * k, Some(n))? {
        let e = AlgebraElement::single(Basis::Orbit, 2 * k, n, pi, Rational::one())?;
        let m = phi_with_budget(&e, n, budget)?;
        vectors.push(
            m.entries()
                .iter()
                .map(|(&(r, c), v)| (r * dim + c, v.clone()))
                .collect::<BTreeMap<_, _>>(),
        );
    }
    Ok(sparse_rank(vectors))
}

/// Rank of the diagram-basis images `{Φ(d_π) : π ∈ Π_{2k}}` over the whole
/// lattice: a genuinely overdetermined system that must still land on
/// `B(2k, n)`.
pub fn diagram_image_dimension(k: usize, n: usize, budget: &Budget) -> Result<usize> {
    checked_power(n, 2 * k, budget.max_rows)?;
    let vectors = enumerate_set_partitions(2 * k, None)?
        .into_iter()
        .map(|pi| diagram_coefficient_vector(&pi, n));
    Ok(sparse_rank(vectors))
}

/// Rank of the half-level images `{Φ_{k+1/2}(x_π) : π ∈ Π_{2k+1}, |π| ≤ n}`,
/// computed on the free `2k` coordinates. Equals `B(2k+1, n)`.
pub fn half_image_dimension(k: usize, n: usize, budget: &Budget) -> Result<usize> {
    checked_power(n, 2 * k, budget.max_rows)?;
    let cap_k = k + 1;
    let ground = 2 * cap_k;
    let vectors: Vec<BTreeMap<usize, Rational>> = enumerate_set_partitions(ground, Some(n))?
        .into_iter()
        .filter(|pi| pi.same_block(cap_k, ground))
        .map(|pi| {
            let nb = pi.block_count();
            let pinned = pi.block_index(cap_k);
            let mut v = BTreeMap::new();
            for assignment in pinned_block_assignments(nb, pinned, n, true) {
                let mut tuple = Vec::with_capacity(2 * k);
                for pos in 1..=ground {
                    if pos == cap_k || pos == ground {
                        continue;
                    }
                    tuple.push(assignment[pi.block_index(pos)]);
                }
                v.insert(tuple_index(&tuple, n), Rational::one());
            }
            v
        })
        .collect();
    Ok(sparse_rank(vectors))
}

/// The orbit-basis kernel elements `{x_π : |π| > n}` at level `two_k`; each
/// is annihilated by the tensor action.
pub fn kernel_basis(two_k: usize, n: usize) -> Result<Vec<AlgebraElement>> {
    let ground = crate::algebra::ground_size(two_k);
    let mut out = Vec::new();
    for pi in enumerate_set_partitions(ground, None)? {
        if pi.block_count() <= n {
            continue;
        }
        if two_k % 2 == 1 && !pi.same_block(ground / 2, ground) {
            continue;
        }
        out.push(AlgebraElement::single(
            Basis::Orbit,
            two_k,
            n,
            pi,
            Rational::one(),
        )?);
    }
    Ok(out)
}

/// Dimension of the two-sided principal ideal generated by `g`, i.e. of
/// `span{ d_a · g · d_b }` over the diagram basis, by exact rank.
///
/// Even levels close the span under multiplication by the s/p/b generators
/// (which generate the unital algebra, so the closure is the full ideal);
/// odd levels fall back to closing under every basis diagram.
pub fn principal_ideal_dimension(g: &AlgebraElement) -> Result<usize> {
    principal_ideal_dimension_with_budget(g, &Budget::default())
}

pub fn principal_ideal_dimension_with_budget(g: &AlgebraElement, budget: &Budget) -> Result<usize> {
    let two_k = g.two_k();
    let n = g.n();
    let ground = crate::algebra::ground_size(two_k);
    let basis: Vec<SetPartition> = enumerate_set_partitions(ground, None)?
        .into_iter()
        .filter(|pi| two_k.is_multiple_of(2) || pi.same_block(ground / 2, ground))
        .collect();
    if basis.len() > budget.max_ideal_basis {
        return Err(Error::BudgetExceeded(format!(
            "diagram basis of size {} exceeds the ideal budget {}",
            basis.len(),
            budget.max_ideal_basis
        )));
    }
    let index: BTreeMap<&SetPartition, usize> =
        basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let vec_of = |e: &AlgebraElement| -> BTreeMap<usize, Rational> {
        e.terms()
            .iter()
            .map(|(key, coeff)| (index[key], coeff.clone()))
            .collect()
    };

    // Multipliers: the generators for whole algebras (scalings are irrelevant
    // to the span, so the gap diagram replaces p_i), every basis diagram for
    // half algebras.
    let mut multipliers: Vec<AlgebraElement> = Vec::new();
    if two_k.is_multiple_of(2) {
        let k = two_k / 2;
        for i in 1..k {
            multipliers.push(crate::algebra::generator_s(i, k, n)?);
            multipliers.push(crate::algebra::generator_b(i, k, n)?);
        }
        for i in 1..=k {
            let p = crate::algebra::generator_p(i, k, n)?;
            multipliers.push(p.scale(&Rational::from(num::BigInt::from(n))));
        }
    } else {
        for pi in &basis {
            multipliers.push(AlgebraElement::single(
                Basis::Diagram,
                two_k,
                n,
                pi.clone(),
                Rational::one(),
            )?);
        }
    }

    let g = g.to_diagram();
    let mut rows = BTreeMap::new();
    let mut rank = 0usize;
    let mut worklist = Vec::new();
    if echelon_insert(&mut rows, vec_of(&g)) {
        rank += 1;
        worklist.push(g);
    }
    while let Some(v) = worklist.pop() {
        for h in &multipliers {
            for w in [h.multiply(&v)?, v.multiply(h)?] {
                if echelon_insert(&mut rows, vec_of(&w)) {
                    rank += 1;
                    worklist.push(w);
                }
            }
        }
    }
    Ok(rank)
}

/// Verifies `Φ(a·b) = Φ(a)·Φ(b)` for a pair of elements.
pub fn homomorphism_check(
    a: &AlgebraElement,
    b: &AlgebraElement,
    n: usize,
    budget: &Budget,
) -> Result<bool> {
    let product = a.multiply(b)?;
    let lhs = phi_with_budget(&product, n, budget)?;
    let rhs = phi_with_budget(a, n, budget)?.mul(&phi_with_budget(b, n, budget)?)?;
    Ok(lhs == rhs)
}
