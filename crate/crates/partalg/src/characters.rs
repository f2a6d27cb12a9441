//! Symmetric-group class data, irreducible characters, fixed-point class
//! functions, the multiplicity formulas for tensor powers of the permutation
//! module, and character values of the partition algebra.

use std::collections::HashMap;

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::algebra::{AlgebraElement, Basis};
use crate::combinatorics::{
    integer_partitions, skew_count, stirling2, IntegerPartition, SkewShape,
};
use crate::setpart::SetPartition;
use crate::{Error, Rational, Result};

/// One conjugacy class of `S_n`: cycle type, class size, centralizer order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub delta: IntegerPartition,
    pub size: BigUint,
    pub z: BigUint,
}

fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for j in 1..=n {
        f *= BigUint::from(j);
    }
    f
}

/// The conjugacy classes of `S_n`, one per partition of `n`, with
/// `z_δ = Π i^{d_i} d_i!` and class size `n!/z_δ`.
pub fn conjugacy_classes(n: usize) -> Vec<ClassData> {
    integer_partitions(n)
        .into_iter()
        .map(|delta| {
            let mut z = BigUint::one();
            let mut mult: HashMap<usize, usize> = HashMap::new();
            for &p in delta.parts() {
                *mult.entry(p).or_insert(0) += 1;
            }
            for (&i, &d) in &mult {
                z *= BigUint::from(i).pow(d as u32);
                z *= factorial(d);
            }
            let size = factorial(n) / &z;
            ClassData { delta, size, z }
        })
        .collect()
}

/// Beta-set encoding of a partition with a fixed number of rows.
fn beta_set(lambda: &IntegerPartition, rows: usize) -> Vec<usize> {
    (0..rows).map(|i| lambda.row(i) + (rows - 1 - i)).collect()
}

fn partition_from_beta(beta: &[usize]) -> IntegerPartition {
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let rows = sorted.len();
    let parts: Vec<usize> = sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (rows - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    IntegerPartition::new(parts).expect("beta set yields a partition")
}

/// Irreducible character `χ_λ(δ)` by the Murnaghan–Nakayama rule: recursive
/// border-strip removal performed on the beta set, memoized on the remaining
/// `(shape, cycle parts)`.
pub fn irreducible_character(
    lambda: &IntegerPartition,
    delta: &IntegerPartition,
) -> Result<BigInt> {
    if lambda.size() != delta.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), delta.size()));
    }
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), BigInt> = HashMap::new();
    // Parts are consumed largest first; the rule is order-independent.
    let parts: Vec<usize> = delta.parts().to_vec();
    Ok(mn_recurse(lambda, &parts, 0, &mut memo))
}

fn mn_recurse(
    shape: &IntegerPartition,
    parts: &[usize],
    idx: usize,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
) -> BigInt {
    if idx == parts.len() {
        return BigInt::one();
    }
    let key = (shape.parts().to_vec(), parts[idx..].to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = parts[idx];
    let rows = shape.len().max(1);
    let beta = beta_set(shape, rows);
    let mut total = BigInt::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // Removing the strip replaces b by b - r; the sign counts the beta
        // entries strictly between them.
        let height = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[pos] = b - r;
        let sub = partition_from_beta(&next);
        let mut term = mn_recurse(&sub, parts, idx + 1, memo);
        if height % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    memo.insert(key, total.clone());
    total
}

/// `F(σ^m)` for `σ` of cycle type `delta`: each `d`-cycle contributes `d`
/// fixed points to `σ^m` exactly when `d | m`.
pub fn fixed_point_count(delta: &IntegerPartition, m: usize) -> usize {
    delta.parts().iter().filter(|&&d| m.is_multiple_of(d)).sum()
}

/// `F_μ(δ) = Π_i F(σ^{μ_i})`.
pub fn fixed_point_power(delta: &IntegerPartition, mu: &IntegerPartition) -> BigInt {
    let mut result = BigInt::one();
    for &m in mu.parts() {
        result *= BigInt::from(fixed_point_count(delta, m));
    }
    result
}

/// `x^k` with the `0^0 = 1` convention used by character sums.
fn int_pow(base: usize, exp: usize) -> BigInt {
    if exp == 0 {
        return BigInt::one();
    }
    BigInt::from(base).pow(exp as u32)
}

/// Which of the three equivalent multiplicity computations to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MultiplicityMethod {
    /// `(1/n!) Σ_σ F(σ)^k χ_λ(σ)` over conjugacy classes.
    Character,
    /// `Σ_t S(k,t) f^{λ/[n−t]}`.
    StirlingSkew,
    /// Path count in the restriction-induction Bratteli diagram.
    Bratteli,
}

/// Multiplicity `m_{k,n}^λ` of the irreducible `S_n`-module labeled by
/// `lambda` in the `k`-th tensor power of the permutation module; equals the
/// dimension of the corresponding irreducible module of the centralizer.
pub fn multiplicity(
    lambda: &IntegerPartition,
    k: usize,
    n: usize,
    method: MultiplicityMethod,
) -> Result<BigUint> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.to_string(), n));
    }
    match method {
        MultiplicityMethod::Character => {
            let mut total = BigRational::zero();
            for class in conjugacy_classes(n) {
                let f = fixed_point_count(&class.delta, 1);
                let chi = irreducible_character(lambda, &class.delta)?;
                let term = BigRational::from(int_pow(f, k) * chi)
                    / BigRational::from(BigInt::from(class.z.clone()));
                total += term;
            }
            debug_assert!(total.is_integer());
            let value = total.to_integer();
            assert!(!value.is_negative(), "multiplicity must be nonnegative");
            Ok(value.to_biguint().unwrap())
        }
        MultiplicityMethod::StirlingSkew => {
            let mut total = BigUint::zero();
            for t in 0..=n {
                if n - t > lambda.row(0) {
                    continue; // [n-t] not contained in lambda
                }
                let inner = if t == n {
                    IntegerPartition::empty()
                } else {
                    IntegerPartition::new(vec![n - t])?
                };
                let shape = SkewShape::new(lambda.clone(), inner)?;
                total += stirling2(k, t) * skew_count(&shape);
            }
            Ok(total)
        }
        MultiplicityMethod::Bratteli => {
            let diagram = crate::tableaux::build_bratteli(n, 2 * k)?;
            Ok(diagram
                .path_count(2 * k, lambda)
                .cloned()
                .unwrap_or_else(BigUint::zero))
        }
    }
}

/// Dimension of the irreducible module labeled by `mu ⊢ n−1` for the
/// half-level centralizer `End_{S_{n−1}}(M_n^{⊗k})`, computed by both
/// formulas (Stirling/skew and the `(F(τ)+1)^k` class average), which must
/// agree.
pub fn half_multiplicity(mu: &IntegerPartition, k: usize, n: usize) -> Result<BigUint> {
    if n < 1 || mu.size() != n - 1 {
        return Err(Error::SizeMismatch(mu.to_string(), n.saturating_sub(1)));
    }
    // Route 1: Σ_t S(k+1, t+1) f^{μ/[n−1−t]}.
    let mut skew_total = BigUint::zero();
    for t in 0..=n - 1 {
        if n - 1 - t > mu.row(0) {
            continue;
        }
        let inner = if t == n - 1 {
            IntegerPartition::empty()
        } else {
            IntegerPartition::new(vec![n - 1 - t])?
        };
        let shape = SkewShape::new(mu.clone(), inner)?;
        skew_total += stirling2(k + 1, t + 1) * skew_count(&shape);
    }
    // Route 2: (1/(n−1)!) Σ_{τ ∈ S_{n−1}} (F(τ)+1)^k χ_μ(τ).
    let mut avg = BigRational::zero();
    for class in conjugacy_classes(n - 1) {
        let f = fixed_point_count(&class.delta, 1) + 1;
        let chi = irreducible_character(mu, &class.delta)?;
        avg += BigRational::from(int_pow(f, k) * chi)
            / BigRational::from(BigInt::from(class.z.clone()));
    }
    debug_assert!(avg.is_integer());
    let avg = avg
        .to_integer()
        .to_biguint()
        .expect("nonnegative dimension");
    assert_eq!(
        skew_total, avg,
        "the two half-level dimension formulas disagree at mu={mu}, k={k}, n={n}"
    );
    Ok(skew_total)
}

/// The class-representative element `γ_μ` of `P_k(n)` (diagram basis): the
/// cycle diagrams of the parts of `mu` laid side by side, followed by
/// `k − |μ|` columns of isolated top and bottom vertices.
pub fn gamma_mu(mu: &IntegerPartition, k: usize, n: usize) -> Result<AlgebraElement> {
    let ell = mu.size();
    if ell > k {
        return Err(Error::IndexOutOfRange { index: ell, k });
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut offset = 0;
    for &r in mu.parts() {
        // The r-cycle (1, 2, ..., r): bottom c joins top of column c+1 mod r.
        for c in 1..=r {
            let image = if c == r { 1 } else { c + 1 };
            blocks.push(vec![offset + c, k + offset + image]);
        }
        offset += r;
    }
    for c in ell + 1..=k {
        blocks.push(vec![c]);
        blocks.push(vec![k + c]);
    }
    let key = SetPartition::from_blocks(2 * k, &blocks)?;
    AlgebraElement::single(Basis::Diagram, 2 * k, n, key, Rational::one())
}

/// Irreducible character of `P_k(n)` on `γ_μ`:
/// `ξ_λ(γ_μ) = n^{k−ℓ} Σ_δ z_δ^{-1} F_μ(δ) χ_λ(δ)`, valid for `n ≥ 2k`.
pub fn partition_algebra_character(
    lambda: &IntegerPartition,
    mu: &IntegerPartition,
    k: usize,
    n: usize,
) -> Result<Rational> {
    if n < 2 * k {
        return Err(Error::OutOfTheoremRange { two_k: 2 * k, n });
    }
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.to_string(), n));
    }
    let ell = mu.size();
    if ell > k {
        return Err(Error::IndexOutOfRange { index: ell, k });
    }
    let mut total = BigRational::zero();
    for class in conjugacy_classes(n) {
        let f = fixed_point_power(&class.delta, mu);
        let chi = irreducible_character(lambda, &class.delta)?;
        total += BigRational::from(f * chi) / BigRational::from(BigInt::from(class.z.clone()));
    }
    Ok(total * BigRational::from(int_pow(n, k - ell)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator_s;
    use itertools::Itertools;
    use num::ToPrimitive;

    fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn cycle_type(perm: &[usize]) -> IntegerPartition {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = perm[cur] - 1;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition::new(parts).unwrap()
    }

    #[test]
    fn class_data_small() {
        let classes = conjugacy_classes(3);
        let sizes: HashMap<String, usize> = classes
            .iter()
            .map(|c| (c.delta.to_string(), c.size.to_usize().unwrap()))
            .collect();
        assert_eq!(sizes["[1,1,1]"], 1);
        assert_eq!(sizes["[2,1]"], 3);
        assert_eq!(sizes["[3]"], 2);
        for n in 1..=7 {
            let classes = conjugacy_classes(n);
            let total: BigUint = classes.iter().map(|c| c.size.clone()).sum();
            assert_eq!(total, factorial(n), "class equation at n = {n}");
            for c in &classes {
                if c.delta.parts().iter().all(|&p| p == 1) {
                    assert_eq!(c.z, factorial(n));
                }
            }
        }
    }

    #[test]
    fn class_sizes_match_exhaustive_cycle_types() {
        for n in 1..=6 {
            let mut counts: HashMap<IntegerPartition, usize> = HashMap::new();
            for perm in (1..=n).permutations(n) {
                *counts.entry(cycle_type(&perm)).or_insert(0) += 1;
            }
            for class in conjugacy_classes(n) {
                assert_eq!(
                    counts[&class.delta],
                    class.size.to_usize().unwrap(),
                    "δ = {} at n = {n}",
                    class.delta
                );
            }
        }
    }

    #[test]
    fn character_values_small() {
        // χ_{[n]} = 1 everywhere; χ_{[n-1,1]} = F − 1; sign character.
        for n in 2..=6 {
            for class in conjugacy_classes(n) {
                let trivial = irreducible_character(&ip(&[n]), &class.delta).unwrap();
                assert_eq!(trivial, BigInt::one());
                let refl = irreducible_character(&ip(&[n - 1, 1]), &class.delta).unwrap();
                let f = fixed_point_count(&class.delta, 1) as i64;
                assert_eq!(refl, BigInt::from(f - 1));
                let sign = irreducible_character(&ip(&vec![1; n]), &class.delta).unwrap();
                let expected = if (n - class.delta.len()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(sign, BigInt::from(expected));
            }
        }
        assert_eq!(
            irreducible_character(&ip(&[2, 1]), &ip(&[1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            irreducible_character(&ip(&[2, 1]), &ip(&[3])).unwrap(),
            BigInt::from(-1)
        );
        assert!(irreducible_character(&ip(&[2, 1]), &ip(&[2, 2])).is_err());
    }

    #[test]
    fn character_identity_column_is_hook_dimension() {
        use crate::combinatorics::hook_dimension;
        for n in 1..=7 {
            let id = ip(&vec![1; n]);
            for lam in integer_partitions(n) {
                let chi = irreducible_character(&lam, &id).unwrap();
                assert_eq!(chi.to_biguint().unwrap(), hook_dimension(&lam), "λ = {lam}");
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=6 {
            let lams = integer_partitions(n);
            let classes = conjugacy_classes(n);
            for a in &lams {
                for b in &lams {
                    let mut total = BigRational::zero();
                    for class in &classes {
                        let xa = irreducible_character(a, &class.delta).unwrap();
                        let xb = irreducible_character(b, &class.delta).unwrap();
                        total += BigRational::from(xa * xb)
                            / BigRational::from(BigInt::from(class.z.clone()));
                    }
                    let expect = if a == b {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(total, expect, "⟨χ_{a}, χ_{b}⟩ at n = {n}");
                }
            }
        }
    }

    /// Permutation-module oracle: the trace of σ on the module of ordered
    /// t-tuples of distinct points is the falling factorial (F(σ))_t, and it
    /// must decompose as Σ_λ f^{λ/[n−t]} χ_λ(σ). Run over every σ literally.
    #[test]
    fn characters_match_permutation_module_traces() {
        for n in 1..=5 {
            let lams = integer_partitions(n);
            for perm in (1..=n).permutations(n) {
                let delta = cycle_type(&perm);
                for t in 0..=n {
                    // Count t-tuples of distinct points fixed by the permutation.
                    let fixed: Vec<usize> = (1..=n).filter(|&i| perm[i - 1] == i).collect();
                    let mut trace = 0usize;
                    if t <= fixed.len() {
                        trace = (0..t)
                            .map(|j| fixed.len() - j)
                            .product::<usize>()
                            .max(if t == 0 { 1 } else { 0 });
                        if t == 0 {
                            trace = 1;
                        }
                    } else if t == 0 {
                        trace = 1;
                    }
                    let mut total = BigInt::zero();
                    for lam in &lams {
                        if n - t > lam.row(0) {
                            continue;
                        }
                        let inner = if t == n {
                            IntegerPartition::empty()
                        } else {
                            ip(&[n - t])
                        };
                        let shape = SkewShape::new(lam.clone(), inner).unwrap();
                        let kostka = BigInt::from(skew_count(&shape));
                        total += kostka * irreducible_character(lam, &delta).unwrap();
                    }
                    assert_eq!(total, BigInt::from(trace), "n={n}, t={t}, δ={delta}");
                }
            }
        }
    }

    #[test]
    fn fixed_point_functions() {
        // F_{[1]} counts actual fixed points.
        let delta = ip(&[2, 1]);
        assert_eq!(fixed_point_count(&delta, 1), 1);
        // A 2-cycle squared is the identity.
        assert_eq!(fixed_point_count(&ip(&[2]), 2), 2);
        // The identity keeps n fixed points under every power.
        let id = ip(&[1, 1, 1, 1]);
        assert_eq!(
            fixed_point_power(&id, &ip(&[3, 2, 1])),
            BigInt::from(4 * 4 * 4)
        );
        assert_eq!(
            fixed_point_power(&delta, &IntegerPartition::empty()),
            BigInt::one()
        );
    }

    #[test]
    fn multiplicity_examples() {
        // m_{0,n}^λ = δ_{λ,[n]}.
        for n in 2..=5 {
            for lam in integer_partitions(n) {
                let m = multiplicity(&lam, 0, n, MultiplicityMethod::Character).unwrap();
                let expect = if lam == ip(&[n]) { 1u32 } else { 0 };
                assert_eq!(m, BigUint::from(expect), "λ = {lam}");
            }
        }
        assert_eq!(
            multiplicity(&ip(&[2, 1]), 2, 3, MultiplicityMethod::Character).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            multiplicity(&ip(&[2, 1]), 2, 3, MultiplicityMethod::StirlingSkew).unwrap(),
            BigUint::from(3u32)
        );
        // m_{4,5}^{[5]} = B(4,5) = 15.
        assert_eq!(
            multiplicity(&ip(&[5]), 4, 5, MultiplicityMethod::StirlingSkew).unwrap(),
            BigUint::from(15u32)
        );
        assert!(multiplicity(&ip(&[2, 1]), 2, 4, MultiplicityMethod::Character).is_err());
    }

    #[test]
    fn multiplicity_methods_agree() {
        use crate::combinatorics::restricted_bell;
        for n in 2..=5 {
            for k in 0..=4 {
                let mut sq = BigUint::zero();
                for lam in integer_partitions(n) {
                    let a = multiplicity(&lam, k, n, MultiplicityMethod::Character).unwrap();
                    let b = multiplicity(&lam, k, n, MultiplicityMethod::StirlingSkew).unwrap();
                    let c = multiplicity(&lam, k, n, MultiplicityMethod::Bratteli).unwrap();
                    assert_eq!(a, b, "λ={lam}, k={k}, n={n}");
                    assert_eq!(a, c, "λ={lam}, k={k}, n={n}");
                    sq += &a * &a;
                }
                assert_eq!(sq, restricted_bell(2 * k, n), "Σ m² at k={k}, n={n}");
            }
        }
    }

    #[test]
    fn half_multiplicities() {
        use crate::combinatorics::restricted_bell;
        // Σ_μ dim² = B(2k+1, n).
        for n in 2..=4 {
            for k in 0..=3 {
                let mut sq = BigUint::zero();
                for mu in integer_partitions(n - 1) {
                    let d = half_multiplicity(&mu, k, n).unwrap();
                    sq += &d * &d;
                }
                assert_eq!(sq, restricted_bell(2 * k + 1, n), "k={k}, n={n}");
            }
        }
        // k=2, n=3 gives B(5,3) = 41.
        let mut sq = BigUint::zero();
        for mu in integer_partitions(2) {
            let d = half_multiplicity(&mu, 2, 3).unwrap();
            sq += &d * &d;
        }
        assert_eq!(sq, BigUint::from(41u32));
        // μ = [n−1] matches m_{k+1,n}^{[n]}.
        for n in 2..=5 {
            for k in 0..=3 {
                assert_eq!(
                    half_multiplicity(&ip(&[n - 1]), k, n).unwrap(),
                    multiplicity(&ip(&[n]), k + 1, n, MultiplicityMethod::Character).unwrap(),
                    "k={k}, n={n}"
                );
            }
        }
        // k=0: only [n−1] survives, with dimension 1.
        assert_eq!(half_multiplicity(&ip(&[3]), 0, 4).unwrap(), BigUint::one());
        assert!(half_multiplicity(&ip(&[2]), 1, 4).is_err());
    }

    #[test]
    fn gamma_mu_shapes() {
        // μ = [1^k] is the identity.
        let g = gamma_mu(&ip(&[1, 1, 1]), 3, 7).unwrap();
        assert_eq!(g, AlgebraElement::identity(6, 7));
        // μ = [2] at k = 2 is the transposition s_1.
        let g = gamma_mu(&ip(&[2]), 2, 5).unwrap();
        assert_eq!(g, generator_s(1, 2, 5).unwrap());
        // γ_{[5,3,2,2]} at k = 15 has three empty columns.
        let g = gamma_mu(&ip(&[5, 3, 2, 2]), 15, 31).unwrap();
        let key = g.terms().keys().next().unwrap();
        let singleton_blocks = key.blocks().iter().filter(|b| b.len() == 1).count();
        assert_eq!(singleton_blocks, 6); // three empty columns, two vertices each
        assert!(key.same_block(1, 15 + 2));
        assert!(key.same_block(5, 15 + 1));
        assert!(key.same_block(6, 15 + 7));
        assert!(key.same_block(8, 15 + 6));
        assert!(gamma_mu(&ip(&[3]), 2, 5).is_err());
        // μ = ∅ is the all-singletons diagram.
        let g = gamma_mu(&IntegerPartition::empty(), 2, 5).unwrap();
        let key = g.terms().keys().next().unwrap();
        assert_eq!(key.block_count(), 4);
    }

    #[test]
    fn partition_algebra_character_values() {
        // ξ_λ(I_k) = m_{k,n}^λ when n ≥ 2k.
        for n in 4..=6 {
            for k in 1..=n / 2 {
                for lam in integer_partitions(n) {
                    let xi = partition_algebra_character(&lam, &ip(&vec![1; k]), k, n).unwrap();
                    let m = multiplicity(&lam, k, n, MultiplicityMethod::Character).unwrap();
                    assert_eq!(
                        xi,
                        BigRational::from(BigInt::from(m)),
                        "λ={lam}, k={k}, n={n}"
                    );
                }
            }
        }
        // Out of theorem range.
        assert!(matches!(
            partition_algebra_character(&ip(&[2, 1]), &ip(&[1]), 2, 3),
            Err(Error::OutOfTheoremRange { .. })
        ));
    }

    /// Bimodule trace identity: Σ_λ χ_λ(δ) ξ_λ(γ_μ) = n^{k−ℓ} F_μ(δ).
    #[test]
    fn bimodule_trace_identity() {
        for n in [4usize, 5] {
            let k = 2;
            let lams = integer_partitions(n);
            for ell in 0..=k {
                for mu in integer_partitions(ell) {
                    for class in conjugacy_classes(n) {
                        let mut total = BigRational::zero();
                        for lam in &lams {
                            let chi = irreducible_character(lam, &class.delta).unwrap();
                            let xi = partition_algebra_character(lam, &mu, k, n).unwrap();
                            total += BigRational::from(chi) * xi;
                        }
                        let expect = BigRational::from(
                            int_pow(n, k - ell) * fixed_point_power(&class.delta, &mu),
                        );
                        assert_eq!(total, expect, "μ={mu}, δ={}, n={n}", class.delta);
                    }
                }
            }
        }
    }
}
