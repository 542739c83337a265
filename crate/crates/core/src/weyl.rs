//! The affine Weyl computation: periodic cyclic homology of
//! `O(T^n) ⋊ S_n` in closed form over the partitions of `n`.
//!
//! Conjugacy classes of `S_n` are cycle types, so the class decomposition
//! becomes a sum over partitions `λ`.  The class of `σ_λ` has fixed torus
//! `T^{r(λ)}` (one coordinate per part), the centralizer permutes equal
//! parts and rotates within cycles, and the invariant cohomology collapses
//! to that of `T^{t(λ)}` where `t(λ)` counts distinct part sizes: invariant
//! exterior forms on the multiplicity space of one part size are spanned by
//! `1` and the coordinate sum.  Each partition therefore contributes
//! `2^{t(λ)-1}` to both parities.
//!
//! `hp_weyl_formula` evaluates the contribution twice — binomial sums and
//! exterior-power invariants — and `weyl_cross_check` recomputes the whole
//! answer per class through the general crossed-product machinery, which
//! makes this the broadest end-to-end consistency test in the crate.

use std::collections::BTreeMap;

use crate::crossprod::hp_report;
use crate::exactla::{invariant_dimension, RationalMatrix};
use crate::groups::{
    cycle_text, permutation_cycles, symmetric_group_on_torus, GroupElement, DEFAULT_GROUP_LIMIT,
};
use crate::polyforms::binomial;
use crate::report::{PartitionEntry, WeylReport};
use crate::{Error, Result};

/// Largest `n` the cross-check runs at by default; `S_n` closure and the
/// per-class invariant theory stay comfortably small up to here.
pub const DEFAULT_CROSS_CHECK_BOUND: usize = 4;

/// All partitions of `n` in reverse-lexicographic order, `[n]` first and
/// `[1, 1, …, 1]` last, each a weakly decreasing list of parts.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// The block-cycle permutation of cycle type `λ`: consecutive blocks of
/// sizes `λ_1, …, λ_r`, each cycled.  Returned 0-based, `i ↦ perm[i]`.
pub fn sigma_lambda(lambda: &[usize]) -> Vec<usize> {
    let n: usize = lambda.iter().sum();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &part in lambda {
        for offset in 0..part {
            perm[start + offset] = start + (offset + 1) % part;
        }
        start += part;
    }
    perm
}

/// Number of distinct part sizes of `λ`.
pub fn t_of_lambda(lambda: &[usize]) -> usize {
    let mut distinct = 0;
    for (i, part) in lambda.iter().enumerate() {
        if i == 0 || lambda[i - 1] != *part {
            distinct += 1;
        }
    }
    distinct
}

/// One parity of `dim H^*(T^t)`, as a binomial sum.
fn parity_sum_binomial(t: usize, parity: usize) -> usize {
    (parity..=t).step_by(2).map(|k| binomial(t, k)).sum()
}

/// The same number as invariant dimensions of exterior powers of the
/// trivial action on `Q^t`.
fn parity_sum_exterior(t: usize, parity: usize) -> Result<usize> {
    let id = RationalMatrix::identity(t);
    let mut total = 0;
    let mut k = parity;
    while k <= t {
        total += invariant_dimension(&[id.exterior_power(k)?])?;
        k += 2;
    }
    Ok(total)
}

/// Closed-form `HP` of `O(T^n) ⋊ S_n` with the per-partition breakdown.
///
/// Every partition contributes `(2^{t(λ)-1}, 2^{t(λ)-1})`; the binomial
/// and exterior-power evaluations are both computed and must agree.
pub fn hp_weyl_formula(n: usize) -> Result<WeylReport> {
    if n == 0 {
        return Err(Error::Config("the Weyl formula needs n >= 1".into()));
    }
    let mut per_partition = Vec::new();
    let mut totals = [0usize; 2];
    for lambda in partitions(n) {
        let t = t_of_lambda(&lambda);
        let hp = [parity_sum_binomial(t, 0), parity_sum_binomial(t, 1)];
        for parity in 0..2 {
            let exterior = parity_sum_exterior(t, parity)?;
            if exterior != hp[parity] || hp[parity] != 1 << (t - 1) {
                return Err(Error::Internal(format!(
                    "parity {parity} of T^{t}: binomial {}, exterior {exterior}, closed form {}",
                    hp[parity],
                    1usize << (t - 1)
                )));
            }
        }
        totals[0] += hp[0];
        totals[1] += hp[1];
        per_partition.push(PartitionEntry {
            sigma_cycles: cycle_text(&sigma_lambda(&lambda)),
            fixed_rank: lambda.len(),
            distinct_parts: t,
            partition: lambda,
            hp,
        });
    }
    Ok(WeylReport { n, per_partition, totals, cross_check: None })
}

/// Recompute `HP` of `O(T^n) ⋊ S_n` class by class through the general
/// crossed-product machinery and compare against the closed form — per
/// partition, not just in total.
pub fn weyl_cross_check(n: usize) -> Result<bool> {
    weyl_cross_check_with_bound(n, DEFAULT_CROSS_CHECK_BOUND)
}

/// `weyl_cross_check` with an explicit size bound.
pub fn weyl_cross_check_with_bound(n: usize, bound: usize) -> Result<bool> {
    if n > bound {
        return Err(Error::SizeLimitExceeded(format!(
            "cross-check bound is {bound}, got n = {n}"
        )));
    }
    let formula = hp_weyl_formula(n)?;
    let group = symmetric_group_on_torus(n, DEFAULT_GROUP_LIMIT)?;
    let report = hp_report(&group)?;

    let mut by_cycle_type: BTreeMap<Vec<usize>, [usize; 2]> = BTreeMap::new();
    for (class, entry) in group.conjugacy_classes().iter().zip(&report.per_class) {
        let GroupElement::Monomial { perm, .. } = group.element(class.representative) else {
            return Err(Error::Internal("expected a torus action".into()));
        };
        let mut cycle_type: Vec<usize> =
            permutation_cycles(perm).iter().map(Vec::len).collect();
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        by_cycle_type.insert(cycle_type, entry.hp.unwrap_or([0, 0]));
    }

    Ok(by_cycle_type.len() == formula.per_partition.len()
        && report.totals.hp == Some(formula.totals)
        && formula
            .per_partition
            .iter()
            .all(|p| by_cycle_type.get(&p.partition) == Some(&p.hp)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count of partitions of `n` with parts at most `m`.
    fn partition_count(n: usize, m: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=m.min(n)).map(|first| partition_count(n - first, first)).sum()
    }

    #[test]
    fn partition_enumeration_is_complete_and_ordered() {
        for n in 1..=12 {
            let parts = partitions(n);
            assert_eq!(parts.len(), partition_count(n, n), "count at n={n}");
            for lambda in &parts {
                assert_eq!(lambda.iter().sum::<usize>(), n);
                assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
            }
            let mut sorted = parts.clone();
            sorted.sort_by(|a, b| b.cmp(a));
            assert_eq!(parts, sorted, "reverse-lexicographic order at n={n}");
            let mut dedup = parts.clone();
            dedup.dedup();
            assert_eq!(parts.len(), dedup.len());
        }
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(
            partitions(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn sigma_lambda_has_cycle_type_lambda() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                let perm = sigma_lambda(&lambda);
                let mut lengths: Vec<usize> =
                    permutation_cycles(&perm).iter().map(Vec::len).collect();
                lengths.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(lengths, lambda);
            }
        }
        assert_eq!(sigma_lambda(&[2, 2]), vec![1, 0, 3, 2]);
        assert_eq!(cycle_text(&sigma_lambda(&[3, 1])), "(1 2 3)");
    }

    #[test]
    fn distinct_part_counts() {
        assert_eq!(t_of_lambda(&[2, 1, 1]), 2);
        assert_eq!(t_of_lambda(&[7]), 1);
        assert_eq!(t_of_lambda(&[3, 2, 2, 1]), 3);
        assert_eq!(t_of_lambda(&[1, 1, 1, 1]), 1);
    }

    #[test]
    fn weyl_totals_for_small_n() {
        let expected = [[1, 1], [2, 2], [4, 4], [7, 7], [12, 12]];
        for (n, want) in (1..=5).zip(expected) {
            let report = hp_weyl_formula(n).unwrap();
            assert_eq!(report.totals, want, "totals at n={n}");
        }
    }

    #[test]
    fn weyl_breakdown_at_n4() {
        let report = hp_weyl_formula(4).unwrap();
        let got: Vec<(Vec<usize>, [usize; 2])> = report
            .per_partition
            .iter()
            .map(|p| (p.partition.clone(), p.hp))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![4], [1, 1]),
                (vec![3, 1], [2, 2]),
                (vec![2, 2], [1, 1]),
                (vec![2, 1, 1], [2, 2]),
                (vec![1, 1, 1, 1], [1, 1]),
            ]
        );
        assert_eq!(report.per_partition[1].sigma_cycles, "(1 2 3)");
        assert_eq!(report.per_partition[1].fixed_rank, 2);
    }

    #[test]
    fn parities_always_agree() {
        for n in 1..=8 {
            let report = hp_weyl_formula(n).unwrap();
            assert_eq!(report.totals[0], report.totals[1], "n={n}");
            for p in &report.per_partition {
                assert_eq!(p.hp[0], p.hp[1]);
            }
        }
    }

    #[test]
    fn cross_check_against_the_general_machinery() {
        for n in 1..=3 {
            assert!(weyl_cross_check(n).unwrap(), "n={n}");
        }
        assert!(matches!(
            weyl_cross_check(5),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn formula_rejects_n_zero() {
        assert!(matches!(hp_weyl_formula(0), Err(Error::Config(_))));
    }
}
