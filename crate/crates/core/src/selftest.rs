//! The built-in invariant suite behind `orbihom selftest`.
//!
//! Each check is a deterministic end-to-end computation with a known exact
//! answer: the Koszul resolution of the origin, the twisted
//! Hochschild–Kostant–Rosenberg comparison, the chain-map identities tying
//! the Koszul, bar and form complexes together, and the headline
//! crossed-product values.  One `[PASS]`/`[FAIL]` line is emitted per
//! check; any failure turns into an internal error so the CLI exits
//! nonzero.

use num_traits::Zero;

use crate::exactla::RationalMatrix;
use crate::groups::{
    close_group, permutation_cycles, symmetric_group_linear, symmetric_group_on_torus,
    GroupElement, DEFAULT_GROUP_LIMIT,
};
use crate::hochschild::{
    b_twisted, check_chi_boundary, check_chi_connes, check_contraction_identity,
    check_kappa_chain_map, hc_twisted_dims, hh_twisted_dims, mixed_complex, TwistedBar,
};
use crate::koszul::{koszul_homology_dims, koszul_origin_complex, koszul_restriction_dims};
use crate::polyforms::{binomial, form_space_dim};
use crate::sparse::SparseMatrix;
use crate::weyl::{hp_weyl_formula, partitions, sigma_lambda, weyl_cross_check};
use crate::{crossprod, Error, Result};

fn fail(msg: String) -> Result<()> {
    Err(Error::Internal(msg))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        fail(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

/// Sample twists used by several checks: the sign on one variable, the swap
/// on two, a 3-cycle on three, and an order-2 diagonal with a fixed line.
fn sample_twists() -> Vec<RationalMatrix> {
    vec![
        RationalMatrix::from_i64(&[&[-1]]),
        RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        RationalMatrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
        RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]),
    ]
}

fn check_koszul_origin() -> Result<()> {
    for n in 1..=3 {
        let table = koszul_homology_dims(&koszul_origin_complex(n, 4)?)?;
        for ((q, d), dim) in table.iter() {
            let want = usize::from(q == 0 && d == 0);
            expect_eq(dim, want, &format!("origin complex n={n} at (q={q}, D={d})"))?;
        }
        expect_eq(table.get(0, 0), 1, &format!("origin complex n={n} at (0, 0)"))?;
    }
    Ok(())
}

fn check_twisted_hkr() -> Result<()> {
    for g in sample_twists() {
        let n = g.rows();
        let fixed_dim = n - g.sub(&RationalMatrix::identity(n))?.rank();
        let koszul = koszul_restriction_dims(&g, 4)?;
        let bar = hh_twisted_dims(&g, 3, 4)?;
        for q in 0..=3 {
            for d in 0..=4 {
                let closed = if d >= q { form_space_dim(fixed_dim, d - q, q) } else { 0 };
                expect_eq(bar.get(q, d), closed, &format!("bar vs closed form at ({q}, {d})"))?;
                expect_eq(
                    koszul.get(q, d),
                    closed,
                    &format!("koszul vs closed form at ({q}, {d})"),
                )?;
            }
        }
    }
    Ok(())
}

fn check_chain_maps() -> Result<()> {
    for g in sample_twists() {
        let tb = TwistedBar::new(&g, 3)?;
        for d in 0..=3 {
            for q in 1..=3 {
                if !check_contraction_identity(&g, q, d)? {
                    return fail(format!("contraction identity at (q={q}, D={d})"));
                }
                if !check_kappa_chain_map(&g, q, d)? {
                    return fail(format!("kappa chain map at (q={q}, D={d})"));
                }
                if !check_chi_boundary(&g, q, d)? {
                    return fail(format!("chi is not a chain map at (q={q}, D={d})"));
                }
            }
            for q in 0..=3 {
                if !check_chi_connes(&g, q, d)? {
                    return fail(format!("chi does not carry B to d at (q={q}, D={d})"));
                }
                let b_q = tb.b(q, d)?;
                let b_next = tb.b(q + 1, d)?;
                if !b_q.mul(&b_next)?.is_zero() {
                    return fail(format!("b^2 != 0 at (q={q}, D={d})"));
                }
            }
            let mc = mixed_complex(&tb, &[], 4, d)?;
            for m in 1..4 {
                let anti = mc.connes_bars[m - 1]
                    .mul(&mc.b_bars[m])?
                    .add(&mc.b_bars[m + 1].mul(&mc.connes_bars[m])?)?;
                if !anti.is_zero() {
                    return fail(format!("bB + Bb != 0 on invariants at (m={m}, D={d})"));
                }
            }
            for m in 0..3 {
                if !mc.connes_bars[m + 1].mul(&mc.connes_bars[m])?.is_zero() {
                    return fail(format!("B^2 != 0 on invariants at (m={m}, D={d})"));
                }
            }
        }
    }
    Ok(())
}

fn check_vanishing_rule() -> Result<()> {
    let neg = GroupElement::monomial(vec![0], vec![crate::exactla::ratio(1, 2)])?;
    let group = close_group(&[neg], DEFAULT_GROUP_LIMIT)?;
    let report = crossprod::hp_report(&group)?;
    expect_eq(report.totals.hp, Some([1, 1]), "HP of Z/2 on the punctured line")?;
    expect_eq(report.per_class[1].hp, Some([0, 0]), "shifted class contribution")
}

fn check_crossed_hh() -> Result<()> {
    let swap = GroupElement::linear(RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]))?;
    let group = close_group(&[swap], DEFAULT_GROUP_LIMIT)?;
    let report = crossprod::hh_graded_report(&group, 3, 4, true)?;
    let id_table = report.per_class[0].hh.as_ref().unwrap();
    expect_eq(id_table.get(0, 2), 2, "invariant quadratics on C^2")?;
    let swap_table = report.per_class[1].hh.as_ref().unwrap();
    for d in 1..=4 {
        expect_eq(swap_table.get(1, d), 1, &format!("swap class at (1, {d})"))?;
    }
    if report.per_class.iter().any(|c| c.oracle_checked != Some(true)) {
        return fail("bar oracle did not confirm every class".into());
    }
    Ok(())
}

fn check_orbifold_hp() -> Result<()> {
    let s2 = symmetric_group_on_torus(2, DEFAULT_GROUP_LIMIT)?;
    expect_eq(crossprod::hp_report(&s2)?.totals.hp, Some([2, 2]), "HP of T^2 / S_2")?;

    let s4 = symmetric_group_on_torus(4, DEFAULT_GROUP_LIMIT)?;
    let report = crossprod::hp_report(&s4)?;
    let classes = s4.conjugacy_classes();
    let mut found = false;
    for (class, entry) in classes.iter().zip(&report.per_class) {
        let GroupElement::Monomial { perm, .. } = s4.element(class.representative) else {
            return fail("expected monomial elements".into());
        };
        let mut cycle_type: Vec<usize> = permutation_cycles(perm).iter().map(Vec::len).collect();
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        if cycle_type == [2, 2] {
            found = true;
            expect_eq(entry.hp, Some([1, 1]), "sigma_(2,2) class contribution")?;
        }
    }
    if !found {
        return fail("no (2,2) class found in S_4".into());
    }
    Ok(())
}

fn check_weyl() -> Result<()> {
    let expected = [[1, 1], [2, 2], [4, 4], [7, 7], [12, 12]];
    for (n, want) in (1..=5).zip(expected) {
        expect_eq(hp_weyl_formula(n)?.totals, want, &format!("Weyl totals at n={n}"))?;
    }
    for n in 1..=4 {
        if !weyl_cross_check(n)? {
            return fail(format!("Weyl cross-check failed at n={n}"));
        }
    }
    Ok(())
}

fn check_azumaya() -> Result<()> {
    let args = crate::cli::JobArgs {
        preset: Some("m2-azumaya".into()),
        q_max: Some(2),
        ..crate::cli::JobArgs::default()
    };
    let job = crate::cli::resolve(&args)?;
    let report = crate::cli::job_report("hh", &job)?;
    expect_eq(report.per_class.len(), 4, "class count of (Z/2)^2")?;
    for (i, entry) in report.per_class.iter().enumerate() {
        let table = entry.hh.as_ref().unwrap();
        for q in 0..=2 {
            let want = usize::from(i == 0 && q == 0);
            expect_eq(table.get(q, 0), want, &format!("azumaya class {i} at q={q}"))?;
        }
    }
    Ok(())
}

fn check_group_bookkeeping() -> Result<()> {
    for group in [symmetric_group_linear(3, DEFAULT_GROUP_LIMIT)?,
                  symmetric_group_on_torus(4, DEFAULT_GROUP_LIMIT)?] {
        let order = group.order();
        let classes = group.conjugacy_classes();
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        expect_eq(total, order, "class sizes sum to the group order")?;
        for class in &classes {
            let centralizer = group.centralizer(class.representative).len();
            expect_eq(centralizer * class.members.len(), order, "orbit-stabilizer")?;
        }
    }
    Ok(())
}

fn check_partition_combinatorics() -> Result<()> {
    fn count(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|first| count(n - first, first)).sum()
    }
    for n in 1..=10 {
        expect_eq(partitions(n).len(), count(n, n), &format!("partition count at n={n}"))?;
    }
    for n in 1..=5 {
        for lambda in partitions(n) {
            let mut lengths: Vec<usize> =
                permutation_cycles(&sigma_lambda(&lambda)).iter().map(Vec::len).collect();
            lengths.sort_unstable_by(|a, b| b.cmp(a));
            expect_eq(lengths, lambda, "cycle type of sigma_lambda")?;
        }
    }
    Ok(())
}

fn check_form_dimensions() -> Result<()> {
    for m in 0..=3 {
        for c in 0..=4 {
            for q in 0..=3 {
                let monomials = if m == 0 {
                    usize::from(c == 0)
                } else {
                    binomial(m + c - 1, c)
                };
                expect_eq(
                    form_space_dim(m, c, q),
                    monomials * binomial(m, q),
                    &format!("form dimension at (m={m}, c={c}, q={q})"),
                )?;
            }
        }
    }
    Ok(())
}

fn check_classical_cyclic_line() -> Result<()> {
    let table = hc_twisted_dims(&RationalMatrix::identity(1), 4, 3)?;
    for n in 0..=4 {
        for d in 0..=3 {
            let want = usize::from((d == 0 && n % 2 == 0) || (n == 0 && d > 0));
            expect_eq(table.get(n, d), want, &format!("HC of Q[x] at (n={n}, D={d})"))?;
        }
    }
    Ok(())
}

fn check_sparse_ranks() -> Result<()> {
    let dense = RationalMatrix::from_i64(&[&[2, 4, 1], &[1, 2, 0], &[0, 0, 3]]);
    let mut sparse = SparseMatrix::new(3);
    for j in 0..3 {
        let col: Vec<(usize, crate::exactla::Rational)> = (0..3)
            .filter(|&i| !dense.get(i, j).is_zero())
            .map(|i| (i, dense.get(i, j).clone()))
            .collect();
        sparse.push_column(col);
    }
    expect_eq(sparse.rank_exact_best(), dense.rank(), "sparse vs dense rank")?;
    expect_eq(sparse.rank_mod_p(2_147_483_647), Some(dense.rank()), "modular rank")?;
    // A twisted boundary is exactly singular; ranks must agree there too.
    let b = b_twisted(&RationalMatrix::from_i64(&[&[-1]]), 2, 2)?;
    expect_eq(b.rank(), 1, "rank of the twisted b at (2, 2)")
}

fn check_report_determinism() -> Result<()> {
    let args = crate::cli::JobArgs {
        preset: Some("s2-torus".into()),
        ..crate::cli::JobArgs::default()
    };
    let job = crate::cli::resolve(&args)?;
    let a = crate::cli::job_report("hp", &job)?.to_json();
    let b = crate::cli::job_report("hp", &job)?.to_json();
    expect_eq(a, b, "byte-stable reports")
}

/// Run every check, emitting one `[PASS]`/`[FAIL]` line through `emit`, and
/// fail with an internal error if anything failed.
pub fn run_selftest(mut emit: impl FnMut(&str)) -> Result<()> {
    let checks: &[(&str, fn() -> Result<()>)] = &[
        ("koszul resolution of the origin", check_koszul_origin),
        ("twisted Hochschild-Kostant-Rosenberg comparison", check_twisted_hkr),
        ("chain-map identity suite", check_chain_maps),
        ("vanishing rule for the shifted involution", check_vanishing_rule),
        ("crossed-product Hochschild values for S_2 on C^2", check_crossed_hh),
        ("orbifold periodic cyclic values", check_orbifold_hp),
        ("affine Weyl formula and cross-check", check_weyl),
        ("azumaya matrix crossed product", check_azumaya),
        ("group bookkeeping invariants", check_group_bookkeeping),
        ("partition combinatorics", check_partition_combinatorics),
        ("graded form dimensions", check_form_dimensions),
        ("classical cyclic homology of the line", check_classical_cyclic_line),
        ("sparse rank agreement", check_sparse_ranks),
        ("report determinism", check_report_determinism),
    ];
    let mut failures = 0;
    for (name, run) in checks {
        match run() {
            Ok(()) => emit(&format!("[PASS] {name}")),
            Err(e) => {
                failures += 1;
                emit(&format!("[FAIL] {name}: {e}"));
            }
        }
    }
    emit(&format!("{} checks, {} failed", checks.len(), failures));
    if failures > 0 {
        Err(Error::Internal(format!("{failures} selftest check(s) failed")))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::DimTable;

    #[test]
    fn selftest_passes_and_reports_every_check() {
        let mut lines = Vec::new();
        run_selftest(|l| lines.push(l.to_string())).unwrap();
        assert!(lines.iter().all(|l| !l.starts_with("[FAIL]")));
        assert_eq!(lines.iter().filter(|l| l.starts_with("[PASS]")).count(), 14);
    }

    #[test]
    fn failures_are_counted_and_reported() {
        assert!(matches!(
            expect_eq(1, 2, "deliberate mismatch"),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn dim_table_defaults_keep_missing_entries_at_zero() {
        let table = DimTable::new(1, 1);
        assert_eq!(table.get(5, 5), 0);
    }
}
