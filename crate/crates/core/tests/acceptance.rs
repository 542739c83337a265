//! Acceptance suite: the nine headline results the crate must reproduce
//! exactly, one pass/fail line each.  Runs as a plain binary (no test
//! harness) so the lines always reach the terminal; any failure exits
//! nonzero.

use orbihom::exactla::{ratio, RationalMatrix};
use orbihom::groups::{
    close_group, permutation_cycles, symmetric_group_on_torus, GroupElement, DEFAULT_GROUP_LIMIT,
};
use orbihom::hochschild::{
    check_chi_boundary, check_chi_connes, check_contraction_identity, check_kappa_chain_map,
    hh_twisted_dims, mixed_complex, TwistedBar,
};
use orbihom::koszul::{koszul_homology_dims, koszul_origin_complex, koszul_restriction_dims};
use orbihom::polyforms::form_space_dim;
use orbihom::weyl::{hp_weyl_formula, weyl_cross_check};
use orbihom::{cli, crossprod};

type Outcome = Result<(), String>;

fn check<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn twists() -> Vec<RationalMatrix> {
    vec![
        RationalMatrix::from_i64(&[&[-1]]),
        RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        RationalMatrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
        RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]),
    ]
}

/// Koszul resolution of the origin: homology is one-dimensional at
/// `(q, D) = (0, 0)` and zero elsewhere, for `n = 1, 2, 3` and `D <= 4`.
fn criterion_1() -> Outcome {
    for n in 1..=3 {
        let table = koszul_homology_dims(&koszul_origin_complex(n, 4).map_err(err)?).map_err(err)?;
        check(table.get(0, 0), 1, &format!("n={n} at (0, 0)"))?;
        for ((q, d), dim) in table.iter() {
            if (q, d) != (0, 0) {
                check(dim, 0, &format!("n={n} at (q={q}, D={d})"))?;
            }
        }
    }
    Ok(())
}

/// Twisted Hochschild–Kostant–Rosenberg: the Koszul route, the bar-complex
/// oracle and the closed form agree for four sample twists, `q <= 3`,
/// `D <= 4`.
fn criterion_2() -> Outcome {
    for g in twists() {
        let n = g.rows();
        let fixed = n - g.sub(&RationalMatrix::identity(n)).map_err(err)?.rank();
        let koszul = koszul_restriction_dims(&g, 4).map_err(err)?;
        let bar = hh_twisted_dims(&g, 3, 4).map_err(err)?;
        for q in 0..=3 {
            for d in 0..=4 {
                let closed = if d >= q { form_space_dim(fixed, d - q, q) } else { 0 };
                check(bar.get(q, d), closed, &format!("bar route at (q={q}, D={d})"))?;
                check(koszul.get(q, d), closed, &format!("koszul route at (q={q}, D={d})"))?;
            }
        }
    }
    Ok(())
}

/// Chain-map identity suite on all blocks `q <= 3`, `D <= 3`, for four
/// distinct twists: the Koszul comparison map and the contraction are chain
/// homotopy data for `b_g`, and the CHKR map intertwines `(b_g, B_g)` with
/// `(0, d)`; the mixed-complex identities hold on the invariant subcomplex.
fn criterion_3() -> Outcome {
    for g in twists() {
        let tb = TwistedBar::new(&g, 3).map_err(err)?;
        for d in 0..=3 {
            for q in 1..=3 {
                for (name, ok) in [
                    ("s b' + b' s = id", check_contraction_identity(&g, q, d).map_err(err)?),
                    ("kappa chain map", check_kappa_chain_map(&g, q, d).map_err(err)?),
                    ("chi b = 0", check_chi_boundary(&g, q, d).map_err(err)?),
                ] {
                    if !ok {
                        return Err(format!("{name} fails at (q={q}, D={d})"));
                    }
                }
            }
            for q in 0..=3 {
                if !check_chi_connes(&g, q, d).map_err(err)? {
                    return Err(format!("chi B = d chi fails at (q={q}, D={d})"));
                }
                let square = tb.b(q, d).map_err(err)?.mul(&tb.b(q + 1, d).map_err(err)?);
                if !square.map_err(err)?.is_zero() {
                    return Err(format!("b^2 != 0 at (q={q}, D={d})"));
                }
            }
            let mc = mixed_complex(&tb, &[], 4, d).map_err(err)?;
            for m in 1..4 {
                let anti = mc.connes_bars[m - 1]
                    .mul(&mc.b_bars[m])
                    .and_then(|x| x.add(&mc.b_bars[m + 1].mul(&mc.connes_bars[m])?))
                    .map_err(err)?;
                if !anti.is_zero() {
                    return Err(format!("bB + Bb != 0 on invariants at (m={m}, D={d})"));
                }
            }
            for m in 0..3 {
                if !mc.connes_bars[m + 1].mul(&mc.connes_bars[m]).map_err(err)?.is_zero() {
                    return Err(format!("B^2 != 0 on invariants at (m={m}, D={d})"));
                }
            }
        }
    }
    Ok(())
}

/// Vanishing rule: `Z/2` on the punctured line by `t -> -t` has an empty
/// fixed set in the nontrivial class; totals are `HP = (1, 1)`.
fn criterion_4() -> Outcome {
    let neg = GroupElement::monomial(vec![0], vec![ratio(1, 2)]).map_err(err)?;
    let group = close_group(&[neg], DEFAULT_GROUP_LIMIT).map_err(err)?;
    let report = crossprod::hp_report(&group).map_err(err)?;
    check(report.per_class[1].hp, Some([0, 0]), "nontrivial class")?;
    check(report.totals.hp, Some([1, 1]), "totals")
}

/// Crossed-product Hochschild values for `S_2` on `C^2`, with the bar
/// oracle confirming every class.
fn criterion_5() -> Outcome {
    let swap = GroupElement::linear(RationalMatrix::from_i64(&[&[0, 1], &[1, 0]])).map_err(err)?;
    let group = close_group(&[swap], DEFAULT_GROUP_LIMIT).map_err(err)?;
    let report = crossprod::hh_graded_report(&group, 3, 4, true).map_err(err)?;
    let id_table = report.per_class[0].hh.as_ref().unwrap();
    check(id_table.get(0, 2), 2, "identity class at (q=0, D=2)")?;
    let swap_table = report.per_class[1].hh.as_ref().unwrap();
    for d in 1..=4 {
        check(swap_table.get(1, d), 1, &format!("swap class at (q=1, D={d})"))?;
    }
    for entry in &report.per_class {
        check(entry.oracle_checked, Some(true), "oracle agreement")?;
    }
    Ok(())
}

/// Orbifold periodic cyclic values: `S_2` on `T^2` gives `(2, 2)`, and the
/// `(2,2)`-cycle-type class of `S_4` on `T^4` contributes `(1, 1)` through
/// its rank-2 fixed torus with the swap action.
fn criterion_6() -> Outcome {
    let s2 = symmetric_group_on_torus(2, DEFAULT_GROUP_LIMIT).map_err(err)?;
    check(crossprod::hp_report(&s2).map_err(err)?.totals.hp, Some([2, 2]), "S_2 on T^2")?;

    let s4 = symmetric_group_on_torus(4, DEFAULT_GROUP_LIMIT).map_err(err)?;
    let report = crossprod::hp_report(&s4).map_err(err)?;
    for (class, entry) in s4.conjugacy_classes().iter().zip(&report.per_class) {
        let GroupElement::Monomial { perm, .. } = s4.element(class.representative) else {
            return Err("expected monomial elements".into());
        };
        let mut cycle_type: Vec<usize> = permutation_cycles(perm).iter().map(Vec::len).collect();
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        if cycle_type == [2, 2] {
            return check(entry.hp, Some([1, 1]), "sigma_(2,2) class");
        }
    }
    Err("no (2,2) class found in S_4".into())
}

/// Affine Weyl theorem: totals `(1,1), (2,2), (4,4), (7,7), (12,12)` for
/// `n = 1..5`, and the per-class cross-check agrees for `n <= 4`.
fn criterion_7() -> Outcome {
    let expected = [[1, 1], [2, 2], [4, 4], [7, 7], [12, 12]];
    for (n, want) in (1..=5).zip(expected) {
        check(hp_weyl_formula(n).map_err(err)?.totals, want, &format!("totals at n={n}"))?;
    }
    for n in 1..=4 {
        if !weyl_cross_check(n).map_err(err)? {
            return Err(format!("cross-check disagreed at n={n}"));
        }
    }
    Ok(())
}

/// Azumaya example: `M_2 ⋊ (Z/2)^2` has `HH_0 = 1` concentrated in the
/// identity class, all other class components zero in degrees `<= 2`,
/// via the structure-constant bar complex.
fn criterion_8() -> Outcome {
    let args = cli::JobArgs {
        preset: Some("m2-azumaya".into()),
        q_max: Some(2),
        ..cli::JobArgs::default()
    };
    let job = cli::resolve(&args).map_err(err)?;
    let report = cli::job_report("hh", &job).map_err(err)?;
    check(report.per_class.len(), 4, "class count")?;
    for (i, entry) in report.per_class.iter().enumerate() {
        let table = entry.hh.as_ref().unwrap();
        for q in 0..=2 {
            let want = usize::from(i == 0 && q == 0);
            check(table.get(q, 0), want, &format!("class {i} at q={q}"))?;
        }
    }
    Ok(())
}

/// The `selftest` command runs the invariant suite and exits 0.
fn criterion_9() -> Outcome {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_orbihom"))
        .arg("selftest")
        .output()
        .map_err(|e| format!("cannot spawn the binary: {e}"))?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    if !output.status.success() {
        return Err(format!("selftest exited with {:?}:\n{stdout}", output.status.code()));
    }
    if stdout.lines().filter(|l| l.starts_with("[PASS]")).count() < 9 {
        return Err(format!("selftest output looks truncated:\n{stdout}"));
    }
    Ok(())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn main() {
    let criteria: &[(&str, fn() -> Outcome)] = &[
        ("Koszul resolution of the origin (n <= 3, D <= 4)", criterion_1),
        ("twisted HKR: Koszul = bar oracle = closed form", criterion_2),
        ("chain-map identity suite on all small blocks", criterion_3),
        ("vanishing rule for the shifted involution on C^*", criterion_4),
        ("S_2 on C^2 Hochschild values with bar-oracle agreement", criterion_5),
        ("orbifold HP: S_2 on T^2 and the (2,2) class of S_4", criterion_6),
        ("affine Weyl formula totals and cross-check", criterion_7),
        ("M_2 crossed with (Z/2)^2 via structure constants", criterion_8),
        ("selftest command exits 0", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("[PASS] criterion {}: {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} — {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
