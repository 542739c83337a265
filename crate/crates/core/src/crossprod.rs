//! Homology of crossed products `O[X] ⋊ Γ`, assembled class by class.
//!
//! The Hochschild and cyclic complexes of a crossed product split into
//! subcomplexes indexed by conjugacy classes: a tensor
//! `a_0γ_0 ⊗ … ⊗ a_qγ_q` is filed under the class of `γ_0γ_1⋯γ_q`, and the
//! class of `γ` contributes the `γ`-twisted homology of the coordinate
//! ring, taken invariantly under the centralizer of `γ`.  Two backends:
//!
//! * **affine** — a finite linear group on `Q[x_1..x_n]`: graded Hochschild
//!   tables from form spaces on the fixed subspace of each class (the bar
//!   engine doubles as an oracle on request), graded cyclic tables from the
//!   invariant mixed complex, and a periodic count of one even dimension
//!   per class (fixed subspaces are contractible);
//! * **torus** — monomial maps `t_i ↦ e(shift_i) t_{π(i)}`: periodic cyclic
//!   totals from the cohomology of the fixed subtorus of each class.
//!
//! Fixed subtori and their cohomology stay combinatorial throughout:
//! a fixed torus has one coordinate per cycle of the permutation part
//! (nonempty exactly when every cycle's shift-sum is integral), its k-th
//! cohomology is the k-th exterior power of `Q^cycles`, and the centralizer
//! acts by permuting cycles — the rotation parts deform continuously to the
//! identity inside the torus, so they act trivially on cohomology.  That
//! last fact is an assumption of this module, not a computation; the Weyl
//! module cross-checks it against an independent closed form.

use num_traits::Zero;

use crate::exactla::{coordinates_in_basis, homology_dim, invariant_dimension, RationalMatrix};
use crate::groups::{permutation_cycles, FiniteGroup, GroupElement};
use crate::hochschild::{mixed_complex, BarComplex, CrossedPolyAlgebra, TwistedBar};
use crate::polyforms::action_on_forms;
use crate::report::{ClassEntry, DimTable, FixedSetDesc, Report, Totals};
use crate::{Error, Result};

/// The fixed-point set of one group element, in the shape the backends can
/// actually produce: a linear subspace, a subtorus, or nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedSet {
    /// Affine backend: echelon basis of `ker(g - 1)` in `Q^n`.
    Linear { basis: Vec<Vec<crate::exactla::Rational>> },
    /// Torus backend: the cycles of the permutation part, each a list of
    /// 0-based coordinates; the fixed subtorus has one coordinate per cycle.
    Torus { cycles: Vec<Vec<usize>> },
    /// Torus backend, some cycle has a non-integral shift-sum.
    Empty,
}

impl FixedSet {
    /// Dimension (linear) or rank (torus); zero for the empty set.
    pub fn rank(&self) -> usize {
        match self {
            FixedSet::Linear { basis } => basis.len(),
            FixedSet::Torus { cycles } => cycles.len(),
            FixedSet::Empty => 0,
        }
    }

    /// Serializable description, with 1-based coordinates for cycles.
    pub fn describe(&self) -> FixedSetDesc {
        match self {
            FixedSet::Linear { basis } => FixedSetDesc::Linear { dim: basis.len() },
            FixedSet::Torus { cycles } => FixedSetDesc::Torus {
                rank: cycles.len(),
                cycles: cycles
                    .iter()
                    .map(|c| c.iter().map(|&i| i + 1).collect())
                    .collect(),
            },
            FixedSet::Empty => FixedSetDesc::Empty,
        }
    }
}

/// Fixed-point set of a linear or monomial element.
///
/// For a monomial map the equation `t_i = e(shift_i) t_{π(i)}` propagates
/// around each cycle of `π`, so solutions exist iff every cycle's shift-sum
/// is an integer, in which case the solution set is a translated subtorus
/// with one free coordinate per cycle.
pub fn fixed_set(g: &GroupElement) -> Result<FixedSet> {
    match g {
        GroupElement::Linear(m) => {
            let shifted = m.sub(&RationalMatrix::identity(m.rows()))?;
            Ok(FixedSet::Linear { basis: shifted.kernel_basis() })
        }
        GroupElement::Monomial { perm, shift } => {
            let cycles = permutation_cycles(perm);
            for cycle in &cycles {
                let sum = cycle
                    .iter()
                    .fold(crate::exactla::Rational::zero(), |acc, &i| acc + &shift[i]);
                if !sum.is_integer() {
                    return Ok(FixedSet::Empty);
                }
            }
            Ok(FixedSet::Torus { cycles })
        }
        GroupElement::AlgebraAuto(_) => Err(Error::Config(
            "fixed sets are defined for linear and torus actions only".into(),
        )),
    }
}

/// Matrices of the centralizer of `gamma` acting on `H^1` of its fixed
/// torus — one permutation matrix per centralizer element, in the group's
/// element order (so the list is a closed set; repeats are intentional,
/// they weight the averaging correctly).
///
/// An element `c` commuting with `gamma` permutes the cycles of `gamma`;
/// on the fixed torus this is exactly its action on coordinates, and on
/// `H^1` it is the same permutation of the cycle basis.
pub fn centralizer_action_on_torus_h1(
    group: &FiniteGroup,
    gamma: usize,
    fixed: &FixedSet,
) -> Result<Vec<RationalMatrix>> {
    let FixedSet::Torus { cycles } = fixed else {
        return Err(Error::Config("centralizer H^1 action needs a nonempty fixed torus".into()));
    };
    let r = cycles.len();
    let dim = group.element(gamma).dimension();
    let mut cycle_of = vec![usize::MAX; dim];
    for (j, cycle) in cycles.iter().enumerate() {
        for &i in cycle {
            cycle_of[i] = j;
        }
    }
    let mut mats = Vec::new();
    for c in group.centralizer(gamma) {
        let GroupElement::Monomial { perm, .. } = group.element(c) else {
            return Err(Error::Config("torus centralizer action needs monomial elements".into()));
        };
        let mut m = RationalMatrix::zeros(r, r);
        for (j, cycle) in cycles.iter().enumerate() {
            m.set(cycle_of[perm[cycle[0]]], j, crate::exactla::rat(1));
        }
        mats.push(m);
    }
    for a in &mats {
        for b in &mats {
            let prod = a.mul(b)?;
            if !mats.contains(&prod) {
                return Err(Error::Internal(
                    "induced cycle permutations are not closed under composition".into(),
                ));
            }
        }
    }
    Ok(mats)
}

/// One parity of the invariant cohomology of a rank-`r` torus:
/// `∑_{k ≡ parity (2)} dim (Λ^k Q^r)^{action}`.
pub fn torus_hp_contribution(
    rank: usize,
    h1_action: &[RationalMatrix],
    parity: usize,
) -> Result<usize> {
    let mut total = 0;
    let mut k = parity;
    while k <= rank {
        let reps: Vec<RationalMatrix> =
            h1_action.iter().map(|m| m.exterior_power(k)).collect::<Result<_>>()?;
        total += invariant_dimension(&reps)?;
        k += 2;
    }
    Ok(total)
}

/// Conjugacy data plus fixed sets, the cheap survey command.
pub fn classes_report(group: &FiniteGroup) -> Result<Report> {
    let classes = group.conjugacy_classes();
    let mut per_class = Vec::with_capacity(classes.len());
    for class in &classes {
        let elem = group.element(class.representative);
        let mut entry = ClassEntry::new(
            elem.to_string(),
            class.members.len(),
            group.centralizer(class.representative).len(),
        );
        if !matches!(elem, GroupElement::AlgebraAuto(_)) {
            entry.fixed_set = Some(fixed_set(elem)?.describe());
        }
        per_class.push(entry);
    }
    Ok(Report {
        command: "classes".into(),
        config: serde_json::Value::Null,
        totals: Totals {
            group_order: group.order(),
            class_count: per_class.len(),
            ..Totals::default()
        },
        per_class,
        timings: None,
    })
}

/// Periodic cyclic homology, class by class.
///
/// Per class: an empty fixed set contributes nothing; a linear fixed
/// subspace is contractible and contributes one even dimension (the
/// centralizer fixes constants); a fixed torus contributes the invariant
/// cohomology of its parity pieces.
pub fn hp_report(group: &FiniteGroup) -> Result<Report> {
    let classes = group.conjugacy_classes();
    let mut per_class = Vec::with_capacity(classes.len());
    let mut totals = [0usize; 2];
    for class in &classes {
        let rep = class.representative;
        let elem = group.element(rep);
        let fixed = fixed_set(elem)?;
        let hp = match &fixed {
            FixedSet::Empty => [0, 0],
            FixedSet::Linear { .. } => [1, 0],
            FixedSet::Torus { cycles } => {
                let action = centralizer_action_on_torus_h1(group, rep, &fixed)?;
                [
                    torus_hp_contribution(cycles.len(), &action, 0)?,
                    torus_hp_contribution(cycles.len(), &action, 1)?,
                ]
            }
        };
        totals[0] += hp[0];
        totals[1] += hp[1];
        let mut entry =
            ClassEntry::new(elem.to_string(), class.members.len(), group.centralizer(rep).len());
        entry.fixed_set = Some(fixed.describe());
        entry.hp = Some(hp);
        per_class.push(entry);
    }
    Ok(Report {
        command: "hp".into(),
        config: serde_json::Value::Null,
        totals: Totals {
            group_order: group.order(),
            class_count: per_class.len(),
            hp: Some(totals),
            ..Totals::default()
        },
        per_class,
        timings: None,
    })
}

/// The matrices of a class representative and its full centralizer, for the
/// affine backend.
fn linear_class_data(
    group: &FiniteGroup,
    rep: usize,
) -> Result<(RationalMatrix, Vec<RationalMatrix>)> {
    let g = group
        .element(rep)
        .as_linear()
        .ok_or_else(|| Error::Config("graded reports need a linear action".into()))?
        .clone();
    let centralizer: Vec<RationalMatrix> = group
        .centralizer(rep)
        .into_iter()
        .map(|c| group.element(c).as_linear().expect("same kind").clone())
        .collect();
    Ok((g, centralizer))
}

/// Restrict each centralizer matrix to the fixed subspace, in the given
/// basis.  Centralizer elements commute with `g`, so they do map
/// `ker(g - 1)` to itself; failure to solve is an internal error.
fn restrict_centralizer(
    basis: &[Vec<crate::exactla::Rational>],
    ambient: usize,
    centralizer: &[RationalMatrix],
) -> Result<Vec<RationalMatrix>> {
    let cols = RationalMatrix::from_columns(basis, ambient);
    centralizer
        .iter()
        .map(|m| {
            coordinates_in_basis(basis, &m.mul(&cols)?).ok_or_else(|| {
                Error::Internal("centralizer does not preserve a fixed subspace".into())
            })
        })
        .collect()
}

/// Graded Hochschild homology of `Q[x_1..x_n] ⋊ Γ` for a linear action.
///
/// The class of `γ` contributes, in bidegree `(q, D)`, the centralizer
/// invariants of the `q`-forms with coefficient degree `D - q` on the fixed
/// subspace of `γ`.  With `oracle` set, every class is recomputed as the
/// homology of the centralizer-invariant twisted bar subcomplex and the
/// tables are required to match exactly.
pub fn hh_graded_report(
    group: &FiniteGroup,
    q_max: usize,
    d_max: usize,
    oracle: bool,
) -> Result<Report> {
    let classes = group.conjugacy_classes();
    let mut per_class = Vec::with_capacity(classes.len());
    let mut totals_table = DimTable::new(q_max, d_max);
    for class in &classes {
        let rep = class.representative;
        let (g, centralizer) = linear_class_data(group, rep)?;
        let fixed = fixed_set(group.element(rep))?;
        let FixedSet::Linear { basis } = &fixed else { unreachable!("linear element") };
        let restricted = restrict_centralizer(basis, g.rows(), &centralizer)?;

        let mut table = DimTable::new(q_max, d_max);
        for q in 0..=q_max {
            for d in q..=d_max {
                let reps: Vec<RationalMatrix> = restricted
                    .iter()
                    .map(|r| action_on_forms(r, d - q, q))
                    .collect::<Result<_>>()?;
                table.set(q, d, invariant_dimension(&reps)?);
            }
        }

        let mut entry =
            ClassEntry::new(group.element(rep).to_string(), class.members.len(), centralizer.len());
        entry.fixed_set = Some(fixed.describe());
        if oracle {
            let bar_table = invariant_bar_hh(&g, &centralizer, q_max, d_max)?;
            if bar_table != table {
                return Err(Error::Internal(format!(
                    "form-space and bar-complex Hochschild tables disagree for class {}",
                    group.element(rep)
                )));
            }
            entry.oracle_checked = Some(true);
        }
        totals_table.accumulate(&table);
        entry.hh = Some(table);
        per_class.push(entry);
    }
    Ok(Report {
        command: "hh".into(),
        config: serde_json::Value::Null,
        totals: Totals {
            group_order: group.order(),
            class_count: per_class.len(),
            hh: Some(totals_table),
            ..Totals::default()
        },
        per_class,
        timings: None,
    })
}

/// Homology of the centralizer-invariant twisted bar subcomplex, the slow
/// route behind `--oracle`.  Over a field of characteristic zero taking
/// invariants commutes with homology, so this equals the centralizer
/// invariants of the `g`-twisted Hochschild homology.
fn invariant_bar_hh(
    g: &RationalMatrix,
    centralizer: &[RationalMatrix],
    q_max: usize,
    d_max: usize,
) -> Result<DimTable> {
    let mut out = DimTable::new(q_max, d_max);
    let tb = TwistedBar::new(g, d_max)?;
    for d in 0..=d_max {
        let mc = mixed_complex(&tb, centralizer, q_max + 1, d)?;
        for q in 0..=q_max {
            out.set(q, d, homology_dim(&mc.b_bars[q + 1], &mc.b_bars[q])?);
        }
    }
    Ok(out)
}

/// Graded cyclic homology of `Q[x_1..x_n] ⋊ Γ` for a linear action, via the
/// invariant mixed complex of each class.
pub fn hc_graded_report(group: &FiniteGroup, n_max: usize, d_max: usize) -> Result<Report> {
    let classes = group.conjugacy_classes();
    let mut per_class = Vec::with_capacity(classes.len());
    let mut totals_table = DimTable::new(n_max, d_max);
    for class in &classes {
        let rep = class.representative;
        let (g, centralizer) = linear_class_data(group, rep)?;
        let fixed = fixed_set(group.element(rep))?;

        let mut table = DimTable::new(n_max, d_max);
        let tb = TwistedBar::new(&g, d_max)?;
        for d in 0..=d_max {
            let mc = mixed_complex(&tb, &centralizer, n_max + 1, d)?;
            for n in 0..=n_max {
                table.set(
                    n,
                    d,
                    homology_dim(&mc.total_differential(n + 1), &mc.total_differential(n))?,
                );
            }
        }

        let mut entry =
            ClassEntry::new(group.element(rep).to_string(), class.members.len(), centralizer.len());
        entry.fixed_set = Some(fixed.describe());
        totals_table.accumulate(&table);
        entry.hc = Some(table);
        per_class.push(entry);
    }
    Ok(Report {
        command: "hc".into(),
        config: serde_json::Value::Null,
        totals: Totals {
            group_order: group.order(),
            class_count: per_class.len(),
            hc: Some(totals_table),
            ..Totals::default()
        },
        per_class,
        timings: None,
    })
}

/// Per-class Hochschild dimensions of the crossed product computed the hard
/// way: the untwisted bar complex of `Q[x_1..x_n] ⋊ Γ` as one structure-
/// constant algebra, split by the conserved class label.  Exponentially
/// more expensive than the per-class route and used to validate it.
pub fn crossed_bar_hh_dims(
    group: &FiniteGroup,
    q_max: usize,
    d_max: usize,
) -> Result<Vec<DimTable>> {
    let vars = group.element(0).dimension();
    let alg = CrossedPolyAlgebra::new(vars, group.clone(), d_max)?;
    let eng = BarComplex::new(&alg)?;
    let class_count = group.conjugacy_classes().len();
    let mut tables = vec![DimTable::new(q_max, d_max); class_count];
    for d in 0..=d_max {
        let blocks: Vec<_> =
            (0..=q_max + 1).map(|q| eng.block(q, d)).collect::<Result<_>>()?;
        let fulls: Vec<_> = (1..=q_max + 1)
            .map(|q| eng.differential(&blocks[q], &blocks[q - 1], true))
            .collect();
        for (c, table) in tables.iter_mut().enumerate() {
            let mut bs = vec![RationalMatrix::zeros(0, blocks[0].class_members[c].len())];
            for q in 1..=q_max + 1 {
                let restricted = BarComplex::<CrossedPolyAlgebra>::restrict_to_class(
                    &fulls[q - 1],
                    &blocks[q],
                    &blocks[q - 1],
                    c,
                );
                bs.push(restricted.to_dense());
            }
            for q in 0..=q_max {
                table.set(q, d, homology_dim(&bs[q + 1], &bs[q])?);
            }
        }
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio, Rational};
    use crate::groups::{close_group, symmetric_group_on_torus};

    fn monomial(perm: Vec<usize>, shift: Vec<Rational>) -> GroupElement {
        GroupElement::monomial(perm, shift).unwrap()
    }

    fn s2_linear() -> FiniteGroup {
        let swap = GroupElement::linear(RationalMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        close_group(&[swap], 10).unwrap()
    }

    fn sign_on_line() -> FiniteGroup {
        let neg = GroupElement::linear(RationalMatrix::from_i64(&[&[-1]])).unwrap();
        close_group(&[neg], 10).unwrap()
    }

    #[test]
    fn fixed_sets_of_torus_elements() {
        let id3 = monomial(vec![0, 1, 2], vec![rat(0); 3]);
        assert_eq!(fixed_set(&id3).unwrap().rank(), 3);

        let three_cycle = monomial(vec![1, 2, 0], vec![rat(0); 3]);
        let fs = fixed_set(&three_cycle).unwrap();
        assert_eq!(fs, FixedSet::Torus { cycles: vec![vec![0, 1, 2]] });

        // t -> -t on one coordinate: shift 1/2, no fixed points.
        let neg = monomial(vec![0], vec![ratio(1, 2)]);
        assert_eq!(fixed_set(&neg).unwrap(), FixedSet::Empty);

        // Shift 1/2 on both coordinates of a 2-cycle sums to 1: fixed circle.
        let twisted_swap = monomial(vec![1, 0], vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(fixed_set(&twisted_swap).unwrap().rank(), 1);
    }

    #[test]
    fn fixed_set_of_linear_swap_is_the_diagonal() {
        let swap = GroupElement::linear(RationalMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        let FixedSet::Linear { basis } = fixed_set(&swap).unwrap() else { panic!() };
        assert_eq!(basis, vec![vec![rat(1), rat(1)]]);
    }

    #[test]
    fn double_transposition_centralizer_swaps_the_cycles() {
        let s4 = symmetric_group_on_torus(4, 100).unwrap();
        let gamma = s4
            .index_of(&monomial(vec![1, 0, 3, 2], vec![rat(0); 4]))
            .unwrap();
        let fixed = fixed_set(s4.element(gamma)).unwrap();
        assert_eq!(fixed.rank(), 2);
        let action = centralizer_action_on_torus_h1(&s4, gamma, &fixed).unwrap();
        assert_eq!(action.len(), 8);
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(action.iter().filter(|m| **m == swap).count(), 4);
        // Even part: H^0 survives, the top class flips under the swaps.
        assert_eq!(torus_hp_contribution(2, &action, 0).unwrap(), 1);
        assert_eq!(torus_hp_contribution(2, &action, 1).unwrap(), 1);
    }

    #[test]
    fn torus_contribution_closed_forms() {
        // Trivial action on T^r contributes 2^{r-1} per parity.
        for r in 1..=4 {
            let action = vec![RationalMatrix::identity(r)];
            let expect = 1 << (r - 1);
            assert_eq!(torus_hp_contribution(r, &action, 0).unwrap(), expect);
            assert_eq!(torus_hp_contribution(r, &action, 1).unwrap(), expect);
        }
        // A point has one even dimension and nothing odd.
        let none: Vec<RationalMatrix> = vec![RationalMatrix::identity(0)];
        assert_eq!(torus_hp_contribution(0, &none, 0).unwrap(), 1);
        assert_eq!(torus_hp_contribution(0, &none, 1).unwrap(), 0);
    }

    #[test]
    fn hp_of_s2_on_t2() {
        let s2 = symmetric_group_on_torus(2, 10).unwrap();
        let report = hp_report(&s2).unwrap();
        assert_eq!(report.totals.hp, Some([2, 2]));
        let per: Vec<[usize; 2]> = report.per_class.iter().map(|c| c.hp.unwrap()).collect();
        assert_eq!(per, vec![[1, 1], [1, 1]]);
    }

    #[test]
    fn hp_kills_the_shifted_class() {
        // Z/2 on C^* by t -> -t: the nontrivial class has no fixed points.
        let neg = monomial(vec![0], vec![ratio(1, 2)]);
        let group = close_group(&[neg], 10).unwrap();
        let report = hp_report(&group).unwrap();
        assert_eq!(report.totals.hp, Some([1, 1]));
        assert_eq!(report.per_class[1].hp, Some([0, 0]));
        assert_eq!(report.per_class[1].fixed_set, Some(FixedSetDesc::Empty));
    }

    #[test]
    fn hp_of_linear_actions_counts_classes() {
        let report = hp_report(&s2_linear()).unwrap();
        assert_eq!(report.totals.hp, Some([2, 0]));
        let s3 = crate::groups::symmetric_group_linear(3, 100).unwrap();
        assert_eq!(hp_report(&s3).unwrap().totals.hp, Some([3, 0]));
    }

    #[test]
    fn hh_of_s2_on_c2_matches_the_form_count() {
        let report = hh_graded_report(&s2_linear(), 2, 4, false).unwrap();
        let id_table = report.per_class[0].hh.as_ref().unwrap();
        // Invariant quadratics on C^2: x^2 + y^2 and xy.
        assert_eq!(id_table.get(0, 2), 2);
        let swap_table = report.per_class[1].hh.as_ref().unwrap();
        for d in 1..=4 {
            assert_eq!(swap_table.get(1, d), 1, "swap class at D={d}");
        }
        assert_eq!(swap_table.get(2, 2), 0);
    }

    #[test]
    fn hh_oracle_agrees_for_small_groups() {
        for group in [sign_on_line(), s2_linear()] {
            let report = hh_graded_report(&group, 2, 3, true).unwrap();
            assert!(report.per_class.iter().all(|c| c.oracle_checked == Some(true)));
        }
    }

    #[test]
    fn per_class_tables_match_the_crossed_bar_complex() {
        // The same numbers out of the one-big-algebra route, classes split
        // by the conserved label of the product of the group coordinates.
        for group in [sign_on_line(), s2_linear()] {
            let (q_max, d_max) = (2, 2);
            let via_forms = hh_graded_report(&group, q_max, d_max, false).unwrap();
            let via_bar = crossed_bar_hh_dims(&group, q_max, d_max).unwrap();
            for (entry, bar_table) in via_forms.per_class.iter().zip(&via_bar) {
                assert_eq!(entry.hh.as_ref().unwrap(), bar_table, "{}", entry.representative);
            }
        }
    }

    #[test]
    fn hc_of_the_trivial_group_is_the_twisted_line() {
        let trivial = close_group(
            &[GroupElement::linear(RationalMatrix::identity(1)).unwrap()],
            10,
        )
        .unwrap();
        let report = hc_graded_report(&trivial, 4, 3).unwrap();
        let expected = crate::hochschild::hc_twisted_dims(&RationalMatrix::identity(1), 4, 3).unwrap();
        assert_eq!(report.totals.hc.as_ref().unwrap(), &expected);
    }

    #[test]
    fn hc_of_the_sign_action_on_a_line() {
        // Identity class: Z/2-invariant cyclic homology of Q[x]; sign
        // class: the D = 0 column of the twisted theory.  Checked entrywise
        // against hand computations of both mixed complexes.
        let report = hc_graded_report(&sign_on_line(), 2, 2).unwrap();
        let id_table = report.per_class[0].hc.as_ref().unwrap();
        let sign_table = report.per_class[1].hc.as_ref().unwrap();
        for (n, d, expect) in [
            (0, 0, 1),
            (0, 1, 0),
            (0, 2, 1),
            (1, 0, 0),
            (1, 1, 0),
            (1, 2, 0),
            (2, 0, 1),
            (2, 1, 0),
            (2, 2, 0),
        ] {
            assert_eq!(id_table.get(n, d), expect, "identity class at n={n} D={d}");
            let sign_expect = usize::from(d == 0 && n % 2 == 0);
            assert_eq!(sign_table.get(n, d), sign_expect, "sign class at n={n} D={d}");
        }
    }

    #[test]
    fn classes_report_lists_fixed_sets() {
        let s3 = symmetric_group_on_torus(3, 100).unwrap();
        let report = classes_report(&s3).unwrap();
        assert_eq!(report.totals.class_count, 3);
        let ranks: Vec<usize> = report
            .per_class
            .iter()
            .map(|c| match c.fixed_set.as_ref().unwrap() {
                FixedSetDesc::Torus { rank, .. } => *rank,
                _ => panic!("expected torus fixed sets"),
            })
            .collect();
        assert_eq!(ranks, vec![3, 2, 1]);
    }
}
