use alloc::vec::Vec;

use super::*;
use crate::builtin;
use crate::character::{character_table, induce, inflate, is_faithful, ClassFunction};
use crate::cyclo::CycloNumber;
use crate::error::Error;
use crate::galois::SubfieldSplitter;
use crate::lseries::{
    absolute_prefix, dedekind_zeta_prefix_direct, relative_prefix, EulerTable, RelativeSetup, SplitMethod,
};
use crate::mapper::Sequential;

fn all_verified(name: &str) {
    let opts = RunOptions { bound: 300, zeta_bound: 1000, ..RunOptions::default() };
    let verdicts = run_builtin(name, &opts, None, &Sequential).unwrap();
    assert!(verdicts.len() >= StatementId::ALL.len() - 2);
    for v in &verdicts {
        assert!(v.is_verified(), "{name} {} [{}]: {:?}", v.statement, v.label, v.kind);
        assert!(v.certificates.iter().all(|c| c.holds));
    }
}

#[test]
fn s3_builtin_checks_all_verify() {
    all_verified("s3");
}

#[test]
fn octic_builtin_checks_all_verify() {
    all_verified("octic");
}

#[test]
fn only_filter_and_unknown_builtin() {
    let opts = RunOptions { bound: 50, ..RunOptions::default() };
    let v = run_builtin("s3", &opts, Some(StatementId::Prop4), &Sequential).unwrap();
    assert_eq!(v.len(), 2);
    assert!(v.iter().all(|x| x.statement == StatementId::Prop4));
    assert!(matches!(run_builtin("a5", &opts, None, &Sequential), Err(Error::InvalidInput(_))));
}

#[test]
fn statement_ids_round_trip() {
    for id in StatementId::ALL {
        assert_eq!(StatementId::parse(id.as_str()), Some(id));
    }
    assert_eq!(StatementId::parse("thm7"), None);
}

#[test]
fn s3_remark_at_small_bounds() {
    let ctx = builtin::s3_context();
    let v = s3_counterexample(ctx.clone(), 1000, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Verified { bound: Some(1000) });
    assert!(v.certificate("χ₂ ≠ χ₃").unwrap().holds);
    let v = s3_counterexample(ctx, 1, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Verified { bound: Some(1) });
}

#[test]
fn s3_remark_fault_injection_refutes_at_class_function_stage() {
    let data = S3Remark::from_context(builtin::s3_context()).unwrap();

    let mut swapped = data.clone();
    swapped.chi2 = data.chi3.clone();
    let v = s3_counterexample_with(&swapped, 100, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Refuted(Witness::Certificate { name: "χ₂ ≠ χ₃".into() }));
    assert_eq!(v.work.primes, 0);

    let mut corrupted = data.clone();
    let field = data.chi2.field().clone();
    corrupted.chi2 = data.chi2.with_value(1, CycloNumber::from_integer(&field, 1));
    let v = s3_counterexample_with(&corrupted, 100, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Refuted(Witness::Certificate { name: "χ₂ irreducible".into() }));
}

/// Re-derives a coefficient witness from freshly computed prefixes.
fn recheck(w: &Witness, a: &crate::lseries::DirichletPrefix, b: &crate::lseries::DirichletPrefix) {
    let Witness::Coefficient { index, left, right } = w else { panic!("expected a coefficient witness, got {w}") };
    assert_ne!(left, right);
    assert_eq!(a.coefficient(*index), Some(left));
    assert_eq!(b.coefficient(*index), Some(right));
    assert!(recheck_coefficient(a, b, *index));
    for n in 1..*index {
        if let (Some(x), Some(y)) = (a.coefficient(n), b.coefficient(n)) {
            assert_eq!(x, y, "earlier difference at {n}");
        }
    }
}

#[test]
fn prop1_fault_injection_gives_rechecked_witness() {
    let ctx = builtin::octic_context();
    let g = ctx.group();
    let (u, v1) = (builtin::octic_u(g), builtin::octic_v1(g));
    let tower = InflationTower { u: u.clone(), v: v1.clone(), w: g.trivial_subgroup() };
    let qv = g.quotient(&u, &v1).unwrap();
    let qw = g.quotient(&u, &tower.w).unwrap();
    let table = character_table(&qv.group).unwrap();
    let chi = table.irreducibles()[1].clone();

    let honest = check_inflation_invariance(&ctx, &tower, &chi, 2000, &Sequential).unwrap();
    assert_eq!(honest.kind, VerdictKind::Verified { bound: Some(2000) });

    // the trivial character of U/W in place of the inflation of χ
    let wrong = ClassFunction::trivial(&qw.group);
    let v = check_inflation_invariance_with(&ctx, &tower, &chi, &wrong, 2000, &Sequential).unwrap();
    let VerdictKind::Refuted(w) = &v.kind else { panic!("{:?}", v.kind) };
    let splitter = SubfieldSplitter::new(g, &u);
    let a = relative_prefix(
        &ctx,
        &splitter,
        &EulerTable::via_quotient(&splitter.subgroup, &qv, &chi).unwrap(),
        SplitMethod::LeftCosets,
        2000,
        &Sequential,
    )
    .unwrap();
    let b = relative_prefix(
        &ctx,
        &splitter,
        &EulerTable::via_quotient(&splitter.subgroup, &qw, &wrong).unwrap(),
        SplitMethod::LeftCosets,
        2000,
        &Sequential,
    )
    .unwrap();
    recheck(w, &a, &b);
}

#[test]
fn prop2_fault_injection_gives_rechecked_witness() {
    let ctx = builtin::s3_context();
    let g = ctx.group();
    let a3 = builtin::s3_a3(g);
    let tower = InductionTower { u: g.whole(), h: a3.clone(), v: g.trivial_subgroup() };
    let data = S3Remark::from_context(ctx.clone()).unwrap();
    let honest = check_induction_invariance(&ctx, &tower, &data.chi2, 2000, &Sequential).unwrap();
    assert_eq!(honest.kind, VerdictKind::Verified { bound: Some(2000) });

    // 1 + sign has the right degree but is not the induced character
    let induced = induced_to_u(&ctx, &tower, &data.chi2).unwrap();
    let splitter = SubfieldSplitter::new(g, &g.whole());
    let ug = &splitter.subgroup.group;
    let table = character_table(ug).unwrap();
    let wrong = table.irreducibles()[0].add(&table.irreducibles()[1]).unwrap();
    assert_ne!(wrong, induced);
    let v = check_induction_invariance_with(&ctx, &tower, &data.chi2, &wrong, 2000, &Sequential).unwrap();
    assert!(v.certificate("deg χ^U = [U:H] deg χ").unwrap().holds);
    let VerdictKind::Refuted(w) = &v.kind else { panic!("{:?}", v.kind) };
    let q = g.quotient(&a3, &tower.v).unwrap();
    let split_f = SubfieldSplitter::new(g, &a3);
    let a = relative_prefix(
        &ctx,
        &split_f,
        &EulerTable::via_quotient(&split_f.subgroup, &q, &data.chi2).unwrap(),
        SplitMethod::LeftCosets,
        2000,
        &Sequential,
    )
    .unwrap();
    let b = relative_prefix(
        &ctx,
        &splitter,
        &EulerTable::from_character(ug, &wrong).unwrap(),
        SplitMethod::LeftCosets,
        2000,
        &Sequential,
    )
    .unwrap();
    recheck(w, &a, &b);
}

#[test]
fn prop3_witnesses_recheck_below_200() {
    for ctx in [builtin::s3_context(), builtin::octic_context()] {
        let table = character_table(ctx.group()).unwrap();
        let chars = table.irreducibles();
        let n = chars.len();
        let v = check_character_separation(&ctx, 200, &Sequential).unwrap();
        assert!(v.is_verified());
        let pairs = separating_primes(&ctx, chars, 200, &Sequential).unwrap();
        assert_eq!(pairs.len(), n * (n - 1) / 2);
        for (i, j, sep) in pairs {
            let (p, c) = sep.unwrap();
            assert!(p <= 200);
            assert_eq!(ctx.frobenius_class(p).unwrap(), crate::galois::FrobeniusResolution::Unique(c));
            assert_ne!(chars[i].value(c), chars[j].value(c));
        }
    }
}

#[test]
fn prop3_is_inconclusive_when_bound_is_too_small() {
    let v = check_character_separation(&builtin::octic_context(), 3, &Sequential).unwrap();
    assert!(matches!(v.kind, VerdictKind::Inconclusive(_)));
}

#[test]
fn prop4_rejects_non_faithful_input() {
    let ctx = builtin::octic_context();
    let g = ctx.group();
    let (u, v1) = (builtin::octic_u(g), builtin::octic_v1(g));
    let q = g.quotient(&u, &v1).unwrap();
    let s = RelativeSetup::new(ctx.clone(), u, v1, ClassFunction::trivial(&q.group)).unwrap();
    assert_eq!(check_induced_faithful(&s, 100, &Sequential), Err(Error::NotFaithful));
}

#[test]
fn prop4_final_example_through_1000() {
    let ctx = builtin::octic_context();
    let g = ctx.group();
    let u = builtin::octic_u(g);
    for v in [builtin::octic_v1(g), builtin::octic_v2(g)] {
        let q = g.quotient(&u, &v).unwrap();
        let table = character_table(&q.group).unwrap();
        let chi = table.irreducibles().iter().find(|c| is_faithful(&q.group, c).unwrap()).unwrap().clone();
        let s = RelativeSetup::new(ctx.clone(), u.clone(), v, chi).unwrap();
        let verdict = check_induced_faithful(&s, 1000, &Sequential).unwrap();
        assert_eq!(verdict.kind, VerdictKind::Verified { bound: Some(1000) });
        assert!(verdict.certificate("χ̃^G faithful").unwrap().holds);
    }
}

fn absolute_setup(ctx: &alloc::sync::Arc<crate::galois::SplittingFieldContext>, chi: ClassFunction) -> RelativeSetup {
    let g = ctx.group();
    RelativeSetup::new(ctx.clone(), g.whole(), g.trivial_subgroup(), chi).unwrap()
}

#[test]
fn thm5_distinct_faithful_characters_differ_with_witness() {
    let ctx = builtin::octic_context();
    let g = ctx.group();
    let q = g.quotient(&g.whole(), &g.trivial_subgroup()).unwrap();
    let table = character_table(&q.group).unwrap();
    let faithful: Vec<&ClassFunction> =
        table.irreducibles().iter().filter(|c| is_faithful(&q.group, c).unwrap()).collect();
    assert!(!faithful.is_empty());
    let first = faithful[0].clone();
    // a second faithful character: another faithful irreducible if there is one, else χ + 1
    let second = match faithful.get(1) {
        Some(c) => (*c).clone(),
        None => first.add(&ClassFunction::trivial(&q.group)).unwrap(),
    };
    assert!(is_faithful(&q.group, &second).unwrap());
    let a = absolute_setup(&ctx, first);
    let b = absolute_setup(&ctx, second);
    let v = theorem5_consistency(&a, &b, None, 200, &Sequential).unwrap();
    let VerdictKind::Refuted(w) = &v.kind else { panic!("{:?}", v.kind) };
    let Witness::Coefficient { index, .. } = w else { panic!() };
    assert!(*index <= 200);
    let la = crate::lseries::artin_prefix(&a, 200, &Sequential).unwrap();
    let lb = crate::lseries::artin_prefix(&b, 200, &Sequential).unwrap();
    recheck(w, &la, &lb);
}

#[test]
fn thm5_without_common_ambient_is_inconclusive() {
    let a = builtin::s3_context();
    let b = builtin::cubic3_context();
    let trivial = |ctx: &alloc::sync::Arc<crate::galois::SplittingFieldContext>| {
        let g = ctx.group();
        let whole = g.whole();
        let q = g.quotient(&whole, &whole).unwrap();
        RelativeSetup::new(ctx.clone(), whole.clone(), whole, ClassFunction::trivial(&q.group)).unwrap()
    };
    let v = theorem5_consistency(&trivial(&a), &trivial(&b), None, 100, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Inconclusive("missing common ambient".into()));
    // the same pair with the shared symmetric group as ambient
    let amb = Ambient::shared(a.group());
    let v = theorem5_consistency(&trivial(&a), &trivial(&b), Some(&amb), 100, &Sequential).unwrap();
    assert!(v.is_verified());
}

#[test]
fn thm5_requires_base_q_and_faithful() {
    let ctx = builtin::s3_context();
    let g = ctx.group();
    let q = g.quotient(&g.whole(), &g.trivial_subgroup()).unwrap();
    let s = absolute_setup(&ctx, ClassFunction::trivial(&q.group));
    assert_eq!(theorem5_consistency(&s, &s, None, 10, &Sequential), Err(Error::NotFaithful));
    let data = S3Remark::from_context(ctx.clone()).unwrap();
    let rel = RelativeSetup::new(ctx.clone(), data.u, data.v, data.chi2).unwrap();
    assert!(matches!(theorem5_consistency(&rel, &rel, None, 10, &Sequential), Err(Error::InvalidInput(_))));
}

#[test]
fn thm6_identical_setups_verify() {
    let ctx = builtin::s3_context();
    let data = S3Remark::from_context(ctx.clone()).unwrap();
    let s = RelativeSetup::new(ctx, data.u, data.v, data.chi2).unwrap();
    assert!(theorem6_consistency(&s, &s, 200, &Sequential).unwrap().is_verified());
}

#[test]
fn corollary_examples() {
    let s3 = builtin::s3_polynomial();
    let v = corollary_zeta_closure(&s3, &s3, None, 200, &Sequential).unwrap();
    assert!(v.is_verified());

    let cubic3 = builtin::cubic3_polynomial();
    let v = corollary_zeta_closure(&s3, &cubic3, None, 200, &Sequential).unwrap();
    let VerdictKind::Refuted(w) = &v.kind else { panic!("{:?}", v.kind) };
    let a = dedekind_zeta_prefix_direct(&s3, 200, &Sequential).unwrap();
    let b = dedekind_zeta_prefix_direct(&cubic3, 200, &Sequential).unwrap();
    recheck(w, &a, &b);
}

#[test]
fn corollary_octic_pair_with_ambient() {
    let ctx = builtin::octic_context();
    let g = ctx.group();
    let amb = ZetaAmbient { context: ctx.clone(), v1: builtin::octic_v1(g), v2: builtin::octic_v2(g) };
    let v = corollary_zeta_closure(ctx.poly(), &builtin::octic48_polynomial(), Some(&amb), 2000, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Verified { bound: Some(2000) });
    assert!(v.certificate("1_{V1}^G = 1_{V2}^G").unwrap().holds);
}

#[test]
fn final_example_small_bound_and_fault() {
    let ctx = builtin::octic_context();
    let v = final_example_suite(ctx.clone(), 10, 100, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Verified { bound: Some(10) });
    assert_eq!(v.certificates.len(), 7);

    let mut data = FinalExampleData::from_context(ctx.clone());
    let g = ctx.group();
    let x = (0..g.order()).find(|&x| g.conjugate_subgroup(x, &data.v1) != data.v1).unwrap();
    data.v2 = g.conjugate_subgroup(x, &data.v1);
    let v = final_example_suite_with(&data, 10, 100, &Sequential).unwrap();
    assert_eq!(v.kind, VerdictKind::Refuted(Witness::Certificate { name: "V1, V2 not conjugate".into() }));
    assert_eq!(v.certificates.len(), 2);
}

#[test]
fn gassmann_search_examples() {
    assert!(gassmann_search(&builtin::s3_group(), 10).unwrap().pairs.is_empty());
    assert!(gassmann_search(&builtin::cyclic_group(8), 10).unwrap().pairs.is_empty());
    let g = builtin::affine_group();
    let report = gassmann_search(&g, 10).unwrap();
    let (v1, v2) = (builtin::octic_v1(&g), builtin::octic_v2(&g));
    assert!(report.pairs.iter().any(|(a, b)| {
        g.are_conjugate(a, &v1).is_some() && g.are_conjugate(b, &v2).is_some()
            || g.are_conjugate(a, &v2).is_some() && g.are_conjugate(b, &v1).is_some()
    }));
    assert!(!report.truncated);
    let capped = gassmann_search(&g, 0).unwrap();
    assert!(capped.truncated && capped.pairs.is_empty());
    let v = gassmann_search_verdict(&g, 10, Some((&v1, &v2))).unwrap();
    assert_eq!(v.kind, VerdictKind::Verified { bound: None });
}

#[test]
fn verified_is_monotone_in_the_bound() {
    let ctx = builtin::s3_context();
    for b in [1000, 500, 37, 2, 1] {
        assert!(s3_counterexample(ctx.clone(), b, &Sequential).unwrap().is_verified());
    }
}

#[test]
fn induced_absolute_prefix_matches_relative_for_remark() {
    let ctx = builtin::s3_context();
    let data = S3Remark::from_context(ctx.clone()).unwrap();
    let g = ctx.group();
    let q = data.quotient().unwrap();
    let u = g.embed(&data.u);
    let ind = induce(g, &u, &inflate(&u, &q, &data.chi2).unwrap()).unwrap();
    let s = RelativeSetup::new(ctx.clone(), data.u.clone(), data.v.clone(), data.chi2.clone()).unwrap();
    let rel = crate::lseries::artin_prefix(&s, 500, &Sequential).unwrap();
    let abs = absolute_prefix(&ctx, &ind, 500, &Sequential).unwrap();
    assert!(matches!(crate::lseries::compare_prefixes(&rel, &abs), crate::lseries::PrefixComparison::Equal { .. }));
}
