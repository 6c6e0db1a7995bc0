use alloc::sync::Arc;
use alloc::vec::Vec;

use super::checks::*;
use super::{StatementId, Verdict};
use crate::builtin;
use crate::character::{character_table, is_faithful, ClassFunction};
use crate::error::{Error, Result};
use crate::galois::{SplittingFieldContext, DEFAULT_VALIDATION_BOUND};
use crate::group::Subgroup;
use crate::lseries::{RelativeSetup, DEFAULT_BOUND};
use crate::mapper::PrimeMapper;

/// Default bound for zeta-function comparisons of the octic fields.
pub const DEFAULT_ZETA_BOUND: usize = 10_000;

/// Default bound for the Gassmann pair search.
pub const DEFAULT_GASSMANN_PAIRS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub bound: usize,
    pub zeta_bound: usize,
    pub validation_bound: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { bound: DEFAULT_BOUND, zeta_bound: DEFAULT_ZETA_BOUND, validation_bound: DEFAULT_VALIDATION_BOUND }
    }
}

/// Names accepted after `builtin:`.
pub const BUILTIN_NAMES: [&str; 2] = ["s3", "octic"];

/// Runs the checks of a built-in example, optionally restricted to one statement.
pub fn run_builtin(
    name: &str,
    opts: &RunOptions,
    only: Option<StatementId>,
    mapper: &dyn PrimeMapper,
) -> Result<Vec<Verdict>> {
    match name {
        "s3" => builtin_s3_checks(opts, only, mapper),
        "octic" => builtin_octic_checks(opts, only, mapper),
        _ => Err(Error::InvalidInput(alloc::format!("unknown builtin '{name}' (expected s3 or octic)"))),
    }
}

struct Runner<'a> {
    only: Option<StatementId>,
    out: Vec<Verdict>,
    mapper: &'a dyn PrimeMapper,
}

impl Runner<'_> {
    fn run(&mut self, id: StatementId, label: &str, f: impl FnOnce(&dyn PrimeMapper) -> Result<Verdict>) -> Result<()> {
        if self.only.is_some_and(|x| x != id) {
            return Ok(());
        }
        let mut v = f(self.mapper)?;
        v.label = label.into();
        self.out.push(v);
        Ok(())
    }
}

/// First faithful irreducible of largest degree of `G/1`.
fn faithful_irreducible(ctx: &SplittingFieldContext) -> Result<ClassFunction> {
    let g = ctx.group();
    let q = g.quotient(&g.whole(), &g.trivial_subgroup())?;
    let group = &q.group;
    let table = character_table(group)?;
    let mut best: Option<(u64, ClassFunction)> = None;
    for chi in table.irreducibles() {
        if is_faithful(group, chi)? {
            let d = chi.degree()?;
            if best.as_ref().is_none_or(|b| d > b.0) {
                best = Some((d, chi.clone()));
            }
        }
    }
    best.map(|b| b.1).ok_or_else(|| Error::InvalidInput("group has no faithful irreducible character".into()))
}

/// The nontrivial character of an order-2 quotient `U/V`.
fn sign_of(ctx: &SplittingFieldContext, u: &Subgroup, v: &Subgroup) -> Result<ClassFunction> {
    let q = ctx.group().quotient(u, v)?;
    let table = character_table(&q.group)?;
    let one = ClassFunction::trivial(&q.group);
    table
        .irreducibles()
        .iter()
        .find(|c| **c != one)
        .cloned()
        .ok_or_else(|| Error::InvalidInput("quotient is trivial".into()))
}

fn regular_setup(ctx: &Arc<SplittingFieldContext>, u: &Subgroup, v: &Subgroup) -> Result<RelativeSetup> {
    let q = ctx.group().quotient(u, v)?;
    RelativeSetup::new(ctx.clone(), u.clone(), v.clone(), ClassFunction::regular(&q.group))
}

pub fn builtin_s3_checks(
    opts: &RunOptions,
    only: Option<StatementId>,
    mapper: &dyn PrimeMapper,
) -> Result<Vec<Verdict>> {
    let ctx = builtin::s3_context_with(opts.validation_bound, mapper)?;
    let g = ctx.group().clone();
    let whole = g.whole();
    let a3 = builtin::s3_a3(&g);
    let one = g.trivial_subgroup();
    let b = opts.bound;
    let remark = S3Remark::from_context(ctx.clone())?;
    let mut r = Runner { only, out: Vec::new(), mapper };

    r.run(StatementId::Prop1, "G ⊵ A3 ⊵ 1, sign of G/A3", |m| {
        let tower = InflationTower { u: whole.clone(), v: a3.clone(), w: one.clone() };
        check_inflation_invariance(&ctx, &tower, &sign_of(&ctx, &whole, &a3)?, b, m)
    })?;
    r.run(StatementId::Prop2, "G ≥ A3 ⊵ 1, χ₂ induced to G", |m| {
        let tower = InductionTower { u: whole.clone(), h: a3.clone(), v: one.clone() };
        check_induction_invariance(&ctx, &tower, &remark.chi2, b, m)
    })?;
    r.run(StatementId::Prop3, "irreducibles of S3", |m| check_character_separation(&ctx, b, m))?;
    r.run(StatementId::S3Remark, "χ₂ vs χ₃ over ℚ(√-3)", |m| s3_counterexample_with(&remark, b, m))?;
    r.run(StatementId::Prop4, "U = A3, V = 1, χ₂", |m| {
        let s = RelativeSetup::new(ctx.clone(), a3.clone(), one.clone(), remark.chi2.clone())?;
        check_induced_faithful(&s, b, m)
    })?;
    r.run(StatementId::Prop4, "U = G, V = 1, Reg", |m| {
        check_induced_faithful(&regular_setup(&ctx, &whole, &one)?, b, m)
    })?;
    r.run(StatementId::Thm5, "degree-2 irreducible against itself", |m| {
        let s = RelativeSetup::new(ctx.clone(), whole.clone(), one.clone(), faithful_irreducible(&ctx)?)?;
        theorem5_consistency(&s, &s.clone(), None, b, m)
    })?;
    r.run(StatementId::Thm6, "χ₂ vs χ₃ on A3", |m| {
        let a = RelativeSetup::new(ctx.clone(), a3.clone(), one.clone(), remark.chi2.clone())?;
        let c = RelativeSetup::new(ctx.clone(), a3.clone(), one.clone(), remark.chi3.clone())?;
        theorem6_consistency(&a, &c, b, m)
    })?;
    r.run(StatementId::Corollary, "x^3 - 2 against itself", |m| {
        let stab = builtin::s3_point_stabilizer(&g);
        let amb = ZetaAmbient { context: ctx.clone(), v1: stab.clone(), v2: stab };
        corollary_zeta_closure(ctx.poly(), ctx.poly(), Some(&amb), opts.zeta_bound, m)
    })?;
    r.run(StatementId::GassmannSearch, "subgroups of S3", |_| {
        gassmann_search_verdict(&g, DEFAULT_GASSMANN_PAIRS, None)
    })?;
    Ok(r.out)
}

pub fn builtin_octic_checks(
    opts: &RunOptions,
    only: Option<StatementId>,
    mapper: &dyn PrimeMapper,
) -> Result<Vec<Verdict>> {
    let ctx = builtin::octic_context_with(opts.validation_bound, mapper)?;
    let g = ctx.group().clone();
    let whole = g.whole();
    let one = g.trivial_subgroup();
    let u = builtin::octic_u(&g);
    let v1 = builtin::octic_v1(&g);
    let v2 = builtin::octic_v2(&g);
    let b = opts.bound;
    let chi1 = sign_of(&ctx, &u, &v1)?;
    let chi2 = sign_of(&ctx, &u, &v2)?;
    let mut r = Runner { only, out: Vec::new(), mapper };

    r.run(StatementId::Prop1, "U ⊵ V1 ⊵ 1, χ₁", |m| {
        let tower = InflationTower { u: u.clone(), v: v1.clone(), w: one.clone() };
        check_inflation_invariance(&ctx, &tower, &chi1, b, m)
    })?;
    r.run(StatementId::Prop2, "G ≥ U ⊵ V1, χ₁ induced to G", |m| {
        let tower = InductionTower { u: whole.clone(), h: u.clone(), v: v1.clone() };
        check_induction_invariance(&ctx, &tower, &chi1, b, m)
    })?;
    r.run(StatementId::Prop3, "irreducibles of the affine group", |m| check_character_separation(&ctx, b, m))?;
    r.run(StatementId::Prop4, "U, V1, χ₁", |m| {
        check_induced_faithful(&RelativeSetup::new(ctx.clone(), u.clone(), v1.clone(), chi1.clone())?, b, m)
    })?;
    r.run(StatementId::Prop4, "U, V2, χ₂", |m| {
        check_induced_faithful(&RelativeSetup::new(ctx.clone(), u.clone(), v2.clone(), chi2.clone())?, b, m)
    })?;
    r.run(StatementId::Thm5, "faithful irreducible against itself", |m| {
        let s = RelativeSetup::new(ctx.clone(), whole.clone(), one.clone(), faithful_irreducible(&ctx)?)?;
        theorem5_consistency(&s, &s.clone(), None, b, m)
    })?;
    r.run(StatementId::Thm6, "Reg on U/V1 vs Reg on U/V2", |m| {
        theorem6_consistency(&regular_setup(&ctx, &u, &v1)?, &regular_setup(&ctx, &u, &v2)?, b, m)
    })?;
    r.run(StatementId::Thm6, "χ₁ vs χ₂", |m| {
        let a = RelativeSetup::new(ctx.clone(), u.clone(), v1.clone(), chi1.clone())?;
        let c = RelativeSetup::new(ctx.clone(), u.clone(), v2.clone(), chi2.clone())?;
        theorem6_consistency(&a, &c, b, m)
    })?;
    r.run(StatementId::Corollary, "x^8 - 3 vs x^8 - 48", |m| {
        let amb = ZetaAmbient { context: ctx.clone(), v1: v1.clone(), v2: v2.clone() };
        corollary_zeta_closure(ctx.poly(), &builtin::octic48_polynomial(), Some(&amb), opts.zeta_bound, m)
    })?;
    r.run(StatementId::FinalExample, "x^8 - 3 and x^8 - 48", |m| {
        final_example_suite(ctx.clone(), b, opts.zeta_bound, m)
    })?;
    r.run(StatementId::GassmannSearch, "subgroups of the affine group", |_| {
        gassmann_search_verdict(&g, DEFAULT_GASSMANN_PAIRS, Some((&v1, &v2)))
    })?;
    Ok(r.out)
}
