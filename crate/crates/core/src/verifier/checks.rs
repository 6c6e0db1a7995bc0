use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{equality_kind, Evidence, StatementId, Verdict, VerdictKind, Witness};
use crate::arith::prime_stream;
use crate::character::{
    character_table, deflate, induce, inflate, is_faithful, kernel, pull_back, validate_character, ClassFunction,
};
use crate::error::{Error, Result};
use crate::galois::{gassmann_equivalent, FrobeniusResolution, SplittingFieldContext, SubfieldSplitter};
use crate::group::{
    EmbeddedSubgroup, GroupHom, PermutationGroup, QuotientGroup, Subgroup, DEFAULT_AUTOMORPHISM_BOUND,
    DEFAULT_SUBGROUP_CAP,
};
use crate::lseries::{
    absolute_prefix, artin_prefix, dedekind_zeta_prefix_direct, relative_prefix, DirichletPrefix, EulerTable,
    PrefixComparison, RelativeSetup, SplitMethod,
};
use crate::mapper::{map_primes, PrimeMapper};
use crate::poly::IntPolynomial;

/// Largest number of automorphisms the final-example search may return.
const AUTOMORPHISM_CAP: usize = 100_000;

/// Short description of a subgroup by order and generators.
pub fn describe_subgroup(g: &PermutationGroup, h: &Subgroup) -> String {
    let gens: Vec<String> = g.small_generating_set(h).into_iter().map(|i| g.element(i).to_string()).collect();
    if gens.is_empty() {
        alloc::format!("order {} (trivial)", h.order())
    } else {
        alloc::format!("order {} generated by {}", h.order(), gens.join(", "))
    }
}

fn first_failure(ev: &Evidence) -> Option<VerdictKind> {
    ev.certificates
        .iter()
        .find(|c| !c.holds)
        .map(|c| VerdictKind::Refuted(Witness::Certificate { name: c.name.clone() }))
}

fn first_difference(a: &ClassFunction, b: &ClassFunction) -> Option<Witness> {
    a.values()
        .iter()
        .zip(b.values())
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(class, (x, y))| Witness::ClassValue { class, left: x.clone(), right: y.clone() })
}

/// `χ` on `U/V` read as a class function of `U/W` for `W ≤ V`.
pub fn lift_to_quotient(qw: &QuotientGroup, qv: &QuotientGroup, chi: &ClassFunction) -> Result<ClassFunction> {
    if qw.numerator != qv.numerator || !qw.denominator.is_subset_of(&qv.denominator) {
        return Err(Error::NotSubgroup);
    }
    let values = qw
        .group
        .classes()
        .iter()
        .map(|c| {
            let image = qv.project(qw.lift(c.representative)).expect("same numerator");
            chi.value_at(&qv.group, image).clone()
        })
        .collect();
    ClassFunction::new(&qw.group, values)
}

/// `H` as a subgroup of the group carried by `U`.
pub fn embed_within(u: &EmbeddedSubgroup, h: &Subgroup) -> Result<EmbeddedSubgroup> {
    let local = h.elements().iter().map(|&x| u.from_parent(x).ok_or(Error::NotSubgroup)).collect::<Result<Vec<_>>>()?;
    let local = u.group.subgroup_from_indices(local)?;
    Ok(u.group.embed(&local))
}

/// `ℚ ⊆ k ⊆ K ⊆ N` as `W ≤ V ⊴ U` with `W ⊴ U`: `k = Fix(U)`, `K = Fix(V)`, `N = Fix(W)`.
#[derive(Clone, Debug)]
pub struct InflationTower {
    pub u: Subgroup,
    pub v: Subgroup,
    pub w: Subgroup,
}

/// `χ` on `U/V` against its inflation to `U/W`, computed along independent
/// routes: left-coset splitting read through `U/V` and double-coset splitting
/// read through `U/W`.
pub fn check_inflation_invariance(
    ctx: &SplittingFieldContext,
    tower: &InflationTower,
    chi: &ClassFunction,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let g = ctx.group();
    let qv = g.quotient(&tower.u, &tower.v)?;
    let qw = g.quotient(&tower.u, &tower.w)?;
    let chi_tilde = lift_to_quotient(&qw, &qv, chi)?;
    check_inflation_invariance_with(ctx, tower, chi, &chi_tilde, bound, mapper)
}

/// As [`check_inflation_invariance`] with the inflated character supplied.
pub fn check_inflation_invariance_with(
    ctx: &SplittingFieldContext,
    tower: &InflationTower,
    chi: &ClassFunction,
    chi_tilde: &ClassFunction,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let g = ctx.group();
    let qv = g.quotient(&tower.u, &tower.v)?;
    let qw = g.quotient(&tower.u, &tower.w)?;
    let splitter = SubfieldSplitter::new(g, &tower.u);
    let mut ev = Evidence::default();
    ev.note(alloc::format!("[G:U] = {}, |U/V| = {}, |U/W| = {}", splitter.index(), qv.order(), qw.order()));

    let on_u = inflate(&splitter.subgroup, &qv, chi)?;
    let back = deflate(&splitter.subgroup, &qv, &on_u)?;
    ev.cert("deflation recovers χ", back == *chi, "χ on U/V → U → U/V".into());

    let table_k = EulerTable::via_quotient(&splitter.subgroup, &qv, chi)?;
    let lk = relative_prefix(ctx, &splitter, &table_k, SplitMethod::LeftCosets, bound, mapper)?;
    let table_n = EulerTable::via_quotient(&splitter.subgroup, &qw, chi_tilde)?;
    let ln = relative_prefix(ctx, &splitter, &table_n, SplitMethod::DoubleCosets, bound, mapper)?;
    ev.count_prefix(&lk);
    ev.count_prefix(&ln);
    if let Some(kind) = first_failure(&ev) {
        return Ok(ev.finish(StatementId::Prop1, "", kind));
    }
    let kind = equality_kind(ev.compare("L(χ, K/k) vs L(χ̃, N/k)", &lk, &ln));
    Ok(ev.finish(StatementId::Prop1, "", kind))
}

/// `k ⊆ F ⊆ K` as `V ⊴ H ≤ U`: `k = Fix(U)`, `F = Fix(H)`, `K = Fix(V)`.
#[derive(Clone, Debug)]
pub struct InductionTower {
    pub u: Subgroup,
    pub h: Subgroup,
    pub v: Subgroup,
}

/// Induced character on `U` of `χ` on `H/V` (inflated to `H` first).
pub fn induced_to_u(ctx: &SplittingFieldContext, tower: &InductionTower, chi: &ClassFunction) -> Result<ClassFunction> {
    let g = ctx.group();
    if !tower.h.is_subset_of(&tower.u) {
        return Err(Error::NotSubgroup);
    }
    let q = g.quotient(&tower.h, &tower.v)?;
    let h_emb = g.embed(&tower.h);
    let u_emb = g.embed(&tower.u);
    let on_h = inflate(&h_emb, &q, chi)?;
    let h_in_u = embed_within(&u_emb, &tower.h)?;
    induce(&u_emb.group, &h_in_u, &on_h)
}

/// `L(χ, K/F)` split over `F` against `L(χ^U, K/k)` split over `k`.
pub fn check_induction_invariance(
    ctx: &SplittingFieldContext,
    tower: &InductionTower,
    chi: &ClassFunction,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let induced = induced_to_u(ctx, tower, chi)?;
    check_induction_invariance_with(ctx, tower, chi, &induced, bound, mapper)
}

/// As [`check_induction_invariance`] with the induced character supplied.
pub fn check_induction_invariance_with(
    ctx: &SplittingFieldContext,
    tower: &InductionTower,
    chi: &ClassFunction,
    induced: &ClassFunction,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let g = ctx.group();
    if !tower.h.is_subset_of(&tower.u) {
        return Err(Error::NotSubgroup);
    }
    let q = g.quotient(&tower.h, &tower.v)?;
    let mut ev = Evidence::default();
    let split_f = SubfieldSplitter::new(g, &tower.h);
    let split_k = SubfieldSplitter::new(g, &tower.u);
    let index = tower.u.order() / tower.h.order();
    ev.note(alloc::format!("[U:H] = {index}, |H/V| = {}", q.order()));
    let (deg_ind, deg_chi) = (induced.degree()?, chi.degree()?);
    ev.cert(
        "deg χ^U = [U:H] deg χ",
        deg_ind == index as u64 * deg_chi,
        alloc::format!("{deg_ind} = {index} · {deg_chi}"),
    );

    let table_f = EulerTable::via_quotient(&split_f.subgroup, &q, chi)?;
    let lf = relative_prefix(ctx, &split_f, &table_f, SplitMethod::LeftCosets, bound, mapper)?;
    let table_k = EulerTable::from_character(&split_k.subgroup.group, induced)?;
    let lk = relative_prefix(ctx, &split_k, &table_k, SplitMethod::LeftCosets, bound, mapper)?;
    ev.count_prefix(&lf);
    ev.count_prefix(&lk);
    if let Some(kind) = first_failure(&ev) {
        return Ok(ev.finish(StatementId::Prop2, "", kind));
    }
    let kind = equality_kind(ev.compare("L(χ, K/F) vs L(χ^U, K/k)", &lf, &lk));
    Ok(ev.finish(StatementId::Prop2, "", kind))
}

/// A pair of character indices and, if found, a separating prime with its Frobenius class.
pub type Separation = (usize, usize, Option<(u64, usize)>);

/// For each pair `i < j` of `chars`, the least unexcluded prime `p ≤ bound`
/// with `χ_i(Frob_p) ≠ χ_j(Frob_p)`, together with the Frobenius class.
pub fn separating_primes(
    ctx: &SplittingFieldContext,
    chars: &[ClassFunction],
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Vec<Separation>> {
    let primes = prime_stream(2, bound as u64);
    let resolutions = map_primes(mapper, &primes, |p| ctx.frobenius_class(p));
    let mut pairs: Vec<Separation> = Vec::new();
    for i in 0..chars.len() {
        for j in (i + 1)..chars.len() {
            pairs.push((i, j, None));
        }
    }
    for (&p, res) in primes.iter().zip(resolutions) {
        let FrobeniusResolution::Unique(c) = res? else { continue };
        for pair in pairs.iter_mut().filter(|x| x.2.is_none()) {
            if chars[pair.0].value(c) != chars[pair.1].value(c) {
                pair.2 = Some((p, c));
            }
        }
    }
    Ok(pairs)
}

/// Every pair of distinct irreducible characters of the context group has
/// differing coefficients at some prime `≤ bound`.
pub fn check_character_separation(
    ctx: &SplittingFieldContext,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let table = character_table(ctx.group())?;
    check_character_separation_with(ctx, table.irreducibles(), bound, mapper)
}

pub fn check_character_separation_with(
    ctx: &SplittingFieldContext,
    chars: &[ClassFunction],
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let mut ev = Evidence::default();
    let pairs = separating_primes(ctx, chars, bound, mapper)?;
    ev.work.primes = prime_stream(2, bound as u64).len();
    let mut missing = 0;
    for (i, j, sep) in &pairs {
        let name = alloc::format!("χ{i} vs χ{j}");
        match sep {
            Some((p, c)) => {
                let detail = alloc::format!("p = {p}, class {c}: {} vs {}", chars[*i].value(*c), chars[*j].value(*c));
                ev.cert(&name, true, detail);
            }
            None => {
                missing += 1;
                ev.cert(&name, false, alloc::format!("no separating prime ≤ {bound}"));
            }
        }
    }
    let max = pairs.iter().filter_map(|x| x.2.map(|s| s.0)).max();
    ev.note(alloc::format!(
        "{} characters, {} pairs, largest separating prime {}",
        chars.len(),
        pairs.len(),
        max.map_or("-".into(), |p| p.to_string())
    ));
    let kind = if missing == 0 {
        VerdictKind::Verified { bound: Some(bound) }
    } else {
        VerdictKind::Inconclusive(alloc::format!("{missing} pairs not separated by primes ≤ {bound}"))
    };
    Ok(ev.finish(StatementId::Prop3, "", kind))
}

/// Data for the two-characters-one-L-series example over the quadratic
/// subfield of the splitting field of `x^3 - 2`.
#[derive(Clone, Debug)]
pub struct S3Remark {
    pub context: Arc<SplittingFieldContext>,
    pub u: Subgroup,
    pub v: Subgroup,
    pub chi2: ClassFunction,
    pub chi3: ClassFunction,
}

impl S3Remark {
    /// `U` = the rotation subgroup, `V = 1`, `χ₂, χ₃` the two nontrivial
    /// characters of `U/V`.
    pub fn from_context(context: Arc<SplittingFieldContext>) -> Result<Self> {
        let g = context.group();
        let u = crate::builtin::s3_a3(g);
        let v = g.trivial_subgroup();
        let q = g.quotient(&u, &v)?;
        let table = character_table(&q.group)?;
        let chi2 = table.irreducibles()[1].clone();
        let chi3 = table.irreducibles()[2].clone();
        Ok(S3Remark { context, u, v, chi2, chi3 })
    }

    pub fn quotient(&self) -> Result<QuotientGroup> {
        self.context.group().quotient(&self.u, &self.v)
    }
}

pub fn s3_counterexample(
    context: Arc<SplittingFieldContext>,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    s3_counterexample_with(&S3Remark::from_context(context)?, bound, mapper)
}

/// `χ₂ ≠ χ₃` as irreducible characters while `L(χ₂, K/k) = L(χ₃, K/k)`.
pub fn s3_counterexample_with(data: &S3Remark, bound: usize, mapper: &dyn PrimeMapper) -> Result<Verdict> {
    let g = data.context.group();
    let q = data.quotient()?;
    let table = character_table(&q.group)?;
    let mut ev = Evidence::default();
    for (name, chi) in [("χ₂ irreducible", &data.chi2), ("χ₃ irreducible", &data.chi3)] {
        let res = validate_character(&q.group, &table, chi, true);
        let detail = match &res {
            Ok(()) => alloc::format!("values {}", join_values(chi)),
            Err(e) => alloc::format!("{e}; values {}", join_values(chi)),
        };
        ev.cert(name, res.is_ok(), detail);
    }
    if let Some(kind) = first_failure(&ev) {
        return Ok(ev.finish(StatementId::S3Remark, "", kind));
    }
    let distinct = first_difference(&data.chi2, &data.chi3);
    let detail = match &distinct {
        Some(w) => w.to_string(),
        None => "equal on every class".into(),
    };
    if !ev.cert("χ₂ ≠ χ₃", distinct.is_some(), detail) {
        let kind = VerdictKind::Refuted(Witness::Certificate { name: "χ₂ ≠ χ₃".into() });
        return Ok(ev.finish(StatementId::S3Remark, "", kind));
    }

    let u_emb = g.embed(&data.u);
    let ind2 = induce(g, &u_emb, &inflate(&u_emb, &q, &data.chi2)?)?;
    let ind3 = induce(g, &u_emb, &inflate(&u_emb, &q, &data.chi3)?)?;
    ev.cert("χ₂^G = χ₃^G", ind2 == ind3, alloc::format!("values {}", join_values(&ind2)));

    let a = RelativeSetup::new(data.context.clone(), data.u.clone(), data.v.clone(), data.chi2.clone())?;
    let b = RelativeSetup::new(data.context.clone(), data.u.clone(), data.v.clone(), data.chi3.clone())?;
    let la = artin_prefix(&a, bound, mapper)?;
    let lb = artin_prefix(&b, bound, mapper)?;
    ev.count_prefix(&la);
    ev.count_prefix(&lb);
    let kind = equality_kind(ev.compare("L(χ₂, K/k) vs L(χ₃, K/k)", &la, &lb));
    Ok(ev.finish(StatementId::S3Remark, "", kind))
}

fn join_values(chi: &ClassFunction) -> String {
    let parts: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
    alloc::format!("({})", parts.join(", "))
}

fn require_faithful(setup: &RelativeSetup) -> Result<()> {
    let q = setup.quotient();
    if is_faithful(&q.group, setup.chi())? {
        Ok(())
    } else {
        Err(Error::NotFaithful)
    }
}

/// Inflate-then-induce certificates for one setup; returns `χ̃^G`.
fn induced_certificates(setup: &RelativeSetup, ev: &mut Evidence, tag: &str) -> Result<ClassFunction> {
    let g = setup.context().group();
    let u = setup.embedded_u();
    let chi_t = setup.inflated()?;
    let ker_local = kernel(&u.group, &chi_t)?;
    let ker = g.subgroup_from_indices(ker_local.elements().iter().map(|&x| u.to_parent(x)).collect())?;
    ev.cert(
        &alloc::format!("{tag}Ker(χ̃) = V"),
        ker == *setup.v(),
        alloc::format!("kernel of {}", describe_subgroup(g, &ker)),
    );
    let core = g.normal_core(setup.v());
    ev.cert(
        &alloc::format!("{tag}core(V) = 1"),
        core.is_trivial(),
        alloc::format!("normal core of V has order {}", core.order()),
    );
    let induced = induce(g, u, &chi_t)?;
    let ker_ind = kernel(g, &induced)?;
    ev.cert(
        &alloc::format!("{tag}Ker(χ̃^G) = core(Ker χ̃)"),
        ker_ind == g.normal_core(&ker),
        alloc::format!("kernel of the induced character has order {}", ker_ind.order()),
    );
    ev.cert(
        &alloc::format!("{tag}χ̃^G faithful"),
        ker_ind.is_trivial(),
        alloc::format!("values {}", join_values(&induced)),
    );
    Ok(induced)
}

/// For `χ` faithful on `U/V` with `V` core-free: `χ̃^G` is faithful and
/// `L(χ, K/k) = L(χ̃^G, L/ℚ)`.
pub fn check_induced_faithful(setup: &RelativeSetup, bound: usize, mapper: &dyn PrimeMapper) -> Result<Verdict> {
    require_faithful(setup)?;
    let mut ev = Evidence::default();
    let induced = induced_certificates(setup, &mut ev, "")?;
    if let Some(kind) = first_failure(&ev) {
        return Ok(ev.finish(StatementId::Prop4, "", kind));
    }
    let rel = artin_prefix(setup, bound, mapper)?;
    let abs = absolute_prefix(setup.context(), &induced, bound, mapper)?;
    ev.count_prefix(&rel);
    ev.count_prefix(&abs);
    let kind = equality_kind(ev.compare("L(χ, K/k) vs L(χ̃^G, L/ℚ)", &rel, &abs));
    Ok(ev.finish(StatementId::Prop4, "", kind))
}

/// A group mapping onto the context groups of two setups.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub group: PermutationGroup,
    pub to_first: GroupHom,
    pub to_second: GroupHom,
}

impl Ambient {
    /// The shared group of two setups over one context.
    pub fn shared(g: &PermutationGroup) -> Self {
        Ambient { group: g.clone(), to_first: GroupHom::identity(g), to_second: GroupHom::identity(g) }
    }
}

fn same_context(a: &SplittingFieldContext, b: &SplittingFieldContext) -> bool {
    a.poly() == b.poly() && a.group().elements() == b.group().elements()
}

/// Faithful characters over ℚ with equal L-series have equal kernels and agree
/// on a common ambient group.
pub fn theorem5_consistency(
    a: &RelativeSetup,
    b: &RelativeSetup,
    ambient: Option<&Ambient>,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    if !a.is_absolute() || !b.is_absolute() {
        return Err(Error::InvalidInput("both setups must have base ℚ (U = G)".into()));
    }
    require_faithful(a)?;
    require_faithful(b)?;
    let mut ev = Evidence::default();
    let la = artin_prefix(a, bound, mapper)?;
    let lb = artin_prefix(b, bound, mapper)?;
    ev.count_prefix(&la);
    ev.count_prefix(&lb);
    let c = ev.compare("L(χ₁, K₁/ℚ) vs L(χ₂, K₂/ℚ)", &la, &lb);
    if !matches!(c, PrefixComparison::Equal { .. }) {
        return Ok(ev.finish(StatementId::Thm5, "", equality_kind(c)));
    }
    let shared;
    let ambient = match ambient {
        Some(x) => x,
        None if same_context(a.context(), b.context()) => {
            shared = Ambient::shared(a.context().group());
            &shared
        }
        None => {
            let kind = VerdictKind::Inconclusive("missing common ambient".into());
            return Ok(ev.finish(StatementId::Thm5, "", kind));
        }
    };
    let pa = pull_back(&ambient.group, a.context().group(), &ambient.to_first, &a.inflated()?)?;
    let pb = pull_back(&ambient.group, b.context().group(), &ambient.to_second, &b.inflated()?)?;
    if let Some(w) = first_difference(&pa, &pb) {
        ev.cert("characters equal on the ambient group", false, w.to_string());
        let kind = VerdictKind::Inconclusive(alloc::format!(
            "prefixes agree through {bound} but the characters differ on the ambient group ({w}); raise the bound"
        ));
        return Ok(ev.finish(StatementId::Thm5, "", kind));
    }
    ev.cert("characters equal on the ambient group", true, alloc::format!("values {}", join_values(&pa)));
    let ka = kernel(&ambient.group, &pa)?;
    let kb = kernel(&ambient.group, &pb)?;
    ev.cert("kernels equal", ka == kb, alloc::format!("common kernel of {}", describe_subgroup(&ambient.group, &ka)));
    let kind = first_failure(&ev).unwrap_or(VerdictKind::Verified { bound: Some(bound) });
    Ok(ev.finish(StatementId::Thm5, "", kind))
}

/// The relative version: inflate and induce both sides to `G`, certify
/// faithfulness, then compare over ℚ.
pub fn theorem6_consistency(
    a: &RelativeSetup,
    b: &RelativeSetup,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    require_faithful(a)?;
    require_faithful(b)?;
    let mut ev = Evidence::default();
    let ind_a = induced_certificates(a, &mut ev, "first: ")?;
    let ind_b = induced_certificates(b, &mut ev, "second: ")?;
    let la = artin_prefix(a, bound, mapper)?;
    let lb = artin_prefix(b, bound, mapper)?;
    let abs_a = absolute_prefix(a.context(), &ind_a, bound, mapper)?;
    let abs_b = absolute_prefix(b.context(), &ind_b, bound, mapper)?;
    for l in [&la, &lb, &abs_a, &abs_b] {
        ev.count_prefix(l);
    }
    for (tag, rel, abs) in [("first", &la, &abs_a), ("second", &lb, &abs_b)] {
        let c = ev.compare(&alloc::format!("{tag}: relative vs induced over ℚ"), rel, abs);
        ev.cert(
            &alloc::format!("{tag}: L(χ, K/k) = L(χ̃^G, L/ℚ)"),
            matches!(c, PrefixComparison::Equal { .. }),
            alloc::format!("{c:?}"),
        );
    }
    if let Some(kind) = first_failure(&ev) {
        return Ok(ev.finish(StatementId::Thm6, "", kind));
    }
    let c = ev.compare("L(χ₁, K₁/k₁) vs L(χ₂, K₂/k₂)", &la, &lb);
    if !matches!(c, PrefixComparison::Equal { .. }) {
        return Ok(ev.finish(StatementId::Thm6, "", equality_kind(c)));
    }
    if !same_context(a.context(), b.context()) {
        let kind = VerdictKind::Inconclusive("missing common ambient".into());
        return Ok(ev.finish(StatementId::Thm6, "", kind));
    }
    let kind = match first_difference(&ind_a, &ind_b) {
        None => {
            ev.cert("χ̃₁^G = χ̃₂^G", true, alloc::format!("values {}", join_values(&ind_a)));
            VerdictKind::Verified { bound: Some(bound) }
        }
        Some(w) => {
            ev.cert("χ̃₁^G = χ̃₂^G", false, w.to_string());
            VerdictKind::Inconclusive(alloc::format!(
                "prefixes agree through {bound} but the induced characters differ ({w}); raise the bound"
            ))
        }
    };
    Ok(ev.finish(StatementId::Thm6, "", kind))
}

/// Realization of two fields as fixed fields `Fix(V1)`, `Fix(V2)` in one context.
#[derive(Clone, Debug)]
pub struct ZetaAmbient {
    pub context: Arc<SplittingFieldContext>,
    pub v1: Subgroup,
    pub v2: Subgroup,
}

/// Equal Dedekind zeta prefixes of two fields, computed from factor shapes and
/// from permutation characters, and the equality `1_{V1}^G = 1_{V2}^G`.
pub fn corollary_zeta_closure(
    poly_a: &IntPolynomial,
    poly_b: &IntPolynomial,
    ambient: Option<&ZetaAmbient>,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let mut ev = Evidence::default();
    let da = dedekind_zeta_prefix_direct(poly_a, bound, mapper)?;
    let db = dedekind_zeta_prefix_direct(poly_b, bound, mapper)?;
    ev.count_prefix(&da);
    ev.count_prefix(&db);
    let mut perm = None;
    if let Some(amb) = ambient {
        let g = amb.context.group();
        let p1 = ClassFunction::permutation_character(g, &amb.v1);
        let p2 = ClassFunction::permutation_character(g, &amb.v2);
        let la = absolute_prefix(&amb.context, &p1, bound, mapper)?;
        let lb = absolute_prefix(&amb.context, &p2, bound, mapper)?;
        ev.count_prefix(&la);
        ev.count_prefix(&lb);
        for (tag, direct, via) in [("first", &da, &la), ("second", &db, &lb)] {
            let c = ev.compare(&alloc::format!("{tag}: factor shapes vs permutation character"), direct, via);
            ev.cert(
                &alloc::format!("{tag}: methods agree"),
                matches!(c, PrefixComparison::Equal { .. }),
                alloc::format!("{c:?}"),
            );
        }
        perm = Some((p1, p2));
    }
    if let Some(kind) = first_failure(&ev) {
        return Ok(ev.finish(StatementId::Corollary, "", kind));
    }
    let c = ev.compare("ζ_{K₁} vs ζ_{K₂}", &da, &db);
    if !matches!(c, PrefixComparison::Equal { .. }) {
        return Ok(ev.finish(StatementId::Corollary, "", equality_kind(c)));
    }
    let kind = match perm {
        Some((p1, p2)) => match first_difference(&p1, &p2) {
            None => {
                ev.cert("1_{V1}^G = 1_{V2}^G", true, alloc::format!("values {}", join_values(&p1)));
                VerdictKind::Verified { bound: Some(bound) }
            }
            Some(w) => {
                ev.cert("1_{V1}^G = 1_{V2}^G", false, w.to_string());
                VerdictKind::Inconclusive(alloc::format!(
                    "zeta prefixes agree through {bound} but the permutation characters differ ({w}); raise the bound"
                ))
            }
        },
        None if poly_a == poly_b => VerdictKind::Verified { bound: Some(bound) },
        None => VerdictKind::Inconclusive("missing common ambient".into()),
    };
    Ok(ev.finish(StatementId::Corollary, "", kind))
}

/// Inputs of the final example: the context of `x^8 - 3`, the partner
/// polynomial `x^8 - 48`, and `V1, V2 ⊴ U`.
#[derive(Clone, Debug)]
pub struct FinalExampleData {
    pub context: Arc<SplittingFieldContext>,
    pub partner: IntPolynomial,
    pub u: Subgroup,
    pub v1: Subgroup,
    pub v2: Subgroup,
}

impl FinalExampleData {
    pub fn from_context(context: Arc<SplittingFieldContext>) -> Self {
        let g = context.group();
        let (u, v1, v2) = (crate::builtin::octic_u(g), crate::builtin::octic_v1(g), crate::builtin::octic_v2(g));
        FinalExampleData { context, partner: crate::builtin::octic48_polynomial(), u, v1, v2 }
    }
}

pub fn final_example_suite(
    context: Arc<SplittingFieldContext>,
    bound: usize,
    zeta_bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    final_example_suite_with(&FinalExampleData::from_context(context), bound, zeta_bound, mapper)
}

/// Runs the seven certificates in order and stops at the first failure.
pub fn final_example_suite_with(
    data: &FinalExampleData,
    bound: usize,
    zeta_bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<Verdict> {
    let ctx = &data.context;
    let g = ctx.group();
    let mut ev = Evidence::default();
    macro_rules! stop_on_failure {
        () => {
            if let Some(kind) = first_failure(&ev) {
                return Ok(ev.finish(StatementId::FinalExample, "", kind));
            }
        };
    }

    ev.cert("|G| = 32", g.order() == 32, alloc::format!("|G| = {}", g.order()));
    stop_on_failure!();

    let conj = g.are_conjugate(&data.v1, &data.v2);
    let detail = match conj {
        None => alloc::format!("no g among {} elements conjugates V1 to V2", g.order()),
        Some(w) => alloc::format!("g = {} conjugates V1 to V2", g.element(w)),
    };
    ev.cert("V1, V2 not conjugate", conj.is_none(), detail);
    stop_on_failure!();

    let (gassmann, rows) = gassmann_equivalent(g, &data.v1, &data.v2);
    let counts: Vec<String> = rows.iter().map(|r| alloc::format!("{}/{}", r.count_first, r.count_second)).collect();
    ev.cert(
        "Gassmann equivalent",
        gassmann,
        alloc::format!("|c ∩ V1|/|c ∩ V2| over {} classes: {}", rows.len(), counts.join(" ")),
    );
    stop_on_failure!();

    let autos = g.automorphism_group(DEFAULT_AUTOMORPHISM_BOUND, AUTOMORPHISM_CAP)?;
    let alpha = autos.iter().find(|a| a.apply_subgroup(&data.v1) == data.v2);
    let detail = match alpha {
        Some(a) => {
            let images: Vec<String> = a
                .generators
                .iter()
                .zip(&a.generator_images)
                .map(|(&x, &y)| alloc::format!("{} ↦ {}", g.element(x), g.element(y)))
                .collect();
            alloc::format!(
                "{} of {} automorphisms; one is {} ({})",
                autos.iter().filter(|a| a.apply_subgroup(&data.v1) == data.v2).count(),
                autos.len(),
                images.join(", "),
                if a.is_inner(g) { "inner" } else { "outer" }
            )
        }
        None => alloc::format!("none of {} automorphisms", autos.len()),
    };
    ev.cert("α(V1) = V2", alpha.is_some(), detail);
    stop_on_failure!();

    let mut setups = Vec::new();
    let mut reg_ok = true;
    let mut reg_detail = Vec::new();
    for (tag, v) in [("V1", &data.v1), ("V2", &data.v2)] {
        let q = g.quotient(&data.u, v)?;
        let table = character_table(&q.group)?;
        let one = ClassFunction::trivial(&q.group);
        let reg = ClassFunction::regular(&q.group);
        let chi = table
            .irreducibles()
            .iter()
            .find(|x| **x != one)
            .cloned()
            .ok_or_else(|| Error::InvalidInput("U/V has no nontrivial character".into()))?;
        reg_ok &= q.order() == 2 && reg == one.add(&chi)?;
        reg_detail.push(alloc::format!("|U/{tag}| = {}, χ = {}", q.order(), join_values(&chi)));
        setups.push((q, one, chi, reg, v.clone()));
    }
    ev.cert("Reg = 1 + χ on both quotients", reg_ok, reg_detail.join("; "));
    stop_on_failure!();

    let mut relative_equal = true;
    let mut relative_detail = Vec::new();
    for (k, name) in ["1", "χ", "Reg"].iter().enumerate() {
        let mut prefixes = Vec::new();
        for (_, one, chi, reg, v) in &setups {
            let c = [one, chi, reg][k].clone();
            let s = RelativeSetup::new(ctx.clone(), data.u.clone(), v.clone(), c)?;
            let l = artin_prefix(&s, bound, mapper)?;
            ev.count_prefix(&l);
            prefixes.push(l);
        }
        let c = ev.compare(&alloc::format!("L({name}, K₁/k) vs L({name}, K₂/k)"), &prefixes[0], &prefixes[1]);
        relative_equal &= matches!(c, PrefixComparison::Equal { .. });
        relative_detail.push(alloc::format!("{name}: {}", comparison_summary(&c)));
    }
    ev.cert("relative L-series agree", relative_equal, relative_detail.join("; "));
    stop_on_failure!();

    let (zeta_ok, zeta_detail) = zeta_certificate(data, zeta_bound, mapper, &mut ev)?;
    ev.cert("ζ_{K₁} = ζ_{K₂}", zeta_ok, zeta_detail);
    stop_on_failure!();

    Ok(ev.finish(StatementId::FinalExample, "", VerdictKind::Verified { bound: Some(bound) }))
}

fn comparison_summary(c: &PrefixComparison) -> String {
    match c {
        PrefixComparison::Equal { bound, compared } => alloc::format!("equal on {compared} indices ≤ {bound}"),
        PrefixComparison::Differ { index, left, right } => alloc::format!("differ at {index}: {left} vs {right}"),
        PrefixComparison::IncomparableExclusions { bound } => alloc::format!("nothing comparable ≤ {bound}"),
    }
}

/// Zeta prefixes of both fields from factor shapes and from permutation
/// characters; all four must agree.
fn zeta_certificate(
    data: &FinalExampleData,
    zeta_bound: usize,
    mapper: &dyn PrimeMapper,
    ev: &mut Evidence,
) -> Result<(bool, String)> {
    let g = data.context.group();
    let d1 = dedekind_zeta_prefix_direct(data.context.poly(), zeta_bound, mapper)?;
    let d2 = dedekind_zeta_prefix_direct(&data.partner, zeta_bound, mapper)?;
    let p1 = absolute_prefix(&data.context, &ClassFunction::permutation_character(g, &data.v1), zeta_bound, mapper)?;
    let p2 = absolute_prefix(&data.context, &ClassFunction::permutation_character(g, &data.v2), zeta_bound, mapper)?;
    for l in [&d1, &d2, &p1, &p2] {
        ev.count_prefix(l);
    }
    let checks = [
        ("direct ζ_{K₁} vs direct ζ_{K₂}", &d1, &d2),
        ("direct ζ_{K₁} vs 1_{V1}^G", &d1, &p1),
        ("direct ζ_{K₂} vs 1_{V2}^G", &d2, &p2),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (what, a, b) in checks {
        let c = ev.compare(what, a, b);
        ok &= matches!(c, PrefixComparison::Equal { .. });
        detail.push(alloc::format!("{what}: {}", comparison_summary(&c)));
    }
    Ok((ok, detail.join("; ")))
}

/// Pairs of non-conjugate subgroups with equal permutation characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GassmannReport {
    pub subgroup_count: usize,
    pub class_count: usize,
    /// Representatives of subgroup conjugacy classes, in enumeration order.
    pub pairs: Vec<(Subgroup, Subgroup)>,
    /// Whether the search stopped at `max_pairs`.
    pub truncated: bool,
}

pub fn gassmann_search(g: &PermutationGroup, max_pairs: usize) -> Result<GassmannReport> {
    let subgroups = g.subgroups_up_to(DEFAULT_SUBGROUP_CAP)?;
    let classes = g.subgroup_conjugacy_classes(&subgroups);
    let reps: Vec<&Subgroup> = classes.iter().map(|c| &subgroups[c[0]]).collect();
    let mut pairs = Vec::new();
    let mut truncated = false;
    'outer: for i in 0..reps.len() {
        for j in (i + 1)..reps.len() {
            if reps[i].order() == reps[j].order() && gassmann_equivalent(g, reps[i], reps[j]).0 {
                if pairs.len() == max_pairs {
                    truncated = true;
                    break 'outer;
                }
                pairs.push((reps[i].clone(), reps[j].clone()));
            }
        }
    }
    Ok(GassmannReport { subgroup_count: subgroups.len(), class_count: reps.len(), pairs, truncated })
}

/// Runs [`gassmann_search`]; with `expected`, the pair must appear up to conjugacy.
pub fn gassmann_search_verdict(
    g: &PermutationGroup,
    max_pairs: usize,
    expected: Option<(&Subgroup, &Subgroup)>,
) -> Result<Verdict> {
    let report = gassmann_search(g, max_pairs)?;
    let mut ev = Evidence::default();
    ev.note(alloc::format!(
        "{} subgroups in {} conjugacy classes; {} Gassmann pairs{}",
        report.subgroup_count,
        report.class_count,
        report.pairs.len(),
        if report.truncated { " (truncated)" } else { "" }
    ));
    for (k, (a, b)) in report.pairs.iter().enumerate() {
        ev.cert(
            &alloc::format!("pair {k}"),
            true,
            alloc::format!("{} ~ {}", describe_subgroup(g, a), describe_subgroup(g, b)),
        );
    }
    if let Some((x, y)) = expected {
        let matches = |a: &Subgroup, b: &Subgroup| {
            (g.are_conjugate(a, x).is_some() && g.are_conjugate(b, y).is_some())
                || (g.are_conjugate(a, y).is_some() && g.are_conjugate(b, x).is_some())
        };
        let found = report.pairs.iter().any(|(a, b)| matches(a, b));
        ev.cert(
            "expected pair found",
            found,
            alloc::format!("{} ~ {}", describe_subgroup(g, x), describe_subgroup(g, y)),
        );
    }
    let kind = first_failure(&ev).unwrap_or(VerdictKind::Verified { bound: None });
    Ok(ev.finish(StatementId::GassmannSearch, "", kind))
}

/// Recomputes both prefixes of a coefficient witness up to its index.
pub fn recheck_coefficient(a: &DirichletPrefix, b: &DirichletPrefix, index: usize) -> bool {
    matches!((a.coefficient(index), b.coefficient(index)), (Some(x), Some(y)) if x != y)
}
