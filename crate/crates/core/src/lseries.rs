//! Euler factors from character power sums and exact Dirichlet-coefficient
//! prefixes of Artin L-series.
//!
//! Coefficients are indexed by rational integers also over relative bases: a
//! prime of norm `p^f` contributes in the variable `p^{-fs}`. Indices divisible
//! by a ramified or ambiguous prime are absent rather than zero.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::prime_stream;
use crate::character::{inflate, ClassFunction};
use crate::cyclo::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::galois::{FrobeniusResolution, SplittingFieldContext, SubfieldSplitter};
use crate::group::{EmbeddedSubgroup, PermutationGroup, QuotientGroup, Subgroup};
use crate::mapper::{map_primes, PrimeMapper};
use crate::poly::{FactorShape, IntPolynomial};

/// Default number of coefficients computed per prefix.
pub const DEFAULT_BOUND: usize = 1000;

/// `det(1 - ρ(σ) T) = Σ c_k T^k` with `c_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseEulerFactor {
    coeffs: Vec<CycloNumber>,
}

impl InverseEulerFactor {
    pub fn from_coeffs(coeffs: Vec<CycloNumber>) -> Self {
        InverseEulerFactor { coeffs }
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// The first `len` coefficients of `1 / P(T)`.
    pub fn inverse_series(&self, len: usize) -> Vec<CycloNumber> {
        let field = self.coeffs[0].field();
        let mut h: Vec<CycloNumber> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                h.push(CycloNumber::from_integer(field, 1));
                continue;
            }
            let mut acc = CycloNumber::zero(field);
            for i in 1..self.coeffs.len().min(k + 1) {
                if !self.coeffs[i].is_zero() && !h[k - i].is_zero() {
                    acc = &acc - &(&self.coeffs[i] * &h[k - i]);
                }
            }
            h.push(acc);
        }
        h
    }
}

/// Signed elementary symmetric functions `c_0..=c_count` of the eigenvalues
/// of `ρ(σ)`, `σ` in `class`, from the power sums `χ(σ^k)`.
pub fn newton_coefficients(
    group: &PermutationGroup,
    chi: &ClassFunction,
    class: usize,
    count: usize,
) -> Vec<CycloNumber> {
    let field = chi.field();
    let power_sums: Vec<CycloNumber> =
        (0..=count).map(|k| chi.value(group.power_class(class, k as u64)).clone()).collect();
    let mut e: Vec<CycloNumber> = alloc::vec![CycloNumber::from_integer(field, 1)];
    for k in 1..=count {
        let mut acc = CycloNumber::zero(field);
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(k))));
    }
    e.into_iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x } else { x }).collect()
}

/// `det(1 - ρ(σ) T)` for a character `χ` and a class of its group.
pub fn inverse_euler_factor(group: &PermutationGroup, chi: &ClassFunction, class: usize) -> Result<InverseEulerFactor> {
    if !chi.belongs_to(group) {
        return Err(Error::GroupMismatch);
    }
    let d = chi.degree()? as usize;
    Ok(InverseEulerFactor { coeffs: newton_coefficients(group, chi, class, d) })
}

/// Inverse Euler factors indexed by the classes of the group a prime's
/// Frobenius is read in.
#[derive(Clone, Debug)]
pub struct EulerTable {
    field: Arc<CycloField>,
    factors: Vec<InverseEulerFactor>,
}

impl EulerTable {
    pub fn from_character(group: &PermutationGroup, chi: &ClassFunction) -> Result<Self> {
        let factors =
            (0..group.classes().len()).map(|c| inverse_euler_factor(group, chi, c)).collect::<Result<Vec<_>>>()?;
        Ok(EulerTable { field: chi.field().clone(), factors })
    }

    /// Factors of `χ` on `U/V`, read through the projection `U → U/V`.
    pub fn via_quotient(u: &EmbeddedSubgroup, q: &QuotientGroup, chi: &ClassFunction) -> Result<Self> {
        if u.subgroup != q.numerator {
            return Err(Error::GroupMismatch);
        }
        let on_quotient = Self::from_character(&q.group, chi)?;
        let factors = u
            .group
            .classes()
            .iter()
            .map(|c| {
                let image = q.project(u.to_parent(c.representative)).expect("element of the numerator");
                on_quotient.factors[q.group.class_of(image)].clone()
            })
            .collect();
        Ok(EulerTable { field: on_quotient.field, factors })
    }

    pub fn factor(&self, class: usize) -> &InverseEulerFactor {
        &self.factors[class]
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Which decomposition of `G` drives the splitting of primes in `Fix(U)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMethod {
    LeftCosets,
    DoubleCosets,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    /// Over ℚ, read through the whole context group.
    Absolute,
    /// Over the fixed field of a subgroup of the given index.
    Relative { index: usize },
    /// Dedekind zeta from factor shapes alone.
    Direct,
}

#[derive(Clone, Debug)]
pub struct DirichletPrefix {
    bound: usize,
    coeffs: Vec<Option<CycloNumber>>,
    excluded: Vec<u64>,
    ambiguous: Vec<u64>,
    base: Base,
    primes_processed: usize,
}

impl DirichletPrefix {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `a_n` for `1 ≤ n ≤ bound`; `None` when `n` shares a prime with the
    /// excluded set.
    pub fn coefficient(&self, n: usize) -> Option<&CycloNumber> {
        self.coeffs.get(n).and_then(Option::as_ref)
    }

    /// Ramified primes of the context together with ambiguous primes.
    pub fn excluded(&self) -> &[u64] {
        &self.excluded
    }

    /// Unramified primes whose Frobenius class could not be pinned down.
    pub fn ambiguous(&self) -> &[u64] {
        &self.ambiguous
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn primes_processed(&self) -> usize {
        self.primes_processed
    }

    /// Indices `n ≤ bound` with a defined coefficient.
    pub fn defined_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.bound).filter(|&n| self.coeffs[n].is_some())
    }

    /// Text table with one `n: value` line per index; excluded indices read
    /// `n: excluded`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for n in 1..=self.bound {
            match &self.coeffs[n] {
                Some(v) => writeln!(out, "{n}: {v}").unwrap(),
                None => writeln!(out, "{n}: excluded").unwrap(),
            }
        }
        out
    }

    /// A copy truncated to `bound`.
    pub fn truncated(&self, bound: usize) -> Self {
        let bound = bound.min(self.bound);
        let mut t = self.clone();
        t.coeffs.truncate(bound + 1);
        t.bound = bound;
        t
    }
}

enum LocalOutcome {
    Excluded,
    Ambiguous,
    /// Coefficients of `p^0, p^1, ..` up to the largest power `≤ bound`.
    Series(Vec<CycloNumber>),
}

fn max_power(p: u64, bound: usize) -> usize {
    let mut k = 0;
    let mut q = 1u64;
    while q.saturating_mul(p) <= bound as u64 {
        q *= p;
        k += 1;
    }
    k
}

/// Multiplies `acc` by `s(X^f)`, truncated to `acc.len()` terms.
fn mul_substituted(acc: &[CycloNumber], s: &[CycloNumber], f: usize) -> Vec<CycloNumber> {
    let len = acc.len();
    let field = acc[0].field();
    let mut out: Vec<CycloNumber> = (0..len).map(|_| CycloNumber::zero(field)).collect();
    for (i, a) in acc.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in s.iter().enumerate() {
            let k = i + j * f;
            if k >= len {
                break;
            }
            if !b.is_zero() {
                out[k] = &out[k] + &(a * b);
            }
        }
    }
    out
}

/// Merges local series into a multiplicative coefficient array.
fn assemble(
    bound: usize,
    field: &Arc<CycloField>,
    primes: &[u64],
    outcomes: Vec<LocalOutcome>,
    mut excluded: Vec<u64>,
    base: Base,
) -> DirichletPrefix {
    let mut local: Vec<Option<Vec<CycloNumber>>> = alloc::vec![None; bound + 1];
    let mut ambiguous = Vec::new();
    for (&p, outcome) in primes.iter().zip(outcomes) {
        match outcome {
            LocalOutcome::Series(s) => local[p as usize] = Some(s),
            LocalOutcome::Excluded => excluded.push(p),
            LocalOutcome::Ambiguous => {
                ambiguous.push(p);
                excluded.push(p);
            }
        }
    }
    excluded.sort_unstable();
    excluded.dedup();

    let mut spf = alloc::vec![0usize; bound + 1];
    for &p in primes {
        let p = p as usize;
        let mut m = p;
        while m <= bound {
            if spf[m] == 0 {
                spf[m] = p;
            }
            m += p;
        }
    }
    let mut coeffs: Vec<Option<CycloNumber>> = alloc::vec![None; bound + 1];
    coeffs[1] = Some(CycloNumber::from_integer(field, 1));
    for n in 2..=bound {
        let p = spf[n];
        let (mut rest, mut k) = (n, 0);
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        coeffs[n] = match (&local[p], &coeffs[rest]) {
            (Some(series), Some(r)) => Some(&series[k] * r),
            _ => None,
        };
    }
    DirichletPrefix { bound, coeffs, excluded, ambiguous, base, primes_processed: primes.len() }
}

/// Prefix of the L-series of the character whose Euler factors are `table`,
/// over the fixed field of the splitter's subgroup.
pub fn relative_prefix(
    ctx: &SplittingFieldContext,
    splitter: &SubfieldSplitter,
    table: &EulerTable,
    method: SplitMethod,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<DirichletPrefix> {
    if bound < 1 {
        return Err(Error::BoundTooSmall);
    }
    if table.len() != splitter.subgroup.group.classes().len() {
        return Err(Error::GroupMismatch);
    }
    let group = ctx.group();
    let primes = prime_stream(2, bound as u64);
    let outcomes = map_primes(mapper, &primes, |p| -> Result<LocalOutcome> {
        let sigma = match ctx.frobenius_class(p)? {
            FrobeniusResolution::Ramified => return Ok(LocalOutcome::Excluded),
            FrobeniusResolution::Ambiguous(_) => return Ok(LocalOutcome::Ambiguous),
            FrobeniusResolution::Unique(c) => group.classes()[c].representative,
        };
        let primes_above = match method {
            SplitMethod::LeftCosets => splitter.split(group, sigma),
            SplitMethod::DoubleCosets => splitter.split_by_double_cosets(group, sigma),
        };
        let k = max_power(p, bound);
        let mut series: Vec<CycloNumber> = (0..=k).map(|_| CycloNumber::zero(&table.field)).collect();
        series[0] = CycloNumber::from_integer(&table.field, 1);
        for q in primes_above {
            if q.residue_degree > k {
                continue;
            }
            let inv = table.factor(q.frobenius_class).inverse_series(k / q.residue_degree + 1);
            series = mul_substituted(&series, &inv, q.residue_degree);
        }
        Ok(LocalOutcome::Series(series))
    });
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    let base = if splitter.index() == 1 { Base::Absolute } else { Base::Relative { index: splitter.index() } };
    Ok(assemble(bound, &table.field, &primes, outcomes, ctx.ramified_primes().to_vec(), base))
}

/// Prefix for a character `ψ` of `U` (given on `G.embed(U).group`), over `Fix(U)`.
pub fn prefix_for_character(
    ctx: &SplittingFieldContext,
    u: &Subgroup,
    psi: &ClassFunction,
    method: SplitMethod,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<DirichletPrefix> {
    let splitter = SubfieldSplitter::new(ctx.group(), u);
    let table = EulerTable::from_character(&splitter.subgroup.group, psi)?;
    relative_prefix(ctx, &splitter, &table, method, bound, mapper)
}

/// Prefix of `L(s, χ, L/ℚ)` for a character of the whole context group.
pub fn absolute_prefix(
    ctx: &SplittingFieldContext,
    chi: &ClassFunction,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<DirichletPrefix> {
    prefix_for_character(ctx, &ctx.group().whole(), chi, SplitMethod::LeftCosets, bound, mapper)
}

/// `V ⊴ U ≤ G` in a context together with a character of `U/V`: the data of
/// `L(s, χ, K/k)` with `k = Fix(U)`, `K = Fix(V)`.
#[derive(Clone, Debug)]
pub struct RelativeSetup {
    context: Arc<SplittingFieldContext>,
    u: EmbeddedSubgroup,
    v: Subgroup,
    quotient: QuotientGroup,
    chi: ClassFunction,
}

impl RelativeSetup {
    pub fn new(context: Arc<SplittingFieldContext>, u: Subgroup, v: Subgroup, chi: ClassFunction) -> Result<Self> {
        let quotient = context.group().quotient(&u, &v)?;
        if !chi.belongs_to(&quotient.group) {
            return Err(Error::GroupMismatch);
        }
        let u = context.group().embed(&u);
        Ok(RelativeSetup { context, u, v, quotient, chi })
    }

    pub fn context(&self) -> &Arc<SplittingFieldContext> {
        &self.context
    }

    pub fn u(&self) -> &Subgroup {
        &self.u.subgroup
    }

    pub fn embedded_u(&self) -> &EmbeddedSubgroup {
        &self.u
    }

    pub fn v(&self) -> &Subgroup {
        &self.v
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    pub fn chi(&self) -> &ClassFunction {
        &self.chi
    }

    /// Whether the base field is ℚ.
    pub fn is_absolute(&self) -> bool {
        self.u.subgroup.order() == self.context.group().order()
    }

    /// `χ̃ = χ ∘ (U → U/V)` as a class function of `U`.
    pub fn inflated(&self) -> Result<ClassFunction> {
        inflate(&self.u, &self.quotient, &self.chi)
    }
}

/// Prefix of `L(s, χ, K/k)`: `χ` is inflated to `U` and primes are split in
/// `k` through the left cosets of `U`.
pub fn artin_prefix(setup: &RelativeSetup, bound: usize, mapper: &dyn PrimeMapper) -> Result<DirichletPrefix> {
    let chi = setup.inflated()?;
    prefix_for_character(setup.context(), setup.u(), &chi, SplitMethod::LeftCosets, bound, mapper)
}

/// Dedekind zeta prefix of the field generated by a root of `g`, computed from
/// factor shapes modulo primes only.
pub fn dedekind_zeta_prefix_direct(
    g: &IntPolynomial,
    bound: usize,
    mapper: &dyn PrimeMapper,
) -> Result<DirichletPrefix> {
    if bound < 1 {
        return Err(Error::BoundTooSmall);
    }
    let field = CycloField::new(1);
    let ramified = g.ramified_primes();
    let primes = prime_stream(2, bound as u64);
    let outcomes = map_primes(mapper, &primes, |p| {
        if ramified.contains(&p) {
            return LocalOutcome::Excluded;
        }
        let degrees = match g.factor_shape(p) {
            FactorShape::Ramified => return LocalOutcome::Excluded,
            FactorShape::Degrees(d) => d,
        };
        let k = max_power(p, bound);
        let mut series: Vec<CycloNumber> = (0..=k).map(|_| CycloNumber::zero(&field)).collect();
        series[0] = CycloNumber::from_integer(&field, 1);
        let one: Vec<CycloNumber> = (0..=k).map(|_| CycloNumber::from_integer(&field, 1)).collect();
        for f in degrees {
            if f <= k {
                series = mul_substituted(&series, &one, f);
            }
        }
        LocalOutcome::Series(series)
    });
    Ok(assemble(bound, &field, &primes, outcomes, ramified, Base::Direct))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrefixComparison {
    /// Every index defined on both sides up to `bound` agrees.
    Equal { bound: usize, compared: usize },
    /// The least index where both sides are defined and disagree.
    Differ { index: usize, left: CycloNumber, right: CycloNumber },
    /// No index `n ≥ 2` is defined on both sides.
    IncomparableExclusions { bound: usize },
}

pub fn compare_prefixes(a: &DirichletPrefix, b: &DirichletPrefix) -> PrefixComparison {
    let bound = a.bound.min(b.bound);
    let mut compared = 0;
    for n in 1..=bound {
        if let (Some(x), Some(y)) = (&a.coeffs[n], &b.coeffs[n]) {
            if x != y {
                return PrefixComparison::Differ { index: n, left: x.clone(), right: y.clone() };
            }
            compared += 1;
        }
    }
    if bound >= 2 && compared <= 1 {
        return PrefixComparison::IncomparableExclusions { bound };
    }
    PrefixComparison::Equal { bound, compared }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::character::{character_table, induce};
    use crate::mapper::Sequential;
    use num_traits::{One, Zero};

    fn int(n: i64) -> CycloNumber {
        CycloNumber::from_integer(&CycloField::new(1), n)
    }

    fn ints(xs: &[i64]) -> Vec<CycloNumber> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn coeff(l: &DirichletPrefix, n: usize) -> Option<CycloNumber> {
        l.coefficient(n).cloned()
    }

    #[test]
    fn trivial_character_factor_is_one_minus_t() {
        let g = builtin::s3_group();
        let one = ClassFunction::trivial(&g);
        for c in 0..3 {
            assert_eq!(inverse_euler_factor(&g, &one, c).unwrap().coeffs(), &ints(&[1, -1])[..]);
        }
    }

    #[test]
    fn degree_two_factor_at_three_cycle() {
        let g = builtin::s3_group();
        let t = character_table(&g).unwrap();
        let chi = &t.irreducibles()[2];
        let three_cycle =
            g.class_of(g.index_of(&crate::group::Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()).unwrap());
        assert_eq!(inverse_euler_factor(&g, chi, three_cycle).unwrap().coeffs(), &ints(&[1, 1, 1])[..]);
        // transposition: eigenvalues 1, -1
        let transposition =
            g.class_of(g.index_of(&crate::group::Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap());
        assert_eq!(inverse_euler_factor(&g, chi, transposition).unwrap().coeffs(), &ints(&[1, 0, -1])[..]);
    }

    #[test]
    fn regular_factor_at_identity_is_binomial_power() {
        let g = builtin::s3_group();
        let reg = ClassFunction::regular(&g);
        assert_eq!(inverse_euler_factor(&g, &reg, 0).unwrap().coeffs(), &ints(&[1, -6, 15, -20, 15, -6, 1])[..]);
    }

    #[test]
    fn newton_tail_vanishes_beyond_degree() {
        for g in [builtin::s3_group(), builtin::affine_group(), builtin::cyclic_group(8)] {
            let t = character_table(&g).unwrap();
            for chi in t.irreducibles() {
                let d = chi.degree().unwrap() as usize;
                for c in 0..g.classes().len() {
                    let e = newton_coefficients(&g, chi, c, d + 2);
                    assert!(e[d + 1].is_zero() && e[d + 2].is_zero());
                    assert!(!e[d].is_zero());
                }
            }
        }
    }

    #[test]
    fn inverse_series_of_one_minus_t() {
        let f = InverseEulerFactor::from_coeffs(ints(&[1, -1]));
        assert_eq!(f.inverse_series(4), ints(&[1, 1, 1, 1]));
        let f = InverseEulerFactor::from_coeffs(ints(&[1, 1, 1]));
        assert_eq!(f.inverse_series(6), ints(&[1, -1, 0, 1, -1, 0]));
    }

    #[test]
    fn riemann_zeta_from_trivial_setup() {
        let ctx = builtin::s3_context();
        let g = ctx.group();
        let q = g.quotient(&g.whole(), &g.whole()).unwrap();
        let setup = RelativeSetup::new(ctx.clone(), g.whole(), g.whole(), ClassFunction::trivial(&q.group)).unwrap();
        let l = artin_prefix(&setup, 100, &Sequential).unwrap();
        for n in 1..=100 {
            if n % 2 == 0 || n % 3 == 0 {
                assert_eq!(l.coefficient(n), None);
            } else {
                assert_eq!(coeff(&l, n), Some(int(1)));
            }
        }
        assert_eq!(l.excluded(), &[2, 3]);
        assert_eq!(l.base(), &Base::Absolute);
    }

    #[test]
    fn closure_zeta_at_five() {
        // In the Galois closure of ℚ(∛2), 5 has residue degree 2: no prime of norm 5.
        let ctx = builtin::s3_context();
        let g = ctx.group();
        let one = g.trivial_subgroup();
        let q = g.quotient(&one, &one).unwrap();
        let setup = RelativeSetup::new(ctx.clone(), one.clone(), one, ClassFunction::trivial(&q.group)).unwrap();
        let l = artin_prefix(&setup, 200, &Sequential).unwrap();
        assert_eq!(coeff(&l, 5), Some(int(0)));
        assert_eq!(coeff(&l, 25), Some(int(3)));
        assert_eq!(coeff(&l, 7), Some(int(0)));
        assert_eq!(coeff(&l, 31), Some(int(6)));
        let direct = dedekind_zeta_prefix_direct(&builtin::s3_closure_polynomial(), 200, &Sequential).unwrap();
        assert!(matches!(compare_prefixes(&l, &direct), PrefixComparison::Equal { .. }));
    }

    #[test]
    fn direct_zeta_of_pure_cubic() {
        let l = dedekind_zeta_prefix_direct(&builtin::s3_polynomial(), 50, &Sequential).unwrap();
        assert_eq!(coeff(&l, 5), Some(int(1)));
        assert_eq!(coeff(&l, 7), Some(int(0)));
        assert_eq!(coeff(&l, 1), Some(int(1)));
        let linear = dedekind_zeta_prefix_direct(&IntPolynomial::from_i64(&[-1, 1]).unwrap(), 30, &Sequential).unwrap();
        assert!((1..=30).all(|n| coeff(&linear, n) == Some(int(1))));
    }

    #[test]
    fn trivial_versus_sign() {
        let ctx = builtin::s3_context();
        let g = ctx.group();
        let t = character_table(g).unwrap();
        let a = absolute_prefix(&ctx, &t.irreducibles()[0], 100, &Sequential).unwrap();
        let b = absolute_prefix(&ctx, &t.irreducibles()[1], 100, &Sequential).unwrap();
        assert_eq!(compare_prefixes(&a, &a), PrefixComparison::Equal { bound: 100, compared: 33 });
        assert_eq!(compare_prefixes(&a, &b), PrefixComparison::Differ { index: 5, left: int(1), right: int(-1) });
    }

    #[test]
    fn bound_one_and_zero() {
        let ctx = builtin::s3_context();
        let one = ClassFunction::trivial(ctx.group());
        let l = absolute_prefix(&ctx, &one, 1, &Sequential).unwrap();
        assert_eq!(l.to_table(), "1: 1\n");
        assert_eq!(compare_prefixes(&l, &l), PrefixComparison::Equal { bound: 1, compared: 1 });
        assert_eq!(absolute_prefix(&ctx, &one, 0, &Sequential).unwrap_err(), Error::BoundTooSmall);
    }

    #[test]
    fn incomparable_when_everything_is_excluded() {
        let ctx = builtin::s3_context();
        let one = ClassFunction::trivial(ctx.group());
        let l = absolute_prefix(&ctx, &one, 4, &Sequential).unwrap();
        assert_eq!(compare_prefixes(&l, &l), PrefixComparison::IncomparableExclusions { bound: 4 });
    }

    #[test]
    fn permutation_character_gives_the_subfield_zeta() {
        let ctx = builtin::s3_context();
        let g = ctx.group();
        let h = builtin::s3_point_stabilizer(g);
        let via_perm = absolute_prefix(&ctx, &ClassFunction::permutation_character(g, &h), 500, &Sequential).unwrap();
        let emb = g.embed(&h);
        let via_sub = prefix_for_character(
            &ctx,
            &h,
            &ClassFunction::trivial(&emb.group),
            SplitMethod::LeftCosets,
            500,
            &Sequential,
        )
        .unwrap();
        let direct = dedekind_zeta_prefix_direct(ctx.poly(), 500, &Sequential).unwrap();
        assert!(matches!(compare_prefixes(&via_perm, &direct), PrefixComparison::Equal { .. }));
        assert!(matches!(compare_prefixes(&via_sub, &direct), PrefixComparison::Equal { .. }));
        let induced = induce(g, &emb, &ClassFunction::trivial(&emb.group)).unwrap();
        assert_eq!(induced, ClassFunction::permutation_character(g, &h));
    }

    #[test]
    fn split_methods_agree() {
        let ctx = builtin::octic_context();
        let g = ctx.group();
        let u = builtin::octic_u(g);
        let emb = g.embed(&u);
        let t = character_table(&emb.group).unwrap();
        for chi in t.irreducibles() {
            let a = prefix_for_character(&ctx, &u, chi, SplitMethod::LeftCosets, 300, &Sequential).unwrap();
            let b = prefix_for_character(&ctx, &u, chi, SplitMethod::DoubleCosets, 300, &Sequential).unwrap();
            assert!(matches!(compare_prefixes(&a, &b), PrefixComparison::Equal { .. }));
        }
    }

    #[test]
    fn multiplicativity_on_coprime_pairs() {
        let ctx = builtin::octic_context();
        let t = character_table(ctx.group()).unwrap();
        let chi = t.irreducibles().last().unwrap();
        let l = absolute_prefix(&ctx, chi, 2000, &Sequential).unwrap();
        let mut checked = 0;
        for m in 2..1000usize {
            for n in (m + 1)..1000 {
                if num_integer::gcd(m, n) == 1 && m * n <= 2000 {
                    if let (Some(a), Some(b), Some(c)) = (l.coefficient(m), l.coefficient(n), l.coefficient(m * n)) {
                        assert_eq!(&(a * b), c);
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 100, "{checked}");
    }

    #[test]
    fn ambiguous_primes_are_excluded() {
        // Without the marker, x^8 - 3 has primes whose shape fits two classes.
        let ctx = crate::galois::build_context(
            builtin::octic_polynomial(),
            &builtin::affine_generators(),
            None,
            100,
            &Sequential,
        )
        .unwrap();
        let one = ClassFunction::trivial(ctx.group());
        let l = absolute_prefix(&ctx, &one, 500, &Sequential).unwrap();
        assert!(!l.ambiguous().is_empty());
        for &p in l.ambiguous() {
            assert!(l.excluded().contains(&p));
            assert_eq!(l.coefficient(p as usize), None);
        }
    }

    #[test]
    fn table_lists_exclusions() {
        let l = dedekind_zeta_prefix_direct(&builtin::s3_polynomial(), 6, &Sequential).unwrap();
        assert_eq!(l.to_table(), "1: 1\n2: excluded\n3: excluded\n4: excluded\n5: 1\n6: excluded\n");
        assert!(BigRational::one() > BigRational::zero());
    }
}
