//! The two worked examples shipped with the library: `x^3 - 2` with its
//! symmetric Galois group, and `x^8 - 3` with the affine group of order 32
//! together with its arithmetically equivalent partner `x^8 - 48`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Result;
use crate::galois::{build_context, SplittingFieldContext, DEFAULT_VALIDATION_BOUND};
use crate::group::{Permutation, PermutationGroup, Subgroup, DEFAULT_ENUMERATION_CAP};
use crate::mapper::{PrimeMapper, Sequential};
use crate::poly::IntPolynomial;

pub fn s3_generators() -> Vec<Permutation> {
    alloc::vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap(), Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),]
}

pub fn s3_group() -> PermutationGroup {
    PermutationGroup::enumerate(3, &s3_generators(), DEFAULT_ENUMERATION_CAP).unwrap()
}

/// The rotation subgroup of order 3.
pub fn s3_a3(g: &PermutationGroup) -> Subgroup {
    g.subgroup_generated_by(&[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap()
}

/// Stabilizer of the root with index 0.
pub fn s3_point_stabilizer(g: &PermutationGroup) -> Subgroup {
    g.subgroup_generated_by(&[Permutation::from_cycles(3, &[&[1, 2]]).unwrap()]).unwrap()
}

pub fn cyclic_group(n: usize) -> PermutationGroup {
    let gens: Vec<Permutation> =
        if n > 1 { alloc::vec![Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap()] } else { Vec::new() };
    PermutationGroup::enumerate(n.max(1), &gens, DEFAULT_ENUMERATION_CAP).unwrap()
}

/// The map `i ↦ b·i + a (mod 8)`.
pub fn affine(a: usize, b: usize) -> Permutation {
    Permutation::new((0..8).map(|i| (b * i + a) % 8).collect()).unwrap()
}

pub fn affine_generators() -> Vec<Permutation> {
    alloc::vec![affine(1, 1), affine(0, 3), affine(0, 5)]
}

pub fn affine_group() -> PermutationGroup {
    PermutationGroup::enumerate(8, &affine_generators(), DEFAULT_ENUMERATION_CAP).unwrap()
}

fn affine_subgroup(g: &PermutationGroup, pairs: &[(usize, usize)]) -> Subgroup {
    let elements: Vec<Permutation> = pairs.iter().map(|&(a, b)| affine(a, b)).collect();
    g.subgroup_from_elements(&elements).unwrap()
}

/// `{(a, b) : a ∈ {0, 4}}`, fixing `⁴√3`.
pub fn octic_u(g: &PermutationGroup) -> Subgroup {
    let pairs: Vec<(usize, usize)> =
        [0, 4].iter().flat_map(|&a| [1, 3, 5, 7].into_iter().map(move |b| (a, b))).collect();
    affine_subgroup(g, &pairs)
}

/// `{(0, b)}`, fixing `⁸√3`.
pub fn octic_v1(g: &PermutationGroup) -> Subgroup {
    affine_subgroup(g, &[(0, 1), (0, 3), (0, 5), (0, 7)])
}

/// `{(0,1), (0,7), (4,3), (4,5)}`, fixing `⁸√48`.
pub fn octic_v2(g: &PermutationGroup) -> Subgroup {
    affine_subgroup(g, &[(0, 1), (0, 7), (4, 3), (4, 5)])
}

/// Generators of the Galois group of `x^8 - 48` in the root labelling
/// `β_j = ζ_8^j ⁸√48`; the images of `ζ_8` are `1, 3, 5`.
pub fn octic48_generators() -> Vec<Permutation> {
    let map = |a: usize, b: usize| Permutation::new((0..8).map(|j| (b * j + a) % 8).collect()).unwrap();
    alloc::vec![map(1, 1), map(4, 3), map(4, 5)]
}

pub fn s3_polynomial() -> IntPolynomial {
    IntPolynomial::binomial(3, -2)
}

/// `x^3 - 3`, a cubic with the same Galois group but a different field.
pub fn cubic3_polynomial() -> IntPolynomial {
    IntPolynomial::binomial(3, -3)
}

/// `x^6 + 108`, whose root `∛2 · √-3` generates the Galois closure of `ℚ(∛2)`.
pub fn s3_closure_polynomial() -> IntPolynomial {
    IntPolynomial::binomial(6, 108)
}

pub fn octic_polynomial() -> IntPolynomial {
    IntPolynomial::binomial(8, -3)
}

pub fn octic48_polynomial() -> IntPolynomial {
    IntPolynomial::binomial(8, -48)
}

pub fn s3_context_with(validation_bound: u64, mapper: &dyn PrimeMapper) -> Result<Arc<SplittingFieldContext>> {
    build_context(s3_polynomial(), &s3_generators(), None, validation_bound, mapper).map(Arc::new)
}

pub fn cubic3_context_with(validation_bound: u64, mapper: &dyn PrimeMapper) -> Result<Arc<SplittingFieldContext>> {
    build_context(cubic3_polynomial(), &s3_generators(), None, validation_bound, mapper).map(Arc::new)
}

pub fn octic_context_with(validation_bound: u64, mapper: &dyn PrimeMapper) -> Result<Arc<SplittingFieldContext>> {
    build_context(octic_polynomial(), &affine_generators(), Some((8, alloc::vec![1, 3, 5])), validation_bound, mapper)
        .map(Arc::new)
}

pub fn octic48_context_with(validation_bound: u64, mapper: &dyn PrimeMapper) -> Result<Arc<SplittingFieldContext>> {
    build_context(
        octic48_polynomial(),
        &octic48_generators(),
        Some((8, alloc::vec![1, 3, 5])),
        validation_bound,
        mapper,
    )
    .map(Arc::new)
}

pub fn s3_context() -> Arc<SplittingFieldContext> {
    s3_context_with(DEFAULT_VALIDATION_BOUND, &Sequential).expect("built-in context is valid")
}

pub fn cubic3_context() -> Arc<SplittingFieldContext> {
    cubic3_context_with(DEFAULT_VALIDATION_BOUND, &Sequential).expect("built-in context is valid")
}

pub fn octic_context() -> Arc<SplittingFieldContext> {
    octic_context_with(DEFAULT_VALIDATION_BOUND, &Sequential).expect("built-in context is valid")
}

pub fn octic48_context() -> Arc<SplittingFieldContext> {
    octic48_context_with(DEFAULT_VALIDATION_BOUND, &Sequential).expect("built-in context is valid")
}
