//! Class functions, characters and the operations relating characters of
//! subgroups and quotients to characters of the ambient group.

mod dixon;

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::group::{EmbeddedSubgroup, GroupHom, PermutationGroup, QuotientGroup, Subgroup};

pub use dixon::{character_table, CharacterTable};

/// A function constant on conjugacy classes, one value per class in the
/// group's deterministic class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    signature: u64,
    field: Arc<CycloField>,
    values: Vec<CycloNumber>,
}

/// Equality is by group and values; the ambient cyclotomic field is ignored.
impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    /// Values are coerced into one field whose order is the lcm of the
    /// group exponent and the orders of the given values.
    pub fn new(group: &PermutationGroup, values: Vec<CycloNumber>) -> Result<Self> {
        if values.len() != group.classes().len() {
            return Err(Error::InvalidInput(alloc::format!(
                "class function needs {} values, got {}",
                group.classes().len(),
                values.len()
            )));
        }
        let order = values.iter().map(CycloNumber::order).fold(group.exponent() as u32, num_integer::lcm);
        let field = CycloField::new(order);
        let values = values.iter().map(|v| v.coerce(&field)).collect();
        Ok(ClassFunction { signature: group.signature(), field, values })
    }

    fn from_parts(group: &PermutationGroup, field: Arc<CycloField>, values: Vec<CycloNumber>) -> Self {
        ClassFunction { signature: group.signature(), field, values }
    }

    pub fn trivial(group: &PermutationGroup) -> Self {
        let field = CycloField::new(group.exponent() as u32);
        let values = (0..group.classes().len()).map(|_| CycloNumber::from_integer(&field, 1)).collect();
        Self::from_parts(group, field, values)
    }

    /// `Reg_G`: `|G|` at the identity, zero elsewhere.
    pub fn regular(group: &PermutationGroup) -> Self {
        let field = CycloField::new(group.exponent() as u32);
        let values = (0..group.classes().len())
            .map(|c| CycloNumber::from_integer(&field, if c == 0 { group.order() as i64 } else { 0 }))
            .collect();
        Self::from_parts(group, field, values)
    }

    /// `1_H^G`, evaluated as the number of left cosets `τH` fixed by `g`.
    pub fn permutation_character(group: &PermutationGroup, h: &Subgroup) -> Self {
        let field = CycloField::new(group.exponent() as u32);
        let (cosets, coset_of) = group.left_cosets(h);
        let values = group
            .classes()
            .iter()
            .map(|c| {
                let g = c.representative;
                let fixed = cosets.iter().filter(|cs| coset_of[group.mul(g, cs[0])] == coset_of[cs[0]]).count();
                CycloNumber::from_integer(&field, fixed as i64)
            })
            .collect();
        Self::from_parts(group, field, values)
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycloNumber {
        &self.values[class]
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn belongs_to(&self, group: &PermutationGroup) -> bool {
        self.signature == group.signature() && self.values.len() == group.classes().len()
    }

    fn check(&self, group: &PermutationGroup) -> Result<()> {
        if self.belongs_to(group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// The value at the identity class.
    pub fn degree_value(&self) -> &CycloNumber {
        &self.values[0]
    }

    /// The degree as a positive integer, or `NotACharacter`.
    pub fn degree(&self) -> Result<u64> {
        match self.values[0].as_integer() {
            Some(d) if d.is_positive() => u64::try_from(d).map_err(|_| Error::NotACharacter),
            _ => Err(Error::NotACharacter),
        }
    }

    pub fn value_at(&self, group: &PermutationGroup, element: usize) -> &CycloNumber {
        &self.values[group.class_of(element)]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.signature != other.signature || self.values.len() != other.values.len() {
            return Err(Error::GroupMismatch);
        }
        let values: Vec<CycloNumber> = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        let field = values[0].field().clone();
        Ok(ClassFunction { signature: self.signature, field, values })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ClassFunction {
            signature: self.signature,
            field: self.field.clone(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Replaces one class value; used to build deliberately corrupted inputs.
    pub fn with_value(&self, class: usize, value: CycloNumber) -> Self {
        let mut values = self.values.clone();
        values[class] = value.coerce(&self.field);
        ClassFunction { signature: self.signature, field: self.field.clone(), values }
    }

    /// Complex conjugate class function.
    pub fn conj(&self) -> Self {
        ClassFunction {
            signature: self.signature,
            field: self.field.clone(),
            values: self.values.iter().map(CycloNumber::conj).collect(),
        }
    }
}

fn rational(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `(1/|G|) Σ_g χ(g) conj(ψ(g))`.
pub fn inner_product(group: &PermutationGroup, chi: &ClassFunction, psi: &ClassFunction) -> Result<CycloNumber> {
    chi.check(group)?;
    psi.check(group)?;
    let mut acc = CycloNumber::zero(&chi.field);
    for (c, class) in group.classes().iter().enumerate() {
        let term = &chi.values[c] * &psi.values[c].conj();
        acc = &acc + &term.scale(&rational(class.size()));
    }
    Ok(acc.scale(&(BigRational::one() / rational(group.order()))))
}

/// Induction from `H` (embedded in `G`) by class sums:
/// `χ^G(g) = |G| / (|H| |g^G|) Σ_{d ⊆ g^G} |d| χ(d)` over `H`-classes `d`.
pub fn induce(group: &PermutationGroup, h: &EmbeddedSubgroup, chi: &ClassFunction) -> Result<ClassFunction> {
    chi.check(&h.group)?;
    let order = num_integer::lcm(group.exponent() as u32, chi.field.order());
    let field = CycloField::new(order);
    let mut sums: Vec<CycloNumber> = (0..group.classes().len()).map(|_| CycloNumber::zero(&field)).collect();
    for (d, hc) in h.group.classes().iter().enumerate() {
        let gc = group.class_of(h.to_parent(hc.representative));
        sums[gc] = &sums[gc] + &chi.values[d].scale(&rational(hc.size()));
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| {
            let factor = BigRational::new(
                BigInt::from(group.order()),
                BigInt::from(h.group.order() * group.classes()[c].size()),
            );
            s.scale(&factor).coerce(&field)
        })
        .collect();
    Ok(ClassFunction::from_parts(group, field, values))
}

/// Restriction of a class function of `G` to the embedded subgroup `H`.
pub fn restrict(group: &PermutationGroup, h: &EmbeddedSubgroup, chi: &ClassFunction) -> Result<ClassFunction> {
    chi.check(group)?;
    let values = h.group.classes().iter().map(|c| chi.value_at(group, h.to_parent(c.representative)).clone()).collect();
    Ok(ClassFunction::from_parts(&h.group, chi.field.clone(), values))
}

/// Inflation `χ̃(u) = χ(uV)` from `U/V` to `U`.
pub fn inflate(u: &EmbeddedSubgroup, q: &QuotientGroup, chi: &ClassFunction) -> Result<ClassFunction> {
    chi.check(&q.group)?;
    if u.subgroup != q.numerator {
        return Err(Error::GroupMismatch);
    }
    let values = u
        .group
        .classes()
        .iter()
        .map(|c| {
            let image = q.project(u.to_parent(c.representative)).expect("element of the numerator");
            chi.value_at(&q.group, image).clone()
        })
        .collect();
    Ok(ClassFunction::from_parts(&u.group, chi.field.clone(), values))
}

/// The inverse of inflation: a class function of `U` constant on cosets of
/// `V` viewed on `U/V`. Fails if `ψ` is not constant on cosets.
pub fn deflate(u: &EmbeddedSubgroup, q: &QuotientGroup, psi: &ClassFunction) -> Result<ClassFunction> {
    psi.check(&u.group)?;
    if u.subgroup != q.numerator {
        return Err(Error::GroupMismatch);
    }
    let values: Vec<CycloNumber> = q
        .group
        .classes()
        .iter()
        .map(|c| {
            let lifted = q.lift(c.representative);
            psi.value_at(&u.group, u.from_parent(lifted).expect("lift lies in U")).clone()
        })
        .collect();
    let chi = ClassFunction::from_parts(&q.group, psi.field.clone(), values);
    for local in 0..u.group.order() {
        let image = q.project(u.to_parent(local)).expect("element of the numerator");
        if psi.value_at(&u.group, local) != chi.value_at(&q.group, image) {
            return Err(Error::InvalidInput("class function is not constant on cosets of V".into()));
        }
    }
    Ok(chi)
}

/// `χ ∘ hom` for a homomorphism `source → target`.
pub fn pull_back(
    source: &PermutationGroup,
    target: &PermutationGroup,
    hom: &GroupHom,
    chi: &ClassFunction,
) -> Result<ClassFunction> {
    chi.check(target)?;
    let values = source.classes().iter().map(|c| chi.value_at(target, hom.apply(c.representative)).clone()).collect();
    Ok(ClassFunction::from_parts(source, chi.field.clone(), values))
}

/// `{g : χ(g) = χ(1)}`, checked to be a normal subgroup.
pub fn kernel(group: &PermutationGroup, chi: &ClassFunction) -> Result<Subgroup> {
    chi.check(group)?;
    chi.degree()?;
    let deg = chi.degree_value();
    let members: Vec<usize> = (0..group.order()).filter(|&g| chi.value_at(group, g) == deg).collect();
    let k = group.subgroup_from_indices(members).map_err(|_| Error::NotACharacter)?;
    if !group.is_normal(&k) {
        return Err(Error::NotACharacter);
    }
    Ok(k)
}

pub fn is_faithful(group: &PermutationGroup, chi: &ClassFunction) -> Result<bool> {
    Ok(kernel(group, chi)?.is_trivial())
}

/// Whether `chi` is a character: every multiplicity against the irreducible
/// table is a non-negative integer, and not all are zero.
pub fn is_character(group: &PermutationGroup, table: &CharacterTable, chi: &ClassFunction) -> Result<bool> {
    let mut any = false;
    for irr in table.irreducibles() {
        let m = inner_product(group, chi, irr)?;
        match m.as_rational() {
            Some(q) if q.is_integer() && !q.is_negative() => any |= !q.is_zero(),
            _ => return Ok(false),
        }
    }
    Ok(any)
}

/// Validates a character supplied by value; with `claim_irreducible`,
/// additionally requires `⟨χ, χ⟩ = 1`.
pub fn validate_character(
    group: &PermutationGroup,
    table: &CharacterTable,
    chi: &ClassFunction,
    claim_irreducible: bool,
) -> Result<()> {
    if !is_character(group, table, chi)? {
        return Err(Error::NotACharacter);
    }
    if claim_irreducible {
        let n = inner_product(group, chi, chi)?;
        if n.as_rational() != Some(BigRational::one()) {
            return Err(Error::InvalidInput("character claimed irreducible has norm ≠ 1".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn int(field: &Arc<CycloField>, n: i64) -> CycloNumber {
        CycloNumber::from_integer(field, n)
    }

    #[test]
    fn s3_inner_products() {
        let g = builtin::s3_group();
        let t = character_table(&g).unwrap();
        let triv = ClassFunction::trivial(&g);
        let f = triv.field().clone();
        assert_eq!(inner_product(&g, &triv, &triv).unwrap(), int(&f, 1));
        let deg2 = &t.irreducibles()[2];
        assert!(inner_product(&g, deg2, &triv).unwrap().is_zero());
        let reg = ClassFunction::regular(&g);
        for chi in t.irreducibles() {
            assert_eq!(&inner_product(&g, &reg, chi).unwrap(), chi.degree_value());
        }
    }

    #[test]
    fn induce_from_a3() {
        let g = builtin::s3_group();
        let a3 = g.embed(&g.generate(&[g.classes()[2].representative]));
        let ind = induce(&g, &a3, &ClassFunction::trivial(&a3.group)).unwrap();
        let f = ind.field().clone();
        assert_eq!(ind.values(), &[int(&f, 2), int(&f, 0), int(&f, 2)]);
        // From the whole group induction is the identity.
        let whole = g.embed(&g.whole());
        let t = character_table(&g).unwrap();
        for chi in t.irreducibles() {
            let moved = ClassFunction::new(&whole.group, chi.values().to_vec()).unwrap();
            let back = induce(&g, &whole, &moved).unwrap();
            assert_eq!(back.values(), chi.values());
        }
    }

    #[test]
    fn nontrivial_c3_characters_induce_to_the_same_irreducible() {
        let g = builtin::s3_group();
        let a3 = g.embed(&g.generate(&[g.classes()[2].representative]));
        let t3 = character_table(&a3.group).unwrap();
        let s3t = character_table(&g).unwrap();
        let chi2 = induce(&g, &a3, &t3.irreducibles()[1]).unwrap();
        let chi3 = induce(&g, &a3, &t3.irreducibles()[2]).unwrap();
        assert_ne!(t3.irreducibles()[1], t3.irreducibles()[2]);
        assert_eq!(chi2, chi3);
        assert_eq!(chi2.values(), s3t.irreducibles()[2].values());
    }

    #[test]
    fn kernels_and_faithfulness() {
        let g = builtin::s3_group();
        let t = character_table(&g).unwrap();
        assert!(kernel(&g, &ClassFunction::regular(&g)).unwrap().is_trivial());
        assert_eq!(kernel(&g, &ClassFunction::trivial(&g)).unwrap(), g.whole());
        let sign = &t.irreducibles()[1];
        assert_eq!(kernel(&g, sign).unwrap().order(), 3);
        assert!(is_faithful(&g, &t.irreducibles()[2]).unwrap());
        assert!(!is_faithful(&g, &ClassFunction::trivial(&g)).unwrap());
        assert!(is_faithful(&g, &ClassFunction::regular(&g)).unwrap());
        let zero = ClassFunction::trivial(&g).scale(&BigRational::zero());
        assert_eq!(kernel(&g, &zero), Err(Error::NotACharacter));
    }

    #[test]
    fn inflation_from_order_two_quotient() {
        let g = builtin::s3_group();
        let a3 = g.generate(&[g.classes()[2].representative]);
        let q = g.quotient(&g.whole(), &a3).unwrap();
        let whole = g.embed(&g.whole());
        let qt = character_table(&q.group).unwrap();
        let triv = inflate(&whole, &q, &qt.irreducibles()[0]).unwrap();
        assert_eq!(triv.values(), ClassFunction::trivial(&whole.group).values());
        let sign = inflate(&whole, &q, &qt.irreducibles()[1]).unwrap();
        assert_eq!(kernel(&whole.group, &sign).unwrap(), a3);
        assert_eq!(deflate(&whole, &q, &sign).unwrap(), qt.irreducibles()[1]);
        // A character that is not constant on A3-cosets cannot be deflated.
        let deg2 =
            ClassFunction::new(&whole.group, character_table(&g).unwrap().irreducibles()[2].values().to_vec()).unwrap();
        assert!(deflate(&whole, &q, &deg2).is_err());
    }

    #[test]
    fn octic_inflation_kernel_is_v1() {
        let g = builtin::affine_group();
        let u = builtin::octic_u(&g);
        let v1 = builtin::octic_v1(&g);
        let ue = g.embed(&u);
        let q = g.quotient(&u, &v1).unwrap();
        let qt = character_table(&q.group).unwrap();
        let infl = inflate(&ue, &q, &qt.irreducibles()[1]).unwrap();
        let k = kernel(&ue.group, &infl).unwrap();
        let k_parent: Vec<usize> = k.elements().iter().map(|&x| ue.to_parent(x)).collect();
        assert_eq!(k_parent, v1.elements());
    }

    #[test]
    fn permutation_characters() {
        let g = builtin::affine_group();
        let v1 = builtin::octic_v1(&g);
        let v2 = builtin::octic_v2(&g);
        let p1 = ClassFunction::permutation_character(&g, &v1);
        let p2 = ClassFunction::permutation_character(&g, &v2);
        assert_eq!(p1.degree().unwrap(), 8);
        assert_eq!(p1, p2);
        // cross-check against induction of the trivial character
        let ind = induce(&g, &g.embed(&v1), &ClassFunction::trivial(&g.embed(&v1).group)).unwrap();
        assert_eq!(ind, p1);
        let s3 = builtin::s3_group();
        assert_eq!(
            ClassFunction::regular(&s3).values(),
            &[int(&CycloField::new(6), 6), int(&CycloField::new(6), 0), int(&CycloField::new(6), 0)]
        );
    }

    #[test]
    fn validation_of_supplied_characters() {
        let g = builtin::s3_group();
        let t = character_table(&g).unwrap();
        let reg = ClassFunction::regular(&g);
        assert!(validate_character(&g, &t, &reg, false).is_ok());
        assert!(validate_character(&g, &t, &reg, true).is_err());
        let half = reg.scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(validate_character(&g, &t, &half, false), Err(Error::NotACharacter));
        let other = builtin::affine_group();
        assert_eq!(inner_product(&other, &reg, &reg).unwrap_err(), Error::GroupMismatch);
    }
}
