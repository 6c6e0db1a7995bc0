//! Explicitly enumerated permutation groups.
//!
//! Every group keeps its full element list sorted lexicographically by image
//! array, so element indices, class indices and witnesses are reproducible.
//! Subgroups are sorted index sets into their parent.

mod automorphism;
mod perm;
mod quotient;
mod subgroups;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use automorphism::{GroupAutomorphism, GroupHom, DEFAULT_AUTOMORPHISM_BOUND};
pub use perm::Permutation;
pub use quotient::QuotientGroup;
pub use subgroups::DEFAULT_SUBGROUP_CAP;

/// Default cap on the number of elements produced by [`PermutationGroup::enumerate`].
pub const DEFAULT_ENUMERATION_CAP: usize = 20_000;

/// Groups up to this order get a precomputed multiplication table.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Index of the smallest member.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub cycle_type: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A subgroup, given as a sorted list of parent element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    fn from_sorted(elements: Vec<usize>) -> Self {
        Subgroup { elements }
    }
}

/// A subgroup realized as a permutation group in its own right.
///
/// Because both lists are sorted by image array, position `i` in
/// `group.elements()` is parent element `to_parent[i]`.
#[derive(Clone, Debug)]
pub struct EmbeddedSubgroup {
    pub subgroup: Subgroup,
    pub group: PermutationGroup,
}

impl EmbeddedSubgroup {
    pub fn to_parent(&self, local: usize) -> usize {
        self.subgroup.elements[local]
    }

    pub fn from_parent(&self, parent: usize) -> Option<usize> {
        self.subgroup.elements.binary_search(&parent).ok()
    }
}

#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    signature: u64,
}

impl PermutationGroup {
    /// Closure of `generators` under composition.
    pub fn enumerate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidInput("enumeration cap must be at least 1".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { what: "group enumeration", cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_sorted_elements(degree, generators.to_vec(), seen.into_iter().collect()))
    }

    /// Builds the group structure from an already closed, sorted element list.
    fn from_sorted_elements(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let n = elements.len();
        let index: BTreeMap<Permutation, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)] as u32);
                }
            }
            t
        });
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        let mut signature: u64 = 0xcbf2_9ce4_8422_2325;
        for p in &elements {
            for &i in p.images() {
                signature ^= i as u64 + 1;
                signature = signature.wrapping_mul(0x100_0000_01b3);
            }
        }
        let mut group = PermutationGroup {
            degree,
            generators,
            elements,
            index,
            table,
            inverses,
            orders,
            classes: Vec::new(),
            class_of: Vec::new(),
            signature,
        };
        group.compute_classes();
        group
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g]).collect();
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut members = alloc::vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &gens {
                    let y = self.mul(self.mul(g, x), self.inverses[g]);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }
        raw.sort_by_key(|members| members[0]);
        let mut classes = Vec::with_capacity(raw.len());
        for (id, members) in raw.into_iter().enumerate() {
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(ConjugacyClass {
                representative: members[0],
                cycle_type: self.elements[members[0]].cycle_type(),
                members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The identity is the lexicographically smallest permutation.
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a] as u64;
        let mut r = self.identity();
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().copied().fold(1, num_integer::lcm)
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class containing `rep^k`, for any representative of class `class`.
    pub fn power_class(&self, class: usize, k: u64) -> usize {
        self.class_of[self.pow(self.classes[class].representative, k)]
    }

    /// Class index of `g⁻¹`'s class for a representative `g` of `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.class_of[self.inverses[self.classes[class].representative]]
    }

    /// Fingerprint of the element set, used to detect class functions of
    /// different groups being mixed.
    pub fn signature(&self) -> u64 {
        self.signature
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn is_transitive(&self) -> bool {
        let mut reached = alloc::vec![false; self.degree];
        reached[0] = true;
        for p in &self.elements {
            reached[p.apply(0)] = true;
        }
        reached.into_iter().all(|r| r)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(alloc::vec![self.identity()])
    }

    /// The subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut seen = alloc::vec![false; self.order()];
        let mut list = alloc::vec![self.identity()];
        seen[self.identity()] = true;
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        list.sort_unstable();
        Subgroup::from_sorted(list)
    }

    /// The subgroup generated by permutations (which must lie in the group).
    pub fn subgroup_generated_by(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens.iter().map(|p| self.index_of(p).ok_or(Error::NotSubgroup)).collect::<Result<Vec<_>>>()?;
        Ok(self.generate(&idx))
    }

    /// Validates an explicit element list as a subgroup.
    pub fn subgroup_from_elements(&self, elements: &[Permutation]) -> Result<Subgroup> {
        let mut idx =
            elements.iter().map(|p| self.index_of(p).ok_or(Error::NotSubgroup)).collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        self.subgroup_from_indices(idx)
    }

    pub fn subgroup_from_indices(&self, mut idx: Vec<usize>) -> Result<Subgroup> {
        idx.sort_unstable();
        idx.dedup();
        if idx.binary_search(&self.identity()).is_err() {
            return Err(Error::NotSubgroup);
        }
        for &a in &idx {
            for &b in &idx {
                if idx.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        Ok(Subgroup::from_sorted(idx))
    }

    /// A small generating set, chosen greedily with high-order elements first.
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut candidates: Vec<usize> = h.elements.clone();
        candidates.sort_by(|&a, &b| self.orders[b].cmp(&self.orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for c in candidates {
            if current.order() == h.order() {
                break;
            }
            if !current.contains(c) {
                gens.push(c);
                current = self.generate(&gens);
            }
        }
        gens
    }

    /// `g H g⁻¹`.
    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut e: Vec<usize> = h.elements.iter().map(|&x| self.conjugate(g, x)).collect();
        e.sort_unstable();
        Subgroup::from_sorted(e)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|g| {
            let gi = self.index[g];
            h.elements.iter().all(|&x| h.contains(self.conjugate(gi, x)))
        })
    }

    /// Whether `v` is normal in the subgroup `u` (both subgroups of `self`).
    pub fn is_normal_in(&self, v: &Subgroup, u: &Subgroup) -> bool {
        v.is_subset_of(u) && u.elements.iter().all(|&g| v.elements.iter().all(|&x| v.contains(self.conjugate(g, x))))
    }

    /// Intersection of all conjugates `gHg⁻¹`: the largest normal subgroup inside `H`.
    pub fn normal_core(&self, h: &Subgroup) -> Subgroup {
        let mut core: Vec<usize> = h.elements.clone();
        for g in 0..self.order() {
            let conj = self.conjugate_subgroup(g, h);
            core.retain(|x| conj.contains(*x));
        }
        Subgroup::from_sorted(core)
    }

    /// A conjugator `g` with `g H1 g⁻¹ = H2`, smallest index first.
    pub fn are_conjugate(&self, h1: &Subgroup, h2: &Subgroup) -> Option<usize> {
        if h1.order() != h2.order() {
            return None;
        }
        (0..self.order()).find(|&g| self.conjugate_subgroup(g, h1) == *h2)
    }

    pub fn embed(&self, h: &Subgroup) -> EmbeddedSubgroup {
        let gens: Vec<Permutation> =
            self.small_generating_set(h).into_iter().map(|i| self.elements[i].clone()).collect();
        let elements = h.elements.iter().map(|&i| self.elements[i].clone()).collect();
        EmbeddedSubgroup {
            subgroup: h.clone(),
            group: PermutationGroup::from_sorted_elements(self.degree, gens, elements),
        }
    }

    /// Left cosets `τH`, each listed as sorted element indices, ordered by smallest member.
    pub fn left_cosets(&self, h: &Subgroup) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut coset_of = alloc::vec![usize::MAX; self.order()];
        let mut cosets = Vec::new();
        for t in 0..self.order() {
            if coset_of[t] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = h.elements.iter().map(|&x| self.mul(t, x)).collect();
            members.sort_unstable();
            for &m in &members {
                coset_of[m] = cosets.len();
            }
            cosets.push(members);
        }
        (cosets, coset_of)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use alloc::vec;

    fn affine_element(g: &PermutationGroup, a: usize, b: usize) -> usize {
        g.index_of(&builtin::affine(a, b)).unwrap()
    }

    #[test]
    fn s3_basics() {
        let g = builtin::s3_group();
        assert_eq!(g.order(), 6);
        let sizes: Vec<usize> = g.classes().iter().map(ConjugacyClass::size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(g.classes()[1].cycle_type, vec![1, 2]);
        assert_eq!(g.classes()[2].cycle_type, vec![3]);
        assert_eq!(g.exponent(), 6);
        assert!(g.is_transitive());
    }

    #[test]
    fn trivial_generators() {
        let g = PermutationGroup::enumerate(5, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classes().len(), 1);
    }

    #[test]
    fn enumeration_errors() {
        let gens = builtin::affine_generators();
        assert_eq!(
            PermutationGroup::enumerate(8, &gens, 31).unwrap_err(),
            Error::CapExceeded { what: "group enumeration", cap: 31 }
        );
        let odd = Permutation::identity(3);
        assert!(matches!(
            PermutationGroup::enumerate(8, &[gens[0].clone(), odd], 100),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn affine_group() {
        let g = builtin::affine_group();
        assert_eq!(g.order(), 32);
        assert_eq!(g.classes().len(), 11);
        let total: usize = g.classes().iter().map(ConjugacyClass::size).sum();
        assert_eq!(total, 32);
        let shift = affine_element(&g, 1, 1);
        let c = g.class_of(shift);
        assert_eq!(g.power_class(c, 2), g.class_of(affine_element(&g, 2, 1)));
        assert_eq!(g.power_class(c, 0), 0);
    }

    #[test]
    fn power_class_in_s3() {
        let g = builtin::s3_group();
        assert_eq!(g.power_class(2, 2), 2);
        assert_eq!(g.power_class(1, 2), 0);
        assert_eq!(g.power_class(1, 3), 1);
    }

    #[test]
    fn normal_cores() {
        let g = builtin::s3_group();
        let t = g.subgroup_generated_by(&[Permutation::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(g.normal_core(&t).is_trivial());
        let a3 = g.subgroup_generated_by(&[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(g.normal_core(&a3), a3);
        assert!(g.is_normal(&a3));
        assert!(!g.is_normal(&t));

        let aff = builtin::affine_group();
        let stab = builtin::octic_v1(&aff);
        assert!(aff.normal_core(&stab).is_trivial());
    }

    #[test]
    fn conjugacy_of_subgroups() {
        let g = builtin::s3_group();
        let t1 = g.subgroup_generated_by(&[Permutation::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
        let t2 = g.subgroup_generated_by(&[Permutation::from_cycles(3, &[&[1, 2]]).unwrap()]).unwrap();
        assert_eq!(g.are_conjugate(&t1, &t1), Some(0));
        let w = g.are_conjugate(&t1, &t2).unwrap();
        assert_eq!(g.conjugate_subgroup(w, &t1), t2);

        let aff = builtin::affine_group();
        let v1 = builtin::octic_v1(&aff);
        let v2 = builtin::octic_v2(&aff);
        assert_eq!(aff.are_conjugate(&v1, &v2), None);
    }

    #[test]
    fn subgroup_validation() {
        let g = builtin::s3_group();
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert!(g.subgroup_from_elements(&[Permutation::identity(3), t.clone()]).is_ok());
        assert_eq!(g.subgroup_from_elements(&[Permutation::identity(3), c]), Err(Error::NotSubgroup));
        assert_eq!(g.subgroup_from_elements(&[t]), Err(Error::NotSubgroup));
    }

    #[test]
    fn embedded_subgroup_indices_align() {
        let aff = builtin::affine_group();
        let u = builtin::octic_u(&aff);
        let e = aff.embed(&u);
        assert_eq!(e.group.order(), 8);
        for i in 0..e.group.order() {
            assert_eq!(e.group.element(i), aff.element(e.to_parent(i)));
            assert_eq!(e.from_parent(e.to_parent(i)), Some(i));
        }
    }
}
