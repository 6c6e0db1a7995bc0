use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Permutation, PermutationGroup, Subgroup};
use crate::error::{Error, Result};

/// `U/V` for `V ⊴ U ≤ G`, realized as the permutation group induced by
/// left multiplication of `U` on the cosets `uV`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub numerator: Subgroup,
    pub denominator: Subgroup,
    /// The coset group; point `i` is `cosets[i]`.
    pub group: PermutationGroup,
    /// Cosets of the denominator, as sorted parent indices.
    pub cosets: Vec<Vec<usize>>,
    /// `projection[i]` is the quotient element of `numerator.elements()[i]`.
    projection: Vec<usize>,
}

impl QuotientGroup {
    /// Quotient element index of a parent element of `U`.
    pub fn project(&self, parent: usize) -> Option<usize> {
        self.numerator.elements().binary_search(&parent).ok().map(|i| self.projection[i])
    }

    /// The smallest parent element mapping to quotient element `q`.
    pub fn lift(&self, q: usize) -> usize {
        let pos = self.projection.iter().position(|&p| p == q).expect("projection is onto");
        self.numerator.elements()[pos]
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

impl PermutationGroup {
    pub fn quotient(&self, u: &Subgroup, v: &Subgroup) -> Result<QuotientGroup> {
        if !v.is_subset_of(u) {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal_in(v, u) {
            return Err(Error::NotNormal);
        }
        let mut coset_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for &t in u.elements() {
            if coset_of.contains_key(&t) {
                continue;
            }
            let mut members: Vec<usize> = v.elements().iter().map(|&x| self.mul(t, x)).collect();
            members.sort_unstable();
            for &m in &members {
                coset_of.insert(m, cosets.len());
            }
            cosets.push(members);
        }
        let degree = cosets.len();
        let action = |g: usize| -> Permutation {
            let images = cosets.iter().map(|c| coset_of[&self.mul(g, c[0])]).collect();
            Permutation::new(images).expect("left multiplication permutes cosets")
        };
        let gens: Vec<Permutation> =
            self.small_generating_set(u).into_iter().map(action).filter(|p| !p.is_identity()).collect();
        let group = PermutationGroup::enumerate(degree, &gens, u.order().max(1))?;
        let projection: Vec<usize> =
            u.elements().iter().map(|&g| group.index_of(&action(g)).expect("image lies in the coset group")).collect();
        Ok(QuotientGroup { numerator: u.clone(), denominator: v.clone(), group, cosets, projection })
    }
}
