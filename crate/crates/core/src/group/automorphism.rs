use alloc::vec::Vec;

use super::{PermutationGroup, Subgroup};
use crate::error::{Error, Result};

/// Automorphism search refuses groups above this order by default.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 64;

/// A bijective endomorphism, stored as a full element map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    /// Generating set the search fixed, and where each generator goes.
    pub generators: Vec<usize>,
    pub generator_images: Vec<usize>,
    map: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn apply(&self, element: usize) -> usize {
        self.map[element]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut e: Vec<usize> = h.elements().iter().map(|&x| self.map[x]).collect();
        e.sort_unstable();
        Subgroup::from_sorted(e)
    }

    pub fn is_inner(&self, g: &PermutationGroup) -> bool {
        (0..g.order()).any(|c| (0..g.order()).all(|x| g.conjugate(c, x) == self.map[x]))
    }
}

/// A homomorphism between two (possibly different) permutation groups,
/// determined by the images of the source generators.
#[derive(Clone, Debug)]
pub struct GroupHom {
    map: Vec<usize>,
}

impl GroupHom {
    /// Extends generator images to a full map and verifies the homomorphism property.
    pub fn from_generator_images(
        source: &PermutationGroup,
        target: &PermutationGroup,
        images: &[usize],
    ) -> Result<Self> {
        let gens: Vec<usize> =
            source.generators().iter().map(|g| source.index_of(g).expect("generator lies in its group")).collect();
        if gens.len() != images.len() {
            return Err(Error::InvalidInput("one image per source generator is required".into()));
        }
        let map = extend(source, target, &gens, images)
            .ok_or_else(|| Error::InvalidInput("generator images do not define a homomorphism".into()))?;
        let hom = GroupHom { map };
        if !hom.is_homomorphism(source, target) {
            return Err(Error::InvalidInput("generator images do not define a homomorphism".into()));
        }
        Ok(hom)
    }

    pub fn identity(g: &PermutationGroup) -> Self {
        GroupHom { map: (0..g.order()).collect() }
    }

    pub fn apply(&self, element: usize) -> usize {
        self.map[element]
    }

    pub fn is_surjective(&self, target: &PermutationGroup) -> bool {
        let mut hit = alloc::vec![false; target.order()];
        for &m in &self.map {
            hit[m] = true;
        }
        hit.into_iter().all(|h| h)
    }

    fn is_homomorphism(&self, source: &PermutationGroup, target: &PermutationGroup) -> bool {
        (0..source.order())
            .all(|a| (0..source.order()).all(|b| self.map[source.mul(a, b)] == target.mul(self.map[a], self.map[b])))
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_sorted((0..self.map.len()).filter(|&x| h.contains(self.map[x])).collect())
    }
}

/// Walks the Cayley graph from the identity, assigning `img(g x) = img(g) img(x)`.
/// Returns `None` on the first inconsistency.
fn extend(
    source: &PermutationGroup,
    target: &PermutationGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = alloc::vec![usize::MAX; source.order()];
    map[source.identity()] = target.identity();
    let mut queue = alloc::vec![source.identity()];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul(g, x);
            let value = target.mul(img, map[x]);
            if map[y] == usize::MAX {
                map[y] = value;
                queue.push(y);
            } else if map[y] != value {
                return None;
            }
        }
        k += 1;
    }
    Some(map)
}

impl PermutationGroup {
    /// All automorphisms, by brute force over generator images with matching
    /// element order and class size.
    ///
    /// `bound` limits the group order accepted; `cap` limits the number returned.
    pub fn automorphism_group(&self, bound: usize, cap: usize) -> Result<Vec<GroupAutomorphism>> {
        if self.order() > bound {
            return Err(Error::CapExceeded { what: "automorphism search group order", cap: bound });
        }
        let gens = self.small_generating_set(&self.whole());
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let size = self.classes()[self.class_of(g)].size();
                (0..self.order())
                    .filter(|&c| {
                        self.element_order(c) == self.element_order(g)
                            && self.classes()[self.class_of(c)].size() == size
                    })
                    .collect()
            })
            .collect();

        let mut found = Vec::new();
        let mut chosen = Vec::with_capacity(gens.len());
        self.search_automorphisms(&gens, &candidates, &mut chosen, &mut found, cap)?;
        Ok(found)
    }

    fn search_automorphisms(
        &self,
        gens: &[usize],
        candidates: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        found: &mut Vec<GroupAutomorphism>,
        cap: usize,
    ) -> Result<()> {
        let depth = chosen.len();
        if depth == gens.len() {
            let Some(map) = extend(self, self, gens, chosen) else { return Ok(()) };
            let mut hit = alloc::vec![false; self.order()];
            for &m in &map {
                if hit[m] {
                    return Ok(());
                }
                hit[m] = true;
            }
            let ok =
                (0..self.order()).all(|a| (0..self.order()).all(|b| map[self.mul(a, b)] == self.mul(map[a], map[b])));
            if ok {
                if found.len() >= cap {
                    return Err(Error::CapExceeded { what: "automorphism count", cap });
                }
                found.push(GroupAutomorphism { generators: gens.to_vec(), generator_images: chosen.clone(), map });
            }
            return Ok(());
        }
        for &c in &candidates[depth] {
            chosen.push(c);
            // Prune: the partial assignment must be consistent on the subgroup it generates.
            if extend(self, self, &gens[..=depth], chosen).is_some() {
                self.search_automorphisms(gens, candidates, chosen, found, cap)?;
            }
            chosen.pop();
        }
        Ok(())
    }
}
