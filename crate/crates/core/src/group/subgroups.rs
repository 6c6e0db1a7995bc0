use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{PermutationGroup, Subgroup};
use crate::error::{Error, Result};

/// Default cap on the number of subgroups enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 5_000;

impl PermutationGroup {
    /// All subgroups, by the cyclic extension method.
    ///
    /// Sorted by order, then by element list.
    pub fn subgroups_up_to(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let mut cyclic: BTreeSet<Subgroup> = BTreeSet::new();
        for g in 0..self.order() {
            cyclic.insert(self.generate(&[g]));
        }
        if cyclic.len() > cap {
            return Err(Error::CapExceeded { what: "subgroup enumeration", cap });
        }
        let cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
        let cyclic_gen: Vec<usize> = cyclic
            .iter()
            .map(|c| {
                *c.elements()
                    .iter()
                    .find(|&&e| self.element_order(e) == c.order())
                    .expect("cyclic subgroup has a generator")
            })
            .collect();

        let mut all: BTreeSet<Subgroup> = cyclic.iter().cloned().collect();
        let mut stack: Vec<(Subgroup, Vec<usize>)> =
            cyclic.iter().zip(&cyclic_gen).map(|(c, &g)| (c.clone(), alloc::vec![g])).collect();
        while let Some((s, gens)) = stack.pop() {
            for (c, &g) in cyclic.iter().zip(&cyclic_gen) {
                if c.is_subset_of(&s) {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(g);
                let t = self.generate(&ext);
                if all.insert(t.clone()) {
                    if all.len() > cap {
                        return Err(Error::CapExceeded { what: "subgroup enumeration", cap });
                    }
                    stack.push((t, ext));
                }
            }
        }
        let mut out: Vec<Subgroup> = all.into_iter().collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
        Ok(out)
    }

    /// Partitions subgroups into conjugacy classes; each class is listed by
    /// positions into `subgroups`, smallest position first.
    pub fn subgroup_conjugacy_classes(&self, subgroups: &[Subgroup]) -> Vec<Vec<usize>> {
        let mut assigned = alloc::vec![false; subgroups.len()];
        let mut classes = Vec::new();
        for i in 0..subgroups.len() {
            if assigned[i] {
                continue;
            }
            let mut orbit: BTreeSet<Subgroup> = BTreeSet::new();
            for g in 0..self.order() {
                orbit.insert(self.conjugate_subgroup(g, &subgroups[i]));
            }
            let members: Vec<usize> =
                (i..subgroups.len()).filter(|&j| !assigned[j] && orbit.contains(&subgroups[j])).collect();
            for &j in &members {
                assigned[j] = true;
            }
            classes.push(members);
        }
        classes
    }
}
