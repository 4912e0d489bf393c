//! Enumeration of all subgroups of a group up to conjugacy, with the
//! inclusion-up-to-conjugacy matrix. This is the indexing basis for the
//! Burnside ring, so the class ordering is canonical: sorted by
//! (order, lexicographically least conjugate), trivial class first,
//! whole group last.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{ElemId, Group, Subgroup};

/// Hard cap on the total number of subgroups visited while closing the
/// lattice; hitting it is reported as a resource bound error.
const SUBGROUP_WORK_LIMIT: usize = 200_000;

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Canonical representative: the lexicographically least conjugate.
    pub rep: Subgroup,
    /// All conjugates, each a sorted element-id set; sorted lexicographically.
    pub members: Vec<Vec<ElemId>>,
    pub order: usize,
    pub is_normal: bool,
    pub is_cyclic: bool,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_cyclic_coprime_to(&self, p: u64) -> bool {
        self.is_cyclic && (self.order as u64) % p != 0
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub classes: Vec<SubgroupClass>,
    /// `inclusion[i][j]`: some conjugate of class i is contained in the
    /// representative of class j.
    pub inclusion: Vec<Vec<bool>>,
    index_of: HashMap<Vec<ElemId>, usize>,
}

impl SubgroupTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class of a subgroup given by its full sorted element-id set.
    pub fn class_of(&self, elements: &[ElemId]) -> Option<usize> {
        self.index_of.get(elements).copied()
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn full_class(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn is_subconjugate(&self, i: usize, j: usize) -> bool {
        self.inclusion[i][j]
    }

    /// Proper classes maximal in the subgroup lattice up to conjugacy.
    pub fn maximal_classes(&self) -> Vec<usize> {
        let full = self.full_class();
        (0..self.len())
            .filter(|&i| i != full)
            .filter(|&i| {
                (0..self.len())
                    .all(|j| j == i || j == full || !self.inclusion[i][j])
            })
            .collect()
    }

    /// Nontrivial normal classes (class size 1, order > 1).
    pub fn normal_classes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.classes[i].is_normal && self.classes[i].order > 1)
            .collect()
    }

    /// Minimal nontrivial normal subgroups.
    pub fn minimal_normal_classes(&self) -> Vec<usize> {
        let normals = self.normal_classes();
        normals
            .iter()
            .copied()
            .filter(|&i| {
                normals
                    .iter()
                    .all(|&j| j == i || !self.inclusion[j][i] || self.classes[j].order >= self.classes[i].order)
            })
            .collect()
    }

    pub fn count_cyclic_coprime(&self, p: u64) -> usize {
        self.classes
            .iter()
            .filter(|c| c.is_cyclic_coprime_to(p))
            .count()
    }

    /// Short display labels per class: `{e}`, `G`, `C<n>` for cyclic,
    /// `H<n>` otherwise, with letter suffixes to disambiguate.
    pub fn class_labels(&self) -> Vec<String> {
        let n = self.len();
        let mut base: Vec<String> = Vec::with_capacity(n);
        for (i, c) in self.classes.iter().enumerate() {
            if c.order == 1 {
                base.push("{e}".into());
            } else if i == n - 1 {
                base.push("G".into());
            } else if c.is_cyclic {
                base.push(format!("C{}", c.order));
            } else {
                base.push(format!("H{}", c.order));
            }
        }
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for b in &base {
            *counts.entry(b.as_str()).or_default() += 1;
        }
        let ambiguous: Vec<String> = counts
            .iter()
            .filter(|(_, &k)| k > 1)
            .map(|(s, _)| s.to_string())
            .collect();
        let mut seen: HashMap<String, usize> = HashMap::new();
        base.into_iter()
            .map(|b| {
                if ambiguous.contains(&b) {
                    let k = seen.entry(b.clone()).or_default();
                    let suffix = (b'a' + *k as u8) as char;
                    *k += 1;
                    format!("{b}{suffix}")
                } else {
                    b
                }
            })
            .collect()
    }
}

/// Enumerates all subgroup conjugacy classes by layered closure: seed
/// with the cyclic subgroups, then extend each class representative by
/// one outside element and close, deduplicating by conjugacy.
pub fn subgroup_classes(g: &Group) -> Result<SubgroupTable> {
    struct WorkClass {
        members: Vec<Vec<ElemId>>,
    }
    let mut index_of: HashMap<Vec<ElemId>, usize> = HashMap::new();
    let mut classes: Vec<WorkClass> = Vec::new();
    let order = g.order();

    let register = |set: Vec<ElemId>,
                        index_of: &mut HashMap<Vec<ElemId>, usize>,
                        classes: &mut Vec<WorkClass>|
     -> Result<()> {
        if index_of.contains_key(&set) {
            return Ok(());
        }
        let idx = classes.len();
        let mut members = Vec::new();
        for h in 0..order as ElemId {
            let conj = g.conjugate_set(&set, h);
            if !index_of.contains_key(&conj) {
                if index_of.len() >= SUBGROUP_WORK_LIMIT {
                    return Err(Error::OrderBoundExceeded {
                        bound: SUBGROUP_WORK_LIMIT,
                    });
                }
                index_of.insert(conj.clone(), idx);
                members.push(conj);
            }
        }
        members.sort();
        classes.push(WorkClass { members });
        Ok(())
    };

    // seeds: all cyclic subgroups
    for x in 0..order as ElemId {
        let set = g.close_subset(&[x]);
        register(set, &mut index_of, &mut classes)?;
    }
    // layered closure: extend each class representative
    let mut next = 0usize;
    while next < classes.len() {
        let rep = classes[next].members[0].clone();
        next += 1;
        if rep.len() == order {
            continue;
        }
        for a in 0..order as ElemId {
            if rep.binary_search(&a).is_ok() {
                continue;
            }
            let mut seed = rep.clone();
            seed.push(a);
            let set = g.close_subset(&seed);
            register(set, &mut index_of, &mut classes)?;
        }
    }

    // canonical order: (order, lex-least conjugate)
    let mut perm: Vec<usize> = (0..classes.len()).collect();
    perm.sort_by(|&a, &b| {
        (classes[a].members[0].len(), &classes[a].members[0])
            .cmp(&(classes[b].members[0].len(), &classes[b].members[0]))
    });
    let mut final_classes = Vec::with_capacity(classes.len());
    let mut final_index: HashMap<Vec<ElemId>, usize> = HashMap::new();
    for (new_idx, &old_idx) in perm.iter().enumerate() {
        let members = std::mem::take(&mut classes[old_idx].members);
        for m in &members {
            final_index.insert(m.clone(), new_idx);
        }
        let rep_set = members[0].clone();
        let rep = g.subgroup_from(&rep_set);
        debug_assert_eq!(rep.elements, rep_set);
        let sub_order = rep_set.len();
        let is_cyclic = rep_set
            .iter()
            .any(|&x| g.order_of(x) as usize == sub_order);
        final_classes.push(SubgroupClass {
            rep,
            is_normal: members.len() == 1,
            is_cyclic,
            order: sub_order,
            members,
        });
    }

    let n = final_classes.len();
    let mut inclusion = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if final_classes[j].order % final_classes[i].order != 0 {
                continue;
            }
            let target = &final_classes[j].rep.elements;
            inclusion[i][j] = final_classes[i]
                .members
                .iter()
                .any(|m| is_subset(m, target));
        }
    }

    debug_assert_eq!(final_classes[0].order, 1);
    debug_assert_eq!(final_classes[n - 1].order, order);
    Ok(SubgroupTable {
        classes: final_classes,
        inclusion,
        index_of: final_index,
    })
}

fn is_subset(small: &[ElemId], big: &[ElemId]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    small.iter().all(|x| big.binary_search(x).is_ok())
}
