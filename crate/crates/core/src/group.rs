//! Finite groups realized as permutation groups with full element
//! enumeration, plus the structural machinery built on top of it:
//! conjugacy classes, subgroups, quotients, `O^q` and solubility.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Index of an element in the enumerated (lexicographically sorted)
/// element list of its group.
pub type ElemId = u16;

/// Default cap on group orders; everything here is meant for desk scale.
pub const DEFAULT_ORDER_BOUND: usize = 2000;

/// A finite permutation group with all elements enumerated.
///
/// Elements are sorted lexicographically by image map, so element ids are
/// canonical: the identity is always id 0 and all derived data
/// (conjugacy classes, subgroup tables, relation bases) is deterministic.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    elems: Vec<Perm>,
    index: HashMap<Perm, ElemId>,
    mult: Vec<ElemId>,
    inv: Vec<ElemId>,
    orders: Vec<u32>,
    fingerprint: u64,
    conj_classes: OnceLock<Vec<ConjClass>>,
}

/// A conjugacy class of group elements.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: ElemId,
    pub members: Vec<ElemId>,
    /// Multiplicative order of the representative.
    pub order: u32,
}

/// A subgroup given by its (sorted) element ids in the parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<ElemId>,
    pub generators: Vec<ElemId>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.elements.binary_search(&id).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// A homomorphism between two enumerated groups, stored as the full
/// element map. Group identity is tracked by fingerprint so that maps
/// cannot be applied to the wrong groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source_fp: u64,
    pub target_fp: u64,
    map: Vec<ElemId>,
}

impl GroupHom {
    /// Builds a homomorphism from an explicit element map, verifying
    /// multiplicativity exhaustively.
    pub fn new_checked(source: &Group, target: &Group, map: Vec<ElemId>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidProjection);
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                let ab = source.mul(a as ElemId, b as ElemId);
                let im = target.mul(map[a], map[b]);
                if im != map[ab as usize] {
                    return Err(Error::InvalidProjection);
                }
            }
        }
        Ok(GroupHom {
            source_fp: source.fingerprint(),
            target_fp: target.fingerprint(),
            map,
        })
    }

    pub fn apply(&self, id: ElemId) -> ElemId {
        self.map[id as usize]
    }

    /// Element ids of the source mapping to the target identity.
    pub fn kernel_ids(&self) -> Vec<ElemId> {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, &im)| im == 0)
            .map(|(i, _)| i as ElemId)
            .collect()
    }

    pub fn is_surjective(&self, target_order: usize) -> bool {
        let mut seen = vec![false; target_order];
        for &im in &self.map {
            seen[im as usize] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

/// Structural flags of a group relative to a prime `p`.
#[derive(Clone, Debug)]
pub struct StructuralFlags {
    pub is_soluble: bool,
    pub is_p_group: bool,
    pub is_cyclic: bool,
    /// cyclic of order coprime to `p`
    pub cyclic_p_prime: bool,
    /// q -> whether `O^q(G)` is cyclic, over primes q dividing |G| plus p
    pub quasi_elementary: BTreeMap<u64, bool>,
    /// q -> |O^q(G)| for the same primes
    pub o_q_orders: BTreeMap<u64, u64>,
}

impl StructuralFlags {
    pub fn is_quasi_elementary(&self) -> bool {
        self.quasi_elementary.values().any(|&b| b)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Group {
    /// Closes a generating set of permutations into a full group,
    /// failing once the enumeration passes `bound`.
    pub fn close(generators: Vec<Perm>, bound: usize) -> Result<Group> {
        if bound < 1 {
            return Err(Error::OrderBoundExceeded { bound });
        }
        let degree = generators.first().map_or(1, Perm::degree);
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation);
            }
        }
        let mut set: HashMap<Perm, ()> = HashMap::new();
        let mut queue = vec![Perm::identity(degree)];
        set.insert(Perm::identity(degree), ());
        while let Some(x) = queue.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if !set.contains_key(&y) {
                    if set.len() + 1 > bound {
                        return Err(Error::OrderBoundExceeded { bound });
                    }
                    set.insert(y.clone(), ());
                    queue.push(y);
                }
            }
        }
        let mut elems: Vec<Perm> = set.into_keys().collect();
        elems.sort();
        Ok(Group::from_sorted_elements(degree, elems, generators))
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_sorted_elements(degree, vec![Perm::identity(degree)], vec![])
    }

    /// Builds a group from an element list known to be closed.
    /// Used internally for subgroups, quotients and hom images.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        elems: Vec<Perm>,
        generators: Vec<Perm>,
    ) -> Group {
        debug_assert!(elems[0].is_identity(), "identity must sort first");
        let n = elems.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elems.iter().enumerate() {
            index.insert(e.clone(), i as ElemId);
        }
        let mut mult = vec![0 as ElemId; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = elems[a].compose(&elems[b]);
                mult[a * n + b] = *index
                    .get(&prod)
                    .expect("element set is closed under composition");
            }
        }
        let mut inv = vec![0 as ElemId; n];
        for a in 0..n {
            let iperm = elems[a].inverse();
            inv[a] = *index.get(&iperm).expect("element set is closed under inverse");
        }
        let orders: Vec<u32> = elems.iter().map(Perm::order).collect();
        let mut hasher = DefaultHasher::new();
        for e in &elems {
            e.hash(&mut hasher);
        }
        degree.hash(&mut hasher);
        let fingerprint = hasher.finish();
        Group {
            degree,
            generators,
            elems,
            index,
            mult,
            inv,
            orders,
            fingerprint,
            conj_classes: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generator_ids(&self) -> Vec<ElemId> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn perm(&self, id: ElemId) -> &Perm {
        &self.elems[id as usize]
    }

    pub fn id_of(&self, p: &Perm) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    pub fn identity_id(&self) -> ElemId {
        0
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mult[a as usize * self.elems.len() + b as usize]
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inv[a as usize]
    }

    pub fn conj(&self, x: ElemId, g: ElemId) -> ElemId {
        // g x g^-1
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn order_of(&self, a: ElemId) -> u32 {
        self.orders[a as usize]
    }

    /// Hash of the element list; equal groups (same enumerated elements
    /// on the same points) share a fingerprint.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        for a in 0..n as ElemId {
            for b in 0..a {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u32;
        self.orders.iter().any(|&o| o == n)
    }

    /// Conjugacy classes, sorted by (element order, least member id).
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        self.conj_classes.get_or_init(|| {
            let n = self.order();
            let mut assigned = vec![false; n];
            let mut classes = Vec::new();
            for x in 0..n as ElemId {
                if assigned[x as usize] {
                    continue;
                }
                let mut members = Vec::new();
                for g in 0..n as ElemId {
                    let y = self.conj(x, g);
                    if !assigned[y as usize] {
                        assigned[y as usize] = true;
                        members.push(y);
                    }
                }
                members.sort_unstable();
                classes.push(ConjClass {
                    rep: members[0],
                    order: self.orders[members[0] as usize],
                    members,
                });
            }
            classes.sort_by_key(|c| (c.order, c.rep));
            classes
        })
    }

    /// Indices of conjugacy classes whose elements have order coprime to `p`.
    pub fn p_regular_classes(&self, p: u64) -> Result<Vec<usize>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self
            .conjugacy_classes()
            .iter()
            .enumerate()
            .filter(|(_, c)| u64::from(c.order) % p != 0)
            .map(|(i, _)| i)
            .collect())
    }

    /// Closure of a seed set of element ids under multiplication.
    pub fn close_subset(&self, seed: &[ElemId]) -> Vec<ElemId> {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut stack = vec![0 as ElemId];
        for &s in seed {
            if !in_set[s as usize] {
                in_set[s as usize] = true;
                stack.push(s);
            }
        }
        let mut work = stack.clone();
        while let Some(x) = work.pop() {
            for &s in seed {
                let y = self.mul(s, x);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    work.push(y);
                }
            }
        }
        // seed elements have finite order, so the closure under left
        // multiplication by seeds is already a subgroup
        let mut out: Vec<ElemId> = (0..n as ElemId).filter(|&i| in_set[i as usize]).collect();
        out.sort_unstable();
        out
    }

    /// Subgroup generated by a seed, with a short generating list.
    pub fn subgroup_from(&self, seed: &[ElemId]) -> Subgroup {
        let elements = self.close_subset(seed);
        let mut generators = Vec::new();
        let mut have: Vec<ElemId> = vec![0];
        for &x in &elements {
            if have.binary_search(&x).is_err() {
                generators.push(x);
                let mut s = generators.clone();
                s.push(0);
                have = self.close_subset(&s);
                if have.len() == elements.len() {
                    break;
                }
            }
        }
        Subgroup {
            elements,
            generators,
        }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order() as ElemId).collect(),
            generators: self.generator_ids(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: vec![0],
            generators: vec![],
        }
    }

    pub fn conjugate_set(&self, set: &[ElemId], g: ElemId) -> Vec<ElemId> {
        let mut out: Vec<ElemId> = set.iter().map(|&x| self.conj(x, g)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_normal_set(&self, set: &[ElemId]) -> bool {
        self.generator_ids()
            .iter()
            .all(|&g| self.conjugate_set(set, g) == set)
    }

    /// Realizes a subgroup as a group in its own right (same degree,
    /// shared permutations, fresh element enumeration).
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> Group {
        let elems: Vec<Perm> = sub
            .elements
            .iter()
            .map(|&i| self.elems[i as usize].clone())
            .collect();
        // parent elements are sorted, so the subset is sorted too
        let generators = sub
            .generators
            .iter()
            .map(|&i| self.elems[i as usize].clone())
            .collect();
        Group::from_sorted_elements(self.degree, elems, generators)
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> Subgroup {
        let n = self.order() as ElemId;
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                // [a,b] = a^-1 b^-1 a b
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_from(&comms)
    }

    pub fn is_soluble(&self) -> bool {
        let mut current = self.full_subgroup();
        loop {
            if current.is_trivial() {
                return true;
            }
            let g = self.subgroup_as_group(&current);
            let derived = g.derived_subgroup();
            // map derived elements back to parent ids
            let parent_ids: Vec<ElemId> = derived
                .elements
                .iter()
                .map(|&i| self.index[g.perm(i)])
                .collect();
            if parent_ids.len() == current.elements.len() {
                return false;
            }
            current = self.subgroup_from(&parent_ids);
        }
    }

    /// `O^q(G)`: the smallest normal subgroup with q-group quotient,
    /// generated by all elements of order coprime to q.
    pub fn o_q(&self, q: u64) -> Result<Subgroup> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let seed: Vec<ElemId> = (0..self.order() as ElemId)
            .filter(|&i| u64::from(self.orders[i as usize]) % q != 0)
            .collect();
        Ok(self.subgroup_from(&seed))
    }

    pub fn structural_predicates(&self, p: u64) -> Result<StructuralFlags> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = self.order() as u64;
        let mut primes = prime_divisors(order);
        if !primes.contains(&p) {
            primes.push(p);
            primes.sort_unstable();
        }
        let mut quasi_elementary = BTreeMap::new();
        let mut o_q_orders = BTreeMap::new();
        for &q in &primes {
            let oq = self.o_q(q)?;
            let oq_group = self.subgroup_as_group(&oq);
            quasi_elementary.insert(q, oq_group.is_cyclic());
            o_q_orders.insert(q, oq.order() as u64);
        }
        let is_cyclic = self.is_cyclic();
        Ok(StructuralFlags {
            is_soluble: self.is_soluble(),
            is_p_group: {
                let mut n = order;
                while n % p == 0 {
                    n /= p;
                }
                n == 1
            },
            is_cyclic,
            cyclic_p_prime: is_cyclic && order % p != 0,
            quasi_elementary,
            o_q_orders,
        })
    }

    /// Whether `O^p(G)` is cyclic; its order is then automatically
    /// coprime to p, so this is the q-quasi-elementary test at q = p.
    pub fn is_q_quasi_elementary(&self, q: u64) -> Result<bool> {
        let oq = self.o_q(q)?;
        Ok(self.subgroup_as_group(&oq).is_cyclic())
    }

    /// Centralizer of a set of elements.
    pub fn centralizer(&self, set: &[ElemId]) -> Vec<ElemId> {
        (0..self.order() as ElemId)
            .filter(|&g| set.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect()
    }

    /// Quotient by a normal subgroup, as the permutation group on left
    /// cosets, together with the projection homomorphism.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Group, GroupHom)> {
        for g in self.generator_ids() {
            if self.conjugate_set(&n.elements, g) != n.elements {
                return Err(Error::NotNormal);
            }
        }
        let order = self.order();
        // assign coset indices in order of least element id; the coset of
        // the identity (= N itself) gets index 0
        let mut coset_of = vec![usize::MAX; order];
        let mut coset_count = 0usize;
        for g in 0..order as ElemId {
            if coset_of[g as usize] != usize::MAX {
                continue;
            }
            for &h in &n.elements {
                coset_of[self.mul(g, h) as usize] = coset_count;
            }
            coset_count += 1;
        }
        let mut coset_rep = vec![0 as ElemId; coset_count];
        let mut seen = vec![false; coset_count];
        for g in 0..order as ElemId {
            let c = coset_of[g as usize];
            if !seen[c] {
                seen[c] = true;
                coset_rep[c] = g;
            }
        }
        // permutation induced by g on cosets
        let perm_of = |g: ElemId| -> Perm {
            let map: Vec<_> = (0..coset_count)
                .map(|c| coset_of[self.mul(g, coset_rep[c]) as usize] as u16)
                .collect();
            Perm::new(map).expect("coset action is a permutation")
        };
        let mut elem_set: Vec<Perm> = (0..order as ElemId).map(perm_of).collect();
        let mut image_perms = elem_set.clone();
        elem_set.sort();
        elem_set.dedup();
        let gens = self
            .generator_ids()
            .iter()
            .map(|&g| image_perms[g as usize].clone())
            .collect();
        let q = Group::from_sorted_elements(coset_count, elem_set, gens);
        let map: Vec<ElemId> = image_perms
            .drain(..)
            .map(|p| q.id_of(&p).expect("image lies in quotient"))
            .collect();
        debug_assert_eq!(q.order() * n.order(), order);
        let hom = GroupHom {
            source_fp: self.fingerprint,
            target_fp: q.fingerprint(),
            map,
        };
        Ok((q, hom))
    }
}
