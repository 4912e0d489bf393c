//! The Burnside ring of a finite group: elements are integer vectors
//! over subgroup conjugacy classes, multiplication goes through orbit
//! decomposition of products of coset spaces, and the table of marks
//! provides an independent multiplicative check. Induction, restriction
//! and inflation are the basis-level maps between Burnside rings.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{ElemId, Group, GroupHom};
use crate::subgroups::{subgroup_classes, SubgroupTable};

/// A group together with its subgroup table: the ambient context for
/// Burnside ring arithmetic.
#[derive(Clone, Debug)]
pub struct BurnsideRing {
    pub group: Group,
    pub table: SubgroupTable,
    marks: OnceLock<Vec<Vec<i64>>>,
}

/// An element of b(G): the coefficient of [G/H] per subgroup class, in
/// the canonical class order of the ring's table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BurnsideElement {
    pub coeffs: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(n: usize) -> Self {
        BurnsideElement {
            coeffs: vec![BigInt::zero(); n],
        }
    }

    pub fn basis(n: usize, class: usize) -> Self {
        let mut e = BurnsideElement::zero(n);
        e.coeffs[class] = BigInt::from(1);
        e
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        BurnsideElement {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::GroupMismatch);
        }
        Ok(BurnsideElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> BurnsideElement {
        BurnsideElement {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn sub(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        self.add(&other.scale(&BigInt::from(-1)))
    }
}

/// Left cosets of a subgroup: `rep[c]` is the least element of coset c,
/// `coset_of[g]` the coset index of element g.
struct Cosets {
    reps: Vec<ElemId>,
    coset_of: Vec<usize>,
}

fn cosets(g: &Group, sub_elements: &[ElemId]) -> Cosets {
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order as ElemId {
        if coset_of[x as usize] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &h in sub_elements {
            coset_of[g.mul(x, h) as usize] = c;
        }
    }
    Cosets { reps, coset_of }
}

impl BurnsideRing {
    pub fn new(group: Group) -> Result<Self> {
        let table = subgroup_classes(&group)?;
        Ok(BurnsideRing {
            group,
            table,
            marks: OnceLock::new(),
        })
    }

    pub fn class_count(&self) -> usize {
        self.table.len()
    }

    pub fn basis_element(&self, class: usize) -> BurnsideElement {
        BurnsideElement::basis(self.class_count(), class)
    }

    /// Table of marks: `m[h][k] = |(G/H_h)^{K_k}|`, the number of cosets
    /// of H fixed by every element of K.
    pub fn table_of_marks(&self) -> &Vec<Vec<i64>> {
        self.marks.get_or_init(|| {
            let n = self.class_count();
            let mut m = vec![vec![0i64; n]; n];
            for h in 0..n {
                let cs = cosets(&self.group, &self.table.classes[h].rep.elements);
                for (k, class_k) in self.table.classes.iter().enumerate() {
                    let gens = &class_k.rep.generators;
                    let count = cs
                        .reps
                        .iter()
                        .filter(|&&r| {
                            gens.iter().all(|&kgen| {
                                cs.coset_of[self.group.mul(kgen, r) as usize]
                                    == cs.coset_of[r as usize]
                            })
                        })
                        .count();
                    m[h][k] = count as i64;
                }
            }
            m
        })
    }

    /// Mark vector of an element: its fixed-point counts over all
    /// subgroup classes. This is the injective ghost map of b(G).
    pub fn marks_of(&self, x: &BurnsideElement) -> Result<Vec<BigInt>> {
        if x.coeffs.len() != self.class_count() {
            return Err(Error::GroupMismatch);
        }
        let m = self.table_of_marks();
        Ok((0..self.class_count())
            .map(|k| {
                x.coeffs
                    .iter()
                    .enumerate()
                    .map(|(h, c)| c * BigInt::from(m[h][k]))
                    .sum()
            })
            .collect())
    }

    /// Decomposition of [G/H_i] * [G/H_j] into basis classes, via orbit
    /// decomposition of the product of the two coset spaces.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let g = &self.group;
        let ci = cosets(g, &self.table.classes[i].rep.elements);
        let cj = cosets(g, &self.table.classes[j].rep.elements);
        let (ni, nj) = (ci.reps.len(), cj.reps.len());
        let gens = g.generator_ids();
        let mut seen = vec![false; ni * nj];
        let mut out: Vec<(usize, i64)> = Vec::new();
        let mut orbit_total = 0usize;
        for start in 0..ni * nj {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let cur = orbit[head];
                head += 1;
                let (a, b) = (cur / nj, cur % nj);
                for &gen in &gens {
                    let a2 = ci.coset_of[g.mul(gen, ci.reps[a]) as usize];
                    let b2 = cj.coset_of[g.mul(gen, cj.reps[b]) as usize];
                    let nxt = a2 * nj + b2;
                    if !seen[nxt] {
                        seen[nxt] = true;
                        orbit.push(nxt);
                    }
                }
            }
            orbit_total += orbit.len();
            // stabilizer of the orbit representative
            let (a, b) = (start / nj, start % nj);
            let stab: Vec<ElemId> = (0..g.order() as ElemId)
                .filter(|&x| {
                    ci.coset_of[g.mul(x, ci.reps[a]) as usize] == a
                        && cj.coset_of[g.mul(x, cj.reps[b]) as usize] == b
                })
                .collect();
            debug_assert_eq!(stab.len() * orbit.len(), g.order());
            let class = self
                .table
                .class_of(&stab)
                .expect("stabilizer is a known subgroup");
            match out.iter_mut().find(|(c, _)| *c == class) {
                Some((_, mult)) => *mult += 1,
                None => out.push((class, 1)),
            }
        }
        debug_assert_eq!(orbit_total, ni * nj);
        out
    }

    /// Product in b(G), extended bilinearly from basis products.
    pub fn multiply(
        &self,
        x: &BurnsideElement,
        y: &BurnsideElement,
    ) -> Result<BurnsideElement> {
        let n = self.class_count();
        if x.coeffs.len() != n || y.coeffs.len() != n {
            return Err(Error::GroupMismatch);
        }
        let mut out = BurnsideElement::zero(n);
        for i in 0..n {
            if x.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coeffs[j].is_zero() {
                    continue;
                }
                let coeff = &x.coeffs[i] * &y.coeffs[j];
                for (class, mult) in self.basis_product(i, j) {
                    out.coeffs[class] += &coeff * BigInt::from(mult);
                }
            }
        }
        debug_assert!({
            let lhs = self.marks_of(&out)?;
            let mx = self.marks_of(x)?;
            let my = self.marks_of(y)?;
            lhs.iter()
                .zip(mx.iter().zip(&my))
                .all(|(l, (a, b))| *l == a * b)
        });
        Ok(out)
    }
}

/// Checks that `sub`'s elements all belong to `amb` (same degree), and
/// returns the map from sub element ids to ambient element ids.
fn embedding_ids(sub: &BurnsideRing, amb: &BurnsideRing) -> Result<Vec<ElemId>> {
    if sub.group.degree() != amb.group.degree() {
        return Err(Error::NotASubgroup);
    }
    sub.group
        .elements()
        .iter()
        .map(|p| amb.group.id_of(p).ok_or(Error::NotASubgroup))
        .collect()
}

/// Induction along a subgroup embedding: [H/U] -> [G/U].
pub fn induce(
    sub: &BurnsideRing,
    amb: &BurnsideRing,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    let ids = embedding_ids(sub, amb)?;
    if x.coeffs.len() != sub.class_count() {
        return Err(Error::GroupMismatch);
    }
    let mut out = BurnsideElement::zero(amb.class_count());
    for (u, coeff) in x.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mut g_ids: Vec<ElemId> = sub.table.classes[u]
            .rep
            .elements
            .iter()
            .map(|&lid| ids[lid as usize])
            .collect();
        g_ids.sort_unstable();
        let class = amb
            .table
            .class_of(&g_ids)
            .expect("image of a subgroup is a subgroup");
        out.coeffs[class] += coeff;
    }
    Ok(out)
}

/// Restriction along a subgroup embedding, by decomposing every coset
/// space into K-orbits: [G/H] -> sum over orbits of [K/stab].
pub fn restrict(
    amb: &BurnsideRing,
    sub: &BurnsideRing,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    let ids = embedding_ids(sub, amb)?;
    if x.coeffs.len() != amb.class_count() {
        return Err(Error::GroupMismatch);
    }
    let g = &amb.group;
    let mut out = BurnsideElement::zero(sub.class_count());
    for (h, coeff) in x.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let cs = cosets(g, &amb.table.classes[h].rep.elements);
        let nc = cs.reps.len();
        let mut seen = vec![false; nc];
        for start in 0..nc {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let cur = orbit[head];
                head += 1;
                for &kgen in &sub.table.classes[sub.table.full_class()].rep.generators {
                    let kg = ids[kgen as usize];
                    let nxt = cs.coset_of[g.mul(kg, cs.reps[cur]) as usize];
                    if !seen[nxt] {
                        seen[nxt] = true;
                        orbit.push(nxt);
                    }
                }
            }
            // stabilizer of the orbit representative inside K, in K-local ids
            let rep = cs.reps[start];
            let mut stab: Vec<ElemId> = (0..sub.group.order() as ElemId)
                .filter(|&lid| {
                    let kg = ids[lid as usize];
                    cs.coset_of[g.mul(kg, rep) as usize] == start
                })
                .collect();
            stab.sort_unstable();
            debug_assert_eq!(stab.len() * orbit.len(), sub.group.order());
            let class = sub
                .table
                .class_of(&stab)
                .expect("stabilizer is a known subgroup of K");
            out.coeffs[class] += coeff;
        }
    }
    Ok(out)
}

/// Inflation along a projection G -> Q: [Q/V] -> [G/preimage(V)].
pub fn inflate(
    proj: &GroupHom,
    quo: &BurnsideRing,
    amb: &BurnsideRing,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    if proj.source_fp != amb.group.fingerprint() || proj.target_fp != quo.group.fingerprint() {
        return Err(Error::InvalidProjection);
    }
    if x.coeffs.len() != quo.class_count() {
        return Err(Error::GroupMismatch);
    }
    let mut out = BurnsideElement::zero(amb.class_count());
    for (v, coeff) in x.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let target = &quo.table.classes[v].rep.elements;
        let preimage: Vec<ElemId> = (0..amb.group.order() as ElemId)
            .filter(|&gid| target.binary_search(&proj.apply(gid)).is_ok())
            .collect();
        let class = amb
            .table
            .class_of(&preimage)
            .expect("preimage of a subgroup is a subgroup");
        out.coeffs[class] += coeff;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn ring(gens: Vec<Perm>) -> BurnsideRing {
        BurnsideRing::new(Group::close(gens, 200).unwrap()).unwrap()
    }

    fn s3_ring() -> BurnsideRing {
        ring(vec![
            Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
            Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
        ])
    }

    fn c2_ring() -> BurnsideRing {
        ring(vec![Perm::from_cycles(2, &[vec![0, 1]]).unwrap()])
    }

    #[test]
    fn marks_of_c2() {
        let r = c2_ring();
        assert_eq!(*r.table_of_marks(), vec![vec![2, 0], vec![1, 1]]);
    }

    #[test]
    fn marks_of_trivial_group() {
        let r = ring(vec![]);
        assert_eq!(*r.table_of_marks(), vec![vec![1]]);
    }

    #[test]
    fn marks_of_s3() {
        let r = s3_ring();
        // independent oracle: |(G/H)^K| = #{g : g^-1 K g <= H} / |H|
        let m = r.table_of_marks().clone();
        assert_eq!(
            m,
            vec![
                vec![6, 0, 0, 0],
                vec![3, 1, 0, 0],
                vec![2, 0, 2, 0],
                vec![1, 1, 1, 1],
            ]
        );
        let g = &r.group;
        for (h, ch) in r.table.classes.iter().enumerate() {
            for (k, ck) in r.table.classes.iter().enumerate() {
                let count = (0..g.order() as ElemId)
                    .filter(|&x| {
                        ck.rep.elements.iter().all(|&kk| {
                            let conj = g.conj(kk, g.inv(x));
                            ch.rep.contains(conj)
                        })
                    })
                    .count();
                assert_eq!(count % ch.order, 0);
                assert_eq!((count / ch.order) as i64, m[h][k]);
            }
        }
    }

    #[test]
    fn marks_lower_triangular_with_subconjugacy() {
        let r = s3_ring();
        let m = r.table_of_marks();
        for h in 0..4 {
            assert!(m[h][h] >= 1);
            assert_eq!(m[h][0], (r.group.order() / r.table.classes[h].order) as i64);
            for k in 0..4 {
                if m[h][k] != 0 {
                    assert!(r.table.is_subconjugate(k, h));
                }
            }
        }
    }

    #[test]
    fn multiply_identity_and_free() {
        let r = s3_ring();
        let one = r.basis_element(r.table.full_class());
        let x = BurnsideElement::from_i64(&[3, -1, 2, 5]);
        assert_eq!(r.multiply(&one, &x).unwrap(), x);
        // [G/e]^2 = |G| [G/e]
        let free = r.basis_element(0);
        let sq = r.multiply(&free, &free).unwrap();
        let mut expect = BurnsideElement::zero(4);
        expect.coeffs[0] = BigInt::from(6);
        assert_eq!(sq, expect);
    }

    #[test]
    fn multiply_c2_coset_square_in_s3() {
        let r = s3_ring();
        // [S3/C2]^2 = [S3/C2] + [S3/e]
        let x = r.basis_element(1);
        let sq = r.multiply(&x, &x).unwrap();
        assert_eq!(sq, BurnsideElement::from_i64(&[1, 1, 0, 0]));
    }

    #[test]
    fn induce_from_c3_to_s3() {
        let amb = s3_ring();
        let rot = (0..6).find(|&i| amb.group.order_of(i) == 3).unwrap();
        let c3 = amb.group.subgroup_from(&[rot]);
        let sub = BurnsideRing::new(amb.group.subgroup_as_group(&c3)).unwrap();
        // Ind [C3/e] = [S3/e]
        let x = sub.basis_element(0);
        let ind = induce(&sub, &amb, &x).unwrap();
        assert_eq!(ind, BurnsideElement::from_i64(&[1, 0, 0, 0]));
        // Ind(3[C3/C3] - [C3/e]) = 3[S3/C3] - [S3/e]
        let rel = BurnsideElement::from_i64(&[-1, 3]);
        let ind = induce(&sub, &amb, &rel).unwrap();
        assert_eq!(ind, BurnsideElement::from_i64(&[-1, 0, 3, 0]));
        // Ind from G to G is the identity
        let y = BurnsideElement::from_i64(&[2, -1, 0, 7]);
        assert_eq!(induce(&amb, &amb, &y).unwrap(), y);
    }

    #[test]
    fn restrict_examples() {
        let amb = s3_ring();
        let rot = (0..6).find(|&i| amb.group.order_of(i) == 3).unwrap();
        let c3 = BurnsideRing::new(
            amb.group.subgroup_as_group(&amb.group.subgroup_from(&[rot])),
        )
        .unwrap();
        // Res_{C3} [S3/C2] = [C3/e]
        let x = amb.basis_element(1);
        assert_eq!(
            restrict(&amb, &c3, &x).unwrap(),
            BurnsideElement::from_i64(&[1, 0])
        );
        let refl = (0..6).find(|&i| amb.group.order_of(i) == 2).unwrap();
        let c2 = BurnsideRing::new(
            amb.group.subgroup_as_group(&amb.group.subgroup_from(&[refl])),
        )
        .unwrap();
        // Res_{C2} [S3/C3] = [C2/e]
        let y = amb.basis_element(2);
        assert_eq!(
            restrict(&amb, &c2, &y).unwrap(),
            BurnsideElement::from_i64(&[1, 0])
        );
        // Res to G is the identity
        let z = BurnsideElement::from_i64(&[1, 2, 3, 4]);
        assert_eq!(restrict(&amb, &amb, &z).unwrap(), z);
    }

    #[test]
    fn inflate_examples() {
        let amb = s3_ring();
        let rot = (0..6).find(|&i| amb.group.order_of(i) == 3).unwrap();
        let n = amb.group.subgroup_from(&[rot]);
        let (q, proj) = amb.group.quotient(&n).unwrap();
        let quo = BurnsideRing::new(q).unwrap();
        // Inf [C2/e] = [S3/C3]
        let x = quo.basis_element(0);
        assert_eq!(
            inflate(&proj, &quo, &amb, &x).unwrap(),
            BurnsideElement::from_i64(&[0, 0, 1, 0])
        );
        // Inf of the ring identity is the ring identity
        let one = quo.basis_element(quo.table.full_class());
        assert_eq!(
            inflate(&proj, &quo, &amb, &one).unwrap(),
            amb.basis_element(amb.table.full_class())
        );
    }

    #[test]
    fn inflate_cyclic_tower() {
        // C4 -> C2: Inf(2[C2/C2] - [C2/e]) = 2[C4/C4] - [C4/C2]
        let c4 = ring(vec![Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()]);
        let half = (0..4).find(|&i| c4.group.order_of(i) == 2).unwrap();
        let n = c4.group.subgroup_from(&[half]);
        let (q, proj) = c4.group.quotient(&n).unwrap();
        let quo = BurnsideRing::new(q).unwrap();
        let rel = BurnsideElement::from_i64(&[-1, 2]);
        assert_eq!(
            inflate(&proj, &quo, &c4, &rel).unwrap(),
            BurnsideElement::from_i64(&[0, -1, 2])
        );
    }

    #[test]
    fn induce_rejects_non_subgroup() {
        let amb = s3_ring();
        let c4 = ring(vec![Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()]);
        let x = c4.basis_element(0);
        assert!(matches!(
            induce(&c4, &amb, &x),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn inflate_rejects_foreign_projection() {
        let amb = s3_ring();
        let rot = (0..6).find(|&i| amb.group.order_of(i) == 3).unwrap();
        let (q, proj) = amb.group.quotient(&amb.group.subgroup_from(&[rot])).unwrap();
        let quo = BurnsideRing::new(q).unwrap();
        let other = ring(vec![Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()]);
        let x = quo.basis_element(0);
        assert!(matches!(
            inflate(&proj, &quo, &other, &x),
            Err(Error::InvalidProjection)
        ));
    }
}
