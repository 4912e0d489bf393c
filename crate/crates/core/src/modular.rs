//! The morphism from the Burnside ring to the Grothendieck ring of
//! F_p[G]-modules. The class of a permutation module is represented by
//! its Brauer character, whose value at a p-regular element is the
//! integer fixed-point count on the underlying set. The kernel of this
//! morphism is the lattice of Brauer relations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::burnside::{BurnsideElement, BurnsideRing};
use crate::error::{Error, Result};
use crate::group::{is_prime, prime_divisors, ElemId, Group};
use crate::lattice::{integer_kernel, IntegerLattice};
use crate::matrix::{solve_integer, solve_rational, IntMatrix};

/// Brauer character values of an element of b(G), indexed by p-regular
/// conjugacy classes (or by all classes in characteristic zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrauerVector {
    /// None encodes characteristic zero (all classes).
    pub prime: Option<u64>,
    pub values: Vec<BigInt>,
}

impl BrauerVector {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// The kernel of the map into the character side, as a sublattice of
/// the Burnside coefficient space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationLattice {
    /// None encodes characteristic zero.
    pub prime: Option<u64>,
    pub lattice: IntegerLattice,
}

impl RelationLattice {
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn basis_elements(&self) -> Vec<BurnsideElement> {
        self.lattice
            .basis_rows()
            .into_iter()
            .map(|coeffs| BurnsideElement { coeffs })
            .collect()
    }

    pub fn contains(&self, x: &BurnsideElement) -> Result<bool> {
        self.lattice.contains(&x.coeffs)
    }
}

fn fixed_cosets(g: &Group, sub_elements: &[ElemId], rep: ElemId) -> i64 {
    // cosets xH with rep * xH = xH, i.e. x^-1 * rep * x in H
    let order = g.order();
    let mut seen = vec![false; order];
    let mut count = 0i64;
    for x in 0..order as ElemId {
        if seen[x as usize] {
            continue;
        }
        for &h in sub_elements {
            seen[g.mul(x, h) as usize] = true;
        }
        let conj = g.mul(g.mul(g.inv(x), rep), x);
        if sub_elements.binary_search(&conj).is_ok() {
            count += 1;
        }
    }
    count
}

/// Fixed-point matrix: rows are the selected conjugacy classes, columns
/// the subgroup classes; entry = |(G/H)^g| for a class representative g.
fn fixed_point_matrix(ring: &BurnsideRing, class_rows: &[usize]) -> IntMatrix {
    let g = &ring.group;
    let classes = g.conjugacy_classes();
    let rows: Vec<Vec<BigInt>> = class_rows
        .iter()
        .map(|&ci| {
            let rep = classes[ci].rep;
            ring.table
                .classes
                .iter()
                .map(|sc| BigInt::from(fixed_cosets(g, &sc.rep.elements, rep)))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        IntMatrix::zero(0, ring.class_count())
    } else {
        IntMatrix::from_rows(rows)
    }
}

/// Brauer character matrix at p: rows = p-regular classes, columns =
/// subgroup classes, entries = fixed-point counts.
pub fn brauer_matrix(ring: &BurnsideRing, p: u64) -> Result<IntMatrix> {
    let rows = ring.group.p_regular_classes(p)?;
    Ok(fixed_point_matrix(ring, &rows))
}

/// Permutation character matrix over all conjugacy classes
/// (characteristic zero).
pub fn character_matrix_char0(ring: &BurnsideRing) -> IntMatrix {
    let rows: Vec<usize> = (0..ring.group.conjugacy_classes().len()).collect();
    fixed_point_matrix(ring, &rows)
}

/// Brauer character values of `x` at the p-regular classes.
pub fn brauer_vector(ring: &BurnsideRing, p: u64, x: &BurnsideElement) -> Result<BrauerVector> {
    if x.coeffs.len() != ring.class_count() {
        return Err(Error::GroupMismatch);
    }
    let m = brauer_matrix(ring, p)?;
    Ok(BrauerVector {
        prime: Some(p),
        values: m.mul_vec(&x.coeffs),
    })
}

/// Kernel of the morphism at p: the lattice of Brauer relations.
pub fn kernel_lattice(ring: &BurnsideRing, p: u64) -> Result<RelationLattice> {
    let m = brauer_matrix(ring, p)?;
    Ok(RelationLattice {
        prime: Some(p),
        lattice: integer_kernel(&m),
    })
}

/// Kernel of the permutation character map in characteristic zero.
pub fn kernel_lattice_char0(ring: &BurnsideRing) -> RelationLattice {
    let m = character_matrix_char0(ring);
    RelationLattice {
        prime: None,
        lattice: integer_kernel(&m),
    }
}

/// Expected rank of the kernel: subgroup classes minus classes of
/// cyclic subgroups of order coprime to p.
pub fn expected_kernel_rank(ring: &BurnsideRing, p: u64) -> usize {
    ring.class_count() - ring.table.count_cyclic_coprime(p)
}

/// A group is coprimordial for the image exactly when it is cyclic of
/// order coprime to p.
pub fn is_coprimordial(g: &Group, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(g.is_cyclic() && (g.order() as u64) % p != 0)
}

/// A group is primordial for the image exactly when `O^q(G)` is cyclic
/// of order coprime to p for some prime q.
pub fn is_primordial(g: &Group, p: u64) -> Result<bool> {
    primordial_witness(g, p).map(|w| w.is_some())
}

/// The least prime q with `O^q(G)` cyclic of order coprime to p, if any.
pub fn primordial_witness(g: &Group, p: u64) -> Result<Option<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut primes = prime_divisors(g.order() as u64);
    if !primes.contains(&p) {
        primes.push(p);
        primes.sort_unstable();
    }
    for q in primes {
        let oq = g.o_q(q)?;
        let oq_group = g.subgroup_as_group(&oq);
        if oq_group.is_cyclic() && (oq.order() as u64) % p != 0 {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

fn moebius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// The coprimordiality witness of a cyclic group C of order m coprime
/// to p: sum over n | m of mu(m/n) * n * [C/C_n], i.e. m times the top
/// primitive idempotent of b(C) ⊗ Q. Its character is supported on the
/// generators of C, so the image is nonzero but restricts to zero on
/// every proper subgroup. (The mu(n)-weighted variant only works for
/// squarefree m, where it is the unit multiple mu(m) of this element.)
pub fn mobius_witness(ring: &BurnsideRing, p: u64) -> Result<BurnsideElement> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let g = &ring.group;
    if !g.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let m = g.order() as u64;
    if m % p == 0 {
        return Err(Error::PrimeDividesOrder);
    }
    let gen = (0..g.order() as ElemId)
        .find(|&i| u64::from(g.order_of(i)) == m)
        .expect("cyclic group has a generator");
    let mut out = BurnsideElement::zero(ring.class_count());
    for n in divisors(m) {
        let mu = moebius(m / n);
        if mu == 0 {
            continue;
        }
        // the unique subgroup of order n is generated by gen^(m/n)
        let power = {
            let mut acc = 0 as ElemId;
            for _ in 0..(m / n) {
                acc = g.mul(acc, gen);
            }
            acc
        };
        let sub = g.close_subset(&[power]);
        debug_assert_eq!(sub.len() as u64, n);
        let class = ring.table.class_of(&sub).expect("subgroup class exists");
        out.coeffs[class] += BigInt::from(mu) * BigInt::from(n);
    }
    Ok(out)
}

/// Rational coefficients a_C over cyclic p'-subgroup classes with
/// sum a_C m([G/C]) = 1 in the character side (Artin induction).
pub fn artin_coefficients(
    ring: &BurnsideRing,
    p: u64,
) -> Result<BTreeMap<usize, BigRational>> {
    let m = brauer_matrix(ring, p)?;
    let cols: Vec<usize> = (0..ring.class_count())
        .filter(|&i| ring.table.classes[i].is_cyclic_coprime_to(p))
        .collect();
    let sub = column_submatrix(&m, &cols);
    let target = vec![BigInt::one(); m.rows];
    let sol = solve_rational(&sub, &target).ok_or(Error::SolverFailure)?;
    Ok(cols.into_iter().zip(sol).collect())
}

/// Integer coefficients a_H over the primordial subgroup classes
/// (quasi-elementary with cyclic part of order coprime to p) with
/// sum a_H m([G/H]) = 1. Existence is a theorem, so failure to solve is
/// an implementation bug.
pub fn quasi_elementary_integral_coefficients(
    ring: &BurnsideRing,
    p: u64,
) -> Result<BTreeMap<usize, BigInt>> {
    let m = brauer_matrix(ring, p)?;
    let mut cols = Vec::new();
    for (i, class) in ring.table.classes.iter().enumerate() {
        let sub_group = ring.group.subgroup_as_group(&class.rep);
        if is_primordial(&sub_group, p)? {
            cols.push(i);
        }
    }
    let sub = column_submatrix(&m, &cols);
    let target = vec![BigInt::one(); m.rows];
    let sol = solve_integer(&sub, &target).ok_or(Error::SolverFailure)?;
    Ok(cols.into_iter().zip(sol).collect())
}

fn column_submatrix(m: &IntMatrix, cols: &[usize]) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| cols.iter().map(|&c| m.at(r, c).clone()).collect())
        .collect();
    if rows.is_empty() {
        IntMatrix::zero(0, cols.len())
    } else {
        IntMatrix::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn ring(gens: Vec<Perm>) -> BurnsideRing {
        BurnsideRing::new(Group::close(gens, 200).unwrap()).unwrap()
    }

    fn cyclic_ring(n: usize) -> BurnsideRing {
        ring(vec![Perm::from_cycles(
            n,
            &[(0..n as u16).collect::<Vec<_>>()],
        )
        .unwrap()])
    }

    fn s3_ring() -> BurnsideRing {
        ring(vec![
            Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
            Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
        ])
    }

    #[test]
    fn brauer_matrix_of_cp() {
        for p in [2u64, 3, 5] {
            let r = cyclic_ring(p as usize);
            let m = brauer_matrix(&r, p).unwrap();
            assert_eq!((m.rows, m.cols), (1, 2));
            assert_eq!(m.row(0), &[BigInt::from(p), BigInt::one()]);
        }
    }

    #[test]
    fn brauer_matrix_of_s3_at_3() {
        let r = s3_ring();
        let m = brauer_matrix(&r, 3).unwrap();
        assert_eq!(m.row_vecs(), IntMatrix::from_i64(&[
            vec![6, 3, 2, 1],
            vec![0, 1, 0, 1],
        ]).row_vecs());
        // identity row is the index row
        for (h, class) in r.table.classes.iter().enumerate() {
            assert_eq!(
                m.at(0, h),
                &BigInt::from((r.group.order() / class.order) as i64)
            );
        }
    }

    #[test]
    fn kernel_of_c2_at_2() {
        let r = cyclic_ring(2);
        let k = kernel_lattice(&r, 2).unwrap();
        assert_eq!(k.rank(), 1);
        let rel = BurnsideElement::from_i64(&[-1, 2]);
        assert!(k.contains(&rel).unwrap());
        assert_eq!(
            k.lattice,
            IntegerLattice::from_generators(2, vec![rel.coeffs])
        );
    }

    #[test]
    fn cyclic_coprime_kernel_is_zero() {
        for (n, p) in [(3usize, 2u64), (5, 3), (6, 5), (4, 3)] {
            let r = cyclic_ring(n);
            assert_eq!(kernel_lattice(&r, p).unwrap().rank(), 0);
        }
    }

    #[test]
    fn kernel_of_s3_at_3() {
        let r = s3_ring();
        let k = kernel_lattice(&r, 3).unwrap();
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&BurnsideElement::from_i64(&[-1, 0, 3, 0])).unwrap());
        assert!(k.contains(&BurnsideElement::from_i64(&[0, -1, 1, 1])).unwrap());
        assert_eq!(k.rank(), expected_kernel_rank(&r, 3));
    }

    #[test]
    fn char0_kernel_of_s3() {
        let r = s3_ring();
        let k = kernel_lattice_char0(&r);
        assert_eq!(k.rank(), 1);
        assert!(k
            .contains(&BurnsideElement::from_i64(&[1, -2, -1, 2]))
            .unwrap());
        // p coprime to |G|: the two kernels agree
        let k5 = kernel_lattice(&r, 5).unwrap();
        assert_eq!(k5.lattice, k.lattice);
        // p dividing |G|: strict inclusion
        let k3 = kernel_lattice(&r, 3).unwrap();
        assert!(k.lattice.is_sublattice_of(&k3.lattice).unwrap());
        assert_ne!(k.lattice, k3.lattice);
    }

    #[test]
    fn coprimordial_predicate() {
        assert!(is_coprimordial(&cyclic_ring(6).group, 5).unwrap());
        assert!(!is_coprimordial(&cyclic_ring(2).group, 2).unwrap());
        assert!(!is_coprimordial(&s3_ring().group, 5).unwrap());
    }

    #[test]
    fn primordial_predicate() {
        let s3 = s3_ring();
        assert!(is_primordial(&s3.group, 2).unwrap());
        assert!(!is_primordial(&s3.group, 3).unwrap());
        for p in [2u64, 3, 5] {
            let cp = cyclic_ring(p as usize);
            assert!(is_primordial(&cp.group, p).unwrap());
        }
        assert!(is_primordial(&Group::trivial(1), 7).unwrap());
    }

    #[test]
    fn mobius_witness_m2_p3() {
        let r = cyclic_ring(2);
        let w = mobius_witness(&r, 3).unwrap();
        // mu(2)[C/{e}] + 2 mu(1)[C/C_2]
        assert_eq!(w, BurnsideElement::from_i64(&[-1, 2]));
        let bv = brauer_vector(&r, 3, &w).unwrap();
        assert_eq!(bv.values, vec![BigInt::zero(), BigInt::from(2)]);
        assert!(!bv.is_zero());
    }

    #[test]
    fn mobius_witness_m4_vanishes_on_proper_restrictions() {
        // the non-squarefree case: coefficients (0, -2, 4)
        let r = cyclic_ring(4);
        let w = mobius_witness(&r, 3).unwrap();
        assert_eq!(w, BurnsideElement::from_i64(&[0, -2, 4]));
        assert!(!brauer_vector(&r, 3, &w).unwrap().is_zero());
        for i in 0..r.class_count() - 1 {
            let sub = BurnsideRing::new(
                r.group.subgroup_as_group(&r.table.classes[i].rep),
            )
            .unwrap();
            let res = crate::burnside::restrict(&r, &sub, &w).unwrap();
            assert!(brauer_vector(&sub, 3, &res).unwrap().is_zero());
        }
    }

    #[test]
    fn mobius_witness_m6_p5() {
        let r = cyclic_ring(6);
        let w = mobius_witness(&r, 5).unwrap();
        // classes ordered {e}, C2, C3, C6
        assert_eq!(w, BurnsideElement::from_i64(&[1, -2, -3, 6]));
        assert!(!brauer_vector(&r, 5, &w).unwrap().is_zero());
        // restriction to every proper subgroup maps to zero
        for i in 0..r.class_count() - 1 {
            let sub = BurnsideRing::new(
                r.group.subgroup_as_group(&r.table.classes[i].rep),
            )
            .unwrap();
            let res = crate::burnside::restrict(&r, &sub, &w).unwrap();
            assert!(brauer_vector(&sub, 5, &res).unwrap().is_zero());
        }
    }

    #[test]
    fn mobius_witness_point() {
        let r = BurnsideRing::new(Group::trivial(1)).unwrap();
        let w = mobius_witness(&r, 3).unwrap();
        assert_eq!(w, BurnsideElement::from_i64(&[1]));
        assert!(!brauer_vector(&r, 3, &w).unwrap().is_zero());
    }

    #[test]
    fn mobius_witness_rejects_bad_input() {
        assert!(matches!(
            mobius_witness(&s3_ring(), 5),
            Err(Error::NotCyclic)
        ));
        assert!(matches!(
            mobius_witness(&cyclic_ring(6), 3),
            Err(Error::PrimeDividesOrder)
        ));
    }

    #[test]
    fn artin_coefficients_examples() {
        // trivial group: a_e = 1
        let t = BurnsideRing::new(Group::trivial(1)).unwrap();
        let a = artin_coefficients(&t, 5).unwrap();
        assert_eq!(a[&0], BigRational::one());
        // C_p: a_e = 1/p
        let c3 = cyclic_ring(3);
        let a = artin_coefficients(&c3, 3).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[&0], BigRational::new(BigInt::one(), BigInt::from(3)));
        // S3 at 3: unique solution a_e = -1/3, a_C2 = 1
        let s3 = s3_ring();
        let a = artin_coefficients(&s3, 3).unwrap();
        assert_eq!(a[&0], BigRational::new(BigInt::from(-1), BigInt::from(3)));
        assert_eq!(a[&1], BigRational::one());
    }

    #[test]
    fn integral_coefficients_examples() {
        let t = BurnsideRing::new(Group::trivial(1)).unwrap();
        let a = quasi_elementary_integral_coefficients(&t, 3).unwrap();
        assert_eq!(a[&0], BigInt::one());
        // C_p: [G/G] itself is primordial, identity coefficient works
        let c3 = cyclic_ring(3);
        let a = quasi_elementary_integral_coefficients(&c3, 3).unwrap();
        let m = brauer_matrix(&c3, 3).unwrap();
        let mut total = BigInt::zero();
        for (&cls, coeff) in &a {
            total += coeff * m.at(0, cls);
        }
        assert_eq!(total, BigInt::one());
        // S3 at 3: T = {e, C2, C3}, integer solution exists
        let s3 = s3_ring();
        let a = quasi_elementary_integral_coefficients(&s3, 3).unwrap();
        assert_eq!(a.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
        let m = brauer_matrix(&s3, 3).unwrap();
        for row in 0..m.rows {
            let mut total = BigInt::zero();
            for (&cls, coeff) in &a {
                total += coeff * m.at(row, cls);
            }
            assert_eq!(total, BigInt::one());
        }
    }
}
