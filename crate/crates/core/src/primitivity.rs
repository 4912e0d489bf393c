//! The imprimitive sublattice (relations induced from proper subgroups
//! or inflated from proper quotients), the primitive quotient, the
//! classification of when that quotient is nontrivial, and the explicit
//! generators available in closed form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::burnside::{induce, inflate, BurnsideElement, BurnsideRing};
use crate::error::{Error, Result};
use crate::group::{is_prime, prime_divisors, ElemId, Group};
use crate::lattice::{quotient_invariants, AbelianInvariants, IntegerLattice};
use crate::modular::{
    is_primordial, kernel_lattice, kernel_lattice_char0, primordial_witness, RelationLattice,
};

/// Which subquotients feed the imprimitive sublattice. Maximal
/// subgroups plus minimal normal subgroups span the same lattice as all
/// proper subquotients, by transitivity of induction and inflation; the
/// all-proper mode exists to verify exactly that.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ImprimMode {
    MaximalMinimal,
    AllProper,
}

/// Classification verdict for the primitive quotient.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Z,
    ModQ(u64),
    Trivial,
    CharZeroEquivalent,
    OutOfClassification,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Z => write!(f, "Z"),
            Verdict::ModQ(q) => write!(f, "Z/{q}"),
            Verdict::Trivial => write!(f, "trivial"),
            Verdict::CharZeroEquivalent => write!(f, "char-zero-equivalent"),
            Verdict::OutOfClassification => write!(f, "out-of-classification"),
        }
    }
}

/// Full analysis of one (group, prime) pair.
#[derive(Clone, Debug)]
pub struct PrimReport {
    pub prime: u64,
    pub group_order: usize,
    pub class_count: usize,
    pub cyclic_p_prime_count: usize,
    pub kernel: RelationLattice,
    pub imprim: IntegerLattice,
    pub prim: AbelianInvariants,
    pub expected: Verdict,
    pub generator: Option<BurnsideElement>,
    pub generator_generates: Option<bool>,
    pub matches: bool,
}

/// Sublattice of relations induced from proper subgroups and inflated
/// from proper quotients.
pub fn imprim_lattice(ring: &BurnsideRing, p: u64, mode: ImprimMode) -> Result<IntegerLattice> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let sub_classes: Vec<usize> = match mode {
        ImprimMode::MaximalMinimal => ring.table.maximal_classes(),
        ImprimMode::AllProper => (0..ring.table.full_class()).collect(),
    };
    for i in sub_classes {
        let sub_group = ring.group.subgroup_as_group(&ring.table.classes[i].rep);
        let sub_ring = BurnsideRing::new(sub_group)?;
        let k = kernel_lattice(&sub_ring, p)?;
        for b in k.basis_elements() {
            rows.push(induce(&sub_ring, ring, &b)?.coeffs);
        }
    }
    let normal_classes: Vec<usize> = match mode {
        ImprimMode::MaximalMinimal => ring.table.minimal_normal_classes(),
        ImprimMode::AllProper => ring.table.normal_classes(),
    };
    for i in normal_classes {
        let (q, proj) = ring.group.quotient(&ring.table.classes[i].rep)?;
        let quo_ring = BurnsideRing::new(q)?;
        let k = kernel_lattice(&quo_ring, p)?;
        for b in k.basis_elements() {
            rows.push(inflate(&proj, &quo_ring, ring, &b)?.coeffs);
        }
    }
    Ok(IntegerLattice::from_generators(ring.class_count(), rows))
}

/// Abelian invariants of kernel / imprimitive sublattice.
pub fn prim_quotient(ring: &BurnsideRing, p: u64) -> Result<AbelianInvariants> {
    let kernel = kernel_lattice(ring, p)?;
    let imprim = imprim_lattice(ring, p, ImprimMode::MaximalMinimal)?;
    quotient_invariants(&kernel.lattice, &imprim)
}

fn subgroup_order_is_prime_power(order: u64, p: u64) -> Option<u32> {
    let mut n = order;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    (n == 1).then_some(e)
}

/// Whether the group is an elementary abelian l-group, returning l.
fn elementary_abelian_exponent(g: &Group) -> Option<u64> {
    if g.order() == 1 || !g.is_abelian() {
        return None;
    }
    let primes = prime_divisors(g.order() as u64);
    if primes.len() != 1 {
        return None;
    }
    let l = primes[0];
    let ok = (1..g.order() as ElemId).all(|i| u64::from(g.order_of(i)) == l);
    ok.then_some(l)
}

/// One direct factor of the doubled semidirect case: either a bare C_l
/// (the exponent-zero actor, vacuously faithful) or C_l x| C_{q^r} with
/// r >= 1, normal Sylow-l of prime order l, cyclic Sylow-q and trivial
/// centre (faithful action).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum DoubledFactor {
    Bare { l: u64 },
    Twisted { l: u64, q: u64 },
}

impl DoubledFactor {
    fn base_prime(self) -> u64 {
        match self {
            DoubledFactor::Bare { l } | DoubledFactor::Twisted { l, .. } => l,
        }
    }
}

fn doubled_factor_shape(g: &Group) -> Option<DoubledFactor> {
    let order = g.order() as u64;
    if is_prime(order) {
        return Some(DoubledFactor::Bare { l: order });
    }
    let primes = prime_divisors(order);
    if primes.len() != 2 {
        return None;
    }
    for &l in &primes {
        if order % (l * l) == 0 {
            continue;
        }
        let q = if primes[0] == l { primes[1] } else { primes[0] };
        let qr = order / l;
        let r = subgroup_order_is_prime_power(qr, q)?;
        if r == 0 {
            return None;
        }
        // normal Sylow-l generated by any element of order l
        let x = (0..g.order() as ElemId).find(|&i| u64::from(g.order_of(i)) == l)?;
        let syl_l = g.subgroup_from(&[x]);
        if !g.is_normal_set(&syl_l.elements) {
            continue;
        }
        // cyclic Sylow-q
        if !(0..g.order() as ElemId).any(|i| u64::from(g.order_of(i)) == qr) {
            return None;
        }
        // faithful action: trivial centre
        let all: Vec<ElemId> = (0..g.order() as ElemId).collect();
        if g.centralizer(&all).len() != 1 {
            return None;
        }
        return Some(DoubledFactor::Twisted { l, q });
    }
    None
}

/// Decision procedure for the expected primitive quotient.
pub fn expected_prim(ring: &BurnsideRing, p: u64) -> Result<Verdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let g = &ring.group;
    let order = g.order() as u64;

    // cyclic of order p
    if order == p {
        return Ok(Verdict::Z);
    }
    // p-quasi-elementary: full-rank saturated imprimitive sublattice
    if g.is_q_quasi_elementary(p)? {
        return Ok(Verdict::Trivial);
    }
    // quasi-elementary of order coprime to p: kernel equals the
    // characteristic-zero kernel, nothing new to classify
    if order % p != 0 {
        let qe = prime_divisors(order)
            .into_iter()
            .map(|q| g.is_q_quasi_elementary(q))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .any(|b| b);
        if qe {
            return Ok(Verdict::CharZeroEquivalent);
        }
    }

    if g.is_soluble() {
        // (C_l)^d x| H with H acting faithfully and irreducibly
        for i in ring.table.minimal_normal_classes() {
            let w = &ring.table.classes[i].rep;
            let w_group = g.subgroup_as_group(w);
            if elementary_abelian_exponent(&w_group).is_none() {
                continue;
            }
            // faithful: the centralizer of W is W itself
            let cent = g.centralizer(&w.elements);
            if cent != w.elements {
                continue;
            }
            // irreducible: automatic, W is a minimal normal subgroup
            let (h, _) = g.quotient(w)?;
            if let Some(q) = primordial_witness(&h, p)? {
                if h.is_cyclic() && (h.order() as u64) % p != 0 {
                    return Ok(Verdict::Z);
                }
                return Ok(Verdict::ModQ(q));
            }
        }
        // (C_l x| C_{q^r}) x (C_l x| C_{q^s}) with faithful actions, l != p
        let normals = ring.table.normal_classes();
        for (ai, &a) in normals.iter().enumerate() {
            for &b in &normals[ai + 1..] {
                let (ca, cb) = (&ring.table.classes[a], &ring.table.classes[b]);
                if ca.order * cb.order != g.order() {
                    continue;
                }
                let inter: Vec<ElemId> = ca
                    .rep
                    .elements
                    .iter()
                    .copied()
                    .filter(|x| cb.rep.contains(*x))
                    .collect();
                if inter.len() != 1 {
                    continue;
                }
                let fa = doubled_factor_shape(&g.subgroup_as_group(&ca.rep));
                let fb = doubled_factor_shape(&g.subgroup_as_group(&cb.rep));
                if let (Some(sa), Some(sb)) = (fa, fb) {
                    if sa.base_prime() != sb.base_prime() || sa.base_prime() == p {
                        continue;
                    }
                    let q = match (sa, sb) {
                        (DoubledFactor::Twisted { q: q1, .. }, DoubledFactor::Twisted { q: q2, .. }) => {
                            (q1 == q2).then_some(q1)
                        }
                        (DoubledFactor::Twisted { q, .. }, DoubledFactor::Bare { .. })
                        | (DoubledFactor::Bare { .. }, DoubledFactor::Twisted { q, .. }) => Some(q),
                        (DoubledFactor::Bare { .. }, DoubledFactor::Bare { .. }) => None,
                    };
                    if let Some(q) = q {
                        return Ok(Verdict::ModQ(q));
                    }
                }
            }
        }
        return Ok(Verdict::Trivial);
    }

    // insoluble: unique non-abelian minimal normal subgroup S^d with
    // trivial centralizer and quasi-elementary quotient of p'-cyclic part
    let minimals = ring.table.minimal_normal_classes();
    if minimals.len() == 1 {
        let n = &ring.table.classes[minimals[0]].rep;
        let n_group = g.subgroup_as_group(n);
        let nonabelian = !n_group.is_abelian();
        let faithful = g.centralizer(&n.elements).len() == 1;
        if nonabelian && faithful {
            let (h, _) = g.quotient(n)?;
            if primordial_witness(&h, p)?.is_some() {
                // value known only when every proper quotient is cyclic
                // of order coprime to p
                let all_cyclic = ring
                    .table
                    .normal_classes()
                    .into_iter()
                    .map(|i| {
                        let (q, _) = g.quotient(&ring.table.classes[i].rep)?;
                        Ok(q.is_cyclic() && (q.order() as u64) % p != 0)
                    })
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .all(|b| b);
                if all_cyclic {
                    return Ok(Verdict::Z);
                }
            }
        }
    }
    Ok(Verdict::OutOfClassification)
}

/// Closed-form generator of the primitive quotient for the two families
/// that admit one: C_p itself, and C_p x| C_{q^r} with faithful action.
pub fn explicit_generator(ring: &BurnsideRing, p: u64) -> Result<BurnsideElement> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let g = &ring.group;
    let order = g.order() as u64;
    let n = ring.class_count();
    if order == p {
        // p[C_p] - [{e}]
        let mut out = BurnsideElement::zero(n);
        out.coeffs[0] = BigInt::from(-1);
        out.coeffs[n - 1] = BigInt::from(p);
        return Ok(out);
    }
    // C_p x| C_{q^r}: order p*q^r, normal Sylow-p of order exactly p
    if order % p != 0 || (order / p) % p == 0 {
        return Err(Error::NotInFamily);
    }
    let rest = order / p;
    let qs = prime_divisors(rest);
    if qs.len() != 1 || qs[0] == p {
        return Err(Error::NotInFamily);
    }
    let _q = qs[0];
    let base_class = (0..n).find(|&i| {
        ring.table.classes[i].order as u64 == p && ring.table.classes[i].is_normal
    });
    let Some(base_class) = base_class else {
        return Err(Error::NotInFamily);
    };
    let actor_class = (0..n).find(|&i| {
        ring.table.classes[i].order as u64 == rest && ring.table.classes[i].is_cyclic
    });
    let Some(actor_class) = actor_class else {
        return Err(Error::NotInFamily);
    };
    // faithful: trivial centre
    let all: Vec<ElemId> = (0..g.order() as ElemId).collect();
    if g.centralizer(&all).len() != 1 {
        return Err(Error::NotInFamily);
    }
    if (p - 1) % rest != 0 {
        return Err(Error::NonIntegralCoefficient);
    }
    let mut out = BurnsideElement::zero(n);
    out.coeffs[actor_class] = BigInt::from(-1);
    out.coeffs[base_class] = BigInt::from((p - 1) / rest);
    out.coeffs[n - 1] = BigInt::one();
    Ok(out)
}

/// A kernel element with coefficient exactly 1 on [G/G], found by
/// combining kernel basis vectors. For a non-primordial group its class
/// generates the primitive quotient.
pub fn unit_coefficient_relation(ring: &BurnsideRing, p: u64) -> Result<BurnsideElement> {
    let kernel = kernel_lattice(ring, p)?;
    let last = ring.table.full_class();
    let rows = kernel.lattice.basis_rows();
    if rows.is_empty() {
        return Err(Error::NoUnitRelation);
    }
    // extended gcd over the [G/G]-coefficients of the basis
    let mut g = BigInt::zero();
    let mut combo: Vec<BigInt> = vec![BigInt::zero(); rows.len()];
    for (i, row) in rows.iter().enumerate() {
        let c = row[last].clone();
        if c.is_zero() {
            continue;
        }
        if g.is_zero() {
            g = c;
            combo = vec![BigInt::zero(); rows.len()];
            combo[i] = BigInt::one();
            continue;
        }
        let ext = g.extended_gcd(&c);
        for entry in combo.iter_mut() {
            *entry *= &ext.x;
        }
        combo[i] = ext.y.clone();
        g = ext.gcd;
    }
    if g != BigInt::one() && g != BigInt::from(-1) {
        return Err(Error::NoUnitRelation);
    }
    if g == BigInt::from(-1) {
        for entry in combo.iter_mut() {
            *entry = -entry.clone();
        }
    }
    let mut out = vec![BigInt::zero(); ring.class_count()];
    for (c, row) in combo.iter().zip(&rows) {
        for (o, v) in out.iter_mut().zip(row) {
            *o += c * v;
        }
    }
    debug_assert_eq!(out[last], BigInt::one());
    Ok(BurnsideElement { coeffs: out })
}

/// Certification record for the full-rank saturated imprimitive
/// sublattice of a p-quasi-elementary group.
#[derive(Clone, Debug)]
pub struct NoprimssCertificate {
    pub rank: usize,
    pub expected_rank: usize,
    pub all_in_kernel: bool,
    pub saturated: bool,
}

impl NoprimssCertificate {
    pub fn holds(&self) -> bool {
        self.rank == self.expected_rank && self.all_in_kernel && self.saturated
    }
}

/// For a p-quasi-elementary group G = C_m x| P (not C_p, not cyclic of
/// order coprime to p), builds the sublattice spanned by
/// p[C_s P_i] - [C_s P_{i-1}] along a fixed maximal chain of
/// p-subgroups, plus [C_s P_{i,0}] - [C_s P_{i,j}] over the remaining
/// same-order classes, and certifies full rank and saturation.
pub fn noprimss_sublattice(
    ring: &BurnsideRing,
    p: u64,
) -> Result<(IntegerLattice, NoprimssCertificate)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let g = &ring.group;
    let order = g.order() as u64;
    let c_part = g.o_q(p)?;
    let c_group = g.subgroup_as_group(&c_part);
    if !c_group.is_cyclic() {
        return Err(Error::NotPQuasiElementary(p));
    }
    if order == p || (g.is_cyclic() && order % p != 0) {
        return Err(Error::Validation(
            "construction needs a proper subquotient carrying relations".into(),
        ));
    }
    let m = c_part.order() as u64;
    debug_assert_ne!(m % p, 0);
    let p_power = (order / m) as usize;
    let mut k = 0u32;
    let mut t = p_power;
    while t > 1 {
        t /= p as usize;
        k += 1;
    }
    debug_assert_eq!((p as usize).pow(k), p_power);

    // fixed Sylow p-subgroup: first class of the right order
    let syl_class = (0..ring.class_count())
        .find(|&i| ring.table.classes[i].order == p_power)
        .expect("Sylow subgroup class exists");
    let syl = &ring.table.classes[syl_class].rep;
    let syl_group = g.subgroup_as_group(syl);
    let syl_ids: Vec<ElemId> = syl.elements.clone();

    // all subgroups of P as sorted G-id sets, grouped by order
    let p_table = crate::subgroups::subgroup_classes(&syl_group)?;
    let mut p_subgroups: Vec<Vec<ElemId>> = Vec::new();
    for class in &p_table.classes {
        for member in &class.members {
            let g_ids: Vec<ElemId> = {
                let mut v: Vec<ElemId> =
                    member.iter().map(|&lid| syl_ids[lid as usize]).collect();
                v.sort_unstable();
                v
            };
            p_subgroups.push(g_ids);
        }
    }
    p_subgroups.sort();

    // greedy maximal chain {e} = chain[0] < chain[1] < ... < chain[k] = P
    let mut chain: Vec<Vec<ElemId>> = vec![vec![g.identity_id()]];
    for i in 1..=k {
        let target = (p as usize).pow(i);
        let prev = chain.last().unwrap().clone();
        let next = p_subgroups
            .iter()
            .find(|s| s.len() == target && prev.iter().all(|x| s.binary_search(x).is_ok()))
            .expect("p-groups have subgroups of every intermediate order")
            .clone();
        chain.push(next);
    }

    // distinct G-classes of subgroups of P per level, lex-least member first
    let mut level_classes: Vec<Vec<(usize, Vec<ElemId>)>> = vec![Vec::new(); k as usize + 1];
    for s in &p_subgroups {
        let mut lvl = 0;
        let mut t = s.len();
        while t > 1 {
            t /= p as usize;
            lvl += 1;
        }
        let class = ring.table.class_of(s).expect("subgroup class exists");
        if !level_classes[lvl].iter().any(|(c, _)| *c == class) {
            level_classes[lvl].push((class, s.clone()));
        }
    }

    let c_ids = &c_part.elements;
    let c_gen = c_ids
        .iter()
        .copied()
        .find(|&x| u64::from(g.order_of(x)) == m)
        .expect("cyclic part has a generator");

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut all_in_kernel = true;
    let kernel = kernel_lattice(ring, p)?;
    let push_relation = |coeffs: Vec<BigInt>,
                             rows: &mut Vec<Vec<BigInt>>,
                             all_in_kernel: &mut bool|
     -> Result<()> {
        if !kernel.lattice.contains(&coeffs)? {
            *all_in_kernel = false;
        }
        rows.push(coeffs);
        Ok(())
    };

    for s in divisors(m) {
        // unique subgroup of C of order s
        let c_s = {
            let mut power = g.identity_id();
            for _ in 0..(m / s) {
                power = g.mul(power, c_gen);
            }
            g.close_subset(&[power])
        };
        debug_assert_eq!(c_s.len() as u64, s);
        let product_class = |p_sub: &[ElemId]| -> usize {
            let mut seed: Vec<ElemId> = c_s.clone();
            seed.extend_from_slice(p_sub);
            let h = g.close_subset(&seed);
            ring.table.class_of(&h).expect("product subgroup class exists")
        };
        for i in 1..=k as usize {
            // chain relation p[C_s P_i] - [C_s P_{i-1}]
            let hi = product_class(&chain[i]);
            let lo = product_class(&chain[i - 1]);
            let mut coeffs = vec![BigInt::zero(); ring.class_count()];
            coeffs[hi] += BigInt::from(p);
            coeffs[lo] -= BigInt::one();
            push_relation(coeffs, &mut rows, &mut all_in_kernel)?;
            // same-order swaps [C_s P_{i,0}] - [C_s P_{i,j}]
            let chain_class = ring
                .table
                .class_of(&chain[i])
                .expect("chain member class exists");
            for (qc, q_rep) in &level_classes[i] {
                if *qc == chain_class {
                    continue;
                }
                let other = product_class(q_rep);
                let mut coeffs = vec![BigInt::zero(); ring.class_count()];
                coeffs[hi] += BigInt::one();
                coeffs[other] -= BigInt::one();
                push_relation(coeffs, &mut rows, &mut all_in_kernel)?;
            }
        }
    }

    let lattice = IntegerLattice::from_generators(ring.class_count(), rows);
    let expected_rank = ring.class_count() - ring.table.count_cyclic_coprime(p);
    let cert = NoprimssCertificate {
        rank: lattice.rank(),
        expected_rank,
        all_in_kernel,
        saturated: lattice.is_saturated(),
    };
    Ok((lattice, cert))
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Full analysis: kernel, imprimitive sublattice, primitive quotient,
/// expected verdict, generator when one applies, and the match flag.
pub fn analyze(ring: &BurnsideRing, p: u64, mode: ImprimMode) -> Result<PrimReport> {
    let kernel = kernel_lattice(ring, p)?;
    let imprim = imprim_lattice(ring, p, mode)?;
    if !imprim.is_sublattice_of(&kernel.lattice)? {
        return Err(Error::Validation(
            "imprimitive sublattice escapes the kernel".into(),
        ));
    }
    let prim = quotient_invariants(&kernel.lattice, &imprim)?;
    let expected = expected_prim(ring, p)?;

    let primordial = is_primordial(&ring.group, p)?;
    let generator = match explicit_generator(ring, p) {
        Ok(gen) => Some(gen),
        Err(Error::NotInFamily) => {
            if !primordial && matches!(expected, Verdict::Z | Verdict::ModQ(_)) {
                Some(unit_coefficient_relation(ring, p)?)
            } else {
                None
            }
        }
        Err(e) => return Err(e),
    };
    let generator_generates = match &generator {
        Some(gen) => {
            if !kernel.contains(gen)? {
                Some(false)
            } else {
                let spanned = imprim.sum(&IntegerLattice::from_generators(
                    ring.class_count(),
                    vec![gen.coeffs.clone()],
                ));
                Some(quotient_invariants(&kernel.lattice, &spanned)?.is_trivial())
            }
        }
        None => None,
    };

    let matches = match expected {
        Verdict::Z => prim == AbelianInvariants(vec![BigInt::zero()]),
        Verdict::ModQ(q) => prim == AbelianInvariants(vec![BigInt::from(q)]),
        Verdict::Trivial => prim.is_trivial(),
        Verdict::CharZeroEquivalent => {
            kernel_lattice_char0(ring).lattice == kernel.lattice
        }
        Verdict::OutOfClassification => true,
    } && generator_generates.unwrap_or(true);

    Ok(PrimReport {
        prime: p,
        group_order: ring.group.order(),
        class_count: ring.class_count(),
        cyclic_p_prime_count: ring.table.count_cyclic_coprime(p),
        kernel,
        imprim,
        prim,
        expected,
        generator,
        generator_generates,
        matches,
    })
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

    fn f21_ring() -> BurnsideRing {
        // C_7 x| C_3 via the affine action x -> 2x + b on Z/7
        let translate = Perm::from_cycles(7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap();
        let double = Perm::new(vec![0, 2, 4, 6, 1, 3, 5]).unwrap();
        ring(vec![translate, double])
    }

    #[test]
    fn imprim_of_cp_is_zero() {
        for p in [2u64, 3, 5] {
            let r = cyclic_ring(p as usize);
            let im = imprim_lattice(&r, p, ImprimMode::MaximalMinimal).unwrap();
            assert_eq!(im.rank(), 0);
        }
    }

    #[test]
    fn imprim_of_s3_at_3() {
        let r = s3_ring();
        let im = imprim_lattice(&r, 3, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(im.rank(), 1);
        assert!(im
            .contains(&BurnsideElement::from_i64(&[-1, 0, 3, 0]).coeffs)
            .unwrap());
        let all = imprim_lattice(&r, 3, ImprimMode::AllProper).unwrap();
        assert_eq!(im, all);
    }

    #[test]
    fn imprim_of_c4_at_2_is_full_kernel() {
        let r = cyclic_ring(4);
        let im = imprim_lattice(&r, 2, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(im.rank(), 2);
        assert!(im
            .contains(&BurnsideElement::from_i64(&[-1, 2, 0]).coeffs)
            .unwrap());
        assert!(im
            .contains(&BurnsideElement::from_i64(&[0, -1, 2]).coeffs)
            .unwrap());
        let k = kernel_lattice(&r, 2).unwrap();
        assert_eq!(im, k.lattice);
    }

    #[test]
    fn prim_of_cp_is_z() {
        for p in [2u64, 3, 5] {
            let r = cyclic_ring(p as usize);
            let inv = prim_quotient(&r, p).unwrap();
            assert_eq!(inv, AbelianInvariants(vec![BigInt::zero()]));
        }
    }

    #[test]
    fn prim_of_s3_at_3_is_z() {
        let r = s3_ring();
        let inv = prim_quotient(&r, 3).unwrap();
        assert_eq!(inv, AbelianInvariants(vec![BigInt::zero()]));
    }

    #[test]
    fn expected_verdicts() {
        assert_eq!(expected_prim(&cyclic_ring(3), 3).unwrap(), Verdict::Z);
        assert_eq!(expected_prim(&cyclic_ring(4), 2).unwrap(), Verdict::Trivial);
        assert_eq!(expected_prim(&cyclic_ring(6), 5).unwrap(), Verdict::Trivial);
        assert_eq!(expected_prim(&s3_ring(), 3).unwrap(), Verdict::Z);
        assert_eq!(expected_prim(&s3_ring(), 2).unwrap(), Verdict::Trivial);
        assert_eq!(
            expected_prim(&s3_ring(), 5).unwrap(),
            Verdict::CharZeroEquivalent
        );
        // C_7 x| C_3 at p = 3 is 3-quasi-elementary (O^3 = C_7 is
        // cyclic), so the full-rank saturated sublattice forces trivial
        assert_eq!(expected_prim(&f21_ring(), 3).unwrap(), Verdict::Trivial);
        // at p = 7 it is the d = 1 semidirect case with cyclic H = C_3
        assert_eq!(expected_prim(&f21_ring(), 7).unwrap(), Verdict::Z);
    }

    #[test]
    fn f21_at_3_computed_prim_is_trivial() {
        let r = f21_ring();
        let report = analyze(&r, 3, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(report.kernel.rank(), 2);
        assert!(report.prim.is_trivial());
        assert!(report.matches);
        // classes in canonical order: {e}, C_3, C_7, G
        // the two generators: induced 3[C_3]-[e] and inflated 3[G]-[C_7]
        assert!(report
            .imprim
            .contains(&BurnsideElement::from_i64(&[-1, 3, 0, 0]).coeffs)
            .unwrap());
        assert!(report
            .imprim
            .contains(&BurnsideElement::from_i64(&[0, 0, -1, 3]).coeffs)
            .unwrap());
    }

    #[test]
    fn f21_at_7_has_prim_z_with_closed_form_generator() {
        let r = f21_ring();
        let report = analyze(&r, 7, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(report.prim, AbelianInvariants(vec![BigInt::zero()]));
        assert!(report.matches);
        let gen = explicit_generator(&r, 7).unwrap();
        // -[C_3] + 2[C_7] + [G] over classes ({e}, C_3, C_7, G)
        assert_eq!(gen, BurnsideElement::from_i64(&[0, -1, 2, 1]));
        assert_eq!(report.generator.unwrap(), gen);
        assert_eq!(report.generator_generates, Some(true));
    }

    #[test]
    fn explicit_generator_families() {
        let c3 = cyclic_ring(3);
        assert_eq!(
            explicit_generator(&c3, 3).unwrap(),
            BurnsideElement::from_i64(&[-1, 3])
        );
        let s3 = s3_ring();
        assert_eq!(
            explicit_generator(&s3, 3).unwrap(),
            BurnsideElement::from_i64(&[0, -1, 1, 1])
        );
        assert!(matches!(
            explicit_generator(&s3, 2),
            Err(Error::NotInFamily)
        ));
        assert!(matches!(
            explicit_generator(&f21_ring(), 3),
            Err(Error::NotInFamily)
        ));
    }

    #[test]
    fn unit_relation_exists_for_non_primordial() {
        let s3 = s3_ring();
        let rel = unit_coefficient_relation(&s3, 3).unwrap();
        assert_eq!(rel.coeffs[3], BigInt::one());
        assert!(kernel_lattice(&s3, 3).unwrap().contains(&rel).unwrap());
        // primordial groups have no unit relation
        assert!(matches!(
            unit_coefficient_relation(&cyclic_ring(3), 3),
            Err(Error::NoUnitRelation)
        ));
        assert!(matches!(
            unit_coefficient_relation(&cyclic_ring(4), 2),
            Err(Error::NoUnitRelation)
        ));
    }

    #[test]
    fn noprimss_certificates() {
        let c4 = cyclic_ring(4);
        let (lat, cert) = noprimss_sublattice(&c4, 2).unwrap();
        assert!(cert.holds());
        assert_eq!(lat.rank(), 2);
        assert_eq!(lat, kernel_lattice(&c4, 2).unwrap().lattice);

        let s3 = s3_ring();
        let (lat, cert) = noprimss_sublattice(&s3, 2).unwrap();
        assert!(cert.holds());
        assert_eq!(lat, kernel_lattice(&s3, 2).unwrap().lattice);

        let f21 = f21_ring();
        let (lat, cert) = noprimss_sublattice(&f21, 3).unwrap();
        assert!(cert.holds());
        assert_eq!(lat, kernel_lattice(&f21, 3).unwrap().lattice);

        assert!(noprimss_sublattice(&cyclic_ring(3), 3).is_err());
        assert!(matches!(
            noprimss_sublattice(&s3, 3),
            Err(Error::NotPQuasiElementary(3))
        ));
    }

    #[test]
    fn analyze_c2_at_2() {
        let r = cyclic_ring(2);
        let report = analyze(&r, 2, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(report.kernel.rank(), 1);
        assert_eq!(report.imprim.rank(), 0);
        assert_eq!(report.prim, AbelianInvariants(vec![BigInt::zero()]));
        assert_eq!(report.expected, Verdict::Z);
        assert!(report.matches);
    }

    #[test]
    fn s3_times_c3_doubled_shape_with_bare_factor() {
        // (C_3 x| C_2) x (C_3 x| C_{2^0}): the exponent-zero factor is a
        // bare C_3; the primitive quotient is still Z/2
        let g = {
            let a = Perm::from_cycles(6, &[vec![0, 1, 2]]).unwrap();
            let b = Perm::from_cycles(6, &[vec![0, 1]]).unwrap();
            let c = Perm::from_cycles(6, &[vec![3, 4, 5]]).unwrap();
            Group::close(vec![a, b, c], 50).unwrap()
        };
        let r = BurnsideRing::new(g).unwrap();
        assert_eq!(expected_prim(&r, 2).unwrap(), Verdict::ModQ(2));
        let report = analyze(&r, 2, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(report.prim, AbelianInvariants(vec![BigInt::from(2)]));
        assert!(report.matches);
        // at p = 3 the base prime equals p, so the shape is excluded
        // and the quotient really is trivial
        assert_eq!(expected_prim(&r, 3).unwrap(), Verdict::Trivial);
        let report = analyze(&r, 3, ImprimMode::MaximalMinimal).unwrap();
        assert!(report.prim.is_trivial());
        assert!(report.matches);
    }

    #[test]
    fn analyze_c6_at_5() {
        let r = cyclic_ring(6);
        let report = analyze(&r, 5, ImprimMode::MaximalMinimal).unwrap();
        assert_eq!(report.kernel.rank(), 0);
        assert!(report.prim.is_trivial());
        assert!(report.matches);
    }
}
