//! Catalog-wide structural invariants: everything here is exact and
//! complements the per-criterion acceptance suite.

use num_traits::Zero;

use brauer_core::catalog::verification_catalog;
use brauer_core::group::prime_divisors;
use brauer_core::*;

fn distinct_catalog_rings() -> Vec<(String, BurnsideRing)> {
    let mut seen: Vec<GroupSpec> = Vec::new();
    let mut out = Vec::new();
    for entry in verification_catalog() {
        if seen.contains(&entry.spec) {
            continue;
        }
        seen.push(entry.spec.clone());
        let (group, _) = build_default(&entry.spec).unwrap();
        out.push((entry.spec.label(), BurnsideRing::new(group).unwrap()));
    }
    out
}

#[test]
fn o_q_is_the_minimal_normal_subgroup_with_q_power_quotient() {
    for (label, ring) in distinct_catalog_rings() {
        let g = &ring.group;
        for q in [2u64, 3, 5] {
            let oq = g.o_q(q).unwrap();
            assert!(g.is_normal_set(&oq.elements), "{label} O^{q} not normal");
            let mut index = (g.order() / oq.order()) as u64;
            while index % q == 0 {
                index /= q;
            }
            assert_eq!(index, 1, "{label} [G:O^{q}] is not a {q}-power");
            // minimality over all normal subgroups with q-power index
            for i in ring.table.normal_classes() {
                let n = &ring.table.classes[i].rep;
                let mut idx = (g.order() / n.order()) as u64;
                while idx % q == 0 {
                    idx /= q;
                }
                if idx == 1 {
                    assert!(
                        oq.elements.iter().all(|x| n.contains(*x)),
                        "{label}: normal subgroup of {q}-power index missing O^{q}"
                    );
                }
            }
        }
    }
}

#[test]
fn kernel_rank_law_over_four_primes() {
    for (label, ring) in distinct_catalog_rings() {
        for p in [2u64, 3, 5, 7] {
            let kernel = kernel_lattice(&ring, p).unwrap();
            let expected = ring.class_count() - ring.table.count_cyclic_coprime(p);
            assert_eq!(kernel.rank(), expected, "{label} at p={p}");
        }
    }
}

#[test]
fn kernel_basis_maps_to_zero_and_is_saturated() {
    for entry in verification_catalog() {
        let (group, _) = build_default(&entry.spec).unwrap();
        let ring = BurnsideRing::new(group).unwrap();
        let kernel = kernel_lattice(&ring, entry.prime).unwrap();
        assert!(kernel.lattice.is_saturated(), "{}", entry.label);
        for b in kernel.basis_elements() {
            let bv = brauer_vector(&ring, entry.prime, &b).unwrap();
            assert!(bv.is_zero(), "{}: basis vector has nonzero image", entry.label);
        }
        // characteristic zero kernel too
        let k0 = kernel_lattice_char0(&ring);
        assert!(k0.lattice.is_saturated());
        assert_eq!(
            k0.rank(),
            ring.class_count()
                - ring
                    .table
                    .classes
                    .iter()
                    .filter(|c| c.is_cyclic)
                    .count(),
            "{}: char-0 rank law",
            entry.label
        );
    }
}

#[test]
fn mobius_witness_dies_on_every_proper_restriction() {
    for n in 2..=12u64 {
        for p in [2u64, 3, 5, 7] {
            if n % p == 0 {
                continue;
            }
            let (group, _) = build_default(&GroupSpec::Family(
                brauer_core::catalog::FamilySpec::Cyclic { n },
            ))
            .unwrap();
            let ring = BurnsideRing::new(group).unwrap();
            assert!(is_coprimordial(&ring.group, p).unwrap());
            let w = mobius_witness(&ring, p).unwrap();
            let bv = brauer_vector(&ring, p, &w).unwrap();
            assert!(!bv.is_zero(), "C{n} p={p}: witness image vanishes");
            for i in 0..ring.class_count() - 1 {
                let sub = BurnsideRing::new(
                    ring.group
                        .subgroup_as_group(&ring.table.classes[i].rep),
                )
                .unwrap();
                let res = restrict(&ring, &sub, &w).unwrap();
                let rb = brauer_vector(&sub, p, &res).unwrap();
                assert!(
                    rb.is_zero(),
                    "C{n} p={p}: witness survives restriction to class {i}"
                );
            }
        }
    }
}

#[test]
fn noprimss_holds_for_every_applicable_catalog_entry() {
    let mut applicable = 0;
    for entry in verification_catalog() {
        let (group, _) = build_default(&entry.spec).unwrap();
        let ring = BurnsideRing::new(group).unwrap();
        let g = &ring.group;
        let p = entry.prime;
        let oq = g.o_q(p).unwrap();
        let p_qe = g.subgroup_as_group(&oq).is_cyclic();
        let excluded =
            g.order() as u64 == p || (g.is_cyclic() && (g.order() as u64) % p != 0);
        if !p_qe || excluded {
            continue;
        }
        applicable += 1;
        let (lattice, cert) = noprimss_sublattice(&ring, p).unwrap();
        assert!(cert.holds(), "{}: certificate fails", entry.label);
        let kernel = kernel_lattice(&ring, p).unwrap();
        assert_eq!(lattice, kernel.lattice, "{}", entry.label);
        assert!(prim_quotient(&ring, p).unwrap().is_trivial(), "{}", entry.label);
    }
    // C4, C6@2, C6@3, C8, C9, C10@2, C10@5, C12@2, C12@3, V4, D4, Q8,
    // S3@2, C7:C3@3 all qualify
    assert!(applicable >= 14, "only {applicable} applicable entries");
}

#[test]
fn unit_relation_generates_for_non_primordial_nontrivial_prim() {
    for entry in verification_catalog() {
        let (group, _) = build_default(&entry.spec).unwrap();
        let ring = BurnsideRing::new(group).unwrap();
        let p = entry.prime;
        if is_primordial(&ring.group, p).unwrap() {
            continue;
        }
        let expected = expected_prim(&ring, p).unwrap();
        if !matches!(expected, Verdict::Z | Verdict::ModQ(_)) {
            continue;
        }
        let rel = unit_coefficient_relation(&ring, p).unwrap();
        assert_eq!(
            rel.coeffs[ring.table.full_class()],
            num_bigint::BigInt::from(1)
        );
        let kernel = kernel_lattice(&ring, p).unwrap();
        assert!(kernel.contains(&rel).unwrap());
        let imprim = imprim_lattice(&ring, p, ImprimMode::MaximalMinimal).unwrap();
        let spanned = imprim.sum(&IntegerLattice::from_generators(
            ring.class_count(),
            vec![rel.coeffs.clone()],
        ));
        let quotient = quotient_invariants(&kernel.lattice, &spanned).unwrap();
        assert!(
            quotient.is_trivial(),
            "{}: unit relation does not generate",
            entry.label
        );
    }
}

#[test]
fn primordial_subgroup_classes_match_structural_flags() {
    // T-membership for the integral induction is the same predicate as
    // the structural quasi-elementary flags
    for (label, ring) in distinct_catalog_rings() {
        for p in [2u64, 3] {
            for class in &ring.table.classes {
                let sub = ring.group.subgroup_as_group(&class.rep);
                let direct = is_primordial(&sub, p).unwrap();
                let flags = sub.structural_predicates(p).unwrap();
                let via_flags = flags
                    .quasi_elementary
                    .iter()
                    .any(|(q, &cyc)| cyc && flags.o_q_orders[q] % p != 0);
                assert_eq!(direct, via_flags, "{label} subgroup order {}", class.order);
            }
        }
    }
}

#[test]
fn artin_coefficients_solve_the_unit_for_the_catalog() {
    for entry in verification_catalog() {
        let (group, _) = build_default(&entry.spec).unwrap();
        let ring = BurnsideRing::new(group).unwrap();
        let coeffs = artin_coefficients(&ring, entry.prime).unwrap();
        let m = brauer_matrix(&ring, entry.prime).unwrap();
        for row in 0..m.rows {
            let mut total = num_rational::BigRational::zero();
            for (&cls, c) in &coeffs {
                total += c * num_rational::BigRational::from(m.at(row, cls).clone());
            }
            assert!(
                total == num_rational::BigRational::from(num_bigint::BigInt::from(1)),
                "{}: row {row}",
                entry.label
            );
        }
        // coefficients are supported on cyclic p'-classes only
        for &cls in coeffs.keys() {
            assert!(ring.table.classes[cls].is_cyclic_coprime_to(entry.prime));
        }
    }
}
