//! Executable functor axioms: each check runs an exhaustive or
//! seeded-pseudorandom suite over one group and reports failures as
//! strings. Used by the test suites and by the CLI selftest command.

use num_bigint::BigInt;

use crate::burnside::{induce, inflate, restrict, BurnsideElement, BurnsideRing};
use crate::error::Result;
use crate::group::ElemId;
use crate::modular::{brauer_matrix, brauer_vector};

/// Outcome of one axiom family on one group.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Deterministic splitmix64 stream for seeded coefficient choices.
pub struct TinyRng(u64);

impl TinyRng {
    pub fn new(seed: u64) -> Self {
        TinyRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn coeff(&mut self) -> i64 {
        (self.next_u64() % 11) as i64 - 5
    }

    pub fn element(&mut self, n: usize) -> BurnsideElement {
        BurnsideElement {
            coeffs: (0..n).map(|_| BigInt::from(self.coeff())).collect(),
        }
    }
}

fn sub_ring(ring: &BurnsideRing, class: usize) -> Result<BurnsideRing> {
    BurnsideRing::new(
        ring.group
            .subgroup_as_group(&ring.table.classes[class].rep),
    )
}

/// Mackey condition: restriction of an induced basis element matches
/// the explicit double-coset expansion, for every pair of subgroup
/// classes and every basis element of the inner ring.
pub fn check_mackey(ring: &BurnsideRing) -> Result<AxiomReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    let g = &ring.group;
    for h_class in 0..ring.class_count() {
        let h_ring = sub_ring(ring, h_class)?;
        let h_in_g: Vec<ElemId> = h_ring
            .group
            .elements()
            .iter()
            .map(|p| g.id_of(p).unwrap())
            .collect();
        for k_class in 0..ring.class_count() {
            let k_ring = sub_ring(ring, k_class)?;
            let k_in_g: Vec<ElemId> = k_ring
                .group
                .elements()
                .iter()
                .map(|p| g.id_of(p).unwrap())
                .collect();
            for u in 0..h_ring.class_count() {
                cases += 1;
                let x = h_ring.basis_element(u);
                let lhs = restrict(ring, &k_ring, &induce(&h_ring, ring, &x)?)?;
                // double cosets K g U in G, stabilizers K ∩ gUg^-1
                let u_in_g: Vec<ElemId> = h_ring.table.classes[u]
                    .rep
                    .elements
                    .iter()
                    .map(|&lid| h_in_g[lid as usize])
                    .collect();
                let mut rhs = BurnsideElement::zero(k_ring.class_count());
                let mut seen = vec![false; g.order()];
                for rep in 0..g.order() as ElemId {
                    if seen[rep as usize] {
                        continue;
                    }
                    for &k in &k_in_g {
                        for &uu in &u_in_g {
                            seen[g.mul(g.mul(k, rep), uu) as usize] = true;
                        }
                    }
                    let mut stab: Vec<ElemId> = Vec::new();
                    for (lid, &k) in k_in_g.iter().enumerate() {
                        // k in K ∩ rep U rep^-1  <=>  rep^-1 k rep in U
                        let conj = g.mul(g.mul(g.inv(rep), k), rep);
                        let mut member = false;
                        for &uu in &u_in_g {
                            if uu == conj {
                                member = true;
                                break;
                            }
                        }
                        if member {
                            stab.push(lid as ElemId);
                        }
                    }
                    stab.sort_unstable();
                    let class = k_ring.table.class_of(&stab).expect("stabilizer class");
                    rhs.coeffs[class] += BigInt::from(1);
                }
                if lhs != rhs {
                    failures.push(format!(
                        "mackey failed: H class {h_class}, K class {k_class}, basis {u}"
                    ));
                }
            }
        }
    }
    Ok(AxiomReport {
        name: "mackey",
        cases,
        failures,
    })
}

/// Frobenius reciprocity: Ind(x) * y = Ind(x * Res(y)) for seeded
/// random x over each subgroup ring and y over the ambient ring.
pub fn check_frobenius(ring: &BurnsideRing, seed: u64) -> Result<AxiomReport> {
    let mut rng = TinyRng::new(seed);
    let mut cases = 0;
    let mut failures = Vec::new();
    for h_class in 0..ring.class_count() {
        let h_ring = sub_ring(ring, h_class)?;
        for _ in 0..4 {
            cases += 1;
            let x = rng.element(h_ring.class_count());
            let y = rng.element(ring.class_count());
            let lhs = ring.multiply(&induce(&h_ring, ring, &x)?, &y)?;
            let res_y = restrict(ring, &h_ring, &y)?;
            let rhs = induce(&h_ring, ring, &h_ring.multiply(&x, &res_y)?)?;
            if lhs != rhs {
                failures.push(format!("frobenius failed: H class {h_class}"));
            }
        }
    }
    Ok(AxiomReport {
        name: "frobenius",
        cases,
        failures,
    })
}

/// Transitivity of induction along U <= H <= G, over all chains of
/// subgroup classes and all basis elements of the bottom ring.
pub fn check_induction_transitive(ring: &BurnsideRing) -> Result<AxiomReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    let g = &ring.group;
    for h_class in 0..ring.class_count() {
        let h_ring = sub_ring(ring, h_class)?;
        for u_class in 0..h_ring.class_count() {
            let u_ring = BurnsideRing::new(
                h_ring
                    .group
                    .subgroup_as_group(&h_ring.table.classes[u_class].rep),
            )?;
            for b in 0..u_ring.class_count() {
                cases += 1;
                let x = u_ring.basis_element(b);
                let two_step = induce(&h_ring, ring, &induce(&u_ring, &h_ring, &x)?)?;
                let one_step = induce(&u_ring, ring, &x)?;
                if two_step != one_step {
                    failures.push(format!(
                        "induction transitivity failed: H {h_class}, U {u_class}, basis {b}"
                    ));
                }
            }
        }
    }
    let _ = g;
    Ok(AxiomReport {
        name: "induction-transitivity",
        cases,
        failures,
    })
}

/// Commutativity of induction and inflation: for N normal, N <= H <= G,
/// inflating an induced element equals inducing the inflated one.
pub fn check_ind_inf_commute(ring: &BurnsideRing) -> Result<AxiomReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    let g = &ring.group;
    for n_class in ring.table.normal_classes() {
        let n_sub = &ring.table.classes[n_class].rep;
        let (q, proj) = g.quotient(n_sub)?;
        let q_ring = BurnsideRing::new(q)?;
        for h_class in 0..ring.class_count() {
            let h_sub = &ring.table.classes[h_class].rep;
            // need N <= H as actual subgroups (N is normal, so the
            // class representative either contains N or no conjugate does)
            if !n_sub.elements.iter().all(|x| h_sub.contains(*x)) {
                continue;
            }
            let h_ring = sub_ring(ring, h_class)?;
            // image subgroup H/N inside the quotient
            let mut hbar_ids: Vec<ElemId> = h_sub
                .elements
                .iter()
                .map(|&x| proj.apply(x))
                .collect();
            hbar_ids.sort_unstable();
            hbar_ids.dedup();
            let hbar_sub = q_ring.group.subgroup_from(&hbar_ids);
            let hbar_ring = BurnsideRing::new(q_ring.group.subgroup_as_group(&hbar_sub))?;
            // projection restricted to H, as a hom onto H/N
            let restricted_map: Vec<ElemId> = h_ring
                .group
                .elements()
                .iter()
                .map(|p| {
                    let gid = g.id_of(p).unwrap();
                    let image = proj.apply(gid);
                    hbar_ring
                        .group
                        .id_of(q_ring.group.perm(image))
                        .expect("image lands in H/N")
                })
                .collect();
            let h_proj = crate::group::GroupHom::new_checked(
                &h_ring.group,
                &hbar_ring.group,
                restricted_map,
            )?;
            for b in 0..hbar_ring.class_count() {
                cases += 1;
                let x = hbar_ring.basis_element(b);
                let path_a = inflate(
                    &proj,
                    &q_ring,
                    ring,
                    &induce(&hbar_ring, &q_ring, &x)?,
                )?;
                let path_b = induce(
                    &h_ring,
                    ring,
                    &inflate(&h_proj, &hbar_ring, &h_ring, &x)?,
                )?;
                if path_a != path_b {
                    failures.push(format!(
                        "ind/inf commutativity failed: N {n_class}, H {h_class}, basis {b}"
                    ));
                }
            }
        }
    }
    Ok(AxiomReport {
        name: "induction-inflation-commutativity",
        cases,
        failures,
    })
}

/// Inflation is a ring homomorphism: Inf(x*y) = Inf(x)*Inf(y), checked
/// on basis products for every proper quotient.
pub fn check_inflation_ring_hom(ring: &BurnsideRing) -> Result<AxiomReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for n_class in ring.table.normal_classes() {
        let (q, proj) = ring.group.quotient(&ring.table.classes[n_class].rep)?;
        let q_ring = BurnsideRing::new(q)?;
        for i in 0..q_ring.class_count() {
            for j in 0..=i {
                cases += 1;
                let x = q_ring.basis_element(i);
                let y = q_ring.basis_element(j);
                let lhs = inflate(&proj, &q_ring, ring, &q_ring.multiply(&x, &y)?)?;
                let rhs = ring.multiply(
                    &inflate(&proj, &q_ring, ring, &x)?,
                    &inflate(&proj, &q_ring, ring, &y)?,
                )?;
                if lhs != rhs {
                    failures.push(format!(
                        "inflation not multiplicative: N {n_class}, basis ({i},{j})"
                    ));
                }
            }
        }
    }
    Ok(AxiomReport {
        name: "inflation-ring-hom",
        cases,
        failures,
    })
}

/// The mark vector is multiplicative: marks(x*y) = marks(x) ⊙ marks(y).
pub fn check_marks_multiplicative(ring: &BurnsideRing, seed: u64) -> Result<AxiomReport> {
    let mut rng = TinyRng::new(seed);
    let mut cases = 0;
    let mut failures = Vec::new();
    for _ in 0..8 {
        cases += 1;
        let x = rng.element(ring.class_count());
        let y = rng.element(ring.class_count());
        let prod = ring.multiply(&x, &y)?;
        let lhs = ring.marks_of(&prod)?;
        let mx = ring.marks_of(&x)?;
        let my = ring.marks_of(&y)?;
        let ok = lhs
            .iter()
            .zip(mx.iter().zip(&my))
            .all(|(l, (a, b))| *l == a * b);
        if !ok {
            failures.push("marks homomorphism failed".into());
        }
    }
    Ok(AxiomReport {
        name: "marks-multiplicativity",
        cases,
        failures,
    })
}

/// The character-side morphism commutes with induction, restriction and
/// inflation. Induced characters are computed by the averaging formula,
/// so the two sides go through genuinely different code paths.
pub fn check_morphism_commutes(ring: &BurnsideRing, p: u64) -> Result<AxiomReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    let g = &ring.group;
    let g_regular = g.p_regular_classes(p)?;
    let g_classes = g.conjugacy_classes();

    for h_class in 0..ring.class_count() {
        let h_ring = sub_ring(ring, h_class)?;
        let h = &h_ring.group;
        let h_in_g: Vec<ElemId> = h
            .elements()
            .iter()
            .map(|x| g.id_of(x).unwrap())
            .collect();
        let h_regular = h.p_regular_classes(p)?;
        let h_classes = h.conjugacy_classes();
        // class index of an H-element among the p-regular H-classes
        let h_row_of = |hid: ElemId| -> usize {
            let cls = h_classes
                .iter()
                .position(|c| c.members.binary_search(&hid).is_ok())
                .unwrap();
            h_regular.iter().position(|&r| r == cls).unwrap()
        };

        for b in 0..h_ring.class_count() {
            cases += 1;
            let x = h_ring.basis_element(b);
            // induction: morphism then induced-character formula
            let ind = induce(&h_ring, ring, &x)?;
            let lhs = brauer_vector(ring, p, &ind)?;
            let chi = brauer_vector(&h_ring, p, &x)?;
            let mut rhs = Vec::with_capacity(g_regular.len());
            for &gc in &g_regular {
                let rep = g_classes[gc].rep;
                let mut total = BigInt::from(0);
                for a in 0..g.order() as ElemId {
                    let conj = g.mul(g.mul(g.inv(a), rep), a);
                    if let Ok(lid) = h_in_g.binary_search(&conj) {
                        total += &chi.values[h_row_of(lid as ElemId)];
                    }
                }
                let (q, r) = num_integer::Integer::div_rem(&total, &BigInt::from(h.order()));
                if r != BigInt::from(0) {
                    failures.push(format!(
                        "induced character not integral: H {h_class}, basis {b}"
                    ));
                }
                rhs.push(q);
            }
            if lhs.values != rhs {
                failures.push(format!(
                    "morphism/induction mismatch: H {h_class}, basis {b}"
                ));
            }
        }

        // restriction: morphism then character restriction
        for b in 0..ring.class_count() {
            cases += 1;
            let x = ring.basis_element(b);
            let res = restrict(ring, &h_ring, &x)?;
            let lhs = brauer_vector(&h_ring, p, &res)?;
            let chi = brauer_vector(ring, p, &x)?;
            let rhs: Vec<BigInt> = h_regular
                .iter()
                .map(|&hc| {
                    let hid = h_classes[hc].rep;
                    let gid = h_in_g[hid as usize];
                    let gc = g_classes
                        .iter()
                        .position(|c| c.members.binary_search(&gid).is_ok())
                        .unwrap();
                    let row = g_regular.iter().position(|&r| r == gc).unwrap();
                    chi.values[row].clone()
                })
                .collect();
            if lhs.values != rhs {
                failures.push(format!(
                    "morphism/restriction mismatch: H {h_class}, basis {b}"
                ));
            }
        }
    }

    // inflation along every proper quotient
    for n_class in ring.table.normal_classes() {
        let (q, proj) = g.quotient(&ring.table.classes[n_class].rep)?;
        let q_ring = BurnsideRing::new(q)?;
        let q_regular = q_ring.group.p_regular_classes(p)?;
        let q_classes = q_ring.group.conjugacy_classes();
        for b in 0..q_ring.class_count() {
            cases += 1;
            let x = q_ring.basis_element(b);
            let inf = inflate(&proj, &q_ring, ring, &x)?;
            let lhs = brauer_vector(ring, p, &inf)?;
            let chi = brauer_vector(&q_ring, p, &x)?;
            let rhs: Vec<BigInt> = g_regular
                .iter()
                .map(|&gc| {
                    let rep = g_classes[gc].rep;
                    let image = proj.apply(rep);
                    let qc = q_classes
                        .iter()
                        .position(|c| c.members.binary_search(&image).is_ok())
                        .unwrap();
                    let row = q_regular.iter().position(|&r| r == qc).unwrap();
                    chi.values[row].clone()
                })
                .collect();
            if lhs.values != rhs {
                failures.push(format!(
                    "morphism/inflation mismatch: N {n_class}, basis {b}"
                ));
            }
        }
    }

    Ok(AxiomReport {
        name: "morphism-commutes",
        cases,
        failures,
    })
}

/// Fixed-point consistency: the matrix entries computed from class
/// representatives agree with direct counting at every class member.
pub fn check_fixed_point_consistency(ring: &BurnsideRing, p: u64) -> Result<AxiomReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    let g = &ring.group;
    let m = brauer_matrix(ring, p)?;
    let regular = g.p_regular_classes(p)?;
    let classes = g.conjugacy_classes();
    for (row, &gc) in regular.iter().enumerate() {
        for &member in &classes[gc].members {
            for (col, sc) in ring.table.classes.iter().enumerate() {
                cases += 1;
                // direct count of cosets fixed by this member
                let sub = &sc.rep.elements;
                let mut count = 0i64;
                let mut seen = vec![false; g.order()];
                for x in 0..g.order() as ElemId {
                    if seen[x as usize] {
                        continue;
                    }
                    for &h in sub {
                        seen[g.mul(x, h) as usize] = true;
                    }
                    let conj = g.mul(g.mul(g.inv(x), member), x);
                    if sub.binary_search(&conj).is_ok() {
                        count += 1;
                    }
                }
                if BigInt::from(count) != *m.at(row, col) {
                    failures.push(format!(
                        "fixed points differ within a class: row {row}, col {col}"
                    ));
                }
            }
        }
    }
    Ok(AxiomReport {
        name: "fixed-point-consistency",
        cases,
        failures,
    })
}

/// Runs every axiom family on one ring at one prime.
pub fn run_all(ring: &BurnsideRing, p: u64, seed: u64) -> Result<Vec<AxiomReport>> {
    Ok(vec![
        check_mackey(ring)?,
        check_frobenius(ring, seed)?,
        check_induction_transitive(ring)?,
        check_ind_inf_commute(ring)?,
        check_inflation_ring_hom(ring)?,
        check_marks_multiplicative(ring, seed)?,
        check_morphism_commutes(ring, p)?,
        check_fixed_point_consistency(ring, p)?,
    ])
}
