//! Group construction: parameterized families, external group
//! descriptions (JSON documents, schema_version 1), and the built-in
//! verification catalog.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{is_prime, Group, DEFAULT_ORDER_BOUND};
use crate::perm::{Perm, Point};

/// External group description. Three shapes are accepted:
/// a permutation spec `{"degree":3,"generators":[[1,2,0]]}`,
/// a Cayley table `{"cayley":[[0,1],[1,0]]}` (0-based, converted to the
/// left regular representation), or a family constructor such as
/// `{"family":"cyclic","n":6}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Family(FamilySpec),
    Permutation {
        degree: usize,
        generators: Vec<Vec<Point>>,
    },
    Cayley {
        cayley: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Cyclic {
        n: u64,
    },
    ElementaryAbelian {
        l: u64,
        d: u32,
    },
    Semidirect {
        base: BaseSpec,
        actor: ActorSpec,
        /// One invertible matrix over the base modulus per actor
        /// generator (a 1x1 unit for cyclic bases).
        action: Vec<Vec<Vec<u64>>>,
        #[serde(default)]
        require_faithful: bool,
        #[serde(default)]
        require_irreducible: bool,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
    },
    Symmetric {
        n: u32,
    },
    Alternating {
        n: u32,
    },
    Dihedral {
        n: u32,
    },
    Quaternion8 {},
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseSpec {
    /// Elementary abelian (C_l)^d with l prime.
    ElementaryAbelian { l: u64, d: u32 },
    /// Cyclic C_m, m arbitrary.
    Cyclic { cyclic: u64 },
}

impl BaseSpec {
    fn modulus(&self) -> u64 {
        match self {
            BaseSpec::ElementaryAbelian { l, .. } => *l,
            BaseSpec::Cyclic { cyclic } => *cyclic,
        }
    }

    fn dim(&self) -> u32 {
        match self {
            BaseSpec::ElementaryAbelian { d, .. } => *d,
            BaseSpec::Cyclic { .. } => 1,
        }
    }

    fn order(&self) -> u64 {
        self.modulus().pow(self.dim())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActorSpec {
    Cyclic { cyclic: u64 },
    Group { group: Box<GroupSpec> },
}

/// Certification of a semidirect action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionCertificate {
    pub faithful: bool,
    /// Meaningful for elementary abelian bases; a cyclic base of
    /// composite order is reported as None.
    pub irreducible: Option<bool>,
}

/// Wrapper document carrying the schema version.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpecDocument {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    #[serde(flatten)]
    pub spec: GroupSpec,
}

fn default_schema_version() -> u32 {
    1
}

/// Parses a JSON group description, validating the schema version.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let doc: GroupSpecDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.schema_version != 1 {
        return Err(Error::Parse(format!(
            "unsupported schema_version {}",
            doc.schema_version
        )));
    }
    Ok(doc.spec)
}

pub fn spec_to_json(spec: &GroupSpec) -> String {
    serde_json::to_string(&GroupSpecDocument {
        schema_version: 1,
        spec: spec.clone(),
    })
    .expect("spec serializes")
}

impl GroupSpec {
    /// Order predicted by the family product formulas, when available.
    pub fn predicted_order(&self) -> Option<u64> {
        match self {
            GroupSpec::Family(f) => f.predicted_order(),
            GroupSpec::Cayley { cayley } => Some(cayley.len() as u64),
            GroupSpec::Permutation { .. } => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            GroupSpec::Family(f) => f.label(),
            GroupSpec::Permutation { degree, generators } => {
                format!("perm(deg={degree},gens={})", generators.len())
            }
            GroupSpec::Cayley { cayley } => format!("cayley({})", cayley.len()),
        }
    }
}

impl FamilySpec {
    pub fn predicted_order(&self) -> Option<u64> {
        Some(match self {
            FamilySpec::Cyclic { n } => *n,
            FamilySpec::ElementaryAbelian { l, d } => l.pow(*d),
            FamilySpec::Semidirect { base, actor, .. } => {
                let actor_order = match actor {
                    ActorSpec::Cyclic { cyclic } => *cyclic,
                    ActorSpec::Group { group } => group.predicted_order()?,
                };
                base.order() * actor_order
            }
            FamilySpec::DirectProduct { factors } => {
                let mut total = 1u64;
                for f in factors {
                    total *= f.predicted_order()?;
                }
                total
            }
            FamilySpec::Symmetric { n } => (1..=u64::from(*n)).product(),
            FamilySpec::Alternating { n } => {
                let fact: u64 = (1..=u64::from(*n)).product();
                if *n < 2 {
                    1
                } else {
                    fact / 2
                }
            }
            FamilySpec::Dihedral { n } => 2 * u64::from(*n),
            FamilySpec::Quaternion8 {} => 8,
        })
    }

    pub fn label(&self) -> String {
        match self {
            FamilySpec::Cyclic { n } => format!("C{n}"),
            FamilySpec::ElementaryAbelian { l, d } => format!("E({l}^{d})"),
            FamilySpec::Semidirect { base, actor, .. } => {
                let b = match base {
                    BaseSpec::ElementaryAbelian { l, d } if *d == 1 => format!("C{l}"),
                    BaseSpec::ElementaryAbelian { l, d } => format!("E({l}^{d})"),
                    BaseSpec::Cyclic { cyclic } => format!("C{cyclic}"),
                };
                let a = match actor {
                    ActorSpec::Cyclic { cyclic } => format!("C{cyclic}"),
                    ActorSpec::Group { group } => group.label(),
                };
                format!("{b}:{a}")
            }
            FamilySpec::DirectProduct { factors } => factors
                .iter()
                .map(GroupSpec::label)
                .collect::<Vec<_>>()
                .join("x"),
            FamilySpec::Symmetric { n } => format!("S{n}"),
            FamilySpec::Alternating { n } => format!("A{n}"),
            FamilySpec::Dihedral { n } => format!("D{n}"),
            FamilySpec::Quaternion8 {} => "Q8".into(),
        }
    }
}

/// Builds the group described by a spec. The certificate is present
/// exactly for semidirect constructions.
pub fn build(spec: &GroupSpec, bound: usize) -> Result<(Group, Option<ActionCertificate>)> {
    match spec {
        GroupSpec::Permutation { degree, generators } => {
            let gens = generators
                .iter()
                .map(|imgs| {
                    if imgs.len() != *degree {
                        return Err(Error::InvalidPermutation);
                    }
                    Perm::new(imgs.clone())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((Group::close(gens, bound)?, None))
        }
        GroupSpec::Cayley { cayley } => Ok((cayley_to_group(cayley, bound)?, None)),
        GroupSpec::Family(f) => build_family(f, bound),
    }
}

pub fn build_default(spec: &GroupSpec) -> Result<(Group, Option<ActionCertificate>)> {
    build(spec, DEFAULT_ORDER_BOUND)
}

fn cyclic_group(n: u64, bound: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Validation("cyclic order must be positive".into()));
    }
    if n as usize > bound {
        return Err(Error::OrderBoundExceeded { bound });
    }
    if n == 1 {
        return Ok(Group::trivial(1));
    }
    let cycle: Vec<Point> = (0..n as Point).collect();
    Group::close(vec![Perm::from_cycles(n as usize, &[cycle])?], bound)
}

fn mixed_radix_decode(mut idx: usize, modulus: u64, dim: u32) -> Vec<u64> {
    let mut v = vec![0u64; dim as usize];
    for slot in v.iter_mut() {
        *slot = (idx as u64) % modulus;
        idx /= modulus as usize;
    }
    v
}

fn mixed_radix_encode(v: &[u64], modulus: u64) -> usize {
    let mut idx = 0usize;
    for &x in v.iter().rev() {
        idx = idx * modulus as usize + x as usize;
    }
    idx
}

fn elementary_abelian_group(l: u64, d: u32, bound: usize) -> Result<Group> {
    if !is_prime(l) {
        return Err(Error::Validation(format!(
            "elementary abelian base needs a prime, got {l}"
        )));
    }
    let n = (l as u128).pow(d);
    if n > bound as u128 {
        return Err(Error::OrderBoundExceeded { bound });
    }
    let n = n as usize;
    let mut gens = Vec::new();
    for axis in 0..d as usize {
        let map: Vec<Point> = (0..n)
            .map(|idx| {
                let mut v = mixed_radix_decode(idx, l, d);
                v[axis] = (v[axis] + 1) % l;
                mixed_radix_encode(&v, l) as Point
            })
            .collect();
        gens.push(Perm::new(map)?);
    }
    if gens.is_empty() {
        return Ok(Group::trivial(1));
    }
    Group::close(gens, bound)
}

fn mat_mod_mul(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| a[i][k] * b[k][j] % m).sum::<u64>() % m)
                .collect()
        })
        .collect()
}

fn mat_identity(d: usize) -> Vec<Vec<u64>> {
    (0..d)
        .map(|i| (0..d).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn mat_apply(a: &[Vec<u64>], v: &[u64], m: u64) -> Vec<u64> {
    (0..a.len())
        .map(|i| (0..a.len()).map(|k| a[i][k] * v[k] % m).sum::<u64>() % m)
        .collect()
}

/// Validates action matrices: correct shape, invertible mod the base
/// modulus (a unit for d = 1; nonzero determinant mod a prime for
/// d >= 2, where the modulus must be prime).
fn validate_action_matrix(mat: &[Vec<u64>], modulus: u64, d: u32) -> Result<()> {
    if mat.len() != d as usize || mat.iter().any(|r| r.len() != d as usize) {
        return Err(Error::Validation("action matrix has wrong shape".into()));
    }
    if mat.iter().flatten().any(|&x| x >= modulus) {
        return Err(Error::Validation(
            "action matrix entries must be reduced mod the base modulus".into(),
        ));
    }
    if d == 1 {
        let u = mat[0][0];
        if num_integer::gcd(u, modulus) != 1 {
            return Err(Error::Validation(format!(
                "{u} is not a unit mod {modulus}"
            )));
        }
        return Ok(());
    }
    if !is_prime(modulus) {
        return Err(Error::Validation(
            "matrix actions need a prime modulus".into(),
        ));
    }
    // Gaussian elimination mod l
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let n = d as usize;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] % modulus != 0);
        let Some(pr) = pivot else {
            return Err(Error::Validation(
                "action matrix is singular mod the base modulus".into(),
            ));
        };
        m.swap(col, pr);
        let inv = mod_inverse(m[col][col], modulus);
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r][col] * inv % modulus;
            for c in 0..n {
                m[r][c] = (m[r][c] + (modulus - factor) * m[col][c]) % modulus;
            }
        }
    }
    Ok(())
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // m is small and prime here
    (1..m).find(|&x| a * x % m == 1).expect("unit has inverse")
}

fn build_family(f: &FamilySpec, bound: usize) -> Result<(Group, Option<ActionCertificate>)> {
    match f {
        FamilySpec::Cyclic { n } => Ok((cyclic_group(*n, bound)?, None)),
        FamilySpec::ElementaryAbelian { l, d } => {
            Ok((elementary_abelian_group(*l, *d, bound)?, None))
        }
        FamilySpec::Symmetric { n } => {
            if *n > 5 {
                return Err(Error::Validation("symmetric(n) supports n <= 5".into()));
            }
            if *n <= 1 {
                return Ok((Group::trivial(1), None));
            }
            let deg = *n as usize;
            let cycle: Vec<Point> = (0..*n as Point).collect();
            let gens = vec![
                Perm::from_cycles(deg, &[cycle])?,
                Perm::from_cycles(deg, &[vec![0, 1]])?,
            ];
            Ok((Group::close(gens, bound)?, None))
        }
        FamilySpec::Alternating { n } => {
            if *n > 5 {
                return Err(Error::Validation("alternating(n) supports n <= 5".into()));
            }
            if *n <= 2 {
                return Ok((Group::trivial(1), None));
            }
            let deg = *n as usize;
            let gens: Vec<Perm> = (2..*n as Point)
                .map(|k| Perm::from_cycles(deg, &[vec![0, 1, k]]))
                .collect::<Result<Vec<_>>>()?;
            Ok((Group::close(gens, bound)?, None))
        }
        FamilySpec::Dihedral { n } => {
            if *n < 3 {
                return Err(Error::Validation("dihedral(n) needs n >= 3".into()));
            }
            let deg = *n as usize;
            let cycle: Vec<Point> = (0..*n as Point).collect();
            let rot = Perm::from_cycles(deg, &[cycle])?;
            let refl = Perm::new(
                (0..deg)
                    .map(|i| ((deg - i) % deg) as Point)
                    .collect::<Vec<_>>(),
            )?;
            Ok((Group::close(vec![rot, refl], bound)?, None))
        }
        FamilySpec::Quaternion8 {} => {
            // left multiplication by i and j on {1,-1,i,-i,j,-j,k,-k}
            let i = Perm::new(vec![2, 3, 1, 0, 6, 7, 5, 4])?;
            let j = Perm::new(vec![4, 5, 7, 6, 1, 0, 2, 3])?;
            let g = Group::close(vec![i, j], bound)?;
            debug_assert_eq!(g.order(), 8);
            Ok((g, None))
        }
        FamilySpec::DirectProduct { factors } => {
            let built: Vec<Group> = factors
                .iter()
                .map(|f| build(f, bound).map(|(g, _)| g))
                .collect::<Result<Vec<_>>>()?;
            let total_degree: usize = built.iter().map(Group::degree).sum();
            let mut gens = Vec::new();
            let mut offset = 0usize;
            for g in &built {
                for gen in g.generators() {
                    let mut map: Vec<Point> = (0..total_degree as Point).collect();
                    for (p, &img) in gen.images().iter().enumerate() {
                        map[offset + p] = offset as Point + img;
                    }
                    gens.push(Perm::new(map)?);
                }
                offset += g.degree();
            }
            let order: usize = built.iter().map(Group::order).product();
            if order > bound {
                return Err(Error::OrderBoundExceeded { bound });
            }
            let g = Group::close(gens, bound)?;
            debug_assert_eq!(g.order(), order);
            Ok((g, None))
        }
        FamilySpec::Semidirect {
            base,
            actor,
            action,
            require_faithful,
            require_irreducible,
        } => build_semidirect(
            base,
            actor,
            action,
            *require_faithful,
            *require_irreducible,
            bound,
        ),
    }
}

fn build_semidirect(
    base: &BaseSpec,
    actor: &ActorSpec,
    action: &[Vec<Vec<u64>>],
    require_faithful: bool,
    require_irreducible: bool,
    bound: usize,
) -> Result<(Group, Option<ActionCertificate>)> {
    let modulus = base.modulus();
    let d = base.dim();
    if modulus < 2 {
        return Err(Error::Validation("base must be nontrivial".into()));
    }
    let actor_group = match actor {
        ActorSpec::Cyclic { cyclic } => cyclic_group(*cyclic, bound)?,
        ActorSpec::Group { group } => build(group, bound)?.0,
    };
    let gen_count = actor_group.generators().len();
    if action.len() != gen_count {
        return Err(Error::Validation(format!(
            "need one action matrix per actor generator ({gen_count})"
        )));
    }
    for mat in action {
        validate_action_matrix(mat, modulus, d)?;
    }
    // propagate matrices over the whole actor group; any inconsistency
    // means the generator images do not define a homomorphism
    let mut matrices: Vec<Option<Vec<Vec<u64>>>> = vec![None; actor_group.order()];
    matrices[0] = Some(mat_identity(d as usize));
    let gen_ids = actor_group.generator_ids();
    let mut queue = vec![0 as crate::group::ElemId];
    while let Some(x) = queue.pop() {
        let mx = matrices[x as usize].clone().unwrap();
        for (gi, &gid) in gen_ids.iter().enumerate() {
            let y = actor_group.mul(gid, x);
            let my = mat_mod_mul(&action[gi], &mx, modulus);
            match &matrices[y as usize] {
                Some(existing) => {
                    if *existing != my {
                        return Err(Error::Validation(
                            "action does not extend to a homomorphism".into(),
                        ));
                    }
                }
                None => {
                    matrices[y as usize] = Some(my);
                    queue.push(y);
                }
            }
        }
    }
    let matrices: Vec<Vec<Vec<u64>>> = matrices
        .into_iter()
        .map(|m| m.expect("actor is generated by its generators"))
        .collect();

    let identity = mat_identity(d as usize);
    let kernel_size = matrices.iter().filter(|m| **m == identity).count();
    let faithful = kernel_size == 1;

    let base_order = base.order();
    let irreducible = match base {
        BaseSpec::ElementaryAbelian { .. } => Some(action_is_irreducible(&matrices, modulus, d)),
        BaseSpec::Cyclic { .. } => None,
    };
    if require_faithful && !faithful {
        return Err(Error::NotFaithful);
    }
    if require_irreducible && irreducible == Some(false) {
        return Err(Error::NotIrreducible);
    }
    let cert = ActionCertificate {
        faithful,
        irreducible,
    };

    let total = base_order as u128 * actor_group.order() as u128;
    if total > bound as u128 {
        return Err(Error::OrderBoundExceeded { bound });
    }

    let group = if faithful {
        // affine action on the base point set: v -> A v + b
        let n = base_order as usize;
        let mut gens = Vec::new();
        for axis in 0..d as usize {
            let map: Vec<Point> = (0..n)
                .map(|idx| {
                    let mut v = mixed_radix_decode(idx, modulus, d);
                    v[axis] = (v[axis] + 1) % modulus;
                    mixed_radix_encode(&v, modulus) as Point
                })
                .collect();
            gens.push(Perm::new(map)?);
        }
        for (gi, _) in gen_ids.iter().enumerate() {
            let map: Vec<Point> = (0..n)
                .map(|idx| {
                    let v = mixed_radix_decode(idx, modulus, d);
                    let w = mat_apply(&action[gi], &v, modulus);
                    mixed_radix_encode(&w, modulus) as Point
                })
                .collect();
            gens.push(Perm::new(map)?);
        }
        Group::close(gens, bound)?
    } else {
        // regular representation of the abstract semidirect product
        semidirect_regular(base, &actor_group, &matrices, bound)?
    };
    debug_assert_eq!(group.order() as u128, total);
    Ok((group, Some(cert)))
}

/// Left regular representation of (base) x| (actor) for non-faithful
/// actions: points are pairs (v, h).
fn semidirect_regular(
    base: &BaseSpec,
    actor: &Group,
    matrices: &[Vec<Vec<u64>>],
    bound: usize,
) -> Result<Group> {
    let modulus = base.modulus();
    let d = base.dim();
    let base_order = base.order() as usize;
    let n = base_order * actor.order();
    let encode = |v: &[u64], h: usize| -> usize { mixed_radix_encode(v, modulus) * actor.order() + h };
    let mut gens = Vec::new();
    // base translations (b, 1) * (v, h) = (b + v, h)
    for axis in 0..d as usize {
        let map: Vec<Point> = (0..n)
            .map(|idx| {
                let (vi, h) = (idx / actor.order(), idx % actor.order());
                let mut v = mixed_radix_decode(vi, modulus, d);
                v[axis] = (v[axis] + 1) % modulus;
                encode(&v, h) as Point
            })
            .collect();
        gens.push(Perm::new(map)?);
    }
    // actor generators (0, a) * (v, h) = (A_a v, a h)
    for &gid in &actor.generator_ids() {
        let map: Vec<Point> = (0..n)
            .map(|idx| {
                let (vi, h) = (idx / actor.order(), idx % actor.order());
                let v = mixed_radix_decode(vi, modulus, d);
                let w = mat_apply(&matrices[gid as usize], &v, modulus);
                let h2 = actor.mul(gid, h as crate::group::ElemId) as usize;
                encode(&w, h2) as Point
            })
            .collect();
        gens.push(Perm::new(map)?);
    }
    Group::close(gens, bound)
}

/// Irreducibility over F_l: the invariant closure of every nonzero
/// vector is the whole base.
fn action_is_irreducible(matrices: &[Vec<Vec<u64>>], modulus: u64, d: u32) -> bool {
    let n = (modulus as usize).pow(d);
    if n <= modulus as usize {
        return true; // d = 1: no proper nonzero subgroups
    }
    for start in 1..n {
        let mut in_set = vec![false; n];
        in_set[0] = true;
        in_set[start] = true;
        let mut queue = vec![0usize, start];
        while let Some(x) = queue.pop() {
            let vx = mixed_radix_decode(x, modulus, d);
            // close under addition of the start orbit and action
            for m in matrices {
                let w = mat_apply(m, &vx, modulus);
                let wi = mixed_radix_encode(&w, modulus);
                if !in_set[wi] {
                    in_set[wi] = true;
                    queue.push(wi);
                }
            }
            for y in 0..n {
                if !in_set[y] {
                    continue;
                }
                let vy = mixed_radix_decode(y, modulus, d);
                let sum: Vec<u64> = vx
                    .iter()
                    .zip(&vy)
                    .map(|(a, b)| (a + b) % modulus)
                    .collect();
                let si = mixed_radix_encode(&sum, modulus);
                if !in_set[si] {
                    in_set[si] = true;
                    queue.push(si);
                }
            }
        }
        if in_set.iter().filter(|&&b| b).count() < n {
            return false;
        }
    }
    true
}

fn cayley_to_group(table: &[Vec<usize>], bound: usize) -> Result<Group> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Validation("empty Cayley table".into()));
    }
    if n > bound {
        return Err(Error::OrderBoundExceeded { bound });
    }
    if table.iter().any(|r| r.len() != n) {
        return Err(Error::Validation("Cayley table is not square".into()));
    }
    if table.iter().flatten().any(|&x| x >= n) {
        return Err(Error::Validation("Cayley table entry out of range".into()));
    }
    // left multiplication rows must be permutations
    let rows: Vec<Perm> = table
        .iter()
        .map(|r| Perm::new(r.iter().map(|&x| x as Point).collect()))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Validation("Cayley table rows must be permutations".into()))?;
    // two-sided identity
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::Validation("Cayley table has no identity".into()))?;
    let _ = e;
    // associativity: left-multiplication is a homomorphism onto the rows
    for a in 0..n {
        for b in 0..n {
            if rows[a].compose(&rows[b]) != rows[table[a][b]] {
                return Err(Error::Validation(
                    "Cayley table is not associative".into(),
                ));
            }
        }
    }
    let mut elems = rows.clone();
    elems.sort();
    elems.dedup();
    if elems.len() != n {
        return Err(Error::Validation(
            "Cayley table rows are not distinct".into(),
        ));
    }
    Ok(Group::from_sorted_elements(n, elems, rows))
}

/// One entry of the verification catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub spec: GroupSpec,
    pub prime: u64,
}

fn family(f: FamilySpec) -> GroupSpec {
    GroupSpec::Family(f)
}

/// The deterministic verification suite: every (group, prime) pair the
/// classification is checked on.
pub fn verification_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |spec: GroupSpec, prime: u64| {
        out.push(CatalogEntry {
            label: format!("{} p={}", spec.label(), prime),
            spec,
            prime,
        });
    };
    for n in 2..=12u64 {
        for p in [2u64, 3, 5] {
            push(family(FamilySpec::Cyclic { n }), p);
        }
    }
    push(family(FamilySpec::ElementaryAbelian { l: 2, d: 2 }), 2);
    push(family(FamilySpec::Dihedral { n: 4 }), 2);
    push(family(FamilySpec::Quaternion8 {}), 2);
    for p in [2u64, 3, 5] {
        push(family(FamilySpec::Symmetric { n: 3 }), p);
    }
    push(
        family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 7, d: 1 },
            actor: ActorSpec::Cyclic { cyclic: 3 },
            action: vec![vec![vec![2]]],
            require_faithful: true,
            require_irreducible: true,
        }),
        3,
    );
    push(
        family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 5, d: 1 },
            actor: ActorSpec::Cyclic { cyclic: 4 },
            action: vec![vec![vec![2]]],
            require_faithful: true,
            require_irreducible: true,
        }),
        5,
    );
    // (C_2)^2 x| C_3 is the alternating group on 4 points
    push(
        family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 2, d: 2 },
            actor: ActorSpec::Cyclic { cyclic: 3 },
            action: vec![vec![vec![0, 1], vec![1, 1]]],
            require_faithful: true,
            require_irreducible: true,
        }),
        2,
    );
    push(
        family(FamilySpec::DirectProduct {
            factors: vec![
                family(FamilySpec::Symmetric { n: 3 }),
                family(FamilySpec::Symmetric { n: 3 }),
            ],
        }),
        2,
    );
    for p in [2u64, 5] {
        push(family(FamilySpec::Alternating { n: 5 }), p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let spec = parse_group_spec(r#"{"family":"cyclic","n":6}"#).unwrap();
        assert_eq!(spec, family(FamilySpec::Cyclic { n: 6 }));
        let spec = parse_group_spec(
            r#"{"family":"semidirect","base":{"l":7,"d":1},"actor":{"cyclic":3},"action":[[[2]]]}"#,
        )
        .unwrap();
        let (g, cert) = build_default(&spec).unwrap();
        assert_eq!(g.order(), 21);
        assert_eq!(
            cert.unwrap(),
            ActionCertificate {
                faithful: true,
                irreducible: Some(true)
            }
        );
        let spec = parse_group_spec(r#"{"cayley":[[0,1],[1,0]]}"#).unwrap();
        let (g, _) = build_default(&spec).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn round_trip() {
        for entry in verification_catalog() {
            let text = spec_to_json(&entry.spec);
            let parsed = parse_group_spec(&text).unwrap();
            assert_eq!(parsed, entry.spec);
        }
    }

    #[test]
    fn predicted_orders_match_build() {
        for entry in verification_catalog() {
            let (g, _) = build_default(&entry.spec).unwrap();
            assert_eq!(
                g.order() as u64,
                entry.spec.predicted_order().unwrap(),
                "{}",
                entry.label
            );
        }
    }

    #[test]
    fn families_build_correctly() {
        let (a4, _) = build_default(&family(FamilySpec::Alternating { n: 4 })).unwrap();
        assert_eq!(a4.order(), 12);
        let (d4, _) = build_default(&family(FamilySpec::Dihedral { n: 4 })).unwrap();
        assert_eq!(d4.order(), 8);
        let (q8, _) = build_default(&family(FamilySpec::Quaternion8 {})).unwrap();
        assert_eq!(q8.order(), 8);
        // Q8: exactly one involution
        let invol = (0..8).filter(|&i| q8.order_of(i) == 2).count();
        assert_eq!(invol, 1);
        let (v4, _) =
            build_default(&family(FamilySpec::ElementaryAbelian { l: 2, d: 2 })).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian() && !v4.is_cyclic());
        let (s36, _) = build_default(&family(FamilySpec::DirectProduct {
            factors: vec![
                family(FamilySpec::Symmetric { n: 3 }),
                family(FamilySpec::Symmetric { n: 3 }),
            ],
        }))
        .unwrap();
        assert_eq!(s36.order(), 36);
    }

    #[test]
    fn a4_as_semidirect_is_alternating() {
        let spec = family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 2, d: 2 },
            actor: ActorSpec::Cyclic { cyclic: 3 },
            action: vec![vec![vec![0, 1], vec![1, 1]]],
            require_faithful: true,
            require_irreducible: true,
        });
        let (g, cert) = build_default(&spec).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.degree(), 4);
        assert!(cert.unwrap().faithful);
        let (a4, _) = build_default(&family(FamilySpec::Alternating { n: 4 })).unwrap();
        assert_eq!(g.order(), a4.order());
        assert!(!g.is_abelian());
    }

    #[test]
    fn semidirect_validation() {
        // 2 has order 3 mod 7: cubing the generator must give the identity
        let bad = family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 7, d: 1 },
            actor: ActorSpec::Cyclic { cyclic: 4 },
            action: vec![vec![vec![2]]],
            require_faithful: false,
            require_irreducible: false,
        });
        assert!(matches!(
            build_default(&bad),
            Err(Error::Validation(_))
        ));
        // non-unit action entry
        let bad = family(FamilySpec::Semidirect {
            base: BaseSpec::Cyclic { cyclic: 6 },
            actor: ActorSpec::Cyclic { cyclic: 2 },
            action: vec![vec![vec![2]]],
            require_faithful: false,
            require_irreducible: false,
        });
        assert!(matches!(build_default(&bad), Err(Error::Validation(_))));
        // trivial action flagged as not faithful on demand
        let trivial_action = family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 5, d: 1 },
            actor: ActorSpec::Cyclic { cyclic: 2 },
            action: vec![vec![vec![1]]],
            require_faithful: true,
            require_irreducible: false,
        });
        assert!(matches!(
            build_default(&trivial_action),
            Err(Error::NotFaithful)
        ));
        // reducible matrix action rejected on demand
        let reducible = family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 3, d: 2 },
            actor: ActorSpec::Cyclic { cyclic: 2 },
            action: vec![vec![vec![2, 0], vec![0, 1]]],
            require_faithful: false,
            require_irreducible: true,
        });
        assert!(matches!(
            build_default(&reducible),
            Err(Error::NotIrreducible)
        ));
    }

    #[test]
    fn non_faithful_semidirect_uses_regular_representation() {
        // trivial action gives the direct product C_5 x C_2 = C_10
        let spec = family(FamilySpec::Semidirect {
            base: BaseSpec::ElementaryAbelian { l: 5, d: 1 },
            actor: ActorSpec::Cyclic { cyclic: 2 },
            action: vec![vec![vec![1]]],
            require_faithful: false,
            require_irreducible: false,
        });
        let (g, cert) = build_default(&spec).unwrap();
        assert_eq!(g.order(), 10);
        assert!(!cert.unwrap().faithful);
        assert!(g.is_cyclic());
    }

    #[test]
    fn cayley_validation() {
        // C_3 table
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let (g, _) = build_default(&GroupSpec::Cayley { cayley: t }).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_cyclic());
        // a relabeled identity is still a group
        let relabeled = vec![vec![1, 0], vec![0, 1]];
        let (g, _) = build_default(&GroupSpec::Cayley { cayley: relabeled }).unwrap();
        assert_eq!(g.order(), 2);
        // row that is not a permutation
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(build_default(&GroupSpec::Cayley { cayley: bad }).is_err());
        // Latin square without a two-sided identity
        let bad = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        assert!(build_default(&GroupSpec::Cayley { cayley: bad }).is_err());
    }

    #[test]
    fn catalog_has_expected_entries() {
        let cat = verification_catalog();
        assert_eq!(cat.len(), 45);
        assert!(cat
            .iter()
            .any(|e| e.label == "C2 p=2"));
        assert!(cat.iter().any(|e| e.label == "S3xS3 p=2"));
        assert!(cat.iter().any(|e| e.label == "A5 p=5"));
        assert!(cat.iter().any(|e| e.label == "C7:C3 p=3"));
    }

    #[test]
    fn order_bound_respected() {
        assert!(matches!(
            build(&family(FamilySpec::Alternating { n: 5 }), 50),
            Err(Error::OrderBoundExceeded { .. })
        ));
    }
}
