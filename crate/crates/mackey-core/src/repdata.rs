//! Representation specifications: weight multisets of `V` and of the adjoint
//! representation, the Weyl group acting on the character lattice, and the
//! torus split into a rank-`r` maximal torus block and a rank-`m` auxiliary
//! block. Includes built-in constructors, combinators, and JSON file I/O.
//!
//! Weight vectors live in the character lattice of `T x T'` and are stored as
//! integer vectors of length `rank_t + rank_aux`, torus block first. Weyl
//! elements act on the torus block of the character lattice; the induced
//! action on cocharacters is by the inverse transpose.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default cap for group closure; exceeding it signals non-finite input.
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// A character of `T x T'` together with the dimension of its weight space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub vector: Vec<i64>,
    pub multiplicity: usize,
}

impl Weight {
    pub fn new(vector: Vec<i64>, multiplicity: usize) -> Self {
        assert!(multiplicity >= 1);
        Weight {
            vector,
            multiplicity,
        }
    }

    pub fn simple(vector: Vec<i64>) -> Self {
        Weight::new(vector, 1)
    }

    /// Torus block of the vector (the part pairing with cocharacters).
    pub fn t_block(&self, rank_t: usize) -> &[i64] {
        &self.vector[..rank_t]
    }

    pub fn is_t_zero(&self, rank_t: usize) -> bool {
        self.vector[..rank_t].iter().all(|&c| c == 0)
    }

    pub fn negated(&self) -> Weight {
        Weight {
            vector: self.vector.iter().map(|&c| -c).collect(),
            multiplicity: self.multiplicity,
        }
    }
}

/// A lattice automorphism acting on the torus block of the character lattice
/// (identity on the auxiliary block). Ordered lexicographically on row-major
/// entries, which fixes all canonical-representative choices downstream.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            matrix: (0..rank)
                .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let r = matrix.len();
        if matrix.iter().any(|row| row.len() != r) {
            return Err(Error::NonUnimodular);
        }
        let el = WeylElement { matrix };
        match el.det() {
            1 | -1 => Ok(el),
            _ => Err(Error::NonUnimodular),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    fn det(&self) -> i64 {
        // Fraction-free Gaussian elimination (Bareiss) over i128.
        let n = self.rank();
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut prev = 1i128;
        let mut sign = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        i64::try_from(sign * m[n - 1][n - 1]).expect("determinant overflow")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        assert_eq!(n, other.rank());
        let mut out = vec![vec![0i64; n]; n];
        for (i, out_row) in out.iter_mut().enumerate() {
            for (j, slot) in out_row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..n {
                    acc = acc
                        .checked_add(
                            self.matrix[i][k]
                                .checked_mul(other.matrix[k][j])
                                .expect("matrix entry overflow"),
                        )
                        .expect("matrix entry overflow");
                }
                *slot = acc;
            }
        }
        WeylElement { matrix: out }
    }

    /// Exact inverse; the element is unimodular so the inverse is integral.
    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let d = self.det();
        debug_assert!(d == 1 || d == -1);
        // Adjugate via cofactors; fine for the small ranks in scope.
        let mut adj = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<i64>> = (0..n)
                    .filter(|&r| r != i)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| self.matrix[r][c])
                            .collect()
                    })
                    .collect();
                let md = if n == 1 {
                    1
                } else {
                    WeylElement { matrix: minor }.det()
                };
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[j][i] = sign * md * d; // dividing by det is multiplying by +-1
            }
        }
        WeylElement { matrix: adj }
    }

    pub fn transpose(&self) -> WeylElement {
        let n = self.rank();
        WeylElement {
            matrix: (0..n)
                .map(|i| (0..n).map(|j| self.matrix[j][i]).collect())
                .collect(),
        }
    }

    /// Action on a character vector. Only the torus block is transformed; a
    /// longer auxiliary tail is passed through unchanged.
    pub fn apply_char(&self, v: &[i64]) -> Vec<i64> {
        let r = self.rank();
        let mut out = v.to_vec();
        for (i, slot) in out.iter_mut().take(r).enumerate() {
            *slot = (0..r).map(|k| self.matrix[i][k] * v[k]).sum();
        }
        out
    }

    /// Action on a rational cocharacter: inverse transpose of the matrix.
    pub fn apply_cochar(&self, v: &[crate::algebra::Rat]) -> Vec<crate::algebra::Rat> {
        use crate::algebra::rat;
        let r = self.rank();
        assert_eq!(v.len(), r);
        let m = self.inverse().transpose();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|k| v[k].clone() * rat(m.matrix[i][k]))
                    .fold(rat(0), |a, b| a + b)
            })
            .collect()
    }
}

/// Breadth-first closure of a set of unimodular generators, deduplicated,
/// in deterministic (lexicographic row-major) order.
pub fn weyl_closure(
    generators: &[WeylElement],
    rank: usize,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    for g in generators {
        if g.rank() != rank {
            return Err(Error::DimensionMismatch(format!(
                "generator rank {} does not match rank_t {}",
                g.rank(),
                rank
            )));
        }
    }
    let mut seen: BTreeSet<WeylElement> = BTreeSet::new();
    let mut queue: Vec<WeylElement> = vec![WeylElement::identity(rank)];
    seen.insert(WeylElement::identity(rank));
    while let Some(el) = queue.pop() {
        for g in generators {
            let next = g.compose(&el);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureExceeded { cap });
                }
                queue.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Full input datum: ranks, weight multisets, and the (closed) Weyl group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepSpec {
    pub name: String,
    pub rank_t: usize,
    pub rank_aux: usize,
    pub v_weights: Vec<Weight>,
    pub g_roots: Vec<Weight>,
    pub weyl: Vec<WeylElement>,
}

impl RepSpec {
    /// Validate every structural invariant and return the spec with the Weyl
    /// group sorted canonically.
    pub fn new(
        name: impl Into<String>,
        rank_t: usize,
        rank_aux: usize,
        v_weights: Vec<Weight>,
        g_roots: Vec<Weight>,
        weyl: Vec<WeylElement>,
    ) -> Result<RepSpec> {
        let mut spec = RepSpec {
            name: name.into(),
            rank_t,
            rank_aux,
            v_weights,
            g_roots,
            weyl,
        };
        spec.weyl.sort();
        spec.weyl.dedup();
        spec.validate()?;
        Ok(spec)
    }

    pub fn n_total(&self) -> usize {
        self.rank_t + self.rank_aux
    }

    pub fn layout(&self) -> crate::algebra::VarLayout {
        crate::algebra::VarLayout::new(self.rank_t, self.rank_aux)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n_total();
        for w in self.v_weights.iter().chain(&self.g_roots) {
            if w.vector.len() != n {
                return Err(Error::InvalidSpec(format!(
                    "weight {:?} has length {}, expected {}",
                    w.vector,
                    w.vector.len(),
                    n
                )));
            }
            if w.multiplicity == 0 {
                return Err(Error::InvalidSpec("zero multiplicity".into()));
            }
        }
        for root in &self.g_roots {
            if root.vector[self.rank_t..].iter().any(|&c| c != 0) {
                return Err(Error::InvalidSpec(format!(
                    "root {:?} has a nonzero auxiliary block",
                    root.vector
                )));
            }
            if root.is_t_zero(self.rank_t) {
                return Err(Error::InvalidSpec(format!(
                    "root {:?} has a zero torus block",
                    root.vector
                )));
            }
            if root.multiplicity != 1 {
                return Err(Error::InvalidSpec("roots must have multiplicity 1".into()));
            }
        }
        let roots_multiset = weight_multiset(&self.g_roots);
        let negated: Vec<Weight> = self.g_roots.iter().map(Weight::negated).collect();
        if weight_multiset(&negated) != roots_multiset {
            return Err(Error::InvalidSpec(
                "root multiset is not closed under negation".into(),
            ));
        }
        if self.weyl.is_empty() {
            return Err(Error::InvalidSpec("empty Weyl group".into()));
        }
        for w in &self.weyl {
            if w.rank() != self.rank_t {
                return Err(Error::InvalidSpec(format!(
                    "Weyl element rank {} does not match rank_t {}",
                    w.rank(),
                    self.rank_t
                )));
            }
            match w.det() {
                1 | -1 => {}
                _ => return Err(Error::NonUnimodular),
            }
            if !self.preserves_multisets(w) {
                return Err(Error::InvalidSpec(format!(
                    "Weyl element {:?} does not preserve the weight multisets",
                    w.matrix
                )));
            }
        }
        // Closed under products; finiteness then gives inverses for free.
        let index: BTreeSet<&WeylElement> = self.weyl.iter().collect();
        for a in &self.weyl {
            for b in &self.weyl {
                if !index.contains(&a.compose(b)) {
                    return Err(Error::InvalidSpec(
                        "Weyl element list is not closed under multiplication".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn preserves_multisets(&self, w: &WeylElement) -> bool {
        let map = |ws: &[Weight]| -> Vec<Weight> {
            ws.iter()
                .map(|wt| Weight::new(w.apply_char(&wt.vector), wt.multiplicity))
                .collect()
        };
        weight_multiset(&map(&self.v_weights)) == weight_multiset(&self.v_weights)
            && weight_multiset(&map(&self.g_roots)) == weight_multiset(&self.g_roots)
    }

    pub fn identity_index(&self) -> usize {
        self.weyl
            .iter()
            .position(WeylElement::is_identity)
            .expect("group contains the identity")
    }

    /// Is the multiset of positive-ray classes of the weights of `V` equal to
    /// that of its dual? Zero weights match trivially.
    pub fn is_weakly_symmetric(&self) -> bool {
        let rays = |ws: &[Weight]| -> std::collections::BTreeMap<Vec<i64>, usize> {
            let mut m = std::collections::BTreeMap::new();
            for w in ws {
                *m.entry(primitive_ray(&w.vector)).or_insert(0) += w.multiplicity;
            }
            m
        };
        let negated: Vec<Weight> = self.v_weights.iter().map(Weight::negated).collect();
        rays(&self.v_weights) == rays(&negated)
    }
}

fn weight_multiset(ws: &[Weight]) -> std::collections::BTreeMap<Vec<i64>, usize> {
    let mut m = std::collections::BTreeMap::new();
    for w in ws {
        *m.entry(w.vector.clone()).or_insert(0) += w.multiplicity;
    }
    m
}

/// Primitive representative of the positive ray of an integer vector
/// (entries divided by their gcd); the zero vector maps to itself.
pub fn primitive_ray(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &c| num::integer::gcd(acc, c.abs()));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&c| c / g).collect()
}

// ---------------------------------------------------------------------------
// Built-in constructors and combinators
// ---------------------------------------------------------------------------

/// All `n x n` permutation matrices, via closure of adjacent transpositions.
pub fn permutation_group(n: usize) -> Vec<WeylElement> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut m = WeylElement::identity(n).matrix;
        m.swap(i, i + 1);
        gens.push(WeylElement { matrix: m });
    }
    weyl_closure(&gens, n, DEFAULT_CLOSURE_CAP).expect("symmetric group closes")
}

/// Signed permutation matrices (hyperoctahedral group) of rank `n`.
pub fn signed_permutation_group(n: usize) -> Vec<WeylElement> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut m = WeylElement::identity(n).matrix;
        m.swap(i, i + 1);
        gens.push(WeylElement { matrix: m });
    }
    let mut flip = WeylElement::identity(n).matrix;
    flip[n - 1][n - 1] = -1;
    gens.push(WeylElement { matrix: flip });
    weyl_closure(&gens, n, DEFAULT_CLOSURE_CAP).expect("hyperoctahedral group closes")
}

/// The defining representation of `GL_n` on `C^n`: weights `e_1..e_n`, roots
/// `e_i - e_j` for `i != j`, Weyl group all permutation matrices.
pub fn rep_gl_standard(n: usize) -> Result<RepSpec> {
    if n == 0 {
        return Err(Error::InvalidSpec("rank must be at least 1".into()));
    }
    let e = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };
    let v_weights = (0..n).map(|i| Weight::simple(e(i))).collect();
    let mut g_roots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut v = e(i);
                v[j] -= 1;
                g_roots.push(Weight::simple(v));
            }
        }
    }
    RepSpec::new(
        format!("gl{n}-standard"),
        n,
        0,
        v_weights,
        g_roots,
        permutation_group(n),
    )
}

/// A torus spec: trivial Weyl group, no roots, arbitrary weights of length
/// `rank_t + rank_aux`.
pub fn rep_torus(
    name: impl Into<String>,
    rank_t: usize,
    rank_aux: usize,
    weights: Vec<Weight>,
) -> Result<RepSpec> {
    RepSpec::new(
        name,
        rank_t,
        rank_aux,
        weights,
        Vec::new(),
        vec![WeylElement::identity(rank_t)],
    )
}

/// Dual representation: negate the torus block of every weight of `V`, and
/// the auxiliary block too unless `keep_aux` is set.
pub fn dual(spec: &RepSpec, keep_aux: bool) -> Result<RepSpec> {
    let v_weights = spec
        .v_weights
        .iter()
        .map(|w| {
            let mut v: Vec<i64> = w.vector.iter().map(|&c| -c).collect();
            if keep_aux {
                v[spec.rank_t..].copy_from_slice(&w.vector[spec.rank_t..]);
            }
            Weight::new(v, w.multiplicity)
        })
        .collect();
    RepSpec::new(
        format!("dual({})", spec.name),
        spec.rank_t,
        spec.rank_aux,
        v_weights,
        spec.g_roots.clone(),
        spec.weyl.clone(),
    )
}

/// Direct sum of two representations of the same group datum.
pub fn direct_sum(a: &RepSpec, b: &RepSpec) -> Result<RepSpec> {
    if a.rank_t != b.rank_t || a.rank_aux != b.rank_aux {
        return Err(Error::DimensionMismatch(format!(
            "cannot sum specs of ranks ({},{}) and ({},{})",
            a.rank_t, a.rank_aux, b.rank_t, b.rank_aux
        )));
    }
    if weight_multiset(&a.g_roots) != weight_multiset(&b.g_roots) || a.weyl != b.weyl {
        return Err(Error::InvalidSpec(
            "direct sum requires identical group data".into(),
        ));
    }
    let mut v_weights = a.v_weights.clone();
    v_weights.extend(b.v_weights.clone());
    RepSpec::new(
        format!("{}+{}", a.name, b.name),
        a.rank_t,
        a.rank_aux,
        v_weights,
        a.g_roots.clone(),
        a.weyl.clone(),
    )
}

/// Adjoint representation: `V := g`, i.e. the roots with multiplicity one
/// plus the zero weight with multiplicity `rank_t` for the Cartan directions.
pub fn adjoint(spec: &RepSpec) -> Result<RepSpec> {
    let mut v_weights: Vec<Weight> = spec.g_roots.clone();
    v_weights.push(Weight::new(vec![0; spec.n_total()], spec.rank_t));
    RepSpec::new(
        format!("adjoint({})", spec.name),
        spec.rank_t,
        spec.rank_aux,
        v_weights,
        spec.g_roots.clone(),
        spec.weyl.clone(),
    )
}

/// Cotangent representation `V + V*`.
pub fn cotangent(spec: &RepSpec) -> Result<RepSpec> {
    let d = dual(spec, false)?;
    let mut out = direct_sum(spec, &d)?;
    out.name = format!("cotangent({})", spec.name);
    Ok(out)
}

/// Attach auxiliary torus characters: extend the auxiliary rank by the length
/// of the given vectors and append, per block of weight indices, the given
/// auxiliary character to every weight in the block. Unlisted weights get a
/// zero auxiliary extension. Blocks must not overlap.
pub fn attach_aux_torus(spec: &RepSpec, blocks: &[(Vec<usize>, Vec<i64>)]) -> Result<RepSpec> {
    let added = blocks.first().map_or(0, |(_, t)| t.len());
    if blocks.iter().any(|(_, t)| t.len() != added) {
        return Err(Error::DimensionMismatch(
            "all auxiliary characters must have the same length".into(),
        ));
    }
    let mut assignment: Vec<Option<usize>> = vec![None; spec.v_weights.len()];
    for (bi, (idxs, _)) in blocks.iter().enumerate() {
        for &i in idxs {
            if i >= spec.v_weights.len() {
                return Err(Error::DimensionMismatch(format!(
                    "weight index {i} out of range"
                )));
            }
            if assignment[i].replace(bi).is_some() {
                return Err(Error::InvalidSpec(format!(
                    "weight index {i} assigned to two blocks"
                )));
            }
        }
    }
    let v_weights = spec
        .v_weights
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut v = w.vector.clone();
            match assignment[i] {
                Some(bi) => v.extend_from_slice(&blocks[bi].1),
                None => v.extend(std::iter::repeat(0).take(added)),
            }
            Weight::new(v, w.multiplicity)
        })
        .collect();
    let g_roots = spec
        .g_roots
        .iter()
        .map(|w| {
            let mut v = w.vector.clone();
            v.extend(std::iter::repeat(0).take(added));
            Weight::new(v, w.multiplicity)
        })
        .collect();
    RepSpec::new(
        format!("{}&aux", spec.name),
        spec.rank_t,
        spec.rank_aux + added,
        v_weights,
        g_roots,
        spec.weyl.clone(),
    )
}

/// The standard wheel-relation setup: cotangent space of `spec` with a rank-2
/// auxiliary torus acting by `t1` on `V` and by `t2` on `V*`.
pub fn cotangent_with_aux(spec: &RepSpec) -> Result<RepSpec> {
    if spec.rank_aux != 0 {
        return Err(Error::InvalidSpec(
            "cotangent_with_aux expects a spec without auxiliary torus".into(),
        ));
    }
    let cot = cotangent(spec)?;
    let k = spec.v_weights.len();
    let v_block: Vec<usize> = (0..k).collect();
    let dual_block: Vec<usize> = (k..2 * k).collect();
    let mut out = attach_aux_torus(&cot, &[(v_block, vec![1, 0]), (dual_block, vec![0, 1])])?;
    out.name = format!("cotangent-aux({})", spec.name);
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON file format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SpecFile {
    name: String,
    rank_t: usize,
    rank_aux: usize,
    v_weights: Vec<VWeightEntry>,
    g_roots: GRootsEntry,
    weyl: WeylEntry,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VWeightEntry {
    WithMult(Vec<i64>, usize),
    Bare(Vec<i64>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GRootsEntry {
    List(Vec<RootEntry>),
    Builtin { r#type: String, n: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RootEntry {
    Wrapped((Vec<i64>,)),
    Bare(Vec<i64>),
}

#[derive(Serialize, Deserialize)]
struct WeylEntry {
    r#type: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    generators: Vec<Vec<Vec<i64>>>,
}

/// Parse a spec from its JSON document; all `RepSpec` invariants are checked.
pub fn spec_from_json(text: &str) -> Result<RepSpec> {
    let file: SpecFile = serde_json::from_str(text).map_err(|e| Error::SpecFile(e.to_string()))?;
    let v_weights = file
        .v_weights
        .into_iter()
        .map(|e| match e {
            VWeightEntry::WithMult(v, m) => Weight::new(v, m.max(1)),
            VWeightEntry::Bare(v) => Weight::simple(v),
        })
        .collect();
    let g_roots = match file.g_roots {
        GRootsEntry::List(entries) => entries
            .into_iter()
            .map(|e| match e {
                RootEntry::Wrapped((v,)) => Weight::simple(v),
                RootEntry::Bare(v) => Weight::simple(v),
            })
            .collect(),
        GRootsEntry::Builtin { r#type, n } => {
            if r#type != "gl" {
                return Err(Error::SpecFile(format!(
                    "unknown builtin root system `{}`",
                    r#type
                )));
            }
            if n != file.rank_t {
                return Err(Error::SpecFile(
                    "builtin gl root system rank must equal rank_t".into(),
                ));
            }
            let total = file.rank_t + file.rank_aux;
            let mut roots = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut v = vec![0i64; total];
                        v[i] = 1;
                        v[j] = -1;
                        roots.push(Weight::simple(v));
                    }
                }
            }
            roots
        }
    };
    let weyl = match file.weyl.r#type.as_str() {
        "gl" | "sl" => permutation_group(file.rank_t),
        "signed" | "sp" | "so-odd" => signed_permutation_group(file.rank_t),
        "torus" => vec![WeylElement::identity(file.rank_t)],
        "custom" => {
            let gens = file
                .weyl
                .generators
                .iter()
                .map(|m| WeylElement::new(m.clone()))
                .collect::<Result<Vec<_>>>()?;
            weyl_closure(&gens, file.rank_t, DEFAULT_CLOSURE_CAP)?
        }
        other => {
            return Err(Error::SpecFile(format!("unknown weyl type `{other}`")));
        }
    };
    RepSpec::new(
        file.name,
        file.rank_t,
        file.rank_aux,
        v_weights,
        g_roots,
        weyl,
    )
}

/// Serialize a spec to its JSON document. Weyl data is written as explicit
/// custom generators (the full element list), which round-trips exactly.
pub fn spec_to_json(spec: &RepSpec) -> String {
    let file = SpecFile {
        name: spec.name.clone(),
        rank_t: spec.rank_t,
        rank_aux: spec.rank_aux,
        v_weights: spec
            .v_weights
            .iter()
            .map(|w| VWeightEntry::WithMult(w.vector.clone(), w.multiplicity))
            .collect(),
        g_roots: GRootsEntry::List(
            spec.g_roots
                .iter()
                .map(|w| RootEntry::Wrapped((w.vector.clone(),)))
                .collect(),
        ),
        weyl: WeylEntry {
            r#type: "custom".to_string(),
            generators: spec.weyl.iter().map(|w| w.matrix.clone()).collect(),
        },
    };
    serde_json::to_string_pretty(&file).expect("spec serializes")
}

pub fn load_spec(path: impl AsRef<Path>) -> Result<RepSpec> {
    let text = std::fs::read_to_string(path)?;
    spec_from_json(&text)
}

pub fn save_spec(spec: &RepSpec, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, spec_to_json(spec))?;
    Ok(())
}
