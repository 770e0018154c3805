//! The Coxeter complex of a representation specification: the central
//! hyperplane arrangement in the rational cocharacter space cut out by the
//! torus blocks of all weights of `V` and of the adjoint representation.
//!
//! Cells are encoded as sign vectors over the oriented hyperplane normals,
//! each with a rational witness cocharacter; flats as saturated vanishing
//! sets with a canonical rational basis. Enumeration works flat by flat:
//! the open cells spanning a flat are the chambers of the restricted
//! arrangement, found by incremental hyperplane insertion with an exact
//! rational simplex deciding realizability of strict sign patterns.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, Rat};
use crate::repdata::{primitive_ray, RepSpec, Weight, WeylElement};
use crate::simplex::{primitive_scaled, strict_witness};
use crate::{Error, Result};

/// Sign of a pairing. The ordering `Minus < Zero < Plus` fixes the canonical
/// chamber choices (generic points prefer all-plus chambers).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn of_int(v: i64) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    /// Orientation-adjusted sign: `o` is `+1` or `-1`.
    pub fn oriented(self, o: i64) -> Sign {
        if o >= 0 {
            self
        } else {
            self.flip()
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

/// A cell: the locus of a fixed sign pattern of all arrangement weights,
/// with a rational witness realizing the pattern. Identity, ordering, and
/// hashing are by the sign vector alone.
#[derive(Clone, Debug)]
pub struct Cell {
    pub signs: Vec<Sign>,
    pub witness: Vec<Rat>,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.signs == other.signs
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.signs.cmp(&other.signs)
    }
}
impl std::hash::Hash for Cell {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.signs.hash(state);
    }
}

impl Cell {
    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.symbol()).collect()
    }

    /// Is every sign zero (the cell of the maximal flat)?
    pub fn is_central(&self) -> bool {
        self.signs.iter().all(|&s| s == Sign::Zero)
    }
}

/// A flat: an intersection of arrangement hyperplanes, stored as the
/// saturated set of vanishing rays plus a canonical rational basis and a
/// generic point (a point of the flat on no hyperplane not containing it).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flat {
    pub vanishing: BTreeSet<usize>,
    /// Column vectors spanning the flat, in canonical (RREF-kernel) form.
    pub basis: Vec<Vec<Rat>>,
    pub dim: usize,
    pub generic: Vec<Rat>,
}

enum PartKind {
    V,
    G,
}

struct WeightEntry {
    kind: PartKind,
    weight: Weight,
    /// Ray index and orientation of the torus block; `None` when the torus
    /// block vanishes (such weights cut no hyperplane and carry no sign).
    ray: Option<(usize, i64)>,
}

/// Which weight multiset an Euler product ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Part {
    V,
    G,
}

/// The Coxeter complex of a specification, with all cells and flats
/// enumerated eagerly. Immutable after construction.
pub struct Complex {
    pub spec: RepSpec,
    rays: Vec<Vec<i64>>,
    entries: Vec<WeightEntry>,
    flats: Vec<Flat>,
    cells: Vec<Cell>,
    cell_idx: HashMap<Vec<Sign>, usize>,
    flat_idx: HashMap<Vec<usize>, usize>,
    weyl_idx: HashMap<Vec<Vec<i64>>, usize>,
}

impl Complex {
    pub fn new(spec: RepSpec) -> Result<Complex> {
        let r = spec.rank_t;
        let mut rays: Vec<Vec<i64>> = Vec::new();
        let ray_of = |v: &[i64], rays: &mut Vec<Vec<i64>>| -> Option<(usize, i64)> {
            if v.iter().all(|&c| c == 0) {
                return None;
            }
            let mut p = primitive_ray(v);
            let mut orient = 1i64;
            if let Some(first) = p.iter().find(|&&c| c != 0) {
                if *first < 0 {
                    p = p.iter().map(|&c| -c).collect();
                    orient = -1;
                }
            }
            let idx = match rays.iter().position(|q| q == &p) {
                Some(i) => i,
                None => {
                    rays.push(p);
                    rays.len() - 1
                }
            };
            Some((idx, orient))
        };
        let mut entries = Vec::new();
        for w in &spec.v_weights {
            let ray = ray_of(w.t_block(r), &mut rays);
            entries.push(WeightEntry {
                kind: PartKind::V,
                weight: w.clone(),
                ray,
            });
        }
        for w in &spec.g_roots {
            let ray = ray_of(w.t_block(r), &mut rays);
            entries.push(WeightEntry {
                kind: PartKind::G,
                weight: w.clone(),
                ray,
            });
        }
        // Canonical ray order; remap entry indices accordingly.
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
        let mut rank_of = vec![0usize; rays.len()];
        for (new, &old) in order.iter().enumerate() {
            rank_of[old] = new;
        }
        let rays: Vec<Vec<i64>> = order.iter().map(|&i| rays[i].clone()).collect();
        for e in &mut entries {
            if let Some((idx, _)) = &mut e.ray {
                *idx = rank_of[*idx];
            }
        }

        let weyl_idx = spec
            .weyl
            .iter()
            .enumerate()
            .map(|(i, w)| (w.matrix.clone(), i))
            .collect();
        let mut cx = Complex {
            spec,
            rays,
            entries,
            flats: Vec::new(),
            cells: Vec::new(),
            cell_idx: HashMap::new(),
            flat_idx: HashMap::new(),
            weyl_idx,
        };
        cx.enumerate_flats();
        cx.enumerate_cells()?;
        Ok(cx)
    }

    /// Index of a group element in the spec's canonical (sorted) element
    /// list; ascending index is ascending lexicographic row-major order.
    pub fn weyl_index(&self, w: &WeylElement) -> usize {
        *self
            .weyl_idx
            .get(&w.matrix)
            .expect("element belongs to the group")
    }

    pub fn weyl_mul(&self, a: usize, b: usize) -> usize {
        self.weyl_index(&self.spec.weyl[a].compose(&self.spec.weyl[b]))
    }

    pub fn weyl_inv(&self, a: usize) -> usize {
        self.weyl_index(&self.spec.weyl[a].inverse())
    }

    pub fn rank(&self) -> usize {
        self.spec.rank_t
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn cell_id(&self, cell: &Cell) -> usize {
        *self
            .cell_idx
            .get(&cell.signs)
            .unwrap_or_else(|| panic!("unknown cell {}", cell.sign_string()))
    }

    pub fn flat_id(&self, flat: &Flat) -> usize {
        let key: Vec<usize> = flat.vanishing.iter().copied().collect();
        *self
            .flat_idx
            .get(&key)
            .unwrap_or_else(|| panic!("unknown flat {key:?}"))
    }

    fn check_rank(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "cocharacter length {} does not match rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    fn check_cell(&self, c: &Cell) -> Result<()> {
        if c.signs.len() != self.rays.len() || !self.cell_idx.contains_key(&c.signs) {
            return Err(Error::Precondition(format!(
                "cell {} does not belong to this complex",
                c.sign_string()
            )));
        }
        Ok(())
    }

    /// Pairing of an integer character (torus block) with a rational
    /// cocharacter.
    fn pair(a: &[i64], x: &[Rat]) -> Rat {
        a.iter()
            .zip(x)
            .map(|(&c, v)| v * rat(c))
            .fold(Rat::zero(), |acc, v| acc + v)
    }

    /// The cell containing a rational cocharacter.
    pub fn cell_of_cocharacter(&self, lambda: &[Rat]) -> Result<Cell> {
        self.check_rank(lambda)?;
        let signs = self
            .rays
            .iter()
            .map(|a| Sign::of(&Self::pair(a, lambda)))
            .collect();
        Ok(Cell {
            signs,
            witness: lambda.to_vec(),
        })
    }

    pub fn cell_of_int_cocharacter(&self, lambda: &[i64]) -> Result<Cell> {
        let v: Vec<Rat> = lambda.iter().map(|&c| rat(c)).collect();
        self.cell_of_cocharacter(&v)
    }

    /// Tits product: the first cell met walking from `c` toward `d`,
    /// computed by the sign rule (the sign of `c` where nonzero, otherwise
    /// the sign of `d`).
    pub fn tits_product(&self, c: &Cell, d: &Cell) -> Result<Cell> {
        self.check_cell(c)?;
        self.check_cell(d)?;
        let signs: Vec<Sign> = c
            .signs
            .iter()
            .zip(&d.signs)
            .map(|(&a, &b)| if a == Sign::Zero { b } else { a })
            .collect();
        let witness = self.segment_point(&c.witness, &d.witness, &signs);
        Ok(Cell { signs, witness })
    }

    /// A point `lambda + eps * mu` with exactly the requested signs, for an
    /// exactly computed small `eps > 0`.
    fn segment_point(&self, lambda: &[Rat], mu: &[Rat], signs: &[Sign]) -> Vec<Rat> {
        let mut eps = Rat::one();
        for a in &self.rays {
            let pl = Self::pair(a, lambda);
            let pm = Self::pair(a, mu);
            if !pl.is_zero() && !pm.is_zero() {
                let bound = (pl / &pm).abs();
                if bound < eps {
                    eps = bound;
                }
            }
        }
        eps /= rat(2);
        let point: Vec<Rat> = lambda
            .iter()
            .zip(mu)
            .map(|(l, m)| l + &(m * &eps))
            .collect();
        debug_assert_eq!(
            self.rays
                .iter()
                .map(|a| Sign::of(&Self::pair(a, &point)))
                .collect::<Vec<_>>(),
            signs,
            "tits witness construction failed"
        );
        let _ = signs;
        point
    }

    /// `c <= d` in the face order: `d` is contained in the closure of `c`.
    pub fn cell_leq(&self, c: &Cell, d: &Cell) -> bool {
        c.signs.iter().zip(&d.signs).all(|(&a, &b)| {
            if a == Sign::Zero {
                b == Sign::Zero
            } else {
                b == Sign::Zero || b == a
            }
        })
    }

    /// `c <= f`: the flat is contained in the span of the cell.
    pub fn cell_leq_flat(&self, c: &Cell, f: &Flat) -> bool {
        self.zero_set(c).is_subset(&f.vanishing)
    }

    /// `f <= g`: reverse inclusion of subspaces, i.e. `g` is contained in
    /// `f`; equivalently the vanishing set of `f` is contained in that of
    /// `g` (both saturated).
    pub fn flat_leq(&self, f: &Flat, g: &Flat) -> bool {
        f.vanishing.is_subset(&g.vanishing)
    }

    fn zero_set(&self, c: &Cell) -> BTreeSet<usize> {
        c.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Zero)
            .map(|(i, _)| i)
            .collect()
    }

    /// The linear span of a cell, as a flat.
    pub fn span_flat(&self, c: &Cell) -> Result<Flat> {
        self.check_cell(c)?;
        let key: Vec<usize> = self.zero_set(c).into_iter().collect();
        let idx = self
            .flat_idx
            .get(&key)
            .ok_or_else(|| Error::Internal(format!("span of cell {} is not a flat", c.sign_string())))?;
        Ok(self.flats[*idx].clone())
    }

    /// The flat spanned by the cell of a cocharacter. This is how flats are
    /// addressed in the operator API.
    pub fn flat_of_cocharacter(&self, mu: &[Rat]) -> Result<Flat> {
        let cell = self.cell_of_cocharacter(mu)?;
        self.span_flat(&cell)
    }

    pub fn flat_of_int_cocharacter(&self, mu: &[i64]) -> Result<Flat> {
        let v: Vec<Rat> = mu.iter().map(|&c| rat(c)).collect();
        self.flat_of_cocharacter(&v)
    }

    /// The maximal flat in the partial order: the intersection of all
    /// hyperplanes of the arrangement (the ambient space when there are
    /// none).
    pub fn maximal_flat(&self) -> Flat {
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let sat = self.saturate(&all);
        let key: Vec<usize> = sat.iter().copied().collect();
        self.flats[self.flat_idx[&key]].clone()
    }

    pub fn ambient_flat(&self) -> Flat {
        let sat = self.saturate(&[]);
        let key: Vec<usize> = sat.iter().copied().collect();
        self.flats[self.flat_idx[&key]].clone()
    }

    /// A rational point of the flat lying on no arrangement hyperplane that
    /// does not contain the flat.
    pub fn generic_point(&self, f: &Flat) -> Vec<Rat> {
        f.generic.clone()
    }

    // -- Weyl action --------------------------------------------------------

    /// Ray permutation with orientation for the character action of
    /// `w^{-1}`: entry `i` gives `(j, o)` with `w^{-1} ray_i = o * ray_j`
    /// up to positive scale.
    fn ray_action_inv(&self, w: &WeylElement) -> Vec<(usize, i64)> {
        let winv = w.inverse();
        self.rays
            .iter()
            .map(|a| {
                let image = winv.apply_char(a);
                let mut p = primitive_ray(&image);
                let mut o = 1i64;
                if let Some(first) = p.iter().find(|&&c| c != 0) {
                    if *first < 0 {
                        p = p.iter().map(|&c| -c).collect();
                        o = -1;
                    }
                }
                let j = self
                    .rays
                    .iter()
                    .position(|q| q == &p)
                    .expect("Weyl group permutes arrangement rays");
                (j, o)
            })
            .collect()
    }

    /// Action of a Weyl element on a cell: signs permuted along
    /// `alpha -> w^{-1} alpha`, witness mapped by `w`.
    pub fn act_on_cell(&self, w: &WeylElement, c: &Cell) -> Cell {
        let action = self.ray_action_inv(w);
        let signs: Vec<Sign> = action
            .iter()
            .map(|&(j, o)| c.signs[j].oriented(o))
            .collect();
        let witness = w.apply_cochar(&c.witness);
        debug_assert_eq!(
            self.cell_of_cocharacter(&witness).unwrap().signs,
            signs,
            "cell action inconsistent with witness action"
        );
        Cell { signs, witness }
    }

    pub fn act_on_flat(&self, w: &WeylElement, f: &Flat) -> Flat {
        let action = self.ray_action_inv(w);
        let vanishing: Vec<usize> = (0..self.rays.len())
            .filter(|&i| f.vanishing.contains(&action[i].0))
            .collect();
        let idx = self
            .flat_idx
            .get(&vanishing)
            .expect("Weyl group permutes flats");
        self.flats[*idx].clone()
    }

    // -- Euler class support -------------------------------------------------

    /// Iterate the arrangement weights of one part with their cell signs and
    /// flat-vanishing status.
    pub(crate) fn part_weights(&self, part: Part) -> impl Iterator<Item = (&Weight, Option<(usize, i64)>)> {
        self.entries
            .iter()
            .filter(move |e| matches!((&e.kind, part), (PartKind::V, Part::V) | (PartKind::G, Part::G)))
            .map(|e| (&e.weight, e.ray))
    }

    /// Sign of an arrangement weight (by entry data) on a cell.
    pub(crate) fn weight_sign(&self, cell: &Cell, ray: Option<(usize, i64)>) -> Sign {
        match ray {
            None => Sign::Zero,
            Some((idx, o)) => cell.signs[idx].oriented(o),
        }
    }

    /// Does a weight (by entry data) vanish identically on a flat?
    pub(crate) fn weight_vanishes_on(&self, flat: &Flat, ray: Option<(usize, i64)>) -> bool {
        match ray {
            None => true,
            Some((idx, _)) => flat.vanishing.contains(&idx),
        }
    }

    // -- enumeration ---------------------------------------------------------

    fn saturate(&self, seed: &[usize]) -> BTreeSet<usize> {
        let rows: Vec<Vec<Rat>> = seed
            .iter()
            .map(|&i| self.rays[i].iter().map(|&c| rat(c)).collect())
            .collect();
        let basis = kernel_basis(&rows, self.rank());
        (0..self.rays.len())
            .filter(|&i| {
                basis.iter().all(|col| {
                    Self::pair(&self.rays[i], col).is_zero()
                })
            })
            .collect()
    }

    fn enumerate_flats(&mut self) {
        let mut seen: HashMap<Vec<usize>, (BTreeSet<usize>, Vec<Vec<Rat>>)> = HashMap::new();
        let ambient = self.saturate(&[]);
        let mut queue = vec![ambient.clone()];
        let key = |s: &BTreeSet<usize>| -> Vec<usize> { s.iter().copied().collect() };
        seen.insert(
            key(&ambient),
            (
                ambient.clone(),
                kernel_basis(
                    &ambient
                        .iter()
                        .map(|&i| self.rays[i].iter().map(|&c| rat(c)).collect())
                        .collect::<Vec<_>>(),
                    self.rank(),
                ),
            ),
        );
        while let Some(current) = queue.pop() {
            for i in 0..self.rays.len() {
                if current.contains(&i) {
                    continue;
                }
                let mut seed: Vec<usize> = current.iter().copied().collect();
                seed.push(i);
                let sat = self.saturate(&seed);
                let k = key(&sat);
                if !seen.contains_key(&k) {
                    let rows: Vec<Vec<Rat>> = sat
                        .iter()
                        .map(|&j| self.rays[j].iter().map(|&c| rat(c)).collect())
                        .collect();
                    let basis = kernel_basis(&rows, self.rank());
                    seen.insert(k, (sat.clone(), basis));
                    queue.push(sat);
                }
            }
        }
        let mut flats: Vec<(BTreeSet<usize>, Vec<Vec<Rat>>)> = seen.into_values().collect();
        flats.sort_by(|a, b| {
            let ka: Vec<usize> = a.0.iter().copied().collect();
            let kb: Vec<usize> = b.0.iter().copied().collect();
            (ka.len(), ka).cmp(&(kb.len(), kb))
        });
        self.flats = flats
            .into_iter()
            .map(|(vanishing, basis)| {
                let dim = basis.len();
                Flat {
                    vanishing,
                    basis,
                    dim,
                    generic: Vec::new(), // filled during cell enumeration
                }
            })
            .collect();
        self.flat_idx = self
            .flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vanishing.iter().copied().collect(), i))
            .collect();
    }

    fn enumerate_cells(&mut self) -> Result<()> {
        let mut all_cells: Vec<Cell> = Vec::new();
        let mut generics: Vec<Vec<Rat>> = vec![Vec::new(); self.flats.len()];
        for (fi, flat) in self.flats.iter().enumerate() {
            let chambers = self.chambers_on_flat(flat)?;
            let best = chambers
                .iter()
                .max_by(|a, b| a.signs.cmp(&b.signs))
                .expect("every flat carries at least one cell");
            generics[fi] = best.witness.clone();
            all_cells.extend(chambers);
        }
        for (fi, g) in generics.into_iter().enumerate() {
            self.flats[fi].generic = g;
        }
        all_cells.sort();
        self.cells = all_cells;
        self.cell_idx = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.signs.clone(), i))
            .collect();
        Ok(())
    }

    /// The open cells spanning a flat: chambers of the arrangement induced
    /// on the flat, via incremental hyperplane insertion.
    fn chambers_on_flat(&self, flat: &Flat) -> Result<Vec<Cell>> {
        let r = self.rank();
        let f = flat.dim;
        if f == 0 {
            let signs = vec![Sign::Zero; self.rays.len()];
            return Ok(vec![Cell {
                signs,
                witness: vec![Rat::zero(); r],
            }]);
        }
        // Group the cutting rays by the hyperplane they induce on the flat.
        struct Group {
            normal: Vec<Rat>,
            members: Vec<(usize, i64)>, // ray index, orientation vs normal
        }
        let mut groups: Vec<Group> = Vec::new();
        for (i, ray) in self.rays.iter().enumerate() {
            if flat.vanishing.contains(&i) {
                continue;
            }
            let induced: Vec<Rat> = flat
                .basis
                .iter()
                .map(|col| Self::pair(ray, col))
                .collect();
            let (canon, orient) = canonical_direction(&induced);
            match groups.iter_mut().find(|g| g.normal == canon) {
                Some(g) => g.members.push((i, orient)),
                None => groups.push(Group {
                    normal: canon,
                    members: vec![(i, orient)],
                }),
            }
        }
        groups.sort_by(|a, b| a.normal.partial_cmp(&b.normal).unwrap());

        // Incremental insertion over the deduplicated induced normals.
        let mut chambers: Vec<(Vec<Sign>, Vec<Rat>)> =
            vec![(Vec::new(), initial_point(f))];
        for (gi, group) in groups.iter().enumerate() {
            let mut next = Vec::new();
            for (signs, w) in &chambers {
                let here = Sign::of(&dot(&group.normal, w));
                let try_side = |side: Sign, next: &mut Vec<(Vec<Sign>, Vec<Rat>)>| {
                    if side == here && here != Sign::Zero {
                        let mut s = signs.clone();
                        s.push(side);
                        next.push((s, w.clone()));
                        return;
                    }
                    // Exact LP for the strict system of this sign pattern.
                    let mut rows: Vec<Vec<Rat>> = Vec::new();
                    for (k, &sk) in signs.iter().enumerate() {
                        rows.push(signed_row(&groups[k].normal, sk));
                    }
                    rows.push(signed_row(&group.normal, side));
                    if let Some(x) = strict_witness(&rows, f) {
                        let mut s = signs.clone();
                        s.push(side);
                        next.push((s, x));
                    }
                };
                try_side(Sign::Plus, &mut next);
                try_side(Sign::Minus, &mut next);
            }
            chambers = next;
            debug_assert!(!chambers.is_empty(), "hyperplane {gi} removed all chambers");
        }

        // Map back to full sign vectors and ambient witnesses.
        let mut out = Vec::with_capacity(chambers.len());
        for (gsigns, y) in chambers {
            let mut signs = vec![Sign::Zero; self.rays.len()];
            for (gi, group) in groups.iter().enumerate() {
                for &(ray, orient) in &group.members {
                    signs[ray] = gsigns[gi].oriented(orient);
                }
            }
            let witness_raw: Vec<Rat> = (0..r)
                .map(|row| {
                    flat.basis
                        .iter()
                        .zip(&y)
                        .map(|(col, yi)| &col[row] * yi)
                        .fold(Rat::zero(), |acc, v| acc + v)
                })
                .collect();
            let witness = primitive_scaled(&witness_raw);
            debug_assert_eq!(
                self.rays
                    .iter()
                    .map(|a| Sign::of(&Self::pair(a, &witness)))
                    .collect::<Vec<_>>(),
                signs
            );
            out.push(Cell { signs, witness });
        }
        out.sort();
        Ok(out)
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rat::zero(), |acc, v| acc + v)
}

fn signed_row(normal: &[Rat], sign: Sign) -> Vec<Rat> {
    match sign {
        Sign::Plus => normal.to_vec(),
        Sign::Minus => normal.iter().map(|v| -v).collect(),
        Sign::Zero => unreachable!("chambers have strict signs"),
    }
}

/// First basis direction as a start witness for the empty constraint set.
fn initial_point(dim: usize) -> Vec<Rat> {
    let mut p = vec![Rat::zero(); dim];
    p[0] = Rat::one();
    p
}

/// Scale a rational direction to a canonical representative of its line:
/// primitive integer entries, first nonzero entry positive. Returns the
/// representative and the orientation of the input relative to it.
fn canonical_direction(v: &[Rat]) -> (Vec<Rat>, i64) {
    let scaled = primitive_scaled(v);
    let first = scaled
        .iter()
        .find(|c| !c.is_zero())
        .expect("induced normal is nonzero");
    if first.is_negative() {
        (scaled.iter().map(|c| -c).collect(), -1)
    } else {
        (scaled, 1)
    }
}

/// Canonical basis of the kernel of the given rows, as column vectors:
/// Gauss-Jordan elimination, free variables carrying identity blocks.
pub fn kernel_basis(rows: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone().recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for i in 0..nrows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..dim {
                    let delta = &f * &m[row][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == nrows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut col = vec![Rat::zero(); dim];
        col[free] = Rat::one();
        for &(prow, pcol) in &pivots {
            col[pcol] = -m[prow][free].clone();
        }
        basis.push(col);
    }
    basis
}

/// Test oracle for the Tits product, independent of the sign rule: walk the
/// segment from the witness of `c` to the witness of `d` and return the cell
/// entered immediately after the start, by sorting the exact crossing
/// parameters of all hyperplanes.
pub mod oracle {
    use super::*;

    pub fn segment_first_cell(cx: &Complex, c: &Cell, d: &Cell) -> Cell {
        let lambda = &c.witness;
        let mu = &d.witness;
        // Crossing parameters t in (0, 1]: <a, (1-t)l + t m> = 0, i.e.
        // t = <a,l> / (<a,l> - <a,m>).
        let mut t_min: Option<Rat> = None;
        for a in cx.rays() {
            let pl = Complex::pair(a, lambda);
            let pm = Complex::pair(a, mu);
            let den = &pl - &pm;
            if den.is_zero() {
                continue;
            }
            let t = &pl / &den;
            if t.is_positive() && t <= Rat::one() && t_min.as_ref().is_none_or(|m| &t < m) {
                t_min = Some(t);
            }
        }
        let t_eval = match t_min {
            Some(t) => t / rat(2),
            None => Rat::new(1.into(), 2.into()),
        };
        let point: Vec<Rat> = lambda
            .iter()
            .zip(mu)
            .map(|(l, m)| l + &((m - l) * &t_eval))
            .collect();
        cx.cell_of_cocharacter(&point).expect("point has full rank")
    }
}
