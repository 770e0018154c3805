//! Euler classes, induction kernels, shuffle induction, localized
//! restriction, braiding operators, degree bookkeeping, the Mackey-formula
//! verifier, and the wheel-relation predicate.
//!
//! All operators act on elements of Weyl-invariant polynomial rings (and
//! their localizations at Euler classes), addressed by a home flat. The
//! conventions: for a cell `C` and flat `F` with `C <= F`, the Euler class of
//! a part `W` is the product of the weights of `W` negative on `C` and
//! vanishing on `F`, with multiplicities; the kernel is `k_{C,F} =
//! Eu_V / Eu_g`; induction is the coset-averaged multiplication by the
//! kernel, restriction the division by it, and the braiding the ratio of two
//! kernels with the same span.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Poly, Rat, RatFunc};
use crate::arrangement::{Cell, Complex, Flat, Part, Sign};
use crate::repdata::{primitive_ray, RepSpec, Weight, WeylElement};
use crate::weylgroups::{
    coset_reps, double_coset_reps, is_invariant, stabilizer_of_flat, Subgroup,
};
use crate::{Error, Result};

/// An element of the (localized) invariant ring attached to a flat.
#[derive(Clone, Debug)]
pub struct ModuleElement {
    pub value: RatFunc,
    pub home: Flat,
    /// The subgroup fixing the element (always the stabilizer of the home).
    pub invariance: Subgroup,
    /// Weights whose products are invertible; the denominator of `value`
    /// divides a product of these (localization data).
    pub denom_support: Vec<Weight>,
}

/// Degree bookkeeping for a cell/flat pair: `d_F`, `d_<C>`, and the
/// codimension `d_{C,F}`, all computed from weight multiset counts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeData {
    pub d_flat: i64,
    pub d_span: i64,
    pub d_cell_flat: i64,
}

impl DegreeData {
    /// `d_F - d_<C> - 2 d_{C,F}`; zero for weakly symmetric representations.
    pub fn grading_defect(&self) -> i64 {
        self.d_flat - self.d_span - 2 * self.d_cell_flat
    }
}

/// Outcome of a Mackey-formula check, with both sides for reporting.
#[derive(Clone, Debug)]
pub struct MackeySides {
    pub lhs: ModuleElement,
    pub rhs: ModuleElement,
}

impl MackeySides {
    pub fn holds(&self) -> bool {
        self.lhs.value == self.rhs.value
    }
}

/// Operator engine over a complex, with memoized kernels, stabilizers, and
/// coset data. Purely a cache; all results are deterministic.
pub struct Engine<'a> {
    pub cx: &'a Complex,
    kernels: RefCell<HashMap<(usize, usize), RatFunc>>,
    stabs: RefCell<HashMap<usize, Subgroup>>,
    cosets: RefCell<HashMap<(usize, usize), Vec<usize>>>,
    dcosets: RefCell<HashMap<(usize, usize, usize), Vec<usize>>>,
}

impl<'a> Engine<'a> {
    pub fn new(cx: &'a Complex) -> Engine<'a> {
        Engine {
            cx,
            kernels: RefCell::new(HashMap::new()),
            stabs: RefCell::new(HashMap::new()),
            cosets: RefCell::new(HashMap::new()),
            dcosets: RefCell::new(HashMap::new()),
        }
    }

    fn require_cell_leq_flat(&self, c: &Cell, f: &Flat) -> Result<()> {
        if !self.cx.cell_leq_flat(c, f) {
            return Err(Error::Precondition(format!(
                "cell {} is not <= the flat {:?}",
                c.sign_string(),
                f.vanishing
            )));
        }
        Ok(())
    }

    pub fn stabilizer(&self, f: &Flat) -> Result<Subgroup> {
        let id = self.cx.flat_id(f);
        if let Some(s) = self.stabs.borrow().get(&id) {
            return Ok(s.clone());
        }
        let s = stabilizer_of_flat(self.cx, f)?;
        self.stabs.borrow_mut().insert(id, s.clone());
        Ok(s)
    }

    fn coset_reps_cached(&self, h_flat: &Flat, g_flat: &Flat) -> Result<Vec<usize>> {
        let key = (self.cx.flat_id(h_flat), self.cx.flat_id(g_flat));
        if let Some(r) = self.cosets.borrow().get(&key) {
            return Ok(r.clone());
        }
        let h = self.stabilizer(h_flat)?;
        let g = self.stabilizer(g_flat)?;
        let reps = coset_reps(self.cx, &h, &g)?;
        self.cosets.borrow_mut().insert(key, reps.clone());
        Ok(reps)
    }

    fn double_coset_reps_cached(
        &self,
        l_flat: &Flat,
        g_flat: &Flat,
        r_flat: &Flat,
    ) -> Result<Vec<usize>> {
        let key = (
            self.cx.flat_id(l_flat),
            self.cx.flat_id(g_flat),
            self.cx.flat_id(r_flat),
        );
        if let Some(r) = self.dcosets.borrow().get(&key) {
            return Ok(r.clone());
        }
        let l = self.stabilizer(l_flat)?;
        let g = self.stabilizer(g_flat)?;
        let r = self.stabilizer(r_flat)?;
        let reps = double_coset_reps(self.cx, &l, &g, &r)?;
        self.dcosets.borrow_mut().insert(key, reps.clone());
        Ok(reps)
    }

    // -- Euler classes and kernels -------------------------------------------

    /// Product of the weights of the chosen part that are negative on the
    /// cell and vanish on the flat, with multiplicities; 1 when empty.
    pub fn euler_class(&self, part: Part, c: &Cell, f: &Flat) -> Result<Poly> {
        self.require_cell_leq_flat(c, f)?;
        let n = self.cx.spec.n_total();
        let mut out = Poly::one(n);
        for (w, ray) in self.cx.part_weights(part) {
            if self.cx.weight_sign(c, ray) == Sign::Minus && self.cx.weight_vanishes_on(f, ray) {
                let form = Poly::linear_form_int(n, &w.vector);
                out = out.mul(&form.pow(w.multiplicity as u32));
            }
        }
        Ok(out)
    }

    /// The weights entering an Euler class, as a multiset (used for
    /// localization bookkeeping).
    fn euler_weights(&self, part: Part, c: &Cell, f: &Flat) -> Vec<Weight> {
        self.cx
            .part_weights(part)
            .filter(|(_, ray)| {
                self.cx.weight_sign(c, *ray) == Sign::Minus && self.cx.weight_vanishes_on(f, *ray)
            })
            .map(|(w, _)| w.clone())
            .collect()
    }

    /// The induction kernel `k_{C,F} = Eu_V / Eu_g` in canonical form.
    pub fn kernel(&self, c: &Cell, f: &Flat) -> Result<RatFunc> {
        let key = (self.cx.cell_id(c), self.cx.flat_id(f));
        if let Some(k) = self.kernels.borrow().get(&key) {
            return Ok(k.clone());
        }
        let eu_v = self.euler_class(Part::V, c, f)?;
        let eu_g = self.euler_class(Part::G, c, f)?;
        let k = RatFunc::new(eu_v, eu_g)?;
        self.kernels.borrow_mut().insert(key, k.clone());
        Ok(k)
    }

    /// `k_C`: the kernel against the maximal flat (the intersection of all
    /// hyperplanes).
    pub fn kernel_total(&self, c: &Cell) -> Result<RatFunc> {
        self.kernel(c, &self.cx.maximal_flat())
    }

    /// Kernel addressed by cocharacters, matching the `k_{lambda,mu}`
    /// indexing of the worked examples: the cell of `lambda` against the
    /// flat spanned by the cell of `mu`.
    pub fn kernel_by_cochars(&self, lambda: &[i64], mu: &[i64]) -> Result<RatFunc> {
        let c = self.cx.cell_of_int_cocharacter(lambda)?;
        let f = self.cx.flat_of_int_cocharacter(mu)?;
        self.kernel(&c, &f)
    }

    // -- module elements ------------------------------------------------------

    /// Wrap a W^home-invariant polynomial as a module element.
    pub fn polynomial_element(&self, p: Poly, home: &Flat) -> Result<ModuleElement> {
        self.element(RatFunc::from_poly(p), home, Vec::new())
    }

    /// Wrap a value with explicit localization data; checks invariance and
    /// that the denominator divides a product of support weights.
    pub fn element(
        &self,
        value: RatFunc,
        home: &Flat,
        denom_support: Vec<Weight>,
    ) -> Result<ModuleElement> {
        let invariance = self.stabilizer(home)?;
        if !is_invariant(self.cx, &value, &invariance) {
            return Err(Error::Precondition(
                "element is not invariant under the stabilizer of its home flat".into(),
            ));
        }
        if !denominator_in_support(&value, &denom_support, self.cx.spec.n_total()) {
            return Err(Error::Precondition(
                "denominator does not divide a product of support weights".into(),
            ));
        }
        Ok(ModuleElement {
            value,
            home: home.clone(),
            invariance,
            denom_support,
        })
    }

    /// Action of a Weyl element on a module element.
    pub fn act_element(&self, w: &WeylElement, elem: &ModuleElement) -> Result<ModuleElement> {
        let home = self.cx.act_on_flat(w, &elem.home);
        let value = elem.value.apply_matrix(&w.matrix);
        let support = elem
            .denom_support
            .iter()
            .map(|s| Weight::new(w.apply_char(&s.vector), s.multiplicity))
            .collect();
        self.element(value, &home, support)
    }

    // -- induction / restriction / braiding -----------------------------------

    /// Shuffle induction `Ind_C^F`: the sum over coset representatives of
    /// `W^F / W^<C>` of `w . (f k_{C,F})`. Polynomial inputs produce
    /// polynomial outputs (the kernels' denominators cancel in the sum).
    pub fn induct(&self, c: &Cell, f: &Flat, elem: &ModuleElement) -> Result<ModuleElement> {
        self.require_cell_leq_flat(c, f)?;
        let span_c = self.cx.span_flat(c)?;
        if elem.home != span_c {
            return Err(Error::Precondition(
                "induction input must live at the span of the cell".into(),
            ));
        }
        let h = self.stabilizer(&span_c)?;
        if !support_is_stable(self.cx, &elem.denom_support, &h) {
            return Err(Error::Precondition(
                "denominator support is not stable under W^<C>".into(),
            ));
        }
        let nv = elem.value.nvars();
        let kernel = self.kernel(c, f)?.extend_vars(nv);
        let base = elem.value.mul(&kernel);
        let mut acc = RatFunc::zero(nv);
        for &w in &self.coset_reps_cached(&span_c, f)? {
            acc = acc.add(&base.apply_matrix(&self.cx.spec.weyl[w].matrix));
        }
        if elem.value.is_polynomial() {
            assert!(
                acc.is_polynomial(),
                "induction of a polynomial failed to clear denominators"
            );
        }
        let mut support = elem.denom_support.clone();
        if !acc.is_polynomial() {
            support.extend(self.euler_weights(Part::G, c, f));
            support = orbit_support(self.cx, &support, &self.stabilizer(f)?);
        } else {
            support.clear();
        }
        let out = self.element(acc, f, support)?;
        debug_assert!(is_invariant(self.cx, &out.value, &out.invariance));
        Ok(out)
    }

    /// Localized restriction `Res_F^C`: division by the kernel, landing in
    /// the invariants at the span of `C` localized at `Eu_{V,C,F}`.
    pub fn restrict(&self, f: &Flat, c: &Cell, elem: &ModuleElement) -> Result<ModuleElement> {
        self.require_cell_leq_flat(c, f)?;
        if elem.home != *f {
            return Err(Error::Precondition(
                "restriction input must live at the flat".into(),
            ));
        }
        let nv = elem.value.nvars();
        let kernel = self.kernel(c, f)?.extend_vars(nv);
        let value = elem.value.div(&kernel)?;
        let span_c = self.cx.span_flat(c)?;
        let mut support = elem.denom_support.clone();
        support.extend(self.euler_weights(Part::V, c, f));
        self.element(value, &span_c, support)
    }

    /// Braiding scalar `tau_{C,F}^{C',F} = k_{C,F} / k_{C',F}` for two cells
    /// with the same span; an invertible multiplier of localized modules.
    pub fn braiding(&self, c: &Cell, c_prime: &Cell, f: &Flat) -> Result<RatFunc> {
        let span_c = self.cx.span_flat(c)?;
        let span_cp = self.cx.span_flat(c_prime)?;
        if span_c != span_cp {
            return Err(Error::Precondition(
                "braiding requires cells with the same span".into(),
            ));
        }
        self.require_cell_leq_flat(c, f)?;
        self.require_cell_leq_flat(c_prime, f)?;
        self.kernel(c, f)?.div(&self.kernel(c_prime, f)?)
    }

    /// Braiding against the maximal flat (`tau_C^{C'}`).
    pub fn braiding_total(&self, c: &Cell, c_prime: &Cell) -> Result<RatFunc> {
        self.braiding(c, c_prime, &self.cx.maximal_flat())
    }

    // -- Mackey formula --------------------------------------------------------

    /// Left-hand side `Res_F^{C'} . Ind_C^F` applied to `elem`.
    pub fn mackey_lhs(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
    ) -> Result<ModuleElement> {
        let inducted = self.induct(c, f, elem)?;
        self.restrict(f, c_prime, &inducted)
    }

    /// Right-hand side of the Mackey formula with canonical double-coset
    /// representatives.
    pub fn mackey_rhs(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
    ) -> Result<ModuleElement> {
        let span_c = self.cx.span_flat(c)?;
        let span_cp = self.cx.span_flat(c_prime)?;
        let reps = self.double_coset_reps_cached(&span_cp, f, &span_c)?;
        self.mackey_rhs_with_reps(c, c_prime, f, elem, &reps)
    }

    /// Right-hand side with explicit double-coset representatives: the sum
    /// over representatives `w` of
    /// `Ind_{C' o wC}^{<C'>} . tau_{wC o C'}^{C' o wC} . Res_{<wC>}^{wC o C'} . w`.
    pub fn mackey_rhs_with_reps(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
        reps: &[usize],
    ) -> Result<ModuleElement> {
        self.require_cell_leq_flat(c, f)?;
        self.require_cell_leq_flat(c_prime, f)?;
        let span_cp = self.cx.span_flat(c_prime)?;
        let nv = elem.value.nvars();
        let mut acc = RatFunc::zero(nv);
        let mut support: Vec<Weight> = Vec::new();
        for &w in reps {
            let welem = &self.cx.spec.weyl[w];
            let moved = self.act_element(welem, elem)?;
            let d = self.cx.act_on_cell(welem, c);
            let span_d = self.cx.span_flat(&d)?;
            debug_assert_eq!(moved.home, span_d);
            let a = self.cx.tits_product(&d, c_prime)?; // wC o C'
            let b = self.cx.tits_product(c_prime, &d)?; // C' o wC
            let restricted = self.restrict(&span_d, &a, &moved)?;
            let tau = self.braiding(&a, &b, f)?.extend_vars(nv);
            // tau = k_{A,F}/k_{B,F} contributes denominators from Eu_g(A,F)
            // and Eu_V(B,F).
            let mut mid_support = restricted.denom_support.clone();
            mid_support.extend(self.euler_weights(Part::G, &a, f));
            mid_support.extend(self.euler_weights(Part::V, &b, f));
            let mid = self.element(restricted.value.mul(&tau), &restricted.home, mid_support)?;
            let term = self.induct(&b, &span_cp, &mid)?;
            acc = acc.add(&term.value);
            support.extend(term.denom_support);
        }
        let support = orbit_support(self.cx, &support, &self.stabilizer(&span_cp)?);
        self.element(acc, &span_cp, support)
    }

    /// Both sides of the Mackey formula, for checking and reporting.
    pub fn mackey_sides(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
    ) -> Result<MackeySides> {
        Ok(MackeySides {
            lhs: self.mackey_lhs(c, c_prime, f, elem)?,
            rhs: self.mackey_rhs(c, c_prime, f, elem)?,
        })
    }

    pub fn mackey_check(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
    ) -> Result<bool> {
        Ok(self.mackey_sides(c, c_prime, f, elem)?.holds())
    }

    // -- associativity ----------------------------------------------------------

    /// `Ind_C^F = Ind_{C'}^F . Ind_C^{<C'>}` on `elem`, for cells
    /// `C <= C'` and a flat `F` with `C' <= F`.
    pub fn assoc_check(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
    ) -> Result<bool> {
        if !self.cx.cell_leq(c, c_prime) {
            return Err(Error::Precondition("assoc_check needs C <= C'".into()));
        }
        self.require_cell_leq_flat(c_prime, f)?;
        let span_cp = self.cx.span_flat(c_prime)?;
        let direct = self.induct(c, f, elem)?;
        let mid = self.induct(c, &span_cp, elem)?;
        let composed = self.induct(c_prime, f, &mid)?;
        Ok(direct.value == composed.value)
    }

    /// `Res_F^C = Res_{<C'>}^C . Res_F^{C'}` on `elem` at `F`.
    pub fn coassoc_check(
        &self,
        c: &Cell,
        c_prime: &Cell,
        f: &Flat,
        elem: &ModuleElement,
    ) -> Result<bool> {
        if !self.cx.cell_leq(c, c_prime) {
            return Err(Error::Precondition("coassoc_check needs C <= C'".into()));
        }
        self.require_cell_leq_flat(c_prime, f)?;
        let span_cp = self.cx.span_flat(c_prime)?;
        let direct = self.restrict(f, c, elem)?;
        let mid = self.restrict(f, c_prime, elem)?;
        let composed = self.restrict(&span_cp, c, &mid)?;
        Ok(direct.value == composed.value)
    }

    // -- degree bookkeeping ------------------------------------------------------

    /// `d_F`, `d_<C>`, and `d_{C,F}` from weight multiset counts.
    pub fn degree_shift(&self, c: &Cell, f: &Flat) -> Result<DegreeData> {
        self.require_cell_leq_flat(c, f)?;
        let span_c = self.cx.span_flat(c)?;
        let d_of_flat = |flat: &Flat| -> i64 {
            let v: i64 = self
                .cx
                .part_weights(Part::V)
                .filter(|(_, ray)| self.cx.weight_vanishes_on(flat, *ray))
                .map(|(w, _)| w.multiplicity as i64)
                .sum();
            let g: i64 = self
                .cx
                .part_weights(Part::G)
                .filter(|(_, ray)| self.cx.weight_vanishes_on(flat, *ray))
                .map(|(w, _)| w.multiplicity as i64)
                .sum();
            v - g
        };
        let v_neg: i64 = self
            .cx
            .part_weights(Part::V)
            .filter(|(_, ray)| {
                self.cx.weight_sign(c, *ray) == Sign::Minus && self.cx.weight_vanishes_on(f, *ray)
            })
            .map(|(w, _)| w.multiplicity as i64)
            .sum();
        let g_neg: i64 = self
            .cx
            .part_weights(Part::G)
            .filter(|(_, ray)| {
                self.cx.weight_sign(c, *ray) == Sign::Minus && self.cx.weight_vanishes_on(f, *ray)
            })
            .map(|(w, _)| w.multiplicity as i64)
            .sum();
        Ok(DegreeData {
            d_flat: d_of_flat(f),
            d_span: d_of_flat(&span_c),
            d_cell_flat: v_neg - g_neg,
        })
    }
}

/// Does the denominator of the value divide a product of powers of the
/// support weights (up to a rational scalar)?
fn denominator_in_support(value: &RatFunc, support: &[Weight], nvars: usize) -> bool {
    use crate::algebra::exact_div;
    let mut den = value.den().clone();
    if den.is_constant() {
        return true;
    }
    let forms: Vec<Poly> = support
        .iter()
        .filter(|w| w.vector.iter().any(|&c| c != 0))
        .map(|w| Poly::linear_form_int(nvars.max(value.nvars()), &w.vector))
        .collect();
    let den_vars = den.nvars();
    loop {
        if den.is_constant() {
            return true;
        }
        let mut progressed = false;
        for form in &forms {
            let form = if form.nvars() == den_vars {
                form.clone()
            } else {
                form.clone().extend_vars(den_vars)
            };
            while let Some(q) = exact_div(&den, &form) {
                den = q;
                progressed = true;
                if den.is_constant() {
                    return true;
                }
            }
        }
        if !progressed {
            return false;
        }
    }
}

/// Is the support multiset stable under the subgroup (as a multiset of
/// weight vectors)?
fn support_is_stable(cx: &Complex, support: &[Weight], sub: &Subgroup) -> bool {
    let multiset = |ws: &[Weight]| -> BTreeMap<Vec<i64>, usize> {
        let mut m = BTreeMap::new();
        for w in ws {
            *m.entry(w.vector.clone()).or_insert(0) += w.multiplicity;
        }
        m
    };
    let base = multiset(support);
    sub.elements.iter().all(|&i| {
        let mapped: Vec<Weight> = support
            .iter()
            .map(|w| Weight::new(cx.spec.weyl[i].apply_char(&w.vector), w.multiplicity))
            .collect();
        multiset(&mapped) == base
    })
}

/// Close a support multiset under a subgroup and deduplicate.
fn orbit_support(cx: &Complex, support: &[Weight], sub: &Subgroup) -> Vec<Weight> {
    let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for w in support {
        for &i in &sub.elements {
            let v = cx.spec.weyl[i].apply_char(&w.vector);
            let e = seen.entry(v).or_insert(0);
            *e = (*e).max(w.multiplicity);
        }
    }
    seen.into_iter()
        .map(|(v, m)| Weight::new(v, m.max(1)))
        .collect()
}

// ---------------------------------------------------------------------------
// Wheel relations
// ---------------------------------------------------------------------------

/// One codimension-2 vanishing condition: the subspace cut out by the two
/// linear forms, from a weight pair `(alpha, beta)` of one block.
#[derive(Clone, Debug)]
pub struct WheelSubspace {
    pub block: usize,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// `t_i + alpha = 0`
    pub form_a: Vec<i64>,
    /// `chi - t_i - beta = 0`
    pub form_b: Vec<i64>,
    /// True when `beta - alpha = 0` (the Cartan direction) rather than a
    /// nonzero root.
    pub cartan_pair: bool,
    pub vanishes: bool,
}

/// Wheel-predicate outcome. The Cartan-direction pairs are reported
/// separately because the sources leave their status open: `pass_all`
/// includes them, `pass_roots_only` does not.
#[derive(Clone, Debug)]
pub struct WheelReport {
    pub subspaces: Vec<WheelSubspace>,
    pub pass_all: bool,
    pub pass_roots_only: bool,
}

struct WheelBlock {
    t_char: Vec<i64>,
    /// Distinct torus blocks of the block's weights.
    weights: Vec<Vec<i64>>,
}

struct WheelData {
    blocks: Vec<WheelBlock>,
    chi: Vec<i64>,
}

/// Recognize the cotangent-with-auxiliary-torus shape: the weights split
/// into classes by auxiliary character, and the classes pair up as
/// `(c, chi - c)` with opposite torus blocks for one global `chi`.
fn recognize_wheel_data(spec: &RepSpec) -> Result<WheelData> {
    if spec.rank_aux == 0 {
        return Err(Error::Precondition(
            "wheel predicate needs an auxiliary torus (cotangent-with-aux shape)".into(),
        ));
    }
    let r = spec.rank_t;
    let mut classes: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    for w in &spec.v_weights {
        let aux = w.vector[r..].to_vec();
        let t = w.vector[..r].to_vec();
        for _ in 0..w.multiplicity {
            classes.entry(aux.clone()).or_default().push(t.clone());
        }
    }
    for ts in classes.values_mut() {
        ts.sort();
    }
    let keys: Vec<Vec<i64>> = classes.keys().cloned().collect();
    if keys.iter().any(|k| k.iter().all(|&c| c == 0)) {
        return Err(Error::Precondition(
            "weights without auxiliary character do not fit the cotangent-with-aux shape".into(),
        ));
    }
    let negated = |ts: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = ts
            .iter()
            .map(|t| t.iter().map(|&c| -c).collect())
            .collect();
        out.sort();
        out
    };
    // Candidate chi values from partners of the first class, in order.
    let first = &keys[0];
    let first_neg = negated(&classes[first]);
    let mut chi_candidates: Vec<Vec<i64>> = Vec::new();
    for k in &keys {
        if classes[k] == first_neg {
            chi_candidates.push(first.iter().zip(k).map(|(a, b)| a + b).collect());
        }
    }
    'candidates: for chi in chi_candidates {
        let mut blocks = Vec::new();
        for k in &keys {
            let partner: Vec<i64> = chi.iter().zip(k).map(|(c, a)| c - a).collect();
            match classes.get(&partner) {
                Some(ts) if *ts == negated(&classes[k]) => {}
                _ => continue 'candidates,
            }
            // Emit each unordered pair once, from its lexicographically
            // smaller side (both orientations define the same subspaces).
            if *k <= partner {
                let mut weights = classes[k].clone();
                weights.dedup();
                blocks.push(WheelBlock {
                    t_char: k.clone(),
                    weights,
                });
            }
        }
        return Ok(WheelData { blocks, chi });
    }
    Err(Error::Precondition(
        "weights do not pair up as (c, chi - c) with opposite torus blocks".into(),
    ))
}

/// Evaluate the wheel predicate: for every block and every weight pair
/// `(alpha, beta)` of the block with `beta - alpha` a root (or zero, which
/// is reported separately), restrict `p` to the subspace
/// `{t_i + alpha = 0, chi - t_i - beta = 0}` and record whether the
/// restriction is the zero polynomial.
pub fn wheel_predicate(spec: &RepSpec, p: &Poly) -> Result<WheelReport> {
    let n = spec.n_total();
    if p.nvars() != n {
        return Err(Error::DimensionMismatch(format!(
            "polynomial has {} variables, spec has {}",
            p.nvars(),
            n
        )));
    }
    let data = recognize_wheel_data(spec)?;
    let r = spec.rank_t;
    let root_rays: Vec<Vec<i64>> = spec
        .g_roots
        .iter()
        .map(|w| w.vector[..r].to_vec())
        .collect();
    let mut seen: BTreeMap<(Vec<i64>, Vec<i64>), usize> = BTreeMap::new();
    let mut subspaces = Vec::new();
    for (bi, block) in data.blocks.iter().enumerate() {
        for alpha in &block.weights {
            for beta in &block.weights {
                let diff: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - a).collect();
                let cartan = diff.iter().all(|&c| c == 0);
                if !cartan && !root_rays.contains(&diff) {
                    continue;
                }
                // form_a = t_i + alpha; form_b = chi - t_i - beta
                let mut form_a = vec![0i64; n];
                form_a[..r].copy_from_slice(alpha);
                for (j, &c) in block.t_char.iter().enumerate() {
                    form_a[r + j] += c;
                }
                let mut form_b = vec![0i64; n];
                for (j, &b) in beta.iter().enumerate() {
                    form_b[j] -= b;
                }
                for (j, (&c, &t)) in data.chi.iter().zip(&block.t_char).enumerate() {
                    form_b[r + j] += c - t;
                }
                let key = canonical_form_pair(&form_a, &form_b);
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, subspaces.len());
                let vanishes = restricts_to_zero(p, &[form_a.clone(), form_b.clone()]);
                subspaces.push(WheelSubspace {
                    block: bi,
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    form_a,
                    form_b,
                    cartan_pair: cartan,
                    vanishes,
                });
            }
        }
    }
    let pass_all = subspaces.iter().all(|s| s.vanishes);
    let pass_roots_only = subspaces
        .iter()
        .filter(|s| !s.cartan_pair)
        .all(|s| s.vanishes);
    Ok(WheelReport {
        subspaces,
        pass_all,
        pass_roots_only,
    })
}

fn canonical_form_pair(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let ca = primitive_ray(a);
    let cb = primitive_ray(b);
    if ca <= cb {
        (ca, cb)
    } else {
        (cb, ca)
    }
}

/// Restriction of `p` to the common zero locus of the linear forms: zero iff
/// `p` composed with a rational parametrization of the subspace vanishes.
pub fn restricts_to_zero(p: &Poly, forms: &[Vec<i64>]) -> bool {
    let rows = subspace_parametrization(p.nvars(), forms);
    p.substitute(&rows).is_zero()
}

/// Substitution rows mapping the ambient variables to a parametrization of
/// the common kernel of the forms (fresh parameters `u_1..u_k`).
pub fn subspace_parametrization(nvars: usize, forms: &[Vec<i64>]) -> Vec<Poly> {
    use crate::algebra::rat;
    let rows: Vec<Vec<Rat>> = forms
        .iter()
        .map(|f| f.iter().map(|&c| rat(c)).collect())
        .collect();
    let basis = crate::arrangement::kernel_basis(&rows, nvars);
    let k = basis.len();
    (0..nvars)
        .map(|j| {
            let coeffs: Vec<Rat> = basis.iter().map(|col| col[j].clone()).collect();
            Poly::linear_form(k, &coeffs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat, VarLayout};
    use crate::repdata::{cotangent_with_aux, rep_gl_standard};

    fn gl2() -> Complex {
        Complex::new(rep_gl_standard(2).unwrap()).unwrap()
    }

    fn rf(cx: &Complex, num: &str, den: &str) -> RatFunc {
        let layout = cx.spec.layout();
        RatFunc::new(
            parse_poly(num, &layout).unwrap(),
            parse_poly(den, &layout).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn euler_classes_gl2() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let origin = cx.maximal_flat();
        let layout = cx.spec.layout();
        let c = cx.cell_of_int_cocharacter(&[-2, -1]).unwrap();
        assert_eq!(
            eng.euler_class(Part::V, &c, &origin).unwrap(),
            parse_poly("x1*x2", &layout).unwrap()
        );
        let c = cx.cell_of_int_cocharacter(&[1, 0]).unwrap();
        assert_eq!(
            eng.euler_class(Part::G, &c, &origin).unwrap(),
            parse_poly("x2 - x1", &layout).unwrap()
        );
        // no negative weights on the all-positive chamber
        let c = cx.cell_of_int_cocharacter(&[2, 1]).unwrap();
        assert_eq!(
            eng.euler_class(Part::V, &c, &origin).unwrap(),
            Poly::one(2)
        );
    }

    #[test]
    fn kernel_table_gl2() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let cases: Vec<(&[i64; 2], &[i64; 2], &str, &str)> = vec![
            (&[-2, -1], &[-1, -1], "1", "x1 - x2"),
            (&[-1, -2], &[-1, -1], "1", "x2 - x1"),
            (&[1, -1], &[0, -1], "1", "1"),
            (&[-1, -2], &[0, -1], "x1", "1"),
            (&[1, -1], &[0, 0], "x2", "x2 - x1"),
            (&[-1, 1], &[0, 0], "x1", "x1 - x2"),
            (&[-2, -1], &[0, 0], "x1*x2", "x1 - x2"),
            (&[1, 0], &[0, 0], "1", "x2 - x1"),
            (&[1, -1], &[1, 0], "x2", "1"),
            (&[-1, 1], &[0, 1], "x1", "1"),
            (&[-1, -1], &[0, 0], "x1*x2", "1"),
        ];
        for (lambda, mu, num, den) in cases {
            let k = eng.kernel_by_cochars(lambda, mu).unwrap();
            assert_eq!(k, rf(&cx, num, den), "k for {lambda:?}, {mu:?}");
        }
    }

    #[test]
    fn braiding_table_gl2() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let tau = |l: &[i64], lp: &[i64]| -> RatFunc {
            let c = cx.cell_of_int_cocharacter(l).unwrap();
            let cp = cx.cell_of_int_cocharacter(lp).unwrap();
            eng.braiding_total(&c, &cp).unwrap()
        };
        assert_eq!(tau(&[-2, -1], &[-1, -2]), rf(&cx, "-1", "1"));
        assert_eq!(tau(&[-1, 1], &[1, -1]), rf(&cx, "-x1", "x2"));
        assert_eq!(tau(&[1, -1], &[-2, -1]), rf(&cx, "-1", "x1"));
        assert_eq!(tau(&[-1, 1], &[-2, -1]), rf(&cx, "1", "x2"));
        assert_eq!(tau(&[1, -1], &[-1, -2]), rf(&cx, "1", "x1"));
        // tau_C^C = 1
        let c = cx.cell_of_int_cocharacter(&[1, -1]).unwrap();
        assert_eq!(eng.braiding_total(&c, &c).unwrap(), RatFunc::one(2));
    }

    #[test]
    fn induction_divided_difference() {
        // Ind_{(1,0)}^{(0,0)} f = (f - swap f)/(x2 - x1); on f = x1 it gives
        // -1... check against the closed form and the vanishing case f = 1.
        let cx = gl2();
        let eng = Engine::new(&cx);
        let c = cx.cell_of_int_cocharacter(&[1, 0]).unwrap();
        let origin = cx.maximal_flat();
        let span = cx.span_flat(&c).unwrap();
        let layout = cx.spec.layout();

        let one = eng
            .polynomial_element(Poly::one(2), &span)
            .unwrap();
        let out = eng.induct(&c, &origin, &one).unwrap();
        assert!(out.value.is_zero());

        let f = parse_poly("x1^2", &layout).unwrap();
        let fe = eng.polynomial_element(f, &span).unwrap();
        let out = eng.induct(&c, &origin, &fe).unwrap();
        // (x1^2 - x2^2)/(x2 - x1) = -(x1 + x2)
        assert_eq!(
            out.value,
            RatFunc::from_poly(parse_poly("-x1 - x2", &layout).unwrap())
        );
    }

    #[test]
    fn induction_identity_when_span_equals_flat() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let c = cx.cell_of_int_cocharacter(&[1, -1]).unwrap();
        let span = cx.span_flat(&c).unwrap();
        let layout = cx.spec.layout();
        let f = parse_poly("x1*x2 + 3", &layout).unwrap();
        let fe = eng.polynomial_element(f.clone(), &span).unwrap();
        let out = eng.induct(&c, &span, &fe).unwrap();
        assert_eq!(out.value, RatFunc::from_poly(f));
    }

    #[test]
    fn restriction_examples() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let origin = cx.maximal_flat();
        let layout = cx.spec.layout();
        // W^{origin}-invariant input
        let f = parse_poly("x1*x2 + x1 + x2", &layout).unwrap();
        let fe = eng.polynomial_element(f.clone(), &origin).unwrap();
        // Res along (-1,-1): divide by x1*x2
        let c = cx.cell_of_int_cocharacter(&[-1, -1]).unwrap();
        let out = eng.restrict(&origin, &c, &fe).unwrap();
        let expected = RatFunc::new(f.clone(), parse_poly("x1*x2", &layout).unwrap()).unwrap();
        assert_eq!(out.value, expected);
        // Res along (1,-1): multiply by (x2-x1)/x2
        let c = cx.cell_of_int_cocharacter(&[1, -1]).unwrap();
        let out = eng.restrict(&origin, &c, &fe).unwrap();
        let expected = RatFunc::new(
            f.mul(&parse_poly("x2 - x1", &layout).unwrap()),
            parse_poly("x2", &layout).unwrap(),
        )
        .unwrap();
        assert_eq!(out.value, expected);
        // Restriction along an open cell is the identity.
        let c = cx.cell_of_int_cocharacter(&[2, 1]).unwrap();
        let span = cx.span_flat(&c).unwrap();
        let fe2 = eng.polynomial_element(f.clone(), &span).unwrap();
        let out = eng.restrict(&span, &c, &fe2).unwrap();
        assert_eq!(out.value, RatFunc::from_poly(f));
    }

    #[test]
    fn mackey_first_worked_example() {
        // C = (-2,-1), C' = (-1,-2), F = <(-1,-1)>: both sides send f to
        // f(x2,x1) - f(x1,x2).
        let cx = gl2();
        let eng = Engine::new(&cx);
        let c = cx.cell_of_int_cocharacter(&[-2, -1]).unwrap();
        let cp = cx.cell_of_int_cocharacter(&[-1, -2]).unwrap();
        let f = cx.flat_of_int_cocharacter(&[-1, -1]).unwrap();
        let layout = cx.spec.layout();
        let poly = parse_poly("x1^3 + 2*x1*x2 - 5*x2", &layout).unwrap();
        let span_c = cx.span_flat(&c).unwrap();
        let elem = eng.polynomial_element(poly.clone(), &span_c).unwrap();
        let sides = eng.mackey_sides(&c, &cp, &f, &elem).unwrap();
        assert!(sides.holds());
        let swap = poly.apply_matrix(&[vec![0, 1], vec![1, 0]]);
        let expected = RatFunc::from_poly(swap.sub(&poly));
        assert_eq!(sides.lhs.value, expected);
    }

    #[test]
    fn mackey_reflexive_trivial_case() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let c = cx.cell_of_int_cocharacter(&[1, -1]).unwrap();
        let span = cx.span_flat(&c).unwrap();
        let layout = cx.spec.layout();
        let poly = parse_poly("x1 - 7*x2", &layout).unwrap();
        let elem = eng.polynomial_element(poly, &span).unwrap();
        let sides = eng.mackey_sides(&c, &c, &span, &elem).unwrap();
        assert!(sides.holds());
        assert_eq!(sides.lhs.value, elem.value);
    }

    #[test]
    fn degree_bookkeeping() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let origin = cx.maximal_flat();
        // (1,-1) against the origin
        let c = cx.cell_of_int_cocharacter(&[1, -1]).unwrap();
        let d = eng.degree_shift(&c, &origin).unwrap();
        assert_eq!(d.d_cell_flat, 0); // one V-weight, one root
        // (-1,-1): two V-weights negative, no roots
        let c = cx.cell_of_int_cocharacter(&[-1, -1]).unwrap();
        let d = eng.degree_shift(&c, &origin).unwrap();
        assert_eq!(d.d_cell_flat, 2);
        assert_eq!(d.grading_defect(), -2); // not weakly symmetric
    }

    #[test]
    fn wheel_gl1_single_subspace() {
        let spec = cotangent_with_aux(&rep_gl_standard(1).unwrap()).unwrap();
        let layout = VarLayout::new(1, 2);
        let one = parse_poly("1", &layout).unwrap();
        let report = wheel_predicate(&spec, &one).unwrap();
        assert_eq!(report.subspaces.len(), 1);
        assert!(!report.pass_all);
        let good = parse_poly("t1 + x1", &layout).unwrap();
        let report = wheel_predicate(&spec, &good).unwrap();
        assert!(report.pass_all);
    }

    #[test]
    fn wheel_gl2_product_passes() {
        let spec = cotangent_with_aux(&rep_gl_standard(2).unwrap()).unwrap();
        let layout = VarLayout::new(2, 2);
        let p = parse_poly("(t1 + x1)*(t1 + x2)", &layout).unwrap();
        let report = wheel_predicate(&spec, &p).unwrap();
        // 2 diagonal pairs + 2 root pairs
        assert_eq!(report.subspaces.len(), 4);
        assert!(report.pass_all);
        let q = parse_poly("t1 + x1", &layout).unwrap();
        let report = wheel_predicate(&spec, &q).unwrap();
        assert!(!report.pass_all);
        assert!(report.subspaces.iter().any(|s| s.vanishes));
    }

    #[test]
    fn wheel_rejects_wrong_shape() {
        let spec = rep_gl_standard(2).unwrap();
        let p = Poly::one(2);
        assert!(wheel_predicate(&spec, &p).is_err());
    }

    #[test]
    fn localized_element_bookkeeping() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        let origin = cx.maximal_flat();
        let layout = cx.spec.layout();
        let value = RatFunc::new(
            parse_poly("x1 + x2", &layout).unwrap(),
            parse_poly("x1*x2", &layout).unwrap(),
        )
        .unwrap();
        let support = vec![
            Weight::simple(vec![1, 0]),
            Weight::simple(vec![0, 1]),
        ];
        assert!(eng.element(value.clone(), &origin, support).is_ok());
        // missing support weight
        assert!(eng
            .element(value, &origin, vec![Weight::simple(vec![1, 0])])
            .is_err());
        // non-invariant value
        let bad = RatFunc::from_poly(parse_poly("x1", &layout).unwrap());
        assert!(eng.element(bad, &origin, vec![]).is_err());
    }

    #[test]
    fn preconditions_reported() {
        let cx = gl2();
        let eng = Engine::new(&cx);
        // braiding needs equal spans
        let a = cx.cell_of_int_cocharacter(&[1, -1]).unwrap();
        let b = cx.cell_of_int_cocharacter(&[1, 0]).unwrap();
        assert!(matches!(
            eng.braiding_total(&a, &b),
            Err(Error::Precondition(_))
        ));
        // kernel needs C <= F
        let ray_flat = cx.flat_of_int_cocharacter(&[1, 0]).unwrap();
        let c = cx.cell_of_int_cocharacter(&[0, 0]).unwrap();
        assert!(eng.kernel(&c, &ray_flat).is_err());
        let _ = rat(0);
    }
}
