use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{Int, Rat};

/// Exponent vector of a monomial. Ordered by graded lexicographic order:
/// total degree first, then lexicographically with earlier variables larger.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise division; `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariant: no stored zero coefficients; all exponent vectors have length
/// `nvars`. Equality is structural and coincides with mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(nvars, idx), Rat::one());
        Poly { nvars, terms }
    }

    /// The linear form `sum coeffs[i] * v_i`.
    pub fn linear_form(nvars: usize, coeffs: &[Rat]) -> Self {
        assert_eq!(coeffs.len(), nvars);
        let mut p = Poly::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(Monomial::var(nvars, i), c.clone());
            }
        }
        p
    }

    /// Linear form from integer coefficients, zero-padded to `nvars`.
    pub fn linear_form_int(nvars: usize, coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= nvars);
        let mut p = Poly::zero(nvars);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.add_term(Monomial::var(nvars, i), super::rat(c));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_coeff(&self) -> Rat {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Leading term in graded-lex order, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Variables with positive degree somewhere in the polynomial.
    pub fn active_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..self.nvars).filter(|&i| seen[i]).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(ma, ca)| (ma.mul(m), ca * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Evaluate at an exact rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute variable `i` by `rows[i]` for every variable simultaneously.
    /// All `rows` must share a common variable count, which becomes the
    /// variable count of the result.
    pub fn substitute(&self, rows: &[Poly]) -> Poly {
        assert_eq!(rows.len(), self.nvars, "one substitution row per variable");
        let out_nvars = rows.first().map_or(0, Poly::nvars);
        assert!(rows.iter().all(|r| r.nvars() == out_nvars));
        if let Some(perm) = signed_permutation(rows, self.nvars, out_nvars) {
            return self.apply_signed_permutation(&perm, out_nvars);
        }
        // Memoized powers of each row, built on demand.
        let mut powers: Vec<Vec<Poly>> = rows.iter().map(|r| vec![Poly::one(out_nvars), r.clone()]).collect();
        let mut out = Poly::zero(out_nvars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= usize::from(e) {
                    let next = pw.last().unwrap().mul(&rows[i]);
                    pw.push(next);
                }
                t = t.mul(&pw[usize::from(e)]);
            }
            out = out.add(&t);
        }
        out
    }

    fn apply_signed_permutation(&self, perm: &[(usize, bool)], out_nvars: usize) -> Poly {
        // The map need not be injective (parametrizations collapse
        // variables), so colliding monomials must accumulate.
        let mut out = Poly::zero(out_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; out_nvars];
            let mut sign_flip = false;
            for (i, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let (j, neg) = perm[i];
                e[j] += exp;
                if neg && exp % 2 == 1 {
                    sign_flip = !sign_flip;
                }
            }
            let coeff = if sign_flip { -c } else { c.clone() };
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Apply an integer matrix to the first `mat.len()` variables: variable
    /// `i` is replaced by the linear form given by column `i` of `mat`;
    /// remaining variables are left untouched.
    pub fn apply_matrix(&self, mat: &[Vec<i64>]) -> Poly {
        let r = mat.len();
        assert!(r <= self.nvars);
        let n = self.nvars;
        let mut rows = Vec::with_capacity(n);
        for i in 0..r {
            let mut coeffs = vec![0i64; n];
            for (k, row) in mat.iter().enumerate() {
                coeffs[k] = row[i];
            }
            rows.push(Poly::linear_form_int(n, &coeffs));
        }
        for i in r..n {
            rows.push(Poly::var(n, i));
        }
        self.substitute(&rows)
    }

    /// Reinterpret in a larger variable space (new variables appended).
    pub fn extend_vars(&self, new_nvars: usize) -> Poly {
        assert!(new_nvars >= self.nvars);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.resize(new_nvars, 0);
            terms.insert(Monomial(e), c.clone());
        }
        Poly {
            nvars: new_nvars,
            terms,
        }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn coeff_denominator_lcm(&self) -> Int {
        let mut l = Int::one();
        for c in self.terms.values() {
            l = num::integer::lcm(l, c.denom().clone());
        }
        l
    }

    /// Greatest common divisor of the coefficient numerators (as a positive
    /// integer); zero for the zero polynomial.
    pub fn coeff_numerator_gcd(&self) -> Int {
        let mut g = Int::zero();
        for c in self.terms.values() {
            g = num::integer::gcd(g, c.numer().abs());
        }
        g
    }
}

/// Detects substitution rows that are all of the form `±v_j`, in which case
/// substitution is a cheap exponent remap. Returns `(target, negated)` per
/// input variable.
fn signed_permutation(rows: &[Poly], _nvars: usize, out_nvars: usize) -> Option<Vec<(usize, bool)>> {
    let mut perm = Vec::with_capacity(rows.len());
    for row in rows {
        if row.terms.len() != 1 {
            return None;
        }
        let (m, c) = row.terms.iter().next().unwrap();
        if m.total_degree() != 1 {
            return None;
        }
        let j = m.0.iter().position(|&e| e == 1).unwrap();
        if j >= out_nvars {
            return None;
        }
        if c == &Rat::one() {
            perm.push((j, false));
        } else if (-c).is_one() {
            perm.push((j, true));
        } else {
            return None;
        }
    }
    Some(perm)
}
