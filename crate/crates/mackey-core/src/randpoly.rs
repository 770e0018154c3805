//! Deterministic pseudo-random test inputs: invariant polynomials obtained
//! by Reynolds-averaging random prime-coefficient monomials, fully generic
//! polynomials with symbolic coefficients, and random torus specifications
//! for arrangement fuzzing.

use rand::Rng;

use crate::algebra::{rat, Monomial, Poly, VarLayout};
use crate::arrangement::Complex;
use crate::repdata::{rep_torus, RepSpec, Weight};
use crate::weylgroups::{reynolds, Subgroup};
use crate::Result;

/// All exponent vectors in `nvars` variables of total degree at most `d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u16>, pos: usize, left: u32) {
        if pos == current.len() {
            out.push(Monomial(current.clone()));
            return;
        }
        for e in 0..=left {
            current[pos] = e as u16;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    rec(&mut out, &mut current, 0, d);
    out.sort();
    out
}

const SMALL_PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// A pseudo-random polynomial invariant under the subgroup: a few random
/// monomials of degree at most `d`, with distinct small prime coefficients
/// so accidental cancellations remain detectable, Reynolds-averaged over the
/// subgroup. Never zero.
pub fn random_invariant_poly(
    cx: &Complex,
    sub: &Subgroup,
    d: u32,
    rng: &mut impl Rng,
) -> Poly {
    let n = cx.spec.n_total();
    let monos = monomials_up_to(n, d);
    loop {
        let mut p = Poly::zero(n);
        for (k, prime) in SMALL_PRIMES.iter().take(3).enumerate() {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            let _ = k;
            p.add_term(m, rat(*prime));
        }
        let avg = reynolds(cx, &p, sub);
        if !avg.is_zero() {
            return avg;
        }
    }
}

/// A generic polynomial of degree at most `d` in the spec's variables, with
/// one fresh symbolic coefficient per monomial: `sum c_e x^e`. Equality of
/// two operator outputs on this input certifies the operator identity for
/// every polynomial of degree at most `d`.
pub struct GenericPoly {
    pub poly: Poly,
    pub layout: VarLayout,
    pub num_coeffs: usize,
}

pub fn generic_poly(spec: &RepSpec, d: u32) -> GenericPoly {
    let n = spec.n_total();
    let monos = monomials_up_to(n, d);
    let k = monos.len();
    let layout = VarLayout::with_extra(spec.rank_t, spec.rank_aux, k);
    let total = layout.nvars();
    let mut poly = Poly::zero(total);
    for (i, m) in monos.into_iter().enumerate() {
        let mut e = m.0;
        e.resize(total, 0);
        e[n + i] = 1;
        poly.add_term(Monomial(e), rat(1));
    }
    GenericPoly {
        poly,
        layout,
        num_coeffs: k,
    }
}

/// Reynolds-average a generic polynomial over a subgroup (the coefficients
/// are untouched extra variables).
pub fn generic_invariant_poly(cx: &Complex, sub: &Subgroup, d: u32) -> GenericPoly {
    let g = generic_poly(&cx.spec, d);
    GenericPoly {
        poly: reynolds(cx, &g.poly, sub),
        ..g
    }
}

/// A random torus specification: trivial Weyl group, `k` weights with small
/// integer entries in `rank` torus variables. Used both as a torus example
/// and as a random central arrangement.
pub fn random_torus_spec(rank: usize, k: usize, rng: &mut impl Rng) -> Result<RepSpec> {
    let mut weights = Vec::new();
    for _ in 0..k {
        loop {
            let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
            if v.iter().any(|&c| c != 0) {
                weights.push(Weight::simple(v));
                break;
            }
        }
    }
    rep_torus(format!("torus-r{rank}-k{k}"), rank, 0, weights)
}
