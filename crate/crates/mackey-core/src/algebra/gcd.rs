//! Multivariate GCD over the rationals: a heuristic evaluation /
//! reconstruction pass settles the common cases in a few big-integer
//! operations, with a content/primitive-part recursion (primitive
//! pseudo-remainder sequences, one variable at a time) as the always-correct
//! fallback. Adequate at desk scale (degrees up to ~20, up to ~20
//! variables).

use num_traits::{One, Signed};

use super::poly::{Monomial, Poly};
use super::{Int, Rat};

/// Exact division in `Q[v_1..v_n]`; `None` when `b` does not divide `a`.
pub fn exact_div(a: &Poly, b: &Poly) -> Option<Poly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    let n = a.nvars();
    let mut rem = a.clone();
    let mut quot = Poly::zero(n);
    let (lead_m, lead_c) = {
        let (m, c) = b.leading().unwrap();
        (m.clone(), c.clone())
    };
    while !rem.is_zero() {
        let (rm, rc) = {
            let (m, c) = rem.leading().unwrap();
            (m.clone(), c.clone())
        };
        let qm = rm.div(&lead_m)?;
        let qc = rc / &lead_c;
        quot.add_term(qm.clone(), qc.clone());
        rem = rem.sub(&b.mul_monomial(&qm, &qc));
    }
    Some(quot)
}

/// Rescale to the canonical representative of a polynomial up to `Q*` units:
/// integer coefficients with content 1 and positive leading coefficient.
/// Returns the canonical polynomial and the scalar `s` with `p = s * canon`.
pub fn int_normalize(p: &Poly) -> (Poly, Rat) {
    if p.is_zero() {
        return (p.clone(), Rat::one());
    }
    let l = p.coeff_denominator_lcm();
    let scaled = p.scale(&Rat::from_integer(l.clone()));
    let g = scaled.coeff_numerator_gcd();
    let mut canon = scaled.scale(&Rat::new(num::BigInt::one(), g.clone()));
    let mut s = Rat::new(g, l);
    if canon.leading().unwrap().1.is_negative() {
        canon = canon.neg();
        s = -s;
    }
    (canon, s)
}

/// Canonical multivariate GCD over `Q`: the result is integer-primitive with
/// positive leading coefficient; `poly_gcd(0, 0) = 0`, and the GCD of
/// anything with a nonzero constant is `1`.
///
/// Dispatch: the heuristic evaluation/reconstruction GCD first (it settles
/// almost everything in this crate's workload in a handful of big-integer
/// operations), falling back to the content/primitive-PRS recursion.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.nvars(), b.nvars());
    if a.is_zero() {
        return int_normalize(b).0;
    }
    if b.is_zero() {
        return int_normalize(a).0;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.nvars());
    }
    let ia = int_normalize(a).0;
    let ib = int_normalize(b).0;
    if let Some(g) = heuristic_gcd(&ia, &ib) {
        return int_normalize(&g).0;
    }
    prs_gcd(&ia, &ib)
}

/// The content/primitive-PRS recursion; always correct, potentially slow.
fn prs_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return int_normalize(b).0;
    }
    if b.is_zero() {
        return int_normalize(a).0;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.nvars());
    }
    let vars_a = a.active_vars();
    let vars_b = b.active_vars();
    let common: Vec<usize> = vars_a.iter().copied().filter(|v| vars_b.contains(v)).collect();
    let Some(&v) = common.first() else {
        return Poly::one(a.nvars());
    };
    let (ca, pa) = content_primitive(a, v);
    let (cb, pb) = content_primitive(b, v);
    let gc = prs_gcd(&ca, &cb);
    let gp = primitive_prs(&pa, &pb, v);
    int_normalize(&gc.mul(&gp)).0
}

// ---------------------------------------------------------------------------
// Heuristic GCD: evaluate one variable at a large integer, recurse, and lift
// the result back by balanced base-xi digit reconstruction. A candidate is
// accepted only if it divides both inputs, which certifies it as the true
// GCD for evaluation points above twice the coefficient norms.
// ---------------------------------------------------------------------------

fn max_coeff_norm(p: &Poly) -> Int {
    use num_traits::Zero as _;
    let mut m = Int::zero();
    for (_, c) in p.terms() {
        debug_assert!(c.denom().is_one());
        let a = c.numer().abs();
        if a > m {
            m = a;
        }
    }
    m
}

/// Substitute `v := xi`, eliminating the variable.
fn eval_var(p: &Poly, v: usize, xi: &Int) -> Poly {
    use super::poly::Monomial;
    let mut out = Poly::zero(p.nvars());
    for (m, c) in p.terms() {
        let e = m.0[v];
        let mut stripped = m.0.clone();
        stripped[v] = 0;
        let factor = num_traits::pow::pow(xi.clone(), usize::from(e));
        out.add_term(Monomial(stripped), c * Rat::from_integer(factor));
    }
    out
}

/// Inverse of evaluation: recover a polynomial in `v` from its value at
/// `xi`, digit by balanced digit. `None` when the digits do not terminate
/// within a sane degree bound.
fn reconstruct(g_low: &Poly, v: usize, xi: &Int) -> Option<Poly> {
    use super::poly::Monomial;
    let nvars = g_low.nvars();
    let mut candidate = Poly::zero(nvars);
    let mut c = g_low.clone();
    let half = xi / 2;
    for k in 0..512u16 {
        if c.is_zero() {
            return Some(candidate);
        }
        // Balanced residue of every coefficient.
        let mut digit = Poly::zero(nvars);
        for (m, coeff) in c.terms() {
            debug_assert!(coeff.denom().is_one());
            let mut r = coeff.numer() % xi;
            if r > half {
                r -= xi;
            } else if r < -&half {
                r += xi;
            }
            if !num_traits::Zero::is_zero(&r) {
                let mut e = m.0.clone();
                e[v] = e[v].checked_add(k)?;
                digit.add_term(Monomial(e), Rat::from_integer(r.clone()));
            }
            let _ = r;
        }
        // c := (c - digit_residues) / xi, exactly.
        let mut next = Poly::zero(nvars);
        for (m, coeff) in c.terms() {
            let mut r = coeff.numer() % xi;
            if r > half {
                r -= xi;
            } else if r < -&half {
                r += xi;
            }
            let q = (coeff.numer() - &r) / xi;
            if !num_traits::Zero::is_zero(&q) {
                next.add_term(m.clone(), Rat::from_integer(q));
            }
        }
        candidate = candidate.add(&digit);
        c = next;
    }
    None
}

fn divides(g: &Poly, p: &Poly) -> bool {
    exact_div(p, g).is_some()
}

fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    heuristic_gcd_depth(a, b, 0)
}

fn heuristic_gcd_depth(a: &Poly, b: &Poly, depth: usize) -> Option<Poly> {
    if depth > 12 {
        return None;
    }
    if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
        // Delegated to the dispatcher / integer gcd below.
        return None;
    }
    let vars_a = a.active_vars();
    let vars_b = b.active_vars();
    let v = *vars_a
        .iter()
        .find(|v| vars_b.contains(v))
        .or(vars_a.first())
        .unwrap_or(vars_b.first().unwrap());
    let na = max_coeff_norm(a);
    let nb = max_coeff_norm(b);
    let mut xi: Int = (if na < nb { na } else { nb }) * 2 + 29;
    for _ in 0..6 {
        let ga = eval_var(a, v, &xi);
        let gb = eval_var(b, v, &xi);
        if !ga.is_zero() && !gb.is_zero() {
            let g_low = if ga.is_constant() && gb.is_constant() {
                let ia = ga.constant_coeff().numer().abs();
                let ib = gb.constant_coeff().numer().abs();
                Poly::constant(a.nvars(), Rat::from_integer(num::integer::gcd(ia, ib)))
            } else if ga.is_constant() || gb.is_constant() {
                // gcd of a constant and a polynomial: the integer content.
                let (p, c) = if ga.is_constant() { (&gb, &ga) } else { (&ga, &gb) };
                let content = p.coeff_numerator_gcd();
                Poly::constant(
                    a.nvars(),
                    Rat::from_integer(num::integer::gcd(content, c.constant_coeff().numer().abs())),
                )
            } else {
                match heuristic_gcd_depth(&ga, &gb, depth + 1) {
                    Some(g) => g,
                    None => {
                        xi = next_xi(&xi);
                        continue;
                    }
                }
            };
            if let Some(candidate) = reconstruct(&g_low, v, &xi) {
                // Keep the integer content: at inner recursion levels it is
                // the evaluated image of outer factors. The top-level
                // dispatcher normalizes the final result.
                if !candidate.is_zero() && divides(&candidate, a) && divides(&candidate, b) {
                    return Some(candidate);
                }
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn next_xi(xi: &Int) -> Int {
    // Irrational-ish growth keeps evaluation points from repeating algebraic
    // relations (the classic 73794/27011 ~ e/phi step).
    xi * 73794 / 27011 + 37
}

/// Content (GCD of the `v`-coefficients) and primitive part with respect to
/// the variable `v`.
fn content_primitive(p: &Poly, v: usize) -> (Poly, Poly) {
    let coeffs = univariate_coeffs(p, v);
    let mut content = Poly::zero(p.nvars());
    for c in coeffs.iter().flatten() {
        content = poly_gcd(&content, c);
        if content.is_constant() {
            break;
        }
    }
    let pp = exact_div(p, &content).expect("content divides");
    (content, pp)
}

/// Coefficients of `p` viewed as a univariate polynomial in `v`; index `d`
/// holds the coefficient of `v^d` (a polynomial with `v`-degree zero).
fn univariate_coeffs(p: &Poly, v: usize) -> Vec<Option<Poly>> {
    let d = usize::from(p.degree_in(v));
    let mut out: Vec<Option<Poly>> = vec![None; d + 1];
    for (m, c) in p.terms() {
        let e = usize::from(m.0[v]);
        let mut stripped = m.0.clone();
        stripped[v] = 0;
        out[e]
            .get_or_insert_with(|| Poly::zero(p.nvars()))
            .add_term(Monomial(stripped), c.clone());
    }
    for slot in &mut out {
        if slot.as_ref().is_some_and(Poly::is_zero) {
            *slot = None;
        }
    }
    out
}

fn leading_coeff_in(p: &Poly, v: usize) -> (Poly, u16) {
    let d = p.degree_in(v);
    let mut lead = Poly::zero(p.nvars());
    for (m, c) in p.terms() {
        if m.0[v] == d {
            let mut stripped = m.0.clone();
            stripped[v] = 0;
            lead.add_term(Monomial(stripped), c.clone());
        }
    }
    (lead, d)
}

/// Pseudo-remainder of `f` by `g` in the variable `v`.
fn pseudo_rem(f: &Poly, g: &Poly, v: usize) -> Poly {
    let (lcg, dg) = leading_coeff_in(g, v);
    let mut r = f.clone();
    while !r.is_zero() {
        let (lcr, dr) = leading_coeff_in(&r, v);
        if dr < dg {
            break;
        }
        let shift = Poly::var(r.nvars(), v).pow(u32::from(dr - dg));
        r = r.mul(&lcg).sub(&lcr.mul(&shift).mul(g));
    }
    r
}

/// GCD of two `v`-primitive polynomials via the primitive PRS. Every
/// remainder is rescaled to integer-primitive form: rational scalars are
/// units, so dropping them is free, and without this the coefficient
/// bit-size doubles per step.
fn primitive_prs(pa: &Poly, pb: &Poly, v: usize) -> Poly {
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (int_normalize(pa).0, int_normalize(pb).0)
    } else {
        (int_normalize(pb).0, int_normalize(pa).0)
    };
    loop {
        let rem = pseudo_rem(&r0, &r1, v);
        if rem.is_zero() {
            return int_normalize(&content_primitive(&r1, v).1).0;
        }
        r0 = r1;
        r1 = int_normalize(&content_primitive(&rem, v).1).0;
        if r1.degree_in(v) == 0 {
            // Coprime in v; the gcd is a polynomial in the other variables,
            // already extracted as content by the caller.
            return Poly::one(pa.nvars());
        }
    }
}
