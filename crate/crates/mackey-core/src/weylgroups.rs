//! Weyl subgroups attached to flats, coset and double-coset enumeration with
//! canonical (lexicographically smallest) representatives, and the
//! double-coset bijection underlying the Mackey formula.
//!
//! Subgroups are explicit sorted lists of element indices into the spec's
//! canonical element list; at desk scale there is no need for anything
//! smarter.

use std::collections::BTreeSet;


use crate::algebra::{Poly, Rat, RatFunc};
use crate::arrangement::{Cell, Complex, Flat};
use crate::{Error, Result};

/// A subgroup of the spec's Weyl group, stored as sorted element indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }
}

/// The full Weyl group of the spec.
pub fn full_group(cx: &Complex) -> Subgroup {
    Subgroup {
        elements: (0..cx.spec.weyl.len()).collect(),
    }
}

pub fn trivial_group(cx: &Complex) -> Subgroup {
    Subgroup {
        elements: vec![cx.spec.identity_index()],
    }
}

/// The subgroup attached to a flat: the stabilizer of a generic point of the
/// flat. Cross-checked against the pointwise stabilizer of the flat; a
/// mismatch means the generic point construction failed (or the group is not
/// a reflection group) and aborts with a diagnostic.
pub fn stabilizer_of_flat(cx: &Complex, flat: &Flat) -> Result<Subgroup> {
    let lambda = cx.generic_point(flat);
    let by_point: Vec<usize> = cx
        .spec
        .weyl
        .iter()
        .enumerate()
        .filter(|(_, w)| w.apply_cochar(&lambda) == lambda)
        .map(|(i, _)| i)
        .collect();
    let by_flat: Vec<usize> = cx
        .spec
        .weyl
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            flat.basis
                .iter()
                .all(|col| w.apply_cochar(col) == *col)
        })
        .map(|(i, _)| i)
        .collect();
    if by_point != by_flat {
        return Err(Error::Internal(format!(
            "stabilizer of a generic point of the flat {:?} ({} elements) differs \
             from the pointwise stabilizer ({} elements)",
            flat.vanishing,
            by_point.len(),
            by_flat.len()
        )));
    }
    Ok(Subgroup { elements: by_point })
}

/// Exactly one representative per left coset `wH` in `G`, each the
/// lexicographically smallest element of its coset; `|G| / |H|` of them.
pub fn coset_reps(cx: &Complex, h: &Subgroup, g: &Subgroup) -> Result<Vec<usize>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Precondition(
            "coset_reps requires H to be a subgroup of G".into(),
        ));
    }
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    let mut reps = Vec::new();
    for &gi in &g.elements {
        if covered.contains(&gi) {
            continue;
        }
        reps.push(gi);
        for &hi in &h.elements {
            covered.insert(cx.weyl_mul(gi, hi));
        }
    }
    debug_assert_eq!(reps.len() * h.order(), g.order());
    Ok(reps)
}

/// One canonical (lexicographically smallest) representative per double
/// coset `LwR` in `G`.
pub fn double_coset_reps(
    cx: &Complex,
    l: &Subgroup,
    g: &Subgroup,
    r: &Subgroup,
) -> Result<Vec<usize>> {
    if !l.is_subgroup_of(g) || !r.is_subgroup_of(g) {
        return Err(Error::Precondition(
            "double_coset_reps requires L and R to be subgroups of G".into(),
        ));
    }
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    let mut reps = Vec::new();
    for &gi in &g.elements {
        if covered.contains(&gi) {
            continue;
        }
        reps.push(gi);
        for &li in &l.elements {
            let lg = cx.weyl_mul(li, gi);
            for &ri in &r.elements {
                covered.insert(cx.weyl_mul(lg, ri));
            }
        }
    }
    Ok(reps)
}

/// Canonical label of the left coset `xH`: its smallest element index.
pub fn coset_label(cx: &Complex, x: usize, h: &Subgroup) -> usize {
    h.elements
        .iter()
        .map(|&hi| cx.weyl_mul(x, hi))
        .min()
        .expect("nonempty subgroup")
}

/// Exhaustively verify the double-coset decomposition of `W^F / W^<C>`: the
/// map `(w, w') -> w' w W^<C>` from the disjoint union over double cosets
/// `w` in `W^<C'> \ W^F / W^<C>` of `W^<C'> / W^<C' o wC>` is well-defined
/// (independent of the lift of `w'`) and bijective.
pub fn verify_double_coset_bijection(
    cx: &Complex,
    c: &Cell,
    c_prime: &Cell,
    f: &Flat,
) -> Result<bool> {
    if !cx.cell_leq_flat(c, f) || !cx.cell_leq_flat(c_prime, f) {
        return Err(Error::Precondition(
            "verify_double_coset_bijection needs C, C' <= F".into(),
        ));
    }
    let w_c = stabilizer_of_flat(cx, &cx.span_flat(c)?)?;
    let w_cp = stabilizer_of_flat(cx, &cx.span_flat(c_prime)?)?;
    let w_f = stabilizer_of_flat(cx, f)?;
    let target: Vec<usize> = coset_reps(cx, &w_c, &w_f)?
        .into_iter()
        .map(|x| coset_label(cx, x, &w_c))
        .collect();

    let mut images: Vec<usize> = Vec::new();
    for &dw in &double_coset_reps(cx, &w_cp, &w_f, &w_c)? {
        let moved = cx.act_on_cell(&cx.spec.weyl[dw], c);
        let b = cx.tits_product(c_prime, &moved)?; // C' o wC
        let w_b = stabilizer_of_flat(cx, &cx.span_flat(&b)?)?;
        if !w_b.is_subgroup_of(&w_cp) {
            return Ok(false);
        }
        for &wp in &coset_reps(cx, &w_b, &w_cp)? {
            // Independence of the lift: every element of the coset wp*W_B
            // must land in the same target coset.
            let mut labels = BTreeSet::new();
            for &u in &w_b.elements {
                let lift = cx.weyl_mul(wp, u);
                labels.insert(coset_label(cx, cx.weyl_mul(lift, dw), &w_c));
            }
            if labels.len() != 1 {
                return Ok(false);
            }
            images.push(labels.into_iter().next().unwrap());
        }
    }
    let mut uniq: Vec<usize> = images.clone();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() != images.len() {
        return Ok(false); // not injective
    }
    let mut expected = target;
    expected.sort_unstable();
    Ok(uniq == expected)
}

/// Is the value fixed by every element of the subgroup?
pub fn is_invariant(cx: &Complex, value: &RatFunc, sub: &Subgroup) -> bool {
    sub.elements
        .iter()
        .all(|&i| value.apply_matrix(&cx.spec.weyl[i].matrix) == *value)
}

/// Reynolds average of a polynomial over a subgroup: `1/|H| sum w.p`.
pub fn reynolds(cx: &Complex, p: &Poly, sub: &Subgroup) -> Poly {
    let mut acc = Poly::zero(p.nvars());
    for &i in &sub.elements {
        acc = acc.add(&p.apply_matrix(&cx.spec.weyl[i].matrix));
    }
    acc.scale(&Rat::new(1.into(), (sub.order() as i64).into()))
}

/// Reynolds average of a rational function over a subgroup.
pub fn reynolds_ratfunc(cx: &Complex, f: &RatFunc, sub: &Subgroup) -> RatFunc {
    let mut acc = RatFunc::zero(f.nvars());
    for &i in &sub.elements {
        acc = acc.add(&f.apply_matrix(&cx.spec.weyl[i].matrix));
    }
    acc.scale(&Rat::new(1.into(), (sub.order() as i64).into()))
}
