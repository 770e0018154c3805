//! A small dense two-phase simplex over exact rationals, used to decide
//! realizability of strict sign patterns and to produce witness points.
//! Bland's rule throughout, so pivoting is deterministic and cycle-free.

use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, Rat};

/// Maximize `c . x` subject to `A x = b`, `x >= 0`, with `b >= 0`.
/// Returns `(optimum, x)` or `None` when infeasible. The problems built in
/// this crate are bounded by construction; unboundedness is a caller bug.
fn solve_standard_lp(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Option<(Rat, Vec<Rat>)> {
    let m = a.len();
    let n = if m == 0 { c.len() } else { a[0].len() };
    debug_assert!(b.iter().all(|v| !v.is_negative()));

    // Tableau with one artificial variable per row: columns 0..n are the real
    // variables, n..n+m the artificials, last column the right-hand side.
    let cols = n + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(cols + 1);
        row.extend(a[i].iter().cloned());
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        row.push(b[i].clone());
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: maximize minus the sum of artificials.
    let mut phase1_cost = vec![Rat::zero(); cols];
    for cost in phase1_cost.iter_mut().take(n + m).skip(n) {
        *cost = -Rat::one();
    }
    run_simplex(&mut t, &mut basis, &phase1_cost, cols);
    let phase1_value: Rat = basis
        .iter()
        .enumerate()
        .map(|(i, &bv)| {
            if bv >= n {
                -t[i][cols].clone()
            } else {
                Rat::zero()
            }
        })
        .sum();
    if !phase1_value.is_zero() {
        return None;
    }
    // Pivot any residual zero-level artificials out of the basis.
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, i, j);
            }
            // A fully zero row is redundant; leaving the artificial basic at
            // level zero is harmless as long as it never re-enters.
        }
    }

    // Phase 2: real objective; artificial columns are barred from entering.
    let mut phase2_cost = vec![Rat::zero(); cols];
    phase2_cost[..n].clone_from_slice(c);
    run_simplex(&mut t, &mut basis, &phase2_cost, n);

    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][cols].clone();
        }
    }
    let value = c
        .iter()
        .zip(&x)
        .map(|(ci, xi)| ci * xi)
        .fold(Rat::zero(), |acc, v| acc + v);
    Some((value, x))
}

/// Primal simplex iterations with Bland's rule; only columns `< enter_limit`
/// may enter the basis.
fn run_simplex(t: &mut [Vec<Rat>], basis: &mut [usize], cost: &[Rat], enter_limit: usize) {
    let m = t.len();
    if m == 0 {
        return;
    }
    let rhs = t[0].len() - 1;
    loop {
        // Reduced costs: cost_j - sum_i cost_basis[i] * t[i][j].
        let mut entering = None;
        for j in 0..enter_limit {
            if basis.contains(&j) {
                continue;
            }
            let mut rc = cost[j].clone();
            for i in 0..m {
                if !cost[basis[i]].is_zero() && !t[i][j].is_zero() {
                    rc -= &cost[basis[i]] * &t[i][j];
                }
            }
            if rc.is_positive() {
                entering = Some(j);
                break; // Bland: smallest index
            }
        }
        let Some(e) = entering else {
            return;
        };
        // Ratio test, ties broken by smallest basis variable index.
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][rhs] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((l, _)) = leave else {
            panic!("linear program is unbounded; the caller built a bad model");
        };
        pivot(t, basis, l, e);
    }
}

fn pivot(t: &mut [Vec<Rat>], basis: &mut [usize], row: usize, col: usize) {
    let cols = t[row].len();
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= &p;
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let f = t[i][col].clone();
        for j in 0..cols {
            let delta = &f * &t[row][j];
            t[i][j] -= delta;
        }
    }
    basis[row] = col;
}

/// Decide strict feasibility of the homogeneous system `rows[i] . x > 0` for
/// all `i` and produce a rational witness. Exact: maximizes a margin slack
/// over the box `[-1, 1]^dim`; the system is feasible iff the optimum is
/// positive. Deterministic.
pub fn strict_witness(rows: &[Vec<Rat>], dim: usize) -> Option<Vec<Rat>> {
    if rows.is_empty() {
        return Some(vec![Rat::zero(); dim]);
    }
    // Variables: u_1..u_dim in [0,2] (x = u - 1), eps in [0,1], one surplus
    // per strict row, one box slack per u, one slack for eps.
    let k = rows.len();
    let n = dim + 1 + k + dim + 1;
    let mut a: Vec<Vec<Rat>> = Vec::new();
    let mut b: Vec<Rat> = Vec::new();
    // rows[i] . u - eps - s_i = sum_j rows[i][j]; negated if rhs negative.
    for (i, r) in rows.iter().enumerate() {
        let rhs: Rat = r.iter().fold(Rat::zero(), |acc, v| acc + v);
        let mut row = vec![Rat::zero(); n];
        row[..dim].clone_from_slice(&r[..dim.min(r.len())]);
        row[dim] = -Rat::one(); // eps
        row[dim + 1 + i] = -Rat::one(); // surplus
        if rhs.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            b.push(-rhs);
        } else {
            b.push(rhs);
        }
        a.push(row);
    }
    // u_j + w_j = 2
    for j in 0..dim {
        let mut row = vec![Rat::zero(); n];
        row[j] = Rat::one();
        row[dim + 1 + k + j] = Rat::one();
        a.push(row);
        b.push(rat(2));
    }
    // eps + z = 1
    let mut row = vec![Rat::zero(); n];
    row[dim] = Rat::one();
    row[n - 1] = Rat::one();
    a.push(row);
    b.push(rat(1));

    let mut c = vec![Rat::zero(); n];
    c[dim] = Rat::one();
    let (value, sol) = solve_standard_lp(&a, &b, &c)?;
    if !value.is_positive() {
        return None;
    }
    let x: Vec<Rat> = (0..dim).map(|j| sol[j].clone() - Rat::one()).collect();
    debug_assert!(rows.iter().all(|r| {
        r.iter()
            .zip(&x)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, v| acc + v)
            .is_positive()
    }));
    Some(x)
}

/// Clear denominators and divide by the content, giving a small primitive
/// integer vector on the same ray.
pub fn primitive_scaled(x: &[Rat]) -> Vec<Rat> {
    use num::BigInt;
    if x.iter().all(Zero::is_zero) {
        return x.to_vec();
    }
    let mut l = BigInt::one();
    for v in x {
        l = num::integer::lcm(l, v.denom().clone());
    }
    let ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = num::integer::gcd(g, v.clone());
    }
    ints.into_iter()
        .map(|v| Rat::from_integer(v / &g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn rv(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn feasible_quadrant() {
        let rows = vec![rv(&[1, 0]), rv(&[0, 1])];
        let x = strict_witness(&rows, 2).unwrap();
        assert!(x[0].is_positive() && x[1].is_positive());
    }

    #[test]
    fn infeasible_opposite_halves() {
        let rows = vec![rv(&[1, 0]), rv(&[-1, 0])];
        assert!(strict_witness(&rows, 2).is_none());
    }

    #[test]
    fn thin_cone_found_exactly() {
        // x > 0, -x + eps*y > 0 forces a narrow wedge.
        let rows = vec![rv(&[1, 0]), vec![rat(-1), ratio(1, 1000)]];
        let x = strict_witness(&rows, 2).unwrap();
        assert!(x[0].is_positive());
        assert!((-&x[0] + &x[1] * ratio(1, 1000)).is_positive());
    }

    #[test]
    fn empty_system_gives_origin() {
        assert_eq!(strict_witness(&[], 3), Some(vec![rat(0), rat(0), rat(0)]));
    }

    #[test]
    fn primitive_scaling() {
        let x = vec![ratio(1, 2), ratio(3, 2)];
        assert_eq!(primitive_scaled(&x), vec![rat(1), rat(3)]);
    }

    #[test]
    fn witness_is_deterministic() {
        let rows = vec![rv(&[1, -1, 0]), rv(&[0, 1, -1]), rv(&[0, 0, 1])];
        let a = strict_witness(&rows, 3).unwrap();
        let b = strict_witness(&rows, 3).unwrap();
        assert_eq!(a, b);
    }
}
