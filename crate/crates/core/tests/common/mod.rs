//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the chain-sum or slack code under test.

#![allow(dead_code)]

use fmetric::{FGenerator, FiniteSpace};

/// Calls `visit(sum)` for every simple chain `from → … → to` with at most
/// `max_vertices` vertices. Sums are folded left to right starting at `from`.
fn for_each_chain(
    space: &FiniteSpace,
    from: usize,
    to: usize,
    max_vertices: usize,
    visit: &mut impl FnMut(f64),
) {
    let mut used = vec![false; space.len()];
    used[from] = true;
    walk(space, from, to, 0.0, 1, max_vertices, &mut used, visit);
}

#[allow(clippy::too_many_arguments)]
fn walk(
    space: &FiniteSpace,
    at: usize,
    to: usize,
    sum: f64,
    vertices: usize,
    max_vertices: usize,
    used: &mut [bool],
    visit: &mut impl FnMut(f64),
) {
    visit(sum + space.d(at, to));
    if vertices + 1 >= max_vertices {
        return;
    }
    for next in 0..space.len() {
        if used[next] || next == to {
            continue;
        }
        used[next] = true;
        walk(space, next, to, sum + space.d(at, next), vertices + 1, max_vertices, used, visit);
        used[next] = false;
    }
}

/// Least chain sum over simple chains of at most `max_vertices` vertices,
/// enumerated from the lower index to the higher one.
pub fn chain_sums(space: &FiniteSpace, max_vertices: usize) -> Vec<Vec<f64>> {
    let n = space.len();
    let mut sp = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let mut best = f64::INFINITY;
            for_each_chain(space, i, j, max_vertices, &mut |s| best = best.min(s));
            sp[i][j] = best;
            sp[j][i] = best;
        }
    }
    sp
}

/// Every simple chain, no length bound.
pub fn exhaustive_chain_sums(space: &FiniteSpace) -> Vec<Vec<f64>> {
    chain_sums(space, space.len())
}

/// `f(d(x, y)) ≤ f(chain sum) + α` for every pair and every simple chain.
pub fn d3_holds_on_all_chains(space: &FiniteSpace, f: &FGenerator, alpha: f64) -> bool {
    let n = space.len();
    let mut ok = true;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.eval(space.d(i, j)).unwrap();
            for_each_chain(space, i, j, n, &mut |s| {
                ok &= lhs <= f.eval(s).unwrap() + alpha;
            });
        }
    }
    ok
}

/// `max(0, max f(d) − f(sp))` from oracle chain sums, without float rounding fixes.
pub fn slack(space: &FiniteSpace, sp: &[Vec<f64>], f: &FGenerator) -> f64 {
    let mut alpha = 0.0f64;
    for i in 0..space.len() {
        for j in i + 1..space.len() {
            alpha = alpha.max(f.eval(space.d(i, j)).unwrap() - f.eval(sp[i][j]).unwrap());
        }
    }
    alpha
}

/// Strict ball by direct scan of the matrix.
pub fn ball(space: &FiniteSpace, x: usize, r: f64) -> Vec<usize> {
    (0..space.len()).filter(|&y| space.d(x, y) < r).collect()
}
