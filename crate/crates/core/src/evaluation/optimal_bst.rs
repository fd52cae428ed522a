//! Optimal binary search tree cost via interval dynamic programming.

use crate::dist::ProbDist;

/// Switch to the root-monotonicity (Knuth) recurrence above this size.
const KNUTH_THRESHOLD: usize = 512;

/// Minimum expected probe count over all deterministic three-way-comparison
/// search trees for the access distribution `p`. The root probe costs 1, so
/// a key at depth `d` costs `d` probes and the result is
/// `min over trees of sum p_i * depth_i`.
///
/// Interval DP, quadratic memory; intended for n up to 2^14.
pub fn optimal_bst_cost(p: &ProbDist) -> f64 {
    let n = p.len();
    assert!(n <= 1 << 14, "optimal_bst_cost is sized for n <= 2^14");
    if n == 1 {
        return 1.0;
    }
    if n > KNUTH_THRESHOLD {
        knuth_dp(p)
    } else {
        naive_dp(p)
    }
}

/// Upper-triangular table flattened row-major: entry (i, j) for i <= j < n.
struct Triangle<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Copy + Default> Triangle<T> {
    fn new(n: usize) -> Self {
        Self {
            n,
            data: vec![T::default(); n * (n + 1) / 2],
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < self.n);
        // Row i starts after rows 0..i of lengths n, n-1, ...
        i * self.n - i * (i + 1) / 2 + i + (j - i)
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> T {
        self.data[self.idx(i, j)]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, value: T) {
        let k = self.idx(i, j);
        self.data[k] = value;
    }
}

/// Subtree cost of the (possibly empty) interval [i, j], where j + 1 == i
/// encodes the empty interval.
#[inline]
fn subcost(e: &Triangle<f64>, i: usize, j_plus_1: usize) -> f64 {
    if j_plus_1 <= i {
        0.0
    } else {
        e.get(i, j_plus_1 - 1)
    }
}

/// O(n^3) recurrence: e(i,j) = w(i,j) + min_k e(i,k-1) + e(k+1,j).
fn naive_dp(p: &ProbDist) -> f64 {
    let n = p.len();
    let mut e = Triangle::<f64>::new(n);
    for i in 0..n {
        e.set(i, i, p.mass(i));
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len - 1;
            let mut best = f64::INFINITY;
            for k in i..=j {
                let cost = subcost(&e, i, k) + subcost(&e, k + 1, j + 1);
                if cost < best {
                    best = cost;
                }
            }
            e.set(i, j, best + p.range_mass(i, j));
        }
    }
    e.get(0, n - 1)
}

/// O(n^2) recurrence restricting the root search to
/// [opt(i, j-1), opt(i+1, j)], valid because the interval weights satisfy
/// the quadrangle inequality.
fn knuth_dp(p: &ProbDist) -> f64 {
    let n = p.len();
    let mut e = Triangle::<f64>::new(n);
    let mut opt = Triangle::<u32>::new(n);
    for i in 0..n {
        e.set(i, i, p.mass(i));
        opt.set(i, i, i as u32);
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len - 1;
            let k_lo = opt.get(i, j - 1) as usize;
            let k_hi = (opt.get(i + 1, j) as usize).min(j).max(k_lo);
            let mut best = f64::INFINITY;
            let mut best_k = k_lo;
            for k in k_lo..=k_hi {
                let cost = subcost(&e, i, k) + subcost(&e, k + 1, j + 1);
                if cost < best {
                    best = cost;
                    best_k = k;
                }
            }
            e.set(i, j, best + p.range_mass(i, j));
            opt.set(i, j, best_k as u32);
        }
    }
    e.get(0, n - 1)
}
