//! Helpers shared by the integration tests.
#![allow(dead_code)]

use hivecomb::hive::{has_lattice_hive, BoundaryTriple};
use rand::seq::SliceRandom;
use rand::Rng;

/// A strictly decreasing integer vector of length `n` with entries in
/// `[0, max]`.
pub fn regular_weight<R: Rng>(rng: &mut R, n: usize, max: i64) -> Vec<i64> {
    let mut pool: Vec<i64> = (0..=max).collect();
    pool.shuffle(rng);
    let mut v = pool[..n].to_vec();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// A random regular integral triple with a lattice hive; `λ, μ` have entries
/// in `[0, max]`.
pub fn random_regular_triple<R: Rng>(rng: &mut R, n: usize, max: i64) -> BoundaryTriple {
    loop {
        let l = regular_weight(rng, n, max);
        let m = regular_weight(rng, n, max);
        let total: i64 = l.iter().sum::<i64>() + m.iter().sum::<i64>();
        // σ strictly decreasing in [λₙ + μₙ, λ₁ + μ₁] with |σ| = total.
        let (lo, hi) = (l[n - 1] + m[n - 1], l[0] + m[0]);
        if hi - lo + 1 < n as i64 {
            continue;
        }
        let mut sigma = regular_weight(rng, n, hi - lo);
        for x in sigma.iter_mut() {
            *x += lo;
        }
        if sigma.iter().sum::<i64>() != total {
            // Shift the middle entries towards the target where possible.
            let mut diff = total - sigma.iter().sum::<i64>();
            for i in 0..n {
                let idx = if diff > 0 { i } else { n - 1 - i };
                while diff != 0 {
                    let cand = sigma[idx] + diff.signum();
                    let ok_hi = idx == 0 || cand < sigma[idx - 1];
                    let ok_lo = idx == n - 1 || cand > sigma[idx + 1];
                    if cand < lo || cand > hi || !ok_hi || !ok_lo {
                        break;
                    }
                    sigma[idx] = cand;
                    diff -= diff.signum();
                }
            }
            if diff != 0 {
                continue;
            }
        }
        let nu: Vec<i64> = sigma.iter().rev().map(|x| -x).collect();
        let t = BoundaryTriple::from_ints(&l, &m, &nu).unwrap();
        if has_lattice_hive(&t).unwrap() {
            return t;
        }
    }
}

/// A weakly decreasing integer vector of length `n` with entries in
/// `[0, max]`.
pub fn dominant_weight<R: Rng>(rng: &mut R, n: usize, max: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// A random dominant `ν` with `|λ| + |μ| + |ν| = 0` and `-ν` reversed
/// inside `[λₙ + μₙ, λ₁ + μ₁]`. Such a ν need not give a positive count.
pub fn compatible_nu<R: Rng>(rng: &mut R, l: &[i64], m: &[i64]) -> Vec<i64> {
    let n = l.len();
    let total: i64 = l.iter().chain(m).sum();
    let (lo, hi) = (l[n - 1] + m[n - 1], l[0] + m[0]);
    loop {
        let mut s: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        s.sort_by(|a, b| b.cmp(a));
        let mut diff = total - s.iter().sum::<i64>();
        let mut order: Vec<usize> = (0..n).collect();
        while diff != 0 {
            order.shuffle(rng);
            let step = diff.signum();
            let Some(&i) = order.iter().find(|&&i| {
                let c = s[i] + step;
                (lo..=hi).contains(&c) && (i == 0 || c <= s[i - 1]) && (i == n - 1 || c >= s[i + 1])
            }) else {
                break;
            };
            s[i] += step;
            diff -= step;
        }
        if diff == 0 {
            return s.iter().rev().map(|x| -x).collect();
        }
    }
}
