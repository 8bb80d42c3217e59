//! Deterministic enumeration of small integer coefficient vectors, used by the
//! bilinear searches (Frobenius systems and Frobenius corings).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Coefficients range over `-bound..=bound`.
    pub bound: i64,
    /// Maximum number of deterministic candidates.
    pub cap: usize,
    /// Extra pseudo-random candidates tried after the deterministic sweep.
    pub random_tries: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { bound: 2, cap: 20_000, random_tries: 64, seed: 0 }
    }
}

/// Nonzero coefficients in the order `1, -1, 2, -2, ...`.
fn values(bound: i64) -> Vec<i64> {
    (1..=bound).flat_map(|v| [v, -v]).collect()
}

/// Coefficient vectors of length `len`: first by support size, then by the
/// support positions in lexicographic order, then by values. At most
/// `config.cap` deterministic vectors, followed by seeded random ones.
pub fn candidates(len: usize, config: &SweepConfig) -> Vec<Vec<i64>> {
    let vals = values(config.bound);
    let mut out = Vec::new();
    if len == 0 || vals.is_empty() {
        return out;
    }
    'outer: for size in 1..=len {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            let mut idx = vec![0usize; size];
            loop {
                let mut v = vec![0i64; len];
                for (p, &s) in support.iter().enumerate() {
                    v[s] = vals[idx[p]];
                }
                out.push(v);
                if out.len() >= config.cap {
                    break 'outer;
                }
                // odometer over value indices, last position fastest
                let mut p = size;
                loop {
                    if p == 0 {
                        break;
                    }
                    p -= 1;
                    idx[p] += 1;
                    if idx[p] < vals.len() {
                        break;
                    }
                    idx[p] = 0;
                    if p == 0 {
                        p = usize::MAX;
                        break;
                    }
                }
                if p == usize::MAX {
                    break;
                }
            }
            if !next_combination(&mut support, len) {
                break;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_tries {
        out.push((0..len).map(|_| rng.gen_range(-config.bound..=config.bound)).collect());
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_cap() {
        let cfg = SweepConfig { bound: 1, cap: 100, random_tries: 0, seed: 0 };
        let c = candidates(2, &cfg);
        assert_eq!(c, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1], vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]);
        let cfg = SweepConfig { bound: 2, cap: 5, random_tries: 3, seed: 7 };
        let c = candidates(4, &cfg);
        assert_eq!(c.len(), 8);
        assert_eq!(c, candidates(4, &cfg));
    }
}
