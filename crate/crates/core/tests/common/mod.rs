#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random array with values drawn from `levels` distinct integers, so that
/// ties are frequent.
pub fn tied_array(rng: &mut ChaCha8Rng, max_len: usize, levels: u32) -> Vec<f64> {
    let n = rng.random_range(1..=max_len);
    (0..n)
        .map(|_| f64::from(rng.random_range(0..levels)))
        .collect()
}

/// `g` random, `f = g - noise` with nonnegative noise (zero half the time).
pub fn dominated_pair(rng: &mut ChaCha8Rng, max_len: usize, levels: u32) -> (Vec<f64>, Vec<f64>) {
    let g = tied_array(rng, max_len, levels);
    let f = g
        .iter()
        .map(|&v| {
            if rng.random_bool(0.5) {
                v
            } else {
                v - f64::from(rng.random_range(0..levels))
            }
        })
        .collect();
    (f, g)
}

/// All permutations of `items`, in lexicographic order.
pub fn permutations(items: &[f64]) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    let mut current = items.to_vec();
    current.sort_by(|a, b| a.partial_cmp(b).unwrap());
    loop {
        out.push(current.clone());
        let Some(i) = (0..current.len().saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[i])
            .unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// Every sequence of length `len` over `alphabet`.
pub fn words(alphabet: &[f64], len: usize) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Calls `visit` on every sequence of length `len` over `alphabet`, without
/// materializing them all.
pub fn for_each_word(alphabet: &[f64], len: usize, mut visit: impl FnMut(&[f64])) {
    let mut digits = vec![0usize; len];
    let mut word = vec![alphabet[0]; len];
    loop {
        visit(&word);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                word[i] = alphabet[digits[i]];
                break;
            }
            digits[i] = 0;
            word[i] = alphabet[0];
            i += 1;
        }
    }
}

/// The local-graph construction for the image diagram, which is known to be
/// wrong: one vertex per minimum of `g`, and an edge between adjacent minima
/// weighted by the largest of `f` on the interval and the two endpoint values.
pub fn local_graph_diagram(f: &[f64], g: &[f64]) -> Vec<(f64, f64)> {
    use pl_persistence::image::FunctionPair;

    let pair = FunctionPair::new(f.to_vec(), g.to_vec()).unwrap();
    let minima: Vec<usize> = (0..g.len()).filter(|&i| pair.is_g_min(i)).collect();
    let mut edges: Vec<(f64, usize)> = minima
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let f_max = f[w[0]..=w[1]]
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max);
            (f_max.max(g[w[0]]).max(g[w[1]]), k)
        })
        .collect();
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Components are runs of consecutive vertices; track each run's minimum.
    let mut parent: Vec<usize> = (0..minima.len()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let key = |v: usize| (g[minima[v]], minima[v]);
    let mut out = Vec::new();
    for (weight, k) in edges {
        let a = find(&mut parent, k);
        let b = find(&mut parent, k + 1);
        let (elder, younger) = if key(a) < key(b) { (a, b) } else { (b, a) };
        parent[younger] = elder;
        let birth = g[minima[younger]];
        if weight > birth {
            out.push((birth, weight));
        }
    }
    let global = g.iter().copied().fold(f64::INFINITY, f64::min);
    out.push((global, f64::INFINITY));
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// `(birth, death)` values of a diagram, sorted.
pub fn value_pairs(d: &pl_persistence::Diagram) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = d
        .pairs()
        .iter()
        .map(|p| (p.birth_value, p.death_value))
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}
