//! Clique counting by ordered extension, plus an exhaustive-subset
//! enumerator that serves as an independent oracle.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};

/// `(c_0, c_1, ..., c_ω)`: the number of cliques of each size, `c_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueCounts(Vec<BigUint>);

impl CliqueCounts {
    /// Builds counts from a raw sequence. Trailing zeros are trimmed and a
    /// missing `c_0` is treated as the empty clique.
    pub fn from_counts(mut counts: Vec<BigUint>) -> Self {
        while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        if counts.is_empty() {
            counts.push(BigUint::one());
        }
        CliqueCounts(counts)
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.0
    }

    /// `c_k`, zero beyond the clique number.
    pub fn get(&self, k: usize) -> BigUint {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn clique_number(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Total number of cliques of odd and of even size `k >= 1`.
    pub fn odd_even_totals(&self) -> (BigUint, BigUint) {
        let mut odd = BigUint::zero();
        let mut even = BigUint::zero();
        for (k, c) in self.0.iter().enumerate().skip(1) {
            if k % 2 == 1 {
                odd += c;
            } else {
                even += c;
            }
        }
        (odd, even)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for CliqueCounts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Counts cliques of every size.
///
/// Each clique is reached exactly once as an increasing vertex sequence: a
/// clique `v_1 < ... < v_k` is extended only by common neighbours greater
/// than `v_k`. Candidate sets are kept as bit masks.
pub fn count_cliques(g: &Graph) -> CliqueCounts {
    let n = g.n();
    let words = n.div_ceil(64).max(1);
    let mut later = vec![0u64; n * words];
    for (u, v) in g.edges() {
        later[u * words + v / 64] |= 1 << (v % 64);
    }
    let mut tally: Vec<u128> = vec![1];
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    extend(&later, words, &all, 1, &mut tally);
    CliqueCounts::from_counts(tally.into_iter().map(BigUint::from).collect())
}

fn extend(later: &[u64], words: usize, cand: &[u64], size: usize, tally: &mut Vec<u128>) {
    for (w, &word) in cand.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let v = w * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if tally.len() <= size {
                tally.push(0);
            }
            tally[size] += 1;
            let row = &later[v * words..(v + 1) * words];
            let next: Vec<u64> = cand.iter().zip(row).map(|(a, b)| a & b).collect();
            if next.iter().any(|&x| x != 0) {
                extend(later, words, &next, size + 1, tally);
            }
        }
    }
}

/// All `k`-subsets of the vertex set that are pairwise adjacent, found by
/// checking every subset. Output is in lexicographic order.
pub fn enumerate_cliques(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.n();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let complete = idx
            .iter()
            .enumerate()
            .all(|(i, &u)| idx[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if complete {
            out.push(VertexSet::new(idx.clone()));
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Clique counts assembled from [`enumerate_cliques`]; shares no code with
/// [`count_cliques`].
pub fn count_cliques_exhaustive(g: &Graph) -> CliqueCounts {
    let mut counts = Vec::new();
    for k in 0..=g.n() {
        let c = enumerate_cliques(g, k).len();
        if c == 0 {
            break;
        }
        counts.push(BigUint::from(c));
    }
    CliqueCounts::from_counts(counts)
}

/// Size of a largest clique; 0 for the graph with no vertices.
pub fn clique_number(g: &Graph) -> usize {
    count_cliques(g).clique_number()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::g1;

    fn counts(xs: &[u32]) -> CliqueCounts {
        CliqueCounts::from_counts(xs.iter().map(|&x| BigUint::from(x)).collect())
    }

    #[test]
    fn figure_graph_counts() {
        assert_eq!(count_cliques(&g1()), counts(&[1, 4, 4, 1]));
        assert_eq!(count_cliques(&Graph::complete(4)), counts(&[1, 4, 6, 4, 1]));
        assert_eq!(count_cliques(&Graph::cycle(5)), counts(&[1, 5, 5]));
        assert_eq!(count_cliques(&Graph::empty(0)), counts(&[1]));
    }

    #[test]
    fn enumeration() {
        let sets = |xs: &[&[usize]]| xs.iter().map(|s| VertexSet::new(s.to_vec())).collect::<Vec<_>>();
        assert_eq!(
            enumerate_cliques(&Graph::complete(3), 2),
            sets(&[&[0, 1], &[0, 2], &[1, 2]])
        );
        assert_eq!(enumerate_cliques(&g1(), 3), sets(&[&[0, 1, 2]]));
        assert!(enumerate_cliques(&Graph::cycle(5), 3).is_empty());
        assert_eq!(enumerate_cliques(&Graph::cycle(5), 0), sets(&[&[]]));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::complete(4)), 4);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&g1()), 3);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn wide_graph_crosses_word_boundary() {
        let c = count_cliques(&Graph::path(130));
        assert_eq!(c, counts(&[1, 130, 129]));
        let g = Graph::new(70, [(62, 63), (63, 64), (62, 64)]).unwrap();
        assert_eq!(count_cliques(&g), counts(&[1, 70, 3, 1]));
    }

    #[test]
    fn odd_even() {
        let (odd, even) = count_cliques(&Graph::octahedron()).odd_even_totals();
        assert_eq!((odd, even), (BigUint::from(14u32), BigUint::from(12u32)));
    }
}
