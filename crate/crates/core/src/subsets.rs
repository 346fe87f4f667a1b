use itertools::Itertools;

use crate::graph::VertexSet;

/// All `k`-subsets of `0..n` in lexicographic order of their sorted members.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    (0..n).combinations(k).map(VertexSet::from_iter)
}

/// Every subset of `pool`, by ascending size and then lexicographically.
pub fn subsets_by_size(pool: VertexSet) -> impl Iterator<Item = VertexSet> {
    let members = pool.to_vec();
    (0..=members.len()).flat_map(move |size| {
        members
            .clone()
            .into_iter()
            .combinations(size)
            .map(VertexSet::from_iter)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_in_lex_order() {
        let got: Vec<String> = k_subsets(4, 2).map(|s| s.to_string()).collect();
        assert_eq!(got, ["{0,1}", "{0,2}", "{0,3}", "{1,2}", "{1,3}", "{2,3}"]);
    }

    #[test]
    fn subsets_by_size_order() {
        let pool = VertexSet::from_iter([1, 3, 4]);
        let got: Vec<String> = subsets_by_size(pool).map(|s| s.to_string()).collect();
        assert_eq!(
            got,
            ["{}", "{1}", "{3}", "{4}", "{1,3}", "{1,4}", "{3,4}", "{1,3,4}"]
        );
    }
}
