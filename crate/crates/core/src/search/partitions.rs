use crate::coloring::{Color, Coloring};
use crate::hypergraph::HostGraph;
use crate::search::SearchError;

/// Bell(12) is about 4.2 million; anything larger is refused.
pub const MAX_PARTITION_EDGES: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionStats {
    pub visited: u64,
    /// `by_blocks[k]` counts partitions with exactly `k` blocks.
    pub by_blocks: Vec<u64>,
}

/// Bell numbers via the Bell triangle.
pub fn bell_number(n: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Visit every set partition of the host's edge set exactly once, as the
/// normalized coloring whose classes are the blocks, in lexicographic
/// restricted-growth-string order.
pub fn enumerate_color_partitions(
    host: &HostGraph,
    mut visitor: impl FnMut(&Coloring),
) -> Result<PartitionStats, SearchError> {
    let m = host.edge_count();
    if m > MAX_PARTITION_EDGES {
        return Err(SearchError::TooLarge { edges: m, max: MAX_PARTITION_EDGES });
    }
    let mut stats = PartitionStats { visited: 0, by_blocks: vec![0; m + 1] };
    // rgs[i] <= 1 + max(rgs[..i]); prefix_max[i] = max(rgs[..=i])
    let mut rgs: Vec<Color> = vec![0; m];
    let mut prefix_max: Vec<Color> = vec![0; m];
    loop {
        let blocks = prefix_max.last().map_or(0, |&x| x as usize + 1);
        stats.visited += 1;
        stats.by_blocks[blocks] += 1;
        visitor(&Coloring::from_normalized(host.clone(), rgs.clone()));
        // advance: rightmost position that can still grow
        let mut i = m;
        loop {
            if i <= 1 {
                return Ok(stats);
            }
            i -= 1;
            if rgs[i] <= prefix_max[i - 1] {
                break;
            }
        }
        rgs[i] += 1;
        prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
        for j in i + 1..m {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bell numbers from the recurrence B(n+1) = sum C(n,k) B(k).
    fn bell_recurrence(n: usize) -> u128 {
        let mut b = vec![1u128];
        for i in 0..n {
            let mut binom = 1u128;
            let mut s = 0u128;
            for k in 0..=i {
                s += binom * b[k];
                binom = binom * (i - k) as u128 / (k + 1) as u128;
            }
            b.push(s);
        }
        b[n]
    }

    #[test]
    fn bell_numbers_agree() {
        for n in 0..25 {
            assert_eq!(bell_number(n), bell_recurrence(n));
        }
        assert_eq!(bell_number(10), 115_975);
    }

    #[test]
    fn k4_has_fifteen_partitions_in_rgs_order() {
        let h = HostGraph::complete(4).unwrap();
        let mut seen = Vec::new();
        let stats = enumerate_color_partitions(&h, |c| seen.push(c.colors().to_vec())).unwrap();
        assert_eq!(stats.visited, 15);
        assert_eq!(stats.by_blocks, vec![0, 1, 7, 6, 1]);
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, seen);
    }

    #[test]
    fn k5_counts() {
        let h = HostGraph::complete(5).unwrap();
        let mut mono = 0;
        let stats = enumerate_color_partitions(&h, |c| {
            if c.palette_size() == 1 {
                mono += 1
            }
        })
        .unwrap();
        assert_eq!(stats.visited, 115_975);
        assert_eq!(mono, 1);
    }

    #[test]
    fn refuses_large_hosts() {
        let h = HostGraph::complete(6).unwrap();
        assert!(matches!(enumerate_color_partitions(&h, |_| {}), Err(SearchError::TooLarge { .. })));
    }
}
