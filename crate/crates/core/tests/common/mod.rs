//! Set-partition enumeration shared by the oracle and acceptance tests.
#![allow(dead_code)]

/// Calls `visit` with the block label of each element for every set
/// partition of `n` elements (restricted growth strings).
pub fn for_each_partition(n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(labels: &mut Vec<usize>, n: usize, blocks: usize, visit: &mut dyn FnMut(&[usize])) {
        if labels.len() == n {
            visit(labels);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(labels, n, blocks.max(b + 1), visit);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, visit);
}

pub fn block_count(labels: &[usize]) -> usize {
    labels.iter().max().map_or(0, |m| m + 1)
}

/// Partitions of {1..n} into k blocks.
pub fn count_partitions(n: usize, k: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n, &mut |labels| {
        if block_count(labels) == k {
            count += 1;
        }
    });
    count
}

/// Partitions of {1..n+r} into k+r blocks with the first r elements in
/// distinct blocks.
pub fn count_r_partitions(n: usize, k: usize, r: usize) -> i64 {
    let mut count = 0;
    for_each_partition(n + r, &mut |labels| {
        let distinct = (0..r).all(|i| labels[i] == i);
        if distinct && block_count(labels) == k + r {
            count += 1;
        }
    });
    count
}
