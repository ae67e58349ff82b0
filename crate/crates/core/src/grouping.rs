//! Tolerance grouping of real values by sort-then-sweep.
//!
//! Values are sorted and a new group starts wherever the gap to the previous
//! value exceeds `eps`. Groups are therefore the connected runs of the sorted
//! order, which makes the result independent of input order.

/// Groups `(id, value)` pairs; groups come out in ascending value order and
/// members keep ascending id order.
pub fn group_scalars(items: &[(usize, f64)], eps: f64) -> Vec<Vec<usize>> {
    let mut sorted = items.to_vec();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for (id, value) in sorted {
        match groups.last_mut() {
            Some(g) if value - last <= eps => g.push(id),
            _ => groups.push(vec![id]),
        }
        last = value;
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Groups vectors that agree within `eps` in every coordinate. Vectors of
/// different length never share a group. The sweep is applied coordinate by
/// coordinate inside each block. Groups are ordered by their smallest index.
pub fn group_vectors(keys: &[Vec<f64>], eps: f64) -> Vec<Vec<usize>> {
    let mut by_len: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (idx, key) in keys.iter().enumerate() {
        by_len.entry(key.len()).or_default().push(idx);
    }
    let mut out = Vec::new();
    for (len, block) in by_len {
        split_block(keys, block, 0, len, eps, &mut out);
    }
    out.sort_by_key(|g| g[0]);
    out
}

fn split_block(
    keys: &[Vec<f64>],
    block: Vec<usize>,
    coord: usize,
    len: usize,
    eps: f64,
    out: &mut Vec<Vec<usize>>,
) {
    if block.len() == 1 || coord == len {
        let mut block = block;
        block.sort_unstable();
        out.push(block);
        return;
    }
    let items: Vec<(usize, f64)> = block.iter().map(|&i| (i, keys[i][coord])).collect();
    for sub in group_scalars(&items, eps) {
        split_block(keys, sub, coord + 1, len, eps, out);
    }
}

/// Ascending copy of `values`.
pub fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// Same length and every coordinate within `eps`.
pub fn approx_eq(a: &[f64], b: &[f64], eps: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= eps)
}
